//! Finite groups given by multiplication tables, with homomorphisms and actions.

use std::sync::Arc;

use crate::error::Error;

/// A finite group with elements `0..order` and an explicit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    labels: Arc<[String]>,
    table: Arc<[Vec<usize>]>,
    identity: usize,
    inverse: Arc<[usize]>,
}

impl FiniteGroup {
    /// Validates a multiplication table (`table[a][b] = a·b`).
    pub fn new(name: impl Into<String>, labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<FiniteGroup, Error> {
        let n = labels.len();
        let bad = |msg: String| Err(Error::Input(msg));
        if n == 0 {
            return bad("a group needs at least one element".into());
        }
        if table.len() != n || table.iter().any(|row| row.len() != n || row.iter().any(|&c| c >= n)) {
            return bad(format!("group table must be {n} x {n} with entries below {n}"));
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)) else {
            return bad("group table has no identity".into());
        };
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverse[a] = b,
                None => return bad(format!("element {} has no inverse", labels[a])),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return bad(format!(
                            "group table is not associative at ({}, {}, {})",
                            labels[a], labels[b], labels[c]
                        ));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            name: name.into(),
            labels: labels.into(),
            table: table.into(),
            identity,
            inverse: inverse.into(),
        })
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1);
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "g".to_string(),
                k => format!("g^{k}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::new(format!("C{n}"), labels, table).expect("cyclic table is a group")
    }

    /// The symmetric group on `n` points, listed in lexicographic order of
    /// permutations and labelled in cycle notation.
    pub fn symmetric(n: usize) -> FiniteGroup {
        let perms = permutations(n);
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| index(&(0..n).map(|i| p[q[i]]).collect())).collect())
            .collect();
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        FiniteGroup::new(format!("S{n}"), labels, table).expect("permutation table is a group")
    }

    /// The direct product, with element `(a, b)` at index `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n, m) = (self.order(), other.order());
        let mut labels = Vec::with_capacity(n * m);
        for a in 0..n {
            for b in 0..m {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m)).collect())
            .collect();
        FiniteGroup::new(format!("{}x{}", self.name, other.name), labels, table).expect("product of groups")
    }

    /// The subgroup on the given elements, with its inclusion.
    pub fn subgroup(&self, name: impl Into<String>, elements: &[usize]) -> Result<(FiniteGroup, GroupHom), Error> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos = |g: usize| elems.iter().position(|&h| h == g);
        let mut table = Vec::with_capacity(elems.len());
        for &a in &elems {
            let mut row = Vec::with_capacity(elems.len());
            for &b in &elems {
                match pos(self.mul(a, b)) {
                    Some(k) => row.push(k),
                    None => return Err(Error::Input("subset is not closed under multiplication".into())),
                }
            }
            table.push(row);
        }
        let labels = elems.iter().map(|&g| self.labels[g].clone()).collect();
        let sub = FiniteGroup::new(name, labels, table)?;
        let incl = GroupHom::new(&sub, self, elems)?;
        Ok((sub, incl))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `a b a⁻¹`.
    pub fn conj(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// `a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FiniteGroup {
        self.name = name.into();
        self
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in permutations(n - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        out.push('(');
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            out.push_str(&(i + 1).to_string());
            i = p[i];
        }
        out.push(')');
    }
    if out.is_empty() {
        "e".to_string()
    } else {
        out
    }
}

/// A group homomorphism given by its table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub dom: FiniteGroup,
    pub cod: FiniteGroup,
    pub map: Vec<usize>,
}

impl GroupHom {
    pub fn new(dom: &FiniteGroup, cod: &FiniteGroup, map: Vec<usize>) -> Result<GroupHom, Error> {
        let hom = GroupHom::unchecked(dom, cod, map)?;
        for a in dom.elements() {
            for b in dom.elements() {
                if hom.map[dom.mul(a, b)] != cod.mul(hom.map[a], hom.map[b]) {
                    return Err(Error::Input(format!(
                        "map {} -> {} is not multiplicative at ({}, {})",
                        dom.name(),
                        cod.name(),
                        dom.labels()[a],
                        dom.labels()[b]
                    )));
                }
            }
        }
        Ok(hom)
    }

    /// Shape checks only; multiplicativity is left to the caller.
    pub fn unchecked(dom: &FiniteGroup, cod: &FiniteGroup, map: Vec<usize>) -> Result<GroupHom, Error> {
        if map.len() != dom.order() || map.iter().any(|&x| x >= cod.order()) {
            return Err(Error::Input(format!("map {} -> {} has the wrong shape", dom.name(), cod.name())));
        }
        Ok(GroupHom { dom: dom.clone(), cod: cod.clone(), map })
    }

    pub fn identity(g: &FiniteGroup) -> GroupHom {
        GroupHom { dom: g.clone(), cod: g.clone(), map: g.elements().collect() }
    }

    pub fn trivial(dom: &FiniteGroup, cod: &FiniteGroup) -> GroupHom {
        GroupHom { dom: dom.clone(), cod: cod.clone(), map: vec![cod.identity(); dom.order()] }
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn compose(&self, first: &GroupHom) -> GroupHom {
        GroupHom {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        }
    }
}

/// A left action of one group on another, by automorphisms once validated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    pub acting: FiniteGroup,
    pub acted: FiniteGroup,
    /// `table[g][x] = g ▷ x`.
    pub table: Vec<Vec<usize>>,
}

impl GroupAction {
    pub fn new(acting: &FiniteGroup, acted: &FiniteGroup, table: Vec<Vec<usize>>) -> Result<GroupAction, Error> {
        let act = GroupAction::unchecked(acting, acted, table)?;
        if let Some(why) = act.violation() {
            return Err(Error::Input(why));
        }
        Ok(act)
    }

    pub fn unchecked(acting: &FiniteGroup, acted: &FiniteGroup, table: Vec<Vec<usize>>) -> Result<GroupAction, Error> {
        if table.len() != acting.order()
            || table.iter().any(|row| row.len() != acted.order() || row.iter().any(|&y| y >= acted.order()))
        {
            return Err(Error::Input(format!(
                "action of {} on {} has the wrong shape",
                acting.name(),
                acted.name()
            )));
        }
        Ok(GroupAction { acting: acting.clone(), acted: acted.clone(), table })
    }

    /// The first failure of the action-by-automorphisms laws, if any.
    pub fn violation(&self) -> Option<String> {
        let (g, x) = (&self.acting, &self.acted);
        for a in x.elements() {
            if self.act(g.identity(), a) != a {
                return Some(format!("identity acts nontrivially on {}", x.labels()[a]));
            }
        }
        for p in g.elements() {
            for q in g.elements() {
                for a in x.elements() {
                    if self.act(g.mul(p, q), a) != self.act(p, self.act(q, a)) {
                        return Some(format!("action is not compatible with products at {}", x.labels()[a]));
                    }
                }
            }
            for a in x.elements() {
                for b in x.elements() {
                    if self.act(p, x.mul(a, b)) != x.mul(self.act(p, a), self.act(p, b)) {
                        return Some(format!("{} does not act by automorphisms", g.labels()[p]));
                    }
                }
            }
        }
        None
    }

    pub fn trivial(acting: &FiniteGroup, acted: &FiniteGroup) -> GroupAction {
        GroupAction {
            acting: acting.clone(),
            acted: acted.clone(),
            table: vec![acted.elements().collect(); acting.order()],
        }
    }

    /// Conjugation of `acting` on a subgroup, both sitting inside a common group.
    pub fn conjugation(acting: &GroupHom, acted: &GroupHom) -> Result<GroupAction, Error> {
        let ambient = &acting.cod;
        let mut table = Vec::with_capacity(acting.dom.order());
        for p in acting.dom.elements() {
            let mut row = Vec::with_capacity(acted.dom.order());
            for x in acted.dom.elements() {
                let y = ambient.conj(acting.apply(p), acted.apply(x));
                match acted.map.iter().position(|&z| z == y) {
                    Some(k) => row.push(k),
                    None => return Err(Error::Input("subgroup is not normalized by the acting group".into())),
                }
            }
            table.push(row);
        }
        GroupAction::new(&acting.dom, &acted.dom, table)
    }

    /// The action pulled back along a homomorphism into the acting group.
    pub fn through(&self, hom: &GroupHom) -> GroupAction {
        GroupAction {
            acting: hom.dom.clone(),
            acted: self.acted.clone(),
            table: hom.map.iter().map(|&p| self.table[p].clone()).collect(),
        }
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.table[g][x]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_has_identity_first_and_is_nonabelian() {
        let s3 = FiniteGroup::symmetric(3);
        assert_eq!(s3.order(), 6);
        assert_eq!(s3.identity(), 0);
        assert_eq!(s3.labels()[0], "e");
        assert!(!s3.is_abelian());
    }

    #[test]
    fn klein_four_is_abelian_with_four_involutions() {
        let c2 = FiniteGroup::cyclic(2);
        let v4 = c2.product(&c2);
        assert!(v4.is_abelian());
        assert!(v4.elements().all(|a| v4.mul(a, a) == v4.identity()));
    }

    #[test]
    fn rejects_non_closed_subsets() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(s3.subgroup("bad", &[0, 1, 2]).is_err());
    }
}
