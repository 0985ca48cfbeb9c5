//! Crossed squares of groups, their linearization, and the group-like and
//! primitive parts of a Hopf crossed square.

use crate::action::HopfAction;
use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{Echelon, Field, LinMap, SparseVec};
use crate::hopfcore::{group_algebra, FinHopf, FiniteGroup, GroupAction, GroupHom};
use crate::morphism::HopfMorphism;
use crate::report::Report;

use super::crossed_square::CrossedSquare;

/// A crossed square of groups, laid out like [`CrossedSquare`]: `top : L -> M`,
/// `left : L -> N`, `right : M -> P`, `bottom : N -> P`, with `P` acting on
/// the other corners and `pairing[m][n] = h(m, n) ∈ L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCrossedSquare {
    pub top: GroupHom,
    pub left: GroupHom,
    pub right: GroupHom,
    pub bottom: GroupHom,
    pub base_on_apex: GroupAction,
    pub base_on_horizontal: GroupAction,
    pub base_on_vertical: GroupAction,
    pub pairing: Vec<Vec<usize>>,
}

impl GroupCrossedSquare {
    pub fn apex(&self) -> &FiniteGroup {
        &self.top.dom
    }

    pub fn horizontal(&self) -> &FiniteGroup {
        &self.top.cod
    }

    pub fn vertical(&self) -> &FiniteGroup {
        &self.left.cod
    }

    pub fn base(&self) -> &FiniteGroup {
        &self.right.cod
    }

    /// Two normal subgroups of `group` (given by their elements) with their
    /// intersection, conjugation actions and `h(m, n) = m n m⁻¹ n⁻¹`.
    pub fn normal_pair(group: &FiniteGroup, horizontal: &[usize], vertical: &[usize]) -> Result<GroupCrossedSquare, Error> {
        let meet: Vec<usize> = horizontal.iter().copied().filter(|x| vertical.contains(x)).collect();
        let name = |elems: &[usize]| {
            if elems.len() == 1 {
                "1".to_string()
            } else {
                let labels: Vec<&str> = elems.iter().map(|&x| group.labels()[x].as_str()).collect();
                format!("<{}>", labels.join(","))
            }
        };
        let (m, m_in) = group.subgroup(name(horizontal), horizontal)?;
        let (n, n_in) = group.subgroup(name(vertical), vertical)?;
        let (l, l_in) = group.subgroup(name(&meet), &meet)?;
        let id = GroupHom::identity(group);
        let position = |inside: &GroupHom, x: usize| inside.map.iter().position(|&y| y == x).expect("subgroup element");
        let top = GroupHom::new(&l, &m, l_in.map.iter().map(|&x| position(&m_in, x)).collect())?;
        let left = GroupHom::new(&l, &n, l_in.map.iter().map(|&x| position(&n_in, x)).collect())?;
        let pairing = m_in
            .map
            .iter()
            .map(|&x| n_in.map.iter().map(|&y| position(&l_in, group.commutator(x, y))).collect())
            .collect();
        Ok(GroupCrossedSquare {
            top,
            left,
            right: m_in.clone(),
            bottom: n_in.clone(),
            base_on_apex: GroupAction::conjugation(&id, &l_in)?,
            base_on_horizontal: GroupAction::conjugation(&id, &m_in)?,
            base_on_vertical: GroupAction::conjugation(&id, &n_in)?,
            pairing,
        })
    }
}

/// Checks both crossed module laws for `d : X -> B` with `B` acting on `X`:
/// `d(b ▷ x) = b d(x) b⁻¹` and `d(x) ▷ y = x y x⁻¹`.
pub fn check_group_xmod(d: &GroupHom, act: &GroupAction, mode: CheckMode) -> Report {
    let (x, b) = (&d.dom, &d.cod);
    let mut report = Report::new(format!("crossed module of groups {} -> {}", x.name(), b.name()), mode);
    report.record("action by automorphisms", act.violation().is_none(), act.violation());
    report.record("boundary is a homomorphism", is_homomorphism(d), None);
    report.axiom("CM1", mode, &[b.labels(), x.labels()], |t| {
        let lhs = d.apply(act.act(t[0], t[1]));
        let rhs = b.conj(t[0], d.apply(t[1]));
        differ_elems(b, lhs, rhs)
    });
    report.axiom("CM2", mode, &[x.labels(), x.labels()], |t| {
        let lhs = act.act(d.apply(t[0]), t[1]);
        differ_elems(x, lhs, x.conj(t[0], t[1]))
    });
    report.finish()
}

fn is_homomorphism(f: &GroupHom) -> bool {
    f.dom.elements().all(|a| f.dom.elements().all(|b| f.apply(f.dom.mul(a, b)) == f.cod.mul(f.apply(a), f.apply(b))))
}

fn differ_elems(g: &FiniteGroup, lhs: usize, rhs: usize) -> Option<(String, String)> {
    (lhs != rhs).then(|| (g.labels()[lhs].clone(), g.labels()[rhs].clone()))
}

/// The names of the crossed-square axioms checked by [`check_crossed_square`]
/// that correspond to each axiom of [`check_group_square`].
///
/// [`check_crossed_square`]: super::check_crossed_square
pub fn hopf_counterpart(group_axiom: &str) -> Option<&'static str> {
    Some(match group_axiom {
        "(i) right" => "CS1 right: ",
        "(i) bottom" => "CS1 bottom: ",
        "(i) diagonal" => "CS1 diagonal: ",
        "equivariance.1" => "CS2.1",
        "equivariance.2" => "CS2.2",
        "(ii).1" => "CS4.1",
        "(ii).2" => "CS4.2",
        "(iii).1" => "CS5.1",
        "(iii).2" => "CS5.2",
        "(iv).1" => "CS6.1",
        "(iv).2" => "CS6.2",
        "(v)" => "CS3",
        "square commutes" => "square commutes",
        _ => return None,
    })
}

/// Checks the axioms of a crossed square of groups by brute force.
pub fn check_group_square(g: &GroupCrossedSquare, mode: CheckMode) -> Report {
    let (l, m, n, p) = (g.apex(), g.horizontal(), g.vertical(), g.base());
    let mut report = Report::new(
        format!("crossed square of groups ({}, {}, {}, {})", l.name(), m.name(), n.name(), p.name()),
        mode,
    );
    for (name, f) in [("top", &g.top), ("left", &g.left), ("right", &g.right), ("bottom", &g.bottom)] {
        report.record(&format!("{name} is a homomorphism"), is_homomorphism(f), None);
    }
    report.record("square commutes", g.right.compose(&g.top) == g.bottom.compose(&g.left), None);
    let diagonal = g.right.compose(&g.top);
    for (name, d, act) in [
        ("(i) right", &g.right, &g.base_on_horizontal),
        ("(i) bottom", &g.bottom, &g.base_on_vertical),
        ("(i) diagonal", &diagonal, &g.base_on_apex),
    ] {
        let sub = check_group_xmod(d, act, mode);
        report.record(name, sub.passed(), Some(sub.summary()));
    }
    let h = |x: usize, y: usize| g.pairing[x][y];
    let on_l = |q: usize, x: usize| g.base_on_apex.act(q, x);
    let on_m = |q: usize, x: usize| g.base_on_horizontal.act(q, x);
    let on_n = |q: usize, x: usize| g.base_on_vertical.act(q, x);
    let (mu, nu) = (&g.right, &g.bottom);
    report.axiom("equivariance.1", mode, &[p.labels(), l.labels()], |t| {
        differ_elems(m, g.top.apply(on_l(t[0], t[1])), on_m(t[0], g.top.apply(t[1])))
    });
    report.axiom("equivariance.2", mode, &[p.labels(), l.labels()], |t| {
        differ_elems(n, g.left.apply(on_l(t[0], t[1])), on_n(t[0], g.left.apply(t[1])))
    });
    report.axiom("(ii).1", mode, &[m.labels(), n.labels()], |t| {
        let rhs = m.mul(t[0], on_m(nu.apply(t[1]), m.inv(t[0])));
        differ_elems(m, g.top.apply(h(t[0], t[1])), rhs)
    });
    report.axiom("(ii).2", mode, &[m.labels(), n.labels()], |t| {
        let rhs = n.mul(on_n(mu.apply(t[0]), t[1]), n.inv(t[1]));
        differ_elems(n, g.left.apply(h(t[0], t[1])), rhs)
    });
    report.axiom("(iii).1", mode, &[l.labels(), n.labels()], |t| {
        let rhs = l.mul(t[0], on_l(nu.apply(t[1]), l.inv(t[0])));
        differ_elems(l, h(g.top.apply(t[0]), t[1]), rhs)
    });
    report.axiom("(iii).2", mode, &[m.labels(), l.labels()], |t| {
        let rhs = l.mul(on_l(mu.apply(t[0]), t[1]), l.inv(t[1]));
        differ_elems(l, h(t[0], g.left.apply(t[1])), rhs)
    });
    report.axiom("(iv).1", mode, &[m.labels(), n.labels(), n.labels()], |t| {
        let rhs = l.mul(h(t[0], t[1]), on_l(nu.apply(t[1]), h(t[0], t[2])));
        differ_elems(l, h(t[0], n.mul(t[1], t[2])), rhs)
    });
    report.axiom("(iv).2", mode, &[m.labels(), m.labels(), n.labels()], |t| {
        let rhs = l.mul(on_l(mu.apply(t[0]), h(t[1], t[2])), h(t[0], t[2]));
        differ_elems(l, h(m.mul(t[0], t[1]), t[2]), rhs)
    });
    report.axiom("(v)", mode, &[p.labels(), m.labels(), n.labels()], |t| {
        differ_elems(l, on_l(t[0], h(t[1], t[2])), h(on_m(t[0], t[1]), on_n(t[0], t[2])))
    });
    report.finish()
}

/// The linearization of a crossed square of groups, without checks.
pub fn lift_group_square_unchecked(g: &GroupCrossedSquare, field: Field) -> Result<CrossedSquare, Error> {
    let (l, m, n, p) = (
        group_algebra(g.apex(), field),
        group_algebra(g.horizontal(), field),
        group_algebra(g.vertical(), field),
        group_algebra(g.base(), field),
    );
    let top = HopfMorphism::from_group_hom(&g.top, &l, &m)?;
    let left = HopfMorphism::from_group_hom(&g.left, &l, &n)?;
    let right = HopfMorphism::from_group_hom(&g.right, &m, &p)?;
    let bottom = HopfMorphism::from_group_hom(&g.bottom, &n, &p)?;
    let on_l = HopfAction::from_group_action(&g.base_on_apex, &p, &l)?;
    let on_m = HopfAction::from_group_action(&g.base_on_horizontal, &p, &m)?;
    let on_n = HopfAction::from_group_action(&g.base_on_vertical, &p, &n)?;
    let cols = g.pairing.iter().flatten().map(|&x| SparseVec::basis(field, l.dim(), x)).collect();
    let pairing = LinMap::from_columns(field, m.dim() * n.dim(), l.dim(), cols);
    CrossedSquare::unchecked(&top, &left, &right, &bottom, [&on_l, &on_m, &on_n], pairing)
}

/// The linearization of a crossed square of groups, which must pass
/// [`check_group_square`].
pub fn lift_group_square(g: &GroupCrossedSquare, field: Field, cfg: &Config) -> Result<CrossedSquare, Error> {
    check_group_square(g, CheckMode::Full).into_result()?;
    let sq = lift_group_square_unchecked(g, field)?;
    cfg.assert(sq.largest_dim(), |mode| super::check_crossed_square(&sq, mode))?;
    Ok(sq)
}

/// The group spanned by a Hopf algebra whose basis is entirely group-like.
fn group_of(h: &FinHopf) -> Result<FiniteGroup, Error> {
    let flags = h.grouplike_flags().unwrap_or(&[]);
    if flags.len() != h.dim() || !flags.iter().all(|&f| f) {
        return Err(Error::precondition(format!("the basis of {} is not flagged group-like", h.name())));
    }
    let mut table = Vec::with_capacity(h.dim());
    for a in 0..h.dim() {
        let row = (0..h.dim())
            .map(|b| single(&h.mult().col(a * h.dim() + b), &format!("a product in {}", h.name())))
            .collect::<Result<Vec<_>, _>>()?;
        table.push(row);
    }
    let name = h.name().strip_prefix("K[").and_then(|s| s.strip_suffix(']')).unwrap_or(h.name());
    FiniteGroup::new(name, h.labels().to_vec(), table)
}

fn single(v: &SparseVec, what: &str) -> Result<usize, Error> {
    match v.entries() {
        [(i, c)] if c.is_one() => Ok(*i),
        _ => Err(Error::precondition(format!("{what} leaves the group-like basis"))),
    }
}

/// The crossed square of groups carried by the group-like bases of a crossed
/// square whose corners are group algebras.
pub fn extract_group_square(sq: &CrossedSquare) -> Result<GroupCrossedSquare, Error> {
    let (l, m, n, p) = (group_of(sq.apex())?, group_of(sq.horizontal())?, group_of(sq.vertical())?, group_of(sq.base())?);
    let hom = |f: &HopfMorphism, dom: &FiniteGroup, cod: &FiniteGroup, what: &str| {
        let map = (0..dom.order()).map(|i| single(&f.map.col(i), what)).collect::<Result<Vec<_>, _>>()?;
        GroupHom::unchecked(dom, cod, map)
    };
    let act = |a: &HopfAction, acting: &FiniteGroup, acted: &FiniteGroup, what: &str| {
        let table = (0..acting.order())
            .map(|g| (0..acted.order()).map(|x| single(&a.act_basis(g, x), what)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        GroupAction::unchecked(acting, acted, table)
    };
    let pairing = (0..m.order())
        .map(|x| {
            (0..n.order())
                .map(|y| single(&sq.pairing.col(x * n.order() + y), "the pairing"))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GroupCrossedSquare {
        top: hom(&sq.top, &l, &m, "the top map")?,
        left: hom(&sq.left, &l, &n, "the left map")?,
        right: hom(&sq.right, &m, &p, "the right map")?,
        bottom: hom(&sq.bottom, &n, &p, "the bottom map")?,
        base_on_apex: act(&sq.base_on_apex, &p, &l, "the action on the apex")?,
        base_on_horizontal: act(&sq.base_on_horizontal, &p, &m, "the action on the horizontal corner")?,
        base_on_vertical: act(&sq.base_on_vertical, &p, &n, "the action on the vertical corner")?,
        pairing,
    })
}

/// The primitive parts of the four corners of a crossed square.
#[derive(Clone, Debug)]
pub struct LieShadow {
    pub apex: Echelon,
    pub horizontal: Echelon,
    pub vertical: Echelon,
    pub base: Echelon,
}

impl LieShadow {
    pub fn is_zero(&self) -> bool {
        [&self.apex, &self.horizontal, &self.vertical, &self.base].iter().all(|e| e.rank() == 0)
    }
}

/// Restricts a crossed square to primitive elements and checks that the
/// restriction is closed: brackets stay primitive, the maps, actions and
/// pairing send primitives to primitives.
pub fn primitive_shadow(sq: &CrossedSquare, cfg: &Config) -> Result<(LieShadow, Report), Error> {
    let shadow = LieShadow {
        apex: sq.apex().primitives(cfg.budget)?,
        horizontal: sq.horizontal().primitives(cfg.budget)?,
        vertical: sq.vertical().primitives(cfg.budget)?,
        base: sq.base().primitives(cfg.budget)?,
    };
    let mut report = Report::new(format!("primitive part of {}", sq.name()), CheckMode::Full);
    let corners = [
        ("apex", sq.apex(), &shadow.apex),
        ("horizontal", sq.horizontal(), &shadow.horizontal),
        ("vertical", sq.vertical(), &shadow.vertical),
        ("base", sq.base(), &shadow.base),
    ];
    for (name, h, prim) in corners {
        let closed = prim.basis().iter().all(|x| prim.basis().iter().all(|y| prim.contains(&h.bracket(x, y))));
        report.record(&format!("bracket closes on the {name} corner"), closed, Some(format!("dimension {}", prim.rank())));
    }
    let maps = [
        ("top", &sq.top, &shadow.apex, &shadow.horizontal),
        ("left", &sq.left, &shadow.apex, &shadow.vertical),
        ("right", &sq.right, &shadow.horizontal, &shadow.base),
        ("bottom", &sq.bottom, &shadow.vertical, &shadow.base),
    ];
    for (name, f, from, to) in maps {
        let ok = from.basis().iter().all(|x| to.contains(&f.apply(x)));
        report.record(&format!("{name} preserves primitives"), ok, None);
    }
    let actions = [
        ("apex", &sq.base_on_apex, &shadow.apex),
        ("horizontal", &sq.base_on_horizontal, &shadow.horizontal),
        ("vertical", &sq.base_on_vertical, &shadow.vertical),
    ];
    for (name, a, on) in actions {
        let ok = shadow.base.basis().iter().all(|q| on.basis().iter().all(|x| on.contains(&a.act(q, x))));
        report.record(&format!("base action on the {name} corner preserves primitives"), ok, None);
    }
    let pairing_ok = shadow.horizontal.basis().iter().all(|x| {
        shadow.vertical.basis().iter().all(|y| shadow.apex.contains(&sq.pairing.apply(&x.kron(y))))
    });
    report.record("pairing preserves primitives", pairing_ok, None);
    Ok((shadow, report.finish()))
}
