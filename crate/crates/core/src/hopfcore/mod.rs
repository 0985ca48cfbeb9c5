//! Finite-dimensional Hopf algebras given by structure maps on a labelled basis.

mod check;
mod expr;
mod group;

use std::sync::Arc;

pub use check::check_hopf;
pub use expr::HopfExpr;
pub use group::{FiniteGroup, GroupAction, GroupHom};

use crate::error::Error;
use crate::exactla::{nullspace, Echelon, Field, FieldElem, LinMap, SparseVec};

/// A finite-dimensional Hopf algebra.
///
/// The multiplication is a map `H ⊗ H -> H` and the comultiplication a map
/// `H -> H ⊗ H`, both with left-major tensor indexing. Basis elements may be
/// flagged as group-like.
#[derive(Clone, Debug)]
pub struct FinHopf {
    name: Arc<str>,
    field: Field,
    labels: Arc<[String]>,
    mult: LinMap,
    unit: SparseVec,
    comult: LinMap,
    counit: LinMap,
    antipode: LinMap,
    grouplike: Option<Arc<[bool]>>,
}

/// The structure maps of a Hopf algebra, before shape validation.
#[derive(Clone, Debug)]
pub struct HopfParts {
    pub name: String,
    pub field: Field,
    pub labels: Vec<String>,
    pub mult: LinMap,
    pub unit: SparseVec,
    pub comult: LinMap,
    pub counit: LinMap,
    pub antipode: LinMap,
    pub grouplike: Option<Vec<bool>>,
}

impl FinHopf {
    /// Assembles a Hopf algebra after checking that every map has the right shape.
    ///
    /// The axioms themselves are checked by [`check_hopf`].
    pub fn new(parts: HopfParts) -> Result<FinHopf, Error> {
        let n = parts.labels.len();
        let f = parts.field;
        let shape = |what: &str, map: &LinMap, dom: usize, cod: usize| {
            if map.dom() != dom || map.cod() != cod || map.field() != f {
                Err(Error::Input(format!(
                    "{what} of {} must be a {dom} -> {cod} map over {f}",
                    parts.name
                )))
            } else {
                Ok(())
            }
        };
        shape("multiplication", &parts.mult, n * n, n)?;
        shape("comultiplication", &parts.comult, n, n * n)?;
        shape("counit", &parts.counit, n, 1)?;
        shape("antipode", &parts.antipode, n, n)?;
        if parts.unit.dim() != n || parts.unit.field() != f {
            return Err(Error::Input(format!("unit of {} has the wrong shape", parts.name)));
        }
        if let Some(flags) = &parts.grouplike {
            if flags.len() != n {
                return Err(Error::Input(format!("group-like flags of {} have the wrong length", parts.name)));
            }
        }
        Ok(FinHopf {
            name: parts.name.into(),
            field: f,
            labels: parts.labels.into(),
            mult: parts.mult,
            unit: parts.unit,
            comult: parts.comult,
            counit: parts.counit,
            antipode: parts.antipode,
            grouplike: parts.grouplike.map(Into::into),
        })
    }

    pub fn parts(&self) -> HopfParts {
        HopfParts {
            name: self.name.to_string(),
            field: self.field,
            labels: self.labels.to_vec(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            grouplike: self.grouplike.as_ref().map(|g| g.to_vec()),
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> FinHopf {
        self.name = name.into().into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult(&self) -> &LinMap {
        &self.mult
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn comult(&self) -> &LinMap {
        &self.comult
    }

    pub fn counit(&self) -> &LinMap {
        &self.counit
    }

    pub fn antipode(&self) -> &LinMap {
        &self.antipode
    }

    pub fn grouplike_flags(&self) -> Option<&[bool]> {
        self.grouplike.as_deref()
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(self.field, self.dim(), i)
    }

    pub fn one(&self) -> SparseVec {
        self.unit.clone()
    }

    pub fn zero(&self) -> SparseVec {
        SparseVec::zero(self.field, self.dim())
    }

    /// Labels of basis tensors `a ⊗ b`, left-major.
    pub fn tensor_labels(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.dim() * self.dim());
        for a in self.labels.iter() {
            for b in self.labels.iter() {
                out.push(format!("{a}⊗{b}"));
            }
        }
        out
    }

    pub fn mul(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut entries = Vec::new();
        for (i, x) in a.entries() {
            for (j, y) in b.entries() {
                let xy = x * y;
                for (k, z) in self.mult.col(i * n + j).entries() {
                    entries.push((*k, z * &xy));
                }
            }
        }
        SparseVec::from_entries(self.field, n, entries)
    }

    /// The product of a list of elements, left to right.
    pub fn product(&self, factors: &[&SparseVec]) -> SparseVec {
        factors.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    /// The commutator `ab - ba`.
    pub fn bracket(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    pub fn delta(&self, a: &SparseVec) -> SparseVec {
        self.comult.apply(a)
    }

    pub fn epsilon(&self, a: &SparseVec) -> FieldElem {
        self.counit.apply(a).get(0)
    }

    pub fn s(&self, a: &SparseVec) -> SparseVec {
        self.antipode.apply(a)
    }

    /// Multiplication in `H ⊗ H`: `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul_tensor(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let n = self.dim();
        let mut entries = Vec::new();
        for (p, u) in x.entries() {
            for (q, v) in y.entries() {
                let left = self.mult.col((p / n) * n + q / n);
                let right = self.mult.col((p % n) * n + q % n);
                let uv = u * v;
                for (i, a) in left.entries() {
                    for (j, b) in right.entries() {
                        entries.push((i * n + j, &(a * b) * &uv));
                    }
                }
            }
        }
        SparseVec::from_entries(self.field, n * n, entries)
    }

    /// The basis indices flagged (or detected) as group-like.
    pub fn grouplikes(&self) -> Vec<usize> {
        match &self.grouplike {
            Some(flags) => (0..self.dim()).filter(|&i| flags[i]).collect(),
            None => (0..self.dim()).filter(|&i| self.is_grouplike(&self.basis(i))).collect(),
        }
    }

    /// `Δ(g) = g ⊗ g` and `ε(g) = 1`.
    pub fn is_grouplike(&self, g: &SparseVec) -> bool {
        self.delta(g) == g.kron(g) && self.epsilon(g).is_one()
    }

    /// A reduced echelon basis of the primitive elements, `Δx = x ⊗ 1 + 1 ⊗ x`.
    pub fn primitives(&self, budget: usize) -> Result<Echelon, Error> {
        let h = self.clone();
        let n = self.dim();
        let defect = LinMap::from_fn_uncached(self.field, n, n * n, move |j| {
            let x = h.basis(j);
            h.delta(&x).sub(&x.kron(&h.unit)).sub(&h.unit.kron(&x))
        });
        let basis = nullspace(&defect, budget)?;
        let prim = Echelon::span(self.field, n, &basis);
        for a in prim.basis() {
            for b in prim.basis() {
                if !prim.contains(&self.bracket(a, b)) {
                    return Err(Error::precondition(format!(
                        "primitives of {} are not closed under the bracket",
                        self.name
                    )));
                }
            }
        }
        Ok(prim)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult.col(i * n + j) == self.mult.col(j * n + i)))
    }
}

/// The group algebra `K[G]` with `Δg = g ⊗ g`, `ε(g) = 1`, `S(g) = g⁻¹`.
///
/// ```
/// use hopf_crossed::hopfcore::{check_hopf, group_algebra, FiniteGroup};
/// use hopf_crossed::config::CheckMode;
/// use hopf_crossed::exactla::Field;
///
/// let h = group_algebra(&FiniteGroup::symmetric(3), Field::Rationals);
/// assert_eq!(h.dim(), 6);
/// assert!(check_hopf(&h, CheckMode::Full).passed());
/// ```
pub fn group_algebra(g: &FiniteGroup, field: Field) -> FinHopf {
    let n = g.order();
    let table = g.clone();
    let mult = LinMap::from_columns(
        field,
        n * n,
        n,
        (0..n * n).map(|j| SparseVec::basis(field, n, table.mul(j / n, j % n))).collect(),
    );
    let comult = LinMap::from_columns(
        field,
        n,
        n * n,
        (0..n).map(|i| SparseVec::basis(field, n * n, i * n + i)).collect(),
    );
    let counit = LinMap::from_columns(field, n, 1, vec![SparseVec::basis(field, 1, 0); n]);
    let antipode =
        LinMap::from_columns(field, n, n, (0..n).map(|i| SparseVec::basis(field, n, g.inv(i))).collect());
    FinHopf::new(HopfParts {
        name: format!("K[{}]", g.name()),
        field,
        labels: g.labels().to_vec(),
        mult,
        unit: SparseVec::basis(field, n, g.identity()),
        comult,
        counit,
        antipode,
        grouplike: Some(vec![true; n]),
    })
    .expect("group algebra shapes")
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn base_field(field: Field) -> FinHopf {
    group_algebra(&FiniteGroup::cyclic(1), field).with_name("K")
}

/// The tensor product Hopf algebra, with basis `a ⊗ b` at index `a * dim(right) + b`.
pub fn tensor_hopf(left: &FinHopf, right: &FinHopf) -> FinHopf {
    assert_eq!(left.field(), right.field(), "tensoring Hopf algebras over different fields");
    let field = left.field();
    let (a, b) = (left.dim(), right.dim());
    let n = a * b;
    let (l, r) = (left.clone(), right.clone());
    let mult = LinMap::from_fn(field, n * n, n, move |j| {
        let (x, y) = (j / n, j % n);
        l.mult.col((x / b) * a + y / b).kron(&r.mult.col((x % b) * b + y % b))
    });
    let (l, r) = (left.clone(), right.clone());
    let comult = LinMap::from_fn(field, n, n * n, move |j| {
        let (dl, dr) = (l.comult.col(j / b), r.comult.col(j % b));
        let mut entries = Vec::new();
        for (p, u) in dl.entries() {
            for (q, v) in dr.entries() {
                let idx = ((p / a) * b + q / b) * n + (p % a) * b + q % b;
                entries.push((idx, u * v));
            }
        }
        SparseVec::from_entries(field, n * n, entries)
    });
    let counit = LinMap::tensor(left.counit(), right.counit());
    let antipode = LinMap::tensor(left.antipode(), right.antipode());
    let mut labels = Vec::with_capacity(n);
    for x in left.labels() {
        for y in right.labels() {
            labels.push(format!("{x}⊗{y}"));
        }
    }
    let grouplike = match (left.grouplike_flags(), right.grouplike_flags()) {
        (Some(f), Some(g)) => Some((0..n).map(|j| f[j / b] && g[j % b]).collect()),
        _ => None,
    };
    FinHopf::new(HopfParts {
        name: format!("{}⊗{}", left.name(), right.name()),
        field,
        labels,
        mult,
        unit: left.unit().kron(right.unit()),
        comult,
        counit,
        antipode,
        grouplike,
    })
    .expect("tensor product shapes")
}
