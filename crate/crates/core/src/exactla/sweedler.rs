//! A small evaluator for Sweedler-notation formulas.
//!
//! An [`Expr`] is a sparse element of a tensor product whose factors
//! ("legs") carry names. Formulas such as `x₁ k S(x₂)` are evaluated by
//! splitting a leg with a comultiplication, mapping legs, and merging pairs
//! of legs with a bilinear map:
//!
//! ```
//! use hopf_crossed::exactla::{Expr, Field, LinMap, SparseVec};
//!
//! let f = Field::Rationals;
//! // The flip on K^2 ⊗ K^3, written as a relabelling of legs.
//! let e = Expr::basis(f, "v", 2, 1).tensor(Expr::basis(f, "w", 3, 2));
//! let flipped = e.finish(&["w", "v"]);
//! let twist = LinMap::twist(f, 2, 3);
//! let x = SparseVec::basis(f, 2, 1).kron(&SparseVec::basis(f, 3, 2));
//! assert_eq!(flipped, twist.apply(&x));
//! ```

use smallvec::SmallVec;

use super::field::{Field, FieldElem};
use super::linmap::LinMap;
use super::vector::SparseVec;

/// A leg name.
pub type Leg = &'static str;

type Key = SmallVec<[u32; 8]>;

/// A sparse tensor with named legs.
#[derive(Clone, Debug)]
pub struct Expr {
    field: Field,
    legs: SmallVec<[(Leg, usize); 8]>,
    terms: Vec<(Key, FieldElem)>,
}

impl Expr {
    /// The scalar `1`, with no legs.
    pub fn one(field: Field) -> Expr {
        Expr { field, legs: SmallVec::new(), terms: vec![(Key::new(), field.one())] }
    }

    pub fn basis(field: Field, leg: Leg, dim: usize, index: usize) -> Expr {
        assert!(index < dim, "basis index out of range");
        let mut legs = SmallVec::new();
        legs.push((leg, dim));
        Expr { field, legs, terms: vec![(smallvec::smallvec![index as u32], field.one())] }
    }

    pub fn vector(leg: Leg, v: &SparseVec) -> Expr {
        let mut legs = SmallVec::new();
        legs.push((leg, v.dim()));
        let terms = v.entries().iter().map(|(i, c)| (smallvec::smallvec![*i as u32], c.clone())).collect();
        Expr { field: v.field(), legs, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn legs(&self) -> Vec<Leg> {
        self.legs.iter().map(|(l, _)| *l).collect()
    }

    fn pos(&self, leg: Leg) -> usize {
        self.legs
            .iter()
            .position(|(l, _)| *l == leg)
            .unwrap_or_else(|| panic!("no leg named {leg:?} among {:?}", self.legs()))
    }

    fn normalized(mut self) -> Expr {
        if self.terms.len() > 1 {
            self.terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
            let mut out: Vec<(Key, FieldElem)> = Vec::with_capacity(self.terms.len());
            for (k, c) in self.terms {
                match out.last_mut() {
                    Some((k2, acc)) if *k2 == k => *acc += &c,
                    _ => out.push((k, c)),
                }
            }
            self.terms = out;
        }
        self.terms.retain(|(_, c)| !c.is_zero());
        self
    }

    /// The tensor product with another expression on disjoint legs.
    pub fn tensor(self, other: Expr) -> Expr {
        for (l, _) in &other.legs {
            assert!(!self.legs.iter().any(|(m, _)| m == l), "leg {l:?} appears twice");
        }
        let mut legs = self.legs.clone();
        legs.extend(other.legs.iter().cloned());
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend(k2.iter().cloned());
                terms.push((k, c1 * c2));
            }
        }
        Expr { field: self.field, legs, terms }
    }

    pub fn scale(mut self, c: &FieldElem) -> Expr {
        for (_, x) in &mut self.terms {
            *x = &*x * c;
        }
        self.normalized()
    }

    pub fn add(mut self, other: Expr) -> Expr {
        assert_eq!(self.legs, other.legs, "adding expressions with different legs");
        self.terms.extend(other.terms);
        self.normalized()
    }

    pub fn rename(mut self, leg: Leg, to: Leg) -> Expr {
        let p = self.pos(leg);
        self.legs[p].0 = to;
        self
    }

    /// Replaces the value on `leg` by its image under `f`.
    pub fn apply(self, leg: Leg, f: &LinMap) -> Expr {
        self.apply_as(leg, f, leg)
    }

    /// Like [`Expr::apply`], renaming the leg.
    pub fn apply_as(self, leg: Leg, f: &LinMap, to: Leg) -> Expr {
        let p = self.pos(leg);
        assert_eq!(self.legs[p].1, f.dom(), "map domain does not match leg {leg:?}");
        let mut legs = self.legs.clone();
        legs[p] = (to, f.cod());
        let mut terms = Vec::with_capacity(self.terms.len());
        for (k, c) in &self.terms {
            for (i, x) in f.col(k[p] as usize).entries() {
                let mut k2 = k.clone();
                k2[p] = *i as u32;
                terms.push((k2, c * x));
            }
        }
        Expr { field: self.field, legs, terms }.normalized()
    }

    /// Applies a map into a two-fold tensor product, replacing `leg` by two legs.
    pub fn split(self, leg: Leg, f: &LinMap, first: (Leg, usize), second: (Leg, usize)) -> Expr {
        let p = self.pos(leg);
        assert_eq!(self.legs[p].1, f.dom(), "map domain does not match leg {leg:?}");
        assert_eq!(first.1 * second.1, f.cod(), "split dimensions do not match the map");
        let mut legs = self.legs.clone();
        legs[p] = first;
        legs.insert(p + 1, second);
        let mut terms = Vec::new();
        for (k, c) in &self.terms {
            for (i, x) in f.col(k[p] as usize).entries() {
                let mut k2 = k.clone();
                k2[p] = (i / second.1) as u32;
                k2.insert(p + 1, (i % second.1) as u32);
                terms.push((k2, c * x));
            }
        }
        Expr { field: self.field, legs, terms }.normalized()
    }

    /// Applies a bilinear map to the legs `left ⊗ right`; the result takes the
    /// place of `left` under the name `to`, and `right` disappears.
    pub fn merge(self, left: Leg, right: Leg, f: &LinMap, to: Leg) -> Expr {
        let (p, q) = (self.pos(left), self.pos(right));
        let (dl, dr) = (self.legs[p].1, self.legs[q].1);
        assert_eq!(dl * dr, f.dom(), "bilinear map does not match legs {left:?} and {right:?}");
        let mut legs = self.legs.clone();
        legs[p] = (to, f.cod());
        legs.remove(q);
        let mut terms = Vec::new();
        for (k, c) in &self.terms {
            let col = f.col(k[p] as usize * dr + k[q] as usize);
            for (i, x) in col.entries() {
                let mut k2 = k.clone();
                k2[p] = *i as u32;
                k2.remove(q);
                terms.push((k2, c * x));
            }
        }
        Expr { field: self.field, legs, terms }.normalized()
    }

    /// Applies a functional (a map with one-dimensional codomain) and drops the leg.
    pub fn contract(self, leg: Leg, f: &LinMap) -> Expr {
        let p = self.pos(leg);
        assert_eq!(f.cod(), 1, "contracting with a map that is not a functional");
        let mut legs = self.legs.clone();
        legs.remove(p);
        let mut terms = Vec::new();
        for (k, c) in &self.terms {
            let v = f.col(k[p] as usize);
            if let Some((_, x)) = v.leading() {
                let mut k2 = k.clone();
                k2.remove(p);
                terms.push((k2, c * x));
            }
        }
        Expr { field: self.field, legs, terms }.normalized()
    }

    /// Flattens into a vector, with legs in the given (left-major) order.
    pub fn finish(self, order: &[Leg]) -> SparseVec {
        assert_eq!(order.len(), self.legs.len(), "finish must list every leg");
        let positions: Vec<usize> = order.iter().map(|l| self.pos(l)).collect();
        let dims: Vec<usize> = positions.iter().map(|&p| self.legs[p].1).collect();
        let dim: usize = dims.iter().product();
        let entries = self
            .terms
            .into_iter()
            .map(|(k, c)| {
                let idx = positions.iter().zip(&dims).fold(0usize, |acc, (&p, &d)| acc * d + k[p] as usize);
                (idx, c)
            })
            .collect();
        SparseVec::from_entries(self.field, dim, entries)
    }

    /// The scalar value of an expression without legs.
    pub fn into_scalar(self) -> FieldElem {
        assert!(self.legs.is_empty(), "expression still has legs");
        self.terms.into_iter().next().map_or(self.field.zero(), |(_, c)| c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_matches_tensor_then_compose() {
        let f = Field::Rationals;
        // Addition of indices mod 3 as a bilinear map K^3 ⊗ K^3 -> K^3.
        let m = LinMap::from_fn(f, 9, 3, move |j| SparseVec::basis(f, 3, (j / 3 + j % 3) % 3));
        let e = Expr::basis(f, "a", 3, 2).tensor(Expr::basis(f, "b", 3, 2));
        assert_eq!(e.merge("a", "b", &m, "ab").finish(&["ab"]), SparseVec::basis(f, 3, 1));
    }

    #[test]
    fn split_then_finish_recovers_the_column() {
        let f = Field::Rationals;
        let d = LinMap::from_fn(f, 2, 4, move |j| {
            SparseVec::basis(f, 4, j * 2 + j).add(&SparseVec::basis(f, 4, 1))
        });
        let e = Expr::basis(f, "x", 2, 1).split("x", &d, ("x1", 2), ("x2", 2));
        assert_eq!(e.finish(&["x1", "x2"]), d.col(1).into_owned());
    }
}
