use std::collections::HashMap;

use super::field::{Field, FieldElem};
use super::linmap::{check_budget, LinMap};
use super::vector::SparseVec;
use crate::error::Error;

/// A subspace of `K^n` held as a reduced row echelon basis.
///
/// Every basis vector has coefficient 1 at its pivot and 0 at every other
/// pivot; vectors are sorted by pivot. Two subspaces are equal exactly when
/// their echelon bases are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    field: Field,
    ambient: usize,
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new(field: Field, ambient: usize) -> Echelon {
        Echelon { field, ambient, rows: Vec::new(), pivot_row: HashMap::new() }
    }

    pub fn span<'a>(field: Field, ambient: usize, vectors: impl IntoIterator<Item = &'a SparseVec>) -> Echelon {
        let mut e = Echelon::new(field, ambient);
        for v in vectors {
            e.push(v);
        }
        e.sort_rows();
        e
    }

    pub fn whole(field: Field, ambient: usize) -> Echelon {
        let basis: Vec<SparseVec> = (0..ambient).map(|i| SparseVec::basis(field, ambient, i)).collect();
        Echelon::span(field, ambient, &basis)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0).collect()
    }

    /// Subtracts the projection onto the pivots; zero exactly for members.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.ambient, "reducing a vector of the wrong dimension");
        let mut out = v.clone();
        for (i, c) in v.entries() {
            if let Some(&r) = self.pivot_row.get(i) {
                out = out.axpy(&-c, &self.rows[r]);
            }
        }
        out
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` lies outside.
    pub fn coords(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        let entries = v
            .entries()
            .iter()
            .filter_map(|(i, c)| self.pivot_row.get(i).map(|&r| (r, c.clone())))
            .collect();
        Some(SparseVec::from_entries(self.field, self.rank(), entries))
    }

    /// The ambient vector with the given coordinates.
    pub fn combine(&self, coords: &SparseVec) -> SparseVec {
        let mut out = SparseVec::zero(self.field, self.ambient);
        for (r, c) in coords.entries() {
            out = out.axpy(c, &self.rows[*r]);
        }
        out
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let grew = self.push(v);
        if grew {
            self.sort_rows();
        }
        grew
    }

    /// Adds a vector without restoring pivot order; call [`Echelon::sort_rows`] afterwards.
    fn push(&mut self, v: &SparseVec) -> bool {
        let w = self.reduce(v);
        let Some((pivot, lead)) = w.leading().cloned() else {
            return false;
        };
        let w = w.scale(&lead.inv());
        for row in &mut self.rows {
            let c = row.get(pivot);
            if !c.is_zero() {
                *row = row.axpy(&-c, &w);
            }
        }
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(w);
        true
    }

    fn sort_rows(&mut self) {
        self.rows.sort_by_key(|r| r.leading().expect("nonzero row").0);
        self.pivot_row = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| (row.leading().expect("nonzero row").0, r))
            .collect();
    }

    pub fn is_subspace_of(&self, other: &Echelon) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// The intersection with another subspace of the same ambient space.
    pub fn intersect(&self, other: &Echelon, budget: usize) -> Result<Echelon, Error> {
        assert_eq!(self.ambient, other.ambient, "intersecting subspaces of different spaces");
        let (u, v) = (self.clone(), other.clone());
        let residue = LinMap::from_fn_uncached(self.field, self.rank(), self.ambient, move |j| {
            v.reduce(&u.rows[j])
        });
        let kernel = nullspace(&residue, budget)?;
        let images: Vec<SparseVec> = kernel.iter().map(|c| self.combine(c)).collect();
        Ok(Echelon::span(self.field, self.ambient, &images))
    }
}

/// A basis of the kernel of `map`, in reduced row echelon form.
pub fn nullspace(map: &LinMap, budget: usize) -> Result<Vec<SparseVec>, Error> {
    let field = map.field();
    let (dom, cod) = (map.dom(), map.cod());
    let mut rows: Vec<Vec<(usize, FieldElem)>> = vec![Vec::new(); cod];
    let mut stored = 0usize;
    for j in 0..dom {
        let col = map.col(j);
        stored += col.nnz();
        check_budget(stored, budget)?;
        for (i, c) in col.entries() {
            rows[*i].push((j, c.clone()));
        }
    }
    let mut rowspace = Echelon::new(field, dom);
    for row in rows.into_iter().filter(|r| !r.is_empty()) {
        rowspace.push(&SparseVec::from_entries(field, dom, row));
        if rowspace.rank() == dom {
            break;
        }
    }
    rowspace.sort_rows();
    Ok(complement_basis(&rowspace))
}

/// The kernel basis read off from a reduced row space.
fn complement_basis(rowspace: &Echelon) -> Vec<SparseVec> {
    let field = rowspace.field;
    let dom = rowspace.ambient;
    let mut free: Vec<Vec<(usize, FieldElem)>> = vec![Vec::new(); dom];
    let pivots = rowspace.pivots();
    for (row, &p) in rowspace.rows.iter().zip(&pivots) {
        for (f, c) in row.entries() {
            if *f != p {
                free[*f].push((p, -c));
            }
        }
    }
    let mut is_pivot = vec![false; dom];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors: Vec<SparseVec> = (0..dom)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut entries = std::mem::take(&mut free[f]);
            entries.push((f, field.one()));
            SparseVec::from_entries(field, dom, entries)
        })
        .collect();
    Echelon::span(field, dom, &vectors).rows
}

/// The image of a map as an echelon subspace.
pub fn image(map: &LinMap) -> Echelon {
    let mut e = Echelon::new(map.field(), map.cod());
    for j in 0..map.dom() {
        e.push(&map.col(j));
    }
    e.sort_rows();
    e
}

pub fn rank(map: &LinMap) -> usize {
    image(map).rank()
}

pub fn is_injective(map: &LinMap) -> bool {
    rank(map) == map.dom()
}

pub fn is_bijective(map: &LinMap) -> bool {
    map.dom() == map.cod() && is_injective(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> FieldElem {
        Field::Rationals.from_i64(n)
    }

    #[test]
    fn nullspace_of_sum_functional() {
        let f = Field::Rationals;
        let map = LinMap::from_dense_rows(f, &[vec![q(1), q(1), q(1)]]);
        let k = nullspace(&map, 1000).unwrap();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0].to_dense(), vec![q(1), q(0), q(-1)]);
        assert_eq!(k[1].to_dense(), vec![q(0), q(1), q(-1)]);
    }

    #[test]
    fn intersection_of_planes() {
        let f = Field::Rationals;
        let u = Echelon::span(f, 3, &[SparseVec::basis(f, 3, 0), SparseVec::basis(f, 3, 1)]);
        let v = Echelon::span(
            f,
            3,
            &[SparseVec::basis(f, 3, 1).add(&SparseVec::basis(f, 3, 2)), SparseVec::basis(f, 3, 0)],
        );
        let w = u.intersect(&v, 1000).unwrap();
        assert_eq!(w.basis(), &[SparseVec::basis(f, 3, 0)]);
    }

    #[test]
    fn coordinates_recombine() {
        let f = Field::Rationals;
        let a = SparseVec::from_dense(f, &[q(2), q(1), q(0)]);
        let b = SparseVec::from_dense(f, &[q(0), q(3), q(1)]);
        let e = Echelon::span(f, 3, &[a.clone(), b.clone()]);
        let v = a.scale(&q(5)).sub(&b);
        let c = e.coords(&v).unwrap();
        assert_eq!(e.combine(&c), v);
        assert!(e.coords(&SparseVec::basis(f, 3, 2)).is_none());
    }
}
