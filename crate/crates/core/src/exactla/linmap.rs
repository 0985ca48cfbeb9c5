use std::borrow::Cow;
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::field::{Field, FieldElem};
use super::vector::SparseVec;
use crate::error::Error;

/// Domains larger than this are evaluated without a column cache.
const MEMO_LIMIT: usize = 1 << 22;

type ColumnFn = dyn Fn(usize) -> SparseVec + Send + Sync;

enum Body {
    Table(Vec<SparseVec>),
    Oracle { eval: Box<ColumnFn>, memo: Option<Vec<OnceLock<SparseVec>>> },
}

struct Inner {
    field: Field,
    dom: usize,
    cod: usize,
    body: Body,
}

/// A linear map `K^dom -> K^cod`, given by its images of basis vectors.
///
/// Cloning is cheap. Lazily evaluated maps cache each basis image the first
/// time it is requested; the cache is safe to fill from several threads.
#[derive(Clone)]
pub struct LinMap(Arc<Inner>);

impl LinMap {
    pub fn from_columns(field: Field, dom: usize, cod: usize, columns: Vec<SparseVec>) -> LinMap {
        assert_eq!(columns.len(), dom, "column count must equal the domain dimension");
        for c in &columns {
            assert_eq!(c.dim(), cod, "column length must equal the codomain dimension");
        }
        LinMap(Arc::new(Inner { field, dom, cod, body: Body::Table(columns) }))
    }

    /// A lazily evaluated map whose basis images are cached on first use.
    pub fn from_fn<F>(field: Field, dom: usize, cod: usize, eval: F) -> LinMap
    where
        F: Fn(usize) -> SparseVec + Send + Sync + 'static,
    {
        let memo = (dom <= MEMO_LIMIT).then(|| (0..dom).map(|_| OnceLock::new()).collect());
        LinMap(Arc::new(Inner { field, dom, cod, body: Body::Oracle { eval: Box::new(eval), memo } }))
    }

    /// A lazily evaluated map that recomputes basis images on every request.
    pub fn from_fn_uncached<F>(field: Field, dom: usize, cod: usize, eval: F) -> LinMap
    where
        F: Fn(usize) -> SparseVec + Send + Sync + 'static,
    {
        LinMap(Arc::new(Inner {
            field,
            dom,
            cod,
            body: Body::Oracle { eval: Box::new(eval), memo: None },
        }))
    }

    pub fn identity(field: Field, n: usize) -> LinMap {
        LinMap::from_columns(field, n, n, (0..n).map(|i| SparseVec::basis(field, n, i)).collect())
    }

    pub fn zero(field: Field, dom: usize, cod: usize) -> LinMap {
        LinMap::from_columns(field, dom, cod, vec![SparseVec::zero(field, cod); dom])
    }

    /// Builds a map from a dense row-major matrix.
    pub fn from_dense_rows(field: Field, rows: &[Vec<FieldElem>]) -> LinMap {
        let cod = rows.len();
        let dom = rows.first().map_or(0, Vec::len);
        let columns = (0..dom)
            .map(|j| {
                let entries = (0..cod).map(|i| (i, rows[i][j].clone())).collect();
                SparseVec::from_entries(field, cod, entries)
            })
            .collect();
        LinMap::from_columns(field, dom, cod, columns)
    }

    pub fn field(&self) -> Field {
        self.0.field
    }

    pub fn dom(&self) -> usize {
        self.0.dom
    }

    pub fn cod(&self) -> usize {
        self.0.cod
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self.0.body, Body::Table(_))
    }

    /// The image of the `j`-th basis vector.
    pub fn col(&self, j: usize) -> Cow<'_, SparseVec> {
        assert!(j < self.dom(), "column {j} out of range {}", self.dom());
        match &self.0.body {
            Body::Table(cols) => Cow::Borrowed(&cols[j]),
            Body::Oracle { eval, memo: Some(memo) } => Cow::Borrowed(memo[j].get_or_init(|| {
                let v = eval(j);
                debug_assert_eq!(v.dim(), self.cod());
                v
            })),
            Body::Oracle { eval, memo: None } => Cow::Owned(eval(j)),
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> FieldElem {
        self.col(col).get(row)
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        assert_eq!(v.dim(), self.dom(), "applying a map to a vector of the wrong dimension");
        if let [(j, c)] = v.entries() {
            return self.col(*j).scale(c);
        }
        let mut entries = Vec::new();
        for (j, c) in v.entries() {
            for (i, x) in self.col(*j).entries() {
                entries.push((*i, x * c));
            }
        }
        SparseVec::from_entries(self.field(), self.cod(), entries)
    }

    /// `self ∘ first`, evaluated lazily.
    pub fn compose(&self, first: &LinMap) -> LinMap {
        assert_eq!(first.cod(), self.dom(), "composing maps with mismatched dimensions");
        let (outer, inner) = (self.clone(), first.clone());
        LinMap::from_fn(self.field(), first.dom(), self.cod(), move |j| outer.apply(&inner.col(j)))
    }

    /// `a ⊗ b`, evaluated lazily on pure tensors with left-major indexing.
    pub fn tensor(a: &LinMap, b: &LinMap) -> LinMap {
        let (a, b) = (a.clone(), b.clone());
        let dim_b = b.dom();
        LinMap::from_fn_uncached(a.field(), a.dom() * b.dom(), a.cod() * b.cod(), move |j| {
            a.col(j / dim_b).kron(&b.col(j % dim_b))
        })
    }

    /// The flip `V ⊗ W -> W ⊗ V`.
    pub fn twist(field: Field, dim_v: usize, dim_w: usize) -> LinMap {
        let n = dim_v * dim_w;
        LinMap::from_fn_uncached(field, n, n, move |j| {
            let (v, w) = (j / dim_w, j % dim_w);
            SparseVec::basis(field, n, w * dim_v + v)
        })
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        self.combine(other, self.field().one())
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        self.combine(other, -self.field().one())
    }

    fn combine(&self, other: &LinMap, c: FieldElem) -> LinMap {
        assert_eq!((self.dom(), self.cod()), (other.dom(), other.cod()), "shape mismatch");
        let (a, b) = (self.clone(), other.clone());
        LinMap::from_fn(self.field(), self.dom(), self.cod(), move |j| a.col(j).axpy(&c, &b.col(j)))
    }

    pub fn scale(&self, c: &FieldElem) -> LinMap {
        let (a, c) = (self.clone(), c.clone());
        LinMap::from_fn(self.field(), self.dom(), self.cod(), move |j| a.col(j).scale(&c))
    }

    /// Evaluates every column into an explicit table, within an entry budget.
    pub fn materialize(&self, budget: usize) -> Result<LinMap, Error> {
        if self.is_materialized() {
            return Ok(self.clone());
        }
        let mut stored = 0usize;
        let mut columns = Vec::with_capacity(self.dom());
        for j in 0..self.dom() {
            let col = self.col(j).into_owned();
            stored += col.nnz();
            check_budget(stored, budget)?;
            columns.push(col);
        }
        Ok(LinMap::from_columns(self.field(), self.dom(), self.cod(), columns))
    }

    /// The first basis vector on which the two maps differ.
    pub fn first_difference(&self, other: &LinMap) -> Option<usize> {
        assert_eq!((self.dom(), self.cod()), (other.dom(), other.cod()), "shape mismatch");
        (0..self.dom()).find(|&j| self.col(j) != other.col(j))
    }

    pub fn same_as(&self, other: &LinMap) -> bool {
        self.dom() == other.dom() && self.cod() == other.cod() && self.first_difference(other).is_none()
    }
}

/// Fails when the number of stored matrix entries exceeds the budget.
pub fn check_budget(needed: usize, budget: usize) -> Result<(), Error> {
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap({} -> {} over {})", self.dom(), self.cod(), self.field())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_is_an_involution_on_squares() {
        let f = Field::Rationals;
        let t = LinMap::twist(f, 3, 3);
        assert!(t.compose(&t).same_as(&LinMap::identity(f, 9)));
    }

    #[test]
    fn twist_swaps_legs() {
        let f = Field::Rationals;
        let t = LinMap::twist(f, 2, 3);
        let x = SparseVec::basis(f, 2, 1).kron(&SparseVec::basis(f, 3, 2));
        let y = SparseVec::basis(f, 3, 2).kron(&SparseVec::basis(f, 2, 1));
        assert_eq!(t.apply(&x), y);
    }

    #[test]
    fn budget_rejects_large_materialization() {
        let f = Field::Rationals;
        let big = LinMap::tensor(&LinMap::identity(f, 100), &LinMap::identity(f, 100));
        assert!(big.materialize(10_000).is_ok());
        assert!(matches!(big.materialize(9_999), Err(Error::Budget { .. })));
    }
}
