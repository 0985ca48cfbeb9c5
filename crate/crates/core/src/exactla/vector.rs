use std::fmt;

use super::field::{Field, FieldElem};

/// A sparse vector: sorted `(index, coefficient)` pairs with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec {
    dim: usize,
    field: Field,
    entries: Vec<(usize, FieldElem)>,
}

impl SparseVec {
    pub fn zero(field: Field, dim: usize) -> SparseVec {
        SparseVec { dim, field, entries: Vec::new() }
    }

    /// The standard basis vector `e_index`.
    pub fn basis(field: Field, dim: usize, index: usize) -> SparseVec {
        assert!(index < dim, "basis index {index} out of range {dim}");
        SparseVec { dim, field, entries: vec![(index, field.one())] }
    }

    /// Builds a vector from unsorted entries, summing duplicates.
    pub fn from_entries(field: Field, dim: usize, mut entries: Vec<(usize, FieldElem)>) -> SparseVec {
        entries.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, FieldElem)> = Vec::with_capacity(entries.len());
        for (i, c) in entries {
            assert!(i < dim, "index {i} out of range {dim}");
            match out.last_mut() {
                Some((j, acc)) if *j == i => *acc += &c,
                _ => out.push((i, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        SparseVec { dim, field, entries: out }
    }

    pub fn from_dense(field: Field, values: &[FieldElem]) -> SparseVec {
        let entries = values
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i, c.clone()))
            .collect();
        SparseVec { dim: values.len(), field, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entries(&self) -> &[(usize, FieldElem)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, index: usize) -> FieldElem {
        match self.entries.binary_search_by_key(&index, |(i, _)| *i) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => self.field.zero(),
        }
    }

    /// The lowest index with a nonzero coefficient.
    pub fn leading(&self) -> Option<&(usize, FieldElem)> {
        self.entries.first()
    }

    pub fn to_dense(&self) -> Vec<FieldElem> {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, c) in &self.entries {
            out[*i] = c.clone();
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.field, self.dim);
        }
        if c.is_one() {
            return self.clone();
        }
        let entries = self.entries.iter().map(|(i, x)| (*i, x * c)).collect();
        SparseVec { dim: self.dim, field: self.field, entries }
    }

    /// Returns `self + c * other`.
    pub fn axpy(&self, c: &FieldElem, other: &SparseVec) -> SparseVec {
        assert_eq!(self.dim, other.dim, "dimension mismatch in vector sum");
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { dim: self.dim, field: self.field, entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&self.field.one(), other)
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.axpy(&-self.field.one(), other)
    }

    /// The Kronecker product; index `(i, j)` maps to `i * other.dim + j`.
    pub fn kron(&self, other: &SparseVec) -> SparseVec {
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, x) in &self.entries {
            for (j, y) in &other.entries {
                entries.push((i * other.dim + j, x * y));
            }
        }
        SparseVec { dim: self.dim * other.dim, field: self.field, entries }
    }

    /// Renders the vector with the given basis labels, e.g. `2*g + -1*e`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.entries
            .iter()
            .map(|(i, c)| {
                let label = labels.get(*i).cloned().unwrap_or_else(|| format!("#{i}"));
                if c.is_one() {
                    label
                } else {
                    format!("{c}*{label}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(i, c)| format!("{c}*e{i}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicates_merge_and_cancel() {
        let f = Field::Rationals;
        let v = SparseVec::from_entries(f, 4, vec![(2, f.one()), (0, f.one()), (2, -f.one())]);
        assert_eq!(v.entries(), &[(0, f.one())]);
    }

    #[test]
    fn kron_uses_left_major_indexing() {
        let f = Field::Rationals;
        let a = SparseVec::basis(f, 2, 1);
        let b = SparseVec::basis(f, 3, 2);
        assert_eq!(a.kron(&b), SparseVec::basis(f, 6, 5));
    }
}
