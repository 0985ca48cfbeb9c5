//! Exact linear algebra over the rationals and prime fields.

mod echelon;
mod field;
mod linmap;
mod sweedler;
mod vector;

pub use echelon::{image, is_bijective, is_injective, nullspace, rank, Echelon};
pub use field::{Field, FieldElem, Fp, Rational};
pub use linmap::{check_budget, LinMap};
pub use sweedler::{Expr, Leg};
pub use vector::SparseVec;
