//! Exact computations with finite-dimensional cocommutative Hopf algebras:
//! crossed modules, internal categories, crossed squares, 2-actions, double
//! split epimorphisms and cat² objects, with the functors relating them.

pub mod action;
pub mod catalog;
pub mod config;
pub mod error;
pub mod exactla;
pub mod hopfcore;
pub mod morphism;
pub mod report;
pub mod square;
pub mod xmod;

pub use config::{CheckMode, Config, Paranoia};
pub use error::Error;
pub use report::Report;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/hopf-algebras.md")]
    mod hopf_algebras {}
    #[doc = include_str!("../../../book/src/actions.md")]
    mod actions {}
    #[doc = include_str!("../../../book/src/crossed-modules.md")]
    mod crossed_modules {}
    #[doc = include_str!("../../../book/src/crossed-squares.md")]
    mod crossed_squares {}
    #[doc = include_str!("../../../book/src/group-squares.md")]
    mod group_squares {}
    #[doc = include_str!("../../../book/src/checking.md")]
    mod checking {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
