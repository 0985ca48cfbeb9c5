//! Standard crossed squares.

use crate::action::{conjugation_action, HopfAction};
use crate::config::Config;
use crate::error::Error;
use crate::exactla::{Field, LinMap};
use crate::hopfcore::{base_field, FinHopf};
use crate::morphism::{HopfMorphism, SubHopf};
use crate::xmod::CrossedModule;

use super::crossed_square::CrossedSquare;
use super::two_action::{commutator_pairing, counit_pairing};

/// The square with the ground field at every corner.
pub fn trivial(field: Field) -> CrossedSquare {
    let k = base_field(field);
    let id = HopfMorphism::identity(&k);
    let act = HopfAction::trivial(&k, &k);
    CrossedSquare::unchecked(&id, &id, &id, &id, [&act, &act, &act], counit_pairing(&k, &k, &k))
        .expect("trivial square shapes")
}

/// Two normal Hopf subalgebras of `ambient` with their intersection in the
/// corner, conjugation actions and the commutator pairing.
pub fn normal_pair(horizontal: &SubHopf, vertical: &SubHopf, cfg: &Config) -> Result<CrossedSquare, Error> {
    let ambient = horizontal.ambient().clone();
    for sub in [horizontal, vertical] {
        if !sub.is_normal() {
            return Err(Error::Precondition(format!("{} is not normal in {}", sub.name(), ambient.name())));
        }
    }
    let meet = horizontal.intersect(vertical, format!("{}∩{}", horizontal.name(), vertical.name()), cfg.budget)?;
    let (m, m_in) = horizontal.to_hopf();
    let (n, n_in) = vertical.to_hopf();
    let (l, l_in) = meet.to_hopf();
    let corner_map = |from: &FinHopf, into: &HopfMorphism, target: &SubHopf, to: &FinHopf| {
        let cols = (0..from.dim()).map(|i| target.coords(&into.image_of_basis(i))).collect::<Result<Vec<_>, _>>()?;
        HopfMorphism::new(from, to, LinMap::from_columns(ambient.field(), from.dim(), to.dim(), cols))
    };
    let top = corner_map(&l, &l_in, horizontal, &m)?;
    let left = corner_map(&l, &l_in, vertical, &n)?;
    let id = HopfMorphism::identity(&ambient);
    let commutator = commutator_pairing(&ambient, &m_in, &n_in);
    let mut cols = Vec::with_capacity(m.dim() * n.dim());
    for x in 0..m.dim() {
        for y in 0..n.dim() {
            cols.push(meet.coords(&commutator(x, y))?);
        }
    }
    let pairing = LinMap::from_columns(ambient.field(), m.dim() * n.dim(), l.dim(), cols);
    CrossedSquare::new(
        &top,
        &left,
        &m_in,
        &n_in,
        [
            &conjugation_action(&id, &meet, &l)?,
            &conjugation_action(&id, horizontal, &m)?,
            &conjugation_action(&id, vertical, &n)?,
        ],
        pairing,
        cfg,
    )
}

/// Every corner equal to `algebra`, identity edges, adjoint actions and
/// `h(a ⊗ a') = a₁ a'₁ S(a₂) S(a'₂)`.
pub fn unit(algebra: &FinHopf, cfg: &Config) -> Result<CrossedSquare, Error> {
    let whole = SubHopf::whole(algebra);
    normal_pair(&whole, &whole, cfg)
}

/// A commuting square of commutative Hopf algebras with trivial actions and
/// `h(m ⊗ n) = ε(m) ε(n) 1`.
pub fn commutative(
    top: &HopfMorphism,
    left: &HopfMorphism,
    right: &HopfMorphism,
    bottom: &HopfMorphism,
    cfg: &Config,
) -> Result<CrossedSquare, Error> {
    for f in [top, left, right, bottom] {
        for h in [&f.dom, &f.cod] {
            if !h.is_commutative() {
                return Err(Error::Precondition(format!("{} is not commutative", h.name())));
            }
        }
    }
    let base = &right.cod;
    let pairing = counit_pairing(&top.cod, &left.cod, &top.dom);
    CrossedSquare::new(
        top,
        left,
        right,
        bottom,
        [
            &HopfAction::trivial(base, &top.dom),
            &HopfAction::trivial(base, &top.cod),
            &HopfAction::trivial(base, &left.cod),
        ],
        pairing,
        cfg,
    )
}

/// `(X, X, X, B)` for a crossed module `d : X -> B`: identities into the
/// side corners, `d` out of them, and the commutator pairing on `X`.
pub fn from_crossed_module(cm: &CrossedModule, cfg: &Config) -> Result<CrossedSquare, Error> {
    let x = &cm.module;
    let id = HopfMorphism::identity(x);
    let commutator = commutator_pairing(x, &id, &id);
    let n = x.dim();
    let pairing = LinMap::from_fn(x.field(), n * n, n, move |j| commutator(j / n, j % n));
    let act = &cm.action;
    CrossedSquare::new(&id, &id, &cm.boundary, &cm.boundary, [act, act, act], pairing, cfg)
}

/// `(K, K, X, B)` for a crossed module `d : X -> B`: the unit maps out of the
/// ground field, `d` along the bottom, and `h = Id ⊗ ε`.
pub fn discrete(cm: &CrossedModule, cfg: &Config) -> Result<CrossedSquare, Error> {
    let k = base_field(cm.base.field());
    let id = HopfMorphism::identity(&k);
    let trivial = HopfAction::trivial(&cm.base, &k);
    CrossedSquare::new(
        &id,
        &HopfMorphism::unit_of(&cm.module),
        &HopfMorphism::unit_of(&cm.base),
        &cm.boundary,
        [&trivial, &trivial, &cm.action],
        counit_pairing(&k, &cm.module, &k),
        cfg,
    )
}

/// The finite-dimensional reading of the group-like/primitive square of a
/// commutative crossed module. With no primitives the enveloping corners
/// collapse to the ground field and the pairing is forced to be `Id ⊗ ε`, so
/// the result coincides with [`discrete`].
pub fn finite_shadow(cm: &CrossedModule, cfg: &Config) -> Result<CrossedSquare, Error> {
    for h in [&cm.module, &cm.base] {
        if !h.is_commutative() {
            return Err(Error::Precondition(format!("{} is not commutative", h.name())));
        }
        if h.grouplike_flags().is_none_or(|flags| !flags.iter().all(|&g| g)) {
            return Err(Error::Precondition(format!("{} is not spanned by group-like elements", h.name())));
        }
    }
    discrete(cm, cfg)
}
