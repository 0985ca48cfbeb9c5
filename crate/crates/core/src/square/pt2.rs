use crate::action::{check_action, conjugation_action, HopfAction, SmashProduct};
use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{is_injective, Expr, LinMap};
use crate::hopfcore::{FinHopf, HopfExpr};
use crate::morphism::{check_morphism, hker, HopfMorphism, SubHopf};
use crate::report::Report;

use super::two_action::{check_2action_morphism, commutator_pairing, swap_2action, CornerMaps, Hopf2Action};

/// A 2-fold split epimorphism: two retracts `first` and `second` of one
/// Hopf algebra whose idempotents `i ∘ s` commute.
#[derive(Clone, Debug)]
pub struct SplitEpi2 {
    pub total: FinHopf,
    pub first: FinHopf,
    pub second: FinHopf,
    pub first_inclusion: HopfMorphism,
    pub second_inclusion: HopfMorphism,
    pub first_retraction: HopfMorphism,
    pub second_retraction: HopfMorphism,
}

impl SplitEpi2 {
    pub fn new(
        first_inclusion: &HopfMorphism,
        first_retraction: &HopfMorphism,
        second_inclusion: &HopfMorphism,
        second_retraction: &HopfMorphism,
        cfg: &Config,
    ) -> Result<SplitEpi2, Error> {
        let s = SplitEpi2::unchecked(first_inclusion, first_retraction, second_inclusion, second_retraction)?;
        cfg.assert(s.total.dim(), |mode| check_split_epi2(&s, mode))?;
        Ok(s)
    }

    pub fn unchecked(
        first_inclusion: &HopfMorphism,
        first_retraction: &HopfMorphism,
        second_inclusion: &HopfMorphism,
        second_retraction: &HopfMorphism,
    ) -> Result<SplitEpi2, Error> {
        let total = first_retraction.dom.clone();
        let fits = first_inclusion.cod.dim() == total.dim()
            && second_inclusion.cod.dim() == total.dim()
            && second_retraction.dom.dim() == total.dim()
            && first_inclusion.dom.dim() == first_retraction.cod.dim()
            && second_inclusion.dom.dim() == second_retraction.cod.dim();
        if !fits {
            return Err(Error::Input("inclusions and retractions of a 2-fold split epimorphism do not fit".into()));
        }
        Ok(SplitEpi2 {
            total,
            first: first_retraction.cod.clone(),
            second: second_retraction.cod.clone(),
            first_inclusion: first_inclusion.clone(),
            second_inclusion: second_inclusion.clone(),
            first_retraction: first_retraction.clone(),
            second_retraction: second_retraction.clone(),
        })
    }

    /// `i₁ ∘ s₁` on the total algebra.
    pub fn first_idempotent(&self) -> HopfMorphism {
        self.first_inclusion.compose(&self.first_retraction)
    }

    /// `i₂ ∘ s₂` on the total algebra.
    pub fn second_idempotent(&self) -> HopfMorphism {
        self.second_inclusion.compose(&self.second_retraction)
    }
}

pub fn check_split_epi2(s: &SplitEpi2, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("2-fold split epimorphism on {}", s.total.name()), mode);
    report.absorb("first inclusion: ", check_morphism(&s.first_inclusion, mode));
    report.absorb("first retraction: ", check_morphism(&s.first_retraction, mode));
    report.absorb("second inclusion: ", check_morphism(&s.second_inclusion, mode));
    report.absorb("second retraction: ", check_morphism(&s.second_retraction, mode));
    report.record("first inclusion is injective", is_injective(&s.first_inclusion.map), None);
    report.record("second inclusion is injective", is_injective(&s.second_inclusion.map), None);
    let id1 = HopfMorphism::identity(&s.first);
    let id2 = HopfMorphism::identity(&s.second);
    report.record("first retraction splits", s.first_retraction.compose(&s.first_inclusion).same_as(&id1), None);
    report.record("second retraction splits", s.second_retraction.compose(&s.second_inclusion).same_as(&id2), None);
    let (e1, e2) = (s.first_idempotent(), s.second_idempotent());
    report.record("2C1", e1.compose(&e2).same_as(&e2.compose(&e1)), None);
    report.finish()
}

/// A corner of a 2-fold split epimorphism: a Hopf subalgebra of the total
/// algebra, as an algebra in its own right with its inclusion.
#[derive(Clone, Debug)]
pub struct Corner {
    pub space: SubHopf,
    pub hopf: FinHopf,
    pub inclusion: HopfMorphism,
}

impl Corner {
    fn new(space: SubHopf) -> Corner {
        let (hopf, inclusion) = space.to_hopf();
        Corner { space, hopf, inclusion }
    }

    /// The map from another corner contained in this one, through `f` on the
    /// ambient algebra.
    pub fn restrict(&self, from: &Corner, f: &HopfMorphism) -> Result<HopfMorphism, Error> {
        let through = f.compose(&from.inclusion);
        let cols = (0..from.hopf.dim())
            .map(|i| self.space.coords(&through.image_of_basis(i)))
            .collect::<Result<Vec<_>, _>>()?;
        HopfMorphism::new(&from.hopf, &self.hopf, LinMap::from_columns(self.hopf.field(), from.hopf.dim(), self.hopf.dim(), cols))
    }
}

/// The four corners `HKer(s₁) ∩ HKer(s₂)`, `first ∩ HKer(s₂)`,
/// `HKer(s₁) ∩ second` and `first ∩ second`, all inside the total algebra.
#[derive(Clone, Debug)]
pub struct Corners {
    pub apex: Corner,
    pub horizontal: Corner,
    pub vertical: Corner,
    pub base: Corner,
}

pub fn corners(s: &SplitEpi2, budget: usize) -> Result<Corners, Error> {
    let k1 = hker(&s.first_retraction, budget)?;
    let k2 = hker(&s.second_retraction, budget)?;
    let i1 = SubHopf::image(s.first.name(), &s.first_inclusion)?;
    let i2 = SubHopf::image(s.second.name(), &s.second_inclusion)?;
    let (n1, n2) = (s.first.name(), s.second.name());
    Ok(Corners {
        apex: Corner::new(k1.intersect(&k2, format!("HKer({n1})∩HKer({n2})"), budget)?),
        horizontal: Corner::new(i1.intersect(&k2, format!("{n1}∩HKer({n2})"), budget)?),
        vertical: Corner::new(k1.intersect(&i2, format!("HKer({n1})∩{n2}"), budget)?),
        base: Corner::new(i1.intersect(&i2, format!("{n1}∩{n2}"), budget)?),
    })
}

/// The 2-action of a 2-fold split epimorphism: its four corners, every
/// action by conjugation inside the total algebra, and the commutator
/// pairing `h(x ⊗ y) = x₁ y₁ S(x₂) S(y₂)`.
pub fn pt2_to_2action(s: &SplitEpi2, cfg: &Config) -> Result<(Hopf2Action, Corners), Error> {
    let c = corners(s, cfg.budget)?;
    let conj = |acting: &Corner, on: &Corner| conjugation_action(&acting.inclusion, &on.space, &on.hopf);
    let commutator = commutator_pairing(&s.total, &c.horizontal.inclusion, &c.vertical.inclusion);
    let (nm, nn) = (c.horizontal.hopf.dim(), c.vertical.hopf.dim());
    let mut cols = Vec::with_capacity(nm * nn);
    for x in 0..nm {
        for y in 0..nn {
            cols.push(c.apex.space.coords(&commutator(x, y)).map_err(|_| {
                Error::precondition(format!("a commutator of {} with {} leaves the apex corner", c.horizontal.space.name(), c.vertical.space.name()))
            })?);
        }
    }
    let pairing = LinMap::from_columns(s.total.field(), nm * nn, c.apex.hopf.dim(), cols);
    let a = Hopf2Action::new(
        &conj(&c.base, &c.apex)?,
        &conj(&c.base, &c.horizontal)?,
        &conj(&c.base, &c.vertical)?,
        &conj(&c.horizontal, &c.apex)?,
        &conj(&c.vertical, &c.apex)?,
        pairing,
        cfg,
    )?;
    Ok((a, c))
}

/// The 2-fold split epimorphism `(L ⋊ N) ⋊ (M ⋊ P)` built from a 2-action,
/// with the smash products it is made of.
///
/// The total basis is indexed `((l · dim N + n) · dim M + m) · dim P + p`.
#[derive(Clone, Debug)]
pub struct Pt2Build {
    /// `L ⋊ N` with the vertical corner acting on the apex.
    pub inner: SmashProduct,
    /// `M ⋊ P`, the first retract.
    pub first: SmashProduct,
    /// `N ⋊ P`, the second retract.
    pub second: SmashProduct,
    /// `(L ⋊ N) ⋊ (M ⋊ P)`.
    pub outer: SmashProduct,
    pub pt2: SplitEpi2,
}

/// The action `(m ⊗ p) ▷ (l ⊗ n) = (m₁ ▷ (p₁ ▷ l)) h(m₂ ⊗ p₂ ▷ n₁) ⊗ p₃ ▷ n₂`.
pub fn outer_action(a: &Hopf2Action, inner: &FinHopf, first: &FinHopf) -> Result<HopfAction, Error> {
    let (l, m, n, p) = (a.apex.clone(), a.horizontal.clone(), a.vertical.clone(), a.base.clone());
    let (nl, nm, nn, np) = (l.dim(), m.dim(), n.dim(), p.dim());
    let field = l.field();
    let (pl, pn, ml, h) =
        (a.base_on_apex.map.clone(), a.base_on_vertical.map.clone(), a.horizontal_on_apex.map.clone(), a.pairing.clone());
    let inner_dim = nl * nn;
    let map = LinMap::from_fn(field, nm * np * inner_dim, inner_dim, move |j| {
        let (mp, ln) = (j / inner_dim, j % inner_dim);
        Expr::basis(field, "m", nm, mp / np)
            .tensor(Expr::basis(field, "p", np, mp % np))
            .tensor(Expr::basis(field, "l", nl, ln / nn))
            .tensor(Expr::basis(field, "n", nn, ln % nn))
            .coproduct(&m, "m", "m1", "m2")
            .coproduct(&p, "p", "p1", "q")
            .coproduct(&p, "q", "p2", "p3")
            .coproduct(&n, "n", "n1", "n2")
            .merge("p1", "l", &pl, "pl")
            .merge("m1", "pl", &ml, "x")
            .merge("p2", "n1", &pn, "pn")
            .merge("m2", "pn", &h, "h")
            .multiply(&l, "x", "h", "y")
            .merge("p3", "n2", &pn, "z")
            .finish(&["y", "z"])
    });
    HopfAction::new(first, inner, map)
}

pub fn two_action_to_pt2(a: &Hopf2Action, cfg: &Config) -> Result<Pt2Build, Error> {
    let inner = SmashProduct::new(&a.vertical_on_apex, cfg)?;
    let first = SmashProduct::new(&a.base_on_horizontal, cfg)?;
    let second = SmashProduct::new(&a.base_on_vertical, cfg)?;
    let action = outer_action(a, &inner.algebra, &first.algebra)?;
    cfg.assert(inner.algebra.dim().max(first.algebra.dim()), |mode| check_action(&action, mode))?;
    let outer = SmashProduct::new(&action, cfg)?;
    let total = outer.algebra.clone();
    let (l, m, n, p) = (a.apex.clone(), a.horizontal.clone(), a.vertical.clone(), a.base.clone());
    let (nm, nn, np) = (m.dim(), n.dim(), p.dim());
    let field = total.field();
    let (lc, mc) = (l.clone(), m.clone());
    let retract = LinMap::from_fn(field, total.dim(), nn * np, move |j| {
        let (lnm, pi) = (j / np, j % np);
        let (ln, mi) = (lnm / nm, lnm % nm);
        let (li, ni) = (ln / nn, ln % nn);
        let c = &lc.epsilon(&lc.basis(li)) * &mc.epsilon(&mc.basis(mi));
        crate::exactla::SparseVec::basis(field, nn * np, ni * np + pi).scale(&c)
    });
    let include = LinMap::from_fn(field, nn * np, total.dim(), move |j| {
        l.one().kron(&n.basis(j / np)).kron(&m.one()).kron(&p.basis(j % np))
    });
    let second_retraction = HopfMorphism::new(&total, &second.algebra, retract)?;
    let second_inclusion = HopfMorphism::new(&second.algebra, &total, include)?;
    let pt2 = SplitEpi2::new(&outer.section(), &outer.projection(), &second_inclusion, &second_retraction, cfg)?;
    Ok(Pt2Build { inner, first, second, outer, pt2 })
}

/// `ψ : (L ⋊ N) ⋊ (M ⋊ P) -> (L ⋊ M) ⋊ (N ⋊ P)` and its inverse, relating
/// the constructions of a 2-action and of its transpose.
#[derive(Clone, Debug)]
pub struct PsiIso {
    pub forward: HopfMorphism,
    pub backward: HopfMorphism,
    pub build: Pt2Build,
    pub swapped: Pt2Build,
    pub report: Report,
}

pub fn psi_iso(a: &Hopf2Action, cfg: &Config) -> Result<PsiIso, Error> {
    let build = two_action_to_pt2(a, cfg)?;
    let swapped = two_action_to_pt2(&swap_2action(a), cfg)?;
    let (l, m, n) = (a.apex.clone(), a.horizontal.clone(), a.vertical.clone());
    let (nl, nm, nn, np) = (l.dim(), m.dim(), n.dim(), a.base.dim());
    let field = l.field();
    let h = a.pairing.clone();
    let dim = build.pt2.total.dim();
    let (lf, mf, nf, hf) = (l.clone(), m.clone(), n.clone(), h.clone());
    let forward = LinMap::from_fn(field, dim, dim, move |j| {
        let (pi, rest) = (j % np, j / np);
        let (mi, rest) = (rest % nm, rest / nm);
        let (ni, li) = (rest % nn, rest / nn);
        Expr::basis(field, "l", nl, li)
            .tensor(Expr::basis(field, "n", nn, ni))
            .tensor(Expr::basis(field, "m", nm, mi))
            .tensor(Expr::basis(field, "p", np, pi))
            .coproduct(&mf, "m", "m1", "m2")
            .coproduct(&nf, "n", "n1", "n2")
            .merge("m1", "n1", &hf, "h")
            .antipode(&lf, "h")
            .multiply(&lf, "l", "h", "x")
            .finish(&["x", "m2", "n2", "p"])
    });
    let backward = LinMap::from_fn(field, dim, dim, move |j| {
        let (pi, rest) = (j % np, j / np);
        let (ni, rest) = (rest % nn, rest / nn);
        let (mi, li) = (rest % nm, rest / nm);
        Expr::basis(field, "l", nl, li)
            .tensor(Expr::basis(field, "m", nm, mi))
            .tensor(Expr::basis(field, "n", nn, ni))
            .tensor(Expr::basis(field, "p", np, pi))
            .coproduct(&m, "m", "m1", "m2")
            .coproduct(&n, "n", "n1", "n2")
            .merge("m1", "n1", &h, "h")
            .multiply(&l, "l", "h", "x")
            .finish(&["x", "n2", "m2", "p"])
    });
    let forward = HopfMorphism::new(&build.pt2.total, &swapped.pt2.total, forward)?;
    let backward = HopfMorphism::new(&swapped.pt2.total, &build.pt2.total, backward)?;
    let mode = cfg.explicit_mode(dim);
    let mut report = Report::new(format!("ψ for {}", a.name()), mode);
    report.absorb("ψ: ", check_morphism(&forward, mode));
    report.absorb("ψ⁻¹: ", check_morphism(&backward, mode));
    let (id, id2) = (HopfMorphism::identity(&build.pt2.total), HopfMorphism::identity(&swapped.pt2.total));
    report.record("ψ⁻¹ ∘ ψ = id", backward.compose(&forward).same_as(&id), None);
    report.record("ψ ∘ ψ⁻¹ = id", forward.compose(&backward).same_as(&id2), None);
    let (s, t) = (&build.pt2, &swapped.pt2);
    report.record(
        "second retraction = swapped first retraction ∘ ψ",
        t.first_retraction.compose(&forward).map.same_as(&s.second_retraction.map),
        None,
    );
    report.record(
        "first retraction = swapped second retraction ∘ ψ",
        t.second_retraction.compose(&forward).map.same_as(&s.first_retraction.map),
        None,
    );
    let report = report.finish();
    if !report.passed() {
        return Err(Error::Axiom(Box::new(report)));
    }
    Ok(PsiIso { forward, backward, build, swapped, report })
}

/// The map `l ⊗ n ⊗ m ⊗ p ↦ l n m p` from the rebuilt total algebra of a
/// 2-fold split epimorphism back into the original one.
pub(crate) fn collapse(s: &SplitEpi2, c: &Corners, rebuilt: &Pt2Build) -> Result<HopfMorphism, Error> {
    let total = s.total.clone();
    let (l, n, m, p) =
        (c.apex.inclusion.clone(), c.vertical.inclusion.clone(), c.horizontal.inclusion.clone(), c.base.inclusion.clone());
    let (nn, nm, np) = (n.dom.dim(), m.dom.dim(), p.dom.dim());
    let map = LinMap::from_fn(total.field(), rebuilt.pt2.total.dim(), total.dim(), move |j| {
        let (pi, rest) = (j % np, j / np);
        let (mi, rest) = (rest % nm, rest / nm);
        let (ni, li) = (rest % nn, rest / nn);
        total.product(&[&l.map.col(li), &n.map.col(ni), &m.map.col(mi), &p.map.col(pi)])
    });
    HopfMorphism::new(&rebuilt.pt2.total, &s.total, map)
}

/// The canonical maps from the corners of a 2-action into the corners of the
/// 2-action rebuilt from its 2-fold split epimorphism.
pub(crate) fn canonical_corner_maps(a: &Hopf2Action, build: &Pt2Build, c: &Corners) -> Result<CornerMaps, Error> {
    let total = &build.pt2.total;
    let (nl, nn, nm, np) = (a.apex.dim(), a.vertical.dim(), a.horizontal.dim(), a.base.dim());
    let (ol, on, om, op) = (a.apex.one(), a.vertical.one(), a.horizontal.one(), a.base.one());
    let field = total.field();
    let embed = |from: &FinHopf, to: &Corner, place: &dyn Fn(usize) -> crate::exactla::SparseVec| {
        let cols = (0..from.dim()).map(|i| to.space.coords(&place(i))).collect::<Result<Vec<_>, _>>()?;
        HopfMorphism::new(from, &to.hopf, LinMap::from_columns(field, from.dim(), to.hopf.dim(), cols))
    };
    let basis = |dim: usize, i: usize| crate::exactla::SparseVec::basis(field, dim, i);
    Ok(CornerMaps {
        apex: embed(&a.apex, &c.apex, &|i| basis(nl, i).kron(&on).kron(&om).kron(&op))?,
        horizontal: embed(&a.horizontal, &c.horizontal, &|i| ol.kron(&on).kron(&basis(nm, i)).kron(&op))?,
        vertical: embed(&a.vertical, &c.vertical, &|i| ol.kron(&basis(nn, i)).kron(&om).kron(&op))?,
        base: embed(&a.base, &c.base, &|i| ol.kron(&on).kron(&om).kron(&basis(np, i)))?,
    })
}

/// Rebuilds a 2-action through its 2-fold split epimorphism and compares it
/// with the input along the canonical corner maps.
pub fn two_action_roundtrip(a: &Hopf2Action, cfg: &Config) -> Result<Report, Error> {
    let build = two_action_to_pt2(a, cfg)?;
    let (back, c) = pt2_to_2action(&build.pt2, cfg)?;
    let maps = canonical_corner_maps(a, &build, &c)?;
    let mode = cfg.explicit_mode(build.pt2.total.dim());
    let mut report = Report::new(format!("2-action round trip of {}", a.name()), mode);
    report.absorb("", check_2action_morphism(a, &back, &maps, mode));
    report.record("corner maps are bijective", maps.all_bijective(), None);
    let exact = maps.all_identity_matrices();
    report.record("corner maps", true, Some(if exact { "identity matrices" } else { "isomorphisms" }.to_string()));
    Ok(report.finish())
}

/// Rebuilds a 2-fold split epimorphism through its 2-action and compares the
/// result with the input along `l ⊗ n ⊗ m ⊗ p ↦ l n m p`.
pub fn pt2_roundtrip(s: &SplitEpi2, cfg: &Config) -> Result<(Report, HopfMorphism), Error> {
    let (a, c) = pt2_to_2action(s, cfg)?;
    let rebuilt = two_action_to_pt2(&a, cfg)?;
    let phi = collapse(s, &c, &rebuilt)?;
    let mode = cfg.explicit_mode(s.total.dim());
    let mut report = Report::new(format!("2-fold split epimorphism round trip of {}", s.total.name()), mode);
    report.absorb("comparison: ", check_morphism(&phi, mode));
    report.record("comparison is bijective", phi.is_bijective(), None);
    let r = &rebuilt.pt2;
    report.record(
        "first idempotent commutes",
        s.first_idempotent().compose(&phi).same_as(&phi.compose(&r.first_idempotent())),
        None,
    );
    report.record(
        "second idempotent commutes",
        s.second_idempotent().compose(&phi).same_as(&phi.compose(&r.second_idempotent())),
        None,
    );
    Ok((report.finish(), phi))
}
