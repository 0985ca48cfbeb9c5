//! Hopf actions, smash products and split epimorphisms.

use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{Expr, LinMap, SparseVec};
use crate::hopfcore::{check_hopf, FinHopf, GroupAction, HopfExpr, HopfParts};
use crate::morphism::{check_morphism, hker, HopfMorphism, SubHopf};
use crate::report::{differ, Report};

/// A left action `acting ⊗ acted -> acted`, `b ⊗ x ↦ b ▷ x`.
#[derive(Clone, Debug)]
pub struct HopfAction {
    pub acting: FinHopf,
    pub acted: FinHopf,
    pub map: LinMap,
}

impl HopfAction {
    pub fn new(acting: &FinHopf, acted: &FinHopf, map: LinMap) -> Result<HopfAction, Error> {
        if map.dom() != acting.dim() * acted.dim() || map.cod() != acted.dim() || acting.field() != acted.field() {
            return Err(Error::Input(format!(
                "an action of {} on {} must be a {} -> {} map",
                acting.name(),
                acted.name(),
                acting.dim() * acted.dim(),
                acted.dim()
            )));
        }
        Ok(HopfAction { acting: acting.clone(), acted: acted.clone(), map })
    }

    /// `b ▷ x = ε(b) x`.
    pub fn trivial(acting: &FinHopf, acted: &FinHopf) -> HopfAction {
        let (b, x) = (acting.clone(), acted.clone());
        let n = acted.dim();
        let map = LinMap::from_fn(acting.field(), acting.dim() * n, n, move |j| {
            x.basis(j % n).scale(&b.epsilon(&b.basis(j / n)))
        });
        HopfAction { acting: acting.clone(), acted: acted.clone(), map }
    }

    /// The adjoint action of a Hopf algebra on itself, `a ▷ x = a₁ x S(a₂)`.
    pub fn adjoint(h: &FinHopf) -> HopfAction {
        let whole = SubHopf::whole(h);
        conjugation_action(&HopfMorphism::identity(h), &whole, h).expect("a Hopf algebra is stable under its adjoint action")
    }

    /// The linearization of a group action between the given group algebras.
    pub fn from_group_action(act: &GroupAction, acting: &FinHopf, acted: &FinHopf) -> Result<HopfAction, Error> {
        let n = acted.dim();
        let f = acted.field();
        let cols = (0..acting.dim() * n).map(|j| SparseVec::basis(f, n, act.act(j / n, j % n))).collect();
        HopfAction::new(acting, acted, LinMap::from_columns(f, acting.dim() * n, n, cols))
    }

    /// The action pulled back along a morphism into the acting algebra: `c ▷ x = f(c) ▷ x`.
    pub fn through(&self, f: &HopfMorphism) -> HopfAction {
        assert_eq!(f.cod.dim(), self.acting.dim(), "pulling an action back along a map into another algebra");
        let (act, g) = (self.clone(), f.clone());
        let n = self.acted.dim();
        let field = self.acted.field();
        let map = LinMap::from_fn(field, f.dom.dim() * n, n, move |j| {
            Expr::vector("c", &g.map.col(j / n))
                .tensor(Expr::basis(field, "x", n, j % n))
                .merge("c", "x", &act.map, "y")
                .finish(&["y"])
        });
        HopfAction { acting: f.dom.clone(), acted: self.acted.clone(), map }
    }

    pub fn act(&self, b: &SparseVec, x: &SparseVec) -> SparseVec {
        self.map.apply(&b.kron(x))
    }

    pub fn act_basis(&self, b: usize, x: usize) -> SparseVec {
        self.map.col(b * self.acted.dim() + x).into_owned()
    }
}

/// Conjugation by the image of a morphism `C -> H` on a subalgebra `K ⊆ H`:
/// `c ▷ k = f(c₁) k f(S(c₂))`, expressed in the basis of `K`.
pub fn conjugation_action(acting: &HopfMorphism, target: &SubHopf, target_hopf: &FinHopf) -> Result<HopfAction, Error> {
    let c = &acting.dom;
    let h = &acting.cod;
    assert_eq!(h.dim(), target.ambient().dim(), "conjugating inside a different algebra");
    let f = h.field();
    let k = target.dim();
    let mut cols = Vec::with_capacity(c.dim() * k);
    for ci in 0..c.dim() {
        for ki in 0..k {
            let v = Expr::basis(f, "c", c.dim(), ci)
                .coproduct(c, "c", "c1", "c2")
                .antipode(c, "c2")
                .apply("c1", &acting.map)
                .apply("c2", &acting.map)
                .tensor(Expr::vector("k", &target.basis()[ki]))
                .multiply(h, "c1", "k", "ck")
                .multiply(h, "ck", "c2", "r")
                .finish(&["r"]);
            cols.push(target.coords(&v)?);
        }
    }
    HopfAction::new(c, target_hopf, LinMap::from_columns(f, c.dim() * k, k, cols))
}

/// Checks the six axioms making `acted` a module Hopf algebra over `acting`.
pub fn check_action(a: &HopfAction, mode: CheckMode) -> Report {
    let (b, x) = (&a.acting, &a.acted);
    let f = x.field();
    let (nb, nx) = (b.dim(), x.dim());
    let (bl, xl) = (b.labels(), x.labels());
    let xx_labels = x.tensor_labels();
    let mut report = Report::new(format!("action of {} on {}", b.name(), x.name()), mode);
    report.axiom("m et act", mode, &[bl, bl, xl], |t| {
        let lhs = a.map.apply(&b.mult().col(t[0] * nb + t[1]).kron(&x.basis(t[2])));
        let inner = a.act_basis(t[1], t[2]);
        let rhs = a.act(&b.basis(t[0]), &inner);
        differ(&lhs, &rhs, xl)
    });
    report.axiom("1 et act", mode, &[xl], |t| {
        differ(&a.act(b.unit(), &x.basis(t[0])), &x.basis(t[0]), xl)
    });
    report.axiom("act et m", mode, &[bl, xl, xl], |t| {
        let lhs = a.map.apply(&b.basis(t[0]).kron(&x.mult().col(t[1] * nx + t[2])));
        let rhs = Expr::basis(f, "b", nb, t[0])
            .tensor(Expr::basis(f, "x", nx, t[1]))
            .tensor(Expr::basis(f, "y", nx, t[2]))
            .coproduct(b, "b", "b1", "b2")
            .merge("b1", "x", &a.map, "bx")
            .merge("b2", "y", &a.map, "by")
            .multiply(x, "bx", "by", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, xl)
    });
    report.axiom("act et 1", mode, &[bl], |t| {
        let lhs = a.act(&b.basis(t[0]), x.unit());
        let rhs = x.unit().scale(&b.epsilon(&b.basis(t[0])));
        differ(&lhs, &rhs, xl)
    });
    report.axiom("act et delta", mode, &[bl, xl], |t| {
        let lhs = x.delta(&a.act_basis(t[0], t[1]));
        let rhs = Expr::basis(f, "b", nb, t[0])
            .tensor(Expr::basis(f, "x", nx, t[1]))
            .coproduct(b, "b", "b1", "b2")
            .coproduct(x, "x", "x1", "x2")
            .merge("b1", "x1", &a.map, "y1")
            .merge("b2", "x2", &a.map, "y2")
            .finish(&["y1", "y2"]);
        differ(&lhs, &rhs, &xx_labels)
    });
    report.axiom("act et epsilon", mode, &[bl, xl], |t| {
        let lhs = x.epsilon(&a.act_basis(t[0], t[1]));
        let rhs = &b.epsilon(&b.basis(t[0])) * &x.epsilon(&x.basis(t[1]));
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    });
    report.finish()
}

/// The smash product `X ⋊ B` of a module Hopf algebra, with basis `x ⊗ b`
/// at index `x * dim(B) + b`.
#[derive(Clone, Debug)]
pub struct SmashProduct {
    pub algebra: FinHopf,
    pub action: HopfAction,
}

impl SmashProduct {
    /// Builds `X ⋊ B`; under paranoia its Hopf axioms are re-checked.
    pub fn new(action: &HopfAction, cfg: &Config) -> Result<SmashProduct, Error> {
        let algebra = smash_algebra(action);
        cfg.assert(algebra.dim(), |mode| check_hopf(&algebra, mode))?;
        Ok(SmashProduct { algebra, action: action.clone() })
    }

    pub fn module(&self) -> &FinHopf {
        &self.action.acted
    }

    pub fn base(&self) -> &FinHopf {
        &self.action.acting
    }

    pub fn index(&self, x: usize, b: usize) -> usize {
        x * self.base().dim() + b
    }

    /// `x ⊗ b ↦ ε(x) b`.
    pub fn projection(&self) -> HopfMorphism {
        let counit = self.module().counit().clone();
        let map = LinMap::tensor(&counit, &LinMap::identity(self.base().field(), self.base().dim()));
        HopfMorphism::new(&self.algebra, self.base(), map).expect("projection shape")
    }

    /// `b ↦ 1 ⊗ b`.
    pub fn section(&self) -> HopfMorphism {
        let unit = LinMap::from_columns(self.base().field(), 1, self.module().dim(), vec![self.module().one()]);
        let map = LinMap::tensor(&unit, &LinMap::identity(self.base().field(), self.base().dim()));
        HopfMorphism::new(self.base(), &self.algebra, map).expect("section shape")
    }

    /// `x ↦ x ⊗ 1`.
    pub fn module_inclusion(&self) -> HopfMorphism {
        let unit = LinMap::from_columns(self.base().field(), 1, self.base().dim(), vec![self.base().one()]);
        let map = LinMap::tensor(&LinMap::identity(self.base().field(), self.module().dim()), &unit);
        HopfMorphism::new(self.module(), &self.algebra, map).expect("inclusion shape")
    }

    /// The split epimorphism `(X ⋊ B, B, projection, section)`.
    pub fn split_epi(&self) -> SplitEpi {
        SplitEpi { total: self.algebra.clone(), base: self.base().clone(), proj: self.projection(), section: self.section() }
    }
}

fn smash_algebra(action: &HopfAction) -> FinHopf {
    let (x, b) = (action.acted.clone(), action.acting.clone());
    let f = x.field();
    let (nx, nb) = (x.dim(), b.dim());
    let n = nx * nb;
    let (xm, bm, act) = (x.clone(), b.clone(), action.map.clone());
    let mult = LinMap::from_fn(f, n * n, n, move |j| {
        let (l, r) = (j / n, j % n);
        Expr::basis(f, "x", nx, l / nb)
            .tensor(Expr::basis(f, "b", nb, l % nb))
            .tensor(Expr::basis(f, "y", nx, r / nb))
            .tensor(Expr::basis(f, "c", nb, r % nb))
            .coproduct(&bm, "b", "b1", "b2")
            .merge("b1", "y", &act, "by")
            .multiply(&xm, "x", "by", "xy")
            .multiply(&bm, "b2", "c", "bc")
            .finish(&["xy", "bc"])
    });
    let (xm, bm) = (x.clone(), b.clone());
    let comult = LinMap::from_fn(f, n, n * n, move |j| {
        Expr::basis(f, "x", nx, j / nb)
            .tensor(Expr::basis(f, "b", nb, j % nb))
            .coproduct(&xm, "x", "x1", "x2")
            .coproduct(&bm, "b", "b1", "b2")
            .finish(&["x1", "b1", "x2", "b2"])
    });
    let counit = LinMap::tensor(x.counit(), b.counit());
    let (xm, bm, act) = (x.clone(), b.clone(), action.map.clone());
    let antipode = LinMap::from_fn(f, n, n, move |j| {
        Expr::basis(f, "x", nx, j / nb)
            .tensor(Expr::basis(f, "b", nb, j % nb))
            .antipode(&xm, "x")
            .coproduct(&bm, "b", "b1", "b2")
            .antipode(&bm, "b1")
            .antipode(&bm, "b2")
            .merge("b1", "x", &act, "y")
            .finish(&["y", "b2"])
    });
    let mut labels = Vec::with_capacity(n);
    for xl in x.labels() {
        for bl in b.labels() {
            labels.push(format!("{xl}⊗{bl}"));
        }
    }
    let grouplike = match (x.grouplike_flags(), b.grouplike_flags()) {
        (Some(g), Some(h)) => Some((0..n).map(|j| g[j / nb] && h[j % nb]).collect()),
        _ => None,
    };
    FinHopf::new(HopfParts {
        name: format!("{}⋊{}", paren(x.name()), paren(b.name())),
        field: f,
        labels,
        mult,
        unit: x.unit().kron(b.unit()),
        comult,
        counit,
        antipode,
        grouplike,
    })
    .expect("smash product shapes")
}

fn paren(name: &str) -> String {
    if name.contains('⋊') || name.contains('⊗') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// A split epimorphism of Hopf algebras: `proj ∘ section = id`.
#[derive(Clone, Debug)]
pub struct SplitEpi {
    pub total: FinHopf,
    pub base: FinHopf,
    pub proj: HopfMorphism,
    pub section: HopfMorphism,
}

impl SplitEpi {
    pub fn new(proj: &HopfMorphism, section: &HopfMorphism, cfg: &Config) -> Result<SplitEpi, Error> {
        if section.dom.dim() != proj.cod.dim() || section.cod.dim() != proj.dom.dim() {
            return Err(Error::Input("section and projection do not fit together".into()));
        }
        let e = SplitEpi { total: proj.dom.clone(), base: proj.cod.clone(), proj: proj.clone(), section: section.clone() };
        cfg.assert(e.total.dim(), |mode| check_split_epi(&e, mode))?;
        Ok(e)
    }
}

/// Checks that both maps are Hopf morphisms and the projection splits the section.
pub fn check_split_epi(e: &SplitEpi, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("split epimorphism {} -> {}", e.total.name(), e.base.name()), mode);
    report.absorb("projection ", check_morphism(&e.proj, mode));
    report.absorb("section ", check_morphism(&e.section, mode));
    let id = LinMap::identity(e.base.field(), e.base.dim());
    report.record("projection splits section", e.proj.map.compose(&e.section.map).same_as(&id), None);
    report.finish()
}

/// The kernel of a split epimorphism with the conjugation action of its base.
#[derive(Clone, Debug)]
pub struct KernelAction {
    pub kernel: SubHopf,
    pub action: HopfAction,
    /// The kernel as a Hopf algebra, with its inclusion into the total algebra.
    pub inclusion: HopfMorphism,
}

/// The conjugation action `b ▷ k = s(b₁) k s(S(b₂))` on `HKer(p)`.
pub fn split_epi_to_action(e: &SplitEpi, cfg: &Config) -> Result<KernelAction, Error> {
    let kernel = hker(&e.proj, cfg.budget)?;
    let (k, inclusion) = kernel.to_hopf();
    let action = conjugation_action(&e.section, &kernel, &k)?;
    cfg.assert(e.total.dim(), |mode| check_action(&action, mode))?;
    Ok(KernelAction { kernel, action, inclusion })
}

/// The split epimorphism `X ⋊ B -> B` of an action.
pub fn action_to_split_epi(a: &HopfAction, cfg: &Config) -> Result<SplitEpi, Error> {
    Ok(SmashProduct::new(a, cfg)?.split_epi())
}

/// The comparison `HKer(p) ⋊ B -> A`, `k ⊗ b ↦ k s(b)`, verified to be an
/// isomorphism of split epimorphisms.
pub fn phi_iso(e: &SplitEpi, cfg: &Config) -> Result<(SmashProduct, HopfMorphism), Error> {
    let ka = split_epi_to_action(e, cfg)?;
    let smash = SmashProduct::new(&ka.action, cfg)?;
    let (a, nb) = (e.total.clone(), e.base.dim());
    let (incl, sec) = (ka.inclusion.clone(), e.section.clone());
    let map = LinMap::from_fn(a.field(), smash.algebra.dim(), a.dim(), move |j| {
        a.mul(&incl.map.col(j / nb), &sec.map.col(j % nb))
    });
    let phi = HopfMorphism::new(&smash.algebra, &e.total, map)?;
    let mode = cfg.explicit_mode(e.total.dim());
    check_morphism(&phi, mode).into_result()?;
    if !phi.is_bijective() {
        return Err(Error::precondition("the comparison map is not bijective"));
    }
    if !e.proj.compose(&phi).same_as(&smash.projection()) || !phi.compose(&smash.section()).same_as(&e.section) {
        return Err(Error::precondition("the comparison map does not respect projections and sections"));
    }
    Ok((smash, phi))
}

/// Whether two actions agree after transporting the acted algebra along a
/// linear map `t : first.acted -> second.acted` (`t(b ▷ x) = b ▷' t(x)`).
pub fn actions_agree_along(first: &HopfAction, second: &HopfAction, t: &LinMap) -> bool {
    let (nb, nx) = (first.acting.dim(), first.acted.dim());
    if second.acting.dim() != nb || t.dom() != nx || t.cod() != second.acted.dim() {
        return false;
    }
    (0..nb).all(|b| {
        (0..nx).all(|x| {
            let lhs = t.apply(&first.act_basis(b, x));
            let rhs = second.act(&second.acting.basis(b), &t.col(x));
            lhs == rhs
        })
    })
}
