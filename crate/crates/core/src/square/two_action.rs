use crate::action::{check_action, HopfAction};
use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{Expr, LinMap, SparseVec};
use crate::hopfcore::{FinHopf, HopfExpr};
use crate::morphism::{check_morphism, HopfMorphism};
use crate::report::{differ, Report};

/// A Hopf 2-action `(L, M, N, P, h)`.
///
/// `P` acts on the three other corners, `M` and `N` act on `L`, and the
/// pairing `h : M ⊗ N -> L` is indexed `m * dim(N) + n`. In a crossed square
/// `L` sits at the apex, `M` is reached horizontally and `N` vertically.
#[derive(Clone, Debug)]
pub struct Hopf2Action {
    pub apex: FinHopf,
    pub horizontal: FinHopf,
    pub vertical: FinHopf,
    pub base: FinHopf,
    pub base_on_apex: HopfAction,
    pub base_on_horizontal: HopfAction,
    pub base_on_vertical: HopfAction,
    pub horizontal_on_apex: HopfAction,
    pub vertical_on_apex: HopfAction,
    pub pairing: LinMap,
}

impl Hopf2Action {
    /// Assembles a 2-action from its actions and pairing; under paranoia all
    /// axioms are checked.
    pub fn new(
        base_on_apex: &HopfAction,
        base_on_horizontal: &HopfAction,
        base_on_vertical: &HopfAction,
        horizontal_on_apex: &HopfAction,
        vertical_on_apex: &HopfAction,
        pairing: LinMap,
        cfg: &Config,
    ) -> Result<Hopf2Action, Error> {
        let a = Hopf2Action::unchecked(
            base_on_apex,
            base_on_horizontal,
            base_on_vertical,
            horizontal_on_apex,
            vertical_on_apex,
            pairing,
        )?;
        cfg.assert(a.largest_dim(), |mode| check_2action(&a, mode))?;
        Ok(a)
    }

    /// Shape checks only.
    pub fn unchecked(
        base_on_apex: &HopfAction,
        base_on_horizontal: &HopfAction,
        base_on_vertical: &HopfAction,
        horizontal_on_apex: &HopfAction,
        vertical_on_apex: &HopfAction,
        pairing: LinMap,
    ) -> Result<Hopf2Action, Error> {
        let apex = base_on_apex.acted.clone();
        let horizontal = base_on_horizontal.acted.clone();
        let vertical = base_on_vertical.acted.clone();
        let base = base_on_apex.acting.clone();
        let dims_fit = base_on_horizontal.acting.dim() == base.dim()
            && base_on_vertical.acting.dim() == base.dim()
            && horizontal_on_apex.acting.dim() == horizontal.dim()
            && horizontal_on_apex.acted.dim() == apex.dim()
            && vertical_on_apex.acting.dim() == vertical.dim()
            && vertical_on_apex.acted.dim() == apex.dim()
            && pairing.dom() == horizontal.dim() * vertical.dim()
            && pairing.cod() == apex.dim();
        if !dims_fit {
            return Err(Error::Input("the actions and pairing of a 2-action do not fit together".into()));
        }
        Ok(Hopf2Action {
            apex,
            horizontal,
            vertical,
            base,
            base_on_apex: base_on_apex.clone(),
            base_on_horizontal: base_on_horizontal.clone(),
            base_on_vertical: base_on_vertical.clone(),
            horizontal_on_apex: horizontal_on_apex.clone(),
            vertical_on_apex: vertical_on_apex.clone(),
            pairing,
        })
    }

    /// Trivial actions on four algebras with `h(m ⊗ n) = ε(m) ε(n) 1`.
    pub fn trivial(apex: &FinHopf, horizontal: &FinHopf, vertical: &FinHopf, base: &FinHopf) -> Hopf2Action {
        Hopf2Action {
            apex: apex.clone(),
            horizontal: horizontal.clone(),
            vertical: vertical.clone(),
            base: base.clone(),
            base_on_apex: HopfAction::trivial(base, apex),
            base_on_horizontal: HopfAction::trivial(base, horizontal),
            base_on_vertical: HopfAction::trivial(base, vertical),
            horizontal_on_apex: HopfAction::trivial(horizontal, apex),
            vertical_on_apex: HopfAction::trivial(vertical, apex),
            pairing: counit_pairing(horizontal, vertical, apex),
        }
    }

    pub fn largest_dim(&self) -> usize {
        [self.apex.dim(), self.horizontal.dim(), self.vertical.dim(), self.base.dim()]
            .into_iter()
            .max()
            .unwrap_or(1)
    }

    pub fn name(&self) -> String {
        format!("({}, {}, {}, {})", self.apex.name(), self.horizontal.name(), self.vertical.name(), self.base.name())
    }
}

/// `m ⊗ n ↦ ε(m) ε(n) 1_L`.
pub fn counit_pairing(horizontal: &FinHopf, vertical: &FinHopf, apex: &FinHopf) -> LinMap {
    let eps = LinMap::tensor(horizontal.counit(), vertical.counit());
    let unit = LinMap::from_columns(apex.field(), 1, apex.dim(), vec![apex.one()]);
    unit.compose(&eps)
}

/// The commutator pairing `x ⊗ y ↦ x₁ y₁ S(x₂) S(y₂)` computed in `ambient`
/// through the maps `left : X -> ambient`, `right : Y -> ambient`.
pub(crate) fn commutator_pairing(
    ambient: &FinHopf,
    left: &HopfMorphism,
    right: &HopfMorphism,
) -> impl Fn(usize, usize) -> SparseVec + Send + Sync + 'static {
    let (h, f, g) = (ambient.clone(), left.clone(), right.clone());
    move |x, y| {
        let field = h.field();
        Expr::basis(field, "x", f.dom.dim(), x)
            .tensor(Expr::basis(field, "y", g.dom.dim(), y))
            .coproduct(&f.dom, "x", "x1", "x2")
            .coproduct(&g.dom, "y", "y1", "y2")
            .apply("x1", &f.map)
            .apply("x2", &f.map)
            .apply("y1", &g.map)
            .apply("y2", &g.map)
            .antipode(&h, "x2")
            .antipode(&h, "y2")
            .multiply(&h, "x1", "y1", "a")
            .multiply(&h, "a", "x2", "b")
            .multiply(&h, "b", "y2", "c")
            .finish(&["c"])
    }
}

/// The roles exchanged: `(L, N, M, P, S ∘ h ∘ σ)`.
pub fn swap_2action(a: &Hopf2Action) -> Hopf2Action {
    let field = a.apex.field();
    let sigma = LinMap::twist(field, a.vertical.dim(), a.horizontal.dim());
    Hopf2Action {
        apex: a.apex.clone(),
        horizontal: a.vertical.clone(),
        vertical: a.horizontal.clone(),
        base: a.base.clone(),
        base_on_apex: a.base_on_apex.clone(),
        base_on_horizontal: a.base_on_vertical.clone(),
        base_on_vertical: a.base_on_horizontal.clone(),
        horizontal_on_apex: a.vertical_on_apex.clone(),
        vertical_on_apex: a.horizontal_on_apex.clone(),
        pairing: a.apex.antipode().compose(&a.pairing.compose(&sigma)),
    }
}

/// Checks the five action structures, that `h` is a coalgebra map, and the
/// axioms 2A1 to 2A5.
pub fn check_2action(a: &Hopf2Action, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("2-action {}", a.name()), mode);
    report.absorb("base on apex: ", check_action(&a.base_on_apex, mode));
    report.absorb("base on horizontal: ", check_action(&a.base_on_horizontal, mode));
    report.absorb("base on vertical: ", check_action(&a.base_on_vertical, mode));
    report.absorb("horizontal on apex: ", check_action(&a.horizontal_on_apex, mode));
    report.absorb("vertical on apex: ", check_action(&a.vertical_on_apex, mode));
    pairing_is_coalgebra_map(&mut report, a, mode);
    actions_compatible(&mut report, a, mode);
    pairing_is_linear(&mut report, a, "2A2", mode);
    pairing_is_normalized(&mut report, a, mode);
    pairing_product_rules(&mut report, a, ["2A4.1", "2A4.2"], mode);
    pairing_intertwines(&mut report, a, mode);
    report.finish()
}

fn pair_col(a: &Hopf2Action, m: usize, n: usize) -> SparseVec {
    a.pairing.col(m * a.vertical.dim() + n).into_owned()
}

pub(crate) fn pairing_is_coalgebra_map(report: &mut Report, a: &Hopf2Action, mode: CheckMode) {
    let (l, m, n) = (&a.apex, &a.horizontal, &a.vertical);
    let field = l.field();
    let h = &a.pairing;
    let ll2 = l.tensor_labels();
    report.axiom("h is comultiplicative", mode, &[m.labels(), n.labels()], |t| {
        let lhs = l.delta(&pair_col(a, t[0], t[1]));
        let rhs = Expr::basis(field, "m", m.dim(), t[0])
            .tensor(Expr::basis(field, "n", n.dim(), t[1]))
            .coproduct(m, "m", "m1", "m2")
            .coproduct(n, "n", "n1", "n2")
            .merge("m1", "n1", h, "h1")
            .merge("m2", "n2", h, "h2")
            .finish(&["h1", "h2"]);
        differ(&lhs, &rhs, &ll2)
    });
    report.axiom("h is counital", mode, &[m.labels(), n.labels()], |t| {
        let lhs = l.epsilon(&pair_col(a, t[0], t[1]));
        let rhs = &m.epsilon(&m.basis(t[0])) * &n.epsilon(&n.basis(t[1]));
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    });
}

/// 2A1: `(p₁ ▷ x) ▷ (p₂ ▷ l) = p ▷ (x ▷ l)` for `x` in either side corner.
fn actions_compatible(report: &mut Report, a: &Hopf2Action, mode: CheckMode) {
    let (l, p) = (&a.apex, &a.base);
    let field = l.field();
    let pa = &a.base_on_apex.map;
    let check = |acting: &FinHopf, on_apex: &LinMap, base_on: &LinMap, t: &[usize]| {
        let start = || {
            Expr::basis(field, "p", p.dim(), t[0])
                .tensor(Expr::basis(field, "x", acting.dim(), t[1]))
                .tensor(Expr::basis(field, "l", l.dim(), t[2]))
        };
        let lhs = start()
            .coproduct(p, "p", "p1", "p2")
            .merge("p1", "x", base_on, "px")
            .merge("p2", "l", pa, "pl")
            .merge("px", "pl", on_apex, "r")
            .finish(&["r"]);
        let rhs = start().merge("x", "l", on_apex, "xl").merge("p", "xl", pa, "r").finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    };
    let (m, n) = (&a.horizontal, &a.vertical);
    report.axiom("2A1.1", mode, &[p.labels(), m.labels(), l.labels()], |t| {
        check(m, &a.horizontal_on_apex.map, &a.base_on_horizontal.map, t)
    });
    report.axiom("2A1.2", mode, &[p.labels(), n.labels(), l.labels()], |t| {
        check(n, &a.vertical_on_apex.map, &a.base_on_vertical.map, t)
    });
}

/// `h(p₁ ▷ m ⊗ p₂ ▷ n) = p ▷ h(m ⊗ n)`.
pub(crate) fn pairing_is_linear(report: &mut Report, a: &Hopf2Action, name: &str, mode: CheckMode) {
    let (l, m, n, p) = (&a.apex, &a.horizontal, &a.vertical, &a.base);
    let field = l.field();
    report.axiom(name, mode, &[p.labels(), m.labels(), n.labels()], |t| {
        let lhs = Expr::basis(field, "p", p.dim(), t[0])
            .tensor(Expr::basis(field, "m", m.dim(), t[1]))
            .tensor(Expr::basis(field, "n", n.dim(), t[2]))
            .coproduct(p, "p", "p1", "p2")
            .merge("p1", "m", &a.base_on_horizontal.map, "pm")
            .merge("p2", "n", &a.base_on_vertical.map, "pn")
            .merge("pm", "pn", &a.pairing, "r")
            .finish(&["r"]);
        let rhs = a.base_on_apex.act(&p.basis(t[0]), &pair_col(a, t[1], t[2]));
        differ(&lhs, &rhs, l.labels())
    });
}

fn pairing_is_normalized(report: &mut Report, a: &Hopf2Action, mode: CheckMode) {
    let (l, m, n) = (&a.apex, &a.horizontal, &a.vertical);
    let h = &a.pairing;
    report.axiom("2A3.1", mode, &[n.labels()], |t| {
        let lhs = h.apply(&m.one().kron(&n.basis(t[0])));
        differ(&lhs, &l.one().scale(&n.epsilon(&n.basis(t[0]))), l.labels())
    });
    report.axiom("2A3.2", mode, &[m.labels()], |t| {
        let lhs = h.apply(&m.basis(t[0]).kron(&n.one()));
        differ(&lhs, &l.one().scale(&m.epsilon(&m.basis(t[0]))), l.labels())
    });
}

/// The two product rules `h(m ⊗ nn') = h(m₁ ⊗ n₁)(n₂ ▷ h(m₂ ⊗ n'))` and
/// `h(mm' ⊗ n) = (m₁ ▷ h(m' ⊗ n₁)) h(m₂ ⊗ n₂)`.
pub(crate) fn pairing_product_rules(report: &mut Report, a: &Hopf2Action, names: [&str; 2], mode: CheckMode) {
    let (l, m, n) = (&a.apex, &a.horizontal, &a.vertical);
    let field = l.field();
    let (nm, nn) = (m.dim(), n.dim());
    let h = &a.pairing;
    report.axiom(names[0], mode, &[m.labels(), n.labels(), n.labels()], |t| {
        let lhs = h.apply(&m.basis(t[0]).kron(&n.mult().col(t[1] * nn + t[2])));
        let rhs = Expr::basis(field, "m", nm, t[0])
            .tensor(Expr::basis(field, "n", nn, t[1]))
            .tensor(Expr::basis(field, "k", nn, t[2]))
            .coproduct(m, "m", "m1", "m2")
            .coproduct(n, "n", "n1", "n2")
            .merge("m1", "n1", h, "h1")
            .merge("m2", "k", h, "h2")
            .merge("n2", "h2", &a.vertical_on_apex.map, "nh")
            .multiply(l, "h1", "nh", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    });
    report.axiom(names[1], mode, &[m.labels(), m.labels(), n.labels()], |t| {
        let lhs = h.apply(&m.mult().col(t[0] * nm + t[1]).kron(&n.basis(t[2])));
        let rhs = Expr::basis(field, "m", nm, t[0])
            .tensor(Expr::basis(field, "k", nm, t[1]))
            .tensor(Expr::basis(field, "n", nn, t[2]))
            .coproduct(m, "m", "m1", "m2")
            .coproduct(n, "n", "n1", "n2")
            .merge("k", "n1", h, "h1")
            .merge("m1", "h1", &a.horizontal_on_apex.map, "mh")
            .merge("m2", "n2", h, "h2")
            .multiply(l, "mh", "h2", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    });
}

/// 2A5: `(m₁ ▷ (n₁ ▷ l)) h(m₂ ⊗ n₂) = h(m₁ ⊗ n₁)(n₂ ▷ (m₂ ▷ l))`.
fn pairing_intertwines(report: &mut Report, a: &Hopf2Action, mode: CheckMode) {
    let (l, m, n) = (&a.apex, &a.horizontal, &a.vertical);
    let field = l.field();
    let (ma, na, h) = (&a.horizontal_on_apex.map, &a.vertical_on_apex.map, &a.pairing);
    report.axiom("2A5", mode, &[m.labels(), n.labels(), l.labels()], |t| {
        let start = || {
            Expr::basis(field, "m", m.dim(), t[0])
                .tensor(Expr::basis(field, "n", n.dim(), t[1]))
                .tensor(Expr::basis(field, "l", l.dim(), t[2]))
                .coproduct(m, "m", "m1", "m2")
                .coproduct(n, "n", "n1", "n2")
        };
        let lhs = start()
            .merge("n1", "l", na, "nl")
            .merge("m1", "nl", ma, "mnl")
            .merge("m2", "n2", h, "h")
            .multiply(l, "mnl", "h", "r")
            .finish(&["r"]);
        let rhs = start()
            .merge("m2", "l", ma, "ml")
            .merge("n2", "ml", na, "nml")
            .merge("m1", "n1", h, "h")
            .multiply(l, "h", "nml", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    });
}

/// Four maps between the corners of two 2-actions.
#[derive(Clone, Debug)]
pub struct CornerMaps {
    pub apex: HopfMorphism,
    pub horizontal: HopfMorphism,
    pub vertical: HopfMorphism,
    pub base: HopfMorphism,
}

impl CornerMaps {
    pub fn all_bijective(&self) -> bool {
        [&self.apex, &self.horizontal, &self.vertical, &self.base].iter().all(|f| f.is_bijective())
    }

    pub fn all_identity_matrices(&self) -> bool {
        [&self.apex, &self.horizontal, &self.vertical, &self.base]
            .iter()
            .all(|f| f.same_as(&HopfMorphism::identity(&f.dom)) || f.map.same_as(&LinMap::identity(f.dom.field(), f.dom.dim())))
    }
}

/// Checks that four Hopf morphisms form a morphism of 2-actions: each is a
/// Hopf morphism, all five actions are respected, and `α ∘ h = h' ∘ (β ⊗ γ)`.
pub fn check_2action_morphism(src: &Hopf2Action, dst: &Hopf2Action, f: &CornerMaps, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("morphism {} -> {}", src.name(), dst.name()), mode);
    report.absorb("apex map: ", check_morphism(&f.apex, mode));
    report.absorb("horizontal map: ", check_morphism(&f.horizontal, mode));
    report.absorb("vertical map: ", check_morphism(&f.vertical, mode));
    report.absorb("base map: ", check_morphism(&f.base, mode));
    let equivariant = |name: &str, report: &mut Report, from: &HopfAction, to: &HopfAction, on_acting: &HopfMorphism, on_acted: &HopfMorphism| {
        let labels = to.acted.labels();
        report.axiom(name, mode, &[from.acting.labels(), from.acted.labels()], |t| {
            let lhs = on_acted.apply(&from.act_basis(t[0], t[1]));
            let rhs = to.act(&on_acting.image_of_basis(t[0]), &on_acted.image_of_basis(t[1]));
            differ(&lhs, &rhs, labels)
        });
    };
    equivariant("apex map respects base action", &mut report, &src.base_on_apex, &dst.base_on_apex, &f.base, &f.apex);
    equivariant(
        "apex map respects horizontal action",
        &mut report,
        &src.horizontal_on_apex,
        &dst.horizontal_on_apex,
        &f.horizontal,
        &f.apex,
    );
    equivariant(
        "apex map respects vertical action",
        &mut report,
        &src.vertical_on_apex,
        &dst.vertical_on_apex,
        &f.vertical,
        &f.apex,
    );
    equivariant(
        "horizontal map respects base action",
        &mut report,
        &src.base_on_horizontal,
        &dst.base_on_horizontal,
        &f.base,
        &f.horizontal,
    );
    equivariant(
        "vertical map respects base action",
        &mut report,
        &src.base_on_vertical,
        &dst.base_on_vertical,
        &f.base,
        &f.vertical,
    );
    let nn = src.vertical.dim();
    report.axiom("pairing is respected", mode, &[src.horizontal.labels(), src.vertical.labels()], |t| {
        let lhs = f.apex.apply(&src.pairing.col(t[0] * nn + t[1]));
        let arg = f.horizontal.image_of_basis(t[0]).kron(&f.vertical.image_of_basis(t[1]));
        differ(&lhs, &dst.pairing.apply(&arg), dst.apex.labels())
    });
    report.finish()
}
