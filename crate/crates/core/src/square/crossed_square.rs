use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{Expr, LinMap};
use crate::hopfcore::{FinHopf, HopfExpr};
use crate::morphism::{check_morphism, HopfMorphism};
use crate::report::{differ, Report};
use crate::xmod::{check_crossed_module, check_xmod_morphism, CrossedModule};

use super::two_action::{
    check_2action_morphism, pairing_is_coalgebra_map, pairing_is_linear, pairing_product_rules, CornerMaps,
    Hopf2Action,
};
use crate::action::HopfAction;

/// A Hopf crossed square
///
/// ```text
///   apex ──top──▶ horizontal
///    │                │
///   left            right
///    ▼                ▼
///  vertical ─bottom─▶ base
/// ```
///
/// with actions of `base` on the other three corners and a pairing
/// `h : horizontal ⊗ vertical -> apex`.
#[derive(Clone, Debug)]
pub struct CrossedSquare {
    pub top: HopfMorphism,
    pub left: HopfMorphism,
    pub right: HopfMorphism,
    pub bottom: HopfMorphism,
    pub base_on_apex: HopfAction,
    pub base_on_horizontal: HopfAction,
    pub base_on_vertical: HopfAction,
    pub pairing: LinMap,
}

impl CrossedSquare {
    /// Assembles a crossed square; under paranoia every axiom is checked.
    pub fn new(
        top: &HopfMorphism,
        left: &HopfMorphism,
        right: &HopfMorphism,
        bottom: &HopfMorphism,
        actions: [&HopfAction; 3],
        pairing: LinMap,
        cfg: &Config,
    ) -> Result<CrossedSquare, Error> {
        let sq = CrossedSquare::unchecked(top, left, right, bottom, actions, pairing)?;
        cfg.assert(sq.largest_dim(), |mode| check_crossed_square(&sq, mode))?;
        Ok(sq)
    }

    /// Shape checks only. `actions` are the base acting on apex, horizontal
    /// and vertical corner, in that order.
    pub fn unchecked(
        top: &HopfMorphism,
        left: &HopfMorphism,
        right: &HopfMorphism,
        bottom: &HopfMorphism,
        actions: [&HopfAction; 3],
        pairing: LinMap,
    ) -> Result<CrossedSquare, Error> {
        let [on_apex, on_horizontal, on_vertical] = actions;
        let fits = top.dom.dim() == left.dom.dim()
            && top.cod.dim() == right.dom.dim()
            && left.cod.dim() == bottom.dom.dim()
            && right.cod.dim() == bottom.cod.dim()
            && on_apex.acting.dim() == right.cod.dim()
            && on_horizontal.acting.dim() == right.cod.dim()
            && on_vertical.acting.dim() == right.cod.dim()
            && on_apex.acted.dim() == top.dom.dim()
            && on_horizontal.acted.dim() == top.cod.dim()
            && on_vertical.acted.dim() == left.cod.dim()
            && pairing.dom() == top.cod.dim() * left.cod.dim()
            && pairing.cod() == top.dom.dim();
        if !fits {
            return Err(Error::Input("the maps, actions and pairing of a crossed square do not fit together".into()));
        }
        Ok(CrossedSquare {
            top: top.clone(),
            left: left.clone(),
            right: right.clone(),
            bottom: bottom.clone(),
            base_on_apex: on_apex.clone(),
            base_on_horizontal: on_horizontal.clone(),
            base_on_vertical: on_vertical.clone(),
            pairing,
        })
    }

    pub fn apex(&self) -> &FinHopf {
        &self.top.dom
    }

    pub fn horizontal(&self) -> &FinHopf {
        &self.top.cod
    }

    pub fn vertical(&self) -> &FinHopf {
        &self.left.cod
    }

    pub fn base(&self) -> &FinHopf {
        &self.right.cod
    }

    /// `κ = right ∘ top`, the diagonal.
    pub fn diagonal(&self) -> HopfMorphism {
        self.right.compose(&self.top)
    }

    pub fn largest_dim(&self) -> usize {
        [self.apex().dim(), self.horizontal().dim(), self.vertical().dim(), self.base().dim()]
            .into_iter()
            .max()
            .unwrap_or(1)
    }

    pub fn name(&self) -> String {
        format!(
            "({}, {}, {}, {})",
            self.apex().name(),
            self.horizontal().name(),
            self.vertical().name(),
            self.base().name()
        )
    }

    /// `(base, horizontal, right)` with its action.
    pub fn right_xmod(&self) -> CrossedModule {
        CrossedModule::unchecked(&self.right, &self.base_on_horizontal).expect("square shapes")
    }

    /// `(base, vertical, bottom)` with its action.
    pub fn bottom_xmod(&self) -> CrossedModule {
        CrossedModule::unchecked(&self.bottom, &self.base_on_vertical).expect("square shapes")
    }

    /// `(base, apex, κ)` with its action.
    pub fn diagonal_xmod(&self) -> CrossedModule {
        CrossedModule::unchecked(&self.diagonal(), &self.base_on_apex).expect("square shapes")
    }

    /// `(horizontal, apex, top)` with the action through `right`.
    pub fn top_xmod(&self) -> CrossedModule {
        CrossedModule::unchecked(&self.top, &self.base_on_apex.through(&self.right)).expect("square shapes")
    }

    /// `(vertical, apex, left)` with the action through `bottom`.
    pub fn left_xmod(&self) -> CrossedModule {
        CrossedModule::unchecked(&self.left, &self.base_on_apex.through(&self.bottom)).expect("square shapes")
    }
}

/// The 2-action of a crossed square: the side corners act on the apex
/// through `right` and `bottom`.
pub fn square_to_2action(sq: &CrossedSquare) -> Hopf2Action {
    Hopf2Action {
        apex: sq.apex().clone(),
        horizontal: sq.horizontal().clone(),
        vertical: sq.vertical().clone(),
        base: sq.base().clone(),
        base_on_apex: sq.base_on_apex.clone(),
        base_on_horizontal: sq.base_on_horizontal.clone(),
        base_on_vertical: sq.base_on_vertical.clone(),
        horizontal_on_apex: sq.base_on_apex.through(&sq.right),
        vertical_on_apex: sq.base_on_apex.through(&sq.bottom),
        pairing: sq.pairing.clone(),
    }
}

/// [`square_to_2action`] with the resulting 2-action checked under paranoia.
pub fn square_to_2action_checked(sq: &CrossedSquare, cfg: &Config) -> Result<Hopf2Action, Error> {
    let a = square_to_2action(sq);
    cfg.assert(a.largest_dim(), |mode| super::two_action::check_2action(&a, mode))?;
    Ok(a)
}

/// The transposed square `(L, N, M, P, S ∘ h ∘ σ, left, top, bottom, right)`.
pub fn swap_square(sq: &CrossedSquare) -> CrossedSquare {
    let field = sq.apex().field();
    let sigma = LinMap::twist(field, sq.vertical().dim(), sq.horizontal().dim());
    CrossedSquare {
        top: sq.left.clone(),
        left: sq.top.clone(),
        right: sq.bottom.clone(),
        bottom: sq.right.clone(),
        base_on_apex: sq.base_on_apex.clone(),
        base_on_horizontal: sq.base_on_vertical.clone(),
        base_on_vertical: sq.base_on_horizontal.clone(),
        pairing: sq.apex().antipode().compose(&sq.pairing.compose(&sigma)),
    }
}

/// Checks CS1 to CS6, that `h` is a coalgebra map, that the square commutes,
/// and the three structural consequences: the top and left edges are crossed
/// modules, the two edge pairs are morphisms of crossed modules, and the
/// transposed square passes the same axioms.
pub fn check_crossed_square(sq: &CrossedSquare, mode: CheckMode) -> Report {
    let mut report = axioms(sq, mode);
    let top = sq.top_xmod();
    let left = sq.left_xmod();
    let top_report = check_crossed_module(&top, mode);
    let left_report = check_crossed_module(&left, mode);
    report.record("top edge is a crossed module", top_report.passed(), Some(top_report.summary()));
    report.record("left edge is a crossed module", left_report.passed(), Some(left_report.summary()));
    let diag = sq.diagonal_xmod();
    let base_id = HopfMorphism::identity(sq.base());
    let apex_id = HopfMorphism::identity(sq.apex());
    let edge_to_side = check_xmod_morphism(&diag, &sq.right_xmod(), &sq.top, &base_id, mode);
    let top_to_diag = check_xmod_morphism(&top, &diag, &apex_id, &sq.right, mode);
    report.record("(top, id) is a crossed module morphism", edge_to_side.passed(), Some(edge_to_side.summary()));
    report.record("(id, right) is a crossed module morphism", top_to_diag.passed(), Some(top_to_diag.summary()));
    let swapped = axioms(&swap_square(sq), mode);
    report.record("transposed square is a crossed square", swapped.passed(), Some(swapped.summary()));
    report.finish()
}

fn axioms(sq: &CrossedSquare, mode: CheckMode) -> Report {
    let (l, m, n, p) = (sq.apex(), sq.horizontal(), sq.vertical(), sq.base());
    let field = l.field();
    let (nl, nm, nn) = (l.dim(), m.dim(), n.dim());
    let h = &sq.pairing;
    let (pl, pm, pn) = (&sq.base_on_apex.map, &sq.base_on_horizontal.map, &sq.base_on_vertical.map);
    let mut report = Report::new(format!("crossed square {}", sq.name()), mode);

    let commutes = sq.right.compose(&sq.top).same_as(&sq.bottom.compose(&sq.left));
    report.record("square commutes", commutes, None);
    for (prefix, f) in [("top: ", &sq.top), ("left: ", &sq.left), ("right: ", &sq.right), ("bottom: ", &sq.bottom)] {
        report.absorb(prefix, check_morphism(f, mode));
    }

    let sides = [
        ("CS1 right", check_crossed_module(&sq.right_xmod(), mode)),
        ("CS1 bottom", check_crossed_module(&sq.bottom_xmod(), mode)),
        ("CS1 diagonal", check_crossed_module(&sq.diagonal_xmod(), mode)),
    ];
    let cs1 = sides.iter().all(|(_, r)| r.passed());
    for (prefix, r) in sides {
        report.absorb(&format!("{prefix}: "), r);
    }
    report.record("CS1", cs1, None);

    let equivariant = |name: &str, report: &mut Report, f: &HopfMorphism, on_dom: &HopfAction, on_cod: &HopfAction| {
        report.axiom(name, mode, &[p.labels(), f.dom.labels()], |t| {
            let lhs = f.apply(&on_dom.act_basis(t[0], t[1]));
            let rhs = on_cod.map.apply(&p.basis(t[0]).kron(&f.image_of_basis(t[1])));
            differ(&lhs, &rhs, f.cod.labels())
        });
    };
    equivariant("CS2.1", &mut report, &sq.top, &sq.base_on_apex, &sq.base_on_horizontal);
    equivariant("CS2.2", &mut report, &sq.left, &sq.base_on_apex, &sq.base_on_vertical);

    let a = square_to_2action(sq);
    pairing_is_coalgebra_map(&mut report, &a, mode);
    pairing_is_linear(&mut report, &a, "CS3", mode);

    report.axiom("CS4.1", mode, &[m.labels(), n.labels()], |t| {
        let lhs = sq.top.apply(&h.col(t[0] * nn + t[1]));
        let rhs = Expr::basis(field, "m", nm, t[0])
            .tensor(Expr::basis(field, "n", nn, t[1]))
            .coproduct(m, "m", "m1", "m2")
            .antipode(m, "m2")
            .apply("n", &sq.bottom.map)
            .merge("n", "m2", pm, "x")
            .multiply(m, "m1", "x", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, m.labels())
    });
    report.axiom("CS4.2", mode, &[m.labels(), n.labels()], |t| {
        let lhs = sq.left.apply(&h.col(t[0] * nn + t[1]));
        let rhs = Expr::basis(field, "m", nm, t[0])
            .tensor(Expr::basis(field, "n", nn, t[1]))
            .coproduct(n, "n", "n1", "n2")
            .apply("m", &sq.right.map)
            .merge("m", "n1", pn, "x")
            .antipode(n, "n2")
            .multiply(n, "x", "n2", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, n.labels())
    });
    report.axiom("CS5.1", mode, &[l.labels(), n.labels()], |t| {
        let lhs = h.apply(&sq.top.image_of_basis(t[0]).kron(&n.basis(t[1])));
        let rhs = Expr::basis(field, "l", nl, t[0])
            .tensor(Expr::basis(field, "n", nn, t[1]))
            .coproduct(l, "l", "l1", "l2")
            .antipode(l, "l2")
            .apply("n", &sq.bottom.map)
            .merge("n", "l2", pl, "x")
            .multiply(l, "l1", "x", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    });
    report.axiom("CS5.2", mode, &[m.labels(), l.labels()], |t| {
        let lhs = h.apply(&m.basis(t[0]).kron(&sq.left.image_of_basis(t[1])));
        let rhs = Expr::basis(field, "m", nm, t[0])
            .tensor(Expr::basis(field, "l", nl, t[1]))
            .coproduct(l, "l", "l1", "l2")
            .apply("m", &sq.right.map)
            .merge("m", "l1", pl, "x")
            .antipode(l, "l2")
            .multiply(l, "x", "l2", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, l.labels())
    });
    pairing_product_rules(&mut report, &a, ["CS6.1", "CS6.2"], mode);
    report.finish()
}

/// Checks that four corner maps form a morphism of crossed squares: a
/// morphism of the underlying 2-actions whose four faces commute.
pub fn check_square_morphism(src: &CrossedSquare, dst: &CrossedSquare, f: &CornerMaps, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("morphism of crossed squares {} -> {}", src.name(), dst.name()), mode);
    report.absorb("", check_2action_morphism(&square_to_2action(src), &square_to_2action(dst), f, mode));
    let faces = [
        ("top face", dst.top.compose(&f.apex), f.horizontal.compose(&src.top)),
        ("left face", dst.left.compose(&f.apex), f.vertical.compose(&src.left)),
        ("right face", dst.right.compose(&f.horizontal), f.base.compose(&src.right)),
        ("bottom face", dst.bottom.compose(&f.vertical), f.base.compose(&src.bottom)),
    ];
    for (name, lhs, rhs) in faces {
        report.record(name, lhs.same_as(&rhs), None);
    }
    report.finish()
}
