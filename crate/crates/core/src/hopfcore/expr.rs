use super::FinHopf;
use crate::exactla::{Expr, Leg};

/// Hopf operations on the legs of an [`Expr`].
///
/// ```
/// use hopf_crossed::exactla::{Expr, Field};
/// use hopf_crossed::hopfcore::{group_algebra, FiniteGroup, HopfExpr};
///
/// let h = group_algebra(&FiniteGroup::symmetric(3), Field::Rationals);
/// // x₁ S(x₂) = ε(x) 1 for the transposition (12).
/// let x = Expr::basis(h.field(), "x", h.dim(), 1)
///     .coproduct(&h, "x", "x1", "x2")
///     .antipode(&h, "x2")
///     .multiply(&h, "x1", "x2", "y")
///     .finish(&["y"]);
/// assert_eq!(x, h.one());
/// ```
pub trait HopfExpr: Sized {
    /// Replaces `leg` by the two legs of its comultiplication.
    fn coproduct(self, h: &FinHopf, leg: Leg, first: Leg, second: Leg) -> Self;
    /// Multiplies two legs; the product takes the place of `left`.
    fn multiply(self, h: &FinHopf, left: Leg, right: Leg, to: Leg) -> Self;
    fn antipode(self, h: &FinHopf, leg: Leg) -> Self;
    /// Applies the counit and drops the leg.
    fn counit(self, h: &FinHopf, leg: Leg) -> Self;
}

impl HopfExpr for Expr {
    fn coproduct(self, h: &FinHopf, leg: Leg, first: Leg, second: Leg) -> Expr {
        self.split(leg, h.comult(), (first, h.dim()), (second, h.dim()))
    }

    fn multiply(self, h: &FinHopf, left: Leg, right: Leg, to: Leg) -> Expr {
        self.merge(left, right, h.mult(), to)
    }

    fn antipode(self, h: &FinHopf, leg: Leg) -> Expr {
        self.apply(leg, h.antipode())
    }

    fn counit(self, h: &FinHopf, leg: Leg) -> Expr {
        self.contract(leg, h.counit())
    }
}
