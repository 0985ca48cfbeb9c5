//! Hopf morphisms, Hopf subalgebras, Hopf kernels and related subspace tools.

use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{is_bijective, is_injective, nullspace, Echelon, Expr, LinMap, SparseVec};
use crate::hopfcore::{base_field, group_algebra, FinHopf, FiniteGroup, GroupHom, HopfExpr, HopfParts};
use crate::report::{differ, Report};

/// A linear map between Hopf algebras, meant to preserve all structure.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub dom: FinHopf,
    pub cod: FinHopf,
    pub map: LinMap,
}

impl HopfMorphism {
    pub fn new(dom: &FinHopf, cod: &FinHopf, map: LinMap) -> Result<HopfMorphism, Error> {
        if map.dom() != dom.dim() || map.cod() != cod.dim() || map.field() != dom.field() || dom.field() != cod.field() {
            return Err(Error::Input(format!(
                "a map {} -> {} must be {} x {} over {}",
                dom.name(),
                cod.name(),
                cod.dim(),
                dom.dim(),
                dom.field()
            )));
        }
        Ok(HopfMorphism { dom: dom.clone(), cod: cod.clone(), map })
    }

    pub fn identity(h: &FinHopf) -> HopfMorphism {
        HopfMorphism { dom: h.clone(), cod: h.clone(), map: LinMap::identity(h.field(), h.dim()) }
    }

    /// The unit `K -> H`.
    pub fn unit_of(h: &FinHopf) -> HopfMorphism {
        let k = base_field(h.field());
        let map = LinMap::from_columns(h.field(), 1, h.dim(), vec![h.one()]);
        HopfMorphism { dom: k, cod: h.clone(), map }
    }

    /// The counit `H -> K`.
    pub fn counit_of(h: &FinHopf) -> HopfMorphism {
        HopfMorphism { dom: h.clone(), cod: base_field(h.field()), map: h.counit().clone() }
    }

    /// The composite `a -> b`, `x ↦ ε(x) 1`.
    pub fn trivial(dom: &FinHopf, cod: &FinHopf) -> HopfMorphism {
        HopfMorphism::unit_of(cod).compose(&HopfMorphism::counit_of(dom))
    }

    /// The linearization of a group homomorphism between the given group algebras.
    pub fn from_group_hom(hom: &GroupHom, dom: &FinHopf, cod: &FinHopf) -> Result<HopfMorphism, Error> {
        let field = dom.field();
        let cols = hom.map.iter().map(|&y| SparseVec::basis(field, cod.dim(), y)).collect();
        HopfMorphism::new(dom, cod, LinMap::from_columns(field, dom.dim(), cod.dim(), cols))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &HopfMorphism) -> HopfMorphism {
        assert_eq!(first.cod.dim(), self.dom.dim(), "composing morphisms with mismatched dimensions");
        HopfMorphism { dom: first.dom.clone(), cod: self.cod.clone(), map: self.map.compose(&first.map) }
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        self.map.apply(v)
    }

    pub fn image_of_basis(&self, i: usize) -> SparseVec {
        self.map.col(i).into_owned()
    }

    pub fn is_injective(&self) -> bool {
        is_injective(&self.map)
    }

    pub fn is_bijective(&self) -> bool {
        is_bijective(&self.map)
    }

    /// Agreement with another morphism on every basis vector.
    pub fn same_as(&self, other: &HopfMorphism) -> bool {
        self.map.same_as(&other.map)
    }

    /// The same linear map with a different codomain object of equal dimension.
    pub fn retarget(&self, cod: &FinHopf) -> HopfMorphism {
        assert_eq!(cod.dim(), self.cod.dim());
        HopfMorphism { dom: self.dom.clone(), cod: cod.clone(), map: self.map.clone() }
    }
}

/// Checks that a linear map preserves product, unit, coproduct, counit and antipode.
pub fn check_morphism(f: &HopfMorphism, mode: CheckMode) -> Report {
    let (a, b) = (&f.dom, &f.cod);
    let mut report = Report::new(format!("morphism {} -> {}", a.name(), b.name()), mode);
    let n = a.dim();
    let labels = a.labels();
    let scalar = ["1".to_string()];
    report.axiom("multiplicative", mode, &[labels, labels], |t| {
        let lhs = f.apply(&a.mult().col(t[0] * n + t[1]));
        let rhs = b.mul(&f.map.col(t[0]), &f.map.col(t[1]));
        differ(&lhs, &rhs, b.labels())
    });
    report.axiom("unital", mode, &[&scalar], |_| differ(&f.apply(a.unit()), b.unit(), b.labels()));
    let pair_labels = b.tensor_labels();
    let ff = LinMap::tensor(&f.map, &f.map);
    report.axiom("comultiplicative", mode, &[labels], |t| {
        let lhs = b.delta(&f.map.col(t[0]));
        let rhs = ff.apply(&a.comult().col(t[0]));
        differ(&lhs, &rhs, &pair_labels)
    });
    report.axiom("counital", mode, &[labels], |t| {
        let (lhs, rhs) = (b.epsilon(&f.map.col(t[0])), a.epsilon(&a.basis(t[0])));
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    });
    report.axiom("antipode", mode, &[labels], |t| {
        let lhs = f.apply(&a.antipode().col(t[0]));
        let rhs = b.s(&f.map.col(t[0]));
        differ(&lhs, &rhs, b.labels())
    });
    report.finish()
}

/// A Hopf subalgebra of an ambient Hopf algebra, held as an echelon subspace.
#[derive(Clone, Debug)]
pub struct SubHopf {
    name: String,
    ambient: FinHopf,
    space: Echelon,
}

impl SubHopf {
    /// Validates closure under product, coproduct, antipode and unit.
    pub fn new(name: impl Into<String>, ambient: &FinHopf, space: Echelon) -> Result<SubHopf, Error> {
        let name = name.into();
        let h = ambient;
        assert_eq!(space.ambient(), h.dim(), "subspace of the wrong space");
        let fail = |what: &str| Err(Error::precondition(format!("{name} is not closed under {what} in {}", h.name())));
        if !space.contains(h.unit()) {
            return fail("the unit");
        }
        let basis = space.basis();
        for u in basis {
            if !space.contains(&h.s(u)) {
                return fail("the antipode");
            }
            if !tensor_contains(&space, &h.delta(u)) {
                return fail("the comultiplication");
            }
            for v in basis {
                if !space.contains(&h.mul(u, v)) {
                    return fail("the product");
                }
            }
        }
        Ok(SubHopf { name, ambient: h.clone(), space })
    }

    pub fn whole(h: &FinHopf) -> SubHopf {
        SubHopf { name: h.name().to_string(), ambient: h.clone(), space: Echelon::whole(h.field(), h.dim()) }
    }

    /// The image of an (injective or not) Hopf morphism.
    pub fn image(name: impl Into<String>, f: &HopfMorphism) -> Result<SubHopf, Error> {
        SubHopf::new(name, &f.cod, crate::exactla::image(&f.map))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ambient(&self) -> &FinHopf {
        &self.ambient
    }

    pub fn space(&self) -> &Echelon {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn basis(&self) -> &[SparseVec] {
        self.space.basis()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.space.contains(v)
    }

    /// Coordinates of an ambient element, failing if it lies outside.
    pub fn coords(&self, v: &SparseVec) -> Result<SparseVec, Error> {
        self.space.coords(v).ok_or_else(|| {
            Error::precondition(format!("{} does not lie in {}", v.render(self.ambient.labels()), self.name))
        })
    }

    pub fn intersect(&self, other: &SubHopf, name: impl Into<String>, budget: usize) -> Result<SubHopf, Error> {
        SubHopf::new(name, &self.ambient, self.space.intersect(&other.space, budget)?)
    }

    /// The subalgebra as a Hopf algebra in its own right, with its inclusion.
    pub fn to_hopf(&self) -> (FinHopf, HopfMorphism) {
        let h = &self.ambient;
        let field = h.field();
        let n = h.dim();
        let k = self.dim();
        let basis = self.basis().to_vec();
        let pivots = self.space.pivots();
        let coords = |v: &SparseVec| self.space.coords(v).expect("validated closure");
        let mut mult = Vec::with_capacity(k * k);
        for u in &basis {
            for v in &basis {
                mult.push(coords(&h.mul(u, v)));
            }
        }
        let comult = basis
            .iter()
            .map(|u| {
                let d = h.delta(u);
                let mut entries = Vec::new();
                for (a, pa) in pivots.iter().enumerate() {
                    for (b, pb) in pivots.iter().enumerate() {
                        let c = d.get(pa * n + pb);
                        if !c.is_zero() {
                            entries.push((a * k + b, c));
                        }
                    }
                }
                SparseVec::from_entries(field, k * k, entries)
            })
            .collect();
        let counit = basis.iter().map(|u| SparseVec::from_entries(field, 1, vec![(0, h.epsilon(u))])).collect();
        let antipode = basis.iter().map(|u| coords(&h.s(u))).collect();
        let labels = basis
            .iter()
            .map(|u| match u.entries() {
                [(i, c)] if c.is_one() => h.labels()[*i].clone(),
                _ => u.render(h.labels()),
            })
            .collect();
        let grouplike = h.grouplike_flags().map(|flags| {
            basis.iter().map(|u| matches!(u.entries(), [(i, c)] if c.is_one() && flags[*i])).collect()
        });
        let sub = FinHopf::new(HopfParts {
            name: self.name.clone(),
            field,
            labels,
            mult: LinMap::from_columns(field, k * k, k, mult),
            unit: coords(h.unit()),
            comult: LinMap::from_columns(field, k, k * k, comult),
            counit: LinMap::from_columns(field, k, 1, counit),
            antipode: LinMap::from_columns(field, k, k, antipode),
            grouplike,
        })
        .expect("subalgebra shapes");
        let incl = HopfMorphism::new(&sub, h, LinMap::from_columns(field, k, n, basis)).expect("inclusion shape");
        (sub, incl)
    }

    /// Stability under the adjoint action `a₁ u S(a₂)` of the ambient algebra.
    pub fn is_normal(&self) -> bool {
        let h = &self.ambient;
        let f = h.field();
        let (n, k) = (h.dim(), self.dim());
        let space = self.space.clone();
        (0..n).all(|a| {
            (0..k).all(|u| {
                let conj = Expr::basis(f, "a", n, a)
                    .tensor(Expr::vector("u", &space.basis()[u]))
                    .coproduct(h, "a", "a1", "a2")
                    .antipode(h, "a2")
                    .multiply(h, "a1", "u", "a1u")
                    .multiply(h, "a1u", "a2", "c")
                    .finish(&["c"]);
                space.contains(&conj)
            })
        })
    }
}

/// Whether a tensor in `H ⊗ H` lies in `U ⊗ U`.
fn tensor_contains(space: &Echelon, t: &SparseVec) -> bool {
    let n = space.ambient();
    residue_on_leg(space, t, n, true).is_zero() && residue_on_leg(space, t, n, false).is_zero()
}

/// Applies the reduction modulo `space` to one leg of a tensor in `H ⊗ H`.
fn residue_on_leg(space: &Echelon, t: &SparseVec, n: usize, first: bool) -> SparseVec {
    let f = space.field();
    let mut entries = Vec::new();
    for (p, c) in t.entries() {
        let (a, b) = (p / n, p % n);
        let leg = if first { a } else { b };
        for (q, d) in space.reduce(&SparseVec::basis(f, n, leg)).entries() {
            let idx = if first { q * n + b } else { a * n + q };
            entries.push((idx, c * d));
        }
    }
    SparseVec::from_entries(f, n * n, entries)
}

/// Whether every basis element of `u` commutes with every basis element of `v`.
pub fn commute_elementwise(u: &SubHopf, v: &SubHopf) -> bool {
    let h = u.ambient();
    u.basis().iter().all(|x| v.basis().iter().all(|y| h.mul(x, y) == h.mul(y, x)))
}

/// The Hopf kernel `{a : f(a₁) ⊗ a₂ = 1 ⊗ a}`, cross-checked against
/// `{a : a₁ ⊗ f(a₂) = a ⊗ 1}`.
pub fn hker(f: &HopfMorphism, budget: usize) -> Result<SubHopf, Error> {
    let (a, b) = (f.dom.clone(), f.cod.clone());
    let (n, m) = (a.dim(), b.dim());
    let field = a.field();
    let (fa, fb) = (f.clone(), f.clone());
    let (aa, bb) = (a.clone(), b.clone());
    let left = LinMap::from_fn_uncached(field, n, m * n, move |j| {
        Expr::basis(field, "a", n, j)
            .coproduct(&aa, "a", "a1", "a2")
            .apply("a1", &fa.map)
            .finish(&["a1", "a2"])
            .sub(&bb.unit().kron(&aa.basis(j)))
    });
    let (aa, bb) = (a.clone(), b.clone());
    let right = LinMap::from_fn_uncached(field, n, n * m, move |j| {
        Expr::basis(field, "a", n, j)
            .coproduct(&aa, "a", "a1", "a2")
            .apply("a2", &fb.map)
            .finish(&["a1", "a2"])
            .sub(&aa.basis(j).kron(bb.unit()))
    });
    let k1 = nullspace(&left, budget)?;
    let k2 = nullspace(&right, budget)?;
    if k1 != k2 {
        return Err(Error::precondition(format!(
            "the two forms of the Hopf kernel of {} -> {} disagree",
            a.name(),
            b.name()
        )));
    }
    SubHopf::new(format!("HKer({}->{})", a.name(), b.name()), &a, Echelon::span(field, n, &k1))
}

/// The largest subcoalgebra of `h` contained in the subspace `w`.
///
/// Iterates `W ← {w ∈ W : Δ(w) ∈ W ⊗ H ∩ H ⊗ W}` until the dimension stabilizes.
pub fn largest_subcoalgebra_in(h: &FinHopf, w: &Echelon, budget: usize) -> Result<Echelon, Error> {
    let n = h.dim();
    let field = h.field();
    let mut current = w.clone();
    loop {
        let (space, hh) = (current.clone(), h.clone());
        let defect = LinMap::from_fn_uncached(field, current.rank(), 2 * n * n, move |j| {
            let d = hh.delta(&space.basis()[j]);
            let left = residue_on_leg(&space, &d, n, true);
            let right = residue_on_leg(&space, &d, n, false);
            let mut entries: Vec<_> = left.entries().to_vec();
            entries.extend(right.entries().iter().map(|(i, c)| (i + n * n, c.clone())));
            SparseVec::from_entries(field, 2 * n * n, entries)
        });
        let kernel = nullspace(&defect, budget)?;
        if kernel.len() == current.rank() {
            return Ok(current);
        }
        let vectors: Vec<SparseVec> = kernel.iter().map(|c| current.combine(c)).collect();
        current = Echelon::span(field, n, &vectors);
    }
}

/// Confirms the degenerate case of the structure theorem for a Hopf algebra
/// without primitives: the group-likes span it, so `K[G(H)] -> H` is an isomorphism.
///
/// Returns the group of group-likes and the isomorphism.
pub fn cgkmm_degenerate(h: &FinHopf, cfg: &Config) -> Result<(FiniteGroup, HopfMorphism), Error> {
    let prim = h.primitives(cfg.budget)?;
    if prim.rank() != 0 {
        return Err(Error::precondition(format!("{} has {} primitive directions", h.name(), prim.rank())));
    }
    let gl = h.grouplikes();
    for &g in &gl {
        if !h.is_grouplike(&h.basis(g)) {
            return Err(Error::precondition(format!("{} is flagged group-like but is not", h.labels()[g])));
        }
    }
    let pos = |v: &SparseVec| match v.entries() {
        [(i, c)] if c.is_one() => gl.iter().position(|g| g == i),
        _ => None,
    };
    let mut table = Vec::with_capacity(gl.len());
    for &a in &gl {
        let mut row = Vec::with_capacity(gl.len());
        for &b in &gl {
            let prod = h.mul(&h.basis(a), &h.basis(b));
            row.push(pos(&prod).ok_or_else(|| {
                Error::precondition(format!("group-likes of {} are not closed under products", h.name()))
            })?);
        }
        table.push(row);
    }
    let labels = gl.iter().map(|&g| h.labels()[g].clone()).collect();
    let group = FiniteGroup::new(format!("G({})", h.name()), labels, table)?;
    let kg = group_algebra(&group, h.field());
    let cols = gl.iter().map(|&g| h.basis(g)).collect();
    let iso = HopfMorphism::new(&kg, h, LinMap::from_columns(h.field(), gl.len(), h.dim(), cols))?;
    check_morphism(&iso, CheckMode::Full).into_result()?;
    if !iso.is_bijective() {
        return Err(Error::precondition(format!(
            "the {} group-likes of {} do not span its {} dimensions",
            gl.len(),
            h.name(),
            h.dim()
        )));
    }
    Ok((group, iso))
}
