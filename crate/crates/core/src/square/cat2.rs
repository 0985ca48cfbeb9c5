use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::LinMap;
use crate::hopfcore::FinHopf;
use crate::morphism::{check_morphism, commute_elementwise, hker, HopfMorphism, SubHopf};
use crate::report::Report;
use crate::xmod::{check_cat1, Cat1, CrossedModule, ReflexiveGraph};

use super::crossed_square::{check_square_morphism, square_to_2action, CrossedSquare};
use super::pt2::{
    canonical_corner_maps, check_split_epi2, collapse, pt2_to_2action, psi_iso, Corner, Corners, Pt2Build, SplitEpi2,
};
use super::two_action::Hopf2Action;

/// A cat²-Hopf algebra: a 2-fold split epimorphism with a second retraction
/// (a target) on each side, making both sides cat¹ objects that are
/// compatible with each other.
#[derive(Clone, Debug)]
pub struct Cat2 {
    pub base: SplitEpi2,
    pub first_target: HopfMorphism,
    pub second_target: HopfMorphism,
}

impl Cat2 {
    pub fn new(base: SplitEpi2, first_target: &HopfMorphism, second_target: &HopfMorphism, cfg: &Config) -> Result<Cat2, Error> {
        let c = Cat2::unchecked(base, first_target, second_target)?;
        if let Some(mode) = cfg.mode_for(c.base.total.dim()) {
            check_cat2(&c, mode, cfg.budget)?.into_result()?;
        }
        Ok(c)
    }

    pub fn unchecked(base: SplitEpi2, first_target: &HopfMorphism, second_target: &HopfMorphism) -> Result<Cat2, Error> {
        if first_target.dom.dim() != base.total.dim()
            || second_target.dom.dim() != base.total.dim()
            || first_target.cod.dim() != base.first.dim()
            || second_target.cod.dim() != base.second.dim()
        {
            return Err(Error::Input("the targets of a cat² object do not fit its split epimorphisms".into()));
        }
        Ok(Cat2 { base, first_target: first_target.clone(), second_target: second_target.clone() })
    }

    /// Every corner equal to `h` and every map the identity.
    pub fn identity(h: &FinHopf) -> Cat2 {
        let id = HopfMorphism::identity(h);
        let base = SplitEpi2::unchecked(&id, &id, &id, &id).expect("identity shapes");
        Cat2 { base, first_target: id.clone(), second_target: id }
    }

    pub fn first_graph(&self) -> ReflexiveGraph {
        ReflexiveGraph {
            arrows: self.base.total.clone(),
            objects: self.base.first.clone(),
            source: self.base.first_retraction.clone(),
            target: self.first_target.clone(),
            identity: self.base.first_inclusion.clone(),
        }
    }

    pub fn second_graph(&self) -> ReflexiveGraph {
        ReflexiveGraph {
            arrows: self.base.total.clone(),
            objects: self.base.second.clone(),
            source: self.base.second_retraction.clone(),
            target: self.second_target.clone(),
            identity: self.base.second_inclusion.clone(),
        }
    }

    /// `i₁ ∘ t₁` on the total algebra.
    pub fn first_target_idempotent(&self) -> HopfMorphism {
        self.base.first_inclusion.compose(&self.first_target)
    }

    /// `i₂ ∘ t₂` on the total algebra.
    pub fn second_target_idempotent(&self) -> HopfMorphism {
        self.base.second_inclusion.compose(&self.second_target)
    }
}

/// Checks both cat¹ structures and the compatibilities 2C1 to 2C4.
pub fn check_cat2(c: &Cat2, mode: CheckMode, budget: usize) -> Result<Report, Error> {
    let mut report = Report::new(format!("cat² on {}", c.base.total.name()), mode);
    report.absorb("", check_split_epi2(&c.base, mode));
    report.absorb("first target: ", check_morphism(&c.first_target, mode));
    report.absorb("second target: ", check_morphism(&c.second_target, mode));
    let id1 = HopfMorphism::identity(&c.base.first);
    let id2 = HopfMorphism::identity(&c.base.second);
    report.record("first target splits", c.first_target.compose(&c.base.first_inclusion).same_as(&id1), None);
    report.record("second target splits", c.second_target.compose(&c.base.second_inclusion).same_as(&id2), None);
    let first_commute =
        commute_elementwise(&hker(&c.base.first_retraction, budget)?, &hker(&c.first_target, budget)?);
    let second_commute =
        commute_elementwise(&hker(&c.base.second_retraction, budget)?, &hker(&c.second_target, budget)?);
    report.record("first kernel commutation", first_commute, None);
    report.record("second kernel commutation", second_commute, None);
    let (s1, s2) = (c.base.first_idempotent(), c.base.second_idempotent());
    let (t1, t2) = (c.first_target_idempotent(), c.second_target_idempotent());
    let commute = |f: &HopfMorphism, g: &HopfMorphism| f.compose(g).same_as(&g.compose(f));
    report.record("2C2", commute(&t1, &t2), None);
    report.record("2C3", commute(&s1, &t2), None);
    report.record("2C4", commute(&t1, &s2), None);
    Ok(report.finish())
}

/// The cat² object of a crossed square with the pieces it is assembled from.
#[derive(Clone, Debug)]
pub struct Cat2Build {
    pub cat2: Cat2,
    pub build: Pt2Build,
    /// `d(l ⊗ n) = λ(l) ⊗ ν(n)` from `L ⋊ N` to `M ⋊ P`.
    pub first_xmod: CrossedModule,
    /// `d'(l ⊗ m) = λ'(l) ⊗ μ(m)` from `L ⋊ M` to `N ⋊ P`.
    pub second_xmod: CrossedModule,
    /// `ψ` into the construction of the transposed square.
    pub psi: HopfMorphism,
    /// The checks on `ψ` and on how it relates the two second retractions.
    pub report: Report,
}

fn corner_boundary(
    inner: &FinHopf,
    first: &FinHopf,
    along: &HopfMorphism,
    across: &HopfMorphism,
) -> Result<HopfMorphism, Error> {
    let (f, g) = (along.clone(), across.clone());
    let n = across.dom.dim();
    let map = LinMap::from_fn(inner.field(), inner.dim(), first.dim(), move |j| {
        f.map.col(j / n).kron(&g.map.col(j % n))
    });
    HopfMorphism::new(inner, first, map)
}

/// `γ(x ⊗ b) = d(x) b` on `X ⋊ B`.
fn target_of(total: &FinHopf, cm: &CrossedModule) -> Result<HopfMorphism, Error> {
    let (b, d) = (cm.base.clone(), cm.boundary.clone());
    let nb = b.dim();
    let map = LinMap::from_fn(b.field(), total.dim(), nb, move |j| b.mul(&d.map.col(j / nb), &b.basis(j % nb)));
    HopfMorphism::new(total, &cm.base, map)
}

/// The cat² object `(L ⋊ N) ⋊ (M ⋊ P)` of a crossed square.
pub fn square_to_cat2(sq: &CrossedSquare, cfg: &Config) -> Result<Cat2Build, Error> {
    let a = square_to_2action(sq);
    let psi = psi_iso(&a, cfg)?;
    let (build, swapped) = (&psi.build, &psi.swapped);
    let d = corner_boundary(&build.inner.algebra, &build.first.algebra, &sq.top, &sq.bottom)?;
    let first_xmod = CrossedModule::new(&d, &build.outer.action, cfg)?;
    let d2 = corner_boundary(&swapped.inner.algebra, &swapped.first.algebra, &sq.left, &sq.right)?;
    let second_xmod = CrossedModule::new(&d2, &swapped.outer.action, cfg)?;
    let first_target = target_of(&build.pt2.total, &first_xmod)?;
    let second_target = second_target_formula(sq, build)?;
    let swapped_target = target_of(&swapped.pt2.total, &second_xmod)?;
    let mut report = psi.report.clone();
    report.record("second target = swapped first target ∘ ψ", swapped_target.compose(&psi.forward).map.same_as(&second_target.map), None);
    let report = report.finish();
    if !report.passed() {
        return Err(Error::Axiom(Box::new(report)));
    }
    let cat2 = Cat2::new(build.pt2.clone(), &first_target, &second_target, cfg)?;
    Ok(Cat2Build { cat2, build: build.clone(), first_xmod, second_xmod, psi: psi.forward, report })
}

/// `t₂(l ⊗ n ⊗ m ⊗ p) = λ'(l) n ⊗ μ(m) p`, computed directly.
pub fn second_target_formula(sq: &CrossedSquare, build: &Pt2Build) -> Result<HopfMorphism, Error> {
    let a = square_to_2action(sq);
    let (nn, nm, np) = (a.vertical.dim(), a.horizontal.dim(), a.base.dim());
    let (n, p) = (a.vertical.clone(), a.base.clone());
    let (left, right) = (sq.left.clone(), sq.right.clone());
    let total = &build.pt2.total;
    let map = LinMap::from_fn(total.field(), total.dim(), nn * np, move |j| {
        let (pi, rest) = (j % np, j / np);
        let (mi, rest) = (rest % nm, rest / nm);
        let (ni, li) = (rest % nn, rest / nn);
        let x = n.mul(&left.map.col(li), &n.basis(ni));
        let y = p.mul(&right.map.col(mi), &p.basis(pi));
        x.kron(&y)
    });
    HopfMorphism::new(total, &build.second.algebra, map)
}

fn into_corner(to: &Corner, f: &HopfMorphism) -> Result<HopfMorphism, Error> {
    let cols = (0..f.dom.dim()).map(|i| to.space.coords(&f.image_of_basis(i))).collect::<Result<Vec<_>, _>>()?;
    HopfMorphism::new(&f.dom, &to.hopf, LinMap::from_columns(f.cod.field(), f.dom.dim(), to.hopf.dim(), cols))
}

/// The crossed square of a cat² object: the four corners of its 2-fold split
/// epimorphism with the targets restricted to them.
pub fn cat2_to_square(c: &Cat2, cfg: &Config) -> Result<(CrossedSquare, Corners), Error> {
    let (a, corners) = pt2_to_2action(&c.base, cfg)?;
    let t1 = c.first_target_idempotent();
    let t2 = c.second_target_idempotent();
    let restrict = |from: &Corner, to: &Corner, f: &HopfMorphism, what: &str| {
        into_corner(to, &f.compose(&from.inclusion)).map_err(|_| {
            Error::precondition(format!("{what} does not carry {} into {}", from.space.name(), to.space.name()))
        })
    };
    let top = restrict(&corners.apex, &corners.horizontal, &t1, "the first target")?;
    let left = restrict(&corners.apex, &corners.vertical, &t2, "the second target")?;
    let right = restrict(&corners.horizontal, &corners.base, &t2, "the second target")?;
    let bottom = restrict(&corners.vertical, &corners.base, &t1, "the first target")?;
    let sq = CrossedSquare::new(
        &top,
        &left,
        &right,
        &bottom,
        [&a.base_on_apex, &a.base_on_horizontal, &a.base_on_vertical],
        a.pairing.clone(),
        cfg,
    )?;
    cfg.assert(sq.largest_dim(), |mode| derived_identities(&a, &sq, mode))?;
    Ok((sq, corners))
}

/// Conjugation by a side corner agrees with conjugation by its image in the
/// base corner.
pub fn derived_identities(a: &Hopf2Action, sq: &CrossedSquare, mode: CheckMode) -> Report {
    let mut report = Report::new(format!("target identities for {}", sq.name()), mode);
    let through_right = sq.base_on_apex.through(&sq.right);
    let through_bottom = sq.base_on_apex.through(&sq.bottom);
    report.record("horizontal conjugation factors through the target", through_right.map.same_as(&a.horizontal_on_apex.map), None);
    report.record("vertical conjugation factors through the target", through_bottom.map.same_as(&a.vertical_on_apex.map), None);
    report.finish()
}

/// Reads a cat² object as a double groupoid: the two arrow structures on the
/// total algebra, the two induced structures on the side algebras over the
/// common corner, and the commuting squares between them.
pub fn cat2_to_double_groupoid(c: &Cat2, cfg: &Config) -> Result<Report, Error> {
    let s = &c.base;
    let mode = cfg.explicit_mode(s.total.dim());
    let mut report = Report::new(format!("double groupoid of {}", s.total.name()), mode);
    let first_graph = c.first_graph();
    let second_graph = c.second_graph();
    report.absorb("first arrows: ", check_cat1(&Cat1 { graph: first_graph.clone(), origin: None }, mode, cfg.budget)?);
    report.absorb("second arrows: ", check_cat1(&Cat1 { graph: second_graph.clone(), origin: None }, mode, cfg.budget)?);

    let first = SubHopf::image(s.first.name(), &s.first_inclusion)?;
    let second = SubHopf::image(s.second.name(), &s.second_inclusion)?;
    let space = first.intersect(&second, format!("{}∩{}", s.first.name(), s.second.name()), cfg.budget)?;
    let (hopf, inclusion) = space.to_hopf();
    let common = Corner { space, hopf, inclusion };
    let (s1, t1) = (s.first_idempotent(), c.first_target_idempotent());
    let (s2, t2) = (s.second_idempotent(), c.second_target_idempotent());
    let side = |name: &str, report: &mut Report, f: &HopfMorphism| match into_corner(&common, f) {
        Ok(g) => {
            report.record(&format!("{name} lands in the common corner"), true, None);
            Some(g)
        }
        Err(e) => {
            report.record(&format!("{name} lands in the common corner"), false, Some(e.to_string()));
            None
        }
    };
    let first_source = side("second source on the first side", &mut report, &s2.compose(&s.first_inclusion));
    let first_target = side("second target on the first side", &mut report, &t2.compose(&s.first_inclusion));
    let second_source = side("first source on the second side", &mut report, &s1.compose(&s.second_inclusion));
    let second_target = side("first target on the second side", &mut report, &t1.compose(&s.second_inclusion));
    let (Some(fs), Some(ft), Some(ss), Some(st)) = (first_source, first_target, second_source, second_target) else {
        return Ok(report.finish());
    };
    let first_identity = s.first_retraction.compose(&common.inclusion);
    let second_identity = s.second_retraction.compose(&common.inclusion);
    let first_side = ReflexiveGraph {
        arrows: s.first.clone(),
        objects: common.hopf.clone(),
        source: fs.clone(),
        target: ft.clone(),
        identity: first_identity.clone(),
    };
    let second_side = ReflexiveGraph {
        arrows: s.second.clone(),
        objects: common.hopf.clone(),
        source: ss.clone(),
        target: st.clone(),
        identity: second_identity.clone(),
    };
    report.absorb("first side: ", check_cat1(&Cat1 { graph: first_side, origin: None }, mode, cfg.budget)?);
    report.absorb("second side: ", check_cat1(&Cat1 { graph: second_side, origin: None }, mode, cfg.budget)?);

    let horizontal = [("source", &first_graph.source, &ss), ("target", &first_graph.target, &st)];
    let vertical = [("source", &second_graph.source, &fs), ("target", &second_graph.target, &ft)];
    for (hname, h_top, h_side) in horizontal {
        for (vname, v_top, v_side) in vertical {
            let lhs = v_side.compose(h_top);
            let rhs = h_side.compose(v_top);
            report.record(&format!("first {hname} and second {vname} commute"), lhs.same_as(&rhs), None);
        }
    }
    for (name, h_top, h_side) in horizontal {
        let lhs = h_top.compose(&s.second_inclusion);
        let rhs = first_identity.compose(h_side);
        report.record(&format!("first {name} preserves second identities"), lhs.same_as(&rhs), None);
    }
    for (name, v_top, v_side) in vertical {
        let lhs = v_top.compose(&s.first_inclusion);
        let rhs = second_identity.compose(v_side);
        report.record(&format!("second {name} preserves first identities"), lhs.same_as(&rhs), None);
    }
    let lhs = s.first_inclusion.compose(&first_identity);
    let rhs = s.second_inclusion.compose(&second_identity);
    report.record("identities commute", lhs.same_as(&rhs), None);
    Ok(report.finish())
}

/// Compares a cat² object with the one rebuilt from its crossed square along
/// `φ(l ⊗ n ⊗ m ⊗ p) = l n m p`, which must be a Hopf isomorphism
/// intertwining all four retractions.
pub fn phi_collapse(c: &Cat2, cfg: &Config) -> Result<(HopfMorphism, Report), Error> {
    let (sq, corners) = cat2_to_square(c, cfg)?;
    let rebuilt = square_to_cat2(&sq, cfg)?;
    let phi = collapse(&c.base, &corners, &rebuilt.build)?;
    let r = &rebuilt.cat2;
    let mode = cfg.explicit_mode(c.base.total.dim());
    let mut report = Report::new(format!("φ for {}", c.base.total.name()), mode);
    report.absorb("φ: ", check_morphism(&phi, mode));
    let bijective = phi.is_bijective();
    report.record("φ is bijective", bijective, None);
    let pairs = [
        ("first source", c.base.first_idempotent(), r.base.first_idempotent()),
        ("first target", c.first_target_idempotent(), r.first_target_idempotent()),
        ("second source", c.base.second_idempotent(), r.base.second_idempotent()),
        ("second target", c.second_target_idempotent(), r.second_target_idempotent()),
    ];
    for (name, original, rebuilt) in pairs {
        report.record(&format!("{name} commutes with φ"), original.compose(&phi).same_as(&phi.compose(&rebuilt)), None);
    }
    if !bijective {
        return Err(Error::precondition("φ is not bijective"));
    }
    Ok((phi, report.finish()))
}

/// Sends a crossed square to its cat² object and back, comparing with the
/// input along the canonical corner maps.
pub fn square_roundtrip(sq: &CrossedSquare, cfg: &Config) -> Result<Report, Error> {
    let built = square_to_cat2(sq, cfg)?;
    let (back, corners) = cat2_to_square(&built.cat2, cfg)?;
    let maps = canonical_corner_maps(&square_to_2action(sq), &built.build, &corners)?;
    let mode = cfg.explicit_mode(built.cat2.base.total.dim());
    let mut report = Report::new(format!("crossed square round trip of {}", sq.name()), mode);
    report.absorb("", check_square_morphism(sq, &back, &maps, mode));
    report.record("corner maps are bijective", maps.all_bijective(), None);
    let exact = maps.all_identity_matrices();
    report.record("corner maps", true, Some(if exact { "identity matrices" } else { "isomorphisms" }.to_string()));
    Ok(report.finish())
}
