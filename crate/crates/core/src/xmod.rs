//! Crossed modules, reflexive graphs, cat¹ objects and their equivalence.

use crate::action::{actions_agree_along, check_action, conjugation_action, HopfAction, SmashProduct};
use crate::config::{CheckMode, Config};
use crate::error::Error;
use crate::exactla::{nullspace, Echelon, Expr, LinMap, SparseVec};
use crate::hopfcore::{tensor_hopf, FinHopf, HopfExpr};
use crate::morphism::{check_morphism, commute_elementwise, hker, largest_subcoalgebra_in, HopfMorphism, SubHopf};
use crate::report::{differ, Report};

/// A crossed module `d : X -> B` with an action of `B` on `X`.
#[derive(Clone, Debug)]
pub struct CrossedModule {
    pub base: FinHopf,
    pub module: FinHopf,
    pub boundary: HopfMorphism,
    pub action: HopfAction,
}

impl CrossedModule {
    /// Assembles a crossed module; under paranoia its axioms are checked.
    pub fn new(boundary: &HopfMorphism, action: &HopfAction, cfg: &Config) -> Result<CrossedModule, Error> {
        let cm = CrossedModule::unchecked(boundary, action)?;
        cfg.assert(cm.base.dim().max(cm.module.dim()), |mode| check_crossed_module(&cm, mode))?;
        Ok(cm)
    }

    pub fn unchecked(boundary: &HopfMorphism, action: &HopfAction) -> Result<CrossedModule, Error> {
        if action.acting.dim() != boundary.cod.dim() || action.acted.dim() != boundary.dom.dim() {
            return Err(Error::Input("the action and the boundary of a crossed module do not fit".into()));
        }
        Ok(CrossedModule {
            base: boundary.cod.clone(),
            module: boundary.dom.clone(),
            boundary: boundary.clone(),
            action: action.clone(),
        })
    }

    /// `(B, K, η)`: the unit into `B` with the trivial action.
    pub fn discrete(base: &FinHopf) -> CrossedModule {
        let k = crate::hopfcore::base_field(base.field());
        let boundary = HopfMorphism::unit_of(base);
        let action = HopfAction::trivial(base, &k);
        CrossedModule { base: base.clone(), module: k, boundary, action }
    }

    /// A normal Hopf subalgebra with its inclusion and the adjoint action.
    pub fn normal_inclusion(sub: &SubHopf, cfg: &Config) -> Result<CrossedModule, Error> {
        let (x, incl) = sub.to_hopf();
        let action = conjugation_action(&HopfMorphism::identity(sub.ambient()), sub, &x)?;
        CrossedModule::new(&incl, &action, cfg)
    }
}

/// Checks the action axioms, that the boundary is a Hopf morphism, and both
/// crossed module equations.
pub fn check_crossed_module(cm: &CrossedModule, mode: CheckMode) -> Report {
    let (b, x, d) = (&cm.base, &cm.module, &cm.boundary);
    let f = b.field();
    let (nb, nx) = (b.dim(), x.dim());
    let mut report = Report::new(format!("crossed module {} -> {}", x.name(), b.name()), mode);
    report.absorb("action: ", check_action(&cm.action, mode));
    report.absorb("boundary: ", check_morphism(d, mode));
    report.axiom("CM1", mode, &[b.labels(), x.labels()], |t| {
        let lhs = d.apply(&cm.action.act_basis(t[0], t[1]));
        let rhs = Expr::basis(f, "b", nb, t[0])
            .tensor(Expr::vector("dx", &d.image_of_basis(t[1])))
            .coproduct(b, "b", "b1", "b2")
            .antipode(b, "b2")
            .multiply(b, "b1", "dx", "l")
            .multiply(b, "l", "b2", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, b.labels())
    });
    report.axiom("CM2", mode, &[x.labels(), x.labels()], |t| {
        let lhs = cm.action.act(&d.image_of_basis(t[0]), &x.basis(t[1]));
        let rhs = Expr::basis(f, "y", nx, t[0])
            .tensor(Expr::basis(f, "x", nx, t[1]))
            .coproduct(x, "y", "y1", "y2")
            .antipode(x, "y2")
            .multiply(x, "y1", "x", "l")
            .multiply(x, "l", "y2", "r")
            .finish(&["r"]);
        differ(&lhs, &rhs, x.labels())
    });
    report.finish()
}

/// Checks that `module_map : X -> X'` and `base_map : B -> B'` form a morphism
/// of crossed modules: `d' ∘ f = g ∘ d` and `f(b ▷ x) = g(b) ▷' f(x)`.
pub fn check_xmod_morphism(
    src: &CrossedModule,
    dst: &CrossedModule,
    module_map: &HopfMorphism,
    base_map: &HopfMorphism,
    mode: CheckMode,
) -> Report {
    let mut report = Report::new(
        format!("morphism of crossed modules {} -> {}", src.module.name(), dst.module.name()),
        mode,
    );
    report.absorb("module map: ", check_morphism(module_map, mode));
    report.absorb("base map: ", check_morphism(base_map, mode));
    let lhs = dst.boundary.compose(module_map);
    let rhs = base_map.compose(&src.boundary);
    report.record("boundaries commute", lhs.same_as(&rhs), None);
    let labels = dst.module.labels();
    report.axiom("action is respected", mode, &[src.base.labels(), src.module.labels()], |t| {
        let lhs = module_map.apply(&src.action.act_basis(t[0], t[1]));
        let rhs = dst.action.act(&base_map.image_of_basis(t[0]), &module_map.image_of_basis(t[1]));
        differ(&lhs, &rhs, labels)
    });
    report.finish()
}

/// A reflexive graph `δ, γ : A₁ -> A₀` with common section `ι`.
#[derive(Clone, Debug)]
pub struct ReflexiveGraph {
    pub arrows: FinHopf,
    pub objects: FinHopf,
    pub source: HopfMorphism,
    pub target: HopfMorphism,
    pub identity: HopfMorphism,
}

/// A reflexive graph whose source and target kernels commute.
#[derive(Clone, Debug)]
pub struct Cat1 {
    pub graph: ReflexiveGraph,
    /// The crossed module this object was built from, when known.
    pub origin: Option<Box<CrossedModule>>,
}

impl Cat1 {
    pub fn new(graph: ReflexiveGraph, cfg: &Config) -> Result<Cat1, Error> {
        let c = Cat1 { graph, origin: None };
        if let Some(mode) = cfg.mode_for(c.graph.arrows.dim()) {
            check_cat1(&c, mode, cfg.budget)?.into_result()?;
        }
        Ok(c)
    }
}

/// Checks the reflexive-graph identities and the kernel commutation condition.
pub fn check_cat1(c: &Cat1, mode: CheckMode, budget: usize) -> Result<Report, Error> {
    let g = &c.graph;
    let mut report = Report::new(format!("cat¹ on {} over {}", g.arrows.name(), g.objects.name()), mode);
    report.absorb("source: ", check_morphism(&g.source, mode));
    report.absorb("target: ", check_morphism(&g.target, mode));
    report.absorb("identity: ", check_morphism(&g.identity, mode));
    let id = HopfMorphism::identity(&g.objects);
    report.record("source of identity", g.source.compose(&g.identity).same_as(&id), None);
    report.record("target of identity", g.target.compose(&g.identity).same_as(&id), None);
    let ks = hker(&g.source, budget)?;
    let kt = hker(&g.target, budget)?;
    report.record("kernel commutation", commute_elementwise(&ks, &kt), None);
    Ok(report.finish())
}

/// The cat¹ object `X ⋊ B ⇉ B` with `δ(x ⊗ b) = ε(x) b`, `γ(x ⊗ b) = d(x) b`,
/// `ι(b) = 1 ⊗ b`.
pub fn xmod_to_cat1(cm: &CrossedModule, cfg: &Config) -> Result<Cat1, Error> {
    let smash = SmashProduct::new(&cm.action, cfg)?;
    let a1 = smash.algebra.clone();
    let (b, d) = (cm.base.clone(), cm.boundary.clone());
    let nb = b.dim();
    let gamma = LinMap::from_fn(b.field(), a1.dim(), nb, move |j| b.mul(&d.map.col(j / nb), &b.basis(j % nb)));
    let graph = ReflexiveGraph {
        arrows: a1.clone(),
        objects: cm.base.clone(),
        source: smash.projection(),
        target: HopfMorphism::new(&a1, &cm.base, gamma)?,
        identity: smash.section(),
    };
    let mut c = Cat1::new(graph, cfg)?;
    c.origin = Some(Box::new(cm.clone()));
    Ok(c)
}

/// The crossed module `γ|HKer(δ) : HKer(δ) -> A₀` with `a ▷ k = ι(a₁) k ι(S(a₂))`,
/// returned with the inclusion of `HKer(δ)` into the arrows.
pub fn cat1_to_xmod(c: &Cat1, cfg: &Config) -> Result<(CrossedModule, HopfMorphism), Error> {
    let g = &c.graph;
    let kernel = hker(&g.source, cfg.budget)?;
    let (k, incl) = kernel.to_hopf();
    let boundary = g.target.compose(&incl);
    let action = conjugation_action(&g.identity, &kernel, &k)?;
    Ok((CrossedModule::new(&boundary, &action, cfg)?, incl))
}

/// `F(G(cm))` against `cm`: the transport `x ↦ x ⊗ 1` must be a bijection
/// carrying boundary and action exactly onto the rebuilt ones.
pub fn xmod_roundtrip(cm: &CrossedModule, cfg: &Config) -> Result<Report, Error> {
    let cat = xmod_to_cat1(cm, cfg)?;
    let (back, incl) = cat1_to_xmod(&cat, cfg)?;
    let smash = SmashProduct { algebra: cat.graph.arrows.clone(), action: cm.action.clone() };
    let kernel = SubHopf::image("kernel", &incl)?;
    let into = smash.module_inclusion();
    let cols = (0..cm.module.dim())
        .map(|x| kernel.coords(&into.image_of_basis(x)))
        .collect::<Result<Vec<_>, _>>()?;
    let t = LinMap::from_columns(cm.base.field(), cm.module.dim(), back.module.dim(), cols);
    let mut report = Report::new(format!("round trip of {}", cat.graph.arrows.name()), CheckMode::Full);
    report.record("transport is bijective", crate::exactla::is_bijective(&t), None);
    report.record(
        "transport is the identity matrix",
        t.same_as(&LinMap::identity(cm.base.field(), cm.module.dim())),
        None,
    );
    report.record("boundary agrees", back.boundary.map.compose(&t).same_as(&cm.boundary.map), None);
    report.record("action agrees", actions_agree_along(&cm.action, &back.action, &t), None);
    Ok(report.finish())
}

/// `G(F(c))` against `c`: the comparison `HKer(δ) ⋊ A₀ -> A₁`, `k ⊗ a ↦ k ι(a)`,
/// must be a Hopf isomorphism commuting with source, target and identity.
pub fn cat1_roundtrip(c: &Cat1, cfg: &Config) -> Result<(Report, HopfMorphism), Error> {
    let g = &c.graph;
    let (cm, incl) = cat1_to_xmod(c, cfg)?;
    let rebuilt = xmod_to_cat1(&cm, cfg)?;
    let (a1, na0) = (g.arrows.clone(), g.objects.dim());
    let (inc, iota) = (incl.clone(), g.identity.clone());
    let map = LinMap::from_fn(a1.field(), rebuilt.graph.arrows.dim(), a1.dim(), move |j| {
        a1.mul(&inc.map.col(j / na0), &iota.map.col(j % na0))
    });
    let phi = HopfMorphism::new(&rebuilt.graph.arrows, &g.arrows, map)?;
    let mode = cfg.explicit_mode(g.arrows.dim());
    let mut report = Report::new(format!("comparison for {}", g.arrows.name()), mode);
    report.absorb("comparison: ", check_morphism(&phi, mode));
    report.record("comparison is bijective", phi.is_bijective(), None);
    report.record("source commutes", g.source.compose(&phi).same_as(&rebuilt.graph.source), None);
    report.record("target commutes", g.target.compose(&phi).same_as(&rebuilt.graph.target), None);
    report.record("identity commutes", phi.compose(&rebuilt.graph.identity).same_as(&g.identity), None);
    Ok((report.finish(), phi))
}

/// The pullback of `f : A -> C` and `g : B -> C` inside `A ⊗ B`: the largest
/// subcoalgebra of `{t : f(t¹₁) ⊗ t¹₂ ⊗ t² = g(t²₁) ⊗ t¹ ⊗ t²₂}`.
pub fn pullback(f: &HopfMorphism, g: &HopfMorphism, cfg: &Config) -> Result<(FinHopf, SubHopf), Error> {
    let (a, b, c) = (f.dom.clone(), g.dom.clone(), f.cod.clone());
    if g.cod.dim() != c.dim() {
        return Err(Error::Input("pullback of maps with different codomains".into()));
    }
    let ab = tensor_hopf(&a, &b);
    let (na, nb, nc) = (a.dim(), b.dim(), c.dim());
    let field = a.field();
    let (ff, gg) = (f.clone(), g.clone());
    let defect = LinMap::from_fn_uncached(field, na * nb, nc * na * nb, move |j| {
        let t = Expr::basis(field, "s", na, j / nb).tensor(Expr::basis(field, "t", nb, j % nb));
        let left = t
            .clone()
            .coproduct(&ff.dom, "s", "s1", "s2")
            .apply("s1", &ff.map)
            .finish(&["s1", "s2", "t"]);
        let right = t.coproduct(&gg.dom, "t", "t1", "t2").apply("t1", &gg.map).finish(&["t1", "s", "t2"]);
        left.sub(&right)
    });
    let equalizer = Echelon::span(field, na * nb, &nullspace(&defect, cfg.budget)?);
    let space = largest_subcoalgebra_in(&ab, &equalizer, cfg.budget)?;
    let sub = SubHopf::new(format!("{}×{}", a.name(), b.name()), &ab, space)?;
    Ok((ab, sub))
}

/// The composition `(x ⊗ b) ⊗ (x' ⊗ b') ↦ ε(b) x x' ⊗ b'` on `A₁ ⊗ A₁`.
pub fn composition(cm: &CrossedModule, arrows: &FinHopf) -> LinMap {
    let (x, b) = (cm.module.clone(), cm.base.clone());
    let (nx, nb) = (x.dim(), b.dim());
    let n = arrows.dim();
    LinMap::from_fn(arrows.field(), n * n, n, move |j| {
        let (l, r) = (j / n, j % n);
        let c = b.epsilon(&b.basis(l % nb));
        x.mult().col((l / nb) * nx + r / nb).kron(&b.basis(r % nb)).scale(&c)
    })
}

/// The inverse `x ⊗ b ↦ S(x₁) ⊗ d(x₂) b`.
pub fn inversion(cm: &CrossedModule, arrows: &FinHopf) -> LinMap {
    let (x, b, d) = (cm.module.clone(), cm.base.clone(), cm.boundary.clone());
    let (nx, nb) = (x.dim(), b.dim());
    LinMap::from_fn(arrows.field(), arrows.dim(), arrows.dim(), move |j| {
        Expr::basis(x.field(), "x", nx, j / nb)
            .tensor(Expr::basis(x.field(), "b", nb, j % nb))
            .coproduct(&x, "x", "x1", "x2")
            .antipode(&x, "x1")
            .apply("x2", &d.map)
            .multiply(&b, "x2", "b", "db")
            .finish(&["x1", "db"])
    })
}

/// Checks the internal groupoid identities of a cat¹ object built from a
/// crossed module, using its standard composition.
pub fn groupoid_check(c: &Cat1, cfg: &Config) -> Result<Report, Error> {
    let cm = c
        .origin
        .as_deref()
        .ok_or_else(|| Error::precondition("groupoid check needs the crossed module of the cat¹ object"))?;
    let m = composition(cm, &c.graph.arrows);
    groupoid_check_with(c, &m, cfg)
}

/// Like [`groupoid_check`] with a caller-supplied composition map `A₁ ⊗ A₁ -> A₁`.
pub fn groupoid_check_with(c: &Cat1, m: &LinMap, cfg: &Config) -> Result<Report, Error> {
    let cm = c
        .origin
        .as_deref()
        .ok_or_else(|| Error::precondition("groupoid check needs the crossed module of the cat¹ object"))?;
    let g = &c.graph;
    let a1 = &g.arrows;
    let n = a1.dim();
    let field = a1.field();
    let mode = cfg.explicit_mode(n);
    let mut report = Report::new(format!("internal groupoid on {}", a1.name()), mode);

    let (_, pairs) = pullback(&g.source, &g.target, cfg)?;
    report.record("pullback dimension", true, Some(format!("{}", pairs.dim())));
    let pair_labels = a1.tensor_labels();
    let labels = a1.labels();
    let compose = |t: &SparseVec| m.apply(t);

    let ids = g.identity.map.compose(&g.source.map);
    let idt = g.identity.map.compose(&g.target.map);
    let anchored = |a: usize, left: &LinMap, right: &LinMap| {
        Expr::basis(field, "a", n, a)
            .coproduct(a1, "a", "a1", "a2")
            .apply("a1", left)
            .apply("a2", right)
            .finish(&["a1", "a2"])
    };
    let id = LinMap::identity(field, n);
    report.axiom("right identity", mode, &[labels], |t| {
        let pair = anchored(t[0], &id, &ids);
        if !pairs.contains(&pair) {
            return Some((pair.render(&pair_labels), "a composable pair".into()));
        }
        differ(&compose(&pair), &a1.basis(t[0]), labels)
    });
    report.axiom("left identity", mode, &[labels], |t| {
        let pair = anchored(t[0], &idt, &id);
        if !pairs.contains(&pair) {
            return Some((pair.render(&pair_labels), "a composable pair".into()));
        }
        differ(&compose(&pair), &a1.basis(t[0]), labels)
    });
    let basis_labels: Vec<String> = (0..pairs.dim()).map(|i| format!("pair {i}")).collect();
    let obj_labels = g.objects.labels();
    report.axiom("source of composite", mode, &[&basis_labels], |t| {
        let p = &pairs.basis()[t[0]];
        let lhs = g.source.apply(&compose(p));
        let second = LinMap::tensor(a1.counit(), &id).apply(p);
        differ(&lhs, &g.source.apply(&second), obj_labels)
    });
    report.axiom("target of composite", mode, &[&basis_labels], |t| {
        let p = &pairs.basis()[t[0]];
        let lhs = g.target.apply(&compose(p));
        let first = LinMap::tensor(&id, a1.counit()).apply(p);
        differ(&lhs, &g.target.apply(&first), obj_labels)
    });

    let left_pairs = Echelon::span(
        field,
        n * n * n,
        &pairs.basis().iter().flat_map(|p| (0..n).map(move |k| p.kron(&SparseVec::basis(field, n, k)))).collect::<Vec<_>>(),
    );
    let right_pairs = Echelon::span(
        field,
        n * n * n,
        &(0..n).flat_map(|k| pairs.basis().iter().map(move |p| SparseVec::basis(field, n, k).kron(p))).collect::<Vec<_>>(),
    );
    let triples = left_pairs.intersect(&right_pairs, cfg.budget)?;
    let triple_labels: Vec<String> = (0..triples.rank()).map(|i| format!("triple {i}")).collect();
    let m_left = LinMap::tensor(m, &id);
    let m_right = LinMap::tensor(&id, m);
    report.axiom("associativity", mode, &[&triple_labels], |t| {
        let v = &triples.basis()[t[0]];
        differ(&m.apply(&m_left.apply(v)), &m.apply(&m_right.apply(v)), labels)
    });

    let inv = inversion(cm, a1);
    report.axiom("inverse swaps source and target", mode, &[labels], |t| {
        let i = inv.col(t[0]);
        differ(&g.source.apply(&i), &g.target.map.col(t[0]), obj_labels)
            .or_else(|| differ(&g.target.apply(&i), &g.source.map.col(t[0]), obj_labels))
    });
    report.axiom("left inverse", mode, &[labels], |t| {
        let pair = anchored(t[0], &inv, &id);
        if !pairs.contains(&pair) {
            return Some((pair.render(&pair_labels), "a composable pair".into()));
        }
        differ(&compose(&pair), &ids.col(t[0]), labels)
    });
    report.axiom("right inverse", mode, &[labels], |t| {
        let pair = anchored(t[0], &id, &inv);
        if !pairs.contains(&pair) {
            return Some((pair.render(&pair_labels), "a composable pair".into()));
        }
        differ(&compose(&pair), &idt.col(t[0]), labels)
    });
    Ok(report.finish())
}
