mod common;

use common::*;
use hopf_crossed::action::HopfAction;
use hopf_crossed::catalog::{algebra_by_name, conj_a3_s3};
use hopf_crossed::exactla::{LinMap, SparseVec};
use hopf_crossed::morphism::{check_morphism, HopfMorphism, SubHopf};
use hopf_crossed::square::*;
use hopf_crossed::{CheckMode, Config, Error};

#[test]
fn corpus_squares_pass_every_axiom() {
    for (name, sq) in small_squares() {
        let report = check_crossed_square(&sq, CheckMode::Full);
        assert!(report.passed(), "{name}: {}", report.summary());
    }
}

#[test]
fn normal_pair_on_coordinate_subgroups_has_a_trivial_apex() {
    let sq = normal_pair_v4();
    assert_eq!(sq.apex().dim(), 1);
    assert_eq!((sq.horizontal().dim(), sq.vertical().dim(), sq.base().dim()), (2, 2, 4));
}

#[test]
fn normal_pair_rejects_a_subalgebra_that_is_not_normal() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let transposition = s3.labels().iter().position(|l| l == "(12)").unwrap();
    let sub = SubHopf::new("<(12)>", &s3, span(&s3, &[0, transposition])).unwrap();
    let whole = SubHopf::whole(&s3);
    assert!(matches!(examples::normal_pair(&sub, &whole, &cfg()), Err(Error::Precondition(_))));
}

#[test]
fn counit_pairing_on_a_noncommutative_unit_square_breaks_the_commutator_axioms() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let good = examples::unit(&s3, &cfg()).unwrap();
    let mut bad = good.clone();
    bad.pairing = counit_pairing(bad.horizontal(), bad.vertical(), bad.apex());
    let report = check_crossed_square(&bad, CheckMode::Full);
    for axiom in ["CS4.1", "CS4.2", "CS5.1", "CS5.2"] {
        assert!(!report.passes(axiom), "{axiom} should fail");
    }
    for axiom in ["CS1", "CS2.1", "CS2.2", "CS3", "CS6.1", "CS6.2", "h is comultiplicative"] {
        assert!(report.passes(axiom), "{axiom} should still hold");
    }
    let entry = report.entry("CS5.1").unwrap();
    let c = entry.counterexample.as_ref().unwrap();
    assert_eq!(c.inputs.len(), 2);
    assert_ne!(c.lhs, c.rhs);
}

#[test]
fn zero_pairing_breaks_normalization() {
    let a = square_to_2action(&unit_c2());
    let mut broken = a.clone();
    broken.pairing = LinMap::zero(Q, a.horizontal.dim() * a.vertical.dim(), a.apex.dim());
    let report = check_2action(&broken, CheckMode::Full);
    assert!(!report.passes("2A3.1"));
    assert!(!report.passes("2A3.2"));
    assert!(check_2action(&a, CheckMode::Full).passed());
}

#[test]
fn swapping_twice_is_the_identity_and_preserves_validity() {
    for (name, sq) in small_squares() {
        let swapped = swap_square(&sq);
        assert!(check_crossed_square(&swapped, CheckMode::Full).passed(), "{name}");
        let back = swap_square(&swapped);
        assert!(back.pairing.same_as(&sq.pairing) && back.top.same_as(&sq.top) && back.left.same_as(&sq.left));
    }
    let s3 = algebra_by_name("S3", Q).unwrap();
    let mut bad = examples::unit(&s3, &cfg()).unwrap();
    bad.pairing = counit_pairing(bad.horizontal(), bad.vertical(), bad.apex());
    assert!(!check_crossed_square(&swap_square(&bad), CheckMode::Full).passed());
}

#[test]
fn trivial_two_action_is_valid_and_its_pairing_is_normalized() {
    let k2 = algebra_by_name("C2", Q).unwrap();
    let a = Hopf2Action::trivial(&k2, &k2, &k2, &k2);
    assert!(check_2action(&a, CheckMode::Full).passed());
}

#[test]
fn two_action_round_trip_recovers_the_input_exactly() {
    for (name, sq) in small_squares() {
        let a = square_to_2action(&sq);
        let report = two_action_roundtrip(&a, &cfg()).unwrap();
        assert!(report.passed(), "{name}: {}", report.summary());
        assert_eq!(report.entry("corner maps").unwrap().note.as_deref(), Some("identity matrices"), "{name}");
    }
}

#[test]
fn outer_action_of_the_built_pt2_is_a_valid_action() {
    let a = square_to_2action(&normal_pair_v4());
    let build = two_action_to_pt2(&a, &cfg()).unwrap();
    assert_eq!(build.pt2.total.dim(), 16);
    let report = hopf_crossed::action::check_action(&build.outer.action, CheckMode::Full);
    assert!(report.passed(), "{}", report.summary());
    assert!(check_split_epi2(&build.pt2, CheckMode::Full).passed());
}

#[test]
fn pt2_to_2action_of_a_built_pt2_passes_all_axioms() {
    let a = square_to_2action(&unit_c2());
    let build = two_action_to_pt2(&a, &cfg()).unwrap();
    let (back, corners) = pt2_to_2action(&build.pt2, &cfg()).unwrap();
    assert!(check_2action(&back, CheckMode::Full).passed());
    assert_eq!(corners.apex.hopf.dim() * corners.vertical.hopf.dim() * corners.horizontal.hopf.dim() * corners.base.hopf.dim(), 16);
    let (report, phi) = pt2_roundtrip(&build.pt2, &cfg()).unwrap();
    assert!(report.passed(), "{}", report.summary());
    assert!(phi.is_bijective());
}

#[test]
fn psi_and_its_inverse_are_mutually_inverse_hopf_morphisms() {
    let a = square_to_2action(&normal_pair_v4());
    let psi = psi_iso(&a, &cfg()).unwrap();
    assert!(psi.report.passed());
    assert!(check_morphism(&psi.forward, CheckMode::Full).passed());
    assert!(check_morphism(&psi.backward, CheckMode::Full).passed());
    let id = HopfMorphism::identity(&psi.build.pt2.total);
    assert!(psi.backward.compose(&psi.forward).same_as(&id));
}

#[test]
fn cat2_of_each_small_square_and_back() {
    for (name, sq) in small_squares() {
        let built = square_to_cat2(&sq, &cfg()).unwrap();
        let c = &built.cat2;
        let report = check_cat2(c, CheckMode::Full, cfg().budget).unwrap();
        assert!(report.passed(), "{name}: {}", report.summary());
        let trip = square_roundtrip(&sq, &cfg()).unwrap();
        assert!(trip.passed(), "{name}: {}", trip.summary());
        let (_, phi) = phi_collapse(c, &cfg()).unwrap();
        assert!(phi.passed(), "{name}: {}", phi.summary());
        let dg = cat2_to_double_groupoid(c, &cfg()).unwrap();
        assert!(dg.passed(), "{name}: {}", dg.summary());
    }
}

#[test]
fn trivial_square_gives_the_one_dimensional_cat2() {
    let built = square_to_cat2(&examples::trivial(Q), &cfg()).unwrap();
    assert_eq!(built.cat2.base.total.dim(), 1);
}

#[test]
fn identity_cat2_reads_as_a_degenerate_double_groupoid() {
    let h = algebra_by_name("C2", Q).unwrap();
    let c = Cat2::identity(&h);
    assert!(check_cat2(&c, CheckMode::Full, cfg().budget).unwrap().passed());
    assert!(cat2_to_double_groupoid(&c, &cfg()).unwrap().passed());
    let (sq, _) = cat2_to_square(&c, &cfg()).unwrap();
    assert_eq!((sq.apex().dim(), sq.horizontal().dim(), sq.vertical().dim(), sq.base().dim()), (1, 1, 1, 2));
}

#[test]
fn corrupting_the_second_target_breaks_compatibility() {
    let built = square_to_cat2(&unit_c2(), &cfg()).unwrap();
    let c = built.cat2;
    let second = &c.base.second;
    assert_eq!(second.dim(), 4);
    let swap = [0, 2, 1, 3];
    let cols = swap.iter().map(|&i| SparseVec::basis(Q, 4, i)).collect();
    let twist = HopfMorphism::new(second, second, LinMap::from_columns(Q, 4, 4, cols)).unwrap();
    assert!(check_morphism(&twist, CheckMode::Full).passed());
    let corrupted = Cat2::unchecked(c.base.clone(), &c.first_target, &twist.compose(&c.second_target)).unwrap();
    let report = check_cat2(&corrupted, CheckMode::Full, cfg().budget).unwrap();
    assert!(!report.passes("2C2"), "{}", report.to_text());
    assert!(report.passes("2C1"));
}

#[test]
fn cat2_to_square_satisfies_the_derived_identities() {
    let sq = discrete_a3_s3();
    let built = square_to_cat2(&sq, &cfg()).unwrap();
    let (back, _) = cat2_to_square(&built.cat2, &cfg()).unwrap();
    assert!(check_crossed_square(&back, CheckMode::Full).passed());
    let a = pt2_to_2action(&built.cat2.base, &cfg()).unwrap().0;
    let report = derived_identities(&a, &back, CheckMode::Full);
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn square_morphism_check_accepts_the_identity_and_rejects_a_collapse() {
    let sq = normal_pair_v4();
    let id = |h: &hopf_crossed::hopfcore::FinHopf| HopfMorphism::identity(h);
    let maps = CornerMaps { apex: id(sq.apex()), horizontal: id(sq.horizontal()), vertical: id(sq.vertical()), base: id(sq.base()) };
    assert!(check_square_morphism(&sq, &sq, &maps, CheckMode::Full).passed());
    let collapse = |h: &hopf_crossed::hopfcore::FinHopf| HopfMorphism::trivial(h, h);
    let bad = CornerMaps { base: collapse(sq.base()), ..maps };
    let report = check_square_morphism(&sq, &sq, &bad, CheckMode::Full);
    assert!(!report.passes("right face"));
}

#[test]
fn commutative_and_crossed_module_examples() {
    let k2 = algebra_by_name("C2", Q).unwrap();
    let id = HopfMorphism::identity(&k2);
    let sq = examples::commutative(&id, &id, &id, &id, &cfg()).unwrap();
    assert!(check_crossed_square(&sq, CheckMode::Full).passed());
    let s3 = algebra_by_name("S3", Q).unwrap();
    let ids = HopfMorphism::identity(&s3);
    assert!(matches!(examples::commutative(&ids, &ids, &ids, &ids, &cfg()), Err(Error::Precondition(_))));
    let cm = conj_a3_s3(Q, &cfg()).unwrap();
    let sq = examples::from_crossed_module(&cm, &cfg()).unwrap();
    assert_eq!(sq.apex().dim(), 3);
    assert!(matches!(examples::finite_shadow(&cm, &cfg()), Err(Error::Precondition(_))));
}

#[test]
fn finite_shadow_of_a_commutative_crossed_module_is_discrete() {
    let c3 = algebra_by_name("C3", Q).unwrap();
    let cm = hopf_crossed::xmod::CrossedModule::new(
        &HopfMorphism::identity(&c3),
        &HopfAction::trivial(&c3, &c3),
        &cfg(),
    )
    .unwrap();
    let shadow = examples::finite_shadow(&cm, &cfg()).unwrap();
    let discrete = examples::discrete(&cm, &cfg()).unwrap();
    assert!(shadow.pairing.same_as(&discrete.pairing));
    assert_eq!(shadow.apex().dim(), 1);
}

#[test]
fn paranoid_construction_rejects_a_bad_square() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let good = examples::unit(&s3, &cfg()).unwrap();
    let pairing = counit_pairing(good.horizontal(), good.vertical(), good.apex());
    let actions = [&good.base_on_apex, &good.base_on_horizontal, &good.base_on_vertical];
    let result = CrossedSquare::new(&good.top, &good.left, &good.right, &good.bottom, actions, pairing.clone(), &cfg());
    assert!(matches!(result, Err(Error::Axiom(_))));
    let trusting = Config::trusting();
    assert!(CrossedSquare::new(&good.top, &good.left, &good.right, &good.bottom, actions, pairing, &trusting).is_ok());
}
