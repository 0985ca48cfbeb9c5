mod common;

use common::*;
use hopf_crossed::action::HopfAction;
use hopf_crossed::catalog::{algebra_by_name, conj_a3_s3, self_conj_s3};
use hopf_crossed::morphism::HopfMorphism;
use hopf_crossed::xmod::*;
use hopf_crossed::CheckMode;

fn corpus() -> Vec<(&'static str, CrossedModule)> {
    let s3 = algebra_by_name("S3", Q).unwrap();
    vec![
        ("discrete on K[S3]", CrossedModule::discrete(&s3)),
        ("K[A3] -> K[S3]", conj_a3_s3(Q, &cfg()).unwrap()),
        ("K[S3] -> K[S3]", self_conj_s3(Q, &cfg()).unwrap()),
    ]
}

#[test]
fn corpus_crossed_modules_are_valid() {
    for (name, cm) in corpus() {
        assert!(check_crossed_module(&cm, CheckMode::Full).passed(), "{name}");
    }
}

#[test]
fn trivial_boundary_with_conjugation_breaks_cm2() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let cm = CrossedModule::unchecked(&HopfMorphism::trivial(&s3, &s3), &HopfAction::adjoint(&s3)).unwrap();
    let report = check_crossed_module(&cm, CheckMode::Full);
    assert!(report.passes("CM1"));
    assert!(!report.passes("CM2"));
    let c = report.entry("CM2").unwrap().counterexample.clone().unwrap();
    assert_eq!(c.inputs.len(), 2);
    assert!(matches!(CrossedModule::new(&cm.boundary, &cm.action, &cfg()), Err(hopf_crossed::Error::Axiom(_))));
}

#[test]
fn round_trips_through_cat1() {
    for (name, cm) in corpus() {
        let report = xmod_roundtrip(&cm, &cfg()).unwrap();
        assert!(report.passed(), "{name}: {}", report.summary());
        assert!(report.passes("transport is the identity matrix"), "{name}");
        let cat = xmod_to_cat1(&cm, &cfg()).unwrap();
        let checked = check_cat1(&cat, CheckMode::Full, cfg().budget).unwrap();
        assert!(checked.passes("kernel commutation"), "{name}");
        let (back, phi) = cat1_roundtrip(&cat, &cfg()).unwrap();
        assert!(back.passed(), "{name}: {}", back.summary());
        assert!(phi.is_bijective());
    }
}

#[test]
fn cat1_of_conjugation_module_has_dimension_eighteen() {
    let cat = xmod_to_cat1(&conj_a3_s3(Q, &cfg()).unwrap(), &cfg()).unwrap();
    assert_eq!(cat.graph.arrows.dim(), 18);
    assert_eq!(cat.graph.objects.dim(), 6);
}

#[test]
fn groupoid_identities_on_the_small_cases() {
    let c2 = algebra_by_name("C2", Q).unwrap();
    let cases = [
        (CrossedModule::discrete(&c2), 2),
        (conj_a3_s3(Q, &cfg()).unwrap(), 54),
    ];
    for (cm, pairs) in cases {
        let cat = xmod_to_cat1(&cm, &cfg()).unwrap();
        let report = groupoid_check(&cat, &cfg()).unwrap();
        assert!(report.passed(), "{}", report.summary());
        assert_eq!(report.entry("pullback dimension").unwrap().note.as_deref(), Some(pairs.to_string().as_str()));
    }
}

#[test]
fn a_wrong_composition_fails_the_groupoid_check() {
    let cm = conj_a3_s3(Q, &cfg()).unwrap();
    let cat = xmod_to_cat1(&cm, &cfg()).unwrap();
    let n = cat.graph.arrows.dim();
    let arrows = cat.graph.arrows.clone();
    let first = hopf_crossed::exactla::LinMap::from_fn(Q, n * n, n, move |j| {
        arrows.basis(j / n).scale(&arrows.epsilon(&arrows.basis(j % n)))
    });
    let report = groupoid_check_with(&cat, &first, &cfg()).unwrap();
    assert!(!report.passed());
    assert!(!report.passes("right identity") || !report.passes("left identity"));
}

#[test]
fn normal_inclusions_are_crossed_modules() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let whole = hopf_crossed::morphism::SubHopf::whole(&s3);
    let cm = CrossedModule::normal_inclusion(&whole, &cfg()).unwrap();
    assert!(check_crossed_module(&cm, CheckMode::Full).passed());
}

#[test]
fn identity_is_a_crossed_module_morphism() {
    let cm = conj_a3_s3(Q, &cfg()).unwrap();
    let report = check_xmod_morphism(
        &cm,
        &cm,
        &HopfMorphism::identity(&cm.module),
        &HopfMorphism::identity(&cm.base),
        CheckMode::Full,
    );
    assert!(report.passed());
}
