mod common;

use common::*;
use hopf_crossed::action::*;
use hopf_crossed::catalog::{algebra_by_name, sign_split_epi};
use hopf_crossed::exactla::LinMap;
use hopf_crossed::hopfcore::{check_hopf, group_algebra, FiniteGroup, GroupAction, GroupHom};
use hopf_crossed::morphism::HopfMorphism;
use hopf_crossed::CheckMode;

#[test]
fn adjoint_and_trivial_actions_are_valid() {
    for name in ["C2", "C3", "S3"] {
        let h = algebra_by_name(name, Q).unwrap();
        assert!(check_action(&HopfAction::adjoint(&h), CheckMode::Full).passed(), "{name}");
        assert!(check_action(&HopfAction::trivial(&h, &h), CheckMode::Full).passed(), "{name}");
    }
}

#[test]
fn a_map_that_is_not_an_action_fails_the_product_law() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let n = s3.dim();
    let broken = LinMap::from_fn(Q, n * n, n, {
        let s3 = s3.clone();
        move |j| if j / n == 1 { s3.s(&s3.basis(j % n)) } else { s3.basis(j % n) }
    });
    let a = HopfAction::new(&s3, &s3, broken).unwrap();
    let report = check_action(&a, CheckMode::Full);
    assert!(!report.passes("m et act"));
}

#[test]
fn smash_product_of_a_conjugation_action_is_the_semidirect_product() {
    let s3 = FiniteGroup::symmetric(3);
    let c3 = FiniteGroup::cyclic(3);
    let c2 = FiniteGroup::cyclic(2);
    let (kc3, kc2) = (group_algebra(&c3, Q), group_algebra(&c2, Q));
    let inversion = GroupAction::new(&c2, &c3, vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let act = HopfAction::from_group_action(&inversion, &kc2, &kc3).unwrap();
    let smash = SmashProduct::new(&act, &cfg()).unwrap();
    assert_eq!(smash.algebra.dim(), 6);
    assert!(check_hopf(&smash.algebra, CheckMode::Full).passed());
    assert!(!smash.algebra.is_commutative());
    let (g, _) = hopf_crossed::morphism::cgkmm_degenerate(&smash.algebra, &cfg()).unwrap();
    assert!(!g.is_abelian());
    assert_eq!(g.order(), s3.order());
}

#[test]
fn sign_split_epi_compares_to_its_smash_product() {
    let e = sign_split_epi(Q, &cfg()).unwrap();
    assert!(check_split_epi(&e, CheckMode::Full).passed());
    let ka = split_epi_to_action(&e, &cfg()).unwrap();
    assert_eq!(ka.kernel.dim(), 3);
    let (smash, phi) = phi_iso(&e, &cfg()).unwrap();
    assert_eq!(smash.algebra.dim(), 6);
    assert!(phi.is_bijective());
}

#[test]
fn action_round_trip_recovers_the_action_after_transport() {
    let c3 = algebra_by_name("C3", Q).unwrap();
    let c2 = algebra_by_name("C2", Q).unwrap();
    let inversion = GroupAction::new(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    let act = HopfAction::from_group_action(&inversion, &c2, &c3).unwrap();
    let e = action_to_split_epi(&act, &cfg()).unwrap();
    let back = split_epi_to_action(&e, &cfg()).unwrap();
    let smash = SmashProduct::new(&act, &cfg()).unwrap();
    let into = smash.module_inclusion();
    let cols = (0..3).map(|x| back.kernel.coords(&into.image_of_basis(x)).unwrap()).collect();
    let t = LinMap::from_columns(Q, 3, back.kernel.dim(), cols);
    assert!(hopf_crossed::exactla::is_bijective(&t));
    assert!(actions_agree_along(&act, &back.action, &t));
}

#[test]
fn pulling_an_action_back_along_a_morphism() {
    let s3 = algebra_by_name("S3", Q).unwrap();
    let c2 = algebra_by_name("C2", Q).unwrap();
    let t = s3.labels().iter().position(|l| l == "(12)").unwrap();
    let hom = GroupHom::new(&FiniteGroup::cyclic(2), &FiniteGroup::symmetric(3), vec![0, t]).unwrap();
    let f = HopfMorphism::from_group_hom(&hom, &c2, &s3).unwrap();
    let pulled = HopfAction::adjoint(&s3).through(&f);
    assert!(check_action(&pulled, CheckMode::Full).passed());
    assert_eq!(pulled.acting.dim(), 2);
}
