use hopf_crossed::catalog::{algebra_by_name, group_by_name};
use hopf_crossed::exactla::{Field, LinMap, SparseVec};
use hopf_crossed::hopfcore::*;
use hopf_crossed::{CheckMode, Error};
use proptest::prelude::*;

const Q: Field = Field::Rationals;
const CORPUS: [&str; 5] = ["C2", "C3", "C4", "C2xC2", "S3"];

#[test]
fn group_algebras_pass_the_full_axiom_suite_over_both_fields() {
    for field in [Q, Field::prime(5).unwrap()] {
        for name in CORPUS {
            let h = algebra_by_name(name, field).unwrap();
            let report = check_hopf(&h, CheckMode::Full);
            assert!(report.passed(), "{name} over {field}: {}", report.summary());
            for axiom in ["cocommutativity", "antipode is involutive", "antipode"] {
                assert!(report.passes(axiom));
            }
        }
    }
}

#[test]
fn corrupted_antipode_is_caught_with_a_counterexample() {
    let h = algebra_by_name("C3", Q).unwrap();
    let mut parts = h.parts();
    parts.antipode = LinMap::identity(Q, 3);
    let bad = FinHopf::new(parts).unwrap();
    let report = check_hopf(&bad, CheckMode::Full);
    assert!(!report.passes("antipode"));
    let c = report.entry("antipode").unwrap().counterexample.clone().unwrap();
    assert_eq!(c.inputs.len(), 1);
    assert!(report.passes("associativity"));
}

#[test]
fn shape_errors_are_input_errors() {
    let h = algebra_by_name("C2", Q).unwrap();
    let mut parts = h.parts();
    parts.counit = LinMap::identity(Q, 2);
    assert!(matches!(FinHopf::new(parts), Err(Error::Input(_))));
}

#[test]
fn symmetric_group_labels_and_structure() {
    let s3 = FiniteGroup::symmetric(3);
    assert_eq!(s3.order(), 6);
    assert!(!s3.is_abelian());
    assert_eq!(s3.labels()[0], "e");
    for a in s3.elements() {
        assert_eq!(s3.mul(a, s3.inv(a)), s3.identity());
    }
    assert_eq!(group_by_name("V4").unwrap().order(), 4);
    assert!(group_by_name("Q8").is_err());
}

#[test]
fn tensor_product_of_group_algebras_is_the_product_group_algebra() {
    let c2 = algebra_by_name("C2", Q).unwrap();
    let c3 = algebra_by_name("C3", Q).unwrap();
    let t = tensor_hopf(&c2, &c3);
    assert!(check_hopf(&t, CheckMode::Full).passed());
    let direct = group_algebra(&FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(3)), Q);
    assert!(t.mult().same_as(direct.mult()));
    assert!(t.comult().same_as(direct.comult()));
}

#[test]
fn group_likes_and_primitives_of_group_algebras() {
    for name in CORPUS {
        let h = algebra_by_name(name, Q).unwrap();
        assert_eq!(h.grouplikes().len(), h.dim());
        assert_eq!(h.primitives(1_000_000).unwrap().rank(), 0, "{name}");
    }
    let s3 = algebra_by_name("S3", Q).unwrap();
    let sum = (0..6).fold(s3.zero(), |acc, i| acc.add(&s3.basis(i)));
    assert!(!s3.is_grouplike(&sum));
}

#[test]
fn sweedler_identity_holds_on_every_basis_vector() {
    let h = algebra_by_name("S3", Q).unwrap();
    for i in 0..h.dim() {
        let v = hopf_crossed::exactla::Expr::basis(Q, "x", h.dim(), i)
            .coproduct(&h, "x", "x1", "x2")
            .antipode(&h, "x2")
            .multiply(&h, "x1", "x2", "y")
            .finish(&["y"]);
        assert_eq!(v, h.one().scale(&h.epsilon(&h.basis(i))));
    }
}

#[test]
fn sampled_checks_visit_fewer_tuples() {
    let h = algebra_by_name("S3", Q).unwrap();
    let full = check_hopf(&h, CheckMode::Full);
    let sampled = check_hopf(&h, CheckMode::sampled(1));
    let count = |r: &hopf_crossed::Report, a: &str| r.entry(a).unwrap().checked;
    assert_eq!(count(&full, "associativity"), 216);
    assert!(count(&sampled, "associativity") < 216);
    assert!(sampled.passed());
    let again = check_hopf(&h, CheckMode::sampled(1));
    assert_eq!(count(&sampled, "associativity"), count(&again, "associativity"));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cyclic_group_algebras_are_commutative_hopf_algebras(n in 1usize..8) {
        let h = group_algebra(&FiniteGroup::cyclic(n), Q);
        prop_assert!(h.is_commutative());
        prop_assert!(check_hopf(&h, CheckMode::Full).passed());
    }

    #[test]
    fn antipode_reverses_products_in_s3(a in 0usize..6, b in 0usize..6) {
        let h = algebra_by_name("S3", Q).unwrap();
        let (x, y) = (h.basis(a), h.basis(b));
        prop_assert_eq!(h.s(&h.mul(&x, &y)), h.mul(&h.s(&y), &h.s(&x)));
    }

    #[test]
    fn comultiplication_is_an_algebra_map_on_random_elements(coeffs in proptest::collection::vec(-2i64..3, 12)) {
        let h = algebra_by_name("S3", Q).unwrap();
        let x = SparseVec::from_dense(Q, &coeffs[..6].iter().map(|&c| Q.from_i64(c)).collect::<Vec<_>>());
        let y = SparseVec::from_dense(Q, &coeffs[6..].iter().map(|&c| Q.from_i64(c)).collect::<Vec<_>>());
        prop_assert_eq!(h.delta(&h.mul(&x, &y)), h.mul_tensor(&h.delta(&x), &h.delta(&y)));
    }
}
