use hopf_crossed::exactla::*;
use hopf_crossed::Error;
use proptest::prelude::*;

const Q: Field = Field::Rationals;

fn q(text: &str) -> FieldElem {
    Q.parse(text).unwrap()
}

#[test]
fn rationals_parse_and_print_in_lowest_terms() {
    assert_eq!(q("6/-4").to_text(), "-3/2");
    assert_eq!(q(" 10 ").to_text(), "10");
    assert_eq!((&q("1/3") + &q("1/6")).to_text(), "1/2");
    assert_eq!(q("123456789012345678901234567890/3").to_text(), "41152263004115226300411522630");
    assert!(matches!(Q.parse("1/0"), Err(Error::Input(_))));
    assert!(matches!(Q.parse("x"), Err(Error::Input(_))));
}

#[test]
fn prime_fields_reduce_and_invert() {
    let f7 = Field::prime(7).unwrap();
    assert_eq!(f7.parse("10").unwrap(), f7.from_i64(3));
    assert_eq!(f7.parse("1/2").unwrap(), f7.from_i64(4));
    assert_eq!(f7.parse("5 mod 7").unwrap(), f7.from_i64(5));
    assert!(f7.parse("5 mod 11").is_err());
    assert!(f7.parse("1/7").is_err());
    assert!(Field::prime(9).is_err());
    assert_eq!("fp:7".parse::<Field>().unwrap(), f7);
    assert_eq!(f7.to_string(), "fp:7");
    assert!(matches!("fp:8".parse::<Field>(), Err(Error::Input(_))));
}

#[test]
fn kernel_of_a_rank_one_map() {
    let rows = vec![vec![q("1"), q("2"), q("3")], vec![q("2"), q("4"), q("6")]];
    let m = LinMap::from_dense_rows(Q, &rows);
    let kernel = nullspace(&m, 1_000).unwrap();
    assert_eq!(kernel.len(), 2);
    for v in &kernel {
        assert!(m.apply(v).is_zero());
    }
    assert_eq!(rank(&m), 1);
}

#[test]
fn budget_is_enforced() {
    let m = LinMap::identity(Q, 50);
    assert!(matches!(nullspace(&m, 10), Err(Error::Budget { .. })));
    let lazy = LinMap::from_fn(Q, 50, 50, move |j| SparseVec::basis(Q, 50, j));
    assert!(matches!(lazy.materialize(10), Err(Error::Budget { needed: 11, budget: 10 })));
    assert!(lazy.materialize(50).unwrap().is_materialized());
}

#[test]
fn tensor_and_twist_follow_left_major_indexing() {
    let a = LinMap::from_dense_rows(Q, &[vec![q("1"), q("1")], vec![q("0"), q("1")]]);
    let b = LinMap::identity(Q, 3);
    let ab = LinMap::tensor(&a, &b);
    let v = SparseVec::basis(Q, 2, 1).kron(&SparseVec::basis(Q, 3, 2));
    let expected = SparseVec::basis(Q, 6, 2).add(&SparseVec::basis(Q, 6, 5));
    assert_eq!(ab.apply(&v), expected);
    let sigma = LinMap::twist(Q, 2, 3);
    let w = SparseVec::basis(Q, 3, 2).kron(&SparseVec::basis(Q, 2, 1));
    assert_eq!(sigma.apply(&v), w);
}

#[test]
fn sweedler_expression_evaluates_a_composite() {
    let a = LinMap::from_dense_rows(Q, &[vec![q("2"), q("0")], vec![q("1"), q("1")]]);
    let e = Expr::basis(Q, "x", 2, 0).tensor(Expr::basis(Q, "y", 2, 1)).apply("x", &a).finish(&["y", "x"]);
    let expected = SparseVec::basis(Q, 2, 1).kron(&a.col(0));
    assert_eq!(e, expected);
}

fn small_matrix() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| (Just(r), Just(c), proptest::collection::vec(-3i64..4, r * c)))
}

fn build(field: Field, r: usize, c: usize, values: &[i64]) -> LinMap {
    let rows: Vec<Vec<FieldElem>> = (0..r).map(|i| (0..c).map(|j| field.from_i64(values[i * c + j])).collect()).collect();
    LinMap::from_dense_rows(field, &rows)
}

proptest! {
    #[test]
    fn rank_plus_nullity_is_the_width((r, c, values) in small_matrix()) {
        for field in [Q, Field::prime(5).unwrap()] {
            let m = build(field, r, c, &values);
            let kernel = nullspace(&m, 10_000).unwrap();
            prop_assert_eq!(kernel.len() + rank(&m), c);
            for v in &kernel {
                prop_assert!(m.apply(v).is_zero());
            }
        }
    }

    #[test]
    fn echelon_reduction_is_a_projection((r, c, values) in small_matrix(), probe in proptest::collection::vec(-3i64..4, 6)) {
        let m = build(Q, r, c, &values);
        let img = image(&m);
        let v = SparseVec::from_dense(Q, &probe[..r].iter().map(|&x| Q.from_i64(x)).collect::<Vec<_>>());
        let reduced = img.reduce(&v);
        prop_assert_eq!(img.reduce(&reduced), reduced.clone());
        prop_assert!(img.contains(&v.sub(&reduced)));
        if let Some(coords) = img.coords(&v) {
            prop_assert_eq!(img.combine(&coords), v);
        }
    }

    #[test]
    fn field_operations_agree_with_big_rationals(a in -50i64..50, b in 1i64..50, c in -50i64..50, d in 1i64..50) {
        let x = Q.parse(&format!("{a}/{b}")).unwrap();
        let y = Q.parse(&format!("{c}/{d}")).unwrap();
        let sum = Q.parse(&format!("{}/{}", a * d + c * b, b * d)).unwrap();
        prop_assert_eq!(&x + &y, sum);
        let product = Q.parse(&format!("{}/{}", a * c, b * d)).unwrap();
        prop_assert_eq!(&x * &y, product);
        if !y.is_zero() {
            prop_assert_eq!(&(&x / &y) * &y, x);
        }
    }

    #[test]
    fn intersection_lies_in_both((r, c, values) in small_matrix(), c2 in 1usize..6, values2 in proptest::collection::vec(-3i64..4, 30)) {
        let a = image(&build(Q, r, c, &values));
        let b = image(&build(Q, r, c2, &values2));
        let meet = a.intersect(&b, 100_000).unwrap();
        prop_assert!(meet.is_subspace_of(&a) && meet.is_subspace_of(&b));
        prop_assert!(meet.rank() + r >= a.rank() + b.rank());
    }
}
