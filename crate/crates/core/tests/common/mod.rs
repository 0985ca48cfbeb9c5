#![allow(dead_code)]

use hopf_crossed::catalog::{algebra_by_name, conj_a3_s3, conj_c3_s3, group_by_name};
use hopf_crossed::exactla::{Echelon, Field};
use hopf_crossed::hopfcore::{group_algebra, FinHopf};
use hopf_crossed::morphism::SubHopf;
use hopf_crossed::square::{examples, CrossedSquare, GroupCrossedSquare};
use hopf_crossed::Config;

pub const Q: Field = Field::Rationals;

pub fn cfg() -> Config {
    Config::default()
}

pub fn span(h: &FinHopf, indices: &[usize]) -> Echelon {
    Echelon::span(h.field(), h.dim(), &indices.iter().map(|&i| h.basis(i)).collect::<Vec<_>>())
}

/// The Klein four-group with its two coordinate subgroups: `C2×1` is
/// `{(e,e),(g,e)}` and `1×C2` is `{(e,e),(e,g)}`.
pub fn v4_group_square() -> GroupCrossedSquare {
    let g = group_by_name("C2xC2").unwrap();
    GroupCrossedSquare::normal_pair(&g, &[0, 2], &[0, 1]).unwrap()
}

pub fn normal_pair_v4() -> CrossedSquare {
    let v4 = group_algebra(&group_by_name("C2xC2").unwrap(), Q);
    let horizontal = SubHopf::new("C2×1", &v4, span(&v4, &[0, 2])).unwrap();
    let vertical = SubHopf::new("1×C2", &v4, span(&v4, &[0, 1])).unwrap();
    examples::normal_pair(&horizontal, &vertical, &cfg()).unwrap()
}

pub fn unit_c2() -> CrossedSquare {
    examples::unit(&algebra_by_name("C2", Q).unwrap(), &cfg()).unwrap()
}

pub fn discrete_a3_s3() -> CrossedSquare {
    examples::discrete(&conj_a3_s3(Q, &cfg()).unwrap(), &cfg()).unwrap()
}

pub fn example4_c3_s3() -> CrossedSquare {
    examples::from_crossed_module(&conj_c3_s3(Q, &cfg()).unwrap(), &cfg()).unwrap()
}

/// The small squares whose cat² objects have dimension at most 18.
pub fn small_squares() -> Vec<(&'static str, CrossedSquare)> {
    vec![
        ("trivial", examples::trivial(Q)),
        ("unit over K[C2]", unit_c2()),
        ("normal pair over K[C2×C2]", normal_pair_v4()),
        ("discrete on K[A3] -> K[S3]", discrete_a3_s3()),
    ]
}
