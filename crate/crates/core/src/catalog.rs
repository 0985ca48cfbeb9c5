//! Named groups and standard objects built from them.

use crate::action::{HopfAction, SplitEpi};
use crate::config::Config;
use crate::error::Error;
use crate::exactla::Field;
use crate::hopfcore::{group_algebra, FinHopf, FiniteGroup, GroupAction, GroupHom};
use crate::morphism::HopfMorphism;
use crate::xmod::CrossedModule;

/// Parses `C<n>`, `V4`, `S<n>` (n ≤ 5), `A3`, and products like `C2xC2`.
pub fn group_by_name(name: &str) -> Result<FiniteGroup, Error> {
    let bad = || Error::Input(format!("unknown group {name:?}"));
    if let Some((a, b)) = name.split_once('x') {
        return Ok(group_by_name(a)?.product(&group_by_name(b)?).with_name(name));
    }
    match name {
        "V4" => Ok(FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)).with_name("V4")),
        "A3" => Ok(alternating3().0),
        _ => {
            let (kind, n) = name.split_at(1);
            let n: usize = n.parse().map_err(|_| bad())?;
            match kind {
                "C" if (1..=64).contains(&n) => Ok(FiniteGroup::cyclic(n)),
                "S" if (1..=5).contains(&n) => Ok(FiniteGroup::symmetric(n)),
                _ => Err(bad()),
            }
        }
    }
}

/// `A₃` with its inclusion into `S₃`.
pub fn alternating3() -> (FiniteGroup, GroupHom) {
    let s3 = FiniteGroup::symmetric(3);
    let even: Vec<usize> = s3.elements().filter(|&g| s3.mul(g, s3.mul(g, g)) == s3.identity()).collect();
    s3.subgroup("A3", &even).expect("A3 is a subgroup")
}

/// `(K[S₃], K[A₃], inclusion, conjugation)`.
pub fn conj_a3_s3(field: Field, cfg: &Config) -> Result<CrossedModule, Error> {
    let (a3, incl) = alternating3();
    let s3 = incl.cod.clone();
    let (ka3, ks3) = (group_algebra(&a3, field), group_algebra(&s3, field));
    let d = HopfMorphism::from_group_hom(&incl, &ka3, &ks3)?;
    let act = GroupAction::conjugation(&GroupHom::identity(&s3), &incl)?;
    CrossedModule::new(&d, &HopfAction::from_group_action(&act, &ks3, &ka3)?, cfg)
}

/// `(K[S₃], K[C₃], inclusion as A₃, conjugation)`.
pub fn conj_c3_s3(field: Field, cfg: &Config) -> Result<CrossedModule, Error> {
    let (a3, incl) = alternating3();
    let c3 = FiniteGroup::cyclic(3);
    let rotation = a3.elements().find(|&g| g != a3.identity()).expect("A3 is nontrivial");
    let powers = vec![a3.identity(), rotation, a3.mul(rotation, rotation)];
    let iso = GroupHom::new(&c3, &a3, powers)?;
    let into = incl.compose(&iso);
    let s3 = incl.cod.clone();
    let (kc3, ks3) = (group_algebra(&c3, field), group_algebra(&s3, field));
    let d = HopfMorphism::from_group_hom(&into, &kc3, &ks3)?;
    let act = GroupAction::conjugation(&GroupHom::identity(&s3), &into)?;
    CrossedModule::new(&d, &HopfAction::from_group_action(&act, &ks3, &kc3)?, cfg)
}

/// `(K[S₃], K[S₃], id, conjugation)`.
pub fn self_conj_s3(field: Field, cfg: &Config) -> Result<CrossedModule, Error> {
    let ks3 = group_algebra(&FiniteGroup::symmetric(3), field);
    CrossedModule::new(&HopfMorphism::identity(&ks3), &HopfAction::adjoint(&ks3), cfg)
}

/// The sign map `K[S₃] -> K[C₂]` split by the transposition `(12)`.
pub fn sign_split_epi(field: Field, cfg: &Config) -> Result<SplitEpi, Error> {
    let s3 = FiniteGroup::symmetric(3);
    let c2 = FiniteGroup::cyclic(2);
    let (_, a3) = alternating3();
    let sign: Vec<usize> = s3.elements().map(|g| usize::from(!a3.map.contains(&g))).collect();
    let transposition = s3.labels().iter().position(|l| l == "(12)").expect("S3 has (12)");
    let (ks3, kc2) = (group_algebra(&s3, field), group_algebra(&c2, field));
    let proj = HopfMorphism::from_group_hom(&GroupHom::new(&s3, &c2, sign)?, &ks3, &kc2)?;
    let section =
        HopfMorphism::from_group_hom(&GroupHom::new(&c2, &s3, vec![s3.identity(), transposition])?, &kc2, &ks3)?;
    SplitEpi::new(&proj, &section, cfg)
}

/// The group algebra of a named group.
pub fn algebra_by_name(name: &str, field: Field) -> Result<FinHopf, Error> {
    Ok(group_algebra(&group_by_name(name)?, field))
}
