//! The acceptance criteria, each timed against its limit and reported on one line.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use hopf_crossed::action::*;
use hopf_crossed::catalog::*;
use hopf_crossed::exactla::{is_bijective, LinMap};
use hopf_crossed::hopfcore::{check_hopf, FiniteGroup, GroupAction, GroupHom};
use hopf_crossed::morphism::{cgkmm_degenerate, check_morphism, HopfMorphism};
use hopf_crossed::report::Status;
use hopf_crossed::square::*;
use hopf_crossed::xmod::*;
use hopf_crossed::{CheckMode, Report};

type Outcome = Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn passing(report: &Report) -> Outcome {
    ensure(report.passed(), || report.summary())
}

fn run(number: u32, title: &str, limit: Duration, body: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let outcome = catch_unwind(AssertUnwindSafe(body)).unwrap_or_else(|p| {
        Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
    });
    let elapsed = start.elapsed();
    let verdict = match (&outcome, elapsed <= limit) {
        (Ok(()), true) => "PASS".to_string(),
        (Ok(()), false) => format!("FAIL (over the {:.0} s limit)", limit.as_secs_f64()),
        (Err(e), _) => format!("FAIL ({e})"),
    };
    println!("criterion {number:>2} {title}: {verdict} in {:.2} s", elapsed.as_secs_f64());
    outcome.is_ok() && elapsed <= limit
}

const GROUPS: [&str; 5] = ["C2", "C3", "C4", "C2xC2", "S3"];

fn hopf_axioms() -> Outcome {
    for name in GROUPS {
        let start = Instant::now();
        let h = algebra_by_name(name, Q).map_err(|e| e.to_string())?;
        let report = check_hopf(&h, CheckMode::Full);
        passing(&report)?;
        for axiom in ["cocommutativity", "antipode is involutive"] {
            ensure(report.passes(axiom), || format!("{name}: {axiom}"))?;
        }
        ensure(start.elapsed() < Duration::from_secs(1), || format!("{name} took {:?}", start.elapsed()))?;
    }
    Ok(())
}

fn inversion_action() -> HopfAction {
    let act = GroupAction::new(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(3), vec![vec![0, 1, 2], vec![0, 2, 1]]).unwrap();
    HopfAction::from_group_action(&act, &algebra_by_name("C2", Q).unwrap(), &algebra_by_name("C3", Q).unwrap()).unwrap()
}

fn corpus_actions() -> Vec<(&'static str, HopfAction)> {
    let mut out = vec![("C2 inverting C3", inversion_action())];
    for (name, cm) in xmod_corpus() {
        out.push((name, cm.action));
    }
    out
}

fn split_epis() -> Outcome {
    let check_phi = |name: &str, e: &SplitEpi| -> Outcome {
        let (_, phi) = phi_iso(e, &cfg()).map_err(|err| format!("{name}: {err}"))?;
        passing(&check_morphism(&phi, CheckMode::Full))?;
        ensure(phi.is_bijective(), || format!("{name}: comparison not bijective"))
    };
    check_phi("sign retraction", &sign_split_epi(Q, &cfg()).map_err(|e| e.to_string())?)?;
    for (name, act) in corpus_actions() {
        let e = action_to_split_epi(&act, &cfg()).map_err(|e| e.to_string())?;
        check_phi(name, &e)?;
        let back = split_epi_to_action(&e, &cfg()).map_err(|e| e.to_string())?;
        let smash = SmashProduct::new(&act, &cfg()).map_err(|e| e.to_string())?;
        let into = smash.module_inclusion();
        let cols = (0..act.acted.dim())
            .map(|x| back.kernel.coords(&into.image_of_basis(x)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let t = LinMap::from_columns(Q, act.acted.dim(), back.kernel.dim(), cols);
        ensure(is_bijective(&t), || format!("{name}: transport not bijective"))?;
        ensure(t.same_as(&LinMap::identity(Q, act.acted.dim())), || format!("{name}: transport is not x ↦ x⊗1"))?;
        ensure(actions_agree_along(&act, &back.action, &t), || format!("{name}: action not recovered"))?;
    }
    Ok(())
}

fn xmod_corpus() -> Vec<(&'static str, CrossedModule)> {
    let s3 = algebra_by_name("S3", Q).unwrap();
    vec![
        ("discrete on K[S3]", CrossedModule::discrete(&s3)),
        ("K[A3] -> K[S3]", conj_a3_s3(Q, &cfg()).unwrap()),
        ("K[S3] -> K[S3]", self_conj_s3(Q, &cfg()).unwrap()),
    ]
}

fn xmod_equivalence() -> Outcome {
    for (name, cm) in xmod_corpus() {
        let forward = xmod_roundtrip(&cm, &cfg()).map_err(|e| e.to_string())?;
        passing(&forward)?;
        ensure(forward.passes("transport is the identity matrix"), || format!("{name}: not exact"))?;
        let cat = xmod_to_cat1(&cm, &cfg()).map_err(|e| e.to_string())?;
        let (back, _) = cat1_roundtrip(&cat, &cfg()).map_err(|e| e.to_string())?;
        passing(&back)?;
        let checked = check_cat1(&cat, CheckMode::Full, cfg().budget).map_err(|e| e.to_string())?;
        ensure(checked.passes("kernel commutation"), || format!("{name}: kernels do not commute"))?;
    }
    Ok(())
}

/// Crossed modules of groups matching the Hopf corpus, for counting
/// composable pairs of arrows by brute force.
fn group_xmods() -> Vec<(GroupHom, GroupAction)> {
    let s3 = FiniteGroup::symmetric(3);
    let id = GroupHom::identity(&s3);
    let (_, a3_in) = alternating3();
    let one = FiniteGroup::cyclic(1);
    vec![
        (GroupHom::trivial(&one, &s3), GroupAction::trivial(&s3, &one)),
        (a3_in.clone(), GroupAction::conjugation(&id, &a3_in).unwrap()),
        (id.clone(), GroupAction::conjugation(&id, &id).unwrap()),
    ]
}

/// Pairs of arrows `(x, b), (x', b')` of the group groupoid with the source
/// of the first equal to the target of the second.
fn composable_pairs(d: &GroupHom, _act: &GroupAction) -> usize {
    let (x, b) = (&d.dom, &d.cod);
    let arrows: Vec<(usize, usize)> = x.elements().flat_map(|u| b.elements().map(move |v| (u, v))).collect();
    let source = |a: &(usize, usize)| a.1;
    let target = |a: &(usize, usize)| b.mul(d.apply(a.0), a.1);
    arrows.iter().map(|f| arrows.iter().filter(|g| source(f) == target(g)).count()).sum()
}

fn groupoids() -> Outcome {
    for ((name, cm), (d, act)) in xmod_corpus().into_iter().zip(group_xmods()) {
        let cat = xmod_to_cat1(&cm, &cfg()).map_err(|e| e.to_string())?;
        let report = groupoid_check(&cat, &cfg()).map_err(|e| e.to_string())?;
        passing(&report)?;
        for axiom in ["associativity", "left inverse", "right inverse"] {
            ensure(report.passes(axiom), || format!("{name}: {axiom}"))?;
        }
        let dim = report.entry("pullback dimension").and_then(|e| e.note.clone()).unwrap_or_default();
        let expected = composable_pairs(&d, &act).to_string();
        ensure(dim == expected, || format!("{name}: pullback dimension {dim}, group count {expected}"))?;
    }
    Ok(())
}

fn pt2_equivalence() -> Outcome {
    let corpus = [
        ("trivial", examples::trivial(Q)),
        ("unit over K[C2]", unit_c2()),
        ("normal pair over K[C2×C2]", normal_pair_v4()),
    ];
    for (name, sq) in corpus {
        let a = square_to_2action(&sq);
        let build = two_action_to_pt2(&a, &cfg()).map_err(|e| e.to_string())?;
        passing(&check_action(&build.outer.action, CheckMode::Full))?;
        let (back, _) = pt2_to_2action(&build.pt2, &cfg()).map_err(|e| e.to_string())?;
        let report = check_2action(&back, CheckMode::Full);
        passing(&report)?;
        for axiom in ["2A1.1", "2A1.2", "2A2", "2A3.1", "2A3.2", "2A4.1", "2A4.2", "2A5"] {
            ensure(report.entry(axiom).is_some_and(|e| e.status == Status::Pass), || format!("{name}: {axiom}"))?;
        }
        let trip = two_action_roundtrip(&a, &cfg()).map_err(|e| e.to_string())?;
        passing(&trip)?;
        let exact = trip.entry("corner maps").and_then(|e| e.note.clone());
        ensure(exact.as_deref() == Some("identity matrices"), || format!("{name}: corner maps {exact:?}"))?;
        let (back_trip, _) = pt2_roundtrip(&build.pt2, &cfg()).map_err(|e| e.to_string())?;
        passing(&back_trip)?;
    }
    Ok(())
}

fn psi() -> Outcome {
    let corpus = [
        ("unit over K[C2]", unit_c2()),
        ("normal pair over K[C2×C2]", normal_pair_v4()),
        ("discrete on K[A3] -> K[S3]", discrete_a3_s3()),
        ("K[C3] -> K[S3] doubled", example4_c3_s3()),
    ];
    let mut dims = Vec::new();
    for (name, sq) in corpus {
        let a = square_to_2action(&sq);
        let iso = psi_iso(&a, &cfg()).map_err(|e| format!("{name}: {e}"))?;
        passing(&check_morphism(&iso.forward, CheckMode::Full))?;
        passing(&check_morphism(&iso.backward, CheckMode::Full))?;
        let (total, swapped) = (&iso.build.pt2.total, &iso.swapped.pt2.total);
        for i in 0..total.dim() {
            let there = iso.backward.apply(&iso.forward.image_of_basis(i));
            ensure(there == total.basis(i), || format!("{name}: ψ⁻¹ψ moves basis vector {i}"))?;
        }
        for i in 0..swapped.dim() {
            let back = iso.forward.apply(&iso.backward.image_of_basis(i));
            ensure(back == swapped.basis(i), || format!("{name}: ψψ⁻¹ moves basis vector {i}"))?;
        }
        dims.push(total.dim());
    }
    ensure(dims.contains(&16) && dims.contains(&162), || format!("dimensions {dims:?}"))
}

fn square_equivalence() -> Outcome {
    let corpus = [
        ("unit over K[C2]", unit_c2()),
        ("discrete on K[A3] -> K[S3]", discrete_a3_s3()),
        ("K[C3] -> K[S3] doubled", example4_c3_s3()),
        ("normal pair over K[C2×C2]", normal_pair_v4()),
    ];
    for (name, sq) in corpus {
        let built = square_to_cat2(&sq, &cfg()).map_err(|e| format!("{name}: {e}"))?;
        let c = &built.cat2;
        let report = check_cat2(c, CheckMode::Full, cfg().budget).map_err(|e| e.to_string())?;
        passing(&report)?;
        for axiom in ["2C1", "2C2", "2C3", "2C4", "first kernel commutation", "second kernel commutation"] {
            ensure(report.passes(axiom), || format!("{name}: {axiom}"))?;
        }
        passing(&check_crossed_module(&built.first_xmod, CheckMode::Full))?;
        passing(&check_crossed_module(&built.second_xmod, CheckMode::Full))?;
        passing(&built.report)?;
        let (back, _) = cat2_to_square(c, &cfg()).map_err(|e| e.to_string())?;
        passing(&check_crossed_square(&back, CheckMode::Full))?;
        let (a, _) = pt2_to_2action(&c.base, &cfg()).map_err(|e| e.to_string())?;
        passing(&derived_identities(&a, &back, CheckMode::Full))?;
        passing(&square_roundtrip(&sq, &cfg()).map_err(|e| e.to_string())?)?;
        let (_, phi) = phi_collapse(c, &cfg()).map_err(|e| e.to_string())?;
        passing(&phi)?;
    }
    Ok(())
}

fn group_oracle() -> Outcome {
    let g = v4_group_square();
    let group = check_group_square(&g, CheckMode::Full);
    let lifted = lift_group_square(&g, Q, &cfg()).map_err(|e| e.to_string())?;
    let hopf = check_crossed_square(&lifted, CheckMode::Full);
    for entry in &group.entries {
        let Some(counterpart) = hopf_counterpart(&entry.axiom) else { continue };
        let hv = if counterpart.ends_with(": ") {
            hopf.entries.iter().filter(|e| e.axiom.starts_with(counterpart)).all(|e| e.status != Status::Fail)
        } else {
            hopf.passes(counterpart)
        };
        ensure(hv == (entry.status != Status::Fail), || format!("{} disagrees", entry.axiom))?;
    }
    ensure(extract_group_square(&lifted).map_err(|e| e.to_string())? == g, || "extract∘lift moved the square".into())?;
    let s3 = FiniteGroup::symmetric(3);
    let id = GroupHom::identity(&s3);
    let conj = GroupAction::conjugation(&id, &id).unwrap();
    let variants = [
        (id.clone(), conj.clone()),
        (GroupHom::trivial(&s3, &s3), conj),
        (id.clone(), GroupAction::trivial(&s3, &s3)),
    ];
    let ks3 = algebra_by_name("S3", Q).unwrap();
    for (d, act) in variants {
        let group = check_group_xmod(&d, &act, CheckMode::Full);
        let cm = CrossedModule::unchecked(
            &HopfMorphism::from_group_hom(&d, &ks3, &ks3).unwrap(),
            &HopfAction::from_group_action(&act, &ks3, &ks3).unwrap(),
        )
        .unwrap();
        let hopf = check_crossed_module(&cm, CheckMode::Full);
        for axiom in ["CM1", "CM2"] {
            ensure(group.passes(axiom) == hopf.passes(axiom), || format!("{axiom} disagrees"))?;
        }
    }
    Ok(())
}

fn swap_symmetry() -> Outcome {
    let mut corpus = small_squares();
    corpus.push(("K[C3] -> K[S3] doubled", example4_c3_s3()));
    for (name, sq) in corpus {
        let swapped = swap_square(&sq);
        ensure(check_crossed_square(&swapped, CheckMode::Full).passed(), || format!("{name}: swapped square fails"))?;
    }
    Ok(())
}

fn degenerate_cgkmm() -> Outcome {
    for name in GROUPS {
        let h = algebra_by_name(name, Q).map_err(|e| e.to_string())?;
        ensure(h.primitives(cfg().budget).map_err(|e| e.to_string())?.rank() == 0, || format!("{name} has primitives"))?;
        let (_, iso) = cgkmm_degenerate(&h, &cfg()).map_err(|e| e.to_string())?;
        passing(&check_morphism(&iso, CheckMode::Full))?;
        ensure(iso.is_bijective(), || format!("{name}: not an isomorphism"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let results = [
        run(1, "Hopf axiom suite on group algebras", secs(5), hopf_axioms),
        run(2, "split epimorphisms and their smash products", secs(5), split_epis),
        run(3, "crossed modules and cat¹ objects", secs(30), xmod_equivalence),
        run(4, "internal groupoid identities", secs(60), groupoids),
        run(5, "2-actions and 2-fold split epimorphisms", secs(60), pt2_equivalence),
        run(6, "the ψ isomorphism", secs(120), psi),
        run(7, "crossed squares and cat² objects", secs(300), square_equivalence),
        run(8, "group oracle", secs(30), group_oracle),
        run(9, "transposition symmetry", secs(30), swap_symmetry),
        run(10, "group-like structure theorem", secs(5), degenerate_cgkmm),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
