use super::FinHopf;
use crate::config::CheckMode;
use crate::exactla::SparseVec;
use crate::report::{differ, Report};

/// Checks every Hopf algebra axiom on basis tuples, plus cocommutativity,
/// `S² = id`, and the group-like flags.
pub fn check_hopf(h: &FinHopf, mode: CheckMode) -> Report {
    let n = h.dim();
    let f = h.field();
    let labels = h.labels();
    let pairs = h.tensor_labels();
    let triples: Vec<String> = pairs.iter().flat_map(|p| labels.iter().map(move |c| format!("{p}⊗{c}"))).collect();
    let scalar = ["1".to_string()];
    let mut report = Report::new(format!("Hopf algebra {}", h.name()), mode);

    let left_times = |v: &SparseVec, k: usize| h.mul(v, &h.basis(k));
    report.axiom("associativity", mode, &[labels, labels, labels], |t| {
        let lhs = left_times(&h.mult().col(t[0] * n + t[1]), t[2]);
        let rhs = h.mul(&h.basis(t[0]), &h.mult().col(t[1] * n + t[2]));
        differ(&lhs, &rhs, labels)
    });
    report.axiom("unit", mode, &[labels], |t| {
        let x = h.basis(t[0]);
        let lhs = h.mul(h.unit(), &x);
        let rhs = h.mul(&x, h.unit());
        differ(&lhs, &x, labels).or_else(|| differ(&rhs, &x, labels))
    });

    let delta_left = |v: &SparseVec| {
        let mut entries = Vec::new();
        for (p, c) in v.entries() {
            for (q, d) in h.comult().col(p / n).entries() {
                entries.push((q * n + p % n, c * d));
            }
        }
        SparseVec::from_entries(f, n * n * n, entries)
    };
    let delta_right = |v: &SparseVec| {
        let mut entries = Vec::new();
        for (p, c) in v.entries() {
            for (q, d) in h.comult().col(p % n).entries() {
                entries.push(((p / n) * n * n + q, c * d));
            }
        }
        SparseVec::from_entries(f, n * n * n, entries)
    };
    report.axiom("coassociativity", mode, &[labels], |t| {
        let d = h.comult().col(t[0]);
        differ(&delta_left(&d), &delta_right(&d), &triples)
    });
    report.axiom("counit", mode, &[labels], |t| {
        let d = h.comult().col(t[0]);
        let mut left = Vec::new();
        let mut right = Vec::new();
        for (p, c) in d.entries() {
            left.push((p % n, c * &h.counit().col(p / n).get(0)));
            right.push((p / n, c * &h.counit().col(p % n).get(0)));
        }
        let x = h.basis(t[0]);
        differ(&SparseVec::from_entries(f, n, left), &x, labels)
            .or_else(|| differ(&SparseVec::from_entries(f, n, right), &x, labels))
    });

    report.axiom("comultiplication is multiplicative", mode, &[labels, labels], |t| {
        let lhs = h.delta(&h.mult().col(t[0] * n + t[1]));
        let rhs = h.mul_tensor(&h.comult().col(t[0]), &h.comult().col(t[1]));
        differ(&lhs, &rhs, &pairs)
    });
    report.axiom("comultiplication is unital", mode, &[&scalar], |_| {
        differ(&h.delta(h.unit()), &h.unit().kron(h.unit()), &pairs)
    });
    report.axiom("counit is multiplicative", mode, &[labels, labels], |t| {
        let lhs = h.epsilon(&h.mult().col(t[0] * n + t[1]));
        let rhs = &h.epsilon(&h.basis(t[0])) * &h.epsilon(&h.basis(t[1]));
        (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
    });
    report.axiom("counit is unital", mode, &[&scalar], |_| {
        let e = h.epsilon(h.unit());
        (!e.is_one()).then(|| (e.to_string(), "1".to_string()))
    });

    report.axiom("antipode", mode, &[labels], |t| {
        let d = h.comult().col(t[0]);
        let mut left = h.zero();
        let mut right = h.zero();
        for (p, c) in d.entries() {
            let (a, b) = (p / n, p % n);
            left = left.axpy(c, &h.mul(&h.antipode().col(a), &h.basis(b)));
            right = right.axpy(c, &h.mul(&h.basis(a), &h.antipode().col(b)));
        }
        let expected = h.unit().scale(&h.epsilon(&h.basis(t[0])));
        differ(&left, &expected, labels).or_else(|| differ(&right, &expected, labels))
    });
    report.axiom("cocommutativity", mode, &[labels], |t| {
        let d = h.comult().col(t[0]);
        let flipped =
            SparseVec::from_entries(f, n * n, d.entries().iter().map(|(p, c)| ((p % n) * n + p / n, c.clone())).collect());
        differ(&flipped, &d, &pairs)
    });
    report.axiom("antipode is involutive", mode, &[labels], |t| {
        let x = h.basis(t[0]);
        differ(&h.s(&h.s(&x)), &x, labels)
    });
    if let Some(flags) = h.grouplike_flags() {
        report.axiom("group-like flags", mode, &[labels], |t| {
            let x = h.basis(t[0]);
            (flags[t[0]] && !h.is_grouplike(&x)).then(|| (h.delta(&x).render(&pairs), x.kron(&x).render(&pairs)))
        });
    }
    report.finish()
}
