//! A registry of named, seeded, deterministic numerical checks — one per
//! inequality, monotonicity, unimodality, limit, or equality claim the
//! library implements — plus the minimal-bound region scan.
//!
//! Every check turns its claim into a stream of signed violation values:
//! `violation <= 0` means the sample satisfies the claim with margin, and a
//! sample counts as a violation when its value exceeds zero (the check's
//! tolerance is already folded in). Reports are pure functions of
//! (check, samples, seed): per-sample randomness is derived by hashing the
//! triple, and aggregation uses only order-independent operations (count,
//! max with index tie-break), so results are identical under any parallel
//! schedule.

mod checks;
pub mod sampler;

use rayon::prelude::*;

use crate::bounds::{bound_b, bound_d, bound_k, bound_m, BoundSym};
use crate::error::{domain, Error, Result};
use crate::metrics::PExponent;
use crate::vector::Vector;

pub use checks::registry;

/// What a check asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    Inequality,
    Monotonicity,
    Unimodality,
    Limit,
    EqualityCase,
}

impl CheckKind {
    pub fn label(&self) -> &'static str {
        match self {
            CheckKind::Inequality => "inequality",
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::Unimodality => "unimodality",
            CheckKind::Limit => "limit",
            CheckKind::EqualityCase => "equality-case",
        }
    }
}

/// Static description of one registered check.
#[derive(Debug, Clone, Copy)]
pub struct CheckSpec {
    pub name: &'static str,
    pub kind: CheckKind,
    /// Human-readable parameter domain and sampling strategy.
    pub domain: &'static str,
    /// Slack folded into the violation values.
    pub tolerance: f64,
    /// The domain touches the near-endpoint zone where special-function
    /// evaluation is flagged low-accuracy.
    pub low_accuracy: bool,
}

/// One evaluated sample: a signed violation value (positive = violated)
/// and the parameter point that produced it.
pub struct Sample {
    pub violation: f64,
    pub witness: Vec<(&'static str, f64)>,
}

impl Sample {
    pub fn new(violation: f64, witness: Vec<(&'static str, f64)>) -> Self {
        Self { violation, witness }
    }
}

/// Outcome of running one check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub kind: CheckKind,
    pub samples: u64,
    pub violations: u64,
    /// Worst signed slack over all samples (tolerance already subtracted);
    /// pass iff this is <= 0.
    pub max_violation: f64,
    /// Parameter point achieving `max_violation`, as label/value pairs.
    pub witness: Vec<(String, f64)>,
    pub seed: u64,
    pub low_accuracy: bool,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }

    fn witness_str(&self) -> String {
        if self.witness.is_empty() {
            return "-".to_string();
        }
        self.witness
            .iter()
            .map(|(k, v)| format!("{k}:{v:.9e}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    /// One line of the structured-text report stream.
    pub fn line(&self) -> String {
        let mut s = format!(
            "check={} kind={} status={} samples={} violations={} max_violation={:.9e} seed={} witness={}",
            self.name,
            self.kind.label(),
            if self.passed() { "pass" } else { "fail" },
            self.samples,
            self.violations,
            self.max_violation,
            self.seed,
            self.witness_str(),
        );
        if self.low_accuracy {
            s.push_str(" notes=low-accuracy-domain");
        }
        s
    }

    /// CSV record: name,kind,status,samples,violations,max_violation,seed,witness
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{:.9e},{},{}",
            self.name,
            self.kind.label(),
            if self.passed() { "pass" } else { "fail" },
            self.samples,
            self.violations,
            self.max_violation,
            self.seed,
            self.witness_str(),
        )
    }
}

/// Worst-sample accumulator: larger violation wins, ties go to the lower
/// sample index so parallel reduction is order-independent.
struct Worst {
    violation: f64,
    index: u64,
    witness: Vec<(&'static str, f64)>,
}

impl Worst {
    fn empty() -> Self {
        Self {
            violation: f64::NEG_INFINITY,
            index: u64::MAX,
            witness: Vec::new(),
        }
    }

    fn merge(self, other: Self) -> Self {
        let take_other = other.violation > self.violation
            || (other.violation == self.violation && other.index < self.index);
        if take_other {
            other
        } else {
            self
        }
    }
}

/// Evaluate `total` indexed samples in parallel and assemble the report.
/// `eval` must be a pure function of the index (plus the derived RNG).
pub(crate) fn run_indexed<F>(
    spec: &CheckSpec,
    reported_samples: u64,
    total: u64,
    seed: u64,
    eval: F,
) -> CheckReport
where
    F: Fn(u64) -> Sample + Sync,
{
    let (violations, worst) = (0..total)
        .into_par_iter()
        .map(|i| {
            let s = eval(i);
            let violated = (s.violation > 0.0) as u64;
            (
                violated,
                Worst {
                    violation: s.violation,
                    index: i,
                    witness: s.witness,
                },
            )
        })
        .reduce(
            || (0u64, Worst::empty()),
            |(va, wa), (vb, wb)| (va + vb, wa.merge(wb)),
        );
    CheckReport {
        name: spec.name,
        kind: spec.kind,
        samples: reported_samples,
        violations,
        max_violation: if worst.index == u64::MAX {
            f64::NEG_INFINITY
        } else {
            worst.violation
        },
        witness: worst
            .witness
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        seed,
        low_accuracy: spec.low_accuracy,
    }
}

/// Run one registered check by name.
pub fn run_check(name: &str, samples: u64, seed: u64) -> Result<CheckReport> {
    if samples == 0 {
        return Err(domain("samples must be >= 1"));
    }
    registry()
        .iter()
        .find(|c| c.spec.name == name)
        .map(|c| c.run(samples, seed))
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))
}

/// Run every check whose name starts with `prefix` (`all` matches all).
pub fn run_prefix(prefix: &str, samples: u64, seed: u64) -> Result<Vec<CheckReport>> {
    if samples == 0 {
        return Err(domain("samples must be >= 1"));
    }
    let selected: Vec<_> = registry()
        .iter()
        .filter(|c| prefix == "all" || c.spec.name.starts_with(prefix))
        .collect();
    if selected.is_empty() {
        return Err(Error::UnknownCheck(prefix.to_string()));
    }
    Ok(selected.iter().map(|c| c.run(samples, seed)).collect())
}

/// Run the whole registry.
pub fn run_all(samples: u64, seed: u64) -> Result<Vec<CheckReport>> {
    run_prefix("all", samples, seed)
}

/// Axis-aligned sampling box for the region scan; the same interval is
/// used for all four coordinates of the pair (x, y).
#[derive(Debug, Clone, Copy)]
pub struct ScanBox {
    pub lo: f64,
    pub hi: f64,
}

impl ScanBox {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(domain("degenerate scan box: need finite lo < hi"));
        }
        Ok(Self { lo, hi })
    }
}

impl Default for ScanBox {
    fn default() -> Self {
        Self { lo: -3.0, hi: 3.0 }
    }
}

/// A witness pair for one symbol of the scan histogram.
#[derive(Debug, Clone)]
pub struct ScanWitness {
    pub sym: BoundSym,
    pub x: Vector,
    pub y: Vector,
    pub value: f64,
    pub index: u64,
}

/// Histogram of which bound is minimal over random pairs.
#[derive(Debug, Clone)]
pub struct ScanReport {
    pub p: f64,
    pub boxr: ScanBox,
    pub samples: u64,
    pub seed: u64,
    /// Counts in fixed (B, D, K, M) order; they sum to `samples`.
    pub counts: [(BoundSym, u64); 4],
    /// Lowest-index witness per symbol, for symbols that occurred.
    pub witnesses: Vec<ScanWitness>,
}

const SCAN_SYMS: [BoundSym; 4] = [BoundSym::B, BoundSym::D, BoundSym::K, BoundSym::M];
const SCAN_STREAM: &str = "scan-min-regions";

/// Classify `samples` random planar pairs from the box by their minimal
/// bound. Requires p in (0,1) so that all four bounds are defined.
pub fn scan_min_regions(p: PExponent, boxr: ScanBox, samples: u64, seed: u64) -> Result<ScanReport> {
    if !(p.get() > 0.0 && p.get() < 1.0) {
        return Err(domain("scan requires p in (0,1)"));
    }
    if samples == 0 {
        return Err(domain("samples must be >= 1"));
    }

    let classify = |i: u64| -> (usize, Vector, Vector, f64) {
        let mut rng = sampler::stream(seed, SCAN_STREAM, i);
        loop {
            let x = sampler::uniform_in_box(&mut rng, 2, boxr.lo, boxr.hi);
            let y = sampler::uniform_in_box(&mut rng, 2, boxr.lo, boxr.hi);
            if x.is_zero() || y.is_zero() || x == y {
                continue;
            }
            let vals = [
                bound_b(&x, &y, p).expect("p in (0,1)"),
                bound_d(&x, &y, p).expect("nonzero"),
                bound_k(&x, &y, p).expect("distinct nonzero"),
                bound_m(&x, &y, p).expect("nonzero"),
            ];
            let mut arg = 0;
            for (j, v) in vals.iter().enumerate() {
                if *v < vals[arg] {
                    arg = j;
                }
            }
            return (arg, x, y, vals[arg]);
        }
    };

    type Acc = ([u64; 4], [Option<ScanWitness>; 4]);
    let empty = || -> Acc { ([0; 4], [None, None, None, None]) };
    let (counts, witnesses) = (0..samples)
        .into_par_iter()
        .map(|i| {
            let (arg, x, y, value) = classify(i);
            let mut acc = empty();
            acc.0[arg] = 1;
            acc.1[arg] = Some(ScanWitness {
                sym: SCAN_SYMS[arg],
                x,
                y,
                value,
                index: i,
            });
            acc
        })
        .reduce(empty, |mut a, b| {
            for j in 0..4 {
                a.0[j] += b.0[j];
                a.1[j] = match (a.1[j].take(), b.1[j].clone()) {
                    (None, w) => w,
                    (w, None) => w,
                    (Some(wa), Some(wb)) => Some(if wb.index < wa.index { wb } else { wa }),
                };
            }
            a
        });

    Ok(ScanReport {
        p: p.get(),
        boxr,
        samples,
        seed,
        counts: [
            (BoundSym::B, counts[0]),
            (BoundSym::D, counts[1]),
            (BoundSym::K, counts[2]),
            (BoundSym::M, counts[3]),
        ],
        witnesses: witnesses.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_is_large_enough_and_unique() {
        let names: Vec<&str> = registry().iter().map(|c| c.spec.name).collect();
        assert!(names.len() >= 22, "registry has {} checks", names.len());
        let mut dedup = names.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), names.len(), "duplicate check names");
    }

    #[test]
    fn unknown_check_errors() {
        assert!(matches!(
            run_check("no-such-check", 10, 1),
            Err(Error::UnknownCheck(_))
        ));
        assert!(run_prefix("nonexistent", 10, 1).is_err());
    }

    #[test]
    fn prefix_filter_selects_families() {
        let reports = run_prefix("lemma-2ll", 256, 7).unwrap();
        assert_eq!(reports.len(), 2);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_all(64, 7).unwrap();
        let b = run_all(64, 7).unwrap();
        let la: Vec<String> = a.iter().map(|r| r.line()).collect();
        let lb: Vec<String> = b.iter().map(|r| r.line()).collect();
        assert_eq!(la, lb);
        // single-sample runs still produce complete reports
        for r in run_all(1, 7).unwrap() {
            assert_eq!(r.samples, 1);
        }
    }

    #[test]
    fn scan_counts_sum_and_witnesses_verify() {
        let p = PExponent::new(0.5).unwrap();
        let rep = scan_min_regions(p, ScanBox::default(), 2000, 42).unwrap();
        let total: u64 = rep.counts.iter().map(|(_, c)| c).sum();
        assert_eq!(total, 2000);
        for w in &rep.witnesses {
            let vals = [
                (BoundSym::B, bound_b(&w.x, &w.y, p).unwrap()),
                (BoundSym::D, bound_d(&w.x, &w.y, p).unwrap()),
                (BoundSym::K, bound_k(&w.x, &w.y, p).unwrap()),
                (BoundSym::M, bound_m(&w.x, &w.y, p).unwrap()),
            ];
            let min = vals.iter().map(|(_, v)| *v).fold(f64::INFINITY, f64::min);
            let own = vals.iter().find(|(s, _)| *s == w.sym).unwrap().1;
            assert!(own <= min + 1e-12);
        }
        assert!(scan_min_regions(p, ScanBox::default(), 0, 1).is_err());
        assert!(ScanBox::new(1.0, 1.0).is_err());
        assert!(scan_min_regions(PExponent::new(1.5).unwrap(), ScanBox::default(), 10, 1).is_err());
    }
}
