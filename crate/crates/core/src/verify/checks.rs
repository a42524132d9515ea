//! The registered checks.
//!
//! Naming follows the claims they verify: `lemma-*` / `cor-*` for the
//! elementary monotonicity and inequality facts, `ineq-*` for the named
//! logarithmic inequalities, `thm-*` for the growth and sharp-constant
//! statements. Grid checks compare consecutive grid values with slack
//! 1e-12; limit checks evaluate at a boundary offset of 1e-8 and compare
//! against the stated limit. Monotone families evaluate a fixed set of
//! outer parameter values with the inner grid resolution derived from the
//! requested sample count.

use rand::Rng;

use crate::bounds::{
    bound_2j, bound_2k, bound_2kk, bound_k, distortion_rhs, eta_bound_nd, eta_bound_plane,
    hyp_growth_bound, j_quasi_bound,
};
use crate::geometry::{radial_map, radial_projection, unit_inversion, RadialExponents};
use crate::metrics::{j_metric, p_angular, q_ratio, rho0, sharp_constant, PExponent};
use crate::special::{arcosh, artanh, minorant_p, named_constants, Distortion};
use crate::vector::Vector;

use super::sampler::{direction, stream, uniform_with_norm};
use super::{run_indexed, CheckKind, CheckReport, CheckSpec, Sample};

/// A registered check: its description plus the function that runs it.
pub struct Check {
    pub spec: CheckSpec,
    runner: fn(&CheckSpec, u64, u64) -> CheckReport,
}

impl Check {
    pub fn run(&self, samples: u64, seed: u64) -> CheckReport {
        (self.runner)(&self.spec, samples, seed)
    }
}

/// Every registered check, in report order.
pub fn registry() -> &'static [Check] {
    &REGISTRY
}

macro_rules! check {
    ($name:literal, $kind:ident, $domain:literal, $tol:expr, $runner:ident) => {
        Check {
            spec: CheckSpec {
                name: $name,
                kind: CheckKind::$kind,
                domain: $domain,
                tolerance: $tol,
                low_accuracy: false,
            },
            runner: $runner,
        }
    };
}

static REGISTRY: [Check; 31] = [
    check!(
        "lemma-2c-f-monotone",
        Monotonicity,
        "f(x)=(1+x)log(1+x)/x on log grid x in [1e-6,1e3]; limit 1 at 0+",
        1e-12,
        run_2c_f
    ),
    check!(
        "lemma-2c-g-monotone",
        Monotonicity,
        "g(x)=x/log(1+x) on log grid x in [1e-6,1e3]; limit 1 at 0+",
        1e-12,
        run_2c_g
    ),
    check!(
        "lemma-2c-h-monotone",
        Monotonicity,
        "h(K)=K(1-t^(2/K)) increasing, K log grid in [1+1e-6,1e3], t in {0.05,0.2,t0,0.7,0.95}",
        1e-12,
        run_2c_h
    ),
    check!(
        "cor-2e-f-monotone",
        Monotonicity,
        "a->(1+ax)^(1/a) decreasing on [1+1e-6,50], x in {0.05,0.3,0.62,0.9}",
        1e-12,
        run_2e_f
    ),
    check!(
        "cor-2e-g-monotone",
        Monotonicity,
        "a->(log(1+x^a))^(1/a) increasing on [1+1e-6,50], x in {0.05,0.3,0.62,0.9}",
        1e-12,
        run_2e_g
    ),
    check!(
        "cor-2e-log-ineq",
        Inequality,
        "log(1+x^a) <= max{log(1+x), log^a(1+x)}, uniform x in [0,30], a in [0,1]",
        1e-12,
        run_2e_log
    ),
    check!(
        "lemma-2e0-f-monotone",
        Monotonicity,
        "f(K)=r arth(1/ch u) sh u decreasing, u=arch(1/r)/K, K in [1+1e-6,40], r in {0.1,0.3,t0,0.8,0.97}; limit sqrt(1-r^2) arth r at K->1+",
        1e-12,
        run_2e0_f
    ),
    check!(
        "lemma-2e0-g-monotone",
        Monotonicity,
        "g(K)=K f(K) increasing, same grid and limit",
        1e-12,
        run_2e0_g
    ),
    check!(
        "lemma-2ll-f-monotone",
        Monotonicity,
        "f(K)=(K-log(1/t))/(t^(2/K)(K+log(1/t))) increasing, K in [1+1e-6,80], t in {0.05,0.3,t0,0.9}; endpoint m1 at t0",
        1e-12,
        run_2ll_f
    ),
    check!(
        "lemma-2ll-g-monotone",
        Monotonicity,
        "g(K)=t0^(1/K) log(1/t0^2)/(K(1-t0^(2/K))) increasing, K in [1+1e-6,80]; endpoint m2",
        1e-12,
        run_2ll_g
    ),
    check!(
        "ineq-1c",
        Inequality,
        "2arth(t^(1/K)) <= 2K arth(t), grid t in [t0,1-1e-6] x K in [1,50]",
        1e-12,
        run_1c
    ),
    check!(
        "ineq-1a",
        Inequality,
        "2arth(t^(1/K)) <= K (2arth t)^(1/K), grid t in (0,t0] x K in [1,50]",
        1e-12,
        run_1a
    ),
    check!(
        "ineq-1ccc",
        Inequality,
        "2arth(t^(1/K)) <= K max{2arth t, (2arth t)^(1/K)}, grid t in [0,1) x K in [1,50]",
        1e-12,
        run_1ccc
    ),
    check!(
        "thm-1dd",
        Inequality,
        "rho0(z^(1/K)) <= K max{rho0(z), rho0(z)^(1/K)}, grid K in [1,10] x z in (0,1)",
        1e-12,
        run_1dd
    ),
    check!(
        "thm-1dd-remark",
        Limit,
        "central difference of f(K)=1-2arth(t0^(1/K))/K^(9/10) at K=1.005 is negative, near -0.004",
        1e-3,
        run_1dd_remark
    ),
    check!(
        "lemma-1d-unimodal",
        Unimodality,
        "F(r)=2arth(1/ch(arch(1/r)/K))/max{2arth r,(2arth r)^(1/K)} rises on (0,t0), falls on (t0,1); K in {1.05,1.5,2,5,10}",
        1e-12,
        run_1d
    ),
    check!(
        "thm-1ddd",
        Inequality,
        "2arth(p(r)) <= c3(K) max{rho0(r), rho0(r)^(1/K)}, grid K in [1,10] x r in (0,1)",
        1e-12,
        run_1ddd
    ),
    check!(
        "ineq-2i",
        Inequality,
        "log-form quasi-invariance for A_{1/K,K} on random ball pairs, K in {1,1.5,2,5}, dims 2-3",
        1e-12,
        run_2i
    ),
    check!(
        "cor-jandmyf",
        Inequality,
        "j(A(x),A(y)) <= 2^(1-1/K) max{j, j^(1/K)} on random punctured-ball pairs, K in {1,1.5,2,5}",
        1e-12,
        run_jandmyf
    ),
    check!(
        "sandwich-lemma",
        Inequality,
        "|h(x)-h(z)| <= |h(x)-h(y)| <= 3|h(x)-h(z)| for inversions, random pairs with |x|<=|y|; equality at y=-x",
        1e-12,
        run_sandwich
    ),
    check!(
        "lemma-2ii",
        Inequality,
        "planar exterior distortion bound, random pairs with |x|,|y|>1, K in {1,1.3,2,3}",
        1e-12,
        run_2ii
    ),
    check!(
        "lemma-2iii",
        Inequality,
        "n-dimensional exterior distortion bound, dims 2-3, K in {1,1.3,2,3}",
        1e-12,
        run_2iii
    ),
    check!(
        "cor-2j",
        Inequality,
        "alpha_{-1/K} exterior bound, random pairs with |x|,|y|>=1",
        1e-12,
        run_cor_2j
    ),
    check!(
        "cor-2k",
        Inequality,
        "ball bound on alpha_{-beta} with beta=K^(1/(n-1)), dims 2-3",
        1e-12,
        run_cor_2k
    ),
    check!(
        "cor-2kk",
        Inequality,
        "planar ball bound on alpha_{-K}",
        1e-12,
        run_cor_2kk
    ),
    check!(
        "lemma-le",
        Inequality,
        "sqrt(1+p^2a-2p^a cos s)/((1+X)^a-1) <= (1+p^a)/((2+p)^a-1), random p in [1,12], a in (0,1], s in (0,2pi)",
        1e-10,
        run_le
    ),
    check!(
        "lemma-ve",
        Inequality,
        "(1+p^d)/((2+p)^d-1) <= 2/(3^d-1), grid p in [1,50] x d in (0,1]; equality at p=1",
        1e-12,
        run_ve
    ),
    check!(
        "thm-kal-bound",
        Inequality,
        "Q(x,y) <= 2/(3^a-1) over random admissible pairs, a~U(0.05,1], b~U[1,5], dims 2-3",
        1e-9,
        run_kal_bound
    ),
    check!(
        "thm-kal-exterior",
        Inequality,
        "Q(x,y) <= 1 when 1 <= |x| <= |y|",
        1e-12,
        run_kal_exterior
    ),
    check!(
        "thm-kal-sup",
        EqualityCase,
        "Q(x,-x) = 2/(3^a-1) on the witness family |x| < 1/3",
        1e-12,
        run_kal_sup
    ),
    check!(
        "thm-mymaj-chain",
        Inequality,
        "alpha_p <= |A_{p,1/p}(x)-A_{p,1/p}(y)| <= K-bound, termwise, random pairs, p in (0,1)",
        1e-9,
        run_mymaj
    ),
];

// ---------------------------------------------------------------- helpers

fn lin(i: u64, n: u64, lo: f64, hi: f64) -> f64 {
    if n <= 1 {
        return lo;
    }
    lo + (hi - lo) * (i as f64) / ((n - 1) as f64)
}

fn log_grid(i: u64, n: u64, lo: f64, hi: f64) -> f64 {
    (lin(i, n, lo.ln(), hi.ln())).exp()
}

fn midpoint(i: u64, n: u64, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * (i as f64 + 0.5) / (n as f64)
}

/// Fold extra (limit/endpoint) samples into a grid report.
fn merge_extras(mut report: CheckReport, extras: Vec<Sample>) -> CheckReport {
    for s in extras {
        if s.violation > 0.0 {
            report.violations += 1;
        }
        if s.violation > report.max_violation {
            report.max_violation = s.violation;
            report.witness = s.witness.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        }
    }
    report
}

struct MonotoneCfg<'a> {
    outer_label: &'static str,
    outers: &'a [f64],
    inner_label: &'static str,
    lo: f64,
    hi: f64,
    log_inner: bool,
    increasing: bool,
}

/// Consecutive-grid-value monotonicity over one or more parameter families.
fn monotone_grid<F>(
    spec: &CheckSpec,
    samples: u64,
    seed: u64,
    cfg: &MonotoneCfg<'_>,
    f: F,
    extras: Vec<Sample>,
) -> CheckReport
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let families = cfg.outers.len().max(1) as u64;
    let inner = (samples / families).max(2);
    let pairs_per = inner - 1;
    let total = families * pairs_per;
    let tol = spec.tolerance;
    let report = run_indexed(spec, samples, total, seed, |i| {
        let fam = (i / pairs_per) as usize;
        let k = i % pairs_per;
        let outer = cfg.outers.get(fam).copied().unwrap_or(f64::NAN);
        let grid = |j: u64| {
            if cfg.log_inner {
                log_grid(j, inner, cfg.lo, cfg.hi)
            } else {
                lin(j, inner, cfg.lo, cfg.hi)
            }
        };
        let (x0, x1) = (grid(k), grid(k + 1));
        let (f0, f1) = (f(outer, x0), f(outer, x1));
        let violation = if cfg.increasing { f0 - f1 } else { f1 - f0 } - tol;
        let mut witness = vec![(cfg.inner_label, x0)];
        if !cfg.outers.is_empty() {
            witness.push((cfg.outer_label, outer));
        }
        Sample::new(violation, witness)
    });
    merge_extras(report, extras)
}

/// Inequality on a 2-d rectangular grid; `f` returns the signed slack
/// before tolerance subtraction.
fn grid2_inequality<F>(
    spec: &CheckSpec,
    samples: u64,
    seed: u64,
    a_label: &'static str,
    (a_lo, a_hi, a_n): (f64, f64, u64),
    b_label: &'static str,
    (b_lo, b_hi): (f64, f64),
    f: F,
) -> CheckReport
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    let b_n = (samples / a_n).max(2);
    let total = a_n * b_n;
    let tol = spec.tolerance;
    run_indexed(spec, samples, total, seed, |i| {
        let a = lin(i % a_n, a_n, a_lo, a_hi);
        let b = lin(i / a_n, b_n, b_lo, b_hi);
        Sample::new(f(a, b) - tol, vec![(a_label, a), (b_label, b)])
    })
}

fn t0v() -> f64 {
    named_constants().t0
}

fn dist(k: f64) -> Distortion {
    Distortion::new(k).expect("K >= 1")
}

fn pexp(p: f64) -> PExponent {
    PExponent::new(p).expect("finite p")
}

// ------------------------------------------------------------- the checks

fn run_2c_f(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let f = |_: f64, x: f64| (1.0 + x) * x.ln_1p() / x;
    let lim = (1.0 + 1e-8) * 1e-8f64.ln_1p() / 1e-8;
    let extras = vec![Sample::new((lim - 1.0).abs() - 1e-6, vec![("x", 1e-8)])];
    let cfg = MonotoneCfg {
        outer_label: "",
        outers: &[],
        inner_label: "x",
        lo: 1e-6,
        hi: 1e3,
        log_inner: true,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, f, extras)
}

fn run_2c_g(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let f = |_: f64, x: f64| x / x.ln_1p();
    let lim = 1e-8 / 1e-8f64.ln_1p();
    let extras = vec![Sample::new((lim - 1.0).abs() - 1e-6, vec![("x", 1e-8)])];
    let cfg = MonotoneCfg {
        outer_label: "",
        outers: &[],
        inner_label: "x",
        lo: 1e-6,
        hi: 1e3,
        log_inner: true,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, f, extras)
}

fn run_2c_h(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let outers = [0.05, 0.2, t0v(), 0.7, 0.95];
    let f = |t: f64, k: f64| k * (1.0 - t.powf(2.0 / k));
    let cfg = MonotoneCfg {
        outer_label: "t",
        outers: &outers,
        inner_label: "K",
        lo: 1.0 + 1e-6,
        hi: 1e3,
        log_inner: true,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, f, Vec::new())
}

fn run_2e_f(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let outers = [0.05, 0.3, 0.62, 0.9];
    let f = |x: f64, a: f64| (1.0 + a * x).powf(1.0 / a);
    let cfg = MonotoneCfg {
        outer_label: "x",
        outers: &outers,
        inner_label: "a",
        lo: 1.0 + 1e-6,
        hi: 50.0,
        log_inner: false,
        increasing: false,
    };
    monotone_grid(spec, samples, seed, &cfg, f, Vec::new())
}

fn run_2e_g(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let outers = [0.05, 0.3, 0.62, 0.9];
    let f = |x: f64, a: f64| x.powf(a).ln_1p().powf(1.0 / a);
    let cfg = MonotoneCfg {
        outer_label: "x",
        outers: &outers,
        inner_label: "a",
        lo: 1.0 + 1e-6,
        hi: 50.0,
        log_inner: false,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, f, Vec::new())
}

fn run_2e_log(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let x: f64 = rng.random_range(0.0..30.0);
        let a: f64 = rng.random_range(0.0..=1.0);
        let lhs = x.powf(a).ln_1p();
        let rhs = x.ln_1p().max(x.ln_1p().powf(a));
        Sample::new(lhs - rhs - tol, vec![("x", x), ("a", a)])
    })
}

fn le0_f(r: f64, k: f64) -> f64 {
    let u = arcosh(1.0 / r) / k;
    r * artanh(1.0 / u.cosh()) * u.sinh()
}

fn run_2e0_f(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let outers = [0.1, 0.3, t0v(), 0.8, 0.97];
    let extras = outers
        .iter()
        .map(|&r| {
            let lim = (1.0 - r * r).sqrt() * artanh(r);
            Sample::new(
                (le0_f(r, 1.0 + 1e-8) - lim).abs() - 1e-6,
                vec![("r", r), ("K", 1.0 + 1e-8)],
            )
        })
        .collect();
    let cfg = MonotoneCfg {
        outer_label: "r",
        outers: &outers,
        inner_label: "K",
        lo: 1.0 + 1e-6,
        hi: 40.0,
        log_inner: false,
        increasing: false,
    };
    monotone_grid(spec, samples, seed, &cfg, |r, k| le0_f(r, k), extras)
}

fn run_2e0_g(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let outers = [0.1, 0.3, t0v(), 0.8, 0.97];
    let extras = outers
        .iter()
        .map(|&r| {
            let lim = (1.0 - r * r).sqrt() * artanh(r);
            let k = 1.0 + 1e-8;
            Sample::new(
                (k * le0_f(r, k) - lim).abs() - 1e-6,
                vec![("r", r), ("K", k)],
            )
        })
        .collect();
    let cfg = MonotoneCfg {
        outer_label: "r",
        outers: &outers,
        inner_label: "K",
        lo: 1.0 + 1e-6,
        hi: 40.0,
        log_inner: false,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, |r, k| k * le0_f(r, k), extras)
}

fn ll_f(t: f64, k: f64) -> f64 {
    let l = (1.0 / t).ln();
    (k - l) / (t.powf(2.0 / k) * (k + l))
}

fn run_2ll_f(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let c = named_constants();
    let outers = [0.05, 0.3, c.t0, 0.9];
    let extras = vec![
        Sample::new(
            (ll_f(c.t0, 1.0 + 1e-8) - c.m1).abs() - 5e-4,
            vec![("t", c.t0), ("K", 1.0 + 1e-8)],
        ),
        // the endpoint constant itself, to four printed decimals
        Sample::new((c.m1 - 0.6027).abs() - 5e-4, vec![("m1", c.m1)]),
    ];
    let cfg = MonotoneCfg {
        outer_label: "t",
        outers: &outers,
        inner_label: "K",
        lo: 1.0 + 1e-6,
        hi: 80.0,
        log_inner: false,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, ll_f, extras)
}

fn run_2ll_g(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let c = named_constants();
    let t0 = c.t0;
    let g = move |_: f64, k: f64| {
        t0.powf(1.0 / k) * (1.0 / (t0 * t0)).ln() / (k * (1.0 - t0.powf(2.0 / k)))
    };
    let extras = vec![
        Sample::new((g(0.0, 1.0 + 1e-8) - c.m2).abs() - 5e-4, vec![("K", 1.0 + 1e-8)]),
        Sample::new((c.m2 - 0.9072).abs() - 5e-4, vec![("m2", c.m2)]),
    ];
    let cfg = MonotoneCfg {
        outer_label: "",
        outers: &[],
        inner_label: "K",
        lo: 1.0 + 1e-6,
        hi: 80.0,
        log_inner: false,
        increasing: true,
    };
    monotone_grid(spec, samples, seed, &cfg, g, extras)
}

fn run_1c(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    grid2_inequality(
        spec,
        samples,
        seed,
        "K",
        (1.0, 50.0, 64),
        "t",
        (t0v(), 1.0 - 1e-6),
        |k, t| 2.0 * artanh(t.powf(1.0 / k)) - k * 2.0 * artanh(t),
    )
}

fn run_1a(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    grid2_inequality(
        spec,
        samples,
        seed,
        "K",
        (1.0, 50.0, 64),
        "t",
        (1e-9, t0v()),
        |k, t| 2.0 * artanh(t.powf(1.0 / k)) - k * (2.0 * artanh(t)).powf(1.0 / k),
    )
}

fn run_1ccc(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    grid2_inequality(
        spec,
        samples,
        seed,
        "K",
        (1.0, 50.0, 64),
        "t",
        (0.0, 1.0 - 1e-6),
        |k, t| {
            let rho = 2.0 * artanh(t);
            2.0 * artanh(t.powf(1.0 / k)) - k * rho.max(rho.powf(1.0 / k))
        },
    )
}

fn run_1dd(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    grid2_inequality(
        spec,
        samples,
        seed,
        "K",
        (1.0, 10.0, 64),
        "z",
        (1e-6, 1.0 - 1e-6),
        |k, z| {
            let lhs = rho0(z.powf(1.0 / k)).expect("z in (0,1)");
            let zv = Vector::planar(z, 0.0);
            lhs - hyp_growth_bound(&zv, dist(k)).expect("valid")
        },
    )
}

fn run_1dd_remark(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let t0 = t0v();
    let f = |k: f64| 1.0 - 2.0 * artanh(t0.powf(1.0 / k)) / k.powf(0.9);
    let h = 1e-5;
    let fd = (f(1.005 + h) - f(1.005 - h)) / (2.0 * h);
    let report = run_indexed(spec, samples, 1, seed, |_| {
        Sample::new((fd - (-0.004)).abs() - spec.tolerance, vec![("K", 1.005), ("fd", fd)])
    });
    // the derivative must itself be negative
    merge_extras(report, vec![Sample::new(fd, vec![("K", 1.005), ("fd", fd)])])
}

fn unimodal_f(r: f64, k: f64) -> f64 {
    let num = 2.0 * artanh(1.0 / (arcosh(1.0 / r) / k).cosh());
    let rho = 2.0 * artanh(r);
    num / rho.max(rho.powf(1.0 / k))
}

fn run_1d(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let t0 = t0v();
    let ks = [1.05, 1.5, 2.0, 5.0, 10.0];
    let families = ks.len() as u64;
    let inner = (samples / families).max(8);
    let pairs = inner - 1;
    let tol = spec.tolerance;
    let report = run_indexed(spec, samples, families * pairs, seed, |i| {
        let k = ks[(i / pairs) as usize];
        let j = i % pairs;
        let r0 = midpoint(j, inner, 0.0, 1.0);
        let r1 = midpoint(j + 1, inner, 0.0, 1.0);
        let (f0, f1) = (unimodal_f(r0, k), unimodal_f(r1, k));
        let violation = if r1 <= t0 {
            f0 - f1 // must rise left of t0
        } else if r0 >= t0 {
            f1 - f0 // must fall right of t0
        } else {
            // straddling pair: the peak itself sits at t0
            let delta = 1.0 / inner as f64;
            (unimodal_f(t0 - delta, k) - unimodal_f(t0, k))
                .max(unimodal_f(t0 + delta, k) - unimodal_f(t0, k))
        } - tol;
        Sample::new(violation, vec![("r", r0), ("K", k)])
    });
    report
}

fn run_1ddd(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    grid2_inequality(
        spec,
        samples,
        seed,
        "K",
        (1.0, 10.0, 64),
        "r",
        (1e-6, 1.0 - 1e-6),
        |k, r| {
            let kk = dist(k);
            let lhs = 2.0 * artanh(minorant_p(kk, r).expect("r in (0,1)"));
            lhs - distortion_rhs(r, kk).expect("valid")
        },
    )
}

const QC_KS: [f64; 4] = [1.0, 1.5, 2.0, 5.0];

fn ball_pair(seed: u64, name: &str, i: u64) -> (Vector, Vector, f64) {
    let mut rng = stream(seed, name, i);
    let dim = 2 + (i % 2) as usize;
    let k = QC_KS[((i / 2) % 4) as usize];
    let x = uniform_with_norm(&mut rng, dim, -1.0, 1.0, 1e-3, 1.0 - 1e-9);
    let y = uniform_with_norm(&mut rng, dim, -1.0, 1.0, 1e-3, 1.0 - 1e-9);
    (x, y, k)
}

fn run_2i(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let (x, y, k) = ball_pair(seed, spec.name, i);
        let e = RadialExponents::new(1.0 / k, k).expect("positive");
        let ax = radial_map(&x, e).expect("nonzero");
        let ay = radial_map(&y, e).expect("nonzero");
        let lhs = (ax.dist(&ay).expect("dims") / ax.norm().min(ay.norm())).ln_1p();
        let t = (x.dist(&y).expect("dims") / x.norm().min(y.norm())).ln_1p();
        let rhs = 2f64.powf(1.0 - 1.0 / k) * t.max(t.powf(1.0 / k));
        Sample::new(lhs - rhs - tol, vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k)])
    })
}

fn run_jandmyf(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let (x, y, k) = ball_pair(seed, spec.name, i);
        let e = RadialExponents::new(1.0 / k, k).expect("positive");
        let ax = radial_map(&x, e).expect("nonzero");
        let ay = radial_map(&y, e).expect("nonzero");
        let lhs = j_metric(&ax, &ay).expect("nonzero");
        let rhs = j_quasi_bound(&x, &y, dist(k)).expect("ball pair");
        Sample::new(lhs - rhs - tol, vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k)])
    })
}

fn run_sandwich(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let dim = 2 + (i % 2) as usize;
        let radius: f64 = rng.random_range(0.5..2.0);
        let antipodal = i % 8 == 0;
        let mut x = uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-3, f64::INFINITY);
        let mut y = if antipodal {
            x.scale(-1.0)
        } else {
            uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-3, f64::INFINITY)
        };
        if x.norm() > y.norm() {
            std::mem::swap(&mut x, &mut y);
        }
        let z = radial_projection(&x, &y).expect("nonzero");
        let hx = unit_inversion(&x, radius).expect("nonzero");
        let hy = unit_inversion(&y, radius).expect("nonzero");
        let hz = unit_inversion(&z, radius).expect("nonzero");
        let lo = hx.dist(&hz).expect("dims");
        let mid = hx.dist(&hy).expect("dims");
        let scale = 1.0 + mid.abs();
        let mut violation = (lo - mid).max(mid - 3.0 * lo) - tol * scale;
        if antipodal {
            violation = violation.max((mid - 3.0 * lo).abs() - tol * scale);
        }
        Sample::new(violation, vec![("|x|", x.norm()), ("|y|", y.norm()), ("r", radius)])
    })
}

const EXT_KS: [f64; 4] = [1.0, 1.3, 2.0, 3.0];

fn exterior_pair(seed: u64, name: &str, i: u64, dim: usize) -> (Vector, Vector, f64) {
    let mut rng = stream(seed, name, i);
    let k = EXT_KS[(i % 4) as usize];
    let rx: f64 = rng.random_range(0.0..3.0);
    let ry: f64 = rng.random_range(0.0..3.0);
    let x = direction(&mut rng, dim).scale(1.0 + 1e-6 + rx);
    let y = direction(&mut rng, dim).scale(1.0 + 1e-6 + ry);
    (x, y, k)
}

fn rel_slack(lhs: f64, rhs: f64, tol: f64) -> f64 {
    lhs - rhs - tol * (1.0 + rhs.abs())
}

fn run_2ii(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let (x, y, k) = exterior_pair(seed, spec.name, i, 2);
        let lhs = p_angular(&x, &y, pexp(k)).expect("nonzero");
        let rhs = eta_bound_plane(&x, &y, dist(k)).expect("exterior");
        Sample::new(rel_slack(lhs, rhs, tol), vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k)])
    })
}

fn run_2iii(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let dim = 2 + (i % 2) as usize;
        let (x, y, k) = exterior_pair(seed, spec.name, i, dim);
        let beta = k.powf(1.0 / (dim as f64 - 1.0));
        let lhs = p_angular(&x, &y, pexp(beta)).expect("nonzero");
        let rhs = eta_bound_nd(&x, &y, dist(k), dim).expect("exterior");
        Sample::new(rel_slack(lhs, rhs, tol), vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k), ("n", dim as f64)])
    })
}

fn run_cor_2j(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let dim = 2 + (i % 2) as usize;
        let (x, y, k) = exterior_pair(seed, spec.name, i, dim);
        let lhs = p_angular(&x, &y, pexp(-1.0 / k)).expect("nonzero");
        let rhs = bound_2j(&x, &y, dist(k)).expect("exterior");
        Sample::new(rel_slack(lhs, rhs, tol), vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k)])
    })
}

fn run_cor_2k(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let (x, y, k) = ball_pair(seed, spec.name, i);
        let n = x.dim();
        let beta = k.powf(1.0 / (n as f64 - 1.0));
        let lhs = p_angular(&x, &y, pexp(-beta)).expect("nonzero");
        let rhs = bound_2k(&x, &y, dist(k), n).expect("ball pair");
        Sample::new(rel_slack(lhs, rhs, tol), vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k), ("n", n as f64)])
    })
}

fn run_cor_2kk(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let k = QC_KS[(i % 4) as usize];
        let x = uniform_with_norm(&mut rng, 2, -1.0, 1.0, 1e-3, 1.0 - 1e-9);
        let y = uniform_with_norm(&mut rng, 2, -1.0, 1.0, 1e-3, 1.0 - 1e-9);
        let lhs = p_angular(&x, &y, pexp(-k)).expect("nonzero");
        let rhs = bound_2kk(&x, &y, dist(k)).expect("ball pair");
        Sample::new(rel_slack(lhs, rhs, tol), vec![("|x|", x.norm()), ("|y|", y.norm()), ("K", k)])
    })
}

fn run_le(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let p: f64 = rng.random_range(1.0..12.0);
        let a: f64 = 1.0 - rng.random_range(0.0..1.0); // (0, 1]
        let s: f64 = rng.random_range(1e-6..std::f64::consts::TAU - 1e-6);
        let big_x = (1.0 + p * p - 2.0 * p * s.cos()).sqrt();
        let num = (1.0 + p.powf(2.0 * a) - 2.0 * p.powf(a) * s.cos()).sqrt();
        let den = (1.0 + big_x).powf(a) - 1.0;
        let rhs = (1.0 + p.powf(a)) / ((2.0 + p).powf(a) - 1.0);
        let violation = if den < 1e-300 {
            -tol // degenerate corner excluded from the domain
        } else {
            num / den - rhs - tol
        };
        Sample::new(violation, vec![("p", p), ("a", a), ("s", s)])
    })
}

fn run_ve(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    let p_n = 64u64;
    let d_n = (samples / p_n).max(2);
    run_indexed(spec, samples, p_n * d_n, seed, |i| {
        let p = lin(i % p_n, p_n, 1.0, 50.0);
        let d = midpoint(i / p_n, d_n, 0.0, 1.0);
        let lhs = (1.0 + p.powf(d)) / ((2.0 + p).powf(d) - 1.0);
        let rhs = 2.0 / (3f64.powf(d) - 1.0);
        Sample::new(lhs - rhs - tol, vec![("p", p), ("d", d)])
    })
}

fn admissible_exponents(rng: &mut rand_chacha::ChaCha8Rng) -> RadialExponents {
    let a: f64 = rng.random_range(0.05..=1.0);
    let b: f64 = rng.random_range(1.0..5.0);
    RadialExponents::new(a, b).expect("positive")
}

fn run_kal_bound(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let dim = 2 + (i % 2) as usize;
        let e = admissible_exponents(&mut rng);
        let (x, y) = loop {
            let x = uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-6, f64::INFINITY);
            let y = uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-6, f64::INFINITY);
            if x == y {
                continue;
            }
            break if x.norm() <= y.norm() { (x, y) } else { (y, x) };
        };
        let q = q_ratio(&x, &y, e).expect("admissible");
        Sample::new(
            q - sharp_constant(e.a()) - tol,
            vec![("|x|", x.norm()), ("|y|", y.norm()), ("a", e.a()), ("b", e.b())],
        )
    })
}

fn run_kal_exterior(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let dim = 2 + (i % 2) as usize;
        let e = admissible_exponents(&mut rng);
        let rx: f64 = rng.random_range(1.0..3.0);
        let ry: f64 = rng.random_range(rx..3.0001);
        let x = direction(&mut rng, dim).scale(rx);
        let y = direction(&mut rng, dim).scale(ry);
        if x == y {
            return Sample::new(-tol, vec![("|x|", rx)]);
        }
        let q = q_ratio(&x, &y, e).expect("ordered");
        Sample::new(q - 1.0 - tol, vec![("|x|", rx), ("|y|", ry), ("a", e.a()), ("b", e.b())])
    })
}

fn run_kal_sup(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let dim = 2 + (i % 2) as usize;
        let e = admissible_exponents(&mut rng);
        let r: f64 = rng.random_range(1e-6..(1.0 / 3.0 - 1e-12));
        let x = direction(&mut rng, dim).scale(r);
        let y = x.scale(-1.0);
        let q = q_ratio(&x, &y, e).expect("witness family");
        Sample::new(
            (q - sharp_constant(e.a())).abs() - tol,
            vec![("|x|", r), ("a", e.a()), ("b", e.b())],
        )
    })
}

fn run_mymaj(spec: &CheckSpec, samples: u64, seed: u64) -> CheckReport {
    let tol = spec.tolerance;
    run_indexed(spec, samples, samples, seed, |i| {
        let mut rng = stream(seed, spec.name, i);
        let dim = 2 + (i % 2) as usize;
        let p: f64 = rng.random_range(0.05..0.95);
        let (x, y) = loop {
            let x = uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-6, f64::INFINITY);
            let y = uniform_with_norm(&mut rng, dim, -3.0, 3.0, 1e-6, f64::INFINITY);
            if x != y {
                break (x, y);
            }
        };
        let alpha = p_angular(&x, &y, pexp(p)).expect("nonzero");
        let e = RadialExponents::new(p, 1.0 / p).expect("positive");
        let mid = radial_map(&x, e)
            .expect("nonzero")
            .dist(&radial_map(&y, e).expect("nonzero"))
            .expect("dims");
        let bk = bound_k(&x, &y, pexp(p)).expect("distinct");
        Sample::new(
            (alpha - mid).max(mid - bk) - tol,
            vec![("|x|", x.norm()), ("|y|", y.norm()), ("p", p)],
        )
    })
}
