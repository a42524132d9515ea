//! The quasiconformal special-function stack.
//!
//! Built around Legendre's complete elliptic integral of the first kind,
//!
//! ```text
//! K(r) = integral_0^1 dx / sqrt((1 - x^2)(1 - r^2 x^2)),   0 <= r < 1,
//! ```
//!
//! computed by the arithmetic-geometric mean: `K(r) = pi / (2 AGM(1, r'))`
//! with `r' = sqrt(1 - r^2)`. The AGM converges quadratically, so a handful
//! of iterations reach full f64 precision.
//!
//! On top of it sit the Grotzsch modulus `mu(r) = (pi/2) K(r')/K(r)`, a
//! decreasing homeomorphism of (0,1) onto (0,infinity); its inverse; and the
//! distortion function `phi_K(r) = mu^{-1}(mu(r)/K)`, the sharp bound in the
//! quasiconformal Schwarz lemma. `mu_inv` is found by monotone bisection on
//! a bracket inside (0,1); accuracy degrades within about 1e-10 of the
//! interval endpoints, where f64 cannot resolve `r` against 1.
//!
//! The remaining items are explicit closed forms: the minorant
//! `p(r) = 1/cosh(arcosh(1/r)/K)` of `phi_K`, the constants `c1`, `c3`, the
//! exponential majorant `exp(pi (K - 1/K))` of the planar Grotzsch ring
//! constant, and the n-dimensional distortion constant `c(K)`.

use std::f64::consts::PI;

use crate::error::{domain, Result};

/// AGM convergence threshold (relative).
const AGM_EPS: f64 = 1e-15;
const AGM_MAX_ITER: usize = 64;

/// Bisection iteration cap for `mu_inv`.
const MU_INV_MAX_ITER: usize = 200;
/// Bisection terminates once the bracket width in `r` falls below this.
const MU_INV_BRACKET: f64 = 1e-14;

/// Inverse hyperbolic tangent by its defining formula
/// `artanh(x) = log((1+x)/(1-x)) / 2`.
pub fn artanh(x: f64) -> f64 {
    0.5 * ((1.0 + x) / (1.0 - x)).ln()
}

/// Inverse hyperbolic cosine by its defining formula
/// `arcosh(x) = log(x + sqrt(x^2 - 1))`, for x >= 1.
pub fn arcosh(x: f64) -> f64 {
    (x + (x * x - 1.0).sqrt()).ln()
}

fn agm(a0: f64, b0: f64) -> f64 {
    let (mut a, mut b) = (a0, b0);
    for _ in 0..AGM_MAX_ITER {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (an - bn).abs() <= AGM_EPS * an {
            return an;
        }
        a = an;
        b = bn;
    }
    0.5 * (a + b)
}

/// Complementary modulus `r' = sqrt(1 - r^2)`, computed as
/// `sqrt((1-r)(1+r))` to keep accuracy near r = 1.
fn comp_modulus(r: f64) -> f64 {
    ((1.0 - r) * (1.0 + r)).sqrt()
}

/// Legendre's complete elliptic integral of the first kind, modulus `r`.
///
/// `ell_k(0) = pi/2`; diverges logarithmically as r -> 1.
pub fn ell_k(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain("ell_k requires 0 <= r < 1"));
    }
    Ok(PI / (2.0 * agm(1.0, comp_modulus(r))))
}

/// The Grotzsch modulus `mu(r) = (pi/2) K(r')/K(r)`, 0 < r < 1.
///
/// Strictly decreasing, with `mu(r) -> infinity` as r -> 0 and -> 0 as
/// r -> 1. Evaluated as `(pi/2) AGM(1, r')/AGM(1, r)`, which stays stable
/// at both ends of the interval.
pub fn mu(r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("mu requires 0 < r < 1"));
    }
    Ok(PI / 2.0 * agm(1.0, comp_modulus(r)) / agm(1.0, r))
}

/// Whether an argument to `mu` sits in the near-endpoint zone where f64
/// evaluation is flagged low-accuracy in verification reports.
pub fn mu_low_accuracy(r: f64) -> bool {
    r < 1e-8 || r > 1.0 - 1e-8
}

/// Inverse of the Grotzsch modulus: the unique r in (0,1) with mu(r) = y.
///
/// Monotone bisection on a bracket inside (0,1), refined until the bracket
/// width falls below 1e-14. For y outside the f64-representable range of mu
/// the nearest bracket endpoint is returned.
pub fn mu_inv(y: f64) -> Result<f64> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(domain("mu_inv requires y > 0"));
    }
    let (mut lo, mut hi) = (1e-300, 1.0 - 1e-16);
    // mu is decreasing: mu(lo) is the largest reachable value.
    if y >= mu(lo)? {
        return Ok(lo);
    }
    if y <= mu(hi)? {
        return Ok(hi);
    }
    for _ in 0..MU_INV_MAX_ITER {
        let mid = 0.5 * (lo + hi);
        if mu(mid)? > y {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= MU_INV_BRACKET {
            break;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Maximal dilatation K >= 1 of a quasiconformal map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Distortion {
    k: f64,
}

impl Distortion {
    pub fn new(k: f64) -> Result<Self> {
        if !(k >= 1.0 && k.is_finite()) {
            return Err(domain("distortion coefficient must satisfy K >= 1"));
        }
        Ok(Self { k })
    }

    pub fn k(&self) -> f64 {
        self.k
    }
}

/// The distortion function `phi_K(r) = mu^{-1}(mu(r)/K)` of the
/// quasiconformal Schwarz lemma. Increasing in both K and r; `phi_1 = id`.
pub fn phi(k: Distortion, r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("phi requires 0 < r < 1"));
    }
    mu_inv(mu(r)? / k.k())
}

/// The explicit minorant `p(r) = 1/cosh(arcosh(1/r)/K)` of `phi_K(r)`.
pub fn minorant_p(k: Distortion, r: f64) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("minorant_p requires 0 < r < 1"));
    }
    Ok(1.0 / (arcosh(1.0 / r) / k.k()).cosh())
}

/// `c3(K) = 2 artanh(p(t0))`, the constant of the explicit distortion
/// growth bound; equals 1 at K = 1 and grows with K.
pub fn c3(k: Distortion) -> f64 {
    let t0 = named_constants().t0;
    let p = 1.0 / (arcosh(1.0 / t0) / k.k()).cosh();
    2.0 * artanh(p)
}

/// `c1(K) = (1/K)^{K/(K-1)}` for K > 1; decreasing, with limit 1/e at 1+.
pub fn c1(k: f64) -> Result<f64> {
    if !(k > 1.0 && k.is_finite()) {
        return Err(domain("c1 requires K > 1"));
    }
    Ok((1.0 / k).powf(k / (k - 1.0)))
}

/// The explicit planar majorant `exp(pi (K - 1/K))` used in place of the
/// Grotzsch ring constant lambda(K).
pub fn lambda_bound(k: Distortion) -> f64 {
    (PI * (k.k() - 1.0 / k.k())).exp()
}

/// The n-dimensional distortion constant
/// `c(K) = 2^{K-1} K^K exp(4 K (K+1) sqrt(K-1))`; equals 1 at K = 1.
pub fn c_qc(k: Distortion) -> f64 {
    let k = k.k();
    2f64.powf(k - 1.0) * k.powf(k) * (4.0 * k * (k + 1.0) * (k - 1.0).sqrt()).exp()
}

/// The recurring constants: `t0 = (e-1)/(e+1)` (the radius with
/// `2 artanh(t0) = 1`) and the monotone-range endpoints m1, m2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NamedConstants {
    pub t0: f64,
    pub m1: f64,
    pub m2: f64,
}

pub fn named_constants() -> NamedConstants {
    let e = std::f64::consts::E;
    let t0 = (e - 1.0) / (e + 1.0);
    let lt = t0.ln();
    NamedConstants {
        t0,
        m1: (1.0 + lt) / (t0 * t0 * (1.0 - lt)),
        m2: 2.0 * t0 * lt / (t0 * t0 - 1.0),
    }
}

/// Shorthand for `named_constants().t0`.
pub fn t0() -> f64 {
    named_constants().t0
}
