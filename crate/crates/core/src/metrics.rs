//! Distances on punctured space: the p-angular distance, the hyperbolic
//! distance from the origin, and the distance-ratio (j) metric.

use crate::error::{domain, Result};
use crate::geometry::{radial_map, radial_projection, RadialExponents};
use crate::special::artanh;
use crate::vector::Vector;

/// Exponent of the p-angular distance. Any finite real; individual bounds
/// restrict the range further (e.g. the `2^{1-p}|x-y|^p` bound needs
/// p in (0,1)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PExponent {
    p: f64,
}

impl PExponent {
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() {
            return Err(domain("p exponent must be finite"));
        }
        Ok(Self { p })
    }

    pub fn get(&self) -> f64 {
        self.p
    }
}

/// The p-angular distance `alpha_p(x,y) = | |x|^{p-1} x - |y|^{p-1} y |`
/// between nonzero vectors.
///
/// Symmetric, satisfies the triangle inequality; `alpha_0(x,y)` equals
/// `2 sin(omega/2)` where omega is the angle between the rays to x and y.
pub fn p_angular(x: &Vector, y: &Vector, p: PExponent) -> Result<f64> {
    x.check_dim(y)?;
    x.nonzero("x")?;
    y.nonzero("y")?;
    let ax = x.scale(x.norm().powf(p.get() - 1.0));
    let ay = y.scale(y.norm().powf(p.get() - 1.0));
    ax.dist(&ay)
}

/// Hyperbolic distance from the origin in the unit ball:
/// `rho(0, r) = log((1+r)/(1-r)) = 2 artanh(r)`, 0 <= r < 1.
pub fn rho0(r: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&r) {
        return Err(domain("rho0 requires 0 <= r < 1"));
    }
    Ok(2.0 * artanh(r))
}

/// The distance-ratio metric on punctured space (boundary distance |z|):
/// `j(x,y) = log(1 + |x-y| / min(|x|, |y|))`.
pub fn j_metric(x: &Vector, y: &Vector) -> Result<f64> {
    x.check_dim(y)?;
    x.nonzero("x")?;
    y.nonzero("y")?;
    Ok((x.dist(y)? / x.norm().min(y.norm())).ln_1p())
}

/// The distance ratio `Q(x,y) = |A(x) - A(y)| / |A(x) - A(z)|` comparing the
/// image distance of a pair against the image distance along the ray, where
/// `A = A_{a,b}` with 0 < a <= 1 <= b and `z = x/|x| (|x| + |x-y|)`.
///
/// Requires `0 < |x| <= |y|` and `x != y` (the caller orders the pair; the
/// ratio is not symmetric). Bounded above by the sharp constant
/// `2/(3^a - 1)`, and by 1 when `1 <= |x| <= |y|`.
pub fn q_ratio(x: &Vector, y: &Vector, e: RadialExponents) -> Result<f64> {
    x.check_dim(y)?;
    x.nonzero("x")?;
    y.nonzero("y")?;
    if !(e.a() <= 1.0 && e.b() >= 1.0) {
        return Err(domain("q_ratio requires exponents with 0 < a <= 1 <= b"));
    }
    if x.norm() > y.norm() {
        return Err(domain("q_ratio requires |x| <= |y|; swap the arguments"));
    }
    if x == y {
        return Err(domain("q_ratio is undefined at x = y"));
    }
    let z = radial_projection(x, y)?;
    let ax = radial_map(x, e)?;
    let ay = radial_map(y, e)?;
    let az = radial_map(&z, e)?;
    Ok(ax.dist(&ay)? / ax.dist(&az)?)
}

/// The sharp constant `2/(3^a - 1)` bounding `q_ratio` for exponent a.
pub fn sharp_constant(a: f64) -> f64 {
    2.0 / (3f64.powf(a) - 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    fn p(v: f64) -> PExponent {
        PExponent::new(v).unwrap()
    }

    #[test]
    fn p_angular_examples() {
        let v = Vector::planar(0.3, 0.7);
        for pv in [-1.0, 0.0, 0.5, 2.0] {
            close(p_angular(&v, &v, p(pv)).unwrap(), 0.0, 1e-15);
        }
        // perpendicular unit vectors at p = 0: chord of the right angle
        close(
            p_angular(&Vector::planar(1.0, 0.0), &Vector::planar(0.0, 1.0), p(0.0)).unwrap(),
            2f64.sqrt(),
            1e-15,
        );
        // antipodal pair: alpha_p(x, -x) = 2 |x|^p
        close(
            p_angular(&Vector::planar(1.0, 0.0), &Vector::planar(-1.0, 0.0), p(0.5)).unwrap(),
            2.0,
            1e-15,
        );
        assert!(p_angular(&Vector::planar(0.0, 0.0), &v, p(0.5)).is_err());
    }

    #[test]
    fn rho0_examples() {
        close(rho0(0.0).unwrap(), 0.0, 1e-15);
        close(rho0(0.5).unwrap(), 3f64.ln(), 1e-15);
        close(rho0(crate::special::t0()).unwrap(), 1.0, 1e-14);
        assert!(rho0(1.0).is_err());
    }

    #[test]
    fn j_metric_examples() {
        close(
            j_metric(&Vector::planar(1.0, 0.0), &Vector::planar(2.0, 0.0)).unwrap(),
            2f64.ln(),
            1e-15,
        );
        let v = Vector::planar(0.4, -0.2);
        close(j_metric(&v, &v).unwrap(), 0.0, 1e-15);
        close(
            j_metric(&Vector::planar(1.0, 0.0), &Vector::planar(-1.0, 0.0)).unwrap(),
            3f64.ln(),
            1e-15,
        );
    }

    #[test]
    fn q_ratio_examples() {
        let e = RadialExponents::new(0.5, 2.0).unwrap();
        let x = Vector::planar(0.2, 0.0);
        let y = x.scale(-1.0);
        close(q_ratio(&x, &y, e).unwrap(), sharp_constant(0.5), 1e-12);
        close(sharp_constant(0.5), 2.7320508075688773, 1e-12);

        let id = RadialExponents::new(1.0, 1.0).unwrap();
        close(q_ratio(&x, &y, id).unwrap(), 1.0, 1e-12);

        // both outside the unit sphere: ratio is at most 1
        let q = q_ratio(&Vector::planar(2.0, 0.0), &Vector::planar(0.0, 3.0), e).unwrap();
        close(q, 0.3591563029017505, 1e-12);
        assert!(q <= 1.0);

        assert!(q_ratio(&Vector::planar(2.0, 0.0), &Vector::planar(0.5, 0.0), e).is_err());
        assert!(q_ratio(&x, &x, e).is_err());
        let bad = RadialExponents::new(2.0, 3.0).unwrap();
        assert!(q_ratio(&x, &y, bad).is_err());
    }

    proptest! {
        // alpha_p triangle inequality
        #[test]
        fn p_angular_triangle(
            ax in -3.0f64..3.0, ay in -3.0f64..3.0,
            bx in -3.0f64..3.0, by in -3.0f64..3.0,
            cx in -3.0f64..3.0, cy in -3.0f64..3.0,
            pi in 0usize..5,
        ) {
            let pv = [-1.0, 0.0, 0.5, 1.0, 2.0][pi];
            let a = Vector::planar(ax, ay);
            let b = Vector::planar(bx, by);
            let c = Vector::planar(cx, cy);
            prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3 && c.norm() > 1e-3);
            let ab = p_angular(&a, &b, p(pv)).unwrap();
            let bc = p_angular(&b, &c, p(pv)).unwrap();
            let ac = p_angular(&a, &c, p(pv)).unwrap();
            prop_assert!(ac <= ab + bc + 1e-12);
        }

        // alpha_0 = 2 sin(omega/2)
        #[test]
        fn alpha0_is_angular(
            ax in -3.0f64..3.0, ay in -3.0f64..3.0,
            bx in -3.0f64..3.0, by in -3.0f64..3.0,
        ) {
            let a = Vector::planar(ax, ay);
            let b = Vector::planar(bx, by);
            prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3);
            let cosw = (a.dot(&b).unwrap() / (a.norm() * b.norm())).clamp(-1.0, 1.0);
            let omega = cosw.acos();
            let expected = 2.0 * (omega / 2.0).sin();
            prop_assert!((p_angular(&a, &b, p(0.0)).unwrap() - expected).abs() <= 1e-12);
        }

        // j satisfies the triangle inequality on punctured space
        #[test]
        fn j_triangle(
            ax in -3.0f64..3.0, ay in -3.0f64..3.0,
            bx in -3.0f64..3.0, by in -3.0f64..3.0,
            cx in -3.0f64..3.0, cy in -3.0f64..3.0,
        ) {
            let a = Vector::planar(ax, ay);
            let b = Vector::planar(bx, by);
            let c = Vector::planar(cx, cy);
            prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3 && c.norm() > 1e-3);
            let ab = j_metric(&a, &b).unwrap();
            let bc = j_metric(&b, &c).unwrap();
            let ac = j_metric(&a, &c).unwrap();
            prop_assert!(ac <= ab + bc + 1e-12);
        }
    }
}
