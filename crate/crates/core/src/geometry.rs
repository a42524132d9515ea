//! Radial maps and sphere inversions.
//!
//! A radial function has the form `x -> g(|x|) x`, so it preserves rays
//! through the origin. The workhorse here is the two-exponent power map
//!
//! ```text
//! A_{a,b}(x) = |x|^{a-1} x   if |x| < 1
//!              |x|^{b-1} x   if |x| >= 1
//! ```
//!
//! which stretches radially by `|x|^a` inside the unit sphere and by
//! `|x|^b` outside. Both branches agree on the sphere, so the map is
//! continuous; composition multiplies exponents componentwise and the
//! inverse swaps each exponent for its reciprocal.

use crate::error::{domain, Result};
use crate::vector::Vector;

/// The exponent pair `(a, b)` of the radial power map.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialExponents {
    a: f64,
    b: f64,
}

impl RadialExponents {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a > 0.0 && a.is_finite() && b > 0.0 && b.is_finite()) {
            return Err(domain("radial exponents must be positive and finite"));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Exponents of the inverse map: `(1/a, 1/b)`.
    pub fn inverse(&self) -> Self {
        Self {
            a: 1.0 / self.a,
            b: 1.0 / self.b,
        }
    }

    /// Exponents of the composition `A_{a,b} . A_{c,d} = A_{ac,bd}`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self {
            a: self.a * inner.a,
            b: self.b * inner.b,
        }
    }
}

/// The two-exponent radial power map `A_{a,b}`.
///
/// Defined on nonzero vectors; the image is on the same ray as `x` with
/// norm `|x|^a` (inside the unit sphere) or `|x|^b` (outside).
pub fn radial_map(x: &Vector, e: RadialExponents) -> Result<Vector> {
    let n = x.norm();
    if n == 0.0 {
        return Err(domain("radial map is undefined at the origin"));
    }
    let exponent = if n < 1.0 { e.a - 1.0 } else { e.b - 1.0 };
    Ok(x.scale(n.powf(exponent)))
}

/// Inversion in the sphere `S^{n-1}(center, radius)`:
/// `h(x) = center + radius^2 (x - center)/|x - center|^2`.
///
/// Satisfies `|h(x) - h(y)| = radius^2 |x - y| / (|x - center| |y - center|)`.
pub fn inversion(x: &Vector, center: &Vector, radius: f64) -> Result<Vector> {
    x.check_dim(center)?;
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(domain("inversion radius must be positive and finite"));
    }
    let d = x.sub(center)?;
    let n2 = d.dot(&d)?;
    if n2 == 0.0 {
        return Err(domain(
            "inversion is undefined at the center (image is the point at infinity)",
        ));
    }
    center.add(&d.scale(radius * radius / n2))
}

/// Inversion in the sphere of radius `radius` about the origin,
/// `h(w) = radius^2 w / |w|^2`.
pub fn unit_inversion(w: &Vector, radius: f64) -> Result<Vector> {
    let origin = Vector::new(vec![0.0; w.dim()])?;
    inversion(w, &origin, radius)
}

/// The radial companion point `z = x/|x| (|x| + |x-y|)`: on the ray through
/// `x`, at distance `|x| + |x-y|` from the origin.
pub fn radial_projection(x: &Vector, y: &Vector) -> Result<Vector> {
    x.check_dim(y)?;
    let n = x.norm();
    if n == 0.0 {
        return Err(domain("radial projection is undefined for x = 0"));
    }
    let scale = (n + x.dist(y)?) / n;
    Ok(x.scale(scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + b.abs())
    }

    fn vec_close(a: &Vector, b: &Vector, tol: f64) -> bool {
        a.dist(b).unwrap() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn radial_map_branches() {
        let e = RadialExponents::new(2.0, 3.0).unwrap();
        let inside = radial_map(&Vector::planar(0.5, 0.0), e).unwrap();
        assert!(vec_close(&inside, &Vector::planar(0.25, 0.0), 1e-15));

        // unit sphere is fixed for any exponents
        let unit = radial_map(&Vector::planar(1.0, 0.0), e).unwrap();
        assert_eq!(unit, Vector::planar(1.0, 0.0));

        let e2 = RadialExponents::new(0.5, 2.0).unwrap();
        let outside = radial_map(&Vector::planar(3.0, 0.0), e2).unwrap();
        assert!(vec_close(&outside, &Vector::planar(9.0, 0.0), 1e-15));

        assert!(radial_map(&Vector::planar(0.0, 0.0), e).is_err());
    }

    #[test]
    fn branch_formulas_agree_on_unit_sphere() {
        // |x| = 1 exactly; evaluate both branch formulas directly
        for x in [Vector::planar(0.6, 0.8), Vector::planar(1.0, 0.0)] {
            let n = x.norm();
            assert_eq!(n, 1.0);
            for (a, b) in [(0.5, 2.0), (2.0, 3.0), (0.25, 7.0)] {
                let lo = x.scale(n.powf(a - 1.0));
                let hi = x.scale(n.powf(b - 1.0));
                assert_eq!(lo, hi);
            }
        }
    }

    #[test]
    fn radial_inverse() {
        let e = RadialExponents::new(2.0, 3.0).unwrap();
        let inv = e.inverse();
        assert!(close(inv.a(), 0.5, 1e-15));
        assert!(close(inv.b(), 1.0 / 3.0, 1e-15));
        let id = RadialExponents::new(1.0, 1.0).unwrap().inverse();
        assert_eq!((id.a(), id.b()), (1.0, 1.0));
        let sw = RadialExponents::new(0.5, 2.0).unwrap().inverse();
        assert_eq!((sw.a(), sw.b()), (2.0, 0.5));
    }

    #[test]
    fn inversion_examples() {
        let o = Vector::planar(0.0, 0.0);
        let h = inversion(&Vector::planar(2.0, 0.0), &o, 1.0).unwrap();
        assert!(vec_close(&h, &Vector::planar(0.5, 0.0), 1e-15));
        let fixed = inversion(&Vector::planar(1.0, 0.0), &o, 1.0).unwrap();
        assert!(vec_close(&fixed, &Vector::planar(1.0, 0.0), 1e-15));
        let h2 = inversion(&Vector::planar(3.0, 4.0), &o, 1.0).unwrap();
        assert!(vec_close(&h2, &Vector::planar(0.12, 0.16), 1e-15));
        assert!(inversion(&o, &o, 1.0).is_err());
    }

    #[test]
    fn radial_projection_examples() {
        let z = radial_projection(&Vector::planar(1.0, 0.0), &Vector::planar(-1.0, 0.0)).unwrap();
        assert!(vec_close(&z, &Vector::planar(3.0, 0.0), 1e-15));

        let x = Vector::planar(0.4, 0.3);
        let z = radial_projection(&x, &x).unwrap();
        assert!(vec_close(&z, &x, 1e-15));

        let x = Vector::planar(0.55, 1.55);
        let y = Vector::planar(0.95, 1.85);
        let z = radial_projection(&x, &y).unwrap();
        // |x| = sqrt(2.705), |x-y| = 0.5, scale = (|x|+0.5)/|x|
        assert!(vec_close(&z, &Vector::planar(0.7172050887, 2.0212143409), 1e-9));
    }

    proptest! {
        // A_{a,b}(A_{c,d}(x)) = A_{ac,bd}(x) away from the unit sphere
        #[test]
        fn composition(
            cx in -3.0f64..3.0, cy in -3.0f64..3.0,
            a in 0.1f64..4.0, b in 0.1f64..4.0,
            c in 0.1f64..4.0, d in 0.1f64..4.0,
        ) {
            let x = Vector::planar(cx, cy);
            let n = x.norm();
            prop_assume!(n > 1e-3 && (n - 1.0).abs() > 1e-6);
            let outer = RadialExponents::new(a, b).unwrap();
            let inner = RadialExponents::new(c, d).unwrap();
            let lhs = radial_map(&radial_map(&x, inner).unwrap(), outer).unwrap();
            let rhs = radial_map(&x, outer.compose(&inner)).unwrap();
            prop_assert!(lhs.dist(&rhs).unwrap() <= 1e-12 * (1.0 + rhs.norm()));
        }

        // h(h(x)) = x for sphere inversions
        #[test]
        fn inversion_involution(
            cx in -3.0f64..3.0, cy in -3.0f64..3.0,
            ox in -1.0f64..1.0, oy in -1.0f64..1.0,
            r in 0.1f64..3.0,
        ) {
            let x = Vector::planar(cx, cy);
            let center = Vector::planar(ox, oy);
            prop_assume!(x.dist(&center).unwrap() > 1e-3);
            let once = inversion(&x, &center, r).unwrap();
            let twice = inversion(&once, &center, r).unwrap();
            prop_assert!(twice.dist(&x).unwrap() <= 1e-12 * (1.0 + x.norm()));
        }

        // |h(x)-h(y)| = r^2 |x-y| / (|x-c||y-c|)
        #[test]
        fn inversion_distance_identity(
            ax in -3.0f64..3.0, ay in -3.0f64..3.0,
            bx in -3.0f64..3.0, by in -3.0f64..3.0,
            r in 0.1f64..3.0,
        ) {
            let x = Vector::planar(ax, ay);
            let y = Vector::planar(bx, by);
            let c = Vector::planar(0.1, -0.2);
            prop_assume!(x.dist(&c).unwrap() > 1e-3 && y.dist(&c).unwrap() > 1e-3);
            let lhs = inversion(&x, &c, r).unwrap().dist(&inversion(&y, &c, r).unwrap()).unwrap();
            let rhs = r * r * x.dist(&y).unwrap() / (x.dist(&c).unwrap() * y.dist(&c).unwrap());
            prop_assert!((lhs - rhs).abs() <= 1e-12 * (1.0 + rhs));
        }

        // |h(x)-h(z)| <= |h(x)-h(y)| <= 3|h(x)-h(z)| for |x| <= |y|, z radial
        #[test]
        fn sandwich(
            ax in -3.0f64..3.0, ay in -3.0f64..3.0,
            bx in -3.0f64..3.0, by in -3.0f64..3.0,
            r in 0.1f64..2.0,
        ) {
            let (mut x, mut y) = (Vector::planar(ax, ay), Vector::planar(bx, by));
            if x.norm() > y.norm() {
                std::mem::swap(&mut x, &mut y);
            }
            prop_assume!(x.norm() > 1e-3);
            let z = radial_projection(&x, &y).unwrap();
            let hx = unit_inversion(&x, r).unwrap();
            let hy = unit_inversion(&y, r).unwrap();
            let hz = unit_inversion(&z, r).unwrap();
            let lo = hx.dist(&hz).unwrap();
            let mid = hx.dist(&hy).unwrap();
            prop_assert!(lo <= mid * (1.0 + 1e-12) + 1e-15);
            prop_assert!(mid <= 3.0 * lo * (1.0 + 1e-12) + 1e-15);
        }
    }

    #[test]
    fn sandwich_upper_bound_attained_at_antipode() {
        let x = Vector::planar(0.4, -0.7);
        let y = x.scale(-1.0);
        let z = radial_projection(&x, &y).unwrap();
        let hx = unit_inversion(&x, 1.3).unwrap();
        let hy = unit_inversion(&y, 1.3).unwrap();
        let hz = unit_inversion(&z, 1.3).unwrap();
        let mid = hx.dist(&hy).unwrap();
        let lo = hx.dist(&hz).unwrap();
        assert!((mid - 3.0 * lo).abs() <= 1e-12 * (1.0 + mid));
    }
}
