use crate::error::{domain, Error, Result};

/// A point of n-dimensional Euclidean space, n >= 1.
///
/// Coordinates are always finite; constructors reject NaN and infinities.
/// Planar points double as complex numbers `(re, im)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector {
    coords: Vec<f64>,
}

impl Vector {
    pub fn new(coords: impl Into<Vec<f64>>) -> Result<Self> {
        let coords = coords.into();
        if coords.is_empty() {
            return Err(domain("vector must have dimension >= 1"));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(domain("vector coordinates must be finite"));
        }
        Ok(Self { coords })
    }

    /// A point of the plane, `(re, im)`.
    pub fn planar(re: f64, im: f64) -> Self {
        Self::new(vec![re, im]).expect("finite coordinates")
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    /// Euclidean length.
    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn dot(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        Ok(self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum())
    }

    /// Euclidean distance `|self - other|`.
    pub fn dist(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.norm())
    }

    pub(crate) fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(())
    }

    pub(crate) fn nonzero(&self, what: &str) -> Result<()> {
        if self.norm() == 0.0 {
            return Err(domain(format!("{what} must be nonzero")));
        }
        Ok(())
    }
}

impl From<[f64; 2]> for Vector {
    fn from(c: [f64; 2]) -> Self {
        Vector::planar(c[0], c[1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_pythagorean() {
        assert_eq!(Vector::planar(3.0, 4.0).norm(), 5.0);
        assert_eq!(Vector::planar(0.0, 0.0).norm(), 0.0);
        // direct arithmetic: sqrt(4 + 7.0225)
        let v = Vector::planar(-2.00, -2.65);
        assert!((v.norm() - 3.3200150602148716).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_coords() {
        assert!(Vector::new(vec![]).is_err());
        assert!(Vector::new(vec![f64::NAN]).is_err());
        assert!(Vector::new(vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn dimension_mismatch() {
        let a = Vector::planar(1.0, 2.0);
        let b = Vector::new(vec![1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(a.sub(&b), Err(Error::DimensionMismatch(2, 3))));
    }
}
