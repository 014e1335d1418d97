//! Lattice points of N and rational covectors of M_Q.
//!
//! Everything is exact: integer coordinates are arbitrary-precision and
//! rational coordinates are stored in lowest terms.

use crate::error::{Result, ToricError};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;

/// A point of the lattice N (or of the dual lattice M), given by integer
/// coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint {
    coords: Vec<Int>,
}

impl LatticePoint {
    pub fn new(coords: Vec<Int>) -> Self {
        LatticePoint { coords }
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticePoint {
            coords: coords.iter().map(|&c| Int::from(c)).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint {
            coords: vec![Int::zero(); dim],
        }
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut coords = vec![Int::zero(); dim];
        coords[axis] = Int::from(1);
        LatticePoint { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Int {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    pub fn dot(&self, other: &LatticePoint) -> Int {
        debug_assert_eq!(self.dim(), other.dim());
        self.coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint {
            coords: self.coords.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, k: &Int) -> LatticePoint {
        LatticePoint {
            coords: self.coords.iter().map(|a| a * k).collect(),
        }
    }

    /// Greatest common divisor of the coordinates (nonnegative; 0 for the
    /// zero vector).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for c in &self.coords {
            g = g.gcd(c);
        }
        g
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == Int::from(1)
    }

    /// Divide by the gcd of the coordinates, preserving direction.
    pub fn primitivize(&self) -> Result<LatticePoint> {
        let g = self.content();
        if g.is_zero() {
            return Err(ToricError::ZeroVector);
        }
        Ok(LatticePoint {
            coords: self.coords.iter().map(|c| c / &g).collect(),
        })
    }

    pub fn norm_inf(&self) -> Int {
        self.coords
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Int::zero)
    }

    pub fn coord_sum(&self) -> Int {
        self.coords.iter().sum()
    }

    pub fn to_rational(&self) -> QVector {
        QVector::new(
            self.coords
                .iter()
                .map(|c| Rat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Pairing with a rational covector.
    pub fn pair(&self, u: &QVector) -> Rat {
        debug_assert_eq!(self.dim(), u.dim());
        self.coords
            .iter()
            .zip(u.coords())
            .map(|(a, b)| Rat::from_integer(a.clone()) * b)
            .sum()
    }
}

impl fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A rational covector of M_Q, stored with exact rational entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QVector {
    coords: Vec<Rat>,
}

impl QVector {
    pub fn new(coords: Vec<Rat>) -> Self {
        QVector { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Smallest positive integer r with r*self integral.
    pub fn denominator_lcm(&self) -> Int {
        let mut l = Int::from(1);
        for c in &self.coords {
            l = l.lcm(c.denom());
        }
        l
    }

    /// Scale by an integer and return the lattice point, if integral.
    pub fn scale_to_lattice(&self, k: &Int) -> Option<LatticePoint> {
        let mut out = Vec::with_capacity(self.coords.len());
        for c in &self.coords {
            let v = c * Rat::from_integer(k.clone());
            if !v.is_integer() {
                return None;
            }
            out.push(v.to_integer());
        }
        Some(LatticePoint::new(out))
    }
}

impl fmt::Debug for QVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitivize_divides_by_gcd() {
        let v = LatticePoint::from_i64(&[2, 4, 6]);
        assert_eq!(v.primitivize().unwrap(), LatticePoint::from_i64(&[1, 2, 3]));
    }

    #[test]
    fn primitivize_keeps_already_primitive() {
        let v = LatticePoint::from_i64(&[0, 1, 1]);
        assert_eq!(v.primitivize().unwrap(), v);
    }

    #[test]
    fn primitivize_preserves_signs() {
        let v = LatticePoint::from_i64(&[-3, 0, 9]);
        assert_eq!(
            v.primitivize().unwrap(),
            LatticePoint::from_i64(&[-1, 0, 3])
        );
    }

    #[test]
    fn primitivize_rejects_zero() {
        let v = LatticePoint::zero(3);
        assert_eq!(v.primitivize(), Err(ToricError::ZeroVector));
    }
}
