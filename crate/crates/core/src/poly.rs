//! Exact integer polynomials in the wreath parameter `n`.
//!
//! Dimensions of word-indexed irreducibles grow like `n^|x|`, so every
//! coefficient is a [`BigInt`] and no floating point is involved anywhere.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Integer-coefficient polynomial in one indeterminate `n`.
///
/// Coefficients are stored low-to-high with no trailing zero; the zero
/// polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DimPoly {
    coeffs: Vec<BigInt>,
}

impl DimPoly {
    pub fn zero() -> Self {
        DimPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DimPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        DimPoly::from_coeffs(alloc::vec![c])
    }

    /// `c1 * n + c0`.
    pub fn linear(c1: BigInt, c0: BigInt) -> Self {
        DimPoly::from_coeffs(alloc::vec![c0, c1])
    }

    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        DimPoly { coeffs }
    }

    /// Low-to-high coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact evaluation at `n` by Horner's rule.
    pub fn eval(&self, n: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c;
        }
        acc
    }

    /// The polynomial multiplied by a nonnegative integer.
    pub fn scaled(&self, k: u64) -> DimPoly {
        let k = BigInt::from(k);
        DimPoly::from_coeffs(self.coeffs.iter().map(|c| c * &k).collect())
    }
}

impl Add for &DimPoly {
    type Output = DimPoly;

    fn add(self, rhs: &DimPoly) -> DimPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            out.push(a + b);
        }
        DimPoly::from_coeffs(out)
    }
}

impl Sub for &DimPoly {
    type Output = DimPoly;

    fn sub(self, rhs: &DimPoly) -> DimPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero);
            out.push(a - b);
        }
        DimPoly::from_coeffs(out)
    }
}

impl Mul for &DimPoly {
    type Output = DimPoly;

    fn mul(self, rhs: &DimPoly) -> DimPoly {
        if self.is_zero() || rhs.is_zero() {
            return DimPoly::zero();
        }
        let mut out = alloc::vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DimPoly::from_coeffs(out)
    }
}

impl fmt::Display for DimPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one();
            match (k, unit_coeff) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "n")?,
                (1, false) => write!(f, "{mag}n")?,
                (_, true) => write!(f, "n^{k}")?,
                (_, false) => write!(f, "{mag}n^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cs: &[i64]) -> DimPoly {
        DimPoly::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(poly(&[1, 2, 0, 0]), poly(&[1, 2]));
        assert_eq!(poly(&[0]), DimPoly::zero());
        assert_eq!(poly(&[]).degree(), None);
    }

    #[test]
    fn arithmetic() {
        let p = poly(&[-1, 1]); // n - 1
        let sq = &p * &p;
        assert_eq!(sq, poly(&[1, -2, 1]));
        assert_eq!(&sq - &p, poly(&[2, -3, 1]));
        assert_eq!(&sq + &p, poly(&[0, -1, 1]));
        assert_eq!(p.scaled(3), poly(&[-3, 3]));
    }

    #[test]
    fn eval_horner() {
        let p = poly(&[1, -3, 1]); // n^2 - 3n + 1
        assert_eq!(p.eval(&BigInt::from(8)), BigInt::from(41));
        assert_eq!(p.eval(&BigInt::from(0)), BigInt::from(1));
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", poly(&[1, -3, 1])), "n^2 - 3n + 1");
        assert_eq!(alloc::format!("{}", poly(&[0, 1])), "n");
        assert_eq!(alloc::format!("{}", poly(&[-2, 0, -1])), "-n^2 - 2");
        assert_eq!(alloc::format!("{}", DimPoly::zero()), "0");
    }
}
