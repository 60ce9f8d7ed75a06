//! Univariate integer polynomials and exact interpolation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Self::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Substitute a Laurent polynomial for the variable.
    pub fn eval_laurent(&self, x: &LaurentPolynomial) -> LaurentPolynomial {
        let mut acc = LaurentPolynomial::zero(x.vars());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &LaurentPolynomial::constant(x.vars(), c.clone());
        }
        acc
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Recover an integer polynomial of degree at most `degree_bound` from its
/// values. The first `degree_bound + 1` points determine it; every further
/// point is used as a consistency check.
pub fn interpolate_integer_polynomial(
    points: &[(i64, BigInt)],
    degree_bound: usize,
) -> Result<UniPoly> {
    let need = degree_bound + 1;
    if points.len() < need {
        return Err(Error::Interpolation(format!(
            "need {need} points, got {}",
            points.len()
        )));
    }
    for (i, a) in points.iter().enumerate() {
        if points[..i].iter().any(|b| b.0 == a.0) {
            return Err(Error::Interpolation(format!("repeated abscissa {}", a.0)));
        }
    }
    let xs: Vec<BigRational> = points[..need]
        .iter()
        .map(|p| BigRational::from_integer(p.0.into()))
        .collect();
    // Newton divided differences.
    let mut dd: Vec<BigRational> = points[..need]
        .iter()
        .map(|p| BigRational::from_integer(p.1.clone()))
        .collect();
    for level in 1..need {
        for i in (level..need).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form into the monomial basis.
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); need];
    for k in (0..need).rev() {
        // coeffs <- coeffs * (x - xs[k]) + dd[k]
        let mut next = vec![BigRational::zero(); need];
        for i in 0..need {
            if i + 1 < need {
                next[i + 1] += &coeffs[i];
            }
            next[i] -= &coeffs[i] * &xs[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    let mut ints = Vec::with_capacity(need);
    for c in coeffs {
        if !c.is_integer() {
            return Err(Error::Interpolation(format!("non-integral coefficient {c}")));
        }
        ints.push(c.to_integer());
    }
    let p = UniPoly::new(ints);
    for (x, y) in points {
        if &p.eval(&BigInt::from(*x)) != y {
            return Err(Error::Interpolation(format!(
                "point ({x}, {y}) inconsistent with degree bound {degree_bound}"
            )));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_gaussian_binomial() {
        // [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
        let g = UniPoly::from_i64(&[1, 1, 2, 1, 1]);
        let pts: Vec<(i64, BigInt)> = [2, 3, 5, 7, 11, 13]
            .iter()
            .map(|&q| (q, g.eval(&BigInt::from(q))))
            .collect();
        assert_eq!(interpolate_integer_polynomial(&pts, 4).unwrap(), g);
    }

    #[test]
    fn inconsistent_points_are_rejected() {
        let pts = vec![
            (2, BigInt::from(4)),
            (3, BigInt::from(9)),
            (5, BigInt::from(26)),
        ];
        assert!(interpolate_integer_polynomial(&pts, 1).is_err());
        assert!(interpolate_integer_polynomial(&pts[..1], 1).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(UniPoly::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(UniPoly::from_i64(&[0, -2]).to_string(), "-2*x");
    }
}
