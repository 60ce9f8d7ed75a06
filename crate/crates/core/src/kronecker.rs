//! Chebyshev polynomials and the three bases of the Kronecker cluster algebra.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::poly::UniPoly;

/// `C_{n+1} = x C_n - C_{n-1}`, `C_{-1} = 0`, `C_0 = 1`.
pub fn chebyshev_second(n: usize) -> UniPoly {
    let (mut prev, mut cur) = (UniPoly::zero(), UniPoly::one());
    for _ in 0..n {
        let next = UniPoly::x().mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `P_n = C_n - C_{n-2}`.
pub fn chebyshev_first(n: usize) -> UniPoly {
    if n < 2 {
        chebyshev_second(n)
    } else {
        chebyshev_second(n).sub(&chebyshev_second(n - 2))
    }
}

/// The imaginary part of a Kronecker basis, as polynomials in `z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KroneckerFamily {
    /// `z^n`, the generic variables.
    Z,
    /// `P_n(z)`, the canonical basis.
    P,
    /// `C_n(z)`, the Caldero-Zelevinsky basis.
    C,
}

impl KroneckerFamily {
    pub fn element(self, n: usize) -> UniPoly {
        match self {
            KroneckerFamily::Z => {
                let mut c = vec![BigInt::zero(); n + 1];
                c[n] = BigInt::one();
                UniPoly::new(c)
            }
            KroneckerFamily::P => chebyshev_first(n),
            KroneckerFamily::C => chebyshev_second(n),
        }
    }
}

impl fmt::Display for KroneckerFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            KroneckerFamily::Z => "z",
            KroneckerFamily::P => "P",
            KroneckerFamily::C => "C",
        };
        write!(f, "{s}")
    }
}

impl FromStr for KroneckerFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "z" | "Z" | "semicanonical" | "generic" => Ok(KroneckerFamily::Z),
            "P" | "p" | "canonical" => Ok(KroneckerFamily::P),
            "C" | "c" | "CZ" | "cz" => Ok(KroneckerFamily::C),
            _ => Err(Error::Parse(format!("unknown Kronecker family {s:?}"))),
        }
    }
}

/// Entry `[i][n]` is the coefficient of `from_i` in `to_n`, for `0 <= i, n <= N`.
pub fn base_change_matrix(
    from: KroneckerFamily,
    to: KroneckerFamily,
    size: usize,
) -> Vec<Vec<BigInt>> {
    let basis: Vec<UniPoly> = (0..=size).map(|i| from.element(i)).collect();
    let mut m = vec![vec![BigInt::zero(); size + 1]; size + 1];
    for n in 0..=size {
        let mut rest = to.element(n);
        for i in (0..=n).rev() {
            let c = rest.coeff(i);
            if !c.is_zero() {
                rest = rest.sub(&basis[i].mul(&UniPoly::new(vec![c.clone()])));
                m[i][n] = c;
            }
        }
        debug_assert!(rest.degree().is_none());
    }
    m
}

/// Upper triangular with ones on the diagonal.
pub fn is_unipotent(m: &[Vec<BigInt>]) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, x)| match i.cmp(&j) {
            std::cmp::Ordering::Equal => x.is_one(),
            std::cmp::Ordering::Greater => x.is_zero(),
            std::cmp::Ordering::Less => true,
        })
    })
}

pub fn is_nonnegative(m: &[Vec<BigInt>]) -> bool {
    m.iter().flatten().all(|x| x.sign() != num_bigint::Sign::Minus)
}

pub fn matrix_product(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); b.first().map_or(0, Vec::len)]; n];
    for i in 0..n {
        for (k, x) in a[i].iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b[k].iter().enumerate() {
                out[i][j] += x * y;
            }
        }
    }
    out
}

/// `z = (1 + u_1^2 + u_2^2) / (u_1 u_2)`.
pub fn kronecker_z() -> LaurentPolynomial {
    let vars = [1, 2];
    LaurentPolynomial::from_terms(
        &vars,
        [
            (vec![-1, -1], BigInt::one()),
            (vec![1, -1], BigInt::one()),
            (vec![-1, 1], BigInt::one()),
        ],
    )
}

/// The element of degree `n` of the chosen family, as a Laurent polynomial.
pub fn kronecker_basis_element(family: KroneckerFamily, n: usize) -> LaurentPolynomial {
    family.element(n).eval_laurent(&kronecker_z())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_chebyshev() {
        assert_eq!(chebyshev_second(0), UniPoly::one());
        assert_eq!(chebyshev_second(2), UniPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(chebyshev_second(3), UniPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(chebyshev_first(0), UniPoly::one());
        assert_eq!(chebyshev_first(1), UniPoly::x());
        assert_eq!(chebyshev_first(2), UniPoly::from_i64(&[-2, 0, 1]));
        assert_eq!(chebyshev_first(3), UniPoly::from_i64(&[0, -3, 0, 1]));
    }

    // Substituting x = t + 1/t, checked as Laurent polynomials in t.
    #[test]
    fn chebyshev_identities() {
        let vars = [1];
        let t = LaurentPolynomial::variable(&vars, 0);
        let tinv = LaurentPolynomial::monomial(&vars, &[-1], BigInt::one());
        let x = &t + &tinv;
        for n in 0..=6usize {
            let c: LaurentPolynomial = (0..=n).fold(LaurentPolynomial::zero(&vars), |acc, k| {
                &acc + &LaurentPolynomial::monomial(&vars, &[n as i64 - 2 * k as i64], BigInt::one())
            });
            assert_eq!(chebyshev_second(n).eval_laurent(&x), c);
            if n >= 1 {
                let p = &t.pow(n as u32) + &tinv.pow(n as u32);
                assert_eq!(chebyshev_first(n).eval_laurent(&x), p);
            }
        }
    }

    #[test]
    fn base_changes_are_inverse() {
        let fams = [KroneckerFamily::Z, KroneckerFamily::P, KroneckerFamily::C];
        for a in fams {
            for b in fams {
                let m = base_change_matrix(a, b, 8);
                let inv = base_change_matrix(b, a, 8);
                assert!(is_unipotent(&m));
                let id = matrix_product(&m, &inv);
                assert!(is_unipotent(&id) && is_nonnegative(&id));
                assert!(id.iter().flatten().map(|x| x.clone()).sum::<BigInt>() == BigInt::from(9));
            }
        }
    }

    #[test]
    fn basis_elements() {
        assert_eq!(kronecker_basis_element(KroneckerFamily::Z, 1), kronecker_z());
        assert_eq!(
            kronecker_basis_element(KroneckerFamily::P, 0),
            LaurentPolynomial::one(&[1, 2])
        );
        let c2 = kronecker_basis_element(KroneckerFamily::C, 2);
        assert_eq!(c2.denominator_vector().unwrap(), vec![2, 2]);
    }
}
