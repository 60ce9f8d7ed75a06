//! Multivariate Laurent polynomials with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A finite sum of terms `c * u^e` with `e` in `Z^n`.
///
/// Terms are stored in a `BTreeMap`, so iteration is in lexicographic
/// exponent order; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    vars: Vec<u32>,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(vars: &[u32]) -> Self {
        LaurentPolynomial {
            vars: vars.to_vec(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &[u32]) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &[u32], c: BigInt) -> Self {
        Self::monomial(vars, &vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &[u32], exps: &[i64], c: BigInt) -> Self {
        assert_eq!(vars.len(), exps.len(), "exponent length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    /// The variable `u_{vars[idx]}`.
    pub fn variable(vars: &[u32], idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(vars, &e, BigInt::one())
    }

    /// Build from (exponent, coefficient) pairs, merging duplicates.
    pub fn from_terms<I>(vars: &[u32], it: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in it {
            assert_eq!(e.len(), vars.len(), "exponent length");
            p.add_term(e, c);
        }
        p
    }

    pub fn vars(&self) -> &[u32] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::VariableMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut r = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                r.add_term(e, ca * cb);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    /// Multiply by the monomial `u^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len(), "shift length");
        LaurentPolynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum of the exponents; `None` for zero.
    pub fn min_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        Some(m)
    }

    pub fn max_exponents(&self) -> Option<Vec<i64>> {
        let mut it = self.terms.keys();
        let mut m = it.next()?.clone();
        for e in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).max(*b);
            }
        }
        Some(m)
    }

    /// Exact quotient `self / divisor`, or `NotDivisible`.
    ///
    /// Long division on lexicographic leading terms. Every exponent of a
    /// genuine quotient lies in the box `[min(a)-min(b), max(a)-max(b)]`,
    /// which bounds the loop.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self> {
        self.check_vars(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.vars));
        }
        let (amin, amax) = (self.min_exponents().unwrap(), self.max_exponents().unwrap());
        let (bmin, bmax) = (divisor.min_exponents().unwrap(), divisor.max_exponents().unwrap());
        let lo: Vec<i64> = amin.iter().zip(&bmin).map(|(a, b)| a - b).collect();
        let hi: Vec<i64> = amax.iter().zip(&bmax).map(|(a, b)| a - b).collect();
        if lo.iter().zip(&hi).any(|(l, h)| l > h) {
            return Err(Error::NotDivisible);
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe: Vec<i64> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().zip(&lo).zip(&hi).any(|((q, l), h)| q < l || q > h) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = rc.div_rem(lead_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (be, bc) in &divisor.terms {
                let e: Vec<i64> = be.iter().zip(&qe).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(bc * &qc));
            }
            quot.add_term(qe, qc);
        }
        Ok(quot)
    }

    /// The vector `d` with `f * u^d` a polynomial not divisible by any `u_i`.
    pub fn denominator_vector(&self) -> Result<Vec<i64>> {
        let m = self.min_exponents().ok_or(Error::ZeroPolynomial)?;
        Ok(m.into_iter().map(|x| -x).collect())
    }

    /// True when every coefficient is nonnegative.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Evaluate every variable at 1.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    /// Parse the canonical form, or a more relaxed human form such as
    /// `(1 + u1^2 + u2^2)/(u1*u2)`. The divisor must divide exactly.
    pub fn parse(vars: &[u32], s: &str) -> Result<Self> {
        let mut p = Parser {
            chars: s.chars().filter(|c| !c.is_whitespace()).collect(),
            pos: 0,
            vars,
        };
        let v = p.quotient()?;
        if p.pos != p.chars.len() {
            return Err(Error::Parse(format!("trailing input at offset {}", p.pos)));
        }
        Ok(v)
    }
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vars: &'a [u32],
}

impl Parser<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn quotient(&mut self) -> Result<LaurentPolynomial> {
        let num = self.group()?;
        if self.eat('/') {
            let den = self.group()?;
            return num.divide_exact(&den);
        }
        Ok(num)
    }

    fn group(&mut self) -> Result<LaurentPolynomial> {
        if self.eat('(') {
            let v = self.sum()?;
            if !self.eat(')') {
                return Err(Error::Parse("missing ')'".into()));
            }
            Ok(v)
        } else {
            self.sum()
        }
    }

    fn sign(&mut self) -> (bool, bool) {
        let mut neg = false;
        let mut any = false;
        loop {
            if self.eat('+') {
                any = true;
            } else if self.eat('-') {
                neg = !neg;
                any = true;
            } else {
                return (neg, any);
            }
        }
    }

    fn sum(&mut self) -> Result<LaurentPolynomial> {
        let mut acc = LaurentPolynomial::zero(self.vars);
        let (neg, _) = self.sign();
        let t = self.term()?;
        acc = &acc + &if neg { -t } else { t };
        loop {
            let (neg, any) = self.sign();
            if !any {
                return Ok(acc);
            }
            let t = self.term()?;
            acc = &acc + &if neg { -t } else { t };
        }
    }

    fn term(&mut self) -> Result<LaurentPolynomial> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; self.vars.len()];
        loop {
            let (neg, _) = self.sign();
            if neg {
                coeff = -coeff;
            }
            match self.peek() {
                Some('u') => {
                    self.pos += 1;
                    let label: u32 = self
                        .digits()?
                        .parse()
                        .map_err(|_| Error::Parse("bad variable label".into()))?;
                    let idx = self
                        .vars
                        .iter()
                        .position(|&v| v == label)
                        .ok_or_else(|| Error::Parse(format!("unknown variable u{label}")))?;
                    let mut e = 1i64;
                    if self.eat('^') {
                        let neg = self.eat('-');
                        e = self
                            .digits()?
                            .parse()
                            .map_err(|_| Error::Parse("bad exponent".into()))?;
                        if neg {
                            e = -e;
                        }
                    }
                    exps[idx] += e;
                }
                Some(c) if c.is_ascii_digit() => {
                    let d: BigInt = self.digits()?.parse().unwrap();
                    coeff *= d;
                }
                _ => return Err(Error::Parse(format!("unexpected input at offset {}", self.pos))),
            }
            if !self.eat('*') {
                break;
            }
        }
        Ok(LaurentPolynomial::monomial(self.vars, &exps, coeff))
    }

    fn digits(&mut self) -> Result<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected digits at offset {start}")));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, x) in self.vars.iter().zip(e) {
                if *x != 0 {
                    write!(f, "*u{v}^{x}")?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(rhs).expect("variable lists differ")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_sub(rhs).expect("variable lists differ")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_mul(rhs).expect("variable lists differ")
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(mut self) -> LaurentPolynomial {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v2() -> Vec<u32> {
        vec![1, 2]
    }

    #[test]
    fn parse_and_print_round_trip() {
        let z = LaurentPolynomial::parse(&v2(), "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
        let s = z.to_string();
        assert_eq!(s, "1*u1^-1*u2^-1 + 1*u1^-1*u2^1 + 1*u1^1*u2^-1");
        assert_eq!(LaurentPolynomial::parse(&v2(), &s).unwrap(), z);
    }

    #[test]
    fn negative_coefficients_print_signed() {
        let p = LaurentPolynomial::parse(&v2(), "2 - 3*u1^2").unwrap();
        assert_eq!(p.to_string(), "2 + -3*u1^2");
        assert_eq!(LaurentPolynomial::parse(&v2(), &p.to_string()).unwrap(), p);
        assert_eq!(LaurentPolynomial::zero(&v2()).to_string(), "0");
    }

    #[test]
    fn denominator_vectors() {
        let z = LaurentPolynomial::parse(&v2(), "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
        assert_eq!(z.denominator_vector().unwrap(), vec![1, 1]);
        let u = LaurentPolynomial::variable(&[1, 2, 3], 2);
        assert_eq!(u.denominator_vector().unwrap(), vec![0, 0, -1]);
        assert_eq!(LaurentPolynomial::one(&v2()).denominator_vector().unwrap(), vec![0, 0]);
        assert_eq!(
            LaurentPolynomial::zero(&v2()).denominator_vector(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn exact_division_detects_remainders() {
        let vars = v2();
        let a = LaurentPolynomial::parse(&vars, "1 + u1").unwrap();
        let b = LaurentPolynomial::parse(&vars, "1 - u1").unwrap();
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
        assert_eq!(a.divide_exact(&b), Err(Error::NotDivisible));
        let two = LaurentPolynomial::constant(&vars, BigInt::from(2));
        assert_eq!(a.divide_exact(&two), Err(Error::NotDivisible));
        assert_eq!(
            a.divide_exact(&LaurentPolynomial::zero(&vars)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_variables_are_rejected() {
        let a = LaurentPolynomial::one(&[1, 2]);
        let b = LaurentPolynomial::one(&[1, 3]);
        assert_eq!(a.try_add(&b), Err(Error::VariableMismatch));
        assert_eq!(a.try_mul(&b), Err(Error::VariableMismatch));
    }
}
