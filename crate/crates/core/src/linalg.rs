//! Exact linear algebra over Q and over prime fields, and Fourier-Motzkin
//! feasibility for small rational systems.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Dense row-major matrix over Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, v: Vec<Vec<BigRational>>) -> Self {
        assert_eq!(v.len(), rows, "row count");
        let mut data = Vec::with_capacity(rows * cols);
        for r in v {
            assert_eq!(r.len(), cols, "column count");
            data.extend(r);
        }
        RationalMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, v: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows,
            cols,
            v.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product shape");
        let mut m = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        m.data[idx] += a * b;
                    }
                }
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let sub = m.get(row, c) * &f;
                    if !sub.is_zero() {
                        let idx = r * m.cols + c;
                        m.data[idx] -= sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let (r, pivots) = self.rref();
        let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivot_set.contains(c)) {
            let mut v = vec![BigRational::zero(); self.cols];
            v[free] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(i, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of `A x = b`, if any.
    pub fn solve(&self, b: &[BigRational]) -> Option<Vec<BigRational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, BigRational::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Some(inv)
    }

    /// Entries as integers, if all are integral and fit.
    pub fn to_i64(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                    .collect()
            })
            .collect()
    }

    /// Least common multiple of all denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.data
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Arithmetic in `F_p` for primes below `2^32`.
pub mod modp {
    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    /// Reduce the rows to reduced echelon form in place, dropping zero rows.
    /// Returns the pivot columns.
    pub fn rref_rows(rows: &mut Vec<Vec<u64>>, p: u64) -> Vec<usize> {
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..ncols {
            if row == rows.len() {
                break;
            }
            let Some(piv) = (row..rows.len()).find(|&r| rows[r][col] != 0) else {
                continue;
            };
            rows.swap(piv, row);
            let inv = inv(rows[row][col], p);
            for x in rows[row].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot_row = rows[row].clone();
            for (r, other) in rows.iter_mut().enumerate() {
                if r == row || other[col] == 0 {
                    continue;
                }
                let f = other[col];
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
            pivots.push(col);
            row += 1;
        }
        rows.truncate(row);
        pivots
    }

    pub fn rank(rows: &[Vec<u64>], p: u64) -> usize {
        let mut m = rows.to_vec();
        rref_rows(&mut m, p).len()
    }
}

/// Dense matrix over `F_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    pub p: u64,
    pub rows: Vec<Vec<u64>>,
}

impl PrimeFieldMatrix {
    pub fn rank(&self) -> usize {
        modp::rank(&self.rows, self.p)
    }

    /// A basis of the kernel `{x : A x = 0}`.
    pub fn nullspace(&self, ncols: usize) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut m: Vec<Vec<u64>> = self.rows.clone();
        if m.is_empty() {
            return (0..ncols)
                .map(|i| (0..ncols).map(|j| u64::from(i == j)).collect())
                .collect();
        }
        let pivots = modp::rref_rows(&mut m, p);
        let mut basis = Vec::new();
        for free in (0..ncols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i][free]) % p;
            }
            basis.push(v);
        }
        basis
    }
}

/// Reduce a rational to `F_p`; `None` when `p` divides the denominator.
pub fn reduce_mod(x: &BigRational, p: u64) -> Option<u64> {
    let pb = BigInt::from(p);
    let d = x.denom().mod_floor(&pb).to_u64().unwrap();
    if d == 0 {
        return None;
    }
    let n = x.numer().mod_floor(&pb).to_u64().unwrap();
    Some(n * modp::inv(d, p) % p)
}

/// Primes below `2^31`, from `start` upward.
pub fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start.max(2)..(1u64 << 31)).filter(|&n| is_prime(n))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Find `x` with `a_r . x <= b_r` for every row, by Fourier-Motzkin
/// elimination followed by back substitution. Returns `None` when the
/// system is infeasible.
pub fn fourier_motzkin(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    assert_eq!(a.len(), b.len(), "constraint count");
    let nvars = a.first().map_or(0, |r| r.len());
    type Row = (Vec<BigRational>, BigRational);
    let mut systems: Vec<Vec<Row>> = vec![Vec::new(); nvars + 1];
    systems[nvars] = dedupe(a.iter().cloned().zip(b.iter().cloned()).collect());
    for k in (0..nvars).rev() {
        let cur = &systems[k + 1];
        let mut next: Vec<Row> = Vec::new();
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for row in cur {
            if row.0[k].is_positive() {
                pos.push(row);
            } else if row.0[k].is_negative() {
                neg.push(row);
            } else {
                next.push(row.clone());
            }
        }
        for p in &pos {
            for n in &neg {
                let fp = p.0[k].recip();
                let fn_ = -n.0[k].recip();
                let coeffs: Vec<BigRational> = p
                    .0
                    .iter()
                    .zip(&n.0)
                    .map(|(x, y)| x * &fp + y * &fn_)
                    .collect();
                next.push((coeffs, &p.1 * &fp + &n.1 * &fn_));
            }
        }
        systems[k] = dedupe(next);
    }
    if systems[0].iter().any(|(_, rhs)| rhs.is_negative()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); nvars];
    for k in 0..nvars {
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for (coeffs, rhs) in &systems[k + 1] {
            let ck = &coeffs[k];
            if ck.is_zero() {
                continue;
            }
            let rest: BigRational = (0..k).map(|j| &coeffs[j] * &x[j]).sum();
            let bound = (rhs - rest) / ck;
            if ck.is_positive() {
                hi = Some(match hi {
                    Some(h) if h < bound => h,
                    _ => bound,
                });
            } else {
                lo = Some(match lo {
                    Some(l) if l > bound => l,
                    _ => bound,
                });
            }
        }
        x[k] = match (lo, hi) {
            (None, None) => BigRational::zero(),
            (Some(l), None) => l.ceil(),
            (None, Some(h)) => h.floor(),
            (Some(l), Some(h)) => {
                if l.ceil() <= h {
                    l.ceil()
                } else {
                    (l + h) / q(2)
                }
            }
        };
    }
    Some(x)
}

fn dedupe(rows: Vec<(Vec<BigRational>, BigRational)>) -> Vec<(Vec<BigRational>, BigRational)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (c, r) in rows {
        // Scale so the first nonzero coefficient has absolute value 1.
        let lead = c.iter().find(|x| !x.is_zero()).map(|x| x.abs());
        let (c, r) = match lead {
            Some(l) => (c.iter().map(|x| x / &l).collect::<Vec<_>>(), r / l),
            None => (c, r),
        };
        if seen.insert((c.clone(), r.clone())) {
            out.push((c, r));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = RationalMatrix::from_i64(2, 3, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn inverse_round_trip() {
        let m = RationalMatrix::from_i64(2, 2, &[vec![1, -2], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RationalMatrix::identity(2));
        assert!(RationalMatrix::from_i64(2, 2, &[vec![1, 2], vec![2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn mod_p_rank_matches_rational_rank() {
        let rows = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]];
        let m = RationalMatrix::from_i64(3, 3, &rows);
        let mp: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| x as u64).collect())
            .collect();
        assert_eq!(m.rank(), 2);
        assert_eq!(modp::rank(&mp, 101), 2);
        let pm = PrimeFieldMatrix { p: 101, rows: mp };
        assert_eq!(pm.nullspace(3).len(), 1);
    }

    #[test]
    fn fm_feasible_and_infeasible() {
        // x + y <= -1, -x <= 0 ... feasible with y negative.
        let a = vec![vec![q(1), q(1)], vec![q(-1), q(0)]];
        let b = vec![q(-1), q(0)];
        let x = fourier_motzkin(&a, &b).unwrap();
        for (row, rhs) in a.iter().zip(&b) {
            let lhs: BigRational = row.iter().zip(&x).map(|(c, v)| c * v).sum();
            assert!(lhs <= *rhs);
        }
        // x <= -1 and -x <= -1 is infeasible.
        let a = vec![vec![q(1)], vec![q(-1)]];
        assert!(fourier_motzkin(&a, &[q(-1), q(-1)]).is_none());
    }

    #[test]
    fn reduction_mod_p() {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(reduce_mod(&half, 7), Some(4));
        assert_eq!(reduce_mod(&half, 2), None);
    }
}
