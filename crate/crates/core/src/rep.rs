//! Finite-dimensional representations of quivers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::{modp, q, reduce_mod, PrimeFieldMatrix, RationalMatrix};
use crate::quiver::Quiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    /// Entries are integers in `0..p`.
    Prime(u64),
}

/// Vector spaces at the vertices and a matrix for every arrow. The matrix
/// of `a: s -> t` has shape `dims[t] x dims[s]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    quiver: Quiver,
    field: Field,
    dims: Vec<usize>,
    maps: Vec<RationalMatrix>,
}

impl Representation {
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<RationalMatrix>) -> Result<Self> {
        Self::with_field(quiver, Field::Rationals, dims, maps)
    }

    pub fn with_field(
        quiver: Quiver,
        field: Field,
        dims: Vec<usize>,
        maps: Vec<RationalMatrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::Dimension(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.n()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::Dimension(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (a, (m, &(s, t))) in maps.iter().zip(quiver.arrows()).enumerate() {
            if m.rows() != dims[t] || m.cols() != dims[s] {
                return Err(Error::Dimension(format!(
                    "arrow {a} needs a {}x{} matrix, got {}x{}",
                    dims[t],
                    dims[s],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut rep = Representation {
            quiver,
            field,
            dims,
            maps,
        };
        if let Field::Prime(p) = field {
            if !crate::linalg::is_prime(p) {
                return Err(Error::Domain(format!("{p} is not prime")));
            }
            for m in rep.maps.iter_mut() {
                for r in 0..m.rows() {
                    for c in 0..m.cols() {
                        let v = reduce_mod(m.get(r, c), p).ok_or_else(|| {
                            Error::Domain(format!("entry {} is not defined mod {p}", m.get(r, c)))
                        })?;
                        m.set(r, c, q(v as i64));
                    }
                }
            }
        }
        Ok(rep)
    }

    pub fn zero(quiver: &Quiver) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|_| RationalMatrix::zeros(0, 0))
            .collect();
        Representation {
            quiver: quiver.clone(),
            field: Field::Rationals,
            dims: vec![0; quiver.n()],
            maps,
        }
    }

    pub fn simple(quiver: &Quiver, i: usize) -> Self {
        let mut d = vec![0i64; quiver.n()];
        d[i] = 1;
        Self::thin(quiver, &d, &vec![BigRational::zero(); quiver.arrows().len()])
            .expect("simple representation")
    }

    /// A representation with every `dims[v] <= 1`; `values[a]` is used for
    /// arrows inside the support and ignored elsewhere.
    pub fn thin(quiver: &Quiver, dims: &[i64], values: &[BigRational]) -> Result<Self> {
        if dims.len() != quiver.n() || dims.iter().any(|&x| !(0..=1).contains(&x)) {
            return Err(Error::Dimension(format!("{dims:?} is not a thin vector")));
        }
        let d: Vec<usize> = dims.iter().map(|&x| x as usize).collect();
        let maps = quiver
            .arrows()
            .iter()
            .zip(values)
            .map(|(&(s, t), v)| {
                let mut m = RationalMatrix::zeros(d[t], d[s]);
                if d[s] == 1 && d[t] == 1 {
                    m.set(0, 0, v.clone());
                }
                m
            })
            .collect();
        Self::new(quiver.clone(), d, maps)
    }

    /// Thin representation with all maps inside the support equal to 1.
    pub fn thin_ones(quiver: &Quiver, dims: &[i64]) -> Result<Self> {
        Self::thin(quiver, dims, &vec![BigRational::one(); quiver.arrows().len()])
    }

    /// Thin representation on a connected support with identity maps, except
    /// that the designated arrow carries `special.1`.
    pub fn thin_indecomposable(
        quiver: &Quiver,
        dims: &[i64],
        special: Option<(usize, BigRational)>,
    ) -> Result<Self> {
        let support: Vec<usize> = (0..quiver.n()).filter(|&v| dims.get(v) == Some(&1)).collect();
        if support.is_empty() {
            return Err(Error::Dimension("empty support".into()));
        }
        let mut seen = vec![false; quiver.n()];
        let mut stack = vec![support[0]];
        seen[support[0]] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in quiver.arrows() {
                for (a, b) in [(s, t), (t, s)] {
                    if a == v && dims[b] == 1 && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        if support.iter().any(|&v| !seen[v]) {
            return Err(Error::Dimension(format!("support of {dims:?} is disconnected")));
        }
        let mut values = vec![BigRational::one(); quiver.arrows().len()];
        if let Some((a, lambda)) = special {
            if a >= values.len() {
                return Err(Error::Dimension(format!("no arrow with index {a}")));
            }
            values[a] = lambda;
        }
        Self::thin(quiver, dims, &values)
    }

    /// The indecomposable projective at `i`, with the paths from `i` as basis.
    pub fn projective(quiver: &Quiver, i: usize) -> Result<Self> {
        let order = quiver
            .topological_order()
            .ok_or_else(|| Error::InvalidQuiver("quiver has an oriented cycle".into()))?;
        // paths[v] lists the paths i -> v as arrow sequences.
        let mut paths: Vec<Vec<Vec<usize>>> = vec![Vec::new(); quiver.n()];
        paths[i].push(Vec::new());
        for &v in &order {
            let here = paths[v].clone();
            for a in quiver.outgoing(v) {
                let t = quiver.arrows()[a].1;
                for p in &here {
                    let mut np = p.clone();
                    np.push(a);
                    paths[t].push(np);
                }
            }
        }
        let dims: Vec<usize> = paths.iter().map(|p| p.len()).collect();
        let maps = quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = RationalMatrix::zeros(dims[t], dims[s]);
                for (c, p) in paths[s].iter().enumerate() {
                    let mut np = p.clone();
                    np.push(a);
                    let r = paths[t].iter().position(|x| *x == np).unwrap();
                    m.set(r, c, BigRational::one());
                }
                m
            })
            .collect();
        Self::new(quiver.clone(), dims, maps)
    }

    pub fn injective(quiver: &Quiver, i: usize) -> Result<Self> {
        Ok(Self::projective(&quiver.opposite(), i)?.dual())
    }

    /// Random representation with entries in `[-2, 2]`.
    pub fn random<R: Rng>(quiver: &Quiver, dims: &[usize], rng: &mut R) -> Self {
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                let mut m = RationalMatrix::zeros(dims[t], dims[s]);
                for r in 0..dims[t] {
                    for c in 0..dims[s] {
                        m.set(r, c, q(rng.gen_range(-2..=2)));
                    }
                }
                m
            })
            .collect();
        Representation {
            quiver: quiver.clone(),
            field: Field::Rationals,
            dims: dims.to_vec(),
            maps,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_vector(&self) -> Vec<i64> {
        self.dims.iter().map(|&x| x as i64).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    pub fn maps(&self) -> &[RationalMatrix] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &RationalMatrix {
        &self.maps[a]
    }

    /// The same data over another quiver with the same arrows, used when a
    /// reflection is undone.
    pub fn with_quiver(&self, quiver: Quiver) -> Result<Self> {
        Self::with_field(quiver, self.field, self.dims.clone(), self.maps.clone())
    }

    /// The dual representation of the opposite quiver.
    pub fn dual(&self) -> Self {
        Representation {
            quiver: self.quiver.opposite(),
            field: self.field,
            dims: self.dims.clone(),
            maps: self.maps.iter().map(|m| m.transpose()).collect(),
        }
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.quiver != other.quiver {
            return Err(Error::InvalidQuiver("direct sum over different quivers".into()));
        }
        if self.field != other.field {
            return Err(Error::Domain("direct sum over different fields".into()));
        }
        let dims: Vec<usize> = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .quiver
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(s, t))| {
                let mut m = RationalMatrix::zeros(dims[t], dims[s]);
                let (x, y) = (&self.maps[a], &other.maps[a]);
                for r in 0..x.rows() {
                    for c in 0..x.cols() {
                        m.set(r, c, x.get(r, c).clone());
                    }
                }
                for r in 0..y.rows() {
                    for c in 0..y.cols() {
                        m.set(x.rows() + r, x.cols() + c, y.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Ok(Representation {
            quiver: self.quiver.clone(),
            field: self.field,
            dims,
            maps,
        })
    }

    pub fn direct_sum_all(quiver: &Quiver, parts: &[Representation]) -> Result<Self> {
        let mut acc = Self::zero(quiver);
        for p in parts {
            acc = acc.direct_sum(p)?;
        }
        Ok(acc)
    }

    /// Maps reduced modulo `p`, or `None` if a denominator vanishes.
    pub fn maps_mod_p(&self, p: u64) -> Option<Vec<Vec<Vec<u64>>>> {
        if let Field::Prime(fp) = self.field {
            if fp != p {
                return None;
            }
        }
        self.maps
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| (0..m.cols()).map(|c| reduce_mod(m.get(r, c), p)).collect())
                    .collect()
            })
            .collect()
    }

    /// Least common multiple of the denominators of all entries.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.maps
            .iter()
            .fold(BigInt::one(), |acc, m| acc.lcm(&m.denominator_lcm()))
    }

    /// `hom_Q(M, M)` computed modulo `p`.
    pub fn endomorphism_dim_mod_p(&self, p: u64) -> Option<usize> {
        let mp = self.maps_mod_p(p)?;
        let sys = hom_system_mod_p(&self.quiver, &self.dims, &mp, &self.dims, &mp, p);
        Some(sys.1 - sys.0.rank())
    }
}

/// Variable offsets for `(f_v)_v` with `f_v` of shape `dn[v] x dm[v]`.
fn hom_offsets(dm: &[usize], dn: &[usize]) -> (Vec<usize>, usize) {
    let mut off = Vec::with_capacity(dm.len());
    let mut total = 0;
    for (a, b) in dm.iter().zip(dn) {
        off.push(total);
        total += a * b;
    }
    (off, total)
}

/// The linear map `(f_v) -> (N(a) f_s - f_t M(a))_a` as a matrix whose rows
/// are indexed by `(a, i, j)` with `i` in `N(t)` and `j` in `M(s)`.
fn hom_system(m: &Representation, n: &Representation) -> RationalMatrix {
    let quiver = &m.quiver;
    let (off, nvars) = hom_offsets(&m.dims, &n.dims);
    let neq: usize = quiver
        .arrows()
        .iter()
        .map(|&(s, t)| n.dims[t] * m.dims[s])
        .sum();
    let mut sys = RationalMatrix::zeros(neq, nvars);
    let mut row = 0;
    for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
        let (ma, na) = (&m.maps[a], &n.maps[a]);
        for i in 0..n.dims[t] {
            for j in 0..m.dims[s] {
                // sum_k N(a)[i][k] f_s[k][j]
                for k in 0..n.dims[s] {
                    let c = na.get(i, k);
                    if !c.is_zero() {
                        let col = off[s] + k * m.dims[s] + j;
                        let v = sys.get(row, col) + c;
                        sys.set(row, col, v);
                    }
                }
                // - sum_k f_t[i][k] M(a)[k][j]
                for k in 0..m.dims[t] {
                    let c = ma.get(k, j);
                    if !c.is_zero() {
                        let col = off[t] + i * m.dims[t] + k;
                        let v = sys.get(row, col) - c;
                        sys.set(row, col, v);
                    }
                }
                row += 1;
            }
        }
    }
    sys
}

fn hom_system_mod_p(
    quiver: &Quiver,
    dm: &[usize],
    mm: &[Vec<Vec<u64>>],
    dn: &[usize],
    nm: &[Vec<Vec<u64>>],
    p: u64,
) -> (PrimeFieldMatrix, usize) {
    let (off, nvars) = hom_offsets(dm, dn);
    let mut rows = Vec::new();
    for (a, &(s, t)) in quiver.arrows().iter().enumerate() {
        for i in 0..dn[t] {
            for j in 0..dm[s] {
                let mut r = vec![0u64; nvars];
                for k in 0..dn[s] {
                    let c = nm[a][i][k];
                    let col = off[s] + k * dm[s] + j;
                    r[col] = (r[col] + c) % p;
                }
                for k in 0..dm[t] {
                    let c = mm[a][k][j];
                    let col = off[t] + i * dm[t] + k;
                    r[col] = (r[col] + p - c) % p;
                }
                rows.push(r);
            }
        }
    }
    (PrimeFieldMatrix { p, rows }, nvars)
}

fn check_pair(m: &Representation, n: &Representation) -> Result<()> {
    if m.quiver != n.quiver {
        return Err(Error::InvalidQuiver("representations of different quivers".into()));
    }
    if m.field != n.field {
        return Err(Error::Domain("representations over different fields".into()));
    }
    Ok(())
}

/// `dim Hom(M, N)`.
pub fn hom_dimension(m: &Representation, n: &Representation) -> Result<usize> {
    check_pair(m, n)?;
    let (_, nvars) = hom_offsets(&m.dims, &n.dims);
    if nvars == 0 {
        return Ok(0);
    }
    match m.field {
        Field::Rationals => Ok(nvars - hom_system(m, n).rank()),
        Field::Prime(p) => {
            let mm = m.maps_mod_p(p).unwrap();
            let nm = n.maps_mod_p(p).unwrap();
            let (sys, nv) = hom_system_mod_p(&m.quiver, &m.dims, &mm, &n.dims, &nm, p);
            Ok(nv - sys.rank())
        }
    }
}

/// `dim Ext^1(M, N) = dim Hom(M, N) - <dim M, dim N>` for path algebras.
pub fn ext1_dimension(m: &Representation, n: &Representation) -> Result<usize> {
    let h = hom_dimension(m, n)? as i64;
    let e = h - m.quiver.euler(&m.dim_vector(), &n.dim_vector());
    Ok(e as usize)
}

/// A non-split extension `0 -> a -> X -> c -> 0`, or `None` when
/// `Ext^1(c, a) = 0`. The class used is the first standard basis vector of
/// the cochain space that is not a coboundary.
pub fn nonsplit_extension(a: &Representation, c: &Representation) -> Result<Option<Representation>> {
    check_pair(a, c)?;
    if a.field != Field::Rationals {
        return Err(Error::Unsupported("extensions over prime fields".into()));
    }
    let quiver = &a.quiver;
    let sys = hom_system(c, a);
    if sys.rows() == 0 {
        return Ok(None);
    }
    let (_, pivots) = sys.transpose().rref();
    let Some(k) = (0..sys.rows()).find(|r| !pivots.contains(r)) else {
        return Ok(None);
    };
    // Locate (arrow, i, j) of cochain coordinate k.
    let mut row = 0;
    let mut spot = None;
    for (ar, &(s, t)) in quiver.arrows().iter().enumerate() {
        let size = a.dims[t] * c.dims[s];
        if k < row + size {
            let local = k - row;
            spot = Some((ar, local / c.dims[s], local % c.dims[s]));
            break;
        }
        row += size;
    }
    let (arrow, gi, gj) = spot.expect("cochain coordinate");
    let mut x = a.direct_sum(c)?;
    // g sits in the upper right block: rows of A(t), columns of C(s).
    let col = a.dims[quiver.arrows()[arrow].0] + gj;
    x.maps[arrow].set(gi, col, BigRational::one());
    Ok(Some(x))
}

/// Rank of a list of rational vectors modulo the Mersenne prime `2^31 - 1`,
/// falling back to exact rank when the modular rank is not full.
pub fn rank_with_fallback(vectors: &[Vec<BigRational>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let ncols = vectors[0].len();
    const P: u64 = (1 << 31) - 1;
    let reduced: Option<Vec<Vec<u64>>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| reduce_mod(x, P)).collect())
        .collect();
    if let Some(r) = reduced {
        let rk = modp::rank(&r, P);
        if rk == vectors.len().min(ncols) {
            return rk;
        }
    }
    RationalMatrix::from_rows(vectors.len(), ncols, vectors.to_vec()).rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::new(vec![1, 2], &[(2, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn projectives_of_kronecker() {
        let k = kronecker();
        assert_eq!(Representation::projective(&k, 0).unwrap().dims(), &[1, 0]);
        assert_eq!(Representation::projective(&k, 1).unwrap().dims(), &[2, 1]);
        assert_eq!(Representation::injective(&k, 0).unwrap().dims(), &[1, 2]);
    }

    #[test]
    fn hom_and_ext_of_simples() {
        let k = kronecker();
        let s1 = Representation::simple(&k, 0);
        let s2 = Representation::simple(&k, 1);
        assert_eq!(hom_dimension(&s1, &s1).unwrap(), 1);
        assert_eq!(hom_dimension(&s2, &s1).unwrap(), 0);
        // Ext(S2, S1) has dimension 2, one for each arrow.
        assert_eq!(ext1_dimension(&s2, &s1).unwrap(), 2);
        assert_eq!(ext1_dimension(&s1, &s2).unwrap(), 0);
    }

    #[test]
    fn extension_of_simples_is_thin_indecomposable() {
        let k = kronecker();
        let s1 = Representation::simple(&k, 0);
        let s2 = Representation::simple(&k, 1);
        let x = nonsplit_extension(&s1, &s2).unwrap().unwrap();
        assert_eq!(x.dims(), &[1, 1]);
        assert_eq!(hom_dimension(&x, &x).unwrap(), 1);
        assert!(nonsplit_extension(&s2, &s1).unwrap().is_none());
    }

    #[test]
    fn prime_field_hom() {
        let k = kronecker();
        let m = Representation::thin(&k, &[1, 1], &[q(1), q(7)]).unwrap();
        let mp = Representation::with_field(
            k.clone(),
            Field::Prime(7),
            m.dims().to_vec(),
            m.maps().to_vec(),
        )
        .unwrap();
        assert_eq!(hom_dimension(&mp, &mp).unwrap(), 1);
        assert_eq!(m.endomorphism_dim_mod_p(7), Some(1));
    }
}
