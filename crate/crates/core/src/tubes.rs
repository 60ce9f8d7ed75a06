//! Regular components of affine quivers of type `A~`: the one-parameter
//! family of thin `delta`-modules, the exceptional tubes, characters of tube
//! modules and the difference property.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::ccmap::cc_map_module;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::quiver::{AffineType, Quiver, QuiverType, RootKind};
use crate::rep::{hom_dimension, nonsplit_extension, Representation};

/// A point of the projective line.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Lambda {
    Finite(BigRational),
    Infinity,
}

impl Lambda {
    pub fn int(n: i64) -> Self {
        Lambda::Finite(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Lambda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Lambda::Finite(x) => write!(f, "{x}"),
            Lambda::Infinity => write!(f, "inf"),
        }
    }
}

impl FromStr for Lambda {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Lambda::Infinity);
        }
        s.parse::<BigRational>()
            .map(Lambda::Finite)
            .map_err(|_| Error::Parse(format!("bad parameter {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeDescriptor {
    pub rank: usize,
    /// `quasi_simple_dims[i]` is `dim E_i`, with `c(e_i) = e_{i-1}`.
    pub quasi_simple_dims: Vec<Vec<i64>>,
    pub homogeneous: bool,
}

impl TubeDescriptor {
    /// The rank-one tube whose mouth is a `delta`-module `M_lambda`.
    pub fn homogeneous(delta: Vec<i64>) -> Self {
        TubeDescriptor {
            rank: 1,
            quasi_simple_dims: vec![delta],
            homogeneous: true,
        }
    }

    pub fn quasi_simple(&self, i: usize) -> &[i64] {
        &self.quasi_simple_dims[i % self.rank]
    }

    /// `dim E_i^{(n)}`.
    pub fn dims(&self, i: usize, n: usize) -> Vec<i64> {
        let mut d = vec![0; self.quasi_simple_dims[0].len()];
        for k in 0..n {
            for (x, y) in d.iter_mut().zip(self.quasi_simple(i + k)) {
                *x += y;
            }
        }
        d
    }
}

fn require_affine_a(q: &Quiver) -> Result<(usize, usize)> {
    match q.classify()? {
        QuiverType::Affine(AffineType::A { r, s }) => Ok((r, s)),
        t => Err(Error::Unsupported(format!("{t} is not of type A~"))),
    }
}

/// The arrows of the underlying cycle split by direction.
pub fn cycle_classes(q: &Quiver) -> Result<(Vec<usize>, Vec<usize>)> {
    require_affine_a(q)?;
    let arrows = q.arrows();
    if q.n() == 2 {
        return Ok((vec![0], vec![1]));
    }
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q.n()];
    for (a, &(s, t)) in arrows.iter().enumerate() {
        adj[s].push((t, a));
        adj[t].push((s, a));
    }
    let (mut fwd, mut bwd) = (Vec::new(), Vec::new());
    let mut cur = 0;
    let mut came_by = usize::MAX;
    for _ in 0..q.n() {
        let &(next, a) = adj[cur].iter().find(|&&(_, a)| a != came_by).unwrap();
        if arrows[a].0 == cur {
            fwd.push(a);
        } else {
            bwd.push(a);
        }
        came_by = a;
        cur = next;
    }
    let has_zero = |v: &Vec<usize>| v.contains(&0);
    if bwd.len() > fwd.len() || (bwd.len() == fwd.len() && has_zero(&bwd)) {
        std::mem::swap(&mut fwd, &mut bwd);
    }
    fwd.sort_unstable();
    bwd.sort_unstable();
    Ok((fwd, bwd))
}

/// The arrow that carries the parameter: the largest-index arrow of the
/// larger direction class (ties broken towards the class holding arrow 0).
pub fn designated_arrow(q: &Quiver) -> Result<usize> {
    let (major, _) = cycle_classes(q)?;
    Ok(*major.last().unwrap())
}

/// The thin `delta`-module `M_lambda`, without any homogeneity check.
pub fn thin_delta_module(q: &Quiver, lambda: &Lambda) -> Result<Representation> {
    let delta = q.delta()?;
    let (major, minor) = cycle_classes(q)?;
    let arrow = *major.last().unwrap();
    match lambda {
        Lambda::Finite(x) => Representation::thin_indecomposable(q, &delta, Some((arrow, x.clone()))),
        Lambda::Infinity => Representation::thin_indecomposable(q, &delta, Some((minor[0], BigRational::zero()))),
    }
}

/// Exceptional tubes (rank at least 2), each with its Coxeter orbit of
/// thin quasi-simples summing to `delta`.
pub fn exceptional_tubes(q: &Quiver) -> Result<Vec<TubeDescriptor>> {
    require_affine_a(q)?;
    let delta = q.delta()?;
    let below: Vec<i64> = delta.clone();
    let candidates: Vec<Vec<i64>> = q
        .positive_roots_up_to(&below)?
        .into_iter()
        .filter(|(d, k)| *k == RootKind::Real && *d != delta)
        .map(|(d, _)| d)
        .filter(|d| q.defect(d).map(|x| x == 0).unwrap_or(false))
        .collect();
    let mut tubes = Vec::new();
    let mut used: Vec<Vec<i64>> = Vec::new();
    for start in &candidates {
        if used.contains(start) {
            continue;
        }
        // Orbit under c^{-1}, starting from the lexicographically smallest
        // unused candidate.
        let mut orbit = vec![start.clone()];
        loop {
            let next = q.inverse_coxeter(orbit.last().unwrap())?;
            if next == *start {
                break;
            }
            if orbit.len() > q.n() + 1 || !candidates.contains(&next) {
                orbit.clear();
                break;
            }
            orbit.push(next);
        }
        if orbit.is_empty() {
            continue;
        }
        let sum: Vec<i64> = (0..q.n()).map(|v| orbit.iter().map(|e| e[v]).sum()).collect();
        if sum != delta || orbit.len() < 2 {
            continue;
        }
        used.extend(orbit.iter().cloned());
        tubes.push(TubeDescriptor {
            rank: orbit.len(),
            quasi_simple_dims: orbit,
            homogeneous: false,
        });
    }
    tubes.sort_by(|a, b| b.rank.cmp(&a.rank).then(a.quasi_simple_dims.cmp(&b.quasi_simple_dims)));
    Ok(tubes)
}

/// Where a thin `delta`-module sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Placement {
    Homogeneous,
    /// In an exceptional tube, with the quasi-simple that maps into it.
    Exceptional { quasi_socle: Vec<i64> },
    NotBrick,
}

/// `End = k` and `Hom(E, M) = 0` for every exceptional quasi-simple `E`.
pub fn placement(q: &Quiver, m: &Representation) -> Result<Placement> {
    if hom_dimension(m, m)? != 1 {
        return Ok(Placement::NotBrick);
    }
    for tube in exceptional_tubes(q)? {
        for e in &tube.quasi_simple_dims {
            let em = Representation::thin_indecomposable(q, e, None)?;
            if hom_dimension(&em, m)? != 0 {
                return Ok(Placement::Exceptional {
                    quasi_socle: e.clone(),
                });
            }
        }
    }
    Ok(Placement::Homogeneous)
}

/// A quasi-simple `M_lambda` of a homogeneous tube.
pub fn homogeneous_regular(q: &Quiver, lambda: &Lambda) -> Result<Representation> {
    let m = thin_delta_module(q, lambda)?;
    match placement(q, &m)? {
        Placement::Homogeneous => Ok(m),
        Placement::Exceptional { quasi_socle } => Err(Error::ExceptionalParameter(format!(
            "{lambda} (exceptional tube with quasi-simple {quasi_socle:?})"
        ))),
        Placement::NotBrick => Err(Error::ExceptionalParameter(format!(
            "{lambda} (module is not a brick)"
        ))),
    }
}

/// Some homogeneous parameter: the first of `1, 2, 3, ...` that passes the
/// certificate.
pub fn default_homogeneous(q: &Quiver) -> Result<Representation> {
    for k in 1..=16 {
        if let Ok(m) = homogeneous_regular(q, &Lambda::int(k)) {
            return Ok(m);
        }
    }
    Err(Error::Domain("no homogeneous parameter found".into()))
}

/// `E_i^{(n)}`: the module of quasi-length `n` with quasi-socle `E_i`,
/// built from `0 -> E_i -> E_i^{(n)} -> E_{i+1}^{(n-1)} -> 0`.
pub fn tube_module(q: &Quiver, tube: &TubeDescriptor, i: usize, n: usize) -> Result<Representation> {
    if n == 0 {
        return Ok(Representation::zero(q));
    }
    let base = |j: usize| -> Result<Representation> {
        if tube.homogeneous {
            default_homogeneous(q)
        } else {
            Representation::thin_indecomposable(q, tube.quasi_simple(j), None)
        }
    };
    let mut m = base(i + n - 1)?;
    for k in (0..n - 1).rev() {
        let sub = base(i + k)?;
        m = nonsplit_extension(&sub, &m)?.ok_or_else(|| {
            Error::Domain(format!("no extension for quasi-length {}", n - k))
        })?;
    }
    Ok(m)
}

/// `M_lambda^{(n)}` for a given homogeneous `M_lambda`.
pub fn homogeneous_tube_module(m: &Representation, n: usize) -> Result<Representation> {
    if n == 0 {
        return Ok(Representation::zero(m.quiver()));
    }
    let mut x = m.clone();
    for _ in 1..n {
        x = nonsplit_extension(m, &x)?
            .ok_or_else(|| Error::Domain("homogeneous module has no self-extension".into()))?;
    }
    Ok(x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TubeCharacterTable {
    pub tube: TubeDescriptor,
    /// `(i, n) -> X_{E_i^{(n)}}` with `i < rank` and `1 <= n`.
    pub chars: BTreeMap<(usize, usize), LaurentPolynomial>,
}

impl TubeCharacterTable {
    pub fn get(&self, i: usize, n: usize) -> Option<&LaurentPolynomial> {
        self.chars.get(&(i % self.tube.rank, n))
    }
}

/// Characters of all tube modules up to `max_length`, from the mesh relation
/// `X_{E_j^{(n+1)}} = (X_{E_{j+1}^{(n)}} X_{E_j^{(n)}} - 1) / X_{E_{j+1}^{(n-1)}}`.
pub fn tube_characters(q: &Quiver, tube: &TubeDescriptor, max_length: usize) -> Result<TubeCharacterTable> {
    if max_length == 0 {
        return Err(Error::Domain("max_length must be positive".into()));
    }
    let p = tube.rank;
    let vars = q.labels().to_vec();
    let one = LaurentPolynomial::one(&vars);
    let mut chars: BTreeMap<(usize, usize), LaurentPolynomial> = BTreeMap::new();
    for i in 0..p {
        let m = if tube.homogeneous {
            default_homogeneous(q)?
        } else {
            Representation::thin_indecomposable(q, tube.quasi_simple(i), None)?
        };
        chars.insert((i, 1), cc_map_module(&m)?);
    }
    let get = |chars: &BTreeMap<(usize, usize), LaurentPolynomial>, j: usize, n: usize| {
        if n == 0 {
            one.clone()
        } else {
            chars[&(j % p, n)].clone()
        }
    };
    for n in 1..max_length {
        for j in 0..p {
            let num = &(&get(&chars, j + 1, n) * &get(&chars, j, n)) - &one;
            let x = num.divide_exact(&get(&chars, j + 1, n - 1))?;
            chars.insert((j, n + 1), x);
        }
    }
    Ok(TubeCharacterTable {
        tube: tube.clone(),
        chars,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceReport {
    pub quasi_socle: Vec<i64>,
    pub x_me: LaurentPolynomial,
    pub x_mlambda: LaurentPolynomial,
    pub x_quotient: LaurentPolynomial,
    pub difference: LaurentPolynomial,
    pub holds: bool,
}

/// For each quasi-simple `E` of an exceptional tube, test
/// `X_{M_E} = X_{M_lambda} + X_{q.rad M_E / E}`.
pub fn check_difference_property(q: &Quiver, tube: &TubeDescriptor) -> Result<Vec<DifferenceReport>> {
    require_affine_a(q)?;
    if tube.homogeneous {
        return Err(Error::Domain("the tube must be exceptional".into()));
    }
    let p = tube.rank;
    let table = tube_characters(q, tube, p)?;
    let x_ml = cc_map_module(&default_homogeneous(q)?)?;
    let delta = q.delta()?;
    let mut out = Vec::new();
    for i in 0..p {
        let e = tube.quasi_simple(i).to_vec();
        let ce = q.coxeter(&e)?;
        let nvec: Vec<i64> = (0..q.n()).map(|v| delta[v] - ce[v] - e[v]).collect();
        let x_quot = if nvec.iter().all(|&x| x == 0) {
            LaurentPolynomial::one(q.labels())
        } else {
            cc_map_module(&Representation::thin_indecomposable(q, &nvec, None)?)?
        };
        let x_me = table.get(i, p).unwrap().clone();
        let difference = &x_me - &x_ml;
        let holds = difference == x_quot;
        out.push(DifferenceReport {
            quasi_socle: e,
            x_me,
            x_mlambda: x_ml.clone(),
            x_quotient: x_quot,
            difference,
            holds,
        });
    }
    Ok(out)
}

/// Convenience: the character `X_{M_lambda}` of the homogeneous tubes.
pub fn homogeneous_character(q: &Quiver) -> Result<LaurentPolynomial> {
    cc_map_module(&default_homogeneous(q)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn designated_arrows() {
        assert_eq!(designated_arrow(&Quiver::kronecker()).unwrap(), 0);
        let a21 = Quiver::affine_a(2, 1).unwrap();
        assert_eq!(a21.arrows()[designated_arrow(&a21).unwrap()], (1, 2));
        let a31 = Quiver::affine_a(3, 1).unwrap();
        assert_eq!(a31.arrows()[designated_arrow(&a31).unwrap()], (2, 3));
    }

    #[test]
    fn lambda_parsing() {
        assert_eq!("inf".parse::<Lambda>().unwrap(), Lambda::Infinity);
        assert_eq!("3/2".parse::<Lambda>().unwrap().to_string(), "3/2");
        assert!("x".parse::<Lambda>().is_err());
    }

    #[test]
    fn kronecker_has_no_exceptional_tubes() {
        assert!(exceptional_tubes(&Quiver::kronecker()).unwrap().is_empty());
    }
}
