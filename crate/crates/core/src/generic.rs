//! Canonical decompositions and generic variables for Dynkin and affine
//! quivers.

use std::collections::HashMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::ccmap::cc_map_module;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::quiver::{boxed_vectors, AffineType, Quiver, QuiverType, RootKind};
use crate::rep::{ext1_dimension, hom_dimension, Representation};
use crate::tubes::{homogeneous_regular, Lambda};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalDecomposition {
    pub d: Vec<i64>,
    /// Real Schur roots with multiplicities, in search order.
    pub summands: Vec<(Vec<i64>, usize)>,
    pub delta_multiplicity: usize,
}

impl fmt::Display for CanonicalDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.delta_multiplicity > 0 {
            parts.push(format!("delta^{}", self.delta_multiplicity));
        }
        for (r, m) in &self.summands {
            let v: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            parts.push(format!("({})^{m}", v.join(",")));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    ClusterMonomial,
    /// `z^n X_E` with `E` rigid regular; `regular` lists the summand roots
    /// of `E` with repetition.
    ZPowerTimesRigidRegular { n: usize, regular: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericBasisElement {
    pub d: Vec<i64>,
    pub value: LaurentPolynomial,
    pub kind: BasisKind,
}

/// Caches witnesses, Ext values and characters for one quiver.
pub struct GenericEngine {
    quiver: Quiver,
    ty: QuiverType,
    delta: Option<Vec<i64>>,
    lambda_start: i64,
    witnesses: HashMap<Vec<i64>, Representation>,
    homogeneous: Vec<Representation>,
    ext_cache: HashMap<(Vec<i64>, Vec<i64>), usize>,
    values: HashMap<Vec<i64>, LaurentPolynomial>,
    budget: usize,
}

impl GenericEngine {
    pub fn new(quiver: &Quiver) -> Result<Self> {
        Self::with_lambda_start(quiver, 1)
    }

    /// Homogeneous witnesses use parameters `start, start + 1, ...` (skipping
    /// exceptional ones).
    pub fn with_lambda_start(quiver: &Quiver, start: i64) -> Result<Self> {
        let ty = quiver.classify()?;
        let delta = match ty {
            QuiverType::Dynkin(_) => None,
            QuiverType::Affine(_) => Some(quiver.delta()?),
            QuiverType::Wild => {
                return Err(Error::Unsupported("generic variables of wild quivers".into()))
            }
        };
        Ok(GenericEngine {
            quiver: quiver.clone(),
            ty,
            delta,
            lambda_start: start,
            witnesses: HashMap::new(),
            homogeneous: Vec::new(),
            ext_cache: HashMap::new(),
            values: HashMap::new(),
            budget: 200_000,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn delta(&self) -> Option<&[i64]> {
        self.delta.as_deref()
    }

    fn is_affine_a(&self) -> bool {
        matches!(self.ty, QuiverType::Affine(AffineType::A { .. }))
    }

    /// The `k`-th homogeneous `delta`-module (distinct parameters).
    pub fn homogeneous_module(&mut self, k: usize) -> Result<Representation> {
        if !self.is_affine_a() {
            return Err(Error::Unsupported(format!(
                "homogeneous delta-modules for {}",
                self.ty
            )));
        }
        let mut lambda = self.lambda_start + self.homogeneous.len() as i64;
        while self.homogeneous.len() <= k {
            if let Ok(m) = homogeneous_regular(&self.quiver, &Lambda::int(lambda)) {
                self.homogeneous.push(m);
            }
            lambda += 1;
        }
        Ok(self.homogeneous[k].clone())
    }

    /// Real Schur roots `r <= d`.
    pub fn real_schur_roots_up_to(&self, d: &[i64]) -> Result<Vec<Vec<i64>>> {
        let mut out = Vec::new();
        for (r, kind) in self.quiver.positive_roots_up_to(d)? {
            if kind == RootKind::Real && self.quiver.is_schur_root(&r)? {
                out.push(r);
            }
        }
        Ok(out)
    }

    /// A rigid brick of dimension `root`, a real Schur root.
    pub fn rigid_witness(&mut self, root: &[i64]) -> Result<Representation> {
        if let Some(w) = self.witnesses.get(root) {
            return Ok(w.clone());
        }
        if self.quiver.tits(root) != 1 {
            return Err(Error::Domain(format!("{root:?} is not a real root")));
        }
        let certify = |m: &Representation| -> Result<bool> {
            Ok(hom_dimension(m, m)? == 1 && ext1_dimension(m, m)? == 0)
        };
        let mut found = None;
        if root.iter().all(|&x| x <= 1) {
            if let Ok(m) = Representation::thin_indecomposable(&self.quiver, root, None) {
                if certify(&m)? {
                    found = Some(m);
                }
            }
        }
        if found.is_none() {
            let seed = root
                .iter()
                .fold(0xC0FFEEu64, |acc, &x| acc.wrapping_mul(1_000_003).wrapping_add(x as u64));
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let dims: Vec<usize> = root.iter().map(|&x| x as usize).collect();
            for _ in 0..200 {
                let m = Representation::random(&self.quiver, &dims, &mut rng);
                if certify(&m)? {
                    found = Some(m);
                    break;
                }
            }
        }
        let m = found.ok_or_else(|| Error::NoWitness(root.to_vec()))?;
        self.witnesses.insert(root.to_vec(), m.clone());
        Ok(m)
    }

    fn is_delta(&self, r: &[i64]) -> bool {
        self.delta.as_deref() == Some(r)
    }

    /// Generic `dim Ext^1(a, b)` for Schur roots, using a second homogeneous
    /// module when both are `delta`.
    pub fn generic_ext(&mut self, a: &[i64], b: &[i64]) -> Result<usize> {
        let key = (a.to_vec(), b.to_vec());
        if let Some(&v) = self.ext_cache.get(&key) {
            return Ok(v);
        }
        let wa = if self.is_delta(a) {
            self.homogeneous_module(0)?
        } else {
            self.rigid_witness(a)?
        };
        let wb = if self.is_delta(b) {
            self.homogeneous_module(usize::from(self.is_delta(a)))?
        } else {
            self.rigid_witness(b)?
        };
        let v = ext1_dimension(&wa, &wb)?;
        self.ext_cache.insert(key, v);
        Ok(v)
    }

    fn compatible(&mut self, a: &[i64], b: &[i64]) -> Result<bool> {
        Ok(self.generic_ext(a, b)? == 0 && self.generic_ext(b, a)? == 0)
    }

    /// The decomposition of `d` into Schur roots with pairwise vanishing
    /// generic extensions.
    pub fn canonical_decomposition(&mut self, d: &[i64]) -> Result<CanonicalDecomposition> {
        if d.len() != self.quiver.n() || d.iter().any(|&x| x < 0) {
            return Err(Error::Dimension(format!("{d:?} is not a nonnegative vector")));
        }
        let mut candidates: Vec<Vec<i64>> = Vec::new();
        let delta_fits = self
            .delta
            .as_ref()
            .is_some_and(|delta| delta.iter().zip(d).all(|(a, b)| a <= b));
        if delta_fits && self.is_affine_a() {
            candidates.push(self.delta.clone().unwrap());
        }
        let mut reals = self.real_schur_roots_up_to(d)?;
        reals.sort_by(|a, b| {
            let (ha, hb): (i64, i64) = (a.iter().sum(), b.iter().sum());
            hb.cmp(&ha).then(a.cmp(b))
        });
        candidates.extend(reals);
        let mut chosen: Vec<usize> = Vec::new();
        let mut nodes = 0usize;
        let ok = self.search(&candidates, d.to_vec(), 0, &mut chosen, &mut nodes)?;
        if !ok {
            if delta_fits && !self.is_affine_a() {
                return Err(Error::Unsupported(format!(
                    "{d:?} needs delta summands, which require tube data for {}",
                    self.ty
                )));
            }
            return Err(Error::Domain(format!("no decomposition found for {d:?}")));
        }
        let mut out = CanonicalDecomposition {
            d: d.to_vec(),
            summands: Vec::new(),
            delta_multiplicity: 0,
        };
        for &i in &chosen {
            let r = &candidates[i];
            if self.is_delta(r) {
                out.delta_multiplicity += 1;
            } else if let Some(last) = out.summands.last_mut().filter(|x| &x.0 == r) {
                last.1 += 1;
            } else {
                out.summands.push((r.clone(), 1));
            }
        }
        Ok(out)
    }

    fn search(
        &mut self,
        cands: &[Vec<i64>],
        rest: Vec<i64>,
        start: usize,
        chosen: &mut Vec<usize>,
        nodes: &mut usize,
    ) -> Result<bool> {
        if rest.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > self.budget {
            return Err(Error::Domain("canonical decomposition search budget exhausted".into()));
        }
        for i in start..cands.len() {
            let r = &cands[i];
            if r.iter().zip(&rest).any(|(a, b)| a > b) {
                continue;
            }
            let mut ok = true;
            let mut distinct: Vec<usize> = chosen.clone();
            distinct.dedup();
            for &j in &distinct {
                if j != i && !self.compatible(&cands[j], r)? {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let next: Vec<i64> = rest.iter().zip(r).map(|(a, b)| a - b).collect();
            chosen.push(i);
            if self.search(cands, next, i, chosen, nodes)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }

    /// A module in general position of dimension `d >= 0`: the direct sum
    /// of the witnesses of its canonical decomposition.
    pub fn generic_module(&mut self, d: &[i64]) -> Result<Representation> {
        let dec = self.canonical_decomposition(d)?;
        let mut parts = Vec::new();
        for k in 0..dec.delta_multiplicity {
            parts.push(self.homogeneous_module(k)?);
        }
        for (r, m) in &dec.summands {
            let w = self.rigid_witness(r)?;
            for _ in 0..*m {
                parts.push(w.clone());
            }
        }
        Representation::direct_sum_all(&self.quiver, &parts)
    }

    fn schur_value(&mut self, r: &[i64]) -> Result<LaurentPolynomial> {
        if let Some(v) = self.values.get(r) {
            return Ok(v.clone());
        }
        let m = if self.is_delta(r) {
            self.homogeneous_module(0)?
        } else {
            self.rigid_witness(r)?
        };
        let v = cc_map_module(&m)?;
        self.values.insert(r.to_vec(), v.clone());
        Ok(v)
    }

    /// `X_d = X_{[d]_+} prod_{d_i < 0} u_i^{-d_i}`.
    pub fn generic_variable(&mut self, d: &[i64]) -> Result<GenericBasisElement> {
        if d.len() != self.quiver.n() {
            return Err(Error::Dimension("dimension vector length".into()));
        }
        let pos: Vec<i64> = d.iter().map(|&x| x.max(0)).collect();
        let neg: Vec<i64> = d.iter().map(|&x| (-x).max(0)).collect();
        let dec = self.canonical_decomposition(&pos)?;
        let vars = self.quiver.labels().to_vec();
        let mut value = LaurentPolynomial::one(&vars).shift(&neg);
        if dec.delta_multiplicity > 0 {
            let delta = self.delta.clone().unwrap();
            value = &value * &self.schur_value(&delta)?.pow(dec.delta_multiplicity as u32);
        }
        let mut regular = Vec::new();
        for (r, m) in &dec.summands {
            value = &value * &self.schur_value(r)?.pow(*m as u32);
            for _ in 0..*m {
                regular.push(r.clone());
            }
        }
        let kind = if dec.delta_multiplicity == 0 {
            BasisKind::ClusterMonomial
        } else {
            for r in &regular {
                if self.quiver.defect(r)? != 0 {
                    return Err(Error::Domain(format!(
                        "summand {r:?} next to delta is not regular"
                    )));
                }
            }
            BasisKind::ZPowerTimesRigidRegular {
                n: dec.delta_multiplicity,
                regular,
            }
        };
        Ok(GenericBasisElement {
            d: d.to_vec(),
            value,
            kind,
        })
    }

    /// Every `X_d` with `-box <= d <= box`, for quivers of type `A~`.
    pub fn enumerate_generic_basis(&mut self, bound: &[i64]) -> Result<Vec<GenericBasisElement>> {
        if !self.is_affine_a() {
            return Err(Error::Unsupported(format!(
                "generic basis enumeration for {}",
                self.ty
            )));
        }
        if bound.len() != self.quiver.n() || bound.iter().any(|&x| x < 0) {
            return Err(Error::Dimension("box must be a nonnegative vector".into()));
        }
        let doubled: Vec<i64> = bound.iter().map(|&b| 2 * b).collect();
        let mut out = Vec::new();
        for v in boxed_vectors(&doubled) {
            let d: Vec<i64> = v.iter().zip(bound).map(|(a, b)| a - b).collect();
            out.push(self.generic_variable(&d)?);
        }
        Ok(out)
    }
}

/// One-shot helpers.
pub fn canonical_decomposition(q: &Quiver, d: &[i64]) -> Result<CanonicalDecomposition> {
    GenericEngine::new(q)?.canonical_decomposition(d)
}

pub fn generic_variable(q: &Quiver, d: &[i64]) -> Result<GenericBasisElement> {
    GenericEngine::new(q)?.generic_variable(d)
}

pub fn enumerate_generic_basis(q: &Quiver, bound: &[i64]) -> Result<Vec<GenericBasisElement>> {
    GenericEngine::new(q)?.enumerate_generic_basis(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_decompositions() {
        let k = Quiver::kronecker();
        let dec = canonical_decomposition(&k, &[5, 3]).unwrap();
        let mut s = dec.summands.clone();
        s.sort();
        assert_eq!(s, vec![(vec![2, 1], 1), (vec![3, 2], 1)]);
        let dec = canonical_decomposition(&k, &[3, 3]).unwrap();
        assert_eq!(dec.delta_multiplicity, 3);
        assert!(dec.summands.is_empty());
    }

    #[test]
    fn zero_vector_gives_one() {
        let k = Quiver::kronecker();
        let x = generic_variable(&k, &[0, 0]).unwrap();
        assert_eq!(x.value, LaurentPolynomial::one(&[1, 2]));
        assert_eq!(x.kind, BasisKind::ClusterMonomial);
    }

    #[test]
    fn kronecker_negative_coordinate() {
        let k = Quiver::kronecker();
        let x = generic_variable(&k, &[-1, 2]).unwrap();
        let s2 = LaurentPolynomial::parse(&[1, 2], "(1 + u1^2)/u2").unwrap();
        let u1 = LaurentPolynomial::variable(&[1, 2], 0);
        assert_eq!(x.value, &u1 * &(&s2 * &s2));
        assert_eq!(x.kind, BasisKind::ClusterMonomial);
    }

    #[test]
    fn kronecker_delta_powers() {
        let k = Quiver::kronecker();
        let z = LaurentPolynomial::parse(&[1, 2], "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
        let mut engine = GenericEngine::new(&k).unwrap();
        for n in 1..=3usize {
            let x = engine.generic_variable(&[n as i64, n as i64]).unwrap();
            assert_eq!(x.value, z.pow(n as u32));
            assert_eq!(x.kind, BasisKind::ZPowerTimesRigidRegular { n, regular: vec![] });
        }
    }

    #[test]
    fn a21_delta_plus_quasi_simple() {
        let qv = Quiver::affine_a(2, 1).unwrap();
        let dec = canonical_decomposition(&qv, &[1, 2, 1]).unwrap();
        assert_eq!(dec.delta_multiplicity, 1);
        assert_eq!(dec.summands, vec![(vec![0, 1, 0], 1)]);
        let x = generic_variable(&qv, &[1, 2, 1]).unwrap();
        assert_eq!(
            x.kind,
            BasisKind::ZPowerTimesRigidRegular { n: 1, regular: vec![vec![0, 1, 0]] }
        );
        for i in 0..3 {
            let mut a = vec![0; 3];
            a[i] = 1;
            let dec = canonical_decomposition(&qv, &a).unwrap();
            assert_eq!(dec.summands, vec![(a, 1)]);
        }
    }
}

