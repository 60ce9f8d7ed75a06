//! Seeds, mutation, breadth-first enumeration of cluster variables and the
//! substitutions attached to reflections at sinks and sources.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::ccmap::{cc_map, DecoratedObject};
use crate::error::{Error, Result};
use crate::generic::GenericEngine;
use crate::laurent::LaurentPolynomial;
use crate::quiver::Quiver;

/// Matrix mutation of the quiver at `k`. Sinks and sources are reflected,
/// which keeps arrow indices stable.
pub fn mutate_quiver(q: &Quiver, k: usize) -> Result<Quiver> {
    if k >= q.n() {
        return Err(Error::Dimension(format!("vertex index {k} out of range")));
    }
    if q.is_sink(k) || q.is_source(k) {
        return q.reflect(k);
    }
    let b = q.b_matrix();
    let n = q.n();
    let mut nb = b.clone();
    for i in 0..n {
        for j in 0..n {
            nb[i][j] = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + (b[i][k].abs() * b[k][j] + b[i][k] * b[k][j].abs()) / 2
            };
        }
    }
    let mut arrows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for _ in 0..nb[i][j].max(0) {
                arrows.push((q.label(i), q.label(j)));
            }
        }
    }
    Quiver::new(q.labels().to_vec(), &arrows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    quiver: Quiver,
    cluster: Vec<LaurentPolynomial>,
}

impl Seed {
    pub fn initial(q: &Quiver) -> Self {
        let vars = q.labels();
        Seed {
            quiver: q.clone(),
            cluster: (0..q.n()).map(|i| LaurentPolynomial::variable(vars, i)).collect(),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn cluster(&self) -> &[LaurentPolynomial] {
        &self.cluster
    }

    /// The two monomials of the exchange relation at `k`.
    pub fn exchange_monomials(&self, k: usize) -> (LaurentPolynomial, LaurentPolynomial) {
        let b = self.quiver.b_matrix();
        let vars = self.quiver.labels();
        let mut into = LaurentPolynomial::one(vars);
        let mut out = LaurentPolynomial::one(vars);
        for (j, x) in self.cluster.iter().enumerate() {
            let m = b[j][k];
            if m > 0 {
                into = &into * &x.pow(m as u32);
            } else if m < 0 {
                out = &out * &x.pow((-m) as u32);
            }
        }
        (into, out)
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        let quiver = mutate_quiver(&self.quiver, k)?;
        let (a, b) = self.exchange_monomials(k);
        let new = (&a + &b).divide_exact(&self.cluster[k])?;
        let mut cluster = self.cluster.clone();
        cluster[k] = new;
        Ok(Seed { quiver, cluster })
    }

    pub fn mutate_sequence(&self, seq: &[usize]) -> Result<Seed> {
        seq.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }

    /// Unordered key of the cluster.
    pub fn key(&self) -> Vec<String> {
        let mut k: Vec<String> = self.cluster.iter().map(|x| x.to_canonical_string()).collect();
        k.sort();
        k
    }
}

#[derive(Clone, Debug)]
pub struct Exploration {
    pub variables: BTreeMap<String, LaurentPolynomial>,
    pub clusters: usize,
    /// No mutation of a seen seed produces a new cluster.
    pub closed: bool,
}

/// Breadth-first search over seeds up to `depth` mutations from the initial one.
pub fn explore(q: &Quiver, depth: usize) -> Result<Exploration> {
    let start = Seed::initial(q);
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut variables = BTreeMap::new();
    seen.insert(start.key());
    for x in start.cluster() {
        variables.insert(x.to_canonical_string(), x.clone());
    }
    let mut frontier = vec![start];
    let n = q.n();
    for level in 0..=depth {
        let children: Vec<Result<Vec<Seed>>> = frontier
            .par_iter()
            .map(|s| (0..n).map(|k| s.mutate(k)).collect())
            .collect();
        let mut next = Vec::new();
        for c in children {
            for s in c? {
                if seen.contains(&s.key()) {
                    continue;
                }
                if level == depth {
                    return Ok(Exploration {
                        variables,
                        clusters: seen.len(),
                        closed: false,
                    });
                }
                seen.insert(s.key());
                for x in s.cluster() {
                    variables
                        .entry(x.to_canonical_string())
                        .or_insert_with(|| x.clone());
                }
                next.push(s);
            }
        }
        if next.is_empty() && level < depth {
            return Ok(Exploration {
                variables,
                clusters: seen.len(),
                closed: true,
            });
        }
        frontier = next;
    }
    Ok(Exploration {
        variables,
        clusters: seen.len(),
        closed: true,
    })
}

pub fn enumerate_cluster_variables(q: &Quiver, depth: usize) -> Result<Vec<LaurentPolynomial>> {
    Ok(explore(q, depth)?.variables.into_values().collect())
}

#[derive(Clone, Debug)]
pub struct RigidCorrespondence {
    pub from_mutation: BTreeSet<String>,
    pub from_rigid: BTreeSet<String>,
    pub closed: bool,
}

impl RigidCorrespondence {
    pub fn equal(&self) -> bool {
        self.from_mutation == self.from_rigid
    }

    pub fn missing_from_mutation(&self) -> Vec<&String> {
        self.from_rigid.difference(&self.from_mutation).collect()
    }

    pub fn extra_from_mutation(&self) -> Vec<&String> {
        self.from_mutation.difference(&self.from_rigid).collect()
    }
}

/// Compare the cluster variables with denominator vector in `[-1, bound]`
/// with the characters of indecomposable rigid objects of the same range.
pub fn rigid_correspondence_check(
    q: &Quiver,
    bound: &[i64],
    depth: usize,
) -> Result<RigidCorrespondence> {
    if bound.len() != q.n() {
        return Err(Error::Dimension("box length".into()));
    }
    let exp = explore(q, depth)?;
    let mut from_mutation = BTreeSet::new();
    for (k, x) in &exp.variables {
        let d = x.denominator_vector()?;
        if d.iter().zip(bound).all(|(a, b)| *a >= -1 && a <= b) {
            from_mutation.insert(k.clone());
        }
    }
    let mut from_rigid = BTreeSet::new();
    for i in 0..q.n() {
        from_rigid.insert(cc_map(&DecoratedObject::shifted_projective(q, i))?.to_canonical_string());
    }
    let mut engine = GenericEngine::new(q)?;
    for r in engine.real_schur_roots_up_to(bound)? {
        let m = engine.rigid_witness(&r)?;
        from_rigid.insert(cc_map(&DecoratedObject::from_module(m))?.to_canonical_string());
    }
    Ok(RigidCorrespondence {
        from_mutation,
        from_rigid,
        closed: exp.closed,
    })
}

/// A ring map on Laurent polynomials given by the images of the variables:
/// `u_j -> v_j` for `j != i` and `u_i -> (prod_{j - i} v_j + 1) / v_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    source: Quiver,
    target: Quiver,
    vertex: usize,
    numerator: LaurentPolynomial,
}

impl Substitution {
    /// The substitution for the reflection of `q` at a sink or source `i`.
    pub fn reflection(q: &Quiver, i: usize) -> Result<Self> {
        let target = q.reflect(i)?;
        let vars = q.labels();
        let mut prod = LaurentPolynomial::one(vars);
        for &(s, t) in q.arrows() {
            if s == i {
                prod = &prod * &LaurentPolynomial::variable(vars, t);
            } else if t == i {
                prod = &prod * &LaurentPolynomial::variable(vars, s);
            }
        }
        let numerator = &prod + &LaurentPolynomial::one(vars);
        Ok(Substitution {
            source: q.clone(),
            target,
            vertex: i,
            numerator,
        })
    }

    pub fn source(&self) -> &Quiver {
        &self.source
    }

    pub fn target(&self) -> &Quiver {
        &self.target
    }

    pub fn vertex(&self) -> usize {
        self.vertex
    }

    /// The image of `u_j`.
    pub fn image(&self, j: usize) -> LaurentPolynomial {
        let vars = self.source.labels();
        if j == self.vertex {
            let mut e = vec![0; vars.len()];
            e[j] = -1;
            self.numerator.shift(&e)
        } else {
            LaurentPolynomial::variable(vars, j)
        }
    }

    /// Substitute; fails with `NotDivisible` if the result is not Laurent.
    pub fn apply(&self, f: &LaurentPolynomial) -> Result<LaurentPolynomial> {
        let vars = self.source.labels();
        if f.vars() != vars {
            return Err(Error::VariableMismatch);
        }
        let i = self.vertex;
        let Some(lo) = f.min_exponents() else {
            return Ok(f.clone());
        };
        // u_i^{e} -> numerator^{e} v_i^{-e}; negative powers of the
        // numerator are cleared by dividing by numerator^m at the end.
        let m = (-lo[i]).max(0);
        let mut result = LaurentPolynomial::zero(vars);
        let mut powers: Vec<LaurentPolynomial> = vec![LaurentPolynomial::one(vars)];
        for (e, c) in f.terms() {
            let k = (e[i] + m) as usize;
            while powers.len() <= k {
                let next = &powers[powers.len() - 1] * &self.numerator;
                powers.push(next);
            }
            let mut shift = e.clone();
            shift[i] = -e[i];
            result = &result + &powers[k].shift(&shift).scale(c);
        }
        if m == 0 {
            return Ok(result);
        }
        result.divide_exact(&self.numerator.pow(m as u32))
    }

    /// The substitution for the reflected quiver at the same vertex.
    pub fn inverse(&self) -> Result<Substitution> {
        Substitution::reflection(&self.target, self.vertex)
    }
}

/// The isomorphism attached to the reflection of `q` at the sink `i`.
pub fn canonical_isomorphism(q: &Quiver, i: usize) -> Result<Substitution> {
    if i >= q.n() || !q.is_sink(i) {
        return Err(Error::NotSink(q.labels().get(i).copied().unwrap_or(i as u32)));
    }
    Substitution::reflection(q, i)
}

/// `x_k x_k' = ` the sum of the exchange monomials.
pub fn check_exchange(seed: &Seed, k: usize) -> Result<bool> {
    let (a, b) = seed.exchange_monomials(k);
    let next = seed.mutate(k)?;
    Ok(&seed.cluster()[k] * &next.cluster()[k] == &a + &b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(vars: &[u32], s: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(vars, s).unwrap()
    }

    #[test]
    fn kronecker_mutation() {
        let k = Quiver::kronecker();
        let s = Seed::initial(&k).mutate(0).unwrap();
        assert_eq!(s.cluster()[0], lp(&[1, 2], "(u2^2 + 1)/u1"));
        assert_eq!(Seed::initial(&k).mutate_sequence(&[0, 0]).unwrap(), Seed::initial(&k));
    }

    #[test]
    fn a21_mutation_at_sink() {
        let q = Quiver::affine_a(2, 1).unwrap();
        let s = Seed::initial(&q).mutate(2).unwrap();
        assert_eq!(s.quiver(), &q.reflect(2).unwrap());
        assert_eq!(s.cluster()[2], lp(&[1, 2, 3], "(u1*u2 + 1)/u3"));
        // A vertex that is neither sink nor source.
        let t = Seed::initial(&q).mutate(1).unwrap();
        assert_eq!(t.mutate(1).unwrap().cluster(), Seed::initial(&q).cluster());
        assert_eq!(t.quiver().b_matrix()[0][2], 2);
    }

    #[test]
    fn finite_type_counts() {
        let e = explore(&Quiver::linear_a(2), 6).unwrap();
        assert!(e.closed);
        assert_eq!(e.variables.len(), 5);
        assert_eq!(explore(&Quiver::linear_a(3), 8).unwrap().variables.len(), 9);
        assert_eq!(explore(&Quiver::d4(), 10).unwrap().variables.len(), 16);
        assert_eq!(explore(&Quiver::linear_a(3), 0).unwrap().variables.len(), 3);
    }

    #[test]
    fn kronecker_is_not_closed() {
        let e = explore(&Quiver::kronecker(), 3).unwrap();
        assert!(!e.closed);
        assert_eq!(e.variables.len(), 8);
    }

    #[test]
    fn substitution_examples() {
        let q = Quiver::affine_a(2, 1).unwrap();
        let vars = [1, 2, 3];
        let phi = canonical_isomorphism(&q, 2).unwrap();
        let u3 = LaurentPolynomial::variable(&vars, 2);
        assert_eq!(phi.apply(&u3).unwrap(), lp(&vars, "(u1*u2 + 1)/u3"));
        let u1 = LaurentPolynomial::variable(&vars, 0);
        assert_eq!(phi.apply(&u1).unwrap(), u1);
        let back = phi.inverse().unwrap();
        for x in enumerate_cluster_variables(&q, 3).unwrap() {
            assert_eq!(back.apply(&phi.apply(&x).unwrap()).unwrap(), x);
        }
        let f = lp(&vars, "(u1 + u3^2)/(u2*u3^2)");
        assert!(matches!(phi.apply(&f), Err(Error::NotDivisible)));
        assert!(canonical_isomorphism(&q, 0).is_err());
    }
}
