//! The Caldero-Chapoton map on decorated objects.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmannian::euler_characteristic_table;
use crate::laurent::LaurentPolynomial;
use crate::linalg::{fourier_motzkin, q};
use crate::quiver::Quiver;
use crate::rep::{ext1_dimension, rank_with_fallback, Representation};

/// A module together with multiplicities of the shifted projectives `P_i[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedObject {
    module: Representation,
    shifts: Vec<usize>,
}

impl DecoratedObject {
    pub fn new(module: Representation, shifts: Vec<usize>) -> Result<Self> {
        if shifts.len() != module.quiver().n() {
            return Err(Error::Dimension("one shift per vertex is required".into()));
        }
        Ok(DecoratedObject { module, shifts })
    }

    pub fn from_module(module: Representation) -> Self {
        let n = module.quiver().n();
        DecoratedObject {
            module,
            shifts: vec![0; n],
        }
    }

    pub fn shifted_projective(quiver: &Quiver, i: usize) -> Self {
        let mut shifts = vec![0; quiver.n()];
        shifts[i] = 1;
        DecoratedObject {
            module: Representation::zero(quiver),
            shifts,
        }
    }

    pub fn quiver(&self) -> &Quiver {
        self.module.quiver()
    }

    pub fn module(&self) -> &Representation {
        &self.module
    }

    pub fn shifts(&self) -> &[usize] {
        &self.shifts
    }

    /// `dim M - sum shifts_i alpha_i`.
    pub fn extended_dimension(&self) -> Vec<i64> {
        self.module
            .dim_vector()
            .iter()
            .zip(&self.shifts)
            .map(|(d, s)| d - *s as i64)
            .collect()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        Ok(DecoratedObject {
            module: self.module.direct_sum(&other.module)?,
            shifts: self.shifts.iter().zip(&other.shifts).map(|(a, b)| a + b).collect(),
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

/// `X_M = u^shifts * sum_e chi(Gr_e M) prod_i u_i^{-<e, a_i> - <a_i, d - e>}`.
pub fn cc_map(obj: &DecoratedObject) -> Result<LaurentPolynomial> {
    let quiver = obj.quiver();
    if !quiver.is_acyclic() {
        return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
    }
    let n = quiver.n();
    let d = obj.module.dim_vector();
    let table = euler_characteristic_table(&obj.module)?;
    let units: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    let terms = table.into_iter().filter(|(_, c)| !c.is_zero()).map(|(e, c)| {
        let e: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        let rest: Vec<i64> = d.iter().zip(&e).map(|(a, b)| a - b).collect();
        let exps: Vec<i64> = (0..n)
            .map(|i| {
                -quiver.euler(&e, &units[i]) - quiver.euler(&units[i], &rest)
                    + obj.shifts[i] as i64
            })
            .collect();
        (exps, c)
    });
    Ok(LaurentPolynomial::from_terms(quiver.labels(), terms))
}

pub fn cc_map_module(m: &Representation) -> Result<LaurentPolynomial> {
    cc_map(&DecoratedObject::from_module(m.clone()))
}

/// Does the denominator vector of `X_M` equal the extended dimension vector?
pub fn verify_denominator_theorem(obj: &DecoratedObject) -> Result<bool> {
    Ok(cc_map(obj)?.denominator_vector()? == obj.extended_dimension())
}

/// `Ext^1(M, M) = 0` and the module vanishes at every decorated vertex.
pub fn is_rigid(obj: &DecoratedObject) -> Result<bool> {
    let m = &obj.module;
    if obj
        .shifts
        .iter()
        .zip(m.dims())
        .any(|(&s, &d)| s > 0 && d > 0)
    {
        return Ok(false);
    }
    Ok(ext1_dimension(m, m)? == 0)
}

/// Apex and generators of the cone that contains the support of `X_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportCone {
    pub apex: Vec<i64>,
    /// The vectors `-B alpha_i`.
    pub generators: Vec<Vec<i64>>,
}

impl SupportCone {
    pub fn for_object(obj: &DecoratedObject) -> Result<Self> {
        let quiver = obj.quiver();
        let n = quiver.n();
        let d = obj.module.dim_vector();
        let mut p_dims = vec![0i64; n];
        for (j, &s) in obj.shifts.iter().enumerate() {
            if s > 0 {
                for (x, y) in p_dims.iter_mut().zip(quiver.projective_dims(j)?) {
                    *x += s as i64 * y;
                }
            }
        }
        let apex = (0..n)
            .map(|i| {
                let a = unit(n, i);
                -quiver.euler(&a, &d) + quiver.euler(&p_dims, &a)
            })
            .collect();
        let b = quiver.b_matrix();
        let generators = (0..n)
            .map(|i| (0..n).map(|r| -b[r][i]).collect())
            .collect();
        Ok(SupportCone { apex, generators })
    }

    /// Is `v - apex` a nonnegative rational combination of the generators?
    pub fn contains(&self, v: &[i64]) -> bool {
        let n = self.generators.len();
        let w: Vec<i64> = v.iter().zip(&self.apex).map(|(a, b)| a - b).collect();
        let mut a: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs = Vec::new();
        for j in 0..n {
            let mut row = vec![BigRational::zero(); n];
            row[j] = q(-1);
            a.push(row);
            rhs.push(BigRational::zero());
        }
        for (r, &wr) in w.iter().enumerate() {
            let row: Vec<BigRational> = self.generators.iter().map(|g| q(g[r])).collect();
            a.push(row.iter().map(|x| -x.clone()).collect());
            rhs.push(q(-wr));
            a.push(row);
            rhs.push(q(wr));
        }
        fourier_motzkin(&a, &rhs).is_some()
    }
}

/// The apex coefficient of `X_M` is 1 and the whole support lies in the cone.
pub fn support_cone_check(obj: &DecoratedObject) -> Result<bool> {
    let quiver = obj.quiver();
    let mut pairs = BTreeSet::new();
    for &(s, t) in quiver.arrows() {
        if !pairs.insert((s.min(t), s.max(t))) {
            return Err(Error::Unsupported("quiver has multiple arrows".into()));
        }
    }
    let cone = SupportCone::for_object(obj)?;
    let x = cc_map(obj)?;
    if x.coeff(&cone.apex) != BigInt::one() {
        return Ok(false);
    }
    Ok(x.terms().keys().all(|e| cone.contains(e)))
}

/// Exact linear independence over Q of a list of Laurent polynomials.
pub fn linear_independence(fs: &[LaurentPolynomial]) -> Result<bool> {
    let Some(first) = fs.first() else {
        return Ok(true);
    };
    if fs.iter().any(|f| f.vars() != first.vars()) {
        return Err(Error::VariableMismatch);
    }
    let support: Vec<&Vec<i64>> = fs
        .iter()
        .flat_map(|f| f.terms().keys())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if support.len() < fs.len() {
        return Ok(false);
    }
    let rows: Vec<Vec<BigRational>> = fs
        .iter()
        .map(|f| {
            support
                .iter()
                .map(|e| BigRational::from_integer(f.coeff(e)))
                .collect()
        })
        .collect();
    Ok(rank_with_fallback(&rows) == fs.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_at_a_sink() {
        // 2 -> 1 twice: X_{S_1} = (1 + u_2^2) / u_1.
        let k = Quiver::new(vec![1, 2], &[(2, 1), (2, 1)]).unwrap();
        let x = cc_map_module(&Representation::simple(&k, 0)).unwrap();
        let expect = LaurentPolynomial::parse(&[1, 2], "(1 + u2^2)/u1").unwrap();
        assert_eq!(x, expect);
    }

    #[test]
    fn shifted_projective_is_the_initial_variable() {
        let k = Quiver::new(vec![1, 2], &[(2, 1), (2, 1)]).unwrap();
        let x = cc_map(&DecoratedObject::shifted_projective(&k, 1)).unwrap();
        assert_eq!(x, LaurentPolynomial::variable(&[1, 2], 1));
        assert_eq!(
            cc_map_module(&Representation::zero(&k)).unwrap(),
            LaurentPolynomial::one(&[1, 2])
        );
    }

    #[test]
    fn independence_examples() {
        let vars = [1, 2];
        let z = LaurentPolynomial::parse(&vars, "(1 + u1^2 + u2^2)/(u1*u2)").unwrap();
        let one = LaurentPolynomial::one(&vars);
        assert!(linear_independence(&[one.clone(), z.clone(), &z * &z]).unwrap());
        assert!(!linear_independence(&[z.clone(), z.clone()]).unwrap());
        assert!(linear_independence(&[z]).unwrap());
    }
}
