//! A deterministic property suite covering every module, run by the
//! `verify` command. Each check returns a short summary or the first
//! counterexample it meets.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ccmap::{cc_map, cc_map_module, linear_independence, verify_denominator_theorem};
use crate::cluster::{check_exchange, explore, Seed, Substitution};
use crate::corpus::{corpus_quivers, indecomposables, Component};
use crate::generic::{BasisKind, GenericEngine};
use crate::grassmannian::{counting_polynomials, euler_characteristic_table, thin_subrepresentation_exists};
use crate::kronecker::{
    base_change_matrix, chebyshev_second, is_nonnegative, is_unipotent, kronecker_basis_element, matrix_product,
    KroneckerFamily,
};
use crate::laurent::LaurentPolynomial;
use crate::linalg::{modp, q, RationalMatrix};
use crate::quiver::{boxed_vectors, reflection_class, Quiver};
use crate::reflect::{bgp_reflect, extended_reflect, generic_transport, verify_reflection_compatibility, ReflectionContext};
use crate::rep::{ext1_dimension, hom_dimension, Representation};
use crate::tubes::{
    check_difference_property, default_homogeneous, exceptional_tubes, homogeneous_regular, homogeneous_tube_module,
    tube_characters, tube_module, Lambda,
};

pub type Outcome = std::result::Result<String, String>;

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub module: &'static str,
    pub name: &'static str,
    pub outcome: Outcome,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.outcome.is_ok()
    }
}

pub const MODULES: [&str; 9] = [
    "exact-algebra",
    "quiver-core",
    "representations",
    "cc-map",
    "affine-ar",
    "generic-basis",
    "cluster-engine",
    "reflections",
    "kronecker-bases",
];

type Check = (&'static str, &'static str, fn() -> Outcome);

const CHECKS: &[Check] = &[
    ("exact-algebra", "ring axioms and canonical printing", ring_axioms),
    ("exact-algebra", "exact division inverts multiplication", exact_division),
    ("exact-algebra", "denominator vectors under monomial factors", monomial_denominators),
    ("exact-algebra", "rational rank equals rank modulo a large prime", rank_mod_p),
    ("quiver-core", "Coxeter transformation and Euler form", coxeter_and_euler),
    ("quiver-core", "delta is isotropic and Coxeter fixed", affine_delta),
    ("quiver-core", "reflections are involutions", involutions),
    ("quiver-core", "grading forms of affine A reflection classes", grading_forms),
    ("representations", "thin strategies agree", thin_strategies),
    ("representations", "hom minus ext is the Euler form", hom_minus_ext),
    ("representations", "nonempty Grassmannians have positive Euler characteristic", positive_chi),
    ("representations", "Schofield subrepresentations of delta modules", schofield),
    ("representations", "Grassmannian trichotomy", trichotomy),
    ("cc-map", "denominator theorem on the corpus", denominator_theorem),
    ("cc-map", "multiplicativity on direct sums", multiplicativity),
    ("cc-map", "almost split sequences in tubes", almost_split),
    ("cc-map", "exchange relations along mutation paths", exchange_relations),
    ("cc-map", "distinct dimension vectors are independent", independence),
    ("affine-ar", "homogeneous characters do not depend on lambda", lambda_independence),
    ("affine-ar", "difference property along each tube", difference_property),
    ("affine-ar", "defects of quasi-simples and corpus objects", defects),
    ("affine-ar", "mesh recursion matches direct characters", mesh_recursion),
    ("affine-ar", "X_{n delta} = z^n", powers_of_z),
    ("generic-basis", "generic variables multiply when extensions vanish", generic_multiplicativity),
    ("generic-basis", "rigid objects give their generic variables", rigid_generic),
    ("generic-basis", "generic variables do not depend on lambda", generic_lambda),
    ("generic-basis", "X_Mlambda^(2) = z^2 - 1", spanning_example),
    ("cluster-engine", "Laurent phenomenon and involutive mutation", laurent_phenomenon),
    ("cluster-engine", "denominators are rigid dimension vectors", cluster_denominators),
    ("cluster-engine", "finite type closes at the classical counts", finite_type),
    ("reflections", "reflections preserve tubes and transport dimensions", reflection_objects),
    ("reflections", "generic basis is transported by reflections", reflection_generic),
    ("reflections", "reflection substitutions invert", substitution_inverse),
    ("kronecker-bases", "z-power coefficients in the canonical basis", lambda_coefficients),
    ("kronecker-bases", "positive unipotent base changes with integral inverses", unipotent_base_changes),
    ("kronecker-bases", "C_n(z) is the character of M_lambda^(n)", chebyshev_characters),
    ("kronecker-bases", "the three bases share denominators", shared_denominators),
];

/// Run the checks of one module, or of all modules when `module` is `None`.
pub fn run(module: Option<&str>) -> Vec<CheckResult> {
    CHECKS
        .iter()
        .filter(|(m, _, _)| module.map_or(true, |x| x == *m))
        .map(|&(module, name, f)| {
            let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
            CheckResult { module, name, outcome }
        })
        .collect()
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn affine_a(r: usize, s: usize) -> Quiver {
    if r == 1 && s == 1 {
        Quiver::kronecker()
    } else {
        Quiver::affine_a(r, s).unwrap()
    }
}

fn small_affine() -> [Quiver; 3] {
    [affine_a(2, 1), affine_a(3, 1), affine_a(2, 2)]
}

fn test_quivers() -> Vec<Quiver> {
    vec![Quiver::kronecker(), affine_a(2, 1), affine_a(3, 1), affine_a(2, 2), Quiver::linear_a(3)]
}

const VARS: [u32; 3] = [1, 2, 3];

fn random_laurent(rng: &mut ChaCha8Rng, nonzero: bool) -> LaurentPolynomial {
    loop {
        let terms = (0..rng.gen_range(0..=4)).map(|_| {
            let e: Vec<i64> = (0..3).map(|_| rng.gen_range(-2..=2)).collect();
            (e, BigInt::from(rng.gen_range(-3..=3)))
        });
        let p = LaurentPolynomial::from_terms(&VARS, terms.collect::<Vec<_>>());
        if !nonzero || !p.is_zero() {
            return p;
        }
    }
}

fn thin_values(qv: &Quiver, rng: &mut ChaCha8Rng) -> Vec<num_rational::BigRational> {
    (0..qv.arrows().len()).map(|_| q(rng.gen_range(-3..=3))).collect()
}

fn basis_vector(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i)).collect()
}

// ---- exact algebra ----

fn ring_axioms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..60 {
        let (a, b, c) = (random_laurent(&mut rng, false), random_laurent(&mut rng, false), random_laurent(&mut rng, false));
        ensure(&(&a * &b) * &c == &a * &(&b * &c), || format!("associativity: {a}, {b}, {c}"))?;
        ensure(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), || format!("distributivity: {a}, {b}, {c}"))?;
        ensure(&a * &b == &b * &a, || format!("commutativity: {a}, {b}"))?;
        let back = lib(LaurentPolynomial::parse(&VARS, &a.to_canonical_string()))?;
        ensure(back == a, || format!("canonical string of {a}"))?;
    }
    Ok("60 triples".into())
}

fn exact_division() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..60 {
        let a = random_laurent(&mut rng, false);
        let b = random_laurent(&mut rng, true);
        ensure(lib((&a * &b).divide_exact(&b))? == a, || format!("({a})*({b}) / ({b})"))?;
    }
    Ok("60 pairs".into())
}

fn monomial_denominators() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..60 {
        let e: Vec<i64> = (0..3).map(|_| rng.gen_range(-3..=3)).collect();
        let m = LaurentPolynomial::monomial(&VARS, &e, BigInt::one());
        let g = random_laurent(&mut rng, true);
        let lhs = lib((&m * &g).denominator_vector())?;
        let rhs: Vec<i64> = lib(m.denominator_vector())?
            .iter()
            .zip(lib(g.denominator_vector())?)
            .map(|(x, y)| x + y)
            .collect();
        ensure(lhs == rhs, || format!("{m} * {g}"))?;
    }
    Ok("60 products".into())
}

fn rank_mod_p() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let p = 1_000_003u64;
    for _ in 0..60 {
        let rows = rng.gen_range(1..=4);
        let cols = rng.gen_range(1..=4);
        // Small entries keep every minor far below p.
        let v: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
        let red: Vec<Vec<u64>> = v.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
        let rank = RationalMatrix::from_i64(rows, cols, &v).rank();
        ensure(rank == modp::rank(&red, p), || format!("{v:?}"))?;
    }
    Ok("60 matrices".into())
}

// ---- quiver core ----

fn all_quivers() -> Vec<Quiver> {
    let mut out: Vec<Quiver> = corpus_quivers().into_iter().map(|c| c.quiver).collect();
    out.push(Quiver::new(vec![1, 2, 3, 4, 5], &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap());
    out.push(Quiver::new(vec![1, 2, 3], &[(1, 2), (1, 2), (1, 2), (2, 3)]).unwrap());
    out
}

fn coxeter_and_euler() -> Outcome {
    let qs = all_quivers();
    for qv in &qs {
        let n = qv.n();
        for a in 0..n {
            let ca = lib(qv.coxeter(&basis_vector(n, a)))?;
            for b in 0..n {
                let eb = basis_vector(n, b);
                ensure(qv.euler(&basis_vector(n, a), &eb) == -qv.euler(&eb, &ca), || {
                    format!("{:?}: a = {a}, b = {b}", qv.arrow_labels())
                })?;
            }
        }
    }
    Ok(format!("{} quivers", qs.len()))
}

fn affine_delta() -> Outcome {
    let mut count = 0;
    for qv in all_quivers() {
        let Ok(delta) = qv.delta() else { continue };
        let name = format!("{:?}", qv.arrow_labels());
        ensure(qv.tits(&delta) == 0, || format!("{name}: q(delta) != 0"))?;
        ensure(lib(qv.coxeter(&delta))? == delta, || format!("{name}: c(delta) != delta"))?;
        for v in boxed_vectors(&vec![2; qv.n()]) {
            let direct = qv.euler(&delta, &v);
            ensure(lib(qv.defect(&v))? == direct, || format!("{name}: defect of {v:?}"))?;
        }
        count += 1;
    }
    Ok(format!("{count} affine quivers"))
}

fn involutions() -> Outcome {
    for qv in all_quivers() {
        let n = qv.n();
        for i in 0..n {
            for d in boxed_vectors(&vec![3; n]) {
                let d: Vec<i64> = d.iter().map(|x| x - 1).collect();
                ensure(qv.sigma(i, &qv.sigma(i, &d)) == d, || format!("sigma_{i} on {d:?}"))?;
            }
            if qv.is_sink(i) || qv.is_source(i) {
                let back = lib(lib(qv.reflect(i))?.reflect(i))?;
                ensure(back == qv, || format!("{:?}: reflection at {i}", qv.arrow_labels()))?;
            }
        }
    }
    Ok("sigma and quiver reflections".into())
}

fn grading_forms() -> Outcome {
    let mut graded = 0;
    for total in 2..=6usize {
        for s in 1..=total / 2 {
            let base = affine_a(total - s, s);
            let eps = reflection_class(&base, 2 * base.n())
                .into_iter()
                .find_map(|x| x.grading_form().map(|e| (x, e)));
            let (x, eps) = eps.ok_or_else(|| format!("A~({},{s}): no graded orientation", total - s))?;
            let b = x.b_matrix();
            for i in 0..x.n() {
                let col: i64 = (0..x.n()).map(|j| eps[j] * b[j][i]).sum();
                ensure(col < 0, || format!("A~({},{s}): inequality {i} fails", total - s))?;
            }
            graded += 1;
        }
    }
    let cyc = lib(Quiver::new(vec![1, 2, 3], &[(1, 2), (1, 2), (2, 3), (2, 3), (3, 1), (3, 1)]))?;
    ensure(cyc.grading_form().is_none(), || "doubled 3-cycle reported gradable".into())?;
    Ok(format!("{graded} types graded, doubled 3-cycle infeasible"))
}

// ---- representations ----

fn thin_strategies() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut cases = 0;
    for qv in test_quivers() {
        for mask in boxed_vectors(&vec![1; qv.n()]) {
            let m = lib(Representation::thin(&qv, &mask, &thin_values(&qv, &mut rng)))?;
            let counted = lib(counting_polynomials(&m))?;
            for (e, chi) in lib(euler_characteristic_table(&m))? {
                ensure(counted[&e].eval(&BigInt::from(1)) == chi, || format!("{mask:?} at {e:?}"))?;
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} thin modules"))
}

fn hom_minus_ext() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for qv in test_quivers() {
        for _ in 0..8 {
            let a: Vec<usize> = (0..qv.n()).map(|_| rng.gen_range(0..=2)).collect();
            let b: Vec<usize> = (0..qv.n()).map(|_| rng.gen_range(0..=2)).collect();
            let m = Representation::random(&qv, &a, &mut rng);
            let x = Representation::random(&qv, &b, &mut rng);
            let h = lib(hom_dimension(&m, &x))? as i64;
            let e = lib(ext1_dimension(&m, &x))? as i64;
            ensure(h - e == qv.euler(&m.dim_vector(), &x.dim_vector()), || format!("{a:?}, {b:?}"))?;
        }
    }
    Ok("40 pairs".into())
}

fn positive_chi() -> Outcome {
    let mut tables = 0;
    for qv in test_quivers() {
        for entry in lib(indecomposables(&qv, 5))? {
            for (e, poly) in lib(counting_polynomials(entry.object.module()))? {
                let chi = poly.eval(&BigInt::from(1));
                let ok = if poly.degree().is_some() { chi > BigInt::zero() } else { chi.is_zero() };
                ensure(ok, || format!("{}: chi(Gr_{e:?}) = {chi}", entry.name))?;
            }
            tables += 1;
        }
    }
    Ok(format!("{tables} modules"))
}

fn schofield() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut witnessed = 0;
    for qv in small_affine() {
        let delta = lib(qv.delta())?;
        let mut engine = lib(GenericEngine::new(&qv))?;
        let mut modules = Vec::new();
        for k in 0..3 {
            modules.push(lib(engine.homogeneous_module(k))?);
        }
        for tube in lib(exceptional_tubes(&qv))? {
            for i in 0..tube.rank {
                modules.push(lib(tube_module(&qv, &tube, i, tube.rank))?);
            }
        }
        for _ in 0..8 {
            modules.push(lib(Representation::thin(&qv, &delta, &thin_values(&qv, &mut rng)))?);
        }
        for e in boxed_vectors(&delta) {
            let f: Vec<i64> = delta.iter().zip(&e).map(|(a, b)| a - b).collect();
            let x = lib(engine.generic_module(&e))?;
            let y = lib(engine.generic_module(&f))?;
            if lib(ext1_dimension(&x, &y))? != 0 {
                continue;
            }
            witnessed += 1;
            let eu: Vec<usize> = e.iter().map(|&v| v as usize).collect();
            for m in &modules {
                ensure(thin_subrepresentation_exists(m, &eu), || format!("{e:?} missing in {:?}", m.maps()))?;
            }
        }
    }
    Ok(format!("{witnessed} witnessed subdimension vectors"))
}

fn trichotomy() -> Outcome {
    let le = |a: &[i64], b: &[i64]| a.iter().zip(b).all(|(x, y)| x <= y);
    let mut seen = [0usize; 3];
    for qv in [affine_a(2, 1), affine_a(3, 1)] {
        let delta = lib(qv.delta())?;
        let ml = lib(default_homogeneous(&qv))?;
        for tube in lib(exceptional_tubes(&qv))? {
            for i in 0..tube.rank {
                let me = lib(tube_module(&qv, &tube, i, tube.rank))?;
                let e = tube.quasi_simple(i).to_vec();
                let qrad = tube.dims(i, tube.rank - 1);
                for v in boxed_vectors(&delta) {
                    let vu: Vec<usize> = v.iter().map(|&x| x as usize).collect();
                    if v == delta || !thin_subrepresentation_exists(&me, &vu) {
                        continue;
                    }
                    let case = if !le(&e, &v) {
                        0
                    } else if le(&v, &qrad) {
                        1
                    } else {
                        2
                    };
                    seen[case] += 1;
                    let nonempty = thin_subrepresentation_exists(&ml, &vu);
                    ensure(nonempty == (case != 1), || format!("{v:?} in M_E with E = {e:?}"))?;
                }
            }
        }
    }
    ensure(seen.iter().all(|&c| c > 0), || format!("cases seen {seen:?}"))?;
    Ok(format!("cases {seen:?}"))
}

// ---- CC map ----

fn denominator_theorem() -> Outcome {
    let mut count = 0;
    for cq in corpus_quivers() {
        for e in lib(indecomposables(&cq.quiver, 6))? {
            ensure(lib(verify_denominator_theorem(&e.object))?, || format!("{} {}", cq.name, e.name))?;
            count += 1;
        }
    }
    Ok(format!("{count} objects"))
}

fn multiplicativity() -> Outcome {
    let mut pairs = 0;
    for qv in test_quivers() {
        let all = lib(indecomposables(&qv, 4))?;
        let values: Vec<LaurentPolynomial> = all.iter().map(|e| cc_map(&e.object)).collect::<crate::Result<_>>().map_err(|e| e.to_string())?;
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate().skip(i).step_by(3) {
                let sum = lib(a.object.direct_sum(&b.object))?;
                ensure(lib(cc_map(&sum))? == &values[i] * &values[j], || format!("{} + {}", a.name, b.name))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs"))
}

fn almost_split() -> Outcome {
    let mut sequences = 0;
    for qv in small_affine() {
        let one = LaurentPolynomial::one(qv.labels());
        for tube in lib(exceptional_tubes(&qv))? {
            for j in 0..tube.rank {
                for n in 1..=3 {
                    let x = |i: usize, len: usize| lib(tube_module(&qv, &tube, i, len));
                    let m = x(j + 1, n)?;
                    let tau_m = x(j, n)?;
                    ensure(lib(qv.coxeter(&m.dim_vector()))? == tau_m.dim_vector(), || "tau".into())?;
                    let b = lib(x(j, n + 1)?.direct_sum(&x(j + 1, n - 1)?))?;
                    let lhs = &lib(cc_map_module(&m))? * &lib(cc_map_module(&tau_m))?;
                    ensure(lhs == &lib(cc_map_module(&b))? + &one, || format!("E_{}^({n})", j + 1))?;
                    sequences += 1;
                }
            }
        }
        let ml = lib(default_homogeneous(&qv))?;
        // The middle term has dimension 2(n + 1) delta at most.
        let top = if qv.n() == 3 { 2 } else { 1 };
        for n in 1..=top {
            let m = lib(homogeneous_tube_module(&ml, n))?;
            let b = lib(lib(homogeneous_tube_module(&ml, n + 1))?.direct_sum(&lib(homogeneous_tube_module(&ml, n - 1))?))?;
            let x = lib(cc_map_module(&m))?;
            ensure(&x * &x == &lib(cc_map_module(&b))? + &one, || format!("M_lambda^({n})"))?;
            sequences += 1;
        }
    }
    Ok(format!("{sequences} sequences"))
}

fn mutation_paths(n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..rng.gen_range(0..6)).map(|_| rng.gen_range(0..n)).collect())
        .collect()
}

fn exchange_relations() -> Outcome {
    let mut edges = 0;
    for qv in [Quiver::kronecker(), affine_a(2, 1), Quiver::linear_a(3), Quiver::d4()] {
        for path in mutation_paths(qv.n(), 12, 8) {
            let seed = lib(Seed::initial(&qv).mutate_sequence(&path))?;
            for k in 0..qv.n() {
                ensure(lib(check_exchange(&seed, k))?, || format!("{:?} after {path:?} at {k}", qv.arrow_labels()))?;
                edges += 1;
            }
        }
    }
    Ok(format!("{edges} exchanges"))
}

fn independence() -> Outcome {
    for qv in [Quiver::kronecker(), affine_a(2, 1)] {
        let mut engine = lib(GenericEngine::new(&qv))?;
        let mut values = Vec::new();
        for v in boxed_vectors(&vec![3; qv.n()]) {
            let d: Vec<i64> = v.iter().map(|x| x - 1).collect();
            values.push(lib(engine.generic_variable(&d))?.value);
        }
        ensure(lib(linear_independence(&values))?, || format!("{:?}", qv.arrow_labels()))?;
    }
    Ok("boxes [-1, 2] on Kronecker and A~(2,1)".into())
}

// ---- affine regular components ----

fn lambda_independence() -> Outcome {
    for qv in [Quiver::kronecker(), affine_a(2, 1), affine_a(3, 1)] {
        let mut values: Vec<Vec<LaurentPolynomial>> = Vec::new();
        for lambda in 2..=6 {
            let Ok(m) = homogeneous_regular(&qv, &Lambda::int(lambda)) else { continue };
            let mut row = Vec::new();
            for n in 1..=3 {
                row.push(lib(cc_map_module(&lib(homogeneous_tube_module(&m, n))?))?);
            }
            values.push(row);
        }
        ensure(values.len() >= 3, || "fewer than three homogeneous parameters".into())?;
        ensure(values.windows(2).all(|w| w[0] == w[1]), || format!("{:?}", qv.arrow_labels()))?;
        let z = &values[0][0];
        for n in 1..=3 {
            ensure(values[0][n - 1] == chebyshev_second(n).eval_laurent(z), || format!("C_{n}(z)"))?;
        }
    }
    Ok("three quivers, lengths 1 to 3".into())
}

fn difference_property() -> Outcome {
    let mut count = 0;
    for base in small_affine() {
        for qv in reflection_class(&base, 2) {
            for tube in lib(exceptional_tubes(&qv))? {
                for r in lib(check_difference_property(&qv, &tube))? {
                    ensure(r.holds && &r.x_me - &r.x_quotient == r.x_mlambda, || {
                        format!("{:?} at {:?}", qv.arrow_labels(), r.quasi_socle)
                    })?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} quasi-simples"))
}

fn defects() -> Outcome {
    for qv in small_affine().into_iter().chain([Quiver::kronecker()]) {
        for tube in lib(exceptional_tubes(&qv))? {
            for e in &tube.quasi_simple_dims {
                ensure(lib(qv.defect(e))? == 0, || format!("quasi-simple {e:?}"))?;
            }
        }
        for entry in lib(indecomposables(&qv, 8))? {
            let defect = lib(qv.defect(&entry.object.extended_dimension()))?;
            let ok = match entry.component {
                Component::Preprojective => defect < 0,
                Component::Preinjective => defect > 0,
                Component::Regular => defect == 0,
                _ => true,
            };
            ensure(ok, || format!("{}: defect {defect}", entry.name))?;
        }
    }
    Ok("four quivers".into())
}

fn mesh_recursion() -> Outcome {
    let mut count = 0;
    for qv in small_affine() {
        for tube in lib(exceptional_tubes(&qv))? {
            let table = lib(tube_characters(&qv, &tube, tube.rank + 1))?;
            for i in 0..tube.rank {
                for n in 1..=tube.rank + 1 {
                    let direct = lib(cc_map_module(&lib(tube_module(&qv, &tube, i, n))?))?;
                    ensure(table.get(i, n) == Some(&direct), || format!("E_{i}^({n})"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} characters"))
}

fn powers_of_z() -> Outcome {
    for qv in [Quiver::kronecker(), affine_a(2, 1)] {
        let delta = lib(qv.delta())?;
        let mut engine = lib(GenericEngine::new(&qv))?;
        let z = lib(cc_map_module(&lib(default_homogeneous(&qv))?))?;
        for n in 1..=3i64 {
            let d: Vec<i64> = delta.iter().map(|x| n * x).collect();
            ensure(lib(engine.generic_variable(&d))?.value == z.pow(n as u32), || format!("n = {n}"))?;
        }
    }
    Ok("n <= 3 on Kronecker and A~(2,1)".into())
}

// ---- generic variables ----

fn generic_multiplicativity() -> Outcome {
    let mut tested = 0;
    for qv in [Quiver::kronecker(), affine_a(2, 1), Quiver::linear_a(3)] {
        let mut engine = lib(GenericEngine::new(&qv))?;
        let vectors = boxed_vectors(&vec![2; qv.n()]);
        for a in vectors.iter().step_by(2) {
            for b in vectors.iter().step_by(3) {
                let x = lib(engine.generic_module(a))?;
                let y = lib(engine.generic_module(b))?;
                if lib(ext1_dimension(&x, &y))? != 0 || lib(ext1_dimension(&y, &x))? != 0 {
                    continue;
                }
                let sum: Vec<i64> = a.iter().zip(b).map(|(s, t)| s + t).collect();
                let lhs = &lib(engine.generic_variable(a))?.value * &lib(engine.generic_variable(b))?.value;
                ensure(lhs == lib(engine.generic_variable(&sum))?.value, || format!("{a:?} + {b:?}"))?;
                tested += 1;
            }
        }
    }
    Ok(format!("{tested} pairs"))
}

fn rigid_generic() -> Outcome {
    let mut count = 0;
    for cq in corpus_quivers() {
        let mut engine = lib(GenericEngine::new(&cq.quiver))?;
        let entries = lib(indecomposables(&cq.quiver, 8))?;
        let rigid: BTreeSet<Vec<i64>> =
            entries.iter().filter(|e| e.rigid).map(|e| e.object.extended_dimension()).collect();
        for e in entries.iter().filter(|e| e.rigid) {
            let d = e.object.extended_dimension();
            ensure(lib(engine.generic_variable(&d))?.value == lib(cc_map(&e.object))?, || {
                format!("{} {}", cq.name, e.name)
            })?;
            count += 1;
        }
        if engine.delta().is_some() && cq.quiver.n() <= 3 {
            for b in lib(engine.enumerate_generic_basis(&vec![2; cq.quiver.n()]))? {
                if matches!(b.kind, BasisKind::ZPowerTimesRigidRegular { n, .. } if n > 0) {
                    let d = lib(b.value.denominator_vector())?;
                    ensure(!rigid.contains(&d), || format!("{} {d:?}", cq.name))?;
                }
            }
        }
    }
    Ok(format!("{count} rigid objects"))
}

fn generic_lambda() -> Outcome {
    let qv = affine_a(2, 1);
    let mut a = lib(GenericEngine::new(&qv))?;
    let mut b = lib(GenericEngine::with_lambda_start(&qv, 11))?;
    for v in boxed_vectors(&[3, 3, 3]) {
        let d: Vec<i64> = v.iter().map(|x| x - 1).collect();
        ensure(lib(a.generic_variable(&d))?.value == lib(b.generic_variable(&d))?.value, || format!("{d:?}"))?;
    }
    Ok("box [-1, 2] on A~(2,1)".into())
}

fn spanning_example() -> Outcome {
    for qv in small_affine() {
        let mut engine = lib(GenericEngine::new(&qv))?;
        let ml = lib(engine.homogeneous_module(0))?;
        let x = lib(cc_map_module(&lib(homogeneous_tube_module(&ml, 2))?))?;
        let z = lib(engine.generic_variable(&lib(qv.delta())?))?.value;
        ensure(x == &z.pow(2) - &LaurentPolynomial::one(qv.labels()), || format!("{:?}", qv.arrow_labels()))?;
    }
    Ok("three quivers".into())
}

// ---- cluster algebra ----

fn laurent_phenomenon() -> Outcome {
    let mut seeds = 0;
    for qv in [Quiver::kronecker(), affine_a(2, 1), Quiver::linear_a(3), Quiver::d4()] {
        for path in mutation_paths(qv.n(), 12, 9) {
            let seed = lib(Seed::initial(&qv).mutate_sequence(&path))?;
            for x in seed.cluster() {
                ensure(x.denominator_vector().is_ok(), || format!("{x}"))?;
            }
            for k in 0..qv.n() {
                let back = lib(lib(seed.mutate(k))?.mutate(k))?;
                ensure(back.key() == seed.key(), || format!("{path:?} then {k} twice"))?;
            }
            seeds += 1;
        }
    }
    Ok(format!("{seeds} seeds"))
}

fn cluster_denominators() -> Outcome {
    let mut count = 0;
    for qv in [Quiver::linear_a(3), Quiver::d4(), affine_a(2, 1)] {
        let rigid: BTreeSet<Vec<i64>> = lib(indecomposables(&qv, 8))?
            .into_iter()
            .filter(|e| e.rigid)
            .map(|e| e.object.extended_dimension())
            .collect();
        for x in lib(explore(&qv, 4))?.variables.values() {
            let d = lib(x.denominator_vector())?;
            if d.iter().sum::<i64>() <= 8 {
                ensure(rigid.contains(&d), || format!("{d:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} variables"))
}

fn finite_type() -> Outcome {
    for (name, qv, expect) in [("A2", Quiver::linear_a(2), 5), ("A3", Quiver::linear_a(3), 9), ("D4", Quiver::d4(), 16)] {
        let e = lib(explore(&qv, 6))?;
        ensure(e.closed && e.variables.len() == expect, || {
            format!("{name}: {} variables, closed = {}", e.variables.len(), e.closed)
        })?;
    }
    ensure(!lib(explore(&Quiver::kronecker(), 6))?.closed, || "Kronecker closed".into())?;
    Ok("A2 5, A3 9, D4 16; Kronecker open".into())
}

// ---- reflections ----

fn reflection_objects() -> Outcome {
    let mut count = 0;
    for qv in [affine_a(2, 1), affine_a(3, 1), Quiver::kronecker()] {
        let ranks = |x: &Quiver| -> std::result::Result<Vec<usize>, String> {
            let mut r: Vec<usize> = lib(exceptional_tubes(x))?.iter().map(|t| t.rank).collect();
            r.sort();
            Ok(r)
        };
        for i in qv.sinks() {
            let ctx = lib(ReflectionContext::sink(&qv, i))?;
            ensure(ranks(&qv)? == ranks(ctx.target())?, || "tube ranks".into())?;
            for e in lib(indecomposables(&qv, 6))? {
                let image = lib(extended_reflect(&ctx, &e.object))?;
                if e.rigid {
                    ensure(image.extended_dimension() == ctx.sigma(&e.object.extended_dimension()), || {
                        format!("dimension of {}", e.name)
                    })?;
                }
                if e.component == Component::Regular {
                    let m = lib(bgp_reflect(&ctx, e.object.module()))?;
                    ensure(lib(ctx.target().defect(&m.dim_vector()))? == 0, || format!("{} leaves the tubes", e.name))?;
                }
                ensure(lib(verify_reflection_compatibility(&ctx, &e.object))?, || e.name.clone())?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} object/sink pairs"))
}

fn reflection_generic() -> Outcome {
    let mut count = 0;
    for qv in [affine_a(2, 1), Quiver::kronecker()] {
        for i in qv.sinks() {
            let ctx = lib(ReflectionContext::sink(&qv, i))?;
            let mut before = lib(GenericEngine::new(&qv))?;
            let mut after = lib(GenericEngine::new(ctx.target()))?;
            for v in boxed_vectors(&vec![3; qv.n()]) {
                let d: Vec<i64> = v.iter().map(|x| x - 1).collect();
                ensure(lib(generic_transport(&ctx, &mut before, &mut after, &d))?, || format!("{d:?}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} vectors"))
}

fn substitution_inverse() -> Outcome {
    for qv in [Quiver::kronecker(), affine_a(2, 1), Quiver::linear_a(3)] {
        for path in mutation_paths(qv.n(), 6, 10) {
            let seed = lib(Seed::initial(&qv).mutate_sequence(&path))?;
            for i in (0..qv.n()).filter(|&i| qv.is_sink(i) || qv.is_source(i)) {
                let phi = lib(Substitution::reflection(&qv, i))?;
                let inv = lib(phi.inverse())?;
                for x in seed.cluster() {
                    ensure(&lib(inv.apply(&lib(phi.apply(x))?))? == x, || format!("{x}"))?;
                }
            }
        }
    }
    Ok("three quivers".into())
}

// ---- Kronecker bases ----

fn lambda_coefficients() -> Outcome {
    let m = base_change_matrix(KroneckerFamily::P, KroneckerFamily::Z, 12);
    for n in 0..=12usize {
        for i in 0..=n {
            let lam = &m[i][n];
            let ok = if (n - i) % 2 == 1 {
                lam.is_zero()
            } else {
                *lam > BigInt::zero() && (i < 2 || lam < &m[i - 2][n])
            };
            ensure(ok, || format!("lambda_{i},{n} = {lam}"))?;
        }
    }
    Ok("n <= 12".into())
}

fn unipotent_base_changes() -> Outcome {
    for fam in [KroneckerFamily::P, KroneckerFamily::C] {
        let m = base_change_matrix(fam, KroneckerFamily::Z, 10);
        let inv = base_change_matrix(KroneckerFamily::Z, fam, 10);
        ensure(is_unipotent(&m) && is_nonnegative(&m), || format!("{fam} -> z"))?;
        ensure(is_unipotent(&inv), || format!("z -> {fam}"))?;
        let id = matrix_product(&m, &inv);
        let ok = id.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| *x == BigInt::from(i64::from(i == j)))
        });
        ensure(ok, || format!("{fam}: product is not the identity"))?;
    }
    Ok("P and C, N = 10".into())
}

fn chebyshev_characters() -> Outcome {
    let ml = lib(default_homogeneous(&Quiver::kronecker()))?;
    for n in 1..=3 {
        let x = lib(cc_map_module(&lib(homogeneous_tube_module(&ml, n))?))?;
        ensure(x == kronecker_basis_element(KroneckerFamily::C, n), || format!("n = {n}"))?;
    }
    Ok("n <= 3".into())
}

fn shared_denominators() -> Outcome {
    for n in 0..=6usize {
        for fam in [KroneckerFamily::Z, KroneckerFamily::P, KroneckerFamily::C] {
            let d = lib(kronecker_basis_element(fam, n).denominator_vector())?;
            ensure(d == vec![n as i64, n as i64], || format!("{fam}_{n}: {d:?}"))?;
        }
    }
    Ok("n <= 6".into())
}
