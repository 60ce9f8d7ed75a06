//! Euler characteristics of quiver Grassmannians.
//!
//! Thin representations are handled directly: a subrepresentation of a
//! thin module is determined by its dimension vector, and it exists iff the
//! support is closed under the nonzero arrows.
//!
//! Everything else is done by counting `F_p`-points of `Gr_e(M)` for enough
//! primes, interpolating the counting polynomial and evaluating it at 1.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{is_prime, modp};
use crate::poly::{interpolate_integer_polynomial, UniPoly};
use crate::quiver::Quiver;
use crate::rep::{hom_dimension, Field, Representation};

/// All `e` with `0 <= e <= d`, in lexicographic order.
pub fn sub_dimension_vectors(d: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in d {
        let mut next = Vec::with_capacity(out.len() * (b + 1));
        for v in &out {
            for x in 0..=b {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// For a thin representation: is there a subrepresentation of dimension `e`?
pub fn thin_subrepresentation_exists(m: &Representation, e: &[usize]) -> bool {
    debug_assert!(m.is_thin());
    if e.iter().zip(m.dims()).any(|(a, b)| a > b) {
        return false;
    }
    m.quiver().arrows().iter().enumerate().all(|(a, &(s, t))| {
        let nonzero = m.dims()[s] == 1 && m.dims()[t] == 1 && !m.map(a).get(0, 0).is_zero();
        !(nonzero && e[s] == 1 && e[t] == 0)
    })
}

/// `chi(Gr_e(M))`.
pub fn euler_characteristic(m: &Representation, e: &[usize]) -> Result<BigInt> {
    if e.len() != m.dims().len() {
        return Err(Error::Dimension("sub-dimension vector length".into()));
    }
    if e.iter().zip(m.dims()).any(|(a, b)| a > b) {
        return Ok(BigInt::zero());
    }
    if m.is_thin() {
        return Ok(BigInt::from(u8::from(thin_subrepresentation_exists(m, e))));
    }
    let table = euler_characteristic_table(m)?;
    Ok(table.get(e).cloned().unwrap_or_default())
}

/// `chi(Gr_e(M))` for every `0 <= e <= dim M`.
pub fn euler_characteristic_table(m: &Representation) -> Result<BTreeMap<Vec<usize>, BigInt>> {
    if m.is_thin() {
        return Ok(sub_dimension_vectors(m.dims())
            .into_iter()
            .map(|e| {
                let v = BigInt::from(u8::from(thin_subrepresentation_exists(m, &e)));
                (e, v)
            })
            .collect());
    }
    Ok(counting_polynomials(m)?
        .into_iter()
        .map(|(e, p)| (e, p.eval(&BigInt::from(1))))
        .collect())
}

/// The polynomials `P_e(q) = #Gr_e(M)(F_q)`, recovered from point counts
/// over prime fields.
///
/// The enumeration fixes subspaces at all but the last vertices and sums
/// the rest in closed form. The closed form only depends on a few integers
/// (the stratum of the enumerated tuple), so it suffices to interpolate the
/// number of tuples in each stratum, whose degree is bounded by the
/// dimension of the enumerated Grassmannians alone. If those counts fail to
/// be polynomial, the totals are interpolated instead.
pub fn counting_polynomials(m: &Representation) -> Result<BTreeMap<Vec<usize>, UniPoly>> {
    if m.field() != Field::Rationals {
        return Err(Error::Unsupported(
            "point counting needs a representation over Q".into(),
        ));
    }
    if m.quiver().topological_order().is_none() {
        return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
    }
    let dims = m.dims().to_vec();
    let dual = m.dual();
    let use_dual = cost(&dual) < cost(m);
    let target = if use_dual { &dual } else { m };
    let layout = Layout::new(target);
    let hom_q = hom_dimension(m, m)?;
    let den = m.denominator_lcm();
    let primes = |start: u64, count: usize| -> Vec<u64> {
        (start..)
            .filter(|&p| is_prime(p))
            .filter(|&p| !(&den % BigInt::from(p)).is_zero())
            .filter(|&p| m.endomorphism_dim_mod_p(p) == Some(hom_q))
            .take(count)
            .collect()
    };

    // Try successively larger starting primes if a small prime turns out to
    // be bad in a way the endomorphism check does not see.
    let starts = [2u64, 11, 101];
    let mut last_err = None;
    let mut table = None;
    for start in starts {
        match layout.interpolate_strata(target, &primes(start, layout.stratum_degree() + 2)) {
            Ok(t) => {
                table = Some(t);
                break;
            }
            Err(e) => last_err = Some(e),
        }
    }
    if table.is_none() {
        for start in starts {
            match layout.interpolate_totals(target, &primes(start, layout.total_degree() + 2)) {
                Ok(t) => {
                    table = Some(t);
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
    }
    let Some(table) = table else {
        return Err(last_err.unwrap_or_else(|| Error::Interpolation("no good primes".into())));
    };
    Ok(sub_dimension_vectors(&dims)
        .into_iter()
        .map(|e| {
            let key: Vec<usize> = if use_dual {
                e.iter().zip(&dims).map(|(a, b)| b - a).collect()
            } else {
                e.clone()
            };
            (e, table[layout.index(&key)].clone())
        })
        .collect())
}

fn strides(dims: &[usize]) -> Vec<usize> {
    let mut s = vec![0; dims.len()];
    let mut acc = 1;
    for i in (0..dims.len()).rev() {
        s[i] = acc;
        acc *= dims[i] + 1;
    }
    s
}

/// Rough size of the search tree: product over non-sink vertices of the
/// number of subspaces of `F_2^{d_v}`.
fn cost(m: &Representation) -> f64 {
    let q = m.quiver();
    let order = q.topological_order().unwrap_or_default();
    let inner: Vec<usize> = order.into_iter().filter(|&v| !q.is_sink(v)).collect();
    let skip = closed_form_vertex(q, &inner).map(|a| q.arrows()[a].0);
    inner
        .iter()
        .copied()
        .filter(|&v| Some(v) != skip)
        .map(|v| {
            let d = m.dims()[v];
            (0..=d).map(|k| gaussian_binomial(d, k, 2) as f64).sum::<f64>()
        })
        .product()
}

/// Gaussian binomial coefficient `[n choose k]_p`.
pub fn gaussian_binomial(n: usize, k: usize, p: u64) -> u128 {
    if k > n {
        return 0;
    }
    let p = p as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= p.pow((n - i) as u32) - 1;
        den *= p.pow((i + 1) as u32) - 1;
    }
    num / den
}

/// `[n choose k]_q` as a polynomial in `q`.
pub fn gaussian_binomial_poly(n: usize, k: usize) -> UniPoly {
    if k > n {
        return UniPoly::zero();
    }
    // [n, k] = [n-1, k-1] + q^k [n-1, k]
    let mut row = vec![UniPoly::one()];
    for m in 1..=n {
        let mut next = vec![UniPoly::one(); m + 1];
        for j in 1..m {
            next[j] = row[j - 1].add(&shift(&row[j], j));
        }
        row = next;
    }
    row[k].clone()
}

fn shift(p: &UniPoly, e: usize) -> UniPoly {
    let mut c = vec![BigInt::zero(); e];
    c.extend(p.coeffs().iter().cloned());
    UniPoly::new(c)
}

/// Number of `F_p`-points of `Gr_e(M)` for every `e`, indexed in mixed
/// radix by `strides(dims)`.
pub fn count_points(m: &Representation, p: u64) -> Vec<u128> {
    let layout = Layout::new(m);
    let mut table = vec![0u128; layout.size()];
    for (s, n) in layout.strata(m, p) {
        for t in layout.terms(&s) {
            let g: u128 = t.binomials.iter().map(|&(a, b)| gaussian_binomial(a, b, p)).product();
            table[t.index] += n * (p as u128).pow(t.q_exp as u32) * g;
        }
    }
    table
}

/// The last inner vertex can be summed in closed form when it has exactly
/// one outgoing arrow and that arrow ends at a sink. Returns the arrow.
fn closed_form_vertex(q: &Quiver, inner: &[usize]) -> Option<usize> {
    let &v = inner.last()?;
    let out: Vec<usize> = q.outgoing(v).collect();
    (out.len() == 1 && q.is_sink(q.arrows()[out[0]].1)).then(|| out[0])
}

/// The data a leaf of the enumeration hands to the closed-form sums.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Stratum {
    /// Dimensions chosen at the enumerated vertices, in mixed radix.
    base: usize,
    /// Dimension of the incoming span at each sink.
    spans: Vec<usize>,
    /// `(dim C, dim W, dim(K & W), codim W, dim(K + W) - dim W)` for the
    /// closed-form vertex.
    closed: Option<[usize; 5]>,
}

/// One summand `q^q_exp * prod [n choose k]_q` contributing to `index`.
struct Term {
    index: usize,
    q_exp: usize,
    binomials: Vec<(usize, usize)>,
}

/// Vertex order and closed-form data shared by all primes.
struct Layout {
    quiver: Quiver,
    dims: Vec<usize>,
    strides: Vec<usize>,
    inner: Vec<usize>,
    sinks: Vec<usize>,
    last: Option<usize>,
}

impl Layout {
    fn new(m: &Representation) -> Self {
        let q = m.quiver();
        let order = q.topological_order().expect("acyclic quiver");
        let inner: Vec<usize> = order.iter().copied().filter(|&v| !q.is_sink(v)).collect();
        let sinks: Vec<usize> = order.iter().copied().filter(|&v| q.is_sink(v)).collect();
        let dims = m.dims().to_vec();
        Layout {
            quiver: q.clone(),
            strides: strides(&dims),
            last: closed_form_vertex(q, &inner),
            dims,
            inner,
            sinks,
        }
    }

    fn size(&self) -> usize {
        self.dims.iter().map(|d| d + 1).product()
    }

    fn index(&self, e: &[usize]) -> usize {
        e.iter().zip(&self.strides).map(|(a, s)| a * s).sum()
    }

    fn enumerated(&self) -> &[usize] {
        match self.last {
            Some(_) => &self.inner[..self.inner.len() - 1],
            None => &self.inner,
        }
    }

    /// Degree bound for the size of a stratum: the dimension of the product
    /// of the Grassmannians it lives in.
    fn degree_of(&self, base: usize) -> usize {
        self.enumerated()
            .iter()
            .map(|&v| {
                let e = base / self.strides[v] % (self.dims[v] + 1);
                e * (self.dims[v] - e)
            })
            .sum()
    }

    fn stratum_degree(&self) -> usize {
        self.enumerated().iter().map(|&v| self.dims[v] * self.dims[v] / 4).sum()
    }

    fn total_degree(&self) -> usize {
        self.dims.iter().map(|d| d * d / 4).sum()
    }

    fn strata(&self, m: &Representation, p: u64) -> BTreeMap<Stratum, u128> {
        let maps = m.maps_mod_p(p).expect("prime divides a denominator");
        let mut counter = Counter {
            layout: self,
            p,
            maps: &maps,
            strata: BTreeMap::new(),
        };
        let mut chosen: Vec<Vec<Vec<u64>>> = vec![Vec::new(); self.dims.len()];
        counter.go(0, &mut chosen);
        counter.strata
    }

    fn terms(&self, s: &Stratum) -> Vec<Term> {
        let mut out = Vec::new();
        let mut spans = s.spans.clone();
        match (s.closed, self.last) {
            (Some([c, dim_w, k_cap_w, m, kappa]), Some(arrow)) => {
                let (v, t) = self.quiver.arrows()[arrow];
                let ti = self.sinks.iter().position(|&x| x == t).unwrap();
                for kq in 0..=m {
                    let lo = kq.saturating_sub(m - kappa);
                    for j in lo..=kq.min(kappa) {
                        let dim_u = dim_w + kq;
                        spans[ti] = c + dim_u - (j + k_cap_w);
                        let head = Term {
                            index: s.base + dim_u * self.strides[v],
                            q_exp: (kq - j) * (kappa - j),
                            binomials: vec![(kappa, j), (m - kappa, kq - j)],
                        };
                        self.expand_sinks(head, &spans, &mut out);
                    }
                }
            }
            _ => {
                let head = Term { index: s.base, q_exp: 0, binomials: Vec::new() };
                self.expand_sinks(head, &spans, &mut out);
            }
        }
        out
    }

    /// Multiply by `prod_t [d_t - w_t choose e_t - w_t]` for every choice of
    /// sink dimensions.
    fn expand_sinks(&self, head: Term, spans: &[usize], out: &mut Vec<Term>) {
        let mut acc = vec![head];
        for (&t, &w) in self.sinks.iter().zip(spans) {
            let d = self.dims[t];
            let mut next = Vec::with_capacity(acc.len() * (d - w + 1));
            for term in &acc {
                for e in w..=d {
                    let mut b = term.binomials.clone();
                    b.push((d - w, e - w));
                    next.push(Term {
                        index: term.index + e * self.strides[t],
                        q_exp: term.q_exp,
                        binomials: b,
                    });
                }
            }
            acc = next;
        }
        out.extend(acc);
    }

    fn interpolate_strata(&self, m: &Representation, primes: &[u64]) -> Result<Vec<UniPoly>> {
        let counts: Vec<BTreeMap<Stratum, u128>> =
            primes.par_iter().map(|&p| self.strata(m, p)).collect();
        let mut keys: Vec<&Stratum> = counts.iter().flat_map(|c| c.keys()).collect();
        keys.sort();
        keys.dedup();
        let maxd = *self.dims.iter().max().unwrap_or(&0);
        let gauss: Vec<Vec<UniPoly>> = (0..=maxd)
            .map(|n| (0..=n).map(|k| gaussian_binomial_poly(n, k)).collect())
            .collect();
        let mut table = vec![UniPoly::zero(); self.size()];
        for s in keys {
            let pts: Vec<(i64, BigInt)> = primes
                .iter()
                .zip(&counts)
                .map(|(&p, c)| (p as i64, BigInt::from(c.get(s).copied().unwrap_or(0))))
                .collect();
            let n = interpolate_integer_polynomial(&pts, self.degree_of(s.base))?;
            for t in self.terms(s) {
                let f = t
                    .binomials
                    .iter()
                    .fold(shift(&n, t.q_exp), |acc, &(a, b)| acc.mul(&gauss[a][b]));
                table[t.index] = table[t.index].add(&f);
            }
        }
        Ok(table)
    }

    fn interpolate_totals(&self, m: &Representation, primes: &[u64]) -> Result<Vec<UniPoly>> {
        let tables: Vec<Vec<u128>> = primes.par_iter().map(|&p| count_points(m, p)).collect();
        let mut out = Vec::with_capacity(self.size());
        for e in sub_dimension_vectors(&self.dims) {
            let idx = self.index(&e);
            let degree: usize = e.iter().zip(&self.dims).map(|(a, b)| a * (b - a)).sum();
            let pts: Vec<(i64, BigInt)> = primes
                .iter()
                .zip(&tables)
                .map(|(&p, t)| (p as i64, BigInt::from(t[idx])))
                .collect();
            debug_assert_eq!(out.len(), idx);
            out.push(interpolate_integer_polynomial(&pts, degree)?);
        }
        Ok(out)
    }
}

struct Counter<'a> {
    layout: &'a Layout,
    p: u64,
    maps: &'a [Vec<Vec<u64>>],
    strata: BTreeMap<Stratum, u128>,
}

fn apply(mat: &[Vec<u64>], v: &[u64], p: u64) -> Vec<u64> {
    mat.iter()
        .map(|row| row.iter().zip(v).fold(0u64, |acc, (x, y)| (acc + x * y) % p))
        .collect()
}

/// Reduce `v` modulo the span of `basis`, given in reduced echelon form.
fn reduce_mod(v: &mut [u64], basis: &[Vec<u64>], pivots: &[usize], p: u64) {
    for (row, &c) in basis.iter().zip(pivots) {
        let f = v[c];
        if f != 0 {
            for (x, y) in v.iter_mut().zip(row) {
                *x = (*x + p - f * y % p) % p;
            }
        }
    }
}

impl Counter<'_> {
    /// Images of the chosen subspaces under the arrows into `v`, optionally
    /// skipping arrows that start at `skip`, in reduced echelon form.
    fn incoming_span(
        &self,
        v: usize,
        chosen: &[Vec<Vec<u64>>],
        skip: Option<usize>,
    ) -> (Vec<Vec<u64>>, Vec<usize>) {
        let p = self.p;
        let q = &self.layout.quiver;
        let mut rows = Vec::new();
        for a in q.incoming(v) {
            let s = q.arrows()[a].0;
            if Some(s) == skip {
                continue;
            }
            for b in &chosen[s] {
                let img = apply(&self.maps[a], b, p);
                if img.iter().any(|&x| x != 0) {
                    rows.push(img);
                }
            }
        }
        let piv = modp::rref_rows(&mut rows, p);
        (rows, piv)
    }

    fn base(&self, chosen: &[Vec<Vec<u64>>]) -> usize {
        self.layout
            .enumerated()
            .iter()
            .map(|&v| chosen[v].len() * self.layout.strides[v])
            .sum()
    }

    fn record(&mut self, s: Stratum) {
        *self.strata.entry(s).or_insert(0) += 1;
    }

    fn go(&mut self, k: usize, chosen: &mut Vec<Vec<Vec<u64>>>) {
        let layout = self.layout;
        if k == layout.inner.len() {
            let spans: Vec<usize> = layout
                .sinks
                .iter()
                .map(|&t| self.incoming_span(t, chosen, None).0.len())
                .collect();
            let base = self.base(chosen);
            self.record(Stratum { base, spans, closed: None });
            return;
        }
        let v = layout.inner[k];
        if k + 1 == layout.inner.len() {
            if let Some(arrow) = layout.last {
                self.closed_form(v, arrow, chosen);
                return;
            }
        }
        let d = layout.dims[v];
        let (w, piv) = self.incoming_span(v, chosen, None);
        let comp: Vec<usize> = (0..d).filter(|c| !piv.contains(c)).collect();
        let mut subs = Subspaces::new(comp.len(), self.p);
        while let Some(sub) = subs.advance() {
            let basis = &mut chosen[v];
            let need = w.len() + sub.len();
            basis.truncate(need);
            while basis.len() < need {
                basis.push(vec![0; d]);
            }
            for (dst, src) in basis.iter_mut().zip(&w) {
                dst.copy_from_slice(src);
            }
            for (dst, row) in basis[w.len()..].iter_mut().zip(sub) {
                dst.iter_mut().for_each(|x| *x = 0);
                for (j, &x) in row.iter().enumerate() {
                    dst[comp[j]] = x;
                }
            }
            self.go(k + 1, chosen);
        }
        chosen[v].clear();
    }

    /// All `U_v` containing the incoming span `W` at once. With `b: v -> t`
    /// the only arrow out of `v`, `C` the span of the other images in `t`
    /// and `K = b^{-1}(C)`, the image in `t` has dimension
    /// `dim C + dim U - dim(U & K)`, and the number of `U` with given
    /// `dim U` and `dim(U & K)` has a closed form.
    fn closed_form(&mut self, v: usize, arrow: usize, chosen: &[Vec<Vec<u64>>]) {
        let p = self.p;
        let layout = self.layout;
        let t = layout.quiver.arrows()[arrow].1;
        let dv = layout.dims[v];
        let (w, _) = self.incoming_span(v, chosen, None);
        let (c, cpiv) = self.incoming_span(t, chosen, Some(v));
        let b = &self.maps[arrow];
        // dim K = dv - rank(b mod C), dim(K & W) = dim W - rank(b|W mod C).
        let mut cols: Vec<Vec<u64>> = (0..dv)
            .map(|j| {
                let mut col: Vec<u64> = b.iter().map(|row| row[j]).collect();
                reduce_mod(&mut col, &c, &cpiv, p);
                col
            })
            .collect();
        let dim_k = dv - modp::rref_rows(&mut cols, p).len();
        let mut bw: Vec<Vec<u64>> = w
            .iter()
            .map(|x| {
                let mut y = apply(b, x, p);
                reduce_mod(&mut y, &c, &cpiv, p);
                y
            })
            .collect();
        let dim_w = w.len();
        let k_cap_w = dim_w - modp::rref_rows(&mut bw, p).len();
        let spans: Vec<usize> = layout
            .sinks
            .iter()
            .map(|&s| if s == t { 0 } else { self.incoming_span(s, chosen, None).0.len() })
            .collect();
        let base = self.base(chosen);
        self.record(Stratum {
            base,
            spans,
            closed: Some([c.len(), dim_w, k_cap_w, dv - dim_w, dim_k - k_cap_w]),
        });
    }
}

/// Every subspace of `F_p^m`, each given by its reduced echelon basis.
pub fn subspaces(m: usize, p: u64) -> Vec<Vec<Vec<u64>>> {
    Subspaces::new(m, p).collect()
}

/// Lazy enumeration of the subspaces of `F_p^m` by dimension, pivot set and
/// free entries.
pub struct Subspaces {
    m: usize,
    p: u64,
    /// Pivot columns and free positions `(row, column)` of each shape.
    shapes: Vec<(Vec<usize>, Vec<(usize, usize)>)>,
    shape: usize,
    vals: Option<Vec<u64>>,
    rows: Vec<Vec<u64>>,
}

impl Subspaces {
    pub fn new(m: usize, p: u64) -> Self {
        let mut shapes = Vec::new();
        for k in 0..=m {
            for pivots in combinations(m, k) {
                let free = (0..k)
                    .flat_map(|r| {
                        let pv = pivots.clone();
                        ((pivots[r] + 1)..m)
                            .filter(move |j| !pv.contains(j))
                            .map(move |j| (r, j))
                    })
                    .collect();
                shapes.push((pivots, free));
            }
        }
        Subspaces {
            m,
            p,
            shapes,
            shape: 0,
            vals: None,
            rows: Vec::new(),
        }
    }
}

impl Subspaces {
    /// The next subspace, in a buffer reused between calls.
    pub fn advance(&mut self) -> Option<&[Vec<u64>]> {
        loop {
            if self.shape >= self.shapes.len() {
                return None;
            }
            let (pivots, free) = &self.shapes[self.shape];
            match self.vals.as_mut() {
                None => {
                    self.vals = Some(vec![0; free.len()]);
                    self.rows.clear();
                    for &c in pivots {
                        let mut row = vec![0u64; self.m];
                        row[c] = 1;
                        self.rows.push(row);
                    }
                    return Some(&self.rows);
                }
                Some(vals) => {
                    // Odometer increment; roll over to the next shape.
                    let mut i = 0;
                    while i < free.len() {
                        let (r, j) = free[i];
                        vals[i] += 1;
                        if vals[i] < self.p {
                            self.rows[r][j] = vals[i];
                            return Some(&self.rows);
                        }
                        vals[i] = 0;
                        self.rows[r][j] = 0;
                        i += 1;
                    }
                    self.shape += 1;
                    self.vals = None;
                }
            }
        }
    }
}

impl Iterator for Subspaces {
    type Item = Vec<Vec<u64>>;

    fn next(&mut self) -> Option<Self::Item> {
        self.advance().map(<[Vec<u64>]>::to_vec)
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}
