//! Finite quivers, their bilinear forms, roots and classification.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{fourier_motzkin, q, RationalMatrix};

/// A quiver with labelled vertices. Arrows refer to vertex positions and
/// keep their order through reflections, so arrow indices are stable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    labels: Vec<u32>,
    arrows: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AffineType {
    /// Cycle with `r` arrows one way and `s` the other, `r >= s`.
    /// The Kronecker quiver is `A { r: 1, s: 1 }`.
    A { r: usize, s: usize },
    D(usize),
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuiverType {
    Dynkin(DynkinType),
    Affine(AffineType),
    Wild,
}

impl fmt::Display for QuiverType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuiverType::Dynkin(d) => match d {
                DynkinType::A(n) => write!(f, "Dynkin A{n}"),
                DynkinType::D(n) => write!(f, "Dynkin D{n}"),
                DynkinType::E6 => write!(f, "Dynkin E6"),
                DynkinType::E7 => write!(f, "Dynkin E7"),
                DynkinType::E8 => write!(f, "Dynkin E8"),
            },
            QuiverType::Affine(a) => match a {
                AffineType::A { r, s } => write!(f, "Affine A~({r},{s})"),
                AffineType::D(n) => write!(f, "Affine D~{n}"),
                AffineType::E6 => write!(f, "Affine E~6"),
                AffineType::E7 => write!(f, "Affine E~7"),
                AffineType::E8 => write!(f, "Affine E~8"),
            },
            QuiverType::Wild => write!(f, "Wild"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootKind {
    Real,
    Imaginary,
}

impl Quiver {
    /// Build from vertex labels and arrows given as label pairs.
    pub fn new(labels: Vec<u32>, arrows: &[(u32, u32)]) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidQuiver("no vertices".into()));
        }
        let mut seen = labels.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != labels.len() {
            return Err(Error::InvalidQuiver("repeated vertex label".into()));
        }
        let pos = |l: u32| {
            labels
                .iter()
                .position(|&x| x == l)
                .ok_or_else(|| Error::InvalidQuiver(format!("arrow endpoint {l} is not a vertex")))
        };
        let mut idx = Vec::with_capacity(arrows.len());
        for &(s, t) in arrows {
            if s == t {
                return Err(Error::InvalidQuiver(format!("loop at vertex {s}")));
            }
            idx.push((pos(s)?, pos(t)?));
        }
        Ok(Quiver {
            labels,
            arrows: idx,
        })
    }

    /// Build from vertex positions; labels are `1..=n`.
    pub fn from_indices(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let labels: Vec<u32> = (1..=n as u32).collect();
        let pairs: Vec<(u32, u32)> = arrows
            .iter()
            .map(|&(s, t)| (s as u32 + 1, t as u32 + 1))
            .collect();
        Self::new(labels, &pairs)
    }

    /// Two arrows `2 -> 1`.
    pub fn kronecker() -> Quiver {
        Quiver::new(vec![1, 2], &[(2, 1), (2, 1)]).unwrap()
    }

    /// Vertices `1..=r+s`, a path `1 -> 2 -> ... -> r -> n` with `r` arrows
    /// and a path `1 -> r+1 -> ... -> n-1 -> n` with `s` arrows.
    /// Use [`Quiver::kronecker`] for `r = s = 1`.
    pub fn affine_a(r: usize, s: usize) -> Result<Quiver> {
        if r == 0 || s == 0 || r + s < 3 {
            return Err(Error::InvalidQuiver(format!("no standard A~({r},{s}) quiver")));
        }
        let n = (r + s) as u32;
        let mut arrows = Vec::new();
        let mut prev = 1;
        for v in 2..=r as u32 {
            arrows.push((prev, v));
            prev = v;
        }
        arrows.push((prev, n));
        let mut prev = 1;
        for v in (r as u32 + 1)..n {
            arrows.push((prev, v));
            prev = v;
        }
        arrows.push((prev, n));
        Quiver::new((1..=n).collect(), &arrows)
    }

    /// `1 -> 2 -> ... -> n`.
    pub fn linear_a(n: usize) -> Quiver {
        let arrows: Vec<(u32, u32)> = (1..n as u32).map(|i| (i, i + 1)).collect();
        Quiver::new((1..=n as u32).collect(), &arrows).unwrap()
    }

    /// `D_4` with the three outer vertices pointing at the centre 1.
    pub fn d4() -> Quiver {
        Quiver::new(vec![1, 2, 3, 4], &[(2, 1), (3, 1), (4, 1)]).unwrap()
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> u32 {
        self.labels[i]
    }

    pub fn index_of(&self, label: u32) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Arrows as label pairs.
    pub fn arrow_labels(&self) -> Vec<(u32, u32)> {
        self.arrows
            .iter()
            .map(|&(s, t)| (self.labels[s], self.labels[t]))
            .collect()
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].1 == v)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].0 == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.outgoing(v).next().is_none()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.incoming(v).next().is_none()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_source(v)).collect()
    }

    /// Vertices in an order where every arrow goes forward, or `None` if
    /// the quiver has an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n()];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut queue: VecDeque<usize> = (0..self.n()).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n());
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.outgoing(v) {
                let t = self.arrows[a].1;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        (order.len() == self.n()).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(s, t) in &self.arrows {
                for (a, b) in [(s, t), (t, s)] {
                    if a == v && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            labels: self.labels.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    /// Reverse every arrow at a sink or a source.
    pub fn reflect(&self, v: usize) -> Result<Quiver> {
        if !self.is_sink(v) && !self.is_source(v) {
            return Err(Error::NotSinkOrSource(self.labels[v]));
        }
        Ok(Quiver {
            labels: self.labels.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|&(s, t)| if s == v || t == v { (t, s) } else { (s, t) })
                .collect(),
        })
    }

    /// `E[a][b] = <alpha_a, alpha_b>`.
    pub fn euler_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut e = vec![vec![0i64; n]; n];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = 1;
        }
        for &(s, t) in &self.arrows {
            e[s][t] -= 1;
        }
        e
    }

    /// `<a, b> = sum a_i b_i - sum_{s -> t} a_s b_t`.
    pub fn euler(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut v: i64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
        for &(s, t) in &self.arrows {
            v -= a[s] * b[t];
        }
        v
    }

    /// Symmetrised form `(a, b) = <a, b> + <b, a>`.
    pub fn symmetric(&self, a: &[i64], b: &[i64]) -> i64 {
        self.euler(a, b) + self.euler(b, a)
    }

    /// Tits form `q(d) = <d, d>`.
    pub fn tits(&self, d: &[i64]) -> i64 {
        self.euler(d, d)
    }

    /// `B[i][j] = #(i -> j) - #(j -> i)`.
    pub fn b_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.n();
        let mut b = vec![vec![0i64; n]; n];
        for &(s, t) in &self.arrows {
            b[s][t] += 1;
            b[t][s] -= 1;
        }
        b
    }

    /// `c = -E^{-1} E^T`, acting on column vectors, so that
    /// `<a, b> = -<b, c a>`.
    pub fn coxeter_matrix(&self) -> Result<Vec<Vec<i64>>> {
        let n = self.n();
        let e = RationalMatrix::from_i64(n, n, &self.euler_matrix());
        let inv = e
            .inverse()
            .ok_or_else(|| Error::InvalidQuiver("Euler matrix is singular".into()))?;
        let mut c = inv.mul(&e.transpose());
        for r in 0..n {
            for col in 0..n {
                let v = -c.get(r, col).clone();
                c.set(r, col, v);
            }
        }
        c.to_i64()
            .ok_or_else(|| Error::InvalidQuiver("Coxeter matrix is not integral".into()))
    }

    pub fn apply_matrix(m: &[Vec<i64>], d: &[i64]) -> Vec<i64> {
        m.iter()
            .map(|row| row.iter().zip(d).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn coxeter(&self, d: &[i64]) -> Result<Vec<i64>> {
        Ok(Self::apply_matrix(&self.coxeter_matrix()?, d))
    }

    pub fn inverse_coxeter(&self, d: &[i64]) -> Result<Vec<i64>> {
        let n = self.n();
        let c = RationalMatrix::from_i64(n, n, &self.coxeter_matrix()?);
        let inv = c.inverse().and_then(|m| m.to_i64()).ok_or_else(|| {
            Error::InvalidQuiver("Coxeter matrix is not invertible over Z".into())
        })?;
        Ok(Self::apply_matrix(&inv, d))
    }

    /// Simple reflection `s_i(d) = d - (d, alpha_i) alpha_i`.
    pub fn simple_reflection(&self, i: usize, d: &[i64]) -> Vec<i64> {
        let mut a = vec![0; self.n()];
        a[i] = 1;
        let f = self.symmetric(d, &a);
        let mut r = d.to_vec();
        r[i] -= f;
        r
    }

    /// Reflection of extended dimension vectors: the positive part is
    /// reflected with `s_i`, the negative part is kept, and a negative
    /// coordinate at `i` turns positive.
    pub fn sigma(&self, i: usize, d: &[i64]) -> Vec<i64> {
        let pos: Vec<i64> = d.iter().map(|&x| x.max(0)).collect();
        let mut r = self.simple_reflection(i, &pos);
        for (x, &y) in r.iter_mut().zip(d) {
            *x += y.min(0);
        }
        r[i] -= 2 * d[i].min(0);
        r
    }

    /// Number of paths from `i` to each vertex: the dimension vector of the
    /// indecomposable projective at `i`.
    pub fn projective_dims(&self, i: usize) -> Result<Vec<i64>> {
        let order = self
            .topological_order()
            .ok_or_else(|| Error::InvalidQuiver("quiver has an oriented cycle".into()))?;
        let mut cnt = vec![0i64; self.n()];
        cnt[i] = 1;
        for &v in &order {
            if cnt[v] == 0 {
                continue;
            }
            for a in self.outgoing(v) {
                let t = self.arrows[a].1;
                cnt[t] += cnt[v];
            }
        }
        Ok(cnt)
    }

    pub fn injective_dims(&self, i: usize) -> Result<Vec<i64>> {
        self.opposite().projective_dims(i)
    }

    fn edge_multiplicity(&self) -> BTreeMap<(usize, usize), usize> {
        let mut m = BTreeMap::new();
        for &(s, t) in &self.arrows {
            *m.entry((s.min(t), s.max(t))).or_insert(0) += 1;
        }
        m
    }

    /// Dynkin, affine or wild. Requires a connected acyclic quiver.
    pub fn classify(&self) -> Result<QuiverType> {
        if !self.is_connected() {
            return Err(Error::InvalidQuiver("quiver is not connected".into()));
        }
        if !self.is_acyclic() {
            return Err(Error::InvalidQuiver("quiver has an oriented cycle".into()));
        }
        let n = self.n();
        if n == 1 {
            return Ok(QuiverType::Dynkin(DynkinType::A(1)));
        }
        let mult = self.edge_multiplicity();
        if mult.values().any(|&m| m >= 3) {
            return Ok(QuiverType::Wild);
        }
        if mult.values().any(|&m| m == 2) {
            return Ok(if n == 2 {
                QuiverType::Affine(AffineType::A { r: 1, s: 1 })
            } else {
                QuiverType::Wild
            });
        }
        let edges = mult.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in mult.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        let deg: Vec<usize> = adj.iter().map(|v| v.len()).collect();
        if edges == n {
            if deg.iter().all(|&d| d == 2) {
                let (r, s) = self.cycle_orientation(&adj);
                return Ok(QuiverType::Affine(AffineType::A {
                    r: r.max(s),
                    s: r.min(s),
                }));
            }
            return Ok(QuiverType::Wild);
        }
        if edges != n - 1 {
            return Ok(QuiverType::Wild);
        }
        let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
        match branch.len() {
            0 => Ok(QuiverType::Dynkin(DynkinType::A(n))),
            1 => {
                let c = branch[0];
                let mut arms: Vec<usize> = adj[c]
                    .iter()
                    .map(|&start| {
                        let (mut prev, mut cur, mut len) = (c, start, 1);
                        while deg[cur] == 2 {
                            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
                            prev = cur;
                            cur = next;
                            len += 1;
                        }
                        len
                    })
                    .collect();
                arms.sort_unstable();
                Ok(match arms.as_slice() {
                    [1, 1, 1, 1] => QuiverType::Affine(AffineType::D(4)),
                    [1, 1, _] => QuiverType::Dynkin(DynkinType::D(n)),
                    [1, 2, 2] => QuiverType::Dynkin(DynkinType::E6),
                    [1, 2, 3] => QuiverType::Dynkin(DynkinType::E7),
                    [1, 2, 4] => QuiverType::Dynkin(DynkinType::E8),
                    [2, 2, 2] => QuiverType::Affine(AffineType::E6),
                    [1, 3, 3] => QuiverType::Affine(AffineType::E7),
                    [1, 2, 5] => QuiverType::Affine(AffineType::E8),
                    _ => QuiverType::Wild,
                })
            }
            2 => {
                let ok = branch.iter().all(|&b| deg[b] == 3)
                    && (0..n)
                        .filter(|&v| deg[v] == 1)
                        .all(|leaf| deg[adj[leaf][0]] == 3);
                Ok(if ok {
                    QuiverType::Affine(AffineType::D(n - 1))
                } else {
                    QuiverType::Wild
                })
            }
            _ => Ok(QuiverType::Wild),
        }
    }

    /// Walk the cycle and count arrows agreeing and disagreeing with the
    /// walking direction.
    fn cycle_orientation(&self, adj: &[Vec<usize>]) -> (usize, usize) {
        let n = self.n();
        let (mut fwd, mut bwd) = (0, 0);
        let (mut prev, mut cur) = (0, adj[0][0]);
        let mut step = |a: usize, b: usize| {
            if self.arrows.contains(&(a, b)) {
                fwd += 1;
            } else {
                bwd += 1;
            }
        };
        step(prev, cur);
        for _ in 1..n {
            let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
            step(cur, next);
            prev = cur;
            cur = next;
        }
        (fwd, bwd)
    }

    /// The minimal positive imaginary root of an affine quiver.
    pub fn delta(&self) -> Result<Vec<i64>> {
        match self.classify()? {
            QuiverType::Affine(_) => {}
            t => return Err(Error::Unsupported(format!("{t} has no imaginary root"))),
        }
        let n = self.n();
        let e = self.euler_matrix();
        let s: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| e[i][j] + e[j][i]).collect())
            .collect();
        let ns = RationalMatrix::from_i64(n, n, &s).nullspace();
        if ns.len() != 1 {
            return Err(Error::Domain("radical of the Tits form is not one-dimensional".into()));
        }
        let v = &ns[0];
        let l = v.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let mut ints: Vec<num_bigint::BigInt> =
            v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, x| acc.gcd(x));
        for x in ints.iter_mut() {
            *x /= &g;
        }
        if ints.iter().any(|x| x.is_negative()) {
            for x in ints.iter_mut() {
                *x = -x.clone();
            }
        }
        Ok(ints.iter().map(|x| x.to_i64().unwrap()).collect())
    }

    /// Defect `<delta, d>`; negative on preprojectives.
    pub fn defect(&self, d: &[i64]) -> Result<i64> {
        Ok(self.euler(&self.delta()?, d))
    }

    /// Positive roots `d` with `0 < d <= bound`. Only Dynkin and affine
    /// quivers are supported.
    pub fn positive_roots_up_to(&self, bound: &[i64]) -> Result<Vec<(Vec<i64>, RootKind)>> {
        let ty = self.classify()?;
        if ty == QuiverType::Wild {
            return Err(Error::Unsupported("root enumeration for wild quivers".into()));
        }
        let mut out = Vec::new();
        for d in boxed_vectors(bound) {
            if d.iter().all(|&x| x == 0) {
                continue;
            }
            match self.tits(&d) {
                1 => out.push((d, RootKind::Real)),
                0 if matches!(ty, QuiverType::Affine(_)) => out.push((d, RootKind::Imaginary)),
                _ => {}
            }
        }
        Ok(out)
    }

    /// Whether a positive root is a Schur root.
    pub fn is_schur_root(&self, d: &[i64]) -> Result<bool> {
        if d.iter().any(|&x| x < 0) || d.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        match self.classify()? {
            QuiverType::Dynkin(_) => Ok(self.tits(d) == 1),
            QuiverType::Affine(_) => {
                let delta = self.delta()?;
                match self.tits(d) {
                    1 => {
                        let above_delta = d.iter().zip(&delta).all(|(a, b)| a >= b);
                        Ok(self.defect(d)? != 0 || !above_delta)
                    }
                    0 => Ok(d == delta.as_slice()),
                    _ => Ok(false),
                }
            }
            QuiverType::Wild => Err(Error::Unsupported("Schur roots of wild quivers".into())),
        }
    }

    /// A linear form `eps` with `eps . (B alpha_i) < 0` for every vertex.
    pub fn grading_form(&self) -> Option<Vec<i64>> {
        find_grading_form(&self.b_matrix())
    }
}

/// Quivers reachable from `q` by at most `depth` reflections at sinks or
/// sources, each listed once (compared by arrow multiset), in BFS order.
pub fn reflection_class(q: &Quiver, depth: usize) -> Vec<Quiver> {
    let key = |x: &Quiver| {
        let mut a = x.arrows.clone();
        a.sort_unstable();
        a
    };
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(key(q));
    let mut out = vec![q.clone()];
    let mut frontier = vec![q.clone()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for x in &frontier {
            for v in 0..x.n() {
                if let Ok(y) = x.reflect(v) {
                    if seen.insert(key(&y)) {
                        out.push(y.clone());
                        next.push(y);
                    }
                }
            }
        }
        frontier = next;
    }
    out
}

/// All integer vectors `v` with `0 <= v <= bound`, in lexicographic order.
pub fn boxed_vectors(bound: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        let mut next = Vec::new();
        for v in &out {
            for x in 0..=b.max(0) {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// Search for `eps` with `sum_j eps_j B[j][i] <= -1` for all `i`, scaled to
/// integers.
pub fn find_grading_form(b: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = b.len();
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| q(b[j][i])).collect())
        .collect();
    let rhs = vec![q(-1); n];
    let x = fourier_motzkin(&a, &rhs)?;
    let l = x.iter().fold(num_bigint::BigInt::from(1), |acc, v| acc.lcm(v.denom()));
    let mut ints: Vec<num_bigint::BigInt> = x
        .iter()
        .map(|v| (v * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(num_bigint::BigInt::zero(), |acc, v| acc.gcd(v));
    if !g.is_zero() {
        for v in ints.iter_mut() {
            *v /= &g;
        }
    }
    let eps: Vec<i64> = ints.iter().map(|v| v.to_i64()).collect::<Option<_>>()?;
    let ok = (0..n).all(|i| (0..n).map(|j| eps[j] * b[j][i]).sum::<i64>() < 0);
    ok.then_some(eps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kronecker() -> Quiver {
        Quiver::new(vec![1, 2], &[(2, 1), (2, 1)]).unwrap()
    }

    #[test]
    fn euler_form_of_kronecker() {
        let k = kronecker();
        assert_eq!(k.euler(&[1, 1], &[1, 1]), 0);
        assert_eq!(k.euler(&[0, 1], &[1, 0]), -2);
        assert_eq!(k.delta().unwrap(), vec![1, 1]);
    }

    #[test]
    fn classification_names() {
        let a3 = Quiver::new(vec![1, 2, 3], &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(a3.classify().unwrap().to_string(), "Dynkin A3");
        let cyc = Quiver::new(vec![1, 2, 3], &[(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(cyc.classify().unwrap().to_string(), "Affine A~(2,1)");
        let d4t = Quiver::new(vec![1, 2, 3, 4, 5], &[(1, 5), (2, 5), (3, 5), (4, 5)]).unwrap();
        assert_eq!(d4t.classify().unwrap().to_string(), "Affine D~4");
        let wild = Quiver::new(vec![1, 2], &[(1, 2), (1, 2), (1, 2)]).unwrap();
        assert_eq!(wild.classify().unwrap(), QuiverType::Wild);
        let oriented = Quiver::new(vec![1, 2, 3], &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert!(oriented.classify().is_err());
    }

    #[test]
    fn sigma_is_s_on_positive_vectors() {
        let k = kronecker();
        assert_eq!(k.sigma(0, &[1, 0]), vec![-1, 0]);
        assert_eq!(k.sigma(0, &[-1, 0]), vec![1, 0]);
        assert_eq!(k.sigma(0, &[0, -1]), vec![0, -1]);
        assert_eq!(k.sigma(0, &[1, 1]), vec![1, 1]);
    }

    #[test]
    fn kronecker_grading_exists() {
        let eps = kronecker().grading_form().unwrap();
        let b = kronecker().b_matrix();
        for i in 0..2 {
            assert!(eps[0] * b[0][i] + eps[1] * b[1][i] < 0);
        }
    }
}
