//! BGP reflection functors, their extension to decorated objects, and the
//! comparison of CC characters across a reflection.

use crate::ccmap::{cc_map, DecoratedObject};
use crate::cluster::Substitution;
use crate::error::{Error, Result};
use crate::generic::GenericEngine;
use crate::laurent::LaurentPolynomial;
use crate::linalg::RationalMatrix;
use crate::quiver::Quiver;
use crate::rep::Representation;

#[derive(Clone, Debug)]
pub struct ReflectionContext {
    source: Quiver,
    vertex: usize,
    target: Quiver,
    phi: Substitution,
    at_sink: bool,
}

impl ReflectionContext {
    /// Reflection at a sink or a source `i` of `q`.
    pub fn new(q: &Quiver, i: usize) -> Result<Self> {
        if i >= q.n() {
            return Err(Error::Dimension(format!("vertex index {i} out of range")));
        }
        let at_sink = q.is_sink(i);
        if !at_sink && !q.is_source(i) {
            return Err(Error::NotSinkOrSource(q.label(i)));
        }
        let phi = Substitution::reflection(q, i)?;
        Ok(ReflectionContext {
            source: q.clone(),
            vertex: i,
            target: phi.target().clone(),
            phi,
            at_sink,
        })
    }

    pub fn sink(q: &Quiver, i: usize) -> Result<Self> {
        if i >= q.n() || !q.is_sink(i) {
            return Err(Error::NotSink(q.labels().get(i).copied().unwrap_or(i as u32)));
        }
        Self::new(q, i)
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

    pub fn at_sink(&self) -> bool {
        self.at_sink
    }

    pub fn substitution(&self) -> &Substitution {
        &self.phi
    }

    pub fn sigma(&self, d: &[i64]) -> Vec<i64> {
        self.source.sigma(self.vertex, d)
    }
}

/// Arrows ending at the sink `i` and the block matrix `(M(a))_a` they form.
fn incoming_block(m: &Representation, i: usize) -> (Vec<usize>, RationalMatrix) {
    let q = m.quiver();
    let dims = m.dims();
    let arrows: Vec<usize> = q.incoming(i).collect();
    let width: usize = arrows.iter().map(|&a| dims[q.arrows()[a].0]).sum();
    let mut block = RationalMatrix::zeros(dims[i], width);
    let mut off = 0;
    for &a in &arrows {
        let map = m.map(a);
        for r in 0..map.rows() {
            for c in 0..map.cols() {
                block.set(r, off + c, map.get(r, c).clone());
            }
        }
        off += map.cols();
    }
    (arrows, block)
}

/// Number of `S_i` direct summands of `m` at a sink or source `i`.
pub fn simple_multiplicity(m: &Representation, i: usize) -> Result<usize> {
    let q = m.quiver();
    if q.is_sink(i) {
        let (_, block) = incoming_block(m, i);
        Ok(m.dims()[i] - block.rank())
    } else if q.is_source(i) {
        simple_multiplicity(&m.dual(), i)
    } else {
        Err(Error::NotSinkOrSource(q.label(i)))
    }
}

fn sink_reflect(m: &Representation, i: usize, target: &Quiver) -> Result<Representation> {
    let q = m.quiver();
    let (arrows, block) = incoming_block(m, i);
    let kernel = block.nullspace();
    let k = kernel.len();
    let mut dims = m.dims().to_vec();
    dims[i] = k;
    let mut maps = m.maps().to_vec();
    let mut off = 0;
    for &a in &arrows {
        let s = q.arrows()[a].0;
        let mut map = RationalMatrix::zeros(dims[s], k);
        for (c, v) in kernel.iter().enumerate() {
            for r in 0..dims[s] {
                map.set(r, c, v[off + r].clone());
            }
        }
        off += dims[s];
        maps[a] = map;
    }
    Representation::with_field(target.clone(), m.field(), dims, maps)
}

/// `Sigma_i^+` at a sink (kernel construction) or `Sigma_i^-` at a source
/// (the dual construction). `S_i` summands are sent to zero.
pub fn bgp_reflect(ctx: &ReflectionContext, m: &Representation) -> Result<Representation> {
    if m.quiver() != &ctx.source {
        return Err(Error::InvalidQuiver("module over a different quiver".into()));
    }
    if ctx.at_sink {
        sink_reflect(m, ctx.vertex, &ctx.target)
    } else {
        let d = m.dual();
        let op_target = ctx.target.opposite();
        Ok(sink_reflect(&d, ctx.vertex, &op_target)?.dual())
    }
}

/// `S_i -> P_i[1]`, `P_i[1] -> S_i`, `P_j[1] -> P_j[1]` and the BGP functor
/// on the remaining module summands.
pub fn extended_reflect(ctx: &ReflectionContext, obj: &DecoratedObject) -> Result<DecoratedObject> {
    let i = ctx.vertex;
    let m = obj.module();
    let simples = simple_multiplicity(m, i)?;
    let mut module = bgp_reflect(ctx, m)?;
    let si = Representation::simple(&ctx.target, i);
    for _ in 0..obj.shifts()[i] {
        module = module.direct_sum(&si)?;
    }
    let mut shifts = obj.shifts().to_vec();
    shifts[i] = simples;
    DecoratedObject::new(module, shifts)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub image: LaurentPolynomial,
    pub reflected: LaurentPolynomial,
    pub characters_agree: bool,
    /// `Phi(X_d) = X_{sigma_i d}` for the extended dimension vector `d`.
    pub generic_agree: Option<bool>,
}

impl CompatibilityReport {
    pub fn holds(&self) -> bool {
        self.characters_agree && self.generic_agree != Some(false)
    }
}

/// Compare `Phi_i(X_M)` with `X_{R_i M}`.
pub fn reflection_report(ctx: &ReflectionContext, obj: &DecoratedObject) -> Result<CompatibilityReport> {
    let image = ctx.phi.apply(&cc_map(obj)?)?;
    let reflected = cc_map(&extended_reflect(ctx, obj)?)?;
    Ok(CompatibilityReport {
        characters_agree: image == reflected,
        image,
        reflected,
        generic_agree: None,
    })
}

/// `Phi_i(X_d) = X_{sigma_i(d)}` for generic variables.
pub fn generic_transport(
    ctx: &ReflectionContext,
    before: &mut GenericEngine,
    after: &mut GenericEngine,
    d: &[i64],
) -> Result<bool> {
    let x = before.generic_variable(d)?;
    let y = after.generic_variable(&ctx.sigma(d))?;
    Ok(ctx.phi.apply(&x.value)? == y.value)
}

/// Both the character comparison and the generic-variable comparison for
/// the extended dimension vector of `obj`.
pub fn verify_reflection_compatibility(ctx: &ReflectionContext, obj: &DecoratedObject) -> Result<bool> {
    let mut report = reflection_report(ctx, obj)?;
    let mut before = GenericEngine::new(&ctx.source)?;
    let mut after = GenericEngine::new(&ctx.target)?;
    report.generic_agree = Some(generic_transport(
        ctx,
        &mut before,
        &mut after,
        &obj.extended_dimension(),
    )?);
    Ok(report.holds())
}
