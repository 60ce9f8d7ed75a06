//! A fixed list of small quivers and their indecomposable decorated objects,
//! shared by the test suites and the `verify` command.

use std::fmt;

use crate::ccmap::DecoratedObject;
use crate::error::Result;
use crate::generic::GenericEngine;
use crate::quiver::{Quiver, QuiverType};
use crate::rep::ext1_dimension;
use crate::tubes::{default_homogeneous, exceptional_tubes, homogeneous_tube_module, tube_module};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Component {
    Shifted,
    Preprojective,
    Regular,
    Preinjective,
    /// Any indecomposable of a Dynkin quiver.
    Finite,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Component::Shifted => "shifted",
            Component::Preprojective => "preprojective",
            Component::Regular => "regular",
            Component::Preinjective => "preinjective",
            Component::Finite => "finite",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub object: DecoratedObject,
    pub component: Component,
    pub rigid: bool,
}

#[derive(Clone, Debug)]
pub struct CorpusQuiver {
    pub name: &'static str,
    pub quiver: Quiver,
}

pub fn corpus_quivers() -> Vec<CorpusQuiver> {
    vec![
        CorpusQuiver { name: "Kronecker", quiver: Quiver::kronecker() },
        CorpusQuiver { name: "A~(2,1)", quiver: Quiver::affine_a(2, 1).unwrap() },
        CorpusQuiver { name: "A~(3,1)", quiver: Quiver::affine_a(3, 1).unwrap() },
        CorpusQuiver { name: "A~(2,2)", quiver: Quiver::affine_a(2, 2).unwrap() },
        CorpusQuiver { name: "A2", quiver: Quiver::linear_a(2) },
        CorpusQuiver { name: "A3", quiver: Quiver::linear_a(3) },
        CorpusQuiver { name: "D4", quiver: Quiver::d4() },
    ]
}

fn fmt_dims(d: &[i64]) -> String {
    let v: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

/// Indecomposable objects of `q` with total dimension at most `max_total`:
/// shifted projectives, rigid indecomposables of real Schur roots, and tube
/// modules (one homogeneous parameter).
pub fn indecomposables(q: &Quiver, max_total: i64) -> Result<Vec<CorpusEntry>> {
    let n = q.n();
    let mut out = Vec::new();
    for i in 0..n {
        out.push(CorpusEntry {
            name: format!("P{}[1]", q.label(i)),
            object: DecoratedObject::shifted_projective(q, i),
            component: Component::Shifted,
            rigid: true,
        });
    }
    let ty = q.classify()?;
    let affine = matches!(ty, QuiverType::Affine(_));
    let mut engine = GenericEngine::new(q)?;
    let bound = vec![max_total; n];
    for r in engine.real_schur_roots_up_to(&bound)? {
        if r.iter().sum::<i64>() > max_total {
            continue;
        }
        let component = if affine {
            match q.defect(&r)?.signum() {
                -1 => Component::Preprojective,
                1 => Component::Preinjective,
                // Listed with their tubes below.
                _ => continue,
            }
        } else {
            Component::Finite
        };
        let m = engine.rigid_witness(&r)?;
        out.push(CorpusEntry {
            name: format!("M{}", fmt_dims(&r)),
            object: DecoratedObject::from_module(m),
            component,
            rigid: true,
        });
    }
    if !affine {
        return Ok(out);
    }
    let delta = q.delta()?;
    let delta_total: i64 = delta.iter().sum();
    for tube in exceptional_tubes(q)? {
        for i in 0..tube.rank {
            for len in 1.. {
                let d = tube.dims(i, len);
                if d.iter().sum::<i64>() > max_total {
                    break;
                }
                let m = tube_module(q, &tube, i, len)?;
                let rigid = ext1_dimension(&m, &m)? == 0;
                out.push(CorpusEntry {
                    name: format!("E{}^({len}) {}", i, fmt_dims(&d)),
                    object: DecoratedObject::from_module(m),
                    component: Component::Regular,
                    rigid,
                });
            }
        }
    }
    let ml = default_homogeneous(q)?;
    for len in 1..=(max_total / delta_total) as usize {
        out.push(CorpusEntry {
            name: format!("Mlambda^({len})"),
            object: DecoratedObject::from_module(homogeneous_tube_module(&ml, len)?),
            component: Component::Regular,
            rigid: false,
        });
    }
    Ok(out)
}
