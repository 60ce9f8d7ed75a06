//! Cluster characters of acyclic quivers: the Caldero-Chapoton map, quiver
//! Grassmannians, tubes of affine quivers, generic variables, reflections
//! and the three classical bases of the Kronecker cluster algebra.

pub mod error;
pub mod laurent;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod grassmannian;
pub mod ccmap;
pub mod tubes;
pub mod generic;
pub mod kronecker;
pub mod cluster;
pub mod reflect;
pub mod corpus;
pub mod checks;

pub use error::{Error, Result};
pub use laurent::LaurentPolynomial;
pub use quiver::{Quiver, QuiverType};
