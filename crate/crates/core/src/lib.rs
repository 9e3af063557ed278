//! Symbolic toolkit for polynomial Poisson-structure calculus: exact sparse
//! polynomial arithmetic, polyvector fields with the Schouten bracket,
//! Pfaffians and modular vector fields, Groebner-basis ideal analysis
//! (Milnor numbers, dimensions, rank modulo an ideal), simple-elliptic
//! singularity classification, and the Chern-class/Diophantine arithmetic
//! behind the associated Fano-fourfold tables.

pub mod chern;
pub mod context;
pub mod diophantine;
pub mod document;
pub mod error;
pub mod groebner;
pub mod multivector;
pub mod parse;
pub mod poisson;
pub mod poly;

pub use context::VariableContext;
pub use error::{Error, Result};
pub use multivector::Multivector;
pub use poly::Polynomial;
