//! Exact tools for Catalan-like sequences: recursive matrices, Hankel
//! positivity, orthogonal polynomials, chain sequences and integral
//! representations.

pub mod chainseq;
pub mod cli;
pub mod error;
pub mod hankel;
pub mod interval;
pub mod linalg;
pub mod measures;
pub mod orthopoly;
pub mod poly;
pub mod rational;
pub mod seqcore;

pub use error::{Error, Result};
pub use interval::Interval;
pub use rational::Rational;
pub use seqcore::{catalan_like, catalog_sequence, CatalogId, Sequence, SigmaTauSpec};
