//! Computer algebra for the word algebra Q<x,y> underlying multiple zeta
//! values: the diamond and harmonic products, the maps tau, phi, S_1 and the
//! derivations, the linear part of Kawashima's relation with exact
//! membership certificates, and numerical evaluation of MZVs and the
//! Dirichlet series interpolating the families f(A, B).

pub mod cli;
pub mod error;
pub mod maps;
pub mod numerics;
pub mod products;
pub mod relations;
pub mod word;

pub use error::{Error, Result};
pub use word::{Index, Letter, Subspace, Word, WordPoly, Q};
