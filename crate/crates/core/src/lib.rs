//! Normal forms for the alternating groups in a local, stationary presentation.
//!
//! The group `S_n^+` is generated by `x_1, ..., x_{n-2}` subject to
//!
//! ```text
//! x_i^3 = 1                                  (R)
//! (x_i x_{i+1})^2 = 1                        (S)
//! x_i x_j = x_j x_i            for |i-j| > 2 (Q)
//! x_i x_{i+1}^-1 x_{i+2} = x_{i+2} x_i       (T)
//! ```
//!
//! and is isomorphic to `A_n` via `x_i -> (i, i+1, i+2)`. This crate provides
//! the permutation arithmetic used as ground truth, words over the generators,
//! a purely syntactic rewriting engine that brings any word to the canonical
//! form `y_{1,k_1} y_{2,k_2} ... y_{n-2,k_{n-2}}`, a direct permutation
//! encoder, mixed-radix ranking, and checkers for the relations, derivations,
//! generating-tuple census and the classical Carmichael generators.
//!
//! Products are composed right to left: in `p * q` the factor `q` acts first.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod carmichael;
mod error;
pub mod normal_form;
pub mod perm;
pub mod presentation;
pub mod report;
mod rewrite;
pub mod word;

pub use carmichael::{check_carmichael, v_perm, v_to_x, x_to_v, CarmichaelContext};
pub use error::{Error, Result};
pub use normal_form::{
    check_bijectivity, encode_perm, enumerate, enumerate_range, group_order, nf_evaluate, nf_to_word,
    normalize_word, normalize_word_traced, rank, unrank, y_word, Enumeration, NormalFormTuple,
};
pub use perm::{Parity, Permutation};
pub use presentation::{
    builtin_script, builtin_scripts, census_solutions, check_assignment, check_stationarity, closure,
    closure_order, relation_instances, standard_images, verify_derivation, verify_script_all,
    DerivationScript, RelationInstance, RelationKind, ScriptStep, DEFAULT_CENSUS_BUDGET,
};
pub use report::{Payload, StatValue, VerificationReport, Witness};
pub use rewrite::{RewriteRule, RewriteStep};
pub use word::{Alphabet, Letter, Word};
