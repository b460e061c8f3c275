//! Combinatorial engine for monochromatic product patterns in finite groups.
//!
//! The crate is organized around a small number of exact building blocks:
//!
//! * [`group`] — finite groups as Cayley tables, with a library of standard
//!   families (cyclic, dihedral, symmetric, `PSL(2,p)`, direct products) and
//!   a text table format for explicit groups.
//! * [`sets`] — subsets of a group as bitmasks, with exact rational density
//!   standing in for the invariant mean, translations and shifted
//!   intersections.
//! * [`words`] — formal non-repeating products over variables `x0..xk`,
//!   including the pattern word set controlling `{x, y, xy, yx}` and its
//!   multi-variable generalization.
//! * [`search`] — exhaustive and bitset-accelerated searches for
//!   monochromatic pattern instances, nested-density statistics, product
//!   tuple counts, mixing statistics and recurrence classification.
//! * [`pigeonhole`], [`tree`], [`focusing`] — executable versions of the
//!   constructive arguments: density pigeonhole, iterated pigeonhole, finite
//!   product trees, color switching trees and the color focusing loop.
//! * [`pws`] / [`ball`] — parameterized thick / syndetic / piecewise-syndetic
//!   predicates over finite groups and radius-truncated balls of free groups.
//!
//! All densities and thresholds are exact rationals; no floating point enters
//! any comparison. Randomness, where used, comes from the pinned
//! [`rng::XorShift64Star`] generator so that seeded runs are reproducible
//! across builds.

pub mod ball;
pub mod catalog;
pub mod focusing;
pub mod group;
pub mod pigeonhole;
pub mod pws;
pub mod rational;
pub mod reference;
pub mod report;
pub mod rng;
pub mod search;
pub mod sets;
pub mod tree;
pub mod words;

pub use group::{FiniteGroup, GroupError, GroupSpec};
pub use rational::Rat;
pub use rng::XorShift64Star;
pub use sets::{density, shifted_intersection, translate, Coloring, ElementSet, Side};
pub use words::{eval_word, fp_words, pattern_words, Word, WordSet};
