//! Finite groups, their irreducible representations, and the Fourier-sampling
//! analysis of the hidden subgroup `{1, m}` inside direct powers `G^n`.
//!
//! The crate is organised bottom-up:
//!
//! * [`group`]: Cayley-table groups, conjugacy classes, centres, direct powers.
//! * [`repr`]: character tables, explicit unitary irreps, isotypic projectors,
//!   the Δ-set and the base-group condition.
//! * [`wreath`]: `Z₂ ≀ G`, iterated towers and their induced/split irreps.
//! * [`sampling`]: weak and strong Fourier-sampling distributions, frames,
//!   involution projectors and the exact/empirical distances over `G^n`.
//! * [`bounds`]: the rate constants and the inequality checks that feed the
//!   strong-sampling bound.
//! * [`cli`]: the `hsp-powers` command-line front end.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod group;
pub mod linalg;
pub mod output;
pub mod repr;
pub mod sampling;
pub mod wreath;

pub use error::{Error, Result};
pub use group::{ConjugacyClass, FiniteGroup, GroupLimits, Subgroup};
pub use repr::{CharacterTable, ConditionReport, InvolutionProfile, UnitaryIrrep};
pub use wreath::{WreathElement, WreathGroup};

