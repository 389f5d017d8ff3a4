//! Stanley symmetric polynomials for the symmetric and hyperoctahedral
//! groups, their doubled refinement, and the tableau combinatorics that
//! computes them: reduced-word factorizations, Edelman-Greene style
//! insertion with a primed recording tableau, a pair of commuting crystal
//! structures on primed tableaux, and conversion between primed and
//! signed tableaux.

pub mod conjectures;
pub mod conversion;
pub mod coxeter;
pub mod crystal;
pub mod error;
pub mod factorization;
pub mod insertion;
pub mod partition;
pub mod stanley;
pub mod symfunc;
pub mod tableau;

pub use conjectures::{ConjectureReport, ConjectureStatus, PatternReading};
pub use coxeter::{SignedPermutation, Word};
pub use error::{Error, Result};
pub use factorization::{FactorKind, Factorization};
pub use partition::Partition;
pub use symfunc::{Monomial, MultiPoly};
pub use tableau::{Entry, Tableau};
