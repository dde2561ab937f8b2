//! Exact computations around classical root systems and highest-weight modules.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] builds the A/B/C/D root systems (Cartan matrix, symmetrizer,
//!   positive roots) with integer data.
//! * [`weights`] does Dynkin-label arithmetic: Harish-Chandra parameters,
//!   BGG reducibility sets and the shifts `Λ → Λ − mβ`.
//! * [`parabolic`] splits the positive roots for a subset `S` of simple roots
//!   into Levi and nilradical parts and restricts reducibility to the
//!   parabolic Verma module setting.
//! * [`multiplet`] closes a seed weight under embeddings into a DAG.
//! * [`realforms`] catalogs minimal parabolics of classical real forms and
//!   cross-checks them against the complex parabolic data.
//! * [`conformal`] holds the `su(2,2)` specific signatures and tables.
//!
//! Every value is exact: integers are `i64`/[`BigInt`](num_bigint::BigInt)
//! and weights are [`Rational`]s. No floating point is used anywhere.

pub mod conformal;
pub mod error;
pub mod multiplet;
pub mod parabolic;
pub mod realforms;
pub mod rootsys;
pub mod weights;

pub use error::{Error, Result};
pub use multiplet::{BuildOptions, Edge, MultipletGraph};
pub use parabolic::{ParabolicData, ParabolicSubset, PvmHit};
pub use realforms::{M0Component, RealFormFamily, RealFormSpec, VerificationReport};
pub use rootsys::{Family, LieType, Root, RootSystem};
pub use weights::{Rational, ReducibilityHit, Weight};
