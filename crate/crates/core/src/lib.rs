//! Exact computational kernel for finite-dimensional bialgebras, Hopf
//! algebras and their (co)modules, given by structure constants over the
//! rationals or a prime field.
//!
//! The crate is organized around [`tensorlin::LinearMap`], an exact matrix
//! between tensor products of finite-dimensional spaces. Every structure map
//! (multiplication, comultiplication, antipode, actions, coactions,
//! braidings) is such a matrix, every axiom is a matrix identity, and every
//! checker reports named pass/fail verdicts with exact equality; there are
//! no tolerances anywhere.
//!
//! Modules:
//! - [`field`]: exact scalars (ℚ and F_p) behind the [`field::Field`] trait;
//! - [`tensorlin`]: composition, Kronecker products, factor permutations,
//!   exact solving;
//! - [`hopfcore`]: (co)algebras, bialgebras, Hopf algebras, quasitriangular
//!   and coquasitriangular structures, with axiom checkers;
//! - [`reptheory`]: modules, comodules, equivariant structures,
//!   Yetter-Drinfeld and relative Hopf modules;
//! - [`transmute`]: the Yetter-Drinfeld category machinery and the two
//!   braided-group constructions;
//! - [`monoidal`]: tensor structure on relative Hopf modules and the
//!   two-sided monoidal-versus-braided verifier;
//! - [`morphdsl`]: a textual DSL for morphism expressions;
//! - [`catalog`]: builders for the example structures;
//! - [`mutate`]: single-entry structure-constant mutation tooling.

pub mod catalog;
pub mod error;
pub mod field;
pub mod hopfcore;
pub mod monoidal;
pub mod morphdsl;
pub mod mutate;
pub mod report;
pub mod reptheory;
pub mod tensorlin;
pub mod transmute;

pub use error::Error;
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use report::{CheckItem, CheckReport, Witness};
pub use tensorlin::LinearMap;

/// Matrices over the rationals.
pub type RationalMap = tensorlin::LinearMap<field::Rationals>;
/// Matrices over a prime field.
pub type PrimeMap = tensorlin::LinearMap<field::PrimeField>;
/// Hopf data over the rationals.
pub type RationalHopf = hopfcore::HopfData<field::Rationals>;
/// Hopf data over a prime field.
pub type PrimeHopf = hopfcore::HopfData<field::PrimeField>;
