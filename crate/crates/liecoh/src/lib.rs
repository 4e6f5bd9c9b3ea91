//! Exact-arithmetic Lie algebra cohomology in low degrees.
//!
//! Given a finite-dimensional Lie algebra `g` (as structure constants over ℚ
//! or 𝔽_p), an ideal `h` and a `g`-module `M`, this crate computes the
//! Chevalley–Eilenberg cohomology spaces H⁰–H³ and assembles the seven-term
//! exact sequence
//!
//! ```text
//! 0 → H¹(g/h, M^h) → H¹(g, M) → H¹(h, M)^{g/h} → H²(g/h, M^h)
//!   → H²(g, M)₁ → H¹(g/h, H¹(h, M)) → H³(g/h, M^h)
//! ```
//!
//! together with explicit matrices for the six connecting maps and a
//! machine check of exactness at every interior node. All arithmetic is
//! exact: arbitrary-precision rationals or residues mod a prime.
//!
//! ```
//! use liecoh::{catalog, LieModule, Rationals};
//! use liecoh::seven::assemble_and_verify;
//!
//! let g = catalog::heisenberg(Rationals, 2);
//! let h = catalog::heisenberg_center(&g);
//! let k = LieModule::trivial(g.clone(), 1);
//! let report = assemble_and_verify(&g, &h, &k).unwrap();
//! assert_eq!(report.dims, [4, 4, 1, 6, 5, 4, 4]);
//! assert!(report.all_exact());
//! ```

pub mod catalog;
pub mod ce;
pub mod crossed;
pub mod error;
pub mod exterior;
pub mod field;
pub mod lie;
pub mod linalg;
pub mod problem;
pub mod report;
pub mod seven;

pub use ce::{CohomologySpace, ExtensionData};
pub use error::{Error, Result};
pub use exterior::{Cochain, ExteriorIndex};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use lie::{DerivationSpace, IdealData, LieAlgebra, LieModule, QuotientAlgebra};
pub use linalg::{Matrix, QuotientPresentation, Subspace};
pub use problem::ProblemFile;
pub use seven::{SevenTermContext, SevenTermReport};

/// Element type of the rational field.
pub type QElem = <Rationals as Field>::Elem;
/// Element type of a prime field.
pub type FpElem = <PrimeField as Field>::Elem;

/// Matrix over ℚ.
pub type QMatrix = Matrix<Rationals>;
/// Matrix over 𝔽_p.
pub type FpMatrix = Matrix<PrimeField>;
/// Lie algebra over ℚ.
pub type QLieAlgebra = LieAlgebra<Rationals>;
/// Lie algebra over 𝔽_p.
pub type FpLieAlgebra = LieAlgebra<PrimeField>;
/// Module over ℚ.
pub type QLieModule = LieModule<Rationals>;
/// Module over 𝔽_p.
pub type FpLieModule = LieModule<PrimeField>;
