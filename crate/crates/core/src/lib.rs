//! Exact character theory of hermitian unipotent groups over finite rings
//! with involution.
//!
//! The objects live over a finite ring `A` carrying an involution `*` — either
//! a residue ring `Z/m` with the identity involution, or a quadratic extension
//! `Z/m[t]/(t^2 + c t + d)` whose involution sends the adjoined root `γ` to
//! `−(c + γ)`.  Over such a ring the group of interest is
//!
//! ```text
//! P = H_n(A) ⋊ U_n(A)
//! ```
//!
//! where `H_n(A)` are the n×n hermitian matrices under addition and `U_n(A)`
//! the upper unitriangular group acting by `Y · S = Y S Y*`.  The crate builds
//! `P` elementwise, constructs the family of monomial irreducible characters
//! attached to subsets `D ⊆ {1, …, n}` and admissible linear characters of
//! `A`, and machine-checks the structural statements behind the construction
//! (normality of the subgroup lattice, inertia groups, irreducibility,
//! monomiality, classification, maximal degree) with exact cyclotomic
//! arithmetic — no floating point anywhere.
//!
//! Module map:
//!
//! - [`ring`]: finite involutive rings and their elements.
//! - [`matrix`]: hermitian / unitriangular matrix arithmetic over such rings.
//! - [`cyclo`]: exact cyclotomic numbers with big-rational coefficients.
//! - [`chars`]: linear characters of `A⁺`, admissibility, restriction to the
//!   fixed set.
//! - [`group`]: the group `P`, its subgroup lattice, enumeration, cosets.
//! - [`reps`]: character tables, induction, inner products, inertia,
//!   the tensor family `V(D, λ)`, and the classification check.
//! - [`oracle`]: an independent monomial-matrix realization used to
//!   cross-check the character tables.
//! - [`verify`]: deterministic report builders driving the whole suite.

pub mod chars;
pub mod cyclo;
pub mod group;
pub mod matrix;
pub mod oracle;
pub mod reps;
pub mod ring;
pub mod verify;

pub use chars::LinearCharacter;
pub use cyclo::Cyclotomic;
pub use group::{GroupElement, GramForm, ModuleVector, Subgroup, SubgroupSpec, UnipotentGroup};
pub use matrix::{HermitianMatrix, SquareMatrix, UnitriangularMatrix};
pub use oracle::{MonomialMatrix, MonomialRep};
pub use reps::{CharacterTable, Classification, RepError, RepLabel};
pub use ring::{InvolutiveRing, RingElement};
pub use verify::{
    chars_report, character_report, classify_report, ring_report, verify_suite, CharacterReport,
    CharsReport, CheckResult, ClassifyReport, RingReport, VerifyReport,
};
