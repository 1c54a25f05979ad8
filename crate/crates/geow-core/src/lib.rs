//! Invariant bookkeeping for closed symplectic 4-manifold constructions.
//!
//! The crate tracks a manifold as a record of numerical invariants (Euler
//! characteristic, signature, first Betti number) plus established
//! qualitative facts (fundamental group, spin type, symplectic structure,
//! minimality) and an inventory of embedded surfaces. Cut and paste
//! operations (blow-ups, symplectic resolution, fiber sums, torus
//! surgeries) transform the record conservatively: anything an operation
//! does not preserve degrades to `Unknown` instead of being guessed.
//!
//! Modules:
//! - [`manifold`]: the invariant record and the operations.
//! - [`blocks`]: the builtin building block library.
//! - [`cover`]: an abelian branched cover of the plane over a line
//!   arrangement, computed from incidence data.
//! - [`group`]: finitely presented group kernel (abelianization, coset
//!   enumeration, quotient identification).
//! - [`recipe`]: a declarative language binding blocks and operations,
//!   with recomputed assertions.
//! - [`scan`]: small geography searches over the block and sum inventory.

pub mod blocks;
pub mod cover;
pub mod group;
pub mod manifold;
pub mod recipe;
pub mod scan;

pub use group::{AbelianInvariants, CosetTable, GroupPresentation, Word};
pub use manifold::{
    BmyStatus, ManifoldClass, Minimal, OpError, Pi1, Spin, StandardForm, Surface, SurfaceKind,
};
pub use recipe::{Recipe, RecipeError, Report};
pub use scan::{geography_scan, ScanHit};
