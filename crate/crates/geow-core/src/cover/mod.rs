//! Line-arrangement combinatorics and abelian branched-cover invariants.
//!
//! An [`Arrangement`] is a purely combinatorial incidence structure of named
//! points and lines (no coordinates). Blowing up every point yields a rational
//! surface `T` carrying a normal-crossing divisor `D`: the proper transforms of
//! the lines plus the exceptional curves. [`DivisorModel`] holds that divisor's
//! intersection combinatorics, and [`CoverData`] assigns each line a value in
//! `(Z/n)^k` describing an abelian cover of `T` branched along `D`.
//!
//! [`validate_cover`] checks the assignment (nonzero values of full order,
//! independence at the nodes, surjectivity), [`canonical_and_chern`] computes
//! `K²`, `e`, `χ_h`, and `σ` of the covering surface, and [`lift_curve`]
//! computes the genus and self-intersection of curve lifts via
//! Riemann-Hurwitz and adjunction. [`sigma9_package`] assembles the covering
//! surface of the Hesse arrangement as a [`crate::manifold::ManifoldClass`]
//! together with its resolved genus-9 square-(+1) symplectic surface.

mod arrangement;
mod branched;

pub use arrangement::Arrangement;
pub use branched::{
    canonical_and_chern, hesse_w_block, lift_curve, phi_paper, sigma9_package, validate_cover,
    CoverData, CoverInvariants, CoverReport, Crossing, CrossingKind, CurveLift, CurveRef,
    DivisorModel, Sigma9Package, StrataAudit,
};

/// Errors from arrangement parsing and cover arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    /// Malformed record in an arrangement or cover file.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// A point or line name was declared twice.
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    /// A record refers to a point that was never declared.
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    /// A record refers to a line that was never declared.
    #[error("unknown line `{0}`")]
    UnknownLine(String),
    /// Two lines share two or more points.
    #[error("lines `{0}` and `{1}` share two or more points")]
    LinesShareTwoPoints(String, String),
    /// Unsupported or malformed group specification.
    #[error("bad group spec: {0}")]
    BadGroup(String),
    /// A cover value has the wrong number of coordinates.
    #[error("value for `{component}` must have {expected} coordinates")]
    WrongValueLength { component: String, expected: usize },
    /// A line of the arrangement has no assigned cover value.
    #[error("no cover value assigned to line `{0}`")]
    MissingValue(String),
    /// Cover validation failed; the payload lists the failed checks.
    #[error("cover data fails {} validation check(s)", .0.len())]
    InvalidCover(Vec<String>),
    /// The canonical class of the cover does not descend to an integral class.
    #[error("canonical class is not integral at `{0}`")]
    NonIntegralPullback(String),
    /// `K² + e` is not divisible by 12.
    #[error("holomorphic Euler characteristic is not integral")]
    NonIntegralChi,
    /// `K² − 2e` is not divisible by 3.
    #[error("signature is not integral")]
    NonIntegralSignature,
    /// Riemann-Hurwitz yields an odd value for `2g − 2`.
    #[error("lift genus is not integral")]
    GenusNotIntegral,
    /// Riemann-Hurwitz yields a negative genus; no connected lift exists.
    #[error("lift genus is negative; the lift cannot be connected")]
    GenusNegative,
}
