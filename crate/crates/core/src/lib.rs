//! Exact multiplier ideals of line arrangements through the origin of
//! affine 3-space.
//!
//! A line arrangement is stored as its set of direction points in the
//! projective plane ([`PointSet`]). From the saturated ideal of those points
//! the crate computes the chain of degree envelopes, classifies the
//! arrangement, and assembles the multiplier ideals `J(I^λ)`, the jumping
//! numbers, and the log canonical threshold in closed form. Every step runs
//! over the rationals with reduced Gröbner bases as canonical forms.
//!
//! ```
//! use linecone::{classify, lct, PointSet, rat};
//!
//! let z = PointSet::parse(&[["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"]]).unwrap();
//! let c = classify(&z).unwrap();
//! assert_eq!(lct(&c).unwrap(), rat(5, 3));
//! ```

pub mod arrangement;
pub mod envelope;
pub mod error;
pub mod fixtures;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod monomial;
pub mod multiplier;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod zerodim;

pub use arrangement::{
    graded_piece, ideal_of_points, points_on_conic, symbolic_power, vanishes_on, GradedPiece, PointP2, PointSet,
};
pub use envelope::{
    classify, envelope, envelope_report, generator_degrees, geometric_generating_degrees,
    is_smooth_plane_curve, Classification, EnvelopeEntry, EnvelopeKind, EnvelopeReport,
};
pub use error::{Error, Result};
pub use ideal::Ideal;
pub use linalg::{kernel_basis, RatMatrix};
pub use monomial::{monomials_of_degree, Monomial, MonomialOrder, Var};
pub use multiplier::{
    candidate_lambdas, closed_form_below_three, jumping_numbers, lct, membership_by_valuation, multiplier_ideal,
    power_of_m, Branch, JumpTable, Lambda, MultiplierIdealResult, LAMBDA_CAP,
};
pub use oracle::{
    cross_check, default_grid, monomial_mi, valuation_test_polys, verify_chart_identity, CheckOutcome, CrossCheckReport,
    NewtonPolyhedron,
};
pub use poly::{poly, Poly};
pub use rational::{format_rat, parse_rat, rat, Rat};
pub use zerodim::{hilbert_function, radical_zero_dim, zero_dim_report, ZeroDimReport};

/// Guide chapters, compiled as doctests so their snippets stay current.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/ideals.md")]
    mod ideals {}
    #[doc = include_str!("../../../book/src/arrangements.md")]
    mod arrangements {}
    #[doc = include_str!("../../../book/src/envelopes.md")]
    mod envelopes {}
    #[doc = include_str!("../../../book/src/multiplier.md")]
    mod multiplier {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
