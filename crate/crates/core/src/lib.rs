//! Exact computation in partition algebras `CA_k(n)` over the rational-function
//! field `Q(n)`.
//!
//! The crate builds, from scratch and without floating point:
//!
//! - exact arithmetic in `Q` and `Q(n)` ([`arith`]);
//! - partition diagrams and the partition monoid `A_k` ([`diagram`]);
//! - the partition algebra `CA_k(n)` on the diagram basis ([`algebra`]);
//! - Young's matrix units for symmetric group algebras ([`young`]);
//! - the Bratteli diagram of the partition-algebra tower and vacillating
//!   tableaux ([`bratteli`]);
//! - a recursive matrix-unit basis of `CA_k(n)` seeded by Young's units
//!   ([`units`]);
//! - set-partition tableaux, the vacillating-tableau bijection, and the RSK
//!   correspondence for partition diagrams ([`bijections`]);
//! - the diagram-indexed monoid basis `{m_pi}` together with its combinatorial
//!   product rule, multiplication tables, and transition matrices ([`monoid`]).
//!
//! Everything is parametric in the coefficient field: computations run either
//! symbolically over `Q(n)` or over `Q` at a fixed rational value of the
//! parameter (see [`scalar::Scalar`]). The [`verify`] module packages the
//! acceptance checks used by the test suite and the `parmon verify` command.

pub mod algebra;
pub mod arith;
pub mod bijections;
pub mod bratteli;
pub mod diagram;
pub mod monoid;
pub mod scalar;
pub mod units;
pub mod verify;
pub mod young;

pub use arith::{ArithError, Polynomial, Rational, RationalFunction};
pub use scalar::Scalar;

/// Default cap on the diagram order accepted by enumeration and construction
/// entry points. `Bell(2k)` grows fast; orders past 4 are far beyond desk
/// scale for exact matrix-unit computations.
pub const DEFAULT_ORDER_LIMIT: usize = 4;
