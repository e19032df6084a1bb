//! Exact arithmetic for polynomials over the real quaternions, and Lagrange
//! interpolation with one- and two-sided evaluation conditions.
//!
//! The scalars are quaternions with rational components, so every computation
//! here is exact; there is no floating point anywhere in this crate.  Because
//! the scalars do not commute, a polynomial has a *left* and a *right* value at
//! each point, interpolation conditions come in left/right flavours, and the
//! familiar Lagrange/Newton machinery needs the conjugacy structure of the
//! quaternions to work at all.
//!
//! Module map:
//!
//! * [`rat`] - exact rational scalars.
//! * [`quat`] - quaternions, conjugation, and conjugacy classes.
//! * [`poly`] - polynomials with quaternion coefficients: ring operations,
//!   left/right evaluation, division, and backward shifts.
//! * [`conjclass`] - characteristic polynomials of conjugacy classes and
//!   minimal polynomials of finite node sets.
//! * [`sylvester`] - the equation `a·q - q·b = delta` and the planes of
//!   homogeneous solutions attached to equivalent pairs.
//! * [`consistency`] - transferring values between equivalent nodes, and
//!   reduction of raw interpolation data to a consistent normal form.
//! * [`lagrange`] - elementary interpolants and the full solution family of a
//!   reduced problem, including constrained variants.
//! * [`newton`] - Newton-style incremental schemes and linear-system solvers
//!   over the quaternions.
//!
//! The crate is `no_std` (it allocates, but never needs an operating system);
//! the companion CLI crate carries all I/O.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod conjclass;
pub mod consistency;
pub mod error;
pub mod lagrange;
pub mod newton;
pub mod poly;
pub mod quat;
pub mod rat;
pub mod sylvester;

pub use conjclass::NodeSet;
pub use consistency::{RawProblem, ReducedProblem, Side};
pub use error::Error;
pub use lagrange::{MembershipReport, PairedTerm, SolutionSet};
pub use newton::{NewtonCoeffs, QMatrix, UnknownSide};
pub use poly::QPoly;
pub use quat::{ConjClassKey, Quat};
pub use rat::Rat;
pub use sylvester::{PlaneH, SylvesterSolution};
