//! Error type shared by the fallible operations of this crate.
//!
//! Contract violations in the arithmetic layer (inverting zero, dividing by
//! the zero polynomial) panic instead: they are bugs in the caller, not data
//! conditions.  Everything a caller can trigger with well-formed but
//! unsuitable data is reported through [`Error`].

use core::fmt;

use crate::consistency::{Inconsistency, Side};
use crate::quat::{ConjClassKey, Quat};

#[derive(Clone, PartialEq, Eq)]
pub enum Error {
    /// A real point was passed where the characteristic polynomial of a
    /// non-real conjugacy class is required.
    RealInput,
    /// Two nodes expected to share a conjugacy class do not.
    NotEquivalent,
    /// The conjugacy class of a real quaternion is a singleton and carries no
    /// plane of homogeneous solutions.
    RealClass,
    /// The closed-form backward-shift value requires the two points to lie in
    /// distinct conjugacy classes.
    EquivalentNodes,
    /// A node list that must be pairwise distinct has a repeat.
    NodesNotDistinct,
    /// A node set touches some conjugacy class three or more times, which the
    /// interpolation machinery does not admit.
    AssumptionAViolated { class: ConjClassKey },
    /// The interpolation data is over-determined and contradicts itself.
    Inconsistent(Inconsistency),
    /// A prescribed backward-shift constraint does not solve its Sylvester
    /// equation: `alpha·q - q·beta` (got) must equal `c - d` (want).
    InvalidConstraint { index: usize, got: Quat, want: Quat },
    /// A polynomial expected in the two-sided homogeneous family fails one of
    /// the defining evaluations; the first failure is reported.
    NotMember { side: Side, node: Quat, value: Quat },
    /// The coefficient matrix of a linear system is not invertible.
    Singular,
    /// A parameter list does not match the number of slots it must fill.
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RealInput => write!(f, "characteristic polynomial requires a non-real point"),
            Error::NotEquivalent => write!(f, "nodes are not in the same conjugacy class"),
            Error::RealClass => write!(f, "the class of a real quaternion has no solution plane"),
            Error::EquivalentNodes => {
                write!(f, "closed form requires nodes from distinct conjugacy classes")
            }
            Error::NodesNotDistinct => write!(f, "nodes must be pairwise distinct"),
            Error::AssumptionAViolated { class } => {
                write!(f, "three or more nodes share the conjugacy class {}", class)
            }
            Error::Inconsistent(w) => write!(f, "inconsistent data: {}", w),
            Error::InvalidConstraint { index, got, want } => write!(
                f,
                "constraint {}: alpha·q - q·beta = {} but the data requires {}",
                index, got, want
            ),
            Error::NotMember { side, node, value } => write!(
                f,
                "not in the homogeneous family: {} value at {} is {}, expected 0",
                side, node, value
            ),
            Error::Singular => write!(f, "linear system is singular"),
            Error::ArityMismatch { expected, got } => {
                write!(f, "expected {} parameters, got {}", expected, got)
            }
        }
    }
}

impl fmt::Debug for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
