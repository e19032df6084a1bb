//! Exact quaternions over the rationals and their conjugacy structure.
//!
//! A [`Quat`] is `w + x·i + y·j + z·k` with rational components, multiplied by
//! the Hamilton relations `i² = j² = k² = ijk = -1`.  The ring is a division
//! ring: every nonzero quaternion has an inverse `conj(a)/norm2(a)`.
//!
//! Two quaternions are *equivalent* when one is `h⁻¹·a·h` for some nonzero
//! `h`, which happens exactly when their real parts and norms agree.  The
//! equivalence class of a non-real quaternion is a 2-sphere; the class of a
//! real one is a singleton.  [`ConjClassKey`] is the exact invariant pair
//! (trace, squared norm) that names a class.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rat::{rat_int, Rat};

/// A quaternion `w + x·i + y·j + z·k` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quat {
    pub w: Rat,
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Quat {
    pub fn new(w: Rat, x: Rat, y: Rat, z: Rat) -> Self {
        Quat { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quat::new(rat_int(w), rat_int(x), rat_int(y), rat_int(z))
    }

    pub fn from_real(r: Rat) -> Self {
        Quat::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn zero() -> Self {
        Quat::from_ints(0, 0, 0, 0)
    }

    pub fn one() -> Self {
        Quat::from_ints(1, 0, 0, 0)
    }

    pub fn i() -> Self {
        Quat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Quat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Quat::from_ints(0, 0, 0, 1)
    }

    /// Real part, as a rational.
    pub fn re(&self) -> Rat {
        self.w.clone()
    }

    /// Imaginary part `x·i + y·j + z·k`.
    pub fn im(&self) -> Quat {
        Quat::new(Rat::zero(), self.x.clone(), self.y.clone(), self.z.clone())
    }

    /// Quaternionic conjugate `w - x·i - y·j - z·k`.
    pub fn conj(&self) -> Quat {
        Quat::new(self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }

    /// Squared norm `w² + x² + y² + z²`; equals `self * self.conj()`.
    pub fn norm2(&self) -> Rat {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    /// Scalar multiple `r·self`.
    pub fn scale(&self, r: &Rat) -> Quat {
        Quat::new(r * &self.w, r * &self.x, r * &self.y, r * &self.z)
    }

    /// Multiplicative inverse `conj(self)/norm2(self)`.
    ///
    /// Panics if `self` is zero.
    pub fn inv(&self) -> Quat {
        assert!(!self.is_zero(), "inverse of zero quaternion");
        let n = self.norm2();
        self.conj().scale(&n.recip())
    }

    /// Whether `self` and `other` lie in the same conjugacy class, i.e. have
    /// equal real parts and equal norms.
    pub fn equivalent(&self, other: &Quat) -> bool {
        self.w == other.w && self.norm2() == other.norm2()
    }

    /// `h⁻¹ · self · h`, a member of the class of `self`.
    ///
    /// Panics if `h` is zero.
    pub fn conjugate_by(&self, h: &Quat) -> Quat {
        assert!(!h.is_zero(), "conjugation by zero quaternion");
        &(&h.inv() * self) * h
    }

    /// The exact invariant naming the conjugacy class of `self`.
    pub fn class_key(&self) -> ConjClassKey {
        ConjClassKey {
            trace: rat_int(2) * &self.w,
            norm2: self.norm2(),
        }
    }

    /// Number of nonzero components, used by pretty-printers.
    pub fn component_count(&self) -> usize {
        [&self.w, &self.x, &self.y, &self.z]
            .iter()
            .filter(|c| !c.is_zero())
            .count()
    }

    /// Whether any component has a denominator other than one.
    pub fn has_fraction(&self) -> bool {
        ![&self.w, &self.x, &self.y, &self.z]
            .iter()
            .all(|c| c.denom().is_one())
    }
}

/// Invariant pair (trace `2·Re a`, squared norm) identifying a conjugacy
/// class.  Two quaternions are equivalent exactly when their keys are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConjClassKey {
    pub trace: Rat,
    pub norm2: Rat,
}

impl ConjClassKey {
    /// A class is a singleton `{a}` with `a` real exactly when
    /// `norm2 == (trace/2)²`.
    pub fn is_real_class(&self) -> bool {
        let half = &self.trace / rat_int(2);
        self.norm2 == &half * &half
    }
}

impl fmt::Display for ConjClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(trace {}, norm2 {})", self.trace, self.norm2)
    }
}

impl fmt::Debug for ConjClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ---- Add ----

impl Add<&Quat> for &Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        Quat::new(&self.w + &rhs.w, &self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Add<Quat> for &Quat {
    type Output = Quat;
    fn add(self, rhs: Quat) -> Quat {
        self + &rhs
    }
}

impl Add<&Quat> for Quat {
    type Output = Quat;
    fn add(self, rhs: &Quat) -> Quat {
        &self + rhs
    }
}

impl Add<Quat> for Quat {
    type Output = Quat;
    fn add(self, rhs: Quat) -> Quat {
        &self + &rhs
    }
}

// ---- Sub ----

impl Sub<&Quat> for &Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        Quat::new(&self.w - &rhs.w, &self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Sub<Quat> for &Quat {
    type Output = Quat;
    fn sub(self, rhs: Quat) -> Quat {
        self - &rhs
    }
}

impl Sub<&Quat> for Quat {
    type Output = Quat;
    fn sub(self, rhs: &Quat) -> Quat {
        &self - rhs
    }
}

impl Sub<Quat> for Quat {
    type Output = Quat;
    fn sub(self, rhs: Quat) -> Quat {
        &self - &rhs
    }
}

// ---- Mul ----

impl Mul<&Quat> for &Quat {
    type Output = Quat;
    fn mul(self, rhs: &Quat) -> Quat {
        let (a, b) = (self, rhs);
        Quat::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }
}

impl Mul<Quat> for &Quat {
    type Output = Quat;
    fn mul(self, rhs: Quat) -> Quat {
        self * &rhs
    }
}

impl Mul<&Quat> for Quat {
    type Output = Quat;
    fn mul(self, rhs: &Quat) -> Quat {
        &self * rhs
    }
}

impl Mul<Quat> for Quat {
    type Output = Quat;
    fn mul(self, rhs: Quat) -> Quat {
        &self * &rhs
    }
}

// ---- Neg ----

impl Neg for &Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        Quat::new(-self.w.clone(), -self.x.clone(), -self.y.clone(), -self.z.clone())
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        -&self
    }
}

// ---- Display ----

impl fmt::Display for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, unit) in [(&self.w, ""), (&self.x, "i"), (&self.y, "j"), (&self.z, "k")] {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let a = c.abs();
            if unit.is_empty() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", unit)?;
            } else {
                write!(f, "{}{}", a, unit)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
