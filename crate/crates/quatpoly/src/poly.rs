//! Polynomials with quaternion coefficients and a central variable.
//!
//! A [`QPoly`] is stored as its coefficient list in ascending degree, written
//! on the right of the variable: `f(z) = sum z^k · f_k`.  The variable
//! commutes with everything, the coefficients do not, so evaluation splits
//! into a *left* value `sum a^k · f_k` and a *right* value `sum f_k · a^k`.
//! The two agree when the point is real or the coefficients are.
//!
//! Left and right evaluation are not ring homomorphisms.  What survives is a
//! twisted product rule: with `v = g.eval_left(a)` nonzero,
//! `(g·f).eval_left(a) = v · f.eval_left(v⁻¹·a·v)`, and zero when `v` is zero
//! (mirrored for right evaluation, driven by the *right* factor).  See
//! [`product_eval_left`] and [`product_eval_right`].
//!
//! Division by a monic linear `z - a` exists on both sides and is computed by
//! synthetic division; the quotients are the backward shifts
//! [`QPoly::backshift_left`] and [`QPoly::backshift_right`], the remainders
//! the corresponding evaluations.  General division with remainder works
//! against any nonzero divisor because the coefficients form a division ring.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::quat::Quat;

/// Polynomial over the quaternions, coefficient list ascending in degree.
///
/// The zero polynomial is the empty list; a stored leading coefficient is
/// never zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Quat>,
}

impl QPoly {
    /// Builds from an ascending coefficient list, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Quat>) -> Self {
        while coeffs.last().map_or(false, Quat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(Quat::one())
    }

    pub fn constant(c: Quat) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The variable `z` itself.
    pub fn var() -> Self {
        QPoly::from_coeffs(vec![Quat::zero(), Quat::one()])
    }

    /// The monic linear polynomial `z - a`.
    pub fn z_minus(a: &Quat) -> Self {
        QPoly::from_coeffs(vec![-a, Quat::one()])
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == Quat::one()
    }

    /// Coefficient of `z^k`, zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Quat {
        self.coeffs.get(k).cloned().unwrap_or_else(Quat::zero)
    }

    pub fn coeffs(&self) -> &[Quat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Quat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, |c| *c == Quat::one())
    }

    /// Whether every coefficient is real, which makes the polynomial central.
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(Quat::is_real)
    }

    /// `z^k · self`.
    pub fn shifted(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Quat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    /// Coefficient-wise quaternionic conjugation.
    ///
    /// This is an anti-homomorphism, `(f·g).conjugate() = g.conjugate() ·
    /// f.conjugate()`, and `f · f.conjugate()` always has real coefficients.
    pub fn conjugate(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(Quat::conj).collect(),
        }
    }

    /// `c · f`: every coefficient multiplied by `c` on the left.
    pub fn mul_const_left(&self, c: &Quat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|f| c * f).collect())
    }

    /// `f · c`: every coefficient multiplied by `c` on the right.
    pub fn mul_const_right(&self, c: &Quat) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|f| f * c).collect())
    }

    /// Left value `sum a^k · f_k`, by Horner's scheme multiplying on the left.
    pub fn eval_left(&self, a: &Quat) -> Quat {
        let mut acc = Quat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(a * &acc) + c;
        }
        acc
    }

    /// Right value `sum f_k · a^k`, by Horner's scheme multiplying on the right.
    pub fn eval_right(&self, a: &Quat) -> Quat {
        let mut acc = Quat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * a) + c;
        }
        acc
    }

    /// Synthetic division from the left: `f = rem + (z - a) · quot`.
    ///
    /// The remainder is `f.eval_left(a)` and the quotient is the left
    /// backward shift of `f` at `a`.
    pub fn divmod_left(&self, a: &Quat) -> (QPoly, Quat) {
        let n = match self.degree() {
            None | Some(0) => return (QPoly::zero(), self.coeff(0)),
            Some(n) => n,
        };
        let mut quot = vec![Quat::zero(); n];
        quot[n - 1] = self.coeffs[n].clone();
        for k in (1..n).rev() {
            quot[k - 1] = &self.coeffs[k] + &(a * &quot[k]);
        }
        let rem = &self.coeffs[0] + &(a * &quot[0]);
        (QPoly::from_coeffs(quot), rem)
    }

    /// Synthetic division from the right: `f = rem + quot · (z - a)`.
    ///
    /// The remainder is `f.eval_right(a)` and the quotient is the right
    /// backward shift of `f` at `a`.
    pub fn divmod_right(&self, a: &Quat) -> (QPoly, Quat) {
        let n = match self.degree() {
            None | Some(0) => return (QPoly::zero(), self.coeff(0)),
            Some(n) => n,
        };
        let mut quot = vec![Quat::zero(); n];
        quot[n - 1] = self.coeffs[n].clone();
        for k in (1..n).rev() {
            quot[k - 1] = &self.coeffs[k] + &(&quot[k] * a);
        }
        let rem = &self.coeffs[0] + &(&quot[0] * a);
        (QPoly::from_coeffs(quot), rem)
    }

    /// The left backward shift: the quotient in `f = f.eval_left(a) + (z - a)
    /// · quot`.
    pub fn backshift_left(&self, a: &Quat) -> QPoly {
        self.divmod_left(a).0
    }

    /// The right backward shift: the quotient in `f = f.eval_right(a) + quot
    /// · (z - a)`.
    pub fn backshift_right(&self, a: &Quat) -> QPoly {
        self.divmod_right(a).0
    }

    /// Division with remainder, divisor on the left: `f = g·q + r` with
    /// `deg r < deg g`.
    ///
    /// Panics if `g` is zero.
    pub fn div_rem_left(&self, g: &QPoly) -> (QPoly, QPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let dg = g.degree().unwrap();
        let lead_inv = g.leading().unwrap().inv();
        let mut r = self.clone();
        let width = self.coeffs.len().saturating_sub(dg);
        let mut q = vec![Quat::zero(); width];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = &lead_inv * r.leading().unwrap();
            r = &r - &g.mul_const_right(&c).shifted(dr - dg);
            q[dr - dg] = c;
        }
        (QPoly::from_coeffs(q), r)
    }

    /// Division with remainder, divisor on the right: `f = q·g + r` with
    /// `deg r < deg g`.
    ///
    /// Panics if `g` is zero.
    pub fn div_rem_right(&self, g: &QPoly) -> (QPoly, QPoly) {
        assert!(!g.is_zero(), "division by zero polynomial");
        let dg = g.degree().unwrap();
        let lead_inv = g.leading().unwrap().inv();
        let mut r = self.clone();
        let width = self.coeffs.len().saturating_sub(dg);
        let mut q = vec![Quat::zero(); width];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = r.leading().unwrap() * &lead_inv;
            r = &r - &g.mul_const_left(&c).shifted(dr - dg);
            q[dr - dg] = c;
        }
        (QPoly::from_coeffs(q), r)
    }
}

/// Left value of the product `g·f` at `a` without forming the product.
///
/// With `v = g.eval_left(a)`: the value is `v · f.eval_left(v⁻¹·a·v)` when
/// `v` is nonzero, and zero when `v` is zero.
pub fn product_eval_left(g: &QPoly, f: &QPoly, a: &Quat) -> Quat {
    let v = g.eval_left(a);
    if v.is_zero() {
        return Quat::zero();
    }
    let twisted = a.conjugate_by(&v);
    &v * &f.eval_left(&twisted)
}

/// Right value of the product `g·f` at `a` without forming the product.
///
/// With `v = f.eval_right(a)`: the value is `g.eval_right(v·a·v⁻¹) · v` when
/// `v` is nonzero, and zero when `v` is zero.  Note the roles: the *right*
/// factor drives the twist on the right side.
pub fn product_eval_right(g: &QPoly, f: &QPoly, a: &Quat) -> Quat {
    let v = f.eval_right(a);
    if v.is_zero() {
        return Quat::zero();
    }
    let twisted = a.conjugate_by(&v.inv());
    &g.eval_right(&twisted) * &v
}

// ---- Add ----

impl Add<&QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Add<QPoly> for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        self + &rhs
    }
}

impl Add<&QPoly> for QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        &self + rhs
    }
}

impl Add<QPoly> for QPoly {
    type Output = QPoly;
    fn add(self, rhs: QPoly) -> QPoly {
        &self + &rhs
    }
}

// ---- Sub ----

impl Sub<&QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub<QPoly> for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        self - &rhs
    }
}

impl Sub<&QPoly> for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        &self - rhs
    }
}

impl Sub<QPoly> for QPoly {
    type Output = QPoly;
    fn sub(self, rhs: QPoly) -> QPoly {
        &self - &rhs
    }
}

// ---- Mul ----

impl Mul<&QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Quat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Mul<QPoly> for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        self * &rhs
    }
}

impl Mul<&QPoly> for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        &self * rhs
    }
}

impl Mul<QPoly> for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

// ---- Neg ----

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        -&self
    }
}

// ---- Display ----

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = term_string(c, k);
            if first {
                write!(f, "{}", term)?;
                first = false;
            } else if let Some(rest) = term.strip_prefix('-') {
                write!(f, " - {}", rest)?;
            } else {
                write!(f, " + {}", term)?;
            }
        }
        Ok(())
    }
}

/// One printed term `c·z^k`; multi-component or fractional coefficients are
/// parenthesized so the rendering stays unambiguous.
fn term_string(c: &Quat, k: usize) -> alloc::string::String {
    use alloc::format;
    let pow = match k {
        0 => alloc::string::String::new(),
        1 => format!("z"),
        _ => format!("z^{}", k),
    };
    if k == 0 {
        return if c.component_count() > 1 {
            format!("({})", c)
        } else {
            format!("{}", c)
        };
    }
    if *c == Quat::one() {
        return pow;
    }
    if *c == -Quat::one() {
        return format!("-{}", pow);
    }
    if c.component_count() > 1 {
        return format!("({}){}", c, pow);
    }
    // Single nonzero component: pull the sign out, parenthesize fractions.
    let (sign, mag) = if (c.w.clone() + c.x.clone() + c.y.clone() + c.z.clone())
        .is_negative()
    {
        ("-", -c)
    } else {
        ("", c.clone())
    };
    if mag.has_fraction() {
        format!("{}({}){}", sign, mag, pow)
    } else {
        format!("{}{}{}", sign, mag, pow)
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use alloc::string::ToString;

    fn zi() -> QPoly {
        // z·i, a handy non-real sample.
        QPoly::from_coeffs(vec![Quat::zero(), Quat::i()])
    }

    #[test]
    fn construction_trims() {
        let f = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::zero()]);
        assert_eq!(f.degree(), Some(0));
        assert!(QPoly::from_coeffs(vec![Quat::zero()]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn central_variable_multiplication() {
        // (z-i)(z+i) = z² + 1: the cross terms cancel because z is central.
        let f = QPoly::z_minus(&Quat::i());
        let g = QPoly::z_minus(&-Quat::i());
        let prod = &f * &g;
        assert_eq!(
            prod,
            QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()])
        );
        // Coefficients do not commute: (z-i)(z-j) != (z-j)(z-i).
        let a = QPoly::z_minus(&Quat::i()) * QPoly::z_minus(&Quat::j());
        let b = QPoly::z_minus(&Quat::j()) * QPoly::z_minus(&Quat::i());
        assert_ne!(a, b);
    }

    #[test]
    fn linear_factor_swap_identity() {
        // (z-i)(i+j) = (i+j)(z-j): the same polynomial reached from both
        // sides, the one-variable face of equivalence.
        let lhs = QPoly::z_minus(&Quat::i()) * QPoly::constant(Quat::i() + Quat::j());
        let rhs = QPoly::constant(Quat::i() + Quat::j()) * QPoly::z_minus(&Quat::j());
        assert_eq!(lhs, rhs);
        assert_eq!(
            lhs,
            QPoly::from_coeffs(vec![Quat::from_ints(1, 0, 0, -1), Quat::from_ints(0, 1, 1, 0)])
        );
    }

    #[test]
    fn conjugate_polynomial() {
        // (z·i + j).conjugate() = z·(-i) - j.
        let f = QPoly::from_coeffs(vec![Quat::j(), Quat::i()]);
        assert_eq!(
            f.conjugate(),
            QPoly::from_coeffs(vec![-Quat::j(), -Quat::i()])
        );
        // (fg)' = g'f' and f·f' is real.
        let g = QPoly::from_coeffs(vec![Quat::from_ints(1, 2, 0, -1), Quat::k()]);
        assert_eq!((&f * &g).conjugate(), &g.conjugate() * &f.conjugate());
        assert!((&f * &f.conjugate()).is_real());
        let norm = QPoly::z_minus(&Quat::i()) * QPoly::z_minus(&Quat::i()).conjugate();
        assert_eq!(
            norm,
            QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()])
        );
    }

    #[test]
    fn left_and_right_evaluation() {
        // (z·j) at i: left i·j = k, right j·i = -k.
        assert_eq!(zi().eval_left(&Quat::j()), Quat::k() * Quat::zero() + Quat::j() * Quat::i());
        let f = QPoly::from_coeffs(vec![Quat::zero(), Quat::j()]);
        assert_eq!(f.eval_left(&Quat::i()), Quat::k());
        assert_eq!(f.eval_right(&Quat::i()), -Quat::k());
        // Real point: both sides agree.
        let two = Quat::from_ints(2, 0, 0, 0);
        assert_eq!(f.eval_left(&two), f.eval_right(&two));
        // Real coefficients: both sides agree at any point.
        let real = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]);
        let p = Quat::from_ints(1, 2, -1, 3);
        assert_eq!(real.eval_left(&p), real.eval_right(&p));
        assert_eq!(real.eval_left(&Quat::i()), Quat::zero());
    }

    #[test]
    fn conjugate_swaps_evaluation_sides() {
        // f.eval_left(a) = conj(f.conjugate().eval_right(conj(a))).
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, -1, 0, 2),
            Quat::j(),
            Quat::from_ints(0, 3, 1, 0),
        ]);
        let a = Quat::from_ints(1, 1, -2, 0);
        assert_eq!(
            f.eval_left(&a),
            f.conjugate().eval_right(&a.conj()).conj()
        );
    }

    #[test]
    fn product_evaluation_rule() {
        // Left value of (g·f) through the twisted rule, nonvanishing branch.
        let g = QPoly::z_minus(&Quat::i());
        let f = QPoly::constant(Quat::j());
        let a = Quat::j();
        let direct = (&g * &f).eval_left(&a);
        assert_eq!(product_eval_left(&g, &f, &a), direct);
        assert_eq!(direct, Quat::from_ints(-1, 0, 0, -1));
        // Vanishing branch: g.eval_left(i) = 0 forces the product to vanish.
        let h = QPoly::from_coeffs(vec![Quat::from_ints(2, 0, 1, 0), Quat::k()]);
        assert_eq!(product_eval_left(&g, &h, &Quat::i()), Quat::zero());
        assert_eq!((&g * &h).eval_left(&Quat::i()), Quat::zero());
        // Right value mirrors, driven by the right factor.
        let direct_r = (&g * &f).eval_right(&a);
        assert_eq!(product_eval_right(&g, &f, &a), direct_r);
        // Real point: plain multiplicativity.
        let two = Quat::from_ints(2, 0, 0, 0);
        assert_eq!(
            (&g * &h).eval_left(&two),
            g.eval_left(&two) * h.eval_left(&two)
        );
    }

    #[test]
    fn synthetic_division_left() {
        // z² + 1 = (z - i)(z + i) exactly.
        let f = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]);
        let (q, r) = f.divmod_left(&Quat::i());
        assert_eq!(q, QPoly::from_coeffs(vec![Quat::i(), Quat::one()]));
        assert_eq!(r, Quat::zero());
        // z·j = k + (z - i)·j.
        let f = QPoly::from_coeffs(vec![Quat::zero(), Quat::j()]);
        let (q, r) = f.divmod_left(&Quat::i());
        assert_eq!(q, QPoly::constant(Quat::j()));
        assert_eq!(r, Quat::k());
        // Reconstruction: f = rem + (z-a)·quot, rem = left value.
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, 0, -2, 0),
            Quat::from_ints(0, 1, 1, 1),
            Quat::from_ints(3, 0, 0, -1),
        ]);
        let a = Quat::from_ints(0, 2, -1, 1);
        let (q, r) = f.divmod_left(&a);
        assert_eq!(r, f.eval_left(&a));
        assert_eq!(
            QPoly::constant(r) + QPoly::z_minus(&a) * q,
            f
        );
    }

    #[test]
    fn synthetic_division_right() {
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, 0, -2, 0),
            Quat::from_ints(0, 1, 1, 1),
            Quat::from_ints(3, 0, 0, -1),
        ]);
        let a = Quat::from_ints(0, 2, -1, 1);
        let (q, r) = f.divmod_right(&a);
        assert_eq!(r, f.eval_right(&a));
        assert_eq!(QPoly::constant(r) + q * QPoly::z_minus(&a), f);
        // A constant divides to (0, itself).
        let c = QPoly::constant(Quat::from_ints(0, 0, 1, 5));
        let (q, r) = c.divmod_right(&a);
        assert!(q.is_zero());
        assert_eq!(r, Quat::from_ints(0, 0, 1, 5));
    }

    #[test]
    fn backshift_difference_identity() {
        // a·s - s·b = f.eval_left(a) - f.eval_right(b), with s the right
        // value of the left backward shift at b.
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, 2, 0, 0),
            Quat::from_ints(0, 0, 1, -1),
            Quat::from_ints(2, 0, 0, 1),
            Quat::j(),
        ]);
        let a = Quat::from_ints(1, -1, 0, 2);
        let b = Quat::from_ints(0, 3, 1, 0);
        let s = f.backshift_left(&a).eval_right(&b);
        assert_eq!(&(&a * &s) - &(&s * &b), f.eval_left(&a) - f.eval_right(&b));
    }

    #[test]
    fn backshift_cross_evaluation_closed_form() {
        // The double-sum closed form for the right value of the left shift:
        // sum_k sum_j a^j · f_{k+j+1} · b^k, checked against the division.
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, 2, 0, 0),
            Quat::from_ints(0, 0, 1, -1),
            Quat::from_ints(2, 0, 0, 1),
            Quat::j(),
        ]);
        let a = Quat::from_ints(1, -1, 0, 2);
        let b = Quat::from_ints(0, 3, 1, 0);
        let n = f.degree().unwrap();
        let mut sum = Quat::zero();
        for k in 0..n {
            for j in 0..(n - k) {
                let mut apow = Quat::one();
                for _ in 0..j {
                    apow = &apow * &a;
                }
                let mut bpow = Quat::one();
                for _ in 0..k {
                    bpow = &bpow * &b;
                }
                sum = &sum + &(&(&apow * &f.coeff(k + j + 1)) * &bpow);
            }
        }
        assert_eq!(f.backshift_left(&a).eval_right(&b), sum);
        // The same value is the left evaluation of the right shift.
        assert_eq!(f.backshift_right(&b).eval_left(&a), sum);
    }

    #[test]
    fn polynomial_division_left_and_right() {
        // z² + 1 = (z - i)·(z + i) + 0 with the divisor on the left.
        let f = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]);
        let g = QPoly::z_minus(&Quat::i());
        let (q, r) = f.div_rem_left(&g);
        assert_eq!(q, QPoly::from_coeffs(vec![Quat::i(), Quat::one()]));
        assert!(r.is_zero());
        // General reconstruction, both sides, non-monic divisor.
        let f = QPoly::from_coeffs(vec![
            Quat::from_ints(1, 1, 0, 0),
            Quat::from_ints(0, 2, -1, 0),
            Quat::from_ints(1, 0, 0, 3),
            Quat::from_ints(0, 0, 1, 0),
        ]);
        let g = QPoly::from_coeffs(vec![Quat::from_ints(1, 0, -1, 0), Quat::from_ints(0, 1, 0, 1)]);
        let (q, r) = f.div_rem_left(&g);
        assert!(r.degree() < g.degree());
        assert_eq!(&g * &q + &r, f);
        let (q, r) = f.div_rem_right(&g);
        assert!(r.degree() < g.degree());
        assert_eq!(&q * &g + &r, f);
    }

    #[test]
    #[should_panic(expected = "division by zero polynomial")]
    fn division_by_zero_polynomial_panics() {
        let _ = QPoly::one().div_rem_left(&QPoly::zero());
    }

    #[test]
    fn display_forms() {
        assert_eq!(QPoly::zero().to_string(), "0");
        let f = QPoly::from_coeffs(vec![Quat::from_ints(1, 0, 0, -1), Quat::from_ints(0, 1, 1, 0)]);
        assert_eq!(f.to_string(), "(1-k) + (i+j)z");
        let g = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]);
        assert_eq!(g.to_string(), "1 + z^2");
        let h = QPoly::from_coeffs(vec![Quat::zero(), -Quat::one()]);
        assert_eq!(h.to_string(), "-z");
        let m = QPoly::from_coeffs(vec![
            Quat::from_ints(0, 0, 0, 0),
            Quat::new(rat(-1, 2), rat_int(0), rat_int(0), rat_int(0)),
            Quat::from_ints(0, 0, 2, 0),
        ]);
        assert_eq!(m.to_string(), "-(1/2)z + 2jz^2");
        assert_eq!(QPoly::z_minus(&Quat::i()).to_string(), "-i + z");
    }
}
