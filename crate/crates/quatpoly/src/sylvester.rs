//! The Sylvester equation `a·q - q·b = delta` over the quaternions, and the
//! planes of homogeneous solutions attached to equivalent pairs.
//!
//! The real-linear map `q -> a·q - q·b` is invertible exactly when `a` and
//! `b` lie in *different* conjugacy classes; the inverse has the closed form
//! `q = (conj(a)·delta - delta·b) · X(b)⁻¹` with `X` the characteristic
//! quadratic of the class of `a`.  For an equivalent non-real pair the map
//! has a two-dimensional kernel [`PlaneH`], and the equation is solvable
//! exactly when `conj(a)·delta = delta·b`, with particular solution
//! `(2·Im a)⁻¹ · delta`.  For a real coincident pair the map is identically
//! zero.
//!
//! Planes are kept in a canonical basis - primitive integer coordinate
//! vectors, first nonzero coordinate positive - so equal constructions
//! compare equal structurally.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::conjclass::char_quadratic;
use crate::error::Error;
use crate::poly::QPoly;
use crate::quat::Quat;
use crate::rat::{rat_int, Rat};

/// A two-dimensional real-linear subspace of the quaternions, in canonical
/// basis form.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneH {
    b1: Quat,
    b2: Quat,
}

impl PlaneH {
    /// Canonicalizes a spanning pair.  Panics if the pair is linearly
    /// dependent; every caller in this crate constructs independent spans.
    pub(crate) fn from_span(v1: &Quat, v2: &Quat) -> PlaneH {
        let b1 = primitive_vector(v1);
        let b2 = primitive_vector(v2);
        // Parallel rational vectors canonicalize to the same primitive form.
        assert!(b1 != b2, "degenerate span for a solution plane");
        PlaneH { b1, b2 }
    }

    pub fn basis(&self) -> (&Quat, &Quat) {
        (&self.b1, &self.b2)
    }

    /// The member `u·b1 + v·b2`.
    pub fn member(&self, u: &Rat, v: &Rat) -> Quat {
        self.b1.scale(u) + self.b2.scale(v)
    }

    /// Coordinates of `m` in the canonical basis, if `m` lies in the plane.
    pub fn coords_of(&self, m: &Quat) -> Option<(Rat, Rat)> {
        // Four equations in two rational unknowns, by elimination.
        let mut rows: Vec<[Rat; 3]> = [
            [&self.b1.w, &self.b2.w, &m.w],
            [&self.b1.x, &self.b2.x, &m.x],
            [&self.b1.y, &self.b2.y, &m.y],
            [&self.b1.z, &self.b2.z, &m.z],
        ]
        .iter()
        .map(|r| [r[0].clone(), r[1].clone(), r[2].clone()])
        .collect();
        for col in 0..2 {
            let pivot = (col..rows.len()).find(|&r| !rows[r][col].is_zero())?;
            rows.swap(col, pivot);
            let p = rows[col][col].clone();
            for e in rows[col].iter_mut() {
                *e = &*e / &p;
            }
            for r in 0..rows.len() {
                if r != col && !rows[r][col].is_zero() {
                    let factor = rows[r][col].clone();
                    for c in 0..3 {
                        let delta = &factor * &rows[col][c];
                        rows[r][c] = &rows[r][c] - &delta;
                    }
                }
            }
        }
        if rows[2..].iter().any(|r| !r[2].is_zero()) {
            return None;
        }
        Some((rows[0][2].clone(), rows[1][2].clone()))
    }

    pub fn contains(&self, m: &Quat) -> bool {
        self.coords_of(m).is_some()
    }
}

impl fmt::Display for PlaneH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}, {}}}", self.b1, self.b2)
    }
}

impl fmt::Debug for PlaneH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Scales a nonzero rational vector to primitive integer coordinates with
/// the first nonzero coordinate positive.
fn primitive_vector(q: &Quat) -> Quat {
    assert!(!q.is_zero(), "primitive form of the zero vector");
    let comps = [&q.w, &q.x, &q.y, &q.z];
    let mut scale = BigInt::one();
    for c in comps {
        scale = scale.lcm(c.denom());
    }
    let ints: Vec<BigInt> = comps.iter().map(|c| c.numer() * &scale / c.denom()).collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = g.gcd(v);
    }
    let mut out: Vec<BigInt> = ints.iter().map(|v| v / &g).collect();
    if out.iter().find(|v| !v.is_zero()).map_or(false, |v| v.is_negative()) {
        for v in out.iter_mut() {
            *v = -&*v;
        }
    }
    let mut it = out.into_iter().map(Rat::from_integer);
    Quat::new(it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap())
}

/// Solution set of `a·q - q·b = delta`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SylvesterSolution {
    /// `a` and `b` in different classes: exactly one solution.
    Unique(Quat),
    /// Equivalent non-real pair, compatible right side: `particular + plane`.
    Affine { particular: Quat, plane: PlaneH },
    /// Real coincident pair with `delta == 0`: every quaternion solves.
    AllOfH,
    /// Equivalent non-real pair, incompatible right side; the witness is the
    /// failed identity `conj(a)·delta` (lhs) vs `delta·b` (rhs).
    Incompatible { lhs: Quat, rhs: Quat },
    /// Real coincident pair with `delta != 0`: the left side is identically
    /// zero, so nothing solves.
    IncompatibleReal { delta: Quat },
}

impl SylvesterSolution {
    pub fn is_solvable(&self) -> bool {
        !matches!(
            self,
            SylvesterSolution::Incompatible { .. } | SylvesterSolution::IncompatibleReal { .. }
        )
    }

    /// A particular solution, when one exists.
    pub fn particular(&self) -> Option<Quat> {
        match self {
            SylvesterSolution::Unique(q) => Some(q.clone()),
            SylvesterSolution::Affine { particular, .. } => Some(particular.clone()),
            SylvesterSolution::AllOfH => Some(Quat::zero()),
            _ => None,
        }
    }
}

/// Solves `a·q - q·b = delta` exactly, classifying the solution set.
pub fn solve(a: &Quat, b: &Quat, delta: &Quat) -> SylvesterSolution {
    if !a.equivalent(b) {
        let steered = &(&a.conj() * delta) - &(delta * b);
        let x = char_quadratic(a).eval_right(b);
        // x != 0 exactly because b is outside the class of a.
        return SylvesterSolution::Unique(&steered * &x.inv());
    }
    if a.is_real() {
        // Equivalent and real forces b == a; the map is identically zero.
        return if delta.is_zero() {
            SylvesterSolution::AllOfH
        } else {
            SylvesterSolution::IncompatibleReal { delta: delta.clone() }
        };
    }
    let lhs = &a.conj() * delta;
    let rhs = delta * b;
    if lhs != rhs {
        return SylvesterSolution::Incompatible { lhs, rhs };
    }
    let particular = &a.im().scale(&rat_int(2)).inv() * delta;
    SylvesterSolution::Affine {
        particular,
        plane: plane(a, b).expect("equivalent non-real pair has a plane"),
    }
}

/// The plane of homogeneous solutions `{q : a·q = q·b}` for an equivalent
/// non-real pair, in canonical basis form.
///
/// Errors: [`Error::NotEquivalent`] when the classes differ (the kernel is
/// trivial), [`Error::RealClass`] for a real pair (the kernel is all of the
/// quaternions, not a plane).
pub fn plane(a: &Quat, b: &Quat) -> Result<PlaneH, Error> {
    if !a.equivalent(b) {
        return Err(Error::NotEquivalent);
    }
    if a.is_real() {
        return Err(Error::RealClass);
    }
    if b == a {
        return Ok(PlaneH::from_span(&Quat::one(), &a.im()));
    }
    if *b == a.conj() {
        return Ok(orthocomplement_plane(&a.im()));
    }
    let ia = a.im();
    let ib = b.im();
    let v1 = &ia + &ib;
    let v2 = &Quat::from_real(ia.norm2()) - &(&ia * &ib);
    Ok(PlaneH::from_span(&v1, &v2))
}

/// Orthogonal complement of `span{1, im}` (with `im` imaginary and nonzero),
/// by exact row reduction of the two orthogonality constraints.
fn orthocomplement_plane(im: &Quat) -> PlaneH {
    // Constraint rows over coordinates (w, x, y, z): w = 0 and
    // x·im.x + y·im.y + z·im.z = 0.  The pivot is the first nonzero
    // imaginary coordinate; each free coordinate yields one basis vector.
    let coeffs = [im.x.clone(), im.y.clone(), im.z.clone()];
    let pivot = coeffs
        .iter()
        .position(|c| !c.is_zero())
        .expect("imaginary part of a non-real quaternion is nonzero");
    let mut basis: Vec<Quat> = Vec::new();
    for free in 0..3 {
        if free == pivot {
            continue;
        }
        let mut coords = [Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero()];
        coords[1 + free] = Rat::one();
        coords[1 + pivot] = -(&coeffs[free] / &coeffs[pivot]);
        let [w, x, y, z] = coords;
        basis.push(Quat::new(w, x, y, z));
    }
    PlaneH::from_span(&basis[0], &basis[1])
}

/// Closed form for the right value at `b` of the left backward shift of `f`
/// at `a`, valid when `a` and `b` lie in different conjugacy classes: the
/// unique solution of `a·s - s·b = f.eval_left(a) - f.eval_right(b)`.
///
/// Errors: [`Error::EquivalentNodes`] when the classes coincide (the
/// difference no longer determines the value).
pub fn backshift_value(f: &QPoly, a: &Quat, b: &Quat) -> Result<Quat, Error> {
    if a.equivalent(b) {
        return Err(Error::EquivalentNodes);
    }
    let delta = &f.eval_left(a) - &f.eval_right(b);
    match solve(a, b, &delta) {
        SylvesterSolution::Unique(s) => Ok(s),
        _ => unreachable!("distinct classes give a unique solution"),
    }
}
