//! One- and two-sided Lagrange interpolation: elementary interpolants, the
//! complete solution family of a reduced problem, constrained variants, and
//! membership in the homogeneous solution set.
//!
//! A reduced problem (see [`crate::consistency`]) carries `k` paired
//! conditions, left-only conditions, and right-only conditions.  Writing
//! `P_lambda` and `P_omega` for the left and right minimal polynomials of
//! the full node sets, every solution is
//!
//! ```text
//! f = particular + sum_s  left_factor_s · mu_s · right_factor_s
//!                + P_lambda · h · P_omega
//! ```
//!
//! with one free plane parameter `mu_s` per paired condition and a free
//! polynomial `h`.  [`solve`] produces this family as a [`SolutionSet`];
//! [`SolutionSet::instantiate`] picks members.  The elementary interpolants
//! hit one condition and annihilate all others, so the particular solution
//! is their plain sum.

use alloc::vec::Vec;

use crate::conjclass;
use crate::consistency::{PairedCondition, ReducedProblem, Side};
use crate::error::Error;
use crate::poly::QPoly;
use crate::quat::Quat;
use crate::rat::Rat;
use crate::sylvester::{self, PlaneH};

// ---- twisted division values ----

// The value w such that (p·h).eval_right(beta) = d for every h with
// h.eval_right(beta) = w.  Requires beta's class to be free of right zeros
// of p, which holds whenever beta's class contributes no node to p.
pub(crate) fn twisted_value_right(p: &QPoly, d: &Quat, beta: &Quat) -> Quat {
    let sharp = p.conjugate();
    let real = &sharp * p;
    twisted_value_right_with(&sharp, &real, d, beta)
}

// Core of [`twisted_value_right`] for callers that reuse `p`'s conjugate
// and the real product conjugate·p across many values.
fn twisted_value_right_with(sharp: &QPoly, real: &QPoly, d: &Quat, beta: &Quat) -> Quat {
    if d.is_zero() {
        return Quat::zero();
    }
    // (sharp·d) evaluated at beta equals sharp evaluated at the conjugated
    // point d·beta·d⁻¹, times d; this form keeps the evaluation point
    // small when d carries large numerators.
    &sharp.mul_const_right(d).eval_right(beta) * &real.eval_right(beta).inv()
}

// Mirror image: the value u such that (h·p).eval_left(alpha) = c for every
// h with h.eval_left(alpha) = u.  The Newton scheme consumes the
// right-handed wrapper; this one backs the cached core and the tests.
#[cfg_attr(not(test), allow(dead_code))]
pub(crate) fn twisted_value_left(p: &QPoly, c: &Quat, alpha: &Quat) -> Quat {
    let sharp = p.conjugate();
    let real = &sharp * p;
    twisted_value_left_with(&sharp, &real, c, alpha)
}

// Core of [`twisted_value_left`] with the derived polynomials precomputed.
fn twisted_value_left_with(sharp: &QPoly, real: &QPoly, c: &Quat, alpha: &Quat) -> Quat {
    if c.is_zero() {
        return Quat::zero();
    }
    // Mirror of the right-handed core: c·sharp.eval_left(c⁻¹·alpha·c) is
    // (c·sharp) evaluated at alpha itself.
    &real.eval_left(alpha).inv() * &sharp.mul_const_left(c).eval_left(alpha)
}

// ---- one-sided interpolation ----

fn check_nodes(nodes: &[Quat]) -> Result<(), Error> {
    for (i, node) in nodes.iter().enumerate() {
        if nodes[..i].iter().any(|n| n == node) {
            return Err(Error::NodesNotDistinct);
        }
    }
    conjclass::class_groups(nodes).map(|_| ())
}

/// The unique polynomial of degree `< n` with `f.eval_left(node) = value`
/// for all `n` conditions: the sum of deleted minimal polynomials, each
/// normalized at its own node.
///
/// Errors when nodes repeat or three share a conjugacy class.
pub fn solve_left(left: &[(Quat, Quat)]) -> Result<QPoly, Error> {
    let nodes: Vec<Quat> = left.iter().map(|(n, _)| n.clone()).collect();
    check_nodes(&nodes)?;
    let mut f = QPoly::zero();
    for (s, (node, value)) in left.iter().enumerate() {
        let p = conjclass::lmp_of(&deleted(&nodes, s));
        let factor = &p.eval_left(node).inv() * value;
        f = &f + &p.mul_const_right(&factor);
    }
    Ok(f)
}

/// Mirror of [`solve_left`] for right conditions: degree `< m`, built from
/// deleted right minimal polynomials with their normalizing constants on
/// the left.
pub fn solve_right(right: &[(Quat, Quat)]) -> Result<QPoly, Error> {
    let nodes: Vec<Quat> = right.iter().map(|(n, _)| n.clone()).collect();
    check_nodes(&nodes)?;
    let mut f = QPoly::zero();
    for (s, (node, value)) in right.iter().enumerate() {
        let p = conjclass::rmp_of(&deleted(&nodes, s));
        let factor = value * &p.eval_right(node).inv();
        f = &f + &p.mul_const_left(&factor);
    }
    Ok(f)
}

fn deleted(nodes: &[Quat], idx: usize) -> Vec<Quat> {
    let mut rest = Vec::with_capacity(nodes.len().saturating_sub(1));
    for (i, node) in nodes.iter().enumerate() {
        if i != idx {
            rest.push(node.clone());
        }
    }
    rest
}

// ---- the solution family ----

/// One paired condition's free term `left_factor·mu·right_factor`,
/// `mu` ranging over `plane`.
///
/// The factors look asymmetric (left minimal polynomial with this pair's
/// node deleted, full right minimal polynomial), but every `mu` in the
/// plane satisfies `alpha_tilde·mu = mu·beta_tilde`, which lets the linear
/// factor of the pair's class slide through `mu`: the term equals
/// `P_lambda·mu·(right factor with this pair deleted)` as well.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairedTerm {
    pub left_factor: QPoly,
    pub plane: PlaneH,
    pub right_factor: QPoly,
    pub alpha_tilde: Quat,
    pub beta_tilde: Quat,
}

/// The complete solution family of a reduced interpolation problem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionSet {
    /// The distinguished solution: all plane parameters zero, `h = 0`;
    /// degree `< n+m`.
    pub particular: QPoly,
    /// One free-plane term per paired condition.
    pub paired_terms: Vec<PairedTerm>,
    /// Left minimal polynomial of all left nodes.
    pub ideal_left: QPoly,
    /// Right minimal polynomial of all right nodes.
    pub ideal_right: QPoly,
}

impl SolutionSet {
    /// The family member for the given plane coordinates (one rational pair
    /// per paired term, in that term's plane basis) and free polynomial.
    ///
    /// Errors when the coordinate count does not match the pair count.
    pub fn instantiate(&self, mu_coords: &[(Rat, Rat)], h: &QPoly) -> Result<QPoly, Error> {
        if mu_coords.len() != self.paired_terms.len() {
            return Err(Error::ArityMismatch {
                expected: self.paired_terms.len(),
                got: mu_coords.len(),
            });
        }
        let mut f = self.particular.clone();
        for (term, (u, v)) in self.paired_terms.iter().zip(mu_coords) {
            let mu = term.plane.member(u, v);
            f = &f + &(&term.left_factor.mul_const_right(&mu) * &term.right_factor);
        }
        f = &f + &(&(&self.ideal_left * h) * &self.ideal_right);
        Ok(f)
    }
}

// The node sets and minimal polynomials a reduced problem hangs on.  The
// paired conditions sit first in both node lists, so pair `s` owns
// `lambda[s]` and `omega[s]`.  The conjugates of the two minimal
// polynomials and their real products are cached because every elementary
// interpolant consults them.
struct Frame {
    paired: Vec<PairedCondition>,
    left_only: Vec<(Quat, Quat)>,
    right_only: Vec<(Quat, Quat)>,
    lambda: Vec<Quat>,
    omega: Vec<Quat>,
    p_lambda: QPoly,
    p_omega: QPoly,
    p_lambda_sharp: QPoly,
    p_lambda_real: QPoly,
    p_omega_sharp: QPoly,
    p_omega_real: QPoly,
}

impl Frame {
    fn new(reduced: &ReducedProblem) -> Result<Frame, Error> {
        let lambda: Vec<Quat> =
            reduced.left_conditions().iter().map(|(n, _)| n.clone()).collect();
        let omega: Vec<Quat> =
            reduced.right_conditions().iter().map(|(n, _)| n.clone()).collect();
        check_nodes(&lambda)?;
        check_nodes(&omega)?;
        let p_lambda = conjclass::lmp_of(&lambda);
        let p_omega = conjclass::rmp_of(&omega);
        let p_lambda_sharp = p_lambda.conjugate();
        let p_lambda_real = conjclass::real_norm_product(&lambda);
        let p_omega_sharp = p_omega.conjugate();
        let p_omega_real = conjclass::real_norm_product(&omega);
        Ok(Frame {
            paired: reduced.paired.clone(),
            left_only: reduced.left_only.clone(),
            right_only: reduced.right_only.clone(),
            p_lambda,
            p_omega,
            p_lambda_sharp,
            p_lambda_real,
            p_omega_sharp,
            p_omega_real,
            lambda,
            omega,
        })
    }

    // Inner part of the elementary interpolant of left-only condition `s`:
    // the full interpolant is this times `p_omega` on the right.  `p` must
    // be the left minimal polynomial of lambda with this node deleted.
    fn left_inner(&self, s: usize, p: &QPoly) -> QPoly {
        let (alpha, c) = &self.left_only[s];
        if c.is_zero() {
            return QPoly::zero();
        }
        let rho = &p.eval_left(alpha).inv()
            * &twisted_value_left_with(&self.p_omega_sharp, &self.p_omega_real, c, alpha);
        p.mul_const_right(&rho)
    }

    // Elementary interpolant of left-only condition `s`: hits its value at
    // its node on the left, annihilates every other condition of the
    // problem (and every paired backshift value).
    fn elementary_left(&self, s: usize) -> QPoly {
        let p = conjclass::lmp_of(&deleted(&self.lambda, self.paired.len() + s));
        &self.left_inner(s, &p) * &self.p_omega
    }

    // Mirror of [`Frame::left_inner`]: the full interpolant of right-only
    // condition `s` is `p_lambda` times this.
    fn right_inner(&self, s: usize, p: &QPoly) -> QPoly {
        let (beta, d) = &self.right_only[s];
        if d.is_zero() {
            return QPoly::zero();
        }
        let gamma = &twisted_value_right_with(&self.p_lambda_sharp, &self.p_lambda_real, d, beta)
            * &p.eval_right(beta).inv();
        p.mul_const_left(&gamma)
    }

    // Mirror for right-only condition `s`.
    fn elementary_right(&self, s: usize) -> QPoly {
        let p = conjclass::rmp_of(&deleted(&self.omega, self.paired.len() + s));
        &self.p_lambda * &self.right_inner(s, &p)
    }

    // Elementary interpolant of pair `s` plus its free-plane term.
    fn elementary_paired(&self, s: usize) -> Result<(QPoly, PairedTerm), Error> {
        let p_left_del = conjclass::lmp_of(&deleted(&self.lambda, s));
        let p_right_del = conjclass::rmp_of(&deleted(&self.omega, s));
        self.paired_with(s, p_left_del, p_right_del)
    }

    // Body of [`Frame::elementary_paired`] with the two deleted minimal
    // polynomials supplied by the caller.  The correction constant
    // (rho - gamma) repairs the left and right values simultaneously; its
    // compatibility identity is a theorem for pairs that passed reduction,
    // so it is asserted, not returned.
    fn paired_with(
        &self,
        s: usize,
        p_left_del: QPoly,
        p_right_del: QPoly,
    ) -> Result<(QPoly, PairedTerm), Error> {
        let pc = &self.paired[s];
        let v = p_left_del.eval_left(&pc.alpha);
        let w = p_right_del.eval_right(&pc.beta);
        let alpha_tilde = pc.alpha.conjugate_by(&v);
        let beta_tilde = pc.beta.conjugate_by(&w.inv());
        let plane = sylvester::plane(&alpha_tilde, &beta_tilde)?;
        let left_real = conjclass::real_norm_product(&deleted(&self.lambda, s));
        let right_real = conjclass::real_norm_product(&deleted(&self.omega, s));
        let gamma =
            &twisted_value_right_with(&p_left_del.conjugate(), &left_real, &pc.d, &pc.beta)
                * &w.inv();
        let rho = &v.inv()
            * &twisted_value_left_with(&p_right_del.conjugate(), &right_real, &pc.c, &pc.alpha);
        let diff = &rho - &gamma;
        assert_eq!(
            &alpha_tilde.conj() * &diff,
            &diff * &beta_tilde,
            "pair compatibility must survive reduction"
        );
        let two_im = &alpha_tilde.im() + &alpha_tilde.im();
        let inner = &p_left_del.mul_const_right(&rho)
            + &self.p_lambda.mul_const_right(&(&two_im.inv() * &diff));
        let particular = &inner * &p_right_del;
        let term = PairedTerm {
            left_factor: p_left_del,
            plane,
            right_factor: self.p_omega.clone(),
            alpha_tilde,
            beta_tilde,
        };
        Ok((particular, term))
    }
}

/// Elementary interpolant of the `s`-th left-only condition of the reduced
/// problem: its value at its node, zero at every other condition.
pub fn elementary_left(reduced: &ReducedProblem, s: usize) -> Result<QPoly, Error> {
    Ok(Frame::new(reduced)?.elementary_left(s))
}

/// Elementary interpolant of the `s`-th right-only condition.
pub fn elementary_right(reduced: &ReducedProblem, s: usize) -> Result<QPoly, Error> {
    Ok(Frame::new(reduced)?.elementary_right(s))
}

/// Elementary interpolant of the `s`-th paired condition, together with the
/// free-plane term that parametrizes all other solutions of that pair.
pub fn elementary_paired(
    reduced: &ReducedProblem,
    s: usize,
) -> Result<(QPoly, PairedTerm), Error> {
    Frame::new(reduced)?.elementary_paired(s)
}

/// The complete solution family of a reduced problem: particular solution
/// (the elementary interpolants summed, left-only then right-only then
/// paired), one plane term per pair, and the two-sided ideal pair.
///
/// With no paired conditions the particular solution is the unique one of
/// degree `< n+m`.
pub fn solve(reduced: &ReducedProblem) -> Result<SolutionSet, Error> {
    let frame = Frame::new(reduced)?;
    let k = frame.paired.len();
    let left_deleted = conjclass::lmp_deleted(&frame.lambda);
    let right_deleted = conjclass::rmp_deleted(&frame.omega);
    // All left-only terms share the right factor p_omega and all
    // right-only terms share the left factor p_lambda, so each group is
    // summed inside its shared factor and multiplied out once.
    let mut left_sum = QPoly::zero();
    for s in 0..frame.left_only.len() {
        left_sum = &left_sum + &frame.left_inner(s, &left_deleted[k + s]);
    }
    let mut right_sum = QPoly::zero();
    for s in 0..frame.right_only.len() {
        right_sum = &right_sum + &frame.right_inner(s, &right_deleted[k + s]);
    }
    let mut particular =
        &(&left_sum * &frame.p_omega) + &(&frame.p_lambda * &right_sum);
    let mut paired_terms = Vec::with_capacity(k);
    for s in 0..k {
        let (f, term) =
            frame.paired_with(s, left_deleted[s].clone(), right_deleted[s].clone())?;
        particular = &particular + &f;
        paired_terms.push(term);
    }
    Ok(SolutionSet {
        particular,
        paired_terms,
        ideal_left: frame.p_lambda,
        ideal_right: frame.p_omega,
    })
}

/// Solves the reduced problem with the backshift value of every pair
/// pinned: the returned family (plane terms folded away, only `h` free)
/// satisfies `f.backshift_left(alpha_s).eval_right(beta_s) = q[s]` for all
/// its members.  Also returns the plane parameters this forced.
///
/// Each `q[s]` must solve the pair's Sylvester equation
/// `alpha_s·q - q·beta_s = c_s - d_s`; otherwise no solution has that
/// backshift value and the offending index is reported with both sides of
/// the failed identity.
pub fn solve_constrained(
    reduced: &ReducedProblem,
    q: &[Quat],
) -> Result<(SolutionSet, Vec<Quat>), Error> {
    let frame = Frame::new(reduced)?;
    if q.len() != frame.paired.len() {
        return Err(Error::ArityMismatch { expected: frame.paired.len(), got: q.len() });
    }
    for (s, (pc, q_s)) in frame.paired.iter().zip(q).enumerate() {
        let got = &(&pc.alpha * q_s) - &(q_s * &pc.beta);
        let want = &pc.c - &pc.d;
        if got != want {
            return Err(Error::InvalidConstraint { index: s, got, want });
        }
    }
    let k = frame.paired.len();
    let left_deleted = conjclass::lmp_deleted(&frame.lambda);
    let right_deleted = conjclass::rmp_deleted(&frame.omega);
    let mut left_sum = QPoly::zero();
    for s in 0..frame.left_only.len() {
        left_sum = &left_sum + &frame.left_inner(s, &left_deleted[k + s]);
    }
    let mut right_sum = QPoly::zero();
    for s in 0..frame.right_only.len() {
        right_sum = &right_sum + &frame.right_inner(s, &right_deleted[k + s]);
    }
    let mut particular =
        &(&left_sum * &frame.p_omega) + &(&frame.p_lambda * &right_sum);
    let mut mus = Vec::with_capacity(k);
    for (s, (pc, q_s)) in frame.paired.iter().zip(q).enumerate() {
        let (f_s, term) =
            frame.paired_with(s, left_deleted[s].clone(), right_deleted[s].clone())?;
        let q_tilde = q_s - &f_s.backshift_left(&pc.alpha).eval_right(&pc.beta);
        let mu = if q_tilde.is_zero() {
            Quat::zero()
        } else {
            // The one plane element whose term shifts the backshift value
            // by exactly q_tilde: built like the twisted division values,
            // with the backshift of P_lambda in the numerator role.
            let shifted = frame.p_lambda.backshift_left(&pc.alpha);
            let real = conjclass::real_norm_product(&deleted(&frame.lambda, s));
            let p_right_del = &right_deleted[s];
            &(&shifted.conjugate().mul_const_right(&q_tilde).eval_right(&pc.beta)
                * &real.eval_right(&pc.beta).inv())
                * &p_right_del.eval_right(&pc.beta).inv()
        };
        term.plane
            .coords_of(&mu)
            .expect("the forced plane parameter lies in its plane");
        particular = &particular + &f_s;
        particular = &particular + &(&term.left_factor.mul_const_right(&mu) * &term.right_factor);
        mus.push(mu);
    }
    Ok((
        SolutionSet {
            particular,
            paired_terms: Vec::new(),
            ideal_left: frame.p_lambda,
            ideal_right: frame.p_omega,
        },
        mus,
    ))
}

// ---- the homogeneous solution set ----

/// A decomposition witnessing membership in the homogeneous solution set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MembershipReport {
    /// Plane parameter per paired condition.
    pub mu: Vec<Quat>,
    /// The same parameters in their planes' canonical bases.
    pub mu_coords: Vec<(Rat, Rat)>,
    /// The free-polynomial component.
    pub h: QPoly,
}

/// Decides whether `f` solves the reduced problem with all targets zero,
/// i.e. lies in the intersection of the left ideal of the left nodes and
/// the right ideal of the right nodes, and if so recovers the `mu` and `h`
/// of the family decomposition (which re-instantiates to exactly `f`).
///
/// Errors with [`Error::NotMember`] carrying the first nonzero evaluation.
///
/// Panics when the reduced problem has a nonzero target.
pub fn homogeneous_membership(
    f: &QPoly,
    reduced: &ReducedProblem,
) -> Result<MembershipReport, Error> {
    let frame = Frame::new(reduced)?;
    assert!(
        reduced.left_conditions().iter().chain(reduced.right_conditions().iter())
            .all(|(_, v)| v.is_zero()),
        "homogeneous membership expects a problem with zero targets"
    );
    for node in &frame.lambda {
        let value = f.eval_left(node);
        if !value.is_zero() {
            return Err(Error::NotMember { side: Side::Left, node: node.clone(), value });
        }
    }
    for node in &frame.omega {
        let value = f.eval_right(node);
        if !value.is_zero() {
            return Err(Error::NotMember { side: Side::Right, node: node.clone(), value });
        }
    }
    // Left-vanishing at all left nodes is exact left divisibility.
    let (g, rem) = f.div_rem_left(&frame.p_lambda);
    assert!(rem.is_zero(), "left-vanishing polynomials divide exactly");
    // The plane part of pair s is the one making g - mu_s·(omega minus s
    // minimal polynomial) right-vanish at beta_s; peel all pairs, then h
    // is the exact right quotient of what is left.
    let mut mu = Vec::with_capacity(frame.paired.len());
    let mut mu_coords = Vec::with_capacity(frame.paired.len());
    let mut rest = g;
    let (left_deleted, right_deleted) = if frame.paired.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        (conjclass::lmp_deleted(&frame.lambda), conjclass::rmp_deleted(&frame.omega))
    };
    for (s, pc) in frame.paired.iter().enumerate() {
        let p_right_del = &right_deleted[s];
        let mu_s = &rest.eval_right(&pc.beta) * &p_right_del.eval_right(&pc.beta).inv();
        let (zero_f, term) =
            frame.paired_with(s, left_deleted[s].clone(), right_deleted[s].clone())?;
        debug_assert!(zero_f.is_zero());
        let coords = term
            .plane
            .coords_of(&mu_s)
            .expect("membership parameters lie in their planes");
        rest = &rest - &p_right_del.mul_const_left(&mu_s);
        mu.push(mu_s);
        mu_coords.push(coords);
    }
    let (h, rem) = rest.div_rem_right(&frame.p_omega);
    assert!(rem.is_zero(), "right-vanishing polynomials divide exactly");
    Ok(MembershipReport { mu, mu_coords, h })
}
