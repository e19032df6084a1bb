//! Transferring values between equivalent nodes, and reduction of raw
//! interpolation data to a consistent normal form.
//!
//! Once two left values of a polynomial are known on a conjugacy class, its
//! left *and* right values everywhere on that class are determined by exact
//! rational formulas (and likewise starting from two right values).  So any
//! class carrying three or more conditions is over-determined: either the
//! extra conditions agree with the transferred values and can be removed, or
//! the data is inconsistent.  [`reduce`] performs exactly this, returning a
//! normal form in which every class holds at most two conditions:
//!
//! * a left/right pair on one class (checked for the compatibility identity
//!   `conj(alpha)·(c - d) = (c - d)·beta`, which such a pair must satisfy),
//! * or one or two same-side conditions on a class untouched by the other
//!   side.
//!
//! Real nodes first have their right conditions moved to the left side (the
//! two evaluations agree at real points), so a reduced problem never carries
//! a real right node.

use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::quat::{ConjClassKey, Quat};

/// Which evaluation a condition constrains.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Raw interpolation data: left conditions `f.eval_left(node) = value` and
/// right conditions `f.eval_right(node) = value`, nodes distinct per side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RawProblem {
    left: Vec<(Quat, Quat)>,
    right: Vec<(Quat, Quat)>,
}

impl RawProblem {
    pub fn new(left: Vec<(Quat, Quat)>, right: Vec<(Quat, Quat)>) -> Result<Self, Error> {
        for side in [&left, &right] {
            for (i, (node, _)) in side.iter().enumerate() {
                if side[..i].iter().any(|(n, _)| n == node) {
                    return Err(Error::NodesNotDistinct);
                }
            }
        }
        Ok(RawProblem { left, right })
    }

    pub fn left(&self) -> &[(Quat, Quat)] {
        &self.left
    }

    pub fn right(&self) -> &[(Quat, Quat)] {
        &self.right
    }
}

/// Value at a third class member `c`, transferred from the values `fa` at
/// `a` and `fb` at `b`, all three equivalent and pairwise distinct.  The
/// input values are `side_in` evaluations; the result is the `side_out`
/// evaluation at `c` of every polynomial matching the two inputs.
pub fn transfer(
    a: &Quat,
    fa: &Quat,
    b: &Quat,
    fb: &Quat,
    side_in: Side,
    c: &Quat,
    side_out: Side,
) -> Result<Quat, Error> {
    if a == b || c == a || c == b {
        return Err(Error::NodesNotDistinct);
    }
    if !a.equivalent(b) || !a.equivalent(c) {
        return Err(Error::NotEquivalent);
    }
    Ok(transfer_value(a, fa, b, fb, side_in, c, side_out))
}

/// The transfer formulas themselves.  They hold for any `c` in the class,
/// including `c == a` or `c == b`, which [`reduce`] relies on when one node
/// carries conditions on both sides; only `a != b` is structural.
pub(crate) fn transfer_value(
    a: &Quat,
    fa: &Quat,
    b: &Quat,
    fb: &Quat,
    side_in: Side,
    c: &Quat,
    side_out: Side,
) -> Quat {
    debug_assert!(a != b && a.equivalent(b) && a.equivalent(c));
    let u = (a - b).inv();
    match (side_in, side_out) {
        (Side::Left, Side::Left) => &(&(c - b) * &(&u * fa)) + &(&(a - c) * &(&u * fb)),
        (Side::Left, Side::Right) => {
            let ua = &u * fa;
            let ub = &u * fb;
            &(&(&ua * c) - &(b * &ua)) + &(&(a * &ub) - &(&ub * c))
        }
        (Side::Right, Side::Right) => &(fa * &(&u * &(c - b))) + &(fb * &(&u * &(a - c))),
        (Side::Right, Side::Left) => {
            let au = fa * &u;
            let bu = fb * &u;
            &(&(c * &au) - &(&au * b)) + &(&(&bu * a) - &(c * &bu))
        }
    }
}

/// One interpolation condition on one conjugacy class, paired across sides.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairedCondition {
    pub alpha: Quat,
    pub c: Quat,
    pub beta: Quat,
    pub d: Quat,
}

/// A condition discharged during reduction, with its justification.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Removal {
    /// Verified against the class anchors by a transfer formula, then
    /// dropped as redundant.
    Transferred {
        side: Side,
        node: Quat,
        value: Quat,
        anchor_side: Side,
        anchors: (Quat, Quat),
    },
    /// A right condition at a real node duplicating the left condition
    /// there; left and right values agree at real points.
    MergedRealDuplicate { node: Quat, value: Quat },
}

/// Witness of contradictory data.
#[derive(Clone, PartialEq, Eq)]
pub enum Inconsistency {
    /// A condition disagrees with the value transferred from its class
    /// anchors.
    TransferMismatch {
        class: ConjClassKey,
        side: Side,
        node: Quat,
        got: Quat,
        expected: Quat,
        anchor_side: Side,
        anchors: (Quat, Quat),
    },
    /// A surviving left/right pair violates `conj(alpha)·(c-d) = (c-d)·beta`;
    /// both sides of the failed identity are reported.
    PairIncompatible {
        alpha: Quat,
        c: Quat,
        beta: Quat,
        d: Quat,
        lhs: Quat,
        rhs: Quat,
    },
    /// A real node carries different left and right values.
    RealDuplicateMismatch {
        node: Quat,
        left_value: Quat,
        right_value: Quat,
    },
}

impl fmt::Display for Inconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inconsistency::TransferMismatch {
                class,
                side,
                node,
                got,
                expected,
                anchor_side,
                anchors,
            } => write!(
                f,
                "{} condition at {} gives {}, but the {} anchors at {} and {} of class {} force {}",
                side, node, got, anchor_side, anchors.0, anchors.1, class, expected
            ),
            Inconsistency::PairIncompatible { alpha, c, beta, d, lhs, rhs } => write!(
                f,
                "pair (left {} -> {}, right {} -> {}) fails conj(alpha)·(c-d) = (c-d)·beta: {} != {}",
                alpha, c, beta, d, lhs, rhs
            ),
            Inconsistency::RealDuplicateMismatch { node, left_value, right_value } => write!(
                f,
                "real node {} carries left value {} but right value {}; they must agree",
                node, left_value, right_value
            ),
        }
    }
}

impl fmt::Debug for Inconsistency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Interpolation data in normal form: per conjugacy class at most one
/// left/right pair, or up to two same-side conditions; no real right nodes;
/// no class shared between `left_only` (plus paired lefts) and `right_only`
/// (plus paired rights) except through `paired`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReducedProblem {
    pub paired: Vec<PairedCondition>,
    pub left_only: Vec<(Quat, Quat)>,
    pub right_only: Vec<(Quat, Quat)>,
    /// Conditions discharged on the way here, oldest first.
    pub removals: Vec<Removal>,
}

impl ReducedProblem {
    /// Number of left/right pairs.
    pub fn pair_count(&self) -> usize {
        self.paired.len()
    }

    /// All surviving left conditions: paired ones first, then `left_only`.
    pub fn left_conditions(&self) -> Vec<(Quat, Quat)> {
        self.paired
            .iter()
            .map(|p| (p.alpha.clone(), p.c.clone()))
            .chain(self.left_only.iter().cloned())
            .collect()
    }

    /// All surviving right conditions: paired ones first, then `right_only`.
    pub fn right_conditions(&self) -> Vec<(Quat, Quat)> {
        self.paired
            .iter()
            .map(|p| (p.beta.clone(), p.d.clone()))
            .chain(self.right_only.iter().cloned())
            .collect()
    }

    /// The surviving conditions as a raw problem (removals forgotten).
    pub fn to_raw(&self) -> RawProblem {
        RawProblem::new(self.left_conditions(), self.right_conditions())
            .expect("normal form has distinct nodes per side")
    }
}

struct Cond {
    side: Side,
    // Position in its side's list, for deterministic output ordering.
    pos: usize,
    node: Quat,
    value: Quat,
}

/// Reduces raw data to normal form: moves real right conditions to the left
/// side, groups conditions by conjugacy class, discharges redundant
/// conditions in over-full classes against the class anchors (the first two
/// left conditions there, or the first two right ones when fewer than two
/// lefts exist), and checks the pair compatibility identity on every
/// surviving left/right pair.
///
/// Errors with [`Error::Inconsistent`] carrying a witness whenever a
/// discharged or paired condition contradicts the rest.
pub fn reduce(problem: &RawProblem) -> Result<ReducedProblem, Error> {
    let mut removals = Vec::new();

    // Real right conditions are left conditions in disguise.
    let mut left: Vec<(Quat, Quat)> = problem.left().to_vec();
    let mut right: Vec<(Quat, Quat)> = Vec::new();
    for (node, value) in problem.right() {
        if !node.is_real() {
            right.push((node.clone(), value.clone()));
            continue;
        }
        match left.iter().find(|(n, _)| n == node) {
            Some((_, lv)) if lv == value => removals.push(Removal::MergedRealDuplicate {
                node: node.clone(),
                value: value.clone(),
            }),
            Some((_, lv)) => {
                return Err(Error::Inconsistent(Inconsistency::RealDuplicateMismatch {
                    node: node.clone(),
                    left_value: lv.clone(),
                    right_value: value.clone(),
                }))
            }
            None => left.push((node.clone(), value.clone())),
        }
    }

    // Group by class, first-occurrence order, scanning lefts then rights.
    let mut classes: Vec<(ConjClassKey, Vec<Cond>)> = Vec::new();
    let push = |classes: &mut Vec<(ConjClassKey, Vec<Cond>)>, cond: Cond| {
        let key = cond.node.class_key();
        match classes.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(cond),
            None => classes.push((key, alloc::vec![cond])),
        }
    };
    for (pos, (node, value)) in left.iter().enumerate() {
        push(&mut classes, Cond { side: Side::Left, pos, node: node.clone(), value: value.clone() });
    }
    for (pos, (node, value)) in right.iter().enumerate() {
        push(&mut classes, Cond { side: Side::Right, pos, node: node.clone(), value: value.clone() });
    }

    // Discharge everything beyond the anchor pair of an over-full class.
    let mut paired = Vec::new();
    let mut left_only: Vec<(usize, (Quat, Quat))> = Vec::new();
    let mut right_only: Vec<(usize, (Quat, Quat))> = Vec::new();
    for (key, conds) in classes {
        let survivors: Vec<&Cond> = if conds.len() >= 3 {
            let lefts: Vec<&Cond> = conds.iter().filter(|c| c.side == Side::Left).collect();
            let rights: Vec<&Cond> = conds.iter().filter(|c| c.side == Side::Right).collect();
            let anchors: [&Cond; 2] = if lefts.len() >= 2 {
                [lefts[0], lefts[1]]
            } else {
                [rights[0], rights[1]]
            };
            let anchor_side = anchors[0].side;
            for cond in &conds {
                if core::ptr::eq(cond, anchors[0]) || core::ptr::eq(cond, anchors[1]) {
                    continue;
                }
                let expected = transfer_value(
                    &anchors[0].node,
                    &anchors[0].value,
                    &anchors[1].node,
                    &anchors[1].value,
                    anchor_side,
                    &cond.node,
                    cond.side,
                );
                if expected != cond.value {
                    return Err(Error::Inconsistent(Inconsistency::TransferMismatch {
                        class: key,
                        side: cond.side,
                        node: cond.node.clone(),
                        got: cond.value.clone(),
                        expected,
                        anchor_side,
                        anchors: (anchors[0].node.clone(), anchors[1].node.clone()),
                    }));
                }
                removals.push(Removal::Transferred {
                    side: cond.side,
                    node: cond.node.clone(),
                    value: cond.value.clone(),
                    anchor_side,
                    anchors: (anchors[0].node.clone(), anchors[1].node.clone()),
                });
            }
            anchors.into_iter().collect()
        } else {
            conds.iter().collect()
        };

        match survivors.as_slice() {
            [a, b] if a.side != b.side => {
                let (l, r) = if a.side == Side::Left { (a, b) } else { (b, a) };
                let delta = &l.value - &r.value;
                let lhs = &l.node.conj() * &delta;
                let rhs = &delta * &r.node;
                if lhs != rhs {
                    return Err(Error::Inconsistent(Inconsistency::PairIncompatible {
                        alpha: l.node.clone(),
                        c: l.value.clone(),
                        beta: r.node.clone(),
                        d: r.value.clone(),
                        lhs,
                        rhs,
                    }));
                }
                paired.push(PairedCondition {
                    alpha: l.node.clone(),
                    c: l.value.clone(),
                    beta: r.node.clone(),
                    d: r.value.clone(),
                });
            }
            _ => {
                for cond in survivors {
                    let entry = (cond.pos, (cond.node.clone(), cond.value.clone()));
                    match cond.side {
                        Side::Left => left_only.push(entry),
                        Side::Right => right_only.push(entry),
                    }
                }
            }
        }
    }

    left_only.sort_by_key(|(pos, _)| *pos);
    right_only.sort_by_key(|(pos, _)| *pos);
    Ok(ReducedProblem {
        paired,
        left_only: left_only.into_iter().map(|(_, c)| c).collect(),
        right_only: right_only.into_iter().map(|(_, c)| c).collect(),
        removals,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn q(w: i64, x: i64, y: i64, z: i64) -> Quat {
        Quat::from_ints(w, x, y, z)
    }

    #[test]
    fn transfer_reproduces_polynomial_values() {
        // A concrete cubic with non-real coefficients; its values on the
        // class of i obey all four transfer formulas.
        let f = crate::poly::QPoly::from_coeffs(vec![
            q(0, 0, 0, 1),
            q(1, 1, 0, 0),
            Quat::zero(),
            q(0, 0, 1, 0),
        ]);
        let (a, b, c) = (Quat::i(), Quat::j(), Quat::k());
        let (la, lb, lc) = (f.eval_left(&a), f.eval_left(&b), f.eval_left(&c));
        let (ra, rb, rc) = (f.eval_right(&a), f.eval_right(&b), f.eval_right(&c));
        assert_eq!(transfer(&a, &la, &b, &lb, Side::Left, &c, Side::Left).unwrap(), lc);
        assert_eq!(transfer(&a, &la, &b, &lb, Side::Left, &c, Side::Right).unwrap(), rc);
        assert_eq!(transfer(&a, &ra, &b, &rb, Side::Right, &c, Side::Right).unwrap(), rc);
        assert_eq!(transfer(&a, &ra, &b, &rb, Side::Right, &c, Side::Left).unwrap(), lc);
    }

    #[test]
    fn transfer_linear_sanity() {
        // f = z: left and right values at any class point are the point.
        let (a, b, c) = (Quat::i(), Quat::j(), Quat::k());
        assert_eq!(transfer(&a, &a, &b, &b, Side::Left, &c, Side::Left).unwrap(), c);
        assert_eq!(transfer(&a, &a, &b, &b, Side::Left, &c, Side::Right).unwrap(), c);
        assert_eq!(transfer(&a, &a, &b, &b, Side::Right, &c, Side::Left).unwrap(), c);
    }

    #[test]
    fn transfer_rejects_bad_nodes() {
        let (a, b) = (Quat::i(), Quat::j());
        let v = Quat::one();
        assert_eq!(
            transfer(&a, &v, &b, &v, Side::Left, &a, Side::Left).unwrap_err(),
            Error::NodesNotDistinct
        );
        assert_eq!(
            transfer(&a, &v, &b, &v, Side::Left, &Quat::one(), Side::Left).unwrap_err(),
            Error::NotEquivalent
        );
    }

    #[test]
    fn raw_problem_rejects_duplicate_nodes_per_side() {
        assert_eq!(
            RawProblem::new(vec![(Quat::i(), Quat::one()), (Quat::i(), Quat::zero())], vec![])
                .unwrap_err(),
            Error::NodesNotDistinct
        );
        // The same node on both sides is allowed.
        assert!(RawProblem::new(
            vec![(Quat::i(), Quat::one())],
            vec![(Quat::i(), Quat::one())]
        )
        .is_ok());
    }

    #[test]
    fn reduce_pairs_compatible_cross_conditions() {
        // left value i-j at i, right value 0 at j: a compatible pair.
        let p = RawProblem::new(
            vec![(Quat::i(), Quat::i() - Quat::j())],
            vec![(Quat::j(), Quat::zero())],
        )
        .unwrap();
        let r = reduce(&p).unwrap();
        assert_eq!(r.pair_count(), 1);
        assert_eq!(
            r.paired[0],
            PairedCondition {
                alpha: Quat::i(),
                c: Quat::i() - Quat::j(),
                beta: Quat::j(),
                d: Quat::zero(),
            }
        );
        assert!(r.left_only.is_empty() && r.right_only.is_empty() && r.removals.is_empty());
    }

    #[test]
    fn reduce_detects_incompatible_pair() {
        // left 0 at i, right i+j at j: conj(i)·(c-d) = -1+k but (c-d)·j = 1-k.
        let p = RawProblem::new(
            vec![(Quat::i(), Quat::zero())],
            vec![(Quat::j(), Quat::i() + Quat::j())],
        )
        .unwrap();
        match reduce(&p).unwrap_err() {
            Error::Inconsistent(Inconsistency::PairIncompatible { lhs, rhs, .. }) => {
                assert_eq!(lhs, q(-1, 0, 0, 1));
                assert_eq!(rhs, q(1, 0, 0, -1));
            }
            other => panic!("expected pair incompatibility, got {:?}", other),
        }
    }

    #[test]
    fn reduce_moves_real_right_conditions() {
        let two = q(2, 0, 0, 0);
        let val = q(0, 1, 1, 0);
        let p = RawProblem::new(vec![], vec![(two.clone(), val.clone())]).unwrap();
        let r = reduce(&p).unwrap();
        assert_eq!(r.left_only, vec![(two.clone(), val.clone())]);
        assert!(r.right_only.is_empty());
        // Duplicate across sides at a real node merges when values agree...
        let p = RawProblem::new(
            vec![(two.clone(), val.clone())],
            vec![(two.clone(), val.clone())],
        )
        .unwrap();
        let r = reduce(&p).unwrap();
        assert_eq!(r.left_only.len(), 1);
        assert_eq!(
            r.removals,
            vec![Removal::MergedRealDuplicate { node: two.clone(), value: val.clone() }]
        );
        // ...and is inconsistent when they differ.
        let p = RawProblem::new(
            vec![(two.clone(), val.clone())],
            vec![(two.clone(), Quat::one())],
        )
        .unwrap();
        assert!(matches!(
            reduce(&p).unwrap_err(),
            Error::Inconsistent(Inconsistency::RealDuplicateMismatch { .. })
        ));
    }

    #[test]
    fn reduce_discharges_overfull_class() {
        // Data read off f = z on the class of i: three conditions, the right
        // one redundant against the two left anchors.
        let p = RawProblem::new(
            vec![(Quat::i(), Quat::i()), (Quat::j(), Quat::j())],
            vec![(Quat::k(), Quat::k())],
        )
        .unwrap();
        let r = reduce(&p).unwrap();
        assert_eq!(r.pair_count(), 0);
        assert_eq!(r.left_only.len(), 2);
        assert!(r.right_only.is_empty());
        assert_eq!(
            r.removals,
            vec![Removal::Transferred {
                side: Side::Right,
                node: Quat::k(),
                value: Quat::k(),
                anchor_side: Side::Left,
                anchors: (Quat::i(), Quat::j()),
            }]
        );
        // Perturbing the redundant value makes the data inconsistent.
        let p = RawProblem::new(
            vec![(Quat::i(), Quat::i()), (Quat::j(), Quat::j())],
            vec![(Quat::k(), Quat::k() + Quat::one())],
        )
        .unwrap();
        match reduce(&p).unwrap_err() {
            Error::Inconsistent(Inconsistency::TransferMismatch { expected, got, .. }) => {
                assert_eq!(expected, Quat::k());
                assert_eq!(got, Quat::k() + Quat::one());
            }
            other => panic!("expected transfer mismatch, got {:?}", other),
        }
    }

    #[test]
    fn reduce_uses_right_anchors_when_lefts_are_scarce() {
        // One left and two rights on the class of i: the rights anchor, the
        // left is discharged even though its node repeats a right node.
        let f = crate::poly::QPoly::from_coeffs(vec![q(1, 0, 2, 0), q(0, 1, 0, 0), q(0, 0, 0, 3)]);
        let p = RawProblem::new(
            vec![(Quat::i(), f.eval_left(&Quat::i()))],
            vec![
                (Quat::i(), f.eval_right(&Quat::i())),
                (Quat::j(), f.eval_right(&Quat::j())),
            ],
        )
        .unwrap();
        let r = reduce(&p).unwrap();
        assert_eq!(r.pair_count(), 0);
        assert!(r.left_only.is_empty());
        assert_eq!(r.right_only.len(), 2);
        assert!(matches!(
            r.removals.as_slice(),
            [Removal::Transferred { side: Side::Left, anchor_side: Side::Right, .. }]
        ));
    }

    #[test]
    fn reduce_is_idempotent() {
        let f = crate::poly::QPoly::from_coeffs(vec![q(1, 0, 2, 0), q(0, 1, 0, 0), q(0, 0, 0, 3)]);
        let nodes_l = [Quat::i(), q(1, 2, 0, 0), q(2, 0, 0, 0)];
        let nodes_r = [Quat::j(), q(1, 0, 2, 0), q(3, 0, 0, 0)];
        let p = RawProblem::new(
            nodes_l.iter().map(|n| (n.clone(), f.eval_left(n))).collect(),
            nodes_r.iter().map(|n| (n.clone(), f.eval_right(n))).collect(),
        )
        .unwrap();
        let r1 = reduce(&p).unwrap();
        let r2 = reduce(&r1.to_raw()).unwrap();
        assert_eq!(r2.paired, r1.paired);
        assert_eq!(r2.left_only, r1.left_only);
        assert_eq!(r2.right_only, r1.right_only);
        assert!(r2.removals.is_empty());
    }
}
