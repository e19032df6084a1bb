//! Conjugacy classes of quaternions and minimal polynomials of node sets.
//!
//! The class of a non-real quaternion `a` carries the monic real quadratic
//! `z² - 2·Re(a)·z + norm2(a)`, its *characteristic polynomial*, which
//! vanishes (on both sides, being real) exactly on the class.
//!
//! A finite set of nodes has a monic *left minimal polynomial*: the lowest
//! degree monic polynomial whose left value is zero at every node.  It is
//! built by absorbing nodes one at a time: with `v = p.eval_left(a)` nonzero
//! the next factor is `z - v⁻¹·a·v`, and a node with `v == 0` is already
//! covered and contributes nothing.  A class met twice contributes its
//! characteristic quadratic; met three times it adds nothing new, which is
//! why the interpolation machinery restricts to at most two nodes per class.
//! The right minimal polynomial mirrors everything with factors accumulating
//! on the left.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::poly::QPoly;
use crate::quat::{ConjClassKey, Quat};
use crate::rat::rat_int;

/// A list of pairwise distinct interpolation nodes, in user order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NodeSet {
    nodes: Vec<Quat>,
}

impl NodeSet {
    /// Validates pairwise distinctness.
    pub fn new(nodes: Vec<Quat>) -> Result<Self, Error> {
        for (i, a) in nodes.iter().enumerate() {
            if nodes[..i].contains(a) {
                return Err(Error::NodesNotDistinct);
            }
        }
        Ok(NodeSet { nodes })
    }

    pub fn nodes(&self) -> &[Quat] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// The characteristic polynomial `z² - 2·Re(a)·z + norm2(a)` of the class of
/// a non-real `a`; errors on real input, whose class is a singleton with
/// minimal polynomial `z - a` of degree one instead.
pub fn char_poly(a: &Quat) -> Result<QPoly, Error> {
    if a.is_real() {
        return Err(Error::RealInput);
    }
    Ok(char_quadratic(a))
}

/// The quadratic `z² - 2·Re(a)·z + norm2(a)` without the real-input guard;
/// for real `a` it degenerates to `(z - a)²`, which some internal callers
/// (the Sylvester solver) rely on.
pub(crate) fn char_quadratic(a: &Quat) -> QPoly {
    QPoly::from_coeffs(vec![
        Quat::from_real(a.norm2()),
        Quat::from_real(-(rat_int(2) * a.re())),
        Quat::one(),
    ])
}

/// Monic left minimal polynomial of the set: lowest degree with
/// `eval_left == 0` at every node.  Nodes already annihilated (a class met a
/// third time) are skipped, so this is total.
pub fn lmp(nodes: &NodeSet) -> QPoly {
    lmp_of(nodes.nodes())
}

/// Monic right minimal polynomial of the set: lowest degree with
/// `eval_right == 0` at every node.
pub fn rmp(nodes: &NodeSet) -> QPoly {
    rmp_of(nodes.nodes())
}

// One absorption step: extend `p` so that it also left-kills `a`.
fn absorb_left(p: &QPoly, a: &Quat) -> QPoly {
    let v = p.eval_left(a);
    if v.is_zero() {
        p.clone()
    } else {
        p * &QPoly::z_minus(&a.conjugate_by(&v))
    }
}

// Mirror step: extend `p` so that it also right-kills `a`.  The new linear
// factor stacks on the left and must kill v·a·v⁻¹.
fn absorb_right(p: &QPoly, a: &Quat) -> QPoly {
    let v = p.eval_right(a);
    if v.is_zero() {
        p.clone()
    } else {
        &QPoly::z_minus(&a.conjugate_by(&v.inv())) * p
    }
}

pub(crate) fn lmp_of(nodes: &[Quat]) -> QPoly {
    let mut p = QPoly::one();
    for a in nodes {
        p = absorb_left(&p, a);
    }
    p
}

pub(crate) fn rmp_of(nodes: &[Quat]) -> QPoly {
    let mut p = QPoly::one();
    for a in nodes {
        p = absorb_right(&p, a);
    }
    p
}

// Every leave-one-out left minimal polynomial: entry `k` is the lmp of the
// list with node `k` removed.  The absorption prefixes are shared across
// entries, halving the work of computing each from scratch.
pub(crate) fn lmp_deleted(nodes: &[Quat]) -> Vec<QPoly> {
    let mut out = Vec::with_capacity(nodes.len());
    let mut prefix = QPoly::one();
    for (k, a) in nodes.iter().enumerate() {
        let mut p = prefix.clone();
        for b in &nodes[k + 1..] {
            p = absorb_left(&p, b);
        }
        out.push(p);
        prefix = absorb_left(&prefix, a);
    }
    out
}

// The real polynomial conjugate(p)·p for the minimal polynomial of the
// list, from either side: one characteristic quadratic per node.  Valid
// whenever no class holds three nodes, so absorption never skips one.
pub(crate) fn real_norm_product(nodes: &[Quat]) -> QPoly {
    let mut out = QPoly::one();
    for a in nodes {
        out = &out * &char_quadratic(a);
    }
    out
}

// Mirror of [`lmp_deleted`] for right minimal polynomials.
pub(crate) fn rmp_deleted(nodes: &[Quat]) -> Vec<QPoly> {
    let mut out = Vec::with_capacity(nodes.len());
    let mut prefix = QPoly::one();
    for (k, a) in nodes.iter().enumerate() {
        let mut p = prefix.clone();
        for b in &nodes[k + 1..] {
            p = absorb_right(&p, b);
        }
        out.push(p);
        prefix = absorb_right(&prefix, a);
    }
    out
}

/// Nodes grouped by conjugacy class, first-occurrence order, indices in user
/// order; errors when a class holds three or more nodes.
pub(crate) fn class_groups(nodes: &[Quat]) -> Result<Vec<(ConjClassKey, Vec<usize>)>, Error> {
    let mut groups: Vec<(ConjClassKey, Vec<usize>)> = Vec::new();
    for (idx, a) in nodes.iter().enumerate() {
        let key = a.class_key();
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(idx),
            None => groups.push((key, vec![idx])),
        }
    }
    for (key, members) in &groups {
        if members.len() >= 3 {
            return Err(Error::AssumptionAViolated { class: key.clone() });
        }
    }
    Ok(groups)
}

/// Factors the left minimal polynomial into monic linear and real quadratic
/// pieces whose product, in list order, is `lmp(nodes)`.
///
/// One factor per conjugacy class, in first-occurrence order: a class met
/// twice yields its characteristic quadratic (central, so its position costs
/// nothing); a class met once yields the linear factor the absorption
/// recursion produces, run over the singleton classes in user order.  Errors
/// when any class holds three or more nodes.
pub fn lmp_factored(nodes: &NodeSet) -> Result<Vec<QPoly>, Error> {
    let groups = class_groups(nodes.nodes())?;
    let mut factors = Vec::with_capacity(groups.len());
    let mut singles = QPoly::one();
    for (_, members) in &groups {
        if members.len() == 2 {
            factors.push(char_quadratic(&nodes.nodes()[members[0]]));
        } else {
            let a = &nodes.nodes()[members[0]];
            let v = singles.eval_left(a);
            // Nonzero: the absorbed singles all lie in other classes.
            let factor = QPoly::z_minus(&a.conjugate_by(&v));
            singles = &singles * &factor;
            factors.push(factor);
        }
    }
    Ok(factors)
}

/// Right-handed mirror of [`lmp_factored`]: the product of the returned
/// factors, in list order, is `rmp(nodes)`.  Because right absorption stacks
/// factors on the left, the classes appear in reverse first-occurrence order.
pub fn rmp_factored(nodes: &NodeSet) -> Result<Vec<QPoly>, Error> {
    let groups = class_groups(nodes.nodes())?;
    let mut factors = Vec::with_capacity(groups.len());
    let mut singles = QPoly::one();
    for (_, members) in &groups {
        if members.len() == 2 {
            factors.push(char_quadratic(&nodes.nodes()[members[0]]));
        } else {
            let a = &nodes.nodes()[members[0]];
            let v = singles.eval_right(a);
            let factor = QPoly::z_minus(&a.conjugate_by(&v.inv()));
            singles = &factor * &singles;
            factors.push(factor);
        }
    }
    factors.reverse();
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quat;

    fn set(nodes: Vec<Quat>) -> NodeSet {
        NodeSet::new(nodes).unwrap()
    }

    #[test]
    fn node_set_rejects_repeats() {
        assert_eq!(
            NodeSet::new(vec![Quat::i(), Quat::i()]).unwrap_err(),
            Error::NodesNotDistinct
        );
        assert!(NodeSet::new(vec![Quat::i(), Quat::j()]).is_ok());
    }

    #[test]
    fn characteristic_polynomials() {
        // [i]: z² + 1.
        assert_eq!(
            char_poly(&Quat::i()).unwrap(),
            QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()])
        );
        // [1+i]: z² - 2z + 2.
        assert_eq!(
            char_poly(&Quat::from_ints(1, 1, 0, 0)).unwrap(),
            QPoly::from_coeffs(vec![
                Quat::from_ints(2, 0, 0, 0),
                Quat::from_ints(-2, 0, 0, 0),
                Quat::one()
            ])
        );
        assert_eq!(char_poly(&Quat::from_ints(2, 0, 0, 0)).unwrap_err(), Error::RealInput);
        // Vanishes on the whole class, from either side.
        let x = char_poly(&Quat::i()).unwrap();
        for p in [Quat::j(), Quat::k(), -Quat::i()] {
            assert_eq!(x.eval_left(&p), Quat::zero());
            assert_eq!(x.eval_right(&p), Quat::zero());
        }
    }

    #[test]
    fn minimal_polynomial_of_a_class_pair() {
        // {i, j} spans its class: the minimal polynomial is z² + 1.
        let expect = QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]);
        assert_eq!(lmp(&set(vec![Quat::i(), Quat::j()])), expect);
        assert_eq!(rmp(&set(vec![Quat::i(), Quat::j()])), expect);
        // A third class member is already annihilated.
        assert_eq!(lmp(&set(vec![Quat::i(), Quat::j(), Quat::k()])), expect);
    }

    #[test]
    fn minimal_polynomial_mixed_classes() {
        // {i, 1}: (z - i)(z - 1).
        let p = lmp(&set(vec![Quat::i(), Quat::one()]));
        assert_eq!(p, QPoly::z_minus(&Quat::i()) * QPoly::z_minus(&Quat::one()));
        assert_eq!(p.eval_left(&Quat::i()), Quat::zero());
        assert_eq!(p.eval_left(&Quat::one()), Quat::zero());
        assert!(p.is_monic());
        // Empty set: the unit polynomial.
        assert!(lmp(&set(vec![])).is_one());
        assert!(rmp(&set(vec![])).is_one());
    }

    #[test]
    fn minimal_polynomials_annihilate_from_their_side() {
        let nodes = vec![
            Quat::from_ints(0, 1, 2, 0),
            Quat::from_ints(1, 0, 0, 1),
            Quat::from_ints(0, 2, -1, 3),
            // A second member of the first class.
            Quat::from_ints(0, 1, 2, 0).conjugate_by(&Quat::from_ints(1, 1, 0, 2)),
        ];
        let l = lmp(&set(nodes.clone()));
        let r = rmp(&set(nodes.clone()));
        assert!(l.is_monic() && r.is_monic());
        for a in &nodes {
            assert_eq!(l.eval_left(a), Quat::zero());
            assert_eq!(r.eval_right(a), Quat::zero());
        }
        // Order does not matter.
        let mut rev = nodes.clone();
        rev.reverse();
        assert_eq!(lmp(&set(rev.clone())), l);
        assert_eq!(rmp(&set(rev)), r);
    }

    #[test]
    fn factored_forms() {
        // {i, j, 1}: the doubled class gives z² + 1, then z - 1.
        let fs = lmp_factored(&set(vec![Quat::i(), Quat::j(), Quat::one()])).unwrap();
        assert_eq!(
            fs,
            vec![
                QPoly::from_coeffs(vec![Quat::one(), Quat::zero(), Quat::one()]),
                QPoly::z_minus(&Quat::one()),
            ]
        );
        // {1, 2}: [z - 1, z - 2].
        let two = Quat::from_ints(2, 0, 0, 0);
        let fs = lmp_factored(&set(vec![Quat::one(), two.clone()])).unwrap();
        assert_eq!(fs, vec![QPoly::z_minus(&Quat::one()), QPoly::z_minus(&two)]);
        // {i}: [z - i].
        let fs = lmp_factored(&set(vec![Quat::i()])).unwrap();
        assert_eq!(fs, vec![QPoly::z_minus(&Quat::i())]);
        // Three nodes in one class is out of scope.
        assert_eq!(
            lmp_factored(&set(vec![Quat::i(), Quat::j(), Quat::k()])).unwrap_err(),
            Error::AssumptionAViolated { class: Quat::i().class_key() }
        );
    }

    #[test]
    fn real_norm_products_match_conjugate_products() {
        // A class pair, a fresh class, and a real node: the per-node
        // quadratic product equals conjugate(p)·p for both minimal
        // polynomials.
        let nodes = vec![
            Quat::from_ints(0, 1, 2, 0),
            Quat::from_ints(1, 0, 0, 1),
            Quat::from_ints(0, 1, 2, 0).conjugate_by(&Quat::from_ints(1, 1, 0, 2)),
            Quat::from_ints(2, 0, 0, 0),
        ];
        let real = real_norm_product(&nodes);
        let l = lmp_of(&nodes);
        let r = rmp_of(&nodes);
        assert_eq!(real, &l.conjugate() * &l);
        assert_eq!(real, &r.conjugate() * &r);
        assert!(real.is_real());
        assert!(real_norm_product(&[]).is_one());
    }

    #[test]
    fn deleted_minimal_polynomials_match_recomputation() {
        let nodes = vec![
            Quat::from_ints(0, 1, 2, 0),
            Quat::from_ints(1, 0, 0, 1),
            Quat::from_ints(0, 1, 2, 0).conjugate_by(&Quat::from_ints(1, 1, 0, 2)),
            Quat::from_ints(2, 0, 0, 0),
        ];
        let dl = lmp_deleted(&nodes);
        let dr = rmp_deleted(&nodes);
        assert_eq!(dl.len(), nodes.len());
        for k in 0..nodes.len() {
            let mut rest = nodes.clone();
            rest.remove(k);
            assert_eq!(dl[k], lmp_of(&rest));
            assert_eq!(dr[k], rmp_of(&rest));
        }
        assert!(lmp_deleted(&[]).is_empty());
        assert_eq!(lmp_deleted(&[Quat::i()]), vec![QPoly::one()]);
    }

    #[test]
    fn factored_products_reassemble() {
        let nodes = vec![
            Quat::from_ints(0, 1, 2, 0),
            Quat::from_ints(1, 0, 0, 1),
            Quat::from_ints(0, 1, 2, 0).conjugate_by(&Quat::from_ints(0, 1, -1, 1)),
            Quat::from_ints(3, 0, 0, 0),
        ];
        let ns = set(nodes);
        let mut prod = QPoly::one();
        for f in lmp_factored(&ns).unwrap() {
            prod = &prod * &f;
        }
        assert_eq!(prod, lmp(&ns));
        let mut prod = QPoly::one();
        for f in rmp_factored(&ns).unwrap() {
            prod = &prod * &f;
        }
        assert_eq!(prod, rmp(&ns));
        // Degree bookkeeping: two singles + one pair = 2 + 2.
        assert_eq!(lmp(&ns).degree(), Some(4));
    }
}
