//! Linear-system solving over the quaternions and the alternative
//! interpolation schemes built on it: the monomial (Vandermonde) basis, the
//! Newton triangular basis with incremental node insertion, and the degree
//! formulas for one- and two-sided interpolants.
//!
//! Because scalars do not commute, a linear system must say on which side of
//! the matrix entries its unknowns sit; [`UnknownSide`] makes that explicit
//! and [`solve_linear`] handles both orientations by exact Gaussian
//! elimination (left row operations directly, or via componentwise
//! conjugation, which swaps factor order).

use alloc::vec::Vec;

use crate::conjclass::{self, NodeSet};
use crate::consistency::ReducedProblem;
use crate::error::Error;
use crate::lagrange::twisted_value_right;
use crate::poly::QPoly;
use crate::quat::Quat;

// ---- matrices ----

/// A rectangular matrix of quaternions, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Quat>,
}

impl QMatrix {
    /// Builds a matrix from a row-major entry list.
    ///
    /// Panics when the entry count is not `rows * cols`.
    pub fn new(rows: usize, cols: usize, entries: Vec<Quat>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows * cols");
        QMatrix { rows, cols, entries }
    }

    /// The Vandermonde matrix of the nodes: entry `(i, t)` is `nodes[i]^t`.
    pub fn vandermonde(nodes: &[Quat], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(nodes.len() * cols);
        for node in nodes {
            let mut power = Quat::one();
            for t in 0..cols {
                if t > 0 {
                    power = &power * node;
                }
                entries.push(power.clone());
            }
        }
        QMatrix { rows: nodes.len(), cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &Quat {
        assert!(row < self.rows && col < self.cols, "index out of range");
        &self.entries[row * self.cols + col]
    }

    pub fn transpose(&self) -> QMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for col in 0..self.cols {
            for row in 0..self.rows {
                entries.push(self.at(row, col).clone());
            }
        }
        QMatrix { rows: self.cols, cols: self.rows, entries }
    }
}

/// Which side of the matrix entries the unknowns multiply on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UnknownSide {
    /// Solve `A·x = rhs`: row `i` reads `sum_j A[i][j]·x[j] = rhs[i]`, the
    /// unknown coefficients standing to the right of the entries.
    CoefficientsOnRight,
    /// Solve `x·A = rhs`: column `j` reads `sum_i x[i]·A[i][j] = rhs[j]`,
    /// the unknown coefficients standing to the left of the entries.
    CoefficientsOnLeft,
}

// Gauss-Jordan elimination by left row operations over the first
// `pivot_cols` columns; extra columns on the right ride along.  Pivots are
// the first nonzero entry down each column (the arithmetic is exact, so
// there is nothing to gain from magnitude pivoting and determinism wins).
// Returns the pivot columns found.
fn row_reduce(rows: &mut [Vec<Quat>], pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    for col in 0..pivot_cols {
        let rank = pivots.len();
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inv();
        for e in rows[rank].iter_mut() {
            *e = &inv * &*e;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                *e = &*e - &(&factor * p);
            }
        }
        pivots.push(col);
        if pivots.len() == rows.len() {
            break;
        }
    }
    pivots
}

// Unique solution of A·x = rhs (unknowns on the right), or Singular.
fn solve_unknowns_on_right(a: &QMatrix, rhs: &[Quat]) -> Result<Vec<Quat>, Error> {
    let n = a.rows();
    let mut rows: Vec<Vec<Quat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Quat> = (0..n).map(|j| a.at(i, j).clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    if row_reduce(&mut rows, n).len() < n {
        return Err(Error::Singular);
    }
    Ok(rows.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

// Does A·x = rhs have any solution (A rectangular, unknowns on the right)?
fn solvable_unknowns_on_right(a: &QMatrix, rhs: &[Quat]) -> bool {
    let k = a.cols();
    let mut rows: Vec<Vec<Quat>> = (0..a.rows())
        .map(|i| {
            let mut row: Vec<Quat> = (0..k).map(|j| a.at(i, j).clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    row_reduce(&mut rows, k);
    rows.iter()
        .all(|row| row[..k].iter().any(|e| !e.is_zero()) || row[k].is_zero())
}

/// Solves a square linear system over the quaternions exactly.
///
/// For [`UnknownSide::CoefficientsOnRight`] the system is `A·x = rhs` and is
/// solved by Gaussian elimination with left row operations.  For
/// [`UnknownSide::CoefficientsOnLeft`] the system is `x·A = rhs`;
/// conjugating every equation turns it into the first kind (conjugation
/// reverses products), which is solved and conjugated back.
///
/// Errors with [`Error::Singular`] when elimination finds no usable pivot in
/// some column, i.e. the matrix is not invertible.
pub fn solve_linear(a: &QMatrix, rhs: &[Quat], side: UnknownSide) -> Result<Vec<Quat>, Error> {
    assert_eq!(a.rows(), a.cols(), "matrix must be square");
    assert_eq!(a.rows(), rhs.len(), "right-hand side length must match");
    match side {
        UnknownSide::CoefficientsOnRight => solve_unknowns_on_right(a, rhs),
        UnknownSide::CoefficientsOnLeft => {
            let n = a.rows();
            let star = QMatrix::new(
                n,
                n,
                (0..n)
                    .flat_map(|j| (0..n).map(move |i| a.at(i, j).conj()))
                    .collect(),
            );
            let rhs_star: Vec<Quat> = rhs.iter().map(Quat::conj).collect();
            let x_star = solve_unknowns_on_right(&star, &rhs_star)?;
            Ok(x_star.iter().map(Quat::conj).collect())
        }
    }
}

// ---- Newton's scheme ----

/// The Newton form of a left interpolant: basis polynomials `p_0, ..,
/// p_{n-1}` (each `p_t` the left minimal polynomial of the first `t` nodes)
/// and coefficients `phi_t`, with interpolant `sum p_t·phi_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NewtonCoeffs {
    nodes: Vec<Quat>,
    phis: Vec<Quat>,
    basis: Vec<QPoly>,
}

impl NewtonCoeffs {
    pub fn nodes(&self) -> &[Quat] {
        &self.nodes
    }

    pub fn phis(&self) -> &[Quat] {
        &self.phis
    }

    pub fn basis(&self) -> &[QPoly] {
        &self.basis
    }

    /// The interpolant `sum p_t·phi_t`; it satisfies every left condition
    /// the coefficients were built from.
    pub fn interpolant(&self) -> QPoly {
        let mut f = QPoly::zero();
        for (p, phi) in self.basis.iter().zip(&self.phis) {
            f = &f + &p.mul_const_right(phi);
        }
        f
    }
}

fn check_nodes(nodes: &[Quat]) -> Result<(), Error> {
    for (i, node) in nodes.iter().enumerate() {
        if nodes[..i].iter().any(|n| n == node) {
            return Err(Error::NodesNotDistinct);
        }
    }
    conjclass::class_groups(nodes).map(|_| ())
}

// The next Newton basis polynomial: p·(z - v⁻¹·node·v) with v = p's left
// value at the node, nonzero whenever the node is new to p's node set and
// its class holds at most one of them.
fn extend_basis(p: &QPoly, node: &Quat) -> QPoly {
    let v = p.eval_left(node);
    p * &QPoly::z_minus(&node.conjugate_by(&v))
}

/// Builds the Newton coefficients of the left interpolation problem by the
/// forward substitution of its lower-triangular system: `phi_j` is fixed by
/// the condition at node `j` once `phi_0, .., phi_{j-1}` are known.
///
/// The interpolant equals the left Lagrange solution coefficient for
/// coefficient; both are the unique solution of degree `< n`.
pub fn newton_left(left: &[(Quat, Quat)]) -> Result<NewtonCoeffs, Error> {
    let nodes: Vec<Quat> = left.iter().map(|(n, _)| n.clone()).collect();
    check_nodes(&nodes)?;
    let mut nc = NewtonCoeffs { nodes: Vec::new(), phis: Vec::new(), basis: Vec::new() };
    for (node, value) in left {
        push_condition(&mut nc, node, value);
    }
    Ok(nc)
}

fn push_condition(nc: &mut NewtonCoeffs, node: &Quat, value: &Quat) {
    let p = match (nc.basis.last(), nc.nodes.last()) {
        (Some(p), Some(last)) => extend_basis(p, last),
        _ => QPoly::one(),
    };
    let mut residual = value.clone();
    for (q, phi) in nc.basis.iter().zip(&nc.phis) {
        residual = &residual - &(&q.eval_left(node) * phi);
    }
    nc.phis.push(&p.eval_left(node).inv() * &residual);
    nc.basis.push(p);
    nc.nodes.push(node.clone());
}

/// Adds one node to an existing Newton interpolant, computing only the one
/// new basis polynomial and the one new coefficient.  The result equals
/// [`newton_left`] on the extended condition list.
///
/// Errors when the node repeats an existing one or is equivalent to two of
/// them.
pub fn newton_append(nc: &NewtonCoeffs, node: &Quat, value: &Quat) -> Result<NewtonCoeffs, Error> {
    if nc.nodes.contains(node) {
        return Err(Error::NodesNotDistinct);
    }
    if nc.nodes.iter().filter(|n| n.equivalent(node)).count() >= 2 {
        return Err(Error::AssumptionAViolated { class: node.class_key() });
    }
    let mut extended = nc.clone();
    push_condition(&mut extended, node, value);
    Ok(extended)
}

/// The degree of the minimal-degree left interpolant: the smallest `d` such
/// that the target column lies in the right-linear span of the Vandermonde
/// columns for powers `0..=d`.  `None` when all targets are zero (the zero
/// polynomial interpolates, and has no degree).
pub fn left_degree(left: &[(Quat, Quat)]) -> Result<Option<usize>, Error> {
    let nodes: Vec<Quat> = left.iter().map(|(n, _)| n.clone()).collect();
    check_nodes(&nodes)?;
    let values: Vec<Quat> = left.iter().map(|(_, v)| v.clone()).collect();
    if values.iter().all(Quat::is_zero) {
        return Ok(None);
    }
    let full = QMatrix::vandermonde(&nodes, left.len());
    for d in 0..left.len() {
        if solvable_unknowns_on_right(&leading_columns(&full, d + 1), &values) {
            return Ok(Some(d));
        }
    }
    unreachable!("a degree < n interpolant always exists under the node preconditions")
}

// The leading `cols` columns of `m`, as a new matrix.
fn leading_columns(m: &QMatrix, cols: usize) -> QMatrix {
    let mut entries = Vec::with_capacity(m.rows() * cols);
    for i in 0..m.rows() {
        for t in 0..cols {
            entries.push(m.at(i, t).clone());
        }
    }
    QMatrix::new(m.rows(), cols, entries)
}

// ---- two-sided schemes ----

// Right analogue of Newton's scheme: h with h.eval_right(node) = value for
// every condition, of degree < the condition count, built on the right
// minimal polynomial basis with coefficients multiplying from the left.
fn right_newton(right: &[(Quat, Quat)]) -> QPoly {
    let mut basis_p = QPoly::one();
    let mut nodes: Vec<Quat> = Vec::new();
    let mut basis: Vec<QPoly> = Vec::new();
    let mut phis: Vec<Quat> = Vec::new();
    for (node, value) in right {
        if let Some(last) = nodes.last() {
            let w = basis_p.eval_right(last);
            basis_p = &QPoly::z_minus(&last.conjugate_by(&w.inv())) * &basis_p;
        }
        let mut residual = value.clone();
        for (q, phi) in basis.iter().zip(&phis) {
            residual = &residual - &(phi * &q.eval_right(node));
        }
        phis.push(&residual * &basis_p.eval_right(node).inv());
        basis.push(basis_p.clone());
        nodes.push(node.clone());
    }
    let mut h = QPoly::zero();
    for (q, phi) in basis.iter().zip(&phis) {
        h = &h + &q.mul_const_left(phi);
    }
    h
}

// The second-stage targets: values delta_j with h.eval_right(beta_j) =
// delta_j forcing (p_lambda·h).eval_right(beta_j) = d_j - f_l.eval_right(beta_j).
fn stage_two_targets(
    p_lambda: &QPoly,
    f_l: &QPoly,
    right: &[(Quat, Quat)],
) -> Vec<(Quat, Quat)> {
    right
        .iter()
        .map(|(beta, d)| {
            let residual = d - &f_l.eval_right(beta);
            (beta.clone(), twisted_value_right(p_lambda, &residual, beta))
        })
        .collect()
}

/// Solves a two-sided problem without paired conditions in two stages: a
/// left interpolant `f_l` by Newton's scheme, then a correction `P·h` (P
/// the left minimal polynomial of the left nodes) that repairs the right
/// conditions without disturbing the left ones.  Returns the unique
/// solution of degree `< n+m`; it is coefficient-identical to the
/// particular solution of [`crate::lagrange::solve`].
///
/// Panics when the reduced problem has paired conditions.
pub fn two_sided_newton(reduced: &ReducedProblem) -> QPoly {
    assert_eq!(reduced.pair_count(), 0, "two_sided_newton requires a problem with no pairs");
    let left = reduced.left_conditions();
    let right = reduced.right_conditions();
    let nc = newton_left(&left).expect("reduced problems satisfy the left node preconditions");
    let f_l = nc.interpolant();
    let nodes = NodeSet::new(left.iter().map(|(n, _)| n.clone()).collect())
        .expect("reduced problems have distinct left nodes");
    let p_lambda = conjclass::lmp(&nodes);
    let h = right_newton(&stage_two_targets(&p_lambda, &f_l, &right));
    &f_l + &(&p_lambda * &h)
}

/// The same two-stage construction as [`two_sided_newton`], but with both
/// stages solved in the monomial basis through [`solve_linear`].  The output
/// is coefficient-identical; only the linear algebra differs.
///
/// Panics when the reduced problem has paired conditions.
pub fn two_sided_vandermonde(reduced: &ReducedProblem) -> QPoly {
    assert_eq!(reduced.pair_count(), 0, "two_sided_vandermonde requires a problem with no pairs");
    let left = reduced.left_conditions();
    let right = reduced.right_conditions();
    let left_nodes: Vec<Quat> = left.iter().map(|(n, _)| n.clone()).collect();
    let f_l = if left.is_empty() {
        QPoly::zero()
    } else {
        let a = QMatrix::vandermonde(&left_nodes, left.len());
        let values: Vec<Quat> = left.iter().map(|(_, v)| v.clone()).collect();
        let coeffs = solve_linear(&a, &values, UnknownSide::CoefficientsOnRight)
            .expect("the left Vandermonde system of a reduced problem is invertible");
        QPoly::from_coeffs(coeffs)
    };
    let nodes = NodeSet::new(left_nodes).expect("reduced problems have distinct left nodes");
    let p_lambda = conjclass::lmp(&nodes);
    let targets = stage_two_targets(&p_lambda, &f_l, &right);
    let h = if targets.is_empty() {
        QPoly::zero()
    } else {
        let right_nodes: Vec<Quat> = targets.iter().map(|(n, _)| n.clone()).collect();
        let b = QMatrix::vandermonde(&right_nodes, targets.len()).transpose();
        let deltas: Vec<Quat> = targets.iter().map(|(_, v)| v.clone()).collect();
        let coeffs = solve_linear(&b, &deltas, UnknownSide::CoefficientsOnLeft)
            .expect("the right Vandermonde system of a reduced problem is invertible");
        QPoly::from_coeffs(coeffs)
    };
    &f_l + &(&p_lambda * &h)
}

/// The degree of the second-stage correction `h`: the smallest `d` such
/// that the row of targets lies in the left-linear span of the Vandermonde
/// rows `(beta_j^t)_j` for powers `t = 0..=d`.  `None` when every target is
/// zero (then `h = 0`).  Expects the deltas to come from a solvable second
/// stage, i.e. distinct right nodes with at most two per class.
pub fn h_degree(deltas: &[Quat], rights: &[Quat]) -> Option<usize> {
    assert_eq!(deltas.len(), rights.len(), "one delta per right node");
    if deltas.iter().all(Quat::is_zero) {
        return None;
    }
    // Conjugating every equation sum_t phi_t·beta_j^t = delta_j moves the
    // unknowns to the right of conjugated Vandermonde entries.
    let conj_nodes: Vec<Quat> = rights.iter().map(Quat::conj).collect();
    let conj_deltas: Vec<Quat> = deltas.iter().map(Quat::conj).collect();
    let full = QMatrix::vandermonde(&conj_nodes, rights.len());
    for d in 0..rights.len() {
        if solvable_unknowns_on_right(&leading_columns(&full, d + 1), &conj_deltas) {
            return Some(d);
        }
    }
    unreachable!("an h of degree < m always exists under the node preconditions")
}
