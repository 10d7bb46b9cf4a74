//! Finite groups as explicit multiplication tables, together with their
//! linear action on the basis of V.
//!
//! Tables rather than presentations: the checks only ever need finite groups
//! element by element, and a table makes conjugation and sums over the group
//! trivial. Nothing is assumed about a table — associativity, identity,
//! inverses and the representation property are all checked.

use thiserror::Error;

use crate::check::CheckReport;
use crate::presentation::QMatrix;
use crate::scalar::CycloScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupDataError {
    #[error("multiplication table must be square, row {row} has length {len} (order {order})")]
    RaggedTable { row: usize, len: usize, order: usize },
    #[error("element id {id} out of range in table row {row}")]
    IdOutOfRange { row: usize, id: usize },
    #[error("action matrix for element {element} must be {n}x{n}")]
    BadMatrixShape { element: usize, n: usize },
    #[error("need one action matrix per group element ({expected}), got {got}")]
    WrongMatrixCount { expected: usize, got: usize },
}

/// A finite group given by its full multiplication table; element 0 is the
/// identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mult: Vec<Vec<usize>>,
}

impl GroupTable {
    /// Shape-checks only; run [`GroupTable::validate`] for the group axioms.
    pub fn new(mult: Vec<Vec<usize>>) -> Result<Self, GroupDataError> {
        let order = mult.len();
        for (row, r) in mult.iter().enumerate() {
            if r.len() != order {
                return Err(GroupDataError::RaggedTable { row, len: r.len(), order });
            }
            if let Some(&id) = r.iter().find(|&&id| id >= order) {
                return Err(GroupDataError::IdOutOfRange { row, id });
            }
        }
        Ok(GroupTable { order, mult })
    }

    pub fn trivial() -> Self {
        GroupTable { order: 1, mult: vec![vec![0]] }
    }

    pub fn cyclic(order: usize) -> Self {
        assert!(order > 0);
        let mult = (0..order)
            .map(|i| (0..order).map(|j| (i + j) % order).collect())
            .collect();
        GroupTable { order, mult }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.mult[g][h]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.mult
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Two-sided inverse of g, if the table has one.
    pub fn inverse(&self, g: usize) -> Option<usize> {
        (0..self.order).find(|&x| self.mult[g][x] == 0 && self.mult[x][g] == 0)
    }

    /// h g h^{-1}, if h is invertible in the table.
    pub fn conjugate(&self, h: usize, g: usize) -> Option<usize> {
        let hinv = self.inverse(h)?;
        Some(self.mult[self.mult[h][g]][hinv])
    }

    /// Check associativity, the two-sided identity at 0, and inverses.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        for g in 0..self.order {
            if self.mult[0][g] != g || self.mult[g][0] != g {
                report.push("identity", format!("element 0 is not an identity at g={g}"));
            }
        }
        for a in 0..self.order {
            for b in 0..self.order {
                for c in 0..self.order {
                    if self.mult[self.mult[a][b]][c] != self.mult[a][self.mult[b][c]] {
                        report.push("associativity", format!("(a,b,c) = ({a},{b},{c})"));
                    }
                }
            }
        }
        for g in 0..self.order {
            if self.inverse(g).is_none() {
                report.push("inverse", format!("no two-sided inverse for element {g}"));
            }
        }
        report
    }
}

/// One n x n matrix per group element; entry (l, j) is the coefficient of
/// v_l in the image of v_j, so column j holds the coordinates of the image
/// of v_j.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionMatrix {
    n: usize,
    mats: Vec<Vec<Vec<CycloScalar>>>,
}

impl ActionMatrix {
    pub fn new(n: usize, mats: Vec<Vec<Vec<CycloScalar>>>, group_order: usize) -> Result<Self, GroupDataError> {
        if mats.len() != group_order {
            return Err(GroupDataError::WrongMatrixCount { expected: group_order, got: mats.len() });
        }
        for (element, m) in mats.iter().enumerate() {
            if m.len() != n || m.iter().any(|row| row.len() != n) {
                return Err(GroupDataError::BadMatrixShape { element, n });
            }
        }
        Ok(ActionMatrix { n, mats })
    }

    /// The trivial action of the trivial group.
    pub fn identity(n: usize) -> Self {
        ActionMatrix { n, mats: vec![identity_matrix(n)] }
    }

    /// Diagonal action: one scalar per basis vector per group element.
    pub fn diagonal(n: usize, diagonals: Vec<Vec<CycloScalar>>) -> Self {
        let mats = diagonals
            .into_iter()
            .map(|d| {
                assert_eq!(d.len(), n);
                let mut m = zero_matrix(n);
                for (i, s) in d.into_iter().enumerate() {
                    m[i][i] = s;
                }
                m
            })
            .collect();
        ActionMatrix { n, mats }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self, g: usize) -> &Vec<Vec<CycloScalar>> {
        &self.mats[g]
    }

    /// Coefficient of v_l in the image of v_j under g (all indices 0-based).
    pub fn entry(&self, g: usize, l: usize, j: usize) -> &CycloScalar {
        &self.mats[g][l][j]
    }

    /// Apply the matrix of g to a coordinate vector.
    pub fn apply(&self, g: usize, vec: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut out = vec![CycloScalar::zero(); self.n];
        for (j, c) in vec.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for l in 0..self.n {
                let e = self.entry(g, l, j);
                if !e.is_zero() {
                    out[l] = &out[l] + &(e * c);
                }
            }
        }
        out
    }

    /// Representation property matrix(g) matrix(h) = matrix(gh) on all pairs,
    /// and matrix(identity) = identity matrix.
    pub fn validate(&self, table: &GroupTable) -> CheckReport {
        let mut report = CheckReport::new();
        if self.mats.len() != table.order() {
            report.push(
                "matrix count",
                format!("{} matrices for a group of order {}", self.mats.len(), table.order()),
            );
            return report;
        }
        if self.mats[0] != identity_matrix(self.n) {
            report.push("identity matrix", "matrix(0) is not the identity".to_string());
        }
        for g in table.elements() {
            for h in table.elements() {
                let prod = mat_mul(&self.mats[g], &self.mats[h]);
                if prod != self.mats[table.mul(g, h)] {
                    report.push("representation", format!("(g,h) = ({g},{h})"));
                }
            }
        }
        report
    }
}

fn zero_matrix(n: usize) -> Vec<Vec<CycloScalar>> {
    vec![vec![CycloScalar::zero(); n]; n]
}

fn identity_matrix(n: usize) -> Vec<Vec<CycloScalar>> {
    let mut m = zero_matrix(n);
    for i in 0..n {
        m[i][i] = CycloScalar::one();
    }
    m
}

fn mat_mul(a: &[Vec<CycloScalar>], b: &[Vec<CycloScalar>]) -> Vec<Vec<CycloScalar>> {
    let n = a.len();
    let mut out = zero_matrix(n);
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = &out[i][j] + &(&a[i][k] * &b[k][j]);
                }
            }
        }
    }
    out
}

/// Combined group-axiom and representation-property report.
pub fn validate_group(table: &GroupTable, action: &ActionMatrix) -> CheckReport {
    let mut report = table.validate();
    report.merge(action.validate(table));
    report
}

/// For every g and i < j, the image of the relation v_i v_j - q_ij v_j v_i
/// (expanded bilinearly in the free algebra) must lie in the span of the
/// relations {v_k v_l - q_kl v_l v_k : k < l}. This is exactly what extending
/// the action to algebra automorphisms of the quantum symmetric algebra
/// requires of a quadratic algebra.
pub fn check_q_compatibility(q: &QMatrix, table: &GroupTable, action: &ActionMatrix) -> CheckReport {
    let n = action.dim();
    let mut report = CheckReport::new();
    for g in table.elements() {
        for i in 0..n {
            for j in (i + 1)..n {
                // Coefficient of the word v_a v_b in the image of
                // v_i v_j - q_ij v_j v_i.
                let mut coef = vec![vec![CycloScalar::zero(); n]; n];
                for a in 0..n {
                    let gia = action.entry(g, a, i);
                    let gja = action.entry(g, a, j);
                    for b in 0..n {
                        let first = gia * action.entry(g, b, j);
                        let second = q.q(i, j) * &(gja * action.entry(g, b, i));
                        coef[a][b] = &first - &second;
                    }
                }
                for a in 0..n {
                    if !coef[a][a].is_zero() {
                        report.push(
                            "q-compatibility",
                            format!("(g,i,j) = ({g},{},{}): diagonal word v{}*v{} survives",
                                i + 1, j + 1, a + 1, a + 1),
                        );
                    }
                    for b in (a + 1)..n {
                        // Membership in the span of v_a v_b - q_ab v_b v_a.
                        let resid = &coef[b][a] + &(q.q(a, b) * &coef[a][b]);
                        if !resid.is_zero() {
                            report.push(
                                "q-compatibility",
                                format!("(g,i,j) = ({g},{},{}): pair (v{},v{}) leaves the relation span",
                                    i + 1, j + 1, a + 1, b + 1),
                            );
                        }
                    }
                }
            }
        }
    }
    report
}

/// The quantum (i,j,k,l)-minor determinant of g: the coefficient pattern by
/// which g moves the relation slot (j,i) to the slot (l,k). All indices
/// 0-based here.
pub fn quantum_minor_det(
    q: &QMatrix,
    action: &ActionMatrix,
    g: usize,
    i: usize,
    j: usize,
    k: usize,
    l: usize,
) -> CycloScalar {
    // g^j_l g^i_k - q_ji g^i_l g^j_k, where g^j_l = entry (l, j).
    let first = action.entry(g, l, j) * action.entry(g, k, i);
    let second = q.q(j, i) * &(action.entry(g, l, i) * action.entry(g, k, j));
    &first - &second
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycloScalar;

    fn z3(e: i64) -> CycloScalar {
        CycloScalar::root_of_unity(3, e)
    }

    /// The cyclic group of order 3 acting by diag(q, q^2, 1), q = zeta_3.
    fn cyclic3_diag() -> (GroupTable, ActionMatrix) {
        let table = GroupTable::cyclic(3);
        let action = ActionMatrix::diagonal(
            3,
            (0..3)
                .map(|t| vec![z3(t), z3(2 * t), CycloScalar::one()])
                .collect(),
        );
        (table, action)
    }

    #[test]
    fn trivial_group_is_valid() {
        let t = GroupTable::trivial();
        let a = ActionMatrix::identity(1);
        assert!(validate_group(&t, &a).passed());
    }

    #[test]
    fn cyclic3_with_diagonal_action_is_valid() {
        let (t, a) = cyclic3_diag();
        assert!(validate_group(&t, &a).passed());
    }

    #[test]
    fn broken_table_reports_missing_inverse() {
        // mult(1,1) = 1 leaves element 1 without an inverse.
        let t = GroupTable::new(vec![vec![0, 1], vec![1, 1]]).unwrap();
        let report = t.validate();
        assert!(!report.passed());
        assert!(report.issues.iter().any(|i| i.rule == "inverse"));
    }

    #[test]
    fn representation_violation_is_reported() {
        let t = GroupTable::cyclic(2);
        // matrix(1)^2 = diag(-1,-1)^2 = I = matrix(0): fine.
        let good = ActionMatrix::diagonal(
            2,
            vec![
                vec![CycloScalar::one(), CycloScalar::one()],
                vec![CycloScalar::from_integer(-1), CycloScalar::from_integer(-1)],
            ],
        );
        assert!(good.validate(&t).passed());
        // matrix(1)^2 = diag(4,1) != I.
        let bad = ActionMatrix::diagonal(
            2,
            vec![
                vec![CycloScalar::one(), CycloScalar::one()],
                vec![CycloScalar::from_integer(2), CycloScalar::one()],
            ],
        );
        let report = bad.validate(&t);
        assert!(report.issues.iter().any(|i| i.rule == "representation"));
    }

    #[test]
    fn diagonal_actions_are_q_compatible() {
        let (t, a) = cyclic3_diag();
        let q = QMatrix::from_upper_entries(
            3,
            &[(0, 1, z3(2)), (0, 2, z3(1)), (1, 2, z3(2))],
        )
        .unwrap();
        assert!(check_q_compatibility(&q, &t, &a).passed());
    }

    #[test]
    fn swap_action_with_q_two_is_incompatible() {
        let t = GroupTable::cyclic(2);
        let swap = vec![
            vec![CycloScalar::zero(), CycloScalar::one()],
            vec![CycloScalar::one(), CycloScalar::zero()],
        ];
        let a = ActionMatrix::new(
            2,
            vec![
                vec![
                    vec![CycloScalar::one(), CycloScalar::zero()],
                    vec![CycloScalar::zero(), CycloScalar::one()],
                ],
                swap,
            ],
            2,
        )
        .unwrap();
        assert!(validate_group(&t, &a).passed());
        let q = QMatrix::from_upper_entries(2, &[(0, 1, CycloScalar::from_integer(2))]).unwrap();
        let report = check_q_compatibility(&q, &t, &a);
        assert!(!report.passed());
        assert!(report.issues.iter().any(|i| i.witness.contains("(1,1,2)")));
    }

    #[test]
    fn quantum_minor_of_identity_is_delta_pattern() {
        let (t, a) = cyclic3_diag();
        let q = QMatrix::from_upper_entries(
            3,
            &[(0, 1, z3(2)), (0, 2, z3(1)), (1, 2, z3(2))],
        )
        .unwrap();
        let _ = t;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let det = quantum_minor_det(&q, &a, 0, i, j, k, l);
                        let delta = |x: usize, y: usize| {
                            if x == y { CycloScalar::one() } else { CycloScalar::zero() }
                        };
                        let expected =
                            &(&delta(j, l) * &delta(i, k)) - &(q.q(j, i) * &(&delta(i, l) * &delta(j, k)));
                        assert_eq!(det, expected);
                    }
                }
            }
        }
    }

    #[test]
    fn quantum_minor_generator_1212_is_one() {
        // det_{1212}(g) = g^2_2 g^1_1 - q_21 g^1_2 g^2_1 = q^2 * q = 1.
        let (_, a) = cyclic3_diag();
        let q = QMatrix::from_upper_entries(
            3,
            &[(0, 1, z3(2)), (0, 2, z3(1)), (1, 2, z3(2))],
        )
        .unwrap();
        let det = quantum_minor_det(&q, &a, 1, 0, 1, 0, 1);
        assert!(det.is_one());
    }

    #[test]
    fn quantum_minor_diagonal_off_support_vanishes() {
        let (_, a) = cyclic3_diag();
        let q = QMatrix::from_upper_entries(
            3,
            &[(0, 1, z3(2)), (0, 2, z3(1)), (1, 2, z3(2))],
        )
        .unwrap();
        // {k,l} != {i,j} forces zero for a diagonal action.
        assert!(quantum_minor_det(&q, &a, 1, 0, 1, 0, 2).is_zero());
        assert!(quantum_minor_det(&q, &a, 2, 0, 1, 2, 2).is_zero());
    }

    #[test]
    fn conjugation_in_abelian_group_is_identity() {
        let t = GroupTable::cyclic(4);
        for h in t.elements() {
            for g in t.elements() {
                assert_eq!(t.conjugate(h, g), Some(g));
            }
        }
    }

    #[test]
    fn conjugation_by_identity_is_identity() {
        let t = GroupTable::cyclic(3);
        for g in t.elements() {
            assert_eq!(t.conjugate(0, g), Some(g));
        }
    }

    #[test]
    fn symmetric_group_conjugation_matches_permutation_composition() {
        // Build S_3 from explicit permutations; the table oracle is
        // composition of permutations.
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2], // e
            vec![1, 0, 2], // (12)
            vec![2, 1, 0], // (13)
            vec![0, 2, 1], // (23)
            vec![1, 2, 0], // (123): 0->1, 1->2, 2->0
            vec![2, 0, 1], // (132)
        ];
        let compose = |a: &Vec<usize>, b: &Vec<usize>| -> Vec<usize> {
            // (a*b)(x) = a(b(x))
            (0..3).map(|x| a[b[x]]).collect()
        };
        let index_of = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
        let mult: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| index_of(&compose(a, b))).collect())
            .collect();
        let t = GroupTable::new(mult).unwrap();
        assert!(t.validate().passed());
        // (12)(123)(12) = (132)
        assert_eq!(t.conjugate(1, 4), Some(5));
    }
}
