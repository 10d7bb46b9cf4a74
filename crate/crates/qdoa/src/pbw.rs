//! Direct evaluation of the four necessary-and-sufficient conditions for the
//! deformed quotient to be a PBW deformation, plus the dispatcher over the
//! three independent verdict routes (direct, homological, dimension oracle).
//!
//! Every condition is exposed both as a per-cell residual (so tests can probe
//! single tuples) and as a full report over all group elements and all
//! distinct ordered index triples. Sorted triples would suffice if the
//! redundancy argument is trusted; it is verified empirically instead.

use std::fmt;

use crate::algebra::AlgebraElement;
use crate::group::quantum_minor_det;
use crate::hochschild;
use crate::oracle::{self, OracleError, OracleLimits};
use crate::presentation::DeformationSpec;
use crate::scalar::CycloScalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Direct,
    Homological,
    Oracle { degree: usize },
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Direct => write!(f, "direct"),
            Method::Homological => write!(f, "homological"),
            Method::Oracle { degree } => write!(f, "oracle (degree {degree})"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Witness {
    /// Indices of the failing cell, e.g. "g=0 (i,j,k)=(1,2,3)".
    pub location: String,
    /// The nonzero residual, printed canonically.
    pub residual: String,
}

#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub name: String,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

impl ConditionReport {
    fn from_witnesses(name: impl Into<String>, witnesses: Vec<Witness>) -> Self {
        ConditionReport { name: name.into(), pass: witnesses.is_empty(), witnesses }
    }
}

#[derive(Debug, Clone)]
pub struct PbwReport {
    pub method: Method,
    pub conditions: Vec<ConditionReport>,
    /// Cumulative dimensions against the PBW count, oracle method only.
    pub dims: Option<(Vec<usize>, Vec<usize>)>,
    pub pass: bool,
}

impl PbwReport {
    fn new(method: Method, conditions: Vec<ConditionReport>) -> Self {
        let pass = conditions.iter().all(|c| c.pass);
        PbwReport { method, conditions, dims: None, pass }
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<CycloScalar> {
    let mut v = vec![CycloScalar::zero(); n];
    v[i] = CycloScalar::one();
    v
}

fn vec_is_zero(v: &[CycloScalar]) -> bool {
    v.iter().all(CycloScalar::is_zero)
}

fn vec_sub(a: &[CycloScalar], b: &[CycloScalar]) -> Vec<CycloScalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn vec_add_scaled(acc: &mut [CycloScalar], s: &CycloScalar, v: &[CycloScalar]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(s * x);
        }
    }
}

/// All ordered triples of pairwise distinct indices.
pub fn distinct_triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if i != j && j != k && i != k {
                    out.push((i, j, k));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// condition (1): G-invariance, in both formulations
// ---------------------------------------------------------------------------

/// Minor-determinant formulation at the cell (g, h, i < j): both residuals
/// kappa_g(v_j,v_i) - sum_{k<l} det_{ijkl}(h) kappa_{hgh^{-1}}(v_l,v_k),
/// constant part and (with the action applied on the left) linear part.
pub fn condition1_minor_residual(
    spec: &DeformationSpec,
    g: usize,
    h: usize,
    i: usize,
    j: usize,
) -> (CycloScalar, Vec<CycloScalar>) {
    let n = spec.dim();
    let conj = spec.conjugate(h, g);
    let mut rhs_c = CycloScalar::zero();
    let mut rhs_l = vec![CycloScalar::zero(); n];
    for k in 0..n {
        for l in (k + 1)..n {
            let det = quantum_minor_det(spec.q_matrix(), spec.action(), h, i, j, k, l);
            if det.is_zero() {
                continue;
            }
            rhs_c = &rhs_c + &(&det * &spec.kappa_c(conj, l, k));
            vec_add_scaled(&mut rhs_l, &det, &spec.kappa_l(conj, l, k));
        }
    }
    let lhs_c = spec.kappa_c(g, j, i);
    let lhs_l = spec.action().apply(h, &spec.kappa_l(g, j, i));
    (&lhs_c - &rhs_c, vec_sub(&lhs_l, &rhs_l))
}

/// Invariance formulation at the cell (h, i < j): the element
/// (h acting on kappa(v_i,v_j)) - kappa(image of v_i, image of v_j).
pub fn condition1_invariance_residual(
    spec: &DeformationSpec,
    h: usize,
    i: usize,
    j: usize,
) -> AlgebraElement {
    let n = spec.dim();
    let lhs = spec.undeformed().act(h, &spec.kappa_element(i, j));
    let mut rhs = AlgebraElement::zero(n);
    for a in 0..n {
        let ha = spec.action().entry(h, a, i).clone();
        if ha.is_zero() {
            continue;
        }
        for b in 0..n {
            let hb = spec.action().entry(h, b, j);
            if hb.is_zero() || a == b {
                continue;
            }
            rhs.add_assign(&spec.kappa_element(a, b).scale(&(&ha * hb)));
        }
    }
    lhs.sub(&rhs)
}

/// Condition (1) over all cells; the two formulations are evaluated
/// independently and must agree on the verdict.
pub fn check_condition1(spec: &DeformationSpec) -> ConditionReport {
    let n = spec.dim();
    let mut witnesses = Vec::new();
    let mut minor_pass = true;
    for g in spec.group().elements() {
        for h in spec.group().elements() {
            for i in 0..n {
                for j in (i + 1)..n {
                    let (rc, rl) = condition1_minor_residual(spec, g, h, i, j);
                    if !rc.is_zero() || !vec_is_zero(&rl) {
                        minor_pass = false;
                        witnesses.push(Witness {
                            location: format!("minor form: g={g} h={h} (i,j)=({},{})", i + 1, j + 1),
                            residual: format!(
                                "const {rc}; linear {}",
                                AlgebraElement::from_vector(&rl)
                            ),
                        });
                    }
                }
            }
        }
    }
    let mut invariance_pass = true;
    for h in spec.group().elements() {
        for i in 0..n {
            for j in (i + 1)..n {
                let r = condition1_invariance_residual(spec, h, i, j);
                if !r.is_zero() {
                    invariance_pass = false;
                    witnesses.push(Witness {
                        location: format!("invariance form: h={h} (i,j)=({},{})", i + 1, j + 1),
                        residual: r.to_string(),
                    });
                }
            }
        }
    }
    // The remark that condition (1) is exactly G-invariance makes the two
    // formulations interchangeable; a disagreement would be a bug.
    assert_eq!(minor_pass, invariance_pass, "condition (1) formulations disagree");
    ConditionReport::from_witnesses("condition 1 (G-invariance of kappa)", witnesses)
}

// ---------------------------------------------------------------------------
// condition (2)
// ---------------------------------------------------------------------------

/// The six-term degree-2 element of the quantum symmetric algebra at the cell
/// (g, i, j, k); zero for every cell exactly when condition (2) holds.
pub fn condition2_residual(
    spec: &DeformationSpec,
    g: usize,
    i: usize,
    j: usize,
    k: usize,
) -> AlgebraElement {
    let n = spec.dim();
    let alg = spec.undeformed();
    let mul = |left: &[CycloScalar], right: &[CycloScalar]| {
        alg.multiply(&AlgebraElement::from_vector(left), &AlgebraElement::from_vector(right))
    };
    let e = |t: usize| unit_vector(n, t);
    let gv = |t: usize| spec.action_column(g, t);
    let kl = |a: usize, b: usize| spec.kappa_l(g, a, b);

    let q_ji_ki = spec.q(j, i) * spec.q(k, i);
    let q_kj = spec.q(k, j).clone();
    let q_ji = spec.q(j, i).clone();
    let q_ki_kj = spec.q(k, i) * spec.q(k, j);

    let mut res = mul(&e(i), &kl(k, j)).scale(&q_ji_ki);
    res = res.sub(&mul(&kl(k, j), &gv(i)));
    res = res.sub(&mul(&e(j), &kl(k, i)).scale(&q_kj));
    res = res.add(&mul(&kl(k, i), &gv(j)).scale(&q_ji));
    res = res.add(&mul(&e(k), &kl(j, i)));
    res.sub(&mul(&kl(j, i), &gv(k)).scale(&q_ki_kj))
}

fn check_six_term<F>(spec: &DeformationSpec, name: &str, mut cell: F) -> ConditionReport
where
    F: FnMut(usize, usize, usize, usize) -> Option<String>,
{
    let mut witnesses = Vec::new();
    for g in spec.group().elements() {
        for (i, j, k) in distinct_triples(spec.dim()) {
            if let Some(residual) = cell(g, i, j, k) {
                witnesses.push(Witness {
                    location: format!("g={g} (i,j,k)=({},{},{})", i + 1, j + 1, k + 1),
                    residual,
                });
            }
        }
    }
    ConditionReport::from_witnesses(name, witnesses)
}

pub fn check_condition2(spec: &DeformationSpec) -> ConditionReport {
    check_six_term(spec, "condition 2 (overlap terms of filtration degree 2)", |g, i, j, k| {
        let r = condition2_residual(spec, g, i, j, k);
        (!r.is_zero()).then(|| r.to_string())
    })
}

// ---------------------------------------------------------------------------
// condition (3)
// ---------------------------------------------------------------------------

/// Left and right sides of condition (3) at the cell (g, i, j, k), both as
/// coordinate vectors.
pub fn condition3_sides(
    spec: &DeformationSpec,
    g: usize,
    i: usize,
    j: usize,
    k: usize,
) -> (Vec<CycloScalar>, Vec<CycloScalar>) {
    let n = spec.dim();
    let q_ij_ik = spec.q(i, j) * spec.q(i, k);
    let q_ik_jk = spec.q(i, k) * spec.q(j, k);

    let mut left = vec![CycloScalar::zero(); n];
    for h in spec.group().elements() {
        let outer = spec.group().mul(g, spec.inverse(h));
        let e_i = unit_vector(n, i);
        let e_j = unit_vector(n, j);
        let e_k = unit_vector(n, k);
        let terms: [(CycloScalar, Vec<CycloScalar>, Vec<CycloScalar>); 6] = [
            (q_ij_ik.clone(), spec.kappa_l(h, j, k), spec.action_column(h, i)),
            (CycloScalar::from_integer(-1), e_i, spec.kappa_l(h, j, k)),
            (q_ik_jk.clone(), spec.kappa_l(h, k, i), spec.action_column(h, j)),
            (q_ij_ik.neg(), e_j, spec.kappa_l(h, k, i)),
            (CycloScalar::one(), spec.kappa_l(h, i, j), spec.action_column(h, k)),
            (q_ik_jk.neg(), e_k, spec.kappa_l(h, i, j)),
        ];
        for (coef, u, w) in &terms {
            let value = spec.kappa_l_bilinear(outer, u, w);
            vec_add_scaled(&mut left, coef, &value);
        }
    }

    let mut right = vec![CycloScalar::zero(); n];
    {
        let two = CycloScalar::from_integer(2);
        let mut tail = |c: CycloScalar, plus: Vec<CycloScalar>, minus_coef: CycloScalar, minus: Vec<CycloScalar>| {
            if c.is_zero() {
                return;
            }
            let mut diff = plus;
            vec_add_scaled(&mut diff, &minus_coef.neg(), &minus);
            vec_add_scaled(&mut right, &(&two * &c), &diff);
        };
        tail(
            spec.kappa_c(g, j, k),
            unit_vector(n, i),
            q_ij_ik.clone(),
            spec.action_column(g, i),
        );
        tail(
            spec.kappa_c(g, k, i),
            unit_vector(n, j).iter().map(|x| &q_ij_ik * x).collect(),
            q_ik_jk.clone(),
            spec.action_column(g, j),
        );
        tail(
            spec.kappa_c(g, i, j),
            unit_vector(n, k).iter().map(|x| &q_ik_jk * x).collect(),
            CycloScalar::one(),
            spec.action_column(g, k),
        );
    }
    (left, right)
}

#[derive(Debug, Clone)]
pub struct Condition3Report {
    pub report: ConditionReport,
    /// Whether the left side vanished identically over all cells (needed by
    /// the color Lie conversion hypotheses), and likewise the right side.
    pub left_all_zero: bool,
    pub right_all_zero: bool,
}

pub fn check_condition3(spec: &DeformationSpec) -> Condition3Report {
    let mut left_all_zero = true;
    let mut right_all_zero = true;
    let report = check_six_term(
        spec,
        "condition 3 (overlap terms of filtration degree 1)",
        |g, i, j, k| {
            let (left, right) = condition3_sides(spec, g, i, j, k);
            if !vec_is_zero(&left) {
                left_all_zero = false;
            }
            if !vec_is_zero(&right) {
                right_all_zero = false;
            }
            let residual = vec_sub(&left, &right);
            (!vec_is_zero(&residual)).then(|| AlgebraElement::from_vector(&residual).to_string())
        },
    );
    Condition3Report { report, left_all_zero, right_all_zero }
}

// ---------------------------------------------------------------------------
// condition (4)
// ---------------------------------------------------------------------------

/// The six-term scalar of condition (4) at the cell (g, i, j, k).
pub fn condition4_value(
    spec: &DeformationSpec,
    g: usize,
    i: usize,
    j: usize,
    k: usize,
) -> CycloScalar {
    let n = spec.dim();
    let q_ij_ik = spec.q(i, j) * spec.q(i, k);
    let q_ik_jk = spec.q(i, k) * spec.q(j, k);
    let mut total = CycloScalar::zero();
    for h in spec.group().elements() {
        let outer = spec.group().mul(g, spec.inverse(h));
        let e_i = unit_vector(n, i);
        let e_j = unit_vector(n, j);
        let e_k = unit_vector(n, k);
        let terms: [(CycloScalar, Vec<CycloScalar>, Vec<CycloScalar>); 6] = [
            (q_ij_ik.clone(), spec.kappa_l(h, j, k), spec.action_column(h, i)),
            (CycloScalar::from_integer(-1), e_i, spec.kappa_l(h, j, k)),
            (q_ik_jk.clone(), spec.kappa_l(h, k, i), spec.action_column(h, j)),
            (q_ij_ik.neg(), e_j, spec.kappa_l(h, k, i)),
            (CycloScalar::one(), spec.kappa_l(h, i, j), spec.action_column(h, k)),
            (q_ik_jk.neg(), e_k, spec.kappa_l(h, i, j)),
        ];
        for (coef, u, w) in &terms {
            if coef.is_zero() {
                continue;
            }
            let value = spec.kappa_c_bilinear(outer, u, w);
            if !value.is_zero() {
                total = &total + &(coef * &value);
            }
        }
    }
    total
}

pub fn check_condition4(spec: &DeformationSpec) -> ConditionReport {
    check_six_term(spec, "condition 4 (overlap terms of filtration degree 0)", |g, i, j, k| {
        let v = condition4_value(spec, g, i, j, k);
        (!v.is_zero()).then(|| v.to_string())
    })
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

pub fn check_direct(spec: &DeformationSpec) -> PbwReport {
    let conditions = vec![
        check_condition1(spec),
        check_condition2(spec),
        check_condition3(spec).report,
        check_condition4(spec),
    ];
    PbwReport::new(Method::Direct, conditions)
}

pub fn check_oracle(spec: &DeformationSpec, degree: usize) -> Result<PbwReport, OracleError> {
    let truncation = oracle::truncated_dimension(spec, degree, &OracleLimits::default())?;
    let pass = truncation.dims == truncation.expected;
    let mut witnesses = Vec::new();
    if let Some(d) = truncation.first_collapse {
        witnesses.push(Witness {
            location: format!("degree {d}"),
            residual: format!(
                "dim F_{d} = {} but the PBW count is {}",
                truncation.dims[d], truncation.expected[d]
            ),
        });
    }
    if let Some(cert) = &truncation.certificate {
        witnesses.push(Witness {
            location: "collapse certificate".to_string(),
            residual: cert.clone(),
        });
    }
    let condition = ConditionReport {
        name: format!("dimension law at degree {degree}"),
        pass,
        witnesses,
    };
    let mut report = PbwReport::new(Method::Oracle { degree }, vec![condition]);
    report.dims = Some((truncation.dims, truncation.expected));
    Ok(report)
}

/// One verdict by the requested route.
pub fn check_pbw(spec: &DeformationSpec, method: Method) -> Result<PbwReport, OracleError> {
    match method {
        Method::Direct => Ok(check_direct(spec)),
        Method::Homological => Ok(hochschild::check_homological(spec)),
        Method::Oracle { degree } => check_oracle(spec, degree),
    }
}

#[derive(Debug, Clone)]
pub struct AllMethods {
    pub reports: Vec<PbwReport>,
    pub agree: bool,
    pub pass: bool,
}

/// Run all three routes and compare the verdicts.
pub fn check_all(spec: &DeformationSpec, degree: usize) -> Result<AllMethods, OracleError> {
    let reports = vec![
        check_direct(spec),
        hochschild::check_homological(spec),
        check_oracle(spec, degree)?,
    ];
    let pass = reports[0].pass;
    let agree = reports.iter().all(|r| r.pass == pass);
    Ok(AllMethods { reports, agree, pass: pass && agree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_spec, KappaMap};

    const EX22: &str = include_str!("../tests/fixtures/example22.spec");
    const EX23: &str = include_str!("../tests/fixtures/example23.spec");
    const HEISENBERG: &str = include_str!("../tests/fixtures/heisenberg.spec");

    fn ex22_with_kappa_l(coeffs: [i64; 3]) -> DeformationSpec {
        let spec = parse_spec(EX22).unwrap();
        let mut kappa = KappaMap::zero(3, 3);
        kappa.set_linear(
            0,
            0,
            1,
            coeffs
                .iter()
                .map(|&c| {
                    let s = CycloScalar::from_integer(c);
                    // stored for (v_1, v_2); the fixture writes (v_2, v_1) = v_3,
                    // so apply the antisymmetry factor -q_12 here.
                    spec.q(0, 1).neg().checked_mul(&s, 360).unwrap()
                })
                .collect(),
        );
        DeformationSpec::new(
            3,
            3,
            spec.q_matrix().clone(),
            spec.group().clone(),
            spec.action().clone(),
            kappa,
        )
        .unwrap()
    }

    #[test]
    fn condition1_passes_on_example22() {
        let spec = parse_spec(EX22).unwrap();
        assert!(check_condition1(&spec).pass);
    }

    #[test]
    fn condition1_vacuous_for_trivial_group() {
        let spec = parse_spec(EX23).unwrap();
        assert!(check_condition1(&spec).pass);
    }

    #[test]
    fn condition1_fails_when_kappa_value_moves_wrongly() {
        // kappa^L_1(v_2,v_1) = v_1 scales by q under the generator, but
        // invariance needs the q^3 = 1 scaling that v_3 has.
        let spec = ex22_with_kappa_l([1, 0, 0]);
        let report = check_condition1(&spec);
        assert!(!report.pass);
        assert!(!report.witnesses.is_empty());
    }

    #[test]
    fn condition2_passes_on_example22() {
        let spec = parse_spec(EX22).unwrap();
        // the worked instance: (i,j,k) = (3,1,2) collapses to
        // q q^{-1} v3 v3 - v3 v3 = 0
        assert!(condition2_residual(&spec, 0, 2, 0, 1).is_zero());
        assert!(check_condition2(&spec).pass);
    }

    #[test]
    fn condition2_vacuous_without_linear_part() {
        let spec = parse_spec(EX23).unwrap();
        let (c, _l) = spec.kappa().decompose();
        let constant_only = DeformationSpec::new(
            3,
            2,
            spec.q_matrix().clone(),
            spec.group().clone(),
            spec.action().clone(),
            c,
        )
        .unwrap();
        assert!(check_condition2(&constant_only).pass);
    }

    #[test]
    fn condition2_fails_on_mutated_example23() {
        // kappa^L(v_2,v_1) = v_3 leaves the residual 2 v1 v3 at (1,2,3).
        let spec = parse_spec(EX23).unwrap();
        let mut kappa = spec.kappa().clone();
        // (v_1,v_2) slot: kappa(v_2,v_1) = v_3 means kappa(v_1,v_2) = v_3
        // since -q_12 = 1.
        kappa.set_linear(0, 0, 1, vec![
            CycloScalar::zero(),
            CycloScalar::zero(),
            CycloScalar::one(),
        ]);
        let mutated = DeformationSpec::new(
            3,
            2,
            spec.q_matrix().clone(),
            spec.group().clone(),
            spec.action().clone(),
            kappa,
        )
        .unwrap();
        let report = check_condition2(&mutated);
        assert!(!report.pass);
        let r = condition2_residual(&mutated, 0, 0, 1, 2);
        assert_eq!(r.to_string(), "2*v1*v3");
    }

    #[test]
    fn condition3_both_sides_vanish_on_the_examples() {
        for text in [EX22, EX23, HEISENBERG] {
            let spec = parse_spec(text).unwrap();
            let c3 = check_condition3(&spec);
            assert!(c3.report.pass);
            assert!(c3.left_all_zero);
            assert!(c3.right_all_zero);
        }
    }

    #[test]
    fn condition4_passes_when_constant_part_vanishes() {
        let spec = parse_spec(EX23).unwrap();
        assert!(check_condition4(&spec).pass);
    }

    #[test]
    fn direct_check_passes_on_all_three_fixtures() {
        for text in [EX22, EX23, HEISENBERG] {
            let spec = parse_spec(text).unwrap();
            let report = check_direct(&spec);
            assert!(report.pass, "direct check failed: {report:?}");
        }
    }

    #[test]
    fn direct_check_fails_on_non_invariant_kappa() {
        let spec = ex22_with_kappa_l([1, 0, 0]);
        assert!(!check_direct(&spec).pass);
    }

    #[test]
    fn sorted_triples_decide_conditions_2_3_4() {
        // Empirical redundancy: restricting to i<j<k gives the same verdict.
        let mut specs = vec![
            parse_spec(EX22).unwrap(),
            parse_spec(EX23).unwrap(),
            ex22_with_kappa_l([1, 0, 0]),
            ex22_with_kappa_l([0, 0, 1]),
        ];
        // a condition-2 violator
        {
            let spec = parse_spec(EX23).unwrap();
            let mut kappa = spec.kappa().clone();
            kappa.set_linear(0, 0, 1, vec![
                CycloScalar::zero(),
                CycloScalar::zero(),
                CycloScalar::one(),
            ]);
            specs.push(
                DeformationSpec::new(
                    3,
                    2,
                    spec.q_matrix().clone(),
                    spec.group().clone(),
                    spec.action().clone(),
                    kappa,
                )
                .unwrap(),
            );
        }
        for spec in &specs {
            let all = distinct_triples(spec.dim());
            let sorted: Vec<_> = all.iter().filter(|(i, j, k)| i < j && j < k).collect();
            for g in spec.group().elements() {
                let c2_all = all.iter().all(|&(i, j, k)| condition2_residual(spec, g, i, j, k).is_zero());
                let c2_sorted =
                    sorted.iter().all(|&&(i, j, k)| condition2_residual(spec, g, i, j, k).is_zero());
                assert_eq!(c2_all, c2_sorted);
                let zero3 = |t: &(usize, usize, usize)| {
                    let (l, r) = condition3_sides(spec, g, t.0, t.1, t.2);
                    vec_is_zero(&vec_sub(&l, &r))
                };
                assert_eq!(all.iter().all(zero3), sorted.iter().all(|t| zero3(t)));
                let c4_all = all.iter().all(|&(i, j, k)| condition4_value(spec, g, i, j, k).is_zero());
                let c4_sorted =
                    sorted.iter().all(|&&(i, j, k)| condition4_value(spec, g, i, j, k).is_zero());
                assert_eq!(c4_all, c4_sorted);
            }
        }
    }
}
