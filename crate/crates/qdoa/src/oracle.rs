//! The PBW oracle: exact dimension counts in a degree-truncated quotient.
//!
//! Independently of the rewriting engine and of the condition checks, this
//! spans all words of length <= D with one trailing group element, quotients
//! by every product (word) * (relation) * (word) of degree <= D via sparse
//! exact row reduction, and compares the filtration dimensions against the
//! PBW count. Any rewrite of a word of degree <= D subtracts such a product,
//! so the quotient is spanned by ordered monomials: dimensions can only fall
//! short of the PBW count, never exceed it, and a pivot landing on an ordered
//! monomial column is an explicit collapse certificate.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::presentation::DeformationSpec;
use crate::scalar::CycloScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("truncation degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

#[derive(Debug, Clone)]
pub struct OracleLimits {
    pub max_columns: usize,
    pub max_rows: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_columns: 50_000, max_rows: 2_000_000 }
    }
}

#[derive(Debug, Clone)]
pub struct Truncation {
    /// Cumulative dimension of the degree-d filtration piece, d = 0..=D.
    pub dims: Vec<usize>,
    /// The PBW count |G| * sum_{m<=d} (monomials of degree m), d = 0..=D.
    pub expected: Vec<usize>,
    /// First degree where dims falls short, if any.
    pub first_collapse: Option<usize>,
    /// An explicit ideal element whose leading term is an ordered monomial.
    pub certificate: Option<String>,
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut num = 1usize;
    let mut den = 1usize;
    for t in 0..k.min(n - k) {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// Number of degree-d monomials in n commuting variables.
fn monomial_count(n: usize, d: usize) -> usize {
    binomial(n + d - 1, n.saturating_sub(1))
}

fn word_is_sorted(word: &[usize]) -> bool {
    word.windows(2).all(|w| w[0] <= w[1])
}

/// All v-words of length <= max_len, shortest first, lexicographic within a
/// length.
fn enumerate_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut words: Vec<Vec<usize>> = vec![vec![]];
    let mut frontier: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * n);
        for w in &frontier {
            for l in 0..n {
                let mut w2 = w.clone();
                w2.push(l);
                next.push(w2);
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    words
}

/// Substitute the action of g into every letter of a word and expand.
fn substitute(spec: &DeformationSpec, g: usize, word: &[usize]) -> Vec<(CycloScalar, Vec<usize>)> {
    let n = spec.dim();
    let mut acc: Vec<(CycloScalar, Vec<usize>)> = vec![(CycloScalar::one(), Vec::with_capacity(word.len()))];
    for &i in word {
        let mut next = Vec::with_capacity(acc.len());
        for l in 0..n {
            let e = spec.action().entry(g, l, i);
            if e.is_zero() {
                continue;
            }
            for (c, w) in &acc {
                let mut w2 = w.clone();
                w2.push(l);
                next.push((c * e, w2));
            }
        }
        acc = next;
    }
    acc
}

fn render_word(coeff: &CycloScalar, word: &[usize], g: usize) -> String {
    let mut factors: Vec<String> = word.iter().map(|&i| format!("v{}", i + 1)).collect();
    if g != 0 {
        factors.push(format!("g{g}"));
    }
    if factors.is_empty() {
        coeff.to_string()
    } else if coeff.is_one() {
        factors.join("*")
    } else {
        format!("{coeff}*{}", factors.join("*"))
    }
}

struct SparseMatrix {
    /// Normalized echelon rows (leading coefficient one), sparse by column.
    basis: Vec<Vec<(usize, CycloScalar)>>,
    /// Column -> index into basis.
    pivot_of_col: Vec<Option<usize>>,
}

impl SparseMatrix {
    fn new(cols: usize) -> Self {
        SparseMatrix { basis: Vec::new(), pivot_of_col: vec![None; cols] }
    }

    /// Reduce a row against the current basis; install it when a new pivot
    /// remains. Returns the pivot column if one was installed.
    fn reduce_and_insert(&mut self, mut row: Vec<(usize, CycloScalar)>) -> Option<usize> {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            let &(col, ref lead) = row.first()?;
            match self.pivot_of_col[col] {
                Some(idx) => {
                    let factor = lead.clone();
                    row = sub_scaled(&row, &factor, &self.basis[idx]);
                }
                None => {
                    let inv = lead.inverse().expect("nonzero leading coefficient");
                    for (_, c) in row.iter_mut() {
                        *c = &*c * &inv;
                    }
                    self.pivot_of_col[col] = Some(self.basis.len());
                    self.basis.push(row);
                    return Some(col);
                }
            }
        }
    }
}

/// a - factor * b for sorted sparse rows.
fn sub_scaled(
    a: &[(usize, CycloScalar)],
    factor: &CycloScalar,
    b: &[(usize, CycloScalar)],
) -> Vec<(usize, CycloScalar)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut ia = 0;
    let mut ib = 0;
    while ia < a.len() || ib < b.len() {
        match (a.get(ia), b.get(ib)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                let v = va - &(factor * vb);
                if !v.is_zero() {
                    out.push((*ca, v));
                }
                ia += 1;
                ib += 1;
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                out.push((*ca, va.clone()));
                ia += 1;
            }
            (Some(_), Some((cb, vb))) => {
                out.push((*cb, (factor * vb).neg()));
                ib += 1;
            }
            (Some((ca, va)), None) => {
                out.push((*ca, va.clone()));
                ia += 1;
            }
            (None, Some((cb, vb))) => {
                out.push((*cb, (factor * vb).neg()));
                ib += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

/// Filtration dimensions of the degree-<=D truncation, cumulative by degree.
pub fn truncated_dimension(
    spec: &DeformationSpec,
    degree: usize,
    limits: &OracleLimits,
) -> Result<Truncation, OracleError> {
    if degree < 2 {
        return Err(OracleError::DegreeTooSmall(degree));
    }
    let n = spec.dim();
    let gsize = spec.group().order();

    let words = enumerate_words(n, degree);
    let word_id: HashMap<Vec<usize>, usize> =
        words.iter().enumerate().map(|(t, w)| (w.clone(), t)).collect();

    // Columns: (degree descending, unsorted words before sorted ones, word,
    // group id). Unsorted-first steers pivots away from ordered monomials, so
    // a pivot on an ordered monomial is exactly a collapse.
    let mut col_keys: Vec<(usize, usize)> = Vec::with_capacity(words.len() * gsize);
    for w in 0..words.len() {
        for g in 0..gsize {
            col_keys.push((w, g));
        }
    }
    if col_keys.len() > limits.max_columns {
        return Err(OracleError::ResourceLimit(format!(
            "{} columns exceeds the configured {}",
            col_keys.len(),
            limits.max_columns
        )));
    }
    col_keys.sort_by(|&(wa, ga), &(wb, gb)| {
        let a = &words[wa];
        let b = &words[wb];
        b.len()
            .cmp(&a.len())
            .then_with(|| word_is_sorted(a).cmp(&word_is_sorted(b)))
            .then_with(|| a.cmp(b))
            .then_with(|| ga.cmp(&gb))
    });
    let mut col_of: HashMap<(usize, usize), usize> = HashMap::with_capacity(col_keys.len());
    for (pos, key) in col_keys.iter().enumerate() {
        col_of.insert(*key, pos);
    }

    // Relation expansions: rho_{ji} = v_j v_i - q_ji v_i v_j - kappa(v_j,v_i).
    let mut relations: Vec<Vec<(CycloScalar, Vec<usize>, usize)>> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mut terms = vec![
                (CycloScalar::one(), vec![j, i], 0usize),
                (spec.q(j, i).neg(), vec![i, j], 0usize),
            ];
            for g in spec.group().elements() {
                let c = spec.kappa_c(g, j, i);
                if !c.is_zero() {
                    terms.push((c.neg(), vec![], g));
                }
                for (l, cl) in spec.kappa_l(g, j, i).iter().enumerate() {
                    if !cl.is_zero() {
                        terms.push((cl.neg(), vec![l], g));
                    }
                }
            }
            relations.push(terms);
        }
    }

    // (u # gamma) rho (w # delta) = u * (gamma.x) * ((gamma a).w) # gamma a delta
    // for each relation term x # a.
    let mut matrix = SparseMatrix::new(col_keys.len());
    let mut rows_generated = 0usize;
    let mut certificate: Option<String> = None;
    let short_words: Vec<&Vec<usize>> =
        words.iter().filter(|w| w.len() + 2 <= degree).collect();
    for rel in &relations {
        for gamma in spec.group().elements() {
            // Expand gamma acting on each relation term once per gamma.
            let acted: Vec<(CycloScalar, Vec<usize>, usize)> = rel
                .iter()
                .flat_map(|(c, x, a)| {
                    substitute(spec, gamma, x)
                        .into_iter()
                        .map(move |(s, x2)| (c * &s, x2, *a))
                })
                .collect();
            for u in &short_words {
                for w in &short_words {
                    if u.len() + 2 + w.len() > degree {
                        continue;
                    }
                    for delta in spec.group().elements() {
                        rows_generated += 1;
                        if rows_generated > limits.max_rows {
                            return Err(OracleError::ResourceLimit(format!(
                                "more than {} generator rows",
                                limits.max_rows
                            )));
                        }
                        let mut entries: HashMap<usize, CycloScalar> = HashMap::new();
                        for (c, x2, a) in &acted {
                            let ga = spec.group().mul(gamma, *a);
                            let slot = spec.group().mul(ga, delta);
                            for (s, w2) in substitute(spec, ga, w) {
                                let mut full = Vec::with_capacity(u.len() + x2.len() + w2.len());
                                full.extend_from_slice(u);
                                full.extend_from_slice(x2);
                                full.extend_from_slice(&w2);
                                let col = col_of[&(word_id[&full], slot)];
                                let add = c * &s;
                                entries
                                    .entry(col)
                                    .and_modify(|v| *v = &*v + &add)
                                    .or_insert(add);
                            }
                        }
                        let mut row: Vec<(usize, CycloScalar)> = entries
                            .into_iter()
                            .filter(|(_, c)| !c.is_zero())
                            .collect();
                        row.sort_by_key(|&(c, _)| c);
                        if let Some(pivot_col) = matrix.reduce_and_insert(row) {
                            let (wid, _) = col_keys[pivot_col];
                            if certificate.is_none() && word_is_sorted(&words[wid]) {
                                let idx = matrix.pivot_of_col[pivot_col].unwrap();
                                let parts: Vec<String> = matrix.basis[idx]
                                    .iter()
                                    .map(|(col, c)| {
                                        let (w, g) = col_keys[*col];
                                        render_word(c, &words[w], g)
                                    })
                                    .collect();
                                certificate = Some(format!(
                                    "ideal element with ordered leading term: {}",
                                    parts.join(" + ")
                                ));
                            }
                        }
                    }
                }
            }
        }
    }

    // Pivots by degree: with columns sorted degree-descending, an echelon row
    // lies in the degree-<=d span exactly when its pivot column does.
    let mut pivots_by_degree = vec![0usize; degree + 1];
    for (col, p) in matrix.pivot_of_col.iter().enumerate() {
        if p.is_some() {
            let (wid, _) = col_keys[col];
            pivots_by_degree[words[wid].len()] += 1;
        }
    }
    let mut dims = Vec::with_capacity(degree + 1);
    let mut expected = Vec::with_capacity(degree + 1);
    let mut span = 0usize;
    let mut pivots = 0usize;
    let mut pbw = 0usize;
    for d in 0..=degree {
        span += gsize * n.pow(d as u32);
        pivots += pivots_by_degree[d];
        pbw += gsize * monomial_count(n, d);
        dims.push(span - pivots);
        expected.push(pbw);
    }
    let first_collapse = (0..=degree).find(|&d| dims[d] != expected[d]);
    if first_collapse.is_none() {
        certificate = None;
    }
    Ok(Truncation { dims, expected, first_collapse, certificate })
}
