//! The deformation data model: q-matrix, parameter map kappa, and the fully
//! validated [`DeformationSpec`], plus the line-oriented spec-file format.
//!
//! A spec file fixes the basis v_1..v_n once and for all; every formula in
//! the checks is stated in that basis, so no change-of-basis utilities exist.
//! Kappa entries are canonically stored for i < j only; the other orientation
//! is derived from kappa(v_i,v_j) = -q_ij kappa(v_j,v_i), and supplying both
//! orientations cross-checks them.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::algebra::{AlgebraElement, Monomial};
use crate::check::CheckReport;
use crate::group::{
    check_q_compatibility, validate_group, ActionMatrix, GroupDataError, GroupTable,
};
use crate::scalar::{parse_scalar, CycloScalar, ScalarError, MAX_ORDER};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Group(#[from] GroupDataError),
    #[error("invalid deformation data:\n{0}")]
    Invalid(CheckReport),
}

// ---------------------------------------------------------------------------
// QMatrix
// ---------------------------------------------------------------------------

/// The commutation parameters: nonzero scalars with q_ii = 1 and
/// q_ji = q_ij^{-1}, both enforced at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Vec<CycloScalar>>,
}

impl QMatrix {
    /// Build from the strictly-upper entries (i < j, 0-based); the rest is
    /// derived by inversion.
    pub fn from_upper_entries(n: usize, upper: &[(usize, usize, CycloScalar)]) -> Result<Self, SpecError> {
        let mut report = CheckReport::new();
        let mut entries = vec![vec![CycloScalar::one(); n]; n];
        let mut seen = vec![vec![false; n]; n];
        for (i, j, v) in upper {
            let (i, j) = (*i, *j);
            assert!(i < j && j < n, "from_upper_entries expects i < j < n");
            if seen[i][j] {
                report.push("q duplicate", format!("entry ({},{}) given twice", i + 1, j + 1));
                continue;
            }
            seen[i][j] = true;
            if v.is_zero() {
                report.push("q nonzero", format!("q({},{}) = 0", i + 1, j + 1));
                continue;
            }
            entries[i][j] = v.clone();
            entries[j][i] = v.inverse().expect("nonzero");
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if !seen[i][j] {
                    report.push("q missing", format!("no entry for ({},{})", i + 1, j + 1));
                }
            }
        }
        if report.passed() {
            Ok(QMatrix { n, entries })
        } else {
            Err(SpecError::Invalid(report))
        }
    }

    pub fn all_ones(n: usize) -> Self {
        QMatrix { n, entries: vec![vec![CycloScalar::one(); n]; n] }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn q(&self, i: usize, j: usize) -> &CycloScalar {
        &self.entries[i][j]
    }
}

// ---------------------------------------------------------------------------
// KappaMap
// ---------------------------------------------------------------------------

/// Constant and linear deformation parameters, stored per group element for
/// canonical pairs i < j only.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct KappaMap {
    n: usize,
    group_order: usize,
    /// (g, i, j) with i < j -> kappa_g^C(v_i, v_j), zero entries omitted.
    constant: BTreeMap<(usize, usize, usize), CycloScalar>,
    /// (g, i, j) with i < j -> coefficients of kappa_g^L(v_i, v_j) in v_1..v_n.
    linear: BTreeMap<(usize, usize, usize), Vec<CycloScalar>>,
}

impl KappaMap {
    pub fn zero(n: usize, group_order: usize) -> Self {
        KappaMap { n, group_order, constant: BTreeMap::new(), linear: BTreeMap::new() }
    }

    pub fn set_constant(&mut self, g: usize, i: usize, j: usize, value: CycloScalar) {
        assert!(i < j && j < self.n && g < self.group_order);
        if value.is_zero() {
            self.constant.remove(&(g, i, j));
        } else {
            self.constant.insert((g, i, j), value);
        }
    }

    pub fn set_linear(&mut self, g: usize, i: usize, j: usize, coeffs: Vec<CycloScalar>) {
        assert!(i < j && j < self.n && g < self.group_order);
        assert_eq!(coeffs.len(), self.n);
        if coeffs.iter().all(CycloScalar::is_zero) {
            self.linear.remove(&(g, i, j));
        } else {
            self.linear.insert((g, i, j), coeffs);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_empty() && self.linear.is_empty()
    }

    pub fn constant_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &CycloScalar)> {
        self.constant.iter()
    }

    pub fn linear_entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Vec<CycloScalar>)> {
        self.linear.iter()
    }

    /// Split into the constant-only and linear-only maps.
    pub fn decompose(&self) -> (KappaMap, KappaMap) {
        let mut c = KappaMap::zero(self.n, self.group_order);
        c.constant = self.constant.clone();
        let mut l = KappaMap::zero(self.n, self.group_order);
        l.linear = self.linear.clone();
        (c, l)
    }

    /// Merge a constant-only and a linear-only map back together.
    pub fn recompose(constant: &KappaMap, linear: &KappaMap) -> KappaMap {
        let mut out = constant.clone();
        out.linear = linear.linear.clone();
        out
    }
}

// ---------------------------------------------------------------------------
// DeformationSpec
// ---------------------------------------------------------------------------

/// A fully validated deformation datum: dimension, cyclotomic order, q-matrix,
/// group with linear action, and parameter map.
#[derive(Debug, Clone, PartialEq)]
pub struct DeformationSpec {
    n: usize,
    order: u32,
    q: QMatrix,
    group: GroupTable,
    action: ActionMatrix,
    kappa: KappaMap,
}

impl DeformationSpec {
    pub fn new(
        n: usize,
        order: u32,
        q: QMatrix,
        group: GroupTable,
        action: ActionMatrix,
        kappa: KappaMap,
    ) -> Result<Self, SpecError> {
        let mut report = CheckReport::new();
        if n == 0 {
            report.push("dimension", "dimension must be positive".to_string());
        }
        if order == 0 || order > MAX_ORDER {
            report.push("cyclo_order", format!("order {order} outside 1..={MAX_ORDER}"));
        }
        if q.dim() != n || action.dim() != n {
            report.push("dimension", "q-matrix or action dimension mismatch".to_string());
        }
        if kappa.n != n || kappa.group_order != group.order() {
            report.push("kappa shape", "kappa dimensions do not match the spec".to_string());
        }
        report.merge(validate_group(&group, &action));
        if report.passed() {
            report.merge(check_q_compatibility(&q, &group, &action));
        }
        if !report.passed() {
            return Err(SpecError::Invalid(report));
        }
        Ok(DeformationSpec { n, order, q, group, action, kappa })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn q(&self, i: usize, j: usize) -> &CycloScalar {
        self.q.q(i, j)
    }

    pub fn q_matrix(&self) -> &QMatrix {
        &self.q
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn action(&self) -> &ActionMatrix {
        &self.action
    }

    pub fn kappa(&self) -> &KappaMap {
        &self.kappa
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.group.inverse(g).expect("validated group")
    }

    pub fn conjugate(&self, h: usize, g: usize) -> usize {
        self.group.conjugate(h, g).expect("validated group")
    }

    /// kappa_g^C(v_a, v_b) for any a != b (antisymmetry applied as needed).
    pub fn kappa_c(&self, g: usize, a: usize, b: usize) -> CycloScalar {
        if a == b {
            return CycloScalar::zero();
        }
        if a < b {
            self.kappa.constant.get(&(g, a, b)).cloned().unwrap_or_else(CycloScalar::zero)
        } else {
            match self.kappa.constant.get(&(g, b, a)) {
                Some(v) => (self.q(a, b) * v).neg(),
                None => CycloScalar::zero(),
            }
        }
    }

    /// kappa_g^L(v_a, v_b) as a coordinate vector, any a != b.
    pub fn kappa_l(&self, g: usize, a: usize, b: usize) -> Vec<CycloScalar> {
        let zero = || vec![CycloScalar::zero(); self.n];
        if a == b {
            return zero();
        }
        if a < b {
            self.kappa.linear.get(&(g, a, b)).cloned().unwrap_or_else(zero)
        } else {
            match self.kappa.linear.get(&(g, b, a)) {
                Some(v) => {
                    let s = self.q(a, b).neg();
                    v.iter().map(|c| &s * c).collect()
                }
                None => zero(),
            }
        }
    }

    /// Bilinear extension of kappa_g^C to coordinate vectors.
    pub fn kappa_c_bilinear(&self, g: usize, u: &[CycloScalar], w: &[CycloScalar]) -> CycloScalar {
        let mut out = CycloScalar::zero();
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, wb) in w.iter().enumerate() {
                if wb.is_zero() || a == b {
                    continue;
                }
                let v = self.kappa_c(g, a, b);
                if !v.is_zero() {
                    out = &out + &(&(ua * wb) * &v);
                }
            }
        }
        out
    }

    /// Bilinear extension of kappa_g^L to coordinate vectors.
    pub fn kappa_l_bilinear(&self, g: usize, u: &[CycloScalar], w: &[CycloScalar]) -> Vec<CycloScalar> {
        let mut out = vec![CycloScalar::zero(); self.n];
        for (a, ua) in u.iter().enumerate() {
            if ua.is_zero() {
                continue;
            }
            for (b, wb) in w.iter().enumerate() {
                if wb.is_zero() || a == b {
                    continue;
                }
                let v = self.kappa_l(g, a, b);
                let s = ua * wb;
                for (l, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        out[l] = &out[l] + &(&s * c);
                    }
                }
            }
        }
        out
    }

    /// kappa(v_a, v_b) as an element of the skew group algebra (degree <= 1).
    pub fn kappa_element(&self, a: usize, b: usize) -> AlgebraElement {
        let mut out = AlgebraElement::zero(self.n);
        for g in self.group.elements() {
            let c = self.kappa_c(g, a, b);
            if !c.is_zero() {
                out.add_term(Monomial::unit(self.n), g, c);
            }
            for (l, coeff) in self.kappa_l(g, a, b).into_iter().enumerate() {
                if !coeff.is_zero() {
                    out.add_term(Monomial::basis(self.n, l), g, coeff);
                }
            }
        }
        out
    }

    /// Coordinates of the image of v_j under g.
    pub fn action_column(&self, g: usize, j: usize) -> Vec<CycloScalar> {
        (0..self.n).map(|l| self.action.entry(g, l, j).clone()).collect()
    }

    // -- canonical serialization ------------------------------------------

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "[algebra]");
        let _ = writeln!(out, "dimension {}", self.n);
        let _ = writeln!(out, "cyclo_order {}", self.order);
        let _ = writeln!(out, "\n[q]");
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                let _ = writeln!(out, "{} {} {}", i + 1, j + 1, self.q(i, j));
            }
        }
        if !self.group.is_trivial() {
            let _ = writeln!(out, "\n[group]");
            let _ = writeln!(out, "order {}", self.group.order());
            for row in self.group.rows() {
                let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{}", cells.join(" "));
            }
            let _ = writeln!(out, "\n[action]");
            for g in self.group.elements() {
                let _ = writeln!(out, "element {g}");
                for l in 0..self.n {
                    let cells: Vec<String> =
                        (0..self.n).map(|j| self.action.entry(g, l, j).to_string()).collect();
                    let _ = writeln!(out, "{}", cells.join(" "));
                }
            }
        }
        if !self.kappa.is_zero() {
            let _ = writeln!(out, "\n[kappa]");
            let mut keys: Vec<(usize, usize, usize)> = self
                .kappa
                .constant
                .keys()
                .chain(self.kappa.linear.keys())
                .cloned()
                .collect();
            keys.sort_unstable_by_key(|&(g, i, j)| (i, j, g));
            keys.dedup();
            for (g, i, j) in keys {
                let c = self.kappa_c(g, i, j);
                let l = self.kappa_l(g, i, j);
                let cells: Vec<String> = l.iter().map(|x| x.to_string()).collect();
                let _ = writeln!(out, "{} {} {} : const {} ; linear {}", i + 1, j + 1, g, c, cells.join(" "));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// spec-file parsing
// ---------------------------------------------------------------------------

fn perr(line: usize, col: usize, msg: impl Into<String>) -> SpecError {
    SpecError::Parse { line, col, msg: msg.into() }
}

/// Split a line into scalar tokens on whitespace, keeping bracketed vectors
/// `[...]` together even when they contain spaces.
fn tokenize_scalars(line: &str, lineno: usize) -> Result<Vec<String>, SpecError> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0usize;
    for (col, ch) in line.char_indices() {
        match ch {
            '[' => {
                depth += 1;
                current.push(ch);
            }
            ']' => {
                if depth == 0 {
                    return Err(perr(lineno, col + 1, "unmatched `]`"));
                }
                depth -= 1;
                current.push(ch);
            }
            c if c.is_whitespace() && depth == 0 => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if depth != 0 {
        return Err(perr(lineno, line.len(), "unterminated `[`"));
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    Ok(tokens)
}

struct KappaLine {
    lineno: usize,
    i: usize,
    j: usize,
    g: usize,
    constant: Option<String>,
    linear: Option<Vec<String>>,
}

#[derive(Default)]
struct RawSpec {
    dimension: Option<usize>,
    order: Option<u32>,
    q_entries: Vec<(usize, usize, usize, String)>, // lineno, i, j (1-based), scalar text
    group_order: Option<usize>,
    group_rows: Vec<(usize, Vec<usize>)>,
    action_blocks: Vec<(usize, usize, Vec<Vec<String>>)>, // lineno, element, rows of tokens
    kappa_lines: Vec<KappaLine>,
}

/// Parse and fully validate a deformation spec file.
pub fn parse_spec(text: &str) -> Result<DeformationSpec, SpecError> {
    let raw = parse_sections(text)?;
    assemble(raw)
}

fn parse_sections(text: &str) -> Result<RawSpec, SpecError> {
    #[derive(Clone, Copy, PartialEq)]
    enum Section {
        None,
        Algebra,
        Q,
        Group,
        Action,
        Kappa,
    }
    let mut raw = RawSpec::default();
    let mut section = Section::None;
    let mut current_action: Option<(usize, usize, Vec<Vec<String>>)> = None;

    for (idx, full_line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = match full_line.find('#') {
            Some(p) => &full_line[..p],
            None => full_line,
        };
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(name) = trimmed.strip_prefix('[') {
            let name = name
                .strip_suffix(']')
                .ok_or_else(|| perr(lineno, trimmed.len(), "missing `]` in section header"))?;
            if let Some(block) = current_action.take() {
                raw.action_blocks.push(block);
            }
            section = match name {
                "algebra" => Section::Algebra,
                "q" => Section::Q,
                "group" => Section::Group,
                "action" => Section::Action,
                "kappa" => Section::Kappa,
                other => return Err(perr(lineno, 1, format!("unknown section `[{other}]`"))),
            };
            continue;
        }
        match section {
            Section::None => {
                return Err(perr(lineno, 1, "content before the first section header"));
            }
            Section::Algebra => {
                let mut parts = trimmed.split_whitespace();
                let key = parts.next().unwrap();
                let value = parts.next().ok_or_else(|| perr(lineno, key.len() + 1, "missing value"))?;
                if parts.next().is_some() {
                    return Err(perr(lineno, 1, "trailing tokens"));
                }
                match key {
                    "dimension" => {
                        let n: usize = value
                            .parse()
                            .map_err(|_| perr(lineno, key.len() + 2, "bad dimension"))?;
                        raw.dimension = Some(n);
                    }
                    "cyclo_order" => {
                        let m: u32 = value
                            .parse()
                            .map_err(|_| perr(lineno, key.len() + 2, "bad cyclo_order"))?;
                        raw.order = Some(m);
                    }
                    other => return Err(perr(lineno, 1, format!("unknown key `{other}` in [algebra]"))),
                }
            }
            Section::Q => {
                let mut parts = trimmed.splitn(3, char::is_whitespace);
                let i: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, 1, "expected `i j <scalar>`"))?;
                let j: usize = parts
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| perr(lineno, 1, "expected `i j <scalar>`"))?;
                let scalar = parts
                    .next()
                    .ok_or_else(|| perr(lineno, trimmed.len(), "missing scalar"))?;
                raw.q_entries.push((lineno, i, j, scalar.to_string()));
            }
            Section::Group => {
                if let Some(rest) = trimmed.strip_prefix("order") {
                    let m: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| perr(lineno, 7, "bad group order"))?;
                    raw.group_order = Some(m);
                } else {
                    let row: Result<Vec<usize>, _> =
                        trimmed.split_whitespace().map(str::parse).collect();
                    let row = row.map_err(|_| perr(lineno, 1, "bad table row"))?;
                    raw.group_rows.push((lineno, row));
                }
            }
            Section::Action => {
                if let Some(rest) = trimmed.strip_prefix("element") {
                    if let Some(block) = current_action.take() {
                        raw.action_blocks.push(block);
                    }
                    let k: usize = rest
                        .trim()
                        .parse()
                        .map_err(|_| perr(lineno, 9, "bad element id"))?;
                    current_action = Some((lineno, k, Vec::new()));
                } else {
                    let tokens = tokenize_scalars(trimmed, lineno)?;
                    match current_action.as_mut() {
                        Some((_, _, rows)) => rows.push(tokens),
                        None => return Err(perr(lineno, 1, "matrix row before `element k`")),
                    }
                }
            }
            Section::Kappa => {
                let (head, tail) = trimmed
                    .split_once(':')
                    .ok_or_else(|| perr(lineno, 1, "expected `i j g : ...`"))?;
                let ids: Result<Vec<usize>, _> =
                    head.split_whitespace().map(str::parse).collect();
                let ids = ids.map_err(|_| perr(lineno, 1, "bad indices before `:`"))?;
                if ids.len() != 3 {
                    return Err(perr(lineno, 1, "expected exactly `i j g` before `:`"));
                }
                let mut kl = KappaLine {
                    lineno,
                    i: ids[0],
                    j: ids[1],
                    g: ids[2],
                    constant: None,
                    linear: None,
                };
                for clause in tail.split(';') {
                    let clause = clause.trim();
                    if clause.is_empty() {
                        continue;
                    }
                    if let Some(rest) = clause.strip_prefix("const") {
                        kl.constant = Some(rest.trim().to_string());
                    } else if let Some(rest) = clause.strip_prefix("linear") {
                        kl.linear = Some(tokenize_scalars(rest, lineno)?);
                    } else {
                        return Err(perr(lineno, 1, format!("unknown kappa clause `{clause}`")));
                    }
                }
                raw.kappa_lines.push(kl);
            }
        }
    }
    if let Some(block) = current_action.take() {
        raw.action_blocks.push(block);
    }
    Ok(raw)
}

fn assemble(raw: RawSpec) -> Result<DeformationSpec, SpecError> {
    let mut report = CheckReport::new();
    let n = raw.dimension.ok_or_else(|| perr(0, 0, "missing [algebra] dimension"))?;
    let order = raw.order.ok_or_else(|| perr(0, 0, "missing [algebra] cyclo_order"))?;
    if n == 0 {
        return Err(SpecError::Invalid({
            let mut r = CheckReport::new();
            r.push("dimension", "dimension must be positive");
            r
        }));
    }

    // q entries
    let mut upper: Vec<(usize, usize, CycloScalar)> = Vec::new();
    let mut derived: BTreeMap<(usize, usize), (usize, CycloScalar)> = BTreeMap::new();
    for (lineno, i1, j1, text) in &raw.q_entries {
        let v = parse_scalar(text, order).map_err(|e| perr(*lineno, 1, e.to_string()))?;
        if *i1 == 0 || *j1 == 0 || *i1 > n || *j1 > n {
            return Err(perr(*lineno, 1, format!("q indices ({i1},{j1}) out of range 1..={n}")));
        }
        let (i, j) = (*i1 - 1, *j1 - 1);
        if i == j {
            if !v.is_one() {
                report.push("q diagonal", format!("q({i1},{j1}) = {v} but q_ii must be 1"));
            }
            continue;
        }
        if v.is_zero() {
            report.push("q nonzero", format!("q({i1},{j1}) = 0"));
            continue;
        }
        let (a, b, val) = if i < j {
            (i, j, v)
        } else {
            (j, i, v.inverse().expect("nonzero"))
        };
        if let Some((prev_line, prev)) = derived.get(&(a, b)) {
            if *prev != val {
                report.push(
                    "q inverse-pair",
                    format!(
                        "entries at lines {prev_line} and {lineno} give q({},{}) = {prev} vs {val}",
                        a + 1,
                        b + 1
                    ),
                );
            }
            continue;
        }
        derived.insert((a, b), (*lineno, val.clone()));
        upper.push((a, b, val));
    }

    // group
    let group = match raw.group_order {
        None => {
            if !raw.group_rows.is_empty() {
                let lineno = raw.group_rows[0].0;
                return Err(perr(lineno, 1, "table rows given without `order m`"));
            }
            GroupTable::trivial()
        }
        Some(m) => {
            if raw.group_rows.len() != m {
                return Err(SpecError::Invalid({
                    let mut r = CheckReport::new();
                    r.push("group table", format!("expected {m} rows, got {}", raw.group_rows.len()));
                    r
                }));
            }
            let rows: Vec<Vec<usize>> = raw.group_rows.iter().map(|(_, r)| r.clone()).collect();
            GroupTable::new(rows)?
        }
    };

    // action
    let action = if raw.action_blocks.is_empty() {
        if group.order() > 1 {
            report.push("action", "a nontrivial group needs an [action] section");
        }
        ActionMatrix::identity(n)
    } else {
        let m = group.order();
        let mut mats: Vec<Option<Vec<Vec<CycloScalar>>>> = vec![None; m];
        for (lineno, k, rows) in &raw.action_blocks {
            if *k >= m {
                return Err(perr(*lineno, 1, format!("element id {k} out of range 0..{m}")));
            }
            if mats[*k].is_some() {
                return Err(perr(*lineno, 1, format!("duplicate action block for element {k}")));
            }
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(perr(*lineno, 1, format!("action block for element {k} must be {n}x{n}")));
            }
            let mut mat = Vec::with_capacity(n);
            for r in rows {
                let row = r
                    .iter()
                    .map(|t| parse_scalar(t, order).map_err(|e| perr(*lineno, 1, e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?;
                mat.push(row);
            }
            mats[*k] = Some(mat);
        }
        if let Some(k) = mats.iter().position(Option::is_none) {
            report.push("action", format!("missing action block for element {k}"));
            ActionMatrix::identity(n)
        } else {
            ActionMatrix::new(n, mats.into_iter().map(Option::unwrap).collect(), m)?
        }
    };

    if !report.passed() {
        return Err(SpecError::Invalid(report));
    }

    let q = QMatrix::from_upper_entries(n, &upper)?;

    // kappa: canonicalize to i < j, cross-checking duplicated orientations.
    let mut kappa = KappaMap::zero(n, group.order());
    let mut seen: BTreeMap<(usize, usize, usize), usize> = BTreeMap::new();
    for kl in &raw.kappa_lines {
        if kl.i == 0 || kl.j == 0 || kl.i > n || kl.j > n {
            return Err(perr(kl.lineno, 1, format!("kappa indices ({},{}) out of range", kl.i, kl.j)));
        }
        if kl.i == kl.j {
            return Err(perr(kl.lineno, 1, "kappa requires i != j (kappa(v,v) = 0)"));
        }
        if kl.g >= group.order() {
            return Err(perr(kl.lineno, 1, format!("group id {} out of range", kl.g)));
        }
        let (i, j) = (kl.i - 1, kl.j - 1);
        let c_raw = match &kl.constant {
            Some(text) => parse_scalar(text, order).map_err(|e| perr(kl.lineno, 1, e.to_string()))?,
            None => CycloScalar::zero(),
        };
        let l_raw = match &kl.linear {
            Some(tokens) => {
                if tokens.len() != n {
                    return Err(perr(kl.lineno, 1, format!("linear part needs {n} coefficients")));
                }
                tokens
                    .iter()
                    .map(|t| parse_scalar(t, order).map_err(|e| perr(kl.lineno, 1, e.to_string())))
                    .collect::<Result<Vec<_>, _>>()?
            }
            None => vec![CycloScalar::zero(); n],
        };
        // Canonical orientation.
        let (a, b, c_val, l_val) = if i < j {
            (i, j, c_raw, l_raw)
        } else {
            let s = q.q(j, i).neg(); // kappa(v_j,v_i) = -q_ji kappa(v_i,v_j)
            (j, i, &s * &c_raw, l_raw.iter().map(|x| &s * x).collect())
        };
        let key = (kl.g, a, b);
        if let Some(prev_line) = seen.get(&key) {
            let pc = kappa.constant.get(&key).cloned().unwrap_or_else(CycloScalar::zero);
            let pl = kappa
                .linear
                .get(&key)
                .cloned()
                .unwrap_or_else(|| vec![CycloScalar::zero(); n]);
            if pc != c_val || pl != l_val {
                let mut r = CheckReport::new();
                r.push(
                    "kappa antisymmetry",
                    format!(
                        "lines {prev_line} and {} disagree for kappa_g(v{},v{}), g={}",
                        kl.lineno,
                        a + 1,
                        b + 1,
                        kl.g
                    ),
                );
                return Err(SpecError::Invalid(r));
            }
            continue;
        }
        seen.insert(key, kl.lineno);
        kappa.set_constant(kl.g, a, b, c_val);
        kappa.set_linear(kl.g, a, b, l_val);
    }

    DeformationSpec::new(n, order, q, group, action, kappa)
}
