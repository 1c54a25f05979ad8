//! Divisor combinatorics and invariants of abelian covers branched along a
//! blown-up line arrangement.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Arrangement, CoverError};
use crate::group::{smith_normal_form, AbelianInvariants};
use crate::manifold::{resolve, BmyStatus, ManifoldClass, Minimal, Surface, SurfaceKind};

/// A divisor class on the blown-up plane in the basis `(H, E_1, ..., E_P)`
/// with intersection form `diag(1, -1, ..., -1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DivClass {
    h: i64,
    exc: Vec<i64>,
}

impl DivClass {
    fn dot(&self, other: &DivClass) -> i64 {
        let mut acc = self.h * other.h;
        for (a, b) in self.exc.iter().zip(&other.exc) {
            acc -= a * b;
        }
        acc
    }
}

/// How two branch components cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossingKind {
    /// A line's proper transform meeting an exceptional curve.
    LineExceptional,
    /// Two proper transforms meeting away from every blown-up point.
    Residual,
}

/// A node of the branch divisor: components `a` and `b` meet transversally
/// in one point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub a: usize,
    pub b: usize,
    pub kind: CrossingKind,
}

/// The normal-crossing divisor obtained from an arrangement by blowing up
/// every point: one component per line (proper transform) and one per point
/// (exceptional curve). All components are rational.
#[derive(Debug, Clone)]
pub struct DivisorModel {
    arrangement: Arrangement,
    component_ids: Vec<String>,
    crossings: Vec<Crossing>,
}

fn exceptional_id(point: &str) -> String {
    match point.strip_prefix('p') {
        Some(digits) if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) => {
            format!("E{digits}")
        }
        _ => format!("E_{point}"),
    }
}

impl DivisorModel {
    pub fn new(arrangement: Arrangement) -> DivisorModel {
        let nlines = arrangement.line_count();
        let mut component_ids: Vec<String> = arrangement.lines().to_vec();
        component_ids.extend(arrangement.points().iter().map(|p| exceptional_id(p)));
        let mut crossings = Vec::new();
        for l in 0..nlines {
            for p in arrangement.points_on(l) {
                crossings.push(Crossing {
                    a: l,
                    b: nlines + p,
                    kind: CrossingKind::LineExceptional,
                });
            }
        }
        for (a, b) in arrangement.residual_pairs() {
            crossings.push(Crossing {
                a,
                b,
                kind: CrossingKind::Residual,
            });
        }
        DivisorModel {
            arrangement,
            component_ids,
            crossings,
        }
    }

    pub fn arrangement(&self) -> &Arrangement {
        &self.arrangement
    }

    /// Component ids: all lines first, then one exceptional curve per point.
    pub fn component_ids(&self) -> &[String] {
        &self.component_ids
    }

    pub fn component_count(&self) -> usize {
        self.component_ids.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Total number of nodes of the branch divisor.
    pub fn node_count(&self) -> usize {
        self.crossings.len()
    }

    fn line_count(&self) -> usize {
        self.arrangement.line_count()
    }

    fn point_count(&self) -> usize {
        self.arrangement.point_count()
    }

    fn component_class(&self, comp: usize) -> DivClass {
        let nlines = self.line_count();
        let mut exc = vec![0i64; self.point_count()];
        if comp < nlines {
            for p in self.arrangement.points_on(comp) {
                exc[p] = -1;
            }
            DivClass { h: 1, exc }
        } else {
            exc[comp - nlines] = 1;
            DivClass { h: 0, exc }
        }
    }

    /// Self-intersection of a component: `1 - #points` on a line's proper
    /// transform, `-1` on an exceptional curve.
    pub fn self_intersection(&self, comp: usize) -> i64 {
        let nlines = self.line_count();
        if comp < nlines {
            1 - self.arrangement.points_on(comp).len() as i64
        } else {
            -1
        }
    }

    /// First homology of the divisor complement, presented by one meridian
    /// per component modulo one relation per second-homology basis class of
    /// the ambient surface: the lines sum to zero, and each exceptional
    /// meridian equals the sum of the meridians of its incident lines.
    pub fn h1_invariants(&self) -> AbelianInvariants {
        let nlines = self.line_count();
        let npoints = self.point_count();
        let cols = nlines + npoints;
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(1 + npoints);
        let mut h_row = vec![BigInt::zero(); cols];
        for cell in h_row.iter_mut().take(nlines) {
            *cell = BigInt::one();
        }
        rows.push(h_row);
        for p in 0..npoints {
            let mut row = vec![BigInt::zero(); cols];
            for l in self.arrangement.lines_through(p) {
                row[l] = BigInt::one();
            }
            row[nlines + p] = -BigInt::one();
            rows.push(row);
        }
        let diag = smith_normal_form(&rows);
        let nonzero = diag.iter().filter(|d| !d.is_zero()).count();
        let mut factors: Vec<BigInt> = diag.iter().filter(|d| **d > BigInt::one()).cloned().collect();
        factors.extend(std::iter::repeat(BigInt::zero()).take(cols - nonzero));
        AbelianInvariants { factors }
    }
}

/// Branch data for a `(Z/n)^k` cover: one value per line. Values on
/// exceptional components are determined by incidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverData {
    n: u64,
    k: usize,
    phi: BTreeMap<String, Vec<u64>>,
}

impl CoverData {
    /// Values may be negative; they are reduced mod `n`.
    pub fn new<I, S>(n: u64, k: usize, values: I) -> Result<CoverData, CoverError>
    where
        I: IntoIterator<Item = (S, Vec<i64>)>,
        S: Into<String>,
    {
        if n == 0 {
            return Err(CoverError::BadGroup("cyclic order must be positive".into()));
        }
        if k == 0 {
            return Err(CoverError::BadGroup("exponent must be positive".into()));
        }
        let mut phi = BTreeMap::new();
        for (name, value) in values {
            let name = name.into();
            if value.len() != k {
                return Err(CoverError::WrongValueLength {
                    component: name,
                    expected: k,
                });
            }
            let reduced: Vec<u64> = value
                .iter()
                .map(|v| v.rem_euclid(n as i64) as u64)
                .collect();
            if phi.insert(name.clone(), reduced).is_some() {
                return Err(CoverError::DuplicateName(name));
            }
        }
        Ok(CoverData { n, k, phi })
    }

    /// Parses `group Z3^2` and `phi l1 = (1,0)` records, one per text line.
    pub fn parse(text: &str) -> Result<CoverData, CoverError> {
        let mut group: Option<(u64, usize)> = None;
        let mut values: Vec<(String, Vec<i64>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            let parse_err = |msg: &str| CoverError::Parse {
                line: lineno,
                msg: msg.to_string(),
            };
            if let Some(spec) = trimmed.strip_prefix("group ") {
                if group.is_some() {
                    return Err(parse_err("duplicate `group` record"));
                }
                group = Some(parse_group_spec(spec.trim()).map_err(|msg| CoverError::Parse {
                    line: lineno,
                    msg,
                })?);
            } else if let Some(rest) = trimmed.strip_prefix("phi ") {
                let (name, tuple) = rest
                    .split_once('=')
                    .ok_or_else(|| parse_err("expected `phi LINE = (v, ...)`"))?;
                let name = name.trim();
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(parse_err("expected a single line name before `=`"));
                }
                let tuple = tuple.trim();
                let inner = tuple
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(|| parse_err("expected a parenthesized tuple"))?;
                let mut entries = Vec::new();
                for part in inner.split(',') {
                    let v: i64 = part
                        .trim()
                        .parse()
                        .map_err(|_| parse_err("tuple entries must be integers"))?;
                    entries.push(v);
                }
                values.push((name.to_string(), entries));
            } else {
                return Err(parse_err("expected a `group` or `phi` record"));
            }
        }
        let (n, k) = group.ok_or(CoverError::BadGroup("missing `group` record".into()))?;
        CoverData::new(n, k, values)
    }

    /// Cyclic order `n` of the group `(Z/n)^k`.
    pub fn n(&self) -> u64 {
        self.n
    }

    /// Exponent `k` of the group `(Z/n)^k`.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn group_order(&self) -> BigInt {
        BigInt::from(self.n).pow(self.k as u32)
    }

    pub fn line_value(&self, line: &str) -> Option<&[u64]> {
        self.phi.get(line).map(Vec::as_slice)
    }

    pub fn assignments(&self) -> impl Iterator<Item = (&str, &[u64])> {
        self.phi.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }
}

/// `Z3^2`-style group spec: `Z{n}` with an optional `^{k}`.
fn parse_group_spec(spec: &str) -> Result<(u64, usize), String> {
    let body = spec
        .strip_prefix('Z')
        .ok_or_else(|| format!("unsupported group `{spec}`; expected Z<n> or Z<n>^<k>"))?;
    let (n_str, k_str) = match body.split_once('^') {
        Some((n, k)) => (n, Some(k)),
        None => (body, None),
    };
    let n: u64 = n_str
        .parse()
        .map_err(|_| format!("bad cyclic order `{n_str}`"))?;
    let k: usize = match k_str {
        Some(k) => k.parse().map_err(|_| format!("bad exponent `{k}`"))?,
        None => 1,
    };
    if n == 0 || k == 0 {
        return Err("group parameters must be positive".into());
    }
    Ok((n, k))
}

/// The standard branch values on the Hesse lines: the `phi_paper` builtin.
pub fn phi_paper() -> CoverData {
    let values: [(&str, Vec<i64>); 12] = [
        ("l1", vec![1, 0]),
        ("l2", vec![1, 0]),
        ("l3", vec![1, 0]),
        ("l4", vec![2, 0]),
        ("l5", vec![0, 1]),
        ("l6", vec![2, 2]),
        ("l7", vec![2, 1]),
        ("l8", vec![1, 2]),
        ("l9", vec![2, 0]),
        ("l10", vec![1, 1]),
        ("l11", vec![1, 1]),
        ("l12", vec![0, 2]),
    ];
    CoverData::new(3, 2, values.map(|(s, v)| (s.to_string(), v)))
        .expect("builtin cover data is well-formed")
}

/// One value per component: lines from the data, exceptionals by summing
/// incident lines mod `n`.
fn component_values(d: &DivisorModel, c: &CoverData) -> Result<Vec<Vec<u64>>, CoverError> {
    for (name, _) in c.assignments() {
        if d.arrangement().line_index(name).is_none() {
            return Err(CoverError::UnknownLine(name.to_string()));
        }
    }
    let mut values = Vec::with_capacity(d.component_count());
    for line in d.arrangement().lines() {
        let v = c
            .line_value(line)
            .ok_or_else(|| CoverError::MissingValue(line.clone()))?;
        values.push(v.to_vec());
    }
    for p in 0..d.arrangement().point_count() {
        let mut sum = vec![0u64; c.k()];
        for l in d.arrangement().lines_through(p) {
            for (acc, v) in sum.iter_mut().zip(&values[l]) {
                *acc = (*acc + *v) % c.n();
            }
        }
        values.push(sum);
    }
    Ok(values)
}

/// Order of a value in `(Z/n)^k`.
fn value_order(n: u64, value: &[u64]) -> u64 {
    let g = value.iter().fold(n, |acc, v| acc.gcd(v));
    n / g
}

/// Whether `u` and `v` generate a subgroup isomorphic to `(Z/n)^2`, so the
/// cover is totally separated over a node where they meet. Decided by the
/// index of the lattice spanned by `u`, `v`, and `nZ^k`.
fn independent_pair(n: u64, k: usize, u: &[u64], v: &[u64]) -> bool {
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let mut row = vec![BigInt::from(u[r]), BigInt::from(v[r])];
        for c in 0..k {
            row.push(if c == r {
                BigInt::from(n)
            } else {
                BigInt::zero()
            });
        }
        rows.push(row);
    }
    let product: BigInt = smith_normal_form(&rows).iter().product();
    product * BigInt::from(n) * BigInt::from(n) == BigInt::from(n).pow(k as u32)
}

/// Whether the line values generate all of `(Z/n)^k`.
fn surjective(n: u64, k: usize, line_values: &[Vec<u64>]) -> bool {
    let mut rows = Vec::with_capacity(k);
    for r in 0..k {
        let mut row: Vec<BigInt> = line_values.iter().map(|v| BigInt::from(v[r])).collect();
        for c in 0..k {
            row.push(if c == r {
                BigInt::from(n)
            } else {
                BigInt::zero()
            });
        }
        rows.push(row);
    }
    smith_normal_form(&rows).iter().all(|d| d.is_one())
}

/// Outcome of validating cover data against a divisor model.
///
/// `failures` block the invariant computation. `warnings` record conditions
/// that do not enter the invariant formulas but flag places where the
/// modeled cover may not be what the data intends: dependent values at a
/// residual node (the double point is then not totally separated upstairs)
/// and a nonzero sum of the line values (the assignment then does not factor
/// through first homology of the complement).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
    /// Derived values on the exceptional components, for audit.
    pub phi_exceptional: BTreeMap<String, Vec<u64>>,
}

impl CoverReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that the branch data defines a smooth `(Z/n)^k` cover branched
/// exactly along the divisor: every component value has full order `n`,
/// the two values at every line-exceptional node are independent, and the
/// values generate the whole group.
pub fn validate_cover(d: &DivisorModel, c: &CoverData) -> Result<CoverReport, CoverError> {
    let values = component_values(d, c)?;
    let n = c.n();
    let k = c.k();
    let nlines = d.arrangement().line_count();
    let mut failures = Vec::new();
    let mut warnings = Vec::new();

    if n > 1 {
        for (comp, value) in values.iter().enumerate() {
            let id = &d.component_ids()[comp];
            if value.iter().all(|v| *v == 0) {
                failures.push(format!("component `{id}` carries the zero class"));
            } else {
                let ord = value_order(n, value);
                if ord != n {
                    failures.push(format!(
                        "component `{id}` carries a class of order {ord}, not {n}"
                    ));
                }
            }
        }
    }

    for crossing in d.crossings() {
        if independent_pair(n, k, &values[crossing.a], &values[crossing.b]) {
            continue;
        }
        let ida = &d.component_ids()[crossing.a];
        let idb = &d.component_ids()[crossing.b];
        match crossing.kind {
            CrossingKind::LineExceptional => failures.push(format!(
                "values at the crossing of `{ida}` and `{idb}` are dependent"
            )),
            CrossingKind::Residual => warnings.push(format!(
                "values at the residual crossing of `{ida}` and `{idb}` are dependent"
            )),
        }
    }

    let line_values = &values[..nlines];
    if !surjective(n, k, line_values) {
        failures.push(format!("the line values do not generate (Z/{n})^{k}"));
    }

    if n > 1 {
        let mut sum = vec![0u64; k];
        for v in line_values {
            for (acc, x) in sum.iter_mut().zip(v) {
                *acc = (*acc + *x) % n;
            }
        }
        if sum.iter().any(|v| *v != 0) {
            let shown: Vec<String> = sum.iter().map(u64::to_string).collect();
            warnings.push(format!(
                "line values sum to ({}), not zero: the assignment does not factor \
                 through first homology of the complement",
                shown.join(",")
            ));
        }
    }

    let mut phi_exceptional = BTreeMap::new();
    for p in 0..d.arrangement().point_count() {
        phi_exceptional.insert(
            d.component_ids()[nlines + p].clone(),
            values[nlines + p].clone(),
        );
    }

    Ok(CoverReport {
        failures,
        warnings,
        phi_exceptional,
    })
}

/// The class downstairs whose pullback is the canonical class of the cover:
/// `K_T + (1 - 1/n) * [branch divisor]`, which must be integral.
fn canonical_downstairs(d: &DivisorModel, c: &CoverData) -> Result<DivClass, CoverError> {
    let n = c.n() as i64;
    let nlines = d.line_count() as i64;
    let h_num = -3 * n + (n - 1) * nlines;
    if h_num.rem_euclid(n) != 0 {
        return Err(CoverError::NonIntegralPullback("H".into()));
    }
    let mut exc = Vec::with_capacity(d.point_count());
    for p in 0..d.point_count() {
        let mult = d.arrangement().multiplicity(p) as i64;
        let num = n + (n - 1) * (1 - mult);
        if num.rem_euclid(n) != 0 {
            return Err(CoverError::NonIntegralPullback(
                d.component_ids()[d.line_count() + p].clone(),
            ));
        }
        exc.push(num / n);
    }
    Ok(DivClass { h: h_num / n, exc })
}

/// Euler-number bookkeeping of the cover, stratum by stratum, kept for audit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrataAudit {
    /// Euler number of the blown-up plane.
    pub euler_base: i64,
    /// Euler number of the open complement of the branch divisor.
    pub euler_open_surface: i64,
    /// Euler number of the divisor minus its nodes.
    pub euler_open_components: i64,
    /// Nodes of the branch divisor.
    pub node_count: u64,
    /// The same total computed with terms grouped by component closures;
    /// must agree with the stratified sum.
    pub grouped_total: BigInt,
}

/// Numerical invariants of the covering surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInvariants {
    pub k_sq: BigInt,
    pub e: BigInt,
    pub chi_h: BigInt,
    pub sigma: BigInt,
    pub group_order: BigInt,
    pub bmy: BmyStatus,
    /// `K` downstairs: coefficient of `H` and of each exceptional class.
    pub k_class_h: i64,
    pub k_class_exc: Vec<i64>,
    pub strata: StrataAudit,
}

/// Computes `K²`, `e`, `χ_h`, and `σ` of the covering surface. Requires the
/// cover data to validate with no failures.
pub fn canonical_and_chern(d: &DivisorModel, c: &CoverData) -> Result<CoverInvariants, CoverError> {
    let report = validate_cover(d, c)?;
    if !report.is_valid() {
        return Err(CoverError::InvalidCover(report.failures));
    }

    let k_down = canonical_downstairs(d, c)?;
    let group_order = c.group_order();
    let sheets_on_components = BigInt::from(c.n()).pow(c.k() as u32 - 1);

    let mut down_sq = k_down.h * k_down.h;
    for e in &k_down.exc {
        down_sq -= e * e;
    }
    let k_sq = group_order.clone() * BigInt::from(down_sq);

    let components = d.component_count() as i64;
    let nodes = d.node_count() as i64;
    let euler_base = 3 + d.point_count() as i64;
    let euler_divisor = 2 * components - nodes;
    let euler_open_surface = euler_base - euler_divisor;
    let euler_open_components = euler_divisor - nodes;

    // Fiber cardinalities stratum by stratum: |G| over the open surface,
    // |G|/n over open components, |G|/n² over nodes (exact once validation
    // has passed).
    let node_weight_num = group_order.clone() * BigInt::from(nodes);
    let n_sq = BigInt::from(c.n()) * BigInt::from(c.n());
    let (node_term, rem) = node_weight_num.div_rem(&n_sq);
    assert!(rem.is_zero(), "node weight is integral for validated covers");
    let e = group_order.clone() * BigInt::from(euler_open_surface)
        + sheets_on_components.clone() * BigInt::from(euler_open_components)
        + node_term.clone();

    // Cross-check: group the same count by component closures.
    let branch_defect = group_order.clone() - sheets_on_components.clone();
    let node_coeff = branch_defect.clone() - sheets_on_components.clone()
        + if nodes == 0 {
            BigInt::zero()
        } else {
            node_term / BigInt::from(nodes)
        };
    let grouped_total = group_order.clone() * BigInt::from(euler_base)
        - branch_defect * BigInt::from(2 * components)
        + node_coeff * BigInt::from(nodes);
    assert_eq!(e, grouped_total, "stratified and grouped Euler sums agree");

    let (chi_h, rem) = (k_sq.clone() + e.clone()).div_rem(&BigInt::from(12));
    if !rem.is_zero() {
        return Err(CoverError::NonIntegralChi);
    }
    let (sigma, rem) = (k_sq.clone() - BigInt::from(2) * e.clone()).div_rem(&BigInt::from(3));
    if !rem.is_zero() {
        return Err(CoverError::NonIntegralSignature);
    }
    debug_assert_eq!(
        chi_h.clone() * BigInt::from(4),
        e.clone() + sigma.clone(),
        "chi agrees along both routes"
    );

    let bound = BigInt::from(9) * chi_h.clone();
    let bmy = match k_sq.cmp(&bound) {
        std::cmp::Ordering::Greater => BmyStatus::Violated,
        std::cmp::Ordering::Equal => BmyStatus::OnLine,
        std::cmp::Ordering::Less => BmyStatus::Below,
    };

    Ok(CoverInvariants {
        k_sq,
        e,
        chi_h,
        sigma,
        group_order,
        bmy,
        k_class_h: k_down.h,
        k_class_exc: k_down.exc,
        strata: StrataAudit {
            euler_base,
            euler_open_surface,
            euler_open_components,
            node_count: nodes as u64,
            grouped_total,
        },
    })
}

/// A curve downstairs whose preimage is lifted to the cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveRef {
    /// The proper transform of a named line.
    Line(String),
    /// The exceptional curve over a named point.
    Exceptional(String),
    /// A generic member of the pencil of lines through a named point.
    GenericThrough(String),
}

/// Genus and intersection data of a curve lift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveLift {
    pub genus: BigInt,
    pub k_dot: BigInt,
    pub self_int: BigInt,
    /// Points of the downstairs curve over which the lift is branched.
    pub branch_points: u64,
    /// Modeled covering degree of the lift over the downstairs curve.
    pub degree: u64,
    /// The lift is modeled as a single connected curve; connectivity is an
    /// assumption, not a computation.
    pub assumed_connected: bool,
}

/// Lifts a rational curve downstairs to the cover: genus via Riemann-Hurwitz
/// for a degree-`n` cover branched at the crossings with the branch divisor,
/// `K·C` via the pullback formula, and `C²` via adjunction.
pub fn lift_curve(d: &DivisorModel, c: &CoverData, curve: &CurveRef) -> Result<CurveLift, CoverError> {
    let report = validate_cover(d, c)?;
    if !report.is_valid() {
        return Err(CoverError::InvalidCover(report.failures));
    }

    let nlines = d.line_count();
    let (class, own_component) = match curve {
        CurveRef::Line(name) => {
            let l = d
                .arrangement()
                .line_index(name)
                .ok_or_else(|| CoverError::UnknownLine(name.clone()))?;
            (d.component_class(l), Some(l))
        }
        CurveRef::Exceptional(point) => {
            let p = d
                .arrangement()
                .point_index(point)
                .ok_or_else(|| CoverError::UnknownPoint(point.clone()))?;
            (d.component_class(nlines + p), Some(nlines + p))
        }
        CurveRef::GenericThrough(point) => {
            let p = d
                .arrangement()
                .point_index(point)
                .ok_or_else(|| CoverError::UnknownPoint(point.clone()))?;
            let mut exc = vec![0i64; d.point_count()];
            exc[p] = -1;
            (DivClass { h: 1, exc }, None)
        }
    };

    let mut branch_points = 0i64;
    for comp in 0..d.component_count() {
        if Some(comp) == own_component {
            continue;
        }
        let meets = class.dot(&d.component_class(comp));
        debug_assert!(meets >= 0, "simple crossings never meet negatively");
        branch_points += meets;
    }

    let n = c.n() as i64;
    let two_g_minus_2 = -2 * n + branch_points * (n - 1);
    if (two_g_minus_2 + 2).rem_euclid(2) != 0 {
        return Err(CoverError::GenusNotIntegral);
    }
    let genus = (two_g_minus_2 + 2) / 2;
    if genus < 0 {
        return Err(CoverError::GenusNegative);
    }

    let k_down = canonical_downstairs(d, c)?;
    let sheets_on_components = BigInt::from(c.n()).pow(c.k() as u32 - 1);
    let k_dot = sheets_on_components * BigInt::from(k_down.dot(&class));
    let self_int = BigInt::from(two_g_minus_2) - k_dot.clone();

    Ok(CurveLift {
        genus: BigInt::from(genus),
        k_dot,
        self_int,
        branch_points: branch_points as u64,
        degree: c.n(),
        assumed_connected: true,
    })
}

/// The Hesse cover packaged for the manifold calculus, before and after
/// resolving the genus-9 configuration.
#[derive(Debug, Clone)]
pub struct Sigma9Package {
    /// The covering surface with the curve lifts as separate surfaces:
    /// `Sigma3` (lift of `l1`, genus 3, square −2) meeting `SE1`, `SE4`,
    /// `SE7` (lifts of the exceptionals over `p1`, `p4`, `p7`; genus 2,
    /// square −1) once each, and `SE6` disjoint.
    pub unresolved: ManifoldClass,
    /// The same surface after resolving the three intersections into
    /// `Sigma9` (genus 9, square +1, `pi1_surjects`), with `SE6` untouched.
    pub resolved: ManifoldClass,
}

/// Assembles the covering surface of the Hesse arrangement with the
/// standard branch values as a `ManifoldClass` carrying its distinguished
/// symplectic surfaces.
pub fn sigma9_package() -> Sigma9Package {
    let model = DivisorModel::new(Arrangement::hesse());
    let data = phi_paper();
    let inv = canonical_and_chern(&model, &data).expect("builtin cover data is valid");

    let line_lift = lift_curve(&model, &data, &CurveRef::Line("l1".into()))
        .expect("builtin curve reference is valid");
    let mut w = ManifoldClass::new(inv.e.clone(), inv.sigma.clone())
        .with_symplectic(true)
        .with_minimal(Minimal::Yes)
        .with_note(
            "abelian cover of the blown-up plane branched along the Hesse configuration; \
             minimal because K^2 = 9 chi_h leaves no room for a (-1)-sphere",
        );
    w.add_surface(Surface::new(
        "Sigma3",
        line_lift.genus.clone(),
        line_lift.self_int.clone(),
        SurfaceKind::Symplectic,
    ))
    .expect("fresh surface id");

    // Lifts of the exceptional curves over p1, p4, p7 (the points of l1)
    // each meet Sigma3 once; the lift over p6 is disjoint from all of them.
    for point in ["p1", "p4", "p7", "p6"] {
        let e_lift = lift_curve(&model, &data, &CurveRef::Exceptional(point.into()))
            .expect("builtin curve reference is valid");
        let id = exceptional_id(point).replace('E', "SE");
        w.add_surface(Surface::new(
            id.clone(),
            e_lift.genus.clone(),
            e_lift.self_int.clone(),
            SurfaceKind::Symplectic,
        ))
        .expect("fresh surface id");
        if point != "p6" {
            w.record_intersection("Sigma3", &id, 1)
                .expect("both surfaces exist");
        }
    }
    let mut unresolved = w.clone();
    unresolved.normalize();

    let step = resolve(&w, "Sigma3", "SE1", 1, "Sigma5").expect("surfaces meet once");
    let step = resolve(&step, "Sigma5", "SE4", 1, "Sigma7").expect("surfaces meet once");
    let mut resolved = resolve(&step, "Sigma7", "SE7", 1, "Sigma9").expect("surfaces meet once");
    resolved
        .set_surface_pi1_surjects("Sigma9", true)
        .expect("Sigma9 exists");
    resolved = resolved.with_note("pi1 of Sigma9 surjects onto pi1 of the ambient surface");
    resolved.normalize();

    Sigma9Package {
        unresolved,
        resolved,
    }
}

/// The covering surface of the Hesse arrangement as a building block:
/// `e = 48`, `σ = 16`, with `Sigma9` (genus 9, square +1) and `SE6`
/// (genus 2, square −1) in its surface inventory.
pub fn hesse_w_block() -> ManifoldClass {
    sigma9_package().resolved
}
