//! Executable checks: division by a line of a polynomial vanishing at
//! `n + 1` of its points, the nine-point Cayley–Bacharach property for two
//! line triples, usage reports for 2-, 3- and 4-node lines of GC_4 sets,
//! and the seeded suites that drive them.
//!
//! The usage bounds for low-node lines are only claimed for GC_4 sets with no
//! five collinear nodes. Since no such set exists, the reports record raw
//! usage and only flag violations when that hypothesis actually holds.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gc::{FactorizationWitness, GcAnalysis};
use crate::generators::{gc_corpus, non_gc_corpus, random_berzolari_radon_from, Affine};
use crate::geometry::{Line, NodeSet, Point, Scalar};
use crate::interpolation::{interpolate, InterpolationProblem};
use crate::linalg;
use crate::poly::{monomial_values, Poly2};
use crate::rng::SplitMix64;

/// Divides `p` by `line` given `bound + 1` distinct points of the line where
/// `p` vanishes. Returns the quotient; `None` would contradict Bezout's theorem.
pub fn verify_bezout(p: &Poly2, line: &Line, points: &[Point]) -> Result<Option<Poly2>> {
    let need = p.bound() + 1;
    if points.len() != need {
        return Err(Error::PreconditionViolation(format!(
            "need {need} points on the line, got {}",
            points.len()
        )));
    }
    for (i, pt) in points.iter().enumerate() {
        if !line.contains(pt) {
            return Err(Error::PreconditionViolation(format!(
                "{pt} is not on {line}"
            )));
        }
        if points[..i].contains(pt) {
            return Err(Error::PreconditionViolation(format!("{pt} is repeated")));
        }
        if !p.evaluate(pt).is_zero() {
            return Err(Error::PreconditionViolation(format!(
                "polynomial does not vanish at {pt}"
            )));
        }
    }
    Ok(p.divide_by_line(line))
}

/// A polynomial of bound `n` vanishing at `n + 1` points of `line`, obtained
/// by interpolation on a poised set whose first `n + 1` nodes are those points.
#[derive(Clone, Debug)]
pub struct BezoutInstance {
    pub poly: Poly2,
    pub line: Line,
    pub points: Vec<Point>,
}

pub fn bezout_instance(rng: &mut SplitMix64, n: usize, bound: u32) -> BezoutInstance {
    let r = i64::from(bound.max(2));
    let line = loop {
        if let Ok(l) = Line::new(
            rng.range_i64(-r, r),
            rng.range_i64(-r, r),
            rng.range_i64(-r, r),
        ) {
            break l;
        }
    };
    let nodes = random_berzolari_radon_from(rng, n, bound, Some(&line));
    let data: Vec<Scalar> = (0..nodes.len())
        .map(|i| {
            if i <= n {
                Scalar::zero()
            } else {
                rng.nonzero_rational(bound)
            }
        })
        .collect();
    let points = nodes.nodes()[..=n].to_vec();
    let problem = InterpolationProblem::new(nodes, data).expect("cardinality matches");
    let poly = interpolate(&problem).expect("Berzolari–Radon sets are poised");
    BezoutInstance { poly, line, points }
}

/// Two line triples and their nine pairwise intersections, `(i, j)` order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbConfiguration {
    first: [Line; 3],
    second: [Line; 3],
    points: Vec<Point>,
}

impl CbConfiguration {
    pub fn new(first: [Line; 3], second: [Line; 3]) -> Result<Self> {
        let mut points = Vec::with_capacity(9);
        for (i, l) in first.iter().enumerate() {
            for (j, m) in second.iter().enumerate() {
                let p = l.intersection(m).ok_or_else(|| {
                    Error::DegenerateConfiguration(format!(
                        "line {i} of the first triple does not meet line {j} of the second in one point"
                    ))
                })?;
                if points.contains(&p) {
                    return Err(Error::DegenerateConfiguration(format!(
                        "intersection {p} repeats"
                    )));
                }
                points.push(p);
            }
        }
        Ok(CbConfiguration {
            first,
            second,
            points,
        })
    }

    pub fn first(&self) -> &[Line; 3] {
        &self.first
    }

    pub fn second(&self) -> &[Line; 3] {
        &self.second
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn random(rng: &mut SplitMix64, bound: u32) -> Self {
        let r = i64::from(bound.max(2));
        let mut line = || loop {
            if let Ok(l) = Line::new(
                rng.range_i64(-r, r),
                rng.range_i64(-r, r),
                rng.range_i64(-r, r),
            ) {
                break l;
            }
        };
        loop {
            let first = [line(), line(), line()];
            let second = [line(), line(), line()];
            if let Ok(c) = CbConfiguration::new(first, second) {
                return c;
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CbOutcome {
    pub holds: bool,
    /// Dimension of the space of cubics through the other eight points, per
    /// omitted point.
    pub nullspace_dims: [usize; 9],
}

/// For each omitted point, every cubic through the other eight must vanish there.
pub fn verify_cayley_bacharach(config: &CbConfiguration) -> CbOutcome {
    let mut holds = true;
    let mut nullspace_dims = [0; 9];
    for (omit, dim) in nullspace_dims.iter_mut().enumerate() {
        let rows: Vec<Vec<Scalar>> = config
            .points
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != omit)
            .map(|(_, p)| monomial_values(3, p))
            .collect();
        let basis = linalg::nullspace(&rows);
        *dim = basis.len();
        let omitted = &config.points[omit];
        holds &= !basis.is_empty()
            && basis
                .into_iter()
                .all(|v| Poly2::from_coeffs(3, v).evaluate(omitted).is_zero());
    }
    CbOutcome {
        holds,
        nullspace_dims,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LemmaKind {
    /// 2- and 3-node lines: at most one user.
    LowNodeLines,
    /// 4-node lines: at most three users, and three users share two more 4-node lines.
    FourNodeLines,
    /// A used 4-node line has exactly three users.
    FourNodeTriples,
}

impl LemmaKind {
    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::LowNodeLines => "low-node-lines",
            LemmaKind::FourNodeLines => "four-node-lines",
            LemmaKind::FourNodeTriples => "four-node-triples",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineUsage {
    pub line: Line,
    pub node_count: usize,
    pub users: Vec<usize>,
    /// For 4-node lines with exactly three users: the other lines all three
    /// users' witnesses contain.
    pub shared_lines: Vec<Line>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    pub kind: LemmaKind,
    pub lines: Vec<LineUsage>,
    /// Lines whose usage breaks the bound, whatever the hypothesis.
    pub over_bound: Vec<Line>,
    /// `over_bound` when `no_maximal_line` holds, empty otherwise.
    pub violations: Vec<Line>,
    /// The set has no line through `n + 1` nodes.
    pub no_maximal_line: bool,
}

impl fmt::Display for LemmaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} lines examined, {} over bound, {} violations (no maximal line: {})",
            self.kind.name(),
            self.lines.len(),
            self.over_bound.len(),
            self.violations.len(),
            self.no_maximal_line
        )
    }
}

fn usage_of(line: &Line, witnesses: &[&FactorizationWitness]) -> Vec<usize> {
    witnesses
        .iter()
        .filter(|w| w.contains(line))
        .map(|w| w.owner)
        .collect()
}

fn finish(
    kind: LemmaKind,
    lines: Vec<LineUsage>,
    over_bound: Vec<Line>,
    analysis: &GcAnalysis,
) -> LemmaReport {
    let no_maximal_line = analysis.maximal_lines().is_empty();
    let violations = if no_maximal_line {
        over_bound.clone()
    } else {
        Vec::new()
    };
    LemmaReport {
        kind,
        lines,
        over_bound,
        violations,
        no_maximal_line,
    }
}

/// Every 2- and 3-node line with its users; more than one user is over bound.
pub fn low_node_line_report(analysis: &GcAnalysis) -> Result<LemmaReport> {
    let witnesses = analysis.gc_witnesses()?;
    let mut lines = Vec::new();
    let mut over = Vec::new();
    for e in analysis.census().entries() {
        if e.count() != 2 && e.count() != 3 {
            continue;
        }
        let users = usage_of(&e.line, &witnesses);
        if users.len() > 1 {
            over.push(e.line.clone());
        }
        lines.push(LineUsage {
            line: e.line.clone(),
            node_count: e.count(),
            users,
            shared_lines: Vec::new(),
        });
    }
    Ok(finish(LemmaKind::LowNodeLines, lines, over, analysis))
}

/// Every 4-node line with its users; more than three users is over bound.
/// For exactly three users, records the further lines they share.
pub fn four_node_line_report(analysis: &GcAnalysis) -> Result<LemmaReport> {
    let witnesses = analysis.gc_witnesses()?;
    let mut lines = Vec::new();
    let mut over = Vec::new();
    for e in analysis.census().with_count(4) {
        let users = usage_of(&e.line, &witnesses);
        let shared_lines = if users.len() == 3 {
            let ws: Vec<&&FactorizationWitness> = users.iter().map(|&u| &witnesses[u]).collect();
            ws[0]
                .factors
                .iter()
                .filter(|l| **l != e.line && ws[1].contains(l) && ws[2].contains(l))
                .cloned()
                .collect()
        } else {
            Vec::new()
        };
        if users.len() > 3 {
            over.push(e.line.clone());
        }
        lines.push(LineUsage {
            line: e.line.clone(),
            node_count: 4,
            users,
            shared_lines,
        });
    }
    Ok(finish(LemmaKind::FourNodeLines, lines, over, analysis))
}

/// Every used 4-node line of a degree-4 set; anything but three users is over bound.
pub fn four_node_triple_report(analysis: &GcAnalysis) -> Result<LemmaReport> {
    let degree = analysis.nodes().degree();
    if degree != 4 {
        return Err(Error::WrongDegree {
            expected: 4,
            found: degree,
        });
    }
    let witnesses = analysis.gc_witnesses()?;
    let mut lines = Vec::new();
    let mut over = Vec::new();
    for e in analysis.census().with_count(4) {
        let users = usage_of(&e.line, &witnesses);
        if users.is_empty() {
            continue;
        }
        if users.len() != 3 {
            over.push(e.line.clone());
        }
        lines.push(LineUsage {
            line: e.line.clone(),
            node_count: 4,
            users,
            shared_lines: Vec::new(),
        });
    }
    Ok(finish(LemmaKind::FourNodeTriples, lines, over, analysis))
}

/// Three-way check of the uses relation for every node and census line:
/// exact division, vanishing restriction, and vanishing at `n + 1` sample
/// points of the line. Returns `(agreeing pairs, total pairs)`.
pub fn uses_oracle_agreement(analysis: &GcAnalysis) -> (usize, usize) {
    let n = analysis.nodes().degree();
    let mut agree = 0;
    let mut total = 0;
    for e in analysis.census().entries() {
        let samples: Vec<Point> = (0..=n as i64)
            .map(|t| e.line.point_at(&Scalar::from_integer(t.into())))
            .collect();
        for (a, fp) in analysis.fundamentals().iter().enumerate() {
            let by_division = analysis.uses(a, &e.line).expect("index in range");
            let by_restriction = fp.poly.restrict_to_line(&e.line).is_zero();
            let by_samples = samples.iter().all(|s| fp.poly.evaluate(s).is_zero());
            total += 1;
            if by_division == by_restriction && by_restriction == by_samples {
                agree += 1;
            }
        }
    }
    (agree, total)
}

/// Structural facts every poised (and, where relevant, GC) set satisfies.
/// Returns a description of each failure.
pub fn structural_failures(analysis: &GcAnalysis) -> Vec<String> {
    let nodes = analysis.nodes();
    let n = nodes.degree();
    let mut failures = Vec::new();

    let sum = analysis
        .fundamentals()
        .iter()
        .fold(Poly2::zero(n), |acc, fp| &acc + &fp.poly);
    if sum != Poly2::constant(n, Scalar::one()) {
        failures.push("fundamental polynomials do not sum to 1".into());
    }
    for fp in analysis.fundamentals() {
        for (i, p) in nodes.nodes().iter().enumerate() {
            let want = if i == fp.owner {
                Scalar::one()
            } else {
                Scalar::zero()
            };
            if fp.poly.evaluate(p) != want {
                failures.push(format!(
                    "fundamental polynomial {} wrong at node {i}",
                    fp.owner
                ));
            }
        }
    }

    let m = nodes.len();
    if analysis.census().covered_pairs() != m * (m - 1) / 2 {
        failures.push("census does not cover every node pair exactly once".into());
    }

    let (agree, total) = uses_oracle_agreement(analysis);
    if agree != total {
        failures.push(format!("uses oracles agree on {agree}/{total} pairs"));
    }

    for (w, fp) in analysis.witnesses().iter().zip(analysis.fundamentals()) {
        let Some(w) = w else { continue };
        if let Err(msg) = w.validate(nodes, &fp.poly) {
            failures.push(format!("witness {}: {msg}", w.owner));
        }
        for (line, private) in w.factors.iter().zip(w.private_nodes(nodes)) {
            if private.len() < 2 {
                failures.push(format!(
                    "witness {}: {line} has {} private nodes",
                    w.owner,
                    private.len()
                ));
            }
        }
    }
    failures
}

/// Maps the set through `map` and checks that each witness maps to the
/// witness of the same node, and usage is preserved.
pub fn affine_equivariance_failures(analysis: &GcAnalysis, map: &Affine) -> Vec<String> {
    let image = map.apply_nodes(analysis.nodes());
    let mapped = match GcAnalysis::new(&image) {
        Ok(a) => a,
        Err(e) => return vec![format!("image analysis failed: {e}")],
    };
    let mut failures = Vec::new();
    for (w, v) in analysis.witnesses().iter().zip(mapped.witnesses()) {
        match (w, v) {
            (Some(w), Some(v)) => {
                let mut expected: Vec<Line> = w.factors.iter().map(|l| map.apply_line(l)).collect();
                expected.sort();
                let mut got = v.factors.clone();
                got.sort();
                if expected != got {
                    failures.push(format!("node {}: witness lines do not correspond", w.owner));
                }
            }
            (None, None) => {}
            _ => failures.push("GC status changed under an affine map".into()),
        }
    }
    failures
}

/// Pass counts of one verifier suite.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteSummary {
    fn new(name: &str) -> Self {
        SuiteSummary {
            name: name.into(),
            ..Default::default()
        }
    }

    fn record(&mut self, label: impl FnOnce() -> String, problems: Vec<String>) {
        self.total += 1;
        if problems.is_empty() {
            self.passed += 1;
        } else {
            let label = label();
            self.failures
                .extend(problems.into_iter().map(|p| format!("{label}: {p}")));
        }
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.total && self.failures.is_empty()
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.all_passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {}/{} {status}", self.name, self.passed, self.total)
    }
}

pub const SUITES: [&str; 4] = ["bezout", "cayley-bacharach", "lemmas", "invariants"];

/// Checks one seeded division instance: the quotient exists and multiplies
/// back to the polynomial.
pub fn check_bezout_instance(inst: &BezoutInstance) -> Vec<String> {
    match verify_bezout(&inst.poly, &inst.line, &inst.points) {
        Err(e) => vec![e.to_string()],
        Ok(None) => vec![format!("{} does not divide the polynomial", inst.line)],
        Ok(Some(q)) => match q.multiply_linear(&inst.line, inst.poly.bound()) {
            Ok(back) if back == inst.poly => Vec::new(),
            _ => vec!["quotient does not multiply back".into()],
        },
    }
}

/// `count` instances, degrees cycling through `degrees`.
pub fn bezout_suite(seed: u64, count: usize, degrees: &[usize]) -> SuiteSummary {
    let mut s = SuiteSummary::new("bezout");
    for k in 0..count {
        let n = degrees[k % degrees.len()];
        let mut rng = SplitMix64::for_task(seed, k as u64);
        let inst = bezout_instance(&mut rng, n, 6);
        s.record(
            || format!("instance {k} (n = {n})"),
            check_bezout_instance(&inst),
        );
    }
    s
}

pub fn cayley_bacharach_suite(seed: u64, count: usize) -> SuiteSummary {
    let mut s = SuiteSummary::new("cayley-bacharach");
    for k in 0..count {
        let mut rng = SplitMix64::for_task(seed, k as u64);
        let config = CbConfiguration::random(&mut rng, 6);
        let outcome = verify_cayley_bacharach(&config);
        let mut problems = Vec::new();
        if !outcome.holds {
            problems.push("a cubic through eight points misses the ninth".into());
        }
        if outcome.nullspace_dims.iter().any(|&d| d < 1) {
            problems.push(format!("nullspace dimensions {:?}", outcome.nullspace_dims));
        }
        s.record(|| format!("configuration {k}"), problems);
    }
    s
}

/// Lemma reports over the GC corpus (with `count` seeded degree-4 natural
/// lattices): no violations, and every natural-lattice construction line is
/// used by exactly the nodes off it.
pub fn lemma_suite(seed: u64, count: usize) -> SuiteSummary {
    let mut s = SuiteSummary::new("lemmas");
    for entry in gc_corpus(seed, count) {
        s.record(
            || entry.name.clone(),
            lemma_problems(&entry.name, &entry.nodes),
        );
    }
    s
}

fn lemma_problems(name: &str, nodes: &NodeSet) -> Vec<String> {
    let analysis = match GcAnalysis::new(nodes) {
        Ok(a) => a,
        Err(e) => return vec![e.to_string()],
    };
    let mut reports = Vec::new();
    let mut problems = Vec::new();
    for r in [
        low_node_line_report(&analysis),
        four_node_line_report(&analysis),
    ] {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => problems.push(e.to_string()),
        }
    }
    if nodes.degree() == 4 {
        match four_node_triple_report(&analysis) {
            Ok(r) => reports.push(r),
            Err(e) => problems.push(e.to_string()),
        }
    }
    for r in &reports {
        if !r.violations.is_empty() {
            problems.push(format!("{r}"));
        }
    }
    if name.starts_with("chung-yao") && !name.contains("shear") && !name.contains("affine") {
        problems.extend(natural_lattice_usage_problems(&analysis));
    }
    problems
}

/// In a natural lattice from `n + 2` lines every construction line (the
/// lines through `n + 1` nodes) is used by the `C(n + 1, 2)` nodes off it and
/// no other line is used.
pub fn natural_lattice_usage_problems(analysis: &GcAnalysis) -> Vec<String> {
    let n = analysis.nodes().degree();
    let expected_users = (n + 1) * n / 2;
    let construction = analysis.maximal_lines();
    let mut problems = Vec::new();
    if construction.len() != n + 2 {
        problems.push(format!(
            "{} maximal lines, expected {}",
            construction.len(),
            n + 2
        ));
    }
    match analysis.usage() {
        Err(e) => problems.push(e.to_string()),
        Ok(usage) => {
            for rec in usage {
                if !construction.contains(&rec.line) {
                    problems.push(format!("non-construction line {} has users", rec.line));
                } else if rec.users.len() != expected_users {
                    problems.push(format!(
                        "{} has {} users, expected {expected_users}",
                        rec.line,
                        rec.users.len()
                    ));
                }
            }
        }
    }
    problems
}

/// Structural invariants and affine equivariance over the GC corpus and the
/// non-GC poised corpus.
pub fn invariant_suite(seed: u64, count: usize) -> SuiteSummary {
    let mut s = SuiteSummary::new("invariants");
    let mut rng = SplitMix64::new(seed ^ 0xA11CE);
    let entries = gc_corpus(seed, count)
        .into_iter()
        .chain(non_gc_corpus(seed));
    for entry in entries {
        let problems = match GcAnalysis::new(&entry.nodes) {
            Err(e) => vec![e.to_string()],
            Ok(a) => {
                let mut p = structural_failures(&a);
                p.extend(affine_equivariance_failures(
                    &a,
                    &Affine::random(&mut rng, 5),
                ));
                p
            }
        };
        s.record(|| entry.name.clone(), problems);
    }
    s
}

/// Runs a named suite. `degree` restricts the division suite to one degree.
pub fn run_suite(
    name: &str,
    seed: u64,
    count: usize,
    degree: Option<usize>,
) -> Option<SuiteSummary> {
    Some(match name {
        "bezout" => match degree {
            Some(n) => bezout_suite(seed, count, &[n]),
            None => bezout_suite(seed, count, &[2, 3, 4]),
        },
        "cayley-bacharach" => cayley_bacharach_suite(seed, count),
        "lemmas" => lemma_suite(seed, count),
        "invariants" => invariant_suite(seed, count),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        chung_yao_lattice, conic_set, general_position_lines, principal_lattice,
    };
    use crate::geometry::int;

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    #[test]
    fn bezout_examples() {
        let xy = Poly2::monomial(2, 1, 1, int(1)).unwrap();
        let pts = [
            Point::from_ints(0, 0),
            Point::from_ints(0, 1),
            Point::from_ints(0, 2),
        ];
        let q = verify_bezout(&xy, &line(1, 0, 0), &pts).unwrap();
        assert_eq!(q, Some(Poly2::monomial(1, 0, 1, int(1)).unwrap()));

        let xy1 = &xy + &Poly2::constant(2, int(1));
        assert!(matches!(
            verify_bezout(&xy1, &line(1, 0, 0), &pts),
            Err(Error::PreconditionViolation(_))
        ));
        let off = [
            Point::from_ints(0, 0),
            Point::from_ints(0, 1),
            Point::from_ints(1, 2),
        ];
        assert!(verify_bezout(&xy, &line(1, 0, 0), &off).is_err());
        let repeated = [
            Point::from_ints(0, 0),
            Point::from_ints(0, 1),
            Point::from_ints(0, 1),
        ];
        assert!(verify_bezout(&xy, &line(1, 0, 0), &repeated).is_err());
    }

    #[test]
    fn interpolated_cubic_on_horizontal_line() {
        let mut rng = SplitMix64::new(99);
        let y1 = line(0, 1, -1);
        let nodes = random_berzolari_radon_from(&mut rng, 3, 5, Some(&y1));
        let data = (0..10)
            .map(|i| if i < 4 { int(0) } else { int(i) })
            .collect();
        let p = interpolate(&InterpolationProblem::new(nodes.clone(), data).unwrap()).unwrap();
        let q = verify_bezout(&p, &y1, &nodes.nodes()[..4])
            .unwrap()
            .unwrap();
        assert_eq!(q.times_line(&y1), p);
    }

    #[test]
    fn grid_configuration() {
        let xs = [line(1, 0, 0), line(1, 0, -1), line(1, 0, -2)];
        let ys = [line(0, 1, 0), line(0, 1, -1), line(0, 1, -2)];
        let config = CbConfiguration::new(xs, ys).unwrap();
        let out = verify_cayley_bacharach(&config);
        assert!(out.holds);
        assert_eq!(out.nullspace_dims, [2; 9]);
    }

    #[test]
    fn degenerate_configurations() {
        let xs = [line(1, 0, 0), line(1, 0, -1), line(1, 0, -2)];
        let shared = [line(1, 0, 0), line(0, 1, -1), line(0, 1, -2)];
        assert!(matches!(
            CbConfiguration::new(xs.clone(), shared),
            Err(Error::DegenerateConfiguration(_))
        ));
        // concurrent: all three of the second triple through (0, 0)
        let concurrent = [line(0, 1, 0), line(1, 1, 0), line(1, -1, 0)];
        assert!(CbConfiguration::new(xs, concurrent).is_err());
    }

    #[test]
    fn triangle_reports() {
        let a = GcAnalysis::new(&principal_lattice(1)).unwrap();
        let low = low_node_line_report(&a).unwrap();
        assert_eq!(low.lines.len(), 3);
        assert!(low.lines.iter().all(|l| l.users.len() == 1));
        assert!(low.violations.is_empty());
        assert!(four_node_line_report(&a).unwrap().lines.is_empty());
        assert_eq!(
            four_node_triple_report(&a),
            Err(Error::WrongDegree {
                expected: 4,
                found: 1
            })
        );
    }

    #[test]
    fn natural_lattice_reports() {
        let mut rng = SplitMix64::new(1);
        let nodes = chung_yao_lattice(&general_position_lines(&mut rng, 6, 10)).unwrap();
        let a = GcAnalysis::new(&nodes).unwrap();
        let low = low_node_line_report(&a).unwrap();
        assert!(low
            .lines
            .iter()
            .all(|l| l.node_count == 2 && l.users.is_empty()));
        assert!(low.violations.is_empty());
        assert!(!low.no_maximal_line);
        assert!(four_node_line_report(&a).unwrap().lines.is_empty());
        assert!(four_node_triple_report(&a).unwrap().lines.is_empty());
        assert!(natural_lattice_usage_problems(&a).is_empty());
    }

    #[test]
    fn principal_lattice_reports() {
        let a2 = GcAnalysis::new(&principal_lattice(2)).unwrap();
        let low = low_node_line_report(&a2).unwrap();
        assert!(low.violations.is_empty());
        // x = 0 is a maximal 3-node line with three users
        assert!(!low.over_bound.is_empty());

        let a4 = GcAnalysis::new(&principal_lattice(4)).unwrap();
        let r = four_node_triple_report(&a4).unwrap();
        assert!(!r.lines.is_empty());
        assert!(r.violations.is_empty());
    }

    #[test]
    fn reports_reject_non_gc() {
        let a = GcAnalysis::new(&conic_set()).unwrap();
        assert_eq!(low_node_line_report(&a), Err(Error::NotGc { node: 0 }));
        assert_eq!(four_node_line_report(&a), Err(Error::NotGc { node: 0 }));
    }

    #[test]
    fn structural_checks_hold_on_small_sets() {
        for nodes in [principal_lattice(3), conic_set()] {
            let a = GcAnalysis::new(&nodes).unwrap();
            assert!(
                structural_failures(&a).is_empty(),
                "{:?}",
                structural_failures(&a)
            );
        }
        let a = GcAnalysis::new(&principal_lattice(3)).unwrap();
        let mut rng = SplitMix64::new(4);
        assert!(affine_equivariance_failures(&a, &Affine::random(&mut rng, 4)).is_empty());
    }

    #[test]
    fn small_suites_pass() {
        assert!(run_suite("bezout", 1, 9, None).unwrap().all_passed());
        assert!(run_suite("cayley-bacharach", 1, 5, None)
            .unwrap()
            .all_passed());
        assert!(run_suite("xyz", 1, 5, None).is_none());
    }
}
