//! GC_n detection, the "uses" relation between nodes and lines, and the
//! line and usage censuses of a node set.
//!
//! A poised set is GC_n when every fundamental polynomial splits into `n`
//! linear factors. A line used by a node passes through at least two nodes
//! of the set, so factor candidates are drawn from the finite list of lines
//! spanned by node pairs and found by exact trial division.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geometry::{Line, NodeSet, Point, Scalar};
use crate::interpolation::{
    fundamental_polynomial, fundamental_polynomials, is_poised, FundamentalPoly,
};
use crate::poly::Poly2;

/// A line through at least two nodes together with every node on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub line: Line,
    /// Sorted node indices.
    pub nodes: Vec<usize>,
}

impl CensusEntry {
    pub fn count(&self) -> usize {
        self.nodes.len()
    }
}

/// All distinct node-pair lines, sorted by canonical `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineCensus {
    entries: Vec<CensusEntry>,
}

impl LineCensus {
    pub fn of(nodes: &NodeSet) -> Self {
        let pts = nodes.nodes();
        let mut map: BTreeMap<Line, BTreeSet<usize>> = BTreeMap::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let line = Line::through(&pts[i], &pts[j]).expect("node sets hold distinct points");
                let set = map.entry(line).or_default();
                set.insert(i);
                set.insert(j);
            }
        }
        LineCensus {
            entries: map
                .into_iter()
                .map(|(line, nodes)| CensusEntry {
                    line,
                    nodes: nodes.into_iter().collect(),
                })
                .collect(),
        }
    }

    pub fn entries(&self) -> &[CensusEntry] {
        &self.entries
    }

    pub fn get(&self, line: &Line) -> Option<&CensusEntry> {
        self.entries
            .binary_search_by(|e| e.line.cmp(line))
            .ok()
            .map(|k| &self.entries[k])
    }

    /// Number of nodes on `line` (0 or 1 for lines not in the census is
    /// reported as 0; the census only knows lines through two or more nodes).
    pub fn count(&self, line: &Line) -> usize {
        self.get(line).map_or(0, CensusEntry::count)
    }

    /// Entries through exactly `k` nodes.
    pub fn with_count(&self, k: usize) -> impl Iterator<Item = &CensusEntry> {
        self.entries.iter().filter(move |e| e.count() == k)
    }

    /// `Σ C(k, 2)` over entries; equals `C(|nodes|, 2)` for a complete census.
    pub fn covered_pairs(&self) -> usize {
        self.entries
            .iter()
            .map(|e| e.count() * (e.count() - 1) / 2)
            .sum()
    }
}

pub fn candidate_lines(nodes: &NodeSet) -> LineCensus {
    LineCensus::of(nodes)
}

/// Lines through at least `n + 1` nodes.
pub fn maximal_lines(nodes: &NodeSet) -> Vec<Line> {
    maximal_lines_in(&LineCensus::of(nodes), nodes.degree())
}

fn maximal_lines_in(census: &LineCensus, degree: usize) -> Vec<Line> {
    census
        .entries()
        .iter()
        .filter(|e| e.count() > degree)
        .map(|e| e.line.clone())
        .collect()
}

/// True iff `line` divides the fundamental polynomial of node `a`.
pub fn uses(nodes: &NodeSet, a: usize, line: &Line) -> Result<bool> {
    Ok(fundamental_polynomial(nodes, a)?
        .poly
        .divide_by_line(line)
        .is_some())
}

/// `scale * Π factors` is the fundamental polynomial of `owner`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationWitness {
    pub owner: usize,
    /// In the order found, which is canonical line order.
    pub factors: Vec<Line>,
    pub scale: Scalar,
}

impl FactorizationWitness {
    pub fn product(&self) -> Poly2 {
        self.factors
            .iter()
            .fold(Poly2::constant(0, self.scale.clone()), |acc, l| {
                acc.times_line(l)
            })
    }

    pub fn contains(&self, line: &Line) -> bool {
        self.factors.contains(line)
    }

    /// Node counts on each factor line over the nodes other than the owner,
    /// sorted descending. Shared nodes are counted on every line through them.
    pub fn profile(&self, nodes: &NodeSet) -> Vec<usize> {
        let mut counts: Vec<usize> = self
            .factors
            .iter()
            .map(|l| {
                nodes
                    .incident_indices(l)
                    .into_iter()
                    .filter(|&i| i != self.owner)
                    .count()
            })
            .collect();
        counts.sort_unstable_by(|a, b| b.cmp(a));
        counts
    }

    /// For each factor, the nodes on it that lie on no other factor.
    pub fn private_nodes(&self, nodes: &NodeSet) -> Vec<Vec<usize>> {
        self.factors
            .iter()
            .enumerate()
            .map(|(k, l)| {
                nodes
                    .incident_indices(l)
                    .into_iter()
                    .filter(|&i| {
                        let p = &nodes.nodes()[i];
                        self.factors
                            .iter()
                            .enumerate()
                            .all(|(m, other)| m == k || !other.contains(p))
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks the witness invariants against the fundamental polynomial.
    pub fn validate(
        &self,
        nodes: &NodeSet,
        fundamental: &Poly2,
    ) -> std::result::Result<(), String> {
        let n = nodes.degree();
        if self.factors.len() != n {
            return Err(format!("{} factors for degree {n}", self.factors.len()));
        }
        let product = self.product();
        if &product != fundamental {
            return Err("scaled product differs from the fundamental polynomial".into());
        }
        let owner = &nodes.nodes()[self.owner];
        if let Some(l) = self.factors.iter().find(|l| l.contains(owner)) {
            return Err(format!("factor {l} passes through the owner"));
        }
        for (i, p) in nodes.nodes().iter().enumerate() {
            if i != self.owner && !self.factors.iter().any(|l| l.contains(p)) {
                return Err(format!("node {i} lies on no factor"));
            }
        }
        Ok(())
    }
}

/// Splits `p` (the fundamental polynomial of `owner`) by trial division over
/// census lines avoiding the owner, in canonical order, allowing repeats.
pub fn split_into_lines(
    p: &Poly2,
    owner: usize,
    owner_point: &Point,
    census: &LineCensus,
) -> Option<FactorizationWitness> {
    let mut rest = p.clone();
    let mut factors = Vec::new();
    for entry in census.entries() {
        if rest.bound() == 0 {
            break;
        }
        if entry.line.contains(owner_point) {
            continue;
        }
        while rest.bound() > 0 {
            match rest.divide_by_line(&entry.line) {
                Some(q) => {
                    factors.push(entry.line.clone());
                    rest = q;
                }
                None => break,
            }
        }
    }
    if rest.bound() != 0 {
        return None;
    }
    Some(FactorizationWitness {
        owner,
        factors,
        scale: rest.coeffs()[0].clone(),
    })
}

/// Linear factorization of `p_A^*`, or `None` when it does not split.
pub fn gc_witness(nodes: &NodeSet, a: usize) -> Result<Option<FactorizationWitness>> {
    let fp = fundamental_polynomial(nodes, a)?;
    let census = LineCensus::of(nodes);
    Ok(split_into_lines(&fp.poly, a, &nodes.nodes()[a], &census))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GcStatus {
    Gc(Vec<FactorizationWitness>),
    /// The first node whose fundamental polynomial does not split.
    NotGc {
        node: usize,
    },
}

impl GcStatus {
    pub fn is_gc(&self) -> bool {
        matches!(self, GcStatus::Gc(_))
    }
}

/// Stops at the first node whose fundamental polynomial does not split.
pub fn is_gc_set(nodes: &NodeSet) -> Result<GcStatus> {
    nodes.require_poised_cardinality()?;
    let census = LineCensus::of(nodes);
    let mut fundamentals: Option<Vec<FundamentalPoly>> = None;
    let mut witnesses = Vec::with_capacity(nodes.len());
    for (a, point) in nodes.nodes().iter().enumerate() {
        if !can_cover_others(nodes, a, &census) {
            if fundamentals.is_none() && !is_poised(nodes)? {
                return Err(Error::NotPoised);
            }
            return Ok(GcStatus::NotGc { node: a });
        }
        if fundamentals.is_none() {
            fundamentals = Some(fundamental_polynomials(nodes)?);
        }
        let fp = &fundamentals.as_ref().expect("computed above")[a];
        match split_into_lines(&fp.poly, a, point, &census) {
            Some(w) => witnesses.push(w),
            None => return Ok(GcStatus::NotGc { node: a }),
        }
    }
    Ok(GcStatus::Gc(witnesses))
}

/// Necessary condition for `p_A^*` to split over census lines: `n` lines
/// missing `A` must be able to cover the other nodes.
fn can_cover_others(nodes: &NodeSet, a: usize, census: &LineCensus) -> bool {
    let mut counts: Vec<usize> = census
        .entries()
        .iter()
        .filter(|e| e.nodes.binary_search(&a).is_err())
        .map(|e| e.nodes.len())
        .collect();
    counts.sort_unstable_by(|x, y| y.cmp(x));
    counts.iter().take(nodes.degree()).sum::<usize>() >= nodes.len() - 1
}

/// A line and the nodes that use it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UsageRecord {
    pub line: Line,
    pub users: Vec<usize>,
}

fn usage_from(census: &LineCensus, witnesses: &[FactorizationWitness]) -> Vec<UsageRecord> {
    census
        .entries()
        .iter()
        .filter_map(|e| {
            let users: Vec<usize> = witnesses
                .iter()
                .filter(|w| w.contains(&e.line))
                .map(|w| w.owner)
                .collect();
            (!users.is_empty()).then(|| UsageRecord {
                line: e.line.clone(),
                users,
            })
        })
        .collect()
}

/// Used lines with their users, in canonical line order.
pub fn usage_census(nodes: &NodeSet) -> Result<Vec<UsageRecord>> {
    match is_gc_set(nodes)? {
        GcStatus::Gc(witnesses) => Ok(usage_from(&LineCensus::of(nodes), &witnesses)),
        GcStatus::NotGc { node } => Err(Error::NotGc { node }),
    }
}

pub fn used_line_profile(nodes: &NodeSet, a: usize) -> Result<Vec<usize>> {
    gc_witness(nodes, a)?
        .map(|w| w.profile(nodes))
        .ok_or(Error::NotGc { node: a })
}

/// Everything computed about a poised node set, kept together so reports
/// and checks do not redo the elimination.
#[derive(Clone, Debug)]
pub struct GcAnalysis {
    nodes: NodeSet,
    fundamentals: Vec<FundamentalPoly>,
    census: LineCensus,
    witnesses: Vec<Option<FactorizationWitness>>,
}

impl GcAnalysis {
    /// Fails with [`Error::NotPoised`] or [`Error::WrongCardinality`].
    pub fn new(nodes: &NodeSet) -> Result<Self> {
        let fundamentals = fundamental_polynomials(nodes)?;
        let census = LineCensus::of(nodes);
        let witnesses = fundamentals
            .iter()
            .map(|fp| split_into_lines(&fp.poly, fp.owner, &nodes.nodes()[fp.owner], &census))
            .collect();
        Ok(GcAnalysis {
            nodes: nodes.clone(),
            fundamentals,
            census,
            witnesses,
        })
    }

    pub fn nodes(&self) -> &NodeSet {
        &self.nodes
    }

    pub fn fundamentals(&self) -> &[FundamentalPoly] {
        &self.fundamentals
    }

    pub fn census(&self) -> &LineCensus {
        &self.census
    }

    pub fn witnesses(&self) -> &[Option<FactorizationWitness>] {
        &self.witnesses
    }

    pub fn is_gc(&self) -> bool {
        self.witnesses.iter().all(Option::is_some)
    }

    pub fn first_failure(&self) -> Option<usize> {
        self.witnesses.iter().position(Option::is_none)
    }

    /// All witnesses, or [`Error::NotGc`] naming the first failing node.
    pub fn gc_witnesses(&self) -> Result<Vec<&FactorizationWitness>> {
        self.witnesses
            .iter()
            .enumerate()
            .map(|(node, w)| w.as_ref().ok_or(Error::NotGc { node }))
            .collect()
    }

    pub fn usage(&self) -> Result<Vec<UsageRecord>> {
        let ws: Vec<FactorizationWitness> = self.gc_witnesses()?.into_iter().cloned().collect();
        Ok(usage_from(&self.census, &ws))
    }

    pub fn maximal_lines(&self) -> Vec<Line> {
        maximal_lines_in(&self.census, self.nodes.degree())
    }

    pub fn uses(&self, a: usize, line: &Line) -> Result<bool> {
        let fp = self.fundamentals.get(a).ok_or(Error::IndexOutOfRange {
            index: a,
            len: self.fundamentals.len(),
        })?;
        Ok(fp.poly.divide_by_line(line).is_some())
    }

    pub fn verdict(&self) -> Verdict {
        if let Some(node) = self.first_failure() {
            return Verdict::NotGc { node };
        }
        verdict_for(self.maximal_lines())
    }
}

/// Outcome of checking a node set for a maximal line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotPoised,
    NotGc {
        node: usize,
    },
    ConfirmedMaximalLine(Vec<Line>),
    /// A GC set without `n + 1` collinear nodes.
    Counterexample,
}

impl Verdict {
    pub fn is_counterexample(&self) -> bool {
        matches!(self, Verdict::Counterexample)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::NotPoised => "NotPoised",
            Verdict::NotGc { .. } => "NotGC",
            Verdict::ConfirmedMaximalLine(_) => "ConfirmedMaximalLine",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

fn verdict_for(maximal: Vec<Line>) -> Verdict {
    if maximal.is_empty() {
        Verdict::Counterexample
    } else {
        Verdict::ConfirmedMaximalLine(maximal)
    }
}

/// Classifies a node set: not poised, not GC, or GC with its maximal lines.
/// A GC set with no maximal line is reported as a counterexample.
pub fn check_maximal_line(nodes: &NodeSet) -> Verdict {
    match is_gc_set(nodes) {
        Err(_) => Verdict::NotPoised,
        Ok(GcStatus::NotGc { node }) => Verdict::NotGc { node },
        Ok(GcStatus::Gc(_)) => verdict_for(maximal_lines(nodes)),
    }
}

/// Like [`check_maximal_line`] for raw points; repeated points make the set
/// not poised.
pub fn check_points(points: Vec<Point>, degree: usize) -> Verdict {
    match NodeSet::new(points, degree) {
        Ok(nodes) => check_maximal_line(&nodes),
        Err(_) => Verdict::NotPoised,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{collinear, int, rat};
    use crate::poly::Poly2;

    fn triangle() -> NodeSet {
        NodeSet::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 0),
                Point::from_ints(0, 1),
            ],
            1,
        )
        .unwrap()
    }

    fn lattice(n: i64) -> NodeSet {
        let pts = (0..=n)
            .flat_map(|j| (0..=n - j).map(move |i| Point::from_ints(i, j)))
            .collect();
        NodeSet::new(pts, n as usize).unwrap()
    }

    fn line(a: i64, b: i64, c: i64) -> Line {
        Line::new(a, b, c).unwrap()
    }

    /// Pair-enumeration oracle: for every pair, the set of nodes collinear
    /// with it, using only the determinant predicate.
    fn collinear_classes(nodes: &NodeSet) -> BTreeSet<Vec<usize>> {
        let pts = nodes.nodes();
        let mut classes = BTreeSet::new();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let class: Vec<usize> = (0..pts.len())
                    .filter(|&k| collinear(&pts[i], &pts[j], &pts[k]))
                    .collect();
                classes.insert(class);
            }
        }
        classes
    }

    #[test]
    fn census_examples() {
        let t = LineCensus::of(&triangle());
        assert_eq!(t.entries().len(), 3);
        assert!(t.entries().iter().all(|e| e.count() == 2));

        let col = NodeSet::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(2, 2),
            ],
            1,
        )
        .unwrap();
        let c = LineCensus::of(&col);
        assert_eq!(c.entries().len(), 1);
        assert_eq!(c.entries()[0].nodes, vec![0, 1, 2]);

        let l2 = lattice(2);
        let census = LineCensus::of(&l2);
        let three: BTreeSet<Line> = census.with_count(3).map(|e| e.line.clone()).collect();
        let expected: BTreeSet<Line> = [line(1, 0, 0), line(0, 1, 0), line(1, 1, -2)]
            .into_iter()
            .collect();
        assert_eq!(three, expected);
        assert!(census
            .entries()
            .iter()
            .all(|e| e.count() == 2 || e.count() == 3));
        let from_census: BTreeSet<Vec<usize>> =
            census.entries().iter().map(|e| e.nodes.clone()).collect();
        assert_eq!(from_census, collinear_classes(&l2));
        assert_eq!(census.covered_pairs(), 15);
    }

    #[test]
    fn maximal_line_examples() {
        // every triangle edge carries n + 1 = 2 nodes
        assert_eq!(maximal_lines(&triangle()).len(), 3);
        assert_eq!(maximal_lines(&lattice(2)).len(), 3);
    }

    #[test]
    fn uses_examples() {
        let t = triangle();
        assert!(uses(&t, 0, &line(1, 1, -1)).unwrap());
        assert!(!uses(&t, 0, &line(0, 1, 0)).unwrap());
    }

    #[test]
    fn triangle_witness() {
        let t = triangle();
        let w = gc_witness(&t, 0).unwrap().unwrap();
        assert_eq!(w.factors, vec![line(1, 1, -1)]);
        assert_eq!(w.scale, int(-1));
        assert_eq!(used_line_profile(&t, 0).unwrap(), vec![2]);
        let usage = usage_census(&t).unwrap();
        assert_eq!(usage.len(), 3);
        for rec in &usage {
            assert_eq!(rec.users.len(), 1);
            assert!(!rec.line.contains(&t.nodes()[rec.users[0]]));
        }
    }

    #[test]
    fn lattice2_usage() {
        let l2 = lattice(2);
        let usage = usage_census(&l2).unwrap();
        let diag = usage.iter().find(|r| r.line == line(1, 1, -2)).unwrap();
        // nodes with i + j <= 1 are (0,0), (1,0), (0,1) at indices 0, 1, 3
        assert_eq!(diag.users, vec![0, 1, 3]);
    }

    #[test]
    fn conic_set_is_not_gc() {
        let nodes = NodeSet::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 0),
                Point::from_ints(0, 1),
                Point::from_ints(-1, 0),
                Point::from_ints(0, -1),
                Point::new(rat(3, 5), rat(4, 5)),
            ],
            2,
        )
        .unwrap();
        assert!(gc_witness(&nodes, 0).unwrap().is_none());
        assert_eq!(is_gc_set(&nodes).unwrap(), GcStatus::NotGc { node: 0 });
        assert_eq!(usage_census(&nodes), Err(Error::NotGc { node: 0 }));
        assert_eq!(used_line_profile(&nodes, 0), Err(Error::NotGc { node: 0 }));
        assert_eq!(check_maximal_line(&nodes), Verdict::NotGc { node: 0 });
        // p_A = 1 - x^2 - y^2
        let fp = fundamental_polynomial(&nodes, 0).unwrap().poly;
        let expected = &Poly2::constant(2, int(1))
            - &(&Poly2::monomial(2, 2, 0, int(1)).unwrap()
                + &Poly2::monomial(2, 0, 2, int(1)).unwrap());
        assert_eq!(fp, expected);
    }

    #[test]
    fn non_poised_and_duplicate_verdicts() {
        let col = NodeSet::new(
            vec![
                Point::from_ints(0, 0),
                Point::from_ints(1, 1),
                Point::from_ints(2, 2),
            ],
            1,
        )
        .unwrap();
        assert_eq!(check_maximal_line(&col), Verdict::NotPoised);
        let dup = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 0),
        ];
        assert_eq!(check_points(dup, 1), Verdict::NotPoised);
        assert!(matches!(GcAnalysis::new(&col), Err(Error::NotPoised)));
    }

    #[test]
    fn analysis_agrees_with_free_functions() {
        let l2 = lattice(2);
        let a = GcAnalysis::new(&l2).unwrap();
        assert!(a.is_gc());
        assert_eq!(a.usage().unwrap(), usage_census(&l2).unwrap());
        assert_eq!(a.maximal_lines(), maximal_lines(&l2));
        assert_eq!(a.verdict(), check_maximal_line(&l2));
        for (w, fp) in a.witnesses().iter().zip(a.fundamentals()) {
            w.as_ref().unwrap().validate(&l2, &fp.poly).unwrap();
        }
    }
}
