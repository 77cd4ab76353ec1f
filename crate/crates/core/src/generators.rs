//! Known poised and GC_n families, affine maps, and a seeded randomized
//! search for GC sets without a maximal line.

use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gc::{check_points, Verdict};
use crate::geometry::{checked_div, int, Line, NodeSet, Point, Scalar};
use crate::poly::dimension;
use crate::rng::SplitMix64;

/// `{(i, j) : i + j <= n}`, rows of increasing `j`.
pub fn principal_lattice(n: usize) -> NodeSet {
    let n = n as i64;
    let pts = (0..=n)
        .flat_map(|j| (0..=n - j).map(move |i| Point::from_ints(i, j)))
        .collect();
    NodeSet::new(pts, n as usize).expect("lattice points are distinct")
}

/// Pairwise intersections of `n + 2` lines in general position, ordered by
/// line index pairs `(i, j)`, `i < j`. The node on lines `i` and `j` has as
/// fundamental polynomial the normalized product of the other `n` lines.
pub fn chung_yao_lattice(lines: &[Line]) -> Result<NodeSet> {
    if lines.len() < 2 {
        return Err(Error::DegenerateArrangement(format!(
            "need at least 2 lines, got {}",
            lines.len()
        )));
    }
    let mut nodes = Vec::new();
    for i in 0..lines.len() {
        for j in (i + 1)..lines.len() {
            let p = lines[i].intersection(&lines[j]).ok_or_else(|| {
                Error::DegenerateArrangement(format!("lines {i} and {j} are parallel"))
            })?;
            if let Some(k) = (0..lines.len()).find(|&k| k != i && k != j && lines[k].contains(&p)) {
                return Err(Error::DegenerateArrangement(format!(
                    "lines {i}, {j} and {k} are concurrent"
                )));
            }
            nodes.push(p);
        }
    }
    NodeSet::new(nodes, lines.len() - 2)
}

/// `count` random lines, no two parallel and no three concurrent.
pub fn general_position_lines(rng: &mut SplitMix64, count: usize, bound: u32) -> Vec<Line> {
    let r = i64::from(bound.max(3));
    let mut lines: Vec<Line> = Vec::with_capacity(count);
    let mut crossings: Vec<Point> = Vec::new();
    while lines.len() < count {
        let (a, b) = (rng.range_i64(-r, r), rng.range_i64(-r, r));
        let Ok(l) = Line::new(a, b, rng.range_i64(-r, r)) else {
            continue;
        };
        if lines.iter().any(|m| m.is_parallel(&l)) || crossings.iter().any(|p| l.contains(p)) {
            continue;
        }
        crossings.extend(lines.iter().filter_map(|m| m.intersection(&l)));
        lines.push(l);
    }
    lines
}

/// Checks a Berzolari–Radon construction: batch `k` holds `n + 1 - k`
/// distinct points on `lines[k]`, all off `lines[0..k]`.
pub fn berzolari_radon(n: usize, lines: &[Line], batches: &[Vec<Point>]) -> Result<NodeSet> {
    if lines.len() != n + 1 || batches.len() != n + 1 {
        return Err(Error::BatchViolation(format!(
            "need {} lines and batches, got {} and {}",
            n + 1,
            lines.len(),
            batches.len()
        )));
    }
    let mut nodes = Vec::with_capacity(dimension(n));
    for (k, (line, batch)) in lines.iter().zip(batches).enumerate() {
        if batch.len() != n + 1 - k {
            return Err(Error::BatchViolation(format!(
                "batch {k} has {} points, expected {}",
                batch.len(),
                n + 1 - k
            )));
        }
        for p in batch {
            if !line.contains(p) {
                return Err(Error::BatchViolation(format!(
                    "{p} is not on line {k} ({line})"
                )));
            }
            if let Some(e) = lines[..k].iter().position(|m| m.contains(p)) {
                return Err(Error::BatchViolation(format!(
                    "{p} of batch {k} lies on earlier line {e}"
                )));
            }
            nodes.push(p.clone());
        }
    }
    NodeSet::new(nodes, n).map_err(|e| Error::BatchViolation(e.to_string()))
}

/// Random lines, random points on them: always poised.
pub fn random_berzolari_radon(rng: &mut SplitMix64, n: usize, bound: u32) -> NodeSet {
    random_berzolari_radon_from(rng, n, bound, None)
}

/// As [`random_berzolari_radon`], with the first batch on `first` when given.
pub fn random_berzolari_radon_from(
    rng: &mut SplitMix64,
    n: usize,
    bound: u32,
    first: Option<&Line>,
) -> NodeSet {
    let r = i64::from(bound.max(2));
    let mut lines: Vec<Line> = Vec::with_capacity(n + 1);
    let mut batches = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let line = match first {
            Some(l) if k == 0 => l.clone(),
            _ => loop {
                let (a, b) = (rng.range_i64(-r, r), rng.range_i64(-r, r));
                if let Ok(l) = Line::new(a, b, rng.range_i64(-r, r)) {
                    if !lines.contains(&l) {
                        break l;
                    }
                }
            },
        };
        let mut batch: Vec<Point> = Vec::with_capacity(n + 1 - k);
        while batch.len() < n + 1 - k {
            let p = line.point_at(&rng.rational(bound.max(2)));
            if !batch.contains(&p) && !lines.iter().any(|m| m.contains(&p)) {
                batch.push(p);
            }
        }
        lines.push(line);
        batches.push(batch);
    }
    berzolari_radon(n, &lines, &batches).expect("construction satisfies the batch rules")
}

pub fn random_points(rng: &mut SplitMix64, count: usize, bound: u32) -> Vec<Point> {
    (0..count)
        .map(|_| Point::new(rng.rational(bound), rng.rational(bound)))
        .collect()
}

/// Invertible affine map `p -> M p + t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Affine {
    m: [[Scalar; 2]; 2],
    t: [Scalar; 2],
    inv: [[Scalar; 2]; 2],
}

impl Affine {
    pub fn new(m: [[Scalar; 2]; 2], t: [Scalar; 2]) -> Result<Self> {
        let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
        if det.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let d = |s: &Scalar| checked_div(s, &det).expect("det != 0");
        let inv = [[d(&m[1][1]), d(&-&m[0][1])], [d(&-&m[1][0]), d(&m[0][0])]];
        Ok(Affine { m, t, inv })
    }

    pub fn identity() -> Self {
        let (o, z) = (Scalar::one(), Scalar::zero());
        Affine::new([[o.clone(), z.clone()], [z.clone(), o]], [z.clone(), z]).expect("det = 1")
    }

    pub fn random(rng: &mut SplitMix64, bound: u32) -> Self {
        loop {
            let m = [
                [rng.rational(bound), rng.rational(bound)],
                [rng.rational(bound), rng.rational(bound)],
            ];
            if let Ok(a) = Affine::new(m, [rng.rational(bound), rng.rational(bound)]) {
                return a;
            }
        }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t[0],
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t[1],
        )
    }

    /// Image of a line: `l'(q) = l(M^{-1}(q - t))`.
    pub fn apply_line(&self, line: &Line) -> Line {
        let (a, b, c) = line.scalars();
        let a2 = &a * &self.inv[0][0] + &b * &self.inv[1][0];
        let b2 = &a * &self.inv[0][1] + &b * &self.inv[1][1];
        let c2 = c - &a2 * &self.t[0] - &b2 * &self.t[1];
        Line::from_scalars(&a2, &b2, &c2).expect("invertible maps send lines to lines")
    }

    pub fn apply_nodes(&self, nodes: &NodeSet) -> NodeSet {
        NodeSet::new(
            nodes.nodes().iter().map(|p| self.apply(p)).collect(),
            nodes.degree(),
        )
        .expect("invertible maps keep points distinct")
    }
}

pub fn affine_transform(nodes: &NodeSet, m: [[Scalar; 2]; 2], t: [Scalar; 2]) -> Result<NodeSet> {
    Ok(Affine::new(m, t)?.apply_nodes(nodes))
}

/// Candidate families for the randomized search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Random,
    PerturbedLattice,
    LineArrangement,
}

impl Family {
    pub const ALL: [Family; 3] = [
        Family::Random,
        Family::PerturbedLattice,
        Family::LineArrangement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Random => "random",
            Family::PerturbedLattice => "perturbed-lattice",
            Family::LineArrangement => "line-arrangement",
        }
    }

    pub fn from_name(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    pub trials: u64,
    pub degree: usize,
    pub coordinate_bound: u32,
    /// Weights for [`Family::ALL`], in order.
    pub family_mix: [u32; 3],
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            trials: 1000,
            degree: 4,
            coordinate_bound: 10,
            family_mix: [1, 1, 1],
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.coordinate_bound == 0 {
            return Err(Error::InvalidConfig(
                "coordinate bound must be at least 1".into(),
            ));
        }
        if self.degree == 0 {
            return Err(Error::InvalidConfig("degree must be at least 1".into()));
        }
        if self.family_mix.iter().all(|&w| w == 0) {
            return Err(Error::InvalidConfig("family weights are all zero".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub generated: u64,
    pub non_poised: u64,
    pub poised_non_gc: u64,
    pub gc_with_maximal_line: u64,
    pub counterexamples: u64,
}

impl Tally {
    fn record(&mut self, verdict: &Verdict) {
        self.generated += 1;
        match verdict {
            Verdict::NotPoised => self.non_poised += 1,
            Verdict::NotGc { .. } => self.poised_non_gc += 1,
            Verdict::ConfirmedMaximalLine(_) => self.gc_with_maximal_line += 1,
            Verdict::Counterexample => self.counterexamples += 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: u64,
    pub family: Family,
    pub nodes: Vec<Point>,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub totals: Tally,
    /// Indexed like [`Family::ALL`].
    pub per_family: [Tally; 3],
    pub counterexamples: Vec<Counterexample>,
    /// Wall-clock time; not part of equality.
    pub elapsed: Duration,
}

impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.totals == other.totals
            && self.per_family == other.per_family
            && self.counterexamples == other.counterexamples
    }
}

/// One candidate set of the search, drawn from the stream of trial `trial`.
pub fn search_candidate(config: &SearchConfig, trial: u64) -> (Family, Vec<Point>) {
    let mut rng = SplitMix64::for_task(config.seed, trial);
    let family = Family::ALL[rng.weighted(&config.family_mix)];
    let n = config.degree;
    let bound = config.coordinate_bound;
    let points = match family {
        Family::Random => random_points(&mut rng, dimension(n), bound),
        Family::LineArrangement => {
            let lines = general_position_lines(&mut rng, n + 2, bound);
            chung_yao_lattice(&lines)
                .expect("general position lines")
                .into_nodes()
        }
        Family::PerturbedLattice => perturbed_lattice(&mut rng, n, bound),
    };
    (family, points)
}

/// A GC family member with one or two nodes nudged by small offsets.
fn perturbed_lattice(rng: &mut SplitMix64, n: usize, bound: u32) -> Vec<Point> {
    let base = if rng.below(2) == 0 {
        Affine::random(rng, bound).apply_nodes(&principal_lattice(n))
    } else {
        chung_yao_lattice(&general_position_lines(rng, n + 2, bound)).expect("general position")
    };
    let mut pts = base.into_nodes();
    let moves = 1 + rng.below(2) as usize;
    let scale = int(i64::from(bound.max(1)));
    let mut moved: Vec<usize> = Vec::new();
    while moved.len() < moves.min(pts.len()) {
        let k = rng.below(pts.len() as u64) as usize;
        if moved.contains(&k) {
            continue;
        }
        let (dx, dy) = loop {
            let d = (rng.rational(bound) / &scale, rng.rational(bound) / &scale);
            if !(d.0.is_zero() && d.1.is_zero()) {
                break d;
            }
        };
        pts[k] = Point::new(&pts[k].x + dx, &pts[k].y + dy);
        moved.push(k);
    }
    pts
}

pub fn counterexample_search(config: &SearchConfig) -> Result<SearchReport> {
    config.validate()?;
    let start = Instant::now();
    let outcomes: Vec<(Family, Verdict, Vec<Point>)> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let (family, points) = search_candidate(config, trial);
            let verdict = check_points(points.clone(), config.degree);
            let keep = if verdict.is_counterexample() {
                points
            } else {
                Vec::new()
            };
            (family, verdict, keep)
        })
        .collect();
    let mut totals = Tally::default();
    let mut per_family = [Tally::default(); 3];
    let mut counterexamples = Vec::new();
    for (trial, (family, verdict, points)) in outcomes.into_iter().enumerate() {
        totals.record(&verdict);
        let slot = Family::ALL
            .iter()
            .position(|&f| f == family)
            .expect("known family");
        per_family[slot].record(&verdict);
        if verdict.is_counterexample() {
            counterexamples.push(Counterexample {
                trial: trial as u64,
                family,
                nodes: points,
            });
        }
    }
    Ok(SearchReport {
        config: config.clone(),
        totals,
        per_family,
        counterexamples,
        elapsed: start.elapsed(),
    })
}

/// Runs the search on a dedicated pool of `jobs` threads. The report does not
/// depend on `jobs`.
pub fn counterexample_search_with_jobs(config: &SearchConfig, jobs: usize) -> Result<SearchReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    pool.install(|| counterexample_search(config))
}

/// A named node set of the reference corpus.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub nodes: NodeSet,
}

/// Known GC sets: principal lattices for `n = 1..=4`, seeded natural
/// lattices (`arrangements` of them for `n = 4`, three for each smaller
/// degree) and affine images of both families.
pub fn gc_corpus(seed: u64, arrangements: usize) -> Vec<CorpusEntry> {
    let mut out = Vec::new();
    let mut rng = SplitMix64::new(seed);
    for n in 1..=4 {
        out.push(CorpusEntry {
            name: format!("principal-n{n}"),
            nodes: principal_lattice(n),
        });
        let count = if n == 4 { arrangements } else { 3 };
        for k in 0..count {
            let lines = general_position_lines(&mut rng, n + 2, 10);
            out.push(CorpusEntry {
                name: format!("chung-yao-n{n}-{k}"),
                nodes: chung_yao_lattice(&lines).expect("general position"),
            });
        }
    }
    let shear = Affine::new([[int(1), int(1)], [int(0), int(1)]], [int(0), int(0)])
        .expect("shear is invertible");
    let images: Vec<CorpusEntry> = out
        .iter()
        .filter(|e| e.nodes.degree() == 4)
        .take(3)
        .flat_map(|e| {
            let random = Affine::random(&mut rng, 6);
            [
                CorpusEntry {
                    name: format!("{}-shear", e.name),
                    nodes: shear.apply_nodes(&e.nodes),
                },
                CorpusEntry {
                    name: format!("{}-affine", e.name),
                    nodes: random.apply_nodes(&e.nodes),
                },
            ]
        })
        .collect();
    out.extend(images);
    out
}

/// Poised sets that are not GC: one Berzolari–Radon set per degree `2..=4`
/// and six nodes with five on the unit circle.
pub fn non_gc_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut rng = SplitMix64::new(seed ^ 0x5EED);
    let mut out: Vec<CorpusEntry> = (2..=4)
        .map(|n| CorpusEntry {
            name: format!("berzolari-radon-n{n}"),
            nodes: random_berzolari_radon(&mut rng, n, 7),
        })
        .collect();
    out.push(CorpusEntry {
        name: "conic-n2".into(),
        nodes: conic_set(),
    });
    out
}

/// `(0, 0)` plus five points of `x^2 + y^2 = 1`; poised, and the
/// fundamental polynomial of the origin is the irreducible `1 - x^2 - y^2`.
pub fn conic_set() -> NodeSet {
    use crate::geometry::rat;
    NodeSet::new(
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
    .expect("distinct points")
}
