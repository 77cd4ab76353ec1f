//! Deterministic JSON reports. Field order is fixed by the struct
//! definitions; lines appear in canonical order; rationals are strings.

use serde::Serialize;

use crate::gc::{GcAnalysis, Verdict};
use crate::generators::{Family, SearchReport, Tally};
use crate::geometry::{Line, NodeSet, Point};
use crate::interpolation::is_poised;
use crate::verifiers::{
    four_node_line_report, four_node_triple_report, low_node_line_report, LemmaReport,
};
use crate::Result;

#[derive(Serialize)]
pub struct LineJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub equation: String,
}

impl From<&Line> for LineJson {
    fn from(l: &Line) -> Self {
        LineJson {
            a: l.a().to_string(),
            b: l.b().to_string(),
            c: l.c().to_string(),
            equation: l.to_string(),
        }
    }
}

fn lines_json(lines: &[Line]) -> Vec<LineJson> {
    lines.iter().map(LineJson::from).collect()
}

pub fn point_json(p: &Point) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

#[derive(Serialize)]
pub struct CensusJson {
    pub line: LineJson,
    pub count: usize,
    pub nodes: Vec<usize>,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub node: usize,
    pub splits: bool,
    pub scale: Option<String>,
    pub factors: Vec<LineJson>,
    /// Nodes other than the owner on each factor, descending.
    pub profile: Vec<usize>,
}

#[derive(Serialize)]
pub struct UsageJson {
    pub line: LineJson,
    pub node_count: usize,
    pub users: Vec<usize>,
}

#[derive(Serialize)]
pub struct LemmaLineJson {
    pub line: LineJson,
    pub node_count: usize,
    pub users: Vec<usize>,
    pub shared_lines: Vec<LineJson>,
}

#[derive(Serialize)]
pub struct LemmaJson {
    pub kind: &'static str,
    pub no_maximal_line: bool,
    pub lines: Vec<LemmaLineJson>,
    pub over_bound: Vec<LineJson>,
    pub violations: Vec<LineJson>,
}

impl From<&LemmaReport> for LemmaJson {
    fn from(r: &LemmaReport) -> Self {
        LemmaJson {
            kind: r.kind.name(),
            no_maximal_line: r.no_maximal_line,
            lines: r
                .lines
                .iter()
                .map(|u| LemmaLineJson {
                    line: (&u.line).into(),
                    node_count: u.node_count,
                    users: u.users.clone(),
                    shared_lines: lines_json(&u.shared_lines),
                })
                .collect(),
            over_bound: lines_json(&r.over_bound),
            violations: lines_json(&r.violations),
        }
    }
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub kind: &'static str,
    pub first_non_gc_node: Option<usize>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson {
            kind: v.label(),
            first_non_gc_node: match v {
                Verdict::NotGc { node } => Some(*node),
                _ => None,
            },
        }
    }
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub degree: usize,
    pub node_count: usize,
    pub nodes: Vec<[String; 2]>,
    pub poised: bool,
    pub gc: bool,
    pub verdict: VerdictJson,
    pub maximal_lines: Vec<LineJson>,
    pub line_census: Vec<CensusJson>,
    pub witnesses: Vec<WitnessJson>,
    pub usage_census: Vec<UsageJson>,
    pub lemma_reports: Vec<LemmaJson>,
    #[serde(skip)]
    pub counterexample: bool,
}

/// Runs the whole pipeline. Fails only on wrong cardinality; a singular set
/// produces a report with the `NotPoised` verdict.
pub fn analyze(nodes: &NodeSet) -> Result<AnalysisReport> {
    nodes.require_poised_cardinality()?;
    let census = crate::gc::LineCensus::of(nodes);
    let line_census = census
        .entries()
        .iter()
        .map(|e| CensusJson {
            line: (&e.line).into(),
            count: e.count(),
            nodes: e.nodes.clone(),
        })
        .collect();
    let maximal: Vec<Line> = crate::gc::maximal_lines(nodes);
    let mut report = AnalysisReport {
        degree: nodes.degree(),
        node_count: nodes.len(),
        nodes: nodes.nodes().iter().map(point_json).collect(),
        poised: is_poised(nodes)?,
        gc: false,
        verdict: (&Verdict::NotPoised).into(),
        maximal_lines: lines_json(&maximal),
        line_census,
        witnesses: Vec::new(),
        usage_census: Vec::new(),
        lemma_reports: Vec::new(),
        counterexample: false,
    };
    if !report.poised {
        return Ok(report);
    }
    let analysis = GcAnalysis::new(nodes)?;
    let verdict = analysis.verdict();
    report.gc = analysis.is_gc();
    report.verdict = (&verdict).into();
    report.counterexample = verdict.is_counterexample();
    report.witnesses = analysis
        .witnesses()
        .iter()
        .enumerate()
        .map(|(node, w)| match w {
            Some(w) => WitnessJson {
                node,
                splits: true,
                scale: Some(w.scale.to_string()),
                factors: lines_json(&w.factors),
                profile: w.profile(nodes),
            },
            None => WitnessJson {
                node,
                splits: false,
                scale: None,
                factors: Vec::new(),
                profile: Vec::new(),
            },
        })
        .collect();
    if report.gc {
        report.usage_census = analysis
            .usage()?
            .iter()
            .map(|u| UsageJson {
                line: (&u.line).into(),
                node_count: analysis.census().count(&u.line),
                users: u.users.clone(),
            })
            .collect();
        report
            .lemma_reports
            .push((&low_node_line_report(&analysis)?).into());
        report
            .lemma_reports
            .push((&four_node_line_report(&analysis)?).into());
        if nodes.degree() == 4 {
            report
                .lemma_reports
                .push((&four_node_triple_report(&analysis)?).into());
        }
    }
    Ok(report)
}

#[derive(Serialize)]
pub struct TallyJson {
    pub generated: u64,
    pub non_poised: u64,
    pub poised_non_gc: u64,
    pub gc_with_maximal_line: u64,
    pub counterexamples: u64,
}

impl From<&Tally> for TallyJson {
    fn from(t: &Tally) -> Self {
        TallyJson {
            generated: t.generated,
            non_poised: t.non_poised,
            poised_non_gc: t.poised_non_gc,
            gc_with_maximal_line: t.gc_with_maximal_line,
            counterexamples: t.counterexamples,
        }
    }
}

#[derive(Serialize)]
pub struct FamilyJson {
    pub family: &'static str,
    pub weight: u32,
    pub tally: TallyJson,
}

#[derive(Serialize)]
pub struct CounterexampleJson {
    pub trial: u64,
    pub family: &'static str,
    pub degree: usize,
    pub nodes: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct SearchJson {
    pub seed: u64,
    pub trials: u64,
    pub degree: usize,
    pub coordinate_bound: u32,
    pub totals: TallyJson,
    pub families: Vec<FamilyJson>,
    pub counterexample_sets: Vec<CounterexampleJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

pub fn search_json(report: &SearchReport, with_timing: bool) -> SearchJson {
    let cfg = &report.config;
    SearchJson {
        seed: cfg.seed,
        trials: cfg.trials,
        degree: cfg.degree,
        coordinate_bound: cfg.coordinate_bound,
        totals: (&report.totals).into(),
        families: Family::ALL
            .iter()
            .zip(cfg.family_mix)
            .zip(&report.per_family)
            .map(|((f, weight), t)| FamilyJson {
                family: f.name(),
                weight,
                tally: t.into(),
            })
            .collect(),
        counterexample_sets: report
            .counterexamples
            .iter()
            .map(|c| CounterexampleJson {
                trial: c.trial,
                family: c.family.name(),
                degree: cfg.degree,
                nodes: c.nodes.iter().map(point_json).collect(),
            })
            .collect(),
        elapsed_seconds: with_timing.then_some(report.elapsed.as_secs_f64()),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}
