use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::instance::{Family, Instance};
use crate::colouring::{
    interval_um, interval_union_pairs, rect_subset_cf, subset_cf_from_t_um, t_um_colouring_traced,
    union_pairs_colouring, MetaStep,
};
use crate::colours::{SubsetColouring, VertexColouring};
use crate::error::{Error, Result};
use crate::exact::{exact_chi, exact_chi_subset_cf};
use crate::hypergraph::Hypergraph;
use crate::validate::{validate, validate_subset_cf, Notion, Verdict};
use crate::verify::{validate_interval_unions_fast, validate_intervals_fast, validate_rectangles_fast};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum Algorithm {
    /// Sum of a t-UM vertex colouring; any family.
    #[serde(rename = "t-um+sum")]
    #[value(name = "t-um+sum")]
    TUmSum,
    /// Pair colouring from a 2-UM colouring, checked on unions of two
    /// hyperedges.
    #[serde(rename = "union-pairs")]
    #[value(name = "union-pairs")]
    UnionPairs,
    /// Ruler pair colouring for unions of two intervals.
    #[serde(rename = "interval-union")]
    #[value(name = "interval-union")]
    IntervalUnion,
    /// t-subset colouring for rectangles.
    #[serde(rename = "rect-subset")]
    #[value(name = "rect-subset")]
    RectSubset,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::TUmSum => "t-um+sum",
            Algorithm::UnionPairs => "union-pairs",
            Algorithm::IntervalUnion => "interval-union",
            Algorithm::RectSubset => "rect-subset",
        }
    }

    pub fn default_for(family: Family) -> Algorithm {
        match family {
            Family::Intervals => Algorithm::IntervalUnion,
            Family::Rectangles => Algorithm::RectSubset,
            _ => Algorithm::TUmSum,
        }
    }
}

/// Largest union hypergraph built for the generic union check, counted in
/// pairs of hyperedges.
pub const UNION_PAIR_LIMIT: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundSummary {
    pub round: usize,
    pub active: usize,
    pub aux_colours: u32,
    pub removed: usize,
}

fn summarize(trace: &[MetaStep]) -> Vec<RoundSummary> {
    trace
        .iter()
        .enumerate()
        .map(|(i, step)| {
            let next = trace.get(i + 1).map_or(0, |s| s.active.len());
            RoundSummary {
                round: i + 1,
                active: step.active.len(),
                aux_colours: step.aux.iter().copied().max().unwrap_or(0),
                removed: step.active.len() - next,
            }
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: Instance,
    pub algorithm: Algorithm,
    pub t: usize,
    /// Colours of the underlying vertex colouring.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex_colours: Option<u32>,
    pub tokens: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edges_of_g: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g_colours: Option<usize>,
    pub validator: String,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<RoundSummary>>,
}

/// A colouring as written to disk: vertex colours, or one canonical token
/// string per t-subset.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ColouringFile {
    Vertex { colours: Vec<u32> },
    Subset { n: usize, t: usize, tokens: Vec<(Vec<u32>, String)> },
}

impl ColouringFile {
    pub fn from_subsets(sigma: &SubsetColouring) -> ColouringFile {
        ColouringFile::Subset {
            n: sigma.n(),
            t: sigma.t(),
            tokens: sigma.iter().map(|(s, tok)| (s, tok.to_string())).collect(),
        }
    }
}

pub struct ColourRun {
    pub report: RunReport,
    pub vertex: VertexColouring,
    pub colouring: SubsetColouring,
}

/// Checks a t-subset colouring with the fastest exact validator for the
/// family.
fn check_subsets(inst: &Instance, h: &Hypergraph, sigma: &SubsetColouring) -> Result<(Verdict, &'static str)> {
    match inst.family {
        Family::Intervals => Ok((validate_intervals_fast(sigma), "interval sweep")),
        Family::Rectangles => {
            let p = inst.point_set()?.expect("point family");
            Ok((validate_rectangles_fast(&p, sigma)?, "rectangle sweep"))
        }
        _ => Ok((validate_subset_cf(h, sigma)?, "all hyperedges")),
    }
}

fn need_family(alg: Algorithm, inst: &Instance, family: Family) -> Result<()> {
    if inst.family != family {
        return Err(Error::InvalidArgument(format!("{} needs a {:?} instance", alg.name(), family).to_lowercase()));
    }
    Ok(())
}

/// Runs `alg` on the instance and validates the result.
pub fn colour(inst: &Instance, alg: Algorithm, trace: bool, timing: bool) -> Result<ColourRun> {
    inst.check()?;
    let start = timing.then(Instant::now);
    let h = inst.hypergraph()?;
    let mut steps = None;
    let vertex: VertexColouring;
    let (mut edges_of_g, mut g_colours) = (None, None);
    let t = match alg {
        Algorithm::UnionPairs | Algorithm::IntervalUnion => 2,
        _ => inst.t,
    };
    let (sigma, (verdict, validator)) = match alg {
        Algorithm::TUmSum => {
            let (psi, tr) = t_um_colouring_traced(&h, t)?;
            let sigma = subset_cf_from_t_um(&psi, t)?;
            steps = Some(tr);
            vertex = psi;
            let checked = check_subsets(inst, &h, &sigma)?;
            (sigma, checked)
        }
        Algorithm::UnionPairs => {
            let (psi, tr) = t_um_colouring_traced(&h, 2)?;
            let sigma = union_pairs_colouring(&psi)?;
            steps = Some(tr);
            let checked = if inst.family == Family::Intervals {
                (validate_interval_unions_fast(psi.as_slice(), &sigma)?, "interval unions by top label")
            } else {
                (validate_subset_cf(&unions_of(&h)?, &sigma)?, "all unions")
            };
            vertex = psi;
            (sigma, checked)
        }
        Algorithm::IntervalUnion => {
            need_family(alg, inst, Family::Intervals)?;
            let sigma = interval_union_pairs(inst.n)?;
            let psi = interval_um(inst.n);
            let checked = (validate_interval_unions_fast(psi.as_slice(), &sigma)?, "interval unions by top label");
            vertex = psi;
            (sigma, checked)
        }
        Algorithm::RectSubset => {
            need_family(alg, inst, Family::Rectangles)?;
            let p = inst.point_set()?.expect("point family");
            let out = rect_subset_cf(&p, t)?;
            edges_of_g = Some(out.g_edges);
            g_colours = Some(out.g_colours);
            steps = Some(out.trace);
            vertex = out.vertex_colours;
            let verdict = validate_rectangles_fast(&p, &out.sigma)?;
            (out.sigma, (verdict, "rectangle sweep"))
        }
    };
    let millis = start.map(|s| s.elapsed().as_millis() as u64);
    let report = RunReport {
        instance: inst.clone(),
        algorithm: alg,
        t,
        vertex_colours: Some(vertex.max_colour()),
        tokens: sigma.tokens_used(),
        edges_of_g,
        g_colours,
        validator: validator.into(),
        valid: verdict.is_valid(),
        counterexample: verdict.counterexample().map(<[u32]>::to_vec),
        millis,
        trace: if trace { steps.as_deref().map(summarize) } else { None },
    };
    Ok(ColourRun { report, vertex, colouring: sigma })
}

/// Notions accepted by `exact` and `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum TargetNotion {
    Proper,
    Cf,
    Um,
    Colourful,
    StrongCf,
    TUm,
    SubsetCf,
}

impl TargetNotion {
    fn vertex_notion(self) -> Option<Notion> {
        Some(match self {
            TargetNotion::Proper => Notion::Proper,
            TargetNotion::Cf => Notion::Cf,
            TargetNotion::Um => Notion::Um,
            TargetNotion::Colourful => Notion::Colourful,
            TargetNotion::StrongCf => Notion::StrongCf,
            TargetNotion::TUm => Notion::TUm,
            TargetNotion::SubsetCf => return None,
        })
    }

    fn uses_t(self) -> bool {
        self.vertex_notion().is_none_or(Notion::is_parametric)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactReport {
    pub instance: Instance,
    pub notion: TargetNotion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub optimum: usize,
    pub witness: ColouringFile,
}

pub fn exact(inst: &Instance, notion: TargetNotion) -> Result<ExactReport> {
    inst.check()?;
    let h = inst.hypergraph()?;
    let t = notion.uses_t().then_some(inst.t);
    let (optimum, witness) = match notion.vertex_notion() {
        Some(v) => {
            let (k, c) = exact_chi(&h, v, t)?;
            (k, ColouringFile::Vertex { colours: c.into() })
        }
        None => {
            let (k, sigma) = exact_chi_subset_cf(&h, inst.t)?;
            (k, ColouringFile::from_subsets(&sigma))
        }
    };
    Ok(ExactReport { instance: inst.clone(), notion, t, optimum, witness })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub family: Family,
    pub n: usize,
    pub unions: bool,
    pub notion: TargetNotion,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<u32>>,
}

/// Unions of two hyperedges with at least three vertices.
fn unions_of(h: &Hypergraph) -> Result<Hypergraph> {
    let m = h.num_edges();
    if m * m / 2 > UNION_PAIR_LIMIT {
        return Err(Error::SizeLimit { what: format!("unions of {m} hyperedges"), limit: UNION_PAIR_LIMIT });
    }
    Ok(h.union_hypergraph().filter_edges(|e| e.len() >= 3))
}

/// Validates a stored colouring against an instance, or against the unions
/// of two of its hyperedges. Subset colourings are always checked for
/// t-subset CF; vertex colourings for `notion`.
pub fn verify(inst: &Instance, file: &ColouringFile, notion: TargetNotion, unions: bool) -> Result<VerifyReport> {
    inst.check()?;
    let h = if unions { unions_of(&inst.hypergraph()?)? } else { inst.hypergraph()? };
    let (notion, t, verdict) = match file {
        ColouringFile::Vertex { colours } => {
            let v = notion
                .vertex_notion()
                .ok_or_else(|| Error::InvalidArgument("a vertex colouring needs a vertex notion".into()))?;
            let c = VertexColouring::new(colours.clone())?;
            if c.len() != h.n() {
                return Err(Error::InvalidInput(format!("{} colours for {} vertices", c.len(), h.n())));
            }
            let t = notion.uses_t().then_some(inst.t);
            (notion, t, validate(&h, &c, v, t)?)
        }
        ColouringFile::Subset { n, t, tokens } => {
            if *n != h.n() {
                return Err(Error::InvalidInput(format!("colouring on {n} vertices, instance has {}", h.n())));
            }
            let pairs = tokens.iter().map(|(s, tok)| Ok((s.clone(), tok.parse()?))).collect::<Result<Vec<_>>>()?;
            let sigma = SubsetColouring::from_assignments(*n, *t, pairs)?;
            let verdict = if unions { validate_subset_cf(&h, &sigma)? } else { check_subsets(inst, &h, &sigma)?.0 };
            (TargetNotion::SubsetCf, Some(*t), verdict)
        }
    };
    Ok(VerifyReport {
        family: inst.family,
        n: inst.n,
        unions,
        notion,
        t,
        valid: verdict.is_valid(),
        counterexample: verdict.counterexample().map(<[u32]>::to_vec),
    })
}

/// One line of the bench CSV.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub t: usize,
    pub seed: u64,
    pub algorithm: String,
    pub tokens: usize,
    #[serde(rename = "edges_of_G")]
    pub edges_of_g: Option<usize>,
    pub valid: bool,
    pub millis: u64,
}

/// Runs `trials` seeded instances per size; trial `k` uses seed `seed + k`.
pub fn bench(family: Family, ns: &[usize], t: usize, trials: usize, seed: u64, alg: Algorithm) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in ns {
        for k in 0..trials as u64 {
            let inst = Instance::generate(family, n, t, seed + k)?;
            let run = colour(&inst, alg, false, true)?;
            rows.push(BenchRow {
                family,
                n,
                t: run.report.t,
                seed: seed + k,
                algorithm: alg.name().into(),
                tokens: run.report.tokens,
                edges_of_g: run.report.edges_of_g,
                valid: run.report.valid,
                millis: run.report.millis.unwrap_or(0),
            });
        }
    }
    Ok(rows)
}
