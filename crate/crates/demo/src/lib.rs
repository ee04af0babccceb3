//! Browser entry points. Every call takes and returns JSON text so the page
//! needs no bindings beyond strings.

use std::collections::HashMap;

use cfcolour::cli::{colour, exact, Algorithm, ColourRun, Family, Instance, RunReport, TargetNotion};
use cfcolour::colours::{binomial, for_each_subset};
use cfcolour::{Error, SubsetColouring};
use serde::{Deserialize, Serialize};
use wasm_bindgen::prelude::*;

/// Largest instance the page will colour, kept to about a second of work.
pub fn size_limit(family: Family, alg: Algorithm) -> usize {
    match (family, alg) {
        (Family::Intervals, Algorithm::IntervalUnion) => 512,
        (Family::Intervals, _) => 128,
        (Family::Rectangles, _) => 48,
        (Family::Discs, _) => 32,
        (Family::Star | Family::Custom, _) => 12,
    }
}

/// Largest subset size the page will colour.
pub const MAX_T: usize = 3;

/// Most t-subsets a probe will enumerate.
pub const PROBE_LIMIT: usize = 200_000;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub family: Family,
    pub n: usize,
    #[serde(default = "two")]
    pub t: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub algorithm: Option<Algorithm>,
}

fn two() -> usize {
    2
}

impl Request {
    fn algorithm(&self) -> Algorithm {
        self.algorithm.unwrap_or(Algorithm::default_for(self.family))
    }

    fn instance(&self) -> Result<Instance, Error> {
        let limit = size_limit(self.family, self.algorithm());
        if self.n > limit {
            return Err(Error::SizeLimit { what: format!("demo {} on {:?}", self.algorithm().name(), self.family), limit });
        }
        if self.t > MAX_T {
            return Err(Error::SizeLimit { what: "demo subset size".into(), limit: MAX_T });
        }
        Instance::generate(self.family, self.n, self.t, self.seed)
    }
}

#[derive(Debug, Serialize)]
pub struct Picture {
    pub report: RunReport,
    /// Rank coordinates; empty for intervals, which sit on a line.
    pub points: Vec<(u32, u32)>,
    pub vertex_colours: Vec<u32>,
}

#[derive(Debug, PartialEq, Serialize)]
pub struct Witness {
    pub subset: Vec<u32>,
    pub token: String,
}

#[derive(Debug, Serialize)]
pub struct Probe {
    pub vertices: Vec<u32>,
    pub subsets: usize,
    pub distinct: usize,
    /// First t-subset, in colex order, whose token occurs once.
    pub witness: Option<Witness>,
    /// Most frequent tokens, most frequent first.
    pub histogram: Vec<(String, usize)>,
}

/// A coloured instance kept alive between probes.
pub struct Colouring {
    run: ColourRun,
    points: Vec<(u32, u32)>,
}

impl Colouring {
    pub fn new(req: &Request) -> Result<Colouring, Error> {
        let inst = req.instance()?;
        let points = inst.point_set()?.map_or_else(Vec::new, |p| p.points().iter().map(|q| (q.x, q.y)).collect());
        let run = colour(&inst, req.algorithm(), true, false)?;
        Ok(Colouring { run, points })
    }

    pub fn picture(&self) -> Picture {
        Picture {
            report: self.run.report.clone(),
            points: self.points.clone(),
            vertex_colours: self.run.vertex.as_slice().to_vec(),
        }
    }

    pub fn sigma(&self) -> &SubsetColouring {
        &self.run.colouring
    }

    /// Token statistics of the t-subsets inside `selected`.
    pub fn probe(&self, selected: &[u32]) -> Result<Probe, Error> {
        let sigma = self.sigma();
        let mut vertices = selected.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.last().filter(|&&v| v as usize >= sigma.n()) {
            return Err(Error::InvalidInput(format!("vertex {v} out of range")));
        }
        let subsets = usize::try_from(binomial(vertices.len(), sigma.t())).unwrap_or(usize::MAX);
        if subsets > PROBE_LIMIT {
            return Err(Error::SizeLimit { what: "probe subsets".into(), limit: PROBE_LIMIT });
        }
        let mut counts: HashMap<String, usize> = HashMap::new();
        let mut order = Vec::with_capacity(subsets);
        for_each_subset(&vertices, sigma.t(), |s| {
            let tok = sigma.get(s).to_string();
            *counts.entry(tok.clone()).or_default() += 1;
            order.push((s.to_vec(), tok));
        });
        let witness = order
            .into_iter()
            .find(|(_, tok)| counts[tok] == 1)
            .map(|(subset, token)| Witness { subset, token });
        let mut histogram: Vec<(String, usize)> = counts.into_iter().collect();
        histogram.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
        let distinct = histogram.len();
        histogram.truncate(8);
        Ok(Probe { vertices, subsets, distinct, witness, histogram })
    }
}

fn to_js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

fn json<T: Serialize>(value: &T) -> Result<String, JsError> {
    serde_json::to_string(value).map_err(to_js)
}

/// Colours a generated instance; see [`Request`] for the fields.
#[wasm_bindgen]
pub struct Session(Colouring);

#[wasm_bindgen]
impl Session {
    #[wasm_bindgen(constructor)]
    pub fn new(request: &str) -> Result<Session, JsError> {
        let req: Request = serde_json::from_str(request).map_err(to_js)?;
        Colouring::new(&req).map(Session).map_err(to_js)
    }

    /// Report, point coordinates and vertex colours.
    pub fn picture(&self) -> Result<String, JsError> {
        json(&self.0.picture())
    }

    /// Token statistics of the t-subsets inside a selected vertex set.
    pub fn probe(&self, selected: &[u32]) -> Result<String, JsError> {
        json(&self.0.probe(selected).map_err(to_js)?)
    }
}

/// Exact optimum of a small generated instance.
pub fn exact_optimum(request: &Request, notion: TargetNotion) -> Result<cfcolour::cli::ExactReport, Error> {
    exact(&request.instance()?, notion)
}

#[wasm_bindgen(js_name = exactOptimum)]
pub fn exact_optimum_js(request: &str, notion: &str) -> Result<String, JsError> {
    let req: Request = serde_json::from_str(request).map_err(to_js)?;
    let notion: TargetNotion = serde_json::from_value(serde_json::Value::String(notion.into())).map_err(to_js)?;
    json(&exact_optimum(&req, notion).map_err(to_js)?)
}
