use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::star_hypergraph;
use crate::error::{Error, Result};
use crate::geometry::{disc_hypergraph, interval_hypergraph, rank_normalize, rectangle_hypergraph, PointSet};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Intervals,
    Rectangles,
    Discs,
    Star,
    Custom,
}

impl Family {
    pub fn has_points(self) -> bool {
        matches!(self, Family::Rectangles | Family::Discs)
    }
}

/// Instance file. Point families carry their point list, which is
/// rank-normalized on load; custom instances carry their hyperedges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub family: Family,
    pub n: usize,
    pub t: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<(f64, f64)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hyperedges: Option<Vec<Vec<u32>>>,
}

impl Instance {
    /// Deterministic instance of a generated family.
    pub fn generate(family: Family, n: usize, t: usize, seed: u64) -> Result<Instance> {
        let mut inst = Instance { family, n, t, seed, points: None, hyperedges: None };
        match family {
            Family::Custom => return Err(Error::InvalidArgument("custom instances are written by hand".into())),
            Family::Star => {
                star_hypergraph(n, t)?;
            }
            Family::Rectangles | Family::Discs => {
                let p = PointSet::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
                inst.points = Some(p.points().iter().map(|q| (q.x as f64, q.y as f64)).collect());
            }
            Family::Intervals => {}
        }
        Ok(inst)
    }

    /// Checks the fields against each other.
    pub fn check(&self) -> Result<()> {
        if self.t == 0 {
            return Err(Error::InvalidInput("t must be at least 1".into()));
        }
        if let Some(pts) = &self.points {
            if !self.family.has_points() {
                return Err(Error::InvalidInput(format!("{:?} instances take no points", self.family)));
            }
            if pts.len() != self.n {
                return Err(Error::InvalidInput(format!("{} points for n = {}", pts.len(), self.n)));
            }
        }
        if self.hyperedges.is_some() != (self.family == Family::Custom) {
            return Err(Error::InvalidInput("hyperedges are given exactly for custom instances".into()));
        }
        self.hypergraph().map(|_| ())
    }

    /// The point set of a point family.
    pub fn point_set(&self) -> Result<Option<PointSet>> {
        if !self.family.has_points() {
            return Ok(None);
        }
        match &self.points {
            Some(raw) => rank_normalize(raw).map(Some),
            None => Ok(Some(PointSet::random(self.n, &mut ChaCha8Rng::seed_from_u64(self.seed)))),
        }
    }

    pub fn hypergraph(&self) -> Result<Hypergraph> {
        match self.family {
            Family::Intervals => Ok(interval_hypergraph(self.n)),
            Family::Rectangles => Ok(rectangle_hypergraph(&self.point_set()?.expect("point family"))),
            Family::Discs => Ok(disc_hypergraph(&self.point_set()?.expect("point family"))),
            Family::Star => star_hypergraph(self.n, self.t),
            Family::Custom => Hypergraph::new(self.n, self.hyperedges.clone().unwrap_or_default()),
        }
    }
}
