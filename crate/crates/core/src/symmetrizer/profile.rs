use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::{OrbitBasis, SymmetrizerEngine};
use crate::braiding::BraidingParams;
use crate::error::{Error, Result};
use crate::scalars::{CyclotomicNumber, ParamPoint, Scalar};

/// Degree cap used when none is given.
pub const DEFAULT_DEGREE_CAP: usize = 24;

/// How the degree-by-degree computation stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProfileStatus {
    /// The rank in `degree` is zero, hence so are all later ranks.
    Terminated { degree: usize },
    /// Every degree up to `cap` has positive rank. Says nothing about
    /// finiteness.
    CapExceeded { cap: usize },
}

/// Graded dimensions `dim B^0, dim B^1, ...` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedProfile {
    pub point: ParamPoint,
    /// `ranks[d] = dim B^d`; the last entry is `0` iff terminated.
    pub ranks: Vec<usize>,
    pub status: ProfileStatus,
}

impl GradedProfile {
    /// Total dimension, known only after termination.
    pub fn total(&self) -> Option<usize> {
        match self.status {
            ProfileStatus::Terminated { .. } => Some(self.ranks.iter().sum()),
            ProfileStatus::CapExceeded { .. } => None,
        }
    }
}

struct PointLabels<'a>(&'a ParamPoint);

impl Serialize for PointLabels<'_> {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let [a, b, e] = self.0.labels();
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("a", &a)?;
        m.serialize_entry("b", &b)?;
        m.serialize_entry("e", &e)?;
        m.end()
    }
}

/// `{ "point": {a, b, e}, "ranks": [...], "status": {...}, "total"? }`.
impl Serialize for GradedProfile {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> std::result::Result<Ser::Ok, Ser::Error> {
        let total = self.total();
        let mut m = s.serialize_map(Some(if total.is_some() { 4 } else { 3 }))?;
        m.serialize_entry("point", &PointLabels(&self.point))?;
        m.serialize_entry("ranks", &self.ranks)?;
        m.serialize_entry("status", &self.status)?;
        if let Some(t) = total {
            m.serialize_entry("total", &t)?;
        }
        m.end()
    }
}

impl<S: Scalar> SymmetrizerEngine<S> {
    /// `rank S_n`, summing the orbit blocks computed in parallel.
    pub fn graded_dim(&self, n: usize) -> Result<usize> {
        match n {
            0 => return Ok(1),
            1 => return Ok(2),
            _ => {}
        }
        self.prepare_degree(n);
        let ranks: Vec<usize> = OrbitBasis::all(n)
            .par_iter()
            .map(|b| self.block(&b.words()[0]).rank())
            .collect::<Result<_>>()?;
        Ok(ranks.into_iter().sum())
    }
}

/// `dim B^n(V)` at `pt`.
pub fn graded_dim(n: usize, pt: &ParamPoint) -> Result<usize> {
    SymmetrizerEngine::new(BraidingParams::specialized(pt)).graded_dim(n)
}

/// Computes graded dimensions for `n = 2, 3, ...` until one vanishes or
/// `cap` is reached.
pub fn nichols_dimension(pt: &ParamPoint, cap: usize) -> Result<GradedProfile> {
    nichols_dimension_with(
        &SymmetrizerEngine::<CyclotomicNumber>::new(BraidingParams::specialized(pt)),
        pt,
        cap,
    )
}

/// [`nichols_dimension`] on a caller-supplied engine for the same point.
pub fn nichols_dimension_with(
    engine: &SymmetrizerEngine<CyclotomicNumber>,
    pt: &ParamPoint,
    cap: usize,
) -> Result<GradedProfile> {
    if cap < 2 {
        return Err(Error::OutOfRange(format!("degree cap {cap} is below 2")));
    }
    let mut ranks = vec![1, 2];
    for n in 2..=cap {
        let r = engine.graded_dim(n)?;
        engine.release_below(n);
        ranks.push(r);
        if r == 0 {
            return Ok(GradedProfile {
                point: pt.clone(),
                ranks,
                status: ProfileStatus::Terminated { degree: n },
            });
        }
    }
    Ok(GradedProfile {
        point: pt.clone(),
        ranks,
        status: ProfileStatus::CapExceeded { cap },
    })
}
