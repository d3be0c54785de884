//! Batch computation of invariants over a list of census entries.

use rayon::prelude::*;

use crate::boundary::cusps;
use crate::cover::rank_of_cover;
use crate::error::ComputeError;
use crate::flowgraph::{flow_graph, graphs_isomorphic};
use crate::invariants::{lower_veering_polynomial, taut_polynomial, upper_veering_polynomial, Track};
use crate::laurent::LaurentPoly;
use crate::transverse::Veering;

pub const SCAN_HEADER: [&str; 10] = [
    "entry",
    "n",
    "cusps",
    "rank",
    "taut",
    "veering_lower",
    "veering_upper",
    "veering_asym",
    "flowgraph_noniso",
    "error",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanSummary {
    pub n: usize,
    pub cusps: usize,
    pub rank: usize,
    pub taut: LaurentPoly,
    pub veering_lower: LaurentPoly,
    pub veering_upper: LaurentPoly,
    pub veering_asym: bool,
    pub flowgraph_noniso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScanRow {
    pub entry: String,
    pub result: Result<ScanSummary, ComputeError>,
}

impl ScanRow {
    pub fn flagged(&self) -> bool {
        matches!(&self.result, Ok(s) if s.veering_asym || s.flowgraph_noniso)
    }

    pub fn record(&self) -> [String; 10] {
        match &self.result {
            Ok(s) => [
                self.entry.clone(),
                s.n.to_string(),
                s.cusps.to_string(),
                s.rank.to_string(),
                s.taut.to_string(),
                s.veering_lower.to_string(),
                s.veering_upper.to_string(),
                s.veering_asym.to_string(),
                s.flowgraph_noniso.to_string(),
                String::new(),
            ],
            Err(e) => {
                let mut r: [String; 10] = Default::default();
                r[0] = self.entry.clone();
                r[9] = e.to_string();
                r
            }
        }
    }
}

pub fn summarize(entry: &str) -> Result<ScanSummary, ComputeError> {
    let v = Veering::from_census(entry)?;
    let tt = v.transverse();
    let lower = lower_veering_polynomial(&v)?.normalize();
    let upper = upper_veering_polynomial(&v)?.normalize();
    let noniso = !graphs_isomorphic(&flow_graph(&v, Track::Lower), &flow_graph(&v, Track::Upper));
    Ok(ScanSummary {
        n: v.size(),
        cusps: cusps(tt).count,
        rank: rank_of_cover(tt, &[])?,
        taut: taut_polynomial(tt, &[])?,
        veering_asym: !lower.unit_equal(&upper),
        veering_lower: lower,
        veering_upper: upper,
        flowgraph_noniso: noniso,
    })
}

/// Rows come back in input order whatever the thread count.
pub fn census_scan<S: AsRef<str> + Sync>(entries: &[S]) -> Vec<ScanRow> {
    entries
        .par_iter()
        .map(|e| ScanRow { entry: e.as_ref().to_string(), result: summarize(e.as_ref()) })
        .collect()
}
