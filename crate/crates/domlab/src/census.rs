//! Per-graph census records: everything the classifier knows about one
//! graph, keyed by its graph6 string so every record can be re-derived
//! and checked from the record alone.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_graph_with, gamma_set_partition_check, Verdict};
use crate::domination::all_gamma_sets;
use crate::error::Result;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};

pub const CENSUS_SCHEMA: &str = "domlab.census.v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusFlags {
    pub has_leaf: bool,
    pub partition_ok: bool,
    pub universal_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub gamma: usize,
    pub verdict: Verdict,
    pub num_gamma_sets: usize,
    pub bondage_count: usize,
    pub weak_count: usize,
    pub strong_count: usize,
    pub flags: CensusFlags,
}

impl CensusRecord {
    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub const CSV_HEADER: &'static str = "graph6,n,m,gamma,verdict,num_gamma_sets,\
bondage_count,weak_count,strong_count,has_leaf,partition_ok,universal_count";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            self.gamma,
            self.verdict,
            self.num_gamma_sets,
            self.bondage_count,
            self.weak_count,
            self.strong_count,
            self.flags.has_leaf,
            self.flags.partition_ok,
            self.flags.universal_count
        )
    }
}

/// Classifies one connected graph (n >= 2) into a census record.
pub fn census_record(g: &Graph) -> Result<CensusRecord> {
    let fam = all_gamma_sets(g);
    let gv = classify_graph_with(g, &fam)?;
    Ok(CensusRecord {
        schema: CENSUS_SCHEMA.to_string(),
        graph6: to_graph6(g)?,
        n: g.n(),
        m: g.m(),
        gamma: fam.gamma,
        verdict: gv.verdict,
        num_gamma_sets: fam.sets.len(),
        bondage_count: gv.profiles.iter().filter(|p| p.is_bondage).count(),
        weak_count: gv.profiles.iter().filter(|p| p.is_weak).count(),
        strong_count: gv.profiles.iter().filter(|p| p.is_strong).count(),
        flags: CensusFlags {
            has_leaf: !g.leaves().is_empty(),
            partition_ok: gamma_set_partition_check(g, &fam),
            universal_count: g.universal_vertices().len(),
        },
    })
}

/// Records for a batch of graphs, in input order. `jobs = 0` uses the
/// default thread pool, `jobs = 1` stays serial, anything else builds a
/// pool of that size; the ordered collect keeps output identical across
/// worker counts.
pub fn census(graphs: &[Graph], jobs: usize) -> Result<Vec<CensusRecord>> {
    match jobs {
        1 => graphs.iter().map(census_record).collect(),
        0 => graphs.par_iter().map(census_record).collect(),
        k => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("worker pool")
            .install(|| graphs.par_iter().map(census_record).collect()),
    }
}

/// Re-derives every field from the record's graph6 string; the returned
/// list names the fields that disagree (empty = self-consistent).
pub fn verify_record(rec: &CensusRecord) -> Result<Vec<String>> {
    let g = parse_graph6(&rec.graph6)?;
    let fresh = census_record(&g)?;
    let mut bad = Vec::new();
    if rec.schema != fresh.schema {
        bad.push("schema".to_string());
    }
    if rec.graph6 != fresh.graph6 {
        bad.push("graph6".to_string());
    }
    macro_rules! check {
        ($($field:ident).+) => {
            if rec.$($field).+ != fresh.$($field).+ {
                bad.push(stringify!($($field).+).to_string());
            }
        };
    }
    check!(n);
    check!(m);
    check!(gamma);
    check!(verdict);
    check!(num_gamma_sets);
    check!(bondage_count);
    check!(weak_count);
    check!(strong_count);
    check!(flags.has_leaf);
    check!(flags.partition_ok);
    check!(flags.universal_count);
    Ok(bad)
}

/// Verdict tallies for the census summary footer.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictTally {
    pub total: usize,
    pub sr: usize,
    pub asr: usize,
    pub neither: usize,
}

pub fn tally(records: &[CensusRecord]) -> VerdictTally {
    let mut t = VerdictTally {
        total: records.len(),
        ..Default::default()
    };
    for r in records {
        match r.verdict {
            Verdict::Sr => t.sr += 1,
            Verdict::Asr => t.asr += 1,
            Verdict::Neither => t.neither += 1,
        }
    }
    t
}
