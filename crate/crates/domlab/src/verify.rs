//! Registry of verifiable claims about domination under edge removal and
//! subdivision, each checked exhaustively over enumerated small graphs.
//!
//! Every entry re-derives the claimed facts from the solver and compares
//! them with the independently stated expectation; a violation names the
//! offending instance. The registry backs both the `verify` CLI command
//! and the acceptance test suite.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::census::{census, CensusRecord};
use crate::classify::{
    asr_rank1_verdict, classify_graph, sr_tree_bondage_edges, sr_tree_check, Rank1Verdict, Verdict,
};
use crate::domination::{
    all_gamma_sets, domination_number, is_bondage_edge, satisfies_teschner_with,
};
use crate::enumerate::{all_connected_graphs, all_trees};
use crate::error::{Error, Result};
use crate::families::{self, BmBlock, BmSpec, Family, GtSpec};
use crate::graph::{Edge, Graph, VertexSet};
use crate::graph6::to_graph6;
use crate::oracle;

/// Upper bounds for the census-backed suites. Defaults are the full desk
/// scale; lower them for quick runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scope {
    pub max_tree_n: usize,
    pub max_graph_n: usize,
}

impl Default for Scope {
    fn default() -> Self {
        Scope {
            max_tree_n: 12,
            max_graph_n: 8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: String,
    pub claim: String,
    pub scope: String,
    pub instances_checked: u64,
    pub violations: Vec<String>,
    /// Extra findings that are not violations (e.g. emitted witnesses).
    pub notes: Vec<String>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub entries: Vec<TheoremReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(TheoremReport::passed)
    }
}

struct Outcome {
    scope: String,
    instances: u64,
    violations: Vec<String>,
    notes: Vec<String>,
}

impl Outcome {
    fn new(scope: impl Into<String>) -> Self {
        Outcome {
            scope: scope.into(),
            instances: 0,
            violations: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.violations.push(describe());
        }
    }
}

pub struct TheoremCheck {
    pub id: &'static str,
    pub claim: &'static str,
    runner: fn(&Scope) -> Result<Outcome>,
}

type ClassifiedLevel = Arc<Vec<(Graph, CensusRecord)>>;

/// Connected graphs of one size zipped with their census records, cached
/// per process because several suites walk the same census.
fn classified_level(n: usize) -> Result<ClassifiedLevel> {
    static CACHE: OnceLock<Mutex<HashMap<usize, ClassifiedLevel>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut map = cache.lock().unwrap();
    if let Some(v) = map.get(&n) {
        return Ok(v.clone());
    }
    let graphs = all_connected_graphs(n)?;
    let records = census(&graphs, 0)?;
    let level: Arc<Vec<_>> = Arc::new(graphs.into_iter().zip(records).collect());
    map.insert(n, level.clone());
    Ok(level)
}

fn g6(g: &Graph) -> String {
    to_graph6(g).unwrap_or_else(|_| format!("<n={}>", g.n()))
}

fn check_path_classification(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let mut out = Outcome::new("paths n = 2..30");
    for n in 2..=30usize {
        let want = match n {
            2 => Verdict::Asr,
            3 => Verdict::Sr,
            n if n % 3 == 1 => Verdict::Sr,
            _ => Verdict::Neither,
        };
        let got = classify_graph(&families::path(n)?)?.verdict;
        out.check(got == want, || format!("P_{n}: expected {want}, got {got}"));
    }
    Ok(out)
}

fn check_cycle_classification(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let mut out = Outcome::new("cycles n = 3..30");
    for n in 3..=30usize {
        let want = if n % 3 == 0 {
            Verdict::Asr
        } else {
            Verdict::Sr
        };
        let got = classify_graph(&families::cycle(n)?)?.verdict;
        out.check(got == want, || format!("C_{n}: expected {want}, got {got}"));
    }
    Ok(out)
}

/// The γ formula suite, generic over the γ implementation so the test
/// suite can demonstrate that a corrupted solver is detected.
fn gamma_formula_against(gamma_of: &dyn Fn(&Graph) -> usize) -> Result<Outcome> {
    let mut out = Outcome::new("paths n = 1..40, cycles n = 3..40");
    for n in 1..=40usize {
        let got = gamma_of(&families::path(n)?);
        let want = families::expected_gamma(&Family::Path(n))?;
        out.check(got == want, || {
            format!("gamma(P_{n}): expected {want}, got {got}")
        });
    }
    for n in 3..=40usize {
        let got = gamma_of(&families::cycle(n)?);
        let want = families::expected_gamma(&Family::Cycle(n))?;
        out.check(got == want, || {
            format!("gamma(C_{n}): expected {want}, got {got}")
        });
    }
    Ok(out)
}

fn check_gamma_formula(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    gamma_formula_against(&|g| domination_number(g).gamma)
}

fn check_complete_classes(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let mut out = Outcome::new("K_n for n = 3..9; K_{m,n} for 1 <= m <= n <= 6, n >= 2");
    for n in 3..=9usize {
        let got = classify_graph(&families::complete(n)?)?.verdict;
        out.check(got == Verdict::Asr, || {
            format!("K_{n}: expected ASR, got {got}")
        });
    }
    for m in 1..=6usize {
        for n in m..=6usize {
            if n == 1 {
                continue; // max{m,n} must exceed 1
            }
            let got = classify_graph(&families::complete_bipartite(m, n)?)?.verdict;
            out.check(got == Verdict::Sr, || {
                format!("K_{{{m},{n}}}: expected SR, got {got}")
            });
        }
    }
    Ok(out)
}

fn check_intro_profiles(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let mut out = Outcome::new("fixed instances: P6, P7, P8, K3");
    let mut expect = |g: &Graph, name: &str, e: Edge, want: (usize, usize)| -> Result<()> {
        let fam = all_gamma_sets(g);
        let prof = crate::classify::edge_profile_with(g, e, &fam)?;
        out.check((prof.gamma_removed, prof.gamma_subdivided) == want, || {
            format!(
                "{name} edge {e}: expected removal/subdivision {want:?}, got ({}, {})",
                prof.gamma_removed, prof.gamma_subdivided
            )
        });
        Ok(())
    };
    let p6 = families::path(6)?;
    expect(&p6, "P_6", Edge::new(2, 3)?, (2, 3))?;
    expect(&p6, "P_6", Edge::new(0, 1)?, (3, 3))?;
    let p8 = families::path(8)?;
    expect(&p8, "P_8", Edge::new(3, 4)?, (4, 3))?;
    expect(&p8, "P_8", Edge::new(2, 3)?, (3, 3))?;
    let p7 = families::path(7)?;
    for e in p7.edges() {
        expect(&p7, "P_7", e, (3, 3))?;
    }
    let k3 = families::complete(3)?;
    for e in k3.edges() {
        expect(&k3, "K_3", e, (1, 2))?;
    }
    Ok(out)
}

fn check_teschner(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(7);
    let mut out = Outcome::new(format!(
        "every edge of every connected graph 2 <= n <= {cap}"
    ));
    for n in 2..=cap {
        for (g, _) in classified_level(n)?.iter() {
            let fam = all_gamma_sets(g);
            for e in g.edges() {
                let bondage = is_bondage_edge(g, e)?;
                let teschner = satisfies_teschner_with(g, e, &fam)?;
                out.check(bondage == teschner, || {
                    format!(
                        "{} edge {e}: bondage={bondage} but Teschner condition={teschner}",
                        g6(g)
                    )
                });
            }
        }
    }
    Ok(out)
}

fn check_hairy_sr(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(8);
    let mut out = Outcome::new(format!(
        "hairy connected graphs 3 <= n <= {cap}, plus coronas of connected graphs 2 <= n <= 4"
    ));
    for n in 3..=cap {
        for (g, rec) in classified_level(n)?.iter() {
            if g.is_hairy() {
                out.check(rec.verdict == Verdict::Sr, || {
                    format!(
                        "hairy graph {}: expected SR, got {}",
                        rec.graph6, rec.verdict
                    )
                });
            }
        }
    }
    for n in 2..=4usize {
        for g in all_connected_graphs(n)? {
            let cor = g.corona()?;
            let got = classify_graph(&cor)?.verdict;
            out.check(got == Verdict::Sr, || {
                format!("corona of {}: expected SR, got {got}", g6(&g))
            });
        }
    }
    Ok(out)
}

fn check_support_edges(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(7);
    let mut out = Outcome::new(format!(
        "qualifying edges of connected graphs 3 <= n <= {cap}"
    ));
    for n in 3..=cap {
        for (g, _) in classified_level(n)?.iter() {
            let gamma = domination_number(g).gamma;
            let supports = g.supports();
            let strong = g.strong_supports();
            for e in g.edges() {
                let (u, v) = (e.u(), e.v());
                let strong_leaf_edge = (strong.contains(u) && g.leaves_of(u)?.contains(v))
                    || (strong.contains(v) && g.leaves_of(v)?.contains(u));
                let support_edge = supports.contains(u) && supports.contains(v);
                if !strong_leaf_edge && !support_edge {
                    continue;
                }
                let gr = domination_number(&g.remove_edge(e)?).gamma;
                let gs = domination_number(&g.subdivide_edge(e)?).gamma;
                if strong_leaf_edge {
                    out.check(gr == gamma + 1 && gs == gamma + 1, || {
                        format!(
                            "{} strong-support leaf edge {e}: expected gamma+1 on both \
                             edits, got removal {gr} and subdivision {gs} (gamma {gamma})",
                            g6(g)
                        )
                    });
                } else {
                    out.check(gr == gamma && gs == gamma, || {
                        format!(
                            "{} support-support edge {e}: expected gamma preserved, got \
                             removal {gr} and subdivision {gs} (gamma {gamma})",
                            g6(g)
                        )
                    });
                }
            }
        }
    }
    Ok(out)
}

fn check_sr_tree_characterization(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_tree_n.min(12);
    let mut out = Outcome::new(format!("trees 2 <= n <= {cap}"));
    for n in 2..=cap {
        for t in all_trees(n)? {
            let brute = classify_graph(&t)?.verdict == Verdict::Sr;
            let structural = sr_tree_check(&t)?.is_sr;
            out.check(brute == structural, || {
                format!(
                    "tree {}: brute-force SR={brute} but weak/strong-edge test says {structural}",
                    g6(&t)
                )
            });
        }
    }
    Ok(out)
}

fn check_sr_tree_bondage(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_tree_n.min(12);
    let mut out = Outcome::new(format!("SR-trees 2 <= n <= {cap}"));
    for n in 2..=cap {
        for t in all_trees(n)? {
            if !sr_tree_check(&t)?.is_sr {
                continue;
            }
            let structural: Vec<Edge> = sr_tree_bondage_edges(&t, false)?;
            let gamma = domination_number(&t).gamma;
            let mut actual: Vec<Edge> = Vec::new();
            for e in t.edges() {
                if is_bondage_edge(&t, e)? {
                    actual.push(e);
                }
            }
            out.check(structural == actual, || {
                format!(
                    "SR-tree {}: leaf/strong-support edges {structural:?} but bondage \
                     edges {actual:?}",
                    g6(&t)
                )
            });
            for e in t.edges() {
                if !structural.contains(&e) {
                    let gr = domination_number(&t.remove_edge(e)?).gamma;
                    out.check(gr == gamma, || {
                        format!(
                            "SR-tree {} non-bondage edge {e}: removal changed gamma \
                             {gamma} -> {gr}",
                            g6(&t)
                        )
                    });
                }
            }
        }
    }
    Ok(out)
}

fn check_asr_gamma1(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(7);
    let mut out = Outcome::new(format!(
        "connected graphs with domination number 1, 3 <= n <= {cap}"
    ));
    for n in 3..=cap {
        for (g, rec) in classified_level(n)?.iter() {
            if rec.gamma != 1 {
                continue;
            }
            let rank1 = asr_rank1_verdict(g)?;
            let want = match rank1.verdict {
                Rank1Verdict::Asr => Verdict::Asr,
                Rank1Verdict::SrStar => Verdict::Sr,
                Rank1Verdict::Neither => Verdict::Neither,
            };
            out.check(rec.verdict == want, || {
                format!(
                    "{} ({} universal): structural verdict {want}, classifier {}",
                    rec.graph6, rank1.universal_count, rec.verdict
                )
            });
            out.check(
                (rec.verdict == Verdict::Asr) == (rank1.universal_count >= 3),
                || {
                    format!(
                        "{}: ASR={} but universal count {}",
                        rec.graph6,
                        rec.verdict == Verdict::Asr,
                        rank1.universal_count
                    )
                },
            );
        }
    }
    Ok(out)
}

fn check_asr_structure(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(8);
    let mut out = Outcome::new(format!("ASR graphs among connected graphs 3 <= n <= {cap}"));
    for n in 3..=cap {
        for (g, rec) in classified_level(n)?.iter() {
            if rec.verdict != Verdict::Asr {
                continue;
            }
            out.check(!rec.flags.has_leaf, || {
                format!("ASR graph {} has a leaf", rec.graph6)
            });
            out.check(rec.bondage_count == 0, || {
                format!(
                    "ASR graph {} has {} bondage edges",
                    rec.graph6, rec.bondage_count
                )
            });
            out.check(rec.flags.partition_ok, || {
                format!(
                    "ASR graph {}: some gamma-set's closed neighborhoods fail to \
                     partition V",
                    rec.graph6
                )
            });
            let fam = all_gamma_sets(g);
            let all_independent = fam
                .sets
                .iter()
                .all(|d| d.iter().all(|x| g.adj_bits(x) & d.bits() == 0));
            out.check(all_independent, || {
                format!(
                    "ASR graph {}: some gamma-set is not independent",
                    rec.graph6
                )
            });
        }
    }
    Ok(out)
}

fn check_partition_converse(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_graph_n.min(8);
    let mut out = Outcome::new(format!("connected graphs 2 <= n <= {cap}"));
    let mut witness: Option<String> = None;
    for n in 2..=cap {
        for (_, rec) in classified_level(n)?.iter() {
            out.instances += 1;
            if rec.verdict != Verdict::Asr && rec.flags.partition_ok && witness.is_none() {
                witness = Some(rec.graph6.clone());
            }
        }
    }
    match witness {
        Some(w) => out.notes.push(format!(
            "witness: {w} passes the partition check but is not ASR"
        )),
        None => out
            .violations
            .push("no non-ASR graph passing the partition check was found in scope".to_string()),
    }
    Ok(out)
}

fn check_gt_family(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let mut out = Outcome::new("h1, h2 from {corona(K2), corona(P3), corona(K3)}, t in {1, 3, 6}");
    let bases: Vec<(&str, Graph)> = vec![
        ("corona(K2)", families::complete(2)?.corona()?),
        ("corona(P3)", families::path(3)?.corona()?),
        ("corona(K3)", families::complete(3)?.corona()?),
    ];
    for (name1, h1) in &bases {
        for (name2, h2) in &bases {
            for t in [1usize, 3, 6] {
                let spec = GtSpec {
                    h1: h1.clone(),
                    h2: h2.clone(),
                    u: 0,
                    v: 0,
                    t,
                };
                let g = families::build_gt(&spec)?;
                let got = classify_graph(&g)?.verdict;
                out.check(got == Verdict::Sr, || {
                    format!("bridged pair ({name1}, {name2}, t={t}): expected SR, got {got}")
                });
            }
        }
    }
    Ok(out)
}

/// Deterministic spread of block-construction specs with m in 1..=3,
/// every result within 18 vertices.
pub(crate) fn bm_test_specs() -> Result<Vec<(String, usize, BmSpec)>> {
    let p3 = families::path(3)?;
    let p4 = families::path(4)?;
    let p5 = families::path(5)?;
    let k1 = families::complete(1)?;
    let k2 = families::complete(2)?;
    let c4 = families::cycle(4)?;
    let s3 = families::star(3)?;
    let block = |clique: usize, h: &Graph, s: &[usize]| BmBlock {
        clique,
        h: h.clone(),
        s: s.iter().copied().collect::<VertexSet>(),
    };
    let mut specs: Vec<(String, usize, BmSpec)> = Vec::new();
    let mut push = |name: &str,
                    m: usize,
                    blocks: Vec<BmBlock>,
                    bridges: Vec<((usize, usize), (usize, usize))>| {
        specs.push((
            name.to_string(),
            m,
            BmSpec {
                blocks,
                bridges,
                allow_disconnected: false,
            },
        ));
    };
    // m = 1: single universal-clique joins
    push("K3+K1", 1, vec![block(3, &k1, &[])], vec![]);
    push("K3+K2", 1, vec![block(3, &k2, &[])], vec![]);
    push("K3+P3", 1, vec![block(3, &p3, &[])], vec![]);
    push("K3+P4", 1, vec![block(3, &p4, &[])], vec![]);
    push("K3+C4", 1, vec![block(3, &c4, &[])], vec![]);
    push("K3+K13", 1, vec![block(3, &s3, &[])], vec![]);
    push("K4+K1", 1, vec![block(4, &k1, &[])], vec![]);
    push("K4+P3", 1, vec![block(4, &p3, &[])], vec![]);
    push("K5+K2", 1, vec![block(5, &k2, &[])], vec![]);
    // m = 2: two blocks, one or two bridges
    push(
        "2x(K3+P3), one bridge",
        2,
        vec![block(3, &p3, &[0]), block(3, &p3, &[0])],
        vec![((0, 0), (1, 0))],
    );
    push(
        "2x(K3+P3), opposite ends",
        2,
        vec![block(3, &p3, &[0]), block(3, &p3, &[2])],
        vec![((0, 0), (1, 2))],
    );
    push(
        "K3+P4 with K3+P3",
        2,
        vec![block(3, &p4, &[0]), block(3, &p3, &[0])],
        vec![((0, 0), (1, 0))],
    );
    push(
        "K3+P4 double bridge",
        2,
        vec![block(3, &p4, &[0, 1]), block(3, &p3, &[0])],
        vec![((0, 0), (1, 0)), ((0, 1), (1, 0))],
    );
    push(
        "K4+P3 with K3+P3",
        2,
        vec![block(4, &p3, &[0]), block(3, &p3, &[0])],
        vec![((0, 0), (1, 0))],
    );
    push(
        "K3+K13 with K3+P3",
        2,
        vec![block(3, &s3, &[1]), block(3, &p3, &[0])],
        vec![((0, 1), (1, 0))],
    );
    push(
        "K3+P5 with K3+P3",
        2,
        vec![block(3, &p5, &[0]), block(3, &p3, &[0])],
        vec![((0, 0), (1, 0))],
    );
    push(
        "2x(K3+P4), parallel bridges",
        2,
        vec![block(3, &p4, &[0, 1]), block(3, &p4, &[0, 1])],
        vec![((0, 0), (1, 0)), ((0, 1), (1, 1))],
    );
    // m = 3: three blocks at the 18-vertex cap
    push(
        "3x(K3+P3), chain",
        3,
        vec![
            block(3, &p3, &[0]),
            block(3, &p3, &[0]),
            block(3, &p3, &[0]),
        ],
        vec![((0, 0), (1, 0)), ((1, 0), (2, 0))],
    );
    push(
        "3x(K3+P3), triangle",
        3,
        vec![
            block(3, &p3, &[0]),
            block(3, &p3, &[0]),
            block(3, &p3, &[0]),
        ],
        vec![((0, 0), (1, 0)), ((1, 0), (2, 0)), ((0, 0), (2, 0))],
    );
    push(
        "3x(K3+P3), far ends",
        3,
        vec![
            block(3, &p3, &[2]),
            block(3, &p3, &[2]),
            block(3, &p3, &[2]),
        ],
        vec![((0, 2), (1, 2)), ((1, 2), (2, 2))],
    );
    Ok(specs)
}

fn check_bm_family(scope: &Scope) -> Result<Outcome> {
    let _ = scope;
    let specs = bm_test_specs()?;
    let mut out = Outcome::new(format!(
        "{} generated block specs, m in 1..=3, n <= 18",
        specs.len()
    ));
    for (name, m, spec) in &specs {
        let g = families::build_bm(spec)?;
        let gamma = domination_number(&g).gamma;
        let got = classify_graph(&g)?.verdict;
        out.check(gamma == *m && got == Verdict::Asr, || {
            format!("block spec {name}: expected ASR with gamma {m}, got {got} with gamma {gamma}")
        });
    }
    Ok(out)
}

fn check_no_asr_tree(scope: &Scope) -> Result<Outcome> {
    let cap = scope.max_tree_n.min(12);
    let mut out = Outcome::new(format!("trees 3 <= n <= {cap}"));
    for n in 3..=cap {
        for t in all_trees(n)? {
            let got = classify_graph(&t)?.verdict;
            out.check(got != Verdict::Asr, || {
                format!("tree {} classifies ASR", g6(&t))
            });
        }
    }
    Ok(out)
}

fn check_solver_oracle(scope: &Scope) -> Result<Outcome> {
    let graph_cap = scope.max_graph_n.min(6);
    let tree_cap = scope.max_tree_n.min(9);
    let mut out = Outcome::new(format!(
        "connected graphs n <= {graph_cap} and trees n <= {tree_cap}"
    ));
    let check_graph = |g: &Graph, out: &mut Outcome| -> Result<()> {
        let fast = domination_number(g);
        let fast_family = all_gamma_sets(g);
        let slow_gamma = oracle::naive_gamma(g)?;
        let slow_family = oracle::naive_gamma_family(g)?;
        out.check(fast.gamma == slow_gamma, || {
            format!(
                "{}: solver gamma {} vs subset-enumeration {slow_gamma}",
                g6(g),
                fast.gamma
            )
        });
        out.check(fast_family == slow_family, || {
            format!(
                "{}: solver family ({} sets) differs from subset enumeration ({} sets)",
                g6(g),
                fast_family.sets.len(),
                slow_family.sets.len()
            )
        });
        Ok(())
    };
    for n in 1..=graph_cap {
        for g in all_connected_graphs(n)? {
            check_graph(&g, &mut out)?;
        }
    }
    for n in 1..=tree_cap {
        for t in all_trees(n)? {
            check_graph(&t, &mut out)?;
        }
    }
    Ok(out)
}

fn check_enumeration_counts(scope: &Scope) -> Result<Outcome> {
    let tree_cap = scope.max_tree_n.min(8);
    let graph_cap = scope.max_graph_n.min(6);
    let mut out = Outcome::new(format!(
        "tree counts n <= {tree_cap}, connected-graph counts n <= {graph_cap}"
    ));
    let frozen_trees = [1usize, 1, 1, 2, 3, 6, 11, 23];
    for n in 1..=tree_cap {
        let fast = all_trees(n)?.len();
        let slow = oracle::prufer_tree_count(n)?;
        let frozen = frozen_trees[n - 1];
        out.check(fast == slow && fast == frozen, || {
            format!("trees on {n}: generator {fast}, Prüfer oracle {slow}, expected {frozen}")
        });
    }
    let frozen_connected = [1usize, 1, 2, 6, 21, 112];
    for n in 1..=graph_cap {
        let fast = all_connected_graphs(n)?.len();
        let slow = oracle::naive_connected_count(n)?;
        let frozen = frozen_connected[n - 1];
        out.check(fast == slow && fast == frozen, || {
            format!(
                "connected graphs on {n}: generator {fast}, edge-set oracle {slow}, \
                 expected {frozen}"
            )
        });
    }
    Ok(out)
}

/// All registered checks, in acceptance order.
pub fn registry() -> &'static [TheoremCheck] {
    static REGISTRY: &[TheoremCheck] = &[
        TheoremCheck {
            id: "path-class",
            claim: "P_n is SR exactly for n = 3 and n ≡ 1 (mod 3); P_2 is ASR; every other \
                    path is NEITHER",
            runner: check_path_classification,
        },
        TheoremCheck {
            id: "cycle-class",
            claim: "C_n is SR for n ≡ 1, 2 (mod 3) and ASR for n ≡ 0 (mod 3)",
            runner: check_cycle_classification,
        },
        TheoremCheck {
            id: "gamma-formula",
            claim: "γ(P_n) = γ(C_n) = ⌈n/3⌉",
            runner: check_gamma_formula,
        },
        TheoremCheck {
            id: "complete-classes",
            claim: "K_n (n ≥ 3) is ASR; K_{m,n} with max{m,n} > 1 is SR",
            runner: check_complete_classes,
        },
        TheoremCheck {
            id: "intro-profiles",
            claim: "the named P6/P7/P8/K3 per-edge removal and subdivision values",
            runner: check_intro_profiles,
        },
        TheoremCheck {
            id: "teschner",
            claim: "an edge is a bondage edge iff every γ-set meets it in exactly one \
                    endpoint and the other endpoint is a private neighbor of it",
            runner: check_teschner,
        },
        TheoremCheck {
            id: "hairy-sr",
            claim: "every hairy graph on at least three vertices is SR",
            runner: check_hairy_sr,
        },
        TheoremCheck {
            id: "support-edges",
            claim: "a leaf edge at a strong support raises γ under both edits; an edge \
                    between two support vertices changes γ under neither",
            runner: check_support_edges,
        },
        TheoremCheck {
            id: "sr-tree-char",
            claim: "a tree is SR iff it contains neither weak nor strong edges",
            runner: check_sr_tree_characterization,
        },
        TheoremCheck {
            id: "sr-tree-bondage",
            claim: "in an SR-tree the bondage edges are exactly the edges joining a leaf \
                    to a strong support; all other edges preserve γ under removal",
            runner: check_sr_tree_bondage,
        },
        TheoremCheck {
            id: "asr-gamma1",
            claim: "a connected graph with γ = 1 and n ≥ 3 is ASR iff it has at least \
                    three universal vertices; with one or two universal vertices and not \
                    a star it is NEITHER",
            runner: check_asr_gamma1,
        },
        TheoremCheck {
            id: "asr-structure",
            claim: "an ASR graph has no leaves and no bondage edges, every γ-set's closed \
                    neighborhoods partition V, and every γ-set is independent",
            runner: check_asr_structure,
        },
        TheoremCheck {
            id: "partition-converse",
            claim: "the partition property does not imply ASR: some non-ASR graph passes \
                    the partition check",
            runner: check_partition_converse,
        },
        TheoremCheck {
            id: "gt-family",
            claim: "bridging two hairy graphs with γ ≥ 2 by a path of t internal vertices \
                    yields an SR graph when t = 1 or t ≡ 0 (mod 3)",
            runner: check_gt_family,
        },
        TheoremCheck {
            id: "bm-family",
            claim: "every block construction from m universal-clique joins linked through \
                    non-covering attachment sets is ASR with γ = m",
            runner: check_bm_family,
        },
        TheoremCheck {
            id: "no-asr-tree",
            claim: "no tree on three or more vertices is ASR",
            runner: check_no_asr_tree,
        },
        TheoremCheck {
            id: "solver-oracle",
            claim: "branch-and-bound γ and Γ match naive subset enumeration",
            runner: check_solver_oracle,
        },
        TheoremCheck {
            id: "enumeration-counts",
            claim: "tree and connected-graph counts match the independent naive generators",
            runner: check_enumeration_counts,
        },
    ];
    REGISTRY
}

const MAX_REPORTED_VIOLATIONS: usize = 20;

fn run_check(check: &TheoremCheck, scope: &Scope) -> Result<TheoremReport> {
    let mut outcome = (check.runner)(scope)?;
    if outcome.violations.len() > MAX_REPORTED_VIOLATIONS {
        let extra = outcome.violations.len() - MAX_REPORTED_VIOLATIONS;
        outcome.violations.truncate(MAX_REPORTED_VIOLATIONS);
        outcome.violations.push(format!("... and {extra} more"));
    }
    Ok(TheoremReport {
        theorem_id: check.id.to_string(),
        claim: check.claim.to_string(),
        scope: outcome.scope,
        instances_checked: outcome.instances,
        violations: outcome.violations,
        notes: outcome.notes,
    })
}

/// Runs the selected checks (all of them when `ids` is `None`) and
/// gathers one report entry per check.
pub fn run(ids: Option<&[String]>, scope: &Scope) -> Result<VerifyReport> {
    let selected: Vec<&TheoremCheck> = match ids {
        None => registry().iter().collect(),
        Some(ids) => {
            let mut picked = Vec::new();
            for id in ids {
                let check = registry()
                    .iter()
                    .find(|c| c.id == id)
                    .ok_or_else(|| Error::UnknownTheoremId(id.clone()))?;
                if !picked.iter().any(|c: &&TheoremCheck| c.id == check.id) {
                    picked.push(check);
                }
            }
            picked
        }
    };
    let entries = selected
        .into_iter()
        .map(|c| run_check(c, scope))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport { entries })
}

/// Looks up one check by id, mostly for targeted tests.
pub fn run_one(id: &str, scope: &Scope) -> Result<TheoremReport> {
    let check = registry()
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownTheoremId(id.to_string()))?;
    run_check(check, scope)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_scope() -> Scope {
        Scope {
            max_tree_n: 7,
            max_graph_n: 5,
        }
    }

    #[test]
    fn registry_ids_unique() {
        let mut ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), before);
        assert_eq!(before, 18);
    }

    #[test]
    fn unknown_id_rejected() {
        assert_eq!(
            run(Some(&["nope".to_string()]), &Scope::default()).unwrap_err(),
            Error::UnknownTheoremId("nope".to_string())
        );
    }

    #[test]
    fn full_report_has_every_registry_entry_once() {
        let report = run(None, &small_scope()).unwrap();
        assert_eq!(report.entries.len(), registry().len());
        for (entry, check) in report.entries.iter().zip(registry()) {
            assert_eq!(entry.theorem_id, check.id);
        }
        assert!(report.passed(), "{report:#?}");
    }

    #[test]
    fn corrupted_gamma_is_detected() {
        // sensitivity: an off-by-one solver must flip the formula suite red
        let skewed = |g: &Graph| {
            let true_gamma = domination_number(g).gamma;
            if g.n() == 11 {
                true_gamma + 1
            } else {
                true_gamma
            }
        };
        let outcome = gamma_formula_against(&skewed).unwrap();
        assert!(!outcome.violations.is_empty());
        let honest = gamma_formula_against(&|g| domination_number(g).gamma).unwrap();
        assert!(honest.violations.is_empty());
    }

    #[test]
    fn bm_specs_are_at_least_twenty_and_in_cap() {
        let specs = bm_test_specs().unwrap();
        assert!(specs.len() >= 20, "only {} specs", specs.len());
        for (name, m, spec) in &specs {
            assert!((1..=3).contains(m), "{name}");
            let g = families::build_bm(spec).unwrap();
            assert!(g.n() <= 18, "{name} has {} vertices", g.n());
        }
    }
}
