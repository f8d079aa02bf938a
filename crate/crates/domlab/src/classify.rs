//! Per-edge removal-vs-subdivision profiles and whole-graph SR/ASR
//! verdicts, plus the tree-specific predicates (weak/strong edges) and the
//! structural checks that every ASR graph must pass.

use serde::{Deserialize, Serialize};

use crate::domination::{
    all_gamma_sets, domination_number, epn, satisfies_teschner_with, GammaFamily,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexSet};

/// How γ(G − e) compares to γ(G_e).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GammaRelation {
    Less,
    Equal,
    Greater,
}

/// Everything the classification knows about one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeProfile {
    pub edge: Edge,
    pub gamma: usize,
    pub gamma_removed: usize,
    pub gamma_subdivided: usize,
    pub relation: GammaRelation,
    pub is_bondage: bool,
    pub is_weak: bool,
    pub is_strong: bool,
}

/// Whole-graph verdict: SR when every edge has γ(G − e) = γ(G_e), ASR when
/// no edge does, NEITHER otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "SR")]
    Sr,
    #[serde(rename = "ASR")]
    Asr,
    #[serde(rename = "NEITHER")]
    Neither,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Sr => write!(f, "SR"),
            Verdict::Asr => write!(f, "ASR"),
            Verdict::Neither => write!(f, "NEITHER"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphVerdict {
    pub verdict: Verdict,
    pub profiles: Vec<EdgeProfile>,
}

/// Profile of a single edge. Use [`edge_profile_with`] when looping over
/// the edges of one graph so Γ(G) is computed once.
pub fn edge_profile(g: &Graph, e: Edge) -> Result<EdgeProfile> {
    let fam = all_gamma_sets(g);
    edge_profile_with(g, e, &fam)
}

pub fn edge_profile_with(g: &Graph, e: Edge, fam: &GammaFamily) -> Result<EdgeProfile> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge { u: e.u(), v: e.v() });
    }
    let gamma = fam.gamma;
    let gamma_removed = domination_number(&g.remove_edge(e)?).gamma;
    let gamma_subdivided = domination_number(&g.subdivide_edge(e)?).gamma;
    let relation = match gamma_removed.cmp(&gamma_subdivided) {
        std::cmp::Ordering::Less => GammaRelation::Less,
        std::cmp::Ordering::Equal => GammaRelation::Equal,
        std::cmp::Ordering::Greater => GammaRelation::Greater,
    };
    Ok(EdgeProfile {
        edge: e,
        gamma,
        gamma_removed,
        gamma_subdivided,
        relation,
        is_bondage: gamma_removed == gamma + 1,
        is_weak: is_weak_edge(g, e, fam)?,
        is_strong: is_strong_edge(g, e, fam)?,
    })
}

/// Classifies a connected graph on at least two vertices, profiling every
/// edge in normalized order.
pub fn classify_graph(g: &Graph) -> Result<GraphVerdict> {
    let fam = all_gamma_sets(g);
    classify_graph_with(g, &fam)
}

/// Same as [`classify_graph`] with a precomputed Γ(G).
pub fn classify_graph_with(g: &Graph, fam: &GammaFamily) -> Result<GraphVerdict> {
    if g.n() < 2 {
        return Err(Error::TooSmall { n: g.n(), min: 2 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let profiles: Vec<EdgeProfile> = g
        .edges()
        .into_iter()
        .map(|e| edge_profile_with(g, e, fam))
        .collect::<Result<_>>()?;
    let equal = profiles
        .iter()
        .filter(|p| p.relation == GammaRelation::Equal)
        .count();
    let verdict = if equal == profiles.len() {
        Verdict::Sr
    } else if equal == 0 {
        Verdict::Asr
    } else {
        Verdict::Neither
    };
    Ok(GraphVerdict { verdict, profiles })
}

/// A weak edge avoids every γ-set entirely.
pub fn is_weak_edge(g: &Graph, e: Edge, fam: &GammaFamily) -> Result<bool> {
    if !g.contains_edge(e) {
        return Err(Error::NotAnEdge { u: e.u(), v: e.v() });
    }
    Ok(fam
        .sets
        .iter()
        .all(|d| d.intersection(e.endpoints()).is_empty()))
}

/// A strong edge satisfies Teschner's condition and some γ-set leaves the
/// far endpoint as the *only* private neighbor of the near one.
pub fn is_strong_edge(g: &Graph, e: Edge, fam: &GammaFamily) -> Result<bool> {
    if !satisfies_teschner_with(g, e, fam)? {
        return Ok(false);
    }
    for &d in &fam.sets {
        let u = d.intersection(e.endpoints()).min().unwrap();
        let far = e.other(u);
        if epn(g, u, d)? == VertexSet::singleton(far) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeKind {
    Weak,
    Strong,
}

/// Outcome of the SR-tree test: either the tree has neither weak nor
/// strong edges (and is sub-removable), or one offending edge is returned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrTreeCheck {
    pub is_sr: bool,
    pub witness: Option<(Edge, EdgeKind)>,
}

fn require_tree(t: &Graph) -> Result<()> {
    if t.n() < 2 || !t.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(())
}

/// Decides sub-removability of a tree through its edge structure: a tree
/// is SR exactly when it has neither weak nor strong edges.
pub fn sr_tree_check(t: &Graph) -> Result<SrTreeCheck> {
    require_tree(t)?;
    let fam = all_gamma_sets(t);
    for e in t.edges() {
        if is_weak_edge(t, e, &fam)? {
            return Ok(SrTreeCheck {
                is_sr: false,
                witness: Some((e, EdgeKind::Weak)),
            });
        }
        if is_strong_edge(t, e, &fam)? {
            return Ok(SrTreeCheck {
                is_sr: false,
                witness: Some((e, EdgeKind::Strong)),
            });
        }
    }
    Ok(SrTreeCheck {
        is_sr: true,
        witness: None,
    })
}

/// Bondage edges of an SR-tree: exactly the edges joining a leaf to a
/// strong support. With `verify_sr` the SR precondition is checked first;
/// census loops that already know the tree is SR can skip it.
pub fn sr_tree_bondage_edges(t: &Graph, verify_sr: bool) -> Result<Vec<Edge>> {
    require_tree(t)?;
    if verify_sr && !sr_tree_check(t)?.is_sr {
        return Err(Error::NotSrTree);
    }
    let leaves = t.leaves();
    let strong = t.strong_supports();
    Ok(t.edges()
        .into_iter()
        .filter(|e| {
            (leaves.contains(e.u()) && strong.contains(e.v()))
                || (leaves.contains(e.v()) && strong.contains(e.u()))
        })
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rank1Verdict {
    Asr,
    SrStar,
    Neither,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank1Report {
    pub universal_count: usize,
    pub verdict: Rank1Verdict,
}

fn is_star(g: &Graph) -> bool {
    // one center adjacent to all others, no other edges
    g.n() >= 3 && g.m() == g.n() - 1 && g.degrees().iter().any(|&d| d == g.n() - 1)
}

/// Classification of a connected graph with γ = 1 and n ≥ 3: ASR exactly
/// when it has three or more universal vertices, SR when it is a star,
/// NEITHER in every other case.
pub fn asr_rank1_verdict(g: &Graph) -> Result<Rank1Report> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let gamma = domination_number(g).gamma;
    if gamma != 1 {
        return Err(Error::PreconditionGammaNotOne { gamma });
    }
    let universal_count = g.universal_vertices().len();
    let verdict = if universal_count >= 3 {
        Rank1Verdict::Asr
    } else if is_star(g) {
        Rank1Verdict::SrStar
    } else {
        Rank1Verdict::Neither
    };
    Ok(Rank1Report {
        universal_count,
        verdict,
    })
}

/// Do the closed neighborhoods of every γ-set's members partition V(G)?
/// A necessary condition for ASR graphs.
pub fn gamma_set_partition_check(g: &Graph, fam: &GammaFamily) -> bool {
    fam.sets.iter().all(|d| {
        let mut seen = 0u64;
        for x in d.iter() {
            let nb = g.closed_bits(x);
            if nb & seen != 0 {
                return false;
            }
            seen |= nb;
        }
        seen == g.vertices().bits()
    })
}

/// The necessary ASR conditions in one report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsrStructureReport {
    pub has_leaf: bool,
    pub bondage_edges: Vec<Edge>,
    pub partition_ok: bool,
    /// γ(G − e) = γ(G) for every edge, i.e. no bondage edges.
    pub insensitive: bool,
}

pub fn asr_structure_report(g: &Graph) -> Result<AsrStructureReport> {
    if g.n() < 3 {
        return Err(Error::TooSmall { n: g.n(), min: 3 });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let fam = all_gamma_sets(g);
    let bondage_edges: Vec<Edge> = g
        .edges()
        .into_iter()
        .filter(|&e| domination_number(&g.remove_edge(e).expect("edge of g")).gamma > fam.gamma)
        .collect();
    Ok(AsrStructureReport {
        has_leaf: !g.leaves().is_empty(),
        insensitive: bondage_edges.is_empty(),
        partition_ok: gamma_set_partition_check(g, &fam),
        bondage_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_dominating;
    use crate::families;

    fn p(n: usize) -> Graph {
        families::path(n).unwrap()
    }

    fn e(u: usize, v: usize) -> Edge {
        Edge::new(u, v).unwrap()
    }

    #[test]
    fn intro_edge_profiles() {
        // the four quoted path/triangle facts
        let prof = edge_profile(&p(6), e(2, 3)).unwrap();
        assert_eq!((prof.gamma_removed, prof.gamma_subdivided), (2, 3));
        assert_eq!(prof.relation, GammaRelation::Less);

        let prof = edge_profile(&p(8), e(3, 4)).unwrap();
        assert_eq!((prof.gamma_removed, prof.gamma_subdivided), (4, 3));
        assert_eq!(prof.relation, GammaRelation::Greater);

        let k3 = families::complete(3).unwrap();
        let prof = edge_profile(&k3, e(0, 1)).unwrap();
        assert_eq!((prof.gamma_removed, prof.gamma_subdivided), (1, 2));
        assert_eq!(prof.relation, GammaRelation::Less);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_graph(&p(7)).unwrap().verdict, Verdict::Sr);
        assert_eq!(
            classify_graph(&families::complete(5).unwrap())
                .unwrap()
                .verdict,
            Verdict::Asr
        );
        assert_eq!(classify_graph(&p(6)).unwrap().verdict, Verdict::Neither);
        // P2 comes out ASR through the ordinary rule
        assert_eq!(classify_graph(&p(2)).unwrap().verdict, Verdict::Asr);
    }

    #[test]
    fn classify_rejects_bad_input() {
        let split = p(4).remove_edge(e(1, 2)).unwrap();
        assert_eq!(classify_graph(&split), Err(Error::Disconnected));
        assert_eq!(
            classify_graph(&families::complete(1).unwrap()),
            Err(Error::TooSmall { n: 1, min: 2 })
        );
    }

    #[test]
    fn weak_edge_examples() {
        let fam6 = all_gamma_sets(&p(6));
        assert!(is_weak_edge(&p(6), e(2, 3), &fam6).unwrap());
        let fam7 = all_gamma_sets(&p(7));
        assert!(!is_weak_edge(&p(7), e(2, 3), &fam7).unwrap());
        let fam4 = all_gamma_sets(&p(4));
        assert!(!is_weak_edge(&p(4), e(1, 2), &fam4).unwrap());
    }

    #[test]
    fn strong_edge_examples() {
        let p8 = p(8);
        let fam = all_gamma_sets(&p8);
        assert!(is_strong_edge(&p8, e(3, 4), &fam).unwrap());

        let star = families::star(3).unwrap();
        let fam = all_gamma_sets(&star);
        assert!(!is_strong_edge(&star, e(0, 1), &fam).unwrap());

        let p6 = p(6);
        let fam = all_gamma_sets(&p6);
        assert!(!is_strong_edge(&p6, e(0, 1), &fam).unwrap());
    }

    #[test]
    fn weak_and_strong_exclusive() {
        for g in [p(6), p(8), families::star(4).unwrap(), p(2)] {
            let fam = all_gamma_sets(&g);
            for edge in g.edges() {
                let w = is_weak_edge(&g, edge, &fam).unwrap();
                let s = is_strong_edge(&g, edge, &fam).unwrap();
                assert!(!(w && s), "edge {edge} of {g:?} both weak and strong");
            }
        }
    }

    #[test]
    fn sr_tree_check_examples() {
        assert!(sr_tree_check(&p(7)).unwrap().is_sr);

        let res = sr_tree_check(&p(6)).unwrap();
        assert!(!res.is_sr);
        assert_eq!(res.witness, Some((e(2, 3), EdgeKind::Weak)));

        let res = sr_tree_check(&p(2)).unwrap();
        assert!(!res.is_sr);
        assert_eq!(res.witness, Some((e(0, 1), EdgeKind::Strong)));

        assert_eq!(
            sr_tree_check(&families::cycle(5).unwrap()),
            Err(Error::NotATree)
        );
    }

    #[test]
    fn sr_tree_bondage_examples() {
        let star = families::star(3).unwrap();
        assert_eq!(sr_tree_bondage_edges(&star, true).unwrap().len(), 3);

        assert!(sr_tree_bondage_edges(&p(7), true).unwrap().is_empty());

        // double star: centers 0-1, leaves 2,3 on 0 and 4,5 on 1
        let ds = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        let bondage = sr_tree_bondage_edges(&ds, true).unwrap();
        assert_eq!(bondage, vec![e(0, 2), e(0, 3), e(1, 4), e(1, 5)]);

        // P6 is not an SR-tree
        assert_eq!(sr_tree_bondage_edges(&p(6), true), Err(Error::NotSrTree));
    }

    #[test]
    fn rank1_examples() {
        let k3 = families::complete(3).unwrap();
        assert_eq!(asr_rank1_verdict(&k3).unwrap().verdict, Rank1Verdict::Asr);

        let big = k3.join(&families::cycle(5).unwrap()).unwrap();
        let rep = asr_rank1_verdict(&big).unwrap();
        assert_eq!(rep.universal_count, 3);
        assert_eq!(rep.verdict, Rank1Verdict::Asr);

        let wheel = families::complete(1)
            .unwrap()
            .join(&families::cycle(5).unwrap())
            .unwrap();
        let rep = asr_rank1_verdict(&wheel).unwrap();
        assert_eq!(rep.universal_count, 1);
        assert_eq!(rep.verdict, Rank1Verdict::Neither);

        let star = families::star(4).unwrap();
        assert_eq!(
            asr_rank1_verdict(&star).unwrap().verdict,
            Rank1Verdict::SrStar
        );

        assert_eq!(
            asr_rank1_verdict(&p(4)),
            Err(Error::PreconditionGammaNotOne { gamma: 2 })
        );
    }

    #[test]
    fn partition_check_examples() {
        let k3 = families::complete(3).unwrap();
        assert!(gamma_set_partition_check(&k3, &all_gamma_sets(&k3)));

        let c6 = families::cycle(6).unwrap();
        assert!(gamma_set_partition_check(&c6, &all_gamma_sets(&c6)));

        let c4 = families::cycle(4).unwrap();
        assert!(!gamma_set_partition_check(&c4, &all_gamma_sets(&c4)));
    }

    #[test]
    fn asr_structure_examples() {
        let k5 = families::complete(5).unwrap();
        let rep = asr_structure_report(&k5).unwrap();
        assert!(!rep.has_leaf);
        assert!(rep.bondage_edges.is_empty());
        assert!(rep.partition_ok);
        assert!(rep.insensitive);

        let star = families::star(3).unwrap();
        assert!(asr_structure_report(&star).unwrap().has_leaf);

        let c6 = families::cycle(6).unwrap();
        let rep = asr_structure_report(&c6).unwrap();
        assert!(!rep.has_leaf && rep.partition_ok && rep.bondage_edges.is_empty());
    }

    #[test]
    fn weak_edge_keeps_gamma_on_removal() {
        let p6 = p(6);
        let fam = all_gamma_sets(&p6);
        for edge in p6.edges() {
            if is_weak_edge(&p6, edge, &fam).unwrap() {
                let prof = edge_profile_with(&p6, edge, &fam).unwrap();
                assert_eq!(prof.gamma_removed, prof.gamma);
            }
        }
        // a gamma-set disjoint from e still dominates G - e
        for &d in &fam.sets {
            for edge in p6.edges() {
                if d.intersection(edge.endpoints()).is_empty() {
                    let removed = p6.remove_edge(edge).unwrap();
                    assert!(is_dominating(&removed, d).unwrap());
                }
            }
        }
    }
}
