//! Constructors for the named graph families, the two composite builders
//! (bridged hairy pairs and blocks of universal-clique joins), and the
//! closed-form γ / verdict values the families are known to have.

use crate::classify::Verdict;
use crate::domination::domination_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

fn check_size(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_VERTICES {
        return Err(Error::InvalidSize {
            n,
            min,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// Path on `n >= 1` vertices, ids in path order.
pub fn path(n: usize) -> Result<Graph> {
    check_size(n, 1)?;
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices, ids in cycle order.
pub fn cycle(n: usize) -> Result<Graph> {
    check_size(n, 3)?;
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete(n: usize) -> Result<Graph> {
    check_size(n, 1)?;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Complete bipartite graph with contiguous blocks `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    check_size(m, 1)?;
    check_size(n, 1)?;
    check_size(m + n, 2)?;
    let edges: Vec<_> = (0..m)
        .flat_map(|u| (m..m + n).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(m + n, &edges)
}

/// Star K_{1,n} with the center at id 0.
pub fn star(n: usize) -> Result<Graph> {
    complete_bipartite(1, n)
}

/// Two hairy graphs with chosen support vertices, connected by a path of
/// `t` internal vertices.
#[derive(Clone, Debug)]
pub struct GtSpec {
    pub h1: Graph,
    pub h2: Graph,
    /// Support vertex of `h1` the bridge path starts from.
    pub u: usize,
    /// Support vertex of `h2` the bridge path ends at.
    pub v: usize,
    /// Number of internal path vertices, at least 1.
    pub t: usize,
}

/// Builds the bridged graph: ids are the `h1` block, then the `h2` block
/// shifted by `h1.n`, then the path vertices `x_1..x_t` in order.
pub fn build_gt(spec: &GtSpec) -> Result<Graph> {
    if !spec.h1.is_hairy() {
        return Err(Error::SpecInvalid("h1 is not hairy".into()));
    }
    if !spec.h2.is_hairy() {
        return Err(Error::SpecInvalid("h2 is not hairy".into()));
    }
    if !spec.h1.supports().contains(spec.u) {
        return Err(Error::SpecInvalid(format!(
            "u={} is not a support vertex of h1",
            spec.u
        )));
    }
    if !spec.h2.supports().contains(spec.v) {
        return Err(Error::SpecInvalid(format!(
            "v={} is not a support vertex of h2",
            spec.v
        )));
    }
    if domination_number(&spec.h1).gamma < 2 {
        return Err(Error::SpecInvalid(
            "h1 must have domination number >= 2".into(),
        ));
    }
    if domination_number(&spec.h2).gamma < 2 {
        return Err(Error::SpecInvalid(
            "h2 must have domination number >= 2".into(),
        ));
    }
    if spec.t < 1 {
        return Err(Error::SpecInvalid("t must be at least 1".into()));
    }
    let n = spec.h1.n() + spec.h2.n() + spec.t;
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            needed: n,
            cap: MAX_VERTICES,
        });
    }
    let off2 = spec.h1.n();
    let path0 = off2 + spec.h2.n();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for e in spec.h1.edges() {
        edges.push((e.u(), e.v()));
    }
    for e in spec.h2.edges() {
        edges.push((e.u() + off2, e.v() + off2));
    }
    edges.push((spec.u, path0));
    for i in 0..spec.t - 1 {
        edges.push((path0 + i, path0 + i + 1));
    }
    edges.push((path0 + spec.t - 1, spec.v + off2));
    Graph::from_edges(n, &edges)
}

/// One block of a [`BmSpec`]: a clique of `clique` universal vertices
/// joined to `h`, with `s` the h-local vertices allowed to carry bridges.
#[derive(Clone, Debug)]
pub struct BmBlock {
    pub clique: usize,
    pub h: Graph,
    pub s: VertexSet,
}

/// Blocks of universal-clique joins, linked by bridge edges between their
/// declared `s` sets. `bridges` entries are `((i, x), (j, y))` with `i, j`
/// block indices and `x, y` h-local vertex ids.
#[derive(Clone, Debug)]
pub struct BmSpec {
    pub blocks: Vec<BmBlock>,
    pub bridges: Vec<((usize, usize), (usize, usize))>,
    /// The builder rejects disconnected results unless set.
    pub allow_disconnected: bool,
}

/// Builds the block graph. Ids per block are the clique vertices first,
/// then the `h` vertices; blocks are laid out in order.
pub fn build_bm(spec: &BmSpec) -> Result<Graph> {
    if spec.blocks.is_empty() {
        return Err(Error::SpecInvalid("at least one block required".into()));
    }
    for (i, b) in spec.blocks.iter().enumerate() {
        if b.clique < 3 {
            return Err(Error::SpecInvalid(format!(
                "block {i}: clique size {} is below 3",
                b.clique
            )));
        }
        if b.h.n() < 1 {
            return Err(Error::SpecInvalid(format!("block {i}: h must be nonempty")));
        }
        if !b.s.is_subset_of(b.h.vertices()) {
            return Err(Error::SpecInvalid(format!(
                "block {i}: s contains ids outside h"
            )));
        }
        if b.h.closed_neighborhood_of_set(b.s)? == b.h.vertices() {
            return Err(Error::SpecInvalid(format!(
                "block {i}: N[s] covers all of h"
            )));
        }
    }
    let offsets: Vec<usize> = spec
        .blocks
        .iter()
        .scan(0, |acc, b| {
            let off = *acc;
            *acc += b.clique + b.h.n();
            Some(off)
        })
        .collect();
    let n: usize = spec.blocks.iter().map(|b| b.clique + b.h.n()).sum();
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            needed: n,
            cap: MAX_VERTICES,
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (b, &off) in spec.blocks.iter().zip(&offsets) {
        let block = complete(b.clique)?.join(&b.h)?;
        for e in block.edges() {
            edges.push((e.u() + off, e.v() + off));
        }
    }
    for &((i, x), (j, y)) in &spec.bridges {
        if i == j {
            return Err(Error::SpecInvalid(format!(
                "bridge within block {i} is not allowed"
            )));
        }
        for (idx, local) in [(i, x), (j, y)] {
            let b = spec
                .blocks
                .get(idx)
                .ok_or_else(|| Error::SpecInvalid(format!("bridge names block {idx}")))?;
            if !b.s.contains(local) {
                return Err(Error::SpecInvalid(format!(
                    "bridge endpoint {local} is not in s of block {idx}"
                )));
            }
        }
        let global = |idx: usize, local: usize| offsets[idx] + spec.blocks[idx].clique + local;
        edges.push((global(i, x), global(j, y)));
    }
    let g = Graph::from_edges(n, &edges)?;
    if !spec.allow_disconnected && !g.is_connected() {
        return Err(Error::DisconnectedResult);
    }
    Ok(g)
}

/// A family instance with enough parameters to state its known values.
#[derive(Clone, Debug)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Hairy(Graph),
}

/// Closed-form γ: ⌈n/3⌉ for paths and cycles, 1 for completes and stars,
/// 2 for K_{m,n} with m, n ≥ 2, and |Supp(G)| for hairy graphs other
/// than K₂.
pub fn expected_gamma(family: &Family) -> Result<usize> {
    match family {
        Family::Path(n) => {
            check_size(*n, 1)?;
            Ok(n.div_ceil(3))
        }
        Family::Cycle(n) => {
            check_size(*n, 3)?;
            Ok(n.div_ceil(3))
        }
        Family::Complete(n) => {
            check_size(*n, 1)?;
            Ok(1)
        }
        Family::Star(n) => {
            check_size(*n, 1)?;
            Ok(1)
        }
        Family::CompleteBipartite(m, n) => {
            check_size(*m, 1)?;
            check_size(*n, 1)?;
            Ok(if *m == 1 || *n == 1 { 1 } else { 2 })
        }
        Family::Hairy(g) => {
            if !g.is_hairy() {
                return Err(Error::UnknownFamily("graph is not hairy".into()));
            }
            if g.n() == 2 {
                return Err(Error::UnknownFamily(
                    "the support formula excludes K2".into(),
                ));
            }
            Ok(g.supports().len())
        }
    }
}

/// What the verdict of a family member is known to be. `Unspecified`
/// marks parameter ranges with no established claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectedVerdict {
    Known(Verdict),
    Unspecified,
}

pub fn expected_verdict(family: &Family) -> Result<ExpectedVerdict> {
    use ExpectedVerdict::{Known, Unspecified};
    Ok(match family {
        Family::Path(n) => {
            check_size(*n, 1)?;
            match n {
                1 => Unspecified,
                2 => Known(Verdict::Asr),
                3 => Known(Verdict::Sr),
                n if n % 3 == 1 => Known(Verdict::Sr),
                _ => Known(Verdict::Neither),
            }
        }
        Family::Cycle(n) => {
            check_size(*n, 3)?;
            if n % 3 == 0 {
                Known(Verdict::Asr)
            } else {
                Known(Verdict::Sr)
            }
        }
        Family::Complete(n) => {
            check_size(*n, 1)?;
            // K2 = P2 included: it is anti-sub-removable as well
            if *n == 1 {
                Unspecified
            } else {
                Known(Verdict::Asr)
            }
        }
        Family::Star(n) => {
            check_size(*n, 1)?;
            if *n == 1 {
                Known(Verdict::Asr)
            } else {
                Known(Verdict::Sr)
            }
        }
        Family::CompleteBipartite(m, n) => {
            check_size(*m, 1)?;
            check_size(*n, 1)?;
            if *m.max(n) > 1 {
                Known(Verdict::Sr)
            } else {
                Known(Verdict::Asr)
            }
        }
        Family::Hairy(g) => {
            if !g.is_hairy() {
                return Err(Error::UnknownFamily("graph is not hairy".into()));
            }
            if g.n() >= 3 {
                Known(Verdict::Sr)
            } else {
                Unspecified
            }
        }
    })
}
