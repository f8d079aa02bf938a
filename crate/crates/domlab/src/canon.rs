//! Canonical forms for isomorphism-exact deduplication of small graphs.
//!
//! The canonical form of a graph is the minimum upper-triangle adjacency
//! bit string (column-major, the graph6 bit order) over all vertex
//! orderings compatible with the stable neighborhood-refinement partition.
//! The search prunes on the best string prefix found so far and on orbits
//! of the automorphisms it discovers along the way, which keeps highly
//! symmetric inputs (stars, cliques, cocktail-party graphs) cheap.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Canonicalization is exact but exponential in the worst case; this cap
/// keeps it comfortably inside desk scale.
pub const MAX_CANON_N: usize = 14;

/// Byte encoding: vertex count, then the canonical bit string packed
/// MSB-first. Equal forms ⟺ isomorphic graphs (within the size cap).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }
}

/// Iterated neighborhood refinement. Colors are ranks of sorted invariant
/// keys, so they depend only on the isomorphism class, never on labels.
fn wl_colors(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut degrees: Vec<usize> = g.degrees();
    let mut uniq: Vec<usize> = degrees.clone();
    uniq.sort_unstable();
    uniq.dedup();
    let mut colors: Vec<usize> = degrees
        .drain(..)
        .map(|d| uniq.binary_search(&d).unwrap())
        .collect();
    let mut distinct = uniq.len();
    loop {
        let mut keys: Vec<(usize, Vec<usize>)> = Vec::with_capacity(n);
        for u in 0..n {
            let mut nb: Vec<usize> = g
                .neighborhood(u)
                .expect("valid vertex")
                .iter()
                .map(|v| colors[v])
                .collect();
            nb.sort_unstable();
            keys.push((colors[u], nb));
        }
        let mut uniq = keys.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() == distinct {
            return colors;
        }
        distinct = uniq.len();
        colors = keys
            .iter()
            .map(|k| uniq.binary_search(k).unwrap())
            .collect();
    }
}

struct Canon<'g> {
    g: &'g Graph,
    n: usize,
    total_bits: u32,
    colors: Vec<usize>,
    /// Color class required at each position.
    class_at_pos: Vec<usize>,
    order: Vec<usize>,
    used: u64,
    best: Option<u128>,
    best_order: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl<'g> Canon<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.n();
        let colors = wl_colors(g);
        let num_colors = colors.iter().max().map_or(0, |c| c + 1);
        let mut class_at_pos = Vec::with_capacity(n);
        for c in 0..num_colors {
            for _ in colors.iter().filter(|&&x| x == c) {
                class_at_pos.push(c);
            }
        }
        Canon {
            g,
            n,
            total_bits: (n * n.saturating_sub(1) / 2) as u32,
            colors,
            class_at_pos,
            order: Vec::with_capacity(n),
            used: 0,
            best: None,
            best_order: Vec::new(),
            generators: Vec::new(),
        }
    }

    /// Adjacency bits of `v` against the already placed prefix, first
    /// placed vertex in the most significant position.
    fn column_bits(&self, v: usize) -> u64 {
        let depth = self.order.len();
        let mut bits = 0u64;
        for (i, &u) in self.order.iter().enumerate() {
            if self.g.has_edge(u, v) {
                bits |= 1 << (depth - 1 - i);
            }
        }
        bits
    }

    /// Is `v` reachable from an already tried candidate by automorphisms
    /// that fix the current prefix pointwise? Such subtrees repeat work
    /// already done and can be skipped.
    fn pruned_by_orbit(&self, tried: &[usize], v: usize) -> bool {
        if tried.is_empty() || self.generators.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for sigma in &self.generators {
            if self.order.iter().any(|&u| sigma[u] != u) {
                continue;
            }
            for (x, &sx) in sigma.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, sx));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == rv)
    }

    fn search(&mut self, acc: u128) {
        let depth = self.order.len();
        if depth == self.n {
            match self.best {
                None => {
                    self.best = Some(acc);
                    self.best_order = self.order.clone();
                }
                Some(b) if acc < b => {
                    self.best = Some(acc);
                    self.best_order = self.order.clone();
                }
                Some(b) => {
                    debug_assert_eq!(acc, b, "worse completions are pruned earlier");
                    // two orderings with equal strings yield an automorphism
                    let mut sigma = vec![0usize; self.n];
                    for p in 0..self.n {
                        sigma[self.best_order[p]] = self.order[p];
                    }
                    if sigma.iter().enumerate().any(|(i, &x)| i != x)
                        && !self.generators.contains(&sigma)
                    {
                        self.generators.push(sigma);
                    }
                }
            }
            return;
        }
        let want = self.class_at_pos[depth];
        let mut candidates: Vec<(u64, usize)> = (0..self.n)
            .filter(|&v| self.used >> v & 1 == 0 && self.colors[v] == want)
            .map(|v| (self.column_bits(v), v))
            .collect();
        candidates.sort_unstable();
        let known_bits = (depth * (depth + 1) / 2) as u32;
        let mut tried: Vec<usize> = Vec::new();
        for (col, v) in candidates {
            if self.pruned_by_orbit(&tried, v) {
                continue;
            }
            tried.push(v);
            let acc2 = acc | (col as u128) << (self.total_bits - known_bits);
            if let Some(b) = self.best {
                let unknown = self.total_bits - known_bits;
                if acc2 >> unknown > b >> unknown {
                    continue;
                }
            }
            self.order.push(v);
            self.used |= 1 << v;
            self.search(acc2);
            self.order.pop();
            self.used &= !(1 << v);
        }
    }

    fn run(mut self) -> (u128, Vec<usize>) {
        self.search(0);
        (self.best.expect("at least one ordering"), self.best_order)
    }
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > MAX_CANON_N {
        return Err(Error::CapacityExceeded {
            needed: g.n(),
            cap: MAX_CANON_N,
        });
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    check_cap(g)?;
    let n = g.n();
    if n == 0 {
        return Ok(CanonicalForm(vec![0]));
    }
    let (string, _) = Canon::new(g).run();
    let total = (n * (n - 1) / 2) as u32;
    let mut bytes = vec![n as u8];
    let mut p = 0u32;
    while p < total {
        let mut byte = 0u8;
        for k in 0..8 {
            if p + k < total && string >> (total - 1 - (p + k)) & 1 == 1 {
                byte |= 1 << (7 - k);
            }
        }
        bytes.push(byte);
        p += 8;
    }
    Ok(CanonicalForm(bytes))
}

/// The canonically relabeled copy of `g`: vertex at canonical position p
/// becomes vertex p. Two graphs are isomorphic iff their canonical graphs
/// are equal as labeled graphs.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    check_cap(g)?;
    if g.n() == 0 {
        return Ok(Graph::null());
    }
    let (_, order) = Canon::new(g).run();
    let mut pos = vec![0usize; g.n()];
    for (p, &v) in order.iter().enumerate() {
        pos[v] = p;
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|e| (pos[e.u()], pos[e.v()]))
        .collect();
    Graph::from_edges(g.n(), &edges)
}
