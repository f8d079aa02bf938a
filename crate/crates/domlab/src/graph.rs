//! Simple undirected graphs on at most [`MAX_VERTICES`] vertices.
//!
//! Graphs are immutable values: the two edit operations (edge removal and
//! edge subdivision) and the composition operators (join, corona) return
//! fresh graphs. Vertex sets are one-word bitsets, so neighborhood unions
//! and domination tests are constant-time.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the vertex count: vertex sets must fit in one `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n` of some host graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> VertexSet {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> VertexSet {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < MAX_VERTICES);
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// Orders sets as their ascending member sequences, so for equal-size sets
/// this is the lexicographic order used for gamma-family listings.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let (mut a, mut b) = (self.0, other.0);
        while a != 0 && b != 0 {
            let (x, y) = (a.trailing_zeros(), b.trailing_zeros());
            if x != y {
                return x.cmp(&y);
            }
            a &= a - 1;
            b &= b - 1;
        }
        // one is a prefix of the other; the shorter compares smaller
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Result<Edge> {
        if a == b {
            return Err(Error::NotAnEdge { u: a, v: b });
        }
        if a >= MAX_VERTICES || b >= MAX_VERTICES {
            return Err(Error::InvalidVertex {
                vertex: a.max(b),
                n: MAX_VERTICES,
            });
        }
        Ok(Edge {
            u: a.min(b),
            v: a.max(b),
        })
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> VertexSet {
        VertexSet::singleton(self.u).with(self.v)
    }

    /// The endpoint different from `w`; `w` must be an endpoint.
    pub fn other(self, w: usize) -> usize {
        debug_assert!(w == self.u || w == self.v);
        if w == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// An immutable simple undirected graph with dense vertex ids `0..n`.
///
/// Adjacency is kept as one bitmask per vertex; the representation
/// guarantees symmetry and excludes loops and multi-edges.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices, `1 <= n <= 64`.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: n,
                cap: MAX_VERTICES,
            });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// The null graph on zero vertices. Only `join` accepts it as input.
    pub fn null() -> Graph {
        Graph { n: 0, adj: vec![] }
    }

    /// Builds a graph from an edge list. Rejects loops and out-of-range
    /// ids; repeated pairs collapse (set semantics).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::InvalidVertex { vertex: a, n });
            }
            if b >= n {
                return Err(Error::InvalidVertex { vertex: b, n });
            }
            if a == b {
                return Err(Error::NotAnEdge { u: a, v: b });
            }
            g.adj[a] |= 1 << b;
            g.adj[b] |= 1 << a;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj
            .iter()
            .map(|a| a.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    fn check_set(&self, x: VertexSet) -> Result<()> {
        if x.is_subset_of(self.vertices()) {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: x.difference(self.vertices()).min().unwrap(),
                n: self.n,
            })
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    fn check_edge(&self, e: Edge) -> Result<()> {
        if self.contains_edge(e) {
            Ok(())
        } else {
            Err(Error::NotAnEdge { u: e.u(), v: e.v() })
        }
    }

    /// Edges in ascending `(u, v)` order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            let mut higher = self.adj[u] >> (u + 1) << (u + 1);
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                out.push(Edge { u, v });
            }
        }
        out
    }

    /// Open neighborhood N(u).
    pub fn neighborhood(&self, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        Ok(VertexSet(self.adj[u]))
    }

    /// Closed neighborhood N[u] = N(u) ∪ {u}.
    pub fn closed_neighborhood(&self, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        Ok(VertexSet(self.adj[u] | 1 << u))
    }

    /// N[X] = ⋃_{u∈X} N[u].
    pub fn closed_neighborhood_of_set(&self, x: VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        Ok(VertexSet(self.closed_of_bits(x.0)))
    }

    #[inline]
    pub(crate) fn adj_bits(&self, u: usize) -> u64 {
        self.adj[u]
    }

    #[inline]
    pub(crate) fn closed_bits(&self, u: usize) -> u64 {
        self.adj[u] | 1 << u
    }

    #[inline]
    pub(crate) fn closed_of_bits(&self, mut x: u64) -> u64 {
        let mut out = x;
        while x != 0 {
            let u = x.trailing_zeros() as usize;
            x &= x - 1;
            out |= self.adj[u];
        }
        out
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        self.check_vertex(u)?;
        Ok(self.adj[u].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|a| a.count_ones() as usize).collect()
    }

    /// Returns the graph with edge `e` deleted.
    pub fn remove_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        let mut adj = self.adj.clone();
        adj[e.u()] &= !(1 << e.v());
        adj[e.v()] &= !(1 << e.u());
        Ok(Graph { n: self.n, adj })
    }

    /// Returns the graph with edge `e = uv` replaced by a path `u-w-v`
    /// through a new vertex `w`, which always receives id `n`.
    pub fn subdivide_edge(&self, e: Edge) -> Result<Graph> {
        self.check_edge(e)?;
        if self.n + 1 > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: self.n + 1,
                cap: MAX_VERTICES,
            });
        }
        let w = self.n;
        let mut adj = self.adj.clone();
        adj.push(0);
        adj[e.u()] &= !(1 << e.v());
        adj[e.v()] &= !(1 << e.u());
        adj[e.u()] |= 1 << w;
        adj[e.v()] |= 1 << w;
        adj[w] = 1 << e.u() | 1 << e.v();
        Ok(Graph { n: self.n + 1, adj })
    }

    /// The sum (join) of `self` and `h`: disjoint copies plus every edge
    /// between them. `h` may be the null graph, in which case the result
    /// is a copy of `self`. Ids of `h` are shifted by `self.n`.
    pub fn join(&self, h: &Graph) -> Result<Graph> {
        let n = self.n + h.n;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: n,
                cap: MAX_VERTICES,
            });
        }
        let left = VertexSet::full(self.n).bits();
        let right = VertexSet::full(n).bits() & !left;
        let mut adj = Vec::with_capacity(n);
        for u in 0..self.n {
            adj.push(self.adj[u] | right);
        }
        for v in 0..h.n {
            adj.push(h.adj[v] << self.n | left);
        }
        Ok(Graph { n, adj })
    }

    /// The corona with K1: one new pendant leaf per vertex. The leaf of
    /// vertex `v` receives id `n + v`.
    pub fn corona(&self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::TooSmall { n: 0, min: 1 });
        }
        let n = 2 * self.n;
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                needed: n,
                cap: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u64; n];
        for u in 0..self.n {
            adj[u] = self.adj[u] | 1 << (self.n + u);
            adj[self.n + u] = 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// The subgraph induced by `x`, vertices relabeled densely in
    /// ascending order of their original ids.
    pub fn induced_subgraph(&self, x: VertexSet) -> Result<Graph> {
        self.check_set(x)?;
        if x.is_empty() {
            return Err(Error::EmptySet);
        }
        let old: Vec<usize> = x.iter().collect();
        let mut adj = vec![0u64; old.len()];
        for (i, &u) in old.iter().enumerate() {
            for (j, &v) in old.iter().enumerate() {
                if self.adj[u] >> v & 1 == 1 {
                    adj[i] |= 1 << j;
                }
            }
        }
        Ok(Graph { n: old.len(), adj })
    }

    /// Degree-1 vertices.
    pub fn leaves(&self) -> VertexSet {
        (0..self.n)
            .filter(|&u| self.adj[u].count_ones() == 1)
            .collect()
    }

    /// Leaves adjacent to `u` (the set L_G(u)).
    pub fn leaves_of(&self, u: usize) -> Result<VertexSet> {
        self.check_vertex(u)?;
        Ok(VertexSet(self.adj[u] & self.leaves().bits()))
    }

    /// Vertices adjacent to at least one leaf.
    pub fn supports(&self) -> VertexSet {
        let leaves = self.leaves().bits();
        (0..self.n).filter(|&u| self.adj[u] & leaves != 0).collect()
    }

    /// Supports adjacent to two or more leaves.
    pub fn strong_supports(&self) -> VertexSet {
        let leaves = self.leaves().bits();
        (0..self.n)
            .filter(|&u| (self.adj[u] & leaves).count_ones() > 1)
            .collect()
    }

    /// Supports adjacent to exactly one leaf.
    pub fn weak_supports(&self) -> VertexSet {
        let leaves = self.leaves().bits();
        (0..self.n)
            .filter(|&u| (self.adj[u] & leaves).count_ones() == 1)
            .collect()
    }

    /// Vertices with N[u] = V.
    pub fn universal_vertices(&self) -> VertexSet {
        let all = self.vertices().bits();
        (0..self.n)
            .filter(|&u| self.adj[u] | 1 << u == all)
            .collect()
    }

    /// Connected components as vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 1u64 << start;
            loop {
                let grown = self.closed_of_bits(comp);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut comp = 1u64;
        loop {
            let grown = self.closed_of_bits(comp);
            if grown == comp {
                break;
            }
            comp = grown;
        }
        comp == self.vertices().bits()
    }

    /// Connected and acyclic (m = n - 1).
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m() == self.n - 1 && self.is_connected()
    }

    /// Every vertex is a leaf or a support vertex.
    pub fn is_hairy(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let covered = self.leaves().union(self.supports());
        covered == self.vertices()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, e) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "])")
    }
}

/// Parses the edge-list fixture format: first line `n`, then one `u v`
/// pair per line (0-based). Blank lines and `#` comments are skipped.
/// Loops, duplicate edges and out-of-range ids are rejected.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut g: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match n {
            None => {
                let parsed = line.parse::<usize>().map_err(|_| Error::MalformedInput {
                    line: lineno,
                    reason: format!("expected vertex count, got {line:?}"),
                })?;
                if parsed == 0 || parsed > MAX_VERTICES {
                    return Err(Error::MalformedInput {
                        line: lineno,
                        reason: format!("vertex count {parsed} outside 1..={MAX_VERTICES}"),
                    });
                }
                n = Some(parsed);
                g = Some(Graph::empty(parsed)?);
            }
            Some(n) => {
                let mut it = line.split_whitespace();
                let (a, b) = match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => (a, b),
                    _ => {
                        return Err(Error::MalformedInput {
                            line: lineno,
                            reason: format!("expected \"u v\", got {line:?}"),
                        })
                    }
                };
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::MalformedInput {
                        line: lineno,
                        reason: format!("invalid vertex id {s:?}"),
                    })
                };
                let (a, b) = (parse(a)?, parse(b)?);
                if a >= n || b >= n {
                    return Err(Error::MalformedInput {
                        line: lineno,
                        reason: format!("vertex id out of range for n={n}"),
                    });
                }
                if a == b {
                    return Err(Error::MalformedInput {
                        line: lineno,
                        reason: format!("loop at vertex {a}"),
                    });
                }
                let g = g.as_mut().unwrap();
                if g.has_edge(a, b) {
                    return Err(Error::MalformedInput {
                        line: lineno,
                        reason: format!("duplicate edge {a} {b}"),
                    });
                }
                g.adj[a] |= 1 << b;
                g.adj[b] |= 1 << a;
            }
        }
    }
    g.ok_or(Error::MalformedInput {
        line: 0,
        reason: "empty input".into(),
    })
}

/// Renders a graph in the edge-list fixture format.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}
