//! Independent brute-force reference implementations.
//!
//! Everything here deliberately avoids the production code paths it is
//! used to check: γ and Γ come from raw subset enumeration, tree counts
//! from Prüfer-sequence enumeration, connected-graph counts from raw
//! edge-set enumeration. The verification suites compare the fast
//! implementations against these.

use std::collections::HashSet;

use crate::canon::canonical_form;
use crate::domination::GammaFamily;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Subset enumeration is 2^n; keep it at sizes where that is instant.
pub const MAX_NAIVE_N: usize = 20;

fn dominates(g: &Graph, mask: u64) -> bool {
    g.closed_of_bits(mask) == g.vertices().bits()
}

/// γ(G) as the smallest subset size that dominates, by checking every
/// subset of every size from zero up.
pub fn naive_gamma(g: &Graph) -> Result<usize> {
    if g.n() > MAX_NAIVE_N {
        return Err(Error::CapacityExceeded {
            needed: g.n(),
            cap: MAX_NAIVE_N,
        });
    }
    for size in 0..=g.n() {
        let found =
            (0u64..1 << g.n()).any(|mask| mask.count_ones() as usize == size && dominates(g, mask));
        if found {
            return Ok(size);
        }
    }
    unreachable!("the full vertex set dominates");
}

/// Γ(G) as the filtered list of all size-γ subsets.
pub fn naive_gamma_family(g: &Graph) -> Result<GammaFamily> {
    let gamma = naive_gamma(g)?;
    let mut sets: Vec<VertexSet> = (0u64..1 << g.n())
        .filter(|m| m.count_ones() as usize == gamma && dominates(g, *m))
        .map(VertexSet::from_bits)
        .collect();
    sets.sort();
    Ok(GammaFamily { gamma, sets })
}

/// Decodes a Prüfer sequence over `0..n` into the edges of its tree.
fn tree_from_prufer(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &a in seq {
        degree[a] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &a in seq {
        let leaf = (0..n).find(|&i| degree[i] == 1).expect("a leaf remains");
        edges.push((leaf, a));
        degree[leaf] = 0;
        degree[a] -= 1;
    }
    let mut rest = (0..n).filter(|&i| degree[i] == 1);
    let (x, y) = (rest.next().unwrap(), rest.next().unwrap());
    edges.push((x, y));
    edges
}

/// Number of non-isomorphic trees on `n` vertices, by decoding all n^(n-2)
/// Prüfer sequences and deduplicating up to isomorphism.
pub fn prufer_tree_count(n: usize) -> Result<usize> {
    if !(1..=8).contains(&n) {
        return Err(Error::InvalidSize { n, min: 1, max: 8 });
    }
    if n <= 2 {
        return Ok(1);
    }
    let mut forms = HashSet::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let g = Graph::from_edges(n, &tree_from_prufer(&seq, n))?;
        forms.insert(canonical_form(&g)?);
        // odometer over {0..n-1}^(n-2)
        let mut i = 0;
        loop {
            if i == seq.len() {
                return Ok(forms.len());
            }
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
            i += 1;
        }
    }
}

/// Number of non-isomorphic connected graphs on `n` vertices, by filtering
/// all 2^C(n,2) edge sets and deduplicating up to isomorphism.
pub fn naive_connected_count(n: usize) -> Result<usize> {
    if !(1..=6).contains(&n) {
        return Err(Error::InvalidSize { n, min: 1, max: 6 });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut forms = HashSet::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        if g.is_connected() {
            forms.insert(canonical_form(&g)?);
        }
    }
    Ok(forms.len())
}
