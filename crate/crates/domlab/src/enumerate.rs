//! Exhaustive per-isomorphism-class generation of trees and connected
//! graphs at desk scale.
//!
//! Trees grow by attaching one new leaf to every vertex of every tree one
//! size down; every tree arises this way because deleting any leaf gives a
//! smaller tree. Connected graphs come from growing *all* graphs one size
//! down by a new vertex with every possible neighborhood, then filtering
//! the connected ones; intermediate levels must keep disconnected graphs
//! or cut vertices would be unreachable. Both streams deduplicate through
//! [`canonical_graph`] and emit canonical representatives in canonical
//! order. Levels are cached for the lifetime of the process since several
//! verification suites walk the same streams.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_form, canonical_graph, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_TREE_N: usize = 14;
pub const MAX_CONNECTED_N: usize = 8;

fn tree_cache() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

fn graph_cache() -> &'static Mutex<Vec<Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<Vec<Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(Vec::new()))
}

/// `g` plus a new vertex (id `g.n()`) adjacent to the vertices of `mask`.
fn augment(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|e| (e.u(), e.v())).collect();
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        edges.push((v, n));
    }
    Graph::from_edges(n + 1, &edges).expect("augmented graph is valid")
}

fn dedup_canonical(candidates: impl Iterator<Item = Graph>) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in candidates {
        let canon = canonical_graph(&g).expect("within canon cap");
        let form = canonical_form(&canon).expect("within canon cap");
        seen.entry(form).or_insert(canon);
    }
    seen.into_values().collect()
}

/// One canonical representative per isomorphism class of trees on `n`
/// vertices, in canonical-form order.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_TREE_N).contains(&n) {
        return Err(Error::InvalidSize {
            n,
            min: 1,
            max: MAX_TREE_N,
        });
    }
    let mut cache = tree_cache().lock().unwrap();
    while cache.len() < n {
        let level = cache.len() + 1;
        let next = if level == 1 {
            vec![Graph::empty(1).unwrap()]
        } else {
            let prev = cache[level - 2].clone();
            dedup_canonical(
                prev.iter()
                    .flat_map(|t| (0..t.n()).map(|v| augment(t, 1 << v))),
            )
        };
        cache.push(Arc::new(next));
    }
    Ok(cache[n - 1].as_ref().clone())
}

/// All graphs (connected or not) on `n` vertices up to isomorphism; also
/// the intermediate levels of the connected-graph stream.
pub fn all_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    if !(1..=MAX_CONNECTED_N).contains(&n) {
        return Err(Error::InvalidSize {
            n,
            min: 1,
            max: MAX_CONNECTED_N,
        });
    }
    let mut cache = graph_cache().lock().unwrap();
    while cache.len() < n {
        let level = cache.len() + 1;
        let next = if level == 1 {
            vec![Graph::empty(1).unwrap()]
        } else {
            let prev = cache[level - 2].clone();
            dedup_canonical(
                prev.iter()
                    .flat_map(|g| (0u64..1 << g.n()).map(|mask| augment(g, mask))),
            )
        };
        cache.push(Arc::new(next));
    }
    Ok(cache[n - 1].clone())
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, in canonical-form order.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    let graphs = all_graphs(n)?;
    Ok(graphs
        .iter()
        .filter(|g| g.is_connected())
        .cloned()
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use std::collections::HashSet;

    #[test]
    fn tree_counts_match_frozen_oracle_values() {
        // frozen from the Prüfer-enumeration oracle (cross-checked in the
        // oracle module's own tests)
        let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).unwrap().len(), want, "n={}", i + 1);
        }
    }

    #[test]
    fn larger_tree_counts() {
        assert_eq!(all_trees(9).unwrap().len(), 47);
        assert_eq!(all_trees(10).unwrap().len(), 106);
        assert_eq!(all_trees(11).unwrap().len(), 235);
        assert_eq!(all_trees(12).unwrap().len(), 551);
    }

    #[test]
    fn connected_graph_counts() {
        let expected = [1usize, 1, 2, 6, 21, 112];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(
                all_connected_graphs(i + 1).unwrap().len(),
                want,
                "n={}",
                i + 1
            );
        }
    }

    #[test]
    fn connected_graph_count_n7() {
        assert_eq!(all_connected_graphs(7).unwrap().len(), 853);
    }

    #[test]
    fn all_graph_counts_including_disconnected() {
        let expected = [1usize, 2, 4, 11, 34, 156, 1044];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_graphs(i + 1).unwrap().len(), want, "n={}", i + 1);
        }
    }

    #[test]
    fn tree_counts_at_the_cap() {
        assert_eq!(all_trees(13).unwrap().len(), 1301);
        assert_eq!(all_trees(14).unwrap().len(), 3159);
    }

    #[test]
    fn streams_have_no_duplicates_and_right_shapes() {
        for n in 1..=8 {
            let trees = all_trees(n).unwrap();
            let mut forms = HashSet::new();
            for t in &trees {
                assert!(t.is_tree(), "n={n}");
                assert!(forms.insert(canonical_form(t).unwrap()));
            }
        }
        for n in 1..=6 {
            let graphs = all_connected_graphs(n).unwrap();
            let mut forms = HashSet::new();
            for g in &graphs {
                assert!(g.is_connected());
                assert!(forms.insert(canonical_form(g).unwrap()));
            }
        }
    }

    #[test]
    fn stream_order_is_canonical() {
        let trees = all_trees(7).unwrap();
        let forms: Vec<_> = trees.iter().map(|t| canonical_form(t).unwrap()).collect();
        let mut sorted = forms.clone();
        sorted.sort();
        assert_eq!(forms, sorted);
    }

    #[test]
    fn size_caps() {
        assert!(all_trees(0).is_err());
        assert!(all_trees(15).is_err());
        assert!(all_connected_graphs(9).is_err());
    }
}
