//! Brute-force canonical forms for small graphs and digraphs, and
//! isomorph-free generation by one-vertex extension.
//!
//! The canonical form is the lexicographically least code over all `n!`
//! relabelings. The code lists vertex pairs column by column,
//! `(0,1), (0,2), (1,2), (0,3), …`, so the symbols of column `k` depend
//! only on the first `k + 1` placed vertices; partial labelings whose
//! prefix already exceeds the best code are abandoned. The result is the
//! same as scanning every permutation.

use std::collections::BTreeMap;

use crate::error::SearchError;
use crate::graphs::{Digraph, Graph};

/// Largest order accepted by the canonical-form routines.
pub const CANON_MAX_N: usize = 9;
/// Largest order for which every graph is generated.
pub const GRAPH_GEN_MAX_N: usize = 8;
/// Largest order for which every tournament is generated.
pub const TOURNAMENT_GEN_MAX_N: usize = 7;

/// Least code and a labeling achieving it: `perm[k]` is the original
/// vertex placed at canonical position `k`.
fn least_code(n: usize, cell: impl Fn(usize, usize) -> u8) -> (Vec<u8>, Vec<usize>) {
    struct State<F> {
        n: usize,
        cell: F,
        cur: Vec<u8>,
        perm: Vec<usize>,
        used: Vec<bool>,
        best: Option<(Vec<u8>, Vec<usize>)>,
    }

    impl<F: Fn(usize, usize) -> u8> State<F> {
        /// Returns true if `best` was replaced somewhere below this node.
        fn dfs(&mut self, k: usize, mut strictly_less: bool) -> bool {
            if k == self.n {
                if strictly_less || self.best.is_none() {
                    self.best = Some((self.cur.clone(), self.perm.clone()));
                    return true;
                }
                return false;
            }
            let mut updated = false;
            let start = k * k.saturating_sub(1) / 2;
            for v in 0..self.n {
                if self.used[v] {
                    continue;
                }
                self.used[v] = true;
                self.perm.push(v);
                for i in 0..k {
                    let sym = (self.cell)(self.perm[i], v);
                    self.cur.push(sym);
                }
                let rel = match &self.best {
                    None => std::cmp::Ordering::Less,
                    Some(_) if strictly_less => std::cmp::Ordering::Less,
                    Some((best, _)) => self.cur[start..].cmp(&best[start..start + k]),
                };
                if rel != std::cmp::Ordering::Greater && self.dfs(k + 1, rel == std::cmp::Ordering::Less) {
                    updated = true;
                    // the new best shares this node's prefix
                    strictly_less = false;
                }
                self.cur.truncate(start);
                self.perm.pop();
                self.used[v] = false;
            }
            updated
        }
    }

    let mut st = State {
        n,
        cell,
        cur: Vec::with_capacity(n * n / 2),
        perm: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
    };
    st.dfs(0, false);
    st.best.expect("at least one labeling")
}

fn check_order(n: usize, cap: usize, what: &'static str) -> Result<(), SearchError> {
    if n > cap {
        return Err(SearchError::OrderCapExceeded { n, cap, what });
    }
    Ok(())
}

/// Relabeled copy of `g` with the least graph6 bit string.
pub fn canonical_graph(g: &Graph) -> Result<Graph, SearchError> {
    check_order(g.n(), CANON_MAX_N, "canonical form")?;
    let (_, perm) = least_code(g.n(), |a, b| g.has_edge(a, b) as u8);
    let mut inv = vec![0; g.n()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v] = k;
    }
    Ok(Graph::from_pairs_dedup(g.n(), g.edges().iter().map(|&(u, v)| (inv[u], inv[v]))))
}

fn digraph_cell(d: &Digraph) -> impl Fn(usize, usize) -> u8 + '_ {
    let n = d.n();
    let m = d.multiplicity_matrix();
    // pair (i, k), i placed before k: bit for i -> k, then bit for k -> i
    move |a, b| 2 * (m[a * n + b] > 0) as u8 + (m[b * n + a] > 0) as u8
}

/// Relabeled copy of `d` with the least arc-indicator code. Arc
/// multiplicities are ignored.
pub fn canonical_digraph(d: &Digraph) -> Result<Digraph, SearchError> {
    check_order(d.n(), CANON_MAX_N, "canonical form")?;
    let (_, perm) = least_code(d.n(), digraph_cell(d));
    let mut inv = vec![0; d.n()];
    for (k, &v) in perm.iter().enumerate() {
        inv[v] = k;
    }
    Ok(d.permute(&inv))
}

/// Canonical code of `d`; equal codes iff isomorphic (for simple digraphs).
pub fn digraph_code(d: &Digraph) -> Result<Vec<u8>, SearchError> {
    check_order(d.n(), CANON_MAX_N, "canonical form")?;
    Ok(least_code(d.n(), digraph_cell(d)).0)
}

pub fn graph_code(g: &Graph) -> Result<Vec<u8>, SearchError> {
    check_order(g.n(), CANON_MAX_N, "canonical form")?;
    Ok(least_code(g.n(), |a, b| g.has_edge(a, b) as u8).0)
}

/// One canonical representative per isomorphism class of graphs on `n`
/// vertices, ordered by canonical code.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>, SearchError> {
    check_order(n, GRAPH_GEN_MAX_N, "graph generation")?;
    let mut reps = vec![Graph::empty(0)];
    for order in 1..=n {
        let new = order - 1;
        let mut next = BTreeMap::new();
        for g in &reps {
            for mask in 0u32..1 << new {
                let edges = g
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..new).filter(|&u| mask >> u & 1 == 1).map(|u| (u, new)));
                let h = Graph::from_pairs_dedup(order, edges);
                next.entry(graph_code(&h)?).or_insert_with(|| h);
            }
        }
        reps = next.into_values().map(|g| canonical_graph(&g)).collect::<Result<_, _>>()?;
    }
    Ok(reps)
}

/// One canonical representative per isomorphism class of tournaments on
/// `n` vertices, ordered by canonical code.
pub fn enumerate_tournaments(n: usize) -> Result<Vec<Digraph>, SearchError> {
    check_order(n, TOURNAMENT_GEN_MAX_N, "tournament generation (ingest a digraph6 catalog instead)")?;
    let mut reps = vec![Digraph::empty(0)];
    for order in 1..=n {
        let new = order - 1;
        let mut next = BTreeMap::new();
        for t in &reps {
            for mask in 0u32..1 << new {
                let mut arcs = t.arcs().to_vec();
                arcs.extend((0..new).map(|u| if mask >> u & 1 == 1 { (u, new) } else { (new, u) }));
                let d = Digraph::from_sorted_unchecked(order, arcs);
                next.entry(digraph_code(&d)?).or_insert_with(|| d);
            }
        }
        reps = next.into_values().map(|d| canonical_digraph(&d)).collect::<Result<_, _>>()?;
    }
    Ok(reps)
}
