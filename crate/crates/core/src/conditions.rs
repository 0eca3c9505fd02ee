//! Necessary conditions for spectral symmetry at `θ = π/3`.
//!
//! A failed verdict is a certificate: no orientation of the graph (or, for
//! [`triangle_balance`], this particular orientation) is spectrally
//! symmetric. The search uses them for pruning, and reports carry the
//! witness data so the pruning can be audited.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{GraphError, SpectraError};
use crate::graphs::{Digraph, Graph};
use crate::spectra::{adjacency_matrix, eigenvalues_real};

/// Slack added to the right-hand side of the trace-cube bound so that
/// a rounding error in `λ_min` can never exclude a graph wrongly.
pub const TRACE_CUBE_SLACK: f64 = 1e-6;

/// Constant in `|E(G)| ≤ 10·|V(G)|` for graphs with spectrally symmetric line graphs.
pub const LINE_GRAPH_EDGE_FACTOR: u64 = 10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FilterVerdict {
    pub name: &'static str,
    pub passed: bool,
    pub witness: Witness,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Triangles { t0: u64, t1: u64 },
    TriangleCount { t: u64 },
    TraceCube { trace_a3: u64, edges: u64, lambda_min: f64, bound: f64 },
    LineGraph {
        line_edges: u64,
        line_triangles: u64,
        triangles_ok: bool,
        edges: u64,
        vertices: u64,
        edges_ok: bool,
    },
    TournamentDegrees {
        n: u64,
        out_degree_sum: u64,
        /// `None` when the required value `(4/3)C(n,3) + C(n,2)` is not an integer.
        square_sum: Option<u64>,
        cauchy_schwarz_ok: bool,
        multisets: Vec<DegreeMultiset>,
    },
}

/// Orientation-level: a symmetric orientation has `t0 = 2·t1`.
pub fn triangle_balance(d: &Digraph) -> Result<FilterVerdict, GraphError> {
    let c = d.triangle_census()?;
    Ok(FilterVerdict {
        name: "triangle_balance",
        passed: c.t0 == 2 * c.t1,
        witness: Witness::Triangles { t0: c.t0, t1: c.t1 },
    })
}

/// Graph-level: `t0 = 2·t1` forces `t = 3·t1`.
pub fn triangles_mod3(g: &Graph) -> FilterVerdict {
    let t = g.triangle_count();
    FilterVerdict { name: "triangles_mod3", passed: t.is_multiple_of(3), witness: Witness::TriangleCount { t } }
}

/// `tr(A³) ≤ -18·m·λ_min(A)`, with `tr(A³) = 6·t(G)` computed exactly.
pub fn trace_cube_bound(g: &Graph) -> Result<FilterVerdict, SpectraError> {
    let trace_a3 = 6 * g.triangle_count();
    let m = g.edge_count() as u64;
    let lambda_min = eigenvalues_real(&adjacency_matrix(g))?.min().unwrap_or(0.0);
    let bound = -18.0 * m as f64 * lambda_min;
    Ok(FilterVerdict {
        name: "trace_cube_bound",
        passed: trace_a3 as f64 <= bound + TRACE_CUBE_SLACK,
        witness: Witness::TraceCube { trace_a3, edges: m, lambda_min, bound },
    })
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Both line-graph conditions; either failing certifies that `L(G)` has
/// no spectrally symmetric orientation. `t(L)` and `|E(L)|` come from the
/// degree formulas, so large `G` is cheap.
pub fn line_graph_bounds(g: &Graph) -> FilterVerdict {
    let degs = g.degrees();
    let line_edges: u64 = degs.iter().map(|&d| binom(d as u64, 2)).sum();
    let line_triangles = g.triangle_count() + degs.iter().map(|&d| binom(d as u64, 3)).sum::<u64>();
    let triangles_ok = line_triangles <= 6 * line_edges;
    let edges = g.edge_count() as u64;
    let vertices = g.n() as u64;
    let edges_ok = edges <= LINE_GRAPH_EDGE_FACTOR * vertices;
    FilterVerdict {
        name: "line_graph_bounds",
        passed: triangles_ok && edges_ok,
        witness: Witness::LineGraph { line_edges, line_triangles, triangles_ok, edges, vertices, edges_ok },
    }
}

/// Multiset of out-degrees as `(degree, multiplicity)` pairs, degrees descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeMultiset(Vec<(usize, usize)>);

impl DegreeMultiset {
    pub fn from_degrees(degrees: &[usize]) -> Self {
        let mut sorted = degrees.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for d in sorted {
            match parts.last_mut() {
                Some((last, count)) if *last == d => *count += 1,
                _ => parts.push((d, 1)),
            }
        }
        Self(parts)
    }

    pub fn parts(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.iter().map(|&(_, c)| c).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().map(|&(d, c)| d * c).sum()
    }

    pub fn square_sum(&self) -> usize {
        self.0.iter().map(|&(d, c)| d * d * c).sum()
    }
}

impl fmt::Display for DegreeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &(d, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c == 1 {
                write!(f, "{d}")?;
            } else {
                write!(f, "{d}^{c}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for DegreeMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `"5^2,4^5,3^2"`; a bare degree means multiplicity one.
impl FromStr for DegreeMultiset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut degrees = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (d, c) = match part.split_once('^') {
                Some((d, c)) => (d, c),
                None => (part, "1"),
            };
            let d: usize = d.trim().parse().map_err(|_| format!("bad degree '{d}'"))?;
            let c: usize = c.trim().parse().map_err(|_| format!("bad multiplicity '{c}'"))?;
            degrees.extend(std::iter::repeat_n(d, c));
        }
        if degrees.is_empty() {
            return Err("empty degree multiset".into());
        }
        Ok(Self::from_degrees(&degrees))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TournamentFeasibility {
    pub verdict: FilterVerdict,
    pub multisets: Vec<DegreeMultiset>,
}

/// Out-degree arithmetic a spectrally symmetric tournament of order `n`
/// would have to satisfy: `Σd = C(n,2)` and `Σd² = (4/3)C(n,3) + C(n,2)`.
/// Lists every multiset of `n` integers in `0..n` meeting both.
pub fn tournament_feasibility(n: usize) -> TournamentFeasibility {
    assert!(n >= 3, "tournament feasibility needs n >= 3");
    let nn = n as u64;
    let sum = binom(nn, 2);
    let four_c3 = 4 * binom(nn, 3);
    let square_sum = four_c3.is_multiple_of(3).then(|| four_c3 / 3 + sum);
    let cauchy_schwarz_ok = square_sum.is_some_and(|q| nn * q >= sum * sum);
    let multisets = match square_sum {
        Some(q) if cauchy_schwarz_ok => enumerate_degree_multisets(n, sum as usize, q as usize, n - 1),
        _ => Vec::new(),
    };
    let verdict = FilterVerdict {
        name: "tournament_feasibility",
        passed: !multisets.is_empty(),
        witness: Witness::TournamentDegrees {
            n: nn,
            out_degree_sum: sum,
            square_sum,
            cauchy_schwarz_ok,
            multisets: multisets.clone(),
        },
    };
    TournamentFeasibility { verdict, multisets }
}

/// All nonincreasing sequences of `len` integers in `0..=max` with the given
/// sum and square sum.
fn enumerate_degree_multisets(len: usize, sum: usize, square_sum: usize, max: usize) -> Vec<DegreeMultiset> {
    fn feasible(k: usize, s: usize, q: usize, cap: usize) -> bool {
        if s > k * cap {
            return false;
        }
        if k == 0 {
            return s == 0 && q == 0;
        }
        // smallest square sum: as balanced as possible
        let (a, b) = (s / k, s % k);
        let min_q = (k - b) * a * a + b * (a + 1) * (a + 1);
        // largest: as many copies of `cap` as fit
        let (t, rest) = s.checked_div(cap).map_or((0, 0), |t| (t, s % cap));
        let max_q = t * cap * cap + rest * rest;
        min_q <= q && q <= max_q
    }
    fn go(k: usize, s: usize, q: usize, cap: usize, acc: &mut Vec<usize>, out: &mut Vec<DegreeMultiset>) {
        if k == 0 {
            if s == 0 && q == 0 {
                out.push(DegreeMultiset::from_degrees(acc));
            }
            return;
        }
        for d in (0..=cap.min(s)).rev() {
            if d * d > q || !feasible(k - 1, s - d, q - d * d, d) {
                continue;
            }
            acc.push(d);
            go(k - 1, s - d, q - d * d, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(len, sum, square_sum, max, &mut Vec::new(), &mut out);
    out
}
