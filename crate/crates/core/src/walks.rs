//! Closed-walk values at `θ = π/3`, computed by explicit enumeration.
//!
//! The value of a walk `w0 w1 … wr` is the product of the entries
//! `H_{w(i-1) w(i)}`. Summing over all closed walks of length `r` gives
//! `tr(H^r)`. This module never multiplies matrices: walks are extended
//! vertex by vertex and values are accumulated exactly, so it serves as an
//! independent check of the trace computations in [`crate::eisenstein`].

use rayon::prelude::*;
use serde::Serialize;

use crate::eisenstein::{EisensteinInt, ExactHermitianMatrix};
use crate::error::{ArithmeticError, WalkError};
use crate::graphs::Digraph;

/// Limits on enumeration size; worst case is about `n·Δ^r` steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WalkCaps {
    pub max_length: usize,
    pub max_order: usize,
}

impl Default for WalkCaps {
    fn default() -> Self {
        Self { max_length: 9, max_order: 10 }
    }
}

impl WalkCaps {
    fn check(&self, d: &Digraph, r: usize) -> Result<(), WalkError> {
        if r > self.max_length {
            return Err(WalkError::LengthCap { r, cap: self.max_length });
        }
        if d.n() > self.max_order {
            return Err(WalkError::OrderCap { n: d.n(), cap: self.max_order });
        }
        Ok(())
    }
}

/// Vertex sequence `w0 … wr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk(Vec<usize>);

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Result<Self, WalkError> {
        if vertices.is_empty() {
            return Err(WalkError::Empty);
        }
        Ok(Self(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_closed(&self) -> bool {
        self.0.first() == self.0.last()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `None` unless `self` ends where `other` starts.
    pub fn concat(&self, other: &Walk) -> Option<Self> {
        if self.0.last() != other.0.first() {
            return None;
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0[1..]);
        Some(Self(v))
    }
}

/// Product of `H`-entries along the walk.
pub fn walk_value(d: &Digraph, w: &Walk) -> Result<EisensteinInt, WalkError> {
    let h = ExactHermitianMatrix::from_digraph(d);
    walk_value_in(&h, w)
}

fn walk_value_in(h: &ExactHermitianMatrix, w: &Walk) -> Result<EisensteinInt, WalkError> {
    let n = h.n();
    if let Some(&bad) = w.0.iter().find(|&&v| v >= n) {
        return Err(WalkError::VertexOutOfRange { vertex: bad, n });
    }
    let mut value = EisensteinInt::ONE;
    for (index, pair) in w.0.windows(2).enumerate() {
        let entry = h.entry(pair[0], pair[1]);
        if entry.is_zero() {
            return Err(WalkError::InvalidStep { index, from: pair[0], to: pair[1] });
        }
        value = value.try_mul(entry)?;
    }
    Ok(value)
}

/// Adjacency lists with the `H`-entry attached to each step.
struct StepTable {
    steps: Vec<Vec<(usize, EisensteinInt)>>,
}

impl StepTable {
    fn new(d: &Digraph) -> Self {
        let h = ExactHermitianMatrix::from_digraph(d);
        let n = d.n();
        let steps = (0..n)
            .map(|u| (0..n).filter_map(|v| Some((v, h.entry(u, v))).filter(|(_, e)| !e.is_zero())).collect())
            .collect();
        Self { steps }
    }
}

/// Sums of walk values, split by how often a marked vertex is visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Tally {
    all: EisensteinInt,
    at_least_once: EisensteinInt,
    exactly_once: EisensteinInt,
}

impl Tally {
    fn merge(self, o: Self) -> Result<Self, ArithmeticError> {
        Ok(Self {
            all: self.all.try_add(o.all)?,
            at_least_once: self.at_least_once.try_add(o.at_least_once)?,
            exactly_once: self.exactly_once.try_add(o.exactly_once)?,
        })
    }
}

/// Enumerates closed walks of length `r` starting at `start`. Visits of
/// `mark` are counted over positions `0..r` (the closing vertex is the
/// start again and is not counted twice).
fn tally_from(table: &StepTable, start: usize, r: usize, mark: Option<usize>) -> Result<Tally, ArithmeticError> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        table: &StepTable,
        start: usize,
        at: usize,
        remaining: usize,
        value: EisensteinInt,
        visits: usize,
        mark: Option<usize>,
        tally: &mut Tally,
    ) -> Result<(), ArithmeticError> {
        if remaining == 0 {
            if at == start {
                tally.all = tally.all.try_add(value)?;
                if visits >= 1 {
                    tally.at_least_once = tally.at_least_once.try_add(value)?;
                }
                if visits == 1 {
                    tally.exactly_once = tally.exactly_once.try_add(value)?;
                }
            }
            return Ok(());
        }
        for &(next, entry) in &table.steps[at] {
            // the final step must land on `start`; the landing is not a new visit
            let counted = remaining > 1 && Some(next) == mark;
            go(table, start, next, remaining - 1, value.try_mul(entry)?, visits + counted as usize, mark, tally)?;
        }
        Ok(())
    }
    let mut tally = Tally::default();
    let visits = (Some(start) == mark) as usize;
    go(table, start, start, r, EisensteinInt::ONE, visits, mark, &mut tally)?;
    Ok(tally)
}

fn tally_all(d: &Digraph, r: usize, mark: Option<usize>) -> Result<Tally, ArithmeticError> {
    let table = StepTable::new(d);
    (0..d.n())
        .into_par_iter()
        .map(|s| tally_from(&table, s, r, mark))
        .try_reduce(Tally::default, Tally::merge)
}

/// Sum of values over all closed walks of length `r`; equals `tr(H^r)`.
pub fn closed_walk_set_value(d: &Digraph, r: usize, caps: WalkCaps) -> Result<EisensteinInt, WalkError> {
    caps.check(d, r)?;
    if r == 0 {
        return Ok(EisensteinInt::from_int(d.n() as i128));
    }
    Ok(tally_all(d, r, None)?.all)
}

/// Values of the closed `r`-walks visiting `v` at least once and exactly once.
pub fn vertex_restricted_values(
    d: &Digraph,
    v: usize,
    r: usize,
    caps: WalkCaps,
) -> Result<(EisensteinInt, EisensteinInt), WalkError> {
    caps.check(d, r)?;
    if v >= d.n() {
        return Err(WalkError::VertexOutOfRange { vertex: v, n: d.n() });
    }
    if r == 0 {
        return Ok((EisensteinInt::ONE, EisensteinInt::ONE));
    }
    let t = tally_all(d, r, Some(v))?;
    Ok((t.at_least_once, t.exactly_once))
}

/// One row of [`verify_odd_walk_lemma`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddWalkRow {
    pub r: usize,
    /// Value of walks visiting `v` at least once (real part; the value is real).
    pub at_least_once: i128,
    /// Value of walks visiting `v` exactly once.
    pub exactly_once: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddWalkReport {
    pub vertex: usize,
    pub rows: Vec<OddWalkRow>,
    /// Either both columns vanish on the whole range, or their first
    /// nonzero entries occur at the same `r`.
    pub consistent: bool,
    pub all_zero: bool,
}

/// Tabulates both walk values for odd `r ≤ r_max` and checks that the
/// at-least-once and exactly-once sequences vanish together.
pub fn verify_odd_walk_lemma(d: &Digraph, v: usize, r_max: usize, caps: WalkCaps) -> Result<OddWalkReport, WalkError> {
    let mut rows = Vec::new();
    for r in (1..=r_max).step_by(2) {
        let (ge, eq) = vertex_restricted_values(d, v, r, caps)?;
        for x in [ge, eq] {
            if !x.is_real() {
                return Err(ArithmeticError::Inconsistent(format!("walk-set value {x} is not real")).into());
            }
        }
        rows.push(OddWalkRow { r, at_least_once: ge.a, exactly_once: eq.a });
    }
    let first_ge = rows.iter().find(|row| row.at_least_once != 0).map(|row| row.r);
    let first_eq = rows.iter().find(|row| row.exactly_once != 0).map(|row| row.r);
    Ok(OddWalkReport { vertex: v, consistent: first_ge == first_eq, all_zero: first_ge.is_none() && first_eq.is_none(), rows })
}
