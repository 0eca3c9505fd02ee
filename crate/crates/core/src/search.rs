//! Exhaustive search for spectrally symmetric orientations.
//!
//! An orientation of a graph `G` with sorted edge list `e_0 … e_{m-1}` is
//! identified by an `m`-bit mask: bit `k` set means `e_k = {u, v}` (with
//! `u < v`) is oriented `u -> v`. The id space `0..2^m` is split into
//! contiguous ranges that are searched independently; partial results are
//! merged with a commutative, associative fold, so reports do not depend
//! on the number of workers.

use std::collections::BTreeMap;
use std::io::BufRead;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::canonical_graph;
use crate::conditions::{trace_cube_bound, triangle_balance, triangles_mod3, DegreeMultiset, FilterVerdict};
use crate::eisenstein::{exact_hermitian, CharPoly};
use crate::error::{ArithmeticError, FormatError, SearchError};
use crate::format::{parse_digraph6_line, parse_graph6_line, to_digraph6, to_graph6};
use crate::graphs::{Digraph, Graph};
use crate::report::{ratio_string, SCHEMA_VERSION};

pub const DEFAULT_EDGE_CAP: usize = 24;
/// Hard ceiling: ids are stored in a `u64`.
pub const MAX_EDGE_CAP: usize = 40;

/// Orientation bitmask relative to `graph.edges()`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientationId(pub u64);

impl OrientationId {
    pub fn decode(self, g: &Graph) -> Digraph {
        let arcs = g
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if self.0 >> k & 1 == 1 { (u, v) } else { (v, u) })
            .collect();
        Digraph::from_sorted_unchecked(g.n(), arcs)
    }

    /// `None` unless `d` is an orientation of `g`.
    pub fn encode(g: &Graph, d: &Digraph) -> Option<Self> {
        if d.n() != g.n() || d.arc_count() != g.edge_count() || !d.is_oriented() {
            return None;
        }
        let mut id = 0u64;
        for (k, &(u, v)) in g.edges().iter().enumerate() {
            if d.has_arc(u, v) {
                id |= 1 << k;
            } else if !d.has_arc(v, u) {
                return None;
            }
        }
        Some(Self(id))
    }

    /// Id of the orientation with every arc reversed.
    pub fn reversed(self, m: usize) -> Self {
        Self(!self.0 & mask_all(m))
    }
}

impl Serialize for OrientationId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(&self.0)
    }
}

fn mask_all(m: usize) -> u64 {
    if m == 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn check_edge_cap(g: &Graph, cap: usize) -> Result<(), SearchError> {
    let cap = cap.min(MAX_EDGE_CAP);
    if g.edge_count() > cap {
        return Err(SearchError::EdgeCapExceeded { edges: g.edge_count(), cap });
    }
    Ok(())
}

/// All `2^m` orientations in increasing id order.
pub fn enumerate_orientations(
    g: &Graph,
    edge_cap: usize,
) -> Result<impl Iterator<Item = (OrientationId, Digraph)> + '_, SearchError> {
    check_edge_cap(g, edge_cap)?;
    Ok((0..1u64 << g.edge_count()).map(move |id| (OrientationId(id), OrientationId(id).decode(g))))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Apply graph-level and per-orientation necessary conditions.
    pub filters: bool,
    /// Report bipartite graphs as fully symmetric without enumerating.
    pub skip_bipartite: bool,
    /// Compute verdicts only; never enumerate orientations.
    pub filters_only: bool,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    pub edge_cap: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { filters: true, skip_bipartite: true, filters_only: false, jobs: 1, edge_cap: DEFAULT_EDGE_CAP }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchStatus {
    Enumerated,
    BipartiteSkipped,
    PrunedByGraphFilter,
    FiltersOnly,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EquivalenceClass {
    pub key: CharPoly,
    /// Smallest orientation id in the class.
    pub representative: OrientationId,
    pub count: u64,
}

/// Outcome of searching one graph. Serialized as one JSON line.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SurveyReport {
    pub schema_version: u32,
    pub command: &'static str,
    /// graph6 of the graph exactly as searched; orientation ids refer to its edge order.
    pub graph: String,
    /// graph6 of the canonical relabeling, when `n` is small enough.
    pub canonical_graph: Option<String>,
    pub n: usize,
    pub m: usize,
    pub bipartite: bool,
    pub limit_density: String,
    pub verdicts: Vec<FilterVerdict>,
    pub status: SearchStatus,
    pub orientations_total: u64,
    pub orientations_tested: u64,
    pub pruned_by_triangle_balance: u64,
    pub symmetric_orientations: u64,
    pub classes: Vec<EquivalenceClass>,
    pub error: Option<String>,
    /// The error came from exact arithmetic rather than a cap or malformed input.
    pub internal_error: bool,
    pub wall_time_ms: u64,
}

impl SurveyReport {
    fn blank(g: &Graph) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: "search",
            graph: to_graph6(g),
            canonical_graph: canonical_graph(g).ok().map(|c| to_graph6(&c)),
            n: g.n(),
            m: g.edge_count(),
            bipartite: g.is_bipartite(),
            limit_density: ratio_string(g.limit_density()),
            verdicts: Vec::new(),
            status: SearchStatus::Enumerated,
            orientations_total: if g.edge_count() < 64 { 1u64 << g.edge_count() } else { u64::MAX },
            orientations_tested: 0,
            pruned_by_triangle_balance: 0,
            symmetric_orientations: 0,
            classes: Vec::new(),
            error: None,
            internal_error: false,
            wall_time_ms: 0,
        }
    }

    fn failed(key: String, message: String) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: "search",
            graph: key,
            canonical_graph: None,
            n: 0,
            m: 0,
            bipartite: false,
            limit_density: "0/1".into(),
            verdicts: Vec::new(),
            status: SearchStatus::Error,
            orientations_total: 0,
            orientations_tested: 0,
            pruned_by_triangle_balance: 0,
            symmetric_orientations: 0,
            classes: Vec::new(),
            error: Some(message),
            internal_error: false,
            wall_time_ms: 0,
        }
    }

    /// At least one spectrally symmetric orientation.
    pub fn is_positive(&self) -> bool {
        self.symmetric_orientations > 0
    }

    /// Copy with timing zeroed, for reproducibility comparisons.
    pub fn without_timing(&self) -> Self {
        Self { wall_time_ms: 0, ..self.clone() }
    }
}

/// Partial result over a range of orientation ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Tally {
    tested: u64,
    pruned: u64,
    symmetric: u64,
    /// key -> (smallest id, count)
    classes: BTreeMap<CharPoly, (u64, u64)>,
}

impl Tally {
    fn merge(mut self, other: Self) -> Self {
        self.tested += other.tested;
        self.pruned += other.pruned;
        self.symmetric += other.symmetric;
        for (key, (rep, count)) in other.classes {
            let e = self.classes.entry(key).or_insert((rep, 0));
            e.0 = e.0.min(rep);
            e.1 += count;
        }
        self
    }
}

fn search_range(g: &Graph, ids: std::ops::Range<u64>, filters: bool) -> Result<Tally, SearchError> {
    let mut t = Tally::default();
    for id in ids {
        let d = OrientationId(id).decode(g);
        t.tested += 1;
        if filters && !triangle_balance(&d)?.passed {
            t.pruned += 1;
            continue;
        }
        let h = exact_hermitian(&d);
        if h.first_nonzero_odd_trace()?.is_none() {
            t.symmetric += 1;
            let key = h.char_poly()?;
            if !key.has_symmetric_roots() {
                return Err(ArithmeticError::Inconsistent(format!(
                    "orientation {id}: odd traces vanish but characteristic polynomial {key} is not even/odd"
                ))
                .into());
            }
            let e = t.classes.entry(key).or_insert((id, 0));
            e.0 = e.0.min(id);
            e.1 += 1;
        }
    }
    Ok(t)
}

fn search_all(g: &Graph, filters: bool, jobs: usize) -> Result<Tally, SearchError> {
    let total = 1u64 << g.edge_count();
    if jobs <= 1 {
        return search_range(g, 0..total, filters);
    }
    let chunks = (jobs as u64 * 8).min(total);
    let size = total.div_ceil(chunks);
    let ranges: Vec<_> = (0..chunks).map(|c| c * size..((c + 1) * size).min(total)).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
    pool.install(|| {
        ranges
            .into_par_iter()
            .map(|r| search_range(g, r, filters))
            .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))
    })
}

/// Searches every orientation of `g` for exact spectral symmetry.
pub fn find_ss_orientations(g: &Graph, opts: &SearchOptions) -> Result<SurveyReport, SearchError> {
    check_edge_cap(g, opts.edge_cap)?;
    let started = Instant::now();
    let mut report = SurveyReport::blank(g);

    report.verdicts.push(triangles_mod3(g));
    report.verdicts.push(trace_cube_bound(g).map_err(|e| ArithmeticError::Inconsistent(e.to_string()))?);
    let graph_filters_pass = report.verdicts.iter().all(|v| v.passed);

    if report.bipartite && opts.skip_bipartite {
        report.status = SearchStatus::BipartiteSkipped;
        report.symmetric_orientations = report.orientations_total;
    } else if opts.filters_only {
        report.status = SearchStatus::FiltersOnly;
    } else if opts.filters && !graph_filters_pass {
        report.status = SearchStatus::PrunedByGraphFilter;
    } else {
        let tally = search_all(g, opts.filters, opts.jobs)?;
        report.orientations_tested = tally.tested;
        report.pruned_by_triangle_balance = tally.pruned;
        report.symmetric_orientations = tally.symmetric;
        let mut classes: Vec<_> = tally
            .classes
            .into_iter()
            .map(|(key, (rep, count))| EquivalenceClass { key, representative: OrientationId(rep), count })
            .collect();
        classes.sort_by_key(|c| c.representative);
        report.classes = classes;
    }
    report.wall_time_ms = started.elapsed().as_millis() as u64;
    Ok(report)
}

/// Graph catalog: one graph6 string per line; blank lines are skipped.
pub fn read_graph6_catalog(reader: impl BufRead) -> impl Iterator<Item = Result<Graph, FormatError>> {
    reader.lines().enumerate().filter_map(|(i, line)| match line {
        Err(e) => Some(Err(FormatError::new(i + 1, 1, e.to_string()))),
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(parse_graph6_line(l.trim(), i + 1)),
    })
}

/// Runs [`find_ss_orientations`] on every graph. Failures are recorded in
/// the corresponding report and the stream continues.
pub fn survey_catalog<'a, I>(graphs: I, opts: &'a SearchOptions) -> impl Iterator<Item = SurveyReport> + 'a
where
    I: IntoIterator<Item = Result<Graph, FormatError>>,
    I::IntoIter: 'a,
{
    graphs.into_iter().map(move |entry| match entry {
        Err(e) => SurveyReport::failed(String::new(), e.to_string()),
        Ok(g) => find_ss_orientations(&g, opts).unwrap_or_else(|e| {
            let mut r = SurveyReport::blank(&g);
            r.status = SearchStatus::Error;
            r.error = Some(e.to_string());
            r.internal_error = matches!(e, SearchError::Arithmetic(_));
            r
        }),
    })
}

/// Every non-bipartite graph on `n` vertices, canonical labels, canonical
/// order. Unless `allow_isolated` is set, graphs with an isolated vertex are
/// left out: they are smaller graphs padded to order `n`.
pub fn nonbipartite_graphs(n: usize, allow_isolated: bool) -> Result<Vec<Graph>, SearchError> {
    Ok(crate::canon::all_graphs(n)?
        .into_iter()
        .filter(|g| !g.is_bipartite() && (allow_isolated || !g.has_isolated_vertex()))
        .collect())
}

/// Per-tournament line of a catalog survey.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TournamentRecord {
    pub line: usize,
    pub digraph: String,
    pub out_degrees: DegreeMultiset,
    pub candidate: bool,
    /// Exact verdict; `None` if the degree filter excluded the tournament.
    pub symmetric: Option<bool>,
    /// First odd `r` with nonzero `tr(H^r)` and that trace, as decimal strings.
    pub witness: Option<(usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TournamentSummary {
    pub schema_version: u32,
    pub command: &'static str,
    pub lines: u64,
    pub tournaments: u64,
    pub candidates: u64,
    pub symmetric: u64,
    pub rejected: u64,
    pub degree_filter: Vec<DegreeMultiset>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TournamentSurvey {
    pub records: Vec<TournamentRecord>,
    pub errors: Vec<CatalogError>,
    pub summary: TournamentSummary,
}

fn tournament_record(line: usize, t: &Digraph, filter: Option<&[DegreeMultiset]>) -> Result<TournamentRecord, SearchError> {
    let out_degrees = DegreeMultiset::from_degrees(&t.out_degrees());
    let candidate = filter.is_none_or(|f| f.contains(&out_degrees));
    let (symmetric, witness) = if candidate {
        match exact_hermitian(t).first_nonzero_odd_trace()? {
            None => (Some(true), None),
            Some((r, p)) => (Some(false), Some((r, p.to_string()))),
        }
    } else {
        (None, None)
    };
    Ok(TournamentRecord { line, digraph: to_digraph6(t).unwrap_or_default(), out_degrees, candidate, symmetric, witness })
}

/// Exact symmetry test over tournaments given one digraph6 string per
/// line. Malformed lines and non-tournaments are reported with their line
/// numbers and skipped. With a degree filter, only tournaments whose
/// out-degree multiset is listed are tested.
pub fn tournament_survey_from_catalog(
    reader: impl BufRead,
    degree_filter: Option<&[DegreeMultiset]>,
) -> Result<TournamentSurvey, SearchError> {
    let mut parsed = Vec::new();
    let mut errors = Vec::new();
    let mut lines = 0u64;
    for (i, line) in reader.lines().enumerate() {
        let ln = i + 1;
        let line = line.map_err(|e| SearchError::Catalog { line: ln, message: e.to_string() })?;
        if line.trim().is_empty() {
            continue;
        }
        lines += 1;
        match parse_digraph6_line(line.trim(), ln) {
            Err(e) => errors.push(CatalogError { line: ln, message: e.to_string() }),
            Ok(d) if !d.is_tournament() => {
                errors.push(CatalogError { line: ln, message: "not a tournament".into() });
            }
            Ok(d) => parsed.push((ln, d)),
        }
    }
    let records = parsed
        .par_iter()
        .map(|(ln, t)| tournament_record(*ln, t, degree_filter))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = TournamentSummary {
        schema_version: SCHEMA_VERSION,
        command: "tournament-survey",
        lines,
        tournaments: records.len() as u64,
        candidates: records.iter().filter(|r| r.candidate).count() as u64,
        symmetric: records.iter().filter(|r| r.symmetric == Some(true)).count() as u64,
        rejected: errors.len() as u64,
        degree_filter: degree_filter.map(<[_]>::to_vec).unwrap_or_default(),
    };
    Ok(TournamentSurvey { records, errors, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eisenstein::is_spectrally_symmetric_exact;
    use crate::graphs::k5_minus_triangle;

    #[test]
    fn orientation_counts() {
        let edge = Graph::complete(2);
        assert_eq!(enumerate_orientations(&edge, 24).unwrap().count(), 2);
        let k3 = Graph::complete(3);
        let cycles = enumerate_orientations(&k3, 24).unwrap().filter(|(_, d)| d.triangle_census().unwrap().t1 == 1).count();
        assert_eq!(enumerate_orientations(&k3, 24).unwrap().count(), 8);
        assert_eq!(cycles, 2);
        assert_eq!(enumerate_orientations(&k5_minus_triangle(), 24).unwrap().count(), 128);
        assert_eq!(
            enumerate_orientations(&Graph::complete(8), 24).err(),
            Some(SearchError::EdgeCapExceeded { edges: 28, cap: 24 })
        );
    }

    #[test]
    fn id_round_trip() {
        let g = k5_minus_triangle();
        for (id, d) in enumerate_orientations(&g, 24).unwrap() {
            assert_eq!(OrientationId::encode(&g, &d), Some(id));
            assert_eq!(id.reversed(7).decode(&g), d.reverse());
        }
        assert_eq!(OrientationId::encode(&g, &Digraph::empty(5)), None);
    }

    #[test]
    fn k5_minus_triangle_report() {
        let r = find_ss_orientations(&k5_minus_triangle(), &SearchOptions::default()).unwrap();
        assert!(r.is_positive());
        assert_eq!(r.classes.len(), 2);
        assert_eq!(r.classes.iter().map(|c| c.count).sum::<u64>(), r.symmetric_orientations);
        for c in &r.classes {
            assert!(is_spectrally_symmetric_exact(&c.representative.decode(&k5_minus_triangle())).unwrap());
        }
    }

    #[test]
    fn trivial_reports() {
        let r = find_ss_orientations(&Graph::complete(3), &SearchOptions::default()).unwrap();
        assert_eq!(r.status, SearchStatus::PrunedByGraphFilter);
        assert_eq!(r.symmetric_orientations, 0);
        let r = find_ss_orientations(&Graph::complete_bipartite(2, 3), &SearchOptions::default()).unwrap();
        assert_eq!(r.status, SearchStatus::BipartiteSkipped);
        assert_eq!(r.symmetric_orientations, 64);
        let all = SearchOptions { skip_bipartite: false, ..SearchOptions::default() };
        let r = find_ss_orientations(&Graph::complete_bipartite(2, 3), &all).unwrap();
        assert_eq!((r.status, r.symmetric_orientations), (SearchStatus::Enumerated, 64));
    }

    #[test]
    fn pruning_and_parallelism_do_not_change_results() {
        let unfiltered = SearchOptions { filters: false, ..SearchOptions::default() };
        let parallel = SearchOptions { jobs: 4, ..SearchOptions::default() };
        for g in nonbipartite_graphs(5, true).unwrap() {
            let a = find_ss_orientations(&g, &SearchOptions::default()).unwrap();
            let b = find_ss_orientations(&g, &unfiltered).unwrap();
            let c = find_ss_orientations(&g, &parallel).unwrap();
            assert_eq!(a.symmetric_orientations, b.symmetric_orientations);
            assert_eq!(a.classes, b.classes);
            assert_eq!(a.without_timing(), c.without_timing());
        }
    }

    #[test]
    fn reversal_closure() {
        let g = k5_minus_triangle();
        let symmetric: Vec<u64> = (0..128)
            .filter(|&id| is_spectrally_symmetric_exact(&OrientationId(id).decode(&g)).unwrap())
            .collect();
        for &id in &symmetric {
            let rev = OrientationId(id).reversed(7);
            assert!(symmetric.contains(&rev.0));
            let k1 = exact_hermitian(&OrientationId(id).decode(&g)).char_poly().unwrap();
            let k2 = exact_hermitian(&rev.decode(&g)).char_poly().unwrap();
            assert_eq!(k1, k2);
        }
    }

    #[test]
    fn tournament_catalog_survey() {
        let cat: String = crate::canon::enumerate_tournaments(3)
            .unwrap()
            .iter()
            .map(|t| to_digraph6(t).unwrap() + "\n")
            .collect();
        let s = tournament_survey_from_catalog(cat.as_bytes(), None).unwrap();
        assert_eq!((s.summary.tournaments, s.summary.candidates, s.summary.symmetric), (2, 2, 0));
        let bad = format!("{cat}&B??\nnonsense\n");
        let s = tournament_survey_from_catalog(bad.as_bytes(), None).unwrap();
        assert_eq!(s.errors.iter().map(|e| e.line).collect::<Vec<_>>(), vec![3, 4]);
        let filter = vec!["1^3".parse().unwrap()];
        let s = tournament_survey_from_catalog(cat.as_bytes(), Some(&filter)).unwrap();
        assert_eq!(s.summary.candidates, 1);
    }

    #[test]
    fn catalog_errors_do_not_stop_the_stream() {
        let text = "Bw\n!!\nDQc\n";
        let opts = SearchOptions::default();
        let reports: Vec<_> = survey_catalog(read_graph6_catalog(text.as_bytes()), &opts).collect();
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[1].status, SearchStatus::Error);
        assert!(reports[1].error.as_deref().unwrap().contains("line 2"));
    }
}
