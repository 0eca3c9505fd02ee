//! Hermitian adjacency matrices of digraphs at angle `π/3`, their exact
//! spectral symmetry, and exhaustive searches for symmetric orientations.
//!
//! Matrix entries live in the Eisenstein integers `Z[ω]`, `ω = e^{iπ/3}`,
//! so symmetry verdicts are exact. Floating-point spectra are available
//! for inspection and for other angles.

pub mod canon;
pub mod conditions;
pub mod eisenstein;
pub mod error;
pub mod format;
pub mod graphs;
pub mod report;
pub mod search;
pub mod spectra;
pub mod walks;

pub use eisenstein::{exact_hermitian, is_spectrally_symmetric_exact, CharPoly, EisensteinInt, ExactHermitianMatrix};
pub use error::{ArithmeticError, FormatError, GraphError, SearchError, SpectraError, WalkError};
pub use graphs::{Digraph, GluedChain, Graph, TriangleCensus};
pub use search::{find_ss_orientations, OrientationId, SearchOptions, SurveyReport};
