//! Floating-point spectra of `H_θ` for arbitrary angles, the `A`/`S`
//! decomposition at `θ = π/3`, and the spectral-equivalence key.

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::Serialize;

use crate::eisenstein::{exact_hermitian, CharPoly};
use crate::error::{ArithmeticError, SpectraError};
use crate::graphs::{Digraph, Graph};

/// Angle given as a rational multiple of π: `θ = num·π/den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PiFraction {
    pub num: u32,
    pub den: u32,
}

impl PiFraction {
    pub const THIRD: Self = Self { num: 1, den: 3 };
    pub const HALF: Self = Self { num: 1, den: 2 };

    /// Rejects anything outside `(0, π]`.
    pub fn new(num: u32, den: u32) -> Result<Self, SpectraError> {
        if den == 0 || num == 0 || num > den {
            let value = if den == 0 { f64::INFINITY } else { num as f64 * PI / den as f64 };
            return Err(SpectraError::ThetaOutOfRange(value));
        }
        Ok(Self { num, den })
    }

    pub fn radians(self) -> f64 {
        self.num as f64 * PI / self.den as f64
    }

    /// Equal to π/3 after reduction.
    pub fn is_third(self) -> bool {
        3 * self.num == self.den
    }
}

/// Complex Hermitian `H_θ(D)`.
#[derive(Clone, Debug)]
pub struct NumericHermitianMatrix {
    pub theta: f64,
    pub entries: DMatrix<Complex64>,
}

impl NumericHermitianMatrix {
    pub fn n(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex64 {
        self.entries[(i, j)]
    }
}

/// `H_θ(D)_{ij} = e^{iθ} a(i,j) + e^{-iθ} a(j,i)`.
pub fn numeric_hermitian(d: &Digraph, theta: f64) -> Result<NumericHermitianMatrix, SpectraError> {
    if !(theta > 0.0 && theta <= PI) {
        return Err(SpectraError::ThetaOutOfRange(theta));
    }
    let n = d.n();
    let fwd = Complex64::from_polar(1.0, theta);
    let mut entries = DMatrix::<Complex64>::zeros(n, n);
    for &(u, v) in d.arcs() {
        entries[(u, v)] += fwd;
        entries[(v, u)] += fwd.conj();
    }
    Ok(NumericHermitianMatrix { theta, entries })
}

/// `H_{π/3} = ½(A + i√3·S')` for an oriented graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsDecomposition {
    /// Adjacency matrix of the underlying graph.
    pub a: DMatrix<i64>,
    /// `+1` at `(i,j)` for an arc `i -> j`, `-1` at `(j,i)`.
    pub s_prime: DMatrix<i64>,
}

impl AsDecomposition {
    /// `½(A + i√3·S')` as a complex matrix.
    pub fn reconstruct(&self) -> DMatrix<Complex64> {
        let r3 = 3f64.sqrt();
        DMatrix::from_fn(self.a.nrows(), self.a.ncols(), |i, j| {
            Complex64::new(self.a[(i, j)] as f64 / 2.0, r3 * self.s_prime[(i, j)] as f64 / 2.0)
        })
    }
}

pub fn as_decomposition(d: &Digraph) -> Result<AsDecomposition, SpectraError> {
    d.require_oriented()?;
    let n = d.n();
    let mut a = DMatrix::<i64>::zeros(n, n);
    let mut s_prime = DMatrix::<i64>::zeros(n, n);
    for &(u, v) in d.arcs() {
        a[(u, v)] = 1;
        a[(v, u)] = 1;
        s_prime[(u, v)] = 1;
        s_prime[(v, u)] = -1;
    }
    Ok(AsDecomposition { a, s_prime })
}

pub fn adjacency_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut a = DMatrix::<f64>::zeros(n, n);
    for &(u, v) in g.edges() {
        a[(u, v)] = 1.0;
        a[(v, u)] = 1.0;
    }
    a
}

/// Real eigenvalues sorted in nonincreasing order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn max_abs(&self) -> f64 {
        self.eigenvalues.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.last().copied()
    }

    /// `1e-9 · n · max(max|λ|, 1)`; the floor keeps round-off spectra of
    /// (numerically) zero matrices from failing the pairing test.
    pub fn default_tolerance(&self) -> f64 {
        1e-9 * self.len() as f64 * self.max_abs().max(1.0)
    }

    /// `λ_i + λ_{n+1-i} ∈ [-tol, tol]` for every `i`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let ev = &self.eigenvalues;
        let n = ev.len();
        (0..n / 2 + n % 2).all(|i| (ev[i] + ev[n - 1 - i]).abs() <= tol)
    }

    fn from_unsorted(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(|a, b| b.total_cmp(a));
        Self { eigenvalues }
    }
}

const EIGEN_EPS: f64 = 1e-14;
const EIGEN_MAX_ITER: usize = 10_000;

/// Eigenvalues of a complex Hermitian matrix.
pub fn eigenvalues(m: &NumericHermitianMatrix) -> Result<Spectrum, SpectraError> {
    let n = m.n();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new() });
    }
    let eig = SymmetricEigen::try_new(m.entries.clone(), EIGEN_EPS, EIGEN_MAX_ITER)
        .ok_or(SpectraError::NoConvergence(n))?;
    Ok(Spectrum::from_unsorted(eig.eigenvalues.iter().copied().collect()))
}

/// Eigenvalues of a real symmetric matrix.
pub fn eigenvalues_real(m: &DMatrix<f64>) -> Result<Spectrum, SpectraError> {
    let n = m.nrows();
    if n == 0 {
        return Ok(Spectrum { eigenvalues: Vec::new() });
    }
    let eig = SymmetricEigen::try_new(m.clone(), EIGEN_EPS, EIGEN_MAX_ITER).ok_or(SpectraError::NoConvergence(n))?;
    Ok(Spectrum::from_unsorted(eig.eigenvalues.iter().copied().collect()))
}

pub fn is_symmetric_numeric(spectrum: &Spectrum, tol: f64) -> bool {
    spectrum.is_symmetric(tol)
}

/// Numeric spectrum of `H_θ(D)`.
pub fn hermitian_spectrum(d: &Digraph, theta: f64) -> Result<Spectrum, SpectraError> {
    eigenvalues(&numeric_hermitian(d, theta)?)
}

/// Exact characteristic polynomial of `H_{π/3}(D)`; two orientations are
/// spectrally equivalent iff their keys are equal.
pub fn spectral_equivalence_key(d: &Digraph) -> Result<CharPoly, ArithmeticError> {
    exact_hermitian(d).char_poly()
}
