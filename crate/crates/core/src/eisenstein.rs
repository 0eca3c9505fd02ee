//! Exact arithmetic in the Eisenstein integers `Z[ω]`, `ω = e^{iπ/3}`,
//! and the Hermitian adjacency matrix `H = H_{π/3}(D)` over that ring.
//!
//! `ω` is a primitive sixth root of unity, so `ω² = ω - 1` and
//! `conj(ω) = 1 - ω`. Every element is stored as `a + bω` with `i128`
//! components; all arithmetic is checked and overflow surfaces as
//! [`ArithmeticError::Overflow`] instead of wrapping.
//!
//! # Why odd traces up to `n` decide symmetry
//!
//! A Hermitian matrix has symmetric spectrum iff `tr(H^r) = 0` for every
//! odd `r`. Only finitely many `r` are needed. Write the characteristic
//! polynomial as `x^n - e1 x^{n-1} + e2 x^{n-2} - ...`. Newton's identities
//! give `k·e_k = Σ_{i=1..k} (-1)^{i-1} e_{k-i} p_i` with `p_i = tr(H^i)`.
//! If `p_i = 0` for every odd `i ≤ n`, induction on odd `k` shows `e_k = 0`:
//! each term has either `i` odd (so `p_i = 0`) or `k - i` odd and smaller
//! than `k` (so `e_{k-i} = 0`). Then the characteristic polynomial is even
//! or odd in `x`, its real roots come in pairs `±λ`, and every higher odd
//! trace vanishes too.
//!
//! # Integer width
//!
//! Entries of `H^r` have modulus at most `Δ^r` (`Δ` = maximum row sum of
//! arc multiplicities), and both components of `a + bω` are bounded by
//! `2|z|/√3`. With `i128` this leaves ample room for every workload here
//! (`n ≤ 60`, `Δ ≤ 20`), but nothing relies on that: each operation is
//! checked.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Serialize, Serializer};

use crate::error::ArithmeticError;
use crate::graphs::Digraph;

/// `a + bω` with `ω = e^{iπ/3}`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinInt {
    pub a: i128,
    pub b: i128,
}

const OVERFLOW: &str = "Eisenstein integer";

impl EisensteinInt {
    pub const ZERO: Self = Self { a: 0, b: 0 };
    pub const ONE: Self = Self { a: 1, b: 0 };
    /// `e^{iπ/3}`
    pub const OMEGA: Self = Self { a: 0, b: 1 };
    /// `e^{-iπ/3} = 1 - ω`
    pub const OMEGA_BAR: Self = Self { a: 1, b: -1 };

    pub const fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub const fn from_int(a: i128) -> Self {
        Self { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_real(&self) -> bool {
        self.b == 0
    }

    /// `conj(a + bω) = (a + b) - bω`.
    pub fn checked_conj(self) -> Option<Self> {
        Some(Self { a: self.a.checked_add(self.b)?, b: self.b.checked_neg()? })
    }

    pub fn conj(self) -> Self {
        self.checked_conj().expect("overflow in Eisenstein conjugate")
    }

    pub fn checked_add(self, rhs: Self) -> Option<Self> {
        Some(Self { a: self.a.checked_add(rhs.a)?, b: self.b.checked_add(rhs.b)? })
    }

    pub fn checked_sub(self, rhs: Self) -> Option<Self> {
        Some(Self { a: self.a.checked_sub(rhs.a)?, b: self.b.checked_sub(rhs.b)? })
    }

    pub fn checked_neg(self) -> Option<Self> {
        Some(Self { a: self.a.checked_neg()?, b: self.b.checked_neg()? })
    }

    /// `(a + bω)(c + dω) = (ac - bd) + (ad + bc + bd)ω`.
    pub fn checked_mul(self, rhs: Self) -> Option<Self> {
        let ac = self.a.checked_mul(rhs.a)?;
        let bd = self.b.checked_mul(rhs.b)?;
        let ad = self.a.checked_mul(rhs.b)?;
        let bc = self.b.checked_mul(rhs.a)?;
        Some(Self { a: ac.checked_sub(bd)?, b: ad.checked_add(bc)?.checked_add(bd)? })
    }

    pub fn checked_scale(self, k: i128) -> Option<Self> {
        Some(Self { a: self.a.checked_mul(k)?, b: self.b.checked_mul(k)? })
    }

    /// `|z|² = a² + ab + b²`.
    pub fn norm(self) -> Option<i128> {
        self.a
            .checked_mul(self.a)?
            .checked_add(self.a.checked_mul(self.b)?)?
            .checked_add(self.b.checked_mul(self.b)?)
    }

    pub fn try_mul(self, rhs: Self) -> Result<Self, ArithmeticError> {
        self.checked_mul(rhs).ok_or(ArithmeticError::Overflow(OVERFLOW))
    }

    pub fn try_add(self, rhs: Self) -> Result<Self, ArithmeticError> {
        self.checked_add(rhs).ok_or(ArithmeticError::Overflow(OVERFLOW))
    }

    pub fn to_complex(self) -> Complex64 {
        let half_sqrt3 = 3f64.sqrt() / 2.0;
        Complex64::new(self.a as f64 + 0.5 * self.b as f64, half_sqrt3 * self.b as f64)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("overflow in Eisenstein addition")
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("overflow in Eisenstein subtraction")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("overflow in Eisenstein negation")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("overflow in Eisenstein multiplication")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}ω"),
            (a, b) if b < 0 => write!(f, "{a}-{}ω", -b),
            (a, b) => write!(f, "{a}+{b}ω"),
        }
    }
}

/// Hermitian `n x n` matrix over `Z[ω]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactHermitianMatrix {
    n: usize,
    entries: Vec<EisensteinInt>,
}

impl ExactHermitianMatrix {
    /// `H_{ij} = a(i,j)·ω + a(j,i)·conj(ω)`.
    pub fn from_digraph(d: &Digraph) -> Self {
        let n = d.n();
        let mut entries = vec![EisensteinInt::ZERO; n * n];
        for &(u, v) in d.arcs() {
            // ω at (u,v), conj(ω) = 1 - ω at (v,u)
            entries[u * n + v].b += 1;
            entries[v * n + u].a += 1;
            entries[v * n + u].b -= 1;
        }
        Self { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> EisensteinInt {
        self.entries[i * self.n + j]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.entries[j * self.n + i].checked_conj() == Some(self.entries[i * self.n + j]))
        })
    }

    fn trace(&self) -> Result<EisensteinInt, ArithmeticError> {
        (0..self.n).try_fold(EisensteinInt::ZERO, |acc, i| acc.try_add(self.entries[i * self.n + i]))
    }

    fn checked_mul(&self, rhs: &Self) -> Result<Self, ArithmeticError> {
        let n = self.n;
        let mut out = vec![EisensteinInt::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.entries[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let y = rhs.entries[k * n + j];
                    if y.is_zero() {
                        continue;
                    }
                    let cell = &mut out[i * n + j];
                    *cell = cell.try_add(x.try_mul(y)?)?;
                }
            }
        }
        Ok(Self { n, entries: out })
    }

    /// `tr(self · rhs)` without forming the product.
    fn trace_of_product(&self, rhs: &Self) -> Result<EisensteinInt, ArithmeticError> {
        let n = self.n;
        let mut acc = EisensteinInt::ZERO;
        for i in 0..n {
            for l in 0..n {
                let x = self.entries[i * n + l];
                let y = rhs.entries[l * n + i];
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.try_add(x.try_mul(y)?)?;
                }
            }
        }
        Ok(acc)
    }

    /// Exact `tr(H^r)` for `r = 1, 3, 5, …` up to the largest odd `r ≤ max(n, 1)`.
    pub fn odd_power_traces(&self) -> Result<Vec<i128>, ArithmeticError> {
        let mut ladder = PowerLadder::new(self);
        (1..=self.n.max(1)).step_by(2).map(|r| ladder.trace(r)).collect()
    }

    /// Exact `tr(H^r)` for `r = 1..=r_max`.
    pub fn power_traces(&self, r_max: usize) -> Result<Vec<i128>, ArithmeticError> {
        let mut ladder = PowerLadder::new(self);
        (1..=r_max).map(|r| ladder.trace(r)).collect()
    }

    /// First odd `r ≤ max(n, 1)` with `tr(H^r) != 0`, together with the trace.
    /// Stops as soon as one is found.
    pub fn first_nonzero_odd_trace(&self) -> Result<Option<(usize, i128)>, ArithmeticError> {
        let mut ladder = PowerLadder::new(self);
        for r in (1..=self.n.max(1)).step_by(2) {
            let p = ladder.trace(r)?;
            if p != 0 {
                return Ok(Some((r, p)));
            }
        }
        Ok(None)
    }

    /// Characteristic polynomial `det(xI - H)` from the power traces via
    /// Newton's identities. Every division is checked for exactness.
    pub fn char_poly(&self) -> Result<CharPoly, ArithmeticError> {
        let n = self.n;
        let p = self.power_traces(n)?;
        let overflow = || ArithmeticError::Overflow("Newton identities");
        // e[k] = k-th elementary symmetric function of the eigenvalues
        let mut e = vec![0i128; n + 1];
        e[0] = 1;
        for k in 1..=n {
            let mut sum: i128 = 0;
            for i in 1..=k {
                let term = e[k - i].checked_mul(p[i - 1]).ok_or_else(overflow)?;
                sum = if i % 2 == 1 { sum.checked_add(term) } else { sum.checked_sub(term) }.ok_or_else(overflow)?;
            }
            if sum % k as i128 != 0 {
                return Err(ArithmeticError::Inconsistent(format!(
                    "Newton identity division {sum}/{k} is not exact"
                )));
            }
            e[k] = sum / k as i128;
        }
        let coeffs = e.iter().enumerate().map(|(k, &ek)| if k % 2 == 0 { ek } else { -ek }).collect();
        Ok(CharPoly(coeffs))
    }

    /// All odd traces up to `n` vanish.
    pub fn is_spectrally_symmetric(&self) -> Result<bool, ArithmeticError> {
        Ok(self.first_nonzero_odd_trace()?.is_none())
    }
}

/// Lazily built `H, H², …, H^h`; `tr(H^r)` is read off as `tr(H^a H^b)`
/// with `a + b = r`, so only about `r/2` products are ever formed.
struct PowerLadder<'a> {
    base: &'a ExactHermitianMatrix,
    powers: Vec<ExactHermitianMatrix>,
}

impl<'a> PowerLadder<'a> {
    fn new(base: &'a ExactHermitianMatrix) -> Self {
        Self { base, powers: Vec::new() }
    }

    fn power(&mut self, k: usize) -> Result<&ExactHermitianMatrix, ArithmeticError> {
        if self.powers.is_empty() {
            self.powers.push(self.base.clone());
        }
        while self.powers.len() < k {
            let next = self.powers.last().expect("non-empty").checked_mul(self.base)?;
            self.powers.push(next);
        }
        Ok(&self.powers[k - 1])
    }

    fn trace(&mut self, r: usize) -> Result<i128, ArithmeticError> {
        assert!(r >= 1);
        let a = r.div_ceil(2);
        let b = r - a;
        self.power(a)?;
        let t = if b == 0 {
            self.powers[a - 1].trace()?
        } else {
            self.powers[a - 1].trace_of_product(&self.powers[b - 1])?
        };
        if !t.is_real() {
            return Err(ArithmeticError::Inconsistent(format!("tr(H^{r}) = {t} is not real")));
        }
        Ok(t.a)
    }
}

/// Monic integer characteristic polynomial, coefficients from `x^n` down to `x^0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharPoly(pub Vec<i128>);

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coefficients(&self) -> &[i128] {
        &self.0
    }

    /// Coefficient of `x^{n-k}` is zero for every odd `k`.
    pub fn has_symmetric_roots(&self) -> bool {
        self.0.iter().skip(1).step_by(2).all(|&c| c == 0)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(|c| c.to_string()).collect()
    }
}

impl Serialize for CharPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let deg = n - k;
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            if mag != 1 || deg == 0 {
                write!(f, "{mag}")?;
            }
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `H_{π/3}` of a digraph.
pub fn exact_hermitian(d: &Digraph) -> ExactHermitianMatrix {
    ExactHermitianMatrix::from_digraph(d)
}

/// Exact symmetry test at `θ = π/3`.
pub fn is_spectrally_symmetric_exact(d: &Digraph) -> Result<bool, ArithmeticError> {
    exact_hermitian(d).is_spectrally_symmetric()
}
