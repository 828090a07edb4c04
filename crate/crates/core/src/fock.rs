//! Occupation-number basis for two uncoupled bosonic modes.
//!
//! States live in the span of product kets |m,n⟩ where m counts quanta in
//! mode `a` and n in mode `b`. Ladder operators act by
//!
//! ```text
//! a†|n⟩ = √(n+1)|n+1⟩        a|n⟩ = √n|n−1⟩
//! ```
//!
//! and likewise for mode `b`. Every bilinear a†b-type operator conserves the
//! total quantum number N = m + n, so the space splits into finite sectors of
//! dimension N + 1, which is what makes exact diagonalization possible here.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::Zero;

/// Occupation pair labeling the product ket |m,n⟩.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FockKet {
    /// Quanta in mode `a`.
    pub m: u32,
    /// Quanta in mode `b`.
    pub n: u32,
}

impl FockKet {
    pub fn new(m: u32, n: u32) -> Self {
        FockKet { m, n }
    }

    /// Total quantum number m + n; conserved by all number-conserving
    /// bilinears built on top of this module.
    pub fn total(&self) -> u32 {
        self.m + self.n
    }
}

impl fmt::Display for FockKet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{},{}>", self.m, self.n)
    }
}

/// One of the four single-mode ladder operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Ladder {
    /// a† (raise mode a)
    ADag,
    /// a (lower mode a)
    A,
    /// b† (raise mode b)
    BDag,
    /// b (lower mode b)
    B,
}

/// Finite superposition of Fock kets with complex amplitudes.
///
/// Canonical sparse form: amplitudes that are exactly zero are never stored.
/// No epsilon pruning happens anywhere, so numerical noise stays visible
/// instead of being silently dropped.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TwoModeState {
    amplitudes: BTreeMap<FockKet, Complex64>,
}

impl TwoModeState {
    pub fn zero() -> Self {
        TwoModeState::default()
    }

    /// Basis ket with unit amplitude.
    pub fn ket(m: u32, n: u32) -> Self {
        let mut s = TwoModeState::zero();
        s.add(FockKet::new(m, n), Complex64::new(1.0, 0.0));
        s
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (FockKet, Complex64)>,
    {
        let mut s = TwoModeState::zero();
        for (ket, amp) in terms {
            s.add(ket, amp);
        }
        s
    }

    /// Add `amp` to the coefficient of `ket`, pruning exact zeros.
    pub fn add(&mut self, ket: FockKet, amp: Complex64) {
        if amp.is_zero() {
            return;
        }
        let entry = self.amplitudes.entry(ket).or_insert_with(Complex64::zero);
        *entry += amp;
        if entry.is_zero() {
            self.amplitudes.remove(&ket);
        }
    }

    pub fn amplitude(&self, ket: &FockKet) -> Complex64 {
        self.amplitudes.get(ket).copied().unwrap_or_else(Complex64::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.amplitudes.is_empty()
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Iterate kets with their amplitudes, in ket order.
    pub fn iter(&self) -> impl Iterator<Item = (&FockKet, &Complex64)> {
        self.amplitudes.iter()
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        let mut s = TwoModeState::zero();
        for (ket, amp) in self.iter() {
            s.add(*ket, amp * factor);
        }
        s
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut s = self.clone();
        for (ket, amp) in other.iter() {
            s.add(*ket, *amp);
        }
        s
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scaled(Complex64::new(-1.0, 0.0)))
    }

    /// Σ |amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.values().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(&self) -> Option<Self> {
        let n2 = self.norm_sqr();
        if n2 == 0.0 {
            return None;
        }
        Some(self.scaled(Complex64::new(1.0 / n2.sqrt(), 0.0)))
    }

    /// Largest occupations appearing in the support, as (max m, max n).
    pub fn support_bounds(&self) -> Option<(u32, u32)> {
        if self.is_zero() {
            return None;
        }
        let max_m = self.amplitudes.keys().map(|k| k.m).max().unwrap();
        let max_n = self.amplitudes.keys().map(|k| k.n).max().unwrap();
        Some((max_m, max_n))
    }
}

/// Apply a single ladder operator. Annihilating an empty mode contributes
/// nothing; this is a total function.
pub fn apply_ladder(op: Ladder, state: &TwoModeState) -> TwoModeState {
    let mut out = TwoModeState::zero();
    for (ket, amp) in state.iter() {
        match op {
            Ladder::ADag => {
                let w = f64::sqrt(f64::from(ket.m) + 1.0);
                out.add(FockKet::new(ket.m + 1, ket.n), amp * w);
            }
            Ladder::A => {
                if ket.m > 0 {
                    let w = f64::sqrt(f64::from(ket.m));
                    out.add(FockKet::new(ket.m - 1, ket.n), amp * w);
                }
            }
            Ladder::BDag => {
                let w = f64::sqrt(f64::from(ket.n) + 1.0);
                out.add(FockKet::new(ket.m, ket.n + 1), amp * w);
            }
            Ladder::B => {
                if ket.n > 0 {
                    let w = f64::sqrt(f64::from(ket.n));
                    out.add(FockKet::new(ket.m, ket.n - 1), amp * w);
                }
            }
        }
    }
    out
}

/// Apply a chain of ladder operators, rightmost factor first, the way an
/// operator product acts on a ket.
pub fn apply_ladder_word(word: &[Ladder], state: &TwoModeState) -> TwoModeState {
    let mut cur = state.clone();
    for op in word.iter().rev() {
        cur = apply_ladder(*op, &cur);
    }
    cur
}

/// Ordered basis of the total-number-N sector: kets (m, N−m) for m = 0…N,
/// ascending in m. The ordering makes a†b + b†a tridiagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectorBasis {
    n_total: u32,
    ordering: Vec<FockKet>,
}

impl SectorBasis {
    pub fn new(n_total: u32) -> Self {
        let ordering = (0..=n_total)
            .map(|m| FockKet::new(m, n_total - m))
            .collect();
        SectorBasis { n_total, ordering }
    }

    pub fn n_total(&self) -> u32 {
        self.n_total
    }

    pub fn dim(&self) -> usize {
        self.ordering.len()
    }

    pub fn kets(&self) -> &[FockKet] {
        &self.ordering
    }

    /// Index of `ket` within this sector, if it belongs to it.
    pub fn index_of(&self, ket: &FockKet) -> Option<usize> {
        (ket.total() == self.n_total).then(|| ket.m as usize)
    }

    /// Build the state Σ coeffs[m] |m, N−m⟩.
    pub fn embed(&self, coeffs: &[Complex64]) -> TwoModeState {
        assert_eq!(coeffs.len(), self.dim(), "coefficient count must match sector dimension");
        TwoModeState::from_terms(
            self.ordering.iter().copied().zip(coeffs.iter().copied()),
        )
    }
}

/// Coefficient vector of `state` in the sector-N basis ordering; kets with
/// m + n ≠ N are dropped.
pub fn project_to_sector(state: &TwoModeState, n_total: u32) -> Vec<Complex64> {
    let mut coeffs = vec![Complex64::zero(); n_total as usize + 1];
    for (ket, amp) in state.iter() {
        if ket.total() == n_total {
            coeffs[ket.m as usize] = *amp;
        }
    }
    coeffs
}

/// Standard sesquilinear inner product ⟨x|y⟩, conjugate-linear in `x`.
pub fn inner_product(x: &TwoModeState, y: &TwoModeState) -> Complex64 {
    let mut acc = Complex64::zero();
    for (ket, ax) in x.iter() {
        let ay = y.amplitude(ket);
        if !ay.is_zero() {
            acc += ax.conj() * ay;
        }
    }
    acc
}
