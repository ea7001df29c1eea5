//! Linear and non-linear codes, their weight and distance distributions, and duals.
//!
//! Everything here is exact integer arithmetic. Distributions are stored as
//! integer numerators over a single common denominator: `1` for the weight
//! distribution of a linear code, `M` for the distance distribution of a code
//! with `M` words.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::galois::{FieldMatrix, PrimeModulus};
use crate::num;

/// Caps on brute-force enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    /// Maximum number of codewords `q^k` enumerated for a weight distribution.
    pub max_codewords: u64,
    /// Maximum number of ordered pairs `M²` compared for a distance distribution.
    pub max_pairs: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_codewords: 1 << 24,
            max_pairs: 1 << 26,
        }
    }
}

/// The size of a code, kept exact: either a dimension `k` (so `|C| = q^k`) or a word count `M`.
///
/// `log_q |C|` is only ever formed as a float at the point of use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeSize {
    Dimension(u32),
    Words(u64),
}

impl CodeSize {
    /// `ln |C|`.
    pub fn ln(self, q: u32) -> f64 {
        match self {
            CodeSize::Dimension(k) => k as f64 * num::ln(q as f64),
            CodeSize::Words(m) => num::ln(m as f64),
        }
    }

    /// `k = log_q |C|`.
    pub fn log_q(self, q: u32) -> f64 {
        match self {
            CodeSize::Dimension(k) => k as f64,
            CodeSize::Words(m) => num::ln(m as f64) / num::ln(q as f64),
        }
    }

    /// `|C|` as a float; `None` if it is not finite.
    pub fn count(self, q: u32) -> Option<f64> {
        let c = match self {
            CodeSize::Dimension(k) => num::powi(q as f64, k),
            CodeSize::Words(m) => m as f64,
        };
        c.is_finite().then_some(c)
    }

    /// `|C|` as an exact integer if it fits in 128 bits.
    pub fn exact_count(self, q: u32) -> Option<u128> {
        match self {
            CodeSize::Dimension(k) => (q as u128).checked_pow(k),
            CodeSize::Words(m) => Some(m as u128),
        }
    }
}

/// The coefficients `A_0..A_n` as exact rationals with a common denominator.
#[derive(Debug, Clone, Eq)]
pub struct DistributionA {
    numerators: Vec<u64>,
    denominator: u64,
}

impl DistributionA {
    /// Integer counts, as produced by a weight distribution.
    pub fn from_counts(counts: Vec<u64>) -> Result<Self> {
        Self::from_rational(counts, 1)
    }

    /// `A_i = numerators[i] / denominator`.
    pub fn from_rational(numerators: Vec<u64>, denominator: u64) -> Result<Self> {
        if numerators.is_empty() {
            return Err(Error::InvalidCode("distribution needs A_0".into()));
        }
        if denominator == 0 {
            return Err(Error::InvalidCode("zero denominator".into()));
        }
        if numerators[0] != denominator {
            return Err(Error::InvalidCode(format!(
                "A_0 must be 1, got {}/{}",
                numerators[0], denominator
            )));
        }
        Ok(Self {
            numerators,
            denominator,
        })
    }

    /// Code length `n` (the distribution has `n + 1` entries).
    pub fn n(&self) -> usize {
        self.numerators.len() - 1
    }

    pub fn numerators(&self) -> &[u64] {
        &self.numerators
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// `A_i` as `(numerator, denominator)`, not reduced.
    pub fn ratio(&self, i: usize) -> (u64, u64) {
        (self.numerators[i], self.denominator)
    }

    /// `A_i` as a float.
    pub fn value(&self, i: usize) -> f64 {
        self.numerators[i] as f64 / self.denominator as f64
    }

    /// True when every `A_i` is an integer.
    pub fn is_integral(&self) -> bool {
        self.numerators.iter().all(|&a| a % self.denominator == 0)
    }

    /// `Σ A_i` as `(numerator, denominator)`.
    pub fn total(&self) -> (u128, u64) {
        let s = self.numerators.iter().map(|&a| a as u128).sum();
        (s, self.denominator)
    }

    /// Smallest `i ≥ 1` with `A_i > 0`.
    pub fn min_distance(&self) -> Result<usize> {
        self.numerators
            .iter()
            .skip(1)
            .position(|&a| a > 0)
            .map(|i| i + 1)
            .ok_or(Error::NoMinimumDistance)
    }

    /// Appends `extra` zero coefficients, which is the distribution after
    /// padding every word with `extra` zero symbols.
    pub fn padded(&self, extra: usize) -> Self {
        let mut numerators = self.numerators.clone();
        numerators.resize(numerators.len() + extra, 0);
        Self {
            numerators,
            denominator: self.denominator,
        }
    }

    /// Checks `Σ A_i = |C|` exactly.
    pub fn sums_to(&self, q: u32, size: CodeSize) -> bool {
        let (s, den) = self.total();
        match size.exact_count(q) {
            Some(c) => c.checked_mul(den as u128) == Some(s),
            None => false,
        }
    }
}

impl PartialEq for DistributionA {
    fn eq(&self, other: &Self) -> bool {
        self.numerators.len() == other.numerators.len()
            && self
                .numerators
                .iter()
                .zip(&other.numerators)
                .all(|(&a, &b)| {
                    a as u128 * other.denominator as u128 == b as u128 * self.denominator as u128
                })
    }
}

/// Generator matrix of a linear `[n, k]` code over a prime field.
///
/// Rows are linearly independent. `k = 0` only arises as the dual of the full
/// space `[n, n]` code and is reported by [`GeneratorMatrix::is_degenerate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorMatrix {
    g: FieldMatrix,
}

impl GeneratorMatrix {
    pub fn new(g: FieldMatrix) -> Result<Self> {
        let k = g.rows();
        if k == 0 {
            return Err(Error::InvalidCode(
                "generator needs at least one row".into(),
            ));
        }
        if k > g.cols() {
            return Err(Error::InvalidCode(format!(
                "dimension {k} exceeds length {}",
                g.cols()
            )));
        }
        let rank = g.rank();
        if rank != k {
            return Err(Error::RankDeficient { rank, k });
        }
        Ok(Self { g })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.g.modulus()
    }

    pub fn q(&self) -> u32 {
        self.g.modulus().get()
    }

    pub fn k(&self) -> usize {
        self.g.rows()
    }

    pub fn n(&self) -> usize {
        self.g.cols()
    }

    pub fn size(&self) -> CodeSize {
        CodeSize::Dimension(self.k() as u32)
    }

    pub fn matrix(&self) -> &FieldMatrix {
        &self.g
    }

    /// The zero-dimensional code `{0}`.
    pub fn is_degenerate(&self) -> bool {
        self.k() == 0
    }

    /// Generator of `C⊥`, an `(n-k) × n` matrix. The dual of `[n, n]` is degenerate.
    pub fn dual(&self) -> GeneratorMatrix {
        let h = if self.is_degenerate() {
            FieldMatrix::identity(self.modulus(), self.n())
        } else {
            self.g.nullspace_basis()
        };
        GeneratorMatrix { g: h }
    }

    /// True when both generators span the same code.
    pub fn same_code(&self, other: &GeneratorMatrix) -> bool {
        self.g.same_row_space(&other.g)
    }

    /// Appends `extra` all-zero coordinates to every codeword.
    pub fn padded(&self, extra: usize) -> GeneratorMatrix {
        let n = self.n() + extra;
        let mut data = Vec::with_capacity(self.k() * n);
        for row in self.g.row_iter() {
            data.extend_from_slice(row);
            data.resize(data.len() + extra, 0);
        }
        let g = FieldMatrix::new(self.modulus(), self.k(), n, data).expect("valid shape");
        GeneratorMatrix { g }
    }

    fn check_cap(&self, limits: &EnumerationLimits) -> Result<u64> {
        let need = (self.q() as u128).checked_pow(self.k() as u32);
        match need {
            Some(c) if c <= limits.max_codewords as u128 => Ok(c as u64),
            _ => Err(Error::CapExceeded {
                what: "codeword enumeration",
                required: need.unwrap_or(u128::MAX),
                cap: limits.max_codewords,
            }),
        }
    }

    /// Calls `visit(word, weight)` for every codeword, message vectors in
    /// lexicographic order (least significant message symbol first).
    pub fn for_each_codeword<F>(&self, limits: &EnumerationLimits, mut visit: F) -> Result<()>
    where
        F: FnMut(&[u32], usize),
    {
        let total = self.check_cap(limits)?;
        let q = self.modulus();
        let (k, n) = (self.k(), self.n());
        let supports: Vec<Vec<usize>> = self
            .g
            .row_iter()
            .map(|r| (0..n).filter(|&c| r[c] != 0).collect())
            .collect();

        let mut word = vec![0u32; n];
        let mut weight = 0usize;
        let mut msg = vec![0u32; k];
        visit(&word, weight);
        for _ in 1..total {
            // odometer step: bump digit j, carrying; each bump adds row j once,
            // and a wrap (q bumps) returns that contribution to zero
            let mut j = 0;
            loop {
                for &c in &supports[j] {
                    let before = word[c];
                    let after = q.add(before, self.g.get(j, c));
                    word[c] = after;
                    match (before == 0, after == 0) {
                        (true, false) => weight += 1,
                        (false, true) => weight -= 1,
                        _ => {}
                    }
                }
                msg[j] += 1;
                if msg[j] < q.get() {
                    break;
                }
                msg[j] = 0;
                j += 1;
            }
            visit(&word, weight);
        }
        Ok(())
    }

    /// Exact weight distribution by enumerating all `q^k` codewords.
    pub fn weight_distribution(&self, limits: &EnumerationLimits) -> Result<DistributionA> {
        let mut counts = vec![0u64; self.n() + 1];
        self.for_each_codeword(limits, |_, w| counts[w] += 1)?;
        DistributionA::from_counts(counts)
    }

    /// Materializes the code as an explicit word list.
    pub fn to_codeword_list(&self, limits: &EnumerationLimits) -> Result<CodewordList> {
        let mut words = Vec::new();
        self.for_each_codeword(limits, |w, _| words.extend_from_slice(w))?;
        CodewordList::from_flat(self.modulus(), self.n(), words)
    }
}

/// An explicit list of `M ≥ 2` distinct words of length `n` over `GF(q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodewordList {
    q: PrimeModulus,
    n: usize,
    words: Vec<u32>,
}

impl CodewordList {
    pub fn new<W: AsRef<[u32]>>(q: PrimeModulus, n: usize, words: &[W]) -> Result<Self> {
        if let Some(i) = words.iter().position(|w| w.as_ref().len() != n) {
            return Err(Error::InvalidCode(format!(
                "word {i} has length {}, expected {n}",
                words[i].as_ref().len()
            )));
        }
        let flat = words
            .iter()
            .flat_map(|w| w.as_ref().iter().copied())
            .collect();
        Self::from_flat(q, n, flat)
    }

    fn from_flat(q: PrimeModulus, n: usize, words: Vec<u32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCode("length must be at least 1".into()));
        }
        if !words.len().is_multiple_of(n) {
            return Err(Error::Shape("word data is not a multiple of n".into()));
        }
        let m = words.len() / n;
        if m < 2 {
            return Err(Error::InvalidCode(format!(
                "need at least 2 words, got {m}"
            )));
        }
        if let Some(&bad) = words.iter().find(|&&v| v >= q.get()) {
            return Err(Error::NotInField {
                value: bad as u64,
                q: q.get(),
            });
        }
        let mut seen: BTreeMap<&[u32], usize> = BTreeMap::new();
        for (i, w) in words.chunks_exact(n).enumerate() {
            if let Some(&first) = seen.get(w) {
                return Err(Error::DuplicateWord { first, second: i });
            }
            seen.insert(w, i);
        }
        Ok(Self { q, n, words })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.q
    }

    pub fn q(&self) -> u32 {
        self.q.get()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of words `M`.
    pub fn m(&self) -> usize {
        self.words.len() / self.n
    }

    pub fn size(&self) -> CodeSize {
        CodeSize::Words(self.m() as u64)
    }

    pub fn words(&self) -> impl Iterator<Item = &[u32]> + '_ {
        self.words.chunks_exact(self.n)
    }

    /// Exact distance distribution: `A_i = |{(x, y) ∈ C² : d(x, y) = i}| / M`.
    pub fn distance_distribution(&self, limits: &EnumerationLimits) -> Result<DistributionA> {
        let m = self.m() as u64;
        let pairs = m as u128 * m as u128;
        if pairs > limits.max_pairs as u128 {
            return Err(Error::CapExceeded {
                what: "distance pair enumeration",
                required: pairs,
                cap: limits.max_pairs,
            });
        }
        let words: Vec<&[u32]> = self.words().collect();
        let mut counts = vec![0u64; self.n + 1];
        counts[0] = m;
        for (i, x) in words.iter().enumerate() {
            for y in &words[i + 1..] {
                counts[hamming_distance(x, y)] += 2;
            }
        }
        DistributionA::from_rational(counts, m)
    }
}

pub fn hamming_weight(x: &[u32]) -> usize {
    x.iter().filter(|&&v| v != 0).count()
}

pub fn hamming_distance(x: &[u32], y: &[u32]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}
