//! Type-A weight combinatorics for `SL(n)`.
//!
//! Weights are stored in the basis of fundamental weights `w_1, ..., w_{n-1}`.
//! Most of the Weyl group work happens in epsilon coordinates, where simple
//! reflections act as adjacent transpositions and dominance is "strictly
//! decreasing".

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("simple reflection index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("weight {0} is not strictly dominant")]
    NotStrictlyDominant(Weight),
    #[error("SL({n}) weights need {expected} coefficients, got {got}")]
    CoefficientCount { n: usize, expected: usize, got: usize },
    #[error("SL(n) needs n >= 1")]
    ZeroRank,
}

/// An integral weight of `SL(n)` in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    n: usize,
    coeffs: Vec<i64>,
}

impl Weight {
    pub fn new(n: usize, coeffs: Vec<i64>) -> Result<Self, LieError> {
        if n == 0 {
            return Err(LieError::ZeroRank);
        }
        if coeffs.len() != n - 1 {
            return Err(LieError::CoefficientCount { n, expected: n - 1, got: coeffs.len() });
        }
        Ok(Self { n, coeffs })
    }

    /// Shorthand for `SL(n)` with `n = coeffs.len() + 1`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self { n: coeffs.len() + 1, coeffs: coeffs.to_vec() }
    }

    pub fn zero(n: usize) -> Self {
        Self::from_coeffs(&alloc::vec![0; n.saturating_sub(1)])
    }

    /// The sum of the fundamental weights.
    pub fn rho(n: usize) -> Self {
        Self::from_coeffs(&alloc::vec![1; n.saturating_sub(1)])
    }

    /// The fundamental weight `w_i`, 1-indexed.
    pub fn fundamental(n: usize, i: usize) -> Result<Self, LieError> {
        if i == 0 || i >= n {
            return Err(LieError::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
        }
        let mut w = Self::zero(n);
        w.coeffs[i - 1] = 1;
        Ok(w)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient on `w_i`, 1-indexed.
    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs[i - 1]
    }

    pub(crate) fn coeff_mut(&mut self, i: usize) -> &mut i64 {
        &mut self.coeffs[i - 1]
    }

    pub fn plus(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.n, other.n);
        Weight { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn minus(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.n, other.n);
        Weight { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn rho_shifted(&self) -> Weight {
        self.plus(&Weight::rho(self.n))
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 1)
    }
}

/// Prints weights as `2w1-w2+w4`; the zero weight prints as `0`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (idx, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}w{}", idx + 1)?;
            } else {
                write!(f, "{sign}{mag}w{}", idx + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Epsilon coordinates of a weight, normalized so the last entry is 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EpsVector {
    entries: Vec<i64>,
}

impl EpsVector {
    /// Normalizes an arbitrary epsilon vector by subtracting its last entry.
    pub fn normalized(mut entries: Vec<i64>) -> Self {
        if let Some(&last) = entries.last() {
            for e in &mut entries {
                *e -= last;
            }
        }
        Self { entries }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Number of pairs `i < j` with `entries[i] < entries[j]`.
    pub fn inversions(&self) -> usize {
        let e = &self.entries;
        let mut count = 0;
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                if e[i] < e[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn has_repeat(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.windows(2).any(|w| w[0] == w[1])
    }
}

pub fn to_eps(w: &Weight) -> EpsVector {
    let mut entries = alloc::vec![0i64; w.n];
    for j in (0..w.n - 1).rev() {
        entries[j] = entries[j + 1] + w.coeffs[j];
    }
    EpsVector { entries }
}

pub fn from_eps(eps: &EpsVector) -> Weight {
    let coeffs = eps.entries.windows(2).map(|p| p[0] - p[1]).collect();
    Weight { n: eps.entries.len(), coeffs }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DominantizationResult {
    Singular,
    Regular {
        /// Length of the Weyl group element taking the input to `dominant`.
        length: usize,
        dominant: Weight,
    },
}

impl DominantizationResult {
    pub fn is_singular(&self) -> bool {
        matches!(self, Self::Singular)
    }
}

/// Moves a (rho-shifted) weight into the dominant chamber.
///
/// The caller adds rho. A weight with a repeated epsilon coordinate lies on a
/// wall and is reported as singular; otherwise the descending sort of the
/// epsilon vector is the strictly dominant representative and the number of
/// inversions is the length of the sorting permutation.
pub fn dominantize(w: &Weight) -> DominantizationResult {
    let eps = to_eps(w);
    if eps.has_repeat() {
        return DominantizationResult::Singular;
    }
    let length = eps.inversions();
    let mut sorted = eps.entries.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    DominantizationResult::Regular { length, dominant: from_eps(&EpsVector::normalized(sorted)) }
}

/// Weyl dimension formula, evaluated on `mu + rho`.
///
/// Returns `prod_{i<j} (z_i - z_j) / (j - i)` over the epsilon coordinates
/// `z` of the input, which is the dimension of the irreducible module with
/// highest weight `mu`.
pub fn weyl_dim(strictly_dominant: &Weight) -> Result<BigUint, LieError> {
    if !strictly_dominant.is_strictly_dominant() {
        return Err(LieError::NotStrictlyDominant(strictly_dominant.clone()));
    }
    let z = to_eps(strictly_dominant).entries;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            num *= BigUint::from((z[i] - z[j]) as u64);
            den *= BigUint::from((j - i) as u64);
        }
    }
    debug_assert!((&num % &den).is_zero());
    Ok(num / den)
}

/// Dimension of the irreducible `SL(n)` module with dominant highest weight `mu`.
pub fn irrep_dim(mu: &Weight) -> Result<BigUint, LieError> {
    weyl_dim(&mu.rho_shifted())
}

/// The simple reflection `s_i` (1-indexed) in fundamental coordinates:
/// `s_i(w) = w - <w, a_i> a_i`.
pub fn apply_simple_reflection(w: &Weight, i: usize) -> Result<Weight, LieError> {
    let rank = w.n - 1;
    if i == 0 || i > rank {
        return Err(LieError::IndexOutOfRange { index: i, max: rank });
    }
    let mut out = w.clone();
    let c = w.coeff(i);
    *out.coeff_mut(i) = -c;
    if i > 1 {
        *out.coeff_mut(i - 1) += c;
    }
    if i < rank {
        *out.coeff_mut(i + 1) += c;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainOutcome {
    /// A zero coefficient appeared: the weight lies on a wall.
    Singular,
    StrictlyDominant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainStep {
    pub reflection: usize,
    pub result: Weight,
}

/// A step-by-step walk of a weight towards the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionChain {
    pub start: Weight,
    pub steps: Vec<ChainStep>,
    pub outcome: ChainOutcome,
}

impl ReflectionChain {
    pub fn end(&self) -> &Weight {
        self.steps.last().map_or(&self.start, |s| &s.result)
    }

    pub fn reflections(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.reflection).collect()
    }
}

/// Replays dominantization one simple reflection at a time.
///
/// At each step the leftmost negative coefficient is reflected away; the walk
/// stops on the first zero coefficient (singular) or once every coefficient is
/// positive. For a regular weight the number of steps equals the length
/// reported by [`dominantize`].
pub fn reflection_chain(start: &Weight) -> ReflectionChain {
    let mut current = start.clone();
    let mut steps = Vec::new();
    let outcome = loop {
        if current.coeffs.contains(&0) {
            break ChainOutcome::Singular;
        }
        match current.coeffs.iter().position(|&c| c < 0) {
            None => break ChainOutcome::StrictlyDominant,
            Some(idx) => {
                current = apply_simple_reflection(&current, idx + 1).expect("index comes from the coefficient list");
                steps.push(ChainStep { reflection: idx + 1, result: current.clone() });
            }
        }
    };
    ReflectionChain { start: start.clone(), steps, outcome }
}
