//! Representations of the 3-Kronecker quiver: two vertices and three arrows
//! from the first to the second.
//!
//! The stability character is `theta = chi(R, -)` where `R` has dimension
//! vector `(5, 10)`, which works out to `theta(d) = 5 (d1 - d2)`.

pub mod field;
pub mod linalg;

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use self::field::{Field, PrimeField, Rationals};
use self::linalg::{enumerate_subspaces, rank, rref, Matrix};

/// Number of arrows from the source vertex to the target vertex.
pub const ARROWS: usize = 3;

/// Dimension vector of the representation attached to `O(2)`.
pub const R_DIM: DimVector = DimVector::new(5, 10);

/// Largest vertex dimension accepted by exhaustive stability checks.
pub const MAX_ENUMERATION_DIM: usize = 4;

/// Field orders accepted by exhaustive stability checks.
pub const ENUMERATION_FIELDS: [u32; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("arrow {arrow} has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    Shape { arrow: usize, rows: usize, cols: usize, expected_rows: usize, expected_cols: usize },
    #[error("representations live over different fields")]
    FieldMismatch,
    #[error("the zero dimension vector has no moduli")]
    ZeroDimension,
    #[error("exhaustive check supports dimensions up to {MAX_ENUMERATION_DIM}, got {0}")]
    DimensionTooLarge(DimVector),
    #[error("exhaustive check supports F_2, F_3, F_5, got F_{0}")]
    UnsupportedField(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector {
    pub source: usize,
    pub target: usize,
}

impl DimVector {
    pub const fn new(source: usize, target: usize) -> Self {
        Self { source, target }
    }

    pub fn is_zero(&self) -> bool {
        self.source == 0 && self.target == 0
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.source, self.target)
    }
}

impl core::ops::Add for DimVector {
    type Output = DimVector;

    fn add(self, rhs: DimVector) -> DimVector {
        DimVector::new(self.source + rhs.source, self.target + rhs.target)
    }
}

/// `chi(a, b) = a1 b1 + a2 b2 - 3 a1 b2`.
pub fn euler_form(a: DimVector, b: DimVector) -> i64 {
    let (a1, a2, b1, b2) = (a.source as i64, a.target as i64, b.source as i64, b.target as i64);
    a1 * b1 + a2 * b2 - ARROWS as i64 * a1 * b2
}

/// `theta(d) = chi(R, d)` with `dim R = (5, 10)`.
pub fn theta(d: DimVector) -> i64 {
    euler_form(R_DIM, d)
}

/// `1 - chi(d, d)`.
pub fn moduli_dim(d: DimVector) -> Result<i64, QuiverError> {
    if d.is_zero() {
        return Err(QuiverError::ZeroDimension);
    }
    Ok(1 - euler_form(d, d))
}

/// Three linear maps `V1 -> V2`, each a `d2 x d1` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct QuiverRep<F: Field> {
    field: F,
    dims: DimVector,
    arrows: [Matrix<F::Elem>; ARROWS],
}

impl<F: Field> QuiverRep<F> {
    pub fn new(field: F, dims: DimVector, arrows: [Matrix<F::Elem>; ARROWS]) -> Result<Self, QuiverError> {
        for (idx, m) in arrows.iter().enumerate() {
            if m.rows() != dims.target || m.cols() != dims.source {
                return Err(QuiverError::Shape {
                    arrow: idx,
                    rows: m.rows(),
                    cols: m.cols(),
                    expected_rows: dims.target,
                    expected_cols: dims.source,
                });
            }
        }
        Ok(Self { field, dims, arrows })
    }

    pub fn zero(field: F, dims: DimVector) -> Self {
        let m = Matrix::zeros(&field, dims.target, dims.source);
        Self { arrows: [m.clone(), m.clone(), m], field, dims }
    }

    /// The simple representation at the source vertex, `(1, 0)`.
    pub fn simple_source(field: F) -> Self {
        Self::zero(field, DimVector::new(1, 0))
    }

    /// The simple representation at the target vertex, `(0, 1)`.
    pub fn simple_target(field: F) -> Self {
        Self::zero(field, DimVector::new(0, 1))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dims(&self) -> DimVector {
        self.dims
    }

    pub fn arrows(&self) -> &[Matrix<F::Elem>; ARROWS] {
        &self.arrows
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, QuiverError> {
        if self.field != other.field {
            return Err(QuiverError::FieldMismatch);
        }
        let dims = self.dims + other.dims;
        let arrows = core::array::from_fn(|k| {
            let mut m = Matrix::zeros(&self.field, dims.target, dims.source);
            let (a, b) = (&self.arrows[k], &other.arrows[k]);
            for r in 0..a.rows() {
                for c in 0..a.cols() {
                    m.set(r, c, a.get(r, c).clone());
                }
            }
            for r in 0..b.rows() {
                for c in 0..b.cols() {
                    m.set(a.rows() + r, a.cols() + c, b.get(r, c).clone());
                }
            }
            m
        });
        Ok(Self { field: self.field.clone(), dims, arrows })
    }

    /// Span of the images of `vectors` under all three arrows, as an RREF basis.
    pub fn image_span(&self, vectors: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
        let images = vectors.iter().flat_map(|v| self.arrows.iter().map(move |m| m.apply(&self.field, v))).collect();
        rref(&self.field, images, self.dims.target).0
    }
}

/// `(dim Hom(a, b), dim Ext^1(a, b))`.
///
/// Both come from the map
/// `Hom(A1, B1) + Hom(A2, B2) -> Hom(A1, B2)^3`,
/// `(f1, f2) -> (f2 a_k - b_k f1)_k`, whose kernel is `Hom` and whose
/// cokernel is `Ext^1`.
pub fn hom_ext<F: Field>(a: &QuiverRep<F>, b: &QuiverRep<F>) -> Result<(usize, usize), QuiverError> {
    if a.field != b.field {
        return Err(QuiverError::FieldMismatch);
    }
    let field = &a.field;
    let (a1, a2) = (a.dims.source, a.dims.target);
    let (b1, b2) = (b.dims.source, b.dims.target);
    let unknowns = b1 * a1 + b2 * a2;
    let equations = ARROWS * b2 * a1;
    let mut m = Matrix::zeros(field, equations, unknowns);
    // phi1 entry (v, t) -> column v * a1 + t; phi2 entry (s, u) -> b1 * a1 + s * a2 + u
    let phi1 = |v: usize, t: usize| v * a1 + t;
    let phi2 = |s: usize, u: usize| b1 * a1 + s * a2 + u;
    for k in 0..ARROWS {
        let (f, g) = (&a.arrows[k], &b.arrows[k]);
        for s in 0..b2 {
            for t in 0..a1 {
                let row = (k * b2 + s) * a1 + t;
                for u in 0..a2 {
                    let col = phi2(s, u);
                    let cur = m.get(row, col).clone();
                    m.set(row, col, field.add(&cur, f.get(u, t)));
                }
                for v in 0..b1 {
                    let col = phi1(v, t);
                    let cur = m.get(row, col).clone();
                    m.set(row, col, field.sub(&cur, g.get(s, v)));
                }
            }
        }
    }
    let r = rank(field, &m);
    Ok((unknowns - r, equations - r))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityStatus {
    Stable,
    StrictlySemistable,
    Unstable,
}

/// A subrepresentation given by bases of its two vector spaces.
#[derive(Debug, Clone, PartialEq)]
pub struct Subrepresentation<E> {
    pub source_basis: Vec<Vec<E>>,
    pub target_basis: Vec<Vec<E>>,
    pub theta: i64,
}

impl<E> Subrepresentation<E> {
    pub fn dims(&self) -> DimVector {
        DimVector::new(self.source_basis.len(), self.target_basis.len())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityVerdict {
    pub status: StabilityStatus,
    /// A proper nonzero subrepresentation of maximal `theta`; present unless stable.
    pub witness: Option<Subrepresentation<u32>>,
}

fn standard_basis_vector<F: Field>(field: &F, dim: usize, i: usize) -> Vec<F::Elem> {
    let mut v = alloc::vec![field.zero(); dim];
    v[i] = field.one();
    v
}

/// Proper nonzero subrepresentation with source space `source_basis` and the
/// largest `theta`, if one exists.
fn best_over<F: Field>(rep: &QuiverRep<F>, source_basis: Vec<Vec<F::Elem>>) -> Option<Subrepresentation<F::Elem>> {
    let d = rep.dims;
    let k = source_basis.len();
    let target_basis = if k == 0 {
        // W2 must be nonzero, and proper when V1 = 0; a line is the best choice
        if d.target == 0 || (d.source == 0 && d.target == 1) {
            return None;
        }
        alloc::vec![standard_basis_vector(&rep.field, d.target, 0)]
    } else {
        let span = rep.image_span(&source_basis);
        if k == d.source && span.len() == d.target {
            return None;
        }
        span
    };
    let theta = theta(DimVector::new(k, target_basis.len()));
    Some(Subrepresentation { source_basis, target_basis, theta })
}

fn verdict_from<E>(
    dims: DimVector,
    best: Option<Subrepresentation<E>>,
) -> (StabilityStatus, Option<Subrepresentation<E>>) {
    let total = theta(dims);
    match best {
        Some(w) if w.theta > total => (StabilityStatus::Unstable, Some(w)),
        Some(w) if w.theta == total => (StabilityStatus::StrictlySemistable, Some(w)),
        _ => (StabilityStatus::Stable, None),
    }
}

/// King stability by exhaustive enumeration over a small prime field.
///
/// `V` is stable if `theta(W) < theta(V)` and semistable if
/// `theta(W) <= theta(V)` for every proper nonzero subrepresentation `W`.
/// For each subspace `W1` of the source space, the best `W2` is the span of
/// the images of `W1`; the two edge cases `W1 = 0` and `W1 = V1` are handled
/// so that `W` stays proper and nonzero.
pub fn check_stability(rep: &QuiverRep<PrimeField>) -> Result<StabilityVerdict, QuiverError> {
    let d = rep.dims;
    if d.is_zero() {
        return Err(QuiverError::ZeroDimension);
    }
    if d.source > MAX_ENUMERATION_DIM || d.target > MAX_ENUMERATION_DIM {
        return Err(QuiverError::DimensionTooLarge(d));
    }
    let q = rep.field.order();
    if !ENUMERATION_FIELDS.contains(&q) {
        return Err(QuiverError::UnsupportedField(q));
    }
    let mut best: Option<Subrepresentation<u32>> = None;
    for w1 in enumerate_subspaces(&rep.field, d.source) {
        if let Some(cand) = best_over(rep, w1) {
            if best.as_ref().is_none_or(|b| cand.theta > b.theta) {
                best = Some(cand);
            }
        }
    }
    let (status, witness) = verdict_from(d, best);
    Ok(StabilityVerdict { status, witness })
}

/// Result of a non-exhaustive stability search over the rationals.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledStability {
    /// Always `false`: only finitely many subspaces of an infinite field were tried.
    pub exhaustive: bool,
    pub subspaces_tried: usize,
    /// Best status consistent with the subspaces tried.
    pub status: StabilityStatus,
    pub witness: Option<Subrepresentation<num_rational::BigRational>>,
}

/// Tries every coordinate subspace of the source space plus `samples` random
/// ones. A witness found this way is a genuine destabilizing (or
/// semistabilizing) subrepresentation; a `Stable` status is only evidence.
pub fn sample_stability(
    rep: &QuiverRep<Rationals>,
    samples: usize,
    seed: u64,
) -> Result<SampledStability, QuiverError> {
    let d = rep.dims;
    if d.is_zero() {
        return Err(QuiverError::ZeroDimension);
    }
    let field = Rationals;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates: Vec<Vec<Vec<_>>> = Vec::new();
    if d.source <= 12 {
        for mask in 0u32..(1 << d.source) {
            let basis = (0..d.source)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| standard_basis_vector(&field, d.source, i))
                .collect();
            candidates.push(basis);
        }
    }
    for _ in 0..samples {
        let k = rng.gen_range(0..=d.source);
        let rows = (0..k).map(|_| (0..d.source).map(|_| field.from_i64(rng.gen_range(-3..=3))).collect()).collect();
        candidates.push(rref(&field, rows, d.source).0);
    }
    let tried = candidates.len();
    let mut best: Option<Subrepresentation<_>> = None;
    for c in candidates {
        if let Some(cand) = best_over(rep, c) {
            if best.as_ref().is_none_or(|b| cand.theta > b.theta) {
                best = Some(cand);
            }
        }
    }
    let (status, witness) = verdict_from(d, best);
    Ok(SampledStability { exhaustive: false, subspaces_tried: tried, status, witness })
}

/// Uniformly random representation over `F_p`, deterministic in `seed`.
pub fn random_rep(dims: DimVector, field: PrimeField, seed: u64) -> QuiverRep<PrimeField> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = field.order();
    let arrows = core::array::from_fn(|_| {
        let mut m = Matrix::zeros(&field, dims.target, dims.source);
        for r in 0..dims.target {
            for c in 0..dims.source {
                m.set(r, c, rng.gen_range(0..q));
            }
        }
        m
    });
    QuiverRep { field, dims, arrows }
}

/// Random representation over the rationals with integer entries in
/// `-bound..=bound`, deterministic in `seed`.
pub fn random_rational_rep(dims: DimVector, bound: i64, seed: u64) -> QuiverRep<Rationals> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let field = Rationals;
    let arrows = core::array::from_fn(|_| {
        let mut m = Matrix::zeros(&field, dims.target, dims.source);
        for r in 0..dims.target {
            for c in 0..dims.source {
                m.set(r, c, field.from_i64(rng.gen_range(-bound..=bound)));
            }
        }
        m
    });
    QuiverRep { field, dims, arrows }
}
