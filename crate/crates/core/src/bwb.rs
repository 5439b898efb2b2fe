//! Irreducible equivariant bundles on `Gr(k, n) = SL(n)/P_k` and their
//! cohomology by the Borel-Weil-Bott theorem.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::{BigInt, BigUint};
use thiserror::Error;

use crate::lie::{self, DominantizationResult, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BwbError {
    #[error("unknown bundle name `{0}`")]
    UnknownBundle(String),
    #[error("marked node {k} is not in 1..={max}")]
    InvalidNode { k: usize, max: usize },
    #[error("weight {weight} is not P-dominant for marked node {k}")]
    NotParabolicDominant { weight: Weight, k: usize },
    #[error("weight has rank {got}, expected SL({expected})")]
    RankMismatch { expected: usize, got: usize },
    #[error("bundle {name} is not defined on Gr({k}, {n})")]
    NotDefined { name: BundleName, k: usize, n: usize },
}

/// Bundles with a fixed name on any `Gr(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BundleName {
    /// tautological subbundle
    U,
    Ustar,
    /// universal quotient bundle
    Q,
    Qstar,
    O,
    Sym2Ustar,
    Wedge2Qstar,
}

impl BundleName {
    pub const ALL: [BundleName; 7] =
        [Self::U, Self::Ustar, Self::Q, Self::Qstar, Self::O, Self::Sym2Ustar, Self::Wedge2Qstar];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::U => "U",
            Self::Ustar => "Ustar",
            Self::Q => "Q",
            Self::Qstar => "Qstar",
            Self::O => "O",
            Self::Sym2Ustar => "Sym2Ustar",
            Self::Wedge2Qstar => "wedge2Qstar",
        }
    }

    /// Catalog partner of the dual bundle, when the dual is itself in the catalog.
    pub fn dual(self) -> Option<BundleName> {
        match self {
            Self::U => Some(Self::Ustar),
            Self::Ustar => Some(Self::U),
            Self::Q => Some(Self::Qstar),
            Self::Qstar => Some(Self::Q),
            Self::O => Some(Self::O),
            Self::Sym2Ustar | Self::Wedge2Qstar => None,
        }
    }
}

impl fmt::Display for BundleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BundleName {
    type Err = BwbError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|b| b.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| BwbError::UnknownBundle(s.into()))
    }
}

/// `G x_P V(weight)` on `Gr(k, n)`, where `k` is the crossed node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivariantBundle {
    k: usize,
    weight: Weight,
    label: Option<String>,
}

impl EquivariantBundle {
    pub fn new(k: usize, weight: Weight) -> Result<Self, BwbError> {
        let n = weight.n();
        if k == 0 || k >= n {
            return Err(BwbError::InvalidNode { k, max: n.saturating_sub(1) });
        }
        let p_dominant = weight.coeffs().iter().enumerate().all(|(idx, &c)| idx + 1 == k || c >= 0);
        if !p_dominant {
            return Err(BwbError::NotParabolicDominant { weight, k });
        }
        Ok(Self { k, weight, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn n(&self) -> usize {
        self.weight.n()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// `k (n - k)`
    pub fn grassmannian_dim(&self) -> usize {
        self.k * (self.n() - self.k)
    }
}

/// Catalog bundle on `Gr(2, 5)`.
pub fn catalog(name: BundleName) -> EquivariantBundle {
    catalog_on(name, 5, 2).expect("every catalog entry exists on Gr(2,5)")
}

/// Catalog bundle on `Gr(k, n)`.
///
/// `U = E_{w_{k-1} - w_k}`, `U* = E_{w_1}`, `Q = E_{w_{n-1}}`,
/// `Q* = E_{-w_k + w_{k+1}}`, `Sym^2 U* = E_{2 w_1}` and
/// `wedge^2 Q* = E_{-w_k + w_{k+2}}` (with `w_0 = w_n = 0`).
pub fn catalog_on(name: BundleName, n: usize, k: usize) -> Result<EquivariantBundle, BwbError> {
    if n < 2 || k == 0 || k >= n {
        return Err(BwbError::InvalidNode { k, max: n.saturating_sub(1) });
    }
    let mut coeffs = alloc::vec![0i64; n - 1];
    let mut add = |node: usize, v: i64| {
        if (1..n).contains(&node) {
            coeffs[node - 1] += v;
        }
    };
    match name {
        BundleName::U => {
            add(k - 1, 1);
            add(k, -1);
        }
        BundleName::Ustar => add(1, 1),
        BundleName::Q => add(n - 1, 1),
        BundleName::Qstar => {
            add(k, -1);
            add(k + 1, 1);
        }
        BundleName::O => {}
        BundleName::Sym2Ustar => add(1, 2),
        BundleName::Wedge2Qstar => {
            if n - k < 2 {
                return Err(BwbError::NotDefined { name, k, n });
            }
            add(k, -1);
            add(k + 2, 1);
        }
    }
    Ok(EquivariantBundle::new(k, Weight::from_coeffs(&coeffs))?.with_label(name.as_str()))
}

/// Tensor with `O(j)`, which on `Gr(k, n)` is `E_{j w_k}`.
pub fn twist(b: &EquivariantBundle, j: i64) -> EquivariantBundle {
    let mut weight = b.weight.clone();
    *weight.coeff_mut(b.k) += j;
    EquivariantBundle { k: b.k, weight, label: b.label.clone() }
}

/// Rank of the bundle: the dimension of the irreducible module of the Levi
/// factor `S(GL(k) x GL(n-k))` with the given highest weight.
pub fn bundle_rank(b: &EquivariantBundle) -> BigUint {
    let c = b.weight.coeffs();
    let left = Weight::from_coeffs(&c[..b.k - 1]);
    let right = Weight::from_coeffs(&c[b.k..]);
    let dim = |w: &Weight| lie::irrep_dim(w).expect("P-dominance is a constructor invariant");
    dim(&left) * dim(&right)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyEntry {
    pub dim: BigUint,
    /// Highest weight of the `SL(n)` module, when the group carries one.
    pub highest_weight: Option<Weight>,
}

/// Nonzero cohomology groups by degree; absent degrees are zero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CohomologyTable {
    entries: BTreeMap<usize, CohomologyEntry>,
}

impl CohomologyTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, degree: usize, entry: CohomologyEntry) {
        if entry.dim != BigUint::default() {
            self.entries.insert(degree, entry);
        }
    }

    pub fn entries(&self) -> &BTreeMap<usize, CohomologyEntry> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `h^i`, zero when absent.
    pub fn h(&self, degree: usize) -> BigUint {
        self.entries.get(&degree).map(|e| e.dim.clone()).unwrap_or_default()
    }

    /// `(degree, dim)` pairs in increasing degree.
    pub fn dims(&self) -> Vec<(usize, BigUint)> {
        self.entries.iter().map(|(&d, e)| (d, e.dim.clone())).collect()
    }

    pub fn euler_characteristic(&self) -> BigInt {
        self.entries
            .iter()
            .map(|(&d, e)| {
                let v = BigInt::from(e.dim.clone());
                if d % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
}

/// Bott's algorithm: shift by rho, dominantize, and read off the single
/// nonzero group.
pub fn cohomology(b: &EquivariantBundle) -> CohomologyTable {
    let mut table = CohomologyTable::new();
    if let DominantizationResult::Regular { length, dominant } = lie::dominantize(&b.weight.rho_shifted()) {
        let dim = lie::weyl_dim(&dominant).expect("dominantize returns strictly dominant weights");
        let highest = dominant.minus(&Weight::rho(b.n()));
        table.insert(length, CohomologyEntry { dim, highest_weight: Some(highest) });
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u32) -> BigUint {
        BigUint::from(x)
    }

    fn single(table: &CohomologyTable) -> Option<(usize, BigUint, Weight)> {
        assert!(table.entries().len() <= 1);
        table.entries().iter().next().map(|(&d, e)| (d, e.dim.clone(), e.highest_weight.clone().unwrap()))
    }

    #[test]
    fn catalog_weights() {
        assert_eq!(catalog(BundleName::U).weight().coeffs(), &[1, -1, 0, 0]);
        assert_eq!(catalog(BundleName::Qstar).weight().coeffs(), &[0, -1, 1, 0]);
        assert_eq!(catalog(BundleName::O).weight().coeffs(), &[0, 0, 0, 0]);
        assert_eq!(catalog(BundleName::Ustar).weight().coeffs(), &[1, 0, 0, 0]);
        assert_eq!(catalog(BundleName::Q).weight().coeffs(), &[0, 0, 0, 1]);
        assert_eq!(catalog(BundleName::Sym2Ustar).weight().coeffs(), &[2, 0, 0, 0]);
        assert_eq!(catalog(BundleName::Wedge2Qstar).weight().coeffs(), &[0, -1, 0, 1]);
        assert_eq!(catalog(BundleName::U).k(), 2);
    }

    #[test]
    fn names_parse() {
        assert_eq!("Qstar".parse::<BundleName>().unwrap(), BundleName::Qstar);
        assert_eq!("wedge2Qstar".parse::<BundleName>().unwrap(), BundleName::Wedge2Qstar);
        assert!(matches!("V".parse::<BundleName>(), Err(BwbError::UnknownBundle(_))));
    }

    #[test]
    fn twisting() {
        let b = catalog(BundleName::U);
        assert_eq!(twist(&b, -1).weight().coeffs(), &[1, -2, 0, 0]);
        assert_eq!(twist(&b, -5).weight().coeffs(), &[1, -6, 0, 0]);
        assert_eq!(twist(&twist(&b, 7), -7), b);
        let o = catalog(BundleName::O);
        assert_eq!(twist(&o, 0), o);
    }

    #[test]
    fn ranks() {
        assert_eq!(bundle_rank(&catalog(BundleName::U)), u(2));
        assert_eq!(bundle_rank(&catalog(BundleName::Ustar)), u(2));
        assert_eq!(bundle_rank(&catalog(BundleName::Q)), u(3));
        assert_eq!(bundle_rank(&catalog(BundleName::Qstar)), u(3));
        assert_eq!(bundle_rank(&catalog(BundleName::O)), u(1));
        assert_eq!(bundle_rank(&catalog(BundleName::Sym2Ustar)), u(3));
        assert_eq!(bundle_rank(&catalog(BundleName::Wedge2Qstar)), u(3));
        // ranks on other Grassmannians
        assert_eq!(bundle_rank(&catalog_on(BundleName::Q, 7, 3).unwrap()), u(4));
        assert_eq!(bundle_rank(&catalog_on(BundleName::Sym2Ustar, 7, 3).unwrap()), u(6));
        assert_eq!(bundle_rank(&catalog_on(BundleName::Wedge2Qstar, 7, 3).unwrap()), u(6));
    }

    #[test]
    fn rejects_non_parabolic_weights() {
        let bad = Weight::from_coeffs(&[-1, 0, 0, 0]);
        assert!(matches!(EquivariantBundle::new(2, bad), Err(BwbError::NotParabolicDominant { .. })));
        assert!(EquivariantBundle::new(5, Weight::zero(5)).is_err());
        assert!(matches!(catalog_on(BundleName::Wedge2Qstar, 5, 4), Err(BwbError::NotDefined { .. })));
    }

    #[test]
    fn bott_on_u_twists() {
        let b = catalog(BundleName::U);
        assert_eq!(single(&cohomology(&twist(&b, 1))), Some((0, u(5), Weight::from_coeffs(&[1, 0, 0, 0]))));
        assert_eq!(single(&cohomology(&twist(&b, -5))), Some((6, u(5), Weight::from_coeffs(&[0, 0, 0, 1]))));
        for j in 0..=4 {
            assert!(cohomology(&twist(&b, -j)).is_empty(), "U(-{j})");
        }
    }

    #[test]
    fn bott_on_qstar_twists() {
        let b = catalog(BundleName::Qstar);
        assert_eq!(single(&cohomology(&twist(&b, 1))), Some((0, u(10), Weight::from_coeffs(&[0, 0, 1, 0]))));
        assert_eq!(single(&cohomology(&twist(&b, -5))), Some((6, u(5), Weight::from_coeffs(&[1, 0, 0, 0]))));
        for j in 0..=4 {
            assert!(cohomology(&twist(&b, -j)).is_empty(), "Q*(-{j})");
        }
    }

    #[test]
    fn sym2_ustar_is_ulrich_on_the_grassmannian() {
        let b = catalog(BundleName::Sym2Ustar);
        for j in 1..=6 {
            assert!(cohomology(&twist(&b, -j)).is_empty(), "Sym2U*(-{j})");
        }
        assert_eq!(single(&cohomology(&b)), Some((0, u(15), Weight::from_coeffs(&[2, 0, 0, 0]))));
    }

    #[test]
    fn canonical_bundle_has_top_cohomology() {
        let o = catalog(BundleName::O);
        let table = cohomology(&twist(&o, -5));
        assert_eq!(table.dims(), alloc::vec![(6, u(1))]);
        assert_eq!(table.euler_characteristic(), BigInt::from(1));
        assert_eq!(cohomology(&twist(&o, 1)).h(0), u(10));
    }

    #[test]
    fn euler_sign_follows_degree() {
        let t = cohomology(&twist(&catalog(BundleName::U), -2));
        assert!(t.is_empty());
        assert_eq!(t.euler_characteristic(), BigInt::from(0));
        let mut odd = CohomologyTable::new();
        odd.insert(3, CohomologyEntry { dim: u(5), highest_weight: None });
        assert_eq!(odd.euler_characteristic(), BigInt::from(-5));
    }
}
