//! Restriction of cohomology from `Gr(k, n)` to a linear section of
//! codimension `c`.
//!
//! The Koszul resolution
//! `0 -> O(-c)^{C(c,c)} -> ... -> O(-1)^{C(c,1)} -> O -> O_X -> 0`,
//! tensored with a bundle `E`, gives a spectral sequence whose first page has
//! `C(c,p) * h^q(Gr, E(-p))` in position `(p, q)` and abuts to `H^{q-p}(X, E|_X)`.
//! Only dimensions are known here, so a differential `d_r` from `(p, q)` to
//! `(p - r, q - r + 1)` between two nonzero terms makes the answer depend on
//! maps that are not modelled.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::bwb::{self, CohomologyEntry, CohomologyTable, EquivariantBundle};

fn binomial(n: usize, k: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for i in 0..k {
        acc = acc * BigUint::from((n - i) as u64) / BigUint::from((i + 1) as u64);
    }
    acc
}

/// First page of the Koszul spectral sequence; only nonzero terms are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KoszulPage {
    codim: usize,
    ambient_dim: usize,
    terms: BTreeMap<(usize, usize), BigUint>,
}

impl KoszulPage {
    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Nonzero terms keyed by `(p, q)`.
    pub fn terms(&self) -> &BTreeMap<(usize, usize), BigUint> {
        &self.terms
    }

    pub fn term(&self, p: usize, q: usize) -> BigUint {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    /// `sum_p (-1)^p C(c,p) chi(Gr, E(-p))`, which equals `chi(X, E|_X)`.
    pub fn euler_characteristic(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&(p, q), v)| {
                let v = BigInt::from(v.clone());
                if (p + q) % 2 == 0 {
                    v
                } else {
                    -v
                }
            })
            .sum()
    }
}

/// `C(c, p) * h^q(Gr, E(-p))` for `0 <= p <= c`.
///
/// # Panics
///
/// If `c` exceeds the dimension of the Grassmannian.
pub fn koszul_page(b: &EquivariantBundle, c: usize) -> KoszulPage {
    let ambient_dim = b.grassmannian_dim();
    assert!(c <= ambient_dim, "codimension {c} exceeds dim Gr = {ambient_dim}");
    let mut terms = BTreeMap::new();
    for p in 0..=c {
        let table = bwb::cohomology(&bwb::twist(b, -(p as i64)));
        let mult = binomial(c, p);
        for (q, dim) in table.dims() {
            terms.insert((p, q), dim * &mult);
        }
    }
    KoszulPage { codim: c, ambient_dim, terms }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RestrictionStatus {
    /// No differential can connect two nonzero terms; the page is the answer.
    Exact,
    /// Only `d_1` differentials between disjoint pairs of terms, resolved
    /// by assuming maximal rank.
    GenericAssumed,
    /// The answer depends on differentials that dimensions cannot determine.
    NeedsMaps,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionResult {
    pub status: RestrictionStatus,
    /// Absent exactly when `status` is [`RestrictionStatus::NeedsMaps`].
    pub table: Option<CohomologyTable>,
    pub page: KoszulPage,
}

/// `(p, q) -> (p', q')` is a possible `d_r` iff `p' = p - r`, `q' = q - r + 1`, `r >= 1`.
fn may_hit(from: (usize, usize), to: (usize, usize)) -> Option<usize> {
    let (p, q) = from;
    let (p2, q2) = to;
    if p2 >= p {
        return None;
    }
    let r = p - p2;
    (q + 1 == q2 + r).then_some(r)
}

/// `(from, to, r)` for a possible `d_r`.
type Edge = ((usize, usize), (usize, usize), usize);

fn edges(terms: &BTreeMap<(usize, usize), BigUint>) -> Vec<Edge> {
    let mut out = Vec::new();
    for &from in terms.keys() {
        for &to in terms.keys() {
            if let Some(r) = may_hit(from, to) {
                out.push((from, to, r));
            }
        }
    }
    out
}

/// Resolves `d_1` edges that form a matching by maximal-rank cancellation.
/// Returns `None` when the edge pattern is anything else.
fn cancel_generic(terms: &BTreeMap<(usize, usize), BigUint>) -> Option<BTreeMap<(usize, usize), BigUint>> {
    let all = edges(terms);
    if all.iter().any(|&(_, _, r)| r != 1) {
        return None;
    }
    let mut touched = BTreeSet::new();
    for &(from, to, _) in &all {
        if !touched.insert(from) || !touched.insert(to) {
            return None;
        }
    }
    let mut out = terms.clone();
    for &(from, to, _) in &all {
        let rank = terms[&from].clone().min(terms[&to].clone());
        for key in [from, to] {
            let v = out.get_mut(&key).expect("edge endpoints are terms");
            *v -= &rank;
        }
    }
    out.retain(|_, v| !v.is_zero());
    // Survivors must not be linked by a longer differential.
    if !edges(&out).is_empty() {
        return None;
    }
    Some(out)
}

/// Collapses surviving terms to a table on `X`, or `None` if some survivor
/// sits outside the degree range `0..=dim X`.
fn collapse(terms: &BTreeMap<(usize, usize), BigUint>, dim_x: usize) -> Option<CohomologyTable> {
    let mut by_degree: BTreeMap<usize, BigUint> = BTreeMap::new();
    for (&(p, q), v) in terms {
        if q < p || q - p > dim_x {
            return None;
        }
        *by_degree.entry(q - p).or_default() += v;
    }
    let mut table = CohomologyTable::new();
    for (degree, dim) in by_degree {
        table.insert(degree, CohomologyEntry { dim, highest_weight: None });
    }
    Some(table)
}

/// Cohomology of `E|_X` for a codimension-`c` linear section `X`.
///
/// With `assume_generic` a page whose only possible differentials are
/// disjoint `d_1` maps is resolved as if every such map had maximal rank.
pub fn restrict_cohomology(b: &EquivariantBundle, c: usize, assume_generic: bool) -> RestrictionResult {
    let page = koszul_page(b, c);
    let dim_x = page.ambient_dim - c;
    let needs_maps = |page| RestrictionResult { status: RestrictionStatus::NeedsMaps, table: None, page };
    if edges(&page.terms).is_empty() {
        return match collapse(&page.terms, dim_x) {
            Some(table) => RestrictionResult { status: RestrictionStatus::Exact, table: Some(table), page },
            None => needs_maps(page),
        };
    }
    if assume_generic {
        if let Some(table) = cancel_generic(&page.terms).and_then(|t| collapse(&t, dim_x)) {
            return RestrictionResult { status: RestrictionStatus::GenericAssumed, table: Some(table), page };
        }
    }
    needs_maps(page)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UlrichVerdict {
    Ulrich,
    /// `H^degree(E(-twist)) != 0`.
    NotUlrich {
        twist: usize,
        degree: usize,
    },
    /// Restriction of `E(-twist)` needs the Koszul maps.
    Indeterminate {
        twist: usize,
    },
}

impl UlrichVerdict {
    pub fn is_ulrich(&self) -> bool {
        matches!(self, Self::Ulrich)
    }
}

/// Checks `H^*(X, E(-j)) = 0` for `j = 1..=dim X`, where `X` is the
/// Grassmannian itself (`c = 0`) or a codimension-`c` linear section.
pub fn ulrich_check(b: &EquivariantBundle, c: usize) -> UlrichVerdict {
    let dim_x = b.grassmannian_dim().saturating_sub(c);
    for j in 1..=dim_x {
        let twisted = bwb::twist(b, -(j as i64));
        let table = if c == 0 {
            bwb::cohomology(&twisted)
        } else {
            let res = restrict_cohomology(&twisted, c, false);
            match (res.status, res.table) {
                (RestrictionStatus::Exact, Some(t)) => t,
                _ => return UlrichVerdict::Indeterminate { twist: j },
            }
        };
        if let Some(&degree) = table.entries().keys().next() {
            return UlrichVerdict::NotUlrich { twist: j, degree };
        }
    }
    UlrichVerdict::Ulrich
}
