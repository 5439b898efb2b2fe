//! The reproduction checklist run by `v5kit verify paper`.

use anyhow::{ensure, Context, Result};
use num_bigint::{BigInt, BigUint};
use v5kit_core::bwb::{bundle_rank, catalog, cohomology, twist, BundleName, CohomologyTable};
use v5kit_core::chow::{self, chi, coker_class, euler_pairing, ulrich_chern, BundleClassV5, HilbertPolynomialV5};
use v5kit_core::koszul::{restrict_cohomology, ulrich_check, RestrictionStatus};
use v5kit_core::lie::{self, reflection_chain, ChainOutcome, Weight};
use v5kit_core::quiver::field::PrimeField;
use v5kit_core::quiver::linalg::Matrix;
use v5kit_core::quiver::{
    check_stability, euler_form, hom_ext, moduli_dim, random_rep, DimVector, QuiverRep, StabilityStatus,
};

pub struct Claim {
    pub name: &'static str,
    pub check: fn() -> Result<()>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub name: &'static str,
    /// `None` on success, otherwise the failure message.
    pub failure: Option<String>,
}

pub fn all() -> Vec<Claim> {
    vec![
        Claim { name: "restrictions of U(j) and Q*(j) to V5 for j = -2..1", check: restrictions_to_v5 },
        Claim { name: "ambient cohomology of U(j) and Q*(j) on Gr(2,5)", check: ambient_tables },
        Claim { name: "reflection chains for U(-1) and U(-5)", check: chains },
        Claim { name: "Sym2 U* is Ulrich on Gr(2,5) and on V5", check: sym2_ulrich },
        Claim { name: "chi(E,E) = -r^2 and moduli dimension r^2+1", check: quiver_geometry },
        Claim { name: "Riemann-Roch on V5", check: riemann_roch },
        Claim { name: "cokernel presentation of E(-1)", check: cokernel },
        Claim { name: "Hom - Ext is the Euler form; Serre duality; forced stability cases", check: properties },
        Claim { name: "O(1) on V5 needs the Koszul maps", check: honest_indeterminacy },
        Claim { name: "bundle ranks and Weyl dimensions", check: ranks },
    ]
}

pub fn run_all() -> Vec<ClaimResult> {
    all()
        .into_iter()
        .map(|c| ClaimResult { name: c.name, failure: (c.check)().err().map(|e| format!("{e:#}")) })
        .collect()
}

fn dims(table: &CohomologyTable) -> Vec<(usize, u64)> {
    table.dims().into_iter().map(|(d, v)| (d, u64::try_from(&v).unwrap_or(u64::MAX))).collect()
}

fn on_v5(name: BundleName, j: i64) -> Result<CohomologyTable> {
    let res = restrict_cohomology(&twist(&catalog(name), j), 3, false);
    ensure!(res.status == RestrictionStatus::Exact, "{name}({j}) is {:?}", res.status);
    res.table.context("exact result without a table")
}

fn restrictions_to_v5() -> Result<()> {
    type Case = (BundleName, i64, &'static [(usize, u64)]);
    let expected: [Case; 8] = [
        (BundleName::U, 1, &[(0, 5)]),
        (BundleName::Qstar, 1, &[(0, 10)]),
        (BundleName::U, 0, &[]),
        (BundleName::U, -1, &[]),
        (BundleName::Qstar, 0, &[]),
        (BundleName::Qstar, -1, &[]),
        (BundleName::U, -2, &[(3, 5)]),
        (BundleName::Qstar, -2, &[(3, 5)]),
    ];
    for (name, j, want) in expected {
        let got = dims(&on_v5(name, j)?);
        ensure!(got == want, "{name}({j}): {got:?} != {want:?}");
    }
    Ok(())
}

fn ambient(name: BundleName, j: i64, want: &[(usize, u64)], hw: Option<&[i64]>) -> Result<()> {
    let table = cohomology(&twist(&catalog(name), j));
    ensure!(dims(&table) == want, "{name}({j}): {:?}", dims(&table));
    if let Some(hw) = hw {
        let got = table.entries().values().next().and_then(|e| e.highest_weight.clone());
        ensure!(got == Some(Weight::from_coeffs(hw)), "{name}({j}) highest weight {got:?}");
    }
    Ok(())
}

fn ambient_tables() -> Result<()> {
    ambient(BundleName::U, 1, &[(0, 5)], Some(&[1, 0, 0, 0]))?;
    ambient(BundleName::U, -5, &[(6, 5)], Some(&[0, 0, 0, 1]))?;
    ambient(BundleName::Qstar, 1, &[(0, 10)], Some(&[0, 0, 1, 0]))?;
    ambient(BundleName::Qstar, -5, &[(6, 5)], Some(&[1, 0, 0, 0]))?;
    for j in 0..=4 {
        ambient(BundleName::U, -j, &[], None)?;
        ambient(BundleName::Qstar, -j, &[], None)?;
    }
    Ok(())
}

fn chains() -> Result<()> {
    let short = reflection_chain(&twist(&catalog(BundleName::U), -1).weight().rho_shifted());
    ensure!(short.start.coeffs() == [2, -1, 1, 1], "start {}", short.start);
    ensure!(short.reflections() == [2], "reflections {:?}", short.reflections());
    ensure!(short.end().coeffs() == [1, 1, 0, 1], "end {}", short.end());
    ensure!(short.outcome == ChainOutcome::Singular, "U(-1) should be singular");

    let long = reflection_chain(&twist(&catalog(BundleName::U), -5).weight().rho_shifted());
    ensure!(long.start.coeffs() == [2, -5, 1, 1], "start {}", long.start);
    ensure!(long.reflections() == [2, 1, 3, 2, 4, 3], "reflections {:?}", long.reflections());
    ensure!(long.steps[0].result.coeffs() == [-3, 5, -4, 1], "first step {}", long.steps[0].result);
    ensure!(long.end().coeffs() == [1, 1, 1, 2], "end {}", long.end());
    ensure!(long.outcome == ChainOutcome::StrictlyDominant, "U(-5) should be regular");
    ensure!(long.end().minus(&Weight::rho(5)).coeffs() == [0, 0, 0, 1], "image is not w4");
    Ok(())
}

fn sym2_ulrich() -> Result<()> {
    let s = catalog(BundleName::Sym2Ustar);
    ensure!(ulrich_check(&s, 0).is_ulrich(), "not Ulrich on Gr(2,5): {:?}", ulrich_check(&s, 0));
    ensure!(ulrich_check(&s, 3).is_ulrich(), "not Ulrich on V5: {:?}", ulrich_check(&s, 3));
    let h = dims(&on_v5(BundleName::Sym2Ustar, 0)?);
    ensure!(h == [(0, 15)], "h(V5, Sym2 U*) = {h:?}");
    let value = HilbertPolynomialV5::ulrich(3).eval(0);
    ensure!(value == BigInt::from(15).into(), "Ulrich polynomial at 0 is {value}");
    Ok(())
}

fn quiver_geometry() -> Result<()> {
    for r in 1..=10i64 {
        let d = DimVector::new(r as usize, r as usize);
        ensure!(euler_form(d, d) == -r * r, "euler_form at r = {r}");
        let e = ulrich_chern(r)?;
        ensure!(euler_pairing(&e, &e)? == BigInt::from(-r * r), "chi(E,E) at r = {r}");
        ensure!(moduli_dim(d)? == r * r + 1, "moduli dimension at r = {r}");
    }
    ensure!(moduli_dim(DimVector::new(2, 2))? == 5, "rank 2 moduli dimension");
    Ok(())
}

fn riemann_roch() -> Result<()> {
    let o = BundleClassV5::trivial();
    ensure!(chi(&o, 0)? == BigInt::from(1), "chi(O) = {}", chi(&o, 0)?);
    ensure!(chi(&o, 1)? == BigInt::from(7), "chi(O(1)) = {}", chi(&o, 1)?);
    let generic = restrict_cohomology(&twist(&catalog(BundleName::O), 1), 3, true);
    let h0 = generic.table.context("generic chase left O(1) unresolved")?.h(0);
    ensure!(h0 == BigUint::from(7u32), "Koszul chase gives h0(O(1)) = {h0}");
    let u = BundleClassV5::of(BundleName::U)?;
    ensure!(chi(&u, -2)? == BigInt::from(-5), "chi(U(-2)) = {}", chi(&u, -2)?);
    let qs = BundleClassV5::of(BundleName::Qstar)?;
    for r in 2..=5 {
        let e = ulrich_chern(r)?;
        for (label, f) in [("U", &u), ("Q*", &qs)] {
            let v = chow::chi_of_character(&chow::ch_tensor(f, &e), -2)?;
            ensure!(v == BigInt::from(r), "chi({label} x E(-2)) = {v} at r = {r}");
        }
    }
    Ok(())
}

fn cokernel() -> Result<()> {
    for r in 1..=10u32 {
        let twisted = coker_class(r)?.twist(1)?;
        let expected = ulrich_chern(i64::from(r))?;
        ensure!(twisted == expected, "rank {r}: {twisted:?} != {expected:?}");
    }
    Ok(())
}

fn properties() -> Result<()> {
    let fields = [2u32, 3, 5].map(|q| PrimeField::new(q).expect("prime"));
    for seed in 0..200u64 {
        let f = fields[(seed % 3) as usize];
        let da = DimVector::new((seed % 4) as usize, ((seed / 4) % 4) as usize);
        let db = DimVector::new(((seed / 16) % 3) as usize, ((seed / 48) % 4) as usize);
        let (hom, ext) = hom_ext(&random_rep(da, f, seed), &random_rep(db, f, seed + 1000))?;
        ensure!(hom as i64 - ext as i64 == euler_form(da, db), "seed {seed}");
    }
    for (x, dual) in
        [(BundleName::U, BundleName::Ustar), (BundleName::Q, BundleName::Qstar), (BundleName::O, BundleName::O)]
    {
        for (a, b) in [(x, dual), (dual, x)] {
            for j in -6..=2 {
                let lhs = cohomology(&twist(&catalog(a), j));
                let rhs = cohomology(&twist(&catalog(b), -j - 5));
                for i in 0..=6 {
                    ensure!(lhs.h(i) == rhs.h(6 - i), "{a}({j}) degree {i}");
                }
            }
        }
    }
    let f2 = fields[0];
    let d = DimVector::new(1, 1);
    ensure!(check_stability(&QuiverRep::zero(f2, d))?.status == StabilityStatus::Unstable, "zero rep");
    let single = |maps: [u32; 3]| {
        QuiverRep::new(f2, d, maps.map(|m| Matrix::from_rows(vec![vec![m]], 1).expect("1x1"))).expect("shape")
    };
    let a = single([1, 0, 0]);
    let b = single([0, 1, 1]);
    ensure!(check_stability(&a)?.status == StabilityStatus::Stable, "(1,0,0) should be stable");
    let sum = a.direct_sum(&b)?;
    let v = check_stability(&sum)?;
    ensure!(v.status == StabilityStatus::StrictlySemistable, "direct sum is {:?}", v.status);
    ensure!(v.witness.is_some_and(|w| w.theta == 0), "direct sum witness");
    Ok(())
}

fn honest_indeterminacy() -> Result<()> {
    let res = restrict_cohomology(&twist(&catalog(BundleName::O), 1), 3, false);
    ensure!(res.status == RestrictionStatus::NeedsMaps, "status {:?}", res.status);
    ensure!(res.table.is_none(), "a table was guessed");
    Ok(())
}

fn ranks() -> Result<()> {
    for (name, r) in
        [(BundleName::U, 2u32), (BundleName::Qstar, 3), (BundleName::Sym2Ustar, 3), (BundleName::Wedge2Qstar, 3)]
    {
        ensure!(bundle_rank(&catalog(name)) == BigUint::from(r), "rank of {name}");
    }
    for (coeffs, want) in [([2, 1, 1, 1], 5u32), ([1, 1, 2, 1], 10), ([1, 1, 1, 1], 1)] {
        let d = lie::weyl_dim(&Weight::from_coeffs(&coeffs))?;
        ensure!(d == BigUint::from(want), "weyl_dim{coeffs:?} = {d}");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_claim_passes() {
        for r in super::run_all() {
            assert!(r.failure.is_none(), "{}: {:?}", r.name, r.failure);
        }
    }
}
