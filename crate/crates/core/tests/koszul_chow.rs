use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use proptest::prelude::*;
use v5kit_core::bwb::{self, catalog, twist, BundleName, EquivariantBundle};
use v5kit_core::chow::{self, chi, coker_class, euler_pairing, ulrich_chern, BundleClassV5, ChowClassV5};
use v5kit_core::koszul::{koszul_page, restrict_cohomology, ulrich_check, RestrictionStatus};
use v5kit_core::lie::Weight;
use v5kit_core::quiver::{euler_form, DimVector};

fn chi_gr(b: &EquivariantBundle) -> BigInt {
    bwb::cohomology(b).euler_characteristic()
}

fn binom(n: u64, k: u64) -> i64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1)) as i64
}

fn gr25_bundle() -> impl Strategy<Value = EquivariantBundle> {
    (0i64..4, -8i64..4, 0i64..4, 0i64..4)
        .prop_map(|(a, b, c, d)| EquivariantBundle::new(2, Weight::from_coeffs(&[a, b, c, d])).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn euler_consistency(b in gr25_bundle(), c in 1usize..=3, generic in any::<bool>()) {
        let res = restrict_cohomology(&b, c, generic);
        let expected: BigInt = (0..=c)
            .map(|p| chi_gr(&twist(&b, -(p as i64))) * binom(c as u64, p as u64) * if p % 2 == 0 { 1 } else { -1 })
            .sum();
        prop_assert_eq!(res.page.euler_characteristic(), expected.clone());
        if let Some(table) = &res.table {
            prop_assert!(res.status != RestrictionStatus::NeedsMaps);
            prop_assert_eq!(table.euler_characteristic(), expected);
            for &deg in table.entries().keys() {
                prop_assert!(deg <= 6 - c);
            }
        } else {
            prop_assert_eq!(res.status, RestrictionStatus::NeedsMaps);
        }
        if !generic {
            prop_assert!(res.status != RestrictionStatus::GenericAssumed);
        }
    }

    #[test]
    fn ulrich_is_inherited_by_sections(b in gr25_bundle()) {
        if ulrich_check(&b, 0).is_ulrich() {
            for c in 1..=3 {
                prop_assert!(ulrich_check(&b, c).is_ulrich());
            }
        }
    }

    #[test]
    fn chow_ring_axioms(
        x in proptest::array::uniform4(-20i64..20),
        y in proptest::array::uniform4(-20i64..20),
        z in proptest::array::uniform4(-20i64..20),
        d in 1i64..7,
    ) {
        let scale = BigRational::new(BigInt::from(1), BigInt::from(d));
        let x = ChowClassV5::from_ints(x).scale(&scale);
        let y = ChowClassV5::from_ints(y);
        let z = ChowClassV5::from_ints(z);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&ChowClassV5::one() * &x, x.clone());
    }
}

#[test]
fn ulrich_heredity_holds_on_the_known_example() {
    let s = catalog(BundleName::Sym2Ustar);
    assert!(ulrich_check(&s, 0).is_ulrich());
    for c in 1..=3 {
        assert!(ulrich_check(&s, c).is_ulrich());
        // every page term vanishes identically
        for j in 1..=(6 - c) as i64 {
            assert!(koszul_page(&twist(&s, -j), c).terms().is_empty());
        }
    }
}

/// The eight restriction statements for `U(j)` and `Q*(j)`, `j = -2..=1`.
type Case = (BundleName, i64, Vec<(usize, u32)>);

fn restriction_cases() -> Vec<Case> {
    vec![
        (BundleName::U, 1, vec![(0, 5)]),
        (BundleName::Qstar, 1, vec![(0, 10)]),
        (BundleName::U, 0, vec![]),
        (BundleName::U, -1, vec![]),
        (BundleName::Qstar, 0, vec![]),
        (BundleName::Qstar, -1, vec![]),
        (BundleName::U, -2, vec![(3, 5)]),
        (BundleName::Qstar, -2, vec![(3, 5)]),
    ]
}

#[test]
fn restrictions_match_riemann_roch() {
    for (name, j, expected) in restriction_cases() {
        let res = restrict_cohomology(&twist(&catalog(name), j), 3, false);
        assert_eq!(res.status, RestrictionStatus::Exact, "{name}({j})");
        let table = res.table.unwrap();
        let dims: Vec<(usize, BigUint)> = expected.iter().map(|&(d, v)| (d, BigUint::from(v))).collect();
        assert_eq!(table.dims(), dims, "{name}({j})");
        let class = BundleClassV5::of(name).unwrap();
        assert_eq!(table.euler_characteristic(), chi(&class, j).unwrap(), "{name}({j})");
    }
}

#[test]
fn restriction_of_sym2_ustar() {
    let res = restrict_cohomology(&catalog(BundleName::Sym2Ustar), 3, false);
    assert_eq!(res.status, RestrictionStatus::Exact);
    assert_eq!(res.table.unwrap().dims(), vec![(0, BigUint::from(15u32))]);
    let class = BundleClassV5::of(BundleName::Sym2Ustar).unwrap();
    assert_eq!(chi(&class, 0).unwrap(), BigInt::from(15));
}

#[test]
fn o1_two_routes_agree() {
    let generic = restrict_cohomology(&twist(&catalog(BundleName::O), 1), 3, true);
    assert_eq!(generic.status, RestrictionStatus::GenericAssumed);
    let h0 = generic.table.unwrap().h(0);
    assert_eq!(h0, BigUint::from(7u32));
    assert_eq!(chi(&BundleClassV5::trivial(), 1).unwrap(), BigInt::from(7));
}

/// Searches a box of integer Chern data for classes with vanishing
/// `chi(E(-1)), chi(E(-2)), chi(E(-3))`.
fn brute_force_ulrich(rank: i64) -> Vec<BundleClassV5> {
    let mut hits = Vec::new();
    for c1 in -1..=4 {
        for c2 in -5..=25 {
            for c3 in -5..=12 {
                let e = BundleClassV5::new(rank, c1, c2, c3).unwrap();
                let ok = (1..=3).all(|j| chi(&e, -j).map(|v| v == BigInt::from(0)).unwrap_or(false));
                if ok {
                    hits.push(e);
                }
            }
        }
    }
    hits
}

#[test]
fn ulrich_chern_matches_brute_force() {
    for r in 1..=3 {
        let hits = brute_force_ulrich(r);
        assert_eq!(hits, vec![ulrich_chern(r).unwrap()], "rank {r}");
        assert_eq!(hits[0].c1, r);
    }
}

#[test]
fn cokernel_presentation_matches_ulrich_class() {
    for r in 1..=10u32 {
        let coker = coker_class(r).unwrap();
        assert_eq!(coker.rank, i64::from(r));
        assert_eq!(coker.c1, 0);
        assert_eq!(coker.twist(1).unwrap(), ulrich_chern(i64::from(r)).unwrap());
    }
}

#[test]
fn geometry_and_quiver_agree() {
    for r in 1..=10i64 {
        let e = ulrich_chern(r).unwrap();
        let d = DimVector::new(r as usize, r as usize);
        assert_eq!(euler_pairing(&e, &e).unwrap(), BigInt::from(euler_form(d, d)));
        assert_eq!(euler_pairing(&e, &e).unwrap(), BigInt::from(-r * r));
    }
}

#[test]
fn tensor_pairings_with_ulrich_classes() {
    let u = BundleClassV5::of(BundleName::U).unwrap();
    let qs = BundleClassV5::of(BundleName::Qstar).unwrap();
    for r in 1..=5 {
        let e = ulrich_chern(r).unwrap();
        assert_eq!(chow::chi_of_character(&chow::ch_tensor(&u, &e), -2).unwrap(), BigInt::from(r));
        assert_eq!(chow::chi_of_character(&chow::ch_tensor(&qs, &e), -2).unwrap(), BigInt::from(r));
    }
}

#[test]
fn wedge2_qstar_matches_q_twisted_down() {
    // wedge^2 of a rank-3 bundle F: c1 = 2 c1(F), c2 = c1(F)^2 + c2(F), c3 = c1(F) c2(F) - c3(F)
    let qs = BundleClassV5::of(BundleName::Qstar).unwrap();
    let c1 = ChowClassV5::h().scale(&BigRational::from_integer(qs.c1.into()));
    let c2 = ChowClassV5::l().scale(&BigRational::from_integer(qs.c2.into()));
    let c3 = ChowClassV5::p().scale(&BigRational::from_integer(qs.c3.into()));
    let w2 = &(&c1 * &c1) + &c2;
    let w3 = &(&c1 * &c2) - &c3;
    let expected = BundleClassV5::new(
        3,
        2 * qs.c1,
        w2.coeff(2).to_integer().try_into().unwrap(),
        w3.coeff(3).to_integer().try_into().unwrap(),
    )
    .unwrap();
    assert_eq!(BundleClassV5::of(BundleName::Wedge2Qstar).unwrap(), expected);
    assert_eq!(bwb::bundle_rank(&catalog(BundleName::Wedge2Qstar)), BigUint::from(3u32));
}
