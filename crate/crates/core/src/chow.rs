//! Intersection theory on `V5`.
//!
//! The Chow ring is `Z[V5] + Z h + Z l + Z p` with `h^2 = 5l`, `h l = p` and
//! `h^3 = 5p`. Classes are stored with rational coefficients so that Chern
//! characters and the Todd class live in the same ring; Chern classes of
//! bundles stay integral.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::bwb::BundleName;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("intersection number {0} is not an integer")]
    NonIntegral(BigRational),
    #[error("Chern class coefficient {0} is not an integer")]
    NonIntegralChern(BigRational),
    #[error("value {0} does not fit in 64 bits")]
    Overflow(BigRational),
    #[error("rank must be positive, got {0}")]
    Rank(i64),
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `a0 + a1 h + a2 l + a3 p`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClassV5 {
    coeffs: [BigRational; 4],
}

impl ChowClassV5 {
    pub fn new(a0: BigRational, a1: BigRational, a2: BigRational, a3: BigRational) -> Self {
        Self { coeffs: [a0, a1, a2, a3] }
    }

    pub fn from_ints(a: [i64; 4]) -> Self {
        Self::new(q(a[0]), q(a[1]), q(a[2]), q(a[3]))
    }

    pub fn zero() -> Self {
        Self::from_ints([0; 4])
    }

    pub fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }

    pub fn h() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    pub fn l() -> Self {
        Self::from_ints([0, 0, 1, 0])
    }

    pub fn p() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> &BigRational {
        &self.coeffs[degree]
    }

    /// Degree-`d` component alone.
    pub fn component(&self, degree: usize) -> Self {
        let mut out = Self::zero();
        out.coeffs[degree] = self.coeffs[degree].clone();
        out
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Self { coeffs: self.coeffs.clone().map(|c| c * s) }
    }

    /// Degree of the zero-cycle part.
    pub fn integral(&self) -> &BigRational {
        &self.coeffs[3]
    }

    /// `exp(t h) = 1 + t h + (5t^2/2) l + (5t^3/6) p`.
    pub fn exp_h(t: &BigRational) -> Self {
        let t2 = t * t;
        let t3 = &t2 * t;
        Self::new(BigRational::one(), t.clone(), t2 * frac(5, 2), t3 * frac(5, 6))
    }

    /// Multiplies the degree-`d` component by `(-1)^d`; the Chern character
    /// of a dual bundle.
    pub fn dual(&self) -> Self {
        let [a0, a1, a2, a3] = self.coeffs.clone();
        Self::new(a0, -a1, a2, -a3)
    }

    /// `(1 + x)^{-1}` for `x` with zero constant term, scaled for a unit
    /// constant term.
    pub fn inverse(&self) -> Option<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return None;
        }
        let unit = self.scale(&a0.recip());
        let x = &unit - &Self::one();
        let x2 = &x * &x;
        let x3 = &x2 * &x;
        let inv = &(&(&Self::one() - &x) + &x2) - &x3;
        Some(inv.scale(&a0.recip()))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }
}

impl Add for &ChowClassV5 {
    type Output = ChowClassV5;

    fn add(self, rhs: &ChowClassV5) -> ChowClassV5 {
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        out
    }
}

impl Sub for &ChowClassV5 {
    type Output = ChowClassV5;

    fn sub(self, rhs: &ChowClassV5) -> ChowClassV5 {
        self + &(-rhs)
    }
}

impl Neg for &ChowClassV5 {
    type Output = ChowClassV5;

    fn neg(self) -> ChowClassV5 {
        ChowClassV5 { coeffs: self.coeffs.clone().map(|c| -c) }
    }
}

/// Products of basis elements: `h h = 5 l`, `h l = p`, everything of
/// degree above three vanishes.
impl Mul for &ChowClassV5 {
    type Output = ChowClassV5;

    fn mul(self, rhs: &ChowClassV5) -> ChowClassV5 {
        let [a0, a1, a2, a3] = &self.coeffs;
        let [b0, b1, b2, b3] = &rhs.coeffs;
        let five = q(5);
        ChowClassV5::new(
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + a1 * b1 * &five,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )
    }
}

impl fmt::Display for ChowClassV5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "h", "l", "p"];
        let mut first = true;
        for (c, name) in self.coeffs.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            let mag = c.abs();
            if name.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(name)?;
            } else if mag.is_integer() {
                write!(f, "{mag}{name}")?;
            } else {
                write!(f, "({mag}){name}")?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// `c2(V5)` as a multiple of `l`. With `c1 = 2h` this is the only value for
/// which `chi(O) = c1 c2 / 24 = 1`.
pub const C2_V5_IN_L: i64 = 12;

/// `td(V5) = 1 + c1/2 + (c1^2 + c2)/12 + c1 c2/24` with `c1 = 2h`, `c2 = 12 l`.
pub fn todd_v5() -> ChowClassV5 {
    let c1 = ChowClassV5::h().scale(&q(2));
    let c2 = ChowClassV5::l().scale(&q(C2_V5_IN_L));
    let c1sq = &c1 * &c1;
    let td2 = (&c1sq + &c2).scale(&frac(1, 12));
    let td3 = (&c1 * &c2).scale(&frac(1, 24));
    &(&(&ChowClassV5::one() + &c1.scale(&frac(1, 2))) + &td2) + &td3
}

fn to_integer(x: &BigRational) -> Result<BigInt, ChowError> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(ChowError::NonIntegral(x.clone()))
    }
}

fn to_i64(x: &BigRational) -> Result<i64, ChowError> {
    if !x.is_integer() {
        return Err(ChowError::NonIntegralChern(x.clone()));
    }
    x.to_integer().to_i64().ok_or_else(|| ChowError::Overflow(x.clone()))
}

/// `chi = int ch * exp(t h) * td`, for any Chern character.
pub fn chi_of_character(ch: &ChowClassV5, t: i64) -> Result<BigInt, ChowError> {
    let twisted = ch * &ChowClassV5::exp_h(&q(t));
    to_integer((&twisted * &todd_v5()).integral())
}

/// Rank and Chern classes `c1 = a h`, `c2 = b l`, `c3 = c p` of a bundle on `V5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BundleClassV5 {
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl fmt::Display for BundleClassV5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rank {}, c1 = {}h, c2 = {}l, c3 = {}p", self.rank, self.c1, self.c2, self.c3)
    }
}

impl BundleClassV5 {
    pub fn new(rank: i64, c1: i64, c2: i64, c3: i64) -> Result<Self, ChowError> {
        if rank <= 0 {
            return Err(ChowError::Rank(rank));
        }
        Ok(Self { rank, c1, c2, c3 })
    }

    pub fn trivial() -> Self {
        Self { rank: 1, c1: 0, c2: 0, c3: 0 }
    }

    /// Chern data of the catalog bundles restricted to `V5`.
    pub fn of(name: BundleName) -> Result<Self, ChowError> {
        let (rank, c1, c2, c3) = match name {
            BundleName::U => (2, -1, 2, 0),
            BundleName::Ustar => (2, 1, 2, 0),
            BundleName::Q => (3, 1, 3, 1),
            BundleName::Qstar => (3, -1, 3, -1),
            BundleName::O => (1, 0, 0, 0),
            // c(Sym^2 F) for rank-2 F: (3 c1, 2 c1^2 + 4 c2, 4 c1 c2)
            BundleName::Sym2Ustar => (3, 3, 18, 8),
            BundleName::Wedge2Qstar => {
                return Self::of(BundleName::Q).map(|q| q.twist(-1).expect("twist of integral class"))
            }
        };
        Self::new(rank, c1, c2, c3)
    }

    /// `1 + c1 + c2 + c3`.
    pub fn total_chern(&self) -> ChowClassV5 {
        ChowClassV5::from_ints([1, self.c1, self.c2, self.c3])
    }

    pub fn from_total_chern(rank: i64, c: &ChowClassV5) -> Result<Self, ChowError> {
        Self::new(rank, to_i64(c.coeff(1))?, to_i64(c.coeff(2))?, to_i64(c.coeff(3))?)
    }

    /// `ch = r + c1 + (c1^2 - 2 c2)/2 + (c1^3 - 3 c1 c2 + 3 c3)/6`.
    pub fn chern_character(&self) -> ChowClassV5 {
        let c1 = ChowClassV5::h().scale(&q(self.c1));
        let c2 = ChowClassV5::l().scale(&q(self.c2));
        let c3 = ChowClassV5::p().scale(&q(self.c3));
        let c1sq = &c1 * &c1;
        let ch2 = (&c1sq - &c2.scale(&q(2))).scale(&frac(1, 2));
        let ch3 = (&(&(&c1sq * &c1) - &(&c1 * &c2).scale(&q(3))) + &c3.scale(&q(3))).scale(&frac(1, 6));
        &(&(&ChowClassV5::one().scale(&q(self.rank)) + &c1) + &ch2) + &ch3
    }

    /// Inverts the Newton identities; fails when the character is not that of
    /// an integral class.
    pub fn from_chern_character(ch: &ChowClassV5) -> Result<Self, ChowError> {
        let rank = to_i64(ch.coeff(0))?;
        let c1_class = ch.component(1);
        let c1sq = &c1_class * &c1_class;
        // c2 = (c1^2 - 2 ch2)/2
        let c2_class = (&c1sq - &ch.component(2).scale(&q(2))).scale(&frac(1, 2));
        // c3 = 2 ch3 - c1^3/3 + c1 c2
        let c3_class =
            &(&ch.component(3).scale(&q(2)) - &(&c1sq * &c1_class).scale(&frac(1, 3))) + &(&c1_class * &c2_class);
        Self::new(rank, to_i64(c1_class.coeff(1))?, to_i64(c2_class.coeff(2))?, to_i64(c3_class.coeff(3))?)
    }

    pub fn twist(&self, t: i64) -> Result<Self, ChowError> {
        Self::from_chern_character(&(&self.chern_character() * &ChowClassV5::exp_h(&q(t))))
    }

    pub fn dual(&self) -> Self {
        Self { rank: self.rank, c1: -self.c1, c2: self.c2, c3: -self.c3 }
    }

    /// Hilbert polynomial `t -> chi(E(t))`.
    pub fn hilbert_polynomial(&self) -> HilbertPolynomialV5 {
        HilbertPolynomialV5::of_character(&self.chern_character())
    }
}

/// `chi(E(t))` for a bundle class `E`.
pub fn chi(b: &BundleClassV5, t: i64) -> Result<BigInt, ChowError> {
    chi_of_character(&b.chern_character(), t)
}

pub fn ch_tensor(a: &BundleClassV5, b: &BundleClassV5) -> ChowClassV5 {
    &a.chern_character() * &b.chern_character()
}

pub fn ch_dual(a: &BundleClassV5) -> ChowClassV5 {
    a.chern_character().dual()
}

/// `chi(A, B) = int ch(A^v) ch(B) td`.
pub fn euler_pairing(a: &BundleClassV5, b: &BundleClassV5) -> Result<BigInt, ChowError> {
    chi_of_character(&(&ch_dual(a) * &b.chern_character()), 0)
}

/// Cubic with exact rational coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertPolynomialV5 {
    coeffs: [BigRational; 4],
}

impl HilbertPolynomialV5 {
    /// `chi(ch * exp(t h))` as a polynomial in `t`:
    /// the `t^k` coefficient is `int h^k ch td / k!`.
    pub fn of_character(ch: &ChowClassV5) -> Self {
        let base = ch * &todd_v5();
        let mut power = ChowClassV5::one();
        let mut factorial = BigRational::one();
        let mut coeffs: [BigRational; 4] = Default::default();
        for (k, slot) in coeffs.iter_mut().enumerate() {
            if k > 0 {
                power = &power * &ChowClassV5::h();
                factorial *= q(k as i64);
            }
            *slot = (&power * &base).integral() / &factorial;
        }
        Self { coeffs }
    }

    /// The Hilbert polynomial forced on a rank-`r` Ulrich bundle:
    /// `(5r/6)(t+1)(t+2)(t+3)`.
    pub fn ulrich(rank: i64) -> Self {
        let s = frac(5 * rank, 6);
        Self { coeffs: [q(6), q(11), q(6), q(1)].map(|c| c * &s) }
    }

    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn eval(&self, t: i64) -> BigRational {
        let t = q(t);
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * &t + c)
    }
}

/// Chern classes of a rank-`r` Ulrich bundle, solved from its Hilbert
/// polynomial.
///
/// The `t^2`, `t^1` and `t^0` coefficients of `chi(E(t))` are affine in
/// `c1`, in `c2` given `c1`, and in `c3` given `c1, c2`, so the system is
/// solved one unknown at a time. Always `c1 = r h`.
pub fn ulrich_chern(rank: i64) -> Result<BundleClassV5, ChowError> {
    if rank <= 0 {
        return Err(ChowError::Rank(rank));
    }
    let target = HilbertPolynomialV5::ulrich(rank);
    let mut unknowns = [0i64; 3];
    // unknown index -> polynomial coefficient it is pinned by
    for (slot, degree) in [(0usize, 2usize), (1, 1), (2, 0)] {
        let coeff_at = |value: i64| {
            let mut u = unknowns;
            u[slot] = value;
            let class = BundleClassV5 { rank, c1: u[0], c2: u[1], c3: u[2] };
            class.hilbert_polynomial().coeffs[degree].clone()
        };
        let at0 = coeff_at(0);
        let slope = coeff_at(1) - &at0;
        let solution = (&target.coeffs[degree] - at0) / slope;
        unknowns[slot] = to_i64(&solution)?;
    }
    BundleClassV5::new(rank, unknowns[0], unknowns[1], unknowns[2])
}

/// `E(-1) = Coker(U^r -> Q*^r)`: total Chern class `c(Q*)^r / c(U)^r`, rank `r`.
pub fn coker_class(r: u32) -> Result<BundleClassV5, ChowError> {
    let u = BundleClassV5::of(BundleName::U)?;
    let qs = BundleClassV5::of(BundleName::Qstar)?;
    let total = &qs.total_chern().pow(r) * &u.total_chern().pow(r).inverse().expect("total Chern classes are units");
    BundleClassV5::from_total_chern(3 * i64::from(r) - 2 * i64::from(r), &total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn ring_relations() {
        let (h, l, p) = (ChowClassV5::h(), ChowClassV5::l(), ChowClassV5::p());
        assert_eq!(&h * &h, l.scale(&q(5)));
        assert_eq!(&h * &l, p);
        assert_eq!(&(&h * &h) * &h, p.scale(&q(5)));
        assert_eq!(&p * &h, ChowClassV5::zero());
        let x = ChowClassV5::from_ints([3, -1, 4, 7]);
        assert_eq!(&ChowClassV5::one() * &x, x);
    }

    #[test]
    fn todd_class() {
        assert_eq!(todd_v5(), ChowClassV5::new(q(1), q(1), frac(8, 3), q(1)));
    }

    #[test]
    fn c2_of_v5_is_pinned_two_ways() {
        // chi(O) = c1 c2 / 24 with c1 = 2h: 2 * c2 / 24 = 1
        let c1 = ChowClassV5::h().scale(&q(2));
        let c2 = ChowClassV5::l().scale(&q(C2_V5_IN_L));
        assert_eq!((&c1 * &c2).integral() / q(24), q(1));
        // h^0(O(1)) = 7, the dimension of the ambient P^6
        assert_eq!(chi(&BundleClassV5::trivial(), 1).unwrap(), z(7));
    }

    #[test]
    fn riemann_roch_values() {
        let o = BundleClassV5::trivial();
        assert_eq!(chi(&o, 0).unwrap(), z(1));
        let u = BundleClassV5::of(BundleName::U).unwrap();
        assert_eq!(chi(&u, 0).unwrap(), z(0));
        assert_eq!(chi(&u, -1).unwrap(), z(0));
        assert_eq!(chi(&u, -2).unwrap(), z(-5));
        assert_eq!(chi(&u, 1).unwrap(), z(5));
        let qs = BundleClassV5::of(BundleName::Qstar).unwrap();
        assert_eq!(chi(&qs, 1).unwrap(), z(10));
        assert_eq!(chi(&qs, -2).unwrap(), z(-5));
    }

    #[test]
    fn non_integral_characters_are_rejected() {
        let half_h = ChowClassV5::new(q(1), frac(1, 2), q(0), q(0));
        assert!(matches!(chi_of_character(&half_h, 0), Err(ChowError::NonIntegral(_))));
        assert!(BundleClassV5::from_chern_character(&half_h).is_err());
    }

    #[test]
    fn dual_and_tensor() {
        let u = BundleClassV5::of(BundleName::U).unwrap();
        let us = BundleClassV5::of(BundleName::Ustar).unwrap();
        assert_eq!(ch_dual(&u), us.chern_character());
        let o = BundleClassV5::trivial();
        assert_eq!(ch_tensor(&o, &u), u.chern_character());
        assert_eq!(euler_pairing(&o, &o).unwrap(), z(1));
    }

    #[test]
    fn ulrich_classes() {
        let e2 = ulrich_chern(2).unwrap();
        assert_eq!(e2, BundleClassV5::new(2, 2, 7, 0).unwrap());
        for r in 1..=6 {
            let e = ulrich_chern(r).unwrap();
            assert_eq!(e.c1, r);
            assert_eq!(chi(&e, 0).unwrap(), z(5 * r));
            for j in 1..=3 {
                assert_eq!(chi(&e, -j).unwrap(), z(0));
            }
            assert_eq!(euler_pairing(&e, &e).unwrap(), z(-r * r));
        }
        assert_eq!(ulrich_chern(3).unwrap(), BundleClassV5::of(BundleName::Sym2Ustar).unwrap());
        assert!(ulrich_chern(0).is_err());
    }

    #[test]
    fn cokernel_classes() {
        assert_eq!(coker_class(1).unwrap().rank, 1);
        for r in 1..=5u32 {
            let c = coker_class(r).unwrap();
            assert_eq!(c.c1, 0);
            assert_eq!(c.twist(1).unwrap(), ulrich_chern(i64::from(r)).unwrap());
        }
    }

    #[test]
    fn twisting_round_trips() {
        let qb = BundleClassV5::of(BundleName::Q).unwrap();
        assert_eq!(qb.twist(3).unwrap().twist(-3).unwrap(), qb);
        let w = BundleClassV5::of(BundleName::Wedge2Qstar).unwrap();
        // c1(wedge^2 F) = 2 c1(F) for rank 3
        assert_eq!(w.rank, 3);
        assert_eq!(w.c1, -2);
    }

    #[test]
    fn hilbert_polynomial_leading_term() {
        let qs = BundleClassV5::of(BundleName::Qstar).unwrap();
        assert_eq!(qs.hilbert_polynomial().coeffs()[3], frac(5 * 3, 6));
        for t in -3..=3 {
            assert_eq!(qs.hilbert_polynomial().eval(t), BigRational::from_integer(chi(&qs, t).unwrap()));
        }
    }

    #[test]
    fn inverse_is_inverse() {
        let c = BundleClassV5::of(BundleName::U).unwrap().total_chern();
        assert_eq!(&c * &c.inverse().unwrap(), ChowClassV5::one());
        assert!(ChowClassV5::h().inverse().is_none());
    }

    #[test]
    fn display() {
        use alloc::string::ToString;
        assert_eq!(todd_v5().to_string(), "1 + h + (8/3)l + p");
        assert_eq!(ChowClassV5::zero().to_string(), "0");
        assert_eq!(ChowClassV5::from_ints([0, -1, 2, 0]).to_string(), "-h + 2l");
    }
}
