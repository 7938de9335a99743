//! Coefficient rings for the γ-vector recurrence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A commutative ring with the handful of operations the recurrences need.
pub trait CoefficientRing {
    type Elem: Clone + PartialEq + std::fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn one(&self) -> Self::Elem {
        self.from_i64(1)
    }

    fn scale(&self, a: &Self::Elem, k: i64) -> Self::Elem {
        self.mul(&self.from_i64(k), a)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.mul(&self.from_i64(-1), b))
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Integers;

impl CoefficientRing for Integers {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn from_i64(&self, v: i64) -> BigInt {
        BigInt::from(v)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn scale(&self, a: &BigInt, k: i64) -> BigInt {
        a * k
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl CoefficientRing for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
}

/// `Z/pZ` with residues in `0..p`. `p` must fit in 32 bits.
#[derive(Clone, Copy, Debug)]
pub struct IntegersModP {
    pub p: u64,
}

impl IntegersModP {
    pub fn new(p: u64) -> Self {
        assert!(p >= 2 && p <= u32::MAX as u64, "modulus out of range");
        Self { p }
    }

    pub fn reduce_big(&self, v: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((v % &p) + &p) % &p;
        u64::try_from(r).expect("residue fits")
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }

    /// Inverse by Fermat; `p` must be prime and `a` nonzero mod `p`.
    pub fn inv(&self, a: u64) -> Option<u64> {
        (a % self.p != 0).then(|| self.pow(a, self.p - 2))
    }
}

impl CoefficientRing for IntegersModP {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }
}
