//! Exact arithmetic in the prime field F_p, plus the modular binomial and
//! multinomial coefficients used throughout the tensor computations.
//!
//! Residues are always kept canonical in `[0, p)`; nothing is ever stored
//! signed. Scalars carry their modulus so that mixing fields is caught at
//! the API boundary; containers (matrices, tensors) carry one modulus for
//! all entries and work on raw residues internally.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::error::Error;

/// Largest supported modulus. Products of two reduced residues then fit in
/// a `u64` without overflow: (2^31 - 2)^2 < 2^62.
pub const MAX_MODULUS: u64 = (1 << 31) - 1;

/// A prime modulus, validated by trial division at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeModulus {
    p: u64,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, Error> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus { p })
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.p
    }

    /// The element `value mod p`.
    #[inline]
    pub fn element(self, value: u64) -> Fp {
        Fp {
            value: value % self.p,
            modulus: self,
        }
    }

    /// The element `value mod p` for signed input.
    #[inline]
    pub fn element_from_i64(self, value: i64) -> Fp {
        let p = self.p as i64;
        Fp {
            value: value.rem_euclid(p) as u64,
            modulus: self,
        }
    }

    #[inline]
    pub fn zero(self) -> Fp {
        Fp {
            value: 0,
            modulus: self,
        }
    }

    #[inline]
    pub fn one(self) -> Fp {
        Fp {
            value: 1 % self.p,
            modulus: self,
        }
    }

    // Raw-residue helpers for container internals. Inputs must already be
    // reduced; outputs are reduced.

    #[inline]
    pub(crate) fn add_raw(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub(crate) fn sub_raw(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub(crate) fn pow_raw(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero reduced residue (Fermat).
    #[inline]
    pub(crate) fn inv_raw(self, a: u64) -> u64 {
        assert!(a % self.p != 0, "division by zero in F_{}", self.p);
        self.pow_raw(a, self.p - 2)
    }
}

/// An element of F_p, always reduced to `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp {
    value: u64,
    modulus: PrimeModulus,
}

impl Fp {
    #[inline]
    pub fn value(self) -> u64 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `self^exp` by repeated squaring, with the convention `0^0 = 1`.
    pub fn pow(self, exp: u64) -> Fp {
        if exp == 0 {
            return self.modulus.one();
        }
        Fp {
            value: self.modulus.pow_raw(self.value, exp),
            modulus: self.modulus,
        }
    }

    /// Multiplicative inverse.
    ///
    /// # Panics
    ///
    /// Panics on zero.
    pub fn inv(self) -> Fp {
        Fp {
            value: self.modulus.inv_raw(self.value),
            modulus: self.modulus,
        }
    }
}

#[inline]
fn check_same(a: PrimeModulus, b: PrimeModulus) {
    assert_eq!(a.p, b.p, "modulus mismatch: F_{} vs F_{}", a.p, b.p);
}

impl Add for Fp {
    type Output = Fp;
    #[inline]
    fn add(self, rhs: Fp) -> Fp {
        check_same(self.modulus, rhs.modulus);
        Fp {
            value: self.modulus.add_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    #[inline]
    fn sub(self, rhs: Fp) -> Fp {
        check_same(self.modulus, rhs.modulus);
        Fp {
            value: self.modulus.sub_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    #[inline]
    fn mul(self, rhs: Fp) -> Fp {
        check_same(self.modulus, rhs.modulus);
        Fp {
            value: self.modulus.mul_raw(self.value, rhs.value),
            modulus: self.modulus,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    #[inline]
    fn neg(self) -> Fp {
        Fp {
            value: self.modulus.neg_raw(self.value),
            modulus: self.modulus,
        }
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Binomial coefficient C(m, k) mod p via the base-p digit decomposition.
/// Returns 0 when `k < 0` or `k > m`.
pub fn binomial_mod_p(m: u64, k: i64, modulus: PrimeModulus) -> Fp {
    if k < 0 || (k as u64) > m {
        return modulus.zero();
    }
    let p = modulus.get();
    let mut m = m;
    let mut k = k as u64;
    let mut acc = 1 % p;
    while m > 0 || k > 0 {
        let (md, kd) = (m % p, k % p);
        if kd > md {
            return modulus.zero();
        }
        acc = modulus.mul_raw(acc, small_binomial(md, kd, modulus));
        m /= p;
        k /= p;
    }
    modulus.element(acc)
}

/// C(a, b) mod p for digits 0 <= b <= a < p, by the falling-factorial
/// product; every divisor is invertible since a < p.
fn small_binomial(a: u64, b: u64, modulus: PrimeModulus) -> u64 {
    let b = b.min(a - b);
    let mut acc = 1 % modulus.get();
    for t in 1..=b {
        acc = modulus.mul_raw(acc, (a - b + t) % modulus.get());
        acc = modulus.mul_raw(acc, modulus.inv_raw(t % modulus.get()));
    }
    acc
}

/// Multinomial coefficient m! / (k_1! ... k_n!) mod p, as a product of
/// binomials. Zero when the parts do not sum to `m`.
pub fn multinomial_mod_p(m: u64, parts: &[u64], modulus: PrimeModulus) -> Fp {
    let total: u64 = parts.iter().sum();
    if total != m {
        return modulus.zero();
    }
    let mut remaining = m;
    let mut acc = modulus.one();
    for &part in parts {
        acc = acc * binomial_mod_p(remaining, part as i64, modulus);
        remaining -= part;
    }
    acc
}
