//! Exact scalar types for the linear-algebra core.
//!
//! Everything downstream of [`crate::matrix`] is generic over [`Field`], so
//! the same elimination code runs over the prime field [`Fp`] (algebra
//! computations) and over [`num_rational::BigRational`] (geometry). There is
//! deliberately no floating-point instantiation: every verified statement is
//! exact.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field: the scalar bound for all elimination routines.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for BigRational {}

/// Default modulus for algebra computations. Large enough that a randomized
/// invertibility trial fails with probability well under 1e-3, small enough
/// that products fit in a `u64` without widening.
pub const DEFAULT_PRIME: u64 = 32003;

/// Element of a prime field `F_p` with runtime modulus.
///
/// The modulus travels with the value so that matrices over different primes
/// cannot be mixed silently. Constants produced by `zero()`/`one()` carry
/// modulus 0, meaning "not yet bound": they behave as plain integers until
/// they meet a bound element, at which point they reduce. Such constants only
/// ever hold 0 or 1 (plus tiny sums created before first contact), so the
/// deferred reduction is exact.
#[derive(Clone, Copy, Eq)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        assert!(modulus < (1 << 31), "modulus must fit in 31 bits");
        let m = modulus as i64;
        let v = value.rem_euclid(m) as u64;
        Fp { value: v, modulus }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical representative in `0..p` (an unbound constant reports its
    /// raw integer value).
    pub fn lift(&self) -> u64 {
        self.value
    }

    fn bind(self, modulus: u64) -> Fp {
        if self.modulus == modulus || modulus == 0 {
            self
        } else if self.modulus == 0 {
            Fp {
                value: self.value % modulus,
                modulus,
            }
        } else {
            panic!(
                "mixed moduli: {} vs {}",
                self.modulus, modulus
            );
        }
    }

    fn unify(self, other: Fp) -> (Fp, Fp, u64) {
        let m = if self.modulus != 0 {
            self.modulus
        } else {
            other.modulus
        };
        (self.bind(m), other.bind(m), m)
    }

    pub fn pow(&self, mut e: u64) -> Fp {
        let m = self.modulus;
        assert!(m != 0, "cannot exponentiate an unbound constant");
        let mut base = self.value;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Fp {
            value: acc,
            modulus: m,
        }
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = self.unify(*other);
        a.value == b.value
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.unify(rhs);
        let v = a.value + b.value;
        Fp {
            value: if m == 0 { v } else { v % m },
            modulus: m,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.unify(rhs);
        if m == 0 {
            assert!(a.value >= b.value, "unbound subtraction underflow");
            return Fp {
                value: a.value - b.value,
                modulus: 0,
            };
        }
        Fp {
            value: (a.value + m - b.value) % m,
            modulus: m,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.unify(rhs);
        let v = a.value * b.value;
        Fp {
            value: if m == 0 { v } else { v % m },
            modulus: m,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        if self.modulus == 0 {
            assert!(self.value == 0, "cannot negate an unbound nonzero constant");
            return self;
        }
        Fp {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        let (a, b, m) = self.unify(rhs);
        assert!(m != 0, "cannot divide unbound constants");
        assert!(b.value != 0, "division by zero in F_p");
        // Fermat: p is prime by construction.
        a * b.pow(m - 2)
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

impl Zero for Fp {
    fn zero() -> Self {
        Fp {
            value: 0,
            modulus: 0,
        }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp {
            value: 1,
            modulus: 0,
        }
    }
}

impl Field for Fp {}

/// Deterministic Miller-Rabin for 64-bit inputs; used to validate CLI primes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = 1u64;
        let mut base = a % n;
        let mut e = d;
        while e > 0 {
            if e & 1 == 1 {
                x = mul(x, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_mod_small_prime() {
        let p = 7;
        let a = Fp::new(3, p);
        let b = Fp::new(5, p);
        assert_eq!((a + b).lift(), 1);
        assert_eq!((a - b).lift(), 5);
        assert_eq!((a * b).lift(), 1);
        assert_eq!((a / b).lift(), 2); // 2*5 = 10 = 3 mod 7
        assert_eq!((-b).lift(), 2);
        assert_eq!(a.inv() * a, Fp::new(1, p));
    }

    #[test]
    fn unbound_constants_bind_on_contact() {
        let one: Fp = One::one();
        let a = Fp::new(4, 5);
        assert_eq!((one + a).lift(), 0);
        assert_eq!(one + one + Fp::new(0, 3), Fp::new(2, 3));
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn mixing_moduli_panics() {
        let _ = Fp::new(1, 5) + Fp::new(1, 7);
    }

    #[test]
    fn negation_of_zero() {
        assert_eq!((-Fp::new(0, 11)).lift(), 0);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(32003));
        assert!(is_prime((1 << 31) - 1));
        assert!(!is_prime(1));
        assert!(!is_prime(32001));
    }
}
