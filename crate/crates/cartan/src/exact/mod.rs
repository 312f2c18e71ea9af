//! Exact arithmetic substrate: big integers, reduced rationals, integer
//! polynomials and elementary prime-number machinery.
//!
//! Integers are [`crate::Int`] (arbitrary precision, canonical zero, decimal
//! round-trip). Rationals are always stored reduced with positive
//! denominator. Polynomials carry their coefficients by ascending degree
//! with no trailing zeros.

mod poly;
pub mod primes;
mod rational;

pub use poly::IntPoly;
pub use primes::{is_prime, is_prime_u64, primes_up_to};
pub use rational::Rational;

use crate::{Error, Int, Result};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
///
/// Returns 0 when p divides a, +1 when a is a nonzero square mod p and -1
/// otherwise. Rejects moduli that are not odd primes.
pub fn legendre(a: &Int, p: &Int) -> Result<i32> {
    if p.is_negative() || !p.is_odd() || !is_prime(p) {
        return Err(Error::NotAnOddPrime);
    }
    let a = a.mod_floor(p);
    if a.is_zero() {
        return Ok(0);
    }
    let one = Int::from(1);
    let exp = (p - &one) / Int::from(2);
    let r = a.modpow(&exp, p);
    Ok(if r == one { 1 } else { -1 })
}

/// Legendre symbol for machine-sized arguments. Rejects non-odd-prime moduli.
pub fn legendre_u64(a: u64, p: u64) -> Result<i32> {
    if p == 2 || !is_prime_u64(p) {
        return Err(Error::NotAnOddPrime);
    }
    Ok(primes::legendre_raw(a, p))
}
