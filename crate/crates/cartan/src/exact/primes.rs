//! Prime sieving, deterministic primality testing and modular arithmetic on
//! machine words.

use crate::Int;
use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

/// All primes `<= n`, ascending, by a sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Modular inverse for a prime modulus, by Fermat.
pub(crate) fn inv_mod_prime(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Legendre symbol with no validation of the modulus; callers guarantee `p`
/// is an odd prime.
pub(crate) fn legendre_raw(a: u64, p: u64) -> i32 {
    let a = a % p;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Deterministic Miller-Rabin, valid for every `n < 2^64` with the fixed
/// witness set {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &w in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality for arbitrary-precision integers.
///
/// Negative inputs are not prime. Below 2^64 the deterministic witness set
/// decides; above, plain trial division by a 2-3-5 wheel is used, which is
/// correct for any size but only practical for inputs with a small factor.
pub fn is_prime(n: &Int) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    for w in Wheel::new() {
        let wi = Int::from(w);
        if (&wi * &wi) > *n {
            return true;
        }
        if n.mod_floor(&wi).is_zero() {
            return false;
        }
    }
    unreachable!()
}

struct Wheel {
    next: u64,
    idx: usize,
}

// Increments cycling through residues coprime to 30, after 2, 3, 5.
const WHEEL_STEPS: [u64; 8] = [4, 2, 4, 2, 4, 6, 2, 6];

impl Wheel {
    fn new() -> Self {
        Wheel { next: 7, idx: 0 }
    }
}

impl Iterator for Wheel {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        if self.next == 7 && self.idx == 0 {
            self.idx = usize::MAX;
            return Some(2);
        }
        match self.idx {
            usize::MAX => {
                self.idx = usize::MAX - 1;
                Some(3)
            }
            v if v == usize::MAX - 1 => {
                self.idx = 0;
                Some(5)
            }
            _ => {
                let v = self.next;
                self.next += WHEEL_STEPS[self.idx];
                self.idx = (self.idx + 1) % WHEEL_STEPS.len();
                Some(v)
            }
        }
    }
}

/// Distinct prime factors with multiplicities, ascending, by trial division
/// (with a deterministic primality shortcut once the remainder is prime).
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    for p in [2u64, 3, 5] {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        push(p, e);
    }
    let mut d = 7u64;
    let mut idx = 0usize;
    while n > 1 {
        if is_prime_u64(n) {
            push(n, 1);
            break;
        }
        if d.saturating_mul(d) > n {
            push(n, 1);
            break;
        }
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += WHEEL_STEPS[idx];
        idx = (idx + 1) % WHEEL_STEPS.len();
    }
    out
}

/// True when `n` has no repeated prime factor (and is nonzero).
pub fn is_squarefree_i64(n: i64) -> bool {
    if n == 0 {
        return false;
    }
    let n = n.unsigned_abs();
    factorize_u64(n).iter().all(|&(_, e)| e == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_small() {
        assert_eq!(primes_up_to(10), vec![2, 3, 5, 7]);
        assert_eq!(primes_up_to(1), Vec::<u64>::new());
        assert_eq!(
            primes_up_to(30),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
    }

    #[test]
    fn deterministic_primality() {
        assert!(is_prime_u64(13));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(4097), "4097 = 17 * 241");
        assert!(is_prime_u64(2_147_483_647)); // 2^31 - 1
        assert!(!is_prime_u64(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime_u64(18_446_744_073_709_551_557)); // largest u64 prime
    }

    #[test]
    fn bigint_primality_matches() {
        for n in 0u64..2000 {
            assert_eq!(is_prime(&Int::from(n)), is_prime_u64(n), "n = {n}");
        }
        // 2^89 - 1 is a Mersenne prime; its factor-free trial division is too
        // slow to run here, so exercise the wheel on a number with a small
        // factor instead: 2^70 = 2 * 2^69.
        let big_even = Int::from(2u64).pow(70);
        assert!(!is_prime(&big_even));
    }

    #[test]
    fn factorization() {
        assert_eq!(factorize_u64(1), vec![]);
        assert_eq!(factorize_u64(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize_u64(4097), vec![(17, 1), (241, 1)]);
        assert_eq!(factorize_u64(97), vec![(97, 1)]);
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree_i64(-1));
        assert!(is_squarefree_i64(30));
        assert!(!is_squarefree_i64(12));
        assert!(!is_squarefree_i64(0));
        assert!(is_squarefree_i64(-163));
    }

    #[test]
    fn wheel_starts_correctly() {
        let first: Vec<u64> = Wheel::new().take(12).collect();
        assert_eq!(first, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }
}
