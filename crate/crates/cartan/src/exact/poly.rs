use crate::{Error, Int, Result};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::mem;
use core::ops::{Add, Mul, Neg, Sub};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// A polynomial with integer coefficients.
///
/// Coefficients are stored by ascending degree (`coeffs[i]` multiplies
/// `x^i`); the leading coefficient is nonzero, and the zero polynomial has
/// an empty coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<Int>,
}

fn int_pow(base: &Int, exp: usize) -> Int {
    num_traits::pow::pow(base.clone(), exp)
}

fn div_exact(a: &Int, b: &Int) -> Int {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "inexact division in polynomial kernel");
    q
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, trimming trailing
    /// zeros.
    pub fn new(mut coeffs: Vec<Int>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        IntPoly::new(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Int, k: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![Int::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| Int::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Int> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Int {
        self.coeffs.get(i).cloned().unwrap_or_else(Int::zero)
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &Int) -> Int {
        let mut acc = Int::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &Rational::from_int(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Int::from(i as u64))
                .collect(),
        )
    }

    /// Gcd of the coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> Int {
        self.coeffs
            .iter()
            .fold(Int::zero(), |acc, c| acc.gcd(c))
    }

    /// The polynomial divided by its content, with positive leading
    /// coefficient. Zero stays zero.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn mul_scalar(&self, s: &Int) -> IntPoly {
        if s.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    fn div_scalar_exact(&self, s: &Int) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| div_exact(c, s)).collect(),
        }
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(d)^(deg f - deg d + 1) * f = q*d + r` and `deg r < deg d`.
    ///
    /// Requires `d` nonzero and `deg f >= deg d`.
    pub fn pseudo_div_rem(&self, d: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let fd = match self.degree() {
            Some(fd) if fd >= dd => fd,
            _ => return Err(Error::InvalidRange),
        };
        let lc = d.leading().unwrap().clone();
        let mut steps = fd - dd + 1;
        let mut rem = self.clone();
        let mut quo = IntPoly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let head = rem.leading().unwrap().clone();
            let shift = rd - dd;
            quo = &quo.mul_scalar(&lc) + &IntPoly::monomial(head.clone(), shift);
            rem = &rem.mul_scalar(&lc) - &(&IntPoly::monomial(head, shift) * d);
            steps -= 1;
        }
        if steps > 0 {
            let s = int_pow(&lc, steps);
            quo = quo.mul_scalar(&s);
            rem = rem.mul_scalar(&s);
        }
        Ok((quo, rem))
    }

    /// Exact polynomial quotient when `d` divides `self` in Z[x].
    pub fn div_exact_poly(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let fd = self.degree()?;
        if fd < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quo = vec![Int::zero(); fd - dd + 1];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                return None;
            }
            let (c, r) = rem.leading().unwrap().div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let shift = rd - dd;
            rem = &rem - &(&IntPoly::monomial(c.clone(), shift) * d);
            quo[shift] = c;
        }
        Some(IntPoly::new(quo))
    }

    /// Polynomial gcd over Z (content included), positive leading
    /// coefficient, via the primitive remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().mul_scalar(&other.content().abs());
        }
        if other.is_zero() {
            return self.primitive_part().mul_scalar(&self.content().abs());
        }
        let cont = self.content().gcd(&other.content());
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (_, r) = a.pseudo_div_rem(&b).expect("degrees ordered");
            a = b;
            b = r.primitive_part();
            if a.degree() < b.degree() {
                mem::swap(&mut a, &mut b);
            }
        }
        a.primitive_part().mul_scalar(&cont)
    }

    /// The squarefree radical `self / gcd(self, self')`, primitive with
    /// positive leading coefficient.
    pub fn radical(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == Some(0) {
            return Ok(IntPoly::one());
        }
        let g = self.gcd(&self.derivative());
        let rad = self
            .div_exact_poly(&g)
            .expect("gcd divides its argument over Z");
        Ok(rad.primitive_part())
    }

    /// Resultant of two nonzero polynomials, by the subresultant polynomial
    /// remainder sequence. Exact for any degrees; zero iff the inputs share
    /// a root.
    pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<Int> {
        if f.is_zero() || g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut a = f.clone();
        let mut b = g.clone();
        let mut sign = 1i32;
        if a.degree() < b.degree() {
            if a.degree().unwrap().is_odd() && b.degree().unwrap().is_odd() {
                sign = -sign;
            }
            mem::swap(&mut a, &mut b);
        }
        let ca = a.content();
        let cb = b.content();
        a = a.div_scalar_exact(&ca);
        b = b.div_scalar_exact(&cb);
        let mut scale = int_pow(&ca, b.degree().unwrap()) * int_pow(&cb, a.degree().unwrap());
        if sign < 0 {
            scale = -scale;
        }
        if b.degree() == Some(0) {
            return Ok(scale * int_pow(b.leading().unwrap(), a.degree().unwrap()));
        }
        let mut g1 = Int::one();
        let mut h = Int::one();
        loop {
            let da = a.degree().unwrap();
            let db = b.degree().unwrap();
            let delta = da - db;
            if da.is_odd() && db.is_odd() {
                scale = -scale;
            }
            let (_, r) = a.pseudo_div_rem(&b)?;
            a = b;
            let divisor = &g1 * int_pow(&h, delta);
            b = r.div_scalar_exact(&divisor);
            g1 = a.leading().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                div_exact(&int_pow(&g1, delta), &int_pow(&h, delta - 1))
            };
            if b.is_zero() {
                // positive-degree common factor
                return Ok(Int::zero());
            }
            if b.degree() == Some(0) {
                let da = a.degree().unwrap();
                let num = int_pow(b.leading().unwrap(), da);
                let hfin = div_exact(&num, &int_pow(&h, da - 1));
                return Ok(scale * hfin);
            }
        }
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![Int::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    write!(f, "t")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn construction_trims() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[1, 2, 0]).degree(), Some(1));
    }

    #[test]
    fn resultant_linear_pair() {
        // x - 1, x + 1
        assert_eq!(
            IntPoly::resultant(&p(&[-1, 1]), &p(&[1, 1])).unwrap(),
            Int::from(2)
        );
    }

    #[test]
    fn resultant_against_monomial() {
        // x^2 + 1 vs x
        assert_eq!(
            IntPoly::resultant(&p(&[1, 0, 1]), &p(&[0, 1])).unwrap(),
            Int::from(1)
        );
        // x^2 - 1 vs x - 2 -> f(2) = 3
        assert_eq!(
            IntPoly::resultant(&p(&[-1, 0, 1]), &p(&[-2, 1])).unwrap(),
            Int::from(3)
        );
    }

    #[test]
    fn resultant_zero_inputs_rejected() {
        assert_eq!(
            IntPoly::resultant(&IntPoly::zero(), &p(&[1, 1])),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn resultant_detects_common_root() {
        // (x-1)(x+2) and (x-1)(x-5)
        let f = &p(&[-1, 1]) * &p(&[2, 1]);
        let g = &p(&[-1, 1]) * &p(&[-5, 1]);
        assert_eq!(IntPoly::resultant(&f, &g).unwrap(), Int::from(0));
    }

    #[test]
    fn pseudo_division_identity() {
        let f = p(&[3, -2, 0, 7, 1]);
        let d = p(&[1, 5, 2]);
        let (q, r) = f.pseudo_div_rem(&d).unwrap();
        let n = f.degree().unwrap() - d.degree().unwrap() + 1;
        let lhs = f.mul_scalar(&int_pow(d.leading().unwrap(), n));
        assert_eq!(&(&q * &d) + &r, lhs);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn gcd_and_radical() {
        let f = &p(&[1, 1]) * &p(&[1, 1]); // (x+1)^2
        let g = &p(&[1, 1]) * &p(&[-3, 1]); // (x+1)(x-3)
        assert_eq!(f.gcd(&g), p(&[1, 1]));
        let cube = &f * &p(&[1, 1]); // (x+1)^3
        assert_eq!(cube.radical().unwrap(), p(&[1, 1]));
    }

    #[test]
    fn eval_rational_matches_integer_eval() {
        let f = p(&[2, 0, -3, 1]);
        let x = Int::from(-4);
        assert_eq!(
            f.eval_rational(&Rational::from_int(x.clone())).to_int(),
            Some(f.eval(&x))
        );
    }
}
