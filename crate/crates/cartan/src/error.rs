use core::fmt;

/// Errors reported by the library.
///
/// Each variant corresponds to a violated precondition or a structural
/// failure; no operation in this crate panics on bad mathematical input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A rational number was constructed with denominator zero.
    ZeroDenominator,
    /// A polynomial operation requires nonzero operands.
    ZeroPolynomial,
    /// The argument must be an odd prime.
    NotAnOddPrime,
    /// The argument must be prime.
    NotPrime(u64),
    /// No j-invariant map is built in for this level.
    UnsupportedLevel(u64),
    /// A rational map was evaluated at a pole of its denominator.
    Pole,
    /// The numerator/denominator pair shares a common root.
    NotCoprime,
    /// The map does not satisfy the shape required by the integral-point
    /// scan (monic numerator of degree strictly larger than the denominator).
    UnsupportedMapShape,
    /// The Weierstrass coefficients define a singular curve.
    SingularCurve,
    /// The curve has bad reduction at this prime (for the given model).
    BadReduction(u64),
    /// The twisting parameter must be a nonzero squarefree integer.
    NotSquarefree(i64),
    /// The image classifier only supports primes p >= 5.
    UnsupportedPrime(u64),
    /// The witness pool contains no usable prime.
    EmptyScan,
    /// Surjectivity deductions are invalid for curves with complex
    /// multiplication.
    CmCurve,
    /// An interval argument was empty or inverted.
    InvalidRange,
    /// Quadratic field data requires a squarefree integer other than 0, 1.
    InvalidFieldDiscriminant(i64),
    /// The supplied trace violates the Hasse-Weil envelope.
    HasseWeilEnvelope,
    /// The residue scan requires a prime congruent to 3 mod 4.
    NotThreeModFour(u64),
    /// Catch-all for invalid arguments; the message names the violation.
    InvalidInput(&'static str),
    /// An intermediate quantity exceeded the supported machine range.
    Overflow,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroDenominator => write!(f, "denominator is zero"),
            Error::ZeroPolynomial => write!(f, "polynomial argument is zero"),
            Error::NotAnOddPrime => write!(f, "modulus is not an odd prime"),
            Error::NotPrime(n) => write!(f, "{n} is not prime"),
            Error::UnsupportedLevel(q) => write!(f, "no built-in map for level {q}"),
            Error::Pole => write!(f, "evaluation at a pole of the denominator"),
            Error::NotCoprime => write!(f, "numerator and denominator share a root"),
            Error::UnsupportedMapShape => {
                write!(f, "map must have a monic numerator of degree > denominator")
            }
            Error::SingularCurve => write!(f, "discriminant is zero: singular curve"),
            Error::BadReduction(l) => write!(f, "bad reduction at {l} for this model"),
            Error::NotSquarefree(d) => write!(f, "{d} is not a nonzero squarefree integer"),
            Error::UnsupportedPrime(p) => write!(f, "classification unsupported for p = {p}"),
            Error::EmptyScan => write!(f, "no usable witness primes in the scan range"),
            Error::CmCurve => write!(f, "curve has complex multiplication"),
            Error::InvalidRange => write!(f, "empty or inverted range"),
            Error::InvalidFieldDiscriminant(d) => {
                write!(f, "{d} does not define a quadratic field")
            }
            Error::HasseWeilEnvelope => write!(f, "trace outside the Hasse-Weil envelope"),
            Error::NotThreeModFour(p) => write!(f, "{p} is not congruent to 3 mod 4"),
            Error::InvalidInput(msg) => write!(f, "{msg}"),
            Error::Overflow => write!(f, "intermediate value out of machine range"),
        }
    }
}

impl core::error::Error for Error {}
