//! Exact rational scalars and small helpers used throughout the crate.
//!
//! Every algebraic quantity in this crate is a [`Rat`] (arbitrary-precision
//! rational). Floating point shows up only in explicitly approximate
//! evaluation paths and never feeds an exact assertion.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// The rational `n`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `n/d`. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rising factorial `(x)_j = x (x+1) ... (x+j-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: &Rat, j: usize) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..j {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// Generalized binomial coefficient `C(x, j)` for rational `x` and
/// nonnegative integer `j`.
pub fn binom(x: &Rat, j: usize) -> Rat {
    let mut acc = Rat::one();
    for m in 0..j {
        acc *= &(x - rat(m as i64));
        acc /= rat(m as i64 + 1);
    }
    acc
}

/// True when `x` is an integer `<= 0` (the termination test for
/// hypergeometric numerator parameters).
pub fn is_nonpositive_integer(x: &Rat) -> bool {
    x.is_integer() && !x.is_positive()
}

/// Compact `p/q` rendering; integers print without the denominator.
pub fn rat_str(x: &Rat) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .trim()
        .parse()
        .map_err(|_| format!("bad numerator in rational `{s}`"))?;
    let d: BigInt = den
        .trim()
        .parse()
        .map_err(|_| format!("bad denominator in rational `{s}`"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in rational `{s}`"));
    }
    Ok(Rat::new(n, d))
}

/// Largest absolute value in a slice, or zero for an empty slice.
pub fn max_abs(values: &[Rat]) -> Rat {
    let mut best = Rat::zero();
    for v in values {
        let a = v.abs();
        if a > best {
            best = a;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_basics() {
        assert_eq!(pochhammer(&rat(3), 0), rat(1));
        assert_eq!(pochhammer(&rat(3), 4), rat(3 * 4 * 5 * 6));
        // (-2)_3 = (-2)(-1)(0) = 0: terminating numerator parameter
        assert_eq!(pochhammer(&rat(-2), 3), rat(0));
        assert_eq!(pochhammer(&frac(1, 2), 2), frac(3, 4));
    }

    #[test]
    fn binom_handles_negative_upper_index() {
        assert_eq!(binom(&rat(4), 2), rat(6));
        assert_eq!(binom(&rat(-1), 3), rat(-1));
        assert_eq!(binom(&rat(-2), 2), rat(3));
        assert_eq!(binom(&rat(3), 5), rat(0));
    }

    #[test]
    fn rational_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(rat_str(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
