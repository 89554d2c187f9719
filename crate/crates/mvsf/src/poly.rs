//! Dense univariate polynomials over exact rationals.
//!
//! Coefficients are stored in ascending degree order; the vector is empty for
//! the zero polynomial and otherwise ends in a nonzero coefficient.

use crate::rat::{rat_str, Rat};
use num::{Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rat) -> Self {
        QPoly { coeffs: vec![c] }.normalized()
    }

    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        QPoly { coeffs }.normalized()
    }

    /// The monomial `c t^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        QPoly { coeffs }
    }

    fn normalized(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rat::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        QPoly { coeffs: out }.normalized()
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-num::one::<Rat>()))
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        QPoly { coeffs: out }.normalized()
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn eval(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * t + rat_to_f64(c);
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> Rat {
        let mut best = Rat::zero();
        for c in &self.coeffs {
            let a = c.abs();
            if a > best {
                best = a;
            }
        }
        best
    }

    /// `p^k` by repeated multiplication (exponents stay tiny here).
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = QPoly::constant(num::one());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Lossy conversion for the approximate evaluation paths.
pub fn rat_to_f64(x: &Rat) -> f64 {
    let n = x.numer();
    let d = x.denom();
    // Direct conversion is fine for the magnitudes arising here.
    str_f64(&n.to_string()) / str_f64(&d.to_string())
}

fn str_f64(s: &str) -> f64 {
    s.parse::<f64>().unwrap_or(f64::NAN)
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => rat_str(c),
                1 => format!("({})t", rat_str(c)),
                _ => format!("({})t^{}", rat_str(c), k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{frac, rat};

    #[test]
    fn arithmetic_and_normalization() {
        let p = QPoly::from_coeffs(vec![rat(1), rat(-3)]);
        let q = QPoly::from_coeffs(vec![rat(-1), rat(3)]);
        assert!(p.add(&q).is_zero());
        assert_eq!(p.mul(&q).coeff(1), rat(6));
        assert_eq!(p.degree(), Some(1));
        assert_eq!(QPoly::from_coeffs(vec![rat(0), rat(0)]).degree(), None);
    }

    #[test]
    fn eval_and_shift() {
        let p = QPoly::from_coeffs(vec![rat(1), rat(-3)]);
        assert_eq!(p.eval(&rat(1)), rat(-2));
        assert_eq!(p.eval(&frac(1, 2)), frac(-1, 2));
        assert_eq!(p.shift(2).coeff(3), rat(-3));
        assert_eq!(p.shift(2).coeff(0), rat(0));
    }
}
