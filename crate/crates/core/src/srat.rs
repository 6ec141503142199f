//! Univariate polynomials and rational functions in the complex variable s,
//! over exact rationals.  Topological zeta functions live here.

use crate::poly::{rat, Rational};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Dense polynomial in s; coeffs[i] is the coefficient of s^i, no trailing
/// zeros.  The empty vector is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SPoly {
    coeffs: Vec<Rational>,
}

impl SPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// b*s - a
    pub fn linear(b: i64, a: i64) -> Self {
        Self::from_coeffs(vec![rat(-a), rat(b)])
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        let mut p = SPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    fn trim(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() as i64 - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|v| v * c).collect())
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * s + c;
        }
        acc
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d.coeffs.len()) + 1];
        let dl = d.leading();
        while !rem.is_zero() && rem.coeffs.len() >= d.coeffs.len() {
            let shift = rem.coeffs.len() - d.coeffs.len();
            let q = rem.leading() / &dl;
            quot[shift] = q.clone();
            for (i, c) in d.coeffs.iter().enumerate() {
                let t = &q * c;
                rem.coeffs[shift + i] -= t;
            }
            rem.trim();
        }
        (Self::from_coeffs(quot), rem)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        // monic representative
        let lc = a.leading();
        a.scale(&lc.recip())
    }

    /// Derivative-free monic normalization helper.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn render_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => "s".to_string(),
                _ => format!("s^{}", i),
            };
            if mono.is_empty() {
                out.push_str(&format!("{}", a));
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}*{}", a, mono));
            }
        }
        out
    }
}

impl fmt::Display for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

/// Reduced rational function num/den in s.  Canonical form: gcd(num, den) = 1
/// and den monic, so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SRat {
    num: SPoly,
    den: SPoly,
}

impl SRat {
    pub fn new(num: SPoly, den: SPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return SRat {
                num: SPoly::zero(),
                den: SPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, r1) = num.divrem(&g);
        debug_assert!(r1.is_zero());
        let (den, r2) = den.divrem(&g);
        debug_assert!(r2.is_zero());
        let lc = den.leading();
        SRat {
            num: num.scale(&lc.recip()),
            den: den.scale(&lc.recip()),
        }
    }

    pub fn zero() -> Self {
        SRat {
            num: SPoly::zero(),
            den: SPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        SRat::new(SPoly::constant(c), SPoly::one())
    }

    pub fn num(&self) -> &SPoly {
        &self.num
    }

    pub fn den(&self) -> &SPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        SRat::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        SRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        SRat::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        SRat::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SRat::new(self.num.scale(c), self.den.clone())
    }

    /// deg(num) - deg(den); the input must be nonzero.
    pub fn degree(&self) -> i64 {
        assert!(!self.is_zero(), "degree of the zero function");
        self.num.degree().unwrap() - self.den.degree().unwrap()
    }

    pub fn eval(&self, s: &Rational) -> Option<Rational> {
        let d = self.den.eval(s);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(s) / d)
        }
    }

    pub fn render_text(&self) -> String {
        if self.den == SPoly::one() {
            return self.num.render_text();
        }
        format!("({})/({})", self.num.render_text(), self.den.render_text())
    }
}

impl fmt::Display for SRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

/// Builds prod_i (b_i s - a_i) from linear factors.
pub fn product_of_linears(factors: &[(i64, i64)]) -> SPoly {
    let mut p = SPoly::one();
    for &(b, a) in factors {
        p = p.mul(&SPoly::linear(b, a));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn divrem_and_gcd() {
        // (s^2 - 1) / (s - 1) = s + 1
        let num = SPoly::from_int_coeffs(&[-1, 0, 1]);
        let den = SPoly::from_int_coeffs(&[-1, 1]);
        let (q, r) = num.divrem(&den);
        assert!(r.is_zero());
        assert_eq!(q, SPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(num.gcd(&den), den.monic());
    }

    #[test]
    fn srat_canonical_equality() {
        // (2s)/(2s^2 - 2s) == 1/(s - 1)
        let a = SRat::new(
            SPoly::from_int_coeffs(&[0, 2]),
            SPoly::from_int_coeffs(&[0, -2, 2]),
        );
        let b = SRat::new(SPoly::one(), SPoly::from_int_coeffs(&[-1, 1]));
        assert_eq!(a, b);
    }

    #[test]
    fn degree_and_eval() {
        // 1/(3s^2(s-1)) has degree -3 and value 1/(3*4*1) at s = 2
        let den = SPoly::from_int_coeffs(&[0, 0, -3, 3]);
        let z = SRat::new(SPoly::one(), den);
        assert_eq!(z.degree(), -3);
        assert_eq!(z.eval(&crate::poly::rat(2)).unwrap(), ratio(1, 12));
    }
}
