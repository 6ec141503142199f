//! Sparse bivariate Laurent polynomials in X (= q) and Y (= t = q^{-s}) with
//! arbitrary-precision rational coefficients.
//!
//! This is the universal carrier for every closed form in the crate.  Terms
//! are keyed by (yexp, xexp), so iteration order is lexicographic in
//! (yexp, xexp) — the deterministic order used for rendering and for the
//! leading term of exact division.

use crate::errors::ExactError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

pub type Rational = BigRational;

/// Small-integer rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Small rational n/d.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    // (yexp, xexp) -> coefficient, no zero coefficients stored
    terms: BTreeMap<(i64, i64), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::default();
        p.add_term(0, 0, c);
        p
    }

    /// c * X^xexp * Y^yexp
    pub fn monomial(c: Rational, xexp: i64, yexp: i64) -> Self {
        let mut p = Self::default();
        p.add_term(xexp, yexp, c);
        p
    }

    /// Builds a polynomial in Y alone from integer coefficients of Y^0, Y^1, ...
    pub fn from_y_coeffs(coeffs: &[i64]) -> Self {
        let mut p = Self::default();
        for (j, &c) in coeffs.iter().enumerate() {
            p.add_term(0, j as i64, rat(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, xexp: i64, yexp: i64) -> Rational {
        self.terms
            .get(&(yexp, xexp))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Iterates terms as (xexp, yexp, coeff) in (yexp, xexp)-lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, i64, &Rational)> {
        self.terms.iter().map(|(&(y, x), c)| (x, y, c))
    }

    pub fn add_term(&mut self, xexp: i64, yexp: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (yexp, xexp);
        match self.terms.get_mut(&key) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(y, x), c) in &other.terms {
            out.add_term(x, y, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (&(y1, x1), c1) in &self.terms {
            for (&(y2, x2), c2) in &other.terms {
                out.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    /// Multiplies by the (Laurent) monomial X^dx * Y^dy.
    pub fn mul_monomial(&self, dx: i64, dy: i64) -> Self {
        let mut out = Self::default();
        for (&(y, x), c) in &self.terms {
            out.terms.insert((y + dy, x + dx), c.clone());
        }
        out
    }

    /// Substitutes (X, Y) -> (X^{-1}, Y^{-1}).
    pub fn invert_vars(&self) -> Self {
        let mut out = Self::default();
        for (&(y, x), c) in &self.terms {
            out.terms.insert((-y, -x), c.clone());
        }
        out
    }

    /// Evaluates at X = 1, collapsing to a polynomial in Y.
    pub fn subst_x_one(&self) -> Self {
        let mut out = Self::default();
        for (&(y, _), c) in &self.terms {
            out.add_term(0, y, c.clone());
        }
        out
    }

    /// Evaluates at Y = 1, collapsing to a polynomial in X.
    pub fn subst_y_one(&self) -> Self {
        let mut out = Self::default();
        for (&(_, x), c) in &self.terms {
            out.add_term(x, 0, c.clone());
        }
        out
    }

    /// Exact evaluation.  Negative exponents require the corresponding value
    /// to be nonzero.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(ye, xe), c) in &self.terms {
            acc += c * pow_rat(x, xe) * pow_rat(y, ye);
        }
        acc
    }

    pub fn deg_x(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, x)| x).max()
    }

    pub fn deg_y(&self) -> Option<i64> {
        self.terms.keys().map(|&(y, _)| y).max()
    }

    pub fn min_x(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, x)| x).min()
    }

    pub fn min_y(&self) -> Option<i64> {
        self.terms.keys().map(|&(y, _)| y).min()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|&k| k == (0, 0))
    }

    /// True iff no term involves X.
    pub fn is_x_free(&self) -> bool {
        self.terms.keys().all(|&(_, x)| x == 0)
    }

    /// Exact quotient self / d.  `d` must be nonzero; returns
    /// `ExactError::NotDivisible` when no exact quotient exists.
    pub fn div_exact(&self, d: &Self) -> Result<Self, ExactError> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(Self::zero());
        }
        // Shift both operands to nonnegative exponents so that the
        // (yexp, xexp)-lex order is well-founded and divisibility failures
        // are detectable.  Lex-minimal corners are additive under products.
        let (ay, ax) = (self.min_y().unwrap(), self.min_x().unwrap());
        let (by, bx) = (d.min_y().unwrap(), d.min_x().unwrap());
        let mut rem = self.mul_monomial(-ax, -ay);
        let dd = d.mul_monomial(-bx, -by);
        let (&(dly, dlx), dlc) = dd.terms.last_key_value().unwrap();
        let mut quot = Self::default();
        while let Some((&(ry, rx), rc)) = rem.terms.last_key_value() {
            let (qy, qx) = (ry - dly, rx - dlx);
            if qy < 0 || qx < 0 {
                return Err(ExactError::NotDivisible);
            }
            let qc = rc / dlc;
            quot.add_term(qx, qy, qc.clone());
            let t = Self::monomial(-qc, qx, qy);
            rem = rem.add(&t.mul(&dd));
        }
        Ok(quot.mul_monomial(ax - bx, ay - by))
    }

    /// Renders in the deterministic term order, e.g. "1 - X*Y + X^2*Y^3".
    pub fn render_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(y, x), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(x, y, "*", "^", false);
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

    /// Renders as LaTeX, e.g. "1 - XY + X^{2}Y^{3}".
    pub fn render_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&(y, x), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(x, y, "", "^", true);
            let coeff = if a.is_integer() {
                format!("{}", a.numer())
            } else {
                format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom())
            };
            if mono.is_empty() {
                out.push_str(&coeff);
            } else if a.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{}{}", coeff, mono));
            }
        }
        out
    }
}

fn render_monomial(x: i64, y: i64, sep: &str, caret: &str, braces: bool) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("X", x), ("Y", y)] {
        if e == 0 {
            continue;
        }
        if e == 1 {
            parts.push(name.to_string());
        } else if braces {
            parts.push(format!("{}{}{{{}}}", name, caret, e));
        } else {
            parts.push(format!("{}{}{}", name, caret, e));
        }
    }
    parts.join(sep)
}

/// x^e for Laurent exponents; x must be nonzero when e < 0.
pub fn pow_rat(x: &Rational, e: i64) -> Rational {
    if e == 0 {
        return Rational::one();
    }
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut n = e.unsigned_abs();
    let mut acc = Rational::one();
    while n > 0 {
        if n & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        n >>= 1;
    }
    acc
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> BivariatePoly {
        BivariatePoly::monomial(rat(1), 1, 0)
    }

    fn y() -> BivariatePoly {
        BivariatePoly::monomial(rat(1), 0, 1)
    }

    #[test]
    fn additive_inverse_cancels() {
        let xy = x().mul(&y());
        assert!(xy.add(&xy.neg()).is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let a = BivariatePoly::one().sub(&y());
        let b = BivariatePoly::one().add(&y());
        let mut expect = BivariatePoly::one();
        expect.add_term(0, 2, rat(-1));
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn binomial_square() {
        let a = BivariatePoly::one().add(&x().mul(&y()));
        let sq = a.pow(2);
        let mut expect = BivariatePoly::one();
        expect.add_term(1, 1, rat(2));
        expect.add_term(2, 2, rat(1));
        assert_eq!(sq, expect);
    }

    #[test]
    fn div_exact_basic() {
        let one = BivariatePoly::one();
        let a = one.sub(&y().pow(2));
        let b = one.sub(&y());
        assert_eq!(a.div_exact(&b).unwrap(), one.add(&y()));

        let xy = x().mul(&y());
        let a2 = one.sub(&xy.pow(2));
        let b2 = one.sub(&xy);
        assert_eq!(a2.div_exact(&b2).unwrap(), one.add(&xy));
    }

    #[test]
    fn div_exact_detects_remainder() {
        let a = BivariatePoly::one().add(&y());
        let b = BivariatePoly::one().sub(&x());
        assert_eq!(a.div_exact(&b), Err(ExactError::NotDivisible));
    }

    #[test]
    fn div_exact_laurent_shift() {
        // (Y^{-1} - Y) / (1 - Y) = Y^{-1}(1 - Y^2)/(1 - Y) = Y^{-1}(1 + Y)
        let a = BivariatePoly::monomial(rat(1), 0, -1).sub(&y());
        let b = BivariatePoly::one().sub(&y());
        let q = a.div_exact(&b).unwrap();
        let expect = BivariatePoly::monomial(rat(1), 0, -1).add(&BivariatePoly::one());
        assert_eq!(q, expect);
    }

    fn arb_poly() -> impl Strategy<Value = BivariatePoly> {
        proptest::collection::vec(((-3i64..4), (-3i64..4), (-4i64..5)), 0..6).prop_map(|ts| {
            let mut p = BivariatePoly::zero();
            for (x, y, c) in ts {
                p.add_term(x, y, rat(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let p = a.mul(&b);
            prop_assert_eq!(p.div_exact(&b).unwrap(), a);
        }
    }
}
