//! Rational functions kept as a numerator polynomial over a multiset of
//! binomial factors (1 - X^a Y^b).  Every zeta function in the crate lives in
//! this form; equality is semantic (cross-multiplication), never
//! representational.

use crate::errors::ExactError;
use crate::poly::{pow_rat, BivariatePoly, Rational};
use num_traits::{One, Zero};
use std::fmt;

/// One denominator factor 1 - X^a Y^b.  Every factor involves Y (b >= 1), so
/// power-series extraction in Y is always possible.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct BinomFactor {
    pub a: u64,
    pub b: u64,
}

impl BinomFactor {
    pub fn new(a: u64, b: u64) -> Self {
        assert!(b >= 1, "denominator factor must involve Y");
        BinomFactor { a, b }
    }

    pub fn poly(&self) -> BivariatePoly {
        let mut p = BivariatePoly::one();
        p.add_term(self.a as i64, self.b as i64, crate::poly::rat(-1));
        p
    }
}

/// num / prod (1 - X^a Y^b).
#[derive(Clone, Debug)]
pub struct FactoredRat {
    num: BivariatePoly,
    den: Vec<BinomFactor>, // sorted multiset
}

impl FactoredRat {
    pub fn new(num: BivariatePoly, mut den: Vec<BinomFactor>) -> Self {
        den.sort();
        if num.is_zero() {
            den.clear();
        }
        FactoredRat { num, den }
    }

    pub fn zero() -> Self {
        Self::new(BivariatePoly::zero(), Vec::new())
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePoly::one())
    }

    pub fn from_poly(num: BivariatePoly) -> Self {
        Self::new(num, Vec::new())
    }

    /// 1 / (1 - X^a Y^b)
    pub fn inv_binom(f: BinomFactor) -> Self {
        Self::new(BivariatePoly::one(), vec![f])
    }

    pub fn num(&self) -> &BivariatePoly {
        &self.num
    }

    pub fn den(&self) -> &[BinomFactor] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn den_poly(&self) -> BivariatePoly {
        let mut p = BivariatePoly::one();
        for f in &self.den {
            p = p.mul(&f.poly());
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        Self::new(self.num.mul(&other.num), den)
    }

    pub fn mul_poly(&self, p: &BivariatePoly) -> Self {
        Self::new(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone())
    }

    pub fn mul_monomial(&self, dx: i64, dy: i64) -> Self {
        Self::new(self.num.mul_monomial(dx, dy), self.den.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.num.neg(), self.den.clone())
    }

    /// Addition over the multiset-union-max common denominator.
    pub fn add(&self, other: &Self) -> Self {
        let common = multiset_union_max(&self.den, &other.den);
        let lift_a = multiset_diff(&common, &self.den);
        let lift_b = multiset_diff(&common, &other.den);
        let mut num = self.num.clone();
        for f in &lift_a {
            num = num.mul(&f.poly());
        }
        let mut numb = other.num.clone();
        for f in &lift_b {
            numb = numb.mul(&f.poly());
        }
        Self::new(num.add(&numb), common)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Semantic equality by cross-multiplication, after cancelling factors
    /// common to both denominators.
    pub fn eq_semantic(&self, other: &Self) -> bool {
        let common = multiset_intersect(&self.den, &other.den);
        let da = multiset_diff(&self.den, &common);
        let db = multiset_diff(&other.den, &common);
        let mut lhs = self.num.clone();
        for f in &db {
            lhs = lhs.mul(&f.poly());
        }
        let mut rhs = other.num.clone();
        for f in &da {
            rhs = rhs.mul(&f.poly());
        }
        lhs == rhs
    }

    /// The rational function f(X^{-1}, Y^{-1}), with every inverted factor
    /// re-expressed through (1 - X^{-a}Y^{-b}) = -X^{-a}Y^{-b}(1 - X^aY^b)
    /// so the denominator stays in BinomFactor form.  The numerator may be
    /// Laurent.
    pub fn invert_vars(&self) -> Self {
        let mut num = self.num.invert_vars();
        let (mut sx, mut sy) = (0i64, 0i64);
        for f in &self.den {
            sx += f.a as i64;
            sy += f.b as i64;
        }
        if self.den.len() % 2 == 1 {
            num = num.neg();
        }
        num = num.mul_monomial(sx, sy);
        Self::new(num, self.den.clone())
    }

    /// Specialization X = 1 (the reduced limit).
    pub fn set_x_one(&self) -> Self {
        let num = self.num.subst_x_one();
        let den = self.den.iter().map(|f| BinomFactor::new(0, f.b)).collect();
        Self::new(num, den)
    }

    /// Coefficients of Y^0..Y^order of the power-series expansion with X
    /// evaluated at xval.  The numerator must have no negative Y-exponents.
    pub fn series_y(&self, order: usize, xval: &Rational) -> Vec<Rational> {
        assert!(
            self.num.min_y().map_or(true, |m| m >= 0),
            "numerator has a pole at Y = 0"
        );
        let mut s = vec![Rational::zero(); order + 1];
        for (x, y, c) in self.num.iter() {
            let y = y as usize;
            if y <= order {
                s[y] += c * pow_rat(xval, x);
            }
        }
        // dividing by (1 - x^a Y^b): s[j] += x^a * s[j - b]
        for f in &self.den {
            let xa = pow_rat(xval, f.a as i64);
            let b = f.b as usize;
            for j in b..=order {
                let t = &xa * &s[j - b];
                s[j] += t;
            }
        }
        s
    }

    /// Exact evaluation at a point where no denominator factor vanishes.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Option<Rational> {
        let mut den = Rational::one();
        for f in &self.den {
            let v = Rational::one() - pow_rat(x, f.a as i64) * pow_rat(y, f.b as i64);
            if v.is_zero() {
                return None;
            }
            den *= v;
        }
        Some(self.num.eval(x, y) / den)
    }

    /// Rewrites self as numerator / prod(target), by exact division.  Fails
    /// when self is not expressible over the target denominator.
    pub fn rewrite_over(&self, target: &[BinomFactor]) -> Result<BivariatePoly, ExactError> {
        let mut t = target.to_vec();
        t.sort();
        let common = multiset_intersect(&self.den, &t);
        let extra_target = multiset_diff(&t, &common);
        let extra_self = multiset_diff(&self.den, &common);
        let mut dividend = self.num.clone();
        for f in &extra_target {
            dividend = dividend.mul(&f.poly());
        }
        let mut divisor = BivariatePoly::one();
        for f in &extra_self {
            divisor = divisor.mul(&f.poly());
        }
        dividend.div_exact(&divisor)
    }

    pub fn render_text(&self) -> String {
        let num = self.num.render_text();
        if self.den.is_empty() {
            return num;
        }
        let den: String = self
            .den
            .iter()
            .map(|f| format!("({})", f.poly().render_text()))
            .collect();
        if self.num.num_terms() > 1 {
            format!("({})/({})", num, den)
        } else {
            format!("{}/({})", num, den)
        }
    }

    pub fn render_latex(&self) -> String {
        let num = self.num.render_latex();
        if self.den.is_empty() {
            return num;
        }
        let den: String = self
            .den
            .iter()
            .map(|f| format!("({})", f.poly().render_latex()))
            .collect();
        format!("\\frac{{{}}}{{{}}}", num, den)
    }
}

impl fmt::Display for FactoredRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_text())
    }
}

pub fn multiset_union_max(a: &[BinomFactor], b: &[BinomFactor]) -> Vec<BinomFactor> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn multiset_intersect(a: &[BinomFactor], b: &[BinomFactor]) -> Vec<BinomFactor> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] < b[j] {
            i += 1;
        } else if b[j] < a[i] {
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

/// a minus b as multisets; b need not be contained in a.
pub fn multiset_diff(a: &[BinomFactor], b: &[BinomFactor]) -> Vec<BinomFactor> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j < b.len() && a[i] == b[j] {
            i += 1;
            j += 1;
        } else if j < b.len() && b[j] < a[i] {
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
        }
    }
    out
}
