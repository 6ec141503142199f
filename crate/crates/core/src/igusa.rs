//! Igusa functions I_h and I_h^o with monomial numerical data, specialized
//! at Y = q^{-1} so everything stays inside Q(X, Y):
//!
//!   I_h  = 1/(1 - X_h)   * sum_{I subset [h-1]} binom(h, I)_{q^{-1}} prod_{i in I} X_i/(1 - X_i)
//!   I_h^o = X_h/(1 - X_h) * (same sum)
//!
//! with I_0 = I_0^o = 1.  Both are built from one shared subset-sum routine.

use crate::frat::{BinomFactor, FactoredRat};
use crate::poly::BivariatePoly;
use crate::qcombo::{gaussian_binomial, gaussian_multinomial, QVariant};

/// The monomial X^a Y^b substituted for one Igusa variable.  b >= 1 keeps
/// every generated denominator factor a valid BinomFactor.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NumericalDatum {
    pub a: u64,
    pub b: u64,
}

impl NumericalDatum {
    pub fn new(a: u64, b: u64) -> Self {
        assert!(b >= 1, "numerical datum must involve Y");
        NumericalDatum { a, b }
    }

    pub fn monomial(&self) -> BivariatePoly {
        BivariatePoly::monomial(crate::poly::rat(1), self.a as i64, self.b as i64)
    }

    pub fn factor(&self) -> BinomFactor {
        BinomFactor::new(self.a, self.b)
    }
}

/// Shorthand used throughout the catalog.
pub fn nd(a: u64, b: u64) -> NumericalDatum {
    NumericalDatum::new(a, b)
}

/// sum_{I subset [h-1]} binom(h, I)_{q^{-1}} prod_{i in I} X_i/(1 - X_i),
/// over the common denominator prod_{i in [h-1]} (1 - X_i).
fn subset_sum(data: &[NumericalDatum]) -> FactoredRat {
    let h = data.len() as u64;
    let head = &data[..data.len() - 1];
    let den: Vec<BinomFactor> = head.iter().map(|d| d.factor()).collect();
    let mut num = BivariatePoly::zero();
    let k = head.len();
    for mask in 0u32..(1 << k) {
        let idx: Vec<u64> = (0..k)
            .filter(|&i| mask & (1 << i) != 0)
            .map(|i| i as u64 + 1)
            .collect();
        let mut term = gaussian_multinomial(h, &idx, QVariant::QInverse);
        for (i, d) in head.iter().enumerate() {
            if mask & (1 << i) != 0 {
                term = term.mul(&d.monomial());
            } else {
                term = term.mul(&d.factor().poly());
            }
        }
        num = num.add(&term);
    }
    FactoredRat::new(num, den)
}

/// I_h on the given data; h = data.len().
pub fn igusa_i(data: &[NumericalDatum]) -> FactoredRat {
    if data.is_empty() {
        return FactoredRat::one();
    }
    let last = data[data.len() - 1];
    subset_sum(data).mul(&FactoredRat::inv_binom(last.factor()))
}

/// I_h^o on the given data; differs from I_h by the leading factor X_h.
pub fn igusa_i_circ(data: &[NumericalDatum]) -> FactoredRat {
    if data.is_empty() {
        return FactoredRat::one();
    }
    let last = data[data.len() - 1];
    subset_sum(data)
        .mul_poly(&last.monomial())
        .mul(&FactoredRat::inv_binom(last.factor()))
}

/// zeta_{O^d} = 1 / prod_{j=0}^{d-1} (1 - X^j Y).
pub fn zeta_free_abelian(d: u64) -> FactoredRat {
    assert!(d >= 1);
    let mut f = FactoredRat::one();
    for j in 0..d {
        f = f.mul(&FactoredRat::inv_binom(BinomFactor::new(j, 1)));
    }
    f
}

/// The numerical data realizing zeta_{O^d} as I_d((X^{(d-j)j} Y^j)_{j in [d]}).
pub fn abelian_igusa_data(d: u64) -> Vec<NumericalDatum> {
    (1..=d).map(|j| nd((d - j) * j, j)).collect()
}

/// Checks the Igusa functional equations under (X, Y) -> (X^{-1}, Y^{-1}):
///   I_h(data)^inv  = (-1)^h X^{a_h} Y^{b_h} X^{binom(h,2)} I_h(data)
///   I_h^o(data)^inv = (-1)^h X^{-a_h} Y^{-b_h} X^{binom(h,2)} I_h^o(data)
/// (the Y^{-binom(h,2)} of the abstract identity becomes X^{+binom(h,2)}
/// under the Y -> q^{-1} specialization).
pub fn check_igusa_funeq(data: &[NumericalDatum]) -> bool {
    let h = data.len();
    assert!(h >= 1);
    let last = data[h - 1];
    let hchoose2 = (h as i64) * (h as i64 - 1) / 2;
    let sign = if h % 2 == 0 { 1 } else { -1 };

    let i = igusa_i(data);
    let lhs = i.invert_vars();
    let rhs = i
        .mul_monomial(last.a as i64 + hchoose2, last.b as i64)
        .scale(&crate::poly::rat(sign));
    if !lhs.eq_semantic(&rhs) {
        return false;
    }

    let ic = igusa_i_circ(data);
    let lhs_c = ic.invert_vars();
    let rhs_c = ic
        .mul_monomial(-(last.a as i64) + hchoose2, -(last.b as i64))
        .scale(&crate::poly::rat(sign));
    lhs_c.eq_semantic(&rhs_c)
}
