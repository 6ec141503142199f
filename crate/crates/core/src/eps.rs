//! Laurent expansion in eps = q - 1 over the field of rational functions in
//! s.  Substituting Y = X^{-s} turns a monomial X^a Y^b into q^u with
//! u = a - b s, and q^u = sum_k C(u, k) eps^k with
//! C(u, k) = u(u-1)...(u-k+1)/k!.  Each denominator factor then contributes
//! one pole order in eps, with leading coefficient 1/(b s - a).

use crate::errors::ExactError;
use crate::frat::FactoredRat;
use crate::poly::{rat, Rational};
use crate::srat::{SPoly, SRat};
use num_traits::Zero;

/// Window of a Laurent series in eps with SRat coefficients for
/// eps^lowest .. eps^trunc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EpsSeries {
    lowest: i64,
    coeffs: Vec<SRat>,
    trunc: i64,
}

impl EpsSeries {
    pub fn new(lowest: i64, coeffs: Vec<SRat>, trunc: i64) -> Self {
        let mut s = EpsSeries {
            lowest,
            coeffs,
            trunc,
        };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        while self.coeffs.first().map_or(false, |c| c.is_zero()) {
            self.coeffs.remove(0);
            self.lowest += 1;
        }
        if self.coeffs.is_empty() {
            self.lowest = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lowest(&self) -> i64 {
        self.lowest
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Coefficient of eps^k inside the window.
    pub fn coeff(&self, k: i64) -> SRat {
        if self.is_zero() || k < self.lowest || k > self.trunc {
            return SRat::zero();
        }
        let i = (k - self.lowest) as usize;
        self.coeffs.get(i).cloned().unwrap_or_else(SRat::zero)
    }

    /// Product within the common truncation window.
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return EpsSeries::new(0, Vec::new(), self.trunc.min(other.trunc));
        }
        // valid through min over cross terms of (trunc_a + lowest_b)-style bounds
        let trunc = (self.trunc + other.lowest).min(other.trunc + self.lowest);
        let lowest = self.lowest + other.lowest;
        let n = (trunc - lowest + 1).max(0) as usize;
        let mut out = vec![SRat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                let k = lowest + (i + j) as i64;
                if k > trunc {
                    continue;
                }
                let idx = (i + j) as usize;
                out[idx] = out[idx].add(&a.mul(b));
            }
        }
        EpsSeries::new(lowest, out, trunc)
    }
}

/// Power series in eps with polynomial-in-s coefficients, truncated length K.
fn binom_series(u: &SPoly, k_terms: usize) -> Vec<SPoly> {
    // C(u, 0), C(u, 1), ... C(u, k) = C(u, k-1) * (u - k + 1)/k
    let mut out = Vec::with_capacity(k_terms);
    let mut cur = SPoly::one();
    out.push(cur.clone());
    for k in 1..k_terms {
        let factor = u.sub(&SPoly::constant(rat(k as i64 - 1)));
        cur = cur.mul(&factor).scale(&crate::poly::ratio(1, k as i64));
        out.push(cur.clone());
    }
    out
}

fn series_mul(a: &[SPoly], b: &[SPoly], k_terms: usize) -> Vec<SPoly> {
    let mut out = vec![SPoly::zero(); k_terms];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j >= k_terms {
                break;
            }
            out[i + j] = out[i + j].add(&ai.mul(bj));
        }
    }
    out
}

/// Expands f around q = 1 and returns the window from the lowest pole order
/// through eps^0.  Errors with PoleOrderExceeded when a nonzero coefficient
/// survives below eps^{-rank}.
pub fn eps_expand(f: &FactoredRat, rank: u32) -> Result<EpsSeries, ExactError> {
    let nfac = f.den().len();
    // Each inverted factor is eps^{-1} * (series); to know the product
    // through eps^0 every series needs nfac + 1 coefficients.
    let k_terms = nfac + 1;

    // numerator: sum over monomials of c * q^(a - b s)
    let mut num_series = vec![SPoly::zero(); k_terms];
    for (xe, ye, c) in f.num().iter() {
        let u = SPoly::from_coeffs(vec![rat(xe), rat(-ye)]);
        let bs = binom_series(&u, k_terms);
        for (k, t) in bs.into_iter().enumerate() {
            num_series[k] = num_series[k].add(&t.scale(c));
        }
    }

    // every factor 1/(1 - q^u) = 1/(bs - a) * eps^{-1} * tail(eps),
    // tail_j = C(u, j+1)/u, a polynomial in s; invert 1 + (tail - 1).
    let mut pole_prod = SPoly::one();
    let mut acc = num_series;
    for fac in f.den() {
        let a = fac.a as i64;
        let b = fac.b as i64;
        pole_prod = pole_prod.mul(&SPoly::linear(b, a));
        let u = SPoly::from_coeffs(vec![rat(a), rat(-b)]);
        // tail[j] = (u-1)(u-2)...(u-j) / (j+1)!
        let mut tail = Vec::with_capacity(k_terms);
        let mut cur = SPoly::one();
        tail.push(cur.clone());
        for j in 1..k_terms {
            let factor = u.sub(&SPoly::constant(rat(j as i64)));
            cur = cur.mul(&factor).scale(&crate::poly::ratio(1, j as i64 + 1));
            tail.push(cur.clone());
        }
        // inv = 1/tail as a power series (tail[0] = 1)
        let mut inv = vec![SPoly::zero(); k_terms];
        inv[0] = SPoly::one();
        for j in 1..k_terms {
            let mut s = SPoly::zero();
            for i in 1..=j {
                s = s.add(&tail[i].mul(&inv[j - i]));
            }
            inv[j] = s.neg();
        }
        acc = series_mul(&acc, &inv, k_terms);
    }

    // acc[j] / pole_prod is the coefficient of eps^{j - nfac}
    let below = nfac as i64 - rank as i64;
    for (j, c) in acc.iter().enumerate() {
        if (j as i64) < below && !c.is_zero() {
            return Err(ExactError::PoleOrderExceeded { rank });
        }
    }
    let start = below.max(0) as usize;
    let coeffs: Vec<SRat> = acc[start..]
        .iter()
        .map(|c| SRat::new(c.clone(), pole_prod.clone()))
        .collect();
    Ok(EpsSeries::new(start as i64 - nfac as i64, coeffs, 0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frat::BinomFactor;
    use crate::poly::{ratio, BivariatePoly};
    use crate::srat::product_of_linears;

    fn inv(a: u64, b: u64) -> FactoredRat {
        FactoredRat::inv_binom(BinomFactor::new(a, b))
    }

    #[test]
    fn single_factor_leading_term() {
        // 1/(1 - q^{a - bs}) = 1/(bs - a) eps^{-1} + O(1)
        for (a, b) in [(0u64, 1u64), (3, 2), (2, 5)] {
            let e = eps_expand(&inv(a, b), 1).unwrap();
            assert_eq!(e.lowest(), -1);
            let lead = e.coeff(-1);
            let expect = SRat::new(SPoly::one(), SPoly::linear(b as i64, a as i64));
            assert_eq!(lead, expect);
        }
    }

    #[test]
    fn abelian_zeta_leading() {
        // zeta_{O^d}: leading 1/(s(s-1)...(s-d+1)) at eps^{-d}
        for d in 1..=4u64 {
            let mut f = FactoredRat::one();
            for j in 0..d {
                f = f.mul(&inv(j, 1));
            }
            let e = eps_expand(&f, d as u32).unwrap();
            assert_eq!(e.lowest(), -(d as i64));
            let den = product_of_linears(&(0..d as i64).map(|j| (1, j)).collect::<Vec<_>>());
            assert_eq!(e.coeff(-(d as i64)), SRat::new(SPoly::one(), den));
        }
    }

    #[test]
    fn pole_order_exceeded_detected() {
        let f = inv(0, 1).mul(&inv(1, 1));
        assert_eq!(
            eps_expand(&f, 1),
            Err(ExactError::PoleOrderExceeded { rank: 1 })
        );
    }

    #[test]
    fn numerator_cancels_pole() {
        // (1 - Y^2)/(1 - Y) = 1 + Y: value 2 + O(eps-free in s)...
        // its expansion has no pole and constant term 2 at s-independent
        // leading order only after the pole cancels.
        let num = BivariatePoly::from_y_coeffs(&[1, 0, -1]);
        let f = FactoredRat::new(num, vec![BinomFactor::new(0, 1)]);
        let e = eps_expand(&f, 0).unwrap();
        assert_eq!(e.lowest(), 0);
        assert_eq!(e.coeff(0), SRat::constant(rat(2)));
    }

    #[test]
    fn expansion_of_product_is_product_of_expansions() {
        let cases = [
            (inv(0, 1), inv(1, 2)),
            (inv(2, 3), inv(0, 1).mul(&inv(1, 1))),
            (
                FactoredRat::new(BivariatePoly::from_y_coeffs(&[1, 1]), vec![BinomFactor::new(0, 2)]),
                inv(3, 4),
            ),
        ];
        for (f, g) in cases {
            let fg = eps_expand(&f.mul(&g), (f.den().len() + g.den().len()) as u32).unwrap();
            let ef = eps_expand(&f, f.den().len() as u32).unwrap();
            let eg = eps_expand(&g, g.den().len() as u32).unwrap();
            let prod = ef.mul(&eg);
            for k in fg.lowest().max(prod.lowest())..=prod.trunc().min(fg.trunc()) {
                assert_eq!(fg.coeff(k), prod.coeff(k), "coefficient of eps^{}", k);
            }
        }
    }

    #[test]
    fn heisenberg_topological() {
        // W_{2,2} = 1/((1-Y)(1-XY)(1-Y^3)): eps^{-3} coefficient 1/(3s^2(s-1))
        let f = inv(0, 1).mul(&inv(1, 1)).mul(&inv(0, 3));
        let e = eps_expand(&f, 3).unwrap();
        let expect = SRat::new(
            SPoly::constant(ratio(1, 3)),
            product_of_linears(&[(1, 0), (1, 0), (1, 1)]),
        );
        assert_eq!(e.coeff(-3), expect);
    }
}
