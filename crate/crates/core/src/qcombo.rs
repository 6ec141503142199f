//! Partitions, Witt ranks, Gaussian binomials/multinomials, and Birkhoff's
//! submodule-counting polynomial.

use crate::poly::{rat, BivariatePoly};

/// Weakly decreasing tuple of nonnegative integers.  Trailing zeros are
/// permitted and semantically ignored, but the declared length is preserved
/// (inflate depends on it).
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing: {:?}",
            parts
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// 1-based part accessor; 0 beyond the declared length.
    pub fn part(&self, k: usize) -> u32 {
        if k == 0 || k > self.parts.len() {
            0
        } else {
            self.parts[k - 1]
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn max_part(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn nonzero_len(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// Drops trailing zeros.
    pub fn trimmed(&self) -> Self {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// Pads with zeros to at least n parts.
    pub fn padded(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        while parts.len() < n {
            parts.push(0);
        }
        Partition { parts }
    }
}

/// lambda'_k = #{i : lambda_i >= k}; an involution on trimmed partitions.
pub fn dual_partition(l: &Partition) -> Partition {
    let max = l.max_part() as usize;
    let mut parts = Vec::with_capacity(max);
    for k in 1..=max {
        parts.push(l.parts.iter().filter(|&&p| p as usize >= k).count() as u32);
    }
    Partition::new(parts)
}

/// Containment order: tau_k <= sigma_k for all k.
pub fn partition_leq(tau: &Partition, sigma: &Partition) -> bool {
    let n = tau.len().max(sigma.len());
    (1..=n).all(|k| tau.part(k) <= sigma.part(k))
}

/// Each mu_i repeated multiplicities[i] times.
pub fn inflate(mu: &Partition, multiplicities: &[u32]) -> Partition {
    assert_eq!(
        mu.len(),
        multiplicities.len(),
        "inflate needs one multiplicity per declared part"
    );
    let mut parts = Vec::new();
    for (i, &m) in multiplicities.iter().enumerate() {
        assert!(m >= 1);
        for _ in 0..m {
            parts.push(mu.parts[i]);
        }
    }
    Partition::new(parts)
}

fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut mu = 1i64;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// W_d(i) = (1/i) sum_{j | i} moebius(j) d^{i/j}, the rank of the i-th
/// lower-central layer of the free Lie ring on d generators.
pub fn witt(d: u64, i: u64) -> u64 {
    assert!(i >= 1);
    let mut sum = 0i128;
    for j in 1..=i {
        if i % j == 0 {
            sum += moebius(j) as i128 * (d as i128).pow((i / j) as u32);
        }
    }
    let v = sum / i as i128;
    assert_eq!(v * i as i128, sum, "Witt sum must divide evenly");
    assert!(v > 0);
    v as u64
}

/// Generator count, class, and the layer ranks (W_d(1), ..., W_d(c)).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WittProfile {
    pub d: u64,
    pub c: u64,
    pub ranks: Vec<u64>,
}

impl WittProfile {
    pub fn new(d: u64, c: u64) -> Self {
        assert!(d >= 2 && c >= 1);
        let ranks = (1..=c).map(|i| witt(d, i)).collect();
        WittProfile { d, c, ranks }
    }

    pub fn total_rank(&self) -> u64 {
        self.ranks.iter().sum()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QVariant {
    Q,
    QInverse,
}

/// Gaussian binomial coefficient in X (= q), or its q^{-1} form as a Laurent
/// polynomial.  binom_q(a, b) = X^{b(a-b)} binom_{q^{-1}}(a, b).
pub fn gaussian_binomial(a: u64, b: u64, variant: QVariant) -> BivariatePoly {
    if b > a {
        return BivariatePoly::zero();
    }
    // Pascal recurrence binom(n, k) = binom(n-1, k-1) + X^k binom(n-1, k)
    let b = b.min(a - b);
    let mut row: Vec<BivariatePoly> = vec![BivariatePoly::one()];
    for n in 1..=a {
        let kmax = b.min(n);
        let mut next: Vec<BivariatePoly> = Vec::with_capacity(kmax as usize + 1);
        for k in 0..=kmax {
            if k == 0 {
                next.push(BivariatePoly::one());
            } else if k == n {
                next.push(BivariatePoly::one());
            } else {
                let left = &row[k as usize - 1];
                let right = row[k as usize].mul_monomial(k as i64, 0);
                next.push(left.add(&right));
            }
        }
        row = next;
    }
    let q_form = row[b as usize].clone();
    match variant {
        QVariant::Q => q_form,
        QVariant::QInverse => q_form.mul_monomial(-((b * (a - b)) as i64), 0),
    }
}

/// Chain-product q-multinomial: for I = {i_1 < ... < i_l} subset of [h-1],
/// binom(h, i_l) binom(i_l, i_{l-1}) ... binom(i_2, i_1).
pub fn gaussian_multinomial(h: u64, idx: &[u64], variant: QVariant) -> BivariatePoly {
    assert!(idx.windows(2).all(|w| w[0] < w[1]), "index set must be increasing");
    assert!(idx.iter().all(|&i| i >= 1 && i < h.max(1)));
    let mut out = BivariatePoly::one();
    let mut top = h;
    for &i in idx.iter().rev() {
        out = out.mul(&gaussian_binomial(top, i, variant));
        top = i;
    }
    out
}

/// Birkhoff's polynomial alpha(sigma, tau; q): the number of submodules of
/// type tau inside a finite module of type sigma, as a polynomial in X = q.
pub fn birkhoff_alpha(sigma: &Partition, tau: &Partition) -> BivariatePoly {
    if !partition_leq(tau, sigma) {
        return BivariatePoly::zero();
    }
    let sd = dual_partition(sigma);
    let td = dual_partition(tau);
    let mut out = BivariatePoly::one();
    // all factors beyond k = sigma_1 are 1
    for k in 1..=sigma.max_part() as usize {
        let sk = sd.part(k) as u64;
        let tk = td.part(k) as u64;
        let tk1 = td.part(k + 1) as u64;
        let factor = gaussian_binomial(sk - tk1, sk - tk, QVariant::QInverse)
            .mul_monomial((tk * (sk - tk)) as i64, 0);
        out = out.mul(&factor);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rational;
    use proptest::prelude::*;

    #[test]
    fn witt_values() {
        assert_eq!(
            (1..=3).map(|i| witt(3, i)).collect::<Vec<_>>(),
            vec![3, 3, 8]
        );
        assert_eq!(
            (1..=4).map(|i| witt(2, i)).collect::<Vec<_>>(),
            vec![2, 1, 2, 3]
        );
        assert_eq!(witt(2, 6), 9);
    }

    #[test]
    fn dual_examples() {
        let d = |v: Vec<u32>| dual_partition(&Partition::new(v));
        assert_eq!(d(vec![2, 1]), Partition::new(vec![2, 1]));
        assert_eq!(d(vec![3, 1, 1]), Partition::new(vec![3, 1, 1]));
        assert_eq!(d(vec![2, 2, 1]), Partition::new(vec![3, 2]));
    }

    #[test]
    fn leq_examples() {
        let p = |v: Vec<u32>| Partition::new(v);
        assert!(partition_leq(&p(vec![1]), &p(vec![2, 1])));
        assert!(!partition_leq(&p(vec![2, 2]), &p(vec![3, 1])));
    }

    #[test]
    fn inflate_examples() {
        let mu = Partition::new(vec![2, 1, 0]);
        assert_eq!(
            inflate(&mu, &[2, 3, 3]),
            Partition::new(vec![2, 2, 1, 1, 1, 0, 0, 0])
        );
        assert_eq!(inflate(&Partition::new(vec![5]), &[1]), Partition::new(vec![5]));
        assert_eq!(
            inflate(&Partition::new(vec![1, 1]), &[1, 2]),
            Partition::new(vec![1, 1, 1])
        );
    }

    #[test]
    fn gaussian_small() {
        assert_eq!(
            gaussian_binomial(2, 1, QVariant::Q),
            BivariatePoly::from_y_coeffs(&[0]).add(&poly_x(&[1, 1]))
        );
        assert_eq!(gaussian_binomial(4, 2, QVariant::Q), poly_x(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0, QVariant::Q), BivariatePoly::one());
        assert!(gaussian_binomial(2, 3, QVariant::Q).is_zero());
    }

    fn poly_x(coeffs: &[i64]) -> BivariatePoly {
        let mut p = BivariatePoly::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(i as i64, 0, rat(c));
        }
        p
    }

    #[test]
    fn gaussian_product_formula_agrees() {
        // independent route: binom(a, b)_q = prod (1 - X^{a-b+i})/(1 - X^i)
        for a in 0..=8u64 {
            for b in 0..=a {
                let mut num = BivariatePoly::one();
                let mut den = BivariatePoly::one();
                for i in 1..=b {
                    let mut f = BivariatePoly::one();
                    f.add_term((a - b + i) as i64, 0, rat(-1));
                    num = num.mul(&f);
                    let mut g = BivariatePoly::one();
                    g.add_term(i as i64, 0, rat(-1));
                    den = den.mul(&g);
                }
                let expect = num.div_exact(&den).unwrap();
                assert_eq!(gaussian_binomial(a, b, QVariant::Q), expect);
            }
        }
    }

    #[test]
    fn gaussian_inverse_identity_and_palindromy() {
        for a in 0..=8u64 {
            for b in 0..=a {
                let q = gaussian_binomial(a, b, QVariant::Q);
                let qi = gaussian_binomial(a, b, QVariant::QInverse);
                assert_eq!(q, qi.mul_monomial((b * (a - b)) as i64, 0));
                // nonnegative integer coefficients, palindromic of degree b(a-b)
                let deg = (b * (a - b)) as i64;
                assert_eq!(q.deg_x().unwrap_or(0), deg);
                for (x, _, c) in q.iter() {
                    assert!(c > &Rational::from_integer(0.into()));
                    assert!(c.is_integer());
                    assert_eq!(q.coeff(deg - x, 0), c.clone());
                }
            }
        }
    }

    #[test]
    fn multinomial_chain() {
        assert_eq!(gaussian_multinomial(5, &[], QVariant::Q), BivariatePoly::one());
        assert_eq!(
            gaussian_multinomial(3, &[1], QVariant::Q),
            gaussian_binomial(3, 1, QVariant::Q)
        );
        assert_eq!(
            gaussian_multinomial(3, &[1, 2], QVariant::Q),
            gaussian_binomial(3, 2, QVariant::Q).mul(&gaussian_binomial(2, 1, QVariant::Q))
        );
    }

    #[test]
    fn birkhoff_examples() {
        let p = |v: Vec<u32>| Partition::new(v);
        assert_eq!(
            birkhoff_alpha(&p(vec![1, 1]), &p(vec![1])),
            poly_x(&[1, 1])
        );
        assert_eq!(birkhoff_alpha(&p(vec![2]), &p(vec![1])), BivariatePoly::one());
        assert_eq!(
            birkhoff_alpha(&p(vec![3, 2]), &p(vec![3, 2])),
            BivariatePoly::one()
        );
        assert!(birkhoff_alpha(&p(vec![1]), &p(vec![2])).is_zero());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..=8, 0..=8).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v)
        })
    }

    proptest! {
        #[test]
        fn dual_is_involution(p in arb_partition()) {
            prop_assert_eq!(dual_partition(&dual_partition(&p)), p.trimmed());
        }
    }
}
