//! 2D-words, overlap types, their numerical data, the generic D_v assembly
//! engine, and the hand-transcribed explicit catalog of the fifteen
//! f_{3,3} summands.
//!
//! A word o^{m_1} t^{n_1} ... o^{m_r} t^{n_r} records how a partition nu
//! interleaves with the inflated partition mu-bar.  Writing M_i, N_i for the
//! cumulative block sums, admissibility means hat(M_i) >= N_i for i < r,
//! which is equivalent to nu <= mu-bar.

use crate::errors::OverlapError;
use crate::frat::FactoredRat;
use crate::igusa::{igusa_i, igusa_i_circ, nd, NumericalDatum};
use crate::poly::BivariatePoly;
use crate::qcombo::{gaussian_binomial, inflate, partition_leq, Partition, QVariant};
use std::fmt;

/// Shape parameters of one overlap computation: m parts of mu against
/// n = sum(hatsteps) parts of nu, with the hat and check maps given by
/// cumulative sums of the step lists.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OverlapProfile {
    pub m: usize,
    pub n: usize,
    hatsteps: Vec<u64>,
    checksteps: Vec<u64>,
}

impl OverlapProfile {
    pub fn new(hatsteps: Vec<u64>, checksteps: Vec<u64>) -> Self {
        assert_eq!(hatsteps.len(), checksteps.len());
        assert!(!hatsteps.is_empty());
        assert!(hatsteps.iter().all(|&s| s >= 1));
        assert!(checksteps.iter().all(|&s| s >= 1));
        let m = hatsteps.len();
        let n = hatsteps.iter().sum::<u64>() as usize;
        OverlapProfile {
            m,
            n,
            hatsteps,
            checksteps,
        }
    }

    /// The f_{3,3} profile: hat = n*(2,3,3), check = n*(3,2,1).
    pub fn f33() -> Self {
        Self::new(vec![2, 3, 3], vec![3, 2, 1])
    }

    /// The profile reproducing the inner factor of the f_{3,2} closed form.
    pub fn f32_inner() -> Self {
        Self::new(vec![2], vec![3])
    }

    pub fn hatsteps(&self) -> &[u64] {
        &self.hatsteps
    }

    pub fn hatsteps_u32(&self) -> Vec<u32> {
        self.hatsteps.iter().map(|&s| s as u32).collect()
    }

    /// hat(k) = cumulative sum of the first k hat steps.
    pub fn hat(&self, k: usize) -> u64 {
        self.hatsteps[..k.min(self.m)].iter().sum()
    }

    /// check(k) = cumulative sum of the first k check steps.
    pub fn check(&self, k: usize) -> u64 {
        self.checksteps[..k.min(self.m)].iter().sum()
    }

    /// The Y-exponent weight of mu in D_v: sum_j check-weighted parts, which
    /// for f_{3,3} is 3 mu_1 + 2 mu_2 + mu_3.
    pub fn mu_weight(&self, mu: &Partition) -> u64 {
        (1..=self.m)
            .map(|j| (self.check(j) - self.check(j - 1)) * mu.part(j) as u64)
            .sum()
    }
}

/// A word in the letters o, t stored as its block decomposition
/// [(o-run, t-run); r], every o-run >= 1 and every t-run >= 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub struct OverlapWord {
    blocks: Vec<(u32, u32)>,
}

impl OverlapWord {
    pub fn from_blocks(blocks: Vec<(u32, u32)>) -> Self {
        assert!(!blocks.is_empty());
        assert!(blocks.iter().all(|&(o, t)| o >= 1 && t >= 1));
        OverlapWord { blocks }
    }

    /// Parses a plain word such as "ootottttttt".
    pub fn parse(s: &str) -> Result<Self, OverlapError> {
        let mut blocks: Vec<(u32, u32)> = Vec::new();
        let mut cur: Option<(u32, u32)> = None;
        for ch in s.chars() {
            match ch {
                'o' | 'O' => match cur {
                    Some((o, 0)) => cur = Some((o + 1, 0)),
                    Some(b) => {
                        blocks.push(b);
                        cur = Some((1, 0));
                    }
                    None => cur = Some((1, 0)),
                },
                't' | 'T' => match cur.as_mut() {
                    Some(b) => b.1 += 1,
                    None => return Err(OverlapError::UnknownWord),
                },
                _ => return Err(OverlapError::UnknownWord),
            }
        }
        if let Some(b) = cur {
            blocks.push(b);
        }
        if blocks.is_empty() || blocks.iter().any(|&(o, t)| o == 0 || t == 0) {
            return Err(OverlapError::UnknownWord);
        }
        Ok(OverlapWord { blocks })
    }

    pub fn blocks(&self) -> &[(u32, u32)] {
        &self.blocks
    }

    pub fn r(&self) -> usize {
        self.blocks.len()
    }

    pub fn o_count(&self) -> u32 {
        self.blocks.iter().map(|b| b.0).sum()
    }

    pub fn t_count(&self) -> u32 {
        self.blocks.iter().map(|b| b.1).sum()
    }

    /// Cumulative (M_i, N_i) for i in [r].
    pub fn cumulative(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::with_capacity(self.blocks.len());
        let (mut m, mut n) = (0u64, 0u64);
        for &(o, t) in &self.blocks {
            m += o as u64;
            n += t as u64;
            out.push((m, n));
        }
        out
    }

    pub fn letters(&self) -> String {
        let mut s = String::new();
        for &(o, t) in &self.blocks {
            for _ in 0..o {
                s.push('o');
            }
            for _ in 0..t {
                s.push('t');
            }
        }
        s
    }
}

impl fmt::Display for OverlapWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letters())
    }
}

/// The overlap type: interior pairs (M_i, N_i) for i in [r-1], with
/// M_r = m and N_r = n implied.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OverlapType {
    pub pairs: Vec<(u64, u64)>,
    pub m: u64,
    pub n: u64,
}

fn word_admissible(p: &OverlapProfile, w: &OverlapWord) -> bool {
    if w.o_count() as usize != p.m || w.t_count() as usize != p.n {
        return false;
    }
    let cum = w.cumulative();
    cum[..cum.len() - 1]
        .iter()
        .all(|&(mi, ni)| p.hat(mi as usize) >= ni)
}

/// All admissible words for the profile, in a fixed deterministic order
/// (lexicographic in the letter string, o before t).
pub fn enumerate_words(p: &OverlapProfile) -> Vec<OverlapWord> {
    let mut out = Vec::new();
    // compositions of m into r >= 1 positive o-runs, then interior t-runs
    fn compositions(total: u32) -> Vec<Vec<u32>> {
        if total == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=total {
            for rest in compositions(total - first) {
                let mut v = vec![first];
                v.extend(rest);
                out.push(v);
            }
        }
        out
    }
    for oruns in compositions(p.m as u32) {
        let r = oruns.len();
        // choose interior t-run sums N_1 < N_2 < ... < N_{r-1} < n
        fn rec(
            p: &OverlapProfile,
            oruns: &[u32],
            i: usize,
            prev_n: u64,
            truns: &mut Vec<u32>,
            out: &mut Vec<OverlapWord>,
        ) {
            let r = oruns.len();
            if i == r - 1 {
                let last_t = p.n as u64 - prev_n;
                if last_t >= 1 {
                    let mut blocks = Vec::with_capacity(r);
                    for k in 0..r - 1 {
                        blocks.push((oruns[k], truns[k]));
                    }
                    blocks.push((oruns[r - 1], last_t as u32));
                    out.push(OverlapWord::from_blocks(blocks));
                }
                return;
            }
            let mi: u64 = oruns[..=i].iter().map(|&o| o as u64).sum();
            let cap = p.hat(mi as usize);
            let mut ni = prev_n + 1;
            while ni <= cap && ni < p.n as u64 {
                truns.push((ni - prev_n) as u32);
                rec(p, oruns, i + 1, ni, truns, out);
                truns.pop();
                ni += 1;
            }
        }
        let _ = r;
        rec(p, &oruns, 0, 0, &mut Vec::new(), &mut out);
    }
    out.sort_by_key(|w| w.letters());
    out
}

/// Word -> overlap type; errors on inadmissible words.
pub fn word_to_type(p: &OverlapProfile, w: &OverlapWord) -> Result<OverlapType, OverlapError> {
    if !word_admissible(p, w) {
        return Err(OverlapError::Inadmissible);
    }
    let cum = w.cumulative();
    Ok(OverlapType {
        pairs: cum[..cum.len() - 1].to_vec(),
        m: p.m as u64,
        n: p.n as u64,
    })
}

/// Overlap type -> word; mutually inverse with word_to_type.
pub fn type_to_word(p: &OverlapProfile, t: &OverlapType) -> Result<OverlapWord, OverlapError> {
    if t.m != p.m as u64 || t.n != p.n as u64 {
        return Err(OverlapError::Inadmissible);
    }
    let mut blocks = Vec::new();
    let (mut pm, mut pn) = (0u64, 0u64);
    for &(mi, ni) in t.pairs.iter().chain(std::iter::once(&(t.m, t.n))) {
        if mi <= pm || ni <= pn {
            return Err(OverlapError::Inadmissible);
        }
        blocks.push(((mi - pm) as u32, (ni - pn) as u32));
        pm = mi;
        pn = ni;
    }
    let w = OverlapWord::from_blocks(blocks);
    if !word_admissible(p, &w) {
        return Err(OverlapError::Inadmissible);
    }
    Ok(w)
}

/// The numerical data of the reduction theorem:
///   X_j = X^{a_j} Y^{check(M_i) + j},  a_j = M_i(m - M_i) + j(hat(M_i) - j),  j in ]N_{i-1}, N_i]
///   Y_j = X^{b_j} Y^{check(j) + N_{i-1}},  b_j = j(m - j) + N_{i-1}(hat(j) - N_{i-1}),  j in ]M_{i-1}, M_i]
pub fn numerical_data(
    p: &OverlapProfile,
    w: &OverlapWord,
) -> (Vec<NumericalDatum>, Vec<NumericalDatum>) {
    let m = p.m as u64;
    let cum = w.cumulative();
    let mut xdata = Vec::with_capacity(p.n);
    let mut ydata = Vec::with_capacity(p.m);
    let (mut pm, mut pn) = (0u64, 0u64);
    for &(mi, ni) in &cum {
        for j in pm + 1..=mi {
            let b = j * (m - j) + pn * (p.hat(j as usize) - pn);
            ydata.push(nd(b, p.check(j as usize) + pn));
        }
        for j in pn + 1..=ni {
            let a = mi * (m - mi) + j * (p.hat(mi as usize) - j);
            xdata.push(nd(a, p.check(mi as usize) + j));
        }
        pm = mi;
        pn = ni;
    }
    (xdata, ydata)
}

/// Assembles D_v from the reduction theorem:
/// the two q^{-1}-binomial prefactor families, I blocks on the Y-data,
/// I^o blocks on the interior X-data, and a plain final I block.
pub fn assemble_dv(p: &OverlapProfile, w: &OverlapWord) -> FactoredRat {
    assert!(word_admissible(p, w), "inadmissible word {}", w);
    let m = p.m as u64;
    let cum = w.cumulative();
    let r = cum.len();
    let (xdata, ydata) = numerical_data(p, w);

    let mut prefactor = BivariatePoly::one();
    let (mut pm, mut pn) = (0u64, 0u64);
    for &(mi, ni) in &cum {
        prefactor = prefactor.mul(&gaussian_binomial(m - pm, m - mi, QVariant::QInverse));
        prefactor = prefactor.mul(&gaussian_binomial(
            p.hat(mi as usize) - pn,
            p.hat(mi as usize) - ni,
            QVariant::QInverse,
        ));
        pm = mi;
        pn = ni;
    }

    let mut out = FactoredRat::from_poly(prefactor);
    let (mut pm, mut pn) = (0u64, 0u64);
    for (i, &(mi, ni)) in cum.iter().enumerate() {
        let yblock = &ydata[pm as usize..mi as usize];
        out = out.mul(&igusa_i(yblock));
        let xblock = &xdata[pn as usize..ni as usize];
        if i + 1 < r {
            out = out.mul(&igusa_i_circ(xblock));
        } else {
            out = out.mul(&igusa_i(xblock));
        }
        pm = mi;
        pn = ni;
    }
    out
}

fn gb_inv(a: u64, b: u64) -> BivariatePoly {
    gaussian_binomial(a, b, QVariant::QInverse)
}

/// X-data tail (X^{i(8-i)} Y^{6+i}) for i in lo..=8.
fn f33_tail(lo: u64) -> Vec<NumericalDatum> {
    (lo..=8).map(|i| nd(i * (8 - i), 6 + i)).collect()
}

/// Interior X-data family (X^{2+i(5-i)} Y^{5+i}) for i in lo..=hi.
fn f33_mid(lo: u64, hi: u64) -> Vec<NumericalDatum> {
    (lo..=hi).map(|i| nd(2 + i * (5 - i), 5 + i)).collect()
}

/// The literal transcription of the fifteen explicit D_v formulas for the
/// f_{3,3} profile, selected by word shape.  Redundant with assemble_dv by
/// construction; the redundancy is the point.
pub fn explicit_dv(w: &OverlapWord) -> Result<FactoredRat, OverlapError> {
    let b = w.blocks();
    match *b {
        // o^3 t^8
        [(3, 8)] => Ok(FactoredRat::one()
            .mul(&igusa_i(&[nd(2, 3), nd(2, 5), nd(0, 6)]))
            .mul(&igusa_i(&f33_tail(1)))),
        // o^2 t^j o t^{8-j}, j in 1..=5
        [(2, j), (1, t2)] if (1..=5).contains(&j) && j + t2 == 8 => {
            let j = j as u64;
            Ok(FactoredRat::from_poly(gb_inv(5, j).mul(&gb_inv(3, 1)))
                .mul(&igusa_i(&[nd(2, 3), nd(2, 5)]))
                .mul(&igusa_i_circ(&f33_mid(1, j)))
                .mul(&igusa_i(&[nd(j * (8 - j), 6 + j)]))
                .mul(&igusa_i(&f33_tail(j + 1))))
        }
        // o t o^2 t^7
        [(1, 1), (2, 7)] => Ok(FactoredRat::from_poly(gb_inv(3, 1).mul(&gb_inv(2, 1)))
            .mul(&igusa_i(&[nd(2, 3)]))
            .mul(&igusa_i_circ(&[nd(3, 4)]))
            .mul(&igusa_i(&[nd(6, 6), nd(7, 7)]))
            .mul(&igusa_i(&f33_tail(2)))),
        // o t o t^{j-1} o t^{8-j}, j in 2..=5
        [(1, 1), (1, tj), (1, t3)] if tj >= 1 && tj + t3 == 7 => {
            let j = tj as u64 + 1;
            Ok(FactoredRat::from_poly(
                gb_inv(4, j - 1)
                    .mul(&gb_inv(3, 1))
                    .mul(&gb_inv(2, 1).pow(2)),
            )
            .mul(&igusa_i(&[nd(2, 3)]))
            .mul(&igusa_i_circ(&[nd(3, 4)]))
            .mul(&igusa_i(&[nd(6, 6)]))
            .mul(&igusa_i_circ(&f33_mid(2, j)))
            .mul(&igusa_i(&[nd(j * (8 - j), 6 + j)]))
            .mul(&igusa_i(&f33_tail(j + 1))))
        }
        // o t^2 o^2 t^6
        [(1, 2), (2, 6)] => Ok(FactoredRat::from_poly(gb_inv(3, 1))
            .mul(&igusa_i(&[nd(2, 3)]))
            .mul(&igusa_i_circ(&[nd(3, 4), nd(2, 5)]))
            .mul(&igusa_i(&[nd(8, 7), nd(12, 8)]))
            .mul(&igusa_i(&f33_tail(3)))),
        // o t^2 o t^{j-1} o t^{7-j}, j in 2..=4
        [(1, 2), (1, tj), (1, t3)] if tj >= 1 && tj + t3 == 6 => {
            let j = tj as u64 + 1;
            Ok(FactoredRat::from_poly(
                gb_inv(3, j - 1).mul(&gb_inv(3, 1)).mul(&gb_inv(2, 1)),
            )
            .mul(&igusa_i(&[nd(2, 3)]))
            .mul(&igusa_i_circ(&[nd(3, 4), nd(2, 5)]))
            .mul(&igusa_i(&[nd(8, 7)]))
            .mul(&igusa_i_circ(&f33_mid(3, j + 1)))
            .mul(&igusa_i(&[nd((j + 1) * (8 - (j + 1)), 7 + j)]))
            .mul(&igusa_i(&f33_tail(j + 2))))
        }
        _ => Err(OverlapError::UnknownWord),
    }
}

/// Classifies the pair (mu, nu) by its 2D-word: mu's parts fill each block
/// first (ties stay inside a block), and a strictly smaller next mu part
/// opens a new block.
pub fn word_of_pair(
    mu: &Partition,
    nu: &Partition,
    p: &OverlapProfile,
) -> Result<OverlapWord, OverlapError> {
    let mu = mu.padded(p.m);
    assert!(mu.len() == p.m, "mu has more parts than the profile allows");
    let nu = nu.padded(p.n);
    assert!(nu.len() == p.n, "nu has more parts than the profile allows");
    let mubar = inflate(&mu, &p.hatsteps_u32());
    if !partition_leq(&nu, &mubar) {
        return Err(OverlapError::NotDominated);
    }
    let mut blocks = Vec::new();
    let (mut k, mut l) = (0usize, 0usize); // consumed mu / nu counts
    while k < p.m {
        // o-run: mu parts >= the next nu part
        let start_k = k;
        while k < p.m && (l == p.n || mu.part(k + 1) >= nu.part(l + 1)) {
            k += 1;
        }
        debug_assert!(k > start_k, "block must open with a mu part");
        // t-run: first nu part unconditionally, then all strictly above the
        // next mu part (everything, when mu is exhausted)
        let start_l = l;
        assert!(l < p.n, "domination guarantees a nu part for every block");
        l += 1;
        while l < p.n && (k == p.m || nu.part(l + 1) > mu.part(k + 1)) {
            l += 1;
        }
        debug_assert!(
            k == p.m || nu.part(l) > mu.part(k + 1),
            "block boundary requires a strict drop"
        );
        blocks.push(((k - start_k) as u32, (l - start_l) as u32));
    }
    debug_assert_eq!(l, p.n);
    let w = OverlapWord::from_blocks(blocks);
    debug_assert!(word_admissible(p, &w));
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Rational};
    use crate::qcombo::birkhoff_alpha;
    use num_traits::Zero;

    #[test]
    fn f33_words_match_table() {
        let p = OverlapProfile::f33();
        let words = enumerate_words(&p);
        assert_eq!(words.len(), 15);
        // the fifteen overlap types of the (3, 3) table
        let table: Vec<Vec<(u64, u64)>> = vec![
            vec![],
            vec![(2, 1)],
            vec![(2, 2)],
            vec![(2, 3)],
            vec![(2, 4)],
            vec![(2, 5)],
            vec![(1, 1)],
            vec![(1, 1), (2, 2)],
            vec![(1, 1), (2, 3)],
            vec![(1, 1), (2, 4)],
            vec![(1, 1), (2, 5)],
            vec![(1, 2)],
            vec![(1, 2), (2, 3)],
            vec![(1, 2), (2, 4)],
            vec![(1, 2), (2, 5)],
        ];
        let mut want: Vec<OverlapWord> = table
            .into_iter()
            .map(|pairs| type_to_word(&p, &OverlapType { pairs, m: 3, n: 8 }).unwrap())
            .collect();
        let mut got = words;
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn single_part_profiles() {
        let words = enumerate_words(&OverlapProfile::f32_inner());
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].letters(), "ott");
        let tiny = OverlapProfile::new(vec![1], vec![1]);
        let words = enumerate_words(&tiny);
        assert_eq!(words.len(), 1);
        assert_eq!(words[0].letters(), "ot");
    }

    #[test]
    fn roundtrip_and_table_types() {
        let p = OverlapProfile::f33();
        let w = OverlapWord::parse("oootttttttt").unwrap();
        let t = word_to_type(&p, &w).unwrap();
        assert!(t.pairs.is_empty());
        assert_eq!(type_to_word(&p, &t).unwrap(), w);

        let w = OverlapWord::parse("ootottttttt").unwrap();
        let t = word_to_type(&p, &w).unwrap();
        assert_eq!(t.pairs, vec![(2, 1)]);

        let w = OverlapWord::parse("ottottotttt").unwrap();
        let t = word_to_type(&p, &w).unwrap();
        assert_eq!(t.pairs, vec![(1, 2), (2, 4)]);

        for w in enumerate_words(&p) {
            let t = word_to_type(&p, &w).unwrap();
            assert_eq!(type_to_word(&p, &t).unwrap(), w);
        }
    }

    #[test]
    fn inadmissible_word_rejected() {
        let p = OverlapProfile::f33();
        // o t^3 o^2 t^5 has hat(1) = 2 < 3 = N_1
        let w = OverlapWord::parse("otttoottttt").unwrap();
        assert_eq!(word_to_type(&p, &w), Err(OverlapError::Inadmissible));
    }

    #[test]
    fn numerical_data_paper_instances() {
        let p = OverlapProfile::f33();
        // o^3 t^8: Y-data (X^2 Y^3, X^2 Y^5, Y^6); X-data (X^{i(8-i)} Y^{6+i})
        let w = OverlapWord::parse("oootttttttt").unwrap();
        let (x, y) = numerical_data(&p, &w);
        assert_eq!(y, vec![nd(2, 3), nd(2, 5), nd(0, 6)]);
        assert_eq!(x, f33_tail(1));

        // o t o^2 t^7: blocks give I_1(X^2Y^3) I_1^o(X^3Y^4) I_2(X^6Y^6, X^7Y^7) I_7(...)
        let w = OverlapWord::parse("otoottttttt").unwrap();
        let (x, y) = numerical_data(&p, &w);
        assert_eq!(y, vec![nd(2, 3), nd(6, 6), nd(7, 7)]);
        assert_eq!(x[0], nd(3, 4));
        assert_eq!(x[1..], f33_tail(2)[..]);

        // f_{3,2} inner profile, word ott: Y-data (Y^3); X-data (XY^4, Y^5)
        let p32 = OverlapProfile::f32_inner();
        let w = OverlapWord::parse("ott").unwrap();
        let (x, y) = numerical_data(&p32, &w);
        assert_eq!(y, vec![nd(0, 3)]);
        assert_eq!(x, vec![nd(1, 4), nd(0, 5)]);
    }

    #[test]
    fn engine_matches_explicit_catalog() {
        let p = OverlapProfile::f33();
        for w in enumerate_words(&p) {
            let engine = assemble_dv(&p, &w);
            let explicit = explicit_dv(&w).unwrap();
            assert!(engine.eq_semantic(&explicit), "word {}", w);
        }
    }

    #[test]
    fn dv_functional_equation() {
        // every D_v satisfies D_v(X^{-1}, Y^{-1}) = -X^31 Y^20 D_v(X, Y)
        let p = OverlapProfile::f33();
        for w in enumerate_words(&p) {
            let dv = assemble_dv(&p, &w);
            let lhs = dv.invert_vars();
            let rhs = dv.mul_monomial(31, 20).neg();
            assert!(lhs.eq_semantic(&rhs), "word {}", w);
        }
    }

    #[test]
    fn word_of_pair_examples() {
        let p = OverlapProfile::f33();
        let pm = |v: Vec<u32>| Partition::new(v);
        assert_eq!(
            word_of_pair(&pm(vec![1, 1, 1]), &pm(vec![1; 8]), &p)
                .unwrap()
                .letters(),
            "oootttttttt"
        );
        assert_eq!(
            word_of_pair(&pm(vec![2, 1, 1]), &pm(vec![2, 1, 1, 1, 1, 1, 1, 1]), &p)
                .unwrap()
                .letters(),
            "otoottttttt"
        );
        assert_eq!(
            word_of_pair(&pm(vec![0, 0, 0]), &pm(vec![0; 8]), &p)
                .unwrap()
                .letters(),
            "oootttttttt"
        );
        // nu_6 = 1 > 0 = mubar_6
        assert_eq!(
            word_of_pair(&pm(vec![1, 1, 0]), &pm(vec![1; 8]), &p),
            Err(OverlapError::NotDominated)
        );
    }

    /// Exhaustive partition-level consistency: summing the Birkhoff-weighted
    /// monomials over all pairs with a given word reproduces the Y-series of
    /// the assembled D_v, at X = p in {2, 3}, through Y-degree 12.
    #[test]
    fn partition_level_consistency() {
        let prof = OverlapProfile::f33();
        let max_wt = 12u64;
        for p in [2i64, 3] {
            let xv = rat(p);
            let mut per_word: std::collections::BTreeMap<OverlapWord, Vec<Rational>> =
                std::collections::BTreeMap::new();
            // enumerate mu (3 parts, weight-bounded) and nu <= mubar
            for m1 in 0..=max_wt as u32 / 3 {
                for m2 in 0..=m1 {
                    for m3 in 0..=m2 {
                        let mu = Partition::new(vec![m1, m2, m3]);
                        let wmu = prof.mu_weight(&mu);
                        if wmu > max_wt {
                            continue;
                        }
                        let mubar = inflate(&mu, &[2, 3, 3]);
                        let sigma_mu = Partition::new(vec![m1, m1, m1]);
                        let alpha_mu = birkhoff_alpha(&sigma_mu, &mu).eval(&xv, &xv);
                        let mut nu_parts = vec![0u32; 8];
                        enumerate_nu(
                            &mubar,
                            &mut nu_parts,
                            0,
                            max_wt - wmu,
                            &mut |nu: &Partition| {
                                let w = word_of_pair(&mu, nu, &prof).unwrap();
                                let alpha_nu = birkhoff_alpha(&mubar, nu).eval(&xv, &xv);
                                let wt = (wmu + nu.weight()) as usize;
                                let entry = per_word
                                    .entry(w)
                                    .or_insert_with(|| vec![Rational::zero(); max_wt as usize + 1]);
                                entry[wt] += &alpha_mu * alpha_nu;
                            },
                        );
                    }
                }
            }
            for w in enumerate_words(&prof) {
                let direct = assemble_dv(&prof, &w).series_y(max_wt as usize, &xv);
                let summed = per_word
                    .remove(&w)
                    .unwrap_or_else(|| vec![Rational::zero(); max_wt as usize + 1]);
                assert_eq!(direct, summed, "word {} at p = {}", w, p);
            }
            assert!(per_word.is_empty());
        }
    }

    fn enumerate_nu(
        mubar: &Partition,
        nu: &mut Vec<u32>,
        idx: usize,
        budget: u64,
        f: &mut impl FnMut(&Partition),
    ) {
        if idx == 8 {
            f(&Partition::new(nu.clone()));
            return;
        }
        let hi = mubar.part(idx + 1).min(if idx == 0 {
            budget as u32
        } else {
            nu[idx - 1]
        });
        for v in 0..=hi.min(budget as u32) {
            nu[idx] = v;
            enumerate_nu(mubar, nu, idx + 1, budget - v as u64, f);
            nu[idx] = 0;
        }
    }

    #[test]
    fn alpha_mu_uses_series_consistency() {
        // sanity for the helper used above: alpha(mu_1^{(3)}, mu) at q = p
        // counts lattices of cotype mu in O^3, so summing over all mu of
        // weight k gives the number of index-p^k sublattices of Z^3.
        for p in [2i64, 3] {
            let xv = rat(p);
            let z3 = crate::igusa::zeta_free_abelian(3);
            let series = z3.series_y(4, &xv);
            for k in 0..=4u32 {
                let mut total = Rational::zero();
                for m1 in 0..=k {
                    for m2 in 0..=m1 {
                        for m3 in 0..=m2 {
                            if m1 + m2 + m3 != k {
                                continue;
                            }
                            let mu = Partition::new(vec![m1, m2, m3]);
                            let sigma = Partition::new(vec![m1, m1, m1]);
                            total += birkhoff_alpha(&sigma, &mu).eval(&xv, &xv);
                        }
                    }
                }
                assert_eq!(total, series[k as usize], "k = {} p = {}", k, p);
            }
        }
    }
}
