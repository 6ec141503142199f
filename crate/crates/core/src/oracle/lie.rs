//! Free nilpotent Lie rings on a left-normed Hall basis, with structure
//! constants obtained by rewriting arbitrary brackets via antisymmetry and
//! the Jacobi identity.
//!
//! Basis words: degree 1 is the generators; degree 2 is x_i x_j with i < j;
//! degree >= 3 appends a generator g <= (last letter).  This left-normed rule
//! produces a genuine Hall basis exactly on the parameter domain gated by
//! `build_ring` (ranks verified against the Witt function).

use crate::errors::OracleError;
use crate::qcombo::witt;
use std::collections::{BTreeMap, HashMap};

pub(crate) type Word = Vec<u8>;
type LinComb = BTreeMap<Word, i64>;

pub struct GradedLieRing {
    pub c: usize,
    pub d: usize,
    pub layer_ranks: Vec<usize>,
    words: Vec<Vec<Word>>,
    // bracket_gen[i][k][g]: [basis k of layer i+1, generator g] in layer i+2
    // coordinates (i is 0-based; empty for the top layer)
    bracket_gen: Vec<Vec<Vec<Vec<i64>>>>,
    // all pairwise basis brackets with total degree <= c
    full: HashMap<(usize, usize, usize, usize), Vec<i64>>,
}

fn add_into(acc: &mut LinComb, w: &Word, coeff: i64) {
    if coeff == 0 {
        return;
    }
    let e = acc.entry(w.clone()).or_insert(0);
    *e += coeff;
    if *e == 0 {
        acc.remove(w);
    }
}

fn add_comb(acc: &mut LinComb, other: &LinComb, scale: i64) {
    for (w, &c) in other {
        add_into(acc, w, c * scale);
    }
}

struct Rewriter {
    c: usize,
    memo: HashMap<(Word, Word), Option<LinComb>>, // None marks in-progress
}

impl Rewriter {
    fn new(c: usize) -> Self {
        Rewriter {
            c,
            memo: HashMap::new(),
        }
    }

    /// Bracket of two basis words, as a combination of basis words.
    fn bracket(&mut self, u: &Word, v: &Word) -> LinComb {
        if u.len() + v.len() > self.c || u == v {
            return LinComb::new();
        }
        let key = (u.clone(), v.clone());
        if let Some(entry) = self.memo.get(&key) {
            return entry
                .clone()
                .expect("cyclic rewriting; outside the supported (c, d) domain");
        }
        self.memo.insert(key.clone(), None);
        let result = self.bracket_inner(u, v);
        self.memo.insert(key, Some(result.clone()));
        result
    }

    fn bracket_comb(&mut self, a: &LinComb, v: &Word, acc: &mut LinComb, scale: i64) {
        for (w, &cw) in a.clone().iter() {
            let b = self.bracket(w, v);
            add_comb(acc, &b, cw * scale);
        }
    }

    fn bracket_inner(&mut self, u: &Word, v: &Word) -> LinComb {
        let mut acc = LinComb::new();
        if v.len() == 1 {
            let g = v[0];
            if u.len() == 1 {
                let a = u[0];
                if a < g {
                    add_into(&mut acc, &vec![a, g], 1);
                } else {
                    add_into(&mut acc, &vec![g, a], -1);
                }
                return acc;
            }
            let gp = *u.last().unwrap();
            let head: Word = u[..u.len() - 1].to_vec();
            if g <= gp {
                let mut w = u.clone();
                w.push(g);
                add_into(&mut acc, &w, 1);
                return acc;
            }
            // [head.gp, g] = [[head, g], gp] + [head, [gp, g]]
            let t1 = self.bracket(&head, v);
            self.bracket_comb(&t1, &vec![gp], &mut acc, 1);
            let w2: Word = vec![gp, g];
            let t2 = self.bracket(&head, &w2);
            add_comb(&mut acc, &t2, 1);
            return acc;
        }
        if u.len() == 1 {
            let t = self.bracket(v, u);
            add_comb(&mut acc, &t, -1);
            return acc;
        }
        // both of degree >= 2: [head.gp, v] = [[head, v], gp] + [head, [gp, v]]
        let gp = *u.last().unwrap();
        let head: Word = u[..u.len() - 1].to_vec();
        let t1 = self.bracket(&head, v);
        self.bracket_comb(&t1, &vec![gp], &mut acc, 1);
        let t2 = self.bracket(v, &vec![gp]);
        for (w, &cw) in t2.iter() {
            let t = self.bracket(&head, w);
            add_comb(&mut acc, &t, -cw);
        }
        acc
    }
}

fn supported(c: u32, d: u32) -> bool {
    match c {
        1 => d >= 1,
        2 => (2..=4).contains(&d),
        3 => (2..=3).contains(&d),
        4 => d == 2,
        _ => false,
    }
}

/// Builds the free class-c Lie ring on d generators over its left-normed
/// Hall basis, with layer ranks verified against the Witt function.
pub fn build_ring(c: u32, d: u32) -> Result<GradedLieRing, OracleError> {
    if !supported(c, d) {
        return Err(OracleError::UnsupportedParams { c, d });
    }
    let c = c as usize;
    let d = d as usize;
    let mut words: Vec<Vec<Word>> = Vec::with_capacity(c);
    words.push((0..d as u8).map(|g| vec![g]).collect());
    for layer in 2..=c {
        let mut next = Vec::new();
        for w in &words[layer - 2] {
            let last = *w.last().unwrap();
            if layer == 2 {
                for g in last + 1..d as u8 {
                    let mut nw = w.clone();
                    nw.push(g);
                    next.push(nw);
                }
            } else {
                for g in 0..=last {
                    let mut nw = w.clone();
                    nw.push(g);
                    next.push(nw);
                }
            }
        }
        next.sort();
        words.push(next);
    }
    let layer_ranks: Vec<usize> = words.iter().map(|l| l.len()).collect();
    for (i, &r) in layer_ranks.iter().enumerate() {
        let expect = if i == 0 {
            d as u64
        } else {
            witt(d as u64, i as u64 + 1)
        };
        assert_eq!(r as u64, expect, "layer {} rank disagrees with Witt", i + 1);
        if r > 8 {
            return Err(OracleError::UnsupportedParams {
                c: c as u32,
                d: d as u32,
            });
        }
    }

    let index: Vec<HashMap<Word, usize>> = words
        .iter()
        .map(|l| {
            l.iter()
                .enumerate()
                .map(|(i, w)| (w.clone(), i))
                .collect()
        })
        .collect();
    let to_vec = |comb: &LinComb, layer: usize| -> Vec<i64> {
        let mut v = vec![0i64; words[layer - 1].len()];
        for (w, &cw) in comb {
            v[index[layer - 1][w]] = cw;
        }
        v
    };

    let mut rw = Rewriter::new(c);
    let mut bracket_gen = Vec::with_capacity(c);
    for layer in 1..=c {
        let mut per_basis = Vec::new();
        if layer < c {
            for w in &words[layer - 1] {
                let mut per_gen = Vec::with_capacity(d);
                for g in 0..d as u8 {
                    let comb = rw.bracket(w, &vec![g]);
                    per_gen.push(to_vec(&comb, layer + 1));
                }
                per_basis.push(per_gen);
            }
        }
        bracket_gen.push(per_basis);
    }

    let mut full = HashMap::new();
    for li in 1..=c {
        for lj in 1..=c {
            if li + lj > c {
                continue;
            }
            for (ki, wi) in words[li - 1].iter().enumerate() {
                for (kj, wj) in words[lj - 1].iter().enumerate() {
                    let comb = rw.bracket(wi, wj);
                    full.insert((li, ki, lj, kj), to_vec(&comb, li + lj));
                }
            }
        }
    }

    Ok(GradedLieRing {
        c,
        d,
        layer_ranks,
        words,
        bracket_gen,
        full,
    })
}

impl GradedLieRing {
    pub fn basis_words(&self, layer: usize) -> &[Word] {
        &self.words[layer - 1]
    }

    /// [basis k of `layer`, generator g] in layer+1 coordinates.
    pub fn bracket_basis_gen(&self, layer: usize, k: usize, g: usize) -> &[i64] {
        &self.bracket_gen[layer - 1][k][g]
    }

    /// Bilinear extension: [v, generator g] for v in `layer` coordinates.
    pub fn bracket_vec_gen(&self, layer: usize, v: &[i128], g: usize) -> Vec<i128> {
        if layer >= self.c {
            return Vec::new();
        }
        let mut out = vec![0i128; self.layer_ranks[layer]];
        for (k, &vk) in v.iter().enumerate() {
            if vk == 0 {
                continue;
            }
            for (t, &ck) in self.bracket_gen[layer - 1][k][g].iter().enumerate() {
                out[t] += vk * ck as i128;
            }
        }
        out
    }

    /// General bracket of basis elements (for the antisymmetry/Jacobi checks).
    pub fn bracket_basis(&self, li: usize, ki: usize, lj: usize, kj: usize) -> Vec<i64> {
        if li + lj > self.c {
            return Vec::new();
        }
        self.full[&(li, ki, lj, kj)].clone()
    }

    /// Bilinear extension of the general bracket on coordinate vectors.
    pub fn bracket_elements(&self, li: usize, u: &[i64], lj: usize, v: &[i64]) -> Vec<i64> {
        if li + lj > self.c {
            return Vec::new();
        }
        let mut out = vec![0i64; self.layer_ranks[li + lj - 1]];
        for (ki, &cu) in u.iter().enumerate() {
            if cu == 0 {
                continue;
            }
            for (kj, &cv) in v.iter().enumerate() {
                if cv == 0 {
                    continue;
                }
                for (t, &w) in self.full[&(li, ki, lj, kj)].iter().enumerate() {
                    out[t] += cu * cv * w;
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_follow_witt() {
        assert_eq!(build_ring(3, 3).unwrap().layer_ranks, vec![3, 3, 8]);
        assert_eq!(build_ring(4, 2).unwrap().layer_ranks, vec![2, 1, 2, 3]);
        assert_eq!(build_ring(2, 4).unwrap().layer_ranks, vec![4, 6]);
        assert_eq!(build_ring(1, 1).unwrap().layer_ranks, vec![1]);
        assert!(build_ring(3, 4).is_err());
        assert!(build_ring(5, 2).is_err());
    }

    #[test]
    fn f33_jacobi_rewrite() {
        // [[x, y], z] = [[x, z], y] - [[y, z], x] in the Hall basis: the word
        // xyz rewrites to xzy - yzx
        let ring = build_ring(3, 3).unwrap();
        let words = ring.basis_words(3);
        let xy = ring
            .basis_words(2)
            .iter()
            .position(|w| w == &vec![0u8, 1])
            .unwrap();
        let v = ring.bracket_basis_gen(2, xy, 2);
        let xzy = words.iter().position(|w| w == &vec![0u8, 2, 1]).unwrap();
        let yzx = words.iter().position(|w| w == &vec![1u8, 2, 0]).unwrap();
        let mut expect = vec![0i64; 8];
        expect[xzy] = 1;
        expect[yzx] = -1;
        assert_eq!(v, &expect[..]);
    }

    #[test]
    fn f42_xyxy_equals_xyyx() {
        let ring = build_ring(4, 2).unwrap();
        let xyx = ring
            .basis_words(3)
            .iter()
            .position(|w| w == &vec![0u8, 1, 0])
            .unwrap();
        let v = ring.bracket_basis_gen(3, xyx, 1);
        let words4 = ring.basis_words(4);
        let xyyx = words4.iter().position(|w| w == &vec![0u8, 1, 1, 0]).unwrap();
        let mut expect = vec![0i64; 3];
        expect[xyyx] = 1;
        assert_eq!(v, &expect[..]);
    }

    #[test]
    fn class_two_brackets_vanish() {
        let ring = build_ring(2, 2).unwrap();
        assert_eq!(ring.bracket_basis_gen(1, 0, 1), &[1]);
        assert_eq!(ring.bracket_basis_gen(1, 1, 0), &[-1]);
        assert!(ring.bracket_vec_gen(2, &[1], 0).is_empty());
    }

    #[test]
    fn antisymmetry_and_jacobi_exhaustive() {
        for (c, d) in [(2u32, 2u32), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let ring = build_ring(c, d).unwrap();
            let c = ring.c;
            // antisymmetry on all basis pairs with total degree <= c
            for li in 1..=c {
                for lj in 1..=c {
                    if li + lj > c {
                        continue;
                    }
                    for ki in 0..ring.layer_ranks[li - 1] {
                        for kj in 0..ring.layer_ranks[lj - 1] {
                            let ab = ring.bracket_basis(li, ki, lj, kj);
                            let ba = ring.bracket_basis(lj, kj, li, ki);
                            let neg: Vec<i64> = ba.iter().map(|&x| -x).collect();
                            assert_eq!(ab, neg, "({},{}) vs ({},{})", li, ki, lj, kj);
                        }
                    }
                }
            }
            // Jacobi on all basis triples with total degree <= c
            for li in 1..=c {
                for lj in 1..=c {
                    for lk in 1..=c {
                        if li + lj + lk > c {
                            continue;
                        }
                        for ki in 0..ring.layer_ranks[li - 1] {
                            for kj in 0..ring.layer_ranks[lj - 1] {
                                for kk in 0..ring.layer_ranks[lk - 1] {
                                    let mut e_i = vec![0i64; ring.layer_ranks[li - 1]];
                                    e_i[ki] = 1;
                                    let mut e_j = vec![0i64; ring.layer_ranks[lj - 1]];
                                    e_j[kj] = 1;
                                    let mut e_k = vec![0i64; ring.layer_ranks[lk - 1]];
                                    e_k[kk] = 1;
                                    let t1 = ring.bracket_elements(
                                        li + lj,
                                        &ring.bracket_elements(li, &e_i, lj, &e_j),
                                        lk,
                                        &e_k,
                                    );
                                    let t2 = ring.bracket_elements(
                                        lj + lk,
                                        &ring.bracket_elements(lj, &e_j, lk, &e_k),
                                        li,
                                        &e_i,
                                    );
                                    let t3 = ring.bracket_elements(
                                        lk + li,
                                        &ring.bracket_elements(lk, &e_k, li, &e_i),
                                        lj,
                                        &e_j,
                                    );
                                    let sum: Vec<i64> = t1
                                        .iter()
                                        .zip(&t2)
                                        .zip(&t3)
                                        .map(|((a, b), c)| a + b + c)
                                        .collect();
                                    assert!(
                                        sum.iter().all(|&x| x == 0),
                                        "Jacobi fails at ({},{},{}) ({},{},{})",
                                        li,
                                        lj,
                                        lk,
                                        ki,
                                        kj,
                                        kk
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
