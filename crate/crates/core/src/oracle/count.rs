//! Brute-force counting: graded ideals of p-power index by layered HNF
//! enumeration with bracket-closure pruning, submodule counts by type, and
//! the centralizer-index spot check.

use crate::catalog::{zeta_graded, RingId};
use crate::errors::OracleError;
use crate::oracle::hnf::{enumerate_sublattices, hnf_from_rows, Budget, LatticeHNF};
use crate::oracle::lie::{build_ring, GradedLieRing};
use crate::poly::rat;
use crate::qcombo::Partition;
use num_traits::Zero;

pub const DEFAULT_CAP: u64 = 10_000_000;

/// HNF of [Lambda, f^(1)] inside layer + 1; the bracket of a finite-index
/// lattice with the full first layer has finite index again.
pub fn bracket_lattice(ring: &GradedLieRing, layer: usize, lat: &LatticeHNF) -> LatticeHNF {
    assert!(layer < ring.c);
    let next_rank = ring.layer_ranks[layer];
    let mut rows = Vec::with_capacity(lat.k * ring.d);
    for row in &lat.mat {
        for g in 0..ring.d {
            rows.push(ring.bracket_vec_gen(layer, row, g));
        }
    }
    hnf_from_rows(rows, next_rank)
}

/// Number of graded ideals of index p^n: tuples (Lambda_1, ..., Lambda_c)
/// with sum of index-logs n and [Lambda_{i-1}, f^(1)] <= Lambda_i.
pub fn count_graded_ideals(
    ring: &GradedLieRing,
    p: u64,
    n: u32,
    cap: u64,
) -> Result<u64, OracleError> {
    let mut budget = Budget::new(cap);
    let mut total = 0u64;
    count_rec(ring, p, n, 0, None, &mut total, &mut budget)?;
    Ok(total)
}

fn count_rec(
    ring: &GradedLieRing,
    p: u64,
    rem: u32,
    layer: usize,
    lower_bound: Option<&LatticeHNF>,
    total: &mut u64,
    budget: &mut Budget,
) -> Result<(), OracleError> {
    let k = ring.layer_ranks[layer];
    let last = layer + 1 == ring.c;
    // Lambda must contain the bracket of the previous layer, so its index
    // divides the bracket's index
    let m_max = match lower_bound {
        Some(b) => rem.min(b.index_log(p)),
        None => rem,
    };
    let ms: Vec<u32> = if last {
        if rem <= m_max {
            vec![rem]
        } else {
            Vec::new()
        }
    } else {
        (0..=m_max).collect()
    };
    for m in ms {
        for lat in enumerate_sublattices(k, p, m, budget)? {
            if let Some(b) = lower_bound {
                budget.charge(1)?;
                if !lat.contains_lattice(b) {
                    continue;
                }
            }
            if last {
                *total += 1;
            } else {
                let next_bound = bracket_lattice(ring, layer + 1, &lat);
                count_rec(ring, p, rem - m, layer + 1, Some(&next_bound), total, budget)?;
            }
        }
    }
    Ok(())
}

/// Number of submodules of type tau inside a finite module of type sigma:
/// lattices D <= L <= Z^k with L/D of type tau, where D = diag(p^sigma).
pub fn count_submodules_of_type(
    sigma: &Partition,
    tau: &Partition,
    p: u64,
    cap: u64,
) -> Result<u64, OracleError> {
    let sigma = sigma.trimmed();
    let tau = tau.trimmed();
    let k = sigma.len();
    if k == 0 {
        return Ok(if tau.is_empty() { 1 } else { 0 });
    }
    let mut budget = Budget::new(cap);
    let mut d_mat = vec![vec![0i128; k]; k];
    for i in 0..k {
        d_mat[i][i] = (p as i128).pow(sigma.parts()[i]);
    }
    let d_lat = LatticeHNF { k, mat: d_mat };
    let total_log = sigma.weight() as u32;
    let mut count = 0u64;
    for m in 0..=total_log {
        for lat in enumerate_sublattices(k, p, m, &mut budget)? {
            budget.charge(1)?;
            if !lat.contains_lattice(&d_lat) {
                continue;
            }
            // type of L/D: express D's rows in L's basis, then Smith
            let c = coords_matrix(&lat, &d_lat);
            let vals = crate::oracle::hnf::smith_p_valuations(c, p);
            let t = Partition::new(vals).trimmed();
            if t == tau {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Coordinates of `inner`'s rows in `outer`'s basis (outer must contain inner).
fn coords_matrix(outer: &LatticeHNF, inner: &LatticeHNF) -> Vec<Vec<i128>> {
    let k = outer.k;
    let mut out = Vec::with_capacity(k);
    for row in &inner.mat {
        let mut v = row.clone();
        let mut coords = vec![0i128; k];
        for col in 0..k {
            let d = outer.mat[col][col];
            debug_assert_eq!(v[col] % d, 0);
            let q = v[col] / d;
            coords[col] = q;
            if q != 0 {
                for j in col..k {
                    v[j] -= q * outer.mat[col][j];
                }
            }
        }
        out.push(coords);
    }
    out
}

/// Total number of subgroups of the finite abelian p-group of type sigma.
pub fn count_all_subgroups(sigma: &Partition, p: u64, cap: u64) -> Result<u64, OracleError> {
    let sigma = sigma.trimmed();
    let k = sigma.len();
    if k == 0 {
        return Ok(1);
    }
    let mut budget = Budget::new(cap);
    let mut d_mat = vec![vec![0i128; k]; k];
    for i in 0..k {
        d_mat[i][i] = (p as i128).pow(sigma.parts()[i]);
    }
    let d_lat = LatticeHNF { k, mat: d_mat };
    let mut count = 0u64;
    for m in 0..=sigma.weight() as u32 {
        for lat in enumerate_sublattices(k, p, m, &mut budget)? {
            if lat.contains_lattice(&d_lat) {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// Deterministic splitmix64 for the reproducible spot checks.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}

/// Random unimodular 3x3 with entries bounded by p^2, built from shears.
fn random_unimodular(rng: &mut SplitMix, bound: i128) -> Vec<Vec<i128>> {
    let mut u = vec![vec![0i128; 3]; 3];
    for i in 0..3 {
        u[i][i] = 1;
    }
    let mut steps = 0;
    while steps < 12 {
        let i = rng.below(3) as usize;
        let mut j = rng.below(3) as usize;
        if i == j {
            j = (j + 1) % 3;
        }
        let c = if rng.below(2) == 0 { 1i128 } else { -1 };
        let candidate: Vec<i128> = (0..3).map(|t| u[i][t] + c * u[j][t]).collect();
        if candidate.iter().all(|&x| x.abs() <= bound) {
            u[i] = candidate;
        }
        steps += 1;
    }
    u
}

/// Verifies |f^(1) : X(Lambda_2)| = p^{2 mu_1 + mu_2} in f_{3,3}, where
/// X(Lambda_2) = {w : [w, f^(1)] <= Lambda_2}; checks the diagonal lattice
/// of type mu and `spots` random unimodular images of it.
pub fn verify_x_index(mu: &Partition, p: u64, spots: usize) -> bool {
    let ring = build_ring(3, 3).expect("f_{3,3} is supported");
    let mu = mu.padded(3);
    let m1 = mu.part(1);
    let expected_log = 2 * mu.part(1) as u64 + mu.part(2) as u64;

    let diag: Vec<Vec<i128>> = (0..3)
        .map(|i| {
            let mut row = vec![0i128; 3];
            row[i] = (p as i128).pow(mu.part(i + 1));
            row
        })
        .collect();
    let mut lattices = vec![hnf_from_rows(diag.clone(), 3)];
    let mut rng = SplitMix(0x5eed_0000 + p * 1000 + mu.weight());
    for _ in 0..spots {
        let u = random_unimodular(&mut rng, (p * p) as i128);
        let rows: Vec<Vec<i128>> = (0..3)
            .map(|i| (0..3).map(|j| diag[i][i] * u[i][j]).collect())
            .collect();
        let lat = hnf_from_rows(rows, 3);
        // unimodular images preserve the divisor type
        if lat.divisor_type(p) != mu.trimmed() {
            return false;
        }
        lattices.push(lat);
    }

    for lat in lattices {
        // X contains p^{mu_1} Z^3, so counting solutions in (Z/p^{mu_1})^3
        // determines the index
        let modulus = (p as i128).pow(m1);
        let mut solutions = 0u64;
        let mut w = [0i128; 3];
        let total = modulus.pow(3);
        let mut it = 0i128;
        while it < total {
            let mut x = it;
            for slot in w.iter_mut() {
                *slot = x % modulus;
                x /= modulus;
            }
            let ok = (0..3).all(|g| {
                let v = ring.bracket_vec_gen(1, &w, g);
                lat.contains(&v)
            });
            if ok {
                solutions += 1;
            }
            it += 1;
        }
        // |Z^3 : X| = p^{3 mu_1} / solutions
        let full = (p as u64).pow(3 * m1);
        if full % solutions != 0 {
            return false;
        }
        if full / solutions != (p as u64).pow(expected_log as u32) {
            return false;
        }
    }
    true
}

/// Maps a catalog ring to its oracle Lie ring.
pub fn ring_for(id: RingId) -> Result<GradedLieRing, OracleError> {
    match id.class_generators() {
        Some((c, d)) => build_ring(c, d),
        None => Err(OracleError::UnsupportedParams { c: 0, d: 0 }),
    }
}

/// Does the closed form's Dirichlet series agree with brute-force graded
/// ideal counts at X = p through depth n_max?
pub fn dirichlet_match(id: RingId, p: u64, n_max: u32, cap: u64) -> Result<bool, OracleError> {
    let ring = ring_for(id)?;
    let series = zeta_graded(id).series_y(n_max as usize, &rat(p as i64));
    for (n, coeff) in series.iter().enumerate() {
        let counted = count_graded_ideals(&ring, p, n as u32, cap)?;
        let predicted = coeff.clone();
        if !(&predicted - rat(counted as i64)).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcombo::birkhoff_alpha;

    #[test]
    fn heisenberg_hand_counts() {
        let ring = build_ring(2, 2).unwrap();
        assert_eq!(count_graded_ideals(&ring, 2, 0, DEFAULT_CAP).unwrap(), 1);
        assert_eq!(count_graded_ideals(&ring, 2, 1, DEFAULT_CAP).unwrap(), 3);
        assert_eq!(count_graded_ideals(&ring, 2, 2, DEFAULT_CAP).unwrap(), 7);
    }

    #[test]
    fn f33_depth_one() {
        let ring = build_ring(3, 3).unwrap();
        assert_eq!(count_graded_ideals(&ring, 2, 1, DEFAULT_CAP).unwrap(), 7);
    }

    #[test]
    fn abelian_counts_match_series() {
        for d in 1..=3u32 {
            assert!(dirichlet_match(RingId::F1(d), 2, 4, DEFAULT_CAP).unwrap());
        }
    }

    #[test]
    fn bracket_lattice_types() {
        // f_{3,3}: the bracket of a diagonal type-mu lattice in layer 2 has
        // type mu-bar = inflate(mu, (2,3,3)) in layer 3
        let ring = build_ring(3, 3).unwrap();
        for parts in [[0u32, 0, 0], [1, 0, 0], [1, 1, 0], [2, 1, 0], [2, 2, 1]] {
            let mu = Partition::new(parts.to_vec());
            let p = 2u64;
            let mut mat = vec![vec![0i128; 3]; 3];
            for i in 0..3 {
                mat[i][i] = (p as i128).pow(parts[i]);
            }
            let lam2 = LatticeHNF { k: 3, mat };
            let b = bracket_lattice(&ring, 2, &lam2);
            let expect = crate::qcombo::inflate(&mu, &[2, 3, 3]).trimmed();
            assert_eq!(b.divisor_type(p), expect, "mu = {:?}", parts);
        }
    }

    #[test]
    fn f42_bracket_drops_redundant_generator() {
        // <p^{n1} xyx, p^{n2} xyy> brackets to
        // <p^{n1} xyxx, p^{n2} xyyx, p^{n2} xyyy>
        let ring = build_ring(4, 2).unwrap();
        let p = 3i128;
        let (n1, n2) = (2u32, 1u32);
        let lam3 = LatticeHNF {
            k: 2,
            mat: vec![vec![p.pow(n1), 0], vec![0, p.pow(n2)]],
        };
        let b = bracket_lattice(&ring, 3, &lam3);
        let expect = hnf_from_rows(
            vec![
                vec![p.pow(n1), 0, 0],
                vec![0, p.pow(n2), 0],
                vec![0, 0, p.pow(n2)],
            ],
            3,
        );
        assert_eq!(b, expect);
    }

    #[test]
    fn submodule_counts() {
        let pt = |v: &[u32]| Partition::new(v.to_vec());
        assert_eq!(
            count_submodules_of_type(&pt(&[1, 1]), &pt(&[1]), 3, DEFAULT_CAP).unwrap(),
            4
        );
        assert_eq!(
            count_submodules_of_type(&pt(&[2]), &pt(&[2]), 2, DEFAULT_CAP).unwrap(),
            1
        );
        assert_eq!(
            count_submodules_of_type(&pt(&[2, 1]), &pt(&[1, 1]), 2, DEFAULT_CAP).unwrap(),
            1
        );
    }

    #[test]
    fn total_subgroups_cross_check() {
        // sum over tau <= sigma of birkhoff equals the total subgroup count
        let sigma = Partition::new(vec![2, 1]);
        for p in [2u64, 3] {
            let total = count_all_subgroups(&sigma, p, DEFAULT_CAP).unwrap();
            let mut s = crate::poly::Rational::zero();
            for t1 in 0..=2u32 {
                for t2 in 0..=t1.min(1) {
                    let tau = Partition::new(vec![t1, t2]);
                    s += birkhoff_alpha(&sigma, &tau).eval(&rat(p as i64), &rat(p as i64));
                }
            }
            assert_eq!(s, rat(total as i64));
        }
    }

    #[test]
    fn x_index_examples() {
        assert!(verify_x_index(&Partition::new(vec![0, 0, 0]), 2, 2));
        assert!(verify_x_index(&Partition::new(vec![1, 0, 0]), 2, 4));
        assert!(verify_x_index(&Partition::new(vec![2, 1, 0]), 3, 2));
    }

    #[test]
    fn determinism() {
        let ring = build_ring(2, 3).unwrap();
        let a = count_graded_ideals(&ring, 2, 3, DEFAULT_CAP).unwrap();
        let b = count_graded_ideals(&ring, 2, 3, DEFAULT_CAP).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_large_is_clean() {
        let ring = build_ring(3, 3).unwrap();
        assert!(matches!(
            count_graded_ideals(&ring, 2, 3, 50),
            Err(OracleError::TooLarge { cap: 50 })
        ));
    }
}
