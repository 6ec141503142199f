//! Hermite normal forms of finite-index sublattices of Z^k: canonical
//! representatives, enumeration by p-power index, membership, and the
//! elementary divisor type via the Smith normal form.
//!
//! Convention: rows are basis vectors, the matrix is upper triangular with
//! positive diagonal, and the entry (i, j) for i < j is reduced modulo the
//! diagonal entry of column j.

use crate::errors::OracleError;
use crate::qcombo::Partition;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeHNF {
    pub k: usize,
    pub mat: Vec<Vec<i128>>,
}

/// Work budget for oracle enumerations; one unit per candidate considered.
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { cap, used: 0 }
    }

    pub fn charge(&mut self, n: u64) -> Result<(), OracleError> {
        self.used += n;
        if self.used > self.cap {
            Err(OracleError::TooLarge { cap: self.cap })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

impl LatticeHNF {
    pub fn full(k: usize) -> Self {
        let mut mat = vec![vec![0i128; k]; k];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = 1;
        }
        LatticeHNF { k, mat }
    }

    pub fn index(&self) -> i128 {
        (0..self.k).map(|i| self.mat[i][i]).product()
    }

    /// v_p of the index.
    pub fn index_log(&self, p: u64) -> u32 {
        let mut n = self.index();
        let mut e = 0;
        while n % p as i128 == 0 {
            n /= p as i128;
            e += 1;
        }
        debug_assert_eq!(n, 1, "index must be a p-power");
        e
    }

    /// Membership by forward substitution along the pivot columns.
    pub fn contains(&self, v: &[i128]) -> bool {
        let mut v = v.to_vec();
        for col in 0..self.k {
            let d = self.mat[col][col];
            if v[col] % d != 0 {
                return false;
            }
            let q = v[col] / d;
            if q != 0 {
                for j in col..self.k {
                    v[j] -= q * self.mat[col][j];
                }
            }
        }
        true
    }

    pub fn contains_lattice(&self, other: &LatticeHNF) -> bool {
        other.mat.iter().all(|row| self.contains(row))
    }

    /// Elementary divisor type of Z^k / self (p-adic valuations, descending,
    /// trailing zeros trimmed).
    pub fn divisor_type(&self, p: u64) -> Partition {
        let vals = smith_p_valuations(self.mat.clone(), p);
        Partition::new(vals).trimmed()
    }
}

/// Row-style HNF of a full-rank integer matrix (rows >= k, k columns).
pub fn hnf_from_rows(mut rows: Vec<Vec<i128>>, k: usize) -> LatticeHNF {
    rows.retain(|r| r.iter().any(|&x| x != 0));
    assert!(rows.iter().all(|r| r.len() == k));
    for col in 0..k {
        loop {
            // pivot: minimal nonzero |entry| in this column at or below `col`
            let mut best: Option<(usize, i128)> = None;
            for (r, row) in rows.iter().enumerate().skip(col) {
                let x = row[col];
                if x != 0 && best.map_or(true, |(_, bx)| x.abs() < bx.abs()) {
                    best = Some((r, x));
                }
            }
            let (r, _) = best.expect("matrix must have full rank");
            rows.swap(col, r);
            let mut done = true;
            let pivot = rows[col][col];
            for r in col + 1..rows.len() {
                if rows[r][col] != 0 {
                    let q = div_round(rows[r][col], pivot);
                    for j in 0..k {
                        let t = q * rows[col][j];
                        rows[r][j] -= t;
                    }
                    if rows[r][col] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if rows[col][col] < 0 {
            for j in 0..k {
                rows[col][j] = -rows[col][j];
            }
        }
    }
    rows.truncate(k);
    // reduce entries above each pivot into [0, pivot)
    for j in 0..k {
        let d = rows[j][j];
        for i in 0..j {
            let q = rows[i][j].div_euclid(d);
            if q != 0 {
                for t in j..k {
                    let s = q * rows[j][t];
                    rows[i][t] -= s;
                }
            }
        }
    }
    LatticeHNF { k, mat: rows }
}

fn div_round(a: i128, b: i128) -> i128 {
    // quotient minimizing |a - q b|
    let q = a.div_euclid(b);
    let r = a - q * b;
    if 2 * r.abs() > b.abs() {
        q + if b > 0 { 1 } else { -1 }
    } else {
        q
    }
}

/// p-adic valuations of the Smith normal form diagonal, descending.
pub fn smith_p_valuations(mut m: Vec<Vec<i128>>, p: u64) -> Vec<u32> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        'outer: loop {
            let mut best: Option<(usize, usize, i128)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = m[i][j];
                    if x != 0 && best.map_or(true, |(_, _, bx)| x.abs() < bx.abs()) {
                        best = Some((i, j, x));
                    }
                }
            }
            let (bi, bj, _) = match best {
                Some(b) => b,
                None => {
                    diag.push(0);
                    break 'outer;
                }
            };
            m.swap(t, bi);
            for row in m.iter_mut() {
                row.swap(t, bj);
            }
            let pivot = m[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t] != 0 {
                    let q = div_round(m[i][t], pivot);
                    for j in t..cols {
                        let s = q * m[t][j];
                        m[i][j] -= s;
                    }
                    if m[i][t] != 0 {
                        clean = false;
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j] != 0 {
                    let q = div_round(m[t][j], pivot);
                    for i in t..rows {
                        let s = q * m[i][t];
                        m[i][j] -= s;
                    }
                    if m[t][j] != 0 {
                        clean = false;
                    }
                }
            }
            if !clean {
                continue;
            }
            // divisibility: pivot must divide every remaining entry
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if m[i][j] % pivot != 0 {
                        for jj in t..cols {
                            let s = m[i][jj];
                            m[t][jj] += s;
                        }
                        continue 'outer;
                    }
                }
            }
            diag.push(pivot.abs());
            break;
        }
    }
    let mut vals: Vec<u32> = diag
        .into_iter()
        .map(|d| {
            assert!(d != 0, "quotient must be finite");
            let mut d = d;
            let mut e = 0u32;
            while d % p as i128 == 0 {
                d /= p as i128;
                e += 1;
            }
            assert_eq!(d, 1, "elementary divisor must be a p-power");
            e
        })
        .collect();
    vals.sort_unstable_by(|a, b| b.cmp(a));
    vals
}

/// All canonical HNF sublattices of Z^k of index p^m.
pub fn enumerate_sublattices(
    k: usize,
    p: u64,
    m: u32,
    budget: &mut Budget,
) -> Result<Vec<LatticeHNF>, OracleError> {
    let mut out = Vec::new();
    let mut diag = vec![0u32; k];
    enumerate_diag(k, p, m, 0, &mut diag, &mut out, budget)?;
    Ok(out)
}

fn enumerate_diag(
    k: usize,
    p: u64,
    rem: u32,
    pos: usize,
    diag: &mut Vec<u32>,
    out: &mut Vec<LatticeHNF>,
    budget: &mut Budget,
) -> Result<(), OracleError> {
    if pos == k {
        if rem == 0 {
            fill_offdiag(k, p, diag, out, budget)?;
        }
        return Ok(());
    }
    for e in 0..=rem {
        diag[pos] = e;
        enumerate_diag(k, p, rem - e, pos + 1, diag, out, budget)?;
    }
    diag[pos] = 0;
    Ok(())
}

fn fill_offdiag(
    k: usize,
    p: u64,
    diag: &[u32],
    out: &mut Vec<LatticeHNF>,
    budget: &mut Budget,
) -> Result<(), OracleError> {
    let dv: Vec<i128> = diag.iter().map(|&e| (p as i128).pow(e)).collect();
    let mut mat = vec![vec![0i128; k]; k];
    for i in 0..k {
        mat[i][i] = dv[i];
    }
    // entries above each diagonal range over [0, p^{e_j})
    let slots: Vec<(usize, usize)> = (0..k)
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .filter(|&(_, j)| dv[j] > 1)
        .collect();
    fn rec(
        slots: &[(usize, usize)],
        idx: usize,
        dv: &[i128],
        mat: &mut Vec<Vec<i128>>,
        out: &mut Vec<LatticeHNF>,
        budget: &mut Budget,
        k: usize,
    ) -> Result<(), OracleError> {
        if idx == slots.len() {
            budget.charge(1)?;
            out.push(LatticeHNF {
                k,
                mat: mat.clone(),
            });
            return Ok(());
        }
        let (i, j) = slots[idx];
        for v in 0..dv[j] {
            mat[i][j] = v;
            rec(slots, idx + 1, dv, mat, out, budget, k)?;
        }
        mat[i][j] = 0;
        Ok(())
    }
    rec(&slots, 0, &dv, &mut mat, out, budget, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_p_counts() {
        let mut b = Budget::new(1_000_000);
        // index-p sublattices of Z^2: p + 1
        for p in [2u64, 3, 5] {
            let lats = enumerate_sublattices(2, p, 1, &mut b).unwrap();
            assert_eq!(lats.len(), p as usize + 1);
        }
        // index 1: only the full lattice
        let lats = enumerate_sublattices(4, 2, 0, &mut b).unwrap();
        assert_eq!(lats.len(), 1);
        assert_eq!(lats[0], LatticeHNF::full(4));
    }

    #[test]
    fn count_matches_abelian_series() {
        // |sublattices of Z^k of index p^m| = Y^m coefficient of zeta_{O^k}
        // at X = p; in particular (3, 2, 2) gives 35
        use crate::igusa::zeta_free_abelian;
        use crate::poly::rat;
        let mut b = Budget::new(10_000_000);
        for k in 1..=4usize {
            for p in [2u64, 3] {
                let series = zeta_free_abelian(k as u64).series_y(4, &rat(p as i64));
                for m in 0..=4u32 {
                    let lats = enumerate_sublattices(k, p, m, &mut b).unwrap();
                    assert_eq!(
                        rat(lats.len() as i64),
                        series[m as usize],
                        "k={} p={} m={}",
                        k,
                        p,
                        m
                    );
                }
            }
        }
        let mut b2 = Budget::new(1000);
        assert_eq!(enumerate_sublattices(3, 2, 2, &mut b2).unwrap().len(), 35);
    }

    #[test]
    fn budget_exhaustion_is_clean() {
        let mut b = Budget::new(10);
        let err = enumerate_sublattices(3, 3, 3, &mut b).unwrap_err();
        assert_eq!(err, OracleError::TooLarge { cap: 10 });
    }

    #[test]
    fn membership_and_containment() {
        // 2Z x Z with a shear
        let lat = hnf_from_rows(vec![vec![2, 1], vec![0, 1]], 2);
        assert!(lat.contains(&[2, 1]));
        assert!(lat.contains(&[0, 1]));
        assert!(lat.contains(&[2, 0]));
        assert!(!lat.contains(&[1, 0]));
        assert!(LatticeHNF::full(2).contains_lattice(&lat));
        assert!(!lat.contains_lattice(&LatticeHNF::full(2)));
    }

    #[test]
    fn hnf_canonicalizes() {
        // two generating sets of the same lattice agree in HNF
        let a = hnf_from_rows(vec![vec![2, 0], vec![0, 2], vec![1, 1]], 2);
        let b = hnf_from_rows(vec![vec![1, 1], vec![2, 0]], 2);
        assert_eq!(a, b);
        assert_eq!(a.index(), 2);
    }

    #[test]
    fn divisor_types() {
        let lat = hnf_from_rows(vec![vec![4, 0], vec![0, 2]], 2);
        assert_eq!(lat.divisor_type(2), Partition::new(vec![2, 1]));
        // shear does not change the type
        let lat = hnf_from_rows(vec![vec![4, 2], vec![0, 2]], 2);
        assert_eq!(lat.divisor_type(2), Partition::new(vec![2, 1]));
        assert_eq!(
            LatticeHNF::full(3).divisor_type(5),
            Partition::new(vec![])
        );
    }
}
