//! Integer row reduction shared by the lattice and Lie modules.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub(crate) type Row = Vec<BigInt>;

fn sub_multiple(target: &mut Row, source: &Row, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (t, s) in target.iter_mut().zip(source) {
        if !s.is_zero() {
            *t -= q * s;
        }
    }
}

/// Unimodular row reduction of `rows` on the first `ncols` columns.
///
/// Afterwards the first `rank` rows are in echelon form on those columns and
/// the remaining rows vanish there. Returns the rank and the pivot columns.
pub(crate) fn echelon_prefix(rows: &mut [Row], ncols: usize) -> (usize, Vec<usize>) {
    let n = rows.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..ncols {
        if r == n {
            break;
        }
        loop {
            let piv = (r..n)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(piv) = piv else { break };
            rows.swap(r, piv);
            let mut cleared = true;
            for i in r + 1..n {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[r][col]);
                let (head, tail) = rows.split_at_mut(i);
                sub_multiple(&mut tail[0], &head[r], &q);
                if !rows[i][col].is_zero() {
                    cleared = false;
                }
            }
            if cleared {
                break;
            }
        }
        if r < n && !rows[r][col].is_zero() {
            pivots.push(col);
            r += 1;
        }
    }
    (r, pivots)
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Zero rows are dropped; pivots are positive and entries above a pivot lie in
/// `[0, pivot)`.
pub(crate) fn hermite_normal_form(mut rows: Vec<Row>) -> Vec<Row> {
    let ncols = rows.first().map_or(0, Vec::len);
    let (rank, pivots) = echelon_prefix(&mut rows, ncols);
    rows.truncate(rank);
    for (r, &col) in pivots.iter().enumerate() {
        if rows[r][col].is_negative() {
            for x in rows[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][col].div_floor(&rows[r][col]);
            let (head, tail) = rows.split_at_mut(r);
            sub_multiple(&mut head[i], &tail[0], &q);
        }
    }
    rows
}

/// Integral basis (in Hermite normal form) of `{x in Z^dim : <row, x> = 0 for all rows}`.
pub(crate) fn integer_kernel(rows: &[Row], dim: usize) -> Vec<Row> {
    let k = rows.len();
    // Augmented transpose [A^T | I].
    let mut aug: Vec<Row> = (0..dim)
        .map(|j| {
            let mut r: Row = rows.iter().map(|row| row[j].clone()).collect();
            r.extend((0..dim).map(|i| if i == j { BigInt::from(1) } else { BigInt::zero() }));
            r
        })
        .collect();
    let (rank, _) = echelon_prefix(&mut aug, k);
    let kernel = aug.into_iter().skip(rank).map(|r| r[k..].to_vec()).collect();
    hermite_normal_form(kernel)
}

/// Basis of `span_Q(rows) ∩ Z^dim`, in Hermite normal form.
pub(crate) fn saturate(rows: &[Row], dim: usize) -> Vec<Row> {
    if rows.iter().all(|r| r.iter().all(Zero::is_zero)) {
        return Vec::new();
    }
    let orth = integer_kernel(rows, dim);
    integer_kernel(&orth, dim)
}

/// Rank over `Q`.
pub(crate) fn rank(rows: &[Row]) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rows = rows.to_vec();
    echelon_prefix(&mut rows, ncols).0
}

pub(crate) fn mod_pow(base: u64, mut exp: u64, p: u64) -> u64 {
    let m = u128::from(p);
    let mut b = u128::from(base) % m;
    let mut acc = 1u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

/// Rank over the prime field `F_p`.
pub(crate) fn rank_mod_p(rows: &[Row], p: u64) -> usize {
    let pb = BigInt::from(p);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    let v = x.mod_floor(&pb);
                    u64::try_from(v).expect("residue fits in u64")
                })
                .collect()
        })
        .collect();
    let n = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        let Some(piv) = (r..n).find(|&i| m[i][col] != 0) else { continue };
        m.swap(r, piv);
        let inv = mod_pow(m[r][col], p - 2, p);
        for i in 0..n {
            if i == r || m[i][col] == 0 {
                continue;
            }
            let f = (u128::from(m[i][col]) * u128::from(inv) % u128::from(p)) as u64;
            for j in col..ncols {
                let sub = (u128::from(f) * u128::from(m[r][j]) % u128::from(p)) as u64;
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        r += 1;
        if r == n {
            break;
        }
    }
    r
}
