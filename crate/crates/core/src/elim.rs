//! Exact nullspace computation by fraction-free Gaussian elimination,
//! with a sound modular rank filter to reject full-rank systems cheaply.

use num_traits::{Signed, ToPrimitive, Zero};

use crate::{Int, Rat};

/// Fixed filter prime, `2^61 - 1`.
const FILTER_PRIME: u64 = 2_305_843_009_213_693_951;

/// Rank over `Z_p`. Since reduction mod `p` can only lose rank, a full
/// column rank here proves the exact nullspace is trivial; anything less
/// proves nothing and the caller must fall back to exact elimination.
pub(crate) fn has_full_column_rank_mod_p(matrix: &[Vec<Int>]) -> bool {
    let rows = matrix.len();
    if rows == 0 {
        return false;
    }
    let cols = matrix[0].len();
    if rows < cols {
        return false;
    }
    let p = FILTER_PRIME as u128;
    let mut m: Vec<Vec<u64>> = matrix
        .iter()
        .map(|row| row.iter().map(reduce_mod_p).collect())
        .collect();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| m[r][col] != 0) else {
            return false; // free column: rank cannot reach cols
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            if m[r][col] == 0 {
                continue;
            }
            let a = m[rank][col] as u128;
            let b = m[r][col] as u128;
            for c in col..cols {
                let v = (a * m[r][c] as u128 + (p - b % p) * m[rank][c] as u128) % p;
                m[r][c] = v as u64;
            }
        }
        rank += 1;
        if rank == cols {
            return true;
        }
    }
    rank == cols
}

fn reduce_mod_p(x: &Int) -> u64 {
    let p = Int::from(FILTER_PRIME);
    let mut r = x % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("residue fits u64")
}

/// Basis of the right nullspace of an integer matrix, as exact rational
/// vectors. Forward elimination is single-step Bareiss (fraction-free, all
/// divisions exact); back-substitution runs over the rationals.
pub(crate) fn nullspace(mut m: Vec<Vec<Int>>) -> Vec<Vec<Rat>> {
    let rows = m.len();
    let cols = if rows == 0 { return Vec::new() } else { m[0].len() };
    let mut pivot_cols = Vec::new();
    let mut prev = Int::from(1);
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                let (q, rem) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                m[r][c] = q;
            }
            m[r][col] = Int::zero();
        }
        prev = m[rank][col].clone();
        pivot_cols.push(col);
        rank += 1;
    }

    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &c in &pivot_cols {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !pivot_set[c]) {
        let mut x = vec![Rat::zero(); cols];
        x[free] = Rat::from_integer(Int::from(1));
        for i in (0..rank).rev() {
            let pc = pivot_cols[i];
            let mut acc = Rat::zero();
            for c in pc + 1..cols {
                if m[i][c].is_zero() || x[c].is_zero() {
                    continue;
                }
                acc += Rat::from_integer(m[i][c].clone()) * &x[c];
            }
            x[pc] = -acc / Rat::from_integer(m[i][pc].clone());
        }
        basis.push(x);
    }
    basis
}
