//! Shared generators and brute-force oracles for the integration suites.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segre_core::{CycNum, ExactMatrix, Rational, StateVector};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small-integer combination of powers of ζ_m.
pub fn rand_cyc(rng: &mut impl Rng, m: u32) -> CycNum {
    let coeffs: Vec<Rational> = (0..m.max(1))
        .map(|_| Rational::from_integer(BigInt::from(rng.gen_range(-2i64..=2))))
        .collect();
    CycNum::from_coeffs(m, &coeffs)
}

pub fn rand_nonzero_cyc(rng: &mut impl Rng, m: u32) -> CycNum {
    loop {
        let x = rand_cyc(rng, m);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn rand_matrix(rng: &mut impl Rng, rows: usize, cols: usize, m: u32) -> ExactMatrix {
    ExactMatrix::from_fn(rows, cols, |_, _| rand_cyc(rng, m))
}

pub fn rand_nonzero_matrix(rng: &mut impl Rng, rows: usize, cols: usize, m: u32) -> ExactMatrix {
    loop {
        let a = rand_matrix(rng, rows, cols, m);
        if !a.is_zero() {
            return a;
        }
    }
}

pub fn rand_invertible(rng: &mut impl Rng, n: usize, m: u32) -> ExactMatrix {
    loop {
        let a = rand_matrix(rng, n, n, m);
        if a.rank() == n {
            return a;
        }
    }
}

pub fn rand_state(rng: &mut impl Rng, n: usize, m: u32) -> StateVector {
    loop {
        let v = StateVector::new((0..n).map(|_| rand_cyc(rng, m)).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

/// Whether `g` (size `p·q`) has the block form `[P_ij · Q]` of the standard
/// Kronecker product with `q × q` blocks: all nonzero blocks are multiples of
/// one block.
pub fn is_block_kronecker(g: &ExactMatrix, q: usize) -> bool {
    let p = g.rows() / q;
    let block = |bi: usize, bj: usize| -> Vec<CycNum> {
        (0..q)
            .flat_map(|i| (0..q).map(move |j| (i, j)))
            .map(|(i, j)| g.get(bi * q + i, bj * q + j).clone())
            .collect()
    };
    let blocks: Vec<Vec<CycNum>> = (0..p).flat_map(|i| (0..p).map(move |j| (i, j))).map(|(i, j)| block(i, j)).collect();
    let Some(base) = blocks.iter().find(|b| b.iter().any(|x| !x.is_zero())) else {
        return false;
    };
    let k = base.iter().position(|x| !x.is_zero()).unwrap();
    blocks.iter().all(|b| {
        let ratio = &b[k] / &base[k];
        b.iter().zip(base).all(|(x, y)| *x == &ratio * y)
    })
}

/// Sorted tuples of length `n` with entries in `lo..=hi`.
pub fn sorted_tuples(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(n: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for x in start..=hi {
            cur.push(x);
            go(n, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// Tries every `b` and `c` with zero first entry and entries up to the spread
/// of `a`.
pub fn brute_force_split(a: &[i64], d_a: usize, d_b: usize) -> bool {
    let mut target = a.to_vec();
    target.sort_unstable();
    let t = target[0];
    let span = target[target.len() - 1] - t;
    let with_zero = |len: usize| -> Vec<Vec<i64>> {
        sorted_tuples(len - 1, 0, span)
            .into_iter()
            .map(|mut v| {
                v.insert(0, 0);
                v
            })
            .collect()
    };
    let cs = with_zero(d_b);
    for b in with_zero(d_a) {
        for c in &cs {
            let mut sums: Vec<i64> = b.iter().flat_map(|x| c.iter().map(move |y| x + y + t)).collect();
            sums.sort_unstable();
            if sums == target {
                return true;
            }
        }
    }
    false
}

pub fn binom(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Semistandard tableaux of shape `lambda` with entries in `1..=d`.
pub fn ssyt_count(lambda: &[u32], d: u32) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len as usize).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u32>> = lambda.iter().map(|&l| vec![0; l as usize]).collect();
    fn go(k: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, d: u32) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        (left.max(above)..=d)
            .map(|v| {
                grid[i][j] = v;
                go(k + 1, cells, grid, d)
            })
            .sum()
    }
    go(0, &cells, &mut grid, d)
}
