//! Independent oracles shared by the integration tests. Nothing here calls
//! the Pieri/Giambelli engine, the hook-content formula, or the subset
//! Pfaffian recursion.
#![allow(dead_code, clippy::needless_range_loop)]

use grassmann_roberts::{BigInt, BigRational, Partition};
use num_traits::{One, Zero};
use rand::Rng;

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Counts semistandard fillings of `λ` with entries `1..=n` cell by cell.
pub fn ssyt_brute_force(lambda: &[usize], n: usize) -> u64 {
    let cells: Vec<(usize, usize)> = lambda
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<usize>> = lambda.iter().map(|&len| vec![0; len]).collect();
    fn go(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, n: usize) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        let left = if j > 0 { grid[i][j - 1] } else { 1 };
        let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
        let low = left.max(above);
        let mut total = 0;
        for v in low..=n {
            grid[i][j] = v;
            total += go(cells, k + 1, grid, n);
        }
        total
    }
    go(&cells, 0, &mut grid, n)
}

/// All partitions of `k` (any number of parts).
pub fn partitions_of(k: usize) -> Vec<Vec<usize>> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rem.min(max)).rev() {
            cur.push(part);
            go(rem - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// Coefficients of the Gaussian binomial `[n choose d]_q`.
pub fn gaussian_binomial(n: usize, d: usize) -> Vec<u64> {
    // [n, d] = [n-1, d-1] + q^d [n-1, d]
    if d == 0 || d == n {
        return vec![1];
    }
    let a = gaussian_binomial(n - 1, d - 1);
    let b = gaussian_binomial(n - 1, d);
    let len = a.len().max(b.len() + d);
    let mut out = vec![0; len];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + d] += x;
    }
    out
}

fn det(mut a: Vec<Vec<BigRational>>) -> BigRational {
    let k = a.len();
    let mut acc = BigRational::one();
    for c in 0..k {
        let Some(r) = (c..k).find(|&r| !a[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if r != c {
            a.swap(r, c);
            acc = -acc;
        }
        let pivot = a[c][c].clone();
        acc *= &pivot;
        for i in c + 1..k {
            let f = &a[i][c] / &pivot;
            for j in c..k {
                let s = &f * &a[c][j];
                a[i][j] -= s;
            }
        }
    }
    acc
}

fn pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}

/// Schur polynomial in `xs.len()` variables by the bialternant formula
/// `det(x_i^{λ_j + k - j}) / det(x_i^{k - j})`. Zero if `λ` has more parts
/// than variables.
pub fn schur_eval(lambda: &Partition, xs: &[BigRational]) -> BigRational {
    let k = xs.len();
    if lambda.len() > k {
        return BigRational::zero();
    }
    let num = (0..k)
        .map(|i| (0..k).map(|j| pow(&xs[i], lambda.part(j) + k - 1 - j)).collect())
        .collect();
    let den = (0..k)
        .map(|i| (0..k).map(|j| pow(&xs[i], k - 1 - j)).collect())
        .collect();
    det(num) / det(den)
}

/// Distinct random rationals with small numerators and denominators.
pub fn random_point<R: Rng>(rng: &mut R, k: usize) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = Vec::with_capacity(k);
    while out.len() < k {
        let x = q(rng.gen_range(-20..=20), rng.gen_range(1..=7));
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// The literal permutation sum: permutations with `σ(1) < σ(3) < ...` and
/// `σ(2i-1) < σ(2i)`, signed by inversion count.
pub fn pfaffian_permutation_sum(z: &[Vec<BigRational>]) -> BigRational {
    let k = z.len();
    if k % 2 == 1 {
        return BigRational::zero();
    }
    let mut total = BigRational::zero();
    let mut perm: Vec<usize> = (0..k).collect();
    permute(&mut perm, 0, &mut |s| {
        let pairs_ok = (0..k / 2).all(|i| s[2 * i] < s[2 * i + 1]);
        let firsts_ok = (1..k / 2).all(|i| s[2 * (i - 1)] < s[2 * i]);
        if !(pairs_ok && firsts_ok) {
            return;
        }
        let inversions = (0..k)
            .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
            .filter(|&(a, b)| s[a] > s[b])
            .count();
        let mut term = BigRational::one();
        for i in 0..k / 2 {
            term *= &z[s[2 * i]][s[2 * i + 1]];
        }
        if inversions % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    total
}

fn permute(v: &mut Vec<usize>, start: usize, f: &mut dyn FnMut(&[usize])) {
    if start == v.len() {
        f(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permute(v, start + 1, f);
        v.swap(start, i);
    }
}

pub fn random_antisymmetric<R: Rng>(rng: &mut R, k: usize) -> Vec<Vec<BigRational>> {
    let mut z = vec![vec![BigRational::zero(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let v = q(rng.gen_range(-9..=9), rng.gen_range(1..=5));
            z[j][i] = -v.clone();
            z[i][j] = v;
        }
    }
    z
}

pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}
