//! Independent oracles shared by the integration targets. Nothing here calls
//! the library routine it is meant to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use itertools::Itertools;
use keypoly::{BigInt, BigRational, Composition, Polynomial};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `∂_i` of a polynomial, term by term from the closed form
/// `∂ x_i^p x_{i+1}^q = Σ_{k=0}^{p-q-1} x_i^{p-1-k} x_{i+1}^{q+k}` for `p > q`,
/// its negative with `p` and `q` exchanged for `p < q`, and `0` for `p = q`.
pub fn divided_difference_by_formula(f: &Polynomial, i: usize) -> BTreeMap<Vec<u32>, BigInt> {
    let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
    for (exp, coeff) in f.terms() {
        let e = exp.parts();
        let (p, q) = (e[i - 1], e[i]);
        let (hi, lo, sign) = if p > q { (p, q, BigInt::one()) } else { (q, p, -BigInt::one()) };
        for k in 0..hi.saturating_sub(lo) {
            let mut m = e.to_vec();
            m[i - 1] = hi - 1 - k;
            m[i] = lo + k;
            *out.entry(m).or_insert_with(BigInt::zero) += coeff * &sign;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn as_map(f: &Polynomial) -> BTreeMap<Vec<u32>, BigInt> {
    f.terms().map(|(e, c)| (e.parts().to_vec(), c.clone())).collect()
}

/// Random polynomial in `n` variables of total degree at most `max_degree`
/// with up to `max_terms` terms and coefficients in `-9..=9`.
pub fn random_polynomial(rng: &mut ChaCha8Rng, n: usize, max_degree: u32, max_terms: usize) -> Polynomial {
    let terms = rng.random_range(0..=max_terms);
    let mut pairs = Vec::with_capacity(terms);
    for _ in 0..terms {
        let degree = rng.random_range(0..=max_degree);
        let mut exp = vec![0u32; n];
        for _ in 0..degree {
            exp[rng.random_range(0..n)] += 1;
        }
        pairs.push((Composition::new(exp), BigInt::from(rng.random_range(-9i64..=9))));
    }
    Polynomial::from_terms(n, pairs).unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every vector reachable from `alpha` by the two moves, written directly
/// from their definitions: `t` swaps `a_i < a_j` for `i < j`; `m` sends
/// `a` to `a + e_i - e_j` when `i < j` and `a_i < a_j - 1`.
pub fn closure_by_dfs(alpha: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut seen = BTreeSet::from([alpha.to_vec()]);
    let mut queue = VecDeque::from([alpha.to_vec()]);
    while let Some(v) = queue.pop_front() {
        let n = v.len();
        for i in 0..n {
            for j in i + 1..n {
                let mut next = Vec::new();
                if v[i] < v[j] {
                    let mut w = v.clone();
                    w.swap(i, j);
                    next.push(w);
                }
                if v[i] + 1 < v[j] {
                    let mut w = v.clone();
                    w[i] += 1;
                    w[j] -= 1;
                    next.push(w);
                }
                for w in next {
                    if seen.insert(w.clone()) {
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    seen
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Solves the square-or-tall system `a x = b` by exact elimination. Returns
/// the unique solution when the columns are independent and the system is
/// consistent.
fn solve_exact(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let pivot = (r..rows).find(|&i| !a[i][c].is_zero())?;
        a.swap(r, pivot);
        b.swap(r, pivot);
        let p = a[r][c].clone();
        for k in c..cols {
            a[r][k] = &a[r][k] / &p;
        }
        b[r] = &b[r] / &p;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let factor = a[i][c].clone();
                for k in c..cols {
                    let delta = &factor * &a[r][k];
                    a[i][k] -= delta;
                }
                let delta = &factor * &b[r];
                b[i] -= delta;
            }
        }
        r += 1;
    }
    if b[r..].iter().any(|v| !v.is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

/// Convex-hull membership by Carathéodory: `p` lies in the hull iff it is a
/// nonnegative affine combination of some affinely independent subset of at
/// most `d + 1` generators, and such a combination is unique.
pub fn hull_contains_by_caratheodory(generators: &[Vec<u32>], p: &[BigRational]) -> bool {
    let d = p.len();
    for size in 1..=(d + 1).min(generators.len()) {
        for subset in generators.iter().combinations(size) {
            let mut a = vec![vec![q(1); size]];
            for coord in 0..d {
                a.push(subset.iter().map(|g| q(i64::from(g[coord]))).collect());
            }
            let mut b = vec![q(1)];
            b.extend(p.iter().cloned());
            if let Some(lambda) = solve_exact(a, b) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Lattice points of the hull by scanning the full bounding box.
pub fn lattice_points_by_caratheodory(generators: &[Vec<u32>]) -> BTreeSet<Vec<u32>> {
    let d = generators[0].len();
    let ranges: Vec<Vec<u32>> = (0..d)
        .map(|c| {
            let lo = generators.iter().map(|g| g[c]).min().unwrap();
            let hi = generators.iter().map(|g| g[c]).max().unwrap();
            (lo..=hi).collect()
        })
        .collect();
    ranges
        .into_iter()
        .multi_cartesian_product()
        .filter(|pt| {
            let rational: Vec<BigRational> = pt.iter().map(|&v| q(i64::from(v))).collect();
            hull_contains_by_caratheodory(generators, &rational)
        })
        .collect()
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Exhaustive family: lengths `1..=n`, parts `0..=p`, written out by hand.
pub fn family(n: usize, p: u32) -> Vec<Composition> {
    (1..=n)
        .flat_map(|len| (0..len).map(|_| 0..=p).multi_cartesian_product())
        .map(Composition::new)
        .collect()
}

/// Pads with trailing zeros so that `D(α)` fits the square grid.
pub fn pad(alpha: &Composition) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts.resize(alpha.len().max(alpha.max_part() as usize), 0);
    Composition::new(parts)
}
