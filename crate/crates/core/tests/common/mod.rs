//! Shared test oracles and random-instance generators.
//!
//! The oracles here deliberately avoid the library's normal-form code:
//! rational rank comes from fraction-free elimination, torsion from
//! determinantal divisors (gcds of k-by-k minors), and the GF(2) rank
//! from a plain boolean elimination. They cross-check the homology
//! engine on independently computed ground.

#![allow(dead_code)]
#![allow(clippy::needless_range_loop)]

use rand::rngs::StdRng;
use rand::Rng;

use floerkit::cfk::{CoeffRing, HatFilteredComplex};

/// Rational rank by fraction-free (Bareiss) elimination over i128.
pub fn oracle_rank_q(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r == rank {
                continue;
            }
            for c in 0..cols {
                if c == col {
                    continue;
                }
                a[r][c] = (a[r][c] * a[rank][col] - a[r][col] * a[rank][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn det(m: &[Vec<i128>]) -> i128 {
    // Bareiss determinant of a small square matrix
    let n = m.len();
    let mut a = m.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = ((k + 1)..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for r in (k + 1)..n {
            for c in (k + 1)..n {
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) / prev;
            }
            a[r][k] = 0;
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] + (k - i) < n {
                cur[i] += 1;
                for j in (i + 1)..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Invariant factors of an integer matrix by determinantal divisors:
/// d_k = gcd(k-minors) / gcd((k-1)-minors). Early exit per level once the
/// running gcd reaches its floor.
pub fn oracle_invariant_factors(m: &[Vec<i128>]) -> Vec<i128> {
    let rank = oracle_rank_q(m);
    let n_rows = m.len();
    let n_cols = if n_rows == 0 { 0 } else { m[0].len() };
    let mut factors = Vec::new();
    let mut prev_g = 1i128;
    for k in 1..=rank {
        let mut g = 0i128;
        'minors: for rows in combinations(n_rows, k) {
            for cols in combinations(n_cols, k) {
                let sub: Vec<Vec<i128>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = gcd(g, det(&sub));
                if g == prev_g {
                    break 'minors; // d_k = 1, the floor
                }
            }
        }
        assert!(g != 0, "rank says a nonzero {k}-minor exists");
        factors.push(g / prev_g);
        prev_g = g;
    }
    factors
}

/// Homology of an endomorphism matrix with D^2 = 0 over Z, the oracle
/// route: betti = n - 2 rank, torsion = invariant factors of D that
/// exceed 1.
pub fn oracle_homology_z(d: &[Vec<i128>]) -> (usize, Vec<i64>) {
    let n = d.len();
    let r = oracle_rank_q(d);
    let betti = n - 2 * r;
    let torsion: Vec<i64> = oracle_invariant_factors(d)
        .into_iter()
        .filter(|&f| f > 1)
        .map(|f| f as i64)
        .collect();
    (betti, torsion)
}

/// GF(2) rank by plain boolean elimination.
pub fn oracle_rank_f2(m: &[Vec<i128>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<bool>> = m
        .iter()
        .map(|row| row.iter().map(|&v| v.rem_euclid(2) == 1).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][col]) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][col] {
                for c in 0..cols {
                    a[r][c] ^= a[rank][c];
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Mod-2 betti number n - 2 rank_F2(D) for an endomorphism with D^2 = 0.
pub fn oracle_betti_f2(d: &[Vec<i128>]) -> usize {
    d.len() - 2 * oracle_rank_f2(d)
}

pub fn differential_rows(c: &HatFilteredComplex) -> Vec<Vec<i128>> {
    let d = c.differential();
    (0..d.nrows()).map(|i| d.row(i)).collect()
}

/// Random valid hat complex: cancelling pairs with a random coefficient
/// plus free generators, then some filtration-respecting unimodular
/// basis changes. Always satisfies D^2 = 0 and monotonicity.
pub fn random_hat_complex(
    rng: &mut StdRng,
    name: &str,
    ring: CoeffRing,
    max_pairs: usize,
    max_free: usize,
) -> HatFilteredComplex {
    let pairs = rng.random_range(0..=max_pairs);
    let free = rng.random_range(if pairs == 0 { 1 } else { 0 }..=max_free.max(1));
    let mut c = HatFilteredComplex::new(name, ring);
    for k in 0..pairs {
        let top = rng.random_range(-2..=3);
        let drop = rng.random_range(0..=2);
        c.add_generator(format!("p{k}"), top, None);
        c.add_generator(format!("q{k}"), top - drop, None);
        // torsion-rich coefficients over Z, units over Z/2
        let coeff = match ring {
            CoeffRing::Z => *[1, 1, -1, 2, 3].get(rng.random_range(0..5)).unwrap(),
            CoeffRing::Z2 => 1,
        };
        c.add_arrow(&format!("p{k}"), &format!("q{k}"), coeff).unwrap();
    }
    for k in 0..free {
        c.add_generator(format!("f{k}"), rng.random_range(-3..=3), None);
    }
    let changes = rng.random_range(0..=6);
    for _ in 0..changes {
        apply_random_basis_change(rng, &mut c);
    }
    let report = c.validate();
    assert!(report.is_valid(), "random complex invalid: {report}");
    c
}

/// One filtration-respecting unimodular change of basis
/// x_i |-> x_i + coeff * x_j with A(x_j) <= A(x_i); rewrites the arrows
/// by conjugation.
pub fn apply_random_basis_change(rng: &mut StdRng, c: &mut HatFilteredComplex) {
    let n = c.generators.len();
    if n < 2 {
        return;
    }
    let mut tries = 0;
    let (i, j) = loop {
        let i = rng.random_range(0..n);
        let j = rng.random_range(0..n);
        if i != j && c.generators[j].alexander <= c.generators[i].alexander {
            break (i, j);
        }
        tries += 1;
        if tries > 64 {
            return;
        }
    };
    let coeff: i64 = *[1, -1, 2].get(rng.random_range(0..3)).unwrap();

    // D' = B^{-1} D B with B = I + coeff E_{j,i}
    let n128 = coeff as i128;
    let d = c.differential();
    let size = c.generators.len();
    let mut nd = vec![vec![0i128; size]; size];
    for r in 0..size {
        for s in 0..size {
            nd[r][s] = d.get(r, s);
        }
    }
    // right-multiply by B: col i += coeff * col j
    for row in nd.iter_mut() {
        row[i] += n128 * row[j];
    }
    // left-multiply by B^{-1}: row j -= coeff * row i
    for s in 0..size {
        nd[j][s] -= n128 * nd[i][s];
    }

    c.arrows.clear();
    let labels = c.labels();
    for s in 0..size {
        for (r, row) in nd.iter().enumerate() {
            let coeff = match c.ring {
                CoeffRing::Z => row[s],
                CoeffRing::Z2 => row[s].rem_euclid(2),
            };
            if coeff != 0 {
                c.add_arrow(&labels[s], &labels[r], coeff as i64).unwrap();
            }
        }
    }
    for g in &mut c.generators {
        g.maslov = None;
    }
}

/// Random twist word of the given genus and length.
pub fn random_word(rng: &mut StdRng, genus: u32, len: usize) -> floerkit::mcg::TwistWord {
    use floerkit::mcg::{Curve, TwistLetter, TwistWord};
    let letters = (0..len)
        .map(|_| {
            let idx = rng.random_range(1..=genus);
            let curve = match rng.random_range(0..3) {
                0 => Curve::A(idx),
                1 => Curve::B(idx),
                _ => Curve::Boundary,
            };
            TwistLetter { curve, sense: if rng.random_bool(0.5) { 1 } else { -1 } }
        })
        .collect();
    TwistWord::new(genus, letters).unwrap()
}
