//! Exact integer and GF(2) linear algebra used by the homology and
//! periodic-domain engines: dense matrices over `i128`, Smith normal form
//! with unimodular transforms (and their inverses), Hermite normal form,
//! and integer kernels.
//!
//! Everything here is deterministic: pivot selection breaks ties by the
//! smallest (row, column) pair, so repeated runs produce identical bases.

use std::fmt;

pub type Entry = i128;

#[derive(Clone, PartialEq, Eq)]
pub struct IntMat {
    rows: usize,
    cols: usize,
    data: Vec<Entry>,
}

impl IntMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Entry>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in &rows {
            assert_eq!(row.len(), c, "ragged row in matrix literal");
            data.extend_from_slice(row);
        }
        IntMat { rows: r, cols: c, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Entry {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Entry) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn row(&self, i: usize) -> Vec<Entry> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Entry> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut t = IntMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Entry]) -> Vec<Entry> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            let (x, y) = (self.get(a, j), self.get(b, j));
            self.set(a, j, y);
            self.set(b, j, x);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            let (x, y) = (self.get(i, a), self.get(i, b));
            self.set(i, a, y);
            self.set(i, b, x);
        }
    }

    /// row[a] += c * row[b]
    fn add_row(&mut self, a: usize, b: usize, c: Entry) {
        for j in 0..self.cols {
            let v = self.get(a, j) + c * self.get(b, j);
            self.set(a, j, v);
        }
    }

    /// col[a] += c * col[b]
    fn add_col(&mut self, a: usize, b: usize, c: Entry) {
        for i in 0..self.rows {
            let v = self.get(i, a) + c * self.get(i, b);
            self.set(i, a, v);
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j);
            self.set(a, j, v);
        }
    }

    fn negate_col(&mut self, a: usize) {
        for i in 0..self.rows {
            let v = -self.get(i, a);
            self.set(i, a, v);
        }
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            writeln!(f, "{:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Smith normal form `U * A * V = S` with `S` diagonal, diagonal entries
/// non-negative and each dividing the next. The inverse transforms are
/// tracked alongside so callers can move vectors between bases without
/// inverting anything afterwards.
pub struct Smith {
    pub diag: Vec<Entry>,
    pub rank: usize,
    pub u: IntMat,
    pub u_inv: IntMat,
    pub v: IntMat,
    pub v_inv: IntMat,
}

pub fn smith(a: &IntMat) -> Smith {
    let (m, n) = (a.nrows(), a.ncols());
    let mut s = a.clone();
    let mut u = IntMat::identity(m);
    let mut u_inv = IntMat::identity(m);
    let mut v = IntMat::identity(n);
    let mut v_inv = IntMat::identity(n);

    // row op on s: also applied to u, undone on u_inv (column side)
    macro_rules! row_add {
        ($a:expr, $b:expr, $c:expr) => {{
            s.add_row($a, $b, $c);
            u.add_row($a, $b, $c);
            u_inv.add_col($b, $a, -$c);
        }};
    }
    macro_rules! col_add {
        ($a:expr, $b:expr, $c:expr) => {{
            s.add_col($a, $b, $c);
            v.add_col($a, $b, $c);
            v_inv.add_row($b, $a, -$c);
        }};
    }

    let dim = m.min(n);
    let mut k = 0;
    while k < dim {
        // Deterministic pivot: smallest |value|, ties by (row, col).
        let mut pivot: Option<(usize, usize, Entry)> = None;
        for i in k..m {
            for j in k..n {
                let val = s.get(i, j).abs();
                if val != 0 && pivot.is_none_or(|(_, _, p)| val < p) {
                    pivot = Some((i, j, val));
                }
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        s.swap_rows(k, pi);
        u.swap_rows(k, pi);
        u_inv.swap_cols(k, pi);
        s.swap_cols(k, pj);
        v.swap_cols(k, pj);
        v_inv.swap_rows(k, pj);

        // Clear row and column k; repeat because clearing one can refill the other.
        loop {
            let mut dirty = false;
            for i in (k + 1)..m {
                let q = s.get(i, k).div_euclid(s.get(k, k));
                if q != 0 {
                    row_add!(i, k, -q);
                }
                if s.get(i, k) != 0 {
                    // remainder smaller than pivot: swap it up and restart
                    s.swap_rows(k, i);
                    u.swap_rows(k, i);
                    u_inv.swap_cols(k, i);
                    dirty = true;
                }
            }
            for j in (k + 1)..n {
                let q = s.get(k, j).div_euclid(s.get(k, k));
                if q != 0 {
                    col_add!(j, k, -q);
                }
                if s.get(k, j) != 0 {
                    s.swap_cols(k, j);
                    v.swap_cols(k, j);
                    v_inv.swap_rows(k, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }

        // Divisibility: every remaining entry must be divisible by the pivot.
        let p = s.get(k, k);
        let mut offender = None;
        'scan: for i in (k + 1)..m {
            for j in (k + 1)..n {
                if s.get(i, j) % p != 0 {
                    offender = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = offender {
            row_add!(k, i, 1);
            continue; // redo this k with the new row folded in
        }

        if s.get(k, k) < 0 {
            s.negate_row(k);
            u.negate_row(k);
            u_inv.negate_col(k);
        }
        k += 1;
    }

    let mut diag: Vec<Entry> = (0..dim).map(|i| s.get(i, i)).collect();
    let rank = diag.iter().filter(|&&d| d != 0).count();
    diag.truncate(dim);

    debug_assert!(diag.windows(2).all(|w| w[1] == 0 || (w[0] != 0 && w[1] % w[0] == 0)));
    debug_assert_eq!(u.mul(a).mul(&v), {
        let mut chk = IntMat::zeros(m, n);
        for (i, &d) in diag.iter().enumerate() {
            chk.set(i, i, d);
        }
        chk
    });
    debug_assert_eq!(u.mul(&u_inv), IntMat::identity(m));
    debug_assert_eq!(v.mul(&v_inv), IntMat::identity(n));

    Smith { diag, rank, u, u_inv, v, v_inv }
}

/// Basis of the integer kernel lattice of `a`, as columns of `V` past the
/// rank. The result is saturated: every integer kernel vector is an
/// integer combination of the basis.
pub fn kernel_basis(a: &IntMat) -> Vec<Vec<Entry>> {
    let sm = smith(a);
    (sm.rank..a.ncols()).map(|j| sm.v.col(j)).collect()
}

/// Row-style Hermite normal form of a lattice given by generator rows:
/// echelon over Z with positive pivots, entries above each pivot reduced
/// into `[0, pivot)`. Zero rows are dropped. Canonical for a fixed row
/// span, which makes lattice bases byte-stable.
#[allow(clippy::needless_range_loop)] // row ops on two rows of one matrix
pub fn hermite_rows(rows: Vec<Vec<Entry>>) -> Vec<Vec<Entry>> {
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].len();
    let mut m = rows;
    let mut pivot_row = 0;
    for col in 0..ncols {
        // Euclidean elimination below pivot_row in this column.
        loop {
            let mut best: Option<(usize, Entry)> = None;
            for (i, row) in m.iter().enumerate().skip(pivot_row) {
                let v = row[col].abs();
                if v != 0 && best.is_none_or(|(_, b)| v < b) {
                    best = Some((i, v));
                }
            }
            let Some((bi, _)) = best else { break };
            m.swap(pivot_row, bi);
            let mut any_left = false;
            let pivot_val = m[pivot_row][col];
            for i in (pivot_row + 1)..m.len() {
                let q = m[i][col].div_euclid(pivot_val);
                if q != 0 {
                    for j in 0..ncols {
                        m[i][j] -= q * m[pivot_row][j];
                    }
                }
                if m[i][col] != 0 {
                    any_left = true;
                }
            }
            if !any_left {
                break;
            }
        }
        if m[pivot_row][col] != 0 {
            if m[pivot_row][col] < 0 {
                for j in 0..ncols {
                    m[pivot_row][j] = -m[pivot_row][j];
                }
            }
            // reduce entries above the pivot into [0, pivot)
            let pv = m[pivot_row][col];
            for i in 0..pivot_row {
                let q = m[i][col].div_euclid(pv);
                if q != 0 {
                    for j in 0..ncols {
                        m[i][j] -= q * m[pivot_row][j];
                    }
                }
            }
            pivot_row += 1;
            if pivot_row == m.len() {
                break;
            }
        }
    }
    m.truncate(pivot_row);
    m
}

/// Solve `x^T * B = v` over Z for a lattice basis given as rows of `b`.
/// Returns `None` when `v` is not in the row lattice.
pub fn solve_in_row_lattice(b: &[Vec<Entry>], v: &[Entry]) -> Option<Vec<Entry>> {
    if b.is_empty() {
        return if v.iter().all(|&x| x == 0) { Some(vec![]) } else { None };
    }
    let k = b.len();
    let bm = IntMat::from_rows(b.to_vec());
    // x^T B = v  <=>  B^T x = v^T
    let bt = bm.transpose();
    let sm = smith(&bt);
    // B^T x = v  =>  S (V^{-1} x) = U v ; solve componentwise.
    let uv = sm.u.mul_vec(v);
    let mut y = vec![0; k];
    for (i, &item) in uv.iter().enumerate() {
        if i < sm.diag.len() && sm.diag[i] != 0 {
            if item % sm.diag[i] != 0 {
                return None;
            }
            y[i] = item / sm.diag[i];
        } else if item != 0 {
            return None;
        }
    }
    Some(sm.v.mul_vec(&y))
}

/// Dense GF(2) matrix with one `Vec<u64>` chunk row per matrix row.
#[derive(Clone)]
pub struct Gf2Mat {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl Gf2Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        Gf2Mat { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = i * self.words + j / 64;
        if v {
            self.data[w] |= 1 << (j % 64);
        } else {
            self.data[w] &= !(1 << (j % 64));
        }
    }

    fn xor_row(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for w in 0..self.words {
            self.data[d + w] ^= self.data[s + w];
        }
    }

    pub fn row_vec(&self, i: usize) -> Vec<bool> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    /// Row echelon reduction in place; returns pivot columns.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else { continue };
            if p != r {
                let (a, b) = (r * self.words, p * self.words);
                for w in 0..self.words {
                    self.data.swap(a + w, b + w);
                }
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Kernel basis (as column vectors of length `cols`), deterministic:
    /// one basis vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut red = self.clone();
        let pivots = red.reduce();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vec = vec![false; self.cols];
            vec[free] = true;
            for (r, &p) in pivots.iter().enumerate() {
                if red.get(r, free) {
                    vec[p] = true;
                }
            }
            basis.push(vec);
        }
        basis
    }
}
