//! Homology of a filtered complex via integer normal forms.
//!
//! Over Z: a Smith decomposition of the differential gives a saturated
//! kernel lattice; expressing the image inside that lattice and taking a
//! second Smith form yields free rank, invariant factors and an explicit
//! cycle basis. Over Z/2 the same shape runs through GF(2) elimination.
//! Bases are deterministic given the generator order.

use crate::linalg::{smith, Gf2Mat, IntMat};

use super::complex::{Chain, CoeffRing};

/// Presentation of a homology group: free rank, invariant factors (> 1,
/// each dividing the next), and one cycle per homology generator — the
/// free generators first, then one per torsion factor, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyPresentation {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
    pub basis_map: Vec<Chain>,
}

/// Where a cycle's class sits in homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassStatus {
    Zero,
    Primitive,
    Divisible(i64),
    Torsion,
}

impl std::fmt::Display for ClassStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassStatus::Zero => write!(f, "ZERO"),
            ClassStatus::Primitive => write!(f, "PRIMITIVE"),
            ClassStatus::Divisible(k) => write!(f, "DIVISIBLE({k})"),
            ClassStatus::Torsion => write!(f, "TORSION"),
        }
    }
}

/// Reusable homology context: build once per complex, then ask for the
/// presentation or classify cycles in it.
pub enum HomologyEngine {
    Integral(ZEngine),
    ModTwo(F2Engine),
}

pub struct ZEngine {
    n: usize,
    kernel_dim: usize,
    first_rank: usize,
    v_inv: IntMat,
    /// columns: homology-adapted kernel basis K' = K * U2^{-1}
    adapted: IntMat,
    u2: IntMat,
    /// invariant factors of the image inside the kernel (length kernel_dim,
    /// zeros past the image rank)
    orders: Vec<i128>,
    image_rank: usize,
}

pub struct F2Engine {
    n: usize,
    /// echelon kernel basis: one vector per free column of D
    kernel: Vec<Vec<bool>>,
    /// free-column positions (coordinates of the kernel parametrization)
    free_cols: Vec<usize>,
    /// reduced image matrix in kernel coordinates, with its pivot columns
    image_rows: Vec<Vec<bool>>,
    image_pivots: Vec<usize>,
}

impl HomologyEngine {
    pub fn new(d: &IntMat, ring: CoeffRing) -> Self {
        match ring {
            CoeffRing::Z => HomologyEngine::Integral(ZEngine::new(d)),
            CoeffRing::Z2 => HomologyEngine::ModTwo(F2Engine::new(d)),
        }
    }

    pub fn presentation(&self) -> HomologyPresentation {
        match self {
            HomologyEngine::Integral(e) => e.presentation(),
            HomologyEngine::ModTwo(e) => e.presentation(),
        }
    }

    /// Classify the homology class of a cycle. Panics if the chain is not
    /// a cycle; callers validate first.
    pub fn classify(&self, cycle: &[i64]) -> ClassStatus {
        match self {
            HomologyEngine::Integral(e) => e.classify(cycle),
            HomologyEngine::ModTwo(e) => e.classify(cycle),
        }
    }

    /// Canonical representative of a cycle's class: the combination of
    /// homology basis chains with the cycle's class coordinates (torsion
    /// coordinates reduced). Homologous cycles reduce to the same chain.
    pub fn reduce_cycle(&self, cycle: &[i64]) -> Chain {
        match self {
            HomologyEngine::Integral(e) => e.reduce_cycle(cycle),
            HomologyEngine::ModTwo(e) => e.reduce_cycle(cycle),
        }
    }
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

impl ZEngine {
    fn new(d: &IntMat) -> Self {
        let n = d.ncols();
        let sm1 = smith(d);
        let r = sm1.rank;
        let k = n - r;

        // Kernel coordinates of the image: columns of D are cycles, so
        // V^{-1} * D is supported on the kernel rows r..n.
        let vinv_d = sm1.v_inv.mul(d);
        debug_assert!((0..r).all(|i| (0..n).all(|j| vinv_d.get(i, j) == 0)));
        let mut x = IntMat::zeros(k, n);
        for i in 0..k {
            for j in 0..n {
                x.set(i, j, vinv_d.get(r + i, j));
            }
        }
        let sm2 = smith(&x);

        // K' = K * U2^{-1}: columns of V past the rank, recombined.
        let mut kernel = IntMat::zeros(n, k);
        for c in 0..k {
            for row in 0..n {
                kernel.set(row, c, sm1.v.get(row, r + c));
            }
        }
        let adapted = kernel.mul(&sm2.u_inv);

        let mut orders = vec![0i128; k];
        for (i, &d2) in sm2.diag.iter().enumerate() {
            orders[i] = d2;
        }

        ZEngine {
            n,
            kernel_dim: k,
            first_rank: r,
            v_inv: sm1.v_inv,
            adapted,
            u2: sm2.u,
            orders,
            image_rank: sm2.rank,
        }
    }

    fn presentation(&self) -> HomologyPresentation {
        let mut basis_map = Vec::new();
        let mut torsion = Vec::new();
        // free generators: adapted columns past the image rank
        for c in self.image_rank..self.kernel_dim {
            basis_map.push(self.column_chain(c));
        }
        for c in 0..self.image_rank {
            if self.orders[c] > 1 {
                torsion.push(self.orders[c] as i64);
                basis_map.push(self.column_chain(c));
            }
        }
        // reorder torsion chains to line up with the torsion list order
        // (they already are: orders ascend by divisibility)
        HomologyPresentation {
            free_rank: self.kernel_dim - self.image_rank,
            torsion,
            basis_map,
        }
    }

    fn column_chain(&self, c: usize) -> Chain {
        Chain((0..self.n).map(|row| self.adapted.get(row, c) as i64).collect()).canonicalized()
    }

    fn class_coords(&self, cycle: &[i64]) -> Vec<i128> {
        assert_eq!(cycle.len(), self.n);
        let w: Vec<i128> = cycle.iter().map(|&c| c as i128).collect();
        let y = self.v_inv.mul_vec(&w);
        assert!(
            y[..self.first_rank].iter().all(|&c| c == 0),
            "chain is not a cycle"
        );
        self.u2.mul_vec(&y[self.first_rank..])
    }

    #[allow(clippy::needless_range_loop)] // walks coords and orders together
    fn reduce_cycle(&self, cycle: &[i64]) -> Chain {
        let coords = self.class_coords(cycle);
        let mut out = vec![0i64; self.n];
        for i in 0..self.kernel_dim {
            let c = if i < self.image_rank {
                if self.orders[i] <= 1 {
                    0
                } else {
                    coords[i].rem_euclid(self.orders[i])
                }
            } else {
                coords[i]
            };
            if c != 0 {
                for (row, slot) in out.iter_mut().enumerate() {
                    *slot += (c * self.adapted.get(row, i)) as i64;
                }
            }
        }
        Chain(out)
    }

    fn classify(&self, cycle: &[i64]) -> ClassStatus {
        let coords = self.class_coords(cycle);

        let free: Vec<i128> = (self.image_rank..self.kernel_dim).map(|i| coords[i]).collect();
        let torsion_zero = (0..self.image_rank)
            .all(|i| self.orders[i] <= 1 || coords[i].rem_euclid(self.orders[i]) == 0);

        if free.iter().all(|&c| c == 0) {
            if torsion_zero {
                ClassStatus::Zero
            } else {
                ClassStatus::Torsion
            }
        } else {
            let g = free.iter().fold(0i128, |acc, &c| gcd(acc, c));
            if g == 1 {
                ClassStatus::Primitive
            } else {
                ClassStatus::Divisible(g as i64)
            }
        }
    }
}

impl F2Engine {
    fn new(d: &IntMat) -> Self {
        let n = d.ncols();
        let mut m = Gf2Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, d.get(i, j).rem_euclid(2) == 1);
            }
        }
        let kernel = m.kernel_basis();
        let pivots = m.clone().reduce();
        let free_cols: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        debug_assert_eq!(kernel.len(), free_cols.len());

        // image columns in kernel coordinates: a kernel vector's coordinates
        // are its values at the free columns
        let k = kernel.len();
        let mut img = Gf2Mat::zeros(n, k.max(1));
        for col in 0..n {
            for (ci, &fc) in free_cols.iter().enumerate() {
                img.set(col, ci, d.get(fc, col).rem_euclid(2) == 1);
            }
        }
        let image_pivots = img.reduce();
        let image_rows: Vec<Vec<bool>> =
            (0..image_pivots.len()).map(|r| img.row_vec(r)).collect();

        F2Engine { n, kernel, free_cols, image_rows, image_pivots }
    }

    fn presentation(&self) -> HomologyPresentation {
        let in_image_pivots: Vec<bool> = {
            let mut v = vec![false; self.kernel.len()];
            for &p in &self.image_pivots {
                v[p] = true;
            }
            v
        };
        let mut basis_map = Vec::new();
        for (ci, kv) in self.kernel.iter().enumerate() {
            if !in_image_pivots[ci] {
                basis_map.push(Chain(kv.iter().map(|&b| i64::from(b)).collect()));
            }
        }
        HomologyPresentation {
            free_rank: self.kernel.len() - self.image_pivots.len(),
            torsion: Vec::new(),
            basis_map,
        }
    }

    fn reduce_coords(&self, coords: &mut [bool]) {
        for (row, &p) in self.image_rows.iter().zip(&self.image_pivots) {
            if coords[p] {
                for (c, &r) in coords.iter_mut().zip(row) {
                    *c ^= r;
                }
            }
        }
    }

    fn classify(&self, cycle: &[i64]) -> ClassStatus {
        assert_eq!(cycle.len(), self.n);
        let mut coords: Vec<bool> = self
            .free_cols
            .iter()
            .map(|&fc| cycle[fc].rem_euclid(2) == 1)
            .collect();
        self.reduce_coords(&mut coords);
        if coords.iter().all(|&b| !b) {
            ClassStatus::Zero
        } else {
            ClassStatus::Primitive
        }
    }

    fn reduce_cycle(&self, cycle: &[i64]) -> Chain {
        assert_eq!(cycle.len(), self.n);
        let mut coords: Vec<bool> = self
            .free_cols
            .iter()
            .map(|&fc| cycle[fc].rem_euclid(2) == 1)
            .collect();
        self.reduce_coords(&mut coords);
        let mut out = vec![0i64; self.n];
        for (ci, &on) in coords.iter().enumerate() {
            if on {
                for (slot, &kv) in out.iter_mut().zip(&self.kernel[ci]) {
                    *slot = (*slot + i64::from(kv)) % 2;
                }
            }
        }
        Chain(out)
    }
}
