//! Cartan datum of affine type A^(2)_2l: Cartan matrix, symmetrizers,
//! pairings, Weyl reflections and the null root.
//!
//! Weights are restricted to the level-one family `L0 - sum c_i a_i`; that is
//! the only family the rest of the crate ever touches, and it is closed under
//! the simple reflections with integral coefficients.

use serde::Serialize;

/// The affine Cartan datum of type A^(2)_2l for a fixed rank `l >= 1`.
#[derive(Debug, Clone)]
pub struct CartanDatum {
    ell: usize,
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanDatum {
    /// Builds the datum for rank `ell >= 1`.
    ///
    /// For `ell >= 2` the Cartan matrix has diagonal 2, entries -2 at (0,1)
    /// and (l-1,l), and -1 on the remaining sub/super-diagonal positions.
    /// For `ell = 1` it is the 2x2 matrix ((2,-4),(-1,2)).
    pub fn new(ell: usize) -> Self {
        assert!(ell >= 1, "rank must be at least 1");
        let n = ell + 1;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        if ell == 1 {
            a[0][1] = -4;
            a[1][0] = -1;
        } else {
            a[0][1] = -2;
            a[1][0] = -1;
            for i in 1..ell {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[ell - 1][ell] = -2;
            a[ell][ell - 1] = -1;
        }
        let mut d = vec![2i64; n];
        d[0] = 1;
        d[ell] = 4;
        CartanDatum { ell, a, d }
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// The period `h = 2l + 1` of the residue pattern.
    pub fn h(&self) -> u32 {
        2 * self.ell as u32 + 1
    }

    /// Cartan matrix entry `a_{ij}`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    /// Symmetrizer `d_i`, with `(d_0, ..., d_l) = (1, 2, ..., 2, 4)`.
    pub fn d(&self, i: usize) -> i64 {
        self.d[i]
    }

    /// `<h_i, w>` for a level-one weight `w = L0 - sum c_j a_j`.
    pub fn pairing_h(&self, i: usize, w: &Weight) -> i64 {
        assert!(i <= self.ell, "index {i} out of range for l = {}", self.ell);
        let delta_i0 = if i == 0 { 1 } else { 0 };
        delta_i0 - (0..=self.ell).map(|j| w.c[j] * self.a[i][j]).sum::<i64>()
    }

    /// `<d, w>` for the scaling element `d`; equals `-c_0` at level one.
    pub fn pairing_d(&self, w: &Weight) -> i64 {
        -w.c[0]
    }

    /// The symmetric bilinear form `(x|y) = sum x_i y_j d_i a_{ij}` on the
    /// root lattice.
    pub fn bilinear(&self, x: &RootElement, y: &RootElement) -> i64 {
        let mut acc = 0;
        for i in 0..=self.ell {
            for j in 0..=self.ell {
                acc += x.k[i] * y.k[j] * self.d[i] * self.a[i][j];
            }
        }
        acc
    }

    /// Simple reflection `r_i(w) = w - <h_i, w> a_i`.
    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let p = self.pairing_h(i, w);
        let mut c = w.c.clone();
        c[i] += p;
        Weight { c }
    }

    /// The null root `delta = 2a_0 + ... + 2a_{l-1} + a_l`.
    pub fn null_root(&self) -> RootElement {
        null_root(self.ell)
    }
}

/// The null root of rank `ell`, with coefficient vector `(2, ..., 2, 1)`.
pub fn null_root(ell: usize) -> RootElement {
    let mut k = vec![2i64; ell + 1];
    k[ell] = 1;
    RootElement { k }
}

/// An element of the root lattice, as coefficients of `(a_0, ..., a_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootElement {
    k: Vec<i64>,
}

impl RootElement {
    pub fn new(k: Vec<i64>) -> Self {
        assert!(!k.is_empty());
        RootElement { k }
    }

    pub fn zero(ell: usize) -> Self {
        RootElement { k: vec![0; ell + 1] }
    }

    /// The simple root `a_i`.
    pub fn alpha(ell: usize, i: usize) -> Self {
        assert!(i <= ell);
        let mut k = vec![0; ell + 1];
        k[i] = 1;
        RootElement { k }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.k
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.k[i]
    }

    /// Height `|beta| = sum k_i`.
    pub fn height(&self) -> i64 {
        self.k.iter().sum()
    }

    /// Whether all coefficients are non-negative, i.e. the element lies in
    /// the positive cone `Q^+`.
    pub fn is_positive_cone(&self) -> bool {
        self.k.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &RootElement) -> RootElement {
        let k = self.k.iter().zip(&other.k).map(|(a, b)| a + b).collect();
        RootElement { k }
    }

    pub fn sub(&self, other: &RootElement) -> RootElement {
        let k = self.k.iter().zip(&other.k).map(|(a, b)| a - b).collect();
        RootElement { k }
    }

    pub fn scale(&self, s: i64) -> RootElement {
        RootElement { k: self.k.iter().map(|c| c * s).collect() }
    }
}

impl std::fmt::Display for RootElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.k.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A level-one weight `L0 - sum c_i a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Weight {
    c: Vec<i64>,
}

impl Weight {
    /// The fundamental weight `L0` itself.
    pub fn lambda0(ell: usize) -> Self {
        Weight { c: vec![0; ell + 1] }
    }

    /// `L0 - beta`.
    pub fn from_beta(beta: &RootElement) -> Self {
        Weight { c: beta.coeffs().to_vec() }
    }

    /// The root-lattice part: returns `beta` with `self = L0 - beta`.
    pub fn beta(&self) -> RootElement {
        RootElement { k: self.c.clone() }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.c
    }
}

impl std::fmt::Display for Weight {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L0")?;
        for (i, c) in self.c.iter().enumerate() {
            if *c != 0 {
                write!(f, " - {c}*a{i}")?;
            }
        }
        Ok(())
    }
}
