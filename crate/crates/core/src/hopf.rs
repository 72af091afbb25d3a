//! Coinvolutive Hopf-von Neumann algebras in block form.
//!
//! The algebra is `Mat(d_0) + ... + Mat(d_r)` in the matrix-unit basis. An
//! element of `M (x) M` is stored as its `n x n` coefficient matrix `X` with
//! `X[a][b]` the coefficient of `e_a (x) e_b`; `Delta` is the `n^2 x n`
//! matrix whose column `j` is `Delta(e_j)` flattened row-major.

use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{block_offsets, verify_star_algebra, FinStarAlgebra, StarAlgebraReport};
use crate::error::{Error, Result};
use crate::json::{dense, sparse, Entry, F17};
use crate::linalg::{
    hermitian_eig, null_space_scaled, random_hermitian, svd, CMatrix, C64, RANK_RTOL, STRUCT_TOL, ZERO,
};

#[derive(Debug)]
pub struct HopfVNAlgebra {
    algebra: FinStarAlgebra,
    blocks: Vec<usize>,
    delta: CMatrix,
    kappa: CMatrix,
    label: String,
    star_compatible: bool,
    commutant: OnceLock<CMatrix>,
}

impl Clone for HopfVNAlgebra {
    fn clone(&self) -> Self {
        HopfVNAlgebra {
            algebra: self.algebra.clone(),
            blocks: self.blocks.clone(),
            delta: self.delta.clone(),
            kappa: self.kappa.clone(),
            label: self.label.clone(),
            star_compatible: self.star_compatible,
            commutant: OnceLock::new(),
        }
    }
}

impl PartialEq for HopfVNAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.algebra == other.algebra
            && self.blocks == other.blocks
            && self.delta == other.delta
            && self.kappa == other.kappa
            && self.label == other.label
    }
}

impl HopfVNAlgebra {
    /// `star = None` selects the standard involution `E_pq* = E_qp`.
    pub fn new(
        blocks: Vec<usize>,
        star: Option<CMatrix>,
        delta: CMatrix,
        kappa: CMatrix,
        label: impl Into<String>,
    ) -> Result<Self> {
        let standard = FinStarAlgebra::blocks(&blocks);
        let n = standard.dim();
        if delta.rows() != n * n || delta.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "Delta is {}x{}, expected {}x{n}",
                delta.rows(),
                delta.cols(),
                n * n
            )));
        }
        if kappa.rows() != n || kappa.cols() != n {
            return Err(Error::DimensionMismatch("kappa must be n x n".into()));
        }
        if !delta.is_finite() || !kappa.is_finite() {
            return Err(Error::NonFinite("Delta or kappa"));
        }
        let (algebra, star_compatible) = match star {
            None => (standard, true),
            Some(s) => {
                let compatible = (&s - standard.star_matrix()).max_abs() < STRUCT_TOL;
                (standard.with_star(s)?, compatible)
            }
        };
        Ok(HopfVNAlgebra {
            algebra,
            blocks,
            delta,
            kappa,
            label: label.into(),
            star_compatible,
            commutant: OnceLock::new(),
        })
    }

    pub fn algebra(&self) -> &FinStarAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn blocks(&self) -> &[usize] {
        &self.blocks
    }

    /// Sorted block dimensions.
    pub fn signature(&self) -> Vec<usize> {
        let mut s = self.blocks.clone();
        s.sort_unstable();
        s
    }

    pub fn delta(&self) -> &CMatrix {
        &self.delta
    }

    pub fn kappa(&self) -> &CMatrix {
        &self.kappa
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Whether the block embedding on `H` is a *-representation. It is
    /// faithful in every case.
    pub fn star_compatible(&self) -> bool {
        self.star_compatible
    }

    /// `dim H = sum d_k`.
    pub fn hilbert_dim(&self) -> usize {
        self.blocks.iter().sum()
    }

    pub fn is_commutative(&self) -> bool {
        self.blocks.iter().all(|&d| d == 1)
    }

    pub fn is_cocommutative(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|j| {
            let x = self.delta_of_basis(j);
            (&x - &x.transpose()).max_abs() < tol
        })
    }

    pub fn unit(&self) -> Vec<C64> {
        self.algebra.unit().expect("block algebras are unital").to_vec()
    }

    /// `Delta(e_j)` as an `n x n` coefficient matrix.
    pub fn delta_of_basis(&self, j: usize) -> CMatrix {
        let n = self.dim();
        CMatrix::from_fn(n, n, |a, b| self.delta[(a * n + b, j)])
    }

    pub fn delta_of(&self, x: &[C64]) -> CMatrix {
        let n = self.dim();
        let v = self.delta.mul_vec(x);
        CMatrix::from_fn(n, n, |a, b| v[a * n + b])
    }

    pub fn kappa_of(&self, x: &[C64]) -> Vec<C64> {
        self.kappa.mul_vec(x)
    }

    pub fn mul(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        self.algebra.mul(x, y)
    }

    pub fn star(&self, x: &[C64]) -> Vec<C64> {
        self.algebra.star(x)
    }

    /// Block-diagonal matrix of `x` on `H`.
    pub fn concrete(&self, x: &[C64]) -> CMatrix {
        let h = self.hilbert_dim();
        let mut m = CMatrix::zeros(h, h);
        let mut off = 0;
        let mut idx = 0;
        for &d in &self.blocks {
            for p in 0..d {
                for q in 0..d {
                    m[(off + p, off + q)] = x[idx];
                    idx += 1;
                }
            }
            off += d;
        }
        m
    }

    /// Coordinates of the block-diagonal part of an operator on `H`, and the
    /// largest entry outside the blocks.
    pub fn from_concrete(&self, m: &CMatrix) -> (Vec<C64>, f64) {
        let mut coords = Vec::with_capacity(self.dim());
        let mut off = 0;
        let mut outside: f64 = 0.0;
        let mut starts = Vec::with_capacity(self.blocks.len());
        for &d in &self.blocks {
            starts.push((off, d));
            for p in 0..d {
                for q in 0..d {
                    coords.push(m[(off + p, off + q)]);
                }
            }
            off += d;
        }
        let block_of = |i: usize| starts.iter().position(|&(o, d)| i >= o && i < o + d);
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if block_of(i) != block_of(j) {
                    outside = outside.max(m[(i, j)].norm());
                }
            }
        }
        (coords, outside)
    }

    /// Basis (as flattened `h x h` matrices in columns) of the commutant of
    /// the block embedding. Computed once and cached.
    ///
    /// The linear system `[X, rho(e_i)] = 0` is solved inside the commutant
    /// of one generic Hermitian element of the image, which contains `M'`.
    pub fn commutant(&self) -> &CMatrix {
        self.commutant.get_or_init(|| self.compute_commutant().expect("commutant of a block algebra"))
    }

    fn compute_commutant(&self) -> Result<CMatrix> {
        let h = self.hilbert_dim();
        let n = self.dim();
        let images: Vec<CMatrix> = (0..n).map(|i| self.concrete(&self.algebra.basis_vector(i))).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0);
        for _ in 0..10 {
            // a random Hermitian element of the image, block by block
            let mut y = CMatrix::zeros(h, h);
            let mut off = 0;
            for &d in &self.blocks {
                y.set_block(off, off, &random_hermitian(d, &mut rng));
                off += d;
            }
            let e = hermitian_eig(&y, STRUCT_TOL)?;
            if e.values.windows(2).any(|w| w[1] - w[0] < 1e-6) {
                continue;
            }
            let projectors: Vec<CMatrix> = (0..h)
                .map(|k| {
                    let v = e.vectors.column(k);
                    CMatrix::from_fn(h, h, |i, j| v[i] * v[j].conj())
                })
                .collect();
            let mut rows = Vec::with_capacity(n);
            for a in &images {
                let cols: Vec<Vec<C64>> = projectors.iter().map(|p| (&(p * a) - &(a * p)).data().to_vec()).collect();
                rows.push(CMatrix::from_columns(h * h, &cols));
            }
            let ns = null_space_scaled(&CMatrix::vstack(&rows), RANK_RTOL, 1.0)?;
            let cols: Vec<Vec<C64>> = ns
                .columns()
                .iter()
                .map(|c| {
                    let mut x = CMatrix::zeros(h, h);
                    for (k, p) in projectors.iter().enumerate() {
                        x = &x + &p.scale(c[k]);
                    }
                    x.data().to_vec()
                })
                .collect();
            return Ok(CMatrix::from_columns(h * h, &cols));
        }
        Err(Error::SplitFailure("no generic element for the commutant".into()))
    }

    /// Product in `M (x) M` of coefficient matrices, computed blockwise.
    pub fn tensor_mul(&self, x: &CMatrix, y: &CMatrix) -> CMatrix {
        let xb = self.to_tensor_blocks(x);
        let yb = self.to_tensor_blocks(y);
        let prod: Vec<CMatrix> = xb.iter().zip(&yb).map(|(a, b)| a * b).collect();
        self.assemble_tensor_blocks(&prod)
    }

    /// Involution on `M (x) M`: `X -> S conj(X) S^T`.
    pub fn tensor_star(&self, x: &CMatrix) -> CMatrix {
        let s = self.algebra.star_matrix();
        &(s * &x.conj()) * &s.transpose()
    }

    fn to_tensor_blocks(&self, x: &CMatrix) -> Vec<CMatrix> {
        let off = block_offsets(&self.blocks);
        let mut out = Vec::with_capacity(self.blocks.len() * self.blocks.len());
        for (k, &dk) in self.blocks.iter().enumerate() {
            for (l, &dl) in self.blocks.iter().enumerate() {
                // kron(E_pq, E_rs) sits at row p*dl + r, column q*dl + s
                let mut m = CMatrix::zeros(dk * dl, dk * dl);
                for p in 0..dk {
                    for q in 0..dk {
                        let a = off[k] + p * dk + q;
                        for r in 0..dl {
                            for s in 0..dl {
                                m[(p * dl + r, q * dl + s)] = x[(a, off[l] + r * dl + s)];
                            }
                        }
                    }
                }
                out.push(m);
            }
        }
        out
    }

    fn assemble_tensor_blocks(&self, blocks: &[CMatrix]) -> CMatrix {
        let off = block_offsets(&self.blocks);
        let n = self.dim();
        let nb = self.blocks.len();
        let mut x = CMatrix::zeros(n, n);
        for (k, &dk) in self.blocks.iter().enumerate() {
            for (l, &dl) in self.blocks.iter().enumerate() {
                let m = &blocks[k * nb + l];
                for p in 0..dk {
                    for q in 0..dk {
                        let a = off[k] + p * dk + q;
                        for r in 0..dl {
                            for s in 0..dl {
                                x[(a, off[l] + r * dl + s)] = m[(p * dl + r, q * dl + s)];
                            }
                        }
                    }
                }
            }
        }
        x
    }

    pub fn to_json(&self) -> HopfJson {
        let n = self.dim();
        let mut structure = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = self.algebra.c(i, j, k);
                    if c.re.to_bits() != 0 || c.im.to_bits() != 0 {
                        structure.push(StructureEntry(i, j, k, F17(c.re), F17(c.im)));
                    }
                }
            }
        }
        HopfJson {
            schema_version: 1,
            label: self.label.clone(),
            blocks: self.blocks.clone(),
            basis_labels: self.algebra.labels().to_vec(),
            structure,
            unit: self.unit().iter().map(|&z| crate::json::complex_pair(z)).collect(),
            star: sparse(self.algebra.star_matrix()),
            delta: sparse(&self.delta),
            kappa: sparse(&self.kappa),
        }
    }

    pub fn from_json(doc: &HopfJson) -> Result<Self> {
        let bad = |m: &str| Error::BadSpec(m.to_string());
        let template = FinStarAlgebra::blocks(&doc.blocks);
        let n = template.dim();
        if doc.basis_labels.len() != n || doc.unit.len() != n {
            return Err(bad("basis size does not match the block signature"));
        }
        let mut structure = vec![ZERO; n * n * n];
        for StructureEntry(i, j, k, re, im) in &doc.structure {
            if *i >= n || *j >= n || *k >= n {
                return Err(bad("structure index out of range"));
            }
            structure[(i * n + j) * n + k] = C64::new(re.0, im.0);
        }
        let unit: Vec<C64> = doc.unit.iter().map(|[re, im]| C64::new(re.0, im.0)).collect();
        let star = dense(n, n, &doc.star).ok_or_else(|| bad("star entry out of range"))?;
        let given = FinStarAlgebra::new(doc.basis_labels.clone(), structure, Some(unit), star.clone())?;
        if given.structure() != template.structure() || given.unit() != template.unit() {
            return Err(bad("structure is not the matrix-unit product of the block signature"));
        }
        let delta = dense(n * n, n, &doc.delta).ok_or_else(|| bad("Delta entry out of range"))?;
        let kappa = dense(n, n, &doc.kappa).ok_or_else(|| bad("kappa entry out of range"))?;
        let star = (star != *template.star_matrix()).then_some(star);
        HopfVNAlgebra::new(doc.blocks.clone(), star, delta, kappa, doc.label.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureEntry(pub usize, pub usize, pub usize, pub F17, pub F17);

/// JSON form of a `HopfVNAlgebra`; matrices are sparse `[row, col, re, im]`
/// lists.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HopfJson {
    pub schema_version: u32,
    pub label: String,
    pub blocks: Vec<usize>,
    pub basis_labels: Vec<String>,
    pub structure: Vec<StructureEntry>,
    pub unit: Vec<[F17; 2]>,
    pub star: Vec<Entry>,
    pub delta: Vec<Entry>,
    pub kappa: Vec<Entry>,
}

/// `theta(a (x) b) = b (x) a` on coefficient matrices.
pub fn flip_map(x: &CMatrix) -> CMatrix {
    x.transpose()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HopfReport {
    pub star_algebra: StarAlgebraReport,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub delta_multiplicative: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub delta_star: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub delta_unital: f64,
    pub delta_rank: usize,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub coassociativity: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_antimultiplicative: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_star: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_involutive: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub flip: f64,
    pub dim: usize,
}

impl HopfReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.star_algebra.max_residual(),
            self.delta_multiplicative,
            self.delta_star,
            self.delta_unital,
            self.coassociativity,
            self.kappa_antimultiplicative,
            self.kappa_star,
            self.kappa_involutive,
            self.flip,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }

    pub fn delta_injective(&self) -> bool {
        self.delta_rank == self.dim
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.delta_injective() && self.max_residual() < tol
    }
}

/// Residual per Hopf axiom.
pub fn verify_hopf(m: &HopfVNAlgebra) -> Result<HopfReport> {
    let n = m.dim();
    let a = m.algebra();
    let star_algebra = verify_star_algebra(a);
    let basis: Vec<Vec<C64>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let deltas: Vec<CMatrix> = (0..n).map(|j| m.delta_of_basis(j)).collect();

    let mut delta_multiplicative: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = m.delta_of(&a.mul(&basis[i], &basis[j]));
            let rhs = m.tensor_mul(&deltas[i], &deltas[j]);
            delta_multiplicative = delta_multiplicative.max((&lhs - &rhs).max_abs());
        }
    }

    let mut delta_star: f64 = 0.0;
    for i in 0..n {
        let lhs = m.delta_of(&a.star(&basis[i]));
        delta_star = delta_star.max((&lhs - &m.tensor_star(&deltas[i])).max_abs());
    }

    let u = m.unit();
    let one_one = CMatrix::from_fn(n, n, |p, q| u[p] * u[q]);
    let delta_unital = (&m.delta_of(&u) - &one_one).max_abs();

    let delta_rank = if n == 0 { 0 } else { svd(m.delta())?.rank(RANK_RTOL) };

    // (Delta (x) id) Delta e_j = D X and (id (x) Delta) Delta e_j = X D^T
    let mut coassociativity: f64 = 0.0;
    for x in &deltas {
        let left = m.delta() * x;
        let right = x * &m.delta().transpose();
        for p in 0..n {
            for q in 0..n {
                for r in 0..n {
                    let d = left[(p * n + q, r)] - right[(p, q * n + r)];
                    coassociativity = coassociativity.max(d.norm());
                }
            }
        }
    }

    let kappa_basis: Vec<Vec<C64>> = basis.iter().map(|e| m.kappa_of(e)).collect();
    let mut kappa_antimultiplicative: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = m.kappa_of(&a.mul(&basis[i], &basis[j]));
            let rhs = a.mul(&kappa_basis[j], &kappa_basis[i]);
            kappa_antimultiplicative = kappa_antimultiplicative.max(max_diff(&lhs, &rhs));
        }
    }
    let kappa_star =
        (0..n).map(|i| max_diff(&m.kappa_of(&a.star(&basis[i])), &a.star(&kappa_basis[i]))).fold(0.0, f64::max);
    let kappa_involutive = (&(m.kappa() * m.kappa()) - &CMatrix::identity(n)).max_abs();

    // (kappa (x) kappa) Delta e_i = theta Delta kappa e_i
    let k = m.kappa();
    let mut flip: f64 = 0.0;
    for i in 0..n {
        let lhs = &(k * &deltas[i]) * &k.transpose();
        let rhs = flip_map(&m.delta_of(&kappa_basis[i]));
        flip = flip.max((&lhs - &rhs).max_abs());
    }

    Ok(HopfReport {
        star_algebra,
        delta_multiplicative,
        delta_star,
        delta_unital,
        delta_rank,
        coassociativity,
        kappa_antimultiplicative,
        kappa_star,
        kappa_involutive,
        flip,
        dim: n,
    })
}

fn max_diff(x: &[C64], y: &[C64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// A linear map `phi: M -> N` given as a `dim N x dim M` matrix.
#[derive(Clone, Debug)]
pub struct HopfMorphism {
    pub phi: CMatrix,
}

impl HopfMorphism {
    pub fn new(source: &HopfVNAlgebra, target: &HopfVNAlgebra, phi: CMatrix) -> Result<Self> {
        if phi.rows() != target.dim() || phi.cols() != source.dim() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                phi.rows(),
                phi.cols(),
                target.dim(),
                source.dim()
            )));
        }
        Ok(HopfMorphism { phi })
    }

    pub fn identity(m: &HopfVNAlgebra) -> Self {
        HopfMorphism { phi: CMatrix::identity(m.dim()) }
    }

    /// `self` after `first`.
    pub fn after(&self, first: &HopfMorphism) -> HopfMorphism {
        HopfMorphism { phi: &self.phi * &first.phi }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MorphismReport {
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub multiplicative: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub star: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub delta_compatible: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_compatible: f64,
    /// Basis index of the worst `Delta`-compatibility residual.
    pub worst_delta_basis: Option<usize>,
}

impl MorphismReport {
    pub fn max_residual(&self) -> f64 {
        self.multiplicative.max(self.star).max(self.delta_compatible).max(self.kappa_compatible)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual() < tol
    }
}

pub fn verify_morphism(source: &HopfVNAlgebra, target: &HopfVNAlgebra, f: &HopfMorphism) -> MorphismReport {
    let n = source.dim();
    let a = source.algebra();
    let b = target.algebra();
    let phi = &f.phi;
    let basis: Vec<Vec<C64>> = (0..n).map(|i| a.basis_vector(i)).collect();
    let images: Vec<Vec<C64>> = basis.iter().map(|e| phi.mul_vec(e)).collect();

    let mut multiplicative: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.mul_vec(&a.mul(&basis[i], &basis[j]));
            multiplicative = multiplicative.max(max_diff(&lhs, &b.mul(&images[i], &images[j])));
        }
    }
    let star = (0..n).map(|i| max_diff(&phi.mul_vec(&a.star(&basis[i])), &b.star(&images[i]))).fold(0.0, f64::max);

    let mut delta_compatible: f64 = 0.0;
    let mut worst_delta_basis = None;
    for (i, img) in images.iter().enumerate() {
        let lhs = target.delta_of(img);
        let rhs = &(phi * &source.delta_of_basis(i)) * &phi.transpose();
        let r = (&lhs - &rhs).max_abs();
        if r > delta_compatible {
            delta_compatible = r;
            worst_delta_basis = Some(i);
        }
    }
    let kappa_compatible = (0..n)
        .map(|i| max_diff(&target.kappa_of(&images[i]), &phi.mul_vec(&source.kappa_of(&basis[i]))))
        .fold(0.0, f64::max);
    MorphismReport { multiplicative, star, delta_compatible, kappa_compatible, worst_delta_basis }
}
