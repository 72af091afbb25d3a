//! Dense complex linear algebra at desk scale.
//!
//! Everything here is written for matrices of dimension up to a few hundred:
//! a cyclic Jacobi eigensolver for Hermitian matrices, a one-sided (Hestenes)
//! Jacobi SVD used for ranks, null spaces and least squares, and the
//! Kronecker product under the index convention `(i, k) -> i * rows(B) + k`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};

pub type C64 = Complex64;

/// Default absolute tolerance for structural checks.
pub const STRUCT_TOL: f64 = 1e-9;
/// Default convergence tolerance for the Jacobi eigensolver.
pub const EIG_TOL: f64 = 1e-12;
/// Sweep budget for both Jacobi iterations.
pub const SWEEP_BUDGET: usize = 100;
/// Singular values below `RANK_RTOL * sigma_max` count as zero.
pub const RANK_RTOL: f64 = 1e-9;

pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };
pub const ONE: C64 = C64 { re: 1.0, im: 0.0 };

/// Row-major dense complex matrix.
#[derive(Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<C64>,
}

impl fmt::Debug for CMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix { rows, cols, data: vec![ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major entries, rejecting wrong lengths and
    /// non-finite values.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("matrix entries"));
        }
        Ok(CMatrix { rows, cols, data })
    }

    pub fn from_real(rows: usize, cols: usize, data: &[f64]) -> Result<Self> {
        Self::from_vec(rows, cols, data.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<C64>]) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, c) in columns.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for i in 0..rows {
                m[(i, j)] = c[i];
            }
        }
        m
    }

    pub fn diagonal(entries: &[C64]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, &z) in entries.iter().enumerate() {
            m[(i, i)] = z;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<C64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn columns(&self) -> Vec<Vec<C64>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[C64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn conj(&self) -> Self {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z.conj()).collect() }
    }

    pub fn scale(&self, c: C64) -> Self {
        CMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|z| z * c).collect() }
    }

    pub fn trace(&self) -> C64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry modulus (the max norm); zero for empty matrices.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, z| m.max(z.norm()))
    }

    pub fn frobenius(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum()).collect()
    }

    /// Sub-block `[r0, r0+nr) x [c0, c0+nc)`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, |i, j| self[(r0 + i, c0 + j)])
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &CMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)];
            }
        }
    }

    /// `max |A - A^dagger|`, or infinity for non-square input.
    pub fn hermitian_defect(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut d: f64 = 0.0;
        for i in 0..self.rows {
            for j in i..self.cols {
                d = d.max((self[(i, j)] - self[(j, i)].conj()).norm());
            }
        }
        d
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(blocks: &[CMatrix]) -> Self {
        let rows = blocks.first().map_or(0, |b| b.rows);
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(rows, cols);
        let mut c0 = 0;
        for b in blocks {
            debug_assert_eq!(b.rows, rows);
            m.set_block(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[CMatrix]) -> Self {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut m = Self::zeros(rows, cols);
        let mut r0 = 0;
        for b in blocks {
            debug_assert_eq!(b.cols, cols);
            m.set_block(r0, 0, b);
            r0 += b.rows;
        }
        m
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &CMatrix {
    type Output = CMatrix;
    fn mul(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let orow = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == ZERO {
                    continue;
                }
                let brow = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, b) in orow.iter_mut().zip(brow) {
                    *o += a * b;
                }
            }
        }
        out
    }
}

impl Add for &CMatrix {
    type Output = CMatrix;
    fn add(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &CMatrix {
    type Output = CMatrix;
    fn sub(self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

/// Kronecker product: `kron(A,B)[(i,k),(j,l)] = A[i,j] * B[k,l]` with the
/// row index `(i,k) -> i * rows(B) + k` (and likewise for columns).
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (br, bc) = (b.rows, b.cols);
    let mut out = CMatrix::zeros(a.rows * br, a.cols * bc);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a[(i, j)];
            if x == ZERO {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[(i * br + k, j * bc + l)] = x * b[(k, l)];
                }
            }
        }
    }
    out
}

/// `sum_i conj(u_i) v_i`.
pub fn cdot(u: &[C64], v: &[C64]) -> C64 {
    u.iter().zip(v).map(|(a, b)| a.conj() * b).sum()
}

pub fn vec_norm(v: &[C64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn vec_max_abs(v: &[C64]) -> f64 {
    v.iter().fold(0.0, |m, z| m.max(z.norm()))
}

pub fn vec_sub(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a - b).collect()
}

pub fn vec_scale(u: &[C64], c: C64) -> Vec<C64> {
    u.iter().map(|a| a * c).collect()
}

/// Eigendecomposition `A = U diag(values) U^dagger`, values ascending.
#[derive(Clone, Debug)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: CMatrix,
}

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// `tol` bounds the accepted Hermitian defect of the input; the iteration
/// stops once the off-diagonal Frobenius mass is below `EIG_TOL` times the
/// Frobenius norm of `A`.
pub fn hermitian_eig(a: &CMatrix, tol: f64) -> Result<HermitianEigen> {
    let defect = a.hermitian_defect();
    if defect > tol {
        return Err(Error::NotHermitian(defect));
    }
    let n = a.rows;
    // symmetrize so rounding in the input cannot leak into the rotations
    let mut m = CMatrix::from_fn(n, n, |i, j| (a[(i, j)] + a[(j, i)].conj()) * 0.5);
    let mut v = CMatrix::identity(n);
    let scale = m.frobenius();
    let target = EIG_TOL * scale.max(f64::MIN_POSITIVE);

    let mut converged = n <= 1;
    for _ in 0..SWEEP_BUDGET {
        if converged {
            break;
        }
        let off = off_diagonal_norm(&m);
        if off <= target {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[(p, q)];
                let mag = apq.norm();
                if mag <= 1e-300 || mag < 1e-18 * scale {
                    continue;
                }
                let (c, s) = jacobi_angle(m[(p, p)].re, m[(q, q)].re, mag);
                let ph = apq / mag;
                rotate_hermitian(&mut m, &mut v, p, q, c, s, ph);
            }
        }
    }
    if !converged && off_diagonal_norm(&m) > target {
        return Err(Error::NoConvergence(SWEEP_BUDGET));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[(i, i)].re.total_cmp(&m[(j, j)].re));
    let values = order.iter().map(|&i| m[(i, i)].re).collect();
    let vectors = CMatrix::from_fn(n, n, |i, j| v[(i, order[j])]);
    Ok(HermitianEigen { values, vectors })
}

fn off_diagonal_norm(m: &CMatrix) -> f64 {
    let mut s = 0.0;
    for i in 0..m.rows {
        for j in 0..m.cols {
            if i != j {
                s += m[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Rotation `(c, s)` annihilating the off-diagonal entry of
/// `[[app, mag], [mag, aqq]]`.
fn jacobi_angle(app: f64, aqq: f64, mag: f64) -> (f64, f64) {
    let zeta = (aqq - app) / (2.0 * mag);
    let t = if zeta == 0.0 { 1.0 } else { zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt()) };
    let c = 1.0 / (1.0 + t * t).sqrt();
    (c, c * t)
}

// A <- J^dagger A J, V <- V J with
// J = [[c, s*ph], [-s*conj(ph), c]] acting on coordinates p, q.
fn rotate_hermitian(m: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize, c: f64, s: f64, ph: C64) {
    let n = m.rows;
    let sph = ph * s;
    let sphc = ph.conj() * s;
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = akp * c - akq * sphc;
        m[(k, q)] = akp * sph + akq * c;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = apk * c - aqk * sph;
        m[(q, k)] = apk * sphc + aqk * c;
    }
    m[(p, q)] = ZERO;
    m[(q, p)] = ZERO;
    m[(p, p)] = C64::new(m[(p, p)].re, 0.0);
    m[(q, q)] = C64::new(m[(q, q)].re, 0.0);
    for k in 0..v.rows {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c - vkq * sphc;
        v[(k, q)] = vkp * sph + vkq * c;
    }
}

/// Thin SVD `A V = U diag(sigma)` with sigma descending.
///
/// `u` has one column per singular value; columns belonging to zero singular
/// values are left at zero.
#[derive(Clone, Debug)]
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

impl Svd {
    pub fn sigma_max(&self) -> f64 {
        self.sigma.first().copied().unwrap_or(0.0)
    }

    /// Number of singular values above `rtol * sigma_max`.
    pub fn rank(&self, rtol: f64) -> usize {
        let cut = rtol * self.sigma_max();
        self.sigma.iter().filter(|&&s| s > cut && s > 0.0).count()
    }
}

/// One-sided (Hestenes) Jacobi SVD. Works for any shape.
pub fn svd(a: &CMatrix) -> Result<Svd> {
    let (m, n) = (a.rows, a.cols);
    let mut cols: Vec<Vec<C64>> = a.columns();
    let mut v: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut e = vec![ZERO; n];
            e[j] = ONE;
            e
        })
        .collect();

    let fro = a.frobenius();
    // columns below this norm are treated as exact zeros
    let floor = (1e-15 * fro).powi(2);
    let mut converged = n <= 1;
    for _ in 0..SWEEP_BUDGET {
        if converged {
            break;
        }
        let mut rotated = false;
        for p in 0..n {
            for q in p + 1..n {
                let alpha: f64 = cols[p].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[q].iter().map(|z| z.norm_sqr()).sum();
                if alpha <= floor || beta <= floor {
                    continue;
                }
                let gamma = cdot(&cols[p], &cols[q]);
                let mag = gamma.norm();
                if mag <= 1e-14 * (alpha * beta).sqrt() {
                    continue;
                }
                rotated = true;
                let (c, s) = jacobi_angle(alpha, beta, mag);
                let ph = gamma / mag;
                let (sph, sphc) = (ph * s, ph.conj() * s);
                let (lo, hi) = cols.split_at_mut(q);
                for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = xp * c - xq * sphc;
                    *y = xp * sph + xq * c;
                }
                let (lo, hi) = v.split_at_mut(q);
                for (x, y) in lo[p].iter_mut().zip(hi[0].iter_mut()) {
                    let (xp, xq) = (*x, *y);
                    *x = xp * c - xq * sphc;
                    *y = xp * sph + xq * c;
                }
            }
        }
        if !rotated {
            converged = true;
        }
    }
    if !converged {
        return Err(Error::NoConvergence(SWEEP_BUDGET));
    }

    let norms: Vec<f64> = cols.iter().map(|c| vec_norm(c)).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let sigma: Vec<f64> = order.iter().map(|&j| norms[j]).collect();
    let smax = sigma.first().copied().unwrap_or(0.0);
    let ucols: Vec<Vec<C64>> = order
        .iter()
        .map(|&j| {
            let s = norms[j];
            if s > 1e-300 && s >= 1e-15 * smax {
                vec_scale(&cols[j], C64::new(1.0 / s, 0.0))
            } else {
                vec![ZERO; m]
            }
        })
        .collect();
    let vcols: Vec<Vec<C64>> = order.iter().map(|&j| std::mem::take(&mut v[j])).collect();
    Ok(Svd { u: CMatrix::from_columns(m, &ucols), sigma, v: CMatrix::from_columns(n, &vcols) })
}

/// Numerical rank with threshold `rtol` relative to the largest singular value.
pub fn rank(a: &CMatrix, rtol: f64) -> Result<usize> {
    Ok(svd(a)?.rank(rtol))
}

/// Rank with cutoff `rtol * max(sigma_max, scale)`.
pub fn rank_scaled(a: &CMatrix, rtol: f64, scale: f64) -> Result<usize> {
    if a.rows == 0 || a.cols == 0 {
        return Ok(0);
    }
    let s = svd(a)?;
    let cut = rtol * s.sigma_max().max(scale);
    Ok(s.sigma.iter().filter(|&&x| x > cut && x > 0.0).count())
}

/// Orthonormal basis (as columns) of `{x : A x = 0}`.
pub fn null_space(a: &CMatrix, rtol: f64) -> Result<CMatrix> {
    null_space_scaled(a, rtol, 0.0)
}

/// Null space with cutoff `rtol * max(sigma_max, scale)`, for matrices whose
/// entries may all be rounding noise around a known natural scale.
pub fn null_space_scaled(a: &CMatrix, rtol: f64, scale: f64) -> Result<CMatrix> {
    let n = a.cols;
    if a.rows == 0 {
        return Ok(CMatrix::identity(n));
    }
    let s = svd(a)?;
    let cut = rtol * s.sigma_max().max(scale);
    let r = s.sigma.iter().filter(|&&x| x > cut && x > 0.0).count();
    let cols: Vec<Vec<C64>> = (r..n).map(|j| s.v.column(j)).collect();
    Ok(CMatrix::from_columns(n, &cols))
}

/// Orthonormal basis (as columns) of the column space of `A`.
pub fn column_space(a: &CMatrix, rtol: f64) -> Result<CMatrix> {
    if a.cols == 0 {
        return Ok(CMatrix::zeros(a.rows, 0));
    }
    let s = svd(a)?;
    let r = s.rank(rtol);
    let cols: Vec<Vec<C64>> = (0..r).map(|j| s.u.column(j)).collect();
    Ok(CMatrix::from_columns(a.rows, &cols))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SolveMode {
    /// Full column rank required and `max |AX - B| < tol`.
    Exact { tol: f64 },
    /// Minimum-norm least squares; never fails on rank.
    LeastSquares,
}

#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub x: CMatrix,
    /// `max |AX - B|`.
    pub residual: f64,
    pub rank: usize,
}

/// Solves `A X = B` in the least-squares sense through the pseudo-inverse.
pub fn solve_linear(a: &CMatrix, b: &CMatrix, mode: SolveMode) -> Result<LinearSolution> {
    if a.rows != b.rows {
        return Err(Error::DimensionMismatch(format!("A has {} rows but B has {}", a.rows, b.rows)));
    }
    let s = svd(a)?;
    let r = s.rank(RANK_RTOL);
    // X = V diag(1/sigma) U^dagger B over the numerically nonzero part
    let mut x = CMatrix::zeros(a.cols, b.cols);
    for k in 0..r {
        let uk = s.u.column(k);
        let inv = 1.0 / s.sigma[k];
        for c in 0..b.cols {
            let coef: C64 = (0..b.rows).map(|i| uk[i].conj() * b[(i, c)]).sum::<C64>() * inv;
            if coef == ZERO {
                continue;
            }
            for i in 0..a.cols {
                x[(i, c)] += s.v[(i, k)] * coef;
            }
        }
    }
    let residual = (&(a * &x) - b).max_abs();
    if let SolveMode::Exact { tol } = mode {
        if r < a.cols || residual >= tol {
            return Err(Error::RankDeficient(residual));
        }
    }
    Ok(LinearSolution { x, residual, rank: r })
}

/// Square root and inverse square root of a Hermitian positive-definite matrix.
pub fn sqrt_and_inverse_sqrt(t: &CMatrix, tol: f64) -> Result<(CMatrix, CMatrix)> {
    let e = hermitian_eig(t, tol)?;
    if e.values.first().is_some_and(|&l| l <= 0.0) {
        return Err(Error::RankDeficient(e.values[0]));
    }
    let n = t.rows;
    let w = &e.vectors;
    let sq: Vec<C64> = e.values.iter().map(|l| C64::new(l.sqrt(), 0.0)).collect();
    let isq: Vec<C64> = e.values.iter().map(|l| C64::new(1.0 / l.sqrt(), 0.0)).collect();
    let root = &(w * &CMatrix::diagonal(&sq)) * &w.adjoint();
    let inv_root = &(w * &CMatrix::diagonal(&isq)) * &w.adjoint();
    debug_assert_eq!(root.rows, n);
    Ok((root, inv_root))
}

pub fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    let a = random_matrix(n, n, rng);
    (&a + &a.adjoint()).scale(C64::new(0.5, 0.0))
}

/// Random unitary from Gram-Schmidt on a random complex matrix.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> CMatrix {
    loop {
        let a = random_matrix(n, n, rng);
        let mut q: Vec<Vec<C64>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = a.column(j);
            for _ in 0..2 {
                for b in &q {
                    let c = cdot(b, &v);
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi -= c * bi;
                    }
                }
            }
            let nv = vec_norm(&v);
            if nv < 1e-8 {
                break;
            }
            q.push(vec_scale(&v, C64::new(1.0 / nv, 0.0)));
        }
        if q.len() == n {
            return CMatrix::from_columns(n, &q);
        }
    }
}
