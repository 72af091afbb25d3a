//! Finite-dimensional *-algebras given by structure constants.
//!
//! Coordinates are taken in a fixed basis `e_0..e_{n-1}`; the product is
//! `e_i e_j = sum_k c[i][j][k] e_k` and the involution acts as
//! `coords(x*) = S conj(coords(x))`. Involutions need not be positive.

mod wedderburn;

pub use wedderburn::{
    cstar_envelope, envelope_of_ideal, hull, hull_of_reps, irreducible_star_reps, wedderburn_blocks, AlgebraRep,
    Envelope,
};

use crate::error::{Error, Result};
use crate::linalg::{cdot, column_space, null_space, vec_max_abs, CMatrix, C64, ONE, RANK_RTOL, STRUCT_TOL, ZERO};

/// Default seed for every randomized routine.
pub const DEFAULT_SEED: u64 = 0x5EED;

#[derive(Clone, Debug, PartialEq)]
pub struct FinStarAlgebra {
    labels: Vec<String>,
    // flat c[i][j][k] at (i * n + j) * n + k
    structure: Vec<C64>,
    unit: Option<Vec<C64>>,
    star: CMatrix,
}

impl FinStarAlgebra {
    pub fn new(labels: Vec<String>, structure: Vec<C64>, unit: Option<Vec<C64>>, star: CMatrix) -> Result<Self> {
        let n = labels.len();
        if structure.len() != n * n * n {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor has {} entries, expected {}",
                structure.len(),
                n * n * n
            )));
        }
        if star.rows() != n || star.cols() != n {
            return Err(Error::DimensionMismatch("star matrix must be n x n".into()));
        }
        if let Some(u) = &unit {
            if u.len() != n {
                return Err(Error::DimensionMismatch("unit has wrong length".into()));
            }
            if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
                return Err(Error::NonFinite("unit"));
            }
        }
        if structure.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite("structure constants"));
        }
        if !star.is_finite() {
            return Err(Error::NonFinite("star matrix"));
        }
        Ok(FinStarAlgebra { labels, structure, unit, star })
    }

    /// Builds an algebra from a product rule on basis indices.
    pub fn from_rule(
        labels: Vec<String>,
        mut product: impl FnMut(usize, usize) -> Vec<(usize, C64)>,
        unit: Option<Vec<C64>>,
        star: CMatrix,
    ) -> Result<Self> {
        let n = labels.len();
        let mut structure = vec![ZERO; n * n * n];
        for i in 0..n {
            for j in 0..n {
                for (k, v) in product(i, j) {
                    structure[(i * n + j) * n + k] += v;
                }
            }
        }
        Self::new(labels, structure, unit, star)
    }

    /// `Mat(d_0) + ... + Mat(d_r)` in the matrix-unit basis, block by block
    /// and row-major inside a block, with `E_pq* = E_qp`.
    pub fn blocks(dims: &[usize]) -> Self {
        let offsets = block_offsets(dims);
        let n = offsets.last().copied().unwrap_or(0);
        let mut labels = Vec::with_capacity(n);
        for (b, &d) in dims.iter().enumerate() {
            for p in 0..d {
                for q in 0..d {
                    labels.push(format!("E{b}[{p},{q}]"));
                }
            }
        }
        let mut structure = vec![ZERO; n * n * n];
        let mut star = CMatrix::zeros(n, n);
        let mut unit = vec![ZERO; n];
        for (b, &d) in dims.iter().enumerate() {
            let o = offsets[b];
            for p in 0..d {
                unit[o + p * d + p] = ONE;
                for q in 0..d {
                    star[(o + q * d + p, o + p * d + q)] = ONE;
                    for s in 0..d {
                        let (i, j, k) = (o + p * d + q, o + q * d + s, o + p * d + s);
                        structure[(i * n + j) * n + k] = ONE;
                    }
                }
            }
        }
        FinStarAlgebra { labels, structure, unit: Some(unit), star }
    }

    /// The zero algebra.
    pub fn zero() -> Self {
        FinStarAlgebra { labels: vec![], structure: vec![], unit: Some(vec![]), star: CMatrix::zeros(0, 0) }
    }

    /// Same product, different involution.
    pub fn with_star(&self, star: CMatrix) -> Result<Self> {
        Self::new(self.labels.clone(), self.structure.clone(), self.unit.clone(), star)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure(&self) -> &[C64] {
        &self.structure
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> C64 {
        let n = self.dim();
        self.structure[(i * n + j) * n + k]
    }

    pub fn unit(&self) -> Option<&[C64]> {
        self.unit.as_deref()
    }

    pub fn star_matrix(&self) -> &CMatrix {
        &self.star
    }

    pub fn basis_vector(&self, i: usize) -> Vec<C64> {
        let mut v = vec![ZERO; self.dim()];
        v[i] = ONE;
        v
    }

    pub fn mul(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        let n = self.dim();
        let mut out = vec![ZERO; n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == ZERO {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == ZERO {
                    continue;
                }
                let w = xi * yj;
                let row = &self.structure[(i * n + j) * n..(i * n + j + 1) * n];
                for (o, c) in out.iter_mut().zip(row) {
                    if *c != ZERO {
                        *o += w * c;
                    }
                }
            }
        }
        out
    }

    pub fn star(&self, x: &[C64]) -> Vec<C64> {
        let xc: Vec<C64> = x.iter().map(|z| z.conj()).collect();
        self.star.mul_vec(&xc)
    }

    /// Matrix of `y -> x y`.
    pub fn left_mult(&self, x: &[C64]) -> CMatrix {
        let n = self.dim();
        let mut l = CMatrix::zeros(n, n);
        for (i, &xi) in x.iter().enumerate() {
            if xi == ZERO {
                continue;
            }
            for j in 0..n {
                for k in 0..n {
                    let c = self.structure[(i * n + j) * n + k];
                    if c != ZERO {
                        l[(k, j)] += xi * c;
                    }
                }
            }
        }
        l
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &[C64]) -> CMatrix {
        let n = self.dim();
        let mut r = CMatrix::zeros(n, n);
        for i in 0..n {
            for (j, &xj) in x.iter().enumerate() {
                if xj == ZERO {
                    continue;
                }
                for k in 0..n {
                    let c = self.structure[(i * n + j) * n + k];
                    if c != ZERO {
                        r[(k, i)] += xj * c;
                    }
                }
            }
        }
        r
    }

    /// `tr(L_{e_k})` for every basis element.
    pub fn regular_traces(&self) -> Vec<C64> {
        let n = self.dim();
        (0..n).map(|k| (0..n).map(|j| self.c(k, j, j)).sum()).collect()
    }

    pub fn is_commutative(&self, tol: f64) -> bool {
        self.commutator_residual() < tol
    }

    pub fn commutator_residual(&self) -> f64 {
        let n = self.dim();
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    r = r.max((self.c(i, j, k) - self.c(j, i, k)).norm());
                }
            }
        }
        r
    }

    /// Solves for a two-sided unit when none was supplied.
    pub fn find_unit(&self) -> Option<Vec<C64>> {
        if let Some(u) = &self.unit {
            return Some(u.clone());
        }
        let n = self.dim();
        // sum_a u_a c[a][i][k] = delta_ik for all i, k
        let a = CMatrix::from_fn(n * n, n, |r, col| self.c(col, r / n, r % n));
        let b = CMatrix::from_fn(n * n, 1, |r, _| if r / n == r % n { ONE } else { ZERO });
        let sol = crate::linalg::solve_linear(&a, &b, crate::linalg::SolveMode::LeastSquares).ok()?;
        if sol.residual > STRUCT_TOL {
            return None;
        }
        let u = sol.x.column(0);
        let right_ok = (0..n).all(|i| {
            let e = self.basis_vector(i);
            vec_max_abs(&crate::linalg::vec_sub(&self.mul(&e, &u), &e)) < STRUCT_TOL
        });
        right_ok.then_some(u)
    }
}

pub fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut off = Vec::with_capacity(dims.len() + 1);
    let mut acc = 0;
    off.push(0);
    for &d in dims {
        acc += d * d;
        off.push(acc);
    }
    off
}

/// Max residual per *-algebra axiom.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct StarAlgebraReport {
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub associativity: f64,
    /// `None` when the algebra carries no unit.
    #[serde(serialize_with = "crate::json::serialize_f17_opt")]
    pub unit: Option<f64>,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub involutive: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub antimultiplicative: f64,
}

impl StarAlgebraReport {
    pub fn max_residual(&self) -> f64 {
        [self.associativity, self.unit.unwrap_or(0.0), self.involutive, self.antimultiplicative]
            .into_iter()
            .fold(0.0, f64::max)
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual() < tol
    }
}

/// Checks associativity, the unit, and the involution laws. Antilinearity
/// holds by construction of the star encoding.
pub fn verify_star_algebra(a: &FinStarAlgebra) -> StarAlgebraReport {
    let n = a.dim();
    let lmats: Vec<CMatrix> = (0..n).map(|i| a.left_mult(&a.basis_vector(i))).collect();
    let mut assoc: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            // L_{e_i e_j} = L_{e_i} L_{e_j}
            let prod = &lmats[i] * &lmats[j];
            let mut lij = CMatrix::zeros(n, n);
            for (k, lk) in lmats.iter().enumerate() {
                let c = a.c(i, j, k);
                if c != ZERO {
                    lij = &lij + &lk.scale(c);
                }
            }
            assoc = assoc.max((&prod - &lij).max_abs());
        }
    }

    let unit = a.unit().map(|u| {
        let mut r: f64 = 0.0;
        for i in 0..n {
            let e = a.basis_vector(i);
            r = r.max(vec_max_abs(&crate::linalg::vec_sub(&a.mul(u, &e), &e)));
            r = r.max(vec_max_abs(&crate::linalg::vec_sub(&a.mul(&e, u), &e)));
        }
        r
    });

    let s = a.star_matrix();
    let involutive = (&(s * &s.conj()) - &CMatrix::identity(n)).max_abs();

    let stars: Vec<Vec<C64>> = (0..n).map(|i| a.star(&a.basis_vector(i))).collect();
    let mut anti: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let lhs = a.star(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
            let rhs = a.mul(&stars[j], &stars[i]);
            anti = anti.max(vec_max_abs(&crate::linalg::vec_sub(&lhs, &rhs)));
        }
    }
    StarAlgebraReport { associativity: assoc, unit, involutive, antimultiplicative: anti }
}

/// Subspace of an algebra with an orthonormal spanning set (as columns).
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace {
    basis: CMatrix,
    ideal: bool,
}

impl Subspace {
    pub fn zero(n: usize) -> Self {
        Subspace { basis: CMatrix::zeros(n, 0), ideal: true }
    }

    pub fn full(n: usize) -> Self {
        Subspace { basis: CMatrix::identity(n), ideal: true }
    }

    /// Span of arbitrary vectors; not flagged as an ideal.
    pub fn span(n: usize, vectors: &[Vec<C64>]) -> Result<Self> {
        if vectors.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch("spanning vector of wrong length".into()));
        }
        let m = CMatrix::from_columns(n, vectors);
        Ok(Subspace { basis: column_space(&m, RANK_RTOL)?, ideal: false })
    }

    /// Column span of a matrix whose columns are already orthonormal.
    pub(crate) fn from_orthonormal(basis: CMatrix, ideal: bool) -> Self {
        Subspace { basis, ideal }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &CMatrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<C64>> {
        self.basis.columns()
    }

    pub fn is_ideal(&self) -> bool {
        self.ideal
    }

    /// Distance of `v` from the subspace (max norm).
    pub fn distance(&self, v: &[C64]) -> f64 {
        let mut r = v.to_vec();
        for b in self.basis.columns() {
            let c = cdot(&b, v);
            for (ri, bi) in r.iter_mut().zip(&b) {
                *ri -= c * bi;
            }
        }
        vec_max_abs(&r)
    }

    /// Orthonormal basis of the orthogonal complement.
    pub fn complement(&self) -> Result<CMatrix> {
        null_space(&self.basis.adjoint(), RANK_RTOL)
    }

    /// Max failure of two-sided *-ideal closure under basis multiplication.
    pub fn ideal_residual(&self, a: &FinStarAlgebra) -> f64 {
        let n = a.dim();
        let mut r: f64 = 0.0;
        for v in self.basis.columns() {
            r = r.max(self.distance(&a.star(&v)));
            for i in 0..n {
                let e = a.basis_vector(i);
                r = r.max(self.distance(&a.mul(&e, &v)));
                r = r.max(self.distance(&a.mul(&v, &e)));
            }
        }
        r
    }

    /// Verifies closure and returns the subspace flagged as an ideal.
    pub fn into_ideal(self, a: &FinStarAlgebra, tol: f64) -> Result<Self> {
        let r = self.ideal_residual(a);
        if r >= tol {
            return Err(Error::NotAnIdeal(r));
        }
        Ok(Subspace { ideal: true, ..self })
    }

    pub fn contains(&self, other: &Subspace, tol: f64) -> bool {
        other.basis.columns().iter().all(|v| self.distance(v) < tol)
    }
}

/// Radical as the null space of the trace form `(a, b) -> tr(L_{ab})`.
pub fn jacobson_radical(a: &FinStarAlgebra) -> Result<Subspace> {
    let n = a.dim();
    if n == 0 {
        return Ok(Subspace::zero(0));
    }
    let t = a.regular_traces();
    let form = CMatrix::from_fn(n, n, |i, j| (0..n).map(|k| a.c(i, j, k) * t[k]).sum());
    // x in radical iff sum_i x_i form[i][j] = 0 for all j
    let ns = null_space(&form.transpose(), RANK_RTOL)?;
    Ok(Subspace::from_orthonormal(ns, true))
}

/// `A / rad(A)` realized on the orthogonal complement of the radical.
///
/// Returns the quotient and the matrix `Q` (columns orthonormal) so that the
/// quotient map is `x -> Q^dagger x`.
pub fn semisimple_quotient(a: &FinStarAlgebra) -> Result<(FinStarAlgebra, CMatrix)> {
    let rad = jacobson_radical(a)?;
    let n = a.dim();
    if rad.dim() == 0 {
        return Ok((a.clone(), CMatrix::identity(n)));
    }
    let q = rad.complement()?;
    let m = q.cols();
    let qcols = q.columns();
    let qa = q.adjoint();
    let mut structure = vec![ZERO; m * m * m];
    for i in 0..m {
        for j in 0..m {
            let p = qa.mul_vec(&a.mul(&qcols[i], &qcols[j]));
            structure[(i * m + j) * m..(i * m + j + 1) * m].copy_from_slice(&p);
        }
    }
    let star = &(&qa * a.star_matrix()) * &q.conj();
    let unit = a.unit().map(|u| qa.mul_vec(u));
    let labels = (0..m).map(|i| format!("q{i}")).collect();
    Ok((FinStarAlgebra::new(labels, structure, unit, star)?, q))
}
