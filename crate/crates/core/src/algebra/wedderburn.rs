//! Computational Artin-Wedderburn: central idempotents, simple blocks,
//! irreducible *-representations and C*-envelopes.

use std::cmp::Ordering;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{block_offsets, semisimple_quotient, FinStarAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{
    cdot, column_space, hermitian_eig, null_space, null_space_scaled, random_complex, sqrt_and_inverse_sqrt,
    vec_max_abs, vec_norm, vec_sub, CMatrix, C64, RANK_RTOL, STRUCT_TOL, ZERO,
};

const MAX_RESEEDS: usize = 10;
const IDEMPOTENT_TOL: f64 = 1e-8;

/// A representation of a `FinStarAlgebra`: one `d x d` matrix per basis
/// element.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraRep {
    degree: usize,
    matrices: Vec<CMatrix>,
    star_rep: bool,
}

impl AlgebraRep {
    pub fn new(degree: usize, matrices: Vec<CMatrix>, star_rep: bool) -> Result<Self> {
        if matrices.iter().any(|m| m.rows() != degree || m.cols() != degree) {
            return Err(Error::DimensionMismatch("representation matrix of wrong size".into()));
        }
        Ok(AlgebraRep { degree, matrices, star_rep })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn is_star_rep(&self) -> bool {
        self.star_rep
    }

    pub fn eval(&self, x: &[C64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.degree, self.degree);
        for (m, &c) in self.matrices.iter().zip(x) {
            if c != ZERO {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    /// `max |rho(e_i e_j) - rho(e_i) rho(e_j)|`.
    pub fn homomorphism_residual(&self, a: &FinStarAlgebra) -> f64 {
        let n = a.dim();
        let mut r: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let lhs = self.eval(&a.mul(&a.basis_vector(i), &a.basis_vector(j)));
                let rhs = &self.matrices[i] * &self.matrices[j];
                r = r.max((&lhs - &rhs).max_abs());
            }
        }
        r
    }

    /// `max |rho(e_i*) - rho(e_i)^dagger|`.
    pub fn star_residual(&self, a: &FinStarAlgebra) -> f64 {
        (0..a.dim())
            .map(|i| (&self.eval(&a.star(&a.basis_vector(i))) - &self.matrices[i].adjoint()).max_abs())
            .fold(0.0, f64::max)
    }

    /// Traces on the basis, rounded to `1e-6`; invariant under equivalence.
    pub fn fingerprint(&self) -> Vec<(i64, i64)> {
        self.matrices
            .iter()
            .map(|m| {
                let t = m.trace();
                ((t.re * 1e6).round() as i64, (t.im * 1e6).round() as i64)
            })
            .collect()
    }

    pub fn traces(&self) -> Vec<C64> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }

    /// Conjugation `rho -> W^dagger rho W` by a unitary.
    pub fn conjugated(&self, w: &CMatrix) -> Self {
        let wa = w.adjoint();
        AlgebraRep {
            degree: self.degree,
            matrices: self.matrices.iter().map(|m| &(&wa * m) * w).collect(),
            star_rep: self.star_rep,
        }
    }

    /// Whether traces agree on every basis element within `tol`.
    pub fn equivalent_to(&self, other: &AlgebraRep, tol: f64) -> bool {
        self.degree == other.degree && self.traces().iter().zip(other.traces()).all(|(a, b)| (a - b).norm() < tol)
    }
}

fn rep_order(a: &AlgebraRep, b: &AlgebraRep) -> Ordering {
    a.degree.cmp(&b.degree).then_with(|| a.fingerprint().cmp(&b.fingerprint()))
}

fn random_in(basis: &CMatrix, rng: &mut ChaCha8Rng) -> Vec<C64> {
    let coeffs: Vec<C64> = (0..basis.cols()).map(|_| random_complex(rng)).collect();
    basis.mul_vec(&coeffs)
}

/// Matrix of `L_w` restricted to an invariant subspace with orthonormal basis.
fn restricted(a: &FinStarAlgebra, basis: &CMatrix, w: &[C64]) -> CMatrix {
    &(&basis.adjoint() * &a.left_mult(w)) * basis
}

fn scaled(v: &[C64], c: C64) -> Vec<C64> {
    v.iter().map(|z| z * c).collect()
}

fn added(u: &[C64], v: &[C64]) -> Vec<C64> {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

/// Minimal idempotents of a commutative semisimple subalgebra `sub` (given
/// by orthonormal columns) whose unit is `unit`.
fn split_commutative(a: &FinStarAlgebra, sub: &CMatrix, unit: &[C64], rng: &mut ChaCha8Rng) -> Result<Vec<Vec<C64>>> {
    if sub.cols() <= 1 {
        return Ok(vec![unit.to_vec()]);
    }
    let whitening = hermitian_whitening(a, sub)?;
    for _ in 0..MAX_RESEEDS {
        let found = match &whitening {
            Some(w) => hermitian_split(a, sub, w, unit, rng)?,
            None => sign_split(a, sub, unit, rng)?,
        };
        if let Some(ids) = found {
            return Ok(ids);
        }
    }
    Err(Error::SplitFailure(format!(
        "no separating element found for a {}-dimensional commutative subalgebra after {MAX_RESEEDS} draws",
        sub.cols()
    )))
}

/// `(R, R^{-1})` with `G = R^dagger R` for the Gram matrix
/// `G_ij = tau(z_i* z_j)`, when `sub` is *-closed and `G` is positive.
fn hermitian_whitening(a: &FinStarAlgebra, sub: &CMatrix) -> Result<Option<(CMatrix, CMatrix)>> {
    let k = sub.cols();
    let space = Subspace::from_orthonormal(sub.clone(), false);
    let cols = sub.columns();
    let stars: Vec<Vec<C64>> = cols.iter().map(|z| a.star(z)).collect();
    if stars.iter().any(|s| space.distance(s) > STRUCT_TOL) {
        return Ok(None);
    }
    let t = a.regular_traces();
    let tau = |x: &[C64]| -> C64 { x.iter().zip(&t).map(|(u, v)| u * v).sum() };
    let g = CMatrix::from_fn(k, k, |i, j| tau(&a.mul(&stars[i], &cols[j])));
    let scale = g.max_abs().max(f64::MIN_POSITIVE);
    if g.hermitian_defect() > 1e-8 * scale {
        return Ok(None);
    }
    let e = hermitian_eig(&g, 1e-8 * scale)?;
    let top = e.values.last().copied().unwrap_or(0.0);
    if e.values[0] <= 1e-10 * top {
        return Ok(None);
    }
    let w = &e.vectors;
    let sq: Vec<C64> = e.values.iter().map(|l| C64::new(l.sqrt(), 0.0)).collect();
    let isq: Vec<C64> = e.values.iter().map(|l| C64::new(1.0 / l.sqrt(), 0.0)).collect();
    let r = &CMatrix::diagonal(&sq) * &w.adjoint();
    let rinv = w * &CMatrix::diagonal(&isq);
    Ok(Some((r, rinv)))
}

fn hermitian_split(
    a: &FinStarAlgebra,
    sub: &CMatrix,
    (r, rinv): &(CMatrix, CMatrix),
    unit: &[C64],
    rng: &mut ChaCha8Rng,
) -> Result<Option<Vec<Vec<C64>>>> {
    let w = random_in(sub, rng);
    let z = added(&w, &a.star(&w));
    let lz = restricted(a, sub, &z);
    let h = &(r * &lz) * rinv;
    let h = CMatrix::from_fn(h.rows(), h.cols(), |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let e = hermitian_eig(&h, f64::INFINITY)?;
    let spread = e.values.last().unwrap() - e.values[0];
    if e.values.windows(2).any(|p| p[1] - p[0] < 1e-6 * spread.max(1.0)) {
        return Ok(None);
    }
    let mut ids = Vec::with_capacity(sub.cols());
    for u in e.vectors.columns() {
        let y = rinv.mul_vec(&u);
        let v = sub.mul_vec(&y);
        match normalize_idempotent(a, &v) {
            Some(f) => ids.push(f),
            None => return Ok(None),
        }
    }
    Ok(check_partition(a, ids, unit))
}

/// Rescales an element `v` with `v^2 = c v` to the idempotent `v / c`.
fn normalize_idempotent(a: &FinStarAlgebra, v: &[C64]) -> Option<Vec<C64>> {
    let v2 = a.mul(v, v);
    let c = cdot(v, &v2) / cdot(v, v);
    if c.norm() < 1e-12 {
        return None;
    }
    let f = scaled(v, c.inv());
    let f2 = a.mul(&f, &f);
    (vec_max_abs(&vec_sub(&f2, &f)) < IDEMPOTENT_TOL).then_some(f)
}

fn check_partition(a: &FinStarAlgebra, ids: Vec<Vec<C64>>, unit: &[C64]) -> Option<Vec<Vec<C64>>> {
    let mut total = vec![ZERO; unit.len()];
    for f in &ids {
        total = added(&total, f);
    }
    if vec_max_abs(&vec_sub(&total, unit)) > IDEMPOTENT_TOL {
        return None;
    }
    for (i, f) in ids.iter().enumerate() {
        for g in &ids[i + 1..] {
            if vec_max_abs(&a.mul(f, g)) > IDEMPOTENT_TOL {
                return None;
            }
        }
    }
    Some(ids)
}

/// Splitting without a positive inner product: the matrix sign function
/// of `w - c` (Newton iteration inside the algebra) separates the minimal
/// idempotents by the real parts of their eigenvalues.
fn sign_split(a: &FinStarAlgebra, sub: &CMatrix, unit: &[C64], rng: &mut ChaCha8Rng) -> Result<Option<Vec<Vec<C64>>>> {
    let mut pending = vec![unit.to_vec()];
    let mut done = Vec::new();
    while let Some(p) = pending.pop() {
        let pbasis = column_space(&(&a.left_mult(&p) * sub), RANK_RTOL)?;
        let k = pbasis.cols();
        if k == 0 {
            return Ok(None);
        }
        if k == 1 {
            done.push(p);
            continue;
        }
        let w = random_in(&pbasis, rng);
        let c = restricted(a, &pbasis, &w).trace().re / k as f64;
        let mut x = vec_sub(&w, &scaled(&p, C64::new(c, 0.0)));
        let mut converged = false;
        for _ in 0..100 {
            let Some(inv) = inverse_in(a, &pbasis, &x, &p) else {
                return Ok(None);
            };
            let next = scaled(&added(&x, &inv), C64::new(0.5, 0.0));
            let delta = vec_norm(&vec_sub(&next, &x));
            x = next;
            if delta <= 1e-13 * vec_norm(&x).max(1.0) {
                converged = true;
                break;
            }
        }
        if !converged {
            return Ok(None);
        }
        let q = scaled(&added(&p, &x), C64::new(0.5, 0.0));
        let rest = vec_sub(&p, &q);
        if vec_max_abs(&vec_sub(&a.mul(&q, &q), &q)) > IDEMPOTENT_TOL
            || vec_max_abs(&q) < 1e-6
            || vec_max_abs(&rest) < 1e-6
        {
            return Ok(None);
        }
        pending.push(q);
        pending.push(rest);
    }
    Ok(check_partition(a, done, unit))
}

/// Inverse of `x` inside the unital subalgebra spanned by `basis` with unit `p`.
fn inverse_in(a: &FinStarAlgebra, basis: &CMatrix, x: &[C64], p: &[C64]) -> Option<Vec<C64>> {
    let m = &a.left_mult(x) * basis;
    let rhs = CMatrix::from_columns(p.len(), &[p.to_vec()]);
    let sol = crate::linalg::solve_linear(&m, &rhs, crate::linalg::SolveMode::LeastSquares).ok()?;
    if sol.residual > 1e-8 * vec_max_abs(p).max(1.0) {
        return None;
    }
    Some(basis.mul_vec(&sol.x.column(0)))
}

fn center(a: &FinStarAlgebra) -> Result<CMatrix> {
    let n = a.dim();
    // x e_i - e_i x = 0 for every i
    let m = CMatrix::from_fn(n * n, n, |r, col| {
        let (i, k) = (r / n, r % n);
        a.c(col, i, k) - a.c(i, col, k)
    });
    let scale = a.structure().iter().fold(0.0, |m: f64, z| m.max(z.norm()));
    null_space_scaled(&m, RANK_RTOL, scale)
}

/// Irreducible representations of a semisimple algebra, one per simple
/// block, sorted by `(degree, trace fingerprint)`.
pub fn wedderburn_blocks(a: &FinStarAlgebra, seed: u64) -> Result<Vec<AlgebraRep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    wedderburn_with(a, &mut rng)
}

fn wedderburn_with(a: &FinStarAlgebra, rng: &mut ChaCha8Rng) -> Result<Vec<AlgebraRep>> {
    let n = a.dim();
    if n == 0 {
        return Ok(vec![]);
    }
    let unit = a.find_unit().ok_or_else(|| Error::SplitFailure("semisimple algebra without a unit".into()))?;
    let z = center(a)?;
    let central = split_commutative(a, &z, &unit, rng)?;

    let mut reps = Vec::with_capacity(central.len());
    for f in &central {
        reps.push(simple_block_rep(a, f, rng)?);
    }
    let total: usize = reps.iter().map(|r| r.degree * r.degree).sum();
    if total != n {
        return Err(Error::SplitFailure(format!("block dimensions sum to {total}, algebra has dimension {n}")));
    }
    reps.sort_by(rep_order);
    Ok(reps)
}

/// The irreducible representation of the simple block `f A`.
fn simple_block_rep(a: &FinStarAlgebra, f: &[C64], rng: &mut ChaCha8Rng) -> Result<AlgebraRep> {
    let n = a.dim();
    let lf = a.left_mult(f);
    let block_dim = crate::linalg::rank(&lf, RANK_RTOL)?;
    let d = (block_dim as f64).sqrt().round() as usize;
    if d * d != block_dim {
        return Err(Error::SplitFailure(format!("block of non-square dimension {block_dim}")));
    }
    let self_adjoint_f = vec_max_abs(&vec_sub(&a.star(f), f)) < IDEMPOTENT_TOL;

    let mut minimal = None;
    if d == 1 {
        minimal = Some(f.to_vec());
    } else {
        let fixed = &lf - &CMatrix::identity(n);
        for _ in 0..MAX_RESEEDS {
            let r: Vec<C64> = (0..n).map(|_| random_complex(rng)).collect();
            let y0 = a.mul(f, &r);
            let y = if self_adjoint_f { added(&y0, &a.star(&y0)) } else { y0 };
            let comm = &a.left_mult(&y) - &a.right_mult(&y);
            let c = null_space(&CMatrix::vstack(&[comm, fixed.clone()]), RANK_RTOL)?;
            if c.cols() != d {
                continue;
            }
            if let Ok(ids) = split_commutative(a, &c, f, rng) {
                minimal = Some(ids[0].clone());
                break;
            }
        }
    }
    let e = minimal.ok_or_else(|| Error::SplitFailure("no primitive idempotent found in block".into()))?;
    let v = column_space(&a.right_mult(&e), RANK_RTOL)?;
    if v.cols() != d {
        return Err(Error::SplitFailure(format!(
            "minimal left ideal of dimension {} in a block of degree {d}",
            v.cols()
        )));
    }
    let va = v.adjoint();
    let matrices = (0..n).map(|i| &(&va * &a.left_mult(&a.basis_vector(i))) * &v).collect();
    AlgebraRep::new(d, matrices, false)
}

/// One representative per unitary-equivalence class of irreducible
/// *-representations. Blocks whose involution is not unitarizable are
/// dropped.
pub fn irreducible_star_reps(a: &FinStarAlgebra, seed: u64) -> Result<Vec<AlgebraRep>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (quotient, q) = semisimple_quotient(a)?;
    let blocks = wedderburn_with(&quotient, &mut rng)?;
    let n = a.dim();
    let mut out = Vec::new();
    for b in blocks {
        // pull back along x -> Q^dagger x
        let matrices: Vec<CMatrix> = (0..n)
            .map(|i| {
                let coords: Vec<C64> = (0..q.cols()).map(|j| q[(i, j)].conj()).collect();
                b.eval(&coords)
            })
            .collect();
        let rho = AlgebraRep::new(b.degree, matrices, false)?;
        if let Some(sigma) = unitarize(a, &rho)? {
            out.push(sigma);
        }
    }
    out.sort_by(rep_order);
    Ok(out)
}

/// Solves `T rho(a) = rho(a*)^dagger T`; conjugates by `T^{1/2}` when a
/// definite solution exists.
fn unitarize(a: &FinStarAlgebra, rho: &AlgebraRep) -> Result<Option<AlgebraRep>> {
    let n = a.dim();
    let d = rho.degree;
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let ra = &rho.matrices[i];
        let rstar = rho.eval(&a.star(&a.basis_vector(i))).adjoint();
        // vec(T) row-major, index p * d + q
        rows.push(CMatrix::from_fn(d * d, d * d, |row, col| {
            let (p, qq) = (row / d, row % d);
            let (s, t) = (col / d, col % d);
            let mut v = ZERO;
            if s == p {
                v += ra[(t, qq)];
            }
            if t == qq {
                v -= rstar[(p, s)];
            }
            v
        }));
    }
    let scale = rho.matrices.iter().map(|m| m.max_abs()).fold(0.0, f64::max);
    let sol = null_space_scaled(&CMatrix::vstack(&rows), 1e-8, scale)?;
    if sol.cols() == 0 {
        return Ok(None);
    }
    let t0 = CMatrix::from_fn(d, d, |p, q| sol[(p * d + q, 0)]);
    let mut h = &t0 + &t0.adjoint();
    if h.max_abs() < 1e-8 * t0.max_abs() {
        h = (&t0 - &t0.adjoint()).scale(C64::new(0.0, 1.0));
    }
    let h = CMatrix::from_fn(d, d, |i, j| (h[(i, j)] + h[(j, i)].conj()) * 0.5);
    let e = hermitian_eig(&h, f64::INFINITY)?;
    let (lo, hi) = (e.values[0], e.values[d - 1]);
    let scale = lo.abs().max(hi.abs());
    let h = if lo > 1e-9 * scale {
        h
    } else if hi < -1e-9 * scale {
        h.scale(C64::new(-1.0, 0.0))
    } else {
        return Ok(None);
    };
    let (root, inv_root) = sqrt_and_inverse_sqrt(&h, f64::INFINITY)?;
    let matrices = rho.matrices.iter().map(|m| &(&root * m) * &inv_root).collect();
    let sigma = AlgebraRep::new(d, matrices, true)?;
    Ok(Some(sigma))
}

/// A finite-dimensional C*-envelope together with the canonical map into it.
///
/// In finite dimensions the enveloping von Neumann algebra is the same
/// block algebra; `von_neumann_coincides` records this.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub algebra: FinStarAlgebra,
    /// Matrix of the canonical *-homomorphism, `dim(E) x dim(A)`.
    pub embedding: CMatrix,
    pub reps: Vec<AlgebraRep>,
    pub von_neumann_coincides: bool,
}

impl Envelope {
    pub fn from_reps(reps: Vec<AlgebraRep>, source_dim: usize) -> Self {
        let dims: Vec<usize> = reps.iter().map(|r| r.degree).collect();
        let algebra = FinStarAlgebra::blocks(&dims);
        let offsets = block_offsets(&dims);
        let mut embedding = CMatrix::zeros(algebra.dim(), source_dim);
        for (b, r) in reps.iter().enumerate() {
            let d = r.degree;
            for (i, m) in r.matrices.iter().enumerate() {
                for p in 0..d {
                    for q in 0..d {
                        embedding[(offsets[b] + p * d + q, i)] = m[(p, q)];
                    }
                }
            }
        }
        Envelope { algebra, embedding, reps, von_neumann_coincides: true }
    }

    pub fn block_dims(&self) -> Vec<usize> {
        self.reps.iter().map(|r| r.degree).collect()
    }
}

pub fn cstar_envelope(a: &FinStarAlgebra, seed: u64) -> Result<Envelope> {
    Ok(Envelope::from_reps(irreducible_star_reps(a, seed)?, a.dim()))
}

/// Indices of the given representations that vanish on `x`.
pub fn hull_of_reps(reps: &[AlgebraRep], x: &Subspace, tol: f64) -> Vec<usize> {
    let vectors = x.vectors();
    reps.iter().enumerate().filter(|(_, r)| vectors.iter().all(|v| r.eval(v).max_abs() < tol)).map(|(i, _)| i).collect()
}

/// Indices into `irreducible_star_reps(a, seed)` vanishing on `x`.
pub fn hull(a: &FinStarAlgebra, x: &Subspace, seed: u64) -> Result<Vec<usize>> {
    Ok(hull_of_reps(&irreducible_star_reps(a, seed)?, x, STRUCT_TOL))
}

/// C*-envelope of an ideal: the irreducible *-representations outside its hull.
pub fn envelope_of_ideal(a: &FinStarAlgebra, b: &Subspace, seed: u64) -> Result<Envelope> {
    let r = b.ideal_residual(a);
    if r >= STRUCT_TOL {
        return Err(Error::NotAnIdeal(r));
    }
    let reps = irreducible_star_reps(a, seed)?;
    let h = hull_of_reps(&reps, b, STRUCT_TOL);
    let kept: Vec<AlgebraRep> = reps.into_iter().enumerate().filter(|(i, _)| !h.contains(i)).map(|(_, r)| r).collect();
    Ok(Envelope::from_reps(kept, a.dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{dual_numbers, group_algebra_zn};
    use crate::algebra::DEFAULT_SEED;
    use crate::linalg::ONE;

    /// Group algebra of S_3 from explicit permutations.
    fn group_algebra_s3() -> FinStarAlgebra {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
        let compose = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let idx = |p: [usize; 3]| perms.iter().position(|x| *x == p).unwrap();
        let n = 6;
        let star = CMatrix::from_fn(n, n, |i, j| {
            let inv = {
                let p = perms[j];
                let mut q = [0; 3];
                for k in 0..3 {
                    q[p[k]] = k;
                }
                q
            };
            if idx(inv) == i {
                ONE
            } else {
                ZERO
            }
        });
        let mut unit = vec![ZERO; n];
        unit[0] = ONE;
        FinStarAlgebra::from_rule(
            (0..n).map(|i| format!("g{i}")).collect(),
            |i, j| vec![(idx(compose(&perms[i], &perms[j])), ONE)],
            Some(unit),
            star,
        )
        .unwrap()
    }

    #[test]
    fn mat2_single_block() {
        let reps = wedderburn_blocks(&FinStarAlgebra::blocks(&[2]), DEFAULT_SEED).unwrap();
        assert_eq!(reps.len(), 1);
        assert_eq!(reps[0].degree(), 2);
    }

    #[test]
    fn z4_four_characters_match_dft() {
        let a = group_algebra_zn(4);
        let reps = wedderburn_blocks(&a, DEFAULT_SEED).unwrap();
        assert_eq!(reps.len(), 4);
        // oracle: characters are t -> i^{kt}
        let mut found = [false; 4];
        for r in &reps {
            assert_eq!(r.degree(), 1);
            let g = r.matrices()[1][(0, 0)];
            let k = (0..4).find(|&k| (g - C64::new(0.0, 1.0).powu(k as u32)).norm() < 1e-9).unwrap();
            for t in 0..4 {
                let expect = C64::new(0.0, 1.0).powu((k * t) as u32);
                assert!((r.matrices()[t][(0, 0)] - expect).norm() < 1e-9);
            }
            found[k] = true;
        }
        assert!(found.iter().all(|&f| f));
    }

    #[test]
    fn s3_blocks_are_1_1_2() {
        let a = group_algebra_s3();
        let reps = wedderburn_blocks(&a, DEFAULT_SEED).unwrap();
        let dims: Vec<usize> = reps.iter().map(|r| r.degree()).collect();
        assert_eq!(dims, vec![1, 1, 2]);
        for r in &reps {
            assert!(r.homomorphism_residual(&a) < 1e-9);
        }
        // character of the 2-dim irrep: 2 at identity, 0 on transpositions, -1 on 3-cycles
        let tr = reps[2].traces();
        let expect = [2.0, 0.0, 0.0, 0.0, -1.0, -1.0];
        for (t, e) in tr.iter().zip(expect) {
            assert!((t - C64::new(e, 0.0)).norm() < 1e-9);
        }
    }

    #[test]
    fn z3_star_characters() {
        let a = group_algebra_zn(3);
        let reps = irreducible_star_reps(&a, DEFAULT_SEED).unwrap();
        assert_eq!(reps.len(), 3);
        for r in &reps {
            assert!(r.is_star_rep());
            assert!(r.star_residual(&a) < 1e-9);
            let z = r.matrices()[1][(0, 0)];
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!((z.powu(3) - ONE).norm() < 1e-9);
        }
    }

    #[test]
    fn s3_star_reps_are_unitary() {
        let a = group_algebra_s3();
        let reps = irreducible_star_reps(&a, 99).unwrap();
        assert_eq!(reps.iter().map(|r| r.degree()).collect::<Vec<_>>(), vec![1, 1, 2]);
        for r in &reps {
            assert!(r.star_residual(&a) < 1e-9);
            for m in r.matrices() {
                let d = r.degree();
                assert!((&(&m.adjoint() * m) - &CMatrix::identity(d)).max_abs() < 1e-9);
            }
        }
    }

    #[test]
    fn seed_independent_fingerprints() {
        let a = group_algebra_s3();
        let r1 = irreducible_star_reps(&a, 1).unwrap();
        let r2 = irreducible_star_reps(&a, 2).unwrap();
        assert_eq!(r1.len(), r2.len());
        for (x, y) in r1.iter().zip(&r2) {
            assert!(x.equivalent_to(y, 1e-8));
        }
    }

    #[test]
    fn dual_numbers_envelope_is_scalars() {
        let a = dual_numbers();
        let env = cstar_envelope(&a, DEFAULT_SEED).unwrap();
        assert_eq!(env.block_dims(), vec![1]);
        // the nilpotent maps to zero
        assert!(env.reps[0].matrices()[1].max_abs() < 1e-12);
    }

    #[test]
    fn nonpositive_star_drops_blocks() {
        // pointwise functions on Z_5 with e_g* = e_{-g}: only g = 0 survives
        let n = 5;
        let star = CMatrix::from_fn(n, n, |i, j| if i == (n - j) % n { ONE } else { ZERO });
        let a = FinStarAlgebra::blocks(&[1; 5]).with_star(star).unwrap();
        let reps = irreducible_star_reps(&a, DEFAULT_SEED).unwrap();
        assert_eq!(reps.len(), 1);
        assert!((reps[0].matrices()[0][(0, 0)] - ONE).norm() < 1e-9);
    }

    #[test]
    fn matrix_algebra_envelope_is_bijective() {
        let a = FinStarAlgebra::blocks(&[2, 1]);
        let env = cstar_envelope(&a, DEFAULT_SEED).unwrap();
        assert_eq!(env.algebra.dim(), 5);
        assert_eq!(crate::linalg::rank(&env.embedding, RANK_RTOL).unwrap(), 5);
    }

    #[test]
    fn hull_examples() {
        let a = group_algebra_zn(4);
        assert_eq!(hull(&a, &Subspace::zero(4), DEFAULT_SEED).unwrap().len(), 4);
        assert!(hull(&a, &Subspace::full(4), DEFAULT_SEED).unwrap().is_empty());
        let uniform = Subspace::span(4, &[vec![ONE; 4]]).unwrap();
        let reps = irreducible_star_reps(&a, DEFAULT_SEED).unwrap();
        let h = hull(&a, &uniform, DEFAULT_SEED).unwrap();
        assert_eq!(h.len(), 3);
        for i in h {
            assert!((reps[i].matrices()[1][(0, 0)] - ONE).norm() > 0.5);
        }
    }

    #[test]
    fn envelopes_of_ideals() {
        let a = group_algebra_zn(4);
        assert_eq!(envelope_of_ideal(&a, &Subspace::zero(4), DEFAULT_SEED).unwrap().algebra.dim(), 0);
        let full = envelope_of_ideal(&a, &Subspace::full(4), DEFAULT_SEED).unwrap();
        assert_eq!(full.block_dims(), cstar_envelope(&a, DEFAULT_SEED).unwrap().block_dims());

        // the ideal cut out by characters 0 and 2, spanned two different ways
        let reps = irreducible_star_reps(&a, DEFAULT_SEED).unwrap();
        let minimal: Vec<Vec<C64>> =
            reps.iter().map(|r| (0..4).map(|t| r.matrices()[t][(0, 0)].conj() * 0.25).collect()).collect();
        let pick =
            |idx: &[usize]| Subspace::span(4, &idx.iter().map(|&i| minimal[i].clone()).collect::<Vec<_>>()).unwrap();
        let b1 = pick(&[0, 1]);
        let b2 = Subspace::span(4, &[added(&minimal[0], &minimal[1]), vec_sub(&minimal[0], &minimal[1])]).unwrap();
        let e1 = envelope_of_ideal(&a, &b1, DEFAULT_SEED).unwrap();
        let e2 = envelope_of_ideal(&a, &b2, DEFAULT_SEED).unwrap();
        assert_eq!(e1.block_dims(), vec![1, 1]);
        assert_eq!(e1.block_dims(), e2.block_dims());
        for (x, y) in e1.reps.iter().zip(&e2.reps) {
            assert!(x.equivalent_to(y, 1e-8));
        }
        let not_ideal = Subspace::span(4, &[a.basis_vector(1)]).unwrap();
        assert!(matches!(envelope_of_ideal(&a, &not_ideal, DEFAULT_SEED), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn radical_plus_blocks_fill_dimension() {
        let a = dual_numbers();
        let rad = crate::algebra::jacobson_radical(&a).unwrap();
        let (q, _) = semisimple_quotient(&a).unwrap();
        let reps = wedderburn_blocks(&q, DEFAULT_SEED).unwrap();
        let s: usize = reps.iter().map(|r| r.degree() * r.degree()).sum();
        assert_eq!(s + rad.dim(), a.dim());
    }
}
