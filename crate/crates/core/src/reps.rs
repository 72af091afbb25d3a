//! *-representations of preduals, their coefficients, and generators.
//!
//! For a representation `pi` of `M_*` on `K` with basis `f_beta`, the
//! coefficient `pi_ab` is the element of `M` with `mu(pi_ab) = pi(mu)[a][b]`.
//! `pi` is standard when `sum_g pi_ga* pi_gb = delta_ab 1` and
//! `sum_g pi_ag pi_bg* = delta_ab 1` in `M`; exactly then the operator
//! `U = sum_{a,b} pi_ba (x) E_ba` on `H (x) K` is unitary. All sums are
//! finite here, so no convergence question arises.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{AlgebraRep, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{column_space, kron, rank_scaled, CMatrix, C64, RANK_RTOL, STRUCT_TOL, ZERO};
use crate::predual::PredualAlgebra;

#[derive(Clone, Debug)]
pub struct StarRep {
    predual: Arc<PredualAlgebra>,
    degree: usize,
    matrices: Vec<CMatrix>,
}

impl StarRep {
    pub fn new(predual: Arc<PredualAlgebra>, degree: usize, matrices: Vec<CMatrix>) -> Result<Self> {
        if matrices.len() != predual.dim() {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for a predual of dimension {}",
                matrices.len(),
                predual.dim()
            )));
        }
        if matrices.iter().any(|m| m.rows() != degree || m.cols() != degree) {
            return Err(Error::DimensionMismatch("representation matrix of wrong size".into()));
        }
        Ok(StarRep { predual, degree, matrices })
    }

    pub fn from_algebra_rep(predual: Arc<PredualAlgebra>, rep: &AlgebraRep) -> Result<Self> {
        Self::new(predual, rep.degree(), rep.matrices().to_vec())
    }

    pub fn predual(&self) -> &Arc<PredualAlgebra> {
        &self.predual
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrices(&self) -> &[CMatrix] {
        &self.matrices
    }

    pub fn eval(&self, mu: &[C64]) -> CMatrix {
        let mut out = CMatrix::zeros(self.degree, self.degree);
        for (m, &c) in self.matrices.iter().zip(mu) {
            if c != ZERO {
                out = &out + &m.scale(c);
            }
        }
        out
    }

    fn as_algebra_rep(&self) -> AlgebraRep {
        AlgebraRep::new(self.degree, self.matrices.clone(), true).expect("sizes checked on construction")
    }

    /// Max of the homomorphism and *-preservation residuals.
    pub fn star_rep_residual(&self) -> f64 {
        let r = self.as_algebra_rep();
        let a = self.predual.algebra();
        r.homomorphism_residual(a).max(r.star_residual(a))
    }

    /// `W^dagger pi W` for a unitary `W`.
    pub fn conjugated(&self, w: &CMatrix) -> Self {
        let wa = w.adjoint();
        StarRep {
            predual: self.predual.clone(),
            degree: self.degree,
            matrices: self.matrices.iter().map(|m| &(&wa * m) * w).collect(),
        }
    }

    pub fn direct_sum(&self, other: &StarRep) -> Result<StarRep> {
        if !Arc::ptr_eq(&self.predual, &other.predual) {
            return Err(Error::MixedParents);
        }
        let d = self.degree + other.degree;
        let matrices = self
            .matrices
            .iter()
            .zip(&other.matrices)
            .map(|(a, b)| {
                let mut m = CMatrix::zeros(d, d);
                m.set_block(0, 0, a);
                m.set_block(self.degree, self.degree, b);
                m
            })
            .collect();
        Ok(StarRep { predual: self.predual.clone(), degree: d, matrices })
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.degree == 0 || range_rank(&self.matrices, self.scale()) == self.degree
    }

    /// Largest matrix entry over all basis images.
    fn scale(&self) -> f64 {
        self.matrices.iter().map(CMatrix::max_abs).fold(0.0, f64::max)
    }
}

// rank of the joint range, measured against the size of the representation
// so that an all-noise image counts as zero
fn range_rank(mats: &[CMatrix], scale: f64) -> usize {
    if mats.is_empty() {
        return 0;
    }
    rank_scaled(&CMatrix::hstack(mats), RANK_RTOL, scale).unwrap_or(0)
}

/// All `d^2` coefficient elements, `elems[a * d + b] = pi_ab` as coordinates in `M`.
#[derive(Clone, Debug)]
pub struct Coefficients {
    pub degree: usize,
    pub elems: Vec<Vec<C64>>,
}

impl Coefficients {
    pub fn get(&self, a: usize, b: usize) -> &[C64] {
        &self.elems[a * self.degree + b]
    }
}

pub fn coefficients(pi: &StarRep) -> Coefficients {
    let d = pi.degree;
    let elems = (0..d * d).map(|ab| pi.matrices.iter().map(|m| m[(ab / d, ab % d)]).collect()).collect();
    Coefficients { degree: d, elems }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Standardness {
    pub standard: bool,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub residual: f64,
}

/// Max deviation of both standardness identities; no degeneracy check.
pub fn standardness_residual(pi: &StarRep) -> f64 {
    let m = pi.predual.parent();
    let d = pi.degree;
    let c = coefficients(pi);
    let stars: Vec<Vec<C64>> = c.elems.iter().map(|x| m.star(x)).collect();
    let unit = m.unit();
    let n = m.dim();
    let mut r: f64 = 0.0;
    for a in 0..d {
        for b in 0..d {
            let mut s1 = vec![ZERO; n];
            let mut s2 = vec![ZERO; n];
            for g in 0..d {
                // pi_ga* pi_gb and pi_ag pi_bg*
                let p1 = m.mul(&stars[g * d + a], c.get(g, b));
                let p2 = m.mul(c.get(a, g), &stars[b * d + g]);
                for k in 0..n {
                    s1[k] += p1[k];
                    s2[k] += p2[k];
                }
            }
            for k in 0..n {
                let target = if a == b { unit[k] } else { ZERO };
                r = r.max((s1[k] - target).norm()).max((s2[k] - target).norm());
            }
        }
    }
    r
}

pub fn is_standard(pi: &StarRep, tol: f64) -> Result<Standardness> {
    if !pi.is_nondegenerate() {
        return Err(Error::DegenerateRep);
    }
    let residual = standardness_residual(pi);
    Ok(Standardness { standard: residual < tol, residual })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct GeneratorResiduals {
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub unitarity: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub pairing: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub membership: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub commutant: f64,
}

impl GeneratorResiduals {
    pub fn max(&self) -> f64 {
        self.unitarity.max(self.pairing).max(self.membership).max(self.commutant)
    }
}

/// `U` on `H (x) K` with row index `q * d + beta`, together with `U*`
/// computed through the involution of `M`.
#[derive(Clone, Debug)]
pub struct Generator {
    pub predual: Arc<PredualAlgebra>,
    pub degree: usize,
    pub u: CMatrix,
    pub u_star: CMatrix,
    pub residuals: GeneratorResiduals,
}

/// Builds `U = sum pi_ba (x) E_ba` without checking standardness first.
pub fn entrywise_generator(pi: &StarRep) -> Generator {
    let m = pi.predual.parent();
    let d = pi.degree;
    let h = m.hilbert_dim();
    let c = coefficients(pi);
    let mut u = CMatrix::zeros(h * d, h * d);
    let mut u_star = CMatrix::zeros(h * d, h * d);
    for a in 0..d {
        for b in 0..d {
            let mut unit_ba = CMatrix::zeros(d, d);
            unit_ba[(b, a)] = C64::new(1.0, 0.0);
            u = &u + &kron(&m.concrete(c.get(b, a)), &unit_ba);
            // (x (x) E_ba)* = x* (x) E_ab
            u_star = &u_star + &kron(&m.concrete(&m.star(c.get(b, a))), &unit_ba.transpose());
        }
    }
    let mut g = Generator { predual: pi.predual.clone(), degree: d, u, u_star, residuals: Default::default() };
    g.residuals = generator_residuals(&g, pi);
    g
}

pub fn build_generator(pi: &StarRep) -> Result<Generator> {
    let s = is_standard(pi, STRUCT_TOL)?;
    if !s.standard {
        return Err(Error::NotStandard(s.residual));
    }
    Ok(entrywise_generator(pi))
}

fn generator_residuals(g: &Generator, pi: &StarRep) -> GeneratorResiduals {
    let m = g.predual.parent();
    let hd = g.u.rows();
    let eye = CMatrix::identity(hd);
    let mut unitarity = (&(&g.u_star * &g.u) - &eye).max_abs().max((&(&g.u * &g.u_star) - &eye).max_abs());
    if m.star_compatible() {
        unitarity = unitarity.max((&g.u_star - &g.u.adjoint()).max_abs());
    }
    let (extracted, membership) = read_matrices(g);
    let pairing = extracted.iter().zip(pi.matrices()).map(|(x, y)| (x - y).max_abs()).fold(0.0, f64::max);

    let h = m.hilbert_dim();
    let d = g.degree;
    let mut commutant: f64 = 0.0;
    for col in m.commutant().columns() {
        let x = CMatrix::from_vec(h, h, col).expect("commutant basis element");
        let xi = kron(&x, &CMatrix::identity(d));
        commutant = commutant.max((&(&g.u * &xi) - &(&xi * &g.u)).max_abs());
    }
    GeneratorResiduals { unitarity, pairing, membership, commutant }
}

/// `pi(delta_j)[b][a]` read from the `M`-coordinates of the `H`-blocks
/// `U_ba`, plus the largest entry of any `U_ba` outside `M`.
fn read_matrices(g: &Generator) -> (Vec<CMatrix>, f64) {
    let m = g.predual.parent();
    let d = g.degree;
    let h = m.hilbert_dim();
    let n = m.dim();
    let mut mats = vec![CMatrix::zeros(d, d); n];
    let mut membership: f64 = 0.0;
    for b in 0..d {
        for a in 0..d {
            let sub = CMatrix::from_fn(h, h, |q, p| g.u[(q * d + b, p * d + a)]);
            let (coords, outside) = m.from_concrete(&sub);
            membership = membership.max(outside);
            for (j, z) in coords.into_iter().enumerate() {
                mats[j][(b, a)] = z;
            }
        }
    }
    (mats, membership)
}

/// Representation read back from a generator.
#[derive(Clone, Debug)]
pub struct ExtractedRep {
    pub rep: StarRep,
    /// Largest component of `U` outside `M (x) B(K)`.
    pub membership: f64,
    /// *-representation residual of the recovered matrices.
    pub homomorphism: f64,
}

pub fn extract_rep(g: &Generator) -> ExtractedRep {
    let (mats, membership) = read_matrices(g);
    let rep = StarRep { predual: g.predual.clone(), degree: g.degree, matrices: mats };
    let homomorphism = rep.star_rep_residual();
    ExtractedRep { rep, membership, homomorphism }
}

/// `(pi x rho)(delta_j) = sum_{a,b} c_M[a][b][j] pi(delta_a) (x) rho(delta_b)`,
/// so that the coefficients of `pi x rho` are the products `pi_ab rho_a'b'` in `M`.
pub fn kronecker(pi: &StarRep, rho: &StarRep) -> Result<StarRep> {
    if !Arc::ptr_eq(&pi.predual, &rho.predual) {
        return Err(Error::MixedParents);
    }
    let m = pi.predual.parent();
    let a = m.algebra();
    let n = m.dim();
    let d = pi.degree * rho.degree;
    let mut mats = vec![CMatrix::zeros(d, d); n];
    for i in 0..n {
        for j in 0..n {
            let mut pair = None;
            for (k, mat) in mats.iter_mut().enumerate() {
                let c = a.c(i, j, k);
                if c != ZERO {
                    let kr = pair.get_or_insert_with(|| kron(&pi.matrices[i], &rho.matrices[j]));
                    *mat = &*mat + &kr.scale(c);
                }
            }
        }
    }
    Ok(StarRep { predual: pi.predual.clone(), degree: d, matrices: mats })
}

/// Whether `span{pi(mu) xi : mu in I}` is all of `K`.
pub fn nondegenerate_on_ideal(pi: &StarRep, ideal: &Subspace) -> Result<bool> {
    let r = ideal.ideal_residual(pi.predual.algebra());
    if r >= STRUCT_TOL {
        return Err(Error::NotAnIdeal(r));
    }
    let images: Vec<CMatrix> = ideal.vectors().iter().map(|v| pi.eval(v)).collect();
    Ok(range_rank(&images, pi.scale()) == pi.degree)
}

/// Restriction to the essential subspace `span{pi(mu) xi}`.
pub fn restrict_nondegenerate(pi: &StarRep) -> Result<StarRep> {
    if pi.degree == 0 {
        return Ok(pi.clone());
    }
    let v = column_space(&CMatrix::hstack(&pi.matrices), RANK_RTOL)?;
    let va = v.adjoint();
    let matrices = pi.matrices.iter().map(|m| &(&va * m) * &v).collect();
    Ok(StarRep { predual: pi.predual.clone(), degree: v.cols(), matrices })
}
