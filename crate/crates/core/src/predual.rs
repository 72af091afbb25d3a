//! The predual `M_*` as a convolution *-algebra.
//!
//! `M_*` is identified with the dual basis `delta_i` of `M`'s basis. The
//! product `(mu nu)(x) = (mu (x) nu)(Delta x)` gives structure constants
//! `c[i][j][k] = Delta[(i, j), k]`, and the involution is
//! `mu*(x) = conj(mu(kappa(x)*))`. No counit is assumed, so `M_*` may lack
//! a unit.

use std::sync::Arc;

use crate::algebra::FinStarAlgebra;
use crate::error::{Error, Result};
use crate::hopf::HopfVNAlgebra;
use crate::linalg::{cdot, CMatrix, C64, ZERO};

#[derive(Clone, Debug)]
pub struct PredualAlgebra {
    parent: Arc<HopfVNAlgebra>,
    algebra: FinStarAlgebra,
}

impl PredualAlgebra {
    pub fn parent(&self) -> &Arc<HopfVNAlgebra> {
        &self.parent
    }

    pub fn algebra(&self) -> &FinStarAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `mu -> mu o kappa`, as a matrix on dual coordinates.
    pub fn kappa_tilde(&self) -> CMatrix {
        self.parent.kappa().transpose()
    }

    /// `mu(x)` for coordinates of `mu` and `x`.
    pub fn pair(mu: &[C64], x: &[C64]) -> C64 {
        mu.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

pub fn build_predual(m: Arc<HopfVNAlgebra>) -> Result<PredualAlgebra> {
    let n = m.dim();
    let mut structure = vec![ZERO; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                structure[(i * n + j) * n + k] = m.delta()[(i * n + j, k)];
            }
        }
    }
    // coords(mu*) = (conj(S) K)^T conj(coords(mu))
    let star = (&m.algebra().star_matrix().conj() * m.kappa()).transpose();
    let labels = m.algebra().labels().iter().map(|l| format!("w[{l}]")).collect();
    let bare = FinStarAlgebra::new(labels, structure, None, star)?;
    let unit = bare.find_unit();
    let algebra =
        FinStarAlgebra::new(bare.labels().to_vec(), bare.structure().to_vec(), unit, bare.star_matrix().clone())?;
    Ok(PredualAlgebra { parent: m, algebra })
}

/// `mu_xy(a) = <a x, y>` for `x, y` in `H`; linear in `x`, antilinear in `y`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientFunctional {
    pub x: Vec<C64>,
    pub y: Vec<C64>,
    pub coords: Vec<C64>,
}

pub fn coefficient(m: &HopfVNAlgebra, x: &[C64], y: &[C64]) -> Result<CoefficientFunctional> {
    let h = m.hilbert_dim();
    if x.len() != h || y.len() != h {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {} and {} on a space of dimension {h}",
            x.len(),
            y.len()
        )));
    }
    let coords = (0..m.dim())
        .map(|i| {
            let a = m.concrete(&m.algebra().basis_vector(i));
            cdot(y, &a.mul_vec(x))
        })
        .collect();
    Ok(CoefficientFunctional { x: x.to_vec(), y: y.to_vec(), coords })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{verify_star_algebra, DEFAULT_SEED};
    use crate::groups::{cyclic, function_algebra, group_vn_algebra, symmetric, twisted_hopf};
    use crate::linalg::{random_complex, vec_max_abs, vec_sub, ONE, STRUCT_TOL};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn predual_of_function_algebra_is_group_algebra() {
        let g = symmetric(3).unwrap();
        let p = build_predual(Arc::new(function_algebra(&g))).unwrap();
        assert!(verify_star_algebra(p.algebra()).passes(STRUCT_TOL));
        for s in 0..6 {
            for t in 0..6 {
                for k in 0..6 {
                    let expect = if k == g.mul(s, t) { ONE } else { ZERO };
                    assert_eq!(p.algebra().c(s, t, k), expect);
                }
            }
        }
        let u = p.algebra().unit().unwrap();
        assert!((u[g.identity()] - ONE).norm() < 1e-12);
    }

    #[test]
    fn twisted_predual_has_group_star() {
        let n = 5;
        let p = build_predual(Arc::new(twisted_hopf(n).unwrap())).unwrap();
        let a = p.algebra();
        assert!(verify_star_algebra(a).passes(STRUCT_TOL));
        for t in 0..n {
            let s = a.star(&a.basis_vector(t));
            assert!((s[(n - t) % n] - ONE).norm() < 1e-14);
        }
    }

    #[test]
    fn predual_of_group_vn_is_pointwise() {
        let m = Arc::new(group_vn_algebra(&cyclic(4).unwrap(), DEFAULT_SEED).unwrap());
        let p = build_predual(m.clone()).unwrap();
        assert!(p.algebra().is_commutative(1e-9));
        // evaluation at lambda(t): (mu nu)(lambda(t)) = mu(lambda(t)) nu(lambda(t))
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mu: Vec<C64> = (0..4).map(|_| random_complex(&mut rng)).collect();
        let nu: Vec<C64> = (0..4).map(|_| random_complex(&mut rng)).collect();
        let prod = p.algebra().mul(&mu, &nu);
        let chars =
            crate::algebra::irreducible_star_reps(&crate::groups::group_algebra(&cyclic(4).unwrap()), DEFAULT_SEED)
                .unwrap();
        for t in 0..4 {
            let lam: Vec<C64> = chars.iter().map(|c| c.matrices()[t][(0, 0)]).collect();
            let lhs = PredualAlgebra::pair(&prod, &lam);
            let rhs = PredualAlgebra::pair(&mu, &lam) * PredualAlgebra::pair(&nu, &lam);
            assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn coefficient_examples() {
        let g = cyclic(3).unwrap();
        let m = function_algebra(&g);
        let x = vec![C64::new(1.0, 2.0), ONE, C64::new(0.0, -1.0)];
        let mu = coefficient(&m, &x, &x).unwrap();
        let one = m.unit();
        let norm2: f64 = x.iter().map(|z| z.norm_sqr()).sum();
        assert!((PredualAlgebra::pair(&mu.coords, &one) - C64::new(norm2, 0.0)).norm() < 1e-12);
        let e1 = vec![ZERO, ONE, ZERO];
        assert_eq!(coefficient(&m, &e1, &e1).unwrap().coords, e1);
        assert!(matches!(coefficient(&m, &e1, &[ONE]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn mu_series_identity() {
        let m = group_vn_algebra(&symmetric(3).unwrap(), DEFAULT_SEED).unwrap();
        let h = m.hilbert_dim();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rv = |rng: &mut ChaCha8Rng, k: usize| -> Vec<C64> { (0..k).map(|_| random_complex(rng)).collect() };
        for _ in 0..5 {
            let (a, b) = (rv(&mut rng, m.dim()), rv(&mut rng, m.dim()));
            let (x, y) = (rv(&mut rng, h), rv(&mut rng, h));
            let lhs = PredualAlgebra::pair(&coefficient(&m, &x, &y).unwrap().coords, &m.mul(&a, &b));
            let mut rhs = ZERO;
            for alpha in 0..h {
                let mut e = vec![ZERO; h];
                e[alpha] = ONE;
                rhs += PredualAlgebra::pair(&coefficient(&m, &e, &y).unwrap().coords, &a)
                    * PredualAlgebra::pair(&coefficient(&m, &x, &e).unwrap().coords, &b);
            }
            assert!((lhs - rhs).norm() < 1e-9);
        }
    }

    #[test]
    fn kappa_tilde_is_star_antihomomorphism() {
        for m in [function_algebra(&symmetric(3).unwrap()), twisted_hopf(5).unwrap()] {
            let p = build_predual(Arc::new(m)).unwrap();
            let a = p.algebra();
            let kt = p.kappa_tilde();
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    let (ei, ej) = (a.basis_vector(i), a.basis_vector(j));
                    let lhs = kt.mul_vec(&a.mul(&ei, &ej));
                    let rhs = a.mul(&kt.mul_vec(&ej), &kt.mul_vec(&ei));
                    assert!(vec_max_abs(&vec_sub(&lhs, &rhs)) < 1e-12);
                }
                let ei = a.basis_vector(i);
                let lhs = kt.mul_vec(&a.star(&ei));
                let rhs = a.star(&kt.mul_vec(&ei));
                assert!(vec_max_abs(&vec_sub(&lhs, &rhs)) < 1e-12);
            }
        }
    }

    #[test]
    fn coefficients_span_predual() {
        let m = group_vn_algebra(&symmetric(3).unwrap(), DEFAULT_SEED).unwrap();
        let h = m.hilbert_dim();
        let mut cols = Vec::new();
        for p in 0..h {
            for q in 0..h {
                let mut x = vec![ZERO; h];
                let mut y = vec![ZERO; h];
                x[p] = ONE;
                y[q] = ONE;
                cols.push(coefficient(&m, &x, &y).unwrap().coords);
            }
        }
        let span = CMatrix::from_columns(m.dim(), &cols);
        assert_eq!(crate::linalg::rank(&span, 1e-9).unwrap(), m.dim());
    }
}
