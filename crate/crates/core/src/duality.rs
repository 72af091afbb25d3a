//! The duality functor `M -> M^` and everything built from it.
//!
//! `M_*^0` is the common kernel of the irreducible non-standard
//! representations of the predual; `M^` is the block algebra over the
//! irreducible representations that do not vanish on it, and
//! `Phi: M_* -> M^` is their direct sum. `Delta^` and `kappa^` are the unique
//! linear maps with `Delta^ Phi = Phi x Phi` and `kappa^ Phi = Phi kappa~` on
//! `M_*^0`; since `Phi(M_*^0)` spans `M^` they are found by solving a linear
//! system whose consistency is checked rather than assumed.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{hull_of_reps, irreducible_star_reps, Subspace};
use crate::error::{Error, Result};
use crate::groups::{dual_group, function_algebra, is_isomorphic, FiniteGroup};
use crate::hopf::{verify_hopf, verify_morphism, HopfMorphism, HopfReport, HopfVNAlgebra, MorphismReport};
use crate::linalg::{null_space_scaled, rank, solve_linear, CMatrix, SolveMode, C64, ONE, RANK_RTOL, STRUCT_TOL, ZERO};
use crate::predual::{build_predual, PredualAlgebra};
use crate::reps::{is_standard, Standardness, StarRep};

/// Residuals recorded while building a dual.
#[derive(Clone, Debug, Serialize)]
pub struct DualResiduals {
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub phi_homomorphism: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub phi_star: f64,
    /// Rank of `Phi` restricted to `M_*^0`; equals `dim M^`.
    pub phi_span_rank: usize,
    pub phi_rank: usize,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub ideal: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub delta_extension: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_invariance: f64,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub kappa_extension: f64,
    /// Largest standardness residual among the standard irreducibles.
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub standard_max: f64,
    /// Smallest standardness residual among the non-standard irreducibles.
    #[serde(serialize_with = "crate::json::serialize_f17_opt")]
    pub nonstandard_min: Option<f64>,
    pub hopf: HopfReport,
}

#[derive(Clone, Debug)]
pub struct DualConstruction {
    pub source: Arc<HopfVNAlgebra>,
    pub predual: Arc<PredualAlgebra>,
    /// All irreducible *-representations of the predual.
    pub irreps: Vec<StarRep>,
    pub standardness: Vec<Standardness>,
    pub standard: Vec<usize>,
    pub nonstandard: Vec<usize>,
    /// Irreducibles nonzero on `M_*^0`, in block order of `M^`.
    pub selected: Vec<usize>,
    pub ideal: Subspace,
    pub dual: Arc<HopfVNAlgebra>,
    /// `dim M^ x dim M`, column `j` is `Phi(delta_j)`.
    pub phi: CMatrix,
    pub residuals: DualResiduals,
}

impl DualConstruction {
    /// `Phi^: M^_* -> M`, the transpose of `Phi`.
    pub fn phi_hat(&self) -> CMatrix {
        self.phi.transpose()
    }

    pub fn phi_injective(&self) -> bool {
        self.residuals.phi_rank == self.source.dim()
    }
}

/// `M_*^0` together with the standard / non-standard split of the irreducibles.
pub struct AbsolutelyContinuous {
    pub ideal: Subspace,
    pub irreps: Vec<StarRep>,
    pub standardness: Vec<Standardness>,
    pub standard: Vec<usize>,
    pub nonstandard: Vec<usize>,
}

pub fn absolutely_continuous_ideal(p: &Arc<PredualAlgebra>, seed: u64) -> Result<AbsolutelyContinuous> {
    let a = p.algebra();
    let n = a.dim();
    let irreps: Vec<StarRep> = irreducible_star_reps(a, seed)?
        .iter()
        .map(|r| StarRep::from_algebra_rep(p.clone(), r))
        .collect::<Result<_>>()?;
    let standardness: Vec<Standardness> = irreps.iter().map(|r| is_standard(r, STRUCT_TOL)).collect::<Result<_>>()?;
    let (standard, nonstandard): (Vec<usize>, Vec<usize>) = (0..irreps.len()).partition(|&i| standardness[i].standard);

    let ideal = if nonstandard.is_empty() {
        Subspace::full(n)
    } else {
        // each representation as a linear map C^n -> C^{d^2}
        let mut rows = Vec::new();
        let mut scale: f64 = 0.0;
        for &i in &nonstandard {
            let r = &irreps[i];
            let d = r.degree();
            rows.push(CMatrix::from_fn(d * d, n, |pq, j| r.matrices()[j][(pq / d, pq % d)]));
            scale = r.matrices().iter().map(CMatrix::max_abs).fold(scale, f64::max);
        }
        let ns = null_space_scaled(&CMatrix::vstack(&rows), RANK_RTOL, scale)?;
        Subspace::from_orthonormal(ns, true)
    };
    Ok(AbsolutelyContinuous { ideal, irreps, standardness, standard, nonstandard })
}

fn inconsistent(what: &str, residual: f64) -> Error {
    Error::ExtensionInconsistent(format!("{what}: residual {residual:.3e}"))
}

pub fn dualize(m: Arc<HopfVNAlgebra>, seed: u64) -> Result<DualConstruction> {
    let p = Arc::new(build_predual(m.clone())?);
    let n = m.dim();
    let ac = absolutely_continuous_ideal(&p, seed)?;
    let ideal_residual = ac.ideal.ideal_residual(p.algebra());
    if ideal_residual >= STRUCT_TOL {
        return Err(inconsistent("common kernel is not a *-ideal", ideal_residual));
    }

    let algebra_reps: Vec<_> = ac
        .irreps
        .iter()
        .map(|r| crate::algebra::AlgebraRep::new(r.degree(), r.matrices().to_vec(), true))
        .collect::<Result<_>>()?;
    let vanishing = hull_of_reps(&algebra_reps, &ac.ideal, STRUCT_TOL);
    let selected: Vec<usize> = (0..ac.irreps.len()).filter(|i| !vanishing.contains(i)).collect();
    if let Some(&bad) = selected.iter().find(|i| !ac.standardness[**i].standard) {
        return Err(Error::ExtensionInconsistent(format!(
            "irreducible {bad} is nonzero on the absolutely continuous ideal but not standard"
        )));
    }
    if selected.is_empty() {
        return Err(Error::ExtensionInconsistent("no irreducible survives on the ideal".into()));
    }

    let blocks: Vec<usize> = selected.iter().map(|&i| ac.irreps[i].degree()).collect();
    let big_n: usize = blocks.iter().map(|d| d * d).sum();
    let mut phi = CMatrix::zeros(big_n, n);
    for j in 0..n {
        let mut row = 0;
        for &i in &selected {
            for z in ac.irreps[i].matrices()[j].data() {
                phi[(row, j)] = *z;
                row += 1;
            }
        }
    }

    // (Phi x Phi)(delta_k) = sum_{a,b} c_M(a,b,k) Phi(delta_a) (x) Phi(delta_b)
    let alg = m.algebra();
    let phi_cols = phi.columns();
    let mut kron = CMatrix::zeros(big_n * big_n, n);
    for a in 0..n {
        for b in 0..n {
            for k in 0..n {
                let c = alg.c(a, b, k);
                if c == ZERO {
                    continue;
                }
                for (r, &x) in phi_cols[a].iter().enumerate() {
                    if x == ZERO {
                        continue;
                    }
                    for (s, &y) in phi_cols[b].iter().enumerate() {
                        kron[(r * big_n + s, k)] += c * x * y;
                    }
                }
            }
        }
    }

    let b0 = ac.ideal.basis();
    let phi0 = &phi * b0;
    let phi_span_rank = rank(&phi0, RANK_RTOL)?;
    let phi_rank = rank(&phi, RANK_RTOL)?;
    let exact = SolveMode::Exact { tol: STRUCT_TOL };
    let map_err = |what: &'static str| {
        move |e: Error| match e {
            Error::RankDeficient(r) => inconsistent(what, r),
            other => other,
        }
    };

    let delta_sol =
        solve_linear(&phi0.transpose(), &(&kron * b0).transpose(), exact).map_err(map_err("extension of Phi x Phi"))?;
    let delta_hat = delta_sol.x.transpose();

    let kt = p.kappa_tilde();
    let kappa_invariance = b0.columns().iter().map(|v| ac.ideal.distance(&kt.mul_vec(v))).fold(0.0, f64::max);
    if kappa_invariance >= STRUCT_TOL {
        return Err(inconsistent("kappa~ does not preserve the ideal", kappa_invariance));
    }
    let kappa_sol = solve_linear(&phi0.transpose(), &(&(&phi * &kt) * b0).transpose(), exact)
        .map_err(map_err("extension of Phi kappa~"))?;
    let kappa_hat = kappa_sol.x.transpose();

    let dual = HopfVNAlgebra::new(blocks, None, delta_hat, kappa_hat, format!("{}^", m.label()))?;

    // Phi is a *-homomorphism of M_* into M^
    let pa = p.algebra();
    let da = dual.algebra();
    let mut phi_homomorphism: f64 = 0.0;
    let mut phi_star: f64 = 0.0;
    for i in 0..n {
        let ei = pa.basis_vector(i);
        for j in 0..n {
            let lhs = phi.mul_vec(&pa.mul(&ei, &pa.basis_vector(j)));
            let rhs = da.mul(&phi_cols[i], &phi_cols[j]);
            phi_homomorphism = phi_homomorphism.max(max_diff(&lhs, &rhs));
        }
        phi_star = phi_star.max(max_diff(&phi.mul_vec(&pa.star(&ei)), &da.star(&phi_cols[i])));
    }

    let hopf = verify_hopf(&dual)?;
    if !hopf.passes(STRUCT_TOL) {
        return Err(inconsistent("dual fails the Hopf axioms", hopf.max_residual()));
    }
    let standard_max = ac.standard.iter().map(|&i| ac.standardness[i].residual).fold(0.0, f64::max);
    let nonstandard_min = ac
        .nonstandard
        .iter()
        .map(|&i| ac.standardness[i].residual)
        .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.min(r))));
    let residuals = DualResiduals {
        phi_homomorphism,
        phi_star,
        phi_span_rank,
        phi_rank,
        ideal: ideal_residual,
        delta_extension: delta_sol.residual,
        kappa_invariance,
        kappa_extension: kappa_sol.residual,
        standard_max,
        nonstandard_min,
        hopf,
    };
    Ok(DualConstruction {
        source: m,
        predual: p,
        irreps: ac.irreps,
        standardness: ac.standardness,
        standard: ac.standard,
        nonstandard: ac.nonstandard,
        selected,
        ideal: ac.ideal,
        dual: Arc::new(dual),
        phi,
        residuals,
    })
}

fn max_diff(x: &[C64], y: &[C64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
}

/// `M, M^, M^^, ...` with each stage dualizing the previous one.
pub fn dual_chain(m: Arc<HopfVNAlgebra>, depth: usize, seed: u64) -> Result<Vec<DualConstruction>> {
    let mut out: Vec<DualConstruction> = Vec::with_capacity(depth);
    let mut current = m;
    for _ in 0..depth {
        let dc = dualize(current, seed)?;
        current = dc.dual.clone();
        out.push(dc);
    }
    Ok(out)
}

/// A morphism obtained by solving a defining relation, with its checks.
#[derive(Clone, Debug, Serialize)]
pub struct CheckedMorphism {
    #[serde(skip)]
    pub morphism: HopfMorphism,
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub extension_residual: f64,
    pub rank: usize,
    pub report: MorphismReport,
}

/// Solves `X * lhs = rhs` for `X`, where `lhs` has full row rank.
fn solve_right(lhs: &CMatrix, rhs: &CMatrix, what: &'static str) -> Result<(CMatrix, f64)> {
    let sol =
        solve_linear(&lhs.transpose(), &rhs.transpose(), SolveMode::Exact { tol: STRUCT_TOL }).map_err(
            |e| match e {
                Error::RankDeficient(r) => inconsistent(what, r),
                other => other,
            },
        )?;
    Ok((sol.x.transpose(), sol.residual))
}

fn checked(source: &HopfVNAlgebra, target: &HopfVNAlgebra, phi: CMatrix, residual: f64) -> Result<CheckedMorphism> {
    let morphism = HopfMorphism::new(source, target, phi)?;
    let report = verify_morphism(source, target, &morphism);
    let rank = if morphism.phi.rows() == 0 || morphism.phi.cols() == 0 { 0 } else { rank(&morphism.phi, RANK_RTOL)? };
    Ok(CheckedMorphism { morphism, extension_residual: residual, rank, report })
}

/// For `f: M -> N`, the morphism `f^: N^ -> M^` with `f^ Phi_N = Phi_M f_*`
/// on `N_*^0`.
pub fn dual_morphism(
    f: &HopfMorphism,
    source: &DualConstruction,
    target: &DualConstruction,
) -> Result<CheckedMorphism> {
    let (m, n) = (&source.source, &target.source);
    if f.phi.rows() != n.dim() || f.phi.cols() != m.dim() {
        return Err(Error::DimensionMismatch("morphism does not match the dualized algebras".into()));
    }
    let b0 = target.ideal.basis();
    let lhs = &target.phi * b0;
    let rhs = &(&source.phi * &f.phi.transpose()) * b0;
    let (x, residual) = solve_right(&lhs, &rhs, "dual morphism")?;
    checked(&target.dual, &source.dual, x, residual)
}

/// `D_M: M^^ -> M` from `D_M Phi_{M^} = Phi^_M` on `(M^_*)^0`.
pub fn canonical_d(first: &DualConstruction, second: &DualConstruction) -> Result<CheckedMorphism> {
    if *second.source != *first.dual {
        return Err(Error::MixedParents);
    }
    let b0 = second.ideal.basis();
    let lhs = &second.phi * b0;
    let rhs = &first.phi_hat() * b0;
    let (x, residual) = solve_right(&lhs, &rhs, "canonical map D")?;
    checked(&second.dual, &first.source, x, residual)
}

#[derive(Clone, Debug, Serialize)]
pub struct CanonicalE {
    /// `E_N: N -> N^^` for `N = M^`.
    pub e: CheckedMorphism,
    /// `D_N: N^^ -> N`.
    pub d: CheckedMorphism,
    /// `max |D_N E_N - id_N|`.
    #[serde(serialize_with = "crate::json::serialize_f17")]
    pub composition: f64,
}

/// `E_N` as the dual of `D_M`, checked against `D_N E_N = id_N`.
/// `chain` must hold at least three consecutive dualizations starting at `M`.
pub fn canonical_e(chain: &[DualConstruction]) -> Result<CanonicalE> {
    let [first, second, third, ..] = chain else {
        return Err(Error::DimensionMismatch("need three consecutive dualizations".into()));
    };
    let d_m = canonical_d(first, second)?;
    let e = dual_morphism(&d_m.morphism, third, first)?;
    let d = canonical_d(second, third)?;
    let n = first.dual.dim();
    let composition = (&(&d.morphism.phi * &e.morphism.phi) - &CMatrix::identity(n)).max_abs();
    Ok(CanonicalE { e, d, composition })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum AnnihilatorCheck {
    /// `Phi` is not injective, so the statement does not apply.
    NotApplicable {
        phi_rank: usize,
        #[serde(serialize_with = "crate::json::serialize_f17")]
        raw_residual: f64,
    },
    Verified {
        annihilator_dim: usize,
        #[serde(serialize_with = "crate::json::serialize_f17")]
        residual: f64,
    },
    Failed {
        annihilator_dim: usize,
        #[serde(serialize_with = "crate::json::serialize_f17")]
        residual: f64,
    },
}

/// Whether `(M_*^0)^perp` is a two-sided ideal of `M`, when `Phi` is injective.
/// The closure residual is computed in every case.
pub fn annihilator_ideal_check(dc: &DualConstruction) -> Result<AnnihilatorCheck> {
    let m = &dc.source;
    let a = m.algebra();
    let n = m.dim();
    // x in the annihilator iff mu(x) = sum_j mu_j x_j = 0 for mu in the ideal
    let perp = if dc.ideal.dim() == 0 {
        CMatrix::identity(n)
    } else {
        null_space_scaled(&dc.ideal.basis().transpose(), RANK_RTOL, 1.0)?
    };
    let cols = perp.columns();
    let annihilator_dim = cols.len();
    let mut residual: f64 = 0.0;
    let in_perp = |v: &[C64]| -> f64 {
        dc.ideal
            .basis()
            .columns()
            .iter()
            .map(|mu| mu.iter().zip(v).map(|(p, q)| p * q).sum::<C64>().norm())
            .fold(0.0, f64::max)
    };
    for x in &cols {
        for i in 0..n {
            let e = a.basis_vector(i);
            residual = residual.max(in_perp(&a.mul(&e, x))).max(in_perp(&a.mul(x, &e)));
        }
    }
    Ok(if !dc.phi_injective() {
        AnnihilatorCheck::NotApplicable { phi_rank: dc.residuals.phi_rank, raw_residual: residual }
    } else if residual < STRUCT_TOL {
        AnnihilatorCheck::Verified { annihilator_dim, residual }
    } else {
        AnnihilatorCheck::Failed { annihilator_dim, residual }
    })
}

/// Group-level corroboration of a reflexivity verdict.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StructuralVerdict {
    /// `"commutative"` or `"cocommutative"`.
    pub kind: &'static str,
    pub holds: bool,
    pub group_order: Option<usize>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Reflexivity {
    pub reflexive: bool,
    pub signature: Vec<usize>,
    pub double_dual_signature: Vec<usize>,
    pub d: CheckedMorphism,
    pub structural: Option<StructuralVerdict>,
}

/// Reflexivity of `first.source`, decided by whether `D_M` is a Hopf
/// isomorphism. `second` must dualize `first.dual`.
pub fn reflexivity_of(first: &DualConstruction, second: &DualConstruction, seed: u64) -> Result<Reflexivity> {
    let m = &first.source;
    let mm = &second.dual;
    let d = canonical_d(first, second)?;
    let reflexive = mm.dim() == m.dim() && d.rank == m.dim() && d.report.passes(STRUCT_TOL);
    let structural = if m.is_commutative() {
        Some(compare_groups("commutative", reconstruct_group(m), reconstruct_group(mm)))
    } else if m.is_cocommutative(STRUCT_TOL) {
        let mut v = compare_groups("cocommutative", group_like_unitaries(m, seed), group_like_unitaries(mm, seed));
        if m.signature() != mm.signature() {
            v.holds = false;
            v.detail = Some("block signatures differ".into());
        }
        Some(v)
    } else {
        None
    };
    Ok(Reflexivity { reflexive, signature: m.signature(), double_dual_signature: mm.signature(), d, structural })
}

fn compare_groups(kind: &'static str, a: Result<FiniteGroup>, b: Result<FiniteGroup>) -> StructuralVerdict {
    match (a, b) {
        (Ok(g), Ok(h)) => {
            let holds = is_isomorphic(&g, &h);
            StructuralVerdict {
                kind,
                holds,
                group_order: Some(g.order()),
                detail: (!holds).then(|| format!("groups of order {} and {} are not isomorphic", g.order(), h.order())),
            }
        }
        (Err(e), _) | (_, Err(e)) => {
            StructuralVerdict { kind, holds: false, group_order: None, detail: Some(e.to_string()) }
        }
    }
}

pub fn is_reflexive(m: Arc<HopfVNAlgebra>, seed: u64) -> Result<Reflexivity> {
    let chain = dual_chain(m, 2, seed)?;
    reflexivity_of(&chain[0], &chain[1], seed)
}

#[derive(Clone, Debug, Serialize)]
pub struct TripleDual {
    pub holds: bool,
    pub dual_signature: Vec<usize>,
    pub triple_dual_signature: Vec<usize>,
    /// Reflexivity of `M^`, whose canonical map compares `M^^^` with `M^`.
    pub dual_reflexivity: Reflexivity,
}

/// `M^^^ = M^` via the canonical map `D_{M^}`. `chain` must start at `M`
/// and hold at least three dualizations.
pub fn triple_dual_of(chain: &[DualConstruction], seed: u64) -> Result<TripleDual> {
    let [first, second, third, ..] = chain else {
        return Err(Error::DimensionMismatch("need three consecutive dualizations".into()));
    };
    let r = reflexivity_of(second, third, seed)?;
    Ok(TripleDual {
        holds: r.reflexive,
        dual_signature: first.dual.signature(),
        triple_dual_signature: third.dual.signature(),
        dual_reflexivity: r,
    })
}

pub fn triple_dual_check(m: Arc<HopfVNAlgebra>, seed: u64) -> Result<TripleDual> {
    triple_dual_of(&dual_chain(m, 3, seed)?, seed)
}

/// The group `G` with `M = C(G)`, read off the spectrum of a commutative `M`.
///
/// In block form a commutative algebra has only `1 x 1` blocks, so its
/// characters are the coordinate functionals; `Delta` transposes to the
/// product of characters and `kappa` to inversion.
pub fn reconstruct_group(m: &HopfVNAlgebra) -> Result<FiniteGroup> {
    if !m.is_commutative() {
        return Err(Error::NotCommutative(m.algebra().commutator_residual()));
    }
    let n = m.dim();
    let point = |v: &[C64]| -> Option<usize> {
        let u = (0..n).max_by(|&a, &b| v[a].norm().total_cmp(&v[b].norm()))?;
        let off =
            v.iter().enumerate().map(|(k, z)| if k == u { (z - ONE).norm() } else { z.norm() }).fold(0.0, f64::max);
        (off < 1e-7).then_some(u)
    };
    let delta = m.delta();
    let mut table = vec![vec![0; n]; n];
    for s in 0..n {
        for t in 0..n {
            let v: Vec<C64> = (0..n).map(|j| delta[(s * n + t, j)]).collect();
            table[s][t] =
                point(&v).ok_or_else(|| Error::NotAGroup(format!("(s{s} x s{t}) Delta is not a character")))?;
        }
    }
    let g = FiniteGroup::from_table(format!("spec({})", m.label()), table, (0..n).map(|k| format!("s{k}")).collect())?;
    let k = m.kappa();
    for s in 0..n {
        let v: Vec<C64> = (0..n).map(|j| k[(s, j)]).collect();
        if point(&v) != Some(g.inv(s)) {
            return Err(Error::NotAGroup(format!("kappa does not invert s{s}")));
        }
    }
    Ok(g)
}

/// The unitaries `x` with `Delta x = x (x) x` and `kappa x = x*`, as a group.
///
/// Such an `x` is a *-character of the predual, so the candidates are the
/// one-dimensional irreducible *-representations.
pub fn group_like_unitaries(m: &HopfVNAlgebra, seed: u64) -> Result<FiniteGroup> {
    let p = build_predual(Arc::new(m.clone()))?;
    let unit = m.unit();
    let candidates: Vec<Vec<C64>> = irreducible_star_reps(p.algebra(), seed)?
        .iter()
        .filter(|r| r.degree() == 1)
        .map(|r| r.matrices().iter().map(|x| x[(0, 0)]).collect::<Vec<C64>>())
        .filter(|x| {
            let xs = m.star(x);
            max_diff(&m.mul(&xs, x), &unit) < 1e-7 && max_diff(&m.kappa_of(x), &xs) < 1e-7
        })
        .collect();
    let k = candidates.len();
    let find = |v: &[C64]| candidates.iter().position(|c| max_diff(c, v) < 1e-7);
    let mut table = vec![vec![0; k]; k];
    for a in 0..k {
        for b in 0..k {
            table[a][b] = find(&m.mul(&candidates[a], &candidates[b]))
                .ok_or_else(|| Error::NotAGroup("group-like unitaries not closed under products".into()))?;
        }
    }
    FiniteGroup::from_table(format!("G({})", m.label()), table, (0..k).map(|i| format!("u{i}")).collect())
}

#[derive(Clone, Debug)]
pub struct Pontryagin {
    pub reconstructed: FiniteGroup,
    pub dual_group: FiniteGroup,
    pub isomorphic: bool,
}

/// Reconstructs the spectrum group of `C(G)^` and compares it with the
/// character group of `G`.
pub fn pontryagin(g: &FiniteGroup, seed: u64) -> Result<Pontryagin> {
    let dual_group = dual_group(g)?;
    let dc = dualize(Arc::new(function_algebra(g)), seed)?;
    let reconstructed = reconstruct_group(&dc.dual)?;
    let isomorphic = is_isomorphic(&reconstructed, &dual_group);
    Ok(Pontryagin { reconstructed, dual_group, isomorphic })
}
