//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Lines are written straight to the stderr handle so they show up even when
//! the harness captures test output.

use std::io::Write;
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopfdual::algebra::DEFAULT_SEED;
use hopfdual::cli::{self, character_label};
use hopfdual::duality::{
    canonical_e, dual_chain, dual_morphism, dualize, group_like_unitaries, is_reflexive, pontryagin, reconstruct_group,
    triple_dual_check,
};
use hopfdual::groups::{
    cyclic, dihedral, function_algebra, group_vn_algebra, is_isomorphic, product, quaternion8, symmetric, twisted_hopf,
    FiniteGroup,
};
use hopfdual::hopf::{verify_hopf, verify_morphism, HopfMorphism, HopfVNAlgebra};
use hopfdual::linalg::{CMatrix, ONE, ZERO};
use hopfdual::reps::{build_generator, extract_rep, StarRep};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TOL: f64 = 1e-9;
const NONSTANDARD_GAP: f64 = 1e-3;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fleet() -> Vec<FiniteGroup> {
    let mut v: Vec<FiniteGroup> = (2..=8).map(|n| cyclic(n).unwrap()).collect();
    let z2 = cyclic(2).unwrap();
    v.push(product(&z2, &z2).unwrap());
    v.push(product(&z2, &cyclic(4).unwrap()).unwrap());
    v.push(symmetric(3).unwrap());
    v.push(dihedral(4).unwrap());
    v.push(quaternion8().unwrap());
    v.push(symmetric(4).unwrap());
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

/// Block dimensions of `C[G]` from brute-force character theory: the number
/// of blocks is the number of conjugacy classes, the number of 1-dim blocks
/// is `|G / [G, G]|`, and the squares sum to `|G|`. For the fleet this pins
/// the multiset down.
fn oracle_blocks(g: &FiniteGroup) -> (usize, usize, usize) {
    let n = g.order();
    let mut class = vec![usize::MAX; n];
    let mut classes = 0;
    for x in 0..n {
        if class[x] != usize::MAX {
            continue;
        }
        for h in 0..n {
            class[g.mul(g.mul(h, x), g.inv(h))] = classes;
        }
        classes += 1;
    }
    // commutator subgroup: closure of all [a, b]
    let mut sub = vec![false; n];
    for a in 0..n {
        for b in 0..n {
            sub[g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))] = true;
        }
    }
    loop {
        let mut grew = false;
        for a in 0..n {
            for b in 0..n {
                if sub[a] && sub[b] && !sub[g.mul(a, b)] {
                    sub[g.mul(a, b)] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let linear = n / sub.iter().filter(|&&s| s).count();
    (classes, linear, n)
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for g in fleet() {
        for m in [function_algebra(&g), group_vn_algebra(&g, DEFAULT_SEED).map_err(|e| e.to_string())?] {
            let r = verify_hopf(&m).map_err(|e| e.to_string())?;
            ensure(r.passes(TOL), || format!("{} fails: {:.3e}", m.label(), r.max_residual()))?;
            worst = worst.max(r.max_residual());
            count += 1;
        }
    }
    for n in [2, 3, 5, 6] {
        let m = twisted_hopf(n).map_err(|e| e.to_string())?;
        let r = verify_hopf(&m).map_err(|e| e.to_string())?;
        ensure(r.passes(TOL), || format!("{} fails: {:.3e}", m.label(), r.max_residual()))?;
        worst = worst.max(r.max_residual());
        count += 1;
    }
    within(start, Duration::from_secs(60), "axiom suite")?;
    Ok(format!("{count} algebras, worst residual {worst:.2e}, {:.2?}", start.elapsed()))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    for g in fleet() {
        let name = g.name().to_string();
        let err = |e: hopfdual::Error| format!("{name}: {e}");
        let w = group_vn_algebra(&g, DEFAULT_SEED).map_err(err)?;
        let (classes, linear, order) = oracle_blocks(&g);

        let df = dualize(Arc::new(function_algebra(&g)), DEFAULT_SEED).map_err(err)?;
        let sig = df.dual.signature();
        ensure(sig == w.signature(), || format!("{name}: C(G)^ blocks {sig:?} vs W*(G) {:?}", w.signature()))?;
        ensure(
            sig.len() == classes
                && sig.iter().filter(|&&d| d == 1).count() == linear
                && sig.iter().map(|d| d * d).sum::<usize>() == order,
            || format!("{name}: blocks {sig:?} disagree with character theory"),
        )?;
        let likes = group_like_unitaries(&df.dual, DEFAULT_SEED).map_err(err)?;
        ensure(is_isomorphic(&likes, &g), || format!("{name}: group-likes of C(G)^ not isomorphic to G"))?;

        let dw = dualize(Arc::new(w), DEFAULT_SEED).map_err(err)?;
        ensure(dw.dual.signature() == vec![1; order], || format!("{name}: W*(G)^ is not commutative of dim |G|"))?;
        let rec = reconstruct_group(&dw.dual).map_err(err)?;
        ensure(is_isomorphic(&rec, &g), || format!("{name}: spectrum of W*(G)^ not isomorphic to G"))?;
    }
    let s3 = dualize(Arc::new(function_algebra(&symmetric(3).unwrap())), DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(s3.dual.signature() == vec![1, 1, 2], || "S3 dual blocks".into())?;
    let q8 = dualize(Arc::new(function_algebra(&quaternion8().unwrap())), DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(q8.dual.signature() == vec![1, 1, 1, 1, 2], || "Q8 dual blocks".into())?;
    within(start, Duration::from_secs(120), "duality table")?;
    Ok(format!("{} groups both directions, {:.2?}", fleet().len(), start.elapsed()))
}

fn criterion_3() -> Check {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for g in fleet() {
        for m in [function_algebra(&g), group_vn_algebra(&g, DEFAULT_SEED).map_err(|e| e.to_string())?] {
            let label = m.label().to_string();
            let r = is_reflexive(Arc::new(m), DEFAULT_SEED).map_err(|e| format!("{label}: {e}"))?;
            let res = r.d.report.max_residual().max(r.d.extension_residual);
            ensure(r.reflexive && res < TOL, || format!("{label}: reflexive {} residual {res:.3e}", r.reflexive))?;
            ensure(r.structural.as_ref().is_some_and(|s| s.holds), || format!("{label}: group comparison failed"))?;
            worst = worst.max(res);
            count += 1;
        }
    }
    Ok(format!("{count} algebras reflexive, worst D residual {worst:.2e}"))
}

fn criterion_4() -> Check {
    let mut count = 0;
    let specs = [
        r#"{"type":"cyclic","n":2}"#,
        r#"{"type":"cyclic","n":3}"#,
        r#"{"type":"cyclic","n":4}"#,
        r#"{"type":"cyclic","n":5}"#,
        r#"{"type":"cyclic","n":6}"#,
        r#"{"type":"cyclic","n":7}"#,
        r#"{"type":"cyclic","n":8}"#,
        r#"{"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":2}]}"#,
        r#"{"type":"product","factors":[{"type":"cyclic","n":2},{"type":"cyclic","n":4}]}"#,
    ];
    for s in specs {
        let mut sink = Vec::new();
        let code = cli::run(["hopfdual", "pontryagin", "--spec", s], &mut sink);
        ensure(code == 0, || format!("pontryagin {s} exited {code}"))?;
        count += 1;
    }
    let z6 = cyclic(6).unwrap();
    let p = pontryagin(&z6, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(&p.reconstructed, &z6), || "dual of Z6 is not Z6".into())?;
    let z2z4 = product(&cyclic(2).unwrap(), &cyclic(4).unwrap()).unwrap();
    let p = pontryagin(&z2z4, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(is_isomorphic(&p.reconstructed, &z2z4), || "dual of Z2xZ4 is not Z2xZ4".into())?;
    ensure(!is_isomorphic(&p.reconstructed, &cyclic(8).unwrap()), || "Z2xZ4 confused with Z8".into())?;
    Ok(format!("{count} abelian groups exit 0; Z6 and Z2xZ4 self-dual"))
}

fn criterion_5() -> Check {
    let chain = dual_chain(Arc::new(twisted_hopf(5).unwrap()), 2, DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(chain[0].ideal.dim() == 1, || format!("Z5: dim M_*^0 = {}", chain[0].ideal.dim()))?;
    ensure(chain[0].dual.dim() == 1, || format!("Z5: dim M^ = {}", chain[0].dual.dim()))?;
    let r5 = is_reflexive(Arc::new(twisted_hopf(5).unwrap()), DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(!r5.reflexive, || "twisted Z5 reported reflexive".into())?;
    let r2 = is_reflexive(Arc::new(twisted_hopf(2).unwrap()), DEFAULT_SEED).map_err(|e| e.to_string())?;
    ensure(r2.reflexive, || "twisted Z2 not reflexive".into())?;

    let n = 6;
    let d6 = dualize(Arc::new(twisted_hopf(n).unwrap()), DEFAULT_SEED).map_err(|e| e.to_string())?;
    let mut found: Vec<usize> = d6
        .standard
        .iter()
        .map(|&i| {
            let v: Vec<_> = d6.irreps[i].matrices().iter().map(|m| m[(0, 0)]).collect();
            character_label(&v, n)
        })
        .collect();
    found.sort_unstable();
    // chi_s* chi_s = chi_{2s} under the twisted involution: standard iff 2s = 0 mod n
    let expected: Vec<usize> = (0..n).filter(|s| (2 * s) % n == 0).collect();
    ensure(found == expected, || format!("Z6 standard characters {found:?}, expected {expected:?}"))?;
    Ok(format!("Z5: dim M_*^0 = 1, dim M^ = 1, not reflexive; Z2 reflexive; Z6 standard {found:?}"))
}

fn standard_irreps(m: HopfVNAlgebra) -> Result<(Vec<StarRep>, Vec<f64>), String> {
    let dc = dualize(Arc::new(m), DEFAULT_SEED).map_err(|e| e.to_string())?;
    let std = dc.standard.iter().map(|&i| dc.irreps[i].clone()).collect();
    let non = dc.nonstandard.iter().map(|&i| dc.standardness[i].residual).collect();
    Ok((std, non))
}

fn criterion_6() -> Check {
    let mut pool = Vec::new();
    let mut nonstandard = Vec::new();
    for g in [
        cyclic(3).unwrap(),
        cyclic(4).unwrap(),
        symmetric(3).unwrap(),
        dihedral(4).unwrap(),
        quaternion8().unwrap(),
        symmetric(4).unwrap(),
    ] {
        for m in [function_algebra(&g), group_vn_algebra(&g, DEFAULT_SEED).map_err(|e| e.to_string())?] {
            let (s, _) = standard_irreps(m)?;
            pool.extend(s);
        }
    }
    for n in [3, 5, 6] {
        let (s, non) = standard_irreps(twisted_hopf(n).unwrap())?;
        pool.extend(s);
        nonstandard.extend(non);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xACCE);
    pool.shuffle(&mut rng);
    let picked = &pool[..24.min(pool.len())];
    ensure(picked.len() >= 20, || format!("only {} standard irreducibles", picked.len()))?;
    let mut worst: f64 = 0.0;
    for pi in picked {
        let g = build_generator(pi).map_err(|e| e.to_string())?;
        let r = g.residuals;
        ensure(r.unitarity < TOL && r.pairing < TOL && r.membership < TOL && r.commutant < TOL, || {
            format!("generator residuals {r:?}")
        })?;
        let back = extract_rep(&g);
        let rt = back.rep.matrices().iter().zip(pi.matrices()).map(|(a, b)| (a - b).max_abs()).fold(0.0, f64::max);
        ensure(rt < TOL, || format!("round trip error {rt:.3e}"))?;
        worst = worst.max(r.max()).max(rt);
    }
    let min_gap = nonstandard.iter().copied().fold(f64::INFINITY, f64::min);
    ensure(!nonstandard.is_empty() && min_gap > NONSTANDARD_GAP, || format!("non-standard residual {min_gap:.3e}"))?;
    Ok(format!(
        "{} generators, worst residual {worst:.2e}; {} non-standard reps, min residual {min_gap:.2e}",
        picked.len(),
        nonstandard.len()
    ))
}

fn criterion_7() -> Check {
    let cases = [
        function_algebra(&symmetric(3).unwrap()),
        group_vn_algebra(&cyclic(6).unwrap(), DEFAULT_SEED).map_err(|e| e.to_string())?,
        twisted_hopf(5).unwrap(),
    ];
    let mut out = Vec::new();
    for m in cases {
        let label = m.label().to_string();
        let t = triple_dual_check(Arc::new(m), DEFAULT_SEED).map_err(|e| format!("{label}: {e}"))?;
        ensure(t.holds && t.dual_signature == t.triple_dual_signature, || format!("{label}: triple dual differs"))?;
        out.push(format!("{label} {:?}", t.dual_signature));
    }
    Ok(out.join(", "))
}

/// Pullback `C(Z_a) -> C(Z_b)` along reduction mod `a`.
fn pullback(b: usize, a: usize) -> CMatrix {
    CMatrix::from_fn(b, a, |t, s| if t % a == s { ONE } else { ZERO })
}

fn criterion_8() -> Check {
    let e = |e: hopfdual::Error| e.to_string();
    let (c2, c4, c8) = (
        function_algebra(&cyclic(2).unwrap()),
        function_algebra(&cyclic(4).unwrap()),
        function_algebra(&cyclic(8).unwrap()),
    );
    let f = HopfMorphism::new(&c2, &c4, pullback(4, 2)).map_err(e)?;
    let g = HopfMorphism::new(&c4, &c8, pullback(8, 4)).map_err(e)?;
    let gf = g.after(&f);
    for (s, t, h) in [(&c2, &c4, &f), (&c4, &c8, &g), (&c2, &c8, &gf)] {
        ensure(verify_morphism(s, t, h).passes(TOL), || "pullback is not a Hopf morphism".into())?;
    }
    let (d2, d4, d8) = (
        dualize(Arc::new(c2.clone()), DEFAULT_SEED).map_err(e)?,
        dualize(Arc::new(c4), DEFAULT_SEED).map_err(e)?,
        dualize(Arc::new(c8), DEFAULT_SEED).map_err(e)?,
    );
    let fh = dual_morphism(&f, &d2, &d4).map_err(e)?;
    let gh = dual_morphism(&g, &d4, &d8).map_err(e)?;
    let gfh = dual_morphism(&gf, &d2, &d8).map_err(e)?;
    for m in [&fh, &gh, &gfh] {
        ensure(m.report.passes(TOL) && m.extension_residual < TOL, || {
            format!("dual morphism residual {:?}", m.report)
        })?;
    }
    let reversal = (&gfh.morphism.phi - &fh.morphism.after(&gh.morphism).phi).max_abs();
    ensure(reversal < TOL, || format!("composition reversal residual {reversal:.3e}"))?;
    let id = dual_morphism(&HopfMorphism::identity(&c2), &d2, &d2).map_err(e)?;
    let id_res = (&id.morphism.phi - &CMatrix::identity(d2.dual.dim())).max_abs();
    ensure(id_res < TOL, || format!("dual of identity residual {id_res:.3e}"))?;

    let chain = dual_chain(Arc::new(function_algebra(&symmetric(3).unwrap())), 3, DEFAULT_SEED).map_err(e)?;
    let de = canonical_e(&chain).map_err(e)?;
    ensure(de.composition < TOL, || format!("D E - id = {:.3e}", de.composition))?;
    ensure(de.e.report.passes(TOL) && de.d.report.passes(TOL), || "E or D is not a Hopf morphism".into())?;
    Ok(format!("reversal {reversal:.2e}, identity {id_res:.2e}, D E - id {:.2e}", de.composition))
}

fn run_report(args: &[&str], out: &std::path::Path) -> Result<Vec<u8>, String> {
    let mut full = vec!["hopfdual"];
    full.extend_from_slice(args);
    let out_s = out.to_str().unwrap();
    full.extend(["--out", out_s]);
    let mut sink = Vec::new();
    let code = cli::run(full, &mut sink);
    ensure(code == 0, || format!("{args:?} exited {code}"))?;
    std::fs::read(out).map_err(|e| e.to_string())
}

fn criterion_9() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let cases: [&[&str]; 4] = [
        &["dualize", "--spec", r#"{"type":"sym","n":3}"#, "--triple", "--reflexive"],
        &["dualize", "--spec", r#"{"type":"quaternion"}"#, "--side", "groupvn", "--double", "--reflexive"],
        &["dualize", "--spec", r#"{"type":"twisted","n":5}"#, "--double", "--reflexive"],
        &["fleet", "--spec", r#"[{"type":"cyclic","n":4},{"type":"dihedral","n":4}]"#],
    ];
    for (i, args) in cases.iter().enumerate() {
        let a = run_report(&[args, &["--seed", "7"][..]].concat(), &dir.path().join(format!("{i}a.json")))?;
        let b = run_report(&[args, &["--seed", "7"][..]].concat(), &dir.path().join(format!("{i}b.json")))?;
        ensure(a == b, || format!("{args:?}: reports differ for equal seeds"))?;
        let c = run_report(&[args, &["--seed", "12345"][..]].concat(), &dir.path().join(format!("{i}c.json")))?;
        let (x, y): (serde_json::Value, serde_json::Value) =
            (serde_json::from_slice(&a).unwrap(), serde_json::from_slice(&c).unwrap());
        ensure(structural_summary(&x) == structural_summary(&y), || {
            format!("{args:?}: signatures or verdicts depend on the seed")
        })?;
    }
    Ok(format!("{} commands byte-identical under equal seeds, stable across seeds", cases.len()))
}

/// Signatures and verdicts only.
fn structural_summary(v: &serde_json::Value) -> Vec<String> {
    let mut out = Vec::new();
    fn walk(v: &serde_json::Value, path: &str, out: &mut Vec<String>) {
        match v {
            serde_json::Value::Object(m) => {
                for (k, x) in m {
                    let keep = k.contains("signature") || k == "reflexive" || k == "holds" || k == "ideal_dim";
                    if keep {
                        out.push(format!("{path}/{k}={x}"));
                    } else {
                        walk(x, &format!("{path}/{k}"), out);
                    }
                }
            }
            serde_json::Value::Array(a) => {
                for (i, x) in a.iter().enumerate() {
                    walk(x, &format!("{path}/{i}"), out);
                }
            }
            _ => {}
        }
    }
    walk(v, "", &mut out);
    out
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("axiom suite over the fleet", criterion_1),
        ("duality table C(G) <-> W*(G)", criterion_2),
        ("reflexivity via D_M", criterion_3),
        ("Pontryagin duality", criterion_4),
        ("twisted counterexample", criterion_5),
        ("standard reps have generators", criterion_6),
        ("triple dual equals dual", criterion_7),
        ("functor laws and D E = id", criterion_8),
        ("determinism", criterion_9),
    ];
    let mut failed = Vec::new();
    let mut err = std::io::stderr().lock();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let line = match check() {
            Ok(detail) => format!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("FAIL criterion {}: {name} ({why})", i + 1)
            }
        };
        writeln!(err, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
