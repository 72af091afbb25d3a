//! Finite groups and their two Hopf-von Neumann algebras.
//!
//! In finite dimensions all the classical completions coincide: the measure
//! algebra, `L_1(G)`, `C*(G)`, `C*_r(G)` and `W*(G)` are the group algebra
//! `C[G]`; `C_0(G)`, `C_b(G)`, `L_inf(G)` and `C_0(G)**` are the pointwise
//! algebra `C(G)`; the Fourier and Fourier-Stieltjes algebras are the
//! pointwise functions viewed as the predual of `C[G]`.

use std::collections::VecDeque;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::algebra::{irreducible_star_reps, FinStarAlgebra};
use crate::error::{Error, Result};
use crate::hopf::HopfVNAlgebra;
use crate::linalg::{solve_linear, CMatrix, SolveMode, C64, ONE, STRUCT_TOL, ZERO};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates a Cayley table (exhaustive associativity, identity, inverses).
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        let fail = |m: String| Err(Error::NotAGroup(m));
        if n == 0 || labels.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return fail("malformed Cayley table".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return fail(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        let Some(identity) = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x)) else {
            return fail("no identity element".into());
        };
        let mut inverse = Vec::with_capacity(n);
        for (a, row) in table.iter().enumerate() {
            match (0..n).find(|&b| row[b] == identity && table[b][a] == identity) {
                Some(b) => inverse.push(b),
                None => return fail(format!("element {a} has no inverse")),
            }
        }
        Ok(FiniteGroup { name: name.into(), table, identity, inverse, labels })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// Largest `k` with `g^k = e` for all `g`, i.e. the lcm of element orders.
    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, lcm)
    }

    fn closure(&self, gens: &[usize]) -> Vec<bool> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// A small generating set, chosen greedily by decreasing element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&a| (std::cmp::Reverse(self.element_order(a)), a));
        let mut gens = Vec::new();
        let mut span = self.closure(&gens);
        for a in order {
            if !span[a] {
                gens.push(a);
                span = self.closure(&gens);
            }
        }
        gens
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub fn cyclic(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadSpec("cyclic group of order 0".into()));
    }
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(format!("Z{n}"), table, (0..n).map(|a| a.to_string()).collect())
}

pub fn product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (m, n) = (g.order(), h.order());
    let table =
        (0..m * n).map(|x| (0..m * n).map(|y| g.mul(x / n, y / n) * n + h.mul(x % n, y % n)).collect()).collect();
    let labels = (0..m * n).map(|x| format!("({},{})", g.labels[x / n], h.labels[x % n])).collect();
    FiniteGroup::from_table(format!("{}x{}", g.name, h.name), table, labels)
}

/// Dihedral group of order `2n`; element `e * n + k` is `r^k s^e`.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return Err(Error::BadSpec("dihedral group needs n >= 1".into()));
    }
    let idx = |k: usize, e: usize| e * n + k;
    let table = (0..2 * n)
        .map(|x| {
            let (a, e) = (x % n, x / n);
            (0..2 * n)
                .map(|y| {
                    let (b, f) = (y % n, y / n);
                    // s r^b = r^{-b} s
                    let k = if e == 0 { (a + b) % n } else { (a + n - b) % n };
                    idx(k, (e + f) % 2)
                })
                .collect()
        })
        .collect();
    let labels = (0..2 * n).map(|x| if x < n { format!("r{x}") } else { format!("r{}s", x - n) }).collect();
    FiniteGroup::from_table(format!("D{n}"), table, labels)
}

/// Symmetric group on `n <= 4` letters; permutations in lexicographic order,
/// composed right to left.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    if n == 0 || n > 4 {
        return Err(Error::BadSpec(format!("symmetric group S_{n} unsupported (1 <= n <= 4)")));
    }
    let mut perms: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..n {
        let mut next = Vec::new();
        for p in &perms {
            for x in 0..n {
                if !p.contains(&x) {
                    let mut q = p.clone();
                    q.push(x);
                    next.push(q);
                }
            }
        }
        perms = next;
    }
    let pos = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    let table = perms.iter().map(|p| perms.iter().map(|q| pos(&q.iter().map(|&i| p[i]).collect())).collect()).collect();
    let labels = perms.iter().map(|p| p.iter().map(|x| x.to_string()).collect::<String>()).collect();
    FiniteGroup::from_table(format!("S{n}"), table, labels)
}

/// `{±1, ±i, ±j, ±k}`; element `4 * sign + unit`.
pub fn quaternion8() -> Result<FiniteGroup> {
    // unit products: (sign, unit) for 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|x: usize| {
            (0..8)
                .map(|y: usize| {
                    let (s, u) = UNIT[x % 4][y % 4];
                    ((x / 4 + y / 4 + s) % 2) * 4 + u
                })
                .collect()
        })
        .collect();
    let names = ["1", "i", "j", "k"];
    let labels = (0..8).map(|x| format!("{}{}", if x < 4 { "+" } else { "-" }, names[x % 4])).collect();
    FiniteGroup::from_table("Q8", table, labels)
}

/// Group or twisted-algebra description accepted on the command line.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Sym { n: usize },
    Dihedral { n: usize },
    Quaternion,
    Product { factors: Vec<GroupSpec> },
    Twisted { n: usize },
}

impl GroupSpec {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadSpec(e.to_string()))
    }

    /// The group, or `BadSpec` for the twisted (non-group) entry.
    pub fn group(&self) -> Result<FiniteGroup> {
        let bad = |e: Error| match e {
            Error::NotAGroup(m) => Error::BadSpec(m),
            other => other,
        };
        match self {
            GroupSpec::Cyclic { n } => cyclic(*n),
            GroupSpec::Sym { n } => symmetric(*n),
            GroupSpec::Dihedral { n } => dihedral(*n),
            GroupSpec::Quaternion => quaternion8(),
            GroupSpec::Product { factors } => {
                let mut it = factors.iter();
                let first = it.next().ok_or_else(|| Error::BadSpec("empty product".into()))?;
                let mut g = first.group()?;
                for f in it {
                    g = product(&g, &f.group()?)?;
                }
                if g.order() > 64 {
                    return Err(Error::BadSpec(format!("group of order {} is too large", g.order())));
                }
                Ok(g)
            }
            GroupSpec::Twisted { .. } => Err(Error::BadSpec("twisted algebra is not a group".into())),
        }
        .map_err(bad)
    }
}

/// `C[G]` with `delta_s delta_t = delta_st` and `delta_t* = delta_{t^-1}`.
pub fn group_algebra(g: &FiniteGroup) -> FinStarAlgebra {
    let n = g.order();
    let star = CMatrix::from_fn(n, n, |i, j| if i == g.inv(j) { ONE } else { ZERO });
    let mut unit = vec![ZERO; n];
    unit[g.identity()] = ONE;
    FinStarAlgebra::from_rule(
        g.labels().iter().map(|l| format!("d[{l}]")).collect(),
        |s, t| vec![(g.mul(s, t), ONE)],
        Some(unit),
        star,
    )
    .expect("group algebra is well formed")
}

/// `C(G)`: pointwise functions, `Delta e_g = sum_{st=g} e_s (x) e_t`,
/// `kappa e_g = e_{g^-1}`.
pub fn function_algebra(g: &FiniteGroup) -> HopfVNAlgebra {
    let n = g.order();
    let mut delta = CMatrix::zeros(n * n, n);
    for s in 0..n {
        for t in 0..n {
            delta[(s * n + t, g.mul(s, t))] = ONE;
        }
    }
    let kappa = CMatrix::from_fn(n, n, |i, j| if i == g.inv(j) { ONE } else { ZERO });
    HopfVNAlgebra::new(vec![1; n], None, delta, kappa, format!("C({})", g.name()))
        .expect("function algebra is well formed")
}

/// `W*(G)` in block form over the irreducible unitary representations:
/// `Delta lambda(t) = lambda(t) (x) lambda(t)`, `kappa lambda(t) = lambda(t^-1)`.
pub fn group_vn_algebra(g: &FiniteGroup, seed: u64) -> Result<HopfVNAlgebra> {
    let n = g.order();
    let reps = irreducible_star_reps(&group_algebra(g), seed)?;
    let dims: Vec<usize> = reps.iter().map(|r| r.degree()).collect();
    if dims.iter().map(|d| d * d).sum::<usize>() != n {
        return Err(Error::SplitFailure("irreducible unitary representations do not fill C[G]".into()));
    }
    // column t: block coordinates of lambda(t)
    let mut lambda = CMatrix::zeros(n, n);
    for t in 0..n {
        let mut row = 0;
        for r in &reps {
            for z in r.matrices()[t].data() {
                lambda[(row, t)] = *z;
                row += 1;
            }
        }
    }
    let lambda_inv = solve_linear(&lambda, &CMatrix::identity(n), SolveMode::Exact { tol: STRUCT_TOL })?.x;
    let mut images = CMatrix::zeros(n * n, n);
    for t in 0..n {
        for a in 0..n {
            for b in 0..n {
                images[(a * n + b, t)] = lambda[(a, t)] * lambda[(b, t)];
            }
        }
    }
    let delta = &images * &lambda_inv;
    let perm = CMatrix::from_fn(n, n, |i, j| if i == g.inv(j) { ONE } else { ZERO });
    let kappa = &(&lambda * &perm) * &lambda_inv;
    HopfVNAlgebra::new(dims, None, delta, kappa, format!("W*({})", g.name()))
}

/// Pointwise functions on `Z_n` with `C(Z_n)`'s comultiplication, trivial
/// coinvolution, and the twisted involution `e_g* = e_{-g}`.
pub fn twisted_hopf(n: usize) -> Result<HopfVNAlgebra> {
    let z = cyclic(n)?;
    let base = function_algebra(&z);
    let star = CMatrix::from_fn(n, n, |i, j| if i == (n - j) % n { ONE } else { ZERO });
    HopfVNAlgebra::new(vec![1; n], Some(star), base.delta().clone(), CMatrix::identity(n), format!("Tw(Z{n})"))
}

/// A homomorphism `G -> H` sending `gens[i]` to `images[i]`, if one exists.
fn extend_hom(g: &FiniteGroup, h: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = h.identity();
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = v;
                queue.push_back(y);
            } else if map[y] != v {
                return None;
            }
        }
    }
    Some(map)
}

/// An explicit isomorphism `G -> H` found by searching generator images.
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<Vec<usize>> {
    if g.order() != h.order() {
        return None;
    }
    let mut og: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    let mut oh: Vec<usize> = (0..h.order()).map(|a| h.element_order(a)).collect();
    og.sort_unstable();
    oh.sort_unstable();
    if og != oh {
        return None;
    }
    let gens = g.generators();
    let candidates: Vec<Vec<usize>> =
        gens.iter().map(|&s| (0..h.order()).filter(|&t| h.element_order(t) == g.element_order(s)).collect()).collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let images: Vec<usize> = choice.iter().zip(&candidates).map(|(&c, cand)| cand[c]).collect();
        if let Some(map) = extend_hom(g, h, &gens, &images) {
            let mut hit = vec![false; h.order()];
            if map.iter().all(|&v| !std::mem::replace(&mut hit[v], true)) {
                return Some(map);
            }
        }
        // odometer over candidate tuples
        let mut i = 0;
        loop {
            if i == gens.len() {
                return None;
            }
            choice[i] += 1;
            if choice[i] < candidates[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    isomorphism(g, h).is_some()
}

/// Unitary characters of an abelian group under pointwise multiplication.
pub fn dual_group(g: &FiniteGroup) -> Result<FiniteGroup> {
    if !g.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let chars = characters(g);
    let n = chars.len();
    let find = |v: &[C64]| chars.iter().position(|c| c.iter().zip(v).all(|(a, b)| (a - b).norm() < 1e-9));
    let mut table = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let prod: Vec<C64> = chars[a].iter().zip(&chars[b]).map(|(x, y)| x * y).collect();
            table[a][b] = find(&prod).ok_or_else(|| Error::NotAGroup("characters not closed".into()))?;
        }
    }
    FiniteGroup::from_table(format!("dual({})", g.name()), table, (0..n).map(|i| format!("chi{i}")).collect())
}

/// All homomorphisms `G -> U(1)` as value vectors, trivial character first.
pub fn characters(g: &FiniteGroup) -> Vec<Vec<C64>> {
    let gens = g.generators();
    let orders: Vec<usize> = gens.iter().map(|&s| g.element_order(s)).collect();
    let mut out = Vec::new();
    let mut k = vec![0usize; gens.len()];
    loop {
        let images: Vec<C64> =
            k.iter().zip(&orders).map(|(&ki, &o)| C64::from_polar(1.0, 2.0 * PI * ki as f64 / o as f64)).collect();
        if let Some(values) = extend_character(g, &gens, &images) {
            out.push(values);
        }
        let mut i = 0;
        loop {
            if i == gens.len() {
                return out;
            }
            k[i] += 1;
            if k[i] < orders[i] {
                break;
            }
            k[i] = 0;
            i += 1;
        }
    }
}

fn extend_character(g: &FiniteGroup, gens: &[usize], images: &[C64]) -> Option<Vec<C64>> {
    let mut vals: Vec<Option<C64>> = vec![None; g.order()];
    vals[g.identity()] = Some(ONE);
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let vx = vals[x].unwrap();
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let v = vx * t;
            match vals[y] {
                None => {
                    vals[y] = Some(v);
                    queue.push_back(y);
                }
                Some(w) if (w - v).norm() > 1e-9 => return None,
                Some(_) => {}
            }
        }
    }
    vals.into_iter().collect()
}
