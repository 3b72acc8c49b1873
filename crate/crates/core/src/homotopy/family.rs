use num_traits::Zero;
use rayon::prelude::*;

use crate::algebra::{AssociativeAlgebra, DendriformAlgebra};
use crate::combinatorics::{r0_raw, ri_raw};
use crate::error::{Error, Result};
use crate::exactmat::{axpy, frac, int, is_zero_vec, unit_vec, zero_vec, Matrix, Scalar, Vector};
use crate::report::{Report, Violation};

use super::graded::{decode_into, koszul_reversal_sign, GradedMap, GradedSpace};

/// A Dend∞ family: `maps[k−1][r−1]` is `μ_{k,[r]}` for `1 ≤ r ≤ k ≤ K`. Missing arities count as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DendInfinity {
    space: GradedSpace,
    maps: Vec<Vec<GradedMap>>,
}

/// An A∞ family: `maps[k−1]` is `μ_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInfinity {
    space: GradedSpace,
    maps: Vec<GradedMap>,
}

fn validate_map(space: &GradedSpace, m: &GradedMap, k: usize) -> Result<()> {
    if m.arity() != k || m.dim() != space.dim() {
        return Err(Error::Dimension(format!(
            "expected an arity-{k} map on dimension {}, got arity {} on dimension {}",
            space.dim(),
            m.arity(),
            m.dim()
        )));
    }
    m.check_degree(space, k as i32 - 2)
}

impl DendInfinity {
    /// Checks shapes and degree homogeneity `|μ_{k,[r]}(a₁,…,a_k)| = Σ|aᵢ| + k − 2`.
    pub fn new(space: GradedSpace, maps: Vec<Vec<GradedMap>>) -> Result<Self> {
        for (k1, slices) in maps.iter().enumerate() {
            if slices.len() != k1 + 1 {
                return Err(Error::Dimension(format!(
                    "arity {} needs {} slices, got {}",
                    k1 + 1,
                    k1 + 1,
                    slices.len()
                )));
            }
            for m in slices {
                validate_map(&space, m, k1 + 1)?;
            }
        }
        Ok(DendInfinity { space, maps })
    }

    /// All slices zero up to arity `k_max`.
    pub fn zero(space: GradedSpace, k_max: usize) -> Self {
        let d = space.dim();
        let maps = (1..=k_max).map(|k| vec![GradedMap::zeros(k, d); k]).collect();
        DendInfinity { space, maps }
    }

    /// A dendriform algebra in degree 0: `μ_{2,[1]} = ≺`, `μ_{2,[2]} = ≻`, all other maps zero.
    pub fn from_dendriform(d: &DendriformAlgebra) -> Self {
        let n = d.dim();
        let space = GradedSpace::concentrated(d.names().to_vec());
        let two = |b: &crate::algebra::Bilinear| GradedMap::from_fn(2, n, |t| b.basis(t[0], t[1]).to_vec());
        let maps = vec![vec![GradedMap::zeros(1, n)], vec![two(d.left()), two(d.right())]];
        DendInfinity { space, maps }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    /// Largest stored arity.
    pub fn max_arity(&self) -> usize {
        self.maps.len()
    }

    pub fn slice(&self, k: usize, r: usize) -> Option<&GradedMap> {
        self.maps.get(k.checked_sub(1)?)?.get(r.checked_sub(1)?)
    }

    pub fn maps(&self) -> &[Vec<GradedMap>] {
        &self.maps
    }
}

impl AInfinity {
    pub fn new(space: GradedSpace, maps: Vec<GradedMap>) -> Result<Self> {
        for (k1, m) in maps.iter().enumerate() {
            validate_map(&space, m, k1 + 1)?;
        }
        Ok(AInfinity { space, maps })
    }

    /// An associative algebra in degree 0 with `μ₁ = 0`.
    pub fn from_associative(a: &AssociativeAlgebra) -> Self {
        let n = a.dim();
        let names = (0..n).map(|i| format!("e{i}")).collect();
        let maps = vec![GradedMap::zeros(1, n), GradedMap::from_fn(2, n, |t| a.mult().basis(t[0], t[1]).to_vec())];
        AInfinity { space: GradedSpace::concentrated(names), maps }
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn max_arity(&self) -> usize {
        self.maps.len()
    }

    pub fn map(&self, k: usize) -> Option<&GradedMap> {
        self.maps.get(k.checked_sub(1)?)
    }

    pub fn maps(&self) -> &[GradedMap] {
        &self.maps
    }
}

/// `μ_k = μ_{k,[1]} + ⋯ + μ_{k,[k]}`.
pub fn a_infinity_sum(fam: &DendInfinity) -> AInfinity {
    let maps = fam.maps.iter().map(|slices| slices[1..].iter().fold(slices[0].clone(), |acc, m| acc.add(m))).collect();
    AInfinity { space: fam.space.clone(), maps }
}

/// Runs `eval` over `0..total` in parallel and keeps the first violation in index order.
fn scan(name: &str, total: usize, eval: impl Fn(usize) -> Option<Violation> + Sync) -> Report {
    match (0..total).into_par_iter().find_map_first(|t| eval(t).map(|v| (t, v))) {
        Some((t, v)) => Report { name: name.to_string(), checked: t + 1, violation: Some(v) },
        None => Report::pass(name, total),
    }
}

/// Instances `(k, r, tuple)` in order: arity, then slice, then basis tuples lexicographically.
struct Instances {
    dim: usize,
    blocks: Vec<(usize, usize, usize)>,
    total: usize,
}

impl Instances {
    fn new(dim: usize, k_max: usize, slices: impl Fn(usize) -> usize) -> Self {
        let mut blocks = Vec::new();
        let mut total = 0;
        for k in 1..=k_max {
            for r in 1..=slices(k) {
                blocks.push((k, r, total));
                total += dim.pow(k as u32);
            }
        }
        Instances { dim, blocks, total }
    }

    fn get(&self, t: usize) -> (usize, usize, Vec<usize>) {
        let b = self.blocks.partition_point(|&(_, _, start)| start <= t) - 1;
        let (k, r, start) = self.blocks[b];
        let mut tuple = vec![0; k];
        decode_into(t - start, self.dim, &mut tuple);
        (k, r, tuple)
    }
}

fn location(space: &GradedSpace, tuple: &[usize]) -> String {
    let names: Vec<&str> = tuple.iter().map(|&a| space.names()[a].as_str()).collect();
    format!("({})", names.join(", "))
}

fn parity_sign(odd: bool) -> Scalar {
    if odd {
        int(-1)
    } else {
        int(1)
    }
}

/// `μ(e_{t₀}, …, v, …, e_{t_{k−1}})` with the vector `v` in position `pos`.
fn apply_with_vector(m: &GradedMap, tuple: &mut [usize], pos: usize, v: &[Scalar], acc: &mut Vector, coeff: &Scalar) {
    for (x, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        tuple[pos] = x;
        axpy(acc, &(coeff * c), m.basis(tuple));
    }
}

/// The Stasheff-type sum `Σ_{i+j=n+1} Σ_λ ± outer_j(a₁, …, inner_i(a_λ, …), …)` on one basis tuple.
///
/// `inner(i, λ, args)` evaluates the inner operation and `outer(j, i, λ)` picks the outer map.
fn stasheff_sum<'a>(
    space: &GradedSpace,
    tuple: &[usize],
    inner: impl Fn(usize, usize, &[usize]) -> Option<Vector>,
    outer: impl Fn(usize, usize, usize) -> Option<&'a GradedMap>,
) -> Vector {
    let n = tuple.len();
    let mut acc = zero_vec(space.dim());
    for i in 1..=n {
        let j = n + 1 - i;
        let mut prefix_deg = 0i64;
        for lambda in 1..=j {
            if lambda > 1 {
                prefix_deg += space.degree(tuple[lambda - 2]) as i64;
            }
            let Some(out) = outer(j, i, lambda) else { continue };
            let Some(v) = inner(i, lambda, &tuple[lambda - 1..lambda - 1 + i]) else { continue };
            if is_zero_vec(&v) {
                continue;
            }
            let exp = lambda as i64 * (i as i64 + 1) + i as i64 * prefix_deg;
            let sign = parity_sign(exp.rem_euclid(2) == 1);
            let mut args: Vec<usize> = tuple[..lambda - 1].to_vec();
            args.push(0);
            args.extend_from_slice(&tuple[lambda - 1 + i..]);
            apply_with_vector(out, &mut args, lambda - 1, &v, &mut acc, &sign);
        }
    }
    acc
}

/// The Dend∞ identities for every `n ≤ K`, every `[r] ∈ Cₙ` and every basis tuple.
///
/// The violation location lists the basis elements; the identity names `n` and `[r]`.
pub fn check_dend_infinity(fam: &DendInfinity, k_max: usize) -> Report {
    let space = &fam.space;
    let inst = Instances::new(space.dim(), k_max, |n| n);
    scan("Dend∞", inst.total, |t| {
        let (n, r, tuple) = inst.get(t);
        let inner = |i: usize, lambda: usize, args: &[usize]| -> Option<Vector> {
            match ri_raw(i, lambda, r) {
                Some(s) => fam.slice(i, s).map(|m| m.basis(args).to_vec()),
                None => {
                    let mut v = zero_vec(space.dim());
                    for s in 1..=i {
                        axpy(&mut v, &int(1), fam.slice(i, s)?.basis(args));
                    }
                    Some(v)
                }
            }
        };
        let outer = |j: usize, i: usize, lambda: usize| fam.slice(j, r0_raw(i, lambda, r));
        let res = stasheff_sum(space, &tuple, inner, outer);
        (!is_zero_vec(&res)).then(|| Violation {
            identity: format!("Dend∞ identity n = {n}, [{r}]"),
            location: location(space, &tuple),
            lhs: res,
            rhs: zero_vec(space.dim()),
        })
    })
}

/// The A∞ identities `Σ ± μ_j(a₁, …, μ_i(a_λ, …), …) = 0` for every `n ≤ K`.
pub fn check_a_infinity(fam: &AInfinity, k_max: usize) -> Report {
    let space = &fam.space;
    let inst = Instances::new(space.dim(), k_max, |_| 1);
    scan("A∞", inst.total, |t| {
        let (n, _, tuple) = inst.get(t);
        let inner = |i: usize, _: usize, args: &[usize]| fam.map(i).map(|m| m.basis(args).to_vec());
        let outer = |j: usize, _: usize, _: usize| fam.map(j);
        let res = stasheff_sum(space, &tuple, inner, outer);
        (!is_zero_vec(&res)).then(|| Violation {
            identity: format!("A∞ identity n = {n}"),
            location: location(space, &tuple),
            lhs: res,
            rhs: zero_vec(space.dim()),
        })
    })
}

fn validate_star(space: &GradedSpace, star: &Matrix) -> Result<()> {
    if !space.is_degree_zero(star) {
        return Err(Error::Input("* must be a square degree-0 map on the graded space".into()));
    }
    if !star.mul(star)?.is_identity() {
        return Err(Error::Input("* must square to the identity".into()));
    }
    Ok(())
}

/// `(−1)^θ (−1)^{(k−1)(k−2)/2}` for inputs of the given degrees.
pub fn involutive_sign(degrees: &[i32]) -> i32 {
    let k = degrees.len();
    let extra = if ((k - 1) * k.saturating_sub(2) / 2) % 2 == 0 { 1 } else { -1 };
    koszul_reversal_sign(degrees) * extra
}

/// Shared body of the involutive checks: `slot(k, r)` is compared against `slot(k, mirror(k, r))` on reversed,
/// starred inputs.
fn involutive_scan<'a>(
    name: &str,
    space: &GradedSpace,
    star: &Matrix,
    k_max: usize,
    slices: impl Fn(usize) -> usize + Sync,
    slot: impl Fn(usize, usize) -> Option<&'a GradedMap> + Sync,
    mirror: impl Fn(usize, usize) -> usize + Sync,
) -> Result<Report> {
    validate_star(space, star)?;
    let cols = star.columns();
    let inst = Instances::new(space.dim(), k_max, &slices);
    Ok(scan(name, inst.total, |t| {
        let (k, r, tuple) = inst.get(t);
        let (Some(m), Some(m2)) = (slot(k, r), slot(k, mirror(k, r))) else { return None };
        let lhs = star.apply(m.basis(&tuple));
        let args: Vec<&[Scalar]> = tuple.iter().rev().map(|&a| cols[a].as_slice()).collect();
        let degrees: Vec<i32> = tuple.iter().map(|&a| space.degree(a)).collect();
        let s = int(involutive_sign(&degrees) as i64);
        let rhs: Vector = m2.apply(&args).iter().map(|x| x * &s).collect();
        (lhs != rhs).then(|| Violation {
            identity: if slices(k) > 1 {
                format!("μ_{{{k},[{r}]}}(a)* = ±μ_{{{k},[{}]}}(a_k*, …, a₁*)", mirror(k, r))
            } else {
                format!("μ_{k}(a)* = ±μ_{k}(a_k*, …, a₁*)")
            },
            location: location(space, &tuple),
            lhs,
            rhs,
        })
    }))
}

/// `μ_{k,[r]}(a₁,…,a_k)* = (−1)^θ (−1)^{(k−1)(k−2)/2} μ_{k,[k−r+1]}(a_k*, …, a₁*)` for `k ≤ K`.
///
/// `*` must be a degree-0 involution; otherwise this is an input error.
pub fn check_involutive_dend_infinity(fam: &DendInfinity, star: &Matrix, k_max: usize) -> Result<Report> {
    let k_max = k_max.min(fam.max_arity());
    involutive_scan("involutive Dend∞", &fam.space, star, k_max, |k| k, |k, r| fam.slice(k, r), |k, r| k - r + 1)
}

/// `μ_k(a₁,…,a_k)* = (−1)^θ (−1)^{(k−1)(k−2)/2} μ_k(a_k*, …, a₁*)` for `k ≤ K`.
pub fn check_involutive_a_infinity(fam: &AInfinity, star: &Matrix, k_max: usize) -> Result<Report> {
    let k_max = k_max.min(fam.max_arity());
    involutive_scan("involutive A∞", &fam.space, star, k_max, |_| 1, |k, _| fam.map(k), |_, r| r)
}

fn validate_rb(space: &GradedSpace, rb: &Matrix) -> Result<()> {
    if !space.is_degree_zero(rb) {
        return Err(Error::Input("R must be a square degree-0 map on the graded space".into()));
    }
    Ok(())
}

/// `μ_k(Ra₁, …, a_r, …, Ra_k)` on basis inputs.
fn with_r_except(m: &GradedMap, rcols: &[Vector], units: &[Vector], tuple: &[usize], r: Option<usize>) -> Vector {
    let args: Vec<&[Scalar]> = tuple
        .iter()
        .enumerate()
        .map(|(p, &a)| if Some(p) == r { units[a].as_slice() } else { rcols[a].as_slice() })
        .collect();
    m.apply(&args)
}

/// `μ_k(Ra₁, …, Ra_k) = R(Σᵢ μ_k(Ra₁, …, aᵢ, …, Ra_k))` for `k ≤ K`; at `k = 1` this says `R` commutes with `μ₁`.
pub fn rb_a_infinity_check(fam: &AInfinity, rb: &Matrix, k_max: usize) -> Result<Report> {
    validate_rb(&fam.space, rb)?;
    let space = &fam.space;
    let d = space.dim();
    let rcols = rb.columns();
    let units: Vec<Vector> = (0..d).map(|i| unit_vec(d, i)).collect();
    let inst = Instances::new(d, k_max.min(fam.max_arity()), |_| 1);
    Ok(scan("Rota-Baxter A∞", inst.total, |t| {
        let (k, _, tuple) = inst.get(t);
        let m = fam.map(k)?;
        let lhs = with_r_except(m, &rcols, &units, &tuple, None);
        let mut inner = zero_vec(d);
        for p in 0..k {
            axpy(&mut inner, &int(1), &with_r_except(m, &rcols, &units, &tuple, Some(p)));
        }
        let rhs = rb.apply(&inner);
        (lhs != rhs).then(|| Violation {
            identity: format!("μ_{k}(Ra₁, …, Ra_k) = R(Σ μ_{k}(Ra₁, …, aᵢ, …, Ra_k))"),
            location: location(space, &tuple),
            lhs,
            rhs,
        })
    }))
}

/// `μ_{k,[r]}(a₁,…,a_k) = μ_k(Ra₁, …, a_r, …, Ra_k)`, re-checked as a Dend∞ family up to arity `K` and, when `*`
/// is given, as an involutive one.
///
/// Rejected when `R` fails the Rota-Baxter identity or does not commute with `*`.
pub fn induced_dend_infinity(
    fam: &AInfinity,
    rb: &Matrix,
    star: Option<&Matrix>,
    k_max: usize,
) -> Result<(DendInfinity, Report)> {
    let rep = rb_a_infinity_check(fam, rb, k_max)?;
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    if let Some(s) = star {
        validate_star(&fam.space, s)?;
        if rb.mul(s)? != s.mul(rb)? {
            return Err(Error::Rejected("R does not commute with *".into()));
        }
    }
    let d = fam.space.dim();
    let rcols = rb.columns();
    let units: Vec<Vector> = (0..d).map(|i| unit_vec(d, i)).collect();
    let maps = fam
        .maps
        .iter()
        .enumerate()
        .map(|(k1, m)| {
            (0..=k1).map(|r| GradedMap::from_fn(k1 + 1, d, |t| with_r_except(m, &rcols, &units, t, Some(r)))).collect()
        })
        .collect();
    let out = DendInfinity::new(fam.space.clone(), maps)?;
    let mut reports = vec![check_dend_infinity(&out, k_max)];
    if let Some(s) = star {
        reports.push(check_involutive_dend_infinity(&out, s, k_max)?);
    }
    let rep = Report::combine("induced Dend∞", reports);
    if !rep.passed() {
        return Err(Error::Rejected(rep.to_string()));
    }
    Ok((out, rep))
}

/// `𝕂[x]/(x³) ⊗ Λ[ε]` with `|ε| = 1`, `μ₁(xⁱε) = xⁱ`, graded-commutative `μ₂`, `R = ∫ ⊗ id` and `* = id`.
///
/// Returns the A∞ algebra, `R` and `*`. Basis: `1, x, x², ε, xε, x²ε`.
pub fn dg_fixture() -> (AInfinity, Matrix, Matrix) {
    let names = ["1", "x", "x^2", "e", "xe", "x^2e"].map(String::from).to_vec();
    let space = GradedSpace::new(0, vec![3, 3]).with_names(names).expect("six names");
    // basis index = 3s + i for xⁱεˢ
    let mu1 = GradedMap::from_fn(1, 6, |t| if t[0] >= 3 { unit_vec(6, t[0] - 3) } else { zero_vec(6) });
    let mu2 = GradedMap::from_fn(2, 6, |t| {
        let (s, i) = (t[0] / 3, t[0] % 3);
        let (u, j) = (t[1] / 3, t[1] % 3);
        if s + u > 1 || i + j > 2 {
            zero_vec(6)
        } else {
            unit_vec(6, 3 * (s + u) + i + j)
        }
    });
    let mut rb = Matrix::zeros(6, 6);
    for s in 0..2 {
        for i in 0..2 {
            rb.set(3 * s + i + 1, 3 * s + i, frac(1, i as i64 + 1));
        }
    }
    let fam = AInfinity::new(space, vec![mu1, mu2]).expect("homogeneous");
    (fam, rb, Matrix::identity(6))
}
