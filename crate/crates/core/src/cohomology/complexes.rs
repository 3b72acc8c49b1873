use super::CochainComplex;
use crate::algebra::{Bilinear, DendriformAlgebra, OrientedAction, OrientedGroup, Representation};
use crate::combinatorics::{r0_raw, ri_raw};
use crate::error::{Error, Result};
use crate::exactmat::{int, sign, Matrix, RowAcc, SparseMatrix};

/// Digits of a tuple index, most significant first.
pub(crate) fn decode(mut idx: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    out
}

pub(crate) fn encode(digits: &[usize], base: usize) -> usize {
    digits.iter().fold(0, |acc, &x| acc * base + x)
}

/// `Hom(𝕂[C_n] ⊗ D^{⊗n}, M)` with the differential `δ_dend`.
///
/// Coordinates are ordered by `[r]`, then the argument tuple (first argument most
/// significant), then the output basis vector.
#[derive(Clone, Debug)]
pub struct DendComplex {
    alg: DendriformAlgebra,
    rep: Representation,
}

impl DendComplex {
    pub fn new(alg: DendriformAlgebra, rep: Representation) -> Result<Self> {
        if rep.base_dim() != alg.dim() {
            return Err(Error::Dimension(format!(
                "representation is over dimension {}, algebra has dimension {}",
                rep.base_dim(),
                alg.dim()
            )));
        }
        Ok(DendComplex { alg, rep })
    }

    /// Coefficients in the adjoint representation.
    pub fn adjoint(alg: DendriformAlgebra) -> Self {
        let rep = Representation::adjoint(&alg);
        DendComplex { alg, rep }
    }

    pub fn algebra(&self) -> &DendriformAlgebra {
        &self.alg
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn d(&self) -> usize {
        self.alg.dim()
    }

    pub fn m(&self) -> usize {
        self.rep.dim()
    }

    /// Flat coordinate of `f([r]; e_{args}) ` component `out`, with `r` 1-based.
    pub fn index(&self, n: usize, r: usize, args: &[usize], out: usize) -> usize {
        let d = self.d();
        ((r - 1) * d.pow(n as u32) + encode(args, d)) * self.m() + out
    }

    fn row(&self, star: &Bilinear, n: usize, row: usize, acc: &mut RowAcc) {
        let (d, m) = (self.d(), self.m());
        let out = row % m;
        let t = row / m;
        let dn1 = d.pow(n as u32 + 1);
        let r = t / dn1 + 1;
        let a = decode(t % dn1, d, n + 1);
        let product = |slice: Option<usize>| match slice {
            Some(1) => self.alg.left(),
            Some(_) => self.alg.right(),
            None => star,
        };

        // a₁ ≺ Σ_k f([k]; a₂, …) or a₁ ≻ f([r−1]; a₂, …)
        let head = if r == 1 { &self.rep.a_prec_m } else { &self.rep.a_succ_m };
        let slices: Vec<usize> = if r == 1 { (1..=n).collect() } else { vec![r - 1] };
        for &k in &slices {
            for o in 0..m {
                acc.add(self.index(n, k, &a[1..], o), head.get(a[0], o, out).clone());
            }
        }

        // Σ_i (−1)^i f(R₀[r]; …, π(R_i[r])(a_i, a_{i+1}), …)
        for i in 1..=n {
            let r_outer = r0_raw(2, i, r);
            let prod = product(ri_raw(2, i, r)).basis(a[i - 1], a[i]);
            let s = sign(i);
            let mut args: Vec<usize> = Vec::with_capacity(n);
            for (k, c) in prod.iter().enumerate() {
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                args.clear();
                args.extend_from_slice(&a[..i - 1]);
                args.push(k);
                args.extend_from_slice(&a[i + 1..]);
                acc.add(self.index(n, r_outer, &args, out), &s * c);
            }
        }

        // (−1)^{n+1} f([r]; a₁, …, a_n) ≺ a_{n+1} or (Σ_k f([k]; …)) ≻ a_{n+1}
        let (tail, slices): (&Bilinear, Vec<usize>) =
            if r <= n { (&self.rep.m_prec_a, vec![r]) } else { (&self.rep.m_succ_a, (1..=n).collect()) };
        let s = sign(n + 1);
        for &k in &slices {
            for o in 0..m {
                acc.add(self.index(n, k, &a[..n], o), &s * tail.get(o, a[n], out));
            }
        }
    }
}

impl CochainComplex for DendComplex {
    fn name(&self) -> String {
        "dendriform".into()
    }

    fn min_degree(&self) -> usize {
        1
    }

    fn dim(&self, n: usize) -> usize {
        n * self.d().pow(n as u32) * self.m()
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        check_degree(self, n)?;
        let star = self.alg.star_product();
        let sparse = SparseMatrix::build(self.dim(n + 1), self.dim(n), |row, acc| self.row(&star, n, row, acc));
        Ok(sparse.to_dense())
    }
}

pub(crate) fn check_degree(c: &dyn CochainComplex, n: usize) -> Result<()> {
    if n < c.min_degree() {
        return Err(Error::Input(format!("{} cochains start in degree {}, got {n}", c.name(), c.min_degree())));
    }
    Ok(())
}

/// Classical Hochschild complex `Hom(D^{⊗n}, M)` of an associative algebra with coefficients in a bimodule.
#[derive(Clone, Debug)]
pub struct HochComplex {
    mult: Bilinear,
    left: Bilinear,
    right: Bilinear,
}

impl HochComplex {
    /// `mult: D⊗D→D`, `left: D⊗M→M`, `right: M⊗D→M`.
    pub fn new(mult: Bilinear, left: Bilinear, right: Bilinear) -> Result<Self> {
        let d = mult.out_dim();
        let m = left.out_dim();
        if !mult.is_square(d) || left.shape() != (d, m, m) || right.shape() != (m, d, m) {
            return Err(Error::Dimension("Hochschild data has inconsistent shapes".into()));
        }
        Ok(HochComplex { mult, left, right })
    }

    /// `(D, ⋆)` with `a·m = a≺m + a≻m`, `m·a = m≺a + m≻a`.
    pub fn from_dendriform(alg: &DendriformAlgebra, rep: &Representation) -> Result<Self> {
        let (left, right) = rep.bimodule();
        Self::new(alg.star_product(), left, right)
    }

    pub fn d(&self) -> usize {
        self.mult.out_dim()
    }

    pub fn m(&self) -> usize {
        self.left.out_dim()
    }

    pub fn index(&self, args: &[usize], out: usize) -> usize {
        encode(args, self.d()) * self.m() + out
    }

    fn row(&self, n: usize, row: usize, acc: &mut RowAcc) {
        let (d, m) = (self.d(), self.m());
        let out = row % m;
        let a = decode(row / m, d, n + 1);
        for o in 0..m {
            acc.add(self.index(&a[1..], o), self.left.get(a[0], o, out).clone());
        }
        let mut args = Vec::with_capacity(n);
        for i in 1..=n {
            let s = sign(i);
            for (k, c) in self.mult.basis(a[i - 1], a[i]).iter().enumerate() {
                if num_traits::Zero::is_zero(c) {
                    continue;
                }
                args.clear();
                args.extend_from_slice(&a[..i - 1]);
                args.push(k);
                args.extend_from_slice(&a[i + 1..]);
                acc.add(self.index(&args, out), &s * c);
            }
        }
        let s = sign(n + 1);
        for o in 0..m {
            acc.add(self.index(&a[..n], o), &s * self.right.get(o, a[n], out));
        }
    }
}

impl CochainComplex for HochComplex {
    fn name(&self) -> String {
        "Hochschild".into()
    }

    fn min_degree(&self) -> usize {
        0
    }

    fn dim(&self, n: usize) -> usize {
        self.d().pow(n as u32) * self.m()
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        let sparse = SparseMatrix::build(self.dim(n + 1), self.dim(n), |row, acc| self.row(n, row, acc));
        Ok(sparse.to_dense())
    }
}

/// `S_n`: `f ↦ f_{[1]} + ⋯ + f_{[n]}` from dendriform to Hochschild cochains.
pub fn s_map(n: usize, d: usize, m: usize) -> Matrix {
    let slice = d.pow(n as u32) * m;
    Matrix::from_fn(slice, n * slice, |row, col| if col % slice == row { int(1) } else { int(0) })
}

/// Group cochains `Maps(G^n, V)` for a linear action on `V`.
#[derive(Clone, Debug)]
pub struct GroupComplex {
    action: OrientedAction,
}

impl GroupComplex {
    pub fn new(action: OrientedAction) -> Self {
        GroupComplex { action }
    }

    pub fn group(&self) -> &OrientedGroup {
        self.action.group()
    }
}

impl CochainComplex for GroupComplex {
    fn name(&self) -> String {
        "group".into()
    }

    fn min_degree(&self) -> usize {
        0
    }

    fn dim(&self, n: usize) -> usize {
        self.group().order().pow(n as u32) * self.action.dim()
    }

    fn differential(&self, n: usize) -> Result<Matrix> {
        Ok(group_differential(self.group(), n, self.action.matrices()))
    }
}

/// `(δν)(g₁,…,g_{n+1}) = g₁·ν(g₂,…) + Σ_k (−1)^k ν(…, g_k g_{k+1}, …) + (−1)^{n+1} ν(g₁,…,g_n)`
/// for cochains with values in a space on which `g` acts by `acts[g]`.
pub(crate) fn group_differential(group: &OrientedGroup, n: usize, acts: &[Matrix]) -> Matrix {
    let q = group.order();
    let v = acts[0].rows();
    let rows = q.pow(n as u32 + 1) * v;
    let cols = q.pow(n as u32) * v;
    let mut out = Matrix::zeros(rows, cols);
    let one = int(1);
    let id = Matrix::identity(v);
    for t in 0..q.pow(n as u32 + 1) {
        let g = decode(t, q, n + 1);
        out.add_block(t * v, encode(&g[1..], q) * v, &acts[g[0]], &one);
        for k in 1..=n {
            let mut merged = g[..k - 1].to_vec();
            merged.push(group.mul(g[k - 1], g[k]));
            merged.extend_from_slice(&g[k + 1..]);
            out.add_block(t * v, encode(&merged, q) * v, &id, &sign(k));
        }
        out.add_block(t * v, encode(&g[..n], q) * v, &id, &sign(n + 1));
    }
    out
}
