use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::algebra::{
    induced_dendriform, induced_tridendriform, AssociativeAlgebra, Bilinear, DendriformAlgebra, Involution,
    OrientedAction, OrientedGroup, Representation, RotaBaxterOperator, TridendriformAlgebra,
};
use crate::cohomology::TwoCochain;
use crate::error::{Error, Result};
use crate::exactmat::{Matrix, Scalar};
use crate::extdef::{Extension, TruncatedDeformation};
use crate::homotopy::{AInfinity, DendInfinity, GradedMap, GradedSpace};

use super::{matrix_from_json, matrix_to_json, scalar_from_json, scalar_to_json};

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Input(format!("missing field {key:?}")))
}

fn usize_of(v: &Value, what: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| Error::Input(format!("{what} must be a nonnegative integer")))
}

fn index_key(key: &str, arity: usize) -> Result<Vec<usize>> {
    let parts: Vec<usize> = key
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad index key {key:?}"))))
        .collect::<Result<_>>()?;
    if parts.len() != arity {
        return Err(Error::Input(format!("index key {key:?} should have {arity} entries")));
    }
    Ok(parts)
}

fn join(idx: &[usize]) -> String {
    idx.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

/// Sparse entries `{"i,j,…": [[out, c], …]}` handed to `set(args, out, c)`.
fn read_sparse(
    v: &Value,
    arity: usize,
    bounds: &[usize],
    out_dim: usize,
    mut set: impl FnMut(&[usize], usize, Scalar),
) -> Result<()> {
    let obj = v.as_object().ok_or_else(|| Error::Input("products must be an object keyed by \"i,j\"".into()))?;
    for (key, entries) in obj {
        let idx = index_key(key, arity)?;
        if let Some(p) = idx.iter().zip(bounds).position(|(i, b)| i >= b) {
            return Err(Error::Index(format!("index {} in key {key:?} out of range", idx[p])));
        }
        let list = entries.as_array().ok_or_else(|| Error::Input(format!("entries for {key:?} must be a list")))?;
        for e in list {
            let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
                Error::Input(format!("entries for {key:?} must be [output index, coefficient] pairs"))
            })?;
            let out = usize_of(&pair[0], "output index")?;
            if out >= out_dim {
                return Err(Error::Index(format!("output index {out} out of range in {key:?}")));
            }
            set(&idx, out, scalar_from_json(&pair[1])?);
        }
    }
    Ok(())
}

fn sparse_entries(out: &[Scalar]) -> Vec<Value> {
    out.iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| json!([k, scalar_to_json(c)]))
        .collect()
}

pub fn bilinear_from_json(v: &Value, left: usize, right: usize, out: usize) -> Result<Bilinear> {
    let mut b = Bilinear::zeros(left, right, out);
    read_sparse(v, 2, &[left, right], out, |idx, k, c| b.add_to(idx[0], idx[1], k, &c))?;
    Ok(b)
}

/// Only nonzero products are listed.
pub fn bilinear_to_json(b: &Bilinear) -> Value {
    let (l, r, _) = b.shape();
    let mut obj = Map::new();
    for i in 0..l {
        for j in 0..r {
            let e = sparse_entries(b.basis(i, j));
            if !e.is_empty() {
                obj.insert(join(&[i, j]), Value::Array(e));
            }
        }
    }
    Value::Object(obj)
}

fn names_from_json(v: &Value) -> Result<Vec<String>> {
    v.as_array()
        .ok_or_else(|| Error::Input("\"basis\" must be a list of names".into()))?
        .iter()
        .map(|x| x.as_str().map(String::from).ok_or_else(|| Error::Input("basis names must be strings".into())))
        .collect()
}

/// The structure held by an algebra file.
#[derive(Clone, Debug)]
pub enum Structure {
    Dendriform(DendriformAlgebra),
    Tridendriform(TridendriformAlgebra),
    /// An associative algebra, optionally with a Rota-Baxter operator.
    Associative(AssociativeAlgebra, Option<RotaBaxterOperator>),
}

/// An algebra file: structure constants plus optional involution and group action.
#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub names: Vec<String>,
    pub structure: Structure,
    pub involution: Option<Involution>,
    pub action: Option<OrientedAction>,
}

impl AlgebraFile {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn dendriform(&self) -> Result<DendriformAlgebra> {
        match &self.structure {
            Structure::Dendriform(d) => Ok(d.clone()),
            Structure::Tridendriform(t) => Ok(t.to_dendriform()),
            Structure::Associative(m, Some(rb)) if num_traits::Zero::is_zero(&rb.weight) => induced_dendriform(m, rb),
            Structure::Associative(m, Some(rb)) => Ok(induced_tridendriform(m, rb)?.to_dendriform()),
            Structure::Associative(_, None) => Err(Error::Input(
                "expected a dendriform algebra (\"left\"/\"right\") or a \"rota_baxter\" operator".into(),
            )),
        }
    }

    /// The involution, or an input error naming what needed it.
    pub fn require_involution(&self, why: &str) -> Result<&Involution> {
        self.involution.as_ref().ok_or_else(|| Error::Input(format!("{why} needs an \"involution\"")))
    }

    pub fn require_action(&self, why: &str) -> Result<&OrientedAction> {
        self.action.as_ref().ok_or_else(|| Error::Input(format!("{why} needs a \"group\"")))
    }
}

pub fn group_from_json(v: &Value, dim: usize) -> Result<OrientedAction> {
    let names = names_from_json(field(v, "elements")?)?;
    let table = field(v, "table")?
        .as_array()
        .ok_or_else(|| Error::Input("\"table\" must be a list of rows".into()))?
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| Error::Input("table rows must be lists".into()))?
                .iter()
                .map(|x| usize_of(x, "table entry"))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let eps = field(v, "epsilon")?
        .as_array()
        .ok_or_else(|| Error::Input("\"epsilon\" must be a list".into()))?
        .iter()
        .map(|x| match x.as_i64() {
            Some(1) => Ok(1),
            Some(-1) => Ok(-1),
            _ => Err(Error::Input("epsilon entries must be 1 or -1".into())),
        })
        .collect::<Result<Vec<i8>>>()?;
    let group = OrientedGroup::new(names, table, eps)?;
    let mats = match v.get("actions") {
        Some(a) => a
            .as_array()
            .ok_or_else(|| Error::Input("\"actions\" must be a list of matrices".into()))?
            .iter()
            .map(matrix_from_json)
            .collect::<Result<Vec<_>>>()?,
        None => return Ok(OrientedAction::trivial(group, dim)),
    };
    if mats.iter().any(|m| m.rows() != dim || m.cols() != dim) {
        return Err(Error::Dimension(format!("group actions must be {dim}x{dim}")));
    }
    OrientedAction::new(group, mats)
}

pub fn group_to_json(act: &OrientedAction) -> Value {
    let g = act.group();
    json!({
        "elements": g.names(),
        "table": g.table(),
        "epsilon": g.epsilons(),
        "actions": act.matrices().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn algebra_from_json(v: &Value) -> Result<AlgebraFile> {
    let names = names_from_json(field(v, "basis")?)?;
    let n = names.len();
    let structure = if let Some(mult) = v.get("mult") {
        let a = AssociativeAlgebra::new(bilinear_from_json(mult, n, n, n)?);
        let rb = match v.get("rota_baxter") {
            Some(r) => {
                let m = matrix_from_json(field(r, "matrix")?)?;
                if m.rows() != n || m.cols() != n {
                    return Err(Error::Dimension(format!("Rota-Baxter matrix must be {n}x{n}")));
                }
                let w = r.get("weight").map(scalar_from_json).transpose()?.unwrap_or_else(|| crate::exactmat::int(0));
                Some(RotaBaxterOperator::new(m, w)?)
            }
            None => None,
        };
        Structure::Associative(a, rb)
    } else {
        let left = bilinear_from_json(field(v, "left")?, n, n, n)?;
        let right = bilinear_from_json(field(v, "right")?, n, n, n)?;
        match v.get("dot") {
            Some(dot) => Structure::Tridendriform(TridendriformAlgebra::new(
                names.clone(),
                left,
                right,
                bilinear_from_json(dot, n, n, n)?,
            )?),
            None => Structure::Dendriform(DendriformAlgebra::new(names.clone(), left, right)?),
        }
    };
    let involution = match v.get("involution") {
        Some(m) => {
            let m = matrix_from_json(m)?;
            if m.rows() != n || m.cols() != n {
                return Err(Error::Dimension(format!("involution must be {n}x{n}")));
            }
            Some(Involution::new(m)?)
        }
        None => None,
    };
    let action = v.get("group").map(|g| group_from_json(g, n)).transpose()?;
    Ok(AlgebraFile { names, structure, involution, action })
}

pub fn dendriform_to_json(d: &DendriformAlgebra) -> Value {
    json!({ "basis": d.names(), "left": bilinear_to_json(d.left()), "right": bilinear_to_json(d.right()) })
}

pub fn algebra_to_json(a: &AlgebraFile) -> Value {
    let mut v = match &a.structure {
        Structure::Dendriform(d) => dendriform_to_json(d),
        Structure::Tridendriform(t) => json!({
            "basis": a.names,
            "left": bilinear_to_json(t.left()),
            "right": bilinear_to_json(t.right()),
            "dot": bilinear_to_json(t.dot()),
        }),
        Structure::Associative(m, rb) => {
            let mut v = json!({ "basis": a.names, "mult": bilinear_to_json(m.mult()) });
            if let Some(rb) = rb {
                v["rota_baxter"] =
                    json!({ "matrix": matrix_to_json(&rb.matrix), "weight": scalar_to_json(&rb.weight) });
            }
            v
        }
    };
    if let Some(inv) = &a.involution {
        v["involution"] = matrix_to_json(inv.matrix());
    }
    if let Some(act) = &a.action {
        v["group"] = group_to_json(act);
    }
    v
}

/// A module file: `{"dim", "a_prec_m", "a_succ_m", "m_prec_a", "m_succ_a"}` with optional `"involution"` and
/// `"actions"` (one matrix per group element, in the order of the algebra's group).
#[derive(Clone, Debug)]
pub struct ModuleFile {
    pub rep: Representation,
    pub involution: Option<Involution>,
    pub actions: Option<Vec<Matrix>>,
}

pub fn module_from_json(v: &Value, d: usize) -> Result<ModuleFile> {
    let m = usize_of(field(v, "dim")?, "\"dim\"")?;
    let get = |key: &str, l: usize, r: usize| match v.get(key) {
        Some(x) => bilinear_from_json(x, l, r, m),
        None => Ok(Bilinear::zeros(l, r, m)),
    };
    let rep = Representation::new(
        d,
        m,
        get("a_prec_m", d, m)?,
        get("a_succ_m", d, m)?,
        get("m_prec_a", m, d)?,
        get("m_succ_a", m, d)?,
    )?;
    let involution = v.get("involution").map(|x| matrix_from_json(x).and_then(Involution::new)).transpose()?;
    let actions = v
        .get("actions")
        .map(|a| {
            a.as_array()
                .ok_or_else(|| Error::Input("\"actions\" must be a list of matrices".into()))?
                .iter()
                .map(matrix_from_json)
                .collect::<Result<Vec<_>>>()
        })
        .transpose()?;
    Ok(ModuleFile { rep, involution, actions })
}

/// `{"alpha": [g → m×d matrix], "beta": [r][i][j][out]}`.
pub fn two_cochain_from_json(v: &Value, q: usize, d: usize, m: usize) -> Result<TwoCochain> {
    let alpha = match v.get("alpha") {
        Some(a) => a
            .as_array()
            .ok_or_else(|| Error::Input("\"alpha\" must be a list of matrices".into()))?
            .iter()
            .map(matrix_from_json)
            .collect::<Result<Vec<_>>>()?,
        None => vec![Matrix::zeros(m, d); q],
    };
    if alpha.len() != q || alpha.iter().any(|a| a.rows() != m || a.cols() != d) {
        return Err(Error::Dimension(format!("\"alpha\" needs {q} matrices of shape {m}x{d}")));
    }
    let beta = match v.get("beta") {
        Some(b) => crate::io::unnest(b, &[2, d, d, m])?,
        None => crate::exactmat::zero_vec(2 * d * d * m),
    };
    Ok(TwoCochain { alpha, beta })
}

pub fn two_cochain_to_json(c: &TwoCochain, d: usize, m: usize) -> Value {
    json!({
        "alpha": c.alpha.iter().map(matrix_to_json).collect::<Vec<_>>(),
        "beta": crate::io::nest(&c.beta, &[2, d, d, m]),
    })
}

/// `{"order", "left": [order → products], "right": [...], "phi": [order → {g → matrix}]}`; order 0 is the base.
pub fn deformation_from_json(v: &Value, group: &OrientedGroup, d: usize) -> Result<TruncatedDeformation> {
    let order = usize_of(field(v, "order")?, "\"order\"")?;
    let list = |key: &str| -> Result<&Vec<Value>> {
        let a = field(v, key)?.as_array().ok_or_else(|| Error::Input(format!("{key:?} must be a list")))?;
        if a.len() != order + 1 {
            return Err(Error::Dimension(format!("{key:?} needs {} entries (orders 0..={order})", order + 1)));
        }
        Ok(a)
    };
    let left = list("left")?.iter().map(|x| bilinear_from_json(x, d, d, d)).collect::<Result<Vec<_>>>()?;
    let right = list("right")?.iter().map(|x| bilinear_from_json(x, d, d, d)).collect::<Result<Vec<_>>>()?;
    let phi = list("phi")?
        .iter()
        .map(|x| {
            let obj =
                x.as_object().ok_or_else(|| Error::Input("phi entries must map group elements to matrices".into()))?;
            if let Some(bad) = obj.keys().find(|k| !group.names().contains(k)) {
                return Err(Error::Input(format!("unknown group element {bad:?} in phi")));
            }
            group
                .names()
                .iter()
                .map(|g| match obj.get(g) {
                    Some(m) => matrix_from_json(m),
                    None => Ok(Matrix::zeros(d, d)),
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedDeformation { order, left, right, phi })
}

pub fn deformation_to_json(def: &TruncatedDeformation, group: &OrientedGroup) -> Value {
    let phi: Vec<Value> = def
        .phi
        .iter()
        .map(|ms| {
            let obj: Map<String, Value> = group.names().iter().cloned().zip(ms.iter().map(matrix_to_json)).collect();
            Value::Object(obj)
        })
        .collect();
    json!({
        "order": def.order,
        "left": def.left.iter().map(bilinear_to_json).collect::<Vec<_>>(),
        "right": def.right.iter().map(bilinear_to_json).collect::<Vec<_>>(),
        "phi": phi,
    })
}

/// `{"base": algebra, "total": algebra, "inclusion", "projection", "section"}`; both algebra blocks carry their
/// `"group"`.
pub fn extension_to_json(e: &Extension) -> Value {
    let block = |d: &DendriformAlgebra, act: &OrientedAction| {
        let mut v = dendriform_to_json(d);
        v["group"] = group_to_json(act);
        v
    };
    json!({
        "base": block(&e.base, &e.base_action),
        "total": block(&e.total, &e.total_action),
        "inclusion": matrix_to_json(&e.inclusion),
        "projection": matrix_to_json(&e.projection),
        "section": matrix_to_json(&e.section),
    })
}

pub fn extension_from_json(v: &Value) -> Result<Extension> {
    let block = |key: &str| -> Result<(DendriformAlgebra, OrientedAction)> {
        let a = algebra_from_json(field(v, key)?)?;
        let act = a.require_action(&format!("extension block {key:?}"))?.clone();
        Ok((a.dendriform()?, act))
    };
    let (base, base_action) = block("base")?;
    let (total, total_action) = block("total")?;
    let inclusion = matrix_from_json(field(v, "inclusion")?)?;
    let projection = matrix_from_json(field(v, "projection")?)?;
    let section = matrix_from_json(field(v, "section")?)?;
    let (d, b) = (base.dim(), total.dim());
    if inclusion.rows() != b
        || projection.rows() != d
        || projection.cols() != b
        || section.rows() != b
        || section.cols() != d
    {
        return Err(Error::Dimension(format!("maps do not fit a base of dimension {d} and total of dimension {b}")));
    }
    Ok(Extension { base, base_action, total, total_action, inclusion, projection, section })
}

/// A graded family file.
///
/// `{"lo", "dims", "basis"?, "kind": "dend" | "ainf", "maps": {"k,r" | "k": {"input degrees": {"i,j,…": [[out, c]]}}},
/// "star"?, "rb"?}`. Indices are global basis indices; every tuple must match the degrees in its key.
#[derive(Clone, Debug)]
pub enum GradedFamily {
    Dend(DendInfinity),
    AInf(AInfinity),
}

#[derive(Clone, Debug)]
pub struct HomotopyFile {
    pub family: GradedFamily,
    pub star: Option<Matrix>,
    pub rb: Option<Matrix>,
}

fn graded_map_from_json(v: &Value, space: &GradedSpace, k: usize) -> Result<GradedMap> {
    let d = space.dim();
    let mut m = GradedMap::zeros(k, d);
    let obj = v.as_object().ok_or_else(|| Error::Input("a map must be keyed by input degrees".into()))?;
    for (degs, entries) in obj {
        let want: Vec<i32> = degs
            .split(',')
            .map(|p| p.trim().parse::<i32>().map_err(|_| Error::Input(format!("bad degree key {degs:?}"))))
            .collect::<Result<_>>()?;
        if want.len() != k {
            return Err(Error::Input(format!("degree key {degs:?} should have {k} entries")));
        }
        let mut bad = None;
        read_sparse(entries, k, &vec![d; k], d, |idx, out, c| {
            if idx.iter().zip(&want).any(|(&i, &w)| space.degree(i) != w) {
                bad.get_or_insert_with(|| join(idx));
            }
            m.set(idx, out, c);
        })?;
        if let Some(t) = bad {
            return Err(Error::Input(format!("tuple {t} does not have input degrees {degs}")));
        }
    }
    Ok(m)
}

fn graded_map_to_json(m: &GradedMap, space: &GradedSpace) -> Value {
    let d = m.dim();
    let mut by_degree: BTreeMap<String, Map<String, Value>> = BTreeMap::new();
    let mut tuple = vec![0; m.arity()];
    for t in 0..d.pow(m.arity() as u32) {
        crate::homotopy::decode_into(t, d, &mut tuple);
        let e = sparse_entries(m.basis(&tuple));
        if e.is_empty() {
            continue;
        }
        let degs: Vec<String> = tuple.iter().map(|&i| space.degree(i).to_string()).collect();
        by_degree.entry(degs.join(",")).or_default().insert(join(&tuple), Value::Array(e));
    }
    Value::Object(by_degree.into_iter().map(|(k, v)| (k, Value::Object(v))).collect())
}

pub fn homotopy_from_json(v: &Value) -> Result<HomotopyFile> {
    let lo = field(v, "lo")?.as_i64().ok_or_else(|| Error::Input("\"lo\" must be an integer".into()))? as i32;
    let dims = field(v, "dims")?
        .as_array()
        .ok_or_else(|| Error::Input("\"dims\" must be a list".into()))?
        .iter()
        .map(|x| usize_of(x, "a dimension"))
        .collect::<Result<Vec<_>>>()?;
    let mut space = GradedSpace::new(lo, dims);
    if let Some(b) = v.get("basis") {
        space = space.with_names(names_from_json(b)?)?;
    }
    let d = space.dim();
    let maps = field(v, "maps")?.as_object().ok_or_else(|| Error::Input("\"maps\" must be an object".into()))?;
    let kind = v.get("kind").and_then(Value::as_str).unwrap_or("dend");
    let family = match kind {
        "dend" => {
            let k_max = maps
                .keys()
                .map(|key| index_key(key, 2))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .map(|x| x[0])
                .max()
                .unwrap_or(0);
            let mut slices: Vec<Vec<GradedMap>> = (1..=k_max).map(|k| vec![GradedMap::zeros(k, d); k]).collect();
            for (key, m) in maps {
                let kr = index_key(key, 2)?;
                let (k, r) = (kr[0], kr[1]);
                if k == 0 || r == 0 || r > k {
                    return Err(Error::Index(format!("slice {key:?} needs 1 ≤ r ≤ k")));
                }
                slices[k - 1][r - 1] = graded_map_from_json(m, &space, k)?;
            }
            GradedFamily::Dend(DendInfinity::new(space.clone(), slices)?)
        }
        "ainf" => {
            let k_max = maps
                .keys()
                .map(|key| index_key(key, 1))
                .collect::<Result<Vec<_>>>()?
                .iter()
                .map(|x| x[0])
                .max()
                .unwrap_or(0);
            let mut all: Vec<GradedMap> = (1..=k_max).map(|k| GradedMap::zeros(k, d)).collect();
            for (key, m) in maps {
                let k = index_key(key, 1)?[0];
                if k == 0 {
                    return Err(Error::Index("arity 0 is not allowed".into()));
                }
                all[k - 1] = graded_map_from_json(m, &space, k)?;
            }
            GradedFamily::AInf(AInfinity::new(space.clone(), all)?)
        }
        other => return Err(Error::Input(format!("unknown family kind {other:?}, expected \"dend\" or \"ainf\""))),
    };
    let square = |key: &str| -> Result<Option<Matrix>> {
        v.get(key)
            .map(|x| {
                let m = matrix_from_json(x)?;
                if m.rows() != d || m.cols() != d {
                    return Err(Error::Dimension(format!("{key:?} must be {d}x{d}")));
                }
                Ok(m)
            })
            .transpose()
    };
    Ok(HomotopyFile { family, star: square("star")?, rb: square("rb")? })
}

fn space_json(space: &GradedSpace) -> Value {
    json!({ "lo": space.lo(), "dims": space.dims(), "basis": space.names() })
}

pub fn dend_infinity_to_json(fam: &DendInfinity) -> Value {
    let mut v = space_json(fam.space());
    let mut maps = Map::new();
    for (k1, slices) in fam.maps().iter().enumerate() {
        for (r1, m) in slices.iter().enumerate() {
            maps.insert(join(&[k1 + 1, r1 + 1]), graded_map_to_json(m, fam.space()));
        }
    }
    v["kind"] = json!("dend");
    v["maps"] = Value::Object(maps);
    v
}

pub fn a_infinity_to_json(fam: &AInfinity) -> Value {
    let mut v = space_json(fam.space());
    let maps: Map<String, Value> = fam
        .maps()
        .iter()
        .enumerate()
        .map(|(k1, m)| ((k1 + 1).to_string(), graded_map_to_json(m, fam.space())))
        .collect();
    v["kind"] = json!("ainf");
    v["maps"] = Value::Object(maps);
    v
}

pub fn homotopy_to_json(h: &HomotopyFile) -> Value {
    let mut v = match &h.family {
        GradedFamily::Dend(f) => dend_infinity_to_json(f),
        GradedFamily::AInf(f) => a_infinity_to_json(f),
    };
    if let Some(s) = &h.star {
        v["star"] = matrix_to_json(s);
    }
    if let Some(r) = &h.rb {
        v["rb"] = matrix_to_json(r);
    }
    v
}
