//! The `dendro` command line: argument parsing, command dispatch and output rendering.
//!
//! Exit codes: 0 for success or all checks passing, 1 when a mathematical identity fails, 2 for malformed input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{
    check_action_laws, check_associative, check_dendriform, check_involution, check_oriented_dendriform,
    check_oriented_product, check_oriented_representation, check_oriented_tridendriform, check_representation,
    check_rota_baxter, check_tridendriform, induced_tridendriform, DendriformAlgebra, Involution, OrientedAction,
    OrientedGroup, Representation,
};
use crate::cohomology::{
    cohomology_range, is_two_cocycle, s_map, Bicomplex, CochainComplex, CohomologyDegree, DendComplex, Eigencomplex,
    EquivariantComplex, GroupComplex, HochComplex, Involutive, InvolutiveComplex, Oriented,
};
use crate::error::{Error, Result};
use crate::exactmat::{format_scalar, Matrix};
use crate::extdef::{
    build_extension, check_deformation, check_extension, extensions_equivalent, extract_cocycle, first_order_class,
    TruncatedDeformation,
};
use crate::free::{FreeDendriform, MaxWordAlgebra, TruncatedTensorAlgebra};
use crate::homotopy::{
    a_infinity_sum, check_a_infinity, check_dend_infinity, check_involutive_a_infinity, check_involutive_dend_infinity,
    induced_dend_infinity, rb_a_infinity_check,
};
use crate::io::{
    algebra_from_json, deformation_from_json, deformation_to_json, dend_infinity_to_json, extension_from_json,
    extension_to_json, homotopy_from_json, matrix_to_json, module_from_json, two_cochain_from_json,
    two_cochain_to_json, vector_to_json, AlgebraFile, GradedFamily, Structure,
};
use crate::report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "dendro",
    version,
    about = "Exact checks, cohomology, extensions and deformations of dendriform algebras"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Theory {
    /// Dendriform cohomology with coefficients in a representation.
    Dend,
    /// The `T_n = +1` part (needs an involution).
    Inv,
    /// The `T_n = −1` part.
    Skew,
    /// Hochschild cohomology of the associated associative algebra.
    Hoch,
    /// Involutive Hochschild cohomology.
    InvHoch,
    /// Group cohomology of the module.
    Grp,
    /// Total complex of the oriented dendriform bicomplex.
    Oriented,
    /// Total complex of the oriented Hochschild bicomplex.
    OrientedHoch,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run every applicable checker on algebra, extension or graded-family files.
    Validate {
        files: Vec<PathBuf>,
        /// Arity cap for graded families.
        #[arg(long, default_value_t = 3)]
        arity: usize,
    },
    /// Cochain, cocycle, coboundary and cohomology dimensions.
    Cohomology {
        algebra: PathBuf,
        /// Representation file; defaults to the adjoint representation.
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Theory::Dend)]
        theory: Theory,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Emit representative cocycles.
        #[arg(long)]
        witnesses: bool,
    },
    /// Compare dendriform cohomology with its involutive and skew-involutive parts.
    Split {
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Check that the slice-sum map to Hochschild cochains is a chain map compatible with the twists.
    Smap {
        algebra: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Check whether a total 2-cochain `(α, β)` is a cocycle.
    Cocycle {
        algebra: PathBuf,
        cochain: PathBuf,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Build the extension of a 2-cocycle (zero if none is given).
    Extend {
        algebra: PathBuf,
        #[arg(long)]
        cochain: Option<PathBuf>,
        #[arg(long)]
        module: Option<PathBuf>,
    },
    /// Decide whether two extensions are equivalent.
    Equiv { first: PathBuf, second: PathBuf },
    /// Check a truncated deformation (trivial if none is given) and report its first-order class.
    Deform {
        algebra: PathBuf,
        #[arg(long)]
        deformation: Option<PathBuf>,
        /// Order of the trivial deformation used when no file is given.
        #[arg(long, default_value_t = 1)]
        order: usize,
    },
    /// Free dendriform algebra on k generators up to degree N.
    Free {
        #[arg(long, default_value_t = 1)]
        generators: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
        /// Also emit the multiplication tables.
        #[arg(long)]
        tables: bool,
    },
    /// MAX dendriform algebra on words over an ordered alphabet.
    Maxalg {
        /// Comma-separated single-character letters in increasing order.
        #[arg(long, default_value = "1,2")]
        letters: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Check orientation under ℤ/2 acting by the order-reversing permutation with ε = −1.
        #[arg(long)]
        reversing: bool,
    },
    /// Reduced tensor algebra on k generators up to degree N with the reversing ℤ/2 action.
    Tensor {
        #[arg(long, default_value_t = 1)]
        generators: usize,
        #[arg(long, default_value_t = 3)]
        max_degree: usize,
    },
    /// Check a graded Dend∞ or A∞ family; with an operator `rb`, build and check the induced Dend∞ family.
    Homotopy {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        arity: usize,
        /// Print the induced family.
        #[arg(long)]
        emit: bool,
    },
}

/// What a command produced.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// Some identity failed.
    pub violation: bool,
}

impl Outcome {
    fn new(text: String, json: Value, violation: bool) -> Self {
        Outcome { text, json, violation }
    }

    fn from_reports(reports: &[Report], extra: Value) -> Self {
        let mut text = String::new();
        for r in reports {
            writeln!(text, "{r}").unwrap();
        }
        let violation = reports.iter().any(|r| !r.passed());
        let mut json = json!({ "reports": reports, "pass": !violation });
        if let Value::Object(extra) = extra {
            json.as_object_mut().unwrap().extend(extra);
        }
        Outcome { text, json, violation }
    }
}

/// Exit code and the two output streams of one invocation.
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Run
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let msg = e.render().to_string();
            return if code == 0 {
                Run { code, stdout: msg, stderr: String::new() }
            } else {
                Run { code, stdout: String::new(), stderr: msg }
            };
        }
    };
    match execute(&cli.command) {
        Ok(out) => {
            let stdout = match cli.format {
                Format::Text => out.text,
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
            };
            Run { code: i32::from(out.violation), stdout, stderr: String::new() }
        }
        Err(e) => {
            Run { code: if e.is_violation() { 1 } else { 2 }, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

pub fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Validate { files, arity } => cmd_validate(files, *arity),
        Command::Cohomology { algebra, module, theory, max_degree, witnesses } => {
            cmd_cohomology(algebra, module.as_deref(), *theory, *max_degree, *witnesses)
        }
        Command::Split { algebra, module, max_degree } => cmd_split(algebra, module.as_deref(), *max_degree),
        Command::Smap { algebra, module, max_degree } => cmd_smap(algebra, module.as_deref(), *max_degree),
        Command::Cocycle { algebra, cochain, module } => cmd_cocycle(algebra, cochain, module.as_deref()),
        Command::Extend { algebra, cochain, module } => cmd_extend(algebra, cochain.as_deref(), module.as_deref()),
        Command::Equiv { first, second } => cmd_equiv(first, second),
        Command::Deform { algebra, deformation, order } => cmd_deform(algebra, deformation.as_deref(), *order),
        Command::Free { generators, max_degree, tables } => cmd_free(*generators, *max_degree, *tables),
        Command::Maxalg { letters, max_len, reversing } => cmd_maxalg(letters, *max_len, *reversing),
        Command::Tensor { generators, max_degree } => cmd_tensor(*generators, *max_degree),
        Command::Homotopy { file, arity, emit } => cmd_homotopy(file, *arity, *emit),
    }
}

fn read_json(path: &Path) -> Result<Value> {
    let s = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&s).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<AlgebraFile> {
    algebra_from_json(&read_json(path)?)
}

/// An algebra with a representation and the involution and group action carried by each.
struct Pair {
    file: AlgebraFile,
    alg: DendriformAlgebra,
    rep: Representation,
    inv_m: Option<Involution>,
    act_m: Option<OrientedAction>,
}

impl Pair {
    fn load(algebra: &Path, module: Option<&Path>) -> Result<Self> {
        let file = load_algebra(algebra)?;
        let alg = file.dendriform()?;
        let Some(mpath) = module else {
            return Ok(Pair {
                rep: Representation::adjoint(&alg),
                inv_m: file.involution.clone(),
                act_m: file.action.clone(),
                alg,
                file,
            });
        };
        let m = module_from_json(&read_json(mpath)?, alg.dim())?;
        let act_m = match (&m.actions, &file.action) {
            (Some(mats), Some(act)) => Some(OrientedAction::new(act.group().clone(), mats.clone())?),
            (Some(_), None) => return Err(Error::Input("module \"actions\" need a \"group\" on the algebra".into())),
            (None, _) => None,
        };
        Ok(Pair { rep: m.rep, inv_m: m.involution, act_m, alg, file })
    }

    fn involutions(&self, why: &str) -> Result<(Involution, Involution)> {
        let inv_d = self.file.require_involution(why)?.clone();
        let inv_m =
            self.inv_m.clone().ok_or_else(|| Error::Input(format!("{why} needs an involution on the module")))?;
        Ok((inv_d, inv_m))
    }

    fn actions(&self, why: &str) -> Result<(OrientedAction, OrientedAction)> {
        let act_d = self.file.require_action(why)?.clone();
        let act_m =
            self.act_m.clone().ok_or_else(|| Error::Input(format!("{why} needs a group action on the module")))?;
        Ok((act_d, act_m))
    }

    fn dend(&self) -> Result<DendComplex> {
        DendComplex::new(self.alg.clone(), self.rep.clone())
    }

    fn hoch(&self) -> Result<HochComplex> {
        HochComplex::from_dendriform(&self.alg, &self.rep)
    }

    fn oriented(&self, why: &str) -> Result<Oriented<DendComplex>> {
        let (a, m) = self.actions(why)?;
        Oriented::new(self.dend()?, a, m)
    }
}

fn dims_table(rows: &[CohomologyDegree]) -> String {
    let mut s = format!("{:>6} {:>8} {:>8} {:>8} {:>8}\n", "degree", "dim C", "dim Z", "dim B", "dim H");
    for r in rows {
        let d = &r.dims;
        writeln!(s, "{:>6} {:>8} {:>8} {:>8} {:>8}", d.degree, d.dim_c, d.dim_z, d.dim_b, d.dim_h).unwrap();
    }
    s
}

fn cohomology_outcome<C: CochainComplex + ?Sized>(c: &C, lo: usize, hi: usize, witnesses: bool) -> Result<Outcome> {
    let rows = cohomology_range(c, lo, hi, witnesses)?;
    let mut text = format!("{}\n{}", c.name(), dims_table(&rows));
    let mut degrees = Vec::new();
    for r in &rows {
        let mut v = serde_json::to_value(r.dims).expect("dims");
        if let Some(w) = &r.witnesses {
            v["witnesses"] = Value::Array(w.iter().map(|x| vector_to_json(x)).collect());
            for (k, x) in w.iter().enumerate() {
                let xs: Vec<String> = x.iter().map(format_scalar).collect();
                writeln!(text, "H^{} witness {k}: [{}]", r.dims.degree, xs.join(", ")).unwrap();
            }
        }
        degrees.push(v);
    }
    Ok(Outcome::new(text, json!({ "complex": c.name(), "degrees": degrees }), false))
}

fn cmd_cohomology(
    algebra: &Path,
    module: Option<&Path>,
    theory: Theory,
    max: usize,
    witnesses: bool,
) -> Result<Outcome> {
    let p = Pair::load(algebra, module)?;
    let why = format!("--theory {}", theory.to_possible_value().expect("named").get_name());
    let lo_dend = 1;
    match theory {
        Theory::Dend => cohomology_outcome(&p.dend()?, lo_dend, max, witnesses),
        Theory::Hoch => cohomology_outcome(&p.hoch()?, 0, max, witnesses),
        Theory::Inv | Theory::Skew => {
            let (a, m) = p.involutions(&why)?;
            let cx = Involutive::new(p.dend()?, a, m)?;
            cohomology_outcome(
                &Eigencomplex::new(&cx, if theory == Theory::Inv { 1 } else { -1 }),
                lo_dend,
                max,
                witnesses,
            )
        }
        Theory::InvHoch => {
            let (a, m) = p.involutions(&why)?;
            let cx = Involutive::new(p.hoch()?, a, m)?;
            cohomology_outcome(&Eigencomplex::new(&cx, 1), 0, max, witnesses)
        }
        Theory::Grp => {
            let (_, m) = p.actions(&why)?;
            cohomology_outcome(&GroupComplex::new(m), 0, max, witnesses)
        }
        Theory::Oriented => {
            let cx = p.oriented(&why)?;
            cohomology_outcome(&Bicomplex::new(&cx, 1)?, lo_dend, max, witnesses)
        }
        Theory::OrientedHoch => {
            let (a, m) = p.actions(&why)?;
            let cx = Oriented::new(p.hoch()?, a, m)?;
            cohomology_outcome(&Bicomplex::new(&cx, 0)?, 0, max, witnesses)
        }
    }
}

fn cmd_split(algebra: &Path, module: Option<&Path>, max: usize) -> Result<Outcome> {
    let p = Pair::load(algebra, module)?;
    let (a, m) = p.involutions("split")?;
    let cx = Involutive::new(p.dend()?, a, m)?;
    let full = cohomology_range(&cx, 1, max, false)?;
    let plus = cohomology_range(&Eigencomplex::new(&cx, 1), 1, max, false)?;
    let minus = cohomology_range(&Eigencomplex::new(&cx, -1), 1, max, false)?;
    let mut text = format!("{:>6} {:>8} {:>8} {:>8}\n", "degree", "dim H", "dim iH", "dim i-H");
    let mut rows = Vec::new();
    let mut violation = false;
    for ((f, pl), mi) in full.iter().zip(&plus).zip(&minus) {
        let (h, hp, hm) = (f.dims.dim_h, pl.dims.dim_h, mi.dims.dim_h);
        let ok = h == hp + hm;
        violation |= !ok;
        writeln!(text, "{:>6} {:>8} {:>8} {:>8}{}", f.dims.degree, h, hp, hm, if ok { "" } else { "  MISMATCH" })
            .unwrap();
        rows.push(json!({ "degree": f.dims.degree, "dim_h": h, "dim_ih": hp, "dim_skew_h": hm, "split": ok }));
    }
    Ok(Outcome::new(text, json!({ "degrees": rows, "pass": !violation }), violation))
}

fn matrix_report(
    name: &str,
    identity: &str,
    pairs: impl IntoIterator<Item = (usize, Result<(Matrix, Matrix)>)>,
) -> Result<Report> {
    let mut c = crate::report::Checker::new(name);
    for (n, pair) in pairs {
        let (lhs, rhs) = pair?;
        for k in 0..lhs.cols() {
            if !c.eq(identity, || format!("n = {n}, basis cochain {k}"), lhs.column(k), rhs.column(k)) {
                return Ok(c.finish());
            }
        }
    }
    Ok(c.finish())
}

fn cmd_smap(algebra: &Path, module: Option<&Path>, max: usize) -> Result<Outcome> {
    let p = Pair::load(algebra, module)?;
    let (d, m) = (p.alg.dim(), p.rep.dim());
    let dc = p.dend()?;
    let hc = p.hoch()?;
    let mut reports = vec![matrix_report(
        "S is a chain map",
        "δ_Hoch∘S_n = S_{n+1}∘δ_dend",
        (1..=max).map(|n| {
            (n, (|| Ok((hc.differential(n)?.mul(&s_map(n, d, m))?, s_map(n + 1, d, m).mul(&dc.differential(n)?)?)))())
        }),
    )?];
    if let Ok((a, b)) = p.involutions("smap") {
        let id = Involutive::new(dc.clone(), a.clone(), b.clone())?;
        let ih = Involutive::new(hc.clone(), a, b)?;
        reports.push(matrix_report(
            "S respects the involutions",
            "S_n∘T_n = T_n∘S_n",
            (1..=max).map(|n| (n, (|| Ok((s_map(n, d, m).mul(&id.t_map(n))?, ih.t_map(n).mul(&s_map(n, d, m))?)))())),
        )?);
    }
    if let Ok((a, b)) = p.actions("smap") {
        let od = Oriented::new(dc, a.clone(), b.clone())?;
        let oh = Oriented::new(hc, a, b)?;
        let q = od.group().order();
        reports.push(matrix_report(
            "S respects the group action",
            "S_n(g·f) = g·S_n(f)",
            (1..=max).flat_map(|n| {
                let (od, oh) = (&od, &oh);
                (0..q).map(move |g| {
                    (n, (|| Ok((s_map(n, d, m).mul(&od.action(g, n))?, oh.action(g, n).mul(&s_map(n, d, m))?)))())
                })
            }),
        )?);
    }
    Ok(Outcome::from_reports(&reports, json!({})))
}

fn cmd_cocycle(algebra: &Path, cochain: &Path, module: Option<&Path>) -> Result<Outcome> {
    let p = Pair::load(algebra, module)?;
    let cx = p.oriented("cocycle")?;
    let c = two_cochain_from_json(&read_json(cochain)?, cx.group().order(), p.alg.dim(), p.rep.dim())?;
    let rep = is_two_cocycle(&cx, &c)?;
    Ok(Outcome::from_reports(&[rep], json!({})))
}

fn cmd_extend(algebra: &Path, cochain: Option<&Path>, module: Option<&Path>) -> Result<Outcome> {
    let p = Pair::load(algebra, module)?;
    let cx = p.oriented("extend")?;
    let (q, d, m) = (cx.group().order(), p.alg.dim(), p.rep.dim());
    let c = match cochain {
        Some(path) => two_cochain_from_json(&read_json(path)?, q, d, m)?,
        None => crate::cohomology::TwoCochain::zero(q, d, m),
    };
    let e = build_extension(&cx, &c)?;
    let rep = check_extension(&e)?;
    let mut out = Outcome::from_reports(&[rep], json!({ "extension": extension_to_json(&e) }));
    out.text.push_str(&serde_json::to_string_pretty(&extension_to_json(&e)).expect("json"));
    out.text.push('\n');
    Ok(out)
}

fn cmd_equiv(first: &Path, second: &Path) -> Result<Outcome> {
    let e = extension_from_json(&read_json(first)?)?;
    let e2 = extension_from_json(&read_json(second)?)?;
    let mut reports = vec![check_extension(&e)?, check_extension(&e2)?];
    if reports.iter().any(|r| !r.passed()) {
        return Ok(Outcome::from_reports(&reports, json!({})));
    }
    let (rep, act_m) = e.induced_module()?;
    let cx = Oriented::new(DendComplex::new(e.base.clone(), rep)?, e.base_action.clone(), act_m)?;
    let (c1, c2) = (extract_cocycle(&e)?, extract_cocycle(&e2)?);
    let (d, m) = (e.base.dim(), e.kernel_dim());
    let found = extensions_equivalent(&cx, &e, &e2)?;
    let mut extra = json!({
        "cocycles": [two_cochain_to_json(&c1, d, m), two_cochain_to_json(&c2, d, m)],
        "equivalent": found.is_some(),
    });
    let mut text = String::new();
    match &found {
        Some(eq) => {
            extra["gamma"] = matrix_to_json(&eq.gamma);
            extra["phi"] = matrix_to_json(&eq.phi);
            reports.push(crate::extdef::check_equivalence(&e, &e2, &eq.phi)?);
            text.push_str("equivalent\n");
        }
        None => text.push_str("not equivalent\n"),
    }
    let mut out = Outcome::from_reports(&reports, extra);
    out.text.push_str(&text);
    Ok(out)
}

fn cmd_deform(algebra: &Path, deformation: Option<&Path>, order: usize) -> Result<Outcome> {
    let file = load_algebra(algebra)?;
    let base = file.dendriform()?;
    let act = file.action.clone().unwrap_or_else(|| OrientedAction::trivial(OrientedGroup::trivial(), base.dim()));
    let def = match deformation {
        Some(path) => deformation_from_json(&read_json(path)?, act.group(), base.dim())?,
        None => TruncatedDeformation::trivial(&base, &act, order),
    };
    let rep = check_deformation(&base, &act, &def)?;
    let mut extra = json!({ "deformation": deformation_to_json(&def, act.group()) });
    let mut reports = vec![rep];
    let mut text = String::new();
    if def.order >= 1 {
        let cx = Oriented::new(DendComplex::adjoint(base.clone()), act.clone(), act.clone())?;
        let (class, verdict) = first_order_class(&cx, &def)?;
        let zero = class.alpha.iter().all(Matrix::is_zero) && class.beta.iter().all(num_traits::Zero::is_zero);
        extra["first_order_class"] = crate::io::two_cochain_to_json(&class, base.dim(), base.dim());
        writeln!(text, "first-order class{}", if zero { ": (0, 0)" } else { "" }).unwrap();
        if !zero {
            writeln!(text, "{}", serde_json::to_string(&extra["first_order_class"]).expect("json")).unwrap();
        }
        reports.push(verdict);
    }
    let mut out = Outcome::from_reports(&reports, extra);
    out.text.push_str(&text);
    Ok(out)
}

fn cmd_free(k: usize, n: usize, tables: bool) -> Result<Outcome> {
    let f = FreeDendriform::new(k, n)?;
    let alg = f.algebra();
    let act = OrientedAction::trivial(OrientedGroup::z2_reversing(), k);
    let on_window = f.action(&act)?;
    let reports = [f.check(&alg), f.check_oriented(&alg, &on_window)?];
    let dims: Vec<usize> = (1..=n).map(|m| f.component_dim(m)).collect();
    let mut text = String::from("degree      dim\n");
    for (m, dim) in dims.iter().enumerate() {
        writeln!(text, "{:>6} {:>8}", m + 1, dim).unwrap();
    }
    let mut extra = json!({ "generators": k, "max_degree": n, "dims": dims });
    if tables {
        let names = f.names();
        let mut per_degree = Vec::new();
        for deg in 2..=n {
            let mut prec = serde_json::Map::new();
            let mut succ = serde_json::Map::new();
            for i in 0..f.dim() {
                for j in 0..f.dim() {
                    if f.degree(i) + f.degree(j) != deg {
                        continue;
                    }
                    let key = format!("{} , {}", names[i], names[j]);
                    for (table, b) in [(&mut prec, alg.left()), (&mut succ, alg.right())] {
                        let terms: serde_json::Map<String, Value> = b
                            .basis(i, j)
                            .iter()
                            .enumerate()
                            .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                            .map(|(o, c)| (names[o].clone(), Value::String(format_scalar(c))))
                            .collect();
                        table.insert(key.clone(), Value::Object(terms));
                    }
                }
            }
            per_degree.push(json!({ "degree": deg, "prec": prec, "succ": succ }));
        }
        extra["tables"] = Value::Array(per_degree);
        text.push_str(&serde_json::to_string_pretty(&extra["tables"]).expect("json"));
        text.push('\n');
    }
    let mut out = Outcome::from_reports(&reports, extra);
    out.text = text + &out.text;
    Ok(out)
}

fn cmd_maxalg(letters: &str, max_len: usize, reversing: bool) -> Result<Outcome> {
    let letters: Vec<String> = letters.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    if letters.iter().any(|l| l.chars().count() != 1) {
        return Err(Error::Input("letters must be single characters".into()));
    }
    let m = MaxWordAlgebra::new(letters, max_len)?;
    let alg = m.algebra();
    let mut reports = vec![m.check(&alg)];
    let k = m.letters().len();
    let (group, perms) = if reversing {
        (OrientedGroup::z2_reversing(), vec![(0..k).collect(), (0..k).rev().collect()])
    } else {
        (OrientedGroup::cyclic(2, 1)?, vec![(0..k).collect::<Vec<_>>(); 2])
    };
    let act = m.action(&group, &perms)?;
    reports.push(check_action_laws(&act));
    reports.push(m.check_oriented(&alg, &act)?);
    Ok(Outcome::from_reports(&reports, json!({ "dim": m.dim() })))
}

fn cmd_tensor(k: usize, n: usize) -> Result<Outcome> {
    let t = TruncatedTensorAlgebra::new(k, n)?;
    let alg = t.algebra();
    let act = t.action(&OrientedAction::trivial(OrientedGroup::z2_reversing(), k))?;
    let reports = [t.check(&alg), check_action_laws(&act), t.check_oriented(&alg, &act)?];
    Ok(Outcome::from_reports(&reports, json!({ "dim": t.dim() })))
}

fn cmd_homotopy(path: &Path, arity: usize, emit: bool) -> Result<Outcome> {
    let h = homotopy_from_json(&read_json(path)?)?;
    let mut reports = Vec::new();
    let mut extra = json!({});
    match &h.family {
        GradedFamily::Dend(f) => {
            reports.push(check_dend_infinity(f, arity));
            reports.push(check_a_infinity(&a_infinity_sum(f), arity));
            if let Some(s) = &h.star {
                reports.push(check_involutive_dend_infinity(f, s, arity)?);
            }
        }
        GradedFamily::AInf(f) => {
            reports.push(check_a_infinity(f, arity));
            if let Some(s) = &h.star {
                reports.push(check_involutive_a_infinity(f, s, arity)?);
            }
            if let Some(rb) = &h.rb {
                let rep = rb_a_infinity_check(f, rb, arity)?;
                let ok = rep.passed();
                reports.push(rep);
                if ok {
                    let (ind, rep) = induced_dend_infinity(f, rb, h.star.as_ref(), arity)?;
                    reports.push(rep);
                    if emit {
                        extra["induced"] = dend_infinity_to_json(&ind);
                    }
                }
            }
        }
    }
    let mut out = Outcome::from_reports(&reports, extra.clone());
    if let Some(ind) = extra.get("induced") {
        out.text.push_str(&serde_json::to_string_pretty(ind).expect("json"));
        out.text.push('\n');
    }
    Ok(out)
}

fn validate_algebra(a: &AlgebraFile) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    match &a.structure {
        Structure::Dendriform(d) => {
            reports.push(check_dendriform(d));
            if let Some(inv) = &a.involution {
                reports.push(check_involution(d, inv)?);
            }
            if let Some(act) = &a.action {
                reports.push(check_action_laws(act));
                reports.push(check_oriented_dendriform(d, act)?);
            }
        }
        Structure::Tridendriform(t) => {
            reports.push(check_tridendriform(t));
            if let Some(inv) = &a.involution {
                reports.push(check_involution(&t.to_dendriform(), inv)?);
            }
            if let Some(act) = &a.action {
                reports.push(check_action_laws(act));
                reports.push(check_oriented_tridendriform(t, act)?);
            }
        }
        Structure::Associative(m, rb) => {
            reports.push(check_associative(m));
            if let Some(act) = &a.action {
                reports.push(check_action_laws(act));
                reports.push(check_oriented_product("oriented associative", m.mult(), act)?);
            }
            if let Some(rb) = rb {
                let rep = check_rota_baxter(m, rb)?;
                let ok = rep.passed();
                reports.push(rep);
                if ok {
                    reports.push(check_tridendriform(&induced_tridendriform(m, rb)?));
                }
            }
        }
    }
    Ok(reports)
}

fn cmd_validate(files: &[PathBuf], arity: usize) -> Result<Outcome> {
    if files.is_empty() {
        return Err(Error::Input("no files given".into()));
    }
    let mut all = Vec::new();
    let mut per_file = Vec::new();
    for path in files {
        let v = read_json(path)?;
        let reports = if v.get("dims").is_some() {
            let h = homotopy_from_json(&v)?;
            match &h.family {
                GradedFamily::Dend(f) => {
                    let mut r = vec![check_dend_infinity(f, arity)];
                    if let Some(s) = &h.star {
                        r.push(check_involutive_dend_infinity(f, s, arity)?);
                    }
                    r
                }
                GradedFamily::AInf(f) => {
                    let mut r = vec![check_a_infinity(f, arity)];
                    if let Some(s) = &h.star {
                        r.push(check_involutive_a_infinity(f, s, arity)?);
                    }
                    if let Some(rb) = &h.rb {
                        r.push(rb_a_infinity_check(f, rb, arity)?);
                    }
                    r
                }
            }
        } else if v.get("total").is_some() {
            vec![check_extension(&extension_from_json(&v)?)?]
        } else {
            let a = algebra_from_json(&v)?;
            let mut r = validate_algebra(&a)?;
            if let Ok(d) = a.dendriform() {
                if let Structure::Associative(..) = a.structure {
                    r.push(check_dendriform(&d));
                    if let Some(inv) = &a.involution {
                        r.push(check_involution(&d, inv)?);
                    }
                }
                let rep = Representation::adjoint(&d);
                if a.involution.is_some() || a.action.is_some() {
                    r.push(check_representation(&d, &rep)?);
                }
                if let Some(inv) = &a.involution {
                    r.push(crate::algebra::check_involutive_representation(&d, inv, &rep, inv)?);
                }
                if let Some(act) = &a.action {
                    r.push(check_oriented_representation(&d, act, &rep, act)?);
                }
            }
            r
        };
        per_file.push(json!({ "file": path.display().to_string(), "reports": reports }));
        all.extend(reports.into_iter().map(|r| (path.display().to_string(), r)));
    }
    let violation = all.iter().any(|(_, r)| !r.passed());
    let mut text = String::new();
    for (file, r) in &all {
        writeln!(text, "{file}: {r}").unwrap();
    }
    Ok(Outcome::new(text, json!({ "files": per_file, "pass": !violation }), violation))
}

/// Caps the global thread pool at `DENDRO_THREADS` when set.
pub fn init_threads() -> Result<()> {
    if let Ok(v) = std::env::var("DENDRO_THREADS") {
        let n: usize = v.trim().parse().map_err(|_| Error::Input(format!("DENDRO_THREADS={v:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Error::Input(format!("thread pool: {e}")))?;
    }
    Ok(())
}
