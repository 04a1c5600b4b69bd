//! Command-line front end.
//!
//! [`execute`] runs one command and returns a [`Report`] holding both the
//! table text and the JSON value; `main` only prints and picks the exit code.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use hjj_core::algebra::{central_extension, d_extension, hom_annihilator, verify_algebra, HomAlgebra};
use hjj_core::cohomology::{CochainComplex, CohomologyReport, DEFAULT_DEGREE_CAP};
use hjj_core::deformation::{formal_deformation_check, rb_formal_deformation_check, rigidity_probe};
use hjj_core::derivation::{derivation_space, inner_antiderivation_space};
use hjj_core::io;
use hjj_core::representation::{adjoint_rep, trivial_rep, verify_representation, Representation};
use hjj_core::rotabaxter::{induced_algebra, induced_rep, nijenhuis_check, verify_rb};
use hjj_core::{Error, Scalar};

#[derive(Parser, Debug)]
#[command(name = "hjj", version, about = "Exact computations for Hom-Jacobi-Jordan algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Highest cochain degree that may be assembled.
    #[arg(long = "max-degree", global = true, env = "HJJ_MAX_DEGREE")]
    pub max_degree: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the algebra axioms, and optionally a representation.
    Verify {
        algebra: PathBuf,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Basis of the Hom-annihilator.
    Annihilator { algebra: PathBuf },
    /// Space of α^k-derivations or antiderivations.
    Derivations {
        algebra: PathBuf,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        k: i32,
        #[arg(long)]
        anti: bool,
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Cocycles, coboundaries and cohomology in one degree.
    Cohomology {
        algebra: PathBuf,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        selector: RepSelector,
    },
    /// Relative Rota-Baxter operator: verification, induced structures, cohomology.
    Rb {
        algebra: PathBuf,
        #[arg(long)]
        op: PathBuf,
        /// Representation file; the adjoint representation when absent.
        #[arg(long)]
        rep: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        n: usize,
        /// Operator series `[T_0, …, T_k]` to check as a formal deformation.
        #[arg(long)]
        series: Option<PathBuf>,
    },
    /// Nijenhuis operator check and its deformed product.
    Nijenhuis {
        algebra: PathBuf,
        #[arg(long)]
        op: PathBuf,
    },
    /// Formal deformation check of a product series, or the rigidity probe without one.
    Deform {
        algebra: PathBuf,
        #[arg(long)]
        series: Option<PathBuf>,
    },
    /// Central extension by a form (`--theta`) or extension by a map (`--op`).
    #[command(group(ArgGroup::new("ext").required(true).args(["theta", "op"])))]
    Extend {
        algebra: PathBuf,
        #[arg(long)]
        theta: Option<PathBuf>,
        #[arg(long)]
        op: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct RepSelector {
    /// α^s-adjoint representation.
    #[arg(long, allow_hyphen_values = true)]
    adjoint: Option<i32>,
    /// Trivial one-dimensional representation.
    #[arg(long)]
    trivial: bool,
    /// Representation file.
    #[arg(long)]
    rep: Option<PathBuf>,
}

/// Output of a successful run.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub json: Value,
    /// False when the computation ran and the verdict is negative.
    pub ok: bool,
}

impl Report {
    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            io::to_pretty(&self.json)
        } else {
            self.text.clone()
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }
}

/// Input failures, reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<Error> for InputError {
    fn from(e: Error) -> Self {
        InputError(e.to_string())
    }
}

type Out = Result<Report, InputError>;

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: hjj_core::Result<T>) -> Result<T, InputError> {
    r.map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn load_algebra(path: &Path) -> Result<HomAlgebra, InputError> {
    with_path(path, io::parse_algebra(&read(path)?))
}

fn load_rep(path: &Path, a: &HomAlgebra) -> Result<Representation, InputError> {
    with_path(path, io::parse_representation(&read(path)?, a))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vec_text(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(Scalar::to_string).collect();
    format!("[{}]", parts.join(", "))
}

/// `2e1 - e3` style rendering of a vector in a labelled basis.
fn combo(v: &[Scalar], labels: &[String]) -> String {
    let mut s = String::new();
    for (x, l) in v.iter().zip(labels) {
        if x.is_zero() {
            continue;
        }
        let neg = x < &Scalar::zero();
        let abs = x.abs();
        let coef = if abs.is_one() { String::new() } else { format!("{abs}") };
        if s.is_empty() {
            s = format!("{}{coef}{l}", if neg { "-" } else { "" });
        } else {
            let _ = write!(s, " {} {coef}{l}", if neg { "-" } else { "+" });
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

fn label_pair(labels: &[String], (i, j): (usize, usize)) -> String {
    format!("({}, {})", labels[i], labels[j])
}

fn label_triple(labels: &[String], (i, j, k): (usize, usize, usize)) -> String {
    format!("({}, {}, {})", labels[i], labels[j], labels[k])
}

pub fn execute(cli: &Cli) -> Out {
    let cap = cli.max_degree.unwrap_or(DEFAULT_DEGREE_CAP);
    match &cli.command {
        Command::Verify { algebra, rep } => verify(algebra, rep.as_deref()),
        Command::Annihilator { algebra } => annihilator(algebra),
        Command::Derivations { algebra, k, anti, rep } => derivations(algebra, *k, *anti, rep.as_deref()),
        Command::Cohomology { algebra, n, selector } => cohomology(algebra, *n, selector, cap),
        Command::Rb {
            algebra,
            op,
            rep,
            n,
            series,
        } => rb(algebra, op, rep.as_deref(), *n, series.as_deref(), cap),
        Command::Nijenhuis { algebra, op } => nijenhuis(algebra, op),
        Command::Deform { algebra, series } => deform(algebra, series.as_deref()),
        Command::Extend { algebra, theta, op } => extend(algebra, theta.as_deref(), op.as_deref()),
    }
}

fn verify(path: &Path, rep: Option<&Path>) -> Out {
    let a = load_algebra(path)?;
    let l = a.labels();
    let r = verify_algebra(&a);
    let mut text = String::new();
    let _ = writeln!(text, "algebra: {} (dim {})", path.display(), a.dim());
    let _ = writeln!(text, "commutative:     {}", yes(r.commutative));
    if let Some(w) = r.commutative_witness {
        let _ = writeln!(text, "  witness {}", label_pair(l, w));
    }
    let _ = writeln!(text, "multiplicative:  {}", yes(r.multiplicative));
    if let Some(w) = r.multiplicative_witness {
        let _ = writeln!(text, "  witness {}", label_pair(l, w));
    }
    let _ = writeln!(text, "hom-jacobi:      {}", yes(r.hom_jacobi));
    for v in &r.hom_jacobi_violations {
        let _ = writeln!(text, "  witness {} residual {}", label_triple(l, v.triple), combo(&v.residual, l));
    }
    let mut ok = r.all_hold();
    let mut out = json!({ "algebra": r, "all_hold": r.all_hold() });
    if let Some(p) = rep {
        let rr = verify_representation(&load_rep(p, &a)?);
        let _ = writeln!(text, "representation:  {}", p.display());
        let _ = writeln!(text, "twist compatible: {}", yes(rr.twist_compatible));
        if let Some(i) = rr.twist_witness {
            let _ = writeln!(text, "  witness {}", l[i]);
        }
        let _ = writeln!(text, "action identity:  {}", yes(rr.action_identity));
        if let Some(w) = rr.action_witness {
            let _ = writeln!(text, "  witness {}", label_pair(l, w));
        }
        ok &= rr.all_hold();
        out["representation"] = json!(rr);
        out["all_hold"] = json!(ok);
    }
    let _ = writeln!(text, "verdict: {}", if ok { "all axioms hold" } else { "axioms violated" });
    Ok(Report { text, json: out, ok })
}

fn annihilator(path: &Path) -> Out {
    let a = load_algebra(path)?;
    let s = hom_annihilator(&a);
    let basis = s.basis_vectors();
    let mut text = format!("Hom-annihilator: dim {}\n", s.dim());
    for v in &basis {
        let _ = writeln!(text, "  {}", combo(v, a.labels()));
    }
    Ok(Report {
        text,
        json: json!({ "dim": s.dim(), "basis": basis }),
        ok: true,
    })
}

fn derivations(path: &Path, k: i32, anti: bool, rep: Option<&Path>) -> Out {
    let a = load_algebra(path)?;
    let r = match rep {
        Some(p) => load_rep(p, &a)?,
        None => adjoint_rep(&a, 0)?,
    };
    let space = derivation_space(&r, k, anti)?;
    let basis = space.basis_vectors();
    let kind = if anti { "antiderivations" } else { "derivations" };
    let mut text = format!("alpha^{k}-{kind}: dim {}\n", space.dim());
    let _ = writeln!(text, "(maps as dim V x dim A matrices, flattened row by row)");
    for v in &basis {
        let _ = writeln!(text, "  {}", vec_text(v));
    }
    let mut out = json!({ "k": k, "anti": anti, "dim": space.dim(), "basis": basis });
    if anti && k >= 1 {
        let inner = inner_antiderivation_space(&r, (k - 1) as u32);
        let _ = writeln!(text, "inner: dim {}", inner.dim());
        out["inner"] = json!({ "dim": inner.dim(), "basis": inner.basis_vectors() });
    }
    Ok(Report { text, json: out, ok: true })
}

fn cohomology_text(h: &CohomologyReport) -> String {
    let mut text = String::new();
    let _ = writeln!(text, "degree {}", h.degree);
    let _ = writeln!(text, "dim C = {}", h.dim_c);
    let _ = writeln!(text, "dim A = {}", h.dim_a_skew);
    let _ = writeln!(text, "dim Z = {}", h.dim_z);
    let _ = writeln!(text, "dim B = {}", h.dim_b);
    match h.dim_h {
        Some(d) => {
            let _ = writeln!(text, "dim H = {d}");
        }
        None => {
            let _ = writeln!(text, "dim H = undefined");
        }
    }
    for v in &h.h {
        let _ = writeln!(text, "  H representative {}", vec_text(v));
    }
    for w in &h.warnings {
        let _ = writeln!(text, "warning: {w}");
    }
    text
}

fn cohomology(path: &Path, n: usize, sel: &RepSelector, cap: usize) -> Out {
    let a = load_algebra(path)?;
    let r = if let Some(s) = sel.adjoint {
        adjoint_rep(&a, s)?
    } else if sel.trivial {
        trivial_rep(&a)
    } else if let Some(p) = &sel.rep {
        load_rep(p, &a)?
    } else {
        return Err(InputError("choose one of --adjoint, --trivial, --rep".into()));
    };
    let h = CochainComplex::new(&r).with_cap(cap).cohomology(n)?;
    Ok(Report {
        text: cohomology_text(&h),
        json: json!(h),
        ok: true,
    })
}

fn rb(path: &Path, op: &Path, rep: Option<&Path>, n: usize, series: Option<&Path>, cap: usize) -> Out {
    let a = load_algebra(path)?;
    let r = match rep {
        Some(p) => load_rep(p, &a)?,
        None => adjoint_rep(&a, 0)?,
    };
    let t = with_path(op, io::parse_operator(&read(op)?, &r))?;
    let report = verify_rb(&t);
    let mut text = String::new();
    let _ = writeln!(text, "twist compatible:      {}", yes(report.twist_compatible));
    let _ = writeln!(text, "rota-baxter identity:  {}", yes(report.rota_baxter_identity));
    if let Some((u, v)) = report.identity_witness {
        let _ = writeln!(text, "  witness (v{}, v{})", u + 1, v + 1);
    }
    let mut out = json!({ "operator": report });
    let mut ok = report.all_hold();
    if ok {
        let ia = induced_algebra(&t)?;
        let ir = induced_rep(&t)?;
        let va = verify_algebra(&ia).all_hold();
        let vr = verify_representation(&ir).all_hold();
        let h = CochainComplex::new(&ir).with_cap(cap).cohomology(n)?;
        let _ = writeln!(text, "induced algebra verifies:        {}", yes(va));
        let _ = writeln!(text, "induced representation verifies: {}", yes(vr));
        let _ = writeln!(text, "induced algebra:");
        let _ = write!(text, "{}", indent(&algebra_table(&ia)));
        let _ = writeln!(text, "cohomology of the operator:");
        let _ = write!(text, "{}", indent(&cohomology_text(&h)));
        out["induced_algebra"] = io::algebra_to_json(&ia);
        out["induced_algebra_verifies"] = json!(va);
        out["induced_rep_verifies"] = json!(vr);
        out["cohomology"] = json!(h);
        if let Some(sp) = series {
            let ts = with_path(sp, io::parse_map_series(&read(sp)?, a.dim(), r.dim()))?;
            if ts.coeffs()[0] != *t.matrix() {
                return Err(InputError(format!("{}: T_0 differs from the operator", sp.display())));
            }
            let fr = rb_formal_deformation_check(&r, &ts)?;
            let _ = writeln!(text, "series of order {}: {}", fr.order, if fr.passes { "passes" } else { "fails" });
            if let Some(i) = fr.twist_witness {
                let _ = writeln!(text, "  T_{i} does not intertwine the twists");
            }
            if let Some((s, (u, v))) = fr.first_failure {
                let _ = writeln!(text, "  order {s} fails at (v{}, v{})", u + 1, v + 1);
            }
            ok &= fr.passes;
            out["series"] = json!(fr);
        }
    }
    Ok(Report { text, json: out, ok })
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}\n")).collect()
}

/// Nonzero products and twist images, one per line.
fn algebra_table(a: &HomAlgebra) -> String {
    let l = a.labels();
    let mut text = String::new();
    for i in 0..a.dim() {
        for j in i..a.dim() {
            let v = a.mul_basis(i, j);
            if v.iter().any(|x| !x.is_zero()) {
                let _ = writeln!(text, "{} * {} = {}", l[i], l[j], combo(v, l));
            }
        }
    }
    if text.is_empty() {
        text.push_str("all products zero\n");
    }
    for (i, name) in l.iter().enumerate() {
        let _ = writeln!(text, "alpha({name}) = {}", combo(&a.alpha().col(i), l));
    }
    text
}

fn nijenhuis(path: &Path, op: &Path) -> Out {
    let a = load_algebra(path)?;
    let n = with_path(op, io::parse_linear_map(&read(op)?, a.dim(), a.dim()))?;
    let r = nijenhuis_check(&a, &n)?;
    let mut text = String::new();
    let _ = writeln!(text, "commutes with alpha:  {}", yes(r.commutes_with_alpha));
    let _ = writeln!(text, "nijenhuis identity:   {}", yes(r.nijenhuis_identity));
    if let Some(w) = r.identity_witness {
        let _ = writeln!(text, "  witness {}", label_pair(a.labels(), w));
    }
    if let Some(m) = r.matches_delta {
        let _ = writeln!(text, "product equals delta^1 of N: {}", yes(m));
    }
    let mut out = json!(r);
    if let Some(p) = &r.deformed_product {
        let alg = HomAlgebra::new(a.labels().to_vec(), p.clone(), a.alpha().clone())?;
        let _ = writeln!(text, "deformed product:");
        let _ = write!(text, "{}", indent(&algebra_table(&alg)));
        out["deformed_product"] = io::algebra_to_json(&alg)["products"].clone();
    }
    Ok(Report {
        text,
        json: out,
        ok: r.is_nijenhuis,
    })
}

fn deform(path: &Path, series: Option<&Path>) -> Out {
    let a = load_algebra(path)?;
    let Some(sp) = series else {
        let r = rigidity_probe(&a)?;
        let mut text = String::new();
        let _ = writeln!(text, "second cohomology of the alpha^-1 adjoint representation");
        let _ = writeln!(text, "dim Z = {}, dim B = {}", r.dim_z, r.dim_b);
        match r.dim_h {
            Some(d) => {
                let _ = writeln!(text, "dim H = {d}");
            }
            None => {
                let _ = writeln!(text, "dim H = undefined");
            }
        }
        let _ = writeln!(text, "rigidity criterion met: {}", yes(r.rigid_sufficient));
        for w in &r.warnings {
            let _ = writeln!(text, "warning: {w}");
        }
        return Ok(Report {
            text,
            json: json!(r),
            ok: true,
        });
    };
    let s = with_path(sp, io::parse_product_series(&read(sp)?, &a))?;
    let r = formal_deformation_check(&s)?;
    let mut text = String::new();
    let _ = writeln!(text, "series of order {}, checked through order {}", r.order, 2 * r.order);
    for (s, ok) in r.per_order.iter().enumerate() {
        let _ = writeln!(text, "  order {s}: {}", if *ok { "ok" } else { "fails" });
    }
    if let Some(f) = &r.first_failure {
        let _ = writeln!(
            text,
            "first failure: order {} at {} residual {}",
            f.order,
            label_triple(a.labels(), f.triple),
            combo(&f.residual, a.labels())
        );
    }
    if let Some(c) = r.order_one_cocycle {
        let _ = writeln!(text, "mu_1 is a 2-cocycle: {}", yes(c));
    }
    Ok(Report {
        text,
        json: json!(r),
        ok: r.passes,
    })
}

fn extend(path: &Path, theta: Option<&Path>, op: Option<&Path>) -> Out {
    let a = load_algebra(path)?;
    let ext = match (theta, op) {
        (Some(tp), _) => central_extension(&a, &with_path(tp, io::parse_theta(&read(tp)?, &a))?)?,
        (None, Some(dp)) => d_extension(&a, &with_path(dp, io::parse_linear_map(&read(dp)?, a.dim(), a.dim()))?)?,
        (None, None) => return Err(InputError("one of --theta or --op is required".into())),
    };
    let j = io::algebra_to_json(&ext.algebra);
    let mut text = String::new();
    let _ = writeln!(text, "valid: {}", yes(ext.valid));
    for f in &ext.failures {
        let _ = writeln!(text, "  fails: {f}");
    }
    let _ = writeln!(text, "extended algebra:");
    let _ = write!(text, "{}", indent(&algebra_table(&ext.algebra)));
    Ok(Report {
        text,
        json: json!({ "valid": ext.valid, "failures": ext.failures, "algebra": j }),
        ok: ext.valid,
    })
}
