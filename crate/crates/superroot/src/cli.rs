//! The `superroot` command line.
//!
//! Every verb prints one JSON object with `--json`, or the same object as an
//! aligned two-column table. Exit codes: 0 success, 1 domain error, 2 usage
//! error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Map, Value};
use superroot_core::clifford::{gram_form, may_fail_absolute_simplicity, u_lambda_dim_closed, SimpleType};
use superroot_core::hyperalg::{verify_commutator_formula, Poly};
use superroot_core::liesuper::{check_admissible_base, AdmissibleBase, Condition, GenerationSemantics};
use superroot_core::rootdata::{
    all_frobenius_unimodular, chi_r_on_torus, delta_r, dim_o_gr, even_base, induced_dims, is_frobenius_unimodular,
    is_unimodular_char0, pbw_monomial_count, positive_system, simple_roots, UnimodularityReport,
};
use superroot_core::steinberg::{
    is_flat, steinberg_character, CharacterElement, RestrictionContext, RestrictionReport, RootClass, SearchOptions,
};
use superroot_core::{Error, LieFamily, LieSuperAlgebra, OrderFunctional, SuperRootDatum, Weight};

use crate::json;

pub const RADIUS_ENV: &str = "SUPERROOT_SEARCH_RADIUS";

#[derive(Parser, Debug)]
#[command(name = "superroot", version, about = "Exact computations with super root data")]
struct Cli {
    /// Print machine-readable JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The datum, its positive system under Υ and, with --weight, the Clifford form.
    Describe {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Characteristic for the Clifford form (0 or an odd prime).
        #[arg(long, default_value_t = 0)]
        p: u64,
    },
    /// Unimodularity in characteristic 0, or of G_r when --p is given.
    Unimodular {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        r: Option<u32>,
    },
    /// Unimodularity of every Frobenius kernel and the torus weight of χ_r.
    Frobenius {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, requires = "p")]
        r: Option<u32>,
    },
    /// The weight δ_r.
    Delta {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// dim O(G_r), the PBW count of hy(G_r) and, with --dim-n, induced dimensions.
    Dims {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
        #[arg(long)]
        dim_n: Option<u64>,
    },
    /// Checks an admissible base.
    Admissible {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long, value_enum, default_value_t = Semantics::Assisted)]
        semantics: Semantics,
    },
    /// Whether a weight is p^r-restricted.
    Restricted {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// Steinberg digits λ = λ_0 + pλ_1 + ⋯ of a flat weight.
    Decompose {
        #[command(flatten)]
        datum: DatumArgs,
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        p: u64,
        /// Box radius for digit lifts; overrides SUPERROOT_SEARCH_RADIUS.
        #[arg(long)]
        radius: Option<u32>,
        #[arg(long)]
        max_digits: Option<usize>,
    },
    /// Character ring arithmetic on JSON character files.
    Char {
        #[command(subcommand)]
        op: CharOp,
    },
    /// Checks the divided-power commutator formula on polynomial operators.
    VerifyCommutator {
        #[arg(long, default_value_t = 4)]
        max_m: u32,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        #[arg(long, default_value_t = 8)]
        degree: u32,
        /// 0 for the integers, otherwise an odd prime.
        #[arg(long, default_value_t = 0)]
        p: u64,
    },
    /// Flatness of a weight for gl(m|n) or q(n).
    Flatcheck {
        #[command(flatten)]
        datum: DatumArgs,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand, Debug)]
enum CharOp {
    Add { a: PathBuf, b: PathBuf },
    Mul { a: PathBuf, b: PathBuf },
    /// The r-fold Frobenius twist e^λ ↦ e^{p^r λ}.
    Twist {
        input: PathBuf,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        r: u32,
    },
    /// ∏_i F^i(ch_i) for the given factors.
    Steinberg {
        #[arg(long)]
        p: u64,
        #[arg(required = true)]
        factors: Vec<PathBuf>,
    },
    /// The term with the largest weight under Υ.
    Max {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        order: Option<String>,
    },
    /// Total dimension (sum of multiplicities).
    Dim { input: PathBuf },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gl,
    Q,
    P,
    File,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Semantics {
    Strict,
    Assisted,
}

#[derive(Args, Debug)]
struct DatumArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// JSON datum file for --family file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Υ as comma-separated rationals, e.g. `3,1/2,-1`.
    #[arg(long, allow_hyphen_values = true)]
    order: Option<String>,
}

#[derive(Args, Debug)]
struct BaseArgs {
    /// Ψ_even as `;`-separated weights; defaults to the simple roots under Υ.
    #[arg(long, allow_hyphen_values = true)]
    psi_even: Option<String>,
    /// Ψ_odd as `;`-separated weights; defaults to the standard base of the family.
    #[arg(long, allow_hyphen_values = true)]
    psi_odd: Option<String>,
}

/// What a run produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(#[from] Error),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("malformed JSON in {path}: {message}")]
    Json { path: String, message: String },
}

impl Failure {
    fn error_object(&self) -> Value {
        let mut obj = Map::new();
        let kind = match self {
            Failure::Usage(_) => "usage",
            Failure::Domain(e) => e.kind(),
            Failure::Io { .. } => "io",
            Failure::Json { .. } => "bad_json",
        };
        obj.insert("kind".into(), json!(kind));
        obj.insert("message".into(), json!(self.to_string()));
        match self {
            Failure::Domain(Error::InvalidDatum { path, .. }) => {
                obj.insert("path".into(), json!(path));
            }
            Failure::Domain(Error::DecompositionFailed { weight, frontier }) => {
                obj.insert("weight".into(), json::weight(weight));
                obj.insert("frontier".into(), json::weights(frontier));
            }
            Failure::Domain(Error::InvalidOrder { root }) => {
                obj.insert("root".into(), json::weight(root));
            }
            Failure::Io { path, .. } | Failure::Json { path, .. } => {
                obj.insert("file".into(), json!(path));
            }
            _ => {}
        }
        json!({ "error": Value::Object(obj) })
    }
}

type Res<T> = Result<T, Failure>;

/// Runs with the process environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, |k| std::env::var(k).ok())
}

/// Runs with `env` standing in for the process environment.
pub fn run_with_env<I, T>(args: I, env: impl Fn(&str) -> Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(&cli.command, &env) {
        Ok(v) => Outcome { code: 0, stdout: render(&v, cli.json), stderr: String::new() },
        Err(f) => {
            let code = if matches!(f, Failure::Usage(_)) { 2 } else { 1 };
            let obj = f.error_object();
            if cli.json {
                Outcome { code, stdout: render(&obj, true), stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: render(&obj["error"], false) }
            }
        }
    }
}

fn render(v: &Value, as_json: bool) -> String {
    if as_json {
        let mut s = serde_json::to_string_pretty(v).expect("values serialize");
        s.push('\n');
        return s;
    }
    let Some(obj) = v.as_object() else {
        return format!("{v}\n");
    };
    let width = obj.keys().map(|k| k.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, val) in obj {
        let cell = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k:<width$}  {cell}\n"));
    }
    out
}

fn parse_weight(s: &str) -> Res<Weight> {
    let coords: Result<Vec<BigInt>, _> = s.split(',').map(|c| c.trim().parse::<BigInt>()).collect();
    coords.map(Weight::new).map_err(|_| Failure::Usage(format!("cannot parse weight {s:?}; expected e.g. 4,-2")))
}

fn parse_weight_list(s: &str) -> Res<Vec<Weight>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';').map(parse_weight).collect()
}

fn parse_order(s: &str) -> Res<OrderFunctional> {
    let vals: Result<Vec<BigRational>, _> = s.split(',').map(|c| c.trim().parse::<BigRational>()).collect();
    vals.map(OrderFunctional::new)
        .map_err(|_| Failure::Usage(format!("cannot parse order {s:?}; expected rationals such as 3,1/2,-1")))
}

fn read_json(path: &Path) -> Res<Value> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io { path: shown.clone(), message: e.to_string() })?;
    serde_json::from_str(&text).map_err(|e| Failure::Json { path: shown, message: e.to_string() })
}

struct Resolved {
    datum: SuperRootDatum,
    family: Option<LieFamily>,
    order: OrderFunctional,
    order_given: bool,
}

impl Resolved {
    fn new(args: &DatumArgs) -> Res<Self> {
        let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(format!("--{flag} is required")));
        let datum = match args.family {
            FamilyArg::Gl => LieFamily::Gl { m: need(args.m, "m")?, n: need(args.n, "n")? }.datum()?,
            FamilyArg::Q => LieFamily::Queer { n: need(args.n, "n")? }.datum()?,
            FamilyArg::P => LieFamily::Periplectic { n: need(args.n, "n")? }.datum()?,
            FamilyArg::File => {
                let path = args.file.as_ref().ok_or_else(|| Failure::Usage("--file is required".into()))?;
                json::parse_datum(&read_json(path)?)?
            }
        };
        let family = datum.lie_handle();
        let (order, order_given) = match &args.order {
            Some(s) => (parse_order(s)?, true),
            None => (family.map_or_else(|| OrderFunctional::descending(datum.rank()), |f| f.standard_order()), false),
        };
        if order.rank() != datum.rank() {
            return Err(Error::RankMismatch { expected: datum.rank(), found: order.rank() }.into());
        }
        Ok(Resolved { datum, family, order, order_given })
    }

    fn lie(&self) -> Res<LieSuperAlgebra> {
        match self.family {
            Some(f) => Ok(f.algebra()?),
            None => Err(Error::Precondition(format!(
                "{} has no built-in Lie superalgebra; admissible bases need gl, q or p",
                self.datum.label()
            ))
            .into()),
        }
    }

    fn weight(&self, s: &str) -> Res<Weight> {
        let w = parse_weight(s)?;
        if w.rank() != self.datum.rank() {
            return Err(Error::RankMismatch { expected: self.datum.rank(), found: w.rank() }.into());
        }
        Ok(w)
    }

    fn base(&self, args: &BaseArgs) -> Res<AdmissibleBase> {
        let psi_even = match &args.psi_even {
            Some(s) => parse_weight_list(s)?,
            None => even_base(&self.datum, &self.order)?,
        };
        let psi_odd = match (&args.psi_odd, self.family) {
            (Some(s), _) => parse_weight_list(s)?,
            (None, Some(f)) if !self.order_given => f.standard_base()?.psi_odd,
            _ => return Err(Failure::Usage("--psi-odd is required with --order or a custom datum".into())),
        };
        Ok(AdmissibleBase { psi_even, psi_odd })
    }

    fn context(&self, args: &BaseArgs) -> Res<RestrictionContext> {
        let lie = self.lie()?;
        Ok(RestrictionContext::new(&self.datum, &lie, &self.order, &self.base(args)?)?)
    }
}

fn odd_roots_value(roots: &[superroot_core::rootdata::OddRoot]) -> Value {
    Value::Array(roots.iter().map(|o| json!({"root": json::weight(&o.root), "mult": json::u64_value(o.mult)})).collect())
}

fn unimodularity(rep: &UnimodularityReport) -> Value {
    let per: Vec<Value> = rep
        .per_coordinate
        .iter()
        .map(|c| json!({"index": c.index, "value": json::int(&c.value), "divides": c.divides}))
        .collect();
    json!({
        "verdict": rep.verdict,
        "odd_root_sum": json::weight(&rep.odd_root_sum),
        "modulus": rep.modulus.as_ref().map_or(Value::Null, json::int),
        "per_coordinate": per,
    })
}

fn restriction(rep: &RestrictionReport) -> Value {
    let per: Vec<Value> = rep
        .per_root
        .iter()
        .map(|b| {
            json!({
                "alpha": json::weight(&b.alpha),
                "class": match b.class { RootClass::EvenOnly => "even_only", RootClass::Shared => "shared" },
                "pairing": json::int(&b.pairing),
                "kform_value": b.kform_value.as_ref().map_or(Value::Null, json::int),
                "bound": json::int(&b.bound),
                "ok": b.ok,
            })
        })
        .collect();
    json!({
        "verdict": rep.verdict,
        "weight": json::weight(&rep.weight),
        "p": rep.p,
        "r": rep.r,
        "flat": rep.flat,
        "weakened": rep.weakened,
        "per_root": per,
    })
}

fn poly(v: &Poly) -> Value {
    Value::Array(v.iter().map(|(&(a, b), c)| json!({"monomial": [a, b], "coefficient": json::int(c)})).collect())
}

fn radius(explicit: Option<u32>, env: &dyn Fn(&str) -> Option<String>) -> Res<u32> {
    if let Some(r) = explicit {
        return Ok(r);
    }
    match env(RADIUS_ENV) {
        Some(s) => s.trim().parse().map_err(|_| Failure::Usage(format!("{RADIUS_ENV} must be a nonnegative integer, got {s:?}"))),
        None => Ok(SearchOptions::default().radius),
    }
}

fn read_character(path: &Path) -> Res<CharacterElement> {
    Ok(json::parse_character(&read_json(path)?)?)
}

fn execute(cmd: &Command, env: &dyn Fn(&str) -> Option<String>) -> Res<Value> {
    match cmd {
        Command::Describe { datum, weight, p } => {
            let res = Resolved::new(datum)?;
            let d = &res.datum;
            let ps = positive_system(d, &res.order)?;
            let mut out = json!({
                "datum": json::datum(d),
                "family": res.family.map_or(Value::Null, |f| json!(f.label())),
                "n_even": d.n_even(),
                "n_odd": d.n_odd(),
                "order": Value::Array(res.order.values().iter().map(json::rational).collect()),
                "even_positive": json::weights(&ps.even_pos),
                "odd_positive": odd_roots_value(&ps.odd_pos),
                "simple_roots": json::weights(&simple_roots(&ps)),
                "may_fail_absolute_simplicity": may_fail_absolute_simplicity(d),
            });
            if let Some(w) = weight {
                let lambda = res.weight(w)?;
                let form = gram_form(&res.lie()?, &lambda, *p)?;
                let shape = u_lambda_dim_closed(&form);
                out["clifford"] = json!({
                    "weight": json::weight(&lambda),
                    "char": p,
                    "gram": form.gram.iter().map(|row| Value::Array(row.iter().map(json::int).collect())).collect::<Vec<_>>(),
                    "rank": form.rank(),
                    "simple_dim": shape.dim,
                    "simple_type": match shape.kind { SimpleType::M => "M", SimpleType::Q => "Q" },
                });
            }
            Ok(out)
        }
        Command::Unimodular { datum, p, r } => {
            let res = Resolved::new(datum)?;
            let rep = match p {
                Some(p) => is_frobenius_unimodular(&res.datum, *p, r.unwrap_or(1))?,
                None => is_unimodular_char0(&res.datum),
            };
            Ok(unimodularity(&rep))
        }
        Command::Frobenius { datum, p, r } => {
            let res = Resolved::new(datum)?;
            let mut out = json!({
                "all_frobenius_unimodular": all_frobenius_unimodular(&res.datum),
                "chi_r_on_torus": json::weight(&chi_r_on_torus(&res.datum)),
            });
            if let Some(p) = p {
                let r = r.unwrap_or(1);
                let rep = is_frobenius_unimodular(&res.datum, *p, r)?;
                out["p"] = json!(p);
                out["r"] = json!(r);
                out["verdict"] = json!(rep.verdict);
            }
            Ok(out)
        }
        Command::Delta { datum, p, r } => {
            let res = Resolved::new(datum)?;
            let d = delta_r(&res.datum, &res.order, *p, *r)?;
            Ok(json!({"p": p, "r": r, "delta_r": json::weight(&d)}))
        }
        Command::Dims { datum, p, r, dim_n } => {
            let res = Resolved::new(datum)?;
            let d = &res.datum;
            let mut out = json!({
                "dim_O_Gr": json::uint(&dim_o_gr(d, *p, *r)?),
                "pbw_count": json::uint(&pbw_monomial_count(d, *p, *r)?),
                "n_even": d.n_even(),
                "n_odd": d.n_odd(),
                "h_odd_dim": d.h_odd_dim(),
            });
            if let Some(n) = dim_n {
                let (ind, coind) = induced_dims(d, &res.order, *p, *r, *n)?;
                out["dim_ind"] = json::uint(&ind);
                out["dim_coind"] = json::uint(&coind);
            }
            Ok(out)
        }
        Command::Admissible { datum, base, semantics } => {
            let res = Resolved::new(datum)?;
            let lie = res.lie()?;
            let b = res.base(base)?;
            let sem = match semantics {
                Semantics::Strict => GenerationSemantics::Strict,
                Semantics::Assisted => GenerationSemantics::Assisted,
            };
            let rep = check_admissible_base(&lie, &res.datum, &res.order, &b, sem)?;
            let failures: Vec<Value> = rep
                .failures
                .iter()
                .map(|f| {
                    let name = match f.condition {
                        Condition::Generation => "generation",
                        Condition::Separation => "separation",
                        Condition::MultiplicityOne => "multiplicity_one",
                    };
                    json!({"condition": name, "roots": json::weights(&f.roots)})
                })
                .collect();
            Ok(json!({
                "ok": rep.ok,
                "semantics": match semantics { Semantics::Strict => "strict", Semantics::Assisted => "assisted" },
                "psi_even": json::weights(&b.psi_even),
                "psi_odd": json::weights(&b.psi_odd),
                "generation": rep.generation,
                "separation": rep.separation,
                "multiplicity_one": rep.multiplicity_one,
                "failures": failures,
            }))
        }
        Command::Restricted { datum, base, weight, p, r } => {
            let res = Resolved::new(datum)?;
            let lambda = res.weight(weight)?;
            let ctx = res.context(base)?;
            Ok(restriction(&ctx.is_restricted(&lambda, *p, *r)?))
        }
        Command::Decompose { datum, base, weight, p, radius: explicit, max_digits } => {
            let res = Resolved::new(datum)?;
            let lambda = res.weight(weight)?;
            let opts = SearchOptions {
                radius: radius(*explicit, env)?,
                max_digits: max_digits.unwrap_or(SearchOptions::default().max_digits),
            };
            let ctx = res.context(base)?;
            let digits = ctx.steinberg_decompose(&lambda, *p, &opts)?;
            Ok(json!({"weight": json::weight(&lambda), "p": p, "radius": opts.radius, "digits": json::weights(&digits)}))
        }
        Command::Char { op } => match op {
            CharOp::Add { a, b } => Ok(json::character(&read_character(a)?.add(&read_character(b)?)?)),
            CharOp::Mul { a, b } => Ok(json::character(&read_character(a)?.mul(&read_character(b)?)?)),
            CharOp::Twist { input, p, r } => {
                if *p < 2 {
                    return Err(Error::InvalidParameter(format!("p must be at least 2, got {p}")).into());
                }
                Ok(json::character(&read_character(input)?.frobenius_twist(*p, *r)))
            }
            CharOp::Steinberg { p, factors } => {
                let fs = factors.iter().map(|f| read_character(f)).collect::<Res<Vec<_>>>()?;
                Ok(json::character(&steinberg_character(&fs, *p)?))
            }
            CharOp::Max { input, order } => {
                let c = read_character(input)?;
                let u = match order {
                    Some(s) => parse_order(s)?,
                    None => OrderFunctional::descending(c.rank()),
                };
                let top = c.max_term(&u)?;
                Ok(json!({
                    "weight": top.as_ref().map_or(Value::Null, |(w, _)| json::weight(w)),
                    "mult": top.as_ref().map_or(Value::Null, |(_, m)| json::int(m)),
                }))
            }
            CharOp::Dim { input } => Ok(json!({"dim": json::int(&read_character(input)?.total_dimension())})),
        },
        Command::VerifyCommutator { max_m, max_n, degree, p } => {
            let rep = verify_commutator_formula(*max_m, *max_n, *degree, *p)?;
            let ce = rep.counterexample.as_ref().map_or(Value::Null, |c| {
                json!({
                    "m": c.m,
                    "n": c.n,
                    "monomial": [c.monomial.0, c.monomial.1],
                    "lhs": poly(&c.lhs),
                    "rhs": poly(&c.rhs),
                })
            });
            Ok(json!({"success": rep.success(), "p": rep.p, "checked": rep.checked, "counterexample": ce}))
        }
        Command::Flatcheck { datum, weight, p } => {
            let res = Resolved::new(datum)?;
            let lambda = res.weight(weight)?;
            let family = res.family.ok_or_else(|| {
                Error::Unsupported(format!("no flatness criterion for {}", res.datum.label()))
            })?;
            Ok(json!({
                "flat": is_flat(family, *p, &lambda)?,
                "family": family.label(),
                "p": p,
                "weight": json::weight(&lambda),
            }))
        }
    }
}
