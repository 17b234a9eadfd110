//! Command-line front end. Every subcommand is one library call whose
//! result is printed as JSON (default) or as `key: value` text.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::bounds::BoundReport;
use crate::burnside::{burnside_report, core_group, double_cover_presentation, lie_quotient, report_from};
use crate::catalog;
use crate::coloring::{coloring_space, determinant, homology_factors};
use crate::diagram::braid::BraidWord;
use crate::error::{Error, Result};
use crate::moves::{apply, is_n_rotor, rotor_flip, verify_certificate, Move, MoveCertificate};
use crate::skein::{decompose, eval_phi5, kauffman_framed, kauffman_normalized, LaurentPoly2};
use crate::symplectic::{enumerate_lagrangians, lagrangian_count, tangle_lagrangian, SymplecticSpace};
use crate::{Diagram, Tangle};

#[derive(Parser, Debug)]
#[command(name = "linkforge", version, about = "Move-obstruction invariants of links and tangles")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// A diagram given as a file path, a catalog name, or inline text
/// (PD records, `BR k: ...`, or JSON), tried in that order.
#[derive(Args, Debug)]
pub struct Input {
    pub input: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a diagram and print its basic data.
    Parse(Input),
    /// Fox colorings modulo k.
    Colorings {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        modulus: u64,
    },
    Determinant(Input),
    /// Boundary Lagrangian of a tangle, or count Lagrangians with `--count`.
    Lagrangian {
        /// Tangle as JSON, `rational p/q`, or `integer m`.
        input: Option<String>,
        #[arg(long)]
        p: u64,
        /// Count (and with `--enumerate`, list) Lagrangians of the space with n boundary pairs.
        #[arg(long, conflicts_with = "input")]
        count: Option<usize>,
        #[arg(long, requires = "count")]
        enumerate: bool,
    },
    /// Kauffman polynomial, or its value at the golden point.
    Kauffman {
        #[command(flatten)]
        input: Input,
        #[arg(long, conflicts_with = "full")]
        phi5: bool,
        #[arg(long)]
        full: bool,
    },
    /// Unknotting-number and distance lower bounds.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        certificate: Option<String>,
        #[arg(long)]
        against: Option<String>,
    },
    Burnside {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        p: u64,
        #[arg(long = "class", default_value_t = 3)]
        class: usize,
        /// Index of the arc generator set to 1.
        #[arg(long, default_value_t = 0)]
        kill: usize,
    },
    #[command(subcommand)]
    Moves(MovesCommand),
    /// Flip a rotor inside its stator.
    Rotor {
        /// Stator tangle.
        stator: String,
        #[arg(long)]
        rotor: String,
    },
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
pub enum MovesCommand {
    /// Apply one move given as JSON (inline or a path).
    Apply {
        #[command(flatten)]
        input: Input,
        #[arg(long = "move")]
        mv: String,
    },
    /// Replay a move certificate.
    Verify { certificate: String },
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    List,
    Show { name: String },
}

fn read_source(s: &str) -> Result<String> {
    let path = Path::new(s);
    if path.is_file() {
        std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter(format!("{s}: {e}")))
    } else {
        Ok(s.to_string())
    }
}

/// Resolve a diagram argument.
pub fn load_diagram(s: &str) -> Result<Diagram> {
    if !Path::new(s).is_file() {
        match catalog::catalog(s) {
            Err(Error::UnknownCatalog(_)) => {}
            other => return other,
        }
    }
    let text = read_source(s)?;
    let t = text.trim_start();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Malformed { line: 0, reason: e.to_string() })?;
        Diagram::from_json(&v)
    } else if t.starts_with("BR") {
        Ok(t.parse::<BraidWord>()?.closure())
    } else {
        // inline records may be separated by `;`
        Diagram::parse_pd(&text.replace(';', "\n"))
    }
}

/// Resolve a tangle argument.
pub fn load_tangle(s: &str) -> Result<Tangle> {
    let text = read_source(s)?;
    let t = text.trim();
    let bad = |what: &str| Error::InvalidParameter(format!("bad {what} tangle `{t}`"));
    if let Some(rest) = t.strip_prefix("rational") {
        let (p, q) = rest.trim().split_once('/').ok_or_else(|| bad("rational"))?;
        let p = p.trim().parse().map_err(|_| bad("rational"))?;
        let q = q.trim().parse().map_err(|_| bad("rational"))?;
        Tangle::rational(p, q)
    } else if let Some(rest) = t.strip_prefix("integer") {
        Ok(Tangle::integer(rest.trim().parse().map_err(|_| bad("integer"))?))
    } else {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Malformed { line: 0, reason: e.to_string() })?;
        Tangle::from_json(&v)
    }
}

fn big(n: &BigUint) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => json!(n.to_string()),
    }
}

fn poly(p: &LaurentPoly2) -> Value {
    json!({ "text": p.to_string(), "terms": p.terms() })
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn diagram_summary(d: &Diagram) -> Result<Value> {
    let mut v = json!({
        "crossings": d.crossing_count(),
        "components": d.components(),
        "free_loops": d.free_loops(),
        "writhe": d.writhe(),
        "pd": d.to_pd_string().lines().collect::<Vec<_>>(),
    });
    if d.components() >= 2 {
        v["linking_matrix_mod2"] = json!(d.linking_matrix_mod2()?);
    }
    Ok(v)
}

/// Execute a parsed command.
pub fn execute(cmd: &Command) -> Result<Value> {
    match cmd {
        Command::Parse(i) => diagram_summary(&load_diagram(&i.input)?),
        Command::Colorings { input, modulus } => {
            let s = coloring_space(&load_diagram(&input.input)?, *modulus)?;
            let card = s.cardinality();
            let mut v = json!({ "modulus": modulus, "cardinality": s.factored(), "dim": s.dim(), "cyclic_factors": s.cyclic_factors });
            if let Some(raw) = card.to_i64() {
                v["count"] = json!(raw);
            }
            Ok(v)
        }
        Command::Determinant(i) => {
            let d = load_diagram(&i.input)?;
            let factors: Vec<Value> = homology_factors(&d).iter().map(big).collect();
            Ok(json!({ "determinant": big(&determinant(&d)), "homology_factors": factors }))
        }
        Command::Lagrangian { input, p, count, enumerate } => match (input, count) {
            (_, Some(n)) => {
                let mut v = json!({ "p": p, "n": n, "count": lagrangian_count(*n, *p)?.to_string() });
                if *enumerate {
                    let all = enumerate_lagrangians(SymplecticSpace::new(*p, *n)?)?;
                    v["lagrangians"] = json!(all.iter().map(|w| &w.basis).collect::<Vec<_>>());
                }
                Ok(v)
            }
            (Some(t), None) => {
                let w = tangle_lagrangian(&load_tangle(t)?, *p)?;
                Ok(json!({ "p": p, "n": w.n, "basis": w.basis, "dim": w.dim(), "is_lagrangian": w.is_lagrangian() }))
            }
            (None, None) => Err(Error::InvalidParameter("give a tangle or --count".into())),
        },
        Command::Kauffman { input, phi5, full } => {
            let d = load_diagram(&input.input)?;
            if *phi5 || !*full {
                let g = eval_phi5(&d)?;
                let mut v = json!({ "u": g.u, "v": g.v });
                if let Ok(dec) = decompose(g) {
                    v["epsilon"] = json!(dec.epsilon);
                    v["lambda"] = json!(dec.lambda);
                }
                Ok(v)
            } else {
                Ok(json!({ "framed": poly(&kauffman_framed(&d)?), "normalized": poly(&kauffman_normalized(&d)?) }))
            }
        }
        Command::Bounds { input, certificate, against } => {
            let d = load_diagram(&input.input)?;
            let mut r = BoundReport::for_diagram(&input.input, &d)?;
            if let Some(c) = certificate {
                r = r.with_certificate(&d, &MoveCertificate::from_json_str(&read_source(c)?)?)?;
            }
            if let Some(a) = against {
                r = r.with_distance(&d, a, &load_diagram(a)?)?;
            }
            Ok(to_value(&r))
        }
        Command::Burnside { input, p, class, kill } => {
            let d = load_diagram(&input.input)?;
            if *class == 3 && *kill == 0 {
                return Ok(to_value(&burnside_report(&d, *p)?));
            }
            let g = double_cover_presentation(&core_group(&d), *kill)?;
            Ok(to_value(&report_from(&lie_quotient(&g, *p, *class)?)))
        }
        Command::Moves(MovesCommand::Apply { input, mv }) => {
            let m: Move = serde_json::from_str(&read_source(mv)?)
                .map_err(|e| Error::Malformed { line: 0, reason: e.to_string() })?;
            diagram_summary(&apply(&load_diagram(&input.input)?, &m)?)
        }
        Command::Moves(MovesCommand::Verify { certificate }) => {
            let c = MoveCertificate::from_json_str(&read_source(certificate)?)?;
            Ok(to_value(&verify_certificate(&c)?))
        }
        Command::Rotor { stator, rotor } => {
            let (s, r) = (load_tangle(stator)?, load_tangle(rotor)?);
            let before = r.glue(&s)?;
            let after = rotor_flip(&s, &r)?;
            Ok(json!({
                "is_rotor": is_n_rotor(&r),
                "before": diagram_summary(&before)?,
                "after": diagram_summary(&after)?,
            }))
        }
        Command::Catalog(CatalogCommand::List) => Ok(json!({ "version": catalog::version(), "names": catalog::names() })),
        Command::Catalog(CatalogCommand::Show { name }) => {
            let records = catalog::source(name)?;
            Ok(json!({ "name": name, "version": catalog::version(), "records": records.lines().collect::<Vec<_>>() }))
        }
    }
}

fn error_kind(e: &Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
}

fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(v).expect("json"),
        Format::Text => match v {
            Value::Object(map) => map
                .iter()
                .map(|(k, x)| match x {
                    Value::String(s) => format!("{k}: {s}"),
                    other => format!("{k}: {other}"),
                })
                .collect::<Vec<_>>()
                .join("\n"),
            other => other.to_string(),
        },
    }
}

/// Parse `args`, run, write the result to `out` and return the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(if code == 0 { &mut *out as &mut dyn Write } else { err }, "{e}");
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(v) => {
            let _ = writeln!(out, "{}", render(&v, cli.format));
            0
        }
        Err(e) => {
            let v = json!({ "error": { "kind": error_kind(&e), "message": e.to_string() } });
            let _ = writeln!(out, "{}", render(&v, cli.format));
            1
        }
    }
}
