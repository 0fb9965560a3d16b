use std::process::ExitCode;

use clap::{Parser, Subcommand};
use qtop::{
    dirac_residual, jones, kauffman_bracket, schrodinger_residual, skein_residual, BraidWord,
    Cobordism, FrobeniusAlgebra, FusionError, FusionLevel, GqError, IntLaurent, LinkDiagram,
    MultiPoly, VarTable,
};

#[derive(Parser)]
#[command(
    name = "qtop",
    version,
    about = "Link invariants, fusion rules, 2d TQFT evaluation, and quantization checks"
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Jones polynomial of a braid closure or planar diagram.
    Jones {
        /// Braid word, e.g. "B2 1 1 1".
        #[arg(long)]
        braid: Option<String>,
        /// Planar-diagram text, e.g. "X(1,4,2,3) X(3,2,4,1)".
        #[arg(long)]
        pd: Option<String>,
        /// Also evaluate at the level-k root of unity s = exp(i*pi/(k+2)).
        #[arg(long)]
        level: Option<u32>,
    },
    /// Kauffman bracket (unnormalized, in the variable A).
    Bracket {
        #[arg(long)]
        braid: Option<String>,
        #[arg(long)]
        pd: Option<String>,
        /// Also evaluate at A = exp(-i*pi/(2(k+2))), matching the Jones convention.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Skein-relation residual at one crossing; exits 0 exactly when it vanishes.
    SkeinCheck {
        #[arg(long)]
        braid: Option<String>,
        #[arg(long)]
        pd: Option<String>,
        /// Crossing index (0-based).
        #[arg(long)]
        crossing: usize,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Conformal-block dimension on the sphere by fusion-path counting.
    FusionDim {
        #[arg(long)]
        level: u32,
        /// Comma-separated marked-point labels in twice-spin units, e.g. 1,1,1,1.
        #[arg(long)]
        marked: String,
    },
    /// Verlinde-formula dimension for a genus-g surface with marked points.
    Verlinde {
        #[arg(long)]
        level: u32,
        #[arg(long, default_value_t = 0)]
        genus: u32,
        #[arg(long, default_value = "")]
        marked: String,
    },
    /// Evaluate a cobordism word against a Frobenius algebra.
    TqftEval {
        /// Path to the algebra JSON: {dim, mult, unit, pairing}.
        #[arg(long)]
        algebra: String,
        /// Path to the cobordism JSON word list, e.g. ["cap", ["pants"], "cup"].
        #[arg(long)]
        cobordism: String,
    },
    /// Quantum-condition residual [Q(f),Q(g)] + i*hbar*Q({f,g}); exits 0 exactly when zero.
    GqCheck {
        /// Observable, e.g. "q1^2*p1 + 3*q2".
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// Operator realization; the position-space one covers degree <= 1 only.
        #[arg(long, default_value = "prequantum", value_parser = ["prequantum", "schrodinger"])]
        rep: String,
        /// Number of degrees of freedom; inferred from the variables if omitted.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Parse an input and echo the canonical structure as JSON.
    Parse {
        #[arg(long)]
        braid: Option<String>,
        #[arg(long)]
        pd: Option<String>,
    },
}

/// Usage errors (bad flags or unparseable/invalid input) exit 2; domain
/// errors (the computation itself reports a mathematical failure) exit 1.
enum CliError {
    Usage(String),
    Domain(String),
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn diagram_input(braid: Option<&str>, pd: Option<&str>) -> Result<LinkDiagram, CliError> {
    match (braid, pd) {
        (Some(b), None) => Ok(BraidWord::parse(b).map_err(usage)?.closure()),
        (None, Some(p)) => LinkDiagram::parse_pd(p).map_err(usage),
        _ => Err(CliError::Usage(
            "provide exactly one of --braid or --pd".into(),
        )),
    }
}

fn poly_json(poly: &IntLaurent) -> serde_json::Value {
    serde_json::from_str(&poly.to_json_string()).expect("polynomial serializes to valid JSON")
}

/// Polynomial, optionally with its value at a root of unity attached.
/// `num/den` position the variable at exp(2*pi*i*num/den) for level k.
fn emit_poly(
    poly: &IntLaurent,
    level: Option<u32>,
    root: impl Fn(u32) -> (i64, i64),
    json: bool,
) -> Result<(), CliError> {
    match level {
        None => {
            if json {
                println!("{}", poly.to_json_string());
            } else {
                println!("{poly}");
            }
        }
        Some(k) => {
            let (num, den) = root(k);
            let value = poly.eval_root_of_unity(num, den).map_err(usage)?;
            if json {
                let doc = serde_json::json!({
                    "poly": poly_json(poly),
                    "level": k,
                    "value": [value.re, value.im],
                });
                println!("{doc}");
            } else {
                println!("{poly}");
                println!("level {k}: {:.12}{:+.12}i", value.re, value.im);
            }
        }
    }
    Ok(())
}

fn fusion_usage(e: FusionError) -> CliError {
    match e {
        FusionError::ZeroLevel | FusionError::LabelOutOfRange { .. } | FusionError::EmptyMarking => {
            usage(e)
        }
        FusionError::Overflow | FusionError::NotIntegral { .. } => domain(e),
    }
}

fn parse_marked(text: &str) -> Result<Vec<u32>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad marked-point label `{t}`")))
        })
        .collect()
}

fn emit_dim(dim: u64, method: &str, json: bool) {
    if json {
        println!("{}", serde_json::json!({ "dim": dim, "method": method }));
    } else {
        println!("{dim}");
    }
}

/// Largest q/p subscript mentioned in the observable texts (at least 1).
fn infer_dof(texts: &[&str]) -> usize {
    let mut n = 1usize;
    for t in texts {
        let bytes = t.as_bytes();
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'q' || b == b'p' {
                let digits: String = t[i + 1..]
                    .chars()
                    .take_while(|c| c.is_ascii_digit())
                    .collect();
                if let Ok(k) = digits.parse::<usize>() {
                    n = n.max(k);
                }
            }
        }
    }
    n
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Jones { braid, pd, level } => {
            let d = diagram_input(braid.as_deref(), pd.as_deref())?;
            let v = jones(&d).map_err(domain)?;
            emit_poly(&v, level, |k| (1, 2 * (i64::from(k) + 2)), cli.json)
        }
        Command::Bracket { braid, pd, level } => {
            let d = diagram_input(braid.as_deref(), pd.as_deref())?;
            let b = kauffman_bracket(&d).map_err(domain)?;
            emit_poly(&b, level, |k| (-1, 4 * (i64::from(k) + 2)), cli.json)
        }
        Command::SkeinCheck {
            braid,
            pd,
            crossing,
            level,
        } => {
            let d = diagram_input(braid.as_deref(), pd.as_deref())?;
            let r = skein_residual(&d, crossing).map_err(usage)?;
            emit_poly(&r, level, |k| (1, 2 * (i64::from(k) + 2)), cli.json)?;
            if r.is_zero() {
                Ok(())
            } else {
                Err(CliError::Domain("skein residual is nonzero".into()))
            }
        }
        Command::FusionDim { level, marked } => {
            let lv = FusionLevel::new(level).map_err(fusion_usage)?;
            let labels = parse_marked(&marked)?;
            let dim = lv.block_dim_sphere(&labels).map_err(fusion_usage)?;
            emit_dim(dim, "paths", cli.json);
            Ok(())
        }
        Command::Verlinde {
            level,
            genus,
            marked,
        } => {
            let lv = FusionLevel::new(level).map_err(fusion_usage)?;
            let labels = parse_marked(&marked)?;
            let dim = lv.verlinde_dim(genus, &labels).map_err(fusion_usage)?;
            emit_dim(dim, "verlinde", cli.json);
            Ok(())
        }
        Command::TqftEval { algebra, cobordism } => {
            let alg_text = std::fs::read_to_string(&algebra)
                .map_err(|e| CliError::Usage(format!("cannot read {algebra}: {e}")))?;
            let cob_text = std::fs::read_to_string(&cobordism)
                .map_err(|e| CliError::Usage(format!("cannot read {cobordism}: {e}")))?;
            let alg = FrobeniusAlgebra::from_json_str(&alg_text).map_err(usage)?;
            let cob = Cobordism::from_json_str(&cob_text).map_err(usage)?;
            let m = alg.evaluate(&cob).map_err(domain)?;
            let entries = m.entries_as_strings();
            if cli.json {
                let doc = serde_json::json!({
                    "rows": m.rows(),
                    "cols": m.cols(),
                    "entries": entries,
                });
                println!("{doc}");
            } else if m.is_scalar() {
                println!("{}", entries[0][0]);
            } else {
                for row in &entries {
                    println!("{}", row.join(" "));
                }
            }
            Ok(())
        }
        Command::GqCheck { f, g, rep, n } => {
            let n = n.unwrap_or_else(|| infer_dof(&[f.as_str(), g.as_str()]));
            if n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            let table = VarTable::phase_space(n);
            let fp = MultiPoly::parse(table, &f).map_err(usage)?;
            let gp = MultiPoly::parse(table, &g).map_err(usage)?;
            let residual = match rep.as_str() {
                "prequantum" => dirac_residual(&fp, &gp).map_err(gq_error),
                _ => schrodinger_residual(&fp, &gp).map_err(gq_error),
            }?;
            if cli.json {
                let doc = serde_json::json!({
                    "residual": residual.to_string(),
                    "zero": residual.is_zero(),
                    "rep": rep,
                });
                println!("{doc}");
            } else {
                println!("{residual}");
            }
            if residual.is_zero() {
                Ok(())
            } else {
                Err(CliError::Domain("quantum-condition residual is nonzero".into()))
            }
        }
        Command::Parse { braid, pd } => {
            match (braid.as_deref(), pd.as_deref()) {
                (Some(b), None) => {
                    let w = BraidWord::parse(b).map_err(usage)?;
                    let doc = serde_json::json!({
                        "strands": w.strands(),
                        "letters": w.letters(),
                    });
                    println!("{doc}");
                }
                (None, Some(p)) => {
                    let d = LinkDiagram::parse_pd(p).map_err(usage)?;
                    println!("{}", d.to_json_string());
                }
                _ => {
                    return Err(CliError::Usage(
                        "provide exactly one of --braid or --pd".into(),
                    ))
                }
            }
            Ok(())
        }
    }
}

fn gq_error(e: GqError) -> CliError {
    match e {
        GqError::Parse(_) | GqError::TableMismatch | GqError::IndexOutOfRange { .. } => usage(e),
        GqError::WrongVariables { .. } | GqError::DegreeTooHigh { .. } => domain(e),
    }
}
