mod error;
mod svg;

use std::collections::BTreeSet;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use polyinv_core::bns::{bns_arcs, bns_member, splitting_complexity, thickness_of, thurston_polytope};
use polyinv_core::json;
use polyinv_core::marked::{interval_invariant, marked_invariant, walk_polytope};
use polyinv_core::{Direction, GrothElement, IntegralPolytope, Presentation, Route};
use serde_json::{json, Value};

use error::{CliError, EXIT_DISCREPANCY};

#[derive(Parser)]
#[command(name = "polyinv", version, about = "Polytope invariants of two-generator one-relator groups")]
struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Emit a human-readable table derived from the JSON.
    #[arg(long, global = true)]
    table: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PresArg {
    /// Presentation `<x,y|WORD>` or a bare relator; `-` reads stdin.
    presentation: String,
}

#[derive(Args)]
struct PhiArg {
    /// Character as one (b1 = 1) or two (b1 = 2) integers.
    #[arg(long, num_args = 1..=2, required = true, allow_negative_numbers = true, value_name = "N")]
    phi: Vec<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    X,
    Y,
}

impl From<RouteArg> for Route {
    fn from(r: RouteArg) -> Route {
        match r {
            RouteArg::X => Route::X,
            RouteArg::Y => Route::Y,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Report the validity flags of a presentation.
    Validate(PresArg),
    /// The polytope invariant: a polytope for b1 = 2, an interval class for b1 = 1.
    Polytope {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// The marked polytope of a nice presentation.
    Marked {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long, value_enum, default_value = "x")]
        route: RouteArg,
        #[arg(long, value_name = "PATH")]
        svg: Option<PathBuf>,
    },
    /// The BNS invariant as arcs of characters.
    Bns(PresArg),
    /// Whether a character lies in the BNS invariant.
    BnsMember {
        #[command(flatten)]
        pres: PresArg,
        #[command(flatten)]
        phi: PhiArg,
    },
    /// Thickness of the polytope invariant along a character.
    Thickness {
        #[command(flatten)]
        pres: PresArg,
        #[command(flatten)]
        phi: PhiArg,
        /// Label the value as the Thurston norm of a 3-manifold group.
        #[arg(long)]
        assert_3manifold: bool,
    },
    /// Twice the polytope invariant.
    Thurston {
        #[command(flatten)]
        pres: PresArg,
        #[arg(long)]
        assert_3manifold: bool,
    },
    /// Splitting complexity along an epimorphism onto Z.
    SplitComplexity {
        #[command(flatten)]
        pres: PresArg,
        #[command(flatten)]
        phi: PhiArg,
    },
    /// Arithmetic on Grothendieck elements read from JSON files.
    Groth {
        #[command(subcommand)]
        op: GrothOp,
    },
    /// Thurston polytope from chain-complex boundary data.
    Chain3m {
        /// JSON file; `-` reads stdin.
        file: String,
        /// Evaluate every admissible index pair and require agreement.
        #[arg(long)]
        strict: bool,
        /// Check the duality symmetry of a closed 3-manifold.
        #[arg(long)]
        assert_3manifold: bool,
    },
    /// Render a polytope or marked polytope JSON file as SVG.
    Render {
        file: String,
        #[arg(long, value_name = "PATH")]
        svg: PathBuf,
    },
}

#[derive(Subcommand)]
enum GrothOp {
    Add { a: String, b: String },
    Neg { a: String },
    Equal { a: String, b: String },
    Thickness {
        a: String,
        #[command(flatten)]
        phi: PhiArg,
    },
    IsPolytope { a: String },
    Mirror { a: String },
    /// Twice the symmetrization, `P + mirror(P)`.
    Sym { a: String },
    Scale {
        a: String,
        #[arg(long, allow_negative_numbers = true)]
        k: String,
    },
}

fn read_input(arg: &str) -> Result<String, CliError> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(CliError::io)?;
        Ok(s)
    } else {
        std::fs::read_to_string(arg).map_err(|e| CliError::io(format!("{arg}: {e}")))
    }
}

fn presentation(arg: &PresArg) -> Result<Presentation, CliError> {
    let text = if arg.presentation == "-" {
        read_input("-")?
    } else {
        arg.presentation.clone()
    };
    Ok(Presentation::parse(text.trim())?)
}

fn direction(phi: &PhiArg) -> Result<Direction, CliError> {
    let coords = phi
        .phi
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|_| CliError::validation("bad_phi", format!("not an integer: {s}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Direction::new(coords)?)
}

fn read_json_file(arg: &str) -> Result<Value, CliError> {
    Ok(json::parse(&read_input(arg)?)?)
}

/// A Grothendieck element, or a plain polytope read as one.
fn read_groth_file(arg: &str) -> Result<GrothElement, CliError> {
    let v = read_json_file(arg)?;
    if v.get("pos").is_some() {
        Ok(json::read_groth(&v, "$")?)
    } else {
        Ok(GrothElement::from_polytope(json::read_polytope(&v, "$")?))
    }
}

fn canonical_groth(e: &GrothElement) -> Value {
    json!({ "pos": json::polytope(&e.pos().canonical()), "neg": json::polytope(&e.neg_part().canonical()) })
}

fn canonical_rep(e: &GrothElement) -> Result<Value, CliError> {
    Ok(match e.as_polytope()? {
        Some(p) => json::polytope(&p.canonical()),
        None => Value::Null,
    })
}

fn write_svg(path: &Path, p: &IntegralPolytope, marked: &BTreeSet<usize>) -> Result<(), CliError> {
    let text = svg::render(p, marked)?;
    std::fs::write(path, text).map_err(|e| CliError::io(format!("{}: {e}", path.display())))
}

fn require_b1_two(p: &Presentation, what: &str) -> Result<(), CliError> {
    if p.b1() == 2 {
        Ok(())
    } else {
        Err(CliError::unsupported(
            "unsupported_b1",
            format!("{what} is unsupported for b1 = 1"),
        ))
    }
}

/// Successful output, or a payload that must be printed with a nonzero exit.
enum Outcome {
    Ok(Value),
    Fail(u8, Value),
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let value = match &cli.command {
        Command::Validate(arg) => {
            let p = presentation(arg)?;
            let (ex, ey) = p.exponent_sums();
            json!({
                "b1": p.b1(),
                "nice": p.is_nice(),
                "proper_power": p.is_proper_power(),
                "reduced": p.is_reduced(),
                "cyclically_reduced": p.is_cyclically_reduced(),
                "exponent_sums": [ex, ey],
                "relator": p.relator().to_string(),
            })
        }
        Command::Polytope { pres, svg } => {
            let p = presentation(pres)?;
            if p.b1() == 2 {
                let poly = walk_polytope(&p)?.canonical();
                if let Some(path) = svg {
                    write_svg(path, &poly, &BTreeSet::new())?;
                }
                json!({
                    "b1": 2,
                    "element": canonical_groth(&GrothElement::from_polytope(poly.clone())),
                    "representative": json::polytope(&poly),
                })
            } else {
                let inv = interval_invariant(&p)?;
                if let (Some(path), Some(rep)) = (svg, &inv.representative) {
                    write_svg(path, &rep.canonical(), &BTreeSet::new())?;
                }
                json!({
                    "b1": 1,
                    "element": canonical_groth(&inv.element),
                    "representative": canonical_rep(&inv.element)?,
                    "route": inv.route.to_string(),
                })
            }
        }
        Command::Marked { pres, route, svg } => {
            let p = presentation(pres)?;
            require_b1_two(&p, "marking")?;
            let m = marked_invariant(&p, (*route).into())?.canonical();
            if let Some(path) = svg {
                write_svg(path, m.polytope(), m.marked_indices())?;
            }
            json::marked(&m)
        }
        Command::Bns(arg) => json::bns_report(&bns_arcs(&presentation(arg)?)?),
        Command::BnsMember { pres, phi } => {
            let p = presentation(pres)?;
            json!({ "member": bns_member(&p, &direction(phi)?)? })
        }
        Command::Thickness {
            pres,
            phi,
            assert_3manifold,
        } => {
            let p = presentation(pres)?;
            let d = direction(phi)?;
            let th = thickness_of(&p, &d)?;
            let label = if *assert_3manifold {
                "Thurston norm x(φ)"
            } else {
                "thickness th_φ"
            };
            json!({ "label": label, "phi": json::direction(&d), "value": json::int(&th) })
        }
        Command::Thurston {
            pres,
            assert_3manifold,
        } => {
            let e = thurston_polytope(&presentation(pres)?)?;
            let label = if *assert_3manifold {
                "Thurston polytope T(N)"
            } else {
                "2·P(Γ)"
            };
            json!({ "label": label, "element": canonical_groth(&e), "representative": canonical_rep(&e)? })
        }
        Command::SplitComplexity { pres, phi } => {
            let p = presentation(pres)?;
            let d = direction(phi)?;
            json!({ "phi": json::direction(&d), "splitting_complexity": json::int(&splitting_complexity(&p, &d)?) })
        }
        Command::Groth { op } => groth(op)?,
        Command::Chain3m {
            file,
            strict,
            assert_3manifold,
        } => return chain3m(file, *strict, *assert_3manifold),
        Command::Render { file, svg } => {
            let v = read_json_file(file)?;
            let (poly, marks) = if v.get("marked").is_some() {
                let m = json::read_marked(&v, "$")?.canonical();
                (m.polytope().clone(), m.marked_indices().clone())
            } else {
                (json::read_polytope(&v, "$")?.canonical(), BTreeSet::new())
            };
            write_svg(svg, &poly, &marks)?;
            json!({ "svg": svg.display().to_string() })
        }
    };
    Ok(Outcome::Ok(value))
}

fn groth(op: &GrothOp) -> Result<Value, CliError> {
    Ok(match op {
        GrothOp::Add { a, b } => canonical_groth(&read_groth_file(a)?.add(&read_groth_file(b)?)?),
        GrothOp::Neg { a } => canonical_groth(&read_groth_file(a)?.neg()),
        GrothOp::Equal { a, b } => {
            json!({ "equal": read_groth_file(a)?.g_equal(&read_groth_file(b)?)? })
        }
        GrothOp::Thickness { a, phi } => {
            json!({ "thickness": json::int(&read_groth_file(a)?.thickness(&direction(phi)?)?) })
        }
        GrothOp::IsPolytope { a } => {
            let e = read_groth_file(a)?;
            json!({ "is_polytope": e.is_polytope()?, "representative": canonical_rep(&e)? })
        }
        GrothOp::Mirror { a } => canonical_groth(&read_groth_file(a)?.mirror()),
        GrothOp::Sym { a } => canonical_groth(&read_groth_file(a)?.symmetrize_double()),
        GrothOp::Scale { a, k } => {
            let k: BigInt = k
                .parse()
                .map_err(|_| CliError::validation("invalid_input", format!("not an integer: {k}")))?;
            canonical_groth(&read_groth_file(a)?.scale(&k))
        }
    })
}

fn chain3m(file: &str, strict: bool, assert_3manifold: bool) -> Result<Outcome, CliError> {
    let data = json::read_chain(&read_json_file(file)?)?;
    let r = data.thurston_from_chain(strict)?;
    let mut out = json!({
        "element": canonical_groth(&r.element),
        "i": r.i,
        "j": r.j,
        "representative": r.representative.as_ref().map_or(Value::Null, |p| json::polytope(&p.canonical())),
    });
    if assert_3manifold {
        let mut warnings = Vec::new();
        if !r.element.duality_holds(3) {
            warnings.push("duality symmetry fails: the element is not symmetric up to translation");
        }
        out["warnings"] = json!(warnings);
    }
    if let Some((evals, agree)) = &r.strict {
        let pairs: Vec<Value> = evals
            .iter()
            .map(|e| match &e.result {
                Ok(g) => json!({ "i": e.i, "j": e.j, "element": canonical_groth(g) }),
                Err(err) => json!({ "i": e.i, "j": e.j, "error": err.to_string() }),
            })
            .collect();
        out["strict"] = json!({ "agree": agree, "pairs": pairs });
        if !agree {
            return Ok(Outcome::Fail(
                EXIT_DISCREPANCY,
                json::error("strict_disagreement", out),
            ));
        }
    }
    Ok(Outcome::Ok(out))
}

fn table(v: &Value) -> String {
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            map.iter()
                .map(|(k, v)| {
                    let text = match v {
                        Value::String(s) => s.clone(),
                        other => json::to_string(other),
                    };
                    format!("{k:<width$}  {text}\n")
                })
                .collect()
        }
        other => format!("{}\n", json::to_string(other)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (code, value) = match run(&cli) {
        Ok(Outcome::Ok(v)) => (0, v),
        Ok(Outcome::Fail(code, v)) => (code, v),
        Err(e) => (e.exit, e.to_json()),
    };
    // Errors stay machine-readable regardless of the output mode.
    let text = if cli.table && code == 0 {
        table(&value)
    } else {
        format!("{}\n", json::to_string(&value))
    };
    let mut stdout = io::stdout().lock();
    if stdout.write_all(text.as_bytes()).is_err() {
        return ExitCode::from(error::EXIT_IO);
    }
    ExitCode::from(code)
}
