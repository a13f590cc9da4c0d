use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ladder_det::{
    basis, canonical_class, classify, compose, construct_2n, corners, decompose, is_gorenstein,
    validate, verify_witnesses, Class, Ladder, Monomial, Report, RewriteSystem, MAX_DEGREE_BOUND,
};

#[derive(Parser, Debug)]
#[command(
    name = "ladder",
    version,
    about = "Ladder determinantal rings and their semidualizing modules"
)]
struct Cli {
    #[command(flatten)]
    output: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Emit JSON with sorted keys.
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Emit human-readable text (default).
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Args, Debug)]
struct Input {
    /// Ladder file (JSON or ASCII grid); stdin when omitted.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

fn degree_bound(s: &str) -> Result<usize, String> {
    let d: usize = s.parse().map_err(|e| format!("{e}"))?;
    if (1..=MAX_DEGREE_BOUND).contains(&d) {
        Ok(d)
    } else {
        Err(format!("must be between 1 and {MAX_DEGREE_BOUND}"))
    }
}

#[derive(Args, Debug)]
struct Rewriting {
    /// Largest monomial degree accepted.
    #[arg(long, default_value_t = 4, value_parser = degree_bound)]
    degree_bound: usize,
    /// Monomial as inline JSON or a path to a JSON file.
    #[arg(long = "mono", value_name = "JSON|FILE")]
    mono: Vec<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural checks: closure, minors coverage, 2-connectedness, sidedness.
    Validate(Input),
    /// Lower, upper and coincidental inside corners.
    Corners(Input),
    /// Factors at the coincidental corners.
    Decompose(Input),
    /// Basis of the divisor class group.
    Classgroup(Input),
    /// The canonical class.
    Canonical(Input),
    /// Whether the ring is Gorenstein.
    Gorenstein(Input),
    /// Semidualizing classes.
    Sdm(Input),
    /// Glue ladders in the given order.
    Compose {
        /// Factor files, top-right factor first.
        #[arg(long = "in", value_name = "FILE", required = true)]
        inputs: Vec<PathBuf>,
    },
    /// Reflect along the antidiagonal.
    Antitranspose(Input),
    /// Draw the ladder as an ASCII grid.
    Render {
        #[command(flatten)]
        input: Input,
        /// Mark lower (L), upper (U) and coincidental (C) corners.
        #[arg(long)]
        annotate: bool,
    },
    /// Composite of non-square full matrices with 2^N semidualizing classes.
    Construct2n {
        /// Block sizes, e.g. 2x3,3x4.
        #[arg(long, value_delimiter = ',', required = true, value_parser = block_size)]
        sizes: Vec<(usize, usize)>,
    },
    /// Normal form of a monomial modulo the 2-minors.
    Nf {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rewriting: Rewriting,
    },
    /// Whether two monomials agree modulo the 2-minors.
    Eq {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        rewriting: Rewriting,
    },
    /// Check the multiplication-map witness identities on a # of two matrices.
    Witness(Input),
}

fn block_size(s: &str) -> Result<(usize, usize), String> {
    let (r, c) = s
        .trim()
        .split_once(['x', 'X'])
        .ok_or_else(|| format!("expected ROWSxCOLS, got {s:?}"))?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
    Ok((parse(r)?, parse(c)?))
}

/// Domain failures exit 1; usage and IO failures exit 2.
enum Failure {
    Domain(String),
    Usage(String),
}

impl From<ladder_det::Error> for Failure {
    fn from(e: ladder_det::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn read_source(path: Option<&PathBuf>) -> Result<String, Failure> {
    match path {
        Some(p) => std::fs::read_to_string(p)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn load(input: &Input) -> Result<Ladder, Failure> {
    Ok(Ladder::parse_auto(&read_source(input.input.as_ref())?)?)
}

fn load_mono(arg: &str) -> Result<Monomial, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read_source(Some(&PathBuf::from(arg)))?
    };
    Ok(Monomial::parse_json(&text)?)
}

fn load_monos(r: &Rewriting, want: usize) -> Result<Vec<Monomial>, Failure> {
    if r.mono.len() != want {
        return Err(Failure::Usage(format!(
            "expected {want} --mono argument(s), got {}",
            r.mono.len()
        )));
    }
    let monos = r
        .mono
        .iter()
        .map(|m| load_mono(m))
        .collect::<Result<Vec<_>, _>>()?;
    for m in &monos {
        if m.degree() as usize > r.degree_bound {
            return Err(ladder_det::Error::DegreeBound(m.degree() as usize, r.degree_bound).into());
        }
    }
    Ok(monos)
}

/// What a command produced, in both renderings.
struct Rendered {
    json: Value,
    text: String,
    ok: bool,
}

impl Rendered {
    fn new(json: Value, text: String) -> Self {
        Rendered {
            json,
            text,
            ok: true,
        }
    }
}

fn cell_list(v: &Value) -> String {
    match v.as_array() {
        Some(a) if !a.is_empty() => a
            .iter()
            .map(|c| format!("({},{})", c[0], c[1]))
            .collect::<Vec<_>>()
            .join(" "),
        _ => "none".into(),
    }
}

fn ladder_output(y: &Ladder) -> Rendered {
    Rendered::new(y.to_json(), y.render_ascii(false))
}

fn sdm_text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "rank: {}", r.rank);
    let _ = writeln!(s, "omega: {}", r.omega);
    let _ = writeln!(s, "factors:");
    for (u, f) in r.factors.iter().enumerate() {
        let _ = writeln!(
            s,
            "  Z{u}  {}x{}  gorenstein={}  omega image {}",
            f.rows, f.cols, f.gorenstein, f.omega_image
        );
    }
    let _ = writeln!(s, "count: {}", r.count);
    let _ = writeln!(s, "classes:");
    for (theta, c) in r.thetas.iter().zip(&r.classes) {
        let t: Vec<String> = theta.iter().map(u8::to_string).collect();
        let _ = writeln!(s, "  theta=({})  {c}", t.join(","));
    }
    if r.base_case_external {
        let _ = writeln!(
            s,
            "note: no coincidental corners; the count rests on the two-sided ladder base case"
        );
    }
    s
}

fn run(cmd: &Command) -> Result<Rendered, Failure> {
    Ok(match cmd {
        Command::Validate(i) => {
            let y = load(i)?;
            let r = validate(&y);
            let mut text = String::new();
            let _ = writeln!(text, "size: {}x{}", y.rows(), y.cols());
            let _ = writeln!(text, "every cell in a minor: {}", r.every_cell_in_minor);
            let _ = writeln!(text, "2-connected: {}", r.two_connected);
            let _ = writeln!(text, "path-connected: {}", r.path_connected);
            let _ = writeln!(text, "sidedness: {}", r.sidedness);
            for m in &r.messages {
                let _ = writeln!(text, "note: {m}");
            }
            Rendered {
                json: r.to_json(),
                text,
                ok: r.is_ladder && r.two_connected,
            }
        }
        Command::Corners(i) => {
            let v = corners(&load(i)?).to_json();
            let text = format!(
                "lower: {}\nupper: {}\ncoincidental: {}\n",
                cell_list(&v["lower"]),
                cell_list(&v["upper"]),
                cell_list(&v["coincidental"])
            );
            Rendered::new(v, text)
        }
        Command::Decompose(i) => {
            let f = decompose(&load(i)?)?;
            let mut text = format!("coincidental corners: {}\n", f.w());
            for (u, z) in f.factors.iter().enumerate() {
                let (dr, dc) = f.offsets[u];
                let _ = writeln!(
                    text,
                    "Z{u}: {}x{} at offset ({dr},{dc})",
                    z.rows(),
                    z.cols()
                );
                text.push_str(&z.render_ascii(false));
            }
            Rendered::new(f.to_json(), text)
        }
        Command::Classgroup(i) => {
            let b = basis(&load(i)?)?;
            let names: Vec<String> = b.iter().map(ToString::to_string).collect();
            let text = format!("Cl = Z^{}\nbasis: {}\n", b.len(), names.join(" "));
            Rendered::new(json!({"basis": names, "rank": b.len()}), text)
        }
        Command::Canonical(i) => {
            let w: Class = canonical_class(&load(i)?)?;
            Rendered::new(w.to_json()?, format!("{w}\n"))
        }
        Command::Gorenstein(i) => {
            let g = is_gorenstein(&load(i)?)?;
            Rendered::new(json!(g), format!("{g}\n"))
        }
        Command::Sdm(i) => {
            let r: Report = classify(&load(i)?)?;
            Rendered::new(r.to_json()?, sdm_text(&r))
        }
        Command::Compose { inputs } => {
            let factors = inputs
                .iter()
                .map(|p| Ok(Ladder::parse_auto(&read_source(Some(p))?)?))
                .collect::<Result<Vec<_>, Failure>>()?;
            ladder_output(&compose(&factors)?)
        }
        Command::Antitranspose(i) => ladder_output(&load(i)?.antitranspose()),
        Command::Render { input, annotate } => {
            let y = load(input)?;
            let grid = y.render_ascii(*annotate);
            Rendered::new(json!({"grid": grid}), grid)
        }
        Command::Construct2n { sizes } => ladder_output(&construct_2n(sizes.len(), sizes)?),
        Command::Nf { input, rewriting } => {
            let y = load(input)?;
            let m = &load_monos(rewriting, 1)?[0];
            let nf = RewriteSystem::new(&y).normal_form(m)?;
            Rendered::new(nf.to_json(), format!("{nf}\n"))
        }
        Command::Eq { input, rewriting } => {
            let y = load(input)?;
            let ms = load_monos(rewriting, 2)?;
            let eq = RewriteSystem::new(&y).equal_mod_minors(&ms[0], &ms[1])?;
            Rendered::new(json!(eq), format!("{eq}\n"))
        }
        Command::Witness(i) => {
            let r = verify_witnesses(&load(i)?)?;
            let mut text = format!(
                "corner: {}\nlambda01: {}\nlambda11: {}\n",
                r.corner, r.lambda01, r.lambda11
            );
            match &r.outcome {
                None => text.push_str("vacuous: no case applies\n"),
                Some(o) => {
                    let _ = writeln!(text, "case: {}", o.case);
                    let _ = writeln!(text, "left:  {} (x) {}", o.left.0, o.left.1);
                    let _ = writeln!(text, "right: {} (x) {}", o.right.0, o.right.1);
                    let _ = writeln!(text, "identity holds: {}", o.identity_holds);
                    let _ = writeln!(text, "memberships hold: {}", o.memberships_hold);
                    let _ = writeln!(text, "tensors differ: {}", o.tensors_differ);
                }
            }
            Rendered::new(r.to_json(), text)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = &cli.output;
    match run(&cli.command) {
        Ok(r) => {
            let body = if out.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&r.json).expect("serializable")
                )
            } else {
                r.text
            };
            let _ = io::stdout().lock().write_all(body.as_bytes());
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
