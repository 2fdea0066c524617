//! Command-line front end for the `novikov` library: parse algebra
//! documents, run the law checkers, emit catalog rows, drive the
//! finite-field searches, and run the whole verification suite.

pub mod doc;
pub mod report;
pub mod verify;

use clap::{Parser, Subcommand};
use doc::{emit_module, parse_algebra, parse_module, parse_scalar_literal};
use novikov::laws::{
    check_gd, classify_type, commutator, is_lie_algebra, is_lie_superalgebra,
    is_novikov_superalgebra, super_commutator,
};
use novikov::modules::{catalog_instantiate, check_module_axioms, CatalogTag};
use novikov::{FieldDescriptor, Scalar, SearchError, SearchSpec, SuperAlgebra};
use report::Style;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

#[derive(Parser)]
#[command(
    name = "novikov",
    version,
    about = "Law checking, classification, and search for Novikov superalgebras given by structure constants"
)]
struct Cli {
    /// Emit machine-readable key=value lines instead of prose
    #[arg(long, global = true)]
    machine: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Novikov superalgebra laws of an algebra document
    Check { file: PathBuf },
    /// Classify a Novikov superalgebra as type N or type S
    Type { file: PathBuf },
    /// Print the super bracket table and its Lie-superalgebra verdict
    Slie {
        file: PathBuf,
        /// Use the ungraded commutator and the ungraded Lie laws
        #[arg(long)]
        ungraded: bool,
    },
    /// Check the compatibility identity between the product and its super bracket
    Gd { file: PathBuf },
    /// Run the module axioms of a module document against a base algebra
    ModuleCheck { file_alg: PathBuf, file_mod: PathBuf },
    /// List the two-dimensional module catalog or emit one row
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Classify every graded table of a signature over a finite field
    Search {
        /// Even dimension
        #[arg(long)]
        d0: usize,
        /// Odd dimension
        #[arg(long)]
        d1: usize,
        /// Coefficient field, e.g. gf:3
        #[arg(long)]
        field: String,
        /// Sample this many random tables instead of sweeping all of them
        #[arg(long, value_name = "N")]
        random: Option<u64>,
        /// Seed for --random
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep candidates whose odd generators square to zero
        /// (they are skipped by default: their type is forced)
        #[arg(long)]
        no_prune: bool,
    },
    /// Run a verification suite
    Verify {
        #[command(subcommand)]
        what: VerifyWhat,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print all twelve rows with their parameters
    List,
    /// Print one row instance as a self-contained module document
    Emit {
        /// Row tag, T1 through T12
        tag: String,
        /// Parameter assignment, repeatable: --param a=2
        #[arg(long = "param", value_name = "KEY=VALUE")]
        params: Vec<String>,
        /// Field to instantiate over: rational or gf:P
        #[arg(long, default_value = "rational")]
        field: String,
    },
}

#[derive(Subcommand)]
enum VerifyWhat {
    /// The full suite backing this crate's claims, one verdict per step
    Paper {
        /// Skip steps whose name contains this substring (repeatable)
        #[arg(long = "skip", value_name = "NAME")]
        skips: Vec<String>,
        /// Also run the steps that are off by default (GF(3) completeness)
        #[arg(long)]
        full: bool,
        /// Load fixtures from a directory instead of the embedded copies
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    fn law(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

/// Entry point for the binary. Returns the process exit code:
/// 0 pass, 1 law or verification failure, 2 usage or parse error.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let style = Style::new(cli.machine);
    let mut out = String::new();
    match execute(cli.command, style, &mut out) {
        Ok(code) => {
            print!("{out}");
            code
        }
        Err(f) => {
            print!("{out}");
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn algebra_from(path: &Path) -> Result<SuperAlgebra, Failure> {
    parse_algebra(&read_file(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn parse_field_spec(spec: &str) -> Result<FieldDescriptor, Failure> {
    if spec == "rational" {
        return Ok(FieldDescriptor::Rational);
    }
    if let Some(p) = spec.strip_prefix("gf:") {
        let p: u64 = p
            .parse()
            .map_err(|_| Failure::usage(format!("bad field `{spec}`: characteristic must be an integer")))?;
        return FieldDescriptor::gf(p).map_err(|e| Failure::usage(format!("bad field `{spec}`: {e}")));
    }
    Err(Failure::usage(format!("bad field `{spec}`: expected `rational` or `gf:P`")))
}

fn execute(command: Command, style: Style, out: &mut String) -> Result<i32, Failure> {
    match command {
        Command::Check { file } => {
            let alg = algebra_from(&file)?;
            let rep = is_novikov_superalgebra(&alg);
            report::law_report(out, style, "check", &rep);
            Ok(i32::from(!rep.pass))
        }
        Command::Type { file } => {
            let alg = algebra_from(&file)?;
            let ty = classify_type(&alg).map_err(|e| Failure::law(e.to_string()))?;
            report::algebra_type(out, style, ty);
            Ok(0)
        }
        Command::Slie { file, ungraded } => {
            let alg = algebra_from(&file)?;
            let (which, bracket) = if ungraded {
                ("ungraded", commutator(&alg))
            } else {
                ("super", super_commutator(&alg))
            };
            let verdict =
                if ungraded { is_lie_algebra(&bracket) } else { is_lie_superalgebra(&bracket) };
            report::bracket(out, style, which, &bracket, &verdict);
            Ok(i32::from(!verdict.pass))
        }
        Command::Gd { file } => {
            let alg = algebra_from(&file)?;
            let bracket = super_commutator(&alg);
            let rep = check_gd(&alg, &bracket).map_err(|e| Failure::law(e.to_string()))?;
            report::law_report(out, style, "gd", &rep);
            Ok(i32::from(!rep.pass))
        }
        Command::ModuleCheck { file_alg, file_mod } => {
            let alg = algebra_from(&file_alg)?;
            let module = parse_module(&read_file(&file_mod)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", file_mod.display())))?;
            if module.base() != &alg {
                return Err(Failure::usage(format!(
                    "the base algebra embedded in {} differs from {}",
                    file_mod.display(),
                    file_alg.display()
                )));
            }
            let rep = check_module_axioms(&module).map_err(|e| Failure::law(e.to_string()))?;
            report::law_report(out, style, "module", &rep);
            Ok(i32::from(!rep.pass))
        }
        Command::Catalog { action } => match action {
            CatalogAction::List => {
                catalog_list(style, out);
                Ok(0)
            }
            CatalogAction::Emit { tag, params, field } => {
                let field = parse_field_spec(&field)?;
                let tag = build_tag(&tag, &params, field)?;
                let (_, module) =
                    catalog_instantiate(&tag, field).map_err(|e| Failure::usage(e.to_string()))?;
                out.push_str(&emit_module(&module));
                Ok(0)
            }
        },
        Command::Search { d0, d1, field, random, seed, no_prune } => {
            let field = parse_field_spec(&field)?;
            let mut spec = match random {
                Some(samples) => SearchSpec::random(d0, d1, field, samples, seed),
                None => SearchSpec::exhaustive(d0, d1, field),
            };
            spec.prune_odd_square = !no_prune;
            let rep = novikov::search::search(&spec).map_err(|e| match e {
                SearchError::NotPrimeField => Failure::usage(e.to_string()),
                SearchError::BudgetExceeded { .. } => Failure::law(e.to_string()),
            })?;
            report::search(out, style, &rep);
            Ok(0)
        }
        Command::Verify { what } => {
            let VerifyWhat::Paper { skips, full, fixtures } = what;
            let opts = verify::VerifyOptions { skips, full, fixtures };
            Ok(verify::run_verify(&opts, style, out))
        }
    }
}

/// (tag, base product, L shape, R shape, parameter names).
const CATALOG_ROWS: [(&str, &str, &str, &str, &str); 12] = [
    ("T1", "ee = 0", "L = 0", "R = 0", ""),
    ("T2", "ee = 0", "L = [[1, 0], [0, a]]", "R = 0", "a"),
    ("T3", "ee = 0", "L = [[0, 0], [1, 0]]", "R = 0", ""),
    ("T4", "ee = 0", "L = [[1, 0], [1, 1]]", "R = 0", ""),
    ("T5", "ee = 0", "L = [[0, 0], [a, 0]]", "R = [[0, 0], [1, 0]]", "a"),
    ("T6", "ee = 0", "L = [[0, 0], [a, 1]]", "R = [[0, 0], [1, 0]]", "a"),
    ("T7", "ee = e", "L = 0", "R = 0", ""),
    ("T8", "ee = e", "L = diag(a, 0)", "R = diag(1, 0)", "a"),
    ("T9", "ee = e", "L = a I", "R = I", "a"),
    ("T10", "ee = e", "L = [[a, 0], [1, a]]", "R = I", "a"),
    ("T11", "ee = e", "L = diag(a1, a2) with a1 != a2", "R = I", "a1,a2"),
    ("T12", "ee = e", "L = diag(-1, 0)", "R = [[1, b], [0, 1]] with b != 0", "b"),
];

fn catalog_list(style: Style, out: &mut String) {
    match style {
        Style::Machine => {
            writeln!(out, "catalog.rows={}", CATALOG_ROWS.len()).unwrap();
            for (n, (tag, base, l, r, params)) in CATALOG_ROWS.iter().enumerate() {
                writeln!(out, "catalog.{n}.tag={tag}").unwrap();
                writeln!(out, "catalog.{n}.base={base}").unwrap();
                writeln!(out, "catalog.{n}.l={l}").unwrap();
                writeln!(out, "catalog.{n}.r={r}").unwrap();
                writeln!(out, "catalog.{n}.params={params}").unwrap();
            }
        }
        Style::Human => {
            for (tag, base, l, r, params) in CATALOG_ROWS {
                let params = if params.is_empty() {
                    String::new()
                } else {
                    format!("   params: {params}")
                };
                writeln!(out, "{tag:<4} {base}   {l}   {r}{params}").unwrap();
            }
        }
    }
}

fn build_tag(name: &str, params: &[String], field: FieldDescriptor) -> Result<CatalogTag, Failure> {
    let mut values: Vec<(String, Scalar)> = Vec::new();
    for p in params {
        let (key, value) = p
            .split_once('=')
            .ok_or_else(|| Failure::usage(format!("bad --param `{p}`: expected KEY=VALUE")))?;
        let scalar = parse_scalar_literal(field, value)
            .map_err(|e| Failure::usage(format!("bad --param `{p}`: {e}")))?;
        values.push((key.to_string(), scalar));
    }
    let mut take = |key: &str| -> Result<Scalar, Failure> {
        let at = values
            .iter()
            .position(|(k, _)| k == key)
            .ok_or_else(|| Failure::usage(format!("{name} needs --param {key}=VALUE")))?;
        Ok(values.swap_remove(at).1)
    };
    let tag = match name {
        "T1" => CatalogTag::T1,
        "T2" => CatalogTag::T2 { a: take("a")? },
        "T3" => CatalogTag::T3,
        "T4" => CatalogTag::T4,
        "T5" => CatalogTag::T5 { a: take("a")? },
        "T6" => CatalogTag::T6 { a: take("a")? },
        "T7" => CatalogTag::T7,
        "T8" => CatalogTag::T8 { a: take("a")? },
        "T9" => CatalogTag::T9 { a: take("a")? },
        "T10" => CatalogTag::T10 { a: take("a")? },
        "T11" => CatalogTag::T11 { a1: take("a1")?, a2: take("a2")? },
        "T12" => CatalogTag::T12 { b: take("b")? },
        other => {
            return Err(Failure::usage(format!("unknown catalog tag `{other}`; see `catalog list`")))
        }
    };
    if let Some((key, _)) = values.first() {
        return Err(Failure::usage(format!("{name} does not take --param {key}")));
    }
    Ok(tag)
}
