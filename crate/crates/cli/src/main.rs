use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use simconj::catalog::{self, Predicate};
use simconj::format::{load_spec, to_canonical_json};
use simconj::registry::{builtin_catalog, named_group};
use simconj::render::{self, Shape, CLOSED_FORMS};
use simconj_core::group::AssociativityCheck;
use simconj_core::invariants::{alpha_n, b_of};
use simconj_core::oracle::{alpha_bruteforce_with_limit, beta_bruteforce_with_limit, DEFAULT_LIMIT};
use simconj_core::ratfun::divisors;
use simconj_core::{build, FiniteGroup, GroupSpec, Rational};

const EXIT_PARSE: u8 = 2;
const EXIT_BUILD: u8 = 3;
const EXIT_SCAN: u8 = 4;
const EXIT_TABLE: u8 = 5;

#[derive(Parser)]
#[command(
    name = "simconj",
    version,
    about = "Generating functions for simultaneous conjugacy classes of finite groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute A_G and/or B_G of one group.
    Compute(ComputeArgs),
    /// Report catalog pairs of equal order matching a predicate.
    Scan(ScanArgs),
    /// Print the normalized invariants of every isoclinism family at p.
    Table1(Table1Args),
    /// Catalog maintenance.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Brute-force oracles.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
    /// Evaluate a closed formula.
    ClosedForm(ClosedFormArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Named group, e.g. `dihedral:18`, `stem:Phi5:3`, `Q8 x C2`, `G54_6`.
    #[arg(long, conflicts_with = "spec")]
    group: Option<String>,
    /// JSON group spec file.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Check associativity on all triples, whatever the order.
    #[arg(long)]
    exhaustive: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    A,
    B,
    Both,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    group: GroupArgs,
    #[arg(long, value_enum, ignore_case = true, default_value = "both")]
    invariant: Which,
    #[arg(long, value_enum, default_value = "rational")]
    format: Shape,
    /// Number of series terms.
    #[arg(long, default_value_t = 8)]
    terms: usize,
    /// Print A_G(t/|G|) and B_G(t/|G|) instead.
    #[arg(long)]
    normalized: bool,
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    catalog: PathBuf,
    #[arg(long, value_enum)]
    predicate: Predicate,
    /// Restrict the scan to these entries.
    #[arg(long = "name")]
    names: Vec<String>,
    /// Write the JSON report here instead of printing it.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Table1Args {
    /// The prime.
    p: u64,
    /// Build each stem group and compare.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Compute the built-in catalog plus any extra spec files.
    Build {
        #[arg(long)]
        output: PathBuf,
        /// Extra spec files; each entry is named after its file stem.
        #[arg(long = "spec")]
        specs: Vec<PathBuf>,
        /// Skip built-in groups above this order.
        #[arg(long)]
        max_order: Option<u64>,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Compare brute-force orbit counts with the series of A_G and B_G.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        /// Largest tuple length.
        #[arg(long, default_value_t = 3)]
        n: u32,
        /// Bound on |G|^n.
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: u64,
    },
}

#[derive(Args)]
struct ClosedFormArgs {
    /// One of: dihedral-odd, dihedral-even, central-p2, central-p3,
    /// abelian-maximal, extraspecial, maximal-class, frobenius-abelian, family.
    name: String,
    params: Vec<String>,
    #[arg(long, value_enum, default_value = "rational")]
    format: Shape,
    #[arg(long, default_value_t = 8)]
    terms: usize,
}

/// An error carrying its exit code.
struct Failure(u8, anyhow::Error);

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(1, e.into())
    }
}

fn fail(code: u8) -> impl FnOnce(anyhow::Error) -> Failure {
    move |e| Failure(code, e)
}

fn load_group(args: &GroupArgs) -> Result<FiniteGroup, Failure> {
    let spec: GroupSpec = match (&args.group, &args.spec) {
        (Some(name), _) => named_group(name).map_err(fail(EXIT_PARSE))?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(fail(EXIT_PARSE))?;
            load_spec(&text)
                .with_context(|| format!("in {}", path.display()))
                .map_err(fail(EXIT_PARSE))?
        }
        (None, None) => return Err(Failure(EXIT_PARSE, anyhow::anyhow!("give --group or --spec"))),
    };
    let g = build(&spec).map_err(|e| Failure(EXIT_BUILD, e.into()))?;
    if args.exhaustive {
        FiniteGroup::from_table(&g.table_rows(), AssociativityCheck::Exhaustive)
            .map_err(|e| Failure(EXIT_BUILD, e.into()))?;
    }
    Ok(g)
}

fn compute(args: ComputeArgs) -> Result<(), Failure> {
    let g = load_group(&args.group)?;
    let cache = catalog::cache_dir();
    let record = catalog::record_for(&g, cache.as_deref())?;
    let (a, b) = if args.normalized {
        (record.normalized_a, record.normalized_b)
    } else {
        (record.a, record.b)
    };
    let poles = if args.normalized {
        Vec::new()
    } else {
        divisors(record.order)
    };
    if args.invariant != Which::B {
        println!("A = {}", render::render(&a, args.format, args.terms, &poles)?);
    }
    if args.invariant != Which::A {
        println!("B = {}", render::render(&b, args.format, args.terms, &poles)?);
    }
    Ok(())
}

fn scan(args: ScanArgs) -> Result<(), Failure> {
    let cat = catalog::read_catalog(&args.catalog).map_err(fail(EXIT_PARSE))?;
    let report = catalog::scan(&cat, args.predicate, &args.names).map_err(|e| Failure(EXIT_SCAN, e.into()))?;
    let text = to_canonical_json(&report);
    match args.output {
        Some(path) => catalog::write_atomic(&path, &text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn table1(args: Table1Args) -> Result<(), Failure> {
    let rows = render::table1(args.p, args.verify).map_err(fail(EXIT_TABLE))?;
    print!("{}", render::table1_text(&rows, args.p));
    if rows.iter().any(|r| r.verified == Some(false)) {
        return Err(Failure(EXIT_TABLE, anyhow::anyhow!("table verification failed")));
    }
    Ok(())
}

fn catalog_build(output: PathBuf, specs: Vec<PathBuf>, max_order: Option<u64>) -> Result<(), Failure> {
    let mut entries: Vec<(String, GroupSpec)> = builtin_catalog()
        .into_iter()
        .filter(|(_, s)| match max_order {
            None => true,
            Some(max) => match s.predicted_order() {
                Some(o) => o <= max,
                None => build(s).map_or(true, |g| g.order() as u64 <= max),
            },
        })
        .collect();
    for path in specs {
        let text = std::fs::read_to_string(&path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(fail(EXIT_PARSE))?;
        let spec = load_spec(&text)
            .with_context(|| format!("in {}", path.display()))
            .map_err(fail(EXIT_PARSE))?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        entries.push((name, spec));
    }
    let cache = catalog::cache_dir();
    let cat = catalog::build_catalog(entries, cache.as_deref());
    catalog::save_catalog(&output, &cat)?;
    let computed = cat.entries.iter().filter(|e| e.record().is_some()).count();
    eprintln!(
        "wrote {} entries ({} computed) to {}",
        cat.entries.len(),
        computed,
        output.display()
    );
    Ok(())
}

fn oracle_check(group: GroupArgs, n: u32, limit: u64) -> Result<(), Failure> {
    let g = load_group(&group)?;
    let b = b_of(&g)?.series_coeffs(n as usize + 1);
    let mut ok = true;
    for k in 0..=n {
        let alpha = alpha_bruteforce_with_limit(&g, k, limit)?;
        let beta = beta_bruteforce_with_limit(&g, k, limit)?;
        let a_series = alpha_n(&g, k);
        let b_series = &b[k as usize];
        let pass = Rational::from_integer(a_series.clone()) == Rational::from_integer(alpha.count.into())
            && *b_series == Rational::from_integer(beta.count.into());
        ok &= pass;
        println!(
            "n = {k}: alpha {} (series {a_series}), beta {} (series {b_series}) {}",
            alpha.count,
            beta.count,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    if !ok {
        return Err(anyhow::anyhow!("oracle mismatch").into());
    }
    Ok(())
}

fn closed_form(args: ClosedFormArgs) -> Result<(), Failure> {
    let (a, b) = render::closed_form(&args.name, &args.params).map_err(|e| {
        Failure(
            EXIT_PARSE,
            e.context(format!("available forms: {}", CLOSED_FORMS.join("; "))),
        )
    })?;
    println!("A = {}", render::render(&a, args.format, args.terms, &[])?);
    if let Some(b) = b {
        println!("B = {}", render::render(&b, args.format, args.terms, &[])?);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Scan(a) => scan(a),
        Command::Table1(a) => table1(a),
        Command::Catalog {
            command:
                CatalogCommand::Build {
                    output,
                    specs,
                    max_order,
                },
        } => catalog_build(output, specs, max_order),
        Command::Oracle {
            command: OracleCommand::Check { group, n, limit },
        } => oracle_check(group, n, limit),
        Command::ClosedForm(a) => closed_form(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(code)
        }
    }
}
