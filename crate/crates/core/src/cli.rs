//! Command-line frontend: exact queries, symbolic tables, the factorization
//! oracle, intersection-number evaluations and the verification suites.
//!
//! Exit codes: 0 on success, 1 on a verification failure or refused budget,
//! 2 on argument errors. Rationals are always printed exactly (`p/q` or `n`),
//! never as floats.

use std::io::Write as _;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::error::Error;
use crate::exact::Rational;
use crate::hurwitz::{double_cutjoin, one_part, one_part_polynomial, spin_one_part, SymmetricPoly};
use crate::moduli::{chiodo_g1_deg01, chiodo_g1_deg01_parts, linear_hodge, psi_dvv};
use crate::oracle::{self, double_hurwitz, raw_count, HurwitzQuery};
use crate::partitions::Partition;
use crate::relations::{self, VerificationReport};

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Exact Hurwitz-number computations with cross-verified routes")]
struct Cli {
    /// Worker threads for parallel enumeration (0 = rayon default)
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Route {
    Series,
    Oracle,
    Cutjoin,
}

impl Route {
    fn tag(self) -> &'static str {
        match self {
            Route::Series => "series:kernel-quotient",
            Route::Oracle => "oracle:factorizations",
            Route::Cutjoin => "cutjoin:class-algebra",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Comparison,
    Exchange,
    Appendix,
    Chiodo,
    Spin,
    Section6,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one Hurwitz number (one-part, double, orbifold or spin)
    Compute(ComputeArgs),
    /// Emit the symbolic one-part polynomial for fixed genus and part count
    Table(TableArgs),
    /// Count transitive transposition factorizations directly
    Oracle(OracleArgs),
    /// Intersection-number evaluations
    #[command(subcommand)]
    Moduli(ModuliCommand),
    /// Run a verification suite and emit its JSON report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ComputeArgs {
    #[arg(long)]
    genus: u32,
    /// Ramification profile over infinity, comma-separated
    #[arg(long)]
    mu: String,
    /// Profile over zero, comma-separated
    #[arg(long, conflicts_with_all = ["one_part", "orbifold", "spin"])]
    nu: Option<String>,
    /// Use the single-part profile (d) over zero
    #[arg(long, conflicts_with_all = ["orbifold", "spin"])]
    one_part: bool,
    /// Use the uniform profile (q, ..., q) over zero
    #[arg(long, conflicts_with = "spin")]
    orbifold: Option<u32>,
    /// Spin order r (one-part spin number)
    #[arg(long)]
    spin: Option<u32>,
    /// Computation route, when several are available
    #[arg(long, value_enum)]
    route: Option<Route>,
    /// Run every available route and require exact agreement
    #[arg(long)]
    cross_check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Oracle tuple budget (overrides HURWITZ_BUDGET)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long)]
    genus: u32,
    /// Number of parts of the symbolic profile
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    genus: u32,
    #[arg(long)]
    mu: String,
    #[arg(long)]
    nu: String,
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum ModuliCommand {
    /// psi-class intersection number for given exponents
    Psi {
        #[arg(long)]
        genus: u32,
        /// psi exponents per marked point, comma-separated (zeros allowed)
        #[arg(long)]
        exp: String,
    },
    /// Linear Hodge integral against 1/(1 - d psi)
    Hodge {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        d: u32,
    },
    /// Degree-(0,1) genus-one Chiodo contribution, summand by summand
    ChiodoG1 {
        #[arg(long)]
        d: u32,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    #[arg(long)]
    gmax: Option<u32>,
    #[arg(long)]
    dmax: Option<u32>,
    #[arg(long)]
    rmax: Option<u32>,
    /// Write the JSON report here instead of stdout
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    budget: Option<u64>,
}

/// Runs the CLI on the given arguments and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if cli.threads > 0 {
        // ignore failure: the global pool may already exist in-process
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => 1,
                _ => 2,
            }
        }
    }
}

fn dispatch(command: Command) -> Result<i32, Error> {
    match command {
        Command::Compute(args) => compute(args),
        Command::Table(args) => table(args),
        Command::Oracle(args) => oracle_cmd(args),
        Command::Moduli(args) => moduli_cmd(args),
        Command::Verify(args) => verify(args),
    }
}

/// Surfaces the offending query parameters next to a budget refusal.
fn annotate_budget(e: Error, genus: u32, mu: &Partition, nu: &Partition) -> Error {
    if matches!(e, Error::BudgetExceeded { .. }) {
        eprintln!("refused query: genus={genus} mu={mu} nu={nu}");
    }
    e
}

fn budget_from(flag: Option<u64>) -> BigInt {
    let value = flag.or_else(|| {
        std::env::var("HURWITZ_BUDGET")
            .ok()
            .and_then(|s| s.parse::<u64>().ok())
    });
    BigInt::from(value.unwrap_or(oracle::DEFAULT_BUDGET))
}

/// One computed value with its query echo, route tag and timing.
struct OutputRecord {
    genus: u32,
    mu: String,
    nu: String,
    orbifold: String,
    spin: String,
    value: String,
    route: String,
    micros: u128,
}

impl OutputRecord {
    fn print(&self, format: Format) {
        match format {
            Format::Text => println!("{}", self.value),
            Format::Json => {
                let record = json!({
                    "query": {
                        "genus": self.genus,
                        "mu": self.mu,
                        "nu": self.nu,
                        "orbifold": self.orbifold,
                        "spin": self.spin,
                    },
                    "value": self.value,
                    "route": self.route,
                    "micros": self.micros as u64,
                });
                println!("{}", serde_json::to_string_pretty(&record).expect("serializes"));
            }
            Format::Csv => {
                println!("genus,mu,nu,orbifold,spin,value,route,micros");
                println!(
                    "{},\"{}\",\"{}\",{},{},{},{},{}",
                    self.genus,
                    self.mu,
                    self.nu,
                    self.orbifold,
                    self.spin,
                    self.value,
                    self.route,
                    self.micros
                );
            }
        }
    }
}

fn compute(args: ComputeArgs) -> Result<i32, Error> {
    let mu = Partition::from_str(&args.mu)?;
    let d = mu.size();
    let budget = budget_from(args.budget);
    let genus = args.genus;

    // resolve the query kind and the zero-profile
    enum Kind {
        Double(Partition),
        Spin(u32),
    }
    let kind = if let Some(r) = args.spin {
        if r == 0 {
            return Err(Error::InvalidArgument("spin order must be positive".into()));
        }
        Kind::Spin(r)
    } else if let Some(q) = args.orbifold {
        if q == 0 || !d.is_multiple_of(q as u64) {
            return Err(Error::NotADivisor { q, d });
        }
        Kind::Double(Partition::uniform(q, (d / q as u64) as usize))
    } else if let Some(nu) = &args.nu {
        let nu = Partition::from_str(nu)?;
        if nu.size() != d {
            return Err(Error::ProfileSizeMismatch { mu: d, nu: nu.size() });
        }
        Kind::Double(nu)
    } else if args.one_part {
        let d32 = u32::try_from(d)
            .map_err(|_| Error::InvalidArgument("profile size too large".into()))?;
        Kind::Double(Partition::single(d32))
    } else {
        return Err(Error::InvalidArgument(
            "choose one of --nu, --one-part, --orbifold or --spin".into(),
        ));
    };

    let started = Instant::now();
    let (value, route_tag) = match &kind {
        Kind::Spin(r) => {
            if matches!(args.route, Some(Route::Oracle) | Some(Route::Cutjoin)) {
                return Err(Error::InvalidArgument(
                    "spin numbers only have the series route".into(),
                ));
            }
            (spin_one_part(genus, &mu, *r), "series:spin-wedge".to_string())
        }
        Kind::Double(nu) => {
            let series_available = nu.len() == 1;
            let routes: Vec<Route> = if args.cross_check {
                let mut all = vec![Route::Cutjoin, Route::Oracle];
                if series_available {
                    all.insert(0, Route::Series);
                }
                all
            } else {
                vec![args.route.unwrap_or(if series_available {
                    Route::Series
                } else {
                    Route::Cutjoin
                })]
            };
            let mut results: Vec<(Route, Rational)> = Vec::new();
            for route in routes {
                let value = match route {
                    Route::Series => {
                        if !series_available {
                            return Err(Error::InvalidArgument(
                                "the series route needs a single-part zero-profile".into(),
                            ));
                        }
                        one_part(genus, &mu)
                    }
                    Route::Cutjoin => double_cutjoin(genus, &mu, nu, &budget)
                        .map_err(|e| annotate_budget(e, genus, &mu, nu))?,
                    Route::Oracle => {
                        let query = HurwitzQuery::new(genus, mu.clone(), nu.clone())?;
                        double_hurwitz(&query, &budget)
                            .map_err(|e| annotate_budget(e, genus, &mu, nu))?
                    }
                };
                results.push((route, value));
            }
            if args.cross_check {
                let (first_route, first) = &results[0];
                for (route, value) in &results[1..] {
                    if value != first {
                        eprintln!(
                            "cross-check disagreement at genus={genus} mu={mu} nu={nu}: {} gives {first} but {} gives {value}",
                            first_route.tag(),
                            route.tag(),
                        );
                        return Ok(1);
                    }
                }
                let tags: Vec<&str> = results.iter().map(|(r, _)| r.tag()).collect();
                (first.clone(), format!("cross-check({})", tags.join(",")))
            } else {
                let (route, value) = results.into_iter().next().expect("one route ran");
                (value, route.tag().to_string())
            }
        }
    };

    let record = OutputRecord {
        genus,
        mu: mu.to_string(),
        nu: match &kind {
            Kind::Double(nu) => nu.to_string(),
            Kind::Spin(_) => d.to_string(),
        },
        orbifold: args.orbifold.map(|q| q.to_string()).unwrap_or_default(),
        spin: args.spin.map(|r| r.to_string()).unwrap_or_default(),
        value: value.to_string(),
        route: route_tag,
        micros: started.elapsed().as_micros(),
    };
    record.print(args.format);
    Ok(0)
}

/// Renders the symbolic polynomial in the tabulated display style:
/// a d-power, one common denominator, and integer-weighted monomial sums.
fn render_table_text(genus: u32, n: usize, poly: &SymmetricPoly) -> String {
    let d_exp = 2 * genus as i64 - 2 + n as i64;
    let mut denominator = BigInt::from(1);
    for coeff in poly.terms().values() {
        let den = coeff.denom();
        let g = num_integer::Integer::gcd(&denominator, den);
        denominator = &denominator / g * den;
    }
    // terms ordered by weight descending, then reverse-lexicographically
    let mut keys: Vec<&Vec<u32>> = poly.terms().keys().collect();
    keys.sort_by(|a, b| {
        let wa: u32 = a.iter().sum();
        let wb: u32 = b.iter().sum();
        wb.cmp(&wa).then(b.cmp(a))
    });
    let index_names = ["i", "j", "k", "l", "m"];
    let mut body = String::new();
    for key in keys {
        let coeff = poly.coefficient(key) * Rational::from_int(denominator.clone());
        let numer = coeff.to_integer().expect("common denominator clears");
        let sign = if numer >= BigInt::from(0) { "+" } else { "-" };
        let magnitude = numer.magnitude().to_string();
        if !body.is_empty() {
            body.push_str(&format!(" {sign} "));
        } else if sign == "-" {
            body.push_str("- ");
        }
        if key.is_empty() {
            body.push_str(&magnitude);
            continue;
        }
        if magnitude != "1" {
            body.push_str(&format!("{magnitude} "));
        }
        body.push('\u{3a3}'); // capital sigma
        for (slot, &e) in key.iter().enumerate() {
            body.push_str(&format!(" \u{3bc}_{}^{}", index_names[slot % index_names.len()], e));
        }
    }
    let prefactor = if denominator == BigInt::from(1) {
        format!("d^{d_exp}")
    } else {
        format!("d^{d_exp}/{denominator}")
    };
    format!("h[g={genus},n={n}] = {prefactor} * ( {body} )")
}

fn table(args: TableArgs) -> Result<i32, Error> {
    if args.n == 0 {
        return Err(Error::InvalidArgument("need at least one part".into()));
    }
    let poly = one_part_polynomial(args.genus, args.n);
    match args.format {
        Format::Json => {
            let terms: Vec<_> = poly
                .terms()
                .iter()
                .map(|(key, coeff)| {
                    json!({
                        "mu_exponents": key,
                        "coefficient": coeff.to_string(),
                    })
                })
                .collect();
            let record = json!({
                "genus": args.genus,
                "n": args.n,
                "d_exponent": 2 * args.genus as i64 - 2 + args.n as i64,
                "terms": terms,
            });
            println!("{}", serde_json::to_string_pretty(&record).expect("serializes"));
        }
        _ => println!("{}", render_table_text(args.genus, args.n, &poly)),
    }
    Ok(0)
}

fn oracle_cmd(args: OracleArgs) -> Result<i32, Error> {
    let mu = Partition::from_str(&args.mu)?;
    let nu = Partition::from_str(&args.nu)?;
    let budget = budget_from(args.budget);
    let query = HurwitzQuery::new(args.genus, mu.clone(), nu.clone())?;
    let started = Instant::now();
    let raw = raw_count(&query, &budget).map_err(|e| annotate_budget(e, args.genus, &mu, &nu))?;
    let weighted = double_hurwitz(&query, &budget)?;
    match args.format {
        Format::Json => {
            let record = json!({
                "query": { "genus": args.genus, "mu": mu.to_string(), "nu": nu.to_string() },
                "raw_count": raw.to_string(),
                "value": weighted.to_string(),
                "route": "oracle:factorizations",
                "micros": started.elapsed().as_micros() as u64,
            });
            println!("{}", serde_json::to_string_pretty(&record).expect("serializes"));
        }
        _ => {
            println!("raw_count = {raw}");
            println!("value = {weighted}");
        }
    }
    Ok(0)
}

fn moduli_cmd(command: ModuliCommand) -> Result<i32, Error> {
    match command {
        ModuliCommand::Psi { genus, exp } => {
            let exponents = exp
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidArgument(format!("bad exponent {t:?}")))
                })
                .collect::<Result<Vec<u32>, Error>>()?;
            if exponents.is_empty() {
                return Err(Error::InvalidArgument("need at least one exponent".into()));
            }
            println!("{}", psi_dvv(genus, &exponents));
        }
        ModuliCommand::Hodge { genus, d } => {
            if d == 0 {
                return Err(Error::InvalidArgument("d must be positive".into()));
            }
            println!("{}", linear_hodge(genus, d));
        }
        ModuliCommand::ChiodoG1 { d } => {
            if d == 0 {
                return Err(Error::InvalidArgument("d must be positive".into()));
            }
            let parts = chiodo_g1_deg01_parts(d);
            println!("degree_zero = {}", parts.degree_zero);
            println!("kappa = {}", parts.kappa);
            println!("psi = {}", parts.psi);
            println!("separating = {}", parts.separating);
            println!("nonseparating = {}", parts.nonseparating);
            println!("total = {}", chiodo_g1_deg01(d));
        }
    }
    Ok(0)
}

fn verify(args: VerifyArgs) -> Result<i32, Error> {
    let budget = budget_from(args.budget);
    let report: VerificationReport = match args.suite {
        Suite::Comparison => {
            relations::verify_thm_comparison(args.gmax.unwrap_or(5), args.dmax.unwrap_or(8))
        }
        Suite::Exchange => {
            relations::verify_exchange(args.gmax.unwrap_or(2), args.dmax.unwrap_or(5), &budget)
        }
        Suite::Appendix => relations::verify_appendix(args.gmax.unwrap_or(5)),
        Suite::Chiodo => {
            relations::verify_prop_chiodo_series(args.gmax.unwrap_or(4), args.dmax.unwrap_or(8))
        }
        Suite::Spin => relations::verify_spin(
            args.gmax.unwrap_or(2),
            args.dmax.unwrap_or(4),
            args.rmax.unwrap_or(3),
            &budget,
        ),
        Suite::Section6 => relations::verify_section6(args.dmax.unwrap_or(12)),
    };
    let rendered = report.to_json();
    match &args.out {
        Some(path) => {
            let mut file = std::fs::File::create(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))?;
            file.write_all(rendered.as_bytes())
                .and_then(|()| file.write_all(b"\n"))
                .map_err(|e| Error::InvalidArgument(format!("cannot write {path}: {e}")))?;
        }
        None => println!("{rendered}"),
    }
    eprintln!(
        "suite={} passed={} failed={} skipped={} elapsed_micros={}",
        report.suite, report.passed, report.failed, report.skipped, report.elapsed_micros
    );
    Ok(if report.all_passed() { 0 } else { 1 })
}
