//! Command-line surface over the symgb library.
//!
//! Exit codes: 0 success (and membership true), 1 membership false,
//! 2 parse or validation error, 3 stabilization not reached by the order
//! cap, 4 oracle cross-check discrepancy.

use clap::{Args, Parser, Subcommand};
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use symgb::scalar::{is_prime, FieldKind};
use symgb::text::{format_polynomial, parse_corpus, parse_monomial, parse_polynomial};
use symgb::{
    brute_force_sym_compare, certificate_check, classical_gb, classical_membership, is_member,
    monomial_orbit_gb, reduce_full, sym_compare, symmetric_gb, BasisSet, Certificate, Error,
    GbConfig, Monomial, Polynomial, TruncatedIdeal,
};

#[derive(Parser)]
#[command(
    name = "symgb",
    version,
    about = "Symmetric Groebner bases for permutation-stable polynomial ideals",
    after_help = "Polynomials use variables x1, x2, ... with `^` for powers and `*` between \
                  factors, e.g. \"x1^3*x3 + 1/2*x2\".  Variables are ordered by index, highest \
                  index most significant.  Exit codes: 0 success or membership true, 1 \
                  membership false, 2 parse/validation error, 3 order cap exceeded, 4 oracle \
                  discrepancy."
)]
struct Cli {
    /// Coefficient field: `q` for rationals, `fp:P` for integers mod a prime P.
    #[arg(long, global = true, default_value = "q", value_parser = parse_field)]
    field: FieldKind,

    /// Cross-check the result against the classical Buchberger oracle.
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct EngineOpts {
    /// First truncation order to try (default: highest index in the input,
    /// at least 2).
    #[arg(long, value_name = "N")]
    order_start: Option<u32>,

    /// Give up if stabilization has not occurred by this order.
    #[arg(long, value_name = "M", default_value_t = 20)]
    max_order: u32,

    /// Extra consecutive stable orders demanded beyond the first.
    #[arg(long, value_name = "K", default_value_t = 0)]
    confirm: u32,

    /// Process S-pairs with coprime leading monomials instead of skipping them.
    #[arg(long)]
    no_pair_pruning: bool,
}

impl EngineOpts {
    fn config(&self, field: FieldKind) -> GbConfig {
        let mut cfg = GbConfig::new(field);
        cfg.start_order = self.order_start;
        cfg.max_order = self.max_order;
        cfg.confirm_iterations = self.confirm;
        cfg.pair_pruning = !self.no_pair_pruning;
        cfg
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute a symmetric Groebner basis of the invariant ideal the
    /// generators span.
    Gb {
        /// Generator expressions.
        #[arg(value_name = "POLY")]
        generators: Vec<String>,

        /// Read generators from a file, one polynomial per line.
        #[arg(short, long, value_name = "PATH")]
        file: Option<PathBuf>,

        #[command(flatten)]
        engine: EngineOpts,
    },

    /// Reduce a polynomial against reducers and all their shifted images.
    Reduce {
        /// The polynomial to reduce.
        #[arg(value_name = "POLY")]
        query: String,

        /// Reducer expressions.
        #[arg(value_name = "POLY")]
        reducers: Vec<String>,

        /// Read reducers from a file, one polynomial per line.
        #[arg(short, long, value_name = "PATH")]
        file: Option<PathBuf>,
    },

    /// Decide membership of a polynomial in the invariant ideal.
    Member {
        /// The polynomial to test.
        #[arg(value_name = "POLY")]
        query: String,

        /// Generator expressions; a symmetric Groebner basis is computed
        /// first.
        #[arg(value_name = "POLY")]
        generators: Vec<String>,

        /// Read generators from a file, one polynomial per line.
        #[arg(short, long, value_name = "PATH")]
        file: Option<PathBuf>,

        /// Use a basis file written by `gb` directly, skipping the
        /// completion run.
        #[arg(long, value_name = "PATH", conflicts_with_all = ["generators", "file"])]
        basis: Option<PathBuf>,

        #[command(flatten)]
        engine: EngineOpts,
    },

    /// Test two monomials under the symmetric cancellation order.
    Compare {
        /// Candidate smaller monomial.
        #[arg(value_name = "MONOMIAL")]
        v: String,

        /// Candidate larger monomial.
        #[arg(value_name = "MONOMIAL")]
        w: String,
    },

    /// Symmetric Groebner basis of the orbit ideal of monomials.
    OrbitGb {
        /// Monomial expressions.
        #[arg(value_name = "MONOMIAL")]
        monomials: Vec<String>,

        /// Read monomials from a file, one per line.
        #[arg(short, long, value_name = "PATH")]
        file: Option<PathBuf>,

        /// Print the full orbit basis instead of the minimized one.
        #[arg(long)]
        full: bool,

        #[command(flatten)]
        engine: EngineOpts,
    },
}

fn parse_field(text: &str) -> Result<FieldKind, String> {
    if text == "q" {
        return Ok(FieldKind::Rational);
    }
    if let Some(rest) = text.strip_prefix("fp:") {
        let p: u64 = rest
            .parse()
            .map_err(|_| format!("`{rest}` is not a modulus"))?;
        if !is_prime(p) {
            return Err(format!("{p} is not prime"));
        }
        return Ok(FieldKind::Mod(p));
    }
    Err(format!("`{text}` is not `q` or `fp:P`"))
}

/// Failure mode carrying the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Failure {
        Failure {
            code: 2,
            message: message.into(),
        }
    }

    fn oracle(message: impl Into<String>) -> Failure {
        Failure {
            code: 4,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Failure {
        let code = match err {
            Error::MaxOrderExceeded(_) => 3,
            _ => 2,
        };
        Failure {
            code,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let field = cli.field;
    let oracle = cli.oracle;
    match cli.command {
        Command::Gb {
            generators,
            file,
            engine,
        } => run_gb(&gather(&generators, file.as_deref(), field)?, field, oracle, &engine),
        Command::Reduce {
            query,
            reducers,
            file,
        } => {
            let query = parse_inline(&query, field)?;
            let reducers = gather(&reducers, file.as_deref(), field)?;
            run_reduce(&query, &reducers)
        }
        Command::Member {
            query,
            generators,
            file,
            basis,
            engine,
        } => {
            let query = parse_inline(&query, field)?;
            run_member(
                &query,
                &gather(&generators, file.as_deref(), field)?,
                basis.as_deref(),
                field,
                oracle,
                &engine,
            )
        }
        Command::Compare { v, w } => {
            let v = parse_inline_monomial(&v, field)?;
            let w = parse_inline_monomial(&w, field)?;
            run_compare(&v, &w, oracle)
        }
        Command::OrbitGb {
            monomials,
            file,
            full,
            engine,
        } => {
            let mut parsed: Vec<Monomial> = Vec::new();
            for text in &monomials {
                parsed.push(parse_inline_monomial(text, field)?);
            }
            if let Some(path) = file.as_deref() {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
                for line in text.lines() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    parsed.push(parse_inline_monomial(line, field)?);
                }
            }
            run_orbit_gb(&parsed, field, full, oracle, &engine)
        }
    }
}

fn parse_inline(text: &str, field: FieldKind) -> Result<Polynomial, Failure> {
    parse_polynomial(text, field)
        .map_err(|e| Failure::validation(format!("in `{text}`: {e}")))
}

fn parse_inline_monomial(text: &str, field: FieldKind) -> Result<Monomial, Failure> {
    parse_monomial(text, field)
        .map_err(|e| Failure::validation(format!("in `{text}`: {e}")))
}

fn read_corpus_file(
    path: Option<&Path>,
    field: FieldKind,
) -> Result<Vec<Polynomial>, Failure> {
    let Some(path) = path else {
        return Ok(Vec::new());
    };
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    parse_corpus(&text, field)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))
}

/// Inline expressions followed by the contents of an optional corpus file.
fn gather(
    inline: &[String],
    file: Option<&Path>,
    field: FieldKind,
) -> Result<Vec<Polynomial>, Failure> {
    let mut out: Vec<Polynomial> = Vec::new();
    for text in inline {
        out.push(parse_inline(text, field)?);
    }
    out.extend(read_corpus_file(file, field)?);
    Ok(out)
}

fn run_gb(
    generators: &[Polynomial],
    field: FieldKind,
    oracle: bool,
    engine: &EngineOpts,
) -> Result<u8, Failure> {
    let cfg = engine.config(field);
    let report = match symmetric_gb(generators, &cfg) {
        Ok(report) => report,
        Err(Error::MaxOrderExceeded(report)) => {
            // The partial basis is still the useful artifact; print it
            // before failing.
            print!("{report}");
            return Err(Failure {
                code: 3,
                message: format!("no stabilization by order {}", cfg.max_order),
            });
        }
        Err(e) => return Err(e.into()),
    };
    if oracle {
        check_gb_against_oracle(generators, &report.basis)?;
    }
    print!("{report}");
    Ok(0)
}

/// Ideal equality at the stabilization order: the engine's basis and the
/// classical basis of the symmetrized truncated ideal must reduce each
/// other to zero.
fn check_gb_against_oracle(
    generators: &[Polynomial],
    basis: &BasisSet,
) -> Result<u8, Failure> {
    let order = basis.order_used;
    let ideal = TruncatedIdeal::symmetrized(generators, order).map_err(Failure::from)?;
    let classical = classical_gb(&ideal).map_err(Failure::from)?;
    for g in &basis.elements {
        if !classical_membership(g, &ideal).map_err(Failure::from)? {
            dump_oracle_disagreement(g, &basis.elements, &classical.elements);
            return Err(Failure::oracle(format!(
                "basis element {} is not in the truncated ideal",
                format_polynomial(g)
            )));
        }
    }
    for g in &classical.elements {
        let cert = reduce_full(g, &basis.elements).map_err(Failure::from)?;
        if !cert.remainder.is_zero() {
            dump_oracle_disagreement(g, &basis.elements, &classical.elements);
            return Err(Failure::oracle(format!(
                "classical element {} does not reduce to zero",
                format_polynomial(g)
            )));
        }
    }
    Ok(0)
}

fn dump_oracle_disagreement(
    offender: &Polynomial,
    ours: &[Polynomial],
    theirs: &[Polynomial],
) {
    eprintln!("# oracle disagreement on: {}", format_polynomial(offender));
    eprintln!("# engine basis:");
    for g in ours {
        eprintln!("#   {}", format_polynomial(g));
    }
    eprintln!("# classical basis:");
    for g in theirs {
        eprintln!("#   {}", format_polynomial(g));
    }
}

fn run_reduce(query: &Polynomial, reducers: &[Polynomial]) -> Result<u8, Failure> {
    let cert = reduce_full(query, reducers).map_err(Failure::from)?;
    if !certificate_check(query, &cert) {
        return Err(Failure {
            code: 2,
            message: "internal: reduction certificate failed to replay".into(),
        });
    }
    println!("{}", format_polynomial(&cert.remainder));
    print_certificate_summary(&cert);
    Ok(0)
}

fn print_certificate_summary(cert: &Certificate) {
    println!("# summands: {}", cert.summands.len());
    for (k, s) in cert.summands.iter().enumerate() {
        println!(
            "# summand {}: sigma {}, multiplier {}, generator {}",
            k + 1,
            s.permutation,
            format_polynomial(&s.multiplier),
            format_polynomial(&s.generator)
        );
    }
}

fn run_member(
    query: &Polynomial,
    generators: &[Polynomial],
    basis_file: Option<&Path>,
    field: FieldKind,
    oracle: bool,
    engine: &EngineOpts,
) -> Result<u8, Failure> {
    let basis = match basis_file {
        Some(path) => load_basis_file(path, field)?,
        None => {
            let cfg = engine.config(field);
            symmetric_gb(generators, &cfg).map_err(Failure::from)?.basis
        }
    };
    let (member, cert) = is_member(query, &basis).map_err(Failure::from)?;
    if oracle && basis_file.is_none() {
        let order = basis.order_used.max(query.max_index()).max(1);
        let ideal = TruncatedIdeal::symmetrized(generators, order).map_err(Failure::from)?;
        let classical = classical_membership(query, &ideal).map_err(Failure::from)?;
        if classical != member {
            dump_oracle_disagreement(query, &basis.elements, &ideal.generators);
            return Err(Failure::oracle(format!(
                "membership disagreement: engine {member}, classical {classical}"
            )));
        }
    }
    println!("{member}");
    println!("# order-used: {}", basis.order_used);
    println!("# remainder: {}", format_polynomial(&cert.remainder));
    print_certificate_summary(&cert);
    Ok(if member { 0 } else { 1 })
}

/// Reads a file written by `gb` back into a Groebner basis.  The comment
/// header is honored: a `# groebner: false` marker makes the file unusable
/// for membership testing.
fn load_basis_file(path: &Path, field: FieldKind) -> Result<BasisSet, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    for line in text.lines() {
        if line.trim() == "# groebner: false" {
            return Err(Failure::validation(format!(
                "{}: marked `groebner: false`, not usable as a basis",
                path.display()
            )));
        }
    }
    let elements = parse_corpus(&text, field)
        .map_err(|e| Failure::validation(format!("{}: {e}", path.display())))?;
    let order = elements.iter().map(|f| f.max_index()).max().unwrap_or(1);
    let mut basis = BasisSet::new(elements, order).map_err(Failure::from)?;
    basis.groebner = true;
    Ok(basis)
}

fn run_compare(v: &Monomial, w: &Monomial, oracle: bool) -> Result<u8, Failure> {
    let verdict = sym_compare(v, w);
    if oracle {
        let slow = brute_force_sym_compare(v, w).map_err(Failure::from)?;
        if slow != verdict.is_some() {
            return Err(Failure::oracle(format!(
                "comparator disagreement on {v} vs {w}: greedy {}, exhaustive {slow}",
                verdict.is_some()
            )));
        }
    }
    match verdict {
        Some(witness) => {
            let span = witness
                .sigma
                .max_moved()
                .max(v.max_index())
                .max(w.max_index())
                .max(1);
            println!("witness: {}", witness.sigma);
            println!("one-line: {}", witness.sigma.one_line(span));
        }
        None => println!("incomparable"),
    }
    Ok(0)
}

fn run_orbit_gb(
    monomials: &[Monomial],
    field: FieldKind,
    full: bool,
    oracle: bool,
    engine: &EngineOpts,
) -> Result<u8, Failure> {
    let (full_basis, minimal) = monomial_orbit_gb(monomials, field).map_err(Failure::from)?;
    if oracle {
        let cfg = engine.config(field);
        let report = symmetric_gb(&full_basis.elements, &cfg).map_err(Failure::from)?;
        for g in &report.basis.elements {
            let cert = reduce_full(g, &minimal.elements).map_err(Failure::from)?;
            if !cert.remainder.is_zero() {
                dump_oracle_disagreement(g, &minimal.elements, &report.basis.elements);
                return Err(Failure::oracle(format!(
                    "engine basis element {} escapes the closed-form basis",
                    format_polynomial(g)
                )));
            }
        }
        for g in &minimal.elements {
            let cert = reduce_full(g, &report.basis.elements).map_err(Failure::from)?;
            if !cert.remainder.is_zero() {
                dump_oracle_disagreement(g, &minimal.elements, &report.basis.elements);
                return Err(Failure::oracle(format!(
                    "closed-form element {} escapes the engine basis",
                    format_polynomial(g)
                )));
            }
        }
    }
    let shown = if full { &full_basis } else { &minimal };
    println!("# minimality: {}", shown.minimality);
    println!("# full-size: {}", full_basis.elements.len());
    println!("# basis-size: {}", shown.elements.len());
    for g in &shown.elements {
        println!("{}", format_polynomial(g));
    }
    Ok(0)
}
