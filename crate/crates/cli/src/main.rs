use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use trikoszul::classify::{bass_series, canonical_betti_oracle, expand_series, run_pipeline, MAX_ORACLE_LEN};
use trikoszul::config::DEFAULT_TAYLOR_CAP;
use trikoszul::corpus::{parse_corpus, run_corpus, SHIPPED_CORPUS};
use trikoszul::families::{
    bclass_instance, family_bclass, family_staircase, family_tnongen, staircase_instance, tnongen_instance,
};
use trikoszul::generate::GeneratorConfig;
use trikoszul::homology::{format_table, truncated_exterior_check};
use trikoszul::ideal::DEFAULT_DIM_CAP;
use trikoszul::sweep::{run_sweep, SweepConfig};
use trikoszul::{
    classify, resolve, scarf_resolution, verify_resolution, Config, Field, FieldKind, Gf32003, InvariantReport,
    MonomialIdeal, Rational, Resolution,
};

/// Exit status for a report whose class could not be determined.
const EXIT_UNCLASSIFIED: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "trikoszul", version, about = "Koszul homology classes of trivariate monomial ideals")]
struct Cli {
    /// Coefficient field.
    #[arg(long, global = true, default_value = "qq", value_parser = parse_field)]
    field: FieldKind,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest admissible dim_k S/I.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_CAP)]
    dim_cap: usize,
    /// Largest n for the Taylor complex; generic ideals beyond it use the Scarf complex.
    #[arg(long, global = true, default_value_t = DEFAULT_TAYLOR_CAP)]
    taylor_cap: usize,
    /// Base seed for random generation.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock timings in JSON output.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute all invariants and the class of S/I.
    Classify {
        ideal: String,
        /// Cross-check (3,0,0) ideals against the third canonical Betti number.
        #[arg(long)]
        confirm: bool,
    },
    /// Print the minimal free resolution.
    Resolve {
        ideal: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Use the Scarf complex (generic ideals only).
        #[arg(long)]
        scarf: bool,
    },
    /// Koszul homology dimensions and products.
    Homology {
        ideal: String,
        /// Print the multiplication tables A1*A1 and A1*A2.
        #[arg(long)]
        show_tables: bool,
    },
    /// Bass numbers and the Bass series.
    Bass {
        ideal: String,
        /// Number of series coefficients to print.
        #[arg(long, default_value_t = 6)]
        terms: usize,
        /// Also compute this many Bass numbers directly (at most 4).
        #[arg(long)]
        oracle: Option<usize>,
    },
    /// Classify every entry of a corpus file and report mismatches.
    Corpus {
        /// Corpus file; the shipped corpus when omitted.
        path: Option<PathBuf>,
    },
    /// Classify seeded random ideals and record conjecture findings.
    Audit(AuditArgs),
    /// Build and classify a member of a parametrised family.
    Family {
        #[command(subcommand)]
        family: Family,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct AuditArgs {
    #[arg(long, default_value_t = 500)]
    count: usize,
    #[arg(long)]
    generic_only: bool,
    #[arg(long, default_value_t = 6)]
    max_exponent: u32,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Findings file (JSON); printed to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads; all cores when omitted.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Family {
    /// x^a, y^b, z^c, x^{a_1} z^{c'}, x^{a_i} y^{b_i} z^{c'}, y^{b_ρ} z^{c'}.
    Bclass {
        #[arg(long)]
        rho: Option<usize>,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        c_prime: Option<u32>,
        /// a_1,...,a_{ρ-1}
        #[arg(long, value_delimiter = ',')]
        xs: Vec<u32>,
        /// b_2,...,b_ρ
        #[arg(long, value_delimiter = ',')]
        ys: Vec<u32>,
    },
    /// x^a, y^b, z^c, x^{a_i} y^{b_i} z^{c'}.
    Tnongen {
        #[arg(long)]
        rho: Option<usize>,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        #[arg(long)]
        c_prime: Option<u32>,
        /// a_i:b_i pairs, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
        pairs: Vec<(u32, u32)>,
    },
    /// x^a, y^b, z^c, y^{b_i} z^{c_i}.
    Staircase {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        a: Option<u32>,
        #[arg(long)]
        b: Option<u32>,
        #[arg(long)]
        c: Option<u32>,
        /// b_i:c_i pairs, comma separated.
        #[arg(long, value_delimiter = ',', value_parser = parse_pair)]
        pairs: Vec<(u32, u32)>,
    },
}

fn parse_field(s: &str) -> std::result::Result<FieldKind, String> {
    s.parse()
}

fn parse_pair(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected u:v, found '{s}'"))?;
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("bad number '{t}'"));
    Ok((num(a)?, num(b)?))
}

impl Cli {
    fn config(&self, confirm: bool) -> Config {
        Config {
            field: self.field,
            dim_cap: self.dim_cap,
            taylor_cap: self.taylor_cap,
            confirm_with_beta2: confirm,
        }
    }
}

fn print_json(v: &Value) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(v)?);
    Ok(())
}

fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let ideal: MonomialIdeal = text.parse().with_context(|| format!("cannot parse ideal '{text}'"))?;
    ideal.require_artinian()?;
    Ok(ideal)
}

fn report_exit(cli: &Cli, report: &InvariantReport) -> Result<u8> {
    if cli.json {
        print_json(&report.to_json(cli.timings))?;
    } else {
        print!("{report}");
    }
    Ok(if report.cls.is_classified() { 0 } else { EXIT_UNCLASSIFIED })
}

fn cmd_classify(cli: &Cli, text: &str, confirm: bool) -> Result<u8> {
    let ideal = parse_ideal(text)?;
    let report = classify(&ideal, &cli.config(confirm))?;
    report_exit(cli, &report)
}

fn cmd_resolve<F: Field>(cli: &Cli, text: &str, format: Format, scarf: bool) -> Result<u8> {
    let ideal = parse_ideal(text)?;
    let res: Resolution<F> = if scarf { scarf_resolution(&ideal)? } else { resolve(&ideal, &cli.config(false))? };
    let check = verify_resolution(&res, &ideal);
    if cli.json || format == Format::Json {
        let mut v = res.to_json();
        v["ideal"] = json!(ideal.to_string());
        v["betti"] = json!(res.betti());
        v["verified"] = json!(check.all_pass());
        print_json(&v)?;
    } else {
        println!("ideal  {ideal}");
        print!("{res}");
        println!("{check}");
    }
    Ok(if check.all_pass() { 0 } else { 1 })
}

fn table_json<F: Field>(table: &[Vec<Vec<(usize, F)>>]) -> Value {
    let cells: Vec<Vec<Vec<(usize, String)>>> = table
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(|(i, c)| (*i, c.to_string())).collect()).collect())
        .collect();
    json!(cells)
}

fn cmd_homology<F: Field>(cli: &Cli, text: &str, show_tables: bool) -> Result<u8> {
    let ideal = parse_ideal(text)?;
    let pipe = run_pipeline::<F>(&ideal, &cli.config(false))?;
    let alg = &pipe.algebra;
    let r = &pipe.report;
    let truncated = if r.p == 3 { Some(truncated_exterior_check(&pipe.model, alg)?) } else { None };
    if cli.json {
        let mut v = json!({
            "ideal": ideal.to_string(),
            "dims": alg.dims(),
            "p": alg.rank_a1_squared(),
            "q": alg.rank_a1_a2(),
            "r": alg.rank_delta2(),
            "truncated_exterior": truncated,
            "class": r.cls.to_json(),
        });
        if show_tables {
            v["a1_a1"] = table_json(&alg.mult_11);
            v["a1_a2"] = table_json(&alg.mult_12);
        }
        print_json(&v)?;
    } else {
        let (d1, d2, d3) = alg.dims();
        println!("ideal    {ideal}");
        println!("dim A    1, {d1}, {d2}, {d3}");
        println!("p, q, r  {}, {}, {}", alg.rank_a1_squared(), alg.rank_a1_a2(), alg.rank_delta2());
        if let Some(t) = truncated {
            println!("truncated exterior  {t}");
        }
        println!("class    {}", r.cls);
        if show_tables {
            println!("\nA1 * A1 -> A2 (basis u, target v)");
            print!("{}", format_table(&alg.mult_11, "u", "u", "v"));
            println!("\nA1 * A2 -> A3 (basis u, v, target w)");
            print!("{}", format_table(&alg.mult_12, "u", "v", "w"));
        }
    }
    Ok(if r.cls.is_classified() { 0 } else { EXIT_UNCLASSIFIED })
}

fn cmd_bass(cli: &Cli, text: &str, terms: usize, oracle: Option<usize>) -> Result<u8> {
    let ideal = parse_ideal(text)?;
    let cfg = cli.config(false);
    let report = classify(&ideal, &cfg)?;
    let series = bass_series(&report.cls, report.n, report.m).ok();
    let coeffs = series.as_ref().map(|s| expand_series(s, terms.saturating_sub(1)));
    let direct = match oracle {
        Some(len) if len > MAX_ORACLE_LEN => bail!("--oracle is limited to {MAX_ORACLE_LEN} terms"),
        Some(len) => Some(canonical_betti_oracle(&ideal, len.saturating_sub(1), &cfg)?),
        None => None,
    };
    if cli.json {
        print_json(&json!({
            "ideal": ideal.to_string(),
            "class": report.cls.to_json(),
            "mu0": report.mu0,
            "mu1": report.mu1,
            "series": series.as_ref().map(|s| json!({ "num": s.num, "den": s.den })),
            "coefficients": coeffs,
            "oracle": direct,
        }))?;
    } else {
        println!("ideal   {ideal}");
        println!("class   {}", report.cls);
        println!("mu0     {}", report.mu0);
        println!("mu1     {}", report.mu1);
        match (&series, &coeffs) {
            (Some(s), Some(c)) => {
                println!("series  {s}");
                let c: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                println!("coeffs  {}", c.join(", "));
            }
            _ => println!("series  unavailable"),
        }
        if let Some(d) = &direct {
            let d: Vec<String> = d.iter().map(|x| x.to_string()).collect();
            println!("oracle  {}", d.join(", "));
        }
    }
    Ok(if report.cls.is_classified() { 0 } else { EXIT_UNCLASSIFIED })
}

fn cmd_corpus(cli: &Cli, path: Option<&PathBuf>) -> Result<u8> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?,
        None => SHIPPED_CORPUS.to_string(),
    };
    let entries = parse_corpus(&text)?;
    let summary = run_corpus(&entries, &cli.config(true));
    if cli.json {
        print_json(&serde_json::to_value(&summary)?)?;
    } else {
        for m in &summary.mismatches {
            println!("MISMATCH {} (line {}): expected {}, got {}", m.name, m.line, m.expected, m.got);
        }
        println!("{} entries, {} matched, {} mismatched", summary.entries, summary.matched, summary.mismatches.len());
    }
    Ok(if summary.all_match() { 0 } else { 1 })
}

fn cmd_audit(cli: &Cli, args: &AuditArgs) -> Result<u8> {
    let generator = GeneratorConfig {
        seed: cli.seed,
        max_exponent: args.max_exponent,
        n_min: args.n_min,
        n_max: args.n_max,
        generic_only: args.generic_only,
    };
    generator.validate()?;
    let cfg = SweepConfig { seed: cli.seed, count: args.count, generator, dim_cap: cli.dim_cap };
    let outcome = match args.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new().num_threads(j).build()?.install(|| run_sweep(&cfg)),
        None => run_sweep(&cfg),
    };
    let text = serde_json::to_string_pretty(&outcome.to_json())?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).with_context(|| format!("cannot write {}", path.display()))?;
            if !cli.json {
                for (label, count) in &outcome.class_counts {
                    println!("{label:<10} {count}");
                }
                println!("{} findings written to {}", outcome.findings.len(), path.display());
            }
        }
        None => println!("{text}"),
    }
    Ok(0)
}

fn family_ideal(family: &Family) -> Result<MonomialIdeal> {
    let need = |v: Option<u32>, name: &str| v.with_context(|| format!("--{name} is required without --rho/--n"));
    let ideal = match family {
        Family::Bclass { rho: Some(rho), .. } => bclass_instance(*rho)?,
        Family::Bclass { a, b, c, c_prime, xs, ys, .. } => {
            family_bclass(need(*a, "a")?, need(*b, "b")?, need(*c, "c")?, need(*c_prime, "c-prime")?, xs, ys)?
        }
        Family::Tnongen { rho: Some(rho), .. } => tnongen_instance(*rho)?,
        Family::Tnongen { a, b, c, c_prime, pairs, .. } => {
            family_tnongen(need(*a, "a")?, need(*b, "b")?, need(*c, "c")?, need(*c_prime, "c-prime")?, pairs)?
        }
        Family::Staircase { n: Some(n), .. } => staircase_instance(*n)?,
        Family::Staircase { a, b, c, pairs, .. } => family_staircase(need(*a, "a")?, need(*b, "b")?, need(*c, "c")?, pairs)?,
    };
    Ok(ideal)
}

fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Classify { ideal, confirm } => cmd_classify(cli, ideal, *confirm),
        Command::Resolve { ideal, format, scarf } => match cli.field {
            FieldKind::Qq => cmd_resolve::<Rational>(cli, ideal, *format, *scarf),
            FieldKind::Gf32003 => cmd_resolve::<Gf32003>(cli, ideal, *format, *scarf),
        },
        Command::Homology { ideal, show_tables } => match cli.field {
            FieldKind::Qq => cmd_homology::<Rational>(cli, ideal, *show_tables),
            FieldKind::Gf32003 => cmd_homology::<Gf32003>(cli, ideal, *show_tables),
        },
        Command::Bass { ideal, terms, oracle } => cmd_bass(cli, ideal, *terms, *oracle),
        Command::Corpus { path } => cmd_corpus(cli, path.as_ref()),
        Command::Audit(args) => cmd_audit(cli, args),
        Command::Family { family } => {
            let ideal = family_ideal(family)?;
            let report = classify(&ideal, &cli.config(false))?;
            report_exit(cli, &report)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
