use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use pcfgram::perm::{
    enumerate_poly, specialized_poly, triangle, write_triangle_csv, EnumConfig, Family, Target,
};
use pcfgram::verify::{
    cache_dir, load_local, load_reference, oeis_compare, parse_bfile, run_all, CheckSpec, Mode,
    Report, RunDocument, Sequence, REGISTRY,
};
use pcfgram::{Error, Grammar};

#[derive(Parser)]
#[command(
    name = "pcfgram",
    version,
    about = "Grammar calculus for permutation statistics"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print D^n(seed) for a grammar.
    Derive {
        /// Built-in name (G, g1, g2, g3) or path to a grammar file.
        #[arg(long, default_value = "G")]
        grammar: String,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        n: usize,
        /// Print every D^k(seed) for k = 0..=n.
        #[arg(long)]
        all: bool,
    },
    /// Brute-force a statistic polynomial, or export a triangle.
    Enumerate {
        /// P, Q, W, or a family such as T, L, U, F, TA, Tbar, Ttilde, GesselT, Eulerian.
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: usize,
        /// Write rows 0..=n of a one-variable family as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write rows 0..=n flattened into a one-line sequence file.
        #[arg(long)]
        seq: Option<PathBuf>,
        /// Raise the enumeration cap (at most 11).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run one check, or all of them.
    Verify(VerifyArgs),
    /// List the registered checks.
    List,
    /// Compare a local sequence or triangle against a reference.
    Oeis {
        /// Sequence file or triangle CSV.
        #[arg(long)]
        local: PathBuf,
        /// Path to a sequence file or b-file, or an id looked up in the cache.
        #[arg(long = "ref")]
        reference: String,
        /// Download the b-file when the id is not cached.
        #[arg(long)]
        fetch: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id, or `all`.
    id: String,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    order: Option<usize>,
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    cap: Option<usize>,
    /// exact-symbolic, exact-sampled or numeric; must match the registry.
    #[arg(long)]
    mode: Option<String>,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// Failures that map to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

impl From<io::Error> for Usage {
    fn from(e: io::Error) -> Self {
        Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Derive {
            grammar,
            seed,
            n,
            all,
        } => derive(&grammar, &seed, n, all),
        Command::Enumerate {
            family,
            n,
            csv,
            seq,
            cap,
        } => enumerate(&family, n, csv, seq, cap),
        Command::Verify(args) => verify(args),
        Command::List => {
            for e in REGISTRY {
                println!("{:18} {:15} {}", e.id, e.mode.name(), e.title);
            }
            Ok(true)
        }
        Command::Oeis {
            local,
            reference,
            fetch,
        } => oeis(&local, &reference, fetch),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn derive(grammar: &str, seed: &str, n: usize, all: bool) -> Result<bool, Usage> {
    let g = Grammar::load(grammar)?;
    let seed_poly = g.parse_poly(seed)?;
    let start = Instant::now();
    let coeffs = g.gen_coeffs(&seed_poly, n)?;
    let from = if all { 0 } else { n };
    for (k, p) in coeffs.iter().enumerate().skip(from) {
        println!("D^{k}({seed}) = {p}");
    }
    eprintln!("derived in {:.3}s", start.elapsed().as_secs_f64());
    Ok(true)
}

fn enumerate(
    family: &str,
    n: usize,
    csv: Option<PathBuf>,
    seq: Option<PathBuf>,
    cap: Option<usize>,
) -> Result<bool, Usage> {
    let cfg = match cap {
        Some(c) => EnumConfig::large(c)?,
        None => EnumConfig::default(),
    };
    let start = Instant::now();
    if let Ok(target) = family.parse::<Target>() {
        if csv.is_some() || seq.is_some() {
            return Err(Usage(format!(
                "{family} has several variables; triangles need a one-variable family"
            )));
        }
        println!("{}", enumerate_poly(n, target, &cfg)?);
    } else {
        let fam: Family = family.parse()?;
        if csv.is_none() && seq.is_none() {
            println!("{}", specialized_poly(n, fam, &cfg)?);
        } else {
            let rows = triangle(fam, n, &cfg)?;
            if let Some(path) = csv {
                write_triangle_csv(&rows, 0, BufWriter::new(File::create(path)?))?;
            }
            if let Some(path) = seq {
                let body: Vec<String> = rows.iter().flatten().map(u64::to_string).collect();
                let mut out = BufWriter::new(File::create(path)?);
                writeln!(out, "# {fam} rows 0..={n}")?;
                writeln!(out, "{fam}: {}", body.join(" "))?;
            }
        }
    }
    eprintln!("enumerated in {:.3}s", start.elapsed().as_secs_f64());
    Ok(true)
}

fn verify(args: VerifyArgs) -> Result<bool, Usage> {
    let ids: Vec<&str> = if args.id == "all" {
        REGISTRY.iter().map(|e| e.id).collect()
    } else {
        vec![args.id.as_str()]
    };
    let mode: Option<Mode> = args.mode.as_deref().map(str::parse).transpose()?;
    let mut specs = Vec::new();
    for id in ids {
        let mut s = CheckSpec::for_id(id)?;
        if let Some(v) = args.n_max {
            s.n_max = v;
        }
        if let Some(v) = args.order {
            s.order = v;
        }
        if let Some(v) = args.tol {
            s.tol = v;
        }
        if let Some(v) = args.samples {
            s.samples = v;
        }
        if let Some(v) = args.seed {
            s.seed = v;
        }
        if let Some(v) = args.cap {
            s.cap = v;
        }
        if let Some(m) = mode {
            s.mode = m;
        }
        specs.push(s);
    }
    let start = Instant::now();
    let results = run_all(&specs, args.jobs)?;
    eprintln!(
        "ran {} checks in {:.2}s",
        specs.len(),
        start.elapsed().as_secs_f64()
    );
    let mut usage_errors = Vec::new();
    let doc = RunDocument::new(&specs, results);
    for r in &doc.reports {
        print_report(r);
    }
    for e in &doc.errors {
        println!("ERROR {} {}", e.id, e.error);
        usage_errors.push(format!("{}: {}", e.id, e.error));
    }
    if let Some(path) = args.json {
        std::fs::write(path, doc.to_json() + "\n")?;
    }
    if !usage_errors.is_empty() {
        return Err(Usage(usage_errors.join("; ")));
    }
    Ok(doc.passed)
}

fn print_report(r: &Report) {
    println!("{} {} {}", r.verdict(), r.id, r.summary);
    if let Some(c) = &r.counterexample {
        println!(
            "  first counterexample at {}: expected {}, got {}",
            c.at, c.expected, c.actual
        );
    }
}

fn oeis(local: &std::path::Path, reference: &str, fetch: bool) -> Result<bool, Usage> {
    let local = load_local(local)?;
    let reference = match load_reference(reference) {
        Ok(s) => s,
        Err(e) if fetch && is_oeis_id(reference) => {
            eprintln!("{e}; fetching");
            fetch_bfile(reference)?
        }
        Err(e) => return Err(e.into()),
    };
    let report = oeis_compare(&local, &reference);
    print_report(&report);
    for r in &report.residuals {
        println!("  {}: {}", r.at, r.value);
    }
    Ok(report.passed)
}

fn is_oeis_id(s: &str) -> bool {
    s.len() == 7 && s.starts_with('A') && s[1..].chars().all(|c| c.is_ascii_digit())
}

/// Downloads `b######.txt` and stores it in the cache as a sequence file.
fn fetch_bfile(id: &str) -> Result<Sequence, Usage> {
    let url = format!("https://oeis.org/{id}/b{}.txt", &id[1..]);
    let text = ureq::get(&url)
        .call()
        .and_then(|mut r| r.body_mut().read_to_string())
        .map_err(|e| Usage(format!("fetching {url}: {e}")))?;
    let values = parse_bfile(&text, &url)?;
    let body: Vec<String> = values.iter().map(ToString::to_string).collect();
    let dir = cache_dir();
    std::fs::create_dir_all(&dir)?;
    std::fs::write(
        dir.join(format!("{id}.seq")),
        format!("# fetched from {url}\n{id}: {}\n", body.join(" ")),
    )?;
    Ok(Sequence {
        id: id.to_string(),
        values,
    })
}
