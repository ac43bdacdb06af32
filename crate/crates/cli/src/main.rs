use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ramcert::certify::{self, Certificate, TableId};
use ramcert::constructions::FamilySpec;
use ramcert::generators::gnp;
use ramcert::pattern::patterns_up_to;
use ramcert::witnesses::{self, SearchConfig};
use ramcert::{detect, graph6, oracle, Graph, PatternSpec, TwoColoring};

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(name = "ramcert", version)]
#[command(about = "Build, verify and certify explicit Ramsey lower-bound colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family's extremal coloring and write it as .rbc
    Construct {
        /// Family spec, e.g. fan:7,6 | wheel-even:8 | kipas-1mod4:5,B | w5w7
        family: String,
        /// Output file (stdout when omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a .rbc coloring for a red and a blue target; exit 0 iff neither occurs
    Verify {
        input: PathBuf,
        #[arg(long)]
        red: PatternSpec,
        #[arg(long)]
        blue: PatternSpec,
        /// Certificate path (default: <input>.cert.json)
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Lexicographic blow-up of a graph by a factor graph
    Blowup {
        /// Base graph as a graph6 file
        base: Option<PathBuf>,
        /// Base graph from the witness registry (e.g. k3k5)
        #[arg(long, conflicts_with_all = ["base", "witness_file"])]
        witness: Option<String>,
        /// Base graph from a graph6 file, overriding the registry
        #[arg(long, conflicts_with = "base")]
        witness_file: Option<PathBuf>,
        /// `complete:<k>` or a graph6 file
        #[arg(long, default_value = "complete:2")]
        factor: String,
        /// Write a .rbc coloring whose red graph is the blow-up
        #[arg(long)]
        as_red: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Derive the wheel-versus-clique rows and diff them against the stored rows
    Table {
        #[arg(value_enum, default_value_t = Which::All)]
        which: Which,
    },
    /// Seeded tabu search for a graph avoiding a pattern whose complement avoids another
    Search {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        avoid: PatternSpec,
        #[arg(long = "avoid-c")]
        avoid_c: PatternSpec,
        /// Maximum number of single-edge flips
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// graph6 output (stdout when omitted); the certificate goes next to it
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the fast detectors against brute force
    OracleCheck {
        /// graph6 file(s) to check; random graphs when omitted
        graphs: Vec<PathBuf>,
        /// Restrict to one pattern (default: every pattern that fits)
        #[arg(long)]
        pattern: Option<PatternSpec>,
        /// Number of random graphs
        #[arg(long, default_value_t = 100)]
        random: u64,
        /// Maximum order of random graphs
        #[arg(long, default_value_t = 9)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    W5w6,
    W7,
    All,
}

/// Anything that should end the run with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type Outcome = Result<u8, InputError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Construct { family, output } => construct(&family, output.as_deref()),
        Command::Verify {
            input,
            red,
            blue,
            cert,
        } => verify(&input, red, blue, cert),
        Command::Blowup {
            base,
            witness,
            witness_file,
            factor,
            as_red,
            output,
        } => blowup(
            base,
            witness,
            witness_file,
            &factor,
            as_red,
            output.as_deref(),
        ),
        Command::Table { which } => table(which),
        Command::Search {
            order,
            avoid,
            avoid_c,
            budget,
            seed,
            output,
        } => search(order, avoid, avoid_c, budget, seed, output.as_deref()),
        Command::OracleCheck {
            graphs,
            pattern,
            random,
            max_order,
            seed,
        } => oracle_check(&graphs, pattern, random, max_order, seed),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn write_output(path: Option<&Path>, bytes: &[u8]) -> Result<(), InputError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => Ok(io::stdout().write_all(bytes)?),
    }
}

fn read_text(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn construct(family: &str, output: Option<&Path>) -> Outcome {
    let spec: FamilySpec = family.parse()?;
    let built = spec.build()?;
    let c = &built.construction;
    let mut comments = vec![
        format!("family: {}", c.spec),
        format!("targets: red {} blue {}", c.red_target, c.blue_target),
        format!("claimed_bound: {}", c.claimed_bound),
    ];
    comments.extend(
        c.blocks
            .iter()
            .filter(|b| b.len > 0)
            .map(|b| format!("block {}: {}..{}", b.name, b.start, b.start + b.len)),
    );
    comments.extend(c.notes.iter().map(|n| format!("note: {n}")));
    write_output(
        output,
        built.coloring.to_rbc_with_comments(&comments).as_bytes(),
    )?;
    let summary = format!(
        "{}: order {}, claimed bound {}",
        c.spec, c.order, c.claimed_bound
    );
    // keep stdout a clean .rbc stream when it carries the coloring
    if output.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    for note in &c.notes {
        eprintln!("note: {note}");
    }
    Ok(EXIT_OK)
}

fn default_cert_path(input: &Path) -> PathBuf {
    let mut s = input.as_os_str().to_owned();
    s.push(".cert.json");
    PathBuf::from(s)
}

fn verify(input: &Path, red: PatternSpec, blue: PatternSpec, cert: Option<PathBuf>) -> Outcome {
    let (coloring, comments) = TwoColoring::parse_rbc(&read_text(input)?)?;
    let mut certificate = certify::verify(&coloring, red, blue);
    certificate.construction = recorded_construction(&coloring, &comments);
    let cert_path = cert.unwrap_or_else(|| default_cert_path(input));
    fs::write(&cert_path, certificate.to_json())?;
    report(&certificate);
    println!("certificate: {}", cert_path.display());
    Ok(if certificate.is_verified() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}

/// The descriptor of the construction named in a `# family:` comment,
/// attached only when rebuilding it reproduces this exact coloring.
fn recorded_construction(
    coloring: &TwoColoring,
    comments: &[String],
) -> Option<ramcert::constructions::Construction> {
    let spec = comments.iter().find_map(|c| c.strip_prefix("family:"))?;
    let built = spec.trim().parse::<FamilySpec>().ok()?.build().ok()?;
    (built.coloring == *coloring).then_some(built.construction)
}

fn report(cert: &Certificate) {
    match &cert.counterexample {
        None => println!(
            "verified: order {} has no red {} and no blue {}",
            cert.order, cert.red_target, cert.blue_target
        ),
        Some(ce) => println!(
            "refuted: {:?} {} on vertices {:?}",
            ce.color, ce.pattern, ce.vertices
        ),
    }
    println!("coloring sha256: {}", cert.coloring_sha);
}

fn read_graph(path: &Path) -> Result<Graph, InputError> {
    Ok(witnesses::load_graph6_file(path)?)
}

fn parse_factor(spec: &str) -> Result<Graph, InputError> {
    if let Some(k) = spec.strip_prefix("complete:") {
        let k: usize =
            k.parse().ok().filter(|&k| k >= 1).ok_or_else(|| {
                InputError(format!("bad factor {spec:?}: need complete:<k>, k >= 1"))
            })?;
        return Ok(Graph::complete(k));
    }
    read_graph(Path::new(spec))
}

fn blowup(
    base: Option<PathBuf>,
    witness: Option<String>,
    witness_file: Option<PathBuf>,
    factor: &str,
    as_red: bool,
    output: Option<&Path>,
) -> Outcome {
    let (g, name) = match (base.or(witness_file), witness) {
        (Some(path), _) => (read_graph(&path)?, path.display().to_string()),
        (None, Some(key)) => (witnesses::resolve_witness(&key)?, key),
        (None, None) => return Err(InputError("give a base graph file or --witness".into())),
    };
    let h = parse_factor(factor)?;
    let b = g.blow_up(&h);
    if as_red {
        let comments = [format!("blow-up of {name} by {factor}")];
        write_output(
            output,
            TwoColoring::from_red(b.clone())
                .to_rbc_with_comments(&comments)
                .as_bytes(),
        )?;
    } else {
        let mut bytes = graph6::to_graph6(&b).into_bytes();
        bytes.push(b'\n');
        write_output(output, &bytes)?;
    }
    if output.is_some() {
        println!(
            "{name}[{factor}]: order {}, {} edges",
            b.order(),
            b.edge_count()
        );
    }
    Ok(EXIT_OK)
}

fn table(which: Which) -> Outcome {
    let ids: &[TableId] = match which {
        Which::W5w6 => &[TableId::W5W6],
        Which::W7 => &[TableId::W7],
        Which::All => &[TableId::W5W6, TableId::W7],
    };
    let mut bad = Vec::new();
    for &id in ids {
        let row = certify::derive_table(id);
        println!("{}", id.title());
        let ns: Vec<String> = row.cells.iter().map(|c| format!("{:>4}", c.n)).collect();
        let vals: Vec<String> = row
            .cells
            .iter()
            .map(|c| format!("{:>4}", c.derived))
            .collect();
        println!("  n     {}", ns.join(""));
        println!("  bound {}", vals.join(""));
        for c in row.mismatches() {
            bad.push(format!(
                "{id:?} n={}: derived {} stored {}",
                c.n, c.derived, c.stored
            ));
        }
    }
    if bad.is_empty() {
        println!("all values match the stored rows");
        Ok(EXIT_OK)
    } else {
        for b in &bad {
            println!("MISMATCH {b}");
        }
        Ok(EXIT_REFUTED)
    }
}

fn search(
    order: usize,
    avoid: PatternSpec,
    avoid_c: PatternSpec,
    budget: u64,
    seed: u64,
    output: Option<&Path>,
) -> Outcome {
    let found = witnesses::tabu_search_with(
        &SearchConfig::default(),
        order,
        avoid,
        avoid_c,
        budget,
        seed,
    )?;
    let Some(g) = found else {
        eprintln!("no witness for order {order} within {budget} steps (seed {seed})");
        return Ok(EXIT_EXHAUSTED);
    };
    let cert = certify::verify_ramsey_witness(&g, avoid, avoid_c);
    assert!(cert.is_verified(), "search returned an unverified graph");
    let mut bytes = graph6::to_graph6(&g).into_bytes();
    bytes.push(b'\n');
    write_output(output, &bytes)?;
    if let Some(out) = output {
        let cert_path = default_cert_path(out);
        fs::write(&cert_path, cert.to_json())?;
        println!(
            "witness: order {order}, {} edges, seed {seed}",
            g.edge_count()
        );
        println!("certificate: {}", cert_path.display());
    }
    Ok(EXIT_OK)
}

fn oracle_check(
    files: &[PathBuf],
    pattern: Option<PatternSpec>,
    random: u64,
    max_order: usize,
    seed: u64,
) -> Outcome {
    let graphs: Vec<Graph> = if files.is_empty() {
        if max_order == 0 || max_order > oracle::CONTAINS_LIMIT {
            return Err(InputError(format!(
                "--max-order must be in 1..={}",
                oracle::CONTAINS_LIMIT
            )));
        }
        (0..random)
            .map(|i| {
                let n = 1 + (i as usize % max_order);
                gnp(n, [0.25, 0.5, 0.75][i as usize % 3], seed.wrapping_add(i))
            })
            .collect()
    } else {
        files
            .iter()
            .map(|f| read_graph(f))
            .collect::<Result<_, _>>()?
    };
    let mut checks = 0u64;
    let mut disagreements = 0u64;
    for (i, g) in graphs.iter().enumerate() {
        let patterns = match pattern {
            Some(p) => vec![p],
            None => patterns_up_to(g.order()),
        };
        for p in patterns {
            let slow = oracle::oracle_contains(g, p)?;
            checks += 1;
            if detect::contains_pattern(g, p) != slow {
                disagreements += 1;
                println!(
                    "DISAGREE graph #{i} ({}) {p}: oracle says {slow}",
                    graph6::to_graph6(g)
                );
            }
        }
        if g.order() <= oracle::MATCHING_LIMIT {
            checks += 1;
            if detect::matching_number(g) != oracle::oracle_matching_number(g)? {
                disagreements += 1;
                println!(
                    "DISAGREE graph #{i} ({}) matching number",
                    graph6::to_graph6(g)
                );
            }
        }
    }
    println!(
        "{} graphs, {checks} checks, {disagreements} disagreements",
        graphs.len()
    );
    Ok(if disagreements == 0 {
        EXIT_OK
    } else {
        EXIT_REFUTED
    })
}
