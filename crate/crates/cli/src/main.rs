//! `lscpm`: temporal communities of link streams from the command line.
//!
//! Exit status is 0 on success, 1 when the input data is rejected and 2 on a
//! usage error.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lscpm::compare::snapshot_containers;
use lscpm::oracle::{oracle_enumerate, snapshot_cpm};
use lscpm::pipeline::{self, Mode};
use lscpm::stats::community_stats;
use lscpm::synth::{generate_instants, SynthParams};
use lscpm::{
    apply_delta, compare_communities, enumerate_k_cliques, parse_links, Format, LinkStream, RealTime, Refinement,
    TemporalCommunity, Tick, Time,
};

#[derive(Parser, Debug)]
#[command(name = "lscpm", version, about = "Temporal clique percolation on link streams")]
struct Cli {
    /// Field layout of the output. Defaults to csv for `stats` and text
    /// otherwise.
    #[arg(long, global = true, value_enum)]
    output: Option<OutputFormat>,

    /// Percolate on the enumerating thread instead of a separate consumer.
    #[arg(long, global = true)]
    single_thread: bool,

    /// Read timestamps as real numbers instead of integers.
    #[arg(long, global = true)]
    real_time: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List maximal k-cliques as `t0 t1 v1 .. vk`.
    Enumerate {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clique_size)]
        k: usize,
    },
    /// List communities as `community vertex t0 t1`.
    Communities {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clique_size)]
        k: usize,
    },
    /// Community count per vertex, and distributions of memberships and sizes.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clique_size)]
        k: usize,
    },
    /// Compare the communities found for two clique sizes.
    Compare {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clique_size)]
        k1: usize,
        #[arg(long, value_parser = clique_size)]
        k2: usize,
        /// Comma separated times at which snapshot communities for `k1` are
        /// checked against the temporal ones.
        #[arg(long, value_delimiter = ',')]
        snapshot_times: Vec<String>,
    },
    /// Write a synthetic link stream.
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = SynthParams::default().vertices)]
        vertices: u32,
        #[arg(long, default_value_t = SynthParams::default().instants)]
        instants: usize,
        #[arg(long, default_value_t = SynthParams::default().group_size)]
        group_size: u32,
        /// Link duration. With `--format durational` links are merged per pair.
        #[arg(long, default_value_t = SynthParams::default().delta)]
        delta: Tick,
        #[arg(long, default_value_t = SynthParams::default().cross_fraction)]
        cross_fraction: f64,
        #[arg(long, value_enum, default_value_t = InputFormat::Durational)]
        format: InputFormat,
    },
    /// Check streaming enumeration against brute force on a small stream.
    #[command(hide = true)]
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_parser = clique_size)]
        k: usize,
    },
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Durational)]
    format: InputFormat,
    /// Duration given to each instantaneous interaction.
    #[arg(long)]
    delta: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Durational,
    Instantaneous,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Tsv,
}

fn clique_size(s: &str) -> std::result::Result<usize, String> {
    let k: usize = s.parse().map_err(|e| format!("{e}"))?;
    if k < 3 {
        Err(format!("clique size must be at least 3, got {k}"))
    } else {
        Ok(k)
    }
}

/// Marks an error as a misuse of the command line (exit status 2).
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(message: impl Into<String>) -> anyhow::Error {
    UsageError(message.into()).into()
}

fn parse_time<T: Time>(s: &str, what: &str) -> Result<T> {
    s.trim()
        .parse::<T>()
        .map_err(|_| usage(format!("invalid {what}: {s:?}")))
}

/// Rows sharing one delimiter. Text output is space separated and unquoted.
struct Table {
    writer: csv::Writer<Box<dyn Write>>,
    headers: bool,
}

impl Table {
    fn new(format: OutputFormat) -> Self {
        let mut builder = csv::WriterBuilder::new();
        builder.flexible(true);
        match format {
            OutputFormat::Text => builder.delimiter(b' ').quote_style(csv::QuoteStyle::Never),
            OutputFormat::Csv => builder.delimiter(b','),
            OutputFormat::Tsv => builder.delimiter(b'\t'),
        };
        let out: Box<dyn Write> = Box::new(io::BufWriter::new(io::stdout().lock()));
        Table {
            writer: builder.from_writer(out),
            headers: format != OutputFormat::Text,
        }
    }

    fn header(&mut self, names: &[&str]) -> Result<()> {
        if self.headers {
            self.writer.write_record(names)?;
        }
        Ok(())
    }

    fn row<I, S>(&mut self, fields: I) -> Result<()>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[u8]>,
    {
        self.writer.write_record(fields)?;
        Ok(())
    }

    fn finish(mut self) -> Result<()> {
        self.writer.flush()?;
        Ok(())
    }
}

struct Settings {
    output: Option<OutputFormat>,
    mode: Mode,
}

impl Settings {
    fn table(&self, default: OutputFormat) -> Table {
        Table::new(self.output.unwrap_or(default))
    }
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn load<T: Time>(args: &InputArgs) -> Result<LinkStream<T>> {
    let delta = args.delta.as_deref().map(|d| parse_time::<T>(d, "--delta")).transpose()?;
    let format = match args.format {
        InputFormat::Durational => Format::Durational,
        InputFormat::Instantaneous => {
            match delta {
                None => return Err(usage("--format instantaneous requires --delta")),
                Some(d) if !d.is_positive() => return Err(usage(format!("--delta must be positive, got {d}"))),
                Some(_) => {}
            }
            Format::Instantaneous
        }
    };
    let text = read_input(&args.input)?;
    let stream = parse_links(&text, format, delta).with_context(|| format!("rejected {}", args.input.display()))?;
    Ok(stream)
}

/// Orders labels numerically when both are integers, otherwise as strings.
fn label_order(a: &str, b: &str) -> std::cmp::Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => std::cmp::Ordering::Less,
        (Err(_), Ok(_)) => std::cmp::Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

fn labels<T: Time>(stream: &LinkStream<T>, vertices: &[u32]) -> Vec<String> {
    let mut names: Vec<String> = vertices.iter().map(|&v| stream.label(v).to_string()).collect();
    names.sort_by(|a, b| label_order(a, b));
    names
}

fn write_communities<T: Time>(
    ctx: &Settings,
    stream: &LinkStream<T>,
    communities: &[TemporalCommunity<T>],
) -> Result<()> {
    let mut table = ctx.table(OutputFormat::Text);
    table.header(&["community", "vertex", "t0", "t1"])?;
    for c in communities {
        let mut members: Vec<_> = c.members.iter().map(|(&v, ivs)| (stream.label(v), ivs)).collect();
        members.sort_by(|a, b| label_order(a.0, b.0));
        for (label, intervals) in members {
            for iv in intervals {
                table.row([c.id.to_string(), label.to_string(), iv.t0.to_string(), iv.t1.to_string()])?;
            }
        }
    }
    table.finish()
}

fn run<T: Time>(ctx: &Settings, command: Command) -> Result<()> {
    match command {
        Command::Enumerate { input, k } => {
            let stream = load::<T>(&input)?;
            let mut table = ctx.table(OutputFormat::Text);
            let mut names = vec!["t0".to_string(), "t1".to_string()];
            names.extend((1..=k).map(|i| format!("v{i}")));
            table.header(&names.iter().map(String::as_str).collect::<Vec<_>>())?;
            for clique in lscpm::KCliqueEnumerator::new(&stream, k)? {
                let mut row = vec![clique.t0().to_string(), clique.t1().to_string()];
                row.extend(labels(&stream, &clique.vertices));
                table.row(row)?;
            }
            table.finish()
        }
        Command::Communities { input, k } => {
            let stream = load::<T>(&input)?;
            let communities = pipeline::communities(&stream, k, ctx.mode)?;
            write_communities(ctx, &stream, &communities)
        }
        Command::Stats { input, k } => {
            let stream = load::<T>(&input)?;
            let communities = pipeline::communities(&stream, k, ctx.mode)?;
            let stats = community_stats(stream.vertex_count(), &communities);
            let mut table = ctx.table(OutputFormat::Csv);
            table.header(&["table", "key", "value"])?;
            let mut per_vertex: Vec<(&str, usize)> = stats
                .communities_per_vertex
                .iter()
                .enumerate()
                .map(|(v, &n)| (stream.label(v as u32), n))
                .collect();
            per_vertex.sort_by(|a, b| label_order(a.0, b.0));
            for (label, n) in per_vertex {
                table.row(["vertex_communities".to_string(), label.to_string(), n.to_string()])?;
            }
            for (memberships, vertices) in &stats.membership_distribution {
                table.row(["membership_distribution".to_string(), memberships.to_string(), vertices.to_string()])?;
            }
            for (size, count) in &stats.size_distribution {
                table.row(["community_size".to_string(), size.to_string(), count.to_string()])?;
            }
            table.finish()
        }
        Command::Compare {
            input,
            k1,
            k2,
            snapshot_times,
        } => {
            let times = snapshot_times
                .iter()
                .map(|s| parse_time::<T>(s, "snapshot time"))
                .collect::<Result<Vec<T>>>()?;
            let stream = load::<T>(&input)?;
            let a = pipeline::communities(&stream, k1, ctx.mode)?;
            let b = pipeline::communities(&stream, k2, ctx.mode)?;
            let cmp = compare_communities(&a, &b);
            let relation = match cmp.refinement {
                Refinement::Equal => "equal",
                Refinement::AInB => "k1 ⊆ k2",
                Refinement::BInA => "k2 ⊆ k1",
                Refinement::None => "none",
            };
            let mut out = io::BufWriter::new(io::stdout().lock());
            writeln!(out, "communities k1={k1}: {}", a.len())?;
            writeln!(out, "communities k2={k2}: {}", b.len())?;
            writeln!(out, "refinement: {relation}")?;
            for t in times {
                let snapshot = snapshot_cpm(&stream, t, k1)?;
                let held = snapshot_containers(&a, t, &snapshot).iter().filter(|&&n| n > 0).count();
                writeln!(out, "snapshot t={t}: {held}/{} contained", snapshot.len())?;
            }
            out.flush()?;
            Ok(())
        }
        Command::Oracle { input, k } => {
            let stream = load::<T>(&input)?;
            let expected = oracle_enumerate(&stream, k)?;
            let found: std::collections::BTreeSet<_> = enumerate_k_cliques(&stream, k)?.into_iter().collect();
            let mut out = io::BufWriter::new(io::stdout().lock());
            for c in expected.symmetric_difference(&found) {
                let side = if expected.contains(c) { "missing" } else { "extra" };
                writeln!(out, "{side} {} {} {}", c.t0(), c.t1(), labels(&stream, &c.vertices).join(" "))?;
            }
            writeln!(out, "cliques: {} oracle, {} streamed", expected.len(), found.len())?;
            out.flush()?;
            anyhow::ensure!(expected == found, "streaming enumeration disagrees with brute force");
            Ok(())
        }
        Command::Generate { .. } => unreachable!("handled before dispatch on the time type"),
    }
}

fn generate(
    ctx: &Settings,
    params: SynthParams,
    format: InputFormat,
) -> Result<()> {
    if params.vertices < 2 || params.group_size < 2 {
        return Err(usage("--vertices and --group-size must be at least 2"));
    }
    if params.delta <= 0 {
        return Err(usage(format!("--delta must be positive, got {}", params.delta)));
    }
    if !(0.0..=1.0).contains(&params.cross_fraction) {
        return Err(usage("--cross-fraction must lie in [0, 1]"));
    }
    let instants = generate_instants(&params);
    let mut table = ctx.table(OutputFormat::Text);
    match format {
        InputFormat::Instantaneous => {
            for (t, u, v) in &instants {
                table.row([t.to_string(), u.clone(), v.clone()])?;
            }
        }
        InputFormat::Durational => {
            let stream = apply_delta(&instants, params.delta)?;
            for l in stream.links() {
                table.row([l.b.to_string(), l.e.to_string(), stream.label(l.u).to_string(), stream.label(l.v).to_string()])?;
            }
        }
    }
    table.finish()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Settings {
        output: cli.output,
        mode: if cli.single_thread {
            Mode::SingleThread
        } else {
            Mode::default()
        },
    };
    let result = match cli.command {
        Command::Generate {
            seed,
            vertices,
            instants,
            group_size,
            delta,
            cross_fraction,
            format,
        } => {
            let params = SynthParams {
                vertices,
                instants,
                group_size,
                delta,
                cross_fraction,
                seed,
            };
            generate(&ctx, params, format)
        }
        command if cli.real_time => run::<RealTime>(&ctx, command),
        command => run::<Tick>(&ctx, command),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if is_broken_pipe(&err) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {err:#}");
            if err.is::<UsageError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().any(|e| {
        e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            || e.downcast_ref::<csv::Error>()
                .is_some_and(|e| matches!(e.kind(), csv::ErrorKind::Io(io) if io.kind() == io::ErrorKind::BrokenPipe))
    })
}
