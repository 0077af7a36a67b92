//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests without spawning a process.

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forbidden::{family_check, Family};
use crate::graph::{parse_graph6, to_graph6, Graph, Named};
use crate::harness::{
    cycle_alpha_psi, ingest, report, report_one, sweep_with_jobs, Entry, Format, SweepReport,
    Theorem,
};
use crate::perfectness::{is_ab_perfect, recognize_structure, StructureTree};
use crate::solvers::{profile, Invariant};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "abperfect",
    version,
    about = "Coloring invariants and ab-perfectness of small graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute omega, chi, gamma, alpha and psi.
    Params {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Check a(H) = b(H) on every induced subgraph H.
    Check {
        #[arg(long, value_parser = parse_invariant)]
        a: Invariant,
        #[arg(long, value_parser = parse_invariant)]
        b: Invariant,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Decompose into complete graphs, joins and unions, or explain the rejection.
    Recognize {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Look for an induced member of a pattern family.
    Forbidden {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
    /// Verify a property over every graph up to a given order.
    Sweep {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long)]
        max_n: usize,
        /// Worker threads for property evaluation.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
        #[command(flatten)]
        output: Output,
    },
    /// Tabulate alpha and psi of cycles C3..C_max_n.
    Cycles {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// A graph in graph6 format.
    #[arg(long)]
    pub g6: Option<String>,
    /// A named graph: kN, pN, cN, eN, kA,B, p3+k2, 3k2 or fig2.
    #[arg(long)]
    pub named: Option<String>,
    /// A file of graph6 lines; `-` reads standard input.
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

fn parse_invariant(s: &str) -> Result<Invariant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return status;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Params { input, output } => per_graph(&input, output.format, stdin, out, profile),
        Command::Check {
            a,
            b,
            input,
            output,
        } => per_graph(&input, output.format, stdin, out, |g| {
            is_ab_perfect(g, a, b)
        }),
        Command::Recognize { input, output } => {
            if output.format == Format::Text {
                for_each_graph(&input, stdin, |label, g| {
                    if let Some(label) = label {
                        writeln!(out, "{label}")?;
                    }
                    write!(out, "{}", outline(&recognize_structure(g)))?;
                    Ok(())
                })?;
                Ok(EXIT_OK)
            } else {
                per_graph(&input, output.format, stdin, out, |g| {
                    Ok(recognize_structure(g))
                })
            }
        }
        Command::Forbidden {
            family,
            input,
            output,
        } => per_graph(&input, output.format, stdin, out, |g| {
            Ok(family_check(g, family))
        }),
        Command::Sweep {
            theorem,
            max_n,
            jobs,
            output,
        } => {
            let r = sweep_with_jobs(theorem, max_n, jobs as usize)?;
            match output.format {
                Format::Text => write!(out, "{}", sweep_summary(&r))?,
                f => write!(out, "{}", report_one(&r, f)?)?,
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_VIOLATIONS })
        }
        Command::Cycles { max_n, output } => {
            let rows = cycle_alpha_psi(max_n)?;
            write!(out, "{}", report(&rows, output.format)?)?;
            Ok(if rows.iter().all(|r| r.matches) {
                EXIT_OK
            } else {
                EXIT_VIOLATIONS
            })
        }
    }
}

/// Calls `f` on each input graph. `label` is the graph6 string for graphs
/// read from a file and `None` for a single `--g6` or `--named` graph.
fn for_each_graph(
    input: &Input,
    stdin: &mut dyn BufRead,
    mut f: impl FnMut(Option<&str>, &Graph) -> Result<()>,
) -> Result<()> {
    if let Some(text) = &input.g6 {
        return f(None, &parse_graph6(text)?);
    }
    if let Some(name) = &input.named {
        return f(None, &name.parse::<Named>()?.build()?);
    }
    let path = input.file.as_ref().expect("clap enforces one input");
    let reader: Box<dyn BufRead + '_> = if path.as_os_str() == "-" {
        Box::new(stdin)
    } else {
        Box::new(BufReader::new(File::open(path)?))
    };
    for item in ingest(reader) {
        let item = item?;
        let label = to_graph6(&item.graph);
        f(Some(&label), &item.graph).map_err(|e| Error::Line {
            line: item.line,
            source: Box::new(e),
        })?;
    }
    Ok(())
}

/// A single graph renders as one object; a file renders as a list of
/// entries tagged with their graph6 strings.
fn per_graph<T: Serialize>(
    input: &Input,
    format: Format,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    compute: impl Fn(&Graph) -> Result<T>,
) -> Result<i32> {
    if input.file.is_none() {
        let mut single = None;
        for_each_graph(input, stdin, |_, g| {
            single = Some(compute(g)?);
            Ok(())
        })?;
        write!(out, "{}", report_one(&single.expect("one graph"), format)?)?;
    } else {
        let mut entries = Vec::new();
        for_each_graph(input, stdin, |label, g| {
            entries.push(Entry {
                graph6: label.unwrap_or_default().to_string(),
                value: compute(g)?,
            });
            Ok(())
        })?;
        write!(out, "{}", report(&entries, format)?)?;
    }
    Ok(EXIT_OK)
}

fn outline(tree: &StructureTree) -> String {
    fn walk(t: &StructureTree, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        match t {
            StructureTree::Complete { m } => out.push_str(&format!("{pad}K{m}\n")),
            StructureTree::EmptyPart { m } => out.push_str(&format!("{pad}{m} isolated\n")),
            StructureTree::Join { m, children } => {
                out.push_str(&format!("{pad}K{m} join\n"));
                children.iter().for_each(|c| walk(c, depth + 1, out));
            }
            StructureTree::Union { children } => {
                out.push_str(&format!("{pad}union\n"));
                children.iter().for_each(|c| walk(c, depth + 1, out));
            }
            StructureTree::Rejected { reason } => {
                out.push_str(&format!("{pad}rejected: {reason}\n"))
            }
        }
    }
    let mut out = String::new();
    walk(tree, 0, &mut out);
    out
}

fn sweep_summary(r: &SweepReport) -> String {
    let mut s = format!(
        "{} n<={}: {} graphs checked, {} violations ({}) in {} ms\n",
        r.theorem,
        r.n_max,
        r.checked,
        r.violations.len(),
        if r.passed() { "pass" } else { "FAIL" },
        r.elapsed_ms
    );
    for v in &r.violations {
        s.push_str(&format!("  {}: {}\n", v.graph6, v.detail));
    }
    s
}
