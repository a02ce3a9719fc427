use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dyckflip::bijection::{classify, gamma, gamma_inverse, phi, phi_inverse};
use dyckflip::extremal::{construct_path, level_counts, MinimalSets};
use dyckflip::ops::{apply_ops, parse_ops};
use dyckflip::oracle::{run_suite, SUITES};
use dyckflip::path::enumerate_paths;
use dyckflip::qbell::{bell_poly, distinct_ab_count, fqt, g_value};
use dyckflip::render::{render, RenderSpec};
use dyckflip::DyckPath;

#[derive(Parser)]
#[command(name = "dyckflip", version, about = "Dyck paths under area and bounce")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Words,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Area,
    Bounce,
}

#[derive(Clone, Copy, ValueEnum)]
enum Sequence {
    D,
    G,
}

#[derive(Subcommand)]
enum Command {
    /// List every Dyck path of semilength N in lexicographic order (N < E).
    Enum {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "words")]
        format: Format,
    },
    /// Area, bounce and bounce path of a path.
    Stats {
        #[arg(long)]
        path: DyckPath,
        #[arg(long)]
        json: bool,
    },
    /// Draw a path on its grid, top row first.
    Render {
        #[arg(long)]
        path: DyckPath,
        /// Mark the cells right of each bounce-path north run with '*'.
        #[arg(long)]
        bounce: bool,
        /// Draw floating cells as 'o'.
        #[arg(long)]
        floating: bool,
    },
    /// Apply a comma-separated operator word, left to right.
    Op {
        #[arg(long)]
        path: DyckPath,
        #[arg(long)]
        apply: String,
    },
    /// The area/bounce flipping bijection.
    Phi {
        #[arg(long)]
        path: DyckPath,
        #[arg(long)]
        inverse: bool,
    },
    /// Membership certificate for the domain or codomain of the bijection.
    Classify {
        #[arg(long)]
        path: DyckPath,
    },
    /// The two-stage extension of the bijection.
    Gamma {
        #[arg(long)]
        path: DyckPath,
        #[arg(long)]
        inverse: bool,
    },
    /// Area- or bounce-minimal paths.
    Minimal {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// A path with the given area and bounce, or "none".
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        area: usize,
        #[arg(long)]
        bounce: usize,
    },
    /// Sizes of the nonempty (area, bounce) levels.
    Levels {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Coefficients of the (q,t) area/bounce generating polynomial.
    Fqt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        csv: bool,
    },
    /// The q-Bell polynomial B_n(q).
    Qbell {
        #[arg(long)]
        n: usize,
    },
    /// Terms n = 0..K-1 of d(n) or g(n).
    Sequence {
        #[arg(long, value_enum)]
        name: Sequence,
        #[arg(long)]
        count: usize,
    },
    /// Run a brute-force verification suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
}

type CliResult = Result<ExitCode, Box<dyn std::error::Error>>;

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("({})", parts.join(","))
}

fn stats(out: &mut impl Write, path: &DyckPath, json: bool) -> io::Result<()> {
    let r = path.record();
    if json {
        return writeln!(out, "{}", serde_json::to_string(&r).expect("records serialize"));
    }
    writeln!(out, "path {}", r.word)?;
    writeln!(out, "n {}", r.n)?;
    writeln!(out, "area {}", r.area)?;
    writeln!(out, "bounce {}", r.bounce)?;
    writeln!(out, "area_sequence {}", tuple(&r.area_seq))?;
    writeln!(out, "alpha {}", tuple(&r.alpha))?;
    writeln!(out, "bounce_points {}", tuple(&r.bounce_points))?;
    writeln!(out, "floating {}", r.floating)
}

fn run(cli: Cli) -> CliResult {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Enum { n, format } => {
            for p in enumerate_paths(n) {
                match format {
                    Format::Words => writeln!(out, "{p}")?,
                    Format::Json => writeln!(out, "{}", serde_json::to_string(&p.record())?)?,
                }
            }
        }
        Command::Stats { path, json } => stats(&mut out, &path, json)?,
        Command::Render {
            path,
            bounce,
            floating,
        } => {
            let spec = RenderSpec {
                show_bounce: bounce,
                show_floating: floating,
                ..RenderSpec::default()
            };
            write!(out, "{}", render(&path, &spec))?;
        }
        Command::Op { path, apply } => {
            let ops = parse_ops(&apply)?;
            writeln!(out, "{}", apply_ops(&path, &ops)?)?;
        }
        Command::Phi { path, inverse } => {
            let image = if inverse { phi_inverse(&path)? } else { phi(&path)? };
            writeln!(out, "{image}")?;
        }
        Command::Classify { path } => {
            writeln!(out, "{}", serde_json::to_string(&classify(&path))?)?;
        }
        Command::Gamma { path, inverse } => {
            let image = if inverse { gamma_inverse(&path)? } else { gamma(&path)? };
            writeln!(out, "{image}")?;
        }
        Command::Minimal { n, kind } => {
            let sets = MinimalSets::new(n);
            let list = match kind {
                Kind::Area => sets.area,
                Kind::Bounce => sets.bounce,
            };
            for p in list {
                writeln!(out, "{p}\t{}\t{}", p.area(), p.bounce())?;
            }
        }
        Command::Construct { n, area, bounce } => match construct_path(n, area, bounce) {
            Some(p) => writeln!(out, "{p}")?,
            None => writeln!(out, "none")?,
        },
        Command::Levels { n, csv } => {
            let rows = level_counts(n);
            if csv {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(["area", "bounce", "count"])?;
                for l in rows {
                    w.serialize((l.a, l.b, l.count))?;
                }
                w.flush()?;
            } else {
                for l in rows {
                    writeln!(out, "{:>4} {:>4} {:>6}", l.a, l.b, l.count)?;
                }
            }
        }
        Command::Fqt { n, csv } => {
            let f = fqt(n);
            let dim = f.dim();
            let header: Vec<String> = std::iter::once("area\\bounce".to_string())
                .chain((0..dim).map(|b| b.to_string()))
                .collect();
            let rows = f.rows().iter().enumerate().map(|(a, row)| {
                std::iter::once(a.to_string())
                    .chain(row.iter().map(ToString::to_string))
                    .collect::<Vec<_>>()
            });
            if csv {
                let mut w = csv::Writer::from_writer(out);
                w.write_record(&header)?;
                for r in rows {
                    w.write_record(&r)?;
                }
                w.flush()?;
            } else {
                let width = f
                    .rows()
                    .iter()
                    .flatten()
                    .map(|c| c.to_string().len())
                    .chain([dim.to_string().len()])
                    .max()
                    .unwrap_or(1);
                let line = |cells: &[String]| {
                    cells
                        .iter()
                        .map(|c| format!("{c:>width$}"))
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                let mut head = header.clone();
                head[0] = "a\\b".into();
                writeln!(out, "{}", line(&head))?;
                for r in rows {
                    writeln!(out, "{}", line(&r))?;
                }
            }
        }
        Command::Qbell { n } => writeln!(out, "{}", bell_poly(n))?,
        Command::Sequence { name, count } => {
            let terms: Vec<String> = (0..count)
                .map(|n| match name {
                    Sequence::D => distinct_ab_count(n),
                    Sequence::G => g_value(n),
                })
                .map(|v| v.to_string())
                .collect();
            writeln!(out, "{}", terms.join(", "))?;
        }
        Command::Verify { suite, n, json } => {
            let reports = run_suite(&suite, n)?;
            for r in &reports {
                if json {
                    writeln!(out, "{}", serde_json::to_string(r)?)?;
                } else {
                    writeln!(out, "{}", r.table_row())?;
                    if let Some(c) = &r.counterexample {
                        writeln!(out, "     counterexample: {c}")?;
                    }
                }
            }
            if reports.iter().any(|r| !r.passed) {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            if e.downcast_ref::<io::Error>().is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe) {
                return ExitCode::SUCCESS;
            }
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
