use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use stairtab::jdt::{slide, Direction};
use stairtab::shapes::{staircase, Cell, Partition, SkewShape};
use stairtab::symfunc::{
    gst_gf, qtr_poly, schur_expand, schur_skew_poly, shifted_q_poly, yamanouchi_coeff_table,
};
use stairtab::tableaux::{
    for_each_gst, for_each_qtab, GstTableau, IndexSet, QTableau, TableauJson,
};
use stairtab::verify::{
    emit_report, exit_code, run_verify, sweep, Params, ReportFormat, SweepBounds, TheoremId,
};
use stairtab::Error;

#[derive(Parser)]
#[command(
    name = "stairtab",
    version,
    about = "Generalized staircase tableaux toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every tableau of a shape, one JSON object per line.
    Enumerate {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "gst")]
        kind: TableauKind,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Print a generating function.
    Gf {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "qtr")]
        kind: PolyKind,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Expand a generating function in Schur polynomials.
    Expand {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_enum, default_value = "qtr")]
        kind: ExpandKind,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Run one slide on a tableau read from FILE ("-" for stdin) and print its trace.
    JdtTrace {
        file: String,
        #[arg(long, value_parser = parse_set, default_value = "")]
        set: SetArg,
        /// Alphabet size; defaults to the largest entry.
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, value_enum, default_value = "forward")]
        direction: DirectionArg,
        #[arg(long, value_parser = parse_cell)]
        hole: Cell,
    },
    /// Check one theorem at one parameter point.
    Verify {
        theorem: TheoremId,
        #[command(flatten)]
        params: ParamArgs,
        /// Run shape-based checks with mu outside the staircase; failures are reported but do not fail the run.
        #[arg(long)]
        allow_outside_staircase: bool,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
    /// Check one theorem at every admissible parameter point within bounds.
    Sweep {
        theorem: TheoremId,
        /// Largest staircase size.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        m: u32,
        /// Largest skew size for shape-based theorems.
        #[arg(long, default_value_t = 6)]
        size_max: usize,
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        #[arg(long, default_value = "json")]
        format: ReportFormat,
    },
}

#[derive(Args)]
struct ShapeArgs {
    /// Outer shape; defaults to the staircase of size n.
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 3)]
    m: u32,
    #[arg(long, value_parser = parse_set, default_value = "")]
    set: SetArg,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long, value_parser = parse_partition)]
    mu: Option<Partition>,
    #[arg(long, value_parser = parse_partition)]
    lambda: Option<Partition>,
    #[arg(long, value_parser = parse_set)]
    set: Option<SetArg>,
    #[arg(long, value_parser = parse_set, conflicts_with = "letter")]
    set2: Option<SetArg>,
    /// Target set is the source set plus this letter.
    #[arg(long)]
    letter: Option<u32>,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableauKind {
    Gst,
    Qtab,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyKind {
    Gst,
    Schur,
    Qtr,
    Shifted,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpandKind {
    Schur,
    Qtr,
    Yamanouchi,
}

#[derive(Clone, Copy, ValueEnum)]
enum DirectionArg {
    Forward,
    Reverse,
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse::<Partition>().map_err(|e| e.to_string())
}

/// Comma-separated letters; empty means the empty set.
#[derive(Clone, Debug, Default)]
struct SetArg(Vec<u32>);

fn parse_set(s: &str) -> Result<SetArg, String> {
    parse_list(s).map(SetArg)
}

fn parse_list(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| p.parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect()
}

fn parse_cell(s: &str) -> Result<Cell, String> {
    let parts = parse_list(s)?;
    match parts[..] {
        [r, c] if r > 0 && c > 0 => Ok(Cell::new(r as usize, c as usize)),
        _ => Err(format!("expected a cell as ROW,COL, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Overflow | Error::Invariant(_) | Error::Expansion(_) => {
                Failure::Internal(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl ShapeArgs {
    fn shape(&self) -> Result<SkewShape, Failure> {
        let mu = self.mu.clone().unwrap_or_default();
        let outer = match (&self.lambda, self.n) {
            (Some(lambda), _) => lambda.clone(),
            (None, Some(n)) => staircase(n),
            (None, None) => return Err(Failure::Usage("give --lambda or --n".into())),
        };
        Ok(SkewShape::new(outer, mu)?)
    }

    fn index_set(&self) -> Result<IndexSet, Failure> {
        Ok(IndexSet::new(self.set.0.iter().copied(), self.m)?)
    }
}

impl ParamArgs {
    fn params(self) -> Params {
        let set = self.set.map(|s| s.0);
        let set2 = match self.letter {
            Some(i) => Some(set.iter().flatten().copied().chain([i]).collect()),
            None => self.set2.map(|s| s.0),
        };
        Params {
            n: self.n,
            mu: self.mu,
            lambda: self.lambda,
            set,
            set2,
            m: self.m,
            allow_outside_staircase: false,
        }
    }
}

fn to_line<T: serde::Serialize + ?Sized>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    res.map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    Ok(text)
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Enumerate {
            shape,
            kind,
            format,
        } => {
            let sh = shape.shape()?;
            let set = shape.index_set()?;
            let mut count = 0usize;
            let json = matches!(format, ReportFormat::Json);
            match kind {
                TableauKind::Gst => for_each_gst(&sh, &set, |cells, vals| {
                    count += 1;
                    if json {
                        let entries = cells.iter().copied().zip(vals.iter().copied()).collect();
                        let t = GstTableau::new(sh.clone(), entries).expect("enumerated tableau");
                        println!("{}", to_line(&t.to_json()));
                    }
                }),
                TableauKind::Qtab => for_each_qtab(&sh, &set, |cells, vals| {
                    count += 1;
                    if json {
                        let entries = cells.iter().copied().zip(vals.iter().copied()).collect();
                        let t = QTableau::new(sh.clone(), entries).expect("enumerated tableau");
                        println!("{}", to_line(&t.to_json()));
                    }
                }),
            }
            if !json {
                println!("{sh} with I={set}: {count} tableaux");
            }
            Ok(0)
        }
        Command::Gf {
            shape,
            kind,
            format,
        } => {
            let sh = shape.shape()?;
            let m = shape.m as usize;
            let poly = match kind {
                PolyKind::Gst => gst_gf(&sh, &shape.index_set()?)?,
                PolyKind::Schur => schur_skew_poly(&sh, m)?,
                PolyKind::Qtr => qtr_poly(&sh, m)?,
                PolyKind::Shifted => {
                    let n = shape
                        .n
                        .unwrap_or_else(|| sh.outer().len().max(sh.outer().first_part()));
                    shifted_q_poly(&sh, n, m)?
                }
            };
            match format {
                ReportFormat::Json => println!("{}", to_line(&poly.to_json())),
                ReportFormat::Summary => println!("{poly}"),
            }
            Ok(0)
        }
        Command::Expand {
            shape,
            kind,
            format,
        } => {
            let sh = shape.shape()?;
            let m = shape.m as usize;
            let expansion = match kind {
                ExpandKind::Schur => schur_expand(&schur_skew_poly(&sh, m)?)?,
                ExpandKind::Qtr => schur_expand(&qtr_poly(&sh, m)?)?,
                ExpandKind::Yamanouchi => yamanouchi_coeff_table(&sh, m)?,
            };
            match format {
                ReportFormat::Json => println!("{}", to_line(&expansion.to_json())),
                ReportFormat::Summary => {
                    for (nu, coeff) in expansion.coeffs() {
                        println!("s{nu}: {coeff}");
                    }
                }
            }
            Ok(0)
        }
        Command::JdtTrace {
            file,
            set,
            m,
            direction,
            hole,
        } => {
            let text = read_input(&file)?;
            let parsed: TableauJson =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{file}: {e}")))?;
            let t = GstTableau::from_json(&parsed)?;
            let m = m.unwrap_or_else(|| {
                t.entries()
                    .values()
                    .copied()
                    .chain(set.0.iter().copied())
                    .max()
                    .unwrap_or(1)
            });
            let set = IndexSet::new(set.0, m)?;
            if !t.is_valid(&set) {
                return Err(Failure::Usage(format!("tableau is not valid for I={set}")));
            }
            let dir = match direction {
                DirectionArg::Forward => Direction::Forward,
                DirectionArg::Reverse => Direction::Reverse,
            };
            let res = slide(&t, &set, hole, dir)?;
            let cell = |c: &Cell| [c.row, c.col];
            let out = json!({
                "tableau": res.tableau.to_json(),
                "vacated": cell(&res.vacated),
                "path": res.path.iter().map(cell).collect::<Vec<_>>(),
            });
            println!("{}", to_line(&out));
            Ok(0)
        }
        Command::Verify {
            theorem,
            params,
            allow_outside_staircase,
            format,
        } => {
            let mut params = params.params();
            params.allow_outside_staircase = allow_outside_staircase;
            let report = run_verify(theorem, &params)?;
            let reports = [report];
            print!("{}", emit_report(&reports, format));
            Ok(exit_code(&reports))
        }
        Command::Sweep {
            theorem,
            n,
            m,
            size_max,
            jobs,
            format,
        } => {
            let bounds = SweepBounds {
                n_max: n,
                m,
                size_max,
            };
            let reports = sweep(theorem, bounds, jobs)?;
            print!("{}", emit_report(&reports, format));
            Ok(exit_code(&reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code as u8),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}
