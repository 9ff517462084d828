use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ncsym::lattice::{interval, mobius, mobius_product_form};
use ncsym::partition::{bell, enumerate, parse_blocks, standardize, type_of};
use ncsym::{Algebra, Basis, Element, Error, SetPartition};
use ncsym_cli::input;
use ncsym_cli::verify::{self, Suite};
use serde::Serialize;
use serde_json::Value;

/// Exact computations in NCSym and the partition lattice algebras.
#[derive(Parser)]
#[command(name = "ncsym", version)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print elements and module classes as text instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    /// Write the result to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Kind {
    External,
    Internal,
}

#[derive(Subcommand)]
enum Command {
    /// List Π_n in canonical order.
    Enumerate { n: usize },
    /// μ(lower, upper).
    Mobius {
        lower: String,
        upper: String,
        /// Use the closed product form (fails on incomparable pairs).
        #[arg(long)]
        product_form: bool,
    },
    /// Partition operations.
    #[command(subcommand)]
    Op(Op),
    /// Change of basis.
    Convert {
        #[arg(long)]
        from: Option<Basis>,
        #[arg(long)]
        to: Basis,
        element: String,
    },
    /// Product in NCSym.
    Mul {
        /// Basis for partition operands and for the result.
        #[arg(long)]
        basis: Option<Basis>,
        left: String,
        right: String,
    },
    /// External or internal coproduct.
    Coproduct {
        #[arg(long, value_enum, default_value = "external")]
        kind: Kind,
        #[arg(long)]
        basis: Option<Basis>,
        element: String,
    },
    /// Primitive idempotent of a lattice algebra.
    Idempotent {
        #[arg(long)]
        algebra: Algebra,
        label: String,
    },
    /// Induction of two simple modules.
    Induct {
        #[arg(long)]
        algebra: Algebra,
        left: String,
        right: String,
    },
    /// Restriction of a simple module at cut k, or summed over all cuts.
    Restrict {
        #[arg(long)]
        algebra: Algebra,
        label: String,
        k: Option<usize>,
    },
    /// Character of the simple module `module` at the basis element `at`.
    Character {
        #[arg(long)]
        algebra: Algebra,
        module: String,
        at: String,
    },
    /// Frobenius image of a module class.
    Frobenius {
        #[arg(long)]
        algebra: Algebra,
        module: String,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
        /// Include wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Subcommand)]
enum Op {
    Meet { a: String, b: String },
    Join { a: String, b: String },
    Concat { a: String, b: String },
    Refines { a: String, b: String },
    /// Split at k when no block crosses the cut.
    Split { a: String, k: usize },
    /// Meet with 1_k|1_{n-k}, then split.
    Cut { a: String, k: usize },
    /// Standardized sub-partition on the blocks with the given one-based indices.
    Restrict {
        a: String,
        #[arg(value_delimiter = ',')]
        indices: Vec<usize>,
    },
    Shape { a: String },
    /// Type of a comma-separated sequence of positive integers.
    Type { sequence: String },
    /// Standardize disjoint sets written like partitions, e.g. `2,7|4`.
    Standardize { sets: String },
    Bell { n: usize },
    Interval { lower: String, upper: String },
}

enum Failure {
    Domain(Error),
    Usage(String, String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

/// What a command produced, before formatting.
enum Output {
    /// Printed as text unless `--json`.
    Scalar { text: String, json: Value },
    /// Printed as JSON unless `--text`.
    Structured { text: String, json: Value },
    Report(verify::VerifySuiteReport),
}

fn integer(digits: String) -> Value {
    digits.parse::<i64>().map(Value::from).unwrap_or(Value::String(digits))
}

fn partition_out(a: &SetPartition) -> Output {
    Output::Scalar { text: a.to_string(), json: serde_json::to_value(a).expect("serializable") }
}

fn structured<T: Serialize + std::fmt::Display>(x: &T) -> Output {
    Output::Structured { text: x.to_string(), json: serde_json::to_value(x).expect("serializable") }
}

fn structured_debug<T: Serialize + std::fmt::Debug>(x: &T) -> Output {
    Output::Structured { text: format!("{x:?}"), json: serde_json::to_value(x).expect("serializable") }
}

fn list_out(items: &[SetPartition]) -> Output {
    let text = items.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("\n");
    Output::Scalar { text, json: serde_json::to_value(items).expect("serializable") }
}

fn pair_out(pair: Option<(SetPartition, SetPartition)>) -> Output {
    match pair {
        Some((b, c)) => Output::Scalar { text: format!("{b} {c}"), json: serde_json::json!([b, c]) },
        None => Output::Scalar { text: "none".into(), json: Value::Null },
    }
}

fn run_op(op: Op) -> Result<Output, Failure> {
    let p = |s: &str| input::partition(s);
    Ok(match op {
        Op::Meet { a, b } => partition_out(&p(&a)?.meet(&p(&b)?)?),
        Op::Join { a, b } => partition_out(&p(&a)?.join(&p(&b)?)?),
        Op::Concat { a, b } => partition_out(&p(&a)?.concat(&p(&b)?)),
        Op::Refines { a, b } => {
            let r = p(&a)?.refines(&p(&b)?)?;
            Output::Scalar { text: r.to_string(), json: Value::Bool(r) }
        }
        Op::Split { a, k } => pair_out(p(&a)?.split(k)?),
        Op::Cut { a, k } => pair_out(Some(p(&a)?.cut(k)?)),
        Op::Restrict { a, indices } => partition_out(&p(&a)?.restrict(&indices)?),
        Op::Shape { a } => {
            let shape = p(&a)?.shape();
            let text = shape.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
            Output::Scalar { text, json: serde_json::to_value(shape.parts()).expect("serializable") }
        }
        Op::Type { sequence } => {
            let seq = sequence
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| {
                    s.trim().parse::<u32>().map_err(|e| Error::Syntax { input: sequence.clone(), reason: e.to_string() })
                })
                .collect::<Result<Vec<u32>, Error>>()?;
            partition_out(&type_of(&seq))
        }
        Op::Standardize { sets } => partition_out(&standardize(parse_blocks(&input::resolve(&sets)?)?)?),
        Op::Bell { n } => {
            let b = bell(n).to_string();
            Output::Scalar { text: b.clone(), json: integer(b) }
        }
        Op::Interval { lower, upper } => list_out(&interval(&p(&lower)?, &p(&upper)?)?),
    })
}

fn run(command: Command) -> Result<Output, Failure> {
    Ok(match command {
        Command::Enumerate { n } => list_out(&enumerate(n).collect::<Vec<_>>()),
        Command::Mobius { lower, upper, product_form } => {
            let (b, a) = (input::partition(&lower)?, input::partition(&upper)?);
            let v = if product_form { mobius_product_form(&b, &a)? } else { mobius(&b, &a)? };
            Output::Scalar { text: v.to_string(), json: integer(v.to_string()) }
        }
        Command::Op(op) => run_op(op)?,
        Command::Convert { from, to, element } => {
            let e = input::element(&element, from)?;
            if let Some(from) = from {
                if e.basis() != from {
                    return Err(Error::BasisMismatch { left: from.to_string(), right: e.basis().to_string() }.into());
                }
            }
            structured(&e.convert(to))
        }
        Command::Mul { basis, left, right } => {
            let a = input::element(&left, basis)?;
            let b = input::element(&right, basis)?.convert(a.basis());
            let product = a.multiply(&b)?;
            structured(&product.convert(basis.unwrap_or(a.basis())))
        }
        Command::Coproduct { kind, basis, element } => {
            let e = input::element(&element, basis)?;
            let t = match (kind, e.basis()) {
                (Kind::External, Basis::X) => e.coproduct_external_x()?,
                (Kind::External, _) => e.coproduct_external()?,
                (Kind::Internal, _) => e.coproduct_internal(),
            };
            structured(&t)
        }
        Command::Idempotent { algebra, label } => structured_debug(&algebra.idempotent(&input::partition(&label)?)),
        Command::Induct { algebra, left, right } => {
            structured_debug(&algebra.induct(&input::partition(&left)?, &input::partition(&right)?))
        }
        Command::Restrict { algebra, label, k } => {
            let a = input::partition(&label)?;
            match k {
                Some(k) => structured_debug(&algebra.restrict(k, &a)?),
                None => structured_debug(&algebra.coproduct_restriction(&a)),
            }
        }
        Command::Character { algebra, module, at } => {
            let v = algebra.character(&input::partition(&module)?, &input::partition(&at)?)?;
            Output::Scalar { text: v.to_string(), json: Value::from(v) }
        }
        Command::Frobenius { algebra, module } => {
            let image: Element = input::module_sum(&module, algebra)?.frobenius();
            structured(&image)
        }
        Command::Verify { suite, max_n, jobs, timing } => {
            let suite: Suite = suite.parse().map_err(|e: verify::VerifyError| Failure::Usage(e.name().into(), e.to_string()))?;
            let jobs = jobs.unwrap_or_else(|| std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1));
            let mut report =
                verify::run(suite, max_n, jobs).map_err(|e| Failure::Usage(e.name().into(), e.to_string()))?;
            if timing {
                if let Some(ms) = report.duration_ms {
                    eprintln!("verify {}: {ms} ms", report.suite);
                }
            } else {
                report.duration_ms = None;
            }
            Output::Report(report)
        }
    })
}

fn render(output: &Output, json: bool, text: bool) -> String {
    let pretty = |v: &Value| serde_json::to_string(v).expect("serializable");
    match output {
        Output::Scalar { text: t, json: j } => {
            if json {
                pretty(j)
            } else {
                t.clone()
            }
        }
        Output::Structured { text: t, json: j } => {
            if text {
                t.clone()
            } else {
                pretty(j)
            }
        }
        Output::Report(r) => {
            if json {
                serde_json::to_string_pretty(r).expect("serializable")
            } else {
                r.to_string()
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, text, out) = (cli.json, cli.text, cli.out);
    let result = run(cli.command).and_then(|output| {
        let failed = matches!(&output, Output::Report(r) if !r.passed);
        let mut rendered = render(&output, json, text);
        rendered.push('\n');
        match &out {
            Some(path) => fs::write(path, rendered).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(rendered.as_bytes()).map_err(|e| Failure::Io(e.to_string()))?;
            }
        }
        Ok(failed)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Usage(name, msg)) => {
            eprintln!("{name}: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(3)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("IoError: {msg}");
            ExitCode::from(3)
        }
    }
}
