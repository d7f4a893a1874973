//! `ybrace`: validation, conversion, construction, enumeration and sweeps
//! for finite braces and involutive Yang-Baxter solutions.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{CliError, Format, Output};

#[derive(Parser, Debug)]
#[command(name = "ybrace", version, about = "Finite braces and involutive Yang-Baxter solutions")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Worker threads for enumeration and sweeps (0 = all cores).
    #[arg(long, default_value_t = 0, global = true)]
    jobs: usize,

    /// Run the invariant suite of the subcommand's module instead.
    #[arg(long, global = true)]
    selftest: bool,

    /// Write the report to this file instead of standard output.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Input {
    /// Solution file (`n`, `sigma`).
    #[arg(long)]
    pub solution: Option<PathBuf>,
    /// Brace file (`n`, `add`, `mul`).
    #[arg(long)]
    pub brace: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    Direct,
    Wreath,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a solution or brace file.
    Validate(Input),
    /// The solution associated with a left brace.
    FromBrace {
        #[arg(long)]
        brace: Option<PathBuf>,
    },
    /// The double-cover solution on `G × {1, 2}` of a left brace.
    DoubleCover {
        #[arg(long)]
        brace: Option<PathBuf>,
    },
    /// Retraction of a solution, once or down to the last level.
    Retract {
        #[arg(long)]
        solution: Option<PathBuf>,
        /// Print every retraction size instead of the first quotient.
        #[arg(long)]
        chain: bool,
    },
    /// Multipermutation level of a solution or brace.
    Mpl {
        #[command(flatten)]
        input: Input,
        /// For a brace, retract its solution instead of quotienting by socles.
        #[arg(long)]
        via_solution: bool,
    },
    /// Socle of a brace.
    Socle {
        #[arg(long)]
        brace: Option<PathBuf>,
    },
    /// Quotient of a brace by an ideal.
    Quotient {
        #[arg(long)]
        brace: Option<PathBuf>,
        /// Comma-separated members of the ideal.
        #[arg(long, value_delimiter = ',', conflicts_with = "socle")]
        ideal: Option<Vec<usize>>,
        /// Quotient by the socle.
        #[arg(long)]
        socle: bool,
    },
    /// The permutation group generated by the maps `σ_x`.
    Ybgroup {
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// The left brace on the permutation group of a solution.
    IybBrace {
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Direct or wreath product of two left braces.
    Product {
        #[arg(long)]
        left: Option<PathBuf>,
        #[arg(long)]
        right: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ProductKind::Direct)]
        kind: ProductKind,
    },
    /// Two-sided brace on the augmentation ideal of the group algebra of `(Z/2)^n` over F2.
    Augbrace {
        #[arg(short)]
        n: Option<usize>,
        /// Report the multipermutation level from the ideal powers.
        #[arg(long)]
        mpl: bool,
    },
    /// Two-sided brace from a group of nilpotency class at most 2.
    Class2 {
        /// Group name: cyclic:N, abelian:AxB, dihedral:M, quaternion, symmetric:K, heisenberg:M.
        #[arg(long)]
        group: Option<String>,
        /// Use the normal-form construction with this central subgroup.
        #[arg(long, value_delimiter = ',', requires = "generators")]
        center: Option<Vec<usize>>,
        /// Generators of the group modulo the central subgroup.
        #[arg(long, value_delimiter = ',', requires = "center")]
        generators: Option<Vec<usize>>,
    },
    /// Check the embedding `g ↦ g − 1` into the adjoint group of the augmentation ideal.
    Embed {
        #[arg(short)]
        p: Option<usize>,
        #[arg(long)]
        group: Option<String>,
    },
    /// Exhaustive enumeration of solutions or braces.
    Enumerate {
        /// Enumerate solutions of this size.
        #[arg(short, conflicts_with_all = ["group", "order"])]
        n: Option<usize>,
        /// Enumerate braces with this additive group.
        #[arg(long, conflicts_with = "order")]
        group: Option<String>,
        /// Enumerate braces of this order over every abelian group.
        #[arg(long)]
        order: Option<usize>,
        /// Keep every labelled object instead of one per isomorphism class.
        #[arg(long)]
        raw: bool,
        /// Print one census line per solution class.
        #[arg(long)]
        census: bool,
    },
    /// Check a structural statement over the enumerated corpus.
    Sweep {
        /// abelian-retractable, squarefree-decomposable, retract-socle, twosided-socle,
        /// double-cover, square-structure, radical-roundtrip, or all.
        #[arg(long)]
        theorem: Option<String>,
        /// Largest solution size or brace order.
        #[arg(long)]
        max_n: Option<usize>,
        /// Check every labelled solution, not one per class.
        #[arg(long)]
        raw: bool,
    },
    /// Export the named fixtures.
    Fixtures {
        /// Print this fixture instead of listing all of them.
        #[arg(long)]
        name: Option<String>,
        /// Write every fixture into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate(_) => "validate",
            Command::FromBrace { .. } => "from-brace",
            Command::DoubleCover { .. } => "double-cover",
            Command::Retract { .. } => "retract",
            Command::Mpl { .. } => "mpl",
            Command::Socle { .. } => "socle",
            Command::Quotient { .. } => "quotient",
            Command::Ybgroup { .. } => "ybgroup",
            Command::IybBrace { .. } => "iyb-brace",
            Command::Product { .. } => "product",
            Command::Augbrace { .. } => "augbrace",
            Command::Class2 { .. } => "class2",
            Command::Embed { .. } => "embed",
            Command::Enumerate { .. } => "enumerate",
            Command::Sweep { .. } => "sweep",
            Command::Fixtures { .. } => "fixtures",
        }
    }
}

fn dispatch(cmd: Command) -> Result<Output, CliError> {
    use commands::*;
    match cmd {
        Command::Validate(input) => validate(&input),
        Command::FromBrace { brace } => from_brace(brace.as_deref()),
        Command::DoubleCover { brace } => double_cover(brace.as_deref()),
        Command::Retract { solution, chain } => retract(solution.as_deref(), chain),
        Command::Mpl { input, via_solution } => mpl(&input, via_solution),
        Command::Socle { brace } => socle(brace.as_deref()),
        Command::Quotient { brace, ideal, socle } => quotient(brace.as_deref(), ideal.as_deref(), socle),
        Command::Ybgroup { solution } => ybgroup(solution.as_deref()),
        Command::IybBrace { solution } => iyb_brace(solution.as_deref()),
        Command::Product { left, right, kind } => product(left.as_deref(), right.as_deref(), kind),
        Command::Augbrace { n, mpl } => augbrace(n, mpl),
        Command::Class2 { group, center, generators } => class2(group.as_deref(), center.as_deref(), generators.as_deref()),
        Command::Embed { p, group } => embed(p, group.as_deref()),
        Command::Enumerate { n, group, order, raw, census } => enumerate(n, group.as_deref(), order, raw, census),
        Command::Sweep { theorem, max_n, raw } => sweep(theorem.as_deref(), max_n, raw),
        Command::Fixtures { name, out_dir } => fixtures(name.as_deref(), out_dir.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = if cli.selftest {
        Ok(commands::selftest(cli.command.name()))
    } else {
        dispatch(cli.command)
    };
    output::emit(result, cli.format, cli.output.as_deref())
}
