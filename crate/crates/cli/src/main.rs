//! Command-line front end: single queries, listings, and reproduction of
//! the published count tables.
//!
//! Exit codes: 0 success, 1 domain error (or an enumeration cut short by
//! the time budget), 2 malformed input.

use balanced_ideals::cache;
use balanced_ideals::criteria;
use balanced_ideals::error::Error;
use balanced_ideals::ideals::{self, EnumerateOptions};
use balanced_ideals::parabolic::Quotient;
use balanced_ideals::weyl::DEFAULT_CAPACITY;
use balanced_ideals::{CoxeterDiagram, GroupTable, MultiplicityProfile, SimpleSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::sync::Arc;
use std::time::{Duration, Instant};

mod output;
mod tables;

#[derive(Parser)]
#[command(
    name = "balanced-ideals",
    version,
    about = "Exact enumeration of balanced ideals in finite Weyl group quotients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the enumeration (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Directory for cached group tables (default: $BALANCED_IDEALS_CACHE_DIR).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    /// Never read or write the table cache.
    #[arg(long, global = true)]
    no_cache: bool,

    /// Bound on |W| for group enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_CAPACITY)]
    capacity: u64,

    /// Soft wall-clock cap in seconds; a cut-off enumeration reports its
    /// count so far as a lower bound and exits nonzero.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct GroupArgs {
    /// Series label, e.g. A3, C7, F4, or a product like A1xA1.
    #[arg(long = "type", short = 't', conflicts_with = "matrix_file")]
    type_label: Option<String>,

    /// Matrix file: rank line, Coxeter matrix, optional Cartan block.
    #[arg(long)]
    matrix_file: Option<PathBuf>,
}

#[derive(Args)]
struct QuotientArgs {
    #[command(flatten)]
    group: GroupArgs,

    /// θ as 1-based comma-separated indices, or `all`.
    #[arg(long)]
    left: String,

    /// η as 1-based comma-separated indices, or `all`.
    #[arg(long)]
    right: String,
}

#[derive(Args)]
struct ProfileArgs {
    /// Root-space multiplicity profile.
    #[arg(long, value_enum, default_value_t = ProfileKind::Split)]
    profile: ProfileKind,

    /// Custom multiplicity table file (one `coordinates… weight` line per
    /// positive root); overrides --profile.
    #[arg(long)]
    profile_file: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProfileKind {
    Split,
    Complex,
}

#[derive(Subcommand)]
enum Command {
    /// Count the balanced ideals of W_{θ,η}.
    Count(QuotientArgs),

    /// List the balanced ideals with generators, sizes and invariances.
    List {
        #[command(flatten)]
        quotient: QuotientArgs,
        #[command(flatten)]
        profile: ProfileArgs,
        /// Fail if more than this many ideals exist.
        #[arg(long)]
        limit: Option<u64>,
    },

    /// Report whether any balanced ideal exists (no enumeration needed).
    Exists(QuotientArgs),

    /// Minimal balanced ideal codimension of the group.
    Mbcd {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        profile: ProfileArgs,
    },

    /// Describe the double-coset poset W_{θ,η}.
    QuotientInfo {
        #[command(flatten)]
        quotient: QuotientArgs,
        /// Maximum number of coset rows to print.
        #[arg(long, default_value_t = 100)]
        limit: usize,
    },

    /// The C-series chain quotient report.
    SpChain {
        #[arg(long)]
        n: usize,
    },

    /// Reproduce a published count table.
    Table {
        #[arg(value_enum)]
        name: tables::TableName,
        /// Largest n for the grassmannian-sl table (even rows 2..=n).
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Largest p for the so-pq table.
        #[arg(long, default_value_t = 6)]
        max_p: usize,
        /// Allow the p = 7 row of so-pq (hours of compute).
        #[arg(long)]
        allow_stretch: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads.unwrap_or(0))
        .build()
        .expect("thread pool");
    let status = pool.install(|| match run(&cli) {
        Ok(status) => status,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_malformed_input() {
                2
            } else {
                1
            }
        }
    });
    std::process::exit(status);
}

/// Execution context shared by the subcommands.
pub(crate) struct Context {
    cache_dir: Option<PathBuf>,
    capacity: u64,
    pub(crate) deadline: Option<Instant>,
    pub(crate) format: Format,
}

impl Context {
    fn table(&self, group: &GroupArgs) -> Result<Arc<GroupTable>, Error> {
        let diagram = match (&group.type_label, &group.matrix_file) {
            (Some(label), None) => CoxeterDiagram::parse(label)?,
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::MalformedInput(format!("cannot read {}: {e}", path.display()))
                })?;
                CoxeterDiagram::from_matrix_file(&text)?
            }
            _ => {
                return Err(Error::MalformedInput(
                    "exactly one of --type or --matrix-file is required".into(),
                ))
            }
        };
        if diagram.defaulted_orientation() {
            eprintln!(
                "note: the Coxeter matrix does not orient multiple bonds; \
                 using the B convention (higher index short). Balanced-ideal \
                 counts are unaffected."
            );
        }
        self.table_for(&diagram)
    }

    pub(crate) fn table_for(&self, diagram: &CoxeterDiagram) -> Result<Arc<GroupTable>, Error> {
        let (table, _hit) =
            cache::load_or_build(self.cache_dir.as_deref(), diagram, self.capacity)?;
        Ok(Arc::new(table))
    }

    pub(crate) fn quotient(&self, args: &QuotientArgs) -> Result<(Arc<GroupTable>, Quotient), Error> {
        let table = self.table(&args.group)?;
        let rank = table.rank();
        let theta = SimpleSet::parse(&args.left, rank)?;
        let eta = SimpleSet::parse(&args.right, rank)?;
        let quotient = Quotient::new(table.clone(), theta, eta)?;
        Ok((table, quotient))
    }

    fn profile(
        &self,
        table: &GroupTable,
        args: &ProfileArgs,
    ) -> Result<MultiplicityProfile, Error> {
        let rs = table.root_system();
        if let Some(path) = &args.profile_file {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::MalformedInput(format!("cannot read {}: {e}", path.display()))
            })?;
            return MultiplicityProfile::parse_custom(rs, &text);
        }
        Ok(match args.profile {
            ProfileKind::Split => MultiplicityProfile::split(rs),
            ProfileKind::Complex => MultiplicityProfile::complex(rs),
        })
    }

    pub(crate) fn enumerate(
        &self,
        quotient: &Quotient,
        list: bool,
        limit: Option<u64>,
        dim_profile: Option<&MultiplicityProfile>,
    ) -> Result<ideals::Enumeration, Error> {
        ideals::enumerate_balanced(
            quotient,
            &EnumerateOptions {
                list,
                limit,
                dim_profile,
                split_depth: None,
                deadline: self.deadline,
            },
        )
    }
}

fn run(cli: &Cli) -> Result<i32, Error> {
    let cache_dir = if cli.no_cache {
        None
    } else {
        cli.cache_dir.clone().or_else(|| {
            std::env::var_os(cache::CACHE_DIR_ENV).map(PathBuf::from)
        })
    };
    let ctx = Context {
        cache_dir,
        capacity: cli.capacity,
        deadline: cli
            .budget_seconds
            .map(|s| Instant::now() + Duration::from_secs(s)),
        format: cli.format,
    };

    match &cli.command {
        Command::Count(args) => {
            let (_, quotient) = ctx.quotient(args)?;
            let result = ctx.enumerate(&quotient, false, None, None)?;
            output::print_count(&ctx, args, &quotient, &result);
            Ok(if result.complete { 0 } else { 1 })
        }
        Command::Exists(args) => {
            let (_, quotient) = ctx.quotient(args)?;
            let exists = !quotient.has_fixed_point()?;
            output::print_exists(&ctx, args, &quotient, exists);
            Ok(0)
        }
        Command::List {
            quotient: args,
            profile,
            limit,
        } => {
            let (table, quotient) = ctx.quotient(args)?;
            let profile = ctx.profile(&table, profile)?;
            let result = ctx.enumerate(&quotient, true, *limit, Some(&profile))?;
            output::print_list(&ctx, args, &quotient, &result);
            Ok(if result.complete { 0 } else { 1 })
        }
        Command::Mbcd { group, profile } => {
            let table = ctx.table(group)?;
            let profile = ctx.profile(&table, profile)?;
            let value = criteria::mbcd(&table, &profile);
            output::print_mbcd(&ctx, &table, value);
            Ok(0)
        }
        Command::QuotientInfo {
            quotient: args,
            limit,
        } => {
            let (table, quotient) = ctx.quotient(args)?;
            output::print_quotient_info(&ctx, &table, &quotient, *limit);
            Ok(0)
        }
        Command::SpChain { n } => {
            let report = criteria::symplectic_chain_report(*n)?;
            output::print_sp_chain(&ctx, &report);
            Ok(0)
        }
        Command::Table {
            name,
            max_n,
            max_p,
            allow_stretch,
        } => tables::run_table(&ctx, *name, *max_n, *max_p, *allow_stretch),
    }
}
