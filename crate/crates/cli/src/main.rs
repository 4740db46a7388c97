mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail};
use clap::{Args, Parser, Subcommand, ValueEnum};
use operad_gb_core::{
    buchberger_with, cross_validate_with, dimension_series, normal_form, parse_poly, BuchbergerOptions, Error,
    GradedContext, GroebnerBasis, Parity, TreePolynomial,
};

/// Environment variable capping the number of spanning vectors per arity in `verify`.
const MAX_VECTORS_ENV: &str = "OPERAD_GB_MAX_VECTORS";

#[derive(Parser)]
#[command(name = "operad-gb", version, about = "Groebner bases and dimensions for operads on one m-ary operation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the reduced Groebner basis of the relations.
    Gb(Config),
    /// Count normal monomials in every arity up to --n-max.
    Dims(Config),
    /// Print the normal form of a polynomial.
    Reduce {
        /// Polynomial in nonassociative notation, e.g. "((***)**)".
        polynomial: String,
        #[command(flatten)]
        config: Config,
    },
    /// Cross-check dimensions against an independent rank computation.
    Verify {
        /// Check these polynomials (same file format) instead of a completed basis.
        #[arg(long)]
        basis: Option<PathBuf>,
        #[command(flatten)]
        config: Config,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Config {
    /// Branching arity of the generator.
    #[arg(short = 'm', default_value_t = 3)]
    m: usize,
    /// Homological degree parity of the generator.
    #[arg(long, value_enum, default_value = "even")]
    parity: ParityArg,
    /// Named relation set [default: pa].
    #[arg(long, conflicts_with_all = ["file", "relations"])]
    preset: Option<String>,
    /// Relation file: UTF-8, one polynomial per line, '#' comments.
    #[arg(long, conflicts_with = "relations")]
    file: Option<PathBuf>,
    /// Inline relation; may be repeated.
    #[arg(long)]
    relations: Vec<String>,
    /// Largest SCM arity processed during completion.
    #[arg(long, default_value_t = 15)]
    arity_bound: usize,
    /// Largest arity for dims and verify.
    #[arg(long, default_value_t = 13)]
    n_max: usize,
    /// Stop completion after this many critical pairs.
    #[arg(long)]
    max_pairs: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// List normal monomials in dims output.
    #[arg(long)]
    list: bool,
    /// Worker threads for verify.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Refuse bounds above this arity.
    #[arg(long, default_value_t = 17)]
    max_arity: usize,
}

enum Status {
    Ok,
    Mismatch,
    Incomplete,
}

impl Config {
    fn ctx(&self) -> anyhow::Result<GradedContext> {
        let parity = match self.parity {
            ParityArg::Even => Parity::Even,
            ParityArg::Odd => Parity::Odd,
        };
        Ok(GradedContext::new(self.m, parity)?)
    }

    fn relations(&self, ctx: GradedContext) -> anyhow::Result<Vec<TreePolynomial>> {
        if let Some(path) = &self.file {
            return input::read_relation_file(ctx, path);
        }
        if !self.relations.is_empty() {
            let mut out = Vec::new();
            for (k, text) in self.relations.iter().enumerate() {
                out.extend(input::parse_relation_text(ctx, text, &format!("--relations #{}", k + 1))?);
            }
            return Ok(out);
        }
        input::preset_relations(ctx, self.preset.as_deref().unwrap_or("pa"))
    }

    fn check_limits(&self) -> anyhow::Result<()> {
        if self.arity_bound > self.max_arity || self.n_max > self.max_arity {
            bail!("bounds above arity {} need --max-arity", self.max_arity);
        }
        if self.jobs == 0 {
            bail!("--jobs must be at least 1");
        }
        Ok(())
    }

    fn basis(&self) -> anyhow::Result<GroebnerBasis> {
        self.check_limits()?;
        let ctx = self.ctx()?;
        let relations = self.relations(ctx)?;
        let options = BuchbergerOptions { arity_bound: self.arity_bound, max_pairs: self.max_pairs };
        Ok(buchberger_with(&relations, ctx, options, &mut |_| 0)?)
    }
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("serializable report") + "\n"
}

fn cmd_gb(config: &Config) -> anyhow::Result<Status> {
    let gb = config.basis()?;
    emit(&match config.format {
        Format::Text => report::basis_text(&gb),
        Format::Json => json(&report::basis_report(&gb, &[])),
    });
    Ok(if gb.complete_below_bound() { Status::Ok } else { Status::Incomplete })
}

fn cmd_dims(config: &Config) -> anyhow::Result<Status> {
    let gb = config.basis()?;
    let dims = match dimension_series(&gb, config.n_max, config.list) {
        Ok(d) => d,
        Err(Error::IncompleteBasis { checked, requested }) => {
            eprintln!("basis certified only up to arity {checked}; arity {requested} requested");
            emit(&report::basis_text(&gb));
            return Ok(Status::Incomplete);
        }
        Err(e) => return Err(e.into()),
    };
    emit(&match config.format {
        Format::Text => report::basis_text(&gb) + &report::dims_text(&dims.records),
        Format::Json => json(&report::basis_report(&gb, &dims.records)),
    });
    Ok(Status::Ok)
}

fn cmd_reduce(config: &Config, text: &str) -> anyhow::Result<Status> {
    let ctx = config.ctx()?;
    let f = parse_poly(ctx, text).map_err(|e| match e {
        Error::Parse(p) => anyhow!("polynomial:{}: {}", p.position + 1, p.message),
        other => other.into(),
    })?;
    let gb = config.basis()?;
    let nf = normal_form(&f, gb.gens())?;
    emit(&match config.format {
        Format::Text => format!("{nf}\n"),
        Format::Json => json(&report::ReduceReport { input: report::generator(&f), normal_form: report::generator(&nf) }),
    });
    let certified = f.arity().is_none_or(|n| gb.certifies_arity(n));
    Ok(if certified { Status::Ok } else { Status::Incomplete })
}

fn cmd_verify(config: &Config, claimed: Option<&PathBuf>) -> anyhow::Result<Status> {
    let gb = match claimed {
        Some(path) => {
            config.check_limits()?;
            let ctx = config.ctx()?;
            GroebnerBasis::from_generators(ctx, input::read_relation_file(ctx, path)?)?
        }
        None => config.basis()?,
    };
    let relations = config.relations(gb.ctx())?;
    let cap = match std::env::var(MAX_VECTORS_ENV) {
        Ok(v) => Some(v.parse::<usize>().map_err(|_| anyhow!("{MAX_VECTORS_ENV} must be a number"))?),
        Err(_) => None,
    };
    let gens = gb.gens();
    let jobs = config.jobs;
    let reduces = |vectors: &[TreePolynomial]| -> operad_gb_core::Result<Vec<bool>> {
        let chunk = vectors.len().div_ceil(jobs).max(1);
        std::thread::scope(|s| {
            let workers: Vec<_> = vectors
                .chunks(chunk)
                .map(|part| {
                    s.spawn(move || {
                        part.iter().map(|v| normal_form(v, gens).map(|r| r.is_zero())).collect::<Result<Vec<_>, _>>()
                    })
                })
                .collect();
            let mut out = Vec::with_capacity(vectors.len());
            for w in workers {
                out.extend(w.join().expect("worker panicked")?);
            }
            Ok(out)
        })
    };
    let cv = match cross_validate_with(&gb, &relations, config.n_max, cap, &reduces) {
        Ok(cv) => cv,
        Err(Error::SpanLimit(n)) => {
            eprintln!("more than {n} spanning vectors in one arity; raise {MAX_VECTORS_ENV}");
            return Ok(Status::Incomplete);
        }
        Err(e) => return Err(e.into()),
    };
    emit(&match config.format {
        Format::Text => report::verify_text(&cv),
        Format::Json => json(&report::verify_report(&gb, &cv)),
    });
    Ok(if cv.agrees() { Status::Ok } else { Status::Mismatch })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = match &cli.command {
        Command::Gb(c) => cmd_gb(c),
        Command::Dims(c) => cmd_dims(c),
        Command::Reduce { polynomial, config } => cmd_reduce(config, polynomial),
        Command::Verify { basis, config } => cmd_verify(config, basis.as_ref()),
    };
    eprintln!("time: {:.3?}", start.elapsed());
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Ok(Status::Incomplete) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
