//! The `qisg` command line: structure files, the model registry, and
//! theorem checks with text or JSON reports.
//!
//! Exit codes: 0 when every law passes, 1 on a law failure, 2 on bad input.

pub mod commands;
pub mod models;
pub mod report;
mod sample;
pub mod structure;
pub mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::commands::TorusParams;
use crate::models::{AnyAlgebroid, Params};
use crate::report::{Format, Report};
use crate::structure::{parse_structure, Structure};

#[derive(Parser, Debug)]
#[command(name = "qisg", version, about = "Check quantum inverse semigroups, Hopf algebroids and biretractions")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    /// Adds seeded spot checks on random rational combinations.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 16, global = true)]
    pub samples: usize,
    /// Degree window for the Laurent algebroid and the quantum torus.
    #[arg(long = "max-degree", global = true)]
    pub max_degree: Option<i64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Quantum inverse semigroups.
    #[command(subcommand)]
    Qisg(QisgCmd),
    #[command(subcommand)]
    Semigroup(SemigroupCmd),
    #[command(subcommand)]
    Groupoid(GroupoidCmd),
    #[command(subcommand)]
    Algebroid(AlgebroidCmd),
    /// Biretraction arithmetic.
    #[command(subcommand)]
    Brt(BrtCmd),
    /// Check one theorem by id.
    Verify {
        id: String,
        #[arg(long)]
        model: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Subcommand, Debug)]
pub enum QisgCmd {
    /// QISG1–QISG4 on a built-in model or a `qisg`/`semigroup` file.
    Check(Target),
}

#[derive(Subcommand, Debug)]
pub enum SemigroupCmd {
    Check(Target),
}

#[derive(Subcommand, Debug)]
pub enum GroupoidCmd {
    /// Enumerate bisections and their semigroup.
    Bisections {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        check_inverse: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgebroidCmd {
    /// Hopf algebroid axioms.
    Check(Target),
    /// Enumerate biretractions and check the regular-monoid laws.
    Biretractions {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        table: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum BrtCmd {
    /// `α∗β` by index, label, or `q_α:t_α` on the torus.
    Convolve {
        #[command(flatten)]
        target: Target,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
}

#[derive(Args, Debug)]
pub struct Target {
    /// A built-in model name.
    pub model: Option<String>,
    /// A structure file instead of a model.
    #[arg(long, conflicts_with = "model")]
    pub file: Option<PathBuf>,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub points: usize,
    #[arg(long, default_value = "Z2")]
    pub group: String,
    /// Groupoid for `weakhopf`: pair, product, bundle or group.
    #[arg(long, default_value = "product")]
    pub groupoid: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub q: String,
    #[arg(long = "q-alpha", default_value = "1", allow_hyphen_values = true)]
    pub q_alpha: String,
    #[arg(long = "t-alpha", default_value_t = 0, allow_hyphen_values = true)]
    pub t_alpha: i64,
    /// Mutation index for `algebroid check mutation`.
    #[arg(long, default_value_t = 0)]
    pub index: usize,
}

impl ParamArgs {
    fn params(&self, max_degree: Option<i64>) -> Params {
        Params {
            n: self.n,
            points: self.points,
            group: self.group.clone(),
            groupoid: self.groupoid.clone(),
            q: self.q.clone(),
            window: max_degree.unwrap_or(qisg_core::algebroid::DEFAULT_WINDOW),
            index: self.index,
        }
    }

    fn torus(&self) -> Result<TorusParams, String> {
        commands::parse_torus_param(&format!("{}:{}", self.q_alpha, self.t_alpha))
    }
}

/// What a run produced: exit code and the two output streams.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn load(path: &PathBuf) -> Result<Structure, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_structure(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn need_model(t: &Target) -> Result<&str, String> {
    t.model.as_deref().ok_or_else(|| "give a model name or --file".to_string())
}

fn algebroid_target(t: &Target, p: &Params) -> Result<AnyAlgebroid, String> {
    let r = match &t.file {
        Some(f) => match load(f)? {
            Structure::Algebroid(r) => r,
            s => return Err(format!("expected an algebroid file, found kind {:?}", s.kind())),
        },
        None => p.algebroid_ref(need_model(t)?),
    };
    models::algebroid(&r)
}

fn echo(args: &[String]) -> String {
    let mut parts: Vec<&str> = args.iter().skip(1).map(String::as_str).collect();
    parts.insert(0, "qisg");
    parts.join(" ")
}

fn execute(cli: &Cli, r: &mut Report) -> Result<(), String> {
    let seed = cli.seed;
    r.seed = seed;
    match &cli.command {
        Command::Qisg(QisgCmd::Check(t)) => {
            let p = t.params.params(cli.max_degree);
            let q = match &t.file {
                Some(f) => match load(f)? {
                    Structure::Qisg(q) => q,
                    Structure::Semigroup(s) => qisg_core::qisg::qisg_from_inverse_semigroup(&s).map_err(|e| e.to_string())?,
                    s => return Err(format!("expected a qisg or semigroup file, found kind {:?}", s.kind())),
                },
                None => models::qisg(need_model(t)?, &p)?,
            };
            commands::qisg_check(r, &q);
            if let Some(s) = seed {
                for (name, w) in sample::qisg(&q, s, cli.samples) {
                    r.law(name, w);
                }
            }
        }
        Command::Semigroup(SemigroupCmd::Check(t)) => {
            let p = t.params.params(cli.max_degree);
            let s = match &t.file {
                Some(f) => match load(f)? {
                    Structure::Semigroup(s) => s,
                    s => return Err(format!("expected a semigroup file, found kind {:?}", s.kind())),
                },
                None => models::semigroup(need_model(t)?, &p)?,
            };
            commands::semigroup_check(r, &s);
            if let Some(sd) = seed {
                r.law("sampled associativity", sample::semigroup(&s, sd, cli.samples));
            }
        }
        Command::Groupoid(GroupoidCmd::Bisections { target: t, check_inverse }) => {
            let p = t.params.params(cli.max_degree);
            let g = match &t.file {
                Some(f) => match load(f)? {
                    Structure::Groupoid(g) => g,
                    s => return Err(format!("expected a groupoid file, found kind {:?}", s.kind())),
                },
                None => models::groupoid(need_model(t)?, &p)?,
            };
            commands::groupoid_bisections(r, &g, *check_inverse)?;
        }
        Command::Algebroid(AlgebroidCmd::Check(t)) => {
            let p = t.params.params(cli.max_degree);
            let m = algebroid_target(t, &p)?;
            commands::algebroid_check(r, &m);
            if let Some(s) = seed {
                let w = match &m {
                    AnyAlgebroid::Finite(x) => sample::algebroid(x, s, cli.samples),
                    AnyAlgebroid::Laurent(x) => sample::algebroid(x, s, cli.samples),
                    AnyAlgebroid::Torus(x) => sample::algebroid(x, s, cli.samples),
                };
                r.law("sampled associativity", w);
            }
        }
        Command::Algebroid(AlgebroidCmd::Biretractions { target: t, table }) => {
            let p = t.params.params(cli.max_degree);
            let m = algebroid_target(t, &p)?;
            commands::algebroid_biretractions(r, &m, *table, &t.params.torus()?)?;
        }
        Command::Brt(BrtCmd::Convolve { target: t, left, right }) => {
            let p = t.params.params(cli.max_degree);
            let m = algebroid_target(t, &p)?;
            commands::brt_convolve(r, &m, left, right)?;
        }
        Command::Verify { id, model, params } => {
            let p = params.params(cli.max_degree);
            verify::verify(r, id, model.as_deref(), &p, &params.torus()?)?;
        }
    }
    Ok(())
}

/// Parse `args` (including the program name) and run.
pub fn run(args: &[String]) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let start = Instant::now();
    let mut r = Report::new(echo(args));
    match execute(&cli, &mut r) {
        Ok(()) => {
            r.elapsed = start.elapsed();
            Outcome { code: if r.passed { 0 } else { 1 }, stdout: r.render(cli.format), stderr: String::new() }
        }
        Err(e) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
