//! Command-line front end. Every subcommand parses its arguments, calls one
//! report builder from `qdaha::report`, and prints the result.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use qdaha::clifford::DEFAULT_GROUP_BOUND;
use qdaha::config::{parse_int_tuple, parse_lambda, Bounds, SessionConfig, VMode};
use qdaha::daha::VanishingConvention;
use qdaha::loops::{matrix_from_json, MatrixJson};
use qdaha::qtorus::{QuantumTorus, DEFAULT_SEARCH_BOUND};
use qdaha::report::{self, OpSource};
use qdaha::rootdata::{LatticeChoice, DEFAULT_WEYL_BOUND};
use qdaha::suite::{run_suite, SuiteConfig, CRITERIA};
use qdaha::Error;

#[derive(Parser, Debug)]
#[command(
    name = "qdaha",
    version,
    about = "Exact computations with quantum tori, DAHA operators and q-loop normal forms"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Built-in root system (A1, A2, A3, A4, B2, C2, D4, G2).
    #[arg(long, global = true, default_value = "A1")]
    root_system: String,
    /// Cartan matrix as JSON (overrides --root-system), or @file.
    #[arg(long, global = true)]
    cartan: Option<String>,
    /// Lattice: root or weight.
    #[arg(long, global = true, default_value = "weight")]
    lattice: LatticeChoice,
    /// `symbolic`, or a rational specialization of v.
    #[arg(long, global = true, default_value = "symbolic")]
    v: VMode,
    /// Seed (defaults to $QTORUS_SEED, else a fixed value).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Emit a single line of machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 2)]
    window_radius: i64,
    #[arg(long, global = true, default_value_t = DEFAULT_GROUP_BOUND)]
    group_bound: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_WEYL_BOUND)]
    weyl_bound: usize,
    #[arg(long, global = true, default_value_t = DEFAULT_SEARCH_BOUND)]
    search_radius: i64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Quantum torus arithmetic.
    #[command(subcommand)]
    Qtorus(QtorusCmd),
    /// Weight modules M_λ and Z_χ.
    #[command(subcommand)]
    Module(ModuleCmd),
    /// Difference-reflection operators.
    #[command(subcommand)]
    Daha(DahaCmd),
    /// Spherical idempotents and subalgebra tests.
    #[command(subcommand)]
    Spherical(SphericalCmd),
    /// Matrix loops.
    #[command(subcommand)]
    Loop(LoopCmd),
    /// Character tables and Clifford counting.
    #[command(subcommand)]
    Clifford(CliffordCmd),
    /// Quadratic and braid relations.
    #[command(subcommand)]
    Relations(RelationsCmd),
    /// Run the acceptance battery.
    Suite {
        /// Comma-separated criterion ids (default: all).
        #[arg(long, value_delimiter = ',')]
        criteria: Vec<u8>,
    },
}

#[derive(Subcommand, Debug)]
enum QtorusCmd {
    /// Product a·b of two elements.
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// W-invariance test and symmetrization.
    Invariant {
        #[arg(long)]
        h: String,
    },
    /// Constructive simplicity certificate.
    Witness {
        #[arg(long)]
        h: String,
    },
}

#[derive(Subcommand, Debug)]
enum ModuleCmd {
    /// Act on the basis vector of M_λ at a window point.
    Act {
        #[arg(long)]
        lambda: String,
        /// Window point, e.g. "(0,0)".
        #[arg(long)]
        at: String,
        /// Apply e^x.
        #[arg(long)]
        x: Option<String>,
        /// Then apply the shift by y.
        #[arg(long)]
        y: Option<String>,
    },
    /// Isotropy group W^λ and its component group.
    Isotropy {
        #[arg(long)]
        lambda: String,
    },
    /// Windowed Z_χ and invariants.
    Zchi {
        #[arg(long)]
        lambda: String,
        /// Character label of W^λ (trivial, sign).
        #[arg(long, default_value = "trivial")]
        chi: String,
    },
}

#[derive(Args, Debug)]
struct OpArgs {
    /// Generator expression, e.g. "T1 T0 T1".
    #[arg(long, conflicts_with = "op")]
    word: Option<String>,
    /// Operator JSON (list of {w, mu, coeff}) or @file.
    #[arg(long)]
    op: Option<String>,
}

#[derive(Subcommand, Debug)]
enum DahaCmd {
    /// Expand an expression into difference-reflection form.
    Op {
        #[command(flatten)]
        src: OpArgs,
    },
    /// Apply an operator to a rational function.
    Apply {
        #[command(flatten)]
        src: OpArgs,
        /// Text such as "x1 + t" or fraction JSON, or @file.
        #[arg(long)]
        f: String,
    },
    /// Membership test for the finite-form conditions.
    Member {
        #[command(flatten)]
        src: OpArgs,
        #[arg(long, default_value = "derived")]
        convention: VanishingConvention,
    },
}

#[derive(Subcommand, Debug)]
enum SphericalCmd {
    /// The idempotent e_v.
    E,
    /// Test whether an operator lies in the spherical subalgebra.
    Check {
        #[command(flatten)]
        src: OpArgs,
        /// Sandwich the operator as e·h·e first.
        #[arg(long)]
        sandwich: bool,
    },
    /// Apply the involution Ξ to an expression.
    Xi {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand, Debug)]
enum LoopCmd {
    /// q-normal form of a matrix loop.
    Nf {
        /// Matrix JSON ({n, entries}) or @file.
        #[arg(long)]
        matrix: String,
    },
}

#[derive(Subcommand, Debug)]
enum CliffordCmd {
    /// Character table of a group.
    Table {
        /// Built-in name or permutation JSON, or @file.
        #[arg(long)]
        group: String,
    },
    /// Clifford count for a normal pair.
    Count {
        #[arg(long, required_unless_present = "lambda")]
        group: Option<String>,
        #[arg(long, requires = "group")]
        normal: Option<String>,
        /// Use the pair W^λ ⊃ W(Δ_{q,s}) of a torus point instead.
        #[arg(long, conflicts_with_all = ["group", "normal"])]
        lambda: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RelationsCmd {
    /// Check quadratic relations at every node and braid relations for every pair.
    Check,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(anyhow::Error),
    Check(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        // Bad input is a usage error; anything the library rejects later is a failed check.
        match e.downcast_ref::<Error>() {
            Some(
                Error::Parse(_) | Error::Schema(_) | Error::Dimension(_) | Error::InvalidDatum(_),
            ) => Failure::Usage(e),
            _ => Failure::Check(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

/// Reads `@path` arguments from disk.
fn arg_text(s: &str) -> anyhow::Result<String> {
    match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).with_context(|| format!("reading {path}")),
        None => Ok(s.to_string()),
    }
}

fn input(s: &str) -> Result<String, Failure> {
    arg_text(s).map_err(Failure::Usage)
}

impl OpArgs {
    fn source(&self) -> Result<OpSource, Failure> {
        match (&self.word, &self.op) {
            (Some(w), None) => Ok(OpSource::Word(w.clone())),
            (None, Some(o)) => Ok(OpSource::Json(input(o)?)),
            _ => Err(Failure::Usage(anyhow::anyhow!(
                "give exactly one of --word or --op"
            ))),
        }
    }
}

fn session(g: &Global) -> Result<SessionConfig, Failure> {
    let cartan = match &g.cartan {
        Some(c) => Some(
            serde_json::from_str(&input(c)?)
                .map_err(|e| Failure::Usage(anyhow::anyhow!("--cartan: {e}")))?,
        ),
        None => None,
    };
    let seed = match g.seed {
        Some(s) => s,
        None => SessionConfig::seed_from_env()?,
    };
    let cfg = SessionConfig {
        root_system: g.root_system.clone(),
        cartan,
        lattice: g.lattice,
        v: g.v.clone(),
        seed,
        bounds: Bounds {
            window_radius: g.window_radius,
            group_order: g.group_bound,
            weyl_order: g.weyl_bound,
            search_radius: g.search_radius,
        },
    };
    cfg.validate()?;
    Ok(cfg)
}

/// Prints reports with the session header attached.
struct Output<'a> {
    cfg: &'a SessionConfig,
    json: bool,
}

impl Output<'_> {
    fn emit<T: Serialize>(&self, report: &T, summary: &str) -> Result<(), Failure> {
        let mut value = serde_json::to_value(report).map_err(|e| Failure::Check(e.into()))?;
        if let Some(obj) = value.as_object_mut() {
            obj.insert("config".into(), self.cfg.header());
        }
        let text = if self.json {
            serde_json::to_string(&value)
        } else {
            serde_json::to_string_pretty(&value)
        }
        .map_err(|e| Failure::Check(e.into()))?;
        let mut out = std::io::stdout().lock();
        // Text mode shows the summary alone when there is one.
        let _ = if self.json || summary.is_empty() {
            writeln!(out, "{text}")
        } else {
            writeln!(out, "{summary}")
        };
        Ok(())
    }
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check(anyhow::anyhow!("{what}")))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let cfg = session(&cli.global)?;
    let out = Output {
        cfg: &cfg,
        json: cli.global.json,
    };
    let bounds = &cfg.bounds;
    match cli.command {
        Command::Qtorus(cmd) => {
            let d = cfg.datum()?;
            let t = QuantumTorus::from_datum(&d);
            match cmd {
                QtorusCmd::Mul { a, b } => {
                    let a = report::helement_from_json(&t, &input(&a)?)?;
                    let b = report::helement_from_json(&t, &input(&b)?)?;
                    out.emit(&report::qtorus_mul(&t, &a, &b)?, "")
                }
                QtorusCmd::Invariant { h } => {
                    let g = cfg.weyl(&d)?;
                    let h = report::helement_from_json(&t, &input(&h)?)?;
                    let r = report::qtorus_invariant(&t, &g, d.rank, &h)?;
                    out.emit(&r, &format!("W-invariant: {}", r.invariant))
                }
                QtorusCmd::Witness { h } => {
                    let h = report::helement_from_json(&t, &input(&h)?)?;
                    let r = report::qtorus_witness(&t, &h, bounds.search_radius)?;
                    out.emit(&r, &format!("separating vector {:?}", r.separating_vector))
                }
            }
        }
        Command::Module(cmd) => {
            let d = cfg.datum()?;
            match cmd {
                ModuleCmd::Act { lambda, at, x, y } => {
                    let lambda = parse_lambda(&d, &lambda)?;
                    let at = parse_int_tuple(&at)?;
                    let x = x.as_deref().map(parse_int_tuple).transpose()?;
                    let y = y.as_deref().map(parse_int_tuple).transpose()?;
                    let r = report::module_act(
                        &d,
                        &lambda,
                        bounds.window_radius,
                        &at,
                        x.as_deref(),
                        y.as_deref(),
                    )?;
                    out.emit(&r, "")
                }
                ModuleCmd::Isotropy { lambda } => {
                    let g = cfg.weyl(&d)?;
                    let r = report::isotropy_report(&d, &g, &parse_lambda(&d, &lambda)?);
                    out.emit(
                        &r,
                        &format!(
                            "isotropy order {}, component group order {}",
                            r.order, r.component_order
                        ),
                    )
                }
                ModuleCmd::Zchi { lambda, chi } => {
                    let g = cfg.weyl(&d)?;
                    let lambda = parse_lambda(&d, &lambda)?;
                    let r = report::zchi_report(&d, &g, &lambda, bounds.window_radius, &chi)?;
                    out.emit(
                        &r,
                        &format!("dim {} with {} invariants", r.dim, r.invariants_dim),
                    )
                }
            }
        }
        Command::Daha(cmd) => {
            let ctx = cfg.daha()?;
            let v = cfg.v_frac();
            match cmd {
                DahaCmd::Op { src } => out.emit(&report::daha_op(&ctx, &src.source()?, &v)?, ""),
                DahaCmd::Apply { src, f } => {
                    let r = report::daha_apply(&ctx, &src.source()?, &input(&f)?, &v)?;
                    out.emit(&r, &r.result.clone())
                }
                DahaCmd::Member { src, convention } => {
                    // Membership is tested in the specialization v = 1 unless v is given.
                    let v = match cfg.v {
                        VMode::Symbolic => qdaha::scalars::Frac::one(),
                        VMode::Value(_) => v,
                    };
                    let r = report::daha_member(&ctx, &src.source()?, &v, convention)?;
                    out.emit(&r, &format!("member: {}", r.report.ok))?;
                    check(r.report.ok, "operator violates the membership conditions")
                }
            }
        }
        Command::Spherical(cmd) => {
            let ctx = cfg.daha()?;
            match cmd {
                SphericalCmd::E => {
                    let r = report::spherical_e(&ctx, &cfg.v_frac())?;
                    out.emit(&r, &format!("e_v idempotent: {}", r.idempotent))?;
                    check(r.idempotent, "e_v is not idempotent")
                }
                SphericalCmd::Check { src, sandwich } => {
                    let r = report::spherical_check(&ctx, &src.source()?, sandwich)?;
                    out.emit(&r, &format!("spherical: {}", r.report.ok))?;
                    check(r.report.ok, "operator is not spherical")
                }
                SphericalCmd::Xi { word } => {
                    let r = report::spherical_xi(&word, &cfg.v_frac())?;
                    out.emit(&r, &r.display.clone())
                }
            }
        }
        Command::Loop(LoopCmd::Nf { matrix }) => {
            let j: MatrixJson = serde_json::from_str(&input(&matrix)?)
                .map_err(|e| Failure::Usage(anyhow::anyhow!("--matrix: {e}")))?;
            let r = report::normal_form_report(&matrix_from_json(&j)?)?;
            out.emit(&r, &r.transcript.join("\n"))?;
            check(r.verified, "normal form failed verification")
        }
        Command::Clifford(cmd) => match cmd {
            CliffordCmd::Table { group } => {
                let spec = report::parse_group_spec(&input(&group)?)?;
                let r = report::clifford_table(&spec, bounds.group_order)?;
                out.emit(
                    &r,
                    &format!("{} classes, degrees {:?}", r.degrees.len(), r.degrees),
                )?;
                check(r.orthogonality, "orthogonality relations fail")
            }
            CliffordCmd::Count {
                group,
                normal,
                lambda,
            } => {
                let r = match (group, normal, lambda) {
                    (_, _, Some(lambda)) => {
                        let d = cfg.datum()?;
                        let g = cfg.weyl(&d)?;
                        report::clifford_count_weyl(
                            &d,
                            &g,
                            &parse_lambda(&d, &lambda)?,
                            bounds.group_order,
                        )?
                    }
                    (Some(group), Some(normal), None) => {
                        let group = report::parse_group_spec(&input(&group)?)?;
                        let normal = report::parse_group_spec(&input(&normal)?)?;
                        report::clifford_count_spec(&group, &normal, bounds.group_order)?
                    }
                    _ => {
                        return Err(Failure::Usage(anyhow::anyhow!(
                            "give --group and --normal, or --lambda"
                        )))
                    }
                };
                let summary = format!(
                    "predicted {:?}, direct {}",
                    r.count.predicted, r.count.direct
                );
                out.emit(&r, &summary)?;
                // A projective orbit has no prediction; that is reported, not a failure.
                check(
                    r.count.predicted.is_none() || r.count.matches,
                    "Clifford count disagrees with the character table",
                )
            }
        },
        Command::Relations(RelationsCmd::Check) => {
            let ctx = cfg.daha()?;
            let r = report::relations_report(&ctx, &cfg.v_frac())?;
            let lines: Vec<String> = r
                .checks
                .iter()
                .map(|c| {
                    let status = match c.holds {
                        Some(true) => "ok",
                        Some(false) => "FAILED",
                        None => "no relation",
                    };
                    format!("{} {:?}: {status}", c.relation, c.nodes)
                })
                .collect();
            out.emit(&r, &lines.join("\n"))?;
            check(r.ok, "relations fail")
        }
        Command::Suite { criteria } => {
            let ids = if criteria.is_empty() {
                CRITERIA.to_vec()
            } else {
                criteria
            };
            if let Some(bad) = ids.iter().find(|i| !CRITERIA.contains(i)) {
                return Err(Failure::Usage(anyhow::anyhow!("unknown criterion {bad}")));
            }
            let r = run_suite(
                &SuiteConfig {
                    seed: cfg.seed,
                    ..SuiteConfig::default()
                },
                &ids,
            );
            let lines: Vec<String> = r
                .results
                .iter()
                .map(|c| {
                    format!(
                        "criterion {} {} {}",
                        c.id,
                        c.name,
                        if c.pass { "PASS" } else { "FAIL" }
                    )
                })
                .collect();
            out.emit(&r, &lines.join("\n"))?;
            check(r.pass, "acceptance criteria fail")
        }
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
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(e)) => {
            eprintln!("check failed: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
