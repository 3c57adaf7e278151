//! Command-line grammar and dispatch.

use std::fmt;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use hncalc_core::degree::{
    aut_degree, hom_degree, hom_degree_oracle, pos_part_degree, twice_area_above_chord,
};
use hncalc_core::dominance::{check_dominance, check_dominance_via_polygons};
use hncalc_core::moduli::{
    dim_aut, dim_ext_stratum, dim_ext_total, dim_h1, dim_hom, surj_stratum_dims,
};
use hncalc_core::sequences::enumerate_bundles;
use hncalc_core::sequences::harness::{
    check_nonsemistable_kernel_lemma, verify_key_inequality_extension, verify_key_inequality_kernel,
};
use hncalc_core::sequences::sweep::{self, SweepSummary};
use hncalc_core::{decide_extension, Bundle, Error, HnPolygon, Slope, SlopeWindow};

use crate::json;
use crate::parse::{parse_bundle, parse_slope, ParseError};
use crate::render;

#[derive(Parser, Debug)]
#[command(
    name = "hncalc",
    version,
    about = "HN polygon calculus for bundles on the Fargues-Fontaine curve"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Rank, degree, slopes, HN vectors and polygon of a bundle.
    Info { bundle: String },
    /// Bundle algebra.
    #[command(subcommand)]
    Op(OpCommand),
    /// Degrees of nonnegative parts.
    #[command(subcommand)]
    Deg(DegCommand),
    /// Whether E (strongly) slopewise dominates F, with the failing threshold.
    Dominates {
        e: String,
        f: String,
        #[arg(long)]
        strong: bool,
        /// Decide through the HN polygon characterization.
        #[arg(long)]
        via_polygons: bool,
    },
    /// Dimensions of moduli of maps and extensions.
    #[command(subcommand)]
    Dims(DimsCommand),
    /// Whether a short exact sequence 0 -> D -> E -> F -> 0 exists.
    Decide { d: String, e: String, f: String },
    /// HN types of a given rank and degree with slopes in [lo, hi].
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        rank: i64,
        #[arg(allow_hyphen_values = true)]
        degree: i64,
        #[command(flatten)]
        window: WindowArgs,
    },
    /// Verification harnesses; exits with status 3 on any violation.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Draw HN polygons on shared axes.
    #[command(group(ArgGroup::new("format").required(true).args(["svg", "ascii"])))]
    Plot {
        #[arg(required = true)]
        bundles: Vec<String>,
        /// Write an SVG file (`-` for standard output).
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        ascii: bool,
    },
}

#[derive(Args, Debug)]
pub struct WindowArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub lo: String,
    #[arg(long, allow_hyphen_values = true)]
    pub hi: String,
}

#[derive(Subcommand, Debug)]
pub enum OpCommand {
    Dual {
        bundle: String,
    },
    /// Direct sum of one or more bundles.
    Sum {
        #[arg(required = true)]
        bundles: Vec<String>,
    },
    Tensor {
        a: String,
        b: String,
    },
    /// Tensor with O(slope).
    Twist {
        bundle: String,
        #[arg(allow_hyphen_values = true)]
        slope: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum DegCommand {
    /// deg(E^dual (x) F)^{>=0}.
    Hom {
        e: String,
        f: String,
        /// Also expand the tensor product and require agreement.
        #[arg(long)]
        oracle: bool,
    },
    /// deg(V^dual (x) V)^{>=0}, together with twice the area above the chord.
    Aut {
        v: String,
        #[arg(long)]
        oracle: bool,
    },
    /// deg(V)^{>=0}.
    Pos { v: String },
}

#[derive(Subcommand, Debug)]
pub enum DimsCommand {
    Hom {
        e: String,
        f: String,
    },
    Aut {
        v: String,
    },
    H1 {
        e: String,
    },
    /// Surjections E -> F with kernel K.
    SurjStratum {
        e: String,
        f: String,
        k: String,
    },
    /// Extensions of F by D with middle term E.
    ExtStratum {
        d: String,
        f: String,
        e: String,
    },
    /// All extensions of F by D.
    ExtTotal {
        f: String,
        d: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Kernel inequality for semistable D.
    Step1 { d: String, e: String, f: String },
    /// Extension inequality for semistable E.
    Step2 {
        d: String,
        e: String,
        f: String,
        #[arg(long, allow_hyphen_values = true, requires = "hi")]
        lo: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "lo")]
        hi: Option<String>,
    },
    /// Polygon comparison for a nonsemistable K against semistable D.
    KernelLemma { d: String, f: String, k: String },
    /// Every exhaustive check over a window.
    Sweep {
        #[arg(long)]
        max_rank: i64,
        #[command(flatten)]
        window: WindowArgs,
        /// Maximum number of violations listed per check.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Parse {
        arg: String,
        error: ParseError,
    },
    Domain(Error),
    Io {
        path: PathBuf,
        error: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse { .. } => 2,
            CliError::Domain(_) | CliError::Io { .. } => 1,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Parse { .. } => "parse",
            CliError::Domain(e) => e.code(),
            CliError::Io { .. } => "io",
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { arg, error } => write!(f, "{arg:?}: {error}"),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io { path, error } => write!(f, "{}: {error}", path.display()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

/// What a successful command prints, and whether a check it ran failed.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub violations: usize,
}

impl Output {
    fn json(value: Value) -> Self {
        Self::checked(value, 0)
    }

    fn checked(value: Value, violations: usize) -> Self {
        let mut stdout = serde_json::to_string_pretty(&value).expect("serializable");
        stdout.push('\n');
        Output { stdout, violations }
    }
}

fn bundle(text: &str) -> Result<Bundle, CliError> {
    parse_bundle(text).map_err(|error| CliError::Parse {
        arg: text.to_owned(),
        error,
    })
}

fn slope(text: &str) -> Result<Slope, CliError> {
    parse_slope(text).map_err(|error| CliError::Parse {
        arg: text.to_owned(),
        error,
    })
}

fn window(args: &WindowArgs, max_rank: i64) -> Result<SlopeWindow, CliError> {
    Ok(SlopeWindow::new(
        slope(&args.lo)?,
        slope(&args.hi)?,
        max_rank,
    )?)
}

pub fn run(cli: Cli) -> Result<Output, CliError> {
    match cli.command {
        Command::Info { bundle: b } => Ok(Output::json(json::info(&bundle(&b)?))),
        Command::Op(op) => run_op(op),
        Command::Deg(deg) => run_deg(deg),
        Command::Dominates {
            e,
            f,
            strong,
            via_polygons,
        } => {
            let (e, f) = (bundle(&e)?, bundle(&f)?);
            let failure = if via_polygons {
                check_dominance_via_polygons(&e, &f, strong)
                    .err()
                    .map(|x| json::polygon_failure(&x))
            } else {
                check_dominance(&e, &f, strong)
                    .err()
                    .map(|x| json::truncation_failure(&x))
            };
            Ok(Output::json(json!({
                "dominates": failure.is_none(),
                "strong": strong,
                "method": if via_polygons { "polygons" } else { "truncations" },
                "failure": failure,
            })))
        }
        Command::Dims(dims) => run_dims(dims),
        Command::Decide { d, e, f } => {
            let dec = decide_extension(&bundle(&d)?, &bundle(&e)?, &bundle(&f)?);
            Ok(Output::json(json::decision(&dec)))
        }
        Command::Enumerate {
            rank,
            degree,
            window: w,
        } => {
            let win = window(&w, rank.max(1))?;
            let found = enumerate_bundles(rank, degree, &win);
            Ok(Output::json(json!({
                "rank": rank,
                "degree": degree,
                "lo": json::rational(win.lo),
                "hi": json::rational(win.hi),
                "count": found.len(),
                "bundles": found.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })))
        }
        Command::Verify(v) => run_verify(v),
        Command::Plot {
            bundles,
            svg,
            ascii: _,
        } => {
            let polygons = bundles
                .iter()
                .map(|t| Ok((bundle(t)?.to_string(), HnPolygon::of(&bundle(t)?))))
                .collect::<Result<Vec<_>, CliError>>()?;
            match svg {
                Some(path) if path.as_os_str() != "-" => {
                    std::fs::write(&path, render::svg(&polygons))
                        .map_err(|error| CliError::Io { path, error })?;
                    Ok(Output::default())
                }
                Some(_) => Ok(Output {
                    stdout: render::svg(&polygons),
                    violations: 0,
                }),
                None => Ok(Output {
                    stdout: render::ascii(&polygons),
                    violations: 0,
                }),
            }
        }
    }
}

fn run_op(op: OpCommand) -> Result<Output, CliError> {
    let result = match op {
        OpCommand::Dual { bundle: b } => bundle(&b)?.dual(),
        OpCommand::Sum { bundles } => bundles.iter().try_fold(Bundle::zero(), |acc, t| {
            Ok::<_, CliError>(acc.direct_sum(&bundle(t)?))
        })?,
        OpCommand::Tensor { a, b } => bundle(&a)?.tensor(&bundle(&b)?),
        OpCommand::Twist {
            bundle: b,
            slope: s,
        } => bundle(&b)?.twist(slope(&s)?),
    };
    Ok(Output::json(json::bundle(&result)))
}

fn run_deg(deg: DegCommand) -> Result<Output, CliError> {
    match deg {
        DegCommand::Hom { e, f, oracle } => {
            let (e, f) = (bundle(&e)?, bundle(&f)?);
            let value = hom_degree(&e, &f);
            if !oracle {
                return Ok(Output::json(
                    json!({ "value": value, "method": "cross-product" }),
                ));
            }
            let brute = hom_degree_oracle(&e, &f);
            Ok(Output::checked(
                json!({ "value": brute, "method": "oracle", "cross_product": value, "agrees": brute == value }),
                usize::from(brute != value),
            ))
        }
        DegCommand::Aut { v, oracle } => {
            let v = bundle(&v)?;
            let value = aut_degree(&v);
            let area = twice_area_above_chord(&v);
            let mut out = json!({ "value": value, "twice_area": area, "agrees": value == area });
            let mut bad = usize::from(value != area);
            if oracle {
                let brute = hom_degree_oracle(&v, &v);
                out["oracle"] = json!(brute);
                out["agrees"] = json!(value == area && value == brute);
                bad += usize::from(brute != value);
            }
            Ok(Output::checked(out, bad))
        }
        DegCommand::Pos { v } => Ok(Output::json(
            json!({ "value": pos_part_degree(&bundle(&v)?) }),
        )),
    }
}

fn run_dims(dims: DimsCommand) -> Result<Output, CliError> {
    let value = match dims {
        DimsCommand::Hom { e, f } => json!({ "dimension": dim_hom(&bundle(&e)?, &bundle(&f)?) }),
        DimsCommand::Aut { v } => json!({ "dimension": dim_aut(&bundle(&v)?) }),
        DimsCommand::H1 { e } => json!({ "dimension": dim_h1(&bundle(&e)?)? }),
        DimsCommand::SurjStratum { e, f, k } => {
            let s = surj_stratum_dims(&bundle(&e)?, &bundle(&f)?, &bundle(&k)?)?;
            json!({ "dimension": s.stratum, "total": s.total, "gap": s.gap })
        }
        DimsCommand::ExtStratum { d, f, e } => {
            let (d, f, e) = (bundle(&d)?, bundle(&f)?, bundle(&e)?);
            let stratum = dim_ext_stratum(&d, &f, &e)?;
            // The total is only defined under the slope gap.
            let total = dim_ext_total(&f, &d).ok();
            json!({ "dimension": stratum, "total": total, "gap": total.map(|t| t - stratum) })
        }
        DimsCommand::ExtTotal { f, d } => {
            json!({ "dimension": dim_ext_total(&bundle(&f)?, &bundle(&d)?)? })
        }
    };
    Ok(Output::json(value))
}

fn run_verify(v: VerifyCommand) -> Result<Output, CliError> {
    match v {
        VerifyCommand::Step1 { d, e, f } => {
            let r = verify_key_inequality_kernel(&bundle(&d)?, &bundle(&e)?, &bundle(&f)?)?;
            Ok(Output::checked(
                json::inequality_report(&r),
                r.violations().count(),
            ))
        }
        VerifyCommand::Step2 { d, e, f, lo, hi } => {
            let (d, e, f) = (bundle(&d)?, bundle(&e)?, bundle(&f)?);
            let w = match (lo, hi) {
                (Some(lo), Some(hi)) => Some(window(&WindowArgs { lo, hi }, e.rank().max(1))?),
                _ => None,
            };
            let r = verify_key_inequality_extension(&d, &e, &f, w.as_ref())?;
            Ok(Output::checked(
                json::inequality_report(&r),
                r.violations().count(),
            ))
        }
        VerifyCommand::KernelLemma { d, f, k } => {
            let r = check_nonsemistable_kernel_lemma(&bundle(&d)?, &bundle(&f)?, &bundle(&k)?)?;
            Ok(Output::checked(
                json::kernel_lemma_report(&r),
                usize::from(!r.pass),
            ))
        }
        VerifyCommand::Sweep {
            max_rank,
            window: w,
            limit,
        } => {
            let win = window(&w, max_rank)?;
            let summaries = run_sweeps(&win);
            let violations = summaries.iter().map(|s| s.violations.len()).sum();
            Ok(Output::checked(
                json!({
                    "max_rank": max_rank,
                    "lo": json::rational(win.lo),
                    "hi": json::rational(win.hi),
                    "checks": summaries.iter().map(|s| json::sweep_summary(s, limit)).collect::<Vec<_>>(),
                    "violation_count": violations,
                    "pass": violations == 0,
                }),
                violations,
            ))
        }
    }
}

/// Every sweep over `w`; the canonical family uses `r, s <= max_rank`,
/// `m <= 2`.
pub fn run_sweeps(w: &SlopeWindow) -> Vec<SweepSummary> {
    let m = w.max_rank;
    vec![
        sweep::sweep_canonical_family(m, m, 2),
        sweep::sweep_key_inequality_kernel(w),
        sweep::sweep_key_inequality_extension(w),
        sweep::sweep_surj_stratum(w),
        sweep::sweep_ext_stratum(w),
        sweep::sweep_kernel_lemma(w),
        sweep::sweep_duality(w),
        sweep::sweep_necessity(w),
    ]
}
