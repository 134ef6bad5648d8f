//! Command-line front end. The binary only forwards `std::env::args` here.
//!
//! Exit codes: 0 on success, 1 when a verification suite finds a
//! counterexample, 2 on invalid input or a refused size limit.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use crate::error::{Error, Result};
use crate::exactalg::{MPoly, Monomial};
use crate::formulas::{
    asm_count, cor1_count, cor3_rhs, macmahon_count, macmahon_q, sym_pp_count, sym_pp_q,
    thm15_rhs, thm1_rhs, thm2_rhs,
};
use crate::paths::{det_polymatrix, lgv_matrix};
use crate::planepartitions::{enumerate_pp, r_block_pp_genfun, volume_genfun, PpLimits};
use crate::regions::{HexagonRegion, Region, TrapezoidRegion};
use crate::render::emit_svg;
use crate::schur::{principal_spec, skew_schur};
use crate::shapes::{BlockProfile, DentSet, Partition};
use crate::tilings::{
    block_symmetric_sum, enumerate_symmetric_hexagon, enumerate_tilings, for_each_tiling,
    signed_block_sum, weighted_region_sum, Weight, DEFAULT_TILING_LIMIT,
};
use crate::verify::{lemma32_suite, run_suite, Suite, SuiteReport, VerifyConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WeightMode {
    /// `x_{k+1}` per negative lozenge
    X,
    /// `q^k t` per negative lozenge
    Qt,
    /// Plain counts
    Numeric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed-form product
    Formula,
    /// Determinant of the path matrix
    Lgv,
    /// Sum over dented trapezoids
    Tilings,
    /// Symmetric tilings of the full hexagon
    Hexagon,
    /// Symmetric plane partitions
    Pp,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "blocksym", version, about = "Exact enumeration of block diagonally symmetric tilings")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Cap on tilings visited by any single enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_TILING_LIMIT,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub limit: u64,

    /// Lift every size limit.
    #[arg(long, global = true)]
    pub unsafe_max: bool,

    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Number of r-block diagonally symmetric tilings.
    Count {
        #[arg(long)]
        r: BlockProfile,
        #[arg(long, value_enum, default_value_t = Method::Formula)]
        method: Method,
    },
    /// (q,t)-generating function of r-block diagonally symmetric tilings.
    Genfun(GenfunArgs),
    /// Closed-form products.
    Formula {
        #[command(subcommand)]
        which: FormulaCmd,
    },
    /// Tilings of a single hexagon or dented trapezoid.
    Tilings {
        #[arg(value_enum)]
        action: TilingAction,
        #[command(flatten)]
        region: RegionArgs,
        #[arg(long, value_enum, default_value_t = WeightMode::X)]
        weight: WeightMode,
    },
    /// Plane partitions.
    Pp {
        #[command(subcommand)]
        which: PpCmd,
    },
    /// Skew Schur polynomials.
    Schur {
        #[command(subcommand)]
        which: SchurCmd,
    },
    /// The path-matrix determinant.
    Lgv {
        #[command(subcommand)]
        which: LgvCmd,
    },
    /// Draw one tiling as SVG.
    Render {
        #[command(flatten)]
        region: RegionArgs,
        /// Position in the enumeration order, starting at 0.
        #[arg(long, default_value_t = 0)]
        index: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites and print a JSON summary per suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GenfunArgs {
    #[arg(long)]
    pub r: BlockProfile,
    #[arg(long, value_enum, default_value_t = Method::Formula)]
    pub method: Method,
    /// Weight of the tiling sum; `x` only applies to `--method tilings`.
    #[arg(long, value_enum, default_value_t = WeightMode::Qt)]
    pub weight: WeightMode,
    /// Signed sum over left dents for the profile given here.
    #[arg(long)]
    pub rprime: Option<BlockProfile>,
    /// Allow `--rprime` other than `(1^l, 0^{n-l})`, where no product side exists.
    #[arg(long)]
    pub exploratory: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum FormulaCmd {
    Thm1 {
        #[arg(long)]
        r: BlockProfile,
    },
    Thm15 {
        #[arg(long)]
        r: BlockProfile,
    },
    Cor3 {
        #[arg(long)]
        r: BlockProfile,
    },
    Cor1 {
        #[arg(long)]
        r: BlockProfile,
    },
    /// Product side of the signed identity for `r′ = (1^l, 0^{n-l})`.
    Thm2 {
        #[arg(long)]
        r: BlockProfile,
        #[arg(long)]
        rprime: BlockProfile,
    },
    Macmahon {
        #[arg(long, value_parser = positive())]
        a: u32,
        #[arg(long, value_parser = positive())]
        b: u32,
        #[arg(long, value_parser = positive())]
        c: u32,
        /// Volume generating function instead of the count.
        #[arg(long)]
        q: bool,
    },
    /// Symmetric plane partitions in an `m × m × n` box.
    Sympp {
        #[arg(long, value_parser = positive())]
        m: u32,
        #[arg(long, value_parser = positive())]
        n: u32,
        #[arg(long)]
        q: bool,
    },
    Asm {
        #[arg(long, value_parser = positive())]
        n: u32,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TilingAction {
    Count,
    List,
    Genfun,
}

#[derive(Debug, Clone, Args)]
pub struct RegionArgs {
    /// Hexagon side lengths `a,b,c`.
    #[arg(long, conflicts_with = "trap")]
    pub hex: Option<String>,
    /// Trapezoid `height,m`.
    #[arg(long, requires = "right_dents")]
    pub trap: Option<String>,
    /// Right dent labels.
    #[arg(long = "P", id = "right_dents")]
    pub right_dents: Option<DentSet>,
    /// Left dent labels.
    #[arg(long = "Pprime")]
    pub left_dents: Option<DentSet>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum PpCmd {
    /// `Σ q^{|π|_n} t^{|π|_d}` over r-block symmetric plane partitions.
    Genfun {
        #[arg(long, value_parser = positive())]
        m: u32,
        #[arg(long, value_parser = positive())]
        n: u32,
        #[arg(long)]
        r: BlockProfile,
    },
    Count {
        #[arg(long, value_parser = positive())]
        a: u32,
        #[arg(long, value_parser = positive())]
        b: u32,
        #[arg(long, value_parser = positive())]
        c: u32,
    },
    /// Every plane partition in the box, as arrays of rows.
    List {
        #[arg(long, value_parser = positive())]
        a: u32,
        #[arg(long, value_parser = positive())]
        b: u32,
        #[arg(long, value_parser = positive())]
        c: u32,
    },
    /// Volume generating function of the box.
    Volume {
        #[arg(long, value_parser = positive())]
        a: u32,
        #[arg(long, value_parser = positive())]
        b: u32,
        #[arg(long, value_parser = positive())]
        c: u32,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum SchurCmd {
    Eval {
        #[arg(long)]
        lambda: Partition,
        #[arg(long, default_value = "")]
        mu: Partition,
        #[arg(long, value_parser = positive())]
        m: u32,
        /// Principal specialization `x_i = q^{i-1}` by the product formula.
        #[arg(long)]
        principal: bool,
    },
}

#[derive(Debug, Clone, Subcommand)]
pub enum LgvCmd {
    Genfun {
        #[arg(long)]
        r: BlockProfile,
    },
    /// Matrix entries, row by row.
    Matrix {
        #[arg(long)]
        r: BlockProfile,
    },
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`.
    pub suite: String,
    #[arg(long, default_value_t = 6, alias = "range")]
    pub max: u32,
    /// Largest determinant size (lemma32).
    #[arg(long)]
    pub n: Option<u32>,
    /// Largest `M` (lemma32).
    #[arg(long = "M")]
    pub big_m: Option<u32>,
}

fn positive() -> clap::builder::RangedI64ValueParser<u32> {
    clap::value_parser!(u32).range(1..)
}

fn tiling_limit(cfg: &RunConfig) -> u64 {
    if cfg.unsafe_max {
        u64::MAX
    } else {
        cfg.limit
    }
}

fn pp_limits(cfg: &RunConfig) -> PpLimits {
    if cfg.unsafe_max {
        PpLimits::unlimited()
    } else {
        PpLimits { max_visits: cfg.limit, ..PpLimits::default() }
    }
}

fn flag_error(flag: &str, msg: impl std::fmt::Display) -> Error {
    Error::InvalidInput(format!("{flag}: {msg}"))
}

fn parse_sides(flag: &str, s: &str, len: usize) -> Result<Vec<u32>> {
    let parts: std::result::Result<Vec<u32>, _> =
        s.split(',').map(|p| p.trim().parse::<u32>()).collect();
    match parts {
        Ok(v) if v.len() == len => Ok(v),
        _ => Err(flag_error(flag, format!("expected {len} comma-separated integers, got '{s}'"))),
    }
}

impl RegionArgs {
    pub fn region(&self) -> Result<Region> {
        match (&self.hex, &self.trap) {
            (Some(hex), None) => {
                let v = parse_sides("--hex", hex, 3)?;
                Ok(HexagonRegion::new(v[0], v[1], v[2]).map_err(|e| flag_error("--hex", e))?.into())
            }
            (None, Some(trap)) => {
                let v = parse_sides("--trap", trap, 2)?;
                let right = self.right_dents.clone().ok_or_else(|| flag_error("--P", "required with --trap"))?;
                let left = self.left_dents.clone().unwrap_or_else(DentSet::empty);
                Ok(TrapezoidRegion::new(v[0], v[1], right, left).map_err(|e| flag_error("--trap", e))?.into())
            }
            _ => Err(flag_error("--hex/--trap", "exactly one region is required")),
        }
    }
}

/// Output sink shared by every subcommand.
struct Out<'a> {
    format: Format,
    w: &'a mut dyn Write,
}

impl Out<'_> {
    fn poly(&mut self, p: &MPoly) -> Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{p}")?,
            Format::Json => writeln!(self.w, "{}", p.to_json())?,
        }
        Ok(())
    }

    fn int(&mut self, n: &BigInt) -> Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{n}")?,
            Format::Json => writeln!(self.w, "{}", json!(n.to_string()))?,
        }
        Ok(())
    }

    fn value(&mut self, text: &str, value: serde_json::Value) -> Result<()> {
        match self.format {
            Format::Text => writeln!(self.w, "{text}")?,
            Format::Json => writeln!(self.w, "{value}")?,
        }
        Ok(())
    }
}

fn dims(r: &BlockProfile) -> (u32, u32) {
    (r.total(), r.n() as u32)
}

fn apply_weight(p: MPoly, weight: WeightMode) -> MPoly {
    match weight {
        WeightMode::Numeric => {
            let mut c = MPoly::zero();
            c.add_term(Monomial::one(), p.eval_at_one());
            c
        }
        _ => p,
    }
}

fn genfun(args: &GenfunArgs, cfg: &RunConfig) -> Result<MPoly> {
    let limit = tiling_limit(cfg);
    if let Some(rp) = &args.rprime {
        let r = &args.r;
        let n = r.n() as u32;
        let l = rp.total();
        if rp.n() != r.n() {
            return Err(flag_error("--rprime", format!("must have {n} blocks like --r")));
        }
        let m = r.total().checked_sub(l).filter(|&m| m > 0)
            .ok_or_else(|| flag_error("--rprime", "|r′| must be smaller than |r|"))?;
        let staircase = BlockProfile::staircase(l as usize, n as usize).ok();
        if staircase.as_ref() != Some(rp) && !args.exploratory {
            return Err(flag_error(
                "--rprime",
                "only (1^l, 0^{n-l}) has a product side; pass --exploratory for other profiles",
            ));
        }
        return signed_block_sum(r, rp, m, n, l, limit);
    }
    let r = &args.r;
    let (m, n) = dims(r);
    let p = match (args.method, args.weight) {
        (Method::Tilings, WeightMode::X) => block_symmetric_sum(r, m, n, Weight::X, limit)?,
        (_, WeightMode::X) => return Err(flag_error("--weight", "x weights need --method tilings")),
        (Method::Formula, _) => thm1_rhs(r)?,
        (Method::Lgv, _) => det_polymatrix(&lgv_matrix(r, m, n)?)?,
        (Method::Tilings, _) => block_symmetric_sum(r, m, n, Weight::Qt, limit)?,
        (Method::Hexagon, _) => enumerate_symmetric_hexagon(r, m, n, limit)?.genfun,
        (Method::Pp, _) => {
            return Err(flag_error("--method", "plane partitions carry a different weight; use `pp genfun`"))
        }
    };
    Ok(apply_weight(p, args.weight))
}

fn count(r: &BlockProfile, method: Method, cfg: &RunConfig) -> Result<BigInt> {
    let (m, n) = dims(r);
    let limit = tiling_limit(cfg);
    Ok(match method {
        Method::Formula => cor1_count(r)?,
        Method::Lgv => det_polymatrix(&lgv_matrix(r, m, n)?)?.eval_at_one(),
        Method::Tilings => block_symmetric_sum(r, m, n, Weight::Qt, limit)?.eval_at_one(),
        Method::Hexagon => BigInt::from(enumerate_symmetric_hexagon(r, m, n, limit)?.count),
        Method::Pp => r_block_pp_genfun(m, n, r, &pp_limits(cfg))?.eval_at_one(),
    })
}

fn formula(which: &FormulaCmd, out: &mut Out<'_>, cfg: &RunConfig) -> Result<()> {
    match which {
        FormulaCmd::Thm1 { r } => out.poly(&thm1_rhs(r)?),
        FormulaCmd::Thm15 { r } => out.poly(&thm15_rhs(r)?),
        FormulaCmd::Cor3 { r } => out.poly(&cor3_rhs(r)?),
        FormulaCmd::Cor1 { r } => out.int(&cor1_count(r)?),
        FormulaCmd::Thm2 { r, rprime } => {
            let l = rprime.total();
            let n = r.n() as u32;
            let m = r.total().checked_sub(l).filter(|&m| m > 0)
                .ok_or_else(|| flag_error("--rprime", "|r′| must be smaller than |r|"))?;
            out.poly(&thm2_rhs(r, rprime, m, n, l, tiling_limit(cfg))?)
        }
        FormulaCmd::Macmahon { a, b, c, q } => {
            if *q {
                out.poly(&macmahon_q(*a, *b, *c)?)
            } else {
                out.int(&macmahon_count(*a, *b, *c)?)
            }
        }
        FormulaCmd::Sympp { m, n, q } => {
            if *q {
                out.poly(&sym_pp_q(*m, *n)?)
            } else {
                out.int(&sym_pp_count(*m, *n)?)
            }
        }
        FormulaCmd::Asm { n } => out.int(&asm_count(*n)?),
    }
}

fn tilings(action: TilingAction, region: &Region, weight: WeightMode, out: &mut Out<'_>, cfg: &RunConfig) -> Result<()> {
    let limit = tiling_limit(cfg);
    match action {
        TilingAction::Count => {
            let mut n = 0u64;
            for_each_tiling(region, limit, |_| n += 1)?;
            out.int(&BigInt::from(n))
        }
        TilingAction::Genfun => {
            let p = match weight {
                WeightMode::X => weighted_region_sum(region, Weight::X, limit)?,
                WeightMode::Qt => weighted_region_sum(region, Weight::Qt, limit)?,
                WeightMode::Numeric => apply_weight(weighted_region_sum(region, Weight::Qt, limit)?, weight),
            };
            out.poly(&p)
        }
        TilingAction::List => {
            let all = enumerate_tilings(region, limit)?;
            match out.format {
                Format::Json => writeln!(out.w, "{}", serde_json::to_string(&all).map_err(|e| Error::Internal(e.to_string()))?)?,
                Format::Text => {
                    for (k, t) in all.iter().enumerate() {
                        let body: Vec<String> = t
                            .lozenges()
                            .iter()
                            .map(|l| format!("{:?}@({},{})", l.orientation, l.left.col, l.left.y))
                            .collect();
                        writeln!(out.w, "{k}: {}", body.join(" "))?;
                    }
                }
            }
            Ok(())
        }
    }
}

fn pp(which: &PpCmd, out: &mut Out<'_>, cfg: &RunConfig) -> Result<()> {
    let limits = pp_limits(cfg);
    match which {
        PpCmd::Genfun { m, n, r } => out.poly(&r_block_pp_genfun(*m, *n, r, &limits)?),
        PpCmd::Count { a, b, c } => out.int(&BigInt::from(enumerate_pp(*a, *b, *c, &limits)?.len())),
        PpCmd::Volume { a, b, c } => out.poly(&volume_genfun(*a, *b, *c, &limits)?),
        PpCmd::List { a, b, c } => {
            let all = enumerate_pp(*a, *b, *c, &limits)?;
            let rows: Vec<&[Vec<u32>]> = all.iter().map(|p| p.entries()).collect();
            let text = rows.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join("\n");
            out.value(&text, json!(rows))
        }
    }
}

fn verify(args: &VerifyArgs, out: &mut Out<'_>, cfg: &RunConfig) -> Result<bool> {
    let config = VerifyConfig {
        scale: args.max,
        limit: tiling_limit(cfg),
        pp_limits: if cfg.unsafe_max { PpLimits::unlimited() } else { VerifyConfig::new(args.max).pp_limits },
        seed: cfg.seed,
    };
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse().map_err(|e| flag_error("suite", e))?]
    };
    let mut reports: Vec<SuiteReport> = Vec::new();
    for suite in suites {
        let report = match suite {
            Suite::Lemma32 if args.n.is_some() || args.big_m.is_some() => {
                lemma32_suite(args.n.unwrap_or(3), args.big_m.unwrap_or(args.max))?
            }
            _ => run_suite(suite, &config)?,
        };
        reports.push(report);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    for r in &reports {
        writeln!(out.w, "{}", serde_json::to_string(r).map_err(|e| Error::Internal(e.to_string()))?)?;
    }
    if reports.len() > 1 {
        writeln!(out.w, "{}", json!({ "suite": "all", "suites": reports.len(), "passed": all_passed }))?;
    }
    Ok(all_passed)
}

fn render(region: &Region, index: u64, path: &std::path::Path, out: &mut Out<'_>, cfg: &RunConfig) -> Result<()> {
    let mut found = None;
    let mut k = 0u64;
    for_each_tiling(region, tiling_limit(cfg), |lozenges| {
        if k == index {
            found = Some(crate::tilings::Tiling::new(lozenges.to_vec()));
        }
        k += 1;
    })?;
    let tiling = found.ok_or_else(|| flag_error("--index", format!("{region} has only {k} tilings")))?;
    emit_svg(&tiling, region, path)?;
    out.value(
        &format!("wrote tiling {index} of {region} to {}", path.display()),
        json!({ "region": region.to_string(), "index": index, "out": path.display().to_string() }),
    )
}

/// Runs one parsed command, writing results to `stdout` and a one-line
/// diagnostic to `stderr` on failure.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let mut out = Out { format: cfg.format, w: stdout };
    let result: Result<bool> = (|| {
        match &cfg.command {
            Command::Count { r, method } => out.int(&count(r, *method, cfg)?)?,
            Command::Genfun(args) => out.poly(&genfun(args, cfg)?)?,
            Command::Formula { which } => formula(which, &mut out, cfg)?,
            Command::Tilings { action, region, weight } => {
                tilings(*action, &region.region()?, *weight, &mut out, cfg)?
            }
            Command::Pp { which } => pp(which, &mut out, cfg)?,
            Command::Schur { which: SchurCmd::Eval { lambda, mu, m, principal } } => {
                if *principal {
                    if !mu.is_empty() {
                        return Err(flag_error("--principal", "only defined for straight shapes (omit --mu)"));
                    }
                    out.poly(&principal_spec(lambda, *m)?)?
                } else {
                    out.poly(&skew_schur(lambda, mu, *m)?)?
                }
            }
            Command::Lgv { which } => match which {
                LgvCmd::Genfun { r } => {
                    let (m, n) = dims(r);
                    out.poly(&det_polymatrix(&lgv_matrix(r, m, n)?)?)?
                }
                LgvCmd::Matrix { r } => {
                    let (m, n) = dims(r);
                    let a = lgv_matrix(r, m, n)?;
                    for i in 0..a.dim() {
                        let row: Vec<String> = (0..a.dim()).map(|j| a.get(i, j).to_string()).collect();
                        let json_row: Vec<serde_json::Value> = (0..a.dim())
                            .map(|j| serde_json::to_value(a.get(i, j).to_json_terms()).unwrap_or_default())
                            .collect();
                        out.value(&row.join(" | "), json!(json_row))?;
                    }
                }
            },
            Command::Render { region, index, out: path } => {
                render(&region.region()?, *index, path, &mut out, cfg)?
            }
            Command::Verify(args) => return verify(args, &mut out, cfg),
        }
        Ok(true)
    })();
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

/// Parses `args` (including the program name) and runs them.
pub fn run_from_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg, stdout, stderr),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            code
        }
    }
}
