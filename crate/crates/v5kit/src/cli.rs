//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use v5kit_core::bwb::{catalog_on, twist, BundleName, EquivariantBundle};
use v5kit_core::chow::{self, coker_class, euler_pairing, ulrich_chern, BundleClassV5, HilbertPolynomialV5};
use v5kit_core::koszul::{restrict_cohomology, ulrich_check, RestrictionStatus, UlrichVerdict};
use v5kit_core::lie::{reflection_chain, Weight};
use v5kit_core::quiver::field::PrimeField;
use v5kit_core::quiver::{
    check_stability, euler_form, hom_ext, moduli_dim, random_rep, sample_stability, theta, DimVector,
};

use crate::claims;
use crate::format::{self, Format};
use crate::matrices::{self, AnyRep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
/// The answer depends on data the tool does not have.
pub const EXIT_INDETERMINATE: i32 = 2;
/// Malformed command line (sysexits `EX_USAGE`).
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "v5kit", version, about = "Cohomology, Chern classes and quiver stability for Gr(2,5) and V5")]
pub struct Cli {
    /// Output format; `verify` defaults to table, everything else to json.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cohomology of an equivariant bundle on Gr(k,n) by Bott's algorithm.
    Bwb(BundleArgs),
    /// Step-by-step reflections taking weight + rho towards the dominant chamber.
    Chain(ChainArgs),
    /// Cohomology on a codimension-c linear section via the Koszul complex.
    Restrict {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 3)]
        codim: usize,
        /// Cancel single d1 differentials at maximal rank.
        #[arg(long)]
        assume_generic: bool,
    },
    /// Checks H^*(E(-j)) = 0 for j = 1..dim on Gr(k,n) (codim 0) or a linear section.
    Ulrich {
        #[command(flatten)]
        bundle: BundleArgs,
        #[arg(long, default_value_t = 0)]
        codim: usize,
    },
    /// Intersection theory on V5.
    Chow {
        #[command(subcommand)]
        op: ChowOp,
    },
    /// The three-arrow Kronecker quiver.
    Quiver {
        #[command(subcommand)]
        op: QuiverOp,
    },
    /// Runs a reproduction checklist.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum VerifyTarget {
    Paper,
}

#[derive(Debug, Args)]
pub struct BundleArgs {
    #[arg(long)]
    pub bundle: BundleName,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i64,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
}

impl BundleArgs {
    fn build(&self) -> Result<EquivariantBundle> {
        Ok(twist(&catalog_on(self.bundle, self.n, self.k)?, self.twist))
    }
}

#[derive(Debug, Args)]
pub struct ChainArgs {
    #[arg(long, required_unless_present = "weight")]
    pub bundle: Option<BundleName>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i64,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    /// Raw coefficients to walk as given, e.g. `--weight=2,-5,1,1` (no rho shift).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "bundle")]
    pub weight: Option<Vec<i64>>,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long)]
    pub bundle: BundleName,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub twist: i64,
}

impl ClassArgs {
    fn build(&self) -> Result<BundleClassV5> {
        Ok(BundleClassV5::of(self.bundle)?.twist(self.twist)?)
    }
}

#[derive(Debug, Subcommand)]
pub enum ChowOp {
    /// Chern classes (rank, c1, c2, c3) on the basis h, l, p.
    Class(ClassArgs),
    /// Euler characteristic and Hilbert polynomial.
    Chi(ClassArgs),
    /// Chern classes forced by the Ulrich Hilbert polynomial.
    Ulrich {
        #[arg(long)]
        rank: i64,
    },
    /// Chern classes of Coker(U^r -> Q*^r) and of its twist by O(1).
    Coker {
        #[arg(long)]
        rank: u32,
    },
    /// chi(E, E) for the rank-r Ulrich class.
    Pairing {
        #[arg(long)]
        rank: i64,
    },
    /// The Todd class of V5.
    Todd,
}

#[derive(Debug, Args)]
pub struct DimArg {
    #[arg(long, num_args = 2, value_names = ["D1", "D2"])]
    pub dim: Vec<usize>,
}

impl DimArg {
    fn get(&self) -> DimVector {
        DimVector::new(self.dim[0], self.dim[1])
    }
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[command(flatten)]
    pub dim: DimArg,
    #[arg(long, default_value_t = 2)]
    pub field: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl RandomArgs {
    fn build(&self) -> Result<AnyRep> {
        let field = PrimeField::new(self.field).with_context(|| format!("{} is not a prime", self.field))?;
        Ok(AnyRep::Finite(random_rep(self.dim.get(), field, self.seed)))
    }
}

#[derive(Debug, Subcommand)]
pub enum QuiverOp {
    /// chi(a, b) = a1 b1 + a2 b2 - 3 a1 b2.
    Euler {
        #[command(flatten)]
        dim: DimArg,
        #[arg(long, num_args = 2, value_names = ["D1", "D2"])]
        with: Vec<usize>,
    },
    /// theta(d) = chi((5,10), d).
    Theta(DimArg),
    /// 1 - chi(d, d).
    ModuliDim(DimArg),
    /// A seeded random representation over F_q.
    Random(RandomArgs),
    /// King stability: exhaustive over F_2, F_3, F_5; sampled over the rationals.
    Stability {
        #[arg(long, conflicts_with = "dim")]
        matrices: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["D1", "D2"], required_unless_present = "matrices")]
        dim: Option<Vec<usize>>,
        #[arg(long, default_value_t = 2)]
        field: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random subspaces to try for rational representations.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// dim Hom and dim Ext^1 between two representations (files, in order).
    HomExt {
        #[arg(long, num_args = 1, required = true)]
        matrices: Vec<PathBuf>,
    },
}

/// What a command produced: an exit code plus the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Outcome { code: EXIT_DOMAIN, stdout: String::new(), stderr: format!("error: {e:#}\n") },
    }
}

fn emit(value: &Value, cli: &Cli) -> Outcome {
    Outcome::ok(format::render(value, cli.format.unwrap_or(Format::Json)))
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Bwb(b) => Ok(emit(&format::cohomology(&v5kit_core::bwb::cohomology(&b.build()?)), cli)),
        Command::Chain(c) => {
            let start = match &c.weight {
                Some(coeffs) if coeffs.is_empty() => bail!("--weight needs at least one coefficient"),
                Some(coeffs) => Weight::from_coeffs(coeffs),
                None => {
                    let name = c.bundle.context("--bundle or --weight is required")?;
                    twist(&catalog_on(name, c.n, c.k)?, c.twist).weight().rho_shifted()
                }
            };
            Ok(emit(&format::chain(&reflection_chain(&start)), cli))
        }
        Command::Restrict { bundle, codim, assume_generic } => {
            let b = bundle.build()?;
            if *codim == 0 || *codim > b.grassmannian_dim() {
                bail!("codimension must lie in 1..={}", b.grassmannian_dim());
            }
            let res = restrict_cohomology(&b, *codim, *assume_generic);
            let mut out = emit(&format::restriction(&res), cli);
            if res.status == RestrictionStatus::NeedsMaps {
                out.code = EXIT_INDETERMINATE;
            }
            Ok(out)
        }
        Command::Ulrich { bundle, codim } => {
            let b = bundle.build()?;
            if *codim > b.grassmannian_dim() {
                bail!("codimension must lie in 0..={}", b.grassmannian_dim());
            }
            let v = ulrich_check(&b, *codim);
            let mut out = emit(&format::ulrich(&v), cli);
            if matches!(v, UlrichVerdict::Indeterminate { .. }) {
                out.code = EXIT_INDETERMINATE;
            }
            Ok(out)
        }
        Command::Chow { op } => chow_op(op, cli),
        Command::Quiver { op } => quiver_op(op, cli),
        Command::Verify { target: VerifyTarget::Paper } => Ok(verify(cli)),
    }
}

fn chow_op(op: &ChowOp, cli: &Cli) -> Result<Outcome> {
    let value = match op {
        ChowOp::Class(c) => format::class(&c.build()?),
        ChowOp::Chi(c) => {
            let class = c.build()?;
            json!({
                "chi": format::bigint(&chow::chi(&class, 0)?),
                "hilbert": format::hilbert(&class.hilbert_polynomial()),
            })
        }
        ChowOp::Ulrich { rank } => {
            if *rank < 1 {
                bail!("rank must be positive");
            }
            json!({
                "class": format::class(&ulrich_chern(*rank)?),
                "hilbert": format::hilbert(&HilbertPolynomialV5::ulrich(*rank)),
            })
        }
        ChowOp::Coker { rank } => {
            if *rank < 1 {
                bail!("rank must be positive");
            }
            let c = coker_class(*rank)?;
            json!({"coker": format::class(&c), "twisted": format::class(&c.twist(1)?)})
        }
        ChowOp::Pairing { rank } => {
            if *rank < 1 {
                bail!("rank must be positive");
            }
            let e = ulrich_chern(*rank)?;
            json!({"chi": format::bigint(&euler_pairing(&e, &e)?)})
        }
        ChowOp::Todd => Value::Array(chow::todd_v5().coeffs().iter().map(format::rational).collect()),
    };
    Ok(emit(&value, cli))
}

fn quiver_op(op: &QuiverOp, cli: &Cli) -> Result<Outcome> {
    let value = match op {
        QuiverOp::Euler { dim, with } => json!(euler_form(dim.get(), DimVector::new(with[0], with[1]))),
        QuiverOp::Theta(d) => json!(theta(d.get())),
        QuiverOp::ModuliDim(d) => json!(moduli_dim(d.get())?),
        QuiverOp::Random(r) => r.build()?.to_json(),
        QuiverOp::Stability { matrices, dim, field, seed, samples } => {
            let rep = match (matrices, dim) {
                (Some(path), _) => matrices::read(path)?,
                (None, Some(d)) => RandomArgs { dim: DimArg { dim: d.clone() }, field: *field, seed: *seed }.build()?,
                (None, None) => bail!("--matrices or --dim is required"),
            };
            match rep {
                AnyRep::Finite(r) => format::verdict(&check_stability(&r)?),
                AnyRep::Rational(r) => format::sampled(&sample_stability(&r, *samples, *seed)?),
            }
        }
        QuiverOp::HomExt { matrices } => {
            let [a, b] = matrices.as_slice() else {
                bail!("--matrices must be given exactly twice");
            };
            let (hom, ext) = match (matrices::read(a)?, matrices::read(b)?) {
                (AnyRep::Finite(x), AnyRep::Finite(y)) => hom_ext(&x, &y)?,
                (AnyRep::Rational(x), AnyRep::Rational(y)) => hom_ext(&x, &y)?,
                _ => bail!("representations live over different fields"),
            };
            json!({"hom": hom, "ext": ext})
        }
    };
    Ok(emit(&value, cli))
}

fn verify(cli: &Cli) -> Outcome {
    let results = claims::run_all();
    let failed = results.iter().filter(|r| r.failure.is_some()).count();
    let stdout = match cli.format.unwrap_or(Format::Table) {
        Format::Json => {
            let items: Vec<Value> = results
                .iter()
                .map(|r| json!({"claim": r.name, "pass": r.failure.is_none(), "detail": r.failure}))
                .collect();
            format::render(&json!({"claims": items, "failed": failed}), Format::Json)
        }
        Format::Table => {
            let mut s = String::new();
            for r in &results {
                match &r.failure {
                    None => {
                        let _ = writeln!(s, "PASS  {}", r.name);
                    }
                    Some(why) => {
                        let _ = writeln!(s, "FAIL  {}: {why}", r.name);
                    }
                }
            }
            let _ = writeln!(s, "{} passed, {failed} failed", results.len() - failed);
            s
        }
    };
    Outcome { code: if failed == 0 { EXIT_OK } else { EXIT_DOMAIN }, stdout, stderr: String::new() }
}
