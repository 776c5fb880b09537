//! Batch computations and verification runs for Gelfand-Tsetlin
//! degenerations: polytopes, monomial bases, filtrations, ideal components,
//! cone membership with boundary certificates, orbit points and the full
//! cross-validation suite.

use clap::{Args, Parser, Subcommand, ValueEnum};
use gtdegen::cone;
use gtdegen::freeorder;
use gtdegen::ideals;
use gtdegen::lie::Weight;
use gtdegen::linalg::{rat_frac, Rat, SparseVec};
use gtdegen::phi;
use gtdegen::polytope::{self, LatticeSet};
use gtdegen::rep::{self, RepBasis, WeightingA};
use gtdegen::verify::{self, VerifyConfig};
use gtdegen::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::io::Write;

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_BAD_INPUT: i32 = 2;
const EXIT_GUARD: i32 = 3;

/// Exact computations around Gelfand-Tsetlin degenerations of flag varieties.
///
/// Weightings are entered in row-major pair order
/// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
#[derive(Parser)]
#[command(name = "gtdegen", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Cap on dim L_lambda for expensive computations
    /// (overridable via GTDEGEN_MAX_DIM)
    #[arg(long, global = true)]
    max_dim: Option<usize>,
    /// Seed for all randomized choices
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of standard output
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn trimmed_i64(s: &str) -> Result<i64, String> {
    s.trim()
        .parse()
        .map_err(|e: std::num::ParseIntError| e.to_string())
}

#[derive(Args)]
struct WeightArg {
    /// Rank parameter n (at least 2)
    #[arg(long)]
    n: usize,
    /// Dominant weight as comma separated coordinates, e.g. 1,1
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = trimmed_i64)]
    lambda: Vec<i64>,
}

#[derive(Args)]
struct WeightingArg {
    /// Weighting values in row-major pair order, e.g. -1,-1,-1
    #[arg(long = "A", value_delimiter = ',', allow_hyphen_values = true, value_parser = trimmed_i64)]
    a: Vec<i64>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum PolytopeKind {
    /// Vertex set via Minkowski sums
    Pi,
    /// Integer points of the inequality system
    P,
    /// Integer points of the pattern polytope
    Gt,
    /// Images of the vertex set under the unimodular map
    Psi,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum IdealKind {
    /// Kernel of the determinant substitution
    Classic,
    /// Kernel of the weighted initial determinant substitution
    Initial,
    /// Kernel of the monomial substitution
    Toric,
    /// Kernel of the exponential coordinate substitution
    Exp,
    /// Kernel of the weighted initial exponential substitution
    ExpInitial,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice point sets of the degeneration polytopes
    Polytope {
        #[command(flatten)]
        weight: WeightArg,
        #[arg(long, value_enum, default_value_t = PolytopeKind::Pi)]
        kind: PolytopeKind,
    },
    /// Monomial basis check: rank against the dimension and the closure span
    Basis {
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Filtration check: ordered monomial spans against the graded cutoffs
    Filtration {
        #[command(flatten)]
        weight: WeightArg,
        #[command(flatten)]
        weighting: WeightingArg,
    },
    /// Graded ideal components per degree
    Ideal {
        #[command(flatten)]
        weight: WeightArg,
        #[command(flatten)]
        weighting: WeightingArg,
        #[arg(long, value_enum, default_value_t = IdealKind::Classic)]
        kind: IdealKind,
        /// Restrict to the partial flag variables of these lengths
        #[arg(long, value_delimiter = ',', value_parser = trimmed_i64)]
        d: Option<Vec<i64>>,
    },
    /// Cone membership, minimal H-description and boundary certificates
    Cone {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        weighting: WeightingArg,
    },
    /// Exponential orbit points and their vanishing on the initial ideal
    Orbit {
        #[command(flatten)]
        weight: WeightArg,
        #[command(flatten)]
        weighting: WeightingArg,
        /// Number of seeded random parameter vectors
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
    /// Cartan component of a tensor product of degenerate modules
    Cartan {
        #[command(flatten)]
        weight: WeightArg,
        /// Second dominant weight
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = trimmed_i64)]
        mu: Vec<i64>,
        #[command(flatten)]
        weighting: WeightingArg,
    },
    /// Essential signatures of the monoid order against the polytope
    Essential {
        #[command(flatten)]
        weight: WeightArg,
    },
    /// Mirrored construction checks: vertex sets and transported ideals
    Dual {
        #[command(flatten)]
        weight: WeightArg,
        #[command(flatten)]
        weighting: WeightingArg,
    },
    /// Run the complete verification suite
    VerifyAll,
}

struct Ctx {
    format: Format,
    output: Option<std::path::PathBuf>,
    max_dim: usize,
    seed: u64,
}

impl Ctx {
    fn emit(&self, text: String, json: serde_json::Value) -> Result<(), String> {
        let body = match self.format {
            Format::Text => text,
            Format::Json => format!("{}", json),
        };
        match &self.output {
            None => {
                println!("{body}");
                Ok(())
            }
            Some(path) => {
                let mut f = std::fs::File::create(path).map_err(|e| e.to_string())?;
                writeln!(f, "{body}").map_err(|e| e.to_string())
            }
        }
    }
}

fn weight_of(arg: &WeightArg) -> Result<Weight, String> {
    if arg.n < 2 {
        return Err("n must be at least 2".into());
    }
    if arg.lambda.len() != arg.n - 1 {
        return Err(format!(
            "lambda needs {} coordinates for n={}",
            arg.n - 1,
            arg.n
        ));
    }
    if arg.lambda.iter().any(|&c| c < 0) {
        return Err("lambda must be dominant".into());
    }
    Ok(Weight::new(arg.n, arg.lambda.clone()))
}

fn weighting_of(n: usize, arg: &WeightingArg) -> Result<WeightingA, String> {
    WeightingA::from_row_major(n, &arg.a).map_err(|e| e.to_string())
}

fn exit_code_of(err: &Error) -> i32 {
    match err {
        Error::DimGuard { .. } | Error::PointBudget { .. } => EXIT_GUARD,
        _ => EXIT_BAD_INPUT,
    }
}

fn points_text(set: &LatticeSet) -> String {
    let mut lines = vec![format!("{} points", set.len())];
    for p in set.iter() {
        lines.push(format!("  {p}"));
    }
    lines.join("\n")
}

fn random_c(n: usize, rng: &mut ChaCha8Rng) -> BTreeMap<(usize, usize), Rat> {
    gtdegen::lie::all_pairs(n)
        .into_iter()
        .map(|p| {
            (
                (p.i, p.j),
                rat_frac(rng.gen_range(-100i64..=100), rng.gen_range(1i64..=100)),
            )
        })
        .collect()
}

fn run(cli: Cli) -> i32 {
    let max_dim = cli
        .max_dim
        .or_else(|| {
            std::env::var("GTDEGEN_MAX_DIM")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(rep::DEFAULT_DIM_CAP);
    let ctx = Ctx {
        format: cli.format,
        output: cli.output.clone(),
        max_dim,
        seed: cli.seed,
    };
    match dispatch(&ctx, cli.command) {
        Ok(code) => code,
        Err(CliError::BadInput(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BAD_INPUT
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            exit_code_of(&e)
        }
    }
}

enum CliError {
    BadInput(String),
    Lib(Error),
}

impl From<String> for CliError {
    fn from(s: String) -> Self {
        CliError::BadInput(s)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn dispatch(ctx: &Ctx, cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Polytope { weight, kind } => {
            let lam = weight_of(&weight)?;
            let budget = polytope::DEFAULT_POINT_BUDGET;
            let set = match kind {
                PolytopeKind::Pi => polytope::pi_lambda(&lam, budget)?,
                PolytopeKind::P => polytope::lattice_points_p(&lam, budget)?,
                PolytopeKind::Gt => polytope::gt_lattice_points(&lam),
                PolytopeKind::Psi => {
                    polytope::pi_lambda(&lam, budget)?.map(|t| polytope::psi(&lam, t))
                }
            };
            ctx.emit(points_text(&set), set.to_json()).map_err(CliError::BadInput)?;
            Ok(EXIT_OK)
        }
        Command::Basis { weight } => {
            let lam = weight_of(&weight)?;
            let dim = lam.weyl_dim()? as usize;
            let rb = RepBasis::build(&lam, ctx.max_dim)?;
            let closure = rep::closure_span(&rb.space);
            let spanned = rb.columns.iter().all(|c| closure.contains(&rb.space, c));
            let pass = rb.rank == dim && closure.dim == dim && spanned;
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "dim": dim,
                "monomials": rb.pi.len(),
                "basis_rank": rb.rank,
                "closure_dim": closure.dim,
                "pass": pass,
            });
            let text = format!(
                "dim {} | monomial vectors {} | rank {} | closure dim {} | {}",
                dim,
                rb.pi.len(),
                rb.rank,
                closure.dim,
                if pass { "PASS" } else { "FAIL" }
            );
            ctx.emit(text, json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Filtration { weight, weighting } => {
            let lam = weight_of(&weight)?;
            let a = weighting_of(lam.n(), &weighting)?;
            let rb = RepBasis::build(&lam, ctx.max_dim)?;
            let s = cone::sigma(&a);
            let prof = rep::filtration_profile(&rb, &s);
            let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
            for t in &rb.pi {
                *counts.entry(a.of(t)).or_insert(0) += 1;
            }
            let pass = prof.dim == rb.pi.len() && prof.pivot_grades == counts;
            let levels: Vec<serde_json::Value> = prof
                .pivot_grades
                .iter()
                .map(|(&m, &d)| serde_json::json!({ "level": m, "graded_dim": d }))
                .collect();
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "weighting": a.to_row_major(),
                "levels": levels,
                "pass": pass,
            });
            let mut text = vec![format!(
                "filtration of L_lambda for lambda={:?}",
                lam.coords()
            )];
            for (m, d) in prof.pivot_grades.iter() {
                text.push(format!("  level {m}: graded dim {d}"));
            }
            text.push(if pass { "PASS".into() } else { "FAIL".into() });
            ctx.emit(text.join("\n"), json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Ideal {
            weight,
            weighting,
            kind,
            d,
        } => {
            let lam = weight_of(&weight)?;
            let n = lam.n();
            let cap = ideals::DEFAULT_MONOMIAL_CAP;
            let needs_a = matches!(kind, IdealKind::Initial | IdealKind::ExpInitial);
            let a = if needs_a {
                weighting_of(n, &weighting)?
            } else {
                WeightingA::zero(n)
            };
            let images = match kind {
                IdealKind::Classic => ideals::delta_images(n),
                IdealKind::Initial => ideals::delta_s_images(n, &a),
                IdealKind::Toric => ideals::toric_images(n),
                IdealKind::Exp => ideals::epsilon_images(n),
                IdealKind::ExpInitial => ideals::epsilon_s_images(n, &a),
            };
            let comp = match d {
                None => ideals::kernel_component(&lam, &images, cap)?,
                Some(list) => {
                    let dset: std::collections::BTreeSet<usize> = list
                        .iter()
                        .map(|&v| {
                            if v >= 1 && (v as usize) < n {
                                Ok(v as usize)
                            } else {
                                Err(format!("variable length {v} out of range"))
                            }
                        })
                        .collect::<Result<_, String>>()?;
                    let full = ideals::kernel_component(&lam, &images, cap)?;
                    ideals::restrict_partial(&full, &dset, &images, cap)?
                }
            };
            let mut text = vec![format!(
                "component of degree {:?}: dim {}",
                lam.coords(),
                comp.dim()
            )];
            for v in &comp.basis {
                let terms: Vec<String> = v
                    .iter()
                    .map(|(mi, c)| format!("{} {}", c, comp.monomials[*mi]))
                    .collect();
                text.push(format!("  {}", terms.join(" + ")));
            }
            ctx.emit(text.join("\n"), comp.to_json())
                .map_err(CliError::BadInput)?;
            Ok(EXIT_OK)
        }
        Command::Cone { n, weighting } => {
            if n < 2 {
                return Err(CliError::BadInput("n must be at least 2".into()));
            }
            let a = weighting_of(n, &weighting)?;
            let rep = cone::cone_check(&a);
            let s = cone::sigma(&a);
            let h_ok = cone::h_description_check(&s);
            // the H-description must agree with the facet inequalities
            let mut pass = rep.member == h_ok;
            let mut certs_json = Vec::new();
            let mut text = vec![format!(
                "member: {} | interior: {} | tight (a): {:?} | tight (b): {:?} | H-description: {}",
                rep.member, rep.interior, rep.tight_a, rep.tight_b, h_ok
            )];
            if rep.member && !rep.interior {
                for cert in cone::maxcone_certificate(&a)? {
                    if !cert.verified() {
                        pass = false;
                    }
                    text.push(format!(
                        "  facet {:?}: separation {}",
                        cert.facet,
                        if cert.verified() { "verified" } else { "FAILED" }
                    ));
                    certs_json.push(cert.to_json());
                }
            }
            let json = serde_json::json!({
                "weighting": a.to_row_major(),
                "member": rep.member,
                "interior": rep.interior,
                "tight_a": rep.tight_a,
                "tight_b": rep.tight_b,
                "h_description": h_ok,
                "certificates": certs_json,
            });
            ctx.emit(text.join("\n"), json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Orbit {
            weight,
            weighting,
            count,
        } => {
            let lam = weight_of(&weight)?;
            let n = lam.n();
            let a = weighting_of(n, &weighting)?;
            let gctx = phi::GradedCtx::build(&lam, &a, ctx.max_dim)?;
            let initial = ideals::initial_ideal_component(&lam, &a, ideals::DEFAULT_MONOMIAL_CAP)?;
            let eps = ideals::epsilon_s_images(n, &a);
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut pass = true;
            let mut orbits = Vec::new();
            let mut text = Vec::new();
            for run in 0..count {
                let c = random_c(n, &mut rng);
                let orbit = gctx.exp_hw(&c);
                // evaluate the ideal generators on the orbit point
                let values: Vec<Rat> = initial
                    .monomials
                    .iter()
                    .map(|m| {
                        m.factors()
                            .iter()
                            .map(|f| ideals::eval_zpoly(&eps[f], &c))
                            .product()
                    })
                    .collect();
                let vanishes = initial.basis.iter().all(|v| {
                    let mut total = gtdegen::linalg::rat(0);
                    for (mi, coeff) in v.iter() {
                        total += coeff * &values[*mi];
                    }
                    total == gtdegen::linalg::rat(0)
                });
                if !vanishes {
                    pass = false;
                }
                text.push(format!(
                    "orbit {run}: {} nonzero coordinates, initial ideal {}",
                    orbit.len(),
                    if vanishes { "vanishes" } else { "VIOLATED" }
                ));
                orbits.push(serde_json::json!({
                    "point": phi::orbit_to_json(&gctx, &orbit),
                    "vanishes_on_initial_ideal": vanishes,
                }));
            }
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "weighting": a.to_row_major(),
                "seed": ctx.seed,
                "orbits": orbits,
                "pass": pass,
            });
            text.push(if pass { "PASS".into() } else { "FAIL".into() });
            ctx.emit(text.join("\n"), json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Cartan {
            weight,
            mu,
            weighting,
        } => {
            let lam = weight_of(&weight)?;
            let n = lam.n();
            if mu.len() != n - 1 || mu.iter().any(|&c| c < 0) {
                return Err(CliError::BadInput("mu must be dominant with n-1 coordinates".into()));
            }
            let mu = Weight::new(n, mu);
            let a = weighting_of(n, &weighting)?;
            let ctx_l = phi::GradedCtx::build(&lam, &a, ctx.max_dim)?;
            let ctx_m = phi::GradedCtx::build(&mu, &a, ctx.max_dim)?;
            let got = phi::cartan_component_dim(&ctx_l, &ctx_m, ctx.max_dim)?;
            let expect = lam.add(&mu).weyl_dim()? as usize;
            let pass = got == expect;
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "mu": mu.coords(),
                "weighting": a.to_row_major(),
                "generated_dim": got,
                "expected_dim": expect,
                "pass": pass,
            });
            let text = format!(
                "generated submodule dim {got}, expected {expect}: {}",
                if pass { "PASS" } else { "FAIL" }
            );
            ctx.emit(text, json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Essential { weight } => {
            let lam = weight_of(&weight)?;
            let n = lam.n();
            let g = freeorder::identity_g(n);
            let ess = freeorder::essential_all(&lam, &g, ctx.max_dim)?;
            let pi = polytope::pi_lambda(&lam, polytope::DEFAULT_POINT_BUDGET)?;
            let ess_set = LatticeSet::from_points(n, ess.iter().cloned());
            let pass = ess_set == pi;
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "signatures": ess_set.to_json(),
                "matches_polytope": pass,
            });
            let text = format!(
                "{} essential signatures, polytope match: {}",
                ess_set.len(),
                if pass { "PASS" } else { "FAIL" }
            );
            ctx.emit(text, json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Dual { weight, weighting } => {
            let lam = weight_of(&weight)?;
            let n = lam.n();
            let a = weighting_of(n, &weighting)?;
            // the kernel route to initial components needs a cone member
            if !cone::cone_check(&a).member {
                return Err(CliError::BadInput(
                    "the weighting must satisfy the cone inequalities".into(),
                ));
            }
            let budget = polytope::DEFAULT_POINT_BUDGET;
            let tilde = cone::pi_tilde_lambda(&lam, budget)?;
            let reflected = polytope::pi_lambda(&lam.reversed(), budget)?.map(cone::eta);
            let points_ok = tilde == reflected;
            let round_trip = cone::sigma_inverse(&cone::sigma(&a)) == Some(a.clone());
            let cap = ideals::DEFAULT_MONOMIAL_CAP;
            let classic = ideals::ideal_component(&lam, cap)?;
            let s_tilde = cone::sigma_tilde(&a);
            let lhs = ideals::initial_space(&classic, |m| m.grad_s(&s_tilde));
            let rhs = cone::upsilon_component(&ideals::initial_ideal_component(
                &lam.reversed(),
                &cone::eta_star(&a),
                cap,
            )?);
            let transport_ok = lhs.len() == rhs.dim() && {
                let mut ech = gtdegen::linalg::Echelon::new();
                let mut rank = 0;
                for v in &lhs {
                    if ech.insert(v.clone()) {
                        rank += 1;
                    }
                }
                rank == lhs.len() && rhs.basis.iter().all(|v: &SparseVec<usize>| ech.contains(v))
            };
            let pass = points_ok && round_trip && transport_ok;
            let json = serde_json::json!({
                "lambda": lam.coords(),
                "weighting": a.to_row_major(),
                "mirrored_points_match": points_ok,
                "sigma_round_trip": round_trip,
                "transport_match": transport_ok,
                "pass": pass,
            });
            let text = format!(
                "mirrored points: {points_ok} | sigma round trip: {round_trip} | transport: {transport_ok} | {}",
                if pass { "PASS" } else { "FAIL" }
            );
            ctx.emit(text, json).map_err(CliError::BadInput)?;
            Ok(if pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::VerifyAll => {
            let cfg = VerifyConfig {
                seed: ctx.seed,
                dim_cap: ctx.max_dim,
                ..VerifyConfig::default()
            };
            let reports = verify::run_all(&cfg);
            let all_pass = reports.iter().all(|r| r.pass);
            let mut text = Vec::new();
            let mut json_reports = Vec::new();
            for r in &reports {
                text.push(r.line());
                for d in &r.details {
                    text.push(format!("    {d}"));
                }
                json_reports.push(serde_json::json!({
                    "id": r.id,
                    "name": r.name,
                    "pass": r.pass,
                    "seconds": r.seconds,
                    "details": r.details,
                }));
            }
            let json = serde_json::json!({ "pass": all_pass, "criteria": json_reports });
            ctx.emit(text.join("\n"), json).map_err(CliError::BadInput)?;
            Ok(if all_pass { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}
