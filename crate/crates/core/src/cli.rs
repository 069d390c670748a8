//! Batch driver: compute, cross-validate, compare, and emit deterministic
//! machine-readable tables.
//!
//! Exit-code contract: 0 ok, 2 usage, 3 resource/budget, 4 mathematical
//! mismatch. A mismatch is deliberately distinct from a crash: it is the
//! experiment's signal.

use std::collections::BTreeMap;
use std::fs;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::bichar::{dimension_series, hc_bigraded_character, BigradedCharacter};
use crate::charalg::{CharContext, VirtualCharacter};
use crate::localize::{
    cross_validate_mode, is_generic, sample_generic_points, LocalizationMode,
};
use crate::rootsys::{Family, RootSystem};
use crate::schemeoracle::{
    bigraded_hilbert, build_j, compare_scheme_vs_character, GroebnerBasis, Preset,
};
use crate::weightlat::{Int, Rational, RationalPoint, Weight};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

const DEFAULT_BUDGET: usize = 100_000;

#[derive(Parser, Debug)]
#[command(
    name = "isochar",
    about = "Exact bigraded equivariant characters of isospectral commuting varieties",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute the bigraded character (Algorithm A) and emit a JSON artifact.
    Character(CharacterArgs),
    /// Cross-validate Algorithm A against localization (Algorithm B).
    Validate(ValidateArgs),
    /// Build the preset ideal, run Buchberger, compare Hilbert vs character.
    Oracle(OracleArgs),
    /// Dump the Weyl group with lengths and reduced words.
    Weyl(WeylArgs),
    /// Euler characteristic of a single line bundle on G/B.
    Bott(BottArgs),
}

#[derive(Args, Debug)]
struct CommonRs {
    /// Root-system family: GL, A, B, C, D, G2
    #[arg(long)]
    family: String,
    /// Rank within the family
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug)]
struct CharacterArgs {
    #[command(flatten)]
    rs: CommonRs,
    /// Truncation box: I J
    #[arg(long = "box", num_args = 2, value_names = ["I", "J"])]
    box_dims: Vec<usize>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<String>,
    /// Output format (json)
    #[arg(long, default_value = "json")]
    format: String,
    /// Worker threads for the bidegree box
    #[arg(long)]
    jobs: Option<usize>,
    /// Resource budget override (also: env ISOCHAR_BUDGET)
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Args, Debug)]
struct ValidateArgs {
    #[command(flatten)]
    rs: CommonRs,
    #[arg(long = "box", num_args = 2, value_names = ["I", "J"])]
    box_dims: Vec<usize>,
    /// Explicit evaluation points, e.g. "2,1;3,2" (coords per point)
    #[arg(long)]
    points: Option<String>,
    /// Seed for reproducible generic points
    #[arg(long)]
    seed: Option<u64>,
    /// Number of sampled points when using --seed
    #[arg(long, default_value_t = 2)]
    num_points: usize,
    /// Localization mode: corrected | printed
    #[arg(long, default_value = "corrected")]
    mode: String,
    /// Re-validate a stored character artifact instead of recomputing
    #[arg(long)]
    artifact: Option<String>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// Preset: gl1 | sl2 | gl2
    #[arg(long)]
    preset: String,
    #[arg(long = "box", num_args = 2, value_names = ["I", "J"])]
    box_dims: Vec<usize>,
    #[arg(long)]
    out: Option<String>,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Args, Debug)]
struct WeylArgs {
    #[command(flatten)]
    rs: CommonRs,
    #[arg(long)]
    budget: Option<usize>,
}

#[derive(Args, Debug)]
struct BottArgs {
    #[command(flatten)]
    rs: CommonRs,
    /// Ambient weight coordinates, e.g. "1,-1" (exact rationals allowed)
    #[arg(long, allow_hyphen_values = true)]
    weight: String,
    #[arg(long)]
    budget: Option<usize>,
}

// ---------------------------------------------------------------------------
// JSON artifact schema. Exact values are serialized as strings.

#[derive(Serialize, Deserialize, Debug)]
struct ArtifactMetadata {
    family: String,
    rank: usize,
    #[serde(rename = "box")]
    box_dims: [usize; 2],
    convention: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct IrrepEntry {
    weight: Vec<String>,
    mult: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct CoeffEntry {
    i: usize,
    j: usize,
    irreps: Vec<IrrepEntry>,
    dim: String,
}

#[derive(Serialize, Deserialize, Debug)]
struct CharacterArtifact {
    metadata: ArtifactMetadata,
    coeffs: Vec<CoeffEntry>,
}

fn artifact_from_character(
    ctx: &CharContext<'_>,
    bc: &BigradedCharacter,
) -> Result<CharacterArtifact, String> {
    let mut coeffs = Vec::new();
    for (&(i, j), vc) in &bc.coeffs {
        let mut irreps = Vec::new();
        for (mu, c) in vc.terms() {
            irreps.push(IrrepEntry {
                weight: mu.coords().iter().map(|x| x.to_string()).collect(),
                mult: c.to_string(),
            });
        }
        let dim = ctx.dimension(vc).map_err(|e| e.to_string())?;
        coeffs.push(CoeffEntry {
            i,
            j,
            irreps,
            dim: dim.to_string(),
        });
    }
    Ok(CharacterArtifact {
        metadata: ArtifactMetadata {
            family: bc.family.clone(),
            rank: bc.rank,
            box_dims: [bc.i_max, bc.j_max],
            convention: bc.convention.clone(),
        },
        coeffs,
    })
}

fn character_from_artifact(a: &CharacterArtifact) -> Result<BigradedCharacter, String> {
    let mut coeffs: BTreeMap<(usize, usize), VirtualCharacter> = BTreeMap::new();
    for entry in &a.coeffs {
        let mut vc = None;
        for irr in &entry.irreps {
            let coords: Result<Vec<Rational>, _> =
                irr.weight.iter().map(|s| Rational::from_str(s)).collect();
            let coords = coords.map_err(|e| format!("bad weight: {e}"))?;
            let mu = Weight::new(coords);
            let mult = Int::from_str(&irr.mult).map_err(|e| format!("bad mult: {e}"))?;
            let vc = vc.get_or_insert_with(|| VirtualCharacter::zero(mu.dim()));
            vc.add_multiple(mu, mult);
        }
        // entries with no irreps are the zero character; dimension unknown, skip
        let dim_guess = vc.as_ref().map(|v| v.dim()).unwrap_or(0);
        coeffs.insert(
            (entry.i, entry.j),
            vc.unwrap_or_else(|| VirtualCharacter::zero(dim_guess)),
        );
    }
    Ok(BigradedCharacter {
        family: a.metadata.family.clone(),
        rank: a.metadata.rank,
        i_max: a.metadata.box_dims[0],
        j_max: a.metadata.box_dims[1],
        convention: a.metadata.convention.clone(),
        coeffs,
    })
}

// ---------------------------------------------------------------------------

fn effective_budget(flag: Option<usize>) -> usize {
    if let Some(b) = flag {
        return b;
    }
    if let Ok(v) = std::env::var("ISOCHAR_BUDGET") {
        if let Ok(b) = v.parse() {
            return b;
        }
    }
    DEFAULT_BUDGET
}

fn build_rs(common: &CommonRs, budget: usize) -> Result<RootSystem, (i32, String)> {
    let family = Family::from_str(&common.family).map_err(|e| (EXIT_USAGE, e))?;
    RootSystem::build_with_guard(family, common.rank, budget).map_err(|e| {
        let code = match e {
            crate::rootsys::RootSystemError::WeylGuardExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        (code, e.to_string())
    })
}

fn parse_box(dims: &[usize]) -> Result<(usize, usize), (i32, String)> {
    match dims {
        [i, j] => Ok((*i, *j)),
        _ => Err((EXIT_USAGE, "expected --box I J".to_string())),
    }
}

/// Guard against infeasible runs: the whole box is a sum over the Weyl group
/// in every cell.
fn check_work_budget(rs: &RootSystem, i_max: usize, j_max: usize, budget: usize) -> Result<(), (i32, String)> {
    let cost = rs.weyl_order() * (i_max + 1) * (j_max + 1);
    if cost > budget {
        return Err((
            EXIT_RESOURCE,
            format!("estimated work {cost} exceeds budget {budget} (raise with --budget or ISOCHAR_BUDGET)"),
        ));
    }
    Ok(())
}

fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

fn parse_points(rs: &RootSystem, spec: &str) -> Result<Vec<RationalPoint>, (i32, String)> {
    let mut out = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let coords: Result<Vec<Rational>, _> =
            part.split(',').map(|s| Rational::from_str(s.trim())).collect();
        let coords = coords.map_err(|e| (EXIT_USAGE, format!("bad point `{part}`: {e}")))?;
        if coords.len() != rs.dim() {
            return Err((
                EXIT_USAGE,
                format!(
                    "point `{part}` has {} coordinates, ambient dimension is {}",
                    coords.len(),
                    rs.dim()
                ),
            ));
        }
        let z = RationalPoint::new(coords)
            .map_err(|e| (EXIT_USAGE, format!("bad point `{part}`: {e}")))?;
        if !is_generic(rs, &z) {
            return Err((EXIT_USAGE, format!("point `{part}` is not generic")));
        }
        out.push(z);
    }
    Ok(out)
}

fn write_output(out: &Option<String>, content: &str) -> Result<(), (i32, String)> {
    match out {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(path) => fs::write(path, content)
            .map_err(|e| (EXIT_USAGE, format!("cannot write {path}: {e}"))),
    }
}

// ---------------------------------------------------------------------------

fn cmd_character(args: &CharacterArgs) -> Result<(), (i32, String)> {
    if args.format != "json" {
        return Err((EXIT_USAGE, format!("unknown format `{}`", args.format)));
    }
    let budget = effective_budget(args.budget);
    let (i_max, j_max) = parse_box(&args.box_dims)?;
    let rs = build_rs(&args.rs, budget)?;
    check_work_budget(&rs, i_max, j_max, budget)?;
    let ctx = CharContext::new(&rs);
    let bc = with_jobs(args.jobs, || hc_bigraded_character(&ctx, i_max, j_max))
        .map_err(|e| (EXIT_MISMATCH, e.to_string()))?;
    let artifact = artifact_from_character(&ctx, &bc).map_err(|e| (EXIT_MISMATCH, e))?;
    let mut text = serde_json::to_string_pretty(&artifact).expect("serializable");
    text.push('\n');
    write_output(&args.out, &text)
}

fn cmd_validate(args: &ValidateArgs) -> Result<(), (i32, String)> {
    let budget = effective_budget(args.budget);
    let (i_max, j_max) = parse_box(&args.box_dims)?;
    let rs = build_rs(&args.rs, budget)?;
    check_work_budget(&rs, i_max, j_max, budget)?;
    let mode = match args.mode.as_str() {
        "corrected" => LocalizationMode::Corrected,
        "printed" => LocalizationMode::Printed,
        other => return Err((EXIT_USAGE, format!("unknown mode `{other}`"))),
    };
    let points = match (&args.points, args.seed) {
        (Some(spec), _) => parse_points(&rs, spec)?,
        (None, seed) => sample_generic_points(&rs, seed.unwrap_or(1), args.num_points),
    };
    if points.is_empty() {
        return Err((EXIT_USAGE, "need at least one generic point".to_string()));
    }
    let ctx = CharContext::new(&rs);
    let bc = match &args.artifact {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| (EXIT_USAGE, format!("cannot read {path}: {e}")))?;
            let artifact: CharacterArtifact = serde_json::from_str(&text)
                .map_err(|e| (EXIT_USAGE, format!("bad artifact: {e}")))?;
            character_from_artifact(&artifact).map_err(|e| (EXIT_USAGE, e))?
        }
        None => with_jobs(args.jobs, || hc_bigraded_character(&ctx, i_max, j_max))
            .map_err(|e| (EXIT_MISMATCH, e.to_string()))?,
    };
    let report = cross_validate_mode(&ctx, &bc, &points, mode)
        .map_err(|e| (EXIT_USAGE, e.to_string()))?;
    if report.passed() {
        println!(
            "validate: OK ({} points, {} cells, mode={})",
            report.points_checked, report.cells_checked, mode
        );
        Ok(())
    } else {
        for m in &report.mismatches {
            println!(
                "MISMATCH point={} bidegree=({},{}) character={} localized={}",
                m.point_index, m.i, m.j, m.character_value, m.localized_value
            );
        }
        Err((
            EXIT_MISMATCH,
            format!("{} mismatches", report.mismatches.len()),
        ))
    }
}

fn cmd_oracle(args: &OracleArgs) -> Result<(), (i32, String)> {
    let budget = effective_budget(args.budget);
    let (i_max, j_max) = parse_box(&args.box_dims)?;
    let preset = Preset::from_str(&args.preset)
        .map_err(|_| (EXIT_USAGE, format!("unknown preset `{}`", args.preset)))?;
    let pres = build_j(preset).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    let gb = GroebnerBasis::compute(&pres, budget).map_err(|e| {
        let code = match e {
            crate::schemeoracle::OracleError::BudgetExceeded { .. } => EXIT_RESOURCE,
            _ => EXIT_USAGE,
        };
        (code, e.to_string())
    })?;
    let hilb = bigraded_hilbert(&gb, &pres, i_max as u32, j_max as u32);

    let (family, rank) = match preset {
        Preset::Gl1 => (Family::GL, 1),
        Preset::Sl2 => (Family::A, 1),
        Preset::Gl2 => (Family::GL, 2),
    };
    let rs = RootSystem::build_with_guard(family, rank, budget)
        .map_err(|e| (EXIT_RESOURCE, e.to_string()))?;
    let ctx = CharContext::new(&rs);
    let bc = hc_bigraded_character(&ctx, i_max, j_max)
        .map_err(|e| (EXIT_MISMATCH, e.to_string()))?;
    let dims = dimension_series(&ctx, &bc).map_err(|e| (EXIT_MISMATCH, e.to_string()))?;
    let cmp = compare_scheme_vs_character(&hilb, &dims);

    let mut csv = String::from("i,j,scheme_dim,xnorm_dim,gap\n");
    for r in &cmp.rows {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            r.i, r.j, r.scheme_dim, r.xnorm_dim, r.gap
        ));
    }
    write_output(&args.out, &csv)?;
    if let Some((i, j)) = cmp.first_divergence {
        eprintln!("first divergence at ({i},{j})");
    }
    Ok(())
}

fn cmd_weyl(args: &WeylArgs) -> Result<(), (i32, String)> {
    let budget = effective_budget(args.budget);
    let rs = build_rs(&args.rs, budget)?;
    println!("# {} rank {}: |W| = {}", rs.family(), rs.rank(), rs.weyl_order());
    for (k, w) in rs.weyl().iter().enumerate() {
        let word = if w.word().is_empty() {
            "e".to_string()
        } else {
            w.word()
                .iter()
                .map(|i| format!("s{i}"))
                .collect::<Vec<_>>()
                .join(".")
        };
        println!("{k}\tlen={}\tword={word}", w.length());
    }
    Ok(())
}

fn cmd_bott(args: &BottArgs) -> Result<(), (i32, String)> {
    let budget = effective_budget(args.budget);
    let rs = build_rs(&args.rs, budget)?;
    let coords: Result<Vec<Rational>, _> = args
        .weight
        .split(',')
        .map(|s| Rational::from_str(s.trim()))
        .collect();
    let coords = coords.map_err(|e| (EXIT_USAGE, format!("bad weight: {e}")))?;
    if coords.len() != rs.dim() {
        return Err((
            EXIT_USAGE,
            format!(
                "weight has {} coordinates, ambient dimension is {}",
                coords.len(),
                rs.dim()
            ),
        ));
    }
    let ctx = CharContext::new(&rs);
    let vc = ctx.bott_euler(&Weight::new(coords));
    println!("{vc}");
    Ok(())
}

/// Parse and dispatch; returns the process exit code.
pub fn main_entry() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version exit 0; any usage problem exits 2
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Character(a) => cmd_character(a),
        Command::Validate(a) => cmd_validate(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Weyl(a) => cmd_weyl(a),
        Command::Bott(a) => cmd_bott(a),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bichar::hc_bigraded_character;
    use crate::CONVENTION_TAG;

    #[test]
    fn artifact_round_trip() {
        let rs = RootSystem::build(Family::A, 1).unwrap();
        let ctx = CharContext::new(&rs);
        let bc = hc_bigraded_character(&ctx, 2, 2).unwrap();
        let artifact = artifact_from_character(&ctx, &bc).unwrap();
        let text = serde_json::to_string_pretty(&artifact).unwrap();
        let parsed: CharacterArtifact = serde_json::from_str(&text).unwrap();
        let bc2 = character_from_artifact(&parsed).unwrap();
        assert_eq!(bc, bc2);
        assert_eq!(artifact.metadata.convention, CONVENTION_TAG);
    }

    #[test]
    fn budget_env_and_flag_resolution() {
        assert_eq!(effective_budget(Some(42)), 42);
        // without a flag the default applies when the env var is unset
        std::env::remove_var("ISOCHAR_BUDGET");
        assert_eq!(effective_budget(None), DEFAULT_BUDGET);
    }
}
