use std::path::PathBuf;

use kleincover_core::f2sym::{
    classification_census, classify_subgroup, enumerate_klein_subgroups, CaseLabel, KleinSubgroup,
    TwoTorsion,
};
use kleincover_core::tower::{build_tower, prym_summary};
use kleincover_core::verify::{
    verify_config, BranchAssignment, Tamper, VerificationReport, VerifyOptions,
};

use crate::{
    dot, json, resolve_format, text, usage, ClassifyArgs, Format, FuzzArgs, Outcome, TowerArgs,
    UsageError, VerifyArgs,
};

/// Reference census: the component degrees of the forgetful map plus the
/// isotropic/non-isotropic split. The command recomputes the census and
/// compares against these.
pub const EXPECTED_CENSUS: [(CaseLabel, usize); 4] = [
    (CaseLabel::I1, 56),
    (CaseLabel::I2, 280),
    (CaseLabel::II1, 105),
    (CaseLabel::II2, 210),
];
pub const EXPECTED_ISOTROPIC: usize = 315;
pub const EXPECTED_NON_ISOTROPIC: usize = 336;
pub const EXPECTED_TOTAL: usize = 651;

type CommandResult = Result<(Outcome, Option<PathBuf>), UsageError>;

pub fn classify(args: &ClassifyArgs) -> CommandResult {
    let format = resolve_format(args.out.format, false)?;
    let report = classification_census().map_err(usage)?;

    let mut diffs = Vec::new();
    for (label, expected) in EXPECTED_CENSUS {
        let got = report.count(label);
        if got != expected {
            diffs.push(format!("case {label}: expected {expected}, got {got}"));
        }
    }
    for (name, expected, got) in [
        ("isotropic", EXPECTED_ISOTROPIC, report.isotropic_total),
        (
            "non-isotropic",
            EXPECTED_NON_ISOTROPIC,
            report.non_isotropic_total,
        ),
        ("total", EXPECTED_TOTAL, report.grand_total),
    ] {
        if got != expected {
            diffs.push(format!("{name}: expected {expected}, got {got}"));
        }
    }

    let rendering = match format {
        Format::Text => text::classify(&report, &diffs),
        Format::Json => json::classify(&report, &diffs),
        Format::Dot => unreachable!("rejected by resolve_format"),
    };
    Ok((
        Outcome {
            rendering,
            failed_checks: !diffs.is_empty(),
        },
        args.out.output.clone(),
    ))
}

/// Resolves `--case` / `--gen` flags into a Klein subgroup.
pub fn subgroup_from_flags(
    case: &Option<String>,
    gens: &[String],
) -> Result<KleinSubgroup, UsageError> {
    match (case, gens.len()) {
        (Some(label), 0) => {
            let label = CaseLabel::parse(label)
                .ok_or_else(|| UsageError(format!("unknown case label `{label}`")))?;
            Ok(label.canonical_subgroup())
        }
        (None, 2) => {
            let a = parse_generator(&gens[0])?;
            let b = parse_generator(&gens[1])?;
            KleinSubgroup::new(a, b).map_err(usage)
        }
        (None, 0) => Err(UsageError(
            "give either --case or two --gen flags".into(),
        )),
        (None, n) => Err(UsageError(format!(
            "need exactly two --gen flags, got {n}"
        ))),
        (Some(_), _) => Err(UsageError(
            "--case conflicts with --gen".into(),
        )),
    }
}

fn parse_generator(s: &str) -> Result<TwoTorsion, UsageError> {
    let mut indices = Vec::new();
    for ch in s.chars() {
        let d = ch
            .to_digit(10)
            .filter(|d| (1..=8).contains(d))
            .ok_or_else(|| {
                UsageError(format!(
                    "generator `{s}`: expected Weierstrass indices 1..8"
                ))
            })?;
        indices.push(d as u8);
    }
    TwoTorsion::from_indices(&indices).map_err(usage)
}

pub fn tower(args: &TowerArgs) -> CommandResult {
    let format = resolve_format(args.out.format, true)?;
    let subgroup = subgroup_from_flags(&args.case, &args.gen)?;
    let tower = build_tower(&subgroup).map_err(usage)?;
    let summary = prym_summary(&tower);

    let rendering = match format {
        Format::Text => text::tower(&tower, &summary),
        Format::Json => json::tower(&tower, &summary),
        Format::Dot => dot::tower(&tower),
    };
    Ok((
        Outcome {
            rendering,
            failed_checks: false,
        },
        args.out.output.clone(),
    ))
}

fn parse_points(s: &str, p: u64) -> Result<BranchAssignment, UsageError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 8 {
        return Err(UsageError(format!(
            "--points needs 8 comma-separated values, got {}",
            parts.len()
        )));
    }
    let mut points = [0u64; 8];
    for (slot, part) in points.iter_mut().zip(parts) {
        *slot = part
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("branch point `{part}` is not an integer")))?;
    }
    BranchAssignment::new(p, points).map_err(usage)
}

fn parse_tamper(s: &str) -> Result<Tamper, UsageError> {
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        ["top", e] => Ok(Tamper::TopCount {
            q_exp: e.parse().map_err(usage)?,
        }),
        ["quad", chi, e] => Ok(Tamper::QuadraticCount {
            chi: chi.parse().map_err(usage)?,
            q_exp: e.parse().map_err(usage)?,
        }),
        _ => Err(UsageError(format!(
            "tamper spec `{s}`: expected top:E or quad:CHI:E"
        ))),
    }
}

fn check_depth(depth: u32) -> Result<u32, UsageError> {
    if !(2..=4).contains(&depth) {
        return Err(UsageError(format!("depth {depth} outside 2..=4")));
    }
    Ok(depth)
}

pub fn verify(args: &VerifyArgs) -> CommandResult {
    let format = resolve_format(args.out.format, false)?;
    let subgroup = subgroup_from_flags(&args.case, &args.gen)?;
    let depth = check_depth(args.depth)?;
    let branch = match &args.points {
        Some(s) => parse_points(s, args.prime)?,
        None => BranchAssignment::random(args.prime, args.seed).map_err(usage)?,
    };
    let opts = VerifyOptions {
        max_q_exp: depth,
        tamper: args.tamper.as_deref().map(parse_tamper).transpose()?,
    };
    let report = verify_config(&subgroup, &branch, &opts).map_err(usage)?;

    let rendering = match format {
        Format::Text => text::verify(&report),
        Format::Json => json::verify(&report),
        Format::Dot => unreachable!("rejected by resolve_format"),
    };
    Ok((
        Outcome {
            rendering,
            failed_checks: !report.pass,
        },
        args.out.output.clone(),
    ))
}

fn mix(seed: u64, lane: u64) -> u64 {
    let mut z = seed ^ lane.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// One fuzz instance: the subgroup drawn from the case's component, the
/// branch points from the seed stream.
pub struct FuzzInstance {
    pub index: u64,
    pub case: CaseLabel,
    pub report: VerificationReport,
}

pub fn fuzz(args: &FuzzArgs) -> CommandResult {
    let format = resolve_format(args.out.format, false)?;
    if args.trials == 0 {
        return Err(UsageError("--trials must be at least 1".into()));
    }
    let depth = check_depth(args.depth)?;

    let mut by_case: [Vec<KleinSubgroup>; 4] = Default::default();
    for k in enumerate_klein_subgroups() {
        let case = classify_subgroup(&k).map_err(usage)?;
        let slot = CaseLabel::ALL
            .iter()
            .position(|l| *l == case.label)
            .expect("all labels listed");
        by_case[slot].push(k);
    }

    let opts = VerifyOptions {
        max_q_exp: depth,
        tamper: None,
    };
    let mut instances = Vec::with_capacity(args.trials as usize);
    for i in 0..args.trials {
        let slot = (i % 4) as usize;
        let case = CaseLabel::ALL[slot];
        let pool = &by_case[slot];
        let subgroup = pool[(mix(args.seed, 2 * i) % pool.len() as u64) as usize];
        let branch =
            BranchAssignment::random(args.prime, mix(args.seed, 2 * i + 1)).map_err(usage)?;
        let report = verify_config(&subgroup, &branch, &opts).map_err(usage)?;
        instances.push(FuzzInstance {
            index: i,
            case,
            report,
        });
    }

    let failed = instances.iter().any(|inst| !inst.report.pass);
    let rendering = match format {
        Format::Text => text::fuzz(args, &instances),
        Format::Json => json::fuzz(args, &instances),
        Format::Dot => unreachable!("rejected by resolve_format"),
    };
    Ok((
        Outcome {
            rendering,
            failed_checks: failed,
        },
        args.out.output.clone(),
    ))
}
