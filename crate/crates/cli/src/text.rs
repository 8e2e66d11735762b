//! Plain-text renderings. Every function is deterministic: fixed orders,
//! fixed widths, no timing data.

use std::fmt::Write;

use kleincover_core::f2sym::{format_subset, CaseLabel, ClassificationReport};
use kleincover_core::tower::{PrymSummary, TowerDiagram};
use kleincover_core::verify::VerificationReport;

use crate::commands::FuzzInstance;
use crate::FuzzArgs;

pub fn classify(report: &ClassificationReport, diffs: &[String]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Klein subgroup census of a genus-3 hyperelliptic Jacobian");
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<6} {:>9}", "case", "subgroups");
    for label in CaseLabel::ALL {
        let _ = writeln!(out, "{:<6} {:>9}", label.as_str(), report.count(label));
    }
    let _ = writeln!(out);
    let _ = writeln!(out, "{:<14} {:>3}", "isotropic", report.isotropic_total);
    let _ = writeln!(out, "{:<14} {:>3}", "non-isotropic", report.non_isotropic_total);
    let _ = writeln!(out, "{:<14} {:>3}", "total", report.grand_total);
    let _ = writeln!(out);
    if diffs.is_empty() {
        let _ = writeln!(out, "census matches the reference values");
    } else {
        for d in diffs {
            let _ = writeln!(out, "MISMATCH {d}");
        }
    }
    out
}

fn polarization_string(p: &Option<Vec<u64>>) -> String {
    match p {
        None => "-".into(),
        Some(v) => {
            let items: Vec<String> = v.iter().map(|e| e.to_string()).collect();
            format!("({})", items.join(","))
        }
    }
}

pub fn tower(tower: &TowerDiagram, summary: &PrymSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "tower for case {}, generators {} and {}",
        tower.case.label,
        format_subset(tower.triple.s_eta()),
        format_subset(tower.triple.s_xi()),
    );
    let _ = writeln!(
        out,
        "isotropic: {}; top curve hyperelliptic: {}",
        if tower.case.isotropic { "yes" } else { "no" },
        match tower.nodes[0].hyperelliptic {
            Some(true) => "yes",
            _ => "no",
        }
    );
    let _ = write!(out, "fixed points of the lifts:");
    for lift in &tower.lifts {
        let _ = write!(out, " {}={}", lift.name.as_str(), lift.fixed_points);
    }
    let _ = writeln!(out);
    let _ = writeln!(out);

    let _ = writeln!(
        out,
        "{:<22} {:<5} {:>5} {:>7}  {:<17} {:<4} {:<12}",
        "node", "deck", "genus", "deg/P1", "subset", "star", "polarization"
    );
    for node in &tower.nodes {
        let display = match &node.alias {
            Some(alias) => format!("{} ({})", node.name, alias),
            None => node.name.clone(),
        };
        let _ = writeln!(
            out,
            "{:<22} {:<5} {:>5} {:>7}  {:<17} {:<4} {:<12}",
            display,
            format!("{}", node.deck_subgroup.order()),
            node.genus,
            node.deg_over_line,
            node.defining_subset
                .map(format_subset)
                .unwrap_or_else(|| "-".into()),
            if node.starred { "*" } else { "" },
            polarization_string(&node.restricted_polarization),
        );
    }

    let _ = writeln!(out);
    let _ = writeln!(out, "Prym decomposition (dimension 6):");
    for c in &summary.components {
        let node = &tower.nodes[c.node];
        let display = node.alias.as_deref().unwrap_or(&node.name);
        let star = if c.starred { "*" } else { "" };
        let _ = writeln!(
            out,
            "  {display}{star}: dim {}, polarization {}",
            c.dimension, c.polarization
        );
    }
    let pol: Vec<String> = summary
        .prym_polarization
        .iter()
        .map(|e| e.to_string())
        .collect();
    let _ = writeln!(out, "  induced polarization type: ({})", pol.join(","));
    let _ = writeln!(
        out,
        "  moduli: signature {:?}, dimension {}",
        summary.moduli_signature, summary.moduli_dimension
    );

    let _ = writeln!(out);
    let _ = writeln!(out, "quotient Jacobians up to isogeny:");
    for pred in &summary.isogeny_predictions {
        let name = &tower.nodes[pred.quotient].name;
        let factors: Vec<&str> = pred
            .factors
            .iter()
            .map(|&i| {
                tower.nodes[i]
                    .alias
                    .as_deref()
                    .unwrap_or(&tower.nodes[i].name)
            })
            .collect();
        let genus = tower.nodes[pred.quotient].genus;
        let rhs = if factors.is_empty() {
            "trivial".to_string()
        } else {
            factors.join(" x ")
        };
        let _ = writeln!(out, "  J({name}) [genus {genus}] ~ {rhs}");
    }
    out
}

pub fn verify(report: &VerificationReport) -> String {
    let mut out = String::new();
    let points: Vec<String> = report.points.iter().map(|u| u.to_string()).collect();
    let _ = writeln!(
        out,
        "verify case {} subgroup {} over p={} points {} depth {}",
        report.case.label,
        report.subgroup,
        report.p,
        points.join(","),
        report.max_q_exp
    );
    let name_width = report
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(10);
    for c in &report.checks {
        let _ = writeln!(
            out,
            "{:<width$}  {}  [expected {} actual {}]",
            c.name,
            if c.pass { "pass" } else { "FAIL" },
            c.expected,
            c.actual,
            width = name_width
        );
    }
    let failed = report.checks.iter().filter(|c| !c.pass).count();
    let _ = writeln!(
        out,
        "{} checks, {} failed -> {}",
        report.checks.len(),
        failed,
        if report.pass { "PASS" } else { "FAIL" }
    );
    out
}

pub fn fuzz(args: &FuzzArgs, instances: &[FuzzInstance]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "fuzz: {} trials over p={} seed {} depth {}",
        args.trials, args.prime, args.seed, args.depth
    );
    let mut checks_total = 0usize;
    let mut checks_failed = 0usize;
    for inst in instances {
        let failed = inst.report.checks.iter().filter(|c| !c.pass).count();
        checks_total += inst.report.checks.len();
        checks_failed += failed;
        let points: Vec<String> = inst.report.points.iter().map(|u| u.to_string()).collect();
        let _ = writeln!(
            out,
            "trial {:>3} case {:<5} subgroup {:<24} points {:<24} {}",
            inst.index,
            inst.case.as_str(),
            inst.report.subgroup.to_string(),
            points.join(","),
            if inst.report.pass { "pass" } else { "FAIL" }
        );
    }
    let passed = instances.iter().filter(|i| i.report.pass).count();
    let _ = writeln!(
        out,
        "{}/{} instances passed, {checks_total} checks, {checks_failed} failed",
        passed,
        instances.len()
    );
    out
}
