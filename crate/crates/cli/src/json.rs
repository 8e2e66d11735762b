//! JSON renderings: a fixed envelope `{tool, version, command, input,
//! results, pass}` with deterministic key order; point counts and
//! L-polynomial data appear as exact decimal strings.

use serde::Serialize;
use serde_json::{json, Value};

use kleincover_core::f2sym::{format_subset, CaseLabel, ClassificationReport};
use kleincover_core::tower::{PolarizationBound, PrymSummary, TowerDiagram};
use kleincover_core::verify::VerificationReport;

use crate::commands::FuzzInstance;
use crate::FuzzArgs;

#[derive(Serialize)]
struct Envelope {
    tool: &'static str,
    version: &'static str,
    command: &'static str,
    input: Value,
    results: Value,
    pass: bool,
}

fn render(command: &'static str, input: Value, results: Value, pass: bool) -> String {
    let envelope = Envelope {
        tool: "kleincover",
        version: env!("CARGO_PKG_VERSION"),
        command,
        input,
        results,
        pass,
    };
    let mut out = serde_json::to_string_pretty(&envelope).expect("serializable");
    out.push('\n');
    out
}

pub fn classify(report: &ClassificationReport, diffs: &[String]) -> String {
    let results = json!({
        "census": {
            "I1": report.count(CaseLabel::I1),
            "I2": report.count(CaseLabel::I2),
            "II1": report.count(CaseLabel::II1),
            "II2": report.count(CaseLabel::II2),
        },
        "isotropic": report.isotropic_total,
        "non_isotropic": report.non_isotropic_total,
        "total": report.grand_total,
        "mismatches": diffs,
    });
    render("classify", json!({}), results, diffs.is_empty())
}

fn polarization_json(p: &PolarizationBound) -> Value {
    match p {
        PolarizationBound::Fixed(v) => json!({ "type": "fixed", "exponents": v }),
        PolarizationBound::Divides {
            exponent,
            dim,
            kernel_order,
        } => json!({
            "type": "divides",
            "exponents": vec![*exponent; *dim as usize],
            "kernel_order": kernel_order,
        }),
    }
}

pub fn tower(tower: &TowerDiagram, summary: &PrymSummary) -> String {
    let input = json!({
        "case": tower.case.label.as_str(),
        "generators": [
            format_subset(tower.triple.s_eta()),
            format_subset(tower.triple.s_xi()),
        ],
    });
    let nodes: Vec<Value> = tower
        .nodes
        .iter()
        .map(|n| {
            json!({
                "name": n.name,
                "alias": n.alias,
                "deck_order": n.deck_subgroup.order(),
                "deck": format!("{:?}", n.deck_subgroup),
                "genus": n.genus,
                "deg_over_line": n.deg_over_line,
                "subset": n.defining_subset.map(format_subset),
                "starred": n.starred,
                "hyperelliptic": n.hyperelliptic,
                "polarization": n.restricted_polarization,
            })
        })
        .collect();
    let lifts: Vec<Value> = tower
        .lifts
        .iter()
        .map(|l| {
            json!({
                "name": l.name.as_str(),
                "flips": format!("{:?}", l.element),
                "fixed_points": l.fixed_points,
            })
        })
        .collect();
    let components: Vec<Value> = summary
        .components
        .iter()
        .map(|c| {
            json!({
                "node": tower.nodes[c.node].name,
                "alias": tower.nodes[c.node].alias,
                "dimension": c.dimension,
                "starred": c.starred,
                "polarization": polarization_json(&c.polarization),
            })
        })
        .collect();
    let predictions: Vec<Value> = summary
        .isogeny_predictions
        .iter()
        .map(|p| {
            json!({
                "quotient": tower.nodes[p.quotient].name,
                "genus": tower.nodes[p.quotient].genus,
                "factors": p.factors.iter().map(|&i| tower.nodes[i].name.clone()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let results = json!({
        "isotropic": tower.case.isotropic,
        "lifts": lifts,
        "nodes": nodes,
        "edges": tower.edges,
        "prym": {
            "components": components,
            "polarization": summary.prym_polarization.to_vec(),
            "isogeny_predictions": predictions,
            "moduli_signature": summary.moduli_signature,
            "moduli_dimension": summary.moduli_dimension,
        },
    });
    render("tower", input, results, true)
}

fn report_json(report: &VerificationReport) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "expected": c.expected,
                "actual": c.actual,
                "pass": c.pass,
            })
        })
        .collect();
    json!({
        "case": report.case.label.as_str(),
        "subgroup": report.subgroup.to_string(),
        "p": report.p,
        "points": report.points.to_vec(),
        "depth": report.max_q_exp,
        "checks": checks,
        "checks_total": report.checks.len(),
        "checks_failed": report.checks.iter().filter(|c| !c.pass).count(),
    })
}

pub fn verify(report: &VerificationReport) -> String {
    let input = json!({
        "case": report.case.label.as_str(),
        "subgroup": report.subgroup.to_string(),
        "p": report.p,
        "points": report.points.to_vec(),
        "depth": report.max_q_exp,
    });
    render("verify", input, report_json(report), report.pass)
}

pub fn fuzz(args: &FuzzArgs, instances: &[FuzzInstance]) -> String {
    let input = json!({
        "trials": args.trials,
        "p": args.prime,
        "seed": args.seed,
        "depth": args.depth,
    });
    let mut checks_total = 0usize;
    let mut checks_failed = 0usize;
    let rows: Vec<Value> = instances
        .iter()
        .map(|inst| {
            checks_total += inst.report.checks.len();
            checks_failed += inst.report.checks.iter().filter(|c| !c.pass).count();
            json!({
                "trial": inst.index,
                "case": inst.case.as_str(),
                "subgroup": inst.report.subgroup.to_string(),
                "points": inst.report.points.to_vec(),
                "pass": inst.report.pass,
            })
        })
        .collect();
    let pass = instances.iter().all(|i| i.report.pass);
    let results = json!({
        "instances": rows,
        "instances_total": instances.len(),
        "instances_passed": instances.iter().filter(|i| i.report.pass).count(),
        "checks_total": checks_total,
        "checks_failed": checks_failed,
    });
    render("fuzz", input, results, pass)
}
