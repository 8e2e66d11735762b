//! DOT rendering of a covering tower: one box per quotient curve labeled
//! `name/genus/polarization`, edges following the quotient maps, fixed node
//! order so identical inputs give identical bytes.

use std::fmt::Write;

use kleincover_core::tower::TowerDiagram;

pub fn tower(tower: &TowerDiagram) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph tower {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    let _ = writeln!(
        out,
        "  label=\"case {} tower, generators {} {}\";",
        tower.case.label,
        kleincover_core::f2sym::format_subset(tower.triple.s_eta()),
        kleincover_core::f2sym::format_subset(tower.triple.s_xi())
    );
    for node in &tower.nodes {
        let display = node.alias.as_deref().unwrap_or(&node.name);
        let star = if node.starred { "*" } else { "" };
        let pol = match &node.restricted_polarization {
            Some(v) => {
                let items: Vec<String> = v.iter().map(|e| e.to_string()).collect();
                format!("({})", items.join(","))
            }
            None => "-".into(),
        };
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{display}{star}/{}/{pol}\"];",
            node.name, node.genus
        );
    }
    for (from, to) in &tower.edges {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\";",
            tower.nodes[*from].name, tower.nodes[*to].name
        );
    }
    let _ = writeln!(out, "}}");
    out
}
