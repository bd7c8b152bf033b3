//! Text renderings: Hasse diagrams as DOT and aligned operation tables.

use std::fmt::Write as _;

use crate::algebra::{Algebra, Table};

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// The cover relation as a DOT digraph drawn bottom to top.
pub fn hasse_dot<A: Algebra>(name: &str, alg: &A) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(name));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for x in 0..alg.size() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", dot_escape(alg.label(x)));
    }
    for (lo, hi) in alg.lattice().covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

pub fn op_symbol(op: &str) -> &str {
    match op {
        "join" => "∨",
        "meet" => "∧",
        "times" => "⊙",
        "implies" => "→",
        other => other,
    }
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{s}{}", " ".repeat(w.saturating_sub(width(s))))
}

/// `table` with row and column headers from `labels`, columns aligned.
pub fn format_table(symbol: &str, labels: &[String], table: &Table) -> String {
    let n = table.size();
    let cell = |x: usize| labels[x].as_str();
    let w = labels.iter().map(|l| width(l)).max().unwrap_or(1).max(1);
    let head = width(symbol).max(w);
    let mut out = String::new();
    out.push_str(&pad(symbol, head));
    out.push_str(" |");
    for b in 0..n {
        let _ = write!(out, " {}", pad(cell(b), w));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    out.push_str(&"-".repeat(head + 1));
    out.push('+');
    out.push_str(&"-".repeat(n * (w + 1)));
    out.push('\n');
    for a in 0..n {
        let mut line = format!("{} |", pad(cell(a), head));
        for b in 0..n {
            let _ = write!(line, " {}", pad(cell(table.get(a, b)), w));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// The table of `op` (`join`, `meet`, `times` or `implies`), if the signature
/// has it.
pub fn op_table<A: Algebra>(alg: &A, op: &str) -> Option<String> {
    let k = A::table_names().iter().position(|&t| t == op)?;
    Some(format_table(op_symbol(op), alg.labels(), alg.tables()[k]))
}

/// Every table of the signature, separated by blank lines.
pub fn all_tables<A: Algebra>(alg: &A) -> String {
    A::table_names()
        .iter()
        .filter_map(|op| op_table(alg, op))
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chain;
    use crate::corpus;

    #[test]
    fn lrex3_hasse() {
        let a = corpus::get("lrex3").unwrap();
        let dot = hasse_dot("lrex3", &a);
        assert!(dot.contains("rankdir=BT"));
        let edges: Vec<(String, String)> = a
            .lattice()
            .covers()
            .into_iter()
            .map(|(x, y)| (a.label(x).to_string(), a.label(y).to_string()))
            .collect();
        let mut expected: Vec<(String, String)> = [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")]
            .iter()
            .map(|&(x, y)| (x.to_string(), y.to_string()))
            .collect();
        let mut got = edges.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert_eq!(dot.matches(" -> ").count(), 7);
        assert_eq!(dot.matches("[label=").count(), 6);
    }

    #[test]
    fn trivial_table() {
        let t = op_table(&chain(1).unwrap(), "times").unwrap();
        let lines: Vec<&str> = t.lines().collect();
        assert_eq!(lines.len(), 3);
        assert_eq!(lines[2], "1 | 1");
    }

    #[test]
    fn lattice_has_no_times() {
        let a = corpus::get("lrex3").unwrap();
        assert!(op_table(a.lattice(), "times").is_none());
        assert!(op_table(a.lattice(), "join").is_some());
    }
}
