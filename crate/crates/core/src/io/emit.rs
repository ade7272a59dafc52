use std::fmt::Write;

use crate::error::{Error, Result};
use crate::tilt::Lattice;

/// Rows of strings with a header, rendered as aligned text or CSV.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>) -> Self {
        Table { header: header.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push<S: Into<String>>(&mut self, row: impl IntoIterator<Item = S>) {
        self.rows.push(row.into_iter().map(Into::into).collect());
    }
}

pub fn text_table(t: &Table) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = t.header.iter().map(|h| width(h)).collect();
    for row in &t.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(cell));
        }
    }
    let mut out = String::new();
    for row in std::iter::once(&t.header).chain(&t.rows) {
        let cells: Vec<String> =
            row.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - width(c)))).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn csv_table(t: &Table) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::usage(format!("csv: {e}"));
    w.write_record(&t.header).map_err(io)?;
    for row in &t.rows {
        w.write_record(row).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::usage(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::usage(format!("csv: {e}")))
}

/// Stable node name: the summands' dimension vectors as sorted tuples.
pub fn dot_node_id(lattice: &Lattice, node: usize) -> String {
    let cat = lattice.catalog();
    let mut dims: Vec<&[usize]> = lattice.pair(node).module.iter().map(|&i| cat.module(i).dims()).collect();
    if dims.is_empty() {
        return "0".into();
    }
    dims.sort();
    dims.iter()
        .map(|d| format!("({})", d.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
        .collect::<Vec<_>>()
        .join(" ")
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// The Hasse quiver in DOT, edges from larger to smaller torsion class,
/// labelled by bricks. `comment` lines go in front as `//` comments.
pub fn hasse_dot(lattice: &Lattice, comment: &[String]) -> String {
    let cat = lattice.catalog();
    let mut out = String::new();
    for c in comment {
        let _ = writeln!(out, "// {c}");
    }
    out.push_str("digraph hasse {\n");
    for n in 0..lattice.len() {
        let _ = writeln!(out, "  {} [label={}];", quote(&dot_node_id(lattice, n)), quote(&lattice.pair(n).name(cat)));
    }
    for e in lattice.edges() {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            quote(&dot_node_id(lattice, e.from)),
            quote(&dot_node_id(lattice, e.to)),
            quote(cat.name(e.label))
        );
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_csv() {
        let mut t = Table::new(["module", "bricks"]);
        t.push(["1,3/2", "1⊕2"]);
        assert_eq!(text_table(&t), "module  bricks\n1,3/2   1⊕2\n");
        assert_eq!(csv_table(&t).unwrap(), "module,bricks\n\"1,3/2\",1⊕2\n");
    }
}
