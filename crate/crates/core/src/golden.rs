//! Recomputes the reference tables shipped in `fixtures/` and diffs them
//! row by row against the library.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::SearchParams;
use crate::error::{Error, Result};
use crate::glue::{
    bongartz_glued, cprime_invariants, glue_mgs, glue_semibrick, glue_torsion_class, reduce, sweep_all_pairs,
    GluingContext,
};
use crate::io::parse_document;
use crate::linalg::PrimeField;
use crate::rep::{is_isomorphic, module_name};
use crate::tilt::{Catalog, Lattice};

/// A built-in fixture: an input file and its expected tables.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub quiver: &'static str,
    pub tables: &'static str,
}

pub const FIXTURES: [Fixture; 2] = [
    Fixture {
        name: "a2",
        quiver: include_str!("../fixtures/a2.quiver"),
        tables: include_str!("../fixtures/a2.tables"),
    },
    Fixture {
        name: "a3",
        quiver: include_str!("../fixtures/a3.quiver"),
        tables: include_str!("../fixtures/a3.tables"),
    },
];

pub fn fixture(name: &str) -> Option<Fixture> {
    FIXTURES.iter().copied().find(|f| f.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub fixture: String,
    pub item: String,
    pub ok: bool,
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }

    pub fn lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                if c.ok {
                    format!("ok   {} {}", c.fixture, c.item)
                } else {
                    format!("FAIL {} {}\n     expected: {}\n     found:    {}", c.fixture, c.item, c.expected, c.found)
                }
            })
            .collect()
    }

    /// `TableMismatch` listing the failing rows, if any.
    pub fn into_result(self) -> Result<Report> {
        if self.passed() {
            return Ok(self);
        }
        let rows: Vec<String> = self.failures().map(|c| format!("{} {}", c.fixture, c.item)).collect();
        Err(Error::TableMismatch(rows.join("; ")))
    }
}

/// Sections of a tables file: name to rows of `|`-separated cells.
type Sections = BTreeMap<String, Vec<(usize, Vec<String>)>>;

fn parse_tables(text: &str) -> Result<Sections> {
    let mut out: Sections = BTreeMap::new();
    let mut current: Option<String> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            current = Some(name.to_string());
            out.entry(name.to_string()).or_default();
            continue;
        }
        let section = current.as_ref().ok_or_else(|| Error::Parse {
            line: k + 1,
            column: 1,
            message: "row outside a section".into(),
        })?;
        let cells = line.split('|').map(|c| c.trim().to_string()).collect();
        out.get_mut(section).expect("section created").push((k + 1, cells));
    }
    Ok(out)
}

/// A module written as space-separated summand names, `0` for zero.
fn names(cell: &str) -> Vec<String> {
    let mut v: Vec<String> = cell.split_whitespace().filter(|s| *s != "0").map(str::to_string).collect();
    v.sort();
    v
}

fn show(v: &[String]) -> String {
    if v.is_empty() {
        "0".into()
    } else {
        v.join(" ")
    }
}

fn index_of_name(cat: &Catalog, name: &str, line: usize) -> Result<usize> {
    (0..cat.len()).find(|&i| cat.name(i) == name).ok_or_else(|| Error::Parse {
        line,
        column: 1,
        message: format!("no indecomposable named `{name}`"),
    })
}

fn indices(cat: &Catalog, cell: &str, line: usize) -> Result<Vec<usize>> {
    let mut v = names(cell).iter().map(|n| index_of_name(cat, n, line)).collect::<Result<Vec<_>>>()?;
    v.sort_unstable();
    Ok(v)
}

fn names_of(cat: &Catalog, idx: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = idx.iter().map(|&i| cat.name(i).to_string()).collect();
    v.sort();
    v
}

/// `mod`, `mod \ S T`, or a list of indecomposables.
fn class_members(cat: &Catalog, cell: &str, line: usize) -> Result<Vec<usize>> {
    let cell = cell.trim();
    if cell == "mod" {
        return Ok((0..cat.len()).collect());
    }
    if let Some(rest) = cell.strip_prefix("mod") {
        let rest = rest.trim_start().strip_prefix('\\').ok_or_else(|| Error::Parse {
            line,
            column: 1,
            message: format!("bad torsion class `{cell}`"),
        })?;
        let drop = indices(cat, rest, line)?;
        return Ok((0..cat.len()).filter(|i| !drop.contains(i)).collect());
    }
    indices(cat, cell, line)
}

fn node_of(l: &Lattice, cell: &str, line: usize) -> Result<usize> {
    let module = indices(l.catalog(), cell, line)?;
    l.pairs().iter().position(|p| p.module == module).ok_or_else(|| Error::Parse {
        line,
        column: 1,
        message: format!("`{cell}` is not support τ-tilting"),
    })
}

fn cell(row: &[String], k: usize, line: usize) -> Result<&str> {
    row.get(k).map(String::as_str).ok_or_else(|| Error::Parse {
        line,
        column: 1,
        message: format!("row needs at least {} cells", k + 1),
    })
}

struct Diff<'a> {
    fixture: &'a str,
    report: &'a mut Report,
}

impl Diff<'_> {
    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, item: impl Into<String>, expected: T, found: T) {
        let ok = expected == found;
        self.report.checks.push(Check {
            fixture: self.fixture.to_string(),
            item: item.into(),
            ok,
            expected: format!("{expected:?}"),
            found: format!("{found:?}"),
        });
    }
}

fn hasse_edges(l: &Lattice) -> BTreeSet<(String, String, String)> {
    let cat = l.catalog();
    l.edges()
        .iter()
        .map(|e| {
            (
                show(&names_of(cat, &l.pair(e.from).module)),
                show(&names_of(cat, &l.pair(e.to).module)),
                cat.name(e.label).to_string(),
            )
        })
        .collect()
}

fn expected_edges(rows: &[(usize, Vec<String>)], l: &Lattice) -> Result<BTreeSet<(String, String, String)>> {
    let mut out = BTreeSet::new();
    for (line, row) in rows {
        let text = cell(row, 0, *line)?;
        let bad = || Error::Parse { line: *line, column: 1, message: "expected `from -> to : label`".into() };
        let (arrow, label) = text.rsplit_once(':').ok_or_else(bad)?;
        let (from, to) = arrow.split_once("->").ok_or_else(bad)?;
        // Resolve through the lattice so unknown modules are reported.
        node_of(l, from, *line)?;
        node_of(l, to, *line)?;
        out.insert((show(&names(from)), show(&names(to)), label.trim().to_string()));
    }
    Ok(out)
}

/// Checks one fixture at the given field and search parameters.
pub fn verify_fixture(
    fx: Fixture,
    field: PrimeField,
    params: SearchParams,
    cap: usize,
    report: &mut Report,
) -> Result<()> {
    let doc = parse_document(fx.quiver, field, params, cap)?;
    let glued = doc.glued.clone().ok_or_else(|| Error::usage("fixture is not a glued algebra"))?;
    let ctx = GluingContext::new(glued, cap)?;
    let sections = parse_tables(fx.tables)?;
    let (lb, lc, la) = (ctx.b(), ctx.c(), ctx.a());
    let (cb, cc, ca) = (lb.catalog(), lc.catalog(), la.catalog());
    let mut d = Diff { fixture: fx.name, report };
    let empty = Vec::new();
    let section = |name: &str| sections.get(name).unwrap_or(&empty);

    for (k, (line, row)) in section("torsion").iter().enumerate() {
        let tb = class_members(cb, cell(row, 0, *line)?, *line)?;
        let ta = class_members(ca, cell(row, 1, *line)?, *line)?;
        let tc = class_members(cc, cell(row, 2, *line)?, *line)?;
        let (ib, ic) = match (lb.index_of_members(&tb), lc.index_of_members(&tc)) {
            (Some(ib), Some(ic)) => (ib, ic),
            _ => return Err(Error::Parse { line: *line, column: 1, message: "not a torsion class".into() }),
        };
        let glued = glue_torsion_class(&ctx, lb.class(ib), lc.class(ic))?;
        d.compare(format!("torsion row {}", k + 1), names_of(ca, &ta), names_of(ca, &glued.members));
    }

    let outcomes = sweep_all_pairs(&ctx)?;
    let stt_rows = section("stt");
    if !stt_rows.is_empty() {
        d.compare("glued pair count", stt_rows.len(), outcomes.len());
    }
    for (k, (line, row)) in stt_rows.iter().enumerate() {
        let xi = node_of(lb, cell(row, 0, *line)?, *line)?;
        let yi = node_of(lc, cell(row, 2, *line)?, *line)?;
        let o = outcomes.iter().find(|o| o.x == xi && o.y == yi).expect("sweep covers every pair");
        d.compare(format!("stt row {} module", k + 1), names(cell(row, 1, *line)?), names_of(ca, &o.pair.module));
        let bricks = la.semibrick_of(o.node)?;
        d.compare(format!("stt row {} semibrick", k + 1), names(cell(row, 3, *line)?), names_of(ca, &bricks));
        let glued = glue_semibrick(&ctx, &lb.semibrick_of(xi)?, &lc.semibrick_of(yi)?)?;
        d.compare(format!("stt row {} glued semibrick", k + 1), names_of(ca, &bricks), names_of(ca, &glued));
    }

    if let Some(rows) = sections.get("approximations") {
        let mut expected = BTreeSet::new();
        for (line, row) in rows {
            let (src, tgt) = cell(row, 2, *line)?.split_once("->").ok_or_else(|| Error::Parse {
                line: *line,
                column: 1,
                message: "expected `source -> target`".into(),
            })?;
            expected.insert((
                show(&names(cell(row, 0, *line)?)),
                show(&names(cell(row, 1, *line)?)),
                src.trim().to_string(),
                tgt.trim().to_string(),
            ));
        }
        let mut found = BTreeSet::new();
        for o in &outcomes {
            let y = lc.pair(o.y).rep(cc);
            if y.is_zero() {
                continue;
            }
            let source = ctx.j1(&y)?;
            let target = ctx.attach(&y, &o.approximation.map)?;
            if is_isomorphic(&source, &target)?.is_none() {
                found.insert((
                    show(&names_of(cb, &lb.pair(o.x).module)),
                    show(&names_of(cc, &lc.pair(o.y).module)),
                    module_name(&source)?,
                    module_name(&target)?,
                ));
            }
        }
        d.compare("approximations", expected, found);
    }

    if let Some(rows) = sections.get("unglued") {
        let mut expected = BTreeSet::new();
        for (line, row) in rows {
            expected.insert(names_of(ca, &la.pair(node_of(la, cell(row, 0, *line)?, *line)?).module));
        }
        let hit: BTreeSet<usize> = outcomes.iter().map(|o| o.node).collect();
        let found: BTreeSet<Vec<String>> =
            (0..la.len()).filter(|n| !hit.contains(n)).map(|n| names_of(ca, &la.pair(n).module)).collect();
        d.compare("unglued modules", expected, found);
    }

    for (sec, l) in [("hasse A", la), ("hasse B", lb), ("hasse C", lc)] {
        if let Some(rows) = sections.get(sec) {
            d.compare(sec, expected_edges(rows, l)?, hasse_edges(l));
        }
    }

    let (mgs_b, mgs_c) = (lb.maximal_green_sequences(), lc.maximal_green_sequences());
    if let Some(rows) = sections.get("mgs") {
        d.compare("glued sequence count", rows.len(), mgs_b.len() * mgs_c.len());
        for (k, (line, row)) in rows.iter().enumerate() {
            let label_names = |l: &Lattice, labels: &[usize]| -> Vec<String> {
                labels.iter().map(|&i| l.catalog().name(i).to_string()).collect()
            };
            let split = |c: &str| -> Vec<String> { c.split_whitespace().map(str::to_string).collect() };
            let (bb, bc) = (split(cell(row, 0, *line)?), split(cell(row, 1, *line)?));
            let alpha = mgs_b.iter().find(|g| label_names(lb, &g.labels) == bb);
            let beta = mgs_c.iter().find(|g| label_names(lc, &g.labels) == bc);
            let (Some(alpha), Some(beta)) = (alpha, beta) else {
                d.compare(format!("mgs row {} inputs", k + 1), (bb, bc), (vec![], vec![]));
                continue;
            };
            let gamma = glue_mgs(&ctx, alpha, beta)?;
            d.compare(format!("mgs row {} bricks", k + 1), split(cell(row, 2, *line)?), label_names(la, &gamma.labels));
            let path: Vec<String> = cell(row, 3, *line)?.split('>').map(|c| show(&names(c))).collect();
            let found: Vec<String> =
                gamma.chain.iter().rev().map(|&n| show(&names_of(ca, &la.pair(n).module))).collect();
            d.compare(format!("mgs row {} path", k + 1), path, found);
            let chain: Vec<Vec<String>> = cell(row, 4, *line)?
                .split(';')
                .map(|c| class_members(ca, c, *line).map(|m| names_of(ca, &m)))
                .collect::<Result<_>>()?;
            let found: Vec<Vec<String>> = gamma.chain.iter().map(|&n| names_of(ca, &la.class(n).members)).collect();
            d.compare(format!("mgs row {} chain", k + 1), chain, found);
            d.compare(format!("mgs row {} length", k + 1), alpha.len() + beta.len(), gamma.len());
        }
    }
    if let Some(rows) = sections.get("mgs count") {
        for (line, row) in rows {
            let n: usize = cell(row, 0, *line)?.parse().map_err(|_| Error::Parse {
                line: *line,
                column: 1,
                message: "expected a count".into(),
            })?;
            d.compare("maximal green sequences of A", n, la.maximal_green_sequences().len());
        }
    }

    if let Some(nodes) = sections.get("figure nodes") {
        let mut number = BTreeMap::new();
        for (line, row) in nodes {
            let (num, module) = cell(row, 0, *line)?.split_once('=').ok_or_else(|| Error::Parse {
                line: *line,
                column: 1,
                message: "expected `n = module`".into(),
            })?;
            number.insert(num.trim().to_string(), node_of(la, module, *line)?);
        }
        d.compare("figure node count", number.len(), la.len());
        let mut expected = BTreeSet::new();
        for (line, row) in section("figure edges") {
            let text = cell(row, 0, *line)?;
            let parsed =
                text.split_once("->").and_then(|(a, b)| Some((*number.get(a.trim())?, *number.get(b.trim())?)));
            expected.insert(parsed.ok_or_else(|| Error::Parse {
                line: *line,
                column: 1,
                message: format!("bad edge `{text}`"),
            })?);
        }
        let found: BTreeSet<(usize, usize)> = la.edges().iter().map(|e| (e.from, e.to)).collect();
        d.compare("figure edges", expected, found);
    }

    for (line, row) in section("interval") {
        let xi = node_of(lb, cell(row, 0, *line)?, *line)?;
        let red = reduce(&ctx, xi)?;
        let a_side: Vec<usize> =
            cell(row, 1, *line)?.split(';').map(|c| node_of(la, c, *line)).collect::<Result<_>>()?;
        let c_side: Vec<usize> =
            cell(row, 2, *line)?.split(';').map(|c| node_of(lc, c, *line)).collect::<Result<_>>()?;
        let expected: BTreeSet<(usize, usize)> = a_side.into_iter().zip(c_side).collect();
        let found: BTreeSet<(usize, usize)> = red.interval.iter().copied().zip(red.forward.iter().copied()).collect();
        d.compare(format!("interval above {}", cell(row, 0, *line)?), expected, found);
    }

    for (line, row) in section("bongartz") {
        let xi = node_of(lb, cell(row, 0, *line)?, *line)?;
        let out = bongartz_glued(&ctx, xi)?;
        d.compare(
            format!("completion of {}", cell(row, 0, *line)?),
            names(cell(row, 1, *line)?),
            names_of(ca, &out.pair.module),
        );
    }

    for (line, row) in section("cprime") {
        let xi = node_of(lb, cell(row, 0, *line)?, *line)?;
        let r = cprime_invariants(&ctx, xi)?;
        let expected: Vec<String> = (1..4).map(|k| cell(row, k, *line).map(str::to_string)).collect::<Result<_>>()?;
        let found = vec![r.cprime.dim.to_string(), r.cprime.num_simples.to_string(), r.cprime.radical_dim.to_string()];
        d.compare(format!("C' invariants for {}", cell(row, 0, *line)?), expected, found);
    }
    Ok(())
}

/// Checks every built-in fixture.
pub fn verify_tables(field: PrimeField, params: SearchParams, cap: usize) -> Result<Report> {
    let mut report = Report::default();
    for fx in FIXTURES {
        verify_fixture(fx, field, params, cap, &mut report)?;
    }
    Ok(report)
}
