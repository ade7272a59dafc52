//! Text format for quivers, glued algebras and modules.
//!
//! ```text
//! # a plain quiver
//! vertices: 1 2 3
//! arrow a: 2 -> 1
//!
//! # a glued algebra
//! [B]
//! vertices: 1 2
//! arrow b: 1 -> 2
//! [C]
//! vertices: 3
//! [M]
//! arrow a: 3 -> 1
//!
//! [modules]
//! module X on B = (1, 1)
//! module Z on A = (1, 1, 1) with b = [1], a = [1]
//! ```
//!
//! A dimension vector alone is accepted when exactly one indecomposable has
//! it. Matrices list rows separated by `;`, entries by spaces.

use std::sync::Arc;

use crate::algebra::{Arrow, GluedAlgebra, PathAlgebra, Quiver, SearchParams};
use crate::error::{Error, Result};
use crate::linalg::{Mat, PrimeField};
use crate::rep::Rep;
use crate::tilt::Catalog;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
    C,
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: String,
    pub side: Side,
    pub rep: Rep,
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub struct Document {
    /// The algebra of a plain quiver file, or the glued `A`.
    pub algebra: Arc<PathAlgebra>,
    pub glued: Option<GluedAlgebra>,
    pub modules: Vec<NamedModule>,
}

impl Document {
    pub fn algebra_of(&self, side: Side) -> Result<&Arc<PathAlgebra>> {
        match (side, &self.glued) {
            (Side::A, _) => Ok(&self.algebra),
            (Side::B, Some(g)) => Ok(g.b()),
            (Side::C, Some(g)) => Ok(g.c()),
            _ => Err(Error::usage("B and C only exist in a glued file")),
        }
    }

    pub fn module(&self, name: &str) -> Option<&NamedModule> {
        self.modules.iter().find(|m| m.name == name)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Section {
    Plain,
    B,
    C,
    M,
    Modules,
}

#[derive(Default)]
struct QuiverText {
    vertices: Option<(usize, Vec<String>)>,
    arrows: Vec<(usize, String, String, String)>,
}

struct ModuleText {
    line: usize,
    name: String,
    side: Side,
    dims: Vec<usize>,
    maps: Vec<(String, Vec<Vec<u32>>, usize)>,
}

/// Cursor over one line with 1-based column tracking.
struct Cursor {
    line: usize,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn new(line: usize, src: &str) -> Self {
        Cursor { line, chars: src.chars().enumerate().map(|(i, c)| (i + 1, c)).collect(), pos: 0 }
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len() + 1, |c| c.0)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column(), message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| c.1)
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        let n = s.chars().count();
        let matches =
            self.chars.len() >= self.pos + n && self.chars[self.pos..self.pos + n].iter().map(|c| c.1).eq(s.chars());
        if matches {
            self.pos += n;
        }
        matches
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{s}`")))
        }
    }

    /// A label: letters, digits, `_`, `'` and `.`.
    fn ident(&mut self, what: &str) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_alphanumeric() || "_'.".contains(c.1)) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error(format!("expected {what}")));
        }
        Ok(self.chars[start..self.pos].iter().map(|c| c.1).collect())
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.1.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
        text.parse().map_err(|_| Error::Parse {
            line: self.line,
            column: self.chars[start].0,
            message: "number too large".into(),
        })
    }

    fn finish(&mut self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

fn strip_comment(line: &str) -> &str {
    line.split('#').next().unwrap_or("")
}

/// Parses a quiver or glued-algebra file. `cap` bounds the catalog built
/// to resolve dimension-vector literals.
pub fn parse_document(text: &str, field: PrimeField, params: SearchParams, cap: usize) -> Result<Document> {
    let mut section = Section::Plain;
    let mut seen_sections = Vec::new();
    let (mut plain, mut qb, mut qc) = (QuiverText::default(), QuiverText::default(), QuiverText::default());
    let mut m_arrows = Vec::new();
    let mut modules = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let mut cur = Cursor::new(line_no, strip_comment(raw));
        if cur.at_end() {
            continue;
        }
        if cur.eat("[") {
            let name = cur.ident("a section name")?;
            section = match name.as_str() {
                "B" => Section::B,
                "C" => Section::C,
                "M" => Section::M,
                "modules" => Section::Modules,
                _ => return Err(cur.error(format!("unknown section `{name}`"))),
            };
            if seen_sections.contains(&section) {
                return Err(cur.error(format!("section `{name}` appears twice")));
            }
            seen_sections.push(section);
            cur.expect("]")?;
            cur.finish()?;
            continue;
        }
        if cur.eat("module") {
            modules.push(parse_module_line(&mut cur)?);
            continue;
        }
        let target = match section {
            Section::Plain => &mut plain,
            Section::B => &mut qb,
            Section::C => &mut qc,
            Section::M => {
                let (name, s, t) = parse_arrow(&mut cur)?;
                m_arrows.push((line_no, name, s, t));
                continue;
            }
            Section::Modules => return Err(cur.error("expected `module`")),
        };
        if cur.eat("vertices") {
            cur.expect(":")?;
            if target.vertices.is_some() {
                return Err(cur.error("vertices listed twice"));
            }
            let mut vs = Vec::new();
            while !cur.at_end() {
                vs.push(cur.ident("a vertex label")?);
            }
            target.vertices = Some((line_no, vs));
        } else {
            let (name, s, t) = parse_arrow(&mut cur)?;
            target.arrows.push((line_no, name, s, t));
        }
    }

    let glued_file = seen_sections.iter().any(|s| matches!(s, Section::B | Section::C | Section::M));
    let (algebra, glued) = if glued_file {
        if plain.vertices.is_some() || !plain.arrows.is_empty() {
            return Err(Error::Parse { line: 1, column: 1, message: "quiver lines before the first section".into() });
        }
        let b = PathAlgebra::with_params(build_quiver(qb, "B")?, field, params);
        let c = PathAlgebra::with_params(build_quiver(qc, "C")?, field, params);
        let conn = m_arrows.iter().map(|(_, n, s, t)| (n.as_str(), s.as_str(), t.as_str())).collect::<Vec<_>>();
        let g = GluedAlgebra::new(b, c, &conn)?;
        (Arc::clone(g.a()), Some(g))
    } else {
        (PathAlgebra::with_params(build_quiver(plain, "quiver")?, field, params), None)
    };
    let mut doc = Document { algebra, glued, modules: Vec::new() };
    for m in modules {
        let rep = build_module(&doc, &m, cap)?;
        if doc.module(&m.name).is_some() {
            return Err(Error::Parse {
                line: m.line,
                column: 1,
                message: format!("module `{}` defined twice", m.name),
            });
        }
        doc.modules.push(NamedModule { name: m.name, side: m.side, rep });
    }
    Ok(doc)
}

fn parse_arrow(cur: &mut Cursor) -> Result<(String, String, String)> {
    cur.expect("arrow")?;
    let name = cur.ident("an arrow name")?;
    cur.expect(":")?;
    let s = cur.ident("a source vertex")?;
    cur.expect("->")?;
    let t = cur.ident("a target vertex")?;
    cur.finish()?;
    Ok((name, s, t))
}

fn build_quiver(q: QuiverText, what: &str) -> Result<Quiver> {
    let (line, vertices) = q.vertices.ok_or_else(|| Error::Parse {
        line: 1,
        column: 1,
        message: format!("{what}: missing `vertices:` line"),
    })?;
    let mut arrows = Vec::with_capacity(q.arrows.len());
    for (l, name, s, t) in &q.arrows {
        let find = |v: &str| {
            vertices.iter().position(|x| x == v).ok_or_else(|| Error::Parse {
                line: *l,
                column: 1,
                message: format!("{what}: unknown vertex `{v}`"),
            })
        };
        arrows.push(Arrow { name: name.clone(), source: find(s)?, target: find(t)? });
    }
    Quiver::from_parts(vertices, arrows).map_err(|e| match e {
        Error::Usage(message) => Error::Parse { line, column: 1, message },
        other => other,
    })
}

fn parse_module_line(cur: &mut Cursor) -> Result<ModuleText> {
    let line = cur.line;
    let name = cur.ident("a module name")?;
    let side = if cur.eat("on") {
        match cur.ident("`A`, `B` or `C`")?.as_str() {
            "A" => Side::A,
            "B" => Side::B,
            "C" => Side::C,
            other => return Err(cur.error(format!("unknown algebra `{other}`"))),
        }
    } else {
        Side::A
    };
    cur.expect("=")?;
    cur.expect("(")?;
    let mut dims = Vec::new();
    if !cur.eat(")") {
        loop {
            dims.push(cur.number()? as usize);
            if cur.eat(")") {
                break;
            }
            cur.expect(",")?;
        }
    }
    let mut maps = Vec::new();
    if cur.eat("with") {
        loop {
            cur.skip_ws();
            let col = cur.column();
            let arrow = cur.ident("an arrow name")?;
            cur.expect("=")?;
            maps.push((arrow, parse_matrix(cur)?, col));
            if !cur.eat(",") {
                break;
            }
        }
    }
    cur.finish()?;
    Ok(ModuleText { line, name, side, dims, maps })
}

fn parse_matrix(cur: &mut Cursor) -> Result<Vec<Vec<u32>>> {
    cur.expect("[")?;
    let mut rows = vec![Vec::new()];
    loop {
        match cur.peek() {
            Some(']') => {
                cur.pos += 1;
                break;
            }
            Some(';') => {
                cur.pos += 1;
                rows.push(Vec::new());
            }
            Some(c) if c.is_ascii_digit() => {
                let v = cur.number()?;
                rows.last_mut().expect("non-empty").push(u32::try_from(v).map_err(|_| cur.error("entry too large"))?);
            }
            _ => return Err(cur.error("expected a matrix entry, `;` or `]`")),
        }
    }
    if rows.len() == 1 && rows[0].is_empty() {
        rows.clear();
    }
    Ok(rows)
}

fn build_module(doc: &Document, m: &ModuleText, cap: usize) -> Result<Rep> {
    let err = |column: usize, message: String| Error::Parse { line: m.line, column, message };
    let alg = doc.algebra_of(m.side).map_err(|e| err(1, e.to_string()))?;
    let q = alg.quiver();
    if m.dims.len() != q.vertex_count() {
        return Err(err(
            1,
            format!("dimension vector has {} entries, the quiver has {} vertices", m.dims.len(), q.vertex_count()),
        ));
    }
    if m.maps.is_empty() && q.arrows().iter().any(|a| m.dims[a.source] > 0 && m.dims[a.target] > 0) {
        let cat = Catalog::new(alg, cap)?;
        let hits: Vec<&Rep> = cat.modules().iter().filter(|r| r.dims() == m.dims.as_slice()).collect();
        return match hits.as_slice() {
            [one] => Ok((*one).clone()),
            [] => Err(err(1, format!("no indecomposable has dimension vector {:?}", m.dims))),
            _ => Err(err(1, format!("dimension vector {:?} does not determine a unique indecomposable", m.dims))),
        };
    }
    let f = alg.field();
    let mut maps: Vec<Mat> = q.arrows().iter().map(|a| Mat::zeros(f, m.dims[a.target], m.dims[a.source])).collect();
    let mut given = vec![false; maps.len()];
    for (name, rows, col) in &m.maps {
        let k = q.arrow_index(name).ok_or_else(|| err(*col, format!("unknown arrow `{name}`")))?;
        if given[k] {
            return Err(err(*col, format!("arrow `{name}` given twice")));
        }
        given[k] = true;
        let a = &q.arrows()[k];
        let (r, c) = (m.dims[a.target], m.dims[a.source]);
        let shape_ok = rows.len() == r && rows.iter().all(|row| row.len() == c);
        // A zero-dimensional side makes the matrix empty; accept `[]` then.
        if !(shape_ok || (r * c == 0 && rows.is_empty())) {
            return Err(err(*col, format!("arrow `{name}` needs a {r}x{c} matrix")));
        }
        let mut mat = Mat::zeros(f, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                mat.set(i, j, v % f.p());
            }
        }
        maps[k] = mat;
    }
    Rep::new(Arc::clone(alg), m.dims.clone(), maps)
}
