use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver without oriented cycles.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, source, target)` arrows
    /// given by label.
    pub fn new<S: AsRef<str>>(vertices: &[S], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.as_ref().to_string()).collect();
        let lookup = |label: &str| {
            vertices.iter().position(|v| v == label).ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut built = Vec::with_capacity(arrows.len());
        for &(name, s, t) in arrows {
            built.push(Arrow { name: name.to_string(), source: lookup(s)?, target: lookup(t)? });
        }
        Self::from_parts(vertices, built)
    }

    pub fn from_parts(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::usage(format!("duplicate vertex label `{v}`")));
            }
        }
        let mut names = HashSet::new();
        for a in &arrows {
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::usage(format!("arrow `{}` has an endpoint out of range", a.name)));
            }
            if !names.insert(a.name.as_str()) {
                return Err(Error::usage(format!("duplicate arrow name `{}`", a.name)));
            }
        }
        let q = Quiver { vertices, arrows };
        if let Some(cycle) = q.find_cycle() {
            return Err(Error::Cycle(cycle.into_iter().map(|i| q.vertices[i].clone()).collect()));
        }
        Ok(q)
    }

    /// A single vertex and no arrows.
    pub fn point(label: &str) -> Self {
        Quiver { vertices: vec![label.to_string()], arrows: vec![] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Same vertices, every arrow reversed; arrow order and names are kept.
    pub fn opposite(&self) -> Quiver {
        let arrows =
            self.arrows.iter().map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source }).collect();
        Quiver { vertices: self.vertices.clone(), arrows }
    }

    fn find_cycle(&self) -> Option<Vec<usize>> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            New,
            Active,
            Done,
        }
        let n = self.vertices.len();
        let mut mark = vec![Mark::New; n];
        let mut stack: Vec<usize> = Vec::new();

        fn visit(q: &Quiver, v: usize, mark: &mut [Mark], stack: &mut Vec<usize>) -> Option<Vec<usize>> {
            mark[v] = Mark::Active;
            stack.push(v);
            for a in q.arrows.iter().filter(|a| a.source == v) {
                match mark[a.target] {
                    Mark::Active => {
                        let start = stack.iter().position(|&x| x == a.target).unwrap();
                        let mut cycle = stack[start..].to_vec();
                        cycle.push(a.target);
                        return Some(cycle);
                    }
                    Mark::New => {
                        if let Some(c) = visit(q, a.target, mark, stack) {
                            return Some(c);
                        }
                    }
                    Mark::Done => {}
                }
            }
            stack.pop();
            mark[v] = Mark::Done;
            None
        }

        for v in 0..n {
            if mark[v] == Mark::New {
                if let Some(c) = visit(self, v, &mut mark, &mut stack) {
                    return Some(c);
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_cycle_with_witness() {
        let err = Quiver::new(&["1", "2", "3"], &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]).unwrap_err();
        match err {
            Error::Cycle(c) => {
                assert_eq!(c.first(), c.last());
                assert_eq!(c.len(), 4);
            }
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn rejects_loop_and_duplicates() {
        assert!(matches!(Quiver::new(&["1"], &[("a", "1", "1")]), Err(Error::Cycle(_))));
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
        assert!(Quiver::new(&["1", "2"], &[("a", "1", "2"), ("a", "1", "2")]).is_err());
        assert!(matches!(Quiver::new(&["1"], &[("a", "1", "9")]), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn opposite_reverses_arrows() {
        let q = Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap();
        let op = q.opposite();
        assert_eq!(op.arrows()[0].source, 0);
        assert_eq!(op.arrows()[0].target, 1);
        assert_eq!(op.opposite(), q);
    }
}
