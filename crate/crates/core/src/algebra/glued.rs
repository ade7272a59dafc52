use std::sync::Arc;

use super::path::PathAlgebra;
use super::quiver::{Arrow, Quiver};
use crate::error::{Error, Result};

/// Triangular matrix algebra `A = (B 0; M C)` realized as the path algebra of
/// the quiver `Q_B ∪ Q_C` plus connecting arrows `c -> b`.
///
/// A's vertices are B's followed by C's; its arrows are B's, then C's, then
/// the connecting ones. The bimodule `M = e_B A e_C` is spanned by the paths
/// that cross a connecting arrow; none go back, so `M` is free over them.
#[derive(Clone, Debug)]
pub struct GluedAlgebra {
    b: Arc<PathAlgebra>,
    c: Arc<PathAlgebra>,
    a: Arc<PathAlgebra>,
    /// Connecting arrows with `source` a C-vertex and `target` a B-vertex,
    /// both in the local numbering of their own algebra.
    connecting: Vec<Arrow>,
}

impl GluedAlgebra {
    /// `connecting` holds `(name, c_label, b_label)` triples.
    pub fn new(b: Arc<PathAlgebra>, c: Arc<PathAlgebra>, connecting: &[(&str, &str, &str)]) -> Result<Self> {
        if b.field() != c.field() {
            return Err(Error::AlgebraMismatch);
        }
        let (qb, qc) = (b.quiver(), c.quiver());
        if let Some(v) = qb.vertices().iter().find(|v| qc.vertex_index(v).is_some()) {
            return Err(Error::usage(format!("vertex `{v}` occurs in both B and C")));
        }
        let mut arrows = Vec::with_capacity(connecting.len());
        for &(name, s, t) in connecting {
            match (qc.vertex_index(s), qb.vertex_index(t)) {
                (Some(source), Some(target)) => arrows.push(Arrow { name: name.to_string(), source, target }),
                _ if qb.vertex_index(s).is_some() && qc.vertex_index(t).is_some() => {
                    return Err(Error::WrongDirection(name.to_string()))
                }
                _ if qb.vertex_index(s).is_some() && qb.vertex_index(t).is_some()
                    || qc.vertex_index(s).is_some() && qc.vertex_index(t).is_some() =>
                {
                    return Err(Error::usage(format!("connecting arrow `{name}` stays inside one side")))
                }
                _ => {
                    let unknown = if qb.vertex_index(s).is_none() && qc.vertex_index(s).is_none() { s } else { t };
                    return Err(Error::UnknownVertex(unknown.to_string()));
                }
            }
        }
        Self::from_arrows(b, c, arrows)
    }

    pub fn from_arrows(b: Arc<PathAlgebra>, c: Arc<PathAlgebra>, connecting: Vec<Arrow>) -> Result<Self> {
        let nb = b.vertex_count();
        let vertices: Vec<String> = b.quiver().vertices().iter().chain(c.quiver().vertices()).cloned().collect();
        let mut arrows: Vec<Arrow> = b.quiver().arrows().to_vec();
        arrows.extend(c.quiver().arrows().iter().map(|a| Arrow {
            name: a.name.clone(),
            source: a.source + nb,
            target: a.target + nb,
        }));
        for a in &connecting {
            if a.source >= c.vertex_count() || a.target >= nb {
                return Err(Error::usage(format!("connecting arrow `{}` out of range", a.name)));
            }
            arrows.push(Arrow { name: a.name.clone(), source: a.source + nb, target: a.target });
        }
        let quiver = Quiver::from_parts(vertices, arrows)?;
        let a = PathAlgebra::with_params(quiver, b.field(), b.params());
        Ok(GluedAlgebra { b, c, a, connecting })
    }

    pub fn b(&self) -> &Arc<PathAlgebra> {
        &self.b
    }

    pub fn c(&self) -> &Arc<PathAlgebra> {
        &self.c
    }

    pub fn a(&self) -> &Arc<PathAlgebra> {
        &self.a
    }

    pub fn connecting(&self) -> &[Arrow] {
        &self.connecting
    }

    pub fn nb(&self) -> usize {
        self.b.vertex_count()
    }

    pub fn nc(&self) -> usize {
        self.c.vertex_count()
    }

    /// A-vertex of the C-vertex `c`.
    pub fn c_vertex(&self, c: usize) -> usize {
        self.nb() + c
    }

    /// A-arrow index of the B-arrow `k`.
    pub fn b_arrow(&self, k: usize) -> usize {
        k
    }

    /// A-arrow index of the C-arrow `k`.
    pub fn c_arrow(&self, k: usize) -> usize {
        self.b.quiver().arrows().len() + k
    }

    /// A-arrow index of the connecting arrow `k`.
    pub fn connecting_arrow(&self, k: usize) -> usize {
        self.b.quiver().arrows().len() + self.c.quiver().arrows().len() + k
    }

    /// `dim M`: the number of paths from a C-vertex to a B-vertex.
    pub fn dim_m(&self) -> usize {
        let nb = self.nb();
        (0..self.nc()).map(|c| (0..nb).map(|b| self.a.paths_between(nb + c, b).len()).sum::<usize>()).sum()
    }
}
