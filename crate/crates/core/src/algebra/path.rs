use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::findim::FinDimAlgebra;
use super::quiver::Quiver;
use crate::linalg::PrimeField;

/// Knobs for the randomized searches (isomorphism witnesses, Fitting
/// splittings). Every search is seeded, so results are reproducible.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SearchParams {
    pub seed: u64,
    /// Exhaustive Hom-space scans are allowed up to this many elements.
    pub exhaustive_cap: u64,
    /// Number of random elements tried before giving up.
    pub random_tries: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { seed: 0x7a17, exhaustive_cap: 1 << 16, random_tries: 256 }
    }
}

/// A path `e_source -> ... -> e_target`, stored as arrow indices in
/// traversal order. Trivial paths have no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }
}

/// Path algebra of an acyclic quiver, with its path basis enumerated.
///
/// Paths compose left to right: `p * q` is "first `p`, then `q`", which is
/// nonzero only when `p` ends where `q` starts. Right modules are then
/// representations with one map `M_source -> M_target` per arrow.
#[derive(Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    field: PrimeField,
    params: SearchParams,
    paths: Vec<Path>,
    between: Vec<Vec<Vec<usize>>>,
    index: HashMap<(usize, Vec<usize>), usize>,
    opposite: OnceLock<Arc<PathAlgebra>>,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.field == other.field
    }
}

impl Eq for PathAlgebra {}

impl PathAlgebra {
    pub fn new(quiver: Quiver, field: PrimeField) -> Arc<Self> {
        Self::with_params(quiver, field, SearchParams::default())
    }

    pub fn with_params(quiver: Quiver, field: PrimeField, params: SearchParams) -> Arc<Self> {
        let n = quiver.vertex_count();
        let mut paths: Vec<Path> = (0..n).map(|i| Path { source: i, target: i, arrows: vec![] }).collect();
        let mut layer: Vec<usize> = (0..n).collect();
        // Acyclic, so the layers run out after at most n steps.
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &pi in &layer {
                for (ai, a) in quiver.arrows().iter().enumerate() {
                    if a.source == paths[pi].target {
                        let mut arrows = paths[pi].arrows.clone();
                        arrows.push(ai);
                        let source = paths[pi].source;
                        paths.push(Path { source, target: a.target, arrows });
                        next.push(paths.len() - 1);
                    }
                }
            }
            layer = next;
        }
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut index = HashMap::new();
        for (k, p) in paths.iter().enumerate() {
            between[p.source][p.target].push(k);
            index.insert((p.source, p.arrows.clone()), k);
        }
        Arc::new(PathAlgebra { quiver, field, params, paths, between, index, opposite: OnceLock::new() })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn params(&self) -> SearchParams {
        self.params
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path(&self, k: usize) -> &Path {
        &self.paths[k]
    }

    /// Indices of the paths from `i` to `j`, i.e. a basis of `e_i A e_j`.
    pub fn paths_between(&self, i: usize, j: usize) -> &[usize] {
        &self.between[i][j]
    }

    pub fn trivial_path(&self, i: usize) -> usize {
        i
    }

    pub fn path_index(&self, source: usize, arrows: &[usize]) -> Option<usize> {
        self.index.get(&(source, arrows.to_vec())).copied()
    }

    /// `p * q`, or `None` when the endpoints do not match.
    pub fn concat(&self, p: usize, q: usize) -> Option<usize> {
        let (pp, qq) = (&self.paths[p], &self.paths[q]);
        if pp.target != qq.source {
            return None;
        }
        let mut arrows = pp.arrows.clone();
        arrows.extend_from_slice(&qq.arrows);
        self.path_index(pp.source, &arrows)
    }

    /// Human-readable name of a path, e.g. `e2` or `a*b`.
    pub fn path_label(&self, k: usize) -> String {
        let p = &self.paths[k];
        if p.is_trivial() {
            format!("e{}", self.quiver.label(p.source))
        } else {
            let names: Vec<&str> = p.arrows.iter().map(|&a| self.quiver.arrows()[a].name.as_str()).collect();
            names.join("*")
        }
    }

    /// The path algebra of the opposite quiver. Cached.
    pub fn opposite(&self) -> Arc<PathAlgebra> {
        self.opposite.get_or_init(|| PathAlgebra::with_params(self.quiver.opposite(), self.field, self.params)).clone()
    }

    /// Structure constants of the path basis.
    pub fn to_findim(&self) -> FinDimAlgebra {
        let d = self.dim();
        let labels = (0..d).map(|k| self.path_label(k)).collect();
        let mut table = vec![vec![vec![0u32; d]; d]; d];
        for (p, row) in table.iter_mut().enumerate() {
            for (q, entry) in row.iter_mut().enumerate() {
                if let Some(r) = self.concat(p, q) {
                    entry[r] = 1;
                }
            }
        }
        let mut unit = vec![0u32; d];
        for i in 0..self.vertex_count() {
            unit[self.trivial_path(i)] = 1;
        }
        FinDimAlgebra::new(self.field, labels, table, unit).expect("path algebras are associative and unital")
    }
}
