use std::collections::BTreeSet;

use super::catalog::Catalog;
use crate::error::{Error, Result};
use crate::rep::{self, decompose, end_algebra, hom_basis, hom_dim, is_brick, Morph, Rep};

/// A support τ-tilting pair `(M, P)` with `M` basic, as sorted catalog
/// indices, and `P = ⊕ P_e` over the `excluded` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SttPair {
    pub module: Vec<usize>,
    pub excluded: Vec<usize>,
}

impl SttPair {
    pub fn rep(&self, cat: &Catalog) -> Rep {
        cat.sum(&self.module)
    }

    pub fn name(&self, cat: &Catalog) -> String {
        cat.sum_name(&self.module)
    }
}

/// A torsion class given by its indecomposables and its Ext-projective
/// generator `P(T)`, both as sorted catalog indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorsionClass {
    pub members: Vec<usize>,
    pub generator: Vec<usize>,
}

impl TorsionClass {
    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_subset_of(&self, other: &TorsionClass) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }
}

/// `Hom(M, τM) = 0` on the catalog.
pub fn is_tau_rigid(cat: &Catalog, idx: &[usize]) -> bool {
    idx.iter().all(|&i| idx.iter().all(|&j| cat.hom_to_tau_vanishes(i, j)))
}

/// `Hom(M, τM) = 0` computed directly on a module.
pub fn is_tau_rigid_rep(m: &Rep) -> Result<bool> {
    Ok(hom_dim(m, &rep::tau(m)?)? == 0)
}

/// The three conditions of a support τ-tilting pair, on the catalog.
pub fn is_stt_pair(cat: &Catalog, pair: &SttPair) -> bool {
    let n = cat.algebra().vertex_count();
    let dims = cat.dims_of(&pair.module);
    let mut distinct = pair.module.clone();
    distinct.dedup();
    is_tau_rigid(cat, &pair.module)
        && pair.excluded.iter().all(|&e| dims[e] == 0)
        && distinct.len() + pair.excluded.len() == n
}

/// The same conditions evaluated with Hom, τ and decomposition only.
pub fn is_stt_pair_rep(m: &Rep, excluded: &[usize]) -> Result<bool> {
    let n = m.algebra().vertex_count();
    if !is_tau_rigid_rep(m)? || excluded.iter().any(|&e| e >= n || m.dim_at(e) != 0) {
        return Ok(false);
    }
    let mut distinct: Vec<Rep> = Vec::new();
    for s in decompose(m)? {
        let mut new = true;
        for d in &distinct {
            if rep::is_isomorphic(d, &s)?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            distinct.push(s);
        }
    }
    let excluded: BTreeSet<usize> = excluded.iter().copied().collect();
    Ok(distinct.len() + excluded.len() == n)
}

/// All support τ-tilting pairs, by brute force over τ-compatible subsets of
/// the catalog and subsets of the vertices outside their support.
pub fn enumerate_stt(cat: &Catalog) -> Vec<SttPair> {
    let k = cat.len();
    let n = cat.algebra().vertex_count();
    let compatible: Vec<Vec<bool>> = (0..k)
        .map(|i| (0..k).map(|j| cat.hom_to_tau_vanishes(i, j) && cat.hom_to_tau_vanishes(j, i)).collect())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn grow(
        cat: &Catalog,
        compatible: &[Vec<bool>],
        n: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<SttPair>,
    ) {
        let dims = cat.dims_of(current);
        let zero: Vec<usize> = (0..n).filter(|&v| dims[v] == 0).collect();
        let need = n - current.len();
        for subset in subsets_of_size(&zero, need) {
            out.push(SttPair { module: current.clone(), excluded: subset });
        }
        if current.len() == n {
            return;
        }
        for i in start..cat.len() {
            if compatible[i][i] && current.iter().all(|&j| compatible[i][j]) {
                current.push(i);
                grow(cat, compatible, n, i + 1, current, out);
                current.pop();
            }
        }
    }
    grow(cat, &compatible, n, 0, &mut current, &mut out);
    out.sort();
    out
}

fn subsets_of_size(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if items.len() < size {
        return vec![];
    }
    let mut out = Vec::new();
    for (k, &x) in items.iter().enumerate() {
        for mut rest in subsets_of_size(&items[k + 1..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// Indecomposables `N ∈ members` with `Ext¹(N, members) = 0`.
pub fn ext_projectives(cat: &Catalog, members: &[usize]) -> Vec<usize> {
    members.iter().copied().filter(|&i| members.iter().all(|&j| cat.ext(i, j) == 0)).collect()
}

/// `Fac(⊕ M_g)` with its Ext-projective generator.
pub fn fac_class(cat: &Catalog, gens: &[usize]) -> Result<TorsionClass> {
    let mut members = Vec::new();
    for i in 0..cat.len() {
        if cat.in_fac(i, gens)? {
            members.push(i);
        }
    }
    let generator = ext_projectives(cat, &members);
    Ok(TorsionClass { members, generator })
}

/// Smallest class containing `seeds` that is closed under quotients and
/// extensions, built by alternating `Fac` with adding the summands of
/// extension middle terms. Independent of the support τ-tilting machinery.
pub fn filt_fac_closure(cat: &Catalog, seeds: &[usize]) -> Result<Vec<usize>> {
    let mut current: BTreeSet<usize> = seeds.iter().copied().collect();
    loop {
        let gens: Vec<usize> = current.iter().copied().collect();
        let mut next: BTreeSet<usize> = fac_class(cat, &gens)?.members.into_iter().collect();
        let members: Vec<usize> = next.iter().copied().collect();
        for &x in &members {
            for &y in &members {
                if cat.ext(x, y) == 0 {
                    continue;
                }
                for e in rep::ext1_middle_terms(cat.module(x), cat.module(y))? {
                    next.extend(cat.indices_of(&e)?);
                }
            }
        }
        if next == current {
            return Ok(members);
        }
        current = next;
    }
}

/// Brick quotient of each summand: `M_i / Σ im(radical maps M -> M_i)`.
pub fn semibrick_of_summands(summands: &[Rep]) -> Result<Vec<Rep>> {
    let mut bricks = Vec::new();
    for (i, mi) in summands.iter().enumerate() {
        let f = mi.field();
        let nv = mi.dims().len();
        let mut maps: Vec<Morph> = Vec::new();
        for (j, mj) in summands.iter().enumerate() {
            if j != i {
                maps.extend(hom_basis(mj, mi)?);
            }
        }
        let end = end_algebra(mi)?;
        if end.basis.len() > 1 {
            for c in end.matrices.radical()?.basis {
                maps.push(end.morph(&c));
            }
        }
        let bases: Vec<crate::linalg::Mat> = (0..nv)
            .map(|v| {
                maps.iter()
                    .fold(crate::linalg::Mat::zeros(f, mi.dim_at(v), 0), |acc, g| acc.hstack(g.block(v)))
                    .column_space()
            })
            .collect();
        let (q, _) = rep::quotient_module(mi, &bases)?;
        if !q.is_zero() {
            bricks.push(q);
        }
    }
    for b in &bricks {
        if !is_brick(b)? {
            return Err(Error::invariant("semibrick entry is not a brick"));
        }
    }
    for (i, a) in bricks.iter().enumerate() {
        for (j, b) in bricks.iter().enumerate() {
            if i != j && hom_dim(a, b)? != 0 {
                return Err(Error::invariant("semibrick entries are not Hom-orthogonal"));
            }
        }
    }
    Ok(bricks)
}

/// A covering relation `from ⋗ to` of torsion classes with its brick label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseEdge {
    pub from: usize,
    pub to: usize,
    pub label: usize,
}

/// A maximal chain `0 = T_0 ⊊ ... ⊊ T_l = mod A`, bottom first, with the
/// brick label of each step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreenSequence {
    pub chain: Vec<usize>,
    pub labels: Vec<usize>,
}

impl GreenSequence {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Support τ-tilting pairs of one algebra, their torsion classes and the
/// Hasse quiver of the inclusion order.
#[derive(Clone, Debug)]
pub struct Lattice {
    catalog: Catalog,
    pairs: Vec<SttPair>,
    classes: Vec<TorsionClass>,
    edges: Vec<HasseEdge>,
}

impl Lattice {
    pub fn new(catalog: Catalog) -> Result<Self> {
        let pairs = enumerate_stt(&catalog);
        let mut classes = Vec::with_capacity(pairs.len());
        for p in &pairs {
            let class = fac_class(&catalog, &p.module)?;
            if class.generator != p.module {
                return Err(Error::invariant(format!(
                    "P(Fac M) = {} differs from M = {}",
                    catalog.sum_name(&class.generator),
                    p.name(&catalog)
                )));
            }
            classes.push(class);
        }
        let distinct: BTreeSet<&Vec<usize>> = classes.iter().map(|c| &c.members).collect();
        if distinct.len() != classes.len() {
            return Err(Error::invariant("two support τ-tilting pairs give the same torsion class"));
        }
        let mut lattice = Lattice { catalog, pairs, classes, edges: vec![] };
        lattice.edges = lattice.compute_edges()?;
        Ok(lattice)
    }

    pub fn catalog(&self) -> &Catalog {
        &self.catalog
    }

    pub fn pairs(&self) -> &[SttPair] {
        &self.pairs
    }

    pub fn pair(&self, i: usize) -> &SttPair {
        &self.pairs[i]
    }

    pub fn classes(&self) -> &[TorsionClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &TorsionClass {
        &self.classes[i]
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn edges(&self) -> &[HasseEdge] {
        &self.edges
    }

    /// `T_i ⊆ T_j`.
    pub fn le(&self, i: usize, j: usize) -> bool {
        self.classes[i].is_subset_of(&self.classes[j])
    }

    /// The node whose class is `mod A`.
    pub fn top(&self) -> usize {
        self.classes.iter().position(|c| c.members.len() == self.catalog.len()).expect("mod A is a torsion class")
    }

    /// The node whose class is `0`.
    pub fn bottom(&self) -> usize {
        self.classes.iter().position(|c| c.members.is_empty()).expect("0 is a torsion class")
    }

    pub fn index_of_pair(&self, pair: &SttPair) -> Option<usize> {
        self.pairs.iter().position(|p| p == pair)
    }

    pub fn index_of_members(&self, members: &[usize]) -> Option<usize> {
        self.classes.iter().position(|c| c.members == members)
    }

    /// Node whose basic module is isomorphic to `m`.
    pub fn index_of_module(&self, m: &Rep) -> Result<Option<usize>> {
        let mut idx = self.catalog.indices_of(m)?;
        idx.dedup();
        Ok(self.pairs.iter().position(|p| p.module == idx))
    }

    /// Intersection of every torsion class containing all `seeds`.
    pub fn smallest_torsion_class(&self, seeds: &[usize]) -> Result<TorsionClass> {
        let mut members: Vec<usize> = (0..self.catalog.len()).collect();
        for c in &self.classes {
            if seeds.iter().all(|&s| c.contains(s)) {
                members.retain(|&m| c.contains(m));
            }
        }
        let i = self
            .index_of_members(&members)
            .ok_or_else(|| Error::invariant("intersection of torsion classes is not in the lattice"))?;
        Ok(self.classes[i].clone())
    }

    fn compute_edges(&self) -> Result<Vec<HasseEdge>> {
        let m = self.len();
        let lt = |i: usize, j: usize| i != j && self.le(i, j);
        let mut edges = Vec::new();
        for big in 0..m {
            for small in 0..m {
                if !lt(small, big) || (0..m).any(|k| lt(small, k) && lt(k, big)) {
                    continue;
                }
                let g = &self.pairs[small].module;
                let mut labels = Vec::new();
                for &s in &self.classes[big].members {
                    if g.iter().all(|&x| self.catalog.hom(x, s) == 0) && is_brick(self.catalog.module(s))? {
                        labels.push(s);
                    }
                }
                if labels.len() != 1 {
                    return Err(Error::invariant(format!(
                        "covering {} ⋗ {} has {} brick labels",
                        self.pairs[big].name(&self.catalog),
                        self.pairs[small].name(&self.catalog),
                        labels.len()
                    )));
                }
                edges.push(HasseEdge { from: big, to: small, label: labels[0] });
            }
        }
        Ok(edges)
    }

    pub fn neighbours(&self, i: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|e| {
                if e.from == i {
                    Some(e.to)
                } else if e.to == i {
                    Some(e.from)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Semibrick attached to node `i`, as catalog indices.
    pub fn semibrick_of(&self, i: usize) -> Result<Vec<usize>> {
        let summands: Vec<Rep> = self.pairs[i].module.iter().map(|&k| self.catalog.module(k).clone()).collect();
        let bricks = semibrick_of_summands(&summands)?;
        let mut idx = bricks.iter().map(|b| self.catalog.index_of(b)).collect::<Result<Vec<_>>>()?;
        idx.sort_unstable();
        Ok(idx)
    }

    /// All maximal green sequences.
    pub fn maximal_green_sequences(&self) -> Vec<GreenSequence> {
        let (top, bottom) = (self.top(), self.bottom());
        let mut out = Vec::new();
        let mut path = vec![top];
        let mut labels = Vec::new();
        self.walk(bottom, &mut path, &mut labels, &mut out);
        out.sort_by(|a, b| a.labels.cmp(&b.labels));
        out
    }

    fn walk(&self, bottom: usize, path: &mut Vec<usize>, labels: &mut Vec<usize>, out: &mut Vec<GreenSequence>) {
        let here = *path.last().expect("non-empty path");
        if here == bottom {
            let mut chain = path.clone();
            chain.reverse();
            let mut l = labels.clone();
            l.reverse();
            out.push(GreenSequence { chain, labels: l });
            return;
        }
        for e in self.edges.iter().filter(|e| e.from == here) {
            path.push(e.to);
            labels.push(e.label);
            self.walk(bottom, path, labels, out);
            labels.pop();
            path.pop();
        }
    }

    /// Bricks, forward Hom-orthogonal, and the label sequence of a maximal
    /// green sequence.
    pub fn is_complete_fho(&self, seq: &[usize]) -> Result<bool> {
        for &s in seq {
            if !is_brick(self.catalog.module(s))? {
                return Ok(false);
            }
        }
        for i in 0..seq.len() {
            for j in i + 1..seq.len() {
                if self.catalog.hom(seq[i], seq[j]) != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(self.maximal_green_sequences().iter().any(|g| g.labels == seq))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::linalg::PrimeField;
    use crate::tilt::catalog::DEFAULT_CAP;

    fn lattice(v: &[&str], a: &[(&str, &str, &str)]) -> Lattice {
        let alg = PathAlgebra::new(Quiver::new(v, a).unwrap(), PrimeField::gf2());
        Lattice::new(Catalog::new(&alg, DEFAULT_CAP).unwrap()).unwrap()
    }

    #[test]
    fn point_has_two_pairs() {
        let l = lattice(&["1"], &[]);
        assert_eq!(
            l.pairs(),
            &[SttPair { module: vec![], excluded: vec![0] }, SttPair { module: vec![0], excluded: vec![] }]
        );
        let mgs = l.maximal_green_sequences();
        assert_eq!(mgs.len(), 1);
        assert_eq!(mgs[0].labels, vec![0]);
    }

    #[test]
    fn a2_counts_and_labels() {
        let l = lattice(&["1", "2"], &[("a", "2", "1")]);
        assert_eq!(l.len(), 5);
        assert_eq!(l.edges().len(), 5);
        let mgs = l.maximal_green_sequences();
        let labels: Vec<Vec<&str>> =
            mgs.iter().map(|g| g.labels.iter().map(|&i| l.catalog().name(i)).collect()).collect();
        assert_eq!(labels, vec![vec!["1", "2"], vec!["2", "2/1", "1"]]);
    }

    #[test]
    fn rigidity_examples() {
        let l = lattice(&["1", "2"], &[("a", "2", "1")]);
        let c = l.catalog();
        // Catalog order: 1, 2, 2/1.
        assert!(is_stt_pair(c, &SttPair { module: vec![0, 2], excluded: vec![] }));
        assert!(!is_tau_rigid(c, &[0, 1]));
        assert!(!is_stt_pair_rep(&c.sum(&[0, 1]), &[]).unwrap());
        assert!(is_stt_pair_rep(&c.sum(&[0, 2]), &[]).unwrap());
    }

    #[test]
    fn smallest_classes() {
        let l = lattice(&["1", "2"], &[("a", "2", "1")]);
        assert_eq!(l.smallest_torsion_class(&[0]).unwrap().members, vec![0]);
        assert_eq!(l.smallest_torsion_class(&[1]).unwrap().members, vec![1]);
        assert_eq!(l.smallest_torsion_class(&[0, 1]).unwrap().members, vec![0, 1, 2]);
        assert_eq!(filt_fac_closure(l.catalog(), &[1]).unwrap(), vec![1]);
        assert_eq!(filt_fac_closure(l.catalog(), &[0, 1]).unwrap(), vec![0, 1, 2]);
    }
}
