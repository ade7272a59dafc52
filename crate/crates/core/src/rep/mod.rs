//! Finite-dimensional right modules over path algebras, as quiver
//! representations, and the homological toolkit built on them.

mod approx;
mod decompose;
mod ext;
mod hom;
mod name;
mod standard;

use std::fmt;
use std::sync::Arc;

pub use approx::{check_approximation, gen_membership, minimal_left_approximation, Approximation};
pub use decompose::{decompose, end_algebra, is_brick, EndAlgebra};
pub use ext::{euler_form, ext1_dim, ext1_middle_terms};
pub use hom::{hom_basis, hom_dim, is_isomorphic, morphism_kit, quotient_module, submodule_of, MorphismKit};
pub use name::{module_name, radical_layers};
pub use standard::{
    injective, min_proj_presentation, projective, radical, simple, tau, tau_inverse, top, Presentation,
};

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Mat, PrimeField};

/// A representation: one space `k^{dims[i]}` per vertex and, for every arrow
/// `a: s -> t`, a `dims[t] x dims[s]` matrix.
#[derive(Clone)]
pub struct Rep {
    alg: Arc<PathAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Mat>,
}

impl PartialEq for Rep {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg)
            && self.dims == other.dims
            && self.maps == other.maps
    }
}

impl Eq for Rep {}

impl fmt::Debug for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Rep").field("dims", &self.dims).field("maps", &self.maps).finish()
    }
}

impl Rep {
    pub fn new(alg: Arc<PathAlgebra>, dims: Vec<usize>, maps: Vec<Mat>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.vertex_count() || maps.len() != q.arrows().len() {
            return Err(Error::usage("dimension vector or arrow list has the wrong length"));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::usage(format!(
                    "matrix for arrow `{}` is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    dims[a.target],
                    dims[a.source]
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::usage("matrix over the wrong field"));
            }
        }
        Ok(Rep { alg, dims, maps })
    }

    pub fn zero(alg: &Arc<PathAlgebra>) -> Self {
        let dims = vec![0; alg.vertex_count()];
        Self::with_zero_maps(alg, dims)
    }

    /// All arrows act by zero, e.g. a semisimple module.
    pub fn with_zero_maps(alg: &Arc<PathAlgebra>, dims: Vec<usize>) -> Self {
        let maps =
            alg.quiver().arrows().iter().map(|a| Mat::zeros(alg.field(), dims[a.target], dims[a.source])).collect();
        Rep { alg: alg.clone(), dims, maps }
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.alg
    }

    pub fn field(&self) -> PrimeField {
        self.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn map(&self, a: usize) -> &Mat {
        &self.maps[a]
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Vertices where the module is nonzero.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dims.len()).filter(|&i| self.dims[i] > 0).collect()
    }

    /// Start of each vertex space inside `k^{total_dim}`.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.dims
            .iter()
            .map(|&d| {
                let o = acc;
                acc += d;
                o
            })
            .collect()
    }

    /// Action of the path with index `k`: the product of its arrow matrices.
    pub fn path_matrix(&self, k: usize) -> Mat {
        let path = self.alg.path(k);
        let mut m = Mat::identity(self.field(), self.dims[path.source]);
        for &a in &path.arrows {
            m = self.maps[a].mul(&m);
        }
        m
    }

    pub fn same_algebra(&self, other: &Rep) -> Result<()> {
        if Arc::ptr_eq(&self.alg, &other.alg) || self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    pub fn direct_sum(&self, other: &Rep) -> Result<Rep> {
        self.same_algebra(other)?;
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| Mat::block_diag(self.field(), &[a, b])).collect();
        Ok(Rep { alg: self.alg.clone(), dims, maps })
    }

    pub fn direct_sum_all<'a>(alg: &Arc<PathAlgebra>, parts: impl IntoIterator<Item = &'a Rep>) -> Result<Rep> {
        parts.into_iter().try_fold(Rep::zero(alg), |acc, r| acc.direct_sum(r))
    }

    /// `M^{n}`.
    pub fn power(&self, n: usize) -> Rep {
        let parts = vec![self.clone(); n];
        Rep::direct_sum_all(&self.alg, &parts).expect("same algebra")
    }

    /// The isomorphic copy `g . M` for invertible `g_i` at each vertex.
    pub fn transport(&self, g: &[Mat]) -> Result<Rep> {
        let mut inverses = Vec::with_capacity(g.len());
        for (i, gi) in g.iter().enumerate() {
            if gi.shape() != (self.dims[i], self.dims[i]) {
                return Err(Error::usage("change of basis has the wrong shape"));
            }
            inverses.push(gi.inverse().ok_or_else(|| Error::usage("change of basis is not invertible"))?);
        }
        let maps = self
            .alg
            .quiver()
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| g[a.target].mul(m).mul(&inverses[a.source]))
            .collect();
        Ok(Rep { alg: self.alg.clone(), dims: self.dims.clone(), maps })
    }

    /// `D M = Hom_k(M, k)`, a representation of the opposite quiver.
    pub fn dual(&self) -> Rep {
        self.dual_over(&self.alg.opposite()).expect("opposite quiver matches")
    }

    /// `D M` as a module over `alg`, which must be the opposite algebra.
    pub fn dual_over(&self, alg: &Arc<PathAlgebra>) -> Result<Rep> {
        if *alg.quiver() != self.alg.quiver().opposite() || alg.field() != self.field() {
            return Err(Error::AlgebraMismatch);
        }
        let maps = self.maps.iter().map(Mat::transpose).collect();
        Rep::new(alg.clone(), self.dims.clone(), maps)
    }

    /// The same representation viewed over an equal algebra handle.
    pub fn rebase(&self, alg: &Arc<PathAlgebra>) -> Result<Rep> {
        if **alg != *self.alg {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Rep { alg: alg.clone(), dims: self.dims.clone(), maps: self.maps.clone() })
    }
}

/// A module homomorphism: one block `target_i x source_i` per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Morph {
    source: Rep,
    target: Rep,
    blocks: Vec<Mat>,
}

impl fmt::Debug for Morph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Morph").field("blocks", &self.blocks).finish()
    }
}

impl Morph {
    /// Checks block shapes and the intertwining condition on every arrow.
    pub fn new(source: Rep, target: Rep, blocks: Vec<Mat>) -> Result<Self> {
        source.same_algebra(&target)?;
        if blocks.len() != source.dims.len() {
            return Err(Error::usage("one block per vertex expected"));
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.shape() != (target.dims[i], source.dims[i]) {
                return Err(Error::usage(format!("block at vertex {i} has the wrong shape")));
            }
        }
        let m = Morph { source, target, blocks };
        for (k, a) in m.source.alg.quiver().arrows().iter().enumerate() {
            let left = m.blocks[a.target].mul(&m.source.maps[k]);
            let right = m.target.maps[k].mul(&m.blocks[a.source]);
            if left != right {
                return Err(Error::usage(format!("blocks do not commute with arrow `{}`", a.name)));
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Rep, target: Rep, blocks: Vec<Mat>) -> Self {
        debug_assert!(Morph::new(source.clone(), target.clone(), blocks.clone()).is_ok());
        Morph { source, target, blocks }
    }

    pub fn zero(source: &Rep, target: &Rep) -> Self {
        let f = source.field();
        let blocks = (0..source.dims.len()).map(|i| Mat::zeros(f, target.dims[i], source.dims[i])).collect();
        Morph { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn identity(m: &Rep) -> Self {
        let blocks = m.dims.iter().map(|&d| Mat::identity(m.field(), d)).collect();
        Morph { source: m.clone(), target: m.clone(), blocks }
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn blocks(&self) -> &[Mat] {
        &self.blocks
    }

    pub fn block(&self, i: usize) -> &Mat {
        &self.blocks[i]
    }

    /// `self ∘ g`.
    pub fn after(&self, g: &Morph) -> Result<Morph> {
        if g.target != self.source {
            return Err(Error::usage("morphisms are not composable"));
        }
        let blocks = self.blocks.iter().zip(&g.blocks).map(|(a, b)| a.mul(b)).collect();
        Ok(Morph { source: g.source.clone(), target: self.target.clone(), blocks })
    }

    pub fn add(&self, other: &Morph) -> Morph {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect();
        Morph { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn sub(&self, other: &Morph) -> Morph {
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect();
        Morph { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    pub fn scale(&self, c: u32) -> Morph {
        let blocks = self.blocks.iter().map(|a| a.scale(c)).collect();
        Morph { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    /// `sum c_k basis_k`; the basis must be non-empty or `source`/`target` given.
    pub fn combination(source: &Rep, target: &Rep, basis: &[Morph], coeffs: &[u32]) -> Morph {
        let mut acc = Morph::zero(source, target);
        for (b, &c) in basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Mat::is_zero)
    }

    pub fn is_iso(&self) -> bool {
        self.blocks.iter().all(Mat::is_invertible)
    }

    pub fn is_injective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.blocks.iter().all(|b| b.rank() == b.rows())
    }

    /// Concatenated block entries, the coordinates of the morphism in `Hom_k`.
    pub fn flatten(&self) -> Vec<u32> {
        self.blocks.iter().flat_map(|b| b.as_slice().iter().copied()).collect()
    }

    /// Block-diagonal matrix on the total spaces.
    pub fn total_matrix(&self) -> Mat {
        let f = self.source.field();
        let mut m = Mat::zeros(f, self.target.total_dim(), self.source.total_dim());
        let (so, to) = (self.source.offsets(), self.target.offsets());
        for (i, b) in self.blocks.iter().enumerate() {
            m.paste(to[i], so[i], b);
        }
        m
    }

    /// Inverse of [`Morph::total_matrix`]; off-diagonal entries are ignored.
    pub fn from_total_matrix(source: &Rep, target: &Rep, m: &Mat) -> Morph {
        let (so, to) = (source.offsets(), target.offsets());
        let blocks =
            (0..source.dims.len()).map(|i| m.submatrix(to[i], target.dims[i], so[i], source.dims[i])).collect();
        Morph { source: source.clone(), target: target.clone(), blocks }
    }

    pub fn pow(&self, n: usize) -> Morph {
        let blocks = self.blocks.iter().map(|b| b.pow(n)).collect();
        Morph { source: self.source.clone(), target: self.target.clone(), blocks }
    }

    /// `(f_1, ..., f_k): M -> N_1 ⊕ ... ⊕ N_k`.
    pub fn columns(source: &Rep, parts: &[Morph]) -> Result<Morph> {
        let alg = source.algebra().clone();
        let target = Rep::direct_sum_all(&alg, parts.iter().map(|p| &p.target))?;
        let f = source.field();
        let blocks = (0..source.dims.len())
            .map(|i| parts.iter().fold(Mat::zeros(f, 0, source.dims[i]), |acc, p| acc.vstack(&p.blocks[i])))
            .collect();
        Ok(Morph { source: source.clone(), target, blocks })
    }

    /// `[g_1 ... g_k]: M_1 ⊕ ... ⊕ M_k -> N`.
    pub fn rows(target: &Rep, parts: &[Morph]) -> Result<Morph> {
        let alg = target.algebra().clone();
        let source = Rep::direct_sum_all(&alg, parts.iter().map(|p| &p.source))?;
        let f = target.field();
        let blocks = (0..target.dims.len())
            .map(|i| parts.iter().fold(Mat::zeros(f, target.dims[i], 0), |acc, p| acc.hstack(&p.blocks[i])))
            .collect();
        Ok(Morph { source, target: target.clone(), blocks })
    }

    /// Replaces the target by a submodule containing the image, given by its
    /// inclusion `incl: sub -> target`.
    pub fn corestrict(&self, incl: &Morph) -> Result<Morph> {
        let mut blocks = Vec::with_capacity(self.blocks.len());
        for (i, b) in self.blocks.iter().enumerate() {
            let x = incl.blocks[i].solve_mat(b)?.ok_or_else(|| Error::usage("image does not lie in the submodule"))?;
            blocks.push(x);
        }
        Ok(Morph { source: self.source.clone(), target: incl.source.clone(), blocks })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quiver;

    fn a2() -> Arc<PathAlgebra> {
        PathAlgebra::new(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), PrimeField::gf2())
    }

    #[test]
    fn shape_checks() {
        let a = a2();
        let f = a.field();
        assert!(Rep::new(a.clone(), vec![1, 1], vec![Mat::identity(f, 1)]).is_ok());
        assert!(Rep::new(a.clone(), vec![1, 2], vec![Mat::identity(f, 1)]).is_err());
        assert!(Rep::new(a, vec![1], vec![]).is_err());
    }

    #[test]
    fn morph_intertwining_is_checked() {
        let a = a2();
        let p2 = projective(&a, 1);
        let s2 = simple(&a, 1);
        let f = a.field();
        let good = Morph::new(p2.clone(), s2.clone(), vec![Mat::zeros(f, 0, 1), Mat::identity(f, 1)]);
        assert!(good.is_ok());
        let s1 = simple(&a, 0);
        let bad = Morph::new(s1, p2, vec![Mat::identity(f, 1), Mat::zeros(f, 1, 0)]);
        assert!(bad.is_ok(), "socle inclusion of S_1 into 2/1 is a module map");
    }

    #[test]
    fn total_matrix_round_trip() {
        let a = a2();
        let p2 = projective(&a, 1);
        let id = Morph::identity(&p2);
        assert_eq!(Morph::from_total_matrix(&p2, &p2, &id.total_matrix()), id);
    }

    #[test]
    fn dual_twice_is_identity() {
        let a = a2();
        let p2 = projective(&a, 1);
        let back = p2.dual().dual_over(&a).unwrap();
        assert_eq!(back, p2);
    }
}
