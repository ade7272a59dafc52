//! Modules over a triangular matrix algebra `A = (B 0; M C)` as triples
//! `(X, Y)_f`, the six ladder functors between `mod B`, `mod A`, `mod C`,
//! and the constructions that build support τ-tilting `A`-modules from
//! `B`- and `C`-data.

mod theorems;

use std::sync::Arc;

pub use theorems::{
    bongartz_glued, check_exact_sequences, check_ladder, check_restriction_inclusion, cprime_invariants, glue_cfhos,
    glue_mgs, glue_semibrick, glue_stt, glue_stt_simple, glue_torsion_class, monotonicity_report, reduce,
    sweep_all_pairs, CPrimeReport, GlueOutcome, Monotonicity, Reduction,
};

use crate::algebra::GluedAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Mat;
use crate::rep::{self, Morph, Rep};
use crate::tilt::{Catalog, Lattice};

/// `(X, Y)_f`: `f[k]` is the matrix of the connecting arrow `k: c -> b`,
/// a map `Y_c -> X_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    pub x: Rep,
    pub y: Rep,
    pub f: Vec<Mat>,
}

/// A glued algebra with the catalogs and lattices of `B`, `C` and `A`.
#[derive(Debug)]
pub struct GluingContext {
    glued: GluedAlgebra,
    lb: Lattice,
    lc: Lattice,
    la: Lattice,
    /// For each `A`-indecomposable, the catalog indices of its `B`- and
    /// `C`-parts.
    parts: Vec<(Vec<usize>, Vec<usize>)>,
}

impl GluingContext {
    pub fn new(glued: GluedAlgebra, cap: usize) -> Result<Self> {
        let lb = Lattice::new(Catalog::new(glued.b(), cap)?)?;
        let lc = Lattice::new(Catalog::new(glued.c(), cap)?)?;
        let la = Lattice::new(Catalog::new(glued.a(), cap)?)?;
        let mut parts = Vec::with_capacity(la.catalog().len());
        for z in la.catalog().modules() {
            let t = to_triple(&glued, z)?;
            parts.push((lb.catalog().indices_of(&t.x)?, lc.catalog().indices_of(&t.y)?));
        }
        Ok(GluingContext { glued, lb, lc, la, parts })
    }

    pub fn glued(&self) -> &GluedAlgebra {
        &self.glued
    }

    pub fn b(&self) -> &Lattice {
        &self.lb
    }

    pub fn c(&self) -> &Lattice {
        &self.lc
    }

    pub fn a(&self) -> &Lattice {
        &self.la
    }

    /// Catalog indices of the `B`- and `C`-parts of the `A`-indecomposable `i`.
    pub fn parts(&self, i: usize) -> &(Vec<usize>, Vec<usize>) {
        &self.parts[i]
    }

    pub fn to_triple(&self, z: &Rep) -> Result<Triple> {
        to_triple(&self.glued, z)
    }

    pub fn from_triple(&self, t: &Triple) -> Result<Rep> {
        from_triple(&self.glued, t)
    }

    /// `i_0 X = (X, 0)`.
    pub fn i0(&self, x: &Rep) -> Result<Rep> {
        let y = Rep::zero(self.glued.c());
        let f = self.zero_connecting(x, &y);
        self.from_triple(&Triple { x: x.clone(), y, f })
    }

    /// `i_{-1} Z = X`.
    pub fn i_minus1(&self, z: &Rep) -> Result<Rep> {
        Ok(self.to_triple(z)?.x)
    }

    /// `i_1 Z = coker(f: Y ⊗_C M -> X)`.
    pub fn i1(&self, z: &Rep) -> Result<Rep> {
        let t = self.to_triple(z)?;
        let b = self.glued.b();
        let f = b.field();
        let mut gens: Vec<Mat> = (0..b.vertex_count()).map(|v| Mat::zeros(f, t.x.dim_at(v), 0)).collect();
        for (k, a) in self.glued.connecting().iter().enumerate() {
            gens[a.target] = gens[a.target].hstack(&t.f[k]);
        }
        let sub = generated_submodule(&t.x, gens);
        Ok(rep::quotient_module(&t.x, &sub)?.0)
    }

    /// `j_0 Z = Y`.
    pub fn j0(&self, z: &Rep) -> Result<Rep> {
        Ok(self.to_triple(z)?.y)
    }

    /// `j_{-1} Y = (0, Y)`.
    pub fn j_minus1(&self, y: &Rep) -> Result<Rep> {
        let x = Rep::zero(self.glued.b());
        let f = self.zero_connecting(&x, y);
        self.from_triple(&Triple { x, y: y.clone(), f })
    }

    /// `j_1 Y = (Y ⊗_C M, Y)` with the canonical connecting maps.
    pub fn j1(&self, y: &Rep) -> Result<Rep> {
        let (w, f) = self.tensor_parts(y)?;
        self.from_triple(&Triple { x: w, y: y.clone(), f })
    }

    /// `Y ⊗_C M`, a `B`-module.
    pub fn tensor_with_m(&self, y: &Rep) -> Result<Rep> {
        Ok(self.tensor_parts(y)?.0)
    }

    /// `Y ⊗_C M = ⊕_α P^B_{b'} ⊗ Y_{c'}` over connecting arrows `α: c' -> b'`,
    /// with `y ↦ y ⊗ α` as the connecting maps.
    fn tensor_parts(&self, y: &Rep) -> Result<(Rep, Vec<Mat>)> {
        y.same_algebra(&Rep::zero(self.glued.c()))?;
        let b = self.glued.b();
        let f = b.field();
        let mut pieces = Vec::new();
        for a in self.glued.connecting() {
            for _ in 0..y.dim_at(a.source) {
                pieces.push((a.target, rep::projective(b, a.target)));
            }
        }
        let w = Rep::direct_sum_all(b, pieces.iter().map(|p| &p.1))?;
        let mut conn = Vec::with_capacity(self.glued.connecting().len());
        let mut piece = 0;
        for a in self.glued.connecting() {
            let mut m = Mat::zeros(f, w.dim_at(a.target), y.dim_at(a.source));
            // The copies of this arrow come next in `pieces`; locate e_{b'} in each.
            for col in 0..y.dim_at(a.source) {
                let start: usize = pieces[..piece].iter().map(|p| p.1.dim_at(a.target)).sum();
                m.set(start, col, 1);
                piece += 1;
            }
            conn.push(m);
        }
        Ok((w, conn))
    }

    fn zero_connecting(&self, x: &Rep, y: &Rep) -> Vec<Mat> {
        let f = self.glued.a().field();
        self.glued.connecting().iter().map(|a| Mat::zeros(f, x.dim_at(a.target), y.dim_at(a.source))).collect()
    }

    /// `(X, Y)_g` for `phi: Y ⊗_C M -> X`, where `g_α = phi_{b'} ∘ ι_α` and
    /// `ι_α: Y_{c'} -> Y ⊗_C M` is the canonical map `y ↦ y ⊗ α`.
    pub fn attach(&self, y: &Rep, phi: &Morph) -> Result<Rep> {
        let (w, conn) = self.tensor_parts(y)?;
        if *phi.source() != w {
            return Err(Error::usage("map does not start at Y ⊗_C M"));
        }
        let f = self.glued.connecting().iter().zip(&conn).map(|(a, c)| phi.block(a.target).mul(c)).collect();
        self.from_triple(&Triple { x: phi.target().clone(), y: y.clone(), f })
    }
}

/// Smallest submodule containing the given column vectors at each vertex.
fn generated_submodule(m: &Rep, gens: Vec<Mat>) -> Vec<Mat> {
    let arrows = m.algebra().quiver().arrows();
    let mut span: Vec<Mat> = gens.iter().map(Mat::column_space).collect();
    loop {
        let mut changed = false;
        for (k, a) in arrows.iter().enumerate() {
            let moved = m.map(k).mul(&span[a.source]);
            let joined = span[a.target].hstack(&moved).column_space();
            if joined.cols() > span[a.target].cols() {
                span[a.target] = joined;
                changed = true;
            }
        }
        if !changed {
            return span;
        }
    }
}

pub fn to_triple(g: &GluedAlgebra, z: &Rep) -> Result<Triple> {
    if **z.algebra() != **g.a() {
        return Err(Error::AlgebraMismatch);
    }
    let (nb, nc) = (g.nb(), g.nc());
    let b_arrows = g.b().quiver().arrows().len();
    let c_arrows = g.c().quiver().arrows().len();
    let x = Rep::new(g.b().clone(), z.dims()[..nb].to_vec(), z.maps()[..b_arrows].to_vec())?;
    let y = Rep::new(g.c().clone(), z.dims()[nb..nb + nc].to_vec(), z.maps()[b_arrows..b_arrows + c_arrows].to_vec())?;
    let f = (0..g.connecting().len()).map(|k| z.map(g.connecting_arrow(k)).clone()).collect();
    Ok(Triple { x, y, f })
}

pub fn from_triple(g: &GluedAlgebra, t: &Triple) -> Result<Rep> {
    if **t.x.algebra() != **g.b() || **t.y.algebra() != **g.c() || t.f.len() != g.connecting().len() {
        return Err(Error::AlgebraMismatch);
    }
    let dims: Vec<usize> = t.x.dims().iter().chain(t.y.dims()).copied().collect();
    let maps: Vec<Mat> = t.x.maps().iter().chain(t.y.maps()).chain(&t.f).cloned().collect();
    Rep::new(Arc::clone(g.a()), dims, maps)
}
