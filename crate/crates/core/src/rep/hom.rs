use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Morph, Rep};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// Linear system whose kernel is `Hom(M, N)`. Unknowns are the entries of
/// the blocks, vertex by vertex, row-major.
fn hom_system(m: &Rep, n: &Rep) -> (Mat, Vec<usize>) {
    let f = m.field();
    let nv = m.dims().len();
    let mut var_off = Vec::with_capacity(nv);
    let mut nvars = 0;
    for i in 0..nv {
        var_off.push(nvars);
        nvars += n.dim_at(i) * m.dim_at(i);
    }
    let arrows = m.algebra().quiver().arrows();
    let neqs: usize = arrows.iter().map(|a| n.dim_at(a.target) * m.dim_at(a.source)).sum();
    let mut sys = Mat::zeros(f, neqs, nvars);
    let mut row = 0;
    for (k, a) in arrows.iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (m.map(k), n.map(k));
        let (ms, mt) = (m.dim_at(s), m.dim_at(t));
        let (ns, nt) = (n.dim_at(s), n.dim_at(t));
        // (X_t M_a - N_a X_s)[r][c] = 0
        for r in 0..nt {
            for c in 0..ms {
                for kk in 0..mt {
                    let v = ma.get(kk, c);
                    if v != 0 {
                        let col = var_off[t] + r * mt + kk;
                        sys.set(row, col, f.add(sys.get(row, col), v));
                    }
                }
                for kk in 0..ns {
                    let v = na.get(r, kk);
                    if v != 0 {
                        let col = var_off[s] + kk * ms + c;
                        sys.set(row, col, f.sub(sys.get(row, col), v));
                    }
                }
                row += 1;
            }
        }
    }
    (sys, var_off)
}

fn morph_from_vars(m: &Rep, n: &Rep, var_off: &[usize], x: &[u32]) -> Morph {
    let f = m.field();
    let blocks = (0..m.dims().len())
        .map(|i| {
            let (r, c) = (n.dim_at(i), m.dim_at(i));
            Mat::from_fn(f, r, c, |a, b| x[var_off[i] + a * c + b])
        })
        .collect();
    Morph::new_unchecked(m.clone(), n.clone(), blocks)
}

/// A basis of `Hom(M, N)` in deterministic echelon order.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<Morph>> {
    m.same_algebra(n)?;
    let (sys, var_off) = hom_system(m, n);
    Ok(sys.kernel_basis().iter().map(|x| morph_from_vars(m, n, &var_off, x)).collect())
}

pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    m.same_algebra(n)?;
    let (sys, _) = hom_system(m, n);
    Ok(sys.cols() - sys.rank())
}

/// An isomorphism `M -> N` if one exists.
///
/// `Ok(None)` is a certified "no": either an invariant differs or the whole
/// Hom space was scanned. When the space is too large to scan and random
/// elements find no isomorphism the answer is [`Error::Undecided`].
pub fn is_isomorphic(m: &Rep, n: &Rep) -> Result<Option<Morph>> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.is_zero() {
        return Ok(Some(Morph::identity(m)));
    }
    if m == n {
        return Ok(Some(Morph::identity(m)));
    }
    let basis = hom_basis(m, n)?;
    if basis.len() != hom_dim(m, m)? || basis.len() != hom_dim(n, n)? || hom_dim(n, m)? != basis.len() {
        return Ok(None);
    }
    if let Some(b) = basis.iter().find(|b| b.is_iso()) {
        return Ok(Some(b.clone()));
    }
    let params = m.algebra().params();
    let p = m.field().p() as u64;
    let d = basis.len();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ (m.total_dim() as u64) << 8 ^ d as u64);
    for _ in 0..params.random_tries {
        let coeffs: Vec<u32> = (0..d).map(|_| rng.gen_range(0..p as u32)).collect();
        let g = Morph::combination(m, n, &basis, &coeffs);
        if g.is_iso() {
            return Ok(Some(g));
        }
    }
    let exhaustive = p.checked_pow(d as u32).is_some_and(|size| size <= params.exhaustive_cap);
    if !exhaustive {
        return Err(Error::Undecided(format!(
            "no isomorphism among {} random elements of a {d}-dimensional Hom space",
            params.random_tries
        )));
    }
    let mut coeffs = vec![0u32; d];
    loop {
        // Odometer over F_p^d.
        let mut k = 0;
        while k < d {
            coeffs[k] += 1;
            if coeffs[k] as u64 == p {
                coeffs[k] = 0;
                k += 1;
            } else {
                break;
            }
        }
        if k == d {
            return Ok(None);
        }
        let g = Morph::combination(m, n, &basis, &coeffs);
        if g.is_iso() {
            return Ok(Some(g));
        }
    }
}

/// Submodule spanned by the column bases, with its inclusion.
pub fn submodule_of(m: &Rep, bases: Vec<Mat>) -> Result<(Rep, Morph)> {
    submodule(m, bases)
}

/// Quotient by the submodule spanned by the column bases, with the projection.
pub fn quotient_module(m: &Rep, bases: &[Mat]) -> Result<(Rep, Morph)> {
    quotient(m, bases)
}

/// Kernel, image and cokernel of a morphism, each with its structure map.
#[derive(Clone, Debug)]
pub struct MorphismKit {
    pub kernel: Rep,
    /// `ker f -> source`.
    pub kernel_incl: Morph,
    pub image: Rep,
    /// `source -> im f`.
    pub coimage_proj: Morph,
    /// `im f -> target`.
    pub image_incl: Morph,
    pub cokernel: Rep,
    /// `target -> coker f`.
    pub cokernel_proj: Morph,
}

/// Submodule of `m` with the given column-basis subspaces, which must be
/// stable under the arrows.
pub(crate) fn submodule(m: &Rep, bases: Vec<Mat>) -> Result<(Rep, Morph)> {
    let dims: Vec<usize> = bases.iter().map(Mat::cols).collect();
    let mut maps = Vec::new();
    for (k, a) in m.algebra().quiver().arrows().iter().enumerate() {
        let moved = m.map(k).mul(&bases[a.source]);
        let x = bases[a.target].solve_mat(&moved)?.ok_or_else(|| Error::invariant("subspace is not a submodule"))?;
        maps.push(x);
    }
    let sub = Rep::new(m.algebra().clone(), dims, maps)?;
    let incl = Morph::new_unchecked(sub.clone(), m.clone(), bases);
    Ok((sub, incl))
}

/// Quotient `m / sub`, where `bases` span a submodule.
pub(crate) fn quotient(m: &Rep, bases: &[Mat]) -> Result<(Rep, Morph)> {
    let mut qs = Vec::with_capacity(bases.len());
    for (i, b) in bases.iter().enumerate() {
        let q = if b.cols() == 0 { Mat::identity(m.field(), m.dim_at(i)) } else { b.column_space().left_kernel_rows() };
        qs.push(q);
    }
    let dims: Vec<usize> = qs.iter().map(Mat::rows).collect();
    let mut maps = Vec::new();
    for (k, a) in m.algebra().quiver().arrows().iter().enumerate() {
        // Z q_s = q_t M_a, solved through the transpose.
        let rhs = qs[a.target].mul(m.map(k));
        let zt = qs[a.source]
            .transpose()
            .solve_mat(&rhs.transpose())?
            .ok_or_else(|| Error::invariant("subspace is not a submodule"))?;
        maps.push(zt.transpose());
    }
    let quo = Rep::new(m.algebra().clone(), dims, maps)?;
    let proj = Morph::new_unchecked(m.clone(), quo.clone(), qs);
    Ok((quo, proj))
}

pub fn morphism_kit(f: &Morph) -> Result<MorphismKit> {
    let (src, tgt) = (f.source(), f.target());
    let ker_bases: Vec<Mat> = f.blocks().iter().map(Mat::kernel_mat).collect();
    let (kernel, kernel_incl) = submodule(src, ker_bases)?;
    let im_bases: Vec<Mat> = f.blocks().iter().map(Mat::column_space).collect();
    let (image, image_incl) = submodule(tgt, im_bases.clone())?;
    let coimage_proj = f.corestrict(&image_incl)?;
    let (cokernel, cokernel_proj) = quotient(tgt, &im_bases)?;
    Ok(MorphismKit { kernel, kernel_incl, image, coimage_proj, image_incl, cokernel, cokernel_proj })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::linalg::PrimeField;
    use crate::rep::{projective, simple};
    use std::sync::Arc;

    fn alg(v: &[&str], a: &[(&str, &str, &str)]) -> Arc<PathAlgebra> {
        PathAlgebra::new(Quiver::new(v, a).unwrap(), PrimeField::gf2())
    }

    #[test]
    fn hom_examples() {
        let a3 = alg(&["3", "1", "2"], &[("x", "3", "1"), ("y", "1", "2")]);
        let p3 = projective(&a3, 0);
        assert_eq!(hom_dim(&p3, &p3).unwrap(), 1);
        let a12 = alg(&["1", "2"], &[("a", "1", "2")]);
        assert_eq!(hom_dim(&simple(&a12, 0), &projective(&a12, 0)).unwrap(), 0);
        let basis = hom_basis(&p3, &p3).unwrap();
        assert!(basis[0].is_iso());
    }

    #[test]
    fn kit_of_zero_identity_and_cover() {
        let a = alg(&["1", "2"], &[("a", "2", "1")]);
        let p2 = projective(&a, 1);
        let s2 = simple(&a, 1);
        let zero = Morph::zero(&p2, &s2);
        let kit = morphism_kit(&zero).unwrap();
        assert_eq!(kit.kernel.dims(), p2.dims());
        assert!(kit.image.is_zero());
        assert_eq!(kit.cokernel.dims(), s2.dims());
        let kit = morphism_kit(&Morph::identity(&p2)).unwrap();
        assert!(kit.kernel.is_zero() && kit.cokernel.is_zero());
        let cover = hom_basis(&p2, &s2).unwrap().remove(0);
        let kit = morphism_kit(&cover).unwrap();
        assert!(is_isomorphic(&kit.kernel, &simple(&a, 0)).unwrap().is_some());
        assert!(kit.cokernel_proj.after(&cover).unwrap().is_zero());
        assert_eq!(kit.image_incl.after(&kit.coimage_proj).unwrap(), cover);
    }

    #[test]
    fn scrambled_copy_is_isomorphic() {
        let f = PrimeField::new(3).unwrap();
        let a = PathAlgebra::new(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), f);
        let m = projective(&a, 1).direct_sum(&projective(&a, 1)).unwrap();
        let g = vec![Mat::from_rows(f, &[vec![1, 2], vec![0, 1]]), Mat::from_rows(f, &[vec![2, 1], vec![1, 1]])];
        let n = m.transport(&g).unwrap();
        assert_ne!(m, n);
        let iso = is_isomorphic(&m, &n).unwrap().unwrap();
        assert!(iso.is_iso());
        assert!(is_isomorphic(&simple(&a, 0), &simple(&a, 1)).unwrap().is_none());
        let s = simple(&a, 0).direct_sum(&simple(&a, 1)).unwrap();
        assert!(is_isomorphic(&s, &projective(&a, 1)).unwrap().is_none());
    }
}
