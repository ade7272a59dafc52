use std::sync::Arc;

use super::hom::{morphism_kit, quotient, submodule};
use super::{Morph, Rep};
use crate::algebra::PathAlgebra;
use crate::error::Result;
use crate::linalg::Mat;

/// `P_i = e_i A`: at `j` the paths `i -> j`, arrows act by `p -> p a`.
pub fn projective(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let f = alg.field();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(i, j).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let src = alg.paths_between(i, a.source);
            let tgt = alg.paths_between(i, a.target);
            let arrow_path = alg.path_index(a.source, &[k]).expect("arrows are paths");
            let mut m = Mat::zeros(f, tgt.len(), src.len());
            for (c, &p) in src.iter().enumerate() {
                let q = alg.concat(p, arrow_path).expect("composable");
                let r = tgt.iter().position(|&x| x == q).expect("path lands in the target basis");
                m.set(r, c, 1);
            }
            m
        })
        .collect();
    Rep::new(alg.clone(), dims, maps).expect("projective shapes are consistent")
}

/// `I_i = D(A e_i)`: at `j` the duals of paths `j -> i`; an arrow `a: j -> k`
/// sends `p*` to `r*` whenever `p = a r`.
pub fn injective(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let f = alg.field();
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|j| alg.paths_between(j, i).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let src = alg.paths_between(a.source, i);
            let tgt = alg.paths_between(a.target, i);
            let arrow_path = alg.path_index(a.source, &[k]).expect("arrows are paths");
            let mut m = Mat::zeros(f, tgt.len(), src.len());
            for (r, &rp) in tgt.iter().enumerate() {
                let p = alg.concat(arrow_path, rp).expect("composable");
                let c = src.iter().position(|&x| x == p).expect("path lands in the source basis");
                m.set(r, c, 1);
            }
            m
        })
        .collect();
    Rep::new(alg.clone(), dims, maps).expect("injective shapes are consistent")
}

pub fn simple(alg: &Arc<PathAlgebra>, i: usize) -> Rep {
    let mut dims = vec![0; alg.vertex_count()];
    dims[i] = 1;
    Rep::with_zero_maps(alg, dims)
}

/// Direct sum of indecomposable projectives (or injectives) with the
/// summand vertices recorded.
fn sum_of(alg: &Arc<PathAlgebra>, vertices: &[usize], make: fn(&Arc<PathAlgebra>, usize) -> Rep) -> Rep {
    let parts: Vec<Rep> = vertices.iter().map(|&v| make(alg, v)).collect();
    Rep::direct_sum_all(alg, &parts).expect("same algebra")
}

/// Minimal projective presentation `P1 --d1--> P0 --pi--> M -> 0`.
///
/// `P0 = ⊕ P_{p0[v]}` and `P1 = ⊕ P_{p1[u]}`, in list order. The component of
/// `d1` from summand `u` (vertex `i`) to summand `v` (vertex `j`) is left
/// multiplication by `sum_q coeffs[u][v][q] q` over the paths `q: j -> i`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: Vec<usize>,
    pub p1: Vec<usize>,
    pub p0_rep: Rep,
    pub p1_rep: Rep,
    pub d1: Morph,
    pub pi: Morph,
    pub coeffs: Vec<Vec<Vec<u32>>>,
}

/// The map `P_i -> M` sending `e_i` to `m in M_i`.
fn from_projective(m: &Rep, i: usize, v: &[u32]) -> Vec<Mat> {
    let alg = m.algebra();
    let f = m.field();
    let x = Mat::column_vector(f, v);
    (0..alg.vertex_count())
        .map(|j| {
            let cols: Vec<Vec<u32>> =
                alg.paths_between(i, j).iter().map(|&q| m.path_matrix(q).mul(&x).column(0)).collect();
            Mat::from_columns(f, m.dim_at(j), &cols)
        })
        .collect()
}

/// Projective cover `pi: P -> M`, generators chosen as standard vectors
/// complementing the radical at each vertex.
fn projective_cover(m: &Rep) -> Result<(Vec<usize>, Rep, Morph)> {
    let alg = m.algebra();
    let f = m.field();
    let rad = radical_bases(m);
    let mut vertices = Vec::new();
    let mut gens = Vec::new();
    for (i, r) in rad.iter().enumerate() {
        for k in r.complement_indices() {
            let mut v = vec![0u32; m.dim_at(i)];
            v[k] = 1;
            vertices.push(i);
            gens.push(v);
        }
    }
    let p = sum_of(alg, &vertices, projective);
    let n = alg.vertex_count();
    let mut blocks: Vec<Mat> = (0..n).map(|j| Mat::zeros(f, m.dim_at(j), 0)).collect();
    for (&i, g) in vertices.iter().zip(&gens) {
        let part = from_projective(m, i, g);
        for j in 0..n {
            blocks[j] = blocks[j].hstack(&part[j]);
        }
    }
    let pi = Morph::new(p.clone(), m.clone(), blocks)?;
    Ok((vertices, p, pi))
}

/// `rad M` at each vertex as a column basis: the sum of the arrow images.
pub(crate) fn radical_bases(m: &Rep) -> Vec<Mat> {
    let f = m.field();
    let alg = m.algebra();
    (0..alg.vertex_count())
        .map(|j| {
            let mut span = Mat::zeros(f, m.dim_at(j), 0);
            for (k, a) in alg.quiver().arrows().iter().enumerate() {
                if a.target == j {
                    span = span.hstack(m.map(k));
                }
            }
            span.column_space()
        })
        .collect()
}

/// `top M = M / rad M`.
pub fn top(m: &Rep) -> Result<Rep> {
    Ok(quotient(m, &radical_bases(m))?.0)
}

pub fn radical(m: &Rep) -> Result<(Rep, Morph)> {
    submodule(m, radical_bases(m))
}

pub fn min_proj_presentation(m: &Rep) -> Result<Presentation> {
    let alg = m.algebra();
    let (p0, p0_rep, pi) = projective_cover(m)?;
    let kit = morphism_kit(&pi)?;
    let (p1, p1_rep, cover) = projective_cover(&kit.kernel)?;
    let d1 = kit.kernel_incl.after(&cover)?;
    let coeffs = presentation_coeffs(alg, &p0, &p1, &d1);
    Ok(Presentation { p0, p1, p0_rep, p1_rep, d1, pi, coeffs })
}

/// Reads off the path coefficients of a map between sums of projectives.
/// The generator `e_i` of summand `u` of `P1` sits in `(P1)_i` after the
/// contributions of the earlier summands.
fn presentation_coeffs(alg: &Arc<PathAlgebra>, p0: &[usize], p1: &[usize], d1: &Morph) -> Vec<Vec<Vec<u32>>> {
    p1.iter()
        .enumerate()
        .map(|(u, &i)| {
            let col: usize = p1[..u].iter().map(|&w| alg.paths_between(w, i).len()).sum();
            let image = d1.block(i).column(col);
            let mut at = 0;
            p0.iter()
                .map(|&j| {
                    let len = alg.paths_between(j, i).len();
                    let c = image[at..at + len].to_vec();
                    at += len;
                    c
                })
                .collect()
        })
        .collect()
}

/// `ν` applied to the presentation map: `⊕ I_{p1} -> ⊕ I_{p0}`.
fn nakayama(alg: &Arc<PathAlgebra>, pres: &Presentation) -> Result<Morph> {
    let f = alg.field();
    let n = alg.vertex_count();
    let src = sum_of(alg, &pres.p1, injective);
    let tgt = sum_of(alg, &pres.p0, injective);
    let mut blocks = Vec::with_capacity(n);
    for k in 0..n {
        let mut block = Mat::zeros(f, tgt.dim_at(k), src.dim_at(k));
        let mut col_off = 0;
        for (u, &i) in pres.p1.iter().enumerate() {
            let cols = alg.paths_between(k, i);
            let mut row_off = 0;
            for (v, &j) in pres.p0.iter().enumerate() {
                let rows = alg.paths_between(k, j);
                let qs = alg.paths_between(j, i);
                for (qi, &q) in qs.iter().enumerate() {
                    let c = pres.coeffs[u][v][qi];
                    if c == 0 {
                        continue;
                    }
                    for (ri, &r) in rows.iter().enumerate() {
                        let p = alg.concat(r, q).expect("composable");
                        let pc = cols.iter().position(|&x| x == p).expect("path k -> i");
                        let (row, col) = (row_off + ri, col_off + pc);
                        block.set(row, col, f.add(block.get(row, col), c));
                    }
                }
                row_off += rows.len();
            }
            col_off += cols.len();
        }
        blocks.push(block);
    }
    Morph::new(src, tgt, blocks)
}

/// Auslander-Reiten translate `τM = ker ν(d1)`.
pub fn tau(m: &Rep) -> Result<Rep> {
    let alg = m.algebra();
    let pres = min_proj_presentation(m)?;
    let nu = nakayama(alg, &pres)?;
    Ok(morphism_kit(&nu)?.kernel)
}

/// `τ⁻¹ M = D τ_{op} D M`.
pub fn tau_inverse(m: &Rep) -> Result<Rep> {
    let t = tau(&m.dual())?;
    t.dual_over(m.algebra())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Quiver;
    use crate::linalg::PrimeField;
    use crate::rep::{hom_dim, is_isomorphic};

    fn alg(v: &[&str], a: &[(&str, &str, &str)]) -> Arc<PathAlgebra> {
        PathAlgebra::new(Quiver::new(v, a).unwrap(), PrimeField::gf2())
    }

    fn iso(a: &Rep, b: &Rep) -> bool {
        is_isomorphic(a, b).unwrap().is_some()
    }

    #[test]
    fn standard_modules_over_a2() {
        let a = alg(&["1", "2"], &[("a", "2", "1")]);
        assert_eq!(projective(&a, 1).dims(), &[1, 1]);
        assert_eq!(projective(&a, 0).dims(), &[1, 0]);
        assert!(iso(&injective(&a, 1), &simple(&a, 1)));
        assert_eq!(injective(&a, 0).dims(), &[1, 1]);
    }

    #[test]
    fn hom_from_projective_is_vertex_dim() {
        let a = alg(&["3", "1", "2"], &[("x", "3", "1"), ("y", "1", "2")]);
        let m = injective(&a, 2).direct_sum(&projective(&a, 0)).unwrap();
        for i in 0..3 {
            assert_eq!(hom_dim(&projective(&a, i), &m).unwrap(), m.dim_at(i));
        }
    }

    #[test]
    fn presentations() {
        let a = alg(&["1", "2"], &[("a", "2", "1")]);
        let pres = min_proj_presentation(&simple(&a, 1)).unwrap();
        assert_eq!(pres.p0, vec![1]);
        assert_eq!(pres.p1, vec![0]);
        let pres = min_proj_presentation(&projective(&a, 1)).unwrap();
        assert!(pres.p1.is_empty());
        let b = alg(&["1", "2"], &[("a", "1", "2")]);
        let pres = min_proj_presentation(&simple(&b, 0)).unwrap();
        assert_eq!((pres.p0.clone(), pres.p1.clone()), (vec![0], vec![1]));
        assert!(pres.pi.after(&pres.d1).unwrap().is_zero());
    }

    #[test]
    fn tau_examples() {
        let a = alg(&["1", "2"], &[("a", "2", "1")]);
        assert!(iso(&tau(&simple(&a, 1)).unwrap(), &simple(&a, 0)));
        for i in 0..2 {
            assert!(tau(&projective(&a, i)).unwrap().is_zero());
            assert!(tau_inverse(&injective(&a, i)).unwrap().is_zero());
        }
        let b = alg(&["1", "2"], &[("a", "1", "2")]);
        assert!(iso(&tau(&simple(&b, 0)).unwrap(), &simple(&b, 1)));
        assert!(iso(&tau_inverse(&simple(&b, 1)).unwrap(), &simple(&b, 0)));
    }
}
