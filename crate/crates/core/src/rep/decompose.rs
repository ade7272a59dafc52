use std::cmp::Reverse;

use super::hom::{hom_basis, morphism_kit};
use super::{Morph, Rep};
use crate::algebra::MatrixAlgebra;
use crate::error::{Error, Result};

/// `End(M)` with a Hom basis and its image in `End_k(k^{total_dim})`.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub module: Rep,
    pub basis: Vec<Morph>,
    pub matrices: MatrixAlgebra,
}

impl EndAlgebra {
    pub fn morph(&self, coords: &[u32]) -> Morph {
        Morph::combination(&self.module, &self.module, &self.basis, coords)
    }

    pub fn coords(&self, g: &Morph) -> Option<Vec<u32>> {
        self.matrices.coords(&g.total_matrix())
    }
}

pub fn end_algebra(m: &Rep) -> Result<EndAlgebra> {
    let basis = hom_basis(m, m)?;
    let mats = basis.iter().map(Morph::total_matrix).collect();
    let matrices = MatrixAlgebra::new(m.field(), m.total_dim(), mats, m.algebra().params())?;
    Ok(EndAlgebra { module: m.clone(), basis, matrices })
}

/// Indecomposable summands with their split inclusions and projections.
pub(crate) fn decompose_split(m: &Rep) -> Result<Vec<(Rep, Morph, Morph)>> {
    if m.is_zero() {
        return Ok(vec![]);
    }
    let end = end_algebra(m)?;
    // The radical computation certifies every idempotent corner as local.
    let rad = end.matrices.radical()?;
    let mut parts = Vec::with_capacity(rad.idempotents.len());
    for e in &rad.idempotents {
        let em = Morph::from_total_matrix(m, m, e);
        let kit = morphism_kit(&em)?;
        parts.push((kit.image, kit.image_incl, kit.coimage_proj));
    }
    let total: usize = parts.iter().map(|p| p.0.total_dim()).sum();
    if total != m.total_dim() {
        return Err(Error::invariant("summands do not add up to the module"));
    }
    parts.sort_by_key(|a| summand_key(&a.0));
    Ok(parts)
}

fn summand_key(r: &Rep) -> (usize, Reverse<Vec<usize>>, Vec<u32>) {
    let flat = r.maps().iter().flat_map(|m| m.as_slice().iter().copied()).collect();
    (r.total_dim(), Reverse(r.dims().to_vec()), flat)
}

/// Krull-Schmidt decomposition into indecomposables, via primitive
/// idempotents of `End(M)` found by Fitting splittings.
pub fn decompose(m: &Rep) -> Result<Vec<Rep>> {
    Ok(decompose_split(m)?.into_iter().map(|p| p.0).collect())
}

/// `End(M)` is a division algebra.
pub fn is_brick(m: &Rep) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let end = end_algebra(m)?;
    if end.basis.len() == 1 {
        return Ok(true);
    }
    let rad = end.matrices.radical()?;
    Ok(rad.idempotents.len() == 1 && rad.basis.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::linalg::PrimeField;
    use crate::rep::{is_isomorphic, projective, simple};

    #[test]
    fn decompose_small() {
        let a = PathAlgebra::new(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), PrimeField::gf2());
        let s1 = simple(&a, 0);
        let parts = decompose(&s1.power(2)).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|p| is_isomorphic(p, &s1).unwrap().is_some()));
        let regular = projective(&a, 0).direct_sum(&projective(&a, 1)).unwrap();
        let parts = decompose(&regular).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(is_isomorphic(&parts[0], &s1).unwrap().is_some());
        assert!(is_isomorphic(&parts[1], &projective(&a, 1)).unwrap().is_some());
        assert!(is_brick(&projective(&a, 1)).unwrap());
        assert!(!is_brick(&s1.power(2)).unwrap());
        assert!(decompose(&Rep::zero(&a)).unwrap().is_empty());
    }
}
