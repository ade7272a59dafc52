use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::decompose::{end_algebra, EndAlgebra};
use super::hom::{hom_basis, hom_dim, morphism_kit};
use super::{Morph, Rep};
use crate::error::{Error, Result};
use crate::linalg::Mat;

/// `N ∈ Fac G`: the images of all maps `G -> N` fill `N` at every vertex.
pub fn gen_membership(n: &Rep, g: &Rep) -> Result<bool> {
    n.same_algebra(g)?;
    if n.is_zero() {
        return Ok(true);
    }
    let basis = hom_basis(g, n)?;
    let f = n.field();
    for i in 0..n.dims().len() {
        let span = basis.iter().fold(Mat::zeros(f, n.dim_at(i), 0), |acc, h| acc.hstack(h.block(i)));
        if span.rank() != n.dim_at(i) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A left approximation `map: source -> target`.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub source: Rep,
    pub target: Rep,
    pub map: Morph,
}

fn stack(vectors: &[Vec<u32>], len: usize, f: crate::linalg::PrimeField) -> Mat {
    Mat::from_columns(f, len, vectors)
}

/// Whether every map `W -> t` factors through the maps in `copies`.
fn factors_everything(w: &Rep, targets: &[Rep], homs: &[Vec<Vec<Morph>>], copies: &[(usize, Morph)]) -> Result<bool> {
    let f = w.field();
    for (j, t) in targets.iter().enumerate() {
        let need = hom_dim(w, t)?;
        if need == 0 {
            continue;
        }
        let mut vecs = Vec::new();
        for (i, fc) in copies {
            for g in &homs[*i][j] {
                vecs.push(g.after(fc)?.flatten());
            }
        }
        let len = Morph::zero(w, t).flatten().len();
        if stack(&vecs, len, f).rank() < need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Elements `κ ∈ End(U)` with `κ ∘ f = 0`, as morphisms.
fn annihilator(end: &EndAlgebra, f: &Morph) -> Result<Vec<Morph>> {
    let field = f.source().field();
    let cols = end.basis.iter().map(|b| Ok(b.after(f)?.flatten())).collect::<Result<Vec<_>>>()?;
    let len = Morph::zero(f.source(), f.target()).flatten().len();
    let sys = stack(&cols, len, field);
    Ok(sys.kernel_basis().iter().map(|c| end.morph(c)).collect())
}

/// Whether every element of `ks` lies in `rad End(U)`.
fn inside_radical(end: &EndAlgebra, ks: &[Morph]) -> Result<bool> {
    if ks.is_empty() {
        return Ok(true);
    }
    let rad = end.matrices.radical()?;
    let f = end.module.field();
    let span = stack(&rad.basis, end.basis.len(), f);
    for k in ks {
        let c = end.coords(k).ok_or_else(|| Error::invariant("annihilator left End"))?;
        let inside = if span.cols() == 0 { c.iter().all(|&x| x == 0) } else { span.solve(&c)?.is_some() };
        if !inside {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A non-nilpotent element of the left ideal generated by `ks`.
fn non_nilpotent(end: &EndAlgebra, ks: &[Morph]) -> Option<Morph> {
    let nilp = |g: &Morph| g.total_matrix().is_nilpotent();
    if let Some(k) = ks.iter().find(|k| !nilp(k)) {
        return Some(k.clone());
    }
    for a in &end.basis {
        for k in ks {
            let g = a.after(k).ok()?;
            if !nilp(&g) {
                return Some(g);
            }
        }
    }
    let params = end.module.algebra().params();
    let p = end.module.field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed ^ 0xa99);
    for _ in 0..params.random_tries {
        let alpha: Vec<u32> = (0..end.basis.len()).map(|_| rng.gen_range(0..p)).collect();
        let beta: Vec<u32> = (0..ks.len()).map(|_| rng.gen_range(0..p)).collect();
        let a = end.morph(&alpha);
        let k = Morph::combination(&end.module, &end.module, ks, &beta);
        let g = a.after(&k).ok()?;
        if !nilp(&g) {
            return Some(g);
        }
    }
    None
}

/// Minimal left `add(targets)`-approximation of `w`.
///
/// `targets` must list every indecomposable of the subcategory. The universal
/// map into `⊕ t^{dim Hom(w, t)}` is pruned summand by summand while it
/// stays an approximation; any remaining non-minimality is split off along a
/// Fitting decomposition. The result carries the radical certificate.
pub fn minimal_left_approximation(w: &Rep, targets: &[Rep]) -> Result<Approximation> {
    for t in targets {
        w.same_algebra(t)?;
    }
    let homs = targets
        .iter()
        .map(|s| targets.iter().map(|t| hom_basis(s, t)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let mut copies: Vec<(usize, Morph)> = Vec::new();
    for (i, t) in targets.iter().enumerate() {
        for h in hom_basis(w, t)? {
            copies.push((i, h));
        }
    }
    let mut k = 0;
    while k < copies.len() {
        let mut trial = copies.clone();
        trial.remove(k);
        if factors_everything(w, targets, &homs, &trial)? {
            copies = trial;
        } else {
            k += 1;
        }
    }
    let parts: Vec<Morph> = copies.into_iter().map(|(_, h)| h).collect();
    let mut map = if parts.is_empty() { Morph::zero(w, &Rep::zero(w.algebra())) } else { Morph::columns(w, &parts)? };
    loop {
        let end = end_algebra(map.target())?;
        let ks = annihilator(&end, &map)?;
        if inside_radical(&end, &ks)? {
            break;
        }
        let kappa = non_nilpotent(&end, &ks)
            .ok_or_else(|| Error::Undecided("no non-nilpotent element in the annihilator".into()))?;
        let power = kappa.pow(map.target().total_dim());
        let kit = morphism_kit(&power)?;
        map = map.corestrict(&kit.kernel_incl)?;
    }
    let approx = Approximation { source: w.clone(), target: map.target().clone(), map };
    check_approximation(targets, &approx)?;
    Ok(approx)
}

/// Verifies that every map from the source into a target factors through
/// `approx.map` and that `{ψ : ψ ∘ map = 0} ⊆ rad End(target)`.
pub fn check_approximation(targets: &[Rep], approx: &Approximation) -> Result<()> {
    let (w, u, f) = (&approx.source, &approx.target, &approx.map);
    let field = w.field();
    for t in targets {
        let need = hom_basis(w, t)?;
        if need.is_empty() {
            continue;
        }
        let through = hom_basis(u, t)?.iter().map(|g| Ok(g.after(f)?.flatten())).collect::<Result<Vec<_>>>()?;
        let len = need[0].flatten().len();
        let span = stack(&through, len, field);
        for h in &need {
            if span.cols() == 0 || span.solve(&h.flatten())?.is_none() {
                return Err(Error::invariant("a map into the subcategory does not factor through the approximation"));
            }
        }
    }
    let end = end_algebra(u)?;
    let ks = annihilator(&end, f)?;
    if !inside_radical(&end, &ks)? {
        return Err(Error::invariant("approximation is not left minimal"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{PathAlgebra, Quiver};
    use crate::linalg::PrimeField;
    use crate::rep::{is_isomorphic, projective, simple};

    #[test]
    fn membership_examples() {
        let a = PathAlgebra::new(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), PrimeField::gf2());
        let (s1, s2, p2) = (simple(&a, 0), simple(&a, 1), projective(&a, 1));
        assert!(gen_membership(&s2, &p2).unwrap());
        assert!(!gen_membership(&s1, &p2).unwrap());
        assert!(gen_membership(&p2, &p2).unwrap());
    }

    #[test]
    fn approximation_of_p2_by_s2() {
        let a = PathAlgebra::new(Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap(), PrimeField::gf2());
        let (s2, p2) = (simple(&a, 1), projective(&a, 1));
        let ap = minimal_left_approximation(&p2, std::slice::from_ref(&s2)).unwrap();
        assert!(is_isomorphic(&ap.target, &s2).unwrap().is_some());
        assert!(ap.map.is_surjective());
        let ap = minimal_left_approximation(&p2, &[s2.clone(), p2.clone()]).unwrap();
        assert!(is_isomorphic(&ap.target, &p2).unwrap().is_some());
        assert!(ap.map.is_iso());
    }
}
