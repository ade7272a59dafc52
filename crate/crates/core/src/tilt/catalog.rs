use std::cmp::Reverse;
use std::sync::Arc;

use crate::algebra::PathAlgebra;
use crate::error::{Error, Result};
use crate::rep::{self, decompose, hom_dim, is_isomorphic, module_name, Rep};

/// Default bound on the number of indecomposables before giving up.
pub const DEFAULT_CAP: usize = 200;

/// Largest entry of a positive root of a Dynkin diagram (reached in E8).
/// A larger entry in a preprojective module proves infinite type.
const DYNKIN_ROOT_BOUND: usize = 6;

/// All indecomposables of a representation-finite path algebra with their
/// Hom, Ext and τ tables. Modules built from them are multisets of indices.
#[derive(Clone, Debug)]
pub struct Catalog {
    alg: Arc<PathAlgebra>,
    indec: Vec<Rep>,
    names: Vec<String>,
    hom: Vec<Vec<usize>>,
    ext: Vec<Vec<usize>>,
    tau: Vec<Option<usize>>,
    tau_inv: Vec<Option<usize>>,
    projectives: Vec<usize>,
    injectives: Vec<usize>,
    simples: Vec<usize>,
}

fn catalog_key(r: &Rep) -> (usize, Reverse<Vec<usize>>) {
    (r.total_dim(), Reverse(r.dims().to_vec()))
}

/// Index of `m` in `list`, comparing dimension vectors first.
fn find_iso(list: &[Rep], m: &Rep) -> Result<Option<usize>> {
    for (k, r) in list.iter().enumerate() {
        if r.dims() == m.dims() && is_isomorphic(r, m)?.is_some() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

impl Catalog {
    /// The τ⁻¹-orbits of the indecomposable projectives. For a path algebra
    /// these exhaust the indecomposables exactly when it is of finite type;
    /// otherwise the orbit never closes and `cap` is hit.
    pub fn new(alg: &Arc<PathAlgebra>, cap: usize) -> Result<Self> {
        let n = alg.vertex_count();
        let mut found: Vec<Rep> = Vec::new();
        let mut queue: Vec<Rep> = (0..n).map(|i| rep::projective(alg, i)).collect();
        queue.reverse();
        while let Some(m) = queue.pop() {
            if m.is_zero() || find_iso(&found, &m)?.is_some() {
                continue;
            }
            if let Some(d) = m.dims().iter().find(|&&d| d > DYNKIN_ROOT_BOUND) {
                return Err(Error::RepresentationInfinite {
                    cap,
                    detail: format!("an indecomposable has dimension {d} at a vertex, beyond any Dynkin root"),
                });
            }
            if found.len() >= cap {
                return Err(Error::RepresentationInfinite {
                    cap,
                    detail: format!("more than {cap} indecomposables in the preprojective component"),
                });
            }
            let next = rep::tau_inverse(&m)?;
            found.push(m);
            queue.insert(0, next);
        }
        found.sort_by_key(catalog_key);
        Self::from_indecomposables(alg, found)
    }

    fn from_indecomposables(alg: &Arc<PathAlgebra>, indec: Vec<Rep>) -> Result<Self> {
        let k = indec.len();
        let n = alg.vertex_count();
        let names = indec.iter().map(module_name).collect::<Result<Vec<_>>>()?;
        let mut hom = vec![vec![0; k]; k];
        let mut ext = vec![vec![0; k]; k];
        for i in 0..k {
            for j in 0..k {
                hom[i][j] = hom_dim(&indec[i], &indec[j])?;
                ext[i][j] = rep::ext1_dim(&indec[i], &indec[j])?;
            }
        }
        let locate = |m: &Rep| -> Result<Option<usize>> {
            if m.is_zero() {
                return Ok(None);
            }
            find_iso(&indec, m)?.map(Some).ok_or_else(|| Error::invariant("τ left the catalog"))
        };
        let mut tau = Vec::with_capacity(k);
        let mut tau_inv = Vec::with_capacity(k);
        for m in &indec {
            tau.push(locate(&rep::tau(m)?)?);
            tau_inv.push(locate(&rep::tau_inverse(m)?)?);
        }
        let pick = |make: fn(&Arc<PathAlgebra>, usize) -> Rep| -> Result<Vec<usize>> {
            (0..n)
                .map(|i| find_iso(&indec, &make(alg, i))?.ok_or_else(|| Error::invariant("standard module missing")))
                .collect()
        };
        let projectives = pick(rep::projective)?;
        let injectives = pick(rep::injective)?;
        let simples = pick(rep::simple)?;
        Ok(Catalog { alg: alg.clone(), indec, names, hom, ext, tau, tau_inv, projectives, injectives, simples })
    }

    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.alg
    }

    pub fn len(&self) -> usize {
        self.indec.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indec.is_empty()
    }

    pub fn modules(&self) -> &[Rep] {
        &self.indec
    }

    pub fn module(&self, i: usize) -> &Rep {
        &self.indec[i]
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn hom(&self, i: usize, j: usize) -> usize {
        self.hom[i][j]
    }

    pub fn ext(&self, i: usize, j: usize) -> usize {
        self.ext[i][j]
    }

    pub fn tau(&self, i: usize) -> Option<usize> {
        self.tau[i]
    }

    pub fn tau_inverse(&self, i: usize) -> Option<usize> {
        self.tau_inv[i]
    }

    pub fn projective(&self, v: usize) -> usize {
        self.projectives[v]
    }

    pub fn injective(&self, v: usize) -> usize {
        self.injectives[v]
    }

    pub fn simple(&self, v: usize) -> usize {
        self.simples[v]
    }

    /// Catalog index of an indecomposable.
    pub fn index_of(&self, m: &Rep) -> Result<usize> {
        m.same_algebra(&self.indec[0])?;
        find_iso(&self.indec, m)?.ok_or_else(|| Error::invariant("module is not in the catalog"))
    }

    /// Multiset of catalog indices of the summands of `m`, sorted.
    pub fn indices_of(&self, m: &Rep) -> Result<Vec<usize>> {
        let mut out = decompose(m)?.iter().map(|s| self.index_of(s)).collect::<Result<Vec<_>>>()?;
        out.sort_unstable();
        Ok(out)
    }

    /// `⊕ M_i` over the given indices.
    pub fn sum(&self, idx: &[usize]) -> Rep {
        Rep::direct_sum_all(&self.alg, idx.iter().map(|&i| &self.indec[i])).expect("same algebra")
    }

    /// Name of `⊕ M_i`, summands joined by `⊕`.
    pub fn sum_name(&self, idx: &[usize]) -> String {
        if idx.is_empty() {
            return "0".into();
        }
        let mut sorted = idx.to_vec();
        sorted.sort_unstable();
        sorted.iter().map(|&i| self.names[i].as_str()).collect::<Vec<_>>().join("⊕")
    }

    /// `dim Hom(⊕ M_a, ⊕ M_b)`.
    pub fn hom_sum(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter().map(|&i| b.iter().map(|&j| self.hom[i][j]).sum::<usize>()).sum()
    }

    /// Whether `Hom(M_i, τ M_j) = 0`.
    pub fn hom_to_tau_vanishes(&self, i: usize, j: usize) -> bool {
        self.tau[j].is_none_or(|t| self.hom[i][t] == 0)
    }

    /// Dimension vector of `⊕ M_i`.
    pub fn dims_of(&self, idx: &[usize]) -> Vec<usize> {
        let mut d = vec![0; self.alg.vertex_count()];
        for &i in idx {
            for (x, y) in d.iter_mut().zip(self.indec[i].dims()) {
                *x += y;
            }
        }
        d
    }

    /// Whether `M_i` is in `Fac(⊕ M_g)`.
    pub fn in_fac(&self, i: usize, gens: &[usize]) -> Result<bool> {
        if gens.is_empty() {
            return Ok(false);
        }
        rep::gen_membership(&self.indec[i], &self.sum(gens))
    }
}
