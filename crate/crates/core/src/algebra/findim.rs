//! Abstract finite-dimensional algebras and their radicals.
//!
//! [`FinDimAlgebra`] is an algebra given by structure constants.
//! [`MatrixAlgebra`] is a unital subalgebra of `End(k^n)` given by a basis of
//! matrices; every radical, idempotent and locality computation happens
//! there. A `FinDimAlgebra` reaches it through its left regular
//! representation and an endomorphism ring `End(M)` through block-diagonal
//! matrices on the underlying space of `M`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::path::SearchParams;
use crate::error::{Error, Result};
use crate::linalg::{Mat, PrimeField};

/// `(dim, dim rad, number of simple modules)` of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraInvariants {
    pub dim: usize,
    pub radical_dim: usize,
    pub num_simples: usize,
}

/// Algebra with basis `b_0..b_{d-1}` and products `b_i b_j = sum_k c_ijk b_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinDimAlgebra {
    field: PrimeField,
    labels: Vec<String>,
    table: Vec<Vec<Vec<u32>>>,
    unit: Vec<u32>,
}

impl FinDimAlgebra {
    /// Validates associativity and the unit on all basis triples.
    pub fn new(field: PrimeField, labels: Vec<String>, table: Vec<Vec<Vec<u32>>>, unit: Vec<u32>) -> Result<Self> {
        let d = labels.len();
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|c| c.len() != d)) || unit.len() != d {
            return Err(Error::usage("structure constants do not match the basis size"));
        }
        let alg = FinDimAlgebra { field, labels, table, unit };
        for i in 0..d {
            let bi = alg.basis_vector(i);
            if alg.mul(&alg.unit, &bi) != bi || alg.mul(&bi, &alg.unit) != bi {
                return Err(Error::usage(format!("unit law fails on basis element {}", alg.labels[i])));
            }
            for j in 0..d {
                let bij = &alg.table[i][j];
                for k in 0..d {
                    let left = alg.mul(bij, &alg.basis_vector(k));
                    let right = alg.mul(&bi, &alg.table[j][k]);
                    if left != right {
                        return Err(Error::usage(format!(
                            "associativity fails on ({}, {}, {})",
                            alg.labels[i], alg.labels[j], alg.labels[k]
                        )));
                    }
                }
            }
        }
        Ok(alg)
    }

    /// The field itself as a one-dimensional algebra.
    pub fn ground_field(field: PrimeField) -> Self {
        FinDimAlgebra { field, labels: vec!["1".into()], table: vec![vec![vec![1]]], unit: vec![1] }
    }

    pub fn zero(field: PrimeField) -> Self {
        FinDimAlgebra { field, labels: vec![], table: vec![], unit: vec![] }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &[u32] {
        &self.unit
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field;
        let d = self.dim();
        let mut out = vec![0u32; d];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for (o, &t) in out.iter_mut().zip(&self.table[i][j]) {
                    if t != 0 {
                        *o = f.add(*o, f.mul(c, t));
                    }
                }
            }
        }
        out
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        e.len() == self.dim() && self.mul(e, e) == e
    }

    /// Matrix of `y -> x y` in the structure basis.
    pub fn left_mul_matrix(&self, x: &[u32]) -> Mat {
        let d = self.dim();
        let cols: Vec<Vec<u32>> = (0..d).map(|j| self.mul(x, &self.basis_vector(j))).collect();
        Mat::from_columns(self.field, d, &cols)
    }

    /// Left regular representation; coordinates agree with the structure basis.
    pub fn matrix_algebra(&self, params: SearchParams) -> MatrixAlgebra {
        let basis = (0..self.dim()).map(|i| self.left_mul_matrix(&self.basis_vector(i))).collect();
        MatrixAlgebra::new(self.field, self.dim(), basis, params).expect("regular representation is faithful")
    }

    pub fn invariants(&self, params: SearchParams) -> Result<AlgebraInvariants> {
        self.matrix_algebra(params).invariants()
    }

    /// `F / F e F`.
    pub fn quotient_by_idempotent_ideal(&self, e: &[u32]) -> Result<FinDimAlgebra> {
        if !self.is_idempotent(e) {
            return Err(Error::usage("element is not an idempotent"));
        }
        let d = self.dim();
        let mut gens = Vec::new();
        for i in 0..d {
            let be = self.mul(&self.basis_vector(i), e);
            for j in 0..d {
                gens.push(self.mul(&be, &self.basis_vector(j)));
            }
        }
        let ideal = Mat::from_columns(self.field, d, &gens).column_space();
        let keep = ideal.complement_indices();
        if keep.is_empty() {
            return Ok(FinDimAlgebra::zero(self.field));
        }
        let mut change = ideal.clone();
        for &q in &keep {
            change = change.hstack(&Mat::column_vector(self.field, &self.basis_vector(q)));
        }
        let inv = change.inverse().expect("ideal plus complement spans");
        let offset = ideal.cols();
        let project = |x: &[u32]| -> Vec<u32> {
            let c = inv.mul_vec(x);
            c[offset..].to_vec()
        };
        let labels = keep.iter().map(|&q| self.labels[q].clone()).collect();
        let table = keep.iter().map(|&q| keep.iter().map(|&r| project(&self.table[q][r])).collect()).collect();
        FinDimAlgebra::new(self.field, labels, table, project(&self.unit))
    }
}

/// Radical data of a [`MatrixAlgebra`].
#[derive(Clone, Debug)]
pub struct Radical {
    /// Basis of the Jacobson radical, in algebra coordinates.
    pub basis: Vec<Vec<u32>>,
    /// A complete set of primitive orthogonal idempotents.
    pub idempotents: Vec<Mat>,
    pub num_simples: usize,
}

/// A local corner `eAe = k e + R` with `R` nilpotent.
#[derive(Clone, Debug)]
struct LocalCorner {
    /// Columns: coordinates of `e`, then of a basis of `R`.
    frame: Mat,
}

/// Unital subalgebra of `n x n` matrices given by a linearly independent basis.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    field: PrimeField,
    n: usize,
    basis: Vec<Mat>,
    pivot_rows: Vec<usize>,
    pivot_inv: Mat,
    params: SearchParams,
}

impl MatrixAlgebra {
    pub fn new(field: PrimeField, n: usize, basis: Vec<Mat>, params: SearchParams) -> Result<Self> {
        if basis.iter().any(|b| b.shape() != (n, n)) {
            return Err(Error::usage("basis matrices must be square of the ambient size"));
        }
        let stacked = stack_vecs(field, n, &basis);
        let (_, pivot_rows) = stacked.transpose().rref();
        if pivot_rows.len() != basis.len() {
            return Err(Error::usage("basis matrices are linearly dependent"));
        }
        let pivot_inv = stacked.select_rows(&pivot_rows).inverse().expect("pivot rows are independent");
        Ok(MatrixAlgebra { field, n, basis, pivot_rows, pivot_inv, params })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn basis(&self) -> &[Mat] {
        &self.basis
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn identity(&self) -> Mat {
        Mat::identity(self.field, self.n)
    }

    pub fn element(&self, coords: &[u32]) -> Mat {
        let mut acc = Mat::zeros(self.field, self.n, self.n);
        for (b, &c) in self.basis.iter().zip(coords) {
            if c != 0 {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }

    /// Coordinates of `x`, or `None` when `x` is not in the algebra.
    pub fn coords(&self, x: &Mat) -> Option<Vec<u32>> {
        let v: Vec<u32> = self.pivot_rows.iter().map(|&r| x.as_slice()[r]).collect();
        let c = self.pivot_inv.mul_vec(&v);
        (self.element(&c) == *x).then_some(c)
    }

    fn coords_of(&self, x: &Mat) -> Result<Vec<u32>> {
        self.coords(x).ok_or_else(|| Error::invariant("product left the algebra"))
    }

    /// Basis of `e A f`.
    fn corner_basis(&self, e: &Mat, f: &Mat) -> Vec<Mat> {
        let elems: Vec<Mat> = self.basis.iter().map(|b| e.mul(b).mul(f)).collect();
        span_basis(self.field, self.n, &elems)
    }

    fn lambdas(&self) -> Vec<u32> {
        let p = self.field.p();
        if p <= 16 {
            (0..p).collect()
        } else {
            vec![0, 1, p - 1]
        }
    }

    /// A non-nilpotent element of `eAe` that is not invertible there.
    fn find_splitter(&self, e: &Mat) -> Option<Mat> {
        let rank_e = e.rank();
        let corner = self.corner_basis(e, e);
        if corner.len() <= 1 {
            return None;
        }
        let splits = |phi: &Mat| !phi.is_nilpotent() && phi.rank() < rank_e;
        let lambdas = self.lambdas();
        for c in &corner {
            for &l in &lambdas {
                let phi = c.sub(&e.scale(l));
                if splits(&phi) {
                    return Some(phi);
                }
            }
        }
        for (i, a) in corner.iter().enumerate() {
            for b in &corner[i + 1..] {
                for phi in [a.add(b), a.mul(b), b.mul(a)] {
                    for &l in &lambdas {
                        let shifted = phi.sub(&e.scale(l));
                        if splits(&shifted) {
                            return Some(shifted);
                        }
                    }
                }
            }
        }
        let mut rng =
            ChaCha8Rng::seed_from_u64(self.params.seed ^ (self.n as u64).wrapping_mul(0x9e37_79b9) ^ rank_e as u64);
        let p = self.field.p();
        for _ in 0..self.params.random_tries {
            let mut phi = Mat::zeros(self.field, self.n, self.n);
            for c in &corner {
                phi = phi.add(&c.scale(rng.gen_range(0..p)));
            }
            let shifted = phi.sub(&e.scale(rng.gen_range(0..p)));
            if splits(&shifted) {
                return Some(shifted);
            }
        }
        None
    }

    /// Projection onto the Fitting image of `phi` along its Fitting kernel.
    fn fitting_projection(&self, phi: &Mat) -> Mat {
        let psi = phi.pow(self.n);
        let image = psi.column_space();
        let kernel = psi.kernel_mat();
        let frame = image.hstack(&kernel);
        let inv = frame.inverse().expect("Fitting decomposition spans the space");
        let mut keep = Mat::zeros(self.field, self.n, self.n);
        for i in 0..image.cols() {
            keep.set(i, i, 1);
        }
        frame.mul(&keep).mul(&inv)
    }

    /// A complete set of primitive orthogonal idempotents summing to 1.
    pub fn primitive_idempotents(&self) -> Result<Vec<Mat>> {
        if self.n == 0 || self.dim() == 0 {
            return Ok(vec![]);
        }
        let mut todo = vec![self.identity()];
        let mut done = Vec::new();
        while let Some(e) = todo.pop() {
            match self.find_splitter(&e) {
                Some(phi) => {
                    let p = self.fitting_projection(&phi);
                    if self.coords(&p).is_none() {
                        return Err(Error::invariant("Fitting idempotent is not in the algebra"));
                    }
                    let q = e.sub(&p);
                    todo.push(q);
                    todo.push(p);
                }
                None => done.push(e),
            }
        }
        Ok(done)
    }

    /// Certifies `eAe = k e + R` with `R` a nilpotent ideal.
    fn local_corner(&self, e: &Mat) -> Result<LocalCorner> {
        let f = self.field;
        let corner = self.corner_basis(e, e);
        let rank_e = (e.rank() as u64 % f.p() as u64) as u32;
        let mut shifted = Vec::with_capacity(corner.len());
        for c in &corner {
            let mut found = None;
            if rank_e != 0 {
                let tr = (0..self.n).fold(0, |acc, i| f.add(acc, c.get(i, i)));
                let l = f.mul(tr, f.inv(rank_e));
                let r = c.sub(&e.scale(l));
                if r.is_nilpotent() {
                    found = Some(r);
                }
            }
            if found.is_none() && f.p() <= 1024 {
                found = (0..f.p()).map(|l| c.sub(&e.scale(l))).find(|r| r.is_nilpotent());
            }
            match found {
                Some(r) => shifted.push(r),
                None => {
                    return Err(Error::Undecided(
                        "corner algebra is neither split nor certified local (non-split residue field?)".into(),
                    ))
                }
            }
        }
        let rad = span_basis(f, self.n, &shifted);
        if rad.len() + 1 != corner.len() || !subspace_nilpotent(f, self.n, &rad) {
            return Err(Error::Undecided("could not certify a local corner".into()));
        }
        let mut cols = vec![self.coords_of(e)?];
        for r in &rad {
            cols.push(self.coords_of(r)?);
        }
        let frame = Mat::from_columns(f, self.dim(), &cols);
        Ok(LocalCorner { frame })
    }

    /// Residue of `x` in `eAe / rad(eAe) = k`.
    fn residue(&self, corner: &LocalCorner, x: &Mat) -> Result<u32> {
        let c = self.coords_of(x)?;
        let t = corner.frame.solve(&c)?.ok_or_else(|| Error::invariant("element not in its corner"))?;
        Ok(t[0])
    }

    pub fn radical(&self) -> Result<Radical> {
        let idempotents = self.primitive_idempotents()?;
        let corners = idempotents.iter().map(|e| self.local_corner(e)).collect::<Result<Vec<_>>>()?;
        let m = idempotents.len();
        let mut related = vec![vec![false; m]; m];
        let mut rad = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let xs = self.corner_basis(&idempotents[i], &idempotents[j]);
                if xs.is_empty() {
                    continue;
                }
                let ys = self.corner_basis(&idempotents[j], &idempotents[i]);
                let mut values = Mat::zeros(self.field, ys.len(), xs.len());
                for (t, y) in ys.iter().enumerate() {
                    for (s, x) in xs.iter().enumerate() {
                        values.set(t, s, self.residue(&corners[i], &x.mul(y))?);
                    }
                }
                related[i][j] = !values.is_zero();
                for k in values.kernel_basis() {
                    let mut acc = Mat::zeros(self.field, self.n, self.n);
                    for (x, &c) in xs.iter().zip(&k) {
                        acc = acc.add(&x.scale(c));
                    }
                    rad.push(acc);
                }
            }
        }
        let rad = span_basis(self.field, self.n, &rad);
        for r in &rad {
            for b in &self.basis {
                for prod in [b.mul(r), r.mul(b)] {
                    if !in_span(self.field, self.n, &rad, &prod) {
                        return Err(Error::invariant("computed radical is not a two-sided ideal"));
                    }
                }
            }
        }
        if !subspace_nilpotent(self.field, self.n, &rad) {
            return Err(Error::invariant("computed radical is not nilpotent"));
        }
        let num_simples = count_classes(&related);
        let basis = rad.iter().map(|r| self.coords_of(r)).collect::<Result<Vec<_>>>()?;
        Ok(Radical { basis, idempotents, num_simples })
    }

    pub fn invariants(&self) -> Result<AlgebraInvariants> {
        if self.dim() == 0 || self.n == 0 {
            return Ok(AlgebraInvariants { dim: 0, radical_dim: 0, num_simples: 0 });
        }
        let r = self.radical()?;
        Ok(AlgebraInvariants { dim: self.dim(), radical_dim: r.basis.len(), num_simples: r.num_simples })
    }

    /// Whether the algebra is local, i.e. `A = k 1 + rad A`.
    pub fn is_local(&self) -> Result<bool> {
        if self.dim() == 0 {
            return Ok(false);
        }
        let idem = self.primitive_idempotents()?;
        if idem.len() != 1 {
            return Ok(false);
        }
        self.local_corner(&idem[0])?;
        Ok(true)
    }
}

/// Whether `x` is a combination of `span`.
pub(crate) fn in_span(field: PrimeField, n: usize, span: &[Mat], x: &Mat) -> bool {
    if x.is_zero() {
        return true;
    }
    let stacked = stack_vecs(field, n, span);
    let target: Vec<u32> = x.as_slice().to_vec();
    matches!(stacked.solve(&target), Ok(Some(_)))
}

fn stack_vecs(field: PrimeField, n: usize, mats: &[Mat]) -> Mat {
    let cols: Vec<Vec<u32>> = mats.iter().map(|m| m.as_slice().to_vec()).collect();
    Mat::from_columns(field, n * n, &cols)
}

/// A linearly independent subset of `elems` with the same span.
pub(crate) fn span_basis(field: PrimeField, n: usize, elems: &[Mat]) -> Vec<Mat> {
    if elems.is_empty() {
        return vec![];
    }
    let (_, pivots) = stack_vecs(field, n, elems).rref();
    pivots.into_iter().map(|k| elems[k].clone()).collect()
}

/// Whether the (multiplicatively generated) subspace power `R^k` reaches zero.
fn subspace_nilpotent(field: PrimeField, n: usize, rad: &[Mat]) -> bool {
    let mut power = rad.to_vec();
    for _ in 0..=n {
        if power.is_empty() {
            return true;
        }
        let prods: Vec<Mat> = power.iter().flat_map(|p| rad.iter().map(move |r| p.mul(r))).collect();
        power = span_basis(field, n, &prods);
    }
    power.is_empty()
}

fn count_classes(related: &[Vec<bool>]) -> usize {
    let m = related.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for (i, row) in related.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..m).filter(|&i| find(&mut parent, i) == i).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::path::PathAlgebra;
    use crate::algebra::quiver::Quiver;

    fn params() -> SearchParams {
        SearchParams::default()
    }

    #[test]
    fn ground_field_invariants() {
        let k = FinDimAlgebra::ground_field(PrimeField::gf2());
        assert_eq!(k.invariants(params()).unwrap(), AlgebraInvariants { dim: 1, radical_dim: 0, num_simples: 1 });
    }

    #[test]
    fn a2_path_algebra_invariants() {
        let q = Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap();
        let a = PathAlgebra::new(q, PrimeField::gf2()).to_findim();
        assert_eq!(a.invariants(params()).unwrap(), AlgebraInvariants { dim: 3, radical_dim: 1, num_simples: 2 });
    }

    #[test]
    fn full_matrix_algebra_is_simple() {
        for p in [2, 3] {
            let f = PrimeField::new(p).unwrap();
            let basis: Vec<Mat> = (0..4).map(|k| Mat::from_fn(f, 2, 2, |i, j| u32::from(i * 2 + j == k))).collect();
            let m = MatrixAlgebra::new(f, 2, basis, params()).unwrap();
            let inv = m.invariants().unwrap();
            assert_eq!(inv, AlgebraInvariants { dim: 4, radical_dim: 0, num_simples: 1 });
            assert!(!m.is_local().unwrap());
        }
    }

    #[test]
    fn quotient_by_trivial_idempotents() {
        let q = Quiver::new(&["1", "2"], &[("a", "2", "1")]).unwrap();
        let a = PathAlgebra::new(q, PrimeField::gf2()).to_findim();
        let one = a.unit().to_vec();
        assert_eq!(a.quotient_by_idempotent_ideal(&one).unwrap().dim(), 0);
        let zero = vec![0; a.dim()];
        assert_eq!(a.quotient_by_idempotent_ideal(&zero).unwrap(), a);
        let e1 = a.basis_vector(0);
        let quot = a.quotient_by_idempotent_ideal(&e1).unwrap();
        assert_eq!(quot.invariants(params()).unwrap(), AlgebraInvariants { dim: 1, radical_dim: 0, num_simples: 1 });
        assert!(a.quotient_by_idempotent_ideal(&a.basis_vector(2)).is_err());
    }

    #[test]
    fn rejects_non_associative_table() {
        let f = PrimeField::gf2();
        // b*b = 1, 1 as unit, but declare b*1 = 0.
        let table = vec![vec![vec![1, 0], vec![0, 1]], vec![vec![0, 0], vec![1, 0]]];
        assert!(FinDimAlgebra::new(f, vec!["1".into(), "b".into()], table, vec![1, 0]).is_err());
    }
}
