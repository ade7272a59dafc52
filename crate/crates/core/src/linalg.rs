//! Dense linear algebra over a prime field.
//!
//! Everything downstream (Hom spaces, kernels of representation maps,
//! structure constants of endomorphism algebras) reduces to the handful of
//! routines here: row reduction, kernels, images and linear solves. Results
//! are deterministic: the same input always produces the same bases.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field with `p` elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Largest modulus accepted. Products of two residues must fit in a `u64`.
    pub const MAX_MODULUS: u32 = 1 << 31;

    pub fn new(p: u32) -> Result<Self> {
        if !(2..=Self::MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::Usage(format!("field modulus {p} is not a supported prime")));
        }
        Ok(PrimeField { p })
    }

    /// The two-element field, the default coefficient field.
    pub fn gf2() -> Self {
        PrimeField { p: 2 }
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    pub fn pow(self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1u32 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        Self::gf2()
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A dense row-major matrix over a prime field.
///
/// `0 x n` and `n x 0` matrices are legal and behave as zero maps.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: PrimeField,
    data: Vec<u32>,
}

/// Output of [`Mat::rref_kit`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefKit {
    pub rank: usize,
    /// Pivot column of each nonzero row of the reduced form.
    pub pivots: Vec<usize>,
    /// Basis of the right kernel, one vector per free column.
    pub kernel_basis: Vec<Vec<u32>>,
    /// Echelon basis of the column space.
    pub image_basis: Vec<Vec<u32>>,
}

impl Mat {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, field, data: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    /// Builds a matrix from integer rows, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(x);
            }
        }
        m
    }

    pub fn from_fn(field: PrimeField, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.p();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, &x) in col.iter().enumerate() {
                m.data[i * m.cols + j] = x % field.p();
            }
        }
        m
    }

    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Self::from_columns(field, v.len(), &[v.to_vec()])
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: u32) {
        self.data[i * self.cols + j] = x % self.field.p();
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.data
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let f = self.field;
        let p = f.p() as u64;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d = ((*d as u64 + a * b as u64) % p) as u32;
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0u64;
                for (j, &x) in v.iter().enumerate() {
                    acc += self.get(i, j) as u64 * x as u64;
                    acc %= f.p() as u64;
                }
                acc as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in sum");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect();
        Mat { data, ..*self }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!(self.shape(), other.shape(), "shape mismatch in difference");
        let f = self.field;
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| f.sub(a, b)).collect();
        Mat { data, ..*self }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Mat { data, ..*self }
    }

    pub fn pow(&self, mut e: usize) -> Mat {
        assert!(self.is_square());
        let mut acc = Mat::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.rows.max(1)).is_zero()
    }

    /// `[self | other]`
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        })
    }

    /// `[self ; other]`
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, field: self.field, data }
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.paste(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn paste(&mut self, r0: usize, c0: usize, block: &Mat) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = block.get(i, j);
            }
        }
    }

    pub fn submatrix(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Mat {
        Mat::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn select_columns(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c));
            for j in c..m.cols {
                let x = m.get(r, j);
                m.data[r * m.cols + j] = f.mul(x, inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rank, kernel basis and column-space basis in one pass.
    pub fn rref_kit(&self) -> RrefKit {
        let (reduced, pivots) = self.rref();
        let kernel_basis = kernel_from_rref(&reduced, &pivots);
        let (t_reduced, t_pivots) = self.transpose().rref();
        let image_basis = (0..t_pivots.len()).map(|i| t_reduced.row(i).to_vec()).collect();
        RrefKit { rank: pivots.len(), pivots, kernel_basis, image_basis }
    }

    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let (reduced, pivots) = self.rref();
        kernel_from_rref(&reduced, &pivots)
    }

    /// Kernel basis as the columns of a `cols x k` matrix.
    pub fn kernel_mat(&self) -> Mat {
        Mat::from_columns(self.field, self.cols, &self.kernel_basis())
    }

    /// Basis of the left kernel `{y : y^T M = 0}` as rows of a `k x rows` matrix.
    pub fn left_kernel_rows(&self) -> Mat {
        self.transpose().kernel_mat().transpose()
    }

    /// A basis of the column space taken from the pivot columns of `self`.
    pub fn column_space(&self) -> Mat {
        let (_, pivots) = self.rref();
        self.select_columns(&pivots)
    }

    /// One solution of `self * x = b`, free variables set to zero.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::Usage(format!(
                "right-hand side has length {} but matrix has {} rows",
                b.len(),
                self.rows
            )));
        }
        let rhs = Mat::column_vector(self.field, b);
        Ok(self.solve_mat(&rhs)?.map(|x| x.column(0)))
    }

    /// One solution `X` of `self * X = rhs`, or `None` when inconsistent.
    pub fn solve_mat(&self, rhs: &Mat) -> Result<Option<Mat>> {
        if rhs.rows != self.rows {
            return Err(Error::Usage(format!("right-hand side has {} rows but matrix has {}", rhs.rows, self.rows)));
        }
        let aug = self.hstack(rhs);
        let (reduced, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Mat::zeros(self.field, self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.data[c * rhs.cols + j] = reduced.get(r, self.cols + j);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if !self.is_square() {
            return None;
        }
        let id = Mat::identity(self.field, self.rows);
        let x = self.solve_mat(&id).ok().flatten()?;
        (self.rank() == self.rows).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Extends the column space of `self` to the whole of `k^rows` using
    /// standard basis vectors; returns the indices of the added vectors.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut current = self.column_space();
        let mut added = Vec::new();
        for i in 0..self.rows {
            let mut e = vec![0; self.rows];
            e[i] = 1;
            let candidate = current.hstack(&Mat::column_vector(self.field, &e));
            if candidate.rank() > current.cols {
                current = candidate;
                added.push(i);
            }
        }
        added
    }
}

fn kernel_from_rref(reduced: &Mat, pivots: &[usize]) -> Vec<Vec<u32>> {
    let f = reduced.field;
    let n = reduced.cols;
    let mut is_pivot = vec![false; n];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; n];
        v[free] = 1 % f.p();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = f.neg(reduced.get(r, free));
        }
        basis.push(v);
    }
    basis
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::gf2()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(4).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn identity_kit() {
        let kit = Mat::identity(f2(), 2).rref_kit();
        assert_eq!(kit.rank, 2);
        assert!(kit.kernel_basis.is_empty());
        assert_eq!(kit.image_basis, vec![vec![1, 0], vec![0, 1]]);
    }

    #[test]
    fn zero_kit() {
        let kit = Mat::zeros(f2(), 3, 2).rref_kit();
        assert_eq!(kit.rank, 0);
        assert_eq!(kit.kernel_basis, vec![vec![1, 0], vec![0, 1]]);
        assert!(kit.image_basis.is_empty());
    }

    #[test]
    fn all_ones_kit() {
        let kit = Mat::from_rows(f2(), &[vec![1, 1], vec![1, 1]]).rref_kit();
        assert_eq!(kit.rank, 1);
        assert_eq!(kit.kernel_basis, vec![vec![1, 1]]);
    }

    #[test]
    fn degenerate_shapes() {
        let m = Mat::zeros(f2(), 0, 3);
        assert_eq!(m.rref_kit().kernel_basis.len(), 3);
        let m = Mat::zeros(f2(), 3, 0);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.solve(&[0, 0, 0]).unwrap(), Some(vec![]));
        assert_eq!(m.solve(&[1, 0, 0]).unwrap(), None);
    }

    #[test]
    fn solve_examples() {
        let id = Mat::identity(f2(), 2);
        assert_eq!(id.solve(&[1, 0]).unwrap(), Some(vec![1, 0]));
        let z = Mat::zeros(f2(), 2, 2);
        assert_eq!(z.solve(&[1, 0]).unwrap(), None);
        let row = Mat::from_rows(f2(), &[vec![1, 1]]);
        assert_eq!(row.solve(&[1]).unwrap(), Some(vec![1, 0]));
        assert!(row.solve(&[1, 1]).is_err());
    }

    #[test]
    fn inverse_over_f5() {
        let f = PrimeField::new(5).unwrap();
        let m = Mat::from_rows(f, &[vec![2, 1], vec![1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(f, 2));
        assert!(Mat::from_rows(f, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }
}
