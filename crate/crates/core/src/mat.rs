//! Dense matrices over F_p with Gauss-Jordan elimination, kernels, and
//! echelon-basis subspaces.

use crate::field::FieldCtx;
use crate::{Error, Result};

/// A rows x cols matrix over F_p, entries stored row-major in `[0, p)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    ctx: FieldCtx,
    rows: usize,
    cols: usize,
    entries: Vec<u64>,
}

/// Result of reduction to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rank: usize,
    pub echelon: Mat,
    pub pivot_cols: Vec<usize>,
}

impl Mat {
    pub fn zeros(ctx: FieldCtx, rows: usize, cols: usize) -> Self {
        Mat {
            ctx,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(ctx: FieldCtx, n: usize) -> Self {
        let mut m = Mat::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row slices, validating the range of every entry.
    pub fn from_rows(ctx: FieldCtx, rows: &[Vec<u64>]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.len());
        let mut entries = Vec::with_capacity(height * width);
        for row in rows {
            if row.len() != width {
                return Err(Error::Shape(format!(
                    "ragged rows: expected width {width}, found {}",
                    row.len()
                )));
            }
            for &x in row {
                if x >= ctx.modulus() {
                    return Err(Error::Shape(format!(
                        "entry {x} out of range for p = {}",
                        ctx.modulus()
                    )));
                }
            }
            entries.extend_from_slice(row);
        }
        Ok(Mat {
            ctx,
            rows: height,
            cols: width,
            entries,
        })
    }

    /// Builds from a flat row-major slice; entries must already be reduced.
    pub fn from_flat(ctx: FieldCtx, rows: usize, cols: usize, entries: Vec<u64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "flat data of length {} does not fill {rows}x{cols}",
                entries.len()
            )));
        }
        if let Some(&bad) = entries.iter().find(|&&x| x >= ctx.modulus()) {
            return Err(Error::Shape(format!(
                "entry {bad} out of range for p = {}",
                ctx.modulus()
            )));
        }
        Ok(Mat {
            ctx,
            rows,
            cols,
            entries,
        })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u64) {
        debug_assert!(x < self.ctx.modulus());
        self.entries[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.ctx, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Matrix product; shapes must agree.
    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let f = self.ctx;
        let mut out = Mat::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let cur = out.get(i, j);
                    out.set(i, j, f.add(cur, f.mul(a, rhs.get(k, j))));
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "shape mismatch in matrix-vector product");
        let f = self.ctx;
        (0..self.rows)
            .map(|i| {
                let mut acc = 0;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(i, j), v[j]));
                }
                acc
            })
            .collect()
    }

    pub fn scale(&self, c: u64) -> Mat {
        let f = self.ctx;
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = f.mul(*x, c);
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.ctx;
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *x = f.add(*x, *y);
        }
        out
    }

    /// Gauss-Jordan reduction to the unique reduced row echelon form.
    pub fn rref(&self) -> Rref {
        let f = self.ctx;
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(piv) = (rank..m.rows).find(|&i| m.get(i, col) != 0) else {
                continue;
            };
            m.swap_rows(rank, piv);
            let inv = f.inv(m.get(rank, col));
            for j in col..m.cols {
                m.set(rank, j, f.mul(m.get(rank, j), inv));
            }
            for i in 0..m.rows {
                if i != rank && m.get(i, col) != 0 {
                    let factor = m.get(i, col);
                    for j in col..m.cols {
                        let val = f.sub(m.get(i, j), f.mul(factor, m.get(rank, j)));
                        m.set(i, j, val);
                    }
                }
            }
            pivot_cols.push(col);
            rank += 1;
        }
        Rref {
            rank,
            echelon: m,
            pivot_cols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null space {v : self * v = 0} as an echelon-basis subspace.
    pub fn kernel(&self) -> Subspace {
        let Rref {
            echelon,
            pivot_cols,
            ..
        } = self.rref();
        let f = self.ctx;
        let pivot_of_col: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (r, &c) in pivot_cols.iter().enumerate() {
                map[c] = Some(r);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &c) in pivot_cols.iter().enumerate() {
                v[c] = f.neg(echelon.get(r, free));
            }
            basis.push(v);
        }
        Subspace::from_independent(f, self.cols, &basis)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// A linear subspace of F_p^ambient, held as a reduced-echelon basis so
/// that equal subspaces compare equal syntactically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    /// Canonicalizes an arbitrary spanning set.
    pub fn from_spanning(ctx: FieldCtx, ambient: usize, spanning: &[Vec<u64>]) -> Result<Self> {
        let m = Mat::from_rows(ctx, spanning)?;
        if !spanning.is_empty() && m.cols() != ambient {
            return Err(Error::Shape(format!(
                "spanning vectors live in dimension {}, ambient is {ambient}",
                m.cols()
            )));
        }
        let Rref {
            rank,
            echelon,
            pivot_cols,
        } = m.rref();
        let rows: Vec<Vec<u64>> = (0..rank).map(|i| echelon.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient,
            basis: Mat::from_rows(ctx, &rows).unwrap_or(Mat::zeros(ctx, 0, ambient)),
            pivot_cols,
        })
    }

    fn from_independent(ctx: FieldCtx, ambient: usize, basis: &[Vec<u64>]) -> Self {
        Subspace::from_spanning(ctx, ambient, basis).expect("kernel basis is well formed")
    }

    pub fn zero(ctx: FieldCtx, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(ctx, 0, ambient),
            pivot_cols: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vec(&self, i: usize) -> &[u64] {
        self.basis.row(i)
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Residual of `v` after reduction against the echelon basis; zero iff
    /// `v` lies in the subspace.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient);
        let f = self.basis.ctx();
        let mut w = v.to_vec();
        for (r, &c) in self.pivot_cols.iter().enumerate() {
            let coef = w[c];
            if coef == 0 {
                continue;
            }
            for j in 0..self.ambient {
                w[j] = f.sub(w[j], f.mul(coef, self.basis.get(r, j)));
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the span.
    /// For a reduced-echelon basis these are just the pivot-column entries.
    pub fn coordinates(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivot_cols.iter().map(|&c| v[c]).collect())
    }

    /// Basis of the annihilator {q : q . x = 0 for all x in the subspace},
    /// i.e. the kernel of the basis matrix.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            let ctx = self.basis.ctx();
            let rows: Vec<Vec<u64>> = (0..self.ambient)
                .map(|i| {
                    let mut r = vec![0u64; self.ambient];
                    r[i] = 1;
                    r
                })
                .collect();
            return Subspace::from_independent(ctx, self.ambient, &rows);
        }
        self.basis.kernel()
    }
}

/// Scales a nonzero vector so its first nonzero coordinate is 1; returns
/// the scaling factor applied. The canonical representative of a
/// projective point.
pub fn normalize_projective(ctx: FieldCtx, v: &[u64]) -> Option<(Vec<u64>, u64)> {
    let lead = v.iter().position(|&x| x != 0)?;
    let inv = ctx.inv(v[lead]);
    Some((v.iter().map(|&x| ctx.mul(x, inv)).collect(), inv))
}

/// Outer product v . h^T as an s x m matrix, s = |v|, m = |h|.
pub fn outer(ctx: FieldCtx, v: &[u64], h: &[u64]) -> Mat {
    let mut out = Mat::zeros(ctx, v.len(), h.len());
    for (i, &vi) in v.iter().enumerate() {
        for (j, &hj) in h.iter().enumerate() {
            out.set(i, j, ctx.mul(vi, hj));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f5() -> FieldCtx {
        FieldCtx::new(5).unwrap()
    }

    #[test]
    fn rref_identity() {
        let id = Mat::identity(f5(), 2);
        let r = id.rref();
        assert_eq!(r.rank, 2);
        assert_eq!(r.echelon, id);
    }

    #[test]
    fn rref_zero_matrix() {
        let z = Mat::zeros(f5(), 3, 4);
        let r = z.rref();
        assert_eq!(r.rank, 0);
        assert_eq!(r.echelon, z);
    }

    #[test]
    fn rref_proportional_rows() {
        let m = Mat::from_rows(f5(), &[vec![1, 2], vec![2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.echelon, Mat::from_rows(f5(), &[vec![1, 2], vec![0, 0]]).unwrap());
    }

    #[test]
    fn rref_is_idempotent() {
        let m = Mat::from_rows(f5(), &[vec![2, 3, 1], vec![4, 1, 0], vec![1, 4, 1]]).unwrap();
        let e = m.rref().echelon;
        assert_eq!(e.rref().echelon, e);
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let k = Mat::identity(f5(), 3).kernel();
        assert_eq!(k.dim(), 0);
    }

    #[test]
    fn kernel_of_zero_is_everything() {
        let k = Mat::zeros(f5(), 2, 3).kernel();
        assert_eq!(k.dim(), 3);
    }

    #[test]
    fn kernel_one_equation_f3() {
        let f3 = FieldCtx::new(3).unwrap();
        let m = Mat::from_rows(f3, &[vec![1, 1, 0]]).unwrap();
        let k = m.kernel();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[1, 2, 0]));
        assert!(k.contains(&[0, 0, 1]));
        assert!(!k.contains(&[1, 1, 0]));
    }

    #[test]
    fn subspace_coordinates_roundtrip() {
        let s =
            Subspace::from_spanning(f5(), 3, &[vec![1, 2, 3], vec![0, 1, 4], vec![1, 3, 2]]).unwrap();
        assert_eq!(s.dim(), 2);
        let f = f5();
        let v: Vec<u64> = (0..3)
            .map(|j| f.add(f.mul(2, s.basis_vec(0)[j]), f.mul(3, s.basis_vec(1)[j])))
            .collect();
        assert_eq!(s.coordinates(&v), Some(vec![2, 3]));
    }

    #[test]
    fn annihilator_dimensions() {
        let s = Subspace::from_spanning(f5(), 4, &[vec![1, 0, 2, 0]]).unwrap();
        let ann = s.annihilator();
        assert_eq!(ann.dim(), 3);
        for i in 0..ann.dim() {
            let q = ann.basis_vec(i);
            let dot: u64 = (0..4).fold(0, |acc, j| f5().add(acc, f5().mul(q[j], s.basis_vec(0)[j])));
            assert_eq!(dot, 0);
        }
        let z = Subspace::zero(f5(), 3);
        assert_eq!(z.annihilator().dim(), 3);
    }
}
