//! Dense matrices over a [`Field`] and incremental row echelon forms.
//!
//! Vectors are rows. A matrix acts on row vectors from the right.

use super::field::{Elt, Field};
use std::fmt;

#[derive(Clone)]
pub struct Mat {
    field: &'static Field,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl PartialEq for Mat {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Mat {}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} over GF({})", self.rows, self.cols, self.field.name())?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(32)])?;
        }
        Ok(())
    }
}

impl Mat {
    pub fn zero(field: &'static Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, data: vec![0; rows * cols] }
    }
    pub fn identity(field: &'static Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }
    pub fn from_data(field: &'static Field, rows: usize, cols: usize, data: Vec<u16>) -> Mat {
        assert_eq!(data.len(), rows * cols);
        Mat { field, rows, cols, data }
    }
    pub fn from_rows(field: &'static Field, cols: usize, rows: &[Vec<u16>]) -> Mat {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend_from_slice(r);
        }
        Mat { field, rows: rows.len(), cols, data }
    }
    /// Build from signed integers reduced into the prime subfield.
    pub fn from_ints(field: &'static Field, rows: usize, cols: usize, v: &[i64]) -> Mat {
        let data = v.iter().map(|&x| field.from_int(x) as u16).collect();
        Mat::from_data(field, rows, cols, data)
    }

    pub fn field(&self) -> &'static Field {
        self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u16] {
        &self.data
    }
    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elt {
        self.data[r * self.cols + c] as Elt
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elt) {
        self.data[r * self.cols + c] = v as u16;
    }
    #[inline]
    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u16] {
        let c = self.cols;
        &mut self.data[r * c..(r + 1) * c]
    }
    pub fn row_vecs(&self) -> Vec<Vec<u16>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let f = self.field;
        let mut out = Mat::zero(f, self.rows, other.cols);
        let oc = other.cols;
        for i in 0..self.rows {
            let (a_row, out_row) = (self.row(i), &mut out.data[i * oc..(i + 1) * oc]);
            for (k, &a) in a_row.iter().enumerate() {
                if a != 0 {
                    f.axpy(out_row, &other.data[k * oc..(k + 1) * oc], a as Elt);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn apply(&self, v: &[u16]) -> Vec<u16> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0u16; self.cols];
        for (k, &a) in v.iter().enumerate() {
            if a != 0 {
                self.field.axpy(&mut out, self.row(k), a as Elt);
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        self.field.axpy(&mut out.data, &other.data, 1);
        out
    }
    pub fn sub(&self, other: &Mat) -> Mat {
        let mut out = self.clone();
        out.axpy(other, self.field.neg(1));
        out
    }
    /// self += s * other
    pub fn axpy(&mut self, other: &Mat, s: Elt) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.field.axpy(&mut self.data, &other.data, s);
    }
    pub fn scaled(&self, s: Elt) -> Mat {
        let mut out = self.clone();
        self.field.scale(&mut out.data, s);
        out
    }
    /// self + s·I
    pub fn add_scalar(&self, s: Elt) -> Mat {
        assert!(self.is_square());
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = self.field.add(out.get(i, i), s);
            out.set(i, i, v);
        }
        out
    }
    pub fn trace(&self) -> Elt {
        (0..self.rows.min(self.cols)).fold(0, |acc, i| self.field.add(acc, self.get(i, i)))
    }
    pub fn pow(&self, mut e: u64) -> Mat {
        let mut base = self.clone();
        let mut acc = Mat::identity(self.field, self.rows);
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

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.field, self.cols);
        for r in 0..self.rows {
            ech.add(self.row(r).to_vec());
        }
        ech.rank()
    }

    /// Basis (as rows) of the left null space {v : vM = 0}.
    pub fn left_kernel(&self) -> Mat {
        let n = self.rows;
        let f = self.field;
        let w = self.cols + n;
        let mut aug: Vec<Vec<u16>> = (0..n)
            .map(|r| {
                let mut v = Vec::with_capacity(w);
                v.extend_from_slice(self.row(r));
                v.extend(std::iter::repeat_n(0, n));
                v[self.cols + r] = 1;
                v
            })
            .collect();
        let mut pivot_rows: Vec<(usize, usize)> = Vec::new(); // (row index, pivot col)
        let mut kernel = Vec::new();
        for i in 0..n {
            let mut v = std::mem::take(&mut aug[i]);
            for &(ri, pc) in &pivot_rows {
                let c = v[pc];
                if c != 0 {
                    let src: &Vec<u16> = &aug[ri];
                    f.axpy(&mut v, src, f.neg(c as Elt));
                }
            }
            match v[..self.cols].iter().position(|&x| x != 0) {
                Some(pc) => {
                    let inv = f.inv(v[pc] as Elt);
                    f.scale(&mut v, inv);
                    aug[i] = v;
                    pivot_rows.push((i, pc));
                }
                None => kernel.push(v[self.cols..].to_vec()),
            }
        }
        Mat::from_rows(f, n, &kernel)
    }

    /// Basis of the right null space {x : Mx = 0}, returned as rows.
    pub fn right_kernel(&self) -> Mat {
        self.transpose().left_kernel()
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let f = self.field;
        let mut a = self.clone();
        let mut inv = Mat::identity(f, n);
        for col in 0..n {
            let piv = (col..n).find(|&r| a.get(r, col) != 0)?;
            if piv != col {
                swap_rows(&mut a, piv, col);
                swap_rows(&mut inv, piv, col);
            }
            let s = f.inv(a.get(col, col));
            f.scale(a.row_mut(col), s);
            f.scale(inv.row_mut(col), s);
            let arow = a.row(col).to_vec();
            let irow = inv.row(col).to_vec();
            for r in 0..n {
                if r != col {
                    let c = a.get(r, col);
                    if c != 0 {
                        let nc = f.neg(c);
                        f.axpy(a.row_mut(r), &arow, nc);
                        f.axpy(inv.row_mut(r), &irow, nc);
                    }
                }
            }
        }
        Some(inv)
    }

    /// Block diagonal sum.
    pub fn block_diag(&self, other: &Mat) -> Mat {
        let (r, c) = (self.rows + other.rows, self.cols + other.cols);
        let mut out = Mat::zero(self.field, r, c);
        for i in 0..self.rows {
            out.data[i * c..i * c + self.cols].copy_from_slice(self.row(i));
        }
        for i in 0..other.rows {
            let o = (self.rows + i) * c + self.cols;
            out.data[o..o + other.cols].copy_from_slice(other.row(i));
        }
        out
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let f = self.field;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Mat::zero(f, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    let dst = (i * other.rows + k) * c + j * other.cols;
                    let src = other.row(k);
                    let d = &mut out.data[dst..dst + other.cols];
                    f.axpy(d, src, a);
                }
            }
        }
        out
    }

    /// Re-express over a larger field containing this one.
    pub fn extend_scalars(&self, big: &'static Field) -> Mat {
        let data = self.data.iter().map(|&x| big.embed_from(self.field, x as Elt) as u16).collect();
        Mat::from_data(big, self.rows, self.cols, data)
    }

    /// Evaluate a polynomial (coefficients from the constant term) at a square matrix.
    pub fn poly_eval(&self, coeffs: &[Elt]) -> Mat {
        let n = self.rows;
        let mut acc = Mat::zero(self.field, n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self).add_scalar(c);
        }
        acc
    }
}

fn swap_rows(m: &mut Mat, a: usize, b: usize) {
    let c = m.cols;
    for j in 0..c {
        m.data.swap(a * c + j, b * c + j);
    }
}

/// Rank of a matrix.
pub fn rank(m: &Mat) -> usize {
    m.rank()
}

/// Basis of the right null space of `m`, each vector of length `cols(m)`.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<u16>> {
    m.right_kernel().row_vecs()
}

/// Semi-echelon basis of a subspace, built incrementally.
///
/// Each stored row has a leading 1 at its pivot and zeros at the pivots of all
/// earlier rows, so reducing a vector against the rows in order clears every
/// pivot column.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: &'static Field,
    ncols: usize,
    rows: Vec<Vec<u16>>,
    pivots: Vec<usize>,
    is_pivot: Vec<bool>,
}

impl Echelon {
    pub fn new(field: &'static Field, ncols: usize) -> Echelon {
        Echelon { field, ncols, rows: Vec::new(), pivots: Vec::new(), is_pivot: vec![false; ncols] }
    }
    pub fn from_rows(field: &'static Field, ncols: usize, rows: impl IntoIterator<Item = Vec<u16>>) -> Echelon {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.add(r);
        }
        e
    }
    pub fn field(&self) -> &'static Field {
        self.field
    }
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
    pub fn ncols(&self) -> usize {
        self.ncols
    }
    pub fn rows(&self) -> &[Vec<u16>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }
    /// Columns that are not pivots, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| !self.is_pivot[c]).collect()
    }

    /// Reduce `v` in place; returns the coefficients used (v_original = Σ c_i row_i + v_reduced).
    pub fn reduce_with_coeffs(&self, v: &mut [u16]) -> Vec<Elt> {
        let f = self.field;
        let mut coeffs = vec![0; self.rows.len()];
        for (i, (row, &pc)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = v[pc] as Elt;
            if c != 0 {
                f.axpy(v, row, f.neg(c));
                coeffs[i] = c;
            }
        }
        coeffs
    }
    pub fn reduce(&self, v: &mut [u16]) {
        let f = self.field;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = v[pc] as Elt;
            if c != 0 {
                f.axpy(v, row, f.neg(c));
            }
        }
    }
    pub fn contains(&self, v: &[u16]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
    /// Insert a vector; returns true if the span grew.
    pub fn add(&mut self, mut v: Vec<u16>) -> bool {
        self.reduce(&mut v);
        self.push_reduced(v)
    }
    /// Insert a vector already reduced against this echelon.
    pub fn push_reduced(&mut self, mut v: Vec<u16>) -> bool {
        match v.iter().position(|&x| x != 0) {
            None => false,
            Some(pc) => {
                let inv = self.field.inv(v[pc] as Elt);
                self.field.scale(&mut v, inv);
                self.rows.push(v);
                self.pivots.push(pc);
                self.is_pivot[pc] = true;
                true
            }
        }
    }
    /// Coordinates of `v` (which must lie in the span) with respect to the stored rows.
    pub fn coords(&self, v: &[u16]) -> Option<Vec<Elt>> {
        let mut w = v.to_vec();
        let c = self.reduce_with_coeffs(&mut w);
        if w.iter().all(|&x| x == 0) {
            Some(c)
        } else {
            None
        }
    }
    pub fn to_mat(&self) -> Mat {
        Mat::from_rows(self.field, self.ncols, &self.rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::field_make;

    #[test]
    fn rank_examples() {
        let f2 = field_make(2, 1).unwrap();
        assert_eq!(Mat::identity(f2, 4).rank(), 4);
        assert_eq!(Mat::zero(f2, 3, 5).rank(), 0);
        let f5 = field_make(5, 1).unwrap();
        let mut p = Mat::zero(f5, 5, 5);
        for i in 0..5 {
            p.set(i, (i + 1) % 5, 1);
        }
        let d = p.sub(&Mat::identity(f5, 5));
        assert_eq!(d.rank(), 4);
        let k = kernel_basis(&d);
        assert_eq!(k.len(), 1);
        let first = k[0][0];
        assert!(first != 0 && k[0].iter().all(|&x| x == first));
    }

    #[test]
    fn kernel_examples() {
        let f3 = field_make(3, 1).unwrap();
        assert!(kernel_basis(&Mat::identity(f3, 4)).is_empty());
        assert_eq!(kernel_basis(&Mat::zero(f3, 3, 3)).len(), 3);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = field_make(7, 2).unwrap();
        let m = Mat::from_data(f, 2, 2, vec![3, 10, 1, 44]);
        if let Some(inv) = m.inverse() {
            assert_eq!(m.mul(&inv), Mat::identity(f, 2));
        }
    }
}
