//! Dense matrices over a prime field.
//!
//! All elimination uses the leftmost-pivot, topmost-row rule and free
//! variables are set to zero, so every derived basis is reproducible.

use std::fmt;

use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row-echelon form together with its rank and pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing every entry mod p.
    pub fn from_rows<R: AsRef<[i64]>>(field: PrimeField, rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = field.reduce(v);
            }
        }
        m
    }

    /// Wraps already-reduced row-major data.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols);
        debug_assert!(data.iter().all(|&v| v < field.modulus()));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_vec(field, rows, cols, data)
    }

    /// Single column built from a reduced vector.
    pub fn column_vector(field: PrimeField, v: &[u32]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec())
    }

    /// Matrix whose columns are the given reduced vectors, all of length `rows`.
    pub fn from_columns(field: PrimeField, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
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
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        debug_assert!(v < self.field.modulus());
        self.data[r * self.cols + c] = v;
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let p = self.field.modulus() as u64;
        let n = other.cols;
        let mut acc = vec![0u64; n];
        let mut out = Vec::with_capacity(self.rows * n);
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let orow = other.row(k);
                for (acc_j, &b) in acc.iter_mut().zip(orow) {
                    *acc_j = (*acc_j + a * b as u64) % p;
                }
            }
            out.extend(acc.iter().map(|&v| v as u32));
        }
        Matrix::from_vec(self.field, self.rows, n, out)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.modulus() as u64;
        (0..self.rows)
            .map(|i| {
                let s = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .fold(0u64, |s, (&a, &b)| (s + a as u64 * b as u64) % p);
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix::from_vec(f, self.rows, self.cols, data)
    }

    /// `self += c * other`, in place.
    pub fn add_scaled(&mut self, c: u32, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    /// Linear combination `sum coeffs[i] * mats[i]`.
    pub fn combination(
        field: PrimeField,
        rows: usize,
        cols: usize,
        coeffs: &[u32],
        mats: &[Matrix],
    ) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (&c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j])
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j)
        })
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    /// Writes `block` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + block.cols].copy_from_slice(block.row(i));
        }
    }

    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut c0 = 0;
        for b in blocks {
            assert_eq!(b.rows, rows);
            m.set_block(0, c0, b);
            c0 += b.cols;
        }
        m
    }

    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols);
            data.extend_from_slice(&b.data);
        }
        Matrix::from_vec(field, rows, cols, data)
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let f = self.field;
        Matrix::from_fn(f, self.rows * other.rows, self.cols * other.cols, |i, j| {
            let a = self.get(i / other.rows, j / other.cols);
            if a == 0 {
                0
            } else {
                f.mul(a, other.get(i % other.rows, j % other.cols))
            }
        })
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |s, i| self.field.add(s, self.get(i, i)))
    }

    /// Reduced row-echelon form (Gauss-Jordan, leftmost pivot, topmost row).
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let p = f.modulus() as u64;
        let (rows, cols) = (self.rows, self.cols);
        let mut m = self.data.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| m[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in c..cols {
                    m.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(m[r * cols + c]) as u64;
            for k in c..cols {
                m[r * cols + k] = ((m[r * cols + k] as u64 * inv) % p) as u32;
            }
            let (head, tail) = m.split_at_mut(r * cols);
            let (prow, rest) = tail.split_at_mut(cols);
            let prow = &prow[c..];
            let eliminate = |row: &mut [u32]| {
                let factor = row[c] as u64;
                if factor == 0 {
                    return;
                }
                let neg = p - factor;
                for (x, &y) in row[c..].iter_mut().zip(prow) {
                    *x = ((*x as u64 + neg * y as u64) % p) as u32;
                }
            };
            head.chunks_mut(cols).for_each(eliminate);
            rest.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: Matrix::from_vec(f, rows, cols, m),
            rank: pivots.len(),
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows > self.cols {
            // eliminating the transpose is cheaper for tall matrices
            self.transpose().rref().rank
        } else {
            self.rref().rank
        }
    }

    /// One solution `X` of `self * X = b` (free variables zero), or `None`
    /// when the system is inconsistent.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let n = self.cols;
        let aug = Matrix::hstack(self.field, self.rows, &[self, b]);
        let red = aug.rref();
        if red.pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (r, &c) in red.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, red.matrix.get(r, n + j));
            }
        }
        Some(x)
    }

    /// Columns form a basis of `{v : self * v = 0}`, one per free variable
    /// in increasing column order.
    pub fn nullspace(&self) -> Matrix {
        let red = self.rref();
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &red.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut basis = Matrix::zeros(f, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, 1);
            for (r, &pc) in red.pivots.iter().enumerate() {
                basis.set(pc, k, f.neg(red.matrix.get(r, fc)));
            }
        }
        basis
    }

    /// The linearly independent columns picked out by elimination.
    pub fn column_basis(&self) -> Matrix {
        let red = self.rref();
        self.select_columns(&red.pivots)
    }

    /// `L` with `L * self = I`, for a matrix of full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let aug = Matrix::hstack(
            self.field,
            self.rows,
            &[self, &Matrix::identity(self.field, self.rows)],
        );
        let red = aug.rref();
        if red.pivots.len() < self.cols
            || red.pivots[..self.cols]
                .iter()
                .enumerate()
                .any(|(i, &c)| i != c)
        {
            return None;
        }
        Some(red.matrix.submatrix(0, self.cols, self.cols, self.rows))
    }

    /// `S` with `self * S = I`, for a matrix of full row rank.
    pub fn right_inverse(&self) -> Option<Matrix> {
        self.transpose().left_inverse().map(|l| l.transpose())
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        self.left_inverse()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Whether every column of `vectors` lies in the column span of `self`.
    pub fn spans(&self, vectors: &Matrix) -> bool {
        if vectors.cols == 0 {
            return true;
        }
        let joined = Matrix::hstack(self.field, self.rows, &[self, vectors]);
        joined.rank() == self.rank()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self
                .row(i)
                .iter()
                .map(|&v| self.field.signed(v).to_string())
                .collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "] ({}x{} over {:?})", self.rows, self.cols, self.field)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f5() -> PrimeField {
        PrimeField::new(5).unwrap()
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = f5();
        let id = Matrix::identity(f, 2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 2);
        assert_eq!(r.pivots, vec![0, 1]);

        let z = Matrix::zeros(f, 3, 3);
        let r = z.rref();
        assert_eq!(r.matrix, z);
        assert_eq!(r.rank, 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_rank_one_mod_five() {
        let f = f5();
        let m = Matrix::from_rows(f, &[[1, 2], [2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, Matrix::from_rows(f, &[[1, 2], [0, 0]]));
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn solve_cases() {
        let f = f5();
        let b = Matrix::from_rows(f, &[[3, 1], [4, 0]]);
        assert_eq!(Matrix::identity(f, 2).solve(&b), Some(b.clone()));
        assert_eq!(Matrix::zeros(f, 2, 2).solve(&b), None);
        let x = Matrix::from_rows(f, &[[2]])
            .solve(&Matrix::from_rows(f, &[[1]]))
            .unwrap();
        assert_eq!(x, Matrix::from_rows(f, &[[3]]));
    }

    #[test]
    fn nullspace_cases() {
        let f = f5();
        assert_eq!(Matrix::identity(f, 3).nullspace().cols(), 0);
        assert_eq!(Matrix::zeros(f, 3, 3).nullspace(), Matrix::identity(f, 3));
        let ns = Matrix::from_rows(f, &[[1, 2]]).nullspace();
        assert_eq!(ns, Matrix::from_rows(f, &[[3], [1]]));
    }

    #[test]
    fn inverses() {
        let f = PrimeField::new(7).unwrap();
        let m = Matrix::from_rows(f, &[[1, 2], [3, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(f, 2));
        let tall = Matrix::from_rows(f, &[[1, 0], [2, 1], [0, 3]]);
        let l = tall.left_inverse().unwrap();
        assert_eq!(l.mul(&tall), Matrix::identity(f, 2));
        assert!(Matrix::from_rows(f, &[[1, 2], [2, 4]]).inverse().is_none());
    }

    fn small_matrix() -> impl Strategy<Value = Matrix> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(0i64..7, r * c).prop_map(move |v| {
                let f = PrimeField::new(7).unwrap();
                let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
                Matrix::from_rows(f, &rows)
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(m in small_matrix()) {
            let r = m.rref();
            let ns = m.nullspace();
            prop_assert_eq!(r.rank + ns.cols(), m.cols());
            prop_assert!(m.mul(&ns).is_zero());
            prop_assert_eq!(m.rank(), r.rank);
        }

        #[test]
        fn rref_idempotent(m in small_matrix()) {
            let once = m.rref().matrix;
            prop_assert_eq!(once.rref().matrix, once);
        }

        #[test]
        fn solve_reproduces_rhs(a in small_matrix(), seed in 0u64..1000) {
            let f = a.field();
            let x0 = Matrix::from_fn(f, a.cols(), 2, |i, j| ((seed as usize + 3 * i + 5 * j) % 7) as u32);
            let b = a.mul(&x0);
            let x = a.solve(&b).expect("consistent by construction");
            prop_assert_eq!(a.mul(&x), b);
        }
    }
}
