//! Gaussian elimination: an incrementally maintained reduced row echelon form,
//! and the kernel / solve / determinant routines built on it.

use kfield::Scalar;

use crate::{LinalgError, Matrix, Subspace};

/// Fully reduced row echelon form, built one row at a time.
///
/// Rows are kept sorted by pivot column; each row has a 1 at its pivot and
/// zeros in every other row's pivot column. The form is unique for the row
/// space, independent of insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Scalar>)>,
}

// v -= f * row, skipping zeros of row
fn axpy(v: &mut [Scalar], f: &Scalar, row: &[Scalar]) {
    for (x, r) in v.iter_mut().zip(row) {
        if !r.is_zero() {
            *x -= f * r;
        }
    }
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new() }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let mut e = Echelon::new(m.cols());
        for r in 0..m.rows() {
            e.insert(m.row(r).to_vec());
        }
        e
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Scalar]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    /// Residual of `v` after reduction against the current rows.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        for (p, row) in &self.rows {
            if !v[*p].is_zero() {
                let f = v[*p].clone();
                axpy(&mut v, &f, row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the row space. Returns false if it was already contained.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        let mut v = self.reduce(v);
        let Some(q) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[q].inverse().expect("pivot is nonzero");
        for x in v.iter_mut().skip(q) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if !row[q].is_zero() {
                let f = row[q].clone();
                axpy(row, &f, &v);
            }
        }
        let at = self.rows.partition_point(|(p, _)| *p < q);
        self.rows.insert(at, (q, v));
        true
    }

    /// The reduced rows as a `rank × ncols` matrix.
    pub fn to_matrix(&self) -> Matrix {
        Matrix::new(
            self.rows.len(),
            self.ncols,
            self.rows.iter().flat_map(|(_, r)| r.iter().cloned()).collect(),
        )
    }

    /// Basis of the null space `{x : row · x = 0 for every row}`, one vector
    /// per free column in increasing order.
    pub fn null_vectors(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for (p, _) in &self.rows {
            is_pivot[*p] = true;
        }
        (0..self.ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.ncols];
                v[f] = Scalar::one();
                for (p, row) in &self.rows {
                    if !row[f].is_zero() {
                        v[*p] = -&row[f];
                    }
                }
                v
            })
            .collect()
    }
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let e = Echelon::from_matrix_rows(m);
    (e.to_matrix(), e.pivots())
}

pub fn rank(m: &Matrix) -> usize {
    Echelon::from_matrix_rows(m).rank()
}

/// Null space of `m` in canonical form; `dim = cols − rank`.
pub fn kernel(m: &Matrix) -> Subspace {
    let e = Echelon::from_matrix_rows(m);
    Subspace::from_vectors(m.cols(), &e.null_vectors())
}

/// A particular solution of `M·X = B` together with the kernel of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Matrix,
    pub kernel: Subspace,
}

/// Solves `M·X = B` exactly. Free variables of the particular solution are 0.
pub fn solve(m: &Matrix, b: &Matrix) -> Result<Solution, LinalgError> {
    if m.rows() != b.rows() {
        return Err(LinalgError::Shape(format!(
            "solve: {}x{} system with {}-row right-hand side",
            m.rows(),
            m.cols(),
            b.rows()
        )));
    }
    let n = m.cols();
    let aug = Echelon::from_matrix_rows(&m.hstack(b));
    let mut x = Matrix::zeros(n, b.cols());
    for (p, row) in aug.rows.iter() {
        if *p >= n {
            return Err(LinalgError::NoSolution);
        }
        for j in 0..b.cols() {
            x.set(*p, j, row[n + j].clone());
        }
    }
    Ok(Solution { particular: x, kernel: kernel(m) })
}

/// Determinant and inverse of a square matrix.
pub fn det_inverse(m: &Matrix) -> Result<(Scalar, Matrix), LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Shape(format!("det of {}x{} matrix", m.rows(), m.cols())));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Scalar>> = m.hstack(&Matrix::identity(n)).to_rows();
    let mut det = Scalar::one();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero()).ok_or(LinalgError::Singular)?;
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det = &det * &a[col][col];
        let inv = a[col][col].inverse().expect("pivot is nonzero");
        for x in a[col].iter_mut().skip(col) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let f = row[col].clone();
                axpy(row, &f, &pivot_row);
            }
        }
    }
    let inv = Matrix::from_rows(a.into_iter().map(|row| row[n..].to_vec()).collect());
    Ok((det, inv))
}

/// Determinant only; zero for singular matrices.
pub fn det(m: &Matrix) -> Scalar {
    match det_inverse(m) {
        Ok((d, _)) => d,
        Err(_) => Scalar::zero(),
    }
}

pub fn inverse(m: &Matrix) -> Result<Matrix, LinalgError> {
    det_inverse(m).map(|(_, inv)| inv)
}
