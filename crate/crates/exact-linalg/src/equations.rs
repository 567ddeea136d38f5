//! Linear conditions on an unknown matrix, vectorized row-major.

use kfield::Scalar;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::echelon::{det, Echelon};
use crate::{LinalgError, Matrix, Subspace};

/// Default seed for the randomized stage of `invertible_in_space`.
pub const DEFAULT_SEED: u64 = 0x7355_5EED;

/// Coefficient vectors tried in the deterministic sweep (excluding zero).
pub const SWEEP_LIMIT: usize = 624;

/// Random combinations tried after the sweep.
pub const RANDOM_TRIES: usize = 64;

/// Accumulates homogeneous equations `Σ_t L_t · X · R_t = 0` for an unknown
/// `rows × cols` matrix X, whose entry (p, q) is variable `p·cols + q`.
#[derive(Clone, Debug)]
pub struct MatrixEquations {
    rows: usize,
    cols: usize,
    ech: Echelon,
}

impl MatrixEquations {
    pub fn new(rows: usize, cols: usize) -> Self {
        MatrixEquations { rows, cols, ech: Echelon::new(rows * cols) }
    }

    /// Adds the entrywise equations of `Σ_t L_t · X · R_t = 0`.
    pub fn add(&mut self, terms: &[(&Matrix, &Matrix)]) {
        let Some((l0, r0)) = terms.first() else { return };
        let (out_r, out_c) = (l0.rows(), r0.cols());
        for (l, r) in terms {
            assert_eq!((l.rows(), r.cols()), (out_r, out_c), "term shape mismatch");
            assert_eq!((l.cols(), r.rows()), (self.rows, self.cols), "term shape mismatch");
        }
        for a in 0..out_r {
            for b in 0..out_c {
                let mut eq = vec![Scalar::zero(); self.rows * self.cols];
                for (l, r) in terms {
                    for p in 0..self.rows {
                        let lv = l.get(a, p);
                        if lv.is_zero() {
                            continue;
                        }
                        for q in 0..self.cols {
                            let rv = r.get(q, b);
                            if !rv.is_zero() {
                                eq[p * self.cols + q] += lv * rv;
                            }
                        }
                    }
                }
                if eq.iter().any(|x| !x.is_zero()) {
                    self.ech.insert(eq);
                }
            }
        }
    }

    /// All solutions X, as a subspace of K^{rows·cols}.
    pub fn solution_space(&self) -> Subspace {
        Subspace::from_vectors(self.rows * self.cols, &self.ech.null_vectors())
    }
}

/// Joint solution space of `X·A_i = B_i·X`, as a subspace of n²-space.
pub fn intertwiner_space(a_s: &[Matrix], b_s: &[Matrix]) -> Subspace {
    assert_eq!(a_s.len(), b_s.len(), "intertwiner lists differ in length");
    let n = a_s.first().or(b_s.first()).map_or(0, Matrix::rows);
    let id = Matrix::identity(n);
    let mut eqs = MatrixEquations::new(n, n);
    for (a, b) in a_s.iter().zip(b_s) {
        assert!(a.is_square() && b.is_square() && a.rows() == n && b.rows() == n, "shape mismatch");
        let nb = -b;
        eqs.add(&[(&id, a), (&nb, &id)]);
    }
    eqs.solution_space()
}

/// The basis of a subspace of n²-space, as n × n matrices.
pub fn space_matrices(space: &Subspace, n: usize) -> Vec<Matrix> {
    assert_eq!(space.ambient(), n * n, "not a space of n x n matrices");
    space.basis_vectors().iter().map(|v| Matrix::from_row_major(n, v)).collect()
}

fn seed() -> u64 {
    std::env::var("TSS_SEED").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_SEED)
}

// Mixed-radix increment, last digit fastest. False once every vector was seen.
fn advance(idx: &mut [usize], base: usize) -> bool {
    for d in idx.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn combine(basis: &[Matrix], coeffs: &[i64]) -> Matrix {
    let n = basis[0].rows();
    let mut acc = Matrix::zeros(n, n);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.scale(&Scalar::from_i64(c));
        }
    }
    acc
}

/// Finds an invertible element of a space of n × n matrices.
///
/// Stage one sweeps coefficient vectors over {1, 0, −1, 2, −2} per basis
/// element, starting from all ones, for at most `SWEEP_LIMIT` vectors; this
/// covers every combination when the space has dimension ≤ 4. Stage two tries
/// `RANDOM_TRIES` combinations with coefficients in [−100, 100] drawn from a
/// ChaCha8 stream seeded by `TSS_SEED` (default `DEFAULT_SEED`). Every returned
/// matrix is certified by an exact nonzero determinant. Failure is reported,
/// not a proof that no invertible element exists.
pub fn invertible_in_space(space: &Subspace, n: usize) -> Result<Matrix, LinalgError> {
    let basis = space_matrices(space, n);
    let m = basis.len();
    if m == 0 {
        return Err(LinalgError::NoneInvertible);
    }
    const DIGITS: [i64; 5] = [1, 0, -1, 2, -2];
    let mut idx = vec![0usize; m];
    let mut tried = 0;
    loop {
        let coeffs: Vec<i64> = idx.iter().map(|&d| DIGITS[d]).collect();
        if coeffs.iter().any(|&c| c != 0) {
            let cand = combine(&basis, &coeffs);
            if !det(&cand).is_zero() {
                return Ok(cand);
            }
            tried += 1;
            if tried >= SWEEP_LIMIT {
                break;
            }
        }
        if !advance(&mut idx, DIGITS.len()) {
            break;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed());
    for _ in 0..RANDOM_TRIES {
        let coeffs: Vec<i64> = (0..m).map(|_| rng.gen_range(-100..=100)).collect();
        let cand = combine(&basis, &coeffs);
        if !det(&cand).is_zero() {
            return Ok(cand);
        }
    }
    Err(LinalgError::NoneInvertible)
}
