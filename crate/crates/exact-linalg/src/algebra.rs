use std::collections::VecDeque;

use crate::echelon::Echelon;
use crate::Matrix;

/// The unital algebra generated by a set of square matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraClosure {
    pub dim: usize,
    /// Canonical (row-reduced, vectorized row-major) basis.
    pub basis: Vec<Matrix>,
}

impl AlgebraClosure {
    pub fn contains(&self, m: &Matrix) -> bool {
        let n = m.rows();
        let mut e = Echelon::new(n * n);
        for b in &self.basis {
            e.insert(b.entries().to_vec());
        }
        e.contains(m.entries())
    }
}

/// Span of all words in `gens`, seeded with I and closed under right
/// multiplication by each generator. Terminates since the dimension is ≤ n².
pub fn algebra_closure(n: usize, gens: &[Matrix]) -> AlgebraClosure {
    for g in gens {
        assert!(g.is_square() && g.rows() == n, "generator shape mismatch");
    }
    let mut ech = Echelon::new(n * n);
    let id = Matrix::identity(n);
    ech.insert(id.entries().to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        if ech.rank() == n * n {
            break;
        }
        for g in gens {
            let p = &w * g;
            if ech.insert(p.entries().to_vec()) {
                queue.push_back(p);
            }
        }
    }
    let basis: Vec<Matrix> = ech.rows().map(|r| Matrix::from_row_major(n, r)).collect();
    AlgebraClosure { dim: basis.len(), basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kfield::Scalar;

    #[test]
    fn identity_generates_scalars() {
        assert_eq!(algebra_closure(3, &[Matrix::identity(3)]).dim, 1);
    }

    #[test]
    fn diagonal_with_two_eigenvalues() {
        let d = Matrix::diag(&[Scalar::from_i64(1), Scalar::from_i64(2)]);
        assert_eq!(algebra_closure(2, &[d]).dim, 2);
    }

    #[test]
    fn nilpotent_and_transpose_generate_everything() {
        let e12 = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        let e21 = e12.transpose();
        let a = algebra_closure(2, &[e12, e21]);
        assert_eq!(a.dim, 4);
        assert!(a.contains(&Matrix::from_i64_rows(&[&[3, 1], &[4, 1]])));
    }

    #[test]
    fn closure_is_multiplicatively_closed() {
        let j = Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
        let a = algebra_closure(3, &[j]);
        for x in &a.basis {
            for y in &a.basis {
                assert!(a.contains(&(x * y)));
            }
        }
    }
}
