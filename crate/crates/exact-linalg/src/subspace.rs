use kfield::Scalar;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::echelon::{kernel, Echelon};
use crate::Matrix;

/// A subspace of Kⁿ, stored by its canonical basis.
///
/// The basis matrix is the transpose of the reduced row echelon form of any
/// spanning set, so two subspaces are equal iff their stored bases are equal.
/// Column j has a 1 in row `pivots[j]` and every other column is 0 there.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    fn from_echelon(e: &Echelon) -> Self {
        Subspace { ambient: e.ncols(), basis: e.to_matrix().transpose(), pivots: e.pivots() }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::zeros(n, 0), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace { ambient: n, basis: Matrix::identity(n), pivots: (0..n).collect() }
    }

    /// Column space of `m`.
    pub fn span(m: &Matrix) -> Self {
        Self::from_echelon(&Echelon::from_matrix_rows(&m.transpose()))
    }

    pub fn from_vectors(n: usize, vs: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon::new(n);
        for v in vs {
            e.insert(v.clone());
        }
        Self::from_echelon(&e)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// `ambient × dim` matrix of canonical basis columns.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.columns()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn echelon(&self) -> Echelon {
        Echelon::from_matrix_rows(&self.basis.transpose())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    /// Coefficients of `v` in the canonical basis, or None if `v ∉ self`.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        (self.basis.mul_vec(&c) == v).then_some(c)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        other.basis.columns().iter().all(|v| self.contains_vector(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Subspace::span(&self.basis.hstack(&other.basis))
    }

    /// Intersection via the kernel of the juxtaposition `(B_U | −B_V)`.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        let k = kernel(&self.basis.hstack(&-&other.basis));
        let top = k.basis.submatrix(0, self.dim(), 0, k.dim());
        Subspace::span(&(&self.basis * &top))
    }

    /// True when `self ⊕ other` is the whole space.
    pub fn is_complement(&self, other: &Subspace) -> bool {
        self.dim() + other.dim() == self.ambient && self.intersect(other).is_zero()
    }

    /// Image `M·self`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(&(m * &self.basis))
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.contains(&self.image(m))
    }

    /// Rows spanning the annihilator: `N·v = 0` iff `v ∈ self`.
    pub fn annihilator(&self) -> Matrix {
        let k = kernel(&self.basis.transpose());
        k.basis().transpose()
    }

    /// The annihilator as a subspace of the dual space (identified with Kⁿ).
    pub fn annihilator_space(&self) -> Subspace {
        kernel(&self.basis.transpose())
    }

    /// Invertible `n × n` matrix whose first columns are this basis, followed
    /// by the standard basis vectors not yet in the span, in index order.
    pub fn extended_basis(&self) -> Matrix {
        let mut e = self.echelon();
        let mut extra = Vec::new();
        for j in 0..self.ambient {
            let mut v = vec![Scalar::zero(); self.ambient];
            v[j] = Scalar::one();
            if e.insert(v.clone()) {
                extra.push(v);
            }
        }
        self.basis.hstack(&Matrix::from_columns(self.ambient, &extra))
    }
}

impl Serialize for Subspace {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.basis.serialize(s)
    }
}

/// Deserializes any spanning matrix and canonicalizes it.
impl<'de> Deserialize<'de> for Subspace {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Subspace::span(&Matrix::deserialize(d)?))
    }
}
