use exact_linalg::{inverse, Matrix, Subspace};
use kfield::Scalar;
use serde::{Deserialize, Serialize};
use tss_core::{RealizationWitness, Tss};

use crate::ConstructionError;

/// A k × p grid of subspaces W_{i,j}: each row direct-sums to Kⁿ and the
/// witness sends W_{i,j} to W_{s(i),j} for each adjacent transposition s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionSystem {
    pub n: usize,
    pub k: usize,
    pub parts: usize,
    pub subspaces: Vec<Vec<Subspace>>,
    pub witness: RealizationWitness,
}

impl DecompositionSystem {
    pub fn new(subspaces: Vec<Vec<Subspace>>, witness: RealizationWitness) -> Result<Self, ConstructionError> {
        let k = subspaces.len();
        let parts = subspaces.first().map_or(0, Vec::len);
        let n = subspaces.first().and_then(|r| r.first()).map_or(0, Subspace::ambient);
        if subspaces.iter().any(|r| r.len() != parts || r.iter().any(|w| w.ambient() != n)) {
            return Err(ConstructionError::BadParams("ragged decomposition grid".into()));
        }
        if witness.transpositions.len() != k.saturating_sub(1) {
            return Err(ConstructionError::BadParams("witness length must be k - 1".into()));
        }
        Ok(DecompositionSystem { n, k, parts, subspaces, witness })
    }

    /// Each row spans Kⁿ with dimensions adding up to n.
    pub fn rows_are_direct_sums(&self) -> bool {
        self.subspaces.iter().all(|row| {
            let dims: usize = row.iter().map(Subspace::dim).sum();
            let span = row.iter().fold(Subspace::zero(self.n), |acc, w| acc.sum(w));
            dims == self.n && span.is_full()
        })
    }

    /// Index of the first transposition whose witness fails to transport the grid.
    pub fn check_witness(&self) -> Result<(), usize> {
        for (j, p) in self.witness.transpositions.iter().enumerate() {
            for i in 0..self.k {
                let target = if i == j { j + 1 } else if i == j + 1 { j } else { i };
                for c in 0..self.parts {
                    if self.subspaces[i][c].image(p) != self.subspaces[target][c] {
                        return Err(j);
                    }
                }
            }
        }
        Ok(())
    }
}

/// The set with E_{λ_j}(A_i) = W_{i,j}, built as C_i·diag(λ_j I)·C_i⁻¹ from
/// the concatenated bases C_i of row i. The system's witness is reused.
pub fn eigenspace_construction(d: &DecompositionSystem, eigenvalues: &[Scalar]) -> Result<Tss, ConstructionError> {
    if eigenvalues.len() != d.parts {
        return Err(ConstructionError::BadParams(format!(
            "expected {} eigenvalues, got {}",
            d.parts,
            eigenvalues.len()
        )));
    }
    for (a, x) in eigenvalues.iter().enumerate() {
        if eigenvalues[a + 1..].contains(x) {
            return Err(ConstructionError::DuplicateEigenvalue);
        }
    }
    let mut elements = Vec::with_capacity(d.k);
    for row in &d.subspaces {
        let c = row.iter().skip(1).fold(row[0].basis().clone(), |acc, w| acc.hstack(w.basis()));
        let cinv = inverse(&c).map_err(|_| ConstructionError::BadParams("row is not a direct sum".into()))?;
        let diag: Vec<Scalar> =
            row.iter().zip(eigenvalues).flat_map(|(w, l)| std::iter::repeat_n(l.clone(), w.dim())).collect();
        elements.push(&(&c * &Matrix::diag(&diag)) * &cinv);
    }
    Ok(Tss::with_dim(d.n, elements, Some(d.witness.clone()))?)
}
