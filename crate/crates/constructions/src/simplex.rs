use exact_linalg::{kernel, Matrix, Subspace};
use kfield::Scalar;
use tss_core::{suspension, Arrangement, RealizationWitness, Tss};

use crate::system::{eigenspace_construction, DecompositionSystem};
use crate::ConstructionError;

// Quotient coordinates of K^{n+1}/⟨γ⟩: e_1, …, e_n, with e_{n+1} = −(e_1 + … + e_n).
fn vertex(n: usize, i: usize) -> Vec<Scalar> {
    if i < n {
        (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
    } else {
        vec![Scalar::from_i64(-1); n]
    }
}

// α_i = (n+1)e_i* − γ* restricted to the quotient coordinates.
fn dual_vertex(n: usize, i: usize) -> Vec<Scalar> {
    if i < n {
        (0..n).map(|j| Scalar::from_i64(if i == j { n as i64 } else { -1 })).collect()
    } else {
        vec![Scalar::from_i64(-1); n]
    }
}

fn check_n(n: usize) -> Result<(), ConstructionError> {
    if n == 0 {
        return Err(ConstructionError::BadParams("n must be at least 1".into()));
    }
    Ok(())
}

/// The standard representation of Σ_{n+1} on adjacent transpositions:
/// permutation matrices for j < n−1; the last one swaps e_n with −Σe.
pub fn simplex_witness(n: usize) -> RealizationWitness {
    RealizationWitness::new(
        (0..n)
            .map(|j| {
                let mut cols: Vec<Vec<Scalar>> = (0..n).map(|i| vertex(n, i)).collect();
                if j + 1 < n {
                    cols.swap(j, j + 1);
                } else {
                    cols[n - 1] = vertex(n, n);
                }
                Matrix::from_columns(n, &cols)
            })
            .collect(),
    )
}

/// n+1 lines ℓ_i = ⟨e_i⟩ in Kⁿ with the strong permutation witness.
pub fn simplex_arrangement(n: usize) -> Result<Arrangement, ConstructionError> {
    check_n(n)?;
    let reps = (0..=n).map(|i| Matrix::from_columns(n, &[vertex(n, i)])).collect();
    Ok(Arrangement::new(n, 1, reps, Some(simplex_witness(n)), true)?)
}

fn hyperplane(n: usize, i: usize) -> Subspace {
    kernel(&Matrix::from_rows(vec![dual_vertex(n, i)]))
}

/// n+1 hyperplanes ker α_i in Kⁿ.
pub fn dual_simplex_arrangement(n: usize) -> Result<Arrangement, ConstructionError> {
    check_n(n)?;
    let planes: Vec<Subspace> = (0..=n).map(|i| hyperplane(n, i)).collect();
    Ok(Arrangement::from_planes(&planes, Some(simplex_witness(n)))?)
}

/// W_{i,1} = ℓ_i and W_{i,2} = ker α_i.
pub fn simplex_system(n: usize) -> Result<DecompositionSystem, ConstructionError> {
    check_n(n)?;
    let grid = (0..=n)
        .map(|i| vec![Subspace::from_vectors(n, &[vertex(n, i)]), hyperplane(n, i)])
        .collect();
    DecompositionSystem::new(grid, simplex_witness(n))
}

/// The eigenspace construction on the simplex system of dimension k−1:
/// A_i(v) = μv + (λ−μ)/n · α_i(v)·e_i.
pub fn ncsimplex(k: usize, lambda: &Scalar, mu: &Scalar) -> Result<Tss, ConstructionError> {
    if k < 2 {
        return Err(ConstructionError::BadParams("k must be at least 2".into()));
    }
    if lambda == mu {
        return Err(ConstructionError::EqualEigenvalues);
    }
    eigenspace_construction(&simplex_system(k - 1)?, &[lambda.clone(), mu.clone()])
}

/// Suspension of the simplex arrangement; n = 1 gives (λ ±1; 0 λ).
pub fn simplex_construction(n: usize, lambda: &Scalar) -> Result<Tss, ConstructionError> {
    Ok(suspension(&simplex_arrangement(n)?, lambda)?)
}
