use exact_linalg::Matrix;
use kfield::{alpha_sporadic, mu_sporadic, Scalar};
use tss_core::{RealizationWitness, Tss};

use crate::simplex::{ncsimplex, simplex_witness};
use crate::ConstructionError;

/// P = (1 b; 2 −1) and Q = (μ⁻¹ α+μb; 2μ⁻¹ −μ⁻¹) with b = (1−μ)/α.
pub fn sporadic_pq() -> (Matrix, Matrix) {
    let mu = mu_sporadic();
    let mu_inv = mu.inverse().expect("mu is nonzero");
    let alpha = alpha_sporadic();
    let b = (Scalar::one() - &mu) / &alpha;
    let p = Matrix::from_rows(vec![vec![Scalar::one(), b.clone()], vec![Scalar::from_i64(2), Scalar::from_i64(-1)]]);
    let q = Matrix::from_rows(vec![
        vec![mu_inv.clone(), &alpha + &(&mu * &b)],
        vec![&mu_inv * Scalar::from_i64(2), -&mu_inv],
    ]);
    (p, q)
}

/// The 4-element commutative set A_i = (νI X_i; 0 νI) with X₁ = I and
/// X₂, X₃, X₄ the 3-element noncommutative simplex set at (μ⁻¹, μ), where
/// 3μ² + 2μ + 3 = 0.
pub fn sporadic4(nu: &Scalar) -> Result<Tss, ConstructionError> {
    let mu = mu_sporadic();
    let lambda = mu.inverse().expect("mu is nonzero");
    let xs = ncsimplex(3, &lambda, &mu)?;
    let i2 = Matrix::identity(2);
    let top = Matrix::scalar(2, nu);
    let zero = Matrix::zeros(2, 2);
    let elements = std::iter::once(&i2)
        .chain(xs.elements())
        .map(|x| Matrix::block(&[&[&top, x], &[&zero, &top]]))
        .collect();
    let (p, q) = sporadic_pq();
    let mut witness = vec![p.direct_sum(&q)];
    witness.extend(simplex_witness(2).transpositions.iter().map(|s| s.direct_sum(s)));
    Ok(Tss::new(elements, Some(RealizationWitness::new(witness)))?)
}
