use exact_linalg::{kernel, Matrix, Subspace};
use itertools::Itertools;
use kfield::Scalar;
use serde::{Deserialize, Serialize};
use tss_core::Tss;

use crate::SpectralError;

/// E(A)_{λ,c} = ker (A − λI)^c.
pub fn generalized_eigenspace(a: &Matrix, lambda: &Scalar, c: u32) -> Subspace {
    assert!(c >= 1, "degree must be at least 1");
    let shifted = a - &Matrix::scalar(a.rows(), lambda);
    kernel(&shifted.pow(c))
}

/// E_{λ,1} ≤ E_{λ,2} ≤ … up to the first degree d with E_{λ,d} = E_{λ,d+1}.
///
/// `spaces[c-1]` is E_{λ,c}; the list is empty when λ is not an eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenFiltration {
    pub eigenvalue: Scalar,
    pub spaces: Vec<Subspace>,
}

impl EigenFiltration {
    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    /// The degree d at which the filtration stabilizes.
    pub fn stable_degree(&self) -> usize {
        self.spaces.len()
    }

    /// dim E_c/E_{c−1}, for c = 1..d.
    pub fn jumps(&self) -> Vec<usize> {
        let dims = self.dims();
        std::iter::once(0).chain(dims.iter().copied()).tuple_windows().map(|(a, b)| b - a).collect()
    }

    /// Jumps weakly decrease, and dim E_c ≥ c·(dim E_c/E_{c−1}).
    pub fn jordan_inequalities_hold(&self) -> bool {
        let jumps = self.jumps();
        let dims = self.dims();
        jumps.windows(2).all(|w| w[0] >= w[1]) && jumps.iter().zip(&dims).enumerate().all(|(c, (j, d))| *d >= (c + 1) * j)
    }
}

pub fn filtration(a: &Matrix, lambda: &Scalar) -> EigenFiltration {
    let n = a.rows();
    let shifted = a - &Matrix::scalar(n, lambda);
    let mut spaces: Vec<Subspace> = Vec::new();
    let mut power = Matrix::identity(n);
    let mut prev = Subspace::zero(n);
    loop {
        power = &power * &shifted;
        let e = kernel(&power);
        if e == prev {
            break;
        }
        prev = e.clone();
        spaces.push(e);
    }
    let f = EigenFiltration { eigenvalue: lambda.clone(), spaces };
    assert!(f.jordan_inequalities_hold(), "Jordan inequalities fail for {:?}", f.dims());
    f
}

/// E^S_{λ,c}: the intersection of E^i_{λ,c} over i ∈ S. Empty S gives Kⁿ.
pub fn jfold(t: &Tss, lambda: &Scalar, c: u32, s: &[usize]) -> Subspace {
    s.iter().fold(Subspace::full(t.n()), |acc, &i| {
        assert!(i < t.k(), "index {i} out of range");
        acc.intersect(&generalized_eigenspace(&t.elements()[i], lambda, c))
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DepthProfile {
    pub eigenvalue: Scalar,
    /// mu[j-1] = μ_λ(j) = dim E^{[j]}_λ.
    pub mu: Vec<usize>,
    pub depth: usize,
    /// Every j-subset gave the same dimension (checked when k ≤ 5).
    pub subset_independent: bool,
}

/// Subset sizes up to which every subset is cross-checked.
pub const CROSS_CHECK_MAX_K: usize = 5;

pub fn depth_profile(t: &Tss, lambda: &Scalar) -> Result<DepthProfile, SpectralError> {
    let k = t.k();
    let eigen: Vec<Subspace> = t.elements().iter().map(|a| generalized_eigenspace(a, lambda, 1)).collect();
    if eigen.iter().all(Subspace::is_zero) {
        return Err(SpectralError::NotAnEigenvalue(lambda.clone()));
    }
    let meet = |s: &[usize]| s.iter().fold(Subspace::full(t.n()), |acc, &i| acc.intersect(&eigen[i])).dim();
    let mu: Vec<usize> = (1..=k).map(|j| meet(&(0..j).collect::<Vec<_>>())).collect();
    let subset_independent = k > CROSS_CHECK_MAX_K
        || (1..=k).all(|j| (0..k).combinations(j).all(|s| meet(&s) == mu[j - 1]));
    let depth = mu.iter().rposition(|&m| m > 0).map_or(0, |p| p + 1);
    Ok(DepthProfile { eigenvalue: lambda.clone(), mu, depth, subset_independent })
}

/// Whether the p-fold λ-eigenspaces over all p-subsets form a direct sum
/// decomposition of Kⁿ.
pub fn pfold_decomposition_is_direct(t: &Tss, lambda: &Scalar, p: usize) -> bool {
    let spaces: Vec<Subspace> = (0..t.k()).combinations(p).map(|s| jfold(t, lambda, 1, &s)).collect();
    let total: usize = spaces.iter().map(Subspace::dim).sum();
    let span = spaces.iter().fold(Subspace::zero(t.n()), |acc, w| acc.sum(w));
    total == t.n() && span.is_full()
}
