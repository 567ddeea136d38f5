use std::collections::HashMap;

use exact_linalg::Matrix;
use itertools::Itertools;
use kfield::Scalar;
use serde::{Deserialize, Serialize};
use tss_core::perm::{self, Perm};
use tss_core::{realize_permutation, RealizationWitness, Tss};

use crate::ConstructionError;

/// A function [k] → K. Its level sets form the induced partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub values: Vec<Scalar>,
}

impl Weight {
    pub fn new(values: Vec<Scalar>) -> Self {
        Weight { values }
    }

    pub fn k(&self) -> usize {
        self.values.len()
    }

    /// Level-set sizes, ascending.
    pub fn partition(&self) -> Vec<usize> {
        let mut counts: Vec<usize> = self.values.iter().counts().into_values().collect();
        counts.sort_unstable();
        counts
    }

    /// Level-set sizes joined by "≤", e.g. "1≤2".
    pub fn partition_string(&self) -> String {
        self.partition().iter().join("≤")
    }

    /// Representative with values sorted by the coordinate order on K.
    pub fn canonical(&self) -> Weight {
        let mut v = self.values.clone();
        v.sort();
        Weight { values: v }
    }

    pub fn is_injective(&self) -> bool {
        self.values.iter().all_unique()
    }

    /// k!/(k₁!⋯k_m!).
    pub fn multinomial(&self) -> usize {
        let fact = |n: usize| (1..=n).product::<usize>();
        self.partition().iter().fold(fact(self.k()), |acc, &p| acc / fact(p))
    }
}

fn permutation_matrix_from_images(images: &[usize]) -> Matrix {
    // column b has its 1 in row images[b]
    let n = images.len();
    let mut m = Matrix::zeros(n, n);
    for (b, &r) in images.iter().enumerate() {
        m.set(r, b, Scalar::one());
    }
    m
}

/// k × k diagonal matrices with ν in slot i and λ elsewhere, realized by
/// permutation matrices.
pub fn standard(k: usize, lambda: &Scalar, nu: &Scalar) -> Result<Tss, ConstructionError> {
    if lambda == nu {
        return Err(ConstructionError::EqualEigenvalues);
    }
    let elements = (0..k)
        .map(|i| Matrix::diag(&(0..k).map(|j| if i == j { nu.clone() } else { lambda.clone() }).collect::<Vec<_>>()))
        .collect();
    let witness = (0..k.saturating_sub(1)).map(|j| permutation_matrix_from_images(&perm::adjacent(k, j))).collect();
    Ok(Tss::new(elements, Some(RealizationWitness::new(witness)))?)
}

/// Diagonal set on the orbit basis {λ∘σ}, with A_i(f) = f(i)·f and the
/// witness acting by f ↦ f∘τ⁻¹. Basis functions appear in order of first
/// occurrence over lexicographically ordered σ.
pub fn partition_construction(w: &Weight) -> Tss {
    let k = w.k();
    let mut funcs: Vec<Vec<Scalar>> = Vec::new();
    let mut index: HashMap<Vec<Scalar>, usize> = HashMap::new();
    for sigma in perm::all_permutations(k) {
        let f: Vec<Scalar> = sigma.iter().map(|&s| w.values[s].clone()).collect();
        if !index.contains_key(&f) {
            index.insert(f.clone(), funcs.len());
            funcs.push(f);
        }
    }
    let elements = (0..k)
        .map(|i| Matrix::diag(&funcs.iter().map(|f| f[i].clone()).collect::<Vec<_>>()))
        .collect();
    let witness = (0..k.saturating_sub(1))
        .map(|j| {
            let images: Vec<usize> = funcs
                .iter()
                .map(|f| {
                    let mut g = f.clone();
                    g.swap(j, j + 1);
                    index[&g]
                })
                .collect();
            permutation_matrix_from_images(&images)
        })
        .collect();
    Tss::with_dim(funcs.len(), elements, Some(RealizationWitness::new(witness))).expect("shapes agree")
}

/// The partition construction of an injective weight, acting on K[Σ_k].
pub fn permutation_type(values: &[Scalar]) -> Result<Tss, ConstructionError> {
    let w = Weight::new(values.to_vec());
    if !w.is_injective() {
        return Err(ConstructionError::NotInjective);
    }
    Ok(partition_construction(&w))
}

// Sends S (sorted) monotonically onto {k, …, k+p−1} and its complement
// monotonically onto {0, …, k−1}: the shortest such permutation.
fn sigma_s(s: &[usize], k: usize, p: usize) -> Perm {
    let mut sigma = vec![0; k + p];
    let (mut lo, mut hi) = (0, k);
    for x in 0..k + p {
        if s.contains(&x) {
            sigma[x] = hi;
            hi += 1;
        } else {
            sigma[x] = lo;
            lo += 1;
        }
    }
    sigma
}

/// Ind_k^{k+p}(λ): acts on K[p-subsets of [k+p]] ⊗ V by
/// Ã_i(S ⊗ v) = S ⊗ A_{σ_S(i)}(v), where A_i = λI for i beyond k.
///
/// Subsets are ordered lexicographically and the basis is S-major.
/// A set with k = 0 is accepted when it carries its dimension.
pub fn induction(t: &Tss, p: usize, lambda: &Scalar) -> Result<Tss, ConstructionError> {
    let (k, n) = (t.k(), t.n());
    let w = t.witness().ok_or(ConstructionError::MissingWitness)?;
    if t.check_witness().is_err() && k > 1 {
        return Err(ConstructionError::MissingWitness);
    }
    let subsets: Vec<Vec<usize>> = (0..k + p).combinations(p).collect();
    let index: HashMap<&[usize], usize> = subsets.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    let sigmas: Vec<Perm> = subsets.iter().map(|s| sigma_s(s, k, p)).collect();
    let lam = Matrix::scalar(n, lambda);
    let base = |j: usize| if j < k { &t.elements()[j] } else { &lam };

    let m = subsets.len();
    let elements: Vec<Matrix> = (0..k + p)
        .map(|i| {
            let blocks: Vec<&Matrix> = sigmas.iter().map(|sig| base(sig[i])).collect();
            block_diag(&blocks, n)
        })
        .collect();

    let realize = |pi: &[usize]| -> Matrix {
        if perm::adjacent_word(pi).is_empty() {
            Matrix::identity(n)
        } else {
            realize_permutation(w, pi)
        }
    };
    let witness = (0..(k + p).saturating_sub(1))
        .map(|j| {
            let tau = perm::adjacent(k + p, j);
            let mut r = Matrix::zeros(m * n, m * n);
            for (si, s) in subsets.iter().enumerate() {
                let mut ts: Vec<usize> = s.iter().map(|&x| tau[x]).collect();
                ts.sort_unstable();
                let ti = index[ts.as_slice()];
                // π = σ_{τS} ∘ τ ∘ σ_S⁻¹ preserves [0, k)
                let pi = perm::compose(&sigmas[ti], &perm::compose(&tau, &perm::inverse(&sigmas[si])));
                let block = realize(&pi[..k]);
                for a in 0..n {
                    for b in 0..n {
                        r.set(ti * n + a, si * n + b, block.get(a, b).clone());
                    }
                }
            }
            r
        })
        .collect();
    Ok(Tss::with_dim(m * n, elements, Some(RealizationWitness::new(witness)))?)
}

fn block_diag(blocks: &[&Matrix], n: usize) -> Matrix {
    let m = blocks.len();
    let mut out = Matrix::zeros(m * n, m * n);
    for (b, blk) in blocks.iter().enumerate() {
        for r in 0..n {
            for c in 0..n {
                out.set(b * n + r, b * n + c, blk.get(r, c).clone());
            }
        }
    }
    out
}
