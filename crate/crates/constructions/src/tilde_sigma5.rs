use exact_linalg::{inverse, Matrix, Subspace};
use kfield::Scalar;
use tss_core::{Arrangement, RealizationWitness, Tss};

use crate::system::DecompositionSystem;
use crate::ConstructionError;

fn sc(s: &str) -> Scalar {
    s.parse().expect("valid scalar literal")
}

fn m2(a: &str, b: &str, c: &str, d: &str) -> Matrix {
    Matrix::from_rows(vec![vec![sc(a), sc(b)], vec![sc(c), sc(d)]])
}

/// The 2 × 2 blocks from which the four generators are assembled.
#[derive(Clone, Debug)]
pub struct TildeSigma5Blocks {
    pub p12: Matrix,
    pub p23: Matrix,
    pub p34: Matrix,
    pub q34: Matrix,
    pub p45: Matrix,
}

impl TildeSigma5Blocks {
    pub fn new() -> Self {
        let p12 = m2("0", "-1", "1", "0");
        TildeSigma5Blocks {
            p23: p12.clone(),
            p12,
            p34: m2("0", "-zeta^2", "-zeta", "0"),
            q34: m2("0", "-zeta", "-zeta^2", "0"),
            p45: m2("i*sqrt2/sqrt3", "i/sqrt3", "i/sqrt3", "-i*sqrt2/sqrt3"),
        }
    }
}

impl Default for TildeSigma5Blocks {
    fn default() -> Self {
        Self::new()
    }
}

/// T₁, …, T₄ of the 4-dimensional basic representation.
pub fn tilde_sigma5_rep() -> Vec<Matrix> {
    let b = TildeSigma5Blocks::new();
    let z = Matrix::zeros(2, 2);
    let neg = -&b.p23;
    vec![
        Matrix::block(&[&[&z, &b.p12], &[&b.p12, &z]]),
        Matrix::block(&[&[&b.p23, &neg], &[&z, &neg]]),
        b.p34.direct_sum(&b.q34),
        b.p45.direct_sum(&b.p45),
    ]
}

fn a4() -> Matrix {
    Matrix::diag(&[Scalar::zeta(), sc("zeta_inv")])
}

fn a5() -> Matrix {
    m2("(3+i*sqrt3)/6", "sqrt2*i/sqrt3", "sqrt2*i/sqrt3", "(3-i*sqrt3)/6")
}

/// W₁ = (I;0), W₂ = (0;I), W₃ = (I;I), W₄ = (A₄;I), W₅ = (A₅;I), with the
/// generators as witness.
pub fn tilde_sigma5_arrangement() -> Arrangement {
    let i = Matrix::identity(2);
    let z = Matrix::zeros(2, 2);
    let reps = vec![i.vstack(&z), z.vstack(&i), i.vstack(&i), a4().vstack(&i), a5().vstack(&i)];
    Arrangement::new(4, 2, reps, Some(RealizationWitness::new(tilde_sigma5_rep())), false)
        .expect("printed representatives have full rank")
}

/// The complement of W₁ that is invariant under the stabilizer of index 1.
pub fn w1_complement() -> Matrix {
    Matrix::from_rows(vec![
        vec![sc("i/(2*sqrt6)"), sc("2*i/(sqrt3+3*i)")],
        vec![sc("2/(3+i*sqrt3)"), sc("i/(2*sqrt6)")],
        vec![sc("0"), sc("1")],
        vec![sc("1"), sc("0")],
    ])
}

/// T_{σ_i} = T_{i−1}⋯T₁ (0-based i: generators i−1 down to 0), sending W₁ to W_i.
pub fn transport(i: usize) -> Matrix {
    let t = tilde_sigma5_rep();
    (0..i).rev().fold(Matrix::identity(4), |acc, g| &acc * &t[g])
}

/// Rows (W_i, W_i^a) with W_i^a = T_{σ_i}·W₁^a.
pub fn tilde_sigma5_system() -> DecompositionSystem {
    let w1 = Matrix::identity(4).submatrix(0, 4, 0, 2);
    let w1a = w1_complement();
    let grid = (0..5)
        .map(|i| {
            let t = transport(i);
            vec![Subspace::span(&(&t * &w1)), Subspace::span(&(&t * &w1a))]
        })
        .collect();
    DecompositionSystem::new(grid, RealizationWitness::new(tilde_sigma5_rep())).expect("five rows, four generators")
}

/// A_i = T_{σ_i}·M·diag(λI, μI)·M⁻¹·T_{σ_i}⁻¹ with M = (W₁ | W₁^a).
pub fn tilde_sigma5_construction(lambda: &Scalar, mu: &Scalar) -> Result<Tss, ConstructionError> {
    if lambda == mu {
        return Err(ConstructionError::EqualEigenvalues);
    }
    let m = Matrix::identity(4).submatrix(0, 4, 0, 2).hstack(&w1_complement());
    let minv = inverse(&m).expect("W1 and its complement span K^4");
    let d = Matrix::diag(&[lambda.clone(), lambda.clone(), mu.clone(), mu.clone()]);
    let a1 = &(&m * &d) * &minv;
    let elements = (0..5)
        .map(|i| {
            let t = transport(i);
            let tinv = inverse(&t).expect("generators are invertible");
            &(&t * &a1) * &tinv
        })
        .collect();
    Ok(Tss::new(elements, Some(RealizationWitness::new(tilde_sigma5_rep())))?)
}
