use std::fmt;

use kfield::Scalar;

use crate::Matrix;

/// Univariate polynomial over K, coefficients in ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    coeffs: Vec<Scalar>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    /// `x − c`.
    pub fn linear_root(c: &Scalar) -> Self {
        Polynomial::new(vec![-c, Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        self.coeffs
            .iter()
            .rev()
            .fold(Matrix::zeros(n, n), |acc, c| &(&acc * m) + &Matrix::scalar(n, c))
    }

    /// Synthetic division by `x − c`: (quotient, remainder).
    pub fn div_linear(&self, c: &Scalar) -> (Polynomial, Scalar) {
        if self.coeffs.is_empty() {
            return (Polynomial::zero(), Scalar::zero());
        }
        let mut q = vec![Scalar::zero(); self.coeffs.len() - 1];
        let mut carry = Scalar::zero();
        for i in (0..self.coeffs.len()).rev() {
            let v = &self.coeffs[i] + &(&carry * c);
            if i == 0 {
                return (Polynomial::new(q), v);
            }
            q[i - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mono = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            if d > 0 && c.is_one() {
                write!(f, "{mono}")?;
            } else if d == 0 {
                write!(f, "({c})")?;
            } else {
                write!(f, "({c})*{mono}")?;
            }
        }
        Ok(())
    }
}

/// Monic characteristic polynomial det(xI − M) by the Faddeev–LeVerrier
/// recurrence, which divides only by integers.
pub fn char_poly(m: &Matrix) -> Polynomial {
    assert!(m.is_square(), "char_poly of a non-square matrix");
    let n = m.rows();
    let mut c = vec![Scalar::zero(); n + 1];
    c[n] = Scalar::one();
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1}·I ;  c_{n−k} = −tr(A·M_k)/k
        mk = &(m * &mk) + &Matrix::scalar(n, &c[n - k + 1]);
        let t = (m * &mk).trace();
        c[n - k] = -(t * Scalar::from_frac(1, k as i64));
    }
    Polynomial::new(c)
}
