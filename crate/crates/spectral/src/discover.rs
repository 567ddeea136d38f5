use exact_linalg::{char_poly, Matrix, Polynomial};
use kfield::Scalar;
use serde::{Deserialize, Serialize};

/// Roots of the characteristic polynomial counted with multiplicity, or the
/// roots found so far together with the unresolved factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Eigenvalues {
    Complete(Vec<Scalar>),
    Incomplete { found: Vec<Scalar>, residual: Vec<Scalar> },
}

impl Eigenvalues {
    pub fn is_complete(&self) -> bool {
        matches!(self, Eigenvalues::Complete(_))
    }

    pub fn found(&self) -> &[Scalar] {
        match self {
            Eigenvalues::Complete(v) => v,
            Eigenvalues::Incomplete { found, .. } => found,
        }
    }

    /// Distinct values in sorted order.
    pub fn distinct(&self) -> Vec<Scalar> {
        let mut v = self.found().to_vec();
        v.dedup();
        v
    }
}

/// −3..3 together with ζ and ζ⁻¹.
pub fn default_pool() -> Vec<Scalar> {
    let z = Scalar::zeta();
    let zinv = z.inverse().expect("zeta is nonzero");
    (-3..=3).map(Scalar::from_i64).chain([z, zinv]).collect()
}

fn quadratic_roots(c: &[Scalar]) -> Option<[Scalar; 2]> {
    // c0 + c1 x + c2 x²
    let two = Scalar::from_i64(2);
    let disc = &c[1] * &c[1] - Scalar::from_i64(4) * &c[0] * &c[2];
    let root = disc.sqrt_restricted().ok()?;
    let den = (&two * &c[2]).inverse().ok()?;
    Some([(-&c[1] - &root) * &den, (-&c[1] + &root) * &den])
}

/// Trial division of the characteristic polynomial by x − c over the default
/// pool and `extra`, then the quadratic formula on a residual of degree ≤ 2.
pub fn discover_eigenvalues(a: &Matrix, extra: &[Scalar]) -> Eigenvalues {
    let mut p: Polynomial = char_poly(a);
    let mut found = Vec::new();
    for c in default_pool().iter().chain(extra) {
        while p.degree().unwrap_or(0) > 0 {
            let (q, r) = p.div_linear(c);
            if !r.is_zero() {
                break;
            }
            found.push(c.clone());
            p = q;
        }
    }
    let residual = p.coeffs().to_vec();
    let solved = match p.degree().unwrap_or(0) {
        0 => Some(vec![]),
        1 => Some(vec![-&residual[0] / &residual[1]]),
        2 => quadratic_roots(&residual).map(|r| r.to_vec()),
        _ => None,
    };
    match solved {
        Some(roots) => {
            found.extend(roots);
            found.sort();
            Eigenvalues::Complete(found)
        }
        None => {
            found.sort();
            Eigenvalues::Incomplete { found, residual }
        }
    }
}
