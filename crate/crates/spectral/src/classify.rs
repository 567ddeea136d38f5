use std::collections::BTreeMap;

use constructions::Weight;
use exact_linalg::{algebra_closure, kernel, Matrix, Subspace};
use itertools::Itertools;
use kfield::Scalar;
use serde::{Deserialize, Serialize};
use tss_core::{verify_tss, RealizationWitness, Tss};

use crate::discover::{discover_eigenvalues, Eigenvalues};
use crate::SpectralError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ClassVerdict {
    Irreducible { weight: Weight },
    ReducibleWitness { subspace: Option<Subspace> },
    NonDiagonalizable,
    NotClassified,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationResult {
    pub verdict: ClassVerdict,
    pub dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub partition: Option<String>,
}

impl ClassificationResult {
    fn new(verdict: ClassVerdict, dimension: usize) -> Self {
        let partition = match &verdict {
            ClassVerdict::Irreducible { weight } => Some(weight.partition_string()),
            _ => None,
        };
        ClassificationResult { verdict, dimension, partition }
    }

    pub fn is_irreducible(&self) -> bool {
        matches!(self.verdict, ClassVerdict::Irreducible { .. })
    }
}

/// The matrix of A restricted to an invariant subspace, in its canonical basis.
pub fn restrict(a: &Matrix, w: &Subspace) -> Matrix {
    let cols: Vec<Vec<Scalar>> = w
        .basis_vectors()
        .iter()
        .map(|b| w.coordinates(&a.mul_vec(b)).expect("subspace is invariant"))
        .collect();
    Matrix::from_columns(w.dim(), &cols)
}

fn lift(w: &Subspace, coords: &Subspace) -> Subspace {
    Subspace::span(&(w.basis() * coords.basis()))
}

enum Split {
    Done(Vec<(Subspace, Vec<Scalar>)>),
    NonDiagonalizable,
    Incomplete,
}

// Common eigenspaces of the whole set, each tagged by its k-tuple of values.
fn simultaneous_eigenspaces(t: &Tss, pool: &[Scalar]) -> Split {
    let mut blocks = vec![(Subspace::full(t.n()), Vec::new())];
    for a in t.elements() {
        let mut next = Vec::new();
        for (w, tag) in blocks {
            let m = restrict(a, &w);
            // diagonal entries settle the triangular cases outside the pool
            let extra: Vec<Scalar> = pool.iter().cloned().chain((0..m.rows()).map(|r| m.get(r, r).clone())).collect();
            let vals = match discover_eigenvalues(&m, &extra) {
                Eigenvalues::Complete(v) => v,
                Eigenvalues::Incomplete { .. } => return Split::Incomplete,
            };
            let mut total = 0;
            for l in vals.into_iter().dedup() {
                let e = kernel(&(&m - &Matrix::scalar(m.rows(), &l)));
                total += e.dim();
                let mut tag = tag.clone();
                tag.push(l);
                next.push((lift(&w, &e), tag));
            }
            if total < w.dim() {
                return Split::NonDiagonalizable;
            }
        }
        blocks = next;
    }
    Split::Done(blocks)
}

// Smallest subspace containing v and invariant under every generator.
fn generated_module(v: Vec<Scalar>, gens: &[Matrix]) -> Subspace {
    let n = v.len();
    let mut space = Subspace::from_vectors(n, std::slice::from_ref(&v));
    let mut frontier = vec![v];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = g.mul_vec(&x);
            let bigger = space.sum(&Subspace::from_vectors(n, std::slice::from_ref(&y)));
            if bigger.dim() > space.dim() {
                space = bigger;
                frontier.push(y);
            }
        }
    }
    space
}

/// Classifies a commutative set by simultaneous diagonalization.
///
/// The common eigenlines carry k-tuples of eigenvalues; the set is irreducible
/// exactly when those tuples form one free Σ_k-orbit of a weight.
pub fn classify_commutative(t: &Tss, pool: &[Scalar]) -> Result<ClassificationResult, SpectralError> {
    if !t.is_commutative() {
        return Err(SpectralError::NotCommutative);
    }
    let n = t.n();
    let blocks = match simultaneous_eigenspaces(t, pool) {
        Split::Done(b) => b,
        Split::NonDiagonalizable => return Ok(ClassificationResult::new(ClassVerdict::NonDiagonalizable, n)),
        Split::Incomplete => return Ok(ClassificationResult::new(ClassVerdict::NotClassified, n)),
    };
    // group tuples by their sorted value multiset
    let mut classes: BTreeMap<Vec<Scalar>, Vec<&Subspace>> = BTreeMap::new();
    for (w, tag) in &blocks {
        let mut key = tag.clone();
        key.sort();
        classes.entry(key).or_default().push(w);
    }
    if classes.len() > 1 {
        let (_, ws) = classes.iter().next().expect("nonempty");
        let span = ws.iter().fold(Subspace::zero(n), |acc, w| acc.sum(w));
        return Ok(ClassificationResult::new(ClassVerdict::ReducibleWitness { subspace: Some(span) }, n));
    }
    let Some((key, ws)) = classes.into_iter().next() else {
        return Ok(ClassificationResult::new(ClassVerdict::NotClassified, n));
    };
    let weight = Weight::new(key);
    if ws.iter().all(|w| w.dim() == 1) && ws.len() == weight.multinomial() {
        return Ok(ClassificationResult::new(ClassVerdict::Irreducible { weight }, n));
    }
    // one orbit with repeated lines: the orbit of a single vector is proper
    let witness = match t.witness().filter(|_| t.check_witness().is_ok()) {
        Some(w) => Some(w.clone()),
        None => verify_tss(t).witness,
    };
    let subspace = witness.map(|w| {
        let v = ws[0].basis_vectors().remove(0);
        let gens: Vec<Matrix> = t.elements().iter().chain(&w.transpositions).cloned().collect();
        generated_module(v, &gens)
    });
    Ok(ClassificationResult::new(ClassVerdict::ReducibleWitness { subspace: subspace.filter(|s| !s.is_full()) }, n))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Irreducibility {
    FullAlgebra { dim: usize },
    ProperAlgebra { dim: usize, invariant_subspace: Option<Subspace> },
}

impl Irreducibility {
    pub fn is_full(&self) -> bool {
        matches!(self, Irreducibility::FullAlgebra { .. })
    }
}

/// Dimension of the algebra generated by the set and its witness; the full
/// matrix algebra certifies that no subspace is invariant under both.
///
/// When the algebra is proper, eigenvectors of each generator are tried as
/// seeds for an invariant subspace over K.
pub fn irreducibility_certificate(t: &Tss, w: &RealizationWitness, pool: &[Scalar]) -> Irreducibility {
    let n = t.n();
    let gens: Vec<Matrix> = t.elements().iter().chain(&w.transpositions).cloned().collect();
    let closure = algebra_closure(n, &gens);
    if closure.dim == n * n {
        return Irreducibility::FullAlgebra { dim: closure.dim };
    }
    let mut found = None;
    'search: for g in &gens {
        let extra: Vec<Scalar> = pool.iter().cloned().chain((0..n).map(|r| g.get(r, r).clone())).collect();
        for l in discover_eigenvalues(g, &extra).distinct() {
            for v in kernel(&(g - &Matrix::scalar(n, &l))).basis_vectors() {
                let m = generated_module(v, &gens);
                if !m.is_full() {
                    found = Some(m);
                    break 'search;
                }
            }
        }
    }
    Irreducibility::ProperAlgebra { dim: closure.dim, invariant_subspace: found }
}

#[cfg(test)]
mod tests {
    use super::*;
    use constructions::{partition_construction, simplex_construction, standard};

    fn s(x: i64) -> Scalar {
        Scalar::from_i64(x)
    }

    #[test]
    fn standard_is_irreducible_one_two() {
        let r = classify_commutative(&standard(3, &s(1), &s(2)).unwrap(), &[]).unwrap();
        assert_eq!(r.partition.as_deref(), Some("1≤2"));
        assert_eq!(r.verdict, ClassVerdict::Irreducible { weight: Weight::new(vec![s(1), s(1), s(2)]) });
    }

    #[test]
    fn suspension_does_not_diagonalize() {
        let t = simplex_construction(3, &s(2)).unwrap();
        assert_eq!(classify_commutative(&t, &[]).unwrap().verdict, ClassVerdict::NonDiagonalizable);
    }

    #[test]
    fn direct_sum_is_reducible() {
        let a = standard(2, &s(1), &s(2)).unwrap();
        let b = standard(2, &s(1), &s(3)).unwrap();
        let elements = a.elements().iter().zip(b.elements()).map(|(x, y)| x.direct_sum(y)).collect();
        let t = Tss::new(elements, None).unwrap();
        match classify_commutative(&t, &[]).unwrap().verdict {
            ClassVerdict::ReducibleWitness { subspace: Some(w) } => {
                assert_eq!(w.dim(), 2);
                assert!(t.elements().iter().all(|m| w.is_invariant_under(m)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn doubled_orbit_gives_module_witness() {
        let a = partition_construction(&Weight::new(vec![s(1), s(2)]));
        let elements = a.elements().iter().map(|x| x.direct_sum(x)).collect();
        let witness = RealizationWitness::new(a.witness().unwrap().transpositions.iter().map(|p| p.direct_sum(p)).collect());
        let t = Tss::new(elements, Some(witness)).unwrap();
        match classify_commutative(&t, &[]).unwrap().verdict {
            ClassVerdict::ReducibleWitness { subspace: Some(w) } => assert_eq!(w.dim(), 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn noncommuting_input_is_rejected() {
        let t = constructions::ncsimplex(3, &s(1), &s(2)).unwrap();
        assert_eq!(classify_commutative(&t, &[]), Err(SpectralError::NotCommutative));
    }

    #[test]
    fn certificates() {
        let t = standard(3, &s(1), &s(2)).unwrap();
        assert_eq!(irreducibility_certificate(&t, t.witness().unwrap(), &[]), Irreducibility::FullAlgebra { dim: 9 });

        let sus = simplex_construction(3, &s(2)).unwrap();
        let top = Subspace::span(&Matrix::identity(4).submatrix(0, 4, 0, 3));
        match irreducibility_certificate(&sus, sus.witness().unwrap(), &[]) {
            Irreducibility::ProperAlgebra { invariant_subspace: Some(w), .. } => assert_eq!(w, top),
            other => panic!("unexpected {other:?}"),
        }

        let deg = Tss::degenerate(Matrix::scalar(2, &s(5)), 3);
        let e1 = Subspace::from_vectors(2, &[vec![s(1), s(0)]]);
        assert_eq!(
            irreducibility_certificate(&deg, deg.witness().unwrap(), &[]),
            Irreducibility::ProperAlgebra { dim: 1, invariant_subspace: Some(e1) }
        );
    }
}
