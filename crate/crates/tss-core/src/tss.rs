use exact_linalg::{det, det_inverse, intertwiner_space, invertible_in_space, Matrix, Subspace};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::perm;
use crate::TssError;

/// Matrices realizing the adjacent transpositions: entry j realizes (j, j+1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationWitness {
    pub transpositions: Vec<Matrix>,
}

impl RealizationWitness {
    pub fn new(transpositions: Vec<Matrix>) -> Self {
        RealizationWitness { transpositions }
    }

    pub fn identities(n: usize, k: usize) -> Self {
        RealizationWitness { transpositions: vec![Matrix::identity(n); k.saturating_sub(1)] }
    }
}

/// A finite indexed set of n × n matrices claimed to be totally symmetric.
///
/// The index set [k] is kept even when entries coincide, so a degenerate set
/// remembers its cardinality; see [`Tss::is_degenerate`] and [`Tss::collapsed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tss {
    n: usize,
    elements: Vec<Matrix>,
    witness: Option<RealizationWitness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    TotallySymmetric,
    NotTotallySymmetric,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<RealizationWitness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub failing_transposition: Option<usize>,
}

impl Certificate {
    pub fn is_symmetric(&self) -> bool {
        self.verdict != Verdict::NotTotallySymmetric
    }
}

impl Tss {
    pub fn new(elements: Vec<Matrix>, witness: Option<RealizationWitness>) -> Result<Tss, TssError> {
        let n = elements.first().map_or(0, Matrix::rows);
        Self::with_dim(n, elements, witness)
    }

    /// Like `new`, but also valid for an empty element list.
    pub fn with_dim(n: usize, elements: Vec<Matrix>, witness: Option<RealizationWitness>) -> Result<Tss, TssError> {
        for (i, m) in elements.iter().enumerate() {
            if m.rows() != n || m.cols() != n {
                return Err(TssError::Shape(format!("element {i} is {}x{}, expected {n}x{n}", m.rows(), m.cols())));
            }
        }
        if let Some(w) = &witness {
            if w.transpositions.len() != elements.len().saturating_sub(1) {
                return Err(TssError::Shape(format!(
                    "witness has {} transpositions for {} elements",
                    w.transpositions.len(),
                    elements.len()
                )));
            }
            for m in &w.transpositions {
                if m.rows() != n || m.cols() != n {
                    return Err(TssError::Shape("witness matrix has wrong shape".into()));
                }
            }
        }
        Ok(Tss { n, elements, witness })
    }

    /// The degenerate set {A, …, A} of cardinality k, with identity witnesses.
    pub fn degenerate(a: Matrix, k: usize) -> Tss {
        let n = a.rows();
        Tss { n, elements: vec![a; k], witness: Some(RealizationWitness::identities(n, k)) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn witness(&self) -> Option<&RealizationWitness> {
        self.witness.as_ref()
    }

    pub fn with_witness(mut self, w: Option<RealizationWitness>) -> Result<Tss, TssError> {
        self.witness = None;
        Tss::with_dim(self.n, self.elements, w)
    }

    /// All entries equal (including k ≤ 1).
    pub fn is_degenerate(&self) -> bool {
        self.elements.windows(2).all(|w| w[0] == w[1])
    }

    /// Some pair of distinct indices carries equal matrices.
    pub fn has_collision(&self) -> bool {
        (0..self.k()).any(|i| (i + 1..self.k()).any(|j| self.elements[i] == self.elements[j]))
    }

    /// The singleton form (k = 1) of a set with a collision; otherwise a clone.
    pub fn collapsed(&self) -> Tss {
        if self.k() > 1 && self.has_collision() {
            Tss { n: self.n, elements: vec![self.elements[0].clone()], witness: Some(RealizationWitness::new(vec![])) }
        } else {
            self.clone()
        }
    }

    /// Elements with positions j and j+1 exchanged.
    pub fn swapped(&self, j: usize) -> Vec<Matrix> {
        let mut b = self.elements.clone();
        b.swap(j, j + 1);
        b
    }

    /// Whether `p` is invertible and `p·A_i·p⁻¹ = A_{s_j(i)}` for all i.
    pub fn realizes_transposition(&self, p: &Matrix, j: usize) -> bool {
        if p.rows() != self.n || p.cols() != self.n || det(p).is_zero() {
            return false;
        }
        let b = self.swapped(j);
        self.elements.iter().zip(&b).all(|(a, bi)| (p * a) == (bi * p))
    }

    /// Index of the first transposition whose bundled witness is invalid.
    pub fn check_witness(&self) -> Result<(), Option<usize>> {
        let w = self.witness.as_ref().ok_or(None)?;
        match (0..self.k().saturating_sub(1)).find(|&j| !self.realizes_transposition(&w.transpositions[j], j)) {
            Some(j) => Err(Some(j)),
            None => Ok(()),
        }
    }

    pub fn is_commutative(&self) -> bool {
        let e = &self.elements;
        (0..e.len()).all(|i| (i + 1..e.len()).all(|j| e[i].commutes_with(&e[j])))
    }
}

/// Certifies total symmetry under conjugation.
///
/// For each adjacent transposition a bundled witness is used when it checks
/// out exactly; otherwise the intertwiner space `X·A_i = A_{s_j(i)}·X` is
/// solved and searched for an invertible element.
pub fn verify_tss(t: &Tss) -> Certificate {
    if t.is_degenerate() {
        return Certificate {
            verdict: Verdict::Degenerate,
            witness: Some(RealizationWitness::identities(t.n, t.k())),
            failing_transposition: None,
        };
    }
    let mut mats = Vec::with_capacity(t.k() - 1);
    for j in 0..t.k() - 1 {
        if let Some(p) = t.witness.as_ref().map(|w| &w.transpositions[j]) {
            if t.realizes_transposition(p, j) {
                mats.push(p.clone());
                continue;
            }
        }
        let space = intertwiner_space(&t.elements, &t.swapped(j));
        match invertible_in_space(&space, t.n) {
            Ok(p) => mats.push(p),
            Err(_) => {
                return Certificate {
                    verdict: Verdict::NotTotallySymmetric,
                    witness: None,
                    failing_transposition: Some(j),
                }
            }
        }
    }
    Certificate {
        verdict: Verdict::TotallySymmetric,
        witness: Some(RealizationWitness::new(mats)),
        failing_transposition: None,
    }
}

/// Product of transposition witnesses along a minimal adjacent word for σ;
/// conjugation by the result sends A_i to A_{σ(i)}.
pub fn realize_permutation(w: &RealizationWitness, sigma: &[usize]) -> Matrix {
    assert!(perm::is_permutation(sigma), "not a permutation");
    assert!(sigma.len() <= w.transpositions.len() + 1, "permutation too long for witness");
    let n = w.transpositions.first().map_or(0, Matrix::rows);
    let mut acc = Matrix::identity(n);
    for j in perm::adjacent_word(sigma) {
        acc = &acc * &w.transpositions[j];
    }
    acc
}

pub fn is_commutative(t: &Tss) -> bool {
    t.is_commutative()
}

/// An invertible T with `T·A_i·T⁻¹ = B_i` for all i.
pub fn isomorphic(a: &Tss, b: &Tss) -> Result<Matrix, TssError> {
    if a.n != b.n || a.k() != b.k() {
        return Err(TssError::NotIsomorphic);
    }
    if a.k() == 0 {
        return Ok(Matrix::identity(a.n));
    }
    let space = intertwiner_space(&a.elements, &b.elements);
    invertible_in_space(&space, a.n).map_err(|_| TssError::NotIsomorphic)
}

fn split_blocks(c: &Matrix, cinv: &Matrix, m: &Matrix, d: usize) -> (Matrix, Matrix) {
    let n = m.rows();
    let mm = &(cinv * m) * c;
    (mm.submatrix(0, d, 0, d), mm.submatrix(d, n, d, n))
}

/// Restriction to an invariant subspace W and the induced quotient on Kⁿ/W.
///
/// The restriction is written in W's canonical basis; the quotient basis is
/// the images of the standard basis vectors that extend it, in index order.
pub fn restriction_quotient(t: &Tss, w_space: &Subspace, w: &RealizationWitness) -> Result<(Tss, Tss), TssError> {
    if w_space.ambient() != t.n {
        return Err(TssError::Shape("subspace ambient dimension differs from n".into()));
    }
    for m in t.elements.iter().chain(&w.transpositions) {
        if !w_space.is_invariant_under(m) {
            return Err(TssError::NotInvariant);
        }
    }
    let d = w_space.dim();
    let c = w_space.extended_basis();
    let (_, cinv) = det_inverse(&c).expect("extended basis is invertible");
    let split = |list: &[Matrix]| -> (Vec<Matrix>, Vec<Matrix>) {
        list.iter().map(|m| split_blocks(&c, &cinv, m, d)).unzip()
    };
    let (re, qe) = split(&t.elements);
    let (rw, qw) = split(&w.transpositions);
    let restriction = Tss::with_dim(d, re, Some(RealizationWitness::new(rw)))?;
    let quotient = Tss::with_dim(t.n - d, qe, Some(RealizationWitness::new(qw)))?;
    Ok((restriction, quotient))
}

/// Whether A is conjugate to each of A⁻¹ and I − A.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionReport {
    pub index: usize,
    pub inverse_conjugate: bool,
    pub complement_conjugate: bool,
}

fn conjugate_exists(a: &Matrix, b: &Matrix) -> bool {
    let space = intertwiner_space(std::slice::from_ref(a), std::slice::from_ref(b));
    invertible_in_space(&space, a.rows()).is_ok()
}

/// Conjugacy tests `A_i ~ A_i⁻¹` and `A_i ~ I − A_i` per element.
pub fn involution_checks(t: &Tss) -> Result<Vec<InvolutionReport>, TssError> {
    t.elements
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (_, inv) = det_inverse(a).map_err(|_| TssError::Singular(i))?;
            let comp = &Matrix::identity(t.n) - a;
            Ok(InvolutionReport {
                index: i,
                inverse_conjugate: conjugate_exists(a, &inv),
                complement_conjugate: conjugate_exists(a, &comp),
            })
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct TssJson {
    n: usize,
    k: usize,
    elements: Vec<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<RealizationWitness>,
}

impl Serialize for Tss {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        TssJson { n: self.n, k: self.k(), elements: self.elements.clone(), witness: self.witness.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tss {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = TssJson::deserialize(d)?;
        if j.k != j.elements.len() {
            return Err(serde::de::Error::custom(format!("k = {} but {} elements", j.k, j.elements.len())));
        }
        Tss::with_dim(j.n, j.elements, j.witness).map_err(serde::de::Error::custom)
    }
}
