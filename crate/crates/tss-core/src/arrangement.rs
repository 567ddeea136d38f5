use exact_linalg::{
    det, inverse, invertible_in_space, rank, space_matrices, Matrix, MatrixEquations, Subspace,
};
use kfield::Scalar;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::tss::{Certificate, RealizationWitness, Tss, Verdict};
use crate::TssError;

/// k planes of dimension d in Kⁿ, each given by an n × d representative.
///
/// `strong` asserts that the witness moves representatives exactly,
/// `P_j·M_i = M_{s_j(i)}`, not merely the planes they span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrangement {
    n: usize,
    d: usize,
    representatives: Vec<Matrix>,
    planes: Vec<Subspace>,
    witness: Option<RealizationWitness>,
    strong: bool,
}

impl Arrangement {
    pub fn new(
        n: usize,
        d: usize,
        representatives: Vec<Matrix>,
        witness: Option<RealizationWitness>,
        strong: bool,
    ) -> Result<Arrangement, TssError> {
        for (i, m) in representatives.iter().enumerate() {
            if m.rows() != n || m.cols() != d {
                return Err(TssError::Shape(format!("plane {i} is {}x{}, expected {n}x{d}", m.rows(), m.cols())));
            }
            if rank(m) != d {
                return Err(TssError::Shape(format!("plane {i} representative is rank deficient")));
            }
        }
        let k = representatives.len();
        if let Some(w) = &witness {
            if w.transpositions.len() != k.saturating_sub(1)
                || w.transpositions.iter().any(|p| p.rows() != n || p.cols() != n)
            {
                return Err(TssError::Shape("witness has wrong length or shape".into()));
            }
        }
        if strong && witness.is_none() {
            return Err(TssError::NoStrongWitness);
        }
        let planes = representatives.iter().map(Subspace::span).collect();
        Ok(Arrangement { n, d, representatives, planes, witness, strong })
    }

    pub fn from_planes(planes: &[Subspace], witness: Option<RealizationWitness>) -> Result<Arrangement, TssError> {
        let n = planes.first().map_or(0, Subspace::ambient);
        let d = planes.first().map_or(0, Subspace::dim);
        Arrangement::new(n, d, planes.iter().map(|p| p.basis().clone()).collect(), witness, false)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn k(&self) -> usize {
        self.planes.len()
    }

    pub fn planes(&self) -> &[Subspace] {
        &self.planes
    }

    pub fn representatives(&self) -> &[Matrix] {
        &self.representatives
    }

    pub fn witness(&self) -> Option<&RealizationWitness> {
        self.witness.as_ref()
    }

    pub fn is_strong(&self) -> bool {
        self.strong
    }

    pub fn is_degenerate(&self) -> bool {
        self.planes.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether `p` is invertible and `p·W_i = W_{s_j(i)}` for all i.
    pub fn realizes_transposition(&self, p: &Matrix, j: usize) -> bool {
        if p.rows() != self.n || p.cols() != self.n || det(p).is_zero() {
            return false;
        }
        (0..self.k()).all(|i| self.planes[i].image(p) == self.planes[swap_index(i, j)])
    }

    /// Exact check of `P_j·M_i = M_{s_j(i)}` for every generator.
    pub fn has_valid_strong_witness(&self) -> bool {
        let Some(w) = &self.witness else { return false };
        w.transpositions.iter().enumerate().all(|(j, p)| {
            !det(p).is_zero()
                && (0..self.k()).all(|i| p * &self.representatives[i] == self.representatives[swap_index(i, j)])
        })
    }

    /// First pair (i, j), i < j, whose planes do not direct-sum to Kⁿ.
    pub fn first_non_complementary_pair(&self) -> Option<(usize, usize)> {
        let k = self.k();
        (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .find(|&(i, j)| !self.planes[i].is_complement(&self.planes[j]))
    }
}

fn swap_index(i: usize, j: usize) -> usize {
    if i == j {
        j + 1
    } else if i == j + 1 {
        j
    } else {
        i
    }
}

// Solutions of X·W_i ⊆ W'_i for all i, as a subspace of n²-space.
fn transport_space(source: &[Subspace], target: &[Subspace], n: usize) -> exact_linalg::Subspace {
    let mut eqs = MatrixEquations::new(n, n);
    for (s, t) in source.iter().zip(target) {
        if s.is_zero() {
            continue;
        }
        let ann = t.annihilator();
        if ann.rows() > 0 {
            eqs.add(&[(&ann, s.basis())]);
        }
    }
    eqs.solution_space()
}

/// Certifies total symmetry of an arrangement.
///
/// A bundled witness is used for a transposition when it transports the
/// planes exactly; otherwise `N_{s_j(i)}·X·B_i = 0` is solved, with N the
/// annihilator rows and B the plane basis, and an invertible X searched for.
pub fn verify_arrangement(a: &Arrangement) -> Certificate {
    let k = a.k();
    if a.is_degenerate() {
        return Certificate {
            verdict: Verdict::Degenerate,
            witness: Some(RealizationWitness::identities(a.n, k)),
            failing_transposition: None,
        };
    }
    let mut mats = Vec::with_capacity(k - 1);
    for j in 0..k - 1 {
        if let Some(p) = a.witness.as_ref().map(|w| &w.transpositions[j]) {
            if a.realizes_transposition(p, j) {
                mats.push(p.clone());
                continue;
            }
        }
        let mut target = a.planes.clone();
        target.swap(j, j + 1);
        let space = transport_space(&a.planes, &target, a.n);
        match invertible_in_space(&space, a.n) {
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

/// The annihilators W_i^⊥ in the dual space, with witnesses `P^{-T}`.
pub fn dual_arrangement(a: &Arrangement) -> Arrangement {
    let planes: Vec<Subspace> = a.planes.iter().map(Subspace::annihilator_space).collect();
    let witness = a.witness.as_ref().map(|w| {
        RealizationWitness::new(
            w.transpositions
                .iter()
                .map(|p| inverse(p).map(|pi| pi.transpose()).unwrap_or_else(|_| p.clone()))
                .collect(),
        )
    });
    Arrangement {
        n: a.n,
        d: a.n - a.d,
        representatives: planes.iter().map(|p| p.basis().clone()).collect(),
        planes,
        witness,
        strong: false,
    }
}

/// Quotient by Q = ∩W_i, in coordinates given by extending a basis of Q
/// with standard basis vectors. Returns a clone when Q = 0.
pub fn reduce_arrangement(a: &Arrangement) -> Arrangement {
    let q = a.planes.iter().skip(1).fold(a.planes.first().cloned().unwrap_or(Subspace::zero(a.n)), |acc, p| acc.intersect(p));
    if q.is_zero() {
        return a.clone();
    }
    let c = q.extended_basis();
    let cinv = inverse(&c).expect("extended basis is invertible");
    let (qd, n) = (q.dim(), a.n);
    let planes: Vec<Subspace> =
        a.planes.iter().map(|p| Subspace::span(&(&cinv * p.basis()).submatrix(qd, n, 0, p.dim()))).collect();
    let witness = a.witness.as_ref().map(|w| {
        RealizationWitness::new(
            w.transpositions.iter().map(|p| (&(&cinv * p) * &c).submatrix(qd, n, qd, n)).collect(),
        )
    });
    Arrangement {
        n: n - qd,
        d: a.d - qd,
        representatives: planes.iter().map(|p| p.basis().clone()).collect(),
        planes,
        witness,
        strong: false,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stabilizer {
    pub dimension: usize,
    pub basis: Vec<Matrix>,
}

/// All X with X·W_i ⊆ W_i for every plane.
pub fn stabilizer_dimension(a: &Arrangement) -> Stabilizer {
    let space = transport_space(&a.planes, &a.planes, a.n);
    Stabilizer { dimension: space.dim(), basis: space_matrices(&space, a.n) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    /// G with G·W₁ = (I;0), G·W₂ = (0;I), G·W₃ = (I;I).
    pub coordinates: Matrix,
    pub tss: Tss,
}

/// Coordinates for a half-dimensional pairwise complementary arrangement in
/// which the planes read W₁ = (I;0), W₂ = (0;I), W₃ = (I;I), W_i = (A_i;I).
///
/// The returned set {A₄, …, A_k} carries the witness induced from the
/// arrangement's transpositions (bundled or solved) when it is symmetric.
pub fn half_dim_normal_form(a: &Arrangement) -> Result<NormalForm, TssError> {
    let d = a.d;
    if a.n != 2 * d || a.k() < 3 {
        return Err(TssError::Shape(format!("need n = 2d and k >= 3, got n={}, d={d}, k={}", a.n, a.k())));
    }
    if let Some((i, j)) = a.first_non_complementary_pair() {
        return Err(TssError::NotComplementary(i, j));
    }
    let reps = &a.representatives;
    let b12 = reps[0].hstack(&reps[1]);
    let b12inv = inverse(&b12).map_err(|_| TssError::NotComplementary(0, 1))?;
    let xy = &b12inv * &reps[2];
    let x = inverse(&xy.submatrix(0, d, 0, d)).map_err(|_| TssError::NotComplementary(1, 2))?;
    let y = inverse(&xy.submatrix(d, 2 * d, 0, d)).map_err(|_| TssError::NotComplementary(0, 2))?;
    let g = &x.direct_sum(&y) * &b12inv;
    let mut elements = Vec::with_capacity(a.k() - 3);
    for (i, rep) in reps.iter().enumerate().skip(3) {
        let uv = &g * rep;
        let vinv = inverse(&uv.submatrix(d, 2 * d, 0, d)).map_err(|_| TssError::NotComplementary(0, i))?;
        elements.push(&uv.submatrix(0, d, 0, d) * &vinv);
    }
    let cert = verify_arrangement(a);
    let witness = match (cert.verdict, cert.witness) {
        (Verdict::TotallySymmetric, Some(w)) => {
            let ginv = inverse(&g).expect("normal-form coordinates are invertible");
            Some(RealizationWitness::new(
                w.transpositions[3.min(w.transpositions.len())..]
                    .iter()
                    .map(|p| (&(&g * p) * &ginv).submatrix(0, d, 0, d))
                    .collect(),
            ))
        }
        _ => None,
    };
    let tss = Tss::with_dim(d, elements, witness)?;
    Ok(NormalForm { coordinates: g, tss })
}

/// The commutative set ΣW_i = (λI_n M_i; 0 λI_d) with witnesses P_j ⊕ I_d.
pub fn suspension(a: &Arrangement, lambda: &Scalar) -> Result<Tss, TssError> {
    if !a.strong || !a.has_valid_strong_witness() {
        return Err(TssError::NoStrongWitness);
    }
    let (n, d) = (a.n, a.d);
    let top = Matrix::scalar(n, lambda);
    let bottom = Matrix::scalar(d, lambda);
    let zero = Matrix::zeros(d, n);
    let elements =
        a.representatives.iter().map(|m| Matrix::block(&[&[&top, m], &[&zero, &bottom]])).collect();
    let w = a.witness.as_ref().expect("checked above");
    let id = Matrix::identity(d);
    let witness = RealizationWitness::new(w.transpositions.iter().map(|p| p.direct_sum(&id)).collect());
    Tss::with_dim(n + d, elements, Some(witness))
}

/// An invertible T with T·W^a_i = W^b_i for all i.
pub fn arrangement_isomorphism(a: &Arrangement, b: &Arrangement) -> Result<Matrix, TssError> {
    if a.n != b.n || a.d != b.d || a.k() != b.k() {
        return Err(TssError::NotIsomorphic);
    }
    let space = transport_space(&a.planes, &b.planes, a.n);
    invertible_in_space(&space, a.n).map_err(|_| TssError::NotIsomorphic)
}

impl Arrangement {
    fn check_strong(self) -> Result<Self, TssError> {
        if self.strong && !self.has_valid_strong_witness() {
            return Err(TssError::NoStrongWitness);
        }
        Ok(self)
    }
}

#[derive(Serialize, Deserialize)]
struct ArrangementJson {
    n: usize,
    d: usize,
    k: usize,
    planes: Vec<Matrix>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    witness: Option<RealizationWitness>,
    #[serde(default)]
    strong: bool,
}

impl Serialize for Arrangement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ArrangementJson {
            n: self.n,
            d: self.d,
            k: self.k(),
            planes: self.representatives.clone(),
            witness: self.witness.clone(),
            strong: self.strong,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrangement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ArrangementJson::deserialize(d)?;
        if j.k != j.planes.len() {
            return Err(serde::de::Error::custom(format!("k = {} but {} planes", j.k, j.planes.len())));
        }
        Arrangement::new(j.n, j.d, j.planes, j.witness, j.strong)
            .and_then(Arrangement::check_strong)
            .map_err(serde::de::Error::custom)
    }
}
