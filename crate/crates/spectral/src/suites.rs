use constructions::{ncsimplex, tilde_sigma5_construction, tilde_sigma5_rep, TildeSigma5Blocks};
use exact_linalg::{inverse, rank, Matrix};
use kfield::Scalar;
use serde::{Deserialize, Serialize};

use crate::report::{Check, Report};

fn sc(s: &str) -> Scalar {
    s.parse().expect("valid scalar literal")
}

fn m2(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Matrix {
    Matrix::from_rows(vec![vec![a, b], vec![c, d]])
}

fn rows(r: &[&[&str]]) -> Matrix {
    Matrix::from_rows(r.iter().map(|row| row.iter().map(|x| sc(x)).collect()).collect())
}

const BASIC_REP: &str = "basic representation presentation";

/// t_i² = z, (t_i t_{i+1})³ = z and t_i t_j = z t_j t_i for |i − j| ≥ 2,
/// with z = −I. Indices in check names are 1-based.
pub fn basic_relation_checks(ts: &[Matrix]) -> Vec<Check> {
    let n = ts.first().map_or(0, Matrix::rows);
    let z = -Matrix::identity(n);
    let mut out = Vec::new();
    for (i, t) in ts.iter().enumerate() {
        out.push(Check::equal(format!("t_{}^2 = z", i + 1), BASIC_REP, &(t * t), &z));
    }
    for i in 0..ts.len().saturating_sub(1) {
        let p = (&ts[i] * &ts[i + 1]).pow(3);
        out.push(Check::equal(format!("(t_{} t_{})^3 = z", i + 1, i + 2), BASIC_REP, &p, &z));
    }
    for i in 0..ts.len() {
        for j in i + 2..ts.len() {
            let lhs = &ts[i] * &ts[j];
            let rhs = &z * &(&ts[j] * &ts[i]);
            out.push(Check::equal(format!("t_{} t_{} = z t_{} t_{}", i + 1, j + 1, j + 1, i + 1), BASIC_REP, &lhs, &rhs));
        }
    }
    out
}

/// e₁-coefficients of A₁A₂A₁(e₁) and A₂A₁A₂(e₁) for the (n−1)-element
/// simplex set with eigenvalues (−1, 1).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidCoefficients {
    pub n: usize,
    pub aba: Scalar,
    pub bab: Scalar,
}

impl BraidCoefficients {
    pub fn equal(&self) -> bool {
        self.aba == self.bab
    }
}

fn e1_coefficients(a1: &Matrix, a2: &Matrix) -> (Scalar, Scalar) {
    let aba = &(a1 * a2) * a1;
    let bab = &(a2 * a1) * a2;
    (aba.get(0, 0).clone(), bab.get(0, 0).clone())
}

/// Computed on K^{n−1} with A_i(v) = v − c·α_i(v)·e_i, c = 2/(n−2) and
/// α_i = (n−1)e_i* − Σe_j*; this covers n = 3, where the quotient is a line.
pub fn braid_coefficients(n: usize) -> BraidCoefficients {
    assert!(n >= 3, "need n >= 3");
    let m = n - 1;
    let c = Scalar::from_frac(2, n as i64 - 2);
    let a = |i: usize| {
        let mut x = Matrix::identity(m);
        for col in 0..m {
            let alpha = Scalar::from_i64(if col == i { m as i64 - 1 } else { -1 });
            let v = x.get(i, col) - &(&c * &alpha);
            x.set(i, col, v);
        }
        x
    };
    let (aba, bab) = e1_coefficients(&a(0), &a(1));
    BraidCoefficients { n, aba, bab }
}

/// The same coefficients read off the quotient model ncsimplex(n−1, −1, 1);
/// for n ≥ 4 the vectors e₁, e₂ are coordinate vectors there.
pub fn braid_coefficients_quotient(n: usize) -> Option<BraidCoefficients> {
    if n < 4 {
        return None;
    }
    let t = ncsimplex(n - 1, &Scalar::from_i64(-1), &Scalar::one()).ok()?;
    let (aba, bab) = e1_coefficients(&t.elements()[0], &t.elements()[1]);
    Some(BraidCoefficients { n, aba, bab })
}

/// The printed A₁, A₂ of the Σ̃5 construction at (λ, μ) = (1, −1).
pub fn printed_s5_pair() -> (Matrix, Matrix) {
    let a1 = rows(&[
        &["1", "0", "-4*i/(sqrt3+3*i)", "-i/sqrt6"],
        &["0", "1", "-i/sqrt6", "4*i/(sqrt3-3*i)"],
        &["0", "0", "-1", "0"],
        &["0", "0", "0", "-1"],
    ]);
    let a2 = rows(&[
        &["-1", "0", "0", "0"],
        &["0", "-1", "0", "0"],
        &["4*i/(sqrt3-3*i)", "i/sqrt6", "1", "0"],
        &["i/sqrt6", "-4*i/(sqrt3+3*i)", "0", "1"],
    ]);
    (a1, a2)
}

const OBSTRUCTION: &str = "symmetric group representations below dimension n-1";

pub fn rep_obstruction_suite() -> Report {
    let mut checks = Vec::new();
    for n in 3..=6 {
        let b = braid_coefficients(n);
        let expect_equal = n == 4;
        let detail = format!("aba = {}, bab = {}", b.aba, b.bab);
        checks.push(Check::new(format!("braid coefficients n={n} equal iff n=4"), OBSTRUCTION, b.equal() == expect_equal).detail(detail));
        if let Some(q) = braid_coefficients_quotient(n) {
            checks.push(Check::new(format!("braid coefficients n={n} agree with quotient model"), OBSTRUCTION, q == b));
        }
    }
    let (p1, p2) = printed_s5_pair();
    match tilde_sigma5_construction(&Scalar::one(), &Scalar::from_i64(-1)) {
        Ok(t) => {
            checks.push(Check::equal("s5 construction A_1 at (1,-1) matches print", OBSTRUCTION, &t.elements()[0], &p1));
            checks.push(Check::equal("s5 construction A_2 at (1,-1) matches print", OBSTRUCTION, &t.elements()[1], &p2));
            let cube = (&t.elements()[0] * &t.elements()[1]).pow(3);
            let ok = !cube.is_identity();
            checks.push(Check::new("s5 construction (A_1 A_2)^3 != I", OBSTRUCTION, ok).offending_if_failed(vec![cube]));
        }
        Err(e) => checks.push(Check::new("s5 construction at (1,-1)", OBSTRUCTION, false).detail(e.to_string())),
    }
    Report::new(checks)
}

/// The printed right-hand side (0 √2; −√2 0).
pub fn appendix_target() -> Matrix {
    let r2 = Scalar::sqrt2();
    m2(Scalar::zero(), r2.clone(), -r2, Scalar::zero())
}

/// A₆YA₄ − A₄Y as a linear map (c, d) ↦ K^{2×2}: the pair of matrices at
/// (1, 0) and (0, 1), with A₄, A₆ from the 3-element simplex set at (ζ, ζ⁻¹)
/// and Y = (c+d, c−d; d−c, −c−d).
pub fn cd_system() -> (Matrix, Matrix) {
    let z = Scalar::zeta();
    let t = ncsimplex(3, &z, &z.inverse().expect("zeta is nonzero")).expect("distinct eigenvalues");
    let (a4, a6) = (&t.elements()[0], &t.elements()[2]);
    let s = Scalar::from_i64;
    let eval = |y: Matrix| &(&(a6 * &y) * a4) - &(a4 * &y);
    (eval(m2(s(1), s(1), s(-1), s(-1))), eval(m2(s(1), s(-1), s(1), s(-1))))
}

const APPENDIX: &str = "no Jordan-block set over the five-plane arrangement";

pub fn appendix_nonexistence_suite() -> Report {
    let b = TildeSigma5Blocks::new();
    let target = appendix_target();
    let mut checks = Vec::new();

    let literal = &(&b.p45 * &b.q34) - &(&b.p34 * &b.q34);
    checks.push(
        Check::equal("P45 Q34 - P34 Q34 = (0 sqrt2; -sqrt2 0) as printed", APPENDIX, &literal, &target)
            .detail("the printed left-hand side; P45 Q34 - P34 P45 is the expression that matches"),
    );
    let corrected = &(&b.p45 * &b.q34) - &(&b.p34 * &b.p45);
    checks.push(Check::equal("P45 Q34 - P34 P45 = (0 sqrt2; -sqrt2 0)", APPENDIX, &corrected, &target));
    let q34inv = inverse(&b.q34).expect("Q34 is invertible");
    let conj = &(&b.p34 * &b.p45) * &q34inv;
    checks.push(Check::new("P45 != P34 P45 Q34^-1", APPENDIX, conj != b.p45).offending_if_failed(vec![conj]));

    let (mc, md) = cd_system();
    let z = Scalar::zeta();
    let half = Scalar::from_frac(1, 2);
    let c11 = (&mc.get(0, 0).clone(), &md.get(0, 0).clone());
    let want11 = (sc("(1-2*sqrt3*i)/2"), sc("(-2+sqrt3*i)/2"));
    checks.push(
        Check::new("(c,d) system entry (1,1)", APPENDIX, *c11.0 == want11.0 && *c11.1 == want11.1)
            .offending_if_failed(vec![mc.clone(), md.clone()]),
    );
    let want12 = (-(&z * Scalar::from_i64(7)) * &half, -(&z * &z) * &half);
    let c12 = (mc.get(0, 1).clone(), md.get(0, 1).clone());
    checks.push(
        Check::new("(c,d) system entry (1,2)", APPENDIX, c12 == want12).offending_if_failed(vec![mc.clone(), md.clone()]),
    );
    let stacked = Matrix::from_columns(4, &[mc.entries().to_vec(), md.entries().to_vec()]);
    let r = rank(&stacked);
    checks.push(
        Check::new("(c,d) system has only the zero solution", APPENDIX, r == 2)
            .detail(format!("rank {r}"))
            .offending_if_failed(vec![stacked]),
    );
    Report::new(checks)
}

/// Relation checks on the shipped generators.
pub fn basic_representation_suite() -> Report {
    Report::new(basic_relation_checks(&tilde_sigma5_rep()))
}
