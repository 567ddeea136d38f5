//! Catalog objects against independently computed or printed values.

use constructions::*;
use exact_linalg::{inverse, Matrix, Subspace};
use kfield::{mu_sporadic, Scalar};
use proptest::prelude::*;
use tss_core::{isomorphic, verify_arrangement, verify_tss, RealizationWitness, Tss, Verdict};

fn sc(s: &str) -> Scalar {
    s.parse().unwrap()
}

fn s(x: i64) -> Scalar {
    Scalar::from_i64(x)
}

fn rows(r: &[&[&str]]) -> Matrix {
    Matrix::from_rows(r.iter().map(|row| row.iter().map(|x| sc(x)).collect()).collect())
}

fn columns_sorted(t: &Tss) -> Vec<Vec<Scalar>> {
    let n = t.n();
    let mut cols: Vec<Vec<Scalar>> =
        (0..n).map(|c| t.elements().iter().map(|a| a.get(c, c).clone()).collect()).collect();
    cols.sort();
    cols
}

#[test]
fn basic_representation_relations() {
    let t = tilde_sigma5_rep();
    let minus_i = -Matrix::identity(4);
    for ti in &t {
        assert_eq!(ti * ti, minus_i);
    }
    for i in 0..3 {
        assert_eq!((&t[i] * &t[i + 1]).pow(3), minus_i);
    }
    for (i, j) in [(0, 2), (0, 3), (1, 3)] {
        assert_eq!(&t[i] * &t[j], -(&t[j] * &t[i]));
    }
}

#[test]
fn tilde_sigma5_arrangement_is_symmetric_and_generic() {
    let a = tilde_sigma5_arrangement();
    for j in 0..4 {
        assert!(a.realizes_transposition(&a.witness().unwrap().transpositions[j], j), "T{}", j + 1);
    }
    assert_eq!(verify_arrangement(&a).verdict, Verdict::TotallySymmetric);
    assert_eq!(a.first_non_complementary_pair(), None);
    let total = a.planes().iter().fold(Subspace::zero(4), |acc, w| acc.sum(w));
    assert!(total.is_full());
}

#[test]
fn tilde_sigma5_system_and_construction_agree() {
    let sys = tilde_sigma5_system();
    assert!(sys.rows_are_direct_sums());
    assert_eq!(sys.check_witness(), Ok(()));
    let (l, m) = (s(2), s(1));
    let direct = tilde_sigma5_construction(&l, &m).unwrap();
    let via_system = eigenspace_construction(&sys, &[l, m]).unwrap();
    assert_eq!(direct.elements(), via_system.elements());
    assert_eq!(direct.check_witness(), Ok(()));
}

#[test]
fn complement_transport_is_independent_of_word() {
    // s₀s₁s₀ and s₁s₀ both send index 0 to index 2
    let t = tilde_sigma5_rep();
    let w1a = w1_complement();
    let other = &(&(&t[0] * &t[1]) * &t[0]) * &w1a;
    assert_eq!(Subspace::span(&other), Subspace::span(&(&transport(2) * &w1a)));
    // s₂s₁s₀ versus s₀s₂s₁s₀: both send 0 to 3
    let other = &(&(&(&t[0] * &t[2]) * &t[1]) * &t[0]) * &w1a;
    assert_eq!(Subspace::span(&other), Subspace::span(&(&transport(3) * &w1a)));
}

#[test]
fn tilde_sigma5_construction_at_plus_minus_one() {
    let t = tilde_sigma5_construction(&s(1), &s(-1)).unwrap();
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
    assert_eq!(t.elements()[0], a1);
    assert_eq!(t.elements()[1], a2);
    assert!(!(&a1 * &a2).pow(3).is_identity());
}

#[test]
fn sporadic_conjugation_identities() {
    let mu = mu_sporadic();
    assert!((s(3) * &mu * &mu + s(2) * &mu + s(3)).is_zero());
    let (p, q) = sporadic_pq();
    let qinv = inverse(&q).unwrap();
    let t = sporadic4(&s(0)).unwrap();
    let x: Vec<Matrix> = t.elements().iter().map(|a| a.submatrix(0, 2, 2, 4)).collect();
    let conj = |m: &Matrix| &(&p * m) * &qinv;
    assert_eq!(conj(&x[0]), x[1]);
    assert_eq!(conj(&x[1]), x[0]);
    assert_eq!(conj(&x[2]), x[2]);
    assert_eq!(conj(&x[3]), x[3]);
    assert!(x[0].is_identity());
}

#[test]
fn sporadic_printed_blocks() {
    let nu = sc("1/5");
    let t = sporadic4(&nu).unwrap();
    let mu = mu_sporadic();
    let third = Scalar::from_frac(1, 3);
    let two_thirds = Scalar::from_frac(2, 3);
    let x2 = Matrix::from_rows(vec![vec![-&mu - &two_thirds, &mu + &third], vec![s(0), mu.clone()]]);
    let x3 = Matrix::from_rows(vec![vec![mu.clone(), s(0)], vec![&mu + &third, -&mu - &two_thirds]]);
    let x4 = Matrix::from_rows(vec![vec![-third.clone(), -&mu - &third], vec![-&mu - &third, -third.clone()]]);
    for (a, x) in t.elements()[1..].iter().zip([x2, x3, x4]) {
        assert_eq!(a.submatrix(0, 2, 2, 4), x);
        assert_eq!(a.submatrix(0, 2, 0, 2), Matrix::scalar(2, &nu));
        assert!(a.submatrix(2, 4, 0, 2).is_zero());
    }
    assert_eq!(verify_tss(&t).verdict, Verdict::TotallySymmetric);
    assert!(t.is_commutative());
}

// A_i(v) = μv + (λ−μ)/n·α_i(v)·e_i written out entrywise.
fn ncsimplex_formula(k: usize, l: &Scalar, m: &Scalar) -> Vec<Matrix> {
    let n = k - 1;
    let c = (l - m) * Scalar::from_frac(1, n as i64);
    (0..k)
        .map(|i| {
            let e: Vec<Scalar> = (0..n).map(|r| if i == n { s(-1) } else if r == i { s(1) } else { s(0) }).collect();
            let alpha: Vec<Scalar> =
                (0..n).map(|j| if i == n { s(-1) } else if j == i { s(n as i64) } else { s(-1) }).collect();
            let mut a = Matrix::scalar(n, m);
            for r in 0..n {
                for col in 0..n {
                    let v = a.get(r, col) + &(&c * &(&alpha[col] * &e[r]));
                    a.set(r, col, v);
                }
            }
            a
        })
        .collect()
}

#[test]
fn ncsimplex_matches_formula() {
    for k in 2..=6 {
        let (l, m) = (s(-1), s(1));
        let t = ncsimplex(k, &l, &m).unwrap();
        assert_eq!(t.elements(), ncsimplex_formula(k, &l, &m).as_slice(), "k = {k}");
        assert_eq!(t.check_witness(), Ok(()));
        if k >= 3 {
            assert!(!t.is_commutative());
            assert_eq!(verify_tss(&t).verdict, Verdict::TotallySymmetric);
        }
    }
}

#[test]
fn ncsimplex_k3_against_printed_form() {
    let (l, m) = (sc("zeta"), sc("zeta_inv"));
    let t = ncsimplex(3, &l, &m).unwrap();
    let h = Scalar::from_frac(1, 2);
    let printed = Tss::new(
        vec![
            Matrix::from_rows(vec![vec![l.clone(), (&m - &l) * &h], vec![s(0), m.clone()]]),
            Matrix::from_rows(vec![vec![m.clone(), s(0)], vec![(&m - &l) * &h, l.clone()]]),
            Matrix::from_rows(vec![
                vec![(&l + &m) * &h, (&l - &m) * &h],
                vec![(&l - &m) * &h, (&l + &m) * &h],
            ]),
        ],
        None,
    )
    .unwrap();
    assert!(isomorphic(&t, &printed).is_ok());
}

#[test]
fn simplex_construction_n3_printed() {
    let l = sc("2/3");
    let t = simplex_construction(3, &l).unwrap();
    let last = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]];
    for (a, col) in t.elements().iter().zip(last) {
        let mut expect = Matrix::scalar(4, &l);
        for (r, &v) in col.iter().enumerate() {
            expect.set(r, 3, s(v));
        }
        assert_eq!(a, &expect);
    }
    assert!(t.is_commutative());
    assert_eq!(verify_tss(&t).verdict, Verdict::TotallySymmetric);
}

#[test]
fn dual_simplex_is_dual_of_simplex() {
    for n in 1..=5 {
        let d = tss_core::dual_arrangement(&simplex_arrangement(n).unwrap());
        let star = dual_simplex_arrangement(n).unwrap();
        // the invariant form w ↦ (α_j(w))_j carries ker α_i onto the annihilator of ℓ_i
        let gram = Matrix::from_rows(
            (0..n).map(|i| (0..n).map(|j| s(if i == j { n as i64 } else { -1 })).collect()).collect(),
        );
        for (p, q) in star.planes().iter().zip(d.planes()) {
            assert_eq!(&p.image(&gram), q, "n = {n}");
        }
        assert!(tss_core::arrangement_isomorphism(&star, &d).is_ok());
    }
}

#[test]
fn simplex_two_lines() {
    let a = simplex_arrangement(2).unwrap();
    let span = |v: [i64; 2]| Subspace::span(&Matrix::from_columns(2, &[v.iter().map(|&x| s(x)).collect()]));
    assert_eq!(a.planes(), &[span([1, 0]), span([0, 1]), span([1, 1])]);
    assert!(a.planes()[0].intersect(&a.planes()[1]).is_zero());
    assert!(a.planes()[0].sum(&a.planes()[1]).is_full());
}

#[test]
fn induction_of_standard_pair_gives_permutation_tableau() {
    let std2 = standard(2, &s(1), &s(2)).unwrap();
    let a3 = induction(&std2, 1, &s(3)).unwrap();
    assert_eq!(a3.n(), 6);
    // printed tableau columns, as (row1, row2, row3)
    let printed = [[3, 2, 1], [3, 1, 2], [1, 3, 2], [2, 3, 1], [2, 1, 3], [1, 2, 3]];
    let mut expect: Vec<Vec<Scalar>> = printed.iter().map(|c| c.iter().map(|&x| s(x)).collect()).collect();
    expect.sort();
    assert_eq!(columns_sorted(&a3), expect);
    // the S = {1} and S = {3} blocks agree column-for-column with the printed order
    for (c, col) in [(0, printed[0]), (1, printed[1]), (4, printed[4]), (5, printed[5])] {
        let got: Vec<Scalar> = a3.elements().iter().map(|a| a.get(c, c).clone()).collect();
        assert_eq!(got, col.iter().map(|&x| s(x)).collect::<Vec<_>>());
    }
    assert_eq!(a3.check_witness(), Ok(()));
    let pt = permutation_type(&[s(1), s(2), s(3)]).unwrap();
    assert_eq!(columns_sorted(&pt), expect);
    assert!(isomorphic(&a3, &pt).is_ok());
}

#[test]
fn repeated_induction_is_partition_construction() {
    // weight (7, 5, 5, 9): blocks of sizes 1, 2, 1
    let base = Tss::with_dim(1, vec![], Some(RealizationWitness::new(vec![]))).unwrap();
    let a1 = induction(&base, 1, &s(7)).unwrap();
    let a2 = induction(&a1, 2, &s(5)).unwrap();
    let a3 = induction(&a2, 1, &s(9)).unwrap();
    assert_eq!(a3.check_witness(), Ok(()));
    let w = Weight::new(vec![s(7), s(5), s(5), s(9)]);
    let p = partition_construction(&w);
    assert_eq!(a3.n(), p.n());
    assert_eq!(columns_sorted(&a3), columns_sorted(&p));
    assert!(isomorphic(&a3, &p).is_ok());
}

#[test]
fn partition_tables() {
    let dims = |vals: &[i64]| partition_construction(&Weight::new(vals.iter().map(|&x| s(x)).collect())).n();
    assert_eq!([dims(&[1, 1, 1]), dims(&[1, 2, 2]), dims(&[1, 2, 3])], [1, 3, 6]);
    assert_eq!(
        [dims(&[1, 1, 1, 1]), dims(&[1, 2, 2, 2]), dims(&[1, 1, 2, 2]), dims(&[1, 2, 3, 3]), dims(&[1, 2, 3, 4])],
        [1, 4, 6, 12, 24]
    );
}

#[test]
fn eigenspace_construction_rejects_repeats() {
    let sys = simplex_system(2).unwrap();
    assert_eq!(eigenspace_construction(&sys, &[s(1), s(1)]), Err(ConstructionError::DuplicateEigenvalue));
    let single = DecompositionSystem::new(vec![vec![Subspace::full(2)]; 3], simplex_witness(2)).unwrap();
    let t = eigenspace_construction(&single, &[s(4)]).unwrap();
    assert!(t.is_degenerate());
    assert_eq!(t.elements()[0], Matrix::scalar(2, &s(4)));
}

fn weight(max_k: usize) -> impl Strategy<Value = Vec<i64>> {
    (1..=max_k).prop_flat_map(|k| prop::collection::vec(1i64..=3, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(30))]

    #[test]
    fn partition_dimension_is_multinomial(vals in weight(5)) {
        let w = Weight::new(vals.iter().map(|&x| s(x)).collect());
        let t = partition_construction(&w);
        prop_assert_eq!(t.n(), w.multinomial());
        prop_assert_eq!(t.k(), w.k());
        if t.n() <= 12 {
            prop_assert_eq!(t.check_witness(), Ok(()));
        }
    }

    #[test]
    fn induction_witness_is_exact(k in 1usize..=2, p in 1usize..=2, fresh in 4i64..=6) {
        let base = standard(k, &s(1), &s(2)).unwrap();
        let t = induction(&base, p, &s(fresh)).unwrap();
        prop_assert_eq!(t.k(), k + p);
        prop_assert_eq!(t.check_witness(), Ok(()));
        prop_assert!(t.is_commutative());
    }
}
