//! Cross-checks against independent brute-force computations.

use exact_linalg::*;
use kfield::Scalar;
use proptest::prelude::*;

// Plain dense Gauss–Jordan, written separately from the library's Echelon.
fn brute_rref(mut a: Vec<Vec<Scalar>>) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inverse().unwrap();
        a[r] = a[r].iter().map(|x| x * &inv).collect();
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let row_r = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&row_r) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

fn brute_rank(vs: &[Vec<Scalar>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    brute_rref(vs.to_vec()).1.len()
}

fn brute_kernel(a: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let (r, piv) = brute_rref(a.to_vec());
    let mut out = Vec::new();
    for f in (0..cols).filter(|c| !piv.contains(c)) {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (row, &p) in r.iter().zip(&piv) {
            v[p] = -&row[f];
        }
        out.push(v);
    }
    out
}

// vec_row(X·A − B·X) = (I ⊗ Aᵀ − B ⊗ I) vec_row(X)
fn brute_intertwiners(a_s: &[Matrix], b_s: &[Matrix]) -> Vec<Vec<Scalar>> {
    let n = a_s[0].rows();
    let id = Matrix::identity(n);
    let mut rows = Vec::new();
    for (a, b) in a_s.iter().zip(b_s) {
        let k = &id.kron(&a.transpose()) - &b.kron(&id);
        rows.extend(k.to_rows());
    }
    brute_kernel(&rows, n * n)
}

fn brute_closure_dim(n: usize, gens: &[Matrix]) -> usize {
    let mut words = vec![Matrix::identity(n)];
    let mut frontier = words.clone();
    let mut dim = 1;
    loop {
        let next: Vec<Matrix> = frontier.iter().flat_map(|w| gens.iter().map(move |g| w * g)).collect();
        words.extend(next.iter().cloned());
        let new_dim = brute_rank(&words.iter().map(|w| w.entries().to_vec()).collect::<Vec<_>>());
        if new_dim == dim {
            return dim;
        }
        dim = new_dim;
        frontier = next;
    }
}

fn small_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(-2i64..=2, n * n)
        .prop_map(move |v| Matrix::new(n, n, v.into_iter().map(Scalar::from_i64).collect()))
}

fn scalar_matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec((-2i64..=2, 0usize..3), n * n).prop_map(move |v| {
        let units = [Scalar::one(), Scalar::zeta(), Scalar::sqrt2()];
        Matrix::new(n, n, v.into_iter().map(|(c, u)| Scalar::from_i64(c) * &units[u]).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn intertwiners_match_brute_force(n in 1usize..=3, a in small_matrix(3), p in small_matrix(3), twist in any::<bool>()) {
        let a = a.submatrix(0, n, 0, n);
        let p = p.submatrix(0, n, 0, n);
        let b = match inverse(&p) {
            Ok(pi) if twist => &(&p * &a) * &pi,
            _ => a.clone(),
        };
        let lib = intertwiner_space(std::slice::from_ref(&a), std::slice::from_ref(&b));
        let oracle = brute_intertwiners(std::slice::from_ref(&a), std::slice::from_ref(&b));
        prop_assert_eq!(lib.dim(), oracle.len());
        for v in &oracle {
            prop_assert!(lib.contains_vector(v));
        }
        for x in space_matrices(&lib, n) {
            prop_assert_eq!(&x * &a, &b * &x);
        }
    }

    #[test]
    fn closure_matches_brute_force(n in 1usize..=3, g1 in small_matrix(3), g2 in small_matrix(3)) {
        let g1 = g1.submatrix(0, n, 0, n);
        let g2 = g2.submatrix(0, n, 0, n);
        let lib = algebra_closure(n, &[g1.clone(), g2.clone()]);
        prop_assert_eq!(lib.dim, brute_closure_dim(n, &[g1.clone(), g2.clone()]));
        prop_assert!(lib.contains(&(&g1 * &g2)));
    }

    #[test]
    fn solve_substitutes_back(a in small_matrix(3), x in small_matrix(3), drop in 0usize..3) {
        // force rank deficiency by duplicating a row
        let mut rows = a.to_rows();
        rows[drop] = rows[(drop + 1) % 3].clone();
        let a = Matrix::from_rows(rows);
        let b = &a * &x;
        let sol = solve(&a, &b).unwrap();
        prop_assert_eq!(&a * &sol.particular, b);
        prop_assert_eq!(sol.kernel.dim(), 3 - rank(&a));
    }

    #[test]
    fn inverse_multiplies_back(a in scalar_matrix(3)) {
        if let Ok((d, inv)) = det_inverse(&a) {
            prop_assert!(!d.is_zero());
            prop_assert!((&a * &inv).is_identity());
            prop_assert!((&inv * &a).is_identity());
        } else {
            prop_assert!(rank(&a) < 3);
        }
    }

    #[test]
    fn cayley_hamilton(a in scalar_matrix(3)) {
        prop_assert!(char_poly(&a).eval_matrix(&a).is_zero());
    }

    #[test]
    fn rank_nullity(a in scalar_matrix(3)) {
        prop_assert_eq!(rank(&a) + kernel(&a).dim(), 3);
    }

    #[test]
    fn subspace_dimension_formula(a in small_matrix(3), b in small_matrix(3), ka in 0usize..=3, kb in 0usize..=3) {
        let u = Subspace::span(&a.submatrix(0, 3, 0, ka));
        let w = Subspace::span(&b.submatrix(0, 3, 0, kb));
        let i = u.intersect(&w);
        let s = u.sum(&w);
        prop_assert_eq!(u.dim() + w.dim(), i.dim() + s.dim());
        prop_assert!(u.contains(&i) && w.contains(&i));
        prop_assert!(s.contains(&u) && s.contains(&w));
    }
}

#[test]
fn p45_squares_to_minus_identity() {
    let c = Scalar::i() / Scalar::sqrt3();
    let p45 = Matrix::from_rows(vec![
        vec![&c * Scalar::sqrt2(), c.clone()],
        vec![c.clone(), -(&c * Scalar::sqrt2())],
    ]);
    assert!((&p45 * &p45 + Matrix::identity(2)).is_zero());
    let inv = solve(&p45, &Matrix::identity(2)).unwrap().particular;
    assert_eq!(inv, -&p45);
}

#[test]
fn char_poly_is_similarity_invariant() {
    let z = Scalar::zeta();
    let a4 = Matrix::diag(&[z.clone(), z.inverse().unwrap()]);
    let m = Matrix::from_rows(vec![
        vec![Scalar::one(), Scalar::sqrt2()],
        vec![Scalar::i(), Scalar::from_i64(3)],
    ]);
    let a = conjugate(&m, &a4);
    assert_eq!(char_poly(&a), char_poly(&a4));
    assert_eq!(char_poly(&a).coeffs(), &[Scalar::one(), Scalar::from_i64(-1), Scalar::one()]);
}

#[test]
fn intertwiners_contain_exactly_the_solutions() {
    let a = Matrix::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 2]]);
    let s = intertwiner_space(std::slice::from_ref(&a), std::slice::from_ref(&a));
    // commutant of J_2(1) ⊕ (2): polynomials in the block plus a scalar: dim 3
    assert_eq!(s.dim(), 3);
    let x = Matrix::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    assert!(s.contains_vector(x.entries()));
    let y = Matrix::from_i64_rows(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]);
    assert!(!s.contains_vector(y.entries()));
}
