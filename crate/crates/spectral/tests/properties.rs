use constructions::{
    induction, ncsimplex, partition_construction, simplex_construction, sporadic4, standard, tilde_sigma5_construction,
    Weight,
};
use exact_linalg::Matrix;
use itertools::Itertools;
use kfield::Scalar;
use proptest::prelude::*;
use spectral::*;
use tss_core::{isomorphic, realize_permutation, Tss};

fn s(x: i64) -> Scalar {
    Scalar::from_i64(x)
}

// Weights of length k, one per partition, values drawn from 1..=k.
fn partition_weights(k: usize) -> Vec<Vec<i64>> {
    fn parts(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=max.min(n)).rev().flat_map(|p| parts(n - p, p).into_iter().map(move |mut r| { r.insert(0, p); r })).collect()
    }
    parts(k, k)
        .into_iter()
        .map(|ps| ps.iter().enumerate().flat_map(|(v, &m)| std::iter::repeat_n(v as i64 + 1, m)).collect())
        .collect()
}

fn catalog() -> Vec<(&'static str, Tss, Vec<Scalar>)> {
    let z = Scalar::zeta();
    vec![
        ("standard", standard(4, &s(1), &s(2)).unwrap(), vec![s(1), s(2)]),
        ("partition", partition_construction(&Weight::new(vec![s(1), s(1), s(2), s(3)])), vec![s(1), s(2), s(3)]),
        ("ncsimplex", ncsimplex(4, &z, &s(2)).unwrap(), vec![z.clone(), s(2)]),
        ("suspension", simplex_construction(3, &s(2)).unwrap(), vec![s(2)]),
        ("sporadic4", sporadic4(&s(1)).unwrap(), vec![s(1)]),
        ("s5", tilde_sigma5_construction(&s(1), &s(-1)).unwrap(), vec![s(1), s(-1)]),
    ]
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (1..=4).map(|k| partition_weights(k).len()).collect();
    assert_eq!(counts, vec![1, 2, 3, 5]);
}

#[test]
fn classification_round_trip_for_small_partitions() {
    for k in 2..=4 {
        for w in partition_weights(k) {
            let weight = Weight::new(w.iter().map(|&x| s(x)).collect());
            let t = partition_construction(&weight);
            let r = classify_commutative(&t, &[]).unwrap();
            assert_eq!(r.verdict, ClassVerdict::Irreducible { weight: weight.canonical() }, "{w:?}");
            assert_eq!(r.dimension, weight.multinomial());
            assert_eq!(r.partition, Some(weight.partition_string()));
            assert!(isomorphic(&t, &partition_construction(&weight.canonical())).is_ok());
        }
    }
}

#[test]
fn depth_law_for_fresh_induction() {
    let fresh = s(7);
    for (k, p) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let base = standard(k, &s(1), &s(2)).unwrap();
        let t = induction(&base, p, &fresh).unwrap();
        let d = depth_profile(&t, &fresh).unwrap();
        assert_eq!(d.depth, p, "(k, p) = ({k}, {p})");
        assert!(d.subset_independent);
        assert!(pfold_decomposition_is_direct(&t, &fresh, p));
    }
}

#[test]
fn induction_keeps_full_algebra_for_fresh_values() {
    for (k, p) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let base = standard(k, &s(1), &s(2)).unwrap();
        assert!(irreducibility_certificate(&base, base.witness().unwrap(), &[]).is_full());
        let t = induction(&base, p, &s(7)).unwrap();
        assert!(irreducibility_certificate(&t, t.witness().unwrap(), &[]).is_full(), "(k, p) = ({k}, {p})");
    }
}

#[test]
fn irreducible_catalog_depths_are_below_k() {
    for k in 2..=4 {
        for w in partition_weights(k).into_iter().filter(|w| w.iter().any(|&x| x != w[0])) {
            let t = partition_construction(&Weight::new(w.iter().map(|&x| s(x)).collect()));
            for v in w.iter().unique() {
                assert!(depth_profile(&t, &s(*v)).unwrap().depth < k, "{w:?} at {v}");
            }
        }
    }
}

#[test]
fn mu_is_subset_independent_on_catalog() {
    for (name, t, evs) in catalog() {
        for l in &evs {
            let d = depth_profile(&t, l).unwrap();
            assert!(d.subset_independent, "{name} at {l}");
            assert!(d.mu.windows(2).all(|w| w[0] >= w[1]), "{name}");
        }
    }
}

#[test]
fn catalog_filtrations_satisfy_jordan() {
    for (name, t, evs) in catalog() {
        for l in &evs {
            for a in t.elements() {
                assert!(filtration(a, l).jordan_inequalities_hold(), "{name}");
            }
        }
    }
}

#[test]
fn discovery_is_complete_on_catalog() {
    for (name, t, evs) in catalog() {
        for a in t.elements() {
            let e = discover_eigenvalues(a, &evs);
            assert!(e.is_complete(), "{name}");
            assert!(e.distinct().iter().all(|x| evs.contains(x)), "{name}");
        }
    }
}

fn perm_strategy(k: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..k).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn witness_transports_jfold(idx in 0usize..6, order in perm_strategy(5), mask in 1u32..32, pick in 0usize..4, c in 1u32..=2) {
        let (_, t, evs) = catalog().swap_remove(idx);
        let k = t.k();
        let sigma: Vec<usize> = order.into_iter().filter(|&x| x < k).collect();
        let subset: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let lambda = &evs[pick % evs.len()];
        let r = realize_permutation(t.witness().unwrap(), &sigma);
        let image: Vec<usize> = subset.iter().map(|&i| sigma[i]).collect();
        prop_assert_eq!(jfold(&t, lambda, c, &subset).image(&r), jfold(&t, lambda, c, &image));
    }

    #[test]
    fn shuffled_weights_classify_to_canonical(w in perm_strategy(4), vals in prop::sample::select(vec![vec![1i64, 1, 2, 2], vec![1, 2, 3, 3], vec![3, -1, 0, 2], vec![2, 2, 2, 1]])) {
        let weight = Weight::new(w.iter().map(|&i| s(vals[i])).collect());
        let t = partition_construction(&weight);
        let r = classify_commutative(&t, &[]).unwrap();
        prop_assert_eq!(r.verdict, ClassVerdict::Irreducible { weight: weight.canonical() });
    }

    #[test]
    fn jordan_inequalities_on_random_triangular(entries in prop::collection::vec(-2i64..=2, 16), diag in prop::collection::vec(0i64..=1, 4)) {
        let mut m = Matrix::zeros(4, 4);
        for r in 0..4 {
            m.set(r, r, s(diag[r]));
            for c in r + 1..4 {
                m.set(r, c, s(entries[r * 4 + c]));
            }
        }
        for l in [0, 1] {
            let f = filtration(&m, &s(l));
            prop_assert!(f.jordan_inequalities_hold());
            let mult = diag.iter().filter(|&&d| d == l).count();
            prop_assert_eq!(f.dims().last().copied().unwrap_or(0), mult);
        }
    }
}
