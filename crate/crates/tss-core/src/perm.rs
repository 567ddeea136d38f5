//! Permutations of {0, …, k−1} in one-line notation: `p[i]` is the image of i.

pub type Perm = Vec<usize>;

pub fn identity(k: usize) -> Perm {
    (0..k).collect()
}

/// The adjacent transposition swapping j and j+1.
pub fn adjacent(k: usize, j: usize) -> Perm {
    let mut p = identity(k);
    p.swap(j, j + 1);
    p
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&x| x < p.len() && !std::mem::replace(&mut seen[x], true))
}

/// `(a ∘ b)(i) = a(b(i))`.
pub fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&x| a[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}

/// Word `[j₁, …, j_m]` with `σ = s_{j₁} ∘ ⋯ ∘ s_{j_m}`, of minimal length.
///
/// Each step left-multiplies by an adjacent transposition that removes one
/// inversion (values j, j+1 appearing out of order).
pub fn adjacent_word(sigma: &[usize]) -> Vec<usize> {
    let mut cur = sigma.to_vec();
    let mut word = Vec::new();
    loop {
        let pos = inverse(&cur);
        let Some(j) = (0..cur.len().saturating_sub(1)).find(|&j| pos[j] > pos[j + 1]) else {
            break;
        };
        word.push(j);
        // cur ← s_j ∘ cur
        for x in cur.iter_mut() {
            if *x == j {
                *x = j + 1;
            } else if *x == j + 1 {
                *x = j;
            }
        }
    }
    word
}

/// All permutations of {0, …, k−1} in lexicographic order.
pub fn all_permutations(k: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p = identity(k);
    loop {
        out.push(p.clone());
        // next lexicographic permutation
        let Some(i) = (0..k.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..k).rev().find(|&j| p[j] > p[i]).expect("successor exists");
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_word(k: usize, w: &[usize]) -> Perm {
        w.iter().fold(identity(k), |acc, &j| compose(&acc, &adjacent(k, j)))
    }

    #[test]
    fn word_reconstructs_permutation() {
        for p in all_permutations(4) {
            let w = adjacent_word(&p);
            assert_eq!(from_word(4, &w), p);
        }
    }

    #[test]
    fn word_of_transposition_13() {
        // (1 3) in one-based notation = s1 s2 s1
        let w = adjacent_word(&[2, 1, 0]);
        assert_eq!(w.len(), 3);
        assert_eq!(from_word(3, &w), vec![2, 1, 0]);
    }

    #[test]
    fn counts_and_inverse() {
        assert_eq!(all_permutations(4).len(), 24);
        assert_eq!(all_permutations(0).len(), 1);
        let p = vec![2, 0, 3, 1];
        assert_eq!(compose(&p, &inverse(&p)), identity(4));
        assert!(is_permutation(&p));
        assert!(!is_permutation(&[0, 0]));
    }
}
