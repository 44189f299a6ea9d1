//! Test-only brute-force generators, independent of the `enumerate` module
//! so they can serve as oracles for it.

use crate::perm::Permutation;

/// Every permutation of `{1..n}`, by direct recursion.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation::from_word_unchecked(word.clone()));
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                word.push(v);
                rec(n, word, used, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut word, &mut used, &mut out);
    out
}

/// Every subexcedent sequence of length `n`.
pub fn all_subexcedent(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for i in 1..=n {
        let mut next = Vec::new();
        for seq in &out {
            for v in 1..=i {
                let mut s = seq.clone();
                s.push(v);
                next.push(s);
            }
        }
        out = next;
    }
    out
}
