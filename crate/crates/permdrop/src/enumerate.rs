//! Deterministic generators for the permutation families of interest:
//! all of `S_n`, the bounded-drop class `A(n,k)`, the bounded-lift class
//! `S(n,k)`, and 321-avoiding permutations ending in `k+1`, each optionally
//! intersected with a pattern-avoidance filter.
//!
//! Output is always in lexicographic order of the one-line word and
//! duplicate-free.

use crate::pattern::{contains_in, PatternSpec};
use crate::perm::Permutation;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// All of `S_n`.
    All,
    /// `A(n,k)`: maxdrop at most `k`, i.e. `p_i >= i - k`.
    BoundedDrop,
    /// `S(n,k)`: maxlift at most `k`, i.e. `p_i <= i + k`.
    BoundedLift,
    /// Ballot sequences in `Gamma_{n,k}` (see the `ballot` module).
    Ballot,
    /// 321-avoiding permutations of length `n` with last letter `k+1`.
    EndsIn321,
}

#[derive(Debug, Clone)]
pub struct SetSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub avoid: Option<PatternSpec>,
}

impl SetSpec {
    pub fn new(family: Family, n: usize, k: usize) -> Self {
        SetSpec {
            family,
            n,
            k,
            avoid: None,
        }
    }

    pub fn avoiding(mut self, pat: PatternSpec) -> Self {
        self.avoid = Some(pat);
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        match self.family {
            Family::All => Ok(()),
            Family::BoundedDrop | Family::BoundedLift | Family::Ballot => {
                if self.k > self.n {
                    Err(Error::BadBound {
                        n: self.n,
                        k: self.k,
                    })
                } else if self.family == Family::Ballot && self.avoid.is_some() {
                    Err(Error::FamilyMismatch(
                        "pattern avoidance does not apply to ballot sequences".into(),
                    ))
                } else {
                    Ok(())
                }
            }
            Family::EndsIn321 => {
                // last letter k+1 must exist
                if self.n == 0 || self.k + 1 > self.n {
                    Err(Error::BadBound {
                        n: self.n,
                        k: self.k,
                    })
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Prefixes already containing the pattern cannot recover: internal
/// underlines keep holding when letters are appended.
fn prefix_dead(prefix: &[usize], avoid: &[&PatternSpec]) -> bool {
    avoid.iter().any(|pat| contains_in(prefix, pat))
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    n: usize,
    min_value: impl Fn(usize) -> usize + Copy,
    max_value: impl Fn(usize) -> usize + Copy,
    fixed_last: Option<usize>,
    avoid: &[&PatternSpec],
    prefix: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n {
        out.push(Permutation::from_word_unchecked(prefix.clone()));
        return;
    }
    let i = prefix.len() + 1; // 1-based position being filled
    if let (Some(last), true) = (fixed_last, i == n) {
        if !used[last] && last >= min_value(i) && last <= max_value(i) {
            prefix.push(last);
            if !prefix_dead(prefix, avoid) {
                dfs(
                    n, min_value, max_value, fixed_last, avoid, prefix, used, out,
                );
            }
            prefix.pop();
        }
        return;
    }
    for v in min_value(i)..=max_value(i) {
        if used[v] || Some(v) == fixed_last {
            continue;
        }
        used[v] = true;
        prefix.push(v);
        if !prefix_dead(prefix, avoid) {
            dfs(
                n, min_value, max_value, fixed_last, avoid, prefix, used, out,
            );
        }
        prefix.pop();
        used[v] = false;
    }
}

/// Members of the family, each exactly once, lexicographically ordered.
///
/// `Family::Ballot` is not a permutation family; use
/// [`crate::ballot::enumerate_ballot`] for it.
pub fn enumerate(spec: &SetSpec) -> Result<Vec<Permutation>, Error> {
    spec.validate()?;
    let n = spec.n;
    let k = spec.k;
    let mut avoid: Vec<&PatternSpec> = Vec::new();
    if let Some(pat) = &spec.avoid {
        avoid.push(pat);
    }
    let pat321 = PatternSpec::classical(&[3, 2, 1]).expect("valid pattern");
    let mut out = Vec::new();
    match spec.family {
        Family::Ballot => {
            return Err(Error::FamilyMismatch(
                "ballot sequences are not permutations; use enumerate_ballot".into(),
            ))
        }
        Family::All => {
            let mut prefix = Vec::new();
            let mut used = vec![false; n + 1];
            dfs(
                n,
                |_| 1,
                |_| n,
                None,
                &avoid,
                &mut prefix,
                &mut used,
                &mut out,
            );
        }
        Family::BoundedDrop => {
            let mut prefix = Vec::new();
            let mut used = vec![false; n + 1];
            dfs(
                n,
                move |i| i.saturating_sub(k).max(1),
                |_| n,
                None,
                &avoid,
                &mut prefix,
                &mut used,
                &mut out,
            );
        }
        Family::BoundedLift => {
            // constructive insertion: extend each member of S(m-1,k) by
            // inserting m into its last min(k+1, m) slots
            let mut words: Vec<Vec<usize>> = vec![Vec::new()];
            for m in 1..=n {
                let mut next = Vec::new();
                for w in &words {
                    let lo = m.saturating_sub(k).max(1);
                    for pos in lo..=m {
                        let mut nw = w.clone();
                        nw.insert(pos - 1, m);
                        next.push(nw);
                    }
                }
                words = next;
            }
            for w in words {
                if !avoid.iter().any(|pat| contains_in(&w, pat)) {
                    out.push(Permutation::from_word_unchecked(w));
                }
            }
            out.sort();
        }
        Family::EndsIn321 => {
            avoid.push(&pat321);
            let mut prefix = Vec::new();
            let mut used = vec![false; n + 1];
            dfs(
                n,
                |_| 1,
                |_| n,
                Some(k + 1),
                &avoid,
                &mut prefix,
                &mut used,
                &mut out,
            );
        }
    }
    Ok(out)
}

/// Cardinality of the family, by counting the stream.
pub fn count(spec: &SetSpec) -> Result<u64, Error> {
    if spec.family == Family::Ballot {
        spec.validate()?;
        return Ok(crate::ballot::enumerate_ballot(spec.n, spec.k)?.len() as u64);
    }
    Ok(enumerate(spec)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_util::all_permutations;

    fn pat(letters: &[i64]) -> PatternSpec {
        PatternSpec::classical(letters).unwrap()
    }

    #[test]
    fn bounded_drop_counts() {
        // |A(n,k)| = (k+1)^(n-k) k!
        assert_eq!(count(&SetSpec::new(Family::BoundedDrop, 4, 1)).unwrap(), 8);
        assert_eq!(
            count(&SetSpec::new(Family::BoundedDrop, 5, 5)).unwrap(),
            120
        );
        assert_eq!(count(&SetSpec::new(Family::BoundedDrop, 6, 0)).unwrap(), 1);
    }

    #[test]
    fn table_one_spot_checks() {
        let a42 = SetSpec::new(Family::BoundedDrop, 4, 2).avoiding(pat(&[2, 1, 3]));
        assert_eq!(count(&a42).unwrap(), 9);
        let a74 = SetSpec::new(Family::BoundedDrop, 7, 4).avoiding(pat(&[2, 1, 3]));
        assert_eq!(count(&a74).unwrap(), 165);
        let s86 = SetSpec::new(Family::EndsIn321, 8, 6);
        assert_eq!(count(&s86).unwrap(), 429);
    }

    #[test]
    fn generated_families_match_filtering_all_permutations() {
        for n in 0..=6 {
            let all = all_permutations(n);
            for k in 0..=n {
                let a: Vec<_> = all.iter().filter(|p| p.maxdrop() <= k).cloned().collect();
                let mut got = enumerate(&SetSpec::new(Family::BoundedDrop, n, k)).unwrap();
                assert_eq!(got, a, "A({n},{k})");

                let s: Vec<_> = all.iter().filter(|p| p.maxlift() <= k).cloned().collect();
                got = enumerate(&SetSpec::new(Family::BoundedLift, n, k)).unwrap();
                assert_eq!(got, s, "S({n},{k})");
            }
        }
    }

    #[test]
    fn bounded_drop_is_inverse_of_bounded_lift() {
        for n in 0..=6 {
            for k in 0..=n {
                let mut inverted: Vec<_> = enumerate(&SetSpec::new(Family::BoundedLift, n, k))
                    .unwrap()
                    .iter()
                    .map(|p| p.inverse())
                    .collect();
                inverted.sort();
                let a = enumerate(&SetSpec::new(Family::BoundedDrop, n, k)).unwrap();
                assert_eq!(inverted, a);
            }
        }
    }

    #[test]
    fn streams_are_strictly_increasing() {
        for spec in [
            SetSpec::new(Family::All, 5, 0),
            SetSpec::new(Family::BoundedDrop, 6, 2),
            SetSpec::new(Family::BoundedLift, 6, 3),
            SetSpec::new(Family::EndsIn321, 6, 3),
        ] {
            let perms = enumerate(&spec).unwrap();
            assert!(perms.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn ends_in_321_fixes_the_last_letter() {
        for p in enumerate(&SetSpec::new(Family::EndsIn321, 7, 3)).unwrap() {
            assert_eq!(p.at(7), 4);
            assert!(crate::pattern::avoids(&p, &pat(&[3, 2, 1])));
        }
    }

    #[test]
    fn maxdrop_of_213_avoiders_is_determined_by_the_last_letter() {
        // Lemma: maxdrop(p) = n - p_n for 213-avoiding p
        for n in 1..=7 {
            let spec = SetSpec::new(Family::BoundedDrop, n, n).avoiding(pat(&[2, 1, 3]));
            for p in enumerate(&spec).unwrap() {
                assert_eq!(p.maxdrop(), n - p.at(n));
            }
        }
    }

    #[test]
    fn bound_validation() {
        assert!(enumerate(&SetSpec::new(Family::BoundedDrop, 3, 4)).is_err());
        assert!(enumerate(&SetSpec::new(Family::EndsIn321, 3, 3)).is_err());
        assert!(enumerate(&SetSpec::new(Family::Ballot, 3, 2)).is_err());
    }
}
