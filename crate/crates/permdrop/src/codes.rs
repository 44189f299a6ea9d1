//! Subexcedent codes of permutations: the Lehmer code, the A-code, the
//! B-code, their inverses, and the bijection `gamma = b_decode . a_code`.

use std::fmt;

use crate::perm::Permutation;
use crate::Error;

/// A sequence `(a_1, .., a_n)` with `1 <= a_i <= i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubexcedentSequence {
    entries: Vec<usize>,
}

impl SubexcedentSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self, Error> {
        for (idx, &a) in entries.iter().enumerate() {
            if a < 1 || a > idx + 1 {
                return Err(Error::NotSubexcedent {
                    index: idx + 1,
                    value: a,
                });
            }
        }
        Ok(SubexcedentSequence { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Display for SubexcedentSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// `Leh(p)_i = #{j <= i : p_j <= p_i}`.
pub fn lehmer_code(p: &Permutation) -> SubexcedentSequence {
    let w = p.word();
    let entries = (0..w.len())
        .map(|i| w[..=i].iter().filter(|&&x| x <= w[i]).count())
        .collect();
    SubexcedentSequence { entries }
}

/// Inverse of [`lehmer_code`]. Reading right to left, `a_i` is the rank of
/// `p_i` among the values occupying positions `1..=i`, so `p_i` is the
/// `a_i`-th smallest of the values not yet placed.
pub fn lehmer_decode(c: &SubexcedentSequence) -> Permutation {
    let n = c.len();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut word = vec![0usize; n];
    for i in (0..n).rev() {
        word[i] = remaining.remove(c.entries[i] - 1);
    }
    Permutation::from_word_unchecked(word)
}

/// `A-code(p) = Leh(p^{-1})`.
pub fn a_code(p: &Permutation) -> SubexcedentSequence {
    lehmer_code(&p.inverse())
}

/// Inverse of [`a_code`].
pub fn a_decode(c: &SubexcedentSequence) -> Permutation {
    lehmer_decode(c).inverse()
}

/// `B-code(p)_i = p^{-k}(i)` for the smallest `k >= 1` with `p^{-k}(i) <= i`.
pub fn b_code(p: &Permutation) -> SubexcedentSequence {
    let inv = p.inverse();
    let entries = (1..=p.n())
        .map(|i| {
            let mut x = inv.at(i);
            while x > i {
                x = inv.at(x);
            }
            x
        })
        .collect();
    SubexcedentSequence { entries }
}

/// Inverse of [`b_code`], by splicing `m = 1, 2, ..` into the cycle at
/// position `b_m`: deleting the maximum from its cycle leaves the earlier
/// entries unchanged, since backward orbits of `i < m` merely skip `m`.
pub fn b_decode(c: &SubexcedentSequence) -> Permutation {
    let n = c.len();
    let mut f = vec![0usize; n + 1]; // f[i] = image of i, 1-based
    for m in 1..=n {
        let b = c.entries[m - 1];
        if b == m {
            f[m] = m;
        } else {
            f[m] = f[b];
            f[b] = m;
        }
    }
    Permutation::from_word_unchecked(f[1..].to_vec())
}

/// The Foata–Han bijection `gamma = (B-code)^{-1} . A-code`, which carries
/// `(inv, Rmil, Lmap)` to `(sor, Cyc, Lmap)` and preserves `max_i(p_i - i)`.
pub fn gamma(p: &Permutation) -> Permutation {
    b_decode(&a_code(p))
}

/// Inverse of [`gamma`].
pub fn gamma_inverse(p: &Permutation) -> Permutation {
    a_decode(&b_code(p))
}
