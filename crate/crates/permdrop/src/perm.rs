//! Permutations in one-line notation and the statistics defined on them.
//!
//! Words are 1-indexed: `p.at(i)` is the letter at position `i` for
//! `1 <= i <= n`. All statistics are pure functions of the word.

use std::collections::BTreeSet;
use std::fmt;

use crate::Error;

/// A permutation of `{1, .., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// The five marker sets of a word: left-to-right maximum places/letters,
/// right-to-left minimum places/letters and right-to-left maximum letters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkerSets {
    pub lmal: BTreeSet<usize>,
    pub lmap: BTreeSet<usize>,
    pub rmil: BTreeSet<usize>,
    pub rmip: BTreeSet<usize>,
    pub rmal: BTreeSet<usize>,
}

/// Disjoint cycles of the function `i -> p(i)`. Each cycle starts at its
/// minimum and cycles are sorted by those minima.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub cycles: Vec<Vec<usize>>,
}

impl CycleDecomposition {
    /// Set of cycle minima.
    pub fn cyc_set(&self) -> BTreeSet<usize> {
        self.cycles.iter().map(|c| c[0]).collect()
    }

    /// Number of cycles.
    pub fn cyc(&self) -> usize {
        self.cycles.len()
    }
}

impl Permutation {
    /// Validates that `word` is a rearrangement of `1..=word.len()`.
    pub fn build(word: &[i64]) -> Result<Self, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::with_capacity(n);
        for (idx, &v) in word.iter().enumerate() {
            if v < 1 || v as usize > n {
                return Err(Error::ValueOutOfRange {
                    index: idx + 1,
                    value: v,
                });
            }
            let v = v as usize;
            if seen[v] {
                return Err(Error::DuplicateValue {
                    index: idx + 1,
                    value: v,
                });
            }
            seen[v] = true;
            out.push(v);
        }
        Ok(Permutation { word: out })
    }

    /// Internal constructor for words produced by algorithms that are
    /// bijective by construction.
    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(
            Permutation::build(&word.iter().map(|&v| v as i64).collect::<Vec<_>>()).is_ok()
        );
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Position of value `v` (1-based).
    pub fn position_of(&self, v: usize) -> usize {
        self.word
            .iter()
            .position(|&x| x == v)
            .expect("value in range")
            + 1
    }

    pub fn inverse(&self) -> Permutation {
        let n = self.n();
        let mut inv = vec![0usize; n];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    /// Number of pairs `i < j` with `p_i > p_j`.
    pub fn inv_count(&self) -> usize {
        let w = &self.word;
        let mut c = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// Number of positions `i < n` with `p_i > p_{i+1}`.
    pub fn des_count(&self) -> usize {
        self.word.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// Maximum of `i - p_i` clamped at 0; 0 for the empty permutation.
    pub fn maxdrop(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .map(|(i, &v)| (i + 1).saturating_sub(v))
            .max()
            .unwrap_or(0)
    }

    /// Maximum of `p_i - i` clamped at 0; 0 for the empty permutation.
    pub fn maxlift(&self) -> usize {
        self.word
            .iter()
            .enumerate()
            .map(|(i, &v)| v.saturating_sub(i + 1))
            .max()
            .unwrap_or(0)
    }

    pub fn marker_sets(&self) -> MarkerSets {
        marker_sets(&self.word)
    }

    /// `lmax` = number of left-to-right maximum letters.
    pub fn lmax(&self) -> usize {
        self.marker_sets().lmal.len()
    }

    /// `rmin` = number of right-to-left minimum letters.
    pub fn rmin(&self) -> usize {
        self.marker_sets().rmil.len()
    }

    /// `rmax` = number of right-to-left maximum letters.
    pub fn rmax(&self) -> usize {
        self.marker_sets().rmal.len()
    }

    pub fn cycle_decomposition(&self) -> CycleDecomposition {
        let n = self.n();
        let mut visited = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if visited[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !visited[cur] {
                visited[cur] = true;
                cycle.push(cur);
                cur = self.at(cur);
            }
            cycles.push(cycle);
        }
        // starts are increasing, and each cycle starts at its minimum
        // because smaller elements were already visited
        CycleDecomposition { cycles }
    }

    pub fn cyc(&self) -> usize {
        self.cycle_decomposition().cyc()
    }

    /// The unique decomposition `p = (i_1,j_1)..(i_r,j_r)` with strictly
    /// increasing `j`'s, listed in increasing `j`. Replaying the swaps
    /// left-to-right on the identity word reproduces `p`.
    pub fn sorting_transpositions(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let mut w = self.word.clone();
        let mut pos = vec![0usize; n + 1];
        for (i, &v) in w.iter().enumerate() {
            pos[v] = i + 1;
        }
        let mut trans = Vec::new();
        for j in (2..=n).rev() {
            let i = pos[j];
            if i != j {
                let other = w[j - 1];
                w.swap(i - 1, j - 1);
                pos[j] = j;
                pos[other] = i;
                trans.push((i, j));
            }
        }
        trans.reverse();
        trans
    }

    /// `sor(p)` = total displacement of the sorting decomposition.
    pub fn sorting_index(&self) -> usize {
        self.sorting_transpositions()
            .iter()
            .map(|&(i, j)| j - i)
            .sum()
    }

    /// `DIS(p)` = `sor(p^{-1})`.
    pub fn dis(&self) -> usize {
        self.inverse().sorting_index()
    }

    /// Number of non-weak excedances before the last position:
    /// `#{i < n : p_i < i}`.
    pub fn vnw(&self) -> Result<usize, Error> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        Ok(self
            .word
            .iter()
            .enumerate()
            .take(self.n() - 1)
            .filter(|&(i, &v)| v < i + 1)
            .count())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

/// Marker sets of an arbitrary word (used on permutations and on
/// subexcedent sequences, which may repeat letters).
pub fn marker_sets(w: &[usize]) -> MarkerSets {
    let n = w.len();
    let mut lmal = BTreeSet::new();
    let mut lmap = BTreeSet::new();
    let mut rmil = BTreeSet::new();
    let mut rmip = BTreeSet::new();
    let mut rmal = BTreeSet::new();
    for i in 0..n {
        if w[..i].iter().all(|&x| x < w[i]) {
            lmal.insert(w[i]);
            lmap.insert(i + 1);
        }
        if w[i + 1..].iter().all(|&x| x > w[i]) {
            rmil.insert(w[i]);
            rmip.insert(i + 1);
        }
        if w[i + 1..].iter().all(|&x| x < w[i]) {
            rmal.insert(w[i]);
        }
    }
    MarkerSets {
        lmal,
        lmap,
        rmil,
        rmip,
        rmal,
    }
}
