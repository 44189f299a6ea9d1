//! Classical and vincular pattern matching.
//!
//! A vincular pattern underlines adjacent letters; their images must occupy
//! adjacent positions in the host. An empty adjacency set gives a classical
//! pattern.

use std::collections::BTreeSet;

use crate::perm::Permutation;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSpec {
    letters: Vec<usize>,
    /// `i` in this set means pattern letters `i` and `i+1` (1-based) are
    /// underlined together.
    adjacency: BTreeSet<usize>,
}

impl PatternSpec {
    pub fn classical(letters: &[i64]) -> Result<Self, Error> {
        Self::vincular(letters, &[])
    }

    pub fn vincular(letters: &[i64], adjacency: &[usize]) -> Result<Self, Error> {
        let p = Permutation::build(letters)?;
        let m = p.n();
        let mut adj = BTreeSet::new();
        for &i in adjacency {
            if i < 1 || i >= m {
                return Err(Error::BadAdjacency { index: i, len: m });
            }
            adj.insert(i);
        }
        Ok(PatternSpec {
            letters: p.word().to_vec(),
            adjacency: adj,
        })
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn adjacency(&self) -> &BTreeSet<usize> {
        &self.adjacency
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_classical(&self) -> bool {
        self.adjacency.is_empty()
    }
}

fn search(
    host: &[usize],
    pat: &PatternSpec,
    chosen: &mut Vec<usize>,
    stop_early: bool,
    count: &mut usize,
) -> bool {
    let depth = chosen.len();
    if depth == pat.len() {
        *count += 1;
        return stop_early;
    }
    let start = chosen.last().map_or(0, |&prev| prev + 1);
    // letters depth and depth+1 (1-based) underlined: host positions adjacent
    let end = if pat.adjacency.contains(&depth) {
        start + 1
    } else {
        host.len()
    };
    for pos in start..end.min(host.len()) {
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(s, &ps)| (pat.letters[s] < pat.letters[depth]) == (host[ps] < host[pos]));
        if ok {
            chosen.push(pos);
            if search(host, pat, chosen, stop_early, count) {
                chosen.pop();
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// Number of occurrences of `pat` in the word `host` (distinct letters).
pub fn occurrence_count_in(host: &[usize], pat: &PatternSpec) -> usize {
    let mut count = 0;
    search(host, pat, &mut Vec::new(), false, &mut count);
    count
}

/// Whether `host` contains at least one occurrence of `pat`.
pub fn contains_in(host: &[usize], pat: &PatternSpec) -> bool {
    let mut count = 0;
    search(host, pat, &mut Vec::new(), true, &mut count);
    count > 0
}

pub fn occurrence_count(p: &Permutation, pat: &PatternSpec) -> usize {
    occurrence_count_in(p.word(), pat)
}

pub fn avoids(p: &Permutation, pat: &PatternSpec) -> bool {
    !contains_in(p.word(), pat)
}
