//! Ballot sequences, the `vpk` statistic, and the bijections `alpha`,
//! `beta`, `delta` relating 213-avoiding bounded permutations, 321-avoiding
//! permutations with a fixed last letter, and ballot sequences.

use std::fmt;

use crate::pattern::{avoids, PatternSpec};
use crate::perm::Permutation;
use crate::Error;

/// A word over `{+1, -1}` with all prefix sums nonnegative; an element of
/// `Gamma_{n,k}` where `n` counts the `+1`s and `k` the `-1`s.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotSequence {
    steps: Vec<i8>,
}

impl BallotSequence {
    /// Accepts iff every step is `+1`/`-1` and all prefix sums stay `>= 0`.
    pub fn validate(steps: &[i8]) -> Result<Self, Error> {
        let mut sum = 0i64;
        for (idx, &s) in steps.iter().enumerate() {
            if s != 1 && s != -1 {
                return Err(Error::BadStep {
                    position: idx + 1,
                    value: s as i64,
                });
            }
            sum += s as i64;
            if sum < 0 {
                return Err(Error::NegativePrefix { position: idx + 1 });
            }
        }
        Ok(BallotSequence {
            steps: steps.to_vec(),
        })
    }

    /// Parses either the compact "+-" form or a comma/space separated
    /// "1,-1,.." list.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let steps: Vec<i8> = if text.chars().all(|c| c == '+' || c == '-') {
            text.chars()
                .map(|c| if c == '+' { 1 } else { -1 })
                .collect()
        } else {
            let mut v = Vec::new();
            for tok in text.split(|c: char| c == ',' || c.is_whitespace()) {
                if tok.is_empty() {
                    continue;
                }
                let x: i64 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad ballot token {tok:?}")))?;
                if x != 1 && x != -1 {
                    return Err(Error::BadStep {
                        position: v.len() + 1,
                        value: x,
                    });
                }
                v.push(x as i8);
            }
            v
        };
        Self::validate(&steps)
    }

    pub fn steps(&self) -> &[i8] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Number of `+1` steps.
    pub fn plus_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == 1).count()
    }

    /// Number of `-1` steps.
    pub fn minus_count(&self) -> usize {
        self.steps.iter().filter(|&&s| s == -1).count()
    }

    /// `vpk`: `+1` steps immediately followed by `-1`, excluding the
    /// rightmost `+1`.
    pub fn vpk(&self) -> usize {
        let last_plus = self.steps.iter().rposition(|&s| s == 1);
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(i, w)| w[0] == 1 && w[1] == -1 && Some(*i) != last_plus)
            .count()
    }

    /// Maximal alternating runs `(p_1, m_1), .., (p_r, m_r)` of `+1`s then
    /// `-1`s; `m_r = 0` when the sequence ends in `+1`. Empty for the empty
    /// sequence.
    pub fn runs(&self) -> Vec<(usize, usize)> {
        let mut runs = Vec::new();
        let mut i = 0;
        let s = &self.steps;
        while i < s.len() {
            let mut p = 0;
            while i < s.len() && s[i] == 1 {
                p += 1;
                i += 1;
            }
            let mut m = 0;
            while i < s.len() && s[i] == -1 {
                m += 1;
                i += 1;
            }
            runs.push((p, m));
        }
        runs
    }

    #[cfg(test)]
    fn from_runs(runs: &[(usize, usize)]) -> Self {
        let mut steps = Vec::new();
        for &(p, m) in runs {
            steps.extend(std::iter::repeat_n(1i8, p));
            steps.extend(std::iter::repeat_n(-1i8, m));
        }
        BallotSequence { steps }
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.steps {
            write!(f, "{}", if s == 1 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

/// All of `Gamma_{n,k}`, lexicographic with `+1` ordered before `-1`.
pub fn enumerate_ballot(n: usize, k: usize) -> Result<Vec<BallotSequence>, Error> {
    if k > n {
        return Err(Error::BadBound { n, k });
    }
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(n + k);
    fn rec(
        plus_left: usize,
        minus_left: usize,
        height: usize,
        steps: &mut Vec<i8>,
        out: &mut Vec<BallotSequence>,
    ) {
        if plus_left == 0 && minus_left == 0 {
            out.push(BallotSequence {
                steps: steps.clone(),
            });
            return;
        }
        if plus_left > 0 {
            steps.push(1);
            rec(plus_left - 1, minus_left, height + 1, steps, out);
            steps.pop();
        }
        if minus_left > 0 && height > 0 {
            steps.push(-1);
            rec(plus_left, minus_left - 1, height - 1, steps, out);
            steps.pop();
        }
    }
    rec(n, k, 0, &mut steps, &mut out);
    Ok(out)
}

fn pattern_213() -> PatternSpec {
    PatternSpec::classical(&[2, 1, 3]).expect("valid pattern")
}

fn pattern_321() -> PatternSpec {
    PatternSpec::classical(&[3, 2, 1]).expect("valid pattern")
}

/// Right-to-left maximum letters of `p` with their positions, left to right:
/// positions increase, values decrease.
fn rl_maxima(p: &Permutation) -> Vec<(usize, usize)> {
    let w = p.word();
    let mut out = Vec::new();
    for i in 0..w.len() {
        if w[i + 1..].iter().all(|&x| x < w[i]) {
            out.push((i + 1, w[i]));
        }
    }
    out
}

/// The bijection `A_{n,k}(213) -> Gamma_{n,k}`: `i_1` leading `+1`s, then
/// for consecutive right-to-left maxima a fall of `-1`s and a rise of
/// `+1`s, and a trailing run of `p_n - n + k` `-1`s.
///
/// `k` defaults to `maxdrop(p)`.
pub fn alpha(p: &Permutation, k: Option<usize>) -> Result<BallotSequence, Error> {
    let n = p.n();
    let k = k.unwrap_or_else(|| p.maxdrop());
    if !avoids(p, &pattern_213()) {
        return Err(Error::PatternContained("213".into()));
    }
    if p.maxdrop() > k {
        return Err(Error::DropBoundExceeded {
            maxdrop: p.maxdrop(),
            k,
        });
    }
    if k > n {
        return Err(Error::BadBound { n, k });
    }
    if n == 0 {
        return Ok(BallotSequence { steps: Vec::new() });
    }
    let maxima = rl_maxima(p);
    let mut steps = Vec::with_capacity(n + k);
    steps.extend(std::iter::repeat_n(1i8, maxima[0].0));
    for pair in maxima.windows(2) {
        let (pos_j, val_j) = pair[0];
        let (pos_next, val_next) = pair[1];
        steps.extend(std::iter::repeat_n(-1i8, val_j - val_next));
        steps.extend(std::iter::repeat_n(1i8, pos_next - pos_j));
    }
    steps.extend(std::iter::repeat_n(-1i8, p.at(n) + k - n));
    BallotSequence::validate(&steps)
}

/// Inverse of [`alpha`]: the run lengths locate the right-to-left maxima,
/// and each gap is filled with the largest remaining letters below the
/// maximum closing it, in increasing order.
pub fn alpha_inverse(a: &BallotSequence) -> Permutation {
    let n = a.plus_count();
    let k = a.minus_count();
    if n == 0 {
        return Permutation::identity(0);
    }
    let runs = a.runs();
    let r = runs.len();
    let mut word = vec![0usize; n];
    // positions and values of the right-to-left maxima
    let mut positions = Vec::with_capacity(r);
    let mut values = Vec::with_capacity(r);
    let mut pos = n;
    let mut val = n - k;
    for j in (0..r).rev() {
        positions.push(pos);
        values.push(val + runs[j].1);
        val += runs[j].1;
        if j > 0 {
            pos -= runs[j].0;
        }
    }
    positions.reverse();
    values.reverse();
    let mut used = vec![false; n + 1];
    for (&p, &v) in positions.iter().zip(&values) {
        word[p - 1] = v;
        used[v] = true;
    }
    // fill the gaps right to left
    for j in (0..r).rev() {
        let lo = if j == 0 { 0 } else { positions[j - 1] };
        let slots: Vec<usize> = (lo + 1..positions[j]).collect();
        let mut fill: Vec<usize> = (1..values[j])
            .rev()
            .filter(|&v| !used[v])
            .take(slots.len())
            .collect();
        fill.reverse();
        for (&s, &v) in slots.iter().zip(&fill) {
            word[s - 1] = v;
            used[v] = true;
        }
    }
    Permutation::from_word_unchecked(word)
}

/// The bijection `S^k_{n+1}(321) -> Gamma_{n,k}`, built on the non-weak
/// excedances before the last position. With no such excedance the image
/// degenerates to `+^n -^k`.
///
/// `k` defaults to the last letter minus one.
pub fn beta(p: &Permutation, k: Option<usize>) -> Result<BallotSequence, Error> {
    if p.is_empty() {
        return Err(Error::EmptyPermutation);
    }
    let len = p.n(); // = n + 1
    let n = len - 1;
    let last = p.at(len);
    let k = k.unwrap_or(last - 1);
    if last != k + 1 {
        return Err(Error::WrongLastLetter {
            last,
            expected: k + 1,
        });
    }
    if !avoids(p, &pattern_321()) {
        return Err(Error::PatternContained("321".into()));
    }
    let nwe: Vec<(usize, usize)> = (1..len)
        .filter(|&i| p.at(i) < i)
        .map(|i| (i, p.at(i)))
        .collect();
    let mut steps: Vec<i8> = Vec::with_capacity(n + k);
    if nwe.is_empty() {
        steps.extend(std::iter::repeat_n(1i8, n));
        steps.extend(std::iter::repeat_n(-1i8, k));
        return BallotSequence::validate(&steps);
    }
    steps.extend(std::iter::repeat_n(1i8, nwe[0].0 - 1));
    steps.extend(std::iter::repeat_n(-1i8, nwe[0].1));
    for pair in nwe.windows(2) {
        steps.extend(std::iter::repeat_n(1i8, pair[1].0 - pair[0].0));
        steps.extend(std::iter::repeat_n(-1i8, pair[1].1 - pair[0].1));
    }
    let (last_pos, last_val) = *nwe.last().expect("nonempty");
    steps.extend(std::iter::repeat_n(1i8, n + 1 - last_pos));
    steps.extend(std::iter::repeat_n(-1i8, k - last_val));
    BallotSequence::validate(&steps)
}

/// Inverse of [`beta`]: runs place the non-weak excedance values, `k+1`
/// closes the word, and the rest fill in increasing order.
pub fn beta_inverse(a: &BallotSequence) -> Permutation {
    let n = a.plus_count();
    let k = a.minus_count();
    let runs = a.runs();
    let r = runs.len();
    let mut word = vec![0usize; n + 1];
    let mut used = vec![false; n + 2];
    word[n] = k + 1;
    used[k + 1] = true;
    // element k - m_r - .. - m_{j+2} at position p_1 + .. + p_{j+1} + 1
    let mut pos = 0;
    let mut val: usize = runs.iter().skip(1).map(|&(_, m)| m).sum();
    // val = m_2 + .. + m_r, so the first placed element is k - val = m_1
    let mut to_place = Vec::new();
    for j in 0..r.saturating_sub(1) {
        pos += runs[j].0;
        to_place.push((pos + 1, k - val));
        val -= runs[j + 1].1;
    }
    for (p, v) in to_place {
        word[p - 1] = v;
        used[v] = true;
    }
    let mut rest = (1..=n + 1).filter(|&v| !used[v]);
    for slot in word.iter_mut() {
        if *slot == 0 {
            *slot = rest.next().expect("enough letters");
        }
    }
    Permutation::from_word_unchecked(word)
}

/// The direct bijection `A_{n,k}(213) -> S^k_{n+1}(321)`; equals
/// `beta_inverse . alpha`.
pub fn delta(p: &Permutation, k: Option<usize>) -> Result<Permutation, Error> {
    let n = p.n();
    let k = k.unwrap_or_else(|| p.maxdrop());
    if !avoids(p, &pattern_213()) {
        return Err(Error::PatternContained("213".into()));
    }
    if p.maxdrop() > k {
        return Err(Error::DropBoundExceeded {
            maxdrop: p.maxdrop(),
            k,
        });
    }
    if k > n {
        return Err(Error::BadBound { n, k });
    }
    let maxima = rl_maxima(p);
    let r = maxima.len();
    let mut word = vec![0usize; n + 1];
    let mut used = vec![false; n + 2];
    word[n] = k + 1;
    used[k + 1] = true;
    for j in 0..r.saturating_sub(1) {
        let pos = maxima[j].0 + 1;
        let val = n - maxima[j + 1].1;
        word[pos - 1] = val;
        used[val] = true;
    }
    let mut rest = (1..=n + 1).filter(|&v| !used[v]);
    for slot in word.iter_mut() {
        if *slot == 0 {
            *slot = rest.next().expect("enough letters");
        }
    }
    Ok(Permutation::from_word_unchecked(word))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate, Family, SetSpec};

    fn p(word: &[i64]) -> Permutation {
        Permutation::build(word).unwrap()
    }

    fn sample_sequence() -> BallotSequence {
        BallotSequence::parse("1,-1,1,1,1,-1,1,1,-1,-1,-1,-1,1,1,-1").unwrap()
    }

    #[test]
    fn validate_examples() {
        let b = BallotSequence::validate(&[1, -1]).unwrap();
        assert_eq!((b.plus_count(), b.minus_count()), (1, 1));
        assert!(matches!(
            BallotSequence::validate(&[-1]),
            Err(Error::NegativePrefix { position: 1 })
        ));
        assert!(matches!(
            BallotSequence::validate(&[1, 2]),
            Err(Error::BadStep {
                position: 2,
                value: 2
            })
        ));
        let long = sample_sequence();
        assert_eq!((long.plus_count(), long.minus_count()), (8, 7));
        assert_eq!(long.to_string(), "+-+++-++----++-");
        assert_eq!(BallotSequence::parse("+-+++-++----++-").unwrap(), long);
    }

    #[test]
    fn enumerate_ballot_counts() {
        assert_eq!(enumerate_ballot(4, 3).unwrap().len(), 14);
        assert_eq!(enumerate_ballot(6, 0).unwrap().len(), 1);
        assert_eq!(enumerate_ballot(5, 5).unwrap().len(), 42);
        assert!(enumerate_ballot(2, 3).is_err());
    }

    #[test]
    fn vpk_examples() {
        assert_eq!(sample_sequence().vpk(), 3);
        assert_eq!(BallotSequence::parse("++++").unwrap().vpk(), 0);
        assert_eq!(BallotSequence::parse("+-").unwrap().vpk(), 0);
    }

    #[test]
    fn alpha_worked_example() {
        let pi = p(&[8, 3, 4, 7, 5, 6, 1, 2]);
        assert_eq!(alpha(&pi, Some(7)).unwrap(), sample_sequence());
        assert_eq!(
            alpha(&Permutation::identity(5), Some(0))
                .unwrap()
                .to_string(),
            "+++++"
        );
        assert_eq!(alpha(&p(&[1]), Some(0)).unwrap().to_string(), "+");
    }

    #[test]
    fn alpha_rejects_bad_inputs() {
        assert!(matches!(
            alpha(&p(&[2, 1, 3]), None),
            Err(Error::PatternContained(_))
        ));
        assert!(matches!(
            alpha(&p(&[2, 3, 1]), Some(1)),
            Err(Error::DropBoundExceeded { maxdrop: 2, k: 1 })
        ));
    }

    #[test]
    fn alpha_inverse_worked_example() {
        assert_eq!(
            alpha_inverse(&sample_sequence()),
            p(&[8, 3, 4, 7, 5, 6, 1, 2])
        );
        assert_eq!(
            alpha_inverse(&BallotSequence::parse("++++").unwrap()),
            Permutation::identity(4)
        );
    }

    #[test]
    fn alpha_round_trips_exhaustively() {
        for n in 0..=6 {
            for k in 0..=n {
                for a in enumerate_ballot(n, k).unwrap() {
                    let pi = alpha_inverse(&a);
                    assert_eq!(pi.n(), n);
                    let back = alpha(&pi, Some(k)).unwrap();
                    assert_eq!(back, a, "Gamma_{n},{k}");
                    assert_eq!(pi.des_count(), a.vpk());
                }
            }
        }
    }

    #[test]
    fn beta_worked_example() {
        let sigma = p(&[3, 1, 4, 5, 2, 7, 6, 9, 8]);
        assert_eq!(beta(&sigma, Some(7)).unwrap(), sample_sequence());
        // r = 0 degenerate case: 132 in S^1_3(321) has no early non-weak excedance
        assert_eq!(beta(&p(&[1, 3, 2]), None).unwrap().to_string(), "++-");
    }

    #[test]
    fn beta_rejects_bad_inputs() {
        assert!(matches!(
            beta(&p(&[3, 2, 1]), None),
            Err(Error::PatternContained(_))
        ));
        assert!(matches!(
            beta(&p(&[1, 3, 2]), Some(2)),
            Err(Error::WrongLastLetter {
                last: 2,
                expected: 3
            })
        ));
    }

    #[test]
    fn beta_inverse_worked_example() {
        assert_eq!(
            beta_inverse(&sample_sequence()),
            p(&[3, 1, 4, 5, 2, 7, 6, 9, 8])
        );
        assert_eq!(
            beta_inverse(&BallotSequence::parse("+-").unwrap()),
            p(&[1, 2])
        );
    }

    #[test]
    fn beta_round_trips_exhaustively() {
        for n in 0..=5 {
            for k in 0..=n {
                for a in enumerate_ballot(n, k).unwrap() {
                    let sigma = beta_inverse(&a);
                    assert_eq!(sigma.n(), n + 1);
                    assert_eq!(sigma.at(n + 1), k + 1);
                    assert!(avoids(&sigma, &pattern_321()));
                    assert_eq!(beta(&sigma, Some(k)).unwrap(), a);
                    assert_eq!(sigma.vnw().unwrap(), a.vpk());
                }
            }
        }
    }

    #[test]
    fn delta_worked_example() {
        assert_eq!(
            delta(&p(&[8, 3, 4, 7, 5, 6, 1, 2]), Some(7)).unwrap(),
            p(&[3, 1, 4, 5, 2, 7, 6, 9, 8])
        );
    }

    #[test]
    fn delta_equals_beta_inverse_of_alpha() {
        for n in 1..=6 {
            for k in 0..=n {
                let spec = SetSpec::new(Family::BoundedDrop, n, k)
                    .avoiding(PatternSpec::classical(&[2, 1, 3]).unwrap());
                for pi in enumerate(&spec).unwrap() {
                    let direct = delta(&pi, Some(k)).unwrap();
                    let composed = beta_inverse(&alpha(&pi, Some(k)).unwrap());
                    assert_eq!(direct, composed, "pi={pi} k={k}");
                    assert_eq!(pi.des_count(), direct.vnw().unwrap());
                }
            }
        }
    }

    #[test]
    fn from_runs_round_trip() {
        let a = sample_sequence();
        assert_eq!(BallotSequence::from_runs(&a.runs()), a);
        assert_eq!(a.runs(), vec![(1, 1), (3, 1), (2, 4), (2, 1)]);
    }
}
