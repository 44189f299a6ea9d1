//! Text forms accepted on the command line.

use crate::codes::SubexcedentSequence;
use crate::perm::Permutation;
use crate::Error;

/// Accepts space- or comma-separated integers, or a bare digit string when
/// every letter is a single digit (so only for n <= 9).
pub fn parse_permutation(text: &str) -> Result<Permutation, Error> {
    Permutation::build(&parse_word(text)?)
}

/// A subexcedent sequence in the same text forms as a permutation.
pub fn parse_subexcedent(text: &str) -> Result<SubexcedentSequence, Error> {
    let word = parse_word(text)?;
    let mut entries = Vec::with_capacity(word.len());
    for (idx, v) in word.into_iter().enumerate() {
        if v < 1 {
            return Err(Error::NotSubexcedent {
                index: idx + 1,
                value: 0,
            });
        }
        entries.push(v as usize);
    }
    SubexcedentSequence::new(entries)
}

fn parse_word(text: &str) -> Result<Vec<i64>, Error> {
    let text = text.trim();
    let tokens: Vec<&str> = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].chars().all(|c| c.is_ascii_digit()) {
        return Ok(tokens[0]
            .chars()
            .map(|c| c.to_digit(10).expect("digit") as i64)
            .collect());
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("non-numeric token {t:?}")))
        })
        .collect()
}
