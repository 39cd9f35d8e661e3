use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A left-normed basis monomial `x_{i1}(x_{i2}(…(x_{i(n-1)} x_{in})…))`,
/// stored as its letter sequence `[i1, …, in]`.
///
/// Words order by degree first, then lexicographically on letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if letters.contains(&0) {
            return Err(Error::ZeroGenerator);
        }
        Ok(Word(letters))
    }

    /// Single-letter word `x_i`.
    pub fn letter(i: u32) -> Result<Self> {
        Word::new(vec![i])
    }

    /// `x_i^n`, which in left-normed form is `x_i(x_i(…x_i))`.
    pub fn power_of(i: u32, n: usize) -> Result<Self> {
        Word::new(vec![i; n])
    }

    // Callers guarantee a nonempty sequence of positive letters.
    pub(crate) fn from_raw(letters: Vec<u32>) -> Self {
        debug_assert!(!letters.is_empty() && !letters.contains(&0));
        Word(letters)
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    /// Multiset of letters as a sorted `(letter, count)` list.
    pub fn multidegree(&self) -> Vec<(u32, usize)> {
        let mut sorted = self.0.clone();
        sorted.sort_unstable();
        let mut out: Vec<(u32, usize)> = Vec::new();
        for l in sorted {
            match out.last_mut() {
                Some((last, n)) if *last == l => *n += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }

    /// True when the letters are exactly `1..=n` in some order.
    pub fn is_permutation(&self) -> bool {
        let n = self.0.len();
        let mut seen = vec![false; n];
        for &l in &self.0 {
            let idx = l as usize;
            if idx == 0 || idx > n || seen[idx - 1] {
                return false;
            }
            seen[idx - 1] = true;
        }
        true
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical text: `x1`, `x1 x2`, `x1(x2 x3)`, `x1(x2 x3 x4)`.
///
/// Juxtaposition is the right-nested product, so the text parses back to
/// the same left-normed monomial.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (head, rest) = self.0.split_first().expect("nonempty word");
        write!(f, "x{head}")?;
        match rest.len() {
            0 => Ok(()),
            1 => write!(f, " x{}", rest[0]),
            _ => {
                f.write_str("(")?;
                for (k, l) in rest.iter().enumerate() {
                    if k > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "x{l}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All letter patterns of length `len` up to renaming of letters: sequences
/// over `1..` where each new letter is one more than the largest seen so far
/// (restricted growth strings). There are Bell(len) of them.
pub fn letter_patterns(len: usize) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, max: u32, len: usize, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for l in 1..=max + 1 {
            prefix.push(l);
            go(prefix, max.max(l), len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 {
        go(&mut Vec::with_capacity(len), 0, len, &mut out);
    }
    out
}

/// Every way to cut a letter pattern into `parts` consecutive nonempty words.
pub fn split_into_words(pattern: &[u32], parts: usize) -> Vec<Vec<Word>> {
    fn go(rest: &[u32], parts: usize, acc: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if parts == 1 {
            if !rest.is_empty() {
                acc.push(Word::from_raw(rest.to_vec()));
                out.push(acc.clone());
                acc.pop();
            }
            return;
        }
        for cut in 1..rest.len() {
            acc.push(Word::from_raw(rest[..cut].to_vec()));
            go(&rest[cut..], parts - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if parts > 0 {
        go(pattern, parts, &mut Vec::new(), &mut out);
    }
    out
}

/// All tuples of `parts` basis words with total degree at most `max_total`,
/// up to renaming of letters.
pub fn word_tuples_up_to_renaming(parts: usize, max_total: usize) -> Vec<Vec<Word>> {
    (parts..=max_total)
        .flat_map(|total| letter_patterns(total))
        .flat_map(|p| split_into_words(&p, parts))
        .collect()
}
