//! Formal words over variables `x0..xk`.
//!
//! A [`Word`] is a sequence of variable indices, each used at most once,
//! multiplied left to right. Word sets are sets of formal products:
//! deduplication is by index sequence, never by group-element equality,
//! since distinct words may collapse to equal elements under special
//! assignments.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::group::FiniteGroup;

/// Hard cap on the pattern parameter `k`; the pattern set grows like `2^k`.
pub const MAX_PATTERN_K: u8 = 6;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WordError {
    #[error("word is empty")]
    Empty,
    #[error("variable x{0} repeated within a word")]
    RepeatedVariable(u8),
    #[error("assignment is missing variable x{0}")]
    MissingAssignment(u8),
    #[error("too many variables: {0}")]
    TooManyVariables(usize),
}

/// A non-empty product of distinct variables, left to right.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(indices: Vec<u8>) -> Result<Self, WordError> {
        if indices.is_empty() {
            return Err(WordError::Empty);
        }
        let mut seen = [false; 256];
        for &i in &indices {
            if seen[i as usize] {
                return Err(WordError::RepeatedVariable(i));
            }
            seen[i as usize] = true;
        }
        Ok(Self(indices))
    }

    /// Single-variable word.
    pub fn var(i: u8) -> Self {
        Self(vec![i])
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn max_variable(&self) -> u8 {
        *self.0.iter().max().expect("words are non-empty")
    }

    /// Concatenation; fails if the factors share a variable.
    pub fn concat(&self, other: &Word) -> Result<Word, WordError> {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word::new(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| format!("x{i}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[{self}]")
    }
}

/// A deduplicated set of words, ordered by index sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct WordSet(BTreeSet<Word>);

impl WordSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, w: Word) -> bool {
        self.0.insert(w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.contains(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.0.iter()
    }

    pub fn union(&self, other: &WordSet) -> WordSet {
        WordSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn difference(&self, other: &WordSet) -> WordSet {
        WordSet(self.0.difference(&other.0).cloned().collect())
    }
}

impl FromIterator<Word> for WordSet {
    fn from_iter<T: IntoIterator<Item = Word>>(iter: T) -> Self {
        WordSet(iter.into_iter().collect())
    }
}

/// All products over non-empty subsets of `indices`, concatenated in the
/// given list order: `2^n − 1` words for `n` indices.
pub fn fp_words(indices: &[u8]) -> Result<WordSet, WordError> {
    if indices.len() > 20 {
        return Err(WordError::TooManyVariables(indices.len()));
    }
    {
        let mut sorted = indices.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(WordError::RepeatedVariable(pair[0]));
            }
        }
    }
    let n = indices.len();
    let mut out = WordSet::new();
    for mask in 1u32..(1 << n) {
        let seq: Vec<u8> = (0..n)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| indices[i])
            .collect();
        out.insert(Word::new(seq)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    /// Ascending variable index.
    Forward,
    /// Descending variable index.
    Backward,
}

/// The directed product of an index set: ascending for forward, descending
/// for backward.
pub fn directed_product_word(indices: &[u8], direction: Direction) -> Result<Word, WordError> {
    if indices.is_empty() {
        return Err(WordError::Empty);
    }
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(WordError::RepeatedVariable(pair[0]));
        }
    }
    if direction == Direction::Backward {
        sorted.reverse();
    }
    Word::new(sorted)
}

/// The pattern word set over variables `x0..xk`: all consecutive products
/// `xi·…·xj` for `i ≤ j`, together with `(∏_{a∈I} xa)·x0·…·xj` for every
/// `j ≤ k` and `I ⊆ {j+1,…,k}` (the `∏` taken in ascending index order).
///
/// For `k = 1` this is `{x0, x1, x0·x1, x1·x0}`; for `k = 2` it has exactly
/// 10 members.
pub fn pattern_words(k: u8) -> Result<WordSet, WordError> {
    if k > MAX_PATTERN_K {
        return Err(WordError::TooManyVariables(k as usize));
    }
    let mut out = WordSet::new();
    // Consecutive runs x_i … x_j.
    for i in 0..=k {
        for j in i..=k {
            out.insert(Word::new((i..=j).collect())?);
        }
    }
    // (∏_{a ∈ I} x_a) · x_0 … x_j with I ⊆ {j+1, …, k}.
    for j in 0..=k {
        let tail: Vec<u8> = (j + 1..=k).collect();
        for mask in 0u32..(1 << tail.len()) {
            let mut seq: Vec<u8> = (0..tail.len())
                .filter(|&t| mask >> t & 1 == 1)
                .map(|t| tail[t])
                .collect();
            seq.extend(0..=j);
            out.insert(Word::new(seq)?);
        }
    }
    Ok(out)
}

/// Every product of any non-empty subset of `x0..xk` in any order:
/// `Σ_m C(k+1, m)·m!` words. Useful for listing what a pattern misses.
pub fn all_order_words(k: u8) -> Result<WordSet, WordError> {
    if k > MAX_PATTERN_K {
        return Err(WordError::TooManyVariables(k as usize));
    }
    let mut out = WordSet::new();
    let vars: Vec<u8> = (0..=k).collect();
    let mut seq = Vec::new();
    fn rec(vars: &[u8], used: &mut Vec<bool>, seq: &mut Vec<u8>, out: &mut WordSet) {
        if !seq.is_empty() {
            out.insert(Word::new(seq.clone()).expect("distinct by construction"));
        }
        for (i, &v) in vars.iter().enumerate() {
            if !used[i] {
                used[i] = true;
                seq.push(v);
                rec(vars, used, seq, out);
                seq.pop();
                used[i] = false;
            }
        }
    }
    let mut used = vec![false; vars.len()];
    rec(&vars, &mut used, &mut seq, &mut out);
    Ok(out)
}

/// Evaluates a word under an assignment of one group element per variable.
pub fn eval_word(
    group: &FiniteGroup,
    word: &Word,
    assignment: &[usize],
) -> Result<usize, WordError> {
    let mut acc = group.identity();
    for &v in word.indices() {
        let e = *assignment
            .get(v as usize)
            .ok_or(WordError::MissingAssignment(v))?;
        acc = group.mul(acc, e);
    }
    Ok(acc)
}
