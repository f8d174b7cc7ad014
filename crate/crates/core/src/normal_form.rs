//! Solution of the word problem in the band presentation.
//!
//! Every element of B₃ has a unique expression `δ^q · P` where
//! `δ = a2 a1 = a3 a2 = a1 a3`, `P` is a positive word, and no two adjacent
//! letters of `P` form a descent `a_{i+1} a_i` (such a pair equals `δ`).
//! Read in syllables, the subscripts of `P` step up by one (mod 3) from each
//! syllable to the next. The power `q` is then maximal.
//!
//! Two rewriting rules drive the computation:
//!
//! * `a_i⁻¹ = δ⁻¹ a_{i+1}`, hence `a_i^{-k} = δ^{-k} a_{i-k+2} ⋯ a_i a_{i+1}`;
//! * `a_j δ^m = δ^m a_{j+m}`, so moving `δ` leftwards shifts subscripts up.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::word::{subscript, Syllable, Word};

/// `δ^power` followed by a positive tail with cyclically ascending subscripts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    power: i64,
    tail: Vec<Syllable>,
}

/// A positive word whose subscripts can all be shifted at once.
///
/// Letter `raw` stands for `a_{raw + offset}`; pushing `δ^m` past the whole
/// sequence is a change of `offset` by `±m`.
#[derive(Default)]
struct ShiftedLetters {
    raw: Vec<i64>,
    offset: i64,
}

impl ShiftedLetters {
    fn push(&mut self, sub: i64) {
        self.raw.push(sub - self.offset);
    }

    fn last(&self) -> Option<u8> {
        self.raw.last().map(|&r| subscript(r + self.offset))
    }

    fn pop(&mut self) {
        self.raw.pop();
    }

    fn shift(&mut self, by: i64) {
        self.offset += by;
    }

    fn iter(&self) -> impl Iterator<Item = u8> + '_ {
        self.raw.iter().map(move |&r| subscript(r + self.offset))
    }
}

/// Collects `δ^power · letters` into normal form by extracting every descent
/// `a_{j+1} a_j = δ` and pushing it to the front. Each extraction shortens
/// the positive part by two letters, so this terminates.
fn reduce_positive<I: IntoIterator<Item = u8>>(mut power: i64, letters: I) -> NormalForm {
    let mut stack = ShiftedLetters::default();
    for x in letters {
        if stack.last() == Some(subscript(x as i64 + 1)) {
            // stack · a_{x+1} a_x = stack · δ = δ · shift(stack, +1)
            stack.pop();
            stack.shift(1);
            power += 1;
        } else {
            stack.push(x as i64);
        }
    }
    let mut tail = Word::identity();
    for s in stack.iter() {
        tail.push(s as i64, 1);
    }
    NormalForm {
        power,
        tail: tail.syllables().to_vec(),
    }
}

/// Rewrites a word into its normal form.
pub fn normalize(word: &Word) -> NormalForm {
    // δ^power · positive, with every inverse letter traded for δ⁻¹ and moved left.
    let mut power = 0;
    let mut positive = ShiftedLetters::default();
    for (sub, sign) in word.letters() {
        if sign > 0 {
            positive.push(sub as i64);
        } else {
            // P · a_j⁻¹ = P · δ⁻¹ a_{j+1} = δ⁻¹ · shift(P, -1) · a_{j+1}
            power -= 1;
            positive.shift(-1);
            positive.push(sub as i64 + 1);
        }
    }
    reduce_positive(power, positive.iter().collect::<Vec<_>>())
}

/// `true` iff `u` and `v` represent the same braid.
pub fn words_equal(u: &Word, v: &Word) -> bool {
    normalize(u) == normalize(v)
}

impl NormalForm {
    /// Normal form of `δ^power · tail` for an arbitrary positive tail.
    ///
    /// Panics if some exponent in `tail` is negative.
    pub fn from_positive(power: i64, tail: &[Syllable]) -> NormalForm {
        assert!(
            tail.iter().all(|s| s.exponent() > 0),
            "tail must be a positive word"
        );
        reduce_positive(power, expand(tail))
    }

    pub fn power(&self) -> i64 {
        self.power
    }

    pub fn tail(&self) -> &[Syllable] {
        &self.tail
    }

    /// Exponents of the tail syllables.
    pub fn tail_exponents(&self) -> Vec<i64> {
        self.tail.iter().map(|s| s.exponent()).collect()
    }

    /// Letter length of the tail.
    pub fn tail_len(&self) -> i64 {
        self.tail.iter().map(|s| s.exponent()).sum()
    }

    /// `2·power + |tail|`, equal to the exponent sum of every word for this element.
    pub fn exponent_sum(&self) -> i64 {
        2 * self.power + self.tail_len()
    }

    /// Writes `δ^power · tail` as a word, with `δ = a2 a1`.
    pub fn to_word(&self) -> Word {
        Word::delta_power(self.power).concat(&Word::from_syllables(self.tail.iter().copied()))
    }

    /// Conjugation by `δ`: `δ⁻¹ X δ` shifts every tail subscript up by one.
    pub fn delta_conjugate(&self, times: i64) -> NormalForm {
        NormalForm {
            power: self.power,
            tail: self
                .tail
                .iter()
                .map(|s| Syllable::new(s.subscript() as i64 + times, s.exponent()))
                .collect(),
        }
    }
}

pub(crate) fn expand(tail: &[Syllable]) -> impl Iterator<Item = u8> + '_ {
    tail.iter()
        .flat_map(|s| std::iter::repeat_n(s.subscript(), s.exponent() as usize))
}

impl fmt::Display for NormalForm {
    /// `d^-4 a2^2 a3 a1^5 a2`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d^{}", self.power)?;
        let tail = Word::from_syllables(self.tail.iter().copied());
        if !tail.is_empty() {
            write!(f, " {tail}")?;
        }
        Ok(())
    }
}

impl Serialize for NormalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let tail: Vec<[i64; 2]> = self
            .tail
            .iter()
            .map(|s| [s.subscript() as i64, s.exponent()])
            .collect();
        let mut st = serializer.serialize_struct("NormalForm", 2)?;
        st.serialize_field("power", &self.power)?;
        st.serialize_field("tail", &tail)?;
        st.end()
    }
}
