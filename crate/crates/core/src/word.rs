//! Free words in B₃ over the band generators `a1, a2, a3` (with `a1 = σ1`,
//! `a2 = σ2`, `a3 = σ1⁻¹σ2σ1`) and over the classical generators `s1, s2`.
//!
//! A [`Word`] is always kept in maximal-syllable form: adjacent syllables have
//! distinct subscripts and no syllable has exponent zero. Classical words are
//! stored as band words that only use subscripts 1 and 2.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Maps any integer onto the subscript representatives `{1, 2, 3}` (mod 3).
pub fn subscript(i: i64) -> u8 {
    (i - 1).rem_euclid(3) as u8 + 1
}

/// A power `a_i^k` of a single band generator, `k != 0`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Syllable {
    subscript: u8,
    exponent: i64,
}

impl Syllable {
    /// Panics if `exponent == 0`. The subscript is reduced mod 3.
    pub fn new(subscript_index: i64, exponent: i64) -> Self {
        assert!(exponent != 0, "syllable exponent must be nonzero");
        Syllable {
            subscript: subscript(subscript_index),
            exponent,
        }
    }

    pub fn subscript(&self) -> u8 {
        self.subscript
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }
}

/// Which generating set a word is written in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum Alphabet {
    #[default]
    Band,
    Classical,
}

/// An element of B₃ written as a free word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    /// The empty word (identity braid).
    pub fn identity() -> Self {
        Word::default()
    }

    /// Builds a word from `(subscript, exponent)` pairs, merging equal
    /// neighbours and dropping zero exponents.
    pub fn from_pairs<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        let mut w = Word::identity();
        for (s, e) in pairs {
            w.push(s, e);
        }
        w
    }

    pub fn from_syllables<I: IntoIterator<Item = Syllable>>(syllables: I) -> Self {
        Word::from_pairs(
            syllables
                .into_iter()
                .map(|s| (s.subscript as i64, s.exponent)),
        )
    }

    /// `a_i^k` as a word.
    pub fn generator(subscript_index: i64, exponent: i64) -> Self {
        Word::from_pairs([(subscript_index, exponent)])
    }

    /// `δ^k = (a2 a1)^k`, written with `(a1⁻¹ a2⁻¹)^|k|` for negative `k`.
    pub fn delta_power(k: i64) -> Self {
        let pair = if k >= 0 {
            [(2, 1), (1, 1)]
        } else {
            [(1, -1), (2, -1)]
        };
        Word::from_pairs((0..k.abs()).flat_map(|_| pair))
    }

    /// Appends `a_i^k`, amalgamating with the last syllable when possible.
    pub fn push(&mut self, subscript_index: i64, exponent: i64) {
        if exponent == 0 {
            return;
        }
        let sub = subscript(subscript_index);
        if let Some(last) = self.syllables.last_mut() {
            if last.subscript == sub {
                last.exponent += exponent;
                if last.exponent == 0 {
                    self.syllables.pop();
                }
                return;
            }
        }
        self.syllables.push(Syllable {
            subscript: sub,
            exponent,
        });
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn letter_len(&self) -> u64 {
        self.syllables
            .iter()
            .map(|s| s.exponent.unsigned_abs())
            .sum()
    }

    /// Expanded letters as `(subscript, ±1)`.
    pub fn letters(&self) -> impl Iterator<Item = (u8, i64)> + '_ {
        self.syllables.iter().flat_map(|s| {
            let sign = s.exponent.signum();
            (0..s.exponent.abs()).map(move |_| (s.subscript, sign))
        })
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for s in &other.syllables {
            out.push(s.subscript as i64, s.exponent);
        }
        out
    }

    /// The group inverse.
    pub fn inverse(&self) -> Word {
        Word::from_pairs(
            self.syllables
                .iter()
                .rev()
                .map(|s| (s.subscript as i64, -s.exponent)),
        )
    }

    /// `c · self · c⁻¹`.
    pub fn conjugated_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    pub fn pow(&self, n: u32) -> Word {
        (0..n).fold(Word::identity(), |acc, _| acc.concat(self))
    }

    /// Rewrites every `a3^k` as `σ1⁻¹ σ2^k σ1`; the result only uses subscripts 1 and 2.
    pub fn to_classical(&self) -> Word {
        let mut out = Word::identity();
        for s in &self.syllables {
            if s.subscript == 3 {
                out.push(1, -1);
                out.push(2, s.exponent);
                out.push(1, 1);
            } else {
                out.push(s.subscript as i64, s.exponent);
            }
        }
        out
    }

    pub fn is_classical(&self) -> bool {
        self.syllables.iter().all(|s| s.subscript != 3)
    }

    /// The anti-automorphism fixing `σ1` and `σ2`: the classical letter
    /// sequence read backwards. The closure of `rev(w)` is the closure of `w`
    /// with its orientation reversed. The result is a classical word.
    pub fn reverse(&self) -> Word {
        let classical = self.to_classical();
        Word::from_pairs(
            classical
                .syllables
                .iter()
                .rev()
                .map(|s| (s.subscript as i64, s.exponent)),
        )
    }

    /// Sum of all exponents; the writhe of the closed braid diagram.
    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    /// Mirror image: every crossing switched (`σ_i ↦ σ_i⁻¹`).
    pub fn mirror(&self) -> Word {
        Word::from_pairs(
            self.to_classical()
                .syllables
                .iter()
                .map(|s| (s.subscript as i64, -s.exponent)),
        )
    }

    /// Strand permutation induced by the braid.
    pub fn permutation(&self) -> Permutation {
        self.syllables
            .iter()
            .filter(|s| s.exponent % 2 != 0)
            .fold(Permutation::identity(), |p, s| {
                p.then(Permutation::transposition(s.subscript))
            })
    }

    /// Number of components of the closed braid.
    pub fn component_count(&self) -> usize {
        self.permutation().cycle_count()
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        match alphabet {
            Alphabet::Band => self.to_string(),
            Alphabet::Classical => {
                let c = self.to_classical();
                render(&c.syllables, 's')
            }
        }
    }
}

fn render(syllables: &[Syllable], prefix: char) -> String {
    let mut out = String::new();
    for (i, s) in syllables.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        out.push(prefix);
        out.push_str(&s.subscript.to_string());
        if s.exponent != 1 {
            out.push('^');
            out.push_str(&s.exponent.to_string());
        }
    }
    out
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.syllables, 'a'))
    }
}

impl Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;

    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

impl std::str::FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_word(s)
    }
}

/// Parses `a1^-2 a2^-3 a1^5 a2` or `s1 s2^-1` style words.
///
/// Tokens are separated by whitespace or `.`; a word must use a single alphabet.
pub fn parse_word(text: &str) -> Result<Word> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut word = Word::identity();
    let mut alphabet: Option<Alphabet> = None;

    let syntax = |position: usize, message: &str| Error::Syntax {
        position,
        message: message.to_string(),
    };

    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() || c == b'.' {
            pos += 1;
            continue;
        }
        let this_alphabet = match c {
            b'a' => Alphabet::Band,
            b's' => Alphabet::Classical,
            _ => {
                return Err(syntax(
                    pos,
                    "expected generator 'a1', 'a2', 'a3', 's1' or 's2'",
                ))
            }
        };
        pos += 1;
        let index = match bytes.get(pos) {
            Some(b'1') => 1,
            Some(b'2') => 2,
            Some(b'3') if this_alphabet == Alphabet::Band => 3,
            _ => return Err(syntax(pos, "invalid generator index")),
        };
        pos += 1;
        match alphabet {
            None => alphabet = Some(this_alphabet),
            Some(a) if a != this_alphabet => return Err(Error::MixedAlphabet),
            _ => {}
        }
        let mut exponent: i64 = 1;
        if bytes.get(pos) == Some(&b'^') {
            pos += 1;
            let num_start = pos;
            if bytes.get(pos) == Some(&b'-') {
                pos += 1;
            }
            let digits_start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if pos == digits_start {
                return Err(syntax(pos, "expected integer exponent after '^'"));
            }
            exponent = text[num_start..pos]
                .parse()
                .map_err(|_| syntax(num_start, "exponent out of range"))?;
        }
        if let Some(&next) = bytes.get(pos) {
            if !(next.is_ascii_whitespace() || next == b'.' || next == b'a' || next == b's') {
                return Err(syntax(pos, "unexpected character after token"));
            }
        }
        word.push(index, exponent);
    }
    Ok(word)
}

/// A permutation of the three strands, stored as the image of each strand (0-based).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation([u8; 3]);

impl Permutation {
    pub fn identity() -> Self {
        Permutation([0, 1, 2])
    }

    /// The transposition of strands induced by `a_i`: `a1 ↦ (1 2)`, `a2 ↦ (2 3)`, `a3 ↦ (1 3)`.
    pub fn transposition(subscript_index: u8) -> Self {
        match subscript(subscript_index as i64) {
            1 => Permutation([1, 0, 2]),
            2 => Permutation([0, 2, 1]),
            _ => Permutation([2, 1, 0]),
        }
    }

    /// `self` followed by `next`.
    pub fn then(self, next: Permutation) -> Permutation {
        let mut out = [0; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = next.0[self.0[i] as usize];
        }
        Permutation(out)
    }

    pub fn image(&self, strand: usize) -> usize {
        self.0[strand] as usize
    }

    pub fn cycle_count(&self) -> usize {
        let mut seen = [false; 3];
        let mut cycles = 0;
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
            }
        }
        cycles
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(pairs: &[(i64, i64)]) -> Word {
        Word::from_pairs(pairs.iter().copied())
    }

    #[test]
    fn subscript_wraps() {
        assert_eq!(subscript(4), 1);
        assert_eq!(subscript(0), 3);
        assert_eq!(subscript(-1), 2);
        assert_eq!(subscript(3), 3);
    }

    #[test]
    fn parses_band_example() {
        let parsed = parse_word("a1^-2 a2^-3 a1^5 a2").unwrap();
        assert_eq!(parsed, w(&[(1, -2), (2, -3), (1, 5), (2, 1)]));
    }

    #[test]
    fn parses_empty_and_cancelling() {
        assert!(parse_word("").unwrap().is_empty());
        assert!(parse_word("s1 s1^2 s2^0 s1^-3").unwrap().is_empty());
        assert_eq!(
            parse_word("a1.a2.a3").unwrap(),
            w(&[(1, 1), (2, 1), (3, 1)])
        );
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_word("a1 s2"), Err(Error::MixedAlphabet));
        assert!(matches!(
            parse_word("a1 b2"),
            Err(Error::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_word("s3"),
            Err(Error::Syntax { position: 1, .. })
        ));
        assert!(matches!(parse_word("a1^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("a1^x"), Err(Error::Syntax { .. })));
        assert!(matches!(
            parse_word("a12"),
            Err(Error::Syntax { position: 2, .. })
        ));
    }

    #[test]
    fn invert_examples() {
        assert_eq!(w(&[(1, 2), (2, -1)]).inverse(), w(&[(2, 1), (1, -2)]));
        assert!(Word::identity().inverse().is_empty());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(w(&[(1, 2), (2, 3)]).reverse(), w(&[(2, 3), (1, 2)]));
        assert_eq!(w(&[(3, 1)]).reverse(), w(&[(1, 1), (2, 1), (1, -1)]));
    }

    #[test]
    fn exponent_sum_examples() {
        assert_eq!(w(&[(1, -2), (2, -3), (1, 5), (2, 1)]).exponent_sum(), 1);
        assert_eq!(Word::identity().exponent_sum(), 0);
    }

    /// Follows each strand around the closed braid letter by letter.
    fn components_by_strand_following(word: &Word) -> usize {
        let classical = word.to_classical();
        let mut position_after = [0usize, 1, 2];
        for (start, after) in position_after.iter_mut().enumerate() {
            let mut p = start;
            for (s, _) in classical.letters() {
                let i = s as usize - 1;
                if p == i {
                    p = i + 1;
                } else if p == i + 1 {
                    p = i;
                }
            }
            *after = p;
        }
        let mut seen = [false; 3];
        let mut count = 0;
        for start in 0..3 {
            if !seen[start] {
                count += 1;
                let mut p = start;
                while !seen[p] {
                    seen[p] = true;
                    p = position_after[p];
                }
            }
        }
        count
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(w(&[(1, 3), (2, 1)]).component_count(), 1);
        assert_eq!(Word::identity().component_count(), 3);
        // σ2² closes to a Hopf link plus a separate circle.
        assert_eq!(components_by_strand_following(&w(&[(2, 2)])), 3);
        assert_eq!(w(&[(2, 2)]).component_count(), 3);
        assert_eq!(w(&[(3, 1)]).component_count(), 2);
    }

    #[test]
    fn formats_classical() {
        assert_eq!(w(&[(3, 2)]).format(Alphabet::Classical), "s1^-1 s2^2 s1");
        assert_eq!(w(&[(1, -2), (2, 1)]).to_string(), "a1^-2 a2");
    }

    fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec((1i64..=3, -4i64..=4), 0..max_len).prop_map(Word::from_pairs)
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(word in arb_word(10)) {
            prop_assert_eq!(parse_word(&word.to_string()).unwrap(), word.clone());
            let classical = word.to_classical();
            prop_assert_eq!(parse_word(&word.format(Alphabet::Classical)).unwrap(), classical);
        }

        #[test]
        fn inverse_is_involution(word in arb_word(10)) {
            prop_assert_eq!(word.inverse().inverse(), word.clone());
            prop_assert_eq!(word.concat(&word.inverse()).exponent_sum(), 0);
            prop_assert!(word.concat(&word.inverse()).is_empty());
        }

        #[test]
        fn reverse_preserves_sum_and_components(word in arb_word(10)) {
            let r = word.reverse();
            prop_assert_eq!(r.exponent_sum(), word.exponent_sum());
            prop_assert_eq!(r.component_count(), word.component_count());
            prop_assert_eq!(r.reverse(), word.to_classical());
            prop_assert_eq!(word.component_count(), components_by_strand_following(&word));
        }

        #[test]
        fn maximal_syllable_form(word in arb_word(12)) {
            for pair in word.syllables().windows(2) {
                prop_assert_ne!(pair[0].subscript(), pair[1].subscript());
            }
            prop_assert!(word.syllables().iter().all(|s| s.exponent() != 0));
        }
    }
}
