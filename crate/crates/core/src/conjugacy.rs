//! Conjugacy in B₃: tail moves, summit sets and the class invariant Σ*.
//!
//! A *tail move* on `δ^q a_{τ1}^{s1} ⋯ a_{τt}^{st}` conjugates the first
//! tail syllable around to the end: the result is
//! `δ^q a_{τ2}^{s2} ⋯ a_{τt}^{st} · (δ^q a_{τ1}^{s1} δ^{-q})`, renormalized.
//! Iterating tail moves never lowers the power, and once a move leaves the
//! power unchanged the element lies in its *summit set* (the conjugates of
//! maximal power). The symbol `(power; tail exponents)` of a summit element,
//! minimized over the summit set (first by number of syllables, then
//! lexicographically), is a complete conjugacy invariant.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::normal_form::{normalize, NormalForm};
use crate::word::{Syllable, Word};

/// `(power; (l1, …, lt))`: the δ-power of a summit element and the exponents
/// of its tail syllables. Subscripts are deliberately forgotten.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct XuSymbol {
    pub power: i64,
    pub exponents: Vec<i64>,
}

impl XuSymbol {
    pub fn new(power: i64, exponents: Vec<i64>) -> Self {
        XuSymbol { power, exponents }
    }

    /// Symbol of a single normal form (no canonicalization).
    pub fn of(nf: &NormalForm) -> Self {
        XuSymbol::new(nf.power(), nf.tail_exponents())
    }

    /// The least cyclic rotation of the exponent sequence.
    pub fn canonical(&self) -> Self {
        let start = least_rotation(&self.exponents);
        let mut exponents = self.exponents.clone();
        exponents.rotate_left(start);
        XuSymbol::new(self.power, exponents)
    }

    /// All cyclic rotations of the exponent sequence.
    pub fn rotations(&self) -> impl Iterator<Item = XuSymbol> + '_ {
        let n = self.exponents.len().max(1);
        (0..n).map(move |k| {
            let mut e = self.exponents.clone();
            if !e.is_empty() {
                e.rotate_left(k);
            }
            XuSymbol::new(self.power, e)
        })
    }

    /// `2·power + Σ exponents`, the exponent sum of the conjugacy class.
    pub fn exponent_sum(&self) -> i64 {
        2 * self.power + self.exponents.iter().sum::<i64>()
    }
}

impl Ord for XuSymbol {
    /// Power first, then fewer syllables, then lexicographic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.power
            .cmp(&other.power)
            .then(self.exponents.len().cmp(&other.exponents.len()))
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for XuSymbol {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for XuSymbol {
    /// `(-1; (1,2,1,3))`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        write!(f, "({}; ({}))", self.power, parts.join(","))
    }
}

/// Orders two symbols of the same summit set.
pub fn symbol_compare(x: &XuSymbol, y: &XuSymbol) -> Result<Ordering> {
    if x.power != y.power {
        return Err(Error::PowerMismatch(x.power, y.power));
    }
    Ok(x.cmp(y))
}

/// Start index of the lexicographically least rotation (Booth's algorithm).
pub fn least_rotation<T: Ord>(seq: &[T]) -> usize {
    let n = seq.len();
    if n == 0 {
        return 0;
    }
    let at = |i: usize| &seq[i % n];
    let mut failure = vec![-1isize; 2 * n];
    let mut k = 0usize;
    for j in 1..2 * n {
        let sj = at(j);
        let mut i = failure[j - k - 1];
        while i != -1 && sj != at(k + i as usize + 1) {
            if sj < at(k + i as usize + 1) {
                k = j - i as usize - 1;
            }
            i = failure[i as usize];
        }
        if sj != at(k + (i + 1) as usize) {
            // i == -1 here
            if sj < at(k) {
                k = j;
            }
            failure[j - k] = -1;
        } else {
            failure[j - k] = i + 1;
        }
    }
    k % n
}

/// One tail move. Identity on an empty tail.
pub fn tail_move(nf: &NormalForm) -> NormalForm {
    let Some((first, rest)) = nf.tail().split_first() else {
        return nf.clone();
    };
    // δ^q a_τ^s δ^{-q} = a_{τ-q}^s
    let moved = Syllable::new(first.subscript() as i64 - nf.power(), first.exponent());
    let mut tail: Vec<Syllable> = rest.to_vec();
    tail.push(moved);
    NormalForm::from_positive(nf.power(), &tail)
}

/// Letter-level cycling: moves only the first tail letter (not the whole
/// syllable) to the end. Unlike [`tail_move`] this always climbs to the
/// summit power, including on one-syllable tails such as `δ a3^3`.
pub fn cycle(nf: &NormalForm) -> NormalForm {
    let Some((first, rest)) = nf.tail().split_first() else {
        return nf.clone();
    };
    let mut tail: Vec<Syllable> = Vec::with_capacity(nf.tail().len() + 1);
    if first.exponent() > 1 {
        tail.push(Syllable::new(
            first.subscript() as i64,
            first.exponent() - 1,
        ));
    }
    tail.extend_from_slice(rest);
    tail.push(Syllable::new(first.subscript() as i64 - nf.power(), 1));
    NormalForm::from_positive(nf.power(), &tail)
}

/// Iterates `step` from `start` until the first repeat.
fn orbit_from(start: NormalForm, step: fn(&NormalForm) -> NormalForm) -> Vec<NormalForm> {
    let mut seen = HashSet::new();
    let mut visited = Vec::new();
    let mut current = start;
    while seen.insert(current.clone()) {
        let next = step(&current);
        visited.push(current);
        current = next;
    }
    visited
}

fn top_power(orbit: &[NormalForm]) -> i64 {
    orbit.iter().map(NormalForm::power).max().unwrap_or(0)
}

/// Elements of the tail-move orbit of `normalize(w)` attaining the largest
/// power seen, together with the letter-cycling orbit at that power. All of
/// them lie in the summit set of `w`.
///
/// If the tail-move orbit stalls below the summit power (possible when the
/// tail is a single syllable), letter-level cycling detects it and the
/// search restarts from the higher-power element it finds.
pub fn summit_orbit(w: &Word) -> BTreeSet<NormalForm> {
    summit_orbit_nf(normalize(w))
}

pub(crate) fn summit_orbit_nf(start: NormalForm) -> BTreeSet<NormalForm> {
    let mut current = start;
    loop {
        let moves = orbit_from(current, tail_move);
        let top = top_power(&moves);
        let summit = moves
            .iter()
            .find(|n| n.power() == top)
            .cloned()
            .expect("orbit is never empty");
        let cycles = orbit_from(summit, cycle);
        let cycle_top = top_power(&cycles);
        if cycle_top > top {
            current = cycles
                .into_iter()
                .find(|n| n.power() == cycle_top)
                .expect("maximum is attained");
            continue;
        }
        return moves
            .into_iter()
            .chain(cycles)
            .filter(|n| n.power() == top)
            .collect();
    }
}

/// The canonical symbol Σ* of the conjugacy class of `w`.
pub fn xu_invariant(w: &Word) -> XuSymbol {
    invariant_of_orbit(&summit_orbit(w))
}

fn invariant_of_orbit(orbit: &BTreeSet<NormalForm>) -> XuSymbol {
    orbit
        .iter()
        .map(|n| XuSymbol::of(n).canonical())
        .min()
        .expect("orbit is never empty")
}

/// Decides conjugacy in B₃.
pub fn are_conjugate(u: &Word, v: &Word) -> bool {
    u.exponent_sum() == v.exponent_sum() && xu_invariant(u) == xu_invariant(v)
}

/// Limits for the exhaustive summit-set search.
#[derive(Clone, Copy, Debug)]
pub struct SummitSearch {
    /// Largest accepted input length, in letters.
    pub max_letters: u64,
    /// Largest summit set explored before giving up.
    pub max_elements: usize,
}

impl Default for SummitSearch {
    fn default() -> Self {
        SummitSearch {
            max_letters: 16,
            max_elements: 200_000,
        }
    }
}

/// The full summit set of `w`, by breadth-first closure under conjugation
/// by the simple elements `a1, a2, a3, δ` (and their inverses).
///
/// Only elements of the highest power reached are kept; reaching a higher
/// power restarts the search from there. Meant as a test oracle.
pub fn summit_set_full(w: &Word, limits: SummitSearch) -> Result<BTreeSet<NormalForm>> {
    if w.letter_len() > limits.max_letters {
        return Err(Error::BoundExceeded(format!(
            "word has {} letters, limit is {}",
            w.letter_len(),
            limits.max_letters
        )));
    }
    let simples: Vec<Word> = vec![
        Word::generator(1, 1),
        Word::generator(2, 1),
        Word::generator(3, 1),
        Word::delta_power(1),
    ];
    let conjugators: Vec<Word> = simples
        .iter()
        .flat_map(|s| [s.clone(), s.inverse()])
        .collect();

    let start = normalize(w);
    let mut best = start.power();
    let mut seen: HashSet<NormalForm> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);

    'search: while let Some(x) = queue.pop_front() {
        let xw = x.to_word();
        for c in &conjugators {
            let y = normalize(&xw.conjugated_by(c));
            match y.power().cmp(&best) {
                Ordering::Greater => {
                    best = y.power();
                    seen.clear();
                    queue.clear();
                    seen.insert(y.clone());
                    queue.push_back(y);
                    continue 'search;
                }
                Ordering::Equal => {
                    if seen.insert(y.clone()) {
                        if seen.len() > limits.max_elements {
                            return Err(Error::BoundExceeded(format!(
                                "summit set exceeds {} elements",
                                limits.max_elements
                            )));
                        }
                        queue.push_back(y);
                    }
                }
                Ordering::Less => {}
            }
        }
    }
    Ok(seen.into_iter().collect())
}
