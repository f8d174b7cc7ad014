//! Classification of closed 3-braids: braid index, flypes, invertibility
//! and transversal pairs.
//!
//! A braid in *flype position* is `σ1^u σ2^v σ1^w σ2^ε` with `ε = ±1`; its
//! flype partner is `σ1^w σ2^v σ1^u σ2^ε`. Both close to the same link. The
//! flype is non-degenerate when the two braids are not conjugate, and then
//! the class symbol is given by one of eight closed formulas in `p = |u|`,
//! `q = |v|`, `r = |w|` (see [`table2_symbol`]).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::conjugacy::{are_conjugate, xu_invariant, XuSymbol};
use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FlypeTriple {
    pub u: i64,
    pub v: i64,
    pub w: i64,
    pub epsilon: i64,
}

impl FlypeTriple {
    /// Panics if a parameter is zero or `epsilon` is not `±1`.
    pub fn new(u: i64, v: i64, w: i64, epsilon: i64) -> Self {
        assert!(
            u != 0 && v != 0 && w != 0,
            "flype exponents must be nonzero"
        );
        assert!(epsilon == 1 || epsilon == -1, "epsilon must be +1 or -1");
        FlypeTriple { u, v, w, epsilon }
    }

    /// `|u| + |v| + |w| + 1`, the crossing number of the braid diagram.
    pub fn crossing_number(&self) -> i64 {
        self.u.abs() + self.v.abs() + self.w.abs() + 1
    }

    /// Triple of a braid conjugate to the inverse of this one's word:
    /// `(σ1^u σ2^v σ1^w σ2^ε)⁻¹` is a cyclic rotation of
    /// `σ1^-w σ2^-v σ1^-u σ2^-ε`.
    pub fn inverse(&self) -> Self {
        FlypeTriple::new(-self.w, -self.v, -self.u, -self.epsilon)
    }
}

impl fmt::Display for FlypeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{}; {:+})", self.u, self.v, self.w, self.epsilon)
    }
}

pub fn flype_word(t: &FlypeTriple) -> Word {
    Word::from_pairs([(1, t.u), (2, t.v), (1, t.w), (2, t.epsilon)])
}

pub fn flype_partner(t: &FlypeTriple) -> FlypeTriple {
    FlypeTriple::new(t.w, t.v, t.u, t.epsilon)
}

/// Non-degeneracy: `|v| ≥ 2`, `u, v+ε, w` pairwise distinct, and
/// `u, w ∉ {0, ε, 2ε}`.
pub fn is_nondegenerate(t: &FlypeTriple) -> bool {
    let e = t.epsilon;
    let ve = t.v + e;
    let bad = [0, e, 2 * e];
    t.v.abs() >= 2
        && t.u != ve
        && t.u != t.w
        && ve != t.w
        && !bad.contains(&t.u)
        && !bad.contains(&t.w)
}

/// Whether the class of a negative flype braid also contains a braid
/// admitting a positive flype: `u = 1`, `w = 1` or `v = 2` (signed values).
pub fn admits_positive_variant(t: &FlypeTriple) -> Result<bool> {
    if t.epsilon != -1 {
        return Err(Error::Precondition(format!("{t} is not a negative flype")));
    }
    Ok(t.u == 1 || t.w == 1 || t.v == 2)
}

fn ones(n: i64) -> impl Iterator<Item = i64> {
    std::iter::repeat_n(1, n.max(0) as usize)
}

/// The closed-form symbol for a sign pattern with at most one negative
/// among `u, v, w`, without any nondegeneracy check.
fn row_symbol(t: &FlypeTriple) -> Option<XuSymbol> {
    let (p, q, r) = (t.u.abs(), t.v.abs(), t.w.abs());
    let signs = (t.u > 0, t.v > 0, t.w > 0);
    let (power, exponents): (i64, Vec<i64>) = match (t.epsilon, signs) {
        (1, (true, true, true)) => (3, vec![p - 2, q - 1, r - 2]),
        (1, (false, true, true)) => (1 - p, [q, r - 1].into_iter().chain(ones(p)).collect()),
        (1, (true, false, true)) => (
            2 - q,
            std::iter::once(p - 1)
                .chain(ones(q - 1))
                .chain([r - 1])
                .collect(),
        ),
        (1, (true, true, false)) => (1 - r, [p - 1, q].into_iter().chain(ones(r)).collect()),
        (-1, (true, true, true)) => (0, vec![p, q - 1, r]),
        (-1, (false, true, true)) => (-p, [q, r + 1].into_iter().chain(ones(p - 2)).collect()),
        (-1, (true, false, true)) => (
            -q - 1,
            [r + 1, p + 1].into_iter().chain(ones(q - 1)).collect(),
        ),
        (-1, (true, true, false)) => (-r, [p + 1, q].into_iter().chain(ones(r - 2)).collect()),
        _ => return None,
    };
    if exponents.iter().any(|&e| e < 1) {
        return None;
    }
    Some(XuSymbol::new(power, exponents).canonical())
}

/// Class symbol of `flype_word(t)` from the closed formulas, canonically
/// rotated. Only the eight sign patterns with at most one negative among
/// `u, v, w` are covered; for the others use [`FlypeTriple::inverse`].
pub fn table2_symbol(t: &FlypeTriple) -> Result<XuSymbol> {
    if !is_nondegenerate(t) {
        return Err(Error::DegenerateTriple(t.to_string()));
    }
    row_symbol(t).ok_or_else(|| {
        Error::Precondition(format!(
            "{t} has more than one negative exponent; query its inverse {}",
            t.inverse()
        ))
    })
}

/// A triple whose closed-form symbol matches a conjugacy class.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FlypeMatch {
    pub triple: FlypeTriple,
    pub nondegenerate: bool,
}

/// All triples (degenerate ones included) in flype position whose braid is
/// conjugate to `w`, found by matching the class symbols of `w` and `w⁻¹`
/// against the closed formulas.
pub fn detect_flype_all(w: &Word) -> Vec<FlypeMatch> {
    let own = xu_invariant(w);
    let inv = xu_invariant(&w.inverse());
    let mut found = Vec::new();
    for (symbol, via_inverse) in [(&own, false), (&inv, true)] {
        for t in solve_rows(symbol) {
            let t = if via_inverse { t.inverse() } else { t };
            if xu_invariant(&flype_word(&t)) != own {
                continue;
            }
            found.push(FlypeMatch {
                triple: t,
                nondegenerate: is_nondegenerate(&t),
            });
        }
    }
    found.sort();
    found.dedup();
    found
}

/// Triples in flype position, conjugate to `w`, whose flype is non-degenerate.
pub fn detect_flype(w: &Word) -> Vec<FlypeTriple> {
    detect_flype_all(w)
        .into_iter()
        .filter(|m| m.nondegenerate)
        .map(|m| m.triple)
        .collect()
}

/// Every triple covered by the closed formulas whose symbol equals `symbol`.
fn solve_rows(symbol: &XuSymbol) -> Vec<FlypeTriple> {
    // Each parameter shows up as an entry (offset by at most 2), as a run
    // of ones, or in the power, so it is bounded by this.
    let bound = symbol.exponents.iter().sum::<i64>() + symbol.power.abs() + 3;
    let total = symbol.exponent_sum();
    let mut out = Vec::new();
    for epsilon in [1, -1] {
        for negative in 0..4 {
            let sign = |slot: usize| if slot == negative { -1 } else { 1 };
            for p in 1..=bound {
                for q in 1..=bound {
                    let (u, v) = (sign(0) * p, sign(1) * q);
                    // exponent sum u + v + w + ε is a class invariant
                    let w = total - u - v - epsilon;
                    if w == 0 || w.signum() != sign(2) {
                        continue;
                    }
                    let t = FlypeTriple::new(u, v, w, epsilon);
                    if row_symbol(&t).as_ref() == Some(symbol) {
                        out.push(t);
                    }
                }
            }
        }
    }
    out
}

/// Braid index of the closure, with the reduced form `σ1^k σ2^sign` when
/// the index is below 3.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidIndex {
    pub index: u8,
    pub reduced_k: Option<i64>,
    pub reduced_sign: Option<i64>,
}

/// A class has braid index below 3 exactly when it contains some
/// `σ1^k σ2^±1`; the exponent sum leaves two candidates.
pub fn braid_index(w: &Word) -> BraidIndex {
    let s = w.exponent_sum();
    for (k, sign) in [(s - 1, 1), (s + 1, -1)] {
        if are_conjugate(w, &Word::from_pairs([(1, k), (2, sign)])) {
            // σ1^k σ2^±1 closes to the closure of the 2-braid σ1^k
            let index = if k.abs() == 1 { 1 } else { 2 };
            return BraidIndex {
                index,
                reduced_k: Some(k),
                reduced_sign: Some(sign),
            };
        }
    }
    BraidIndex {
        index: 3,
        reduced_k: None,
        reduced_sign: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum LinkClassification {
    BraidIndexLow {
        index: u8,
        k: i64,
        sign: i64,
    },
    UniqueClass {
        symbol: XuSymbol,
    },
    FlypePair {
        triple: FlypeTriple,
        own_symbol: XuSymbol,
        partner_symbol: XuSymbol,
    },
}

/// Sorts a closed 3-braid into the three cases: braid index below 3, a
/// link with exactly two conjugacy classes related by a flype, or a link
/// whose 3-braid representatives form a single class.
pub fn classify(w: &Word) -> LinkClassification {
    let bi = braid_index(w);
    if bi.index < 3 {
        return LinkClassification::BraidIndexLow {
            index: bi.index,
            k: bi.reduced_k.expect("set for index < 3"),
            sign: bi.reduced_sign.expect("set for index < 3"),
        };
    }
    let own_symbol = xu_invariant(w);
    for triple in detect_flype(w) {
        let partner_symbol = xu_invariant(&flype_word(&flype_partner(&triple)));
        if partner_symbol != own_symbol {
            return LinkClassification::FlypePair {
                triple,
                own_symbol,
                partner_symbol,
            };
        }
    }
    LinkClassification::UniqueClass { symbol: own_symbol }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum InvertibilityReason {
    SymbolsEqual,
    FlypeAdmissible,
    Neither,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invertibility {
    pub applicable: bool,
    pub invertible: Option<bool>,
    pub reason: InvertibilityReason,
}

/// Invertibility of a braid index 3 closure: invertible iff the reversed
/// braid is conjugate to it, or the class admits a non-degenerate flype.
/// Not applicable below braid index 3.
pub fn is_invertible(w: &Word) -> Invertibility {
    if braid_index(w).index < 3 {
        return Invertibility {
            applicable: false,
            invertible: None,
            reason: InvertibilityReason::Neither,
        };
    }
    let reason = if !detect_flype(w).is_empty() {
        InvertibilityReason::FlypeAdmissible
    } else if are_conjugate(w, &w.reverse()) {
        InvertibilityReason::SymbolsEqual
    } else {
        InvertibilityReason::Neither
    };
    Invertibility {
        applicable: true,
        invertible: Some(reason != InvertibilityReason::Neither),
        reason,
    }
}

/// Writhe minus the number of strands.
pub fn bennequin(w: &Word) -> i64 {
    w.exponent_sum() - 3
}

/// Two closed braids of the same knot type and Bennequin number that are
/// transversally distinct.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransversalPair {
    pub triple: FlypeTriple,
    pub partner: FlypeTriple,
    pub bennequin: i64,
    pub c_b: i64,
}

/// The transversal pair of a negative flype: present when the flype is
/// non-degenerate, the class has no positive flype, and the closure is a
/// knot.
pub fn transversal_pair(t: &FlypeTriple) -> Result<Option<TransversalPair>> {
    let positive = admits_positive_variant(t)?;
    if !is_nondegenerate(t) || positive || flype_word(t).component_count() != 1 {
        return Ok(None);
    }
    Ok(Some(TransversalPair {
        triple: *t,
        partner: flype_partner(t),
        bennequin: t.u + t.v + t.w - 4,
        c_b: t.crossing_number(),
    }))
}
