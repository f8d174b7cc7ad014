//! Table reproduction and the command-line front end.

pub mod cli;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{
    admits_positive_variant, braid_index, flype_partner, flype_word, is_nondegenerate,
    table2_symbol, FlypeTriple,
};
use crate::conjugacy::{xu_invariant, XuSymbol};
use crate::jones::jones_closure;
use crate::laurent::LaurentPoly;
use crate::word::Word;

/// One row of the table of non-transversally-simple knots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table3Row {
    pub triple: FlypeTriple,
    pub partner: FlypeTriple,
    pub bennequin: i64,
    pub c_b: i64,
    /// The two conjugacy classes, smaller first.
    pub symbol_pair: [XuSymbol; 2],
    pub jones: LaurentPoly,
}

fn negative_triples(max_cb: i64) -> impl Iterator<Item = FlypeTriple> {
    let m = max_cb - 1;
    let range = move || (-m..=m).filter(|&x| x != 0);
    range().flat_map(move |u| {
        range().flat_map(move |v| {
            range()
                .filter(move |&w| u.abs() + v.abs() + w.abs() < max_cb)
                .map(move |w| FlypeTriple::new(u, v, w, -1))
        })
    })
}

/// Knots of braid index 3 with a non-degenerate negative flype and no
/// positive flype, up to braid crossing number `max_cb`.
///
/// Candidates are grouped by the unordered pair of conjugacy classes
/// {class of the braid, class of its flype partner}, which pins down the
/// knot type. Each group keeps its smallest crossing number and, among
/// those triples, the lexicographically smallest one.
pub fn enumerate_table3(max_cb: i64) -> Vec<Table3Row> {
    let mut groups: BTreeMap<[XuSymbol; 2], (i64, FlypeTriple)> = BTreeMap::new();
    for t in negative_triples(max_cb) {
        if !is_nondegenerate(&t)
            || admits_positive_variant(&t).expect("negative flype")
            || flype_word(&t).component_count() != 1
        {
            continue;
        }
        let word = flype_word(&t);
        if braid_index(&word).index != 3 {
            continue;
        }
        let own = xu_invariant(&word);
        let other = xu_invariant(&flype_word(&flype_partner(&t)));
        let key = if own <= other {
            [own, other]
        } else {
            [other, own]
        };
        let candidate = (t.crossing_number(), t);
        groups
            .entry(key)
            .and_modify(|best| *best = (*best).min(candidate))
            .or_insert(candidate);
    }
    let mut rows: Vec<Table3Row> = groups
        .into_iter()
        .map(|(symbol_pair, (c_b, triple))| {
            let partner = flype_partner(&triple);
            let jones = jones_closure(&flype_word(&triple));
            assert_eq!(
                jones,
                jones_closure(&flype_word(&partner)),
                "flype partners {triple} and {partner} have different Jones polynomials"
            );
            Table3Row {
                triple,
                partner,
                bennequin: triple.u + triple.v + triple.w - 4,
                c_b,
                symbol_pair,
                jones,
            }
        })
        .collect();
    rows.sort_by_key(|r| (r.c_b, r.bennequin, r.triple));
    rows
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum RowStatus {
    Confirmed,
    /// The reference symbol breaks `2·power + Σ exponents = exponent sum`.
    Erratum,
    /// The reference symbol is consistent with the exponent sum but is not
    /// the invariant of the class.
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table1Entry {
    pub word: String,
    pub reference: XuSymbol,
    pub computed: XuSymbol,
    pub status: RowStatus,
    pub note: String,
}

/// The reference symbol for `a1^k a2^sign`.
fn table1_reference(k: i64, sign: i64) -> XuSymbol {
    let ones = |n: i64| vec![1; n.max(0) as usize];
    match (sign, k) {
        (1, 1 | 2) => XuSymbol::new(1, if k == 1 { vec![] } else { vec![k - 1] }),
        (1, 3..) => XuSymbol::new(-1, vec![k + 1]),
        (1, ..=-2) => XuSymbol::new(k, [ones(-k - 1), vec![2]].concat()),
        (1, -1) | (-1, 1) => XuSymbol::new(-1, vec![2]),
        (1, 0) => XuSymbol::new(0, vec![1]),
        (-1, 2..) => XuSymbol::new(-1, vec![1, k]),
        (-1, ..=-1) => XuSymbol::new(k, ones(-k - 1)),
        (-1, 0) => XuSymbol::new(-1, vec![1]),
        _ => unreachable!("sign is ±1"),
    }
}

/// Compares the braid-index-below-3 symbols for `a1^k a2^±1`, `k` in
/// `-range..=range`, with their reference values.
pub fn verify_table1(range: i64) -> Vec<Table1Entry> {
    let mut out = Vec::new();
    for sign in [1, -1] {
        for k in -range..=range {
            let word = Word::from_pairs([(1, k), (2, sign)]);
            let reference = table1_reference(k, sign);
            let computed = xu_invariant(&word);
            let sum = word.exponent_sum();
            let (status, note) = if reference == computed {
                (RowStatus::Confirmed, String::new())
            } else if reference.exponent_sum() != sum {
                (
                    RowStatus::Erratum,
                    format!(
                        "reference symbol has 2m+Σl = {}, exponent sum is {sum}",
                        reference.exponent_sum()
                    ),
                )
            } else {
                (
                    RowStatus::Mismatch,
                    format!(
                        "both symbols satisfy 2m+Σl = {sum}; computed {}",
                        if computed.power > reference.power {
                            "reaches a higher power"
                        } else {
                            "has the same power and a smaller tail"
                        }
                    ),
                )
            };
            out.push(Table1Entry {
                word: word.to_string(),
                reference,
                computed,
                status,
                note,
            });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Failure {
    pub triple: FlypeTriple,
    pub closed_form: XuSymbol,
    pub computed: XuSymbol,
    pub partner_conjugate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Table2Report {
    pub checked: usize,
    pub failures: Vec<Table2Failure>,
}

/// Checks the closed-form symbols against the computed invariant for every
/// non-degenerate triple of the eight covered sign patterns with
/// `p, q, r ≤ max_param`, and that flype partners are not conjugate.
pub fn verify_table2(max_param: i64) -> Table2Report {
    let mut checked = 0;
    let mut failures = Vec::new();
    for epsilon in [1, -1] {
        for negative in 0..4 {
            for p in 1..=max_param {
                for q in 1..=max_param {
                    for r in 1..=max_param {
                        let s = |slot: usize, x: i64| if slot == negative { -x } else { x };
                        let t = FlypeTriple::new(s(0, p), s(1, q), s(2, r), epsilon);
                        let Ok(closed_form) = table2_symbol(&t) else {
                            continue;
                        };
                        checked += 1;
                        let computed = xu_invariant(&flype_word(&t));
                        let partner = xu_invariant(&flype_word(&flype_partner(&t)));
                        if closed_form != computed || partner == computed {
                            failures.push(Table2Failure {
                                triple: t,
                                closed_form,
                                computed: computed.clone(),
                                partner_conjugate: partner == computed,
                            });
                        }
                    }
                }
            }
        }
    }
    Table2Report { checked, failures }
}
