//! Computations in the braid group on three strands.
//!
//! Words over the band generators `a1, a2, a3` ([`word`]) are brought to a
//! unique normal form `δ^q · P` ([`normal_form`]), which solves the word
//! problem. Conjugacy is decided by a summit-set invariant ([`conjugacy`]).
//! On top of that sit classification of closed 3-braids ([`classify`]),
//! Jones polynomials ([`jones`]), and the table reproduction and command
//! line in [`harness`].
//!
//! ```
//! use tribraid::normal_form::normalize;
//! use tribraid::word::parse_word;
//!
//! let nf = normalize(&parse_word("a1^-2 a2^-3 a1^5 a2")?);
//! assert_eq!(nf.to_string(), "d^-4 a2^2 a3 a1^5 a2");
//! # Ok::<(), tribraid::Error>(())
//! ```

pub mod burau;
pub mod classify;
pub mod conjugacy;
pub mod error;
pub mod harness;
pub mod jones;
pub mod laurent;
pub mod normal_form;
pub mod word;

pub use error::{Error, Result};

// The guide's code blocks run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/words.md")]
    pub mod words {}
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    pub mod normal_forms {}
    #[doc = include_str!("../../../book/src/conjugacy.md")]
    pub mod conjugacy {}
    #[doc = include_str!("../../../book/src/flypes.md")]
    pub mod flypes {}
    #[doc = include_str!("../../../book/src/jones.md")]
    pub mod jones {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    pub mod command_line {}
}
