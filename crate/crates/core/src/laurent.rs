//! Sparse Laurent polynomials with integer coefficients in one variable.
//!
//! Exponents are stored in half-units so that `t^(1/2)` is representable
//! without leaving integer arithmetic: the key `k` stands for the exponent `k/2`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

/// Name of the indeterminate, used for printing and to keep `A`- and
/// `t`-polynomials from being mixed up.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Var {
    A,
    #[default]
    T,
}

impl Var {
    fn name(self) -> &'static str {
        match self {
            Var::A => "A",
            Var::T => "t",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LaurentPoly {
    var: Var,
    terms: BTreeMap<i64, i64>,
}

impl LaurentPoly {
    pub fn zero(var: Var) -> Self {
        LaurentPoly {
            var,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 1, 0)
    }

    pub fn constant(var: Var, c: i64) -> Self {
        Self::monomial(var, c, 0)
    }

    /// `coeff · var^exponent` with an integer exponent.
    pub fn monomial(var: Var, coeff: i64, exponent: i64) -> Self {
        Self::half_monomial(var, coeff, 2 * exponent)
    }

    /// `coeff · var^(half_units / 2)`.
    pub fn half_monomial(var: Var, coeff: i64, half_units: i64) -> Self {
        let mut p = Self::zero(var);
        p.add_term(half_units, coeff);
        p
    }

    /// Builds from `(half_units, coeff)` pairs; repeated exponents are summed.
    pub fn from_half_terms<I: IntoIterator<Item = (i64, i64)>>(var: Var, terms: I) -> Self {
        let mut p = Self::zero(var);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// Builds from `(integer exponent, coeff)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(var: Var, terms: I) -> Self {
        Self::from_half_terms(var, terms.into_iter().map(|(e, c)| (2 * e, c)))
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms as `(half_units, coeff)`, ascending.
    pub fn half_terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Coefficient of `var^(half_units / 2)`.
    pub fn coeff_half(&self, half_units: i64) -> i64 {
        self.terms.get(&half_units).copied().unwrap_or(0)
    }

    pub fn coeff(&self, exponent: i64) -> i64 {
        self.coeff_half(2 * exponent)
    }

    /// Lowest and highest exponent in half-units.
    pub fn half_degree_range(&self) -> Option<(i64, i64)> {
        Some((*self.terms.keys().next()?, *self.terms.keys().next_back()?))
    }

    /// `Some((coeff, half_units))` when the polynomial is a single term.
    pub fn as_monomial(&self) -> Option<(i64, i64)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, &c)| (c, e))
        } else {
            None
        }
    }

    fn add_term(&mut self, half_units: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(half_units).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&half_units);
        }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_half_terms(self.var, self.half_terms().map(|(e, k)| (e, k * c)))
    }

    /// Multiplies by `var^(half_units / 2)`.
    pub fn shift_half(&self, half_units: i64) -> Self {
        Self::from_half_terms(
            self.var,
            self.half_terms().map(|(e, k)| (e + half_units, k)),
        )
    }

    /// Substitutes `var ↦ new_var^(factor)` where `factor` is a rational
    /// `num/den`; every resulting exponent must be a multiple of one half.
    /// Returns `None` when some exponent would not be.
    pub fn substitute_power(&self, new_var: Var, num: i64, den: i64) -> Option<Self> {
        let mut out = Self::zero(new_var);
        for (e, c) in self.half_terms() {
            let scaled = e * num;
            if scaled % den != 0 {
                return None;
            }
            out.add_term(scaled / den, c);
        }
        Some(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(self.var), |acc, _| &acc * self)
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert_eq!(self.var, divisor.var, "mixed variables");
        let (dlow, dhigh) = divisor.half_degree_range()?;
        let lead = divisor.coeff_half(dhigh);
        let mut rem = self.clone();
        let mut quotient = Self::zero(self.var);
        while let Some((rlow, rhigh)) = rem.half_degree_range() {
            if rhigh - rlow < dhigh - dlow {
                return None;
            }
            let c = rem.coeff_half(rhigh);
            if c % lead != 0 {
                return None;
            }
            let q = Self::half_monomial(self.var, c / lead, rhigh - dhigh);
            rem = &rem - &(&q * divisor);
            quotient += &q;
        }
        Some(quotient)
    }

    /// Every exponent is an integer (not a proper half).
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        debug_assert!(self.var == rhs.var || rhs.is_zero() || self.is_zero());
        if self.is_zero() {
            self.var = rhs.var;
        }
        for (e, c) in rhs.half_terms() {
            self.add_term(e, c);
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.var);
        for (e1, c1) in self.half_terms() {
            for (e2, c2) in rhs.half_terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    /// Descending powers, e.g. `-t^4 + t^3 + t` or `t^(5/2) - t^(1/2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let x = self.var.name();
        for (i, (e, c)) in self.half_terms().rev().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if mag != 1 {
                write!(f, "{mag}")?;
            }
            if e == 2 {
                write!(f, "{x}")?;
            } else if e % 2 == 0 {
                write!(f, "{x}^{}", e / 2)?;
            } else {
                write!(f, "{x}^({}/2)", e)?;
            }
        }
        Ok(())
    }
}

/// Serialized as a list of `[2·exponent, coefficient]` pairs, ascending.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (e, c) in self.half_terms() {
            seq.serialize_element(&[e, c])?;
        }
        seq.end()
    }
}
