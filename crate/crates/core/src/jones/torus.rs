//! Closed formula for the Jones polynomial of the `(r, s)` torus link:
//!
//! ```text
//! V(t) = t^((r-1)(s-1)/2) / (1 - t^2)
//!        · Σ_{l=0..n} C(n, l) t^((r/n)(n-l)(1 + (s/n) l)) (t^((n-l) s/n) - t^(1 + l s/n))
//! ```
//!
//! with `n = gcd(r, s)`. Exponents are evaluated as exact rationals and the
//! division by `1 - t^2` is carried out exactly; any leftover remainder or
//! non-half-integral exponent is reported as an error.

use num_integer::{binomial, Integer};
use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

type Q = Ratio<i64>;

/// `t^e` for a rational `e`, which must be a multiple of one half.
fn t_pow(coeff: i64, e: Q) -> Result<LaurentPoly> {
    let twice = e * 2;
    if !twice.is_integer() {
        return Err(Error::Formula(format!(
            "exponent {e} is not a half-integer"
        )));
    }
    Ok(LaurentPoly::half_monomial(
        Var::T,
        coeff,
        twice.to_integer(),
    ))
}

pub fn torus_jones(r: i64, s: i64) -> Result<LaurentPoly> {
    if r < 2 || s < 2 {
        return Err(Error::TorusDomain(r, s));
    }
    let n = r.gcd(&s);
    let rn = Q::new(r, n);
    let sn = Q::new(s, n);
    let mut sum = LaurentPoly::zero(Var::T);
    for l in 0..=n {
        let c = binomial(n, l);
        let outer = rn * Q::from(n - l) * (Q::from(1) + sn * Q::from(l));
        let first = t_pow(c, outer + Q::from(n - l) * sn)?;
        let second = t_pow(c, outer + Q::from(1) + Q::from(l) * sn)?;
        sum += &(&first - &second);
    }
    let denom = LaurentPoly::from_terms(Var::T, [(0, 1), (2, -1)]);
    let quotient = sum
        .div_exact(&denom)
        .ok_or_else(|| Error::Formula(format!("1 - t^2 does not divide the sum for ({r}, {s})")))?;
    let prefactor = t_pow(1, Q::new((r - 1) * (s - 1), 2))?;
    Ok(&prefactor * &quotient)
}
