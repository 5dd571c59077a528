//! Positive rationals, their regular and negative continued fraction
//! expansions, and q-rationals from the weighted Farey tree.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// A reduced fraction `r/s` with `r >= 1`, or the point `1/0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rational {
    r: u64,
    s: u64,
}

impl Rational {
    /// Builds `r/s`, dividing out any common factor. Every `r/0` becomes `1/0`.
    pub fn new(r: u64, s: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidRational(format!(
                "{r}/{s}: numerator must be positive"
            )));
        }
        let g = r.gcd(&s);
        Ok(Self { r: r / g, s: s / g })
    }

    pub fn infinity() -> Self {
        Self { r: 1, s: 0 }
    }

    pub fn numer(&self) -> u64 {
        self.r
    }

    pub fn denom(&self) -> u64 {
        self.s
    }

    pub fn is_infinity(&self) -> bool {
        self.s == 0
    }

    pub fn is_greater_than_one(&self) -> bool {
        self.s == 0 || self.r > self.s
    }

    fn require_finite_above_one(&self) -> Result<()> {
        if self.is_infinity() || self.r <= self.s {
            Err(Error::NotGreaterThanOne(self.to_string()))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.r, self.s)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `r/s` or a bare integer `r`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let (num, den) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let r = num.parse::<u64>().map_err(|_| bad())?;
        let d = den.parse::<u64>().map_err(|_| bad())?;
        Rational::new(r, d)
    }
}

fn checked_rational(num: u128, den: u128) -> Result<Rational> {
    let overflow = || Error::InvalidRational("value does not fit in 64 bits".into());
    Rational::new(
        u64::try_from(num).map_err(|_| overflow())?,
        u64::try_from(den).map_err(|_| overflow())?,
    )
}

/// `a1 + 1/(a2 + 1/(... + 1/a2m))` with all `ai >= 1` and even length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct RegularCF(Vec<i64>);

impl RegularCF {
    pub fn new(a: Vec<i64>) -> Result<Self> {
        if a.len() < 2 {
            return Err(if a.len() == 1 {
                Error::OddLength(1)
            } else {
                Error::TooShort { min: 2, got: 0 }
            });
        }
        if a.len() % 2 == 1 {
            return Err(Error::OddLength(a.len()));
        }
        if let Some(&bad) = a.iter().find(|&&x| x < 1) {
            return Err(Error::BadCoefficient {
                value: bad,
                reason: "regular continued fraction coefficients must be >= 1",
            });
        }
        Ok(Self(a))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self) -> Result<Rational> {
        let (mut p, mut pp) = (1u128, 0u128);
        let (mut q, mut qq) = (0u128, 1u128);
        for &ai in &self.0 {
            let ai = ai as u128;
            let np = ai.checked_mul(p).and_then(|x| x.checked_add(pp));
            let nq = ai.checked_mul(q).and_then(|x| x.checked_add(qq));
            let (Some(np), Some(nq)) = (np, nq) else {
                return Err(Error::InvalidRational("value does not fit in 64 bits".into()));
            };
            (pp, p) = (p, np);
            (qq, q) = (q, nq);
        }
        checked_rational(p, q)
    }
}

impl TryFrom<Vec<i64>> for RegularCF {
    type Error = Error;
    fn try_from(a: Vec<i64>) -> Result<Self> {
        Self::new(a)
    }
}

impl From<RegularCF> for Vec<i64> {
    fn from(a: RegularCF) -> Self {
        a.0
    }
}

/// `c1 - 1/(c2 - 1/(... - 1/ck))` with all `ci >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct NegativeCF(Vec<i64>);

impl NegativeCF {
    pub fn new(c: Vec<i64>) -> Result<Self> {
        if c.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(&bad) = c.iter().find(|&&x| x < 2) {
            return Err(Error::BadCoefficient {
                value: bad,
                reason: "negative continued fraction coefficients must be >= 2",
            });
        }
        Ok(Self(c))
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn evaluate(&self) -> Result<Rational> {
        // Convergents of the matrix product of [[ci, -1], [1, 0]].
        let (mut p, mut pp) = (1i128, 0i128);
        let (mut q, mut qq) = (0i128, -1i128);
        for &ci in &self.0 {
            let ci = ci as i128;
            let np = ci.checked_mul(p).and_then(|x| x.checked_sub(pp));
            let nq = ci.checked_mul(q).and_then(|x| x.checked_sub(qq));
            let (Some(np), Some(nq)) = (np, nq) else {
                return Err(Error::InvalidRational("value does not fit in 64 bits".into()));
            };
            (pp, p) = (p, np);
            (qq, q) = (q, nq);
        }
        checked_rational(p as u128, q as u128)
    }
}

impl TryFrom<Vec<i64>> for NegativeCF {
    type Error = Error;
    fn try_from(c: Vec<i64>) -> Result<Self> {
        Self::new(c)
    }
}

impl From<NegativeCF> for Vec<i64> {
    fn from(c: NegativeCF) -> Self {
        c.0
    }
}

/// Plain Euclidean partial quotients of a finite rational.
pub fn euclid(x: Rational) -> Vec<u64> {
    let (mut r, mut s) = (x.r, x.s);
    let mut out = Vec::new();
    while s != 0 {
        out.push(r / s);
        (r, s) = (s, r % s);
    }
    out
}

/// The even-length regular expansion of `x > 1`.
pub fn regular_expansion(x: Rational) -> Result<RegularCF> {
    x.require_finite_above_one()?;
    let mut a: Vec<i64> = euclid(x).into_iter().map(|v| v as i64).collect();
    if a.len() % 2 == 1 {
        let last = *a.last().unwrap();
        if last >= 2 {
            *a.last_mut().unwrap() = last - 1;
            a.push(1);
        } else {
            a.pop();
            *a.last_mut().unwrap() += 1;
        }
    }
    RegularCF::new(a)
}

/// The negative (Hirzebruch–Jung) expansion of `x > 1`.
pub fn negative_expansion(x: Rational) -> Result<NegativeCF> {
    x.require_finite_above_one()?;
    let (mut r, mut s) = (x.r, x.s);
    let mut c = Vec::new();
    loop {
        let ci = r.div_ceil(s);
        c.push(ci as i64);
        let rem = ci * s - r;
        if rem == 0 {
            break;
        }
        (r, s) = (s, rem);
    }
    NegativeCF::new(c)
}

/// Regular to negative expansion of the same rational:
/// `(a1+1, 2^(a2-1), a3+2, 2^(a4-1), ..., a2m-1 + 2, 2^(a2m-1))`.
pub fn hirzebruch_convert(a: &RegularCF) -> NegativeCF {
    let mut c = Vec::new();
    for (i, pair) in a.as_slice().chunks(2).enumerate() {
        c.push(pair[0] + if i == 0 { 1 } else { 2 });
        c.extend(std::iter::repeat(2).take((pair[1] - 1) as usize));
    }
    NegativeCF(c)
}

/// Inverse of [`hirzebruch_convert`].
pub fn hirzebruch_inverse(c: &NegativeCF) -> RegularCF {
    let c = c.as_slice();
    let mut a = vec![c[0] - 1];
    let mut i = 1;
    loop {
        let start = i;
        while i < c.len() && c[i] == 2 {
            i += 1;
        }
        a.push((i - start) as i64 + 1);
        if i == c.len() {
            break;
        }
        a.push(c[i] - 2);
        i += 1;
    }
    RegularCF(a)
}

/// One step of the Farey descent: the triangle with lower-left vertex
/// `left`, lower-right vertex `right` and apex `mediant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareyStep {
    pub left: (u64, u64),
    pub right: (u64, u64),
    pub mediant: (u64, u64),
    /// Exponent on the `left`–`right` edge (`-1` at the root).
    pub top_exponent: i64,
    pub numer: LaurentPoly,
    pub denom: LaurentPoly,
}

/// Walks the Stern–Brocot tree down to `x`, carrying weighted q-deformations
/// of each visited fraction. The last step's mediant is `x` itself.
pub fn farey_descent(x: Rational) -> Vec<FareyStep> {
    let mut left = ((0u64, 1u64), LaurentPoly::zero(), LaurentPoly::one());
    let mut right = ((1u64, 0u64), LaurentPoly::one(), LaurentPoly::zero());
    let mut top = -1i64;
    let mut steps = Vec::new();
    if x.is_infinity() {
        return steps;
    }
    loop {
        let d = top + 1;
        let w = LaurentPoly::monomial(1, d);
        let m = (left.0 .0 + right.0 .0, left.0 .1 + right.0 .1);
        let numer = &left.1 + &(&w * &right.1);
        let denom = &left.2 + &(&w * &right.2);
        steps.push(FareyStep {
            left: left.0,
            right: right.0,
            mediant: m,
            top_exponent: top,
            numer: numer.clone(),
            denom: denom.clone(),
        });
        let lhs = x.r as u128 * m.1 as u128;
        let rhs = m.0 as u128 * x.s as u128;
        match lhs.cmp(&rhs) {
            std::cmp::Ordering::Equal => return steps,
            std::cmp::Ordering::Less => {
                right = (m, numer, denom);
                top = 0;
            }
            std::cmp::Ordering::Greater => {
                left = (m, numer, denom);
                top = d;
            }
        }
    }
}

/// `[x]_q = R/S` from the Farey mediant rule.
pub fn q_rational_farey(x: Rational) -> (LaurentPoly, LaurentPoly) {
    match farey_descent(x).pop() {
        Some(step) => (step.numer, step.denom),
        None => (LaurentPoly::one(), LaurentPoly::zero()),
    }
}
