//! Exact Laurent polynomials in one variable `q` with big-integer coefficients.
//!
//! A polynomial is stored densely over its degree span `[min, max]`: the
//! first and last stored coefficients are always nonzero, and the zero
//! polynomial is the empty vector. Every q-expression in the crate
//! (q-integers, continuants, rotundi, generating functions) lives here.

use std::cmp::Ordering;
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial<C: Into<BigInt>>(c: C, exp: i64) -> Self {
        Self::from_dense(exp, vec![c.into()])
    }

    /// Builds `sum_i coeffs[i] * q^(min + i)`, trimming zeros at both ends.
    pub fn from_coeffs<C, I>(min: i64, coeffs: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = C>,
    {
        Self::from_dense(min, coeffs.into_iter().map(Into::into).collect())
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C, I>(terms: I) -> Self
    where
        C: Into<BigInt>,
        I: IntoIterator<Item = (i64, C)>,
    {
        terms
            .into_iter()
            .map(|(e, c)| Self::monomial(c, e))
            .sum()
    }

    fn from_dense(mut min: i64, mut coeffs: Vec<BigInt>) -> Self {
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Self::zero(),
            Some(start) => {
                let end = coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(start);
                coeffs.truncate(end + 1);
                coeffs.drain(..start);
                min += start as i64;
                Self { min, coeffs }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.min == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn min_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min)
    }

    pub fn max_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min + self.coeffs.len() as i64 - 1)
    }

    /// Coefficient of `q^exp` (zero outside the span).
    pub fn coeff(&self, exp: i64) -> BigInt {
        let idx = exp - self.min;
        if idx < 0 {
            return BigInt::zero();
        }
        self.coeffs
            .get(idx as usize)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Dense coefficients over `[min_degree, max_degree]`, zeros included.
    pub fn dense(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min + i as i64, c))
    }

    /// Multiplication by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            min: self.min + d,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Reverses the coefficient sequence over the degree span, keeping the
    /// span fixed. On polynomials this is `q^(min+max) * p(1/q)`.
    pub fn mirror(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::MirrorOfZero);
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Ok(Self {
            min: self.min,
            coeffs,
        })
    }

    /// Substitutes `q -> 1/q`.
    pub fn invert_variable(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(max) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                Self { min: -max, coeffs }
            }
        }
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Weakly increasing then weakly decreasing over the degree span.
    pub fn is_unimodal(&self) -> bool {
        let mut descending = false;
        for w in self.coeffs.windows(2) {
            match w[0].cmp(&w[1]) {
                Ordering::Less if descending => return false,
                Ordering::Greater => descending = true,
                _ => {}
            }
        }
        true
    }

    /// Every coefficient over the span is strictly positive.
    pub fn has_positive_coefficients(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().all(Signed::is_positive)
    }

    /// Nonzero with no negative coefficient; internal zeros allowed.
    pub fn has_nonnegative_coefficients(&self) -> bool {
        !self.is_zero() && !self.coeffs.iter().any(Signed::is_negative)
    }

    /// Value at `q = 1`, the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Value at the integer `x`; `None` when negative powers make it non-integral.
    pub fn eval(&self, x: i64) -> Option<BigInt> {
        if x == 0 && self.min < 0 {
            return None;
        }
        // Horner on the polynomial part, then the q^min factor.
        let xb = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xb + c;
        }
        if self.min >= 0 {
            Some(acc * xb.pow(self.min as u32))
        } else {
            let den = xb.pow((-self.min) as u32);
            let (quot, rem) = acc.div_rem(&den);
            rem.is_zero().then_some(quot)
        }
    }

    /// gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_dense(self.min, self.coeffs.iter().map(|x| x * c).collect())
    }

    fn add_scaled(&mut self, other: &Self, negate: bool) {
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = if negate { -other } else { other.clone() };
            return;
        }
        let lo = self.min.min(other.min);
        let hi = self.max_degree().unwrap().max(other.max_degree().unwrap());
        if lo < self.min {
            let pad = (self.min - lo) as usize;
            self.coeffs
                .splice(0..0, std::iter::repeat_with(BigInt::zero).take(pad));
            self.min = lo;
        }
        self.coeffs.resize((hi - lo + 1) as usize, BigInt::zero());
        let off = (other.min - lo) as usize;
        for (i, c) in other.coeffs.iter().enumerate() {
            if negate {
                self.coeffs[off + i] -= c;
            } else {
                self.coeffs[off + i] += c;
            }
        }
        let taken = std::mem::take(&mut self.coeffs);
        *self = Self::from_dense(self.min, taken);
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let min = self.min + other.min;
        let len = self.coeffs.len() + other.coeffs.len() - 1;
        if let (Some(a), Some(b)) = (small_coeffs(&self.coeffs), small_coeffs(&other.coeffs)) {
            let bound = max_bits(&a) + max_bits(&b) + usize::BITS - a.len().min(b.len()).leading_zeros();
            if bound < 126 {
                let mut acc = vec![0i128; len];
                for (i, &x) in a.iter().enumerate() {
                    if x == 0 {
                        continue;
                    }
                    for (j, &y) in b.iter().enumerate() {
                        acc[i + j] += x as i128 * y as i128;
                    }
                }
                return Self::from_dense(min, acc.into_iter().map(BigInt::from).collect());
            }
        }
        let mut acc = vec![BigInt::zero(); len];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                acc[i + j] += x * y;
            }
        }
        Self::from_dense(min, acc)
    }
}

fn small_coeffs(c: &[BigInt]) -> Option<Vec<i64>> {
    c.iter().map(ToPrimitive::to_i64).collect()
}

fn max_bits(c: &[i64]) -> u32 {
    c.iter()
        .map(|x| 64 - x.unsigned_abs().leading_zeros())
        .max()
        .unwrap_or(0)
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, false);
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out.add_scaled(rhs, true);
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.mul_ref(rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            min: self.min,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, false);
    }
}

impl AddAssign<LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        self.add_scaled(&rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.add_scaled(rhs, true);
    }
}

impl SubAssign<LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        self.add_scaled(&rhs, true);
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<'a> Sum<&'a LaurentPoly> for LaurentPoly {
    fn sum<I: Iterator<Item = &'a LaurentPoly>>(iter: I) -> Self {
        iter.fold(Self::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |acc, p| &acc * &p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

/// Canonical text form: terms in ascending exponent, `c*q^e` with the
/// coefficient dropped when it is 1 and `^e` dropped when `e` is 1.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{e}")?,
                (_, false) => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid polynomial '{s}'"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad());
        }
        // Split into signed terms; a '-' right after '^' belongs to the exponent.
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        let mut prev = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev != Some('^') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
            prev = Some(ch);
        }
        terms.push(cur);

        let mut out = LaurentPoly::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term.as_str()),
            };
            if body.is_empty() {
                return Err(bad());
            }
            let (coef, exp) = match body.find('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let head = &body[..pos];
                    let tail = &body[pos + 1..];
                    let coef = match head {
                        "" => BigInt::one(),
                        h => h
                            .strip_suffix('*')
                            .ok_or_else(bad)?
                            .parse::<BigInt>()
                            .map_err(|_| bad())?,
                    };
                    let exp = match tail {
                        "" => 1,
                        t => t
                            .strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse::<i64>()
                            .map_err(|_| bad())?,
                    };
                    (coef, exp)
                }
            };
            let coef = if negative { -coef } else { coef };
            out += LaurentPoly::monomial(coef, exp);
        }
        Ok(out)
    }
}

/// JSON form `{"min": e, "coeffs": [..]}`, dense over the degree span.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let coeffs: Vec<serde_json::Number> = self
            .coeffs
            .iter()
            .map(|c| serde_json::Number::from_str(&c.to_string()))
            .collect::<std::result::Result<_, _>>()
            .map_err(serde::ser::Error::custom)?;
        let mut st = serializer.serialize_struct("LaurentPoly", 2)?;
        st.serialize_field("min", &self.min)?;
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            min: i64,
            coeffs: Vec<serde_json::Number>,
        }
        let raw = Raw::deserialize(deserializer)?;
        let coeffs = raw
            .coeffs
            .iter()
            .map(|n| {
                n.to_string()
                    .parse::<BigInt>()
                    .map_err(|_| D::Error::custom(format!("non-integer coefficient {n}")))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Self::from_dense(raw.min, coeffs))
    }
}

/// Shorthand used throughout the crate and its tests: `poly(min, [c0, c1, ..])`.
pub fn poly<const N: usize>(min: i64, coeffs: [i64; N]) -> LaurentPoly {
    LaurentPoly::from_coeffs(min, coeffs)
}
