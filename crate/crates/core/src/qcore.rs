//! q-integers, q-continuants, the 2x2 matrix products, q-continued fractions,
//! q-rotundi and the Euler–Minding expansions.
//!
//! Two sequence conventions run through this module:
//!
//! * `a = (a1, ..., a2m)` with `ai >= 1` and even length, the coefficients of
//!   a regular continued fraction;
//! * `c = (c1, ..., ck)`, the coefficients of a negative (Hirzebruch–Jung)
//!   continued fraction, normally with `ci >= 2`.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

/// Largest sequence accepted by the Euler–Minding subset enumeration.
pub const EULER_MINDING_MAX_LEN: usize = 20;

/// A 2x2 matrix over Laurent polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mat2 {
    pub a11: LaurentPoly,
    pub a12: LaurentPoly,
    pub a21: LaurentPoly,
    pub a22: LaurentPoly,
}

impl Mat2 {
    pub fn new(a11: LaurentPoly, a12: LaurentPoly, a21: LaurentPoly, a22: LaurentPoly) -> Self {
        Self { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    /// `[[q, 1], [0, 1]]`, the factor relating the two matrix products.
    pub fn r_q() -> Self {
        Self::new(
            LaurentPoly::q(),
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn trace(&self) -> LaurentPoly {
        &self.a11 + &self.a22
    }

    pub fn det(&self) -> LaurentPoly {
        &self.a11 * &self.a22 - &self.a12 * &self.a21
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        Self::new(
            &self.a11 * p,
            &self.a12 * p,
            &self.a21 * p,
            &self.a22 * p,
        )
    }

    pub fn entries(&self) -> [&LaurentPoly; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }
}

impl Mul<&Mat2> for &Mat2 {
    type Output = Mat2;
    fn mul(self, r: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a11 * &r.a11 + &self.a12 * &r.a21,
            &self.a11 * &r.a12 + &self.a12 * &r.a22,
            &self.a21 * &r.a11 + &self.a22 * &r.a21,
            &self.a21 * &r.a12 + &self.a22 * &r.a22,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

/// `[n]_q`: `1 + q + ... + q^(n-1)` for `n > 0`, `0` for `n = 0`, and
/// `-q^-1 - ... - q^-|n|` for `n < 0`.
pub fn q_integer(n: i64) -> LaurentPoly {
    match n {
        0 => LaurentPoly::zero(),
        n if n > 0 => LaurentPoly::from_coeffs(0, std::iter::repeat(1).take(n as usize)),
        n => LaurentPoly::from_coeffs(n, std::iter::repeat(-1).take((-n) as usize)),
    }
}

fn check_regular(a: &[i64], allow_empty: bool) -> Result<()> {
    if a.is_empty() {
        return if allow_empty {
            Ok(())
        } else {
            Err(Error::TooShort { min: 2, got: 0 })
        };
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
    Ok(())
}

fn check_nonempty(c: &[i64]) -> Result<()> {
    if c.is_empty() {
        Err(Error::EmptySequence)
    } else {
        Ok(())
    }
}

/// `M+(a)_q`: `q^(a2 + a4 + ...)` times the alternating product of
/// `[[[ai]_q, q^ai], [1, 0]]` (odd i) and `[[[ai]_{1/q}, q^-ai], [1, 0]]` (even i).
pub fn mat_plus(a: &[i64]) -> Result<Mat2> {
    check_regular(a, false)?;
    let mut m = Mat2::identity();
    for (i, &ai) in a.iter().enumerate() {
        let factor = if i % 2 == 0 {
            Mat2::new(
                q_integer(ai),
                LaurentPoly::monomial(1, ai),
                LaurentPoly::one(),
                LaurentPoly::zero(),
            )
        } else {
            Mat2::new(
                q_integer(ai).invert_variable(),
                LaurentPoly::monomial(1, -ai),
                LaurentPoly::one(),
                LaurentPoly::zero(),
            )
        };
        m = &m * &factor;
    }
    let even_sum: i64 = a.iter().skip(1).step_by(2).sum();
    Ok(m.scale(&LaurentPoly::monomial(1, even_sum)))
}

/// `M(c)_q`: the product of `[[[ci]_q, -q^(ci-1)], [1, 0]]`.
pub fn mat_minus(c: &[i64]) -> Result<Mat2> {
    check_nonempty(c)?;
    Ok(c.iter().fold(Mat2::identity(), |m, &ci| {
        let factor = Mat2::new(
            q_integer(ci),
            -LaurentPoly::monomial(1, ci - 1),
            LaurentPoly::one(),
            LaurentPoly::zero(),
        );
        &m * &factor
    }))
}

/// `K_2m(a)_q`, read off the top-left entry of `M+(a)_q` (which is `q K_2m`).
pub fn continuant_k(a: &[i64]) -> Result<LaurentPoly> {
    check_regular(a, true)?;
    if a.is_empty() {
        return Ok(LaurentPoly::one());
    }
    Ok(mat_plus(a)?.a11.shift(-1))
}

/// `K_2m(a)_q` and `K_2m-1(a2..a2m)_q` evaluated straight from the tridiagonal
/// determinant with mixed `[ai]_q` / `[ai]_{1/q}` diagonal, including the
/// `q^(a2 + a4 + ... - 1)` prefactor. The second value drops the first row
/// and column. Used to cross-check the matrix-product route.
pub fn continuant_k_by_determinant(a: &[i64]) -> Result<(LaurentPoly, LaurentPoly)> {
    check_regular(a, false)?;
    let n = a.len();
    let diag = |i: usize| {
        if i % 2 == 0 {
            q_integer(a[i])
        } else {
            q_integer(a[i]).invert_variable()
        }
    };
    let sup = |i: usize| {
        if i % 2 == 0 {
            LaurentPoly::monomial(1, a[i])
        } else {
            LaurentPoly::monomial(1, -a[i])
        }
    };
    // Subdiagonal entries are -1, so D_j = d_j D_{j-1} + s_{j-1} D_{j-2}.
    let tridiag = |start: usize| {
        let mut prev = LaurentPoly::zero();
        let mut cur = LaurentPoly::one();
        for j in start..n {
            let next = if j == start {
                diag(j)
            } else {
                &diag(j) * &cur + &sup(j - 1) * &prev
            };
            prev = std::mem::replace(&mut cur, next);
        }
        cur
    };
    let even_sum: i64 = a.iter().skip(1).step_by(2).sum();
    let prefactor = LaurentPoly::monomial(1, even_sum - 1);
    Ok((&prefactor * &tridiag(0), &prefactor * &tridiag(1)))
}

/// `E_k(c)_q` by the recurrence `E_j = [c_j]_q E_{j-1} - q^(c_{j-1}-1) E_{j-2}`.
pub fn continuant_e(c: &[i64]) -> LaurentPoly {
    let mut prev = LaurentPoly::zero();
    let mut cur = LaurentPoly::one();
    for (j, &cj) in c.iter().enumerate() {
        let mut next = &q_integer(cj) * &cur;
        if j > 0 {
            next -= LaurentPoly::monomial(1, c[j - 1] - 1) * &prev;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `R+(a)_q = Tr M+(a)_q`.
pub fn rotundus_plus(a: &[i64]) -> Result<LaurentPoly> {
    Ok(mat_plus(a)?.trace())
}

/// `R(c)_q = Tr M(c)_q`, for entries `>= 2`.
pub fn rotundus_minus(c: &[i64]) -> Result<LaurentPoly> {
    if let Some(&bad) = c.iter().find(|&&x| x < 2) {
        return Err(Error::BadCoefficient {
            value: bad,
            reason: "negative continued fraction coefficients must be >= 2",
        });
    }
    Ok(mat_minus(c)?.trace())
}

/// Numerator and denominator of `[a1, ..., a2m]_q`.
pub fn qcf_regular(a: &[i64]) -> Result<(LaurentPoly, LaurentPoly)> {
    let m = mat_plus(a)?;
    Ok((m.a11.shift(-1), m.a21.shift(-1)))
}

/// Numerator and denominator of the negative q-continued fraction `[[c1, ..., ck]]_q`.
pub fn qcf_negative(c: &[i64]) -> Result<(LaurentPoly, LaurentPoly)> {
    check_nonempty(c)?;
    Ok((continuant_e(c), continuant_e(&c[1..])))
}

fn check_euler_minding_len(k: usize) -> Result<()> {
    if k > EULER_MINDING_MAX_LEN {
        return Err(Error::TooLong {
            max: EULER_MINDING_MAX_LEN,
            got: k,
        });
    }
    Ok(())
}

/// Product of `[c_j]_q` over uncovered positions times `-q^(c_i - 1)` for
/// each removed pair starting at `i`.
fn euler_minding_term(c: &[i64], pair_starts: u32, pair_count: usize) -> LaurentPoly {
    let k = c.len();
    let mut covered = vec![false; k];
    let mut term = LaurentPoly::one();
    for i in 0..pair_count {
        if pair_starts & (1 << i) != 0 {
            covered[i] = true;
            covered[(i + 1) % k] = true;
            term = &term * &(-LaurentPoly::monomial(1, c[i] - 1));
        }
    }
    for (j, &cj) in c.iter().enumerate() {
        if !covered[j] {
            term = &term * &q_integer(cj);
        }
    }
    term
}

/// `E_k(c)_q` as the sum over sets of disjoint adjacent pairs removed from
/// `[c1]_q ... [ck]_q`.
pub fn euler_minding_e(c: &[i64]) -> Result<LaurentPoly> {
    let k = c.len();
    check_euler_minding_len(k)?;
    if k < 2 {
        return Ok(continuant_e(c));
    }
    let pairs = k - 1;
    Ok((0u32..1 << pairs)
        .filter(|m| m & (m >> 1) == 0)
        .map(|m| euler_minding_term(c, m, pairs))
        .sum())
}

/// The cyclic variant: pairs `{i, i+1}` are taken mod `k`, the pair `{k, 1}`
/// contributing `-q^(c_k - 1)`. Refuses `k < 3`.
pub fn euler_minding_r(c: &[i64]) -> Result<LaurentPoly> {
    let k = c.len();
    if k < 3 {
        return Err(Error::TooShort { min: 3, got: k });
    }
    check_euler_minding_len(k)?;
    let full = (1u32 << k) - 1;
    Ok((0u32..1 << k)
        .filter(|&m| {
            let rotated = ((m >> 1) | (m << (k - 1))) & full;
            m & rotated == 0
        })
        .map(|m| euler_minding_term(c, m, k))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::poly;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn q_integers() {
        assert_eq!(q_integer(3), p("1 + q + q^2"));
        assert!(q_integer(0).is_zero());
        assert_eq!(q_integer(-2), p("-q^-1 - q^-2"));
        assert_eq!(q_integer(1), LaurentPoly::one());
    }

    #[test]
    fn mat_plus_running_example() {
        let m = mat_plus(&[1, 2, 1, 1]).unwrap();
        assert_eq!(m.a11, p("q + q^2 + 2*q^3 + 2*q^4 + q^5"));
        assert_eq!(m.a12, p("1 + q + q^2 + q^3"));
        assert_eq!(m.a21, p("q + q^2 + 2*q^3 + q^4"));
        assert_eq!(m.a22, p("1 + q + q^2"));
    }

    #[test]
    fn mat_plus_smallest() {
        // q * [[1, q], [1, 0]] * [[1, q^-1], [1, 0]] = q * [[1 + q, q^-1], [1, q^-1]]
        let m = mat_plus(&[1, 1]).unwrap();
        assert_eq!(m, Mat2::new(p("q + q^2"), p("1"), p("q"), p("1")));
    }

    #[test]
    fn mat_plus_rejects_bad_shapes() {
        assert_eq!(mat_plus(&[2, 1, 1]), Err(Error::OddLength(3)));
        assert!(mat_plus(&[]).is_err());
        assert!(matches!(
            mat_plus(&[1, 0]),
            Err(Error::BadCoefficient { value: 0, .. })
        ));
    }

    #[test]
    fn mat_minus_examples() {
        let m = mat_minus(&[2, 2, 3]).unwrap();
        assert_eq!(m.a11, p("1 + q + 2*q^2 + 2*q^3 + q^4"));
        assert_eq!(m.a12, p("-q^2 - q^3 - q^4"));
        assert_eq!(m.a21, p("1 + q + 2*q^2 + q^3"));
        assert_eq!(m.a22, p("-q^2 - q^3"));
        assert_eq!(
            mat_minus(&[2]).unwrap(),
            Mat2::new(p("1 + q"), p("-q"), p("1"), LaurentPoly::zero())
        );
        // [[1+q+q^2, -q^2], [1, 0]] * [[1+q, -q], [1, 0]]
        assert_eq!(
            mat_minus(&[3, 2]).unwrap(),
            Mat2::new(
                p("1 + 2*q + q^2 + q^3"),
                p("-q - q^2 - q^3"),
                p("1 + q"),
                p("-q")
            )
        );
        assert_eq!(mat_minus(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn k_continuants() {
        assert_eq!(continuant_k(&[1, 2, 1, 1]).unwrap(), p("1 + q + 2*q^2 + 2*q^3 + q^4"));
        assert_eq!(continuant_k(&[]).unwrap(), LaurentPoly::one());
        assert_eq!(continuant_k(&[1, 1]).unwrap(), p("1 + q"));
        assert_eq!(continuant_k(&[1, 1, 1]), Err(Error::OddLength(3)));
    }

    #[test]
    fn k_continuant_determinant_route_agrees() {
        for a in [vec![1, 1], vec![1, 2, 1, 1], vec![3, 1, 2, 4], vec![2, 2, 1, 3, 1, 1]] {
            let (num, den) = continuant_k_by_determinant(&a).unwrap();
            let (n2, d2) = qcf_regular(&a).unwrap();
            assert_eq!(num, n2, "{a:?}");
            assert_eq!(den, d2, "{a:?}");
        }
    }

    #[test]
    fn e_continuants() {
        assert_eq!(continuant_e(&[2, 2, 3]), p("1 + q + 2*q^2 + 2*q^3 + q^4"));
        assert_eq!(continuant_e(&[2, 3]), p("1 + q + 2*q^2 + q^3"));
        assert_eq!(continuant_e(&[]), LaurentPoly::one());
    }

    #[test]
    fn rotundi() {
        assert_eq!(
            rotundus_plus(&[1, 2, 1, 1]).unwrap(),
            p("1 + 2*q + 2*q^2 + 2*q^3 + 2*q^4 + q^5")
        );
        assert_eq!(rotundus_plus(&[1, 1]).unwrap(), p("1 + q + q^2"));
        assert_eq!(rotundus_plus(&[1]), Err(Error::OddLength(1)));
        assert_eq!(rotundus_minus(&[2, 2, 3]).unwrap(), p("1 + q + q^2 + q^3 + q^4"));
        assert_eq!(rotundus_minus(&[3]).unwrap(), p("1 + q + q^2"));
        assert_eq!(rotundus_minus(&[2, 2]).unwrap(), p("1 + q^2"));
        assert_eq!(rotundus_minus(&[]), Err(Error::EmptySequence));
        assert!(rotundus_minus(&[1, 3]).is_err());
    }

    #[test]
    fn rotundus_minus_matches_continuant_formula() {
        for c in [vec![2, 2, 3], vec![3, 2, 5, 2], vec![4, 4]] {
            let k = c.len();
            let rhs = continuant_e(&c)
                - LaurentPoly::monomial(1, c[k - 1] - 1) * continuant_e(&c[1..k - 1]);
            assert_eq!(rotundus_minus(&c).unwrap(), rhs);
        }
    }

    #[test]
    fn q_continued_fractions() {
        assert_eq!(
            qcf_regular(&[1, 2, 1, 1]).unwrap(),
            (p("1 + q + 2*q^2 + 2*q^3 + q^4"), p("1 + q + 2*q^2 + q^3"))
        );
        assert_eq!(qcf_regular(&[1, 1]).unwrap(), (p("1 + q"), p("1")));
        assert_eq!(qcf_regular(&[2, 1, 1]), Err(Error::OddLength(3)));
        assert_eq!(
            qcf_negative(&[2, 2, 3]).unwrap(),
            (p("1 + q + 2*q^2 + 2*q^3 + q^4"), p("1 + q + 2*q^2 + q^3"))
        );
        assert_eq!(qcf_negative(&[2]).unwrap(), (p("1 + q"), p("1")));
        assert_eq!(qcf_negative(&[2, 2]).unwrap(), (p("1 + q + q^2"), p("1 + q")));
        assert_eq!(qcf_negative(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn euler_minding_small() {
        assert_eq!(euler_minding_e(&[]).unwrap(), LaurentPoly::one());
        assert_eq!(euler_minding_e(&[2, 2, 3]).unwrap(), continuant_e(&[2, 2, 3]));
        assert_eq!(euler_minding_r(&[2, 2, 3]).unwrap(), p("1 + q + q^2 + q^3 + q^4"));
        assert_eq!(
            euler_minding_r(&[2, 2, 2, 2]).unwrap(),
            rotundus_minus(&[2, 2, 2, 2]).unwrap()
        );
        assert!(euler_minding_r(&[2, 2]).is_err());
        assert!(euler_minding_e(&[2; 21]).is_err());
    }

    #[test]
    fn euler_minding_three_term_shape() {
        // [c1][c2][c3] - q^(c1-1)[c3] - q^(c2-1)[c1], and the cyclic extra term.
        let c = [3, 4, 2];
        let [x, y, z] = c.map(q_integer);
        let e3 = &(&x * &y) * &z
            - LaurentPoly::monomial(1, c[0] - 1) * &z
            - LaurentPoly::monomial(1, c[1] - 1) * &x;
        assert_eq!(euler_minding_e(&c).unwrap(), e3);
        let r3 = &e3 - &(LaurentPoly::monomial(1, c[2] - 1) * &y);
        assert_eq!(euler_minding_r(&c).unwrap(), r3);
    }

    #[test]
    fn matrix_relation_with_r_q() {
        // M+(1,2,1,1) = M(2,2,3) R_q
        let lhs = mat_plus(&[1, 2, 1, 1]).unwrap();
        let rhs = &mat_minus(&[2, 2, 3]).unwrap() * &Mat2::r_q();
        assert_eq!(lhs, rhs);
        assert_eq!(poly(0, [1, 1]), q_integer(2));
    }
}
