//! The 2k x 2k skew-symmetric and symmetric matrices whose determinants
//! recover the square of a q-rotundus, and exact determinants over Laurent
//! polynomials.

use std::collections::HashMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::qcore::{q_integer, rotundus_minus};

pub const DEFAULT_DIM_CAP: usize = 14;
pub const DIM_CAP_ENV: &str = "QROT_DIM_CAP";

/// Determinant dimension cap: `QROT_DIM_CAP` if set and valid, else 14.
pub fn dim_cap() -> usize {
    std::env::var(DIM_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareMatrix {
    dim: usize,
    entries: Vec<LaurentPoly>,
}

impl SquareMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![LaurentPoly::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, LaurentPoly::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::NotSquare);
        }
        Ok(Self {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[LaurentPoly]> {
        self.entries.chunks(self.dim)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..self.dim).all(|i| {
            (0..self.dim).all(|j| *self.get(i, j) == -self.get(j, i))
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn eval_at_one(&self) -> Vec<Vec<i64>> {
        self.rows()
            .map(|r| {
                r.iter()
                    .map(|p| i64::try_from(p.eval_at_one()).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }
}

fn check_k(c: &[i64]) -> Result<usize> {
    let k = c.len();
    if k < 2 {
        return Err(Error::TooShort { min: 2, got: k });
    }
    Ok(k)
}

fn q_pow(e: i64) -> LaurentPoly {
    LaurentPoly::monomial(1, e)
}

/// Shared upper-right block: `[c_i]_q` on the diagonal, `1` above it and
/// `q^(c_i - 1)` below it.
fn upper_block(c: &[i64]) -> Vec<Vec<LaurentPoly>> {
    let k = c.len();
    let mut u = vec![vec![LaurentPoly::zero(); k]; k];
    for i in 0..k {
        u[i][i] = q_integer(c[i]);
        if i + 1 < k {
            u[i][i + 1] = LaurentPoly::one();
            u[i + 1][i] = q_pow(c[i] - 1);
        }
    }
    u
}

fn assemble(c: &[i64], sign: i64) -> Result<SquareMatrix> {
    let k = check_k(c)?;
    let mut m = SquareMatrix::zeros(2 * k);
    let u = upper_block(c);
    let s = LaurentPoly::constant(sign);
    for i in 0..k {
        for j in 0..k {
            if !u[i][j].is_zero() {
                m.set(i, k + j, u[i][j].clone());
                m.set(k + j, i, &s * &u[i][j]);
            }
        }
    }
    m.set(0, k - 1, LaurentPoly::one());
    m.set(k - 1, 0, s.clone());
    let corner = q_pow(c[k - 1] - 1);
    m.set(k, 2 * k - 1, corner.clone());
    m.set(2 * k - 1, k, &s * &corner);
    Ok(m)
}

/// The skew-symmetric matrix with `det = R(c)_q^2`.
pub fn build_skew(c: &[i64]) -> Result<SquareMatrix> {
    let m = assemble(c, -1)?;
    assert!(m.is_skew_symmetric());
    Ok(m)
}

/// The symmetric matrix with `(-1)^k det = R(c)_q^2 - 4 q^(sum(c_i - 1))`
/// (conjectural in general).
pub fn build_sym(c: &[i64]) -> Result<SquareMatrix> {
    let m = assemble(c, 1)?;
    assert!(m.is_symmetric());
    Ok(m)
}

/// Exact determinant, refusing matrices above [`dim_cap`].
pub fn determinant(m: &SquareMatrix) -> Result<LaurentPoly> {
    determinant_with_cap(m, dim_cap())
}

pub fn determinant_with_cap(m: &SquareMatrix, cap: usize) -> Result<LaurentPoly> {
    if m.dim > cap {
        return Err(Error::DimensionCap { dim: m.dim, cap });
    }
    Ok(determinant_by_expansion(m))
}

/// Row-by-row Laplace expansion with the partial sums keyed by the set of
/// columns already used. Only nonzero entries spawn states, so banded and
/// block-sparse matrices stay cheap.
pub fn determinant_by_expansion(m: &SquareMatrix) -> LaurentPoly {
    assert!(m.dim <= 64, "column sets are kept in a u64");
    let mut states: HashMap<u64, LaurentPoly> = HashMap::from([(0u64, LaurentPoly::one())]);
    for i in 0..m.dim {
        let mut next: HashMap<u64, LaurentPoly> = HashMap::with_capacity(states.len() * 2);
        for (used, acc) in &states {
            for j in 0..m.dim {
                let e = m.get(i, j);
                if e.is_zero() || used & (1 << j) != 0 {
                    continue;
                }
                // Inversions added by placing column j after the used ones.
                let above = (used >> j >> 1).count_ones();
                let term = acc * e;
                let slot = next.entry(used | 1 << j).or_default();
                if above % 2 == 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
        if states.is_empty() {
            return LaurentPoly::zero();
        }
    }
    states.into_values().sum()
}

/// Berkowitz's division-free algorithm: the characteristic polynomial via
/// Toeplitz products, read off at its constant term.
pub fn determinant_berkowitz(m: &SquareMatrix) -> LaurentPoly {
    let n = m.dim;
    // c holds characteristic polynomial coefficients of the leading r x r block,
    // highest degree first.
    let mut c: Vec<LaurentPoly> = vec![LaurentPoly::one(), -m.get(0, 0)];
    for r in 1..n {
        // Partition the (r+1) x (r+1) leading block as [[A, R], [S, a]].
        let a = m.get(r, r);
        let s_row: Vec<&LaurentPoly> = (0..r).map(|j| m.get(r, j)).collect();
        let r_col: Vec<LaurentPoly> = (0..r).map(|i| m.get(i, r).clone()).collect();
        // Toeplitz column: 1, -a, -S R, -S A R, -S A^2 R, ...
        let mut t = Vec::with_capacity(r + 2);
        t.push(LaurentPoly::one());
        t.push(-a);
        let mut v = r_col;
        for _ in 0..r {
            let s_v: LaurentPoly = s_row.iter().zip(&v).map(|(s, x)| *s * x).sum();
            t.push(-s_v);
            v = (0..r)
                .map(|i| (0..r).map(|j| m.get(i, j) * &v[j]).sum())
                .collect();
        }
        let mut next = vec![LaurentPoly::zero(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                if i - j < t.len() {
                    *slot += &t[i - j] * &c[j];
                }
            }
        }
        c = next;
    }
    let det = c.pop().unwrap();
    if n % 2 == 0 {
        det
    } else {
        -det
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Identity {
    Skew,
    Sym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Confirmed,
    Refuted,
}

/// One line of the identity report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub tuple: Vec<i64>,
    pub identity: Identity,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub status: Status,
}

/// Checks both identities for `c`: `det(skew) = R^2` and
/// `(-1)^k det(sym) = R^2 - 4 q^(sum(c_i - 1))`.
pub fn check_identities(c: &[i64]) -> Result<[IdentityRecord; 2]> {
    let k = check_k(c)?;
    let r = rotundus_minus(c)?;
    let r2 = &r * &r;
    let skew = determinant(&build_skew(c)?)?;
    let mut sym = determinant(&build_sym(c)?)?;
    if k % 2 == 1 {
        sym = -sym;
    }
    let exp: i64 = c.iter().map(|x| x - 1).sum();
    let sym_rhs = &r2 - &LaurentPoly::monomial(4, exp);
    let record = |identity, lhs: LaurentPoly, rhs: LaurentPoly| IdentityRecord {
        tuple: c.to_vec(),
        identity,
        status: if lhs == rhs {
            Status::Confirmed
        } else {
            Status::Refuted
        },
        lhs,
        rhs,
    };
    Ok([
        record(Identity::Skew, skew, r2.clone()),
        record(Identity::Sym, sym, sym_rhs),
    ])
}

/// Every tuple with `2 <= k <= max_k` and entries in `2..=max_c`.
pub fn tuples(max_k: usize, max_c: i64) -> impl Iterator<Item = Vec<i64>> {
    (2..=max_k).flat_map(move |k| {
        let base = (max_c - 1).max(0) as u64;
        (0..base.pow(k as u32)).map(move |mut idx| {
            (0..k)
                .map(|_| {
                    let d = idx % base;
                    idx /= base;
                    2 + d as i64
                })
                .collect()
        })
    })
}

/// Runs [`check_identities`] over [`tuples`], writing one JSON object per
/// line. Returns `(confirmed, refuted)` counts over all records.
pub fn write_report<W: Write + ?Sized>(max_k: usize, max_c: i64, out: &mut W) -> Result<(usize, usize)> {
    let (mut ok, mut bad) = (0, 0);
    for c in tuples(max_k, max_c) {
        for rec in check_identities(&c)? {
            match rec.status {
                Status::Confirmed => ok += 1,
                Status::Refuted => bad += 1,
            }
            let line = serde_json::to_string(&rec).expect("record serializes");
            writeln!(out, "{line}").map_err(|e| Error::Parse(e.to_string()))?;
        }
    }
    Ok((ok, bad))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Cofactor expansion along the first row.
    fn naive_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
        let n = m.len();
        if n == 1 {
            return m[0][0].clone();
        }
        let mut acc = LaurentPoly::zero();
        for j in 0..n {
            let minor: Vec<Vec<LaurentPoly>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * &naive_det(&minor);
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(&SquareMatrix::identity(3)).unwrap(), LaurentPoly::one());
        let mut d = SquareMatrix::zeros(2);
        d.set(0, 0, q_integer(2));
        d.set(1, 1, q_integer(3));
        assert_eq!(determinant(&d).unwrap(), p("1 + 2*q + 2*q^2 + q^3"));
        assert_eq!(determinant_berkowitz(&d), p("1 + 2*q + 2*q^2 + q^3"));
        assert!(matches!(
            determinant_with_cap(&SquareMatrix::identity(15), 14),
            Err(Error::DimensionCap { dim: 15, cap: 14 })
        ));
        assert_eq!(
            SquareMatrix::from_rows(vec![vec![LaurentPoly::one()], vec![]]),
            Err(Error::NotSquare)
        );
    }

    #[test]
    fn matrix_shapes() {
        let s = build_skew(&[2, 2, 3]).unwrap();
        assert_eq!(s.dim(), 6);
        assert!(s.is_skew_symmetric());
        assert_eq!(*s.get(0, 3), q_integer(2));
        assert_eq!(*s.get(1, 3), p("q"));
        assert_eq!(*s.get(3, 5), p("q^2"));
        assert_eq!(*s.get(5, 3), p("-q^2"));
        assert_eq!(*s.get(2, 0), p("-1"));
        let y = build_sym(&[2, 2, 3]).unwrap();
        assert!(y.is_symmetric());
        assert!(!y.is_skew_symmetric());
        assert!(build_skew(&[2]).is_err());
        assert!(build_sym(&[]).is_err());
    }

    #[test]
    fn skew_identity_examples() {
        let r = p("1 + q + q^2 + q^3 + q^4");
        assert_eq!(determinant(&build_skew(&[2, 2, 3]).unwrap()).unwrap(), &r * &r);
        let r23 = rotundus_minus(&[2, 3]).unwrap();
        assert_eq!(determinant(&build_skew(&[2, 3]).unwrap()).unwrap(), &r23 * &r23);
    }

    #[test]
    fn symmetric_identity_examples() {
        for c in [vec![2, 2, 3], vec![2, 2]] {
            let [_, sym] = check_identities(&c).unwrap();
            assert_eq!(sym.status, Status::Confirmed, "{c:?}");
        }
    }

    #[test]
    fn classical_skew_determinant() {
        // At q = 1 the determinant is the square of the classical trace.
        let c = [3, 2, 4, 2];
        let ints = build_skew(&c).unwrap().eval_at_one();
        let rows: Vec<Vec<LaurentPoly>> = ints
            .iter()
            .map(|r| r.iter().map(|&x| LaurentPoly::from(x)).collect())
            .collect();
        let det = naive_det(&rows);
        let tr = rotundus_minus(&c).unwrap().eval_at_one();
        assert_eq!(det.eval_at_one(), &tr * &tr);
    }

    #[test]
    fn report_lines_parse() {
        let mut buf = Vec::new();
        let (ok, bad) = write_report(2, 3, &mut buf).unwrap();
        assert_eq!((ok, bad), (8, 0));
        let text = String::from_utf8(buf).unwrap();
        let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first["identity"], "skew");
        assert_eq!(first["status"], "CONFIRMED");
        assert_eq!(text.lines().count(), 8);
    }

    fn small_poly() -> impl Strategy<Value = LaurentPoly> {
        (-2i64..=2, proptest::collection::vec(-3i64..=3, 0..4))
            .prop_map(|(min, cs)| LaurentPoly::from_coeffs(min, cs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn algorithms_agree_with_cofactor_expansion(
            d in 1usize..=5,
            seed in proptest::collection::vec(small_poly(), 36),
            density in 0u32..4,
        ) {
            let rows: Vec<Vec<LaurentPoly>> = (0..d)
                .map(|i| (0..d).map(|j| {
                    if (i * 7 + j * 3) as u32 % 4 < density { LaurentPoly::zero() } else { seed[i * 6 + j].clone() }
                }).collect())
                .collect();
            let m = SquareMatrix::from_rows(rows.clone()).unwrap();
            let oracle = naive_det(&rows);
            prop_assert_eq!(determinant_by_expansion(&m), oracle.clone());
            prop_assert_eq!(determinant_berkowitz(&m), oracle);
        }
    }
}
