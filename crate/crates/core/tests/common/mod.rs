//! Test-side oracles. Nothing here calls into the library's algebra: plain
//! `i128` vectors stand in for polynomials in q with nonnegative exponents.

#![allow(dead_code)]

use qrotundus::LaurentPoly;

pub type IntPoly = Vec<i128>;

pub fn trim(mut p: IntPoly) -> IntPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

pub fn add(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

pub fn mul(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

pub type IntMat = [[IntPoly; 2]; 2];

pub fn mat_mul(x: &IntMat, y: &IntMat) -> IntMat {
    let e = |i: usize, j: usize| add(&mul(&x[i][0], &y[0][j]), &mul(&x[i][1], &y[1][j]));
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `[r/s]_q` as `(R, S)` from the words in the q-deformed generators
/// `[[q, 1], [0, 1]]` and `[[q, 0], [q, 1]]`, normalised so that `S` has a
/// nonzero constant term. Needs a regular expansion of even length.
pub fn q_rational_by_generators(a: &[i64]) -> (IntPoly, IntPoly) {
    let right: IntMat = [[vec![0, 1], vec![1]], [vec![], vec![1]]];
    let left: IntMat = [[vec![0, 1], vec![]], [vec![0, 1], vec![1]]];
    let mut m: IntMat = [[vec![1], vec![]], [vec![], vec![1]]];
    for (i, &ai) in a.iter().enumerate() {
        for _ in 0..ai {
            m = mat_mul(&m, if i % 2 == 0 { &right } else { &left });
        }
    }
    let [[r, _], [s, _]] = m;
    let shift = s.iter().position(|&x| x != 0).unwrap();
    (r[shift..].to_vec(), s[shift..].to_vec())
}

/// Same polynomial as a library value, read off term by term.
pub fn to_int_poly(p: &LaurentPoly) -> IntPoly {
    let min = p.min_degree().unwrap_or(0);
    assert!(min >= 0, "oracle handles polynomials only");
    let max = p.max_degree().unwrap_or(-1);
    let mut out = vec![0i128; (max + 1).max(0) as usize];
    for e in min..=max {
        out[e as usize] = i128::try_from(p.coeff(e)).unwrap();
    }
    out
}

/// Classical continuant `K(a1, ..., an)`.
pub fn int_continuant(a: &[i64]) -> i128 {
    let (mut prev, mut cur) = (0i128, 1i128);
    for &x in a.iter().rev() {
        let next = x as i128 * cur + prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Trace of the product of 2x2 integer matrices.
pub fn int_trace(ms: &[[[i128; 2]; 2]]) -> i128 {
    let mut acc = [[1i128, 0], [0, 1]];
    for m in ms {
        let mut n = [[0i128; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                n[i][j] = acc[i][0] * m[0][j] + acc[i][1] * m[1][j];
            }
        }
        acc = n;
    }
    acc[0][0] + acc[1][1]
}

/// `R+(a)` at `q = 1`: trace of `prod [[ai, 1], [1, 0]]`.
pub fn classical_rotundus_plus(a: &[i64]) -> i128 {
    let ms: Vec<_> = a.iter().map(|&x| [[x as i128, 1], [1, 0]]).collect();
    int_trace(&ms)
}

/// `R(c)` evaluated at integer `q`: trace of `prod [[[ci]_q, -q^(ci-1)], [1, 0]]`.
pub fn rotundus_minus_at(c: &[i64], q: i128) -> i128 {
    let ms: Vec<_> = c
        .iter()
        .map(|&x| {
            let qint: i128 = (0..x).map(|e| q.pow(e as u32)).sum();
            [[qint, -q.pow((x - 1) as u32)], [1, 0]]
        })
        .collect();
    int_trace(&ms)
}

/// Fraction-free Gaussian elimination on an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

const P: i128 = 1_000_000_007;

fn modp(x: i128) -> i128 {
    x.rem_euclid(P)
}

fn inv(x: i128) -> i128 {
    let (mut b, mut e, mut acc) = (modp(x), P - 2, 1i128);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    acc
}

/// Degree of `gcd(a, b)` over `GF(p)`. For polynomials with unit leading
/// coefficients a zero here means coprime over the rationals.
pub fn gcd_degree_mod_p(a: &IntPoly, b: &IntPoly) -> usize {
    let norm = |p: &IntPoly| trim(p.iter().map(|&x| modp(x)).collect());
    let (mut x, mut y) = (norm(a), norm(b));
    while !y.is_empty() {
        // x mod y
        let lead = inv(*y.last().unwrap());
        while x.len() >= y.len() {
            let f = x.last().unwrap() * lead % P;
            let off = x.len() - y.len();
            for (i, &c) in y.iter().enumerate() {
                x[off + i] = modp(x[off + i] - f * c);
            }
            x = trim(x);
            if x.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    x.len().saturating_sub(1)
}

/// Rises weakly, then falls weakly, around some peak.
pub fn brute_unimodal(c: &[i128]) -> bool {
    c.is_empty()
        || (0..c.len()).any(|p| {
            c[..=p].windows(2).all(|w| w[0] <= w[1]) && c[p..].windows(2).all(|w| w[0] >= w[1])
        })
}

pub fn brute_palindromic(c: &[i128]) -> bool {
    c.iter().eq(c.iter().rev())
}

/// Coefficients over the degree span, zeros included.
pub fn span(p: &LaurentPoly) -> Vec<i128> {
    match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => (lo..=hi).map(|e| i128::try_from(p.coeff(e)).unwrap()).collect(),
        _ => Vec::new(),
    }
}

/// Parses compact polynomial text, e.g. `1+q+2q^2`, into coefficients.
pub fn compact_poly(s: &str) -> IntPoly {
    let mut out: IntPoly = Vec::new();
    let s = s.replace(' ', "").replace('-', "+-");
    for term in s.split('+').filter(|t| !t.is_empty()) {
        let (coef, exp) = match term.find('q') {
            None => (term.parse::<i128>().unwrap(), 0usize),
            Some(i) => {
                let c = match &term[..i] {
                    "" => 1,
                    "-" => -1,
                    x => x.trim_end_matches('*').parse().unwrap(),
                };
                let e = match term[i + 1..].strip_prefix('^') {
                    Some(e) => e.parse().unwrap(),
                    None => 1,
                };
                (c, e)
            }
        };
        if out.len() <= exp {
            out.resize(exp + 1, 0);
        }
        out[exp] += coef;
    }
    trim(out)
}

/// Every tuple of length `min_k..=max_k` with entries in `lo..=hi`.
pub fn tuples(min_k: usize, max_k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(k: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            go(k, lo, hi, cur, out);
            cur.pop();
        }
    }
    for k in min_k..=max_k {
        go(k, lo, hi, &mut cur, &mut out);
    }
    out
}

/// Even-length compositions with positive parts and sum at most `max_sum`.
pub fn compositions(max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn go(left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() && cur.len() % 2 == 0 {
            out.push(cur.clone());
        }
        for x in 1..=left {
            cur.push(x);
            go(left - x, cur, out);
            cur.pop();
        }
    }
    go(max_sum, &mut Vec::new(), &mut out);
    out
}

/// Euclid on `r/s > 1`, then padded to even length.
pub fn even_cf(mut r: i64, mut s: i64) -> Vec<i64> {
    let mut a = Vec::new();
    while s != 0 {
        a.push(r / s);
        (r, s) = (s, r % s);
    }
    if a.len() % 2 == 1 {
        let last = a.pop().unwrap();
        if last > 1 {
            a.push(last - 1);
            a.push(1);
        } else {
            *a.last_mut().unwrap() += 1;
        }
    }
    a
}

pub fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
