//! Exhaustive sweeps over small parameters, cross-checking every module
//! against the others.

use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::annulus::{minus_partner_of_plus, AnnulusTriangulation};
use crate::farey::{negative_expansion, q_rational_farey, regular_expansion, NegativeCF, Rational, RegularCF};
use crate::laurent::LaurentPoly;
use crate::pfaffian::{check_identities, Identity, Status};
use crate::polygon::FanTriangulation;
use crate::qcore::{
    continuant_e, euler_minding_e, euler_minding_r, mat_minus, mat_plus, qcf_negative,
    qcf_regular, rotundus_minus, rotundus_plus, Mat2,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Largest numerator in the rational sweeps.
    pub max_num: u64,
    /// Largest length of `c` for annuli and determinants.
    pub max_k: usize,
    /// Largest entry of `c`.
    pub max_c: i64,
    /// Largest `a1 + ... + a2m` for `T+` annuli.
    pub max_a_sum: i64,
    /// Largest length of `c` for the Euler–Minding and trace checks.
    pub max_em_k: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_num: 40,
            max_k: 5,
            max_c: 5,
            max_a_sum: 8,
            max_em_k: 7,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failed: usize,
    /// The first few failing cases.
    pub failures: Vec<String>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.record(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.cases += 1;
        self.record(what);
    }

    fn record(&mut self, what: String) {
        self.failed += 1;
        if self.failures.len() < 10 {
            self.failures.push(what);
        }
    }
}

/// Reduced fractions `r/s` with `1 <= s < r <= max_num`.
pub fn rationals_above_one(max_num: u64) -> impl Iterator<Item = Rational> {
    (2..=max_num).flat_map(|r| {
        (1..r)
            .filter(move |s| r.gcd(s) == 1)
            .map(move |s| Rational::new(r, s).unwrap())
    })
}

/// Every `c` with `min_k <= len <= max_k` and entries in `lo..=hi`.
pub fn int_tuples(min_k: usize, max_k: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(cur: &mut Vec<i64>, min_k: usize, max_k: usize, lo: i64, hi: i64, out: &mut Vec<Vec<i64>>) {
        if cur.len() >= min_k {
            out.push(cur.clone());
        }
        if cur.len() == max_k {
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            go(cur, min_k, max_k, lo, hi, out);
            cur.pop();
        }
    }
    go(&mut cur, min_k.max(1), max_k, lo, hi, &mut out);
    out
}

/// Every even-length `a` with positive entries summing to at most `max_sum`.
pub fn regular_sequences(max_sum: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    fn go(cur: &mut Vec<i64>, left: i64, out: &mut Vec<Vec<i64>>) {
        if !cur.is_empty() && cur.len() % 2 == 0 {
            out.push(cur.clone());
        }
        for x in 1..=left {
            cur.push(x);
            go(cur, left - x, out);
            cur.pop();
        }
    }
    go(&mut Vec::new(), max_sum, &mut out);
    out
}

fn has_unit_ends(p: &LaurentPoly) -> bool {
    match (p.min_degree(), p.max_degree()) {
        (Some(lo), Some(hi)) => p.coeff(lo).is_one() && p.coeff(hi).is_one(),
        _ => false,
    }
}

/// Farey recursion against both q-continued fractions.
pub fn check_farey(max_num: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("q-rationals: Farey = regular = negative");
    for x in rationals_above_one(max_num) {
        let farey = q_rational_farey(x);
        let reg = qcf_regular(regular_expansion(x).unwrap().as_slice()).unwrap();
        let neg = qcf_negative(negative_expansion(x).unwrap().as_slice()).unwrap();
        out.check(farey == reg && reg == neg, || format!("{x}"));
    }
    out
}

/// Positivity, unimodality, unit extreme coefficients and content 1 of the
/// numerator and denominator of every `[r/s]_q` with `r, s <= max_num`.
pub fn check_rational_shape(max_num: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("q-rationals: positive, unimodal, unit ends");
    for r in 1..=max_num {
        for s in 1..=max_num {
            if r.gcd(&s) != 1 {
                continue;
            }
            let x = Rational::new(r, s).unwrap();
            let (num, den) = q_rational_farey(x);
            for p in [&num, &den] {
                let ok = p.has_positive_coefficients()
                    && p.is_unimodal()
                    && has_unit_ends(p)
                    && p.content().is_one()
                    && (r <= s || p.coeff(0).is_one());
                out.check(ok, || format!("{x}: {p}"));
            }
            out.check(num.eval_at_one() == r.into() && den.eval_at_one() == s.into(), || {
                format!("{x}: values at q=1")
            });
        }
    }
    out
}

/// Paths in fans: weight = coarea per path, continuant identities, counts.
pub fn check_paths(max_num: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("fan paths: weights, continuants, convergents");
    for x in rationals_above_one(max_num) {
        let a = regular_expansion(x).unwrap();
        let t = FanTriangulation::from_regular(&a);
        let c = t.c.as_slice().to_vec();
        let k = t.k;
        let m = mat_plus(a.as_slice()).unwrap();
        let mut expect: Vec<(usize, usize, LaurentPoly)> = vec![
            (k + 1, 1, continuant_e(&c)),
            (k + 1, 0, continuant_e(&c[1..])),
            (k + 2, 1, m.a12.clone()),
            (k + 2, 0, m.a22.clone()),
        ];
        if k >= 2 {
            expect.push((k, 1, continuant_e(&c[..k - 1])));
            expect.push((k, 0, continuant_e(&c[1..k - 1])));
        }
        for (from, to, poly) in expect {
            let paths = match t.enumerate_paths(from, to) {
                Ok(p) => p,
                Err(e) => {
                    out.fail(format!("{x} {from}->{to}: {e}"));
                    continue;
                }
            };
            let coarea: LaurentPoly = paths.iter().map(|p| LaurentPoly::monomial(1, p.coarea as i64)).sum();
            out.check(coarea == poly, || format!("{x} {from}->{to}: {coarea} != {poly}"));
            let sums: Vec<u32> = paths.iter().map(|p| p.area + p.coarea).collect();
            out.check(sums.windows(2).all(|w| w[0] == w[1]), || {
                format!("{x} {from}->{to}: area + coarea varies")
            });
            if from == k + 1 {
                out.check(paths.iter().all(|p| p.weight == p.coarea as i64), || {
                    format!("{x} {from}->{to}: weight differs from coarea")
                });
                let want = if to == 1 { x.numer() } else { x.denom() };
                out.check(paths.len() as u64 == want, || {
                    format!("{x} {from}->{to}: {} paths", paths.len())
                });
            }
        }
    }
    out
}

/// Matrix identities: `M+(a) = M(c) R_q`, trace reversal and rotation.
pub fn check_matrices(max_num: u64, max_k: usize, max_c: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("matrices: M+ = M R_q, trace symmetries");
    for x in rationals_above_one(max_num) {
        let a = regular_expansion(x).unwrap();
        let c = negative_expansion(x).unwrap();
        let lhs = mat_plus(a.as_slice()).unwrap();
        let rhs = &mat_minus(c.as_slice()).unwrap() * &Mat2::r_q();
        out.check(lhs == rhs, || format!("{x}"));
        let mut rev = a.as_slice().to_vec();
        rev.reverse();
        out.check(
            rotundus_plus(&rev).unwrap() == rotundus_plus(a.as_slice()).unwrap(),
            || format!("{x}: reversed a"),
        );
    }
    for c in int_tuples(1, max_k, 2, max_c) {
        let r = rotundus_minus(&c).unwrap();
        let mut rev = c.clone();
        rev.reverse();
        out.check(rotundus_minus(&rev).unwrap() == r, || format!("{c:?}: reversal"));
        let mut rot = c.clone();
        rot.rotate_left(1);
        out.check(rotundus_minus(&rot).unwrap() == r, || format!("{c:?}: rotation"));
        // All-2 sequences give 1 + q^k: coefficients in N, not strictly positive.
        out.check(r.is_palindromic() && r.has_nonnegative_coefficients(), || {
            format!("{c:?}: R = {r}")
        });
    }
    out
}

/// Euler–Minding expansions against the recurrence and the trace.
pub fn check_euler_minding(max_k: usize, max_c: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("Euler-Minding: E and R");
    for c in int_tuples(1, max_k, 2, max_c) {
        out.check(euler_minding_e(&c).unwrap() == continuant_e(&c), || format!("E {c:?}"));
        if c.len() >= 3 {
            out.check(
                euler_minding_r(&c).unwrap() == rotundus_minus(&c).unwrap(),
                || format!("R {c:?}"),
            );
        }
    }
    out
}

fn check_loops(out: &mut CheckOutcome, t: &AnnulusTriangulation, r: &LaurentPoly, tag: &str) {
    let loops = match t.enumerate_loops() {
        Ok(l) => l,
        Err(e) => {
            out.fail(format!("{tag}: {e}"));
            return;
        }
    };
    let area: LaurentPoly = loops.iter().map(|l| LaurentPoly::monomial(1, l.area as i64)).sum();
    let coarea: LaurentPoly = loops.iter().map(|l| LaurentPoly::monomial(1, l.coarea as i64)).sum();
    out.check(area == *r, || format!("{tag}: area {area} != {r}"));
    out.check(coarea == *r, || format!("{tag}: coarea {coarea} != {r}"));
    let total = t.triangles.len() as u32;
    out.check(loops.iter().all(|l| l.area + l.coarea == total), || {
        format!("{tag}: area + coarea not constant")
    });
}

/// `T+(a)` for all `a` with `sum(a) <= max_sum`.
pub fn check_plus_annuli(max_sum: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("T+ annuli: loops, paths, closures, T-(c1+1,...)");
    for a in regular_sequences(max_sum) {
        let tag = format!("T+{a:?}");
        let r = rotundus_plus(&a).unwrap();
        out.check(r.is_palindromic() && r.has_positive_coefficients(), || {
            format!("{tag}: R+ = {r}")
        });
        let t = AnnulusTriangulation::plus(&RegularCF::new(a.clone()).unwrap()).unwrap();
        check_loops(&mut out, &t, &r, &tag);
        match t.loop_poly_via_paths() {
            Ok(p) => out.check(p == r, || format!("{tag}: via paths {p}")),
            Err(e) => out.fail(format!("{tag}: {e}")),
        }
        match t.closure_generating_poly() {
            Ok(p) => out.check(p == r, || format!("{tag}: closures {p}")),
            Err(e) => out.fail(format!("{tag}: {e}")),
        }
        match minus_partner_of_plus(&t.fan.a) {
            Ok(m) => out.check(t.is_isomorphic(&m), || format!("{tag}: not isomorphic to its T- partner")),
            Err(e) => out.fail(format!("{tag}: {e}")),
        }
    }
    out
}

/// `T-(c)` for all `c` with `len <= max_k`, entries `<= max_c`, skipping the
/// sequences that leave no outer marked point.
pub fn check_minus_annuli(max_k: usize, max_c: i64) -> CheckOutcome {
    let mut out = CheckOutcome::new("T- annuli: loops, matchings, quiddity");
    for c in int_tuples(1, max_k, 2, max_c) {
        let tag = format!("T-{c:?}");
        let t = match AnnulusTriangulation::minus(&NegativeCF::new(c.clone()).unwrap()) {
            Ok(t) => t,
            Err(_) => continue,
        };
        let r = rotundus_minus(&c).unwrap();
        check_loops(&mut out, &t, &r, &tag);
        let classical = r.eval_at_one();
        match t.count_matchings() {
            Ok(n) => out.check(classical == n.into(), || format!("{tag}: {n} matchings, R = {classical}")),
            Err(e) => out.fail(format!("{tag}: {e}")),
        }
        let quiddity: Vec<i64> = t.inner_quiddity().iter().map(|&x| x as i64).collect();
        out.check(quiddity == c, || format!("{tag}: inner quiddity {quiddity:?}"));
    }
    out
}

/// Skew and symmetric determinant identities.
pub fn check_determinants(max_k: usize, max_c: i64) -> (CheckOutcome, CheckOutcome) {
    let mut skew = CheckOutcome::new("determinants: skew identity");
    let mut sym = CheckOutcome::new("determinants: symmetric identity (conjectural)");
    for c in int_tuples(2, max_k, 2, max_c) {
        match check_identities(&c) {
            Ok(records) => {
                for rec in records {
                    let target = match rec.identity {
                        Identity::Skew => &mut skew,
                        Identity::Sym => &mut sym,
                    };
                    target.check(rec.status == Status::Confirmed, || {
                        format!("{c:?}: {} != {}", rec.lhs, rec.rhs)
                    });
                }
            }
            Err(e) => skew.fail(format!("{c:?}: {e}")),
        }
    }
    (skew, sym)
}

/// Every sweep, in a fixed order.
pub fn run_all(cfg: &VerifyConfig) -> Vec<CheckOutcome> {
    let paths_num = cfg.max_num.min(25);
    let (skew, sym) = check_determinants(cfg.max_k, cfg.max_c);
    vec![
        check_farey(cfg.max_num),
        check_rational_shape(cfg.max_num),
        check_paths(paths_num),
        check_matrices(cfg.max_num.min(30), cfg.max_k, cfg.max_c.max(6)),
        check_euler_minding(cfg.max_em_k, cfg.max_c),
        check_plus_annuli(cfg.max_a_sum),
        check_minus_annuli(cfg.max_k, cfg.max_c),
        skew,
        sym,
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators() {
        assert_eq!(regular_sequences(3), vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(int_tuples(1, 2, 2, 3).len(), 2 + 4);
        assert_eq!(rationals_above_one(4).count(), 1 + 2 + 2);
    }

    #[test]
    fn small_sweeps_pass() {
        let cfg = VerifyConfig {
            max_num: 8,
            max_k: 3,
            max_c: 3,
            max_a_sum: 4,
            max_em_k: 4,
        };
        for outcome in run_all(&cfg) {
            assert!(outcome.passed(), "{}: {:?}", outcome.name, outcome.failures);
            assert!(outcome.cases > 0, "{}", outcome.name);
        }
    }
}
