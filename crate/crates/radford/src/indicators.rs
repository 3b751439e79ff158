//! Higher Frobenius-Schur indicators by two independent routes, period
//! detection, and minimal polynomials of linearly recursive sequences.
//!
//! The trace route computes ν_n = Tr(S ∘ P_{n-1}); the integral route
//! computes ν_n = λ(Λ^[n]) from a normalized pair of left integrals. The
//! two must agree entrywise — that equality is this crate's central
//! cross-validation, and any disagreement is reported as a bug, never
//! papered over.

use crate::error::Error;
use crate::field::{Fp, PrimeModulus};
use crate::hopf::HopfAlgebra;
use crate::integrals::{normalized_pair, Side};
use crate::linalg::MatrixFp;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Method {
    Trace,
    Integral,
    Both,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Trace => write!(f, "trace"),
            Method::Integral => write!(f, "integral"),
            Method::Both => write!(f, "both"),
        }
    }
}

/// The sequence ν_1, ..., ν_N of one algebra. `method = Both` certifies
/// that both computations agreed entrywise.
#[derive(Clone, Debug)]
pub struct IndicatorSequence {
    pub values: Vec<Fp>,
    pub method: Method,
    pub algebra_id: String,
}

impl IndicatorSequence {
    /// Integer lifts in [0, p), for display and machine output.
    pub fn lifted(&self) -> Vec<u64> {
        self.values.iter().map(|v| v.value()).collect()
    }
}

fn trace_of_composition(s: &MatrixFp, p_op: &MatrixFp) -> Fp {
    // Tr(S · P) without forming the product
    let dim = s.rows();
    let modulus = s.modulus();
    let mut acc = modulus.zero();
    for k in 0..dim {
        for r in 0..dim {
            acc += s.get(k, r) * p_op.get(r, k);
        }
    }
    acc
}

/// Indicators by the trace of the antipode composed with Sweedler powers:
/// ν_n = Tr(S ∘ P_{n-1}).
pub fn indicators_trace(h: &HopfAlgebra, count: usize) -> IndicatorSequence {
    assert!(h.is_verified(), "indicators require a verified algebra");
    assert!(count >= 1, "need at least one indicator");
    let s = h.antipode_matrix();
    let mut powers = h.sweedler_powers();
    let mut values = Vec::with_capacity(count);
    for n in 1..=count {
        values.push(trace_of_composition(s, powers.current()));
        if n < count {
            powers.advance();
        }
    }
    assert_eq!(values[0], h.modulus().one(), "ν_1 must be 1");
    IndicatorSequence {
        values,
        method: Method::Trace,
        algebra_id: h.canonical_id(),
    }
}

/// Indicators by evaluating a normalized integral pair on Sweedler powers:
/// ν_n = λ(Λ^[n]).
pub fn indicators_integral(
    h: &HopfAlgebra,
    count: usize,
    side: Side,
) -> Result<IndicatorSequence, Error> {
    assert!(h.is_verified(), "indicators require a verified algebra");
    assert!(count >= 1, "need at least one indicator");
    let pair = normalized_pair(h, side)?;
    let mut powers = h.sweedler_powers();
    let mut values = Vec::with_capacity(count);
    for _n in 1..=count {
        powers.advance(); // P_n
        let lambda_n = crate::hopf::AlgebraElement::new(powers.current().matvec(pair.integral.coeffs()));
        values.push(h.apply_dual(&pair.dual_integral, &lambda_n));
    }
    assert_eq!(values[0], h.modulus().one(), "ν_1 = λ(Λ) must be 1");
    Ok(IndicatorSequence {
        values,
        method: Method::Integral,
        algebra_id: h.canonical_id(),
    })
}

/// Run the requested method; for `Both`, run both and require entrywise
/// agreement.
pub fn indicators(
    h: &HopfAlgebra,
    count: usize,
    method: Method,
) -> Result<IndicatorSequence, Error> {
    match method {
        Method::Trace => Ok(indicators_trace(h, count)),
        Method::Integral => indicators_integral(h, count, Side::Left),
        Method::Both => {
            let trace = indicators_trace(h, count);
            let integral = indicators_integral(h, count, Side::Left)?;
            for (i, (t, g)) in trace.values.iter().zip(&integral.values).enumerate() {
                if t != g {
                    return Err(Error::MethodDisagreement {
                        n: i + 1,
                        trace_value: t.value(),
                        integral_value: g.value(),
                    });
                }
            }
            Ok(IndicatorSequence {
                values: trace.values,
                method: Method::Both,
                algebra_id: trace.algebra_id,
            })
        }
    }
}

/// A detected period, reported only once at least three full periods
/// confirm it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PeriodReport {
    pub period: usize,
    pub preperiod: usize,
    pub terms_examined: usize,
}

/// Smallest T ≥ 1 with values[n] = values[n+T] for all examined n past the
/// preperiod. `None` means inconclusive: no candidate period is confirmed
/// by at least 3T terms. Character-p sequences can alias on short windows,
/// so the 3T rule is a deliberate confidence policy, not a theorem.
pub fn detect_period(values: &[Fp]) -> Option<PeriodReport> {
    let n = values.len();
    if n < 2 {
        return None;
    }
    for t in 1..=n / 3 {
        // last index where the shift-by-t comparison fails
        let mut preperiod = 0;
        for i in 0..n.saturating_sub(t) {
            if values[i] != values[i + t] {
                preperiod = i + 1;
            }
        }
        if n - preperiod >= 3 * t {
            return Some(PeriodReport {
                period: t,
                preperiod,
                terms_examined: n,
            });
        }
    }
    None
}

/// A monic annihilating polynomial f_0 + f_1 x + ... + x^m of a sequence:
/// the recurrence f_0 a_n + f_1 a_{n+1} + ... + f_m a_{n+m} = 0 holds on
/// every window of the data it was checked against.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MinimalPolynomial {
    coeffs: Vec<Fp>,
    /// Length of the data window the recurrence has been verified on.
    pub verified_window: usize,
}

impl MinimalPolynomial {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients low to high; the last is always 1.
    pub fn coeffs(&self) -> &[Fp] {
        &self.coeffs
    }

    pub fn lifted(&self) -> Vec<u64> {
        self.coeffs.iter().map(|c| c.value()).collect()
    }

    /// Does the recurrence annihilate every full window of `seq`?
    pub fn satisfies(&self, seq: &[Fp]) -> bool {
        let m = self.degree();
        if seq.is_empty() {
            return true;
        }
        let modulus = seq[0].modulus();
        for start in 0..seq.len().saturating_sub(m) {
            let mut acc = modulus.zero();
            for (i, &f) in self.coeffs.iter().enumerate() {
                acc += f * seq[start + i];
            }
            if !acc.is_zero() {
                return false;
            }
        }
        true
    }

    /// Human form with lifted coefficients, e.g. `x^5 + 4` over F_5.
    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        for d in (0..=self.degree()).rev() {
            let c = self.coeffs[d].value();
            if c == 0 {
                continue;
            }
            let part = match d {
                0 => format!("{c}"),
                1 if c == 1 => "x".to_string(),
                1 => format!("{c} x"),
                _ if c == 1 => format!("x^{d}"),
                _ => format!("{c} x^{d}"),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string() // unreachable for monic polynomials
        } else {
            parts.join(" + ")
        }
    }
}

/// Minimal monic polynomial of the shortest linear recurrence generating
/// `seq`, by Berlekamp-Massey over F_p. Exact once the sequence length is
/// at least twice the true degree.
pub fn berlekamp_massey(seq: &[Fp], modulus: PrimeModulus) -> MinimalPolynomial {
    assert!(!seq.is_empty(), "empty sequence has no minimal polynomial");
    let p = modulus.get();
    let s: Vec<u64> = seq.iter().map(|v| v.value()).collect();

    // connection polynomial c(x) = 1 + c_1 x + ... + c_L x^L with
    // s[i] + Σ_j c_j s[i-j] = 0 for i ≥ L
    let mut c = vec![1u64];
    let mut b = vec![1u64];
    let mut l = 0usize;
    let mut m = 1usize;
    let mut last_discrepancy = 1u64;

    for i in 0..s.len() {
        let mut d = s[i];
        for j in 1..=l {
            if j < c.len() {
                d = (d + c[j] * s[i - j]) % p;
            }
        }
        if d == 0 {
            m += 1;
            continue;
        }
        let coef = modulus.mul_raw(d, modulus.inv_raw(last_discrepancy));
        let neg = modulus.neg_raw(coef);
        if 2 * l <= i {
            let snapshot = c.clone();
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (j, &bj) in b.iter().enumerate() {
                c[j + m] = (c[j + m] + neg * bj) % p;
            }
            l = i + 1 - l;
            b = snapshot;
            last_discrepancy = d;
            m = 1;
        } else {
            if c.len() < b.len() + m {
                c.resize(b.len() + m, 0);
            }
            for (j, &bj) in b.iter().enumerate() {
                c[j + m] = (c[j + m] + neg * bj) % p;
            }
            m += 1;
        }
    }

    // minimal polynomial = reversal of the connection polynomial padded
    // to degree L: f_{L-j} = c_j, so f is monic of degree L
    c.resize(l + 1, 0);
    let coeffs: Vec<Fp> = (0..=l).map(|i| modulus.element(c[l - i])).collect();
    MinimalPolynomial {
        coeffs,
        verified_window: seq.len(),
    }
}

/// Minimal polynomial of the indicator sequence, with escalation: fit on
/// 2·dim terms and verify the recurrence on dim freshly computed terms
/// beyond the fitting window; on failure escalate the fit to 2·dim² terms
/// (the guaranteed-exact window, since the degree is at most dim²). A
/// failure after that would contradict the degree bound and is reported
/// as an invariant violation.
pub fn minimal_polynomial_of_indicators(h: &HopfAlgebra) -> Result<MinimalPolynomial, Error> {
    let dim = h.dim();
    let modulus = h.modulus();
    for window in [2 * dim, 2 * dim * dim] {
        let total = window + dim;
        let seq = indicators_trace(h, total).values;
        let mut fit = berlekamp_massey(&seq[..window], modulus);
        if fit.satisfies(&seq) {
            fit.verified_window = total;
            return Ok(fit);
        }
    }
    Err(Error::InvariantViolation(format!(
        "minimal-polynomial escalation exhausted beyond the guaranteed window 2·dim² = {}",
        2 * dim * dim
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn seq(values: &[u64], p: u64) -> Vec<Fp> {
        values.iter().map(|&v| fp(p).element(v)).collect()
    }

    fn c_n(n: usize, p: u64) -> HopfAlgebra {
        zoo::build_group_algebra(fp(p), &zoo::cyclic_cayley(n), zoo::cyclic_labels(n)).unwrap()
    }

    /// Brute-force oracle for group algebras: ν_n = |{g : g^n = e}| mod p.
    fn group_count(cayley: &[Vec<usize>], identity: usize, n: usize, p: u64) -> u64 {
        let mut count = 0u64;
        for g in 0..cayley.len() {
            let mut acc = identity;
            for _ in 0..n {
                acc = cayley[acc][g];
            }
            if acc == identity {
                count += 1;
            }
        }
        count % p
    }

    #[test]
    fn group_algebra_indicators_match_brute_force() {
        // 4·|G| terms, so the two methods also cross-validate over a full
        // four-period window
        for (n, p) in [(2usize, 3u64), (3, 5), (4, 3), (4, 5), (3, 3)] {
            let h = c_n(n, p);
            let cayley = zoo::cyclic_cayley(n);
            let computed = indicators(&h, 4 * n, Method::Both).unwrap();
            for (idx, v) in computed.values.iter().enumerate() {
                let expected = group_count(&cayley, 0, idx + 1, p);
                assert_eq!(v.value(), expected, "C_{n} over F_{p} at n={}", idx + 1);
            }
        }
    }

    #[test]
    fn f5_c3_example_values() {
        let h = c_n(3, 5);
        let s = indicators(&h, 6, Method::Both).unwrap();
        assert_eq!(s.lifted(), vec![1, 1, 3, 1, 1, 3]);
    }

    #[test]
    fn radford_pattern_small_primes() {
        for p in [2u64, 3, 5] {
            let h = zoo::build_radford(fp(p)).unwrap();
            let count = 4 * p as usize;
            let s = indicators(&h, count, Method::Both).unwrap();
            for (idx, v) in s.values.iter().enumerate() {
                let n = idx + 1;
                let expected = if n % p as usize == 0 { 0 } else { 1 };
                assert_eq!(v.value(), expected, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn radford_three_integral_sequence() {
        let h = zoo::build_radford(fp(3)).unwrap();
        let s = indicators_integral(&h, 7, Side::Left).unwrap();
        assert_eq!(s.lifted(), vec![1, 1, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn trivial_algebra_is_all_ones() {
        let h = c_n(1, 5);
        let s = indicators(&h, 9, Method::Both).unwrap();
        assert!(s.values.iter().all(|v| v.value() == 1));
    }

    #[test]
    fn trace_of_antipode_is_nu_two() {
        // ν_2 = Tr(S); for the p = 5 Radford-type algebra this is 1
        let h = zoo::build_radford(fp(5)).unwrap();
        assert_eq!(h.antipode_matrix().trace().value(), 1);
        let s = indicators_trace(&h, 2);
        assert_eq!(s.values[1], h.antipode_matrix().trace());
    }

    #[test]
    fn period_detection_cases() {
        // R(5)-style pattern over 30 terms: period 5, no preperiod
        let mut vals = Vec::new();
        for n in 1..=30u64 {
            vals.push(if n % 5 == 0 { 0 } else { 1 });
        }
        let report = detect_period(&seq(&vals, 5)).unwrap();
        assert_eq!((report.period, report.preperiod), (5, 0));

        // constant sequence
        let report = detect_period(&seq(&[2, 2, 2, 2], 5)).unwrap();
        assert_eq!((report.period, report.preperiod), (1, 0));

        // 1,1,0 repeated but only 5 terms: fewer than 3T confirmations
        assert!(detect_period(&seq(&[1, 1, 0, 1, 1], 5)).is_none());

        // a genuine preperiod
        let report = detect_period(&seq(&[0, 1, 1, 1, 1, 1, 1], 3)).unwrap();
        assert_eq!((report.period, report.preperiod), (1, 1));
    }

    #[test]
    fn berlekamp_massey_constant_sequence() {
        let mp = berlekamp_massey(&seq(&[1; 12], 5), fp(5));
        assert_eq!(mp.lifted(), vec![4, 1]); // x - 1
        assert_eq!(mp.degree(), 1);
    }

    #[test]
    fn berlekamp_massey_fibonacci() {
        // Fibonacci mod 5; the recurrence is x² - x - 1
        let p = fp(5);
        let mut fib = vec![p.element(1), p.element(1)];
        for i in 2..20 {
            let next = fib[i - 1] + fib[i - 2];
            fib.push(next);
        }
        assert_eq!(fib[..10].iter().map(|v| v.value()).collect::<Vec<_>>(),
                   vec![1, 1, 2, 3, 0, 3, 3, 1, 4, 0]);
        let mp = berlekamp_massey(&fib, p);
        assert_eq!(mp.lifted(), vec![4, 4, 1]); // -1 - x + x²
        assert!(mp.satisfies(&fib));
    }

    #[test]
    fn berlekamp_massey_edge_cases() {
        // all zeros: the constant polynomial 1
        let mp = berlekamp_massey(&seq(&[0, 0, 0], 3), fp(3));
        assert_eq!(mp.lifted(), vec![1]);
        assert_eq!(mp.degree(), 0);
        // impulse at the end: no monic quadratic fits (f_0·0 + f_1·0 + 1 ≠ 0),
        // so the degree must be 3; every window of length 4 is vacuous and
        // the algorithm settles on x³ - 1
        let impulse = seq(&[0, 0, 1], 3);
        let mp = berlekamp_massey(&impulse, fp(3));
        assert_eq!(mp.degree(), 3);
        assert_eq!(mp.lifted(), vec![2, 0, 0, 1]);
        assert!(mp.satisfies(&impulse));
    }

    #[test]
    fn minimal_polynomial_of_radford_algebras() {
        // x^p - 1, i.e. coefficient vector (p-1, 0, ..., 0, 1)
        for p in [2u64, 3] {
            let h = zoo::build_radford(fp(p)).unwrap();
            let mp = minimal_polynomial_of_indicators(&h).unwrap();
            let mut expected = vec![0u64; p as usize + 1];
            expected[0] = p - 1;
            expected[p as usize] = 1;
            assert_eq!(mp.lifted(), expected, "p={p}");
            assert!(mp.degree() <= h.dim() * h.dim());
            assert!(mp.verified_window >= 2 * h.dim() + h.dim());
        }
    }

    #[test]
    fn minimal_polynomial_of_trivial_algebra() {
        let h = c_n(1, 5);
        let mp = minimal_polynomial_of_indicators(&h).unwrap();
        assert_eq!(mp.lifted(), vec![4, 1]); // x - 1
    }

    #[test]
    fn pretty_printing() {
        let p = fp(5);
        let mp = berlekamp_massey(&seq(&[1, 1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 1, 1, 0], 5), p);
        assert_eq!(mp.pretty(), "x^5 + 4");
        let fib = berlekamp_massey(
            &{
                let mut v = vec![p.element(1), p.element(1)];
                for i in 2..12 {
                    let n = v[i - 1] + v[i - 2];
                    v.push(n);
                }
                v
            },
            p,
        );
        assert_eq!(fib.pretty(), "x^2 + 4 x + 4");
    }

    #[test]
    fn minpoly_divides_x_to_period_minus_one() {
        // polynomial long division over F_p: remainder of (x^T - 1) / f
        fn divides(f: &[u64], t: usize, p: u64) -> bool {
            let m = fp(p);
            let mut rem = vec![0u64; t + 1];
            rem[0] = p - 1;
            rem[t] = 1;
            let deg_f = f.len() - 1;
            while rem.iter().rposition(|&c| c != 0).map_or(false, |d| d >= deg_f) {
                let d = rem.iter().rposition(|&c| c != 0).unwrap();
                let lead = rem[d]; // f is monic
                for (i, &fc) in f.iter().enumerate() {
                    let idx = d - deg_f + i;
                    rem[idx] = m.sub_raw(rem[idx], m.mul_raw(lead, fc));
                }
            }
            rem.iter().all(|&c| c == 0)
        }
        for p in [2u64, 3] {
            let h = zoo::build_radford(fp(p)).unwrap();
            let s = indicators_trace(&h, 6 * p as usize);
            let period = detect_period(&s.values).unwrap();
            assert_eq!(period.period, p as usize);
            let mp = minimal_polynomial_of_indicators(&h).unwrap();
            assert!(divides(&mp.lifted(), period.period, p));
        }
    }
}
