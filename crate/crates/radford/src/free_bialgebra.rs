//! Degree-truncated exact model of the free bialgebra on two generators
//! g and x, with Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x, ε(g) = 1, ε(x) = 0.
//!
//! Polynomials carry a hard degree bound; exceeding it is an explicit
//! error, never a silent truncation, so the identity sweeps below cannot
//! be faked by dropped terms. There is no antipode here: the free
//! bialgebra is only a bialgebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::field::PrimeModulus;
use crate::hopf::AlgebraElement;
use crate::zoo;

/// Generator alphabet of the free bialgebra.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    G,
    X,
}

/// A word over {g, x}; the empty word is the unit monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word g^i x^j.
    pub fn g_x(i: usize, j: usize) -> Self {
        let mut w = Vec::with_capacity(i + j);
        w.extend(std::iter::repeat(Letter::G).take(i));
        w.extend(std::iter::repeat(Letter::X).take(j));
        Word(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&other.0);
        Word(w)
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&l| l == letter).count()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut run_letter = self.0[0];
        let mut run_len = 0usize;
        for &l in &self.0 {
            if l == run_letter {
                run_len += 1;
            } else {
                parts.push((run_letter, run_len));
                run_letter = l;
                run_len = 1;
            }
        }
        parts.push((run_letter, run_len));
        let rendered: Vec<String> = parts
            .into_iter()
            .map(|(l, n)| {
                let name = match l {
                    Letter::G => "g",
                    Letter::X => "x",
                };
                if n == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{n}")
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" "))
    }
}

/// A finitely supported F_p-combination of words, with a degree bound.
/// No zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, u64>,
    modulus: PrimeModulus,
    degree_bound: usize,
}

impl NCPolynomial {
    pub fn zero(modulus: PrimeModulus, degree_bound: usize) -> Self {
        NCPolynomial {
            terms: BTreeMap::new(),
            modulus,
            degree_bound,
        }
    }

    pub fn one(modulus: PrimeModulus, degree_bound: usize) -> Self {
        Self::from_word(Word::empty(), 1, modulus, degree_bound).unwrap()
    }

    pub fn generator_g(modulus: PrimeModulus, degree_bound: usize) -> Self {
        Self::from_word(Word(vec![Letter::G]), 1, modulus, degree_bound).unwrap()
    }

    pub fn generator_x(modulus: PrimeModulus, degree_bound: usize) -> Self {
        Self::from_word(Word(vec![Letter::X]), 1, modulus, degree_bound).unwrap()
    }

    pub fn from_word(
        word: Word,
        coeff: u64,
        modulus: PrimeModulus,
        degree_bound: usize,
    ) -> Result<Self, Error> {
        if word.len() > degree_bound {
            return Err(Error::DegreeOverflow {
                bound: degree_bound,
                needed: word.len(),
            });
        }
        let mut terms = BTreeMap::new();
        let c = coeff % modulus.get();
        if c != 0 {
            terms.insert(word, c);
        }
        Ok(NCPolynomial {
            terms,
            modulus,
            degree_bound,
        })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, u64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct words with nonzero coefficient.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, word: &Word) -> u64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    fn check_compatible(&self, other: &NCPolynomial) {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.degree_bound, other.degree_bound, "degree bound mismatch");
    }

    fn insert(&mut self, word: Word, coeff: u64) {
        use std::collections::btree_map::Entry;
        let p = self.modulus.get();
        let c = coeff % p;
        if c == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &NCPolynomial) -> NCPolynomial {
        self.check_compatible(other);
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.insert(w.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &NCPolynomial) -> NCPolynomial {
        self.check_compatible(other);
        let p = self.modulus.get();
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.insert(w.clone(), p - c);
        }
        out
    }

    pub fn scale(&self, coeff: u64) -> NCPolynomial {
        let p = self.modulus.get();
        let c = coeff % p;
        let mut out = NCPolynomial::zero(self.modulus, self.degree_bound);
        for (w, v) in self.terms() {
            out.insert(w.clone(), (v * c) % p);
        }
        out
    }

    /// Word-concatenation product, extended bilinearly.
    pub fn nc_mul(&self, other: &NCPolynomial) -> Result<NCPolynomial, Error> {
        self.check_compatible(other);
        let p = self.modulus.get();
        let mut out = NCPolynomial::zero(self.modulus, self.degree_bound);
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                let needed = w1.len() + w2.len();
                if needed > self.degree_bound {
                    return Err(Error::DegreeOverflow {
                        bound: self.degree_bound,
                        needed,
                    });
                }
                out.insert(w1.concat(w2), (c1 * c2) % p);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: usize) -> Result<NCPolynomial, Error> {
        let mut acc = NCPolynomial::one(self.modulus, self.degree_bound);
        for _ in 0..n {
            acc = acc.nc_mul(self)?;
        }
        Ok(acc)
    }

    /// Counit: ε(g) = 1, ε(x) = 0, extended multiplicatively and linearly.
    pub fn counit(&self) -> u64 {
        let p = self.modulus.get();
        let mut acc = 0u64;
        for (w, c) in self.terms() {
            if w.count(Letter::X) == 0 {
                acc = (acc + c) % p;
            }
        }
        acc
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                if *c == 1 {
                    format!("{w}")
                } else {
                    format!("{c}·{w}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// An element of 𝔅 ⊗ 𝔅: word pairs with coefficients, bounded per leg.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NCTensorPolynomial {
    terms: BTreeMap<(Word, Word), u64>,
    modulus: PrimeModulus,
    degree_bound: usize,
}

impl NCTensorPolynomial {
    pub fn zero(modulus: PrimeModulus, degree_bound: usize) -> Self {
        NCTensorPolynomial {
            terms: BTreeMap::new(),
            modulus,
            degree_bound,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), u64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, key: (Word, Word), coeff: u64) {
        use std::collections::btree_map::Entry;
        let p = self.modulus.get();
        let c = coeff % p;
        if c == 0 {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = (*e.get() + c) % p;
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add(&self, other: &NCTensorPolynomial) -> NCTensorPolynomial {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.degree_bound, other.degree_bound, "degree bound mismatch");
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.insert(k.clone(), c);
        }
        out
    }

    /// Legwise product: (a⊗b)(c⊗d) = ac ⊗ bd.
    pub fn mul(&self, other: &NCTensorPolynomial) -> Result<NCTensorPolynomial, Error> {
        assert_eq!(self.modulus, other.modulus, "modulus mismatch");
        assert_eq!(self.degree_bound, other.degree_bound, "degree bound mismatch");
        let p = self.modulus.get();
        let mut out = NCTensorPolynomial::zero(self.modulus, self.degree_bound);
        for ((l1, r1), c1) in self.terms() {
            for ((l2, r2), c2) in other.terms() {
                let need_l = l1.len() + l2.len();
                let need_r = r1.len() + r2.len();
                if need_l > self.degree_bound || need_r > self.degree_bound {
                    return Err(Error::DegreeOverflow {
                        bound: self.degree_bound,
                        needed: need_l.max(need_r),
                    });
                }
                out.insert((l1.concat(l2), r1.concat(r2)), (c1 * c2) % p);
            }
        }
        Ok(out)
    }
}

/// The outer tensor a ⊗ b of two polynomials.
pub fn tensor(a: &NCPolynomial, b: &NCPolynomial) -> NCTensorPolynomial {
    assert_eq!(a.modulus(), b.modulus(), "modulus mismatch");
    assert_eq!(a.degree_bound(), b.degree_bound(), "degree bound mismatch");
    let p = a.modulus().get();
    let mut out = NCTensorPolynomial::zero(a.modulus(), a.degree_bound());
    for (w1, c1) in a.terms() {
        for (w2, c2) in b.terms() {
            out.insert((w1.clone(), w2.clone()), (c1 * c2) % p);
        }
    }
    out
}

/// Comultiplication applied letterwise and multiplicatively:
/// Δ(w₁w₂) = Δ(w₁)Δ(w₂).
pub fn nc_comul(a: &NCPolynomial) -> Result<NCTensorPolynomial, Error> {
    let p = a.modulus().get();
    let mut out = NCTensorPolynomial::zero(a.modulus(), a.degree_bound());
    for (w, c) in a.terms() {
        // expand Δ over the letters; every leg stays within the word length
        let mut partial: Vec<(Word, Word, u64)> = vec![(Word::empty(), Word::empty(), c)];
        for &letter in &w.0 {
            let mut next = Vec::with_capacity(partial.len() * 2);
            for (l, r, coeff) in &partial {
                match letter {
                    Letter::G => {
                        let mut nl = l.clone();
                        nl.0.push(Letter::G);
                        let mut nr = r.clone();
                        nr.0.push(Letter::G);
                        next.push((nl, nr, *coeff));
                    }
                    Letter::X => {
                        // x ⊗ 1
                        let mut nl = l.clone();
                        nl.0.push(Letter::X);
                        next.push((nl, r.clone(), *coeff));
                        // g ⊗ x
                        let mut nl = l.clone();
                        nl.0.push(Letter::G);
                        let mut nr = r.clone();
                        nr.0.push(Letter::X);
                        next.push((nl, nr, *coeff));
                    }
                }
            }
            partial = next;
        }
        for (l, r, coeff) in partial {
            out.insert((l, r), coeff % p);
        }
    }
    Ok(out)
}

/// The sum of all words with `k` g's and `l` x's; 1 when k = l = 0, zero
/// when either index is negative. The number of distinct words is the
/// binomial C(k+l, k).
pub fn c_sum(
    k: i64,
    l: i64,
    modulus: PrimeModulus,
    degree_bound: usize,
) -> Result<NCPolynomial, Error> {
    if k < 0 || l < 0 {
        return Ok(NCPolynomial::zero(modulus, degree_bound));
    }
    let (k, l) = (k as usize, l as usize);
    if k + l > degree_bound {
        return Err(Error::DegreeOverflow {
            bound: degree_bound,
            needed: k + l,
        });
    }
    let mut out = NCPolynomial::zero(modulus, degree_bound);
    let mut word = Vec::with_capacity(k + l);
    enumerate_words(k, l, &mut word, &mut |w| {
        out.insert(Word(w.to_vec()), 1);
    });
    Ok(out)
}

fn enumerate_words(g_left: usize, x_left: usize, word: &mut Vec<Letter>, emit: &mut impl FnMut(&[Letter])) {
    if g_left == 0 && x_left == 0 {
        emit(word);
        return;
    }
    if g_left > 0 {
        word.push(Letter::G);
        enumerate_words(g_left - 1, x_left, word, emit);
        word.pop();
    }
    if x_left > 0 {
        word.push(Letter::X);
        enumerate_words(g_left, x_left - 1, word, emit);
        word.pop();
    }
}

type LegTensor = BTreeMap<Vec<Word>, u64>;

/// Δ^(n) by repeated expansion of the first tensor leg.
fn nc_delta_power(a: &NCPolynomial, n: usize) -> LegTensor {
    assert!(n >= 1);
    let p = a.modulus().get();
    let mut cur: LegTensor = BTreeMap::new();
    for (w, c) in a.terms() {
        *cur.entry(vec![w.clone()]).or_insert(0) += c;
    }
    for _ in 1..n {
        let mut next: LegTensor = BTreeMap::new();
        for (legs, c) in &cur {
            let head = NCPolynomial::from_word(legs[0].clone(), 1, a.modulus(), a.degree_bound())
                .expect("leg within bound");
            let expanded = nc_comul(&head).expect("comultiplication never overflows");
            for ((l, r), c2) in expanded.terms() {
                let mut new_legs = Vec::with_capacity(legs.len() + 1);
                new_legs.push(l.clone());
                new_legs.push(r.clone());
                new_legs.extend_from_slice(&legs[1..]);
                let entry = next.entry(new_legs).or_insert(0);
                *entry = (*entry + c * c2) % p;
            }
        }
        next.retain(|_, v| *v != 0);
        cur = next;
    }
    cur
}

/// The n-th Sweedler power in the free bialgebra, by the direct definition
/// m^(n) ∘ Δ^(n) (with the n = 0 convention ε(a)·1).
pub fn nc_sweedler_power(a: &NCPolynomial, n: usize) -> Result<NCPolynomial, Error> {
    if n == 0 {
        return NCPolynomial::from_word(Word::empty(), a.counit(), a.modulus(), a.degree_bound());
    }
    let expanded = nc_delta_power(a, n);
    let mut out = NCPolynomial::zero(a.modulus(), a.degree_bound());
    for (legs, c) in expanded {
        let mut word = Word::empty();
        for leg in &legs {
            word = word.concat(leg);
        }
        if word.len() > a.degree_bound() {
            return Err(Error::DegreeOverflow {
                bound: a.degree_bound(),
                needed: word.len(),
            });
        }
        out.insert(word, c);
    }
    Ok(out)
}

/// Project a free-bialgebra element onto the p²-dimensional quotient with
/// relations g^p = 1, x^p = x, xg = gx + g - g² (1 - g correction for
/// p = 2), by termwise normal-form rewriting.
pub fn project_to_radford(a: &NCPolynomial, modulus: PrimeModulus) -> AlgebraElement {
    let terms: Vec<(Word, u64)> = a.terms().map(|(w, c)| (w.clone(), c)).collect();
    AlgebraElement::new(zoo::radford_normal_form(modulus, &terms))
}

/// One identity sweep: how many parameter tuples were checked and which
/// failed (none are expected to).
#[derive(Clone, Debug)]
pub struct IdentityCheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub counterexamples: Vec<String>,
}

impl IdentityCheckReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

/// C_{k,l} = g C_{k-1,l} + x C_{k,l-1} = C_{k-1,l} g + C_{k,l-1} x,
/// for all 1 ≤ k+l ≤ max_degree.
pub fn check_csum_recursion(modulus: PrimeModulus, max_degree: usize) -> IdentityCheckReport {
    let bound = max_degree;
    let g = NCPolynomial::generator_g(modulus, bound);
    let x = NCPolynomial::generator_x(modulus, bound);
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    for total in 1..=max_degree {
        for k in 0..=total {
            let l = total - k;
            let (k, l) = (k as i64, l as i64);
            let target = c_sum(k, l, modulus, bound).unwrap();
            let left = g
                .nc_mul(&c_sum(k - 1, l, modulus, bound).unwrap())
                .unwrap()
                .add(&x.nc_mul(&c_sum(k, l - 1, modulus, bound).unwrap()).unwrap());
            let right = c_sum(k - 1, l, modulus, bound)
                .unwrap()
                .nc_mul(&g)
                .unwrap()
                .add(&c_sum(k, l - 1, modulus, bound).unwrap().nc_mul(&x).unwrap());
            cases += 1;
            if target != left || target != right {
                counterexamples.push(format!("(k={k}, l={l})"));
            }
        }
    }
    IdentityCheckReport {
        name: "csum-recursion",
        cases,
        counterexamples,
    }
}

/// Δ(x^n) = Σ_{k≥0} C_{k,n-k} ⊗ x^k for 0 ≤ n ≤ max_degree.
pub fn check_power_coproduct(modulus: PrimeModulus, max_degree: usize) -> IdentityCheckReport {
    let bound = max_degree;
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    for n in 0..=max_degree {
        let xn = NCPolynomial::from_word(Word::g_x(0, n), 1, modulus, bound).unwrap();
        let lhs = nc_comul(&xn).unwrap();
        let mut rhs = NCTensorPolynomial::zero(modulus, bound);
        for k in 0..=n {
            let left = c_sum(k as i64, (n - k) as i64, modulus, bound).unwrap();
            let right = NCPolynomial::from_word(Word::g_x(0, k), 1, modulus, bound).unwrap();
            rhs = rhs.add(&tensor(&left, &right));
        }
        cases += 1;
        if lhs != rhs {
            counterexamples.push(format!("(n={n})"));
        }
    }
    IdentityCheckReport {
        name: "power-coproduct",
        cases,
        counterexamples,
    }
}

/// Δ(C_{a,b}) = Σ_{k≥0} C_{a+k,b-k} ⊗ C_{a,k} for a+b ≤ max_degree.
pub fn check_csum_coproduct(modulus: PrimeModulus, max_degree: usize) -> IdentityCheckReport {
    let bound = max_degree;
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    for total in 0..=max_degree {
        for a in 0..=total {
            let b = total - a;
            let ca_b = c_sum(a as i64, b as i64, modulus, bound).unwrap();
            let lhs = nc_comul(&ca_b).unwrap();
            let mut rhs = NCTensorPolynomial::zero(modulus, bound);
            for k in 0..=b {
                let left = c_sum((a + k) as i64, (b - k) as i64, modulus, bound).unwrap();
                let right = c_sum(a as i64, k as i64, modulus, bound).unwrap();
                rhs = rhs.add(&tensor(&left, &right));
            }
            cases += 1;
            if lhs != rhs {
                counterexamples.push(format!("(a={a}, b={b})"));
            }
        }
    }
    IdentityCheckReport {
        name: "csum-coproduct",
        cases,
        counterexamples,
    }
}

/// (g^i x^j)^[n+1] equals the sum over compositions k_1..k_n with
/// k_1 + ... + k_n ≤ j of
/// g^i C_{K_n, j-K_n} · g^i C_{K_{n-1}, k_n} ··· g^i C_{k_1, k_2} · g^i C_{0, k_1},
/// where K_t = k_1 + ... + k_t. Swept over all (i, j, n) with
/// (n+1)(i+j) ≤ max_degree (and n ≤ max_degree when i = j = 0).
pub fn check_sweedler_expansion(modulus: PrimeModulus, max_degree: usize) -> IdentityCheckReport {
    let bound = max_degree;
    let mut cases = 0;
    let mut counterexamples = Vec::new();
    for i in 0..=max_degree {
        for j in 0..=max_degree {
            for n in 0..=max_degree {
                if (n + 1) * (i + j) > max_degree {
                    continue;
                }
                let h = NCPolynomial::from_word(Word::g_x(i, j), 1, modulus, bound).unwrap();
                let lhs = nc_sweedler_power(&h, n + 1).unwrap();
                let rhs = sweedler_expansion_rhs(i, j, n, modulus, bound).unwrap();
                cases += 1;
                if lhs != rhs {
                    counterexamples.push(format!("(i={i}, j={j}, n={n})"));
                }
            }
        }
    }
    IdentityCheckReport {
        name: "sweedler-expansion",
        cases,
        counterexamples,
    }
}

fn sweedler_expansion_rhs(
    i: usize,
    j: usize,
    n: usize,
    modulus: PrimeModulus,
    bound: usize,
) -> Result<NCPolynomial, Error> {
    let gi = NCPolynomial::from_word(Word::g_x(i, 0), 1, modulus, bound)?;
    let mut acc = NCPolynomial::zero(modulus, bound);
    let mut composition = vec![0usize; n];
    sum_over_compositions(&mut composition, 0, j, &mut |ks| {
        let prefix: Vec<usize> = ks
            .iter()
            .scan(0usize, |acc, &k| {
                *acc += k;
                Some(*acc)
            })
            .collect(); // prefix[t-1] = K_t
        let total: usize = ks.iter().sum();
        // leading factor g^i C_{K_n, j - K_n}
        let mut term = gi.nc_mul(&c_sum(total as i64, (j - total) as i64, modulus, bound)?)?;
        // then g^i C_{K_{t-1}, k_t} for t = n down to 1, with K_0 = 0
        for t in (1..=n).rev() {
            let k_prev = if t >= 2 { prefix[t - 2] } else { 0 };
            let factor = gi.nc_mul(&c_sum(k_prev as i64, ks[t - 1] as i64, modulus, bound)?)?;
            term = term.nc_mul(&factor)?;
        }
        acc = acc.add(&term);
        Ok(())
    })?;
    Ok(acc)
}

fn sum_over_compositions(
    ks: &mut Vec<usize>,
    idx: usize,
    budget: usize,
    body: &mut impl FnMut(&[usize]) -> Result<(), Error>,
) -> Result<(), Error> {
    if idx == ks.len() {
        return body(ks);
    }
    for k in 0..=budget {
        ks[idx] = k;
        sum_over_compositions(ks, idx + 1, budget - k, body)?;
    }
    Ok(())
}

/// Run the full identity suite at the given prime and degree bound.
pub fn run_identity_suite(modulus: PrimeModulus, max_degree: usize) -> Vec<IdentityCheckReport> {
    vec![
        check_csum_recursion(modulus, max_degree),
        check_power_coproduct(modulus, max_degree),
        check_csum_coproduct(modulus, max_degree),
        check_sweedler_expansion(modulus, max_degree),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u64) -> PrimeModulus {
        PrimeModulus::new(p).unwrap()
    }

    fn all_words(len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            // extend all (this builds words of length exactly `len`)
            out = out
                .into_iter()
                .flat_map(|w| {
                    [Letter::G, Letter::X].into_iter().map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn multiplication_is_free() {
        let m = fp(5);
        let g = NCPolynomial::generator_g(m, 4);
        let x = NCPolynomial::generator_x(m, 4);
        let gx = g.nc_mul(&x).unwrap();
        let xg = x.nc_mul(&g).unwrap();
        assert_ne!(gx, xg);
        let one = NCPolynomial::one(m, 4);
        assert_eq!(one.nc_mul(&gx).unwrap(), gx);
    }

    #[test]
    fn overflow_is_explicit() {
        let m = fp(3);
        let x = NCPolynomial::generator_x(m, 2);
        let x2 = x.nc_mul(&x).unwrap();
        let err = x2.nc_mul(&x).unwrap_err();
        assert!(matches!(err, Error::DegreeOverflow { bound: 2, needed: 3 }));
    }

    #[test]
    fn c_sum_small_cases() {
        let m = fp(5);
        assert_eq!(c_sum(0, 0, m, 4).unwrap(), NCPolynomial::one(m, 4));
        assert!(c_sum(1, -1, m, 4).unwrap().is_zero());
        // C_{1,1} = gx + xg
        let c11 = c_sum(1, 1, m, 4).unwrap();
        assert_eq!(c11.support_size(), 2);
        assert_eq!(c11.coefficient(&Word(vec![Letter::G, Letter::X])), 1);
        assert_eq!(c11.coefficient(&Word(vec![Letter::X, Letter::G])), 1);
        // C_{2,1} = ggx + gxg + xgg
        let c21 = c_sum(2, 1, m, 4).unwrap();
        assert_eq!(c21.support_size(), 3);
    }

    #[test]
    fn c_sum_support_counts_are_binomial() {
        // word counting is integer counting of the support; coefficient
        // collapse mod p must not mask missing words
        fn int_binomial(n: u64, k: u64) -> u64 {
            (1..=k).fold(1, |acc, t| acc * (n - k + t) / t)
        }
        let m = fp(3);
        for k in 0..=4u64 {
            for l in 0..=4u64 {
                let count = c_sum(k as i64, l as i64, m, 8).unwrap().support_size() as u64;
                assert_eq!(count, int_binomial(k + l, k), "k={k} l={l}");
            }
        }
    }

    #[test]
    fn comultiplication_of_generators() {
        let m = fp(5);
        let g = NCPolynomial::generator_g(m, 4);
        let x = NCPolynomial::generator_x(m, 4);
        let dg = nc_comul(&g).unwrap();
        assert_eq!(dg, tensor(&g, &g));
        let dx = nc_comul(&x).unwrap();
        let one = NCPolynomial::one(m, 4);
        let expected = tensor(&x, &one).add(&tensor(&g, &x));
        assert_eq!(dx, expected);
    }

    #[test]
    fn comultiplication_of_x_squared() {
        // Δ(x²) = x²⊗1 + (gx+xg)⊗x + g²⊗x²; cross-check against the
        // C-sum expansion Σ_k C_{k,2-k} ⊗ x^k.
        let m = fp(5);
        let x = NCPolynomial::generator_x(m, 4);
        let x2 = x.nc_mul(&x).unwrap();
        let lhs = nc_comul(&x2).unwrap();

        let mut rhs = NCTensorPolynomial::zero(m, 4);
        for k in 0..=2i64 {
            let left = c_sum(k, 2 - k, m, 4).unwrap();
            let right = NCPolynomial::from_word(Word::g_x(0, k as usize), 1, m, 4).unwrap();
            rhs = rhs.add(&tensor(&left, &right));
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_axioms_up_to_degree_six() {
        // (ε ⊗ id)Δ = id = (id ⊗ ε)Δ on every word of length ≤ 6
        let m = fp(5);
        for len in 0..=6 {
            for w in all_words(len) {
                let poly = NCPolynomial::from_word(w.clone(), 1, m, 6).unwrap();
                let d = nc_comul(&poly).unwrap();
                let mut left = NCPolynomial::zero(m, 6);
                let mut right = NCPolynomial::zero(m, 6);
                for ((l, r), c) in d.terms() {
                    if l.count(Letter::X) == 0 {
                        left.insert(r.clone(), c);
                    }
                    if r.count(Letter::X) == 0 {
                        right.insert(l.clone(), c);
                    }
                }
                assert_eq!(left, poly, "(ε⊗id)Δ at {w}");
                assert_eq!(right, poly, "(id⊗ε)Δ at {w}");
            }
        }
    }

    #[test]
    fn coassociativity_up_to_degree_five() {
        let m = fp(5);
        for len in 0..=5 {
            for w in all_words(len) {
                let poly = NCPolynomial::from_word(w.clone(), 1, m, 5).unwrap();
                let d = nc_comul(&poly).unwrap();
                // expand left leg vs right leg into 3-leg tensors
                let mut lhs: BTreeMap<(Word, Word, Word), u64> = BTreeMap::new();
                let mut rhs: BTreeMap<(Word, Word, Word), u64> = BTreeMap::new();
                for ((l, r), c) in d.terms() {
                    let dl = nc_comul(&NCPolynomial::from_word(l.clone(), 1, m, 5).unwrap()).unwrap();
                    for ((a, b), c2) in dl.terms() {
                        let e = lhs.entry((a.clone(), b.clone(), r.clone())).or_insert(0);
                        *e = (*e + c * c2) % m.get();
                    }
                    let dr = nc_comul(&NCPolynomial::from_word(r.clone(), 1, m, 5).unwrap()).unwrap();
                    for ((a, b), c2) in dr.terms() {
                        let e = rhs.entry((l.clone(), a.clone(), b.clone())).or_insert(0);
                        *e = (*e + c * c2) % m.get();
                    }
                }
                lhs.retain(|_, v| *v != 0);
                rhs.retain(|_, v| *v != 0);
                assert_eq!(lhs, rhs, "coassociativity at {w}");
            }
        }
    }

    #[test]
    fn sweedler_power_base_cases() {
        let m = fp(5);
        let x = NCPolynomial::generator_x(m, 6);
        // x^[1] = x (n = 0 convention is h^[1] = h at power index 1)
        assert_eq!(nc_sweedler_power(&x, 1).unwrap(), x);
        // x^[2] = x + gx
        let g = NCPolynomial::generator_g(m, 6);
        let expected = x.add(&g.nc_mul(&x).unwrap());
        assert_eq!(nc_sweedler_power(&x, 2).unwrap(), expected);
        // grouplikes: (g^i)^[n] = g^{ni}
        let g2 = NCPolynomial::from_word(Word::g_x(2, 0), 1, m, 6).unwrap();
        assert_eq!(
            nc_sweedler_power(&g2, 3).unwrap(),
            NCPolynomial::from_word(Word::g_x(6, 0), 1, m, 6).unwrap()
        );
        // ε-convention at n = 0
        assert_eq!(nc_sweedler_power(&x, 0).unwrap(), NCPolynomial::zero(m, 6));
        assert_eq!(nc_sweedler_power(&g, 0).unwrap(), NCPolynomial::one(m, 6));
    }

    #[test]
    fn identity_suite_small() {
        let m = fp(3);
        for report in run_identity_suite(m, 4) {
            assert!(
                report.passed(),
                "{} failed: {:?}",
                report.name,
                report.counterexamples
            );
            assert!(report.cases > 0);
        }
    }
}
