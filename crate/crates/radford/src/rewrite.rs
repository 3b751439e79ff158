//! Normal-form rewriting from words over {g, x} onto the basis
//! {g^i x^j | 0 ≤ i, j < p} of the p²-dimensional quotient.
//!
//! Rules, applied until none matches:
//!
//!   (a) x g -> g x + g - g²     for p > 2,
//!       x g -> g x + 1 - g      for p = 2 (stated separately; unifying
//!                               the two silently risks sign errors in
//!                               characteristic 2),
//!   (b) g^p -> 1,
//!   (c) x^p -> x.
//!
//! Termination: each application of (a) strictly decreases the measure
//! (number of x's, number of x-before-g inversions, total degree) in
//! lexicographic order on the words it produces, and (b), (c) strictly
//! shrink sorted words. The normal form is order-independent: the basis
//! {g^i x^j} is a linear basis of the quotient, so the residue class of a
//! word determines its coefficients uniquely.
//!
//! Strategy: reducing a long word by leftmost small steps alone explores
//! an exponential set of interleavings, so the public entry point folds
//! the word right to left over already-normal states. Prepending g is
//! exponent arithmetic (rule b); prepending x goes through the small-step
//! engine on the word x g^a x^b, memoized over the p² basis states. The
//! small-step engine below applies rule (a) literally at the leftmost
//! match.

use std::collections::BTreeMap;

use crate::field::PrimeModulus;
use crate::free_bialgebra::{Letter, Word};
use crate::linalg::VectorFp;

/// Rewrite an F_p-combination of words to its coefficient vector on the
/// basis {g^i x^j}, flat index i·p + j.
pub fn radford_normal_form(modulus: PrimeModulus, terms: &[(Word, u64)]) -> VectorFp {
    let p = modulus.get();
    let dim = (p * p) as usize;
    let kernel = XPrependKernel::new(modulus);
    let mut out = vec![0u64; dim];
    for (word, coeff) in terms {
        let coeff = coeff % p;
        if coeff == 0 {
            continue;
        }
        let nf = kernel.normal_form(word);
        for (slot, &v) in out.iter_mut().zip(&nf) {
            *slot = (*slot + coeff * v) % p;
        }
    }
    VectorFp::from_raw(out, modulus)
}

/// Memoized left-multiplication by x on normal states: entry (a, b) holds
/// the normal form of x g^a x^b, computed once by the small-step engine.
struct XPrependKernel {
    modulus: PrimeModulus,
    p: usize,
    x_times: Vec<Vec<(usize, u64)>>,
}

impl XPrependKernel {
    fn new(modulus: PrimeModulus) -> Self {
        let p = modulus.get() as usize;
        let mut x_times = Vec::with_capacity(p * p);
        for a in 0..p {
            for b in 0..p {
                let mut letters = Vec::with_capacity(1 + a + b);
                letters.push(Letter::X);
                letters.extend(std::iter::repeat(Letter::G).take(a));
                letters.extend(std::iter::repeat(Letter::X).take(b));
                let nf = small_step_normal_form(modulus, &Word(letters));
                let sparse: Vec<(usize, u64)> = nf
                    .iter()
                    .enumerate()
                    .filter(|(_, &v)| v != 0)
                    .map(|(i, &v)| (i, v))
                    .collect();
                x_times.push(sparse);
            }
        }
        XPrependKernel {
            modulus,
            p,
            x_times,
        }
    }

    /// Normal form of a single word, folding letters right to left.
    fn normal_form(&self, word: &Word) -> Vec<u64> {
        let p = self.p;
        let pp = self.modulus.get();
        let dim = p * p;
        let mut poly = vec![0u64; dim];
        poly[0] = 1;
        for &letter in word.0.iter().rev() {
            let mut next = vec![0u64; dim];
            match letter {
                Letter::G => {
                    // g · g^a x^b = g^{a+1 mod p} x^b
                    for a in 0..p {
                        let shifted = (a + 1) % p;
                        for b in 0..p {
                            next[shifted * p + b] = poly[a * p + b];
                        }
                    }
                }
                Letter::X => {
                    for (idx, &c) in poly.iter().enumerate() {
                        if c == 0 {
                            continue;
                        }
                        for &(target, v) in &self.x_times[idx] {
                            next[target] = (next[target] + c * v) % pp;
                        }
                    }
                }
            }
            poly = next;
        }
        poly
    }
}

/// Position of the leftmost "xg" factor, if any.
fn leftmost_inversion(word: &Word) -> Option<usize> {
    word.0
        .windows(2)
        .position(|pair| pair == [Letter::X, Letter::G])
}

/// Literal small-step reduction: apply rule (a) at the leftmost match,
/// keep a merged agenda of still-unsorted words, and fold exponents of
/// sorted words arithmetically.
fn small_step_normal_form(modulus: PrimeModulus, word: &Word) -> Vec<u64> {
    let p = modulus.get();
    let dim = (p * p) as usize;
    let mut out = vec![0u64; dim];
    let mut agenda: BTreeMap<Word, u64> = BTreeMap::new();
    deposit(&mut agenda, &mut out, modulus, word.clone(), 1);

    while let Some((word, coeff)) = agenda.pop_first() {
        if coeff == 0 {
            continue;
        }
        let pos = leftmost_inversion(&word).expect("agenda words always contain an inversion");
        let prefix = &word.0[..pos];
        let suffix = &word.0[pos + 2..];

        // x g -> g x (+ corrections)
        let mut swapped = Vec::with_capacity(word.0.len());
        swapped.extend_from_slice(prefix);
        swapped.push(Letter::G);
        swapped.push(Letter::X);
        swapped.extend_from_slice(suffix);
        deposit(&mut agenda, &mut out, modulus, Word(swapped), coeff);

        if p == 2 {
            // + 1 - g
            let mut dropped = Vec::with_capacity(word.0.len() - 2);
            dropped.extend_from_slice(prefix);
            dropped.extend_from_slice(suffix);
            deposit(&mut agenda, &mut out, modulus, Word(dropped), coeff);

            let mut single_g = Vec::with_capacity(word.0.len() - 1);
            single_g.extend_from_slice(prefix);
            single_g.push(Letter::G);
            single_g.extend_from_slice(suffix);
            deposit(&mut agenda, &mut out, modulus, Word(single_g), modulus.neg_raw(coeff));
        } else {
            // + g - g²
            let mut single_g = Vec::with_capacity(word.0.len() - 1);
            single_g.extend_from_slice(prefix);
            single_g.push(Letter::G);
            single_g.extend_from_slice(suffix);
            deposit(&mut agenda, &mut out, modulus, Word(single_g), coeff);

            let mut double_g = Vec::with_capacity(word.0.len());
            double_g.extend_from_slice(prefix);
            double_g.push(Letter::G);
            double_g.push(Letter::G);
            double_g.extend_from_slice(suffix);
            deposit(&mut agenda, &mut out, modulus, Word(double_g), modulus.neg_raw(coeff));
        }
    }

    out
}

/// Route a term either to the output vector (sorted words, with exponent
/// reduction) or back onto the agenda.
fn deposit(
    agenda: &mut BTreeMap<Word, u64>,
    out: &mut [u64],
    modulus: PrimeModulus,
    word: Word,
    coeff: u64,
) {
    let p = modulus.get();
    let coeff = coeff % p;
    if coeff == 0 {
        return;
    }
    if leftmost_inversion(&word).is_some() {
        let entry = agenda.entry(word).or_insert(0);
        *entry = (*entry + coeff) % p;
        return;
    }
    // word is g^a x^b
    let a = word.count(Letter::G) as u64 % p; // g^p = 1
    let mut b = word.count(Letter::X) as u64;
    while b >= p {
        b -= p - 1; // x^p = x
    }
    let idx = (a * p + b) as usize;
    out[idx] = (out[idx] + coeff) % p;
}
