//! Brute-force realization of `NCSym` inside `k⟨x_1, …, x_n⟩`.
//!
//! `m_A[X_n]` is the sum of the words `x_{i_1} ⋯ x_{i_m}` whose type (equal
//! positions share a letter) is `A`. Everything here is exponential in the
//! degree and only meant as a cross-check for [`crate::ncsym`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ncsym::{Basis, Element, Tensor};
use crate::partition::{type_of, SetPartition};

/// A word in the letters `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NcWord(pub Vec<u32>);

impl NcWord {
    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn type_of(&self) -> SetPartition {
        type_of(&self.0)
    }
}

impl fmt::Display for NcWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for l in &self.0 {
            write!(f, "x{l}")?;
        }
        Ok(())
    }
}

/// A word in the pair alphabet `XY = {x_i y_j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairWord(pub Vec<(u32, u32)>);

impl PairWord {
    /// The `x`-word and `y`-word obtained by letting `x`s commute with `y`s.
    pub fn project(&self) -> (NcWord, NcWord) {
        let (xs, ys) = self.0.iter().copied().unzip();
        (NcWord(xs), NcWord(ys))
    }
}

/// A noncommutative polynomial over the alphabet `x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NcPolynomial {
    alphabet: usize,
    terms: BTreeMap<NcWord, BigInt>,
}

impl NcPolynomial {
    pub fn zero(alphabet: usize) -> Self {
        NcPolynomial { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: usize) -> Self {
        Self::word(alphabet, NcWord(Vec::new())).expect("empty word")
    }

    pub fn word(alphabet: usize, w: NcWord) -> Result<Self> {
        Self::from_terms(alphabet, [(w, BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (NcWord, BigInt)>>(alphabet: usize, terms: I) -> Result<Self> {
        let mut acc: HashMap<NcWord, BigInt> = HashMap::new();
        for (w, c) in terms {
            if let Some(&bad) = w.0.iter().find(|&&l| l == 0 || l as usize > alphabet) {
                return Err(Error::Index { index: bad as usize, len: alphabet });
            }
            *acc.entry(w).or_default() += c;
        }
        Ok(NcPolynomial { alphabet, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<NcWord, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_alphabets(self, other)?;
        let terms = self.terms.iter().chain(&other.terms).map(|(w, c)| (w.clone(), c.clone()));
        Self::from_terms(self.alphabet, terms)
    }
}

impl fmt::Display for NcPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{c}*{w}")?;
            }
        }
        Ok(())
    }
}

fn check_alphabets(p: &NcPolynomial, q: &NcPolynomial) -> Result<()> {
    if p.alphabet != q.alphabet {
        return Err(Error::SizeMismatch { left: p.alphabet, right: q.alphabet });
    }
    Ok(())
}

/// Calls `visit` with every injective map from `k` blocks into `0..n`.
fn injections(k: usize, n: usize, visit: &mut impl FnMut(&[u32])) {
    fn go(pos: usize, k: usize, n: usize, used: &mut [bool], image: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if pos == k {
            visit(image);
            return;
        }
        for l in 0..n {
            if !used[l] {
                used[l] = true;
                image.push(l as u32);
                go(pos + 1, k, n, used, image, visit);
                image.pop();
                used[l] = false;
            }
        }
    }
    go(0, k, n, &mut vec![false; n], &mut Vec::with_capacity(k), visit);
}

/// `m_A[X_n]`: one word per injective assignment of letters to blocks.
pub fn expand_m(a: &SetPartition, n: usize) -> NcPolynomial {
    let mut terms = BTreeMap::new();
    injections(a.num_blocks(), n, &mut |image| {
        let w = a.rgs().iter().map(|&b| image[b as usize] + 1).collect();
        terms.insert(NcWord(w), BigInt::one());
    });
    NcPolynomial { alphabet: n, terms }
}

/// Applies `σ` (one-line notation on `1..=n`) letterwise.
pub fn permute(sigma: &[u32], p: &NcPolynomial) -> Result<NcPolynomial> {
    if sigma.len() != p.alphabet {
        return Err(Error::SizeMismatch { left: sigma.len(), right: p.alphabet });
    }
    let mut seen = vec![false; sigma.len()];
    for &s in sigma {
        let i = s as usize;
        if i == 0 || i > sigma.len() || seen[i - 1] {
            return Err(Error::Syntax { input: format!("{sigma:?}"), reason: "not a permutation".into() });
        }
        seen[i - 1] = true;
    }
    let terms = p
        .terms
        .iter()
        .map(|(w, c)| (NcWord(w.0.iter().map(|&l| sigma[l as usize - 1]).collect()), c.clone()));
    NcPolynomial::from_terms(p.alphabet, terms)
}

/// Product by concatenation of words.
pub fn nc_multiply(p: &NcPolynomial, q: &NcPolynomial) -> Result<NcPolynomial> {
    check_alphabets(p, q)?;
    let terms = p.terms.iter().flat_map(|(u, c)| {
        q.terms.iter().map(move |(v, d)| {
            let mut w = u.0.clone();
            w.extend_from_slice(&v.0);
            (NcWord(w), c * d)
        })
    });
    NcPolynomial::from_terms(p.alphabet, terms)
}

/// Result of [`type_decompose`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub element: Element,
    /// Set when some degree present exceeds the alphabet, so types with more
    /// blocks than letters may have vanished unseen.
    pub partial: bool,
}

/// `n (n−1) ⋯ (n−k+1)`, the number of words of a type with `k` blocks.
pub fn falling_factorial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).map(|i| (n - i) as u64).product()
}

/// Writes an `S_n`-invariant polynomial in the `m` basis, checking that every
/// orbit is present with a single coefficient.
pub fn type_decompose(p: &NcPolynomial) -> Result<Decomposition> {
    let n = p.alphabet;
    let mut orbits: BTreeMap<SetPartition, (BigInt, u64)> = BTreeMap::new();
    let mut partial = false;
    for (w, c) in &p.terms {
        partial |= w.0.len() > n;
        let a = w.type_of();
        match orbits.get_mut(&a) {
            None => {
                orbits.insert(a, (c.clone(), 1));
            }
            Some((coef, count)) => {
                if coef != c {
                    return Err(Error::NotInvariant(format!("coefficients {coef} and {c} in the orbit of type {a}")));
                }
                *count += 1;
            }
        }
    }
    for (a, (_, count)) in &orbits {
        let full = falling_factorial(n, a.num_blocks());
        if *count != full {
            return Err(Error::NotInvariant(format!("type {a} has {count} of {full} orbit words")));
        }
    }
    let element = Element::from_terms(Basis::M, orbits.into_iter().map(|(a, (c, _))| (a, c)));
    Ok(Decomposition { element, partial })
}

/// Words of `m_A[XY]` over `n_x · n_y` pair letters, ordered `(i, j)` lexicographically.
pub fn expand_m_pairs(a: &SetPartition, n_x: usize, n_y: usize) -> Vec<PairWord> {
    let mut out = Vec::new();
    for_each_pair_word(a, n_x, n_y, |w| out.push(PairWord(w.to_vec())));
    out.sort();
    out
}

fn for_each_pair_word(a: &SetPartition, n_x: usize, n_y: usize, mut visit: impl FnMut(&[(u32, u32)])) {
    let ny = n_y as u32;
    let mut word = vec![(0, 0); a.size()];
    injections(a.num_blocks(), n_x * n_y, &mut |image| {
        for (slot, &b) in word.iter_mut().zip(a.rgs()) {
            let l = image[b as usize];
            *slot = (l / ny + 1, l % ny + 1);
        }
        visit(&word);
    });
}

/// `m_A[XY]` classified as `Σ c_{B,C} m_B[X] m_C[Y]`, i.e. `Δ⊙(m_A)`.
pub fn expand_m_xy(a: &SetPartition, n_x: usize, n_y: usize) -> Result<Tensor> {
    let needed = a.num_blocks();
    if n_x.min(n_y) < needed {
        return Err(Error::AlphabetTooSmall { needed, got: n_x.min(n_y) });
    }
    let mut counts: BTreeMap<(SetPartition, SetPartition), u64> = BTreeMap::new();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for_each_pair_word(a, n_x, n_y, |w| {
        xs.clear();
        ys.clear();
        for &(i, j) in w {
            xs.push(i);
            ys.push(j);
        }
        *counts.entry((type_of(&xs), type_of(&ys))).or_default() += 1;
    });
    let mut terms = Vec::with_capacity(counts.len());
    for ((b, c), count) in counts {
        let orbit = falling_factorial(n_x, b.num_blocks()) * falling_factorial(n_y, c.num_blocks());
        if count % orbit != 0 {
            return Err(Error::NotInvariant(format!("pair type ({b}, {c}) has {count} words, orbit size {orbit}")));
        }
        terms.push(((b, c), BigInt::from(count / orbit)));
    }
    Ok(Tensor::from_terms(Basis::M, Basis::M, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn word(letters: &[u32]) -> NcWord {
        NcWord(letters.to_vec())
    }

    fn m(terms: &[(&str, i64)]) -> Element {
        Element::from_terms(Basis::M, terms.iter().map(|(a, c)| (p(a), BigInt::from(*c))))
    }

    /// Filter over all `n^k` words.
    fn expand_by_filter(a: &SetPartition, n: usize) -> NcPolynomial {
        let k = a.size();
        let mut terms = Vec::new();
        for code in 0..n.pow(k as u32) {
            let mut rest = code;
            let letters: Vec<u32> = (0..k)
                .map(|_| {
                    let l = (rest % n) as u32 + 1;
                    rest /= n;
                    l
                })
                .collect();
            if &type_of(&letters) == a {
                terms.push((NcWord(letters), BigInt::one()));
            }
        }
        NcPolynomial::from_terms(n, terms).unwrap()
    }

    #[test]
    fn expansion_examples() {
        let e = expand_m(&p("1,3|2"), 4);
        assert_eq!(e.terms().len(), 12);
        assert!(e.terms().contains_key(&word(&[1, 2, 1])));
        assert!(e.terms().contains_key(&word(&[4, 3, 4])));
        assert!(!e.terms().contains_key(&word(&[1, 1, 1])));
        assert!(expand_m(&p("1|2"), 1).is_zero());
        assert_eq!(expand_m(&SetPartition::empty(), 3), NcPolynomial::one(3));
    }

    #[test]
    fn expansion_matches_filter() {
        for k in 0..=4 {
            for a in enumerate(k) {
                for n in 0..=4 {
                    let e = expand_m(&a, n);
                    assert_eq!(e, expand_by_filter(&a, n), "{a} n={n}");
                    assert_eq!(e.terms().len() as u64, falling_factorial(n, a.num_blocks()));
                }
            }
        }
    }

    #[test]
    fn permutation_examples() {
        let x12 = NcPolynomial::word(2, word(&[1, 2])).unwrap();
        assert_eq!(permute(&[1, 2], &x12).unwrap(), x12);
        assert_eq!(permute(&[2, 1], &x12).unwrap(), NcPolynomial::word(2, word(&[2, 1])).unwrap());
        let e = expand_m(&p("1,3|2"), 3);
        for sigma in [[2, 1, 3], [3, 1, 2], [1, 3, 2]] {
            assert_eq!(permute(&sigma, &e).unwrap(), e);
        }
        assert!(matches!(permute(&[1], &x12), Err(Error::SizeMismatch { .. })));
        assert!(permute(&[1, 1], &x12).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let x1 = NcPolynomial::word(2, word(&[1])).unwrap();
        let x2 = NcPolynomial::word(2, word(&[2])).unwrap();
        assert_ne!(nc_multiply(&x1, &x2).unwrap(), nc_multiply(&x2, &x1).unwrap());
        assert_eq!(nc_multiply(&NcPolynomial::one(2), &x1).unwrap(), x1);
        let m1 = expand_m(&p("1"), 2);
        let sum = expand_m(&p("1|2"), 2).add(&expand_m(&p("1,2"), 2)).unwrap();
        assert_eq!(nc_multiply(&m1, &m1).unwrap(), sum);
        assert!(nc_multiply(&m1, &expand_m(&p("1"), 3)).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = type_decompose(&expand_m(&p("1,3|2"), 4)).unwrap();
        assert_eq!(d.element, m(&[("1,3|2", 1)]));
        assert!(!d.partial);
        let x12 = NcPolynomial::word(2, word(&[1, 2])).unwrap();
        assert!(matches!(type_decompose(&x12), Err(Error::NotInvariant(_))));
        let m1 = expand_m(&p("1"), 3);
        let d = type_decompose(&nc_multiply(&m1, &m1).unwrap()).unwrap();
        assert_eq!(d.element, m(&[("1|2", 1), ("1,2", 1)]));
        // degree 3 over two letters loses m_{1|2|3}
        let d = type_decompose(&expand_m(&p("1,2|3"), 2)).unwrap();
        assert!(d.partial);
    }

    #[test]
    fn round_trip() {
        for k in 0..=4 {
            for a in enumerate(k) {
                let d = type_decompose(&expand_m(&a, k + 1)).unwrap();
                assert_eq!(d.element, Element::basis_vector(Basis::M, a.clone()));
            }
        }
    }

    #[test]
    fn pair_alphabet_examples() {
        let t = expand_m_xy(&p("1"), 2, 3).unwrap();
        assert_eq!(t, Tensor::from_terms(Basis::M, Basis::M, [((p("1"), p("1")), BigInt::one())]));
        let t = expand_m_xy(&p("1|2"), 2, 2).unwrap();
        let expected = Tensor::from_terms(
            Basis::M,
            Basis::M,
            [("1|2", "1|2"), ("1|2", "1,2"), ("1,2", "1|2")].map(|(b, c)| ((p(b), p(c)), BigInt::one())),
        );
        assert_eq!(t, expected);
        let t = expand_m_xy(&p("1,2"), 2, 2).unwrap();
        assert_eq!(t, Tensor::from_terms(Basis::M, Basis::M, [((p("1,2"), p("1,2")), BigInt::one())]));
        assert!(matches!(expand_m_xy(&p("1|2|3"), 2, 3), Err(Error::AlphabetTooSmall { needed: 3, got: 2 })));
    }

    #[test]
    fn pair_words_are_lexicographic() {
        let words = expand_m_pairs(&p("1"), 2, 2);
        let letters: Vec<_> = words.iter().map(|w| w.0[0]).collect();
        assert_eq!(letters, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }
}
