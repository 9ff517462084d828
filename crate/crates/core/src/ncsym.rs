//! `NCSym` in the monomial (`m`), power-sum (`p`) and `x` bases.
//!
//! Structure constants:
//!
//! | basis | product            | `Δ`                         | `Δ⊙`                      |
//! |-------|--------------------|-----------------------------|---------------------------|
//! | `m`   | `Σ_{C∧(1|1)=A|B} m_C` | `Σ_S m_{A_S} ⊗ m_{A_{S^c}}` | `Σ_{B∧C=A} m_B ⊗ m_C`     |
//! | `p`   | `p_{A|B}`          | `Σ_S p_{A_S} ⊗ p_{A_{S^c}}` | `p_A ⊗ p_A`               |
//! | `x`   | `x_{A|B}`          | via `m` only                | `Σ_{B∨C=A} x_B ⊗ x_C`     |
//!
//! with `p_A = Σ_{B≥A} m_B` and `x_A = Σ_{B≤A} μ(B,A) p_B`. All coefficients
//! are exact integers.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{down_set, join_preimages, meet_preimages, mobius, up_set};
use crate::lattice_algebra::AlgebraElement;
use crate::partition::{concat_fiber, enumerate, SetPartition};

/// Which basis an element is expanded in.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    M,
    P,
    X,
}

impl Basis {
    pub const ALL: [Basis; 3] = [Basis::M, Basis::P, Basis::X];
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::M => "m",
            Basis::P => "p",
            Basis::X => "x",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "m" => Ok(Basis::M),
            "p" => Ok(Basis::P),
            "x" => Ok(Basis::X),
            _ => Err(Error::Syntax { input: s.to_string(), reason: "expected m, p or x".into() }),
        }
    }
}

fn mismatch(left: Basis, right: Basis) -> Error {
    Error::BasisMismatch { left: left.to_string(), right: right.to_string() }
}

fn add_into<K: std::hash::Hash + Eq>(acc: &mut HashMap<K, BigInt>, key: K, coef: BigInt) {
    *acc.entry(key).or_insert_with(BigInt::zero) += coef;
}

fn prune<K: Ord>(acc: HashMap<K, BigInt>) -> BTreeMap<K, BigInt> {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

/// Expansion of a single basis vector `from_A` in the `to` basis.
pub fn change_of_basis(from: Basis, to: Basis, a: &SetPartition) -> Vec<(SetPartition, BigInt)> {
    let mob = |lo: &SetPartition, hi: &SetPartition| mobius(lo, hi).expect("same size");
    match (from, to) {
        _ if from == to => vec![(a.clone(), BigInt::one())],
        (Basis::P, Basis::M) => up_set(a).into_iter().map(|b| (b, BigInt::one())).collect(),
        (Basis::M, Basis::P) => up_set(a)
            .into_iter()
            .map(|b| {
                let c = mob(a, &b);
                (b, c)
            })
            .collect(),
        (Basis::X, Basis::P) => down_set(a)
            .into_iter()
            .map(|b| {
                let c = mob(&b, a);
                (b, c)
            })
            .collect(),
        (Basis::P, Basis::X) => down_set(a).into_iter().map(|b| (b, BigInt::one())).collect(),
        // everything else routes through p
        _ => {
            let mut acc = HashMap::new();
            for (b, c) in change_of_basis(from, Basis::P, a) {
                for (d, e) in change_of_basis(Basis::P, to, &b) {
                    add_into(&mut acc, d, &c * e);
                }
            }
            prune(acc).into_iter().collect()
        }
    }
}

/// A finite integer combination of basis vectors of `NCSym`, possibly of
/// mixed degree.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    basis: Basis,
    terms: BTreeMap<SetPartition, BigInt>,
}

impl Element {
    pub fn zero(basis: Basis) -> Self {
        Element { basis, terms: BTreeMap::new() }
    }

    pub fn basis_vector(basis: Basis, a: SetPartition) -> Self {
        Element { basis, terms: BTreeMap::from([(a, BigInt::one())]) }
    }

    /// Sums repeated partitions and drops zero coefficients.
    pub fn from_terms<I>(basis: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = (SetPartition, BigInt)>,
    {
        let mut acc = HashMap::new();
        for (a, c) in terms {
            add_into(&mut acc, a, c);
        }
        Element { basis, terms: prune(acc) }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, a: &SetPartition) -> BigInt {
        self.terms.get(a).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(mismatch(self.basis, other.basis));
        }
        let terms = self.terms.iter().chain(&other.terms).map(|(a, c)| (a.clone(), c.clone()));
        Ok(Self::from_terms(self.basis, terms))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(a, c)| (a.clone(), c * k)))
    }

    /// The degree-`d` component.
    pub fn homogeneous(&self, d: usize) -> Self {
        Element {
            basis: self.basis,
            terms: self.terms.iter().filter(|(a, _)| a.size() == d).map(|(a, c)| (a.clone(), c.clone())).collect(),
        }
    }

    /// Exact change of basis.
    pub fn convert(&self, target: Basis) -> Self {
        if target == self.basis {
            return self.clone();
        }
        let mut acc = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in change_of_basis(self.basis, target, a) {
                add_into(&mut acc, b, c * d);
            }
        }
        Element { basis: target, terms: prune(acc) }
    }

    /// Product in the common basis.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(mismatch(self.basis, other.basis));
        }
        let mut acc = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                let k = c * d;
                match self.basis {
                    Basis::M => {
                        for e in concat_fiber(a, b) {
                            add_into(&mut acc, e, k.clone());
                        }
                    }
                    Basis::P | Basis::X => add_into(&mut acc, a.concat(b), k),
                }
            }
        }
        Ok(Element { basis: self.basis, terms: prune(acc) })
    }

    /// External coproduct `Δ`, splitting the blocks into complementary
    /// subsets. Defined on the `m` and `p` bases.
    pub fn coproduct_external(&self) -> Result<Tensor> {
        if self.basis == Basis::X {
            return Err(Error::UnsupportedBasis { op: "coproduct_external", basis: "x".into() });
        }
        let mut acc = HashMap::new();
        for (a, c) in &self.terms {
            let l = a.num_blocks();
            let mut mask = vec![false; l];
            for bits in 0u64..(1u64 << l) {
                for (j, m) in mask.iter_mut().enumerate() {
                    *m = bits >> j & 1 == 1;
                }
                let left = a.restrict_mask(&mask);
                let comp: Vec<bool> = mask.iter().map(|m| !m).collect();
                let right = a.restrict_mask(&comp);
                add_into(&mut acc, (left, right), c.clone());
            }
        }
        Ok(Tensor { left: self.basis, right: self.basis, terms: prune(acc) })
    }

    /// `Δ` of an `x`-basis element, computed through the `m` basis. No closed
    /// form is known for this one.
    pub fn coproduct_external_x(&self) -> Result<Tensor> {
        if self.basis != Basis::X {
            return Err(mismatch(self.basis, Basis::X));
        }
        Ok(self.convert(Basis::M).coproduct_external()?.convert(Basis::X, Basis::X))
    }

    /// Internal coproduct `Δ⊙`, degree preserving.
    pub fn coproduct_internal(&self) -> Tensor {
        let mut acc = HashMap::new();
        for (a, c) in &self.terms {
            match self.basis {
                Basis::M => {
                    for pair in meet_preimages(a) {
                        add_into(&mut acc, pair, c.clone());
                    }
                }
                Basis::P => add_into(&mut acc, (a.clone(), a.clone()), c.clone()),
                Basis::X => {
                    for pair in join_preimages(a) {
                        add_into(&mut acc, pair, c.clone());
                    }
                }
            }
        }
        Tensor { left: self.basis, right: self.basis, terms: prune(acc) }
    }

    /// `ε`: the coefficient of `m_∅`.
    pub fn counit(&self) -> BigInt {
        // every change of basis fixes the degree-0 vector
        self.coefficient(&SetPartition::empty())
    }

    /// `⟨F, a⟩` with `⟨m_A, B⟩ = [A = B]`.
    pub fn pair(&self, a: &AlgebraElement) -> BigInt {
        let m = self.convert(Basis::M);
        a.terms().iter().map(|(b, c)| m.coefficient(b) * c).sum()
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (a, c)) in sorted_by_text(&self.terms).into_iter().enumerate() {
            write_term(f, i == 0, c)?;
            write!(f, "{}[{a}]", self.basis)?;
        }
        Ok(())
    }
}

fn write_term(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if !c.abs().is_one() {
        write!(f, "{}*", c.abs())?;
    }
    Ok(())
}

/// Terms ordered by degree, then canonical text.
fn sorted_by_text(terms: &BTreeMap<SetPartition, BigInt>) -> Vec<(&SetPartition, &BigInt)> {
    let mut v: Vec<_> = terms.iter().map(|(a, c)| ((a.size(), a.to_string()), a, c)).collect();
    v.sort_by(|x, y| x.0.cmp(&y.0));
    v.into_iter().map(|(_, a, c)| (a, c)).collect()
}

/// An integer combination of `left_A ⊗ right_B`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    left: Basis,
    right: Basis,
    terms: BTreeMap<(SetPartition, SetPartition), BigInt>,
}

impl Tensor {
    pub fn zero(left: Basis, right: Basis) -> Self {
        Tensor { left, right, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(left: Basis, right: Basis, terms: I) -> Self
    where
        I: IntoIterator<Item = ((SetPartition, SetPartition), BigInt)>,
    {
        let mut acc = HashMap::new();
        for (k, c) in terms {
            add_into(&mut acc, k, c);
        }
        Tensor { left, right, terms: prune(acc) }
    }

    /// `a ⊗ b`
    pub fn outer(a: &Element, b: &Element) -> Self {
        let terms = a.terms.iter().flat_map(|(x, c)| {
            b.terms.iter().map(move |(y, d)| ((x.clone(), y.clone()), c * d))
        });
        Self::from_terms(a.basis, b.basis, terms)
    }

    pub fn bases(&self) -> (Basis, Basis) {
        (self.left, self.right)
    }

    pub fn terms(&self) -> &BTreeMap<(SetPartition, SetPartition), BigInt> {
        &self.terms
    }

    pub fn coefficient(&self, a: &SetPartition, b: &SetPartition) -> BigInt {
        self.terms.get(&(a.clone(), b.clone())).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.bases() != other.bases() {
            let (l, r) = if self.left != other.left { (self.left, other.left) } else { (self.right, other.right) };
            return Err(mismatch(l, r));
        }
        let terms = self.terms.iter().chain(&other.terms).map(|(k, c)| (k.clone(), c.clone()));
        Ok(Self::from_terms(self.left, self.right, terms))
    }

    /// Componentwise change of basis, one leg at a time.
    pub fn convert(&self, left: Basis, right: Basis) -> Self {
        let mut cache: HashMap<SetPartition, Vec<(SetPartition, BigInt)>> = HashMap::new();
        let mut acc = HashMap::new();
        for ((a, b), c) in &self.terms {
            let expansion = cache
                .entry(a.clone())
                .or_insert_with(|| change_of_basis(self.left, left, a));
            for (x, d) in expansion.iter() {
                add_into(&mut acc, (x.clone(), b.clone()), c * d);
            }
        }
        let mut cache: HashMap<SetPartition, Vec<(SetPartition, BigInt)>> = HashMap::new();
        let mut out = HashMap::new();
        for ((a, b), c) in prune(acc) {
            let expansion = cache
                .entry(b.clone())
                .or_insert_with(|| change_of_basis(self.right, right, &b));
            for (y, d) in expansion.iter() {
                add_into(&mut out, (a.clone(), y.clone()), &c * d);
            }
        }
        Tensor { left, right, terms: prune(out) }
    }

    /// `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if self.bases() != other.bases() {
            return Err(mismatch(self.left, other.left));
        }
        let mut acc = HashMap::new();
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                let left = Element::basis_vector(self.left, a.clone())
                    .multiply(&Element::basis_vector(self.left, x.clone()))?;
                let right = Element::basis_vector(self.right, b.clone())
                    .multiply(&Element::basis_vector(self.right, y.clone()))?;
                let k = c * d;
                for (l, e) in &left.terms {
                    for (r, f) in &right.terms {
                        add_into(&mut acc, (l.clone(), r.clone()), &k * e * f);
                    }
                }
            }
        }
        Ok(Tensor { left: self.left, right: self.right, terms: prune(acc) })
    }

    /// `⟨T, a ⊗ b⟩` with the product of leg pairings.
    pub fn pair(&self, a: &AlgebraElement, b: &AlgebraElement) -> BigInt {
        let m = self.convert(Basis::M, Basis::M);
        let mut total = BigInt::zero();
        for (x, c) in a.terms() {
            for (y, d) in b.terms() {
                total += m.coefficient(x, y) * c * d;
            }
        }
        total
    }
}

impl fmt::Debug for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, ((a, b), c)) in sorted_pairs_by_text(&self.terms).into_iter().enumerate() {
            write_term(f, i == 0, c)?;
            write!(f, "{}[{a}]⊗{}[{b}]", self.left, self.right)?;
        }
        Ok(())
    }
}

type PairKey = (SetPartition, SetPartition);

fn sorted_pairs_by_text(terms: &BTreeMap<PairKey, BigInt>) -> Vec<(&PairKey, &BigInt)> {
    let mut v: Vec<_> = terms
        .iter()
        .map(|(k, c)| ((k.0.size(), k.0.to_string(), k.1.size(), k.1.to_string()), k, c))
        .collect();
    v.sort_by(|x, y| x.0.cmp(&y.0));
    v.into_iter().map(|(_, k, c)| (k, c)).collect()
}

// JSON: {"basis":"m","terms":[{"coef":"-1","partition":[[1],[2]]}]}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    basis: Basis,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coef: String,
    partition: SetPartition,
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    basis: [Basis; 2],
    terms: Vec<PairTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PairTermJson {
    coef: String,
    left: SetPartition,
    right: SetPartition,
}

fn parse_coef<E: serde::de::Error>(s: &str) -> std::result::Result<BigInt, E> {
    s.parse::<BigInt>().map_err(|_| E::custom(format!("bad coefficient {s:?}")))
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementJson {
            basis: self.basis,
            terms: sorted_by_text(&self.terms)
                .into_iter()
                .map(|(a, c)| TermJson { coef: c.to_string(), partition: a.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ElementJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok((t.partition, parse_coef(&t.coef)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(Element::from_terms(raw.basis, terms))
    }
}

impl Serialize for Tensor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TensorJson {
            basis: [self.left, self.right],
            terms: sorted_pairs_by_text(&self.terms)
                .into_iter()
                .map(|((a, b), c)| PairTermJson { coef: c.to_string(), left: a.clone(), right: b.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Tensor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = TensorJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| Ok(((t.left, t.right), parse_coef(&t.coef)?)))
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Ok(Tensor::from_terms(raw.basis[0], raw.basis[1], terms))
    }
}

/// Rank over `Q` of an integer matrix, by fraction-free elimination.
fn rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, pivot);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let (p, q) = (rows[r][c].clone(), rows[i][c].clone());
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x = &*x * &p - y * &q;
                }
            }
        }
        r += 1;
    }
    r
}

/// Whether some `S(m_1)` of degree at most `max_degree` solves the antipode
/// equation for `Δ⊙` at `m_1`, i.e. `m_1 · S(m_1) = m_∅` (`left = true`) or
/// `S(m_1) · m_1 = m_∅`. `Δ⊙(m_1) = m_1 ⊗ m_1` and the `Δ⊙`-counit of `m_1`
/// is `1`, so these are the two antipode axioms on `m_1`.
pub fn degree_one_antipode_solvable(max_degree: usize, left: bool) -> bool {
    let one = Element::basis_vector(Basis::M, "1".parse().expect("literal"));
    let unknowns: Vec<SetPartition> = (0..=max_degree).flat_map(enumerate).collect();
    let columns: Vec<Element> = unknowns
        .iter()
        .map(|a| {
            let s = Element::basis_vector(Basis::M, a.clone());
            if left { one.multiply(&s) } else { s.multiply(&one) }.expect("same basis")
        })
        .collect();
    let target = Element::basis_vector(Basis::M, SetPartition::empty());
    let mut row_index: BTreeMap<SetPartition, usize> = BTreeMap::new();
    for e in columns.iter().chain(std::iter::once(&target)) {
        for a in e.terms.keys() {
            let next = row_index.len();
            row_index.entry(a.clone()).or_insert(next);
        }
    }
    let build = |with_target: bool| {
        let width = columns.len() + with_target as usize;
        let mut rows = vec![vec![BigInt::zero(); width]; row_index.len()];
        let all = columns.iter().chain(with_target.then_some(&target));
        for (j, e) in all.enumerate() {
            for (a, c) in &e.terms {
                rows[row_index[a]][j] = c.clone();
            }
        }
        rows
    };
    rank(build(false)) == rank(build(true))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn el(basis: Basis, terms: &[(&str, i64)]) -> Element {
        Element::from_terms(basis, terms.iter().map(|(a, c)| (p(a), BigInt::from(*c))))
    }

    fn ten(basis: Basis, terms: &[(&str, &str, i64)]) -> Tensor {
        Tensor::from_terms(basis, basis, terms.iter().map(|(a, b, c)| ((p(a), p(b)), BigInt::from(*c))))
    }

    #[test]
    fn linear_structure() {
        let m1 = Element::basis_vector(Basis::M, p("1"));
        assert_eq!(m1.add(&m1).unwrap(), el(Basis::M, &[("1", 2)]));
        assert!(m1.add(&m1.negate()).unwrap().is_zero());
        let p1 = Element::basis_vector(Basis::P, p("1"));
        assert!(matches!(m1.add(&p1), Err(Error::BasisMismatch { .. })));
        assert!(el(Basis::M, &[("1", 3), ("1", -3)]).is_zero());
    }

    #[test]
    fn conversions() {
        let p12 = Element::basis_vector(Basis::P, p("1|2"));
        assert_eq!(p12.convert(Basis::M), el(Basis::M, &[("1|2", 1), ("1,2", 1)]));
        let x12 = Element::basis_vector(Basis::X, p("1,2"));
        assert_eq!(x12.convert(Basis::M), el(Basis::M, &[("1|2", -1)]));
        let x1 = Element::basis_vector(Basis::X, p("1"));
        for b in Basis::ALL {
            assert_eq!(x1.convert(b), Element::basis_vector(b, p("1")));
        }
    }

    #[test]
    fn products() {
        let m1 = Element::basis_vector(Basis::M, p("1"));
        assert_eq!(m1.multiply(&m1).unwrap(), el(Basis::M, &[("1|2", 1), ("1,2", 1)]));
        let a = el(Basis::P, &[("1,2", 1)]);
        let b = el(Basis::P, &[("1", 1)]);
        assert_eq!(a.multiply(&b).unwrap(), el(Basis::P, &[("1,2|3", 1)]));
        assert!(matches!(m1.multiply(&b), Err(Error::BasisMismatch { .. })));
    }

    #[test]
    fn external_coproduct() {
        let e = SetPartition::empty();
        assert_eq!(
            Element::basis_vector(Basis::M, p("1,2")).coproduct_external().unwrap(),
            ten(Basis::M, &[("e", "1,2", 1), ("1,2", "e", 1)])
        );
        assert_eq!(
            Element::basis_vector(Basis::M, e.clone()).coproduct_external().unwrap(),
            ten(Basis::M, &[("e", "e", 1)])
        );
        assert_eq!(
            Element::basis_vector(Basis::P, p("1|2")).coproduct_external().unwrap(),
            ten(Basis::P, &[("e", "1|2", 1), ("1", "1", 2), ("1|2", "e", 1)])
        );
        assert!(Element::basis_vector(Basis::X, p("1")).coproduct_external().is_err());
    }

    #[test]
    fn external_coproduct_in_x() {
        let x = |s: &str| Element::basis_vector(Basis::X, p(s));
        assert_eq!(x("e").coproduct_external_x().unwrap(), ten(Basis::X, &[("e", "e", 1)]));
        assert_eq!(x("1").coproduct_external_x().unwrap(), ten(Basis::X, &[("e", "1", 1), ("1", "e", 1)]));
    }

    #[test]
    fn internal_coproduct() {
        assert_eq!(
            Element::basis_vector(Basis::M, p("1|2")).coproduct_internal(),
            ten(Basis::M, &[("1|2", "1|2", 1), ("1|2", "1,2", 1), ("1,2", "1|2", 1)])
        );
        assert_eq!(
            Element::basis_vector(Basis::X, p("1,2")).coproduct_internal(),
            ten(Basis::X, &[("1,2", "1,2", 1), ("1,2", "1|2", 1), ("1|2", "1,2", 1)])
        );
        // the x rule agrees with the m computation
        let x12 = Element::basis_vector(Basis::X, p("1,2"));
        assert_eq!(
            x12.convert(Basis::M).coproduct_internal().convert(Basis::X, Basis::X),
            x12.coproduct_internal()
        );
    }

    #[test]
    fn counit_values() {
        assert_eq!(Element::basis_vector(Basis::M, SetPartition::empty()).counit(), BigInt::one());
        assert!(Element::basis_vector(Basis::M, p("1,2")).counit().is_zero());
        assert_eq!(el(Basis::P, &[("1", 1), ("e", 3)]).counit(), BigInt::from(3));
    }

    #[test]
    fn json_layout() {
        let e = el(Basis::M, &[("1,2", 1), ("1|2", -1), ("1", 12)]);
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(
            text,
            r#"{"basis":"m","terms":[{"coef":"12","partition":[[1]]},{"coef":"1","partition":[[1,2]]},{"coef":"-1","partition":[[1],[2]]}]}"#
        );
        let back: Element = serde_json::from_str(&text).unwrap();
        assert_eq!(back, e);
        let t = ten(Basis::P, &[("e", "1", 2)]);
        let text = serde_json::to_string(&t).unwrap();
        assert_eq!(text, r#"{"basis":["p","p"],"terms":[{"coef":"2","left":[],"right":[[1]]}]}"#);
        assert_eq!(serde_json::from_str::<Tensor>(&text).unwrap(), t);
    }

    #[test]
    fn display() {
        let e = el(Basis::X, &[("1,2", 1), ("1|2", -2)]);
        assert_eq!(e.to_string(), "x[1,2] - 2*x[1|2]");
        assert_eq!(Element::zero(Basis::M).to_string(), "0");
    }

    #[test]
    fn no_antipode_for_internal_coproduct() {
        for d in 0..=3 {
            assert!(!degree_one_antipode_solvable(d, true));
            assert!(!degree_one_antipode_solvable(d, false));
        }
    }

    #[test]
    fn rank_sanity() {
        let r = |rows: Vec<Vec<i64>>| rank(rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect());
        assert_eq!(r(vec![vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(r(vec![vec![1, 2], vec![3, 4]]), 2);
        assert_eq!(r(vec![vec![0, 0], vec![0, 0]]), 0);
    }
}
