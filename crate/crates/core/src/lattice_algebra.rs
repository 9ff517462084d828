//! The commutative semisimple algebras `(kΠ_n, ∧)`, `(kΠ_n, ∨)` and
//! `(kΠ_n, @)` (where `A @ B = δ_{A,B} A`), their simple modules, and the
//! Grothendieck-level operations: tensor `⊙`, induction, restriction and the
//! Frobenius maps into `NCSym`.
//!
//! Every simple module is one-dimensional and determined by its label, so
//! classes are stored as multiplicities on partitions ([`ModuleSum`]) or on
//! ordered pairs of partitions ([`PairModuleSum`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{down_set, join_preimages, meet_preimages, mobius, up_set};
use crate::ncsym::{Basis, Element, Tensor};
use crate::partition::{concat_fiber, enumerate, SetPartition};

/// Which product `kΠ_n` carries.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    /// `A·B = A ∧ B`, unit `1_n`; simple modules `V_A`.
    Meet,
    /// `A·B = A ∨ B`, unit `0_n`; simple modules `W_A`.
    Join,
    /// `A·B = δ_{A,B} A`, no unit; simple modules `U_A`.
    Diag,
}

impl Algebra {
    pub const ALL: [Algebra; 3] = [Algebra::Meet, Algebra::Join, Algebra::Diag];

    /// Product of two basis elements of the same size.
    pub fn basis_product(self, a: &SetPartition, b: &SetPartition) -> Option<SetPartition> {
        match self {
            Algebra::Meet => Some(a.meet_unchecked(b)),
            Algebra::Join => Some(a.join_unchecked(b)),
            Algebra::Diag => (a == b).then(|| a.clone()),
        }
    }

    /// The unit of `kΠ_n`, when there is one.
    pub fn unit(self, n: usize) -> Option<AlgebraElement> {
        match self {
            Algebra::Meet => Some(AlgebraElement::basis(self, SetPartition::top(n))),
            Algebra::Join => Some(AlgebraElement::basis(self, SetPartition::bottom(n))),
            Algebra::Diag => None,
        }
    }

    /// Primitive orthogonal idempotent labelled by `a`:
    /// `e_A = Σ_{B≤A} μ(B,A) B`, `f_A = Σ_{B≥A} μ(A,B) B`, or `A` itself.
    pub fn idempotent(self, a: &SetPartition) -> AlgebraElement {
        let terms: Vec<(SetPartition, BigInt)> = match self {
            Algebra::Meet => down_set(a)
                .into_iter()
                .map(|b| {
                    let c = mobius(&b, a).expect("same size");
                    (b, c)
                })
                .collect(),
            Algebra::Join => up_set(a)
                .into_iter()
                .map(|b| {
                    let c = mobius(a, &b).expect("same size");
                    (b, c)
                })
                .collect(),
            Algebra::Diag => vec![(a.clone(), BigInt::one())],
        };
        AlgebraElement { algebra: self, n: a.size(), terms: terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    /// Scalar by which the basis element `c` acts on the simple module
    /// labelled `a`.
    pub fn act_on_simple(self, c: &SetPartition, a: &SetPartition) -> Result<u8> {
        check_sizes(c, a)?;
        Ok(self.act_unchecked(c, a))
    }

    fn act_unchecked(self, c: &SetPartition, a: &SetPartition) -> u8 {
        (match self {
            Algebra::Meet => a.refines_unchecked(c),
            Algebra::Join => c.refines_unchecked(a),
            Algebra::Diag => a == c,
        }) as u8
    }

    /// Character of the simple module labelled `b` at the basis element `a`.
    pub fn character(self, b: &SetPartition, a: &SetPartition) -> Result<u8> {
        self.act_on_simple(a, b)
    }

    /// `S_A ⊙ S_B`: the simple module `A ∨ B` (meet), `A ∧ B` (join), or
    /// `δ_{A,B} U_A`. Labels of different sizes give the zero class.
    pub fn tensor_simple(self, a: &SetPartition, b: &SetPartition) -> ModuleSum {
        if a.size() != b.size() {
            return ModuleSum::zero(self);
        }
        let label = match self {
            Algebra::Meet => Some(a.join_unchecked(b)),
            Algebra::Join => Some(a.meet_unchecked(b)),
            Algebra::Diag => (a == b).then(|| a.clone()),
        };
        ModuleSum::from_terms(self, label.map(|l| (l, 1)))
    }

    /// `Res_{k,n−k}` of the simple module labelled `a`.
    pub fn restrict(self, k: usize, a: &SetPartition) -> Result<PairModuleSum> {
        let pair = match self {
            Algebra::Meet | Algebra::Diag => a.split(k)?,
            Algebra::Join => Some(a.cut(k)?),
        };
        Ok(PairModuleSum::from_terms(self, pair.map(|p| (p, 1))))
    }

    /// `Δ(S_A) = Σ_k Res_{k,n−k} S_A`.
    pub fn coproduct_restriction(self, a: &SetPartition) -> PairModuleSum {
        let mut out = PairModuleSum::zero(self);
        for k in 0..=a.size() {
            out.add_assign(&self.restrict(k, a).expect("k in range"));
        }
        out
    }

    /// `Ind_{n,m} S_A ⊗ S_B`.
    pub fn induct(self, a: &SetPartition, b: &SetPartition) -> ModuleSum {
        match self {
            Algebra::Meet | Algebra::Diag => ModuleSum::from_terms(self, [(a.concat(b), 1)]),
            Algebra::Join => ModuleSum::from_terms(self, concat_fiber(a, b).into_iter().map(|c| (c, 1))),
        }
    }

    /// Internal coproduct on classes, dual to `⊙`.
    pub fn internal_coproduct(self, c: &SetPartition) -> PairModuleSum {
        let pairs = match self {
            Algebra::Meet => join_preimages(c),
            Algebra::Join => meet_preimages(c),
            Algebra::Diag => vec![(c.clone(), c.clone())],
        };
        PairModuleSum::from_terms(self, pairs.into_iter().map(|p| (p, 1)))
    }

    /// `ρ(ε_A ⊗ ε_B)` computed by concatenating the idempotents, and the
    /// closed form it should equal (`e_{A|B}`, `Σ_{C∧(1|1)=A|B} f_C`, `A|B`).
    pub fn idempotent_concat_identity(
        self,
        a: &SetPartition,
        b: &SetPartition,
    ) -> (AlgebraElement, AlgebraElement) {
        let lhs = self.idempotent(a).concat(&self.idempotent(b)).expect("same algebra");
        let rhs = match self {
            Algebra::Meet | Algebra::Diag => self.idempotent(&a.concat(b)),
            Algebra::Join => concat_fiber(a, b)
                .iter()
                .map(|c| self.idempotent(c))
                .fold(AlgebraElement::zero(self, a.size() + b.size()), |acc, f| {
                    acc.add(&f).expect("same algebra and size")
                }),
        };
        (lhs, rhs)
    }

    /// Writes an idempotent as a sum of primitive idempotents, returning the
    /// class of the projective module it generates.
    pub fn decompose(self, a: &AlgebraElement) -> Result<ModuleSum> {
        if a.algebra != self {
            return Err(tag_mismatch(self, a.algebra));
        }
        let mut out = ModuleSum::zero(self);
        for label in enumerate(a.n) {
            let weight: BigInt =
                a.terms.iter().map(|(b, c)| c * BigInt::from(self.act_unchecked(b, &label))).sum();
            if weight.is_one() {
                out.add_assign(&ModuleSum::from_terms(self, [(label, 1)]));
            } else if !weight.is_zero() {
                return Err(Error::NotIdempotent(format!("weight {weight} on {label}")));
            }
        }
        Ok(out)
    }

    /// Basis of `NCSym` that the simple modules map to under Frobenius.
    pub fn frobenius_basis(self) -> Basis {
        match self {
            Algebra::Meet => Basis::X,
            Algebra::Join => Basis::M,
            Algebra::Diag => Basis::P,
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Algebra::Meet => "meet",
            Algebra::Join => "join",
            Algebra::Diag => "diag",
        })
    }
}

impl FromStr for Algebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "meet" => Ok(Algebra::Meet),
            "join" => Ok(Algebra::Join),
            "diag" => Ok(Algebra::Diag),
            _ => Err(Error::Syntax { input: s.to_string(), reason: "expected meet, join or diag".into() }),
        }
    }
}

fn check_sizes(a: &SetPartition, b: &SetPartition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

fn tag_mismatch(a: Algebra, b: Algebra) -> Error {
    Error::TagMismatch { left: a.to_string(), right: b.to_string() }
}

/// A simple module `V_A`, `W_A` or `U_A`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleModule {
    pub algebra: Algebra,
    pub label: SetPartition,
}

impl SimpleModule {
    pub fn new(algebra: Algebra, label: SetPartition) -> Self {
        SimpleModule { algebra, label }
    }

    pub fn class(&self) -> ModuleSum {
        ModuleSum::from_terms(self.algebra, [(self.label.clone(), 1)])
    }
}

/// An element of `kΠ_n` for one of the three products.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    algebra: Algebra,
    n: usize,
    terms: BTreeMap<SetPartition, BigInt>,
}

impl AlgebraElement {
    pub fn zero(algebra: Algebra, n: usize) -> Self {
        AlgebraElement { algebra, n, terms: BTreeMap::new() }
    }

    pub fn basis(algebra: Algebra, a: SetPartition) -> Self {
        AlgebraElement { algebra, n: a.size(), terms: BTreeMap::from([(a, BigInt::one())]) }
    }

    pub fn from_terms<I>(algebra: Algebra, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SetPartition, BigInt)>,
    {
        let mut acc: HashMap<SetPartition, BigInt> = HashMap::new();
        for (a, c) in terms {
            if a.size() != n {
                return Err(Error::SizeMismatch { left: n, right: a.size() });
            }
            *acc.entry(a).or_default() += c;
        }
        Ok(AlgebraElement { algebra, n, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn size(&self) -> usize {
        self.n
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

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        if self.n != other.n {
            return Err(Error::SizeMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let terms = self.terms.iter().chain(&other.terms).map(|(a, c)| (a.clone(), c.clone()));
        Self::from_terms(self.algebra, self.n, terms)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_terms(self.algebra, self.n, self.terms.iter().map(|(a, c)| (a.clone(), c * k)))
            .expect("sizes preserved")
    }

    /// Product in the algebra.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut acc: HashMap<SetPartition, BigInt> = HashMap::new();
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                if let Some(e) = self.algebra.basis_product(a, b) {
                    *acc.entry(e).or_default() += c * d;
                }
            }
        }
        Self::from_terms(self.algebra, self.n, acc)
    }

    /// `ρ_{n,m}(a ⊗ b)`, the bilinear extension of concatenation.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        let terms = self.terms.iter().flat_map(|(a, c)| {
            other.terms.iter().map(move |(b, d)| (a.concat(b), c * d))
        });
        Self::from_terms(self.algebra, self.n + other.n, terms)
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}<", self.algebra)?;
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*[{a}]")?;
        }
        f.write_str(">")
    }
}

/// A Grothendieck class `Σ mult · S_A` with non-negative multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModuleSum {
    algebra: Algebra,
    terms: BTreeMap<SetPartition, u64>,
}

impl ModuleSum {
    pub fn zero(algebra: Algebra) -> Self {
        ModuleSum { algebra, terms: BTreeMap::new() }
    }

    pub fn simple(algebra: Algebra, a: SetPartition) -> Self {
        Self::from_terms(algebra, [(a, 1)])
    }

    pub fn from_terms<I: IntoIterator<Item = (SetPartition, u64)>>(algebra: Algebra, terms: I) -> Self {
        let mut out = Self::zero(algebra);
        for (a, m) in terms {
            if m > 0 {
                *out.terms.entry(a).or_default() += m;
            }
        }
        out
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<SetPartition, u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, a: &SetPartition) -> u64 {
        self.terms.get(a).copied().unwrap_or(0)
    }

    fn add_assign(&mut self, other: &Self) {
        for (a, m) in &other.terms {
            *self.terms.entry(a.clone()).or_default() += m;
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// Bilinear `⊙`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, |a, b| self.algebra.tensor_simple(a, b))
    }

    /// Bilinear induction product.
    pub fn induct(&self, other: &Self) -> Result<Self> {
        self.bilinear(other, |a, b| self.algebra.induct(a, b))
    }

    fn bilinear(&self, other: &Self, op: impl Fn(&SetPartition, &SetPartition) -> ModuleSum) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        let mut out = Self::zero(self.algebra);
        for (a, m) in &self.terms {
            for (b, k) in &other.terms {
                out.add_assign(&op(a, b).times(m * k));
            }
        }
        Ok(out)
    }

    fn times(&self, k: u64) -> Self {
        Self::from_terms(self.algebra, self.terms.iter().map(|(a, m)| (a.clone(), m * k)))
    }

    pub fn coproduct_restriction(&self) -> PairModuleSum {
        let mut out = PairModuleSum::zero(self.algebra);
        for (a, m) in &self.terms {
            out.add_assign(&self.algebra.coproduct_restriction(a).times(*m));
        }
        out
    }

    pub fn internal_coproduct(&self) -> PairModuleSum {
        let mut out = PairModuleSum::zero(self.algebra);
        for (a, m) in &self.terms {
            out.add_assign(&self.algebra.internal_coproduct(a).times(*m));
        }
        out
    }

    /// Frobenius map: `V_A ↦ x_A`, `W_A ↦ m_A`, `U_A ↦ p_A`.
    pub fn frobenius(&self) -> Element {
        Element::from_terms(
            self.algebra.frobenius_basis(),
            self.terms.iter().map(|(a, m)| (a.clone(), BigInt::from(*m))),
        )
    }
}

/// A class in `G_0 ⊗ G_0`, e.g. the output of restriction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairModuleSum {
    algebra: Algebra,
    terms: BTreeMap<(SetPartition, SetPartition), u64>,
}

impl PairModuleSum {
    pub fn zero(algebra: Algebra) -> Self {
        PairModuleSum { algebra, terms: BTreeMap::new() }
    }

    pub fn from_terms<I>(algebra: Algebra, terms: I) -> Self
    where
        I: IntoIterator<Item = ((SetPartition, SetPartition), u64)>,
    {
        let mut out = Self::zero(algebra);
        for (k, m) in terms {
            if m > 0 {
                *out.terms.entry(k).or_default() += m;
            }
        }
        out
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn terms(&self) -> &BTreeMap<(SetPartition, SetPartition), u64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign(&mut self, other: &Self) {
        for (k, m) in &other.terms {
            *self.terms.entry(k.clone()).or_default() += m;
        }
    }

    fn times(&self, k: u64) -> Self {
        Self::from_terms(self.algebra, self.terms.iter().map(|(p, m)| (p.clone(), m * k)))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    /// Componentwise `⊙`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.componentwise(other, |a, b| self.algebra.tensor_simple(a, b))
    }

    /// Componentwise induction product.
    pub fn induct(&self, other: &Self) -> Result<Self> {
        self.componentwise(other, |a, b| self.algebra.induct(a, b))
    }

    fn componentwise(
        &self,
        other: &Self,
        op: impl Fn(&SetPartition, &SetPartition) -> ModuleSum,
    ) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(tag_mismatch(self.algebra, other.algebra));
        }
        let mut out = Self::zero(self.algebra);
        for ((a, b), m) in &self.terms {
            for ((c, d), k) in &other.terms {
                let left = op(a, c);
                let right = op(b, d);
                for (x, i) in &left.terms {
                    for (y, j) in &right.terms {
                        *out.terms.entry((x.clone(), y.clone())).or_default() += m * k * i * j;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn frobenius(&self) -> Tensor {
        let basis = self.algebra.frobenius_basis();
        Tensor::from_terms(basis, basis, self.terms.iter().map(|(k, m)| (k.clone(), BigInt::from(*m))))
    }
}

/// A pair `x, y` of simple classes where restriction fails to be
/// multiplicative for induction: `Δ(Ind(x ⊗ y)) ≠ Δ(x) · Δ(y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncompatibilityWitness {
    pub left: SetPartition,
    pub right: SetPartition,
    pub coproduct_of_product: PairModuleSum,
    pub product_of_coproducts: PairModuleSum,
}

/// Smallest pair (by total degree, then canonical order) showing that
/// induction and restriction do not form a bialgebra.
pub fn find_ind_res_incompatibility(algebra: Algebra, max_degree: usize) -> Option<IncompatibilityWitness> {
    for total in 0..=max_degree {
        for n in 0..=total {
            for a in enumerate(n) {
                for b in enumerate(total - n) {
                    let lhs = algebra.induct(&a, &b).coproduct_restriction();
                    let rhs = algebra
                        .coproduct_restriction(&a)
                        .induct(&algebra.coproduct_restriction(&b))
                        .expect("same algebra");
                    if lhs != rhs {
                        return Some(IncompatibilityWitness {
                            left: a,
                            right: b,
                            coproduct_of_product: lhs,
                            product_of_coproducts: rhs,
                        });
                    }
                }
            }
        }
    }
    None
}

// JSON layouts.

#[derive(Serialize, Deserialize)]
struct ModuleSumJson {
    algebra: Algebra,
    terms: Vec<ModuleTermJson>,
}

#[derive(Serialize, Deserialize)]
struct ModuleTermJson {
    mult: u64,
    partition: SetPartition,
}

#[derive(Serialize, Deserialize)]
struct PairModuleSumJson {
    algebra: Algebra,
    terms: Vec<PairModuleTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PairModuleTermJson {
    mult: u64,
    left: SetPartition,
    right: SetPartition,
}

#[derive(Serialize, Deserialize)]
struct AlgebraElementJson {
    algebra: Algebra,
    n: usize,
    terms: Vec<AlgebraTermJson>,
}

#[derive(Serialize, Deserialize)]
struct AlgebraTermJson {
    coef: String,
    partition: SetPartition,
}

fn text_key(a: &SetPartition) -> (usize, String) {
    (a.size(), a.to_string())
}

impl Serialize for ModuleSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(a, _)| text_key(a));
        ModuleSumJson {
            algebra: self.algebra,
            terms: terms.into_iter().map(|(a, m)| ModuleTermJson { mult: *m, partition: a.clone() }).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = ModuleSumJson::deserialize(d)?;
        Ok(ModuleSum::from_terms(raw.algebra, raw.terms.into_iter().map(|t| (t.partition, t.mult))))
    }
}

impl Serialize for PairModuleSum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|((a, b), _)| (text_key(a), text_key(b)));
        PairModuleSumJson {
            algebra: self.algebra,
            terms: terms
                .into_iter()
                .map(|((a, b), m)| PairModuleTermJson { mult: *m, left: a.clone(), right: b.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for PairModuleSum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PairModuleSumJson::deserialize(d)?;
        Ok(PairModuleSum::from_terms(raw.algebra, raw.terms.into_iter().map(|t| ((t.left, t.right), t.mult))))
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(a, _)| text_key(a));
        AlgebraElementJson {
            algebra: self.algebra,
            n: self.n,
            terms: terms
                .into_iter()
                .map(|(a, c)| AlgebraTermJson { coef: c.to_string(), partition: a.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = AlgebraElementJson::deserialize(d)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                let c = t.coef.parse::<BigInt>().map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.coef)))?;
                Ok((t.partition, c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        AlgebraElement::from_terms(raw.algebra, raw.n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn alg(algebra: Algebra, terms: &[(&str, i64)]) -> AlgebraElement {
        let n = p(terms[0].0).size();
        AlgebraElement::from_terms(algebra, n, terms.iter().map(|(a, c)| (p(a), BigInt::from(*c)))).unwrap()
    }

    fn basis(algebra: Algebra, a: &str) -> AlgebraElement {
        AlgebraElement::basis(algebra, p(a))
    }

    fn sum(algebra: Algebra, labels: &[&str]) -> ModuleSum {
        ModuleSum::from_terms(algebra, labels.iter().map(|a| (p(a), 1)))
    }

    fn pairs(algebra: Algebra, labels: &[(&str, &str)]) -> PairModuleSum {
        PairModuleSum::from_terms(algebra, labels.iter().map(|(a, b)| ((p(a), p(b)), 1)))
    }

    #[test]
    fn products() {
        for a in enumerate(3) {
            let x = basis(Algebra::Meet, &a.to_string());
            assert_eq!(basis(Algebra::Meet, "1,2,3").multiply(&x).unwrap(), x);
        }
        assert_eq!(basis(Algebra::Join, "1|2").multiply(&basis(Algebra::Join, "1,2")).unwrap(), basis(Algebra::Join, "1,2"));
        assert!(basis(Algebra::Diag, "1|2").multiply(&basis(Algebra::Diag, "1,2")).unwrap().is_zero());
        assert_eq!(basis(Algebra::Diag, "1|2").multiply(&basis(Algebra::Diag, "1|2")).unwrap(), basis(Algebra::Diag, "1|2"));
        assert!(matches!(basis(Algebra::Diag, "1").multiply(&basis(Algebra::Meet, "1")), Err(Error::TagMismatch { .. })));
        assert!(matches!(basis(Algebra::Meet, "1").multiply(&basis(Algebra::Meet, "1,2")), Err(Error::SizeMismatch { .. })));
        assert!(Algebra::Diag.unit(2).is_none());
    }

    #[test]
    fn idempotents() {
        assert_eq!(Algebra::Meet.idempotent(&p("1,2")), alg(Algebra::Meet, &[("1,2", 1), ("1|2", -1)]));
        assert_eq!(Algebra::Join.idempotent(&p("1|2")), alg(Algebra::Join, &[("1|2", 1), ("1,2", -1)]));
        assert_eq!(Algebra::Diag.idempotent(&p("1,3|2")), basis(Algebra::Diag, "1,3|2"));
    }

    #[test]
    fn actions() {
        assert_eq!(Algebra::Meet.act_on_simple(&p("1,2"), &p("1|2")).unwrap(), 1);
        assert_eq!(Algebra::Join.act_on_simple(&p("1,2"), &p("1|2")).unwrap(), 0);
        assert_eq!(Algebra::Meet.act_on_simple(&p("1|2,3"), &p("1,2|3")).unwrap(), 0);
        assert!(Algebra::Meet.act_on_simple(&p("1"), &p("1|2")).is_err());
        assert_eq!(Algebra::Meet.character(&p("1|2"), &p("1,2")).unwrap(), 1);
        assert_eq!(Algebra::Join.character(&p("1|2"), &p("1,2")).unwrap(), 0);
        assert_eq!(Algebra::Diag.character(&p("1|2"), &p("1|2")).unwrap(), 1);
        assert_eq!(Algebra::Diag.character(&p("1|2"), &p("1,2")).unwrap(), 0);
    }

    #[test]
    fn tensors() {
        assert_eq!(Algebra::Meet.tensor_simple(&p("1,2|3"), &p("1|2,3")), sum(Algebra::Meet, &["1,2,3"]));
        assert_eq!(Algebra::Join.tensor_simple(&p("1,2|3"), &p("1|2,3")), sum(Algebra::Join, &["1|2|3"]));
        assert_eq!(Algebra::Diag.tensor_simple(&p("1|2"), &p("1|2")), sum(Algebra::Diag, &["1|2"]));
        assert!(Algebra::Diag.tensor_simple(&p("1|2"), &p("1,2")).is_zero());
        assert!(Algebra::Meet.tensor_simple(&p("1"), &p("1|2")).is_zero());
    }

    #[test]
    fn restrictions() {
        assert!(Algebra::Meet.restrict(1, &p("1,2")).unwrap().is_zero());
        assert_eq!(Algebra::Meet.restrict(1, &p("1|2")).unwrap(), pairs(Algebra::Meet, &[("1", "1")]));
        assert_eq!(Algebra::Join.restrict(1, &p("1,2")).unwrap(), pairs(Algebra::Join, &[("1", "1")]));
        assert!(matches!(Algebra::Join.restrict(3, &p("1,2")), Err(Error::Range { .. })));
        assert_eq!(
            Algebra::Meet.coproduct_restriction(&p("1|2")),
            pairs(Algebra::Meet, &[("e", "1|2"), ("1", "1"), ("1|2", "e")])
        );
        assert_eq!(
            Algebra::Meet.coproduct_restriction(&p("1,2")),
            pairs(Algebra::Meet, &[("e", "1,2"), ("1,2", "e")])
        );
        assert_eq!(Algebra::Meet.coproduct_restriction(&p("e")), pairs(Algebra::Meet, &[("e", "e")]));
    }

    #[test]
    fn inductions() {
        assert_eq!(Algebra::Meet.induct(&p("1"), &p("1")), sum(Algebra::Meet, &["1|2"]));
        assert_eq!(Algebra::Join.induct(&p("1"), &p("1")), sum(Algebra::Join, &["1|2", "1,2"]));
        assert_eq!(Algebra::Meet.induct(&p("1,2"), &p("1")), sum(Algebra::Meet, &["1,2|3"]));
    }

    #[test]
    fn concat_identities() {
        let (l, r) = Algebra::Meet.idempotent_concat_identity(&p("1"), &p("1"));
        assert_eq!(l, r);
        assert_eq!(r, Algebra::Meet.idempotent(&p("1|2")));
        let (l, r) = Algebra::Join.idempotent_concat_identity(&p("1"), &p("1"));
        assert_eq!(l, r);
        let expected = Algebra::Join.idempotent(&p("1|2")).add(&Algebra::Join.idempotent(&p("1,2"))).unwrap();
        assert_eq!(r, expected);
        let (l, r) = Algebra::Diag.idempotent_concat_identity(&p("1,2"), &p("1"));
        assert_eq!((l.clone(), r), (basis(Algebra::Diag, "1,2|3"), basis(Algebra::Diag, "1,2|3")));
    }

    #[test]
    fn frobenius_images() {
        let f = sum(Algebra::Meet, &["1|2"]).frobenius();
        assert_eq!(f, Element::basis_vector(Basis::X, p("1|2")));
        let f = sum(Algebra::Join, &["1,2", "1|2"]).frobenius();
        assert_eq!(
            f,
            Element::from_terms(Basis::M, [(p("1,2"), BigInt::one()), (p("1|2"), BigInt::one())])
        );
    }

    #[test]
    fn decomposition_of_idempotents() {
        let e = Algebra::Meet.idempotent(&p("1,2|3"));
        assert_eq!(Algebra::Meet.decompose(&e).unwrap(), sum(Algebra::Meet, &["1,2|3"]));
        let unit = Algebra::Join.unit(3).unwrap();
        assert_eq!(Algebra::Join.decompose(&unit).unwrap().terms().len(), 5);
        let twice = e.scale(&BigInt::from(2));
        assert!(matches!(Algebra::Meet.decompose(&twice), Err(Error::NotIdempotent(_))));
    }

    #[test]
    fn incompatibility_witness_is_two_singletons() {
        let w = find_ind_res_incompatibility(Algebra::Meet, 4).expect("witness exists");
        assert_eq!((w.left, w.right), (p("1"), p("1")));
        let key = (p("1"), p("1"));
        assert_eq!(w.coproduct_of_product.terms()[&key], 1);
        assert_eq!(w.product_of_coproducts.terms()[&key], 2);
        let w = find_ind_res_incompatibility(Algebra::Join, 4).expect("witness exists");
        assert_eq!(w.left.size() + w.right.size(), 3, "{w:?}");
    }

    #[test]
    fn json_layouts() {
        let s = sum(Algebra::Join, &["1|2", "1,2"]);
        let text = serde_json::to_string(&s).unwrap();
        assert_eq!(text, r#"{"algebra":"join","terms":[{"mult":1,"partition":[[1,2]]},{"mult":1,"partition":[[1],[2]]}]}"#);
        assert_eq!(serde_json::from_str::<ModuleSum>(&text).unwrap(), s);
        let r = pairs(Algebra::Meet, &[("1", "1")]);
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(text, r#"{"algebra":"meet","terms":[{"mult":1,"left":[[1]],"right":[[1]]}]}"#);
        assert_eq!(serde_json::from_str::<PairModuleSum>(&text).unwrap(), r);
        let e = Algebra::Meet.idempotent(&p("1,2"));
        let text = serde_json::to_string(&e).unwrap();
        assert_eq!(serde_json::from_str::<AlgebraElement>(&text).unwrap(), e);
    }
}
