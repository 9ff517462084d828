//! Set partitions of `{1..n}` and the combinatorial operations on them.
//!
//! A [`SetPartition`] is stored as its restricted growth string: position `i`
//! holds the zero-based index of the block containing element `i + 1`, and
//! blocks are numbered in order of their smallest element. That string is a
//! canonical form, so derived equality and hashing are structural.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A set partition `A ∈ Π_n` in canonical (restricted growth string) form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetPartition {
    rgs: Vec<u32>,
    blocks: u32,
}

impl SetPartition {
    /// The empty partition of the empty set, the unit of [`concat`](Self::concat).
    pub fn empty() -> Self {
        SetPartition { rgs: Vec::new(), blocks: 0 }
    }

    /// `0_n`, the partition into singletons.
    pub fn bottom(n: usize) -> Self {
        SetPartition { rgs: (0..n as u32).collect(), blocks: n as u32 }
    }

    /// `1_n`, the partition with a single block (empty for `n = 0`).
    pub fn top(n: usize) -> Self {
        SetPartition { rgs: vec![0; n], blocks: (n > 0) as u32 }
    }

    /// Builds a partition from a restricted growth string, validating it.
    pub fn from_rgs(rgs: Vec<u32>) -> Result<Self> {
        let mut next = 0u32;
        for (i, &r) in rgs.iter().enumerate() {
            if r > next {
                return Err(Error::Syntax {
                    input: format!("{rgs:?}"),
                    reason: format!("position {i} jumps to block {r}"),
                });
            }
            if r == next {
                next += 1;
            }
        }
        Ok(SetPartition { rgs, blocks: next })
    }

    /// Canonicalizes an arbitrary sequence of block labels. Positions with
    /// equal labels share a block; labels must be smaller than `bound`.
    pub(crate) fn from_labels(labels: &[u32], bound: usize) -> Self {
        let mut table = vec![u32::MAX; bound];
        let mut next = 0u32;
        let rgs = labels
            .iter()
            .map(|&l| {
                let slot = &mut table[l as usize];
                if *slot == u32::MAX {
                    *slot = next;
                    next += 1;
                }
                *slot
            })
            .collect();
        SetPartition { rgs, blocks: next }
    }

    /// Builds the canonical partition from disjoint non-empty blocks whose
    /// union is `{1..n}`.
    pub fn from_blocks<B, I>(blocks: B) -> Result<Self>
    where
        B: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        let blocks: Vec<Vec<u32>> = blocks.into_iter().map(|b| b.into_iter().collect()).collect();
        let mut owner: Vec<Option<u32>> = Vec::new();
        for (j, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::Gap(format!("block {} is empty", j + 1)));
            }
            for &e in block {
                if e == 0 {
                    return Err(Error::Gap("element 0 is not allowed".into()));
                }
                let idx = e as usize - 1;
                if idx >= owner.len() {
                    owner.resize(idx + 1, None);
                }
                if owner[idx].is_some() {
                    return Err(Error::Overlap(e));
                }
                owner[idx] = Some(j as u32);
            }
        }
        let labels = owner
            .iter()
            .enumerate()
            .map(|(i, o)| o.ok_or_else(|| Error::Gap(format!("element {} is missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_labels(&labels, blocks.len()))
    }

    /// Size `n` of the ground set.
    pub fn size(&self) -> usize {
        self.rgs.len()
    }

    /// Number of blocks `ℓ(A)`.
    pub fn num_blocks(&self) -> usize {
        self.blocks as usize
    }

    pub fn is_empty(&self) -> bool {
        self.rgs.is_empty()
    }

    /// The restricted growth string (zero-based block index per element).
    pub fn rgs(&self) -> &[u32] {
        &self.rgs
    }

    /// Blocks as sorted one-based element lists, ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &r) in self.rgs.iter().enumerate() {
            out[r as usize].push(i as u32 + 1);
        }
        out
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch { left: self.size(), right: other.size() });
        }
        Ok(())
    }

    /// `A ≤ B`: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> Result<bool> {
        self.check_size(other)?;
        Ok(self.refines_unchecked(other))
    }

    pub(crate) fn refines_unchecked(&self, other: &Self) -> bool {
        let mut image = vec![u32::MAX; self.num_blocks()];
        for (&a, &b) in self.rgs.iter().zip(&other.rgs) {
            let slot = &mut image[a as usize];
            if *slot == u32::MAX {
                *slot = b;
            } else if *slot != b {
                return false;
            }
        }
        true
    }

    /// Greatest lower bound: the non-empty pairwise block intersections.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(self.meet_unchecked(other))
    }

    pub(crate) fn meet_unchecked(&self, other: &Self) -> Self {
        let width = other.blocks.max(1);
        let labels: Vec<u32> =
            self.rgs.iter().zip(&other.rgs).map(|(&a, &b)| a * width + b).collect();
        Self::from_labels(&labels, (self.blocks * width) as usize)
    }

    /// Least upper bound, by union-find closure over the blocks of both.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Self) -> Self {
        let n = self.size();
        let mut dsu = DisjointSets::new(n);
        for p in [self, other] {
            let mut first = vec![u32::MAX; p.num_blocks()];
            for (i, &r) in p.rgs.iter().enumerate() {
                let slot = &mut first[r as usize];
                if *slot == u32::MAX {
                    *slot = i as u32;
                } else {
                    dsu.union(*slot as usize, i);
                }
            }
        }
        let labels: Vec<u32> = (0..n).map(|i| dsu.find(i) as u32).collect();
        Self::from_labels(&labels, n)
    }

    /// `A|B`: the blocks of `self` followed by the blocks of `other` shifted by `|A|`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut rgs = Vec::with_capacity(self.size() + other.size());
        rgs.extend_from_slice(&self.rgs);
        rgs.extend(other.rgs.iter().map(|&r| r + self.blocks));
        SetPartition { rgs, blocks: self.blocks + other.blocks }
    }

    /// Inverse of [`concat`](Self::concat) at position `k`: `Some((B, C))` with
    /// `A = B|C` and `|B| = k`, or `None` when a block crosses the cut.
    pub fn split(&self, k: usize) -> Result<Option<(Self, Self)>> {
        if k > self.size() {
            return Err(Error::Range { k, n: self.size() });
        }
        let head = SetPartition::from_rgs(self.rgs[..k].to_vec()).expect("prefix of an rgs");
        if self.rgs[k..].iter().any(|&r| r < head.blocks) {
            return Ok(None);
        }
        let tail = SetPartition {
            rgs: self.rgs[k..].iter().map(|&r| r - head.blocks).collect(),
            blocks: self.blocks - head.blocks,
        };
        Ok(Some((head, tail)))
    }

    /// The pair `(B, C)` with `A ∧ (1_k|1_{n−k}) = B|C`.
    pub fn cut(&self, k: usize) -> Result<(Self, Self)> {
        if k > self.size() {
            return Err(Error::Range { k, n: self.size() });
        }
        let halves = SetPartition::top(k).concat(&SetPartition::top(self.size() - k));
        let (b, c) = self.meet_unchecked(&halves).split(k)?.expect("meet with 1_k|1_m splits");
        Ok((b, c))
    }

    /// `A_S`: standardization of the blocks with one-based indices in `indices`.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let mut chosen = vec![false; self.num_blocks()];
        for &i in indices {
            if i == 0 || i > self.num_blocks() {
                return Err(Error::Index { index: i, len: self.num_blocks() });
            }
            chosen[i - 1] = true;
        }
        Ok(self.restrict_mask(&chosen))
    }

    /// `A_S` for a selection mask over the blocks.
    pub(crate) fn restrict_mask(&self, chosen: &[bool]) -> Self {
        let labels: Vec<u32> =
            self.rgs.iter().copied().filter(|&r| chosen[r as usize]).collect();
        Self::from_labels(&labels, self.num_blocks())
    }

    /// Block sizes sorted weakly decreasing.
    pub fn shape(&self) -> Shape {
        let mut sizes = vec![0usize; self.num_blocks()];
        for &r in &self.rgs {
            sizes[r as usize] += 1;
        }
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Shape(sizes)
    }
}

impl Ord for SetPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.rgs.cmp(&other.rgs))
    }
}

impl PartialOrd for SetPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("e");
        }
        for (j, block) in self.blocks().iter().enumerate() {
            if j > 0 {
                f.write_str("|")?;
            }
            for (k, e) in block.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

/// Parses the block grammar `e | int(,int)*(|int(,int)*)*` into raw blocks,
/// without checking disjointness or coverage.
pub fn parse_blocks(text: &str) -> Result<Vec<Vec<u32>>> {
    let syntax = |reason: &str| Error::Syntax { input: text.to_string(), reason: reason.to_string() };
    if text == "e" {
        return Ok(Vec::new());
    }
    if text.is_empty() {
        return Err(syntax("empty input"));
    }
    text.split('|')
        .map(|block| {
            block
                .split(',')
                .map(|tok| {
                    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                        return Err(syntax(&format!("bad element {tok:?}")));
                    }
                    tok.parse::<u32>().map_err(|_| syntax(&format!("element {tok:?} out of range")))
                })
                .collect()
        })
        .collect()
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SetPartition::from_blocks(parse_blocks(s)?)
    }
}

impl Serialize for SetPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.blocks().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SetPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let blocks = Vec::<Vec<u32>>::deserialize(deserializer)?;
        SetPartition::from_blocks(blocks).map_err(serde::de::Error::custom)
    }
}

/// The integer partition `λ(A)` of block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Shape(Vec<usize>);

impl Shape {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(λ)`
    pub fn length(&self) -> usize {
        self.0.len()
    }

    /// `n_i(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect() }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut root = i;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = i;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // Smaller root wins so roots stay deterministic.
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// Bell number `B_n`, from `B_n = Σ_{i<n} C(n−1, i) B_i`.
pub fn bell(n: usize) -> BigUint {
    let mut bells: Vec<BigUint> = vec![BigUint::one()];
    for m in 1..=n {
        // binomial row C(m-1, i)
        let mut binom = BigUint::one();
        let mut total = BigUint::default();
        for (i, b) in bells.iter().enumerate() {
            total += &binom * b;
            binom = binom * BigUint::from(m - 1 - i) / BigUint::from(i + 1);
        }
        bells.push(total);
    }
    bells.swap_remove(n)
}

/// Iterator over `Π_n` in lexicographic order of restricted growth strings.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        let rgs = self.current.take()?;
        let out = SetPartition::from_rgs(rgs.clone()).expect("generator yields valid strings");
        // prefix maxima
        let mut maxima = Vec::with_capacity(rgs.len());
        let mut m = 0;
        for &r in &rgs {
            m = m.max(r);
            maxima.push(m);
        }
        let mut next = rgs;
        for i in (1..next.len()).rev() {
            if next[i] <= maxima[i - 1] {
                next[i] += 1;
                for r in &mut next[i + 1..] {
                    *r = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

/// All of `Π_n`, in lexicographic order of restricted growth strings.
pub fn enumerate(n: usize) -> Partitions {
    Partitions { current: Some(vec![0; n]) }
}

/// `∇(i_1..i_m)`: positions share a block iff they carry equal values.
pub fn type_of(seq: &[u32]) -> SetPartition {
    let mut seen: HashMap<u32, u32> = HashMap::new();
    let labels: Vec<u32> = seq
        .iter()
        .map(|v| {
            let next = seen.len() as u32;
            *seen.entry(*v).or_insert(next)
        })
        .collect();
    SetPartition::from_labels(&labels, labels.len())
}

/// `st(sets)`: lowers the values order-preservingly onto `{1..m}`.
pub fn standardize<B, I>(sets: B) -> Result<SetPartition>
where
    B: IntoIterator<Item = I>,
    I: IntoIterator<Item = u32>,
{
    let sets: Vec<Vec<u32>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
    let mut values: Vec<u32> = sets.iter().flatten().copied().collect();
    values.sort_unstable();
    if let Some(w) = values.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::Overlap(w[0]));
    }
    let rank = |v: u32| values.binary_search(&v).expect("value present") as u32 + 1;
    SetPartition::from_blocks(sets.iter().map(|s| s.iter().map(|&v| rank(v)).collect::<Vec<_>>()))
}

/// Every `C ∈ Π_{n+m}` with `C ∧ (1_n|1_m) = A|B`: each block of `A` is
/// merged with at most one block of `B`.
pub fn concat_fiber(a: &SetPartition, b: &SetPartition) -> Vec<SetPartition> {
    let mut out = Vec::new();
    let mut matched = vec![u32::MAX; b.num_blocks()];
    let mut used = vec![false; a.num_blocks()];
    fn rec(
        j: usize,
        a: &SetPartition,
        b: &SetPartition,
        matched: &mut [u32],
        used: &mut [bool],
        out: &mut Vec<SetPartition>,
    ) {
        let (la, lb) = (a.num_blocks(), b.num_blocks());
        if j == lb {
            let labels: Vec<u32> = a
                .rgs()
                .iter()
                .copied()
                .chain(b.rgs().iter().map(|&r| {
                    let m = matched[r as usize];
                    if m == u32::MAX {
                        la as u32 + r
                    } else {
                        m
                    }
                }))
                .collect();
            out.push(SetPartition::from_labels(&labels, la + lb));
            return;
        }
        matched[j] = u32::MAX;
        rec(j + 1, a, b, matched, used, out);
        for i in 0..la {
            if !used[i] {
                used[i] = true;
                matched[j] = i as u32;
                rec(j + 1, a, b, matched, used, out);
                used[i] = false;
            }
        }
        matched[j] = u32::MAX;
    }
    rec(0, a, b, &mut matched, &mut used, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn from_blocks_reorders_by_minimum() {
        let a = SetPartition::from_blocks(vec![vec![2], vec![1, 3, 5], vec![4]]).unwrap();
        assert_eq!(a.to_string(), "1,3,5|2|4");
        assert_eq!(a.num_blocks(), 3);
        let e = SetPartition::from_blocks(Vec::<Vec<u32>>::new()).unwrap();
        assert!(e.is_empty());
        assert_eq!(
            SetPartition::from_blocks(vec![vec![1, 3], vec![2], vec![3]]),
            Err(Error::Overlap(3))
        );
        assert!(matches!(SetPartition::from_blocks(vec![vec![1, 3]]), Err(Error::Gap(_))));
    }

    #[test]
    fn enumerate_small() {
        let zero: Vec<_> = enumerate(0).collect();
        assert_eq!(zero, vec![SetPartition::empty()]);
        let two: Vec<String> = enumerate(2).map(|a| a.to_string()).collect();
        // rgs 00 then 01
        assert_eq!(two, vec!["1,2", "1|2"]);
        assert_eq!(enumerate(4).count(), 15);
    }

    #[test]
    fn bell_values() {
        assert_eq!(bell(0), BigUint::from(1u32));
        assert_eq!(bell(3), BigUint::from(5u32));
        assert_eq!(bell(6), BigUint::from(203u32));
    }

    #[test]
    fn refinement() {
        assert!(p("1|2|3").refines(&p("1,2,3")).unwrap());
        assert!(!p("1,2|3").refines(&p("1,3|2")).unwrap());
        assert!(p("1,3|2").refines(&p("1,3|2")).unwrap());
        assert!(matches!(p("1").refines(&p("1,2")), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn meet_and_join_worked_example() {
        let a = p("1,3,8|2,4|5|6,7");
        let b = p("1|2,3,8|4,5,6,7");
        assert_eq!(a.meet(&b).unwrap().to_string(), "1|2|3,8|4|5|6,7");
        assert_eq!(a.join(&b).unwrap().to_string(), "1,2,3,4,5,6,7,8");
        assert_eq!(a.meet(&a).unwrap(), a);
        assert_eq!(a.join(&a).unwrap(), a);
        assert_eq!(a.meet(&SetPartition::bottom(8)).unwrap(), SetPartition::bottom(8));
        assert_eq!(a.join(&SetPartition::top(8)).unwrap(), SetPartition::top(8));
    }

    #[test]
    fn concat_and_split() {
        assert_eq!(p("1|2").concat(&p("1,2")).to_string(), "1|2|3,4");
        assert_eq!(p("1,2").concat(&SetPartition::empty()), p("1,2"));
        assert_eq!(p("1,2").concat(&p("1")).to_string(), "1,2|3");
        assert_eq!(p("1").concat(&p("1,2")).to_string(), "1|2,3");
        assert_eq!(p("1|2|3,4").split(2).unwrap(), Some((p("1|2"), p("1,2"))));
        assert_eq!(p("1,3|2").split(1).unwrap(), None);
        assert_eq!(p("1,3|2").split(0).unwrap(), Some((SetPartition::empty(), p("1,3|2"))));
        assert_eq!(p("1,3|2").split(3).unwrap(), Some((p("1,3|2"), SetPartition::empty())));
        assert!(matches!(p("1,3|2").split(4), Err(Error::Range { .. })));
    }

    #[test]
    fn cut_meets_with_halves() {
        assert_eq!(p("1,2").cut(1).unwrap(), (p("1"), p("1")));
        assert_eq!(p("1,3|2,4").cut(2).unwrap(), (p("1|2"), p("1|2")));
    }

    #[test]
    fn standardize_and_restrict() {
        let s = standardize(vec![vec![1, 3, 6, 8], vec![5, 7, 9]]).unwrap();
        assert_eq!(s.to_string(), "1,2,4,6|3,5,7");
        assert_eq!(standardize(p("1,3|2").blocks()).unwrap(), p("1,3|2"));
        assert!(standardize(Vec::<Vec<u32>>::new()).unwrap().is_empty());
        assert_eq!(standardize(vec![vec![1, 2], vec![2]]), Err(Error::Overlap(2)));

        let a = p("1,3,6,8|2|4|5,7,9");
        assert_eq!(a.restrict(&[1, 4]).unwrap().to_string(), "1,2,4,6|3,5,7");
        assert_eq!(a.restrict(&[1, 2, 3, 4]).unwrap(), a);
        assert!(a.restrict(&[]).unwrap().is_empty());
        assert_eq!(a.restrict(&[5]), Err(Error::Index { index: 5, len: 4 }));
    }

    #[test]
    fn types_of_sequences() {
        assert_eq!(type_of(&[1, 2, 1]).to_string(), "1,3|2");
        assert_eq!(type_of(&[7, 7, 7]).to_string(), "1,2,3");
        assert_eq!(type_of(&[3, 1, 4, 1]).to_string(), "1|2,4|3");
        assert!(type_of(&[]).is_empty());
    }

    #[test]
    fn shapes() {
        assert_eq!(p("1,3,5|2|4").shape().parts(), &[3, 1, 1]);
        assert_eq!(SetPartition::empty().shape().parts(), &[] as &[usize]);
        assert_eq!(p("1,2,3,4").shape().parts(), &[4]);
        assert_eq!(p("1,3,5|2|4").shape().multiplicity(1), 2);
    }

    #[test]
    fn text_format() {
        assert_eq!(p("1,3,5|2|4").to_string(), "1,3,5|2|4");
        assert_eq!(p("e"), SetPartition::empty());
        assert_eq!(SetPartition::empty().to_string(), "e");
        assert_eq!(p("2|1").to_string(), "1|2");
        assert_eq!(p("10,1|2,3,4,5,6,7,8,9").to_string(), "1,10|2,3,4,5,6,7,8,9");
        for bad in ["", "1,,2", "1|", " 1", "1;2", "-1", "a"] {
            assert!(matches!(bad.parse::<SetPartition>(), Err(Error::Syntax { .. })), "{bad}");
        }
        assert!(matches!("1,2|2".parse::<SetPartition>(), Err(Error::Overlap(2))));
        assert!(matches!("1|3".parse::<SetPartition>(), Err(Error::Gap(_))));
    }

    #[test]
    fn json_form() {
        let a = p("1,3,5|2|4");
        assert_eq!(serde_json::to_string(&a).unwrap(), "[[1,3,5],[2],[4]]");
        assert_eq!(serde_json::to_string(&SetPartition::empty()).unwrap(), "[]");
        let back: SetPartition = serde_json::from_str("[[4],[2],[1,3,5]]").unwrap();
        assert_eq!(back, a);
        assert!(serde_json::from_str::<SetPartition>("[[1],[1]]").is_err());
    }

    #[test]
    fn concat_fiber_matches_filter() {
        for n in 0..=3 {
            for m in 0..=3 {
                let halves = SetPartition::top(n).concat(&SetPartition::top(m));
                for a in enumerate(n) {
                    for b in enumerate(m) {
                        let target = a.concat(&b);
                        let brute: Vec<_> = enumerate(n + m)
                            .filter(|c| c.meet(&halves).unwrap() == target)
                            .collect();
                        assert_eq!(concat_fiber(&a, &b), brute, "{a:?} {b:?}");
                    }
                }
            }
        }
    }
}
