//! Intervals and the Möbius function of the partition lattice.
//!
//! An interval `[B, A]` of `Π_n` is isomorphic to `Π_{b_1} × … × Π_{b_k}`
//! where `b_j` counts the blocks of `B` inside block `j` of `A`. The sorted
//! multiset of those counts ([`IntervalProfile`]) determines `μ(B, A)`, and is
//! the memo key of the recursive evaluation.

use std::collections::HashMap;
use std::sync::{LazyLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{enumerate, SetPartition};

/// Sizes `b_1 ≥ b_2 ≥ …` of the factors in `[B, A] ≅ Π_{b_1} × Π_{b_2} × …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalProfile(Vec<usize>);

impl IntervalProfile {
    /// Profile of `[lower, upper]`; fails unless `lower ≤ upper`.
    pub fn new(lower: &SetPartition, upper: &SetPartition) -> Result<Self> {
        check_sizes(lower, upper)?;
        if !lower.refines_unchecked(upper) {
            return Err(not_comparable(lower, upper));
        }
        Ok(Self::of_comparable(lower, upper))
    }

    fn of_comparable(lower: &SetPartition, upper: &SetPartition) -> Self {
        let mut counts = vec![0usize; upper.num_blocks()];
        let mut seen = vec![false; lower.num_blocks()];
        for (&b, &a) in lower.rgs().iter().zip(upper.rgs()) {
            if !seen[b as usize] {
                seen[b as usize] = true;
                counts[a as usize] += 1;
            }
        }
        counts.sort_unstable_by(|x, y| y.cmp(x));
        IntervalProfile(counts)
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }
}

fn check_sizes(a: &SetPartition, b: &SetPartition) -> Result<()> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { left: a.size(), right: b.size() });
    }
    Ok(())
}

fn not_comparable(lower: &SetPartition, upper: &SetPartition) -> Error {
    Error::NotComparable { lower: lower.to_string(), upper: upper.to_string() }
}

static MOBIUS_CACHE: LazyLock<RwLock<HashMap<IntervalProfile, BigInt>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `μ(lower, upper)` by the recursion `μ(B,B) = 1`, `μ(B,A) = −Σ_{B≤C<A} μ(B,C)`,
/// memoized on the interval profile. Returns zero when `lower ≰ upper`.
pub fn mobius(lower: &SetPartition, upper: &SetPartition) -> Result<BigInt> {
    check_sizes(lower, upper)?;
    if !lower.refines_unchecked(upper) {
        return Ok(BigInt::zero());
    }
    Ok(mobius_memo(lower, upper))
}

fn mobius_memo(lower: &SetPartition, upper: &SetPartition) -> BigInt {
    if lower == upper {
        return BigInt::one();
    }
    let key = IntervalProfile::of_comparable(lower, upper);
    if let Some(v) = MOBIUS_CACHE.read().expect("mobius cache poisoned").get(&key) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for c in interval_unchecked(lower, upper) {
        if &c != upper {
            total -= mobius_memo(lower, &c);
        }
    }
    // Racing writers compute the same value, so either insert is fine.
    MOBIUS_CACHE.write().expect("mobius cache poisoned").insert(key, total.clone());
    total
}

/// Same recursion as [`mobius`] with no shared cache: a bottom-up pass over
/// the interval with a call-local table.
pub fn mobius_uncached(lower: &SetPartition, upper: &SetPartition) -> Result<BigInt> {
    check_sizes(lower, upper)?;
    if !lower.refines_unchecked(upper) {
        return Ok(BigInt::zero());
    }
    let mut elems = interval_unchecked(lower, upper);
    // rank order: coarser elements have fewer blocks
    elems.sort_by(|x, y| y.num_blocks().cmp(&x.num_blocks()).then_with(|| x.cmp(y)));
    let mut values: HashMap<&SetPartition, BigInt> = HashMap::new();
    for c in &elems {
        let v = if c == lower {
            BigInt::one()
        } else {
            -values
                .iter()
                .filter(|(d, _)| **d != c && d.refines_unchecked(c))
                .map(|(_, v)| v)
                .sum::<BigInt>()
        };
        values.insert(c, v);
    }
    Ok(values.remove(upper).expect("upper is in its own interval"))
}

/// Drops every memoized Möbius value.
pub fn clear_mobius_cache() {
    MOBIUS_CACHE.write().expect("mobius cache poisoned").clear();
}

/// Closed form `Π_j (−1)^{b_j−1} (b_j−1)!` over the interval profile.
pub fn mobius_product_form(lower: &SetPartition, upper: &SetPartition) -> Result<BigInt> {
    let profile = IntervalProfile::new(lower, upper)?;
    let mut value = BigInt::one();
    for &b in profile.counts() {
        for f in 1..b {
            value *= f;
        }
        if b % 2 == 0 {
            value = -value;
        }
    }
    Ok(value)
}

/// All `C` with `lower ≤ C ≤ upper`, sorted; empty when `lower ≰ upper`.
pub fn interval(lower: &SetPartition, upper: &SetPartition) -> Result<Vec<SetPartition>> {
    check_sizes(lower, upper)?;
    if !lower.refines_unchecked(upper) {
        return Ok(Vec::new());
    }
    Ok(interval_unchecked(lower, upper))
}

const FILTER_LIMIT: usize = 6;

pub(crate) fn interval_unchecked(lower: &SetPartition, upper: &SetPartition) -> Vec<SetPartition> {
    if lower.size() <= FILTER_LIMIT {
        interval_by_filter(lower, upper)
    } else {
        interval_by_product(lower, upper)
    }
}

fn interval_by_filter(lower: &SetPartition, upper: &SetPartition) -> Vec<SetPartition> {
    enumerate(lower.size())
        .filter(|c| lower.refines_unchecked(c) && c.refines_unchecked(upper))
        .collect()
}

/// Enumerates `[lower, upper]` as a product: independently partition the
/// blocks of `lower` that fall inside each block of `upper`.
fn interval_by_product(lower: &SetPartition, upper: &SetPartition) -> Vec<SetPartition> {
    // lower-blocks grouped by their upper-block
    let mut groups: Vec<Vec<u32>> = vec![Vec::new(); upper.num_blocks()];
    let mut seen = vec![false; lower.num_blocks()];
    for (&b, &a) in lower.rgs().iter().zip(upper.rgs()) {
        if !seen[b as usize] {
            seen[b as usize] = true;
            groups[a as usize].push(b);
        }
    }
    let factors: Vec<Vec<SetPartition>> = groups.iter().map(|g| enumerate(g.len()).collect()).collect();
    let mut out = Vec::new();
    let mut choice = vec![0usize; groups.len()];
    let mut label_of = vec![0u32; lower.num_blocks()];
    loop {
        // merged label: (group, block of the chosen factor partition)
        for (g, members) in groups.iter().enumerate() {
            let part = &factors[g][choice[g]];
            for (pos, &b) in members.iter().enumerate() {
                label_of[b as usize] = (g * lower.num_blocks()) as u32 + part.rgs()[pos];
            }
        }
        let labels: Vec<u32> = lower.rgs().iter().map(|&b| label_of[b as usize]).collect();
        out.push(SetPartition::from_labels(&labels, groups.len() * lower.num_blocks().max(1)));
        // odometer
        let mut g = 0;
        while g < groups.len() {
            choice[g] += 1;
            if choice[g] < factors[g].len() {
                break;
            }
            choice[g] = 0;
            g += 1;
        }
        if g == groups.len() {
            break;
        }
    }
    out.sort();
    out
}

/// `[A, 1_n]`
pub fn up_set(a: &SetPartition) -> Vec<SetPartition> {
    interval_unchecked(a, &SetPartition::top(a.size()))
}

/// `[0_n, A]`
pub fn down_set(a: &SetPartition) -> Vec<SetPartition> {
    interval_unchecked(&SetPartition::bottom(a.size()), a)
}

/// All ordered pairs `(B, C)` with `B ∧ C = A`.
pub fn meet_preimages(a: &SetPartition) -> Vec<(SetPartition, SetPartition)> {
    let ups = up_set(a);
    let mut out = Vec::new();
    for b in &ups {
        for c in &ups {
            if &b.meet_unchecked(c) == a {
                out.push((b.clone(), c.clone()));
            }
        }
    }
    out
}

/// All ordered pairs `(A, B)` with `A ∨ B = C`.
pub fn join_preimages(c: &SetPartition) -> Vec<(SetPartition, SetPartition)> {
    let downs = down_set(c);
    let mut out = Vec::new();
    for a in &downs {
        for b in &downs {
            if &a.join_unchecked(b) == c {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}
