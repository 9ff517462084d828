//! Exhaustive invariant suites behind `ncsym verify`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use ncsym::lattice::{self, down_set, interval, join_preimages, mobius, mobius_product_form, mobius_uncached};
use ncsym::lattice_algebra::find_ind_res_incompatibility;
use ncsym::ncsym::{change_of_basis, degree_one_antipode_solvable};
use ncsym::partition::{bell, enumerate, standardize, type_of};
use ncsym::realization::{expand_m, expand_m_xy, falling_factorial, nc_multiply, permute, type_decompose};
use ncsym::{Algebra, AlgebraElement, Basis, Element, ModuleSum, PairModuleSum, SetPartition, Tensor};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Suites accepted by `verify --suite`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Suite {
    Lattice,
    Mobius,
    Bases,
    TheoremA,
    Idempotents,
    Modules,
    Frobenius,
    Realization,
    All,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Lattice,
        Suite::Mobius,
        Suite::Bases,
        Suite::TheoremA,
        Suite::Idempotents,
        Suite::Modules,
        Suite::Frobenius,
        Suite::Realization,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lattice => "lattice",
            Suite::Mobius => "mobius",
            Suite::Bases => "bases",
            Suite::TheoremA => "theoremA",
            Suite::Idempotents => "idempotents",
            Suite::Modules => "modules",
            Suite::Frobenius => "frobenius",
            Suite::Realization => "realization",
            Suite::All => "all",
        }
    }

    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Mobius => 7,
            Suite::Modules | Suite::Frobenius | Suite::Realization => 4,
            _ => 5,
        }
    }

    /// Largest accepted `--max-n`.
    pub fn cap(self) -> usize {
        match self {
            Suite::Mobius => 8,
            Suite::Lattice | Suite::Bases | Suite::TheoremA => 6,
            Suite::Idempotents | Suite::Modules | Suite::Frobenius | Suite::Realization => 5,
            Suite::All => Suite::EACH.iter().map(|s| s.cap()).min().unwrap_or(0),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, VerifyError> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| VerifyError::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    UnknownSuite(String),
    BoundTooLarge { suite: Suite, max_n: usize, cap: usize },
}

impl VerifyError {
    pub fn name(&self) -> &'static str {
        match self {
            VerifyError::UnknownSuite(_) => "UnknownSuiteError",
            VerifyError::BoundTooLarge { .. } => "BoundTooLargeError",
        }
    }
}

impl fmt::Display for VerifyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyError::UnknownSuite(s) => write!(
                f,
                "unknown suite {s:?}; expected one of lattice, mobius, bases, theoremA, idempotents, modules, frobenius, realization, all"
            ),
            VerifyError::BoundTooLarge { suite, max_n, cap } => {
                write!(f, "--max-n {max_n} exceeds the cap {cap} of suite {suite}")
            }
        }
    }
}

impl std::error::Error for VerifyError {}

/// Outcome of one property over all of its cases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub suite: String,
    pub name: String,
    /// Largest size or degree covered.
    pub bound: usize,
    pub passed: u64,
    pub failed: u64,
    /// First failing case in enumeration order.
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySuiteReport {
    pub suite: String,
    pub max_n: Option<usize>,
    pub passed: bool,
    pub properties: Vec<PropertyReport>,
    /// Wall-clock time; left out unless asked for, so reports diff cleanly.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub duration_ms: Option<u64>,
}

impl VerifySuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &PropertyReport> {
        self.properties.iter().filter(|p| p.failed > 0)
    }
}

impl fmt::Display for VerifySuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.max_n {
            Some(n) => writeln!(f, "suite {} (max n {n})", self.suite)?,
            None => writeln!(f, "suite {} (default bounds)", self.suite)?,
        }
        for p in &self.properties {
            let status = if p.failed == 0 { "PASS" } else { "FAIL" };
            writeln!(
                f,
                "  {status} {}/{} [<= {}] {}/{}",
                p.suite,
                p.name,
                p.bound,
                p.passed,
                p.passed + p.failed
            )?;
            if let Some(c) = &p.counterexample {
                writeln!(f, "       counterexample: {c}")?;
            }
        }
        if let Some(ms) = self.duration_ms {
            writeln!(f, "time: {ms} ms")?;
        }
        write!(f, "result: {}", if self.passed { "PASS" } else { "FAIL" })
    }
}

/// Runs `suite` with `max_n` (per-suite defaults when `None`) on `jobs`
/// worker threads.
pub fn run(suite: Suite, max_n: Option<usize>, jobs: usize) -> Result<VerifySuiteReport, VerifyError> {
    if let Some(n) = max_n {
        if n > suite.cap() {
            return Err(VerifyError::BoundTooLarge { suite, max_n: n, cap: suite.cap() });
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let start = Instant::now();
    let properties = pool.install(|| {
        let suites = if suite == Suite::All { Suite::EACH.to_vec() } else { vec![suite] };
        let mut out = Vec::new();
        for s in suites {
            let mut r = Runner { suite: s.name(), out: Vec::new() };
            let n = max_n.unwrap_or(s.default_max_n());
            match s {
                Suite::Lattice => lattice_suite(&mut r, n),
                Suite::Mobius => mobius_suite(&mut r, n),
                Suite::Bases => bases_suite(&mut r, n),
                Suite::TheoremA => theorem_a_suite(&mut r, n),
                Suite::Idempotents => idempotents_suite(&mut r, n),
                Suite::Modules => modules_suite(&mut r, n),
                Suite::Frobenius => frobenius_suite(&mut r, n),
                Suite::Realization => realization_suite(&mut r, n),
                Suite::All => unreachable!(),
            }
            out.extend(r.out);
        }
        out
    });
    let elapsed = start.elapsed().as_millis() as u64;
    Ok(VerifySuiteReport {
        suite: suite.name().to_string(),
        max_n,
        passed: properties.iter().all(|p| p.failed == 0),
        properties,
        duration_ms: Some(elapsed),
    })
}

type Outcome = Option<Value>;

struct Runner {
    suite: &'static str,
    out: Vec<PropertyReport>,
}

impl Runner {
    fn check<T: Sync>(&mut self, name: &str, bound: usize, cases: &[T], f: impl Fn(&T) -> Outcome + Sync + Send) {
        let results: Vec<Outcome> = cases.par_iter().map(f).collect();
        let failed = results.iter().filter(|r| r.is_some()).count() as u64;
        self.out.push(PropertyReport {
            suite: self.suite.to_string(),
            name: name.to_string(),
            bound,
            passed: cases.len() as u64 - failed,
            failed,
            counterexample: results.into_iter().flatten().next(),
        });
    }
}

fn expect_eq<T: PartialEq + Serialize>(case: Value, got: &T, expected: &T) -> Outcome {
    (got != expected).then(|| json!({ "case": case, "got": got, "expected": expected }))
}

fn expect(case: Value, ok: bool) -> Outcome {
    (!ok).then_some(case)
}

fn all(n: usize) -> Vec<SetPartition> {
    enumerate(n).collect()
}

fn up_to(n: usize) -> Vec<SetPartition> {
    (0..=n).flat_map(enumerate).collect()
}

fn same_size_pairs(max: usize) -> Vec<(SetPartition, SetPartition)> {
    let mut out = Vec::new();
    for n in 0..=max {
        let ps = all(n);
        for a in &ps {
            for b in &ps {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// `(A, B)` with `|A| + |B| ≤ max`.
fn graded_pairs(max: usize) -> Vec<(SetPartition, SetPartition)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for a in all(n) {
            for m in 0..=max - n {
                for b in enumerate(m) {
                    out.push((a.clone(), b));
                }
            }
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n as u32);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn bv(basis: Basis, a: &SetPartition) -> Element {
    Element::basis_vector(basis, a.clone())
}

fn in_m(basis: Basis, a: &SetPartition) -> Element {
    bv(basis, a).convert(Basis::M)
}

// ---------------------------------------------------------------- lattice

fn lattice_suite(r: &mut Runner, n: usize) {
    let pairs = same_size_pairs(n);
    r.check("meet_join_laws", n, &pairs, |(a, b)| {
        let m = a.meet(b).unwrap();
        let j = a.join(b).unwrap();
        let (bottom, top) = (SetPartition::bottom(a.size()), SetPartition::top(a.size()));
        let ok = m == b.meet(a).unwrap()
            && j == b.join(a).unwrap()
            && a.meet(a).unwrap() == *a
            && a.join(a).unwrap() == *a
            && a.meet(&j).unwrap() == *a
            && a.join(&m).unwrap() == *a
            && bottom.refines(a).unwrap()
            && a.refines(&top).unwrap()
            && a.refines(b).unwrap() == (m == *a);
        expect(json!([a, b]), ok)
    });

    let mut triples = Vec::new();
    for size in 0..=n {
        let ps = all(size);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    r.check("meet_join_associative", n, &triples, |(a, b, c)| {
        let ok = a.meet(b).unwrap().meet(c).unwrap() == a.meet(&b.meet(c).unwrap()).unwrap()
            && a.join(b).unwrap().join(c).unwrap() == a.join(&b.join(c).unwrap()).unwrap();
        expect(json!([a, b, c]), ok)
    });
    drop(triples);

    let by_size: Vec<Vec<SetPartition>> = (0..=n).map(all).collect();
    r.check("meet_join_are_extremal", n, &pairs, |(a, b)| {
        let m = a.meet(b).unwrap();
        let j = a.join(b).unwrap();
        let ps = &by_size[a.size()];
        let lower = ps.iter().filter(|c| c.refines(a).unwrap() && c.refines(b).unwrap());
        let upper = ps.iter().filter(|c| a.refines(c).unwrap() && b.refines(c).unwrap());
        let ok = m.refines(a).unwrap()
            && m.refines(b).unwrap()
            && lower.clone().all(|c| c.refines(&m).unwrap())
            && a.refines(&j).unwrap()
            && b.refines(&j).unwrap()
            && upper.clone().all(|c| j.refines(c).unwrap());
        expect(json!([a, b]), ok)
    });

    let mut quads = Vec::new();
    for p in 0..=n + 1 {
        let left = same_size_pairs_of(p);
        let right = same_size_pairs_of(n + 1 - p);
        for (a, b) in &left {
            for (c, d) in &right {
                quads.push((a.clone(), b.clone(), c.clone(), d.clone()));
            }
        }
    }
    r.check("concat_preserves_meet_and_join", n + 1, &quads, |(a, b, c, d)| {
        let (ac, bd) = (a.concat(c), b.concat(d));
        let ok = ac.meet(&bd).unwrap() == a.meet(b).unwrap().concat(&c.meet(d).unwrap())
            && ac.join(&bd).unwrap() == a.join(b).unwrap().concat(&c.join(d).unwrap());
        expect(json!([a, b, c, d]), ok)
    });

    let mut graded_triples = Vec::new();
    for (a, b) in graded_pairs(n) {
        for c in up_to(n - a.size() - b.size()) {
            graded_triples.push((a.clone(), b.clone(), c));
        }
    }
    r.check("concat_monoid_and_split", n, &graded_triples, |(a, b, c)| {
        let e = SetPartition::empty();
        let ab = a.concat(b);
        let ok = ab.concat(c) == a.concat(&b.concat(c))
            && a.concat(&e) == *a
            && e.concat(a) == *a
            && ab.split(a.size()).unwrap() == Some((a.clone(), b.clone()));
        expect(json!([a, b, c]), ok)
    });

    let sizes: Vec<usize> = (0..=10.max(n)).collect();
    r.check("bell_counts_enumeration", *sizes.last().unwrap(), &sizes, |&m| {
        let count = enumerate(m).count();
        expect_eq(json!(m), &count.to_string(), &bell(m).to_string())
    });

    let len = n.min(4);
    let mut seqs: Vec<Vec<u32>> = vec![Vec::new()];
    let mut frontier = seqs.clone();
    for _ in 0..len {
        frontier = frontier
            .iter()
            .flat_map(|s| {
                (1..=4u32).map(move |v| {
                    let mut t = s.clone();
                    t.push(v);
                    t
                })
            })
            .collect();
        seqs.extend(frontier.iter().cloned());
    }
    let sigmas = permutations(4);
    r.check("type_of_relabeling_stable", len, &seqs, |seq| {
        let t = type_of(seq);
        let bad = sigmas.iter().find(|s| {
            let relabeled: Vec<u32> = seq.iter().map(|&v| s[v as usize - 1]).collect();
            type_of(&relabeled) != t
        });
        bad.map(|s| json!({ "sequence": seq, "sigma": s }))
    });

    let every = up_to(n);
    r.check("text_json_blocks_round_trip", n, &every, |a| {
        let blocks = a.blocks();
        let json = serde_json::to_string(a).unwrap();
        let all_blocks: Vec<usize> = (1..=a.num_blocks()).collect();
        let shape = a.shape();
        let ok = a.to_string().parse::<SetPartition>().unwrap() == *a
            && serde_json::from_str::<SetPartition>(&json).unwrap() == *a
            && SetPartition::from_blocks(blocks.clone()).unwrap() == *a
            && standardize(blocks.iter().map(|b| b.iter().map(|&x| 2 * x + 5).collect::<Vec<u32>>())).unwrap() == *a
            && a.restrict(&all_blocks).unwrap() == *a
            && shape.size() == a.size()
            && shape.length() == a.num_blocks();
        expect(json!(a), ok)
    });
}

fn same_size_pairs_of(n: usize) -> Vec<(SetPartition, SetPartition)> {
    let ps = all(n);
    ps.iter().flat_map(|a| ps.iter().map(move |b| (a.clone(), b.clone()))).collect()
}

// ---------------------------------------------------------------- mobius

fn comparable_pairs(max: usize) -> Vec<(SetPartition, SetPartition)> {
    let mut out = Vec::new();
    for n in 0..=max {
        for a in enumerate(n) {
            for b in down_set(&a) {
                out.push((b, a.clone()));
            }
        }
    }
    out
}

fn mobius_suite(r: &mut Runner, n: usize) {
    let pairs = comparable_pairs(n);
    r.check("recursion_matches_product_form", n, &pairs, |(b, a)| {
        expect_eq(json!([b, a]), &mobius(b, a).unwrap().to_string(), &mobius_product_form(b, a).unwrap().to_string())
    });

    let small = n.min(5);
    let pairs = comparable_pairs(small);
    r.check("inversion_identities", small, &pairs, |(b, a)| {
        let iv = interval(b, a).unwrap();
        let delta = if b == a { BigInt::one() } else { BigInt::zero() };
        let upper: BigInt = iv.iter().map(|c| mobius(c, a).unwrap()).sum();
        let lower: BigInt = iv.iter().map(|c| mobius(b, c).unwrap()).sum();
        expect(json!([b, a]), upper == delta && lower == delta)
    });

    let pairs = same_size_pairs(small);
    r.check("memoization_invisible", small, &pairs, |(b, a)| {
        expect_eq(json!([b, a]), &mobius(b, a).unwrap().to_string(), &mobius_uncached(b, a).unwrap().to_string())
    });
}

// ---------------------------------------------------------------- bases

type Triple = BTreeMap<(SetPartition, SetPartition, SetPartition), BigInt>;

fn coassociativity(delta: impl Fn(&Element) -> Tensor, e: &Element) -> (Triple, Triple) {
    let t = e.basis();
    let mut left: HashMap<_, BigInt> = HashMap::new();
    let mut right: HashMap<_, BigInt> = HashMap::new();
    for ((a, b), c) in delta(e).terms() {
        for ((x, y), d) in delta(&bv(t, a)).terms() {
            *left.entry((x.clone(), y.clone(), b.clone())).or_default() += c * d;
        }
        for ((x, y), d) in delta(&bv(t, b)).terms() {
            *right.entry((a.clone(), x.clone(), y.clone())).or_default() += c * d;
        }
    }
    let clean = |m: HashMap<_, BigInt>| m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    (clean(left), clean(right))
}

fn external(e: &Element) -> Tensor {
    match e.basis() {
        Basis::X => e.coproduct_external_x().unwrap(),
        _ => e.coproduct_external().unwrap(),
    }
}

fn bases_suite(r: &mut Runner, n: usize) {
    let every = up_to(n);
    r.check("conversion_round_trip", n, &every, |a| {
        for from in Basis::ALL {
            for to in Basis::ALL {
                let e = bv(from, a);
                if e.convert(to).convert(from) != e {
                    return Some(json!({ "partition": a, "from": from, "to": to }));
                }
            }
        }
        None
    });

    r.check("unitriangular_changes_of_basis", n, &every, |a| {
        let ups = lattice::up_set(a);
        let downs = down_set(a);
        for (from, to, support) in [
            (Basis::P, Basis::M, &ups),
            (Basis::M, Basis::P, &ups),
            (Basis::X, Basis::P, &downs),
            (Basis::P, Basis::X, &downs),
        ] {
            let terms = change_of_basis(from, to, a);
            let diagonal = terms.iter().find(|(b, _)| b == a).map(|(_, c)| c.clone());
            if diagonal != Some(BigInt::one()) || terms.iter().any(|(b, _)| !support.contains(b)) {
                return Some(json!({ "partition": a, "from": from, "to": to }));
            }
        }
        None
    });

    let pairs = graded_pairs(n);
    r.check("product_basis_independent", n, &pairs, |(a, b)| {
        let direct = bv(Basis::M, a).multiply(&bv(Basis::M, b)).unwrap();
        let via_p = bv(Basis::M, a)
            .convert(Basis::P)
            .multiply(&bv(Basis::M, b).convert(Basis::P))
            .unwrap()
            .convert(Basis::M);
        if via_p != direct {
            return Some(json!({ "case": [a, b], "basis": "m" }));
        }
        for t in [Basis::P, Basis::X] {
            let native = bv(t, a).multiply(&bv(t, b)).unwrap().convert(Basis::M);
            let through_m = in_m(t, a).multiply(&in_m(t, b)).unwrap();
            if native != through_m {
                return Some(json!({ "case": [a, b], "basis": t, "got": native, "expected": through_m }));
            }
        }
        None
    });

    let small = n.min(4);
    let smalls = up_to(small);
    r.check("external_coproduct_coassociative_counital", small, &smalls, |a| {
        for t in Basis::ALL {
            let e = bv(t, a);
            let (left, right) = coassociativity(external, &e);
            if left != right {
                return Some(json!({ "partition": a, "basis": t, "law": "coassociativity" }));
            }
            let delta = external(&e);
            let mut lc = Element::zero(t);
            let mut rc = Element::zero(t);
            for ((x, y), c) in delta.terms() {
                lc = lc.add(&bv(t, y).scale(&(c * bv(t, x).counit()))).unwrap();
                rc = rc.add(&bv(t, x).scale(&(c * bv(t, y).counit()))).unwrap();
            }
            if lc != e || rc != e {
                return Some(json!({ "partition": a, "basis": t, "law": "counit" }));
            }
        }
        None
    });

    r.check("p_external_coproduct_matches_m", n, &every, |a| {
        let native = bv(Basis::P, a).coproduct_external().unwrap().convert(Basis::M, Basis::M);
        let through_m = in_m(Basis::P, a).coproduct_external().unwrap();
        expect_eq(json!(a), &native, &through_m)
    });

    r.check("internal_coproduct_coassociative", small, &smalls, |a| {
        for t in Basis::ALL {
            let (left, right) = coassociativity(|e| e.coproduct_internal(), &bv(t, a));
            if left != right {
                return Some(json!({ "partition": a, "basis": t }));
            }
        }
        None
    });

    let small_pairs = graded_pairs(small);
    r.check("coproducts_multiplicative", small, &small_pairs, |(a, b)| {
        for t in [Basis::M, Basis::P] {
            let (x, y) = (bv(t, a), bv(t, b));
            let xy = x.multiply(&y).unwrap();
            let ext = external(&xy) == external(&x).multiply(&external(&y)).unwrap();
            let int = xy.coproduct_internal() == x.coproduct_internal().multiply(&y.coproduct_internal()).unwrap();
            if !(ext && int) {
                return Some(json!({ "case": [a, b], "basis": t, "external": ext, "internal": int }));
            }
        }
        None
    });

    let mut triples = Vec::new();
    for size in 0..=small {
        let ps = all(size);
        for a in &ps {
            for b in &ps {
                for c in &ps {
                    triples.push((a.clone(), b.clone(), c.clone()));
                }
            }
        }
    }
    r.check("internal_coproduct_dual_to_meet", small, &triples, |(a, b, c)| {
        let m = bv(Basis::M, a);
        let lhs = m
            .coproduct_internal()
            .pair(&AlgebraElement::basis(Algebra::Meet, b.clone()), &AlgebraElement::basis(Algebra::Meet, c.clone()));
        let rhs = m.pair(&AlgebraElement::basis(Algebra::Meet, b.meet(c).unwrap()));
        expect_eq(json!([a, b, c]), &lhs.to_string(), &rhs.to_string())
    });

    r.check("x_internal_coproduct_join_rule", n, &every, |a| {
        let x = bv(Basis::X, a);
        let native = x.coproduct_internal().convert(Basis::M, Basis::M);
        let through_m = x.convert(Basis::M).coproduct_internal();
        expect_eq(json!(a), &native, &through_m)
    });

    r.check("characters_are_change_of_basis", n, &every, |a| {
        let p = bv(Basis::P, a);
        let (in_x, in_m) = (p.convert(Basis::X), p.convert(Basis::M));
        for b in enumerate(a.size()) {
            let meet = BigInt::from(Algebra::Meet.character(&b, a).unwrap());
            let join = BigInt::from(Algebra::Join.character(&b, a).unwrap());
            let diag = BigInt::from(Algebra::Diag.character(&b, a).unwrap());
            if in_x.coefficient(&b) != meet || in_m.coefficient(&b) != join || p.coefficient(&b) != diag {
                return Some(json!({ "module": b, "at": a }));
            }
        }
        None
    });

    let sides = [true, false];
    r.check("no_internal_antipode_in_degree_one", 3, &sides, |&left| {
        expect(json!({ "left": left }), !degree_one_antipode_solvable(3, left))
    });
}

// ---------------------------------------------------------------- theoremA

fn theorem_a_suite(r: &mut Runner, n: usize) {
    let pairs = graded_pairs(n);
    let every = up_to(n);
    for (t, name) in [(Basis::X, "x"), (Basis::P, "p")] {
        r.check(&format!("{name}_product_is_concat"), n, &pairs, |(a, b)| {
            let product = in_m(t, a).multiply(&in_m(t, b)).unwrap();
            expect_eq(json!([a, b]), &product, &in_m(t, &a.concat(b)))
        });
    }
    r.check("x_internal_coproduct_is_join_sum", n, &every, |c| {
        let lhs = in_m(Basis::X, c).coproduct_internal();
        let rhs = Tensor::from_terms(Basis::X, Basis::X, join_preimages(c).into_iter().map(|k| (k, BigInt::one())))
            .convert(Basis::M, Basis::M);
        expect_eq(json!(c), &lhs, &rhs)
    });
    r.check("p_internal_coproduct_is_diagonal", n, &every, |a| {
        let lhs = in_m(Basis::P, a).coproduct_internal();
        let rhs = Tensor::outer(&bv(Basis::P, a), &bv(Basis::P, a)).convert(Basis::M, Basis::M);
        expect_eq(json!(a), &lhs, &rhs)
    });
}

// ---------------------------------------------------------------- idempotents

/// Unit of the algebra, or `Σ_A A` for the diagonal algebra.
fn identity(alg: Algebra, n: usize) -> AlgebraElement {
    alg.unit(n).unwrap_or_else(|| {
        AlgebraElement::from_terms(alg, n, enumerate(n).map(|a| (a, BigInt::one()))).unwrap()
    })
}

fn tagged<T: Clone>(items: &[T]) -> Vec<(Algebra, T)> {
    Algebra::ALL.iter().flat_map(|&alg| items.iter().map(move |x| (alg, x.clone()))).collect()
}

fn action_consistency(r: &mut Runner, n: usize) {
    let cases = tagged(&same_size_pairs(n));
    r.check("action_matches_multiplication", n, &cases, |(alg, (c, a))| {
        let e = alg.idempotent(a);
        let lhs = AlgebraElement::basis(*alg, c.clone()).multiply(&e).unwrap();
        let rhs = e.scale(&BigInt::from(alg.act_on_simple(c, a).unwrap()));
        expect(json!({ "algebra": alg, "element": c, "module": a }), lhs == rhs)
    });
}

fn idempotents_suite(r: &mut Runner, n: usize) {
    let sizes: Vec<usize> = (0..=n).collect();
    let cases = tagged(&sizes);
    let idem: HashMap<(Algebra, SetPartition), AlgebraElement> = cases
        .par_iter()
        .flat_map_iter(|&(alg, m)| enumerate(m).map(move |a| ((alg, a.clone()), alg.idempotent(&a))))
        .collect();

    let pairs = tagged(&same_size_pairs(n));
    r.check("orthogonal_idempotents", n, &pairs, |(alg, (a, b))| {
        let (ea, eb) = (&idem[&(*alg, a.clone())], &idem[&(*alg, b.clone())]);
        let expected = if a == b { ea.clone() } else { AlgebraElement::zero(*alg, a.size()) };
        expect(json!({ "algebra": alg, "case": [a, b] }), ea.multiply(eb).unwrap() == expected)
    });

    r.check("idempotents_resolve_identity", n, &cases, |&(alg, m)| {
        let sum = enumerate(m)
            .map(|a| idem[&(alg, a)].clone())
            .fold(AlgebraElement::zero(alg, m), |acc, e| acc.add(&e).unwrap());
        expect_eq(json!({ "algebra": alg, "n": m }), &sum, &identity(alg, m))
    });

    let small = n.min(4);
    action_consistency(r, small);

    let graded = tagged(&graded_pairs(n));
    r.check("idempotent_concatenation", n, &graded, |(alg, (a, b))| {
        let (lhs, rhs) = alg.idempotent_concat_identity(a, b);
        expect_eq(json!({ "algebra": alg, "case": [a, b] }), &lhs, &rhs)
    });

    let labels = tagged(&up_to(small));
    r.check("regular_representation_rank_one", small, &labels, |(alg, a)| {
        // trace of left multiplication by the idempotent on the basis
        let e = &idem[&(*alg, a.clone())];
        let trace: BigInt = enumerate(a.size())
            .map(|b| e.multiply(&AlgebraElement::basis(*alg, b.clone())).unwrap().coefficient(&b))
            .sum();
        expect_eq(json!({ "algebra": alg, "label": a }), &trace.to_string(), &"1".to_string())
    });
}

// ---------------------------------------------------------------- modules

fn act_element(alg: Algebra, e: &AlgebraElement, a: &SetPartition) -> BigInt {
    e.terms().iter().map(|(b, c)| c * BigInt::from(alg.act_on_simple(b, a).unwrap())).sum()
}

/// Label of the one-dimensional module whose character is `chi`, found by search.
fn module_with_character(alg: Algebra, n: usize, chi: impl Fn(&SetPartition) -> u8) -> Result<ModuleSum, ()> {
    let ps = all(n);
    if ps.iter().all(|c| chi(c) == 0) {
        return Ok(ModuleSum::zero(alg));
    }
    let matches: Vec<&SetPartition> =
        ps.iter().filter(|l| ps.iter().all(|c| alg.act_on_simple(c, l).unwrap() == chi(c))).collect();
    match matches.as_slice() {
        [l] => Ok(ModuleSum::simple(alg, (*l).clone())),
        _ => Err(()),
    }
}

/// Restriction computed from the action: project with `ρ(1 ⊗ 1)` and read off
/// the character of `kΠ_k ⊗ kΠ_{n−k}` on what is left.
fn restriction_by_action(alg: Algebra, k: usize, a: &SetPartition) -> Result<PairModuleSum, ()> {
    let n = a.size();
    let projector = identity(alg, k).concat(&identity(alg, n - k)).unwrap();
    if act_element(alg, &projector, a).is_zero() {
        return Ok(PairModuleSum::zero(alg));
    }
    let (left, right) = (all(k), all(n - k));
    let chi = |b: &SetPartition, c: &SetPartition| alg.act_on_simple(&b.concat(c), a).unwrap();
    let mut found = Vec::new();
    for b in &left {
        for c in &right {
            let ok = left.iter().all(|x| {
                right.iter().all(|y| chi(x, y) == alg.act_on_simple(x, b).unwrap() * alg.act_on_simple(y, c).unwrap())
            });
            if ok {
                found.push((b.clone(), c.clone()));
            }
        }
    }
    match found.as_slice() {
        [pair] => Ok(PairModuleSum::from_terms(alg, [(pair.clone(), 1)])),
        _ => Err(()),
    }
}

fn modules_suite(r: &mut Runner, n: usize) {
    action_consistency(r, n);

    let pairs = tagged(&same_size_pairs(n));
    r.check("tensor_matches_action", n, &pairs, |(alg, (a, b))| {
        let chi = |c: &SetPartition| alg.act_on_simple(c, a).unwrap() * alg.act_on_simple(c, b).unwrap();
        let case = json!({ "algebra": alg, "case": [a, b] });
        match module_with_character(*alg, a.size(), chi) {
            Ok(expected) => expect_eq(case, &alg.tensor_simple(a, b), &expected),
            Err(()) => Some(case),
        }
    });

    let graded = tagged(&graded_pairs(n));
    r.check("induction_matches_idempotents", n, &graded, |(alg, (a, b))| {
        let rho = alg.idempotent(a).concat(&alg.idempotent(b)).unwrap();
        let case = json!({ "algebra": alg, "case": [a, b] });
        match alg.decompose(&rho) {
            Ok(expected) => expect_eq(case, &alg.induct(a, b), &expected),
            Err(e) => Some(json!({ "case": case, "error": e.to_string() })),
        }
    });

    let mut cuts = Vec::new();
    for (alg, a) in tagged(&up_to(n)) {
        for k in 0..=a.size() {
            cuts.push((alg, a.clone(), k));
        }
    }
    r.check("restriction_matches_action", n, &cuts, |(alg, a, k)| {
        let case = json!({ "algebra": alg, "label": a, "k": k });
        match restriction_by_action(*alg, *k, a) {
            Ok(expected) => expect_eq(case, &alg.restrict(*k, a).unwrap(), &expected),
            Err(()) => Some(case),
        }
    });

    r.check("restriction_support", n, &cuts, |(alg, a, k)| {
        let res = alg.restrict(*k, a).unwrap();
        let mults: Vec<u64> = res.terms().values().copied().collect();
        let ok = match alg {
            Algebra::Join => mults == [1],
            _ => mults.is_empty() || mults == [1],
        };
        expect(json!({ "algebra": alg, "label": a, "k": k }), ok)
    });

    let meet_pairs = same_size_pairs(n);
    r.check("meet_restriction_multiplicative_over_tensor", n, &meet_pairs, |(a, b)| {
        let alg = Algebra::Meet;
        let lhs = alg.tensor_simple(a, b).coproduct_restriction();
        let rhs = alg.coproduct_restriction(a).tensor(&alg.coproduct_restriction(b)).unwrap();
        expect_eq(json!([a, b]), &lhs, &rhs)
    });

    let degrees = [n];
    r.check("meet_induction_restriction_not_bialgebra", n, &degrees, |&d| match find_ind_res_incompatibility(
        Algebra::Meet,
        d,
    ) {
        Some(_) => None,
        None => Some(json!({ "searched_degree": d })),
    });
}

// ---------------------------------------------------------------- frobenius

fn frobenius_suite(r: &mut Runner, n: usize) {
    let graded = tagged(&graded_pairs(n));
    r.check("frobenius_intertwines_induction", n, &graded, |(alg, (a, b))| {
        let lhs = alg.induct(a, b).frobenius().convert(Basis::M);
        let fa = ModuleSum::simple(*alg, a.clone()).frobenius().convert(Basis::M);
        let fb = ModuleSum::simple(*alg, b.clone()).frobenius().convert(Basis::M);
        expect_eq(json!({ "algebra": alg, "case": [a, b] }), &lhs, &fa.multiply(&fb).unwrap())
    });

    let labels = tagged(&up_to(n));
    r.check("frobenius_intertwines_internal_coproduct", n, &labels, |(alg, c)| {
        let lhs = alg.internal_coproduct(c).frobenius().convert(Basis::M, Basis::M);
        let rhs = ModuleSum::simple(*alg, c.clone()).frobenius().convert(Basis::M).coproduct_internal();
        expect_eq(json!({ "algebra": alg, "label": c }), &lhs, &rhs)
    });

    r.check("frobenius_basis_images", n, &labels, |(alg, c)| {
        let image = ModuleSum::simple(*alg, c.clone()).frobenius();
        expect_eq(json!({ "algebra": alg, "label": c }), &image, &bv(alg.frobenius_basis(), c))
    });
}

// ---------------------------------------------------------------- realization

fn realization_suite(r: &mut Runner, n: usize) {
    let every = up_to(n);
    r.check("expansion_round_trip", n, &every, |a| {
        let d = type_decompose(&expand_m(a, a.size() + 1));
        let ok = matches!(&d, Ok(d) if d.element == bv(Basis::M, a) && !d.partial);
        expect(json!(a), ok)
    });

    let mut cases = Vec::new();
    for alphabet in 0..=n {
        for a in &every {
            cases.push((alphabet, a.clone()));
        }
    }
    let sigmas: Vec<Vec<Vec<u32>>> = (0..=n).map(permutations).collect();
    r.check("expansion_invariant_under_relabeling", n, &cases, |(alphabet, a)| {
        let e = expand_m(a, *alphabet);
        let bad = sigmas[*alphabet].iter().find(|s| permute(s, &e).unwrap() != e);
        bad.map(|s| json!({ "partition": a, "alphabet": alphabet, "sigma": s }))
    });

    let mut counts = Vec::new();
    for alphabet in 0..=n + 1 {
        for a in &every {
            counts.push((alphabet, a.clone()));
        }
    }
    r.check("expansion_term_counts", n, &counts, |(alphabet, a)| {
        let got = expand_m(a, *alphabet).terms().len() as u64;
        expect_eq(json!({ "partition": a, "alphabet": alphabet }), &got, &falling_factorial(*alphabet, a.num_blocks()))
    });

    let pairs = graded_pairs(n);
    r.check("product_oracle", n, &pairs, |(a, b)| {
        let alphabet = a.size() + b.size();
        let words = nc_multiply(&expand_m(a, alphabet), &expand_m(b, alphabet)).unwrap();
        let expected = bv(Basis::M, a).multiply(&bv(Basis::M, b)).unwrap();
        match type_decompose(&words) {
            Ok(d) => expect_eq(json!([a, b]), &d.element, &expected),
            Err(e) => Some(json!({ "case": [a, b], "error": e.to_string() })),
        }
    });

    r.check("internal_coproduct_oracle", n, &every, |a| match expand_m_xy(a, a.size(), a.size()) {
        Ok(t) => expect_eq(json!(a), &t, &bv(Basis::M, a).coproduct_internal()),
        Err(e) => Some(json!({ "case": a, "error": e.to_string() })),
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!(matches!("nope".parse::<Suite>(), Err(VerifyError::UnknownSuite(_))));
    }

    #[test]
    fn bounds_are_enforced() {
        let err = run(Suite::Realization, Some(6), 1).unwrap_err();
        assert_eq!(err.name(), "BoundTooLargeError");
        assert!(run(Suite::All, Some(6), 1).is_err());
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<u32>::new()]);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::EACH {
            let report = run(s, Some(3), 2).unwrap();
            assert!(report.passed, "{report}");
        }
    }

    #[test]
    fn restriction_oracle_sees_failed_splits() {
        let a: SetPartition = "1,2".parse().unwrap();
        assert!(restriction_by_action(Algebra::Meet, 1, &a).unwrap().is_zero());
        assert!(!restriction_by_action(Algebra::Join, 1, &a).unwrap().is_zero());
    }
}
