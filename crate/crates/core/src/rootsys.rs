//! The E7 root lattice, its Cartan form, the sign cocycle and the named root
//! subsets (E7, E6, E6-positive, and the 27 roots spanning the basic module).
//!
//! Simple roots are labelled 1..=7 as in the Dynkin diagram
//!
//! ```text
//!             2
//!             |
//!     1 - 3 - 4 - 5 - 6 - 7
//! ```
//!
//! and roots are stored in simple-root coordinates; every inner product goes
//! through [`CartanForm`].

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const E7_RANK: usize = 7;
pub const E6_RANK: usize = 6;

/// Edges of the E7 Dynkin diagram, 1-based.
pub const E7_EDGES: [(usize, usize); 6] = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)];

/// Bound on |k_i| for the brute-force enumeration. The highest E7 root has
/// coefficients (2,2,3,4,3,2,1), so 4 is enough.
pub const ENUMERATION_BOUND: i32 = 4;

/// Seed for every pseudo-random sample drawn by the verification sweeps.
pub const DEFAULT_SEED: u64 = 0x00E6_2701;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVector(pub [i32; E7_RANK]);

impl RootVector {
    pub const ZERO: RootVector = RootVector([0; E7_RANK]);

    /// The simple root α_i, `i` in 1..=7.
    pub fn simple(i: usize) -> Self {
        assert!(
            (1..=E7_RANK).contains(&i),
            "simple root index {i} out of range"
        );
        let mut k = [0; E7_RANK];
        k[i - 1] = 1;
        RootVector(k)
    }

    pub fn from_e6(k: [i32; E6_RANK]) -> Self {
        let mut v = [0; E7_RANK];
        v[..E6_RANK].copy_from_slice(&k);
        RootVector(v)
    }

    /// Coefficient of α_i, `i` in 1..=7.
    pub fn coeff(&self, i: usize) -> i32 {
        self.0[i - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    /// Positive in the "first nonzero coefficient is positive" sense.
    pub fn first_nonzero_positive(&self) -> bool {
        self.0.iter().find(|&&k| k != 0).is_some_and(|&k| k > 0)
    }

    /// Positive in the "nonzero and all coefficients non-negative" sense.
    pub fn all_nonnegative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&k| k >= 0)
    }

    pub fn in_e6_lattice(&self) -> bool {
        self.0[E7_RANK - 1] == 0
    }

    pub fn norm(&self) -> i64 {
        bilinear(self, self)
    }
}

impl Add for RootVector {
    type Output = RootVector;
    fn add(self, rhs: RootVector) -> RootVector {
        let mut k = self.0;
        k.iter_mut().zip(rhs.0).for_each(|(a, b)| *a += b);
        RootVector(k)
    }
}

impl Sub for RootVector {
    type Output = RootVector;
    fn sub(self, rhs: RootVector) -> RootVector {
        self + (-rhs)
    }
}

impl Neg for RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.map(|k| -k))
    }
}

impl fmt::Display for RootVector {
    /// Renders as `a1+2a3-a7`; zero renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &k) in self.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let sign = if k < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = k.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Gram matrix (α_i, α_j) of the E7 simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CartanForm {
    pub entries: [[i32; E7_RANK]; E7_RANK],
}

impl CartanForm {
    pub fn e7() -> Self {
        let mut entries = [[0; E7_RANK]; E7_RANK];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(a, b) in &E7_EDGES {
            entries[a - 1][b - 1] = -1;
            entries[b - 1][a - 1] = -1;
        }
        CartanForm { entries }
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.entries[i - 1][j - 1]
    }

    pub fn pair(&self, a: &RootVector, b: &RootVector) -> i64 {
        let mut s = 0i64;
        for i in 0..E7_RANK {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..E7_RANK {
                s += a.0[i] as i64 * b.0[j] as i64 * self.entries[i][j] as i64;
            }
        }
        s
    }

    pub fn is_symmetric(&self) -> bool {
        (0..E7_RANK).all(|i| (0..E7_RANK).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Leading principal minors, computed by fraction-free elimination.
    pub fn leading_minors(&self) -> Vec<i64> {
        (1..=E7_RANK)
            .map(|n| {
                let m: Vec<Vec<i64>> = (0..n)
                    .map(|i| (0..n).map(|j| self.entries[i][j] as i64).collect())
                    .collect();
                crate::linalg::bareiss_determinant(m)
            })
            .collect()
    }

    pub fn is_positive_definite(&self) -> bool {
        self.leading_minors().iter().all(|&d| d > 0)
    }
}

/// (a, b) under the E7 Cartan form.
pub fn bilinear(a: &RootVector, b: &RootVector) -> i64 {
    // The form is fixed; inline the sparse structure instead of rebuilding it.
    let mut s = 0i64;
    for i in 0..E7_RANK {
        s += 2 * a.0[i] as i64 * b.0[i] as i64;
    }
    for &(x, y) in &E7_EDGES {
        let (x, y) = (x - 1, y - 1);
        s -= a.0[x] as i64 * b.0[y] as i64 + a.0[y] as i64 * b.0[x] as i64;
    }
    s
}

/// A lattice vector is a root iff it has norm 2.
pub fn is_root(a: &RootVector) -> bool {
    a.norm() == 2
}

/// The sign cocycle
/// F(Σk_iα_i, Σl_jα_j) = (-1)^(Σ k_i l_i + Σ_{i>j} k_i l_j (α_i, α_j)).
pub fn cocycle(a: &RootVector, b: &RootVector) -> i32 {
    let mut e: i64 = 0;
    for i in 0..E7_RANK {
        e += a.0[i] as i64 * b.0[i] as i64;
    }
    for &(x, y) in &E7_EDGES {
        // every edge has (α_i, α_j) = -1; the larger label plays the role of i
        let (hi, lo) = if x > y {
            (x - 1, y - 1)
        } else {
            (y - 1, x - 1)
        };
        e -= a.0[hi] as i64 * b.0[lo] as i64;
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    /// All 126 roots, sorted.
    pub all_roots: Vec<RootVector>,
    pub positive: Vec<RootVector>,
    pub e6_roots: Vec<RootVector>,
    pub e6_positive: Vec<RootVector>,
    index: HashMap<RootVector, usize>,
}

impl RootSystem {
    pub fn contains(&self, a: &RootVector) -> bool {
        self.index.contains_key(a)
    }

    pub fn index_of(&self, a: &RootVector) -> Option<usize> {
        self.index.get(a).copied()
    }

    /// Positive E7 roots with nonzero α_7 coefficient.
    pub fn e7_positive_outside_e6(&self) -> Vec<RootVector> {
        self.positive
            .iter()
            .filter(|r| r.coeff(7) != 0)
            .copied()
            .collect()
    }

    pub fn is_closed_under_negation(&self) -> bool {
        self.all_roots.iter().all(|r| self.contains(&-*r))
    }
}

/// Exhaustive search of the box |k_i| <= 4 for norm-2 vectors.
pub fn enumerate_roots() -> Result<RootSystem> {
    let b = ENUMERATION_BOUND;
    let width = (2 * b + 1) as usize;
    let total = width.pow(E7_RANK as u32);
    let mut all_roots: Vec<RootVector> = (0..total)
        .into_par_iter()
        .filter_map(|mut n| {
            let mut k = [0i32; E7_RANK];
            for slot in k.iter_mut() {
                *slot = (n % width) as i32 - b;
                n /= width;
            }
            let v = RootVector(k);
            is_root(&v).then_some(v)
        })
        .collect();
    all_roots.sort();

    let mut positive = Vec::new();
    for r in &all_roots {
        let p1 = r.first_nonzero_positive();
        let p2 = r.all_nonnegative();
        if p1 != p2 {
            return Err(Error::PositivityMismatch(*r));
        }
        // a root is either positive or negative under both tests
        if !p1 && !(-*r).all_nonnegative() {
            return Err(Error::PositivityMismatch(*r));
        }
        if p1 {
            positive.push(*r);
        }
    }
    let e6_roots: Vec<_> = all_roots
        .iter()
        .filter(|r| r.in_e6_lattice())
        .copied()
        .collect();
    let e6_positive: Vec<_> = positive
        .iter()
        .filter(|r| r.in_e6_lattice())
        .copied()
        .collect();
    let index = all_roots.iter().enumerate().map(|(i, r)| (*r, i)).collect();
    Ok(RootSystem {
        all_roots,
        positive,
        e6_roots,
        e6_positive,
        index,
    })
}

/// One summand `coeff * Σ_{r=from}^{to} α_r` of a printed root expression.
/// An empty range (`from > to`) contributes nothing.
#[derive(Clone, Copy, Debug)]
pub struct RangeSum {
    pub coeff: i32,
    pub from: usize,
    pub to: usize,
}

const fn s(coeff: i32, from: usize, to: usize) -> RangeSum {
    RangeSum { coeff, from, to }
}

const fn a(i: usize) -> RangeSum {
    s(1, i, i)
}

pub fn normalize(terms: &[RangeSum]) -> RootVector {
    let mut k = [0; E7_RANK];
    for t in terms {
        for r in t.from..=t.to {
            k[r - 1] += t.coeff;
        }
    }
    RootVector(k)
}

/// The root vectors x_1..x_27, written as printed (one summand per sum).
/// Index i holds the expression whose root vector is x_{i+1}.
pub const MODULE_BASIS_EXPRESSIONS: [&[RangeSum]; 27] = [
    &[a(3), s(2, 4, 4), a(5), s(1, 1, 6), s(1, 1, 7)],
    &[s(2, 1, 6), s(-1, 1, 1), a(4), s(-1, 6, 6), s(1, 3, 7)],
    &[s(2, 1, 6), s(-1, 1, 1), a(4), s(-1, 6, 6), s(1, 4, 7)],
    &[s(2, 1, 6), s(-1, 1, 1), s(-1, 6, 6), s(1, 4, 7)],
    &[s(2, 1, 6), s(-1, 1, 1), a(4), a(7)],
    &[s(1, 1, 5), s(1, 3, 6), s(1, 4, 7)],
    &[a(4), s(1, 3, 6), s(1, 1, 7)],
    &[s(2, 1, 6), s(-1, 1, 1), a(4), s(-1, 6, 6), a(7)],
    &[s(1, 3, 6), s(1, 1, 7)],
    &[a(4), s(1, 3, 5), s(1, 1, 7)],
    &[s(1, 4, 6), s(1, 1, 7)],
    &[s(1, 3, 5), s(1, 1, 7)],
    &[a(3), a(4), s(1, 1, 7)],
    &[s(1, 2, 6), s(1, 4, 7)],
    &[a(4), a(5), s(1, 1, 7)],
    &[a(4), s(1, 1, 7)],
    &[a(4), a(5), s(1, 2, 7)],
    &[s(1, 1, 7)],
    &[a(4), s(1, 2, 7)],
    &[a(1), s(1, 3, 7)],
    &[s(1, 2, 7)],
    &[a(2), s(1, 4, 7)],
    &[s(1, 3, 7)],
    &[s(1, 4, 7)],
    &[s(1, 5, 7)],
    &[a(6), a(7)],
    &[a(7)],
];

/// Outcome of normalizing one printed root expression.
#[derive(Clone, Debug, Serialize)]
pub struct ExpressionAudit {
    pub label: String,
    pub vector: RootVector,
    pub norm: i64,
    pub is_root: bool,
}

fn audit(label: String, terms: &[RangeSum]) -> ExpressionAudit {
    let vector = normalize(terms);
    let norm = vector.norm();
    ExpressionAudit {
        label,
        vector,
        norm,
        is_root: norm == 2,
    }
}

/// Every expression of the printed family description of the 27 roots
/// (the two singletons, the two one-parameter families and the two
/// two-parameter families), with the parameter ranges as printed.
pub fn printed_module_root_family() -> Vec<ExpressionAudit> {
    let mut out = vec![
        audit("a1+sum(a3..a7)".into(), &[a(1), s(1, 3, 7)]),
        audit(
            "a3+2a4+a5+sum(a1..a6)+sum(a1..a7)".into(),
            &[a(3), s(2, 4, 4), a(5), s(1, 1, 6), s(1, 1, 7)],
        ),
    ];
    for i in 1..=6 {
        out.push(audit(
            format!("2sum(a1..a6)-a1+a4-a6+sum(a{}..a7), i={i}", i + 1),
            &[s(2, 1, 6), s(-1, 1, 1), a(4), s(-1, 6, 6), s(1, i + 1, 7)],
        ));
    }
    for i in 2..=6 {
        out.push(audit(
            format!("sum(a{}..a7), i={i}", i + 1),
            &[s(1, i + 1, 7)],
        ));
    }
    for j in 2..=6 {
        out.push(audit(
            format!("sum(a2..a{j})+sum(a4..a7), j={j}"),
            &[s(1, 2, j), s(1, 4, 7)],
        ));
    }
    for i in 2..=6 {
        for j in (i + 1)..=6 {
            out.push(audit(
                format!("sum(a1..a{i})+sum(a3..a{j})+sum(a4..a7), i={i}, j={j}"),
                &[s(1, 1, i), s(1, 3, j), s(1, 4, 7)],
            ));
        }
    }
    out
}

/// The printed description of the 36 positive E6 roots.
pub fn printed_e6_positive_family() -> Vec<ExpressionAudit> {
    let mut out = vec![audit(
        "a1+2a2+2a3+3a4+2a5+a6".into(),
        &[a(1), s(2, 2, 2), s(2, 3, 3), s(3, 4, 4), s(2, 5, 5), a(6)],
    )];
    for j in 2..=6 {
        out.push(audit(format!("a1+sum(a3..a{j})"), &[a(1), s(1, 3, j)]));
    }
    for i in 2..=6 {
        for j in (i + 1)..=6 {
            out.push(audit(format!("sum(a{}..a{j})", i + 1), &[s(1, i + 1, j)]));
        }
    }
    for j in 2..=6 {
        for k in (j + 1)..=6 {
            out.push(audit(
                format!("sum(a2..a{j})+sum(a4..a{k})"),
                &[s(1, 2, j), s(1, 4, k)],
            ));
        }
    }
    for i in 2..=6 {
        for j in (i + 1)..=6 {
            for k in (j + 1)..=6 {
                out.push(audit(
                    format!("sum(a1..a{i})+sum(a3..a{j})+sum(a4..a{k})"),
                    &[s(1, 1, i), s(1, 3, j), s(1, 4, k)],
                ));
            }
        }
    }
    out
}

/// β_1..β_27 in the fixed order of the module basis: β_i is the root whose
/// root vector is x_i. Fails if any printed expression is not a root with
/// α_7-coefficient 1, or if the 27 do not exhaust the positive E7 roots
/// outside E6.
pub fn bar_e7_positive_roots(system: &RootSystem) -> Result<Vec<RootVector>> {
    let mut out = Vec::with_capacity(27);
    for (i, terms) in MODULE_BASIS_EXPRESSIONS.iter().enumerate() {
        let v = normalize(terms);
        let label = format!("x{}", i + 1);
        let norm = v.norm();
        if norm != 2 {
            return Err(Error::NotARoot {
                label,
                vector: v,
                norm,
            });
        }
        if v.coeff(7) != 1 || !system.contains(&v) {
            return Err(Error::RootList(format!(
                "{label} = E_({v}) is not a positive root with a7-coefficient 1"
            )));
        }
        out.push(v);
    }
    let listed: BTreeSet<_> = out.iter().copied().collect();
    let expected: BTreeSet<_> = system.e7_positive_outside_e6().into_iter().collect();
    if listed.len() != 27 {
        return Err(Error::RootList(format!(
            "only {} distinct roots among x1..x27",
            listed.len()
        )));
    }
    if listed != expected {
        return Err(Error::RootList(
            "x1..x27 do not exhaust the positive E7 roots with a7 != 0".into(),
        ));
    }
    Ok(out)
}

/// A cocycle law that failed, with the witnessing lattice vectors.
#[derive(Clone, Debug, Serialize)]
pub struct CocycleViolation {
    pub law: &'static str,
    pub vectors: Vec<RootVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CocycleReport {
    pub triples_checked: usize,
    pub pairs_checked: usize,
    pub antisymmetry_pairs: usize,
    pub first_violation: Option<CocycleViolation>,
}

impl CocycleReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn check_pair(a: &RootVector, b: &RootVector) -> Option<CocycleViolation> {
    let fab = cocycle(a, b);
    let fba = cocycle(b, a);
    let sign_ab = if bilinear(a, b).rem_euclid(2) == 0 {
        1
    } else {
        -1
    };
    if fab * fba != sign_ab {
        return Some(CocycleViolation {
            law: "commutator",
            vectors: vec![*a, *b],
        });
    }
    let n = a.norm();
    let diag = if (n / 2).rem_euclid(2) == 0 { 1 } else { -1 };
    if cocycle(a, a) != diag {
        return Some(CocycleViolation {
            law: "diagonal",
            vectors: vec![*a],
        });
    }
    if is_root(a) && is_root(b) && is_root(&(*a + *b)) && fab != -fba {
        return Some(CocycleViolation {
            law: "antisymmetry",
            vectors: vec![*a, *b],
        });
    }
    None
}

fn check_triple(a: &RootVector, b: &RootVector, c: &RootVector) -> Option<CocycleViolation> {
    if cocycle(&(*a + *b), c) != cocycle(a, c) * cocycle(b, c) {
        return Some(CocycleViolation {
            law: "additive-left",
            vectors: vec![*a, *b, *c],
        });
    }
    if cocycle(a, &(*b + *c)) != cocycle(a, b) * cocycle(a, c) {
        return Some(CocycleViolation {
            law: "additive-right",
            vectors: vec![*a, *b, *c],
        });
    }
    None
}

/// Seeded random lattice vectors with coefficients in [-3, 3].
pub fn random_lattice_vectors(seed: u64, count: usize) -> Vec<RootVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| RootVector(std::array::from_fn(|_| rng.gen_range(-3..=3))))
        .collect()
}

/// Checks biadditivity, the commutator and diagonal laws and antisymmetry on
/// root pairs with a root sum. The sample is all pairs of positive E6 roots
/// (each paired with the seven simple roots for the triple laws) plus
/// `random_pairs` seeded random lattice triples.
pub fn check_cocycle_laws(system: &RootSystem, seed: u64, random_pairs: usize) -> CocycleReport {
    let pos = &system.e6_positive;
    let simples: Vec<_> = (1..=E7_RANK).map(RootVector::simple).collect();
    let mut pairs: Vec<(RootVector, RootVector)> = Vec::new();
    for x in pos {
        for y in pos {
            pairs.push((*x, *y));
        }
    }
    // also every E6 root pair in both signs, for antisymmetry
    for x in &system.e6_roots {
        for y in &system.e6_roots {
            if x.0[..6].iter().any(|&k| k < 0) || y.0[..6].iter().any(|&k| k < 0) {
                pairs.push((*x, *y));
            }
        }
    }
    let random = random_lattice_vectors(seed, 3 * random_pairs);
    let random_triples: Vec<_> = random.chunks(3).map(|c| (c[0], c[1], c[2])).collect();
    for t in &random_triples {
        pairs.push((t.0, t.1));
    }

    let antisymmetry_pairs = pairs
        .iter()
        .filter(|(x, y)| is_root(x) && is_root(y) && is_root(&(*x + *y)))
        .count();
    let mut first_violation = pairs.iter().find_map(|(x, y)| check_pair(x, y));

    let mut triples = 0;
    if first_violation.is_none() {
        'outer: for x in pos {
            for y in pos {
                for z in &simples {
                    triples += 1;
                    if let Some(v) = check_triple(x, y, z) {
                        first_violation = Some(v);
                        break 'outer;
                    }
                }
            }
        }
    }
    if first_violation.is_none() {
        for (x, y, z) in &random_triples {
            triples += 1;
            if let Some(v) = check_triple(x, y, z) {
                first_violation = Some(v);
                break;
            }
        }
    }
    CocycleReport {
        triples_checked: triples,
        pairs_checked: pairs.len(),
        antisymmetry_pairs,
        first_violation,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bilinear_examples() {
        let a1 = RootVector::simple(1);
        assert_eq!(bilinear(&a1, &a1), 2);
        assert_eq!(bilinear(&a1, &RootVector::simple(3)), -1);
        assert_eq!(bilinear(&a1, &RootVector::simple(2)), 0);
        assert_eq!(bilinear(&RootVector::simple(2), &RootVector::simple(4)), -1);
        assert_eq!(bilinear(&RootVector::simple(2), &RootVector::simple(3)), 0);
    }

    #[test]
    fn bilinear_agrees_with_cartan_form() {
        let form = CartanForm::e7();
        for x in random_lattice_vectors(7, 40) {
            for y in random_lattice_vectors(8, 40) {
                assert_eq!(form.pair(&x, &y), bilinear(&x, &y));
                assert_eq!(bilinear(&x, &y), bilinear(&y, &x));
            }
        }
    }

    #[test]
    fn cartan_form_invariants() {
        let form = CartanForm::e7();
        assert!(form.is_symmetric());
        assert!((1..=7).all(|i| form.entry(i, i) == 2));
        // A1, A1xA1, A2xA1, A4, D5, E6, E7
        assert_eq!(form.leading_minors(), vec![2, 4, 6, 5, 4, 3, 2]);
        assert!(form.is_positive_definite());
    }

    #[test]
    fn cocycle_examples() {
        let (a1, a2, a3) = (
            RootVector::simple(1),
            RootVector::simple(2),
            RootVector::simple(3),
        );
        assert_eq!(cocycle(&a1, &a1), -1);
        assert_eq!(cocycle(&a1, &a2), 1);
        assert_eq!(cocycle(&a3, &a1), -1);
        assert_eq!(cocycle(&a1, &a3), 1);
        assert_eq!(cocycle(&a1, &a3), -cocycle(&a3, &a1));
    }

    #[test]
    fn display_root_vector() {
        assert_eq!(RootVector([1, 0, 2, 0, 0, 0, -1]).to_string(), "a1+2a3-a7");
        assert_eq!(RootVector::ZERO.to_string(), "0");
        assert_eq!(RootVector([-1, 0, 0, 0, 0, 0, 0]).to_string(), "-a1");
    }

    #[test]
    fn range_sums_normalize() {
        assert_eq!(
            normalize(MODULE_BASIS_EXPRESSIONS[0]),
            RootVector([2, 2, 3, 4, 3, 2, 1])
        );
        assert_eq!(
            normalize(MODULE_BASIS_EXPRESSIONS[26]),
            RootVector::simple(7)
        );
        assert_eq!(
            normalize(MODULE_BASIS_EXPRESSIONS[25]),
            RootVector([0, 0, 0, 0, 0, 1, 1])
        );
        // empty range
        assert_eq!(normalize(&[s(1, 4, 3)]), RootVector::ZERO);
    }
}
