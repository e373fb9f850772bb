//! The Lie algebras of type E7 and E6 in the basis {α_i} ∪ {E_α}.
//!
//! Bracket: [h, h'] = 0, [h, E_α] = (h, α) E_α, [E_α, E_{-α}] = -α, and
//! [E_α, E_β] = F(α, β) E_{α+β} when α+β is a root, 0 otherwise.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::rootsys::{bilinear, cocycle, is_root, RootSystem, RootVector, E6_RANK, E7_RANK};
use crate::scalar::Coeff;

/// A basis element: a simple coroot α_i (1-based) or a root vector E_α.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Basis {
    Cartan(usize),
    Root(RootVector),
}

impl Basis {
    pub fn is_e6(&self) -> bool {
        match self {
            Basis::Cartan(i) => *i <= E6_RANK,
            Basis::Root(r) => r.coeff(7) == 0,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Cartan(i) => write!(f, "h{i}"),
            Basis::Root(r) => write!(f, "E({r})"),
        }
    }
}

/// Element of the E7 algebra with exact coefficients. Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElement<C> {
    pub cartan: BTreeMap<usize, C>,
    pub roots: BTreeMap<RootVector, C>,
}

impl<C: Coeff> Default for AlgElement<C> {
    fn default() -> Self {
        Self::zero()
    }
}

fn add_into<K: Ord, C: Coeff>(map: &mut BTreeMap<K, C>, k: K, c: C) {
    if c.is_zero() {
        return;
    }
    let v = map.remove(&k).map(|v| v + c.clone()).unwrap_or(c);
    if !v.is_zero() {
        map.insert(k, v);
    }
}

impl<C: Coeff> AlgElement<C> {
    pub fn zero() -> Self {
        AlgElement {
            cartan: BTreeMap::new(),
            roots: BTreeMap::new(),
        }
    }

    pub fn basis(b: Basis) -> Self {
        let mut e = Self::zero();
        e.add_basis(b, C::one());
        e
    }

    /// E_α; panics if α is not a root.
    pub fn root(a: RootVector) -> Self {
        assert!(is_root(&a), "{a} is not a root");
        Self::basis(Basis::Root(a))
    }

    /// α_i as a Cartan element (1-based).
    pub fn cartan(i: usize) -> Self {
        Self::basis(Basis::Cartan(i))
    }

    /// The lattice vector Σ k_i α_i viewed in the Cartan subalgebra.
    pub fn coroot(a: &RootVector) -> Self {
        let mut e = Self::zero();
        for i in 1..=E7_RANK {
            add_into(&mut e.cartan, i, C::from_i64(a.coeff(i) as i64));
        }
        e
    }

    pub fn add_basis(&mut self, b: Basis, c: C) {
        match b {
            Basis::Cartan(i) => add_into(&mut self.cartan, i, c),
            Basis::Root(r) => add_into(&mut self.roots, r, c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.is_empty() && self.roots.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Basis, &C)> {
        self.cartan
            .iter()
            .map(|(i, c)| (Basis::Cartan(*i), c))
            .chain(self.roots.iter().map(|(r, c)| (Basis::Root(*r), c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_basis(b, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero();
        for (b, c) in self.terms() {
            out.add_basis(b, c.clone() * s.clone());
        }
        out
    }

    pub fn is_e6(&self) -> bool {
        self.terms().all(|(b, _)| b.is_e6())
    }

    /// Every root key is a genuine root.
    pub fn is_valid(&self) -> bool {
        self.roots.keys().all(is_root) && self.cartan.keys().all(|i| (1..=E7_RANK).contains(i))
    }
}

impl<C: Coeff> fmt::Display for AlgElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(b, c)| format!("({c}){b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Bracket of two basis elements.
pub fn bracket_basis<C: Coeff>(x: Basis, y: Basis) -> AlgElement<C> {
    let mut out = AlgElement::zero();
    match (x, y) {
        (Basis::Cartan(_), Basis::Cartan(_)) => {}
        (Basis::Cartan(i), Basis::Root(b)) => {
            out.add_basis(y, C::from_i64(bilinear(&RootVector::simple(i), &b)));
        }
        (Basis::Root(a), Basis::Cartan(j)) => {
            out.add_basis(x, C::from_i64(-bilinear(&RootVector::simple(j), &a)));
        }
        (Basis::Root(a), Basis::Root(b)) => {
            let s = a + b;
            if s.is_zero() {
                out = AlgElement::coroot(&a).scale(&-C::one());
            } else if is_root(&s) {
                out.add_basis(Basis::Root(s), C::from_i64(cocycle(&a, &b) as i64));
            }
        }
    }
    out
}

/// Bilinear extension of [`bracket_basis`].
pub fn bracket<C: Coeff>(x: &AlgElement<C>, y: &AlgElement<C>) -> AlgElement<C> {
    let mut out = AlgElement::zero();
    for (bx, cx) in x.terms() {
        for (by, cy) in y.terms() {
            let c = cx.clone() * cy.clone();
            for (b, v) in bracket_basis::<C>(bx, by).terms() {
                out.add_basis(b, v.clone() * c.clone());
            }
        }
    }
    out
}

pub fn e7_basis(system: &RootSystem) -> Vec<Basis> {
    (1..=E7_RANK)
        .map(Basis::Cartan)
        .chain(system.all_roots.iter().map(|r| Basis::Root(*r)))
        .collect()
}

pub fn e6_basis(system: &RootSystem) -> Vec<Basis> {
    (1..=E6_RANK)
        .map(Basis::Cartan)
        .chain(system.e6_roots.iter().map(|r| Basis::Root(*r)))
        .collect()
}

/// The 12 simple root vectors E_{±α_i} and 6 Cartans of E6.
pub fn e6_generators() -> Vec<Basis> {
    let mut v: Vec<Basis> = (1..=E6_RANK).map(Basis::Cartan).collect();
    for i in 1..=E6_RANK {
        v.push(Basis::Root(RootVector::simple(i)));
        v.push(Basis::Root(-RootVector::simple(i)));
    }
    v
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub antisymmetry_pairs: usize,
    pub first_failure: Option<[Basis; 3]>,
}

impl JacobiReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn jacobiator<C: Coeff>(x: Basis, y: Basis, z: Basis) -> AlgElement<C> {
    let (x, y, z) = (
        AlgElement::<C>::basis(x),
        AlgElement::basis(y),
        AlgElement::basis(z),
    );
    bracket(&bracket(&x, &y), &z)
        .add(&bracket(&bracket(&y, &z), &x))
        .add(&bracket(&bracket(&z, &x), &y))
}

/// Jacobi identity on the given triples, plus antisymmetry on the pairs they
/// contain.
pub fn jacobi_check<C: Coeff>(triples: &[[Basis; 3]]) -> JacobiReport {
    let first_failure = triples
        .par_iter()
        .find_first(|t| {
            let anti = bracket_basis::<C>(t[0], t[1]).add(&bracket_basis::<C>(t[1], t[0]));
            !anti.is_zero() || !jacobiator::<C>(t[0], t[1], t[2]).is_zero()
        })
        .copied();
    JacobiReport {
        triples_checked: triples.len(),
        antisymmetry_pairs: triples.len(),
        first_failure,
    }
}

/// All triples of E6 generators plus `random` seeded triples of E7 basis
/// elements.
pub fn default_jacobi_sample(system: &RootSystem, seed: u64, random: usize) -> Vec<[Basis; 3]> {
    let gens = e6_generators();
    let mut out = Vec::new();
    for &a in &gens {
        for &b in &gens {
            for &c in &gens {
                out.push([a, b, c]);
            }
        }
    }
    let basis = e7_basis(system);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..random {
        let mut pick = || basis[rng.gen_range(0..basis.len())];
        out.push([pick(), pick(), pick()]);
    }
    out
}

/// Brackets of E6 basis pairs stay in E6. Returns the first escaping pair.
pub fn e6_closure_violation<C: Coeff>(system: &RootSystem) -> Option<(Basis, Basis)> {
    let basis = e6_basis(system);
    basis
        .iter()
        .flat_map(|&a| basis.iter().map(move |&b| (a, b)))
        .find(|&(a, b)| !bracket_basis::<C>(a, b).is_e6())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::enumerate_roots;
    use crate::Q;

    type E = AlgElement<Q>;

    #[test]
    fn bracket_examples() {
        let a1 = RootVector::simple(1);
        let a3 = RootVector::simple(3);
        assert_eq!(
            bracket(&E::cartan(1), &E::root(a1)),
            E::root(a1).scale(&Q::from_i64(2))
        );
        assert_eq!(
            bracket(&E::root(a1), &E::root(-a1)),
            E::cartan(1).scale(&Q::from_i64(-1))
        );
        let f = cocycle(&a1, &a3) as i64;
        assert_eq!(
            bracket(&E::root(a1), &E::root(a3)),
            E::root(a1 + a3).scale(&Q::from_i64(f))
        );
        assert!(bracket(&E::root(a1), &E::root(RootVector::simple(2))).is_zero());
    }

    #[test]
    fn rank_one_triple() {
        let a1 = RootVector::simple(1);
        assert!(jacobiator::<Q>(Basis::Root(a1), Basis::Root(-a1), Basis::Cartan(1)).is_zero());
    }

    #[test]
    fn e6_is_closed() {
        let sys = enumerate_roots().unwrap();
        assert_eq!(e6_closure_violation::<Q>(&sys), None);
    }
}
