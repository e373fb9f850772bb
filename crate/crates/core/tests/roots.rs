use e6rep::liealg::{
    bracket, default_jacobi_sample, e6_closure_violation, e7_basis, jacobi_check, AlgElement,
};
use e6rep::rootsys::{
    bar_e7_positive_roots, bilinear, check_cocycle_laws, cocycle, enumerate_roots, is_root,
    printed_e6_positive_family, printed_module_root_family, random_lattice_vectors, CartanForm,
    RootVector, DEFAULT_SEED, E7_EDGES,
};
use e6rep::Q;
use proptest::prelude::*;

// Cartan matrix typed out by hand from the Dynkin diagram 1-3-4-5-6-7 with 2 on 4.
const E7_CARTAN: [[i64; 7]; 7] = [
    [2, 0, -1, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0],
    [0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, -1, 2],
];

fn oracle_form(a: &RootVector, b: &RootVector) -> i64 {
    let mut s = 0;
    for i in 0..7 {
        for j in 0..7 {
            s += a.0[i] as i64 * E7_CARTAN[i][j] * b.0[j] as i64;
        }
    }
    s
}

// (-1)^(a^T L b) with L the lower-triangular part of the Cartan matrix, diagonal halved.
fn oracle_cocycle(a: &RootVector, b: &RootVector) -> i32 {
    let mut e = 0i64;
    for i in 0..7 {
        for j in 0..=i {
            let m = if i == j { 1 } else { E7_CARTAN[i][j] };
            e += a.0[i] as i64 * m * b.0[j] as i64;
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn lattice() -> impl Strategy<Value = RootVector> {
    prop::array::uniform7(-4i32..=4).prop_map(RootVector)
}

#[test]
fn cartan_form_matches_diagram() {
    let c = CartanForm::e7();
    assert!(c.is_symmetric());
    assert!(c.is_positive_definite());
    for i in 1..=7 {
        for j in 1..=7 {
            assert_eq!(c.entry(i, j) as i64, E7_CARTAN[i - 1][j - 1]);
        }
    }
    assert_eq!(E7_EDGES.len(), 6);
    // det of E7 Cartan matrix is 2
    assert_eq!(*c.leading_minors().last().unwrap(), 2);
}

#[test]
fn root_counts() {
    let sys = enumerate_roots().unwrap();
    // rank times Coxeter number
    assert_eq!(sys.all_roots.len(), 7 * 18);
    assert_eq!(sys.e6_roots.len(), 6 * 12);
    assert_eq!(sys.positive.len(), 63);
    assert_eq!(sys.e6_positive.len(), 36);
    assert!(sys.is_closed_under_negation());

    let bar = bar_e7_positive_roots(&sys).unwrap();
    assert_eq!(bar.len(), 27);
    assert!(bar.iter().all(|r| r.coeff(7) == 1));
    let mut union: Vec<_> = sys.e6_positive.iter().chain(bar.iter()).copied().collect();
    union.sort();
    union.dedup();
    assert_eq!(union.len(), 63);
    let mut pos = sys.positive.clone();
    pos.sort();
    assert_eq!(union, pos);

    let hi = sys.positive.iter().max_by_key(|r| r.height()).unwrap();
    assert_eq!(hi.0, [2, 2, 3, 4, 3, 2, 1]);
}

#[test]
fn printed_root_families() {
    let e6 = printed_e6_positive_family();
    assert_eq!(e6.len(), 36);
    assert!(e6.iter().all(|a| a.is_root));
    let module = printed_module_root_family();
    // one printed expression is not a root
    assert_eq!(module.iter().filter(|a| !a.is_root).count(), 1);
    assert_eq!(module.iter().filter(|a| a.is_root).count(), 27);
}

#[test]
fn cocycle_sweep() {
    let sys = enumerate_roots().unwrap();
    let rep = check_cocycle_laws(&sys, DEFAULT_SEED, 1000);
    assert!(rep.passed(), "{:?}", rep.first_violation);
    assert!(rep.pairs_checked >= 36 * 36);
}

#[test]
fn cocycle_agrees_with_oracle_on_all_root_pairs() {
    let sys = enumerate_roots().unwrap();
    for a in &sys.all_roots {
        for b in &sys.all_roots {
            assert_eq!(cocycle(a, b), oracle_cocycle(a, b));
            assert_eq!(bilinear(a, b), oracle_form(a, b));
        }
    }
}

#[test]
fn roots_have_diagonal_minus_one() {
    let sys = enumerate_roots().unwrap();
    for a in &sys.all_roots {
        assert!(is_root(a));
        assert_eq!(cocycle(a, a), -1);
    }
}

#[test]
fn random_vectors_are_seeded() {
    assert_eq!(random_lattice_vectors(7, 20), random_lattice_vectors(7, 20));
    assert_ne!(random_lattice_vectors(7, 20), random_lattice_vectors(8, 20));
}

#[test]
fn jacobi_and_closure() {
    let sys = enumerate_roots().unwrap();
    let sample = default_jacobi_sample(&sys, DEFAULT_SEED, 500);
    let rep = jacobi_check::<Q>(&sample);
    assert!(rep.passed(), "{:?}", rep.first_failure);
    assert_eq!(e6_closure_violation::<Q>(&sys), None);
    assert_eq!(e7_basis(&sys).len(), 133);
}

#[test]
fn sl2_triples() {
    let sys = enumerate_roots().unwrap();
    for a in &sys.positive {
        let e = AlgElement::<Q>::root(*a);
        let f = AlgElement::<Q>::root(-*a);
        let h = bracket(&e, &f);
        // [E_a, E_-a] = -a, and ad(-h) acts by 2 on E_a
        assert_eq!(
            h,
            AlgElement::coroot(a).scale(&Q::from_integer((-1).into()))
        );
        assert_eq!(bracket(&h, &e), e.scale(&Q::from_integer((-2).into())));
    }
}

proptest! {
    #[test]
    fn cocycle_bimultiplicative(a in lattice(), b in lattice(), c in lattice()) {
        prop_assert_eq!(cocycle(&(a + b), &c), cocycle(&a, &c) * cocycle(&b, &c));
        prop_assert_eq!(cocycle(&a, &(b + c)), cocycle(&a, &b) * cocycle(&a, &c));
    }

    #[test]
    fn cocycle_commutator_and_diagonal(a in lattice(), b in lattice()) {
        let sign = if oracle_form(&a, &b).rem_euclid(2) == 0 { 1 } else { -1 };
        prop_assert_eq!(cocycle(&a, &b) * cocycle(&b, &a), sign);
        let half = oracle_form(&a, &a) / 2;
        prop_assert_eq!(cocycle(&a, &a), if half.rem_euclid(2) == 0 { 1 } else { -1 });
        prop_assert_eq!(cocycle(&a, &b), oracle_cocycle(&a, &b));
    }
}
