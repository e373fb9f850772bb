use std::sync::OnceLock;

use e6rep::polyops::{parse_polynomial, Monomial, Polynomial};
use e6rep::rep::golden::ZETA_PRINTED;
use e6rep::rep::Representation;
use e6rep::singular::{
    annihilated_by, enumerate_singular, expected_dimension, expected_lines, singular_space,
    weight_space, WeightVector, Weights,
};
use e6rep::{Poly, Q};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rep() -> &'static Representation<Q> {
    static REP: OnceLock<Representation<Q>> = OnceLock::new();
    REP.get_or_init(|| Representation::build().unwrap())
}

fn weights() -> Weights {
    Weights::from_rep(rep())
}

// #{(a, b, c) : a + 2b + 3c = m}, by brute force
fn triples(m: u32) -> usize {
    let mut n = 0;
    for a in 0..=m {
        for b in 0..=m {
            for c in 0..=m {
                if a + 2 * b + 3 * c == m {
                    n += 1;
                }
            }
        }
    }
    n
}

fn binomial(n: u64, k: u64) -> BigInt {
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[test]
fn highest_weight_of_x1() {
    let w = weights();
    let s = singular_space(rep(), &w, 1, WeightVector::l1_l6(1, 0));
    assert_eq!(s, vec![Poly::x(1)]);
}

#[test]
fn zeta1_matches_printed() {
    let w = weights();
    let s = singular_space(rep(), &w, 2, WeightVector::l1_l6(0, 1));
    assert_eq!(s.len(), 1);
    let printed: Poly = parse_polynomial(ZETA_PRINTED[0], "zeta1").unwrap();
    assert_eq!(s[0], printed);
    assert_eq!(s[0].len(), 5);
}

#[test]
fn cubic_invariant_line() {
    let w = weights();
    let s = singular_space(rep(), &w, 3, WeightVector::ZERO);
    assert_eq!(s.len(), 1);
    assert_eq!(s[0].len(), 45);
    // primitive normalization: all coefficients ±1
    let one = Q::from_integer(1.into());
    assert!(s[0].iter().all(|(_, c)| *c == one || *c == -one.clone()));
    for (_, op) in rep().operators() {
        assert!(op.apply(&s[0]).is_zero());
    }
}

#[test]
fn census_through_degree_five() {
    let r = rep();
    let w = weights();
    let all_positive = r.positive_ops();
    for m in 0..=5u32 {
        let census = enumerate_singular(r, &w, m);
        assert_eq!(census.lines(), triples(m), "degree {m}");
        assert_eq!(expected_lines(m), triples(m));
        for cell in &census.cells {
            let (m1, m2) = cell
                .weight
                .as_l1_l6()
                .unwrap_or_else(|| panic!("unexpected weight {}", cell.weight));
            assert_eq!(
                cell.vectors.len(),
                expected_dimension(m, m1 as u32, m2 as u32)
            );
            for v in &cell.vectors {
                assert!(annihilated_by(&all_positive, v));
                assert_eq!(v.degree(), Some(m));
                assert!(v.is_homogeneous());
            }
        }
    }
}

#[test]
fn weight_spaces_partition_degree() {
    let w = weights();
    for m in 0..=3u32 {
        let total: usize = w.spaces(m).values().map(Vec::len).sum();
        assert_eq!(BigInt::from(total), binomial(m as u64 + 26, 26));
    }
    let top = weight_space(&w, 2, WeightVector::l1_l6(2, 0));
    assert_eq!(top.monomials, vec![Monomial::from_labels(&[1, 1])]);
}

proptest! {
    #[test]
    fn weight_is_additive(a in prop::collection::vec(1usize..=27, 0..4), b in prop::collection::vec(1usize..=27, 0..4)) {
        let w = weights();
        let (ma, mb) = (Monomial::from_labels(&a), Monomial::from_labels(&b));
        let lhs = w.of(&ma.mul(&mb));
        let (wa, wb) = (w.of(&ma), w.of(&mb));
        let mut sum = [0; 6];
        for i in 0..6 {
            sum[i] = wa.0[i] + wb.0[i];
        }
        prop_assert_eq!(lhs, WeightVector(sum));
    }

    #[test]
    fn raising_shifts_weight(i in 1usize..=6, labels in prop::collection::vec(1usize..=27, 1..4)) {
        // E_{α_i} raises the weight by α_i, read off as row i of the Cartan matrix
        const CARTAN: [[i32; 6]; 6] = [
            [2, 0, -1, 0, 0, 0],
            [0, 2, 0, -1, 0, 0],
            [-1, 0, 2, -1, 0, 0],
            [0, -1, -1, 2, -1, 0],
            [0, 0, 0, -1, 2, -1],
            [0, 0, 0, 0, -1, 2],
        ];
        let w = weights();
        let mono = Monomial::from_labels(&labels);
        let f: Poly = Polynomial::monomial(mono, Q::from_integer(1.into()));
        let g = rep().simple_raising(i).apply(&f);
        if let Some(wg) = w.of_poly(&g) {
            let wf = w.of(&mono);
            for j in 0..6 {
                prop_assert_eq!(wg.0[j], wf.0[j] + CARTAN[i - 1][j]);
            }
        }
    }
}
