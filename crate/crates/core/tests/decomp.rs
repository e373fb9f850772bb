use std::sync::OnceLock;

use e6rep::decomp::{
    composite_rank, kernel_basis, lowering_closure, phi_dim, weyl_sum_check, MAX_UNFORCED_DEGREE,
};
use e6rep::model::Model;
use e6rep::suite::pairing;
use e6rep::weyl::weyl_dim;
use e6rep::{Error, Q};
use num_bigint::BigInt;

fn model() -> &'static Model<Q> {
    static M: OnceLock<Model<Q>> = OnceLock::new();
    M.get_or_init(|| Model::build().unwrap())
}

fn binomial(n: i64, k: i64) -> BigInt {
    if n < k || n < 0 {
        return BigInt::from(0);
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

#[test]
fn kernel_dimensions() {
    let m = model();
    let expected = [1, 27, 378, 3653, 27378, 169533];
    for (deg, want) in expected.iter().enumerate() {
        let d = deg as i64;
        let oracle = binomial(d + 26, 26) - binomial(d + 23, 26);
        assert_eq!(oracle, BigInt::from(*want));
        let s = phi_dim(&m.eta.eta, &m.weights, deg as u32, false).unwrap();
        assert_eq!(s.dim_phi, want.to_string(), "degree {deg}");
        assert!(s.direct_sum_ok);
        assert!(s.passed());
        assert_eq!(s.dim_am_minus_3, binomial(d + 23, 26).to_string());
        let w = weyl_sum_check(&s);
        assert!(w.passed);
        let sum: BigInt = w
            .terms
            .iter()
            .map(|(_, v)| v.parse::<BigInt>().unwrap())
            .sum();
        assert_eq!(sum.to_string(), s.dim_phi);
    }
}

#[test]
fn composite_map_is_injective() {
    let m = model();
    for deg in 3..=5u32 {
        let r = composite_rank(&m.eta.eta, &m.weights, deg);
        assert_eq!(BigInt::from(r), binomial(deg as i64 + 23, 26));
    }
}

#[test]
fn explicit_kernel_vectors() {
    let m = model();
    for deg in 0..=3u32 {
        let basis = kernel_basis(&m.eta.eta, &m.weights, deg);
        let d = deg as i64;
        assert_eq!(
            BigInt::from(basis.len()),
            binomial(d + 26, 26) - binomial(d + 23, 26)
        );
        for f in &basis {
            assert!(pairing(&m.eta.eta, f).is_zero());
        }
    }
}

#[test]
fn lowering_closures() {
    let m = model();
    let z1 = m.zeta.zeta(1);
    for (m1, m2, want) in [(1, 0, 27), (0, 1, 27), (2, 0, 351), (1, 1, 650)] {
        let d = lowering_closure(&m.rep, z1, m1, m2, false).unwrap();
        assert_eq!(d, want);
        assert_eq!(BigInt::from(d), weyl_dim(m1, m2));
    }
}

#[test]
fn cost_guards() {
    let m = model();
    let err = phi_dim(&m.eta.eta, &m.weights, MAX_UNFORCED_DEGREE + 1, false).unwrap_err();
    assert!(matches!(err, Error::CostGuard { .. }));
    let err = lowering_closure(&m.rep, m.zeta.zeta(1), 3, 1, false).unwrap_err();
    assert!(matches!(err, Error::CostGuard { .. }));
}
