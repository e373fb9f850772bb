//! Weyl dimension formula for highest weights m₁λ₁ + m₂λ₆ and the
//! generating-function identity (1−q)²⁶ Σ dim V(m₁λ₁+m₂λ₆) q^{m₁+2m₂} = 1+q+q².

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::rootsys::{enumerate_roots, E6_RANK};

/// Positive roots of E6 in simple-root coordinates with their ρ-pairings.
#[derive(Clone, Debug)]
pub struct DimCalculator {
    pub positive_roots: Vec<[i32; E6_RANK]>,
    pub rho_pairing: Vec<i64>,
}

impl DimCalculator {
    pub fn new() -> Self {
        let system = enumerate_roots().expect("E7 root enumeration");
        let positive_roots: Vec<[i32; E6_RANK]> = system
            .e6_positive
            .iter()
            .map(|r| std::array::from_fn(|j| r.coeff(j + 1)))
            .collect();
        let rho_pairing = positive_roots
            .iter()
            .map(|c| c.iter().map(|&x| x as i64).sum())
            .collect();
        DimCalculator {
            positive_roots,
            rho_pairing,
        }
    }

    /// dim V(λ) for λ = Σ m_i λ_i given in fundamental-weight coordinates.
    pub fn dim(&self, lambda: [u32; E6_RANK]) -> BigInt {
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for (c, rho) in self.positive_roots.iter().zip(&self.rho_pairing) {
            let pair: i64 = c
                .iter()
                .zip(lambda)
                .map(|(&cj, mj)| cj as i64 * (mj as i64 + 1))
                .sum();
            num *= pair;
            den *= *rho;
        }
        let q = BigRational::new(num, den);
        assert!(q.is_integer(), "Weyl product is not integral");
        q.to_integer()
    }

    pub fn weyl_dim(&self, m1: u32, m2: u32) -> BigInt {
        self.dim([m1, 0, 0, 0, 0, m2])
    }
}

impl Default for DimCalculator {
    fn default() -> Self {
        Self::new()
    }
}

/// dim V(m₁λ₁ + m₂λ₆)
pub fn weyl_dim(m1: u32, m2: u32) -> BigInt {
    static CALC: OnceLock<DimCalculator> = OnceLock::new();
    CALC.get_or_init(DimCalculator::new).weyl_dim(m1, m2)
}

/// C(m+26, 26), the dimension of degree-m polynomials in 27 variables.
pub fn poly_space_dim(m: u32) -> BigInt {
    binomial(BigInt::from(m + 26), BigInt::from(26))
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityRow {
    pub degree: u32,
    pub binomial: String,
    pub weyl_sum: String,
    /// Coefficient of q^degree in (1−q)²⁶ Σ dim V q^{m₁+2m₂}.
    pub series_coefficient: String,
    pub expected_series: i64,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub max_degree: u32,
    pub rows: Vec<IdentityRow>,
    pub first_failure: Option<u32>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Checks both the coefficient form C(m+26,26) = Σ_{m₃} Σ_{m₁+2m₂=m−3m₃} dim V
/// and the truncated series form through degree `n`.
pub fn identity_check(n: u32) -> IdentityReport {
    let calc = DimCalculator::new();
    // s[k] = Σ_{m₁+2m₂=k} dim V(m₁λ₁+m₂λ₆)
    let s: Vec<BigInt> = (0..=n)
        .map(|k| (0..=k / 2).map(|m2| calc.weyl_dim(k - 2 * m2, m2)).sum())
        .collect();
    let mut rows = Vec::new();
    let mut first_failure = None;
    for m in 0..=n {
        let weyl_sum: BigInt = (0..=m / 3).map(|m3| s[(m - 3 * m3) as usize].clone()).sum();
        let mut series = BigInt::zero();
        for j in 0..=m.min(26) {
            let term = binomial(BigInt::from(26), BigInt::from(j)) * &s[(m - j) as usize];
            if j % 2 == 0 {
                series += term;
            } else {
                series -= term;
            }
        }
        let expected_series = if m <= 2 { 1 } else { 0 };
        let bin = poly_space_dim(m);
        let passed = bin == weyl_sum && series == BigInt::from(expected_series);
        if !passed && first_failure.is_none() {
            first_failure = Some(m);
        }
        rows.push(IdentityRow {
            degree: m,
            binomial: bin.to_string(),
            weyl_sum: weyl_sum.to_string(),
            series_coefficient: series.to_string(),
            expected_series,
            passed,
        });
    }
    IdentityReport {
        max_degree: n,
        rows,
        first_failure,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings() {
        let c = DimCalculator::new();
        assert_eq!(c.positive_roots.len(), 36);
        assert!(c.rho_pairing.iter().all(|&p| p >= 1));
        assert_eq!(*c.rho_pairing.iter().max().unwrap(), 11);
    }

    #[test]
    fn small_dimensions() {
        let c = DimCalculator::new();
        let d = |a, b| c.weyl_dim(a, b).to_string();
        assert_eq!(d(0, 0), "1");
        assert_eq!(d(1, 0), "27");
        assert_eq!(d(0, 1), "27");
        assert_eq!(d(2, 0), "351");
        assert_eq!(d(1, 1), "650");
        assert_eq!(d(3, 0), "3003");
        // adjoint
        assert_eq!(c.dim([0, 1, 0, 0, 0, 0]).to_string(), "78");
    }

    #[test]
    fn identity_through_twelve() {
        let r = identity_check(12);
        assert!(r.passed(), "{:?}", r.first_failure);
        assert_eq!(r.rows[3].binomial, "3654");
    }
}
