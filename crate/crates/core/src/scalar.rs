//! Exact coefficient fields.
//!
//! Everything downstream (polynomials, differential operators, Lie algebra
//! elements, kernels) is generic over [`Coeff`]. The trait is implemented for
//! every `Ratio<T>` whose integer part is a signed integer type, so the same
//! code runs over `BigRational` (the default, see [`crate::Q`]) and over the
//! fixed-width `Ratio<i64>` / `Ratio<i128>` used in some tests.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, One, Signed, Zero};

/// An exact field of characteristic zero with an integer ring underneath.
pub trait Coeff: Clone + Debug + Display + Eq + Ord + Num + Signed + Send + Sync + 'static {
    /// The integers inside the field; fraction-free elimination runs here.
    type Int: Integer + Signed + Clone + Debug + Display + From<i64> + Send + Sync + 'static;

    fn from_i64(v: i64) -> Self;
    fn from_int(n: Self::Int) -> Self;
    fn from_frac(n: Self::Int, d: Self::Int) -> Self;
    fn numer_int(&self) -> Self::Int;
    fn denom_int(&self) -> Self::Int;
    /// The value as a big integer when it is integral.
    fn to_bigint(&self) -> Option<BigInt>;
    /// Parses `"p"` or `"p/q"`.
    fn parse(s: &str) -> Option<Self>;

    fn is_integer(&self) -> bool {
        self.denom_int().is_one()
    }
}

impl<T> Coeff for Ratio<T>
where
    T: Integer + Signed + Clone + Debug + Display + From<i64> + FromStr + Send + Sync + 'static,
    BigInt: From<T>,
{
    type Int = T;

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(T::from(v))
    }

    fn from_int(n: T) -> Self {
        Ratio::from_integer(n)
    }

    fn from_frac(n: T, d: T) -> Self {
        Ratio::new(n, d)
    }

    fn numer_int(&self) -> T {
        self.numer().clone()
    }

    fn denom_int(&self) -> T {
        self.denom().clone()
    }

    fn to_bigint(&self) -> Option<BigInt> {
        if self.denom().is_one() {
            Some(BigInt::from(self.numer().clone()))
        } else {
            None
        }
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = n.trim().parse::<T>().ok()?;
                let d = d.trim().parse::<T>().ok()?;
                if d.is_zero() {
                    None
                } else {
                    Some(Ratio::new(n, d))
                }
            }
            None => s.parse::<T>().ok().map(Ratio::from_integer),
        }
    }
}

/// Scale factor that turns `coeffs` into coprime integers (lcm of the
/// denominators over gcd of the numerators). Returns one for an empty slice.
pub fn content_scale<'a, C: Coeff>(coeffs: impl IntoIterator<Item = &'a C>) -> C {
    let mut lcm = C::Int::one();
    let mut gcd = C::Int::zero();
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        lcm = lcm.lcm(&c.denom_int());
        gcd = gcd.gcd(&c.numer_int());
    }
    if gcd.is_zero() {
        C::one()
    } else {
        C::from_frac(lcm, gcd.abs())
    }
}

/// Exact decimal (or `p/q`) rendering used in every serialized document.
pub fn to_decimal<C: Coeff>(c: &C) -> String {
    c.to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type R64 = Ratio<i64>;

    #[test]
    fn parse_and_display_round_trip() {
        let q = BigRational::parse("-6/4").unwrap();
        assert_eq!(q.to_string(), "-3/2");
        assert_eq!(BigRational::parse("17").unwrap().to_string(), "17");
        assert!(BigRational::parse("1/0").is_none());
        assert!(BigRational::parse("x").is_none());
        assert_eq!(R64::parse(" 5 / 10 ").unwrap(), R64::new(1, 2));
    }

    #[test]
    fn content_scale_clears_denominators_and_common_factors() {
        let v = [R64::new(2, 3), R64::new(4, 9), R64::from_integer(0)];
        let s = content_scale(&v);
        let scaled: Vec<_> = v.iter().map(|c| c * s).collect();
        assert_eq!(
            scaled,
            vec![
                R64::from_integer(3),
                R64::from_integer(2),
                R64::from_integer(0)
            ]
        );
        assert_eq!(content_scale::<R64>(&[]), R64::one());
    }

    #[test]
    fn integrality() {
        assert!(BigRational::from_i64(4).is_integer());
        assert_eq!(BigRational::from_i64(4).to_bigint(), Some(BigInt::from(4)));
        assert_eq!(R64::new(1, 2).to_bigint(), None);
    }
}
