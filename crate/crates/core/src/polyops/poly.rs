use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::monomial::{Monomial, NVARS};
use crate::scalar::{content_scale, Coeff};

/// Sparse polynomial in x_1..x_27. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coeff> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    /// The variable with 0-based index `i`.
    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), C::one())
    }

    /// x_label, 1-based as in the printed formulas.
    pub fn x(label: usize) -> Self {
        Self::var(label - 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Builds from `(coefficient, labels)` pairs, e.g. `(1, &[1, 14])` for x_1 x_14.
    pub fn from_labelled(terms: &[(i64, &[usize])]) -> Self {
        Self::from_terms(
            terms
                .iter()
                .map(|(c, l)| (Monomial::from_labels(l), C::from_i64(*c))),
        )
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, C> {
        &self.terms
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Largest monomial in the graded-lex order with its coefficient.
    pub fn leading_term(&self) -> Option<(Monomial, C)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c.clone()))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * s.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut out = Self::zero();
        for (m, c) in &small.terms {
            for (k, d) in &big.terms {
                out.add_term(m.mul(k), c.clone() * d.clone());
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative in the variable with 0-based index `i`.
    pub fn diff(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let k = m.exp(i);
            if k > 0 {
                out.add_term(m.div(&Monomial::var(i)), c.clone() * C::from_i64(k as i64));
            }
        }
        out
    }

    /// Variable substitution x_i ↦ x_{perm[i]} (0-based).
    pub fn permute(&self, perm: &[usize; NVARS]) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (m.permute(perm), c.clone())))
    }

    /// Scaled to coprime integer coefficients with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        let mut s = content_scale(self.terms.values());
        if let Some((_, c)) = self.leading_term() {
            if c.is_negative() {
                s = -s;
            }
        }
        self.scale(&s)
    }

    /// `Some(c)` when `self = c · other` with `other` nonzero.
    pub fn ratio_to(&self, other: &Self) -> Option<C> {
        let (m, c) = other.leading_term()?;
        let r = self.coeff(&m) / c;
        if self.len() == other.len() && other.scale(&r) == *self {
            Some(r)
        } else {
            None
        }
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<C: Coeff> fmt::Display for Polynomial<C> {
    /// Descending graded-lex order, e.g. `x1x14 + x2x11 - x4x7`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else if a.is_integer() {
                write!(f, "{a}{m}")?;
            } else {
                write!(f, "({a}){m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<&Polynomial<C>> for &Polynomial<C> {
            type Output = Polynomial<C>;
            fn $m(self, rhs: &Polynomial<C>) -> Polynomial<C> {
                Polynomial::$m(self, rhs)
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);

impl<C: Coeff> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u8>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    terms: Vec<TermJson>,
}

impl<C: Coeff> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyJson {
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    exps: m.0.to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de, C: Coeff> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = PolyJson::deserialize(d)?;
        let mut p = Polynomial::zero();
        for t in raw.terms {
            let exps: [u8; NVARS] = t.exps.try_into().map_err(|v: Vec<u8>| {
                D::Error::custom(format!("expected 27 exponents, got {}", v.len()))
            })?;
            let c = C::parse(&t.coeff)
                .ok_or_else(|| D::Error::custom(format!("bad coefficient {:?}", t.coeff)))?;
            p.add_term(Monomial(exps), c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type P = Polynomial<BigRational>;

    #[test]
    fn arithmetic_basics() {
        let a = &P::x(1) + &P::x(2);
        let b = &P::x(1) - &P::x(2);
        assert_eq!(&a * &b, &P::x(1).pow(2) - &P::x(2).pow(2));
        assert!((&a - &a).is_zero());
        assert_eq!(a.pow(2).len(), 3);
        assert_eq!(
            P::x(3).pow(3).diff(2),
            P::x(3).pow(2).scale(&BigRational::from_i64(3))
        );
    }

    #[test]
    fn display_and_leading_term() {
        let z = P::from_labelled(&[
            (1, &[1, 14]),
            (1, &[2, 11]),
            (1, &[3, 9]),
            (-1, &[4, 7]),
            (1, &[5, 6]),
        ]);
        assert_eq!(z.to_string(), "x1x14 + x2x11 + x3x9 - x4x7 + x5x6");
        assert_eq!(z.leading_term().unwrap().0, Monomial::from_labels(&[1, 14]));
        assert_eq!(z.neg().primitive(), z);
    }

    #[test]
    fn json_round_trip() {
        let p = P::from_labelled(&[(3, &[1, 14, 27]), (-1, &[4, 7, 27])])
            .scale(&BigRational::new(1.into(), 2.into()));
        let s = serde_json::to_string(&p).unwrap();
        assert!(s.contains("\"3/2\""));
        let q: P = serde_json::from_str(&s).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn ratio_detection() {
        let a = &P::x(1) + &P::x(2);
        assert_eq!(
            a.scale(&BigRational::from_i64(-4)).ratio_to(&a),
            Some(BigRational::from_i64(-4))
        );
        assert_eq!(P::x(1).ratio_to(&a), None);
    }
}
