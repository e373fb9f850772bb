use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use super::monomial::{Monomial, NVARS};
use super::poly::Polynomial;
use crate::scalar::Coeff;

/// Differential operator with polynomial coefficients, normal ordered:
/// each term is `c · x^a ∂^b` with every multiplication left of every
/// derivative. Keys are `(a, b)`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOp<C> {
    terms: BTreeMap<(Monomial, Monomial), C>,
}

impl<C: Coeff> Default for DiffOp<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// (m)_k = m(m−1)…(m−k+1)
fn falling(m: u8, k: u8) -> i128 {
    (0..k as i128).map(|j| m as i128 - j).product()
}

fn binom(n: u8, k: u8) -> i128 {
    falling(n, k) / falling(k, k)
}

fn to_coeff<C: Coeff>(v: i128) -> C {
    C::from_i64(i64::try_from(v).expect("combinatorial factor exceeds i64"))
}

impl<C: Coeff> DiffOp<C> {
    pub fn zero() -> Self {
        DiffOp {
            terms: BTreeMap::new(),
        }
    }

    pub fn identity() -> Self {
        Self::scalar(C::one())
    }

    pub fn scalar(c: C) -> Self {
        Self::term(Monomial::ONE, Monomial::ONE, c)
    }

    pub fn term(x: Monomial, d: Monomial, c: C) -> Self {
        let mut op = Self::zero();
        op.add_term(x, d, c);
        op
    }

    /// `x_i ∂_{x_j}` with 0-based indices.
    pub fn x_d(i: usize, j: usize) -> Self {
        Self::term(Monomial::var(i), Monomial::var(j), C::one())
    }

    /// `∂_{x_i}`, 0-based.
    pub fn d(i: usize) -> Self {
        Self::term(Monomial::ONE, Monomial::var(i), C::one())
    }

    /// Σ x_i ∂_{x_i}
    pub fn euler() -> Self {
        let mut op = Self::zero();
        for i in 0..NVARS {
            op.add_term(Monomial::var(i), Monomial::var(i), C::one());
        }
        op
    }

    /// Multiplication by `f`.
    pub fn mul_by(f: &Polynomial<C>) -> Self {
        let mut op = Self::zero();
        for (m, c) in f.iter() {
            op.add_term(*m, Monomial::ONE, c.clone());
        }
        op
    }

    /// x^α ↦ ∂^α with the same coefficient.
    pub fn dualize(f: &Polynomial<C>) -> Self {
        let mut op = Self::zero();
        for (m, c) in f.iter() {
            op.add_term(Monomial::ONE, *m, c.clone());
        }
        op
    }

    pub fn add_term(&mut self, x: Monomial, d: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((x, d)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let v = e.get().clone() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<(Monomial, Monomial), C> {
        &self.terms
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

    pub fn coeff(&self, x: &Monomial, d: &Monomial) -> C {
        self.terms.get(&(*x, *d)).cloned().unwrap_or_else(C::zero)
    }

    /// Largest derivative degree among the terms (0 for the zero operator).
    pub fn order(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, d)| d.degree())
            .max()
            .unwrap_or(0)
    }

    /// Every term has the shape c·x_i∂_{x_j}.
    pub fn is_first_order_linear(&self) -> bool {
        self.terms
            .keys()
            .all(|(x, d)| x.degree() == 1 && d.degree() == 1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((x, d), c) in &other.terms {
            out.add_term(*x, *d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((x, d), c) in &other.terms {
            out.add_term(*x, *d, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (*k, c.clone() * s.clone()))
                .collect(),
        }
    }

    /// Normal-ordered product `self ∘ other`, using
    /// ∂^n x^m = Σ_k C(n,k) (m)_k x^{m−k} ∂^{n−k} coordinatewise.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a, b), ca) in &self.terms {
            for ((c, d), cb) in &other.terms {
                let coef = ca.clone() * cb.clone();
                let overlap: Vec<usize> =
                    (0..NVARS).filter(|&i| b.0[i] > 0 && c.0[i] > 0).collect();
                let mut k = [0u8; NVARS];
                loop {
                    let mut factor: i128 = 1;
                    for &i in &overlap {
                        factor *= binom(b.0[i], k[i]) * falling(c.0[i], k[i]);
                    }
                    let km = Monomial(k);
                    let x = a.mul(&c.div(&km));
                    let dd = b.div(&km).mul(d);
                    out.add_term(x, dd, coef.clone() * to_coeff::<C>(factor));
                    // odometer over k_i ∈ 0..=min(b_i, c_i)
                    let mut pos = 0;
                    loop {
                        if pos == overlap.len() {
                            break;
                        }
                        let i = overlap[pos];
                        if k[i] < b.0[i].min(c.0[i]) {
                            k[i] += 1;
                            break;
                        }
                        k[i] = 0;
                        pos += 1;
                    }
                    if pos == overlap.len() {
                        break;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Action on a polynomial: differentiate by ∂^b, then multiply by x^a.
    pub fn apply(&self, f: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for ((a, b), c) in &self.terms {
            for (m, v) in f.iter() {
                if !b.divides(m) {
                    continue;
                }
                let mut factor: i128 = 1;
                for i in 0..NVARS {
                    if b.0[i] > 0 {
                        factor *= falling(m.0[i], b.0[i]);
                    }
                }
                out.add_term(
                    a.mul(&m.div(b)),
                    c.clone() * v.clone() * to_coeff::<C>(factor),
                );
            }
        }
        out
    }

    /// Matrix of a first-order linear operator on span{x_1..x_27}:
    /// `m[i][j]` is the coefficient of x_i in the image of x_j (0-based).
    pub fn linear_matrix(&self) -> Option<Vec<Vec<C>>> {
        if !self.is_first_order_linear() {
            return None;
        }
        let mut m = vec![vec![C::zero(); NVARS]; NVARS];
        for ((x, d), c) in &self.terms {
            let i = x.factors()[0];
            let j = d.factors()[0];
            m[i][j] = c.clone();
        }
        Some(m)
    }
}

impl<C: Coeff> fmt::Display for DiffOp<C> {
    /// Descending order, e.g. `-x1∂x2 + x11∂x14`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, ((x, d), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = a.is_one();
            if !unit || (x.is_one() && d.is_one()) {
                if a.is_integer() {
                    write!(f, "{a}")?;
                } else {
                    write!(f, "({a})")?;
                }
            }
            if !x.is_one() {
                write!(f, "{x}")?;
            }
            for i in d.factors() {
                write!(f, "∂x{}", i + 1)?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for DiffOp<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DiffOp({self})")
    }
}

#[derive(Serialize)]
struct OpTermJson {
    x: Vec<u8>,
    d: Vec<u8>,
    coeff: String,
}

impl<C: Coeff> Serialize for DiffOp<C> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms: Vec<OpTermJson> = self
            .terms
            .iter()
            .map(|((x, d), c)| OpTermJson {
                x: x.0.to_vec(),
                d: d.0.to_vec(),
                coeff: c.to_string(),
            })
            .collect();
        terms.serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    type Op = DiffOp<BigRational>;
    type P = Polynomial<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_i64(v)
    }

    #[test]
    fn canonical_commutation() {
        let d1 = Op::d(0);
        let x1 = Op::mul_by(&P::x(1));
        assert_eq!(d1.compose(&x1), Op::x_d(0, 0).add(&Op::identity()));
        assert_eq!(d1.commutator(&x1), Op::identity());
        assert_eq!(Op::euler().commutator(&x1), x1);
    }

    #[test]
    fn second_order_rule() {
        let d2 = Op::dualize(&P::x(1).pow(2));
        let x2 = Op::mul_by(&P::x(1).pow(2));
        let sq = Monomial::from_labels(&[1, 1]);
        let lin = Monomial::from_labels(&[1]);
        let mut expect = Op::term(sq, sq, q(1));
        expect.add_term(lin, lin, q(4));
        expect.add_term(Monomial::ONE, Monomial::ONE, q(2));
        assert_eq!(d2.compose(&x2), expect);
        for k in 0..4 {
            let f = P::x(1).pow(k);
            assert_eq!(d2.compose(&x2).apply(&f), d2.apply(&x2.apply(&f)));
        }
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Op::x_d(0, 1).apply(&P::x(2)), P::x(1));
        let f = P::x(1).pow(2).mul(&P::x(5)).add(&P::x(3).pow(3));
        assert_eq!(Op::euler().apply(&f), f.scale(&q(3)));
        assert_eq!(Op::dualize(&P::one()), Op::identity());
    }

    #[test]
    fn display() {
        let op = Op::x_d(10, 13).sub(&Op::x_d(0, 1));
        assert_eq!(op.to_string(), "-x1∂x2 + x11∂x14");
    }
}
