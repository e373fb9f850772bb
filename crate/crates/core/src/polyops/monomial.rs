use std::cmp::Ordering;
use std::fmt;

/// Number of variables x_1..x_27.
pub const NVARS: usize = 27;

/// Exponent vector of a monomial in x_1..x_27. Index 0 holds the exponent of
/// x_1.
///
/// Ordered graded-lexicographically with x_1 > x_2 > ... > x_27, so the
/// maximum of a set of monomials is its leading monomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(pub [u8; NVARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; NVARS]);

    /// The variable with 0-based index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; NVARS];
        e[i] = 1;
        Monomial(e)
    }

    /// Product of variables given by 1-based labels, e.g. `from_labels(&[1, 14])`
    /// is x_1 x_14.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut e = [0u8; NVARS];
        for &l in labels {
            e[l - 1] += 1;
        }
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exp(&self, i: usize) -> u8 {
        self.0[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    /// `self / other`; caller guarantees divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Monomial(e)
    }

    /// Relabels variables: x_i ↦ x_{perm[i]} (0-based).
    pub fn permute(&self, perm: &[usize; NVARS]) -> Monomial {
        let mut e = [0u8; NVARS];
        for (i, &k) in self.0.iter().enumerate() {
            e[perm[i]] += k;
        }
        Monomial(e)
    }

    /// 0-based indices of the variables, with multiplicity, ascending.
    pub fn factors(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &k)| std::iter::repeat_n(i, k as usize))
            .collect()
    }

    /// All monomials of total degree `d`, in ascending order.
    pub fn all_of_degree(d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut e = [0u8; NVARS];
        fill(&mut out, &mut e, 0, d);
        out.sort();
        out
    }
}

fn fill(out: &mut Vec<Monomial>, e: &mut [u8; NVARS], pos: usize, left: u32) {
    if pos == NVARS - 1 {
        e[pos] = left as u8;
        out.push(Monomial(*e));
        e[pos] = 0;
        return;
    }
    for k in 0..=left {
        e[pos] = k as u8;
        fill(out, e, pos + 1, left - k);
    }
    e[pos] = 0;
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    /// `x1x14^2`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &k) in self.0.iter().enumerate() {
            match k {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, k)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_lex_order() {
        let x = |l| Monomial::from_labels(&[l]);
        assert!(x(1) > x(2));
        assert!(x(2) > x(27));
        assert!(Monomial::from_labels(&[27, 27]) > x(1));
        assert!(Monomial::from_labels(&[1, 14]) > Monomial::from_labels(&[2, 11]));
        assert!(Monomial::ONE < x(27));
    }

    #[test]
    fn degree_counts() {
        assert_eq!(Monomial::all_of_degree(0), vec![Monomial::ONE]);
        assert_eq!(Monomial::all_of_degree(1).len(), 27);
        assert_eq!(Monomial::all_of_degree(2).len(), 378);
        assert_eq!(Monomial::all_of_degree(3).len(), 3654);
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::from_labels(&[1, 14, 14]).to_string(), "x1x14^2");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }
}
