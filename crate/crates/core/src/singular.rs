//! Weight spaces of 𝒜_m and their singular vectors (common kernel of the six
//! simple raising operators), by exact fraction-free elimination.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::linalg::{SparseEchelon, SparseRow};
use crate::polyops::{DiffOp, Monomial, Polynomial, NVARS};
use crate::rep::Representation;
use crate::rootsys::E6_RANK;
use crate::scalar::Coeff;

/// Weight in fundamental-weight coordinates (m_1, ..., m_6).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeightVector(pub [i32; E6_RANK]);

impl WeightVector {
    pub const ZERO: WeightVector = WeightVector([0; E6_RANK]);

    /// m_1 λ_1 + m_2 λ_6
    pub fn l1_l6(m1: i32, m2: i32) -> Self {
        WeightVector([m1, 0, 0, 0, 0, m2])
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// `Some((m1, m2))` when the weight is m_1 λ_1 + m_2 λ_6.
    pub fn as_l1_l6(&self) -> Option<(i32, i32)> {
        let w = self.0;
        (w[1..5].iter().all(|&c| c == 0)).then_some((w[0], w[5]))
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.0;
        write!(f, "({},{},{},{},{},{})", w[0], w[1], w[2], w[3], w[4], w[5])
    }
}

/// Weights of the variables, row i for x_{i+1}.
#[derive(Clone, Debug)]
pub struct Weights {
    pub rows: [[i32; 6]; 27],
}

impl Weights {
    pub fn from_rep<C: Coeff>(rep: &Representation<C>) -> Self {
        Weights {
            rows: rep.weight_table(),
        }
    }

    pub fn of(&self, m: &Monomial) -> WeightVector {
        let mut w = [0i32; 6];
        for i in 0..NVARS {
            let e = m.exp(i) as i32;
            if e > 0 {
                for (wj, a) in w.iter_mut().zip(self.rows[i]) {
                    *wj += e * a;
                }
            }
        }
        WeightVector(w)
    }

    /// Weight of a polynomial whose monomials all share one weight.
    pub fn of_poly<C: Coeff>(&self, p: &Polynomial<C>) -> Option<WeightVector> {
        let mut it = p.iter().map(|(m, _)| self.of(m));
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }

    /// All degree-m monomials grouped by weight, each list ascending.
    pub fn spaces(&self, m: u32) -> BTreeMap<WeightVector, Vec<Monomial>> {
        let mut out: BTreeMap<WeightVector, Vec<Monomial>> = BTreeMap::new();
        for mono in Monomial::all_of_degree(m) {
            out.entry(self.of(&mono)).or_default().push(mono);
        }
        out
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightSpaceBasis {
    pub degree: u32,
    pub weight: WeightVector,
    pub monomials: Vec<Monomial>,
}

impl Serialize for Monomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn weight_space(weights: &Weights, m: u32, w: WeightVector) -> WeightSpaceBasis {
    let monomials = Monomial::all_of_degree(m)
        .into_iter()
        .filter(|mono| weights.of(mono) == w)
        .collect();
    WeightSpaceBasis {
        degree: m,
        weight: w,
        monomials,
    }
}

/// Kernel of the stacked linear system `f ↦ (E(f))_{E ∈ ops}` on the span of
/// `basis`, as primitive integer polynomials with positive leading
/// coefficient, sorted by leading monomial (descending).
pub fn common_kernel<C: Coeff>(ops: &[&DiffOp<C>], basis: &[Monomial]) -> Vec<Polynomial<C>> {
    if basis.is_empty() {
        return vec![];
    }
    // columns: basis monomials; rows: (operator, target monomial)
    let mut rows: HashMap<(usize, Monomial), Vec<(usize, C)>> = HashMap::new();
    for (col, mono) in basis.iter().enumerate() {
        let single = Polynomial::monomial(*mono, C::one());
        for (k, op) in ops.iter().enumerate() {
            for (t, c) in op.apply(&single).iter() {
                rows.entry((k, *t)).or_default().push((col, c.clone()));
            }
        }
    }
    let mut keys: Vec<_> = rows.keys().copied().collect();
    keys.sort();
    let int_rows: Vec<SparseRow<C::Int>> = keys
        .iter()
        .map(|k| {
            let mut r = rows[k].clone();
            r.sort_by_key(|e| e.0);
            crate::linalg::integer_row(&r)
        })
        .collect();
    let ech = SparseEchelon::new(int_rows, basis.len());
    let mut out: Vec<Polynomial<C>> = ech
        .kernel()
        .into_iter()
        .map(|v| {
            Polynomial::from_terms(
                v.into_iter()
                    .enumerate()
                    .map(|(i, c)| (basis[i], C::from_int(c))),
            )
            .primitive()
        })
        .collect();
    out.sort_by(|a, b| {
        b.leading_term()
            .map(|t| t.0)
            .cmp(&a.leading_term().map(|t| t.0))
    });
    out
}

/// Basis of singular vectors of degree m and weight w.
pub fn singular_space<C: Coeff>(
    rep: &Representation<C>,
    weights: &Weights,
    m: u32,
    w: WeightVector,
) -> Vec<Polynomial<C>> {
    let basis = weight_space(weights, m, w).monomials;
    let raising: Vec<&DiffOp<C>> = (1..=E6_RANK).map(|i| rep.simple_raising(i)).collect();
    common_kernel(&raising, &basis)
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularCell<C: Coeff> {
    pub weight: WeightVector,
    pub weight_space_dim: usize,
    pub vectors: Vec<Polynomial<C>>,
}

/// Singular vectors of one degree, over every dominant weight that occurs.
#[derive(Clone, Debug, Serialize)]
pub struct SingularCensus<C: Coeff> {
    pub degree: u32,
    pub dominant_weights_scanned: usize,
    /// Only cells with a nonzero singular space.
    pub cells: Vec<SingularCell<C>>,
}

impl<C: Coeff> SingularCensus<C> {
    pub fn lines(&self) -> usize {
        self.cells.iter().map(|c| c.vectors.len()).sum()
    }

    pub fn dimensions(&self) -> BTreeMap<WeightVector, usize> {
        self.cells
            .iter()
            .map(|c| (c.weight, c.vectors.len()))
            .collect()
    }
}

/// Scans every dominant weight of 𝒜_m (a singular vector in a
/// finite-dimensional module has dominant weight).
pub fn enumerate_singular<C: Coeff>(
    rep: &Representation<C>,
    weights: &Weights,
    m: u32,
) -> SingularCensus<C> {
    let spaces: Vec<(WeightVector, Vec<Monomial>)> = weights
        .spaces(m)
        .into_iter()
        .filter(|(w, _)| w.is_dominant())
        .collect();
    let raising: Vec<&DiffOp<C>> = (1..=E6_RANK).map(|i| rep.simple_raising(i)).collect();
    let cells: Vec<SingularCell<C>> = spaces
        .par_iter()
        .map(|(w, basis)| SingularCell {
            weight: *w,
            weight_space_dim: basis.len(),
            vectors: common_kernel(&raising, basis),
        })
        .filter(|c| !c.vectors.is_empty())
        .collect();
    SingularCensus {
        degree: m,
        dominant_weights_scanned: spaces.len(),
        cells,
    }
}

/// #{(a, b, c) ∈ ℕ³ : a + 2b + 3c = m}
pub fn expected_lines(m: u32) -> usize {
    let mut n = 0;
    for c in 0..=m / 3 {
        n += ((m - 3 * c) / 2 + 1) as usize;
    }
    n
}

/// Expected singular dimension at m_1 λ_1 + m_2 λ_6 in degree m: the number
/// of m_3 ≥ 0 with m_1 + 2m_2 + 3m_3 = m.
pub fn expected_dimension(m: u32, m1: u32, m2: u32) -> usize {
    let base = m1 + 2 * m2;
    usize::from(base <= m && (m - base).is_multiple_of(3))
}

/// True when every operator kills `f`.
pub fn annihilated_by<C: Coeff>(ops: &[&DiffOp<C>], f: &Polynomial<C>) -> bool {
    ops.iter().all(|op| op.apply(f).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_counts() {
        let v: Vec<usize> = (0..=5).map(expected_lines).collect();
        assert_eq!(v, vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(expected_dimension(3, 0, 0), 1);
        assert_eq!(expected_dimension(4, 0, 0), 0);
        assert_eq!(expected_dimension(5, 1, 2), 1);
    }

    #[test]
    fn weight_helpers() {
        assert_eq!(WeightVector::l1_l6(2, 1).as_l1_l6(), Some((2, 1)));
        assert_eq!(WeightVector([0, 1, 0, 0, 0, 0]).as_l1_l6(), None);
        assert!(!WeightVector([1, -1, 0, 0, 0, 0]).is_dominant());
    }
}
