//! Exact linear algebra over the integers and rationals.
//!
//! The workhorse is [`SparseEchelon`]: fraction-free row reduction of sparse
//! integer rows. Rows are bucketed by leading column; inside a bucket the row
//! with the smallest leading magnitude becomes the pivot and every other row
//! is cross-multiplied against it (`p·r − a·pivot` after dividing by
//! gcd(p, a)), then divided by its content. No fractions appear until
//! back-substitution for kernel vectors.
//!
//! [`bareiss_rank`] / [`bareiss_determinant`] are the dense one-step Bareiss
//! algorithm, kept as an independent route for cross-checking ranks.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::polyops::{Monomial, Polynomial};
use crate::scalar::Coeff;

/// Sparse row: strictly increasing columns, no zero entries.
pub type SparseRow<I> = Vec<(usize, I)>;

fn make_primitive<I: Integer + Signed + Clone>(row: &mut SparseRow<I>) {
    let mut g = I::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = v.clone() / g.clone();
        }
    }
}

/// `pm * r - am * pivot`, dropping the (cancelled) leading entry.
fn eliminate<I: Integer + Signed + Clone>(r: &SparseRow<I>, pivot: &SparseRow<I>) -> SparseRow<I> {
    let p = &pivot[0].1;
    let a = &r[0].1;
    let g = p.gcd(a);
    let pm = p.clone() / g.clone();
    let am = a.clone() / g;
    let mut out = Vec::with_capacity(r.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < r.len() || j < pivot.len() {
        let ci = r.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = pivot.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push((ci, pm.clone() * r[i].1.clone()));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(am.clone() * pivot[j].1.clone())));
            j += 1;
        } else {
            let v = pm.clone() * r[i].1.clone() - am.clone() * pivot[j].1.clone();
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    make_primitive(&mut out);
    out
}

/// Row echelon form of a sparse integer matrix.
#[derive(Clone, Debug)]
pub struct SparseEchelon<I> {
    /// Echelon rows in order of strictly increasing leading column.
    pub rows: Vec<SparseRow<I>>,
    pub ncols: usize,
}

impl<I: Integer + Signed + Clone> SparseEchelon<I> {
    pub fn new(rows: impl IntoIterator<Item = SparseRow<I>>, ncols: usize) -> Self {
        let mut buckets: BTreeMap<usize, Vec<SparseRow<I>>> = BTreeMap::new();
        for mut r in rows {
            r.retain(|(_, v)| !v.is_zero());
            if r.is_empty() {
                continue;
            }
            debug_assert!(r.windows(2).all(|w| w[0].0 < w[1].0), "unsorted sparse row");
            debug_assert!(r.last().unwrap().0 < ncols);
            make_primitive(&mut r);
            buckets.entry(r[0].0).or_default().push(r);
        }
        let mut echelon = Vec::new();
        while let Some((_, mut bucket)) = buckets.pop_first() {
            let best = bucket
                .iter()
                .enumerate()
                .min_by(|(_, x), (_, y)| {
                    x[0].1.abs().cmp(&y[0].1.abs()).then(x.len().cmp(&y.len()))
                })
                .map(|(i, _)| i)
                .unwrap();
            let pivot = bucket.swap_remove(best);
            for r in bucket {
                let reduced = eliminate(&r, &pivot);
                if let Some(&(c, _)) = reduced.first() {
                    buckets.entry(c).or_default().push(reduced);
                }
            }
            echelon.push(pivot);
        }
        SparseEchelon {
            rows: echelon,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r[0].0).collect()
    }

    /// A basis of the right kernel. One vector per free column `f`, with
    /// x_f = 1 and every other free variable 0, scaled to coprime integers
    /// with positive x_f.
    pub fn kernel(&self) -> Vec<Vec<I>> {
        let pivots = self.pivot_columns();
        let is_pivot: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        (0..self.ncols)
            .filter(|c| !is_pivot.contains_key(c))
            .map(|free| self.kernel_vector(free))
            .collect()
    }

    fn kernel_vector(&self, free: usize) -> Vec<I> {
        let mut x: Vec<Ratio<I>> = vec![Ratio::zero(); self.ncols];
        x[free] = Ratio::one();
        for row in self.rows.iter().rev() {
            let (pc, pv) = &row[0];
            if *pc > free {
                continue;
            }
            let mut acc = Ratio::<I>::zero();
            for (c, v) in &row[1..] {
                if !x[*c].is_zero() {
                    acc = acc + x[*c].clone() * Ratio::from_integer(v.clone());
                }
            }
            x[*pc] = -acc / Ratio::from_integer(pv.clone());
        }
        let mut lcm = I::one();
        for v in &x {
            lcm = lcm.lcm(v.denom());
        }
        let mut out: Vec<I> = x
            .into_iter()
            .map(|v| (v * Ratio::from_integer(lcm.clone())).to_integer())
            .collect();
        let mut g = I::zero();
        for v in &out {
            g = g.gcd(v);
        }
        if !g.is_zero() && !g.is_one() {
            for v in out.iter_mut() {
                *v = v.clone() / g.clone();
            }
        }
        out
    }
}

/// Dense one-step Bareiss elimination; returns the rank.
pub fn bareiss_rank<I: Integer + Signed + Clone>(mut m: Vec<Vec<I>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = I::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .min_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()))
        else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in (rank + 1)..nrows {
            let factor = m[r][col].clone();
            for c in 0..ncols {
                let v = pivot.clone() * m[r][c].clone() - factor.clone() * m[rank][c].clone();
                m[r][c] = v / prev.clone();
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Determinant of a square integer matrix by Bareiss elimination.
pub fn bareiss_determinant<I: Integer + Signed + Clone>(mut m: Vec<Vec<I>>) -> I {
    let n = m.len();
    let mut sign = I::one();
    let mut prev = I::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(p) = ((k + 1)..n).find(|&r| !m[r][k].is_zero()) else {
                return I::zero();
            };
            m.swap(k, p);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let v = m[k][k].clone() * m[i][j].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    if n == 0 {
        I::one()
    } else {
        sign * m[n - 1][n - 1].clone()
    }
}

/// Clears denominators of a rational sparse row.
pub fn integer_row<C: Coeff>(row: &[(usize, C)]) -> SparseRow<C::Int> {
    let mut lcm = C::Int::one();
    for (_, v) in row {
        lcm = lcm.lcm(&v.denom_int());
    }
    row.iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer_int() * (lcm.clone() / v.denom_int())))
        .collect()
}

/// Result of solving an overdetermined rational system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution<C> {
    /// Unique solution.
    Unique(Vec<C>),
    /// Consistent but underdetermined; a particular solution with free
    /// variables set to zero.
    Underdetermined(Vec<C>),
    Inconsistent,
}

/// Solves `Σ_j rows[i][j] · u_j = rhs[i]` exactly over the rationals.
pub fn solve<C: Coeff>(rows: &[Vec<(usize, C)>], rhs: &[C], nvars: usize) -> Solution<C> {
    let augmented: Vec<SparseRow<C::Int>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r: Vec<(usize, C)> =
                row.iter().filter(|(_, v)| !v.is_zero()).cloned().collect();
            r.sort_by_key(|e| e.0);
            if !b.is_zero() {
                r.push((nvars, b.clone()));
            }
            integer_row(&r)
        })
        .collect();
    let ech = SparseEchelon::new(augmented, nvars + 1);
    if ech.pivot_columns().contains(&nvars) {
        return Solution::Inconsistent;
    }
    let mut x: Vec<C> = vec![C::zero(); nvars];
    for row in ech.rows.iter().rev() {
        let (pc, pv) = &row[0];
        let mut acc = C::zero();
        let mut b = C::zero();
        for (c, v) in &row[1..] {
            if *c == nvars {
                b = C::from_int(v.clone());
            } else {
                acc = acc + x[*c].clone() * C::from_int(v.clone());
            }
        }
        x[*pc] = (b - acc) / C::from_int(pv.clone());
    }
    if ech.rank() == nvars {
        Solution::Unique(x)
    } else {
        Solution::Underdetermined(x)
    }
}

/// Exact rank of a rational sparse matrix.
pub fn rank<C: Coeff>(rows: &[Vec<(usize, C)>], ncols: usize) -> usize {
    SparseEchelon::new(rows.iter().map(|r| integer_row(r)), ncols).rank()
}

/// Incrementally built span of polynomials, kept in echelon form keyed by
/// leading monomial (each stored vector has leading coefficient one).
#[derive(Clone, Debug, Default)]
pub struct PolySpan<C: Coeff> {
    basis: BTreeMap<Monomial, Polynomial<C>>,
}

impl<C: Coeff> PolySpan<C> {
    pub fn new() -> Self {
        PolySpan {
            basis: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduces `p` against the span; zero iff `p` lies in it.
    pub fn reduce(&self, p: &Polynomial<C>) -> Polynomial<C> {
        let mut r = p.clone();
        while let Some((lead, c)) = r.leading_term() {
            match self.basis.get(&lead) {
                Some(b) => r = r.sub(&b.scale(&c)),
                None => break,
            }
        }
        r
    }

    /// Adds `p` if it is independent; returns whether the span grew.
    pub fn insert(&mut self, p: &Polynomial<C>) -> bool {
        let r = self.reduce(p);
        match r.leading_term() {
            None => false,
            Some((lead, c)) => {
                let normalized = r.scale(&(C::one() / c));
                self.basis.insert(lead, normalized);
                true
            }
        }
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn dense_to_sparse(m: &[Vec<i64>]) -> Vec<SparseRow<i64>> {
        m.iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, *v))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn small_rank_and_kernel() {
        let m = vec![vec![1i64, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        let ech = SparseEchelon::new(dense_to_sparse(&m), 3);
        assert_eq!(ech.rank(), 2);
        let k = ech.kernel();
        assert_eq!(k.len(), 1);
        for row in &m {
            let dot: i64 = row.iter().zip(&k[0]).map(|(a, b)| a * b).sum();
            assert_eq!(dot, 0);
        }
        assert_eq!(bareiss_rank(m), 2);
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(bareiss_determinant(vec![vec![2i64, -1], vec![-1, 2]]), 3);
        assert_eq!(bareiss_determinant(vec![vec![0i64, 1], vec![1, 0]]), -1);
        assert_eq!(bareiss_determinant(vec![vec![1i64, 2], vec![2, 4]]), 0);
        assert_eq!(bareiss_determinant::<i64>(vec![]), 1);
    }

    #[test]
    fn solve_cases() {
        type R = Ratio<i64>;
        let r = |n| R::from_integer(n);
        // u0 + u1 = 3, u0 - u1 = 1, 2u0 = 4
        let rows = vec![
            vec![(0, r(1)), (1, r(1))],
            vec![(0, r(1)), (1, r(-1))],
            vec![(0, r(2))],
        ];
        assert_eq!(
            solve(&rows, &[r(3), r(1), r(4)], 2),
            Solution::Unique(vec![r(2), r(1)])
        );
        assert_eq!(solve(&rows, &[r(3), r(1), r(5)], 2), Solution::Inconsistent);
        let under = vec![vec![(0, r(1)), (1, r(1))]];
        assert!(matches!(
            solve(&under, &[r(2)], 2),
            Solution::Underdetermined(_)
        ));
    }

    #[test]
    fn poly_span_detects_dependence() {
        use crate::polyops::Polynomial;
        let x = |i| Polynomial::<BigRational>::var(i);
        let mut span = PolySpan::new();
        assert!(span.insert(&x(0).add(&x(1))));
        assert!(span.insert(&x(1)));
        assert!(!span.insert(&x(0)));
        assert!(span.contains(&x(0).sub(&x(1))));
        assert!(!span.contains(&x(2)));
        assert_eq!(span.dim(), 2);
    }

    proptest! {
        #[test]
        fn sparse_and_dense_ranks_agree(
            m in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 6), 1..8)
        ) {
            let sparse = SparseEchelon::new(dense_to_sparse(&m), 6);
            let big: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect();
            prop_assert_eq!(sparse.rank(), bareiss_rank(big));
            prop_assert_eq!(sparse.kernel().len(), 6 - sparse.rank());
            for k in sparse.kernel() {
                for row in &m {
                    let dot: i64 = row.iter().zip(&k).map(|(a, b)| a * b).sum();
                    prop_assert_eq!(dot, 0);
                }
            }
        }
    }
}
