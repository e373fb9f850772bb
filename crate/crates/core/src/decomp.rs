//! Kernel of the Dickson operator D on homogeneous pieces 𝒜_m, the
//! decomposition 𝒜_m = Φ_m ⊕ η𝒜_{m−3}, and lowering closures L(m₁, m₂).

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{integer_row, PolySpan, SparseEchelon};
use crate::polyops::{DiffOp, Monomial, Polynomial, NVARS};
use crate::rep::Representation;
use crate::rootsys::E6_RANK;
use crate::scalar::Coeff;
use crate::singular::{WeightVector, Weights};
use crate::weyl::{poly_space_dim, DimCalculator};

/// Default largest degree for `phi_dim`.
pub const DEFAULT_DEGREE_BOUND: u32 = 5;
/// Largest degree accepted by `phi_dim` without forcing.
pub const MAX_UNFORCED_DEGREE: u32 = 7;
/// Largest m₁ + 2m₂ for `lowering_closure` without forcing.
pub const CLOSURE_BOUND: u32 = 4;

#[derive(Clone, Debug, Serialize)]
pub struct KernelSummary {
    pub degree: u32,
    pub dim_am: String,
    pub rank_d: usize,
    pub dim_phi: String,
    pub weyl_sum: String,
    /// Rank of g ↦ D(ηg) on 𝒜_{m−3}.
    pub composite_rank: usize,
    pub dim_am_minus_3: String,
    pub direct_sum_ok: bool,
    pub weight_blocks: usize,
}

impl KernelSummary {
    pub fn weyl_ok(&self) -> bool {
        self.dim_phi == self.weyl_sum
    }

    pub fn passed(&self) -> bool {
        self.direct_sum_ok && self.weyl_ok()
    }
}

/// Π a_i! / b_i! for b ≤ a componentwise.
fn falling<C: Coeff>(a: &Monomial, b: &Monomial) -> C {
    let mut out = C::one();
    for i in 0..NVARS {
        for k in (b.exp(i) + 1)..=a.exp(i) {
            out = out * C::from_i64(k as i64);
        }
    }
    out
}

/// Rows of D: 𝒜_m → 𝒜_{m−3}, one per target monomial b, grouped by weight.
/// Row b holds c_k · (b+k)!/b! at column b+k for each term c_k x^k of η.
fn d_rows_by_weight<C: Coeff>(
    eta: &Polynomial<C>,
    weights: &Weights,
    m: u32,
) -> BTreeMap<WeightVector, Vec<Vec<(Monomial, C)>>> {
    let mut blocks: BTreeMap<WeightVector, Vec<Vec<(Monomial, C)>>> = BTreeMap::new();
    if m < 3 {
        return blocks;
    }
    for b in Monomial::all_of_degree(m - 3) {
        let row: Vec<(Monomial, C)> = eta
            .iter()
            .map(|(k, c)| {
                let a = b.mul(k);
                (a, c.clone() * falling::<C>(&a, &b))
            })
            .collect();
        blocks.entry(weights.of(&b)).or_default().push(row);
    }
    blocks
}

fn block_rank<C: Coeff>(rows: &[Vec<(Monomial, C)>]) -> usize {
    let mut cols: Vec<Monomial> = rows.iter().flatten().map(|(m, _)| *m).collect();
    cols.sort();
    cols.dedup();
    let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let int_rows = rows.iter().map(|r| {
        let mut v: Vec<(usize, C)> = r.iter().map(|(m, c)| (index[m], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        integer_row(&v)
    });
    SparseEchelon::new(int_rows, cols.len()).rank()
}

/// Exact rank of D on 𝒜_m.
pub fn rank_d<C: Coeff>(eta: &Polynomial<C>, weights: &Weights, m: u32) -> (usize, usize) {
    let blocks = d_rows_by_weight(eta, weights, m);
    let n = blocks.len();
    let rank = blocks
        .into_par_iter()
        .map(|(_, rows)| block_rank(&rows))
        .sum();
    (rank, n)
}

/// Rank of g ↦ D(ηg) on 𝒜_{m−3}.
pub fn composite_rank<C: Coeff>(eta: &Polynomial<C>, weights: &Weights, m: u32) -> usize {
    if m < 3 {
        return 0;
    }
    let d = DiffOp::dualize(eta);
    let mut blocks: BTreeMap<WeightVector, Vec<Monomial>> = BTreeMap::new();
    for g in Monomial::all_of_degree(m - 3) {
        blocks.entry(weights.of(&g)).or_default().push(g);
    }
    blocks
        .into_par_iter()
        .map(|(_, monos)| {
            let rows: Vec<Vec<(Monomial, C)>> = monos
                .iter()
                .map(|g| {
                    let img = d.apply(&eta.mul_monomial(g));
                    img.iter().map(|(m, c)| (*m, c.clone())).collect()
                })
                .collect();
            block_rank(&rows)
        })
        .sum()
}

/// Σ_{i=0}^{⌊m/2⌋} dim V((m−2i)λ₁ + iλ₆)
pub fn weyl_sum(calc: &DimCalculator, m: u32) -> BigInt {
    (0..=m / 2).map(|i| calc.weyl_dim(m - 2 * i, i)).sum()
}

/// dim Φ_m, the direct-sum check and the Weyl-sum comparison.
pub fn phi_dim<C: Coeff>(
    eta: &Polynomial<C>,
    weights: &Weights,
    m: u32,
    force: bool,
) -> Result<KernelSummary> {
    if m > MAX_UNFORCED_DEGREE && !force {
        return Err(Error::CostGuard {
            degree: m,
            bound: MAX_UNFORCED_DEGREE,
        });
    }
    let calc = DimCalculator::new();
    let dim_am = poly_space_dim(m);
    let (rank, blocks) = rank_d(eta, weights, m);
    let dim_phi = &dim_am - BigInt::from(rank);
    let lower = if m >= 3 {
        poly_space_dim(m - 3)
    } else {
        BigInt::from(0)
    };
    let comp = composite_rank(eta, weights, m);
    let direct_sum_ok = BigInt::from(comp) == lower && dim_am == &dim_phi + &lower;
    Ok(KernelSummary {
        degree: m,
        dim_am: dim_am.to_string(),
        rank_d: rank,
        dim_phi: dim_phi.to_string(),
        weyl_sum: weyl_sum(&calc, m).to_string(),
        composite_rank: comp,
        dim_am_minus_3: lower.to_string(),
        direct_sum_ok,
        weight_blocks: blocks,
    })
}

/// An explicit basis of Φ_m (only sensible for small m).
pub fn kernel_basis<C: Coeff>(
    eta: &Polynomial<C>,
    weights: &Weights,
    m: u32,
) -> Vec<Polynomial<C>> {
    let mut cols: BTreeMap<WeightVector, Vec<Monomial>> = BTreeMap::new();
    for a in Monomial::all_of_degree(m) {
        cols.entry(weights.of(&a)).or_default().push(a);
    }
    let rows = d_rows_by_weight(eta, weights, m);
    let empty = Vec::new();
    cols.into_par_iter()
        .flat_map_iter(|(w, monos)| {
            let index: HashMap<Monomial, usize> =
                monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
            let int_rows = rows.get(&w).unwrap_or(&empty).iter().map(|r| {
                let mut v: Vec<(usize, C)> = r.iter().map(|(m, c)| (index[m], c.clone())).collect();
                v.sort_by_key(|e| e.0);
                integer_row(&v)
            });
            let ech = SparseEchelon::new(int_rows, monos.len());
            ech.kernel()
                .into_iter()
                .map(|k| {
                    Polynomial::from_terms(
                        k.into_iter()
                            .enumerate()
                            .filter(|(_, v)| !num_traits::Zero::is_zero(v))
                            .map(|(i, v)| (monos[i], C::from_int(v)))
                            .collect::<Vec<_>>(),
                    )
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// dim Φ_m equals the Weyl sum.
#[derive(Clone, Debug, Serialize)]
pub struct WeylSumCheck {
    pub degree: u32,
    pub dim_phi: String,
    pub weyl_sum: String,
    pub terms: Vec<((u32, u32), String)>,
    pub passed: bool,
}

pub fn weyl_sum_check(summary: &KernelSummary) -> WeylSumCheck {
    let calc = DimCalculator::new();
    let m = summary.degree;
    WeylSumCheck {
        degree: m,
        dim_phi: summary.dim_phi.clone(),
        weyl_sum: summary.weyl_sum.clone(),
        terms: (0..=m / 2)
            .map(|i| ((m - 2 * i, i), calc.weyl_dim(m - 2 * i, i).to_string()))
            .collect(),
        passed: summary.weyl_ok(),
    }
}

/// Dimension of the module generated by `top` under the simple lowering
/// operators.
pub fn closure_dim<C: Coeff>(rep: &Representation<C>, top: &Polynomial<C>) -> usize {
    let lowering: Vec<DiffOp<C>> = (1..=E6_RANK)
        .map(|i| rep.simple_lowering(i).clone())
        .collect();
    let mut span = PolySpan::new();
    span.insert(top);
    let mut frontier = vec![top.clone()];
    while !frontier.is_empty() {
        let images: Vec<Polynomial<C>> = frontier
            .par_iter()
            .flat_map_iter(|p| lowering.iter().map(|op| op.apply(p)).collect::<Vec<_>>())
            .collect();
        frontier.clear();
        for q in images {
            if !q.is_zero() && span.insert(&q) {
                frontier.push(q);
            }
        }
    }
    span.dim()
}

/// dim L(m₁, m₂), generated by x₁^{m₁} ζ₁^{m₂}.
pub fn lowering_closure<C: Coeff>(
    rep: &Representation<C>,
    zeta1: &Polynomial<C>,
    m1: u32,
    m2: u32,
    force: bool,
) -> Result<usize> {
    if m1 + 2 * m2 > CLOSURE_BOUND && !force {
        return Err(Error::CostGuard {
            degree: m1 + 2 * m2,
            bound: CLOSURE_BOUND,
        });
    }
    let top = Polynomial::x(1).pow(m1).mul(&zeta1.pow(m2));
    Ok(closure_dim(rep, &top))
}
