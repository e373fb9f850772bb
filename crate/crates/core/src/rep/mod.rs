//! The 27-dimensional E6-module V = span{E_β : β positive, α_7-coefficient 1}
//! under the adjoint action, written as first-order differential operators
//! in x_1..x_27, and its comparison with the printed formulas.

pub mod golden;

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::liealg::{bracket, e6_basis, e6_generators, AlgElement, Basis};
use crate::polyops::{parse_first_order, DiffOp, Monomial, NVARS};
use crate::rootsys::{bar_e7_positive_roots, enumerate_roots, RootSystem, RootVector, E6_RANK};
use crate::scalar::Coeff;

/// An E6 basis element together with the operator by which it acts on 𝒜.
#[derive(Clone, Debug)]
pub struct RepOperator<C: Coeff> {
    pub source: Basis,
    pub op: DiffOp<C>,
}

/// The derived representation: every E6 basis element as an operator.
#[derive(Clone, Debug)]
pub struct Representation<C: Coeff> {
    pub system: RootSystem,
    /// β_1..β_27; x_i = E_{β_i}.
    pub betas: Vec<RootVector>,
    index: HashMap<RootVector, usize>,
    operators: BTreeMap<Basis, DiffOp<C>>,
}

impl<C: Coeff> Representation<C> {
    pub fn build() -> Result<Self> {
        let system = enumerate_roots()?;
        let betas = bar_e7_positive_roots(&system)?;
        let index = betas.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let mut rep = Representation {
            system,
            betas,
            index,
            operators: BTreeMap::new(),
        };
        let basis = e6_basis(&rep.system);
        let ops: Vec<(Basis, DiffOp<C>)> = basis
            .par_iter()
            .map(|b| rep.derive_action(*b).map(|r| (*b, r.op)))
            .collect::<Result<_>>()?;
        rep.operators = ops.into_iter().collect();
        Ok(rep)
    }

    /// 0-based variable index of E_β, if β is one of the β_i.
    pub fn var_index(&self, beta: &RootVector) -> Option<usize> {
        self.index.get(beta).copied()
    }

    /// Computes ad(g) on each E_{β_j} and assembles Σ c_ij x_i ∂_{x_j}.
    pub fn derive_action(&self, g: Basis) -> Result<RepOperator<C>> {
        if !g.is_e6() {
            return Err(Error::NotInE6(g.to_string()));
        }
        let ge = AlgElement::<C>::basis(g);
        let mut op = DiffOp::zero();
        for (j, beta) in self.betas.iter().enumerate() {
            let image = bracket(&ge, &AlgElement::root(*beta));
            if !image.cartan.is_empty() {
                return Err(Error::OutsideModule {
                    g: g.to_string(),
                    index: j + 1,
                });
            }
            for (r, c) in &image.roots {
                let i = self.var_index(r).ok_or_else(|| Error::OutsideModule {
                    g: g.to_string(),
                    index: j + 1,
                })?;
                op.add_term(Monomial::var(i), Monomial::var(j), c.clone());
            }
        }
        Ok(RepOperator { source: g, op })
    }

    /// Operator of an E6 basis element.
    pub fn op(&self, b: &Basis) -> &DiffOp<C> {
        &self.operators[b]
    }

    /// E_α for α given in E6 simple-root coordinates.
    pub fn root_op(&self, k: [i32; 6]) -> &DiffOp<C> {
        self.op(&Basis::Root(RootVector::from_e6(k)))
    }

    pub fn simple_raising(&self, i: usize) -> &DiffOp<C> {
        self.op(&Basis::Root(RootVector::simple(i)))
    }

    pub fn simple_lowering(&self, i: usize) -> &DiffOp<C> {
        self.op(&Basis::Root(-RootVector::simple(i)))
    }

    pub fn cartan_op(&self, j: usize) -> &DiffOp<C> {
        self.op(&Basis::Cartan(j))
    }

    /// All 78 operators in basis order (Cartans, then roots).
    pub fn operators(&self) -> impl Iterator<Item = (&Basis, &DiffOp<C>)> {
        self.operators.iter()
    }

    /// Operators of the 36 positive roots.
    pub fn positive_ops(&self) -> Vec<&DiffOp<C>> {
        self.system
            .e6_positive
            .iter()
            .map(|r| self.op(&Basis::Root(*r)))
            .collect()
    }

    /// Linear extension to an arbitrary E6 element.
    pub fn action(&self, x: &AlgElement<C>) -> DiffOp<C> {
        let mut out = DiffOp::zero();
        for (b, c) in x.terms() {
            out = out.add(&self.op(&b).scale(c));
        }
        out
    }

    /// The derived weight table: `a[i][j]` is the eigenvalue of α_{j+1} on x_{i+1}.
    pub fn weight_table(&self) -> [[i32; 6]; 27] {
        let mut a = [[0; 6]; 27];
        for (j, col) in (1..=E6_RANK).map(|j| (j - 1, self.cartan_op(j))) {
            for i in 0..NVARS {
                let m = Monomial::var(i);
                let c = col.coeff(&m, &m);
                a[i][j] = c
                    .to_bigint()
                    .and_then(|b| i32::try_from(b).ok())
                    .expect("integral weight");
            }
        }
        a
    }
}

/// One printed formula after reading.
#[derive(Clone, Debug)]
pub struct PrintedOperator<C: Coeff> {
    pub source: Basis,
    pub op: DiffOp<C>,
    pub notes: Vec<String>,
}

/// The 72 printed root-vector operators plus the six Cartan operators built
/// from the printed weight table.
pub fn printed_operator_table<C: Coeff>() -> Result<Vec<PrintedOperator<C>>> {
    let mut out = Vec::with_capacity(78);
    for j in 1..=E6_RANK {
        let mut op = DiffOp::zero();
        for (i, row) in golden::V_WEIGHTS.iter().enumerate() {
            op.add_term(
                Monomial::var(i),
                Monomial::var(i),
                C::from_i64(row[j - 1] as i64),
            );
        }
        out.push(PrintedOperator {
            source: Basis::Cartan(j),
            op,
            notes: vec![],
        });
    }
    for (k, text) in golden::PRINTED_OPERATORS.iter() {
        let root = RootVector::from_e6(*k);
        let (op, notes) = parse_first_order(text, &format!("E({root})"))?;
        out.push(PrintedOperator {
            source: Basis::Root(root),
            op,
            notes,
        });
    }
    Ok(out)
}

/// Term-level difference between a derived and a printed operator.
#[derive(Clone, Debug, Serialize)]
pub struct OperatorMismatch {
    pub source: String,
    pub derived: String,
    pub printed: String,
    /// derived − printed
    pub difference: String,
    /// `Some(-1)` when printed = −derived, `Some(1)` never (that is a match),
    /// `None` when no global sign reconciles the two.
    pub global_sign: Option<i32>,
    /// Terms still differing after multiplying the derived operator by the
    /// sign that agrees on the most terms.
    pub residual_terms: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorComparison {
    pub compared: usize,
    pub matched: usize,
    pub normalizations: Vec<(String, String)>,
    pub mismatches: Vec<OperatorMismatch>,
    /// When every mismatch is a sign flip explained by rescaling x_i ↦ s_i x_i,
    /// the signs s_1..s_27.
    pub sign_diagnosis: Option<Vec<i32>>,
    /// Root-vector operators with exactly six ±1 terms.
    pub six_unit_terms: usize,
}

impl OperatorComparison {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.compared == 78
    }
}

/// Finds s ∈ {±1}^27 with printed_ij = s_i s_j derived_ij for every term,
/// if one exists.
fn diagonal_signs<C: Coeff>(pairs: &[(DiffOp<C>, DiffOp<C>)]) -> Option<Vec<i32>> {
    // edge (i, j, parity): s_i s_j = parity
    let mut edges: Vec<(usize, usize, i32)> = Vec::new();
    for (d, p) in pairs {
        if d.len() != p.len() {
            return None;
        }
        for ((x, dd), c) in d.terms() {
            let pc = p.coeff(x, dd);
            if pc.is_zero() {
                return None;
            }
            let parity = if pc == *c {
                1
            } else if pc == -c.clone() {
                -1
            } else {
                return None;
            };
            edges.push((x.factors()[0], dd.factors()[0], parity));
        }
    }
    let mut s = vec![0i32; NVARS];
    let mut adj: Vec<Vec<(usize, i32)>> = vec![vec![]; NVARS];
    for &(i, j, p) in &edges {
        adj[i].push((j, p));
        adj[j].push((i, p));
    }
    for start in 0..NVARS {
        if s[start] != 0 {
            continue;
        }
        s[start] = 1;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(v, p) in &adj[u] {
                let want = s[u] * p;
                if s[v] == 0 {
                    s[v] = want;
                    stack.push(v);
                } else if s[v] != want {
                    return None;
                }
            }
        }
    }
    Some(s)
}

/// `x_i∂x_j: derived c, printed c'` for each differing term.
fn residual_terms<C: Coeff>(d: &DiffOp<C>, p: &DiffOp<C>) -> Vec<String> {
    let diff = d.sub(p);
    diff.terms()
        .keys()
        .map(|(x, dd)| {
            format!(
                "{x}∂{dd}: derived {}, printed {}",
                d.coeff(x, dd),
                p.coeff(x, dd)
            )
        })
        .collect()
}

/// Compares every derived operator with the printed one.
pub fn compare_with_printed<C: Coeff>(rep: &Representation<C>) -> Result<OperatorComparison> {
    let printed = printed_operator_table::<C>()?;
    let mut normalizations = Vec::new();
    let mut mismatches = Vec::new();
    let mut pairs = Vec::new();
    let mut six_unit_terms = 0;
    for p in &printed {
        for n in &p.notes {
            normalizations.push((p.source.to_string(), n.clone()));
        }
        let d = rep.op(&p.source);
        if let Basis::Root(_) = p.source {
            if d.len() == 6 && d.terms().values().all(|c| c.abs().is_one()) {
                six_unit_terms += 1;
            }
        }
        if *d != p.op {
            let flipped = d.scale(&-C::one());
            let best = if flipped.sub(&p.op).len() < d.sub(&p.op).len() {
                flipped
            } else {
                d.clone()
            };
            let residual = best.sub(&p.op);
            mismatches.push(OperatorMismatch {
                source: p.source.to_string(),
                derived: d.to_string(),
                printed: p.op.to_string(),
                difference: d.sub(&p.op).to_string(),
                global_sign: if residual.is_zero() { Some(-1) } else { None },
                residual_terms: residual_terms(&best, &p.op),
            });
        }
        pairs.push((d.clone(), p.op.clone()));
    }
    let sign_diagnosis = if mismatches.is_empty() {
        None
    } else {
        diagonal_signs(&pairs)
    };
    Ok(OperatorComparison {
        compared: printed.len(),
        matched: printed.len() - mismatches.len(),
        normalizations,
        mismatches,
        sign_diagnosis,
        six_unit_terms,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TableCheck {
    pub entries: usize,
    /// (row, column, derived, printed), 1-based.
    pub mismatches: Vec<(usize, usize, i32, i32)>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn compare_tables(derived: &[[i32; 6]; 27], printed: &[[i32; 6]; 27]) -> TableCheck {
    let mut mismatches = Vec::new();
    for i in 0..27 {
        for j in 0..6 {
            if derived[i][j] != printed[i][j] {
                mismatches.push((i + 1, j + 1, derived[i][j], printed[i][j]));
            }
        }
    }
    TableCheck {
        entries: 162,
        mismatches,
    }
}

/// Derived Cartan eigenvalues against the printed weight table of V.
pub fn check_weight_table<C: Coeff>(rep: &Representation<C>) -> TableCheck {
    compare_tables(&rep.weight_table(), &golden::V_WEIGHTS)
}

/// Diagram automorphism on E6 simple-root coordinates:
/// (k1, ..., k6) ↦ (k6, k2, k5, k4, k3, k1).
pub fn sigma(k: [i32; 6]) -> [i32; 6] {
    [k[5], k[1], k[4], k[3], k[2], k[0]]
}

/// Weight table of the ζ-module predicted from the table of V: row i is σ
/// applied to row i of the V-table (columns 1..4 as stated, 5 and 6 by the
/// same pattern).
pub fn completed_dual_weights(a: &[[i32; 6]; 27]) -> [[i32; 6]; 27] {
    let mut b = [[0; 6]; 27];
    for i in 0..27 {
        b[i] = sigma(a[i]);
    }
    b
}

/// The σ-completed table against the printed one.
pub fn check_dual_weight_completion(a: &[[i32; 6]; 27]) -> TableCheck {
    compare_tables(&completed_dual_weights(a), &golden::DUAL_WEIGHTS)
}

#[derive(Clone, Debug, Serialize)]
pub struct HomomorphismReport {
    pub pairs_checked: usize,
    pub first_failure: Option<(Basis, Basis)>,
}

impl HomomorphismReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// [ρ(g), ρ(h)] = ρ([g, h]) on each pair.
pub fn verify_homomorphism<C: Coeff>(
    rep: &Representation<C>,
    pairs: &[(Basis, Basis)],
) -> HomomorphismReport {
    let first_failure = pairs
        .par_iter()
        .find_first(|(g, h)| {
            let lhs = rep.op(g).commutator(rep.op(h));
            let rhs = rep.action(&bracket(&AlgElement::basis(*g), &AlgElement::basis(*h)));
            lhs != rhs
        })
        .copied();
    HomomorphismReport {
        pairs_checked: pairs.len(),
        first_failure,
    }
}

/// All ordered pairs of the 18 generators (simple ±root vectors, Cartans).
pub fn generator_pairs() -> Vec<(Basis, Basis)> {
    let g = e6_generators();
    g.iter()
        .flat_map(|&a| g.iter().map(move |&b| (a, b)))
        .collect()
}

/// Operators that fail to commute with the Euler operator.
pub fn euler_violations<C: Coeff>(rep: &Representation<C>) -> Vec<Basis> {
    let e = DiffOp::euler();
    rep.operators()
        .filter(|(_, op)| !op.commutator(&e).is_zero())
        .map(|(b, _)| *b)
        .collect()
}

/// Text dump, one line per operator, of all 78 operators.
pub fn dump_text<C: Coeff>(rep: &Representation<C>) -> String {
    let mut s = String::new();
    for (b, op) in rep.operators() {
        s.push_str(&format!("{b}|_V = {op}\n"));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    fn rep() -> Representation<Q> {
        Representation::build().unwrap()
    }

    #[test]
    fn first_simple_operators() {
        let r = rep();
        assert_eq!(
            r.simple_raising(1).to_string(),
            "-x1∂x2 + x11∂x14 + x15∂x17 + x16∂x19 + x18∂x21 + x20∂x23"
        );
        assert_eq!(
            r.simple_lowering(6).to_string(),
            "x8∂x5 + x10∂x7 + x12∂x9 + x15∂x11 + x17∂x14 - x27∂x26"
        );
    }

    #[test]
    fn sigma_is_involution() {
        let k = [1, 2, 3, 4, 5, 6];
        assert_eq!(sigma(sigma(k)), k);
    }
}
