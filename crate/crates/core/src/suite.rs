//! Builds the verification rows for every stage of the pipeline.

use serde_json::{json, Value};

use crate::decomp::{kernel_basis, lowering_closure, phi_dim, weyl_sum_check};
use crate::error::Result;
use crate::invariants::{
    annihilation, d2_eigenvalue, d2_eta_commutator, d_eta_commutator, d_eta_power,
    verify_dual_module, verify_invariance,
};
use crate::liealg::{default_jacobi_sample, e6_closure_violation, jacobi_check};
use crate::model::Model;
use crate::polyops::{DiffOp, Polynomial};
use crate::rep::{
    check_dual_weight_completion, check_weight_table, compare_with_printed, euler_violations,
    generator_pairs, verify_homomorphism, Representation,
};
use crate::report::{time, Section, Source, Status, VerificationReport as R};
use crate::rootsys::{
    bar_e7_positive_roots, check_cocycle_laws, enumerate_roots, printed_module_root_family,
};
use crate::scalar::Coeff;
use crate::singular::{enumerate_singular, expected_lines, singular_space, WeightVector, Weights};
use crate::weyl::{identity_check, DimCalculator};

/// Random pairs added to the exhaustive cocycle sweep.
pub const COCYCLE_SAMPLES: usize = 1000;
/// Random E7 triples added to the exhaustive generator Jacobi sweep.
pub const JACOBI_SAMPLES: usize = 500;

/// Degree limits for the lemma checks and the decomposition.
#[derive(Clone, Copy, Debug)]
pub struct Bounds {
    pub lemma_degree: u32,
    pub annihilation_degree: u32,
    pub singular_degree: u32,
    pub decomp_degree: u32,
    pub identity_degree: u32,
    pub closure_650: bool,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            lemma_degree: 8,
            annihilation_degree: 6,
            singular_degree: 5,
            decomp_degree: 5,
            identity_degree: 12,
            closure_650: true,
        }
    }
}

fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

pub fn roots_section(seed: u64) -> Result<Section> {
    let mut sec = Section::new("roots");
    let (system, ms) = time(enumerate_roots);
    let system = system?;
    let bar = bar_e7_positive_roots(&system)?;
    let anchor = "E7 and E6 root systems";
    sec.push(
        R::compare(
            "roots.e7",
            anchor,
            s(126),
            Source::Printed,
            s(system.all_roots.len()),
        )
        .timed(ms),
    );
    sec.push(R::compare(
        "roots.e6",
        anchor,
        s(72),
        Source::Printed,
        s(system.e6_roots.len()),
    ));
    sec.push(R::compare(
        "roots.e6_positive",
        anchor,
        s(36),
        Source::Printed,
        s(system.e6_positive.len()),
    ));
    let outside = system.e7_positive_outside_e6();
    sec.push(R::compare(
        "roots.bar_positive",
        anchor,
        s(27),
        Source::Printed,
        s(outside.len()),
    ));
    let mut sorted_bar = bar.clone();
    sorted_bar.sort();
    let mut sorted_out = outside.clone();
    sorted_out.sort();
    let disjoint = system.e6_positive.iter().all(|r| !outside.contains(r));
    let partition = disjoint
        && system.e6_positive.len() + outside.len() == system.positive.len()
        && sorted_bar == sorted_out;
    sec.push(R::compare(
        "roots.partition",
        anchor,
        json!(true),
        Source::Printed,
        json!(partition),
    ));
    let audits = printed_module_root_family();
    let non_roots: Vec<&str> = audits
        .iter()
        .filter(|a| !a.is_root)
        .map(|a| a.label.as_str())
        .collect();
    sec.push(R::flag_on_mismatch(
        "roots.printed_module_family",
        "module basis root list",
        json!([]),
        Source::Printed,
        json!(non_roots),
    ));

    let (cocycle, ms) = time(|| check_cocycle_laws(&system, seed, COCYCLE_SAMPLES));
    sec.push(
        R::compare(
            "cocycle.laws",
            "cocycle F",
            json!(true),
            Source::Printed,
            json!(cocycle.passed()),
        )
        .timed(ms),
    );
    let sample = default_jacobi_sample(&system, seed, JACOBI_SAMPLES);
    let (jac, ms) = time(|| jacobi_check::<crate::Q>(&sample));
    sec.push(
        R::compare(
            "liealg.jacobi",
            "Lie bracket",
            json!(true),
            Source::Derived,
            json!(jac.passed()),
        )
        .timed(ms),
    );
    let closure = e6_closure_violation::<crate::Q>(&system);
    sec.push(R::compare(
        "liealg.e6_closed",
        "E6 subalgebra",
        json!(true),
        Source::Printed,
        json!(closure.is_none()),
    ));
    sec.payload = json!({
        "seed": seed.to_string(),
        "cocycle": cocycle,
        "jacobi": jac,
        "module_family": audits,
    });
    Ok(sec)
}

pub fn rep_section<C: Coeff>(rep: &Representation<C>, build_ms: u64) -> Result<Section> {
    let mut sec = Section::new("rep");
    let t1 = check_weight_table(rep);
    sec.push(
        R::compare(
            "rep.weight_table",
            "weight table",
            s(0),
            Source::Printed,
            s(t1.mismatches.len()),
        )
        .timed(build_ms),
    );
    let t2 = check_dual_weight_completion(&rep.weight_table());
    sec.push(R::compare(
        "rep.dual_weight_completion",
        "dual weight table",
        s(0),
        Source::Printed,
        s(t2.mismatches.len()),
    ));
    let (cmp, ms) = time(|| compare_with_printed(rep));
    let cmp = cmp?;
    let residuals: Vec<Value> = cmp
        .mismatches
        .iter()
        .map(|m| json!({"operator": m.source, "global_sign": m.global_sign, "residual_terms": m.residual_terms}))
        .collect();
    sec.push(
        R::flag_on_mismatch(
            "rep.printed_operators",
            "operator table",
            json!({"matched": "78", "residuals": []}),
            Source::Printed,
            json!({"matched": cmp.matched.to_string(), "residuals": residuals}),
        )
        .timed(ms),
    );
    let pairs = generator_pairs();
    let (hom, ms) = time(|| verify_homomorphism(rep, &pairs));
    sec.push(
        R::compare(
            "rep.homomorphism",
            "representation",
            json!(true),
            Source::Derived,
            json!(hom.passed()),
        )
        .timed(ms),
    );
    let euler = euler_violations(rep);
    sec.push(R::compare(
        "rep.degree_preserving",
        "representation",
        s(0),
        Source::Trivial,
        s(euler.len()),
    ));
    sec.payload = json!({
        "weight_table": t1,
        "dual_weight_completion": t2,
        "operators": cmp,
        "homomorphism_pairs": hom.pairs_checked.to_string(),
    });
    Ok(sec)
}

/// Singular census for degrees 0..=max (or one weight when given).
pub fn singular_section<C: Coeff>(
    rep: &Representation<C>,
    weights: &Weights,
    max_degree: u32,
    weight: Option<WeightVector>,
) -> Section {
    let mut sec = Section::new("singular");
    if let Some(w) = weight {
        let (v, ms) = time(|| singular_space(rep, weights, max_degree, w));
        let expected = w.as_l1_l6().map_or(0, |(a, b)| {
            crate::singular::expected_dimension(max_degree, a as u32, b as u32)
        });
        sec.push(
            R::compare(
                &format!("singular.dim.{max_degree}.{w}"),
                "singular vectors",
                s(expected),
                Source::Derived,
                s(v.len()),
            )
            .timed(ms),
        );
        sec.payload = json!({"degree": max_degree, "weight": w.to_string(), "vectors": v.iter().map(|p| p.to_string()).collect::<Vec<_>>()});
        return sec;
    }
    let x1 = singular_space(rep, weights, 1, WeightVector::l1_l6(1, 0));
    sec.push(R::compare(
        "singular.x1",
        "highest weight vector",
        json!(["x1"]),
        Source::Printed,
        json!(x1.iter().map(|p| p.to_string()).collect::<Vec<_>>()),
    ));
    let mut censuses = Vec::new();
    for m in 0..=max_degree {
        let (c, ms) = time(|| enumerate_singular(rep, weights, m));
        let located: Vec<(String, usize)> = c
            .cells
            .iter()
            .filter(|cell| !cell.vectors.is_empty())
            .map(|cell| (cell.weight.to_string(), cell.vectors.len()))
            .collect();
        let off_family = c
            .cells
            .iter()
            .any(|cell| !cell.vectors.is_empty() && cell.weight.as_l1_l6().is_none());
        sec.push(
            R::compare(
                &format!("singular.lines.{m}"),
                "singular vectors are monomials in x1, zeta1, eta",
                json!({"lines": expected_lines(m).to_string(), "off_family": false}),
                Source::Derived,
                json!({"lines": c.lines().to_string(), "off_family": off_family}),
            )
            .timed(ms),
        );
        let vectors: Vec<Value> = c
            .cells
            .iter()
            .filter(|cell| !cell.vectors.is_empty())
            .map(|cell| json!({"weight": cell.weight.to_string(), "vectors": cell.vectors.iter().map(|p| p.to_string()).collect::<Vec<_>>()}))
            .collect();
        censuses.push(json!({"degree": m, "cells": located, "vectors": vectors}));
    }
    sec.payload = json!({"census": censuses});
    sec
}

pub fn invariant_section<C: Coeff>(model: &Model<C>, bounds: &Bounds) -> Section {
    let mut sec = Section::new("invariant");
    let Model {
        rep,
        zeta,
        eta,
        ops,
        ..
    } = model;

    // dual family
    let zeta_anchor = "dual family zeta";
    sec.push(R::compare(
        "zeta.zeta1",
        zeta_anchor,
        s("x1x14 + x2x11 + x3x9 - x4x7 + x5x6"),
        Source::Printed,
        s(zeta.zeta(1)),
    ));
    sec.push(R::compare(
        "zeta.printed_chain",
        zeta_anchor,
        s(15),
        Source::Printed,
        s(zeta.printed_checked),
    ));
    let outside = zeta.tau_outside();
    sec.push(R::flag_on_mismatch(
        "zeta.tau_images",
        "tau on the dual family",
        json!([]),
        Source::Printed,
        json!(outside),
    ));
    sec.push(R::flag_on_mismatch(
        "zeta.zeta27_tau_image",
        "tau on the dual family",
        s("x14x27 + x17x26 + x19x25 - x21x24 + x22x23"),
        Source::Derived,
        s(zeta.zeta(27)),
    ));
    let (dual, ms) = time(|| verify_dual_module(rep, zeta));
    sec.push(
        R::compare(
            "zeta.rank",
            zeta_anchor,
            s(27),
            Source::Printed,
            s(dual.rank),
        )
        .timed(ms),
    );
    sec.push(R::compare(
        "zeta.span_invariant",
        zeta_anchor,
        s(0),
        Source::Printed,
        s(dual.span_failures.len()),
    ));
    sec.push(R::compare(
        "zeta.dual_weights",
        "dual weight table",
        s(0),
        Source::Printed,
        s(dual.dual_weight_mismatches.len()),
    ));
    sec.push(R::compare(
        "zeta.nu_simple",
        "dual action through sigma",
        json!({"checked": "6", "failures": []}),
        Source::Printed,
        json!({"checked": dual.simple_sigma_checked.to_string(), "failures": dual.sigma_failures}),
    ));
    sec.push(R::flag_on_mismatch(
        "zeta.nu_positive",
        "dual action through sigma",
        json!({"sign_flips": [], "other": []}),
        Source::Printed,
        json!({"sign_flips": dual.sigma_sign_flips, "other": dual.sigma_other}),
    ));

    // eta
    let eta_anchor = "cubic invariant eta";
    sec.push(R::compare(
        "eta.singular_dim",
        eta_anchor,
        s(1),
        Source::Printed,
        s(eta.singular_dimension),
    ));
    sec.push(R::compare(
        "eta.terms",
        eta_anchor,
        s(45),
        Source::Derived,
        s(eta.terms),
    ));
    sec.push(R::compare(
        "eta.invariant",
        eta_anchor,
        json!(true),
        Source::Printed,
        json!(eta.invariant),
    ));
    sec.push(R::compare(
        "eta.coeff_x1x14x27",
        eta_anchor,
        s(3),
        Source::Printed,
        s(&eta.coeff_x1x14x27),
    ));
    sec.push(R::flag_on_mismatch(
        "eta.coeff_x4x7x27",
        eta_anchor,
        s(1),
        Source::Printed,
        s(&eta.coeff_x4x7x27),
    ));
    for cmp in [&eta.expanded, &eta.bilinear, &eta.d_pattern] {
        let id = format!("eta.form.{}", cmp.label.replace([' ', '·'], "_"));
        sec.push(R::flag_on_mismatch(
            &id,
            eta_anchor,
            json!({"ratio": "1", "differing": 0}),
            Source::Printed,
            json!({"ratio": cmp.ratio, "differing": cmp.differing.len()}),
        ));
    }

    // operators
    let inv_anchor = "invariant differential operators";
    for (label, op) in [("D", &ops.d), ("D1", &ops.d1), ("D2", &ops.d2)] {
        let (r, ms) = time(|| verify_invariance(rep, label, op));
        sec.push(
            R::compare(
                &format!("invariance.{label}"),
                inv_anchor,
                s(0),
                Source::Printed,
                s(r.failures.len()),
            )
            .timed(ms),
        );
    }
    let m_eta = ops.m_eta();
    let euler_comm = ops.d1.commutator(&m_eta);
    sec.push(R::compare(
        "invariance.euler_eta",
        inv_anchor,
        json!(true),
        Source::Trivial,
        json!(euler_comm == m_eta.scale(&C::from_i64(3))),
    ));

    // commutator [D, M_eta]
    let ((b, r33), ms) = time(|| d_eta_commutator(ops));
    sec.push(
        R::compare(
            "lemma.d_eta.in_span",
            "commutator of D and eta",
            json!(true),
            Source::Printed,
            json!(r33.in_span),
        )
        .timed(ms),
    );
    sec.push(R::compare(
        "lemma.d_eta.order",
        "commutator of D and eta",
        s(2),
        Source::Derived,
        s(r33.commutator_order),
    ));
    sec.push(R::flag_on_mismatch(
        "lemma.d_eta.coefficients",
        "commutator of D and eta",
        json!(["111", "11", "9"]),
        Source::Printed,
        json!(r33.b),
    ));
    sec.push(R::compare(
        "lemma.d_eta.b0_is_D_eta",
        "commutator of D and eta",
        s(ops.d.apply(&ops.eta)),
        Source::Trivial,
        s(&r33.commutator_on_one),
    ));

    // D2 eigenvalues
    let mut d2_cases = Vec::new();
    for n in 0..=bounds.lemma_degree {
        for m2 in 0..=n / 2 {
            let m1 = n - 2 * m2;
            let case = d2_eigenvalue(ops, zeta, m1, m2);
            sec.push(R::compare(
                &format!("lemma.d2_eigen.{m1}.{m2}"),
                "D2 on x1^m1 zeta1^m2",
                s(case.expected),
                Source::Printed,
                json!(case.computed),
            ));
            d2_cases.push(case);
        }
    }

    // [D2, M_eta]
    let ((c, r35), ms) = time(|| d2_eta_commutator(ops));
    sec.push(
        R::compare(
            "lemma.d2_eta.in_span",
            "commutator of D2 and eta",
            json!(true),
            Source::Printed,
            json!(r35.c.is_some()),
        )
        .timed(ms),
    );
    sec.push(R::flag_on_mismatch(
        "lemma.d2_eta.coefficients",
        "commutator of D2 and eta",
        json!(["3", "2"]),
        Source::Printed,
        json!(r35.c),
    ));
    sec.push(R::flag_on_mismatch(
        "lemma.d2_eta.on_eta",
        "commutator of D2 and eta",
        s(3),
        Source::Printed,
        json!(r35.d2_eta),
    ));
    sec.push(R::flag_on_mismatch(
        "lemma.d2_eta.on_eta_x1",
        "commutator of D2 and eta",
        s(5),
        Source::Printed,
        json!(r35.d2_eta_x1),
    ));

    // D kills x1^m1 zeta1^m2
    for n in 0..=bounds.annihilation_degree {
        for m2 in 0..=n / 2 {
            let m1 = n - 2 * m2;
            sec.push(R::compare(
                &format!("lemma.d_kills.{m1}.{m2}"),
                "D on x1^m1 zeta1^m2",
                json!(true),
                Source::Printed,
                json!(annihilation(ops, zeta, m1, m2)),
            ));
        }
    }

    // D(eta^m f)
    let mut scalar_cases = Vec::new();
    for m in 1..=bounds.lemma_degree / 3 {
        let rest = bounds.lemma_degree - 3 * m;
        for n in 0..=rest {
            for m2 in 0..=n / 2 {
                let m1 = n - 2 * m2;
                let (case, ms) = time(|| d_eta_power(ops, zeta, b.as_ref(), c.as_ref(), m, m1, m2));
                let id = format!("{m}.{m1}.{m2}");
                sec.push(
                    R::compare(
                        &format!("lemma.d_eta_power.nonzero.{id}"),
                        "D on eta^m x1^m1 zeta1^m2",
                        json!(true),
                        Source::Printed,
                        json!(case.passed()),
                    )
                    .timed(ms),
                );
                sec.push(R::compare(
                    &format!("lemma.d_eta_power.recursion.{id}"),
                    "D on eta^m x1^m1 zeta1^m2",
                    json!(case.predicted_from_lemmas),
                    Source::Derived,
                    json!(case.computed),
                ));
                sec.push(R::flag_on_mismatch(
                    &format!("lemma.d_eta_power.printed_scalar.{id}"),
                    "D on eta^m x1^m1 zeta1^m2",
                    s(case.printed_formula),
                    Source::Printed,
                    json!(case.computed),
                ));
                scalar_cases.push(case);
            }
        }
    }

    sec.payload = json!({
        "tau_images": zeta.tau_images,
        "dual_module": dual,
        "eta": {
            "polynomial": eta.eta.to_string(),
            "expanded": eta.expanded,
            "bilinear": eta.bilinear,
            "d_pattern": eta.d_pattern,
        },
        "d_eta": r33,
        "d2_eta": r35,
        "d2_eigen": d2_cases,
        "d_eta_power": scalar_cases,
    });
    sec
}

/// Polynomials for `invariant --dump`.
pub fn dump_zeta<C: Coeff>(model: &Model<C>) -> Value {
    json!(model
        .zeta
        .zetas
        .iter()
        .enumerate()
        .map(|(i, z)| json!({"index": i + 1, "polynomial": z.to_string()}))
        .collect::<Vec<_>>())
}

pub fn dump_eta<C: Coeff>(model: &Model<C>) -> Value {
    json!({"polynomial": model.eta.eta.to_string(), "terms": model.eta.terms, "structured": model.eta.eta})
}

pub fn decompose_section<C: Coeff>(
    model: &Model<C>,
    max_degree: u32,
    materialize: bool,
    force: bool,
) -> Result<Section> {
    let mut sec = Section::new("decompose");
    let anchor = "kernel of D and direct sum with eta";
    let mut summaries = Vec::new();
    for m in 0..=max_degree {
        let (k, ms) = time(|| phi_dim(&model.eta.eta, &model.weights, m, force));
        let k = k?;
        let expected_phi = crate::weyl::poly_space_dim(m)
            - if m >= 3 {
                crate::weyl::poly_space_dim(m - 3)
            } else {
                0.into()
            };
        sec.push(
            R::compare(
                &format!("decomp.dim_phi.{m}"),
                anchor,
                s(&expected_phi),
                Source::Derived,
                s(&k.dim_phi),
            )
            .timed(ms),
        );
        sec.push(R::compare(
            &format!("decomp.direct_sum.{m}"),
            anchor,
            json!(true),
            Source::Printed,
            json!(k.direct_sum_ok),
        ));
        let w = weyl_sum_check(&k);
        sec.push(R::compare(
            &format!("decomp.weyl_sum.{m}"),
            "kernel of D as a sum of irreducibles",
            s(&w.weyl_sum),
            Source::Derived,
            s(&w.dim_phi),
        ));
        summaries.push(json!({"summary": k, "weyl": w}));
    }
    let mut samples = Vec::new();
    if materialize {
        let d = DiffOp::dualize(&model.eta.eta);
        for m in 0..=max_degree.min(4) {
            let (basis, ms) = time(|| kernel_basis(&model.eta.eta, &model.weights, m));
            let all_zero = basis.iter().all(|v| d.apply(v).is_zero());
            sec.push(
                R::compare(
                    &format!("decomp.kernel_basis.{m}"),
                    anchor,
                    json!(true),
                    Source::Trivial,
                    json!(all_zero),
                )
                .timed(ms),
            );
            samples.push(json!({
                "degree": m,
                "size": basis.len().to_string(),
                "first": basis.iter().take(3).map(|p| p.to_string()).collect::<Vec<_>>(),
            }));
        }
    }
    sec.payload = json!({"summaries": summaries, "kernel_samples": samples});
    Ok(sec)
}

pub fn closure_section<C: Coeff>(
    model: &Model<C>,
    include_650: bool,
    force: bool,
) -> Result<Section> {
    let mut sec = Section::new("closure");
    let calc = DimCalculator::new();
    let mut pairs = vec![(1, 0), (0, 1)];
    if include_650 {
        pairs.push((1, 1));
    }
    for (m1, m2) in pairs {
        let (d, ms) = time(|| lowering_closure(&model.rep, model.zeta.zeta(1), m1, m2, force));
        sec.push(
            R::compare(
                &format!("closure.{m1}.{m2}"),
                "module generated by x1^m1 zeta1^m2",
                s(calc.weyl_dim(m1, m2)),
                Source::Derived,
                s(d?),
            )
            .timed(ms),
        );
    }
    Ok(sec)
}

pub fn identity_section(max_degree: u32) -> Section {
    let mut sec = Section::new("identity");
    let (r, ms) = time(|| identity_check(max_degree));
    for row in &r.rows {
        sec.push(R::compare(
            &format!("identity.coefficient.{}", row.degree),
            "dimension identity",
            json!({"binomial": row.binomial, "series": row.expected_series.to_string()}),
            Source::Derived,
            json!({"binomial": row.weyl_sum, "series": row.series_coefficient}),
        ));
    }
    let series: Vec<String> = r
        .rows
        .iter()
        .map(|row| row.series_coefficient.clone())
        .collect();
    let mut expected: Vec<String> = vec!["0".into(); series.len()];
    for e in expected.iter_mut().take(3) {
        *e = "1".into();
    }
    sec.push(
        R::compare(
            "identity.series",
            "dimension identity",
            json!(expected),
            Source::Printed,
            json!(series),
        )
        .timed(ms),
    );
    sec.payload = json!({"rows": r.rows});
    sec
}

/// True iff no row in any section failed outright.
pub fn all_passed(sections: &[Section]) -> bool {
    sections.iter().all(|s| s.failures() == 0)
}

/// Counts by status over all sections: (pass, fail, flagged).
pub fn tally(sections: &[Section]) -> (usize, usize, usize) {
    let mut t = (0, 0, 0);
    for r in sections.iter().flat_map(|s| &s.reports) {
        match r.status {
            Status::Pass => t.0 += 1,
            Status::Fail => t.1 += 1,
            Status::DiscrepancyFlagged => t.2 += 1,
        }
    }
    t
}

/// D(η) by explicit differentiation, independent of operator composition.
pub fn pairing<C: Coeff>(f: &Polynomial<C>, g: &Polynomial<C>) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for (m, c) in f.iter() {
        let mut h = g.clone();
        for v in m.factors() {
            h = h.diff(v);
        }
        out = out.add(&h.scale(c));
    }
    out
}
