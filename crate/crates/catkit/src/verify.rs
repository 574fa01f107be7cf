use std::sync::Arc;

use exactpoly::Polynomial;
use frobsc::{semicenter, verify_invariant, weight_of};
use liealg::{
    c_value, derive_seed, frobenius_semiradical, index, rng_from_seed, verify_cp_ideal, LieAlgebra, Subspace,
};
use pbw::{is_central, symmetrize, weight_in_enveloping, DEFAULT_DEGREE_CAP};

use crate::entry::{CatalogEntry, Tag};
use crate::instantiate::{instantiate_parameters, Strategy};
use crate::report::{CheckResult, Parameter, PipelineSummary, Report, Status};

fn result(id: u8, name: &'static str, status: Status, detail: impl Into<String>) -> CheckResult {
    CheckResult { id, name, status, detail: detail.into() }
}

fn pass_or_fail(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn show_subspace(g: &LieAlgebra, s: &Subspace) -> String {
    let parts: Vec<String> = s.basis().iter().map(|v| g.linear_form(v).to_string()).collect();
    format!("<{}>", parts.join(", "))
}

fn same_subspace(a: &Subspace, b: &Subspace) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

/// Canonical representatives sorted by their printed form, so two lists
/// agree exactly when they agree as sets up to nonzero scalars.
fn normalized_set(polys: &[Polynomial]) -> Vec<String> {
    let mut out: Vec<String> = polys.iter().map(|p| p.normalized().to_string()).collect();
    out.sort();
    out.dedup();
    out
}

fn degree(p: &Polynomial) -> u32 {
    p.total_degree().unwrap_or(0)
}

/// Runs every applicable check on one entry. Randomness is derived from
/// `seed` and the entry name, so reports do not depend on catalog order.
pub fn verify_entry(entry: &CatalogEntry, seed: u64) -> Report {
    let g = &entry.algebra;
    let n = g.dim();
    let ex = &entry.expect;
    let mut rng = rng_from_seed(derive_seed(seed, &entry.name));
    let mut checks = Vec::with_capacity(10);
    let mut parameters = Vec::new();
    let mut pipeline = None;
    let mut generators: Vec<String> = Vec::new();

    // 1. index
    let i = index(g, &mut rng);
    let parity = (n - i).is_multiple_of(2);
    checks.push(match ex.index {
        Some(e) => result(1, "index", pass_or_fail(e == i && parity), format!("computed {i}, listed {e}")),
        None => result(1, "index", pass_or_fail(parity), format!("computed {i}, nothing listed")),
    });

    // 2. c = (dim + index) / 2
    let c = c_value(n, i);
    checks.push(match ex.c {
        Some(e) => result(2, "c", pass_or_fail(e == c), format!("computed {c}, listed {e}")),
        None => result(2, "c", Status::Skip, format!("computed {c}, nothing listed")),
    });

    // 3. center, for square integrable entries
    let center = g.center();
    checks.push(if entry.has(Tag::SquareIntegrable) {
        let listed: Option<Vec<_>> = ex.center.iter().map(|p| linear_coordinates(p, n)).collect();
        match listed {
            Some(vs) => {
                let span = Subspace::span(n, vs);
                let ok = same_subspace(&span, &center) && center.dim() == i;
                result(
                    3,
                    "center",
                    pass_or_fail(ok),
                    format!("Z = {}, dim Z = {}, index {i}", show_subspace(g, &center), center.dim()),
                )
            }
            None => result(3, "center", Status::Fail, "square integrable entry lists a nonlinear center generator"),
        }
    } else {
        result(3, "center", Status::Skip, format!("not square integrable; dim Z = {}", center.dim()))
    });

    // 4. Frobenius semiradical
    let semiradical = frobenius_semiradical(g, &mut rng);
    checks.push(match &ex.semiradical {
        Some(vs) => {
            let span = Subspace::span(n, vs.iter().cloned());
            result(
                4,
                "semiradical",
                pass_or_fail(same_subspace(&span, &semiradical) && semiradical.contains_subspace(&center)),
                format!("computed {}", show_subspace(g, &semiradical)),
            )
        }
        None if !semiradical.contains_subspace(&center) => {
            result(4, "semiradical", Status::Fail, "computed semiradical misses part of the center")
        }
        None => result(4, "semiradical", Status::Skip, format!("computed {}", show_subspace(g, &semiradical))),
    });

    // 5. commutative polarization ideal, or its absence
    checks.push(match (&ex.cpi, entry.has(Tag::NoCp)) {
        (Some(vs), _) => {
            let p = Subspace::span(n, vs.iter().cloned());
            match verify_cp_ideal(g, &p, i) {
                Ok(()) if p.contains_subspace(&semiradical) => {
                    result(5, "cp-ideal", Status::Pass, format!("{} is a CP-ideal", show_subspace(g, &p)))
                }
                Ok(()) => result(5, "cp-ideal", Status::Fail, "listed ideal does not contain the semiradical"),
                Err(e) => result(5, "cp-ideal", Status::Fail, e.to_string()),
            }
        }
        (None, true) => {
            // Every commutative polarization contains F, so F must be
            // commutative of dimension at most c for one to exist.
            if !g.is_commutative(&semiradical) {
                result(5, "cp-ideal", Status::Pass, "none: the semiradical is not commutative")
            } else if semiradical.dim() > c {
                result(5, "cp-ideal", Status::Pass, format!("none: dim F = {} > c = {c}", semiradical.dim()))
            } else {
                result(5, "cp-ideal", Status::Fail, "absence listed but not certified by the semiradical")
            }
        }
        (None, false) => result(5, "cp-ideal", Status::Skip, "nothing listed"),
    });

    // 6. the extension pipeline
    let run_pipeline = entry.torus.is_some() && !entry.has(Tag::NoTorus);
    let mut computed_degree_sum = None;
    checks.push(if run_pipeline {
        match instantiate_parameters(entry, Strategy::Sequential, seed) {
            Err(e) => result(6, "semicenter", Status::Fail, e.to_string()),
            Ok(inst) => {
                parameters =
                    inst.values.iter().map(|(k, v)| Parameter { name: k.clone(), value: v.to_string() }).collect();
                match semicenter(g, &inst.torus, &mut rng) {
                    Err(e) => result(6, "semicenter", Status::Fail, e.to_string()),
                    Ok(sc) => {
                        let found: Vec<Polynomial> = sc.generators.iter().map(|v| v.poly_in_g.clone()).collect();
                        generators = found.iter().map(|p| p.normalized().to_string()).collect();
                        computed_degree_sum = Some(sc.degree_sum);
                        let m = sc.torus_dim;
                        let delta_in_g = sc.delta.reindex(|v| v.saturating_sub(m), n);
                        let mut problems = Vec::new();
                        if let Some(r) = ex.rank.filter(|&r| m > r) {
                            problems.push(format!("torus dimension {m} exceeds the listed rank {r}"));
                        }
                        if normalized_set(&found) != normalized_set(ex.generators()) {
                            problems.push(format!(
                                "generators differ from the listed {}",
                                normalized_set(ex.generators()).join(", ")
                            ));
                        }
                        if let Some(d) = &ex.delta {
                            if !sc.flags.generators_in_g || *d != delta_in_g {
                                problems.push(format!("determinant {delta_in_g} differs from the listed one"));
                            }
                        }
                        let f = &sc.flags;
                        for (ok, what) in [
                            (f.weights_independent, "weights dependent"),
                            (f.generators_in_g, "a factor uses a torus variable"),
                            (f.kernel_codimension, "codim of the weight kernel differs from r"),
                            (f.kernel_index, "index of the weight kernel differs from r"),
                            (f.degree_bound, "degree sum exceeds c"),
                            (f.invariant_on_g != Some(false), "a weight is nonzero on g"),
                            (f.pfaffian_weight_is_trace, "Pfaffian weight is not the trace"),
                            (f.pfaffian_homogeneous, "Pfaffian not homogeneous of degree dim L / 2"),
                        ] {
                            if !ok {
                                problems.push(what.to_string());
                            }
                        }
                        pipeline = Some(PipelineSummary {
                            torus_dim: m,
                            index: sc.index_g,
                            extension_dim: sc.extension.dim(),
                            generator_count: sc.generators.len(),
                            kernel_dim: sc.lambda_kernel.dim(),
                            kernel_index: sc.lambda_kernel_index,
                            degree_sum: sc.degree_sum,
                            c: sc.c_value,
                            weights_independent: f.weights_independent,
                            generators_in_g: f.generators_in_g,
                            kernel_codimension: f.kernel_codimension,
                            kernel_index_matches: f.kernel_index,
                            degree_bound: f.degree_bound,
                            invariant_on_g: f.invariant_on_g,
                            pfaffian_weight_is_trace: f.pfaffian_weight_is_trace,
                            pfaffian_homogeneous: f.pfaffian_homogeneous,
                            pfaffian: sc.pfaffian.to_string(),
                            delta: delta_in_g.to_string(),
                        });
                        if problems.is_empty() {
                            result(6, "semicenter", Status::Pass, format!("{} generators match", found.len()))
                        } else {
                            result(6, "semicenter", Status::Fail, problems.join("; "))
                        }
                    }
                }
            }
        }
    } else {
        result(6, "semicenter", Status::Skip, "no torus")
    });

    // 7. invariance and relations, where the pipeline does not apply
    checks.push(if run_pipeline {
        result(7, "invariants", Status::Skip, "covered by the pipeline")
    } else {
        let mut problems = Vec::new();
        for p in &ex.center {
            if verify_invariant(g, p) != Ok(true) {
                problems.push(format!("{p} is not invariant"));
            }
        }
        for p in &ex.semicenter {
            if weight_of(g, p).is_err() {
                problems.push(format!("{p} is not a semi-invariant"));
            }
        }
        for (text, p) in &ex.relations {
            if !p.is_zero() {
                problems.push(format!("relation {text} does not vanish"));
            }
        }
        if generators.is_empty() {
            generators = ex.generators().iter().map(|p| p.normalized().to_string()).collect();
        }
        let counted = ex.center.len() + ex.semicenter.len();
        if problems.is_empty() {
            result(7, "invariants", Status::Pass, format!("{counted} generators, {} relations", ex.relations.len()))
        } else {
            result(7, "invariants", Status::Fail, problems.join("; "))
        }
    });

    // 8. 3 i <= dim + 2 dim Z for coregular entries
    let lhs = 3 * i;
    let rhs = n + 2 * center.dim();
    checks.push(if entry.has(Tag::Coregular) {
        if lhs > rhs {
            result(8, "coregular-bound", Status::Fail, format!("3i = {lhs} > {rhs}"))
        } else if lhs == rhs {
            let degrees: Vec<u32> = ex.generators().iter().map(degree).collect();
            let sum: u32 = degrees.iter().sum();
            let ok = sum as usize == c && degrees.iter().all(|&d| d <= 2);
            result(
                8,
                "coregular-bound",
                pass_or_fail(ok),
                format!("equality {lhs} = {rhs}; degrees {degrees:?}, c = {c}"),
            )
        } else {
            result(8, "coregular-bound", Status::Pass, format!("3i = {lhs} < {rhs}"))
        }
    } else {
        let holds = if lhs <= rhs { "holds" } else { "fails" };
        result(
            8,
            "coregular-bound",
            Status::Skip,
            format!("not coregular; 3i = {lhs}, dim + 2 dim Z = {rhs}, inequality {holds}"),
        )
    });

    // 9. symmetrized generators in U(g)
    let shared = Arc::new(g.clone());
    let mut problems = Vec::new();
    let mut tested = 0;
    for (p, central) in ex.center.iter().map(|p| (p, true)).chain(ex.semicenter.iter().map(|p| (p, false))) {
        if degree(p) > DEFAULT_DEGREE_CAP {
            continue;
        }
        tested += 1;
        let ok = match symmetrize(p, &shared) {
            Ok(s) if central => is_central(&s),
            Ok(s) => weight_in_enveloping(&s).is_some(),
            Err(_) => false,
        };
        if !ok {
            problems.push(format!("s({p}) is not {}", if central { "central" } else { "semi-invariant" }));
        }
    }
    checks.push(if tested == 0 {
        result(9, "pbw", Status::Skip, "no generators")
    } else if problems.is_empty() {
        result(9, "pbw", Status::Pass, format!("{tested} symmetrized generators"))
    } else {
        result(9, "pbw", Status::Fail, problems.join("; "))
    });

    // 10. degree sum of free generators
    checks.push(match computed_degree_sum {
        Some(sum) => result(10, "degree-bound", pass_or_fail(sum as usize <= c), format!("sum {sum}, c = {c}")),
        None if entry.has(Tag::Coregular) => {
            let sum: u32 = ex.generators().iter().map(degree).sum();
            result(10, "degree-bound", pass_or_fail(sum as usize <= c), format!("sum {sum}, c = {c}"))
        }
        None => result(10, "degree-bound", Status::Skip, "generators are not free"),
    });

    let passed = checks.iter().all(|c| c.status != Status::Fail);
    Report { entry: entry.name.clone(), dim: n, passed, parameters, generators, pipeline, checks }
}

fn linear_coordinates(p: &Polynomial, n: usize) -> Option<liealg::Vector> {
    if p.total_degree() != Some(1) || !p.is_homogeneous() {
        return None;
    }
    let mut v = liealg::zero_vector(n);
    for (m, c) in p.terms() {
        v[m.max_var()?] = c.clone();
    }
    Some(v)
}
