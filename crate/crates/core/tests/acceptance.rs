//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line; the test fails
//! if any criterion does.

use std::io::Write;
use std::time::{Duration, Instant};

use abelcx::affine::{
    aff, connection_checks, standard_j, standard_k, toeplitz_algebra, AlgebraClass, AssociativeAlgebra, ComplexAlgebraStructure,
    KConvention,
};
use abelcx::catalog::{by_id, catalog_ids, example_family_default, four_dim, heisenberg_example, FOUR_DIM_IDS};
use abelcx::cli;
use abelcx::complex::{gl_with_structure, is_abelian, is_abelian_hypercomplex, AbelianCharacterizations, ComplexStructure, Side};
use abelcx::decomposition::{affine_quotient, find_abelian_ideal, flag_decomposition};
use abelcx::io::{emit_algebra, emit_structure, flag_json, parse_algebra, parse_structure, to_json, AssociativeFile};
use abelcx::lie::LieAlgebra;
use abelcx::linalg::{unit_vector, LinearMap, Subspace};
use abelcx::obstructions::{codim1_obstruction, free_two_step_obstruction, search_abelian_j, Evidence};
use abelcx::random::{random_conjugate, seeded};

type Outcome = Result<String, String>;

struct Case {
    label: String,
    algebra: LieAlgebra,
    j: ComplexStructure,
}

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: abelcx::Error) -> String {
    e.to_string()
}

/// Every catalog entry with each of its structures, plus seeded random changes of basis.
fn corpus(random_count: usize, seed: u64) -> Result<Vec<Case>, String> {
    let mut cases = Vec::new();
    for id in catalog_ids() {
        let e = by_id(&id).map_err(err)?;
        for (k, j) in e.structures.iter().enumerate() {
            cases.push(Case { label: format!("{id}#{k}"), algebra: e.algebra.clone(), j: j.clone() });
        }
    }
    let base_len = cases.len();
    let mut rng = seeded(seed);
    for i in 0..random_count {
        let base = &cases[i % base_len];
        let (g, j, _) = random_conjugate(&base.algebra, &base.j, &mut rng).map_err(err)?;
        cases.push(Case { label: format!("{}@random{i}", base.label), algebra: g, j });
    }
    Ok(cases)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for id in FOUR_DIM_IDS {
        let e = four_dim(id).map_err(err)?;
        check(e.algebra.validate().is_valid(), format!("{id} fails the Lie axioms"))?;
        check(is_abelian(&e.algebra, e.j().ok_or("no structure")?).map_err(err)?, format!("{id}: J not abelian"))?;
    }
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("7 entries abelian in {elapsed:?}"))
}

fn criterion_2() -> Outcome {
    let mut cases = corpus(50, 2)?;
    let upper = aff(&AssociativeAlgebra::upper_triangular2()).map_err(err)?;
    cases.push(Case { label: "aff(upper2)".into(), algebra: upper, j: standard_j(3) });
    for side in [Side::Left, Side::Right] {
        let (g, j) = gl_with_structure(2, &LinearMap::standard_rotation(1), side).map_err(err)?;
        cases.push(Case { label: format!("gl2-{side:?}"), algebra: g, j });
    }
    let mut non_abelian = 0;
    for c in &cases {
        let ch = AbelianCharacterizations::evaluate(&c.algebra, &c.j).map_err(err)?;
        check(ch.agree(), format!("{}: {ch:?}", c.label))?;
        non_abelian += usize::from(!ch.abelian);
    }
    Ok(format!("{} pairs agree ({non_abelian} non-abelian)", cases.len()))
}

fn criterion_3() -> Outcome {
    let mut real = vec![];
    for n in 0..=4 {
        real.push((format!("trivial{n}"), AssociativeAlgebra::trivial(n)));
    }
    for name in ["reals", "diag2", "jordan2", "split2"] {
        real.push((name.to_string(), AssociativeAlgebra::by_name(name).map_err(err)?));
    }
    let mut complex = vec![("complexes".to_string(), ComplexAlgebraStructure::complexes())];
    for k in 1..=5 {
        complex.push((format!("toeplitz{k}"), toeplitz_algebra(k).map_err(err)?));
    }
    let all = real.iter().cloned().chain(complex.iter().map(|(n, c)| (n.clone(), c.base().clone())));
    let mut count = 0;
    for (name, a) in all {
        let g = aff(&a).map_err(err)?;
        check(g.validate().is_valid(), format!("aff({name}) fails Jacobi"))?;
        check(is_abelian(&g, &standard_j(a.dim())).map_err(err)?, format!("aff({name}): J not abelian"))?;
        count += 1;
    }
    for (name, c) in &complex {
        let g = aff(c.base()).map_err(err)?;
        for conv in [KConvention::NegateFirst, KConvention::NegateSecond] {
            let ok = is_abelian_hypercomplex(&g, &standard_j(c.base().dim()), &standard_k(c, conv)).map_err(err)?;
            check(ok, format!("aff({name}), {conv:?}: not abelian hypercomplex"))?;
        }
    }
    Ok(format!("{count} algebras, {} hypercomplex pairs under both conventions", complex.len()))
}

fn criterion_4() -> Outcome {
    let mut classes = Vec::new();
    for k in 1..=5 {
        let g = aff(toeplitz_algebra(k).map_err(err)?.base()).map_err(err)?;
        let class = g.nilpotency_class();
        check(class == Some(k), format!("k = {k}: class {class:?}"))?;
        classes.push(k);
    }
    Ok(format!("classes {classes:?}"))
}

fn criterion_5() -> Outcome {
    let mut algebras = vec![AssociativeAlgebra::upper_triangular2()];
    for name in ["trivial1", "trivial2", "trivial3", "trivial4", "reals", "complexes", "diag2", "jordan2", "split2"] {
        algebras.push(AssociativeAlgebra::by_name(name).map_err(err)?);
    }
    for k in 1..=5 {
        algebras.push(toeplitz_algebra(k).map_err(err)?.base().clone());
    }
    for a in &algebras {
        let r = connection_checks(a).map_err(err)?;
        check(r.all(), format!("{:?}: {r:?}", a.basis_names()))?;
    }
    Ok(format!("{} algebras, one noncommutative", algebras.len()))
}

fn criterion_6() -> Outcome {
    let rh = heisenberg_example(1).map_err(err)?;
    let u = Subspace::span(4, vec![unit_vector(4, 1), unit_vector(4, 2)]).map_err(err)?;
    let cert = affine_quotient(&rh.algebra, rh.j().ok_or("no J")?, &u).map_err(err)?;
    check(cert.identification.class == AlgebraClass::Null(1), format!("R×h1: A is {:?}", cert.identification.class))?;
    check(cert.kernel == rh.algebra.center(), "R×h1: kernel differs from center")?;

    let s11 = four_dim("S11").map_err(err)?;
    let u = find_abelian_ideal(&s11.algebra).map_err(err)?;
    let cert2 = affine_quotient(&s11.algebra, s11.j().ok_or("no J")?, &u).map_err(err)?;
    check(cert2.identification.class == AlgebraClass::Complexes, format!("aff(C): A is {:?}", cert2.identification.class))?;
    check(cert2.kernel == s11.algebra.center() && cert2.kernel.is_zero(), "aff(C): kernel is not the zero center")?;
    let iso = cert2.identification.isomorphism.as_ref().ok_or("aff(C): no rational isomorphism from C")?;
    check(iso.is_invertible(), "aff(C): identification map singular")?;
    Ok("R×h1 → trivial R (kernel = center, dim 2); aff(C) → C (kernel 0)".into())
}

fn criterion_7() -> Outcome {
    let mut cases = corpus(20, 7)?;
    for (k, n) in [(1, 1), (2, 1), (1, 2)] {
        let e = example_family_default(k, n).map_err(err)?;
        cases.push(Case { label: e.id.clone(), algebra: e.algebra.clone(), j: e.j().ok_or("no J")?.clone() });
    }
    let mut steps = 0;
    for c in &cases {
        if !is_abelian(&c.algebra, &c.j).map_err(err)? {
            continue;
        }
        let first = flag_decomposition(&c.algebra, &c.j, None).map_err(|e| format!("{}: {e}", c.label))?;
        first.verify(&c.algebra, &c.j).map_err(|e| format!("{}: {e}", c.label))?;
        let again = flag_decomposition(&c.algebra, &c.j, None).map_err(err)?;
        let (a, b) = (to_json(&flag_json(&first)).map_err(err)?, to_json(&flag_json(&again)).map_err(err)?);
        check(a == b, format!("{}: flag output differs between runs", c.label))?;
        for st in &first.steps {
            let r = st.certificate.a.check();
            check(r.commutative && r.associative, format!("{}: A not commutative", c.label))?;
        }
        steps += first.len();
    }
    Ok(format!("{} flags, {steps} verified steps, deterministic", cases.len()))
}

fn criterion_8() -> Outcome {
    let cases = corpus(100, 8)?;
    let mut abelian = 0;
    for c in &cases {
        if is_abelian(&c.algebra, &c.j).map_err(err)? {
            abelian += 1;
            check(c.algebra.is_solvable(), format!("{}: abelian J on a non-solvable algebra", c.label))?;
        }
    }
    check(abelian >= 100, format!("only {abelian} abelian pairs"))?;
    Ok(format!("{abelian} abelian pairs, all solvable"))
}

fn criterion_9() -> Outcome {
    let mut dims = Vec::new();
    for id in ["derext-R2", "derext-h1", "derext-h2"] {
        let e = by_id(id).map_err(err)?;
        let r = codim1_obstruction(id, &e.algebra).map_err(err)?;
        check(r.is_ruled_out() && r.reverify(&e.algebra).map_err(err)?, format!("{id}: {}", r.verdict_str()))?;
        dims.push(e.algebra.dim());
    }
    check(dims == [3, 4, 6], format!("extension dims {dims:?}"))?;
    for (rank, span) in [(3, 3), (4, 6)] {
        let r = free_two_step_obstruction(rank).map_err(err)?;
        let Evidence::Commutant { j_span_dim, commutant_dim, .. } = &r.evidence else {
            return Err(format!("rank {rank}: wrong evidence"));
        };
        check(
            r.is_ruled_out() && *j_span_dim == span && *commutant_dim == 1,
            format!("rank {rank}: {} span {j_span_dim} commutant {commutant_dim}", r.verdict_str()),
        )?;
    }
    let mut tried = Vec::new();
    for id in ["S8", "RxH1"] {
        let e = by_id(id).map_err(err)?;
        let r = search_abelian_j(id, &e.algebra, 10_000).map_err(err)?;
        let j = r.witness().ok_or(format!("{id}: no witness"))?;
        check(is_abelian(&e.algebra, j).map_err(err)?, format!("{id}: witness not abelian"))?;
        if let Evidence::Search { candidates } = r.evidence {
            tried.push(candidates);
        }
    }
    Ok(format!("codim-1 dims {dims:?}; free ranks 3, 4 ruled out; search candidates {tried:?}"))
}

fn criterion_10(suite_start: Instant) -> Outcome {
    let mut files = 0;
    for id in catalog_ids() {
        let e = by_id(&id).map_err(err)?;
        let text = emit_algebra(&e.algebra).map_err(err)?;
        check(emit_algebra(&parse_algebra(&text).map_err(err)?).map_err(err)? == text, format!("{id}: algebra round trip"))?;
        for j in &e.structures {
            let t = emit_structure(j).map_err(err)?;
            let back = parse_structure(&t, e.algebra.dim()).map_err(err)?;
            check(emit_structure(&back).map_err(err)? == t, format!("{id}: structure round trip"))?;
        }
        if let Some(c) = &e.complex_model {
            let t = to_json(&AssociativeFile::from_complex(c)).map_err(err)?;
            let back: AssociativeFile = abelcx::io::from_json(&t).map_err(err)?;
            check(to_json(&back).map_err(err)? == t, format!("{id}: A round trip"))?;
        }
        files += 1;
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let out = dir.path().to_str().ok_or("temp path")?;
    for id in FOUR_DIM_IDS {
        let o = cli::run(["abelcx", "catalog", "emit", id, "--out", out]);
        check(o.code == 0, format!("catalog emit {id}: exit {}", o.code))?;
        let path = dir.path().join(format!("{id}.algebra.json"));
        let bytes = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
        check(emit_algebra(&parse_algebra(&bytes).map_err(err)?).map_err(err)? == bytes, format!("{id}: emitted file round trip"))?;
    }
    let elapsed = suite_start.elapsed();
    check(elapsed < Duration::from_secs(60), format!("acceptance run took {elapsed:?}"))?;
    Ok(format!("{files} entries byte-identical; acceptance run {elapsed:?}"))
}

type Criterion = Box<dyn Fn() -> Outcome>;

#[test]
fn acceptance_criteria() {
    let start = Instant::now();
    let criteria: Vec<(&str, Criterion)> = vec![
        ("catalog soundness", Box::new(criterion_1)),
        ("characterization equivalence", Box::new(criterion_2)),
        ("aff(A) law", Box::new(criterion_3)),
        ("k-step nilpotency", Box::new(criterion_4)),
        ("flat torsion-free connection", Box::new(criterion_5)),
        ("affine quotient certificates", Box::new(criterion_6)),
        ("flag decomposition", Box::new(criterion_7)),
        ("abelian implies solvable", Box::new(criterion_8)),
        ("obstructions", Box::new(criterion_9)),
        ("round-trip determinism", Box::new(move || criterion_10(start))),
    ];
    // Written to the raw stderr handle so the summary shows without --nocapture.
    let mut out = std::io::stderr().lock();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let line = match run() {
            Ok(detail) => format!("criterion {:>2} {name}: PASS ({detail})", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} {name}: FAIL ({why})", i + 1)
            }
        };
        writeln!(out, "{line}").expect("stderr");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
