//! The ten acceptance criteria, each reported as one PASS/FAIL line.
//! Run with `cargo test -p lie2kit --test acceptance -- --nocapture` to see
//! the lines.

use std::time::{Duration, Instant};

use lie2kit::butterfly::strictified_semidirect;
use lie2kit::exactlin::FloatMatrix;
use lie2kit::gradedend::{delta, super_bracket, GradedEndo, TwoTermComplex};
use lie2kit::group2::exp::{exp_bridge_exact, exp_bridge_float, exp_delta, exp_nilpotent, int_delta_float};
use lie2kit::group2::{
    check_group_xmod, check_strict_rep, check_two_group, int_delta, semidirect_two_group, AutV, K1Element,
    StrictGroupRep,
};
use lie2kit::lie2::{
    check_crossed_module, check_lie2, check_morphism, compose, dgla_to_xmod, jacobi_violation, quasi_iso_check,
    xmod_to_dgla, Lie2Morphism, LieAlgebra,
};
use lie2kit::omni::{
    check_dirac_graph, cyclic_double_bracket, dirac_pullback_check, glgl_bracket, glglv_bracket, jacobiator_t,
    omni_pipeline, OmniElement,
};
use lie2kit::rephomotopy::{check_rep, morphism_to_rep, rep_to_morphism, semidirect_lie2};
use lie2kit::sample::{self, SampleRng};
use lie2kit::{Matrix, Tensor};
use rand::Rng;

const SAMPLES: usize = 200;
const SEED: u64 = 20240601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_endo(rng: &mut SampleRng, c: &TwoTermComplex, degree: i32) -> GradedEndo {
    let (n0, n1) = (c.dim_v0(), c.dim_v1());
    let m = |rng: &mut SampleRng, r, k| sample::int_matrix(rng, r, k, sample::BOUND);
    match degree {
        1 => GradedEndo::degree1(c, m(rng, n1, n0)).unwrap(),
        0 => GradedEndo::degree0(c, m(rng, n0, n0), m(rng, n1, n1)).unwrap(),
        _ => GradedEndo::degree_minus1(c, m(rng, n0, n1)).unwrap(),
    }
}

/// `delta` with the convention that a degree -1 input maps to zero.
fn delta_or_zero(c: &TwoTermComplex, t: &GradedEndo) -> Option<GradedEndo> {
    (t.degree() >= 0).then(|| delta(c, t).unwrap())
}

fn sign(k: i32) -> lie2kit::Rational {
    lie2kit::int(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

fn criterion_1() -> Outcome {
    let mut rng = sample::rng(SEED);
    for s in 0..SAMPLES {
        let c = sample::complex(&mut rng, sample::MAX_DIM);
        let degs: Vec<i32> = (0..3).map(|_| rng.gen_range(-1..=1)).collect();
        let (t, u, v) = (random_endo(&mut rng, &c, degs[0]), random_endo(&mut rng, &c, degs[1]), random_endo(&mut rng, &c, degs[2]));
        // delta^2 = 0
        let t1 = random_endo(&mut rng, &c, 1);
        let dd = delta(&c, &delta(&c, &t1).unwrap()).unwrap();
        ensure(dd.is_zero(), || format!("sample {s}: delta^2 != 0"))?;
        // graded Leibniz
        if (0..=1).contains(&(t.degree() + u.degree())) {
            let lhs = delta(&c, &super_bracket(&t, &u)).unwrap();
            let mut rhs = GradedEndo::zero(&c, lhs.degree());
            if let Some(dt) = delta_or_zero(&c, &t) {
                rhs = rhs.add(&super_bracket(&dt, &u));
            }
            if let Some(du) = delta_or_zero(&c, &u) {
                rhs = rhs.add(&super_bracket(&t, &du).scale(&sign(t.degree())));
            }
            ensure(lhs == rhs, || format!("sample {s}: Leibniz fails for degrees {degs:?}"))?;
        }
        // graded Jacobi
        let lhs = super_bracket(&t, &super_bracket(&u, &v));
        let rhs = super_bracket(&super_bracket(&t, &u), &v)
            .add(&super_bracket(&u, &super_bracket(&t, &v)).scale(&sign(t.degree() * u.degree())));
        ensure(lhs.matrix() == rhs.matrix(), || format!("sample {s}: Jacobi fails for degrees {degs:?}"))?;
    }
    Ok(format!("{SAMPLES} random triples"))
}

fn criterion_2() -> Outcome {
    let mut rng = sample::rng(SEED + 2);
    for s in 0..SAMPLES {
        let x = sample::crossed_module(&mut rng, sample::MAX_DIM);
        let a = xmod_to_dgla(&x);
        let back = dgla_to_xmod(&a).map_err(|e| format!("sample {s}: {e}"))?;
        ensure(back == x, || format!("sample {s}: xmod -> DGLA -> xmod is not the identity"))?;
        ensure(xmod_to_dgla(&back) == a, || format!("sample {s}: DGLA -> xmod -> DGLA is not the identity"))?;
        let r = check_lie2(&a);
        ensure(r.passed(), || format!("sample {s}: converted DGLA fails {}", r.first_failure().unwrap_or_default()))?;
        let r = check_crossed_module(&back);
        ensure(r.passed(), || format!("sample {s}: converted xmod fails {}", r.first_failure().unwrap_or_default()))?;
    }
    Ok(format!("{SAMPLES} random crossed modules"))
}

fn criterion_3() -> Outcome {
    let mut rng = sample::rng(SEED + 3);
    for s in 0..SAMPLES {
        let r = sample::lie_and_rep(&mut rng, sample::MAX_DIM);
        let (end, f) = rep_to_morphism(&r).map_err(|e| format!("sample {s}: {e}"))?;
        let back = morphism_to_rep(r.g(), &end, &f).map_err(|e| format!("sample {s}: {e}"))?;
        ensure(back == r, || format!("sample {s}: rep -> morphism -> rep is not the identity"))?;
        let c = r.complex();
        for i in 0..r.g().dim() {
            let x = lie2kit::exactlin::vector::unit(r.g().dim(), i);
            let t = GradedEndo::degree0(c, r.mu0(&x), r.mu1(&x)).unwrap();
            ensure(delta(c, &t).unwrap().is_zero(), || format!("sample {s}: mu(e{i}) not in ker delta"))?;
        }
        let src = lie2kit::lie2::Lie2Algebra::from_lie_algebra(r.g());
        let rep = check_morphism(&src, &xmod_to_dgla(end.xmod()), &f);
        ensure(rep.passed(), || format!("sample {s}: {}", rep.first_failure().unwrap_or_default()))?;
    }
    Ok(format!("{SAMPLES} random representations"))
}

fn criterion_4() -> Outcome {
    let mut rng = sample::rng(SEED + 4);
    let mut nonstrict = 0;
    for s in 0..SAMPLES {
        let r = sample::lie_and_rep(&mut rng, sample::MAX_DIM);
        ensure(check_rep(&r).passed(), || format!("sample {s}: generator produced an invalid rep"))?;
        let a = semidirect_lie2(&r).map_err(|e| format!("sample {s}: {e}"))?;
        if !a.is_strict() {
            nonstrict += 1;
        }
        let rep = check_lie2(&a);
        ensure(rep.passed(), || format!("sample {s}: {}", rep.first_failure().unwrap_or_default()))?;
    }
    Ok(format!("{SAMPLES} random representations, {nonstrict} with l3 != 0"))
}

fn random_complexes(rng: &mut SampleRng, count: usize) -> Vec<TwoTermComplex> {
    (0..count).map(|_| sample::complex(rng, sample::MAX_DIM)).collect()
}

fn criterion_5() -> Outcome {
    let mut rng = sample::rng(SEED + 5);
    let per = 20;
    let complexes = random_complexes(&mut rng, SAMPLES / per);
    for (i, c) in complexes.iter().enumerate() {
        let r = check_group_xmod(&AutV::new(c), per, SEED + i as u64);
        ensure(r.passed(), || format!("complex {i}: {}", r.first_failure().unwrap_or_default()))?;
        // int delta is a morphism into K0, checked directly as well
        let k1 = lie2kit::group2::K1Group::new(c);
        let mut rr = sample::rng(SEED + 100 + i as u64);
        for _ in 0..per {
            use lie2kit::group2::Group;
            let (a, b) = (k1.sample(&mut rr), k1.sample(&mut rr));
            let lhs = int_delta(c, &k1.mul(&a, &b));
            let (da, db) = (int_delta(c, &a), int_delta(c, &b));
            ensure(lhs.b0() == &(da.b0() * db.b0()) && lhs.b1() == &(da.b1() * db.b1()), || {
                format!("complex {i}: int delta not multiplicative")
            })?;
        }
    }
    Ok(format!("{} complexes x {per} samples", complexes.len()))
}

fn criterion_6() -> Outcome {
    let mut rng = sample::rng(SEED + 6);
    let per = 20;
    let complexes = random_complexes(&mut rng, SAMPLES / per);
    for (i, c) in complexes.iter().enumerate() {
        let seed = SEED + i as u64;
        let rep = StrictGroupRep::identity(c);
        let laws = check_strict_rep(&rep, per, seed);
        ensure(laws.passed(), || format!("complex {i}: {}", laws.first_failure().unwrap_or_default()))?;
        let tg = semidirect_two_group(rep, per, seed).map_err(|e| format!("complex {i}: {e}"))?;
        let r = check_two_group(&tg, per, seed);
        ensure(r.passed(), || format!("complex {i}: {}", r.first_failure().unwrap_or_default()))?;
        let r = check_group_xmod(&tg.crossed_module(), per, seed);
        ensure(r.passed(), || format!("complex {i}: semidirect crossed module {}", r.first_failure().unwrap_or_default()))?;
        let inc = semidirect_two_group(StrictGroupRep::inclusion(c), per, seed).map_err(|e| format!("complex {i}: {e}"))?;
        let r = check_two_group(&inc, per, seed);
        ensure(r.passed(), || format!("complex {i}: inclusion rep {}", r.first_failure().unwrap_or_default()))?;
    }
    Ok(format!("{} complexes x {per} samples, two representations each", complexes.len()))
}

fn pipeline_reps() -> Vec<lie2kit::rephomotopy::RepUpToHomotopy> {
    let mut rng = sample::rng(SEED + 7);
    (0..100).map(|_| sample::lie_and_rep(&mut rng, sample::MAX_DIM)).collect()
}

fn criterion_7() -> Outcome {
    for (s, r) in pipeline_reps().iter().enumerate() {
        let p = strictified_semidirect(r).map_err(|e| format!("rep {s}: {e}"))?;
        let x = check_crossed_module(&p.xmod);
        ensure(x.passed(), || format!("rep {s}: {}", x.first_failure().unwrap_or_default()))?;
        let strict = p.strict_lie2();
        let f = p.equivalence_morphism();
        let m = check_morphism(&strict, &p.semidirect, &f);
        ensure(m.passed(), || format!("rep {s}: {}", m.first_failure().unwrap_or_default()))?;
        let q = quasi_iso_check(&strict, &p.semidirect, &f);
        ensure(q == Ok(true), || format!("rep {s}: quasi-iso {q:?}"))?;
    }
    Ok("100 random representations".into())
}

fn criterion_8() -> Outcome {
    for (s, r) in pipeline_reps().iter().enumerate() {
        let p = strictified_semidirect(r).map_err(|e| format!("rep {s}: {e}"))?;
        let strict = p.strict_lie2();
        let inc = p.inclusion_morphism();
        let m = check_morphism(&p.semidirect, &strict, &inc);
        ensure(m.passed(), || format!("rep {s}: {}", m.first_failure().unwrap_or_default()))?;
        ensure(inc.is_injective(), || format!("rep {s}: inclusion not injective"))?;
        let comp = compose(&p.equivalence_morphism(), &inc).map_err(|e| format!("rep {s}: {e}"))?;
        ensure(comp == Lie2Morphism::identity(&p.semidirect), || format!("rep {s}: composite is not the identity"))?;
    }
    Ok("100 random representations".into())
}

fn criterion_9() -> Outcome {
    for n in 1..=3 {
        let dim0 = n * n + n;
        let el = |i: usize| OmniElement::from_coords(n, &lie2kit::exactlin::vector::unit(dim0, i));
        for i in 0..dim0 {
            for j in i + 1..dim0 {
                for k in j + 1..dim0 {
                    let oracle = cyclic_double_bracket(&el(i), &el(j), &el(k));
                    ensure(oracle.a.is_zero() && oracle.u == jacobiator_t(&el(i), &el(j), &el(k)), || {
                        format!("n={n}: Jacobiator differs on (e{i}, e{j}, e{k})")
                    })?;
                }
            }
        }
        let p = omni_pipeline(n).map_err(|e| format!("n={n}: {e}"))?;
        ensure(p.butterfly.e().tensor() == &glgl_bracket(n), || format!("n={n}: middle bracket differs"))?;
        ensure(p.xmod.bracket_h0_tensor() == &glglv_bracket(n), || format!("n={n}: strict bracket differs"))?;
    }
    let mut rng = sample::rng(SEED + 9);
    let mut lie = 0;
    for s in 0..20 {
        let b = sample::skew_bracket(&mut rng, 3);
        let r = check_dirac_graph(&b).map_err(|e| format!("bracket {s}: {e}"))?;
        let jacobi = jacobi_violation(&b).is_none();
        ensure(r.ok("closure") == jacobi && r.ok("maximal") && r.ok("isotropic"), || format!("bracket {s}: {r}"))?;
        if jacobi {
            lie += 1;
            let r = dirac_pullback_check(&b, &Matrix::zeros(3, 0)).map_err(|e| format!("bracket {s}: {e}"))?;
            ensure(r.passed(), || format!("bracket {s}: {}", r.first_failure().unwrap_or_default()))?;
        }
    }
    let heis = LieAlgebra::from_constants(3, &[(0, 1, 2, 1)]).unwrap();
    let center = Matrix::column(&lie2kit::exactlin::vector::unit(3, 2));
    let r = dirac_pullback_check(heis.tensor(), &center).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("Heisenberg with its center: {}", r.first_failure().unwrap_or_default()))?;
    let r = dirac_pullback_check(&Tensor::zeros(&[2, 2], 2), &Matrix::identity(2)).map_err(|e| e.to_string())?;
    ensure(r.passed(), || format!("abelian with W = V: {}", r.first_failure().unwrap_or_default()))?;
    Ok(format!("n = 1, 2, 3; 20 skew brackets ({lie} Lie)"))
}

fn criterion_10() -> Outcome {
    let mut rng = sample::rng(SEED + 10);
    let mut worst: f64 = 0.0;
    for s in 0..SAMPLES {
        let c = sample::complex(&mut rng, sample::MAX_DIM);
        let d = FloatMatrix::from_exact(c.d());
        let a = FloatMatrix::from_exact(&sample::int_matrix(&mut rng, c.dim_v1(), c.dim_v0(), sample::BOUND));
        let norm = (&d * &a).norm_inf().max((&a * &d).norm_inf());
        let a = if norm > 2.0 { a.scale(2.0 / norm) } else { a };
        let m = exp_bridge_float(&d, &a);
        let (b0, b1) = int_delta_float(&d, &m);
        let (e0, e1) = exp_delta(&d, &a);
        let err = b0.max_abs_diff(&e0).max(b1.max_abs_diff(&e1));
        worst = worst.max(err);
        ensure(err <= 1e-9, || format!("sample {s}: error {err:e}"))?;
    }
    for s in 0..SAMPLES / 4 {
        let n = rng.gen_range(1..=3);
        let strict_upper = |rng: &mut SampleRng, shift: usize| {
            Matrix::from_fn(n, n, |i, j| if j >= i + shift { sample::entry(rng, sample::BOUND) } else { lie2kit::int(0) })
        };
        let c = TwoTermComplex::new(strict_upper(&mut rng, 1));
        let a = strict_upper(&mut rng, 0);
        let m = exp_bridge_exact(&c, &a).ok_or_else(|| format!("nilpotent sample {s}: no exact value"))?;
        let k = int_delta(&c, &K1Element::new(&c, m.clone()).map_err(|e| e.to_string())?);
        let e0 = exp_nilpotent(&(c.d() * &a)).ok_or("d A should be nilpotent")?;
        let e1 = exp_nilpotent(&(&a * c.d())).ok_or("A d should be nilpotent")?;
        ensure(k.b0() == &e0 && k.b1() == &e1, || format!("nilpotent sample {s}: exact mismatch"))?;
    }
    Ok(format!("{SAMPLES} float samples (max error {worst:.1e}), {} exact nilpotent samples", SAMPLES / 4))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("DGLA laws of End(V)", criterion_1),
        ("crossed module <-> 2-term DGLA round trip", criterion_2),
        ("representation <-> morphism round trip", criterion_3),
        ("semidirect product satisfies the L-infinity relations", criterion_4),
        ("Aut(V) is a crossed module of groups", criterion_5),
        ("semidirect-product 2-group laws", criterion_6),
        ("strictified crossed module and equivalence", criterion_7),
        ("inclusion morphism and composite identity", criterion_8),
        ("omni-Lie algebra", criterion_9),
        ("exponential bridge", criterion_10),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match &outcome {
            Ok(detail) => println!("[PASS] {:>2}. {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                println!("[FAIL] {:>2}. {name}: {why} ({secs:.2}s)", i + 1);
                failed.push(i + 1);
            }
        }
    }
    let total = start.elapsed();
    println!("acceptance: {} of 10 passed in {:.2}s", 10 - failed.len(), total.as_secs_f64());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
    assert!(total < Duration::from_secs(60), "suite took {total:?}");
}
