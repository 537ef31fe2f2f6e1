//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use newton_segre::calculus::ClassTerm;
use newton_segre::decompose::{validate_tiling_with, TilingOptions};
use newton_segre::fixtures::{FATPOINT, PLANE, THREELINES};
use newton_segre::oracle::{
    complete_intersection_class, principal_class, quadrature_cell, singularity_family_class, singularity_family_spec,
};
use newton_segre::{
    cell_integral, cli, compute_segre, to_series, ClassExpr, Engine, ExponentVector, MonomialIdealSpec, Rational,
    SegreOptions,
};

const SEED: u64 = 0x5e9e;
const QUAD_REL_TOL: f64 = 1e-6;

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

fn ones(n: usize) -> Vec<BigInt> {
    vec![BigInt::from(1); n]
}

fn fan_class(spec: &MonomialIdealSpec) -> newton_segre::Result<ClassExpr> {
    Ok(compute_segre(spec, &SegreOptions::default())?.class)
}

fn h_term(coeff: i64, power: u32, factors: &[i64]) -> ClassTerm {
    ClassTerm::new(
        Rational::from_integer(coeff.into()),
        vec![power],
        factors.iter().map(|&c| vec![Rational::from_integer(c.into())]).collect(),
    )
}

/// Multiset equality of rendered terms.
fn same_terms(mut a: Vec<String>, mut b: Vec<String>) -> bool {
    a.sort();
    b.sort();
    a == b
}

fn h_names() -> Vec<String> {
    vec!["H".into()]
}

/// Specs exercised by criteria 4-8, collected for the tiling criterion.
#[derive(Default)]
struct Corpus {
    specs: Vec<(String, MonomialIdealSpec, Vec<Engine>)>,
}

impl Corpus {
    fn add(&mut self, tag: &str, spec: &MonomialIdealSpec, engines: &[Engine]) {
        self.specs.push((tag.to_string(), spec.clone(), engines.to_vec()));
    }
}

fn criterion_1() -> Outcome {
    let out = match compute_segre(
        &PLANE.spec(),
        &SegreOptions {
            degrees: Some(ones(2)),
            ambient_dim: Some(5),
            ..Default::default()
        },
    ) {
        Ok(o) => o,
        Err(e) => return fail(e.to_string()),
    };
    let series = out.specialized.as_ref().map(|h| h.to_string()).unwrap_or_default();
    let closed = out.specialized_closed_form.as_ref().map(|c| c.to_string()).unwrap_or_default();
    let want_series = "2H + 18H^2 - 334H^3 + 3714H^4 - 35278H^5";
    let want_closed = "2H(1 + 30H + 168H^2) / ((1 + 6H)(1 + 7H)(1 + 8H))";
    let expected: Vec<Rational> = PLANE.series.iter().map(|&c| Rational::from_integer(c.into())).collect();
    let coeffs_ok = out.specialized.as_ref().is_some_and(|h| h.coeffs() == expected.as_slice());
    if series == want_series && closed == want_closed && coeffs_ok {
        pass(format!("{series}; {closed}"))
    } else {
        fail(format!("got {series}; {closed}"))
    }
}

fn criterion_2() -> Outcome {
    let out = match compute_segre(
        &PLANE.spec(),
        &SegreOptions {
            degrees: Some(ones(2)),
            ambient_dim: Some(5),
            ..Default::default()
        },
    ) {
        Ok(o) => o,
        Err(e) => return fail(e.to_string()),
    };
    let got: Vec<String> = out
        .specialized_cell_terms()
        .unwrap_or_default()
        .iter()
        .map(|t| t.render(&h_names()))
        .collect();
    let want: Vec<String> = [
        h_term(2, 1, &[8]),
        h_term(10, 2, &[8, 7]),
        h_term(17, 2, &[7, 6]),
        h_term(7, 2, &[6, 7]),
    ]
    .iter()
    .map(|t| t.render(&h_names()))
    .collect();
    if same_terms(got.clone(), want) {
        pass(got.join(" + "))
    } else {
        fail(format!("got {}", got.join(" + ")))
    }
}

fn criterion_3() -> Outcome {
    let spec = THREELINES.spec();
    let out = match compute_segre(
        &spec,
        &SegreOptions {
            degrees: Some(ones(3)),
            ambient_dim: Some(3),
            ..Default::default()
        },
    ) {
        Ok(o) => o,
        Err(e) => return fail(e.to_string()),
    };
    let series = out.specialized.as_ref().map(|h| h.to_string()).unwrap_or_default();
    let got: Vec<String> = out
        .specialized_cell_terms()
        .unwrap_or_default()
        .iter()
        .map(|t| t.render(&h_names()))
        .collect();
    let want: Vec<String> = [
        h_term(1, 2, &[2, 2]),
        h_term(1, 2, &[2, 2]),
        h_term(1, 2, &[2, 2]),
        h_term(2, 3, &[2, 2, 2]),
    ]
    .iter()
    .map(|t| t.render(&h_names()))
    .collect();
    let x = match compute_segre(
        &spec,
        &SegreOptions {
            excess_degrees: Some(vec![BigInt::from(2); 3]),
            ..Default::default()
        },
    ) {
        Ok(o) => o.excess,
        Err(e) => return fail(e.to_string()),
    };
    let eq8 = x.as_ref().is_some_and(|x| x.equivalence == Rational::from_integer(8.into()));
    if series == "3H^2 - 10H^3" && same_terms(got.clone(), want) && eq8 {
        pass(format!("{series}; cells {}; equivalence 8", got.join(" + ")))
    } else {
        fail(format!("got {series}; cells {}; excess {x:?}", got.join(" + ")))
    }
}

fn criterion_4(corpus: &mut Corpus) -> Outcome {
    let mut rng = common::rng(SEED ^ 4);
    for i in 0..50 {
        let n = rng.gen_range(1..=4);
        let e = common::random_exponent(&mut rng, n, 9);
        let spec = MonomialIdealSpec::new(n, vec![ExponentVector::from_u64s(&e)]).expect("valid");
        corpus.add(&format!("principal #{i}"), &spec, &[Engine::Fan]);
        let got = match fan_class(&spec) {
            Ok(c) => c,
            Err(err) => return fail(format!("{e:?}: {err}")),
        };
        let want = principal_class(&spec.generators()[0]);
        match got.certify_equal(&want, SEED) {
            Ok(true) => {}
            Ok(false) => return fail(format!("{e:?}: {got} vs {want}")),
            Err(err) => return fail(format!("{e:?}: {err}")),
        }
    }
    pass("50 principal ideals, n <= 4, entries <= 9")
}

fn criterion_5(corpus: &mut Corpus) -> Outcome {
    let mut count = 0;
    for n in 1..=4usize {
        for code in 0..3usize.pow(n as u32) {
            let m: Vec<u64> = (0..n).map(|j| (code / 3usize.pow(j as u32) % 3 + 1) as u64).collect();
            let gens = (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[j] = m[j];
                    ExponentVector::from_u64s(&e)
                })
                .collect();
            let spec = MonomialIdealSpec::new(n, gens).expect("valid");
            corpus.add(&format!("complete intersection {m:?}"), &spec, &[Engine::Fan]);
            let mb: Vec<BigInt> = m.iter().map(|&x| x.into()).collect();
            let ok = fan_class(&spec)
                .and_then(|got| got.certify_equal(&complete_intersection_class(&mb)?, SEED));
            match ok {
                Ok(true) => count += 1,
                Ok(false) => return fail(format!("m = {m:?} differs")),
                Err(e) => return fail(format!("m = {m:?}: {e}")),
            }
        }
    }
    pass(format!("{count} complete intersections, m in {{1,2,3}}^n, n <= 4"))
}

fn criterion_6(corpus: &mut Corpus) -> Outcome {
    for n in 2..=5 {
        let spec = singularity_family_spec(n);
        corpus.add(&format!("singularity family n={n}"), &spec, &[Engine::Fan]);
        let ok = fan_class(&spec).and_then(|got| got.certify_equal(&singularity_family_class(n)?, SEED));
        match ok {
            Ok(true) => {}
            Ok(false) => return fail(format!("n = {n} differs")),
            Err(e) => return fail(format!("n = {n}: {e}")),
        }
    }
    pass("n = 2, 3, 4, 5")
}

fn criterion_7(corpus: &mut Corpus) -> Outcome {
    let mut rng = common::rng(SEED ^ 7);
    for i in 0..20 {
        let spec = common::random_spec(&mut rng, 2, 6, 12);
        corpus.add(&format!("two-variable #{i}"), &spec, &[Engine::Fan, Engine::Staircase]);
        let stair = compute_segre(
            &spec,
            &SegreOptions {
                engine: Engine::Staircase,
                ..Default::default()
            },
        );
        let ok = fan_class(&spec).and_then(|f| f.certify_equal(&stair?.class, SEED ^ i));
        match ok {
            Ok(true) => {}
            Ok(false) => return fail(format!("{} differs", spec.to_ideal_string())),
            Err(e) => return fail(format!("{}: {e}", spec.to_ideal_string())),
        }
    }
    pass("20 random two-variable ideals, fan = staircase")
}

/// Everything in the compute JSON except the generator lists.
fn comparable(spec: &MonomialIdealSpec) -> newton_segre::Result<String> {
    let out = compute_segre(
        spec,
        &SegreOptions {
            degrees: Some(ones(spec.n())),
            ..Default::default()
        },
    )?;
    let mut v = cli::output_json(&out);
    let map = v.as_object_mut().expect("object");
    map.remove("ideal");
    map.remove("generators");
    Ok(v.to_string())
}

fn criterion_8(corpus: &mut Corpus) -> Outcome {
    let mut rng = common::rng(SEED ^ 8);
    for i in 0..20 {
        let n = rng.gen_range(2..=4);
        let spec = common::random_spec(&mut rng, n, 5, 6);
        let mut gens = spec.generators().to_vec();
        for _ in 0..3 {
            let base = gens[rng.gen_range(0..spec.generators().len())].clone();
            let bumped: Vec<BigInt> = base
                .entries()
                .iter()
                .map(|e| e + BigInt::from(rng.gen_range(0..=3u32)))
                .collect();
            gens.push(ExponentVector::new(bumped).expect("nonnegative"));
        }
        let bigger = MonomialIdealSpec::new(n, gens).expect("valid");
        corpus.add(&format!("dominated #{i}"), &spec, &[Engine::Fan]);
        corpus.add(&format!("dominated #{i} + 3"), &bigger, &[Engine::Fan]);
        match (comparable(&spec), comparable(&bigger)) {
            (Ok(a), Ok(b)) if a == b => {}
            (Ok(_), Ok(_)) => return fail(format!("{} changed", spec.to_ideal_string())),
            (Err(e), _) | (_, Err(e)) => return fail(e.to_string()),
        }
    }
    pass("20 random ideals with 3 dominated generators added")
}

fn criterion_9() -> Outcome {
    let mut rng = common::rng(SEED ^ 9);
    let d = 6;
    for _ in 0..10 {
        let base = common::random_spec(&mut rng, 2, 5, 6);
        let m: u64 = rng.gen_range(1..=5);
        let mut gens: Vec<ExponentVector> = base
            .generators()
            .iter()
            .map(|g| {
                let mut e = g.entries().to_vec();
                e.push(BigInt::from(0));
                ExponentVector::new(e).expect("nonnegative")
            })
            .collect();
        gens.push(ExponentVector::from_u64s(&[0, 0, m]));
        let lifted = MonomialIdealSpec::new(3, gens).expect("valid");
        let mq = Rational::from_integer(m.into());
        let factor = ClassExpr::from_terms(
            3,
            vec![ClassTerm::new(
                mq.clone(),
                vec![0, 0, 1],
                vec![vec![Rational::from_integer(0.into()), Rational::from_integer(0.into()), mq]],
            )],
        )
        .expect("three variables");
        let result = (|| {
            let s3 = to_series(&fan_class(&lifted)?, d);
            let s2 = to_series(&fan_class(&base)?.extend_vars(1), d);
            let prod = s2.mul(&to_series(&factor, d))?;
            Ok::<_, newton_segre::Error>(s3 == prod)
        })();
        match result {
            Ok(true) => {}
            Ok(false) => return fail(format!("{} with x3^{m} differs", base.to_ideal_string())),
            Err(e) => return fail(e.to_string()),
        }
    }
    pass("10 random two-variable ideals with x3^m, to degree 6")
}

fn criterion_10() -> Outcome {
    let mut rng = common::rng(SEED ^ 10);
    let mut worst = 0.0f64;
    let mut evaluations = 0;
    for fx in [&PLANE, &THREELINES, &FATPOINT] {
        let out = match compute_segre(&fx.spec(), &SegreOptions::default()) {
            Ok(o) => o,
            Err(e) => return fail(e.to_string()),
        };
        for cell in out.cells.effective() {
            let term = match cell_integral(cell) {
                Ok(t) => t,
                Err(e) => return fail(e.to_string()),
            };
            for _ in 0..5 {
                let p = common::small_point(&mut rng, cell.n());
                let exact = term.evaluate(&p).expect("positive point").to_f64().expect("finite");
                let pf: Vec<f64> = p.iter().map(|x| x.to_f64().expect("finite")).collect();
                let numeric = match quadrature_cell(cell, &pf, QUAD_REL_TOL / 10.0) {
                    Ok(r) => r.value,
                    Err(e) => return fail(format!("{}: {cell}: {e}", fx.name)),
                };
                worst = worst.max(((numeric - exact) / exact).abs());
                evaluations += 1;
            }
        }
    }
    let detail = format!("{evaluations} cell evaluations, max relative error {worst:.2e} (tolerance 1e-6)");
    if worst < QUAD_REL_TOL {
        pass(detail)
    } else {
        fail(detail)
    }
}

fn criterion_11(corpus: &Corpus) -> Outcome {
    let step = Rational::new(1.into(), 4.into());
    let opts = TilingOptions {
        grid_step: step,
        ..TilingOptions::default()
    };
    let mut all: Vec<(String, MonomialIdealSpec, Vec<Engine>)> = [&PLANE, &THREELINES, &FATPOINT]
        .iter()
        .map(|f| {
            let engines = if f.spec().n() == 2 {
                vec![Engine::Fan, Engine::Staircase]
            } else {
                vec![Engine::Fan]
            };
            (f.name.to_string(), f.spec(), engines)
        })
        .collect();
    all.extend(corpus.specs.iter().cloned());
    let mut checked = 0;
    let mut sampled = 0;
    for (tag, spec, engines) in &all {
        for &engine in engines {
            let out = match compute_segre(
                spec,
                &SegreOptions {
                    engine,
                    ..Default::default()
                },
            ) {
                Ok(o) => o,
                Err(e) => return fail(format!("{tag}: {e}")),
            };
            let Some(poly) = &out.polyhedron else { continue };
            match validate_tiling_with(&out.cells, poly, &opts) {
                Ok(r) if r.is_ok() => {
                    checked += 1;
                    sampled += usize::from(r.sampled);
                }
                Ok(r) => return fail(format!("{tag} ({engine}): {} violations", r.violation_count)),
                Err(e) => return fail(format!("{tag}: {e}")),
            }
        }
    }
    pass(format!(
        "{checked} decompositions at grid step 1/4, 0 violations ({sampled} on a sampled grid)"
    ))
}

fn main() {
    let limits: [Option<u64>; 11] = [
        Some(1),
        None,
        Some(1),
        Some(5),
        Some(10),
        Some(30),
        Some(30),
        Some(10),
        None,
        Some(60),
        None,
    ];
    let mut corpus = Corpus::default();
    let mut failures = 0;
    for (i, limit) in limits.iter().enumerate() {
        let start = Instant::now();
        let outcome = match i + 1 {
            1 => criterion_1(),
            2 => criterion_2(),
            3 => criterion_3(),
            4 => criterion_4(&mut corpus),
            5 => criterion_5(&mut corpus),
            6 => criterion_6(&mut corpus),
            7 => criterion_7(&mut corpus),
            8 => criterion_8(&mut corpus),
            9 => criterion_9(),
            10 => criterion_10(),
            _ => criterion_11(&corpus),
        };
        let elapsed = start.elapsed();
        let in_time = limit.is_none_or(|s| elapsed < Duration::from_secs(s));
        let ok = outcome.ok && in_time;
        let budget = limit.map_or(String::new(), |s| format!(" / limit {s}s"));
        let late = if in_time { "" } else { " TIME LIMIT EXCEEDED" };
        println!(
            "{} criterion {:>2}: {} [{:.2}s{budget}]{late}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            outcome.detail,
            elapsed.as_secs_f64()
        );
        if !ok {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
}
