//! Acceptance criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use polyinv_core::bns::{bns_arcs, bns_member, splitting_complexity, thickness_of};
use polyinv_core::chain3m::ChainComplexData;
use polyinv_core::marked::{
    find_non_cancellation_witness, fox_marked, interval_invariant, marked_invariant, walk_polytope,
    walk_trace,
};
use polyinv_core::words::{fox_derivative, parse_word, Letter, X, Y};
use polyinv_core::{
    AbelianizationMap, BnsError, BnsReport, ChainError, Direction, FreeWord, FreeWordSum,
    GrothElement, IntegralPolytope, LatticePoint, MarkedPolytope, Presentation, Route,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WALK_RELATOR: &str = "yx^4yx^-1y^-1x^2y^-1x^-2y^2xy^-1xy^-1x^-1y^-2x^-3y^2x^-1";

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn poly(v: &[[i64; 2]]) -> IntegralPolytope {
    IntegralPolytope::from_i64(v).unwrap()
}

fn interval(a: i64, b: i64) -> IntegralPolytope {
    IntegralPolytope::hull([LatticePoint::from([a]), LatticePoint::from([b])]).unwrap()
}

fn dir(v: &[i64]) -> Direction {
    Direction::from_i64(v).unwrap()
}

fn ws(terms: &[(&str, i64)]) -> FreeWordSum {
    FreeWordSum::from_terms(terms.iter().map(|&(w, c)| (parse_word(w).unwrap(), c)))
}

fn random_word<R: Rng>(rng: &mut R, len: usize) -> FreeWord {
    let mut letters: Vec<Letter> = Vec::new();
    while letters.len() < len {
        let l = Letter::new(rng.gen_range(0..2), rng.gen_bool(0.5));
        if letters.last() != Some(&l.inv()) {
            letters.push(l);
        }
    }
    FreeWord::from_letters(letters)
}

fn random_nice<R: Rng>(rng: &mut R, max_len: usize) -> Presentation {
    loop {
        let len = 2 * rng.gen_range(1..=max_len / 2);
        let w = random_word(rng, len);
        if w.is_cyclically_reduced()
            && w.exponent_sums(2) == vec![0, 0]
            && !w.is_proper_power().unwrap()
        {
            return Presentation::from_word(w).unwrap();
        }
    }
}

fn random_polytope<R: Rng>(rng: &mut R, r: i64) -> IntegralPolytope {
    let n = rng.gen_range(1..=6);
    IntegralPolytope::hull(
        (0..n).map(|_| LatticePoint::from([rng.gen_range(-r..=r), rng.gen_range(-r..=r)])),
    )
    .unwrap()
}

fn random_direction<R: Rng>(rng: &mut R) -> Direction {
    loop {
        let (a, b) = (rng.gen_range(-100..=100), rng.gen_range(-100..=100));
        if (a, b) != (0, 0) {
            return dir(&[a, b]);
        }
    }
}

fn walk_identity() -> Outcome {
    let start = Instant::now();
    let p = Presentation::parse(WALK_RELATOR).map_err(|e| e.to_string())?;
    ensure(p.is_nice(), "relator should be nice")?;
    let s = walk_polytope(&p).map_err(|e| e.to_string())?;
    let sum = s.minkowski_sum(&IntegralPolytope::unit_cube(2)).unwrap();
    let hull = IntegralPolytope::hull(walk_trace(&p)).unwrap();
    ensure(sum == hull, format!("S + square = {sum}, walk hull = {hull}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), format!("took {elapsed:?}"))?;
    Ok(format!("S = {}, {elapsed:?}", s.canonical()))
}

fn commutator_pipeline() -> Outcome {
    let p = Presentation::parse("<x,y|xyXY>").unwrap();
    let m = marked_invariant(&p, Route::X).map_err(|e| e.to_string())?;
    let point = MarkedPolytope::fully_marked(IntegralPolytope::origin(2)).unwrap();
    ensure(m.translation_eq(&point), format!("marked invariant {m}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..20 {
        let phi = random_direction(&mut rng);
        ensure(bns_member(&p, &phi) == Ok(true), format!("not a member at {phi}"))?;
        ensure(thickness_of(&p, &phi) == Ok(0.into()), "thickness")?;
        if phi.is_primitive() {
            ensure(splitting_complexity(&p, &phi) == Ok(1.into()), "splitting complexity")?;
        }
    }
    ensure(bns_arcs(&p) == Ok(BnsReport::FullCircle), "arcs")?;
    ensure(splitting_complexity(&p, &dir(&[1, 0])) == Ok(1.into()), "c(1,0)")?;
    Ok("marked point, 20 members, full circle".into())
}

fn trefoil() -> Outcome {
    let p = Presentation::parse("xyxYXY").unwrap();
    let map = p.abelianization();
    let rx = fox_derivative(p.relator(), X);
    ensure(
        rx == ws(&[("1", 1), ("xy", 1), ("xyxYX", -1)]),
        format!("dr/dx = {rx}"),
    )?;
    let degrees: Vec<LatticePoint> = rx.terms().map(|(w, _)| map.project(w)).collect();
    let mut sorted: Vec<LatticePoint> = degrees.clone();
    sorted.sort();
    ensure(
        sorted == vec![[0].into(), [1].into(), [2].into()],
        format!("degrees {degrees:?}"),
    )?;
    let inv = interval_invariant(&p).map_err(|e| e.to_string())?;
    let rep = inv.representative.ok_or("not an interval")?;
    ensure(rep.translation_eq(&interval(0, 1)), format!("interval {rep}"))?;
    ensure(thickness_of(&p, &dir(&[1])) == Ok(1.into()), "thickness")?;
    ensure(splitting_complexity(&p, &dir(&[1])) == Ok(2.into()), "splitting complexity")?;
    Ok("interval of length 1, thickness 1, complexity 2".into())
}

fn baumslag_solitar(bin: &Path) -> Outcome {
    let p = Presentation::parse("yxYXX").unwrap();
    let inv = interval_invariant(&p).map_err(|e| e.to_string())?;
    let rep = inv.representative.ok_or("not a polytope")?;
    ensure(rep.is_point(), format!("representative {rep}"))?;
    ensure(thickness_of(&p, &dir(&[1])) == Ok(0.into()), "thickness")?;
    ensure(splitting_complexity(&p, &dir(&[1])) == Ok(1.into()), "splitting complexity")?;
    ensure(
        bns_member(&p, &dir(&[1])) == Err(BnsError::UnsupportedB1),
        "bns_member should be unsupported",
    )?;
    let out = Command::new(bin)
        .args(["bns-member", "yxYXX", "--phi", "1"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(3), format!("exit {:?}", out.status.code()))?;
    let stdout = String::from_utf8_lossy(&out.stdout);
    ensure(stdout.contains("\"error\":\"unsupported_b1\""), stdout.to_string())?;
    Ok("point, thickness 0, complexity 1, exit 3".into())
}

fn grothendieck_vectors() -> Outcome {
    let t = GrothElement::new(interval(0, 0), interval(0, 1)).unwrap();
    ensure(t.thickness(&dir(&[1])) == Ok((-1).into()), "thickness of P(<t>)")?;
    ensure(t.is_polytope() == Ok(false), "P(<t>) is not a polytope")?;
    let neg = t.neg().as_polytope().unwrap().ok_or("negation is not a polytope")?;
    ensure(neg.translation_eq(&interval(0, 1)), format!("-P(<t>) = {neg}"))?;
    let id = vec![vec![BigInt::from(1)]];
    let f2 = GrothElement::fibration_scale(&t, &id, &BigInt::from(-2)).unwrap();
    ensure(
        f2.g_equal(&GrothElement::from_polytope(interval(0, 2))).unwrap(),
        "chi = -2 should give an interval of length 2",
    )?;
    let f8 = GrothElement::fibration_scale(&t, &id, &BigInt::from(8)).unwrap();
    ensure(
        f8.g_equal(&GrothElement::minus_polytope(interval(0, 8))).unwrap(),
        "chi = 8 should give minus an interval of length 8",
    )?;
    let e = GrothElement::new(poly(&[[0, 0], [2, 0]]), poly(&[[0, 0], [0, 1]])).unwrap();
    ensure(e.is_polytope() == Ok(false), "E is a polytope")?;
    ensure(e.neg().is_polytope() == Ok(false), "-E is a polytope")?;
    Ok("all four vectors exact".into())
}

fn cancellation_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut failures = 0;
    let mut hits = 0;
    for k in 0..1000 {
        let p = random_polytope(&mut rng, 5);
        let q = random_polytope(&mut rng, 5);
        // Every fourth triple reuses Q so the premise actually fires.
        let r = if k % 4 == 0 {
            q.translate(&LatticePoint::from([rng.gen_range(-5..=5), rng.gen_range(-5..=5)]))
        } else {
            random_polytope(&mut rng, 5)
        };
        let pq = p.minkowski_sum(&q).unwrap();
        let pr = p.minkowski_sum(&r).unwrap();
        if pq.translation_eq(&pr) {
            hits += 1;
            if !q.translation_eq(&r) {
                failures += 1;
            }
        }
    }
    ensure(failures == 0, format!("{failures} failures"))?;
    Ok(format!("1000 triples, {hits} with equal sums, 0 failures"))
}

fn marked_non_cancellation() -> Outcome {
    let (m, n, n2) = find_non_cancellation_witness().ok_or("no witness found")?;
    ensure(n != n2, "witness summands coincide")?;
    ensure(
        m.marked_sum(&n).unwrap() == m.marked_sum(&n2).unwrap(),
        "sums differ",
    )?;
    let pinned = (
        "{(0,0)*, (0,1)}".to_string(),
        "{(0,0), (0,1)}".to_string(),
        "{(0,0), (0,1)*}".to_string(),
    );
    let found = (m.to_string(), n.to_string(), n2.to_string());
    ensure(found == pinned, format!("witness moved: {found:?}"))?;
    Ok(format!("M = {}, N = {}, N' = {}", found.0, found.1, found.2))
}

fn fox_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let xm1 = FreeWordSum::generator_minus_one(X);
    let ym1 = FreeWordSum::generator_minus_one(Y);
    for _ in 0..500 {
        let (a, b) = (rng.gen_range(0..=16), rng.gen_range(0..=16));
        let u = random_word(&mut rng, a);
        let v = random_word(&mut rng, b);
        let uv = u.mul(&v);
        for g in [X, Y] {
            let rhs = fox_derivative(&u, g).add(&fox_derivative(&v, g).left_mul_word(&u));
            ensure(fox_derivative(&uv, g) == rhs, format!("product rule at {u} * {v}"))?;
        }
        let lhs = FreeWordSum::monomial(uv.clone(), 1).sub(&FreeWordSum::one());
        let rhs = fox_derivative(&uv, X)
            .mul(&xm1)
            .add(&fox_derivative(&uv, Y).mul(&ym1));
        ensure(lhs == rhs, format!("fundamental identity at {uv}"))?;
    }
    Ok("500 words, product rule and fundamental identity".into())
}

fn route_agreement() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut report = Vec::new();
    for _ in 0..200 {
        let p = random_nice(&mut rng, 20);
        let walk = walk_polytope(&p).map_err(|e| e.to_string())?;
        match (marked_invariant(&p, Route::X), fox_marked(&p, Route::Y)) {
            (Ok(mx), Ok(my)) => {
                if !mx.polytope().translation_eq(&walk) || !mx.translation_eq(&my) {
                    report.push(format!("{p}: walk {walk}, x {mx}, y {my}"));
                }
            }
            (x, y) => report.push(format!("{p}: {x:?} / {y:?}")),
        }
    }
    ensure(report.is_empty(), report.join("; "))?;
    Ok("200 presentations, 0 discrepancies".into())
}

fn deconvolution_roundtrip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..500 {
        let p = random_polytope(&mut rng, 4);
        let marks: Vec<usize> = (0..p.vertex_count()).filter(|_| rng.gen_bool(0.5)).collect();
        let m = MarkedPolytope::new(p, marks).unwrap();
        let d = loop {
            let d = [rng.gen_range(-3..=3), rng.gen_range(-3..=3)];
            if d != [0, 0] {
                break d;
            }
        };
        let seg = MarkedPolytope::fully_marked(poly(&[[0, 0], d])).unwrap();
        let sum = m.marked_sum(&seg).unwrap();
        let back = sum.deconvolve_segment(&seg).map_err(|e| e.to_string())?;
        ensure(back == m, format!("{m} + {seg} deconvolved to {back}"))?;
    }
    Ok("500 pairs".into())
}

fn chain3m_plumbing() -> Outcome {
    let xm1 = FreeWordSum::generator_minus_one(X);
    let ym1 = FreeWordSum::generator_minus_one(Y);
    let square = ws(&[("1", 1), ("x", 1), ("y", 1), ("xy", 1)]);
    let one = FreeWordSum::one;
    let zero = FreeWordSum::zero;
    let data = |a, b, c| ChainComplexData {
        a,
        b,
        c,
        abelianization: AbelianizationMap::identity(),
    };
    let forced = data(
        [xm1.clone(), zero()],
        [[square.clone(), one()], [one(), one()]],
        [zero(), ym1.clone()],
    );
    let r = forced.thurston_from_chain(false).map_err(|e| e.to_string())?;
    ensure((r.i, r.j) == (2, 1), format!("forced index ({}, {})", r.i, r.j))?;

    let formula = data(
        [xm1.clone(), ym1.clone()],
        [[one(), one()], [one(), square.clone()]],
        [xm1.clone(), ym1.clone()],
    );
    let r = formula.thurston_from_chain(false).map_err(|e| e.to_string())?;
    let seg = GrothElement::from_polytope(poly(&[[0, 0], [1, 0]]));
    let direct = GrothElement::from_polytope(IntegralPolytope::unit_cube(2))
        .sub(&seg)
        .unwrap()
        .sub(&seg)
        .unwrap();
    ensure(r.element.g_equal(&direct).unwrap(), "formula evaluation")?;

    let inapplicable = data(
        [xm1.clone(), ym1.clone()],
        [[one(), one()], [one(), one()]],
        [zero(), zero()],
    );
    ensure(
        matches!(inapplicable.thurston_from_chain(false), Err(ChainError::Inapplicable("c"))),
        "inapplicable case",
    )?;

    let agreeing = data(
        [xm1.clone(), ym1.clone()],
        [[ym1.mul(&ym1), square.clone()], [square, xm1.mul(&xm1)]],
        [xm1, ym1],
    );
    let r = agreeing.thurston_from_chain(true).map_err(|e| e.to_string())?;
    let (evals, agree) = r.strict.ok_or("strict mode did not run")?;
    ensure(evals.len() == 4 && agree, "strict mode agreement")?;
    Ok("forced index, formula, inapplicable, strict".into())
}

fn corpus_lines(dir: &Path) -> Vec<String> {
    std::fs::read_to_string(dir.join("commands.txt"))
        .unwrap()
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .map(str::to_string)
        .collect()
}

/// Runs the whole corpus, returning stdout, exit code and any written SVG
/// per line, with the scratch directory replaced by a placeholder.
fn run_corpus(bin: &Path, dir: &Path, out: &Path) -> Vec<(String, Option<i32>, Vec<u8>)> {
    corpus_lines(dir)
        .iter()
        .map(|line| {
            let args: Vec<String> = line
                .split_whitespace()
                .map(|a| {
                    a.replace("{dir}", &dir.display().to_string())
                        .replace("{out}", &out.display().to_string())
                })
                .collect();
            let o = Command::new(bin).args(&args).output().unwrap();
            let stdout = String::from_utf8_lossy(&o.stdout).replace(&out.display().to_string(), "{out}");
            let svg = args
                .windows(2)
                .find(|w| w[0] == "--svg")
                .and_then(|w| std::fs::read(&w[1]).ok())
                .unwrap_or_default();
            (stdout, o.status.code(), svg)
        })
        .collect()
}

fn determinism(bin: &Path, suite_start: Instant) -> Outcome {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/corpus");
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let first = run_corpus(bin, &dir, a.path());
    let second = run_corpus(bin, &dir, b.path());
    for (i, (x, y)) in first.iter().zip(&second).enumerate() {
        ensure(x == y, format!("line {} differs", i + 1))?;
    }
    ensure(
        first.iter().all(|(out, _, _)| out.ends_with('\n')),
        "every invocation prints output",
    )?;
    let elapsed = suite_start.elapsed();
    ensure(elapsed < Duration::from_secs(60), format!("suite took {elapsed:?}"))?;
    Ok(format!("{} invocations byte-stable, suite {elapsed:.1?}", first.len()))
}

fn main() {
    let start = Instant::now();
    let bin = Path::new(env!("CARGO_BIN_EXE_polyinv"));
    let criteria: Vec<Criterion> = vec![
        ("1 walk hull identity", Box::new(walk_identity)),
        ("2 commutator pipeline", Box::new(commutator_pipeline)),
        ("3 trefoil interval", Box::new(trefoil)),
        ("4 BS(1,2)", Box::new(|| baumslag_solitar(bin))),
        ("5 Grothendieck vectors", Box::new(grothendieck_vectors)),
        ("6 cancellation suite", Box::new(cancellation_suite)),
        ("7 marked non-cancellation", Box::new(marked_non_cancellation)),
        ("8 Fox suite", Box::new(fox_suite)),
        ("9 route agreement", Box::new(route_agreement)),
        ("10 deconvolution roundtrip", Box::new(deconvolution_roundtrip)),
        ("11 chain3m plumbing", Box::new(chain3m_plumbing)),
        ("12 determinism", Box::new(move || determinism(bin, start))),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
