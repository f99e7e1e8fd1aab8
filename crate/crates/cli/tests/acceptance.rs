//! Acceptance run: one PASS/FAIL line per criterion with its timing.
//!
//! Criteria listed in `KNOWN_FINDINGS` are counterexamples the code has
//! established. They still print FAIL, and the run exits nonzero only when
//! some other criterion fails or a known finding stops failing.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use latpolar::theorems::*;
use latpolar::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FINDINGS: [u32; 2] = [6, 7];
const SEED: u64 = 0;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn sat(v: &[[i64; 2]]) -> LatticeSet {
    let pts: Vec<LatticePoint> = v.iter().map(|&p| LatticePoint::from(p)).collect();
    saturate(&pts, 2).unwrap()
}

fn sorted(v: &[[i64; 2]]) -> Vec<LatticePoint> {
    let mut out: Vec<LatticePoint> = v.iter().map(|&p| LatticePoint::from(p)).collect();
    out.sort();
    out
}

fn example_one() -> Outcome {
    let k = sat(&[[-1, 1], [0, 2], [2, 0], [0, -2]]);
    let Ok(r) = polar_z(&k) else {
        return outcome(false, "pipeline rejected the set");
    };
    let mut q_star = vec![
        RationalPoint::from(vec![(1, 5), (-2, 5)]),
        RationalPoint::from(vec![(-1, 5), (-2, 5)]),
        RationalPoint::from(vec![(1, 5), (2, 5)]),
        RationalPoint::from(vec![(-3, 5), (2, 5)]),
    ];
    q_star.sort();
    let kl = sorted(&[[1, -2], [-1, -2], [1, 2], [-3, 2]]);
    let checks = [
        ("K_L vertices", r.k_l_vertices() == kl),
        (
            "lambda = 1/5",
            r.lambda == Rational::new(1.into(), 5.into()),
        ),
        ("K_Q* vertices", r.k_q_star.vertices() == q_star.as_slice()),
        ("K_Z* vertices", r.k_z_star_vertices() == kl),
    ];
    let bad: Vec<&str> = checks.iter().filter(|c| !c.1).map(|c| c.0).collect();
    outcome(
        bad.is_empty(),
        if bad.is_empty() {
            "all stages exact".into()
        } else {
            format!("mismatch: {}", bad.join(", "))
        },
    )
}

fn worked_pairs() -> Outcome {
    let k = sat(&[[0, 3], [1, 0], [0, -3], [-1, 0]]);
    let l = sat(&[[0, 3], [2, 1], [0, -3], [-2, 1]]);
    let (ks, ls) = (polar_z(&k).unwrap(), polar_z(&l).unwrap());
    let reversal = ks.k_z_star_vertices() == sorted(&[[3, 3], [3, -3], [-3, 3], [-3, -3]])
        && ls.k_z_star_vertices() == sorted(&[[-1, -3], [2, 3], [-2, 3], [1, -3]])
        && ls.k_z_star.is_subset(&ks.k_z_star)
        && ls.k_z_star != ks.k_z_star;
    let k2 = sat(&[[0, 3], [-1, 0], [0, -3], [2, -1]]);
    let l2 = sat(&[[0, 3], [-3, 0], [0, -3], [1, 0]]);
    let inter = check_intersection_identity(&k2, &l2);
    outcome(
        reversal && inter.verdict == Verdict::Holds,
        format!(
            "reversal pair {}, intersection pair {}",
            if reversal { "exact" } else { "mismatch" },
            inter.verdict
        ),
    )
}

fn footnote() -> Outcome {
    let k1 = sat(&[[0, 6], [2, 2], [0, -2], [-2, 2]]);
    let star = polar_z(&k1).map(|r| r.k_z_star);
    let exact = star.as_ref().ok() == Some(&sat(&[[-2, -6], [2, 2], [-2, 2], [2, -6]]));
    let dual = check_self_dual(&k1);
    outcome(
        exact && dual.verdict == Verdict::Holds,
        format!("polar exact: {exact}, self-dual {}", dual.verdict),
    )
}

type Tally = (usize, usize, Option<CheckReport>);
type Criterion = (
    u32,
    &'static str,
    Duration,
    Box<dyn FnOnce(&mut Vec<LatticeSet>) -> Outcome>,
);

fn tally(reports: impl IntoIterator<Item = CheckReport>) -> Tally {
    let mut total = 0;
    let mut holds = 0;
    let mut first_bad = None;
    for r in reports {
        total += 1;
        if r.verdict == Verdict::Holds {
            holds += 1;
        } else if first_bad.is_none() {
            first_bad = Some(r);
        }
    }
    (total, holds, first_bad)
}

fn summarize(parts: &[(&str, usize, Tally)]) -> Outcome {
    let mut pass = true;
    let mut detail = Vec::new();
    for (name, want, (total, holds, bad)) in parts {
        pass &= total >= want && holds == total;
        detail.push(format!("{name} {holds}/{total}"));
        if let Some(r) = bad {
            detail.push(format!(
                "first witness: {}",
                r.to_string().replace('\n', "; ")
            ));
        }
    }
    outcome(pass, detail.join(", "))
}

fn self_dual_corpus(store: &mut Vec<LatticeSet>) -> Outcome {
    let planar: Vec<LatticeSet> = corpus(SEED, 200, |s| random_cclass(2, s, 3, 4))
        .into_iter()
        .map(|(_, k)| k)
        .collect();
    let spatial: Vec<LatticeSet> = corpus(SEED, 50, |s| random_cclass(3, s, 2, 4))
        .into_iter()
        .map(|(_, k)| k)
        .collect();
    let out = summarize(&[
        ("2d", 200, tally(planar.iter().map(check_self_dual))),
        ("3d", 50, tally(spatial.iter().map(check_self_dual))),
    ]);
    store.extend(planar);
    store.extend(spatial);
    out
}

fn theorem_suites(store: &mut Vec<LatticeSet>) -> Outcome {
    let points = corpus(SEED, 200, |s| random_point_pair(2, s, 4, 12));
    let loose = corpus(SEED, 400, |s| random_point_pair(3, s, 3, 10));
    let nested = corpus(SEED, 100, |s| {
        random_cclass_pair(2, s, PairKind::Nested, 2, 4)
    });
    let crossing = corpus(SEED, 100, |s| {
        random_cclass_pair(2, s, PairKind::Crossing, 2, 4)
    });
    let out = summarize(&[
        (
            "hull_monotone",
            200,
            tally(points.iter().map(|(k, l)| check_hull_monotone(k, l))),
        ),
        (
            "union_lemma",
            200,
            tally(
                loose
                    .chunks_exact(2)
                    .map(|p| check_union_lemma(&p[0].1, &p[1].1)),
            ),
        ),
        (
            "inclusion_reversal",
            100,
            tally(nested.iter().map(|(k, l)| check_inclusion_reversal(k, l))),
        ),
        (
            "union_identity",
            100,
            tally(nested.iter().map(|(k, l)| check_union_identity(k, l))),
        ),
        (
            "intersection_identity",
            100,
            tally(
                crossing
                    .iter()
                    .map(|(k, l)| check_intersection_identity(k, l)),
            ),
        ),
    ]);
    for (k, l) in nested.into_iter().chain(crossing) {
        store.push(k);
        store.push(l);
    }
    out
}

fn facets() -> Outcome {
    let planar = corpus(SEED, 50, |s| random_table2_config(2, s, 4, 6));
    let spatial = corpus(SEED, 10, |s| random_table2_config(3, s, 4, 6));
    summarize(&[
        ("n=2", 50, tally(planar.iter().map(check_facets_parallel))),
        ("n=3", 10, tally(spatial.iter().map(check_facets_parallel))),
    ])
}

fn mahler_minimum() -> Outcome {
    let cross = cross_polytope(2);
    let plane = search_min_mahler(2, 3).unwrap();
    let plane_ok = plane.minimum_product == 45 && plane.minimizers.iter().any(|(k, _)| *k == cross);
    let space = search_min_mahler(3, 2).unwrap();
    let witness = space
        .minimizers
        .first()
        .map(|(k, _)| k.to_string())
        .unwrap_or_default();
    outcome(
        plane_ok && space.minimum_product == 189,
        format!(
            "n=2 R=3 minimum {} (cross among {} minimizers: {plane_ok}), n=3 R=2 minimum {} over {} candidates, expected 189, minimizer {witness}",
            plane.minimum_product,
            plane.minimizers.len(),
            space.minimum_product,
            space.candidates_examined
        ),
    )
}

fn cross_formula() -> Outcome {
    let mut got = Vec::new();
    let mut pass = true;
    for n in 1..=4u32 {
        let m = mahler(&cross_polytope(n as usize)).unwrap();
        pass &= m.product == (2 * n as u128 + 1) * 3u128.pow(n);
        got.push(format!("n={n}: {}", m.product));
    }
    outcome(pass, got.join(", "))
}

fn biconjugation() -> Outcome {
    let mut ok = 0;
    for seed in 0..100u64 {
        let n = 2 + (seed % 2) as usize;
        let h = random_graph_hyperplane(n, seed, 5).unwrap();
        let f = affine_on_cube(&h, 5);
        let p_box = BoxFunction::from_fn(
            h.b.iter().map(|b| b - 2).collect(),
            h.b.iter().map(|b| b + 2).collect(),
            |_| ExtInt::from(0),
        );
        let fss = conjugate_on(&f, &p_box).and_then(|fs| conjugate_on(&fs, &f));
        ok += usize::from(fss.as_ref() == Ok(&f));
    }
    outcome(ok == 100, format!("{ok}/100 reproduced"))
}

fn naive_points(p: &RationalPolytope, r: i64) -> LatticeSet {
    let n = p.dim();
    let side = (2 * r + 1) as usize;
    let pts = (0..side.pow(n as u32)).filter_map(|mut idx| {
        let c: Vec<i64> = (0..n)
            .map(|_| {
                let v = (idx % side) as i64 - r;
                idx /= side;
                v
            })
            .collect();
        let x = LatticePoint::from(c);
        p.contains(&x).then_some(x)
    });
    LatticeSet::new(n, pts).unwrap()
}

fn oracle_equivalence(store: &[LatticeSet]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut agree = 0;
    let mut tried = 0;
    while tried < 100 {
        let n = 2 + tried % 2;
        let pts: Vec<RationalPoint> = (0..n + 3)
            .map(|_| {
                let c: Vec<(i64, i64)> = (0..n)
                    .map(|_| (rng.gen_range(-12..=12), rng.gen_range(1..=3)))
                    .collect();
                RationalPoint::from(c)
            })
            .collect();
        let Ok(p) = convex_hull(&pts, n) else {
            continue;
        };
        tried += 1;
        agree += usize::from(lattice_points_in(&p) == naive_points(&p, 12));
    }
    let idem = store
        .iter()
        .filter(|k| saturate(k.points(), k.dim()).as_ref() == Ok(*k))
        .count();
    outcome(
        agree == 100 && idem == store.len() && !store.is_empty(),
        format!(
            "enumeration {agree}/100, saturate idempotent {idem}/{}",
            store.len()
        ),
    )
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_latpolar"))
        .args(args)
        .output()
        .unwrap();
    assert!(out.status.success(), "latpolar {args:?} failed");
    out.stdout
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("example.json");
    std::fs::write(
        &input,
        r#"{"dim":2,"vertices":[[-1,1],[0,2],[2,0],[0,-2]]}"#,
    )
    .unwrap();
    let input = input.to_str().unwrap();
    let plot = |name: &str| -> Vec<u8> {
        let out = dir.path().join(name);
        run_cli(&["plot", input, "--out", out.to_str().unwrap()]);
        std::fs::read(Path::new(&out)).unwrap()
    };
    let polar_same = run_cli(&["polar", input]) == run_cli(&["polar", input]);
    let plot_same = plot("a.svg") == plot("b.svg");
    outcome(
        polar_same && plot_same,
        format!("polar identical: {polar_same}, plot identical: {plot_same}"),
    )
}

fn main() {
    let mut store = Vec::new();
    let criteria: Vec<Criterion> = vec![
        (
            1,
            "example 1 pipeline",
            Duration::from_secs(1),
            Box::new(|_| example_one()),
        ),
        (
            2,
            "worked pairs",
            Duration::from_secs(2),
            Box::new(|_| worked_pairs()),
        ),
        (
            3,
            "footnote set",
            Duration::from_secs(1),
            Box::new(|_| footnote()),
        ),
        (
            4,
            "self-duality corpus",
            Duration::from_secs(60),
            Box::new(self_dual_corpus),
        ),
        (
            5,
            "theorem suites",
            Duration::from_secs(120),
            Box::new(theorem_suites),
        ),
        (
            6,
            "facet parallelism",
            Duration::from_secs(60),
            Box::new(|_| facets()),
        ),
        (
            7,
            "Mahler minimum",
            Duration::from_secs(600),
            Box::new(|_| mahler_minimum()),
        ),
        (
            8,
            "cross-polytope formula",
            Duration::from_secs(30),
            Box::new(|_| cross_formula()),
        ),
        (
            9,
            "biconjugation",
            Duration::from_secs(10),
            Box::new(|_| biconjugation()),
        ),
        (
            10,
            "oracle equivalence",
            Duration::from_secs(30),
            Box::new(|s| oracle_equivalence(s)),
        ),
        (
            11,
            "determinism",
            Duration::from_secs(30),
            Box::new(|_| determinism()),
        ),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let o = run(&mut store);
        let took = start.elapsed();
        let in_time = took <= budget;
        let pass = o.pass && in_time;
        passed += usize::from(pass);
        let known = KNOWN_FINDINGS.contains(&id);
        let tag = match (pass, known) {
            (true, false) | (false, true) => "",
            (false, false) => " (unexpected)",
            (true, true) => " (known finding no longer reproduces)",
        };
        println!(
            "criterion {id:>2} {}: {name} [{:.2}s of {}s]{tag}: {}",
            if pass { "PASS" } else { "FAIL" },
            took.as_secs_f64(),
            budget.as_secs(),
            if in_time {
                o.detail
            } else {
                format!("over budget; {}", o.detail)
            }
        );
        if pass == known {
            unexpected.push(id);
        }
    }
    println!("{passed}/11 criteria pass; known findings: {KNOWN_FINDINGS:?}");
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
