//! Check suites: the worked examples as fixtures plus seeded random corpora.

use clap::ValueEnum;
use latpolar::theorems::*;
use latpolar::{cross_polytope, saturate, LatticePoint, LatticeSet, Table2Config};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    SelfDual,
    Reversal,
    Intersection,
    Union,
    Facets,
    Lemmas,
    All,
}

impl Suite {
    fn parts(self) -> Vec<Suite> {
        use Suite::*;
        match self {
            All => vec![SelfDual, Reversal, Intersection, Union, Facets, Lemmas],
            s => vec![s],
        }
    }
}

const COEFF: i64 = 2;
const INTERCEPT: i64 = 4;

/// One evaluated case, labelled for the report.
pub struct Case {
    pub label: String,
    pub report: CheckReport,
}

fn planar(v: &[[i64; 2]]) -> LatticeSet {
    let pts: Vec<LatticePoint> = v.iter().map(|&p| LatticePoint::from(p)).collect();
    saturate(&pts, 2).expect("fixture points are planar")
}

fn example_one() -> LatticeSet {
    planar(&[[-1, 1], [0, 2], [2, 0], [0, -2]])
}

fn reversal_pair() -> (LatticeSet, LatticeSet) {
    (
        planar(&[[0, 3], [1, 0], [0, -3], [-1, 0]]),
        planar(&[[0, 3], [2, 1], [0, -3], [-2, 1]]),
    )
}

fn intersection_pair() -> (LatticeSet, LatticeSet) {
    (
        planar(&[[0, 3], [-1, 0], [0, -3], [2, -1]]),
        planar(&[[0, 3], [-3, 0], [0, -3], [1, 0]]),
    )
}

fn push(out: &mut Vec<Case>, label: impl Into<String>, report: CheckReport) {
    out.push(Case {
        label: label.into(),
        report,
    });
}

fn pairs(seed: u64, cases: usize, kind: PairKind) -> Vec<(LatticeSet, LatticeSet)> {
    corpus(seed, cases, |s| {
        random_cclass_pair(2, s, kind, COEFF, INTERCEPT)
    })
}

pub fn run(suite: Suite, seed: u64, cases: usize) -> Vec<Case> {
    let mut out = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::SelfDual => {
                push(&mut out, "example-1", check_self_dual(&example_one()));
                let k1 = planar(&[[0, 6], [2, 2], [0, -2], [-2, 2]]);
                push(&mut out, "footnote-k1", check_self_dual(&k1));
                for n in 1..=3 {
                    push(
                        &mut out,
                        format!("cross-{n}"),
                        check_self_dual(&cross_polytope(n)),
                    );
                }
                for (i, (_, k)) in corpus(seed, cases, |s| random_cclass(2, s, 3, INTERCEPT))
                    .into_iter()
                    .enumerate()
                {
                    push(&mut out, format!("random-2d-{i}"), check_self_dual(&k));
                }
                let spatial = cases.div_ceil(4);
                for (i, (_, k)) in corpus(seed, spatial, |s| random_cclass(3, s, COEFF, INTERCEPT))
                    .into_iter()
                    .enumerate()
                {
                    push(&mut out, format!("random-3d-{i}"), check_self_dual(&k));
                }
            }
            Suite::Reversal => {
                let (k, l) = reversal_pair();
                push(&mut out, "example", check_inclusion_reversal(&k, &l));
                push(&mut out, "equal", check_inclusion_reversal(&k, &k));
                for (i, (k, l)) in pairs(seed, cases, PairKind::Nested).iter().enumerate() {
                    push(
                        &mut out,
                        format!("nested-{i}"),
                        check_inclusion_reversal(k, l),
                    );
                }
            }
            Suite::Intersection => {
                let (k, l) = intersection_pair();
                push(&mut out, "example", check_intersection_identity(&k, &l));
                push(&mut out, "equal", check_intersection_identity(&k, &k));
                for (i, (k, l)) in pairs(seed, cases, PairKind::Crossing).iter().enumerate() {
                    push(
                        &mut out,
                        format!("crossing-{i}"),
                        check_intersection_identity(k, l),
                    );
                }
            }
            Suite::Union => {
                let (k, l) = reversal_pair();
                push(&mut out, "example", check_union_identity(&k, &l));
                push(&mut out, "equal", check_union_identity(&k, &k));
                for (i, (k, l)) in pairs(seed, cases, PairKind::Nested).iter().enumerate() {
                    push(&mut out, format!("nested-{i}"), check_union_identity(k, l));
                }
            }
            Suite::Facets => {
                let cfg = Table2Config::from_ints(2, 4, -4, &[1], &[-3]).expect("valid fixture");
                push(&mut out, "example", check_facets_parallel(&cfg));
                for (n, count) in [(2, cases), (3, cases.div_ceil(5))] {
                    for (i, cfg) in corpus(seed, count, |s| random_table2_config(n, s, 4, 6))
                        .iter()
                        .enumerate()
                    {
                        push(
                            &mut out,
                            format!("random-{n}d-{i}"),
                            check_facets_parallel(cfg),
                        );
                    }
                }
            }
            Suite::Lemmas => {
                for (i, (k, l)) in corpus(seed, cases, |s| random_point_pair(2, s, 4, 12))
                    .iter()
                    .enumerate()
                {
                    push(&mut out, format!("nested-{i}"), check_hull_monotone(k, l));
                }
                let loose = corpus(seed, 2 * cases, |s| random_point_pair(3, s, 3, 10));
                for (i, pair) in loose.chunks_exact(2).enumerate() {
                    push(
                        &mut out,
                        format!("pair-{i}"),
                        check_union_lemma(&pair[0].1, &pair[1].1),
                    );
                }
            }
            Suite::All => unreachable!("expanded by parts"),
        }
    }
    out
}
