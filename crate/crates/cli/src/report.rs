//! JSON encodings of pipeline results. Integers are JSON numbers when they fit
//! in an `i64` and decimal strings otherwise; rationals are always `"p/q"`.

use latpolar::theorems::{CheckReport, SearchResult};
use latpolar::{
    vertices, GraphHyperplane, LatticePoint, LatticeSet, Mahler, PolarResult, Rational,
    RationalPoint,
};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

pub fn rational(q: &Rational) -> Value {
    json!(format!("{}/{}", q.numer(), q.denom()))
}

pub fn point(p: &LatticePoint) -> Value {
    Value::Array(p.coords().iter().map(int).collect())
}

pub fn points(ps: &[LatticePoint]) -> Value {
    Value::Array(ps.iter().map(point).collect())
}

pub fn rational_point(p: &RationalPoint) -> Value {
    Value::Array(p.coords().iter().map(rational).collect())
}

pub fn hyperplane(h: &GraphHyperplane) -> Value {
    json!({
        "b": h.b.iter().map(int).collect::<Vec<_>>(),
        "beta": int(&h.beta),
        "side": h.side.as_str(),
    })
}

pub fn lattice_set(s: &LatticeSet) -> Value {
    let v = vertices(s).map(|v| points(&v)).unwrap_or(Value::Null);
    json!({
        "count": s.len(),
        "vertices": v,
        "points": points(s.points()),
    })
}

pub fn mahler(m: &Mahler) -> Value {
    json!({
        "count_k": m.count_k,
        "count_k_star": m.count_k_star,
        "product": m.product.to_string(),
    })
}

pub fn polar(r: &PolarResult) -> Value {
    json!({
        "dim": r.k.dim(),
        "k": lattice_set(&r.k),
        "graph_hrep": r.hyperplanes.iter().map(hyperplane).collect::<Vec<_>>(),
        "k0": points(&r.k0),
        "k_l_vertices": points(&r.k_l_vertices()),
        "lambda": rational(&r.lambda),
        "k_q_star_vertices": r.k_q_star.vertices().iter().map(rational_point).collect::<Vec<_>>(),
        "k_z_star": lattice_set(&r.k_z_star),
        "mahler": mahler(&latpolar::mahler_of(r)),
    })
}

pub fn check(case: &str, r: &CheckReport) -> Value {
    let witness = r.witness.as_ref().map(|w| {
        w.iter()
            .map(|(label, s)| json!({ "label": label, "points": points(s.points()) }))
            .collect::<Vec<_>>()
    });
    json!({
        "check": r.name,
        "case": case,
        "verdict": r.verdict.as_str(),
        "detail": r.detail,
        "witness": witness,
    })
}

pub fn search(r: &SearchResult) -> Value {
    json!({
        "dim": r.dim,
        "radius": r.radius,
        "minimum_product": r.minimum_product.to_string(),
        "candidates_examined": r.candidates_examined,
        "minimizers": r.minimizers.iter().map(|(k, m)| json!({
            "points": points(k.points()),
            "mahler": mahler(m),
        })).collect::<Vec<_>>(),
    })
}

pub fn error(stage: &str, e: &anyhow::Error) -> Value {
    let kind = e
        .downcast_ref::<latpolar::Error>()
        .map(latpolar::Error::kind)
        .unwrap_or("InputError");
    json!({ "error": { "stage": stage, "kind": kind, "message": format!("{e:#}") } })
}

#[cfg(test)]
mod tests {
    use super::*;
    use latpolar::parse_rational;

    #[test]
    fn rationals_round_trip() {
        for (n, d) in [(1, 5), (-3, 5), (4, 1), (0, 1), (7, -21)] {
            let q = Rational::new(n.into(), d.into());
            let v = rational(&q);
            let back = parse_rational(v.as_str().unwrap()).unwrap();
            assert_eq!(back, q);
        }
        assert_eq!(rational(&Rational::from_integer(2.into())), json!("2/1"));
    }

    #[test]
    fn big_integers_become_strings() {
        let big: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(int(&big), json!("123456789012345678901234567890"));
        assert_eq!(int(&BigInt::from(-7)), json!(-7));
    }
}
