use num_traits::Zero;

use crate::geometry::{saturate, LatticeSet};
use crate::hrep::{build_table2_pair, certify_cclass, Table2Config};
use crate::legendre::{polar_biconjugate, polar_z};

use super::CheckReport;

fn sat(s: &LatticeSet) -> LatticeSet {
    if s.is_empty() {
        return s.clone();
    }
    saturate(s.points(), s.dim()).expect("non-empty set of one dimension")
}

/// `K ⊆ L` implies `conv(K) ∩ Z^n ⊆ conv(L) ∩ Z^n`.
pub fn check_hull_monotone(k: &LatticeSet, l: &LatticeSet) -> CheckReport {
    const NAME: &str = "hull_monotone";
    if !k.is_subset(l) {
        return CheckReport::inapplicable(NAME, "K is not contained in L");
    }
    let (sk, sl) = (sat(k), sat(l));
    if sk.is_subset(&sl) {
        CheckReport::holds(
            NAME,
            format!("#conv(K)={} <= #conv(L)={}", sk.len(), sl.len()),
        )
    } else {
        CheckReport::fails(
            NAME,
            "saturation of K escapes saturation of L",
            vec![
                ("K", k.clone()),
                ("L", l.clone()),
                ("conv(K)", sk),
                ("conv(L)", sl),
            ],
        )
    }
}

/// `conv{(conv K ∩ Z^n) ∪ (conv L ∩ Z^n)} ∩ Z^n = conv(K ∪ L) ∩ Z^n`.
pub fn check_union_lemma(k: &LatticeSet, l: &LatticeSet) -> CheckReport {
    const NAME: &str = "union_lemma";
    if k.dim() != l.dim() {
        return CheckReport::inapplicable(NAME, "dimensions differ");
    }
    let left = sat(&sat(k).union(&sat(l)));
    let right = sat(&k.union(l));
    if left == right {
        CheckReport::holds(NAME, format!("both sides have {} points", left.len()))
    } else {
        CheckReport::fails(
            NAME,
            "the two saturations differ",
            vec![
                ("K", k.clone()),
                ("L", l.clone()),
                ("left", left),
                ("right", right),
            ],
        )
    }
}

/// `(K*)* = K`, with the outer polar taken through biconjugation.
pub fn check_self_dual(k: &LatticeSet) -> CheckReport {
    const NAME: &str = "self_dual";
    let inner = match polar_z(k) {
        Ok(r) => r,
        Err(e) => return CheckReport::inapplicable(NAME, format!("inner polar: {e}")),
    };
    let outer = match polar_biconjugate(&inner.k_z_star) {
        Ok(r) => r,
        Err(e) => return CheckReport::inapplicable(NAME, format!("outer polar: {e}")),
    };
    if outer.k_z_star == *k {
        CheckReport::holds(NAME, format!("#K={} #K*={}", k.len(), inner.k_z_star.len()))
    } else {
        CheckReport::fails(
            NAME,
            "double polar differs from K",
            vec![
                ("K", k.clone()),
                ("K*", inner.k_z_star),
                ("(K*)*", outer.k_z_star),
            ],
        )
    }
}

fn certified_pair(name: &'static str, k: &LatticeSet, l: &LatticeSet) -> Option<CheckReport> {
    for (label, s) in [("K", k), ("L", l)] {
        if let Err(e) = certify_cclass(s) {
            return Some(CheckReport::inapplicable(name, format!("{label}: {e}")));
        }
    }
    None
}

/// `K ⊆ L` implies `L* ⊆ K*` for members of the C-class.
pub fn check_inclusion_reversal(k: &LatticeSet, l: &LatticeSet) -> CheckReport {
    const NAME: &str = "inclusion_reversal";
    if let Some(r) = certified_pair(NAME, k, l) {
        return r;
    }
    if !k.is_subset(l) {
        return CheckReport::inapplicable(NAME, "K is not contained in L");
    }
    let (ks, ls) = match (polar_z(k), polar_z(l)) {
        (Ok(a), Ok(b)) => (a.k_z_star, b.k_z_star),
        (Err(e), _) | (_, Err(e)) => return CheckReport::inapplicable(NAME, e.to_string()),
    };
    if ls.is_subset(&ks) {
        CheckReport::holds(NAME, format!("#L*={} <= #K*={}", ls.len(), ks.len()))
    } else {
        CheckReport::fails(
            NAME,
            "L* is not contained in K*",
            vec![("K", k.clone()), ("L", l.clone()), ("K*", ks), ("L*", ls)],
        )
    }
}

/// `(K ∩ L)* = conv(K* ∪ L*) ∩ Z^n`.
pub fn check_intersection_identity(k: &LatticeSet, l: &LatticeSet) -> CheckReport {
    const NAME: &str = "intersection_identity";
    if let Some(r) = certified_pair(NAME, k, l) {
        return r;
    }
    let meet = k.intersection(l);
    if meet.is_empty() {
        return CheckReport::inapplicable(NAME, "K and L are disjoint");
    }
    let left = match polar_z(&meet) {
        Ok(r) => r.k_z_star,
        Err(e) => return CheckReport::inapplicable(NAME, format!("K ∩ L: {e}")),
    };
    let (ks, ls) = match (polar_z(k), polar_z(l)) {
        (Ok(a), Ok(b)) => (a.k_z_star, b.k_z_star),
        (Err(e), _) | (_, Err(e)) => return CheckReport::inapplicable(NAME, e.to_string()),
    };
    let right = sat(&ks.union(&ls));
    if left == right {
        CheckReport::holds(NAME, format!("both sides have {} points", left.len()))
    } else {
        CheckReport::fails(
            NAME,
            "(K ∩ L)* differs from conv(K* ∪ L*)",
            vec![
                ("K", k.clone()),
                ("L", l.clone()),
                ("K ∩ L", meet),
                ("(K ∩ L)*", left),
                ("conv(K* ∪ L*)", right),
            ],
        )
    }
}

/// `(K ∪ L)* = K* ∩ L*` for nested members of the C-class.
pub fn check_union_identity(k: &LatticeSet, l: &LatticeSet) -> CheckReport {
    const NAME: &str = "union_identity";
    if let Some(r) = certified_pair(NAME, k, l) {
        return r;
    }
    if !k.is_subset(l) && !l.is_subset(k) {
        return CheckReport::inapplicable(NAME, "K and L are not nested");
    }
    let join = sat(&k.union(l));
    let left = match polar_z(&join) {
        Ok(r) => r.k_z_star,
        Err(e) => return CheckReport::inapplicable(NAME, format!("K ∪ L: {e}")),
    };
    let (ks, ls) = match (polar_z(k), polar_z(l)) {
        (Ok(a), Ok(b)) => (a.k_z_star, b.k_z_star),
        (Err(e), _) | (_, Err(e)) => return CheckReport::inapplicable(NAME, e.to_string()),
    };
    let right = ks.intersection(&ls);
    if left == right {
        CheckReport::holds(NAME, format!("both sides have {} points", left.len()))
    } else {
        CheckReport::fails(
            NAME,
            "(K ∪ L)* differs from K* ∩ L*",
            vec![
                ("K", k.clone()),
                ("L", l.clone()),
                ("(K ∪ L)*", left),
                ("K* ∩ L*", right),
            ],
        )
    }
}

/// Facets of `conv(K ∪ L)` that are facets of neither `conv(K)` nor `conv(L)`
/// are parallel to the `x_n`-axis.
pub fn check_facets_parallel(cfg: &Table2Config) -> CheckReport {
    const NAME: &str = "facets_parallel";
    let (k, l) = match build_table2_pair(cfg) {
        Ok(p) => p,
        Err(e) => return CheckReport::inapplicable(NAME, format!("Table-2 pair: {e}")),
    };
    if k.is_subset(&l) || l.is_subset(&k) {
        return CheckReport::inapplicable(NAME, "one set contains the other");
    }
    let n = cfg.dim;
    let hull = |s: &LatticeSet| s.hull().expect("certified sets are non-empty");
    let (hk, hl) = (hull(&k), hull(&l));
    let join = k.union(&l);
    let hj = hull(&join);
    let mut fresh = 0;
    for f in hj.facets() {
        if hk.facets().contains(f) || hl.facets().contains(f) {
            continue;
        }
        fresh += 1;
        if !f.normal[n - 1].is_zero() {
            let normal: Vec<String> = f.normal.iter().map(ToString::to_string).collect();
            return CheckReport::fails(
                NAME,
                format!(
                    "new facet with normal ({}) is not vertical",
                    normal.join(",")
                ),
                vec![("K", k), ("L", l)],
            );
        }
    }
    CheckReport::holds(NAME, format!("{fresh} new facets, all vertical"))
}
