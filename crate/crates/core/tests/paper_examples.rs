use latpolar::theorems::*;
use latpolar::*;

fn lp(v: [i64; 2]) -> LatticePoint {
    LatticePoint::from(v)
}

fn sorted(v: &[[i64; 2]]) -> Vec<LatticePoint> {
    let mut out: Vec<LatticePoint> = v.iter().map(|&p| lp(p)).collect();
    out.sort();
    out
}

fn sat(v: &[[i64; 2]]) -> LatticeSet {
    saturate(&sorted(v), 2).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

#[test]
fn example_one_stages() {
    let k = sat(&[[-1, 1], [0, 2], [2, 0], [0, -2]]);
    assert_eq!(k.len(), 10);
    let h = extract_graph_hrep(&k).unwrap();
    let shown: Vec<String> = h.facets.iter().map(ToString::to_string).collect();
    assert_eq!(h.facets.len(), 4, "{shown:?}");
    let r = polar_z(&k).unwrap();
    assert_eq!(
        r.k_l_vertices(),
        sorted(&[[1, -2], [-1, -2], [1, 2], [-3, 2]])
    );
    assert_eq!(r.lambda, q(1, 5));
    let expected: Vec<RationalPoint> = {
        let mut v = vec![
            RationalPoint::from(vec![(1, 5), (-2, 5)]),
            RationalPoint::from(vec![(-1, 5), (-2, 5)]),
            RationalPoint::from(vec![(1, 5), (2, 5)]),
            RationalPoint::from(vec![(-3, 5), (2, 5)]),
        ];
        v.sort();
        v
    };
    assert_eq!(r.k_q_star.vertices(), expected.as_slice());
    assert_eq!(r.k_z_star, r.k_l);
}

#[test]
fn inclusion_reversal_example() {
    let k = sat(&[[0, 3], [1, 0], [0, -3], [-1, 0]]);
    let l = sat(&[[0, 3], [2, 1], [0, -3], [-2, 1]]);
    let ks = polar_z(&k).unwrap();
    let ls = polar_z(&l).unwrap();
    assert_eq!(
        ks.k_z_star_vertices(),
        sorted(&[[3, 3], [3, -3], [-3, 3], [-3, -3]])
    );
    assert_eq!(
        ls.k_z_star_vertices(),
        sorted(&[[-1, -3], [2, 3], [-2, 3], [1, -3]])
    );
    assert!(ls.k_z_star.is_subset(&ks.k_z_star) && ls.k_z_star != ks.k_z_star);
    assert_eq!(check_inclusion_reversal(&k, &l).verdict, Verdict::Holds);
    assert_eq!(check_inclusion_reversal(&k, &k).verdict, Verdict::Holds);
    assert_eq!(check_union_identity(&k, &l).verdict, Verdict::Holds);
}

#[test]
fn intersection_identity_example() {
    let k = sat(&[[0, 3], [-1, 0], [0, -3], [2, -1]]);
    let l = sat(&[[0, 3], [-3, 0], [0, -3], [1, 0]]);
    assert_eq!(
        polar_z(&k).unwrap().k_z_star_vertices(),
        sorted(&[[3, -3], [-3, 3], [1, 3], [-2, -3]])
    );
    assert_eq!(
        polar_z(&l).unwrap().k_z_star_vertices(),
        sorted(&[[1, -3], [-1, 3], [3, 3], [-3, -3]])
    );
    let r = check_intersection_identity(&k, &l);
    assert_eq!(r.verdict, Verdict::Holds, "{r}");
}

#[test]
fn footnote_set() {
    let k1 = sat(&[[0, 6], [2, 2], [0, -2], [-2, 2]]);
    let star = polar_z(&k1).unwrap().k_z_star;
    assert_eq!(star, sat(&[[-2, -6], [2, 2], [-2, 2], [2, -6]]));
    assert_eq!(check_self_dual(&k1).verdict, Verdict::Holds);
}

#[test]
fn cross_polytope_products() {
    for n in 1..=4u32 {
        let m = mahler(&cross_polytope(n as usize)).unwrap();
        assert_eq!(m.count_k, 2 * n as usize + 1);
        assert_eq!(m.product, (2 * n as u128 + 1) * 3u128.pow(n));
    }
}

#[test]
fn rejected_inputs() {
    let square = sat(&[[1, 1], [1, -1], [-1, 1], [-1, -1]]);
    assert!(matches!(polar_z(&square), Err(Error::VerticalFacet { .. })));
    let shifted = sat(&[[0, 0], [1, 0], [0, 1]]);
    assert_eq!(polar_z(&shifted).unwrap_err(), Error::OriginNotInterior);
    let segment = sat(&[[0, -1], [0, 1]]);
    assert_eq!(polar_z(&segment).unwrap_err(), Error::NotFullDimensional);
    assert_eq!(
        Table2Config::from_ints(2, 3, -3, &[2], &[-2])
            .unwrap_err()
            .kind(),
        "InvalidConfig"
    );
}

#[test]
fn desk_scale_search_in_the_plane() {
    let r = search_min_mahler(2, 3).unwrap();
    assert_eq!(r.minimum_product, 45);
    assert!(r.minimizers.iter().any(|(k, _)| *k == cross_polytope(2)));
    assert_eq!(r.minimizers.len(), 3);
    let small = search_min_mahler(2, 1).unwrap();
    assert_eq!(small.minimum_product, 45);
    assert!(small.minimum_product >= r.minimum_product);
}
