use num_traits::One;
use trihom::constructions::{trihomological_triplet, veronese_report};
use trihom::correspondence::{Correspondence, Mode};
use trihom::explorer::{
    gen_common_axis_family, gen_common_center_family, gen_pairwise_perspective_family,
    gen_perspective_pair, gen_point_pair, gen_triangle, trial_rng,
};
use trihom::kernel::{
    collinear, concurrent, incident, join, ProjLine, ProjMap, ProjPoint, Triangle,
};
use trihom::perspectivity::{
    homology_report, homology_report_with, is_trihomological, perspective_axis, perspector,
    theorem1_check, theorem2_check, theorem3_check, violation_count,
};
use trihom::ratios::{bihomology_criterion, grand_product, nine_intersections};

const BOUND: i64 = 50;

fn random_map(seed: u64) -> ProjMap {
    use rand::Rng;
    let mut rng = trial_rng(seed, 9_999);
    loop {
        let m = [0; 3].map(|_| [0; 3].map(|_| rng.random_range(-9i64..=9)));
        if let Ok(t) = ProjMap::from_ints(m) {
            return t;
        }
    }
}

#[test]
fn desargues_holds_in_every_correspondence() {
    for i in 0..150 {
        let mut rng = trial_rng(17, i);
        let (t1, t2) = if i % 2 == 0 {
            gen_perspective_pair(&mut rng, BOUND).unwrap()
        } else {
            (
                gen_triangle(&mut rng, BOUND).unwrap(),
                gen_triangle(&mut rng, BOUND).unwrap(),
            )
        };
        for c in Correspondence::ALL {
            let (Ok(o), Ok(d)) = (perspector(&t1, &t2, c), perspective_axis(&t1, &t2, c)) else {
                continue;
            };
            assert_eq!(o.is_some(), d.is_some(), "trial {i}, {}", c.label());
        }
        let r = homology_report_with(&t1, &t2, true);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }
}

#[test]
fn grand_product_is_one_and_criterion_matches_concurrency() {
    let (mut checked, mut perspective) = (0, 0);
    for i in 0..200 {
        let mut rng = trial_rng(23, i);
        let (t1, t2) = if i % 2 == 0 {
            gen_perspective_pair(&mut rng, BOUND).unwrap()
        } else {
            (
                gen_triangle(&mut rng, BOUND).unwrap(),
                gen_triangle(&mut rng, BOUND).unwrap(),
            )
        };
        let Ok(n) = nine_intersections(&t1, &t2) else {
            continue;
        };
        assert!(grand_product(&n, &t1).unwrap().is_one());
        let l = |j: usize| join(t1.vertex(j), t2.vertex(j)).unwrap();
        let oracle = concurrent(&l(0), &l(1), &l(2));
        assert_eq!(bihomology_criterion(&t1, &t2).unwrap(), oracle);
        checked += 1;
        perspective += oracle as usize;
    }
    assert!(checked > 150);
    assert!(perspective > 50);
}

#[test]
fn triplets_have_collinear_third_centers() {
    for i in 0..60 {
        let mut rng = trial_rng(31, i);
        let abc = gen_triangle(&mut rng, BOUND).unwrap();
        let (p, q) = gen_point_pair(&mut rng, BOUND, &abc).unwrap();
        let Ok(t) = trihomological_triplet(&abc, &p, &q) else {
            continue;
        };
        assert!(collinear(&t.r, &t.r1, &t.r2));
        assert!(is_trihomological(&abc, &t.t1));
        assert!(is_trihomological(&abc, &t.t2));
        assert!(is_trihomological(&t.t1, &t.t2));
    }
}

#[test]
fn veronese_triangle_shares_the_axis() {
    for i in 0..60 {
        let mut rng = trial_rng(37, i);
        let (t1, t2) = gen_perspective_pair(&mut rng, BOUND).unwrap();
        let Ok(v) = veronese_report(&t1, &t2) else {
            continue;
        };
        let [a, b, c] = &v.centers;
        assert!(collinear(a, b, c));
        for (x, y) in [(&t1, &v.t3), (&t2, &v.t3)] {
            let r = homology_report(x, y);
            assert!(r.mode(Mode::P).is_perspective());
            assert_eq!(r.mode(Mode::P).axis.as_ref(), Some(&v.axis));
        }
    }
}

#[test]
fn family_checkers_agree_with_generators() {
    let o = ProjPoint::new(1, 1, 1).unwrap();
    let d = ProjLine::new(1, 1, 1).unwrap();
    for i in 0..40 {
        let mut rng = trial_rng(41, i);
        let [a, b, c] = gen_common_center_family(&mut rng, BOUND, &o).unwrap();
        let x = theorem1_check(&a, &b, &c).unwrap();
        for (s, t) in [(&a, &b), (&a, &c), (&b, &c)] {
            let axis = perspective_axis(s, t, Mode::P.correspondence())
                .unwrap()
                .unwrap();
            assert!(incident(&x, &axis));
        }
        let [a, b, c] = gen_common_axis_family(&mut rng, BOUND, &d).unwrap();
        let l = theorem2_check(&a, &b, &c).unwrap();
        let centers: Vec<ProjPoint> = [(&a, &b), (&a, &c), (&b, &c)]
            .iter()
            .map(|(s, t)| perspector(s, t, Mode::P.correspondence()).unwrap().unwrap())
            .collect();
        assert!(centers.iter().all(|p| incident(p, &l)));
        let [a, b, c] = gen_pairwise_perspective_family(&mut rng, BOUND).unwrap();
        let axis = theorem3_check(&a, &b, &c).unwrap();
        for (s, t) in [(&a, &b), (&a, &c), (&b, &c)] {
            assert_eq!(
                perspective_axis(s, t, Mode::P.correspondence())
                    .unwrap()
                    .as_ref(),
                Some(&axis)
            );
        }
    }
}

#[test]
fn constructions_commute_with_projective_maps() {
    for i in 0..30 {
        let mut rng = trial_rng(43, i);
        let map = random_map(i);
        let abc = gen_triangle(&mut rng, BOUND).unwrap();
        let (p, q) = gen_point_pair(&mut rng, BOUND, &abc).unwrap();
        let Ok(t) = trihomological_triplet(&abc, &p, &q) else {
            continue;
        };
        let image = |x: &Triangle| map.apply_triangle(x);
        let u = trihomological_triplet(&image(&abc), &map.apply_point(&p), &map.apply_point(&q))
            .unwrap();
        assert_eq!(u.t1, image(&t.t1));
        assert_eq!(u.t2, image(&t.t2));
        assert_eq!(u.r, map.apply_point(&t.r));
        assert_eq!(u.centers_line, map.apply_line(&t.centers_line));
        let r = homology_report(&abc, &t.t1);
        let s = homology_report(&image(&abc), &image(&t.t1));
        for m in Mode::ALL {
            assert_eq!(
                s.center(m).cloned(),
                r.center(m).map(|c| map.apply_point(c))
            );
        }
    }
}

#[test]
fn no_pair_is_perspective_in_exactly_two_cyclic_modes() {
    for i in 0..100 {
        let mut rng = trial_rng(47, i);
        let (t1, t2) = gen_perspective_pair(&mut rng, BOUND).unwrap();
        assert_ne!(homology_report(&t1, &t2).perspective_modes().len(), 2);
    }
    assert_eq!(violation_count(), 0);
}
