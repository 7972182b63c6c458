use num_bigint::BigInt;
use proptest::prelude::*;
use trihom::kernel::{
    collinear, concurrent, det_points, incident, join, meet, ProjLine, ProjMap, ProjPoint, Rational,
};

fn triple() -> impl Strategy<Value = [i64; 3]> {
    prop::array::uniform3(-60i64..=60).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0))
}

fn point() -> impl Strategy<Value = ProjPoint> {
    triple().prop_map(|[x, y, z]| ProjPoint::new(x, y, z).unwrap())
}

fn line() -> impl Strategy<Value = ProjLine> {
    triple().prop_map(|[x, y, z]| ProjLine::new(x, y, z).unwrap())
}

fn map() -> impl Strategy<Value = ProjMap> {
    prop::array::uniform3(prop::array::uniform3(-9i64..=9))
        .prop_filter_map("singular", |m| ProjMap::from_ints(m).ok())
}

proptest! {
    #[test]
    fn canonical_form_is_scale_invariant(v in triple(), k in prop_oneof![-30i64..=-1, 1i64..=30]) {
        let p = ProjPoint::new(v[0], v[1], v[2]).unwrap();
        let q = ProjPoint::new(k * v[0], k * v[1], k * v[2]).unwrap();
        prop_assert_eq!(&p, &q);
        let first = p.coords().iter().find(|c| **c != BigInt::from(0)).unwrap();
        prop_assert!(*first > BigInt::from(0));
    }

    #[test]
    fn rational_scaling_is_invisible(v in triple(), n in 1i64..40, d in 1i64..40) {
        let s = Rational::new(n.into(), d.into());
        let raw = v.map(|x| Rational::from_integer(x.into()) * &s);
        prop_assert_eq!(
            ProjPoint::from_rationals(&raw).unwrap(),
            ProjPoint::new(v[0], v[1], v[2]).unwrap()
        );
    }

    #[test]
    fn join_contains_both_points(p in point(), q in point()) {
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        prop_assert!(incident(&p, &l));
        prop_assert!(incident(&q, &l));
        prop_assert_eq!(join(&q, &p).unwrap(), l);
    }

    #[test]
    fn meet_lies_on_both_lines(l in line(), m in line()) {
        prop_assume!(l != m);
        let x = meet(&l, &m).unwrap();
        prop_assert!(incident(&x, &l));
        prop_assert!(incident(&x, &m));
    }

    #[test]
    fn collinearity_matches_join(p in point(), q in point(), r in point()) {
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        prop_assert_eq!(collinear(&p, &q, &r), incident(&r, &l));
        prop_assert_eq!(collinear(&p, &q, &r), det_points(&p, &q, &r) == BigInt::from(0));
    }

    #[test]
    fn concurrency_is_dual_collinearity(l in line(), m in line(), n in line()) {
        prop_assume!(l != m);
        let x = meet(&l, &m).unwrap();
        prop_assert_eq!(concurrent(&l, &m, &n), incident(&x, &n));
    }

    #[test]
    fn maps_preserve_incidence(t in map(), p in point(), q in point()) {
        prop_assume!(p != q);
        let l = join(&p, &q).unwrap();
        let (tp, tq, tl) = (t.apply_point(&p), t.apply_point(&q), t.apply_line(&l));
        prop_assert!(incident(&tp, &tl));
        prop_assert!(incident(&tq, &tl));
        prop_assert_eq!(join(&tp, &tq).unwrap(), tl);
    }

    #[test]
    fn maps_commute_with_meet(t in map(), l in line(), m in line()) {
        prop_assume!(l != m);
        let x = meet(&l, &m).unwrap();
        prop_assert_eq!(t.apply_point(&x), meet(&t.apply_line(&l), &t.apply_line(&m)).unwrap());
    }
}

#[test]
fn zero_vectors_are_rejected() {
    assert!(ProjPoint::new(0, 0, 0).is_err());
    assert!(ProjLine::new(0, 0, 0).is_err());
}
