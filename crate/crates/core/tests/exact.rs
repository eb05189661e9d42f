use genpara::exact::{eval, parse_poly, parse_ratfunc, partial, poly_gcd, rat, rf_equal, Point, Poly, RatFunc};
use genpara::Error;
use proptest::prelude::*;

fn rf(s: &str) -> RatFunc {
    parse_ratfunc(s).unwrap()
}

#[test]
fn eval_quotient() {
    let f = rf("x1^2/(1+x2)");
    assert_eq!(eval(&f, &Point::from_ints(&[3, 1])).unwrap(), rat(9, 2));
}

#[test]
fn eval_constant() {
    assert_eq!(eval(&rf("5"), &Point::from_ints(&[7, -2, 1])).unwrap(), rat(5, 1));
}

#[test]
fn eval_pole() {
    assert_eq!(eval(&rf("1/x1"), &Point::from_ints(&[0, 4])), Err(Error::PoleAtPoint));
}

#[test]
fn partial_monomial_and_constant() {
    assert_eq!(partial(&rf("x1*x2"), 0), rf("x2"));
    assert!(partial(&rf("17/3"), 2).is_zero());
}

#[test]
fn partial_quotient_rule() {
    let d = partial(&rf("x1/x2"), 1);
    assert_eq!(d, rf("-x1/x2^2"));
    // frozen values of -x1/x2^2
    for (p, v) in [([3, 2], rat(-3, 4)), ([-1, 5], rat(1, 25)), ([7, -3], rat(-7, 9))] {
        assert_eq!(eval(&d, &Point::from_ints(&p)).unwrap(), v);
    }
}

#[test]
fn equality_by_cross_multiplication() {
    assert!(rf_equal(&rf("x1/x1"), &rf("1")));
    assert!(rf_equal(&rf("(x1^2-x2^2)/(x1-x2)"), &rf("x1+x2")));
    assert!(!rf_equal(&rf("x1"), &rf("x2")));
}

#[test]
fn normalization_cancels_common_factors() {
    let f = rf("(x1^2-x2^2)/(x1-x2)");
    assert!(f.den().is_one());
    assert_eq!(f.num(), &parse_poly("x1+x2").unwrap());
    let g = rf("(x1*x3 + x2*x3)/(2*x3^2 + 2*x1*x3)");
    assert_eq!(g.to_string(), rf("(x1+x2)/(2*x3+2*x1)").to_string());
}

#[test]
fn gcd_multivariate() {
    let a = parse_poly("x1^2*x2 - 3*x3 + x4^2").unwrap();
    let b = parse_poly("x2^3 + x1*x3 - 2").unwrap();
    let c = parse_poly("x1 + 2*x2 - x3*x4 + 5").unwrap();
    let g = poly_gcd(&(&a * &c), &(&b * &c));
    assert!(g.div_exact(&c).is_some_and(|q| q.is_constant()));
}

#[test]
fn display_round_trips() {
    for s in ["x1^2/(1+x2)", "-3/4*x1*x2 + x3^4 - 2", "(x1-x2)/(x3*x4)", "0", "7/2"] {
        let f = rf(s);
        assert_eq!(rf(&f.to_string()), f, "{s} -> {f}");
    }
}

#[test]
fn parse_errors() {
    assert!(matches!(parse_ratfunc("x1 +"), Err(Error::Parse { .. })));
    assert!(matches!(parse_ratfunc("x9"), Err(Error::Parse { .. })));
    assert!(matches!(parse_ratfunc("1/0"), Err(Error::Parse { .. })));
    assert!(matches!(parse_ratfunc("(x1"), Err(Error::Parse { .. })));
}

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::array::uniform4(0u16..3), -4i64..5), 0..6).prop_map(|ts| {
        Poly::from_terms(ts.into_iter().map(|(e, c)| {
            let mut m = [0u16; 8];
            m[..4].copy_from_slice(&e);
            (m, rat(c, 1))
        }))
    })
}

fn small_rf() -> impl Strategy<Value = RatFunc> {
    (small_poly(), small_poly()).prop_map(|(n, d)| {
        let d = &d * &d + Poly::from_int(1);
        RatFunc::new(n, d)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn add_then_sub_is_identity(a in small_rf(), b in small_rf()) {
        prop_assert_eq!(&(&a + &b) - &b, a);
    }

    #[test]
    fn partials_commute(f in small_rf(), i in 0usize..4, j in 0usize..4) {
        prop_assert_eq!(f.partial(i).partial(j), f.partial(j).partial(i));
    }

    #[test]
    fn mul_div_round_trip(a in small_rf(), b in small_rf()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a);
    }

    #[test]
    fn derivative_matches_difference_quotient(f in small_rf(), i in 0usize..4,
                                              p in prop::array::uniform4(-3i64..4)) {
        // f is polynomial over a positive denominator, so no poles; compare the
        // symmetric difference quotient limit through an exact expansion:
        // (f(p+h)-f(p-h))/(2h) - f'(p) = O(h^2).
        let pt: Vec<_> = p.iter().map(|&v| rat(v, 1)).collect();
        let d = f.partial(i).eval(&pt).unwrap();
        let h1 = rat(1, 1000);
        let h2 = rat(1, 2000);
        let dq = |h: &genpara::Rational| {
            let mut a = pt.clone();
            let mut b = pt.clone();
            a[i] += h;
            b[i] -= h;
            (f.eval(&a).unwrap() - f.eval(&b).unwrap()) / (h * rat(2, 1))
        };
        let e1 = num_traits::Signed::abs(&(dq(&h1) - &d));
        let e2 = num_traits::Signed::abs(&(dq(&h2) - &d));
        // halving h should reduce the error roughly fourfold
        prop_assert!(e2 <= e1.clone() / rat(3, 1) || e1 == rat(0, 1));
    }
}
