mod common;

use common::*;
use genpara::exact::{int, rat};
use genpara::gpx::*;
use genpara::linalg::*;
use genpara::para::*;
use genpara::{Error, QMatrix, Rational};
use num_traits::Zero;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn eta() -> QMatrix {
    standard_neutral(2)
}

fn swap34() -> QMatrix {
    qm(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]])
}

fn darboux() -> QMatrix {
    antisymmetric(4, &[(0, 2, int(1)), (1, 3, int(1))])
}

fn rand_antisym(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            m[(i, j)] = v.clone();
            m[(j, i)] = -v;
        }
    }
    m
}

fn rand_matrix(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    QMatrix::from_fn(n, n, |_, _| rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
}

fn rand_invertible(rng: &mut ChaCha8Rng, n: usize) -> QMatrix {
    loop {
        let c = rand_matrix(rng, n);
        if !c.det().is_zero() {
            return c;
        }
    }
}

fn gvec(x: &[i64], a: &[i64]) -> GenVector<Rational> {
    GenVector::new(x.iter().map(|&v| q(v)).collect(), a.iter().map(|&v| q(v)).collect())
}

#[test]
fn pairing_values() {
    let e1 = gvec(&[1, 0, 0, 0], &[0, 0, 0, 0]);
    let e1s = gvec(&[0, 0, 0, 0], &[1, 0, 0, 0]);
    assert_eq!(gen_pairing(&e1, &e1s), rat(1, 2));
    let e2 = gvec(&[0, 1, 0, 0], &[0, 0, 0, 0]);
    assert_eq!(gen_pairing(&e1, &e2), q(0));
    assert_eq!(signature(&pairing_matrix::<Rational>(4)).unwrap(), (4, 4, 0));
}

#[test]
fn pairing_on_graph_is_metric() {
    let g = qm(&[&[2, 1, 0, 0], &[1, 0, 0, 1], &[0, 0, -1, 0], &[0, 1, 0, 3]]);
    let e = GeneralizedMetric::new(&g, &QMatrix::zeros(4, 4)).unwrap();
    let x = vec![q(1), q(-2), q(3), q(0)];
    let y = vec![q(0), q(5), rat(1, 2), q(-1)];
    assert_eq!(gen_pairing(&e.lift1(&x), &e.lift1(&y)), g.form(&x, &y));
}

#[test]
fn trivial_structure_acts() {
    let k = construct_example::<Rational>(&ExampleData::Trivial(4)).unwrap();
    let a = gvec(&[1, 2, 3, 4], &[5, 6, 7, 8]);
    assert_eq!(a.apply(&k), gvec(&[1, 2, 3, 4], &[-5, -6, -7, -8]));
    assert!((&k * &k).is_identity());
    assert!(validate_gen_para(&k).all_pass());
}

#[test]
fn product_example_on_covector() {
    let k = construct_example(&ExampleData::Product(standard_para::<Rational>(2))).unwrap();
    let e3s = GenVector::<Rational>::frame(4, 6);
    assert_eq!(e3s.apply(&k), gvec(&[0, 0, 0, 0], &[-1, 0, 0, 0]));
    assert!(validate_gen_para(&k).all_pass());
}

#[test]
fn pi_example_on_covector() {
    let pi = TwoVector::<Rational>::basis(4, 0, 1).to_matrix();
    let k = construct_example(&ExampleData::Pi(pi)).unwrap();
    let e1s = GenVector::<Rational>::frame(4, 4);
    assert_eq!(e1s.apply(&k), gvec(&[0, -1, 0, 0], &[-1, 0, 0, 0]));
    assert!(validate_gen_para(&k).all_pass());
}

#[test]
fn constructor_errors() {
    let degenerate = antisymmetric(4, &[(0, 1, int(1))]);
    assert!(matches!(construct_example(&ExampleData::Omega(degenerate)), Err(Error::DegenerateOmega)));
    assert!(matches!(
        construct_example(&ExampleData::Product(QMatrix::identity(4))),
        Err(Error::NotProductStructure)
    ));
    assert!(matches!(construct_example(&ExampleData::Product(qm(&[&[0, 1], &[2, 0]]))), Err(Error::NotProductStructure)));
}

#[test]
fn omega_example_is_valid() {
    let k = construct_example(&ExampleData::Omega(darboux())).unwrap();
    assert!(validate_gen_para(&k).all_pass());
}

#[test]
fn square_minus_identity_rejected() {
    let w = darboux();
    let n = 4;
    let k = QMatrix::from_blocks(&QMatrix::zeros(n, n), &-w.transpose().inverse().unwrap(), &w.transpose(), &QMatrix::zeros(n, n));
    let r = validate_gen_para(&k);
    assert_eq!(r.passed("square_identity"), Some(false));
}

#[test]
fn symplectic_bivector_structure() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let w = rand_antisym(&mut rng, 4);
        let Ok(w_inv) = w.transpose().inverse() else { continue };
        // π(α, β) = ω(ω⁻¹α, ω⁻¹β)
        let pi = &(&w_inv.transpose() * &w) * &w_inv;
        let k = pi_structure(&pi).unwrap();
        let a = GenVector::new(
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
        );
        let wa = w_inv.apply(&a.alpha);
        let expected = GenVector::new(
            a.x.iter().zip(&wa).map(|(x, y)| x + y).collect(),
            a.alpha.iter().map(|v| -v).collect(),
        );
        assert_eq!(a.apply(&k), expected);
    }
}

#[test]
fn b_transform_laws() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..10 {
        let b = rand_antisym(&mut rng, 4);
        let a = GenVector::new(
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
        );
        let c = GenVector::new(
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
            (0..4).map(|_| q(rng.gen_range(-5..=5))).collect(),
        );
        assert_eq!(b_transform(&QMatrix::zeros(4, 4), &a), a);
        assert_eq!(b_transform(&-b.clone(), &b_transform(&b, &a)), a);
        assert_eq!(gen_pairing(&b_transform(&b, &a), &b_transform(&b, &c)), gen_pairing(&a, &c));
        assert_eq!(a.apply(&b_matrix(&b)), b_transform(&b, &a));
    }
}

#[test]
fn b_conjugation_preserves_validity_and_compatibility() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let g = eta();
    for _ in 0..8 {
        let theta = rand_antisym(&mut rng, 4);
        let b = rand_antisym(&mut rng, 4);
        let k1 = random_para(&g, 1, &mut rng).unwrap();
        let k2 = random_para(&g, -1, &mut rng).unwrap();
        let k = assemble(&g, &theta, &k1, &k2).unwrap();
        let kb = b_conjugate(&b, &k);
        assert!(validate_gen_para(&kb).all_pass());
        assert_eq!(b_conjugate(&-b.clone(), &kb), k);
        assert_eq!(b_conjugate(&QMatrix::zeros(4, 4), &k), k);
        let shifted = gen_metric(&g, &(&theta + &b)).unwrap();
        assert!(is_compatible(&kb, &shifted));
    }
}

#[test]
fn generalized_metric_invariants() {
    let g = eta();
    let e = gen_metric(&g, &QMatrix::zeros(4, 4)).unwrap();
    let q4 = pairing_matrix::<Rational>(4);
    let f1 = e.frame1();
    let restricted = &(&f1.transpose() * &q4) * &f1;
    assert_eq!(signature(&restricted).unwrap(), (2, 2, 0));
    assert!(validate_gen_metric(&e).all_pass());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let theta = rand_antisym(&mut rng, 4);
        let c = rand_invertible(&mut rng, 4);
        let g2 = &(&c.transpose() * &g) * &c;
        let e = gen_metric(&g2, &theta).unwrap();
        assert!(validate_gen_metric(&e).all_pass());
    }
    assert!(matches!(gen_metric(&QMatrix::identity(4), &QMatrix::zeros(4, 4)), Err(Error::BadSignature)));
}

#[test]
fn split_closed_forms() {
    let g = qm(&[&[1, 0, 0, 0], &[0, 2, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -3]]);
    let e = gen_metric(&g, &QMatrix::zeros(4, 4)).unwrap();
    let h = rat(1, 2);
    let x = vec![q(2), q(-1), q(4), q(1)];
    let (a1, a2) = e.split(&GenVector::vector(x.clone())).unwrap();
    let half_x: Vec<Rational> = x.iter().map(|v| v * &h).collect();
    let half_gx: Vec<Rational> = g.apply(&x).iter().map(|v| v * &h).collect();
    assert_eq!(a1, GenVector::new(half_x.clone(), half_gx.clone()));
    assert_eq!(a2, GenVector::new(half_x, half_gx.iter().map(|v| -v).collect()));
    let alpha = vec![q(1), q(0), q(-2), q(3)];
    let (b1, b2) = e.split(&GenVector::covector(alpha.clone())).unwrap();
    let gi: Vec<Rational> = g.inverse().unwrap().apply(&alpha).iter().map(|v| v * &h).collect();
    let ha: Vec<Rational> = alpha.iter().map(|v| v * &h).collect();
    assert_eq!(b1, GenVector::new(gi.clone(), ha.clone()));
    assert_eq!(b2, GenVector::new(gi.iter().map(|v| -v).collect(), ha));
}

#[test]
fn split_matches_frame_projection() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let c = rand_invertible(&mut rng, 4);
        let g = &(&c.transpose() * &eta()) * &c;
        let theta = rand_antisym(&mut rng, 4);
        let e = gen_metric(&g, &theta).unwrap();
        let a = GenVector::new(
            (0..4).map(|_| rat(rng.gen_range(-5..=5), 2)).collect(),
            (0..4).map(|_| rat(rng.gen_range(-5..=5), 3)).collect(),
        );
        let (a1, a2) = e.split(&a).unwrap();
        assert_eq!(a1.add(&a2), a);
        let f = e.frame1().hstack(&e.frame2());
        let coeffs = f.solve(&QMatrix::column(&a.stacked())).unwrap().col(0);
        let u = coeffs[..4].to_vec();
        let w = coeffs[4..].to_vec();
        assert_eq!(a1, e.lift1(&u));
        assert_eq!(a2, e.lift2(&w));
    }
}

#[test]
fn product_compatible_with_twisted_metric() {
    let g = eta();
    let p = standard_para::<Rational>(2);
    let theta = &g * &p;
    assert!(theta.is_antisymmetric());
    assert!(check_product_compat(&p, &theta));
    assert!(check_product_compat(&p, &QMatrix::zeros(4, 4)));
    let k = product_structure(&p).unwrap();
    for th in [theta, QMatrix::zeros(4, 4)] {
        let e = gen_metric(&g, &th).unwrap();
        assert!(is_compatible(&k, &e));
        assert_eq!(extract_pair(&k, &e).unwrap(), (p.clone(), p.clone()));
    }
}

#[test]
fn product_commuting_form_incompatible() {
    let g = eta();
    let p = standard_para::<Rational>(2);
    let nb = null_basis(&g, &p).unwrap();
    // Θ = a₁*∧a₂* in the dual of the null eigenbasis
    let dual = nb.inverse().unwrap();
    let a1s = dual.row(0);
    let a2s = dual.row(1);
    let theta = TwoVector::wedge(&a1s, &a2s).to_matrix();
    assert_eq!(&(&p.transpose() * &theta) * &p, theta);
    assert!(!check_product_compat(&p, &theta));
    let k = product_structure(&p).unwrap();
    assert!(!is_compatible(&k, &gen_metric(&g, &theta).unwrap()));
}

#[test]
fn trivial_never_compatible() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let k = trivial_structure::<Rational>(4);
    for _ in 0..10 {
        let c = rand_invertible(&mut rng, 4);
        let g = &(&c.transpose() * &eta()) * &c;
        let e = gen_metric(&g, &rand_antisym(&mut rng, 4)).unwrap();
        assert!(!is_compatible(&k, &e));
        assert!(matches!(extract_pair(&k, &e), Err(Error::NotCompatible)));
        assert!(!hat_metric_equiv(&k, &g).unwrap());
    }
}

#[test]
fn darboux_omega_compatible() {
    let w = darboux();
    // hyperbolic pairing on the Darboux basis
    let g = null_frame_metric::<Rational>(2);
    let theta = QMatrix::zeros(4, 4);
    let k = omega_structure(&w).unwrap();
    let e = gen_metric(&g, &theta).unwrap();
    assert!(is_compatible(&k, &e));
    let l = check_omega_compat(&w, &g, &theta).unwrap().expect("compatible");
    assert_eq!(l, standard_neutral(2));
    let (k1, k2) = extract_pair(&k, &e).unwrap();
    assert_eq!(k1, l);
    assert_eq!(k2, -l);
}

#[test]
fn omega_generic_false() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let c = rand_invertible(&mut rng, 4);
    let g = &(&c.transpose() * &eta()) * &c;
    let w = rand_antisym(&mut rng, 4);
    assert_eq!(check_omega_compat(&w, &g, &rand_antisym(&mut rng, 4)).unwrap(), None);
    assert!(matches!(
        check_omega_compat(&antisymmetric(4, &[(0, 1, int(1))]), &g, &QMatrix::zeros(4, 4)),
        Err(Error::DegenerateOmega)
    ));
}

#[test]
fn omega_cross_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut trues = 0;
    let mut count = 0;
    while count < 20 {
        let w = rand_antisym(&mut rng, 4);
        if w.det().is_zero() {
            continue;
        }
        let (g, theta) = if count % 2 == 0 {
            // built from a product structure L
            let c = rand_invertible(&mut rng, 4);
            let l = &(&c * &eta()) * &c.inverse().unwrap();
            let lw = &l.transpose() * &w;
            let wl = &w * &l;
            let h = rat(1, 2);
            ((&lw - &wl).scale(&h), (&lw + &wl).scale(&h))
        } else {
            let c = rand_invertible(&mut rng, 4);
            (&(&c.transpose() * &eta()) * &c, rand_antisym(&mut rng, 4))
        };
        let Ok(e) = gen_metric(&g, &theta) else { continue };
        count += 1;
        let k = omega_structure(&w).unwrap();
        let predicate = check_omega_compat(&w, &g, &theta).unwrap();
        assert_eq!(predicate.is_some(), is_compatible(&k, &e));
        trues += predicate.is_some() as usize;
    }
    assert!(trues >= 5);
}

fn theta_on_frame(basis: &QMatrix, vals: [Rational; 6]) -> QMatrix {
    // entries in the order (e1,e2),(e1,f1),(e1,f2),(e2,f1),(e2,f2),(f1,f2)
    let [a, b, c, d, e, f] = vals;
    let tb = antisymmetric(4, &[(0, 1, a), (0, 2, b), (0, 3, c), (1, 2, d), (1, 3, e), (2, 3, f)]);
    let inv = basis.inverse().unwrap();
    &(&inv.transpose() * &tb) * &inv
}

fn pi_agreement(g: &QMatrix, basis: &QMatrix, theta: &QMatrix) -> bool {
    let predicate = check_pi_conditions(g, basis, theta).unwrap();
    let k = pi_structure(&pi_from_frame(basis)).unwrap();
    let oracle = is_compatible(&k, &gen_metric(g, theta).unwrap());
    assert_eq!(predicate, oracle);
    predicate
}

#[test]
fn pi_conditions_examples() {
    let g = null_frame_metric::<Rational>(2);
    let id = QMatrix::identity(4);
    let h = rat(1, 2);
    let t = theta_on_frame(&id, [q(-2), q(0), q(0), q(0), q(0), h.clone()]);
    assert!(pi_agreement(&g, &id, &t));
    let t = theta_on_frame(&id, [q(-2), q(1), q(0), q(0), q(1), q(0)]);
    assert!(pi_agreement(&g, &id, &t));
    // the instance (−2, 1, 1, 1) fails the exact compatibility solve
    let t = theta_on_frame(&id, [q(-2), q(1), q(0), q(0), q(1), q(1)]);
    assert!(!pi_agreement(&g, &id, &t));
    let t = theta_on_frame(&id, [q(0), q(1), q(0), q(0), q(1), q(0)]);
    assert!(!pi_agreement(&g, &id, &t));
    assert!(matches!(check_pi_conditions(&eta(), &id, &t), Err(Error::WrongMetricFrame)));
}

#[test]
fn pi_conditions_on_null_eigenbasis() {
    let g = eta();
    let basis = null_basis(&g, &standard_para(2)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(29);
    let mut trues = 0;
    for i in 0..20 {
        let c = rat(rng.gen_range(-4..=4), rng.gen_range(1..=3));
        let vals = if i % 2 == 0 {
            let f = (q(1) - &c * &c) / q(2);
            [q(-2), c.clone(), q(0), q(0), c, f]
        } else {
            [0; 6].map(|_| q(rng.gen_range(-2..=2)))
        };
        trues += pi_agreement(&g, &basis, &theta_on_frame(&basis, vals)) as usize;
    }
    assert!(trues >= 10);
}

#[test]
fn assemble_reduces_to_product() {
    let g = eta();
    let p = standard_para::<Rational>(2);
    let k = assemble(&g, &QMatrix::zeros(4, 4), &p, &p).unwrap();
    assert_eq!(k, product_structure(&p).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let theta = rand_antisym(&mut rng, 4);
    let k = assemble(&g, &theta, &p, &p).unwrap();
    assert_eq!(k, b_conjugate(&theta, &product_structure(&p).unwrap()));
    assert!(matches!(assemble(&g, &theta, &QMatrix::identity(4), &p), Err(Error::InvalidPair)));
}

fn metrics() -> Vec<QMatrix> {
    vec![
        eta(),
        null_frame_metric(2),
        qm(&[&[1, 0, 0, 0], &[0, 4, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, -4]]),
    ]
}

#[test]
fn assemble_extract_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(37);
    for g in metrics() {
        for _ in 0..6 {
            let theta = rand_antisym(&mut rng, 4);
            let o1 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let o2 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let k1 = random_para(&g, o1, &mut rng).unwrap();
            let k2 = random_para(&g, o2, &mut rng).unwrap();
            let k = assemble(&g, &theta, &k1, &k2).unwrap();
            assert!(validate_gen_para(&k).all_pass());
            let e = gen_metric(&g, &theta).unwrap();
            assert!(is_compatible(&k, &e));
            assert_eq!(k, assemble_from_frames(&e, &k1, &k2).unwrap());
            assert_eq!(extract_pair(&k, &e).unwrap(), (k1.clone(), k2.clone()));
            // K(X + g(X) + Θ(X)) = K₁X + g(K₁X) + Θ(K₁X) on frame vectors
            for i in 0..4 {
                let x: Vec<Rational> = (0..4).map(|j| if i == j { q(1) } else { q(0) }).collect();
                assert_eq!(e.lift1(&x).apply(&k), e.lift1(&k1.apply(&x)));
                assert_eq!(e.lift2(&x).apply(&k), e.lift2(&k2.apply(&x)));
            }
        }
    }
}

#[test]
fn hat_metric_examples() {
    let g = eta();
    let p = standard_para::<Rational>(2);
    let k = product_structure(&p).unwrap();
    assert!(hat_metric_equiv(&k, &g).unwrap());
    assert!(is_compatible(&k, &gen_metric(&g, &QMatrix::zeros(4, 4)).unwrap()));
}

#[test]
fn hat_metric_cross_check() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let g = eta();
    let e = gen_metric(&g, &QMatrix::zeros(4, 4)).unwrap();
    let mut trues = 0;
    for i in 0..20 {
        let k = match i % 4 {
            0 => {
                let k1 = random_para(&g, 1, &mut rng).unwrap();
                let k2 = random_para(&g, -1, &mut rng).unwrap();
                assemble(&g, &QMatrix::zeros(4, 4), &k1, &k2).unwrap()
            }
            1 => {
                let k1 = random_para(&g, 1, &mut rng).unwrap();
                assemble(&g, &rand_antisym(&mut rng, 4), &k1, &k1).unwrap()
            }
            2 => loop {
                let w = rand_antisym(&mut rng, 4);
                if let Ok(k) = omega_structure(&w) {
                    break k;
                }
            },
            _ => b_conjugate(&rand_antisym(&mut rng, 4), &trivial_structure(4)),
        };
        assert!(validate_gen_para(&k).all_pass());
        let hat = hat_metric_equiv(&k, &g).unwrap();
        assert_eq!(hat, is_compatible(&k, &e));
        trues += hat as usize;
    }
    assert!(trues >= 5);
}

#[test]
fn p_epsilon_formulas() {
    let mut rng = ChaCha8Rng::seed_from_u64(43);
    let g = eta();
    let theta = rand_antisym(&mut rng, 4);
    let k1 = random_para(&g, 1, &mut rng).unwrap();
    let k2 = random_para(&g, 1, &mut rng).unwrap();
    let k = assemble(&g, &theta, &k1, &k2).unwrap();
    let e = gen_metric(&g, &theta).unwrap();
    let t1 = z_tangent_space(&g, &k1);
    let t2 = z_tangent_space(&g, &k2);
    let v = VerticalPair::new(&t1[0] + &t1[1].scale(&q(2)), t2[1].clone());
    let p1 = p_epsilon(1, &k, &e, &v).unwrap();
    let p2 = p_epsilon(2, &k, &e, &v).unwrap();
    assert_eq!(p1, VerticalPair::new(&k1 * &v.v1, &k2 * &v.v2));
    assert_eq!(p2, VerticalPair::new(&k1 * &v.v1, -(&k2 * &v.v2)));
    assert_eq!(p_epsilon(3, &k, &e, &v).unwrap(), p2.scale(&q(-1)));
    assert_eq!(p_epsilon(4, &k, &e, &v).unwrap(), p1.scale(&q(-1)));
    for eps in 1..=4 {
        let p = p_epsilon(eps, &k, &e, &v).unwrap();
        assert!(p.is_vertical(&g, &k1, &k2));
        assert_eq!(p_epsilon(eps, &k, &e, &p).unwrap(), v);
    }
    let bad = VerticalPair::new(QMatrix::identity(4), t2[0].clone());
    assert!(matches!(p_epsilon(1, &k, &e, &bad), Err(Error::NotVertical)));
    // transported endomorphism preserves E′ and E″
    let big = v.to_gen_endo(&e).unwrap();
    for i in 0..4 {
        let x: Vec<Rational> = (0..4).map(|j| if i == j { q(1) } else { q(0) }).collect();
        assert_eq!(e.lift1(&x).apply(&big), e.lift1(&v.v1.apply(&x)));
        assert_eq!(e.lift2(&x).apply(&big), e.lift2(&v.v2.apply(&x)));
    }
}

#[test]
fn components() {
    let g = eta();
    let p = standard_para::<Rational>(2);
    let s = swap34();
    let ps = &(&s * &p) * &s;
    assert!(is_para(&g, &ps));
    let theta = QMatrix::zeros(4, 4);
    let e = gen_metric(&g, &theta).unwrap();
    let cls = |k1: &QMatrix, k2: &QMatrix| classify_component(&assemble(&g, &theta, k1, k2).unwrap(), &e).unwrap();
    assert_eq!(cls(&p, &p), Component::PlusPlus);
    assert_eq!(cls(&p, &ps), Component::PlusMinus);
    assert_eq!(cls(&ps, &p), Component::MinusPlus);
    assert_eq!(cls(&ps, &ps), Component::MinusMinus);
    let mut rng = ChaCha8Rng::seed_from_u64(47);
    for c in Component::ALL {
        let (s1, s2) = c.signs();
        let th = rand_antisym(&mut rng, 4);
        let k1 = random_para(&g, s1, &mut rng).unwrap();
        let k2 = random_para(&g, s2, &mut rng).unwrap();
        let em = gen_metric(&g, &th).unwrap();
        assert_eq!(classify_component(&assemble(&g, &th, &k1, &k2).unwrap(), &em).unwrap(), c);
        assert_eq!(Component::parse(&c.to_string()).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn complements_orthogonal(theta in antisym(4), x in qvec(4), y in qvec(4)) {
        let e = gen_metric(&eta(), &theta).unwrap();
        prop_assert_eq!(gen_pairing(&e.lift1(&x), &e.lift2(&y)), q(0));
        prop_assert_eq!(gen_pairing(&e.lift2(&x), &e.lift2(&y)), -eta().form(&x, &y));
    }

    #[test]
    fn examples_valid_under_b(b in antisym(4), w in antisym(4)) {
        let mut ks = vec![trivial_structure::<Rational>(4), product_structure(&standard_para(2)).unwrap(), pi_structure(&w).unwrap()];
        if let Ok(k) = omega_structure(&w) {
            ks.push(k);
        }
        for k in ks {
            prop_assert!(validate_gen_para(&k).all_pass());
            prop_assert!(validate_gen_para(&b_conjugate(&b, &k)).all_pass());
        }
    }
}
