use beauville_core::groups::{CoxeterType, Element, RealizedGroup};
use num_bigint::BigUint;
use rand::SeedableRng;

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[test]
fn chain_orders_match_the_order_formulas() {
    let mut cases: Vec<(CoxeterType, BigUint)> = Vec::new();
    for n in 1..=8u64 {
        cases.push((CoxeterType::A(n as usize), factorial(n + 1)));
    }
    for n in 2..=10u64 {
        cases.push((CoxeterType::B(n as usize), factorial(n) << n));
    }
    for n in 4..=10u64 {
        cases.push((CoxeterType::D(n as usize), factorial(n) << (n - 1)));
    }
    for k in 3..=12u64 {
        cases.push((CoxeterType::I2(k as usize), BigUint::from(2 * k)));
    }
    for (t, o) in [
        (CoxeterType::E6, 51_840u64),
        (CoxeterType::E7, 2_903_040),
        (CoxeterType::E8, 696_729_600),
        (CoxeterType::F4, 1152),
        (CoxeterType::H3, 120),
        (CoxeterType::H4, 14_400),
    ] {
        cases.push((t, BigUint::from(o)));
    }
    for (t, order) in cases {
        let g = RealizedGroup::build_coxeter(t).unwrap();
        assert_eq!(g.chain().order(), order, "{t}");
        g.check_coxeter_relations().unwrap();
        g.check_faithful().unwrap();
        for s in g.generators() {
            assert_eq!(s.order(10), Some(2), "{t}");
        }
    }
}

#[test]
fn root_counts() {
    for (t, n) in [
        (CoxeterType::E6, 72),
        (CoxeterType::E7, 126),
        (CoxeterType::E8, 240),
        (CoxeterType::F4, 48),
        (CoxeterType::H3, 30),
        (CoxeterType::H4, 120),
    ] {
        assert_eq!(RealizedGroup::build_coxeter(t).unwrap().degree(), n, "{t}");
    }
}

#[test]
fn d_is_the_even_sign_subgroup_of_b() {
    for n in 4..=7 {
        let b = RealizedGroup::build_coxeter(CoxeterType::B(n)).unwrap();
        let d = RealizedGroup::build_coxeter(CoxeterType::D(n)).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(n as u64);
        for _ in 0..200 {
            let g = b.random_element(&mut rng);
            let even = g.as_signed().unwrap().is_even_signed();
            assert_eq!(d.contains(&g), even);
        }
    }
}

#[test]
fn random_elements_have_consistent_powers() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for t in [CoxeterType::B(6), CoxeterType::H4, CoxeterType::I2(9), CoxeterType::F4] {
        let g = RealizedGroup::build_coxeter(t).unwrap();
        for _ in 0..20 {
            let x = g.random_element(&mut rng);
            let o = x.order(200).unwrap();
            assert!(x.pow(o as i64).is_identity());
            assert_eq!(x.pow(-1), x.inv());
            let h = g.random_element(&mut rng);
            let c = x.conj(&h).unwrap();
            assert!(g.contains(&c));
            assert_eq!(c.order(200), Some(o));
        }
    }
}

#[test]
fn singular_matrix_is_rejected() {
    let g = RealizedGroup::build_coxeter(CoxeterType::H4).unwrap();
    let m = beauville_core::algebra::ExactMatrix::from_int_rows(&[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]).unwrap();
    assert!(g.membership_matrix(&m).is_err());
    let id = beauville_core::algebra::ExactMatrix::identity(4);
    assert_eq!(g.membership_matrix(&id).unwrap(), Element::Matrix(id));
}
