use beauville_core::beauville::GroupContext;
use beauville_core::groups::{CoxeterType, RealizedGroup};
use beauville_core::mixed::{
    characters, mixable_check, mixable_obstruction, order_mod4_obstruction, verify_mixed, Mixable, MixedQuadruple, Mod4,
};
use beauville_core::stabchain::DEFAULT_BOUND;
use CoxeterType::*;

fn desk_scale() -> Vec<CoxeterType> {
    let mut v: Vec<CoxeterType> = (1..=8).map(A).collect();
    v.extend((2..=7).map(B));
    v.extend((4..=7).map(D));
    v.extend([F4, H3, H4, E6]);
    v.extend((3..=20).map(I2));
    v
}

#[test]
fn no_constructed_group_is_mixed_or_mixable() {
    for t in desk_scale() {
        let g = RealizedGroup::build_coxeter(t).unwrap();
        let chars = characters(&g);
        assert_eq!(chars.len(), (1 << t.abelianisation_rank()) - 1, "{t}");
        for chi in &chars {
            let r = order_mod4_obstruction(&g, chi, DEFAULT_BOUND).unwrap();
            assert!(matches!(r, Mod4::Blocked { .. }), "{t} {}", chi.label());
        }
        match mixable_obstruction(&g, DEFAULT_BOUND).unwrap() {
            Mixable::Blocked { vacuous, .. } => assert!(!vacuous, "{t}"),
            other => panic!("{t}: {other:?}"),
        }
    }
}

#[test]
fn odd_elements_have_even_order() {
    for t in [A(4), B(4), D(5), H3, F4] {
        let g = RealizedGroup::build_coxeter(t).unwrap();
        let ctx = GroupContext::new(&g);
        let table = ctx.table().unwrap();
        for chi in characters(&g) {
            for p in table.elements() {
                if !chi.is_in_kernel(p) {
                    assert_eq!(p.order() % 2, 0, "{t}");
                }
            }
        }
    }
}

#[test]
fn quadruples_in_d5_fail() {
    let g = RealizedGroup::build_coxeter(D(5)).unwrap();
    let chi = characters(&g).remove(0);
    let s = g.generators();
    let a = s[0].mul(&s[1]).unwrap();
    let c = s[2].mul(&s[3]).unwrap().mul(&s[4]).unwrap().mul(&s[1]).unwrap();
    let q = MixedQuadruple { character: chi.clone(), a: a.clone(), c: c.clone(), g: s[0].clone() };
    let r = verify_mixed(&g, &q, DEFAULT_BOUND).unwrap();
    assert!(r.g_outside);
    assert!(!r.passes());
    // (g·e)² = e lies in every Σ.
    assert!(r.square_witness.is_some());

    let inside = MixedQuadruple { g: a.clone(), ..q.clone() };
    assert!(!verify_mixed(&g, &inside, DEFAULT_BOUND).unwrap().g_outside);

    let e = g.identity();
    let trivial = MixedQuadruple { a: e.clone(), c: e, ..q };
    let r = verify_mixed(&g, &trivial, DEFAULT_BOUND).unwrap();
    assert_eq!(r.generated_order, "1");
    assert!(!r.passes());
}

#[test]
fn mixable_conditions() {
    let g = RealizedGroup::build_coxeter(A(4)).unwrap();
    let s = g.generators();
    let a = s[0].clone();
    let c = s[1].mul(&s[2]).unwrap().mul(&s[3]).unwrap();
    let e = g.identity();
    let r = mixable_check(&g, &a, &c, &e, &e).unwrap();
    assert!(!r.second_generates);
    assert!(!r.holds());
    let odd = s[0].mul(&s[1]).unwrap();
    let r = mixable_check(&g, &odd, &c, &a, &c).unwrap();
    assert!(!r.even_orders);
    assert!(!r.coprime);
    // ν is symmetric: ac and ca are conjugate.
    for x in s {
        for y in s {
            let xy = g.to_perm(&x.mul(y).unwrap()).unwrap().order();
            let yx = g.to_perm(&y.mul(x).unwrap()).unwrap().order();
            assert_eq!(xy, yx);
        }
    }
}
