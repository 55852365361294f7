use beauville_core::beauville::product::{product_structure, two_generated_obstruction};
use beauville_core::beauville::search::{search_strategy, SearchConfig, SearchVerdict};
use beauville_core::beauville::{find_inverter, verify_unmixed, BeauvilleStructure, ExactSigma, GeneratingPair, GroupContext, Verdict};
use beauville_core::groups::{CoxeterType, Element, GroupDescriptor, RealizedGroup};
use beauville_core::perms::notation::parse_plain;
use CoxeterType::*;

fn exhaustive(g: &RealizedGroup) -> beauville_core::beauville::search::SearchOutcome {
    search_strategy("exhaustive").unwrap().search(g, &SearchConfig::default()).unwrap()
}

fn perm_group(desc: GroupDescriptor, n: usize, gens: &[&str], order: u64) -> RealizedGroup {
    let gens = gens.iter().map(|s| parse_plain(s, n).unwrap()).collect();
    RealizedGroup::permutation_group(desc, n, gens, order.into()).unwrap()
}

fn check_printed(g: &RealizedGroup, elems: [&str; 4]) {
    let n = g.degree();
    let e: Vec<Element> = elems.iter().map(|s| Element::Perm(parse_plain(s, n).unwrap())).collect();
    let p1 = GeneratingPair::new(e[0].clone(), e[1].clone());
    let p2 = GeneratingPair::new(e[2].clone(), e[3].clone());
    let ctx = GroupContext::new(g);
    let t1 = find_inverter(&ctx, &p1).unwrap().expect("inverter for pair 1");
    let t2 = find_inverter(&ctx, &p2).unwrap().expect("inverter for pair 2");
    eprintln!("{}: t1 = {t1}, t2 = {t2}", g.descriptor());
    let s = BeauvilleStructure { pair1: p1, pair2: p2, witnesses: Some((t1, t2)) };
    let r = verify_unmixed(&ctx, &s, &ExactSigma, "printed").unwrap();
    assert_eq!(r.verdict(), Verdict::Pass, "{}", r.to_json());
}

#[test]
fn printed_h3_squared() {
    let g = perm_group(
        GroupDescriptor::Product(H3, H3),
        14,
        &["(1,2,3,4,5)", "(1,2,3)", "(6,7)", "(8,9,10,11,12)", "(8,9,10)", "(13,14)"],
        14400,
    );
    check_printed(
        &g,
        [
            "(1,2,3,4,5)(6,7)(8,9)(10,11)",
            "(1,2)(3,4)(8,9,10,11,12)(13,14)",
            "(1,2,3)(8,9)(10,11)(13,14)",
            "(1,4)(2,5)(6,7)(8,10,12)(13,14)",
        ],
    );
}

#[test]
fn printed_a4_i2_3() {
    let g = perm_group(GroupDescriptor::Product(A(4), I2(3)), 8, &["(1,2,3,4,5)", "(1,2)", "(6,7,8)", "(6,7)"], 720);
    check_printed(&g, ["(1,2)(3,4,5)(6,7,8)", "(4,1)(2,3)(6,7)", "(1,2,3,4)(6,7,8)", "(2,3,4,5)(6,7)"]);
}

#[test]
fn a4_squared_from_factor_structures() {
    let a4 = RealizedGroup::build_coxeter(A(4)).unwrap();
    let s = exhaustive(&a4).structure.unwrap();
    let g = RealizedGroup::direct_product(&a4, &a4).unwrap();
    assert_eq!(g.order_u64(), Some(14400));
    let p = product_structure(&g, &s, &s).unwrap();
    eprintln!("attempt {}: {}", p.attempt, p.report.to_json());
    assert_eq!(p.report.verdict(), Verdict::Pass);
    assert_eq!(p.report.strongly_real, Some(true));
}

#[test]
fn dihedral_products_fail() {
    for (a, b) in [(A(4), I2(5)), (A(2), I2(7)), (I2(3), I2(5)), (A(5), I2(5))] {
        let g = RealizedGroup::direct_product(
            &RealizedGroup::build_coxeter(a).unwrap(),
            &RealizedGroup::build_coxeter(b).unwrap(),
        )
        .unwrap();
        assert!(!two_generated_obstruction(&[a, b]));
        assert_eq!(exhaustive(&g).verdict, SearchVerdict::NoneExists, "{a}x{b}");
    }
}
