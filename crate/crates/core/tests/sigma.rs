use std::collections::{BTreeSet, HashSet};

use beauville_core::beauville::{
    ExactSigma, GeneratingPair, GroupContext, InvariantSigma, SigmaKey, SigmaStrategy, SIGMA_STRATEGIES,
};
use beauville_core::groups::{CoxeterType, Element, RealizedGroup};
use beauville_core::perms::Permutation;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Σ(x, y) by the definition: every conjugate of every nontrivial power.
fn brute_sigma(group: &[Permutation], x: &Permutation, y: &Permutation) -> HashSet<Permutation> {
    let mut out = HashSet::new();
    for h in [x.clone(), y.clone(), x.compose(y)] {
        let mut p = h.clone();
        while !p.is_identity() {
            for g in group {
                out.insert(g.inverse().compose(&p).compose(g));
            }
            p = p.compose(&h);
        }
    }
    out
}

fn random_generating_pair(g: &RealizedGroup, rng: &mut ChaCha8Rng) -> GeneratingPair {
    loop {
        let (x, y) = (g.random_element(rng), g.random_element(rng));
        if g.generates_whole(&[x.clone(), y.clone()]).unwrap() {
            return GeneratingPair::new(x, y);
        }
    }
}

#[test]
fn exact_sigma_matches_brute_force() {
    use CoxeterType::*;
    let groups = [A(3), A(4), A(5), B(3), B(4), D(4), D(5), H3, F4, I2(7)];
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut pairs = 0;
    for t in groups {
        let g = RealizedGroup::build_coxeter(t).unwrap();
        assert!(g.order_u64().unwrap() <= 2000);
        let ctx = GroupContext::new(&g);
        let table = ctx.table().unwrap();
        let elements = g.chain().elements(2000).unwrap();
        for _ in 0..5 {
            let pair = random_generating_pair(&g, &mut rng);
            let f = ExactSigma.fingerprint(&ctx, &pair).unwrap();
            let mut exact = HashSet::new();
            for key in f.keys() {
                let SigmaKey::Class { index } = key else { panic!("exact keys are classes") };
                exact.extend(table.class_members(*index).map(|i| table.element(i).clone()));
            }
            let (x, y) = (g.to_perm(&pair.x).unwrap(), g.to_perm(&pair.y).unwrap());
            assert_eq!(exact, brute_sigma(&elements, &x, &y), "{t}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 50);
}

#[test]
fn every_registered_strategy_resolves() {
    let g = RealizedGroup::build_coxeter(CoxeterType::B(5)).unwrap();
    let ctx = GroupContext::new(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let pair = random_generating_pair(&g, &mut rng);
    for name in SIGMA_STRATEGIES {
        let s = beauville_core::beauville::sigma_strategy(name).unwrap();
        let f = s.fingerprint(&ctx, &pair).unwrap();
        assert!(!f.is_empty(), "{name}");
        // Σ always meets itself.
        assert!(!s.check_dagger(&ctx, &f, &f).unwrap().is_disjoint(), "{name}");
    }
    assert!(beauville_core::beauville::sigma_strategy("fast").is_none());
}

fn keys(s: &dyn SigmaStrategy, ctx: &GroupContext<'_>, pair: &GeneratingPair) -> BTreeSet<SigmaKey> {
    s.fingerprint(ctx, pair).unwrap().keys().cloned().collect()
}

fn conj(pair: &GeneratingPair, h: &Element) -> GeneratingPair {
    GeneratingPair::new(pair.x.conj(h).unwrap(), pair.y.conj(h).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_is_conjugation_invariant(seed in any::<u64>(), which in 0usize..3) {
        let t = [CoxeterType::B(4), CoxeterType::D(5), CoxeterType::H3][which];
        let g = RealizedGroup::build_coxeter(t).unwrap();
        let ctx = GroupContext::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pair = random_generating_pair(&g, &mut rng);
        let h = g.random_element(&mut rng);
        let moved = conj(&pair, &h);
        for s in [&ExactSigma as &dyn SigmaStrategy, &InvariantSigma] {
            prop_assert_eq!(keys(s, &ctx, &pair), keys(s, &ctx, &moved));
        }
    }

    #[test]
    fn dagger_is_symmetric(seed in any::<u64>(), which in 0usize..3) {
        let t = [CoxeterType::A(4), CoxeterType::B(5), CoxeterType::D(5)][which];
        let g = RealizedGroup::build_coxeter(t).unwrap();
        let ctx = GroupContext::new(&g);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p, q) = (random_generating_pair(&g, &mut rng), random_generating_pair(&g, &mut rng));
        for s in [&ExactSigma as &dyn SigmaStrategy, &InvariantSigma] {
            let (fp, fq) = (s.fingerprint(&ctx, &p).unwrap(), s.fingerprint(&ctx, &q).unwrap());
            let pq = s.check_dagger(&ctx, &fp, &fq).unwrap();
            let qp = s.check_dagger(&ctx, &fq, &fp).unwrap();
            prop_assert_eq!(pq.is_disjoint(), qp.is_disjoint());
            prop_assert_eq!(pq.is_inconclusive(), qp.is_inconclusive());
        }
    }

    /// Invariant keys never separate elements of one class.
    #[test]
    fn invariant_keys_are_class_functions(seed in any::<u64>(), which in 0usize..3) {
        let t = [CoxeterType::B(4), CoxeterType::H3, CoxeterType::E6][which];
        let g = RealizedGroup::build_coxeter(t).unwrap();
        let ctx = GroupContext::with_bound(&g, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = g.random_element(&mut rng);
        let h = g.random_element(&mut rng);
        let single = |e: &Element| GeneratingPair::new(e.clone(), e.inv());
        prop_assert_eq!(
            keys(&InvariantSigma, &ctx, &single(&u)),
            keys(&InvariantSigma, &ctx, &single(&u.conj(&h).unwrap()))
        );
    }
}
