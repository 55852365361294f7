use beauville_core::perms::{format_plain, format_signed, parse_plain, parse_signed, Permutation, SignedPermutation};
use proptest::prelude::*;

fn signed(max_degree: usize) -> impl Strategy<Value = SignedPermutation> {
    (1..=max_degree).prop_flat_map(|n| {
        (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(images, signs)| SignedPermutation::new(Permutation::from_images(images).unwrap(), signs).unwrap())
    })
}

fn same_degree_pair(max_degree: usize) -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (1..=max_degree).prop_flat_map(|n| {
        let one = move || {
            (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), proptest::collection::vec(any::<bool>(), n)).prop_map(
                |(images, signs)| SignedPermutation::new(Permutation::from_images(images).unwrap(), signs).unwrap(),
            )
        };
        (one(), one(), one())
    })
}

proptest! {
    #[test]
    fn signed_notation_round_trips(p in signed(24)) {
        let text = format_signed(&p);
        prop_assert_eq!(parse_signed(&text, p.degree()).unwrap(), p.clone());
        // Canonical: formatting the reparse gives the same string.
        prop_assert_eq!(format_signed(&parse_signed(&text, p.degree()).unwrap()), text);
    }

    #[test]
    fn plain_notation_round_trips(p in signed(24)) {
        let q = p.perm();
        prop_assert_eq!(&parse_plain(&format_plain(q), q.degree()).unwrap(), q);
    }

    #[test]
    fn composition_is_a_group_law((a, b, c) in same_degree_pair(16)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&b).inverse(), b.inverse().compose(&a.inverse()));
        prop_assert_eq!(a.pow(a.order() as i64 + 1), a.clone());
    }

    /// Matrices act on columns, so `a` then `b` is the product `M(b)·M(a)`.
    #[test]
    fn matrices_follow_composition((a, b, _) in same_degree_pair(8)) {
        prop_assert_eq!(a.compose(&b).to_matrix(), b.to_matrix().mul(&a.to_matrix()).unwrap());
        prop_assert_eq!(a.to_matrix().trace().to_string(), a.trace().to_string());
        prop_assert_eq!(SignedPermutation::from_matrix(&a.to_matrix()), Some(a.clone()));
    }

    #[test]
    fn signed_point_action_is_faithful((a, b, _) in same_degree_pair(12)) {
        let (pa, pb) = (a.to_signed_point_perm(), b.to_signed_point_perm());
        prop_assert_eq!(pa.compose(&pb), a.compose(&b).to_signed_point_perm());
        prop_assert_eq!(SignedPermutation::from_signed_point_perm(&pa), Some(a.clone()));
    }

    #[test]
    fn conjugates_share_signed_cycle_type((a, b, _) in same_degree_pair(12)) {
        let c = a.conjugate_by(&b);
        prop_assert_eq!(c.cycle_type(), a.cycle_type());
        let g = a.conjugator_to(&c).unwrap();
        prop_assert_eq!(a.conjugate_by(&g), c);
    }

    #[test]
    fn parser_rejects_garbage(s in "[()_,0-9 ]{0,12}") {
        // Either a valid permutation of degree 9 or an error; never a panic.
        if let Ok(p) = parse_signed(&s, 9) {
            prop_assert_eq!(p.degree(), 9);
        }
    }
}
