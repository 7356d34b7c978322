use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use stairtab::bijections::{gst_transport, qtab_transport};
use stairtab::shapes::{staircase, Partition, SkewShape};
use stairtab::symfunc::{Monomial, MultiPoly};
use stairtab::tableaux::{random_gst, random_qtab, IndexSet};

fn partition(max_parts: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_parts).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A skew shape together with a seed for sampling fillings of it.
fn skew_and_seed() -> impl Strategy<Value = (SkewShape, u64)> {
    (partition(4, 4), any::<u64>()).prop_flat_map(|(outer, seed)| {
        let subs = outer.sub_partitions();
        (0..subs.len()).prop_map(move |i| {
            (
                SkewShape::new(outer.clone(), subs[i].clone()).unwrap(),
                seed,
            )
        })
    })
}

fn index_set(m: u32) -> impl Strategy<Value = IndexSet> {
    prop::collection::btree_set(1..=m, 0..=m as usize)
        .prop_map(move |s| IndexSet::new(s, m).unwrap())
}

fn poly(m: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (
        prop::collection::vec(0u32..3, m),
        0u32..3,
        0u32..3,
        -5i64..=5,
    );
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        MultiPoly::from_terms(
            m,
            terms
                .into_iter()
                .map(|(x, t, r, c)| (Monomial { x, t, r }, c)),
        )
        .unwrap()
    })
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition(6, 6)) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
    }

    #[test]
    fn skew_conjugate_swaps_cells((shape, _) in skew_and_seed()) {
        let mut transposed: Vec<_> = shape.cells().into_iter().map(|c| c.transpose()).collect();
        transposed.sort();
        prop_assert_eq!(shape.conjugate().cells(), transposed);
    }

    #[test]
    fn reading_words_and_yamanouchi_weights((shape, seed) in skew_and_seed(), set in index_set(3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_qtab(&shape, &set, &mut rng, 10_000) {
            prop_assert!(t.is_valid(&set));
            let word = t.reading_word();
            prop_assert_eq!(word.len(), shape.size());
            if word.is_yamanouchi() {
                prop_assert!(t.weight().as_partition().is_some());
            }
        }
    }

    #[test]
    fn qtab_transport_round_trips(
        (shape, seed) in skew_and_seed(),
        from in index_set(3),
        to in index_set(3),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_qtab(&shape, &from, &mut rng, 10_000) {
            let u = qtab_transport(&t, &from, &to).unwrap();
            prop_assert!(u.is_valid(&to));
            prop_assert_eq!(u.weight(), t.weight());
            prop_assert_eq!(u.prime_counts(), t.prime_counts());
            prop_assert_eq!(qtab_transport(&u, &to, &from).unwrap(), t);
        }
    }

    #[test]
    fn gst_transport_round_trips(
        seed in any::<u64>(),
        mu_index in 0usize..132,
        from in index_set(4),
        to in index_set(4),
    ) {
        let mus = staircase(5).sub_partitions();
        let shape = SkewShape::new(staircase(5), mus[mu_index % mus.len()].clone()).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        if let Some(t) = random_gst(&shape, &from, &mut rng, 10_000) {
            let u = gst_transport(&t, &from, &to, 5).unwrap();
            prop_assert!(u.is_valid(&to));
            prop_assert_eq!(u.weight(), t.weight());
            prop_assert_eq!(gst_transport(&u, &to, &from, 5).unwrap(), t);
        }
    }

    #[test]
    fn polynomial_ring_laws(a in poly(2), b in poly(2), c in poly(2)) {
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().sub(&b).unwrap(), a.clone());
        let left = a.mul(&b.add(&c).unwrap()).unwrap();
        let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(a.swap_tr().swap_tr(), a.clone());
        prop_assert_eq!(a.swap_x(1, 2).swap_x(1, 2), a.clone());
        prop_assert_eq!(MultiPoly::from_json(2, &a.to_json()).unwrap(), a);
    }
}
