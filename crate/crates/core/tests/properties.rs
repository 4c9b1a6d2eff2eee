use proptest::prelude::*;

use kseg_core::analysis::{annihilators, is_categorical_at_zero, nilpotency_degree};
use kseg_core::construct::mor_ext::{compare_annihilators, MorExtensionSpec};
use kseg_core::construct::random::seeded;
use kseg_core::construct::{
    mor_extension, nilpotent_from_spec, random_category, random_nilpotent_spec,
    semigroup_of_category, ReesSemigroup,
};
use kseg_core::enumeration::{enumerate, EnumerationTask};
use kseg_core::structure::{category_interpretation_check, decompose};
use kseg_core::{
    enumerate_congruences, find_isomorphism, quotient, validate, ElementSet, FiniteSemigroup,
};

fn corpus(order: usize) -> Vec<FiniteSemigroup> {
    enumerate(&EnumerationTask::exhaustive(order))
        .unwrap()
        .semigroups
}

#[test]
fn every_congruence_quotient_revalidates() {
    for order in 1..=4 {
        for s in corpus(order) {
            for c in enumerate_congruences(&s, 8).unwrap() {
                let (q, projection) = quotient(&s, &c.partition).unwrap();
                assert!(validate(&q.to_doc()).is_ok());
                assert!(projection.is_homomorphism());
                assert!(projection.is_surjective());
                assert_eq!(c.zero_restricted, projection.is_zero_restricted());
            }
        }
    }
}

fn relabel(s: &FiniteSemigroup, perm: &[usize]) -> FiniteSemigroup {
    let mut inv = vec![0; perm.len()];
    for (a, &p) in perm.iter().enumerate() {
        inv[p] = a;
    }
    let labels = (0..s.order()).map(|k| format!("x{k}")).collect();
    FiniteSemigroup::from_fn(labels, perm[s.zero()], |x, y| perm[s.mul(inv[x], inv[y])]).unwrap()
}

/// Drop zero rows and columns, then repeated rows and columns. Recovery is
/// only up to this reduction.
fn reduced(w: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
    fn dedup_rows(w: Vec<Vec<bool>>) -> Vec<Vec<bool>> {
        let mut out: Vec<Vec<bool>> = Vec::new();
        for r in w {
            if r.contains(&true) && !out.contains(&r) {
                out.push(r);
            }
        }
        out
    }
    fn transpose(w: &[Vec<bool>]) -> Vec<Vec<bool>> {
        let width = w.first().map_or(0, Vec::len);
        (0..width)
            .map(|i| w.iter().map(|r| r[i]).collect())
            .collect()
    }
    transpose(&dedup_rows(transpose(&dedup_rows(w))))
}

proptest! {
    #[test]
    fn isomorphism_search_is_symmetric(i in 0usize..442, j in 0usize..442) {
        let all = corpus(4);
        let (a, b) = (&all[i], &all[j]);
        let ab = find_isomorphism(a, b, 8).unwrap();
        let ba = find_isomorphism(b, a, 8).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
    }

    #[test]
    fn relabeled_copies_are_isomorphic(i in 0usize..442, perm in Just((0..4usize).collect::<Vec<_>>()).prop_shuffle()) {
        let s = &corpus(4)[i];
        let t = relabel(s, &perm);
        let iso = find_isomorphism(s, &t, 8).unwrap();
        prop_assert!(iso.is_some());
        // decomposition invariants do not depend on labels
        prop_assert_eq!(is_categorical_at_zero(s).is_ok(), is_categorical_at_zero(&t).is_ok());
        prop_assert_eq!(nilpotency_degree(s), nilpotency_degree(&t));
        if is_categorical_at_zero(s).is_ok() {
            let (r1, r2) = (decompose(s).unwrap(), decompose(&t).unwrap());
            prop_assert!(r1.all_verified() && r2.all_verified());
            prop_assert_eq!(r1.pqn.n_classes.len(), r2.pqn.n_classes.len());
        }
    }

    #[test]
    fn rees_semigroups_are_categorical(w in prop::collection::vec(prop::collection::vec(any::<bool>(), 0..=4), 0..=4)) {
        // make it rectangular: every row gets the width of the first
        let width = w.first().map_or(0, Vec::len);
        let w: Vec<Vec<bool>> = w.into_iter().map(|mut r| { r.resize(width, false); r }).collect();
        let rees = ReesSemigroup::new(
            (1..=width).map(|k| k.to_string()).collect(),
            (1..=w.len()).map(|k| k.to_string()).collect(),
            w,
        ).unwrap();
        let s = rees.materialize();
        prop_assert!(is_categorical_at_zero(&s).is_ok());
        let report = decompose(&s).unwrap();
        prop_assert!(report.all_verified(), "{:?}", report.witnesses);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn sandwich_is_recovered_up_to_relabeling(
        ni in 1usize..=4, nl in 1usize..=4, bits in prop::collection::vec(any::<bool>(), 16)
    ) {
        let w: Vec<Vec<bool>> = (0..nl).map(|l| (0..ni).map(|i| bits[l * 4 + i]).collect()).collect();
        let w = reduced(w);
        prop_assume!(!w.is_empty());
        let (nl, ni) = (w.len(), w[0].len());

        let rees = ReesSemigroup::new(
            (1..=ni).map(|k| k.to_string()).collect(),
            (1..=nl).map(|k| k.to_string()).collect(),
            w.clone(),
        ).unwrap();
        let s = rees.materialize();
        let report = decompose(&s).unwrap();
        prop_assert!(report.annihilators.quasi.is_zero_set(&s));
        prop_assert_eq!(report.rees.i_count(), ni);
        prop_assert_eq!(report.rees.lambda_count(), nl);
        let mut i_map = vec![None; ni];
        let mut l_map = vec![None; nl];
        for i in 0..ni {
            for l in 0..nl {
                let (i2, l2) = report.pqn.coordinates(rees.element_index(i, l)).unwrap();
                prop_assert!(i_map[i].is_none_or(|x| x == i2));
                prop_assert!(l_map[l].is_none_or(|x| x == l2));
                i_map[i] = Some(i2);
                l_map[l] = Some(l2);
            }
        }
        for i in 0..ni {
            for l in 0..nl {
                prop_assert_eq!(report.rees.entry(l_map[l].unwrap(), i_map[i].unwrap()), w[l][i]);
            }
        }
    }

    #[test]
    fn nilpotent_specs_give_three_nilpotent_k_semigroups(seed in any::<u64>()) {
        let spec = random_nilpotent_spec(&mut seeded(seed), 3);
        let s = nilpotent_from_spec(&spec).unwrap();
        prop_assert!(s.elements().all(|x| s.elements().all(|y| s.elements().all(|z| s.is_zero(s.mul(s.mul(x, y), z))))));
        prop_assert!(nilpotency_degree(&s).is_some_and(|d| d <= 3));
        prop_assert!(is_categorical_at_zero(&s).is_ok());
        let ann = annihilators(&s);
        let named = |labels: &[String]| labels.iter().map(|l| s.index_of(l).unwrap()).collect::<ElementSet>();
        prop_assert_eq!(ann.left, named(&spec.c));
        prop_assert_eq!(ann.right, named(&spec.b));
    }

    #[test]
    fn categories_round_trip(seed in any::<u64>(), objects in 1usize..=3, extra in 0usize..=5) {
        let c = random_category(seed, objects, extra).unwrap();
        let s = semigroup_of_category(&c).unwrap();
        prop_assert!(is_categorical_at_zero(&s).is_ok());
        let report = decompose(&s).unwrap();
        prop_assert!(report.all_verified(), "{:?}", report.witnesses);
        prop_assert!(report.annihilators.quasi.is_zero_set(&s));
        let items = category_interpretation_check(&s, &c, &report);
        prop_assert!(items.iter().all(|i| i.passed), "{:?}", items);
    }

    #[test]
    fn mor_extensions_are_categorical(seed in any::<u64>(), objects in 1usize..=3, extra in 0usize..=5, pick in any::<u64>()) {
        let c = random_category(seed, objects, extra).unwrap();
        // Δ and D from bits of `pick`; objects with no arrow into Δ drop out of D
        let mut delta: Vec<usize> = (0..objects).filter(|o| pick >> o & 1 == 1).collect();
        if delta.is_empty() {
            delta.push(0);
        }
        let mut d = Vec::new();
        let mut epsilon = std::collections::BTreeMap::new();
        for a in (0..objects).filter(|o| pick >> (o + 8) & 1 == 1) {
            let into_delta: Vec<usize> = (0..c.morphism_count())
                .filter(|&f| c.arrow(f).dom == a && delta.contains(&c.arrow(f).cod))
                .collect();
            if into_delta.is_empty() {
                continue;
            }
            let e = into_delta[(pick >> 16) as usize % into_delta.len()];
            d.push(a);
            epsilon.insert(c.objects()[a].clone(), c.name(e).to_string());
        }
        let doc = kseg_core::construct::MorExtensionDoc {
            category: c.to_doc(),
            delta: delta.iter().map(|&o| c.objects()[o].clone()).collect(),
            d: d.iter().map(|&o| c.objects()[o].clone()).collect(),
            epsilon,
        };
        let spec = MorExtensionSpec::from_doc(&doc).unwrap();
        let s = mor_extension(&spec).unwrap();
        prop_assert!(is_categorical_at_zero(&s).is_ok());
        // the closed form for Ann_l needs every a in D to receive an arrow from Δ
        let reachable = d.iter().all(|&a| delta.iter().any(|&x| !c.hom(x, a).is_empty()));
        if reachable {
            prop_assert!(compare_annihilators(&spec, &s).left_matches());
        }
    }
}
