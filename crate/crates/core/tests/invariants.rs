mod common;

use proptest::prelude::*;

use common::{mask_of, Oracle};
use homrec::coloring::{h_equivalent, hom_sets, hom_signature, Coloring, EdgeSet};
use homrec::critical::{find_critical_cycles, find_critical_pairs, is_critical_pair};
use homrec::dot::to_dot;
use homrec::reconstruct::{in_r, is_valid_difference, r_value, SearchBudget, SearchMode, Verdict};
use homrec::structure::{components, find_claw, ComponentKind};

fn coloring(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Coloring> {
    n.prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2)
            .prop_map(move |bits| Coloring::from_bits(n, &bits).unwrap())
    })
}

fn coloring_and_set(
    n: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Coloring, EdgeSet)> {
    coloring(n).prop_flat_map(|c| {
        let n = c.n();
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let d = EdgeSet::from_indices(
                n,
                bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i),
            )
            .unwrap();
            (c.clone(), d)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn local_criterion_matches_reference((phi, d) in coloring_and_set(3..=9)) {
        let oracle = Oracle::new(phi.n());
        let expected = oracle.valid(mask_of(&phi), mask_of(&d.to_coloring()));
        prop_assert_eq!(is_valid_difference(&phi, &d).unwrap(), expected);
        prop_assert_eq!(h_equivalent(&phi, &phi.flipped(&d).unwrap()).unwrap(), expected);
    }

    #[test]
    fn validity_is_complement_symmetric((phi, d) in coloring_and_set(3..=10)) {
        let v = is_valid_difference(&phi, &d).unwrap();
        prop_assert_eq!(is_valid_difference(&phi, &d.complement()).unwrap(), v);
        prop_assert_eq!(is_valid_difference(&phi.complement(), &d).unwrap(), v);
    }

    #[test]
    fn validity_is_relabeling_invariant((phi, d) in coloring_and_set(4..=8), seed in any::<u64>()) {
        let n = phi.n();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left((seed % n as u64) as usize);
        perm.swap(0, (seed / 7 % n as u64) as usize);
        let phi2 = Coloring::from_fn(n, |x, y| {
            let (a, b) = (perm.iter().position(|&v| v == x).unwrap(), perm.iter().position(|&v| v == y).unwrap());
            phi.color(a, b) == 1
        }).unwrap();
        let d2 = d.embed(n, &perm).unwrap();
        prop_assert_eq!(is_valid_difference(&phi2, &d2).unwrap(), is_valid_difference(&phi, &d).unwrap());
    }

    #[test]
    fn signature_commutes_with_restriction(phi in coloring(4..=9), keep in any::<u16>()) {
        let subset: Vec<usize> = (0..phi.n()).filter(|&v| keep >> v & 1 == 1).collect();
        prop_assume!(subset.len() >= 3);
        let direct = hom_signature(&phi.restrict(&subset).unwrap()).unwrap();
        let projected = hom_signature(&phi).unwrap().project_to(&subset).unwrap();
        prop_assert_eq!(direct, projected);
    }

    #[test]
    fn single_pair_flip_valid_iff_critical(phi in coloring(3..=10)) {
        let pairs = find_critical_pairs(&phi).unwrap();
        for y in 0..phi.n() {
            for x in 0..y {
                let d = EdgeSet::from_pairs(phi.n(), [(x, y)]).unwrap();
                let valid = is_valid_difference(&phi, &d).unwrap();
                prop_assert_eq!(valid, is_critical_pair(&phi, x, y).unwrap());
                prop_assert_eq!(valid, pairs.contains(&(x, y)));
            }
        }
    }

    #[test]
    fn critical_cycles_are_valid_four_cycles(phi in coloring(5..=9)) {
        for w in find_critical_cycles(&phi).unwrap() {
            prop_assert_eq!(w.edges.len(), 4);
            prop_assert!(is_valid_difference(&phi, &w.edges).unwrap());
            let comps = components(&w.edges);
            prop_assert_eq!(comps.len(), 1);
            prop_assert_eq!(comps[0].kind, ComponentKind::EvenCycle);
            for (x, y) in w.edges.iter() {
                prop_assert!(!is_critical_pair(&phi, x, y).unwrap());
            }
        }
    }

    #[test]
    fn r_value_matches_reference(phi in coloring(3..=6)) {
        let oracle = Oracle::new(phi.n());
        let report = r_value(&phi, SearchMode::Exhaustive).unwrap();
        prop_assert!(report.complete);
        prop_assert_eq!(report.r.finite(), oracle.r(mask_of(&phi)));
        for w in &report.witnesses {
            prop_assert!(!w.trivial);
            prop_assert_eq!(Some(w.size()), report.r.finite());
            prop_assert!(is_valid_difference(&phi, &w.difference).unwrap());
        }
    }

    #[test]
    fn in_r_witness_is_valid(phi in coloring(3..=7)) {
        let m = in_r(&phi, &SearchBudget::default()).unwrap();
        let oracle = Oracle::new(phi.n());
        prop_assert_eq!(m.verdict == Verdict::InR, oracle.r(mask_of(&phi)).is_none());
        if let Some(w) = m.witness {
            prop_assert!(!w.trivial);
            prop_assert!(h_equivalent(&phi, &w.apply(&phi).unwrap()).unwrap());
        }
    }

    #[test]
    fn components_partition_the_edges_and_bound_claws((_, d) in coloring_and_set(2..=12)) {
        let comps = components(&d);
        let total: usize = comps.iter().map(|c| c.edge_count).sum();
        prop_assert_eq!(total, d.len());
        for (i, a) in comps.iter().enumerate() {
            for b in &comps[i + 1..] {
                prop_assert!(a.vertices.iter().all(|v| !b.contains(*v)));
            }
        }
        let claw = find_claw(&d).unwrap_or(None);
        if comps.iter().all(|c| matches!(c.kind, ComponentKind::Path | ComponentKind::EvenCycle)) {
            prop_assert!(claw.is_none());
        }
    }

    #[test]
    fn hom_sets_match_subset_enumeration(phi in coloring(3..=9)) {
        let got: Vec<(Vec<usize>, u8)> = hom_sets(&phi, 3).unwrap().into_iter().map(|h| (h.vertices, h.color)).collect();
        prop_assert_eq!(got, common::brute_hom_sets(&phi));
    }

    #[test]
    fn json_roundtrips(phi in coloring(2..=14)) {
        prop_assert_eq!(Coloring::from_json(&phi.to_json()).unwrap(), phi.clone());
        let hex = phi.to_hex_json().to_string();
        prop_assert_eq!(Coloring::from_json(&hex).unwrap(), phi.clone());
        prop_assert_eq!(Coloring::from_bits_hex(phi.n(), &phi.to_bits_hex()).unwrap(), phi);
    }

    #[test]
    fn dot_lists_every_pair(phi in coloring(2..=8)) {
        let dot = to_dot(&phi, None);
        let p = phi.n() * (phi.n() - 1) / 2;
        prop_assert_eq!(dot.matches(" -- ").count(), p);
        prop_assert_eq!(dot.matches("color=black").count(), phi.count_ones());
    }
}
