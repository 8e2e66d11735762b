//! Structural invariants across the combinatorial layers: the 2-torsion group
//! is small enough that most properties are checked exhaustively; the
//! arithmetic layer gets a seeded sweep.

use proptest::prelude::*;

use kleincover_core::f2sym::{
    classify_subgroup, enumerate_klein_subgroups, enumerate_two_torsion, CaseLabel, KleinSubgroup,
    TwoTorsion,
};
use kleincover_core::tower::{
    build_tower, fixed_point_table, lift_generators, prym_summary, quotient_genus, DeckElement,
    DeckSubgroup,
};
use kleincover_core::verify::{verify_config, BranchAssignment, VerifyOptions};

#[test]
fn weil_pairing_is_bilinear_everywhere() {
    let all = enumerate_two_torsion();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                let left = a.add(b).weil_pairing(c);
                let right = a.weil_pairing(c) ^ b.weil_pairing(c);
                assert_eq!(left, right);
            }
        }
    }
}

#[test]
fn weil_pairing_is_nondegenerate() {
    let all = enumerate_two_torsion();
    for &a in &all {
        if a.is_zero() {
            continue;
        }
        assert!(
            all.iter().any(|&b| a.weil_pairing(b) == 1),
            "{a} pairs to zero with everything"
        );
    }
}

#[test]
fn canonicalization_is_complement_independent() {
    for raw in 0u16..256 {
        let raw = raw as u8;
        if raw.count_ones() % 2 != 0 {
            assert!(TwoTorsion::from_mask(raw).is_err());
            continue;
        }
        let a = TwoTorsion::from_mask(raw).unwrap();
        let b = TwoTorsion::from_mask(!raw).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn group_law_is_associative_and_self_inverse() {
    let all = enumerate_two_torsion();
    for &a in &all {
        assert_eq!(a.add(a), TwoTorsion::ZERO);
        for &b in &all {
            assert_eq!(a.add(b), b.add(a));
        }
    }
    // Associativity follows from the mask representation, but check a full
    // slice anyway.
    for &a in &all[..16] {
        for &b in &all {
            for &c in &all {
                assert_eq!(a.add(b).add(c), a.add(b.add(c)));
            }
        }
    }
}

#[test]
fn classification_ignores_representative_choice() {
    // Rebuilding each subgroup from complemented raw generators must not
    // change its component.
    for k in enumerate_klein_subgroups() {
        let [a, b, _] = k.elements();
        let case = classify_subgroup(&k).unwrap();
        for flip in 0..4u8 {
            let ra = if flip & 1 != 0 { !a.mask() } else { a.mask() };
            let rb = if flip & 2 != 0 { !b.mask() } else { b.mask() };
            let ka = TwoTorsion::from_mask(ra).unwrap();
            let kb = TwoTorsion::from_mask(rb).unwrap();
            let rebuilt = KleinSubgroup::new(ka, kb).unwrap();
            assert_eq!(rebuilt, k);
            assert_eq!(classify_subgroup(&rebuilt).unwrap().label, case.label);
        }
    }
}

#[test]
fn riemann_hurwitz_agrees_with_characters_for_all_subgroups() {
    for k in enumerate_klein_subgroups() {
        let t = lift_generators(&k);
        let table = fixed_point_table(t);
        assert_eq!(table.iter().sum::<u32>(), 32);
        for g in 4..8u8 {
            let sub = DeckSubgroup::generated_by(&[DeckElement(g)]);
            // quotient_genus errors out if the two genus routes disagree.
            let genus = quotient_genus(sub, t).unwrap();
            assert_eq!(genus, (20 - table[g as usize]) / 4);
        }
    }
}

#[test]
fn prym_metadata_invariants_for_all_subgroups() {
    for k in enumerate_klein_subgroups() {
        let tower = build_tower(&k).unwrap();
        let summary = prym_summary(&tower);
        let dims: u32 = summary.components.iter().map(|c| c.dimension).sum();
        assert_eq!(dims, 6);
        assert_eq!(dims + tower.nodes[tower.h_node()].genus, 9);
        let expected = if tower.case.isotropic {
            [1, 1, 1, 2, 2, 4]
        } else {
            [1, 1, 1, 1, 4, 4]
        };
        assert_eq!(summary.prym_polarization, expected);
        assert!(tower.nodes[tower.h_node()].starred);
    }
}

#[test]
fn character_subsets_are_distinct_nonempty_and_closed() {
    for k in enumerate_klein_subgroups() {
        let t = lift_generators(&k);
        let subsets: Vec<u8> = t.character_subsets().iter().map(|(_, s)| *s).collect();
        for &s in &subsets {
            assert!(s != 0);
            assert_eq!(s.count_ones() % 2, 0);
        }
        let mut dedup = subsets.clone();
        dedup.sort_unstable();
        dedup.dedup();
        assert_eq!(dedup.len(), 7);
        // Closure under symmetric difference together with the empty set.
        for &a in &subsets {
            for &b in &subsets {
                assert!(a == b || subsets.contains(&(a ^ b)));
            }
        }
        // The full-set character is always present.
        assert!(subsets.contains(&0xff));
    }
}

#[test]
fn verify_passes_for_canonical_cases_at_small_depth() {
    let opts = VerifyOptions {
        max_q_exp: 2,
        tamper: None,
    };
    for case in CaseLabel::ALL {
        for seed in [1u64, 2, 3] {
            let b = BranchAssignment::random(11, seed).unwrap();
            let report = verify_config(&case.canonical_subgroup(), &b, &opts).unwrap();
            assert!(
                report.pass,
                "case {case} seed {seed}: {:?}",
                report.failures().collect::<Vec<_>>()
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// Any Klein subgroup over any seeded branch assignment passes the
    /// depth-2 identity battery.
    #[test]
    fn verify_passes_for_random_subgroups(index in 0usize..651, seed in 0u64..1000) {
        let subgroups = enumerate_klein_subgroups();
        let k = subgroups[index];
        let b = BranchAssignment::random(13, seed).unwrap();
        let opts = VerifyOptions { max_q_exp: 2, tamper: None };
        let report = verify_config(&k, &b, &opts).unwrap();
        prop_assert!(report.pass);
    }
}
