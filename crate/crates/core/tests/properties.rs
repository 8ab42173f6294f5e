mod common;

use std::sync::OnceLock;

use proptest::prelude::*;

use camina_core::camina::{analyze_center_pair, AnalysisOptions};
use camina_core::corpus::{parse_corpus, write_entry, FamilySpec, GroupLabel};
use camina_core::report::run_harness;
use camina_core::{ElementId, FiniteGroup, Permutation};
use common::*;

fn corpus() -> &'static [(GroupLabel, FiniteGroup)] {
    static CORPUS: OnceLock<Vec<(GroupLabel, FiniteGroup)>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        let mut all = library("upto64.grp");
        all.extend(families(128));
        all
    })
}

fn group_index() -> impl Strategy<Value = usize> {
    0..corpus().len()
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=degree).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(&images).unwrap())
}

fn family_spec() -> impl Strategy<Value = FamilySpec> {
    let p = prop::sample::select(vec![2usize, 3, 5]);
    let leaf = prop_oneof![
        (1usize..40).prop_map(FamilySpec::Cyclic),
        (1usize..20).prop_map(|n| FamilySpec::Dihedral(2 * n)),
        (3u32..6).prop_map(|k| FamilySpec::Quaternion(1 << k)),
        (p.clone(), 1u32..3).prop_map(|(p, k)| FamilySpec::ElementaryAbelian { p, k }),
        (p.clone(), 1u32..3).prop_map(|(p, r)| FamilySpec::ExtraspecialExpP { p, r }),
        (p.clone(), 1u32..3).prop_map(|(p, r)| FamilySpec::ExtraspecialExpP2 { p, r }),
        (p.clone(), 1u32..3).prop_map(|(p, k)| FamilySpec::Heisenberg { p, k }),
        (p, 1u32..3).prop_map(|(p, k)| FamilySpec::T { p, k }),
    ];
    prop_oneof![
        3 => leaf.clone(),
        1 => prop::collection::vec(leaf, 2..4).prop_map(FamilySpec::DirectProduct),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbit_stabilizer(gi in group_index(), xi in any::<prop::sample::Index>()) {
        let (_, g) = &corpus()[gi];
        let x = ElementId::from(xi.index(g.order()));
        let classes = g.conjugacy_classes();
        let size = classes.class(classes.class_of(x)).len();
        prop_assert_eq!(size * g.centralizer(x).order(), g.order());
        prop_assert_eq!(g.centralizer(x).order(), centralizer_order(g, x.index()));
    }

    #[test]
    fn quotient_projection_is_a_homomorphism(
        gi in group_index(),
        which in 0usize..3,
        a in any::<prop::sample::Index>(),
        b in any::<prop::sample::Index>(),
    ) {
        let (_, g) = &corpus()[gi];
        let n = match which {
            0 => g.center(),
            1 => g.derived_subgroup(),
            _ => g.normal_closure([ElementId::from(a.index(g.order()))]),
        };
        let q = g.quotient(&n).unwrap();
        prop_assert_eq!(q.group.order() * n.order(), g.order());
        let (x, y) = (ElementId::from(a.index(g.order())), ElementId::from(b.index(g.order())));
        prop_assert_eq!(q.project(g.mul(x, y)), q.group.mul(q.project(x), q.project(y)));
        prop_assert_eq!(q.project(x).is_identity(), n.contains(x));
    }

    #[test]
    fn closure_is_deterministic_and_a_group(gens in prop::collection::vec(permutation(6), 0..3)) {
        let a = FiniteGroup::from_generators(6, &gens, 720).unwrap();
        let b = FiniteGroup::from_generators(6, &gens, 720).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(720 % a.order(), 0);
        prop_assert!(a.check_associativity_exhaustive().is_none());
        prop_assert_eq!(identity(&a), 0);
        for x in 0..a.order() {
            prop_assert_eq!(a.order() % order_of(&a, x), 0);
        }
    }

    #[test]
    fn family_specs_round_trip(spec in family_spec()) {
        let text = spec.to_string();
        let back: FamilySpec = text.parse().unwrap();
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.order(), spec.order());
    }

    #[test]
    fn serialized_groups_parse_back_identically(gi in group_index()) {
        let (label, g) = &corpus()[gi];
        let text = write_entry((g.order(), 1), &label.to_string(), g);
        let entries = parse_corpus(&text, 2048).unwrap();
        prop_assert_eq!(entries.len(), 1);
        prop_assert_eq!(entries[0].group.order(), g.order());
        let again = write_entry((g.order(), 1), &label.to_string(), &entries[0].group);
        prop_assert_eq!(again, text);
    }

    #[test]
    fn analysis_is_deterministic(gi in group_index()) {
        let (_, g) = &corpus()[gi];
        let opts = AnalysisOptions::default();
        let a = analyze_center_pair(g, &opts).map(|a| (a.verdict.holds(), a.report.map(|r| format!("{r:?}"))));
        let b = analyze_center_pair(g, &opts).map(|a| (a.verdict.holds(), a.report.map(|r| format!("{r:?}"))));
        prop_assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}

#[test]
fn built_families_have_declared_orders() {
    for (label, g) in families(625) {
        let GroupLabel::Family(s) = &label else { unreachable!() };
        let spec: FamilySpec = s.parse().unwrap();
        assert_eq!(spec.order(), Some(g.order()), "{label}");
    }
}

#[test]
fn harness_is_independent_of_worker_count() {
    let groups: Vec<(GroupLabel, FiniteGroup)> = corpus()
        .iter()
        .filter(|(_, g)| g.order() == 32 || g.order() == 27)
        .cloned()
        .collect();
    let opts = AnalysisOptions::default();
    let one = run_harness(&groups, 1, &opts).unwrap();
    let four = run_harness(&groups, 4, &opts).unwrap();
    assert_eq!(camina_core::report::tsv(&one), camina_core::report::tsv(&four));
}
