//! Library results against brute-force recomputation from the Cayley table.

mod common;

use std::collections::BTreeSet;

use camina_core::camina::{
    analyze_center_pair, camina_by_centralizers, camina_by_characters, camina_by_classes, camina_by_commutators,
    census, script_c, search_counterexample, AnalysisOptions, Predicate,
};
use camina_core::characters::{class_mult_coefficients, dixon_character_table, irr_over, verify_fully_ramified};
use camina_core::corpus::GroupLabel;
use camina_core::structure::{
    d_subgroup, lower_central_series, nilpotency_class, quotient_exponent_over_center, upper_central_series,
    Nilpotency, QuotientExponent,
};
use camina_core::{FiniteGroup, Permutation, Subgroup};
use common::*;

fn members(s: &Subgroup) -> BTreeSet<usize> {
    s.members().iter().map(|x| x.index()).collect()
}

fn subgroup(g: &FiniteGroup, set: &BTreeSet<usize>) -> Subgroup {
    g.subgroup_generate(set.iter().map(|&i| el(i)))
}

/// Unit quaternions as (sign, unit) with unit 0..4 = 1, i, j, k.
fn quaternion_mul(a: (i8, usize), b: (i8, usize)) -> (i8, usize) {
    // products of units: table[u][v] = (sign, unit)
    const T: [[(i8, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let (s, u) = T[a.1][b.1];
    (a.0 * b.0 * s, u)
}

fn q8_elements() -> Vec<(i8, usize)> {
    [1i8, -1].iter().flat_map(|&s| (0..4).map(move |u| (s, u))).collect()
}

/// `Q8` generated by right multiplication by `i` and `j` on its own elements.
fn q8_regular() -> FiniteGroup {
    let elems = q8_elements();
    let pos = |q: (i8, usize)| elems.iter().position(|&e| e == q).unwrap();
    let right = |r: (i8, usize)| {
        let images: Vec<usize> = elems.iter().map(|&x| pos(quaternion_mul(x, r)) + 1).collect();
        Permutation::from_images(&images).unwrap()
    };
    FiniteGroup::from_generators(8, &[right((1, 1)), right((1, 2))], 100).unwrap()
}

#[test]
fn q8_from_regular_generators() {
    let g = q8_regular();
    assert_eq!(g.order(), 8);
    let involutions = (0..8).filter(|&x| order_of(&g, x) == 2).count();
    assert_eq!(involutions, 1);
    assert_eq!(g.exponent(), 4);
    assert_eq!(members(&g.center()), center(&g));
    assert_eq!(center(&g).len(), 2);
    assert_eq!(members(&g.derived_subgroup()), derived(&g));
    let minus_one = (0..8).find(|&x| order_of(&g, x) == 2).unwrap();
    let (i, j) = (g.generators()[0], g.generators()[1]);
    assert_eq!(g.commutator(i, j).index(), minus_one);
    assert_eq!(g.element_order(el(minus_one)), 2);
    assert_eq!(g.centralizer(i).order(), centralizer_order(&g, i.index()));
    assert_eq!(g.centralizer(i).order(), 4);
    assert!(g.is_normal(&g.subgroup_generate([i])));
    let mut sizes = g.conjugacy_classes().sizes();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 2, 2, 2]);
}

#[test]
fn q8_agrees_with_family_builder() {
    let a = q8_regular();
    let b = family("quaternion:8");
    assert_eq!(a.conjugacy_classes().sizes().len(), b.conjugacy_classes().sizes().len());
    let v = analyze_center_pair(&a, &AnalysisOptions::default()).unwrap();
    let r = v.report.unwrap();
    assert_eq!((r.p, r.n, r.m, r.l), (2, 2, 1, 0));
    let q = a.quotient(&a.center()).unwrap();
    assert_eq!(q.group.order(), 4);
    assert_eq!(q.group.exponent(), 2);
}

#[test]
fn basic_invariants_match_brute_force_up_to_order_32() {
    for (label, g) in library("upto64.grp").iter().filter(|(_, g)| g.order() <= 32) {
        assert_eq!(members(&g.center()), center(g), "{label}");
        assert_eq!(members(&g.derived_subgroup()), derived(g), "{label}");
        let partition: BTreeSet<BTreeSet<usize>> = g
            .conjugacy_classes()
            .classes()
            .iter()
            .map(|c| c.iter().map(|x| x.index()).collect())
            .collect();
        assert_eq!(partition, class_partition(g), "{label}");
        let exp = (0..g.order()).map(|x| order_of(g, x)).fold(1, num_lcm);
        assert_eq!(g.exponent(), exp, "{label}");
        for x in g.elements() {
            assert_eq!(g.centralizer(x).order(), centralizer_order(g, x.index()), "{label}");
            assert_eq!(g.inv(x).index(), inverse(g, x.index()));
        }
    }
}

fn num_lcm(a: usize, b: usize) -> usize {
    let mut x = a;
    let mut y = b;
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

#[test]
fn camina_verdicts_match_definition_on_every_group_up_to_64() {
    for (label, g) in library("upto64.grp") {
        let z = center(&g);
        if z.len() > 1 && z.len() < g.order() {
            let zs = g.center();
            let expected = camina_pair(&g, &z);
            assert_eq!(camina_by_classes(&g, &zs).unwrap().holds, expected, "{label}");
            assert_eq!(camina_by_commutators(&g, &zs).unwrap().holds, expected, "{label}");
            assert_eq!(camina_by_centralizers(&g, &zs).unwrap().holds, expected, "{label}");
        }
        let d = derived(&g);
        if d.len() > 1 && d.len() < g.order() {
            let ds = g.derived_subgroup();
            assert_eq!(
                camina_by_classes(&g, &ds).unwrap().holds,
                camina_pair(&g, &d),
                "{label} G'"
            );
        }
    }
}

#[test]
fn small_pair_examples() {
    let s3 = family("dihedral:6");
    let a3 = s3.derived_subgroup();
    assert_eq!(a3.order(), 3);
    assert!(camina_by_classes(&s3, &a3).unwrap().holds);
    assert!(camina_pair(&s3, &members(&a3)));
    let reflection = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
    assert!(!s3.is_normal(&s3.subgroup_generate([reflection])));
    assert!(camina_by_classes(&s3, &s3.subgroup_generate([reflection])).is_err());
    assert_eq!(nilpotency_class(&s3), Nilpotency::NotNilpotent);

    let c4 = family("cyclic:4");
    let square = c4.subgroup_generate([c4.pow(c4.generators()[0], 2)]);
    assert!(!camina_by_classes(&c4, &square).unwrap().holds);

    let v4 = family("elementary_abelian:2,2");
    let x = v4.subgroup_generate([v4.generators()[0]]);
    assert!(!camina_by_commutators(&v4, &x).unwrap().holds);

    let d8 = family("dihedral:8");
    assert!(camina_by_commutators(&d8, &d8.center()).unwrap().holds);
}

#[test]
fn c3_times_s3_fails_centralizer_and_character_criteria() {
    let g = family("cyclic:3*dihedral:6");
    let z = g.center();
    assert_eq!(members(&z), center(&g));
    assert_eq!(z.order(), 3);
    assert!(!camina_pair(&g, &members(&z)));
    assert!(!camina_by_centralizers(&g, &z).unwrap().holds);
    let table = dixon_character_table(&g).unwrap();
    assert!(!camina_by_characters(&g, &z, &table).unwrap().holds);
    let r = verify_fully_ramified(&table, &g, &z);
    assert!(!r.holds);
    assert!(!r.vanishing);
    assert!(r.witness.is_some());
}

#[test]
fn heisenberg_27() {
    let g = family("heisenberg:3");
    assert_eq!(g.order(), 27);
    assert_eq!(g.exponent(), 3);
    let z = center(&g);
    assert_eq!(z.len(), 3);
    assert_eq!(z, derived(&g));
    for x in g.elements().filter(|x| !z.contains(&x.index())) {
        let c = g.centralizer(x);
        assert_eq!(c.order(), 9);
        assert!(c
            .members()
            .iter()
            .all(|&a| c.members().iter().all(|&b| g.commutes(a, b))));
        assert_eq!(d_subgroup(&g, x, &g.center()).unwrap().order(), 27);
    }
    assert!(camina_by_centralizers(&g, &g.center()).unwrap().holds);
    assert_eq!(lower_central_series(&g).orders(), [27, 3, 1]);
    assert_eq!(
        quotient_exponent_over_center(&g),
        QuotientExponent::PrimePower { p: 3, n: 1 }
    );
    let table = dixon_character_table(&g).unwrap();
    let mut degrees = table.degrees.clone();
    degrees.sort();
    assert_eq!(degrees, [1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3]);
    let over = irr_over(&table, &g, &g.center());
    assert_eq!(over.len(), 2);
    assert!(over.iter().all(|&chi| table.degrees[chi] == 3));
    assert!(verify_fully_ramified(&table, &g, &g.center()).holds);
}

#[test]
fn q8_character_oracles() {
    let g = q8_regular();
    let table = dixon_character_table(&g).unwrap();
    assert_eq!(table.modulus, 13);
    assert_eq!(table.degrees, [1, 1, 1, 1, 2]);
    let z = g.center();
    assert_eq!(irr_over(&table, &g, &z), [4]);
    assert!(irr_over(&table, &g, &Subgroup::trivial(&g)).is_empty());
    let r = verify_fully_ramified(&table, &g, &z);
    assert!(r.holds && r.vanishing && r.degree_square);

    // the class of i squared hits the identity class twice: i*i^-1 and (-i)*(-i)^-1
    let classes = g.conjugacy_classes();
    let coeffs = class_mult_coefficients(&g, &classes);
    let ci = classes.class_of(g.generators()[0]);
    assert_eq!(coeffs.get(ci, ci, classes.class_of(g.identity())), 2);
}

#[test]
fn class_coefficients_match_counting() {
    for (label, g) in library("upto64.grp").iter().filter(|(_, g)| g.order() <= 24) {
        let classes = g.conjugacy_classes();
        let a = class_mult_coefficients(g, &classes);
        let k = classes.len();
        for i in 0..k {
            for j in 0..k {
                for t in 0..k {
                    let target = classes.representative(t);
                    let count = classes
                        .class(i)
                        .iter()
                        .flat_map(|&x| classes.class(j).iter().map(move |&y| (x, y)))
                        .filter(|&(x, y)| g.mul(x, y) == target)
                        .count();
                    assert_eq!(a.get(i, j, t) as usize, count, "{label} ({i},{j},{t})");
                }
            }
        }
        let id = classes.class_of(g.identity());
        for j in 0..k {
            for t in 0..k {
                assert_eq!(a.get(id, j, t), u32::from(j == t));
            }
        }
    }
}

#[test]
fn character_tables_for_every_group_up_to_64() {
    for (label, g) in library("upto64.grp") {
        let table = dixon_character_table(&g).unwrap();
        table.check_orthogonality().unwrap();
        table.check_degrees().unwrap();
        assert_eq!(table.num_characters(), class_partition(&g).len(), "{label}");
        let sum: u64 = table.degrees.iter().map(|d| d * d).sum();
        assert_eq!(sum as usize, g.order(), "{label}");
        let identity_class = table.classes.iter().position(|(r, _)| r.is_identity()).unwrap();
        for (chi, &d) in table.degrees.iter().enumerate() {
            assert_eq!(table.value(chi, identity_class).as_integer(), Some(d as i64), "{label}");
        }
        // linear characters are the characters of G/G'
        let linear = table.degrees.iter().filter(|&&d| d == 1).count();
        assert_eq!(linear, g.order() / derived(&g).len(), "{label}");
        // the character criterion agrees with the definition over Z
        let z = center(&g);
        if z.len() > 1 && z.len() < g.order() {
            let by_chars = camina_by_characters(&g, &g.center(), &table).unwrap().holds;
            assert_eq!(by_chars, camina_pair(&g, &z), "{label}");
        }
    }
}

#[test]
fn upper_and_lower_series_of_q8() {
    let g = q8_regular();
    assert_eq!(lower_central_series(&g).orders(), [8, 2, 1]);
    assert_eq!(upper_central_series(&g).orders(), [1, 2, 8]);
    assert_eq!(nilpotency_class(&g), Nilpotency::Class(2));
    assert_eq!(nilpotency_class(&family("heisenberg:3*cyclic:3")), Nilpotency::Class(2));
}

#[test]
fn direct_product_of_heisenberg_and_cyclic() {
    let g = family("T:3,1");
    assert_eq!(g.order(), 81);
    assert_eq!(center(&g).len(), 9);
    let h = family("heisenberg:3");
    let c = family("cyclic:3");
    let p = FiniteGroup::direct_product(&h, &c, 4096).unwrap();
    assert_eq!(p.center().order(), h.center().order() * c.center().order());
}

#[test]
fn d_subgroup_is_proper_outside_z2_in_class_three() {
    let lib = library("pgroups_extra.grp");
    let (label, g) = lib
        .iter()
        .find(|(_, g)| g.order() == 81 && nilpotency_class(g) == Nilpotency::Class(3))
        .unwrap();
    let z = g.center();
    let z2 = upper_central_series(g).terms[1].clone();
    let inv = inverses(g);
    let x = g.elements().find(|&x| !z2.contains(x)).unwrap();
    let d = d_subgroup(g, x, &z).unwrap();
    let brute: BTreeSet<usize> = (0..g.order())
        .filter(|&y| z.contains(el(commutator(g, &inv, x.index(), y))))
        .collect();
    assert_eq!(members(&d), brute, "{label}");
    assert!(d.order() < g.order(), "{label}");
    assert!(d_subgroup(g, g.identity(), &z).is_err());
}

#[test]
fn script_c_matches_both_characterizations() {
    let mut seen = 0;
    for (label, g) in library("upto64.grp") {
        let z = g.center();
        let d = g.derived_subgroup();
        if !(z.is_subset_of(&d) && z.order() < d.order()) {
            assert!(script_c(&g, &z, &d).is_err());
            continue;
        }
        seen += 1;
        let c = script_c(&g, &z, &d).unwrap();
        assert!(c.matches_union, "{label}");
        let dset = members(&d);
        let brute: BTreeSet<usize> = (0..g.order())
            .filter(|&x| {
                let inter = dset.iter().filter(|&&y| m(&g, x, y) == m(&g, y, x)).count();
                inter > z.order()
            })
            .collect();
        let got: BTreeSet<usize> = c.members.iter().map(|x| x.index()).collect();
        assert_eq!(got, brute, "{label}");
        assert!(dset.is_subset(&got), "{label}");
        let cd = members(&g.centralizer_of_subgroup(&d));
        assert!(cd.is_subset(&got), "{label}");
    }
    assert!(seen > 50);
}

#[test]
fn census_small_orders() {
    let lib = library("upto64.grp");
    let r8 = census(&lib, Some(8), Predicate::CenterPair, 2).unwrap();
    assert_eq!(r8.scanned, 5);
    assert_eq!(r8.hits, [lib_label(8, 3), lib_label(8, 4)]);
    let r16 = census(&lib, Some(16), Predicate::CenterPairNotCaminaGroup, 2).unwrap();
    assert_eq!(r16.scanned, 14);
    assert!(r16.hits.is_empty());
    let r32 = census(&lib, Some(32), Predicate::CenterPairNotCaminaGroup, 2).unwrap();
    let want: Vec<GroupLabel> = [6, 7, 8, 43, 44].iter().map(|&i| lib_label(32, i)).collect();
    assert_eq!(r32.hits, want);
    for label in &r32.hits {
        let g = &lib.iter().find(|(l, _)| l == label).unwrap().1;
        assert_eq!(center(g).len(), 2);
        assert!(camina_pair(g, &center(g)));
        assert!(!camina_pair(g, &derived(g)));
        let sub = subgroup(g, &center(g));
        assert_eq!(sub.index(), 16);
    }
}

fn lib_label(order: usize, index: usize) -> GroupLabel {
    GroupLabel::Library { order, index }
}

#[test]
fn search_up_to_64_has_only_equality_cases() {
    let lib = library("upto64.grp");
    let r = search_counterexample(&lib, 64, 2, &AnalysisOptions::default()).unwrap();
    assert_eq!(r.scanned, lib.len());
    assert!(r.strict.is_empty());
    let eq: Vec<GroupLabel> = r.equality.iter().map(|(l, _)| l.clone()).collect();
    assert_eq!(
        &eq[..4],
        [lib_label(8, 3), lib_label(8, 4), lib_label(27, 3), lib_label(27, 4)]
    );
    for (label, rep) in &r.equality {
        let g = &lib.iter().find(|(l, _)| l == label).unwrap().1;
        let z = center(g).len();
        assert_eq!(z * z, g.order() / z, "{label}");
        assert_eq!(2 * rep.m, rep.n);
    }
}
