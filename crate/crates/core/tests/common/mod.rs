//! Brute-force oracles that read nothing but the multiplication table.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use camina_core::corpus::{builtin_families, parse_corpus, GroupLabel};
use camina_core::{ElementId, FiniteGroup};

pub fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

pub fn library(name: &str) -> Vec<(GroupLabel, FiniteGroup)> {
    parse_corpus(&fixture(name), 2048)
        .unwrap()
        .into_iter()
        .map(|e| (e.label(), e.group))
        .collect()
}

pub fn families(max_order: usize) -> Vec<(GroupLabel, FiniteGroup)> {
    builtin_families(max_order)
        .into_iter()
        .map(|s| (GroupLabel::Family(s.to_string()), s.build(4096).unwrap()))
        .collect()
}

pub fn family(spec: &str) -> FiniteGroup {
    spec.parse::<camina_core::corpus::FamilySpec>()
        .unwrap()
        .build(4096)
        .unwrap()
}

pub fn el(i: usize) -> ElementId {
    ElementId(i as u32)
}

pub fn m(g: &FiniteGroup, a: usize, b: usize) -> usize {
    g.mul(el(a), el(b)).index()
}

pub fn identity(g: &FiniteGroup) -> usize {
    (0..g.order())
        .find(|&e| (0..g.order()).all(|x| m(g, e, x) == x))
        .unwrap()
}

pub fn inverse(g: &FiniteGroup, x: usize) -> usize {
    let e = identity(g);
    (0..g.order()).find(|&y| m(g, x, y) == e).unwrap()
}

pub fn inverses(g: &FiniteGroup) -> Vec<usize> {
    let e = identity(g);
    (0..g.order())
        .map(|x| (0..g.order()).find(|&y| m(g, x, y) == e).unwrap())
        .collect()
}

pub fn order_of(g: &FiniteGroup, x: usize) -> usize {
    let e = identity(g);
    let mut y = x;
    let mut k = 1;
    while y != e {
        y = m(g, y, x);
        k += 1;
    }
    k
}

/// Repeated multiplication until nothing new appears.
pub fn closure(g: &FiniteGroup, seeds: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = seeds.iter().copied().collect();
    set.insert(identity(g));
    loop {
        let items: Vec<usize> = set.iter().copied().collect();
        let mut grew = false;
        for &a in &items {
            for &b in &items {
                grew |= set.insert(m(g, a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

pub fn commutator(g: &FiniteGroup, inv: &[usize], x: usize, y: usize) -> usize {
    m(g, m(g, m(g, inv[x], inv[y]), x), y)
}

pub fn center(g: &FiniteGroup) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&z| (0..g.order()).all(|x| m(g, z, x) == m(g, x, z)))
        .collect()
}

pub fn derived(g: &FiniteGroup) -> BTreeSet<usize> {
    let inv = inverses(g);
    let comms: BTreeSet<usize> = (0..g.order())
        .flat_map(|x| (0..g.order()).map(move |y| (x, y)))
        .map(|(x, y)| commutator(g, &inv, x, y))
        .collect();
    closure(g, &comms.into_iter().collect::<Vec<_>>())
}

pub fn conjugacy_class(g: &FiniteGroup, inv: &[usize], x: usize) -> BTreeSet<usize> {
    (0..g.order()).map(|y| m(g, m(g, inv[y], x), y)).collect()
}

pub fn class_partition(g: &FiniteGroup) -> BTreeSet<BTreeSet<usize>> {
    let inv = inverses(g);
    (0..g.order()).map(|x| conjugacy_class(g, &inv, x)).collect()
}

pub fn centralizer_order(g: &FiniteGroup, x: usize) -> usize {
    (0..g.order()).filter(|&y| m(g, x, y) == m(g, y, x)).count()
}

/// Camina pair by definition: every `x` outside `N` is conjugate to all of `xN`.
pub fn camina_pair(g: &FiniteGroup, n: &BTreeSet<usize>) -> bool {
    let inv = inverses(g);
    (0..g.order()).filter(|x| !n.contains(x)).all(|x| {
        let cls = conjugacy_class(g, &inv, x);
        n.iter().all(|&k| cls.contains(&m(g, x, k)))
    })
}
