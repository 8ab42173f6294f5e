//! Central series, nilpotency class, and the subgroups `D(g)`.

use std::fmt;

use crate::error::GroupError;
use crate::group::{prime_power, ElementId, FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesKind {
    Lower,
    Upper,
}

/// Nilpotency class, or the fact that the group is not nilpotent.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl Nilpotency {
    pub fn class(self) -> Option<usize> {
        match self {
            Nilpotency::Class(c) => Some(c),
            Nilpotency::NotNilpotent => None,
        }
    }
}

impl fmt::Display for Nilpotency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Nilpotency::Class(c) => write!(f, "{c}"),
            Nilpotency::NotNilpotent => f.write_str("not nilpotent"),
        }
    }
}

/// Terms of a lower or upper central series, up to the point it stabilizes.
///
/// Lower: `terms[0] = G`, `terms[i+1] = [terms[i], G]`.
/// Upper: `terms[0] = 1`, `terms[i+1]/terms[i] = Z(G/terms[i])`.
#[derive(Clone, Debug)]
pub struct CentralSeries {
    pub kind: SeriesKind,
    pub terms: Vec<Subgroup>,
    pub class: Nilpotency,
}

impl CentralSeries {
    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(Subgroup::order).collect()
    }

    /// Term with 1-based numbering: `G_i` for the lower series
    /// (`G_1 = G`), `Z_i` for the upper series (`Z_0 = 1`).
    pub fn term(&self, i: usize) -> Option<&Subgroup> {
        match self.kind {
            SeriesKind::Lower => i.checked_sub(1).and_then(|j| self.terms.get(j)),
            SeriesKind::Upper => self.terms.get(i),
        }
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> CentralSeries {
    let whole = Subgroup::whole(g);
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        let next = g.commutator_subgroup(last, &whole);
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    let class = if terms.last().expect("nonempty").is_trivial() {
        Nilpotency::Class(terms.len() - 1)
    } else {
        Nilpotency::NotNilpotent
    };
    CentralSeries {
        kind: SeriesKind::Lower,
        terms,
        class,
    }
}

pub fn upper_central_series(g: &FiniteGroup) -> CentralSeries {
    let mut terms = vec![Subgroup::trivial(g)];
    loop {
        let last = terms.last().expect("nonempty");
        let q = g.quotient(last).expect("upper central terms are normal");
        let next = q.preimage(g, &q.group.center());
        if next.order() == last.order() {
            break;
        }
        terms.push(next);
    }
    let class = if terms.last().expect("nonempty").is_whole() {
        Nilpotency::Class(terms.len() - 1)
    } else {
        Nilpotency::NotNilpotent
    };
    CentralSeries {
        kind: SeriesKind::Upper,
        terms,
        class,
    }
}

/// Nilpotency class from both series. Panics if they disagree, which would
/// mean a bug in the series code rather than a property of the input.
pub fn nilpotency_class(g: &FiniteGroup) -> Nilpotency {
    let lower = lower_central_series(g).class;
    let upper = upper_central_series(g).class;
    assert_eq!(lower, upper, "lower and upper central series disagree");
    lower
}

/// `D(g) = { x : [g, x] in Z }` for a noncentral `g`.
pub fn d_subgroup(g: &FiniteGroup, x: ElementId, center: &Subgroup) -> Result<Subgroup, GroupError> {
    if center.contains(x) {
        return Err(GroupError::CentralElement(x));
    }
    let mask: Vec<bool> = g.elements().map(|y| center.contains(g.commutator(x, y))).collect();
    let d = g
        .subgroup_from_mask(mask)
        .expect("D(g) is the preimage of a centralizer in G/Z(G)");
    Ok(d)
}

/// Exponent of `G/Z(G)` as a prime power.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientExponent {
    /// `G/Z(G)` has exponent `p^n`, `n >= 1`.
    PrimePower {
        p: usize,
        n: u32,
    },
    /// `G` is abelian.
    Trivial,
    NotPGroup,
}

pub fn quotient_exponent_over_center(g: &FiniteGroup) -> QuotientExponent {
    let q = g.quotient(&g.center()).expect("center is normal");
    let e = q.group.exponent();
    if e == 1 {
        return QuotientExponent::Trivial;
    }
    match prime_power(e) {
        Some((p, n)) => QuotientExponent::PrimePower { p, n },
        None => QuotientExponent::NotPGroup,
    }
}

/// `[A, B] = 1`, checked on generators.
pub fn subgroups_commute(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> bool {
    a.generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.commutes(x, y)))
}

/// Exponent of the section `A/B` for `B` normal in `A`: the least `k` with
/// `x^k` in `B` for every `x` in `A`.
pub fn section_exponent(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> usize {
    a.members().iter().fold(1, |acc, &x| {
        let mut k = 1;
        let mut y = x;
        while !b.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        crate::group::lcm(acc, k)
    })
}
