use std::fmt;

use super::{ElementId, FiniteGroup};

/// A subgroup of some parent [`FiniteGroup`], stored as a sorted index set.
///
/// The parent is implicit: every operation taking a `Subgroup` also takes the
/// group it lives in. Equality compares member sets only.
#[derive(Clone)]
pub struct Subgroup {
    members: Vec<ElementId>,
    mask: Vec<bool>,
    generators: Vec<ElementId>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup(order {}, gens {:?})", self.members.len(), self.generators)
    }
}

impl Subgroup {
    pub fn trivial(parent: &FiniteGroup) -> Subgroup {
        let mut mask = vec![false; parent.order()];
        mask[0] = true;
        Subgroup {
            members: vec![ElementId::IDENTITY],
            mask,
            generators: Vec::new(),
        }
    }

    pub fn whole(parent: &FiniteGroup) -> Subgroup {
        Subgroup {
            members: parent.elements().collect(),
            mask: vec![true; parent.order()],
            generators: parent.generators().to_vec(),
        }
    }

    /// Wraps a membership mask without checking closure. Callers must know the
    /// set is a subgroup; [`FiniteGroup::is_subgroup_mask`] can confirm it.
    pub(crate) fn from_mask_unchecked(parent: &FiniteGroup, mask: Vec<bool>) -> Subgroup {
        let members: Vec<ElementId> = parent.elements().filter(|x| mask[x.index()]).collect();
        let generators = greedy_generators(parent, &members);
        Subgroup {
            members,
            mask,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn contains(&self, x: ElementId) -> bool {
        self.mask[x.index()]
    }

    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    /// A generating set; empty for the trivial subgroup.
    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// `|parent : self|`.
    pub fn index(&self) -> usize {
        self.mask.len() / self.members.len()
    }

    pub fn intersection(&self, parent: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let mask = self.mask.iter().zip(&other.mask).map(|(&a, &b)| a && b).collect();
        Subgroup::from_mask_unchecked(parent, mask)
    }
}

/// Incrementally grown subgroup used by [`FiniteGroup::subgroup_generate`].
struct Closure<'g> {
    group: &'g FiniteGroup,
    mask: Vec<bool>,
    members: Vec<ElementId>,
    generators: Vec<ElementId>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; group.order()];
        mask[0] = true;
        Closure {
            group,
            mask,
            members: vec![ElementId::IDENTITY],
            generators: Vec::new(),
        }
    }

    /// Replaces the current subgroup `H` by `<H, x>`.
    ///
    /// `<H, x>` is a union of right cosets `H k`; cosets are discovered by
    /// right-multiplying coset representatives with every generator, and each
    /// new coset is added whole.
    fn extend(&mut self, x: ElementId) {
        if self.mask[x.index()] {
            return;
        }
        self.generators.push(x);
        let h: Vec<ElementId> = self.members.clone();
        let mut reps = vec![ElementId::IDENTITY];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            for i in 0..self.generators.len() {
                let y = self.group.mul(r, self.generators[i]);
                if !self.mask[y.index()] {
                    for &hh in &h {
                        let z = self.group.mul(hh, y);
                        self.mask[z.index()] = true;
                        self.members.push(z);
                    }
                    reps.push(y);
                }
            }
            head += 1;
        }
    }

    fn finish(mut self) -> Subgroup {
        self.members.sort_unstable();
        Subgroup {
            members: self.members,
            mask: self.mask,
            generators: self.generators,
        }
    }
}

fn greedy_generators(group: &FiniteGroup, members: &[ElementId]) -> Vec<ElementId> {
    let mut c = Closure::new(group);
    for &x in members {
        if c.members.len() == members.len() {
            break;
        }
        c.extend(x);
    }
    c.generators
}

impl FiniteGroup {
    /// Smallest subgroup containing `seeds`.
    pub fn subgroup_generate<I>(&self, seeds: I) -> Subgroup
    where
        I: IntoIterator<Item = ElementId>,
    {
        let mut c = Closure::new(self);
        for x in seeds {
            c.extend(x);
        }
        c.finish()
    }

    /// True when the masked set is nonempty and closed under multiplication.
    pub fn is_subgroup_mask(&self, mask: &[bool]) -> bool {
        let members: Vec<ElementId> = self.elements().filter(|x| mask[x.index()]).collect();
        if members.is_empty() {
            return false;
        }
        let generated = self.subgroup_generate(members.iter().copied());
        generated.order() == members.len()
    }

    /// Builds a subgroup from a membership mask, returning `None` unless the
    /// set is closed under the group operation.
    pub fn subgroup_from_mask(&self, mask: Vec<bool>) -> Option<Subgroup> {
        if mask.len() != self.order() || !self.is_subgroup_mask(&mask) {
            return None;
        }
        Some(Subgroup::from_mask_unchecked(self, mask))
    }

    /// Subgroup generated by two subgroups; their product when one normalizes the other.
    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        self.subgroup_generate(a.generators().iter().chain(b.generators()).copied())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn s4() -> FiniteGroup {
        let gens = [
            Permutation::from_images(&[2, 3, 4, 1]).unwrap(),
            Permutation::from_images(&[2, 1, 3, 4]).unwrap(),
        ];
        FiniteGroup::from_generators(4, &gens, 100).unwrap()
    }

    #[test]
    fn empty_seed_gives_trivial() {
        let g = s4();
        let h = g.subgroup_generate([]);
        assert!(h.is_trivial());
        assert_eq!(h, Subgroup::trivial(&g));
    }

    #[test]
    fn generated_subgroups_obey_lagrange_and_closure() {
        let g = s4();
        for x in g.elements() {
            for y in g.elements().step_by(5) {
                let h = g.subgroup_generate([x, y]);
                assert_eq!(g.order() % h.order(), 0);
                for &a in h.members() {
                    assert!(h.contains(g.inv(a)));
                    for &b in h.members() {
                        assert!(h.contains(g.mul(a, b)));
                    }
                }
                assert_eq!(g.subgroup_generate(h.generators().iter().copied()), h);
            }
        }
        assert_eq!(g.subgroup_generate(g.generators().iter().copied()).order(), 24);
    }

    #[test]
    fn mask_validation() {
        let g = s4();
        // a single non-identity element of order > 2 is not closed
        let x = g.elements().find(|&x| g.element_order(x) == 4).unwrap();
        let mut m2 = vec![false; 24];
        m2[0] = true;
        m2[x.index()] = true;
        assert!(g.subgroup_from_mask(m2).is_none());
        let h = g.subgroup_generate([x]);
        assert_eq!(g.subgroup_from_mask(h.mask().to_vec()), Some(h));
    }
}
