use super::{ElementId, FiniteGroup, Subgroup};
use crate::error::GroupError;

/// Partition of a group into conjugacy classes.
///
/// Classes are ordered by their smallest element, so the identity class is
/// always first. Each class lists its members in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClasses {
    classes: Vec<Vec<ElementId>>,
    class_of: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<ElementId>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[ElementId] {
        &self.classes[i]
    }

    pub fn class_of(&self, x: ElementId) -> usize {
        self.class_of[x.index()] as usize
    }

    pub fn representative(&self, i: usize) -> ElementId {
        self.classes[i][0]
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// A materialized quotient `G/N` with its projection map.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    projection: Vec<ElementId>,
}

impl Quotient {
    #[inline]
    pub fn project(&self, x: ElementId) -> ElementId {
        self.projection[x.index()]
    }

    pub fn projection(&self) -> &[ElementId] {
        &self.projection
    }

    /// Full preimage in the parent group of a subgroup of the quotient.
    pub fn preimage(&self, parent: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let mask = self.projection.iter().map(|&q| h.contains(q)).collect();
        Subgroup::from_mask_unchecked(parent, mask)
    }
}

impl FiniteGroup {
    pub fn center(&self) -> Subgroup {
        let mask = self
            .elements()
            .map(|z| self.generators().iter().all(|&g| self.commutes(z, g)))
            .collect();
        Subgroup::from_mask_unchecked(self, mask)
    }

    pub fn centralizer(&self, x: ElementId) -> Subgroup {
        let mask = self.elements().map(|y| self.commutes(x, y)).collect();
        Subgroup::from_mask_unchecked(self, mask)
    }

    /// `|C_G(x)|` without materializing the subgroup.
    pub fn centralizer_order(&self, x: ElementId) -> usize {
        self.elements().filter(|&y| self.commutes(x, y)).count()
    }

    /// Elements commuting with every member of `h`.
    pub fn centralizer_of_subgroup(&self, h: &Subgroup) -> Subgroup {
        let mask = self
            .elements()
            .map(|y| h.generators().iter().all(|&a| self.commutes(a, y)))
            .collect();
        Subgroup::from_mask_unchecked(self, mask)
    }

    /// Orbits of the conjugation action.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        for x in self.elements() {
            if class_of[x.index()] != u32::MAX {
                continue;
            }
            let id = classes.len() as u32;
            class_of[x.index()] = id;
            let mut orbit = vec![x];
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                for &g in self.generators() {
                    let z = self.conjugate(y, g);
                    if class_of[z.index()] == u32::MAX {
                        class_of[z.index()] = id;
                        orbit.push(z);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        ConjugacyClasses { classes, class_of }
    }

    /// Subgroup generated by all commutators `[x, y]`.
    pub fn derived_subgroup(&self) -> Subgroup {
        let whole = Subgroup::whole(self);
        self.commutator_subgroup(&whole, &whole)
    }

    /// `[A, B]`: subgroup generated by `[a, b]` for `a` in `A`, `b` in `B`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut hit = vec![false; self.order()];
        for &x in a.members() {
            for &y in b.members() {
                hit[self.commutator(x, y).index()] = true;
            }
        }
        self.subgroup_generate(self.elements().filter(|x| hit[x.index()]))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generators()
            .iter()
            .all(|&g| h.members().iter().all(|&x| h.contains(self.conjugate(x, g))))
    }

    /// Materializes `G/N`. Cosets are numbered by their smallest element, so
    /// the identity coset is index 0.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient, GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let mut projection = vec![u32::MAX; self.order()];
        let mut reps: Vec<ElementId> = Vec::new();
        for x in self.elements() {
            if projection[x.index()] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            for &m in n.members() {
                projection[self.mul(x, m).index()] = c;
            }
            reps.push(x);
        }
        let k = reps.len();
        let mut mul = Vec::with_capacity(k * k);
        for &a in &reps {
            for &b in &reps {
                mul.push(projection[self.mul(a, b).index()]);
            }
        }
        let generators: Vec<ElementId> = self
            .generators()
            .iter()
            .map(|g| ElementId(projection[g.index()]))
            .collect();
        let mut group = FiniteGroup::from_flat_table(k, mul)?;
        group.generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Quotient {
            group,
            projection: projection.into_iter().map(ElementId).collect(),
        })
    }

    /// Smallest normal subgroup containing `seeds`.
    pub fn normal_closure<I>(&self, seeds: I) -> Subgroup
    where
        I: IntoIterator<Item = ElementId>,
    {
        let mut h = self.subgroup_generate(seeds);
        loop {
            let extra: Vec<ElementId> = self
                .generators()
                .iter()
                .flat_map(|&g| h.generators().iter().map(move |&x| (x, g)))
                .map(|(x, g)| self.conjugate(x, g))
                .filter(|&y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            h = self.subgroup_generate(h.generators().iter().copied().chain(extra));
        }
    }
}
