//! Dense finite groups.
//!
//! Every group is a full multiplication table over element indices, with the
//! identity fixed at index 0. Permutation generators and raw tables are only
//! ingestion formats; everything downstream works on [`FiniteGroup`].

mod build;
mod ops;
mod perm;
mod subgroup;

use std::fmt;

pub use ops::{ConjugacyClasses, Quotient};
pub use perm::Permutation;
pub use subgroup::Subgroup;

/// Default cap on group orders accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 2048;

/// Index of an element inside its parent [`FiniteGroup`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementId(pub u32);

impl ElementId {
    pub const IDENTITY: ElementId = ElementId(0);

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn is_identity(self) -> bool {
        self.0 == 0
    }
}

impl From<usize> for ElementId {
    fn from(i: usize) -> Self {
        ElementId(i as u32)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A finite group given by its full Cayley table.
///
/// Immutable after construction. `generators` always generates the whole
/// group; for groups built from permutations it is the list of generator
/// images in input order.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    generators: Vec<ElementId>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> ElementId {
        ElementId::IDENTITY
    }

    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        ElementId(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn inv(&self, a: ElementId) -> ElementId {
        ElementId(self.inv[a.index()])
    }

    /// The row `a * _` of the table.
    pub fn row(&self, a: ElementId) -> &[u32] {
        let start = a.index() * self.order;
        &self.mul[start..start + self.order]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + Clone + '_ {
        (0..self.order as u32).map(ElementId)
    }

    pub fn generators(&self) -> &[ElementId] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn label(&self, x: ElementId) -> String {
        match &self.labels {
            Some(l) => l[x.index()].clone(),
            None => x.to_string(),
        }
    }

    pub fn pow(&self, x: ElementId, k: u64) -> ElementId {
        let mut acc = self.identity();
        let mut base = x;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g^-1 x g`.
    #[inline]
    pub fn conjugate(&self, x: ElementId, g: ElementId) -> ElementId {
        self.mul(self.mul(self.inv(g), x), g)
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    #[inline]
    pub fn commutator(&self, x: ElementId, y: ElementId) -> ElementId {
        let xy = self.mul(x, y);
        let yx = self.mul(y, x);
        self.mul(self.inv(yx), xy)
    }

    #[inline]
    pub fn commutes(&self, x: ElementId, y: ElementId) -> bool {
        self.mul(x, y) == self.mul(y, x)
    }

    /// Smallest `k >= 1` with `x^k = 1`.
    pub fn element_order(&self, x: ElementId) -> usize {
        let mut k = 1;
        let mut acc = x;
        while !acc.is_identity() {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Least common multiple of all element orders.
    pub fn exponent(&self) -> usize {
        self.elements().map(|x| self.element_order(x)).fold(1, lcm)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generators;
        gens.iter()
            .enumerate()
            .all(|(i, &a)| gens[i + 1..].iter().all(|&b| self.commutes(a, b)))
    }

    /// Exhaustive `O(n^3)` associativity check. Meant for tests and small orders.
    pub fn check_associativity_exhaustive(&self) -> Option<(ElementId, ElementId, ElementId)> {
        for x in self.elements() {
            for y in self.elements() {
                let xy = self.mul(x, y);
                for z in self.elements() {
                    if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// Returns `(p, k)` with `n = p^k` when `n > 1` is a prime power.
pub fn prime_power(n: usize) -> Option<(usize, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}
