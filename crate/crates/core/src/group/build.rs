use std::collections::HashMap;

use super::{ElementId, FiniteGroup, Permutation};
use crate::error::GroupError;

impl FiniteGroup {
    /// Closes `gens` under composition.
    ///
    /// Elements are numbered in breadth-first discovery order from the
    /// identity, applying generators in input order, so the resulting table is
    /// a pure function of the input.
    pub fn from_generators(degree: usize, gens: &[Permutation], max_order: usize) -> Result<FiniteGroup, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let mut elements = vec![Permutation::identity(degree)];
        let mut index: HashMap<Vec<u32>, u32> = HashMap::new();
        index.insert(elements[0].raw().to_vec(), 0);
        // parent[b] = (p, s) with element b = p * gens[s]
        let mut parent: Vec<(u32, u32)> = vec![(0, 0)];
        // right[s][x] = x * gens[s]
        let mut right: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            for (s, g) in gens.iter().enumerate() {
                let y = x.then(g);
                let id = match index.get(y.raw()) {
                    Some(&id) => id,
                    None => {
                        if elements.len() >= max_order {
                            return Err(GroupError::ClosureExceedsCap { cap: max_order });
                        }
                        let id = elements.len() as u32;
                        index.insert(y.raw().to_vec(), id);
                        elements.push(y);
                        parent.push((head as u32, s as u32));
                        id
                    }
                };
                right[s].push(id);
            }
            head += 1;
        }

        let n = elements.len();
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, s) = parent[b];
            for a in 0..n {
                let ap = mul[a * n + p as usize];
                mul[a * n + b] = right[s as usize][ap as usize];
            }
        }
        let generators = (0..gens.len()).map(|s| ElementId(right[s][0])).collect();
        Ok(Self::from_parts(n, mul, generators))
    }

    /// Validates a raw Cayley table and wraps it.
    ///
    /// If the identity is not at index 0 the table is relabelled by swapping
    /// it into place. Associativity is checked with Light's test against a
    /// generating set found greedily from the table.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {r} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for &v in row {
                if v >= n {
                    return Err(GroupError::MalformedTable(format!(
                        "entry {v} in row {r} is out of range"
                    )));
                }
                mul.push(v as u32);
            }
        }
        Self::from_flat_table(n, mul)
    }

    pub(crate) fn from_flat_table(n: usize, mut mul: Vec<u32>) -> Result<FiniteGroup, GroupError> {
        let mut seen = vec![0usize; n];
        for r in 0..n {
            for c in 0..n {
                let v = mul[r * n + c] as usize;
                if seen[v] == r + 1 {
                    return Err(GroupError::NotLatinSquare { line: "row", index: r });
                }
                seen[v] = r + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = 0);
        for c in 0..n {
            for r in 0..n {
                let v = mul[r * n + c] as usize;
                if seen[v] == c + 1 {
                    return Err(GroupError::NotLatinSquare {
                        line: "column",
                        index: c,
                    });
                }
                seen[v] = c + 1;
            }
        }

        let e = (0..n)
            .find(|&e| (0..n).all(|x| mul[e * n + x] as usize == x && mul[x * n + e] as usize == x))
            .ok_or(GroupError::NoIdentity)?;
        if e != 0 {
            mul = swap_labels(n, &mul, 0, e);
        }
        for x in 0..n {
            // latin rows guarantee a unique right inverse
            let y = (0..n).find(|&y| mul[x * n + y] == 0).ok_or(GroupError::NoInverse(x))?;
            if mul[y * n + x] != 0 {
                return Err(GroupError::NoInverse(x));
            }
        }

        let generators = right_closure_generators(n, &mul);
        for &s in &generators {
            let s = s.index();
            for x in 0..n {
                let xs = mul[x * n + s] as usize;
                for y in 0..n {
                    let lhs = mul[xs * n + y];
                    let rhs = mul[x * n + mul[s * n + y] as usize];
                    if lhs != rhs {
                        return Err(GroupError::NotAssociative(x, s, y));
                    }
                }
            }
        }
        Ok(Self::from_parts(n, mul, generators))
    }

    /// Builds a group from an explicit element list and multiplication rule.
    ///
    /// `elements[0]` must be the identity. The result is validated like any
    /// Cayley table.
    pub fn from_elements<T, F>(elements: &[T], mul: F) -> Result<FiniteGroup, GroupError>
    where
        T: Clone + Eq + std::hash::Hash,
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        let index: HashMap<&T, u32> = elements.iter().enumerate().map(|(i, t)| (t, i as u32)).collect();
        if index.len() != n {
            return Err(GroupError::MalformedTable("repeated element".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for a in elements {
            for b in elements {
                let c = mul(a, b);
                let id = index
                    .get(&c)
                    .ok_or_else(|| GroupError::MalformedTable("product leaves the element set".into()))?;
                table.push(*id);
            }
        }
        Self::from_flat_table(n, table)
    }

    /// Renumbers elements in breadth-first order from the identity under right
    /// multiplication by `gens` (in order). `gens` must generate the group.
    pub fn relabel_bfs(&self, gens: &[ElementId]) -> FiniteGroup {
        let n = self.order;
        let mut new_of = vec![u32::MAX; n];
        let mut old_of = Vec::with_capacity(n);
        new_of[0] = 0;
        old_of.push(0u32);
        let mut head = 0;
        while head < old_of.len() {
            let x = ElementId(old_of[head]);
            for &s in gens {
                let y = self.mul(x, s).index();
                if new_of[y] == u32::MAX {
                    new_of[y] = old_of.len() as u32;
                    old_of.push(y as u32);
                }
            }
            head += 1;
        }
        assert_eq!(old_of.len(), n, "relabel_bfs: generators do not generate the group");
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            let oa = old_of[a] as usize;
            for b in 0..n {
                let ob = old_of[b] as usize;
                mul[a * n + b] = new_of[self.mul[oa * n + ob] as usize];
            }
        }
        let generators = gens.iter().map(|s| ElementId(new_of[s.index()])).collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| old_of.iter().map(|&o| l[o as usize].clone()).collect());
        let mut g = Self::from_parts(n, mul, generators);
        g.labels = labels;
        g
    }

    /// Componentwise product; `(a, b)` sits at index `a * |B| + b`.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, max_order: usize) -> Result<FiniteGroup, GroupError> {
        let (na, nb) = (a.order, b.order);
        let n = na
            .checked_mul(nb)
            .filter(|&n| n <= max_order)
            .ok_or(GroupError::ClosureExceedsCap { cap: max_order })?;
        let rows: Vec<Vec<u32>> = crate::exec::map_range(n, |x| {
            let (xa, xb) = (x / nb, x % nb);
            let ra = a.row(ElementId(xa as u32));
            let rb = b.row(ElementId(xb as u32));
            (0..n).map(|y| ra[y / nb] * nb as u32 + rb[y % nb]).collect()
        });
        let mul = rows.concat();
        let mut generators: Vec<ElementId> = a.generators.iter().map(|g| ElementId(g.0 * nb as u32)).collect();
        generators.extend(b.generators.iter().copied());
        Ok(Self::from_parts(n, mul, generators))
    }

    fn from_parts(n: usize, mul: Vec<u32>, generators: Vec<ElementId>) -> FiniteGroup {
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let row = &mul[x * n..(x + 1) * n];
            inv[x] = row
                .iter()
                .position(|&v| v == 0)
                .expect("group table row without identity") as u32;
        }
        let generators = generators.into_iter().filter(|g| !g.is_identity()).collect();
        FiniteGroup {
            order: n,
            mul,
            inv,
            generators,
            labels: None,
        }
    }
}

fn swap_labels(n: usize, mul: &[u32], a: usize, b: usize) -> Vec<u32> {
    let relabel = |x: usize| -> usize {
        if x == a {
            b
        } else if x == b {
            a
        } else {
            x
        }
    };
    let mut out = vec![0u32; n * n];
    for r in 0..n {
        for c in 0..n {
            out[relabel(r) * n + relabel(c)] = relabel(mul[r * n + c] as usize) as u32;
        }
    }
    out
}

/// Greedy generating set: scan elements in index order and keep each one not
/// yet reachable from the identity by right multiplication with the kept set.
fn right_closure_generators(n: usize, mul: &[u32]) -> Vec<ElementId> {
    let mut reached = vec![false; n];
    reached[0] = true;
    let mut members = vec![0usize];
    let mut gens: Vec<usize> = Vec::new();
    for x in 0..n {
        if reached[x] {
            continue;
        }
        gens.push(x);
        // existing members only need the new generator; new members need all
        let mut queue: Vec<usize> = Vec::new();
        for &m in &members {
            let y = mul[m * n + x] as usize;
            if !reached[y] {
                reached[y] = true;
                queue.push(y);
            }
        }
        let mut head = 0;
        while head < queue.len() {
            let m = queue[head];
            for &s in &gens {
                let y = mul[m * n + s] as usize;
                if !reached[y] {
                    reached[y] = true;
                    queue.push(y);
                }
            }
            head += 1;
        }
        members.extend(queue);
    }
    gens.into_iter().map(|g| ElementId(g as u32)).collect()
}
