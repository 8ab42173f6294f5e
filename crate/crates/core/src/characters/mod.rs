//! Exact character tables by the Dixon-Burnside method.
//!
//! Class sums act on the class algebra by the structure constants; the
//! normalized central characters `omega_chi` are their common eigenvectors.
//! Those are found over a prime field `F_l` with `l = 1 (mod exp G)`, then
//! each character value is lifted to `Z[zeta_e]` from the eigenvalue
//! multiplicities of the cyclic subgroup generated by a class representative.

mod cyclotomic;
mod modp;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use cyclotomic::{cyclotomic_polynomial, CyclotomicField, CyclotomicValue};
use modp::{deflate, dixon_prime, eval, Fp, Mat};

use crate::error::CharacterError;
use crate::group::{ConjugacyClasses, ElementId, FiniteGroup, Subgroup};

/// Structure constants `a[i][j][k]`: the number of pairs `(x, y)` in
/// `C_i x C_j` with `x y` equal to the fixed representative of `C_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassMultCoefficients {
    k: usize,
    data: Vec<u32>,
}

impl ClassMultCoefficients {
    pub fn num_classes(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> u32 {
        self.data[(i * self.k + j) * self.k + k]
    }
}

pub fn class_mult_coefficients(g: &FiniteGroup, classes: &ConjugacyClasses) -> ClassMultCoefficients {
    let k = classes.len();
    let mut data = vec![0u32; k * k * k];
    for kk in 0..k {
        let z = classes.representative(kk);
        for (i, class) in classes.classes().iter().enumerate() {
            for &x in class {
                let y = g.mul(g.inv(x), z);
                let j = classes.class_of(y);
                data[(i * k + j) * k + kk] += 1;
            }
        }
    }
    ClassMultCoefficients { k, data }
}

/// Sparse class-sum matrix `M_j` with `(M_j)[i][k] = a[j][i][k]`.
struct ClassMatrix {
    rows: Vec<Vec<(u32, u64)>>,
}

impl ClassMatrix {
    fn apply(&self, f: Fp, v: &[u64]) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| row.iter().fold(0, |acc, &(k, a)| f.add(acc, f.mul(a, v[k as usize]))))
            .collect()
    }
}

fn class_matrices(g: &FiniteGroup, classes: &ConjugacyClasses, f: Fp) -> Vec<ClassMatrix> {
    let k = classes.len();
    crate::exec::map_range(k, |j| {
        let mut rows: Vec<Vec<(u32, u64)>> = vec![Vec::new(); k];
        let mut counts = vec![0u64; k];
        for kk in 0..k {
            let z = classes.representative(kk);
            counts.iter_mut().for_each(|c| *c = 0);
            for &x in classes.class(j) {
                counts[classes.class_of(g.mul(g.inv(x), z))] += 1;
            }
            for (i, &c) in counts.iter().enumerate() {
                if c != 0 {
                    rows[i].push((kk as u32, c % f.p));
                }
            }
        }
        ClassMatrix { rows }
    })
}

/// Character table with exact values in `Z[zeta_e]`, `e = exp(G)`.
///
/// Rows are characters sorted by degree (trivial character first), columns are
/// conjugacy classes in the order of [`FiniteGroup::conjugacy_classes`].
#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_order: usize,
    /// `(representative, class size)` per column.
    pub classes: Vec<(ElementId, usize)>,
    pub degrees: Vec<u64>,
    pub values: Vec<Vec<CyclotomicValue>>,
    /// The prime `l` used for the modular computation.
    pub modulus: u64,
    pub field: CyclotomicField,
    /// Column of the inverse class.
    inverse_class: Vec<usize>,
}

impl CharacterTable {
    pub fn num_characters(&self) -> usize {
        self.degrees.len()
    }

    pub fn value(&self, chi: usize, class: usize) -> &CyclotomicValue {
        &self.values[chi][class]
    }

    /// Exact row and column orthogonality.
    #[allow(clippy::needless_range_loop)]
    pub fn check_orthogonality(&self) -> Result<(), CharacterError> {
        let f = &self.field;
        let k = self.num_characters();
        let n = self.group_order as i64;
        let conj: Vec<Vec<CyclotomicValue>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| f.conj(v)).collect())
            .collect();
        for a in 0..k {
            for b in a..k {
                let mut acc = vec![0i64; f.order()];
                for (c, &(_, size)) in self.classes.iter().enumerate() {
                    f.mul_acc(&mut acc, &self.values[a][c], &conj[b][c], size as i64);
                }
                let expect = if a == b { f.integer(n) } else { f.zero() };
                if f.from_powers(acc) != expect {
                    return Err(CharacterError::Inconsistent(format!(
                        "row orthogonality fails for characters {a} and {b}"
                    )));
                }
            }
        }
        for c in 0..k {
            for d in c..k {
                let mut acc = vec![0i64; f.order()];
                for chi in 0..k {
                    f.mul_acc(&mut acc, &self.values[chi][c], &conj[chi][d], 1);
                }
                let expect = if c == d {
                    f.integer(n / self.classes[c].1 as i64)
                } else {
                    f.zero()
                };
                if f.from_powers(acc) != expect {
                    return Err(CharacterError::Inconsistent(format!(
                        "column orthogonality fails for classes {c} and {d}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Sum of squared degrees equals `|G|` and the identity column equals the degrees.
    pub fn check_degrees(&self) -> Result<(), CharacterError> {
        let sum: u64 = self.degrees.iter().map(|d| d * d).sum();
        if sum != self.group_order as u64 {
            return Err(CharacterError::Inconsistent(format!(
                "sum of squared degrees is {sum}, group order {}",
                self.group_order
            )));
        }
        for (chi, &d) in self.degrees.iter().enumerate() {
            if self.values[chi][0].as_integer() != Some(d as i64) {
                return Err(CharacterError::Inconsistent(format!(
                    "identity column of character {chi} differs from its degree"
                )));
            }
        }
        Ok(())
    }

    #[doc(hidden)]
    pub fn inverse_class(&self, c: usize) -> usize {
        self.inverse_class[c]
    }
}

/// Computes the full character table of `g`.
pub fn dixon_character_table(g: &FiniteGroup) -> Result<CharacterTable, CharacterError> {
    let classes = g.conjugacy_classes();
    let n = g.order();
    let k = classes.len();
    let e = g.exponent();
    let l = dixon_prime(e, n).ok_or(CharacterError::InternalPrimeSearchFailed {
        exponent: e,
        lower: 2 * (n as f64).sqrt().ceil() as usize,
    })?;
    let f = Fp { p: l };
    let sizes: Vec<u64> = classes.sizes().iter().map(|&s| s as u64).collect();
    let inverse_class: Vec<usize> = (0..k)
        .map(|c| classes.class_of(g.inv(classes.representative(c))))
        .collect();

    let matrices = class_matrices(g, &classes, f);
    let omegas = joint_eigenvectors(f, k, &matrices)?;
    if omegas.len() != k {
        return Err(CharacterError::EigenspaceSplitFailed);
    }

    let max_degree = (1..).take_while(|d| d * d <= n as u64).last().unwrap_or(1);
    let mut modular: Vec<(u64, Vec<u64>)> = Vec::with_capacity(k);
    for omega in omegas {
        let norm = f.inv(omega[0]);
        let omega: Vec<u64> = omega.iter().map(|&w| f.mul(w, norm)).collect();
        // sum_i omega_i omega_{i*} / |C_i| = |G| / chi(1)^2
        let s = (0..k).fold(0, |acc, i| {
            f.add(
                acc,
                f.mul(f.mul(omega[i], omega[inverse_class[i]]), f.inv(sizes[i] % l)),
            )
        });
        if s == 0 {
            return Err(CharacterError::Inconsistent("degree equation has no solution".into()));
        }
        let target = f.mul(n as u64 % l, f.inv(s));
        let degree = (1..=max_degree)
            .find(|&d| d * d % l == target)
            .ok_or_else(|| CharacterError::Inconsistent("no integral degree matches".into()))?;
        let values = (0..k)
            .map(|i| f.mul(f.mul(omega[i], degree % l), f.inv(sizes[i] % l)))
            .collect();
        modular.push((degree, values));
    }
    modular.sort();

    let field = CyclotomicField::new(e);
    let z = f.pow(f.primitive_root(), (l - 1) / e as u64);
    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let x = classes.representative(c);
            let o = g.element_order(x);
            (0..o).map(|r| classes.class_of(g.pow(x, r as u64))).collect()
        })
        .collect();
    let mut values = Vec::with_capacity(k);
    for (degree, vals) in &modular {
        let row = (0..k)
            .map(|c| lift_value(f, &field, z, e, *degree, vals, &power_classes[c]))
            .collect::<Result<Vec<_>, _>>()?;
        values.push(row);
    }

    let table = CharacterTable {
        group_order: n,
        classes: (0..k).map(|c| (classes.representative(c), sizes[c] as usize)).collect(),
        degrees: modular.iter().map(|(d, _)| *d).collect(),
        values,
        modulus: l,
        field,
        inverse_class,
    };
    table.check_degrees()?;
    Ok(table)
}

/// Recovers `chi(x)` exactly from `chi(x^r) mod l`, `r = 0..o`: the
/// multiplicity of the eigenvalue `zeta_o^s` is `1/o sum_r chi(x^r) zeta_o^{-rs}`.
fn lift_value(
    f: Fp,
    field: &CyclotomicField,
    z: u64,
    e: usize,
    degree: u64,
    vals: &[u64],
    power_classes: &[usize],
) -> Result<CyclotomicValue, CharacterError> {
    let o = power_classes.len();
    let step = e / o;
    let zo = f.pow(z, step as u64);
    let zo_inv = f.inv(zo);
    let o_inv = f.inv(o as u64 % f.p);
    let mut raw = vec![0i64; e];
    let mut total = 0u64;
    for s in 0..o {
        let w = f.pow(zo_inv, s as u64);
        let mut acc = 0u64;
        let mut wr = 1u64;
        for &c in power_classes {
            acc = f.add(acc, f.mul(vals[c], wr));
            wr = f.mul(wr, w);
        }
        let m = f.mul(acc, o_inv);
        if m > degree {
            return Err(CharacterError::Inconsistent(format!(
                "eigenvalue multiplicity {m} exceeds degree {degree}"
            )));
        }
        total += m;
        raw[s * step] = m as i64;
    }
    if total != degree {
        return Err(CharacterError::Inconsistent(
            "multiplicities do not sum to the degree".into(),
        ));
    }
    Ok(field.from_powers(raw))
}

/// Splits `F_l^k` into the common one-dimensional eigenspaces of the class
/// matrices and returns one spanning vector per eigenspace.
fn joint_eigenvectors(f: Fp, k: usize, matrices: &[ClassMatrix]) -> Result<Vec<Vec<u64>>, CharacterError> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0D1C_5EED);
    let mut pending = vec![Mat::identity(k)];
    let mut done = Vec::with_capacity(k);
    while let Some(space) = pending.pop() {
        if space.rows == 1 {
            done.push(space.row(0).to_vec());
            continue;
        }
        let mut split = false;
        for m in matrices.iter().skip(1) {
            let t = restrict(f, m, &space);
            if is_scalar(&t) {
                continue;
            }
            let parts = eigenspaces(f, &t, &mut rng)?;
            for part in parts {
                // coordinates -> vectors in F_l^k
                let mut full = Mat::zeros(part.rows, k);
                for r in 0..part.rows {
                    for (s, &a) in part.row(r).iter().enumerate() {
                        if a == 0 {
                            continue;
                        }
                        for c in 0..k {
                            let v = f.add(full.at(r, c), f.mul(a, space.at(s, c)));
                            full.set(r, c, v);
                        }
                    }
                }
                full.rref(f);
                pending.push(full);
            }
            split = true;
            break;
        }
        if !split {
            return Err(CharacterError::EigenspaceSplitFailed);
        }
    }
    Ok(done)
}

/// Matrix `T` of `m` on the row space of `space` (in reduced echelon form):
/// `m b_r = sum_s T[s][r] b_s`.
fn restrict(f: Fp, m: &ClassMatrix, space: &Mat) -> Mat {
    let d = space.rows;
    let pivots: Vec<usize> = (0..d)
        .map(|r| {
            space
                .row(r)
                .iter()
                .position(|&v| v != 0)
                .expect("echelon rows are nonzero")
        })
        .collect();
    let mut t = Mat::zeros(d, d);
    for r in 0..d {
        let image = m.apply(f, space.row(r));
        for (s, &p) in pivots.iter().enumerate() {
            t.set(s, r, image[p]);
        }
    }
    t
}

fn is_scalar(t: &Mat) -> bool {
    let c = t.at(0, 0);
    (0..t.rows).all(|r| (0..t.cols).all(|s| t.at(r, s) == if r == s { c } else { 0 }))
}

fn mat_vec(f: Fp, t: &Mat, v: &[u64]) -> Vec<u64> {
    (0..t.rows)
        .map(|r| t.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
        .collect()
}

/// Eigenspaces of a diagonalizable `t`, as row bases of coordinate vectors.
///
/// Eigenvalues come from exhaustive root search on Krylov minimal
/// polynomials. When one Krylov polynomial already has `dim` distinct roots
/// the eigenvectors are read off the Krylov basis directly; otherwise each
/// eigenspace is a null space of `t - lambda`.
fn eigenspaces(f: Fp, t: &Mat, rng: &mut ChaCha8Rng) -> Result<Vec<Mat>, CharacterError> {
    let d = t.rows;
    let mut roots: Vec<u64> = Vec::new();
    for _attempt in 0..32 {
        let v: Vec<u64> = (0..d).map(|_| rng.random_range(0..f.p)).collect();
        let (krylov, poly) = krylov_min_poly(f, t, v);
        let mut found: Vec<u64> = (0..f.p).filter(|&x| eval(f, &poly, x) == 0).collect();
        if found.len() + 1 != poly.len() {
            return Err(CharacterError::Inconsistent(
                "class matrix minimal polynomial does not split into distinct linear factors".into(),
            ));
        }
        if found.len() == d {
            let spaces = found
                .iter()
                .map(|&lambda| {
                    let q = deflate(f, &poly, lambda);
                    let mut u = vec![0u64; d];
                    for (i, &c) in q.iter().enumerate() {
                        for (x, &kv) in u.iter_mut().zip(&krylov[i]) {
                            *x = f.add(*x, f.mul(c, kv));
                        }
                    }
                    let mut m = Mat::from_rows(vec![u], d);
                    m.rref(f);
                    m
                })
                .collect();
            return Ok(spaces);
        }
        roots.append(&mut found);
        roots.sort_unstable();
        roots.dedup();
        let spaces: Vec<Mat> = roots
            .iter()
            .map(|&lambda| {
                let mut shifted = t.clone();
                for i in 0..d {
                    let v = f.sub(shifted.at(i, i), lambda);
                    shifted.set(i, i, v);
                }
                shifted.nullspace(f)
            })
            .collect();
        if spaces.iter().map(|s| s.rows).sum::<usize>() == d {
            return Ok(spaces);
        }
    }
    Err(CharacterError::EigenspaceSplitFailed)
}

/// Krylov vectors `v, t v, ...` up to the first dependency, and the monic
/// minimal polynomial of `v` (lowest coefficient first).
fn krylov_min_poly(f: Fp, t: &Mat, v: Vec<u64>) -> (Vec<Vec<u64>>, Vec<u64>) {
    let d = t.rows;
    // echelon rows: (reduced vector, pivot, combination of krylov vectors)
    let mut echelon: Vec<(Vec<u64>, usize, Vec<u64>)> = Vec::new();
    let mut krylov: Vec<Vec<u64>> = Vec::new();
    let mut current = v;
    loop {
        let idx = krylov.len();
        let mut w = current.clone();
        let mut combo = vec![0u64; idx + 1];
        combo[idx] = 1;
        for (row, pivot, rc) in &echelon {
            let c = w[*pivot];
            if c == 0 {
                continue;
            }
            for (x, &y) in w.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (x, &y) in combo.iter_mut().zip(rc) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        krylov.push(current.clone());
        match w.iter().position(|&x| x != 0) {
            None => {
                // combo . krylov = 0 with combo[idx] = 1: that is the minimal polynomial
                return (krylov, combo);
            }
            Some(p) => {
                let inv = f.inv(w[p]);
                w.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                combo.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                echelon.push((w, p, combo));
            }
        }
        debug_assert!(krylov.len() <= d + 1);
        current = mat_vec(f, t, &current);
    }
}

/// Characters whose kernel does not contain `n`.
pub fn irr_over(table: &CharacterTable, g: &FiniteGroup, n: &Subgroup) -> Vec<usize> {
    let classes = g.conjugacy_classes();
    let inside: Vec<usize> = (0..table.classes.len())
        .filter(|&c| n.contains(table.classes[c].0))
        .collect();
    // the class order of `table` matches `classes`
    debug_assert_eq!(classes.len(), table.classes.len());
    (0..table.num_characters())
        .filter(|&chi| {
            let deg = table.degrees[chi] as i64;
            inside.iter().any(|&c| table.values[chi][c].as_integer() != Some(deg))
        })
        .collect()
}

/// Outcome of the character-theoretic checks over a normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    pub holds: bool,
    /// First `(character, class)` where a character over `N` fails to vanish
    /// off `N`, or `(character, 0)` when only the degree equation fails.
    pub witness: Option<(usize, usize)>,
    pub vanishing: bool,
    pub degree_square: bool,
}

/// Every character over `N` vanishes off `N`.
pub fn vanishes_off(table: &CharacterTable, g: &FiniteGroup, n: &Subgroup) -> Option<(usize, usize)> {
    for chi in irr_over(table, g, n) {
        for (c, &(rep, _)) in table.classes.iter().enumerate() {
            if !n.contains(rep) && !table.values[chi][c].is_zero() {
                return Some((chi, c));
            }
        }
    }
    None
}

/// Full ramification over the center: each character over `Z` vanishes off
/// `Z` and has `chi(1)^2 = |G:Z|`.
pub fn verify_fully_ramified(table: &CharacterTable, g: &FiniteGroup, z: &Subgroup) -> RamificationReport {
    let index = (g.order() / z.order()) as u64;
    let over = irr_over(table, g, z);
    let vanish_witness = vanishes_off(table, g, z);
    let degree_witness = over
        .iter()
        .copied()
        .find(|&chi| table.degrees[chi] * table.degrees[chi] != index);
    let witness = vanish_witness.or(degree_witness.map(|chi| (chi, 0)));
    RamificationReport {
        holds: witness.is_none(),
        witness,
        vanishing: vanish_witness.is_none(),
        degree_square: degree_witness.is_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Permutation;

    fn perm_group(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
        let gens: Vec<Permutation> = gens.iter().map(|g| Permutation::from_images(g).unwrap()).collect();
        FiniteGroup::from_generators(degree, &gens, 5000).unwrap()
    }

    #[test]
    fn c2_table() {
        let c2 = perm_group(2, &[&[2, 1]]);
        let t = dixon_character_table(&c2).unwrap();
        assert_eq!(t.degrees, vec![1, 1]);
        assert_eq!(t.modulus, 3);
        let vals: Vec<Option<i64>> = t.values.iter().map(|r| r[1].as_integer()).collect();
        assert_eq!(vals, vec![Some(1), Some(-1)]);
        t.check_orthogonality().unwrap();
    }

    #[test]
    fn s3_table() {
        let s3 = perm_group(3, &[&[2, 3, 1], &[2, 1, 3]]);
        let t = dixon_character_table(&s3).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        assert_eq!(t.modulus, 7);
        t.check_orthogonality().unwrap();
        let a3 = s3.derived_subgroup();
        assert_eq!(irr_over(&t, &s3, &a3), vec![2]);
    }

    #[test]
    fn identity_class_coefficients() {
        let s4 = perm_group(4, &[&[2, 3, 4, 1], &[2, 1, 3, 4]]);
        let cc = s4.conjugacy_classes();
        let a = class_mult_coefficients(&s4, &cc);
        for j in 0..cc.len() {
            for k in 0..cc.len() {
                assert_eq!(a.get(0, j, k), u32::from(j == k));
            }
        }
        let t = dixon_character_table(&s4).unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2, 3, 3]);
        t.check_orthogonality().unwrap();
    }
}
