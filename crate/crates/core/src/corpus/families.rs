//! Built-in group families, written `name:params` with `*` for direct products.

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use super::gf::Gf;
use crate::error::{CorpusError, GroupError};
use crate::group::{is_prime, ElementId, FiniteGroup};
use crate::structure::{nilpotency_class, Nilpotency};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// `cyclic:n`, order `n`.
    Cyclic(usize),
    /// `dihedral:n`, order `n` (even).
    Dihedral(usize),
    /// `quaternion:n`, generalized quaternion of order `n = 2^k >= 8`.
    Quaternion(usize),
    /// `elementary_abelian:p,k`, order `p^k`.
    ElementaryAbelian { p: usize, k: u32 },
    /// `extraspecial_p:p[,r]`, order `p^(2r+1)`. Exponent `p` for odd `p`;
    /// for `p = 2` the central product of `r` copies of `D8`.
    ExtraspecialExpP { p: usize, r: u32 },
    /// `extraspecial_p2:p[,r]`, order `p^(2r+1)`. Exponent `p^2` for odd `p`;
    /// for `p = 2` the central product of `Q8` with `r - 1` copies of `D8`.
    ExtraspecialExpP2 { p: usize, r: u32 },
    /// `heisenberg:p[,k]` (alias `sl3_sylow`): upper unitriangular 3x3
    /// matrices over `GF(p^k)`, a Sylow `p`-subgroup of `SL_3(p^k)`.
    Heisenberg { p: usize, k: u32 },
    /// `T:p,k`: `heisenberg:p,k * cyclic:p`.
    T { p: usize, k: u32 },
    /// `A*B*...`.
    DirectProduct(Vec<FamilySpec>),
}

fn unsupported(msg: impl Into<String>) -> CorpusError {
    CorpusError::UnsupportedParameters(msg.into())
}

fn prime(p: usize) -> Result<usize, CorpusError> {
    if is_prime(p) {
        Ok(p)
    } else {
        Err(unsupported(format!("{p} is not prime")))
    }
}

impl FamilySpec {
    /// Order of the group, `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        let pow = |p: usize, e: u32| p.checked_pow(e);
        match *self {
            FamilySpec::Cyclic(n) | FamilySpec::Dihedral(n) | FamilySpec::Quaternion(n) => Some(n),
            FamilySpec::ElementaryAbelian { p, k } => pow(p, k),
            FamilySpec::ExtraspecialExpP { p, r } | FamilySpec::ExtraspecialExpP2 { p, r } => pow(p, 2 * r + 1),
            FamilySpec::Heisenberg { p, k } => pow(p, 3 * k),
            FamilySpec::T { p, k } => pow(p, 3 * k + 1),
            FamilySpec::DirectProduct(ref fs) => fs.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    fn validate(&self) -> Result<(), CorpusError> {
        match *self {
            FamilySpec::Cyclic(0) => Err(unsupported("cyclic order must be positive")),
            FamilySpec::Dihedral(n) if n < 2 || n % 2 != 0 => Err(unsupported(format!(
                "dihedral order must be even and positive, got {n}"
            ))),
            FamilySpec::Quaternion(n) if n < 8 || !n.is_power_of_two() => Err(unsupported(format!(
                "quaternion order must be a power of 2 at least 8, got {n}"
            ))),
            FamilySpec::ElementaryAbelian { p, .. } => prime(p).map(drop),
            FamilySpec::ExtraspecialExpP { p, r } | FamilySpec::ExtraspecialExpP2 { p, r } => {
                prime(p)?;
                if r == 0 {
                    return Err(unsupported("extraspecial rank must be at least 1"));
                }
                Ok(())
            }
            FamilySpec::Heisenberg { p, k } | FamilySpec::T { p, k } => {
                prime(p)?;
                if k == 0 {
                    return Err(unsupported("field degree must be at least 1"));
                }
                Ok(())
            }
            FamilySpec::DirectProduct(ref fs) => {
                if fs.len() < 2 {
                    return Err(unsupported("a direct product needs at least two factors"));
                }
                fs.iter().try_for_each(FamilySpec::validate)
            }
            _ => Ok(()),
        }
    }

    /// Builds the group, numbered breadth-first from its defining generators.
    pub fn build(&self, order_cap: usize) -> Result<FiniteGroup, CorpusError> {
        self.validate()?;
        match self.order() {
            Some(n) if n <= order_cap => {}
            _ => return Err(GroupError::ClosureExceedsCap { cap: order_cap }.into()),
        }
        let g = match *self {
            FamilySpec::Cyclic(n) => assemble((0..n).collect(), &[1 % n], |a, b| (a + b) % n),
            FamilySpec::Dihedral(n) => {
                let m = n / 2;
                let elements: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..m).map(move |a| (a, s))).collect();
                assemble(elements, &[(1 % m, 0), (0, 1)], |&(a, s), &(b, t)| {
                    let b = if s == 1 { (m - b) % m } else { b };
                    ((a + b) % m, s ^ t)
                })
            }
            FamilySpec::Quaternion(n) => {
                let m = n / 4;
                let h = 2 * m;
                let elements: Vec<(usize, usize)> = (0..2).flat_map(|s| (0..h).map(move |a| (a, s))).collect();
                assemble(elements, &[(1, 0), (0, 1)], |&(a, s), &(b, t)| match (s, t) {
                    (0, _) => ((a + b) % h, t),
                    (_, 0) => ((a + h - b) % h, 1),
                    _ => ((a + h - b + m) % h, 0),
                })
            }
            FamilySpec::ElementaryAbelian { p, k } => {
                let k = k as usize;
                let elements = vectors(p, k);
                let gens: Vec<Vec<usize>> = (0..k).map(|i| unit(k, i)).collect();
                assemble(elements, &gens, |a, b| {
                    a.iter().zip(b).map(|(x, y)| (x + y) % p).collect()
                })
            }
            FamilySpec::ExtraspecialExpP { p, r } => extraspecial(p, r as usize, false),
            FamilySpec::ExtraspecialExpP2 { p, r } => extraspecial(p, r as usize, true),
            FamilySpec::Heisenberg { p, k } => heisenberg(p, k),
            FamilySpec::T { p, k } => {
                return FamilySpec::DirectProduct(vec![FamilySpec::Heisenberg { p, k }, FamilySpec::Cyclic(p)])
                    .build(order_cap)
            }
            FamilySpec::DirectProduct(ref fs) => {
                let mut acc = fs[0].build(order_cap)?;
                for f in &fs[1..] {
                    acc = FiniteGroup::direct_product(&acc, &f.build(order_cap)?, order_cap)?;
                }
                let gens = acc.generators().to_vec();
                Ok(acc.relabel_bfs(&gens))
            }
        }?;
        Ok(g)
    }
}

fn vectors(p: usize, k: usize) -> Vec<Vec<usize>> {
    (0..p.pow(k as u32))
        .map(|code| (0..k).map(|i| code / p.pow(i as u32) % p).collect())
        .collect()
}

fn unit(k: usize, i: usize) -> Vec<usize> {
    let mut v = vec![0; k];
    v[i] = 1;
    v
}

/// Table from explicit elements (`elements[0]` the identity) and a
/// multiplication, renumbered breadth-first from `gens`.
fn assemble<T, F>(elements: Vec<T>, gens: &[T], mul: F) -> Result<FiniteGroup, CorpusError>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let raw = FiniteGroup::from_elements(&elements, mul)?;
    let ids: Vec<ElementId> = gens
        .iter()
        .map(|g| ElementId::from(elements.iter().position(|e| e == g).expect("generator is an element")))
        .collect();
    Ok(raw.relabel_bfs(&ids))
}

/// Central extension of `F_p^(2r)` by `F_p` with cocycle `sum x_i y'_i`
/// (the Heisenberg form), plus a term making some generator of order `p^2`
/// when `wide` is set: a carry for odd `p`, a quadratic twist for `p = 2`.
fn extraspecial(p: usize, r: usize, wide: bool) -> Result<FiniteGroup, CorpusError> {
    let d = 2 * r + 1;
    let elements = vectors(p, d);
    let gens: Vec<Vec<usize>> = (0..2 * r).map(|i| unit(d, i)).collect();
    assemble(elements, &gens, |a, b| {
        let mut c: Vec<usize> = a.iter().zip(b).map(|(x, y)| (x + y) % p).collect();
        let mut z: usize = (0..r).map(|i| a[i] * b[r + i]).sum();
        if wide {
            if p == 2 {
                z += a[0] * b[0] + a[r] * b[r];
            } else if a[0] + b[0] >= p {
                z += 1;
            }
        }
        c[2 * r] = (c[2 * r] + z) % p;
        c
    })
}

fn heisenberg(p: usize, k: u32) -> Result<FiniteGroup, CorpusError> {
    let f = Gf::new(p, k);
    let q = f.q;
    let elements: Vec<(usize, usize, usize)> = (0..q * q * q).map(|i| (i % q, i / q % q, i / (q * q))).collect();
    let mut gens = Vec::new();
    for i in 0..k {
        gens.push((p.pow(i), 0, 0));
    }
    for i in 0..k {
        gens.push((0, p.pow(i), 0));
    }
    assemble(elements, &gens, |&(a, b, c), &(a2, b2, c2)| {
        (f.add(a, a2), f.add(b, b2), f.add(f.add(c, c2), f.mul(a, b2)))
    })
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral:{n}"),
            FamilySpec::Quaternion(n) => write!(f, "quaternion:{n}"),
            FamilySpec::ElementaryAbelian { p, k } => write!(f, "elementary_abelian:{p},{k}"),
            FamilySpec::ExtraspecialExpP { p, r: 1 } => write!(f, "extraspecial_p:{p}"),
            FamilySpec::ExtraspecialExpP { p, r } => write!(f, "extraspecial_p:{p},{r}"),
            FamilySpec::ExtraspecialExpP2 { p, r: 1 } => write!(f, "extraspecial_p2:{p}"),
            FamilySpec::ExtraspecialExpP2 { p, r } => write!(f, "extraspecial_p2:{p},{r}"),
            FamilySpec::Heisenberg { p, k: 1 } => write!(f, "heisenberg:{p}"),
            FamilySpec::Heisenberg { p, k } => write!(f, "heisenberg:{p},{k}"),
            FamilySpec::T { p, k } => write!(f, "T:{p},{k}"),
            FamilySpec::DirectProduct(fs) => {
                let parts: Vec<String> = fs.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join("*"))
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CorpusError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let factors: Vec<&str> = s.split('*').map(str::trim).collect();
        if factors.len() > 1 {
            let parts = factors.into_iter().map(str::parse).collect::<Result<Vec<_>, _>>()?;
            return Ok(FamilySpec::DirectProduct(parts));
        }
        let (name, params) = s
            .split_once(':')
            .ok_or_else(|| unsupported(format!("expected name:params, got {s:?}")))?;
        let nums = params
            .split(',')
            .map(|w| w.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| unsupported(format!("parameters of {s:?} must be integers")))?;
        let arity = |lo: usize, hi: usize| -> Result<(), CorpusError> {
            if (lo..=hi).contains(&nums.len()) {
                Ok(())
            } else {
                Err(unsupported(format!("{name} takes {lo} to {hi} parameters")))
            }
        };
        let second = |default: u32| nums.get(1).map_or(default, |&v| v as u32);
        let spec = match name.trim() {
            "cyclic" => {
                arity(1, 1)?;
                FamilySpec::Cyclic(nums[0])
            }
            "dihedral" => {
                arity(1, 1)?;
                FamilySpec::Dihedral(nums[0])
            }
            "quaternion" => {
                arity(1, 1)?;
                FamilySpec::Quaternion(nums[0])
            }
            "elementary_abelian" => {
                arity(2, 2)?;
                FamilySpec::ElementaryAbelian {
                    p: nums[0],
                    k: second(1),
                }
            }
            "extraspecial_p" => {
                arity(1, 2)?;
                FamilySpec::ExtraspecialExpP {
                    p: nums[0],
                    r: second(1),
                }
            }
            "extraspecial_p2" => {
                arity(1, 2)?;
                FamilySpec::ExtraspecialExpP2 {
                    p: nums[0],
                    r: second(1),
                }
            }
            "heisenberg" | "sl3_sylow" => {
                arity(1, 2)?;
                FamilySpec::Heisenberg {
                    p: nums[0],
                    k: second(1),
                }
            }
            "T" => {
                arity(1, 2)?;
                FamilySpec::T {
                    p: nums[0],
                    k: second(1),
                }
            }
            other => return Err(unsupported(format!("unknown family {other:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }
}

/// The families exercised by the harness, restricted to `order <= max_order`.
pub fn builtin_families(max_order: usize) -> Vec<FamilySpec> {
    const CATALOG: &[&str] = &[
        "cyclic:2",
        "cyclic:5",
        "cyclic:8",
        "cyclic:27",
        "elementary_abelian:2,3",
        "elementary_abelian:3,2",
        "elementary_abelian:5,2",
        "dihedral:6",
        "dihedral:8",
        "dihedral:12",
        "dihedral:16",
        "dihedral:32",
        "dihedral:64",
        "quaternion:8",
        "quaternion:16",
        "quaternion:32",
        "quaternion:64",
        "extraspecial_p:2",
        "extraspecial_p:2,2",
        "extraspecial_p:2,3",
        "extraspecial_p2:2",
        "extraspecial_p2:2,2",
        "extraspecial_p2:2,3",
        "extraspecial_p:3",
        "extraspecial_p2:3",
        "extraspecial_p:3,2",
        "extraspecial_p2:3,2",
        "extraspecial_p:5",
        "extraspecial_p2:5",
        "extraspecial_p:7",
        "extraspecial_p2:7",
        "heisenberg:2,2",
        "heisenberg:2,3",
        "heisenberg:3",
        "heisenberg:5",
        "T:2,1",
        "T:2,2",
        "T:3,1",
        "T:5,1",
        "dihedral:8*cyclic:2",
        "quaternion:8*cyclic:4",
        "extraspecial_p:3*cyclic:9",
        "heisenberg:3*elementary_abelian:3,2",
        "dihedral:6*cyclic:3",
        "extraspecial_p2:3*cyclic:3",
    ];
    CATALOG
        .iter()
        .map(|s| s.parse::<FamilySpec>().expect("catalog entries parse"))
        .filter(|f| f.order().is_some_and(|n| n <= max_order))
        .collect()
}

/// The properties of `T = S x C_p` (`S` a Sylow `p`-subgroup of `SL_3(p^k)`)
/// that the hypothetical large-center family would share.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    pub center_order: usize,
    pub center_index: usize,
    /// `|Z(T)| = p^(k+1)`.
    pub center_order_ok: bool,
    /// `|T:Z(T)| = p^(2k)`.
    pub center_index_ok: bool,
    /// `|Z(T):T'| = p`.
    pub center_over_derived_ok: bool,
    /// Every noncentral centralizer is abelian of order `p^(2k+1)`.
    pub centralizers_ok: bool,
    pub class_two: bool,
    /// Exponent `p`; only asserted for odd `p`.
    pub exponent_p: Option<bool>,
}

impl WitnessReport {
    pub fn holds(&self) -> bool {
        self.center_order_ok
            && self.center_index_ok
            && self.center_over_derived_ok
            && self.centralizers_ok
            && self.class_two
            && self.exponent_p != Some(false)
    }
}

pub fn verify_witness_properties(t: &FiniteGroup, p: usize, k: u32) -> WitnessReport {
    let z = t.center();
    let derived = t.derived_subgroup();
    let want_centralizer = p.pow(2 * k + 1);
    let centralizers_ok = t.elements().filter(|&x| !z.contains(x)).all(|x| {
        let c = t.centralizer(x);
        c.order() == want_centralizer
            && c.generators()
                .iter()
                .all(|&a| c.generators().iter().all(|&b| t.commutes(a, b)))
    });
    WitnessReport {
        center_order: z.order(),
        center_index: z.index(),
        center_order_ok: z.order() == p.pow(k + 1),
        center_index_ok: z.index() == p.pow(2 * k),
        center_over_derived_ok: derived.is_subset_of(&z) && z.order() == derived.order() * p,
        centralizers_ok,
        class_two: nilpotency_class(t) == Nilpotency::Class(2),
        exponent_p: (p != 2).then(|| t.exponent() == p),
    }
}
