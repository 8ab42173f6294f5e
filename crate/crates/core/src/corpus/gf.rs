//! Small finite fields `GF(p^k)` as addition and multiplication tables.
//!
//! Elements are integers in `0..q` read as base-`p` digit vectors (lowest
//! digit first) of polynomials modulo a fixed monic irreducible of degree `k`.

#[derive(Clone, Debug)]
pub(crate) struct Gf {
    pub q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Gf {
    pub fn new(p: usize, k: u32) -> Gf {
        let q = p.pow(k);
        let k = k as usize;
        let modulus = irreducible(p, k);
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| x / p.pow(i as u32) % p).collect() };
        let number = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = number(&s) as u16;
                let prod = poly_mul(p, &da, &db);
                mul[a * q + b] = number(&poly_rem(p, prod, &modulus)[..k]) as u16;
            }
        }
        Gf { q, add, mul }
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }
}

fn poly_mul(p: usize, a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder of `a` modulo the monic `m`, padded to at least `deg m` digits.
fn poly_rem(p: usize, mut a: Vec<usize>, m: &[usize]) -> Vec<usize> {
    let dm = m.len() - 1;
    for i in (dm..a.len()).rev() {
        let c = a[i];
        if c != 0 {
            for (j, &mj) in m.iter().enumerate() {
                a[i - dm + j] = (a[i - dm + j] + (p - c) * mj) % p;
            }
        }
    }
    a.resize(a.len().max(dm), 0);
    a
}

/// Lexicographically first monic irreducible of degree `k`, by trial
/// division with every monic polynomial of degree `1..=k/2`.
fn irreducible(p: usize, k: usize) -> Vec<usize> {
    let monic = |deg: usize, code: usize| -> Vec<usize> {
        let mut c: Vec<usize> = (0..deg).map(|i| code / p.pow(i as u32) % p).collect();
        c.push(1);
        c
    };
    (0..p.pow(k as u32))
        .map(|code| monic(k, code))
        .find(|f| {
            (1..=k / 2).all(|d| {
                (0..p.pow(d as u32)).all(|code| {
                    let r = poly_rem(p, f.clone(), &monic(d, code));
                    r[..d].iter().any(|&x| x != 0)
                })
            })
        })
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fields_have_inverses() {
        for (p, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (5, 1), (2, 4)] {
            let f = Gf::new(p, k);
            for a in 1..f.q {
                assert_eq!((0..f.q).filter(|&b| f.mul(a, b) == 1).count(), 1, "GF({p}^{k}) a={a}");
            }
            for a in 0..f.q {
                assert_eq!((0..f.q).filter(|&b| f.add(a, b) == 0).count(), 1);
            }
        }
    }
}
