//! Exact arithmetic in `Z[zeta_e]`.

use std::fmt;
use std::sync::Arc;

/// Integer coefficients of the `e`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(e: usize) -> Vec<i64> {
    assert!(e >= 1);
    // x^e - 1 = prod_{d | e} Phi_d(x); divide out every proper divisor
    let mut num = vec![0i64; e + 1];
    num[0] = -1;
    num[e] = 1;
    for d in (1..e).filter(|d| e.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    assert_eq!(den[dn], 1, "cyclotomic divisors are monic");
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    assert!(
        rem.iter().all(|&r| r == 0),
        "division by a cyclotomic factor was not exact"
    );
    q
}

/// `Z[zeta_e]` with its reduction polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    e: usize,
    phi: Arc<[i64]>,
}

impl CyclotomicField {
    pub fn new(e: usize) -> Self {
        CyclotomicField {
            e,
            phi: cyclotomic_polynomial(e).into(),
        }
    }

    pub fn order(&self) -> usize {
        self.e
    }

    /// Degree `phi(e)` of the field.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> CyclotomicValue {
        CyclotomicValue {
            e: self.e,
            coeffs: vec![0; self.e],
        }
    }

    pub fn integer(&self, n: i64) -> CyclotomicValue {
        let mut v = self.zero();
        v.coeffs[0] = n;
        v
    }

    /// `zeta_e^k`.
    pub fn root_of_unity(&self, k: usize) -> CyclotomicValue {
        let mut raw = vec![0i64; self.e];
        raw[k % self.e] = 1;
        self.reduce(raw)
    }

    /// `sum_k raw[k] zeta_e^k` for an arbitrary length-`e` vector.
    pub fn from_powers(&self, raw: Vec<i64>) -> CyclotomicValue {
        assert_eq!(raw.len(), self.e);
        self.reduce(raw)
    }

    fn reduce(&self, mut raw: Vec<i64>) -> CyclotomicValue {
        let deg = self.degree();
        for i in (deg..raw.len()).rev() {
            let c = raw[i];
            if c != 0 {
                raw[i] = 0;
                for j in 0..deg {
                    raw[i - deg + j] -= c * self.phi[j];
                }
            }
        }
        raw.resize(self.e, 0);
        CyclotomicValue { e: self.e, coeffs: raw }
    }

    pub fn mul(&self, a: &CyclotomicValue, b: &CyclotomicValue) -> CyclotomicValue {
        let mut acc = vec![0i64; self.e];
        self.mul_acc(&mut acc, a, b, 1);
        self.reduce(acc)
    }

    /// `acc += scale * a * b`, with `acc` indexed by powers of `zeta_e` and
    /// left unreduced. Finish with [`CyclotomicField::from_powers`].
    pub fn mul_acc(&self, acc: &mut [i64], a: &CyclotomicValue, b: &CyclotomicValue, scale: i64) {
        let e = self.e;
        for (i, &ca) in a.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            for (j, &cb) in b.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
                acc[(i + j) % e] += scale * ca * cb;
            }
        }
    }

    /// Complex conjugate, `zeta_e -> zeta_e^-1`.
    pub fn conj(&self, a: &CyclotomicValue) -> CyclotomicValue {
        let e = self.e;
        let mut raw = vec![0i64; e];
        for (i, &c) in a.coeffs.iter().enumerate() {
            raw[(e - i) % e] += c;
        }
        self.reduce(raw)
    }
}

/// `sum_k coeffs[k] zeta_e^k` in canonical form: reduced modulo `Phi_e`, so
/// coefficients at and above `phi(e)` are zero and equality is exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicValue {
    e: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicValue {
    pub fn root_order(&self) -> usize {
        self.e
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.coeffs[1..].iter().all(|&c| c == 0).then_some(self.coeffs[0])
    }

    pub fn add(&self, other: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.e, other.e);
        CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &CyclotomicValue) -> CyclotomicValue {
        assert_eq!(self.e, other.e);
        CyclotomicValue {
            e: self.e,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.as_integer() {
            return write!(f, "{n}");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().filter(|(_, c)| **c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (_, 1) => write!(f, "z{}^{k}", self.e)?,
                (_, m) => write!(f, "{m}*z{}^{k}", self.e)?,
            }
        }
        Ok(())
    }
}
