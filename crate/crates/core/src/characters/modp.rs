//! Prime-field arithmetic and the small amount of linear algebra Dixon needs.

use crate::group::is_prime;

pub(crate) const PRIME_SEARCH_CAP: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Fp {
    pub p: u64,
}

impl Fp {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut k: u64) -> u64 {
        let mut acc = 1 % self.p;
        a %= self.p;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            k >>= 1;
        }
        acc
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let m = self.p - 1;
        let factors: Vec<u64> = (2..=m)
            .filter(|&q| m.is_multiple_of(q) && is_prime(q as usize))
            .collect();
        (1..self.p)
            .find(|&g| factors.iter().all(|&q| self.pow(g, m / q) != 1))
            .expect("every prime field has a primitive root")
    }
}

/// Least prime `l` with `l = 1 (mod e)` and `l^2 > 4 * order`.
pub(crate) fn dixon_prime(exponent: usize, order: usize) -> Option<u64> {
    let e = exponent as u64;
    let bound = 4 * order as u64;
    (1..)
        .map(|t| e * t + 1)
        .take_while(|&l| l < PRIME_SEARCH_CAP)
        .find(|&l| l * l > bound && is_prime(l as usize))
}

/// Dense matrix over `F_p`, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn from_rows(rows: Vec<Vec<u64>>, cols: usize) -> Self {
        let n = rows.len();
        Mat {
            rows: n,
            cols,
            data: rows.concat(),
        }
    }

    /// In-place reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self, f: Fp) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(pr * self.cols + j, r * self.cols + j);
                }
            }
            let inv = f.inv(self.at(r, c));
            for j in c..self.cols {
                let v = f.mul(self.at(r, j), inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.at(i, c);
                if factor == 0 {
                    continue;
                }
                for j in c..self.cols {
                    let v = f.sub(self.at(i, j), f.mul(factor, self.at(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.rows = r;
        self.data.truncate(r * self.cols);
        pivots
    }

    /// Basis (rows, reduced echelon form) of `{ x : self * x = 0 }`.
    pub fn nullspace(&self, f: Fp) -> Mat {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.sub(0, m.at(r, fc)));
            }
        }
        basis.rref(f);
        basis
    }
}

/// Coefficients (lowest first) of the monic polynomial `poly / (x - root)`.
pub(crate) fn deflate(f: Fp, poly: &[u64], root: u64) -> Vec<u64> {
    let deg = poly.len() - 1;
    let mut q = vec![0u64; deg];
    let mut carry = 0u64;
    for i in (0..deg).rev() {
        carry = f.add(poly[i + 1], f.mul(carry, root));
        q[i] = carry;
    }
    q
}

pub(crate) fn eval(f: Fp, poly: &[u64], x: u64) -> u64 {
    poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dixon_primes() {
        assert_eq!(dixon_prime(2, 2), Some(3));
        assert_eq!(dixon_prime(6, 6), Some(7));
        assert_eq!(dixon_prime(4, 8), Some(13));
        assert_eq!(dixon_prime(3, 27), Some(13));
        assert_eq!(dixon_prime(1, 1), Some(3));
    }

    #[test]
    fn field_basics() {
        let f = Fp { p: 13 };
        assert_eq!(f.mul(f.inv(5), 5), 1);
        assert_eq!(f.primitive_root(), 2);
        assert_eq!(Fp { p: 7 }.primitive_root(), 3);
        let poly = [f.sub(0, 6), 1, 1]; // (x - 2)(x + 3) = x^2 + x - 6
        assert_eq!(eval(f, &poly, 2), 0);
        assert_eq!(deflate(f, &poly, 2), vec![3, 1]);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let f = Fp { p: 7 };
        let m = Mat::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6]], 3);
        let ns = m.nullspace(f);
        assert_eq!(ns.rows, 2);
        for r in 0..ns.rows {
            let v = ns.row(r);
            assert_eq!((v[0] + 2 * v[1] + 3 * v[2]) % 7, 0);
        }
    }
}
