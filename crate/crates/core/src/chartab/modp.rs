//! Dense linear algebra over a small prime field.

use crate::error::Error;

#[derive(Debug, Clone, Copy)]
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

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1 % self.p;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(self) -> u64 {
        let n = self.p - 1;
        let mut factors = Vec::new();
        let mut m = n;
        let mut q = 2;
        while q * q <= m {
            if m.is_multiple_of(q) {
                factors.push(q);
                while m.is_multiple_of(q) {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            factors.push(m);
        }
        (2..self.p)
            .find(|&z| factors.iter().all(|&f| self.pow(z, n / f) != 1))
            .expect("prime field has a primitive root")
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Reduces `rows` to reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(f: Fp, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(i) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, i);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let s = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                    *x = f.sub(*x, f.mul(s, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{y : M y = 0}` for a square matrix given by rows.
pub(crate) fn nullspace(f: Fp, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut rows = m.to_vec();
    let pivots = rref(f, &mut rows);
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in rows.iter().zip(&pivots) {
                v[pc] = f.sub(0, row[fc]);
            }
            v
        })
        .collect()
}

/// Characteristic polynomial, low degree first, via Hessenberg reduction.
pub(crate) fn charpoly(f: Fp, m: &[Vec<u64>]) -> Vec<u64> {
    let n = m.len();
    let mut h = m.to_vec();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = f.inv(h[j + 1][j]);
        for r in j + 2..n {
            let u = f.mul(h[r][j], inv);
            if u == 0 {
                continue;
            }
            for c in 0..n {
                let t = f.mul(u, h[j + 1][c]);
                h[r][c] = f.sub(h[r][c], t);
            }
            for row in h.iter_mut() {
                let t = f.mul(u, row[r]);
                row[j + 1] = f.add(row[j + 1], t);
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &polys[k - 1];
        let mut cur = vec![0u64; k + 1];
        let d = h[k - 1][k - 1];
        for (i, &c) in prev.iter().enumerate() {
            cur[i + 1] = f.add(cur[i + 1], c);
            cur[i] = f.sub(cur[i], f.mul(d, c));
        }
        let mut t = 1u64;
        for i in 1..k {
            t = f.mul(t, h[k - i][k - i - 1]);
            if t == 0 {
                break;
            }
            let s = f.mul(t, h[k - i - 1][k - 1]);
            for (j, &c) in polys[k - i - 1].iter().enumerate() {
                cur[j] = f.sub(cur[j], f.mul(s, c));
            }
        }
        polys.push(cur);
    }
    polys.pop().unwrap()
}

/// All roots in the field, in increasing order.
pub(crate) fn roots(f: Fp, poly: &[u64]) -> Vec<u64> {
    (0..f.p)
        .filter(|&x| poly.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c)) == 0)
        .collect()
}

pub(crate) fn fail(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_small_matrix() {
        let f = Fp { p: 13 };
        // [[2,1],[1,2]] has eigenvalues 1 and 3
        let m = vec![vec![2, 1], vec![1, 2]];
        let cp = charpoly(f, &m);
        assert_eq!(roots(f, &cp), vec![1, 3]);
        let m3 = vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]];
        // x^3 - 1 over F_13 splits since 3 | 12
        assert_eq!(roots(f, &charpoly(f, &m3)).len(), 3);
    }

    #[test]
    fn nullspace_dimension() {
        let f = Fp { p: 7 };
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 0]];
        let ns = nullspace(f, &m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            for row in &m {
                let s = row
                    .iter()
                    .zip(&v)
                    .fold(0, |a, (&x, &y)| f.add(a, f.mul(x, y)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn primitive_roots() {
        for p in [19u64, 151, 751] {
            let f = Fp { p };
            let z = f.primitive_root();
            let order = (1..p).find(|&k| f.pow(z, k) == 1).unwrap();
            assert_eq!(order, p - 1);
        }
    }
}
