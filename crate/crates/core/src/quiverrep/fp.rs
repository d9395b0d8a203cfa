//! Dense matrices over a prime field `F_p`.

use serde::{Deserialize, Serialize};

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let (mut base, mut acc) = (a as u64 % p as u64, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    acc as u32
}

/// Smallest generator of `F_p^×`.
pub fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = p - 1;
    let factors: Vec<u32> = (2..=n).filter(|d| n.is_multiple_of(*d) && is_prime(*d)).collect();
    (2..p)
        .find(|&g| factors.iter().all(|&f| pow_mod(g, n / f, p) != 1))
        .expect("every prime field has a primitive root")
}

/// Row-major `rows × cols` matrix with entries in `0..p`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u32>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u32>], cols: usize, p: u32) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v % p);
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Mat, p: u32) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = (out.data[idx] + a * other.get(k, j)) % p;
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[u32], p: u32) -> Vec<u32> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.get(i, j) as u64 * v[j] as u64)
                    .sum::<u64>()
                    .rem_euclid(p as u64) as u32
            })
            .collect()
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, p: u32) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = inv_mod(m.get(r, c), p);
            for j in 0..m.cols {
                let v = m.get(r, j) * inv % p;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c);
                if f == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = (m.get(i, j) + p * p - f * m.get(r, j) % p) % p;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, p: u32) -> usize {
        self.rref(p).1.len()
    }

    /// Basis of `{v : self·v = 0}`.
    pub fn nullspace(&self, p: u32) -> Vec<Vec<u32>> {
        let (r, pivots) = self.rref(p);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u32; self.cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - r.get(i, f)) % p;
                }
                v
            })
            .collect()
    }

    pub fn is_invertible(&self, p: u32) -> bool {
        self.rows == self.cols && self.rank(p) == self.rows
    }

    pub fn inverse(&self, p: u32) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, n + i, 1);
        }
        let (r, pivots) = aug.rref(p);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j));
            }
        }
        Some(out)
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Matrix whose rows are the given vectors.
    pub fn from_vectors(vs: &[Vec<u32>], cols: usize) -> Mat {
        let mut m = Mat::zeros(vs.len(), cols);
        for (i, v) in vs.iter().enumerate() {
            m.data[i * cols..(i + 1) * cols].copy_from_slice(v);
        }
        m
    }
}

/// Reduces `v` against the rows of an RREF matrix with the given pivots,
/// returning the residual (zero at every pivot column).
pub fn reduce(v: &[u32], basis: &Mat, pivots: &[usize], p: u32) -> Vec<u32> {
    let mut r = v.to_vec();
    for (i, &pc) in pivots.iter().enumerate() {
        let f = r[pc];
        if f == 0 {
            continue;
        }
        for j in 0..r.len() {
            r[j] = (r[j] + p * p - f * basis.get(i, j) % p) % p;
        }
    }
    r
}

/// All `k`-dimensional subspaces of `F_p^n`, one RREF `k × n` matrix each.
pub fn subspaces(n: usize, k: usize, p: u32) -> Vec<(Mat, Vec<usize>)> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut pivots = Vec::with_capacity(k);
    fn combos(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        for c in start..n {
            if n - c < k - cur.len() {
                break;
            }
            cur.push(c);
            combos(c + 1, n, k, cur, f);
            cur.pop();
        }
    }
    combos(0, n, k, &mut pivots, &mut |piv: &[usize]| {
        // free slots: row i, column c > piv[i] with c not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                ((piv[i] + 1)..n)
                    .filter(|c| !piv.contains(c))
                    .map(move |c| (i, c))
            })
            .collect();
        let mut digits = vec![0u32; free.len()];
        loop {
            let mut m = Mat::zeros(k, n);
            for (i, &pc) in piv.iter().enumerate() {
                m.set(i, pc, 1);
            }
            for (&(i, c), &d) in free.iter().zip(&digits) {
                m.set(i, c, d);
            }
            out.push((m, piv.to_vec()));
            // odometer
            let mut idx = 0;
            loop {
                if idx == digits.len() {
                    return;
                }
                digits[idx] += 1;
                if digits[idx] < p {
                    break;
                }
                digits[idx] = 0;
                idx += 1;
            }
        }
    });
    out
}

/// `|GL(n, F_p)| = Π_{k<n} (p^n − p^k)`.
pub fn gl_order(n: usize, p: u32) -> u128 {
    let pn = (p as u128).pow(n as u32);
    (0..n).map(|k| pn - (p as u128).pow(k as u32)).product()
}
