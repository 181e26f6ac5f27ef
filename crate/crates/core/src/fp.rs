//! Arithmetic over prime fields `GF(p)`: dense matrices, exact Gaussian
//! elimination, and scalar-canonical projective representatives.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest prime factor, or `None` for n < 2.
pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    if n < 2 {
        return None;
    }
    if n.is_multiple_of(2) {
        return Some(2);
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 2;
    }
    Some(n)
}

/// If `n = p^k` with `p` prime and `k >= 1`, return `(p, k)`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    let p = smallest_prime_factor(n)?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut out = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            out = out * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    out
}

/// Multiplicative inverse mod a prime `p`.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// A dense `n x n` matrix over `GF(p)`, entries stored row-major in `[0, p)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpMatrix {
    p: u32,
    n: usize,
    entries: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {:?})", self.p, self.rows())
    }
}

impl FpMatrix {
    pub fn new(n: usize, p: u32, entries: Vec<u32>) -> Result<Self, FpError> {
        if !is_prime(p as u64) {
            return Err(FpError::NotPrime(p as u64));
        }
        if entries.len() != n * n {
            return Err(FpError::DimensionMismatch(entries.len(), n * n));
        }
        Ok(FpMatrix {
            p,
            n,
            entries: entries.into_iter().map(|e| e % p).collect(),
        })
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        FpMatrix { p, n, entries }
    }

    /// `I + c * E_ij` (elementary transvection matrix).
    pub fn elementary(n: usize, p: u32, i: usize, j: usize, c: u32) -> Self {
        assert!(i != j && i < n && j < n);
        let mut m = Self::identity(n, p);
        m.entries[i * n + j] = c % p;
        m
    }

    pub fn diagonal(p: u32, diag: &[u32]) -> Self {
        let n = diag.len();
        let mut m = FpMatrix {
            p,
            n,
            entries: vec![0; n * n],
        };
        for (i, &d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d % p;
        }
        m
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p, "modulus mismatch");
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let p = self.p as u64;
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut entries[i * n + j];
                    *cell = ((*cell as u64 + a * other.entries[k * n + j] as u64) % p) as u32;
                }
            }
        }
        FpMatrix {
            p: self.p,
            n,
            entries,
        }
    }

    pub fn scalar_mul(&self, c: u32) -> FpMatrix {
        let p = self.p as u64;
        let c = c as u64 % p;
        FpMatrix {
            p: self.p,
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|&e| (e as u64 * c % p) as u32)
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == FpMatrix::identity(self.n, self.p)
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<FpMatrix> {
        let n = self.n;
        let p = self.p as u64;
        let mut a: Vec<u64> = self.entries.iter().map(|&e| e as u64).collect();
        let mut b: Vec<u64> = FpMatrix::identity(n, self.p)
            .entries
            .iter()
            .map(|&e| e as u64)
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| a[r * n + col] != 0)?;
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    b.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv = inv_mod(a[col * n + col], p);
            for j in 0..n {
                a[col * n + j] = a[col * n + j] * inv % p;
                b[col * n + j] = b[col * n + j] * inv % p;
            }
            for r in 0..n {
                if r == col || a[r * n + col] == 0 {
                    continue;
                }
                let factor = a[r * n + col];
                for j in 0..n {
                    a[r * n + j] = (a[r * n + j] + (p - factor) * a[col * n + j]) % p;
                    b[r * n + j] = (b[r * n + j] + (p - factor) * b[col * n + j]) % p;
                }
            }
        }
        Some(FpMatrix {
            p: self.p,
            n,
            entries: b.into_iter().map(|e| e as u32).collect(),
        })
    }
}

/// A matrix taken modulo scalars: the stored representative is the
/// lexicographically least among `{c * M : c in GF(p)^*}`, so equality and
/// hashing see projective classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMatrix(FpMatrix);

impl fmt::Debug for ProjMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Proj{:?}", self.0)
    }
}

impl ProjMatrix {
    pub fn new(m: FpMatrix) -> Self {
        let mut best = m.clone();
        for c in 2..m.p {
            let candidate = m.scalar_mul(c);
            if candidate.entries < best.entries {
                best = candidate;
            }
        }
        ProjMatrix(best)
    }

    pub fn representative(&self) -> &FpMatrix {
        &self.0
    }

    pub fn mul(&self, other: &ProjMatrix) -> ProjMatrix {
        ProjMatrix::new(self.0.mul(&other.0))
    }

    pub fn inverse(&self) -> ProjMatrix {
        ProjMatrix::new(self.0.inverse().expect("group elements are invertible"))
    }

    pub fn identity(n: usize, p: u32) -> Self {
        ProjMatrix::new(FpMatrix::identity(n, p))
    }
}

/// Row-reduce a dense `rows x cols` matrix over `GF(p)` in place; returns
/// the rank.
#[allow(clippy::needless_range_loop)] // the pivot row is read while other rows are written
pub fn row_rank(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col] % p, p);
        for j in col..cols {
            m[rank][j] = m[rank][j] % p * inv % p;
        }
        for r in 0..rows {
            if r == rank || m[r][col].is_multiple_of(p) {
                continue;
            }
            let factor = m[r][col] % p;
            for j in col..cols {
                m[r][j] = (m[r][j] % p + (p - factor) * m[rank][j] % p) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Dimension of the solution space of the homogeneous system `M x = 0`.
pub fn nullity(m: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    cols - row_rank(m, p)
}
