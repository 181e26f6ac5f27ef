//! Abelianisation of automorphisms to integer matrices, reduction mod `p`,
//! and the induced finite matrix-group images.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::autf::Automorphism;
use crate::fp::{is_prime, FpMatrix};
use crate::groups::{builders, GroupError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinearizeError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// An `n x n` matrix over the integers, row-major, unbounded entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = BigInt::one();
        }
        IntMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix {
            n,
            entries: rows
                .into_iter()
                .flatten()
                .map(BigInt::from)
                .collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut entries = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let term = a * &other.entries[k * n + j];
                    entries[i * n + j] += term;
                }
            }
        }
        IntMatrix { n, entries }
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.entries.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k * n + k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&r| !m[r * n + k].is_zero()) else {
                    return BigInt::zero();
                };
                for j in 0..n {
                    m.swap(k * n + j, swap * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i * n + j] * &m[k * n + k] - &m[i * n + k] * &m[k * n + j];
                    m[i * n + j] = num / &prev;
                }
                m[i * n + k] = BigInt::zero();
            }
            prev = m[k * n + k].clone();
        }
        sign * m[(n - 1) * n + (n - 1)].clone()
    }
}

/// Row `i` is the exponent vector of the image of `a_i`: entry `(i, j)` is
/// the exponent sum of `a_j` in `f(a_i)`.
///
/// With this row convention abelianisation reverses composition:
/// `abelianize(compose(f, g)) = abelianize(g).mul(&abelianize(f))` — the
/// multiplicativity tests pin this order.
pub fn abelianize(f: &Automorphism) -> IntMatrix {
    let n = f.rank() as usize;
    let mut entries = vec![BigInt::zero(); n * n];
    for (i, image) in f.forward_images().iter().enumerate() {
        for letter in image.letters() {
            let j = (letter.index - 1) as usize;
            entries[i * n + j] += BigInt::from(letter.sign as i64);
        }
    }
    IntMatrix { n, entries }
}

/// Determinant of the abelianised matrix; `+1` exactly on the special
/// subgroup.
pub fn det_sign(f: &Automorphism) -> i8 {
    let d = abelianize(f).det();
    debug_assert!(d.abs().is_one(), "automorphisms abelianise to GL_n(Z)");
    if d.is_positive() {
        1
    } else {
        -1
    }
}

/// Entrywise reduction into `GF(p)`.
pub fn mod_p(m: &IntMatrix, p: u32) -> Result<FpMatrix, LinearizeError> {
    if !is_prime(p as u64) {
        return Err(LinearizeError::NotPrime(p as u64));
    }
    let pp = BigInt::from(p);
    let entries: Vec<u32> = m
        .entries
        .iter()
        .map(|e| {
            let mut r = e % &pp;
            if r.is_negative() {
                r += &pp;
            }
            u32::try_from(r).expect("residue fits")
        })
        .collect();
    Ok(FpMatrix::new(m.n, p, entries).expect("p checked prime"))
}

/// Order of the group generated by the mod-p images of all transvection
/// generators at rank `n`, modulo scalars: `|L_n(p)|` computed by closure.
pub fn natural_image_order(n: usize, p: u32, cap: usize) -> Result<BigUint, LinearizeError> {
    let g = builders::natural_image(n, p, cap)?;
    Ok(BigUint::from(g.order()))
}
