//! Simultaneous eigenspace decomposition of a family of commuting
//! involutions indexed by pairs `{i, j}` of strands.
//!
//! For a subset `I` of the strand set, the space `E_I` consists of the
//! vectors on which the pair involution for `{i, j}` acts by
//! `(-1)^{chi_I(i) + chi_I(j)}`. Subsets and their complements give the
//! same space, so dimensions are keyed by a canonical representative.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::fp::{self, FpMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepCheckError {
    #[error("prime {0} must be odd")]
    EvenPrime(u32),
    #[error("need n >= 2 and n <= 16, got {0}")]
    BadStrandCount(u32),
    #[error("expected {expected} pair images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("image for pair ({i}, {j}) is not an involution")]
    NotInvolution { i: u32, j: u32 },
    #[error("images for pairs ({i1}, {j1}) and ({i2}, {j2}) do not commute")]
    NotCommuting { i1: u32, j1: u32, i2: u32, j2: u32 },
    #[error("images have mismatched dimensions or moduli")]
    Mismatched,
}

/// Dimensions of the simultaneous eigenspaces, keyed by canonical subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub n: u32,
    pub p: u32,
    /// Ambient module dimension.
    pub dim: usize,
    /// Canonical subset (sorted 1-based indices) to eigenspace dimension;
    /// zero-dimensional spaces are omitted.
    pub dims: BTreeMap<Vec<u32>, usize>,
}

impl ModuleDecomposition {
    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn dim_of(&self, subset: &[u32]) -> usize {
        let canonical = canonical_subset(subset, self.n);
        self.dims.get(&canonical).copied().unwrap_or(0)
    }
}

/// Canonical representative of `{I, complement(I)}`: the smaller subset,
/// ties broken lexicographically on the sorted index lists.
pub fn canonical_subset(subset: &[u32], n: u32) -> Vec<u32> {
    let mut own: Vec<u32> = subset.to_vec();
    own.sort_unstable();
    own.dedup();
    let complement: Vec<u32> = (1..=n).filter(|i| !own.contains(i)).collect();
    match own.len().cmp(&complement.len()) {
        std::cmp::Ordering::Less => own,
        std::cmp::Ordering::Greater => complement,
        std::cmp::Ordering::Equal => {
            if own <= complement {
                own
            } else {
                complement
            }
        }
    }
}

/// Pairs `(i, j)` with `i < j`, 1-based, in lexicographic order. The image
/// slice passed to [`decompose`] must follow this order.
pub fn pair_order(n: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push((i, j));
        }
    }
    out
}

/// Decompose a module under commuting pair involutions over `GF(p)`,
/// `p` odd. Returns the eigenspace dimension for every canonical subset.
pub fn decompose(
    n: u32,
    p: u32,
    images: &[FpMatrix],
) -> Result<ModuleDecomposition, RepCheckError> {
    if p == 2 || !fp::is_prime(p as u64) {
        return Err(RepCheckError::EvenPrime(p));
    }
    if !(2..=16).contains(&n) {
        return Err(RepCheckError::BadStrandCount(n));
    }
    let pairs = pair_order(n);
    if images.len() != pairs.len() {
        return Err(RepCheckError::WrongImageCount {
            expected: pairs.len(),
            got: images.len(),
        });
    }
    let dim = images[0].dim();
    if images
        .iter()
        .any(|m| m.dim() != dim || m.modulus() != p)
    {
        return Err(RepCheckError::Mismatched);
    }
    for (idx, m) in images.iter().enumerate() {
        if !m.mul(m).is_identity() {
            let (i, j) = pairs[idx];
            return Err(RepCheckError::NotInvolution { i, j });
        }
    }
    for a in 0..images.len() {
        for b in a + 1..images.len() {
            if images[a].mul(&images[b]) != images[b].mul(&images[a]) {
                let (i1, j1) = pairs[a];
                let (i2, j2) = pairs[b];
                return Err(RepCheckError::NotCommuting { i1, j1, i2, j2 });
            }
        }
    }

    let mut dims = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let subset: Vec<u32> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
        if canonical_subset(&subset, n) != subset {
            continue;
        }
        let d = eigenspace_dim(p, dim, images, &pairs, &subset);
        if d > 0 {
            dims.insert(subset, d);
        }
    }
    Ok(ModuleDecomposition { n, p, dim, dims })
}

fn eigenspace_dim(
    p: u32,
    dim: usize,
    images: &[FpMatrix],
    pairs: &[(u32, u32)],
    subset: &[u32],
) -> usize {
    // Stack (M - s I) for every pair and take the nullity.
    let chi = |i: u32| u64::from(subset.contains(&i));
    let mut stacked: Vec<Vec<u64>> = Vec::with_capacity(images.len() * dim);
    for (m, &(i, j)) in images.iter().zip(pairs) {
        let sign_negative = (chi(i) + chi(j)) % 2 == 1;
        let s = if sign_negative { p as u64 - 1 } else { 1 };
        for r in 0..dim {
            let row: Vec<u64> = (0..dim)
                .map(|c| {
                    let diag = if r == c { s } else { 0 };
                    (m.get(r, c) as u64 + p as u64 - diag) % p as u64
                })
                .collect();
            stacked.push(row);
        }
    }
    fp::nullity(stacked, dim, p as u64)
}

/// Pair images of the standard module: the involution for `{i, j}` negates
/// coordinates `i` and `j`.
pub fn standard_module(n: u32, p: u32) -> Vec<FpMatrix> {
    pair_order(n)
        .into_iter()
        .map(|(i, j)| {
            let diag: Vec<u32> = (1..=n)
                .map(|k| if k == i || k == j { p - 1 } else { 1 })
                .collect();
            FpMatrix::diagonal(p, &diag)
        })
        .collect()
}

/// Standard module padded with `extra` trivial coordinates.
pub fn standard_plus_trivial(n: u32, p: u32, extra: usize) -> Vec<FpMatrix> {
    let dim = n as usize + extra;
    pair_order(n)
        .into_iter()
        .map(|(i, j)| {
            let diag: Vec<u32> = (0..dim)
                .map(|k| {
                    let strand = k as u32 + 1;
                    if strand == i || strand == j {
                        p - 1
                    } else {
                        1
                    }
                })
                .collect();
            FpMatrix::diagonal(p, &diag)
        })
        .collect()
}

/// Conjugate every image by the same invertible matrix (basis change).
pub fn conjugate_family(images: &[FpMatrix], basis: &FpMatrix) -> Option<Vec<FpMatrix>> {
    let inv = basis.inverse()?;
    Some(
        images
            .iter()
            .map(|m| inv.mul(m).mul(basis))
            .collect(),
    )
}
