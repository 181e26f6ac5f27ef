//! Standard group constructions: alternating and symmetric groups, the
//! signed-permutation groups `D'_n`, symplectic groups `Sp_4(q)` and their
//! central quotients, and the mod-p images of the transvection generators.
//!
//! Builders whose orders are known by formula assert them after closure
//! and fail loudly on mismatch.

use crate::fp::{is_prime, FpMatrix, ProjMatrix};

use super::{Element, FiniteGroup, GroupError, Perm, SignedPerm};

fn factorial_u128(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn consecutive_three_cycles(n: usize) -> Vec<Perm> {
    (1..=n - 2)
        .map(|i| Perm::from_cycles(n, &[vec![i, i + 1, i + 2]]).expect("indices in range"))
        .collect()
}

/// The alternating group `A_n` on `n` points, `n >= 3`.
pub fn alt(n: usize, cap: usize) -> Result<FiniteGroup<Perm>, GroupError> {
    if n < 3 {
        return Err(GroupError::BadParameter(format!(
            "alternating group needs degree >= 3, got {n}"
        )));
    }
    let g = FiniteGroup::closure(consecutive_three_cycles(n), cap)?;
    let expected = factorial_u128(n) / 2;
    gate(g, expected)
}

/// The symmetric group `S_n`, `n >= 2`.
pub fn sym(n: usize, cap: usize) -> Result<FiniteGroup<Perm>, GroupError> {
    if n < 2 {
        return Err(GroupError::BadParameter(format!(
            "symmetric group needs degree >= 2, got {n}"
        )));
    }
    let gens = (1..n)
        .map(|i| Perm::from_cycles(n, &[vec![i, i + 1]]).expect("indices in range"))
        .collect();
    let g = FiniteGroup::closure(gens, cap)?;
    let expected = factorial_u128(n);
    gate(g, expected)
}

/// `D'_n = 2^{n-1} ⋊ A_n`: even sign flips together with even strand
/// permutations, order `2^{n-1} * n!/2`.
pub fn dprime(n: usize, cap: usize) -> Result<FiniteGroup<SignedPerm>, GroupError> {
    if n < 3 {
        return Err(GroupError::BadParameter(format!(
            "dprime needs at least 3 strands, got {n}"
        )));
    }
    let mut gens = vec![SignedPerm::eps_pair(n, 1, 2)?];
    gens.extend(
        consecutive_three_cycles(n)
            .iter()
            .map(SignedPerm::from_perm),
    );
    let g = FiniteGroup::closure(gens, cap)?;
    let expected = (1u128 << (n - 1)) * factorial_u128(n) / 2;
    gate(g, expected)
}

/// Symplectic transvection `x -> x + c * w(x, v) * v` on `GF(p)^4` with the
/// standard form `w(x, y) = x1 y3 - x3 y1 + x2 y4 - x4 y2`.
fn symplectic_transvection(p: u32, v: [u32; 4], c: u32) -> FpMatrix {
    let pp = p as u64;
    // (J v) with J the Gram matrix of w.
    let jv = [
        v[2] as u64 % pp,
        v[3] as u64 % pp,
        (pp - v[0] as u64 % pp) % pp,
        (pp - v[1] as u64 % pp) % pp,
    ];
    let mut entries = vec![0u32; 16];
    for i in 0..4 {
        for j in 0..4 {
            let base = u64::from(i == j);
            let add = c as u64 % pp * (v[i] as u64 % pp) % pp * jv[j] % pp;
            entries[i * 4 + j] = ((base + add) % pp) as u32;
        }
    }
    FpMatrix::new(4, p, entries).expect("p validated by caller")
}

fn sp4_generators(q: u32) -> Vec<FpMatrix> {
    // Transvection directions: the unit vectors and all 0/1 vectors of
    // support two, which mix the two hyperbolic planes.
    let mut dirs: Vec<[u32; 4]> = Vec::new();
    for i in 0..4 {
        let mut v = [0u32; 4];
        v[i] = 1;
        dirs.push(v);
    }
    for i in 0..4 {
        for j in i + 1..4 {
            let mut v = [0u32; 4];
            v[i] = 1;
            v[j] = 1;
            dirs.push(v);
        }
    }
    dirs.into_iter()
        .map(|v| symplectic_transvection(q, v, 1))
        .collect()
}

fn sp4_order(q: u128) -> u128 {
    q * q * q * q * (q * q - 1) * (q * q * q * q - 1)
}

/// `Sp_4(q)` for prime `q`, generated by symplectic transvections; the
/// closure order is checked against `q^4 (q^2-1)(q^4-1)`.
pub fn sp4(q: u32, cap: usize) -> Result<FiniteGroup<FpMatrix>, GroupError> {
    if !is_prime(q as u64) {
        return Err(GroupError::BadParameter(format!(
            "sp4 needs a prime field size, got {q}"
        )));
    }
    let g = FiniteGroup::closure(sp4_generators(q), cap)?;
    gate(g, sp4_order(q as u128))
}

/// `PSp_4(q) = Sp_4(q) / {±1}`, built directly over scalar-canonical
/// matrices.
pub fn psp4(q: u32, cap: usize) -> Result<FiniteGroup<ProjMatrix>, GroupError> {
    if !is_prime(q as u64) {
        return Err(GroupError::BadParameter(format!(
            "psp4 needs a prime field size, got {q}"
        )));
    }
    let gens = sp4_generators(q).into_iter().map(ProjMatrix::new).collect();
    let g = FiniteGroup::closure(gens, cap)?;
    let expected = sp4_order(q as u128) / if q % 2 == 1 { 2 } else { 1 };
    gate(g, expected)
}

/// The group generated by the mod-p images of all transvection generators
/// of rank `n`, taken modulo scalars: the image of the natural map to
/// `L_n(p)`. For `p = 2` the scalar quotient is trivial.
pub fn natural_image(n: usize, p: u32, cap: usize) -> Result<FiniteGroup<ProjMatrix>, GroupError> {
    if !is_prime(p as u64) {
        return Err(GroupError::BadParameter(format!(
            "natural image needs a prime modulus, got {p}"
        )));
    }
    if n < 2 {
        return Err(GroupError::BadParameter(format!(
            "natural image needs rank >= 2, got {n}"
        )));
    }
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                gens.push(ProjMatrix::new(FpMatrix::elementary(n, p, i, j, 1)));
            }
        }
    }
    FiniteGroup::closure(gens, cap)
}

fn gate<E: Element>(g: FiniteGroup<E>, expected: u128) -> Result<FiniteGroup<E>, GroupError> {
    if g.order() as u128 != expected {
        return Err(GroupError::GateFailed {
            expected: expected.to_string(),
            got: g.order(),
        });
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alternating_orders() {
        assert_eq!(alt(4, 1000).unwrap().order(), 12);
        assert_eq!(alt(5, 1000).unwrap().order(), 60);
        assert_eq!(alt(6, 1000).unwrap().order(), 360);
        assert!(alt(2, 1000).is_err());
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(sym(4, 1000).unwrap().order(), 24);
        assert_eq!(sym(5, 1000).unwrap().order(), 120);
    }

    #[test]
    fn dprime_orders() {
        assert_eq!(dprime(3, 10_000).unwrap().order(), 12);
        assert_eq!(dprime(4, 10_000).unwrap().order(), 96);
        assert_eq!(dprime(5, 10_000).unwrap().order(), 960);
    }

    #[test]
    fn symplectic_transvections_have_determinant_structure() {
        // Transvections are unipotent: (T - 1)^2 = 0, so T has order p.
        let t = symplectic_transvection(3, [1, 0, 1, 0], 1);
        let cubed = t.mul(&t).mul(&t);
        assert!(cubed.is_identity());
    }

    #[test]
    fn sp4_gate_holds_for_q3() {
        let g = sp4(3, 100_000).unwrap();
        assert_eq!(g.order(), 51840);
    }

    #[test]
    fn psp4_gate_holds_for_q3() {
        let g = psp4(3, 100_000).unwrap();
        assert_eq!(g.order(), 25920);
    }

    #[test]
    fn sp4_rejects_non_prime_fields() {
        assert!(matches!(sp4(4, 1000), Err(GroupError::BadParameter(_))));
    }

    #[test]
    fn natural_image_small_orders() {
        assert_eq!(natural_image(2, 2, 1000).unwrap().order(), 6);
        assert_eq!(natural_image(3, 2, 1000).unwrap().order(), 168);
        // PSL_2(3) = A_4.
        assert_eq!(natural_image(2, 3, 1000).unwrap().order(), 12);
        // PSL_3(3) has trivial scalar part since gcd(3, 2) = 1.
        assert_eq!(natural_image(3, 3, 100_000).unwrap().order(), 5616);
    }
}
