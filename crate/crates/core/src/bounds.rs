//! The action-size bound `k(n)`: the largest set-size threshold below
//! which every action of the rank-`n` special automorphism group is
//! trivial, together with the exponential-growth check and the inequality
//! preconditions used for the outer-rigidity application.
//!
//! For `n >= 7`, `k(n)` maximises `min(2^{n-r-p(n)}, C(n,r))` over an
//! admissible range of `r`. Two ranges are implemented:
//!
//! * `Literal` — integers `1 <= r <= n/2 - 3`, exactly as the bound is
//!   stated (empty for `n = 7`);
//! * `ProofConsistent` — additionally admits `r = 2` for `n` in 7..=9,
//!   where the sharper derivation takes `R = 2` even though the literal
//!   range excludes it.
//!
//! Both are reported; the discrepancy is surfaced, not resolved.

use num_bigint::BigUint;
use serde_json::json;
use thiserror::Error;

use crate::orders::{binomial, pow2};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("k(n) needs n >= 3, got {0}")]
    RankTooSmall(u32),
    #[error("precheck needs an even n >= 12, got {0}")]
    BadPrecheckRank(u32),
    #[error("sweep needs 7 <= lo <= hi, got ({0}, {1})")]
    BadSweepRange(u32, u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Literal,
    ProofConsistent,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Literal => "literal",
            Mode::ProofConsistent => "proof-consistent",
        }
    }
}

/// Where the optimum was attained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RStar {
    /// Small ranks `3..=6` use fixed values, not the max-min formula.
    Table,
    R(u32),
    /// The admissible range is empty (literal mode at `n = 7`); the bound
    /// degenerates to the vacuous value 1.
    Vacuous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundResult {
    pub n: u32,
    pub mode: Mode,
    pub k_value: BigUint,
    pub r_star: RStar,
    /// `(r, min(2^{n-r-p(n)}, C(n,r)))` for every admissible `r`.
    pub per_r: Vec<(u32, BigUint)>,
}

/// Parity indicator: 0 for odd `n`, 1 for even `n`.
pub fn parity_indicator(n: u32) -> u32 {
    (n + 1) % 2
}

/// Admissible `r` values for the max-min at rank `n >= 7`.
pub fn admissible_r(n: u32, mode: Mode) -> Vec<u32> {
    // Largest integer r with r <= n/2 - 3, i.e. floor((n - 6) / 2).
    let r_max = n.saturating_sub(6) / 2;
    let mut out: Vec<u32> = (1..=r_max).collect();
    if mode == Mode::ProofConsistent && (7..=9).contains(&n) && !out.contains(&2) {
        out.push(2);
        out.sort_unstable();
    }
    out
}

fn min_term(n: u32, r: u32) -> BigUint {
    let power = pow2(u64::from(n - r - parity_indicator(n)));
    let choose = binomial(u64::from(n), u64::from(r));
    power.min(choose)
}

/// The bound `k(n)`: fixed values 7, 8, 12, 14 for `n = 3..=6`, the
/// max-min formula beyond.
pub fn k(n: u32, mode: Mode) -> Result<BoundResult, BoundsError> {
    match n {
        0..=2 => Err(BoundsError::RankTooSmall(n)),
        3..=6 => {
            let value = [7u32, 8, 12, 14][(n - 3) as usize];
            Ok(BoundResult {
                n,
                mode,
                k_value: BigUint::from(value),
                r_star: RStar::Table,
                per_r: Vec::new(),
            })
        }
        _ => {
            let per_r: Vec<(u32, BigUint)> = admissible_r(n, mode)
                .into_iter()
                .map(|r| (r, min_term(n, r)))
                .collect();
            let best = per_r.iter().max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)));
            match best {
                Some((r, v)) => Ok(BoundResult {
                    n,
                    mode,
                    k_value: v.clone(),
                    r_star: RStar::R(*r),
                    per_r: per_r.clone(),
                }),
                None => Ok(BoundResult {
                    n,
                    mode,
                    k_value: BigUint::from(1u32),
                    r_star: RStar::Vacuous,
                    per_r,
                }),
            }
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepRow {
    pub n: u32,
    pub k_squared: BigUint,
    pub two_to_n: BigUint,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    /// Least `n0` such that the inequality holds for every `n` in
    /// `[n0, hi]`; `None` if it fails at `hi` itself.
    pub holds_from: Option<u32>,
}

/// Exponential lower bound: `k(n)^2 >= 2^n` checked exactly for each `n`
/// in the range, proof-consistent mode. The result records from which `n`
/// onward the inequality holds through the top of the range, rather than
/// asserting it everywhere.
pub fn exp_lower_sweep(lo: u32, hi: u32) -> Result<SweepResult, BoundsError> {
    if lo < 7 || lo > hi {
        return Err(BoundsError::BadSweepRange(lo, hi));
    }
    let rows: Vec<SweepRow> = (lo..=hi)
        .map(|n| {
            let kv = k(n, Mode::ProofConsistent).expect("n >= 7").k_value;
            let k_squared = &kv * &kv;
            let two_to_n = pow2(u64::from(n));
            let pass = k_squared >= two_to_n;
            SweepRow {
                n,
                k_squared,
                two_to_n,
                pass,
            }
        })
        .collect();
    let mut holds_from = None;
    for row in rows.iter().rev() {
        if row.pass {
            holds_from = Some(row.n);
        } else {
            break;
        }
    }
    Ok(SweepResult { rows, holds_from })
}

#[derive(Debug, Clone)]
pub struct PrecheckReport {
    pub n: u32,
    /// `r` used by the argument: 4 for `n >= 14`, 3 at `n = 12`.
    pub r_used: u32,
    pub lhs: BigUint,
    pub binom_bound: BigUint,
    pub power_bound: BigUint,
    pub pass: bool,
    /// At `n = 12` the `r = 4` power branch is evaluated for the record
    /// only; no pass is asserted on it.
    pub out_of_range_branch: Option<serde_json::Value>,
}

/// Inequality preconditions for the rigidity application: with
/// `lhs = 2 C(n+1, 2)`, require `lhs < C(n, r)` and `lhs < 2^{n-r-1}`,
/// taking `r = 4` for even `n >= 14` and `r = 3` at `n = 12`.
pub fn phd_dawid_precheck(n: u32) -> Result<PrecheckReport, BoundsError> {
    if n < 12 || n % 2 == 1 {
        return Err(BoundsError::BadPrecheckRank(n));
    }
    let lhs = BigUint::from(2u32) * binomial(u64::from(n) + 1, 2);
    let r_used = if n == 12 { 3 } else { 4 };
    let binom_bound = binomial(u64::from(n), u64::from(r_used));
    let power_bound = pow2(u64::from(n - r_used - 1));
    let pass = lhs < binom_bound && lhs < power_bound;
    let out_of_range_branch = (n == 12).then(|| {
        let r4_power = pow2(u64::from(n) - 5);
        json!({
            "r": 4,
            "power_bound": r4_power.to_string(),
            "lhs_below_power_bound": lhs < r4_power,
        })
    });
    Ok(PrecheckReport {
        n,
        r_used,
        lhs,
        binom_bound,
        power_bound,
        pass,
        out_of_range_branch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kv(n: u32, mode: Mode) -> u64 {
        use num_traits::ToPrimitive;
        k(n, mode).unwrap().k_value.to_u64().unwrap()
    }

    #[test]
    fn small_rank_table() {
        assert_eq!(kv(3, Mode::Literal), 7);
        assert_eq!(kv(4, Mode::Literal), 8);
        assert_eq!(kv(5, Mode::Literal), 12);
        assert_eq!(kv(6, Mode::Literal), 14);
        assert!(k(2, Mode::Literal).is_err());
    }

    #[test]
    fn parity() {
        assert_eq!(parity_indicator(7), 0);
        assert_eq!(parity_indicator(8), 1);
        assert_eq!(parity_indicator(2), 1);
    }

    #[test]
    fn literal_ranges() {
        assert!(admissible_r(7, Mode::Literal).is_empty());
        assert_eq!(admissible_r(8, Mode::Literal), vec![1]);
        assert_eq!(admissible_r(9, Mode::Literal), vec![1]);
        assert_eq!(admissible_r(12, Mode::Literal), vec![1, 2, 3]);
        assert_eq!(admissible_r(7, Mode::ProofConsistent), vec![2]);
        assert_eq!(admissible_r(9, Mode::ProofConsistent), vec![1, 2]);
        assert_eq!(admissible_r(10, Mode::ProofConsistent), vec![1, 2]);
    }

    #[test]
    fn proof_consistent_small_values() {
        let k7 = k(7, Mode::ProofConsistent).unwrap();
        assert_eq!(k7.k_value, BigUint::from(21u32));
        assert_eq!(k7.r_star, RStar::R(2));
        let k8 = k(8, Mode::ProofConsistent).unwrap();
        assert_eq!(k8.k_value, BigUint::from(28u32));
        assert_eq!(k8.r_star, RStar::R(2));
        let k9 = k(9, Mode::ProofConsistent).unwrap();
        assert_eq!(k9.k_value, BigUint::from(36u32));
        assert_eq!(k9.r_star, RStar::R(2));
    }

    #[test]
    fn literal_degenerate_and_small_values() {
        let k7 = k(7, Mode::Literal).unwrap();
        assert_eq!(k7.r_star, RStar::Vacuous);
        assert_eq!(k7.k_value, BigUint::from(1u32));
        assert_eq!(kv(8, Mode::Literal), 8);
        assert_eq!(kv(9, Mode::Literal), 9);
    }

    #[test]
    fn twelve_is_two_twenty_at_r_three() {
        let k12 = k(12, Mode::Literal).unwrap();
        assert_eq!(k12.k_value, BigUint::from(220u32));
        assert_eq!(k12.r_star, RStar::R(3));
        // Exhaustive max-min: no admissible r does better.
        for (_, value) in &k12.per_r {
            assert!(*value <= k12.k_value);
        }
    }

    #[test]
    fn modes_agree_from_ten_onwards() {
        for n in 7..=64 {
            let lit = k(n, Mode::Literal).unwrap().k_value;
            let pc = k(n, Mode::ProofConsistent).unwrap().k_value;
            assert!(lit <= pc, "literal never beats proof-consistent at n={n}");
            if n >= 10 {
                assert_eq!(lit, pc, "ranges coincide from n=10 at n={n}");
            }
        }
    }

    #[test]
    fn sweep_holds_everywhere_from_seven() {
        let sweep = exp_lower_sweep(7, 64).unwrap();
        assert!(sweep.rows.iter().all(|r| r.pass));
        assert_eq!(sweep.holds_from, Some(7));
        let n12 = sweep.rows.iter().find(|r| r.n == 12).unwrap();
        assert_eq!(n12.k_squared, BigUint::from(48400u32));
        assert_eq!(n12.two_to_n, BigUint::from(4096u32));
        assert!(exp_lower_sweep(5, 10).is_err());
    }

    #[test]
    fn precheck_values() {
        let p14 = phd_dawid_precheck(14).unwrap();
        assert!(p14.pass);
        assert_eq!(p14.lhs, BigUint::from(210u32));
        assert_eq!(p14.binom_bound, BigUint::from(1001u32));
        assert_eq!(p14.power_bound, BigUint::from(512u32));

        let p12 = phd_dawid_precheck(12).unwrap();
        assert!(p12.pass);
        assert_eq!(p12.r_used, 3);
        assert_eq!(p12.lhs, BigUint::from(156u32));
        assert_eq!(p12.binom_bound, BigUint::from(220u32));
        assert_eq!(p12.power_bound, BigUint::from(256u32));
        let branch = p12.out_of_range_branch.unwrap();
        assert_eq!(branch["power_bound"], "128");
        assert_eq!(branch["lhs_below_power_bound"], false);

        assert!(phd_dawid_precheck(13).is_err());
        assert!(phd_dawid_precheck(10).is_err());
    }

    #[test]
    fn precheck_passes_for_even_ranks_to_forty() {
        for n in (12..=40).step_by(2) {
            assert!(phd_dawid_precheck(n).unwrap().pass, "n = {n}");
        }
    }
}
