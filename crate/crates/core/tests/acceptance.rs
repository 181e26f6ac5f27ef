//! Acceptance suite: one test per numbered criterion, each printing a
//! single pass/fail line with its elapsed time and asserting both the
//! computed values and the stated time budget.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config as PropConfig, TestRunner};

use fnq_core::autf::{self, Automorphism};
use fnq_core::bounds::{self, Mode, RStar};
use fnq_core::freegroup::{Letter, Word};
use fnq_core::groups::{builders, minimal_faithful_degree, Element, FiniteGroup, Perm, SignedPerm};
use fnq_core::linearize;
use fnq_core::orders;
use fnq_core::repcheck;
use fnq_core::report::{all_good, CheckStatus};
use fnq_core::verify::{self, Config};

fn finish(criterion: &str, what: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!("criterion {criterion}: PASS ({what}) in {elapsed:.2?}");
    assert!(
        elapsed <= budget,
        "criterion {criterion} exceeded its {budget:.0?} budget: {elapsed:.2?}"
    );
}

#[test]
fn criterion_1_relation_suite() {
    let started = Instant::now();
    let reports = verify::run_suite("relations", &Config::default()).unwrap();
    assert_eq!(reports.len(), 8);
    for r in &reports {
        assert_eq!(
            r.status,
            CheckStatus::Pass,
            "relation claim {} failed: {}",
            r.claim,
            r.evidence
        );
        assert!(r.evidence["failures"].as_array().unwrap().is_empty());
    }
    let total_checked: u64 = reports
        .iter()
        .map(|r| r.evidence["checked"].as_u64().unwrap())
        .sum();
    assert!(total_checked > 10_000, "exhaustive sweep looks too small");
    finish(
        "1",
        "all generator relations hold exhaustively at ranks 3..=8",
        started,
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_gamma_suite() {
    let started = Instant::now();
    for n in 4..=8 {
        let gamma = Automorphism::gamma(n).unwrap();
        assert_eq!(gamma.order(10).finite(), Some(3), "order of gamma at rank {n}");
        for i in 1..=n - 2 {
            for j in 1..=n - 2 {
                if i == j {
                    continue;
                }
                let rho = Automorphism::rho(n, i, j).unwrap();
                let lam = Automorphism::lam(n, i, j).unwrap();
                assert!(gamma.commutator(&rho).unwrap().is_identity());
                assert!(gamma.commutator(&lam).unwrap().is_identity());
            }
        }
    }
    let reports = verify::run_suite("gamma", &Config::default()).unwrap();
    assert!(all_good(&reports));
    finish(
        "2",
        "gamma has order 3 and centralises the low-index transvections, ranks 4..=8",
        started,
        Duration::from_secs(1),
    );
}

#[test]
fn criterion_3_natural_maps() {
    let started = Instant::now();
    let cap = 1_000_000;
    assert_eq!(
        linearize::natural_image_order(3, 2, cap).unwrap(),
        BigUint::from(168u32)
    );
    assert_eq!(
        linearize::natural_image_order(4, 2, cap).unwrap(),
        BigUint::from(20160u32)
    );
    // The reference-table value 21060 must be flagged, not reproduced.
    let reports = verify::run_suite("natural-maps", &Config::default()).unwrap();
    let n4 = reports.iter().find(|r| r.claim == "mod2-image-n4").unwrap();
    assert_eq!(n4.status, CheckStatus::Flagged);
    assert_eq!(n4.evidence["computed"], "20160");
    assert_eq!(n4.evidence["reference_table"], 21060);
    assert!(all_good(&reports));
    finish(
        "3",
        "mod-2 images close to 168 (rank 3) and 20160 (rank 4, table value flagged)",
        started,
        Duration::from_secs(30),
    );
}

#[test]
fn criterion_4_c23_table() {
    let started = Instant::now();
    let g = builders::psp4(3, 1_000_000).unwrap();
    assert_eq!(g.order(), 25920);
    let classes = g.conjugacy_classes();
    let total: usize = classes.classes.iter().map(|c| c.size).sum();
    assert_eq!(total, 25920, "class sizes partition the group");
    for info in &classes.classes {
        assert_eq!(25920 % info.size, 0, "class sizes divide the group order");
    }
    let mut rows: Vec<(u64, u64)> = Vec::new();
    for info in &classes.classes {
        if info.element_order == 1 {
            continue;
        }
        let rep = &g.elements()[info.rep];
        if g.is_real_with(&classes, rep).unwrap() {
            rows.push((
                info.element_order,
                g.class_commuting_count_with(&classes, rep).unwrap(),
            ));
        }
    }
    rows.sort_unstable();
    assert_eq!(
        rows,
        vec![
            (2, 13),
            (2, 22),
            (3, 6),
            (3, 12),
            (4, 4),
            (4, 8),
            (5, 4),
            (6, 2),
            (6, 2)
        ],
        "real non-identity class data of PSp_4(3)"
    );
    finish(
        "4",
        "PSp_4(3) has order 25920 and reproduces the expected real-class multiset",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_5_a6_analysis() {
    let started = Instant::now();
    let a6 = builders::alt(6, 10_000).unwrap();
    let classes = a6.conjugacy_classes();
    let tau = Perm::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
    assert_eq!(a6.class_commuting_count_with(&classes, &tau).unwrap(), 5);
    assert_eq!(
        a6.max_commuting_subset_in_class_with(&classes, &tau, 64)
            .unwrap(),
        3
    );
    // Uniqueness among real non-identity classes.
    let mut qualifying = 0;
    for info in &classes.classes {
        if info.element_order == 1 {
            continue;
        }
        let rep = &a6.elements()[info.rep];
        if a6.is_real_with(&classes, rep).unwrap()
            && a6.class_commuting_count_with(&classes, rep).unwrap() >= 5
        {
            qualifying += 1;
            assert_eq!(info.element_order, 2);
            assert_eq!(info.size, 45);
        }
    }
    assert_eq!(qualifying, 1, "only the double-transposition class qualifies");

    let rho3 = Automorphism::rho(3, 1, 2).unwrap();
    assert_eq!(autf::commuting_transvections(3, &rho3).unwrap().len(), 10);
    let rho4 = Automorphism::rho(4, 1, 2).unwrap();
    assert_eq!(autf::commuting_transvections(4, &rho4).unwrap().len(), 24);
    finish(
        "5",
        "commuting count 5, max clique 3, unique qualifying class; transvection sets 10 and 24",
        started,
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_6_minimal_degrees() {
    let started = Instant::now();
    let d4 = builders::dprime(4, 10_000).unwrap();
    assert_eq!(minimal_faithful_degree(&d4, 200).unwrap(), 8);

    let l32 = builders::natural_image(3, 2, 10_000).unwrap();
    assert_eq!(minimal_faithful_degree(&l32, 200).unwrap(), 7);

    let quotient = d4
        .central_quotient(&[SignedPerm::identity(4), SignedPerm::flip_all(4)])
        .unwrap();
    let computed = minimal_faithful_degree(&quotient, 200).unwrap();
    let elapsed = started.elapsed();
    println!(
        "criterion 6: minimal degrees D'_4 = 8 and L_3(2) = 7 hold; \
         D'_4 mod the global flip computed = {computed} vs stated lower bound 12 \
         (elapsed {elapsed:.2?})"
    );
    assert!(elapsed <= Duration::from_secs(120));
    // Stated criterion, asserted as written. The full subgroup scan finds a
    // faithful action on two 4-point orbits (kernels: the sign subgroup and
    // its twisted complement, meeting only in the flip coset), so the
    // computed value is 8 and this assertion records the discrepancy by
    // failing; see degrees/dprime4-mod-delta-min-degree in the verify
    // report for the evidence.
    assert!(
        computed >= 12,
        "minimal faithful degree of D'_4 modulo the global flip: computed {computed}, \
         stated lower bound 12; the computation refutes the stated bound \
         (an 8-point faithful action exists)"
    );
}

#[test]
fn criterion_7_appendix_sweep() {
    let started = Instant::now();
    let reports = orders::appendix_suite(40);
    let failing: Vec<&str> = reports
        .iter()
        .filter(|r| r.is_fail())
        .map(|r| r.claim.as_str())
        .collect();
    assert!(failing.is_empty(), "appendix rows failed: {failing:?}");
    // Every lemma family is present over its stated range.
    for prefix in ["a@", "b@", "c@", "d@", "e@", "f@", "g@", "h@"] {
        assert!(
            reports.iter().any(|r| r.claim.starts_with(prefix)),
            "missing rows for {prefix}"
        );
    }
    assert_eq!(
        reports.iter().filter(|r| r.claim.starts_with("c@")).count(),
        6,
        "factorial rows run 7..=12"
    );
    finish(
        "7",
        "inequality rows (a)..(h) all pass exactly up to n_max = 40",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_bounds() {
    let started = Instant::now();
    for (n, expected) in [(3u32, 7u32), (4, 8), (5, 12), (6, 14)] {
        assert_eq!(
            bounds::k(n, Mode::Literal).unwrap().k_value,
            BigUint::from(expected)
        );
    }
    let k7 = bounds::k(7, Mode::ProofConsistent).unwrap();
    assert_eq!((k7.k_value, k7.r_star), (BigUint::from(21u32), RStar::R(2)));
    let k8 = bounds::k(8, Mode::ProofConsistent).unwrap();
    assert_eq!((k8.k_value, k8.r_star), (BigUint::from(28u32), RStar::R(2)));

    for n in 7..=64u32 {
        let k = bounds::k(n, Mode::ProofConsistent).unwrap().k_value;
        let squared = &k * &k;
        assert!(
            squared >= orders::pow2(u64::from(n)),
            "k({n})^2 = {squared} is below 2^{n}"
        );
    }
    for n in (12..=40).step_by(2) {
        assert!(bounds::phd_dawid_precheck(n).unwrap().pass, "precheck n={n}");
    }
    // Sharpness at small ranks: k(3) equals the computed minimal degree of
    // the rank-3 mod-2 image, and k(4) equals the 2^(n-1) floor.
    let l32 = builders::natural_image(3, 2, 10_000).unwrap();
    assert_eq!(
        bounds::k(3, Mode::Literal).unwrap().k_value,
        BigUint::from(minimal_faithful_degree(&l32, 200).unwrap())
    );
    assert_eq!(
        bounds::k(4, Mode::Literal).unwrap().k_value,
        orders::pow2(3),
    );
    finish(
        "8",
        "k-table 7/8/12/14, proof-consistent 21/28 at r=2, k(n)^2 >= 2^n on 7..=64, prechecks pass",
        started,
        Duration::from_secs(1),
    );
}

// ---------------------------------------------------------------------
// criterion 9: property suites, >= 1000 cases each

const CASES: u32 = 1000;

fn runner() -> TestRunner {
    TestRunner::new(PropConfig {
        cases: CASES,
        ..PropConfig::default()
    })
}

fn arb_letters(rank: u32, max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (1..=rank, prop::bool::ANY).prop_map(|(i, neg)| Letter::new(i, if neg { -1 } else { 1 })),
        0..max_len,
    )
}

/// Independent reduction oracle: delete one adjacent cancelling pair per
/// scan until none remain.
fn reduce_oracle(letters: &[Letter], _rank: u32) -> Vec<Letter> {
    let mut current = letters.to_vec();
    loop {
        let mut hit = None;
        for i in 0..current.len().saturating_sub(1) {
            if current[i].index == current[i + 1].index && current[i].sign == -current[i + 1].sign
            {
                hit = Some(i);
                break;
            }
        }
        match hit {
            Some(i) => {
                current.drain(i..=i + 1);
            }
            None => return current,
        }
    }
}

fn named_pool(rank: u32) -> Vec<Automorphism> {
    let mut pool = vec![
        Automorphism::delta(rank),
        Automorphism::gamma(rank).unwrap(),
    ];
    for i in 1..=rank {
        pool.push(Automorphism::eps(rank, i).unwrap());
        pool.push(Automorphism::sigma_bar(rank, i).unwrap());
        for j in 1..=rank {
            if i != j {
                pool.push(Automorphism::rho(rank, i, j).unwrap());
                pool.push(Automorphism::lam(rank, i, j).unwrap());
                if i < j {
                    pool.push(Automorphism::sigma(rank, i, j).unwrap());
                }
            }
        }
    }
    pool
}

fn arb_product(rank: u32, max_len: usize) -> impl Strategy<Value = Automorphism> {
    let pool = named_pool(rank);
    prop::collection::vec(0..pool.len(), 1..max_len).prop_map(move |picks| {
        let mut out = Automorphism::identity(rank);
        for p in picks {
            out = out.compose(&pool[p]).unwrap();
        }
        out
    })
}

#[test]
fn criterion_9_property_free_reduction_confluence() {
    let started = Instant::now();
    runner()
        .run(&arb_letters(4, 220), |letters| {
            let fast = Word::reduce(&letters, 4).unwrap();
            let slow = reduce_oracle(&letters, 4);
            prop_assert_eq!(fast.letters(), slow.as_slice());
            Ok(())
        })
        .unwrap();
    finish(
        "9a",
        "free reduction matches the one-pair-per-scan oracle (1000 cases)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_property_multiplication_associativity() {
    let started = Instant::now();
    let triple = (arb_letters(3, 60), arb_letters(3, 60), arb_letters(3, 60));
    runner()
        .run(&triple, |(a, b, c)| {
            let u = Word::reduce(&a, 3).unwrap();
            let v = Word::reduce(&b, 3).unwrap();
            let w = Word::reduce(&c, 3).unwrap();
            let left = u.multiply(&v).unwrap().multiply(&w).unwrap();
            let right = u.multiply(&v.multiply(&w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            Ok(())
        })
        .unwrap();
    finish(
        "9b",
        "word multiplication is associative (1000 random triples)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_property_automorphism_round_trip() {
    let started = Instant::now();
    runner()
        .run(&arb_product(4, 9), |f| {
            prop_assert!(f.round_trip_ok());
            prop_assert!(f.compose(&f.inverse()).unwrap().is_identity());
            Ok(())
        })
        .unwrap();
    finish(
        "9c",
        "forward and inverse images invert each other (1000 random products)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_property_abelianization_multiplicativity() {
    let started = Instant::now();
    let pair = (arb_product(4, 7), arb_product(4, 7));
    runner()
        .run(&pair, |(f, g)| {
            let lhs = linearize::abelianize(&f.compose(&g).unwrap());
            let rhs = linearize::abelianize(&g).mul(&linearize::abelianize(&f));
            prop_assert_eq!(lhs, rhs);
            Ok(())
        })
        .unwrap();
    finish(
        "9d",
        "abelianisation is multiplicative in the matched order (1000 pairs)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_property_class_function_constancy() {
    let started = Instant::now();
    // Three groups with precomputed class data; each case checks that the
    // commuting count and reality are constant on a randomly chosen class.
    struct Prepared {
        counts: Vec<u64>,
        real: Vec<bool>,
        members: Vec<Vec<usize>>,
        evaluate: Box<dyn Fn(usize) -> (u64, bool)>,
    }
    fn prepare<E: Element + 'static>(g: FiniteGroup<E>) -> Prepared {
        let classes = g.conjugacy_classes();
        let counts: Vec<u64> = classes
            .classes
            .iter()
            .map(|info| {
                g.class_commuting_count_with(&classes, &g.elements()[info.rep])
                    .unwrap()
            })
            .collect();
        let real: Vec<bool> = classes
            .classes
            .iter()
            .map(|info| g.is_real_with(&classes, &g.elements()[info.rep]).unwrap())
            .collect();
        let members: Vec<Vec<usize>> = classes.classes.iter().map(|c| c.members.clone()).collect();
        let evaluate = Box::new(move |member: usize| {
            let x = g.elements()[member].clone();
            (
                g.class_commuting_count_with(&classes, &x).unwrap(),
                g.is_real_with(&classes, &x).unwrap(),
            )
        });
        Prepared {
            counts,
            real,
            members,
            evaluate,
        }
    }
    let groups = [
        prepare(builders::alt(5, 10_000).unwrap()),
        prepare(builders::alt(6, 10_000).unwrap()),
        prepare(builders::dprime(4, 10_000).unwrap()),
    ];
    // Exhaustive sweep first: every member of every class of all three
    // groups agrees with its representative.
    for prepared in &groups {
        for (class, members) in prepared.members.iter().enumerate() {
            for &member in members {
                let (count, real) = (prepared.evaluate)(member);
                assert_eq!(count, prepared.counts[class]);
                assert_eq!(real, prepared.real[class]);
            }
        }
    }
    let strategy = (
        0..groups.len(),
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    );
    runner()
        .run(&strategy, |(gi, class_pick, member_pick)| {
            let prepared = &groups[gi];
            let class = class_pick.index(prepared.members.len());
            let member = *member_pick.get(&prepared.members[class]);
            let (count, real) = (prepared.evaluate)(member);
            prop_assert_eq!(count, prepared.counts[class]);
            prop_assert_eq!(real, prepared.real[class]);
            Ok(())
        })
        .unwrap();
    finish(
        "9e",
        "commuting counts and reality are class functions on A_5, A_6, D'_4 (1000 cases)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_9_property_eigenspace_basis_invariance() {
    let started = Instant::now();
    let n = 4u32;
    let p = 5u32;
    let dim = n as usize + 1;
    let images = repcheck::standard_plus_trivial(n, p, 1);
    let baseline = repcheck::decompose(n, p, &images).unwrap();

    // Random invertible basis: L * D * U with unit triangular factors.
    let entries = prop::collection::vec(0..p, dim * dim);
    let diag = prop::collection::vec(1..p, dim);
    runner()
        .run(&(entries, diag), |(raw, diag)| {
            let mut lower = vec![0u32; dim * dim];
            let mut upper = vec![0u32; dim * dim];
            for i in 0..dim {
                lower[i * dim + i] = 1;
                upper[i * dim + i] = diag[i];
                for j in 0..dim {
                    if j < i {
                        lower[i * dim + j] = raw[i * dim + j];
                    } else if j > i {
                        upper[i * dim + j] = raw[i * dim + j];
                    }
                }
            }
            let basis = fnq_core::fp::FpMatrix::new(dim, p, lower)
                .unwrap()
                .mul(&fnq_core::fp::FpMatrix::new(dim, p, upper).unwrap());
            let conjugated = repcheck::conjugate_family(&images, &basis)
                .expect("triangular product is invertible");
            let decomposed = repcheck::decompose(n, p, &conjugated).unwrap();
            prop_assert_eq!(&decomposed.dims, &baseline.dims);
            Ok(())
        })
        .unwrap();
    finish(
        "9f",
        "eigenspace dimensions are invariant under random basis change (1000 cases)",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn criterion_10_determinism() {
    let started = Instant::now();
    let config = Config::default();
    let first = serde_json::to_string_pretty(&verify::run_all(&config).unwrap()).unwrap();
    let second = serde_json::to_string_pretty(&verify::run_all(&config).unwrap()).unwrap();
    assert_eq!(first, second, "two runs must serialise identically");
    finish(
        "10",
        "two consecutive full runs produce byte-identical reports",
        started,
        Duration::from_secs(120),
    );
}

#[test]
fn verify_registry_covers_the_manifest() {
    let reports = verify::run_all(&Config::default()).unwrap();
    for (suite, claim) in verify::manifest() {
        assert!(
            reports.iter().any(|r| r.suite == suite && r.claim == claim),
            "manifest entry {suite}/{claim} missing from the run"
        );
    }
    // Suites appear in their declared order and nothing fails outright
    // except the documented flagged discrepancies.
    let fail: Vec<String> = reports
        .iter()
        .filter(|r| r.is_fail())
        .map(|r| format!("{}/{}", r.suite, r.claim))
        .collect();
    assert!(fail.is_empty(), "unexpected failures: {fail:?}");
    let flagged: Vec<String> = reports
        .iter()
        .filter(|r| r.status == CheckStatus::Flagged)
        .map(|r| format!("{}/{}", r.suite, r.claim))
        .collect();
    assert!(
        flagged.len() >= 2,
        "documented discrepancies should be visible, got {flagged:?}"
    );
}
