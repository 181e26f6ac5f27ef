//! Brute-force finite-group engine.
//!
//! A [`FiniteGroup`] is a fully enumerated group: breadth-first closure
//! from a generator list, with a deterministic element order (the BFS
//! discovery order, identity first). All queries — conjugacy classes,
//! centraliser counts, reality, clique search, quotients, minimal faithful
//! degrees — run over the complete element list. Groups here are small
//! enough (at most a few times `10^5` elements) that exhaustive methods
//! are the verification-grade choice.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use thiserror::Error;

pub mod builders;
pub mod perm;
mod subgroups;

pub use perm::{Perm, SignedPerm};
pub use subgroups::{minimal_faithful_degree, subgroup_count};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("closure cap {cap} exceeded after finding {explored} elements")]
    CapExceeded { cap: usize, explored: usize },
    #[error("cannot close over an empty generator list")]
    EmptyGenerators,
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("given subset is not a subgroup")]
    NotSubgroup,
    #[error("given subgroup is not central")]
    NotCentral,
    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("conjugacy class size {size} exceeds cap {cap}")]
    ClassCapExceeded { size: usize, cap: usize },
    #[error("bad builder parameter: {0}")]
    BadParameter(String),
    #[error("builder gate failed: expected order {expected}, closure found {got}")]
    GateFailed { expected: String, got: u64 },
}

/// A group element: an immutable value with exact equality.
pub trait Element: Clone + Eq + Hash + Ord + fmt::Debug {
    /// Group product; for maps the right factor acts first.
    fn op(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    /// The identity of the ambient group this element lives in.
    fn identity_like(&self) -> Self;
    /// Short human-readable form for reports.
    fn describe(&self) -> String;
}

/// A fully enumerated finite group.
#[derive(Debug, Clone)]
pub struct FiniteGroup<E: Element> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: HashMap<E, usize>,
}

/// Conjugacy data for a fully enumerated group.
#[derive(Debug, Clone)]
pub struct ConjugacyClasses {
    /// Class id of each element, indexed like `FiniteGroup::elements`.
    pub class_of: Vec<usize>,
    pub classes: Vec<ClassInfo>,
}

#[derive(Debug, Clone)]
pub struct ClassInfo {
    /// Index of the representative (least element index in the class).
    pub rep: usize,
    pub size: usize,
    pub element_order: u64,
    /// Element indices of all members, in discovery order.
    pub members: Vec<usize>,
}

impl<E: Element> FiniteGroup<E> {
    /// Breadth-first closure of the generator list. Deterministic: the
    /// element order depends only on the generator order.
    pub fn closure(generators: Vec<E>, cap: usize) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::EmptyGenerators)?;
        let identity = first.identity_like();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut frontier = 0;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            frontier += 1;
            for g in &generators {
                let next = current.op(g);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded {
                            cap,
                            explored: elements.len(),
                        });
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(FiniteGroup {
            generators,
            elements,
            index,
        })
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn identity(&self) -> &E {
        &self.elements[0]
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn element_order(&self, e: &E) -> Result<u64, GroupError> {
        if !self.contains(e) {
            return Err(GroupError::NotInGroup);
        }
        let identity = e.identity_like();
        let mut power = e.clone();
        let mut k = 1u64;
        while power != identity {
            power = power.op(e);
            k += 1;
        }
        Ok(k)
    }

    pub fn commute(a: &E, b: &E) -> bool {
        a.op(b) == b.op(a)
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|a| self.generators.iter().all(|b| Self::commute(a, b)))
    }

    /// Partition into conjugacy classes by orbit refinement under
    /// conjugation by the generators.
    pub fn conjugacy_classes(&self) -> ConjugacyClasses {
        let n = self.elements.len();
        let gens: Vec<(E, E)> = self
            .generators
            .iter()
            .map(|g| (g.clone(), g.inverse()))
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            class_of[start] = cid;
            let mut members = vec![start];
            let mut fr = 0;
            while fr < members.len() {
                let x = self.elements[members[fr]].clone();
                fr += 1;
                for (g, g_inv) in &gens {
                    let conj = g_inv.op(&x).op(g);
                    let ci = self.index[&conj];
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = cid;
                        members.push(ci);
                    }
                }
            }
            members.sort_unstable();
            let element_order = self
                .element_order(&self.elements[start])
                .expect("representative is in the group");
            classes.push(ClassInfo {
                rep: start,
                size: members.len(),
                element_order,
                members,
            });
        }
        ConjugacyClasses { class_of, classes }
    }

    /// `|x^G ∩ C_G(x)|`: members of the class of `x` commuting with `x`.
    pub fn class_commuting_count_with(
        &self,
        classes: &ConjugacyClasses,
        x: &E,
    ) -> Result<u64, GroupError> {
        let xi = self.index_of(x).ok_or(GroupError::NotInGroup)?;
        let info = &classes.classes[classes.class_of[xi]];
        Ok(info
            .members
            .iter()
            .filter(|&&m| Self::commute(&self.elements[m], x))
            .count() as u64)
    }

    pub fn class_commuting_count(&self, x: &E) -> Result<u64, GroupError> {
        let classes = self.conjugacy_classes();
        self.class_commuting_count_with(&classes, x)
    }

    /// Whether `x` is conjugate to its inverse.
    pub fn is_real_with(&self, classes: &ConjugacyClasses, x: &E) -> Result<bool, GroupError> {
        let xi = self.index_of(x).ok_or(GroupError::NotInGroup)?;
        let inv = self
            .index_of(&x.inverse())
            .expect("group closed under inversion");
        Ok(classes.class_of[xi] == classes.class_of[inv])
    }

    pub fn is_real(&self, x: &E) -> Result<bool, GroupError> {
        let classes = self.conjugacy_classes();
        self.is_real_with(&classes, x)
    }

    /// Maximum size of a pairwise-commuting subset of the class of `x`
    /// (maximum clique in the commuting graph restricted to the class).
    pub fn max_commuting_subset_in_class(&self, x: &E, cap: usize) -> Result<usize, GroupError> {
        let classes = self.conjugacy_classes();
        self.max_commuting_subset_in_class_with(&classes, x, cap)
    }

    pub fn max_commuting_subset_in_class_with(
        &self,
        classes: &ConjugacyClasses,
        x: &E,
        cap: usize,
    ) -> Result<usize, GroupError> {
        let xi = self.index_of(x).ok_or(GroupError::NotInGroup)?;
        let members = &classes.classes[classes.class_of[xi]].members;
        let m = members.len();
        if m > cap {
            return Err(GroupError::ClassCapExceeded { size: m, cap });
        }
        let blocks = m.div_ceil(64);
        let mut adj = vec![vec![0u64; blocks]; m];
        for a in 0..m {
            for b in a + 1..m {
                if Self::commute(&self.elements[members[a]], &self.elements[members[b]]) {
                    adj[a][b / 64] |= 1 << (b % 64);
                    adj[b][a / 64] |= 1 << (a % 64);
                }
            }
        }
        let mut all = vec![!0u64; blocks];
        if !m.is_multiple_of(64) {
            all[blocks - 1] = (1u64 << (m % 64)) - 1;
        }
        let mut best = 0;
        max_clique(&adj, &all, 0, &mut best);
        Ok(best)
    }

    /// Quotient by a central subgroup, via least-representative coset
    /// canonicalisation.
    pub fn central_quotient(&self, z: &[E]) -> Result<FiniteGroup<CosetElem<E>>, GroupError> {
        for e in z {
            if !self.contains(e) {
                return Err(GroupError::NotInGroup);
            }
        }
        let mut z_sorted: Vec<E> = z.to_vec();
        z_sorted.sort();
        z_sorted.dedup();
        let identity = self.elements[0].clone();
        if !z_sorted.contains(&identity) {
            return Err(GroupError::NotSubgroup);
        }
        for a in &z_sorted {
            if !z_sorted.contains(&a.inverse()) {
                return Err(GroupError::NotSubgroup);
            }
            for b in &z_sorted {
                if !z_sorted.contains(&a.op(b)) {
                    return Err(GroupError::NotSubgroup);
                }
            }
        }
        for zc in &z_sorted {
            for g in &self.generators {
                if !Self::commute(zc, g) {
                    return Err(GroupError::NotCentral);
                }
            }
        }
        let center = Arc::new(z_sorted);
        let generators: Vec<CosetElem<E>> = self
            .generators
            .iter()
            .map(|g| CosetElem::new(g.clone(), center.clone()))
            .collect();
        let mut elements = Vec::new();
        let mut index = HashMap::new();
        for g in &self.elements {
            let coset = CosetElem::new(g.clone(), center.clone());
            if !index.contains_key(&coset) {
                index.insert(coset.clone(), elements.len());
                elements.push(coset);
            }
        }
        debug_assert_eq!(elements.len() * center.len(), self.elements.len());
        Ok(FiniteGroup {
            generators,
            elements,
            index,
        })
    }
}

fn max_clique(adj: &[Vec<u64>], candidates: &[u64], size: usize, best: &mut usize) {
    let count: usize = candidates.iter().map(|b| b.count_ones() as usize).sum();
    if count == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + count <= *best {
        return;
    }
    let (block, bits) = candidates
        .iter()
        .enumerate()
        .find(|(_, &b)| b != 0)
        .expect("nonempty");
    let v = block * 64 + bits.trailing_zeros() as usize;
    // Branch 1: take v.
    let with_v: Vec<u64> = candidates
        .iter()
        .zip(&adj[v])
        .map(|(c, a)| c & a)
        .collect();
    max_clique(adj, &with_v, size + 1, best);
    // Branch 2: skip v.
    let mut without = candidates.to_vec();
    without[block] &= !(1u64 << (v % 64));
    max_clique(adj, &without, size, best);
}

/// A coset of a central subgroup, stored as its least member.
#[derive(Clone)]
pub struct CosetElem<E: Element> {
    rep: E,
    center: Arc<Vec<E>>,
}

impl<E: Element> CosetElem<E> {
    fn new(raw: E, center: Arc<Vec<E>>) -> Self {
        let rep = center
            .iter()
            .map(|z| raw.op(z))
            .min()
            .expect("center contains the identity");
        CosetElem { rep, center }
    }

    pub fn representative(&self) -> &E {
        &self.rep
    }
}

impl<E: Element> fmt::Debug for CosetElem<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coset({:?})", self.rep)
    }
}

impl<E: Element> PartialEq for CosetElem<E> {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl<E: Element> Eq for CosetElem<E> {}

impl<E: Element> Hash for CosetElem<E> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rep.hash(state);
    }
}

impl<E: Element> PartialOrd for CosetElem<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl<E: Element> Ord for CosetElem<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rep.cmp(&other.rep)
    }
}

impl<E: Element> Element for CosetElem<E> {
    fn op(&self, other: &Self) -> Self {
        CosetElem::new(self.rep.op(&other.rep), self.center.clone())
    }

    fn inverse(&self) -> Self {
        CosetElem::new(self.rep.inverse(), self.center.clone())
    }

    fn identity_like(&self) -> Self {
        CosetElem::new(self.rep.identity_like(), self.center.clone())
    }

    fn describe(&self) -> String {
        format!("[{}]", self.rep.describe())
    }
}

impl Element for crate::fp::FpMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        self.inverse().expect("group elements are invertible")
    }

    fn identity_like(&self) -> Self {
        crate::fp::FpMatrix::identity(self.dim(), self.modulus())
    }

    fn describe(&self) -> String {
        format!("{:?}", self.rows())
    }
}

impl Element for crate::fp::ProjMatrix {
    fn op(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn inverse(&self) -> Self {
        crate::fp::ProjMatrix::inverse(self)
    }

    fn identity_like(&self) -> Self {
        crate::fp::ProjMatrix::identity(self.representative().dim(), self.representative().modulus())
    }

    fn describe(&self) -> String {
        format!("{:?}", self.representative().rows())
    }
}

impl Element for crate::autf::Automorphism {
    fn op(&self, other: &Self) -> Self {
        self.compose(other).expect("equal ranks")
    }

    fn inverse(&self) -> Self {
        crate::autf::Automorphism::inverse(self)
    }

    fn identity_like(&self) -> Self {
        crate::autf::Automorphism::identity(self.rank())
    }

    fn describe(&self) -> String {
        self.forward_images()
            .iter()
            .map(|w| w.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::builders;
    use super::*;

    #[test]
    fn closure_of_a4() {
        let g = builders::alt(4, 1000).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn closure_cap_exceeded() {
        let gens = vec![Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]).unwrap()];
        assert!(matches!(
            FiniteGroup::closure(gens, 3),
            Err(GroupError::CapExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn a5_class_sizes() {
        let g = builders::alt(5, 1000).unwrap();
        let classes = g.conjugacy_classes();
        let mut sizes: Vec<usize> = classes.classes.iter().map(|c| c.size).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
        let total: usize = classes.classes.iter().map(|c| c.size).sum();
        assert_eq!(total, 60);
        for c in &classes.classes {
            assert_eq!(60 % c.size, 0, "class sizes divide the group order");
        }
    }

    #[test]
    fn a6_double_transposition_class() {
        let g = builders::alt(6, 1000).unwrap();
        let x = Perm::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        let classes = g.conjugacy_classes();
        let xi = g.index_of(&x).unwrap();
        assert_eq!(classes.classes[classes.class_of[xi]].size, 45);
        assert_eq!(g.class_commuting_count_with(&classes, &x).unwrap(), 5);
        assert_eq!(
            g.max_commuting_subset_in_class_with(&classes, &x, 64).unwrap(),
            3
        );
    }

    #[test]
    fn identity_commuting_count_is_one() {
        let g = builders::alt(5, 1000).unwrap();
        let id = g.identity().clone();
        assert_eq!(g.class_commuting_count(&id).unwrap(), 1);
    }

    #[test]
    fn abelian_class_structure() {
        let c3 = FiniteGroup::closure(
            vec![Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap()],
            100,
        )
        .unwrap();
        assert_eq!(c3.order(), 3);
        let classes = c3.conjugacy_classes();
        assert_eq!(classes.classes.len(), 3);
        assert!(classes.classes.iter().all(|c| c.size == 1));
        let x = c3.elements()[1].clone();
        assert_eq!(
            c3.max_commuting_subset_in_class(&x, 10).unwrap(),
            1,
            "singleton class"
        );
    }

    #[test]
    fn reality_checks() {
        // Involutions are always real.
        let g = builders::alt(6, 1000).unwrap();
        let x = Perm::from_cycles(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        assert!(g.is_real(&x).unwrap());

        // (123) in A_4 is not conjugate to its inverse.
        let a4 = builders::alt(4, 1000).unwrap();
        let t = Perm::from_cycles(4, &[vec![1, 2, 3]]).unwrap();
        assert!(!a4.is_real(&t).unwrap());
    }

    #[test]
    fn not_in_group_is_an_error() {
        let a4 = builders::alt(4, 1000).unwrap();
        let odd = Perm::from_cycles(4, &[vec![1, 2]]).unwrap();
        assert_eq!(
            a4.class_commuting_count(&odd),
            Err(GroupError::NotInGroup)
        );
    }

    /// Exhaustive subset oracle for the clique search, on the 15-element
    /// double-transposition class of A_5.
    #[test]
    fn max_commuting_subset_matches_exhaustive_oracle() {
        let g = builders::alt(5, 1000).unwrap();
        let x = Perm::from_cycles(5, &[vec![1, 2], vec![3, 4]]).unwrap();
        let classes = g.conjugacy_classes();
        let members = &classes.classes[classes.class_of[g.index_of(&x).unwrap()]].members;
        assert_eq!(members.len(), 15);

        let mut oracle_best = 0;
        for mask in 0u32..(1 << 15) {
            let picked: Vec<usize> = (0..15).filter(|b| mask >> b & 1 == 1).collect();
            let all_commute = picked.iter().all(|&a| {
                picked
                    .iter()
                    .all(|&b| FiniteGroup::commute(&g.elements()[members[a]], &g.elements()[members[b]]))
            });
            if all_commute {
                oracle_best = oracle_best.max(picked.len());
            }
        }
        assert_eq!(
            g.max_commuting_subset_in_class_with(&classes, &x, 64).unwrap(),
            oracle_best
        );
    }

    #[test]
    fn central_quotient_dprime4_by_delta() {
        let g = builders::dprime(4, 10_000).unwrap();
        assert_eq!(g.order(), 96);
        let delta = SignedPerm::flip_all(4);
        let z = vec![SignedPerm::identity(4), delta];
        let q = g.central_quotient(&z).unwrap();
        assert_eq!(q.order(), 48);
    }

    #[test]
    fn central_quotient_by_trivial_subgroup() {
        let g = builders::alt(4, 1000).unwrap();
        let q = g.central_quotient(&[Perm::identity(4)]).unwrap();
        assert_eq!(q.order(), g.order());
    }

    #[test]
    fn central_quotient_rejects_non_central() {
        let g = builders::alt(4, 1000).unwrap();
        let v = Perm::from_cycles(4, &[vec![1, 2], vec![3, 4]]).unwrap();
        let z = vec![Perm::identity(4), v];
        assert!(matches!(
            g.central_quotient(&z),
            Err(GroupError::NotCentral)
        ));
    }

    #[test]
    fn sp4_quotient_by_center() {
        let g = builders::sp4(3, 100_000).unwrap();
        assert_eq!(g.order(), 51840);
        let minus_one = crate::fp::FpMatrix::diagonal(3, &[2, 2, 2, 2]);
        let z = vec![crate::fp::FpMatrix::identity(4, 3), minus_one];
        let q = g.central_quotient(&z).unwrap();
        assert_eq!(q.order(), 25920);
    }

    #[test]
    fn class_function_constancy_on_dprime4() {
        let g = builders::dprime(4, 10_000).unwrap();
        let classes = g.conjugacy_classes();
        for info in classes.classes.iter().filter(|c| c.size > 1).take(4) {
            let rep = &g.elements()[info.rep];
            let expected_count = g.class_commuting_count_with(&classes, rep).unwrap();
            let expected_real = g.is_real_with(&classes, rep).unwrap();
            for &m in info.members.iter().take(6) {
                let y = &g.elements()[m];
                assert_eq!(
                    g.class_commuting_count_with(&classes, y).unwrap(),
                    expected_count
                );
                assert_eq!(g.is_real_with(&classes, y).unwrap(), expected_real);
            }
        }
    }
}
