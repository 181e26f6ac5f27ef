//! Permutations and signed permutations.

use super::{Element, GroupError};

/// A permutation of `{1, ..., degree}`, stored 0-based as an image array.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: Vec<u16>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if (i as usize) >= n || seen[i as usize] {
                return Err(GroupError::BadParameter(
                    "image array is not a bijection".to_string(),
                ));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Build from disjoint cycles in 1-based notation.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for cycle in cycles {
            for k in 0..cycle.len() {
                let from = cycle[k];
                let to = cycle[(k + 1) % cycle.len()];
                if from == 0 || from > degree || to == 0 || to > degree {
                    return Err(GroupError::BadParameter(format!(
                        "cycle point out of range for degree {degree}"
                    )));
                }
                images[from - 1] = (to - 1) as u16;
            }
        }
        Perm::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut next = self.image(start);
            while next != start {
                seen[next] = true;
                cycle.push(next + 1);
                next = self.image(next);
            }
            out.push(cycle);
        }
        out
    }
}

impl Element for Perm {
    fn op(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: (0..self.degree())
                .map(|x| self.images[other.images[x] as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.degree()];
        for (from, &to) in self.images.iter().enumerate() {
            images[to as usize] = from as u16;
        }
        Perm { images }
    }

    fn identity_like(&self) -> Self {
        Perm::identity(self.degree())
    }

    fn describe(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|p| p.to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

/// A signed permutation on `n` strands: the automorphism
/// `a_i -> a_{perm(i)}^{signs[perm(i)]}`. Equivalently a permutation of the
/// `2n` points `{±1, ..., ±n}` commuting with the antipode.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    perm: Vec<u16>,
    signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u16).collect(),
            signs: vec![1; n],
        }
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn from_perm(p: &Perm) -> Self {
        SignedPerm {
            perm: (0..p.degree()).map(|x| p.image(x) as u16).collect(),
            signs: vec![1; p.degree()],
        }
    }

    /// The sign flip `eps_i eps_j` (1-based indices).
    pub fn eps_pair(n: usize, i: usize, j: usize) -> Result<Self, GroupError> {
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(GroupError::BadParameter(format!(
                "eps pair ({i}, {j}) invalid for {n} strands"
            )));
        }
        let mut signs = vec![1i8; n];
        signs[i - 1] = -1;
        signs[j - 1] = -1;
        Ok(SignedPerm {
            perm: (0..n as u16).collect(),
            signs,
        })
    }

    /// The global flip `delta = eps_1 ... eps_n`.
    pub fn flip_all(n: usize) -> Self {
        SignedPerm {
            perm: (0..n as u16).collect(),
            signs: vec![-1; n],
        }
    }

    pub fn flipped_strands(&self) -> Vec<usize> {
        self.signs
            .iter()
            .enumerate()
            .filter_map(|(i, &s)| (s == -1).then_some(i + 1))
            .collect()
    }

    pub fn perm_part(&self) -> Perm {
        Perm::from_images(self.perm.clone()).expect("stored permutation is a bijection")
    }

    /// The faithful action on `2n` points: point `i` is `+a_{i+1}`, point
    /// `i + n` is `-a_{i+1}` (0-based).
    pub fn to_perm(&self) -> Perm {
        let n = self.strands();
        let mut images = vec![0u16; 2 * n];
        for x in 0..n {
            let target = self.perm[x] as usize;
            let flips = self.signs[target] == -1;
            images[x] = (target + if flips { n } else { 0 }) as u16;
            images[x + n] = (target + if flips { 0 } else { n }) as u16;
        }
        Perm { images }
    }

    /// The corresponding automorphism of `F_n` (sign flips after the
    /// generator permutation).
    pub fn to_automorphism(&self) -> crate::autf::Automorphism {
        let n = self.strands() as u32;
        let mut out = crate::autf::Automorphism::identity(n);
        let mut perm_aut = crate::autf::Automorphism::identity(n);
        // Decompose the permutation into transpositions via sigma moves.
        let mut work: Vec<u16> = self.perm.clone();
        for pos in 0..work.len() {
            let want = pos as u16;
            if work[pos] == want {
                continue;
            }
            let other = work.iter().position(|&v| v == want).expect("bijection");
            work.swap(pos, other);
            let swap =
                crate::autf::Automorphism::sigma(n, pos as u32 + 1, other as u32 + 1).unwrap();
            perm_aut = swap.compose(&perm_aut).expect("equal ranks");
        }
        for (i, &s) in self.signs.iter().enumerate() {
            if s == -1 {
                let eps = crate::autf::Automorphism::eps(n, i as u32 + 1).unwrap();
                out = out.compose(&eps).expect("equal ranks");
            }
        }
        out.compose(&perm_aut).expect("equal ranks")
    }
}

impl Element for SignedPerm {
    fn op(&self, other: &Self) -> Self {
        let n = self.strands();
        debug_assert_eq!(n, other.strands());
        let perm: Vec<u16> = other
            .perm
            .iter()
            .map(|&mid| self.perm[mid as usize])
            .collect();
        // signs[k] = self.signs[k] * other.signs[self.perm^-1(k)]
        let mut self_inv = vec![0u16; n];
        for (from, &to) in self.perm.iter().enumerate() {
            self_inv[to as usize] = from as u16;
        }
        let signs = (0..n)
            .map(|k| self.signs[k] * other.signs[self_inv[k] as usize])
            .collect();
        SignedPerm { perm, signs }
    }

    fn inverse(&self) -> Self {
        let n = self.strands();
        let mut perm = vec![0u16; n];
        for (from, &to) in self.perm.iter().enumerate() {
            perm[to as usize] = from as u16;
        }
        let signs = (0..n).map(|j| self.signs[self.perm[j] as usize]).collect();
        SignedPerm { perm, signs }
    }

    fn identity_like(&self) -> Self {
        SignedPerm::identity(self.strands())
    }

    fn describe(&self) -> String {
        let flips = self.flipped_strands();
        let perm = self.perm_part().describe();
        if flips.is_empty() {
            perm
        } else {
            let list: Vec<String> = flips.iter().map(|i| i.to_string()).collect();
            format!("flip{{{}}}{}", list.join(","), perm)
        }
    }
}
