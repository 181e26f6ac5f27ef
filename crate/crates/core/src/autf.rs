//! The named automorphisms of `F_n` and their algebra.
//!
//! An [`Automorphism`] stores the images of every generator under the map
//! and under its inverse, both as reduced words. The group we work in is
//! closed under this representation, so general inversion of an arbitrary
//! image list is never needed.
//!
//! Conventions, locked by the relation test suite:
//!
//! * products compose right-to-left: `apply(compose(f, g), w) = f(g(w))`;
//! * conjugation is on the right: `conjugate(x, h) = h^-1 * x * h`;
//! * commutators are `[g, h] = g * h * g^-1 * h^-1`.

use std::fmt;

use thiserror::Error;

use crate::freegroup::{FreeGroupError, Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AutfError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("bad indices for {name}: {detail}")]
    BadIndices { name: String, detail: String },
    #[error("rank {rank} too small for {name}")]
    RankTooSmall { name: String, rank: u32 },
    #[error("image lists do not describe mutually inverse maps")]
    NotInverse,
    #[error(transparent)]
    Word(#[from] FreeGroupError),
    #[error("cannot parse element {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// An automorphism of `F_rank`, stored as forward and inverse generator
/// images. Equality of (rank, forward images) determines the map, and the
/// inverse images are determined by the forward ones, so derived `Eq`/`Hash`
/// agree with mathematical equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    rank: u32,
    fwd: Vec<Word>,
    inv: Vec<Word>,
}

fn check_index(name: &str, rank: u32, i: u32) -> Result<(), AutfError> {
    if i == 0 || i > rank {
        return Err(AutfError::BadIndices {
            name: name.to_string(),
            detail: format!("index {i} out of range for rank {rank}"),
        });
    }
    Ok(())
}

fn check_pair(name: &str, rank: u32, i: u32, j: u32) -> Result<(), AutfError> {
    check_index(name, rank, i)?;
    check_index(name, rank, j)?;
    if i == j {
        return Err(AutfError::BadIndices {
            name: name.to_string(),
            detail: format!("indices must be distinct, got ({i}, {j})"),
        });
    }
    Ok(())
}

impl Automorphism {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn forward_images(&self) -> &[Word] {
        &self.fwd
    }

    pub fn inverse_images(&self) -> &[Word] {
        &self.inv
    }

    /// Build from explicit image lists, verifying the round trip
    /// `inv(fwd(a_i)) = a_i = fwd(inv(a_i))`.
    pub fn from_images(rank: u32, fwd: Vec<Word>, inv: Vec<Word>) -> Result<Self, AutfError> {
        if fwd.len() != rank as usize || inv.len() != rank as usize {
            return Err(AutfError::BadIndices {
                name: "from_images".to_string(),
                detail: "image list length must equal rank".to_string(),
            });
        }
        for word in fwd.iter().chain(inv.iter()) {
            if word.rank() != rank {
                return Err(AutfError::RankMismatch {
                    left: rank,
                    right: word.rank(),
                });
            }
        }
        let aut = Automorphism { rank, fwd, inv };
        if !aut.round_trip_ok() {
            return Err(AutfError::NotInverse);
        }
        Ok(aut)
    }

    pub fn identity(rank: u32) -> Self {
        let images: Vec<Word> = (1..=rank)
            .map(|i| Word::generator(rank, i).expect("index in range"))
            .collect();
        Automorphism {
            rank,
            fwd: images.clone(),
            inv: images,
        }
    }

    fn from_rule(
        rank: u32,
        fwd_rule: impl Fn(u32) -> Vec<Letter>,
        inv_rule: impl Fn(u32) -> Vec<Letter>,
    ) -> Self {
        let fwd = (1..=rank)
            .map(|k| Word::reduce(&fwd_rule(k), rank).expect("builder indices in range"))
            .collect();
        let inv = (1..=rank)
            .map(|k| Word::reduce(&inv_rule(k), rank).expect("builder indices in range"))
            .collect();
        Automorphism { rank, fwd, inv }
    }

    /// Right transvection `rho_ij`: `a_i -> a_i a_j`, other generators fixed.
    pub fn rho(rank: u32, i: u32, j: u32) -> Result<Self, AutfError> {
        check_pair("rho", rank, i, j)?;
        Ok(Self::from_rule(
            rank,
            |k| {
                if k == i {
                    vec![Letter::positive(i), Letter::positive(j)]
                } else {
                    vec![Letter::positive(k)]
                }
            },
            |k| {
                if k == i {
                    vec![Letter::positive(i), Letter::negative(j)]
                } else {
                    vec![Letter::positive(k)]
                }
            },
        ))
    }

    /// Left transvection `lam_ij`: `a_i -> a_j a_i`, other generators fixed.
    pub fn lam(rank: u32, i: u32, j: u32) -> Result<Self, AutfError> {
        check_pair("lam", rank, i, j)?;
        Ok(Self::from_rule(
            rank,
            |k| {
                if k == i {
                    vec![Letter::positive(j), Letter::positive(i)]
                } else {
                    vec![Letter::positive(k)]
                }
            },
            |k| {
                if k == i {
                    vec![Letter::negative(j), Letter::positive(i)]
                } else {
                    vec![Letter::positive(k)]
                }
            },
        ))
    }

    /// Generator swap `sig_ij`: exchanges `a_i` and `a_j`. Self-inverse.
    pub fn sigma(rank: u32, i: u32, j: u32) -> Result<Self, AutfError> {
        check_pair("sig", rank, i, j)?;
        let rule = move |k: u32| {
            let target = if k == i {
                j
            } else if k == j {
                i
            } else {
                k
            };
            vec![Letter::positive(target)]
        };
        Ok(Self::from_rule(rank, rule, rule))
    }

    /// The extra symmetric generator `sigbar_i` (the transposition with the
    /// phantom letter `n+1`): `a_i -> a_i^-1`, `a_k -> a_k a_i^-1` for
    /// `k != i`. Self-inverse.
    pub fn sigma_bar(rank: u32, i: u32) -> Result<Self, AutfError> {
        check_index("sigbar", rank, i)?;
        let rule = move |k: u32| {
            if k == i {
                vec![Letter::negative(i)]
            } else {
                vec![Letter::positive(k), Letter::negative(i)]
            }
        };
        Ok(Self::from_rule(rank, rule, rule))
    }

    /// Sign flip `eps_i`: inverts `a_i`, fixes the rest. Self-inverse.
    pub fn eps(rank: u32, i: u32) -> Result<Self, AutfError> {
        check_index("eps", rank, i)?;
        let rule = move |k: u32| {
            if k == i {
                vec![Letter::negative(i)]
            } else {
                vec![Letter::positive(k)]
            }
        };
        Ok(Self::from_rule(rank, rule, rule))
    }

    /// Global inversion `delta`: inverts every generator. Self-inverse.
    pub fn delta(rank: u32) -> Self {
        let rule = |k: u32| vec![Letter::negative(k)];
        Self::from_rule(rank, rule, rule)
    }

    /// The order-3 element
    /// `gamma = eps_{n-1} * eps_n * lam_{(n-1)n}^-1 * rho_{n(n-1)}`,
    /// whose centraliser contains every transvection on the first `n-2`
    /// generators.
    pub fn gamma(rank: u32) -> Result<Self, AutfError> {
        if rank < 3 {
            return Err(AutfError::RankTooSmall {
                name: "gamma".to_string(),
                rank,
            });
        }
        let n = rank;
        let parts = [
            Self::eps(rank, n - 1)?,
            Self::eps(rank, n)?,
            Self::lam(rank, n - 1, n)?.inverse(),
            Self::rho(rank, n, n - 1)?,
        ];
        let mut out = parts[0].clone();
        for part in &parts[1..] {
            out = out.compose(part)?;
        }
        Ok(out)
    }

    /// Substitution: rewrite `w` through the forward images.
    pub fn apply(&self, w: &Word) -> Result<Word, AutfError> {
        if self.rank != w.rank() {
            return Err(AutfError::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        Ok(substitute(&self.fwd, w))
    }

    /// Substitution through the inverse images.
    pub fn apply_inv(&self, w: &Word) -> Result<Word, AutfError> {
        if self.rank != w.rank() {
            return Err(AutfError::RankMismatch {
                left: self.rank,
                right: w.rank(),
            });
        }
        Ok(substitute(&self.inv, w))
    }

    /// `compose(f, g)` applies `g` first: `apply(compose(f,g), w) = f(g(w))`.
    pub fn compose(&self, g: &Automorphism) -> Result<Automorphism, AutfError> {
        if self.rank != g.rank {
            return Err(AutfError::RankMismatch {
                left: self.rank,
                right: g.rank,
            });
        }
        let fwd = g.fwd.iter().map(|w| substitute(&self.fwd, w)).collect();
        let inv = self.inv.iter().map(|w| substitute(&g.inv, w)).collect();
        Ok(Automorphism {
            rank: self.rank,
            fwd,
            inv,
        })
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism {
            rank: self.rank,
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
        }
    }

    /// Right conjugation `h^-1 * x * h`.
    pub fn conjugate(&self, h: &Automorphism) -> Result<Automorphism, AutfError> {
        h.inverse().compose(self)?.compose(h)
    }

    /// `[g, h] = g * h * g^-1 * h^-1`.
    pub fn commutator(&self, h: &Automorphism) -> Result<Automorphism, AutfError> {
        self.compose(h)?
            .compose(&self.inverse())?
            .compose(&h.inverse())
    }

    /// Integer power (negative exponents use the stored inverse).
    pub fn pow(&self, exponent: i64) -> Automorphism {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut out = Automorphism::identity(self.rank);
        for _ in 0..exponent.unsigned_abs() {
            out = out.compose(&base).expect("equal ranks");
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.fwd
            .iter()
            .enumerate()
            .all(|(idx, w)| w.letters() == [Letter::positive(idx as u32 + 1)])
    }

    /// Least `k <= cap` with `self^k = identity`.
    pub fn order(&self, cap: u64) -> OrderResult {
        let mut power = self.clone();
        for k in 1..=cap {
            if power.is_identity() {
                return OrderResult::Finite(k);
            }
            power = power.compose(self).expect("equal ranks");
        }
        OrderResult::ExceedsCap
    }

    /// Round trip `inv(fwd(a_i)) = a_i` and `fwd(inv(a_i)) = a_i`.
    pub fn round_trip_ok(&self) -> bool {
        (0..self.rank as usize).all(|idx| {
            let a = Word::generator(self.rank, idx as u32 + 1).expect("index in range");
            substitute(&self.inv, &self.fwd[idx]) == a && substitute(&self.fwd, &self.inv[idx]) == a
        })
    }

    pub fn commutes_with(&self, other: &Automorphism) -> Result<bool, AutfError> {
        Ok(self.commutator(other)?.is_identity())
    }
}

fn substitute(images: &[Word], w: &Word) -> Word {
    let rank = images.first().map_or(w.rank(), |i| i.rank());
    let mut out = Word::identity(rank);
    for l in w.letters() {
        let image = &images[(l.index - 1) as usize];
        let factor = if l.sign == 1 { image.clone() } else { image.invert() };
        out = out.multiply(&factor).expect("equal ranks");
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderResult {
    Finite(u64),
    ExceedsCap,
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite(k) => Some(k),
            OrderResult::ExceedsCap => None,
        }
    }
}

impl fmt::Display for OrderResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderResult::Finite(k) => write!(f, "{k}"),
            OrderResult::ExceedsCap => write!(f, "exceeds cap"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TransvectionKind {
    Rho,
    Lam,
}

/// A signed right or left transvection, `rho_ij^±1` or `lam_ij^±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transvection {
    pub kind: TransvectionKind,
    pub i: u32,
    pub j: u32,
    pub inverted: bool,
}

impl Transvection {
    pub fn to_automorphism(self, rank: u32) -> Result<Automorphism, AutfError> {
        let base = match self.kind {
            TransvectionKind::Rho => Automorphism::rho(rank, self.i, self.j)?,
            TransvectionKind::Lam => Automorphism::lam(rank, self.i, self.j)?,
        };
        Ok(if self.inverted { base.inverse() } else { base })
    }

    pub fn label(&self) -> String {
        let name = match self.kind {
            TransvectionKind::Rho => "rho",
            TransvectionKind::Lam => "lam",
        };
        let exp = if self.inverted { "^-1" } else { "" };
        format!("{name}({},{}){exp}", self.i, self.j)
    }
}

/// The full transvection set `T = {rho_ij^±1, lam_ij^±1}` at the given rank.
pub fn all_transvections(rank: u32) -> Vec<Transvection> {
    let mut out = Vec::new();
    for kind in [TransvectionKind::Rho, TransvectionKind::Lam] {
        for i in 1..=rank {
            for j in 1..=rank {
                if i == j {
                    continue;
                }
                for inverted in [false, true] {
                    out.push(Transvection {
                        kind,
                        i,
                        j,
                        inverted,
                    });
                }
            }
        }
    }
    out
}

/// Brute-force subset of `T` commuting with `f`.
pub fn commuting_transvections(
    rank: u32,
    f: &Automorphism,
) -> Result<Vec<Transvection>, AutfError> {
    if f.rank() != rank {
        return Err(AutfError::RankMismatch {
            left: rank,
            right: f.rank(),
        });
    }
    let mut out = Vec::new();
    for t in all_transvections(rank) {
        let g = t.to_automorphism(rank)?;
        if f.commutes_with(&g)? {
            out.push(t);
        }
    }
    Ok(out)
}

pub mod parse {
    //! Parser for the CLI element syntax:
    //! `rho(1,2)`, `lam(1,2)`, `sig(1,2)`, `sigbar(1)`, `eps(1)`, `delta`,
    //! `gamma`, and `id`, combined with `*` (composition, right factor acts
    //! first), `^-1` / `^k` (powers), and `^(expr)` (conjugation).

    use super::{Automorphism, AutfError};

    struct Parser<'a> {
        src: &'a str,
        bytes: &'a [u8],
        pos: usize,
        rank: u32,
    }

    pub fn element(rank: u32, src: &str) -> Result<Automorphism, AutfError> {
        let mut p = Parser {
            src,
            bytes: src.as_bytes(),
            pos: 0,
            rank,
        };
        let out = p.expr()?;
        p.skip_ws();
        if p.pos != p.bytes.len() {
            return Err(p.error(&format!("unexpected trailing input at byte {}", p.pos)));
        }
        Ok(out)
    }

    impl<'a> Parser<'a> {
        fn error(&self, reason: &str) -> AutfError {
            AutfError::Parse {
                input: self.src.to_string(),
                reason: reason.to_string(),
            }
        }

        fn skip_ws(&mut self) {
            while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
                self.pos += 1;
            }
        }

        fn peek(&mut self) -> Option<u8> {
            self.skip_ws();
            self.bytes.get(self.pos).copied()
        }

        fn eat(&mut self, expected: u8) -> Result<(), AutfError> {
            if self.peek() == Some(expected) {
                self.pos += 1;
                Ok(())
            } else {
                Err(self.error(&format!(
                    "expected {:?} at byte {}",
                    expected as char, self.pos
                )))
            }
        }

        fn expr(&mut self) -> Result<Automorphism, AutfError> {
            let mut out = self.factor()?;
            while self.peek() == Some(b'*') {
                self.pos += 1;
                let rhs = self.factor()?;
                out = out.compose(&rhs)?;
            }
            Ok(out)
        }

        fn factor(&mut self) -> Result<Automorphism, AutfError> {
            let mut out = self.atom()?;
            while self.peek() == Some(b'^') {
                self.pos += 1;
                match self.peek() {
                    Some(b'(') => {
                        self.pos += 1;
                        let h = self.expr()?;
                        self.eat(b')')?;
                        out = out.conjugate(&h)?;
                    }
                    _ => {
                        let k = self.integer()?;
                        out = out.pow(k);
                    }
                }
            }
            Ok(out)
        }

        fn atom(&mut self) -> Result<Automorphism, AutfError> {
            match self.peek() {
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.eat(b')')?;
                    Ok(inner)
                }
                Some(c) if c.is_ascii_alphabetic() => self.named(),
                _ => Err(self.error(&format!("expected an element at byte {}", self.pos))),
            }
        }

        fn named(&mut self) -> Result<Automorphism, AutfError> {
            let start = self.pos;
            while self
                .bytes
                .get(self.pos)
                .is_some_and(|c| c.is_ascii_alphabetic())
            {
                self.pos += 1;
            }
            let name = &self.src[start..self.pos];
            let rank = self.rank;
            match name {
                "delta" => Ok(Automorphism::delta(rank)),
                "gamma" => Automorphism::gamma(rank),
                "id" => Ok(Automorphism::identity(rank)),
                "rho" | "lam" | "sig" => {
                    let (i, j) = self.two_args()?;
                    match name {
                        "rho" => Automorphism::rho(rank, i, j),
                        "lam" => Automorphism::lam(rank, i, j),
                        _ => Automorphism::sigma(rank, i, j),
                    }
                }
                "sigbar" | "eps" => {
                    let i = self.one_arg()?;
                    match name {
                        "sigbar" => Automorphism::sigma_bar(rank, i),
                        _ => Automorphism::eps(rank, i),
                    }
                }
                other => Err(self.error(&format!("unknown element {other:?}"))),
            }
        }

        fn one_arg(&mut self) -> Result<u32, AutfError> {
            self.eat(b'(')?;
            let i = self.index()?;
            self.eat(b')')?;
            Ok(i)
        }

        fn two_args(&mut self) -> Result<(u32, u32), AutfError> {
            self.eat(b'(')?;
            let i = self.index()?;
            self.eat(b',')?;
            let j = self.index()?;
            self.eat(b')')?;
            Ok((i, j))
        }

        fn index(&mut self) -> Result<u32, AutfError> {
            let k = self.integer()?;
            u32::try_from(k).map_err(|_| self.error("index must be positive"))
        }

        fn integer(&mut self) -> Result<i64, AutfError> {
            self.skip_ws();
            let start = self.pos;
            if self.bytes.get(self.pos) == Some(&b'-') {
                self.pos += 1;
            }
            while self.bytes.get(self.pos).is_some_and(u8::is_ascii_digit) {
                self.pos += 1;
            }
            self.src[start..self.pos]
                .parse()
                .map_err(|_| self.error(&format!("expected an integer at byte {start}")))
        }
    }
}
