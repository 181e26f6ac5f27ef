//! Freely reduced words in the free group `F_n`.
//!
//! A [`Word`] carries its ambient rank and is kept in reduced form at all
//! times: no letter is ever adjacent to its inverse. Words are immutable
//! values; all operations are pure.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("letter index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: u32, rank: u32 },
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: u32, right: u32 },
    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A signed generator occurrence: `a_index` or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    /// 1-based generator index.
    pub index: u32,
    /// `+1` for `a_index`, `-1` for its inverse.
    pub sign: i8,
}

impl Letter {
    pub fn new(index: u32, sign: i8) -> Self {
        assert!(sign == 1 || sign == -1, "letter sign must be +1 or -1");
        assert!(index >= 1, "letter index is 1-based");
        Letter { index, sign }
    }

    pub fn positive(index: u32) -> Self {
        Letter::new(index, 1)
    }

    pub fn negative(index: u32) -> Self {
        Letter::new(index, -1)
    }

    pub fn inverse(self) -> Self {
        Letter {
            index: self.index,
            sign: -self.sign,
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign == -other.sign
    }
}

/// A freely reduced word in `F_rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    rank: u32,
    letters: Vec<Letter>,
}

impl Word {
    /// The empty word.
    pub fn identity(rank: u32) -> Self {
        Word {
            rank,
            letters: Vec::new(),
        }
    }

    /// The single-letter word `a_index`.
    pub fn generator(rank: u32, index: u32) -> Result<Self, FreeGroupError> {
        Word::reduce(&[Letter::positive(index)], rank)
    }

    /// Free reduction of an arbitrary letter sequence.
    ///
    /// Cancelling adjacent pairs are removed until none remain; the result
    /// does not depend on the cancellation order, so a single stack pass
    /// suffices.
    pub fn reduce(letters: &[Letter], rank: u32) -> Result<Self, FreeGroupError> {
        let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
        for &l in letters {
            if l.index == 0 || l.index > rank {
                return Err(FreeGroupError::IndexOutOfRange {
                    index: l.index,
                    rank,
                });
            }
            match stack.last() {
                Some(&top) if top.cancels(l) => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Ok(Word {
            rank,
            letters: stack,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reduced concatenation `self * other`.
    pub fn multiply(&self, other: &Word) -> Result<Word, FreeGroupError> {
        if self.rank != other.rank {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        // Both factors are reduced, so cancellation can only happen at the
        // seam; peel matching prefixes/suffixes then splice.
        let mut left = self.letters.len();
        let mut right = 0usize;
        while left > 0
            && right < other.letters.len()
            && self.letters[left - 1].cancels(other.letters[right])
        {
            left -= 1;
            right += 1;
        }
        let mut letters = Vec::with_capacity(left + other.letters.len() - right);
        letters.extend_from_slice(&self.letters[..left]);
        letters.extend_from_slice(&other.letters[right..]);
        Ok(Word {
            rank: self.rank,
            letters,
        })
    }

    /// The inverse word (letters reversed, signs flipped).
    pub fn invert(&self) -> Word {
        Word {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Parse the textual syntax `a1*a2^-1*a1`; the empty word is `1`.
    pub fn parse(input: &str, rank: u32) -> Result<Word, FreeGroupError> {
        let err = |reason: &str| FreeGroupError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = input.trim();
        if trimmed == "1" {
            return Ok(Word::identity(rank));
        }
        let mut letters = Vec::new();
        for piece in trimmed.split('*') {
            let piece = piece.trim();
            let rest = piece
                .strip_prefix('a')
                .ok_or_else(|| err("expected a generator like a1 or a2^-1"))?;
            let (digits, sign) = match rest.split_once('^') {
                Some((d, "-1")) => (d, -1),
                Some((d, "1")) => (d, 1),
                Some((_, exp)) => {
                    return Err(err(&format!("unsupported exponent {exp:?}")));
                }
                None => (rest, 1),
            };
            let index: u32 = digits
                .parse()
                .map_err(|_| err(&format!("bad generator index {digits:?}")))?;
            if index == 0 || index > rank {
                return Err(FreeGroupError::IndexOutOfRange { index, rank });
            }
            letters.push(Letter::new(index, sign));
        }
        Word::reduce(&letters, rank)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for l in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if l.sign == 1 {
                write!(f, "a{}", l.index)?;
            } else {
                write!(f, "a{}^-1", l.index)?;
            }
        }
        Ok(())
    }
}
