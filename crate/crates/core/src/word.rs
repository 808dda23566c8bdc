//! Reduced words in the free group `F_r`.
//!
//! Generators are written `a, b, c, ...` and their inverses `A, B, C, ...`.
//! The empty string is the identity.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest rank representable in the ASCII text format.
pub const MAX_RANK: u32 = 26;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }
}

/// A generator `x_i` or its inverse. `generator` is 1-based.
///
/// Letters order as `a < A < b < B < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    generator: u32,
    sign: Sign,
}

impl Letter {
    pub fn new(generator: u32, sign: Sign, rank: u32) -> Result<Letter> {
        if generator == 0 || generator > rank || rank > MAX_RANK {
            return Err(Error::GeneratorOutOfRange { generator, rank });
        }
        Ok(Letter { generator, sign })
    }

    pub fn generator(self) -> u32 {
        self.generator
    }

    pub fn sign(self) -> Sign {
        self.sign
    }

    pub fn inverse(self) -> Letter {
        Letter {
            generator: self.generator,
            sign: self.sign.flip(),
        }
    }

    pub fn is_inverse_of(self, other: Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }

    pub fn from_char(c: char, rank: u32) -> Result<Letter> {
        let (generator, sign) = match c {
            'a'..='z' => (c as u32 - 'a' as u32 + 1, Sign::Pos),
            'A'..='Z' => (c as u32 - 'A' as u32 + 1, Sign::Neg),
            _ => return Err(Error::BadSymbol(c)),
        };
        if generator > rank {
            return Err(Error::SymbolOutsideRank { symbol: c, rank });
        }
        Letter::new(generator, sign, rank)
    }

    pub fn to_char(self) -> char {
        let base = match self.sign {
            Sign::Pos => b'a',
            Sign::Neg => b'A',
        };
        (base + (self.generator - 1) as u8) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A freely reduced word of a fixed rank.
///
/// Equality, hashing and ordering look at the rank first and then the letters;
/// [`FreeWord::shortlex_cmp`] gives the shortlex order used for tie-breaking.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: u32,
    letters: Arc<[Letter]>,
}

impl FreeWord {
    pub fn identity(rank: u32) -> FreeWord {
        FreeWord {
            rank,
            letters: Arc::from(Vec::new()),
        }
    }

    pub fn generator(generator: u32, rank: u32) -> Result<FreeWord> {
        let letter = Letter::new(generator, Sign::Pos, rank)?;
        Ok(FreeWord {
            rank,
            letters: Arc::from(vec![letter]),
        })
    }

    /// Freely reduces `letters`. Every letter must lie within `rank`.
    pub fn reduce(letters: impl IntoIterator<Item = Letter>, rank: u32) -> Result<FreeWord> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidRank(rank));
        }
        let mut stack: Vec<Letter> = Vec::new();
        for letter in letters {
            if letter.generator > rank {
                return Err(Error::GeneratorOutOfRange {
                    generator: letter.generator,
                    rank,
                });
            }
            push_reducing(&mut stack, letter);
        }
        Ok(FreeWord {
            rank,
            letters: stack.into(),
        })
    }

    /// Wraps letters that are already known to be reduced and within rank.
    pub(crate) fn from_reduced(letters: Vec<Letter>, rank: u32) -> FreeWord {
        debug_assert!(letters.windows(2).all(|w| !w[0].is_inverse_of(w[1])));
        FreeWord {
            rank,
            letters: letters.into(),
        }
    }

    pub fn parse(text: &str, rank: u32) -> Result<FreeWord> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::InvalidRank(rank));
        }
        let letters = text
            .chars()
            .map(|c| Letter::from_char(c, rank))
            .collect::<Result<Vec<_>>>()?;
        FreeWord::reduce(letters, rank)
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

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// The subword `letters[range]`. Factors of a reduced word are reduced.
    pub fn slice(&self, range: std::ops::Range<usize>) -> FreeWord {
        FreeWord::from_reduced(self.letters[range].to_vec(), self.rank)
    }

    fn check_rank(&self, other: &FreeWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        self.check_rank(other)?;
        let mut stack = Vec::with_capacity(self.len() + other.len());
        stack.extend_from_slice(&self.letters);
        for &letter in other.letters.iter() {
            push_reducing(&mut stack, letter);
        }
        Ok(FreeWord::from_reduced(stack, self.rank))
    }

    /// Product of a sequence of words of this rank, reduced once at the end.
    pub fn product<'a>(rank: u32, factors: impl IntoIterator<Item = &'a FreeWord>) -> Result<FreeWord> {
        let mut stack = Vec::new();
        for w in factors {
            if w.rank != rank {
                return Err(Error::RankMismatch(rank, w.rank));
            }
            for &letter in w.letters.iter() {
                push_reducing(&mut stack, letter);
            }
        }
        Ok(FreeWord::from_reduced(stack, rank))
    }

    pub fn invert(&self) -> FreeWord {
        let letters = self.letters.iter().rev().map(|l| l.inverse()).collect();
        FreeWord::from_reduced(letters, self.rank)
    }

    pub fn power(&self, k: i64) -> FreeWord {
        if k < 0 {
            return self.power(-k).invert();
        }
        if k == 0 || self.is_empty() {
            return FreeWord::identity(self.rank);
        }
        let CyclicDecomposition { conjugator, core } = self.cyclic_reduce();
        // core is cyclically reduced, so core^k needs no reduction
        let mut letters = Vec::with_capacity(2 * conjugator.len() + k as usize * core.len());
        letters.extend_from_slice(conjugator.letters());
        for _ in 0..k {
            letters.extend_from_slice(core.letters());
        }
        letters.extend(conjugator.letters().iter().rev().map(|l| l.inverse()));
        FreeWord::from_reduced(letters, self.rank)
    }

    pub fn conjugate_by(&self, p: &FreeWord) -> Result<FreeWord> {
        FreeWord::product(self.rank, [p, self, &p.invert()])
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.first(), self.last()) {
            (Some(f), Some(l)) => !f.is_inverse_of(l),
            _ => true,
        }
    }

    /// Splits `w = p · c · p⁻¹` with `c` cyclically reduced.
    pub fn cyclic_reduce(&self) -> CyclicDecomposition {
        let n = self.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k].is_inverse_of(self.letters[n - 1 - k]) {
            k += 1;
        }
        CyclicDecomposition {
            conjugator: self.slice(0..k),
            core: self.slice(k..n - k),
        }
    }

    /// Shortest period of a non-empty cyclically reduced word, as `(root, exponent)`.
    pub fn primitive_root(&self) -> Result<(FreeWord, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyWord);
        }
        if !self.is_cyclically_reduced() {
            return Err(Error::NotCyclicallyReduced(self.to_string()));
        }
        let period = smallest_full_period(&self.letters);
        Ok((self.slice(0..period), self.len() / period))
    }

    pub fn is_prefix_of(&self, other: &FreeWord) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn common_prefix_len(&self, other: &FreeWord) -> usize {
        self.letters
            .iter()
            .zip(other.letters.iter())
            .take_while(|(a, b)| a == b)
            .count()
    }

    pub fn shortlex_cmp(&self, other: &FreeWord) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

fn push_reducing(stack: &mut Vec<Letter>, letter: Letter) {
    match stack.last() {
        Some(&top) if top.is_inverse_of(letter) => {
            stack.pop();
        }
        _ => stack.push(letter),
    }
}

/// Smallest `d` dividing `s.len()` with `s` equal to its prefix of length `d` repeated.
fn smallest_full_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    // KMP border of the whole string
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters.iter() {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({:?}, rank {})", self.to_string(), self.rank)
    }
}

/// `w = conjugator · core · conjugator⁻¹` with `core` cyclically reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicDecomposition {
    pub conjugator: FreeWord,
    pub core: FreeWord,
}
