//! Endomorphisms of `F_r` given by generator images, their orbits and the
//! limit words of prefix-extending substitutions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::word::{FreeWord, Letter, Sign};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    rank: u32,
    images: Vec<FreeWord>,
}

impl Endomorphism {
    pub fn new(images: Vec<FreeWord>) -> Result<Endomorphism> {
        let rank = images.len() as u32;
        if rank == 0 {
            return Err(Error::BadMapping("no generator images".into()));
        }
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch(rank, bad.rank()));
        }
        Ok(Endomorphism { rank, images })
    }

    pub fn identity(rank: u32) -> Result<Endomorphism> {
        let images = (1..=rank)
            .map(|g| FreeWord::generator(g, rank))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(images)
    }

    /// `a ↦ ab, b ↦ a` on `F(a, b)`; its fixed point is the Fibonacci word.
    pub fn fibonacci() -> Endomorphism {
        "a=ab; b=a".parse().expect("valid mapping")
    }

    /// `a ↦ a, b ↦ ba, c ↦ c⁻¹bcd, d ↦ c` on `F(a, b, c, d)`.
    pub fn growing_powers() -> Endomorphism {
        "a=a; b=ba; c=Cbcd; d=c".parse().expect("valid mapping")
    }

    /// `a ↦ ab, b ↦ ba`, whose fixed point from `a` is the Thue–Morse word.
    pub fn thue_morse() -> Endomorphism {
        "a=ab; b=ba".parse().expect("valid mapping")
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn image(&self, letter: Letter) -> FreeWord {
        let image = &self.images[letter.generator() as usize - 1];
        match letter.sign() {
            Sign::Pos => image.clone(),
            Sign::Neg => image.invert(),
        }
    }

    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, w.rank()));
        }
        let inverses: Vec<FreeWord> = self.images.iter().map(FreeWord::invert).collect();
        let parts = w.letters().iter().map(|l| {
            let i = l.generator() as usize - 1;
            match l.sign() {
                Sign::Pos => &self.images[i],
                Sign::Neg => &inverses[i],
            }
        });
        FreeWord::product(self.rank, parts)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<Vec<_>>>()?;
        Endomorphism::new(images)
    }

    pub fn power(&self, k: usize) -> Result<Endomorphism> {
        let mut acc = Endomorphism::identity(self.rank)?;
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.len() == 1 && w.letters()[0].generator() == i as u32 + 1 && w.letters()[0].sign() == Sign::Pos)
    }

    /// `[w, e(w), …, eᵏ(w)]`.
    pub fn orbit(&self, w: &FreeWord, k: usize) -> Result<Vec<FreeWord>> {
        let mut out = Vec::with_capacity(k + 1);
        out.push(w.clone());
        for _ in 0..k {
            let next = self.apply(out.last().expect("non-empty"))?;
            out.push(next);
        }
        Ok(out)
    }

    /// First `length` letters of the limit of `eᵏ(seed)`.
    ///
    /// Iterates until an iterate of at least `length` letters agrees with its
    /// image on the first `length` letters. Fails when the iterates stop
    /// growing or never stabilize.
    pub fn limit_prefix(&self, seed: u32, length: usize) -> Result<FreeWord> {
        const MAX_ITERATIONS: usize = 256;
        const MAX_LETTERS: usize = 1 << 24;
        let mut current = FreeWord::generator(seed, self.rank)?;
        for _ in 0..MAX_ITERATIONS {
            let next = self.apply(&current)?;
            if current.len() >= length && next.len() >= length
                && current.letters()[..length] == next.letters()[..length]
            {
                return Ok(current.slice(0..length));
            }
            if next == current {
                return Err(Error::NoLimit(format!(
                    "{current} is fixed and shorter than {length} letters"
                )));
            }
            if next.len() > MAX_LETTERS {
                break;
            }
            current = next;
        }
        Err(Error::NoLimit(format!(
            "iterates of {} do not stabilize on a prefix of length {length}",
            FreeWord::generator(seed, self.rank)?
        )))
    }
}

/// `e ∘ f` and `f ∘ e` both fix every generator.
pub fn verify_inverse(e: &Endomorphism, f: &Endomorphism) -> Result<bool> {
    Ok(e.compose(f)?.is_identity() && f.compose(e)?.is_identity())
}

/// Prefix of the Thue–Morse word over `{a, b}`: letter `i` is `b` iff `i` has
/// an odd number of one bits.
pub fn thue_morse(length: usize) -> FreeWord {
    let text: String = (0..length)
        .map(|i: usize| if i.count_ones() % 2 == 0 { 'a' } else { 'b' })
        .collect();
    FreeWord::parse(&text, 2).expect("a and b are in rank 2")
}

impl FromStr for Endomorphism {
    type Err = Error;

    /// Parses `a=ab; b=a`, one entry per generator in order; entries are
    /// separated by `;` or newlines.
    fn from_str(text: &str) -> Result<Endomorphism> {
        let entries: Vec<(&str, &str)> = text
            .split(|c| c == ';' || c == '\n')
            .map(str::trim)
            .filter(|e| !e.is_empty())
            .map(|e| {
                e.split_once('=')
                    .map(|(k, v)| (k.trim(), v.trim()))
                    .ok_or_else(|| Error::BadMapping(format!("missing '=' in {e:?}")))
            })
            .collect::<Result<_>>()?;
        let rank = entries.len() as u32;
        if rank == 0 || rank > crate::word::MAX_RANK {
            return Err(Error::BadMapping(format!("expected 1 to 26 entries, got {rank}")));
        }
        let mut images: Vec<Option<FreeWord>> = vec![None; rank as usize];
        for (key, value) in entries {
            let mut chars = key.chars();
            let letter = match (chars.next(), chars.next()) {
                (Some(c), None) if c.is_ascii_lowercase() => Letter::from_char(c, rank)
                    .map_err(|_| Error::BadMapping(format!("generator {c:?} outside rank {rank}")))?,
                _ => return Err(Error::BadMapping(format!("bad generator {key:?}"))),
            };
            let slot = &mut images[letter.generator() as usize - 1];
            if slot.is_some() {
                return Err(Error::BadMapping(format!("{key} mapped twice")));
            }
            *slot = Some(FreeWord::parse(value, rank)?);
        }
        Endomorphism::new(images.into_iter().map(|w| w.expect("all slots filled")).collect())
    }
}

impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, image) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{}={}", (b'a' + i as u8) as char, image)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Endomorphism({self})")
    }
}
