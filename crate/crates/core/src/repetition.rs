//! Maximal repetitions and the power factorizations `w = p·uᵐ·s` they induce.
//!
//! The scanner is quadratic: for each candidate period it walks the word once
//! and records maximal stretches where `w[i] == w[i + period]`.

use std::collections::BTreeMap;

use crate::word::FreeWord;

/// A maximal repetition `w[start..end)` with smallest period `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    /// Largest integer exponent of the period inside the run.
    pub fn integer_exponent(&self) -> usize {
        self.len() / self.period
    }
}

/// `word = prefix · baseᵉˣᵖᵒⁿᵉⁿᵗ · suffix` with no cancellation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PowerFactorization {
    pub prefix_len: usize,
    pub base: FreeWord,
    pub exponent: usize,
    pub word: FreeWord,
}

impl PowerFactorization {
    /// Builds a factorization after checking that `word` spells `base^exponent`
    /// at `prefix_len`. Maximality of the exponent is not required.
    pub fn new(
        word: &FreeWord,
        prefix_len: usize,
        base: &FreeWord,
        exponent: usize,
    ) -> crate::Result<PowerFactorization> {
        use crate::Error::InvalidFactorization;
        if base.rank() != word.rank() {
            return Err(crate::Error::RankMismatch(word.rank(), base.rank()));
        }
        if base.is_empty() || exponent == 0 {
            return Err(InvalidFactorization("empty base or zero exponent".into()));
        }
        let span = base.len() * exponent;
        if prefix_len + span > word.len() {
            return Err(InvalidFactorization(format!(
                "{base}^{exponent} at {prefix_len} runs past the end of {word}"
            )));
        }
        let letters = &word.letters()[prefix_len..prefix_len + span];
        if !letters
            .chunks(base.len())
            .all(|chunk| chunk == base.letters())
        {
            return Err(InvalidFactorization(format!(
                "{word} does not contain {base}^{exponent} at {prefix_len}"
            )));
        }
        if !base.is_cyclically_reduced() {
            return Err(InvalidFactorization(format!(
                "base {base} is not cyclically reduced"
            )));
        }
        Ok(PowerFactorization {
            prefix_len,
            base: base.clone(),
            exponent,
            word: word.clone(),
        })
    }

    pub fn span(&self) -> usize {
        self.base.len() * self.exponent
    }

    pub fn prefix(&self) -> FreeWord {
        self.word.slice(0..self.prefix_len)
    }

    pub fn suffix(&self) -> FreeWord {
        self.word.slice(self.prefix_len + self.span()..self.word.len())
    }

    /// The conjugate `p·u·p⁻¹` whose axis the factor travels along.
    pub fn conjugated_base(&self) -> FreeWord {
        self.base
            .conjugate_by(&self.prefix())
            .expect("prefix and base share the word's rank")
    }
}

impl std::fmt::Debug for PowerFactorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {:?}, {}) in {:?}",
            self.prefix_len,
            self.base.to_string(),
            self.exponent,
            self.word.to_string()
        )
    }
}

/// Every maximal repetition of exponent at least 2, sorted by `(start, period)`.
pub fn find_runs(w: &FreeWord) -> Vec<Run> {
    let s = w.letters();
    let n = s.len();
    // interval -> smallest period seen; a non-smallest period of a run
    // produces the same interval as its smallest period
    let mut best: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for period in 1..=n / 2 {
        let mut i = 0;
        while i + period < n {
            if s[i] != s[i + period] {
                i += 1;
                continue;
            }
            let begin = i;
            while i + period < n && s[i] == s[i + period] {
                i += 1;
            }
            if i - begin >= period {
                let entry = best.entry((begin, i + period)).or_insert(period);
                *entry = (*entry).min(period);
            }
        }
    }
    let mut runs: Vec<Run> = best
        .into_iter()
        .map(|((start, end), period)| Run { start, end, period })
        .collect();
    runs.sort_by_key(|r| (r.start, r.period));
    runs
}

/// All placements `p·uᵐ·s` inside runs with `m >= min_exponent`.
///
/// Every rotation of a run's period that starts at an integer offset inside the
/// run is reported, with `m` the largest exponent fitting from that offset.
/// Output is sorted by `(prefix_len, shortlex base, exponent)`.
pub fn find_power_factorizations(w: &FreeWord, min_exponent: usize) -> Vec<PowerFactorization> {
    let min_exponent = min_exponent.max(1);
    let mut out = Vec::new();
    for run in find_runs(w) {
        for offset in run.start..=run.end - run.period {
            let exponent = (run.end - offset) / run.period;
            if exponent < min_exponent {
                break;
            }
            out.push(PowerFactorization {
                prefix_len: offset,
                base: w.slice(offset..offset + run.period),
                exponent,
                word: w.clone(),
            });
        }
    }
    out.sort_by(|a, b| {
        a.prefix_len
            .cmp(&b.prefix_len)
            .then_with(|| a.base.shortlex_cmp(&b.base))
            .then_with(|| a.exponent.cmp(&b.exponent))
    });
    out.dedup_by(|a, b| a.prefix_len == b.prefix_len && a.base == b.base && a.exponent == b.exponent);
    out
}

/// True iff no factor of `w` is a `p`-th power of a non-empty word.
pub fn is_power_free(w: &FreeWord, p: usize) -> bool {
    let p = p.max(1);
    find_runs(w).iter().all(|r| r.len() < p * r.period)
}
