//! Elementary moves `p·uᵐ·s ↦ p·uᵐ⁻ⁿ·s` and their algebraic witnesses.
//!
//! A move is allowed when `m > n/2 − ξ`. Applying it is the same as left
//! multiplication by `v⁻ⁿ` with `v = p·u·p⁻¹`, which is what a [`Witness`]
//! records. [`verify_sequence`] replays a [`MoveSequence`] from scratch and
//! rebuilds the product of all witnesses, so any sequence it accepts certifies
//! that its end and start agree modulo the normal closure of n-th powers.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::repetition::{find_power_factorizations, PowerFactorization};
use crate::word::FreeWord;

/// Rank, odd exponent `n` and slack `ξ` of a move system.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BurnsideParams {
    rank: u32,
    n: u32,
    xi: Ratio<i64>,
}

impl BurnsideParams {
    pub fn new(rank: u32, n: u32, xi: Ratio<i64>) -> Result<BurnsideParams> {
        if !(2..=crate::word::MAX_RANK).contains(&rank) {
            return Err(Error::InvalidParams(format!("rank must be in 2..=26, got {rank}")));
        }
        if n < 3 || n % 2 == 0 {
            return Err(Error::InvalidParams(format!("n must be odd and >= 3, got {n}")));
        }
        if xi < Ratio::from_integer(0) {
            return Err(Error::InvalidParams(format!("xi must be >= 0, got {xi}")));
        }
        Ok(BurnsideParams { rank, n, xi })
    }

    /// The desk-scale regime `n = 5, ξ = 1`.
    pub fn desk(rank: u32) -> Result<BurnsideParams> {
        BurnsideParams::new(rank, 5, Ratio::from_integer(1))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn xi(&self) -> Ratio<i64> {
        self.xi
    }

    /// `n/2 − ξ`, exactly.
    pub fn threshold(&self) -> Ratio<i64> {
        Ratio::new(self.n as i64, 2) - self.xi
    }

    /// Whether `m > n/2 − ξ`.
    pub fn admits(&self, m: i64) -> bool {
        Ratio::from_integer(m) > self.threshold()
    }

    /// Whether `m ≥ n/2 − ξ` (the non-strict form used by the geometric condition).
    pub fn admits_geometric(&self, m: i64) -> bool {
        Ratio::from_integer(m) >= self.threshold()
    }
}

/// Parses `ξ` written as an integer, a decimal (`0.25`) or a fraction (`3/2`).
pub fn parse_xi(text: &str) -> Result<Ratio<i64>> {
    let bad = || Error::InvalidParams(format!("cannot parse xi from {text:?}"));
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num = i64::from_str(num.trim()).map_err(|_| bad())?;
        let den = i64::from_str(den.trim()).map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(num, den));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int = if int.is_empty() || int == "-" {
            0
        } else {
            i64::from_str(int).map_err(|_| bad())?.abs()
        };
        let den = 10i64.pow(frac.len() as u32);
        let frac = i64::from_str(frac).map_err(|_| bad())?;
        let value = Ratio::new(int * den + frac, den);
        return Ok(if negative { -value } else { value });
    }
    i64::from_str(text).map(Ratio::from_integer).map_err(|_| bad())
}

/// The conjugated power a move multiplies by: `(p·u·p⁻¹)^power`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Witness {
    pub conjugator: FreeWord,
    pub base: FreeWord,
    pub power: i64,
}

impl Witness {
    /// `v = p·u·p⁻¹`.
    pub fn element(&self) -> FreeWord {
        self.base
            .conjugate_by(&self.conjugator)
            .expect("witness parts share a rank")
    }

    /// `v^power`.
    pub fn relator(&self) -> FreeWord {
        self.element().power(self.power)
    }

    /// Whether `output = v^power · input` in `F_r`.
    pub fn certifies(&self, input: &FreeWord, output: &FreeWord) -> bool {
        self.relator()
            .multiply(input)
            .map(|w| &w == output)
            .unwrap_or(false)
    }
}

/// A move on a concrete word, together with the word it produces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryMove {
    pub factorization: PowerFactorization,
    pub n: u32,
    pub result: FreeWord,
}

impl ElementaryMove {
    pub fn input(&self) -> &FreeWord {
        &self.factorization.word
    }
}

fn check_admissible(f: &PowerFactorization, params: &BurnsideParams) -> Result<()> {
    if !params.admits(f.exponent as i64) {
        return Err(Error::BelowThreshold {
            exponent: f.exponent,
            threshold: params.threshold().to_string(),
        });
    }
    let (_, k) = f.base.primitive_root()?;
    if k != 1 {
        return Err(Error::InvalidFactorization(format!(
            "base {} is a proper power",
            f.base
        )));
    }
    Ok(())
}

/// `p·u^(m−n)·s`, reduced. Does not check the threshold.
fn raw_result(f: &PowerFactorization, n: u32) -> FreeWord {
    let middle = f.base.power(f.exponent as i64 - n as i64);
    FreeWord::product(f.word.rank(), [&f.prefix(), &middle, &f.suffix()])
        .expect("parts of one word share its rank")
}

/// Applies the move described by `f` to `w`.
///
/// Fails if `f` was computed for a different word, if its letters do not spell
/// `uᵐ`, or if `m` does not exceed the threshold. The witness identity is
/// checked before returning.
pub fn apply_move(
    w: &FreeWord,
    f: &PowerFactorization,
    params: &BurnsideParams,
) -> Result<(FreeWord, Witness)> {
    if &f.word != w {
        return Err(Error::StaleFactorization);
    }
    if w.rank() != params.rank() {
        return Err(Error::RankMismatch(w.rank(), params.rank()));
    }
    // re-validate the letters in case the factorization was assembled by hand
    PowerFactorization::new(w, f.prefix_len, &f.base, f.exponent)?;
    check_admissible(f, params)?;
    let output = raw_result(f, params.n());
    let witness = Witness {
        conjugator: f.prefix(),
        base: f.base.clone(),
        power: -(params.n() as i64),
    };
    if !witness.certifies(w, &output) {
        return Err(Error::WitnessMismatch {
            expected: output.to_string(),
            actual: witness.relator().multiply(w)?.to_string(),
        });
    }
    Ok((output, witness))
}

/// All moves available on `w`, ordered by resulting length, then position,
/// then base (letter order), then exponent.
pub fn enumerate_moves(w: &FreeWord, params: &BurnsideParams) -> Vec<ElementaryMove> {
    let min_exponent = (1..=w.len() + 1)
        .find(|&m| params.admits(m as i64))
        .unwrap_or(w.len() + 1);
    let mut moves: Vec<ElementaryMove> = find_power_factorizations(w, min_exponent)
        .into_par_iter()
        .map(|factorization| {
            let result = raw_result(&factorization, params.n());
            ElementaryMove {
                factorization,
                n: params.n(),
                result,
            }
        })
        .collect();
    moves.sort_by(move_order);
    moves
}

pub(crate) fn move_order(a: &ElementaryMove, b: &ElementaryMove) -> std::cmp::Ordering {
    a.result
        .len()
        .cmp(&b.result.len())
        .then_with(|| a.factorization.prefix_len.cmp(&b.factorization.prefix_len))
        .then_with(|| a.factorization.base.letters().cmp(b.factorization.base.letters()))
        .then_with(|| a.factorization.exponent.cmp(&b.factorization.exponent))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub mv: ElementaryMove,
    pub witness: Witness,
}

/// A replayable chain of moves from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MoveSequence {
    pub start: FreeWord,
    pub steps: Vec<Step>,
    pub end: FreeWord,
}

impl MoveSequence {
    pub fn empty(start: FreeWord) -> MoveSequence {
        MoveSequence {
            end: start.clone(),
            start,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Appends the move `f` (which must be a factorization of the current end).
    pub fn push(&mut self, f: &PowerFactorization, params: &BurnsideParams) -> Result<()> {
        let (result, witness) = apply_move(&self.end, f, params)?;
        self.steps.push(Step {
            mv: ElementaryMove {
                factorization: f.clone(),
                n: params.n(),
                result: result.clone(),
            },
            witness,
        });
        self.end = result;
        Ok(())
    }

    /// `W = vₖ⁻ⁿ ⋯ v₁⁻ⁿ`, so that `W · start = end` for a sound sequence.
    pub fn certificate(&self) -> FreeWord {
        let rank = self.start.rank();
        self.steps.iter().fold(FreeWord::identity(rank), |acc, step| {
            step.witness
                .relator()
                .multiply(&acc)
                .expect("witnesses share the sequence rank")
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepFailure {
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for StepFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.index, self.reason)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub steps_checked: usize,
    pub failure: Option<StepFailure>,
    /// Product of all witnesses in application order, if every step passed.
    pub certificate: Option<FreeWord>,
    /// Whether `certificate · start` reduces to `end`.
    pub global_identity: bool,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.global_identity
    }
}

/// Replays `seq` step by step and audits every claim it makes.
pub fn verify_sequence(seq: &MoveSequence, params: &BurnsideParams) -> VerificationReport {
    let fail = |index: usize, reason: String, checked: usize| VerificationReport {
        steps_checked: checked,
        failure: Some(StepFailure { index, reason }),
        certificate: None,
        global_identity: false,
    };
    if seq.start.rank() != params.rank() {
        return fail(0, format!("start has rank {}, params rank {}", seq.start.rank(), params.rank()), 0);
    }
    let mut current = seq.start.clone();
    let mut product = FreeWord::identity(params.rank());
    for (index, step) in seq.steps.iter().enumerate() {
        let f = &step.mv.factorization;
        if f.word != current {
            return fail(index, format!("factorization is for {} but the current word is {}", f.word, current), index);
        }
        if let Err(e) = PowerFactorization::new(&current, f.prefix_len, &f.base, f.exponent) {
            return fail(index, e.to_string(), index);
        }
        if let Err(e) = check_admissible(f, params) {
            return fail(index, e.to_string(), index);
        }
        if step.mv.n != params.n() {
            return fail(index, format!("move uses n = {} but params have n = {}", step.mv.n, params.n()), index);
        }
        let expected = raw_result(f, params.n());
        if step.mv.result != expected {
            return fail(index, format!("recorded result {} differs from {}", step.mv.result, expected), index);
        }
        let w = &step.witness;
        if w.conjugator != f.prefix() || w.base != f.base || w.power != -(params.n() as i64) {
            return fail(index, "witness does not match the factorization".into(), index);
        }
        if !w.certifies(&current, &expected) {
            return fail(index, "output differs from v^-n times input".into(), index);
        }
        product = w.relator().multiply(&product).expect("same rank");
        current = expected;
    }
    if current != seq.end {
        return fail(seq.steps.len(), format!("replay ends at {} but the sequence claims {}", current, seq.end), seq.steps.len());
    }
    let global_identity = product.multiply(&seq.start).map(|w| w == seq.end).unwrap_or(false);
    VerificationReport {
        steps_checked: seq.steps.len(),
        failure: if global_identity {
            None
        } else {
            Some(StepFailure {
                index: seq.steps.len(),
                reason: "product of witnesses does not carry start to end".into(),
            })
        },
        certificate: Some(product),
        global_identity,
    }
}
