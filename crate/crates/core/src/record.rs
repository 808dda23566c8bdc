//! Text records for move sequences.
//!
//! A record stores only what is needed to replay a sequence: the start word and
//! `(prefix_len, base, exponent, n)` per step. Reading a record replays every
//! step, so a record that parses back into a [`MoveSequence`] is valid.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::moves::{parse_xi, verify_sequence, BurnsideParams, MoveSequence};
use crate::repetition::PowerFactorization;
use crate::word::FreeWord;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    pub prefix_len: usize,
    pub base: String,
    pub exponent: usize,
    pub n: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRecord {
    pub rank: u32,
    pub n: u32,
    pub xi: String,
    pub start: String,
    pub steps: Vec<StepRecord>,
    pub end: String,
    pub verified: bool,
}

impl SequenceRecord {
    /// Builds the record, running the verifier to fill in `verified`.
    pub fn new(seq: &MoveSequence, params: &BurnsideParams) -> SequenceRecord {
        SequenceRecord {
            rank: params.rank(),
            n: params.n(),
            xi: params.xi().to_string(),
            start: seq.start.to_string(),
            steps: seq
                .steps
                .iter()
                .map(|s| StepRecord {
                    prefix_len: s.mv.factorization.prefix_len,
                    base: s.mv.factorization.base.to_string(),
                    exponent: s.mv.factorization.exponent,
                    n: s.mv.n,
                })
                .collect(),
            end: seq.end.to_string(),
            verified: verify_sequence(seq, params).passed(),
        }
    }

    pub fn params(&self) -> Result<BurnsideParams> {
        BurnsideParams::new(self.rank, self.n, parse_xi(&self.xi)?)
    }

    /// Replays the record into a sequence; fails on any invalid step or if the
    /// replay does not end at the recorded end word.
    pub fn to_sequence(&self) -> Result<(MoveSequence, BurnsideParams)> {
        let params = self.params()?;
        let start = FreeWord::parse(&self.start, self.rank)?;
        let mut seq = MoveSequence::empty(start);
        for (i, step) in self.steps.iter().enumerate() {
            if step.n != params.n() {
                return Err(Error::BadRecord(format!("step {i} uses n = {}", step.n)));
            }
            let base = FreeWord::parse(&step.base, self.rank)?;
            let f = PowerFactorization::new(&seq.end, step.prefix_len, &base, step.exponent)?;
            seq.push(&f, &params)?;
        }
        let end = FreeWord::parse(&self.end, self.rank)?;
        if end != seq.end {
            return Err(Error::BadRecord(format!(
                "replay ends at {:?}, record says {:?}",
                seq.end.to_string(),
                self.end
            )));
        }
        Ok((seq, params))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }

    pub fn from_json(text: &str) -> Result<SequenceRecord> {
        serde_json::from_str(text).map_err(|e| Error::BadRecord(e.to_string()))
    }

    /// Multi-line human-readable form.
    pub fn to_human(&self) -> String {
        let show = |w: &str| if w.is_empty() { "1".to_string() } else { w.to_string() };
        let mut out = String::new();
        let _ = writeln!(out, "start: {}", show(&self.start));
        for (i, s) in self.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "  {}. prefix_len={} base={} exponent={} n={}",
                i + 1,
                s.prefix_len,
                s.base,
                s.exponent,
                s.n
            );
        }
        let _ = writeln!(out, "end: {}", show(&self.end));
        let _ = write!(out, "verified: {}", self.verified);
        out
    }
}
