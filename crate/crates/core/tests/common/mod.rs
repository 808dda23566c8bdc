#![allow(dead_code)]

use std::collections::HashSet;

use burnside_core::{FreeWord, Run};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn w(s: &str, rank: u32) -> FreeWord {
    FreeWord::parse(s, rank).unwrap()
}

/// Letters as text, uniformly among reduced words of exactly `len` letters.
pub fn random_reduced_text(rng: &mut TestRng, rank: u32, len: usize) -> String {
    let mut out: Vec<char> = Vec::with_capacity(len);
    while out.len() < len {
        let g = rng.gen_range(0..rank) as u8;
        let c = if rng.gen_bool(0.5) {
            (b'a' + g) as char
        } else {
            (b'A' + g) as char
        };
        if let Some(&last) = out.last() {
            if last != c && last.eq_ignore_ascii_case(&c) {
                continue;
            }
        }
        out.push(c);
    }
    out.into_iter().collect()
}

pub fn random_word(rng: &mut TestRng, rank: u32, max_len: usize) -> FreeWord {
    let len = rng.gen_range(0..=max_len);
    w(&random_reduced_text(rng, rank, len), rank)
}

pub fn random_nonempty_word(rng: &mut TestRng, rank: u32, max_len: usize) -> FreeWord {
    let len = rng.gen_range(1..=max_len.max(1));
    w(&random_reduced_text(rng, rank, len), rank)
}

/// A reduced word with planted powers: random pieces interleaved with `uᵐ`.
pub fn random_word_with_powers(rng: &mut TestRng, rank: u32, max_len: usize) -> FreeWord {
    loop {
        let mut text = String::new();
        let pieces = rng.gen_range(1..=3);
        for _ in 0..pieces {
            let filler = rng.gen_range(0..=3);
            text.push_str(&random_reduced_text(rng, rank, filler));
            let base_len = rng.gen_range(1..=3);
            let base = random_reduced_text(rng, rank, base_len);
            let m = rng.gen_range(1..=4);
            text.push_str(&base.repeat(m));
        }
        let word = w(&text, rank);
        if word.len() <= max_len {
            return word;
        }
    }
}

/// Every reduced word of length exactly `len` over `rank` generators.
pub fn all_reduced_words(rank: u32, len: usize) -> Vec<FreeWord> {
    let alphabet: Vec<char> = (0..rank as u8)
        .flat_map(|g| [(b'a' + g) as char, (b'A' + g) as char])
        .collect();
    let mut words: Vec<String> = vec![String::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for prefix in &words {
            for &c in &alphabet {
                if let Some(last) = prefix.chars().last() {
                    if last != c && last.eq_ignore_ascii_case(&c) {
                        continue;
                    }
                }
                let mut s = prefix.clone();
                s.push(c);
                next.push(s);
            }
        }
        words = next;
    }
    words.into_iter().map(|s| w(&s, rank)).collect()
}

fn has_period<T: Eq>(s: &[T], p: usize) -> bool {
    (p..s.len()).all(|i| s[i] == s[i - p])
}

fn smallest_period<T: Eq>(s: &[T]) -> usize {
    (1..=s.len()).find(|&p| has_period(s, p)).unwrap_or(s.len())
}

/// Cubic enumeration of maximal repetitions: every `(i, j, p)` with
/// `j − i ≥ 2p`, `p` the smallest period of `w[i..j)`, not extendable.
pub fn brute_force_runs(word: &FreeWord) -> Vec<Run> {
    let s = word.letters();
    let n = s.len();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 2..=n {
            let f = &s[i..j];
            let p = smallest_period(f);
            if j - i < 2 * p {
                continue;
            }
            let left_maximal = i == 0 || s[i - 1] != s[i - 1 + p];
            let right_maximal = j == n || s[j] != s[j - p];
            if left_maximal && right_maximal {
                out.push(Run { start: i, end: j, period: p });
            }
        }
    }
    out.sort_by_key(|r| (r.start, r.period));
    out
}

fn is_primitive<T: Eq>(u: &[T]) -> bool {
    let n = u.len();
    !(1..n).any(|d| n % d == 0 && has_period(u, d))
}

/// All `(prefix_len, u, m)` with `u` primitive, `u^m` at `prefix_len`, `m`
/// maximal to the right and `m ≥ min_exponent ≥ 2`.
pub fn brute_force_factorizations(word: &FreeWord, min_exponent: usize) -> HashSet<(usize, String, usize)> {
    let s = word.letters();
    let n = s.len();
    let mut out = HashSet::new();
    for i in 0..n {
        for len in 1..=(n - i) {
            let u = &s[i..i + len];
            if !is_primitive(u) {
                continue;
            }
            let mut m = 0;
            while i + (m + 1) * len <= n && &s[i + m * len..i + (m + 1) * len] == u {
                m += 1;
            }
            if m >= min_exponent {
                out.insert((i, word.slice(i..i + len).to_string(), m));
            }
        }
    }
    out
}

/// Axis vertices `p·uᵏ·(prefix of u)` and `p·u⁻ᵏ·(prefix of u⁻¹)` of length at
/// most `radius`, built by plain multiplication.
pub fn axis_ball(p: &FreeWord, u: &FreeWord, radius: usize) -> HashSet<FreeWord> {
    let mut out = HashSet::new();
    let reach = (radius + 2 * p.len()) / u.len() + 2;
    for dir in [u.clone(), u.invert()] {
        for k in 0..=reach {
            for j in 0..dir.len() {
                let tail = dir.slice(0..j);
                let x = FreeWord::product(p.rank(), [p, &dir.power(k as i64), &tail]).unwrap();
                if x.len() <= radius {
                    out.insert(x);
                }
            }
        }
    }
    out
}

/// Length of `[x, y] ∩ axis` by listing the vertices of the geodesic.
pub fn brute_force_geodesic_overlap(x: &FreeWord, y: &FreeWord, p: &FreeWord, u: &FreeWord) -> usize {
    let path = x.invert().multiply(y).unwrap();
    let vertices: Vec<FreeWord> = (0..=path.len())
        .map(|i| x.multiply(&path.slice(0..i)).unwrap())
        .collect();
    let radius = vertices.iter().map(FreeWord::len).max().unwrap_or(0);
    let ball = axis_ball(p, u, radius);
    let hits = vertices.iter().filter(|v| ball.contains(*v)).count();
    hits.saturating_sub(1)
}
