mod common;

use burnside_core::{FreeWord, Letter, Sign};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn word_strategy(rank: u32, max_len: usize) -> impl Strategy<Value = FreeWord> {
    proptest::collection::vec((1..=rank, any::<bool>()), 0..=max_len).prop_map(move |letters| {
        let letters = letters.into_iter().map(|(g, pos)| {
            Letter::new(g, if pos { Sign::Pos } else { Sign::Neg }, rank).unwrap()
        });
        FreeWord::reduce(letters, rank).unwrap()
    })
}

proptest! {
    #[test]
    fn group_axioms(a in word_strategy(3, 20), b in word_strategy(3, 20), c in word_strategy(3, 20)) {
        let one = FreeWord::identity(3);
        prop_assert_eq!(a.multiply(&b).unwrap().multiply(&c).unwrap(), a.multiply(&b.multiply(&c).unwrap()).unwrap());
        prop_assert_eq!(a.multiply(&one).unwrap(), a.clone());
        prop_assert_eq!(one.multiply(&a).unwrap(), a.clone());
        prop_assert!(a.multiply(&a.invert()).unwrap().is_empty());
        prop_assert!(a.multiply(&b).unwrap().len() <= a.len() + b.len());
    }

    #[test]
    fn powers(a in word_strategy(2, 12), k in -6i64..=6) {
        let mut acc = FreeWord::identity(2);
        let step = if k >= 0 { a.clone() } else { a.invert() };
        for _ in 0..k.abs() {
            acc = acc.multiply(&step).unwrap();
        }
        prop_assert_eq!(a.power(k), acc);
        prop_assert_eq!(a.power(-k), a.power(k).invert());
    }

    #[test]
    fn cyclic_decomposition_round_trips(a in word_strategy(3, 24)) {
        let d = a.cyclic_reduce();
        prop_assert!(d.core.is_cyclically_reduced());
        prop_assert_eq!(d.core.conjugate_by(&d.conjugator).unwrap(), a.clone());
        if !d.core.is_empty() {
            let (root, k) = d.core.primitive_root().unwrap();
            prop_assert_eq!(root.power(k as i64), d.core.clone());
            prop_assert_eq!(root.primitive_root().unwrap().1, 1);
        }
    }

    #[test]
    fn reduction_is_idempotent(a in word_strategy(2, 30)) {
        prop_assert_eq!(FreeWord::reduce(a.letters().iter().copied(), 2).unwrap(), a.clone());
        prop_assert_eq!(FreeWord::parse(&a.to_string(), 2).unwrap(), a);
    }
}

/// Reduces by deleting a random cancelling pair until none is left.
fn reduce_in_random_order(letters: &[Letter], rng: &mut TestRng) -> Vec<Letter> {
    let mut v = letters.to_vec();
    loop {
        let pairs: Vec<usize> = (0..v.len().saturating_sub(1))
            .filter(|&i| v[i].is_inverse_of(v[i + 1]))
            .collect();
        if pairs.is_empty() {
            return v;
        }
        let i = pairs[rng.gen_range(0..pairs.len())];
        v.drain(i..i + 2);
    }
}

#[test]
fn reduction_is_confluent() {
    let mut rng = rng(11);
    for _ in 0..2000 {
        let len = rng.gen_range(0..30);
        let letters: Vec<Letter> = (0..len)
            .map(|_| {
                let g = rng.gen_range(1..=2);
                let s = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                Letter::new(g, s, 2).unwrap()
            })
            .collect();
        let normal = FreeWord::reduce(letters.iter().copied(), 2).unwrap();
        for _ in 0..3 {
            assert_eq!(reduce_in_random_order(&letters, &mut rng), normal.letters());
        }
    }
}

#[test]
fn associativity_on_random_triples() {
    let mut rng = rng(1);
    for _ in 0..10_000 {
        let a = random_word(&mut rng, 2, 12);
        let b = random_word(&mut rng, 2, 12);
        let c = random_word(&mut rng, 2, 12);
        assert_eq!(
            a.multiply(&b).unwrap().multiply(&c).unwrap(),
            a.multiply(&b.multiply(&c).unwrap()).unwrap()
        );
    }
}

#[test]
fn inverse_law_on_random_words() {
    let mut rng = rng(2);
    for _ in 0..1000 {
        let a = random_word(&mut rng, 3, 20);
        assert!(a.multiply(&a.invert()).unwrap().is_empty());
        assert!(FreeWord::product(3, [&a, &a.invert()]).unwrap().is_empty());
    }
}

#[test]
fn core_is_a_shortest_conjugate() {
    let mut rng = rng(3);
    for _ in 0..1000 {
        let g = random_word(&mut rng, 2, 14);
        let core = g.cyclic_reduce().core;
        // conjugating by prefixes of g and of g⁻¹ reaches every rotation
        let mut shortest = g.len();
        for x in [g.clone(), g.invert()] {
            for i in 0..=x.len() {
                let c = g.conjugate_by(&x.slice(0..i).invert()).unwrap();
                shortest = shortest.min(c.len());
            }
        }
        assert_eq!(core.len(), shortest, "{g}");
        // and no conjugator of length at most |g| does better
        for _ in 0..20 {
            let x = random_word(&mut rng, 2, g.len());
            assert!(g.conjugate_by(&x).unwrap().len() >= core.len());
        }
    }
}

#[test]
fn primitive_roots_match_divisor_scan() {
    for len in 1..=8 {
        for word in all_reduced_words(2, len) {
            if !word.is_cyclically_reduced() {
                continue;
            }
            let letters = word.letters();
            let d = (1..=len)
                .find(|&d| len % d == 0 && (0..len).all(|i| letters[i] == letters[i % d]))
                .unwrap();
            let (root, k) = word.primitive_root().unwrap();
            assert_eq!((root.len(), k), (d, len / d), "{word}");
            assert_eq!(root.power(k as i64), word);
        }
    }
}
