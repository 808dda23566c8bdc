//! Acceptance suite. Prints one `criterion N: PASS|FAIL` line per criterion and
//! exits non-zero when any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use burnside_core::*;
use common::*;
use num_rational::Ratio;
use rand::Rng;

const MU_VIOLATION: f64 = 1e-9;
const MU_SATURATION_TOL: f64 = 1e-9;
const CRITERION_1_TIME: Duration = Duration::from_secs(1);
const CRITERION_2_TIME: Duration = Duration::from_secs(10);
const CRITERION_4_TIME: Duration = Duration::from_secs(5);
const CRITERION_9_TIME: Duration = Duration::from_secs(5);
const MU_GRID: usize = 200;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))?;
    Ok(took)
}

fn desk() -> BurnsideParams {
    BurnsideParams::new(2, 5, Ratio::from_integer(1)).unwrap()
}

fn messed_up_power() -> FreeWord {
    w(&format!("{}{}", "aaaaaaab".repeat(2), "aab".repeat(3)), 2)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let phi = Endomorphism::fibonacci().orbit(&w("b", 2), 7).map_err(|e| e.to_string())?;
    let psi = Endomorphism::growing_powers().orbit(&w("d", 4), 2).map_err(|e| e.to_string())?;
    let took = within(start, CRITERION_1_TIME)?;
    let phi: Vec<String> = phi.iter().map(|x| x.to_string()).collect();
    let expected = ["b", "a", "ab", "aba", "abaab", "abaababa", "abaababaabaab", "abaababaabaababaababa"];
    ensure(phi == expected, || format!("phi orbit {phi:?}"))?;
    ensure(psi[1].to_string() == "c" && psi[2].to_string() == "Cbcd", || format!("psi orbit {psi:?}"))?;
    Ok(format!("phi^7(b) = {}, psi^2(d) = {}, {took:?}", phi[7], psi[2]))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let phi_limit = Endomorphism::fibonacci().limit_prefix(2, 2000).map_err(|e| e.to_string())?;
    let tm = thue_morse(4096);
    let phi_ok = is_power_free(&phi_limit, 4);
    let tm_ok = is_power_free(&tm, 3);
    let took = within(start, CRITERION_2_TIME)?;
    ensure(phi_ok, || "phi limit prefix has a fourth power".into())?;
    ensure(tm_ok, || "Thue-Morse prefix has a cube".into())?;
    Ok(format!("{took:?}"))
}

fn criterion_3() -> Outcome {
    let orbit = Endomorphism::growing_powers().orbit(&w("d", 4), 9).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for k in 2..=8 {
        let here = orbit[k].to_string();
        let next = orbit[k + 1].to_string();
        for m in 0..=here.len() {
            if here.contains(&format!("b{}", "a".repeat(m))) {
                ensure(next.contains(&format!("b{}", "a".repeat(m + 1))), || {
                    format!("psi^{k}(d) has b·a^{m} but psi^{}(d) lacks b·a^{}", k + 1, m + 1)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (k, m) pairs"))
}

/// The search result on the messed-up power, serialized.
fn criterion_4_output() -> String {
    match search_trivialization(&messed_up_power(), &desk(), SearchBudget::default()) {
        SearchOutcome::Found(seq) => SequenceRecord::new(&seq, &desk()).to_json(),
        other => format!("{other:?}"),
    }
}

fn criterion_4() -> Outcome {
    let params = desk();
    let start = Instant::now();
    let outcome = search_trivialization(&messed_up_power(), &params, SearchBudget::default());
    let took = within(start, CRITERION_4_TIME)?;
    let SearchOutcome::Found(seq) = outcome else {
        return Err(format!("no sequence: {outcome:?}"));
    };
    let bases: Vec<String> = seq.steps.iter().map(|s| s.mv.factorization.base.to_string()).collect();
    ensure(verify_sequence(&seq, &params).passed(), || "sequence fails verification".into())?;
    ensure(seq.end.is_empty(), || format!("ends at {}", seq.end))?;
    ensure(seq.len() == 4, || format!("found a verified {}-move sequence with bases {bases:?}", seq.len()))?;
    let expected = ["a", "a", "a", "aaaaaaab"];
    ensure(bases == expected, || format!("bases {bases:?}"))?;
    Ok(format!("{took:?}"))
}

fn random_relator_product(rng: &mut TestRng, n: u32) -> FreeWord {
    let mut acc = FreeWord::identity(2);
    for _ in 0..rng.gen_range(1..=3) {
        let u = random_nonempty_word(rng, 2, 2);
        let x = random_word(rng, 2, 3);
        let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
        let r = u.power(sign * n as i64).conjugate_by(&x).unwrap();
        acc = acc.multiply(&r).unwrap();
    }
    acc
}

fn criterion_5() -> Outcome {
    let params = desk();
    let budget = SearchBudget {
        max_moves: 6,
        max_len: 48,
        max_states: 20_000,
    };
    let mut rng = rng(505);
    let mut produced = 0;
    for i in 0..500 {
        let seed = random_relator_product(&mut rng, 5);
        if let SearchOutcome::Found(seq) = search_trivialization(&seed, &params, budget) {
            produced += 1;
            let report = verify_sequence(&seq, &params);
            ensure(report.passed(), || format!("seed {i} ({seed}): {:?}", report.failure))?;
            let w_start = report.certificate.unwrap().multiply(&seq.start).unwrap();
            ensure(w_start == seq.end, || format!("seed {i}: global identity"))?;
        }
    }
    ensure(produced > 0, || "no sequences produced".into())?;
    Ok(format!("{produced} of 500 seeds produced sequences, all verified"))
}

fn criterion_6() -> Outcome {
    // uniform over reduced words of length ≤ 12: weight lengths by 4·3^(L−1)
    let counts: Vec<u64> = (0..=12u32).map(|l| if l == 0 { 1 } else { 4 * 3u64.pow(l - 1) }).collect();
    let total: u64 = counts.iter().sum();
    let mut rng = rng(606);
    for _ in 0..10_000 {
        let mut pick = rng.gen_range(0..total);
        let len = counts
            .iter()
            .position(|&c| {
                if pick < c {
                    true
                } else {
                    pick -= c;
                    false
                }
            })
            .unwrap();
        let word = w(&random_reduced_text(&mut rng, 2, len), 2);
        ensure(find_runs(&word) == brute_force_runs(&word), || format!("runs of {word}"))?;
        for min in 2..=4 {
            let fast: std::collections::HashSet<_> = find_power_factorizations(&word, min)
                .into_iter()
                .map(|f| (f.prefix_len, f.base.to_string(), f.exponent))
                .collect();
            ensure(fast == brute_force_factorizations(&word, min), || format!("factorizations of {word}, min {min}"))?;
        }
    }
    Ok("10000 words".into())
}

/// One line per word: move bases and overlaps.
fn criterion_7_output() -> Result<String, String> {
    let params = desk();
    let one = FreeWord::identity(2);
    let mut rng = rng(707);
    let mut out = String::new();
    for i in 0..1000 {
        let word = if i % 2 == 0 {
            random_word_with_powers(&mut rng, 2, if i % 4 == 0 { 14 } else { 24 })
        } else {
            random_word(&mut rng, 2, 14)
        };
        let comb = combinatorial_move_bases(&word, &params);
        let geo = geometric_move_bases(&word, &params).map_err(|e| e.to_string())?;
        ensure(comb == geo, || format!("{word}: {comb:?} vs {geo:?}"))?;
        let mut line = format!("{word}:");
        for mv in enumerate_moves(&word, &params) {
            let f = &mv.factorization;
            let a = axis(&f.conjugated_base()).map_err(|e| e.to_string())?;
            let overlap = geodesic_axis_overlap(&one, &word, &a).map_err(|e| e.to_string())?;
            ensure(overlap >= f.span(), || format!("{word} at {}: overlap {overlap} < {}", f.prefix_len, f.span()))?;
            if word.len() <= 14 {
                let oracle = brute_force_geodesic_overlap(&one, &word, &a.conjugator, &a.core);
                ensure(overlap == oracle, || format!("{word}: overlap {overlap}, oracle {oracle}"))?;
            }
            line.push_str(&format!(" {}/{}/{}={}", f.prefix_len, f.base, f.exponent, overlap));
        }
        out.push_str(&line);
        out.push('\n');
    }
    Ok(out)
}

fn criterion_7() -> Outcome {
    let out = criterion_7_output()?;
    let moves: usize = out.lines().map(|l| l.split(' ').count() - 1).sum();
    Ok(format!("1000 words, {moves} moves"))
}

fn criterion_8() -> Outcome {
    let mut rng = rng(808);
    let one = FreeWord::identity(2);
    for _ in 0..10_000 {
        let p: Vec<FreeWord> = (0..4).map(|_| random_word(&mut rng, 2, 12)).collect();
        let d = |i: usize, j: usize| distance(&p[i], &p[j]).unwrap();
        let mut sums = [d(0, 1) + d(2, 3), d(0, 2) + d(1, 3), d(0, 3) + d(1, 2)];
        sums.sort();
        // the two largest sums agree on a tree
        ensure(sums[1] == sums[2], || format!("four-point failure on {p:?}"))?;
    }
    for _ in 0..10_000 {
        let x = random_word(&mut rng, 2, 16);
        let y = random_word(&mut rng, 2, 16);
        let g = gromov_product(&x, &y, &one).map_err(|e| e.to_string())?;
        ensure(g.doubled == 2 * x.common_prefix_len(&y) as i64, || format!("({x}|{y})_1 = {g}"))?;
    }
    Ok("10000 quadruples, 10000 pairs".into())
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    for r0 in [0.1, 1.0, 10.0] {
        let p = ConeParams::new(r0).map_err(|e| e.to_string())?;
        let report = check_mu_properties(&p, MU_GRID);
        ensure(report.checks.len() == 6, || format!("{} checks", report.checks.len()))?;
        for c in &report.checks {
            ensure(c.max_violation <= MU_VIOLATION, || format!("r0 = {r0}: {} violated by {:e}", c.name, c.max_violation))?;
            worst = worst.max(c.max_violation);
        }
        let sat = mu(p.saturation(), &p).map_err(|e| e.to_string())?;
        ensure((sat - 2.0 * r0).abs() <= MU_SATURATION_TOL, || format!("mu(pi sinh r0) = {sat}, r0 = {r0}"))?;
    }
    let took = within(start, CRITERION_9_TIME)?;
    Ok(format!("max violation {worst:.2e}, {took:?}"))
}

fn criterion_10() -> Outcome {
    let mut outputs = Vec::new();
    for threads in [1, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        let (four, seven) = pool.install(|| (criterion_4_output(), criterion_7_output()));
        outputs.push((threads, four, seven?));
    }
    let (_, four, seven) = &outputs[0];
    for (threads, f, s) in &outputs[1..] {
        ensure(f == four, || format!("criterion 4 output differs with {threads} threads"))?;
        ensure(s == seven, || format!("criterion 7 output differs with {threads} threads"))?;
    }
    Ok(format!("1, 2, 4 threads; {} + {} bytes identical", four.len(), seven.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, run) in criteria {
        let result = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("criterion {n}: PASS ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n}: FAIL ({detail})");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
