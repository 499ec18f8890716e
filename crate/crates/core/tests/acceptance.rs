//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//! Every criterion is exact; the wall-clock limits are part of the verdict.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use residue_runs::arith::odd_prime_powers_up_to;
use residue_runs::cli::{lemma_check, run_sweep, Battery, Exit, SweepConfig};
use residue_runs::run_counts::{RunCounts, RunKind};
use residue_runs::sums::{QuadrupleSums, TripleSums};
use residue_runs::{
    bounds_check, brute_runs, brute_runs_both, brute_two_squares, decompose_q, existence_check,
    make_field, quadruples_closed, triples_closed, CharTable, FieldCtx, DEFAULT_CAPACITY,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn table(p: u64, d: u32) -> Result<CharTable, String> {
    CharTable::build(&make_field(p, d).map_err(err)?).map_err(err)
}

fn golden_triples() -> Outcome {
    // (p, d, M, N)
    let golden: [(u64, u32, u64, u64); 16] = [
        (7, 1, 0, 0),
        (23, 1, 2, 2),
        (3, 1, 0, 0),
        (11, 1, 1, 1),
        (19, 1, 2, 2),
        (5, 1, 0, 0),
        (13, 1, 0, 2),
        (29, 1, 4, 2),
        (5, 3, 12, 18),
        (17, 1, 0, 2),
        (5, 2, 2, 2),
        (13, 2, 18, 22),
        (17, 2, 38, 32),
        (3, 2, 0, 0),
        (7, 2, 6, 4),
        (3, 4, 6, 12),
    ];
    let mut bad = Vec::new();
    for (p, d, m, n) in golden {
        let want = RunCounts {
            squares: m,
            nonsquares: n,
        };
        let closed = triples_closed(p, d).map_err(err)?.counts;
        let brute = brute_runs_both(&table(p, d)?, 3).map_err(err)?;
        if closed != want || brute != want {
            bad.push(format!(
                "q={}: want {m}/{n}, closed {}/{}, brute {}/{}",
                p.pow(d),
                closed.squares,
                closed.nonsquares,
                brute.squares,
                brute.nonsquares
            ));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn golden_quadruples() -> Outcome {
    let golden: [(u32, u64, u64); 6] = [
        (1, 0, 0),
        (2, 1, 0),
        (3, 16, 16),
        (4, 41, 36),
        (5, 200, 200),
        (6, 901, 1020),
    ];
    let mut bad = Vec::new();
    for (d, m, n) in golden {
        let want = RunCounts {
            squares: m,
            nonsquares: n,
        };
        let closed = quadruples_closed(d).map_err(err)?.counts;
        let brute = brute_runs_both(&table(5, d)?, 4).map_err(err)?;
        if closed != want || brute != want {
            bad.push(format!(
                "d={d}: want {m}/{n}, closed {}/{}, brute {}/{}",
                closed.squares, closed.nonsquares, brute.squares, brute.nonsquares
            ));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn golden_decompositions() -> Outcome {
    let golden: [(u64, u32, i64); 11] = [
        (5, 1, 1),
        (13, 1, -3),
        (29, 1, 5),
        (5, 3, -11),
        (17, 1, 1),
        (5, 2, -3),
        (13, 2, 5),
        (17, 2, -15),
        (5, 4, -7),
        (5, 5, 41),
        (5, 6, 117),
    ];
    let mut bad = Vec::new();
    for (p, d, s) in golden {
        let lifted = decompose_q(p, d).map_err(err)?;
        let brute = brute_two_squares(p, d).map_err(err)?;
        if lifted.s != s || !lifted.holds() || lifted != brute {
            bad.push(format!(
                "q={}: want s={s}, lifted {lifted:?}, brute {brute:?}",
                p.pow(d)
            ));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

const SWEEP_MAX_Q: u64 = 50_000;

fn oracle_sweep() -> Outcome {
    let outcome = run_sweep(&SweepConfig {
        max_q: SWEEP_MAX_Q,
        lengths: vec![3],
        include_closed: true,
        jobs: 0,
        capacity: DEFAULT_CAPACITY,
    })
    .map_err(err)?;
    let expected = odd_prime_powers_up_to(SWEEP_MAX_Q).len() as u64;
    let s = &outcome.summary;
    ensure(
        s.total == expected && s.matches == expected && s.mismatches == 0 && s.errors == 0,
        || outcome.summary_line(),
    )?;
    ensure(outcome.exit() == Exit::Ok, || "sweep exit is not 0".into())?;

    let mut tampered = outcome.clone();
    tampered.summary.mismatches = 1;
    ensure(tampered.exit() == Exit::Mismatch, || {
        "a mismatch does not exit 1".into()
    })?;

    let status = Command::new(env!("CARGO_BIN_EXE_residue-runs"))
        .args([
            "sweep",
            "--max-q",
            &SWEEP_MAX_Q.to_string(),
            "--len",
            "3",
            "--format",
            "csv",
        ])
        .env_remove("RESIDUE_RUNS_CAPACITY")
        .output()
        .map_err(err)?;
    ensure(status.status.code() == Some(0), || {
        format!("cli sweep exited {:?}", status.status)
    })?;
    let rows = String::from_utf8_lossy(&status.stdout).lines().count() as u64;
    ensure(rows == expected + 1, || {
        format!("cli sweep printed {rows} lines")
    })
}

/// Fields above the exhaustive limit for the sampled BEW check.
const BEW_LARGE: [(u64, u32); 10] = [
    (131, 1),
    (3, 5),
    (7, 3),
    (5, 4),
    (29, 2),
    (1009, 1),
    (11, 3),
    (13, 3),
    (3, 7),
    (17, 3),
];

fn lemma_batteries() -> Outcome {
    let mut bad = Vec::new();
    let mut run = |p: u64, d: u32, which: Battery| -> Outcome {
        let report = lemma_check(p, d, which, DEFAULT_CAPACITY).map_err(err)?;
        if !report.pass() {
            bad.push(format!("{which:?} q={}", report.q));
        }
        Ok(())
    };
    for pp in odd_prime_powers_up_to(121) {
        run(pp.p, pp.d, Battery::Bew)?;
    }
    for (p, d) in BEW_LARGE {
        run(p, d, Battery::Bew)?;
    }
    for pp in odd_prime_powers_up_to(2_000) {
        run(pp.p, pp.d, Battery::Jacobsthal)?;
    }
    for d in 1..=6 {
        run(5, d, Battery::Quartic)?;
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

/// (p, d, s, S_i, T_i, J(-1)); s only matters when q ≡ 1 (mod 4)
type TripleCase = (u64, u32, i64, [i64; 3], [i64; 3], i64);

fn identity_battery() -> Outcome {
    let cases: [TripleCase; 5] = [
        (23, 1, 0, [0, 2, -2], [-2, -2, 0], 0),
        (11, 1, 0, [0, 0, 0], [0, 0, 0], 0),
        (13, 1, -3, [-2, 0, 0], [0, 0, -2], -6),
        (17, 1, 1, [-2, -2, -2], [-2, -2, -2], -2),
        (7, 2, -7, [-2, -2, -2], [-2, -2, -2], 14),
    ];
    let mut bad = Vec::new();
    for (p, d, s, si, ti, j) in cases {
        let got = TripleSums::compute(&table(p, d)?).map_err(err)?;
        if got.s != si || got.t != ti || got.j_minus_one != j {
            bad.push(format!("q={}: {got:?}", p.pow(d)));
        }
        if p.pow(d) % 4 == 1 && decompose_q(p, d).map_err(err)?.s != s {
            bad.push(format!("q={}: s", p.pow(d)));
        }
    }
    // (d, s, λ(2)) for q = 5^d
    for (d, s, l2) in [(2u32, -3i64, 1i64), (3, -11, -1), (4, -7, 1)] {
        let got = QuadrupleSums::compute(&table(5, d)?).map_err(err)?;
        let u = if d % 2 == 0 { -8 * s - 4 } else { 0 };
        let want = (-6 - 6 * l2, -10 - 8 * l2, u);
        let have = (got.s_total(), got.t_total(), got.u_total());
        if have != want {
            bad.push(format!("q=5^{d}: (S,T,U) = {have:?}, want {want:?}"));
        }
    }
    ensure(bad.is_empty(), || bad.join("; "))
}

fn bounds_and_existence() -> Outcome {
    let mut bad = Vec::new();
    let (mut n_equal, mut m_equal) = (Vec::new(), Vec::new());
    for pp in odd_prime_powers_up_to(SWEEP_MAX_Q) {
        let b = bounds_check(pp.p, pp.d).map_err(err)?;
        let e = existence_check(pp.p, pp.d).map_err(err)?;
        if !b.ok() || !e.consistent() {
            bad.push(pp.q);
        }
        if b.nonsquare_bound.equality {
            n_equal.push(pp.q);
        }
        if b.square_bound.equality {
            m_equal.push(pp.q);
        }
    }
    ensure(bad.is_empty(), || format!("failures at q = {bad:?}"))?;
    ensure(n_equal.contains(&9) && m_equal.contains(&81), || {
        format!("N equality at {n_equal:?}, M equality at {m_equal:?}")
    })
}

fn f25_structure() -> Outcome {
    // x² - 2 over F_5
    let f = FieldCtx::with_modulus(5, &[3, 0, 1], DEFAULT_CAPACITY).map_err(err)?;
    let t = CharTable::build(&f).map_err(err)?;
    let beta = f.generator();
    ensure(f.square(&beta) == f.constant(2), || "β² ≠ 2".into())?;
    ensure(f.order(&beta).map_err(err)? == 8, || {
        "β does not have order 8".into()
    })?;
    for (k, want) in [(1, 1), (-1, 1), (2, -1), (-2, -1)] {
        let x = f.add(&beta, &f.constant(k));
        ensure(t.lambda(&x) == want, || format!("λ(β + {k}) ≠ {want}"))?;
    }
    for a in 1..5 {
        let base = f.mul(&f.constant(a), &beta);
        let sq = (0..5)
            .filter(|&c| t.lambda(&f.add(&base, &f.constant(c))) == 1)
            .count();
        ensure(sq == 2, || format!("coset {a}β + F_5 has {sq} squares"))?;
    }
    let starts: Vec<u64> = (0..f.q())
        .filter(|&i| {
            let b = f.elem_from_index(i).unwrap();
            (0..4).all(|k| t.lambda(&f.add(&b, &f.constant(k))) == 1)
        })
        .collect();
    ensure(starts == [1], || {
        format!("square quadruples start at indices {starts:?}")
    })?;
    ensure(
        brute_runs(&t, 4, RunKind::Squares).map_err(err)? == 1,
        || "brute count ≠ 1".into(),
    )
}

fn modulus_invariance() -> Outcome {
    for (p, d) in [(5u64, 2u32), (3, 4), (7, 2)] {
        let a = FieldCtx::ranked(p, d, 0, DEFAULT_CAPACITY).map_err(err)?;
        let b = FieldCtx::ranked(p, d, 1, DEFAULT_CAPACITY).map_err(err)?;
        ensure(a.modulus() != b.modulus(), || {
            format!("({p},{d}): same modulus")
        })?;
        let (ta, tb) = (
            CharTable::build(&a).map_err(err)?,
            CharTable::build(&b).map_err(err)?,
        );
        ensure(ta.counts() == tb.counts(), || {
            format!("({p},{d}): square counts differ")
        })?;
        for len in 2..=(p.min(4) as u32) {
            let (ca, cb) = (
                brute_runs_both(&ta, len).map_err(err)?,
                brute_runs_both(&tb, len).map_err(err)?,
            );
            ensure(ca == cb, || {
                format!("({p},{d}) len {len}: {ca:?} vs {cb:?}")
            })?;
        }
    }
    Ok(())
}

struct Criterion {
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Outcome,
}

fn main() -> ExitCode {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            name: "golden triples",
            limit: secs(1),
            check: golden_triples,
        },
        Criterion {
            name: "golden quadruples",
            limit: secs(30),
            check: golden_quadruples,
        },
        Criterion {
            name: "golden decompositions",
            limit: secs(1),
            check: golden_decompositions,
        },
        Criterion {
            name: "oracle sweep q <= 50000",
            limit: secs(300),
            check: oracle_sweep,
        },
        Criterion {
            name: "lemma batteries",
            limit: None,
            check: lemma_batteries,
        },
        Criterion {
            name: "S/T/J and S/T/U identities",
            limit: None,
            check: identity_battery,
        },
        Criterion {
            name: "bounds and existence",
            limit: None,
            check: bounds_and_existence,
        },
        Criterion {
            name: "F_25 structure",
            limit: None,
            check: f25_structure,
        },
        Criterion {
            name: "modulus invariance",
            limit: None,
            check: modulus_invariance,
        },
    ];
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut result = (c.check)();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, c.limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(()) => println!(
                "criterion {}  PASS  {:<28} {:>9.2?}",
                i + 1,
                c.name,
                elapsed
            ),
            Err(why) => {
                failed += 1;
                println!(
                    "criterion {}  FAIL  {:<28} {:>9.2?}  {why}",
                    i + 1,
                    c.name,
                    elapsed
                );
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
