//! Independent oracles for the example values and the oracle-equivalence
//! invariants. Everything on the oracle side here uses plain integer
//! arithmetic mod p or exhaustive search, never the crate's field code.

use residue_runs::arith::{odd_prime_powers_up_to, primes_up_to};
use residue_runs::run_counts::RunKind;
use residue_runs::{
    brute_runs, brute_runs_both, brute_two_squares, decompose_q, is_irreducible, jacobsthal_direct,
    make_field, quadruples_closed, quartic_sum, triples_closed, CharTable, FieldCtx,
    DEFAULT_CAPACITY,
};

/// λ on Z/p by listing squares.
fn legendre_table(p: u64) -> Vec<i64> {
    let mut t = vec![-1i64; p as usize];
    t[0] = 0;
    for x in 1..p {
        t[(x * x % p) as usize] = 1;
    }
    t
}

fn table(p: u64, d: u32) -> CharTable {
    CharTable::build(&make_field(p, d).unwrap()).unwrap()
}

#[test]
fn canonical_quadratic_modulus_over_f5() {
    // monic x² + bx + c ordered by c + 5b; irreducible iff b² - 4c is a non-square
    let leg = legendre_table(5);
    let first = (0..25u64)
        .map(|i| (i % 5, i / 5))
        .find(|&(c, b)| leg[((b * b + 5 * 5 - 4 * c) % 5) as usize] == -1)
        .unwrap();
    let f = make_field(5, 2).unwrap();
    assert_eq!(f.modulus().coeffs(), &[first.0, first.1, 1]);
}

/// Number of monic irreducibles of degree n over F_p: (1/n) Σ_{k | n} μ(k) p^{n/k}.
fn necklace_count(p: u64, n: u32) -> u64 {
    fn mobius(mut k: u32) -> i64 {
        let mut m = 1;
        let mut f = 2;
        while f * f <= k {
            if k.is_multiple_of(f) {
                k /= f;
                if k.is_multiple_of(f) {
                    return 0;
                }
                m = -m;
            }
            f += 1;
        }
        if k > 1 {
            m = -m;
        }
        m
    }
    let total: i64 = (1..=n)
        .filter(|k| n.is_multiple_of(*k))
        .map(|k| mobius(k) * p.pow(n / k) as i64)
        .sum();
    (total / n as i64) as u64
}

#[test]
fn irreducible_counts_match_necklace_formula() {
    for (p, n) in [
        (3u64, 1u32),
        (3, 2),
        (3, 3),
        (3, 4),
        (3, 6),
        (5, 2),
        (5, 3),
        (7, 2),
        (7, 3),
    ] {
        let q = p.pow(n);
        let count = (0..q)
            .filter(|&i| {
                let mut c: Vec<u64> = (0..n).map(|k| i / p.pow(k) % p).collect();
                c.push(1);
                is_irreducible(&c, p).unwrap()
            })
            .count() as u64;
        assert_eq!(count, necklace_count(p, n), "p = {p}, n = {n}");
    }
}

#[test]
fn quadratic_irreducibility_by_root_search() {
    for p in [3u64, 5, 7, 11, 13] {
        for c in 0..p {
            for b in 0..p {
                let has_root = (0..p).any(|x| (x * x + b * x + c) % p == 0);
                assert_eq!(is_irreducible(&[c, b, 1], p).unwrap(), !has_root);
            }
        }
    }
}

#[test]
fn prime_field_character_matches_legendre_table() {
    for p in primes_up_to(400).into_iter().filter(|&p| p > 2) {
        let t = table(p, 1);
        let leg = legendre_table(p);
        for i in 0..p {
            assert_eq!(t.value(i) as i64, leg[i as usize]);
        }
    }
}

#[test]
fn jacobsthal_examples_by_integer_sums() {
    let j = |p: u64, a: u64| -> i64 {
        let leg = legendre_table(p);
        (0..p)
            .map(|x| leg[(x * ((x * x + a) % p) % p) as usize])
            .sum()
    };
    assert_eq!(j(5, 1), -2);
    assert_eq!(j(13, 12), -6);
    for p in [5u64, 13, 17, 29, 37, 41] {
        let t = table(p, 1);
        for a in 0..p {
            let got = jacobsthal_direct(&t, &t.ctx().constant(a as i64)).unwrap();
            assert_eq!(got, j(p, a), "p = {p}, a = {a}");
        }
    }
}

#[test]
fn quartic_sum_over_f5_by_hand() {
    let leg = legendre_table(5);
    let v: i64 = (0..5u64)
        .map(|a| leg[(a * (a + 4) * (a + 1) * (a + 2) % 5) as usize])
        .sum();
    assert_eq!(v, 1);
    assert_eq!(quartic_sum(&table(5, 1)), Ok(v));
}

/// Runs counted on the integers mod p, start by start.
fn naive_runs(p: u64, len: u64, target: i64) -> u64 {
    let leg = legendre_table(p);
    (0..p)
        .filter(|&b| (0..len).all(|j| leg[((b + j) % p) as usize] == target))
        .count() as u64
}

#[test]
fn prime_field_runs_by_naive_scan() {
    assert_eq!(naive_runs(7, 2, 1), 1);
    for p in primes_up_to(300).into_iter().filter(|&p| p > 2) {
        let t = table(p, 1);
        for len in 2..=p.min(6) {
            assert_eq!(
                brute_runs(&t, len as u32, RunKind::Squares).unwrap(),
                naive_runs(p, len, 1)
            );
            assert_eq!(
                brute_runs(&t, len as u32, RunKind::NonSquares).unwrap(),
                naive_runs(p, len, -1)
            );
        }
    }
}

#[test]
fn extension_runs_by_element_arithmetic() {
    // count through field addition of the constant 1, not index shifts
    for (p, d) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2), (3, 4)] {
        let t = table(p, d);
        let f = t.ctx();
        let one = f.one();
        let mut counts = [0u64; 2];
        for b in f.elements() {
            let mut run = vec![b.clone()];
            for _ in 1..3 {
                let next = f.add(run.last().unwrap(), &one);
                run.push(next);
            }
            for (slot, target) in counts.iter_mut().zip([1i8, -1]) {
                if run.iter().all(|e| t.lambda(e) == target) {
                    *slot += 1;
                }
            }
        }
        let b = brute_runs_both(&t, 3).unwrap();
        assert_eq!([b.squares, b.nonsquares], counts, "q = {}", f.q());
    }
}

#[test]
fn triples_closed_equals_brute_force_to_1e5() {
    for pp in odd_prime_powers_up_to(100_000) {
        let t = table(pp.p, pp.d);
        let brute = brute_runs_both(&t, 3).unwrap();
        let closed = triples_closed(pp.p, pp.d).unwrap();
        assert_eq!(brute, closed.counts, "q = {}", pp.q);
        if pp.q % 4 == 3 {
            assert_eq!(brute.squares, brute.nonsquares, "q = {}", pp.q);
        }
    }
}

#[test]
fn quadruples_closed_equals_brute_force() {
    for d in 1..=6 {
        let t = table(5, d);
        let brute = brute_runs_both(&t, 4).unwrap();
        assert_eq!(brute, quadruples_closed(d).unwrap().counts, "d = {d}");
        if d % 2 == 1 {
            assert_eq!(brute.squares, brute.nonsquares);
        } else {
            assert!(brute.squares >= 1);
        }
    }
}

#[test]
fn two_squares_lift_equals_exhaustive_search_to_1e7() {
    let mut checked = 0;
    for pp in odd_prime_powers_up_to(10_000_000) {
        if pp.q % 4 != 1 {
            continue;
        }
        let lifted = decompose_q(pp.p, pp.d).unwrap();
        assert!(lifted.holds(), "{lifted:?}");
        assert_eq!(lifted, brute_two_squares(pp.p, pp.d).unwrap());
        checked += 1;
    }
    assert!(checked > 300_000);
}

#[test]
fn counts_do_not_depend_on_the_modulus() {
    for (p, d) in [
        (3u64, 2u32),
        (3, 3),
        (5, 2),
        (5, 3),
        (7, 2),
        (11, 2),
        (13, 2),
    ] {
        let a = CharTable::build(&FieldCtx::ranked(p, d, 0, DEFAULT_CAPACITY).unwrap()).unwrap();
        let b = CharTable::build(&FieldCtx::ranked(p, d, 1, DEFAULT_CAPACITY).unwrap()).unwrap();
        assert_ne!(a.ctx().modulus(), b.ctx().modulus());
        for len in 2..=(p.min(5) as u32) {
            assert_eq!(
                brute_runs_both(&a, len).unwrap(),
                brute_runs_both(&b, len).unwrap()
            );
        }
    }
}
