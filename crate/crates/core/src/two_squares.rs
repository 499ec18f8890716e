//! The normalized two-squares parameter `s` of a prime power `q ≡ 1 (mod 4)`.
//!
//! For `p ≡ 1 (mod 4)`, `s` is the unique integer with `q = s² + t²`,
//! `p ∤ s` and `s ≡ 1 (mod 4)`. It comes from lifting `p = a² + b²` to
//! `(a + bi)^d` in the Gaussian integers. For `p ≡ 3 (mod 4)` and even `d`
//! the convention is `s = (-1)^(d/2) p^(d/2)`, `t = 0`.

use serde::Serialize;

use crate::arith::{is_perfect_square, is_prime, pow_mod};
use crate::error::{Error, Result};
use crate::field::FieldParams;

/// Ceiling on `q` for [`brute_two_squares`].
pub const ORACLE_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoSquares {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    pub s: i64,
    pub t: u64,
}

/// `p = a² + b²` with `a` odd and positive, `b` even and non-negative.
///
/// A square root `x` of `-1` comes from `n^((p-1)/4)` for the least
/// non-residue `n`; the Euclidean descent on `(p, x)` then stops at the first
/// remainder below `√p`.
pub fn decompose_prime(p: u64) -> Result<(u64, u64)> {
    if !is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    if p % 4 != 1 {
        return Err(Error::WrongResidueClass {
            q: p,
            reason: "only primes p ≡ 1 (mod 4) are sums of two squares",
        });
    }
    let non_residue = (2..p)
        .find(|&n| pow_mod(n, (p - 1) / 2, p) == p - 1)
        .expect("a prime p ≡ 1 (mod 4) has a non-residue");
    let root = pow_mod(non_residue, (p - 1) / 4, p);
    let (mut a, mut b) = (p, root);
    while (b as u128) * (b as u128) > p as u128 {
        (a, b) = (b, a % b);
    }
    let other = is_perfect_square(p - b * b)
        .ok_or_else(|| Error::Internal(format!("Cornacchia descent failed for p = {p}")))?;
    Ok(if b % 2 == 1 { (b, other) } else { (other, b) })
}

fn gaussian_mul((a, b): (i128, i128), (c, d): (i128, i128)) -> Option<(i128, i128)> {
    let re = a.checked_mul(c)?.checked_sub(b.checked_mul(d)?)?;
    let im = a.checked_mul(d)?.checked_add(b.checked_mul(c)?)?;
    Some((re, im))
}

fn gaussian_pow(mut base: (i128, i128), mut e: u32) -> Option<(i128, i128)> {
    let mut acc = (1, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = gaussian_mul(acc, base)?;
        }
        e >>= 1;
        if e > 0 {
            base = gaussian_mul(base, base)?;
        }
    }
    Some(acc)
}

fn wrong_class(q: u64) -> Error {
    Error::WrongResidueClass {
        q,
        reason: "s is defined only for q ≡ 1 (mod 4)",
    }
}

/// The normalized `(s, t)` for `q = p^d`.
pub fn decompose_q(p: u64, d: u32) -> Result<TwoSquares> {
    let params = FieldParams::new(p, d)?;
    let q = params.q();
    if q % 4 != 1 {
        return Err(wrong_class(q));
    }
    if p % 4 == 3 {
        // q ≡ 1 (mod 4) forces d even here
        let root = p.pow(d / 2) as i64;
        let s = if (d / 2).is_multiple_of(2) {
            root
        } else {
            -root
        };
        return Ok(TwoSquares { q, p, d, s, t: 0 });
    }
    let (a, b) = decompose_prime(p)?;
    let (re, im) = gaussian_pow((a as i128, b as i128), d)
        .ok_or_else(|| Error::Internal(format!("Gaussian power overflow for {p}^{d}")))?;
    let (odd, even) = if re.rem_euclid(2) == 1 {
        (re, im)
    } else {
        (im, re)
    };
    let s = if odd.rem_euclid(4) == 1 { odd } else { -odd };
    let ts = TwoSquares {
        q,
        p,
        d,
        s: s as i64,
        t: even.unsigned_abs() as u64,
    };
    if ts.s.rem_euclid(p as i64) == 0 || !ts.holds() {
        return Err(Error::Internal(format!("bad Gaussian lift {ts:?}")));
    }
    Ok(ts)
}

/// Exhaustive search over odd `s ≡ 1 (mod 4)` with `|s| ≤ √q`, keeping
/// those with `q - s²` a perfect square (and `p ∤ s` when `p ≡ 1 (mod 4)`).
/// Exactly one candidate must survive.
pub fn brute_two_squares(p: u64, d: u32) -> Result<TwoSquares> {
    let params = FieldParams::new(p, d)?;
    let q = params.q();
    if q % 4 != 1 {
        return Err(wrong_class(q));
    }
    if q > ORACLE_LIMIT {
        return Err(Error::OracleRange(q));
    }
    let root = q.isqrt() as i64;
    let mut start = -root;
    while start.rem_euclid(4) != 1 {
        start += 1;
    }
    let found: Vec<TwoSquares> = (start..=root)
        .step_by(4)
        .filter(|s| p % 4 == 3 || s.rem_euclid(p as i64) != 0)
        .filter_map(|s| {
            let t = is_perfect_square(q - (s * s) as u64)?;
            Some(TwoSquares { q, p, d, s, t })
        })
        .collect();
    match found.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::NonUnique {
            q,
            count: found.len(),
        }),
    }
}

impl TwoSquares {
    /// All invariants: `s² + t² = q`, `s ≡ 1 (mod 4)`, and either `p ∤ s`
    /// with `|s| < √q`, or `t = 0` with `p ≡ 3 (mod 4)`.
    pub fn holds(&self) -> bool {
        let s2 = (self.s as i128) * (self.s as i128);
        let t2 = (self.t as i128) * (self.t as i128);
        let sum_ok = s2 + t2 == self.q as i128;
        let class_ok = self.s.rem_euclid(4) == 1;
        let shape_ok = if self.t == 0 {
            self.p % 4 == 3
        } else {
            self.s.rem_euclid(self.p as i64) != 0 && s2 < self.q as i128
        };
        sum_ok && class_ok && shape_ok
    }
}
