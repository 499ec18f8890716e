//! Finite fields `F_{p^d}` as quotients `F_p[x] / (f)`.
//!
//! Elements are coefficient vectors of length `d` in ascending degree. Every
//! element has a canonical index `sum c_i p^i` in `[0, q)`; index 0 is zero and
//! index 1 is the identity. Tables elsewhere in the crate are addressed by it.

use serde::{Deserialize, Serialize};

use crate::arith::{self, add_mod, inv_mod_prime, mul_mod, reduce_signed, sub_mod};
use crate::error::{Error, Result};
use crate::poly;

/// Default ceiling on `q` for fields that back a full table.
pub const DEFAULT_CAPACITY: u64 = 1 << 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldParams {
    p: u64,
    d: u32,
    q: u64,
}

impl FieldParams {
    /// Validates `p` and `d` and computes `q = p^d` exactly.
    pub fn new(p: u64, d: u32) -> Result<Self> {
        if p == 2 {
            return Err(Error::EvenCharacteristic);
        }
        if !arith::is_prime(p) {
            return Err(Error::NonPrime(p));
        }
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        let q = arith::checked_pow(p, d).ok_or(Error::CapacityExceeded {
            p,
            d,
            capacity: u64::MAX,
        })?;
        Ok(Self { p, d, q })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn q(&self) -> u64 {
        self.q
    }
}

/// Monic irreducible modulus, ascending coefficients including the leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModulusPoly {
    coeffs: Vec<u64>,
}

impl ModulusPoly {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// A field element. Only meaningful together with the [`FieldCtx`] that made it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    coeffs: Vec<u64>,
}

impl FieldElem {
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

/// An instantiated field. Immutable; arithmetic is a pure function of the
/// context and the operands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    params: FieldParams,
    modulus: ModulusPoly,
    capacity: u64,
}

/// Builds `F_{p^d}` with the canonical modulus and the default capacity.
pub fn make_field(p: u64, d: u32) -> Result<FieldCtx> {
    FieldCtx::ranked(p, d, 0, DEFAULT_CAPACITY)
}

/// Irreducibility over `F_p` of a monic polynomial given in ascending order.
///
/// Uses Rabin's test: `x^(p^n) = x (mod f)` and `gcd(x^(p^(n/r)) - x, f) = 1`
/// for every prime `r | n`.
pub fn is_irreducible(coeffs: &[u64], p: u64) -> Result<bool> {
    if p == 2 {
        return Err(Error::EvenCharacteristic);
    }
    if !arith::is_prime(p) {
        return Err(Error::NonPrime(p));
    }
    let f: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
    let n = match poly::degree(&f) {
        Some(n) if f[n] == 1 && n + 1 == f.len() => n,
        _ => return Err(Error::NotMonic),
    };
    if n == 0 {
        return Err(Error::DegreeZero);
    }
    let x = [0, 1];
    // frob[k] = x^(p^k) mod f
    let mut frob = vec![poly::rem(&x, &f, p)];
    for k in 0..n {
        let next = poly::pow_rem(&frob[k], p, &f, p);
        frob.push(next);
    }
    let x_mod_f = poly::rem(&x, &f, p);
    if frob[n] != x_mod_f {
        return Ok(false);
    }
    for r in arith::distinct_prime_factors(n as u64) {
        let h = poly::sub(&frob[n / r as usize], &x_mod_f, p);
        let g = poly::gcd(&f, &h, p);
        if poly::degree(&g) != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

impl FieldCtx {
    /// Builds `F_{p^d}` on the `rank`-th irreducible monic polynomial of
    /// degree `d` (rank 0 is the canonical modulus). Candidates are ordered
    /// by the integer `sum c_i p^i` of their non-leading coefficients.
    pub fn ranked(p: u64, d: u32, rank: usize, capacity: u64) -> Result<Self> {
        let params = FieldParams::new(p, d)?;
        if params.q > capacity {
            return Err(Error::CapacityExceeded { p, d, capacity });
        }
        let mut found = 0;
        // The candidate index space is q itself, so it never overflows.
        for idx in 0..params.q {
            let mut coeffs = digits(idx, p, d as usize);
            coeffs.push(1);
            if is_irreducible(&coeffs, p)? {
                if found == rank {
                    return Ok(Self {
                        params,
                        modulus: ModulusPoly { coeffs },
                        capacity,
                    });
                }
                found += 1;
            }
        }
        Err(Error::Internal(format!(
            "fewer than {} irreducible polynomials of degree {d} over F_{p}",
            rank + 1
        )))
    }

    /// Builds the field on an explicit modulus (ascending, including the leading 1).
    pub fn with_modulus(p: u64, modulus: &[u64], capacity: u64) -> Result<Self> {
        if !is_irreducible(modulus, p)? {
            return Err(Error::Reducible(p));
        }
        let d = (modulus.len() - 1) as u32;
        let params = FieldParams::new(p, d)?;
        if params.q > capacity {
            return Err(Error::CapacityExceeded { p, d, capacity });
        }
        Ok(Self {
            params,
            modulus: ModulusPoly {
                coeffs: modulus.iter().map(|&c| c % p).collect(),
            },
            capacity,
        })
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn modulus(&self) -> &ModulusPoly {
        &self.modulus
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn p(&self) -> u64 {
        self.params.p
    }

    pub fn d(&self) -> u32 {
        self.params.d
    }

    pub fn q(&self) -> u64 {
        self.params.q
    }

    fn dim(&self) -> usize {
        self.params.d as usize
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem {
            coeffs: vec![0; self.dim()],
        }
    }

    pub fn one(&self) -> FieldElem {
        self.constant(1)
    }

    /// The prime-subfield constant `k mod p`.
    pub fn constant(&self, k: i64) -> FieldElem {
        let mut coeffs = vec![0; self.dim()];
        coeffs[0] = reduce_signed(k, self.params.p);
        FieldElem { coeffs }
    }

    /// The class of `x` in the quotient, i.e. a root of the modulus.
    /// For `d = 1` this is the constant `-c_0`.
    pub fn generator(&self) -> FieldElem {
        if self.dim() == 1 {
            return FieldElem {
                coeffs: vec![(self.params.p - self.modulus.coeffs[0]) % self.params.p],
            };
        }
        let mut coeffs = vec![0; self.dim()];
        coeffs[1] = 1;
        FieldElem { coeffs }
    }

    /// Element from explicit coefficients; rejects wrong length or unreduced values.
    pub fn elem(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() != self.dim() || coeffs.iter().any(|&c| c >= self.params.p) {
            return Err(Error::ForeignElement);
        }
        Ok(FieldElem {
            coeffs: coeffs.to_vec(),
        })
    }

    pub fn contains(&self, a: &FieldElem) -> bool {
        a.coeffs.len() == self.dim() && a.coeffs.iter().all(|&c| c < self.params.p)
    }

    pub fn index_of(&self, a: &FieldElem) -> u64 {
        a.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| acc * self.params.p + c)
    }

    pub fn elem_from_index(&self, index: u64) -> Result<FieldElem> {
        if index >= self.params.q {
            return Err(Error::IndexOutOfRange {
                index,
                q: self.params.q,
            });
        }
        Ok(FieldElem {
            coeffs: digits(index, self.params.p, self.dim()),
        })
    }

    /// Iterates every element in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let p = self.params.p;
        let dim = self.dim();
        (0..self.params.q).map(move |i| FieldElem {
            coeffs: digits(i, p, dim),
        })
    }

    /// Index of `elem + k` for a prime-subfield constant `k` already reduced mod `p`.
    /// Adding a constant only touches the lowest digit.
    #[inline]
    pub fn shift_index(&self, index: u64, k: u64) -> u64 {
        let p = self.params.p;
        let c0 = index % p;
        index - c0 + add_mod(c0, k, p)
    }

    pub fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.params.p;
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| add_mod(x, y, p))
                .collect(),
        }
    }

    pub fn sub(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.params.p;
        FieldElem {
            coeffs: a
                .coeffs
                .iter()
                .zip(&b.coeffs)
                .map(|(&x, &y)| sub_mod(x, y, p))
                .collect(),
        }
    }

    pub fn neg(&self, a: &FieldElem) -> FieldElem {
        let p = self.params.p;
        FieldElem {
            coeffs: a.coeffs.iter().map(|&x| (p - x) % p).collect(),
        }
    }

    pub fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        let p = self.params.p;
        let n = self.dim();
        if n == 1 {
            // modulus x + c: reducing a constant is the identity
            return FieldElem {
                coeffs: vec![mul_mod(a.coeffs[0], b.coeffs[0], p)],
            };
        }
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        // x^n = -(c_0 + ... + c_{n-1} x^{n-1})
        let m = &self.modulus.coeffs;
        for top in (n..2 * n - 1).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (k, &mk) in m[..n].iter().enumerate() {
                let pos = top - n + k;
                prod[pos] = sub_mod(prod[pos], mul_mod(c, mk, p), p);
            }
        }
        prod.truncate(n);
        FieldElem { coeffs: prod }
    }

    pub fn square(&self, a: &FieldElem) -> FieldElem {
        self.mul(a, a)
    }

    /// Square-and-multiply.
    pub fn pow(&self, a: &FieldElem, mut e: u64) -> FieldElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// Inverse via `a^(q-2)`.
    pub fn inv(&self, a: &FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.dim() == 1 {
            return Ok(FieldElem {
                coeffs: vec![inv_mod_prime(a.coeffs[0], self.params.p)],
            });
        }
        Ok(self.pow(a, self.params.q - 2))
    }

    /// Multiplicative order of a non-zero element, by trial over divisors of `q - 1`.
    pub fn order(&self, a: &FieldElem) -> Result<u64> {
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        let mut ord = self.params.q - 1;
        for r in arith::distinct_prime_factors(ord) {
            while ord.is_multiple_of(r) && self.pow(a, ord / r) == self.one() {
                ord /= r;
            }
        }
        Ok(ord)
    }

    pub fn to_json(&self) -> FieldJson {
        FieldJson {
            p: self.params.p,
            d: self.params.d,
            q: self.params.q,
            modulus: self.modulus.coeffs.clone(),
        }
    }
}

/// Serialized form of a field: `{"p","d","q","modulus"}` with ascending
/// modulus coefficients including the leading 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub p: u64,
    pub d: u32,
    pub q: u64,
    pub modulus: Vec<u64>,
}

impl FieldJson {
    pub fn into_field(self, capacity: u64) -> Result<FieldCtx> {
        let ctx = FieldCtx::with_modulus(self.p, &self.modulus, capacity)?;
        if ctx.d() != self.d || ctx.q() != self.q {
            return Err(Error::BadCache(format!(
                "header q = {} / d = {} disagrees with p = {} and the modulus",
                self.q, self.d, self.p
            )));
        }
        Ok(ctx)
    }
}

fn digits(mut n: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(n % p);
        n /= p;
    }
    out
}
