//! The quadratic character `λ` on `F_q`.

use std::io::{BufRead, Write};

use crate::arith::mul_mod;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, FieldJson};

/// `λ` for every element of one field, addressed by canonical index.
///
/// Since `λ(α) = 0` only at index 0, one bit per element (square or not)
/// determines the whole table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    ctx: FieldCtx,
    squares: Vec<u64>,
}

impl CharTable {
    /// Marks `β²` for every non-zero `β`.
    pub fn build(ctx: &FieldCtx) -> Result<Self> {
        let q = ctx.q();
        if q > ctx.capacity() {
            return Err(Error::CapacityExceeded {
                p: ctx.p(),
                d: ctx.d(),
                capacity: ctx.capacity(),
            });
        }
        let mut squares = vec![0u64; (q as usize).div_ceil(64)];
        let mut mark = |i: u64| squares[(i / 64) as usize] |= 1 << (i % 64);
        if ctx.d() == 1 {
            let p = ctx.p();
            // β and -β give the same square
            for b in 1..=(p - 1) / 2 {
                mark(mul_mod(b, b, p));
            }
        } else {
            for b in ctx.elements().skip(1) {
                mark(ctx.index_of(&ctx.square(&b)));
            }
        }
        Ok(Self {
            ctx: ctx.clone(),
            squares,
        })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn len(&self) -> u64 {
        self.ctx.q()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `λ` at a canonical index.
    #[inline]
    pub fn value(&self, index: u64) -> i8 {
        if index == 0 {
            0
        } else if self.squares[(index / 64) as usize] >> (index % 64) & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn lambda(&self, a: &FieldElem) -> i8 {
        self.value(self.ctx.index_of(a))
    }

    /// `(zeros, squares, non-squares)`.
    pub fn counts(&self) -> (u64, u64, u64) {
        let sq: u64 = self.squares.iter().map(|w| w.count_ones() as u64).sum();
        (1, sq, self.ctx.q() - 1 - sq)
    }

    pub fn values(&self) -> impl Iterator<Item = i8> + '_ {
        (0..self.ctx.q()).map(|i| self.value(i))
    }

    /// Whether `a` is a fourth power, i.e. `a^((q-1)/4) = 1`. Needs `q ≡ 1 (mod 4)`.
    pub fn is_fourth_power(&self, a: &FieldElem) -> Result<bool> {
        let q = self.ctx.q();
        if q % 4 != 1 {
            return Err(Error::WrongResidueClass {
                q,
                reason: "fourth powers are classified only for q ≡ 1 (mod 4)",
            });
        }
        if a.is_zero() {
            return Err(Error::ZeroArgument);
        }
        if self.lambda(a) == -1 {
            return Ok(false);
        }
        Ok(self.ctx.pow(a, (q - 1) / 4) == self.ctx.one())
    }

    /// Writes the cache form: the field JSON header on one line, then one
    /// signed byte per element in index order.
    pub fn write_cache<W: Write>(&self, mut w: W) -> Result<()> {
        let io = |e: std::io::Error| Error::BadCache(e.to_string());
        let header = serde_json::to_string(&self.ctx.to_json())
            .map_err(|e| Error::BadCache(e.to_string()))?;
        w.write_all(header.as_bytes()).map_err(io)?;
        w.write_all(b"\n").map_err(io)?;
        let bytes: Vec<u8> = self.values().map(|v| v as u8).collect();
        w.write_all(&bytes).map_err(io)?;
        Ok(())
    }

    /// Reads a cache written by [`CharTable::write_cache`], rejecting values
    /// that violate the table invariants.
    pub fn read_cache<R: BufRead>(mut r: R, capacity: u64) -> Result<Self> {
        let io = |e: std::io::Error| Error::BadCache(e.to_string());
        let mut header = String::new();
        r.read_line(&mut header).map_err(io)?;
        let json: FieldJson =
            serde_json::from_str(header.trim_end()).map_err(|e| Error::BadCache(e.to_string()))?;
        let ctx = json.into_field(capacity)?;
        let mut bytes = Vec::new();
        r.read_to_end(&mut bytes).map_err(io)?;
        if bytes.len() as u64 != ctx.q() {
            return Err(Error::BadCache(format!(
                "expected {} values, found {}",
                ctx.q(),
                bytes.len()
            )));
        }
        let mut squares = vec![0u64; bytes.len().div_ceil(64)];
        for (i, &b) in bytes.iter().enumerate() {
            match (i, b as i8) {
                (0, 0) => {}
                (0, _) => return Err(Error::BadCache("λ(0) must be 0".into())),
                (_, 1) => squares[i / 64] |= 1 << (i % 64),
                (_, -1) => {}
                (_, v) => return Err(Error::BadCache(format!("invalid value {v} at index {i}"))),
            }
        }
        let table = Self { ctx, squares };
        let (_, sq, nsq) = table.counts();
        if sq != nsq {
            return Err(Error::BadCache(
                "square and non-square counts differ".into(),
            ));
        }
        Ok(table)
    }
}

/// Euler's criterion: `λ(a) = a^((q-1)/2)` read as `±1`.
pub fn lambda_euler(ctx: &FieldCtx, a: &FieldElem) -> Result<i8> {
    if a.is_zero() {
        return Ok(0);
    }
    let r = ctx.pow(a, (ctx.q() - 1) / 2);
    if r == ctx.one() {
        Ok(1)
    } else if r == ctx.constant(-1) {
        Ok(-1)
    } else {
        Err(Error::Internal(format!(
            "a^((q-1)/2) = {:?} is neither 1 nor -1",
            r.coeffs()
        )))
    }
}

/// `λ(-1)` from `q mod 4`.
pub fn lambda_minus_one(q: u64) -> i8 {
    if q % 4 == 1 {
        1
    } else {
        -1
    }
}

/// `λ(2)` from `q mod 8`: `+1` iff `q ≡ ±1 (mod 8)`.
pub fn lambda_two(q: u64) -> i8 {
    match q % 8 {
        1 | 7 => 1,
        _ => -1,
    }
}

/// `λ(-2)` from `q mod 8`: `+1` iff `q ≡ 1, 3 (mod 8)`.
pub fn lambda_minus_two(q: u64) -> i8 {
    match q % 8 {
        1 | 3 => 1,
        _ => -1,
    }
}
