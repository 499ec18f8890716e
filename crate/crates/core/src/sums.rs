//! Character sums over `F_q` evaluated from a [`CharTable`].
//!
//! Every sum is a full-field pass; excluded points are subtracted afterwards.
//! Products of shifted linear factors use multiplicativity of `λ`, so they
//! need only table lookups and index shifts.

use serde::Serialize;

use crate::arith::reduce_signed;
use crate::character::{lambda_minus_one, lambda_minus_two, lambda_two, CharTable};
use crate::error::{Error, Result};
use crate::field::FieldElem;
use crate::two_squares::decompose_q;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumResult {
    pub value: i64,
    /// Number of summands after exclusions.
    pub terms: u64,
    /// Canonical indices of the excluded points, sorted and distinct.
    pub excluded: Vec<u64>,
}

/// `Σ_{α ∉ excluded} λ(Π_j (α + shift_j))` for prime-subfield shifts.
pub fn sum_lambda_shifted(
    table: &CharTable,
    shifts: &[i64],
    excluded: &[FieldElem],
) -> Result<SumResult> {
    let ctx = table.ctx();
    if shifts.is_empty() {
        return Err(Error::Internal(
            "a shifted product needs at least one factor".into(),
        ));
    }
    if excluded.iter().any(|e| !ctx.contains(e)) {
        return Err(Error::ForeignElement);
    }
    let p = ctx.p();
    let ks: Vec<u64> = shifts.iter().map(|&k| reduce_signed(k, p)).collect();
    let term = |i: u64| -> i64 {
        ks.iter()
            .map(|&k| table.value(ctx.shift_index(i, k)) as i64)
            .product()
    };
    let mut value: i64 = 0;
    for base in (0..ctx.q()).step_by(p as usize) {
        for c in 0..p {
            value += term(base + c);
        }
    }
    let mut idx: Vec<u64> = excluded.iter().map(|e| ctx.index_of(e)).collect();
    idx.sort_unstable();
    idx.dedup();
    for &i in &idx {
        value -= term(i);
    }
    Ok(SumResult {
        value,
        terms: ctx.q() - idx.len() as u64,
        excluded: idx,
    })
}

/// Prime-subfield constants as elements, for exclusion sets.
pub fn constants(table: &CharTable, ks: &[i64]) -> Vec<FieldElem> {
    ks.iter().map(|&k| table.ctx().constant(k)).collect()
}

/// `Σ_α λ(α² + bα + c)` computed directly. Rejects `b² - 4c = 0`.
pub fn bew_sum(table: &CharTable, b: &FieldElem, c: &FieldElem) -> Result<i64> {
    let ctx = table.ctx();
    if !ctx.contains(b) || !ctx.contains(c) {
        return Err(Error::ForeignElement);
    }
    let disc = ctx.sub(&ctx.square(b), &ctx.mul(&ctx.constant(4), c));
    if disc.is_zero() {
        return Err(Error::ZeroDiscriminant);
    }
    if ctx.d() == 1 {
        let p = ctx.p() as u128;
        let (b, c) = (b.coeffs()[0] as u128, c.coeffs()[0] as u128);
        return Ok((0..p)
            .map(|a| table.value(((a * ((a + b) % p) + c) % p) as u64) as i64)
            .sum());
    }
    Ok(ctx
        .elements()
        .map(|a| {
            let f = ctx.add(&ctx.mul(&a, &ctx.add(&a, b)), c);
            table.lambda(&f) as i64
        })
        .sum())
}

/// The Jacobsthal sum `J(a) = Σ_x λ(x) λ(x² + a)`, by direct evaluation.
pub fn jacobsthal_direct(table: &CharTable, a: &FieldElem) -> Result<i64> {
    let ctx = table.ctx();
    if !ctx.contains(a) {
        return Err(Error::ForeignElement);
    }
    if ctx.d() == 1 {
        let p = ctx.p() as u128;
        let a = a.coeffs()[0] as u128;
        return Ok((1..p)
            .map(|x| (table.value(x as u64) * table.value(((x * x + a) % p) as u64)) as i64)
            .sum());
    }
    Ok(ctx
        .elements()
        .enumerate()
        .skip(1)
        .map(|(i, x)| {
            let f = ctx.add(&ctx.square(&x), a);
            (table.value(i as u64) * table.lambda(&f)) as i64
        })
        .sum())
}

/// Closed value of `J(a)` for a non-zero square `a`: `-2s` when `a` is a
/// fourth power, `2s` otherwise.
pub fn jacobsthal_closed(p: u64, d: u32, fourth_power: bool) -> Result<i64> {
    let s = decompose_q(p, d)?.s;
    Ok(if fourth_power { -2 * s } else { 2 * s })
}

/// Closed value of `J(-1)`: 0 for `q ≡ 3 (mod 4)`, `-2s` for `q ≡ 1 (mod 8)`
/// and `2s` for `q ≡ 5 (mod 8)`.
pub fn jacobsthal_minus_one_closed(p: u64, d: u32) -> Result<i64> {
    let q = crate::field::FieldParams::new(p, d)?.q();
    match q % 8 {
        3 | 7 => Ok(0),
        1 => jacobsthal_closed(p, d, true),
        _ => jacobsthal_closed(p, d, false),
    }
}

fn require_char_five(table: &CharTable) -> Result<()> {
    match table.ctx().p() {
        5 => Ok(()),
        actual => Err(Error::WrongCharacteristic {
            expected: 5,
            actual,
        }),
    }
}

/// `V = Σ_α λ(α(α-1)(α+1)(α+2))` over `F_{5^d}`.
pub fn quartic_sum(table: &CharTable) -> Result<i64> {
    require_char_five(table)?;
    Ok(sum_lambda_shifted(table, &[0, -1, 1, 2], &[])?.value)
}

/// Closed form of [`quartic_sum`]: `-2s - 1` for even `d`, `2s - 1` for odd `d`.
pub fn quartic_sum_closed(d: u32) -> Result<i64> {
    let s = decompose_q(5, d)?.s;
    Ok(if d.is_multiple_of(2) {
        -2 * s - 1
    } else {
        2 * s - 1
    })
}

/// Building blocks of the triple count, each summed over `α ≠ 0, ±1`.
///
/// `s = [λ(α), λ(α-1), λ(α+1)]`, `t = [λ(α(α-1)), λ(α(α+1)), λ(α²-1)]`,
/// plus the full Jacobsthal sum `J(-1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleSums {
    pub s: [i64; 3],
    pub t: [i64; 3],
    pub j_minus_one: i64,
}

impl TripleSums {
    pub fn compute(table: &CharTable) -> Result<Self> {
        let ex = constants(table, &[0, 1, -1]);
        let sum = |shifts: &[i64]| sum_lambda_shifted(table, shifts, &ex).map(|r| r.value);
        Ok(Self {
            s: [sum(&[0])?, sum(&[-1])?, sum(&[1])?],
            t: [sum(&[0, -1])?, sum(&[0, 1])?, sum(&[-1, 1])?],
            j_minus_one: jacobsthal_direct(table, &table.ctx().constant(-1))?,
        })
    }

    /// Values predicted from `λ(-1)`, `λ(2)`, `λ(-2)` and the closed `J(-1)`.
    pub fn predicted(p: u64, d: u32) -> Result<Self> {
        let q = crate::field::FieldParams::new(p, d)?.q();
        let (m1, two, m2) = (
            lambda_minus_one(q) as i64,
            lambda_two(q) as i64,
            lambda_minus_two(q) as i64,
        );
        Ok(Self {
            s: [-1 - m1, -m2 - m1, -1 - two],
            t: [-1 - two, -1 - two, -1 - m1],
            j_minus_one: jacobsthal_minus_one_closed(p, d)?,
        })
    }

    pub fn s_total(&self) -> i64 {
        self.s.iter().sum()
    }

    pub fn t_total(&self) -> i64 {
        self.t.iter().sum()
    }

    /// `8M` and `8N` assembled from the blocks.
    pub fn scaled_counts(&self, q: u64) -> (i64, i64) {
        let base = q as i64 - 3 + self.t_total();
        (
            base + self.s_total() + self.j_minus_one,
            base - self.s_total() - self.j_minus_one,
        )
    }
}

/// Building blocks of the quadruple count over `F_{5^d}`, each summed over
/// `α ≠ 0, ±1, -2`.
///
/// Linear factors are ordered `α-1, α, α+1, α+2`. `t` runs over the six
/// pairs in lexicographic order and `u[i]` is the product of all factors
/// except `[α+2, α+1, α, α-1][i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadrupleSums {
    pub s: [i64; 4],
    pub t: [i64; 6],
    pub u: [i64; 4],
    pub v: i64,
}

/// Closed values for [`QuadrupleSums`]; the individual `t` sums have none,
/// only their total does.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadruplePrediction {
    pub s: [i64; 4],
    pub s_total: i64,
    pub t_total: i64,
    pub u: [i64; 4],
    pub u_total: i64,
    pub v: i64,
}

const FACTORS: [i64; 4] = [-1, 0, 1, 2];

impl QuadrupleSums {
    pub fn compute(table: &CharTable) -> Result<Self> {
        require_char_five(table)?;
        let ex = constants(table, &[0, 1, -1, -2]);
        let sum = |shifts: &[i64]| sum_lambda_shifted(table, shifts, &ex).map(|r| r.value);
        let mut s = [0; 4];
        for (slot, &k) in s.iter_mut().zip(&FACTORS) {
            *slot = sum(&[k])?;
        }
        let mut t = [0; 6];
        let pairs = (0..4).flat_map(|i| (i + 1..4).map(move |j| [FACTORS[i], FACTORS[j]]));
        for (slot, pair) in t.iter_mut().zip(pairs) {
            *slot = sum(&pair)?;
        }
        let mut u = [0; 4];
        for (i, slot) in u.iter_mut().enumerate() {
            let omit = FACTORS[3 - i];
            let rest: Vec<i64> = FACTORS.iter().copied().filter(|&k| k != omit).collect();
            *slot = sum(&rest)?;
        }
        Ok(Self {
            s,
            t,
            u,
            v: quartic_sum(table)?,
        })
    }

    pub fn predicted(d: u32) -> Result<QuadruplePrediction> {
        let q = crate::field::FieldParams::new(5, d)?.q();
        let two = lambda_two(q) as i64;
        let s = decompose_q(5, d)?.s;
        let j_minus_one = jacobsthal_minus_one_closed(5, d)?;
        // 1 is always a fourth power
        let j_one = -2 * s;
        let s_i = [-1 - 2 * two, -2 - two, -2 - two, -1 - 2 * two];
        let u = [j_minus_one - 1, j_one - two, j_one - two, j_minus_one - 1];
        Ok(QuadruplePrediction {
            s: s_i,
            s_total: -6 - 6 * two,
            t_total: -10 - 8 * two,
            u,
            u_total: if d.is_multiple_of(2) { -8 * s - 4 } else { 0 },
            v: quartic_sum_closed(d)?,
        })
    }

    pub fn s_total(&self) -> i64 {
        self.s.iter().sum()
    }

    pub fn t_total(&self) -> i64 {
        self.t.iter().sum()
    }

    pub fn u_total(&self) -> i64 {
        self.u.iter().sum()
    }

    /// `16m` and `16n` assembled from the blocks.
    pub fn scaled_counts(&self, q: u64) -> (i64, i64) {
        let base = q as i64 - 4 + self.t_total() + self.v;
        let odd = self.s_total() + self.u_total();
        (base + odd, base - odd)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;

    fn table(p: u64, d: u32) -> CharTable {
        CharTable::build(&make_field(p, d).unwrap()).unwrap()
    }

    #[test]
    fn shifted_sums() {
        let t = table(13, 1);
        let all = sum_lambda_shifted(&t, &[0], &[]).unwrap();
        assert_eq!((all.value, all.terms), (0, 13));
        let s1 = sum_lambda_shifted(&t, &[0], &constants(&t, &[0, 1, -1])).unwrap();
        assert_eq!((s1.value, s1.terms, s1.excluded), (-2, 10, vec![0, 1, 12]));

        let t23 = table(23, 1);
        let t3 = sum_lambda_shifted(&t23, &[-1, 1], &constants(&t23, &[0, 1, -1])).unwrap();
        assert_eq!(t3.value, 0);
        assert!(sum_lambda_shifted(&t23, &[], &[]).is_err());
    }

    #[test]
    fn bew_examples() {
        let t7 = table(7, 1);
        let c = t7.ctx();
        assert_eq!(bew_sum(&t7, &c.zero(), &c.one()), Ok(-1));
        let t25 = table(5, 2);
        let c = t25.ctx();
        assert_eq!(bew_sum(&t25, &c.constant(-1), &c.zero()), Ok(-1));
        let t9 = table(3, 2);
        let c = t9.ctx();
        assert_eq!(
            bew_sum(&t9, &c.zero(), &c.zero()),
            Err(Error::ZeroDiscriminant)
        );
    }

    #[test]
    fn jacobsthal_examples() {
        let t5 = table(5, 1);
        assert_eq!(jacobsthal_direct(&t5, &t5.ctx().one()), Ok(-2));
        let t13 = table(13, 1);
        assert_eq!(jacobsthal_direct(&t13, &t13.ctx().constant(-1)), Ok(-6));
        let t11 = table(11, 1);
        for a in t11.ctx().elements() {
            assert_eq!(jacobsthal_direct(&t11, &a), Ok(0));
        }
        assert_eq!(jacobsthal_closed(13, 1, false), Ok(-6));
        assert_eq!(jacobsthal_closed(17, 1, true), Ok(-2));
        assert_eq!(jacobsthal_closed(7, 2, true), Ok(14));
        assert!(matches!(
            jacobsthal_closed(7, 1, true),
            Err(Error::WrongResidueClass { .. })
        ));
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(quartic_sum(&table(5, 1)), Ok(1));
        assert_eq!(quartic_sum(&table(5, 2)), Ok(5));
        assert_eq!(quartic_sum(&table(5, 3)), Ok(-23));
        assert_eq!(quartic_sum_closed(2), Ok(5));
        assert_eq!(
            quartic_sum(&table(7, 1)),
            Err(Error::WrongCharacteristic {
                expected: 5,
                actual: 7
            })
        );
    }

    #[test]
    fn triple_blocks_case_one() {
        let b = TripleSums::compute(&table(23, 1)).unwrap();
        assert_eq!(b.s, [0, 2, -2]);
        assert_eq!(b.t, [-2, -2, 0]);
        assert_eq!(b.j_minus_one, 0);
        assert_eq!(b, TripleSums::predicted(23, 1).unwrap());
        assert_eq!(b.scaled_counts(23), (16, 16));
    }

    #[test]
    fn quadruple_blocks() {
        for d in 1..=4 {
            let b = QuadrupleSums::compute(&table(5, d)).unwrap();
            let pr = QuadrupleSums::predicted(d).unwrap();
            assert_eq!(b.s, pr.s);
            assert_eq!(b.s_total(), pr.s_total);
            assert_eq!(b.t_total(), pr.t_total);
            assert_eq!(b.u, pr.u);
            assert_eq!(b.u_total(), pr.u_total);
            assert_eq!(b.v, pr.v);
        }
        assert!(matches!(
            QuadrupleSums::compute(&table(7, 1)),
            Err(Error::WrongCharacteristic { .. })
        ));
    }
}
