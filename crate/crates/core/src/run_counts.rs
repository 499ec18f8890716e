//! Runs of consecutive squares or non-squares.
//!
//! A run of length `ℓ` is `{β, β+1, …, β+ℓ-1}`; in `F_{p^d}` it stays inside
//! the coset `β + F_p` and its elements are distinct exactly when `ℓ ≤ p`.
//! Counts are indexed by the starting element `β`. The centered triple
//! `{α-1, α, α+1}` and quadruple `{α-1, α, α+1, α+2}` correspond to
//! `β = α - 1`, so the counts agree with the centered convention.

use serde::{Serialize, Serializer};

use crate::character::CharTable;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldParams};
use crate::two_squares::decompose_q;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RunKind {
    Squares,
    NonSquares,
}

impl RunKind {
    fn target(self) -> i8 {
        match self {
            RunKind::Squares => 1,
            RunKind::NonSquares => -1,
        }
    }
}

/// Counts for both kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RunCounts {
    pub squares: u64,
    pub nonsquares: u64,
}

pub fn check_len(p: u64, len: u32) -> Result<()> {
    if len < 2 {
        return Err(Error::RunTooShort(len));
    }
    if len as u64 > p {
        return Err(Error::RunTooLong { len, p });
    }
    Ok(())
}

/// Number of `β` with `λ(β + j)` equal to the target for every `j < len`.
pub fn brute_runs(table: &CharTable, len: u32, kind: RunKind) -> Result<u64> {
    let ctx = table.ctx();
    check_len(ctx.p(), len)?;
    let target = kind.target();
    let mut total = 0;
    for_each_coset(ctx, |base| {
        total += runs_in_coset(table, base, ctx.p(), len, target);
    });
    Ok(total)
}

/// Both kinds in one call.
pub fn brute_runs_both(table: &CharTable, len: u32) -> Result<RunCounts> {
    Ok(RunCounts {
        squares: brute_runs(table, len, RunKind::Squares)?,
        nonsquares: brute_runs(table, len, RunKind::NonSquares)?,
    })
}

fn for_each_coset(ctx: &FieldCtx, mut f: impl FnMut(u64)) {
    let p = ctx.p();
    let mut base = 0;
    while base < ctx.q() {
        f(base);
        base += p;
    }
}

/// Cyclic scan of one coset `base + {0, …, p-1}`: a streak counter over
/// `p + len - 1` positions marks every start whose next `len` values match.
fn runs_in_coset(table: &CharTable, base: u64, p: u64, len: u32, target: i8) -> u64 {
    let len = len as u64;
    let mut streak = 0;
    let mut count = 0;
    for i in 0..p + len - 1 {
        if table.value(base + i % p) == target {
            streak += 1;
        } else {
            streak = 0;
        }
        if i + 1 >= len && streak >= len {
            count += 1;
        }
    }
    count
}

/// Which closed form applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedCase {
    /// `q ≡ 7 (mod 8)`
    Triple1,
    /// `q ≡ 3 (mod 8)`
    Triple2,
    /// `q ≡ 5 (mod 8)`
    Triple3,
    /// `q ≡ 1 (mod 8)`, `p ≡ 1 (mod 4)`
    Triple4,
    /// `q ≡ 1 (mod 8)`, `p ≡ 3 (mod 4)`
    Triple5,
    /// `q = 5^d`, `d` even
    QuadrupleEven,
    /// `q = 5^d`, `d` odd
    QuadrupleOdd,
}

impl ClosedCase {
    pub fn label(self) -> &'static str {
        match self {
            ClosedCase::Triple1 => "case1",
            ClosedCase::Triple2 => "case2",
            ClosedCase::Triple3 => "case3",
            ClosedCase::Triple4 => "case4",
            ClosedCase::Triple5 => "case5",
            ClosedCase::QuadrupleEven => "quad-even",
            ClosedCase::QuadrupleOdd => "quad-odd",
        }
    }

    pub fn for_triples(p: u64, q: u64) -> Self {
        match q % 8 {
            7 => ClosedCase::Triple1,
            3 => ClosedCase::Triple2,
            5 => ClosedCase::Triple3,
            _ if p % 4 == 1 => ClosedCase::Triple4,
            _ => ClosedCase::Triple5,
        }
    }
}

impl Serialize for ClosedCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Closed-form counts with the case and two-squares parameter used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClosedCounts {
    pub case: ClosedCase,
    pub s: Option<i64>,
    pub counts: RunCounts,
}

fn exact_div(num: i128, den: i128, q: u64) -> Result<u64> {
    if num % den != 0 || num < 0 {
        return Err(Error::NonIntegerResult { q });
    }
    u64::try_from(num / den).map_err(|_| Error::NonIntegerResult { q })
}

/// `(M_q, N_q)` from the five-case closed form.
pub fn triples_closed(p: u64, d: u32) -> Result<ClosedCounts> {
    let q = FieldParams::new(p, d)?.q();
    let case = ClosedCase::for_triples(p, q);
    let qi = q as i128;
    let (s, m_num, n_num) = match case {
        ClosedCase::Triple1 => (None, qi - 7, qi - 7),
        ClosedCase::Triple2 => (None, qi - 3, qi - 3),
        ClosedCase::Triple3 => {
            let s = decompose_q(p, d)?.s as i128;
            (Some(s), qi + 2 * s - 7, qi - 2 * s - 3)
        }
        // Case 5 differs from Case 4 only in where s comes from
        _ => {
            let s = decompose_q(p, d)?.s as i128;
            (Some(s), qi - 2 * s - 15, qi + 2 * s - 3)
        }
    };
    Ok(ClosedCounts {
        case,
        s: s.map(|s| s as i64),
        counts: RunCounts {
            squares: exact_div(m_num, 8, q)?,
            nonsquares: exact_div(n_num, 8, q)?,
        },
    })
}

/// `(m_q, n_q)` for `q = 5^d`.
pub fn quadruples_closed(d: u32) -> Result<ClosedCounts> {
    let ts = decompose_q(5, d)?;
    let (q, s) = (ts.q, ts.s as i128);
    let qi = q as i128;
    let (case, m_num, n_num) = if d.is_multiple_of(2) {
        (ClosedCase::QuadrupleEven, qi - 10 * s - 39, qi + 6 * s - 7)
    } else {
        (ClosedCase::QuadrupleOdd, qi + 2 * s - 7, qi + 2 * s - 7)
    };
    Ok(ClosedCounts {
        case,
        s: Some(ts.s),
        counts: RunCounts {
            squares: exact_div(m_num, 16, q)?,
            nonsquares: exact_div(n_num, 16, q)?,
        },
    })
}

pub fn has_closed_form(p: u64, len: u32) -> bool {
    len == 3 || (len == 4 && p == 5)
}

/// Closed form for runs of length `len`, when one exists.
pub fn closed_counts(p: u64, d: u32, len: u32) -> Result<ClosedCounts> {
    FieldParams::new(p, d)?;
    check_len(p, len)?;
    match len {
        3 => triples_closed(p, d),
        4 if p == 5 => quadruples_closed(d),
        _ => Err(Error::NoClosedForm { len, p }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMode {
    Brute,
    Closed,
    Both,
}

/// One `(q, ℓ)` result. Serializes as
/// `{"q","p","d","len","case","s","brute","closed","match"}`; absent parts are `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunCountReport {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    pub len: u32,
    pub case: Option<ClosedCase>,
    pub s: Option<i64>,
    pub brute: Option<RunCounts>,
    pub closed: Option<RunCounts>,
    #[serde(rename = "match")]
    pub matched: Option<bool>,
}

impl RunCountReport {
    /// Flat CSV row in the order of [`RunCountReport::CSV_HEADER`].
    pub fn csv_record(&self) -> Vec<String> {
        let opt = |v: Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        vec![
            self.q.to_string(),
            self.p.to_string(),
            self.d.to_string(),
            self.len.to_string(),
            self.case.map(|c| c.label().to_string()).unwrap_or_default(),
            self.s.map(|s| s.to_string()).unwrap_or_default(),
            opt(self.brute.map(|b| b.squares)),
            opt(self.brute.map(|b| b.nonsquares)),
            opt(self.closed.map(|c| c.squares)),
            opt(self.closed.map(|c| c.nonsquares)),
            self.matched.map(|m| m.to_string()).unwrap_or_default(),
        ]
    }

    pub const CSV_HEADER: [&'static str; 11] = [
        "q",
        "p",
        "d",
        "len",
        "case",
        "s",
        "brute_sq",
        "brute_nsq",
        "closed_sq",
        "closed_nsq",
        "match",
    ];
}

/// Brute force and/or closed form for one `(p, d, ℓ)`.
pub fn count_report(
    p: u64,
    d: u32,
    len: u32,
    mode: CountMode,
    capacity: u64,
) -> Result<RunCountReport> {
    let params = FieldParams::new(p, d)?;
    check_len(p, len)?;
    let closed = match mode {
        CountMode::Brute => None,
        _ => Some(closed_counts(p, d, len)?),
    };
    let brute = match mode {
        CountMode::Closed => None,
        _ => {
            let ctx = FieldCtx::ranked(p, d, 0, capacity)?;
            let table = CharTable::build(&ctx)?;
            Some(brute_runs_both(&table, len)?)
        }
    };
    let matched = match (brute, closed) {
        (Some(b), Some(c)) => Some(b == c.counts),
        _ => None,
    };
    Ok(RunCountReport {
        q: params.q(),
        p,
        d,
        len,
        case: closed.map(|c| c.case),
        s: closed.and_then(|c| c.s),
        brute,
        closed: closed.map(|c| c.counts),
        matched,
    })
}

/// One side of the lower-bound check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub holds: bool,
    pub equality: bool,
    pub predicted_equality: bool,
}

impl BoundCheck {
    pub fn classification_ok(&self) -> bool {
        self.equality == self.predicted_equality
    }

    /// Decides `8·count ≥ q - 2√q - offset` exactly: with
    /// `gap = q - offset - 8·count` the bound is `gap ≤ 2√q`, i.e. `gap ≤ 0`
    /// or `gap² ≤ 4q`, with equality iff `gap² = 4q`.
    fn evaluate(q: u64, count: u64, offset: i128, predicted_equality: bool) -> Self {
        let gap = q as i128 - offset - 8 * count as i128;
        let four_q = 4 * q as i128;
        let (holds, equality) = if gap <= 0 {
            (true, false)
        } else {
            let g2 = gap * gap;
            (g2 <= four_q, g2 == four_q)
        };
        Self {
            holds,
            equality,
            predicted_equality,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub q: u64,
    pub p: u64,
    pub d: u32,
    pub squares: u64,
    pub nonsquares: u64,
    /// `N_q ≥ (q - 2√q - 3) / 8`
    pub nonsquare_bound: BoundCheck,
    /// `M_q ≥ (q - 2√q - 15) / 8`
    pub square_bound: BoundCheck,
}

impl BoundsReport {
    pub fn ok(&self) -> bool {
        self.nonsquare_bound.holds
            && self.square_bound.holds
            && self.nonsquare_bound.classification_ok()
            && self.square_bound.classification_ok()
    }
}

/// Lower bounds on `N_q` and `M_q` with their equality classification:
/// equality for `N` iff `p ≡ 3 (mod 4)` and `d = 2m` with `m` odd, for `M`
/// iff `p ≡ 3 (mod 4)` and `4 | d`.
pub fn bounds_check(p: u64, d: u32) -> Result<BoundsReport> {
    let closed = triples_closed(p, d)?;
    let q = p.pow(d);
    let n_eq = p % 4 == 3 && d % 4 == 2;
    let m_eq = p % 4 == 3 && d.is_multiple_of(4);
    Ok(BoundsReport {
        q,
        p,
        d,
        squares: closed.counts.squares,
        nonsquares: closed.counts.nonsquares,
        nonsquare_bound: BoundCheck::evaluate(q, closed.counts.nonsquares, 3, n_eq),
        square_bound: BoundCheck::evaluate(q, closed.counts.squares, 15, m_eq),
    })
}

/// The `q` with no triple of consecutive non-zero squares.
pub const NO_SQUARE_TRIPLE: [u64; 6] = [3, 5, 7, 9, 13, 17];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    pub q: u64,
    pub squares: u64,
    pub nonsquares: u64,
    pub square_triple_exists: bool,
    pub nonsquare_triple_exists: bool,
    /// `q ∈ {3, 5, 7, 9, 13, 17}`
    pub square_exception: bool,
    /// `q ≤ 9`
    pub nonsquare_exception: bool,
}

impl ExistenceReport {
    /// A triple exists exactly outside the exception set, for both kinds.
    pub fn consistent(&self) -> bool {
        self.square_triple_exists != self.square_exception
            && self.nonsquare_triple_exists != self.nonsquare_exception
    }
}

pub fn existence_check(p: u64, d: u32) -> Result<ExistenceReport> {
    let closed = triples_closed(p, d)?;
    let q = p.pow(d);
    Ok(ExistenceReport {
        q,
        squares: closed.counts.squares,
        nonsquares: closed.counts.nonsquares,
        square_triple_exists: closed.counts.squares > 0,
        nonsquare_triple_exists: closed.counts.nonsquares > 0,
        square_exception: NO_SQUARE_TRIPLE.contains(&q),
        nonsquare_exception: q <= 9,
    })
}
