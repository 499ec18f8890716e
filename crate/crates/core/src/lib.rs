//! Runs of consecutive squares and non-squares in finite fields.
//!
//! The crate builds `F_{p^d}`, tabulates the quadratic character `λ`, and
//! counts runs `{β, β+1, …, β+ℓ-1}` that are all non-zero squares or all
//! non-squares, both by exhaustive enumeration and from closed forms:
//!
//! * triples for every odd `q`, split into five cases by `q mod 8` and `p mod 4`;
//! * quadruples for `q = 5^d`.
//!
//! The closed forms rest on character sums that are evaluated here directly
//! as well: the quadratic-polynomial sum, the Jacobsthal sum `J(a)` and its
//! two-squares evaluation, and a quartic sum in characteristic 5.
//!
//! ```
//! use residue_runs::{make_field, CharTable, brute_runs_both, triples_closed};
//!
//! let f = make_field(13, 2).unwrap();
//! let table = CharTable::build(&f).unwrap();
//! let brute = brute_runs_both(&table, 3).unwrap();
//! let closed = triples_closed(13, 2).unwrap();
//! assert_eq!((brute.squares, brute.nonsquares), (18, 22));
//! assert_eq!(brute, closed.counts);
//! ```

pub mod arith;
pub mod character;
pub mod cli;
pub mod error;
pub mod field;
mod poly;
pub mod run_counts;
pub mod sums;
pub mod two_squares;

pub use character::{lambda_euler, lambda_minus_one, lambda_minus_two, lambda_two, CharTable};
pub use error::{Error, Result};
pub use field::{
    is_irreducible, make_field, FieldCtx, FieldElem, FieldParams, ModulusPoly, DEFAULT_CAPACITY,
};
pub use run_counts::{
    bounds_check, brute_runs, brute_runs_both, count_report, existence_check, quadruples_closed,
    triples_closed, ClosedCase, CountMode, RunCountReport, RunCounts, RunKind,
};
pub use sums::{
    bew_sum, jacobsthal_closed, jacobsthal_direct, quartic_sum, quartic_sum_closed,
    sum_lambda_shifted, QuadrupleSums, SumResult, TripleSums,
};
pub use two_squares::{brute_two_squares, decompose_prime, decompose_q, TwoSquares};
