//! Cyclotomic linear codes over prime fields and their complete weight
//! enumerators.
//!
//! The pipeline: build a finite field GF(p^m) with precomputed discrete-log
//! and trace tables ([`field`]), partition its nonzero elements into
//! cyclotomic classes of order N and compute exact Gaussian periods
//! ([`cyclotomy`]), evaluate integer closed forms for the periods when
//! N is 3 or 4 ([`closed_form`]), and construct the trace code whose
//! defining set is a union of cyclotomic classes ([`codes`]). The complete
//! weight enumerator of that code is computed three independent ways —
//! exhaustive enumeration, the period-sum formula, and per-case closed
//! forms — which [`sweep`] cross-checks over every admissible parameter
//! set. [`character`] redoes the period computation with complex character
//! sums as a floating-point sanity check on the exact integer path.

pub mod character;
pub mod closed_form;
pub mod codes;
pub mod cwe;
pub mod cyclotomy;
pub mod error;
pub mod field;
pub mod sweep;

pub use error::{Error, Result};
pub use field::{FieldContext, FieldElement, FieldParams};
