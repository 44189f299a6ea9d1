//! The chapters of the book under `book/` are included here verbatim so
//! that `cargo test` compiles and runs every code snippet in the guide.
//! If a chapter drifts out of sync with the API, the doc-tests fail.

#[doc = include_str!("../../../book/src/statistics.md")]
pub mod statistics {}

#[doc = include_str!("../../../book/src/codes.md")]
pub mod codes {}

#[doc = include_str!("../../../book/src/bijections.md")]
pub mod bijections {}

#[doc = include_str!("../../../book/src/generating-functions.md")]
pub mod generating_functions {}
