//! The chapters under `book/src`, compiled so their examples run as doctests.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}

#[doc = include_str!("../../../book/src/graphs.md")]
mod graphs {}

#[doc = include_str!("../../../book/src/morphisms.md")]
mod morphisms {}

#[doc = include_str!("../../../book/src/oracle.md")]
mod oracle {}

#[doc = include_str!("../../../book/src/recognizers.md")]
mod recognizers {}

#[doc = include_str!("../../../book/src/symmetry.md")]
mod symmetry {}

#[doc = include_str!("../../../book/src/reports.md")]
mod reports {}
