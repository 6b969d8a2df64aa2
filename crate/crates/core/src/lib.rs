//! Arbitrary-precision evaluation of the classical inscribed/circumscribed
//! polygon approximants of π and of the Chakrabarti–Hudson combination
//!
//! ```text
//! Π(n) = (n/30) · (32 sin(π/n) + 4 tan(π/n) − 3 sin(2π/n))
//! ```
//!
//! together with the machinery needed to certify, numerically, the two-sided
//! relative-error bound
//!
//! ```text
//! (π/n)⁶/105 < (Π(n) − π)/π < (π/n)⁶/104.7      for n ≥ 32.
//! ```
//!
//! The crate is `no_std` and only needs `alloc`. All IO, tables and the CLI
//! live in the `chpi` companion crate.
//!
//! Module map:
//!
//! * [`realnum`]: precision contexts, the [`Real`] scalar, an independent
//!   Machin-series π oracle and the trigonometric evaluation facade.
//! * [`polygon`]: perimeters and areas of regular polygons, closed form and
//!   Archimedean doubling.
//! * [`approximants`]: every approximation formula (Heron, Snell–Huygens,
//!   area combination, Chakrabarti–Hudson, continued-fraction convergents of
//!   `sin x / x`) and limit extrapolation of their error constants.
//! * [`series_brackets`]: series enclosures of `sin x`, `tan x`, `sin 2x`,
//!   their composition into an enclosure of `f(x)/π − 1`, and the theorem
//!   certifier.
//! * [`error_metrics`]: "precision" versus "correct significant digits".
#![cfg_attr(not(test), no_std)]
#![deny(missing_docs)]

extern crate alloc;

mod error;
mod poly;

pub mod approximants;
pub mod error_metrics;
pub mod polygon;
pub mod realnum;
pub mod series_brackets;

pub use crate::error::{Error, Result};
pub use crate::realnum::{make_context, reference_pi, trig, PrecisionContext, Real, TrigFn};
