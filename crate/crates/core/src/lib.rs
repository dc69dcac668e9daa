//! Classical Reed-Muller codes, the quantum (CSS) Reed-Muller codes built
//! from dual pairs of them, and the error-rate analysis used to compare
//! those codes.
//!
//! - [`gf2`]: bit vectors and matrices over GF(2), rank, duals, codeword
//!   enumeration, weight enumerators and the MacWilliams transform.
//! - [`reed_muller`]: RM(r, m) generators, nesting, duality, the one-level
//!   squaring construction and the parameter table.
//! - [`css_quantum`]: `[[n, k, d]]` codes with `C2 = C1⊥`, coset leaders and
//!   unnormalized encoded basis states.
//! - [`error_analysis`]: block and qubit error rates, Monte Carlo checks and
//!   performance curves.
//! - [`registry`]: named code families and block error models selectable at
//!   run time.
//! - [`verify`]: the structural self-check suite.
//!
//! ```
//! use qrm_core::css_quantum::css_from_rm;
//!
//! let code = css_from_rm(5, 10).unwrap();
//! assert_eq!(code.to_string(), "[[1024,252,32]]");
//! assert_eq!(code.t(), 15);
//! ```

pub mod css_quantum;
pub mod error;
pub mod error_analysis;
pub mod gf2;
pub mod reed_muller;
pub mod registry;
pub mod verify;

pub use error::{Error, Result};
