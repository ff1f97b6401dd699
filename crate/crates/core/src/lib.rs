//! Parity of the number of irreducible factors of binary Type I pentanomials
//! `x^m + x^(n+1) + x^n + x + 1` with even `n`.
//!
//! Four independent engines answer the same question:
//!
//! * [`swan_formulas::theorem_parity`]: closed-form congruence conditions on `(m, n)`.
//! * [`swan_formulas::newton_parity`]: discriminants mod 8 of auxiliary integer lifts,
//!   evaluated from Newton power sums without ever touching the roots.
//! * [`zlift::swan_parity`]: the exact integer discriminant of the monic lift, computed
//!   with a subresultant remainder sequence, fed through the Stickelberger-Swan law.
//! * [`factor_oracle::parity_of_factor_count`]: Berlekamp nullity over the binary field.
//!
//! ```
//! use pentaparity::{PentanomialParams, Parity};
//! use pentaparity::swan_formulas::theorem_parity;
//! use pentaparity::factor_oracle::parity_of_factor_count;
//!
//! let params = PentanomialParams::new(11, 4).unwrap();
//! let f = pentaparity::type1_pentanomial(params);
//! assert_eq!(theorem_parity(params).parity, Parity::Even);
//! assert_eq!(parity_of_factor_count(&f).unwrap().parity, Parity::Even);
//! ```

pub mod error;
pub mod factor_oracle;
pub mod gf2poly;
pub mod swan_formulas;
pub mod zlift;

pub use error::{Error, Result};
pub use gf2poly::{type1_pentanomial, Gf2Poly, PentanomialParams};
pub use zlift::{IntPoly, Method, Parity, ParityVerdict};
