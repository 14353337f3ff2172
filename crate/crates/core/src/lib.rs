//! Exact computations for Temperley-Lieb algebras TL_n(a).

pub mod coeff;
pub mod complex;
pub mod diagram;
pub mod error;
pub mod homology;
pub mod induced;
pub mod jw;
pub mod linalg;
pub mod repro;
pub mod tlalg;

pub use coeff::{make_context, Integers, Param, ParamContext, PrimeField, Rationals, Ring, RingSpec, Theta};
pub use error::{Error, Result};

pub type Z = Integers;
pub type Q = Rationals;
pub type Fp = PrimeField;
pub type ZElement = tlalg::TLElement<Integers>;
pub type QElement = tlalg::TLElement<Rationals>;
pub type FpElement = tlalg::TLElement<PrimeField>;
