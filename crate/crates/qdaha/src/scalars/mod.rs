//! Exact scalar layer: rationals, Laurent polynomials in q^{1/n}, t, v and the
//! torus coordinates, rational functions, and q-powers.

pub mod frac;
pub mod json;
mod parse;
pub mod poly;
pub mod qpower;
pub mod rational;
mod specialize;

pub use frac::{Frac, Scalar};
pub use parse::parse_frac;
pub use poly::{Mono, Poly};
pub use qpower::QPower;
pub use rational::{fmt_rational, parse_rational, rat, ratio, Rational};
pub use specialize::{specialize, Specialization};
