//! The quantum torus `H_q(V, ω)`, its twisted group algebra `H[W]` and the
//! constructive simplicity certificate.
//!
//! Monomials multiply as `e^a e^b = q^{-ω(a,b)/2} e^{a+b}`. For `V = X ⊕ Y`
//! this gives `e^y e^x = q^{<x,y>} e^x e^y`.

mod element;
mod witness;

pub use element::{HElement, HWElement, QuantumTorus};
pub use witness::{simplicity_witness, verify as verify_witness, Witness, DEFAULT_SEARCH_BOUND};
