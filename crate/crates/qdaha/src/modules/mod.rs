//! Weight modules `M_λ` on finite windows, isotropy groups `W^λ`, the
//! corrected dot-action, induced modules `Z_χ` and the W-invariants functor.

mod isotropy;
mod mlambda;
mod rep;
mod torus_point;
mod zchi;

pub use isotropy::IsotropyGroup;
pub use mlambda::{add_to, basis_vec, box_window, MLambda, ModVec, Window};
pub use rep::{mat_identity, mat_mul, IsoRep, Matrix};
pub use torus_point::{parse_point, TorusPoint};
pub use zchi::{add_z, dimension_bookkeeping, InducedModule, ZKey, ZVec};
