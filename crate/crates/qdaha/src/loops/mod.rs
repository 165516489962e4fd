//! Polynomial loops in `GL_n`: q-conjugation, the shift equation, Jordan
//! q-normal forms and q-centralizer data of constant loops.

pub mod centralizer;
pub mod matrix;
pub mod normal_form;
pub mod shift;
pub mod zpoly;

pub use centralizer::{
    component_weyl, constants_equivalent, q_centralizer_roots, reflection_subgroup, ComponentData,
};
pub use matrix::{matrix_from_json, matrix_to_json, q_conjugate, MatrixJson, MatrixLoop};
pub use normal_form::{
    check_j1, check_j2, conjugate_by, q_normal_form, verify_normal_form, QNormalForm,
};
pub use shift::{shift_operator, solve_shift_equation, ShiftSolution};
pub use zpoly::{q_int, ZPoly};
