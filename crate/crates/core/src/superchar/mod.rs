//! Weights and characters of the level-l highest weight modules attached to
//! generalized partitions, together with their q-specialisations and the
//! level-1 affine characters obtained by truncating the index set.
//!
//! Submodules:
//! - [`weights`]: the weight attached to a generalized partition, and its
//!   energy (the eigenvalue grading the q-character).
//! - [`character`]: the full character as a polynomial in two dual pairs of
//!   alphabets, plus the generating-product decomposition that justifies it.
//! - [`qcharacter`]: principal specialisation to powers of q.
//! - [`affine`]: level-1 characters for the truncated (m|n) index set, and
//!   the odd reflection walk between Borel subalgebras.

pub mod affine;
pub mod character;
pub mod qcharacter;
pub mod weights;

pub use affine::{
    affine_character, affine_hook_row, affine_product_coefficient, affine_sum_unshifted,
    integrable_weight, odd_reflect_chain, standard_simple_roots, AffineWeight,
    OddReflectionChain, OddReflectionStep,
};
pub use character::{
    fock_coefficients, fock_product, level1_character_direct, module_character, FockAlphabet,
};
pub use qcharacter::{
    hook_schur_qspec, q_character, q_character_closed_form_charge_one, q_identity_sides,
    qchar_coefficients,
};
pub use weights::{h_of, weight_of, Weight};
