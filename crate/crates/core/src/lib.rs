//! Generalized Kostka polynomials and fermionic q-characters for affine `sl(r+1)`.

pub mod characters;
pub mod error;
pub mod kostka;
pub mod lattice;
pub mod oracles;
pub mod qseries;
pub mod verify;
pub mod weights;

pub use characters::{
    char_fusion_v, char_fusion_w, char_v_general, char_v_rect, char_w_general, char_w_rect,
    char_w_rect_translated, string_functions, Formula, StringFunction, WeightGradedCharacter,
};
pub use error::{Error, Result};
pub use kostka::{
    build_kostka_matrix, invert_unitriangular, kostka_matrix_pair, kostka_poly, KostkaMatrix, RectangleMultiset,
};
pub use oracles::{charge_kostka, cocharge_kostka, finite_char, lr_multiplicity, weyl_kac_char, SemistandardTableau};
pub use qseries::{
    eval_at_one, gaussian_binomial, inverse_pochhammer_series, q_pochhammer, LaurentPolynomial,
    PochhammerOrder, TruncatedSeries,
};
pub use weights::{PartitionShape, RankedWeight, RectangularSequence};
