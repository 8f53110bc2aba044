//! Partitions, Schur functions in elementary symbols, Littlewood–Richardson
//! coefficients and weight-multiset characters of products of general linear
//! groups.

mod character;
mod elementary;
mod lr;
mod numerology;
mod partition;

pub use character::{
    block_irreducible_character, decompose_blockwise, irreducible_character, lambda_powers, schur_decompose,
    schur_of_character, sym_of_character, wedge_of_character, weyl_dim, weyl_dim_weight, CharacterError, GlCharacter,
};
pub use elementary::{schur_in_elementary, schur_vector_in_elementary, EPoly};
pub use lr::{lr_coefficient, schur_product, SchurVector};
pub use numerology::{n_value, rank_variety_numerology, NumerologyError};
pub use partition::{InvalidPartition, Partition};
