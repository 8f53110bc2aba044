//! Chow rings of the ambient varieties: projective spaces, Grassmannians,
//! odd quadrics, products, projective/Grassmann/flag bundles, zero loci and
//! free generic bases.

mod expr;
mod ring;
mod variety;

pub use expr::{parse_class, ExprError};

pub use ring::{mono_string, named_terms, sum_classes, Class, Mono, Ring, RingError, Var};
pub use variety::{
    class_det, flag_bundle, generic_base, grassmann_bundle, grassmann_bundle_named, grassmannian, product,
    projective_bundle, projective_bundle_named, projective_space, quadric, schubert_class, zero_locus, ChowError,
    FlagFactor, Variety,
};
