//! Exact computational toolkit for string parametrizations of simple-root
//! words, term valuations on section rings, and the polytopes they cut out.
//!
//! Everything is computed over arbitrary-precision rationals; no floating
//! point appears anywhere. Supported root systems: A1-A4 and C2.

pub mod bott_samelson;
pub mod error;
pub mod hwmodule;
pub mod linalg;
pub mod nok;
pub mod poly_val;
pub mod polytope;
pub mod ratio;
pub mod rootdata;
pub mod sagbi;
pub mod strings;

pub use bott_samelson::{
    expand_product, geometric_valuation, matrix_coeff_poly, verify_main_theorem, SectionPoly,
    TheoremReport,
};
pub use error::{Error, Result};
pub use hwmodule::{build_hw_module, DualVector, HWModule, DEFAULT_DIM_CAP};
pub use nok::{
    degree_check, fibered_polytope, moment_body, nok_body, string_polytope, weight_valuation,
    DegreeReport, IsotypicData, NokBody, ValueSemigroup,
};
pub use poly_val::{GradedValue, MultiPoly, ValVector};
pub use polytope::{lattice_count, volume, Facet, RationalPolytope};
pub use ratio::Rat;
pub use rootdata::{Family, RootSystemSpec, Weight, WeylWord};
pub use sagbi::{
    degeneration_family, is_sagbi, semigroup_algebra, subduct, DegenerationFamily,
    GradedElement, SagbiReport, SemigroupAlgebra, SubductionTrace, TermValuation,
    ValuedGenerator,
};
pub use strings::{string_params, value_set, StringParams, ValueSet};
