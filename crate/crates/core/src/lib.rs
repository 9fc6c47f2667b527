//! Exact computations for BiHom-pre-Lie and BiHom-Lie algebras over ℚ.
//!
//! Algebras are given by structure constants and a pair of commuting
//! invertible twist maps. Every identity is checked exactly on basis tuples
//! and reported through [`AxiomReport`].

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod cohomology;
pub mod deformation;
pub mod error;
pub mod json;
pub mod linalg;
pub mod operators;
pub mod report;
pub mod representation;

pub use algebra::{
    check_bihom_lie, check_prelie, is_lie_morphism, is_prelie_morphism, subadjacent, subadjacent_bracket,
    yau_twist, BiHomLieAlgebra, BiHomPreLieAlgebra, BilinearProduct, TwistPair,
};
pub use cohomology::{
    check_cochain, coboundary, coboundary_matrix, cochain_space, cohomology_dims, is_coboundary, is_cocycle,
    Cochain, CochainComplex, CochainSpace, CohomologyReport,
};
pub use deformation::{
    check_equivalence, check_lie_linear_deformation, check_linear_deformation, check_nijenhuis_lie,
    check_nijenhuis_prelie, deformed_product, nijenhuis_trivial_deformation, push_deformation_to_lie,
    search_nijenhuis, DeformationCandidate,
};
pub use error::{Error, Result};
pub use linalg::{Matrix, Rational, Vector};
pub use operators::{
    check_o_operator, check_rota_baxter, compatible_prelie_from_invertible_o, induced_prelie_from_o,
    induced_prelie_on_image, rb_induced_prelie, LinearOperator,
};
pub use report::{Axiom, AxiomReport, Violation};
pub use representation::{
    adjoint_rep, check_lie_rep, check_prelie_rep, direct_sum_rep, induced_lie_rep, lie_adjoint_rep,
    semidirect_lie, semidirect_prelie, tensor_rep, trivial_rep, twist_rep, zero_lie_rep, InducedVariant, LieRep,
    PreLieRep,
};
