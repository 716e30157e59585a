//! Exact unstable A¹-degrees of pointed rational functions over ℚ and 𝔽_p.
//!
//! A pointed rational function `f/g` (coprime, `deg f > deg g`) has an
//! unstable degree in `GW^u(k)`, presented globally by its Bézoutian and
//! locally at each rational root by a Newton matrix of principal-part
//! coefficients. The local degrees recombine into the global one through
//! the D-sum, whose unit correction is a duplicant.

pub mod bezout;
pub mod duplicant;
pub mod error;
pub mod field;
pub mod gw;
pub mod integer;
pub mod local_degree;
pub mod matrix;
pub mod poly;
pub mod sample;
pub mod sums;

pub use bezout::{bezoutian_coefficients, bezoutian_matrix, polynomial_degree_shape_check, unstable_degree};
pub use duplicant::{
    duplicant, duplicant_closed_form, elementary_symmetric, newton_basis_verify, sigma_matrix, SigmaMatrix,
};
pub use error::{Error, Result};
pub use field::{hilbert_symbol, is_square, legendre_symbol, square_class_reduce, Field, FieldElement, Place};
pub use gw::{
    gram_to_class, gw_add, gw_equal, gw_generator, gw_neg, gw_sub, hasse_invariant, DiagonalForm, GramMatrix,
    UnstableClass,
};
pub use local_degree::{higher_residue, local_degree, newton_matrix, simple_zero_degree, LocalDegreeReport};
pub use matrix::Matrix;
pub use poly::{
    bezout_pair, laurent_principal_part, normalize_pointed, rational_roots, Polynomial, PrincipalPart,
    RationalFunction, RootDatum,
};
pub use sums::{dsum_algebraic, naive_sum, verify_local_to_global, DsumEntry, LtgReport};
