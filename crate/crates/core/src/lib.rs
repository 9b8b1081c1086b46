//! Exact symbolic computation around extended Vandermonde matrices and
//! Schur polynomials.
//!
//! Everything is computed in the ring of multivariate polynomials with
//! arbitrary-precision integer coefficients ([`MultiPoly`]); no floats, no
//! modular shortcuts. The crate provides:
//!
//! * elementary symmetric polynomials and their signed variant
//!   ([`symm`]);
//! * the extended Vandermonde matrix, its column-selected minors, and the
//!   closed-form Vandermonde determinant ([`vandermonde`]);
//! * the banded matrix of signed elementary symmetric polynomials and its
//!   row-selected minors ([`banded`]);
//! * three exact determinant engines: Laplace cofactor expansion,
//!   fraction-free Bareiss elimination, and the Hessenberg-Toeplitz
//!   recurrence ([`det`]);
//! * Schur polynomials by three independent routes: bialternant quotient,
//!   signed banded minor (the second Jacobi-Trudi identity), and
//!   semistandard-tableau enumeration ([`schur`], [`tableau`]);
//! * exhaustive identity verification with per-case reports ([`verify`]).

pub mod banded;
pub mod det;
pub mod error;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod schur;
pub mod symm;
pub mod tableau;
pub mod vandermonde;
pub mod verify;

pub use banded::{build_p, minor_rows, row_zero_pattern_check};
pub use det::{det_bareiss, det_cofactor, det_hessenberg, COFACTOR_CAP};
pub use error::Error;
pub use matrix::PolyMatrix;
pub use partition::{partitions_in_box, Partition};
pub use poly::MultiPoly;
pub use schur::{
    nu_exponent, partition_from_selection, schur_bialternant, schur_jacobi_trudi,
    selection_from_partition,
};
pub use symm::{char_poly_coeffs, elementary, signed_elementary, verify_root_relation, VariableSet};
pub use tableau::{enumerate_ssyt, schur_tableaux, schur_tableaux_with_cap, Tableau};
pub use vandermonde::{
    all_selections, build_extended, minor_matrix, vandermonde_det, verify_column_relation,
    ColumnSelection,
};
pub use verify::{
    verify_hessenberg_recurrence, verify_initial_segment_case, verify_main_identity,
    verify_main_identity_numeric, verify_propositions, verify_row_pair_case,
    verify_selection_sweep, verify_single_column_case, verify_triangular_case, IdentityReport,
    NumericReport,
};
