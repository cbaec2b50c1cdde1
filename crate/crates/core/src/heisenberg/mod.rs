//! Operator-valued matrices, extraction of the exchange relations, and the
//! assembled sl2 Heisenberg double.

mod algebra;
mod checks;
mod opmatrix;
mod relations;

pub use algebra::{
    quantum_det, quantum_inverse, sl2_om_minus, sl2_om_plus, triangular_inverse, unit_inverse,
    Heisenberg, LabeledRelation,
};
pub use checks::{
    check_central, check_det_central, check_det_omega, check_identities, check_jimbo_drinfeld,
    check_omega_sigma_commute, check_self_consistency, g_omega_residual, jimbo_drinfeld_identities,
    reflection_residual, Identity, IdentityCheck, MatrixCheck, ReflectionForm,
};
pub use opmatrix::OpMatrix;
pub use relations::{
    expand_matrix_relation, residual_relations, MatKind, Realization, RelationSpec, Sign,
};
