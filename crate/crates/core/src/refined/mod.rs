//! The extended doubly-refined matrix and executable checks of the linear
//! relations, representations and closed formulas it satisfies.

mod drefined;
mod explicit;
mod extended;
mod report;
mod representations;
mod sufficiency;
mod theorems;

pub use drefined::{drefined_f, verify_conjecture3, verify_conjecture4, verify_drefined_reductions};
pub use explicit::{
    b_factor, explicit_formula, explicit_formula_rat, is_excluded, p_factor, s_sum, verify_conjecture2,
};
pub use extended::{c_coeff, extend_matrix, ExtendedMatrix};
pub use report::{Status, VerificationReport, Witness, MAX_WITNESSES};
pub use representations::{
    f_from_table, f_from_w, verify_f_from_table, verify_zw_chain, w_value, z_table, z_value,
};
pub use sufficiency::{
    solve_sufficiency, sufficiency_system, LinearSystem, SufficiencyOutcome, MAX_SUFFICIENCY_ORDER,
};
pub use theorems::{
    verify_special_values, verify_structural, verify_theorem1, verify_theorem2, verify_theorem4,
    verify_triangular_system,
};
