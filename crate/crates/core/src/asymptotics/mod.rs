//! Large-`n` formulas for `Lambda_n`, `Q^_n` and the perturbed recurrence
//! coefficients, and the convergence-order harness that checks them against
//! exact evaluation.

mod formulas;
mod harness;
mod order;

pub use formulas::{
    crossover, inner_envelope, inner_q, inner_q_branch, lambda_asymptotic, lambda_asymptotic_branch,
    mehler_heine_q, recurrence_coeff_asymptotic, recurrence_coeff_asymptotic_branch, relative_q,
    relative_q_branch, strong_outer_q, strong_outer_q_branch, CrossoverInfo, MehlerHeineQ,
};
pub use harness::{
    inner_errors, lambda_errors, ratio_pi_errors, ratio_r_errors, recurrence_remainders, relative_errors,
    second_kind_errors, strong_outer_errors, RecurrenceRemainders,
};
pub use order::{dyadic_grid, estimate_order, OrderFit};
