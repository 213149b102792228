//! The perturbed family `Q^_n = L^_n + Lambda_n L^_{n-1}`, orthogonal with
//! respect to `x^a e^{-x}/(x - c) dx + N delta_c`.

mod hypergeom;
mod inner;
mod lambda;
mod params;
mod recurrence;
mod zeros;

pub use hypergeom::{hypergeom_rep, ode3_coefficients, ode3_from_ode2, ode_residuals, HypergeomRep, OdeResiduals};
pub use inner::{gram_matrix, inner_product_nu, GramMatrix, PolyEval, Polynomial, QPolynomial, MAX_INNER_DEGREE};
pub use lambda::{eval_q, lambda_casoratian, lambda_n, LambdaTable, LambdaValue};
pub use params::{Branch, GeronimusParams};
pub use recurrence::{
    lambda_nonlinear, lambda_recursion_residual, lambda_rho, perturbed_recurrence, PerturbedRecurrence,
};
pub use zeros::{zeros_q, MAX_ZEROS_DEGREE};
