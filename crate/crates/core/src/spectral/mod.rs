//! Chebyshev spectral machinery shared by all numerical stages: nodes,
//! coefficient transforms, differentiation, real-line/half-line maps,
//! Möbius arc parameterizations, and Cauchy transforms of the basis.

pub mod arc;
pub mod cauchy;
pub mod cheb;
pub mod linemap;

pub use arc::{Arc, ArcGeom};
pub use cauchy::{arc_cauchy_row, arc_cauchy_row_at_param, Side};
pub use cheb::{cheb_nodes, coeffs_to_values, derivative_coeffs, eval_cheb, values_to_coeffs, ChebGrid};
pub use linemap::{LineMap, LineMapKind};
