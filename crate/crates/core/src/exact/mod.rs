//! Exact arithmetic kernel: integer/rational polynomials, Sturm-based root
//! counting and isolation, resultants, characteristic polynomials,
//! irreducibility, and certified dyadic interval evaluation.
//!
//! Everything in this module is exact: root counts come from Sturm chains
//! evaluated at rational or `a + b*sqrt(6)` endpoints, resultants from
//! fraction-free determinants, and interval arithmetic rounds outward so a
//! determined sign is a proof.

mod bound;
mod charpoly;
mod factor;
mod interval;
mod poly;
mod ratpoly;
mod resultant;
mod sturm;

pub use bound::{sign_at, sign_at_bound, sign_at_rational, Bound, QuadIrrBound};
pub use charpoly::{char_poly_of_element, matrix_char_poly, multiplication_matrix};
pub(crate) use charpoly::mat_inverse;
pub use factor::is_irreducible;
pub use interval::{eval_interval, rational_ceil_dyadic, rational_floor_dyadic, DyInterval, Dyadic};
pub use poly::{sign_quad, IntPolynomial};
pub use ratpoly::RatPolynomial;
pub use resultant::{bareiss_determinant, discriminant, resultant};
pub use sturm::{
    all_roots_in_open_interval, count_real_roots, isolate_real_roots, pow2_inv, refine_root,
    sturm_count, RootInterval, SturmChain,
};
