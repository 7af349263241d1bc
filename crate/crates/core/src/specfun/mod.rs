//! Special functions used by both solvers.
//!
//! All functions are pure and double precision; nothing is cached.

mod bessel;
mod gamma;
mod sine;

pub use bessel::{
    bessel_k_im, bessel_k_im_deriv, bessel_k_im_deriv2, bessel_k_im_scaled,
    bessel_k_im_scaled_pair, bessel_k_im_smallx, ImagOrder,
};
pub use gamma::{arg_gamma, digamma_int, EULER_GAMMA};
pub use sine::{l2_integral, sinc, sine_integral};
