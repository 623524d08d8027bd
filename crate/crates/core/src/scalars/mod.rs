//! Exact scalars: rationals, rational functions of the coupling `A`, and
//! the maps from the bare interaction `λ` to the couplings `A(λ)`, `β(λ)`.

mod poly;
pub mod rational;
mod ratfunc;
mod scalar;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use scalar::{coupling_from_lambda, Branch, Coupling, LambdaCoupling, Scalar};
