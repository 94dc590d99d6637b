//! Exact scalar and polynomial arithmetic.

pub mod intpoly;
pub mod poly;
pub mod rational;

pub use intpoly::{IntPoly, SturmChain};
pub use poly::RatPoly;
pub use rational::{factorial, int, pochhammer, rat, Rational};
