//! Special functions needed by the spectrum and the partition-function
//! asymptotics: the Hurwitz zeta function and Kummer's confluent
//! hypergeometric function for real arguments.

mod kummer;
mod zeta;

pub use kummer::kummer_1f1;
pub use zeta::{bernoulli_numbers, hurwitz_zeta, riemann_zeta, ZETA_3};
