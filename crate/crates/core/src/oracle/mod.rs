//! Independent numerical ground truth.
//!
//! Nothing in here uses the closed-form spectrum or the zeta-function
//! asymptotics; it integrates the radial ODE directly, sums the partition
//! function term by term and differentiates numerically.

mod diff;
mod partition;
mod quad;
mod shooting;

pub use diff::{central_difference, central_difference_with_step, default_step, DiffOrder};
pub use partition::{
    characteristic_exact, occupation_sum, thermo_exact, PartitionSum, TruncationPolicy,
};
pub use quad::integrate_adaptive;
pub use shooting::{shoot_radial_eigenvalue, ShootingConfig};
