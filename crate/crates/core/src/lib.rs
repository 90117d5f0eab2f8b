//! Preference-based reinforcement-learning lab.
//!
//! Two randomized agents learn from pairwise trajectory preferences instead
//! of per-step rewards:
//!
//! - [`pr_lsvi`]: randomized least-squares value iteration for linear MDPs,
//!   with Gaussian perturbations of the reward and value estimates and an
//!   active query rule on the perturbation-induced preference uncertainty.
//! - [`pbts`]: posterior-sampling (Thompson) agent for tabular MDPs with a
//!   conjugate Dirichlet transition posterior and a finite reward-particle
//!   posterior.
//!
//! [`env`] provides simulated environments and the Bernoulli preference
//! oracle, [`harness`] runs seeded experiments that track exact regret and
//! query counts, and [`validate`] bundles the invariant suites behind the
//! CLI's `validate` subcommand.
//!
//! All numerical code is generic over [`scalar::Scalar`] (`f32` or `f64`);
//! the aliases below pin `f64`, which everything downstream uses.

pub mod env;
pub mod harness;
pub mod linalg;
pub mod pbts;
pub mod pr_lsvi;
pub mod record;
pub mod reward_mle;
pub mod rng;
pub mod scalar;
pub mod validate;

pub use scalar::Scalar;

/// `f64` aliases for the common case.
pub type TabularMdp64 = env::TabularMdp<f64>;
pub type LinearMdp64 = env::LinearMdp<f64>;
pub type LinkFunction64 = env::LinkFunction<f64>;
pub type PsdMatrix64 = linalg::PsdMatrix<f64>;
pub type PreferenceDataset64 = reward_mle::PreferenceDataset<f64>;
pub type PrLsviConfig64 = pr_lsvi::PrLsviConfig<f64>;
pub type PrLsviState64 = pr_lsvi::PrLsviState<f64>;
pub type PbtsState64 = pbts::PbtsState<f64>;
pub type RunConfig64 = harness::RunConfig<f64>;
pub type RunMetrics64 = harness::RunMetrics<f64>;
