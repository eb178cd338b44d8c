//! Exact coadjoint invariants of matrix Lie algebras: index, stabilizers,
//! Cartan–Duflo rank, quasi-reductivity and stability, with constructions of
//! flag parabolics and a sweep engine comparing closed-form predictions to
//! computed values.

pub mod cli;
pub mod constructions;
pub mod error;
pub mod flag;
pub mod lie;
pub mod linalg;
pub mod jordan;
pub mod poly;
pub mod report;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{Matrix, Subspace};
pub use scalar::Scalar;

#[cfg(test)]
pub(crate) mod testutil {
    use proptest::test_runner::{Config, RngSeed};

    /// Deterministic property-test configuration.
    pub fn fixed_config(cases: u32) -> Config {
        Config {
            cases,
            rng_seed: RngSeed::Fixed(0x1e57_ab1e),
            failure_persistence: None,
            ..Config::default()
        }
    }
}
