//! Mesh-aware nonlinear programming for element-wise uniform design fields.
//!
//! Most topology-optimization codes hand their optimizer a plain coefficient
//! vector and implicitly work in `ℝⁿ`. On non-uniform meshes that choice makes
//! the optimizer mesh-dependent: the same continuous problem produces different
//! iterates (and different designs) as the mesh changes. This crate implements
//! the alternative: the design is treated as a function in discretized `L²`,
//! inner products carry the element volumes, and derivatives are mapped to
//! gradients through the Riesz map before they enter the algorithm.
//!
//! The pieces:
//!
//! * [`fspace`] — diagonal mass matrix, primal/dual norms, Riesz map.
//! * [`mesh`] — 1-D and 2-D structured meshes, uniform refinement, exact field
//!   projection, and a JSON mesh file format.
//! * [`descent`] — a 1-D quadratic benchmark comparing steepest descent in
//!   `ℝⁿ` and in `L²`.
//! * [`gcmma`] — the globally convergent method of moving asymptotes, run
//!   either in `L²` or in classical `ℝⁿ` mode.
//! * [`subproblem`] — primal-dual interior-point solver for one MMA
//!   subproblem.
//! * [`fem`] — a small 2-D SIMP compliance testbed (linear triangles,
//!   Helmholtz PDE filter, adjoint sensitivities).
//! * [`driver`] — experiment runner behind the `fieldopt` binary.
//!
//! Every example under `examples/` is a runnable tour of one capability; start
//! with `steepest_descent_table` and `analytic_constrained`.

pub mod descent;
pub mod driver;
mod error;
pub mod fem;
pub mod fspace;
pub mod gcmma;
pub mod mesh;
pub mod problems;
pub mod subproblem;
mod sum;

pub use error::Error;

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Which inner-product the optimizer uses.
///
/// `L2` weighs every coefficient by its element volume (the mass matrix);
/// `Rn` treats the coefficient vector as a member of plain `ℝⁿ`, which
/// reproduces the classical algorithms and their mesh dependence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpaceMode {
    L2,
    Rn,
}

impl SpaceMode {
    /// Integration weights for this mode: element measures in `L2`, all ones
    /// in `Rn` (sums instead of integrals).
    pub fn weights(self, measures: &fspace::ElementMeasures) -> Vec<f64> {
        match self {
            SpaceMode::L2 => measures.measures().to_vec(),
            SpaceMode::Rn => vec![1.0; measures.len()],
        }
    }
}

impl std::str::FromStr for SpaceMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l2" | "L2" => Ok(SpaceMode::L2),
            "rn" | "Rn" | "RN" => Ok(SpaceMode::Rn),
            other => Err(Error::InvalidInput(format!(
                "unknown space mode `{other}` (expected `l2` or `rn`)"
            ))),
        }
    }
}

impl std::fmt::Display for SpaceMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpaceMode::L2 => write!(f, "l2"),
            SpaceMode::Rn => write!(f, "rn"),
        }
    }
}
