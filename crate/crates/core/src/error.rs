use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("invalid argument: {0}")]
    Domain(String),

    /// The eta prefactor `1/(1 - 2^(1-s))` is singular (or too close to it).
    #[error("pole of the eta prefactor at s = {sigma} + {tau}i (|1 - 2^(1-s)| = {gap:e})")]
    Pole { sigma: f64, tau: f64, gap: f64 },

    /// A reciprocal was requested of a value under the representable floor.
    #[error("modulus squared {value:e} is below the floor {floor:e}")]
    Overflow { value: f64, floor: f64 },

    /// A scan window held no interior local minimum.
    #[error("no interior local minimum along {axis} in [{lo}, {hi}]")]
    NoMinimum { axis: &'static str, lo: f64, hi: f64 },

    /// Quadrature refinement disagreed by more than the tolerance.
    #[error("quadrature did not converge: estimated error {estimate:e} exceeds {tolerance:e}")]
    Quadrature { estimate: f64, tolerance: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for failures raised by a numerical guard rather than bad input.
    pub fn is_numerical_guard(&self) -> bool {
        matches!(
            self,
            Error::Pole { .. } | Error::Overflow { .. } | Error::Quadrature { .. }
        )
    }
}
