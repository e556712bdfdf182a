use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("{name} = {value} is outside the domain {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },
    /// The bisection predicate takes the same value at both bracket ends.
    #[error("bracket [{lo}, {hi}] does not straddle the threshold")]
    Bracket { lo: f64, hi: f64 },
    /// A state vector would exceed the amplitude budget.
    #[error("{num_qubits} qubits exceeds the amplitude budget of {max_qubits} qubits")]
    Resource { num_qubits: u32, max_qubits: u32 },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: impl Into<f64>, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value: value.into(),
            expected,
        }
    }
}
