use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: domain error, {constraint} (got {value})")]
    Domain {
        function: &'static str,
        constraint: &'static str,
        value: f64,
    },
    #[error("{context}: estimated error {estimate:e} exceeds tolerance {tolerance:e} (partial result {partial:e})")]
    Accuracy {
        context: &'static str,
        partial: f64,
        estimate: f64,
        tolerance: f64,
    },
    #[error("{what}: construction failed, {reason}")]
    Construction { what: &'static str, reason: String },
    #[error("{context}: sequence still moving at n_max = {n_max} (tail deviation {deviation:e})")]
    Bracket {
        context: &'static str,
        n_max: usize,
        deviation: f64,
    },
    #[error("invalid parameter: {constraint} violated ({name} = {value})")]
    Constraint {
        name: &'static str,
        constraint: &'static str,
        value: f64,
    },
}

impl Error {
    pub fn domain(function: &'static str, constraint: &'static str, value: f64) -> Self {
        Error::Domain {
            function,
            constraint,
            value,
        }
    }

    pub fn is_accuracy(&self) -> bool {
        matches!(self, Error::Accuracy { .. } | Error::Bracket { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
