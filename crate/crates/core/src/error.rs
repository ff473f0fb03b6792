use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{what}: {detail}")]
    Domain { what: &'static str, detail: String },

    /// An enumeration-based route was asked for more than its configured bound.
    #[error("{what} with n = {n} exceeds the enumeration bound {bound} (raise it with --bound)")]
    BoundExceeded {
        what: &'static str,
        n: usize,
        bound: usize,
    },

    #[error("parse error on line {line}: {detail}")]
    Parse { line: usize, detail: String },
}

impl Error {
    pub(crate) fn domain(what: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            what,
            detail: detail.into(),
        }
    }

    pub(crate) fn check_bound(what: &'static str, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            Err(Error::BoundExceeded { what, n, bound })
        } else {
            Ok(())
        }
    }
}
