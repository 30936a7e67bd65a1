use std::cell::Cell;

use thiserror::Error;

/// Default ceiling on the number of elements any single constructed set may hold.
pub const DEFAULT_BUDGET: usize = 1_000_000;

thread_local! {
    static BUDGET: Cell<usize> = const { Cell::new(DEFAULT_BUDGET) };
}

/// Sets the element budget for the current thread.
pub fn set_budget(limit: usize) {
    BUDGET.with(|b| b.set(limit.max(1)));
}

/// Returns the element budget for the current thread.
pub fn budget() -> usize {
    BUDGET.with(|b| b.get())
}

/// Fails with [`Error::Budget`] when `size` exceeds the current budget.
pub fn check_budget(what: &str, size: u128) -> Result<()> {
    let limit = budget();
    if size > limit as u128 {
        return Err(Error::Budget {
            what: what.to_string(),
            size,
            limit,
        });
    }
    Ok(())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("size budget exceeded for {what}: {size} elements (limit {limit})")]
    Budget {
        what: String,
        size: u128,
        limit: usize,
    },
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
