//! Node-count budgets for the combinatorial searches.
//!
//! Budgets count search nodes rather than wall-clock time so that a run
//! either succeeds or aborts identically on every machine.

use crate::error::{Error, Result};

/// Environment variable consulted by [`Budget::from_env`].
pub const BUDGET_ENV: &str = "COMPLICIAL_BUDGET";

/// Default number of search nodes a single top-level operation may visit.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

#[derive(Clone, Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Reads the limit from `COMPLICIAL_BUDGET`, falling back to [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Budget::new(limit)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.charge(1)
    }

    #[inline]
    pub fn charge(&mut self, nodes: u64) -> Result<()> {
        self.used = self.used.saturating_add(nodes);
        if self.used > self.limit {
            Err(Error::BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhausting_budget_errors() {
        let mut b = Budget::new(2);
        assert!(b.tick().is_ok());
        assert!(b.tick().is_ok());
        assert!(matches!(b.tick(), Err(Error::BudgetExceeded { limit: 2 })));
    }
}
