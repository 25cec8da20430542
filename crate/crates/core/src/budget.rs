//! Wall-clock budgets for the exact solvers.
//!
//! Exceeding a budget is a typed outcome, never a wrong answer: solvers
//! return `Err(BudgetExceeded)` and the caller reports it as its own verdict.

use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("time budget exceeded in {context}")]
pub struct BudgetExceeded {
    pub context: &'static str,
}

#[derive(Clone, Copy, Debug)]
pub struct Budget {
    deadline: Option<Instant>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget { deadline: None }
    }

    pub fn from_millis(ms: u64) -> Budget {
        Budget {
            deadline: Some(Instant::now() + Duration::from_millis(ms)),
        }
    }

    /// `None` means unlimited.
    pub fn from_config(ms: Option<u64>) -> Budget {
        match ms {
            Some(ms) => Budget::from_millis(ms),
            None => Budget::unlimited(),
        }
    }

    #[inline]
    pub fn is_exhausted(&self) -> bool {
        matches!(self.deadline, Some(d) if Instant::now() >= d)
    }

    #[inline]
    pub fn check(&self, context: &'static str) -> Result<(), BudgetExceeded> {
        if self.is_exhausted() {
            Err(BudgetExceeded { context })
        } else {
            Ok(())
        }
    }
}

/// Periodic budget check: consults the clock once every 1024 calls.
pub(crate) struct Ticker {
    count: u32,
}

impl Ticker {
    pub(crate) fn new() -> Ticker {
        Ticker { count: 0 }
    }

    #[inline]
    pub(crate) fn tick(&mut self, budget: &Budget, context: &'static str) -> Result<(), BudgetExceeded> {
        // Consult the clock on the first call (so a zero budget fails fast
        // even on tiny inputs) and every 1024 calls after that.
        if self.count % 1024 == 0 {
            budget.check(context)?;
        }
        self.count = self.count.wrapping_add(1);
        Ok(())
    }
}
