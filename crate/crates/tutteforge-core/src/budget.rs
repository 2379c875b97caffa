//! Guard for exhaustive subset enumerations.

use crate::error::{Error, Result};

/// Upper bound on how many subsets an exhaustive operation may visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub subsets: u64,
}

impl Budget {
    /// Default limit of 2^22 subsets.
    pub const DEFAULT: Budget = Budget { subsets: 1 << 22 };

    pub fn new(subsets: u64) -> Self {
        Budget { subsets }
    }

    /// Fails with `BudgetExceeded` when `needed` exceeds the limit.
    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.subsets as u128 {
            Err(Error::BudgetExceeded {
                needed,
                limit: self.subsets,
            })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}
