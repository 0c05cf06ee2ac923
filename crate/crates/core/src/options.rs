use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use thiserror::Error;

/// Default vertex cap for exact NP-hard searches.
pub const DEFAULT_CAP: usize = 40;

/// Vertex cap for the exact re-solves done while verifying certificates.
pub const VERIFY_CAP: usize = 120;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {order} vertices, above the exact-search cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("time budget exhausted")]
    BudgetExhausted,
    #[error("{0} is undefined for this graph: {1}")]
    Undefined(&'static str, String),
}

/// Limits shared by every exact solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub cap: usize,
    /// 0 and 1 both mean sequential.
    pub workers: usize,
    pub budget: Option<Duration>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            cap: DEFAULT_CAP,
            workers: 1,
            budget: None,
        }
    }
}

impl SolveOptions {
    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn with_budget(mut self, budget: Option<Duration>) -> Self {
        self.budget = budget;
        self
    }

    pub(crate) fn check_cap(&self, order: usize) -> Result<(), SolveError> {
        if order > self.cap {
            Err(SolveError::CapExceeded {
                order,
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn parallel(&self) -> bool {
        self.workers > 1
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.parallel() {
            match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
                Ok(pool) => pool.install(f),
                Err(_) => f(),
            }
        } else {
            f()
        }
    }
}

/// Cooperative deadline polled from inside search loops.
pub(crate) struct Deadline {
    end: Option<Instant>,
    expired: AtomicBool,
    ticks: AtomicU64,
}

impl Deadline {
    pub(crate) fn new(budget: Option<Duration>) -> Self {
        Deadline {
            end: budget.map(|b| Instant::now() + b),
            expired: AtomicBool::new(false),
            ticks: AtomicU64::new(0),
        }
    }

    /// True once the budget has run out. Checks the clock every 1024 calls.
    #[inline]
    pub(crate) fn expired(&self) -> bool {
        let Some(end) = self.end else { return false };
        if self.expired.load(Ordering::Relaxed) {
            return true;
        }
        if self.ticks.fetch_add(1, Ordering::Relaxed).is_multiple_of(1024) && Instant::now() >= end {
            self.expired.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    pub(crate) fn result(&self) -> Result<(), SolveError> {
        if self.expired.load(Ordering::Relaxed) {
            Err(SolveError::BudgetExhausted)
        } else {
            Ok(())
        }
    }
}
