use crate::local::DEFAULT_MAX_STEPS;

/// Computation budgets shared by every entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Reduction steps allowed per standard basis computation.
    pub max_steps: usize,
    /// Initial series truncation order for pullbacks.
    pub truncation: u32,
    /// Truncation order at which doubling gives up.
    pub max_truncation: u32,
    /// Largest degree bound tried by the linear-algebra oracle.
    pub oracle_bound: u32,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_steps: DEFAULT_MAX_STEPS,
            truncation: 64,
            max_truncation: 1024,
            oracle_bound: 64,
        }
    }
}
