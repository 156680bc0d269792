//! Search budgets shared by the composite checkers.

use crate::coloring::DEFAULT_COLORING_NODES;
use crate::connectivity::DEFAULT_CYCLE_CAP;
use crate::fractional::DEFAULT_ODDSET_CAP;
use crate::hamilton::DEFAULT_NODE_BUDGET;
use crate::matchings::DEFAULT_MATCHING_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Perfect matchings enumerated per graph.
    pub matchings: u64,
    /// Largest order for which odd vertex sets are enumerated.
    pub oddsets: usize,
    /// Backtracking nodes for Hamiltonian paths and colourings.
    pub nodes: u64,
    /// Induced cycles enumerated for cyclic connectivity.
    pub cycles: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            matchings: DEFAULT_MATCHING_CAP,
            oddsets: DEFAULT_ODDSET_CAP,
            nodes: DEFAULT_NODE_BUDGET.max(DEFAULT_COLORING_NODES),
            cycles: DEFAULT_CYCLE_CAP,
        }
    }
}
