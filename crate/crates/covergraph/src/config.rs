/// Search bounds shared by the exact solvers.
///
/// Every bound is a refusal threshold, not a quality knob: an instance over
/// the bound gets a capacity error, never an approximate answer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Limits {
    /// Maximum edge count for orientation searches (`decide_cover`, `d_min`,
    /// exhaustive enumeration). 2^28 with pruning is the practical
    /// desk-scale ceiling.
    pub edge_search_bound: usize,
    /// Maximum vertex count for vertex-indexed exact solvers
    /// (chromatic number, homomorphism search, circular colorings).
    pub vertex_bound: usize,
    /// Maximum number of simple cycles the imbalance computation will
    /// enumerate before refusing.
    pub cycle_budget: usize,
    /// Worker count for searches that split their top-level branching.
    /// Results are schedule-independent; this only affects wall time.
    pub workers: usize,
}

pub const DEFAULT_EDGE_SEARCH_BOUND: usize = 28;
pub const DEFAULT_VERTEX_BOUND: usize = 64;
pub const DEFAULT_CYCLE_BUDGET: usize = 1_000_000;

impl Default for Limits {
    fn default() -> Self {
        Limits {
            edge_search_bound: DEFAULT_EDGE_SEARCH_BOUND,
            vertex_bound: DEFAULT_VERTEX_BOUND,
            cycle_budget: DEFAULT_CYCLE_BUDGET,
            workers: 1,
        }
    }
}

impl Limits {
    pub fn with_edge_bound(mut self, bound: usize) -> Self {
        self.edge_search_bound = bound;
        self
    }

    pub fn with_vertex_bound(mut self, bound: usize) -> Self {
        self.vertex_bound = bound;
        self
    }

    pub fn with_cycle_budget(mut self, budget: usize) -> Self {
        self.cycle_budget = budget;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    /// True when `edge_search_bound` was raised above the default; certificates
    /// produced by over-default searches record the override.
    pub fn edge_bound_overridden(&self) -> bool {
        self.edge_search_bound > DEFAULT_EDGE_SEARCH_BOUND
    }
}
