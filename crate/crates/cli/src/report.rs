use serde::Serialize;

use hamlink::solver::StatsSnapshot;

/// Decision record printed as JSON.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub answer: Answer,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<String>,
    pub promise: Promise,
    pub stats: Stats,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Answer {
    Bool(bool),
    Count(usize),
    Bound { at_most: usize },
    Infinite(&'static str),
}

#[derive(Debug, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Paths(Vec<Vec<usize>>),
    Labels(Vec<usize>),
}

#[derive(Debug, Default, Serialize)]
pub struct Promise {
    /// The k with independence number below k, when the command relies on one.
    pub k: Option<usize>,
    pub checked: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub collections: u64,
    pub memo_hits: u64,
    pub connectivity_exits: u64,
    pub max_cut: usize,
    pub max_depth: usize,
    pub elapsed_ms: u64,
}

impl Stats {
    pub fn from_snapshot(s: StatsSnapshot, elapsed_ms: u64) -> Self {
        Stats {
            nodes: s.nodes,
            collections: s.collections,
            memo_hits: s.memo_hits,
            connectivity_exits: s.connectivity_exits,
            max_cut: s.max_cut,
            max_depth: s.max_depth,
            elapsed_ms,
        }
    }
}
