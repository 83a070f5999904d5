//! Array matching. Four regimes, picked by [`MatchMode`]:
//!
//! | ordered | fuzzy | matcher                                  |
//! |---------|-------|------------------------------------------|
//! | yes     | no    | longest common subsequence               |
//! | yes     | yes   | similarity-weighted alignment (edit DP)  |
//! | no      | no    | greedy exact pairing                     |
//! | no      | yes   | Hungarian assignment on −similarity      |
//!
//! Matchers evaluate element similarity with the context in drill mode and
//! return injective [`IndexPair`]s; scoring and recording happen in
//! [`DiffContext::array_similarity_helper`](crate::DiffContext::array_similarity_helper).

mod alignment;
mod hungarian;
mod lcs;
mod unordered;

use std::fmt;
use std::str::FromStr;

pub use alignment::{backtrack_edit_alignment, edit_alignment_table};
pub use hungarian::{assignment_cost, hungarian};
pub use lcs::{backtrack_lcs, lcs_table};
pub use unordered::{brute_force_matching, unordered_fuzzy_matching};

use crate::error::ConfigError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MatchMode {
    pub ordered: bool,
    pub fuzzy: bool,
}

impl MatchMode {
    pub const ORDERED_EXACT: MatchMode = MatchMode {
        ordered: true,
        fuzzy: false,
    };
    pub const ORDERED_FUZZY: MatchMode = MatchMode {
        ordered: true,
        fuzzy: true,
    };
    pub const UNORDERED_EXACT: MatchMode = MatchMode {
        ordered: false,
        fuzzy: false,
    };
    pub const UNORDERED_FUZZY: MatchMode = MatchMode {
        ordered: false,
        fuzzy: true,
    };

    pub const ALL: [MatchMode; 4] = [
        Self::ORDERED_EXACT,
        Self::ORDERED_FUZZY,
        Self::UNORDERED_EXACT,
        Self::UNORDERED_FUZZY,
    ];

    pub fn as_str(self) -> &'static str {
        match (self.ordered, self.fuzzy) {
            (true, false) => "ordered-exact",
            (true, true) => "ordered-fuzzy",
            (false, false) => "unordered-exact",
            (false, true) => "unordered-fuzzy",
        }
    }
}

impl Default for MatchMode {
    fn default() -> Self {
        Self::ORDERED_EXACT
    }
}

impl fmt::Display for MatchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MatchMode {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| ConfigError::UnknownMode(s.to_string()))
    }
}

/// One matched element pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexPair {
    pub left_index: usize,
    pub right_index: usize,
    pub score: f64,
}

impl IndexPair {
    pub fn new(left_index: usize, right_index: usize, score: f64) -> Self {
        Self {
            left_index,
            right_index,
            score,
        }
    }
}

/// Dense row-major score grid used by the two ordered matchers.
#[derive(Debug, Clone, PartialEq)]
pub struct DpTable {
    rows: usize,
    cols: usize,
    cells: Vec<f64>,
}

impl DpTable {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            cells: vec![0.0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.cells[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: f64) {
        self.cells[row * self.cols + col] = value;
    }
}
