use super::{hungarian, IndexPair};
use crate::error::DiffError;
use crate::json::{JsonPath, JsonValue};
use crate::similarity::DiffContext;

/// Greedy exact pairing: each left element takes the first unused right
/// element with Φ = 1.
pub fn brute_force_matching<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<Vec<IndexPair>, DiffError> {
    ctx.with_drill(|ctx| {
        let mut used = vec![false; right.len()];
        let mut pairs = Vec::new();
        for i in 0..left.len() {
            for (j, taken) in used.iter_mut().enumerate() {
                if *taken {
                    continue;
                }
                if ctx.element_similarity(left, i, right, j, left_path, right_path)? == 1.0 {
                    *taken = true;
                    pairs.push(IndexPair::new(i, j, 1.0));
                    break;
                }
            }
        }
        Ok(pairs)
    })
}

/// Maximum-total-similarity assignment. Assignments scoring zero or below
/// the configured pair threshold are dropped.
pub fn unordered_fuzzy_matching<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<Vec<IndexPair>, DiffError> {
    ctx.with_drill(|ctx| {
        let mut sm = vec![vec![0.0; right.len()]; left.len()];
        for (i, row) in sm.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = ctx.element_similarity(left, i, right, j, left_path, right_path)?;
            }
        }
        let costs: Vec<Vec<f64>> = sm
            .iter()
            .map(|row| row.iter().map(|s| -s).collect())
            .collect();
        let threshold = ctx.config().pair_threshold();
        Ok(hungarian(&costs)
            .into_iter()
            .map(|(i, j)| IndexPair::new(i, j, sm[i][j]))
            .filter(|p| p.score > 0.0 && p.score >= threshold)
            .collect())
    })
}
