use super::{DpTable, IndexPair};
use crate::error::DiffError;
use crate::json::{JsonPath, JsonValue};
use crate::similarity::DiffContext;

/// `(n+1)×(m+1)` table; cell `(i, j)` is the LCS length of `left[..i]` and
/// `right[..j]`, where elements are common when Φ = 1.
pub fn lcs_table<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<DpTable, DiffError> {
    ctx.with_drill(|ctx| {
        let (n, m) = (left.len(), right.len());
        let mut dp = DpTable::zeros(n + 1, m + 1);
        for i in 1..=n {
            for j in 1..=m {
                let score =
                    ctx.element_similarity(left, i - 1, right, j - 1, left_path, right_path)?;
                let cell = if score == 1.0 {
                    dp.get(i - 1, j - 1) + 1.0
                } else {
                    dp.get(i - 1, j).max(dp.get(i, j - 1))
                };
                dp.set(i, j, cell);
            }
        }
        Ok(dp)
    })
}

/// Walk the table from the bottom-right corner. On a tie between skipping
/// left and skipping right, the left index is decremented.
pub fn backtrack_lcs<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    table: &DpTable,
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<Vec<IndexPair>, DiffError> {
    ctx.with_drill(|ctx| {
        let mut pairs = Vec::new();
        let (mut i, mut j) = (left.len(), right.len());
        while i > 0 && j > 0 {
            let score = ctx.element_similarity(left, i - 1, right, j - 1, left_path, right_path)?;
            if score == 1.0 {
                pairs.push(IndexPair::new(i - 1, j - 1, 1.0));
                i -= 1;
                j -= 1;
            } else if table.get(i - 1, j) >= table.get(i, j - 1) {
                i -= 1;
            } else {
                j -= 1;
            }
        }
        pairs.reverse();
        Ok(pairs)
    })
}
