use super::{DpTable, IndexPair};
use crate::error::DiffError;
use crate::json::{JsonPath, JsonValue};
use crate::similarity::DiffContext;

/// Suffix-alignment table. Cell `(x, y)` is the best total Φ over
/// order-preserving pairings of `left[x..]` with `right[y..]`, so `(0, 0)`
/// holds the optimum for the whole arrays. Edit cost is −Φ, so maximizing
/// similarity is minimizing edits.
pub fn edit_alignment_table<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<DpTable, DiffError> {
    ctx.with_drill(|ctx| {
        let (n, m) = (left.len(), right.len());
        let mut dp = DpTable::zeros(n + 1, m + 1);
        for x in (0..n).rev() {
            for y in (0..m).rev() {
                let score = ctx.element_similarity(left, x, right, y, left_path, right_path)?;
                let cell = dp
                    .get(x + 1, y)
                    .max(dp.get(x, y + 1))
                    .max(score + dp.get(x + 1, y + 1));
                dp.set(x, y, cell);
            }
        }
        Ok(dp)
    })
}

/// Walk from `(0, 0)`: drop `left[i]` if that keeps the optimum, else add
/// `right[j]` if that does, else pair `(i, j)`. Zero-score pairs are dropped.
pub fn backtrack_edit_alignment<'v>(
    ctx: &mut DiffContext<'_, 'v>,
    left: &'v [JsonValue],
    right: &'v [JsonValue],
    table: &DpTable,
    left_path: &JsonPath,
    right_path: &JsonPath,
) -> Result<Vec<IndexPair>, DiffError> {
    ctx.with_drill(|ctx| {
        let (n, m) = (left.len(), right.len());
        let mut pairs = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < n && j < m {
            let current = table.get(i, j);
            if current == table.get(i + 1, j) {
                i += 1;
            } else if current == table.get(i, j + 1) {
                j += 1;
            } else {
                let score = ctx.element_similarity(left, i, right, j, left_path, right_path)?;
                if score > 0.0 {
                    pairs.push(IndexPair::new(i, j, score));
                }
                i += 1;
                j += 1;
            }
        }
        Ok(pairs)
    })
}
