//! Brute-force oracles and random inputs shared by the integration suites.
//! Nothing here calls the matchers it is used to check.

#![allow(dead_code)]

use jdiff::JsonValue;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

/// Longest common subsequence length by enumerating every subsequence of
/// `a` and testing it against `b`.
pub fn lcs_by_enumeration<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut best = 0;
    for mask in 0u32..(1 << a.len()) {
        let len = mask.count_ones() as usize;
        if len <= best {
            continue;
        }
        let picked: Vec<&T> = (0..a.len())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &a[i])
            .collect();
        if is_subsequence(&picked, b) {
            best = len;
        }
    }
    best
}

fn is_subsequence<T: PartialEq>(needle: &[&T], hay: &[T]) -> bool {
    let mut it = hay.iter();
    needle.iter().all(|n| it.any(|h| h == *n))
}

fn index_subsets(n: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Every order-preserving injective pairing: equal-size increasing index
/// subsets of both sides, zipped.
pub fn monotone_pairings(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    let left = index_subsets(n);
    let right = index_subsets(m);
    let mut out = Vec::new();
    for l in &left {
        for r in right.iter().filter(|r| r.len() == l.len()) {
            out.push(l.iter().copied().zip(r.iter().copied()).collect());
        }
    }
    out
}

/// Every injective pairing (any order), including partial ones.
pub fn all_pairings(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        i: usize,
        n: usize,
        m: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        go(i + 1, n, m, used, cur, out);
        for j in 0..m {
            if !used[j] {
                used[j] = true;
                cur.push((i, j));
                go(i + 1, n, m, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, n, m, &mut vec![false; m], &mut Vec::new(), &mut out);
    out
}

pub fn pairing_total(sm: &[Vec<f64>], pairing: &[(usize, usize)]) -> f64 {
    pairing.iter().map(|&(i, j)| sm[i][j]).sum()
}

/// Minimum cost over all injections of the smaller side into the larger.
pub fn assignment_by_enumeration(costs: &[Vec<f64>]) -> f64 {
    let rows = costs.len();
    let cols = costs.first().map_or(0, Vec::len);
    let k = rows.min(cols);
    all_pairings(rows, cols)
        .into_iter()
        .filter(|p| p.len() == k)
        .map(|p| pairing_total(costs, &p))
        .fold(f64::INFINITY, f64::min)
}

pub fn random_matrix(rng: &mut StdRng, max_dim: usize) -> Vec<Vec<f64>> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    // mix of continuous values and coarse ties
                    if rng.gen_bool(0.3) {
                        rng.gen_range(-3..=3) as f64
                    } else {
                        rng.gen_range(-10.0..10.0)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn random_symbols(rng: &mut StdRng, max_len: usize, alphabet: usize) -> Vec<JsonValue> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            let c = (b'a' + rng.gen_range(0..alphabet) as u8) as char;
            JsonValue::String(c.to_string())
        })
        .collect()
}

const KEYS: [&str; 6] = ["a", "b", "c", "id", "ts", "v"];
const WORDS: [&str; 5] = ["x", "y", "view", "View", ""];

pub fn random_primitive(rng: &mut StdRng) -> JsonValue {
    match rng.gen_range(0..4) {
        0 => JsonValue::Null,
        1 => JsonValue::Bool(rng.gen()),
        2 => JsonValue::Number(rng.gen_range(0..4) as f64),
        _ => JsonValue::String(WORDS.choose(rng).unwrap().to_string()),
    }
}

/// Random document with depth ≤ `max_depth` and container fanout ≤ `max_fanout`.
pub fn random_document(rng: &mut StdRng, max_depth: usize, max_fanout: usize) -> JsonValue {
    random_node(rng, 0, max_depth, max_fanout)
}

fn random_node(rng: &mut StdRng, depth: usize, max_depth: usize, max_fanout: usize) -> JsonValue {
    let container_odds = 0.85f64.powi(depth as i32 + 1) * 0.8;
    if depth >= max_depth || !rng.gen_bool(container_odds) {
        return random_primitive(rng);
    }
    let fanout = rng.gen_range(0..=max_fanout);
    if rng.gen_bool(0.5) {
        let mut map = jdiff::json::Map::new();
        for _ in 0..fanout {
            let key = KEYS.choose(rng).unwrap().to_string();
            let value = random_node(rng, depth + 1, max_depth, max_fanout);
            map.insert(key, value);
        }
        JsonValue::Object(map)
    } else {
        JsonValue::Array(
            (0..fanout)
                .map(|_| random_node(rng, depth + 1, max_depth, max_fanout))
                .collect(),
        )
    }
}

/// A perturbed copy: values replaced, keys dropped or added, array elements
/// removed, inserted or swapped.
pub fn mutate(rng: &mut StdRng, value: &JsonValue, depth: usize, max_depth: usize) -> JsonValue {
    if rng.gen_bool(0.08) {
        return random_node(rng, depth, max_depth, 4);
    }
    match value {
        JsonValue::Object(map) => {
            let mut out = jdiff::json::Map::new();
            for (k, v) in map {
                if rng.gen_bool(0.1) {
                    continue;
                }
                out.insert(k.clone(), mutate(rng, v, depth + 1, max_depth));
            }
            if rng.gen_bool(0.15) {
                let key = KEYS.choose(rng).unwrap().to_string();
                out.entry(key).or_insert_with(|| random_primitive(rng));
            }
            JsonValue::Object(out)
        }
        JsonValue::Array(items) => {
            let mut out = Vec::with_capacity(items.len() + 1);
            for item in items {
                if !rng.gen_bool(0.1) {
                    out.push(mutate(rng, item, depth + 1, max_depth));
                }
            }
            if rng.gen_bool(0.15) {
                let at = rng.gen_range(0..=out.len());
                out.insert(at, random_primitive(rng));
            }
            if out.len() > 1 && rng.gen_bool(0.2) {
                let (i, j) = (rng.gen_range(0..out.len()), rng.gen_range(0..out.len()));
                out.swap(i, j);
            }
            JsonValue::Array(out)
        }
        _ if rng.gen_bool(0.1) => random_primitive(rng),
        other => other.clone(),
    }
}

/// Array of mixed primitives and small objects for alignment checks.
pub fn random_mixed_array(rng: &mut StdRng, max_len: usize) -> Vec<JsonValue> {
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| {
            if rng.gen_bool(0.5) {
                JsonValue::Number(rng.gen_range(0..3) as f64)
            } else {
                let mut map = jdiff::json::Map::new();
                for key in ["id", "v", "w"] {
                    if rng.gen_bool(0.7) {
                        map.insert(
                            key.to_string(),
                            JsonValue::Number(rng.gen_range(0..2) as f64),
                        );
                    }
                }
                JsonValue::Object(map)
            }
        })
        .collect()
}
