//! Lower-triangular arrays indexed by `(n, k)` with `0 <= k <= n`.

use std::fmt::Write as _;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Row `n` holds exactly `n + 1` entries.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RiordanTriangle<T> {
    rows: Vec<Vec<T>>,
}

impl<T> RiordanTriangle<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        for (n, row) in rows.iter().enumerate() {
            if row.len() != n + 1 {
                return Err(Error::DomainMismatch(format!(
                    "row {n} has {} entries, expected {}",
                    row.len(),
                    n + 1
                )));
            }
        }
        Ok(RiordanTriangle { rows })
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<T>>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(n, r)| r.len() == n + 1));
        RiordanTriangle { rows }
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn row(&self, n: usize) -> &[T] {
        &self.rows[n]
    }

    /// Number of rows; the last row index is `len() - 1`.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&T> {
        self.rows.get(n).and_then(|r| r.get(k))
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> RiordanTriangle<U> {
        RiordanTriangle {
            rows: self.rows.iter().map(|r| r.iter().map(&mut f).collect()).collect(),
        }
    }

    /// Keep the first `n` rows.
    pub fn truncated(mut self, n: usize) -> Self {
        self.rows.truncate(n);
        self
    }
}

impl<T: Clone + Zero + Add<Output = T>> RiordanTriangle<T> {
    pub fn row_sums(&self) -> Vec<T> {
        self.rows
            .iter()
            .map(|r| r.iter().cloned().fold(T::zero(), |acc, x| acc + x))
            .collect()
    }
}

/// Serialization hooks for triangle entries.
pub trait TriangleEntry {
    fn to_json(&self) -> Value;
    fn to_text(&self) -> String;
}

impl TriangleEntry for BigInt {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn to_text(&self) -> String {
        self.to_string()
    }
}

impl<T: TriangleEntry> RiordanTriangle<T> {
    /// `{"kind": ..., "rows": [[...], ...]}` with exact decimal strings.
    pub fn to_json(&self, kind: &str) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| Value::Array(r.iter().map(TriangleEntry::to_json).collect()))
            .collect();
        json!({ "kind": kind, "rows": rows })
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(TriangleEntry::to_text).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_markdown(&self) -> String {
        let width = self.rows.len();
        let mut out = String::from("| n |");
        for k in 0..width {
            let _ = write!(out, " k={k} |");
        }
        out.push_str("\n|---|");
        out.push_str(&"---|".repeat(width));
        out.push('\n');
        for (n, row) in self.rows.iter().enumerate() {
            let _ = write!(out, "| {n} |");
            for k in 0..width {
                match row.get(k) {
                    Some(x) => {
                        let _ = write!(out, " {} |", x.to_text());
                    }
                    None => out.push_str("  |"),
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> RiordanTriangle<BigInt> {
        RiordanTriangle::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn rejects_ragged_rows() {
        let bad: Vec<Vec<BigInt>> = vec![vec![1.into()], vec![1.into()]];
        assert!(RiordanTriangle::from_rows(bad).is_err());
    }

    #[test]
    fn emits_csv_and_json() {
        let t = ints(&[&[1], &[1, 1], &[3, 2, 1]]);
        assert_eq!(t.to_csv(), "1\n1,1\n3,2,1\n");
        assert_eq!(
            t.to_json("hills").to_string(),
            r#"{"kind":"hills","rows":[["1"],["1","1"],["3","2","1"]]}"#
        );
        assert_eq!(t.row_sums(), vec![1.into(), 2.into(), BigInt::from(6)]);
        assert!(t.to_markdown().starts_with("| n | k=0 | k=1 | k=2 |\n|---|---|---|---|\n| 0 | 1 |"));
    }
}
