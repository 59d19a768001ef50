//! Permutations avoiding 2413 and 3142 (separable permutations) and the
//! statistics `iar`, `comp` and the descent set.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, hill_triangle, PathClass};
use crate::triangle::RiordanTriangle;

/// A permutation of `1..=n`, `n >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidPermutation("size 0".into()));
        }
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("value {v} in size {n}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Positions `i` in `1..n` with `pi(i) > pi(i+1)`.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        descents(&self.values)
    }

    /// Length of the longest increasing prefix.
    pub fn iar(&self) -> usize {
        1 + self.values.windows(2).take_while(|w| w[0] < w[1]).count()
    }

    /// Number of prefixes `pi(1..i)` whose values are exactly `1..i`.
    pub fn comp(&self) -> usize {
        let mut max = 0;
        let mut count = 0;
        for (i, &v) in self.values.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                count += 1;
            }
        }
        count
    }

    pub fn contains_forbidden_pattern(&self) -> bool {
        contains_2413_or_3142(&self.values)
    }

    pub fn is_separable(&self) -> bool {
        splits_into_blocks(&self.values)
    }

    pub fn stat_record(&self) -> StatRecord {
        StatRecord {
            iar: self.iar(),
            comp: self.comp(),
            des_set: self.descent_set(),
            separable: self.is_separable(),
        }
    }
}

fn descents(values: &[usize]) -> BTreeSet<usize> {
    values.windows(2).enumerate().filter(|(_, w)| w[0] > w[1]).map(|(i, _)| i + 1).collect()
}

/// Direct O(n^4) scan for an occurrence of 2413 or 3142.
pub fn contains_2413_or_3142(v: &[usize]) -> bool {
    let n = v.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if is_2413_or_3142(v[a], v[b], v[c], v[d]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn is_2413_or_3142(a: usize, b: usize, c: usize, d: usize) -> bool {
    (c < a && a < d && d < b) || (b < d && d < a && a < c)
}

/// Whether some occurrence ends at the last entry of `v`.
fn pattern_ends_at_last(v: &[usize]) -> bool {
    let Some((&d, rest)) = v.split_last() else {
        return false;
    };
    let n = rest.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if is_2413_or_3142(rest[a], rest[b], rest[c], d) {
                    return true;
                }
            }
        }
    }
    false
}

/// Separability through direct/skew sum decomposition.
fn splits_into_blocks(v: &[usize]) -> bool {
    if v.len() <= 1 {
        return true;
    }
    let n = v.len();
    let (mut lo, mut hi) = (usize::MAX, 0);
    for i in 0..n - 1 {
        lo = lo.min(v[i]);
        hi = hi.max(v[i]);
        if hi - lo != i {
            continue;
        }
        let direct = lo == v.iter().min().copied().unwrap_or(0);
        let skew = hi == v.iter().max().copied().unwrap_or(0);
        if direct || skew {
            return splits_into_blocks(&standardize(&v[..=i]))
                && splits_into_blocks(&standardize(&v[i + 1..]));
        }
    }
    false
}

fn standardize(v: &[usize]) -> Vec<usize> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    v.iter().map(|x| sorted.binary_search(x).expect("present") + 1).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatRecord {
    pub iar: usize,
    pub comp: usize,
    pub des_set: BTreeSet<usize>,
    pub separable: bool,
}

/// All separable permutations of size `n` in lexicographic order.
pub fn enumerate_separable(n: usize) -> Vec<Permutation> {
    if n == 0 {
        return Vec::new();
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut used = vec![false; n + 1];
            used[first] = true;
            let mut prefix = vec![first];
            extend_separable(n, &mut prefix, &mut used, &mut out);
            out
        })
        .collect::<Vec<_>>()
        .concat()
}

fn extend_separable(n: usize, prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
    if prefix.len() == n {
        out.push(Permutation { values: prefix.clone() });
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if !pattern_ends_at_last(prefix) {
            used[v] = true;
            extend_separable(n, prefix, used, out);
            used[v] = false;
        }
        prefix.pop();
    }
}

/// All permutations of size `n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut v: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { values: v.clone() });
        let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
        v.swap(i, j);
        v[i + 1..].reverse();
    }
}

/// `p(n, k)` = number of separable permutations of size `n` with `iar = k`,
/// stored at row `n - 1`, column `k - 1` so that it lines up with the hill
/// triangle. Rows `n = 1..=n_max`.
pub fn iar_triangle(n_max: usize) -> RiordanTriangle<BigInt> {
    let rows = (1..=n_max)
        .map(|n| {
            let mut row = vec![BigInt::from(0); n];
            for p in enumerate_separable(n) {
                row[p.iar() - 1] += 1;
            }
            row
        })
        .collect();
    RiordanTriangle::from_rows(rows).expect("row n has n entries")
}

/// Checks the recurrences for `p(n, k)` and the identity with the hill
/// triangle over the given table.
pub fn check_iar_triangle(p: &RiordanTriangle<BigInt>) -> Result<()> {
    let get = |n: usize, k: usize| p.get(n - 1, k - 1).cloned().unwrap_or_default();
    let pow2 = |e: usize| BigInt::from(1) << e;
    for n in 2..=p.len() {
        let z: BigInt = (1..n).map(|j| pow2(j - 1) * get(n - 1, j)).sum();
        if z != get(n, 1) {
            return Err(Error::VerificationFailure(format!("p({n},1) = {}, recurrence gives {z}", get(n, 1))));
        }
        for k in 2..=n {
            let a: BigInt = get(n - 1, k - 1) + (k..n).map(|j| pow2(j - k) * get(n - 1, j)).sum::<BigInt>();
            if a != get(n, k) {
                return Err(Error::VerificationFailure(format!(
                    "p({n},{k}) = {}, recurrence gives {a}",
                    get(n, k)
                )));
            }
        }
    }
    let r = hill_triangle(p.len().saturating_sub(1), PathClass::All);
    for n in 1..=p.len() {
        for k in 1..=n {
            if r.get(n - 1, k - 1) != p.get(n - 1, k - 1) {
                return Err(Error::VerificationFailure(format!("p({n},{k}) differs from r({},{})", n - 1, k - 1)));
            }
        }
    }
    Ok(())
}

/// Value counts keyed by statistic value.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Histogram(pub BTreeMap<usize, u64>);

impl Histogram {
    pub fn from_values(values: impl IntoIterator<Item = usize>) -> Self {
        let mut h = BTreeMap::new();
        for v in values {
            *h.entry(v).or_insert(0) += 1;
        }
        Histogram(h)
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    /// Smallest key where the counts disagree, with both counts.
    pub fn first_difference(&self, other: &Histogram) -> Option<(usize, u64, u64)> {
        let keys: BTreeSet<usize> = self.0.keys().chain(other.0.keys()).copied().collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (self.0.get(&k).copied().unwrap_or(0), other.0.get(&k).copied().unwrap_or(0));
            (a != b).then_some((k, a, b))
        })
    }
}

impl fmt::Display for Histogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, c)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {c}")?;
        }
        f.write_str("}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionReport {
    pub n: usize,
    pub left_name: &'static str,
    pub left: Histogram,
    pub right_name: &'static str,
    pub right: Histogram,
}

impl DistributionReport {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }

    fn into_result(self) -> Result<Self> {
        match self.left.first_difference(&self.right) {
            None => Ok(self),
            Some((k, a, b)) => Err(Error::VerificationFailure(format!(
                "n = {}: {} has {a} at {k}, {} has {b}",
                self.n, self.left_name, self.right_name
            ))),
        }
    }
}

impl fmt::Display for DistributionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n = {}: {} {} / {} {}", self.n, self.left_name, self.left, self.right_name, self.right)
    }
}

/// Histograms of `iar` and `comp` over a set of permutations.
pub fn iar_comp_histograms(perms: &[Permutation], n: usize) -> DistributionReport {
    DistributionReport {
        n,
        left_name: "iar",
        left: Histogram::from_values(perms.iter().map(Permutation::iar)),
        right_name: "comp",
        right: Histogram::from_values(perms.iter().map(Permutation::comp)),
    }
}

/// `iar` and `comp` histograms over separable permutations of size `n`;
/// fails if they differ.
pub fn comp_vs_iar(n: usize) -> Result<DistributionReport> {
    check_size(n)?;
    iar_comp_histograms(&enumerate_separable(n), n).into_result()
}

/// `comp` over separable permutations of size `n + 1` against `1 + h0` over
/// all paths of semi-length `n`; fails if they differ.
pub fn comp_vs_paths(n: usize) -> Result<DistributionReport> {
    let perms = enumerate_separable(n + 1);
    DistributionReport {
        n,
        left_name: "comp",
        left: Histogram::from_values(perms.iter().map(Permutation::comp)),
        right_name: "1+h0",
        right: Histogram::from_values(enumerate_paths(n, PathClass::All).map(|p| 1 + p.stats().h0)),
    }
    .into_result()
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidPermutation("size 0".into()));
    }
    Ok(())
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.len() >= 10 { "," } else { "" };
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::InvalidPermutation(format!("bad entry {x:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(values)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    /// Counts factorizations `pi = sigma tau` with `sigma` nonempty and
    /// every letter of `sigma` below every letter of `tau`.
    fn comp_by_factoring(p: &Permutation) -> usize {
        let v = p.values();
        (1..=v.len())
            .filter(|&i| {
                let max_head = v[..i].iter().max().unwrap();
                v[i..].iter().all(|x| x > max_head)
            })
            .count()
    }

    #[test]
    fn parsing() {
        assert_eq!(perm("2413").values(), &[2, 4, 1, 3]);
        let long = Permutation::identity(10);
        assert_eq!(long.to_string(), "1,2,3,4,5,6,7,8,9,10");
        assert_eq!(perm("1,2,3,4,5,6,7,8,9,10"), long);
        assert!(matches!("112".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
        assert!(matches!("".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
        assert!(matches!("14".parse::<Permutation>(), Err(Error::InvalidPermutation(_))));
    }

    #[test]
    fn statistic_values() {
        let table = [
            ("123", 3, 3),
            ("132", 2, 2),
            ("213", 1, 2),
            ("231", 2, 1),
            ("312", 1, 1),
            ("321", 1, 1),
            ("2413", 2, 1),
            ("3142", 1, 1),
        ];
        for (s, iar, comp) in table {
            let p = perm(s);
            assert_eq!((p.iar(), p.comp()), (iar, comp), "{s}");
        }
        assert!(!perm("2413").is_separable());
        assert!(!perm("3142").is_separable());
        assert!(perm("123").is_separable());
        assert_eq!(perm("2413").descent_set(), BTreeSet::from([2]));
    }

    #[test]
    fn two_separability_tests_agree() {
        for n in 1..=8 {
            for p in all_permutations(n) {
                assert_eq!(p.is_separable(), !p.contains_forbidden_pattern(), "{p}");
                let rec = p.stat_record();
                let min_des = rec.des_set.iter().next().copied().unwrap_or(n);
                assert_eq!(rec.iar, min_des);
                assert_eq!(rec.comp, comp_by_factoring(&p));
            }
        }
    }

    #[test]
    fn separable_enumeration() {
        assert_eq!(enumerate_separable(1), vec![perm("1")]);
        assert_eq!(enumerate_separable(3), all_permutations(3));
        assert_eq!(enumerate_separable(4).len(), 22);
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_separable(n).len()).collect();
        assert_eq!(counts, [1, 2, 6, 22, 90, 394, 1806, 8558]);
        for n in 1..=7 {
            let filtered: Vec<_> = all_permutations(n).into_iter().filter(|p| p.is_separable()).collect();
            assert_eq!(enumerate_separable(n), filtered);
        }
    }

    #[test]
    fn iar_table() {
        let p = iar_triangle(6);
        assert_eq!(p.get(0, 0), Some(&BigInt::from(1)));
        let row4: Vec<i64> = p.row(3).iter().map(|x| x.try_into().unwrap()).collect();
        assert_eq!(row4, [11, 7, 3, 1]);
        check_iar_triangle(&p).unwrap();
    }

    #[test]
    fn distributions() {
        let r = comp_vs_iar(3).unwrap();
        assert_eq!(r.left.to_string(), "{1: 3, 2: 2, 3: 1}");
        let s4 = iar_comp_histograms(&all_permutations(4), 4);
        assert!(!s4.equal());
        let paths = comp_vs_paths(2).unwrap();
        assert_eq!(paths.right.to_string(), "{1: 3, 2: 2, 3: 1}");
        for n in 1..=6 {
            comp_vs_iar(n).unwrap();
            comp_vs_paths(n).unwrap();
        }
        assert!(matches!(comp_vs_iar(0), Err(Error::InvalidPermutation(_))));
    }
}
