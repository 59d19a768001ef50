//! Triangles built from A- and Z-sequences, and the `(u, v)`-weighted hill
//! triangle whose entries are polynomials.

use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::paths::{enumerate_paths, PathClass};
use crate::poly::BivarPoly;
use crate::triangle::RiordanTriangle;

/// Truncated Z- and A-sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AzSequences<T> {
    pub z: Vec<T>,
    pub a: Vec<T>,
}

/// `A = (1, u, (1+v), (1+v)(2-u+v), ...)`, `Z = (u, (1+v), (1+v)(2-u+v), ...)`,
/// both of length `len`.
pub fn az_from_uv(len: usize) -> AzSequences<BivarPoly> {
    let one = BivarPoly::one();
    let u = BivarPoly::u();
    let one_plus_v = &one + &BivarPoly::v();
    let ratio = BivarPoly::constant(2) - u.clone() + BivarPoly::v();
    let mut tail = Vec::with_capacity(len);
    let mut term = one_plus_v;
    for _ in 0..len {
        tail.push(term.clone());
        term = &term * &ratio;
    }
    let mut z = vec![u.clone()];
    z.extend(tail.iter().cloned());
    z.truncate(len);
    let mut a = vec![one, u];
    a.extend(tail);
    a.truncate(len);
    AzSequences { z, a }
}

/// Rows `0..=n_max` of the triangle with `d(0,0) = 1`,
/// `d(n,0) = sum_j z_j d(n-1,j)` and `d(n,k) = sum_j a_j d(n-1,k-1+j)`.
pub fn triangle_from_az<T>(az: &AzSequences<T>, n_max: usize) -> Result<RiordanTriangle<T>>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    let needed = n_max;
    for available in [az.z.len(), az.a.len()] {
        if available < needed {
            return Err(Error::InsufficientSequenceLength { needed, available });
        }
    }
    let mut rows: Vec<Vec<T>> = vec![vec![T::one()]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = Vec::with_capacity(n + 1);
        row.push(dot(&az.z, prev));
        for k in 1..=n {
            row.push(dot(&az.a, &prev[k - 1..]));
        }
        rows.push(row);
    }
    Ok(RiordanTriangle::from_rows_unchecked(rows))
}

fn dot<T>(coeffs: &[T], values: &[T]) -> T
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T> + Add<&'a T, Output = T>,
{
    coeffs.iter().zip(values).fold(T::zero(), |acc, (c, x)| &acc + &(c * x))
}

/// Rows `0..=n_max` of the polynomial hill triangle.
pub fn uv_triangle(n_max: usize) -> RiordanTriangle<BivarPoly> {
    triangle_from_az(&az_from_uv(n_max.max(2)), n_max).expect("sequences cover every row")
}

/// Sum of `u^h0 v^h` over paths of semi-length `n` with `k` hills, by
/// enumeration.
pub fn weighted_oracle(n: usize, k: usize) -> BivarPoly {
    enumerate_paths(n, PathClass::All)
        .filter(|p| p.hills() == k)
        .map(|p| {
            let s = p.stats();
            BivarPoly::monomial(1, s.h0 as u32, s.h as u32)
        })
        .sum()
}

pub fn specialize(tri: &RiordanTriangle<BivarPoly>, u: &BigInt, v: &BigInt) -> RiordanTriangle<BigInt> {
    tri.map(|p| p.eval(u, v))
}

/// Integer A/Z sequences for the unrestricted hill triangle.
pub fn hill_az(len: usize) -> AzSequences<BigInt> {
    let pow2 = |e: usize| BigInt::one() << e;
    AzSequences {
        z: (0..len).map(pow2).collect(),
        a: (0..len).map(|j| if j < 2 { BigInt::one() } else { pow2(j - 1) }).collect(),
    }
}

/// Integer A/Z sequences for the hill triangle of little paths.
pub fn little_hill_az(len: usize) -> AzSequences<BigInt> {
    let two_pow3 = |e: usize| BigInt::from(2) * BigInt::from(3).pow(e as u32);
    AzSequences {
        z: (0..len).map(|j| if j == 0 { BigInt::zero() } else { two_pow3(j - 1) }).collect(),
        a: (0..len)
            .map(|j| match j {
                0 => BigInt::one(),
                1 => BigInt::zero(),
                _ => two_pow3(j - 2),
            })
            .collect(),
    }
}

#[derive(Debug, Clone, Deserialize)]
struct RowSumFile {
    pair: Vec<RowSumPrefix>,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct RowSumPrefix {
    pub u: i64,
    pub v: i64,
    pub row_sums: Vec<i64>,
}

const ROW_SUMS_DATA: &str = include_str!("../data/row_sums.toml");

/// The sixteen specializations and their expected row-sum prefixes.
pub fn stored_row_sums() -> Vec<RowSumPrefix> {
    toml::from_str::<RowSumFile>(ROW_SUMS_DATA).expect("embedded table parses").pair
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecializationLine {
    pub u: i64,
    pub v: i64,
    pub expected: Vec<BigInt>,
    pub computed: Vec<BigInt>,
}

impl SpecializationLine {
    pub fn ok(&self) -> bool {
        self.computed.starts_with(&self.expected)
    }
}

/// Row sums at each tabulated `(u, v)` for rows `0..=n_max`, compared with
/// the stored prefixes. Fails on the first mismatch.
pub fn table1_suite(n_max: usize) -> Result<Vec<SpecializationLine>> {
    let expected = stored_row_sums();
    let depth = expected.iter().map(|e| e.row_sums.len()).max().unwrap_or(0);
    let tri = uv_triangle(n_max.max(depth.saturating_sub(1)));
    let lines: Vec<SpecializationLine> = expected
        .par_iter()
        .map(|e| {
            let sums = specialize(&tri, &BigInt::from(e.u), &BigInt::from(e.v)).row_sums();
            SpecializationLine {
                u: e.u,
                v: e.v,
                expected: e.row_sums.iter().map(|&x| BigInt::from(x)).collect(),
                computed: sums.into_iter().take(n_max.max(depth.saturating_sub(1)) + 1).collect(),
            }
        })
        .collect();
    if let Some(bad) = lines.iter().find(|l| !l.ok()) {
        let row = bad
            .expected
            .iter()
            .zip(&bad.computed)
            .position(|(a, b)| a != b)
            .unwrap_or(bad.computed.len());
        return Err(Error::VerificationFailure(format!(
            "(u, v) = ({}, {}): row {row} sum differs",
            bad.u, bad.v
        )));
    }
    Ok(lines)
}

/// Parses an OEIS b-file: `index value` per line, `#` comments and blank
/// lines ignored.
pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigInt)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let bad = || Error::SyntaxError { position: lineno + 1, message: format!("bad b-file line {line:?}") };
        let idx = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        let val = parts.next().and_then(|x| x.parse().ok()).ok_or_else(bad)?;
        out.push((idx, val));
    }
    Ok(out)
}

/// Compares `seq[i]` with each b-file entry whose index falls inside `seq`.
/// Returns how many entries were compared.
pub fn compare_with_bfile(seq: &[BigInt], entries: &[(usize, BigInt)]) -> Result<usize> {
    let mut compared = 0;
    for (i, val) in entries {
        if let Some(x) = seq.get(*i) {
            if x != val {
                return Err(Error::VerificationFailure(format!("index {i}: computed {x}, b-file has {val}")));
            }
            compared += 1;
        }
    }
    Ok(compared)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::hill_triangle;

    fn ints(row: &[BigInt]) -> Vec<i64> {
        row.iter().map(|x| x.try_into().unwrap()).collect()
    }

    fn n(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn uv_sequences() {
        let az = az_from_uv(5);
        let one_plus_v = BivarPoly::one() + BivarPoly::v();
        assert_eq!(az.a[2], one_plus_v);
        assert_eq!(az.z[1], one_plus_v);
        assert_eq!(az.a[3], &one_plus_v * &(BivarPoly::constant(2) - BivarPoly::u() + BivarPoly::v()));
        let at = |s: &[BivarPoly]| s.iter().map(|p| p.eval(&n(1), &n(1))).collect::<Vec<_>>();
        assert_eq!(ints(&at(&az.a)), [1, 1, 2, 4, 8]);
        assert_eq!(ints(&at(&az.z)), [1, 2, 4, 8, 16]);
    }

    #[test]
    fn pascal_from_az() {
        let az = AzSequences { z: vec![n(1), n(0), n(0)], a: vec![n(1), n(1), n(0)] };
        let t = triangle_from_az(&az, 3).unwrap();
        assert_eq!(ints(t.row(3)), [1, 3, 3, 1]);
        let short = AzSequences { z: vec![n(1)], a: vec![n(1), n(1)] };
        assert!(matches!(
            triangle_from_az(&short, 4),
            Err(Error::InsufficientSequenceLength { needed: 4, available: 1 })
        ));
    }

    #[test]
    fn uv_triangle_small_entries() {
        let t = uv_triangle(4);
        assert_eq!(t.get(1, 0).unwrap(), &BivarPoly::u());
        assert_eq!(t.get(1, 1).unwrap(), &BivarPoly::one());
        assert_eq!(t.get(2, 0).unwrap().to_string(), "u^2 + v + 1");
        assert_eq!(ints(specialize(&t, &n(1), &n(1)).row(4)), [45, 28, 12, 4, 1]);
        assert_eq!(ints(specialize(&t, &n(0), &n(1)).row(3)), [6, 4, 0, 1]);
        assert_eq!(weighted_oracle(1, 1), BivarPoly::one());
        assert_eq!(weighted_oracle(1, 0), BivarPoly::u());
    }

    #[test]
    fn matches_enumeration() {
        let t = uv_triangle(7);
        for nn in 0..=7 {
            for k in 0..=nn {
                assert_eq!(t.get(nn, k).unwrap(), &weighted_oracle(nn, k), "({nn},{k})");
            }
        }
        assert_eq!(specialize(&t, &n(1), &n(1)), hill_triangle(7, PathClass::All));
        assert_eq!(specialize(&t, &n(0), &n(1)), hill_triangle(7, PathClass::Little));
    }

    #[test]
    fn integer_sequences_reproduce_hill_triangles() {
        assert_eq!(triangle_from_az(&hill_az(10), 10).unwrap(), hill_triangle(10, PathClass::All));
        assert_eq!(
            triangle_from_az(&little_hill_az(10), 10).unwrap(),
            hill_triangle(10, PathClass::Little)
        );
    }

    #[test]
    fn stored_row_sums_reproduced() {
        assert_eq!(stored_row_sums().len(), 16);
        let lines = table1_suite(4).unwrap();
        assert!(lines.iter().all(SpecializationLine::ok));
    }

    #[test]
    fn bfile() {
        let entries = parse_bfile("# A006318\n0 1\n1 2\n\n2 6\n3 22\n").unwrap();
        assert_eq!(entries.len(), 4);
        let seq = hill_triangle(3, PathClass::All).row_sums();
        assert_eq!(compare_with_bfile(&seq, &entries).unwrap(), 4);
        let wrong = parse_bfile("2 7").unwrap();
        assert!(compare_with_bfile(&seq, &wrong).is_err());
        assert!(parse_bfile("x y").is_err());
    }
}
