//! Schröder paths: the word model, statistics, feature location, enumeration
//! and the hill-refined counting triangles.
//!
//! A path is a word over `U` (up), `D` (down) and `H` (horizontal of width
//! two). The height of a step is the height of its *ending* point, so a hill
//! is a `U` ending at height 1 immediately followed by a `D`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::triangle::RiordanTriangle;

/// Declaration order gives the enumeration order `U < D < H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    U,
    D,
    H,
}

impl Step {
    pub fn as_char(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
        }
    }

    fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::D => -1,
            Step::H => 0,
        }
    }

    /// Horizontal extent measured in unit steps.
    fn width(self) -> usize {
        match self {
            Step::H => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SchroderPath {
    steps: Vec<Step>,
}

/// Which family of paths to enumerate or count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PathClass {
    All,
    /// No horizontal at height 0.
    Little,
    HillFree,
    LittleHillFree,
}

impl PathClass {
    fn little(self) -> bool {
        matches!(self, PathClass::Little | PathClass::LittleHillFree)
    }
    fn hill_free(self) -> bool {
        matches!(self, PathClass::HillFree | PathClass::LittleHillFree)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathStats {
    pub semi_length: usize,
    pub hills: usize,
    pub peaks: usize,
    /// Horizontals at height 0.
    pub h0: usize,
    /// Horizontals at positive height.
    pub h: usize,
    pub is_little: bool,
}

/// A down, `m` horizontals and an up, all at the same `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Basin {
    pub start: usize,
    pub m: usize,
    pub height: i64,
}

/// Step indices (0-based) of the local features of a path.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FeatureList {
    /// Index of the `U` of each hill.
    pub hills: Vec<usize>,
    pub basins: Vec<Basin>,
    /// Start index of every 0-basin.
    pub valleys: Vec<usize>,
    /// Downs ending at height 0.
    pub closures: Vec<usize>,
    /// `(index, height)` of every horizontal.
    pub horizontals: Vec<(usize, i64)>,
}

impl SchroderPath {
    pub fn empty() -> Self {
        SchroderPath { steps: Vec::new() }
    }

    /// Validates the height profile.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        for (i, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(Error::NegativeHeight { position: i });
            }
        }
        if height != 0 {
            return Err(Error::NonzeroEnd { height });
        }
        Ok(SchroderPath { steps })
    }

    pub(crate) fn from_steps(steps: Vec<Step>) -> Self {
        let p = SchroderPath { steps };
        debug_assert!(p.is_valid(), "invalid path constructed: {p}");
        p
    }

    fn is_valid(&self) -> bool {
        let mut h = 0i64;
        for s in &self.steps {
            h += s.delta();
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn semi_length(&self) -> usize {
        self.steps.iter().map(|s| s.width()).sum::<usize>() / 2
    }

    /// Ending height of every step.
    pub fn heights(&self) -> Vec<i64> {
        step_heights(&self.steps, 0)
    }

    pub fn is_all_horizontal(&self) -> bool {
        self.steps.iter().all(|&s| s == Step::H)
    }

    /// Index of the `U` of each hill, left to right.
    pub fn hill_positions(&self) -> Vec<usize> {
        hill_positions(&self.steps, 0)
    }

    pub fn hills(&self) -> usize {
        self.hill_positions().len()
    }

    pub fn is_little(&self) -> bool {
        self.steps
            .iter()
            .zip(self.heights())
            .all(|(&s, h)| s != Step::H || h != 0)
    }

    pub fn stats(&self) -> PathStats {
        let heights = self.heights();
        let mut st = PathStats {
            semi_length: self.semi_length(),
            hills: 0,
            peaks: 0,
            h0: 0,
            h: 0,
            is_little: true,
        };
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::H if heights[i] == 0 => st.h0 += 1,
                Step::H => st.h += 1,
                Step::U if self.steps.get(i + 1) == Some(&Step::D) => {
                    st.peaks += 1;
                    if heights[i] == 1 {
                        st.hills += 1;
                    }
                }
                _ => {}
            }
        }
        st.is_little = st.h0 == 0;
        st
    }

    pub fn features(&self) -> FeatureList {
        let heights = self.heights();
        let steps = &self.steps;
        let mut f = FeatureList {
            hills: self.hill_positions(),
            ..FeatureList::default()
        };
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::H => f.horizontals.push((i, heights[i])),
                Step::D => {
                    if heights[i] == 0 {
                        f.closures.push(i);
                    }
                    let m = steps[i + 1..].iter().take_while(|&&t| t == Step::H).count();
                    if steps.get(i + 1 + m) == Some(&Step::U) {
                        f.basins.push(Basin { start: i, m, height: heights[i] });
                        if m == 0 {
                            f.valleys.push(i);
                        }
                    }
                }
                Step::U => {}
            }
        }
        f
    }

    /// Splits `p = p_1 UD p_2 ... p_k UD p_{k+1}` at its hills. Every
    /// component is hill-free.
    pub fn decompose_at_hills(&self) -> Vec<SchroderPath> {
        let mut parts = Vec::new();
        let mut start = 0;
        for pos in self.hill_positions() {
            parts.push(SchroderPath::from_steps(self.steps[start..pos].to_vec()));
            start = pos + 2;
        }
        parts.push(SchroderPath::from_steps(self.steps[start..].to_vec()));
        parts
    }

    /// Inverse of [`decompose_at_hills`](Self::decompose_at_hills).
    pub fn join_with_hills(parts: &[SchroderPath]) -> SchroderPath {
        let mut steps = Vec::new();
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                steps.extend([Step::U, Step::D]);
            }
            steps.extend_from_slice(&p.steps);
        }
        SchroderPath::from_steps(steps)
    }

    /// Replaces every horizontal at height 0 by a hill. Maps hill-free paths
    /// onto little paths.
    pub fn ground_horizontals_to_hills(&self) -> SchroderPath {
        let heights = self.heights();
        let mut out = Vec::with_capacity(self.steps.len() + 4);
        for (i, &s) in self.steps.iter().enumerate() {
            if s == Step::H && heights[i] == 0 {
                out.extend([Step::U, Step::D]);
            } else {
                out.push(s);
            }
        }
        SchroderPath::from_steps(out)
    }

    /// Replaces every hill by a horizontal at height 0. Maps little paths
    /// onto hill-free paths.
    pub fn hills_to_ground_horizontals(&self) -> SchroderPath {
        let hills = self.hill_positions();
        let mut out = Vec::with_capacity(self.steps.len());
        let mut i = 0;
        let mut next = hills.iter().peekable();
        while i < self.steps.len() {
            if next.peek() == Some(&&i) {
                next.next();
                out.push(Step::H);
                i += 2;
            } else {
                out.push(self.steps[i]);
                i += 1;
            }
        }
        SchroderPath::from_steps(out)
    }

    /// Multi-line ASCII drawing, for diagnostics.
    pub fn ascii_diagram(&self) -> String {
        let heights = self.heights();
        let top = heights.iter().copied().max().unwrap_or(0).max(0) as usize;
        let width: usize = self.steps.iter().map(|s| s.width()).sum();
        let mut grid = vec![vec![' '; width]; top + 1];
        let (mut x, mut y) = (0usize, 0i64);
        for (i, &s) in self.steps.iter().enumerate() {
            match s {
                Step::U => grid[top - y as usize][x] = '/',
                Step::D => grid[top - heights[i] as usize][x] = '\\',
                Step::H => {
                    grid[top - y as usize][x] = '_';
                    grid[top - y as usize][x + 1] = '_';
                }
            }
            x += s.width();
            y = heights[i];
        }
        grid.into_iter()
            .map(|r| r.into_iter().collect::<String>().trim_end().to_string())
            .skip_while(|r| r.is_empty())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

pub(crate) fn step_heights(steps: &[Step], start: i64) -> Vec<i64> {
    let mut h = start;
    steps
        .iter()
        .map(|s| {
            h += s.delta();
            h
        })
        .collect()
}

/// Hills of a word read from starting height `base`: peaks whose apex is one
/// above the word's own ground level.
pub(crate) fn hill_positions(steps: &[Step], base: i64) -> Vec<usize> {
    let heights = step_heights(steps, base);
    (0..steps.len().saturating_sub(1))
        .filter(|&i| steps[i] == Step::U && steps[i + 1] == Step::D && heights[i] == base + 1)
        .collect()
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                'H' => Ok(Step::H),
                found => Err(Error::IllegalCharacter { position: i, found }),
            })
            .collect::<Result<Vec<_>>>()?;
        SchroderPath::new(steps)
    }
}

pub fn parse_path(word: &str) -> Result<SchroderPath> {
    word.parse()
}

pub fn render_path(p: &SchroderPath) -> String {
    p.to_string()
}

/// Lazily yields every path of semi-length `n` in `class`, in lexicographic
/// order of words with `U < D < H`.
pub fn enumerate_paths(n: usize, class: PathClass) -> PathIter {
    PathIter {
        budget: 2 * n,
        class,
        steps: Vec::with_capacity(2 * n),
        heights: Vec::with_capacity(2 * n),
        used: 0,
        cursor: vec![0],
        fresh: true,
        done: false,
    }
}

pub struct PathIter {
    budget: usize,
    class: PathClass,
    steps: Vec<Step>,
    heights: Vec<i64>,
    used: usize,
    /// Next option to try at each depth.
    cursor: Vec<u8>,
    fresh: bool,
    done: bool,
}

const OPTIONS: [Step; 3] = [Step::U, Step::D, Step::H];

impl PathIter {
    fn height(&self) -> i64 {
        self.heights.last().copied().unwrap_or(0)
    }

    fn feasible(&self, s: Step) -> bool {
        let h = self.height();
        let nh = h + s.delta();
        let used = self.used + s.width();
        if nh < 0 || used > self.budget || nh as usize > self.budget - used {
            return false;
        }
        match s {
            Step::H => !(self.class.little() && h == 0),
            Step::D => !(self.class.hill_free() && h == 1 && self.steps.last() == Some(&Step::U)),
            Step::U => true,
        }
    }
}

impl Iterator for PathIter {
    type Item = SchroderPath;

    fn next(&mut self) -> Option<SchroderPath> {
        loop {
            if self.done {
                return None;
            }
            if self.fresh && self.used == self.budget {
                self.fresh = false;
                return Some(SchroderPath::from_steps(self.steps.clone()));
            }
            let depth = self.steps.len();
            let start = self.cursor[depth] as usize;
            match (start..3).find(|&o| self.feasible(OPTIONS[o])) {
                Some(o) => {
                    self.cursor[depth] = o as u8 + 1;
                    let s = OPTIONS[o];
                    let h = self.height() + s.delta();
                    self.steps.push(s);
                    self.heights.push(h);
                    self.used += s.width();
                    if self.cursor.len() == depth + 1 {
                        self.cursor.push(0);
                    } else {
                        self.cursor[depth + 1] = 0;
                    }
                    self.fresh = true;
                }
                None => match self.steps.pop() {
                    Some(s) => {
                        self.heights.pop();
                        self.used -= s.width();
                        self.fresh = false;
                    }
                    None => self.done = true,
                },
            }
        }
    }
}

/// `(n, k)` entry counts paths of semi-length `n` in `class` with `k` hills.
///
/// Computed by a transfer-matrix recursion over unit steps, so rows far beyond
/// the reach of enumeration are cheap. `class` must be `All` or `Little`;
/// the hill-free classes are column 0 of these.
pub fn hill_triangle(n_max: usize, class: PathClass) -> RiordanTriangle<BigInt> {
    let rows = (0..=n_max).map(|n| hill_row(n, class.little())).collect();
    RiordanTriangle::from_rows_unchecked(rows)
}

fn hill_row(n: usize, little: bool) -> Vec<BigInt> {
    // state index: (height, hills, last step was U ending at height 1)
    let hmax = n + 1;
    let kmax = n + 1;
    let idx = |h: usize, k: usize, f: usize| (h * kmax + k) * 2 + f;
    let size = hmax * kmax * 2;
    let width = 2 * n;
    let mut dp: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); size]; width + 1];
    dp[0][idx(0, 0, 0)] = BigInt::one();
    for u in 0..width {
        for h in 0..hmax {
            for k in 0..kmax {
                for f in 0..2 {
                    let c = dp[u][idx(h, k, f)].clone();
                    if c.is_zero() {
                        continue;
                    }
                    if h + 1 < hmax {
                        let nf = usize::from(h == 0);
                        dp[u + 1][idx(h + 1, k, nf)] += &c;
                    }
                    if h >= 1 {
                        let nk = k + f;
                        if nk < kmax {
                            dp[u + 1][idx(h - 1, nk, 0)] += &c;
                        }
                    }
                    if u + 2 <= width && !(little && h == 0) {
                        dp[u + 2][idx(h, k, 0)] += &c;
                    }
                }
            }
        }
    }
    (0..=n).map(|k| dp[width][idx(0, k, 0)].clone()).collect()
}

/// Large Schröder numbers `r(0..=n_max)` as row sums of the hill triangle.
pub fn schroder_sequence(n_max: usize) -> Vec<BigInt> {
    hill_triangle(n_max, PathClass::All).row_sums()
}

/// Little Schröder numbers `s(0..=n_max)`.
pub fn little_schroder_sequence(n_max: usize) -> Vec<BigInt> {
    hill_triangle(n_max, PathClass::Little).row_sums()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeTermReport {
    /// Values of `n` at which the identity was checked.
    pub checked: Vec<usize>,
    pub sequence: Vec<BigInt>,
}

/// Checks `3(2n+1) r(n) = (n+2) r(n+1) + (n-1) r(n-1)` for `1 <= n <= n_max`.
pub fn check_three_term(n_max: usize) -> Result<ThreeTermReport> {
    if n_max < 1 {
        return Err(Error::DomainMismatch("three-term check needs n_max >= 1".into()));
    }
    let r = schroder_sequence(n_max + 1);
    let mut checked = Vec::new();
    for n in 1..=n_max {
        let lhs = BigInt::from(3 * (2 * n + 1)) * &r[n];
        let rhs = BigInt::from(n + 2) * &r[n + 1] + BigInt::from(n - 1) * &r[n - 1];
        if lhs != rhs {
            return Err(Error::VerificationFailure(format!(
                "three-term recurrence fails at n = {n}: {lhs} != {rhs}"
            )));
        }
        checked.push(n);
    }
    Ok(ThreeTermReport { checked, sequence: r })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    fn words(n: usize, class: PathClass) -> Vec<String> {
        enumerate_paths(n, class).map(|p| p.to_string()).collect()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("").semi_length(), 0);
        assert_eq!(p("UHD").semi_length(), 2);
        assert!(matches!(parse_path("UDD"), Err(Error::NegativeHeight { position: 2 })));
        assert!(matches!(parse_path("UU"), Err(Error::NonzeroEnd { height: 2 })));
        assert!(matches!(
            parse_path("UxD"),
            Err(Error::IllegalCharacter { position: 1, found: 'x' })
        ));
        assert_eq!(render_path(&p("UD")), "UD");
        assert_eq!(render_path(&SchroderPath::empty()), "");
    }

    #[test]
    fn stats_examples() {
        let s = p("UD").stats();
        assert_eq!((s.hills, s.h0, s.h), (1, 0, 0));
        let s = p("HH").stats();
        assert_eq!((s.hills, s.h0, s.h, s.is_little), (0, 2, 0, false));
        assert_eq!(p("HHUDUHDUDUDHUDUDUDUD").stats().hills, 7);
        let s = p("UUDUHDD").stats();
        assert_eq!((s.peaks, s.hills, s.h), (1, 0, 1));
    }

    #[test]
    fn features_examples() {
        let f = p("UDHUD").features();
        assert_eq!(f.hills, vec![0, 3]);
        assert_eq!(f.horizontals, vec![(2, 0)]);
        assert!(f.basins.is_empty() || f.basins.iter().all(|b| b.m == 1));

        let f = p("UDHHUD").features();
        assert_eq!(f.hills, vec![0, 4]);
        assert_eq!(f.horizontals, vec![(2, 0), (3, 0)]);
        assert_eq!(f.basins, vec![Basin { start: 1, m: 2, height: 0 }]);
        assert!(f.valleys.is_empty());
        assert_eq!(f.closures, vec![1, 5]);

        let f = p("UDUUDDUD").features();
        assert_eq!(f.valleys, vec![1, 5]);
    }

    // Independent matcher: scan every window for D H^m U.
    fn brute_basins(p: &SchroderPath) -> Vec<Basin> {
        let w = p.to_string();
        let heights = p.heights();
        let mut out = Vec::new();
        for (i, c) in w.char_indices() {
            if c != 'D' {
                continue;
            }
            for m in 0..w.len() {
                let pat = format!("D{}U", "H".repeat(m));
                if w[i..].starts_with(&pat) {
                    out.push(Basin { start: i, m, height: heights[i] });
                }
            }
        }
        out
    }

    #[test]
    fn basins_match_brute_force() {
        for n in 0..=6 {
            for q in enumerate_paths(n, PathClass::All) {
                assert_eq!(q.features().basins, brute_basins(&q), "{q}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_paths(2, PathClass::All).count(), 6);
        assert_eq!(enumerate_paths(3, PathClass::Little).count(), 11);
        assert_eq!(words(2, PathClass::HillFree), vec!["UUDD", "UHD", "HH"]);
        assert_eq!(words(0, PathClass::All), vec![""]);
        assert_eq!(words(1, PathClass::All), vec!["UD", "H"]);
        assert_eq!(words(1, PathClass::LittleHillFree), Vec::<String>::new());
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        for n in 0..=6 {
            let all: Vec<_> = enumerate_paths(n, PathClass::All).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            for q in &all {
                assert_eq!(q.semi_length(), n);
            }
        }
    }

    #[test]
    fn triangle_examples() {
        let r = hill_triangle(4, PathClass::All);
        assert_eq!(r.row(0), &[BigInt::from(1)]);
        let row3: Vec<BigInt> = [11, 7, 3, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(r.row(3), row3.as_slice());
        let s = hill_triangle(4, PathClass::Little);
        let row4: Vec<BigInt> = [26, 12, 6, 0, 1].into_iter().map(BigInt::from).collect();
        assert_eq!(s.row(4), row4.as_slice());
    }

    #[test]
    fn triangle_matches_enumeration() {
        for class in [PathClass::All, PathClass::Little] {
            let tri = hill_triangle(8, class);
            for n in 0..=8 {
                let mut counts = vec![BigInt::zero(); n + 1];
                for q in enumerate_paths(n, class) {
                    counts[q.hills()] += 1;
                }
                assert_eq!(tri.row(n), counts.as_slice(), "{class:?} row {n}");
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(p("UD").decompose_at_hills(), vec![p(""), p("")]);
        assert_eq!(p("HH").decompose_at_hills(), vec![p("HH")]);
        assert_eq!(p("UDHUD").decompose_at_hills(), vec![p(""), p("H"), p("")]);
    }

    #[test]
    fn sequence_and_three_term() {
        let r: Vec<BigInt> = [1, 2, 6, 22, 90, 394].into_iter().map(BigInt::from).collect();
        assert_eq!(schroder_sequence(5), r);
        let s: Vec<BigInt> = [1, 1, 3, 11, 45, 197].into_iter().map(BigInt::from).collect();
        assert_eq!(little_schroder_sequence(5), s);
        // n = 1: 3*3*2 = 3*6 + 0*1; n = 2: 3*5*6 = 4*22 + 1*2
        assert_eq!(BigInt::from(3 * 3 * 2), BigInt::from(3 * 6));
        assert_eq!(BigInt::from(3 * 5 * 6), BigInt::from(4 * 22 + 2));
        let rep = check_three_term(4).unwrap();
        assert_eq!(rep.checked, vec![1, 2, 3, 4]);
        assert!(check_three_term(0).is_err());
    }

    #[test]
    fn numbers_exceed_u64() {
        let r = schroder_sequence(30);
        assert!(r[30] > BigInt::from(u64::MAX));
    }

    #[test]
    fn ascii_diagram_draws_profile() {
        assert_eq!(p("UHD").ascii_diagram(), " __\n/  \\");
        assert_eq!(p("UUDD").ascii_diagram(), " /\\\n/  \\");
    }
}
