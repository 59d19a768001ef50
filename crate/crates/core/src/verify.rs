//! Named verification suites. Each suite is a list of properties checked
//! exhaustively up to a size bound.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::bijections::{
    big_phi, big_phi_inv, big_psi, big_psi_inv, has_height_one_horizontal_before_first_closure, phi,
    phi_inv, psi, psi_inv, BitSeq, TritSeq,
};
use crate::error::{Error, Result};
use crate::paths::{check_three_term, enumerate_paths, hill_triangle, PathClass, SchroderPath};
use crate::perm::{
    all_permutations, check_iar_triangle, comp_vs_iar, comp_vs_paths, enumerate_separable, iar_comp_histograms,
    iar_triangle, Permutation,
};
use crate::riordan::{
    hill_az, little_hill_az, specialize, table1_suite, triangle_from_az, uv_triangle, weighted_oracle,
};
use crate::triangle::RiordanTriangle;
use crate::trees::{
    class_counts, embed_star, enumerate_trees, path_to_tree, rho, rho_inv, tau, tree_to_path, DiSkTree,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteId {
    Thm11,
    Thm12,
    Thm32,
    Thm41,
    Table1,
    Triangles,
    FzSulanke,
    Cor43,
    Thm42,
    Cor37Descents,
    PathTree,
    Roundtrips,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Thm11,
        SuiteId::Thm12,
        SuiteId::Thm32,
        SuiteId::Thm41,
        SuiteId::Table1,
        SuiteId::Triangles,
        SuiteId::FzSulanke,
        SuiteId::Cor43,
        SuiteId::Thm42,
        SuiteId::Cor37Descents,
        SuiteId::PathTree,
        SuiteId::Roundtrips,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SuiteId::Thm11 => "thm11",
            SuiteId::Thm12 => "thm12",
            SuiteId::Thm32 => "thm32",
            SuiteId::Thm41 => "thm41",
            SuiteId::Table1 => "table1",
            SuiteId::Triangles => "triangles",
            SuiteId::FzSulanke => "fz-sulanke",
            SuiteId::Cor43 => "cor43",
            SuiteId::Thm42 => "thm42",
            SuiteId::Cor37Descents => "cor37-descents",
            SuiteId::PathTree => "path-tree",
            SuiteId::Roundtrips => "roundtrips",
        }
    }

    /// Size bound used when none is given.
    pub fn default_n(self) -> usize {
        match self {
            SuiteId::Thm11 | SuiteId::Thm12 => 9,
            SuiteId::Thm32 | SuiteId::Thm41 => 8,
            SuiteId::Table1 | SuiteId::Triangles => 12,
            SuiteId::FzSulanke => 20,
            SuiteId::Cor43 | SuiteId::Roundtrips => 9,
            SuiteId::Thm42 | SuiteId::Cor37Descents | SuiteId::PathTree => 8,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            SuiteId::Thm11 => "hill recurrences for all paths; phi and Phi bijections",
            SuiteId::Thm12 => "hill recurrences for little paths; psi and Psi bijections",
            SuiteId::Thm32 => "rho bijection, tree class sizes, iar triangle",
            SuiteId::Thm41 => "polynomial triangle against weighted enumeration",
            SuiteId::Table1 => "sixteen integer specializations and the Pascal case",
            SuiteId::Triangles => "small triangles and A/Z reconstruction",
            SuiteId::FzSulanke => "three-term recurrence for the large numbers",
            SuiteId::Cor43 => "iar and comp equidistribution on separable permutations",
            SuiteId::Thm42 => "comp against 1 + h0 on paths",
            SuiteId::Cor37Descents => "descent sets against minus-position sets",
            SuiteId::PathTree => "composite bijection from paths to trees",
            SuiteId::Roundtrips => "little/hill-free swap, tau, text formats",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::DomainMismatch(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyResult {
    pub name: String,
    pub instances: u64,
    /// `Err` holds the first counterexample.
    pub outcome: std::result::Result<(), String>,
    pub elapsed: Duration,
}

impl PropertyResult {
    pub fn ok(&self) -> bool {
        self.outcome.is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub n: usize,
    pub properties: Vec<PropertyResult>,
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.properties.iter().all(PropertyResult::ok)
    }

    pub fn first_failure(&self) -> Option<&PropertyResult> {
        self.properties.iter().find(|p| !p.ok())
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "suite {} (n = {}): {}", self.suite, self.n, self.suite.description())?;
        for p in &self.properties {
            let status = if p.ok() { "ok  " } else { "FAIL" };
            writeln!(
                f,
                "  {status} {} [{} instances, {:.3}s]",
                p.name,
                p.instances,
                p.elapsed.as_secs_f64()
            )?;
            if let Err(e) = &p.outcome {
                writeln!(f, "       counterexample: {e}")?;
            }
        }
        let verdict = if self.ok() { "ok" } else { "FAILED" };
        let count = self.properties.len();
        let noun = if count == 1 { "property" } else { "properties" };
        write!(f, "result: {verdict} ({count} {noun}, {:.3}s)", self.elapsed.as_secs_f64())
    }
}

type Outcome = std::result::Result<u64, String>;

fn property(name: impl Into<String>, f: impl FnOnce() -> Outcome) -> PropertyResult {
    let start = Instant::now();
    let (instances, outcome) = match f() {
        Ok(n) => (n, Ok(())),
        Err(e) => (0, Err(e)),
    };
    PropertyResult { name: name.into(), instances, outcome, elapsed: start.elapsed() }
}

/// Runs `suite` up to size `n` on `jobs` worker threads (one if `None`).
pub fn run_suite(suite: SuiteId, n: usize, jobs: Option<usize>) -> Result<SuiteReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(1).max(1))
        .build()
        .map_err(|e| Error::VerificationFailure(format!("thread pool: {e}")))?;
    let start = Instant::now();
    let properties = pool.install(|| suite_properties(suite, n));
    Ok(SuiteReport { suite, n, properties, elapsed: start.elapsed() })
}

fn suite_properties(suite: SuiteId, n: usize) -> Vec<PropertyResult> {
    match suite {
        SuiteId::Thm11 => vec![
            property(format!("column recurrences for all paths, rows 1..={}", n.max(12)), || {
                hill_recurrences(n.max(12), false)
            }),
            property(format!("phi is a bijection onto hill-free paths, sizes 1..={n}"), || {
                (1..=n).map(phi_bijection).sum()
            }),
            property(format!("Phi is a bijection onto each hill class, sizes 1..={n}"), || {
                (1..=n).map(big_phi_bijection).sum()
            }),
        ],
        SuiteId::Thm12 => vec![
            property(format!("column recurrences for little paths, rows 1..={}", n.max(12)), || {
                hill_recurrences(n.max(12), true)
            }),
            property(format!("psi is a bijection onto little hill-free paths, sizes 1..={n}"), || {
                (1..=n).map(psi_bijection).sum()
            }),
            property(format!("Psi is a bijection onto each little hill class, sizes 1..={n}"), || {
                (1..=n).map(big_psi_bijection).sum()
            }),
        ],
        SuiteId::Thm32 => vec![
            property(format!("rho splits every tree class with the embedded part, sizes 2..={n}"), || {
                (2..=n).map(rho_decomposition).sum()
            }),
            property(format!("tree class sizes equal hill counts, sizes 1..={n}"), || tree_class_sizes(n)),
            property(format!("iar triangle recurrences and identity, sizes 1..={}", n + 1), || {
                let p = iar_triangle(n + 1);
                check_iar_triangle(&p).map_err(|e| e.to_string())?;
                Ok(p.row_sums().iter().map(|x| u64::try_from(x).unwrap_or(u64::MAX)).sum())
            }),
        ],
        SuiteId::Thm41 => vec![
            property(format!("polynomial entries equal weighted enumeration, rows 0..={n}"), || uv_vs_oracle(n)),
            property(format!("(1,1) and (0,1) specializations, rows 0..={n}"), || uv_specializations(n)),
        ],
        SuiteId::Table1 => vec![
            property("row-sum prefixes at sixteen (u, v) pairs", || {
                let lines = table1_suite(n.max(4)).map_err(|e| e.to_string())?;
                Ok(lines.len() as u64)
            }),
            property(format!("(1,-1) specialization is Pascal's triangle, rows 0..={n}"), || pascal_check(n)),
        ],
        SuiteId::Triangles => vec![
            property("rows 0..=4 of both hill triangles", small_triangles),
            property(format!("A/Z reconstruction of both hill triangles, rows 0..={n}"), || az_reconstruction(n)),
        ],
        SuiteId::FzSulanke => vec![property(format!("three-term recurrence, 1 <= n <= {n}"), || {
            check_three_term(n).map(|r| r.checked.len() as u64).map_err(|e| e.to_string())
        })],
        SuiteId::Cor43 => vec![
            property(format!("iar and comp equidistributed, sizes 1..={n}"), || {
                (1..=n).map(|m| comp_vs_iar(m).map(|r| r.left.total()).map_err(|e| e.to_string())).sum()
            }),
            property("tabulated (iar, comp) pairs", sampled_iar_comp),
            property("iar and comp differ on all permutations of size 4", || {
                let r = iar_comp_histograms(&all_permutations(4), 4);
                if r.equal() {
                    return Err(format!("histograms coincide: {r}"));
                }
                Ok(24)
            }),
        ],
        SuiteId::Thm42 => vec![property(format!("comp against 1 + h0, path sizes 0..={n}"), || {
            (0..=n).map(|m| comp_vs_paths(m).map(|r| r.left.total()).map_err(|e| e.to_string())).sum()
        })],
        SuiteId::Cor37Descents => vec![property(format!("descent sets against minus positions, sizes 1..={n}"), || {
            (1..=n).map(descent_multisets).sum()
        })],
        SuiteId::PathTree => vec![property(format!("path_to_tree is a bijection, sizes 0..={n}"), || {
            (0..=n).map(path_tree_bijection).sum()
        })],
        SuiteId::Roundtrips => vec![
            property(format!("little and hill-free paths swap bijectively, sizes 0..={n}"), || {
                (0..=n).map(little_hill_free_swap).sum()
            }),
            property(format!("tau is an involution, trees of size 1..={}", n.saturating_sub(1)), || {
                tau_involution(n)
            }),
            property(format!("text formats roundtrip, sizes 0..={}", n.min(7)), || text_roundtrips(n.min(7))),
        ],
    }
}

fn first_error<T: Send>(results: Vec<std::result::Result<T, String>>) -> std::result::Result<Vec<T>, String> {
    results.into_iter().collect()
}

/// Images must be distinct and match the target set exactly.
fn same_set<T: Eq + Hash + Clone + fmt::Display>(images: Vec<T>, target: Vec<T>) -> Outcome {
    let mut seen = HashSet::with_capacity(images.len());
    for x in &images {
        if !seen.insert(x.clone()) {
            return Err(format!("{x} is hit twice"));
        }
    }
    if let Some(missing) = target.iter().find(|x| !seen.contains(*x)) {
        return Err(format!("{missing} is never hit"));
    }
    if images.len() != target.len() {
        return Err(format!("{} images for {} targets", images.len(), target.len()));
    }
    Ok(images.len() as u64)
}

fn pairs<S: Clone + Send>(
    m: usize,
    class: PathClass,
    seqs: impl Fn(usize) -> Option<Vec<S>>,
) -> Vec<(SchroderPath, S)> {
    let mut out = Vec::new();
    for p in enumerate_paths(m - 1, class) {
        if let Some(list) = seqs(p.hills()) {
            out.extend(list.into_iter().map(|s| (p.clone(), s)));
        }
    }
    out
}

fn check_map<S>(
    domain: Vec<(SchroderPath, S)>,
    target: Vec<SchroderPath>,
    forward: impl Fn(&SchroderPath, &S) -> Result<SchroderPath> + Sync,
    inverse: impl Fn(&SchroderPath) -> Result<(SchroderPath, S)> + Sync,
    extra: impl Fn(&S, &SchroderPath) -> std::result::Result<(), String> + Sync,
) -> Outcome
where
    S: PartialEq + fmt::Display + Send + Sync,
{
    let images = first_error(
        domain
            .par_iter()
            .map(|(p, s)| {
                let q = forward(p, s).map_err(|e| format!("({p}, {s}): {}", e.name()))?;
                extra(s, &q).map_err(|e| format!("({p}, {s}) -> {q}: {e}"))?;
                match inverse(&q) {
                    Ok((p2, s2)) if &p2 == p && &s2 == s => Ok(q),
                    Ok((p2, s2)) => Err(format!("({p}, {s}) -> {q} -> ({p2}, {s2})")),
                    Err(e) => Err(format!("({p}, {s}) -> {q}: inverse fails with {}", e.name())),
                }
            })
            .collect(),
    )?;
    first_error(
        target
            .par_iter()
            .map(|q| {
                let (p, s) = inverse(q).map_err(|e| format!("{q}: {}", e.name()))?;
                match forward(&p, &s) {
                    Ok(q2) if &q2 == q => Ok(()),
                    other => Err(format!("{q} -> ({p}, {s}) -> {other:?}")),
                }
            })
            .collect(),
    )?;
    same_set(images, target)
}

fn phi_bijection(m: usize) -> Outcome {
    let domain = pairs(m, PathClass::All, |k| Some(BitSeq::all(k).collect()));
    let target = enumerate_paths(m, PathClass::HillFree).collect();
    check_map(domain, target, phi, phi_inv, |_, _| Ok(()))
}

fn big_phi_bijection(m: usize) -> Outcome {
    let mut total = 0;
    for k in 1..=m {
        let domain = pairs(m, PathClass::All, |j| match j {
            _ if j + 1 == k => Some(vec![BitSeq::empty()]),
            _ if j >= k => Some(BitSeq::all(j - k).collect()),
            _ => None,
        });
        let target = enumerate_paths(m, PathClass::All).filter(|q| q.hills() == k).collect();
        total += check_map(domain, target, |p, b| big_phi(p, b, k), big_phi_inv, |_, _| Ok(()))?;
    }
    Ok(total)
}

fn psi_bijection(m: usize) -> Outcome {
    let domain = pairs(m, PathClass::Little, |k| (k >= 1).then(|| TritSeq::all(k).collect()));
    let target = enumerate_paths(m, PathClass::LittleHillFree).collect();
    check_map(domain, target, psi, psi_inv, |t: &TritSeq, q| {
        let flagged = has_height_one_horizontal_before_first_closure(q);
        if flagged != (t.trits().last() == Some(&1)) {
            return Err("branch predicate disagrees with the last trit".into());
        }
        Ok(())
    })
}

fn big_psi_bijection(m: usize) -> Outcome {
    let mut total = 0;
    for k in 1..=m {
        let domain = pairs(m, PathClass::Little, |j| match j {
            _ if j + 1 == k => Some(vec![TritSeq::empty()]),
            _ if j > k => Some(TritSeq::all(j - k).collect()),
            _ => None,
        });
        let target = enumerate_paths(m, PathClass::Little).filter(|q| q.hills() == k).collect();
        total += check_map(domain, target, |p, t| big_psi(p, t, k), big_psi_inv, |_, _| Ok(()))?;
    }
    Ok(total)
}

fn hill_recurrences(n_max: usize, little: bool) -> Outcome {
    let class = if little { PathClass::Little } else { PathClass::All };
    let r = hill_triangle(n_max, class);
    let get = |n: usize, k: usize| r.get(n, k).cloned().unwrap_or_default();
    // weight of column j when feeding column k: 2^(j-k) or 2*3^(j-k-1)
    let weight = |gap: usize| -> Option<BigInt> {
        if little {
            (gap >= 1).then(|| BigInt::from(2) * BigInt::from(3).pow(gap as u32 - 1))
        } else {
            Some(BigInt::one() << gap)
        }
    };
    let mut checked = 0;
    for n in 1..=n_max {
        for k in 0..=n {
            let base = if k == 0 { BigInt::default() } else { get(n - 1, k - 1) };
            let rest: BigInt = (k..n).filter_map(|j| weight(j - k).map(|w| w * get(n - 1, j))).sum();
            if base + &rest != get(n, k) {
                return Err(format!("row {n}, column {k}: {} != recurrence", get(n, k)));
            }
            checked += 1;
        }
    }
    Ok(checked)
}

fn rho_decomposition(m: usize) -> Outcome {
    let smaller = enumerate_trees(m - 1);
    let images = first_error(
        smaller
            .par_iter()
            .map(|t| {
                let mut out = vec![embed_star(t)];
                let j = t.first_minus_index();
                for k in 1..=j {
                    for b in BitSeq::all(j - k) {
                        let s = rho(t, &b, k).map_err(|e| format!("rho({t}, {b}, {k}): {}", e.name()))?;
                        if s.first_minus_index() != k || s.is_star() {
                            return Err(format!("rho({t}, {b}, {k}) = {s} lands in the wrong class"));
                        }
                        match rho_inv(&s) {
                            Ok((t2, b2)) if &t2 == t && b2 == b => {}
                            other => return Err(format!("rho({t}, {b}, {k}) = {s} -> {other:?}")),
                        }
                        out.push(s);
                    }
                }
                Ok(out)
            })
            .collect(),
    )?;
    let target = enumerate_trees(m);
    first_error(
        target
            .par_iter()
            .map(|s| {
                if s.is_star() {
                    return Ok(());
                }
                let (t, b) = rho_inv(s).map_err(|e| format!("{s}: {}", e.name()))?;
                match rho(&t, &b, s.first_minus_index()) {
                    Ok(s2) if &s2 == s => Ok(()),
                    other => Err(format!("{s} -> ({t}, {b}) -> {other:?}")),
                }
            })
            .collect(),
    )?;
    same_set(images.concat(), target)
}

fn tree_class_sizes(n: usize) -> Outcome {
    let r = hill_triangle(n.saturating_sub(1), PathClass::All);
    for m in 1..=n {
        let counts = class_counts(m);
        for (k, c) in counts.iter().enumerate() {
            if BigInt::from(*c) != r.get(m - 1, k).cloned().unwrap_or_default() {
                return Err(format!("class ({m}, {}) has {c} trees", k + 1));
            }
        }
    }
    Ok(n as u64)
}

fn uv_vs_oracle(n: usize) -> Outcome {
    let t = uv_triangle(n);
    let cells: Vec<(usize, usize)> = (0..=n).flat_map(|i| (0..=i).map(move |k| (i, k))).collect();
    first_error(
        cells
            .par_iter()
            .map(|&(i, k)| {
                let oracle = weighted_oracle(i, k);
                let entry = t.get(i, k).expect("in range");
                if entry == &oracle {
                    Ok(())
                } else {
                    Err(format!("({i}, {k}): {entry} vs {oracle}"))
                }
            })
            .collect(),
    )?;
    Ok(cells.len() as u64)
}

fn uv_specializations(n: usize) -> Outcome {
    let t = uv_triangle(n);
    for (u, v, class) in [(1, 1, PathClass::All), (0, 1, PathClass::Little)] {
        if specialize(&t, &BigInt::from(u), &BigInt::from(v)) != hill_triangle(n, class) {
            return Err(format!("specialization at ({u}, {v}) differs"));
        }
    }
    Ok(2)
}

fn pascal_check(n: usize) -> Outcome {
    let t = specialize(&uv_triangle(n), &BigInt::from(1), &BigInt::from(-1));
    let mut row = vec![BigInt::one()];
    for i in 0..=n {
        if t.row(i) != row.as_slice() {
            return Err(format!("row {i}"));
        }
        let mut next = vec![BigInt::one(); i + 2];
        for k in 1..=i {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
    Ok(n as u64 + 1)
}

fn int_rows(rows: &[&[i64]]) -> RiordanTriangle<BigInt> {
    RiordanTriangle::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
        .expect("triangular")
}

/// The first five rows of both integer triangles, as tabulated.
pub fn expected_small_triangles() -> (RiordanTriangle<BigInt>, RiordanTriangle<BigInt>) {
    (
        int_rows(&[&[1], &[1, 1], &[3, 2, 1], &[11, 7, 3, 1], &[45, 28, 12, 4, 1]]),
        int_rows(&[&[1], &[0, 1], &[2, 0, 1], &[6, 4, 0, 1], &[26, 12, 6, 0, 1]]),
    )
}

fn small_triangles() -> Outcome {
    let (all, little) = expected_small_triangles();
    if hill_triangle(4, PathClass::All) != all {
        return Err("all-paths triangle differs".into());
    }
    if hill_triangle(4, PathClass::Little) != little {
        return Err("little-paths triangle differs".into());
    }
    Ok(30)
}

fn az_reconstruction(n: usize) -> Outcome {
    let len = n.max(1);
    let all = triangle_from_az(&hill_az(len), n).map_err(|e| e.to_string())?;
    if all != hill_triangle(n, PathClass::All) {
        return Err("all-paths triangle differs".into());
    }
    let little = triangle_from_az(&little_hill_az(len), n).map_err(|e| e.to_string())?;
    if little != hill_triangle(n, PathClass::Little) {
        return Err("little-paths triangle differs".into());
    }
    Ok(2 * (n as u64 + 1))
}

/// `(permutation, iar, comp)` rows of the small comparison table.
pub const IAR_COMP_SAMPLES: [(&str, usize, usize); 8] = [
    ("123", 3, 3),
    ("132", 2, 2),
    ("213", 1, 2),
    ("231", 2, 1),
    ("312", 1, 1),
    ("321", 1, 1),
    ("2413", 2, 1),
    ("3142", 1, 1),
];

fn sampled_iar_comp() -> Outcome {
    for (s, iar, comp) in IAR_COMP_SAMPLES {
        let p: Permutation = s.parse().map_err(|e: Error| e.to_string())?;
        if (p.iar(), p.comp()) != (iar, comp) {
            return Err(format!("{s}: got ({}, {})", p.iar(), p.comp()));
        }
    }
    Ok(IAR_COMP_SAMPLES.len() as u64)
}

fn descent_multisets(m: usize) -> Outcome {
    let mut perms: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for p in enumerate_separable(m) {
        *perms.entry(p.descent_set().into_iter().collect()).or_default() += 1;
    }
    let mut trees: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for t in enumerate_trees(m) {
        *trees.entry(t.minus_positions().into_iter().collect()).or_default() += 1;
    }
    if perms != trees {
        let key = perms
            .keys()
            .chain(trees.keys())
            .find(|k| perms.get(*k) != trees.get(*k))
            .cloned()
            .unwrap_or_default();
        return Err(format!(
            "size {m}, set {key:?}: {} permutations, {} trees",
            perms.get(&key).copied().unwrap_or(0),
            trees.get(&key).copied().unwrap_or(0)
        ));
    }
    Ok(perms.values().sum())
}

fn path_tree_bijection(m: usize) -> Outcome {
    let paths: Vec<SchroderPath> = enumerate_paths(m, PathClass::All).collect();
    let trees = first_error(
        paths
            .par_iter()
            .map(|p| {
                let t = path_to_tree(p).map_err(|e| format!("{p}: {}", e.name()))?;
                if t.len() != m || t.first_minus_index() != p.hills() + 1 {
                    return Err(format!("{p} -> {t} has the wrong shape"));
                }
                match tree_to_path(&t) {
                    Ok(q) if &q == p => Ok(t),
                    other => Err(format!("{p} -> {t} -> {other:?}")),
                }
            })
            .collect(),
    )?;
    same_set::<DiSkTree>(trees, enumerate_trees(m + 1))
}

fn little_hill_free_swap(m: usize) -> Outcome {
    let little: Vec<SchroderPath> = enumerate_paths(m, PathClass::Little).collect();
    let hill_free: Vec<SchroderPath> = enumerate_paths(m, PathClass::HillFree).collect();
    let images = first_error(
        little
            .iter()
            .map(|p| {
                let q = p.hills_to_ground_horizontals();
                if q.hills() != 0 || q.ground_horizontals_to_hills() != *p {
                    return Err(format!("{p} -> {q}"));
                }
                Ok(q)
            })
            .collect(),
    )?;
    for q in &hill_free {
        let p = q.ground_horizontals_to_hills();
        if !p.is_little() || p.hills_to_ground_horizontals() != *q {
            return Err(format!("{q} -> {p}"));
        }
    }
    let count = same_set(images, hill_free)?;
    let r = hill_triangle(m, PathClass::All);
    let s = hill_triangle(m, PathClass::Little).row_sums();
    if r.get(m, 0) != s.get(m) {
        return Err(format!("r({m}, 0) != s({m})"));
    }
    Ok(count)
}

fn tau_involution(n: usize) -> Outcome {
    let mut count = 0;
    for m in 2..=n {
        for t in enumerate_trees(m) {
            let f = tau(&t).map_err(|e| format!("{t}: {}", e.name()))?;
            let shape = |x: &DiSkTree| (1..=x.len()).map(|i| (x.left_child(i), x.right_child(i))).collect::<Vec<_>>();
            if shape(&f) != shape(&t) || tau(&f).ok().as_ref() != Some(&t) {
                return Err(format!("{t} -> {f}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn text_roundtrips(n: usize) -> Outcome {
    let mut count = 0;
    for m in 0..=n {
        for p in enumerate_paths(m, PathClass::All) {
            if p.to_string().parse::<SchroderPath>().ok().as_ref() != Some(&p) {
                return Err(format!("path {p}"));
            }
            count += 1;
        }
        for t in enumerate_trees(m + 1) {
            if t.to_string().parse::<DiSkTree>().ok().as_ref() != Some(&t) {
                return Err(format!("tree {t}"));
            }
            count += 1;
        }
        if m >= 1 {
            for p in all_permutations(m) {
                if p.to_string().parse::<Permutation>().ok().as_ref() != Some(&p) {
                    return Err(format!("permutation {p}"));
                }
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_roundtrip() {
        for id in SuiteId::ALL {
            assert_eq!(id.as_str().parse::<SuiteId>().unwrap(), id);
        }
        assert!("thm99".parse::<SuiteId>().is_err());
    }

    #[test]
    fn every_suite_passes_at_small_size() {
        for id in SuiteId::ALL {
            let rep = run_suite(id, 5, Some(2)).unwrap();
            assert!(rep.ok(), "{rep}");
        }
    }

    #[test]
    fn report_lists_properties() {
        let rep = run_suite(SuiteId::FzSulanke, 20, None).unwrap();
        let text = rep.to_string();
        assert!(text.contains("ok   three-term recurrence, 1 <= n <= 20 [20 instances"));
        assert!(text.ends_with("s)"));
    }
}
