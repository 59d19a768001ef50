//! Word-rewriting bijections behind the two hill recurrences:
//!
//! * `phi`: `R(n-1,k) x B_k -> R(n,0)` and its extension `big_phi` onto
//!   `R(n,k)`,
//! * `psi`: `S(n-1,k) x T_k -> S(n,0)` (little paths, almost-ternary
//!   sequences) and its extension `big_psi` onto `S(n,k)`.
//!
//! Bit and trit sequences are indexed from the left, matching the left to
//! right labelling of hills.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::paths::{hill_positions, step_heights, SchroderPath, Step};

use Step::{D, H, U};

/// A binary sequence `(b_1, ..., b_k)`; the empty sequence stands for both
/// `B_0` and the formal `B_{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BitSeq(Vec<u8>);

impl BitSeq {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(&d) = bits.iter().find(|&&d| d > 1) {
            return Err(Error::InvalidDigit { kind: "bit", found: char::from(b'0' + d.min(9)) });
        }
        Ok(BitSeq(bits))
    }

    pub fn empty() -> Self {
        BitSeq(Vec::new())
    }

    pub fn zeros(len: usize) -> Self {
        BitSeq(vec![0; len])
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All `2^len` sequences, in increasing binary order.
    pub fn all(len: usize) -> impl Iterator<Item = BitSeq> {
        (0u64..1 << len).map(move |x| BitSeq((0..len).map(|i| ((x >> (len - 1 - i)) & 1) as u8).collect()))
    }
}

impl fmt::Display for BitSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|d| write!(f, "{d}"))
    }
}

impl FromStr for BitSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                found => Err(Error::InvalidDigit { kind: "bit", found }),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitSeq)
    }
}

/// An almost-ternary sequence: entries in `{0,1,2}`, the last in `{0,1}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TritSeq(Vec<u8>);

impl TritSeq {
    pub fn new(trits: Vec<u8>) -> Result<Self> {
        if let Some(&d) = trits.iter().find(|&&d| d > 2) {
            return Err(Error::InvalidDigit { kind: "trit", found: char::from(b'0' + d.min(9)) });
        }
        if trits.last().is_some_and(|&d| d == 2) {
            return Err(Error::InvalidDigit { kind: "final trit", found: '2' });
        }
        Ok(TritSeq(trits))
    }

    pub fn empty() -> Self {
        TritSeq(Vec::new())
    }

    pub fn trits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every member of `T_len` (`2 * 3^(len-1)` of them); `len = 0` yields
    /// the empty sequence once.
    pub fn all(len: usize) -> impl Iterator<Item = TritSeq> {
        let count = if len == 0 { 1 } else { 2 * 3u64.pow(len as u32 - 1) };
        (0..count).map(move |mut x| {
            let mut t = vec![0u8; len];
            if len > 0 {
                t[len - 1] = (x % 2) as u8;
                x /= 2;
                for i in (0..len - 1).rev() {
                    t[i] = (x % 3) as u8;
                    x /= 3;
                }
            }
            TritSeq(t)
        })
    }
}

impl fmt::Display for TritSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|d| write!(f, "{d}"))
    }
}

impl FromStr for TritSeq {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                '2' => Ok(2),
                found => Err(Error::InvalidDigit { kind: "trit", found }),
            })
            .collect::<Result<Vec<_>>>()?;
        TritSeq::new(v)
    }
}

fn leading(steps: &[Step], s: Step) -> usize {
    steps.iter().take_while(|&&x| x == s).count()
}

fn trailing(steps: &[Step], s: Step) -> usize {
    steps.iter().rev().take_while(|&&x| x == s).count()
}

/// `phi(p, b)` for `p` with `k` hills and `|b| = k`; the image is hill-free
/// with one more unit of semi-length.
pub fn phi(p: &SchroderPath, b: &BitSeq) -> Result<SchroderPath> {
    let steps = p.steps();
    let hills = p.hill_positions();
    let k = hills.len();
    if b.len() != k {
        return Err(Error::LengthMismatch { expected: k, found: b.len() });
    }
    if p.is_all_horizontal() {
        let mut q = steps.to_vec();
        q.push(H);
        return Ok(SchroderPath::from_steps(q));
    }
    // p = H^a U p1 D H^c
    let a = leading(steps, H);
    let c = trailing(steps, H);
    let core = &steps[a..steps.len() - c];
    let mut q = Vec::with_capacity(steps.len() + 2);
    q.extend(std::iter::repeat_n(H, a));
    q.push(U);
    if k == 0 {
        q.extend_from_slice(core);
    } else {
        let hills: Vec<usize> = hills.iter().map(|&h| h - a).collect();
        let last = core.len() - 2;
        let mut i = 0;
        let mut j = 0;
        while i < core.len() {
            if j < k && hills[j] == i {
                if b.0[j] == 0 {
                    q.extend([U, D]);
                    i += 2;
                    j += 1;
                } else if (j == 0 && i == 0) || (j == k - 1 && i == last) {
                    q.push(H);
                    i += 2;
                    j += 1;
                } else {
                    // A maximal run of adjacent reversed hills D U D U ... D U
                    // would leave hills behind; it becomes the basin D H^(r-1) U.
                    let mut run = 1;
                    while j + run < k
                        && hills[j + run] == i + 2 * run
                        && b.0[j + run] == 1
                        && !(j + run == k - 1 && hills[j + run] == last)
                    {
                        run += 1;
                    }
                    q.push(D);
                    q.extend(std::iter::repeat_n(H, run - 1));
                    q.push(U);
                    i += 2 * run;
                    j += run;
                }
            } else {
                q.push(core[i]);
                i += 1;
            }
        }
    }
    q.push(D);
    q.extend(std::iter::repeat_n(H, c));
    Ok(SchroderPath::from_steps(q))
}

/// Inverse of [`phi`] on nonempty hill-free paths.
pub fn phi_inv(q: &SchroderPath) -> Result<(SchroderPath, BitSeq)> {
    let hills = q.hills();
    if hills != 0 {
        return Err(Error::NotHillFree { hills });
    }
    if q.is_empty() {
        return Err(Error::DomainMismatch("phi_inv needs semi-length >= 1".into()));
    }
    let steps = q.steps();
    if q.is_all_horizontal() {
        return Ok((SchroderPath::from_steps(steps[1..].to_vec()), BitSeq::empty()));
    }
    let a = leading(steps, H);
    let c = trailing(steps, H);
    let q1 = &steps[a + 1..steps.len() - c - 1];
    let heights = step_heights(q1, 0);
    let len = q1.len();
    let mut bits = Vec::new();
    let mut p = Vec::with_capacity(steps.len());
    p.extend(std::iter::repeat_n(H, a));
    let mut i = 0;
    while i < len {
        let s = q1[i];
        if s == H && (i == 0 || i == len - 1) {
            bits.push(1);
            p.extend([U, D]);
            i += 1;
        } else if s == U && heights[i] == 1 && q1.get(i + 1) == Some(&D) {
            bits.push(0);
            p.extend([U, D]);
            i += 2;
        } else if s == D && heights[i] == -1 {
            let m = leading(&q1[i + 1..], H);
            if q1.get(i + 1 + m) == Some(&U) {
                bits.extend(std::iter::repeat_n(1, m + 1));
                for _ in 0..=m {
                    p.extend([U, D]);
                }
                i += m + 2;
            } else {
                p.push(s);
                i += 1;
            }
        } else {
            p.push(s);
            i += 1;
        }
    }
    p.extend(std::iter::repeat_n(H, c));
    Ok((SchroderPath::from_steps(p), BitSeq(bits)))
}

fn join(parts: &[&[Step]]) -> SchroderPath {
    SchroderPath::from_steps(parts.concat())
}

/// `Phi(p, b)` onto paths with `k` hills. With `j = hills(p)`: `j = k - 1`
/// and `b` empty prepends a hill; `j >= k` with `|b| = j - k` applies `phi`
/// to the part before the `k`-th hill from the right. `k = 0` is `phi`.
pub fn big_phi(p: &SchroderPath, b: &BitSeq, k: usize) -> Result<SchroderPath> {
    if k == 0 {
        return phi(p, b);
    }
    let hills = p.hill_positions();
    let j = hills.len();
    if j + 1 == k {
        if !b.is_empty() {
            return Err(Error::DomainMismatch(format!(
                "j = k - 1 = {j} requires an empty bit sequence, got {b}"
            )));
        }
        return Ok(join(&[&[U, D], p.steps()]));
    }
    if j < k {
        return Err(Error::DomainMismatch(format!("path has {j} hills, need at least {}", k - 1)));
    }
    if b.len() != j - k {
        return Err(Error::LengthMismatch { expected: j - k, found: b.len() });
    }
    let cut = hills[j - k];
    let steps = p.steps();
    let head = phi(&SchroderPath::from_steps(steps[..cut].to_vec()), b)?;
    Ok(join(&[head.steps(), &[U, D], &steps[cut + 2..]]))
}

/// Inverse of [`big_phi`] with `k = hills(q)`.
pub fn big_phi_inv(q: &SchroderPath) -> Result<(SchroderPath, BitSeq)> {
    let hills = q.hill_positions();
    let Some(&first) = hills.first() else {
        return phi_inv(q);
    };
    let steps = q.steps();
    if first == 0 {
        return Ok((SchroderPath::from_steps(steps[2..].to_vec()), BitSeq::empty()));
    }
    let (head, b) = phi_inv(&SchroderPath::from_steps(steps[..first].to_vec()))?;
    Ok((join(&[head.steps(), &[U, D], &steps[first + 2..]]), b))
}

/// Applies a flatten (`1`) or reverse (`2`) to each of the leading hills.
fn rewrite_hills(steps: &[Step], hills: &[usize], t: &[u8], out: &mut Vec<Step>) {
    let mut i = 0;
    let mut j = 0;
    while i < steps.len() {
        if j < hills.len() && hills[j] == i {
            match t[j] {
                0 => out.extend([U, D]),
                1 => out.push(H),
                _ => out.extend([D, U]),
            }
            i += 2;
            j += 1;
        } else {
            out.push(steps[i]);
            i += 1;
        }
    }
}

/// `psi(p, t)`: little `p` with `k >= 1` hills and `t` in `T_k` to a
/// little hill-free path one unit longer.
pub fn psi(p: &SchroderPath, t: &TritSeq) -> Result<SchroderPath> {
    if !p.is_little() {
        return Err(Error::NotLittle);
    }
    let hills = p.hill_positions();
    let k = hills.len();
    if k == 0 {
        return Err(Error::ZeroHills);
    }
    if t.len() != k {
        return Err(Error::LengthMismatch { expected: k, found: t.len() });
    }
    let steps = p.steps();
    let last = hills[k - 1];
    let (p1, p2) = (&steps[..last], &steps[last + 2..]);
    let mut p1_mod = Vec::with_capacity(p1.len());
    rewrite_hills(p1, &hills[..k - 1], &t.0[..k - 1], &mut p1_mod);

    if t.0[k - 1] == 0 {
        return Ok(join(&[&[U, U], &p1_mod, &[D, D], p2]));
    }
    let q_hat = [&[U, H][..], &p1_mod, &[D], p2].concat();
    if !t.0[..k - 1].contains(&2) {
        return Ok(SchroderPath::from_steps(q_hat));
    }
    // q_hat = U H q1 D U q2 D p2 with the first D the first closure.
    let heights = step_heights(&q_hat, 0);
    let closure = (0..q_hat.len())
        .find(|&i| q_hat[i] == D && heights[i] == 0)
        .expect("a reversed hill creates a closure");
    let q1 = &q_hat[2..closure];
    let rest = &q_hat[closure + 1..q_hat.len() - p2.len()];
    debug_assert!(rest.first() == Some(&U) && rest.last() == Some(&D));
    let q2 = &rest[1..rest.len() - 1];
    Ok(join(&[&[U, U], q2, &[D, H], q1, &[D], p2]))
}

/// Scans a word read from relative height 0, replacing its hills (`0`),
/// height-0 horizontals (`1`) and, when `valleys` is set, its valleys at
/// height -1 (`2`) by hills.
fn unscan(word: &[Step], valleys: bool, trits: &mut Vec<u8>, out: &mut Vec<Step>) {
    let heights = step_heights(word, 0);
    let mut i = 0;
    while i < word.len() {
        let s = word[i];
        let next = word.get(i + 1);
        if s == U && heights[i] == 1 && next == Some(&D) {
            trits.push(0);
            out.extend([U, D]);
            i += 2;
        } else if s == H && heights[i] == 0 {
            trits.push(1);
            out.extend([U, D]);
            i += 1;
        } else if valleys && s == D && heights[i] == -1 && next == Some(&U) {
            trits.push(2);
            out.extend([U, D]);
            i += 2;
        } else {
            out.push(s);
            i += 1;
        }
    }
}

/// Inverse of [`psi`] on little hill-free paths of semi-length at least 2.
pub fn psi_inv(q: &SchroderPath) -> Result<(SchroderPath, TritSeq)> {
    if !q.is_little() {
        return Err(Error::NotLittle);
    }
    let hills = q.hills();
    if hills != 0 {
        return Err(Error::NotHillFree { hills });
    }
    if q.semi_length() < 2 {
        return Err(Error::DomainMismatch("psi_inv needs semi-length >= 2".into()));
    }
    let steps = q.steps();
    let heights = q.heights();
    let closure = (0..steps.len())
        .find(|&i| steps[i] == D && heights[i] == 0)
        .expect("nonempty path has a closure");
    let first_h1 = (0..closure).find(|&i| steps[i] == H && heights[i] == 1);
    let p2 = &steps[closure + 1..];
    let mut trits = Vec::new();
    let mut p = Vec::with_capacity(steps.len());
    match first_h1 {
        None => {
            // q = U U p1 D D p2
            let p1 = &steps[2..closure - 1];
            unscan(p1, true, &mut trits, &mut p);
            trits.push(0);
        }
        Some(h) => {
            // q = U p1 H q1 D p2
            let p1 = &steps[1..h];
            let q1 = &steps[h + 1..closure];
            if p1.is_empty() {
                unscan(q1, false, &mut trits, &mut p);
            } else {
                let q2 = &p1[1..p1.len() - 1];
                let region = [q1, &[D, U], q2].concat();
                unscan(&region, true, &mut trits, &mut p);
            }
            trits.push(1);
        }
    }
    p.extend([U, D]);
    p.extend_from_slice(p2);
    Ok((SchroderPath::from_steps(p), TritSeq(trits)))
}

/// `Psi(p, t)` onto little paths with `k` hills. With `j = hills(p)`:
/// `j = k - 1` (empty `t`) prepends a hill, `j > k` with `|t| = j - k`
/// applies `psi` before the `k`-th hill from the right; `j = k` is outside
/// the domain. `k = 0` is `psi`.
pub fn big_psi(p: &SchroderPath, t: &TritSeq, k: usize) -> Result<SchroderPath> {
    if k == 0 {
        return psi(p, t);
    }
    if !p.is_little() {
        return Err(Error::NotLittle);
    }
    let hills = p.hill_positions();
    let j = hills.len();
    if j + 1 == k {
        if !t.is_empty() {
            return Err(Error::DomainMismatch(format!(
                "j = k - 1 = {j} requires an empty trit sequence, got {t}"
            )));
        }
        return Ok(join(&[&[U, D], p.steps()]));
    }
    if j <= k {
        return Err(Error::DomainMismatch(format!(
            "path has {j} hills; need j = k - 1 or j > k for k = {k}"
        )));
    }
    if t.len() != j - k {
        return Err(Error::LengthMismatch { expected: j - k, found: t.len() });
    }
    let cut = hills[j - k];
    let steps = p.steps();
    let head = psi(&SchroderPath::from_steps(steps[..cut].to_vec()), t)?;
    Ok(join(&[head.steps(), &[U, D], &steps[cut + 2..]]))
}

/// Inverse of [`big_psi`] with `k = hills(q)`.
pub fn big_psi_inv(q: &SchroderPath) -> Result<(SchroderPath, TritSeq)> {
    if !q.is_little() {
        return Err(Error::NotLittle);
    }
    let hills = hill_positions(q.steps(), 0);
    let Some(&first) = hills.first() else {
        return psi_inv(q);
    };
    let steps = q.steps();
    if first == 0 {
        return Ok((SchroderPath::from_steps(steps[2..].to_vec()), TritSeq::empty()));
    }
    let (head, t) = psi_inv(&SchroderPath::from_steps(steps[..first].to_vec()))?;
    Ok((join(&[head.steps(), &[U, D], &steps[first + 2..]]), t))
}

/// True when `q` has a horizontal at height 1 before its first closure.
pub fn has_height_one_horizontal_before_first_closure(q: &SchroderPath) -> bool {
    let steps = q.steps();
    let heights = q.heights();
    for (i, &s) in steps.iter().enumerate() {
        if s == D && heights[i] == 0 {
            return false;
        }
        if s == H && heights[i] == 1 {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }
    fn b(s: &str) -> BitSeq {
        s.parse().unwrap()
    }
    fn t(s: &str) -> TritSeq {
        s.parse().unwrap()
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi(&p(""), &b("")).unwrap(), p("H"));
        assert_eq!(phi(&p("UD"), &b("0")).unwrap(), p("UUDD"));
        assert_eq!(phi(&p("UD"), &b("1")).unwrap(), p("UHD"));
        assert_eq!(
            phi(&p("HHUDUHDUDUDHUDUDUDUD"), &b("1011110")).unwrap(),
            p("HHUHUHDUDDUHDHHUUDD")
        );
        assert_eq!(phi(&p("UDUD"), &b("11")).unwrap(), p("UHHD"));
        assert!(matches!(
            phi(&p("UD"), &b("")),
            Err(Error::LengthMismatch { expected: 1, found: 0 })
        ));
    }

    #[test]
    fn phi_inv_examples() {
        assert_eq!(
            phi_inv(&p("HHUHUHDUDDUHDHHUUDD")).unwrap(),
            (p("HHUDUHDUDUDHUDUDUDUD"), b("1011110"))
        );
        assert_eq!(phi_inv(&p("H")).unwrap(), (p(""), b("")));
        assert_eq!(phi_inv(&p("UUDD")).unwrap(), (p("UD"), b("0")));
        assert_eq!(phi_inv(&p("UHHHD")).unwrap(), (p("UDHUD"), b("11")));
        assert!(matches!(phi_inv(&p("UD")), Err(Error::NotHillFree { hills: 1 })));
    }

    #[test]
    fn big_phi_examples() {
        assert_eq!(big_phi(&p("H"), &b(""), 1).unwrap(), p("UDH"));
        assert_eq!(big_phi(&p("UDUD"), &b("0"), 1).unwrap(), p("UUDDUD"));
        assert_eq!(big_phi(&p("UDUD"), &b("1"), 1).unwrap(), p("UHDUD"));
        assert!(matches!(big_phi(&p("UDUD"), &b(""), 1), Err(Error::LengthMismatch { .. })));
        assert_eq!(big_phi(&p("HH"), &b(""), 0).unwrap(), p("HHH"));
        assert!(matches!(big_phi(&p("H"), &b(""), 3), Err(Error::DomainMismatch(_))));

        assert_eq!(big_phi_inv(&p("UDH")).unwrap(), (p("H"), b("")));
        assert_eq!(big_phi_inv(&p("UUDDUD")).unwrap(), (p("UDUD"), b("0")));
        assert_eq!(big_phi_inv(&p("H")).unwrap(), (p(""), b("")));
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(&p("UD"), &t("0")).unwrap(), p("UUDD"));
        assert_eq!(psi(&p("UD"), &t("1")).unwrap(), p("UHD"));
        assert_eq!(
            psi(&p("UDUUDDUDUDUDUDUDUUDHUDD"), &t("102210")).unwrap(),
            p("UUHUUDDUDDUDUHDDUUDHUDD")
        );
        assert_eq!(
            psi(&p("UDUDUHDUDUDUDUUDDUDUUDD"), &t("010201")).unwrap(),
            p("UUUDUUDDDHUDHUHDUDDUUDD")
        );
        assert!(matches!(psi(&p("HUD"), &t("0")), Err(Error::NotLittle)));
        assert!(matches!(psi(&p("UHD"), &t("")), Err(Error::ZeroHills)));
        assert!(matches!(psi(&p("UD"), &t("")), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn psi_inv_examples() {
        assert_eq!(
            psi_inv(&p("UUHUUDDUDDUDUHDDUUDHUDD")).unwrap(),
            (p("UDUUDDUDUDUDUDUDUUDHUDD"), t("102210"))
        );
        assert_eq!(
            psi_inv(&p("UUUDUUDDDHUDHUHDUDDUUDD")).unwrap(),
            (p("UDUDUHDUDUDUDUUDDUDUUDD"), t("010201"))
        );
        assert_eq!(psi_inv(&p("UUDD")).unwrap(), (p("UD"), t("0")));
        assert!(matches!(psi_inv(&p("UUDDH")), Err(Error::NotLittle)));
        assert!(matches!(psi_inv(&p("UUDDUD")), Err(Error::NotHillFree { .. })));
    }

    #[test]
    fn big_psi_examples() {
        assert_eq!(big_psi(&p("UD"), &t(""), 2).unwrap(), p("UDUD"));
        assert_eq!(big_psi(&p("UDUD"), &t("0"), 1).unwrap(), p("UUDDUD"));
        assert!(matches!(big_psi(&p("UD"), &t(""), 1), Err(Error::DomainMismatch(_))));
        assert_eq!(big_psi_inv(&p("UDUD")).unwrap(), (p("UD"), t("")));
        assert_eq!(big_psi_inv(&p("UUDDUD")).unwrap(), (p("UDUD"), t("0")));
    }

    #[test]
    fn sequence_parsing() {
        assert!("102".parse::<TritSeq>().is_err());
        assert!("12a".parse::<TritSeq>().is_err());
        assert!("102".parse::<BitSeq>().is_err());
        assert_eq!(BitSeq::all(2).map(|x| x.to_string()).collect::<Vec<_>>(), ["00", "01", "10", "11"]);
        assert_eq!(TritSeq::all(2).count(), 6);
        assert_eq!(TritSeq::all(0).count(), 1);
        assert!(TritSeq::all(3).all(|x| x.trits()[2] < 2));
    }

    #[test]
    fn psi_branch_predicate() {
        assert!(!has_height_one_horizontal_before_first_closure(&p("UUHUUDDUDDUDUHDDUUDHUDD")));
        assert!(has_height_one_horizontal_before_first_closure(&p("UUUDUUDDDHUDHUHDUDDUUDD")));
    }
}
