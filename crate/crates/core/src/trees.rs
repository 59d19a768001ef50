//! Di-sk trees: binary trees labelled `+`/`-` in which no node shares its
//! label with its right child.
//!
//! Nodes are stored in in-order, so `T(i)` (1-based, as in the usual
//! notation) is `nodes[i - 1]` and structural equality is plain `Vec`
//! equality. Surgery happens on a [`Forest`] scratch arena and the result is
//! re-canonicalized.
//!
//! `DT(n)` denotes trees with `n - 1` nodes and `DT(n, k)` those whose first
//! `-` sits at in-order position `k` (`k = n` when there is none).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::bijections::{big_phi, big_phi_inv, BitSeq};
use crate::error::{Error, Result};
use crate::paths::SchroderPath;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    label: Sign,
    left: Option<usize>,
    right: Option<usize>,
    parent: Option<usize>,
}

impl Node {
    fn leaf(label: Sign) -> Self {
        Node { label, left: None, right: None, parent: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DiSkTree {
    nodes: Vec<Node>,
    root: Option<usize>,
}

/// Scratch arena holding any number of disconnected components.
#[derive(Debug, Clone, Default)]
struct Forest {
    nodes: Vec<Node>,
}

impl Forest {
    fn from_tree(t: &DiSkTree) -> Self {
        Forest { nodes: t.nodes.clone() }
    }

    fn add(&mut self, label: Sign) -> usize {
        self.nodes.push(Node::leaf(label));
        self.nodes.len() - 1
    }

    /// Copies `t` in; returns the new id of its root.
    fn import(&mut self, t: &DiSkTree) -> Option<usize> {
        let off = self.nodes.len();
        let shift = |x: Option<usize>| x.map(|i| i + off);
        self.nodes.extend(t.nodes.iter().map(|n| Node {
            label: n.label,
            left: shift(n.left),
            right: shift(n.right),
            parent: shift(n.parent),
        }));
        shift(t.root)
    }

    fn set_left(&mut self, parent: usize, child: usize) {
        debug_assert!(self.nodes[parent].left.is_none() && self.nodes[child].parent.is_none());
        self.nodes[parent].left = Some(child);
        self.nodes[child].parent = Some(parent);
    }

    fn set_right(&mut self, parent: usize, child: usize) {
        debug_assert!(self.nodes[parent].right.is_none() && self.nodes[child].parent.is_none());
        self.nodes[parent].right = Some(child);
        self.nodes[child].parent = Some(parent);
    }

    /// Cuts `x` from its parent.
    fn detach(&mut self, x: usize) {
        if let Some(p) = self.nodes[x].parent.take() {
            if self.nodes[p].left == Some(x) {
                self.nodes[p].left = None;
            } else {
                self.nodes[p].right = None;
            }
        }
    }

    /// Parent of which `x` is the left child.
    fn left_parent_of(&self, x: usize) -> Option<usize> {
        self.nodes[x].parent.filter(|&p| self.nodes[p].left == Some(x))
    }

    /// Parent of which `x` is the right child.
    fn right_parent_of(&self, x: usize) -> Option<usize> {
        self.nodes[x].parent.filter(|&p| self.nodes[p].right == Some(x))
    }

    fn top(&self, mut x: usize) -> usize {
        while let Some(p) = self.nodes[x].parent {
            x = p;
        }
        x
    }

    fn inorder(&self, root: Option<usize>) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let mut cur = root;
        while cur.is_some() || !stack.is_empty() {
            while let Some(c) = cur {
                stack.push(c);
                cur = self.nodes[c].left;
            }
            let c = stack.pop().expect("stack nonempty");
            out.push(c);
            cur = self.nodes[c].right;
        }
        out
    }

    /// Flips labels along the right chain starting at `x`.
    fn tau_at(&mut self, x: usize) {
        let mut cur = Some(x);
        while let Some(c) = cur {
            self.nodes[c].label = self.nodes[c].label.flipped();
            cur = self.nodes[c].right;
        }
    }

    /// Canonical tree of the component rooted at `root`.
    fn extract(&self, root: Option<usize>) -> DiSkTree {
        let order = self.inorder(root);
        let mut pos = vec![usize::MAX; self.nodes.len()];
        for (i, &id) in order.iter().enumerate() {
            pos[id] = i;
        }
        let map = |x: Option<usize>| x.map(|i| pos[i]);
        let nodes = order
            .iter()
            .map(|&id| {
                let n = self.nodes[id];
                Node {
                    label: n.label,
                    left: map(n.left),
                    right: map(n.right),
                    parent: if Some(id) == root { None } else { map(n.parent) },
                }
            })
            .collect();
        DiSkTree { nodes, root: map(root) }
    }
}

impl DiSkTree {
    pub fn empty() -> Self {
        DiSkTree::default()
    }

    pub fn single(label: Sign) -> Self {
        DiSkTree { nodes: vec![Node::leaf(label)], root: Some(0) }
    }

    /// Tree with the given root label and subtrees. Fails if the right
    /// subtree's root carries the same label.
    pub fn join(label: Sign, left: &DiSkTree, right: &DiSkTree) -> Result<Self> {
        let t = Self::join_unchecked(label, left, right);
        if right.root_label() == Some(label) {
            return Err(Error::RightChainViolation { index: left.len() + 1 });
        }
        Ok(t)
    }

    fn join_unchecked(label: Sign, left: &DiSkTree, right: &DiSkTree) -> Self {
        let mut f = Forest::default();
        let l = f.import(left);
        let r = f.import(right);
        let root = f.add(label);
        if let Some(l) = l {
            f.set_left(root, l);
        }
        if let Some(r) = r {
            f.set_right(root, r);
        }
        f.extract(Some(root))
    }

    /// Number of nodes; a member of `DT(n)` has `n - 1`.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// The class index `n` with this tree in `DT(n)`.
    pub fn class_n(&self) -> usize {
        self.len() + 1
    }

    pub fn root_label(&self) -> Option<Sign> {
        self.root.map(|r| self.nodes[r].label)
    }

    /// Label of `T(i)`, 1-based.
    pub fn label(&self, i: usize) -> Option<Sign> {
        i.checked_sub(1).and_then(|i| self.nodes.get(i)).map(|n| n.label)
    }

    /// In-order index (1-based) of the root.
    pub fn root_index(&self) -> Option<usize> {
        self.root.map(|r| r + 1)
    }

    pub fn left_child(&self, i: usize) -> Option<usize> {
        self.node(i).and_then(|n| n.left).map(|x| x + 1)
    }

    pub fn right_child(&self, i: usize) -> Option<usize> {
        self.node(i).and_then(|n| n.right).map(|x| x + 1)
    }

    fn node(&self, i: usize) -> Option<&Node> {
        i.checked_sub(1).and_then(|i| self.nodes.get(i))
    }

    pub fn label_sequence(&self) -> Vec<Sign> {
        self.nodes.iter().map(|n| n.label).collect()
    }

    /// Position of the first `-` in in-order, or `len() + 1` if none.
    pub fn first_minus_index(&self) -> usize {
        self.nodes
            .iter()
            .position(|n| n.label == Sign::Minus)
            .map_or(self.len() + 1, |i| i + 1)
    }

    /// In-order positions labelled `-`.
    pub fn minus_positions(&self) -> BTreeSet<usize> {
        (1..=self.len()).filter(|&i| self.nodes[i - 1].label == Sign::Minus).collect()
    }

    /// Root without a left child.
    pub fn is_right_branching(&self) -> bool {
        self.root.is_some_and(|r| self.nodes[r].left.is_none())
    }

    /// First node in-order violating the right-chain condition, if any.
    pub fn right_chain_violation(&self) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.right.is_some_and(|r| self.nodes[r].label == n.label))
            .map(|i| i + 1)
    }

    fn checked(self) -> Result<Self> {
        match self.right_chain_violation() {
            Some(index) => Err(Error::RightChainViolation { index }),
            None => Ok(self),
        }
    }

    fn check_index(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        Ok(i - 1)
    }

    /// `T(1)` is a `+` leaf, i.e. the tree is `+ / S[1]` for some `S`
    /// (or the lone `+`).
    pub fn is_star(&self) -> bool {
        self.nodes
            .first()
            .is_some_and(|n| n.label == Sign::Plus && n.left.is_none() && n.right.is_none())
    }
}

/// `S / T[i]`: the root of `s` becomes the left child of `T(i)`.
pub fn attach_left(s: &DiSkTree, t: &DiSkTree, i: usize) -> Result<DiSkTree> {
    let at = t.check_index(i)?;
    if s.is_empty() {
        return Err(Error::EmptyTree);
    }
    if t.nodes[at].left.is_some() {
        return Err(Error::LeftChildOccupied { index: i });
    }
    let mut f = Forest::from_tree(t);
    let sr = f.import(s).expect("nonempty");
    f.set_left(at, sr);
    Ok(f.extract(t.root))
}

/// `T[i] \ S`: the root of `s` becomes the right child of `T(i)`. On an
/// empty `t` with `i = 0` this is `s` itself.
pub fn attach_right(t: &DiSkTree, i: usize, s: &DiSkTree) -> Result<DiSkTree> {
    if s.is_empty() {
        return Err(Error::EmptyTree);
    }
    if t.is_empty() && i == 0 {
        return Ok(s.clone());
    }
    let at = t.check_index(i)?;
    if t.nodes[at].right.is_some() {
        return Err(Error::RightChildOccupied { index: i });
    }
    if s.root_label() == Some(t.nodes[at].label) {
        return Err(Error::LabelClash { index: i });
    }
    let mut f = Forest::from_tree(t);
    let sr = f.import(s).expect("nonempty");
    f.set_right(at, sr);
    Ok(f.extract(t.root))
}

/// `S # T`: `S / T[1]` when `s` is a single node, else `T / S[2]`.
///
/// `s` must be right-branching. `t` may be any nonempty tree, which is what
/// the nested products in [`rho_inv`] need.
pub fn sharp(s: &DiSkTree, t: &DiSkTree) -> Result<DiSkTree> {
    if !s.is_right_branching() {
        return Err(Error::NotRightBranching);
    }
    if t.is_empty() {
        return Err(Error::EmptyTree);
    }
    let out = if s.len() == 1 { attach_left(s, t, 1)? } else { attach_left(t, s, 2)? };
    debug_assert!(out.nodes[0].label == s.nodes[0].label && out.nodes[1].label == t.nodes[0].label);
    Ok(out)
}

/// Flips every label on the root's right chain.
pub fn tau(t: &DiSkTree) -> Result<DiSkTree> {
    let root = t.root.ok_or(Error::EmptyTree)?;
    let mut f = Forest::from_tree(t);
    f.tau_at(root);
    Ok(f.extract(t.root))
}

/// `+ / S[1]`: prepends a `+` leaf in in-order. Maps `DT(n-1, k-1)` into
/// `DT(n, k)`.
pub fn embed_star(s: &DiSkTree) -> DiSkTree {
    if s.is_empty() {
        return DiSkTree::single(Sign::Plus);
    }
    attach_left(&DiSkTree::single(Sign::Plus), s, 1).expect("T(1) never has a left child")
}

/// Inverse of [`embed_star`].
pub fn embed_star_inv(t: &DiSkTree) -> Result<DiSkTree> {
    if !t.is_star() {
        return Err(Error::DomainMismatch("tree is not in the embedded subclass".into()));
    }
    let mut f = Forest::from_tree(t);
    f.detach(0);
    let root = if t.root == Some(0) { None } else { t.root };
    Ok(f.extract(root))
}

/// All trees with `n - 1` nodes, each once.
pub fn enumerate_trees(n: usize) -> Vec<DiSkTree> {
    let m = n.saturating_sub(1);
    let mut by_size: Vec<Vec<DiSkTree>> = vec![vec![DiSkTree::empty()]];
    for size in 1..=m {
        let mut level = Vec::new();
        for label in [Sign::Plus, Sign::Minus] {
            for left_size in 0..size {
                for left in &by_size[left_size] {
                    for right in &by_size[size - 1 - left_size] {
                        if right.root_label() != Some(label) {
                            level.push(DiSkTree::join_unchecked(label, left, right));
                        }
                    }
                }
            }
        }
        by_size.push(level);
    }
    by_size.swap_remove(m)
}

/// `|DT(n, k)|` for `k = 1..=n` (index 0 holds `k = 1`).
pub fn class_counts(n: usize) -> Vec<usize> {
    let mut counts = vec![0; n];
    for t in enumerate_trees(n) {
        counts[t.first_minus_index() - 1] += 1;
    }
    counts
}

/// `rho(T, b)` for `T` in `DT(n-1, j)`, `j >= k >= 1`, `|b| = j - k`; lands
/// in `DT(n, k)` outside the embedded subclass.
pub fn rho(t: &DiSkTree, b: &BitSeq, k: usize) -> Result<DiSkTree> {
    let j = t.first_minus_index();
    if k == 0 || k > j {
        return Err(Error::DomainMismatch(format!("need 1 <= k <= j, got k = {k}, j = {j}")));
    }
    if b.len() != j - k {
        return Err(Error::LengthMismatch { expected: j - k, found: b.len() });
    }

    // Step 1: insert a new `-` so that it becomes the k-th node.
    let mut f = Forest::from_tree(t);
    let minus = f.add(Sign::Minus);
    let mut root = t.root;
    if k <= t.len() && t.nodes[k - 1].left.is_none() {
        f.set_left(k - 1, minus);
    } else if k == 1 {
        root = Some(minus);
    } else {
        let host = k - 2;
        debug_assert!(k > t.len() || t.nodes[k - 1].left == Some(host));
        f.set_right(host, minus);
    }
    let t_hat = f.extract(root);
    debug_assert_eq!(t_hat.first_minus_index(), k);

    // Step 2: leave the embedded subclass by moving the bottom of the left
    // chain under the new node.
    let s_hat = if t_hat.is_star() { lift_out_of_star(&t_hat, k)? } else { t_hat };

    // Step 3: cut and paste driven by the bits after the first 1.
    let Some(z) = b.bits().iter().position(|&x| x == 1) else {
        return Ok(s_hat);
    };
    let b_hat = &b.bits()[z + 1..];
    let l = b_hat.len();
    let mut f = Forest::from_tree(&s_hat);
    let n_k = k - 1;
    let peeled: Vec<usize> = (k..=k + l).collect();
    for &x in &peeled {
        if f.right_parent_of(x).is_some() {
            return Err(Error::VerificationFailure(format!(
                "rho: peeled node {} is a right child",
                x + 1
            )));
        }
        let p = f.left_parent_of(x);
        let c = f.nodes[x].left;
        if let Some(c) = c {
            f.detach(c);
        }
        f.detach(x);
        if let (Some(p), Some(c)) = (p, c) {
            f.set_left(p, c);
        }
    }
    for (i, &x) in peeled.iter().enumerate().take(l) {
        if b_hat[i] == 1 {
            f.tau_at(x);
        }
    }
    for w in peeled.windows(2) {
        f.set_left(w[1], w[0]);
    }
    let p_root = peeled[l];
    if f.nodes[n_k].right.is_some() || f.nodes[p_root].label == Sign::Minus {
        return Err(Error::VerificationFailure("rho: cannot hang P right of the new node".into()));
    }
    f.set_right(n_k, p_root);
    let top = f.top(n_k);
    let s = f.extract(Some(top));
    debug_assert_eq!(s.len(), t.len() + 1);
    s.checked()
}

fn lift_out_of_star(t_hat: &DiSkTree, k: usize) -> Result<DiSkTree> {
    // Climb the left chain from T(1) to the first node with a right child.
    let mut cur = 0;
    let m = loop {
        if t_hat.nodes[cur].right.is_some() {
            break cur + 1;
        }
        match t_hat.nodes[cur].parent {
            Some(p) if t_hat.nodes[p].left == Some(cur) => cur = p,
            _ => {
                return Err(Error::VerificationFailure(
                    "rho step 2: left chain of T(1) has no node with a right child".into(),
                ))
            }
        }
    };
    if !(2..k).contains(&m) {
        return Err(Error::VerificationFailure(format!(
            "rho step 2: expected 2 <= m <= k - 1, got m = {m}, k = {k}"
        )));
    }
    let mut f = Forest::from_tree(t_hat);
    let r = m - 2;
    f.detach(r);
    let rest_root = t_hat.root;
    let order = f.inorder(rest_root);
    let target = order[k - m];
    debug_assert_eq!(target, k - 1);
    f.set_left(target, r);
    Ok(f.extract(rest_root))
}

/// Inverse of [`rho`]. Returns `(T, b)`.
pub fn rho_inv(s: &DiSkTree) -> Result<(DiSkTree, BitSeq)> {
    let k = s.first_minus_index();
    let n = s.class_n();
    if k > s.len() {
        return Err(Error::DomainMismatch("tree has no '-' node".into()));
    }
    if s.is_star() {
        return Err(Error::StarMember);
    }
    let n_k = k - 1;

    // Step 1: undo the cut and paste.
    let (s_hat, b_hat) = match s.nodes[n_k].right {
        None => (s.clone(), None),
        Some(r) => {
            let mut chain = vec![r];
            while let Some(c) = s.nodes[*chain.last().expect("nonempty")].left {
                chain.push(c);
            }
            chain.reverse();
            let l = chain.len() - 1;
            let b_hat: Vec<u8> = chain[..l]
                .iter()
                .map(|&x| u8::from(s.nodes[x].label == Sign::Minus))
                .collect();
            let mut f = Forest::from_tree(s);
            for &x in &chain {
                f.detach(x);
                if let Some(c) = f.nodes[x].left {
                    f.detach(c);
                }
            }
            let mut pieces: Vec<DiSkTree> = chain.iter().map(|&x| f.extract(Some(x))).collect();
            for (piece, &bit) in pieces.iter_mut().zip(&b_hat) {
                if bit == 1 {
                    *piece = tau(piece)?;
                }
            }
            let mut p = pieces.pop().expect("nonempty");
            while let Some(piece) = pieces.pop() {
                p = sharp(&piece, &p)?;
            }

            let p_root = f.import(&p).expect("nonempty");
            let p_first = f.inorder(Some(p_root))[0];
            let x = f.right_parent_of(n_k).unwrap_or(n_k);
            if f.right_parent_of(x).is_some() {
                return Err(Error::VerificationFailure(
                    "rho_inv: insertion point is a right child".into(),
                ));
            }
            if let Some(y) = f.left_parent_of(x) {
                f.detach(x);
                f.set_left(y, p_root);
            }
            f.set_left(p_first, x);
            let top = f.top(n_k);
            (f.extract(Some(top)), Some(b_hat))
        }
    };
    debug_assert_eq!(s_hat.first_minus_index(), k);

    // Step 2: recover j and b, and undo the star lift.
    let j = s_hat
        .nodes
        .iter()
        .enumerate()
        .skip(k)
        .find(|(_, nd)| nd.label == Sign::Minus)
        .map_or(n - 1, |(i, _)| i);
    let b = match b_hat {
        None => BitSeq::zeros(j - k),
        Some(b_hat) => {
            let l = b_hat.len();
            if j < k + l + 1 {
                return Err(Error::VerificationFailure(format!(
                    "rho_inv: j = {j} too small for k = {k}, l = {l}"
                )));
            }
            let mut bits = vec![0; j - k - l - 1];
            bits.push(1);
            bits.extend(b_hat);
            BitSeq::new(bits)?
        }
    };
    let t_hat = match s_hat.nodes[n_k].left {
        None => s_hat,
        Some(r) => {
            if r != n_k - 1 {
                return Err(Error::VerificationFailure(
                    "rho_inv: left child of the k-th node is not its predecessor".into(),
                ));
            }
            let mut f = Forest::from_tree(&s_hat);
            f.detach(r);
            let rest_root = s_hat.root;
            let first = f.inorder(rest_root)[0];
            f.set_left(first, r);
            f.extract(rest_root)
        }
    };

    // Step 3: the k-th node is now a leaf; drop it.
    let leaf = &t_hat.nodes[n_k];
    if leaf.left.is_some() || leaf.right.is_some() {
        return Err(Error::VerificationFailure("rho_inv: k-th node is not a leaf".into()));
    }
    let mut f = Forest::from_tree(&t_hat);
    f.detach(n_k);
    let root = if t_hat.root == Some(n_k) { None } else { t_hat.root };
    let t = f.extract(root);
    debug_assert_eq!(t.first_minus_index(), j);
    Ok((t.checked()?, b))
}

/// Recursive bijection from paths of semi-length `n` with `k` hills to trees
/// with `n` nodes whose first `-` is at position `k + 1`.
pub fn path_to_tree(p: &SchroderPath) -> Result<DiSkTree> {
    if p.is_empty() {
        return Ok(DiSkTree::empty());
    }
    let hills = p.hill_positions();
    if hills.first() == Some(&0) {
        let rest = SchroderPath::new(p.steps()[2..].to_vec())?;
        return Ok(embed_star(&path_to_tree(&rest)?));
    }
    let (prev, b) = big_phi_inv(p)?;
    rho(&path_to_tree(&prev)?, &b, hills.len() + 1)
}

/// Inverse of [`path_to_tree`].
pub fn tree_to_path(t: &DiSkTree) -> Result<SchroderPath> {
    if t.is_empty() {
        return Ok(SchroderPath::empty());
    }
    if t.is_star() {
        let rest = tree_to_path(&embed_star_inv(t)?)?;
        let mut steps = vec![crate::paths::Step::U, crate::paths::Step::D];
        steps.extend_from_slice(rest.steps());
        return SchroderPath::new(steps);
    }
    let k = t.first_minus_index() - 1;
    let (prev, b) = rho_inv(t)?;
    big_phi(&tree_to_path(&prev)?, &b, k)
}

impl fmt::Display for DiSkTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &DiSkTree, x: Option<usize>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match x {
                None => f.write_str("."),
                Some(i) => {
                    let n = &t.nodes[i];
                    write!(f, "({} ", n.label.as_char())?;
                    go(t, n.left, f)?;
                    f.write_str(" ")?;
                    go(t, n.right, f)?;
                    f.write_str(")")
                }
            }
        }
        go(self, self.root, f)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::SyntaxError { position: self.pos, message: message.into() })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected {:?}", c as char))
        }
    }

    fn tree(&mut self, f: &mut Forest) -> Result<Option<usize>> {
        match self.src.get(self.pos) {
            Some(b'.') => {
                self.pos += 1;
                Ok(None)
            }
            Some(b'(') => {
                self.pos += 1;
                let label = match self.src.get(self.pos) {
                    Some(b'+') => Sign::Plus,
                    Some(b'-') => Sign::Minus,
                    _ => return self.err("expected '+' or '-'"),
                };
                self.pos += 1;
                let id = f.add(label);
                self.expect(b' ')?;
                if let Some(l) = self.tree(f)? {
                    f.set_left(id, l);
                }
                self.expect(b' ')?;
                if let Some(r) = self.tree(f)? {
                    f.set_right(id, r);
                }
                self.expect(b')')?;
                Ok(Some(id))
            }
            _ => self.err("expected '.' or '('"),
        }
    }
}

impl FromStr for DiSkTree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let mut f = Forest::default();
        let root = p.tree(&mut f)?;
        if p.pos != text.len() {
            return p.err("trailing input");
        }
        f.extract(root).checked()
    }
}

pub fn parse_tree(text: &str) -> Result<DiSkTree> {
    text.parse()
}

pub fn render_tree(t: &DiSkTree) -> String {
    t.to_string()
}
