//! Binary trees and their Dyck-path encoding.
//!
//! A full binary tree `T` with subtrees `T1`, `T2` encodes as
//! `B(T) = U B(T1) D B(T2)`, a single vertex as the empty word. Pruning the
//! leaves of a full tree gives an ordinary binary tree with the same word
//! (`U B(L) D B(R)`, empty tree as empty word), so most functions here work
//! directly on [`BinaryTree`].
//!
//! Nodes are identified by their [`Address`], the sequence of left/right
//! moves from the root.

use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::paths::{self, DyckPath, KDyckPath, Step, StepWord};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BinaryTree(Option<Box<Node>>);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node {
    pub left: BinaryTree,
    pub right: BinaryTree,
}

impl BinaryTree {
    pub fn empty() -> Self {
        Self(None)
    }

    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        Self(Some(Box::new(Node { left, right })))
    }

    pub fn single() -> Self {
        Self::node(Self::empty(), Self::empty())
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    pub fn root(&self) -> Option<&Node> {
        self.0.as_deref()
    }

    pub fn left(&self) -> Option<&BinaryTree> {
        self.root().map(|n| &n.left)
    }

    pub fn right(&self) -> Option<&BinaryTree> {
        self.root().map(|n| &n.right)
    }

    pub fn size(&self) -> usize {
        match self.root() {
            None => 0,
            Some(n) => 1 + n.left.size() + n.right.size(),
        }
    }

    /// The subtree rooted at `addr`, or `None` if no node lives there.
    pub fn subtree(&self, addr: &Address) -> Option<&BinaryTree> {
        let mut cur = self;
        for side in &addr.0 {
            let n = cur.root()?;
            cur = match side {
                Side::Left => &n.left,
                Side::Right => &n.right,
            };
        }
        (!cur.is_empty()).then_some(cur)
    }

    /// Length of the chain of left children starting below the root.
    pub fn left_chain(&self) -> usize {
        let mut len = 0;
        let mut cur = self.left();
        while let Some(t) = cur.filter(|t| !t.is_empty()) {
            len += 1;
            cur = t.left();
        }
        len
    }

    /// Every binary tree with `m` nodes, in a fixed order.
    pub fn all_with_nodes(m: usize) -> Vec<BinaryTree> {
        let mut table: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::empty()]];
        for size in 1..=m {
            let mut trees = Vec::new();
            for l in 0..size {
                for left in &table[l] {
                    for right in &table[size - 1 - l] {
                        trees.push(BinaryTree::node(left.clone(), right.clone()));
                    }
                }
            }
            table.push(trees);
        }
        table.swap_remove(m)
    }

    /// Indented outline, one node per line, children marked `L`/`R`.
    pub fn render_ascii(&self) -> String {
        fn go(t: &BinaryTree, label: &str, depth: usize, out: &mut String) {
            if let Some(n) = t.root() {
                out.push_str(&"  ".repeat(depth));
                out.push_str(label);
                out.push('\n');
                go(&n.left, "L", depth + 1, out);
                go(&n.right, "R", depth + 1, out);
            }
        }
        let mut out = String::new();
        if self.is_empty() {
            out.push_str("(empty tree)\n");
        }
        go(self, "*", 0, &mut out);
        out
    }

    /// SVG of nested boxes: each node's box holds its children's boxes, left
    /// subtree on the left, with a one-cell column for the node between.
    pub fn render_svg(&self) -> String {
        const CELL: usize = 16;
        fn height(t: &BinaryTree) -> usize {
            t.root().map_or(0, |n| 1 + height(&n.left).max(height(&n.right)))
        }
        fn go(t: &BinaryTree, x: usize, depth: usize, out: &mut String) {
            let Some(n) = t.root() else { return };
            let (w, h) = (t.size() * CELL, height(t) * CELL);
            let y = depth * CELL;
            out.push_str(&format!(
                "<rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"none\" stroke=\"black\"/>\n"
            ));
            go(&n.left, x, depth + 1, out);
            go(&n.right, x + (n.left.size() + 1) * CELL, depth + 1, out);
        }
        let (w, h) = (self.size().max(1) * CELL, height(self).max(1) * CELL);
        let mut out = format!("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\">\n");
        go(self, 0, 0, &mut out);
        out.push_str("</svg>\n");
        out
    }

    /// Graphviz-style edge list; nodes are named by address, root `r`.
    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph tree {\n");
        let mut stack = vec![Address::root()];
        if !self.is_empty() {
            out.push_str("  r;\n");
        }
        while let Some(addr) = stack.pop() {
            let Some(t) = self.subtree(&addr) else { continue };
            let n = t.root().unwrap();
            for (side, child) in [(Side::Right, &n.right), (Side::Left, &n.left)] {
                if !child.is_empty() {
                    let c = addr.child(side);
                    out.push_str(&format!(
                        "  {} -> {} [label={}];\n",
                        addr.dot_name(),
                        c.dot_name(),
                        side.as_char()
                    ));
                    stack.push(c);
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.root() {
            None => f.write_str("∅"),
            Some(n) => write!(f, "({}{})", n.left, n.right),
        }
    }
}

/// Grammar: `TREE := "∅" | "(" TREE TREE ")"`. Whitespace is ignored and `.`
/// is accepted as an ASCII stand-in for `∅`.
impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(s, &chars, &mut pos, '∅', &|| BinaryTree::empty(), &BinaryTree::node)?;
        if pos != chars.len() {
            return Err(parse_err(s, "trailing characters"));
        }
        Ok(t)
    }
}

fn parse_tree<T>(
    src: &str,
    chars: &[char],
    pos: &mut usize,
    leaf: char,
    make_leaf: &dyn Fn() -> T,
    make_node: &dyn Fn(T, T) -> T,
) -> Result<T> {
    match chars.get(*pos) {
        Some(&c) if c == leaf || (leaf == '∅' && c == '.') => {
            *pos += 1;
            Ok(make_leaf())
        }
        Some('(') => {
            *pos += 1;
            let l = parse_tree(src, chars, pos, leaf, make_leaf, make_node)?;
            let r = parse_tree(src, chars, pos, leaf, make_leaf, make_node)?;
            if chars.get(*pos) != Some(&')') {
                return Err(parse_err(src, format!("expected ')' at offset {pos}")));
            }
            *pos += 1;
            Ok(make_node(l, r))
        }
        Some(c) => Err(parse_err(src, format!("unexpected {c:?} at offset {pos}"))),
        None => Err(parse_err(src, "unexpected end of input")),
    }
}

/// A tree in which every vertex has zero or two children.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FullBinaryTree {
    Leaf,
    Node(Box<FullBinaryTree>, Box<FullBinaryTree>),
}

impl FullBinaryTree {
    pub fn node(left: FullBinaryTree, right: FullBinaryTree) -> Self {
        Self::Node(Box::new(left), Box::new(right))
    }

    /// Vertex count, always odd.
    pub fn size(&self) -> usize {
        match self {
            Self::Leaf => 1,
            Self::Node(l, r) => 1 + l.size() + r.size(),
        }
    }
}

impl fmt::Display for FullBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf => f.write_str("o"),
            Self::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

/// Grammar: `FULL := "o" | "(" FULL FULL ")"`.
impl FromStr for FullBinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let t = parse_tree(
            s,
            &chars,
            &mut pos,
            'o',
            &|| FullBinaryTree::Leaf,
            &FullBinaryTree::node,
        )?;
        if pos != chars.len() {
            return Err(parse_err(s, "trailing characters"));
        }
        Ok(t)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    fn as_char(self) -> char {
        match self {
            Side::Left => 'L',
            Side::Right => 'R',
        }
    }
}

/// Path of moves from the root; the root itself is the empty address.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Address(Vec<Side>);

impl Address {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn child(&self, side: Side) -> Self {
        let mut v = self.0.clone();
        v.push(side);
        Self(v)
    }

    pub fn moves(&self) -> &[Side] {
        &self.0
    }

    fn dot_name(&self) -> String {
        let mut s = String::from("r");
        s.extend(self.0.iter().map(|m| m.as_char()));
        s
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        self.0.iter().try_for_each(|m| write!(f, "{}", m.as_char()))
    }
}

impl FromStr for Address {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "root" || t.is_empty() {
            return Ok(Self::root());
        }
        t.chars()
            .map(|c| match c {
                'L' | 'l' => Ok(Side::Left),
                'R' | 'r' => Ok(Side::Right),
                _ => Err(parse_err(s, "address must be a word over L/R")),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

pub fn dyck_from_full_tree(t: &FullBinaryTree) -> DyckPath {
    fn go(t: &FullBinaryTree, out: &mut Vec<Step>) {
        if let FullBinaryTree::Node(l, r) = t {
            out.push(Step::Up);
            go(l, out);
            out.push(Step::Down);
            go(r, out);
        }
    }
    let mut steps = Vec::new();
    go(t, &mut steps);
    DyckPath::new(StepWord::new(steps)).expect("tree words are Dyck paths")
}

pub fn full_tree_from_dyck(d: &DyckPath) -> FullBinaryTree {
    fn go(steps: &[Step], pos: &mut usize) -> FullBinaryTree {
        if steps.get(*pos) != Some(&Step::Up) {
            return FullBinaryTree::Leaf;
        }
        *pos += 1;
        let l = go(steps, pos);
        *pos += 1; // the matching D
        let r = go(steps, pos);
        FullBinaryTree::node(l, r)
    }
    let mut pos = 0;
    go(d.word().steps(), &mut pos)
}

/// Removes every leaf of a full tree.
pub fn prune(t: &FullBinaryTree) -> BinaryTree {
    match t {
        FullBinaryTree::Leaf => BinaryTree::empty(),
        FullBinaryTree::Node(l, r) => BinaryTree::node(prune(l), prune(r)),
    }
}

/// Hangs leaves under every node until each has two children.
pub fn graft(b: &BinaryTree) -> FullBinaryTree {
    match b.root() {
        None => FullBinaryTree::Leaf,
        Some(n) => FullBinaryTree::node(graft(&n.left), graft(&n.right)),
    }
}

/// The word `U B(L) D B(R)` of a binary tree, equal to
/// `dyck_from_full_tree(&graft(b))`.
pub fn dyck_from_tree(b: &BinaryTree) -> DyckPath {
    dyck_from_full_tree(&graft(b))
}

pub fn tree_from_dyck(d: &DyckPath) -> BinaryTree {
    prune(&full_tree_from_dyck(d))
}

/// Number of left moves on the root-to-node path.
pub fn diagonal_depth(b: &BinaryTree, v: &Address) -> Result<usize> {
    if b.subtree(v).is_none() {
        return Err(Error::InvalidTree(format!("no node at address {v}")));
    }
    Ok(v.0.iter().filter(|&&m| m == Side::Left).count())
}

/// Counterclockwise walk around the tree starting and ending at the root.
/// A node is listed on arrival, between its two subtrees when it has both,
/// and on departure; a leaf therefore appears twice in a row and a node with
/// two children three times.
pub fn traversal(b: &BinaryTree) -> Result<Vec<Address>> {
    fn go(t: &BinaryTree, addr: Address, out: &mut Vec<Address>) {
        let n = t.root().unwrap();
        out.push(addr.clone());
        if !n.left.is_empty() {
            go(&n.left, addr.child(Side::Left), out);
        }
        if !n.left.is_empty() && !n.right.is_empty() {
            out.push(addr.clone());
        }
        if !n.right.is_empty() {
            go(&n.right, addr.child(Side::Right), out);
        }
        out.push(addr);
    }
    if b.is_empty() {
        return Err(Error::InvalidTree("traversal of the empty tree".into()));
    }
    let mut out = Vec::new();
    go(b, Address::root(), &mut out);
    Ok(out)
}

/// The two steps a node owns in `dyck_from_tree(b)`: its up step (taken when
/// the node is first traversed) and its down step (taken when the walk
/// leaves its left side). Steps are 1-based; nodes are listed in preorder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeSteps {
    pub address: Address,
    pub up: usize,
    pub down: usize,
}

pub fn node_steps(b: &BinaryTree) -> Vec<NodeSteps> {
    fn go(t: &BinaryTree, addr: Address, pos: &mut usize, out: &mut Vec<NodeSteps>) {
        let Some(n) = t.root() else { return };
        *pos += 1;
        let idx = out.len();
        out.push(NodeSteps {
            address: addr.clone(),
            up: *pos,
            down: 0,
        });
        go(&n.left, addr.child(Side::Left), pos, out);
        *pos += 1;
        out[idx].down = *pos;
        go(&n.right, addr.child(Side::Right), pos, out);
    }
    let mut out = Vec::new();
    go(b, Address::root(), &mut 0, &mut out);
    out
}

/// Checks, for every node of `b` against `dyck_from_full_tree(graft(b))`:
///
/// * the height before a node's up step equals the height after its down step;
/// * the height before a node's up step equals that before its right child's;
/// * the path returns to the axis exactly at the last step and just before
///   the up step of each node on the root's right spine;
/// * the height before a node's up step equals its diagonal depth.
///
/// Also checks that the traversal order of first visits matches the up-step
/// order. Returns a description of every violation found.
pub fn traversal_height_violations(b: &BinaryTree) -> Vec<String> {
    let mut bad = Vec::new();
    let word = dyck_from_tree(b);
    let h = word.word().heights();
    let steps = node_steps(b);

    if let Ok(walk) = traversal(b) {
        let mut firsts = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for a in &walk {
            if seen.insert(a.clone()) {
                firsts.push(a.clone());
            }
        }
        let preorder: Vec<Address> = steps.iter().map(|s| s.address.clone()).collect();
        if firsts != preorder {
            bad.push("first visits of the traversal are not in up-step order".into());
        }
        let expected_len: usize = steps
            .iter()
            .map(|s| {
                let n = b.subtree(&s.address).unwrap().root().unwrap();
                if !n.left.is_empty() && !n.right.is_empty() {
                    3
                } else {
                    2
                }
            })
            .sum();
        if walk.len() != expected_len {
            bad.push(format!("traversal has {} visits, expected {expected_len}", walk.len()));
        }
    }

    for s in &steps {
        if h[s.up - 1] != h[s.down] {
            bad.push(format!(
                "node {}: height {} before first visit, {} after second",
                s.address,
                h[s.up - 1],
                h[s.down]
            ));
        }
        let depth = diagonal_depth(b, &s.address).unwrap() as i64;
        if h[s.up - 1] != depth {
            bad.push(format!(
                "node {}: height {} before first visit but diagonal depth {depth}",
                s.address,
                h[s.up - 1]
            ));
        }
        let right = s.address.child(Side::Right);
        if let Some(r) = steps.iter().find(|t| t.address == right) {
            if h[s.up - 1] != h[r.up - 1] {
                bad.push(format!(
                    "node {}: right child starts at height {}",
                    s.address,
                    h[r.up - 1]
                ));
            }
        }
    }

    let len = word.word().len();
    let returns: Vec<usize> = (1..=len).filter(|&t| h[t] == 0).collect();
    let mut predicted: Vec<usize> = steps
        .iter()
        .filter(|s| !s.address.0.is_empty() && s.address.0.iter().all(|&m| m == Side::Right))
        .map(|s| s.up - 1)
        .collect();
    if len > 0 {
        predicted.push(len);
    }
    if returns != predicted {
        bad.push(format!(
            "returns to the axis at {returns:?}, right spine predicts {predicted:?}"
        ));
    }
    bad
}

pub fn check_traversal_heights(b: &BinaryTree) -> bool {
    traversal_height_violations(b).is_empty()
}

/// Tree-side form of the ascending recovery test, for the tree of an
/// embedded path (`n + k` nodes). Whenever a node of diagonal depth `k - 1`
/// is traversed for the second time (its down step, a crossing below the
/// shifted axis) outside the final `k + 1` steps, one of the next `2k` steps
/// must be the first traversal of a node of diagonal depth `k`.
pub fn ascending_tree_criterion(b: &BinaryTree, k: usize) -> bool {
    if k == 0 {
        return paths::embedded_ascending_criterion(&dyck_from_tree(b), 0);
    }
    let steps = node_steps(b);
    let len = 2 * steps.len();
    let depth = |s: &NodeSteps| s.address.0.iter().filter(|&&m| m == Side::Left).count();
    let mut ups_at_k: Vec<usize> = steps.iter().filter(|s| depth(s) == k).map(|s| s.up).collect();
    ups_at_k.sort_unstable();
    steps.iter().filter(|s| depth(s) == k - 1 && s.down + k < len).all(|s| {
        let i = ups_at_k.partition_point(|&u| u <= s.down);
        ups_at_k.get(i).is_some_and(|&u| u <= s.down + 2 * k)
    })
}

/// The same test read directly off the contour walk of [`traversal`]: after
/// the second visit of a depth `k - 1` node, one of the next `window` visits
/// must be to a node of depth `k`. Kept to measure how the contour reading
/// differs from the step-aligned one.
pub fn contour_tree_criterion(b: &BinaryTree, k: usize, window: usize) -> bool {
    let Ok(walk) = traversal(b) else { return true };
    if k == 0 {
        return true;
    }
    let steps = node_steps(b);
    let len = 2 * steps.len();
    let down_of = |a: &Address| steps.iter().find(|s| &s.address == a).unwrap().down;
    let depth = |a: &Address| a.0.iter().filter(|&&m| m == Side::Left).count();
    let mut visits = std::collections::HashMap::new();
    walk.iter().enumerate().all(|(i, a)| {
        let c = visits.entry(a.clone()).or_insert(0);
        *c += 1;
        if *c != 2 || depth(a) != k - 1 || down_of(a) + k >= len {
            return true;
        }
        walk[i + 1..].iter().take(window).any(|w| depth(w) == k)
    })
}

/// Shape test for the trees of descending strictly k-Naples preferences
/// (`k >= 1`): `n + k` nodes, a chain of `k - 1` left children under the
/// root, a right child of the root, and a chain of `k` left children under
/// that right child.
pub fn is_strict_descending_tree(b: &BinaryTree, n: usize, k: usize) -> bool {
    if k == 0 || b.is_empty() || b.size() != n + k {
        return false;
    }
    let right = b.right().unwrap();
    !right.is_empty() && b.left_chain() >= k - 1 && right.left_chain() >= k
}

fn descend_left(t: &BinaryTree, steps: usize) -> &BinaryTree {
    (0..steps).fold(t, |cur, _| cur.left().unwrap())
}

/// The `2k + 2` possibly empty subtrees hanging off the mandatory spine of
/// a strict tree, listed left to right (in-order).
pub fn strict_tree_slots(b: &BinaryTree, k: usize) -> Result<Vec<BinaryTree>> {
    let n = b.size().saturating_sub(k);
    if !is_strict_descending_tree(b, n, k) {
        return Err(Error::NotStrictShape { n, k });
    }
    let mut slots = Vec::with_capacity(2 * k + 2);
    // root's chain: c_0 = root, ..., c_{k-1}
    let deepest = descend_left(b, k - 1);
    slots.push(deepest.left().unwrap().clone());
    for i in (1..k).rev() {
        slots.push(descend_left(b, i).right().unwrap().clone());
    }
    // right child's chain: d_0 = right child, ..., d_k
    let r = b.right().unwrap();
    let deepest = descend_left(r, k);
    slots.push(deepest.left().unwrap().clone());
    for i in (0..=k).rev() {
        slots.push(descend_left(r, i).right().unwrap().clone());
    }
    Ok(slots)
}

/// Inverse of [`strict_tree_slots`].
pub fn strict_tree_from_slots(slots: &[BinaryTree], k: usize) -> Result<BinaryTree> {
    if k == 0 || slots.len() != 2 * k + 2 {
        return Err(Error::OutOfRange(format!("expected {} slots for k = {k}", 2 * k + 2)));
    }
    let (left_slots, right_slots) = slots.split_at(k);
    // Rebuild both chains bottom-up. On the root's side the deepest chain
    // node c_{k-1} owns two slots unless k = 1, where the root itself is
    // the deepest node and only its left slot is free.
    let root_left = if k == 1 {
        left_slots[0].clone()
    } else {
        left_slots[2..].iter().fold(
            BinaryTree::node(left_slots[0].clone(), left_slots[1].clone()),
            |acc, s| BinaryTree::node(acc, s.clone()),
        )
    };
    let root_right = right_slots[2..].iter().fold(
        BinaryTree::node(right_slots[0].clone(), right_slots[1].clone()),
        |acc, s| BinaryTree::node(acc, s.clone()),
    );
    Ok(BinaryTree::node(root_left, root_right))
}

/// Tree of a descending strictly k-Naples preference, given through its
/// k-Dyck path: embed, reflect the part after the first return, decode.
pub fn strict_tree_from_kdyck(p: &KDyckPath, k: usize) -> Result<BinaryTree> {
    if k == 0 || !paths::is_strictly_k(p, k) {
        return Err(Error::NotStrictShape { n: p.len(), k });
    }
    let d = paths::embed(p, k)?;
    Ok(tree_from_dyck(&paths::reflect_after_first_return(&d, k)?))
}

/// Inverse of [`strict_tree_from_kdyck`].
pub fn kdyck_from_strict_tree(b: &BinaryTree, n: usize, k: usize) -> Result<KDyckPath> {
    if !is_strict_descending_tree(b, n, k) {
        return Err(Error::NotStrictShape { n, k });
    }
    let d = paths::reflect_after_first_return(&dyck_from_tree(b), k)?;
    paths::unembed(&d, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> BinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn full_tree_words() {
        assert_eq!(dyck_from_full_tree(&FullBinaryTree::Leaf).to_string(), "");
        let cherry: FullBinaryTree = "(oo)".parse().unwrap();
        assert_eq!(dyck_from_full_tree(&cherry).to_string(), "UD");
        assert_eq!(full_tree_from_dyck(&"".parse().unwrap()), FullBinaryTree::Leaf);
        assert_eq!(full_tree_from_dyck(&"UUDD".parse().unwrap()).to_string(), "((oo)o)");
        assert_eq!(full_tree_from_dyck(&"UDUD".parse().unwrap()).to_string(), "(o(oo))");
    }

    #[test]
    fn prune_and_graft() {
        assert_eq!(prune(&FullBinaryTree::Leaf), BinaryTree::empty());
        assert_eq!(graft(&BinaryTree::single()).size(), 3);
        let b = t("((∅∅)(∅(∅∅)))");
        assert_eq!(prune(&graft(&b)), b);
        assert_eq!(graft(&b).size(), 2 * b.size() + 1);
    }

    #[test]
    fn depths() {
        // left child, its left child, its right child, and a right-spine node
        let b = t("(((∅∅)(∅∅))(∅∅))");
        let d = |a: &str| diagonal_depth(&b, &a.parse().unwrap()).unwrap();
        assert_eq!(d("root"), 0);
        assert_eq!(d("L"), 1);
        assert_eq!(d("LR"), 1);
        assert_eq!(d("LL"), 2);
        assert_eq!(d("R"), 0);
        assert!(diagonal_depth(&b, &"RR".parse().unwrap()).is_err());
    }

    #[test]
    fn traversal_shapes() {
        let a = |s: &str| s.parse::<Address>().unwrap();
        assert_eq!(traversal(&BinaryTree::single()).unwrap(), vec![a("root"), a("root")]);
        assert_eq!(
            traversal(&t("(∅(∅∅))")).unwrap(),
            vec![a("root"), a("R"), a("R"), a("root")]
        );
        assert!(traversal(&BinaryTree::empty()).is_err());
    }

    #[test]
    fn text_grammar() {
        assert_eq!(t(" ( . ( ∅ ∅ ) ) ").to_string(), "(∅(∅∅))");
        assert!("(∅∅".parse::<BinaryTree>().is_err());
        assert!("(∅∅))".parse::<BinaryTree>().is_err());
        assert!("x".parse::<BinaryTree>().is_err());
        assert!("(o(oo))".parse::<FullBinaryTree>().is_ok());
        assert!("(oo".parse::<FullBinaryTree>().is_err());
    }

    #[test]
    fn slots_round_trip_minimal() {
        for k in 1..4 {
            let empty = vec![BinaryTree::empty(); 2 * k + 2];
            let b = strict_tree_from_slots(&empty, k).unwrap();
            assert_eq!(b.size(), 2 * k + 1);
            assert!(is_strict_descending_tree(&b, k + 1, k));
            assert_eq!(strict_tree_slots(&b, k).unwrap(), empty);
        }
        assert!(!is_strict_descending_tree(&BinaryTree::empty(), 0, 1));
    }

    #[test]
    fn renders() {
        let b = t("((∅∅)(∅∅))");
        assert_eq!(b.render_ascii(), "*\n  L\n  R\n");
        let dot = b.render_dot();
        assert!(dot.contains("r -> rL [label=L];"));
        assert!(dot.contains("r -> rR [label=R];"));
    }
}
