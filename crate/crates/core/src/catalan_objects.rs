//! Polygon dissections and rooted non-crossing partitions for descending
//! strictly k-Naples preferences.
//!
//! Both bijections go through the `2k + 2` slot subtrees of the strict tree
//! (see [`trees::strict_tree_slots`]). Each slot is turned into a classical
//! Catalan object and the pieces are laid out clockwise, slot 0 first.
//!
//! Slot building blocks:
//!
//! * tree to triangulation: a polygon with `i + 2` vertices `v_0..v_{i+1}`
//!   and base edge `(v_0, v_{i+1})`; the root is the triangle on the base
//!   with apex `v_{|L|+1}`, the left subtree triangulates `v_0..v_{|L|+1}`
//!   and the right subtree `v_{|L|+1}..v_{i+1}`.
//! * tree to non-crossing partition of elements `e_1 < .. < e_i`: if the
//!   right subtree is empty, `e_1` is a singleton and the left subtree
//!   partitions `e_2..e_i`; otherwise the left subtree partitions
//!   `e_2..e_{|L|+1}`, the right subtree partitions `e_{|L|+2}..e_i`, and
//!   `e_1` joins the block of `e_{|L|+2}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};
use crate::parking::parse_list;
use crate::trees::{self, BinaryTree};

/// An `r`-in-`s` dissection: the `s`-gon with vertices `0..s` clockwise, cut
/// by non-crossing diagonals into one `r`-gon and `s - r` triangles.
///
/// Rotation classes are represented canonically: vertex 0 is a corner of the
/// `r`-gon, and the distinguished `r`-gon edge is the one leaving vertex 0
/// clockwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dissection {
    s: usize,
    r: usize,
    diagonals: BTreeSet<(usize, usize)>,
    central: Vec<usize>,
}

impl Dissection {
    pub fn new(s: usize, r: usize, diagonals: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidDissection(m));
        if r < 4 || r > s {
            return bad(format!("need 4 <= r <= s, got r={r}, s={s}"));
        }
        let mut set = BTreeSet::new();
        for (a, b) in diagonals {
            let (a, b) = (a.min(b), a.max(b));
            if b >= s {
                return bad(format!("vertex {b} outside 0..{s}"));
            }
            if b - a <= 1 || (a == 0 && b == s - 1) {
                return bad(format!("({a},{b}) is not a diagonal"));
            }
            if !set.insert((a, b)) {
                return bad(format!("diagonal ({a},{b}) repeated"));
            }
        }
        let list: Vec<_> = set.iter().copied().collect();
        for (i, &(a, b)) in list.iter().enumerate() {
            for &(c, d) in &list[i + 1..] {
                if (a < c && c < b && b < d) || (c < a && a < d && d < b) {
                    return bad(format!("({a},{b}) crosses ({c},{d})"));
                }
            }
        }
        let faces = polygon_faces((0..s).collect(), &list);
        let big: Vec<&Vec<usize>> = faces.iter().filter(|f| f.len() != 3).collect();
        if big.len() != 1 || big[0].len() != r || faces.len() != s - r + 1 {
            return bad(format!("faces are not one {r}-gon plus {} triangles", s - r));
        }
        let mut central = big[0].clone();
        central.sort_unstable();
        if central[0] != 0 {
            return bad("vertex 0 is not a corner of the central polygon".into());
        }
        Ok(Self {
            s,
            r,
            diagonals: set,
            central,
        })
    }

    pub fn sides(&self) -> usize {
        self.s
    }

    pub fn central_sides(&self) -> usize {
        self.r
    }

    pub fn diagonals(&self) -> &BTreeSet<(usize, usize)> {
        &self.diagonals
    }

    /// Corners of the central polygon in clockwise order, starting at 0.
    pub fn central_polygon(&self) -> &[usize] {
        &self.central
    }

    /// The distinguished edge of the central polygon.
    pub fn distinguished_edge(&self) -> (usize, usize) {
        (self.central[0], self.central[1])
    }
}

/// Splits a convex polygon along non-crossing diagonals into its faces.
fn polygon_faces(vertices: Vec<usize>, diagonals: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let pos = |v: usize| vertices.iter().position(|&x| x == v);
    let m = vertices.len();
    let split = diagonals.iter().find_map(|&(a, b)| {
        let (i, j) = (pos(a)?, pos(b)?);
        let (i, j) = (i.min(j), i.max(j));
        (j - i > 1 && !(i == 0 && j == m - 1)).then_some((i, j))
    });
    let Some((i, j)) = split else {
        return vec![vertices];
    };
    let inner: Vec<usize> = vertices[i..=j].to_vec();
    let mut outer: Vec<usize> = vertices[j..].to_vec();
    outer.extend_from_slice(&vertices[..=i]);
    let (a, b) = (vertices[i], vertices[j]);
    let rest: Vec<(usize, usize)> = diagonals
        .iter()
        .copied()
        .filter(|&d| d != (a.min(b), a.max(b)))
        .collect();
    let within = |part: &[usize]| -> Vec<(usize, usize)> {
        rest.iter()
            .copied()
            .filter(|&(x, y)| part.contains(&x) && part.contains(&y))
            .collect()
    };
    let mut faces = polygon_faces(inner.clone(), &within(&inner));
    faces.extend(polygon_faces(outer.clone(), &within(&outer)));
    faces
}

impl fmt::Display for Dissection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={};r={};diag=", self.s, self.r)?;
        for (i, (a, b)) in self.diagonals.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

/// Parses `s=<s>;r=<r>;diag=(a,b),(c,d),...`.
impl FromStr for Dissection {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let fields = key_values(src, &["s", "r", "diag"])?;
        let num = |key: &str| -> Result<usize> {
            fields[key]
                .trim()
                .parse()
                .map_err(|_| parse_err(src, format!("bad value for {key}")))
        };
        let (s, r) = (num("s")?, num("r")?);
        let body = fields["diag"].trim();
        let mut diags = Vec::new();
        if !body.is_empty() {
            let inner = body
                .strip_prefix('(')
                .and_then(|b| b.strip_suffix(')'))
                .ok_or_else(|| parse_err(src, "diagonals must be written (a,b),(c,d)"))?;
            for pair in inner.split("),(") {
                match parse_list(pair)?.as_slice() {
                    &[a, b] => diags.push((a, b)),
                    _ => return Err(parse_err(src, format!("bad diagonal ({pair})"))),
                }
            }
        }
        Self::new(s, r, diags)
    }
}

fn key_values<'a>(src: &'a str, keys: &[&str]) -> Result<BTreeMap<String, &'a str>> {
    let parts: Vec<&str> = src.trim().split(';').collect();
    if parts.len() != keys.len() {
        return Err(parse_err(src, format!("expected fields {}", keys.join(";"))));
    }
    let mut out = BTreeMap::new();
    for (part, key) in parts.iter().zip(keys) {
        let value = part
            .trim()
            .strip_prefix(key)
            .and_then(|rest| rest.trim_start().strip_prefix('='))
            .ok_or_else(|| parse_err(src, format!("expected field {key}=")))?;
        out.insert(key.to_string(), value);
    }
    Ok(out)
}

/// A non-crossing set partition of `1..=m` with a distinguished root block
/// containing 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedNonCrossingPartition {
    m: usize,
    root: Vec<usize>,
    /// Non-root blocks, each sorted, ordered by least element.
    blocks: Vec<Vec<usize>>,
}

impl RootedNonCrossingPartition {
    pub fn new(m: usize, root: Vec<usize>, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidPartition(msg));
        let mut root = root;
        root.sort_unstable();
        if root.first() != Some(&1) {
            return bad("root block must contain 1".into());
        }
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(Vec::is_empty) {
            return bad("empty block".into());
        }
        blocks.sort();
        let mut seen = vec![false; m + 1];
        for x in root.iter().chain(blocks.iter().flatten()) {
            if *x == 0 || *x > m {
                return bad(format!("element {x} outside 1..={m}"));
            }
            if std::mem::replace(&mut seen[*x], true) {
                return bad(format!("element {x} appears twice"));
            }
        }
        if let Some(x) = (1..=m).find(|&x| !seen[x]) {
            return bad(format!("element {x} is missing"));
        }
        let p = Self { m, root, blocks };
        if let Some((a, b)) = p.first_crossing() {
            return bad(format!("blocks {a:?} and {b:?} cross"));
        }
        Ok(p)
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn root(&self) -> &[usize] {
        &self.root
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn all_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        std::iter::once(&self.root).chain(self.blocks.iter())
    }

    /// Single left-to-right pass with a stack of open blocks: an element
    /// that continues a block other than the innermost open one signals a
    /// crossing.
    fn first_crossing(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let blocks: Vec<&Vec<usize>> = self.all_blocks().collect();
        let mut owner = vec![0; self.m + 1];
        for (id, b) in blocks.iter().enumerate() {
            for &x in b.iter() {
                owner[x] = id;
            }
        }
        let mut stack: Vec<usize> = Vec::new();
        for x in 1..=self.m {
            let id = owner[x];
            let b = blocks[id];
            let first = b[0] == x;
            let last = *b.last().unwrap() == x;
            if !first {
                match stack.last() {
                    Some(&top) if top == id => {}
                    Some(&top) => return Some((blocks[top].clone(), b.clone())),
                    None => unreachable!("continuing block must be open"),
                }
                if last {
                    stack.pop();
                }
            } else if !last {
                stack.push(id);
            }
        }
        None
    }
}

/// Quadratic reference check: two blocks cross when some `a < b < c < d`
/// has `a, c` in one and `b, d` in the other.
pub fn blocks_cross(x: &[usize], y: &[usize]) -> bool {
    let interleaves = |p: &[usize], q: &[usize]| {
        p.iter().any(|&a| {
            q.iter()
                .any(|&b| b > a && p.iter().any(|&c| c > b && q.iter().any(|&d| d > c)))
        })
    };
    interleaves(x, y) || interleaves(y, x)
}

impl fmt::Display for RootedNonCrossingPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |b: &Vec<usize>| {
            let items: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        let rest: Vec<String> = self.blocks.iter().map(block).collect();
        write!(f, "root={};blocks={}", block(&self.root), rest.join(","))
    }
}

/// Parses `root={1,..};blocks={..},{..}`; the ground set is `1..=m` where
/// `m` is the number of listed elements.
impl FromStr for RootedNonCrossingPartition {
    type Err = Error;

    fn from_str(src: &str) -> Result<Self> {
        let fields = key_values(src, &["root", "blocks"])?;
        let braces = |text: &str| -> Result<Vec<Vec<usize>>> {
            let text = text.trim();
            if text.is_empty() {
                return Ok(Vec::new());
            }
            let inner = text
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| parse_err(src, "blocks must be written {a,b},{c}"))?;
            inner.split("},{").map(parse_list).collect()
        };
        let mut root = braces(fields["root"])?;
        if root.len() != 1 {
            return Err(parse_err(src, "root must be a single block"));
        }
        let root = root.pop().unwrap();
        let blocks = braces(fields["blocks"])?;
        let m = root.len() + blocks.iter().map(Vec::len).sum::<usize>();
        Self::new(m, root, blocks)
    }
}

fn triangulate(t: &BinaryTree, verts: &[usize], out: &mut Vec<(usize, usize)>) {
    let Some(node) = t.root() else { return };
    let last = verts.len() - 1;
    let apex = node.left.size() + 1;
    let edge = |a: usize, b: usize| (verts[a].min(verts[b]), verts[a].max(verts[b]));
    if apex > 1 {
        out.push(edge(0, apex));
    }
    if last - apex > 1 {
        out.push(edge(apex, last));
    }
    triangulate(&node.left, &verts[..=apex], out);
    triangulate(&node.right, &verts[apex..], out);
}

fn untriangulate(verts: &[usize], diagonals: &BTreeSet<(usize, usize)>) -> Result<BinaryTree> {
    if verts.len() == 2 {
        return Ok(BinaryTree::empty());
    }
    let last = verts.len() - 1;
    let joined =
        |i: usize, j: usize| j - i == 1 || diagonals.contains(&(verts[i].min(verts[j]), verts[i].max(verts[j])));
    let apex = (1..last)
        .find(|&i| joined(0, i) && joined(i, last))
        .ok_or_else(|| Error::InvalidDissection(format!("no triangle on base ({},{})", verts[0], verts[last])))?;
    Ok(BinaryTree::node(
        untriangulate(&verts[..=apex], diagonals)?,
        untriangulate(&verts[apex..], diagonals)?,
    ))
}

/// Triangulation of the `(i + 2)`-gon on `verts` encoded by an `i`-node tree.
pub fn triangulation_from_tree(t: &BinaryTree, verts: &[usize]) -> Result<Vec<(usize, usize)>> {
    if verts.len() != t.size() + 2 {
        return Err(Error::OutOfRange(format!(
            "{} vertices for a {}-node tree",
            verts.len(),
            t.size()
        )));
    }
    let mut out = Vec::new();
    triangulate(t, verts, &mut out);
    Ok(out)
}

/// Inverse of [`triangulation_from_tree`].
pub fn tree_from_triangulation(verts: &[usize], diagonals: &BTreeSet<(usize, usize)>) -> Result<BinaryTree> {
    if verts.len() < 2 {
        return Err(Error::InvalidDissection("polygon needs a base edge".into()));
    }
    untriangulate(verts, diagonals)
}

/// Non-crossing partition of `elems` (ascending) encoded by a tree with
/// `elems.len()` nodes.
pub fn ncp_from_tree(t: &BinaryTree, elems: &[usize]) -> Result<Vec<Vec<usize>>> {
    if elems.len() != t.size() {
        return Err(Error::OutOfRange(format!(
            "{} elements for a {}-node tree",
            elems.len(),
            t.size()
        )));
    }
    fn go(t: &BinaryTree, elems: &[usize]) -> Vec<Vec<usize>> {
        let Some(node) = t.root() else { return Vec::new() };
        if node.right.is_empty() {
            let mut blocks = vec![vec![elems[0]]];
            blocks.extend(go(&node.left, &elems[1..]));
            return blocks;
        }
        let j = node.left.size() + 1;
        let mut blocks = go(&node.left, &elems[1..j]);
        let mut outer = go(&node.right, &elems[j..]);
        let host = outer.iter_mut().find(|b| b.contains(&elems[j])).unwrap();
        host.insert(0, elems[0]);
        blocks.extend(outer);
        blocks
    }
    let mut blocks = go(t, elems);
    blocks.sort();
    Ok(blocks)
}

/// Inverse of [`ncp_from_tree`]; `blocks` must partition `elems` without
/// crossings.
pub fn tree_from_ncp(elems: &[usize], blocks: &[Vec<usize>]) -> Result<BinaryTree> {
    let mut owner = BTreeMap::new();
    for (id, b) in blocks.iter().enumerate() {
        for &x in b {
            owner.insert(x, id);
        }
    }
    if elems.iter().any(|x| !owner.contains_key(x)) || owner.len() != elems.len() {
        return Err(Error::InvalidPartition("blocks do not partition the gap".into()));
    }
    fn go(
        elems: &[usize],
        blocks: &[Vec<usize>],
        owner: &BTreeMap<usize, usize>,
        skip_first_of: Option<usize>,
    ) -> Result<BinaryTree> {
        let Some(&first) = elems.first() else {
            return Ok(BinaryTree::empty());
        };
        let block = &blocks[owner[&first]];
        // `skip_first_of` hides an element already consumed by an enclosing call.
        let next = block
            .iter()
            .copied()
            .filter(|&x| x > first && Some(x) != skip_first_of)
            .min();
        match next {
            None => Ok(BinaryTree::node(
                go(&elems[1..], blocks, owner, None)?,
                BinaryTree::empty(),
            )),
            Some(second) => {
                let j = elems
                    .iter()
                    .position(|&x| x == second)
                    .ok_or_else(|| Error::InvalidPartition(format!("block of {first} leaves its gap")))?;
                let inner = &elems[1..j];
                if inner.iter().any(|x| block.contains(x)) {
                    return Err(Error::InvalidPartition("unsorted block".into()));
                }
                let left = go(inner, blocks, owner, None)?;
                let right = go(&elems[j..], blocks, owner, Some(first))?;
                Ok(BinaryTree::node(left, right))
            }
        }
    }
    go(elems, blocks, &owner, None)
}

/// Central-polygon corners (or root elements) laid out from slot sizes:
/// start at `origin`, then each slot of size `t` advances by `t + 1`.
fn corners(origin: usize, sizes: &[usize]) -> Vec<usize> {
    let mut out = vec![origin];
    for t in &sizes[..sizes.len() - 1] {
        out.push(out.last().unwrap() + t + 1);
    }
    out
}

/// `(2k+2)`-in-`(n+k+1)` dissection of a strict tree.
pub fn dissection_from_strict(b: &BinaryTree, n: usize, k: usize) -> Result<Dissection> {
    if !trees::is_strict_descending_tree(b, n, k) {
        return Err(Error::NotStrictShape { n, k });
    }
    let slots = trees::strict_tree_slots(b, k)?;
    let sizes: Vec<usize> = slots.iter().map(BinaryTree::size).collect();
    let s = n + k + 1;
    let c = corners(0, &sizes);
    let mut diags = Vec::new();
    for (j, slot) in slots.iter().enumerate() {
        let mut verts: Vec<usize> = if j + 1 < c.len() {
            (c[j]..=c[j + 1]).collect()
        } else {
            (c[j]..s).collect()
        };
        if j + 1 == c.len() {
            verts.push(0);
        }
        let (a, z) = (verts[0], *verts.last().unwrap());
        let (a, z) = (a.min(z), a.max(z));
        if z - a > 1 && !(a == 0 && z == s - 1) {
            diags.push((a, z));
        }
        diags.extend(triangulation_from_tree(slot, &verts)?);
    }
    Dissection::new(s, 2 * k + 2, diags)
}

/// Inverse of [`dissection_from_strict`].
pub fn strict_from_dissection(d: &Dissection, n: usize, k: usize) -> Result<BinaryTree> {
    if k == 0 || d.sides() != n + k + 1 || d.central_sides() != 2 * k + 2 {
        return Err(Error::InvalidDissection(format!(
            "expected a {}-in-{} dissection, got {}-in-{}",
            2 * k + 2,
            n + k + 1,
            d.central_sides(),
            d.sides()
        )));
    }
    let c = d.central_polygon();
    let s = d.sides();
    let mut slots = Vec::with_capacity(c.len());
    for j in 0..c.len() {
        let mut verts: Vec<usize> = if j + 1 < c.len() {
            (c[j]..=c[j + 1]).collect()
        } else {
            (c[j]..s).collect()
        };
        if j + 1 == c.len() {
            verts.push(0);
        }
        let inside: BTreeSet<(usize, usize)> = d
            .diagonals()
            .iter()
            .copied()
            .filter(|&(x, y)| verts.contains(&x) && verts.contains(&y))
            .collect();
        slots.push(tree_from_triangulation(&verts, &inside)?);
    }
    trees::strict_tree_from_slots(&slots, k)
}

/// `(2k+2)`-rooted non-crossing partition of `[n+k+1]` of a strict tree.
pub fn ncp_from_strict(b: &BinaryTree, n: usize, k: usize) -> Result<RootedNonCrossingPartition> {
    if !trees::is_strict_descending_tree(b, n, k) {
        return Err(Error::NotStrictShape { n, k });
    }
    let slots = trees::strict_tree_slots(b, k)?;
    let sizes: Vec<usize> = slots.iter().map(BinaryTree::size).collect();
    let m = n + k + 1;
    let root = corners(1, &sizes);
    let mut blocks = Vec::new();
    for (j, slot) in slots.iter().enumerate() {
        let gap: Vec<usize> = (root[j] + 1..=root[j] + sizes[j]).collect();
        blocks.extend(ncp_from_tree(slot, &gap)?);
    }
    RootedNonCrossingPartition::new(m, root, blocks)
}

/// Inverse of [`ncp_from_strict`].
pub fn strict_from_ncp(p: &RootedNonCrossingPartition, n: usize, k: usize) -> Result<BinaryTree> {
    let m = n + k + 1;
    if k == 0 || p.ground_size() != m {
        return Err(Error::InvalidPartition(format!(
            "expected ground set [{m}], got [{}]",
            p.ground_size()
        )));
    }
    if p.root().len() != 2 * k + 2 {
        return Err(Error::InvalidPartition(format!(
            "root has {} elements, expected {}",
            p.root().len(),
            2 * k + 2
        )));
    }
    let root = p.root();
    let mut slots = Vec::with_capacity(root.len());
    for (j, &start) in root.iter().enumerate() {
        let end = root.get(j + 1).copied().unwrap_or(m + 1);
        let gap: Vec<usize> = (start + 1..end).collect();
        let inside: Vec<Vec<usize>> = p.blocks().iter().filter(|b| gap.contains(&b[0])).cloned().collect();
        slots.push(tree_from_ncp(&gap, &inside)?);
    }
    trees::strict_tree_from_slots(&slots, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_triangulations_round_trip() {
        for i in 0..7 {
            let verts: Vec<usize> = (10..12 + i).collect();
            for t in BinaryTree::all_with_nodes(i) {
                let diags = triangulation_from_tree(&t, &verts).unwrap();
                assert_eq!(diags.len(), i.saturating_sub(1));
                let set = diags.into_iter().collect();
                assert_eq!(tree_from_triangulation(&verts, &set).unwrap(), t);
            }
        }
    }

    #[test]
    fn slot_partitions_round_trip() {
        for i in 0..8 {
            let elems: Vec<usize> = (3..3 + i).collect();
            let mut seen = BTreeSet::new();
            for t in BinaryTree::all_with_nodes(i) {
                let blocks = ncp_from_tree(&t, &elems).unwrap();
                for (a, x) in blocks.iter().enumerate() {
                    for y in &blocks[a + 1..] {
                        assert!(!blocks_cross(x, y));
                    }
                }
                assert!(seen.insert(blocks.clone()));
                assert_eq!(tree_from_ncp(&elems, &blocks).unwrap(), t);
            }
        }
    }

    #[test]
    fn minimal_strict_objects() {
        for k in 1..4 {
            let b = trees::strict_tree_from_slots(&vec![BinaryTree::empty(); 2 * k + 2], k).unwrap();
            let d = dissection_from_strict(&b, k + 1, k).unwrap();
            assert!(d.diagonals().is_empty());
            assert_eq!(d.sides(), 2 * k + 2);
            assert_eq!(strict_from_dissection(&d, k + 1, k).unwrap(), b);
            let p = ncp_from_strict(&b, k + 1, k).unwrap();
            assert_eq!(p.root(), (1..=2 * k + 2).collect::<Vec<_>>().as_slice());
            assert!(p.blocks().is_empty());
            assert_eq!(strict_from_ncp(&p, k + 1, k).unwrap(), b);
        }
    }

    #[test]
    fn dissection_validation() {
        assert!(Dissection::new(6, 4, [(0, 2), (3, 5)]).is_ok());
        assert!(Dissection::new(6, 4, [(0, 3), (1, 4)]).is_err(), "crossing");
        assert!(Dissection::new(6, 4, [(0, 1)]).is_err(), "outer edge");
        assert!(Dissection::new(6, 4, [(0, 2)]).is_err(), "pentagon left over");
        assert!(
            Dissection::new(6, 4, [(1, 5), (2, 4)]).is_err(),
            "vertex 0 in a triangle"
        );
        let d: Dissection = "s=6;r=4;diag=(0,2),(3,5)".parse().unwrap();
        assert_eq!(d.to_string(), "s=6;r=4;diag=(0,2),(3,5)");
        assert_eq!(d.central_polygon(), &[0, 2, 3, 5]);
        assert_eq!(d.distinguished_edge(), (0, 2));
        assert!("s=6;r=4".parse::<Dissection>().is_err());
    }

    #[test]
    fn partition_validation() {
        assert!(RootedNonCrossingPartition::new(4, vec![1, 3], vec![vec![2, 4]]).is_err());
        assert!(RootedNonCrossingPartition::new(4, vec![2, 3], vec![vec![1, 4]]).is_err());
        assert!(RootedNonCrossingPartition::new(4, vec![1, 4], vec![vec![2]]).is_err());
        let p = RootedNonCrossingPartition::new(5, vec![1, 4, 5], vec![vec![3], vec![2]]).unwrap();
        assert_eq!(p.to_string(), "root={1,4,5};blocks={2},{3}");
        assert_eq!(p.to_string().parse::<RootedNonCrossingPartition>().unwrap(), p);
        assert!("root={1,2};blocks=".parse::<RootedNonCrossingPartition>().is_ok());
        assert!("root={1,3};blocks=".parse::<RootedNonCrossingPartition>().is_err());
    }

    #[test]
    fn reference_crossing_check() {
        assert!(blocks_cross(&[1, 3], &[2, 4]));
        assert!(!blocks_cross(&[1, 4], &[2, 3]));
        assert!(!blocks_cross(&[1, 2], &[3, 4]));
    }
}
