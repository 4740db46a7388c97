//! Divisibility of tree monomials and small common multiples.
//!
//! Vertices are identified by their position in the host's preorder shape
//! code, so an anchor is simply an index into [`PlanarTree::shape`].

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::tree::{subtree_end, PlanarTree};

/// An embedding of `pattern` into `host`, rooted at `anchor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Occurrence {
    host: PlanarTree,
    pattern: PlanarTree,
    anchor: usize,
    end: usize,
    covered: Vec<usize>,
    branches: Vec<Range<usize>>,
}

impl Occurrence {
    /// The occurrence of `pattern` rooted at host vertex `anchor`, if any.
    /// A weight-0 pattern only anchors at host leaves.
    pub fn at(host: &PlanarTree, pattern: &PlanarTree, anchor: usize) -> Option<Occurrence> {
        if host.m() != pattern.m() || anchor >= host.shape().len() {
            return None;
        }
        if pattern.is_leaf() != (host.shape()[anchor] == 0) {
            return None;
        }
        let m = host.m();
        let hs = host.shape();
        let mut at = anchor;
        let mut covered = Vec::with_capacity(pattern.weight());
        let mut branches = Vec::with_capacity(pattern.arity());
        for &sym in pattern.shape() {
            if sym == 1 {
                if hs[at] != 1 {
                    return None;
                }
                covered.push(at);
                at += 1;
            } else {
                let end = subtree_end(m, hs, at)?;
                branches.push(at..end);
                at = end;
            }
        }
        Some(Occurrence {
            host: host.clone(),
            pattern: pattern.clone(),
            anchor,
            end: at,
            covered,
            branches,
        })
    }

    pub fn host(&self) -> &PlanarTree {
        &self.host
    }

    pub fn pattern(&self) -> &PlanarTree {
        &self.pattern
    }

    /// Host vertex (shape-code position) matched to the pattern root.
    pub fn anchor(&self) -> usize {
        self.anchor
    }

    /// Host internal vertices matched to pattern internal vertices, in the
    /// pattern's preorder.
    pub fn covered(&self) -> &[usize] {
        &self.covered
    }

    /// Host subtrees hanging from the pattern's leaves, as shape-code ranges.
    pub fn branches(&self) -> &[Range<usize>] {
        &self.branches
    }

    /// Host shape-code range of the subtree rooted at the anchor.
    pub fn span(&self) -> Range<usize> {
        self.anchor..self.end
    }

    /// First and last host leaf (1-based) below the anchor.
    pub fn leaf_span(&self) -> (usize, usize) {
        let leaves_before = self.host.shape()[..self.anchor].iter().filter(|&&b| b == 0).count();
        let inside = self.host.shape()[self.anchor..self.end].iter().filter(|&&b| b == 0).count();
        (leaves_before + 1, leaves_before + inside)
    }

    /// Weight of the host subtree hanging at each pattern leaf.
    pub fn branch_weights(&self) -> Vec<usize> {
        self.branches
            .iter()
            .map(|r| self.host.shape()[r.clone()].iter().filter(|&&b| b == 1).count())
            .collect()
    }
}

/// Allocation-free test for an occurrence rooted at `anchor`.
pub(crate) fn matches_at(host: &PlanarTree, pattern: &PlanarTree, anchor: usize) -> bool {
    let hs = host.shape();
    if pattern.is_leaf() {
        return hs[anchor] == 0;
    }
    let mut at = anchor;
    for &sym in pattern.shape() {
        if sym == 1 {
            if hs.get(at) != Some(&1) {
                return false;
            }
            at += 1;
        } else {
            match subtree_end(host.m(), hs, at) {
                Some(end) => at = end,
                None => return false,
            }
        }
    }
    true
}

fn candidate_anchors<'a>(host: &'a PlanarTree, pattern: &PlanarTree) -> impl Iterator<Item = usize> + 'a {
    let want = if pattern.is_leaf() { 0 } else { 1 };
    let fits = pattern.weight() <= host.weight() && host.m() == pattern.m();
    host.shape()
        .iter()
        .enumerate()
        .filter(move |(_, &b)| fits && b == want)
        .map(|(k, _)| k)
}

/// Smallest anchor at which `pattern` occurs in `host`.
pub fn first_occurrence_anchor(pattern: &PlanarTree, host: &PlanarTree) -> Option<usize> {
    candidate_anchors(host, pattern).find(|&a| matches_at(host, pattern, a))
}

pub fn divides(pattern: &PlanarTree, host: &PlanarTree) -> bool {
    first_occurrence_anchor(pattern, host).is_some()
}

/// All occurrences of `pattern` in `host`, ordered by anchor.
pub fn find_occurrences(pattern: &PlanarTree, host: &PlanarTree) -> Result<Vec<Occurrence>> {
    if pattern.m() != host.m() {
        return Err(Error::MismatchedBranching(pattern.m(), host.m()));
    }
    Ok(candidate_anchors(host, pattern)
        .filter_map(|a| Occurrence::at(host, pattern, a))
        .collect())
}

/// A small common multiple: an overlap of two patterns sharing at least one
/// internal vertex, with every vertex covered by one of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scm {
    pub tree: PlanarTree,
    pub occ_left: Occurrence,
    pub occ_right: Occurrence,
}

impl Scm {
    pub fn arity(&self) -> usize {
        self.tree.arity()
    }
}

/// Superposes the subtree of `a` at `ia` with the subtree of `b` at `ib`.
fn merge(m: usize, a: &[u8], ia: &mut usize, b: &[u8], ib: &mut usize, out: &mut Vec<u8>) {
    match (a[*ia], b[*ib]) {
        (1, 1) => {
            out.push(1);
            *ia += 1;
            *ib += 1;
            for _ in 0..m {
                merge(m, a, ia, b, ib, out);
            }
        }
        (1, _) => {
            let end = subtree_end(m, a, *ia).expect("valid shape");
            out.extend_from_slice(&a[*ia..end]);
            *ia = end;
            *ib += 1;
        }
        (_, 1) => {
            let end = subtree_end(m, b, *ib).expect("valid shape");
            out.extend_from_slice(&b[*ib..end]);
            *ib = end;
            *ia += 1;
        }
        _ => {
            out.push(0);
            *ia += 1;
            *ib += 1;
        }
    }
}

/// Places the root of `upper` at internal vertex `at` of `base`.
fn overlay(base: &PlanarTree, at: usize, upper: &PlanarTree) -> PlanarTree {
    let m = base.m();
    let bs = base.shape();
    let mut out = Vec::with_capacity(bs.len() + upper.shape().len());
    out.extend_from_slice(&bs[..at]);
    let (mut ia, mut ib) = (at, 0);
    merge(m, bs, &mut ia, upper.shape(), &mut ib, &mut out);
    out.extend_from_slice(&bs[ia..]);
    PlanarTree::from_shape_unchecked(m, out)
}

/// Every SCM of `p` (left) and `q` (right), ordered by tree (path-lex) and
/// then by the two anchors.
///
/// With `exclude_total_self` set and `p == q`, the two patterns are treated as
/// the same basis element: the full-coincidence overlap is dropped and mirror
/// images are reported once (left anchor below right anchor).
pub fn enumerate_scms(p: &PlanarTree, q: &PlanarTree, exclude_total_self: bool) -> Result<Vec<Scm>> {
    if p.m() != q.m() {
        return Err(Error::MismatchedBranching(p.m(), q.m()));
    }
    if p.is_leaf() || q.is_leaf() {
        return Ok(Vec::new());
    }
    let same = exclude_total_self && p == q;
    let mut records: Vec<(PlanarTree, usize, usize)> = Vec::new();
    for v in p.internal_positions() {
        records.push((overlay(p, v, q), 0, v));
    }
    for u in q.internal_positions().skip(1) {
        records.push((overlay(q, u, p), u, 0));
    }
    if same {
        records.retain(|(_, l, r)| l < r);
    }
    records.sort();
    records.dedup();
    Ok(records
        .into_iter()
        .map(|(tree, l, r)| {
            let occ_left = Occurrence::at(&tree, p, l).expect("left pattern placed by construction");
            let occ_right = Occurrence::at(&tree, q, r).expect("right pattern placed by construction");
            Scm { tree, occ_left, occ_right }
        })
        .collect())
}
