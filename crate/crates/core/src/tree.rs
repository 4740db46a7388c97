//! Planar m-ary tree monomials.
//!
//! A tree is stored as its preorder shape code (`1` for an internal vertex,
//! `0` for a leaf) together with its path sequence, the depths of its leaves
//! from left to right. The path sequence is a complete invariant, so equality,
//! hashing and ordering all go through it.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Leaf depths of a tree, left to right. The single-leaf tree has `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathSequence(pub Vec<u32>);

impl PathSequence {
    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for PathSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, d) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone)]
pub struct PlanarTree {
    m: usize,
    shape: Vec<u8>,
    path: Vec<u32>,
}

impl PlanarTree {
    /// The unit of the operad: a single leaf, weight 0, arity 1.
    pub fn leaf(m: usize) -> Result<Self> {
        check_m(m)?;
        Ok(PlanarTree { m, shape: alloc::vec![0], path: alloc::vec![0] })
    }

    /// The basic tree `t` of weight 1.
    pub fn generator(m: usize) -> Result<Self> {
        check_m(m)?;
        let mut shape = alloc::vec![1];
        shape.resize(m + 1, 0);
        Ok(PlanarTree { m, shape, path: alloc::vec![1; m] })
    }

    /// Builds a tree from its preorder shape code.
    pub fn from_shape(m: usize, shape: Vec<u8>) -> Result<Self> {
        check_m(m)?;
        if shape.iter().any(|&b| b > 1) || subtree_end(m, &shape, 0) != Some(shape.len()) {
            return Err(Error::InvalidShape);
        }
        let path = path_of_shape(m, &shape);
        Ok(PlanarTree { m, shape, path })
    }

    /// Rebuilds the unique tree with the given path sequence.
    pub fn from_path(m: usize, path: &[u32]) -> Result<Self> {
        check_m(m)?;
        fn build(m: usize, path: &[u32], at: &mut usize, depth: u32, shape: &mut Vec<u8>) -> Result<()> {
            let next = *path.get(*at).ok_or(Error::InvalidPathSequence)?;
            match next.cmp(&depth) {
                Ordering::Equal => {
                    shape.push(0);
                    *at += 1;
                    Ok(())
                }
                Ordering::Greater => {
                    shape.push(1);
                    for _ in 0..m {
                        build(m, path, at, depth + 1, shape)?;
                    }
                    Ok(())
                }
                Ordering::Less => Err(Error::InvalidPathSequence),
            }
        }
        let mut shape = Vec::with_capacity(path.len() * 2);
        let mut at = 0;
        build(m, path, &mut at, 0, &mut shape)?;
        if at != path.len() {
            return Err(Error::InvalidPathSequence);
        }
        Ok(PlanarTree { m, shape, path: path.to_vec() })
    }

    /// Internal constructor for shapes already known to be valid.
    pub(crate) fn from_shape_unchecked(m: usize, shape: Vec<u8>) -> Self {
        debug_assert_eq!(subtree_end(m, &shape, 0), Some(shape.len()));
        let path = path_of_shape(m, &shape);
        PlanarTree { m, shape, path }
    }

    /// A root with the given children, left to right.
    pub fn graft(m: usize, children: &[&PlanarTree]) -> Result<Self> {
        check_m(m)?;
        if children.len() != m {
            return Err(Error::InvalidShape);
        }
        let mut shape = alloc::vec![1];
        let mut path = Vec::new();
        for c in children {
            if c.m != m {
                return Err(Error::MismatchedBranching(m, c.m));
            }
            shape.extend_from_slice(&c.shape);
            path.extend(c.path.iter().map(|d| d + 1));
        }
        Ok(PlanarTree { m, shape, path })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of internal vertices.
    pub fn weight(&self) -> usize {
        self.shape.len() - self.path.len()
    }

    /// Number of leaves.
    pub fn arity(&self) -> usize {
        self.path.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.shape.len() == 1
    }

    pub fn shape(&self) -> &[u8] {
        &self.shape
    }

    pub fn path(&self) -> &[u32] {
        &self.path
    }

    pub fn path_sequence(&self) -> PathSequence {
        PathSequence(self.path.clone())
    }

    /// Partial composition `self ∘_i q`: leaf `i` (1-based) of `self` becomes
    /// the root of `q`. Carries no sign.
    pub fn compose(&self, i: usize, q: &PlanarTree) -> Result<PlanarTree> {
        if self.m != q.m {
            return Err(Error::MismatchedBranching(self.m, q.m));
        }
        if i == 0 || i > self.arity() {
            return Err(Error::LeafIndex { index: i, arity: self.arity() });
        }
        let at = self.leaf_position(i);
        let mut shape = Vec::with_capacity(self.shape.len() + q.shape.len() - 1);
        shape.extend_from_slice(&self.shape[..at]);
        shape.extend_from_slice(&q.shape);
        shape.extend_from_slice(&self.shape[at + 1..]);
        let depth = self.path[i - 1];
        let mut path = Vec::with_capacity(self.path.len() + q.path.len() - 1);
        path.extend_from_slice(&self.path[..i - 1]);
        path.extend(q.path.iter().map(|d| d + depth));
        path.extend_from_slice(&self.path[i..]);
        Ok(PlanarTree { m: self.m, shape, path })
    }

    /// Position in the shape code of leaf `i` (1-based).
    pub(crate) fn leaf_position(&self, i: usize) -> usize {
        self.shape
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 0)
            .nth(i - 1)
            .map(|(k, _)| k)
            .expect("leaf index in range")
    }

    /// Number of internal vertices after leaf `i` in preorder.
    pub fn internal_after_leaf(&self, i: usize) -> usize {
        let at = self.leaf_position(i);
        self.shape[at + 1..].iter().filter(|&&b| b == 1).count()
    }

    /// Shape-code positions of the internal vertices, in preorder.
    pub(crate) fn internal_positions(&self) -> impl Iterator<Item = usize> + '_ {
        self.shape.iter().enumerate().filter(|(_, &b)| b == 1).map(|(k, _)| k)
    }

    /// Counts leaves by the child slot they occupy under their parent:
    /// entry `j` counts leaves that are the `j`-th child. For ternary trees
    /// this is the (left, middle, right) triple.
    pub fn leaf_slot_counts(&self) -> Vec<usize> {
        let mut counts = alloc::vec![0; self.m];
        // stack of next child slot for each open internal vertex
        let mut open: Vec<usize> = Vec::new();
        for &b in &self.shape {
            let slot = open.last().copied();
            if let Some(top) = open.last_mut() {
                *top += 1;
            }
            if b == 0 {
                if let Some(s) = slot {
                    counts[s] += 1;
                }
            } else {
                open.push(0);
            }
            while open.last() == Some(&self.m) {
                open.pop();
            }
        }
        counts
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        Err(Error::BranchingArity(m))
    } else {
        Ok(())
    }
}

/// End (exclusive) of the subtree starting at `start`, or `None` if the code
/// runs out first.
pub(crate) fn subtree_end(m: usize, shape: &[u8], start: usize) -> Option<usize> {
    let mut need = 1usize;
    let mut at = start;
    while need > 0 {
        match *shape.get(at)? {
            1 => need += m - 1,
            _ => need -= 1,
        }
        at += 1;
    }
    Some(at)
}

fn path_of_shape(m: usize, shape: &[u8]) -> Vec<u32> {
    let mut path = Vec::new();
    // remaining children to visit for each open vertex
    let mut open: Vec<usize> = Vec::new();
    for &b in shape {
        if b == 0 {
            path.push(open.len() as u32);
            while let Some(top) = open.last_mut() {
                *top -= 1;
                if *top == 0 {
                    open.pop();
                } else {
                    break;
                }
            }
        } else {
            open.push(m);
        }
    }
    path
}

impl PartialEq for PlanarTree {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.path == other.path
    }
}

impl Eq for PlanarTree {}

impl core::hash::Hash for PlanarTree {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.path.hash(state);
    }
}

/// Orders by branching arity, then arity, then path-lex.
impl Ord for PlanarTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.m
            .cmp(&other.m)
            .then(self.path.len().cmp(&other.path.len()))
            .then_with(|| self.path.cmp(&other.path))
    }
}

impl PartialOrd for PlanarTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Nonassociative notation: `*` for a leaf, `(` children `)` for a vertex.
impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut open: Vec<usize> = Vec::new();
        for &b in &self.shape {
            if b == 1 {
                f.write_str("(")?;
                open.push(self.m);
                continue;
            }
            f.write_str("*")?;
            while let Some(top) = open.last_mut() {
                *top -= 1;
                if *top == 0 {
                    open.pop();
                    f.write_str(")")?;
                } else {
                    break;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Path-lex comparison of two trees of equal arity.
pub fn compare_pathlex(p: &PlanarTree, q: &PlanarTree) -> Result<Ordering> {
    if p.m != q.m {
        return Err(Error::MismatchedBranching(p.m, q.m));
    }
    if p.arity() != q.arity() {
        return Err(Error::ArityMismatch(p.arity(), q.arity()));
    }
    Ok(p.path.cmp(&q.path))
}

/// All trees of arity `n`, ascending in path-lex.
pub fn enumerate_trees(m: usize, n: usize) -> Result<Vec<PlanarTree>> {
    let w = weight_for_arity(m, n)?;
    Ok(enumerate_by_weight(m, w, |_| true).pop().unwrap_or_default())
}

pub(crate) fn weight_for_arity(m: usize, n: usize) -> Result<usize> {
    check_m(m)?;
    if n == 0 || !(n - 1).is_multiple_of(m - 1) {
        return Err(Error::InvalidArity { arity: n, step: m - 1 });
    }
    Ok((n - 1) / (m - 1))
}

/// Trees of weight `0..=max_weight` built bottom-up from root graftings.
/// A candidate is kept only if `keep` accepts it; since every child comes from
/// an earlier kept list, `keep` only needs to inspect the new root. Each
/// returned list is sorted ascending.
pub(crate) fn enumerate_by_weight<F>(m: usize, max_weight: usize, keep: F) -> Vec<Vec<PlanarTree>>
where
    F: Fn(&PlanarTree) -> bool,
{
    let leaf = PlanarTree { m, shape: alloc::vec![0], path: alloc::vec![0] };
    let mut by_weight: Vec<Vec<PlanarTree>> = Vec::with_capacity(max_weight + 1);
    by_weight.push(if keep(&leaf) { alloc::vec![leaf] } else { Vec::new() });
    for w in 1..=max_weight {
        let mut level = Vec::new();
        let mut picks: Vec<&PlanarTree> = Vec::with_capacity(m);
        fill_children(m, w - 1, &by_weight, &mut picks, &mut |children| {
            let mut shape = alloc::vec![1];
            let mut path = Vec::new();
            for c in children {
                shape.extend_from_slice(&c.shape);
                path.extend(c.path.iter().map(|d| d + 1));
            }
            let tree = PlanarTree { m, shape, path };
            if keep(&tree) {
                level.push(tree);
            }
        });
        level.sort_unstable();
        by_weight.push(level);
    }
    by_weight
}

fn fill_children<'a>(
    m: usize,
    remaining: usize,
    by_weight: &'a [Vec<PlanarTree>],
    picks: &mut Vec<&'a PlanarTree>,
    emit: &mut dyn FnMut(&[&PlanarTree]),
) {
    if picks.len() == m - 1 {
        for c in &by_weight[remaining] {
            picks.push(c);
            emit(picks);
            picks.pop();
        }
        return;
    }
    for w in 0..=remaining {
        for c in &by_weight[w] {
            picks.push(c);
            fill_children(m, remaining - w, by_weight, picks, emit);
            picks.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn t() -> PlanarTree {
        PlanarTree::generator(3).unwrap()
    }

    #[test]
    fn generator_and_leaf() {
        assert_eq!(t().path(), &[1, 1, 1]);
        assert_eq!(t().to_string(), "(***)");
        assert_eq!(PlanarTree::generator(2).unwrap().path(), &[1, 1]);
        assert_eq!(PlanarTree::generator(1), Err(Error::BranchingArity(1)));
        let leaf = PlanarTree::leaf(3).unwrap();
        assert_eq!(leaf.path(), &[0]);
        assert_eq!((leaf.weight(), leaf.arity()), (0, 1));
    }

    #[test]
    fn composition_examples() {
        let t1t = t().compose(1, &t()).unwrap();
        assert_eq!(t1t.to_string(), "((***)**)");
        assert_eq!(t1t.path(), &[2, 2, 2, 1, 1]);

        let beta_lm = t().compose(2, &t().compose(3, &t()).unwrap()).unwrap();
        assert_eq!(beta_lm.to_string(), "(*(**(***))*)");
        assert_eq!(beta_lm.path(), &[1, 2, 2, 3, 3, 3, 1]);

        let a = t1t.compose(4, &t()).unwrap();
        let b = t().compose(2, &t()).unwrap().compose(1, &t()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn composition_errors() {
        assert_eq!(t().compose(4, &t()), Err(Error::LeafIndex { index: 4, arity: 3 }));
        assert_eq!(t().compose(0, &t()), Err(Error::LeafIndex { index: 0, arity: 3 }));
        let b = PlanarTree::generator(2).unwrap();
        assert_eq!(t().compose(1, &b), Err(Error::MismatchedBranching(3, 2)));
    }

    #[test]
    fn pathlex_examples() {
        let t1t = t().compose(1, &t()).unwrap();
        let t2t = t().compose(2, &t()).unwrap();
        let t3t = t().compose(3, &t()).unwrap();
        assert_eq!(compare_pathlex(&t2t, &t1t), Ok(Ordering::Less));
        assert_eq!(compare_pathlex(&t3t, &t2t), Ok(Ordering::Less));
        assert_eq!(compare_pathlex(&t1t, &t1t), Ok(Ordering::Equal));
        assert_eq!(compare_pathlex(&t(), &t1t), Err(Error::ArityMismatch(3, 5)));
    }

    #[test]
    fn path_roundtrip_and_rejects() {
        for n in [1, 3, 5, 7, 9] {
            for p in enumerate_trees(3, n).unwrap() {
                assert_eq!(PlanarTree::from_path(3, p.path()).unwrap(), p);
                assert_eq!(PlanarTree::from_shape(3, p.shape().to_vec()).unwrap(), p);
            }
        }
        assert_eq!(PlanarTree::from_path(3, &[1, 1]), Err(Error::InvalidPathSequence));
        assert_eq!(PlanarTree::from_path(3, &[1, 1, 1, 1]), Err(Error::InvalidPathSequence));
        assert_eq!(PlanarTree::from_path(3, &[]), Err(Error::InvalidPathSequence));
        assert_eq!(PlanarTree::from_shape(3, alloc::vec![1, 0, 0]), Err(Error::InvalidShape));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_trees(3, 1).unwrap().len(), 1);
        assert_eq!(enumerate_trees(3, 5).unwrap().len(), 3);
        assert_eq!(enumerate_trees(3, 4), Err(Error::InvalidArity { arity: 4, step: 2 }));
        let trees = enumerate_trees(3, 9).unwrap();
        assert!(trees.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn slot_counts() {
        let f1 = PlanarTree::from_path(3, &[1, 1, 2, 2, 3, 3, 3]).unwrap();
        assert_eq!(f1.to_string(), "(**(**(***)))");
        assert_eq!(f1.leaf_slot_counts(), alloc::vec![3, 3, 1]);
        assert_eq!(PlanarTree::leaf(3).unwrap().leaf_slot_counts(), alloc::vec![0, 0, 0]);
    }
}
