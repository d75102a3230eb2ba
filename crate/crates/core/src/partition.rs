//! Set partitions of the vertex set `1..=ℓ` and the union-find used to build
//! them.

use alloc::vec::Vec;

/// Disjoint-set forest over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSet {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSet {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: alloc::vec![1; n],
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            core::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

/// A partition of `1..=ℓ`, stored canonically as the minimum vertex of the
/// block containing each vertex. Blocks of size one are allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexPartition {
    /// `rep[v - 1]` is the smallest vertex in the block of `v`.
    rep: Vec<usize>,
}

impl VertexPartition {
    /// The partition into singletons.
    pub fn discrete(vertex_count: usize) -> Self {
        Self {
            rep: (1..=vertex_count).collect(),
        }
    }

    /// Partition whose non-singleton blocks are the connected unions of the
    /// given vertex sets. Vertices are 1-based and must lie in `1..=ℓ`.
    pub fn from_sets<'a, I>(vertex_count: usize, sets: I) -> Self
    where
        I: IntoIterator<Item = &'a [usize]>,
    {
        let mut dsu = DisjointSet::new(vertex_count);
        for set in sets {
            if let Some((&first, rest)) = set.split_first() {
                for &v in rest {
                    dsu.union(first - 1, v - 1);
                }
            }
        }
        Self::from_dsu(vertex_count, &mut dsu)
    }

    fn from_dsu(vertex_count: usize, dsu: &mut DisjointSet) -> Self {
        let mut min_of_root = alloc::vec![usize::MAX; vertex_count];
        let mut rep = Vec::with_capacity(vertex_count);
        for v in 0..vertex_count {
            let r = dsu.find(v);
            if min_of_root[r] == usize::MAX {
                min_of_root[r] = v + 1;
            }
            rep.push(min_of_root[r]);
        }
        Self { rep }
    }

    pub fn vertex_count(&self) -> usize {
        self.rep.len()
    }

    /// Smallest vertex in the block of `v` (1-based).
    pub fn block_min(&self, v: usize) -> usize {
        self.rep[v - 1]
    }

    /// All blocks, including singletons, each sorted and ordered by minimum.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot = alloc::vec![usize::MAX; self.rep.len()];
        for (i, &r) in self.rep.iter().enumerate() {
            if slot[r - 1] == usize::MAX {
                slot[r - 1] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[slot[r - 1]].push(i + 1);
        }
        blocks
    }

    /// Blocks with at least two vertices.
    pub fn nontrivial_blocks(&self) -> Vec<Vec<usize>> {
        self.blocks().into_iter().filter(|b| b.len() > 1).collect()
    }

    /// `Σ (|block| - 1)`, the codimension of the diagonal subspace.
    pub fn codim(&self) -> usize {
        let blocks = self
            .rep
            .iter()
            .enumerate()
            .filter(|&(i, &r)| r == i + 1)
            .count();
        self.rep.len() - blocks
    }

    /// Every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        debug_assert_eq!(self.rep.len(), other.rep.len());
        self.rep
            .iter()
            .enumerate()
            .all(|(i, &r)| other.rep[i] == other.rep[r - 1])
    }

    /// Finest common coarsening.
    pub fn join(&self, other: &Self) -> Self {
        let n = self.rep.len();
        let mut dsu = DisjointSet::new(n);
        for i in 0..n {
            dsu.union(i, self.rep[i] - 1);
            dsu.union(i, other.rep[i] - 1);
        }
        Self::from_dsu(n, &mut dsu)
    }

    /// Whether `f` is constant on every block.
    pub fn is_constant_on_blocks<T: PartialEq>(&self, f: &[T]) -> bool {
        self.rep.iter().enumerate().all(|(i, &r)| f[i] == f[r - 1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn blocks_and_codim() {
        let p = VertexPartition::from_sets(5, [&[1usize, 2][..], &[4, 5], &[2, 3]]);
        assert_eq!(p.blocks(), vec![vec![1, 2, 3], vec![4, 5]]);
        assert_eq!(p.codim(), 3);
        assert_eq!(VertexPartition::discrete(4).codim(), 0);
    }

    #[test]
    fn refinement_and_join() {
        let a = VertexPartition::from_sets(4, [&[1usize, 2][..]]);
        let b = VertexPartition::from_sets(4, [&[3usize, 4][..]]);
        let ab = a.join(&b);
        assert!(a.refines(&ab) && b.refines(&ab));
        assert!(!a.refines(&b));
        assert_eq!(ab.nontrivial_blocks(), vec![vec![1, 2], vec![3, 4]]);
        assert!(VertexPartition::discrete(4).refines(&a));
    }
}
