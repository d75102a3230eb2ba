//! The labeled intersection lattice of an edge-colored hypergraph.
//!
//! Elements are the subspaces obtained by intersecting color subspaces,
//! ordered by reverse inclusion. Each one is stored through its vertex
//! partition (which determines it) and its closed color set.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::colorset::{ColorId, ColorSet};
use crate::hypergraph::EdgeColoredHypergraph;
use crate::partition::VertexPartition;
use crate::poly::IntegerPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeElement {
    /// Maximal color set whose intersection is this element.
    pub closed_colors: ColorSet,
    pub partition: VertexPartition,
    pub codim: usize,
}

/// Two elements covering their meet whose join fails to cover one of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemimodularityViolation {
    pub x: usize,
    pub y: usize,
    pub meet: usize,
    pub join: usize,
}

#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    vertex_count: usize,
    color_names: Vec<String>,
    /// Sorted by codimension, then partition; index 0 is the bottom.
    elements: Vec<LatticeElement>,
    index: BTreeMap<VertexPartition, usize>,
    atoms: Vec<usize>,
    /// `atom_of[c]` is the element `closure({c})`.
    atom_of: Vec<usize>,
}

impl IntersectionLattice {
    /// Closes the atoms under joins. Joining with atoms only is enough
    /// because every element is a join of atoms.
    pub fn build(h: &EdgeColoredHypergraph) -> Self {
        let n = h.vertex_count();
        let atom_parts: Vec<VertexPartition> = (0..h.color_count())
            .map(|c| h.color_partition(ColorId(c)).clone())
            .collect();
        let mut seen: BTreeMap<VertexPartition, ()> = BTreeMap::new();
        seen.insert(VertexPartition::discrete(n), ());
        let mut frontier: Vec<VertexPartition> = Vec::new();
        for p in &atom_parts {
            if seen.insert(p.clone(), ()).is_none() {
                frontier.push(p.clone());
            }
        }
        while let Some(p) = frontier.pop() {
            for a in &atom_parts {
                let j = p.join(a);
                if seen.insert(j.clone(), ()).is_none() {
                    frontier.push(j);
                }
            }
        }
        let mut parts: Vec<VertexPartition> = seen.into_keys().collect();
        parts.sort_by_cached_key(|p| (p.codim(), p.clone()));
        let elements: Vec<LatticeElement> = parts
            .into_iter()
            .map(|p| LatticeElement {
                closed_colors: h.closure_of_partition(&p),
                codim: p.codim(),
                partition: p,
            })
            .collect();
        let index: BTreeMap<VertexPartition, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.partition.clone(), i))
            .collect();
        let atom_of: Vec<usize> = atom_parts.iter().map(|p| index[p]).collect();
        let mut atoms = atom_of.clone();
        atoms.sort_unstable();
        atoms.dedup();
        Self {
            vertex_count: n,
            color_names: h.colors().to_vec(),
            elements,
            index,
            atoms,
            atom_of,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[LatticeElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &LatticeElement {
        &self.elements[i]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    /// Distinct atoms, in element order.
    pub fn atoms(&self) -> &[usize] {
        &self.atoms
    }

    pub fn atom_of(&self, color: ColorId) -> usize {
        self.atom_of[color.0]
    }

    /// The unique maximal element, if the joins produced one.
    pub fn top(&self) -> Option<usize> {
        let last = self.elements.len() - 1;
        (0..self.elements.len())
            .all(|i| self.leq(i, last))
            .then_some(last)
    }

    pub fn index_of(&self, partition: &VertexPartition) -> Option<usize> {
        self.index.get(partition).copied()
    }

    /// Element whose subspace is the intersection of the colors in `gamma`.
    pub fn element_of(&self, h: &EdgeColoredHypergraph, gamma: &ColorSet) -> usize {
        self.index[&h.partition(gamma)]
    }

    /// `x ≤ y`: the subspace of `y` is contained in that of `x`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.elements[x]
            .partition
            .refines(&self.elements[y].partition)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        let p = self.elements[x].partition.join(&self.elements[y].partition);
        self.index[&p]
    }

    /// Greatest lower bound; its closed color set is the intersection of
    /// the two closed color sets.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        let colors = self.elements[x]
            .closed_colors
            .intersection(&self.elements[y].closed_colors);
        let sets: Vec<VertexPartition> = colors
            .iter()
            .map(|c| self.elements[self.atom_of[c.0]].partition.clone())
            .collect();
        let p = sets
            .iter()
            .fold(VertexPartition::discrete(self.vertex_count), |acc, s| {
                acc.join(s)
            });
        self.index[&p]
    }

    /// `x` covers `y`: `y < x` with nothing strictly between.
    pub fn covers(&self, x: usize, y: usize) -> bool {
        self.lt(y, x) && !(0..self.elements.len()).any(|z| self.lt(y, z) && self.lt(z, x))
    }

    /// All pairs `(lower, upper)` with `upper` covering `lower`.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let n = self.elements.len();
        let mut out = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if self.covers(hi, lo) {
                    out.push((lo, hi));
                }
            }
        }
        out
    }

    /// `μ(⊥) = 1`, `μ(x) = -Σ_{y<x} μ(y)`. Elements are sorted by codim,
    /// so everything below `x` precedes it.
    pub fn mobius(&self) -> Vec<i64> {
        let n = self.elements.len();
        let mut mu = alloc::vec![0i64; n];
        for x in 0..n {
            if x == 0 {
                mu[x] = 1;
                continue;
            }
            mu[x] = -(0..x)
                .filter(|&y| self.lt(y, x))
                .map(|y| mu[y])
                .sum::<i64>();
        }
        mu
    }

    /// `Σ μ(X) t^{ℓ - codim X}`.
    pub fn characteristic_polynomial(&self) -> IntegerPolynomial {
        let mu = self.mobius();
        let mut coeffs = alloc::vec![0i64; self.vertex_count + 1];
        for (e, m) in self.elements.iter().zip(mu) {
            coeffs[self.vertex_count - e.codim] += m;
        }
        IntegerPolynomial::from_coeffs(coeffs)
    }

    /// First pair `x, y` covering `x ∧ y` whose join does not cover both.
    pub fn semimodularity_violation(&self) -> Option<SemimodularityViolation> {
        let n = self.elements.len();
        for x in 0..n {
            for y in x + 1..n {
                let m = self.meet(x, y);
                if !(self.covers(x, m) && self.covers(y, m)) {
                    continue;
                }
                let j = self.join(x, y);
                if !(self.covers(j, x) && self.covers(j, y)) {
                    return Some(SemimodularityViolation {
                        x,
                        y,
                        meet: m,
                        join: j,
                    });
                }
            }
        }
        None
    }

    pub fn is_geometric(&self) -> bool {
        self.semimodularity_violation().is_none()
    }

    /// Color names of an element's closed color set.
    pub fn color_names(&self, i: usize) -> Vec<String> {
        self.elements[i]
            .closed_colors
            .iter()
            .map(|c| self.color_names[c.0].clone())
            .collect()
    }

    /// Hasse diagram in DOT, edges pointing upward.
    pub fn hasse_dot(&self) -> String {
        let mut s = String::from("digraph lattice {\n  rankdir=BT;\n");
        for i in 0..self.elements.len() {
            let names = self.color_names(i);
            let label = if names.is_empty() {
                String::from("⊥")
            } else {
                names.join(",")
            };
            let _ = writeln!(
                s,
                "  n{i} [label=\"{{{label}}}\\ncodim {}\"];",
                self.elements[i].codim
            );
        }
        for (lo, hi) in self.cover_relations() {
            let _ = writeln!(s, "  n{lo} -> n{hi};");
        }
        s.push_str("}\n");
        s
    }
}
