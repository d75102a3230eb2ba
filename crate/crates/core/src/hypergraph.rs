//! Edge-colored hypergraphs and the color-set combinatorics of their
//! arrangements.
//!
//! A color `λ` stands for the subspace `X_λ ⊆ ℂ^ℓ` cut out by `x_i = x_j` for
//! all `i, j` in a common edge of color `λ`. A set of colors `Γ` stands for
//! the intersection of the corresponding subspaces, which is the diagonal
//! subspace of the vertex partition generated by the edges of `Γ`.

use alloc::borrow::ToOwned;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};

use crate::colorset::{ColorId, ColorSet};
use crate::error::{Error, Result};
use crate::partition::VertexPartition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Sorted, duplicate-free, 1-based.
    pub vertices: Vec<usize>,
    pub color: ColorId,
}

/// Problems reported by [`EdgeColoredHypergraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    EdgeTooSmall {
        edge: usize,
    },
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
    },
    EdgelessColor {
        color: ColorId,
    },
    /// Strict mode only: `refined ⋐ coarser` for two distinct colors.
    Refinement {
        refined: ColorId,
        coarser: ColorId,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoredHypergraph {
    vertex_count: usize,
    colors: Vec<String>,
    edges: Vec<Edge>,
    color_partitions: Vec<VertexPartition>,
}

/// Result of contracting a color: the contracted hypergraph and the colors
/// whose edges all collapsed to single vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub hypergraph: EdgeColoredHypergraph,
    pub collapsed_colors: Vec<String>,
}

impl EdgeColoredHypergraph {
    /// Builds a hypergraph from `(vertices, color)` pairs. Colors are ordered
    /// lexicographically. Fails on the first non-strict [`Violation`].
    pub fn new<S, I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<usize>, S)>,
    {
        let raw: Vec<(Vec<usize>, String)> = edges
            .into_iter()
            .map(|(v, c)| (v, c.as_ref().to_owned()))
            .collect();
        let mut colors: Vec<String> = raw.iter().map(|(_, c)| c.clone()).collect();
        colors.sort();
        colors.dedup();
        let edges = raw
            .into_iter()
            .map(|(v, c)| {
                let id = colors.binary_search(&c).expect("color collected above");
                (v, ColorId(id))
            })
            .collect();
        let h = Self::from_raw(vertex_count, colors, edges);
        h.check(false)?;
        Ok(h)
    }

    /// Builds a hypergraph without validation. Out-of-range vertices are
    /// ignored by every operation except [`validate`](Self::validate).
    pub fn from_raw(
        vertex_count: usize,
        colors: Vec<String>,
        edges: Vec<(Vec<usize>, ColorId)>,
    ) -> Self {
        let edges: Vec<Edge> = edges
            .into_iter()
            .map(|(mut vertices, color)| {
                vertices.sort_unstable();
                vertices.dedup();
                Edge { vertices, color }
            })
            .collect();
        let color_partitions = (0..colors.len())
            .map(|c| {
                let sets: Vec<Vec<usize>> = edges
                    .iter()
                    .filter(|e| e.color.0 == c)
                    .map(|e| {
                        e.vertices
                            .iter()
                            .copied()
                            .filter(|&v| (1..=vertex_count).contains(&v))
                            .collect()
                    })
                    .collect();
                VertexPartition::from_sets(vertex_count, sets.iter().map(Vec::as_slice))
            })
            .collect();
        Self {
            vertex_count,
            colors,
            edges,
            color_partitions,
        }
    }

    pub fn edgeless(vertex_count: usize) -> Self {
        Self::from_raw(vertex_count, Vec::new(), Vec::new())
    }

    /// The k-equal arrangement: every k-subset of `1..=ℓ` is an edge with
    /// its own color. Colors are named by their vertices, zero-padded so
    /// that lexicographic order matches the subset order.
    pub fn kequal(vertex_count: usize, k: usize) -> Result<Self> {
        if k < 2 || k > vertex_count {
            return Err(Error::KEqualRange { l: vertex_count, k });
        }
        let width = vertex_count.to_string().len();
        let mut edges = Vec::new();
        let mut subset: Vec<usize> = (1..=k).collect();
        loop {
            let name = subset
                .iter()
                .map(|v| format!("{v:0width$}"))
                .collect::<Vec<_>>()
                .join(".");
            edges.push((subset.clone(), name));
            // next k-subset in lexicographic order
            let Some(i) = (0..k)
                .rev()
                .find(|&i| subset[i] < vertex_count - (k - 1 - i))
            else {
                break;
            };
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
        }
        Self::new(vertex_count, edges)
    }

    /// Re-indexes the colors so that `order` becomes the canonical order.
    pub fn with_color_order<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        if order.len() != self.colors.len() {
            return Err(Error::BadColorOrder(format!(
                "expected {} colors, got {}",
                self.colors.len(),
                order.len()
            )));
        }
        let mut new_id = vec![usize::MAX; self.colors.len()];
        for (i, name) in order.iter().enumerate() {
            let old = self.color_id(name.as_ref())?;
            if new_id[old.0] != usize::MAX {
                return Err(Error::BadColorOrder(format!(
                    "`{}` listed twice",
                    name.as_ref()
                )));
            }
            new_id[old.0] = i;
        }
        let colors = order.iter().map(|s| s.as_ref().to_owned()).collect();
        let edges = self
            .edges
            .iter()
            .map(|e| (e.vertices.clone(), ColorId(new_id[e.color.0])))
            .collect();
        Ok(Self::from_raw(self.vertex_count, colors, edges))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> usize {
        self.colors.len()
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn color_name(&self, color: ColorId) -> &str {
        &self.colors[color.0]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edges_of(&self, color: ColorId) -> impl Iterator<Item = &Edge> {
        self.edges.iter().filter(move |e| e.color == color)
    }

    pub fn color_id(&self, name: &str) -> Result<ColorId> {
        self.colors
            .iter()
            .position(|c| c == name)
            .map(ColorId)
            .ok_or_else(|| Error::UnknownColor(name.to_owned()))
    }

    /// Resolves color names into a [`ColorSet`].
    pub fn color_set<S: AsRef<str>>(&self, names: &[S]) -> Result<ColorSet> {
        names.iter().map(|n| self.color_id(n.as_ref())).collect()
    }

    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.colors.len())
    }

    /// Names of the colors in `set`, in canonical order.
    pub fn names(&self, set: &ColorSet) -> Vec<String> {
        set.iter().map(|c| self.colors[c.0].clone()).collect()
    }

    pub fn color_partition(&self, color: ColorId) -> &VertexPartition {
        &self.color_partitions[color.0]
    }

    /// Partition of `1..=ℓ` generated by the edges of colors in `gamma`.
    pub fn partition(&self, gamma: &ColorSet) -> VertexPartition {
        gamma
            .iter()
            .fold(VertexPartition::discrete(self.vertex_count), |acc, c| {
                acc.join(&self.color_partitions[c.0])
            })
    }

    /// Vertex sets of the connected components of the edges colored by
    /// `gamma`; each has at least two vertices.
    pub fn connected_components(&self, gamma: &ColorSet) -> Vec<Vec<usize>> {
        self.partition(gamma).nontrivial_blocks()
    }

    /// Codimension of `⋂_{λ∈Γ} X_λ`: `Σ (|V_i| - 1)` over components.
    pub fn codim(&self, gamma: &ColorSet) -> usize {
        self.partition(gamma).codim()
    }

    /// `Γ ⋐ Γ'`: every component of `Γ` lies inside a component of `Γ'`.
    pub fn refines(&self, gamma: &ColorSet, other: &ColorSet) -> bool {
        self.partition(gamma).refines(&self.partition(other))
    }

    /// `Γ ≡ Γ'`: both define the same subspace.
    pub fn equivalent(&self, gamma: &ColorSet, other: &ColorSet) -> bool {
        self.partition(gamma) == self.partition(other)
    }

    /// The largest color set equivalent to `gamma`.
    pub fn closure(&self, gamma: &ColorSet) -> ColorSet {
        let p = self.partition(gamma);
        self.closure_of_partition(&p)
    }

    /// Colors whose subspace contains the diagonal subspace of `p`.
    pub fn closure_of_partition(&self, p: &VertexPartition) -> ColorSet {
        (0..self.colors.len())
            .filter(|&c| self.color_partitions[c].refines(p))
            .map(ColorId)
            .collect()
    }

    /// Codimensions add exactly under union.
    pub fn multiplicative(&self, gamma: &ColorSet, other: &ColorSet) -> bool {
        self.codim(gamma) + self.codim(other) == self.codim(&gamma.union(other))
    }

    /// Closed color set of the meet of the two lattice elements; the empty
    /// set stands for the ambient space.
    pub fn meet_colorsets(&self, gamma: &ColorSet, other: &ColorSet) -> ColorSet {
        self.closure(gamma).intersection(&self.closure(other))
    }

    /// Removes the edges of `color` and the color itself.
    pub fn delete_color(&self, color: ColorId) -> Result<Self> {
        self.check_color(color)?;
        Ok(self.restrict(|c| c != color))
    }

    /// Deletes `color` and identifies the vertices of each of its connected
    /// components. Merged vertices are named by block order, which keeps the
    /// relative order of block minima; edges shrinking below two vertices
    /// are dropped, and so are colors left without edges.
    pub fn contract_color(&self, color: ColorId) -> Result<Contraction> {
        self.check_color(color)?;
        let blocks = self.color_partitions[color.0].blocks();
        let mut new_vertex = vec![0; self.vertex_count + 1];
        for (i, block) in blocks.iter().enumerate() {
            for &v in block {
                new_vertex[v] = i + 1;
            }
        }
        let mut mapped: Vec<(Vec<usize>, ColorId)> = Vec::new();
        for e in self.edges.iter().filter(|e| e.color != color) {
            let mut vs: Vec<usize> = e
                .vertices
                .iter()
                .filter(|&&v| (1..=self.vertex_count).contains(&v))
                .map(|&v| new_vertex[v])
                .collect();
            vs.sort_unstable();
            vs.dedup();
            if vs.len() >= 2 {
                mapped.push((vs, e.color));
            }
        }
        let mut alive = vec![false; self.colors.len()];
        for (_, c) in &mapped {
            alive[c.0] = true;
        }
        let collapsed_colors = (0..self.colors.len())
            .filter(|&c| c != color.0 && !alive[c])
            .map(|c| self.colors[c].clone())
            .collect();
        let mut new_id = vec![usize::MAX; self.colors.len()];
        let mut colors = Vec::new();
        for c in 0..self.colors.len() {
            if alive[c] {
                new_id[c] = colors.len();
                colors.push(self.colors[c].clone());
            }
        }
        let edges = mapped
            .into_iter()
            .map(|(vs, c)| (vs, ColorId(new_id[c.0])))
            .collect();
        Ok(Contraction {
            hypergraph: Self::from_raw(blocks.len(), colors, edges),
            collapsed_colors,
        })
    }

    fn restrict(&self, keep: impl Fn(ColorId) -> bool) -> Self {
        let mut new_id = vec![usize::MAX; self.colors.len()];
        let mut colors = Vec::new();
        for (c, id) in new_id.iter_mut().enumerate() {
            if keep(ColorId(c)) {
                *id = colors.len();
                colors.push(self.colors[c].clone());
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| keep(e.color))
            .map(|e| (e.vertices.clone(), ColorId(new_id[e.color.0])))
            .collect();
        Self::from_raw(self.vertex_count, colors, edges)
    }

    fn check_color(&self, color: ColorId) -> Result<()> {
        if color.0 < self.colors.len() {
            Ok(())
        } else {
            Err(Error::UnknownColor(format!("#{}", color.0)))
        }
    }

    /// Structural diagnostics. In strict mode also reports every ordered
    /// pair of distinct colors where one refines the other.
    pub fn validate(&self, strict: bool) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut used = vec![false; self.colors.len()];
        for (i, e) in self.edges.iter().enumerate() {
            if e.vertices.len() < 2 {
                out.push(Violation::EdgeTooSmall { edge: i });
            }
            for &v in &e.vertices {
                if !(1..=self.vertex_count).contains(&v) {
                    out.push(Violation::VertexOutOfRange { edge: i, vertex: v });
                }
            }
            if let Some(u) = used.get_mut(e.color.0) {
                *u = true;
            }
        }
        for (c, &u) in used.iter().enumerate() {
            if !u {
                out.push(Violation::EdgelessColor { color: ColorId(c) });
            }
        }
        if strict && out.is_empty() {
            for a in 0..self.colors.len() {
                for b in 0..self.colors.len() {
                    if a != b && self.color_partitions[a].refines(&self.color_partitions[b]) {
                        out.push(Violation::Refinement {
                            refined: ColorId(a),
                            coarser: ColorId(b),
                        });
                    }
                }
            }
        }
        out
    }

    /// Converts the first violation, if any, into an [`Error`].
    pub fn check(&self, strict: bool) -> Result<()> {
        match self.validate(strict).into_iter().next() {
            None => Ok(()),
            Some(v) => Err(self.violation_error(&v)),
        }
    }

    pub fn violation_error(&self, v: &Violation) -> Error {
        match *v {
            Violation::EdgeTooSmall { edge } => Error::EdgeTooSmall { edge },
            Violation::VertexOutOfRange { edge, vertex } => Error::VertexOutOfRange {
                edge,
                vertex,
                vertex_count: self.vertex_count,
            },
            Violation::EdgelessColor { color } => {
                Error::EdgelessColor(self.colors[color.0].clone())
            }
            Violation::Refinement { refined, coarser } => Error::RefinedColors {
                refined: self.colors[refined.0].clone(),
                coarser: self.colors[coarser.0].clone(),
            },
        }
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn ex28() -> EdgeColoredHypergraph {
        EdgeColoredHypergraph::new(4, [(vec![1, 2], "R"), (vec![2, 3], "B"), (vec![3, 4], "R")])
            .unwrap()
    }

    pub fn ex28_2() -> EdgeColoredHypergraph {
        EdgeColoredHypergraph::new(
            5,
            [
                (vec![1, 2, 3], "R"),
                (vec![2, 3, 4], "B"),
                (vec![3, 4, 5], "G"),
            ],
        )
        .unwrap()
        .with_color_order(&["R", "B", "G"])
        .unwrap()
    }

    pub fn smalldude() -> EdgeColoredHypergraph {
        EdgeColoredHypergraph::new(
            4,
            [(vec![1, 2, 3], "a"), (vec![3, 4], "b"), (vec![2, 4], "c")],
        )
        .unwrap()
    }

    pub fn mcs7() -> EdgeColoredHypergraph {
        EdgeColoredHypergraph::new(
            7,
            [
                (vec![1, 2, 3], "L1"),
                (vec![3, 4, 5], "L2"),
                (vec![5, 6, 7], "L3"),
                (vec![2, 3, 4], "L4"),
                (vec![4, 5, 6], "L5"),
            ],
        )
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn set(h: &EdgeColoredHypergraph, names: &[&str]) -> ColorSet {
        h.color_set(names).unwrap()
    }

    #[test]
    fn components_of_ex28() {
        let h = ex28();
        assert_eq!(
            h.connected_components(&set(&h, &["R"])),
            vec![vec![1, 2], vec![3, 4]]
        );
        assert!(h.connected_components(&ColorSet::new()).is_empty());
        let h2 = ex28_2();
        assert_eq!(
            h2.connected_components(&set(&h2, &["R", "G"])),
            vec![vec![1, 2, 3, 4, 5]]
        );
    }

    #[test]
    fn unknown_color_is_an_error() {
        assert_eq!(
            ex28().color_set(&["Q"]),
            Err(Error::UnknownColor("Q".into()))
        );
    }

    #[test]
    fn codimensions() {
        let h = ex28();
        assert_eq!(h.codim(&set(&h, &["R"])), 2);
        assert_eq!(h.codim(&set(&h, &["R", "B"])), 3);
        assert_eq!(h.codim(&ColorSet::new()), 0);
        let h2 = ex28_2();
        assert_eq!(h2.codim(&set(&h2, &["R", "G"])), 4);
    }

    #[test]
    fn refinement_closure_meet() {
        let h2 = ex28_2();
        assert!(h2.refines(&set(&h2, &["B"]), &set(&h2, &["R", "G"])));
        assert!(!h2.refines(&set(&h2, &["R"]), &set(&h2, &["B"])));
        assert!(h2.refines(&ColorSet::new(), &set(&h2, &["B"])));
        assert_eq!(h2.closure(&set(&h2, &["R", "G"])), h2.all_colors());
        assert_eq!(h2.closure(&ColorSet::new()), ColorSet::new());
        assert_eq!(
            h2.meet_colorsets(&set(&h2, &["R", "G"]), &set(&h2, &["B"])),
            set(&h2, &["B"])
        );
        let h = ex28();
        assert_eq!(h.closure(&set(&h, &["B"])), set(&h, &["B"]));
        assert!(h
            .meet_colorsets(&set(&h, &["R"]), &set(&h, &["B"]))
            .is_empty());
    }

    #[test]
    fn multiplicativity() {
        let h2 = ex28_2();
        assert!(h2.multiplicative(&set(&h2, &["R"]), &set(&h2, &["G"])));
        assert!(!h2.multiplicative(&set(&h2, &["R"]), &set(&h2, &["B"])));
        assert!(h2.multiplicative(&set(&h2, &["B"]), &ColorSet::new()));
    }

    #[test]
    fn deletion_and_contraction() {
        let h = ex28();
        let b = h.color_id("B").unwrap();
        let del = h.delete_color(b).unwrap();
        assert_eq!(del.vertex_count(), 4);
        assert_eq!(del.colors(), &["R".to_string()]);
        let ev: Vec<_> = del.edges().iter().map(|e| e.vertices.clone()).collect();
        assert_eq!(ev, vec![vec![1, 2], vec![3, 4]]);

        let con = h.contract_color(b).unwrap().hypergraph;
        assert_eq!(con.vertex_count(), 3);
        let ev: Vec<_> = con.edges().iter().map(|e| e.vertices.clone()).collect();
        assert_eq!(ev, vec![vec![1, 2], vec![2, 3]]);

        let h2 = ex28_2();
        let con = h2.contract_color(h2.color_id("R").unwrap()).unwrap();
        assert!(con.collapsed_colors.is_empty());
        let g = con.hypergraph;
        assert_eq!(g.vertex_count(), 3);
        let b2 = g.color_id("B").unwrap();
        let g2 = g.color_id("G").unwrap();
        assert_eq!(g.edges_of(b2).next().unwrap().vertices, vec![1, 2]);
        assert_eq!(g.edges_of(g2).next().unwrap().vertices, vec![1, 2, 3]);
        assert!(h.delete_color(ColorId(9)).is_err());
    }

    #[test]
    fn contraction_reports_collapsed_colors() {
        let h = EdgeColoredHypergraph::kequal(3, 2).unwrap();
        let first = h.contract_color(ColorId(0)).unwrap().hypergraph;
        assert_eq!(first.color_count(), 2);
        let second = first.contract_color(ColorId(0)).unwrap();
        assert_eq!(second.collapsed_colors.len(), 1);
        assert_eq!(second.hypergraph.color_count(), 0);
    }

    #[test]
    fn validation() {
        assert!(ex28().validate(true).is_empty());
        let bad = EdgeColoredHypergraph::from_raw(4, vec!["x".into()], vec![(vec![3], ColorId(0))]);
        assert_eq!(
            bad.validate(false),
            vec![Violation::EdgeTooSmall { edge: 0 }]
        );
        let out =
            EdgeColoredHypergraph::from_raw(4, vec!["x".into()], vec![(vec![1, 9], ColorId(0))]);
        assert_eq!(
            out.validate(false),
            vec![Violation::VertexOutOfRange { edge: 0, vertex: 9 }]
        );
        let nested =
            EdgeColoredHypergraph::new(3, [(vec![1, 2], "x"), (vec![1, 2, 3], "y")]).unwrap();
        assert_eq!(
            nested.validate(true),
            vec![Violation::Refinement {
                refined: ColorId(0),
                coarser: ColorId(1)
            }]
        );
        assert!(nested.validate(false).is_empty());
    }

    #[test]
    fn kequal_shapes() {
        let a3 = EdgeColoredHypergraph::kequal(3, 2).unwrap();
        assert_eq!(a3.color_count(), 3);
        let ev: Vec<_> = a3.edges().iter().map(|e| e.vertices.clone()).collect();
        assert_eq!(ev, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(
            EdgeColoredHypergraph::kequal(4, 3).unwrap().color_count(),
            4
        );
        let k53 = EdgeColoredHypergraph::kequal(5, 3).unwrap();
        assert_eq!(k53.color_count(), 10);
        assert!((0..10).all(|c| k53.codim(&ColorSet::singleton(ColorId(c))) == 2));
        assert!(EdgeColoredHypergraph::kequal(3, 4).is_err());
        assert!(EdgeColoredHypergraph::kequal(3, 1).is_err());
    }
}
