//! The relative atomic complex: a finite commutative differential graded
//! algebra over `ℚ` with one generator `a_σ` per set `σ` of colors.
//!
//! Colors are put in a fixed [`AtomOrder`] and a set `σ` is encoded as a
//! bitmask over positions in that order. Elements of the algebra are
//! [`SparseVec`]s indexed by masks.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::{One, Signed};

use crate::colorset::{ColorId, ColorSet};
use crate::error::{Error, Result};
use crate::hypergraph::EdgeColoredHypergraph;
use crate::linalg::{q, Echelon, LinearMap, SparseVec, Q};

/// Default cap on the number of colors; the complex has `2^|Λ|` generators.
pub const DEFAULT_MAX_ATOMS: usize = 20;

/// A linear order on the colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomOrder(pub Vec<ColorId>);

impl AtomOrder {
    /// The hypergraph's own color order.
    pub fn canonical(h: &EdgeColoredHypergraph) -> Self {
        Self((0..h.color_count()).map(ColorId).collect())
    }

    pub fn from_names<S: AsRef<str>>(h: &EdgeColoredHypergraph, names: &[S]) -> Result<Self> {
        let ids = names
            .iter()
            .map(|n| h.color_id(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        let order = Self(ids);
        order.check(h)?;
        Ok(order)
    }

    fn check(&self, h: &EdgeColoredHypergraph) -> Result<()> {
        let mut seen = ColorSet::new();
        for &c in &self.0 {
            if !seen.insert(c) {
                return Err(Error::BadColorOrder(String::from(h.color_name(c))));
            }
        }
        if seen.len() != h.color_count() {
            return Err(Error::BadColorOrder(String::from(
                "order must list every color exactly once",
            )));
        }
        Ok(())
    }
}

/// Set bits of `mask` in increasing position order.
pub fn positions(mask: u32) -> impl Iterator<Item = usize> {
    let mut rest = mask;
    core::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let p = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(p)
    })
}

#[derive(Debug, Clone)]
pub struct RelativeAtomicComplex {
    order: Vec<ColorId>,
    names: Vec<String>,
    codim: Vec<usize>,
    degree: Vec<i64>,
    /// `d a_σ` as signed masks.
    differential: Vec<Vec<(u32, i64)>>,
    by_degree: BTreeMap<i64, Vec<u32>>,
}

/// Betti numbers and cocycle representatives for a range of degrees.
#[derive(Debug, Clone, Default)]
pub struct Cohomology {
    pub betti: BTreeMap<i64, usize>,
    pub representatives: BTreeMap<i64, Vec<SparseVec>>,
}

impl RelativeAtomicComplex {
    pub fn build(h: &EdgeColoredHypergraph, order: &AtomOrder) -> Result<Self> {
        Self::build_with_cap(h, order, DEFAULT_MAX_ATOMS)
    }

    pub fn build_with_cap(
        h: &EdgeColoredHypergraph,
        order: &AtomOrder,
        max_atoms: usize,
    ) -> Result<Self> {
        order.check(h)?;
        let n = order.0.len();
        if n > max_atoms.min(31) {
            return Err(Error::BudgetExceeded {
                what: "generators",
                needed: 1u128 << n.min(127),
                limit: 1u128 << max_atoms.min(31),
            });
        }
        let size = 1usize << n;
        let mut codim = alloc::vec![0usize; size];
        for (mask, c) in codim.iter_mut().enumerate().skip(1) {
            let set: ColorSet = positions(mask as u32).map(|p| order.0[p]).collect();
            *c = h.codim(&set);
        }
        let degree: Vec<i64> = (0..size)
            .map(|m| 2 * codim[m] as i64 - (m as u32).count_ones() as i64)
            .collect();
        let differential = (0..size as u32)
            .map(|m| {
                positions(m)
                    .enumerate()
                    .filter(|&(_, p)| codim[(m & !(1 << p)) as usize] == codim[m as usize])
                    .map(|(j, p)| (m & !(1 << p), if (j + 1) % 2 == 0 { 1 } else { -1 }))
                    .collect()
            })
            .collect();
        let mut by_degree: BTreeMap<i64, Vec<u32>> = BTreeMap::new();
        for m in 0..size as u32 {
            by_degree.entry(degree[m as usize]).or_default().push(m);
        }
        Ok(Self {
            order: order.0.clone(),
            names: order
                .0
                .iter()
                .map(|&c| String::from(h.color_name(c)))
                .collect(),
            codim,
            degree,
            differential,
            by_degree,
        })
    }

    pub fn atom_count(&self) -> usize {
        self.order.len()
    }

    pub fn order(&self) -> &[ColorId] {
        &self.order
    }

    pub fn generator_count(&self) -> usize {
        self.degree.len()
    }

    /// Mask of a color set.
    pub fn mask_of(&self, set: &ColorSet) -> u32 {
        self.order
            .iter()
            .enumerate()
            .filter(|(_, c)| set.contains(**c))
            .fold(0, |m, (p, _)| m | (1 << p))
    }

    pub fn mask_of_names<S: AsRef<str>>(&self, names: &[S]) -> Result<u32> {
        let mut m = 0;
        for n in names {
            let p = self
                .names
                .iter()
                .position(|x| x == n.as_ref())
                .ok_or_else(|| Error::UnknownColor(String::from(n.as_ref())))?;
            m |= 1 << p;
        }
        Ok(m)
    }

    pub fn colors_of(&self, mask: u32) -> ColorSet {
        positions(mask).map(|p| self.order[p]).collect()
    }

    /// Color names of `σ` in atom order.
    pub fn names_of(&self, mask: u32) -> Vec<String> {
        positions(mask).map(|p| self.names[p].clone()).collect()
    }

    /// `a{λ,μ,…}`.
    pub fn label(&self, mask: u32) -> String {
        let mut s = String::from("a{");
        s.push_str(&self.names_of(mask).join(","));
        s.push('}');
        s
    }

    /// `a{L1,L2} - 2·a{L3}` style rendering of an element.
    pub fn format_element(&self, v: &SparseVec) -> String {
        if v.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, (mask, k)) in v.entries().iter().enumerate() {
            s.push_str(match (i, k.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            });
            let mag = k.abs();
            if !mag.is_one() {
                let _ = write!(s, "{mag}·");
            }
            s.push_str(&self.label(*mask as u32));
        }
        s
    }

    pub fn codim(&self, mask: u32) -> usize {
        self.codim[mask as usize]
    }

    pub fn degree(&self, mask: u32) -> i64 {
        self.degree[mask as usize]
    }

    /// Degrees that occur, ascending.
    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.by_degree.keys().copied()
    }

    pub fn basis(&self, degree: i64) -> &[u32] {
        self.by_degree.get(&degree).map_or(&[], Vec::as_slice)
    }

    pub fn differential_of_generator(&self, mask: u32) -> &[(u32, i64)] {
        &self.differential[mask as usize]
    }

    /// `a_σ a_τ`, or `None` when `σ, τ` are not multiplicative. The sign is
    /// that of the permutation sorting the concatenation `σ·τ`.
    pub fn multiply_generators(&self, s: u32, t: u32) -> Option<(u32, i64)> {
        if s & t != 0 || self.codim(s) + self.codim(t) != self.codim(s | t) {
            return None;
        }
        let inversions: u32 = positions(t).map(|p| (s >> p).count_ones()).sum();
        Some((s | t, if inversions.is_multiple_of(2) { 1 } else { -1 }))
    }

    pub fn d(&self, x: &SparseVec) -> SparseVec {
        SparseVec::from_terms(x.entries().iter().flat_map(|(m, c)| {
            self.differential[*m]
                .iter()
                .map(move |&(t, s)| (t as usize, c * q(s)))
        }))
    }

    pub fn mul(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (s, a) in x.entries() {
            for (t, b) in y.entries() {
                if let Some((m, sign)) = self.multiply_generators(*s as u32, *t as u32) {
                    terms.push((m as usize, a * b * q(sign)));
                }
            }
        }
        SparseVec::from_terms(terms)
    }

    pub fn generator(&self, mask: u32) -> SparseVec {
        SparseVec::unit(mask as usize)
    }

    /// Degree of a homogeneous element, `None` for zero or mixed degrees.
    pub fn degree_of(&self, x: &SparseVec) -> Option<i64> {
        let mut it = x.entries().iter().map(|(m, _)| self.degree[*m]);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// The differential `C^deg → C^{deg+1}` with domain basis
    /// [`basis(deg)`](Self::basis); kernel vectors are re-expressed in masks.
    pub fn differential_map(&self, degree: i64) -> (LinearMap, Vec<SparseVec>) {
        let basis = self.basis(degree);
        let cols: Vec<SparseVec> = basis.iter().map(|&m| self.d(&self.generator(m))).collect();
        let map = LinearMap::new(&cols);
        let kernel = map
            .kernel()
            .iter()
            .map(|k| k.reindex(|i| Some(basis[i] as usize)))
            .collect();
        (map, kernel)
    }

    /// Row space of `d(C^{degree-1})`, i.e. the coboundaries in `degree`.
    pub fn coboundaries(&self, degree: i64) -> Echelon {
        let mut e = Echelon::new();
        for &m in self.basis(degree - 1) {
            e.insert(&self.d(&self.generator(m)));
        }
        e
    }

    /// Some `y` with `dy = x`, if `x` is exact.
    pub fn solve_d(&self, x: &SparseVec) -> Option<SparseVec> {
        if x.is_zero() {
            return Some(SparseVec::new());
        }
        let deg = self.degree_of(x)?;
        let basis = self.basis(deg - 1);
        let cols: Vec<SparseVec> = basis.iter().map(|&m| self.d(&self.generator(m))).collect();
        LinearMap::new(&cols)
            .preimage(x)
            .map(|y| y.reindex(|i| Some(basis[i] as usize)))
    }

    pub fn is_exact(&self, x: &SparseVec) -> bool {
        self.solve_d(x).is_some()
    }

    /// Betti numbers and representatives in every degree from the lowest
    /// generator degree up to `max_degree`, zeros included.
    /// Representatives are kernel vectors reduced modulo the coboundaries.
    pub fn cohomology(&self, max_degree: i64) -> Cohomology {
        let mut out = Cohomology::default();
        let lo = self.by_degree.keys().next().copied().unwrap_or(0);
        let hi = self
            .by_degree
            .keys()
            .last()
            .copied()
            .unwrap_or(0)
            .min(max_degree);
        for deg in lo..=hi {
            let (_, kernel) = self.differential_map(deg);
            let mut e = self.coboundaries(deg);
            let mut reps = Vec::new();
            for k in &kernel {
                let r = e.reduce(k);
                if e.insert(&r) {
                    reps.push(r.primitive());
                }
            }
            out.betti.insert(deg, reps.len());
            out.representatives.insert(deg, reps);
        }
        out
    }

    pub fn betti_numbers(&self, max_degree: i64) -> BTreeMap<i64, usize> {
        self.cohomology(max_degree).betti
    }

    /// `Σ (-1)^d dim C^d`.
    pub fn euler_characteristic(&self) -> i64 {
        self.by_degree
            .iter()
            .map(|(d, b)| {
                if d.rem_euclid(2) == 0 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }

    /// Checks `d² = 0`, the graded Leibniz rule, graded commutativity and
    /// associativity on generators of degree `≤ max_degree`. Triples with
    /// overlapping masks are skipped: both sides vanish since any product
    /// of overlapping generators is zero.
    pub fn validate(&self, max_degree: i64) -> Result<()> {
        let gens: Vec<u32> = (0..self.generator_count() as u32)
            .filter(|&m| self.degree(m) <= max_degree)
            .collect();
        for &m in &gens {
            let dd = int_d(self, &self.differential[m as usize]);
            if !dd.is_empty() {
                return Err(inconsistent("d² ≠ 0 on ", self, m));
            }
        }
        for &s in &gens {
            for &t in &gens {
                let st = int_mul(self, &[(s, 1)], &[(t, 1)]);
                let ts = int_mul(self, &[(t, 1)], &[(s, 1)]);
                let sign = if (self.degree(s) * self.degree(t)).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                if st != scale(&ts, sign) {
                    return Err(inconsistent("graded commutativity fails at ", self, s | t));
                }
                let lhs = int_d(self, &st);
                let ds = &self.differential[s as usize];
                let dt = &self.differential[t as usize];
                let ksign = if self.degree(s).rem_euclid(2) == 0 {
                    1
                } else {
                    -1
                };
                let rhs = add(
                    &int_mul(self, ds, &[(t, 1)]),
                    &scale(&int_mul(self, &[(s, 1)], dt), ksign),
                );
                if lhs != rhs {
                    return Err(inconsistent("Leibniz rule fails at ", self, s | t));
                }
            }
        }
        let max = self.generator_count() as u32;
        for s in gens.iter().copied() {
            let mut t = (max - 1) & !s;
            loop {
                if self.degree(t) <= max_degree {
                    let mut u = (max - 1) & !(s | t);
                    loop {
                        if self.degree(u) <= max_degree {
                            let l = int_mul(self, &int_mul(self, &[(s, 1)], &[(t, 1)]), &[(u, 1)]);
                            let r = int_mul(self, &[(s, 1)], &int_mul(self, &[(t, 1)], &[(u, 1)]));
                            if l != r {
                                return Err(inconsistent(
                                    "associativity fails at ",
                                    self,
                                    s | t | u,
                                ));
                            }
                        }
                        if u == 0 {
                            break;
                        }
                        u = (u - 1) & !(s | t);
                    }
                }
                if t == 0 {
                    break;
                }
                t = (t - 1) & !s;
            }
        }
        Ok(())
    }
}

fn inconsistent(what: &str, c: &RelativeAtomicComplex, m: u32) -> Error {
    let mut s = String::from(what);
    s.push_str(&c.label(m));
    Error::Inconsistent(s)
}

// Integer combinations for the validation loops, which touch every pair of
// generators and would be slow with rational arithmetic.

type IntCombo = Vec<(u32, i64)>;

fn normalize(terms: impl IntoIterator<Item = (u32, i64)>) -> IntCombo {
    let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
    for (m, c) in terms {
        *acc.entry(m).or_insert(0) += c;
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

fn int_d(c: &RelativeAtomicComplex, x: &[(u32, i64)]) -> IntCombo {
    normalize(x.iter().flat_map(|&(m, a)| {
        c.differential[m as usize]
            .iter()
            .map(move |&(t, s)| (t, a * s))
    }))
}

fn int_mul(c: &RelativeAtomicComplex, x: &[(u32, i64)], y: &[(u32, i64)]) -> IntCombo {
    let mut terms = Vec::new();
    for &(s, a) in x {
        for &(t, b) in y {
            if let Some((m, sign)) = c.multiply_generators(s, t) {
                terms.push((m, a * b * sign));
            }
        }
    }
    normalize(terms)
}

fn add(x: &[(u32, i64)], y: &[(u32, i64)]) -> IntCombo {
    normalize(x.iter().chain(y).copied())
}

fn scale(x: &[(u32, i64)], s: i64) -> IntCombo {
    x.iter().map(|&(m, c)| (m, c * s)).collect()
}

/// Convenience for tests and reports: `Σ c a_σ` from `(mask, c)` pairs.
pub fn combo(terms: &[(u32, i64)]) -> SparseVec {
    SparseVec::from_terms(
        terms
            .iter()
            .map(|&(m, c)| (m as usize, Q::from(num_bigint::BigInt::from(c)))),
    )
}
