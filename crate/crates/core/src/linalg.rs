//! Exact sparse linear algebra over `ℚ`.
//!
//! Everything downstream (cohomology ranks, shuffle quotients, spectral
//! sequence pages) reduces to incremental Gaussian elimination on sparse
//! rational vectors. [`Echelon`] keeps a set of rows in echelon form with
//! unit pivots and, optionally, tracks how each row was obtained from the
//! inserted vectors so that kernels and preimages come out of the same pass.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self {
            entries: alloc::vec![(i, Q::one())],
        }
    }

    /// Collects `(index, coefficient)` pairs, summing repeats and dropping
    /// zeros.
    pub fn from_terms<I: IntoIterator<Item = (usize, Q)>>(terms: I) -> Self {
        let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
        for (i, c) in terms {
            *acc.entry(i).or_insert_with(Q::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<usize, Q>) -> Self {
        Self {
            entries: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    fn to_map(&self) -> BTreeMap<usize, Q> {
        self.entries.iter().cloned().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(k) => self.entries[k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn leading(&self) -> Option<&(usize, Q)> {
        self.entries.first()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.axpy(&Q::one(), other)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.axpy(&-Q::one(), other)
    }

    /// `self + c * other`.
    pub fn axpy(&self, c: &Q, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (
            self.entries.iter().peekable(),
            other.entries.iter().peekable(),
        );
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(&(j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (Some(&(i, x)), Some(&(j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
            }
        }
        out.retain(|(_, x)| !x.is_zero());
        Self { entries: out }
    }

    /// Keeps only the entries whose index satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(i, _)| keep(*i))
                .cloned()
                .collect(),
        }
    }

    /// Re-indexes entries through `f`; entries mapped to `None` are dropped.
    pub fn reindex(&self, f: impl Fn(usize) -> Option<usize>) -> Self {
        Self::from_terms(
            self.entries
                .iter()
                .filter_map(|(i, x)| f(*i).map(|j| (j, x.clone()))),
        )
    }

    /// Multiplies so that the entries are coprime integers with a positive
    /// leading entry. Only used for presentation and stable comparisons.
    pub fn primitive(&self) -> Self {
        use num_integer::Integer;
        if self.is_zero() {
            return Self::new();
        }
        let lcm = self
            .entries
            .iter()
            .fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .entries
            .iter()
            .map(|(_, x)| (x * Q::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let sign = if ints[0].is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        Self {
            entries: self
                .entries
                .iter()
                .zip(ints)
                .map(|((i, _), x)| (*i, Q::from_integer(x / &g * &sign)))
                .collect(),
        }
    }
}

/// Rows in echelon form: every row has leading coefficient one at a pivot
/// index that no other row has as its pivot, and rows only contain indices
/// at or after their pivot.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    /// Parallel to `rows` when tracking: the combination of inserted
    /// vectors' tags that produced each row.
    tags: Vec<SparseVec>,
    pivot_row: BTreeMap<usize, usize>,
}

/// Result of [`Echelon::insert_tagged`].
#[derive(Debug, Clone)]
pub enum Insertion {
    /// The vector was independent and became a new row.
    Added,
    /// The vector reduced to zero; the payload is the tag combination that
    /// reduces to zero, i.e. a linear relation among inserted tags.
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_row.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.pivot_row.contains_key(&i)
    }

    /// Reduces `v` modulo the row space. The remainder has no entries at
    /// pivot indices; `coeffs` (if given) receives, per row index, the
    /// multiple subtracted.
    fn reduce_map(&self, v: &mut BTreeMap<usize, Q>, mut coeffs: Option<&mut Vec<(usize, Q)>>) {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(i, _)| self.pivot_row.contains_key(i))
                .map(|(i, c)| (*i, c.clone()));
            let Some((i, c)) = next else { break };
            let r = self.pivot_row[&i];
            for (j, x) in self.rows[r].entries() {
                let e = v.entry(*j).or_insert_with(Q::zero);
                *e -= &c * x;
                if e.is_zero() {
                    v.remove(j);
                }
            }
            if let Some(cs) = coeffs.as_deref_mut() {
                cs.push((r, c));
            }
            cursor = i + 1;
        }
    }

    /// Remainder of `v` modulo the row space.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut m = v.to_map();
        self.reduce_map(&mut m, None);
        SparseVec::from_map(m)
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns whether it was independent.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        matches!(self.insert_tagged(v, SparseVec::new()), Insertion::Added)
    }

    /// Inserts `v` carrying `tag`. Tags of rows combine exactly like the
    /// rows do, so a dependent insertion yields the relation
    /// `tag - Σ c_r tag_r` whose vector combination is zero.
    pub fn insert_tagged(&mut self, v: &SparseVec, tag: SparseVec) -> Insertion {
        let mut m = v.to_map();
        let mut coeffs = Vec::new();
        self.reduce_map(&mut m, Some(&mut coeffs));
        let mut tag = tag;
        for (r, c) in &coeffs {
            if !self.tags[*r].is_zero() {
                tag = tag.axpy(&-c.clone(), &self.tags[*r]);
            }
        }
        if m.is_empty() {
            return Insertion::Dependent(tag);
        }
        let rem = SparseVec::from_map(m);
        let (p, lead) = rem.leading().cloned().unwrap();
        let inv = lead.recip();
        self.pivot_row.insert(p, self.rows.len());
        self.rows.push(rem.scale(&inv));
        self.tags.push(tag.scale(&inv));
        Insertion::Added
    }

    /// If `v` lies in the row space, the tag combination whose rows sum to
    /// `v`.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        let mut m = v.to_map();
        let mut coeffs = Vec::new();
        self.reduce_map(&mut m, Some(&mut coeffs));
        if !m.is_empty() {
            return None;
        }
        Some(SparseVec::from_terms(coeffs.into_iter().flat_map(
            |(r, c)| {
                self.tags[r]
                    .entries()
                    .iter()
                    .map(move |(j, x)| (*j, x * &c))
                    .collect::<Vec<_>>()
            },
        )))
    }
}

/// Kernel and image of a linear map given by the images of basis vectors.
#[derive(Debug, Clone)]
pub struct LinearMap {
    image: Echelon,
    kernel: Vec<SparseVec>,
}

impl LinearMap {
    /// `columns[i]` is the image of the `i`-th domain basis vector.
    pub fn new(columns: &[SparseVec]) -> Self {
        let mut image = Echelon::new();
        let mut kernel = Vec::new();
        for (i, col) in columns.iter().enumerate() {
            if let Insertion::Dependent(rel) = image.insert_tagged(col, SparseVec::unit(i)) {
                kernel.push(rel);
            }
        }
        Self { image, kernel }
    }

    pub fn rank(&self) -> usize {
        self.image.rank()
    }

    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }

    pub fn image(&self) -> &Echelon {
        &self.image
    }

    /// Some `x` with `f(x) = target`, if one exists.
    pub fn preimage(&self, target: &SparseVec) -> Option<SparseVec> {
        self.image.solve(target)
    }
}

/// Dimension of the span of `vectors`.
pub fn rank(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    vectors.iter().filter(|v| e.insert(v)).count()
}
