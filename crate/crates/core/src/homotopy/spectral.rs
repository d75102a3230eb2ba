//! The spectral sequence of the column filtration on the word bicomplex.
//!
//! `F^p` is spanned by basis words in columns `≥ p`. With `D` the total
//! differential,
//!
//! ```text
//! Z_r^p = { x ∈ F^p : D x ∈ F^{p+r} },   Z_r^p = F^p for r ≤ 0,
//! E_r^p = Z_r^p / (Z_{r-1}^{p+1} + D Z_{r-1}^{p-r+1}),
//! d_r [x] = [D x] ∈ E_r^{p+r}.
//! ```
//!
//! Everything is computed separately for each weight and total degree.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::bicomplex::BiComplex;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, LinearMap, SparseVec};

/// Stand-in for `r = ∞`; any page beyond the number of columns is final.
pub const PAGE_INFINITY: i64 = i64::MAX / 4;

/// Bidegree `(p, q)`: column and internal degree, total degree `p + q`.
pub type Bidegree = (i64, i64);

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Page {
    pub r: i64,
    /// `dim E_r^{p,q}`, nonzero entries only.
    pub ranks: BTreeMap<Bidegree, usize>,
    /// Rank of `d_r` out of `(p, q)`, nonzero entries only.
    pub differential_ranks: BTreeMap<Bidegree, usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SpectralSequencePages {
    pub pages: Vec<Page>,
    pub e_infinity: BTreeMap<Bidegree, usize>,
    /// `Σ_p dim E_∞` per total degree.
    pub pi_ranks: BTreeMap<i64, usize>,
    /// Homology of the total complex per total degree, for cross-checking.
    pub total_homology: BTreeMap<i64, usize>,
    /// Degree-one letters are present, so the complement need not be simply
    /// connected.
    pub convergence_caveat: bool,
    /// Words of weight above the cap were left out.
    pub weight_truncated: bool,
}

/// Lazily computed filtration data for a single weight.
#[derive(Debug)]
pub struct WeightPiece<'a> {
    bc: &'a BiComplex,
    weight: usize,
    min_column: i64,
    z_cache: RefCell<BTreeMap<(i64, i64, i64), Vec<SparseVec>>>,
}

impl<'a> WeightPiece<'a> {
    pub fn new(bc: &'a BiComplex, weight: usize) -> Self {
        let min_column = bc
            .slices()
            .range((weight, i64::MIN)..=(weight, i64::MAX))
            .flat_map(|(_, ws)| ws.iter().map(|&i| bc.info(i).column))
            .min()
            .unwrap_or(0);
        Self {
            bc,
            weight,
            min_column,
            z_cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of distinct columns; pages beyond this are final.
    pub fn column_count(&self) -> i64 {
        1 - self.min_column
    }

    fn words(&self, total: i64) -> &'a [usize] {
        self.bc.slice(self.weight, total)
    }

    fn column(&self, i: usize) -> i64 {
        self.bc.info(i).column
    }

    /// Basis words of `F^p` in total degree `n`.
    pub fn filtration(&self, n: i64, p: i64) -> Vec<usize> {
        self.words(n)
            .iter()
            .copied()
            .filter(|&i| self.column(i) >= p)
            .collect()
    }

    /// A basis of `Z_r^p` in total degree `n`.
    pub fn z(&self, n: i64, p: i64, r: i64) -> Vec<SparseVec> {
        // F^p is everything below the lowest column and empty above zero;
        // the condition `D x ∈ F^t` is vacuous for `t ≤ p` and means
        // `D x = 0` for `t > 0`.
        let t = if r <= 0 { p } else { p.saturating_add(r) };
        let p = p.max(self.min_column).min(1);
        let t = t.clamp(p, 1);
        if let Some(v) = self.z_cache.borrow().get(&(n, p, t)) {
            return v.clone();
        }
        let dom = self.filtration(n, p);
        let out: Vec<SparseVec> = if t == p {
            dom.iter().map(|&i| SparseVec::unit(i)).collect()
        } else {
            let cols: Vec<SparseVec> = dom
                .iter()
                .map(|&i| {
                    self.bc
                        .d_quotient(&SparseVec::unit(i))
                        .filter(|j| self.column(j) < t)
                })
                .collect();
            LinearMap::new(&cols)
                .kernel()
                .iter()
                .map(|k| k.reindex(|c| Some(dom[c])))
                .collect()
        };
        self.z_cache.borrow_mut().insert((n, p, t), out.clone());
        out
    }

    /// `Z_{r-1}^{p+1} + D Z_{r-1}^{p-r+1}` in total degree `n`.
    pub fn denominator(&self, n: i64, p: i64, r: i64) -> Echelon {
        let mut e = Echelon::new();
        for z in self.z(n, p + 1, r - 1) {
            e.insert(&z);
        }
        for z in self.z(n - 1, p - r + 1, r - 1) {
            e.insert(&self.bc.d_quotient(&z));
        }
        e
    }

    pub fn e_rank(&self, n: i64, p: i64, r: i64) -> usize {
        self.z(n, p, r).len() - self.denominator(n, p, r).rank()
    }

    /// Rank of `d_r : E_r^p → E_r^{p+r}` in total degree `n`.
    pub fn d_rank(&self, n: i64, p: i64, r: i64) -> usize {
        let mut den = self.denominator(n + 1, p + r, r);
        let base = den.rank();
        for z in self.z(n, p, r) {
            den.insert(&self.bc.d_quotient(&z));
        }
        den.rank() - base
    }

    /// Whether `v` (an element of `Z_r^p`) is zero in `E_r^p`.
    pub fn vanishes_in_page(&self, n: i64, p: i64, r: i64, v: &SparseVec) -> bool {
        self.denominator(n, p, r).contains(v)
    }

    /// Some `y ∈ F^{p+1}` with `D(x + y) ∈ F^{p+r}`: the zig-zag that makes
    /// `d_r [x]` defined. `x` must lie in `F^p` and be in normal form.
    pub fn lift(&self, n: i64, p: i64, r: i64, x: &SparseVec) -> Option<SparseVec> {
        let dom = self.filtration(n, p + 1);
        let low = |v: SparseVec| v.filter(|j| self.column(j) < p + r);
        let cols: Vec<SparseVec> = dom
            .iter()
            .map(|&i| low(self.bc.d_quotient(&SparseVec::unit(i))))
            .collect();
        let target = low(self.bc.d_quotient(x)).scale(&crate::linalg::q(-1));
        if target.is_zero() {
            return Some(SparseVec::new());
        }
        LinearMap::new(&cols)
            .preimage(&target)
            .map(|y| y.reindex(|c| Some(dom[c])))
    }

    /// `dim H_n` of the total complex.
    pub fn total_homology(&self, n: i64) -> usize {
        let kernel = self.z(n, self.min_column, PAGE_INFINITY).len();
        let mut im = Echelon::new();
        for &i in self.words(n - 1) {
            im.insert(&self.bc.d_quotient(&SparseVec::unit(i)));
        }
        kernel - im.rank()
    }
}

/// Pages `0..=max_page` and `E_∞` for total degrees `1..=D`.
pub fn spectral_sequence_pages(bc: &BiComplex, max_page: i64) -> Result<SpectralSequencePages> {
    let top = bc.truncation().max_total_degree;
    let mut weights: Vec<usize> = bc.slices().keys().map(|&(w, _)| w).collect();
    weights.dedup();
    let mut out = SpectralSequencePages {
        convergence_caveat: bc.has_low_degree_letters(),
        weight_truncated: bc.truncation().max_weight.is_some(),
        ..Default::default()
    };
    let mut pages: Vec<Page> = (0..=max_page)
        .map(|r| Page {
            r,
            ..Default::default()
        })
        .collect();
    for &w in &weights {
        let piece = WeightPiece::new(bc, w);
        let columns: Vec<i64> = (piece.min_column..=0).collect();
        for n in 1..=top {
            for &p in &columns {
                let bideg = (p, n - p);
                for page in pages.iter_mut() {
                    let r = page.r;
                    let e = piece.e_rank(n, p, r);
                    if e > 0 {
                        *page.ranks.entry(bideg).or_default() += e;
                    }
                    if n < top {
                        let d = piece.d_rank(n, p, r);
                        if d > 0 {
                            *page.differential_ranks.entry(bideg).or_default() += d;
                        }
                    }
                }
                let e = piece.e_rank(n, p, PAGE_INFINITY);
                if e > 0 {
                    *out.e_infinity.entry(bideg).or_default() += e;
                    *out.pi_ranks.entry(n).or_default() += e;
                }
            }
            let h = piece.total_homology(n);
            if h > 0 {
                *out.total_homology.entry(n).or_default() += h;
            }
        }
    }
    for n in 1..=top {
        let e = out.pi_ranks.get(&n).copied().unwrap_or(0);
        let h = out.total_homology.get(&n).copied().unwrap_or(0);
        if e != h {
            return Err(Error::Inconsistent(alloc::format!(
                "E_∞ has rank {e} in total degree {n} but the total complex has {h}"
            )));
        }
    }
    out.pages = pages;
    Ok(out)
}

/// `rank E_{r+1} = dim ker d_r - rank (incoming d_r)` at every bidegree of
/// total degree `2..D-1` (both neighbours are then in range), and ranks
/// weakly decrease.
pub fn check_page_consistency(pages: &SpectralSequencePages, max_total_degree: i64) -> Result<()> {
    for pair in pages.pages.windows(2) {
        let (cur, next) = (&pair[0], &pair[1]);
        let r = cur.r;
        let bidegrees: Vec<Bidegree> = cur.ranks.keys().chain(next.ranks.keys()).copied().collect();
        for (p, q) in bidegrees {
            let n = p + q;
            if n < 2 || n >= max_total_degree {
                continue;
            }
            let e = cur.ranks.get(&(p, q)).copied().unwrap_or(0);
            let out = cur.differential_ranks.get(&(p, q)).copied().unwrap_or(0);
            let incoming = cur
                .differential_ranks
                .get(&(p - r, q + r - 1))
                .copied()
                .unwrap_or(0);
            let expected = e - out - incoming;
            let got = next.ranks.get(&(p, q)).copied().unwrap_or(0);
            if got != expected || got > e {
                return Err(Error::Inconsistent(alloc::format!(
                    "E_{} at ({p},{q}) has rank {got}, expected {expected}",
                    r + 1
                )));
            }
        }
    }
    Ok(())
}
