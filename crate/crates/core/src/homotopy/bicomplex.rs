//! The Harrison word bicomplex of the relative atomic complex.
//!
//! Words `a_1|…|a_n` have letters from the augmentation ideal (generators
//! `a_σ`, `σ ≠ ∅`). Signs use the shifted degree `‖a‖ = |a| - 1`. A word
//! sits in column `p = -(n-1)` and has total degree `1 + Σ‖a_i‖`. The
//! complex is the span of words modulo signed shuffle products, with the
//! letterwise differential `d_W` and the multiplication differential
//! `d_μ`.
//!
//! Both differentials preserve the codim weight `Σ codim(a_i)`, so the
//! complex splits into finite pieces by weight.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::dga::RelativeAtomicComplex;
use crate::error::{Error, Result};
use crate::linalg::{q, Echelon, SparseVec};

pub type Word = Vec<u32>;

/// Default cap on the number of enumerated words.
pub const DEFAULT_MAX_WORDS: usize = 400_000;

/// Which words to build. Pages are reliable for total degrees
/// `1..=max_total_degree`; words up to one degree higher are kept as
/// targets of the differential.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Truncation {
    pub max_total_degree: i64,
    /// Required as soon as some letter has degree `≤ 1`, because then the
    /// total degree alone does not bound word length.
    pub max_weight: Option<usize>,
    pub max_words: usize,
}

impl Truncation {
    pub fn new(max_total_degree: i64, max_weight: Option<usize>) -> Self {
        Self {
            max_total_degree,
            max_weight,
            max_words: DEFAULT_MAX_WORDS,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WordInfo {
    pub weight: usize,
    pub total: i64,
    pub column: i64,
    /// `Σ |a_i|`.
    pub internal: i64,
}

#[derive(Debug, Clone)]
pub struct BiComplex {
    dga: RelativeAtomicComplex,
    truncation: Truncation,
    words: Vec<Word>,
    info: Vec<WordInfo>,
    index: BTreeMap<Word, usize>,
    relations: Echelon,
    is_basis: Vec<bool>,
    /// Basis words grouped by `(weight, total)`.
    slices: BTreeMap<(usize, i64), Vec<usize>>,
}

fn parity(x: i64) -> bool {
    x.rem_euclid(2) == 1
}

fn sign(odd: bool) -> i64 {
    if odd {
        -1
    } else {
        1
    }
}

impl BiComplex {
    pub fn build(dga: &RelativeAtomicComplex, truncation: Truncation) -> Result<Self> {
        let top = truncation.max_total_degree + 1;
        let letters: Vec<u32> = (1..dga.generator_count() as u32)
            .filter(|&m| truncation.max_weight.is_none_or(|w| dga.codim(m) <= w))
            .collect();
        let min_shift = letters
            .iter()
            .map(|&m| dga.degree(m) - 1)
            .min()
            .unwrap_or(1);
        if truncation.max_weight.is_none() && min_shift < 1 {
            return Err(Error::UnboundedTruncation);
        }
        let prune_total = min_shift >= 1;

        let mut words: Vec<Word> = Vec::new();
        let mut stack: Vec<(Word, usize, i64)> = alloc::vec![(Vec::new(), 0, 0)];
        while let Some((word, weight, shift)) = stack.pop() {
            for &a in &letters {
                let w = weight + dga.codim(a);
                if truncation.max_weight.is_some_and(|cap| w > cap) {
                    continue;
                }
                let s = shift + dga.degree(a) - 1;
                if prune_total && 1 + s > top {
                    continue;
                }
                let mut next = word.clone();
                next.push(a);
                if (0..=top).contains(&(1 + s)) {
                    words.push(next.clone());
                    if words.len() > truncation.max_words {
                        return Err(Error::BudgetExceeded {
                            what: "words",
                            needed: words.len() as u128,
                            limit: truncation.max_words as u128,
                        });
                    }
                }
                stack.push((next, w, s));
            }
        }
        let info_of = |w: &Word| {
            let internal: i64 = w.iter().map(|&a| dga.degree(a)).sum();
            let column = 1 - w.len() as i64;
            WordInfo {
                weight: w.iter().map(|&a| dga.codim(a)).sum(),
                total: internal + column,
                column,
                internal,
            }
        };
        words.sort_by_cached_key(|w| {
            let i = info_of(w);
            (i.weight, i.total, w.len(), w.clone())
        });
        let info: Vec<WordInfo> = words.iter().map(info_of).collect();
        let index: BTreeMap<Word, usize> = words
            .iter()
            .enumerate()
            .map(|(i, w)| (w.clone(), i))
            .collect();

        let mut bc = Self {
            dga: dga.clone(),
            truncation,
            words,
            info,
            index,
            relations: Echelon::new(),
            is_basis: Vec::new(),
            slices: BTreeMap::new(),
        };
        bc.build_relations();
        Ok(bc)
    }

    fn build_relations(&mut self) {
        let mut relations = Echelon::new();
        for w in &self.words {
            for k in 1..w.len() {
                let r = self.shuffle(&w[..k], &w[k..]);
                if !r.is_zero() {
                    relations.insert(&r);
                }
            }
        }
        self.is_basis = (0..self.words.len())
            .map(|i| !relations.is_pivot(i))
            .collect();
        for i in 0..self.words.len() {
            if self.is_basis[i] {
                let inf = self.info[i];
                self.slices
                    .entry((inf.weight, inf.total))
                    .or_default()
                    .push(i);
            }
        }
        self.relations = relations;
    }

    fn shifted(&self, a: u32) -> i64 {
        self.dga.degree(a) - 1
    }

    /// `u ш v` with Koszul signs in shifted degrees.
    pub fn shuffle(&self, u: &[u32], v: &[u32]) -> SparseVec {
        let n = u.len() + v.len();
        let mut terms = Vec::new();
        // Bitmask of positions taken by `u`.
        for pos in 0u64..(1 << n) {
            if pos.count_ones() as usize != u.len() {
                continue;
            }
            let (mut i, mut j) = (0, 0);
            let mut passed = 0i64;
            let mut exp = 0i64;
            let mut word = Vec::with_capacity(n);
            for k in 0..n {
                if pos >> k & 1 == 1 {
                    exp += self.shifted(u[i]) * passed;
                    word.push(u[i]);
                    i += 1;
                } else {
                    passed += self.shifted(v[j]);
                    word.push(v[j]);
                    j += 1;
                }
            }
            let idx = self.index[&word];
            terms.push((idx, q(sign(parity(exp)))));
        }
        SparseVec::from_terms(terms)
    }

    pub fn dga(&self) -> &RelativeAtomicComplex {
        &self.dga
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn word(&self, i: usize) -> &[u32] {
        &self.words[i]
    }

    pub fn info(&self, i: usize) -> WordInfo {
        self.info[i]
    }

    pub fn index_of(&self, word: &[u32]) -> Option<usize> {
        self.index.get(word).copied()
    }

    pub fn is_basis(&self, i: usize) -> bool {
        self.is_basis[i]
    }

    pub fn relations(&self) -> &Echelon {
        &self.relations
    }

    /// Basis words of the shuffle quotient, grouped by `(weight, total)`.
    pub fn slices(&self) -> &BTreeMap<(usize, i64), Vec<usize>> {
        &self.slices
    }

    pub fn slice(&self, weight: usize, total: i64) -> &[usize] {
        self.slices.get(&(weight, total)).map_or(&[], Vec::as_slice)
    }

    /// Whether a letter of degree `≤ 1` occurs (the complement is then not
    /// simply connected and the pages carry no homotopy-group guarantee).
    pub fn has_low_degree_letters(&self) -> bool {
        (1..self.dga.generator_count() as u32).any(|m| self.dga.degree(m) <= 1)
    }

    /// `a_1|…|a_n` as a vector of the word space.
    pub fn word_vector(&self, word: &[u32]) -> Option<SparseVec> {
        self.index_of(word).map(SparseVec::unit)
    }

    /// Representative of `v` in the basis of non-pivot words.
    pub fn normal_form(&self, v: &SparseVec) -> SparseVec {
        self.relations.reduce(v)
    }

    fn prefix_signs(&self, word: &[u32]) -> Vec<bool> {
        let mut acc = 0i64;
        word.iter()
            .map(|&a| {
                let odd = parity(acc);
                acc += self.shifted(a);
                odd
            })
            .collect()
    }

    fn lookup(&self, word: &[u32]) -> usize {
        match self.index.get(word) {
            Some(&i) => i,
            None => panic!("image word {word:?} lies outside the truncation"),
        }
    }

    /// `d_W` of a single word: `Σ_i (-1)^{‖a_1‖+…+‖a_{i-1}‖} a_1|…|d a_i|…|a_n`.
    pub fn d_w_word(&self, i: usize) -> SparseVec {
        let word = &self.words[i];
        let signs = self.prefix_signs(word);
        let mut terms = Vec::new();
        for (k, &a) in word.iter().enumerate() {
            for &(t, s) in self.dga.differential_of_generator(a) {
                let mut w = word.clone();
                w[k] = t;
                terms.push((self.lookup(&w), q(s * sign(signs[k]))));
            }
        }
        SparseVec::from_terms(terms)
    }

    /// `d_μ` of a single word:
    /// `Σ_i (-1)^{‖a_1‖+…+‖a_{i-1}‖} (-1)^{|a_i|} a_1|…|a_i a_{i+1}|…|a_n`.
    pub fn d_mu_word(&self, i: usize) -> SparseVec {
        let word = &self.words[i];
        let signs = self.prefix_signs(word);
        let mut terms = Vec::new();
        for k in 0..word.len().saturating_sub(1) {
            if let Some((m, s)) = self.dga.multiply_generators(word[k], word[k + 1]) {
                let mut w = Vec::with_capacity(word.len() - 1);
                w.extend_from_slice(&word[..k]);
                w.push(m);
                w.extend_from_slice(&word[k + 2..]);
                let e = signs[k] ^ parity(self.dga.degree(word[k]));
                terms.push((self.lookup(&w), q(s * sign(e))));
            }
        }
        SparseVec::from_terms(terms)
    }

    fn extend(&self, v: &SparseVec, f: impl Fn(usize) -> SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, c) in v.entries() {
            out = out.axpy(c, &f(*i));
        }
        out
    }

    pub fn d_w(&self, v: &SparseVec) -> SparseVec {
        self.extend(v, |i| self.d_w_word(i))
    }

    pub fn d_mu(&self, v: &SparseVec) -> SparseVec {
        self.extend(v, |i| self.d_mu_word(i))
    }

    /// Total differential on the word space.
    pub fn d(&self, v: &SparseVec) -> SparseVec {
        self.extend(v, |i| self.d_w_word(i).add(&self.d_mu_word(i)))
    }

    /// Total differential on the quotient, in normal form.
    pub fn d_quotient(&self, v: &SparseVec) -> SparseVec {
        self.normal_form(&self.d(v))
    }

    pub fn describe(&self, i: usize) -> String {
        let parts: Vec<String> = self.words[i].iter().map(|&a| self.dga.label(a)).collect();
        parts.join("|")
    }

    /// `d_W² = 0`, `d_μ² = 0` and `d_W d_μ + d_μ d_W = 0` on every word two
    /// degrees below the top, and stability of the shuffle span under both
    /// differentials.
    pub fn validate(&self) -> Result<()> {
        let top = self.truncation.max_total_degree;
        for i in 0..self.words.len() {
            if self.info[i].total > top - 1 {
                continue;
            }
            let e = SparseVec::unit(i);
            let (dw, dm) = (self.d_w(&e), self.d_mu(&e));
            let checks = [
                ("d_W²", self.d_w(&dw)),
                ("d_μ²", self.d_mu(&dm)),
                ("d_W d_μ + d_μ d_W", self.d_w(&dm).add(&self.d_mu(&dw))),
            ];
            for (what, v) in checks {
                if !v.is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "{what} ≠ 0 on {}",
                        self.describe(i)
                    )));
                }
            }
        }
        for row in self.relations.rows() {
            let Some(&(lead, _)) = row.leading() else {
                continue;
            };
            if self.info[lead].total > top {
                continue;
            }
            for (what, v) in [("d_W", self.d_w(row)), ("d_μ", self.d_mu(row))] {
                if !self.normal_form(&v).is_zero() {
                    return Err(Error::Inconsistent(format!(
                        "{what} does not preserve the shuffle relation led by {}",
                        self.describe(lead)
                    )));
                }
            }
        }
        Ok(())
    }
}
