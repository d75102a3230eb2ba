//! Massey color systems, triple Massey products in the relative atomic
//! complex, and the second-page differential of `a_{λ1}|a_{λ2}|a_{λ3}`.

use alloc::string::String;
use alloc::vec::Vec;

use super::bicomplex::{BiComplex, Truncation};
use super::spectral::WeightPiece;
use crate::colorset::{ColorId, ColorSet};
use crate::dga::{AtomOrder, RelativeAtomicComplex};
use crate::error::{Error, Result};
use crate::hypergraph::EdgeColoredHypergraph;
use crate::linalg::{q, Echelon, SparseVec};

/// Five colors `λ1 ≪ … ≪ λ5`: `λ1, λ2, λ3` carry the product, `λ4` and
/// `λ5` are the embedded colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct MasseyColorSystem {
    pub colors: [ColorId; 5],
}

/// A system found by [`find_massey_color_systems`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundSystem {
    pub system: MasseyColorSystem,
    /// No color outside the system refines `{λ1,λ2,λ3,λ4}` or
    /// `{λ1,λ2,λ3,λ5}`.
    pub no_extra_colors: bool,
}

impl MasseyColorSystem {
    fn set(&self, idx: &[usize]) -> ColorSet {
        idx.iter().map(|&i| self.colors[i]).collect()
    }

    /// Checks every defining condition; returns the first failing one.
    pub fn check(&self, h: &EdgeColoredHypergraph) -> Result<()> {
        let c = &self.colors;
        let distinct = (0..5).all(|i| (i + 1..5).all(|j| c[i] != c[j]));
        if !distinct {
            return Err(Error::NotAMasseySystem(String::from(
                "colors must be distinct",
            )));
        }
        let one = |i: usize| ColorSet::singleton(c[i]);
        let refines = |i: usize, set: &[usize]| h.refines(&one(i), &self.set(set));
        let conditions = [
            (h.multiplicative(&one(0), &one(1)), "λ1, λ2 multiplicative"),
            (
                h.multiplicative(&self.set(&[0, 1]), &one(2)),
                "{λ1,λ2}, λ3 multiplicative",
            ),
            (refines(3, &[0, 1]), "λ4 refines {λ1,λ2}"),
            (!refines(0, &[1, 3]), "λ1 does not refine {λ2,λ4}"),
            (!refines(1, &[0, 3]), "λ2 does not refine {λ1,λ4}"),
            (refines(4, &[1, 2]), "λ5 refines {λ2,λ3}"),
            (!refines(1, &[2, 4]), "λ2 does not refine {λ3,λ5}"),
            (!refines(2, &[1, 4]), "λ3 does not refine {λ2,λ5}"),
        ];
        match conditions.iter().find(|(ok, _)| !ok) {
            None => Ok(()),
            Some((_, what)) => Err(Error::NotAMasseySystem(String::from(*what))),
        }
    }

    /// `λ1, …, λ5` first, then the remaining colors in their own order.
    pub fn atom_order(&self, h: &EdgeColoredHypergraph) -> AtomOrder {
        let mut order: Vec<ColorId> = self.colors.to_vec();
        order.extend(
            (0..h.color_count())
                .map(ColorId)
                .filter(|c| !self.colors.contains(c)),
        );
        AtomOrder(order)
    }

    pub fn names(&self, h: &EdgeColoredHypergraph) -> [String; 5] {
        self.colors.map(|c| String::from(h.color_name(c)))
    }

    /// Whether no color outside the system refines `{λ1,λ2,λ3,λ4}` or
    /// `{λ1,λ2,λ3,λ5}`. A set of colors refines a set exactly when each of
    /// its colors does, so single colors suffice.
    pub fn no_extra_colors(&self, h: &EdgeColoredHypergraph) -> bool {
        let t4 = self.set(&[0, 1, 2, 3]);
        let t5 = self.set(&[0, 1, 2, 4]);
        (0..h.color_count()).map(ColorId).all(|c| {
            self.colors.contains(&c) || {
                let s = ColorSet::singleton(c);
                !h.refines(&s, &t4) && !h.refines(&s, &t5)
            }
        })
    }
}

/// Exhaustive scan over ordered 5-tuples of distinct colors.
pub fn find_massey_color_systems(h: &EdgeColoredHypergraph) -> Vec<FoundSystem> {
    let n = h.color_count();
    let mut out = Vec::new();
    if n < 5 {
        return out;
    }
    let one = |i: usize| ColorSet::singleton(ColorId(i));
    for l1 in 0..n {
        for l2 in 0..n {
            if l2 == l1 || !h.multiplicative(&one(l1), &one(l2)) {
                continue;
            }
            for l3 in 0..n {
                if l3 == l1 || l3 == l2 {
                    continue;
                }
                for l4 in 0..n {
                    if [l1, l2, l3].contains(&l4) {
                        continue;
                    }
                    for l5 in 0..n {
                        if [l1, l2, l3, l4].contains(&l5) {
                            continue;
                        }
                        let system = MasseyColorSystem {
                            colors: [l1, l2, l3, l4, l5].map(ColorId),
                        };
                        if system.check(h).is_ok() {
                            out.push(FoundSystem {
                                system,
                                no_extra_colors: system.no_extra_colors(h),
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

/// The closed cochain attached to a system: `a_{1234} - a_{1235}` in the
/// complex ordered by [`MasseyColorSystem::atom_order`]. `a_{1234} +
/// a_{1235}` is not closed: both summands have differential `a_{123}`.
pub fn massey_d2_class(c: &RelativeAtomicComplex) -> SparseVec {
    debug_assert!(c.atom_count() >= 5);
    SparseVec::from_terms([(0b01111, q(1)), (0b10111, q(-1))])
}

/// Result of [`massey_triple_product`].
#[derive(Debug, Clone)]
pub struct TripleProduct {
    /// `[u][v] = 0` and `[v][w] = 0`.
    pub defined: bool,
    /// `u y - (-1)^{|u|} x w` with `dx = -uv`, `dy = -vw`.
    pub representative: SparseVec,
    pub x: SparseVec,
    pub y: SparseVec,
    /// `im d + u·Z + Z·w` in the degree of the representative.
    pub indeterminacy: Echelon,
    /// The representative is not in the indeterminacy.
    pub nontrivial: bool,
}

/// Cocycles of degree `deg`.
fn cocycles(c: &RelativeAtomicComplex, deg: i64) -> Vec<SparseVec> {
    c.differential_map(deg).1
}

/// `⟨u, v, w⟩` for homogeneous cocycles.
pub fn massey_triple_product(
    c: &RelativeAtomicComplex,
    u: &SparseVec,
    v: &SparseVec,
    w: &SparseVec,
) -> Result<TripleProduct> {
    let deg = |x: &SparseVec| {
        c.degree_of(x).ok_or_else(|| {
            Error::Inconsistent(String::from("inputs must be nonzero and homogeneous"))
        })
    };
    let (du, dv, dw) = (deg(u)?, deg(v)?, deg(w)?);
    for x in [u, v, w] {
        if !c.d(x).is_zero() {
            return Err(Error::Inconsistent(String::from("inputs must be cocycles")));
        }
    }
    let top = du + dv + dw - 1;
    let mut indeterminacy = c.coboundaries(top);
    for z in cocycles(c, dv + dw - 1) {
        indeterminacy.insert(&c.mul(u, &z));
    }
    for z in cocycles(c, du + dv - 1) {
        indeterminacy.insert(&c.mul(&z, w));
    }
    let neg = |x: SparseVec| x.scale(&q(-1));
    let (x, y) = match (c.solve_d(&neg(c.mul(u, v))), c.solve_d(&neg(c.mul(v, w)))) {
        (Some(x), Some(y)) => (x, y),
        _ => {
            return Ok(TripleProduct {
                defined: false,
                representative: SparseVec::new(),
                x: SparseVec::new(),
                y: SparseVec::new(),
                indeterminacy,
                nontrivial: false,
            })
        }
    };
    let usign = if du.rem_euclid(2) == 0 { q(1) } else { q(-1) };
    let representative = c.mul(u, &y).sub(&c.mul(&x, w).scale(&usign));
    if !c.d(&representative).is_zero() {
        return Err(Error::Inconsistent(String::from(
            "triple product representative is not closed",
        )));
    }
    let nontrivial = !indeterminacy.contains(&representative);
    Ok(TripleProduct {
        defined: true,
        representative,
        x,
        y,
        indeterminacy,
        nontrivial,
    })
}

/// Everything checked for one Massey color system.
#[derive(Debug, Clone)]
pub struct MasseyReport {
    pub system: MasseyColorSystem,
    pub names: [String; 5],
    pub no_extra_colors: bool,
    /// `a_{1234} - a_{1235}`, see [`massey_d2_class`].
    pub class: SparseVec,
    pub class_degree: i64,
    pub class_closed: bool,
    /// `d(a_{1234} + a_{1235})`, nonzero.
    pub plus_variant_boundary: SparseVec,
    pub class_nonzero: bool,
    pub triple: TripleProduct,
    /// The triple product lies in `± class` modulo its indeterminacy.
    pub triple_matches_class: bool,
    /// `(column, internal degree)` of the word `a_{λ1}|a_{λ2}|a_{λ3}`.
    pub word_bidegree: (i64, i64),
    /// The word is a `d_0`-cycle and `d_1` of its class vanishes.
    pub d1_zero: bool,
    /// `D(w + y)` for the zig-zag built from the triple product's bounding
    /// cochains, which lands in column 0; equals `(-1)^{|a1|+|a2|}` times
    /// the triple product representative.
    pub d2_chain: SparseVec,
    /// `d2_chain = ± class` modulo coboundaries of the algebra.
    pub d2_chain_matches_class: bool,
    /// `d_2` of the word is zero on `E_2` (the class is then decomposable).
    pub d2_vanishes_on_e2: bool,
    /// `class` is zero in `E_2^{0,*}`.
    pub class_vanishes_on_e2: bool,
    /// Nontrivial triple Massey product: the complement is not formal.
    pub non_formal: bool,
}

/// Runs the whole pipeline for one system. Only the weight piece of the
/// word `a_{λ1}|a_{λ2}|a_{λ3}` matters, so the bicomplex is truncated at
/// that weight and just above the target degree of `d_2`.
pub fn analyze_system(
    h: &EdgeColoredHypergraph,
    system: MasseyColorSystem,
) -> Result<(RelativeAtomicComplex, MasseyReport)> {
    system.check(h)?;
    let c = RelativeAtomicComplex::build(h, &system.atom_order(h))?;
    let gens = [0b1u32, 0b10, 0b100].map(|m| c.generator(m));
    let class = massey_d2_class(&c);
    let class_degree = c.degree_of(&class).expect("homogeneous");
    let class_closed = c.d(&class).is_zero();
    let plus = SparseVec::from_terms([(0b01111, q(1)), (0b10111, q(1))]);
    let plus_variant_boundary = c.d(&plus);
    let class_nonzero = class_closed && !c.is_exact(&class);

    let triple = massey_triple_product(&c, &gens[0], &gens[1], &gens[2])?;
    let triple_matches_class = triple.defined && {
        let e = &triple.indeterminacy;
        let a = e.reduce(&triple.representative.sub(&class));
        let b = e.reduce(&triple.representative.add(&class));
        a.is_zero() || b.is_zero()
    };

    let word: [u32; 3] = [0b1, 0b10, 0b100];
    let word_internal: i64 = word.iter().map(|&m| c.degree(m)).sum();
    let word_total = word_internal - 2;
    let weight: usize = word.iter().map(|&m| c.codim(m)).sum();
    let bc = BiComplex::build(&c, Truncation::new(word_total + 1, Some(weight)))?;
    let piece = WeightPiece::new(&bc, weight);
    let x = bc.normal_form(&bc.word_vector(&word).expect("word within truncation"));
    let d1_zero =
        piece.lift(word_total, -2, 1, &x).is_some() && piece.lift(word_total, -2, 2, &x).is_some();

    let (d2_chain, d2_vanishes_on_e2) = if triple.defined {
        let sign_of = |d: i64| if d.rem_euclid(2) == 0 { q(1) } else { q(-1) };
        let mut y = SparseVec::new();
        // (-1)^{|a1|} [x|a3] + (-1)^{|a2|} [a1|y]
        for (m, k) in triple.x.entries() {
            let w = bc
                .word_vector(&[*m as u32, word[2]])
                .expect("word within truncation");
            y = y.axpy(&(k * sign_of(c.degree(word[0]))), &w);
        }
        for (m, k) in triple.y.entries() {
            let w = bc
                .word_vector(&[word[0], *m as u32])
                .expect("word within truncation");
            y = y.axpy(&(k * sign_of(c.degree(word[1]))), &w);
        }
        let y = bc.normal_form(&y);
        let image = bc.d_quotient(&x.add(&y));
        let in_column_zero = image.entries().iter().all(|(i, _)| bc.info(*i).column == 0);
        if !in_column_zero {
            return Err(Error::Inconsistent(String::from(
                "zig-zag from the bounding cochains leaves column 0",
            )));
        }
        let vanishes = piece.vanishes_in_page(word_total + 1, 0, 2, &image);
        // Column-0 words are single letters.
        let chain = image.reindex(|i| Some(bc.word(i)[0] as usize));
        (chain, vanishes)
    } else {
        (SparseVec::new(), false)
    };
    let d2_chain_matches_class = {
        let cob = c.coboundaries(class_degree);
        !d2_chain.is_zero()
            && (cob.contains(&d2_chain.sub(&class)) || cob.contains(&d2_chain.add(&class)))
    };
    let class_word = class.reindex(|m| bc.index_of(&[m as u32]));
    let class_vanishes_on_e2 =
        piece.vanishes_in_page(word_total + 1, 0, 2, &bc.normal_form(&class_word));

    let report = MasseyReport {
        system,
        names: system.names(h),
        no_extra_colors: system.no_extra_colors(h),
        class,
        class_degree,
        class_closed,
        plus_variant_boundary,
        class_nonzero,
        non_formal: triple.defined && triple.nontrivial,
        triple,
        triple_matches_class,
        word_bidegree: (-2, word_internal),
        d1_zero,
        d2_chain,
        d2_chain_matches_class,
        d2_vanishes_on_e2,
        class_vanishes_on_e2,
    };
    Ok((c, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    #[test]
    fn mcs7_systems() {
        let h = mcs7();
        let found = find_massey_color_systems(&h);
        let names: Vec<[String; 5]> = found.iter().map(|f| f.system.names(&h)).collect();
        assert!(names.contains(&["L1", "L2", "L3", "L4", "L5"].map(String::from)));
        assert!(found.iter().all(|f| f.no_extra_colors));
        assert!(find_massey_color_systems(&ex28_2()).is_empty());
    }

    #[test]
    fn mcs7_pipeline() {
        let h = mcs7();
        let ids = ["L1", "L2", "L3", "L4", "L5"].map(|n| h.color_id(n).unwrap());
        let (c, r) = analyze_system(&h, MasseyColorSystem { colors: ids }).unwrap();
        assert_eq!(r.class_degree, 8);
        assert!(r.class_closed && r.class_nonzero);
        assert!(!r.plus_variant_boundary.is_zero());
        assert!(r.triple.defined && r.triple_matches_class);
        assert!(r.d1_zero);
        assert!(
            r.d2_chain_matches_class,
            "{}",
            c.format_element(&r.d2_chain)
        );
        assert_eq!(r.word_bidegree, (-2, 9));
    }

    #[test]
    fn undefined_triple_product() {
        let h = EdgeColoredHypergraph::new(
            6,
            [(alloc::vec![1, 2, 3], "x"), (alloc::vec![4, 5, 6], "y")],
        )
        .unwrap();
        let c = RelativeAtomicComplex::build(&h, &AtomOrder::canonical(&h)).unwrap();
        let t =
            massey_triple_product(&c, &c.generator(1), &c.generator(2), &c.generator(1)).unwrap();
        assert!(!t.defined);
    }
}
