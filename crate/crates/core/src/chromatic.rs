//! Generalized chromatic polynomials.
//!
//! A vertex coloring is proper when, for every color `λ`, some connected
//! component of the `λ`-edges is not monochromatic. The number of proper
//! colorings with `t` colors is a polynomial in `t`, computed here by
//! deletion/contraction, by brute-force enumeration plus interpolation,
//! and checked against lattice-point counts in `[-s, s]^ℓ`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::colorset::ColorId;
use crate::error::{Error, Result};
use crate::hypergraph::EdgeColoredHypergraph;
use crate::partition::VertexPartition;
use crate::poly::IntegerPolynomial;

/// Default cap on enumerated colorings or lattice points.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// `coloring[v - 1]` is the color of vertex `v`.
pub fn is_proper(h: &EdgeColoredHypergraph, coloring: &[usize]) -> bool {
    (0..h.color_count()).all(|c| {
        h.color_partition(ColorId(c))
            .nontrivial_blocks()
            .iter()
            .any(|block| {
                block
                    .iter()
                    .any(|&v| coloring[v - 1] != coloring[block[0] - 1])
            })
    })
}

fn check_budget(what: &'static str, base: u64, exp: usize, limit: u128) -> Result<()> {
    let needed = (base as u128).checked_pow(exp as u32).unwrap_or(u128::MAX);
    if needed > limit {
        return Err(Error::BudgetExceeded {
            what,
            needed,
            limit,
        });
    }
    Ok(())
}

/// Calls `f` on every point of `{0..base}^n`; stops early if `f` returns
/// false.
fn for_each_point(n: usize, base: usize, mut f: impl FnMut(&[usize])) {
    if base == 0 && n > 0 {
        return;
    }
    let mut x = alloc::vec![0usize; n];
    loop {
        f(&x);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            x[i] += 1;
            if x[i] < base {
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Nontrivial blocks per color, flattened for the enumeration loops.
fn color_blocks(h: &EdgeColoredHypergraph) -> Vec<Vec<Vec<usize>>> {
    (0..h.color_count())
        .map(|c| h.color_partition(ColorId(c)).nontrivial_blocks())
        .collect()
}

/// Number of proper colorings with `t` colors, by enumeration.
pub fn count_proper_colorings(h: &EdgeColoredHypergraph, t: u64, limit: u128) -> Result<u64> {
    let n = h.vertex_count();
    check_budget("colorings", t, n, limit)?;
    let blocks = color_blocks(h);
    let mut count = 0u64;
    for_each_point(n, t as usize, |c| {
        let proper = blocks.iter().all(|bs| {
            bs.iter()
                .any(|b| b.iter().any(|&v| c[v - 1] != c[b[0] - 1]))
        });
        count += u64::from(proper);
    });
    Ok(count)
}

/// Points of `[-s, s]^ℓ` lying on none of the color subspaces.
pub fn blass_sagan_count(h: &EdgeColoredHypergraph, s: u64, limit: u128) -> Result<u64> {
    let n = h.vertex_count();
    check_budget("lattice points", 2 * s + 1, n, limit)?;
    let subspaces: Vec<&VertexPartition> = (0..h.color_count())
        .map(|c| h.color_partition(ColorId(c)))
        .collect();
    let mut count = 0u64;
    let mut m = alloc::vec![0i64; n];
    for_each_point(n, (2 * s + 1) as usize, |x| {
        for (mi, &xi) in m.iter_mut().zip(x) {
            *mi = xi as i64 - s as i64;
        }
        if !subspaces.iter().any(|p| p.is_constant_on_blocks(&m)) {
            count += 1;
        }
    });
    Ok(count)
}

/// Interpolates brute-force counts at `t = 0..=ℓ+1`. One more node than the
/// degree requires, so a non-polynomial count would be caught.
pub fn chromatic_by_counting(h: &EdgeColoredHypergraph, limit: u128) -> Result<IntegerPolynomial> {
    let n = h.vertex_count();
    let mut pts = Vec::with_capacity(n + 2);
    for t in 0..=(n as u64 + 1) {
        pts.push((t as i64, BigInt::from(count_proper_colorings(h, t, limit)?)));
    }
    IntegerPolynomial::interpolate(&pts)
}

/// Deletion/contraction with the default pivot: the color with the fewest
/// edges, ties broken by color order.
pub fn chromatic_polynomial(h: &EdgeColoredHypergraph) -> IntegerPolynomial {
    chromatic_polynomial_with_pivot(h, &fewest_edges)
}

pub fn fewest_edges(h: &EdgeColoredHypergraph) -> ColorId {
    (0..h.color_count())
        .map(ColorId)
        .min_by_key(|&c| (h.edges_of(c).count(), c))
        .expect("pivot requested on an edgeless hypergraph")
}

/// `χ(H) = χ(H - λ) - χ(H / λ)` with `λ = pivot(H)`. A contraction in
/// which some other color lost all its edges contributes zero: every
/// coloring constant on the `λ`-components is monochromatic on that color.
pub fn chromatic_polynomial_with_pivot(
    h: &EdgeColoredHypergraph,
    pivot: &dyn Fn(&EdgeColoredHypergraph) -> ColorId,
) -> IntegerPolynomial {
    let mut memo = BTreeMap::new();
    dc(h, pivot, &mut memo)
}

type Key = (usize, Vec<Vec<Vec<usize>>>);

/// Relabels vertices by first occurrence so that isomorphic sub-instances
/// produced by different contraction orders share a memo entry. Colors are
/// anonymous for the polynomial, so only the edge lists per color matter.
fn canonical_key(h: &EdgeColoredHypergraph) -> Key {
    let mut label = alloc::vec![0usize; h.vertex_count() + 1];
    let mut next = 0;
    let mut per_color: Vec<Vec<Vec<usize>>> = Vec::with_capacity(h.color_count());
    for c in 0..h.color_count() {
        let mut edges = Vec::new();
        for e in h.edges_of(ColorId(c)) {
            let mut vs: Vec<usize> = e
                .vertices
                .iter()
                .map(|&v| {
                    if label[v] == 0 {
                        next += 1;
                        label[v] = next;
                    }
                    label[v]
                })
                .collect();
            vs.sort_unstable();
            edges.push(vs);
        }
        edges.sort();
        per_color.push(edges);
    }
    per_color.sort();
    (h.vertex_count(), per_color)
}

fn dc(
    h: &EdgeColoredHypergraph,
    pivot: &dyn Fn(&EdgeColoredHypergraph) -> ColorId,
    memo: &mut BTreeMap<Key, IntegerPolynomial>,
) -> IntegerPolynomial {
    if h.color_count() == 0 {
        return IntegerPolynomial::monomial(1, h.vertex_count());
    }
    let key = canonical_key(h);
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let lambda = pivot(h);
    let deleted = h.delete_color(lambda).expect("pivot is a color of h");
    let contraction = h.contract_color(lambda).expect("pivot is a color of h");
    let mut p = dc(&deleted, pivot, memo);
    if contraction.collapsed_colors.is_empty() {
        p = &p - &dc(&contraction.hypergraph, pivot, memo);
    }
    memo.insert(key, p.clone());
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::fixtures::*;

    #[test]
    fn proper_colorings_of_ex28() {
        let h = ex28();
        assert!(!is_proper(&h, &[1, 1, 2, 2]));
        assert!(is_proper(&h, &[1, 2, 1, 2]));
        assert!(is_proper(&EdgeColoredHypergraph::edgeless(3), &[1, 1, 1]));
        assert_eq!(count_proper_colorings(&h, 3, DEFAULT_BUDGET).unwrap(), 48);
        assert_eq!(count_proper_colorings(&h, 1, DEFAULT_BUDGET).unwrap(), 0);
        let e2 = EdgeColoredHypergraph::edgeless(2);
        assert_eq!(count_proper_colorings(&e2, 5, DEFAULT_BUDGET).unwrap(), 25);
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(
            chromatic_polynomial(&ex28()),
            IntegerPolynomial::from_coeffs([0, 1, -1, -1, 1])
        );
        assert_eq!(
            chromatic_polynomial(&EdgeColoredHypergraph::edgeless(3)),
            IntegerPolynomial::monomial(1, 3)
        );
        let braid = EdgeColoredHypergraph::kequal(3, 2).unwrap();
        assert_eq!(
            chromatic_polynomial(&braid),
            IntegerPolynomial::from_coeffs([0, 2, -3, 1])
        );
    }

    #[test]
    fn lattice_point_counts() {
        assert_eq!(blass_sagan_count(&ex28(), 1, DEFAULT_BUDGET).unwrap(), 48);
        let e2 = EdgeColoredHypergraph::edgeless(2);
        assert_eq!(blass_sagan_count(&e2, 2, DEFAULT_BUDGET).unwrap(), 25);
        let braid = EdgeColoredHypergraph::kequal(3, 2).unwrap();
        assert_eq!(blass_sagan_count(&braid, 1, DEFAULT_BUDGET).unwrap(), 6);
    }

    #[test]
    fn budget_is_enforced() {
        let err = count_proper_colorings(&mcs7(), 20, 1000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 1000, .. }));
    }

    #[test]
    fn pivot_independence() {
        for h in [ex28(), ex28_2(), smalldude(), mcs7()] {
            let last = |g: &EdgeColoredHypergraph| ColorId(g.color_count() - 1);
            assert_eq!(
                chromatic_polynomial(&h),
                chromatic_polynomial_with_pivot(&h, &last)
            );
            assert_eq!(
                chromatic_polynomial(&h),
                chromatic_by_counting(&h, DEFAULT_BUDGET).unwrap()
            );
        }
    }
}
