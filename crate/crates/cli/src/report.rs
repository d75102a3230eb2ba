//! JSON reports, one builder per subcommand.
//!
//! Every builder returns a [`Report`]: the JSON document plus whether the
//! checks it ran agreed. Maps are `BTreeMap`-backed so output is
//! byte-for-byte deterministic.

use ecarr_core::chromatic::{self, DEFAULT_BUDGET};
use ecarr_core::dga::{AtomOrder, RelativeAtomicComplex, DEFAULT_MAX_ATOMS};
use ecarr_core::homotopy::bicomplex::{Truncation, DEFAULT_MAX_WORDS};
use ecarr_core::homotopy::spectral::check_page_consistency;
use ecarr_core::homotopy::{self, BiComplex, MasseyReport, SpectralSequencePages};
use ecarr_core::lattice::LatticeElement;
use ecarr_core::linalg::SparseVec;
use ecarr_core::{EdgeColoredHypergraph, Error, IntegerPolynomial, IntersectionLattice};
use serde_json::{json, Map, Value};

use crate::format::color_names;
use crate::{CliError, Result};

#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    /// False when independent computations disagreed.
    pub ok: bool,
}

impl Report {
    fn ok(json: Value) -> Self {
        Self { json, ok: true }
    }
}

/// Coefficients from the constant term up. Coefficients beyond `i64` are
/// written as decimal strings.
pub fn polynomial_json(p: &IntegerPolynomial) -> Value {
    match p.to_i64_vec() {
        Some(v) => json!(v),
        None => Value::Array(p.coeffs().iter().map(|c| json!(c.to_string())).collect()),
    }
}

fn element_json(e: &LatticeElement, names: Vec<String>, mobius: i64, index: usize) -> Value {
    json!({
        "index": index,
        "colors": names,
        "blocks": e.partition.nontrivial_blocks(),
        "codim": e.codim,
        "mobius": mobius,
    })
}

pub fn lattice(h: &EdgeColoredHypergraph) -> Report {
    let l = IntersectionLattice::build(h);
    let mu = l.mobius();
    let elements: Vec<Value> = (0..l.len())
        .map(|i| element_json(l.element(i), l.color_names(i), mu[i], i))
        .collect();
    let chi = l.characteristic_polynomial();
    Report::ok(json!({
        "vertices": h.vertex_count(),
        "colors": color_names(h),
        "elements": elements,
        "covers": l.cover_relations(),
        "characteristic_polynomial": polynomial_json(&chi),
        "geometric": l.is_geometric(),
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharpolyMethod {
    Mobius,
    DeletionContraction,
    Count,
    All,
}

impl CharpolyMethod {
    pub fn name(self) -> &'static str {
        match self {
            CharpolyMethod::Mobius => "mobius",
            CharpolyMethod::DeletionContraction => "dc",
            CharpolyMethod::Count => "count",
            CharpolyMethod::All => "all",
        }
    }
}

/// `method = All` runs the three methods and reports `ok = false` when they
/// disagree.
pub fn charpoly(
    h: &EdgeColoredHypergraph,
    method: CharpolyMethod,
    max_colorings: u128,
) -> Result<Report> {
    let one = |m: CharpolyMethod| -> Result<IntegerPolynomial> {
        Ok(match m {
            CharpolyMethod::Mobius => IntersectionLattice::build(h).characteristic_polynomial(),
            CharpolyMethod::DeletionContraction => chromatic::chromatic_polynomial(h),
            CharpolyMethod::Count => chromatic::chromatic_by_counting(h, max_colorings)?,
            CharpolyMethod::All => unreachable!(),
        })
    };
    if method != CharpolyMethod::All {
        let p = one(method)?;
        return Ok(Report::ok(json!({
            "method": method.name(),
            "polynomial": polynomial_json(&p),
            "display": p.to_string(),
        })));
    }
    let mut by_method = Map::new();
    let mut polys = Vec::new();
    for m in [
        CharpolyMethod::Mobius,
        CharpolyMethod::DeletionContraction,
        CharpolyMethod::Count,
    ] {
        let p = one(m)?;
        by_method.insert(m.name().into(), polynomial_json(&p));
        polys.push(p);
    }
    let agree = polys.windows(2).all(|w| w[0] == w[1]);
    Ok(Report {
        json: json!({
            "method": "all",
            "polynomial": polynomial_json(&polys[0]),
            "display": polys[0].to_string(),
            "methods": by_method,
            "agree": agree,
        }),
        ok: agree,
    })
}

pub fn geometric(h: &EdgeColoredHypergraph) -> Report {
    let l = IntersectionLattice::build(h);
    let describe = |i: usize| json!({"colors": l.color_names(i), "codim": l.element(i).codim});
    let witness = l.semimodularity_violation().map(|v| {
        json!({
            "x": describe(v.x),
            "y": describe(v.y),
            "meet": describe(v.meet),
            "join": describe(v.join),
        })
    });
    Report::ok(json!({"geometric": witness.is_none(), "witness": witness}))
}

pub fn build_complex(
    h: &EdgeColoredHypergraph,
    max_generators: usize,
) -> Result<RelativeAtomicComplex> {
    Ok(RelativeAtomicComplex::build_with_cap(
        h,
        &AtomOrder::canonical(h),
        max_generators,
    )?)
}

/// Betti numbers with representatives. With `validate`, the DGA axioms are
/// checked first up to `max_degree`.
pub fn cohomology(
    h: &EdgeColoredHypergraph,
    max_degree: i64,
    max_generators: usize,
    validate: bool,
) -> Result<Report> {
    let c = build_complex(h, max_generators)?;
    if validate {
        c.validate(max_degree)?;
    }
    let coh = c.cohomology(max_degree);
    let degrees: Vec<Value> = coh
        .betti
        .iter()
        .map(|(&d, &b)| {
            let reps: Vec<String> = coh.representatives[&d]
                .iter()
                .map(|v| c.format_element(v))
                .collect();
            json!({"degree": d, "betti": b, "representatives": reps})
        })
        .collect();
    Ok(Report::ok(json!({
        "atoms": c.atom_count(),
        "generators": c.generator_count(),
        "euler_characteristic": c.euler_characteristic(),
        "degrees": degrees,
    })))
}

#[derive(Debug, Clone, Copy)]
pub struct PiOptions {
    pub max_total_degree: i64,
    pub max_page: i64,
    pub max_weight: Option<usize>,
    pub max_generators: usize,
    pub max_words: usize,
}

impl PiOptions {
    pub fn new(max_total_degree: i64, max_page: i64) -> Self {
        Self {
            max_total_degree,
            max_page,
            max_weight: None,
            max_generators: DEFAULT_MAX_ATOMS,
            max_words: DEFAULT_MAX_WORDS,
        }
    }
}

/// The weight cap used when none is given: none if the truncation is
/// already finite, otherwise `ℓ - 1`.
pub fn default_weight_cap(c: &RelativeAtomicComplex, h: &EdgeColoredHypergraph) -> Option<usize> {
    let low = (1..(1u32 << c.atom_count())).any(|m| c.degree(m) <= 1);
    low.then(|| h.vertex_count().saturating_sub(1).max(1))
}

pub fn pi_pages(
    h: &EdgeColoredHypergraph,
    opts: PiOptions,
) -> Result<(SpectralSequencePages, Truncation)> {
    let c = build_complex(h, opts.max_generators)?;
    let cap = opts.max_weight.or_else(|| default_weight_cap(&c, h));
    let mut t = Truncation::new(opts.max_total_degree, cap);
    t.max_words = opts.max_words;
    let bc = BiComplex::build(&c, t)?;
    bc.validate()?;
    let pages = homotopy::spectral_sequence_pages(&bc, opts.max_page)?;
    check_page_consistency(&pages, opts.max_total_degree)?;
    Ok((pages, t))
}

fn bigraded(m: &std::collections::BTreeMap<(i64, i64), usize>) -> Vec<Value> {
    m.iter()
        .map(|(&(p, q), &r)| json!({"p": p, "q": q, "rank": r}))
        .collect()
}

fn by_degree(m: &std::collections::BTreeMap<i64, usize>) -> Map<String, Value> {
    m.iter().map(|(k, v)| (k.to_string(), json!(v))).collect()
}

pub fn pi(h: &EdgeColoredHypergraph, opts: PiOptions) -> Result<Report> {
    let (ss, t) = pi_pages(h, opts)?;
    let pages: Vec<Value> = ss
        .pages
        .iter()
        .map(|p| {
            json!({
                "r": p.r,
                "ranks": bigraded(&p.ranks),
                "differential_ranks": bigraded(&p.differential_ranks),
            })
        })
        .collect();
    Ok(Report::ok(json!({
        "max_total_degree": t.max_total_degree,
        "max_page": opts.max_page,
        "max_weight": t.max_weight,
        "weight_truncated": ss.weight_truncated,
        "convergence_caveat": ss.convergence_caveat,
        "pi_ranks": by_degree(&ss.pi_ranks),
        "total_homology": by_degree(&ss.total_homology),
        "e_infinity": bigraded(&ss.e_infinity),
        "pages": pages,
    })))
}

fn massey_report_json(c: &RelativeAtomicComplex, r: &MasseyReport) -> Value {
    let f = |v: &SparseVec| c.format_element(v);
    json!({
        "colors": r.names,
        "no_extra_colors": r.no_extra_colors,
        "class": f(&r.class),
        "class_degree": r.class_degree,
        "class_closed": r.class_closed,
        "class_nonzero": r.class_nonzero,
        "plus_variant_boundary": f(&r.plus_variant_boundary),
        "triple_product": {
            "defined": r.triple.defined,
            "representative": f(&r.triple.representative),
            "x": f(&r.triple.x),
            "y": f(&r.triple.y),
            "indeterminacy_rank": r.triple.indeterminacy.rank(),
            "nontrivial": r.triple.nontrivial,
            "matches_class": r.triple_matches_class,
        },
        "word_bidegree": [r.word_bidegree.0, r.word_bidegree.1],
        "d1_zero": r.d1_zero,
        "d2_chain": f(&r.d2_chain),
        "d2_chain_matches_class": r.d2_chain_matches_class,
        "d2_vanishes_on_e2": r.d2_vanishes_on_e2,
        "class_vanishes_on_e2": r.class_vanishes_on_e2,
        "non_formal": r.non_formal,
    })
}

/// Finds every Massey color system and analyzes each. The certificate is
/// the first system with a nontrivial triple product.
pub fn massey(h: &EdgeColoredHypergraph) -> Result<Report> {
    let found = homotopy::find_massey_color_systems(h);
    let mut systems = Vec::new();
    let mut reports = Vec::new();
    let mut certificate = Value::Null;
    for f in &found {
        systems.push(json!({
            "colors": f.system.names(h),
            "no_extra_colors": f.no_extra_colors,
        }));
        let (c, r) = match homotopy::analyze_system(h, f.system) {
            Ok(x) => x,
            // Too many colors to build the algebra: report the system only.
            Err(Error::BudgetExceeded { .. }) => continue,
            Err(e) => return Err(CliError::Core(e)),
        };
        let j = massey_report_json(&c, &r);
        if r.non_formal && certificate.is_null() {
            certificate = j.clone();
        }
        reports.push(j);
    }
    Ok(Report::ok(json!({
        "systems": systems,
        "reports": reports,
        "non_formal": !certificate.is_null(),
        "certificate": certificate,
    })))
}

pub fn kequal(l: usize, k: usize) -> Result<Report> {
    Ok(Report::ok(json!({
        "l": l,
        "k": k,
        "no_massey": homotopy::kequal_no_massey(l, k)?,
        "top_degree": homotopy::kequal_top_degree(l, k)?,
    })))
}

pub const DEFAULT_MAX_COLORINGS: u128 = DEFAULT_BUDGET;
