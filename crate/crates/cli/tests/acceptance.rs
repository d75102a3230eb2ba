//! Acceptance suite. Prints one `PASS`/`FAIL` line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use ecarr_cli::format::ArrangementFile;
use ecarr_cli::report::{default_weight_cap, pi_pages, PiOptions};
use ecarr_core::chromatic::{
    blass_sagan_count, chromatic_by_counting, chromatic_polynomial, DEFAULT_BUDGET,
};
use ecarr_core::dga::{AtomOrder, RelativeAtomicComplex};
use ecarr_core::homotopy::bicomplex::Truncation;
use ecarr_core::homotopy::{
    analyze_system, find_massey_color_systems, kequal_no_massey, kequal_top_degree, BiComplex,
};
use ecarr_core::{ColorId, EdgeColoredHypergraph, Error, IntegerPolynomial, IntersectionLattice};
use num_traits::ToPrimitive;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const RANDOM_SEED: u64 = 0x5eed_2024;
const RANDOM_INSTANCES: usize = 20;
const AC1_TIME_LIMIT: Duration = Duration::from_secs(60);
/// `(2s + 1)^ℓ` cap on lattice-point enumeration.
const AC2_POINT_LIMIT: u128 = 10_000_000;
const AC5_MAX_DEGREE: i64 = 12;
const AC5_TIME_LIMIT: Duration = Duration::from_secs(120);
const AC7_MAX_DEGREE: i64 = 8;
const AC7_MAX_PAGE: i64 = 6;
const AC8_MAX_TOTAL_DEGREE: i64 = 8;
const AC9_TIME_LIMIT: Duration = Duration::from_secs(600);

type Check = fn() -> Result<String, String>;

fn corpus() -> Vec<(String, EdgeColoredHypergraph)> {
    let mut v: Vec<(String, EdgeColoredHypergraph)> = ["ex28", "ex28-2", "smalldude"]
        .iter()
        .map(|n| (n.to_string(), load(n)))
        .collect();
    for (l, k) in [(3, 2), (4, 2), (5, 3)] {
        v.push((
            format!("kequal({l},{k})"),
            EdgeColoredHypergraph::kequal(l, k).unwrap(),
        ));
    }
    v.push(("mcs7".into(), load("mcs7")));
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for i in 0..RANDOM_INSTANCES {
        v.push((format!("random-{i}"), random_hypergraph(&mut rng)));
    }
    v
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ac1() -> Result<String, String> {
    let start = Instant::now();
    let instances = corpus();
    for (name, h) in &instances {
        let dc = chromatic_polynomial(h);
        let mobius = IntersectionLattice::build(h).characteristic_polynomial();
        let count = chromatic_by_counting(h, DEFAULT_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        ensure(dc == mobius && mobius == count, || {
            format!("{name}: dc {dc}, mobius {mobius}, count {count}")
        })?;
    }
    // The CLI cross-check on every bundled file, and on the random instances.
    let dir = tempfile::tempdir().unwrap();
    let mut files = corpus_files();
    for (name, h) in instances.iter().filter(|(n, _)| n.starts_with("random")) {
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(
            &path,
            serde_json::to_string(&ArrangementFile::from_hypergraph(h)).unwrap(),
        )
        .unwrap();
        files.push(path);
    }
    for f in &files {
        let run = ecarr(&[
            "charpoly".as_ref(),
            f.as_os_str(),
            "--method".as_ref(),
            "all".as_ref(),
        ]);
        ensure(run.code == 0 && run.json()["agree"] == true, || {
            format!(
                "ecarr charpoly --method all {}: exit {} {}",
                f.display(),
                run.code,
                run.stderr
            )
        })?;
    }
    let t = start.elapsed();
    ensure(t < AC1_TIME_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "{} instances agree, {} files through the CLI, {:.1}s",
        instances.len(),
        files.len(),
        t.as_secs_f64()
    ))
}

fn ac2() -> Result<String, String> {
    let mut checked = 0;
    for (name, h) in corpus() {
        let chi = IntersectionLattice::build(&h).characteristic_polynomial();
        for s in [1u64, 2] {
            let points = (2 * s as u128 + 1).pow(h.vertex_count() as u32);
            if points > AC2_POINT_LIMIT {
                continue;
            }
            let count = blass_sagan_count(&h, s, AC2_POINT_LIMIT).map_err(|e| e.to_string())?;
            let expected = chi.eval_i64(2 * s as i64 + 1);
            ensure(expected == count.into(), || {
                format!(
                    "{name}, s={s}: χ({}) = {expected}, lattice points {count}",
                    2 * s + 1
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (instance, s) pairs"))
}

fn ac3() -> Result<String, String> {
    let h = load("ex28");
    let l = IntersectionLattice::build(&h);
    // ⊥, {B} (codim 1), {R} (codim 2), top (codim 3); μ = 1, -1, -1, 1.
    let codims: Vec<usize> = l.elements().iter().map(|e| e.codim).collect();
    ensure(codims == [0, 1, 2, 3], || format!("codims {codims:?}"))?;
    ensure(l.mobius() == [1, -1, -1, 1], || {
        format!("mobius {:?}", l.mobius())
    })?;
    let by_hand = [(1i64, 0usize), (-1, 1), (-1, 2), (1, 3)]
        .iter()
        .fold(IntegerPolynomial::zero(), |acc, &(mu, codim)| {
            &acc + &IntegerPolynomial::monomial(mu, 4 - codim)
        });
    let chi = l.characteristic_polynomial();
    let target = IntegerPolynomial::from_coeffs([0, 1, -1, -1, 1]);
    ensure(chi == target && by_hand == target, || format!("χ = {chi}"))?;
    // R edges {1,2} and {3,4}, B edge {2,3}.
    let mut proper = 0;
    for c in 0..81u32 {
        let v: Vec<u32> = (0..4).map(|i| c / 3u32.pow(i) % 3).collect();
        if (v[0] != v[1] || v[2] != v[3]) && v[1] != v[2] {
            proper += 1;
        }
    }
    let at3 = chi.eval_i64(3).to_i64().unwrap();
    ensure(at3 == 48 && proper == 48, || {
        format!("χ(3) = {at3}, enumeration {proper}")
    })?;
    Ok(format!("χ = {chi}, χ(3) = {at3}"))
}

fn ac4() -> Result<String, String> {
    let small = load("smalldude");
    ensure(!IntersectionLattice::build(&small).is_geometric(), || {
        "smalldude is geometric".into()
    })?;
    let run = ecarr(&["geometric".as_ref(), corpus_file("smalldude").as_os_str()]);
    ensure(
        run.code == 0 && run.json()["geometric"] == false && !run.json()["witness"].is_null(),
        || format!("CLI: {}", run.stdout),
    )?;
    let mut graphs: Vec<(String, EdgeColoredHypergraph)> = corpus()
        .into_iter()
        .filter(|(_, h)| {
            h.edges().iter().all(|e| e.vertices.len() == 2) && h.edges().len() == h.color_count()
        })
        .collect();
    let from_corpus = graphs.len();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 4);
    for i in 0..RANDOM_INSTANCES {
        graphs.push((format!("graph-{i}"), random_graph(&mut rng)));
    }
    for (name, h) in &graphs {
        let l = IntersectionLattice::build(h);
        ensure(l.is_geometric(), || {
            format!("{name}: {:?}", l.semimodularity_violation())
        })?;
    }
    Ok(format!(
        "smalldude non-geometric; {} graphs geometric ({from_corpus} from the corpus)",
        graphs.len()
    ))
}

fn ac5() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED ^ 5);
    let mut instances = corpus();
    for n in ["sphere3", "sphere5", "two-spheres"] {
        instances.push((n.into(), load(n)));
    }
    for (name, h) in &instances {
        let c = RelativeAtomicComplex::build(h, &AtomOrder::canonical(h))
            .map_err(|e| format!("{name}: {e}"))?;
        c.validate(AC5_MAX_DEGREE)
            .map_err(|e| format!("{name}: {e}"))?;
        let mut order: Vec<ColorId> = (0..h.color_count()).map(ColorId).collect();
        order.shuffle(&mut rng);
        let shuffled = RelativeAtomicComplex::build(h, &AtomOrder(order.clone())).unwrap();
        shuffled
            .validate(AC5_MAX_DEGREE)
            .map_err(|e| format!("{name} shuffled: {e}"))?;
        let (a, b) = (
            c.betti_numbers(AC5_MAX_DEGREE),
            shuffled.betti_numbers(AC5_MAX_DEGREE),
        );
        ensure(a == b, || {
            format!("{name}: Betti {a:?} vs {b:?} under order {order:?}")
        })?;
    }
    let t = start.elapsed();
    ensure(t < AC5_TIME_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "{} instances, {:.1}s",
        instances.len(),
        t.as_secs_f64()
    ))
}

fn ac6() -> Result<String, String> {
    let h = EdgeColoredHypergraph::kequal(5, 3).unwrap();
    let c = RelativeAtomicComplex::build(&h, &AtomOrder::canonical(&h)).unwrap();
    let top = kequal_top_degree(5, 3).unwrap() as i64;
    // ℓ - 1 + ⌊ℓ/k⌋(k - 2) = 4 + 1
    ensure(top == 5, || format!("top degree formula gives {top}"))?;
    let betti = c.betti_numbers(i64::MAX);
    let above: Vec<_> = betti.iter().filter(|&(&d, &b)| d > top && b > 0).collect();
    ensure(above.is_empty(), || {
        format!("nonzero Betti above {top}: {above:?}")
    })?;
    ensure(betti.get(&top).copied().unwrap_or(0) > 0, || {
        format!("H^{top} = 0: {betti:?}")
    })?;
    let atom_degrees: Vec<i64> = (0..c.atom_count()).map(|i| c.degree(1 << i)).collect();
    ensure(atom_degrees.iter().all(|&d| d == 2 * 3 - 3), || {
        format!("atom degrees {atom_degrees:?}")
    })?;
    let nonzero: Vec<_> = betti.iter().filter(|(_, &b)| b > 0).collect();
    Ok(format!("Betti {nonzero:?}, atoms in degree 3"))
}

fn sphere(codim: usize) -> EdgeColoredHypergraph {
    EdgeColoredHypergraph::new(codim + 1, [((1..=codim + 1).collect::<Vec<_>>(), "x")]).unwrap()
}

fn ac7() -> Result<String, String> {
    let pi_of = |h: &EdgeColoredHypergraph| -> Result<Vec<usize>, String> {
        let (ss, _) =
            pi_pages(h, PiOptions::new(AC7_MAX_DEGREE, AC7_MAX_PAGE)).map_err(|e| e.to_string())?;
        Ok((1..=AC7_MAX_DEGREE)
            .map(|n| ss.pi_ranks.get(&n).copied().unwrap_or(0))
            .collect())
    };
    let mut detail = Vec::new();
    for c in [2usize, 3] {
        let h = sphere(c);
        let dga = RelativeAtomicComplex::build(&h, &AtomOrder::canonical(&h)).unwrap();
        let n = 2 * c as i64 - 1;
        let betti: Vec<(i64, usize)> = dga
            .betti_numbers(i64::MAX)
            .into_iter()
            .filter(|&(_, b)| b > 0)
            .collect();
        ensure(betti == [(0, 1), (n, 1)], || {
            format!("codim {c}: Betti {betti:?}")
        })?;
        let pi = pi_of(&h)?;
        let expected: Vec<usize> = (1..=AC7_MAX_DEGREE).map(|d| usize::from(d == n)).collect();
        ensure(pi == expected, || format!("codim {c}: π ranks {pi:?}"))?;
        detail.push(format!("S^{n}"));
    }
    let two = EdgeColoredHypergraph::new(6, [(vec![1, 2, 3], "x"), (vec![4, 5, 6], "y")]).unwrap();
    let pi = pi_of(&two)?;
    ensure(pi == [0, 0, 2, 0, 0, 0, 0, 0], || {
        format!("S^3 x S^3: π ranks {pi:?}")
    })?;
    detail.push("S^3 x S^3".into());
    Ok(format!(
        "{} match up to degree {AC7_MAX_DEGREE}",
        detail.join(", ")
    ))
}

fn ac8() -> Result<String, String> {
    let mut instances = corpus();
    for n in ["sphere3", "sphere5", "two-spheres"] {
        instances.push((n.into(), load(n)));
    }
    let mut words = 0;
    for (name, h) in &instances {
        let c = RelativeAtomicComplex::build(h, &AtomOrder::canonical(h)).unwrap();
        let cap = default_weight_cap(&c, h);
        let bc = BiComplex::build(&c, Truncation::new(AC8_MAX_TOTAL_DEGREE, cap))
            .map_err(|e| format!("{name}: {e}"))?;
        bc.validate().map_err(|e| format!("{name}: {e}"))?;
        words += bc.word_count();
    }
    // Without a weight cap the truncation is infinite when low-degree
    // generators exist; the build must refuse rather than silently truncate.
    let ex28 = load("ex28");
    let c = RelativeAtomicComplex::build(&ex28, &AtomOrder::canonical(&ex28)).unwrap();
    let refused = matches!(
        BiComplex::build(&c, Truncation::new(AC8_MAX_TOTAL_DEGREE, None)),
        Err(Error::UnboundedTruncation)
    );
    ensure(refused, || "uncapped ex28 truncation was accepted".into())?;
    Ok(format!("{} instances, {words} words", instances.len()))
}

fn ac9() -> Result<String, String> {
    let start = Instant::now();
    let h = load("mcs7");
    let found = find_massey_color_systems(&h);
    let system = found
        .iter()
        .find(|f| f.system.names(&h) == ["L1", "L2", "L3", "L4", "L5"])
        .ok_or_else(|| format!("system not found among {}", found.len()))?;
    ensure(system.no_extra_colors, || "extra colors".into())?;
    let (c, r) = analyze_system(&h, system.system).map_err(|e| e.to_string())?;
    ensure(r.d1_zero, || "d1 of the word is nonzero".into())?;
    ensure(
        r.class_closed && r.class_nonzero && r.class_degree == 8,
        || {
            format!(
                "class {} closed {} nonzero {} degree {}",
                c.format_element(&r.class),
                r.class_closed,
                r.class_nonzero,
                r.class_degree
            )
        },
    )?;
    ensure(r.d2_chain_matches_class, || {
        format!("d2 chain {}", c.format_element(&r.d2_chain))
    })?;
    ensure(
        r.triple.defined && r.triple_matches_class && r.triple.nontrivial,
        || {
            format!(
                "triple product {}",
                c.format_element(&r.triple.representative)
            )
        },
    )?;
    println!(
        "     info: d(a1234 + a1235) = {}, so only a1234 - a1235 is a cocycle",
        c.format_element(&r.plus_variant_boundary)
    );
    println!(
        "     info: d2 of the word is zero on E2 ({}) since the class is decomposable ({})",
        r.d2_vanishes_on_e2, r.class_vanishes_on_e2
    );
    let run = ecarr(&["massey".as_ref(), corpus_file("mcs7").as_os_str()]);
    let j = run.json();
    ensure(
        run.code == 0 && j["non_formal"] == true && j["certificate"]["non_formal"] == true,
        || format!("CLI: exit {} {}", run.code, run.stderr),
    )?;
    let t = start.elapsed();
    ensure(t < AC9_TIME_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "d2 = ±({}), nonzero in H^8, triple product nontrivial, CLI certificate",
        c.format_element(&r.class)
    ))
}

fn ac10() -> Result<String, String> {
    let oracle = |l: i64, k: i64| 6 * k - 9 > l + (l / k) * (k - 2);
    for ((l, k), expected) in [((6, 3), true), ((7, 3), false), ((10, 4), true)] {
        let got = kequal_no_massey(l, k).unwrap();
        ensure(
            got == expected && oracle(l as i64, k as i64) == expected,
            || format!("({l},{k}) gave {got}"),
        )?;
        let run = ecarr(&["kequal", &l.to_string(), &k.to_string()]);
        ensure(run.code == 0 && run.json()["no_massey"] == expected, || {
            format!("CLI ({l},{k}): {}", run.stdout)
        })?;
    }
    Ok("(6,3) true, (7,3) false, (10,4) true".into())
}

fn main() {
    let checks: [(&str, &str, Check); 10] = [
        ("AC1", "deletion-contraction = Möbius = counting", ac1),
        ("AC2", "lattice-point counts", ac2),
        ("AC3", "ex28 characteristic polynomial", ac3),
        ("AC4", "geometricity", ac4),
        ("AC5", "DGA axioms and order invariance", ac5),
        ("AC6", "k-equal vanishing", ac6),
        ("AC7", "sphere oracles", ac7),
        ("AC8", "bicomplex sign validation", ac8),
        ("AC9", "Massey pipeline on mcs7", ac9),
        ("AC10", "k-equal no-Massey criterion", ac10),
    ];
    let mut failed = 0;
    for (id, name, check) in checks {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("{id:<5} PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id:<5} FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
