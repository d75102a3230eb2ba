#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

use ecarr_cli::format::read_arrangement;
use ecarr_core::EdgeColoredHypergraph;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

pub fn corpus_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

pub fn corpus_file(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.json"))
}

pub fn load(name: &str) -> EdgeColoredHypergraph {
    read_arrangement(&corpus_file(name)).unwrap().hypergraph
}

/// Every `.json` file under `corpus/`, sorted.
pub fn corpus_files() -> Vec<PathBuf> {
    let mut v: Vec<PathBuf> = std::fs::read_dir(corpus_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    v.sort();
    v
}

/// `ℓ` in `2..=6`, up to four colors with one or two edges each.
pub fn random_hypergraph(rng: &mut ChaCha8Rng) -> EdgeColoredHypergraph {
    let l = rng.gen_range(2..=6);
    let colors = rng.gen_range(1..=4);
    let mut edges = Vec::new();
    for c in 0..colors {
        for _ in 0..rng.gen_range(1..=2) {
            let size = rng.gen_range(2..=l.min(4));
            let mut vs: Vec<usize> = (1..=l).collect();
            vs.shuffle(rng);
            vs.truncate(size);
            vs.sort_unstable();
            edges.push((vs, format!("c{c}")));
        }
    }
    EdgeColoredHypergraph::new(l, edges).expect("edges are in range and nonempty")
}

/// A simple graph on `3..=6` vertices with a distinct color per edge.
pub fn random_graph(rng: &mut ChaCha8Rng) -> EdgeColoredHypergraph {
    let l = rng.gen_range(3..=6);
    let mut pairs: Vec<Vec<usize>> = (1..=l)
        .flat_map(|i| (i + 1..=l).map(move |j| vec![i, j]))
        .collect();
    pairs.shuffle(rng);
    pairs.truncate(rng.gen_range(1..=pairs.len().min(7)));
    let edges = pairs
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, format!("e{i}")));
    EdgeColoredHypergraph::new(l, edges).unwrap()
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Run {
    pub fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or(Value::Null)
    }
}

pub fn ecarr<S: AsRef<std::ffi::OsStr>>(args: &[S]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ecarr"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
    }
}
