//! Seeded instance generators.
//!
//! All randomness comes from ChaCha8 seeded with the caller's seed, so equal
//! arguments give equal instances.

use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::model::{self, Edge, InstanceKind, OuterplaneEmbedding, SimInstance};

/// Generator identifier recorded in file metadata.
pub const ALGORITHM: &str = "chacha8";

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_fraction(name: &str, f: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&f) {
        return Err(Error::usage(format!("{name} must lie in [0, 1], got {f}")));
    }
    Ok(())
}

/// Number of matched vertices for `coverage`, rounded down to even.
fn matched_count(n: usize, coverage: f64) -> usize {
    let k = (coverage * n as f64).floor() as usize;
    k.min(n) & !1
}

/// Pairs `s_i` with `s_{i+h}` over the sorted selection.
fn spread_pairs(sel: &mut [u32]) -> Vec<Edge> {
    sel.sort_unstable();
    let h = sel.len() / 2;
    (0..h).map(|i| Edge::new(sel[i], sel[i + h])).collect()
}

fn sample_matching(n: usize, k: usize, forbidden: impl Fn(&Edge) -> bool, rng: &mut ChaCha8Rng) -> Result<Vec<Edge>> {
    let mut verts: Vec<u32> = (1..=n as u32).collect();
    for _ in 0..64 {
        verts.shuffle(rng);
        let m: Vec<Edge> = verts[..k].chunks(2).map(|c| Edge::new(c[0], c[1])).collect();
        if !m.iter().any(&forbidden) {
            return Ok(m);
        }
    }
    let mut last = verts[..k].to_vec();
    let m = spread_pairs(&mut last);
    if !m.iter().any(&forbidden) {
        return Ok(m);
    }
    let mut first: Vec<u32> = (1..=k as u32).collect();
    let m = spread_pairs(&mut first);
    if !m.iter().any(&forbidden) {
        return Ok(m);
    }
    if k == 2 && n >= 4 {
        let m = vec![Edge::new(1, 3)];
        if !m.iter().any(&forbidden) {
            return Ok(m);
        }
    }
    Err(Error::domain(format!("no matching on {k} of {n} vertices avoids the backbone edges")))
}

/// A path on `n` vertices plus a random matching covering
/// `⌊coverage·n⌋` vertices (rounded down to even).
pub fn gen_path_matching(n: usize, coverage: f64, seed: u64) -> Result<SimInstance> {
    check_fraction("coverage", coverage)?;
    if n < 2 {
        return Err(Error::usage("a path needs at least two vertices"));
    }
    let k = matched_count(n, coverage);
    let mut m = sample_matching(n, k, |e| e.v.get() == e.u.get() + 1, &mut rng(seed))?;
    m.sort();
    Ok(SimInstance { n, edges_a: model::path_edges(n), edges_b: m, kind: InstanceKind::PathMatching })
}

/// An `n`-cycle plus a random matching avoiding the cycle edges.
pub fn gen_cycle_matching(n: usize, coverage: f64, seed: u64) -> Result<SimInstance> {
    check_fraction("coverage", coverage)?;
    if n < 3 {
        return Err(Error::usage("a cycle needs at least three vertices"));
    }
    let k = matched_count(n, coverage);
    let last = n as u32;
    let forbidden = |e: &Edge| e.v.get() == e.u.get() + 1 || (e.u.get() == 1 && e.v.get() == last);
    let mut m = sample_matching(n, k, forbidden, &mut rng(seed))?;
    m.sort();
    Ok(SimInstance { n, edges_a: model::cycle_edges(n), edges_b: m, kind: InstanceKind::CycleMatching })
}

/// The polygon `[1..n]` with `⌊density·(n − 3)⌋` random non-crossing chords.
pub fn gen_outerplanar(n: usize, density: f64, seed: u64) -> Result<OuterplaneEmbedding> {
    check_fraction("density", density)?;
    if n < 3 {
        return Err(Error::usage("an outer cycle needs at least three vertices"));
    }
    let target = (density * (n - 3) as f64).floor() as usize;
    let mut rng = rng(seed);
    let mut regions: Vec<Vec<u32>> = vec![(1..=n as u32).collect()];
    let mut chords = Vec::with_capacity(target);
    while chords.len() < target {
        let open: Vec<usize> = (0..regions.len()).filter(|&r| regions[r].len() >= 4).collect();
        let r = open[rng.random_range(0..open.len())];
        let region = std::mem::take(&mut regions[r]);
        let len = region.len();
        let i = rng.random_range(0..len);
        let j = (i + rng.random_range(2..=len - 2)) % len;
        let (i, j) = (i.min(j), i.max(j));
        chords.push(Edge::new(region[i], region[j]));
        let inner = region[i..=j].to_vec();
        let mut outer = region[..=i].to_vec();
        outer.extend_from_slice(&region[j..]);
        regions[r] = inner;
        regions.push(outer);
    }
    chords.sort();
    Ok(OuterplaneEmbedding { outer: (1..=n as u32).map(model::VertexId).collect(), chords })
}
