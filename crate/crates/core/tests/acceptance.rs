//! Acceptance suite. Run with `--nocapture` to see one PASS/FAIL line per
//! criterion.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use simrac::gen::{gen_cycle_matching, gen_outerplanar, gen_path_matching};
use simrac::geom::{self, Point};
use simrac::layout::{layout_cycle_matching_with_shift, layout_dual_outerplanar, layout_path_matching, layout_path_matching_instrumented};
use simrac::model::{
    build_p_odd, decompose_alternating, fixture_augmented_triangle_antiprism, Edge, SimInstance, VertexId, ANTIPRISM_GRAY_CYCLE,
    ANTIPRISM_HUB, ANTIPRISM_RIM,
};
use simrac::verify::check_rac_size;
use simrac::{verify_all, Drawing, Profile, Tolerance};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn violations(d: &Drawing<i64>, p: &Profile) -> Result<(), String> {
    let r = verify_all(d, p).map_err(|e| e.to_string())?;
    if r.is_ok() {
        Ok(())
    } else {
        Err(r.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))
    }
}

/// Exact test for two grid segments crossing in their interiors.
fn crosses(d: &Drawing<i64>, e: &Edge, f: &Edge) -> bool {
    if e.shares_endpoint(f) {
        return false;
    }
    let (p, q) = (d.pos(e.u), d.pos(e.v));
    let (r, s) = (d.pos(f.u), d.pos(f.v));
    let orient = |a: Point<i64>, b: Point<i64>, c: Point<i64>| {
        ((b.x - a.x) as i128 * (c.y - a.y) as i128 - (b.y - a.y) as i128 * (c.x - a.x) as i128).signum()
    };
    let (o1, o2) = (orient(p, q, r), orient(p, q, s));
    let (o3, o4) = (orient(r, s, p), orient(r, s, q));
    o1 * o2 < 0 && o3 * o4 < 0
}

fn horizontal(d: &Drawing<i64>, e: &Edge) -> bool {
    d.pos(e.u).y == d.pos(e.v).y
}

fn vertical(d: &Drawing<i64>, e: &Edge) -> bool {
    d.pos(e.u).x == d.pos(e.v).x
}

/// Shape rules shared by every grid output. `exempt` is a matching edge
/// that may be slanted as long as nothing crosses it.
fn structural(d: &Drawing<i64>, inst: &SimInstance, exempt: Option<Edge>, path_even_vertical: bool) -> Result<(), String> {
    for a in &d.edges_a {
        for b in &d.edges_b {
            if crosses(d, a, b) && !((horizontal(d, a) && vertical(d, b)) || (vertical(d, a) && horizontal(d, b))) {
                return Err(format!("{a} x {b} is not horizontal x vertical"));
            }
        }
    }
    for m in &inst.edges_b {
        if Some(*m) == exempt {
            let all = d.edges_a.iter().chain(&d.edges_b);
            if let Some(e) = all.clone().find(|e| crosses(d, m, e)) {
                return Err(format!("slanted matching edge {m} is crossed by {e}"));
            }
        } else if !horizontal(d, m) {
            return Err(format!("matching edge {m} is not horizontal"));
        }
    }
    if path_even_vertical {
        let odd: BTreeSet<Edge> = build_p_odd(inst.n).into_iter().collect();
        if let Some(e) = inst.edges_a.iter().find(|e| !odd.contains(e) && !vertical(d, e)) {
            return Err(format!("path edge {e} is not vertical"));
        }
    }
    let r = verify_all(d, &Profile::default()).map_err(|e| e.to_string())?;
    if r.summary.counts.contains_key("structural") {
        return Err("verifier reports a structural violation".into());
    }
    Ok(())
}

/// Tally for the structural criterion, filled while 1 to 3 run.
#[derive(Default)]
struct ShapeTally {
    checked: usize,
    failures: Vec<String>,
}

impl ShapeTally {
    fn record(&mut self, what: &str, r: Result<(), String>) {
        self.checked += 1;
        if let Err(e) = r {
            self.failures.push(format!("{what}: {e}"));
        }
    }
}

fn path_bound(shapes: &mut ShapeTally) -> Outcome {
    for i in 0..500u64 {
        let n = 4 + 2 * (i as usize % 99);
        let inst = gen_path_matching(n, 1.0, 10_000 + i).map_err(|e| e.to_string())?;
        let d = layout_path_matching(&inst).map_err(|e| format!("n={n} seed={i}: {e}"))?;
        violations(&d, &Profile::default()).map_err(|e| format!("n={n} seed={i}: {e}"))?;
        let (w, h) = d.grid_extent();
        ensure!(w <= n as i64 / 2 + 1 && h <= n as i64 / 2, "n={n} seed={i}: {w}x{h} exceeds bound");
        shapes.record(&format!("path n={n} seed={i}"), structural(&d, &inst, None, true));
    }
    Ok("500 perfect path instances verified within the grid bound".into())
}

/// First covered vertex whose cyclic predecessor is uncovered, else 1.
fn rotation_start(inst: &SimInstance) -> VertexId {
    let mates = inst.mates();
    let n = inst.n;
    let s = (1..=n).find(|&c| mates[c - 1].is_some() && mates[(c + n - 2) % n].is_none()).unwrap_or(1);
    VertexId(s as u32)
}

fn cycle_bound(shapes: &mut ShapeTally) -> Outcome {
    let (mut max_d, mut max_r) = (0, 0);
    for i in 0..500u64 {
        let n = 4 + 2 * (i as usize % 99);
        let inst = gen_cycle_matching(n, 1.0, 20_000 + i).map_err(|e| e.to_string())?;
        let (d, shift) = layout_cycle_matching_with_shift(&inst).map_err(|e| format!("n={n} seed={i}: {e}"))?;
        violations(&d, &Profile::default()).map_err(|e| format!("n={n} seed={i}: {e}"))?;
        let (w, h) = d.grid_extent();
        ensure!(w <= n as i64 + 2 && h <= n as i64 + 2, "n={n} seed={i}: {w}x{h} exceeds bound");
        ensure!(shift.d <= n as i64 / 2 + 2 && shift.r <= n as i64 / 2 + 1, "n={n} seed={i}: shift {shift:?}");
        max_d = max_d.max(shift.d - n as i64 / 2);
        max_r = max_r.max(shift.r - n as i64 / 2);
        let v1 = rotation_start(&inst);
        let exempt = inst.edges_b.iter().find(|e| e.contains(v1)).copied();
        shapes.record(&format!("cycle n={n} seed={i}"), structural(&d, &inst, exempt, false));
    }
    Ok(format!("500 perfect cycle instances verified; worst shift d-n/2={max_d}, r-n/2={max_r}"))
}

fn partial_instances(shapes: &mut ShapeTally) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut paths, mut cycles) = (0, 0);
    for i in 0..500u64 {
        let seed = 30_000 + i;
        let (n, cov) = if i % 2 == 0 {
            (rng.random_range(2..100usize) * 2 + 1, [1.0, 0.6, 0.3][rng.random_range(0..3usize)])
        } else {
            (rng.random_range(3..200usize), [0.3, 0.6][rng.random_range(0..2usize)])
        };
        let cycle = i % 4 >= 2;
        let inst = if cycle { gen_cycle_matching(n, cov, seed) } else { gen_path_matching(n, cov, seed) }
            .map_err(|e| format!("n={n} cov={cov} seed={seed}: {e}"))?;
        let what = format!("{} n={n} cov={cov} seed={seed}", if cycle { "cycle" } else { "path" });
        let d = if cycle {
            cycles += 1;
            layout_cycle_matching_with_shift(&inst).map(|x| x.0)
        } else {
            paths += 1;
            layout_path_matching(&inst)
        }
        .map_err(|e| format!("{what}: {e}"))?;
        violations(&d, &Profile::default()).map_err(|e| format!("{what}: {e}"))?;
        let exempt = if cycle { inst.edges_b.iter().find(|e| e.contains(rotation_start(&inst))).copied() } else { None };
        shapes.record(&what, structural(&d, &inst, exempt, false));
    }
    Ok(format!("{paths} path and {cycles} cycle instances with odd n or partial coverage verified"))
}

fn shape_rules(shapes: &ShapeTally) -> Outcome {
    ensure!(shapes.failures.is_empty(), "{} of {}: {}", shapes.failures.len(), shapes.checked, shapes.failures[0]);
    Ok(format!("{} grid outputs obey the horizontal/vertical rules", shapes.checked))
}

/// Components of the union of `P_odd` and `M`, found by flood fill.
fn brute_force_cycles(n: usize, m: &[Edge]) -> Result<BTreeSet<BTreeSet<Edge>>, String> {
    let union: Vec<Edge> = build_p_odd(n).into_iter().chain(m.iter().copied()).collect();
    let mut adj: BTreeMap<u32, Vec<(u32, bool)>> = BTreeMap::new();
    for (k, e) in union.iter().enumerate() {
        let is_m = k >= n / 2;
        adj.entry(e.u.get()).or_default().push((e.v.get(), is_m));
        adj.entry(e.v.get()).or_default().push((e.u.get(), is_m));
    }
    for v in 1..=n as u32 {
        let nb = adj.get(&v).map(Vec::as_slice).unwrap_or(&[]);
        ensure!(nb.len() == 2, "vertex {v} has degree {}", nb.len());
        ensure!(nb[0].1 != nb[1].1, "vertex {v} is not alternating");
    }
    let mut seen = BTreeSet::new();
    let mut out = BTreeSet::new();
    for s in 1..=n as u32 {
        if seen.contains(&s) {
            continue;
        }
        let mut comp = BTreeSet::new();
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &(w, _) in &adj[&v] {
                comp.insert(Edge::new(v, w));
                stack.push(w);
            }
        }
        out.insert(comp);
    }
    Ok(out)
}

fn cycle_collection() -> Outcome {
    let mut largest_k = 0.0f64;
    for i in 0..1000u64 {
        let n = 4 + 2 * (i as usize % 150);
        let inst = gen_path_matching(n, 1.0, 50_000 + i).map_err(|e| e.to_string())?;
        let cc = decompose_alternating(&build_p_odd(n), &inst.edges_b).map_err(|e| e.to_string())?;
        let got: BTreeSet<BTreeSet<Edge>> =
            cc.cycles.iter().map(|c| c.labeled_edges().map(|(e, _)| e).collect()).collect();
        let expected = brute_force_cycles(n, &inst.edges_b)?;
        ensure!(got == expected, "n={n} seed={i}: decomposition differs from component search");
        ensure!(got.len() == cc.len(), "n={n} seed={i}: repeated cycle");
        ensure!(4 * cc.len() <= n, "n={n} seed={i}: k={} > n/4", cc.len());
        ensure!(cc.cycles.iter().all(|c| c.len() % 2 == 0), "n={n} seed={i}: odd cycle");
        largest_k = largest_k.max(cc.len() as f64 / n as f64);
    }
    Ok(format!("1000 decompositions match the component search; max k/n = {largest_k:.3}"))
}

/// Signed distance from `p` to the boundary of a counter-clockwise polygon,
/// positive inside.
fn inner_margin(p: Point<f64>, poly: &[Point<f64>]) -> f64 {
    let mut m = f64::INFINITY;
    for i in 0..poly.len() {
        let (a, b) = (poly[i], poly[(i + 1) % poly.len()]);
        let d = b - a;
        let w = p - a;
        m = m.min((d.x * w.y - d.y * w.x) / d.norm());
    }
    m
}

fn dual_drawings() -> Outcome {
    let profile = Profile::default().with_tolerance(Tolerance::default().with_incidence(1e-13).with_angle(1e-6));
    let tol = Tolerance::default();
    let mut worst_margin = f64::INFINITY;
    let mut worst_angle = 0.0f64;
    for i in 0..200u64 {
        let n = 3 + (i as usize % 28);
        let density = [0.0, 0.5, 1.0][i as usize % 3];
        let what = format!("n={n} density={density} seed={i}");
        let emb = gen_outerplanar(n, density, 60_000 + i).map_err(|e| e.to_string())?;
        let d = layout_dual_outerplanar::<f64>(&emb).map_err(|e| format!("{what}: {e}"))?;
        let r = verify_all(&d, &profile).map_err(|e| e.to_string())?;
        ensure!(r.is_ok(), "{what}: {}", r.violations[0]);
        let edges = emb.all_edges();
        for (x, e) in edges.iter().enumerate() {
            for f in &edges[x + 1..] {
                ensure!(geom::proper_crossing(&d.primal_segment(e), &d.primal_segment(f), &tol).is_none(), "{what}: {e} x {f}");
            }
        }
        for (k, de) in d.dual.adjacency.iter().enumerate() {
            let ds = d.dual_segment(k);
            for e in &edges {
                let hit = geom::proper_crossing(&ds, &d.primal_segment(e), &tol).is_some();
                ensure!(hit == (*e == de.shared), "{what}: dual edge {k} against {e}");
            }
            for j in k + 1..d.dual.adjacency.len() {
                ensure!(geom::proper_crossing(&ds, &d.dual_segment(j), &tol).is_none(), "{what}: dual edges {k} x {j}");
            }
            let off = (geom::crossing_angle(&ds, &d.primal_segment(&de.shared)) - std::f64::consts::FRAC_PI_2).abs();
            ensure!(off <= 1e-6, "{what}: dual edge {k} is {off} rad off a right angle");
            worst_angle = worst_angle.max(off);
        }
        for f in 0..d.dual.faces.len() {
            let m = inner_margin(d.face_points[f], &d.face_polygon(f));
            ensure!(m > 1e-12, "{what}: face {f} point margin {m:e}");
            worst_margin = worst_margin.min(m);
        }
    }
    Ok(format!("200 embeddings verified; worst face-point margin {worst_margin:.3e}, worst angle error {worst_angle:.1e} rad"))
}

fn rac_size_fixtures() -> Outcome {
    for (n, m) in [(7usize, 18usize), (8, 22)] {
        ensure!(check_rac_size(n, m).map_err(|e| e.to_string())?, "({n},{m}) rejected");
        ensure!(m == 4 * n - 10, "({n},{m}) is not tight");
        ensure!(!check_rac_size(n, m + 1).map_err(|e| e.to_string())?, "({n},{}) accepted", m + 1);
    }
    let f = fixture_augmented_triangle_antiprism();
    let ring = |vs: &[u32]| -> BTreeSet<Edge> { (0..vs.len()).map(|i| Edge::new(vs[i], vs[(i + 1) % vs.len()])).collect() };
    let mut wheel: BTreeSet<Edge> = (2..=7).map(|v| Edge::new(ANTIPRISM_HUB, v)).collect();
    wheel.extend(ring(&ANTIPRISM_RIM));
    ensure!(common::edge_set(&f.edges_a) == wheel, "first graph is not the wheel");
    ensure!(common::edge_set(&f.edges_b) == ring(&ANTIPRISM_GRAY_CYCLE), "second graph is not the six-cycle");
    let antipodal = [Edge::new(2, 5), Edge::new(3, 6), Edge::new(4, 7)];
    let union: BTreeSet<Edge> = (1..=7u32)
        .flat_map(|a| (a + 1..=7).map(move |b| Edge::new(a, b)))
        .filter(|e| !antipodal.contains(e))
        .collect();
    let got: BTreeSet<Edge> = f.edges_a.iter().chain(&f.edges_b).copied().collect();
    ensure!(got.len() == f.edge_count(), "the two graphs share an edge");
    ensure!(got == union, "union is not the augmented antiprism");
    Ok("(7,18) and (8,22) are tight; the fixture splits into wheel and six-cycle".into())
}

fn linear_counters() -> Outcome {
    let sizes = [100usize, 200, 400, 800];
    let mut means = Vec::new();
    for &n in &sizes {
        let mut sum = 0u64;
        for s in 0..20u64 {
            let inst = gen_path_matching(n, 1.0, 70_000 + s).map_err(|e| e.to_string())?;
            let (_, stats) = layout_path_matching_instrumented(&inst).map_err(|e| e.to_string())?;
            sum += stats.total();
        }
        means.push(sum as f64 / 20.0);
    }
    let c = sizes.iter().zip(&means).map(|(&n, &t)| n as f64 * t).sum::<f64>() / sizes.iter().map(|&n| (n * n) as f64).sum::<f64>();
    // least-squares slope of log(ops) on log(n); 1.0 is linear
    let xs: Vec<f64> = sizes.iter().map(|&n| (n as f64).ln()).collect();
    let ys: Vec<f64> = means.iter().map(|t| t.ln()).collect();
    let (mx, my) = (xs.iter().sum::<f64>() / 4.0, ys.iter().sum::<f64>() / 4.0);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>() / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let per_n: Vec<String> = sizes.iter().zip(&means).map(|(n, t)| format!("{:.2}", t / *n as f64)).collect();
    let drift = (means[3] / 800.0) / (means[0] / 100.0) - 1.0;
    ensure!(slope <= 1.10 && drift <= 0.10, "slope {slope:.3}, ops/n {per_n:?}, drift {drift:.3}");
    Ok(format!("c = {c:.2} ops per vertex, log-log slope {slope:.3}, ops/n {}", per_n.join(" ")))
}

const STEPS: [(i64, i64); 8] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

fn verifier_independence() -> Outcome {
    let profile = Profile { structural: false, ..Profile::default() };
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut flagged = 0;
    for i in 0..1000u64 {
        let n = rng.random_range(4..40usize);
        let cov = [1.0, 0.6, 0.3][i as usize % 3];
        let d = if i % 2 == 0 {
            layout_path_matching(&gen_path_matching(n, cov, 80_000 + i).map_err(|e| e.to_string())?)
        } else {
            match gen_cycle_matching(n, cov, 80_000 + i) {
                Ok(inst) => layout_cycle_matching_with_shift(&inst).map(|x| x.0),
                Err(_) => continue,
            }
        };
        let mut d = d.map_err(|e| e.to_string())?;
        let v = rng.random_range(0..d.n());
        let to = if i % 5 == 0 {
            // onto another vertex
            d.positions[rng.random_range(0..d.n())]
        } else {
            let (dx, dy) = STEPS[rng.random_range(0..8usize)];
            d.positions[v] + Point::new(dx, dy)
        };
        d.positions[v] = to;
        let expected = common::canonical(common::oracle(&d));
        let got = common::findings(&verify_all(&d, &profile).map_err(|e| e.to_string())?);
        ensure!(got == expected, "perturbation {i}: verifier {got:?} vs oracle {expected:?}");
        if !expected.is_empty() {
            flagged += 1;
        }
    }
    Ok(format!("1000 perturbations agree with the oracle; {flagged} of them introduce violations"))
}

#[test]
fn acceptance() {
    let mut shapes = ShapeTally::default();
    let mut failed = Vec::new();
    let mut report = |id: usize, name: &str, start: Instant, r: Outcome| {
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(msg) => println!("PASS {id} {name} ({secs:.2}s): {msg}"),
            Err(msg) => {
                println!("FAIL {id} {name} ({secs:.2}s): {msg}");
                failed.push(id);
            }
        }
    };
    let t = Instant::now();
    report(1, "path grid bound", t, path_bound(&mut shapes));
    let t = Instant::now();
    report(2, "cycle grid bound", t, cycle_bound(&mut shapes));
    let t = Instant::now();
    report(3, "partial and odd instances", t, partial_instances(&mut shapes));
    report(4, "structural shape rules", Instant::now(), shape_rules(&shapes));
    let t = Instant::now();
    report(5, "cycle collection oracle", t, cycle_collection());
    let t = Instant::now();
    report(6, "dual drawings", t, dual_drawings());
    let t = Instant::now();
    report(7, "edge-count fixtures", t, rac_size_fixtures());
    let t = Instant::now();
    report(8, "linear operation counts", t, linear_counters());
    let t = Instant::now();
    report(9, "verifier independence", t, verifier_independence());
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
