//! Path plus matching on an `(n/2 + 1) × n/2` grid.
//!
//! `x(v_i) = i`; the alternating cycles of `P_odd ∪ M` are drawn as upward
//! snakes with every matching edge horizontal; every even vertex except `v_n`
//! then moves one unit right so the remaining path edges become vertical, and
//! columns are halved. Uncovered vertices are contracted away first and put
//! back on a scaled copy of the drawing.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::drawing::{Drawing, EdgeRole};
use crate::error::{Error, Result};
use crate::geom::{self, Point, Segment};
use crate::model::{self, validate_instance, CycleCollection, Edge, InstanceKind, SimInstance, VertexId};
use crate::scalar::Tolerance;
use crate::verify::{verify_all, Profile};

/// Basic-step counters of one layout run. Every loop iteration of the
/// algorithm bumps exactly one counter.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpStats {
    pub decompose: u64,
    pub layering: u64,
    pub assembly: u64,
}

impl OpStats {
    pub fn total(&self) -> u64 {
        self.decompose + self.layering + self.assembly
    }
}

/// `x(v_i) = i`, by vertex index.
pub fn assign_x(n: usize) -> Vec<i64> {
    (1..=n as i64).collect()
}

/// Column of `v` once every even vertex except `v_n` has moved one unit right.
pub fn shifted_x(x: i64, v: usize, n: usize) -> i64 {
    if v.is_multiple_of(2) && v != n {
        x + 1
    } else {
        x
    }
}

/// Halves the columns. Shifted columns are odd except for `v_n`'s, and this
/// maps `1, 3, 5, …` to `1, 2, 3, …` and `n` to `n/2 + 1`.
pub fn compact_x(x: i64) -> i64 {
    x / 2 + 1
}

/// Horizontal occupancy of each layer, in shifted columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LayerState {
    /// `occupied[l - 1]` holds the closed intervals drawn on layer `y = l`.
    pub occupied: Vec<Vec<(i64, i64)>>,
}

impl LayerState {
    pub fn layers(&self) -> usize {
        self.occupied.len()
    }

    fn open(&mut self) -> i64 {
        self.occupied.push(Vec::new());
        self.occupied.len() as i64
    }

    fn record(&mut self, layer: i64, iv: (i64, i64)) {
        self.occupied[layer as usize - 1].push(iv);
    }

    /// True when intervals on every layer meet at most in shared endpoints.
    pub fn is_interior_disjoint(&self) -> bool {
        self.occupied.iter().all(|ivs| {
            let mut v = ivs.clone();
            v.sort();
            v.windows(2).all(|w| w[0].1 <= w[1].0)
        })
    }
}

fn interval(a: i64, b: i64) -> (i64, i64) {
    (a.min(b), a.max(b))
}

/// Whether `seg` can join the occupied range `region` of the current layer,
/// touching it only at the column `at` of the chain's end vertex.
fn joins(seg: (i64, i64), region: (i64, i64), at: i64) -> bool {
    seg.0 < seg.1 && (seg.1 < region.0 || seg.0 > region.1 || (seg.1 == region.0 && region.0 == at) || (seg.0 == region.1 && region.1 == at))
}

/// Assigns layers to the vertices of every alternating cycle.
///
/// Each cycle opens a fresh layer above all earlier ones with its first
/// matching edge. Every following (path edge, matching edge) pair stays on the
/// current layer when both extend the cycle's horizontal chain there, and
/// otherwise moves up to a fresh layer. The closing path edge is implied.
/// Returns `y` by vertex index.
pub fn draw_cycles(cycles: &CycleCollection, x: &[i64]) -> (Vec<i64>, LayerState) {
    draw_cycles_counted(cycles, x, &mut 0)
}

fn draw_cycles_counted(cycles: &CycleCollection, x: &[i64], ops: &mut u64) -> (Vec<i64>, LayerState) {
    let n = x.len();
    let sx = |v: VertexId| shifted_x(x[v.index()], v.get() as usize, n);
    let mut y = vec![0i64; n];
    let mut layers = LayerState::default();
    for cycle in &cycles.cycles {
        let c = &cycle.vertices;
        let mut layer = layers.open();
        let first = interval(sx(c[0]), sx(c[1]));
        layers.record(layer, first);
        y[c[0].index()] = layer;
        y[c[1].index()] = layer;
        let mut region = first;
        let mut i = 1;
        while i + 2 < c.len() {
            *ops += 1;
            let (a, b, d) = (c[i], c[i + 1], c[i + 2]);
            let s1 = interval(sx(a), sx(b));
            let s2 = interval(sx(b), sx(d));
            let stays = joins(s1, region, sx(a)) && {
                let grown = (region.0.min(s1.0), region.1.max(s1.1));
                joins(s2, grown, sx(b))
            };
            if stays {
                layers.record(layer, s1);
                layers.record(layer, s2);
                region = (region.0.min(s1.0).min(s2.0), region.1.max(s1.1).max(s2.1));
            } else {
                layer = layers.open();
                layers.record(layer, s2);
                region = s2;
            }
            y[b.index()] = layer;
            y[d.index()] = layer;
            i += 2;
        }
    }
    (y, layers)
}

/// Applies the shift and the column halving and assembles the drawing with
/// edge roles.
pub fn add_remaining_and_shift(x: &[i64], y: &[i64], matching: &[Edge]) -> Drawing<i64> {
    add_remaining_counted(x, y, matching, &mut 0)
}

fn add_remaining_counted(x: &[i64], y: &[i64], matching: &[Edge], ops: &mut u64) -> Drawing<i64> {
    let n = x.len();
    let mut positions = Vec::with_capacity(n);
    for i in 0..n {
        *ops += 1;
        positions.push(Point::new(compact_x(shifted_x(x[i], i + 1, n)), y[i]));
    }
    let edges_a = model::path_edges(n);
    let mut roles = BTreeMap::new();
    for e in &edges_a {
        *ops += 1;
        roles.insert(*e, if e.u.get() % 2 == 1 { EdgeRole::PathOdd } else { EdgeRole::PathEven });
    }
    for e in matching {
        *ops += 1;
        roles.insert(*e, EdgeRole::Matching);
    }
    Drawing { positions, edges_a, edges_b: matching.to_vec(), roles }
}

fn check_path_instance(inst: &SimInstance) -> Result<()> {
    if inst.kind != InstanceKind::PathMatching {
        return Err(Error::usage(format!("expected a path-matching instance, got {}", inst.kind.as_str())));
    }
    if inst.n < 2 {
        return Err(Error::usage("a path needs at least two vertices"));
    }
    let v = validate_instance(inst);
    if !v.is_empty() {
        let msg: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        return Err(Error::usage(format!("invalid instance: {}", msg.join("; "))));
    }
    Ok(())
}

fn layout_perfect(n: usize, matching: &[Edge], stats: &mut OpStats) -> Result<Drawing<i64>> {
    let cycles = model::decompose_counted(&model::build_p_odd(n), matching, &mut stats.decompose)?;
    let x = assign_x(n);
    let (y, _) = draw_cycles_counted(&cycles, &x, &mut stats.layering);
    Ok(add_remaining_counted(&x, &y, matching, &mut stats.assembly))
}

/// Lays out a path-matching instance on the integer grid.
///
/// With a perfect matching the drawing fits `(n/2 + 1) × n/2`. Matching edges
/// are horizontal, the even path edges vertical, `v_1` sits in the bottom
/// left corner and `v_n` is the unique rightmost vertex.
pub fn layout_path_matching(inst: &SimInstance) -> Result<Drawing<i64>> {
    layout_path_matching_instrumented(inst).map(|(d, _)| d)
}

/// [`layout_path_matching`] with its step counters.
pub fn layout_path_matching_instrumented(inst: &SimInstance) -> Result<(Drawing<i64>, OpStats)> {
    check_path_instance(inst)?;
    let mut stats = OpStats::default();
    let n = inst.n;
    if inst.edges_b.is_empty() {
        let positions = (1..=n as i64).map(|i| Point::new(i, 1)).collect();
        return Ok((Drawing::new(positions, inst.edges_a.clone(), Vec::new()), stats));
    }
    let mut matching = inst.edges_b.clone();
    matching.sort();
    if 2 * matching.len() == n {
        let d = layout_perfect(n, &matching, &mut stats)?;
        return Ok((d, stats));
    }
    let (reduced, plan) = contract_uncovered(inst)?;
    let mut m2 = reduced.edges_b.clone();
    m2.sort();
    let d = layout_perfect(reduced.n, &m2, &mut stats)?;
    let restored = restore_uncovered(&d, &plan)?;
    Ok((restored, stats))
}

/// Uncovered vertices strung along one edge of the reduced instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    /// Path edge of the reduced instance, in reduced labels.
    pub host: Edge,
    /// Original vertices in path order, from `host.u` towards `host.v`.
    pub vertices: Vec<VertexId>,
}

/// Everything needed to map a drawing of the reduced instance back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestorationPlan {
    pub n: usize,
    /// Original label of reduced vertex `i + 1`. The dummy has no entry.
    pub keep: Vec<VertexId>,
    /// The reduced instance ends with a dummy vertex.
    pub dummy: bool,
    /// Matching edges of the reduced instance with no original counterpart.
    pub virtual_edges: Vec<Edge>,
    pub chains: Vec<Chain>,
    /// Uncovered start of the path, nearest to the reduced path first.
    pub prefix: Vec<VertexId>,
    /// Uncovered end of the path, nearest to the reduced path first.
    pub suffix: Vec<VertexId>,
}

impl RestorationPlan {
    pub fn is_identity(&self) -> bool {
        !self.dummy && self.virtual_edges.is_empty() && self.chains.is_empty() && self.prefix.is_empty() && self.suffix.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum RunKind {
    Prefix,
    Interior { conflict: bool },
    Suffix,
}

/// Reduces a path-matching instance to one where the matching is perfect.
///
/// Interior runs of uncovered vertices are contracted onto a path edge
/// between their covered neighbours, and end runs are detached. When the
/// neighbours of a run are themselves matched to each other, the contracted
/// edge would coincide with a matching edge; the first vertex of such a run
/// is kept and matched to another kept vertex by a virtual edge. An odd
/// number of kept vertices is evened out by keeping one vertex of another run,
/// or by a dummy vertex at the end of the path.
///
/// The instance is not validated beyond the matching being non-empty.
pub fn contract_uncovered(inst: &SimInstance) -> Result<(SimInstance, RestorationPlan)> {
    if inst.kind != InstanceKind::PathMatching {
        return Err(Error::usage("contraction applies to path-matching instances"));
    }
    if inst.edges_b.is_empty() {
        return Err(Error::domain("empty matching; draw the path alone"));
    }
    let n = inst.n;
    let mates = inst.mates();
    let covered: Vec<bool> = mates.iter().map(|m| m.is_some()).collect();
    let in_m = |a: usize, b: usize| mates[a - 1] == Some(VertexId(b as u32));

    let mut runs: Vec<(usize, usize, RunKind)> = Vec::new();
    let mut v = 1;
    while v <= n {
        if covered[v - 1] {
            v += 1;
            continue;
        }
        let start = v;
        while v <= n && !covered[v - 1] {
            v += 1;
        }
        let end = v - 1;
        let kind = if start == 1 {
            RunKind::Prefix
        } else if end == n {
            RunKind::Suffix
        } else {
            RunKind::Interior { conflict: in_m(start - 1, end + 1) }
        };
        runs.push((start, end, kind));
    }

    let mut pinned = vec![false; n + 1];
    let pin_of = |r: &(usize, usize, RunKind)| if r.2 == RunKind::Prefix { r.1 } else { r.0 };
    let mut pins = 0;
    for r in &runs {
        if r.2 == (RunKind::Interior { conflict: true }) {
            pinned[pin_of(r)] = true;
            pins += 1;
        }
    }
    let mut dummy = false;
    if pins % 2 == 1 {
        match runs.iter().find(|r| r.2 != RunKind::Interior { conflict: true }) {
            Some(r) => pinned[pin_of(r)] = true,
            None => dummy = true,
        }
    }

    let keep: Vec<VertexId> = (1..=n).filter(|&v| covered[v - 1] || pinned[v]).map(|v| VertexId(v as u32)).collect();
    let mut new_id = vec![0u32; n + 1];
    for (i, v) in keep.iter().enumerate() {
        new_id[v.get() as usize] = i as u32 + 1;
    }
    let n2 = keep.len() + usize::from(dummy);
    let mut pin_ids: Vec<u32> = (1..=n).filter(|&v| pinned[v]).map(|v| new_id[v]).collect();
    if dummy {
        pin_ids.push(n2 as u32);
    }
    let h = pin_ids.len() / 2;
    let virtual_edges: Vec<Edge> = (0..h).map(|i| Edge::new(pin_ids[i], pin_ids[i + h])).collect();

    let mut chains = Vec::new();
    let mut prefix = Vec::new();
    let mut suffix = Vec::new();
    for &(start, end, kind) in &runs {
        let rest: Vec<VertexId> = (start..=end).filter(|&v| !pinned[v]).map(|v| VertexId(v as u32)).collect();
        if rest.is_empty() {
            continue;
        }
        match kind {
            RunKind::Prefix => prefix = rest.into_iter().rev().collect(),
            RunKind::Suffix => suffix = rest,
            RunKind::Interior { .. } => {
                let before = rest[0].get() as usize - 1;
                let after = rest[rest.len() - 1].get() as usize + 1;
                chains.push(Chain { host: Edge::new(new_id[before], new_id[after]), vertices: rest });
            }
        }
    }

    let mut edges_b: Vec<Edge> =
        inst.edges_b.iter().map(|e| Edge::new(new_id[e.u.get() as usize], new_id[e.v.get() as usize])).collect();
    edges_b.extend(virtual_edges.iter().copied());
    edges_b.sort();
    let reduced = SimInstance { n: n2, edges_a: model::path_edges(n2), edges_b, kind: InstanceKind::PathMatching };
    let plan = RestorationPlan { n, keep, dummy, virtual_edges, chains, prefix, suffix };
    Ok((reduced, plan))
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Places the removed vertices back onto a drawing of the reduced instance.
///
/// The drawing is scaled by `s = 2·(L + 1)`, `L` the longest chain, and each
/// chain takes free lattice points inside its host segment. End runs become
/// diagonal staircases leaving `v_1` down-left and the last vertex up-right.
/// If the result does not verify, `s` doubles.
pub fn restore_uncovered(d: &Drawing<i64>, plan: &RestorationPlan) -> Result<Drawing<i64>> {
    if plan.is_identity() {
        return Ok(d.clone());
    }
    let kept = plan.keep.len();
    let mut base: Vec<Point<i64>> = d.positions[..kept].to_vec();
    // Without the dummy the last kept vertex shares its column with its
    // predecessor. The vertical edge between them was crossed at most by the
    // dummy's virtual edge, so it can lean into the freed column.
    let mut leaning = None;
    if plan.dummy && kept >= 2 {
        let last = kept - 1;
        let others = base[..last].iter().map(|p| p.x).max().unwrap_or(i64::MIN);
        if others >= base[last].x {
            base[last].x += 1;
            leaning = Some(Edge::new(last as u32, kept as u32));
        }
    }
    let virtuals: Vec<Edge> = plan.virtual_edges.clone();
    let reduced_edges: Vec<Edge> = d.edges_a.iter().filter(|e| e.v.index() < kept).copied().collect();

    let mut original_of = |e: &Edge| Edge::from_ids(plan.keep[e.u.index()], plan.keep[e.v.index()]);
    let mut roles = BTreeMap::new();
    let mut hosts = BTreeMap::new();
    for c in &plan.chains {
        hosts.insert(c.host, c);
    }
    for e in &reduced_edges {
        let role = match d.roles.get(e) {
            _ if leaning == Some(*e) => EdgeRole::PathOdd,
            Some(r) => *r,
            None => EdgeRole::PathOdd,
        };
        match hosts.get(e) {
            Some(c) => {
                let mut seq = vec![plan.keep[e.u.index()]];
                seq.extend(c.vertices.iter().copied());
                seq.push(plan.keep[e.v.index()]);
                for w in seq.windows(2) {
                    roles.insert(Edge::from_ids(w[0], w[1]), role);
                }
            }
            None => {
                roles.insert(original_of(e), role);
            }
        }
    }
    let mut attach = |anchor: VertexId, run: &[VertexId]| {
        let mut prev = anchor;
        for &v in run {
            roles.insert(Edge::from_ids(prev, v), EdgeRole::Staircase);
            prev = v;
        }
    };
    if !plan.prefix.is_empty() {
        attach(plan.keep[0], &plan.prefix);
    }
    if !plan.suffix.is_empty() {
        attach(plan.keep[kept - 1], &plan.suffix);
    }
    let matching: Vec<Edge> = d.edges_b.iter().filter(|e| !virtuals.contains(e)).map(&mut original_of).collect();
    for e in &matching {
        roles.insert(*e, EdgeRole::Matching);
    }

    let longest = plan.chains.iter().map(|c| c.vertices.len()).max().unwrap_or(0) as i64;
    let mut s = if longest == 0 { 1 } else { 2 * (longest + 1) };
    let tol = Tolerance::default();
    for _ in 0..12 {
        if let Some(out) = place_with_scale(s, &base, plan, &reduced_edges, d, &virtuals, &tol) {
            let mut drawing = Drawing {
                positions: out,
                edges_a: model::path_edges(plan.n),
                edges_b: {
                    let mut m = matching.clone();
                    m.sort();
                    m
                },
                roles: roles.clone(),
            };
            drawing.normalize_origin();
            if verify_all(&drawing, &Profile::default())?.is_ok() {
                return Ok(drawing);
            }
        }
        s *= 2;
    }
    Err(Error::internal("restoring uncovered vertices did not verify at any scale"))
}

fn place_with_scale(
    s: i64,
    base: &[Point<i64>],
    plan: &RestorationPlan,
    reduced_edges: &[Edge],
    d: &Drawing<i64>,
    virtuals: &[Edge],
    tol: &Tolerance,
) -> Option<Vec<Point<i64>>> {
    let mut pos: Vec<Option<Point<i64>>> = vec![None; plan.n];
    for (i, v) in plan.keep.iter().enumerate() {
        pos[v.index()] = Some(base[i] * s);
    }
    let scaled = |e: &Edge| Segment::raw(base[e.u.index()] * s, base[e.v.index()] * s);
    let kept = plan.keep.len();
    let obstacles: Vec<(Edge, Segment<i64>)> = reduced_edges
        .iter()
        .chain(d.edges_b.iter().filter(|e| !virtuals.contains(e) && e.v.index() < kept))
        .map(|e| (*e, scaled(e)))
        .collect();
    let points: Vec<Point<i64>> = base.iter().map(|p| *p * s).collect();
    for c in &plan.chains {
        let host = scaled(&c.host);
        let delta = host.b - host.a;
        let g = gcd(delta.x, delta.y);
        let step = Point::new(delta.x / g, delta.y / g);
        let mut placed = 0;
        let mut j = 1;
        while placed < c.vertices.len() && j < g {
            let p = host.a + step * j;
            j += 1;
            let blocked = points.contains(&p)
                || obstacles.iter().any(|(e, seg)| *e != c.host && geom::point_on_segment(p, seg, tol));
            if !blocked {
                pos[c.vertices[placed].index()] = Some(p);
                placed += 1;
            }
        }
        if placed < c.vertices.len() {
            return None;
        }
    }
    let first = base[0] * s;
    for (k, v) in plan.prefix.iter().enumerate() {
        let k = k as i64 + 1;
        pos[v.index()] = Some(first - Point::new(k, k));
    }
    let last = base[kept - 1] * s;
    for (k, v) in plan.suffix.iter().enumerate() {
        let k = k as i64 + 1;
        pos[v.index()] = Some(last + Point::new(k, k));
    }
    pos.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_p_odd, decompose_alternating, edges};
    use crate::verify::ViolationCode;

    fn grid_positions(d: &Drawing<i64>) -> Vec<(i64, i64)> {
        d.positions.iter().map(|p| (p.x, p.y)).collect()
    }

    #[test]
    fn assign_x_is_identity() {
        assert_eq!(assign_x(4), vec![1, 2, 3, 4]);
        assert_eq!(assign_x(2), vec![1, 2]);
    }

    #[test]
    fn single_cycle_uses_two_layers() {
        let m = edges(&[(1, 3), (2, 4)]);
        let cycles = decompose_alternating(&build_p_odd(4), &m).unwrap();
        let (y, layers) = draw_cycles(&cycles, &assign_x(4));
        assert_eq!(y, vec![1, 2, 1, 2]);
        assert_eq!(layers.layers(), 2);
        assert!(layers.is_interior_disjoint());
    }

    #[test]
    fn four_vertex_golden_drawing() {
        let d = layout_path_matching(&SimInstance::path_matching(4, &[(1, 3), (2, 4)])).unwrap();
        assert_eq!(grid_positions(&d), vec![(1, 1), (2, 2), (2, 1), (3, 2)]);
        let r = verify_all(&d, &Profile::default().with_grid_bound(3, 2)).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn six_vertex_drawing_fits() {
        let d = layout_path_matching(&SimInstance::path_matching(6, &[(1, 4), (2, 5), (3, 6)])).unwrap();
        let r = verify_all(&d, &Profile::default().with_grid_bound(4, 3)).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn disjoint_cycles_take_separate_layers() {
        let m = edges(&[(1, 3), (2, 4), (5, 7), (6, 8)]);
        let cycles = decompose_alternating(&build_p_odd(8), &m).unwrap();
        let (y, layers) = draw_cycles(&cycles, &assign_x(8));
        assert_eq!(cycles.len(), 2);
        assert_eq!(y[0], 1);
        assert_eq!(y[4], 3);
        assert_eq!(layers.layers(), 4);
    }

    #[test]
    fn literal_lowest_layer_counterexample_verifies() {
        let inst = SimInstance::path_matching(10, &[(1, 8), (2, 9), (3, 5), (4, 6), (7, 10)]);
        let d = layout_path_matching(&inst).unwrap();
        let r = verify_all(&d, &Profile::default().with_grid_bound(6, 5)).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn contraction_detaches_suffix() {
        let (inst, plan) = contract_uncovered(&SimInstance::path_matching(5, &[(1, 3), (2, 4)])).unwrap();
        assert_eq!(inst, SimInstance::path_matching(4, &[(1, 3), (2, 4)]));
        assert_eq!(plan.suffix, vec![VertexId(5)]);
        assert!(plan.chains.is_empty() && plan.prefix.is_empty());
    }

    #[test]
    fn contraction_keeps_conflicting_runs() {
        let (inst, plan) = contract_uncovered(&SimInstance::path_matching(6, &[(1, 3), (4, 6)])).unwrap();
        assert_eq!(inst, SimInstance::path_matching(6, &[(1, 3), (2, 5), (4, 6)]));
        assert_eq!(plan.virtual_edges, edges(&[(2, 5)]));
        assert!(plan.chains.is_empty());
        let d = layout_path_matching(&SimInstance::path_matching(6, &[(1, 3), (4, 6)])).unwrap();
        assert!(verify_all(&d, &Profile::default()).unwrap().is_ok());
    }

    #[test]
    fn contraction_records_chains() {
        let inst = SimInstance::path_matching(9, &[(1, 5), (6, 9)]);
        let (reduced, plan) = contract_uncovered(&inst).unwrap();
        assert!(validate_instance(&reduced).is_empty());
        assert_eq!(plan.chains.len(), 2);
        assert_eq!(plan.chains[0].vertices, vec![VertexId(3), VertexId(4)]);
        let d = layout_path_matching(&inst).unwrap();
        let r = verify_all(&d, &Profile::default()).unwrap();
        assert!(r.is_ok(), "{:?}", r.violations);
    }

    #[test]
    fn perfect_matching_is_identity_contraction() {
        let inst = SimInstance::path_matching(4, &[(1, 3), (2, 4)]);
        let (reduced, plan) = contract_uncovered(&inst).unwrap();
        assert_eq!(reduced, inst);
        assert!(plan.is_identity());
    }

    #[test]
    fn single_conflict_run_uses_dummy() {
        let inst = SimInstance::path_matching(5, &[(1, 3), (4, 5)]);
        let (reduced, plan) = contract_uncovered(&inst).unwrap();
        assert!(plan.dummy);
        assert_eq!(reduced.n, 6);
        assert_eq!(plan.virtual_edges, edges(&[(2, 6)]));
    }

    #[test]
    fn empty_matching_draws_a_line() {
        let d = layout_path_matching(&SimInstance::path_matching(3, &[])).unwrap();
        assert_eq!(grid_positions(&d), vec![(1, 1), (2, 1), (3, 1)]);
        assert!(matches!(contract_uncovered(&SimInstance::path_matching(3, &[])), Err(Error::Domain(_))));
    }

    #[test]
    fn invalid_instance_is_usage_error() {
        let r = layout_path_matching(&SimInstance::path_matching(4, &[(1, 2)]));
        assert!(matches!(r, Err(Error::Usage(_))));
        let r = layout_path_matching(&SimInstance::cycle_matching(4, &[(1, 3)]));
        assert!(matches!(r, Err(Error::Usage(_))));
    }

    #[test]
    fn suffix_staircase_is_right_of_the_box() {
        let inst = SimInstance::path_matching(7, &[(1, 3), (2, 4)]);
        let d = layout_path_matching(&inst).unwrap();
        assert!(verify_all(&d, &Profile::default()).unwrap().is_ok());
        let xs: Vec<i64> = d.positions.iter().map(|p| p.x).collect();
        assert!(xs[4] > xs[..4].iter().copied().max().unwrap());
        assert!(xs[4] < xs[5] && xs[5] < xs[6]);
        assert_eq!(verify_all(&d, &Profile::default()).unwrap().count(ViolationCode::Structural), 0);
    }
}
