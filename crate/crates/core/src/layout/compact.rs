//! Optional post-pass that merges neighbouring grid columns and rows.
//!
//! Merging column `c` into `c - 1` moves every vertex with `x >= c` one unit
//! left. A merge is kept only if the result still passes the verifier under
//! the given profile, so the pass never degrades a valid drawing.

use crate::drawing::Drawing;
use crate::error::Result;
use crate::verify::{verify_all, Profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Axis {
    X,
    Y,
}

fn coord(p: &crate::geom::Point<i64>, axis: Axis) -> i64 {
    match axis {
        Axis::X => p.x,
        Axis::Y => p.y,
    }
}

fn merged(d: &Drawing<i64>, axis: Axis, at: i64) -> Drawing<i64> {
    let mut out = d.clone();
    for p in &mut out.positions {
        match axis {
            Axis::X if p.x >= at => p.x -= 1,
            Axis::Y if p.y >= at => p.y -= 1,
            _ => {}
        }
    }
    out
}

fn sweep(d: &mut Drawing<i64>, axis: Axis, profile: &Profile) -> Result<bool> {
    let mut changed = false;
    let Some((lo, hi)) = d.bounding_box() else { return Ok(false) };
    let (lo, mut hi) = (coord(&lo, axis), coord(&hi, axis));
    let mut at = lo + 1;
    while at <= hi {
        let candidate = merged(d, axis, at);
        if verify_all(&candidate, profile)?.is_ok() {
            *d = candidate;
            hi -= 1;
            changed = true;
        } else {
            at += 1;
        }
    }
    Ok(changed)
}

/// Greedily merges columns, then rows, until no merge verifies. The input
/// must already pass `profile`.
pub fn compact_grid(d: &Drawing<i64>, profile: &Profile) -> Result<Drawing<i64>> {
    let mut out = d.clone();
    loop {
        let cols = sweep(&mut out, Axis::X, profile)?;
        let rows = sweep(&mut out, Axis::Y, profile)?;
        if !cols && !rows {
            return Ok(out);
        }
    }
}
