use super::{Edge, InstanceKind, SimInstance};

/// Hub of the augmented triangle antiprism. Triangles are `{2,3,4}` and
/// `{5,6,7}`; the antipodal pairs are 2–5, 3–6 and 4–7.
pub const ANTIPRISM_HUB: u32 = 1;

/// Hamiltonian cycle of the octahedron used as the wheel rim.
pub const ANTIPRISM_RIM: [u32; 6] = [2, 3, 5, 7, 6, 4];

/// The octahedron edges not on the rim; they form another Hamiltonian cycle.
pub const ANTIPRISM_GRAY_CYCLE: [u32; 6] = [2, 6, 5, 4, 3, 7];

fn ring(vs: &[u32]) -> Vec<Edge> {
    (0..vs.len()).map(|i| Edge::new(vs[i], vs[(i + 1) % vs.len()])).collect()
}

/// The octahedron plus a universal vertex, split into a wheel (`edges_a`) and
/// a 6-cycle (`edges_b`).
pub fn fixture_augmented_triangle_antiprism() -> SimInstance {
    let mut edges_a: Vec<Edge> = ANTIPRISM_RIM.iter().map(|&v| Edge::new(ANTIPRISM_HUB, v)).collect();
    edges_a.extend(ring(&ANTIPRISM_RIM));
    edges_a.sort();
    let mut edges_b = ring(&ANTIPRISM_GRAY_CYCLE);
    edges_b.sort();
    SimInstance { n: 7, edges_a, edges_b, kind: InstanceKind::General }
}
