//! Explicit drawings of `G_n`, `M_n` and `H_n` with rational coordinates.
//!
//! Cycle index `i` sits on the ray through a lattice point `p_i` close to a
//! circle. In the canonical `G_n` drawing `x_i = 2 p_i` and `y_i = p_i`, so
//! each section `L^i` is a convex trapezoid whose two diagonals
//! `x_i y_{i+1}` and `y_i x_{i+1}` cross once and nothing else crosses.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::drawing::Drawing;
use crate::error::{DrawingError, GraphError};
use crate::geometry::{int, lattice_circle_point, rat, segment_contact, Contact, Point, Rational};
use crate::graph::{family_gn, family_hn, family_mn, GnEdge, GnLabels, GnVertex, Graph, Side};

const RING_RADIUS: i64 = 10_000;

/// Lattice points near radius 10⁴ at angles `2π(i-1)/n + π/(2n)`, `i = 1..=n`.
pub fn ring_points(n: usize) -> Vec<Point> {
    (0..n)
        .map(|k| {
            let mut theta = 2.0 * PI * k as f64 / n as f64 + PI / (2.0 * n as f64);
            if theta > PI {
                theta -= 2.0 * PI;
            }
            lattice_circle_point(theta, RING_RADIUS)
        })
        .collect()
}

fn require_n(n: usize, min: usize) -> Result<(), GraphError> {
    if n < min {
        return Err(GraphError::InvalidParameter(format!(
            "need n >= {min}, got {n}"
        )));
    }
    Ok(())
}

/// Positions for a `G_n`-labeled graph from per-index radii.
fn gn_positions(g: &Graph, n: usize, radius: impl Fn(Side, usize) -> Rational) -> Vec<Point> {
    let ring = ring_points(n);
    g.labels()
        .iter()
        .map(|l| {
            let v = GnVertex::parse(l).expect("G_n label");
            ring[v.index - 1].scaled(&radius(v.side, v.index))
        })
        .collect()
}

/// Trapezoid layout with the vertex pairs at the listed indices exchanged.
fn trapezoid_drawing(g: Graph, n: usize, swapped: &[usize]) -> Result<Drawing, DrawingError> {
    let pos = gn_positions(&g, n, |side, i| {
        let outer = (side == Side::X) != swapped.contains(&i);
        if outer {
            int(2)
        } else {
            int(1)
        }
    });
    Drawing::straight_line(g, pos)
}

/// The `n`-crossing drawing of `G_n` (`n >= 4`); for `n = 3` the planar
/// octahedron drawing.
pub fn canonical_drawing_gn(n: usize) -> Result<Drawing, DrawingError> {
    require_n(n, 3)?;
    let g = family_gn(n)?;
    if n == 3 {
        let pos = gn_positions(&g, n, |side, _| match side {
            Side::X => int(2),
            Side::Y => rat(-1, 2),
        });
        return Drawing::straight_line(g, pos);
    }
    trapezoid_drawing(g, n, &[])
}

/// The canonical drawing with `x_j` and `y_j` exchanged for every `j` in
/// `swapped`; still exactly `n` crossings.
pub fn exchanged_drawing_gn(n: usize, swapped: &[usize]) -> Result<Drawing, DrawingError> {
    require_n(n, 4)?;
    if let Some(&j) = swapped.iter().find(|&&j| j < 1 || j > n) {
        return Err(GraphError::InvalidParameter(format!("index {j} outside 1..={n}")).into());
    }
    trapezoid_drawing(family_gn(n)?, n, swapped)
}

/// A drawing of `G_n - e` with at most `n - 1` crossings.
///
/// A diagonal of `L^i` is erased from the canonical drawing, removing the
/// crossing of section `i`. For a cycle edge of `L^i`, `x_{i+1}` and
/// `y_{i+1}` are exchanged first, which makes the crossing pair of section
/// `i` the two cycle edges, and then `e` is erased.
pub fn deletion_drawing_gn(n: usize, e: GnEdge) -> Result<Drawing, DrawingError> {
    require_n(n, 4)?;
    if e.n != n {
        let (a, b) = e.labels();
        return Err(GraphError::NotAnEdge(a, b).into());
    }
    let full = if e.kind.is_cycle_edge() {
        let j = crate::graph::wrap_index(e.section as isize + 1, n);
        exchanged_drawing_gn(n, &[j])?
    } else {
        canonical_drawing_gn(n)?
    };
    let labels = GnLabels::from_graph(full.graph())?;
    let id = labels.edge_id(full.graph(), e).ok_or_else(|| {
        let (a, b) = e.labels();
        GraphError::NotAnEdge(a, b)
    })?;
    Ok(full.without_edge(id))
}

/// The canonical trapezoid layout plus radial matching edges `x_i y_i`.
pub fn canonical_drawing_mn(n: usize) -> Result<Drawing, DrawingError> {
    require_n(n, 3)?;
    trapezoid_drawing(family_mn(n)?, n, &[])
}

fn product_label(l: &str) -> Option<(GnVertex, usize)> {
    let inner = l.strip_prefix('(')?.strip_suffix(')')?;
    let (v, c) = inner.split_once(',')?;
    Some((GnVertex::parse(v)?, c.parse().ok()?))
}

fn line_crossing(a: &Point, b: &Point, c: &Point, d: &Point) -> Point {
    match segment_contact(a, b, c, d) {
        Contact::Proper(p) => p,
        other => panic!("trapezoid diagonals must cross, got {other:?}"),
    }
}

/// Two nested copies of the `G_n` layout joined by the matching.
///
/// Copy 0 has `x` at radius 8 and `y` at radius 4, copy 1 has `y` at
/// radius 2 and `x` at radius 1. The `y` matching edges are radial. The
/// `x` matching edge of index `i` bends twice inside wedge `i`, crossing one
/// diagonal and the `y` chord of each copy. Total: `2n + 4n = 6n`.
pub fn drawing_hn(n: usize) -> Result<Drawing, DrawingError> {
    require_n(n, 4)?;
    let g = family_hn(n)?;
    let ring = ring_points(n);
    let radius = |side: Side, copy: usize| match (side, copy) {
        (Side::X, 0) => int(8),
        (Side::Y, 0) => int(4),
        (Side::Y, _) => int(2),
        (Side::X, _) => int(1),
    };
    let at = |side: Side, copy: usize, i: usize| ring[i - 1].scaled(&radius(side, copy));
    let pos: Vec<Point> = g
        .labels()
        .iter()
        .map(|l| {
            let (v, c) = product_label(l).expect("H_n label");
            at(v.side, c, v.index)
        })
        .collect();

    // Bend points for the x-matching edge of index i.
    let bends = |i: usize| -> [Point; 2] {
        let j = crate::graph::wrap_index(i as isize + 1, n);
        [0, 1].map(|c| {
            let chord_mid = at(Side::Y, c, i).midpoint(&at(Side::Y, c, j));
            let cross = line_crossing(
                &at(Side::X, c, i),
                &at(Side::Y, c, j),
                &at(Side::Y, c, i),
                &at(Side::X, c, j),
            );
            chord_mid.midpoint(&cross)
        })
    };

    let polylines = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (a, ca) = product_label(g.label(u)).expect("H_n label");
            let (b, cb) = product_label(g.label(v)).expect("H_n label");
            if a == b && a.side == Side::X && ca != cb {
                let [p0, p1] = bends(a.index);
                if ca == 0 {
                    vec![pos[u].clone(), p0, p1, pos[v].clone()]
                } else {
                    vec![pos[u].clone(), p1, p0, pos[v].clone()]
                }
            } else {
                vec![pos[u].clone(), pos[v].clone()]
            }
        })
        .collect();
    Drawing::new(g, pos, polylines)
}

/// Moves every vertex by an independent offset in `[-magnitude, magnitude]²`
/// (multiples of `magnitude / 1000`); bend points stay fixed.
pub fn jittered(d: &Drawing, seed: u64, magnitude: &Rational) -> Result<Drawing, DrawingError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let step = magnitude / int(1000);
    let pos = d
        .positions()
        .iter()
        .map(|p| {
            let dx = &step * int(rng.gen_range(-1000..=1000));
            let dy = &step * int(rng.gen_range(-1000..=1000));
            p.translated(&dx, &dy)
        })
        .collect();
    d.with_positions(pos)
}
