#![allow(dead_code)]

//! Test-only oracles, independent of the library's algorithms.

/// Whether the graph on `n <= 7` vertices (adjacency matrix) contains a
/// subdivision of K₅ or K₃,₃, found by enumerating branch vertices and
/// internally disjoint paths through the few remaining vertices.
pub fn has_kuratowski_subdivision(n: usize, adj: &[Vec<bool>]) -> bool {
    assert!(n <= 8);
    let all: Vec<usize> = (0..n).collect();
    for branch in subsets(&all, 5) {
        let rest: Vec<usize> = all
            .iter()
            .copied()
            .filter(|v| !branch.contains(v))
            .collect();
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
            .map(|(i, j)| (branch[i], branch[j]))
            .collect();
        if route_all(&pairs, &rest, &mut vec![false; n], adj) {
            return true;
        }
    }
    for six in subsets(&all, 6) {
        let rest: Vec<usize> = all.iter().copied().filter(|v| !six.contains(v)).collect();
        // bipartitions with six[0] on the left
        for left_rest in subsets(&six[1..], 2) {
            let left = [six[0], left_rest[0], left_rest[1]];
            let right: Vec<usize> = six.iter().copied().filter(|v| !left.contains(v)).collect();
            let pairs: Vec<(usize, usize)> = left
                .iter()
                .flat_map(|&a| right.iter().map(move |&b| (a, b)))
                .collect();
            if route_all(&pairs, &rest, &mut vec![false; n], adj) {
                return true;
            }
        }
    }
    false
}

fn route_all(
    pairs: &[(usize, usize)],
    free: &[usize],
    used: &mut Vec<bool>,
    adj: &[Vec<bool>],
) -> bool {
    let Some((&(a, b), tail)) = pairs.split_first() else {
        return true;
    };
    let mut path = vec![a];
    route_one(a, b, &mut path, tail, free, used, adj)
}

fn route_one(
    cur: usize,
    target: usize,
    path: &mut Vec<usize>,
    tail: &[(usize, usize)],
    free: &[usize],
    used: &mut Vec<bool>,
    adj: &[Vec<bool>],
) -> bool {
    if adj[cur][target] && route_all(tail, free, used, adj) {
        return true;
    }
    for &w in free {
        if !used[w] && adj[cur][w] {
            used[w] = true;
            path.push(w);
            let ok = route_one(w, target, path, tail, free, used, adj);
            path.pop();
            used[w] = false;
            if ok {
                return true;
            }
        }
    }
    false
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn go(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            cur.push(items[i]);
            go(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// All vertex pairs `(u, v)`, `u < v`, in a fixed order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Proper crossings between segments of distinct edges, in floating point.
/// Only meaningful for drawings whose contacts are well separated.
pub fn float_crossing_count(d: &crosscert::Drawing) -> usize {
    type Seg = (usize, (f64, f64), (f64, f64));
    let segs: Vec<Seg> = d
        .polylines()
        .iter()
        .enumerate()
        .flat_map(|(e, line)| {
            line.windows(2)
                .map(move |w| (e, w[0].to_f64(), w[1].to_f64()))
        })
        .collect();
    let orient = |a: (f64, f64), b: (f64, f64), c: (f64, f64)| {
        let v = (b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0);
        if v.abs() < 1e-12 {
            0
        } else if v > 0.0 {
            1
        } else {
            -1
        }
    };
    let mut count = 0;
    for (i, &(e, a, b)) in segs.iter().enumerate() {
        for &(f, c, dd) in &segs[i + 1..] {
            if e == f {
                continue;
            }
            let (o1, o2, o3, o4) = (
                orient(a, b, c),
                orient(a, b, dd),
                orient(c, dd, a),
                orient(c, dd, b),
            );
            if o1 * o2 < 0 && o3 * o4 < 0 {
                count += 1;
            }
        }
    }
    count
}

/// A straight-line drawing of `G_5` whose section `L^1` is a diamond with
/// every other vertex inside it, so `L^1` is uncrossed.
pub fn uncrossed_section_g5() -> crosscert::Drawing {
    use crosscert::geometry::{rat, Point};
    let g = crosscert::graph::family_gn(5).unwrap();
    let at = |l: &str| -> Point {
        let (x, y) = match l {
            "x1" => (rat(0, 1), rat(10, 1)),
            "x2" => (rat(10, 1), rat(0, 1)),
            "y1" => (rat(0, 1), rat(-10, 1)),
            "y2" => (rat(-10, 1), rat(0, 1)),
            "x3" => (rat(0, 1), rat(3, 1)),
            "y3" => (rat(0, 1), rat(-3, 1)),
            "x4" => (rat(-1, 1), rat(1, 2)),
            "y4" => (rat(1, 1), rat(-1, 2)),
            "x5" => (rat(-4, 1), rat(0, 1)),
            "y5" => (rat(4, 1), rat(0, 1)),
            other => panic!("unexpected label {other}"),
        };
        Point::new(x, y)
    };
    let pos = g.labels().iter().map(|l| at(l)).collect();
    crosscert::Drawing::straight_line(g, pos).unwrap()
}
