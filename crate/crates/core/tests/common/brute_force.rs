//! Exhaustive enumeration of all triangulations of a small configuration.
//!
//! Candidates are all full-dimensional simplices on the points. Two
//! candidates are compatible when they intersect properly, which is decided
//! by an LP looking for a common point with positive weight on a vertex
//! outside the shared face. A triangulation is a pairwise compatible family
//! whose volumes add up to the volume of the convex hull.

use toric_weights::exact::{feasible_strict, int, LinearSystem, Rational};
use toric_weights::polytope::PointConfiguration;
use toric_weights::triangulation::TriangulationKey;

fn det(m: &[Vec<i128>]) -> i128 {
    if m.is_empty() {
        return 1;
    }
    (0..m.len())
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * m[0][j] * det(&minor)
        })
        .sum()
}

/// `n!` times the Euclidean volume.
fn volume(config: &PointConfiguration, s: &[usize]) -> i128 {
    let base = config.point(s[0]);
    let rows: Vec<Vec<i128>> = s[1..]
        .iter()
        .map(|&i| config.point(i).iter().zip(base).map(|(a, b)| (a - b) as i128).collect())
        .collect();
    det(&rows).abs()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn proper(config: &PointConfiguration, a: &[usize], b: &[usize]) -> bool {
    let d = config.dim();
    let nv = a.len() + b.len();
    let mut sys = LinearSystem::new(nv);
    for v in 0..nv {
        sys.set_nonnegative(v);
    }
    let row = |pick: &dyn Fn(usize) -> Rational| (0..nv).map(pick).collect::<Vec<_>>();
    sys.equal(row(&|v| if v < a.len() { int(1) } else { int(0) }), int(1))
        .unwrap();
    sys.equal(row(&|v| if v >= a.len() { int(1) } else { int(0) }), int(1))
        .unwrap();
    for c in 0..d {
        sys.equal(
            row(&|v| {
                if v < a.len() {
                    int(config.point(a[v])[c])
                } else {
                    -int(config.point(b[v - a.len()])[c])
                }
            }),
            int(0),
        )
        .unwrap();
    }
    sys.gt(
        row(&|v| {
            if v < a.len() && !b.contains(&a[v]) {
                int(1)
            } else {
                int(0)
            }
        }),
        int(0),
    )
    .unwrap();
    !feasible_strict(&sys).is_feasible()
}

/// Every triangulation, as sorted lists of sorted simplices, sorted.
/// `total` is the normalized volume of the convex hull.
pub fn all_triangulations(config: &PointConfiguration, total: i128) -> Vec<TriangulationKey> {
    let n = config.dim();
    let cands: Vec<(Vec<usize>, i128)> = subsets(config.len(), n + 1)
        .into_iter()
        .map(|s| {
            let v = volume(config, &s);
            (s, v)
        })
        .filter(|(_, v)| *v > 0)
        .collect();
    let m = cands.len();
    let mut compat = vec![vec![true; m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let ok = proper(config, &cands[i].0, &cands[j].0);
            compat[i][j] = ok;
            compat[j][i] = ok;
        }
    }

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(0, 0, total, &cands, &compat, &mut chosen, &mut out);
    out.sort();
    out
}

fn search(
    next: usize,
    vol: i128,
    total: i128,
    cands: &[(Vec<usize>, i128)],
    compat: &[Vec<bool>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<TriangulationKey>,
) {
    if vol == total {
        out.push(chosen.iter().map(|&i| cands[i].0.clone()).collect());
        return;
    }
    for i in next..cands.len() {
        if vol + cands[i].1 <= total && chosen.iter().all(|&j| compat[i][j]) {
            chosen.push(i);
            search(i + 1, vol + cands[i].1, total, cands, compat, chosen, out);
            chosen.pop();
        }
    }
}
