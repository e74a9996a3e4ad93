use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{Lifting, Triangulation};
use crate::exact::{self, Rational};
use crate::polytope::PointConfiguration;

type Piece = (Vec<Rational>, Rational);

/// Cells of the projected lower hull of a lifted configuration.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Subdivision {
    /// Vertex sets of the cells, sorted.
    pub cells: Vec<Vec<usize>>,
    /// Every point whose lifted image lies on the cell's lower face.
    #[serde(skip)]
    pub cell_points: Vec<Vec<usize>>,
    /// Affine function `x -> <a, x> + c` of each cell, stored as `(a, c)`.
    #[serde(skip)]
    pub pieces: Vec<Piece>,
    /// True iff every cell is a simplex and no point lies on a lower face
    /// without being one of its vertices.
    pub is_triangulation: bool,
}

impl Subdivision {
    pub fn to_triangulation(&self, config: &PointConfiguration) -> Option<Triangulation> {
        if !self.is_triangulation {
            return None;
        }
        Triangulation::new(self.cells.clone(), config).ok()
    }

    /// The convex piecewise-linear function whose graph is the lower hull,
    /// i.e. the maximum of the cell pieces.
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.pieces
            .iter()
            .map(|(a, c)| exact::dot(a, x) + c)
            .max()
            .expect("a subdivision has at least one cell")
    }
}

/// Projects the lower faces of `conv{(ω_k, λ_k)}` to the configuration.
pub fn lower_hull_subdivision(config: &PointConfiguration, lifting: &Lifting) -> Subdivision {
    assert_eq!(lifting.len(), config.len(), "one height per point");
    lower_hull_rational(config, &lifting.to_rational())
}

/// Lower hull by exhaustion over affinely independent `(n+1)`-subsets: the
/// affine interpolant of a subset supports the lifted points from below iff
/// no point lies strictly under it, and the touching points form a cell.
pub(crate) fn lower_hull_rational(config: &PointConfiguration, heights: &[Rational]) -> Subdivision {
    let n = config.dim();
    let pts: Vec<Vec<Rational>> = (0..config.len()).map(|i| config.rational_point(i)).collect();
    let mut cells: BTreeMap<Vec<usize>, (Vec<Rational>, Rational)> = BTreeMap::new();

    'subsets: for subset in exact::combinations(config.len(), n + 1) {
        if cells
            .keys()
            .any(|cell| subset.iter().all(|i| cell.binary_search(i).is_ok()))
        {
            continue;
        }
        // rows (ω, 1) · (a, c) = h
        let rows: Vec<Vec<Rational>> = subset
            .iter()
            .map(|&i| {
                let mut r = pts[i].clone();
                r.push(exact::int(1));
                r
            })
            .collect();
        let rhs: Vec<Rational> = subset.iter().map(|&i| heights[i].clone()).collect();
        let Some(mut sol) = exact::solve(&rows, &rhs) else {
            continue;
        };
        let c = sol.pop().unwrap();
        let mut touching = Vec::new();
        for (k, p) in pts.iter().enumerate() {
            let gap = &heights[k] - (exact::dot(&sol, p) + &c);
            if gap.is_negative() {
                continue 'subsets;
            }
            if gap.is_zero() {
                touching.push(k);
            }
        }
        cells.insert(touching, (sol, c));
    }

    let mut is_triangulation = true;
    let mut out: Vec<(Vec<usize>, Vec<usize>, Piece)> = cells
        .into_iter()
        .map(|(points, piece)| {
            let vertices = if points.len() == n + 1 {
                points.clone()
            } else {
                is_triangulation = false;
                cell_vertices(&pts, &points)
            };
            (vertices, points, piece)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Subdivision {
        cells: out.iter().map(|c| c.0.clone()).collect(),
        cell_points: out.iter().map(|c| c.1.clone()).collect(),
        pieces: out.into_iter().map(|c| c.2).collect(),
        is_triangulation,
    }
}

fn cell_vertices(pts: &[Vec<Rational>], cell: &[usize]) -> Vec<usize> {
    cell.iter()
        .copied()
        .filter(|&v| {
            let others: Vec<Vec<Rational>> = cell.iter().filter(|&&w| w != v).map(|&w| pts[w].clone()).collect();
            !exact::in_convex_hull(&others, &pts[v])
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::polytope::LatticePolytope;

    fn lattice(v: &[&[i64]]) -> PointConfiguration {
        LatticePolytope::from_vertices(v.iter().map(|p| p.to_vec()).collect())
            .unwrap()
            .lattice_points()
    }

    #[test]
    fn segment_liftings() {
        let a = lattice(&[&[0], &[2]]);
        let fine = lower_hull_subdivision(&a, &Lifting::new(vec![0, -1, 0]));
        assert!(fine.is_triangulation);
        assert_eq!(fine.cells, vec![vec![0, 1], vec![1, 2]]);

        let flat = lower_hull_subdivision(&a, &Lifting::new(vec![0, 0, 0]));
        assert!(!flat.is_triangulation);
        assert_eq!(flat.cells, vec![vec![0, 2]]);
        assert_eq!(flat.cell_points, vec![vec![0, 1, 2]]);

        let raised = lower_hull_subdivision(&a, &Lifting::new(vec![0, 1, 0]));
        assert!(raised.is_triangulation);
        assert_eq!(raised.cells, vec![vec![0, 2]]);
        assert_eq!(raised.evaluate(&[int(1)]), int(-1));
    }

    #[test]
    fn square_diagonal() {
        let a = lattice(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let t = lower_hull_subdivision(&a, &Lifting::new(vec![-1, 0, 0, -1]));
        assert_eq!(t.cells, vec![vec![0, 1, 3], vec![0, 2, 3]]);
        let flat = lower_hull_subdivision(&a, &Lifting::new(vec![0, 0, 0, 0]));
        assert_eq!(flat.cells, vec![vec![0, 1, 2, 3]]);
        assert!(!flat.is_triangulation);
    }

    #[test]
    fn affine_lifting_is_trivial() {
        let a = lattice(&[&[0, 0], &[2, 0], &[0, 2]]);
        let h: Vec<i64> = a.points().iter().map(|p| 3 * p[0] - p[1]).collect();
        let sub = lower_hull_subdivision(&a, &Lifting::new(h));
        assert_eq!(sub.cells, vec![vec![0, 2, 5]]);
        assert!(!sub.is_triangulation);
    }
}
