use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::Triangulation;
use crate::exact;
use crate::polytope::PointConfiguration;

/// Minimal affinely dependent subset `Z = Z+ ⊔ Z-`, split by the signs of
/// its unique affine dependency.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Circuit {
    pub positive: Vec<usize>,
    pub negative: Vec<usize>,
}

impl Circuit {
    pub fn reversed(&self) -> Circuit {
        Circuit {
            positive: self.negative.clone(),
            negative: self.positive.clone(),
        }
    }

    fn support(&self) -> Vec<usize> {
        let mut z: Vec<usize> = self.positive.iter().chain(&self.negative).copied().collect();
        z.sort_unstable();
        z
    }

    /// The triangulation `{Z \ {z} : z ∈ Z+}` of `conv Z`.
    fn positive_cells(&self) -> Vec<Vec<usize>> {
        let z = self.support();
        self.positive
            .iter()
            .map(|p| z.iter().copied().filter(|x| x != p).collect())
            .collect()
    }
}

/// Every circuit of the configuration, sorted, with the orientation fixed so
/// that the smallest index is positive.
pub fn circuits(config: &PointConfiguration) -> Vec<Circuit> {
    let n = config.dim();
    let mut out = Vec::new();
    for size in 3..=(n + 2).min(config.len()) {
        for subset in exact::combinations(config.len(), size) {
            let Some(dep) = exact::affine_dependency(&config.refs(&subset)) else {
                continue;
            };
            if dep.iter().any(Zero::is_zero) {
                continue;
            }
            let flip_sign = dep[0].is_negative();
            let (mut positive, mut negative) = (Vec::new(), Vec::new());
            for (&i, c) in subset.iter().zip(&dep) {
                if c.is_positive() != flip_sign {
                    positive.push(i);
                } else {
                    negative.push(i);
                }
            }
            out.push(Circuit { positive, negative });
        }
    }
    out.sort();
    out
}

/// Applies the bistellar flip supported on `circuit`, replacing the cells
/// `T+ * L` by `T- * L`. Returns `None` unless every cell of `T+` is a face
/// of `T` and all of them share the same nonempty link `L`.
pub fn flip_at(t: &Triangulation, circuit: &Circuit, config: &PointConfiguration) -> Option<Triangulation> {
    let cells = circuit.positive_cells();
    let mut link: Option<BTreeSet<Vec<usize>>> = None;
    for cell in &cells {
        let l: BTreeSet<Vec<usize>> = t
            .simplices()
            .iter()
            .filter(|s| cell.iter().all(|v| s.contains_vertex(*v)))
            .map(|s| {
                s.vertices()
                    .iter()
                    .copied()
                    .filter(|v| cell.binary_search(v).is_err())
                    .collect()
            })
            .collect();
        if l.is_empty() {
            return None;
        }
        match &link {
            None => link = Some(l),
            Some(prev) if *prev == l => {}
            Some(_) => return None,
        }
    }
    let link = link?;
    let join = |cells: &[Vec<usize>]| -> BTreeSet<Vec<usize>> {
        cells
            .iter()
            .flat_map(|c| {
                link.iter().map(move |l| {
                    let mut s: Vec<usize> = c.iter().chain(l).copied().collect();
                    s.sort_unstable();
                    s
                })
            })
            .collect()
    };
    let removed = join(&cells);
    let added = join(&circuit.reversed().positive_cells());
    let mut simplices: Vec<Vec<usize>> = t
        .simplices()
        .iter()
        .map(|s| s.vertices().to_vec())
        .filter(|s| !removed.contains(s))
        .collect();
    simplices.extend(added);
    Triangulation::new(simplices, config).ok()
}

/// All bistellar flips of `t`, each with its circuit oriented so that the
/// cells `Z \ {z}, z ∈ Z+` are the ones present in `t`.
pub fn flips(t: &Triangulation, circuits: &[Circuit], config: &PointConfiguration) -> Vec<(Circuit, Triangulation)> {
    let mut out = Vec::new();
    for c in circuits {
        for oriented in [c.clone(), c.reversed()] {
            if let Some(next) = flip_at(t, &oriented, config) {
                out.push((oriented, next));
            }
        }
    }
    out
}
