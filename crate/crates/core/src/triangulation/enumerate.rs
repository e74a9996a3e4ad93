use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::{circuits, flips, is_regular, placing_triangulation, Circuit, Lifting, Triangulation, TriangulationKey};
use crate::error::{Error, Result};
use crate::polytope::PointConfiguration;

#[derive(Debug, Clone)]
pub struct EnumerationOptions {
    pub max_triangulations: usize,
    pub time_budget: Option<Duration>,
    /// Insertion order for the placing seed; lexicographic when `None`.
    pub seed_order: Option<Vec<usize>>,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_triangulations: 1_000_000,
            time_budget: None,
            seed_order: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RegularTriangulation {
    pub triangulation: Triangulation,
    pub witness: Lifting,
}

/// All regular triangulations of a configuration, sorted by canonical key.
/// A triangulation's id is its position in this list.
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub triangulations: Vec<RegularTriangulation>,
    pub circuits: Vec<Circuit>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.triangulations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangulations.is_empty()
    }

    pub fn keys(&self) -> Vec<TriangulationKey> {
        self.triangulations.iter().map(|r| r.triangulation.key()).collect()
    }

    pub fn position(&self, t: &Triangulation) -> Option<usize> {
        self.triangulations
            .binary_search_by(|r| r.triangulation.key().cmp(&t.key()))
            .ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triangulation> {
        self.triangulations.iter().map(|r| &r.triangulation)
    }
}

/// Breadth-first search over the flip graph restricted to regular
/// triangulations, seeded by a placing triangulation. Irregular neighbours
/// are discarded as soon as they are seen. Each BFS level is expanded in
/// parallel; the result does not depend on the number of workers.
pub fn enumerate_regular(config: &PointConfiguration, options: &EnumerationOptions) -> Result<Enumeration> {
    let start = Instant::now();
    let order: Vec<usize> = match &options.seed_order {
        Some(o) => o.clone(),
        None => (0..config.len()).collect(),
    };
    let seed = placing_triangulation(config, &order)?;
    let circuits = circuits(config);

    let mut seen: HashSet<TriangulationKey> = HashSet::new();
    seen.insert(seed.key());
    let witness = is_regular(&seed, config)
        .witness()
        .cloned()
        .expect("placing triangulations are regular");
    let mut found = vec![RegularTriangulation {
        triangulation: seed.clone(),
        witness,
    }];
    let mut frontier = vec![seed];

    while !frontier.is_empty() {
        check_caps(options, start, found.len())?;
        let neighbours: Vec<Vec<Triangulation>> = frontier
            .par_iter()
            .map(|t| flips(t, &circuits, config).into_iter().map(|(_, n)| n).collect())
            .collect();
        let mut fresh = Vec::new();
        for t in neighbours.into_iter().flatten() {
            if seen.insert(t.key()) {
                fresh.push(t);
            }
        }
        let certified: Vec<(Triangulation, Option<Lifting>)> = fresh
            .into_par_iter()
            .map(|t| {
                let w = is_regular(&t, config).witness().cloned();
                (t, w)
            })
            .collect();
        frontier = Vec::new();
        for (t, w) in certified {
            if let Some(witness) = w {
                frontier.push(t.clone());
                found.push(RegularTriangulation {
                    triangulation: t,
                    witness,
                });
            }
        }
        check_caps(options, start, found.len())?;
    }

    found.sort_by_key(|r| r.triangulation.key());
    Ok(Enumeration {
        triangulations: found,
        circuits,
    })
}

fn check_caps(options: &EnumerationOptions, start: Instant, found: usize) -> Result<()> {
    if found > options.max_triangulations {
        return Err(Error::IncompleteEnumeration {
            reason: format!("triangulation cap {} exceeded", options.max_triangulations),
            found,
        });
    }
    if let Some(budget) = options.time_budget {
        if start.elapsed() > budget {
            return Err(Error::IncompleteEnumeration {
                reason: format!("time budget of {:.1}s exhausted", budget.as_secs_f64()),
                found,
            });
        }
    }
    Ok(())
}
