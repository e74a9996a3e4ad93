//! Polytope input files: `{"vertices": [[int, ...], ...]}`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolytopeFile {
    vertices: Vec<Vec<i64>>,
}

/// Parses the JSON text of a polytope file. Syntax errors report line and column.
pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let file: PolytopeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.vertices.is_empty() {
        return Err(Error::InvalidInput("no vertices given".into()));
    }
    let dim = file.vertices[0].len();
    if let Some((i, v)) = file.vertices.iter().enumerate().find(|(_, v)| v.len() != dim) {
        return Err(Error::Parse(format!(
            "vertex {i} has {} coordinates, expected {dim}",
            v.len()
        )));
    }
    LatticePolytope::from_vertices(file.vertices)
}

pub fn read_polytope(path: &Path) -> Result<LatticePolytope> {
    let text = std::fs::read_to_string(path)?;
    parse_polytope(&text).map_err(|e| match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_square() {
        let q = parse_polytope(r#"{"vertices": [[0,0],[1,0],[0,1],[1,1]]}"#).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.vertices().len(), 4);
    }

    #[test]
    fn syntax_errors_have_a_location() {
        let err = parse_polytope("{\"vertices\": [[0,0],\n [1,0]\n [0,1]]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 3"), "{msg}");
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(
            parse_polytope(r#"{"vertices": [[0,0],[1]]}"#),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_polytope(r#"{"vertices": []}"#),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(parse_polytope(r#"{"points": [[0]]}"#), Err(Error::Parse(_))));
        assert!(parse_polytope(r#"{"vertices": [[0,0],[1,1],[2,2]]}"#).is_err());
    }
}
