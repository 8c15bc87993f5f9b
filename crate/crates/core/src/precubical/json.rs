//! External JSON model format.
//!
//! ```text
//! { "name": str?, "cubes": [ { "id": str, "dim": int,
//!                              "d0": [str…], "d1": [str…] } … ],
//!   "start": str, "end": str }
//! ```
//!
//! `d0`/`d1` have length `dim`; the entry at position `i−1` is `d^ε_i`.
//! The loader rejects duplicate ids, dangling references and dimension
//! mismatches.

use serde::{Deserialize, Serialize};

use super::{CubeRecord, PrecubicalSet};
use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct ModelDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    cubes: Vec<CubeDoc>,
    start: String,
    end: String,
}

#[derive(Serialize, Deserialize)]
struct CubeDoc {
    id: String,
    dim: usize,
    d0: Vec<String>,
    d1: Vec<String>,
}

/// Parse a model document. Rejects duplicate ids, dangling references and
/// face lists or face dimensions inconsistent with `dim`.
pub fn model_from_json(text: &str) -> Result<PrecubicalSet> {
    let doc: ModelDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("model JSON: {e}")))?;
    let records = doc
        .cubes
        .into_iter()
        .map(|c| CubeRecord { id: c.id, dim: c.dim, d0: c.d0, d1: c.d1 })
        .collect();
    let set = PrecubicalSet::from_records(doc.name, records, &doc.start, &doc.end)?;
    for c in set.cube_ids() {
        let cube = set.cube(c);
        for &f in cube.d0.iter().chain(cube.d1.iter()) {
            if set.dim(f) + 1 != cube.dim {
                return Err(Error::Parse(format!(
                    "cube {:?} of dimension {} has a face {:?} of dimension {}",
                    cube.id,
                    cube.dim,
                    set.id_str(f),
                    set.dim(f)
                )));
            }
        }
    }
    Ok(set)
}

/// Serialize a model document.
pub fn model_to_json(set: &PrecubicalSet) -> serde_json::Value {
    let cubes = set
        .cube_ids()
        .map(|c| {
            let cube = set.cube(c);
            CubeDoc {
                id: cube.id.clone(),
                dim: cube.dim,
                d0: cube.d0.iter().map(|&f| set.id_str(f).to_string()).collect(),
                d1: cube.d1.iter().map(|&f| set.id_str(f).to_string()).collect(),
            }
        })
        .collect();
    let doc = ModelDoc {
        name: set.name.clone(),
        cubes,
        start: set.id_str(set.start()).to_string(),
        end: set.id_str(set.end()).to_string(),
    };
    serde_json::to_value(doc).expect("model serialization cannot fail")
}
