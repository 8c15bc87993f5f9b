//! Finite bi-pointed pre-cubical sets.
//!
//! A pre-cubical set is a graded family of cubes with lower and upper face
//! maps `d⁰_i`, `d¹_i` satisfying `d_i^ε d_j^η = d_{j−1}^η d_i^ε` for
//! `i < j`. Cubes are identified by opaque strings; equality is identifier
//! equality, which keeps degenerate gluings (two cubes sharing all their
//! faces) sound.
//!
//! Axis indices are 0-based everywhere in code. The JSON format and all
//! human-readable output use the 1-based convention of the face-map algebra.

mod generators;
mod json;
#[cfg(test)]
mod tests;

pub use generators::{boundary_cube, double_cube, grid_complex, standard_cube, wedge, GridBox};

use std::collections::HashMap;
use std::fmt;

use crate::rat::{self, Rat};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// Index of a cube inside its [`PrecubicalSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeId(pub(crate) u32);

impl CubeId {
    pub(crate) fn idx(self) -> usize {
        self.0 as usize
    }
}

/// One letter of a mixed face word: fix an axis at 0 or 1, or keep it free.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaceLetter {
    Zero,
    One,
    Star,
}

/// A single cube record: identifier, dimension and its two face lists.
#[derive(Debug, Clone)]
pub struct Cube {
    pub id: String,
    pub dim: usize,
    pub d0: Vec<CubeId>,
    pub d1: Vec<CubeId>,
}

/// Raw cube record with textual face references, used when building a set.
#[derive(Debug, Clone)]
pub struct CubeRecord {
    pub id: String,
    pub dim: usize,
    pub d0: Vec<String>,
    pub d1: Vec<String>,
}

/// A finite bi-pointed pre-cubical set.
#[derive(Debug, Clone)]
pub struct PrecubicalSet {
    pub name: Option<String>,
    cubes: Vec<Cube>,
    index: HashMap<String, CubeId>,
    start: CubeId,
    end: CubeId,
}

/// A violation reported by [`PrecubicalSet::validate`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// `d^ε_i(c)` does not have dimension `dim(c) − 1`.
    FaceDimension {
        cube: String,
        /// 1-based face index.
        i: usize,
        eps: u8,
        face: String,
        face_dim: usize,
    },
    /// `d_i^ε d_j^η (c) ≠ d_{j−1}^η d_i^ε (c)` for some `i < j`.
    Identity {
        cube: String,
        /// 1-based indices, `i < j`.
        i: usize,
        j: usize,
        eps: u8,
        eta: u8,
        left: String,
        right: String,
    },
    /// A distinguished endpoint is not a vertex.
    EndpointDimension { which: &'static str, id: String, dim: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::FaceDimension { cube, i, eps, face, face_dim } => write!(
                f,
                "cube {cube:?}: d{eps}_{i} points to {face:?} of dimension {face_dim}"
            ),
            Violation::Identity { cube, i, j, eps, eta, left, right } => write!(
                f,
                "cube {cube:?}: d{eps}_{i} d{eta}_{j} = {left:?} but d{eta}_{} d{eps}_{i} = {right:?}",
                j - 1
            ),
            Violation::EndpointDimension { which, id, dim } => {
                write!(f, "{which} vertex {id:?} has dimension {dim}")
            }
        }
    }
}

impl PrecubicalSet {
    /// Build a set from raw records, resolving face references.
    ///
    /// Rejects duplicate identifiers, dangling references and face lists
    /// whose length differs from the cube dimension. Face *dimensions* and
    /// the pre-cubical identity are left to [`validate`](Self::validate),
    /// so invalid sets can be constructed and reported on.
    pub fn from_records(
        name: Option<String>,
        records: Vec<CubeRecord>,
        start: &str,
        end: &str,
    ) -> Result<Self> {
        let mut index = HashMap::new();
        for (pos, rec) in records.iter().enumerate() {
            if index.insert(rec.id.clone(), CubeId(pos as u32)).is_some() {
                return Err(Error::Parse(format!("duplicate cube id {:?}", rec.id)));
            }
        }
        let resolve = |owner: &str, id: &str| -> Result<CubeId> {
            index.get(id).copied().ok_or_else(|| {
                Error::Parse(format!("cube {owner:?} references missing cube {id:?}"))
            })
        };
        let mut cubes = Vec::with_capacity(records.len());
        for rec in &records {
            if rec.d0.len() != rec.dim || rec.d1.len() != rec.dim {
                return Err(Error::Parse(format!(
                    "cube {:?} has dimension {} but face lists of length {}/{}",
                    rec.id,
                    rec.dim,
                    rec.d0.len(),
                    rec.d1.len()
                )));
            }
            let d0 = rec.d0.iter().map(|s| resolve(&rec.id, s)).collect::<Result<_>>()?;
            let d1 = rec.d1.iter().map(|s| resolve(&rec.id, s)).collect::<Result<_>>()?;
            cubes.push(Cube { id: rec.id.clone(), dim: rec.dim, d0, d1 });
        }
        let start = index
            .get(start)
            .copied()
            .ok_or_else(|| Error::Parse(format!("missing start vertex {start:?}")))?;
        let end = index
            .get(end)
            .copied()
            .ok_or_else(|| Error::Parse(format!("missing end vertex {end:?}")))?;
        Ok(PrecubicalSet { name, cubes, index, start, end })
    }

    /// The distinguished initial vertex `𝟎`.
    pub fn start(&self) -> CubeId {
        self.start
    }

    /// The distinguished final vertex `𝟏`.
    pub fn end(&self) -> CubeId {
        self.end
    }

    /// Number of cubes.
    pub fn len(&self) -> usize {
        self.cubes.len()
    }

    /// Is the set empty?
    pub fn is_empty(&self) -> bool {
        self.cubes.is_empty()
    }

    /// All cube ids, in table order.
    pub fn cube_ids(&self) -> impl Iterator<Item = CubeId> + '_ {
        (0..self.cubes.len() as u32).map(CubeId)
    }

    pub fn cube(&self, c: CubeId) -> &Cube {
        &self.cubes[c.idx()]
    }

    pub fn dim(&self, c: CubeId) -> usize {
        self.cubes[c.idx()].dim
    }

    pub fn id_str(&self, c: CubeId) -> &str {
        &self.cubes[c.idx()].id
    }

    /// Look a cube up by identifier.
    pub fn by_id(&self, id: &str) -> Option<CubeId> {
        self.index.get(id).copied()
    }

    /// Count of cubes per dimension, index = dimension.
    pub fn counts_by_dim(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        for c in &self.cubes {
            if counts.len() <= c.dim {
                counts.resize(c.dim + 1, 0);
            }
            counts[c.dim] += 1;
        }
        counts
    }

    /// `d^ε_i(c)` with a 0-based axis index.
    pub fn face(&self, c: CubeId, i: usize, eps: u8) -> Result<CubeId> {
        let cube = self.cube(c);
        let list = if eps == 0 { &cube.d0 } else { &cube.d1 };
        list.get(i).copied().ok_or_else(|| {
            Error::IndexOutOfRange(format!(
                "d{eps}_{} of {:?} (dimension {})",
                i + 1,
                cube.id,
                cube.dim
            ))
        })
    }

    /// Iterated face `d^ε_A(c)` for a set `A` of 0-based indices.
    ///
    /// The result does not depend on the evaluation order; faces are applied
    /// from the highest index down so lower indices stay valid.
    pub fn iterated_face(&self, c: CubeId, axes: &[usize], eps: u8) -> Result<CubeId> {
        let mut sorted = axes.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != axes.len() {
            return Err(Error::InvalidArgument("repeated face index".into()));
        }
        let mut cur = c;
        for &i in sorted.iter().rev() {
            cur = self.face(cur, i, eps)?;
        }
        Ok(cur)
    }

    /// Mixed iterated face given by a word over `{0, 1, *}` of length
    /// `dim(c)`; stars survive, the other axes are faced off.
    pub fn face_word(&self, c: CubeId, word: &[FaceLetter]) -> Result<CubeId> {
        if word.len() != self.dim(c) {
            return Err(Error::InvalidArgument(format!(
                "face word of length {} for cube of dimension {}",
                word.len(),
                self.dim(c)
            )));
        }
        let mut cur = c;
        for (i, letter) in word.iter().enumerate().rev() {
            match letter {
                FaceLetter::Star => {}
                FaceLetter::Zero => cur = self.face(cur, i, 0)?,
                FaceLetter::One => cur = self.face(cur, i, 1)?,
            }
        }
        Ok(cur)
    }

    /// Extreme vertex `d^ε(c)`: the initial (`ε = 0`) or final (`ε = 1`)
    /// vertex of the cube.
    pub fn extreme_vertex(&self, c: CubeId, eps: u8) -> CubeId {
        let axes: Vec<usize> = (0..self.dim(c)).collect();
        self.iterated_face(c, &axes, eps).expect("indices in range")
    }

    /// Check all structural invariants, returning the list of violations.
    /// An empty list means the set is a valid pre-cubical set.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for c in self.cube_ids() {
            let cube = self.cube(c);
            for eps in [0u8, 1u8] {
                let list = if eps == 0 { &cube.d0 } else { &cube.d1 };
                for (i, &f) in list.iter().enumerate() {
                    if self.dim(f) + 1 != cube.dim {
                        out.push(Violation::FaceDimension {
                            cube: cube.id.clone(),
                            i: i + 1,
                            eps,
                            face: self.id_str(f).to_string(),
                            face_dim: self.dim(f),
                        });
                    }
                }
            }
        }
        if !out.is_empty() {
            // Identity checks would index out of range on dimension errors.
            return out;
        }
        for c in self.cube_ids() {
            let n = self.dim(c);
            for j in 1..n {
                for i in 0..j {
                    for eps in [0u8, 1u8] {
                        for eta in [0u8, 1u8] {
                            let left = self
                                .face(self.face(c, j, eta).unwrap(), i, eps)
                                .unwrap();
                            let right = self
                                .face(self.face(c, i, eps).unwrap(), j - 1, eta)
                                .unwrap();
                            if left != right {
                                out.push(Violation::Identity {
                                    cube: self.id_str(c).to_string(),
                                    i: i + 1,
                                    j: j + 1,
                                    eps,
                                    eta,
                                    left: self.id_str(left).to_string(),
                                    right: self.id_str(right).to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
        for (which, v) in [("start", self.start), ("end", self.end)] {
            if self.dim(v) != 0 {
                out.push(Violation::EndpointDimension {
                    which,
                    id: self.id_str(v).to_string(),
                    dim: self.dim(v),
                });
            }
        }
        out
    }

    /// A copy of the set with every identifier passed through `mapper`.
    /// The mapper must stay injective.
    pub fn relabeled(&self, mapper: impl Fn(&str) -> String) -> Result<Self> {
        let records = self
            .cubes
            .iter()
            .map(|c| CubeRecord {
                id: mapper(&c.id),
                dim: c.dim,
                d0: c.d0.iter().map(|&f| mapper(self.id_str(f))).collect(),
                d1: c.d1.iter().map(|&f| mapper(self.id_str(f))).collect(),
            })
            .collect();
        PrecubicalSet::from_records(
            self.name.clone(),
            records,
            &mapper(self.id_str(self.start)),
            &mapper(self.id_str(self.end)),
        )
    }
}

/// A point of the geometric realization, written `[cube; coords]`.
///
/// The canonical form has no coordinate equal to 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub cube: CubeId,
    pub coords: Vec<Rat>,
}

impl Point {
    pub fn new(cube: CubeId, coords: Vec<Rat>) -> Self {
        Point { cube, coords }
    }

    pub fn is_vertex(&self) -> bool {
        self.coords.is_empty()
    }
}

impl PrecubicalSet {
    /// The unique canonical presentation of a point: repeatedly strip
    /// coordinates equal to 0 or 1 through the matching face map.
    pub fn canonical_point(&self, p: &Point) -> Result<Point> {
        if p.coords.len() != self.dim(p.cube) {
            return Err(Error::InvalidArgument(format!(
                "point in {:?} with {} coordinates",
                self.id_str(p.cube),
                p.coords.len()
            )));
        }
        let mut cube = p.cube;
        let mut coords = p.coords.clone();
        loop {
            let hit = coords
                .iter()
                .position(|x| x.is_zero() || x.is_one());
            let Some(i) = hit else { return Ok(Point { cube, coords }) };
            let eps = u8::from(coords[i].is_one());
            cube = self.face(cube, i, eps)?;
            coords.remove(i);
        }
    }
}

/// Coface on coordinates: insert `ε` at the (0-based) positions `axes`,
/// producing a vector of length `n`. Satisfies
/// `[d^ε_A(c); x] = [c; coface_coords(x, A, ε, n)]`.
pub fn coface_coords(x: &[Rat], axes: &[usize], eps: u8, n: usize) -> Result<Vec<Rat>> {
    let mut sorted = axes.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != axes.len() {
        return Err(Error::InvalidArgument("repeated coface index".into()));
    }
    if x.len() + sorted.len() != n {
        return Err(Error::InvalidArgument(format!(
            "coface size mismatch: {} coords + {} insertions != {}",
            x.len(),
            sorted.len(),
            n
        )));
    }
    if sorted.iter().any(|&i| i >= n) {
        return Err(Error::IndexOutOfRange("coface index".into()));
    }
    let value = if eps == 0 { rat::zero() } else { rat::one() };
    let mut out = Vec::with_capacity(n);
    let mut src = x.iter();
    for i in 0..n {
        if sorted.binary_search(&i).is_ok() {
            out.push(value.clone());
        } else {
            out.push(src.next().expect("length checked").clone());
        }
    }
    Ok(out)
}

pub use json::{model_from_json, model_to_json};
