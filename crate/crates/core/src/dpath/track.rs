//! Tracks: sequences of cubes with chosen lower/upper face sets that
//! carry arbitrary d-paths from the start to the end vertex.

use num_traits::{One, Zero};

use super::{path_length, PathPresentation, Segment};
use crate::precubical::{CubeId, PrecubicalSet};
use crate::rat::{self, Rat};
use crate::{Error, Result};

/// One stage `(cube, A, B)` of a track. Axis sets are sorted, 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackEntry {
    pub cube: CubeId,
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

/// A track `(c_i, A_i, B_i)`: the lower faces of the first cube reach the
/// start vertex, upper faces of the last reach the end vertex, and each
/// stage's upper face equals the next stage's lower face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Track {
    pub entries: Vec<TrackEntry>,
}

/// A violation reported by [`validate_track`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TrackViolation {
    /// An axis set has out-of-range, repeated or unsorted entries.
    BadAxisSet { stage: usize, which: &'static str },
    /// `d⁰_{A_1}(c_1)` is not the start vertex.
    Start { got: String },
    /// `d¹_{B_l}(c_l)` is not the end vertex.
    End { got: String },
    /// `d¹_{B_i}(c_i) ≠ d⁰_{A_{i+1}}(c_{i+1})`.
    Junction { stage: usize, left: String, right: String },
    /// `A_1`, `B_l` or some `B_i ∪ A_{i+1}` is empty.
    Empty { stage: usize },
}

fn axis_set_ok(set: &PrecubicalSet, cube: CubeId, axes: &[usize]) -> bool {
    axes.windows(2).all(|w| w[0] < w[1]) && axes.iter().all(|&i| i < set.dim(cube))
}

/// Check track conditions (a)–(d), returning all violations.
pub fn validate_track(set: &PrecubicalSet, track: &Track) -> Vec<TrackViolation> {
    let mut out = Vec::new();
    if track.entries.is_empty() {
        out.push(TrackViolation::Empty { stage: 0 });
        return out;
    }
    for (i, e) in track.entries.iter().enumerate() {
        if !axis_set_ok(set, e.cube, &e.lower) {
            out.push(TrackViolation::BadAxisSet { stage: i + 1, which: "A" });
        }
        if !axis_set_ok(set, e.cube, &e.upper) {
            out.push(TrackViolation::BadAxisSet { stage: i + 1, which: "B" });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let first = &track.entries[0];
    let start = set
        .iterated_face(first.cube, &first.lower, 0)
        .expect("axis sets checked");
    if start != set.start() {
        out.push(TrackViolation::Start { got: set.id_str(start).to_string() });
    }
    let last = track.entries.last().unwrap();
    let end = set
        .iterated_face(last.cube, &last.upper, 1)
        .expect("axis sets checked");
    if end != set.end() {
        out.push(TrackViolation::End { got: set.id_str(end).to_string() });
    }
    for (i, w) in track.entries.windows(2).enumerate() {
        let left = set.iterated_face(w[0].cube, &w[0].upper, 1).expect("checked");
        let right = set.iterated_face(w[1].cube, &w[1].lower, 0).expect("checked");
        if left != right {
            out.push(TrackViolation::Junction {
                stage: i + 1,
                left: set.id_str(left).to_string(),
                right: set.id_str(right).to_string(),
            });
        }
        if w[0].upper.is_empty() && w[1].lower.is_empty() {
            out.push(TrackViolation::Empty { stage: i + 1 });
        }
    }
    if track.entries[0].lower.is_empty() {
        out.push(TrackViolation::Empty { stage: 1 });
    }
    if last.upper.is_empty() {
        out.push(TrackViolation::Empty { stage: track.entries.len() });
    }
    out
}

/// The length of a valid track: `Σ|A_i|`, which equals `Σ|B_i|`.
pub fn track_length(track: &Track) -> usize {
    let a: usize = track.entries.iter().map(|e| e.lower.len()).sum();
    let b: usize = track.entries.iter().map(|e| e.upper.len()).sum();
    assert_eq!(a, b, "track length is ill-defined on invalid tracks");
    a
}

/// Extract a track carrying the given non-constant path from start to end,
/// together with the normalized presentation, which presents the path
/// within that track.
///
/// The normalization applies, left to right and to a fixed point: drop
/// zero-duration segments, drop coordinates frozen at 0 (then at 1) over a
/// whole segment, merge adjacent segments whose junction point is interior
/// to both cubes, and absorb vertex (dimension-0) segments into a
/// neighbour.
pub fn extract_track(
    set: &PrecubicalSet,
    pres: &PathPresentation,
) -> Result<(Track, PathPresentation)> {
    if path_length(pres).is_zero() {
        return Err(Error::ConstantPath);
    }
    let mut segs: Vec<Segment> = pres.segments().to_vec();
    loop {
        let mut changed = false;

        // Zero-duration segments carry no information once junctions agree.
        if segs.len() > 1 {
            let before = segs.len();
            segs.retain(|s| !s.map.is_degenerate());
            if segs.is_empty() {
                return Err(Error::ConstantPath);
            }
            changed |= segs.len() != before;
        }

        // Frozen coordinates: replace [c; β] by the face that omits them.
        for eps in [0u8, 1u8] {
            let frozen_value = if eps == 0 { rat::zero() } else { rat::one() };
            for seg in segs.iter_mut() {
                let bps = seg.map.breakpoints();
                let frozen: Vec<usize> = (0..seg.map.width())
                    .filter(|&j| bps.iter().all(|(_, v)| v[j] == frozen_value))
                    .collect();
                if frozen.is_empty() {
                    continue;
                }
                seg.cube = set.iterated_face(seg.cube, &frozen, eps)?;
                seg.map = seg.map.drop_coords(&frozen);
                changed = true;
            }
        }

        // Merge a junction interior to both cubes: the canonical points on
        // each side are then full-dimensional, so the cubes coincide.
        let mut i = 0;
        while i + 1 < segs.len() {
            let left_end = segs[i].map.end_value();
            let right_start = segs[i + 1].map.start_value();
            let left_completes = left_end.iter().any(|x| x.is_one());
            let right_starts = right_start.iter().any(|x| x.is_zero());
            if !left_completes && !right_starts {
                if segs[i].cube != segs[i + 1].cube {
                    return Err(Error::InvalidArgument(
                        "inconsistent presentation: interior junction with distinct cubes"
                            .into(),
                    ));
                }
                let merged = segs[i].map.concat(&segs[i + 1].map)?;
                segs[i].map = merged;
                segs.remove(i + 1);
                changed = true;
            } else {
                i += 1;
            }
        }

        // Absorb vertex segments into a neighbour as a constant plateau.
        if segs.len() > 1 {
            let mut i = 0;
            while i < segs.len() && segs.len() > 1 {
                if set.dim(segs[i].cube) > 0 {
                    i += 1;
                    continue;
                }
                let (lo, hi) = (
                    segs[i].map.start_time().clone(),
                    segs[i].map.end_time().clone(),
                );
                if i + 1 < segs.len() {
                    let nb = &segs[i + 1];
                    let plateau = constant_piece(&lo, &hi, nb.map.start_value());
                    segs[i + 1] = Segment { cube: nb.cube, map: plateau.concat(&nb.map)? };
                } else {
                    let nb = &segs[i - 1];
                    let plateau = constant_piece(&lo, &hi, nb.map.end_value());
                    segs[i - 1] = Segment { cube: nb.cube, map: nb.map.concat(&plateau)? };
                }
                segs.remove(i);
                changed = true;
            }
        }

        if !changed {
            break;
        }
    }

    let entries = segs
        .iter()
        .map(|seg| {
            let lower: Vec<usize> = seg
                .map
                .start_value()
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_zero())
                .map(|(j, _)| j)
                .collect();
            let upper: Vec<usize> = seg
                .map
                .end_value()
                .iter()
                .enumerate()
                .filter(|(_, x)| x.is_one())
                .map(|(j, _)| j)
                .collect();
            TrackEntry { cube: seg.cube, lower, upper }
        })
        .collect();
    let track = Track { entries };
    let violations = validate_track(set, &track);
    if !violations.is_empty() {
        return Err(Error::InvalidArgument(format!(
            "track extraction failed: {violations:?} (is the path a start-to-end d-path?)"
        )));
    }
    let normalized = PathPresentation::new(set, segs)?;
    debug_assert_eq!(rat::int(track_length(&track) as i64), path_length(&normalized));
    Ok((track, normalized))
}

/// A constant map on `[lo, hi]` (degenerate when `lo == hi`).
fn constant_piece(lo: &Rat, hi: &Rat, value: &[Rat]) -> PLMap {
    if lo == hi {
        return PLMap::constant(lo.clone(), value.to_vec());
    }
    PLMap::new(vec![(lo.clone(), value.to_vec()), (hi.clone(), value.to_vec())])
        .expect("constant extension is monotone")
}

use super::plmap::PLMap;
