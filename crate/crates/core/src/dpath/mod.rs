//! Exact piecewise-linear d-path calculus.
//!
//! A d-path on the realization of a pre-cubical set is given by a
//! [`PathPresentation`]: a sequence of segments `[cube; map]` over
//! consecutive time intervals, agreeing at the junctions. All breakpoints
//! are exact rationals, so every equality used by the calculus (tameness,
//! naturality, the roundtrips) is decidable.

mod action;
mod json;
mod ntpres;
mod plmap;
mod progress;
mod tame;
mod taming;
mod track;

#[cfg(test)]
mod tests;

pub use action::{Action, ActionId, ActionTable};
pub use json::{path_from_json, path_to_json, progress_to_json, track_from_json, track_to_json};
pub use ntpres::{minimal_presentation, presentations_equivalent, Equivalence};
pub use plmap::PLMap;
pub use progress::{path_from_progress, progress_from_path, ProgressFunction};
pub use tame::{is_tame, to_tame_presentation};
pub use taming::{eval_r, eval_r_s, is_regular, regularize, tamify};
pub use track::{extract_track, track_length, validate_track, Track, TrackEntry, TrackViolation};

use crate::precubical::{CubeId, Point, PrecubicalSet};
use crate::rat::{self, Rat};
use crate::{Error, Result};
use num_traits::Zero;

/// One segment `[cube; map]` of a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub cube: CubeId,
    pub map: PLMap,
}

/// A presentation of a d-path as segments over consecutive time intervals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPresentation {
    segments: Vec<Segment>,
}

impl PathPresentation {
    /// Validate and build a presentation: segment widths must match cube
    /// dimensions, time intervals must be consecutive, and consecutive
    /// segments must present the same point at each junction (compared
    /// canonically, so presentations may cross cube faces freely).
    pub fn new(set: &PrecubicalSet, segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Err(Error::InvalidArgument("presentation with no segments".into()));
        }
        for seg in &segments {
            if seg.map.width() != set.dim(seg.cube) {
                return Err(Error::InvalidArgument(format!(
                    "segment in {:?} (dimension {}) has map width {}",
                    set.id_str(seg.cube),
                    set.dim(seg.cube),
                    seg.map.width()
                )));
            }
        }
        for w in segments.windows(2) {
            if w[0].map.end_time() != w[1].map.start_time() {
                return Err(Error::InvalidArgument(format!(
                    "segment intervals not consecutive at {}",
                    rat::format(w[0].map.end_time())
                )));
            }
            let left = set.canonical_point(&Point::new(w[0].cube, w[0].map.end_value().to_vec()))?;
            let right =
                set.canonical_point(&Point::new(w[1].cube, w[1].map.start_value().to_vec()))?;
            if left != right {
                return Err(Error::InvalidArgument(format!(
                    "junction mismatch at {}: [{}] vs [{}]",
                    rat::format(w[0].map.end_time()),
                    set.id_str(left.cube),
                    set.id_str(right.cube)
                )));
            }
        }
        Ok(PathPresentation { segments })
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn start_time(&self) -> &Rat {
        self.segments[0].map.start_time()
    }

    pub fn end_time(&self) -> &Rat {
        self.segments.last().unwrap().map.end_time()
    }

    /// Canonical point at a time inside the domain.
    pub fn point_at(&self, set: &PrecubicalSet, t: &Rat) -> Result<Point> {
        let seg = self
            .segments
            .iter()
            .find(|s| s.map.contains_time(t))
            .ok_or_else(|| Error::InvalidArgument(format!("time {} outside path", rat::format(t))))?;
        set.canonical_point(&Point::new(seg.cube, seg.map.eval(t)?))
    }

    /// Canonical start point.
    pub fn start_point(&self, set: &PrecubicalSet) -> Result<Point> {
        self.point_at(set, &self.start_time().clone())
    }

    /// Canonical end point.
    pub fn end_point(&self, set: &PrecubicalSet) -> Result<Point> {
        self.point_at(set, &self.end_time().clone())
    }

    /// Does the path run from the distinguished start to the end vertex?
    pub fn is_bipointed_run(&self, set: &PrecubicalSet) -> Result<bool> {
        let s = self.start_point(set)?;
        let e = self.end_point(set)?;
        Ok(s.is_vertex() && e.is_vertex() && s.cube == set.start() && e.cube == set.end())
    }
}

/// The L¹-length: total coordinate increase, summed over segments.
/// Invariant under re-presentation of the same path.
pub fn path_length(pres: &PathPresentation) -> Rat {
    pres.segments.iter().map(|s| s.map.length()).sum()
}

/// The unique natural reparametrization: the same path parametrized by
/// cumulative L¹ arc length on `[0, len]`. Constancy intervals collapse;
/// a constant path degenerates to a single-point domain.
pub fn naturalize(pres: &PathPresentation) -> PathPresentation {
    let mut total = rat::zero();
    let mut segments: Vec<Segment> = Vec::new();
    for seg in &pres.segments {
        let bps = seg.map.breakpoints();
        let base: Rat = bps[0].1.iter().sum();
        let new_times: Vec<Rat> = bps
            .iter()
            .map(|(_, v)| {
                let s: Rat = v.iter().sum();
                &total + (s - &base)
            })
            .collect();
        let last = new_times.last().unwrap().clone();
        let mapped = seg
            .map
            .map_times(&new_times)
            .expect("cumulative lengths are non-decreasing")
            .normalized();
        total = last;
        if !mapped.is_degenerate() {
            segments.push(Segment { cube: seg.cube, map: mapped });
        }
    }
    if segments.is_empty() {
        let first = &pres.segments[0];
        return PathPresentation {
            segments: vec![Segment {
                cube: first.cube,
                map: PLMap::constant(rat::zero(), first.map.start_value().to_vec()),
            }],
        };
    }
    PathPresentation { segments }
}

/// Is the presentation natural (arc-length parametrized)?
pub fn is_natural(pres: &PathPresentation) -> bool {
    pres.segments.iter().all(|s| s.map.is_natural_piece())
}

/// Maximal closed intervals of times whose canonical point is a vertex.
/// For natural paths all intervals are degenerate (single times).
pub fn vertex_intervals(pres: &PathPresentation) -> Vec<(Rat, Rat)> {
    let mut intervals: Vec<(Rat, Rat)> = Vec::new();
    for seg in &pres.segments {
        let bps = seg.map.breakpoints();
        let s = seg.map.start_time().clone();
        let e = seg.map.end_time().clone();
        // Per coordinate: vertex times are [s, last-zero] ∪ [first-one, e].
        let mut pieces: Vec<(Rat, Rat)> = vec![(s.clone(), e.clone())];
        for j in 0..seg.map.width() {
            let mut last_zero: Option<Rat> = None;
            let mut first_one: Option<Rat> = None;
            for (t, v) in bps {
                if v[j].is_zero() {
                    last_zero = Some(t.clone());
                }
                if v[j] == rat::one() && first_one.is_none() {
                    first_one = Some(t.clone());
                }
            }
            let mut allowed: Vec<(Rat, Rat)> = Vec::new();
            if let Some(z) = last_zero {
                allowed.push((s.clone(), z));
            }
            if let Some(o) = first_one {
                allowed.push((o, e.clone()));
            }
            pieces = intersect_interval_sets(&pieces, &allowed);
            if pieces.is_empty() {
                break;
            }
        }
        intervals.extend(pieces);
    }
    merge_intervals(intervals)
}

/// Vertex times of a path whose vertex set is finite (e.g. any natural
/// non-constant path). Errors when the path rests at a vertex over an
/// interval.
pub fn vertex_times(pres: &PathPresentation) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for (lo, hi) in vertex_intervals(pres) {
        if lo != hi {
            return Err(Error::InvalidArgument(format!(
                "path rests at a vertex on [{}, {}]",
                rat::format(&lo),
                rat::format(&hi)
            )));
        }
        out.push(lo);
    }
    Ok(out)
}

fn intersect_interval_sets(a: &[(Rat, Rat)], b: &[(Rat, Rat)]) -> Vec<(Rat, Rat)> {
    let mut out = Vec::new();
    for (a0, a1) in a {
        for (b0, b1) in b {
            let lo = if a0 >= b0 { a0.clone() } else { b0.clone() };
            let hi = if a1 <= b1 { a1.clone() } else { b1.clone() };
            if lo <= hi {
                out.push((lo, hi));
            }
        }
    }
    merge_intervals(out)
}

fn merge_intervals(mut xs: Vec<(Rat, Rat)>) -> Vec<(Rat, Rat)> {
    xs.sort();
    let mut out: Vec<(Rat, Rat)> = Vec::new();
    for (lo, hi) in xs {
        match out.last_mut() {
            Some((_, phi)) if *phi >= lo => {
                if hi > *phi {
                    *phi = hi;
                }
            }
            _ => out.push((lo, hi)),
        }
    }
    out
}

/// Exact pointwise equality of two presentations as paths: equal domains
/// and equal canonical points at every time.
///
/// Both paths are compared on the merged breakpoint grid; between adjacent
/// grid times the facial status of every coordinate is constant, so the
/// canonical carrier is constant and the affine coordinate functions can be
/// compared by their endpoint values.
pub fn paths_pointwise_equal(
    set: &PrecubicalSet,
    p1: &PathPresentation,
    p2: &PathPresentation,
) -> Result<bool> {
    if p1.start_time() != p2.start_time() || p1.end_time() != p2.end_time() {
        return Ok(false);
    }
    let mut grid: Vec<Rat> = Vec::new();
    for p in [p1, p2] {
        for seg in p.segments() {
            for (t, _) in seg.map.breakpoints() {
                grid.push(t.clone());
            }
        }
    }
    grid.sort();
    grid.dedup();
    for t in &grid {
        if p1.point_at(set, t)? != p2.point_at(set, t)? {
            return Ok(false);
        }
    }
    for w in grid.windows(2) {
        let a = open_interval_profile(set, p1, &w[0], &w[1])?;
        let b = open_interval_profile(set, p2, &w[0], &w[1])?;
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Canonical data of a path on an open interval free of breakpoints: the
/// constant carrier plus the active coordinates' endpoint values.
fn open_interval_profile(
    set: &PrecubicalSet,
    pres: &PathPresentation,
    lo: &Rat,
    hi: &Rat,
) -> Result<(CubeId, Vec<(Rat, Rat)>)> {
    use crate::precubical::FaceLetter;
    let seg = pres
        .segments
        .iter()
        .find(|s| s.map.start_time() <= lo && s.map.end_time() >= hi)
        .ok_or_else(|| Error::InvalidArgument("interval not inside one segment".into()))?;
    let v_lo = seg.map.eval(lo)?;
    let v_hi = seg.map.eval(hi)?;
    let mut word = Vec::with_capacity(seg.map.width());
    let mut active = Vec::new();
    for j in 0..seg.map.width() {
        let constant = v_lo[j] == v_hi[j];
        if constant && v_lo[j].is_zero() {
            word.push(FaceLetter::Zero);
        } else if constant && v_lo[j] == rat::one() {
            word.push(FaceLetter::One);
        } else {
            word.push(FaceLetter::Star);
            active.push((v_lo[j].clone(), v_hi[j].clone()));
        }
    }
    let carrier = set.face_word(seg.cube, &word)?;
    Ok((carrier, active))
}
