//! Progress functions: per-action completion fractions over time, and the
//! two maps between progress functions of a track and d-paths lying in it.

use num_traits::{One, Zero};

use super::action::{action_table, ActionTable};
use super::plmap::PLMap;
use super::track::Track;
use super::{PathPresentation, Segment};
use crate::precubical::{Point, PrecubicalSet};
use crate::rat::{self, Rat};
use crate::{Error, Result};

/// A progress function of a track: one non-decreasing map `[a,b] → [0,1]`
/// per action, each 0 at the start and 1 at the end, jointly feasible.
#[derive(Debug, Clone)]
pub struct ProgressFunction {
    pub track: Track,
    pub table: ActionTable,
    /// Width-1 maps over a common domain, indexed like `table.actions`.
    pub maps: Vec<PLMap>,
    /// Per action: last time at 0 and first time at 1 (support endpoints).
    supports: Vec<(Rat, Rat)>,
}

fn support_of(map: &PLMap) -> (Rat, Rat) {
    let bps = map.breakpoints();
    let mut last_zero = bps[0].0.clone();
    for (t, v) in bps {
        if v[0].is_zero() {
            last_zero = t.clone();
        }
    }
    let mut first_one = bps.last().unwrap().0.clone();
    for (t, v) in bps.iter().rev() {
        if v[0].is_one() {
            first_one = t.clone();
        }
    }
    (last_zero, first_one)
}

impl ProgressFunction {
    /// Validate and build a progress function.
    ///
    /// Feasibility is decided by the exact criterion: for every stage
    /// index `i`, the latest completion time of actions ending by `i`
    /// must not exceed the earliest start time of actions beginning
    /// after `i`.
    pub fn new(set: &PrecubicalSet, track: Track, maps: Vec<PLMap>) -> Result<Self> {
        let table = action_table(set, &track)?;
        if maps.len() != table.len() {
            return Err(Error::InvalidArgument(format!(
                "{} maps for {} actions",
                maps.len(),
                table.len()
            )));
        }
        let first = maps.first().ok_or_else(|| {
            Error::InvalidArgument("progress function with no actions".into())
        })?;
        let (a, b) = (first.start_time().clone(), first.end_time().clone());
        for m in &maps {
            if m.width() != 1 {
                return Err(Error::InvalidArgument("progress map of width != 1".into()));
            }
            if m.start_time() != &a || m.end_time() != &b {
                return Err(Error::InvalidArgument("progress maps on unequal domains".into()));
            }
            if !m.start_value()[0].is_zero() || !m.end_value()[0].is_one() {
                return Err(Error::InvalidArgument(
                    "progress map must run from 0 to 1".into(),
                ));
            }
        }
        let supports: Vec<(Rat, Rat)> = maps.iter().map(support_of).collect();
        let l = track.entries.len();
        for i in 0..=l {
            let mut latest_end: Option<Rat> = None;
            let mut earliest_start: Option<Rat> = None;
            for (k, action) in table.actions.iter().enumerate() {
                if action.end <= i {
                    let bp = &supports[k].1;
                    if latest_end.as_ref().is_none_or(|m| bp > m) {
                        latest_end = Some(bp.clone());
                    }
                }
                if action.beg > i {
                    let ap = &supports[k].0;
                    if earliest_start.as_ref().is_none_or(|m| ap < m) {
                        earliest_start = Some(ap.clone());
                    }
                }
            }
            let lo = latest_end.unwrap_or_else(|| a.clone());
            let hi = earliest_start.unwrap_or_else(|| b.clone());
            if lo > hi {
                return Err(Error::InfeasibleProgressFunction(format!(
                    "stage {i}: completion at {} after start at {}",
                    rat::format(&lo),
                    rat::format(&hi)
                )));
            }
        }
        Ok(ProgressFunction { track, table, maps, supports })
    }

    pub fn domain(&self) -> (Rat, Rat) {
        let m = &self.maps[0];
        (m.start_time().clone(), m.end_time().clone())
    }

    /// Support endpoints `(a^p, b^p)` of an action's map.
    pub fn support(&self, action: usize) -> &(Rat, Rat) {
        &self.supports[action]
    }
}

/// Check that a presentation is a presentation of the path within the
/// track: stage cubes match, the path starts at `𝟎` of the first cube and
/// ends at `𝟏` of the last, and at each junction the upper-face
/// coordinates are complete, the lower-face coordinates of the next stage
/// are unstarted, and the interface coordinates agree.
fn check_track_presentation(
    set: &PrecubicalSet,
    pres: &PathPresentation,
    track: &Track,
) -> Result<()> {
    let segs = pres.segments();
    if segs.len() != track.entries.len() {
        return Err(Error::NotATrackPresentation(format!(
            "{} segments vs {} stages",
            segs.len(),
            track.entries.len()
        )));
    }
    for (i, (seg, entry)) in segs.iter().zip(&track.entries).enumerate() {
        if seg.cube != entry.cube {
            return Err(Error::NotATrackPresentation(format!(
                "stage {}: cube {:?} vs {:?}",
                i + 1,
                set.id_str(seg.cube),
                set.id_str(entry.cube)
            )));
        }
    }
    if segs[0].map.start_value().iter().any(|x| !x.is_zero()) {
        return Err(Error::NotATrackPresentation("path must start at 𝟎 of c₁".into()));
    }
    if segs.last().unwrap().map.end_value().iter().any(|x| !x.is_one()) {
        return Err(Error::NotATrackPresentation("path must end at 𝟏 of c_l".into()));
    }
    for i in 0..segs.len() - 1 {
        let left = segs[i].map.end_value();
        let right = segs[i + 1].map.start_value();
        let (upper, lower) = (&track.entries[i].upper, &track.entries[i + 1].lower);
        if upper.iter().any(|&j| !left[j].is_one()) {
            return Err(Error::NotATrackPresentation(format!(
                "stage {}: upper-face coordinate not at 1",
                i + 1
            )));
        }
        if lower.iter().any(|&j| !right[j].is_zero()) {
            return Err(Error::NotATrackPresentation(format!(
                "stage {}: lower-face coordinate not at 0",
                i + 2
            )));
        }
        let rest_left: Vec<&Rat> = (0..left.len()).filter(|j| !upper.contains(j)).map(|j| &left[j]).collect();
        let rest_right: Vec<&Rat> =
            (0..right.len()).filter(|j| !lower.contains(j)).map(|j| &right[j]).collect();
        if rest_left != rest_right {
            return Err(Error::NotATrackPresentation(format!(
                "stage {}: interface coordinates disagree",
                i + 1
            )));
        }
    }
    Ok(())
}

/// The progress function of a path presented within a track: each action's
/// map is 0 before its first stage, follows its slot coordinate while
/// active, and is 1 afterwards.
pub fn progress_from_path(
    set: &PrecubicalSet,
    pres: &PathPresentation,
    track: &Track,
) -> Result<ProgressFunction> {
    check_track_presentation(set, pres, track)?;
    let table = action_table(set, track)?;
    let segs = pres.segments();
    let a = pres.start_time().clone();
    let b = pres.end_time().clone();
    let mut maps = Vec::with_capacity(table.len());
    for action in &table.actions {
        let mut bps: Vec<(Rat, Vec<Rat>)> = vec![(a.clone(), vec![rat::zero()])];
        let push = |bps: &mut Vec<(Rat, Vec<Rat>)>, t: &Rat, v: Rat| -> Result<()> {
            match bps.last() {
                Some((pt, pv)) if pt == t => {
                    if pv[0] != v {
                        return Err(Error::NotATrackPresentation(
                            "slot coordinates disagree across a junction".into(),
                        ));
                    }
                    Ok(())
                }
                _ => {
                    bps.push((t.clone(), vec![v]));
                    Ok(())
                }
            }
        };
        for stage in action.beg..=action.end {
            let slot = action.slot_at(stage).expect("stage in range");
            let seg = &segs[stage - 1];
            for (t, v) in seg.map.breakpoints() {
                push(&mut bps, t, v[slot].clone())?;
            }
        }
        if bps.last().unwrap().1[0] != rat::one() {
            return Err(Error::NotATrackPresentation(
                "action does not complete at its final stage".into(),
            ));
        }
        if bps.last().unwrap().0 != b {
            push(&mut bps, &b, rat::one())?;
        }
        maps.push(PLMap::new(bps)?.normalized());
    }
    ProgressFunction::new(set, track.clone(), maps)
}

/// The d-path associated to a progress function: stages are assembled on
/// the maximal intervals avoiding the supports of inactive actions.
pub fn path_from_progress(set: &PrecubicalSet, f: &ProgressFunction) -> Result<PathPresentation> {
    let (a, b) = f.domain();
    let l = f.track.entries.len();
    // a_i = latest completion among actions finished before stage i;
    // b_i = earliest start among actions not yet started at stage i.
    let mut stage_lo = vec![a.clone(); l];
    let mut stage_hi = vec![b.clone(); l];
    for i in 1..=l {
        for (k, action) in f.table.actions.iter().enumerate() {
            if action.end < i && f.supports[k].1 > stage_lo[i - 1] {
                stage_lo[i - 1] = f.supports[k].1.clone();
            }
            if action.beg > i && f.supports[k].0 < stage_hi[i - 1] {
                stage_hi[i - 1] = f.supports[k].0.clone();
            }
        }
    }
    // Covering property: consecutive stage windows overlap.
    for i in 0..l {
        let next_lo = if i + 1 < l { &stage_lo[i + 1] } else { &b };
        if next_lo > &stage_hi[i] || stage_lo[i] > stage_hi[i] {
            return Err(Error::InfeasibleProgressFunction(format!(
                "stage windows do not cover the domain at stage {}",
                i + 1
            )));
        }
    }
    let mut junctions: Vec<Rat> = Vec::with_capacity(l + 1);
    junctions.push(a.clone());
    for i in 1..l {
        let t = stage_lo[i].clone();
        let prev = junctions.last().unwrap();
        junctions.push(if &t < prev { prev.clone() } else { t });
    }
    junctions.push(b.clone());

    let mut segments = Vec::with_capacity(l);
    for i in 0..l {
        let dim = set.dim(f.track.entries[i].cube);
        let coords: Vec<PLMap> = (0..dim)
            .map(|r| {
                let action = f.table.stage_slots[i][r];
                f.maps[action].restrict(&junctions[i], &junctions[i + 1])
            })
            .collect::<Result<_>>()?;
        let map = if coords.is_empty() {
            if junctions[i] == junctions[i + 1] {
                PLMap::constant(junctions[i].clone(), Vec::new())
            } else {
                PLMap::new(vec![
                    (junctions[i].clone(), Vec::new()),
                    (junctions[i + 1].clone(), Vec::new()),
                ])?
            }
        } else {
            PLMap::zip(&coords)?
        };
        segments.push(Segment { cube: f.track.entries[i].cube, map });
    }
    // Junction agreement: both sides present the same point.
    for i in 0..l - 1 {
        let left = set.canonical_point(&Point::new(
            segments[i].cube,
            segments[i].map.end_value().to_vec(),
        ))?;
        let right = set.canonical_point(&Point::new(
            segments[i + 1].cube,
            segments[i + 1].map.start_value().to_vec(),
        ))?;
        if left != right {
            return Err(Error::InfeasibleProgressFunction(format!(
                "assembled stages disagree at junction {}",
                i + 1
            )));
        }
    }
    PathPresentation::new(set, segments)
}
