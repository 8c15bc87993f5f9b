//! External JSON formats for paths, tracks and progress functions.
//!
//! Rationals are integers or `"p/q"` strings on input and lowest-terms
//! strings on output. Track axis sets are 1-based.

use serde_json::{json, Value};

use super::plmap::PLMap;
use super::progress::ProgressFunction;
use super::track::{Track, TrackEntry};
use super::{PathPresentation, Segment};
use crate::precubical::PrecubicalSet;
use crate::rat;
use crate::{Error, Result};

/// Parse `{ "segments": [ { "cube": str, "breakpoints": [[t, [x…]]…] } … ] }`.
pub fn path_from_json(set: &PrecubicalSet, v: &Value) -> Result<PathPresentation> {
    let segments = v
        .get("segments")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("path JSON needs a \"segments\" array".into()))?;
    let mut out = Vec::with_capacity(segments.len());
    for seg in segments {
        let cube_id = seg
            .get("cube")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("segment needs a \"cube\" string".into()))?;
        let cube = set
            .by_id(cube_id)
            .ok_or_else(|| Error::Parse(format!("unknown cube {cube_id:?}")))?;
        let bps = seg
            .get("breakpoints")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("segment needs a \"breakpoints\" array".into()))?;
        let mut parsed = Vec::with_capacity(bps.len());
        for bp in bps {
            let pair = bp
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| Error::Parse("breakpoint must be [time, [coords…]]".into()))?;
            let t = rat::from_json(&pair[0])?;
            let coords = pair[1]
                .as_array()
                .ok_or_else(|| Error::Parse("breakpoint coordinates must be an array".into()))?
                .iter()
                .map(rat::from_json)
                .collect::<Result<Vec<_>>>()?;
            parsed.push((t, coords));
        }
        out.push(Segment { cube, map: PLMap::new(parsed)? });
    }
    PathPresentation::new(set, out)
}

/// Emit a path presentation.
pub fn path_to_json(set: &PrecubicalSet, pres: &PathPresentation) -> Value {
    let segments: Vec<Value> = pres
        .segments()
        .iter()
        .map(|seg| {
            let bps: Vec<Value> = seg
                .map
                .breakpoints()
                .iter()
                .map(|(t, v)| {
                    json!([rat::to_json(t), v.iter().map(rat::to_json).collect::<Vec<_>>()])
                })
                .collect();
            json!({ "cube": set.id_str(seg.cube), "breakpoints": bps })
        })
        .collect();
    json!({ "segments": segments })
}

/// Parse `{ "entries": [ { "cube": str, "A": [int…], "B": [int…] } … ] }`
/// with 1-based axis indices.
pub fn track_from_json(set: &PrecubicalSet, v: &Value) -> Result<Track> {
    let entries = v
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("track JSON needs an \"entries\" array".into()))?;
    let mut out = Vec::with_capacity(entries.len());
    for e in entries {
        let cube_id = e
            .get("cube")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("track entry needs a \"cube\" string".into()))?;
        let cube = set
            .by_id(cube_id)
            .ok_or_else(|| Error::Parse(format!("unknown cube {cube_id:?}")))?;
        let axes = |key: &str| -> Result<Vec<usize>> {
            let arr = e
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("track entry needs \"{key}\"")))?;
            arr.iter()
                .map(|x| {
                    x.as_u64()
                        .filter(|&i| i >= 1)
                        .map(|i| (i - 1) as usize)
                        .ok_or_else(|| Error::Parse("axis indices are 1-based integers".into()))
                })
                .collect()
        };
        out.push(TrackEntry { cube, lower: axes("A")?, upper: axes("B")? });
    }
    Ok(Track { entries: out })
}

/// Emit a track with 1-based axis indices.
pub fn track_to_json(set: &PrecubicalSet, track: &Track) -> Value {
    let entries: Vec<Value> = track
        .entries
        .iter()
        .map(|e| {
            json!({
                "cube": set.id_str(e.cube),
                "A": e.lower.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "B": e.upper.iter().map(|i| i + 1).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "entries": entries })
}

/// Emit a progress function: the track plus one breakpoint list per action.
pub fn progress_to_json(set: &PrecubicalSet, f: &ProgressFunction) -> Value {
    let actions: Vec<Value> = f
        .table
        .actions
        .iter()
        .zip(&f.maps)
        .map(|(a, m)| {
            let bps: Vec<Value> = m
                .breakpoints()
                .iter()
                .map(|(t, v)| json!([rat::to_json(t), rat::to_json(&v[0])]))
                .collect();
            json!({
                "action": a.id,
                "beg": a.beg,
                "end": a.end,
                "breakpoints": bps,
            })
        })
        .collect();
    json!({ "track": track_to_json(set, &f.track), "actions": actions })
}
