//! Actions of a track: equivalence classes of per-stage coordinates.
//!
//! A local action is a pair (stage, slot). Slots not finishing at a stage
//! continue into the next stage through the complement bijection; the
//! classes of the generated equivalence are the actions of the track.

use super::track::Track;
use crate::precubical::PrecubicalSet;
use crate::{Error, Result};

/// Identifier of an action: its first stage and slot there (both 1-based
/// in the text form `a<stage>.<slot>`).
pub type ActionId = String;

/// One action: the contiguous range of stages where it is active and its
/// slot at each of those stages.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub id: ActionId,
    /// First active stage, 1-based.
    pub beg: usize,
    /// Last active stage, 1-based.
    pub end: usize,
    /// Slot (0-based axis) at stage `beg + k`.
    pub slots: Vec<usize>,
}

impl Action {
    /// Slot of this action at a 1-based stage, if active there.
    pub fn slot_at(&self, stage: usize) -> Option<usize> {
        if stage < self.beg || stage > self.end {
            return None;
        }
        Some(self.slots[stage - self.beg])
    }
}

/// The set of actions of a track, with per-stage slot assignments.
#[derive(Debug, Clone)]
pub struct ActionTable {
    pub actions: Vec<Action>,
    /// `stage_slots[i][r]` = index into `actions` of the action occupying
    /// slot `r` at stage `i+1`.
    pub stage_slots: Vec<Vec<usize>>,
}

impl ActionTable {
    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    /// Actions finished before the 1-based stage `i`.
    pub fn finished_at(&self, i: usize) -> impl Iterator<Item = &Action> {
        self.actions.iter().filter(move |a| a.end < i)
    }

    /// Actions active at the 1-based stage `i`.
    pub fn active_at(&self, i: usize) -> impl Iterator<Item = &Action> {
        self.actions.iter().filter(move |a| a.beg <= i && i <= a.end)
    }

    /// Actions not yet started at the 1-based stage `i`.
    pub fn unstarted_at(&self, i: usize) -> impl Iterator<Item = &Action> {
        self.actions.iter().filter(move |a| a.beg > i)
    }
}

fn complement(axes: &[usize], dim: usize) -> Vec<usize> {
    (0..dim).filter(|i| !axes.contains(i)).collect()
}

/// Compute the action table of a valid track.
pub fn action_table(set: &PrecubicalSet, track: &Track) -> Result<ActionTable> {
    let l = track.entries.len();
    let dims: Vec<usize> = track.entries.iter().map(|e| set.dim(e.cube)).collect();
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0usize, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();

    // Union-find over local actions (stage, slot) ↦ offset + slot.
    let mut parent: Vec<usize> = (0..total).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..l.saturating_sub(1) {
        let upper_bar = complement(&track.entries[i].upper, dims[i]);
        let lower_bar = complement(&track.entries[i + 1].lower, dims[i + 1]);
        if upper_bar.len() != lower_bar.len() {
            return Err(Error::InvalidArgument(format!(
                "track stage {} has mismatched interface dimensions",
                i + 1
            )));
        }
        for (b, a) in upper_bar.iter().zip(&lower_bar) {
            let x = find(&mut parent, offsets[i] + b);
            let y = find(&mut parent, offsets[i + 1] + a);
            parent[y] = x;
        }
    }

    let mut members: std::collections::HashMap<usize, Vec<(usize, usize)>> =
        std::collections::HashMap::new();
    for i in 0..l {
        for r in 0..dims[i] {
            let root = find(&mut parent, offsets[i] + r);
            members.entry(root).or_default().push((i + 1, r));
        }
    }

    let mut actions: Vec<Action> = Vec::with_capacity(members.len());
    for (_, mut locs) in members {
        locs.sort();
        let beg = locs[0].0;
        let end = locs.last().unwrap().0;
        if locs.len() != end - beg + 1
            || locs.iter().enumerate().any(|(k, (s, _))| *s != beg + k)
        {
            return Err(Error::InvalidArgument(
                "action active at non-contiguous stages".into(),
            ));
        }
        let slots: Vec<usize> = locs.iter().map(|(_, r)| *r).collect();
        actions.push(Action {
            id: format!("a{beg}.{}", slots[0] + 1),
            beg,
            end,
            slots,
        });
    }
    actions.sort_by_key(|a| (a.beg, a.slots[0]));

    let mut stage_slots: Vec<Vec<usize>> = dims.iter().map(|&d| vec![usize::MAX; d]).collect();
    for (idx, a) in actions.iter().enumerate() {
        for (k, &slot) in a.slots.iter().enumerate() {
            let stage = a.beg + k - 1; // 0-based
            if stage_slots[stage][slot] != usize::MAX {
                return Err(Error::InvalidArgument("slot occupied twice".into()));
            }
            stage_slots[stage][slot] = idx;
        }
    }
    if stage_slots.iter().flatten().any(|&x| x == usize::MAX) {
        return Err(Error::InvalidArgument("stage slot left unassigned".into()));
    }

    // Boundary consistency: an action begins at a lower-face slot and ends
    // at an upper-face slot of its stage cube. Both are theorems for valid
    // tracks (the first lower set is forcibly full).
    for a in &actions {
        let first = &track.entries[a.beg - 1];
        let last = &track.entries[a.end - 1];
        debug_assert!(first.lower.contains(&a.slots[0]));
        debug_assert!(last.upper.contains(a.slots.last().unwrap()));
    }

    Ok(ActionTable { actions, stage_slots })
}
