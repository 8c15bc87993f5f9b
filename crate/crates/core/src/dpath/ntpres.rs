//! Minimal natural tame presentations and their comparison.

use num_traits::{One, Zero};

use super::taming::{is_regular, require_nt};
use super::{paths_pointwise_equal, vertex_times, PathPresentation, Segment};
use crate::chains::CubeChain;
use crate::precubical::PrecubicalSet;
use crate::{Error, Result};

/// Split a natural tame presentation at every vertex time of the path that
/// is not already a junction, producing the minimal presentation: the one
/// whose chain has exactly the path's vertex times.
pub fn minimal_presentation(
    set: &PrecubicalSet,
    pres: &PathPresentation,
) -> Result<(CubeChain, PathPresentation)> {
    require_nt(set, pres)?;
    let mut segments: Vec<Segment> = Vec::new();
    for seg in pres.segments() {
        split_segment(set, seg, &mut segments)?;
    }
    // Junction times now match the vertex times of the path exactly.
    let segments: Vec<Segment> = segments
        .into_iter()
        .map(|s| Segment { cube: s.cube, map: s.map.normalized() })
        .collect();
    let chain = CubeChain { cubes: segments.iter().map(|s| s.cube).collect() };
    let out = PathPresentation::new(set, segments)?;
    debug_assert_eq!(
        vertex_times(&out).unwrap(),
        {
            let t = chain.chain_type(set);
            t.vertices().iter().map(|&k| crate::rat::int(k as i64)).collect::<Vec<_>>()
        },
        "minimal presentation must realize exactly the path's vertex times"
    );
    Ok((chain, out))
}

/// Recursively split one tame segment at its first interior vertex time.
fn split_segment(set: &PrecubicalSet, seg: &Segment, out: &mut Vec<Segment>) -> Result<()> {
    let bps = seg.map.breakpoints();
    let lo = seg.map.start_time().clone();
    let hi = seg.map.end_time().clone();
    // Interior vertex time: all coordinates in {0,1} strictly between the
    // segment endpoints. On a natural segment such times are breakpoints
    // (every coordinate's last-zero and first-one time is a breakpoint).
    let interior_vertex = bps
        .iter()
        .find(|(t, v)| t > &lo && t < &hi && v.iter().all(|x| x.is_zero() || x.is_one()));
    let Some((k, at_k)) = interior_vertex.map(|(t, v)| (t.clone(), v.clone())) else {
        out.push(seg.clone());
        return Ok(());
    };
    let ones: Vec<usize> = (0..at_k.len()).filter(|&j| at_k[j].is_one()).collect();
    let zeros: Vec<usize> = (0..at_k.len()).filter(|&j| at_k[j].is_zero()).collect();
    // Left part: the zero coordinates are frozen at 0 up to k.
    let left_cube = set.iterated_face(seg.cube, &zeros, 0)?;
    let left_map = seg.map.restrict(&lo, &k)?.drop_coords(&zeros);
    out.push(Segment { cube: left_cube, map: left_map });
    // Right part: the one coordinates are frozen at 1 from k on; recurse
    // for further interior vertex times.
    let right_cube = set.iterated_face(seg.cube, &ones, 1)?;
    let right_map = seg.map.restrict(&k, &hi)?.drop_coords(&ones);
    split_segment(set, &Segment { cube: right_cube, map: right_map }, out)
}

/// Result of comparing two natural tame presentations of one path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    NotEquivalent,
    Undecided,
}

/// Decide equivalence of two natural tame presentations of the same path
/// by comparing their minimal presentations. Unequal minimal presentations
/// decide non-equivalence only for regular paths or when the caller
/// asserts the set embeds in a standard cube; otherwise the answer is
/// `Undecided`.
pub fn presentations_equivalent(
    set: &PrecubicalSet,
    p1: &PathPresentation,
    p2: &PathPresentation,
    embedded_in_cube: bool,
) -> Result<Equivalence> {
    require_nt(set, p1)?;
    require_nt(set, p2)?;
    if !paths_pointwise_equal(set, p1, p2)? {
        return Err(Error::DifferentPaths(
            "presentations trace different paths".into(),
        ));
    }
    let (c1, m1) = minimal_presentation(set, p1)?;
    let (c2, m2) = minimal_presentation(set, p2)?;
    if c1 == c2 && presentations_identical(&m1, &m2) {
        return Ok(Equivalence::Equivalent);
    }
    if embedded_in_cube {
        return Ok(Equivalence::NotEquivalent);
    }
    if is_regular(set, &m1)? || is_regular(set, &m2)? {
        return Ok(Equivalence::NotEquivalent);
    }
    Ok(Equivalence::Undecided)
}

fn presentations_identical(a: &PathPresentation, b: &PathPresentation) -> bool {
    a.segments().len() == b.segments().len()
        && a.segments().iter().zip(b.segments()).all(|(x, y)| {
            x.cube == y.cube && x.map.normalized() == y.map.normalized()
        })
}
