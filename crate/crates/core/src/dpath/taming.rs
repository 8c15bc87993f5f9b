//! Tamification: the self-map that speeds actions up until every natural
//! path becomes tame, plus regularity of natural tame presentations.

use num_traits::{One, Signed, Zero};

use super::{is_natural, naturalize, path_length, vertex_times, PathPresentation, Segment};
use crate::precubical::PrecubicalSet;
use crate::rat::{self, Rat};
use crate::{Error, Result};

/// The deformation `R(t, h) = min(1, max(0, 4nt + 12n²h − 8n²))` on
/// `[0, n] × [0, 1]`. It fixes 0 and 1 in `h`, and for every fixed `h` its
/// support in `t` is an interval of length at most `1/(4n)`.
pub fn eval_r(n: u32, t: &Rat, h: &Rat) -> Rat {
    let n = rat::int(i64::from(n));
    let nn = &n * &n;
    rat::clamp01(rat::int(4) * n * t + rat::int(12) * &nn * h - rat::int(8) * nn)
}

/// The straight-line homotopy `R_s(t, h) = s·R(t, h) + (1 − s)·h` between
/// the identity (`s = 0`) and `R` (`s = 1`).
pub fn eval_r_s(n: u32, s: &Rat, t: &Rat, h: &Rat) -> Rat {
    s * eval_r(n, t, h) + (rat::one() - s) * h
}

/// Tamify a start-to-end path of positive integer length `n`: naturalize,
/// apply `R` coordinatewise, naturalize again. The output is a natural
/// tame path whose vertex times include those of the naturalized input.
pub fn tamify(set: &PrecubicalSet, pres: &PathPresentation) -> Result<PathPresentation> {
    let len = path_length(pres);
    if len.is_zero() {
        let s = pres.start_point(set)?;
        let e = pres.end_point(set)?;
        if s == e {
            return Ok(pres.clone());
        }
        return Err(Error::WrongLength("constant path with distinct endpoints".into()));
    }
    if !len.is_integer() || len.is_negative() {
        return Err(Error::WrongLength(format!(
            "length {} is not a positive integer",
            rat::format(&len)
        )));
    }
    let n: u32 = len
        .numer()
        .to_string()
        .parse()
        .map_err(|_| Error::WrongLength("length too large".into()))?;
    let natural = naturalize(pres);
    let nr = rat::int(i64::from(n));
    let p = rat::int(4) * &nr;
    let q = rat::int(12) * &nr * &nr;
    let r = rat::int(-8) * &nr * &nr;
    let deformed: Vec<Segment> = natural
        .segments()
        .iter()
        .map(|seg| Segment { cube: seg.cube, map: seg.map.clamp01_affine(&p, &q, &r) })
        .collect();
    let omega = PathPresentation::new(set, deformed)?;
    Ok(naturalize(&omega))
}

/// Validate a natural tame presentation: natural parametrization on a
/// domain starting at 0, every segment running from the initial to the
/// final vertex of its cube.
pub(crate) fn require_nt(set: &PrecubicalSet, pres: &PathPresentation) -> Result<()> {
    if !is_natural(pres) {
        return Err(Error::NotNaturalTame("presentation is not natural".into()));
    }
    if !pres.start_time().is_zero() {
        return Err(Error::NotNaturalTame("natural domain must start at 0".into()));
    }
    for seg in pres.segments() {
        if seg.map.start_value().iter().any(|x| !x.is_zero())
            || seg.map.end_value().iter().any(|x| !x.is_one())
        {
            return Err(Error::NotNaturalTame(format!(
                "segment in {:?} does not run 𝟎 → 𝟏",
                set.id_str(seg.cube)
            )));
        }
    }
    Ok(())
}

/// Is the natural tame presentation regular: does every segment pass
/// through a point with all coordinates strictly inside (0, 1)?
///
/// Coordinates are monotone and piecewise linear, so it suffices to test
/// all breakpoints and all midpoints of consecutive breakpoints.
pub fn is_regular(set: &PrecubicalSet, pres: &PathPresentation) -> Result<bool> {
    require_nt(set, pres)?;
    let interior = |v: &[Rat]| v.iter().all(|x| x.is_positive() && *x < rat::one());
    for seg in pres.segments() {
        if seg.map.width() == 0 {
            return Ok(false);
        }
        let bps = seg.map.breakpoints();
        let mut found = bps.iter().any(|(_, v)| interior(v));
        if !found {
            for w in bps.windows(2) {
                let mid = rat::midpoint(&w[0].0, &w[1].0);
                if interior(&seg.map.eval(&mid)?) {
                    found = true;
                    break;
                }
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Iterate tamification until the vertex set stabilizes (at most `n`
/// steps), then return the minimal presentation of the stable path, which
/// is regular.
pub fn regularize(set: &PrecubicalSet, pres: &PathPresentation) -> Result<PathPresentation> {
    require_nt(set, pres)?;
    let len = path_length(pres);
    if len.is_zero() {
        return Ok(pres.clone());
    }
    let budget: usize = len
        .numer()
        .to_string()
        .parse()
        .map_err(|_| Error::WrongLength("length too large".into()))?;
    let mut cur = pres.clone();
    let mut vert = vertex_times(&cur)?;
    for _ in 0..=budget {
        let next = tamify(set, &cur)?;
        let next_vert = vertex_times(&next)?;
        debug_assert!(
            vert.iter().all(|t| next_vert.contains(t)),
            "vertex times must grow monotonically"
        );
        if next_vert == vert {
            let (_, minimal) = super::minimal_presentation(set, &cur)?;
            return Ok(minimal);
        }
        cur = next;
        vert = next_vert;
    }
    Err(Error::InvalidArgument(
        "tamification failed to stabilize within the length bound".into(),
    ))
}
