//! Tameness: deciding whether a path splits at vertices into single-cube
//! runs, and producing the strengthened tame presentation.

use num_traits::{One, Zero};

use super::plmap::PLMap;
use super::{vertex_intervals, PathPresentation, Segment};
use crate::precubical::{CubeId, FaceLetter, PrecubicalSet};
use crate::rat::{self, Rat};
use crate::{Error, Result};

/// Does the path admit a presentation whose junction points are all
/// vertices?
///
/// The path is split at every time whose canonical point is a vertex; it
/// is tame exactly when each remaining piece lies in a single cube. Lying
/// in a cube is decided exactly: over each linear piece of the input the
/// canonical carrier is constant, so a run lies in a cube `c` if and only
/// if there is a junction-consistent choice of face words of `c` realizing
/// those carriers.
pub fn is_tame(set: &PrecubicalSet, pres: &PathPresentation) -> Result<bool> {
    Ok(tame_segments(set, pres)?.is_some())
}

/// The strengthened tame presentation: every segment runs from the initial
/// to the final vertex of its cube. Fails with [`Error::NotTame`] when the
/// path is not tame.
pub fn to_tame_presentation(
    set: &PrecubicalSet,
    pres: &PathPresentation,
) -> Result<PathPresentation> {
    match tame_segments(set, pres)? {
        Some(segments) => PathPresentation::new(set, segments),
        None => Err(Error::NotTame(
            "some inter-vertex piece lies in no single cube".into(),
        )),
    }
}

/// Tame segments of the path, or `None` when some piece fits no cube.
fn tame_segments(set: &PrecubicalSet, pres: &PathPresentation) -> Result<Option<Vec<Segment>>> {
    let start = pres.start_point(set)?;
    let end = pres.end_point(set)?;
    if !start.is_vertex() || !end.is_vertex() {
        return Err(Error::InvalidArgument(
            "tameness is defined for vertex-to-vertex paths".into(),
        ));
    }
    let vert = vertex_intervals(pres);
    let a = pres.start_time().clone();
    let b = pres.end_time().clone();
    if vert.first().map(|(lo, _)| lo) != Some(&a) || vert.last().map(|(_, hi)| hi) != Some(&b) {
        return Err(Error::InvalidArgument(
            "path endpoints are not vertex times".into(),
        ));
    }
    if vert.len() == 1 {
        // Entirely at a vertex: the constant path is tame.
        let seg = Segment { cube: start.cube, map: constant_on(&a, &b, Vec::new()) };
        return Ok(Some(vec![seg]));
    }

    let mut segments: Vec<Segment> = Vec::new();
    for k in 0..vert.len() - 1 {
        let piece_start = vert[k].1.clone();
        let piece_end = vert[k + 1].0.clone();
        let u = pres.point_at(set, &piece_start)?.cube;
        let v = pres.point_at(set, &piece_end)?.cube;
        let Some(seg) = cover_piece(set, pres, &piece_start, &piece_end, u, v)? else {
            return Ok(None);
        };
        // Absorb the preceding vertex plateau as a constant 𝟎-prefix.
        let seg = if vert[k].0 < piece_start {
            let prefix = constant_on(&vert[k].0, &piece_start, seg.map.start_value().to_vec());
            Segment { cube: seg.cube, map: prefix.concat(&seg.map)? }
        } else {
            seg
        };
        // The final plateau becomes a constant 𝟏-suffix of the last piece.
        let seg = if k + 1 == vert.len() - 1 && vert[k + 1].1 > piece_end {
            let suffix = constant_on(&piece_end, &vert[k + 1].1, seg.map.end_value().to_vec());
            Segment { cube: seg.cube, map: seg.map.concat(&suffix)? }
        } else {
            seg
        };
        segments.push(seg);
    }
    Ok(Some(segments))
}

fn constant_on(lo: &Rat, hi: &Rat, value: Vec<Rat>) -> PLMap {
    if lo == hi {
        PLMap::constant(lo.clone(), value)
    } else {
        PLMap::new(vec![(lo.clone(), value.clone()), (hi.clone(), value)])
            .expect("constant map is monotone")
    }
}

/// One linear run of the clipped piece: its time interval, the constant
/// canonical carrier of the open interval, and the active coordinates as
/// (start, end) value pairs in carrier order.
struct Run {
    lo: Rat,
    hi: Rat,
    carrier: CubeId,
    active_lo: Vec<Rat>,
    active_hi: Vec<Rat>,
}

/// Try to present the piece `[lo, hi]` of the path inside a single cube
/// running from its initial vertex `u` to its final vertex `v`, as a
/// strengthened segment `[c; γ]` with `γ: 𝟎 → 𝟏`.
fn cover_piece(
    set: &PrecubicalSet,
    pres: &PathPresentation,
    lo: &Rat,
    hi: &Rat,
    u: CubeId,
    v: CubeId,
) -> Result<Option<Segment>> {
    // Cut the piece into linear runs with constant facial status.
    let mut runs: Vec<Run> = Vec::new();
    for seg in pres.segments() {
        let s = seg.map.start_time().clone();
        let e = seg.map.end_time().clone();
        let from = if &s > lo { s } else { lo.clone() };
        let to = if &e < hi { e } else { hi.clone() };
        if from >= to {
            continue;
        }
        let clipped = seg.map.restrict(&from, &to)?;
        let bps = clipped.breakpoints();
        for w in bps.windows(2) {
            let (t0, v0) = &w[0];
            let (t1, v1) = &w[1];
            let mut word = Vec::with_capacity(clipped.width());
            let mut active_lo = Vec::new();
            let mut active_hi = Vec::new();
            for j in 0..clipped.width() {
                if v0[j] == v1[j] && v0[j].is_zero() {
                    word.push(FaceLetter::Zero);
                } else if v0[j] == v1[j] && v0[j].is_one() {
                    word.push(FaceLetter::One);
                } else {
                    word.push(FaceLetter::Star);
                    active_lo.push(v0[j].clone());
                    active_hi.push(v1[j].clone());
                }
            }
            runs.push(Run {
                lo: t0.clone(),
                hi: t1.clone(),
                carrier: set.face_word(seg.cube, &word)?,
                active_lo,
                active_hi,
            });
        }
    }
    if runs.is_empty() {
        return Ok(None);
    }
    let length = {
        let len: Rat = runs
            .iter()
            .map(|r| -> Rat {
                r.active_hi.iter().sum::<Rat>() - r.active_lo.iter().sum::<Rat>()
            })
            .sum();
        if !len.is_integer() || len <= rat::zero() {
            return Ok(None);
        }
        match len.numer().to_string().parse::<usize>() {
            Ok(n) => n,
            Err(_) => return Err(Error::InvalidArgument("piece length out of range".into())),
        }
    };

    // Candidate cubes in deterministic identifier order.
    let mut candidates: Vec<CubeId> = set
        .cube_ids()
        .filter(|&c| {
            set.dim(c) == length && set.extreme_vertex(c, 0) == u && set.extreme_vertex(c, 1) == v
        })
        .collect();
    candidates.sort_by(|&x, &y| set.id_str(x).cmp(set.id_str(y)));

    'candidate: for c in candidates {
        let m = set.dim(c);
        // Per run, the face words of c realizing its carrier.
        let mut options: Vec<Vec<Vec<FaceLetter>>> = Vec::with_capacity(runs.len());
        for run in &runs {
            let words = embedding_words(set, c, run.carrier, m)?;
            if words.is_empty() {
                continue 'candidate;
            }
            options.push(words);
        }
        let mut choice: Vec<usize> = Vec::new();
        if search(&runs, &options, &mut choice) {
            let gamma = assemble(&runs, &options, &choice)?;
            return Ok(Some(Segment { cube: c, map: gamma }));
        }
    }
    Ok(None)
}

/// All `{0,1,*}`-words over the axes of `c` whose mixed face is `target`.
fn embedding_words(
    set: &PrecubicalSet,
    c: CubeId,
    target: CubeId,
    m: usize,
) -> Result<Vec<Vec<FaceLetter>>> {
    let stars = set.dim(target);
    fn rec(
        set: &PrecubicalSet,
        c: CubeId,
        target: CubeId,
        word: &mut Vec<FaceLetter>,
        pos: usize,
        stars_left: usize,
        out: &mut Vec<Vec<FaceLetter>>,
    ) {
        let m = word.len();
        if m - pos < stars_left {
            return;
        }
        if pos == m {
            if stars_left == 0 {
                if let Ok(f) = set.face_word(c, word) {
                    if f == target {
                        out.push(word.clone());
                    }
                }
            }
            return;
        }
        for letter in [FaceLetter::Zero, FaceLetter::One, FaceLetter::Star] {
            if matches!(letter, FaceLetter::Star) && stars_left == 0 {
                continue;
            }
            word[pos] = letter;
            let left = stars_left - usize::from(matches!(letter, FaceLetter::Star));
            rec(set, c, target, word, pos + 1, left, out);
        }
        word[pos] = FaceLetter::Zero;
    }
    let mut word = vec![FaceLetter::Zero; m];
    let mut out = Vec::new();
    rec(set, c, target, &mut word, 0, stars, &mut out);
    Ok(out)
}

/// The embedded coordinate vector at a run endpoint: active values at the
/// stars, the fixed letter elsewhere.
fn embed_values(word: &[FaceLetter], actives: &[Rat]) -> Vec<Rat> {
    let mut out = Vec::with_capacity(word.len());
    let mut src = actives.iter();
    for letter in word {
        out.push(match letter {
            FaceLetter::Zero => rat::zero(),
            FaceLetter::One => rat::one(),
            FaceLetter::Star => src.next().expect("star count matches actives").clone(),
        });
    }
    out
}

/// Depth-first search for a junction-consistent choice of embedding words,
/// with all-zero entry and all-one exit values.
fn search(runs: &[Run], options: &[Vec<Vec<FaceLetter>>], choice: &mut Vec<usize>) -> bool {
    let i = choice.len();
    if i == runs.len() {
        return true;
    }
    for (k, word) in options[i].iter().enumerate() {
        let start = embed_values(word, &runs[i].active_lo);
        if i == 0 {
            if start.iter().any(|x| !x.is_zero()) {
                continue;
            }
        } else {
            let prev_word = &options[i - 1][choice[i - 1]];
            let prev_end = embed_values(prev_word, &runs[i - 1].active_hi);
            if prev_end != start {
                continue;
            }
        }
        if i == runs.len() - 1 {
            let end = embed_values(word, &runs[i].active_hi);
            if end.iter().any(|x| !x.is_one()) {
                continue;
            }
        }
        choice.push(k);
        if search(runs, options, choice) {
            return true;
        }
        choice.pop();
    }
    false
}

fn assemble(runs: &[Run], options: &[Vec<Vec<FaceLetter>>], choice: &[usize]) -> Result<PLMap> {
    let mut bps: Vec<(Rat, Vec<Rat>)> = Vec::with_capacity(runs.len() + 1);
    for (i, run) in runs.iter().enumerate() {
        let word = &options[i][choice[i]];
        if i == 0 {
            bps.push((run.lo.clone(), embed_values(word, &run.active_lo)));
        }
        bps.push((run.hi.clone(), embed_values(word, &run.active_hi)));
    }
    Ok(PLMap::new(bps)?.normalized())
}
