//! Generators for standard bi-pointed pre-cubical sets.
//!
//! All generators return validated sets, bi-pointed at their natural
//! extreme vertices.

use super::{CubeRecord, PrecubicalSet};
use crate::{Error, Result};

/// Cubes of the standard cube family are `{0,1,*}`-words; `d^ε_i` turns the
/// i-th `*` into `ε`.
fn word_faces(word: &str) -> (Vec<String>, Vec<String>) {
    let mut d0 = Vec::new();
    let mut d1 = Vec::new();
    for (pos, ch) in word.char_indices() {
        if ch == '*' {
            let mut w0: Vec<char> = word.chars().collect();
            w0[pos] = '0';
            d0.push(w0.iter().collect());
            let mut w1: Vec<char> = word.chars().collect();
            w1[pos] = '1';
            d1.push(w1.iter().collect());
        }
    }
    (d0, d1)
}

fn all_words(n: usize) -> Vec<String> {
    let mut words = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(words.len() * 3);
        for w in &words {
            for ch in ['0', '1', '*'] {
                let mut e = w.clone();
                e.push(ch);
                next.push(e);
            }
        }
        words = next;
    }
    words
}

fn word_record(word: &str) -> CubeRecord {
    let (d0, d1) = word_faces(word);
    CubeRecord {
        id: word.to_string(),
        dim: word.chars().filter(|&c| c == '*').count(),
        d0,
        d1,
    }
}

/// The standard n-cube `□ⁿ` on `{0,1,*}`-words.
pub fn standard_cube(n: usize) -> PrecubicalSet {
    let records: Vec<CubeRecord> = all_words(n).iter().map(|w| word_record(w)).collect();
    let start = "0".repeat(n);
    let end = "1".repeat(n);
    PrecubicalSet::from_records(Some(format!("cube{n}")), records, &start, &end)
        .expect("generator is well-formed")
}

/// The boundary `∂□ⁿ`: the (n−1)-skeleton of the standard n-cube.
pub fn boundary_cube(n: usize) -> PrecubicalSet {
    assert!(n >= 1, "boundary of a vertex is empty");
    let records: Vec<CubeRecord> = all_words(n)
        .iter()
        .filter(|w| w.chars().any(|c| c != '*'))
        .map(|w| word_record(w))
        .collect();
    let start = "0".repeat(n);
    let end = "1".repeat(n);
    PrecubicalSet::from_records(Some(format!("boundary{n}")), records, &start, &end)
        .expect("generator is well-formed")
}

/// The wedge `□^∨𝐧`: standard cubes joined end to start, identifying the
/// final vertex of each summand with the initial vertex of the next. The
/// shared vertices are named `v0, …, vl`; every other cube of the i-th
/// summand (1-based) is prefixed `i:`.
pub fn wedge(parts: &[usize]) -> PrecubicalSet {
    assert!(!parts.is_empty() && parts.iter().all(|&p| p > 0));
    let rename = |summand: usize, word: &str| -> String {
        if word.chars().all(|c| c == '0') {
            format!("v{}", summand - 1)
        } else if word.chars().all(|c| c == '1') {
            format!("v{summand}")
        } else {
            format!("{summand}:{word}")
        }
    };
    let mut records = Vec::new();
    for (k, &n_i) in parts.iter().enumerate() {
        let summand = k + 1;
        for word in all_words(n_i) {
            if summand > 1 && word.chars().all(|c| c == '0') {
                continue; // identified with v{summand-1}, already emitted
            }
            let (d0, d1) = word_faces(&word);
            records.push(CubeRecord {
                id: rename(summand, &word),
                dim: word.chars().filter(|&c| c == '*').count(),
                d0: d0.iter().map(|w| rename(summand, w)).collect(),
                d1: d1.iter().map(|w| rename(summand, w)).collect(),
            });
        }
    }
    let end = format!("v{}", parts.len());
    PrecubicalSet::from_records(Some(format!("wedge{parts:?}")), records, "v0", &end)
        .expect("generator is well-formed")
}

/// An axis-aligned integer box, given per axis as `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBox {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl GridBox {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        GridBox { lo, hi }
    }
}

/// The Euclidean grid complex on `∏ [0, Nᵢ]`, omitting every cube whose
/// closed carrier box intersects the open interior of a forbidden box.
///
/// Cube identifiers name the carrier box per axis: `"2-3,4"` is the edge
/// `[2,3] × {4}`.
pub fn grid_complex(extents: &[u32], forbidden: &[GridBox]) -> Result<PrecubicalSet> {
    if extents.is_empty() || extents.iter().any(|&n| n == 0) {
        return Err(Error::InvalidArgument("extents must be positive".into()));
    }
    let d = extents.len();
    for b in forbidden {
        if b.lo.len() != d {
            return Err(Error::InvalidArgument(format!(
                "forbidden box of arity {} in a {d}-axis grid",
                b.lo.len()
            )));
        }
    }
    // A cube is (base, dirs): carrier [base_i, base_i + dirs_i] per axis.
    let removed = |base: &[i64], dirs: &[bool]| -> bool {
        forbidden.iter().any(|b| {
            (0..d).all(|i| {
                let lo = base[i];
                let hi = base[i] + i64::from(dirs[i]);
                // closed [lo, hi] meets open (b.lo, b.hi): empty when the
                // box has no interior on some axis
                b.lo[i] < b.hi[i] && lo < b.hi[i] && hi > b.lo[i]
            })
        })
    };
    let id_of = |base: &[i64], dirs: &[bool]| -> String {
        (0..d)
            .map(|i| {
                if dirs[i] {
                    format!("{}-{}", base[i], base[i] + 1)
                } else {
                    format!("{}", base[i])
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    };
    let mut records = Vec::new();
    let mut base = vec![0i64; d];
    let mut dirs = vec![false; d];
    // Enumerate all (base, dirs) with base_i + dirs_i <= N_i.
    fn walk(
        axis: usize,
        d: usize,
        extents: &[u32],
        base: &mut Vec<i64>,
        dirs: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[i64], &[bool]),
    ) {
        if axis == d {
            visit(base, dirs);
            return;
        }
        for b in 0..=i64::from(extents[axis]) {
            base[axis] = b;
            for dir in [false, true] {
                if dir && b == i64::from(extents[axis]) {
                    continue;
                }
                dirs[axis] = dir;
                walk(axis + 1, d, extents, base, dirs, visit);
            }
        }
    }
    walk(0, d, extents, &mut base, &mut dirs, &mut |base, dirs| {
        if removed(base, dirs) {
            return;
        }
        let dim = dirs.iter().filter(|&&x| x).count();
        let mut d0 = Vec::with_capacity(dim);
        let mut d1 = Vec::with_capacity(dim);
        for i in 0..d {
            if !dirs[i] {
                continue;
            }
            let mut fd = dirs.to_vec();
            fd[i] = false;
            d0.push(id_of(base, &fd));
            let mut fb = base.to_vec();
            fb[i] += 1;
            d1.push(id_of(&fb, &fd));
        }
        records.push(CubeRecord { id: id_of(base, dirs), dim, d0, d1 });
    });
    let origin = vec!["0"; d].join(",");
    let corner = extents.iter().map(|n| n.to_string()).collect::<Vec<_>>().join(",");
    let set = PrecubicalSet::from_records(Some("grid".into()), records, &origin, &corner)
        .map_err(|_| {
            Error::InvalidArgument(
                "forbidden boxes remove the start or end vertex".into(),
            )
        })?;
    Ok(set)
}

/// Two 3-cubes glued along their whole boundaries. The 3-cubes are named
/// `A` and `B`; the shared boundary keeps the `∂□³` word names.
pub fn double_cube() -> PrecubicalSet {
    let mut records: Vec<CubeRecord> = all_words(3)
        .iter()
        .filter(|w| w.chars().any(|c| c != '*'))
        .map(|w| word_record(w))
        .collect();
    let (d0, d1) = word_faces("***");
    for id in ["A", "B"] {
        records.push(CubeRecord { id: id.into(), dim: 3, d0: d0.clone(), d1: d1.clone() });
    }
    PrecubicalSet::from_records(Some("double-cube".into()), records, "000", "111")
        .expect("generator is well-formed")
}
