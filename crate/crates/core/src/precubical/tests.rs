use super::*;
use crate::rat::{frac, int};

/// Independent oracle: face maps of `□ⁿ` on `{0,1,*}`-words, computed
/// directly from the definition (the i-th `*` becomes `ε`).
fn oracle_word_face(word: &str, i_1based: usize, eps: u8) -> String {
    let mut stars_seen = 0;
    let mut out: Vec<char> = word.chars().collect();
    for (pos, ch) in word.char_indices() {
        if ch == '*' {
            stars_seen += 1;
            if stars_seen == i_1based {
                out[pos] = if eps == 0 { '0' } else { '1' };
                return out.iter().collect();
            }
        }
    }
    panic!("index {i_1based} out of range for {word}");
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

#[test]
fn standard_cube_counts() {
    for n in 0..=4 {
        let set = standard_cube(n);
        assert!(set.validate().is_empty());
        let counts = set.counts_by_dim();
        for (k, &count) in counts.iter().enumerate() {
            assert_eq!(count, binomial(n, k) << (n - k), "n={n} k={k}");
        }
    }
    assert_eq!(standard_cube(0).counts_by_dim(), vec![1]);
    assert_eq!(standard_cube(2).counts_by_dim(), vec![4, 4, 1]);
    assert_eq!(standard_cube(3).counts_by_dim(), vec![8, 12, 6, 1]);
}

#[test]
fn boundary_cube_counts() {
    assert_eq!(boundary_cube(1).counts_by_dim(), vec![2]);
    assert_eq!(boundary_cube(2).counts_by_dim(), vec![4, 4]);
    assert_eq!(boundary_cube(3).counts_by_dim(), vec![8, 12, 6]);
    assert!(boundary_cube(3).validate().is_empty());
}

#[test]
fn wedge_counts() {
    let w11 = wedge(&[1, 1]);
    assert!(w11.validate().is_empty());
    assert_eq!(w11.counts_by_dim(), vec![3, 2]);

    let w2 = wedge(&[2]);
    assert_eq!(w2.counts_by_dim(), standard_cube(2).counts_by_dim());

    let w21 = wedge(&[2, 1]);
    assert!(w21.validate().is_empty());
    assert_eq!(w21.counts_by_dim()[0], 5);
}

#[test]
fn grid_basic() {
    let unit = grid_complex(&[1, 1], &[]).unwrap();
    assert!(unit.validate().is_empty());
    assert_eq!(unit.counts_by_dim(), vec![4, 4, 1]);

    let path = grid_complex(&[2], &[]).unwrap();
    assert_eq!(path.counts_by_dim(), vec![3, 2]);
    assert_eq!(path.id_str(path.start()), "0");
    assert_eq!(path.id_str(path.end()), "2");
}

/// Independent oracle for the grid-with-forbidden-boxes square count:
/// enumerate unit squares directly and test the closed-carrier /
/// open-interior intersection per axis.
fn oracle_surviving_squares(n: i64, boxes: &[([i64; 2], [i64; 2])]) -> usize {
    let mut alive = 0;
    for x in 0..n {
        for y in 0..n {
            let meets = boxes.iter().any(|(bx, by)| {
                bx[0] < bx[1]
                    && by[0] < by[1]
                    && x < bx[1]
                    && x + 1 > bx[0]
                    && y < by[1]
                    && y + 1 > by[0]
            });
            if !meets {
                alive += 1;
            }
        }
    }
    alive
}

#[test]
fn grid_forbidden_boxes() {
    // The boxes [1,2]×[2,4] and [2,4]×[1,2]: the open interiors of these
    // thin bars meet 2 + 2 unit squares, leaving 21 of the 25.
    let boxes = [([1, 2], [2, 4]), ([2, 4], [1, 2])];
    let expected = oracle_surviving_squares(5, &boxes);
    assert_eq!(expected, 21);
    let set = grid_complex(
        &[5, 5],
        &[
            GridBox::new(vec![1, 2], vec![2, 4]),
            GridBox::new(vec![2, 1], vec![4, 2]),
        ],
    )
    .unwrap();
    assert!(set.validate().is_empty());
    assert_eq!(set.counts_by_dim()[2], expected);

    // The Swiss-flag cross: two overlapping bars removing 5 squares.
    let cross = [([1, 4], [2, 3]), ([2, 3], [1, 4])];
    assert_eq!(oracle_surviving_squares(5, &cross), 20);
    let flag = grid_complex(
        &[5, 5],
        &[
            GridBox::new(vec![1, 2], vec![4, 3]),
            GridBox::new(vec![2, 1], vec![3, 4]),
        ],
    )
    .unwrap();
    assert!(flag.validate().is_empty());
    assert_eq!(flag.counts_by_dim()[2], 20);

    // Degenerate boxes have empty interior and forbid nothing.
    let noop = grid_complex(&[2, 2], &[GridBox::new(vec![1, 0], vec![1, 2])]).unwrap();
    assert_eq!(noop.counts_by_dim(), grid_complex(&[2, 2], &[]).unwrap().counts_by_dim());
}

#[test]
fn double_cube_shape() {
    let set = double_cube();
    assert!(set.validate().is_empty());
    assert_eq!(set.counts_by_dim(), vec![8, 12, 6, 2]);
    let a = set.by_id("A").unwrap();
    let b = set.by_id("B").unwrap();
    assert_eq!(set.extreme_vertex(a, 0), set.extreme_vertex(b, 0));
    assert_eq!(set.extreme_vertex(a, 1), set.extreme_vertex(b, 1));
    assert_eq!(set.extreme_vertex(a, 0), set.start());
}

#[test]
fn validate_detects_dimension_violation() {
    // A 2-cube whose d0 list points to another 2-cube.
    let mut records: Vec<CubeRecord> = Vec::new();
    let sq = standard_cube(2);
    for c in sq.cube_ids() {
        let cube = sq.cube(c);
        records.push(CubeRecord {
            id: cube.id.clone(),
            dim: cube.dim,
            d0: cube.d0.iter().map(|&f| sq.id_str(f).to_string()).collect(),
            d1: cube.d1.iter().map(|&f| sq.id_str(f).to_string()).collect(),
        });
    }
    records.push(CubeRecord {
        id: "bad".into(),
        dim: 2,
        d0: vec!["**".into(), "*0".into()],
        d1: vec!["1*".into(), "*1".into()],
    });
    let set = PrecubicalSet::from_records(None, records, "00", "11").unwrap();
    let violations = set.validate();
    assert_eq!(violations.len(), 1);
    assert!(matches!(
        &violations[0],
        Violation::FaceDimension { cube, i: 1, eps: 0, face, face_dim: 2 }
            if cube == "bad" && face == "**"
    ));
}

#[test]
fn validate_detects_identity_violation() {
    let sq = standard_cube(2);
    let mut records: Vec<CubeRecord> = sq
        .cube_ids()
        .map(|c| {
            let cube = sq.cube(c);
            let mut d0: Vec<String> =
                cube.d0.iter().map(|&f| sq.id_str(f).to_string()).collect();
            if cube.id == "**" {
                d0.swap(0, 1);
            }
            CubeRecord {
                id: cube.id.clone(),
                dim: cube.dim,
                d0,
                d1: cube.d1.iter().map(|&f| sq.id_str(f).to_string()).collect(),
            }
        })
        .collect();
    records.rotate_left(1);
    let set = PrecubicalSet::from_records(None, records, "00", "11").unwrap();
    let violations = set.validate();
    assert!(!violations.is_empty());
    assert!(violations
        .iter()
        .all(|v| matches!(v, Violation::Identity { cube, .. } if cube == "**")));
}

#[test]
fn iterated_face_examples() {
    let sq = standard_cube(2);
    let u2 = sq.by_id("**").unwrap();
    assert_eq!(sq.iterated_face(u2, &[0, 1], 0).unwrap(), sq.start());

    let cube = standard_cube(3);
    let u3 = cube.by_id("***").unwrap();
    assert_eq!(cube.iterated_face(u3, &[], 1).unwrap(), u3);

    // d⁰_{1,3}(u₃): oracle = two direct word-face applications. Applying
    // d⁰_3 then d⁰_1 (star positions in the intermediate word shift).
    let once = oracle_word_face("***", 3, 0);
    let twice = oracle_word_face(&once, 1, 0);
    assert_eq!(twice, "0*0");
    let got = cube.iterated_face(u3, &[0, 2], 0).unwrap();
    assert_eq!(cube.id_str(got), twice);
}

#[test]
fn iterated_face_order_independent() {
    // Apply single faces in every order, shifting indices as axes vanish,
    // and compare with the canonical evaluation.
    let cube = standard_cube(4);
    let u4 = cube.by_id("****").unwrap();
    let axes4: Vec<usize> = (0..4).collect();
    for eps in [0u8, 1u8] {
        for a in 0..4usize {
            for b in 0..4usize {
                for c in 0..4usize {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    let expected = {
                        let mut sorted = vec![a, b, c];
                        sorted.sort_unstable();
                        cube.iterated_face(u4, &sorted, eps).unwrap()
                    };
                    let mut remaining = axes4.clone();
                    let mut cur = u4;
                    for &axis in &[a, b, c] {
                        let pos = remaining.iter().position(|&x| x == axis).unwrap();
                        cur = cube.face(cur, pos, eps).unwrap();
                        remaining.remove(pos);
                    }
                    assert_eq!(cur, expected);
                }
            }
        }
    }
}

#[test]
fn extreme_vertex_examples() {
    let sq = standard_cube(2);
    let u2 = sq.by_id("**").unwrap();
    assert_eq!(sq.extreme_vertex(u2, 0), sq.start());
    let v = sq.by_id("01").unwrap();
    assert_eq!(sq.extreme_vertex(v, 1), v);

    let grid = grid_complex(&[5, 5], &[]).unwrap();
    let cell = grid.by_id("2-3,4-5").unwrap();
    let top = grid.extreme_vertex(cell, 1);
    assert_eq!(grid.id_str(top), "3,5");
}

#[test]
fn canonical_point_examples() {
    let sq = standard_cube(2);
    let u2 = sq.by_id("**").unwrap();

    let p = Point::new(u2, vec![int(1), frac(1, 2)]);
    let c = sq.canonical_point(&p).unwrap();
    assert_eq!(sq.id_str(c.cube), "1*");
    assert_eq!(c.coords, vec![frac(1, 2)]);

    let already = Point::new(u2, vec![frac(1, 3), frac(2, 3)]);
    assert_eq!(sq.canonical_point(&already).unwrap(), already);

    let corner = Point::new(u2, vec![int(1), int(1)]);
    let c = sq.canonical_point(&corner).unwrap();
    assert_eq!(c.cube, sq.end());
    assert!(c.is_vertex());
}

#[test]
fn canonical_point_idempotent_and_coface_consistent() {
    // [d^ε_A(c); x] = [c; δ^ε_A(x)] for every cube of □³ and subset A.
    let cube = standard_cube(3);
    for c in cube.cube_ids() {
        let n = cube.dim(c);
        let interior: Vec<Rat> = (0..n).map(|i| frac(i as i64 + 1, n as i64 + 2)).collect();
        for mask in 0..(1u32 << n) {
            let axes: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            for eps in [0u8, 1u8] {
                let face = cube.iterated_face(c, &axes, eps).unwrap();
                let kept: Vec<Rat> = (0..n)
                    .filter(|i| mask >> i & 1 == 0)
                    .map(|i| interior[i].clone())
                    .collect();
                let lifted = coface_coords(&kept, &axes, eps, n).unwrap();
                let via_face = cube.canonical_point(&Point::new(face, kept)).unwrap();
                let via_coface = cube.canonical_point(&Point::new(c, lifted)).unwrap();
                assert_eq!(via_face, via_coface);
                let again = cube.canonical_point(&via_face).unwrap();
                assert_eq!(again, via_face);
            }
        }
    }
}

#[test]
fn coface_examples() {
    let half = [frac(1, 2)];
    assert_eq!(
        coface_coords(&half, &[0], 0, 2).unwrap(),
        vec![int(0), frac(1, 2)]
    );
    assert_eq!(coface_coords(&[], &[0, 1], 1, 2).unwrap(), vec![int(1), int(1)]);
    assert_eq!(
        coface_coords(&[frac(1, 3), frac(2, 3)], &[1], 1, 3).unwrap(),
        vec![frac(1, 3), int(1), frac(2, 3)]
    );
    assert!(coface_coords(&half, &[0, 1], 0, 2).is_err());
}

#[test]
fn model_json_round_trip() {
    let set = double_cube();
    let text = serde_json::to_string(&model_to_json(&set)).unwrap();
    let back = model_from_json(&text).unwrap();
    assert_eq!(back.counts_by_dim(), set.counts_by_dim());
    assert_eq!(back.id_str(back.start()), set.id_str(set.start()));

    assert!(model_from_json("{\"cubes\": [], \"start\": \"x\", \"end\": \"x\"}").is_err());
    let dangling = r#"{"cubes":[{"id":"e","dim":1,"d0":["v"],"d1":["w"]}],"start":"v","end":"w"}"#;
    assert!(model_from_json(dangling).is_err());
    let dup = r#"{"cubes":[{"id":"v","dim":0,"d0":[],"d1":[]},{"id":"v","dim":0,"d0":[],"d1":[]}],"start":"v","end":"v"}"#;
    assert!(model_from_json(dup).is_err());
}

#[test]
fn relabel_preserves_structure() {
    let set = boundary_cube(3);
    let shuffled = set.relabeled(|id| format!("z{id}")).unwrap();
    assert!(shuffled.validate().is_empty());
    assert_eq!(shuffled.counts_by_dim(), set.counts_by_dim());
}
