//! Cube chains and the cube chain category of a given length.
//!
//! A cube chain is a sequence of cubes running from the start vertex to the
//! end vertex, each cube's final vertex being the next one's initial
//! vertex. Chains of total dimension `n` are the objects of a finite
//! category whose morphisms split stage cubes into ordered partitions of
//! their axes; the nerve of this category models the execution space.

use std::collections::HashMap;

use crate::dpath::{PLMap, PathPresentation, Segment};
use crate::precubical::{CubeId, FaceLetter, PrecubicalSet};
use crate::rat;
use crate::{Error, Result};
use num_traits::{One, Zero};

/// The type of a chain: the sequence of its stage dimensions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainType {
    pub parts: Vec<usize>,
}

impl ChainType {
    /// Total length `Σ parts`.
    pub fn length(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of stages.
    pub fn count(&self) -> usize {
        self.parts.len()
    }

    /// Partial sums `t₀ = 0, …, t_l = n`.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.parts.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &p in &self.parts {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// `{1, …, n−1}` minus the interior vertices.
    pub fn free(&self) -> Vec<usize> {
        let verts = self.vertices();
        (1..self.length()).filter(|k| !verts.contains(k)).collect()
    }
}

/// A cube chain: the cube sequence (its type is derived from dimensions).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CubeChain {
    pub cubes: Vec<CubeId>,
}

impl CubeChain {
    pub fn chain_type(&self, set: &PrecubicalSet) -> ChainType {
        ChainType { parts: self.cubes.iter().map(|&c| set.dim(c)).collect() }
    }

    /// Check the chain conditions: positive-dimensional stages from the
    /// start vertex to the end vertex with matching extreme vertices.
    pub fn validate(&self, set: &PrecubicalSet) -> Result<()> {
        if self.cubes.is_empty() {
            return Err(Error::InvalidArgument("empty cube chain".into()));
        }
        if self.cubes.iter().any(|&c| set.dim(c) == 0) {
            return Err(Error::InvalidArgument("chain stage of dimension 0".into()));
        }
        if set.extreme_vertex(self.cubes[0], 0) != set.start() {
            return Err(Error::InvalidArgument("chain does not start at 𝟎".into()));
        }
        if set.extreme_vertex(*self.cubes.last().unwrap(), 1) != set.end() {
            return Err(Error::InvalidArgument("chain does not end at 𝟏".into()));
        }
        for w in self.cubes.windows(2) {
            if set.extreme_vertex(w[0], 1) != set.extreme_vertex(w[1], 0) {
                return Err(Error::InvalidArgument("chain stages do not meet".into()));
            }
        }
        Ok(())
    }

    pub fn ids<'a>(&self, set: &'a PrecubicalSet) -> Vec<&'a str> {
        self.cubes.iter().map(|&c| set.id_str(c)).collect()
    }
}

/// All cube chains of total length exactly `n`, in lexicographic order of
/// their cube-identifier sequences.
pub fn enumerate_chains(set: &PrecubicalSet, n: usize) -> Vec<CubeChain> {
    assert!(n >= 1, "chains are enumerated per positive length");
    // Cubes of positive dimension indexed by their initial vertex, sorted
    // by identifier for deterministic output.
    let mut by_start: HashMap<CubeId, Vec<CubeId>> = HashMap::new();
    for c in set.cube_ids() {
        if set.dim(c) >= 1 {
            by_start.entry(set.extreme_vertex(c, 0)).or_default().push(c);
        }
    }
    for list in by_start.values_mut() {
        list.sort_by(|&x, &y| set.id_str(x).cmp(set.id_str(y)));
    }
    fn dfs(
        set: &PrecubicalSet,
        by_start: &HashMap<CubeId, Vec<CubeId>>,
        at: CubeId,
        remaining: usize,
        prefix: &mut Vec<CubeId>,
        out: &mut Vec<CubeChain>,
    ) {
        if remaining == 0 {
            if at == set.end() && !prefix.is_empty() {
                out.push(CubeChain { cubes: prefix.clone() });
            }
            return;
        }
        let Some(candidates) = by_start.get(&at) else { return };
        for &c in candidates {
            let d = set.dim(c);
            if d > remaining {
                continue;
            }
            prefix.push(c);
            dfs(set, by_start, set.extreme_vertex(c, 1), remaining - d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    let mut prefix: Vec<CubeId> = Vec::new();
    dfs(set, &by_start, set.start(), n, &mut prefix, &mut out);
    out
}

/// An ordered partition of `{0, …, m−1}` into nonempty blocks (each block
/// kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderedPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl OrderedPartition {
    pub fn identity(m: usize) -> Self {
        OrderedPartition { blocks: vec![(0..m).collect()] }
    }

    pub fn is_identity(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }

    /// Check disjointness and coverage of `{0, …, m−1}`.
    pub fn validate(&self, m: usize) -> Result<()> {
        let mut seen = vec![false; m];
        for b in &self.blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &x in b {
                if x >= m || seen[x] {
                    return Err(Error::InvalidPartition(format!("bad element {x}")));
                }
                seen[x] = true;
            }
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::InvalidPartition("block not sorted".into()));
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::InvalidPartition("elements not covered".into()));
        }
        Ok(())
    }
}

/// All ordered partitions of `{0, …, m−1}` (ordered Bell enumeration), in
/// a fixed deterministic order.
pub fn ordered_partitions(m: usize) -> Vec<OrderedPartition> {
    fn rec(rest: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<OrderedPartition>) {
        if rest.is_empty() {
            out.push(OrderedPartition { blocks: acc.clone() });
            return;
        }
        let k = rest.len();
        for mask in 1u32..(1 << k) {
            let block: Vec<usize> =
                (0..k).filter(|i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
            let remaining: Vec<usize> =
                (0..k).filter(|i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
            acc.push(block);
            rec(&remaining, acc, out);
            acc.pop();
        }
    }
    if m == 0 {
        return Vec::new();
    }
    let ground: Vec<usize> = (0..m).collect();
    let mut out = Vec::new();
    rec(&ground, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A morphism of cube chains, encoded per target stage as the ordered
/// partition of that stage's axes into the source stages mapping into it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainMorphism {
    pub src: CubeChain,
    pub dst: CubeChain,
    pub partitions: Vec<OrderedPartition>,
}

/// The face word of one block of an ordered partition: axes in earlier
/// blocks are already complete (1), axes in later blocks not yet started
/// (0), the block's own axes survive.
fn block_word(m: usize, partition: &OrderedPartition, block: usize) -> Vec<FaceLetter> {
    let mut word = vec![FaceLetter::Zero; m];
    for (k, b) in partition.blocks.iter().enumerate() {
        let letter = match k.cmp(&block) {
            std::cmp::Ordering::Less => FaceLetter::One,
            std::cmp::Ordering::Equal => FaceLetter::Star,
            std::cmp::Ordering::Greater => FaceLetter::Zero,
        };
        for &x in b {
            word[x] = letter;
        }
    }
    word
}

/// The source chain determined by per-stage partitions of a target chain.
fn split_chain(
    set: &PrecubicalSet,
    dst: &CubeChain,
    partitions: &[OrderedPartition],
) -> Result<CubeChain> {
    let mut cubes = Vec::new();
    for (j, &c) in dst.cubes.iter().enumerate() {
        let m = set.dim(c);
        partitions[j].validate(m)?;
        for k in 0..partitions[j].blocks.len() {
            let word = block_word(m, &partitions[j], k);
            cubes.push(set.face_word(c, &word)?);
        }
    }
    Ok(CubeChain { cubes })
}

impl ChainMorphism {
    /// Validate the over-K condition: the partitions applied to the target
    /// produce exactly the source chain.
    pub fn validate(&self, set: &PrecubicalSet) -> Result<()> {
        self.src.validate(set)?;
        self.dst.validate(set)?;
        if self.partitions.len() != self.dst.cubes.len() {
            return Err(Error::InvalidPartition("one partition per target stage".into()));
        }
        let derived = split_chain(set, &self.dst, &self.partitions)?;
        if derived != self.src {
            return Err(Error::InvalidPartition(
                "partitions do not produce the source chain".into(),
            ));
        }
        Ok(())
    }

    pub fn is_identity(&self) -> bool {
        self.partitions.iter().all(|p| p.is_identity())
    }
}

/// The elementary face of a chain: replace stage `i` (0-based) by the pair
/// `(d⁰_B(cᵢ), d¹_A(cᵢ))` for a partition `A ⊔ B` of its axes, `A` being
/// the axes of the first new stage.
pub fn chain_face(
    set: &PrecubicalSet,
    chain: &CubeChain,
    stage: usize,
    first_axes: &[usize],
    second_axes: &[usize],
) -> Result<CubeChain> {
    let c = *chain
        .cubes
        .get(stage)
        .ok_or_else(|| Error::InvalidArgument("stage out of range".into()))?;
    let m = set.dim(c);
    if first_axes.is_empty() || second_axes.is_empty() {
        return Err(Error::InvalidPartition("both parts must be nonempty".into()));
    }
    let partition =
        OrderedPartition { blocks: vec![first_axes.to_vec(), second_axes.to_vec()] };
    partition.validate(m)?;
    let head = set.face_word(c, &block_word(m, &partition, 0))?;
    let tail = set.face_word(c, &block_word(m, &partition, 1))?;
    let mut cubes = chain.cubes.clone();
    cubes.splice(stage..=stage, [head, tail]);
    let out = CubeChain { cubes };
    out.validate(set)?;
    Ok(out)
}

/// All morphisms from `a` to `b` (same total length): the unique grouping
/// of `a`'s stages over `b`'s stages, then every family of ordered
/// partitions matching `a`'s cubes under the face maps.
pub fn morphisms_between(
    set: &PrecubicalSet,
    a: &CubeChain,
    b: &CubeChain,
) -> Result<Vec<ChainMorphism>> {
    let ta = a.chain_type(set);
    let tb = b.chain_type(set);
    if ta.length() != tb.length() {
        return Err(Error::InvalidArgument("chains of different total length".into()));
    }
    let va = ta.vertices();
    let vb = tb.vertices();
    if !vb.iter().all(|t| va.contains(t)) {
        return Ok(Vec::new());
    }
    // Group a's stage sizes into consecutive chunks summing to b's parts.
    let mut chunks: Vec<Vec<usize>> = Vec::new();
    {
        let mut ai = 0;
        for &upper in vb.iter().skip(1) {
            let mut sizes = Vec::new();
            while va[ai + 1] <= upper {
                sizes.push(ta.parts[ai]);
                ai += 1;
                if va[ai] == upper {
                    break;
                }
            }
            chunks.push(sizes);
        }
    }
    // Per b-stage, the partitions with those block sizes matching a.
    let mut per_stage: Vec<Vec<OrderedPartition>> = Vec::new();
    let mut a_cursor = 0;
    for (j, &c) in b.cubes.iter().enumerate() {
        let m = set.dim(c);
        let sizes = &chunks[j];
        let want: Vec<CubeId> = a.cubes[a_cursor..a_cursor + sizes.len()].to_vec();
        a_cursor += sizes.len();
        let matching: Vec<OrderedPartition> = ordered_partitions(m)
            .into_iter()
            .filter(|p| {
                p.blocks.len() == sizes.len()
                    && p.blocks.iter().zip(sizes).all(|(b, &s)| b.len() == s)
                    && (0..p.blocks.len()).all(|k| {
                        set.face_word(c, &block_word(m, p, k)).is_ok_and(|f| f == want[k])
                    })
            })
            .collect();
        if matching.is_empty() {
            return Ok(Vec::new());
        }
        per_stage.push(matching);
    }
    let mut combos: Vec<Vec<OrderedPartition>> = vec![Vec::new()];
    for stage in per_stage {
        let mut next = Vec::with_capacity(combos.len() * stage.len());
        for partial in &combos {
            for p in &stage {
                let mut v: Vec<OrderedPartition> = partial.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        combos = next;
    }
    Ok(combos
        .into_iter()
        .map(|partitions| ChainMorphism { src: a.clone(), dst: b.clone(), partitions })
        .collect())
}

/// Composition `g ∘ f` for `f: a → b`, `g: b → c`: each block of `g` is
/// refined by transporting `f`'s partition of the matching `b`-stage along
/// the increasing bijection onto the block.
pub fn compose(set: &PrecubicalSet, g: &ChainMorphism, f: &ChainMorphism) -> Result<ChainMorphism> {
    if f.dst != g.src {
        return Err(Error::SourceTargetMismatch(
            "compose requires f.target = g.source".into(),
        ));
    }
    let mut partitions = Vec::with_capacity(g.partitions.len());
    let mut b_stage = 0usize;
    for gp in &g.partitions {
        let mut blocks = Vec::new();
        for block in &gp.blocks {
            let fp = &f.partitions[b_stage];
            if fp.ground_size() != block.len() {
                return Err(Error::InvalidPartition("refinement sizes disagree".into()));
            }
            for fblock in &fp.blocks {
                blocks.push(fblock.iter().map(|&p| block[p]).collect::<Vec<usize>>());
            }
            b_stage += 1;
        }
        partitions.push(OrderedPartition { blocks });
    }
    let out = ChainMorphism { src: f.src.clone(), dst: g.dst.clone(), partitions };
    debug_assert!(out.validate(set).is_ok());
    Ok(out)
}

/// A morphism of the built category, referring to objects by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub src: usize,
    pub dst: usize,
    pub partitions: Vec<OrderedPartition>,
}

impl Morphism {
    pub fn is_identity(&self) -> bool {
        self.partitions.iter().all(|p| p.is_identity())
    }
}

/// The cube chain category of one length: all objects, all morphisms,
/// composition by partition refinement.
#[derive(Debug, Clone)]
pub struct Category {
    pub n: usize,
    pub objects: Vec<CubeChain>,
    pub morphisms: Vec<Morphism>,
    object_index: HashMap<CubeChain, usize>,
    morphism_index: HashMap<(usize, usize, Vec<OrderedPartition>), usize>,
}

impl Category {
    /// Build the full category. Every family of per-stage ordered
    /// partitions of a chain is a morphism into it from the corresponding
    /// face chain, so morphisms are enumerated per target object.
    pub fn build(set: &PrecubicalSet, n: usize) -> Result<Category> {
        let objects = enumerate_chains(set, n);
        let object_index: HashMap<CubeChain, usize> =
            objects.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut morphisms = Vec::new();
        for (dst_idx, dst) in objects.iter().enumerate() {
            let per_stage: Vec<Vec<OrderedPartition>> =
                dst.cubes.iter().map(|&c| ordered_partitions(set.dim(c))).collect();
            let mut combos: Vec<Vec<OrderedPartition>> = vec![Vec::new()];
            for stage in &per_stage {
                let mut next = Vec::with_capacity(combos.len() * stage.len());
                for partial in &combos {
                    for p in stage {
                        let mut v = partial.clone();
                        v.push(p.clone());
                        next.push(v);
                    }
                }
                combos = next;
            }
            for partitions in combos {
                let src_chain = split_chain(set, dst, &partitions)?;
                let src_idx = *object_index.get(&src_chain).ok_or_else(|| {
                    Error::InvalidArgument(
                        "face chain missing from enumeration (invalid set?)".into(),
                    )
                })?;
                morphisms.push(Morphism { src: src_idx, dst: dst_idx, partitions });
            }
        }
        morphisms
            .sort_by(|a, b| (a.src, a.dst, &a.partitions).cmp(&(b.src, b.dst, &b.partitions)));
        let morphism_index = morphisms
            .iter()
            .enumerate()
            .map(|(i, m)| ((m.src, m.dst, m.partitions.clone()), i))
            .collect();
        Ok(Category { n, objects, morphisms, object_index, morphism_index })
    }

    pub fn object_of(&self, chain: &CubeChain) -> Option<usize> {
        self.object_index.get(chain).copied()
    }

    pub fn morphism_of(&self, m: &Morphism) -> Option<usize> {
        self.morphism_index.get(&(m.src, m.dst, m.partitions.clone())).copied()
    }

    /// Compose two morphisms given by index (`f` then `g`) and return the
    /// index of the composite.
    pub fn compose_indices(&self, set: &PrecubicalSet, g: usize, f: usize) -> Result<usize> {
        let fm = &self.morphisms[f];
        let gm = &self.morphisms[g];
        if fm.dst != gm.src {
            return Err(Error::SourceTargetMismatch("composable pair required".into()));
        }
        let cf = ChainMorphism {
            src: self.objects[fm.src].clone(),
            dst: self.objects[fm.dst].clone(),
            partitions: fm.partitions.clone(),
        };
        let cg = ChainMorphism {
            src: self.objects[gm.src].clone(),
            dst: self.objects[gm.dst].clone(),
            partitions: gm.partitions.clone(),
        };
        let comp = compose(set, &cg, &cf)?;
        let morph = Morphism { src: fm.src, dst: gm.dst, partitions: comp.partitions };
        self.morphism_of(&morph)
            .ok_or_else(|| Error::InvalidArgument("composite missing from the category".into()))
    }

    pub fn non_identity_count(&self) -> usize {
        self.morphisms.iter().filter(|m| !m.is_identity()).count()
    }
}

/// Assemble the tame path of a chain from per-stage natural maps running
/// `𝟎 → 𝟏` on the consecutive integer intervals of the chain type.
pub fn assemble_path(
    set: &PrecubicalSet,
    chain: &CubeChain,
    stage_maps: Vec<PLMap>,
) -> Result<PathPresentation> {
    chain.validate(set).map_err(|e| Error::StageMismatch(e.to_string()))?;
    if stage_maps.len() != chain.cubes.len() {
        return Err(Error::StageMismatch(format!(
            "{} maps for {} stages",
            stage_maps.len(),
            chain.cubes.len()
        )));
    }
    let vertices = chain.chain_type(set).vertices();
    let mut segments = Vec::with_capacity(stage_maps.len());
    for (i, map) in stage_maps.into_iter().enumerate() {
        let c = chain.cubes[i];
        if map.width() != set.dim(c) {
            return Err(Error::StageMismatch(format!(
                "stage {} map width {} for cube of dimension {}",
                i + 1,
                map.width(),
                set.dim(c)
            )));
        }
        let (lo, hi) = (rat::int(vertices[i] as i64), rat::int(vertices[i + 1] as i64));
        if map.start_time() != &lo || map.end_time() != &hi {
            return Err(Error::StageMismatch(format!(
                "stage {} map must run on [{}, {}]",
                i + 1,
                vertices[i],
                vertices[i + 1]
            )));
        }
        if map.start_value().iter().any(|x| !x.is_zero())
            || map.end_value().iter().any(|x| !x.is_one())
        {
            return Err(Error::StageMismatch(format!("stage {} map must run 𝟎 → 𝟏", i + 1)));
        }
        if !map.is_natural_piece() {
            return Err(Error::StageMismatch(format!("stage {} map is not natural", i + 1)));
        }
        segments.push(Segment { cube: c, map });
    }
    PathPresentation::new(set, segments)
}

/// DOT export of the category: objects labelled by cube-id sequences,
/// edges by partition signatures (1-based axes).
pub fn category_to_dot(set: &PrecubicalSet, cat: &Category) -> String {
    let mut out = String::from("digraph cube_chains {\n  rankdir=LR;\n");
    for obj in &cat.objects {
        out.push_str(&format!("  \"{}\";\n", obj.ids(set).join("|")));
    }
    for m in &cat.morphisms {
        if m.is_identity() {
            continue;
        }
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            cat.objects[m.src].ids(set).join("|"),
            cat.objects[m.dst].ids(set).join("|"),
            partitions_signature(&m.partitions)
        ));
    }
    out.push_str("}\n");
    out
}

fn partitions_signature(partitions: &[OrderedPartition]) -> String {
    partitions
        .iter()
        .map(|p| {
            let blocks: Vec<String> = p
                .blocks
                .iter()
                .map(|b| {
                    let xs: Vec<String> = b.iter().map(|x| (x + 1).to_string()).collect();
                    format!("{{{}}}", xs.join(","))
                })
                .collect();
            format!("({})", blocks.join(","))
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// JSON export of the category.
pub fn category_to_json(set: &PrecubicalSet, cat: &Category) -> serde_json::Value {
    let objects: Vec<serde_json::Value> =
        cat.objects.iter().map(|o| serde_json::json!(o.ids(set))).collect();
    let morphisms: Vec<serde_json::Value> = cat
        .morphisms
        .iter()
        .map(|m| {
            let parts: Vec<Vec<Vec<usize>>> = m
                .partitions
                .iter()
                .map(|p| p.blocks.iter().map(|b| b.iter().map(|x| x + 1).collect()).collect())
                .collect();
            serde_json::json!({ "src": m.src, "dst": m.dst, "partitions": parts })
        })
        .collect();
    serde_json::json!({ "objects": objects, "morphisms": morphisms })
}
