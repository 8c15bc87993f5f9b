//! Piecewise-linear monotone maps with exact rational breakpoints.
//!
//! A [`PLMap`] is the restriction of a directed path to one cube: every
//! coordinate is non-decreasing, stays in `[0, 1]`, and is affine between
//! breakpoints. Times are strictly increasing; a single breakpoint encodes
//! a degenerate (constant, zero-length) domain.

use num_traits::{Signed, Zero};

use crate::rat::{self, Rat};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLMap {
    breakpoints: Vec<(Rat, Vec<Rat>)>,
    width: usize,
}

impl PLMap {
    pub fn new(breakpoints: Vec<(Rat, Vec<Rat>)>) -> Result<Self> {
        let Some(first) = breakpoints.first() else {
            return Err(Error::InvalidArgument("empty breakpoint list".into()));
        };
        let width = first.1.len();
        for (t, v) in &breakpoints {
            if v.len() != width {
                return Err(Error::InvalidArgument("ragged breakpoint widths".into()));
            }
            for x in v {
                if x.is_negative() || *x > rat::one() {
                    return Err(Error::InvalidArgument(format!(
                        "coordinate {} outside [0,1] at time {}",
                        rat::format(x),
                        rat::format(t)
                    )));
                }
            }
        }
        for w in breakpoints.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidArgument(format!(
                    "times not strictly increasing at {}",
                    rat::format(&w[1].0)
                )));
            }
            for j in 0..width {
                if w[0].1[j] > w[1].1[j] {
                    return Err(Error::InvalidArgument(format!(
                        "coordinate {} decreases at time {}",
                        j + 1,
                        rat::format(&w[1].0)
                    )));
                }
            }
        }
        Ok(PLMap { breakpoints, width })
    }

    /// A constant map with a single breakpoint.
    pub fn constant(t: Rat, value: Vec<Rat>) -> Self {
        PLMap { width: value.len(), breakpoints: vec![(t, value)] }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn breakpoints(&self) -> &[(Rat, Vec<Rat>)] {
        &self.breakpoints
    }

    pub fn start_time(&self) -> &Rat {
        &self.breakpoints[0].0
    }

    pub fn end_time(&self) -> &Rat {
        &self.breakpoints[self.breakpoints.len() - 1].0
    }

    pub fn start_value(&self) -> &[Rat] {
        &self.breakpoints[0].1
    }

    pub fn end_value(&self) -> &[Rat] {
        &self.breakpoints[self.breakpoints.len() - 1].1
    }

    pub fn is_degenerate(&self) -> bool {
        self.breakpoints.len() == 1
    }

    /// Total coordinate increase `|end| − |start|`.
    pub fn length(&self) -> Rat {
        let start: Rat = self.start_value().iter().sum();
        let end: Rat = self.end_value().iter().sum();
        end - start
    }

    pub fn contains_time(&self, t: &Rat) -> bool {
        t >= self.start_time() && t <= self.end_time()
    }

    /// Exact value at a time inside the domain.
    pub fn eval(&self, t: &Rat) -> Result<Vec<Rat>> {
        if !self.contains_time(t) {
            return Err(Error::InvalidArgument(format!(
                "time {} outside [{}, {}]",
                rat::format(t),
                rat::format(self.start_time()),
                rat::format(self.end_time())
            )));
        }
        let pos = self.breakpoints.partition_point(|(bt, _)| bt <= t);
        if pos > 0 && &self.breakpoints[pos - 1].0 == t {
            return Ok(self.breakpoints[pos - 1].1.clone());
        }
        let (t0, v0) = &self.breakpoints[pos - 1];
        let (t1, v1) = &self.breakpoints[pos];
        let lambda = (t - t0) / (t1 - t0);
        Ok(v0
            .iter()
            .zip(v1)
            .map(|(a, b)| a + (b - a) * &lambda)
            .collect())
    }

    /// Restriction to `[a, b]` (a ≤ b, both inside the domain). When
    /// `a == b` the result is a degenerate single-breakpoint map.
    pub fn restrict(&self, a: &Rat, b: &Rat) -> Result<PLMap> {
        if a > b {
            return Err(Error::InvalidArgument("inverted restriction interval".into()));
        }
        if a == b {
            return Ok(PLMap::constant(a.clone(), self.eval(a)?));
        }
        let mut bps = vec![(a.clone(), self.eval(a)?)];
        for (t, v) in &self.breakpoints {
            if t > a && t < b {
                bps.push((t.clone(), v.clone()));
            }
        }
        bps.push((b.clone(), self.eval(b)?));
        Ok(PLMap { breakpoints: bps, width: self.width })
    }

    /// Concatenation with a map that starts where this one ends, with the
    /// same value.
    pub fn concat(&self, other: &PLMap) -> Result<PLMap> {
        if self.width != other.width {
            return Err(Error::InvalidArgument("width mismatch in concat".into()));
        }
        if self.end_time() != other.start_time() || self.end_value() != other.start_value() {
            return Err(Error::InvalidArgument("maps do not meet in concat".into()));
        }
        let mut bps = self.breakpoints.clone();
        bps.extend_from_slice(&other.breakpoints[1..]);
        Ok(PLMap { breakpoints: bps, width: self.width })
    }

    /// Canonical form: drop interior breakpoints that lie on the segment
    /// between their neighbours.
    pub fn normalized(&self) -> PLMap {
        if self.breakpoints.len() <= 2 {
            return self.clone();
        }
        let mut keep = vec![self.breakpoints[0].clone()];
        for k in 1..self.breakpoints.len() - 1 {
            let prev = keep.last().unwrap();
            let (t, v) = &self.breakpoints[k];
            let (tn, vn) = &self.breakpoints[k + 1];
            let lambda = (t - &prev.0) / (tn - &prev.0);
            let collinear = (0..self.width).all(|j| {
                let interp = &prev.1[j] + (&vn[j] - &prev.1[j]) * &lambda;
                interp == v[j]
            });
            if !collinear {
                keep.push((t.clone(), v.clone()));
            }
        }
        keep.push(self.breakpoints.last().unwrap().clone());
        PLMap { breakpoints: keep, width: self.width }
    }

    /// Replace breakpoint times, collapsing consecutive breakpoints whose
    /// new times coincide. Collapsed breakpoints must carry equal values
    /// (this holds when the new times are cumulative lengths). Returns the
    /// map, degenerate when everything collapses.
    pub fn map_times(&self, new_times: &[Rat]) -> Result<PLMap> {
        if new_times.len() != self.breakpoints.len() {
            return Err(Error::InvalidArgument("time list length mismatch".into()));
        }
        let mut bps: Vec<(Rat, Vec<Rat>)> = Vec::with_capacity(new_times.len());
        for (nt, (_, v)) in new_times.iter().zip(&self.breakpoints) {
            match bps.last() {
                Some((pt, pv)) if pt == nt => {
                    if pv != v {
                        return Err(Error::InvalidArgument(
                            "collapsing breakpoints with unequal values".into(),
                        ));
                    }
                }
                Some((pt, _)) if pt > nt => {
                    return Err(Error::InvalidArgument("new times decrease".into()));
                }
                _ => bps.push((nt.clone(), v.clone())),
            }
        }
        Ok(PLMap { breakpoints: bps, width: self.width })
    }

    /// Insert breakpoints at the given times (those inside the domain).
    pub fn with_times(&self, times: &[Rat]) -> PLMap {
        let mut out = self.clone();
        for t in times {
            if !out.contains_time(t) {
                continue;
            }
            if out.breakpoints.iter().any(|(bt, _)| bt == t) {
                continue;
            }
            let v = out.eval(t).expect("time inside domain");
            let pos = out.breakpoints.partition_point(|(bt, _)| bt < t);
            out.breakpoints.insert(pos, (t.clone(), v));
        }
        out
    }

    /// Keep only the coordinates *not* listed in `axes` (0-based).
    pub fn drop_coords(&self, axes: &[usize]) -> PLMap {
        let drop: Vec<bool> = (0..self.width)
            .map(|j| axes.contains(&j))
            .collect();
        let bps = self
            .breakpoints
            .iter()
            .map(|(t, v)| {
                let kept = v
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| !drop[*j])
                    .map(|(_, x)| x.clone())
                    .collect();
                (t.clone(), kept)
            })
            .collect();
        PLMap { breakpoints: bps, width: self.width - axes.len() }
    }

    /// Insert constant coordinates with the given value at the (0-based)
    /// positions of the widened map. Positions must be distinct and within
    /// the widened width.
    pub fn insert_const_coords(&self, positions: &[usize], value: &Rat) -> Result<PLMap> {
        let mut sorted = positions.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != positions.len() {
            return Err(Error::InvalidArgument("repeated insertion position".into()));
        }
        let new_width = self.width + sorted.len();
        if sorted.iter().any(|&p| p >= new_width) {
            return Err(Error::IndexOutOfRange("coordinate insertion".into()));
        }
        let bps = self
            .breakpoints
            .iter()
            .map(|(t, v)| {
                let mut out = Vec::with_capacity(new_width);
                let mut src = v.iter();
                for p in 0..new_width {
                    if sorted.binary_search(&p).is_ok() {
                        out.push(value.clone());
                    } else {
                        out.push(src.next().expect("width checked").clone());
                    }
                }
                (t.clone(), out)
            })
            .collect();
        Ok(PLMap { breakpoints: bps, width: new_width })
    }

    /// One coordinate as a width-1 map.
    pub fn coord(&self, j: usize) -> PLMap {
        let bps = self
            .breakpoints
            .iter()
            .map(|(t, v)| (t.clone(), vec![v[j].clone()]))
            .collect();
        PLMap { breakpoints: bps, width: 1 }
    }

    /// Zip several width-1 maps over a common breakpoint grid.
    pub fn zip(parts: &[PLMap]) -> Result<PLMap> {
        let Some(first) = parts.first() else {
            return Err(Error::InvalidArgument("zip of no maps".into()));
        };
        let mut times: Vec<Rat> = Vec::new();
        for p in parts {
            if p.start_time() != first.start_time() || p.end_time() != first.end_time() {
                return Err(Error::InvalidArgument("zip domain mismatch".into()));
            }
            for (t, _) in &p.breakpoints {
                if !times.contains(t) {
                    times.push(t.clone());
                }
            }
        }
        times.sort();
        let mut bps = Vec::with_capacity(times.len());
        for t in &times {
            let mut v = Vec::with_capacity(parts.len());
            for p in parts {
                v.push(p.eval(t)?[0].clone());
            }
            bps.push((t.clone(), v));
        }
        Ok(PLMap { breakpoints: bps, width: parts.len() })
    }

    /// Per-interval naturality: length increase equals time increase on
    /// every breakpoint interval.
    pub fn is_natural_piece(&self) -> bool {
        self.breakpoints.windows(2).all(|w| {
            let dv: Rat = (0..self.width).map(|j| &w[1].1[j] - &w[0].1[j]).sum();
            dv == &w[1].0 - &w[0].0
        })
    }

    /// Apply `x ↦ clamp01(p·t + q·x + r)` to every coordinate, inserting
    /// the exact crossing times of the clamp thresholds.
    pub fn clamp01_affine(&self, p: &Rat, q: &Rat, r: &Rat) -> PLMap {
        // Collect candidate times: existing breakpoints plus, per interval
        // and coordinate, the solutions of p·t + q·x(t) + r ∈ {0, 1}.
        let mut times: Vec<Rat> = self.breakpoints.iter().map(|(t, _)| t.clone()).collect();
        for w in self.breakpoints.windows(2) {
            let (t0, v0) = &w[0];
            let (t1, v1) = &w[1];
            let dt = t1 - t0;
            for j in 0..self.width {
                // g(t) = p·t + q·(v0 + (v1−v0)(t−t0)/dt) + r is affine on
                // [t0, t1] with slope p + q·(v1−v0)/dt.
                let slope = p + q * (&v1[j] - &v0[j]) / &dt;
                if slope.is_zero() {
                    continue;
                }
                let g0 = p * t0 + q * &v0[j] + r;
                for target in [rat::zero(), rat::one()] {
                    let t = t0 + (target - &g0) / &slope;
                    if t > *t0 && t < *t1 {
                        times.push(t);
                    }
                }
            }
        }
        times.sort();
        times.dedup();
        let refined = self.with_times(&times);
        let bps = refined
            .breakpoints
            .iter()
            .map(|(t, v)| {
                let nv = v
                    .iter()
                    .map(|x| rat::clamp01(p * t + q * x + r))
                    .collect();
                (t.clone(), nv)
            })
            .collect();
        PLMap { breakpoints: bps, width: self.width }.normalized()
    }
}
