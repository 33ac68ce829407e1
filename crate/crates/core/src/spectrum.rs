//! Path measures, principal elements and adjoint spectra, read off the
//! directed meander of a Frobenius seaweed.
//!
//! The measure `m(i, j)` of the path from `v_i` to `v_j` counts forward edges
//! minus backward edges. Walking the single Frobenius path once assigns every
//! vertex a potential `phi` with `m(i, j) = phi[i] - phi[j]`, which makes each
//! measure an O(1) lookup afterwards. The eigenvalue of `ad F̂` on `e_ij` is
//! `m(i, j)`; the Cartan subalgebra contributes `n - 1` zeros.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::meander::{components, DirectedMeander, Side};
use crate::rational::{self, Rational};
use crate::typesym::SeaweedType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("{0} is not Frobenius")]
    NotFrobenius(SeaweedType),
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("{side:?} block {index} does not exist ({count} blocks)")]
    BlockOutOfRange { side: Side, index: usize, count: usize },
    #[error("range [{lo}..{hi}] is invalid for n = {n}")]
    RangeInvalid { lo: usize, hi: usize, n: usize },
    #[error("propagation left {missing} simple eigenvalues of {ty} undetermined")]
    PropagationIncomplete { ty: SeaweedType, missing: usize },
    #[error("propagation derived conflicting values for {side:?} pair {position} of {ty}")]
    PropagationConflict { ty: SeaweedType, side: Side, position: usize },
    #[error("simple eigenvalue routes disagree on {ty}")]
    RouteMismatch { ty: SeaweedType },
}

/// Potentials along the Frobenius path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Measures {
    // index 0 unused
    phi: Vec<i64>,
}

impl Measures {
    pub fn new(dm: &DirectedMeander) -> Result<Measures, SpectrumError> {
        let m = dm.undirected();
        let n = m.n();
        let report = components(m);
        if report.paths != 1 || report.cycles != 0 {
            return Err(SpectrumError::NotFrobenius(dm.seaweed_type().clone()));
        }
        let path = &report.components[0].vertices;
        let mut phi = vec![0i64; n + 1];
        for step in path.windows(2) {
            let (u, w) = (step[0], step[1]);
            let side = if m.mate(Side::Top, u) == Some(w) { Side::Top } else { Side::Bottom };
            // A forward edge u -> w has measure m(u, w) = phi[u] - phi[w] = 1.
            phi[w] = if dm.leaves(side, u) == Some(true) { phi[u] - 1 } else { phi[u] + 1 };
        }
        Ok(Measures { phi })
    }

    pub fn n(&self) -> usize {
        self.phi.len() - 1
    }

    /// `m(i, j)`; vertices are 1-based.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.phi[i] - self.phi[j]
    }

    /// `{m(i, k) : lo <= k <= i <= hi}`.
    pub fn sigma_left(&self, r: &RangeInclusive<usize>) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for i in r.clone() {
            for k in *r.start()..=i {
                out.insert(self.get(i, k));
            }
        }
        out
    }

    /// `{m(i, k) : lo <= i <= k <= hi}`.
    pub fn sigma_right(&self, r: &RangeInclusive<usize>) -> BTreeSet<i64> {
        self.sigma_left(r).into_iter().map(|v| -v).collect()
    }

    /// `{m(i, lo) : lo <= i <= hi}`.
    pub fn tau_left(&self, r: &RangeInclusive<usize>) -> BTreeSet<i64> {
        r.clone().map(|i| self.get(i, *r.start())).collect()
    }

    /// `{m(i, hi) : lo <= i <= hi}`.
    pub fn tau_right(&self, r: &RangeInclusive<usize>) -> BTreeSet<i64> {
        r.clone().map(|i| self.get(i, *r.end())).collect()
    }

    /// `{m(j, i) : v_i in left, v_j in right}`: measures from the right set
    /// back into the left set.
    pub fn sigma_leftward(&self, left: &RangeInclusive<usize>, right: &RangeInclusive<usize>) -> BTreeSet<i64> {
        let mut out = BTreeSet::new();
        for i in left.clone() {
            for j in right.clone() {
                out.insert(self.get(j, i));
            }
        }
        out
    }
}

/// Admissible off-diagonal positions of a seaweed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeaweedShape {
    pub n: usize,
    pub admissible: BTreeSet<(usize, usize)>,
}

impl SeaweedShape {
    pub fn cartan_dim(&self) -> usize {
        self.n - 1
    }

    pub fn dimension(&self) -> usize {
        self.admissible.len() + self.cartan_dim()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.admissible.contains(&(i, j))
    }
}

/// `(i, j)` with `i > j` lies in the seaweed iff both are in one top block;
/// `i < j` iff both are in one bottom block.
pub fn seaweed_shape(t: &SeaweedType) -> SeaweedShape {
    let mut admissible = BTreeSet::new();
    for block in t.top().blocks() {
        for i in block.clone() {
            for j in *block.start()..i {
                admissible.insert((i, j));
            }
        }
    }
    for block in t.bottom().blocks() {
        for i in block.clone() {
            for j in i + 1..=*block.end() {
                admissible.insert((i, j));
            }
        }
    }
    SeaweedShape { n: t.n(), admissible }
}

pub fn measure(dm: &DirectedMeander, i: usize, j: usize) -> Result<i64, SpectrumError> {
    let n = dm.n();
    for vertex in [i, j] {
        if vertex == 0 || vertex > n {
            return Err(SpectrumError::VertexOutOfRange { vertex, n });
        }
    }
    Ok(Measures::new(dm)?.get(i, j))
}

/// Diagonal principal element `F̂ = D + c·I` with trace zero.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrincipalElement {
    #[serde(serialize_with = "rational::serialize_pq_seq")]
    pub diag: Vec<Rational>,
    pub reference_vertex: usize,
    /// `D`: measure of the path from each vertex to the reference vertex.
    pub raw_measures: Vec<i64>,
}

pub fn principal_element(dm: &DirectedMeander) -> Result<PrincipalElement, SpectrumError> {
    principal_element_with_reference(dm, dm.n())
}

pub fn principal_element_with_reference(dm: &DirectedMeander, reference: usize) -> Result<PrincipalElement, SpectrumError> {
    let n = dm.n();
    if reference == 0 || reference > n {
        return Err(SpectrumError::VertexOutOfRange { vertex: reference, n });
    }
    let meas = Measures::new(dm)?;
    let raw: Vec<i64> = (1..=n).map(|i| meas.get(i, reference)).collect();
    let sum: i64 = raw.iter().sum();
    let shift = Rational::new(BigInt::from(-sum), BigInt::from(n as i64));
    let diag = raw.iter().map(|&d| rational::from_int(d) + &shift).collect();
    Ok(PrincipalElement {
        diag,
        reference_vertex: reference,
        raw_measures: raw,
    })
}

/// Multiset of integer eigenvalues.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SpectrumMultiset {
    counts: BTreeMap<i64, u64>,
}

impl SpectrumMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (i64, u64)>>(pairs: I) -> Self {
        let mut s = Self::new();
        for (value, count) in pairs {
            s.add(value, count);
        }
        s
    }

    pub fn from_values<I: IntoIterator<Item = i64>>(values: I) -> Self {
        let mut s = Self::new();
        for v in values {
            s.add(v, 1);
        }
        s
    }

    pub fn add(&mut self, value: i64, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &SpectrumMultiset) {
        for (&v, &c) in &other.counts {
            self.add(v, c);
        }
    }

    /// Multiplicity `d_l`, zero when absent.
    pub fn multiplicity(&self, value: i64) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &BTreeMap<i64, u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn min(&self) -> Option<i64> {
        self.counts.keys().next().copied()
    }

    pub fn max(&self) -> Option<i64> {
        self.counts.keys().next_back().copied()
    }
}

pub fn spectrum(t: &SeaweedType) -> Result<SpectrumMultiset, SpectrumError> {
    let dm = DirectedMeander::from_type(t);
    let meas = Measures::new(&dm)?;
    Ok(spectrum_from_measures(t, &meas))
}

/// `{m(i, j) : (i, j) admissible} ⊎ {0^(n-1)}`.
pub fn spectrum_from_measures(t: &SeaweedType, meas: &Measures) -> SpectrumMultiset {
    let shape = seaweed_shape(t);
    let mut s = SpectrumMultiset::from_values(shape.admissible.iter().map(|&(i, j)| meas.get(i, j)));
    s.add(0, shape.cartan_dim() as u64);
    s
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockId {
    pub side: Side,
    /// 1-based position of the block within its composition.
    pub index: usize,
}

/// Every block of the type, top blocks first, with its vertex range.
pub fn blocks(t: &SeaweedType) -> Vec<(BlockId, RangeInclusive<usize>)> {
    let mut out = Vec::new();
    for (side, comp) in [(Side::Top, t.top()), (Side::Bottom, t.bottom())] {
        for (k, r) in comp.blocks().into_iter().enumerate() {
            out.push((BlockId { side, index: k + 1 }, r));
        }
    }
    out
}

pub fn block_range(t: &SeaweedType, block: BlockId) -> Result<RangeInclusive<usize>, SpectrumError> {
    let comp = match block.side {
        Side::Top => t.top(),
        Side::Bottom => t.bottom(),
    };
    if block.index == 0 || block.index > comp.len() {
        return Err(SpectrumError::BlockOutOfRange {
            side: block.side,
            index: block.index,
            count: comp.len(),
        });
    }
    Ok(comp.blocks().swap_remove(block.index - 1))
}

pub fn block_contribution(dm: &DirectedMeander, block: BlockId) -> Result<SpectrumMultiset, SpectrumError> {
    let range = block_range(dm.seaweed_type(), block)?;
    let meas = Measures::new(dm)?;
    Ok(block_contribution_from_measures(&meas, block.side, &range))
}

/// Within-block measures (`i > j` for top blocks, `i < j` for bottom blocks)
/// plus `floor(size / 2)` zeros.
pub fn block_contribution_from_measures(meas: &Measures, side: Side, range: &RangeInclusive<usize>) -> SpectrumMultiset {
    let mut s = SpectrumMultiset::new();
    for i in range.clone() {
        for j in *range.start()..i {
            let v = match side {
                Side::Top => meas.get(i, j),
                Side::Bottom => meas.get(j, i),
            };
            s.add(v, 1);
        }
    }
    let size = range.end() + 1 - range.start();
    s.add(0, (size / 2) as u64);
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockSets {
    pub sigma_left: BTreeSet<i64>,
    pub sigma_right: BTreeSet<i64>,
    pub tau_left: BTreeSet<i64>,
    pub tau_right: BTreeSet<i64>,
}

pub fn sigma_tau(dm: &DirectedMeander, lo: usize, hi: usize) -> Result<BlockSets, SpectrumError> {
    let n = dm.n();
    if lo == 0 || lo > hi || hi > n {
        return Err(SpectrumError::RangeInvalid { lo, hi, n });
    }
    let meas = Measures::new(dm)?;
    Ok(block_sets_from_measures(&meas, &(lo..=hi)))
}

pub fn block_sets_from_measures(meas: &Measures, r: &RangeInclusive<usize>) -> BlockSets {
    BlockSets {
        sigma_left: meas.sigma_left(r),
        sigma_right: meas.sigma_right(r),
        tau_left: meas.tau_left(r),
        tau_right: meas.tau_right(r),
    }
}

/// Simple eigenvalues keyed by the left vertex `i` of the adjacent pair
/// `(v_i, v_{i+1})`: `top[i] = m(i+1, i)`, `bottom[i] = m(i, i+1)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SimpleEigenvalues {
    pub top: BTreeMap<usize, i64>,
    pub bottom: BTreeMap<usize, i64>,
}

impl SimpleEigenvalues {
    pub fn values(&self) -> impl Iterator<Item = i64> + '_ {
        self.top.values().chain(self.bottom.values()).copied()
    }
}

fn adjacent_pairs(t: &SeaweedType, side: Side) -> Vec<usize> {
    let comp = match side {
        Side::Top => t.top(),
        Side::Bottom => t.bottom(),
    };
    comp.blocks().into_iter().flat_map(|r| *r.start()..*r.end()).collect()
}

/// Simple eigenvalues as differences of path potentials.
pub fn simple_eigenvalues_from_measures(t: &SeaweedType, meas: &Measures) -> SimpleEigenvalues {
    SimpleEigenvalues {
        top: adjacent_pairs(t, Side::Top).into_iter().map(|i| (i, meas.get(i + 1, i))).collect(),
        bottom: adjacent_pairs(t, Side::Bottom).into_iter().map(|i| (i, meas.get(i, i + 1))).collect(),
    }
}

#[derive(Debug, Clone, Copy)]
enum Rule {
    /// `x = value`
    Fixed(Side, usize, i64),
    /// `x + y = 1`
    SumOne((Side, usize), (Side, usize)),
    /// `x = -y`
    Negated((Side, usize), (Side, usize)),
}

/// Simple eigenvalues derived purely from the arc structure.
///
/// Seeds every adjacent arc with 1, then propagates three local relations to
/// a fixpoint: an arc spanning two pairs makes them sum to 1, an arc spanning
/// `j >= 3` pairs makes its end pairs negatives of each other, and a pair
/// lying in both a top and a bottom block has opposite top and bottom values.
pub fn simple_eigenvalues_by_propagation(dm: &DirectedMeander) -> Result<SimpleEigenvalues, SpectrumError> {
    let t = dm.seaweed_type();
    let m = dm.undirected();
    let mut rules = Vec::new();
    for side in [Side::Top, Side::Bottom] {
        for &(i, k) in m.arcs(side) {
            match k - i {
                1 => rules.push(Rule::Fixed(side, i, 1)),
                2 => rules.push(Rule::SumOne((side, i), (side, i + 1))),
                _ => rules.push(Rule::Negated((side, i), (side, k - 1))),
            }
        }
    }
    let top_pairs = adjacent_pairs(t, Side::Top);
    let bottom_pairs: BTreeSet<usize> = adjacent_pairs(t, Side::Bottom).into_iter().collect();
    for &i in &top_pairs {
        if bottom_pairs.contains(&i) {
            rules.push(Rule::Negated((Side::Bottom, i), (Side::Top, i)));
        }
    }

    let mut known: BTreeMap<(Side, usize), i64> = BTreeMap::new();
    let conflict = |side: Side, position: usize| SpectrumError::PropagationConflict {
        ty: t.clone(),
        side,
        position,
    };
    let assign = |known: &mut BTreeMap<(Side, usize), i64>, key: (Side, usize), v: i64| -> Result<bool, SpectrumError> {
        match known.get(&key) {
            Some(&old) if old == v => Ok(false),
            Some(_) => Err(conflict(key.0, key.1)),
            None => {
                known.insert(key, v);
                Ok(true)
            }
        }
    };

    loop {
        let mut changed = false;
        for rule in &rules {
            match *rule {
                Rule::Fixed(side, i, v) => changed |= assign(&mut known, (side, i), v)?,
                Rule::SumOne(x, y) | Rule::Negated(x, y) => {
                    let combine = |v: i64| if matches!(rule, Rule::SumOne(..)) { 1 - v } else { -v };
                    match (known.get(&x).copied(), known.get(&y).copied()) {
                        (Some(vx), _) => changed |= assign(&mut known, y, combine(vx))?,
                        (None, Some(vy)) => changed |= assign(&mut known, x, combine(vy))?,
                        (None, None) => {}
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let expected = top_pairs.len() + bottom_pairs.len();
    if known.len() != expected {
        return Err(SpectrumError::PropagationIncomplete {
            ty: t.clone(),
            missing: expected - known.len(),
        });
    }
    let mut out = SimpleEigenvalues::default();
    for ((side, i), v) in known {
        match side {
            Side::Top => out.top.insert(i, v),
            Side::Bottom => out.bottom.insert(i, v),
        };
    }
    Ok(out)
}

/// Simple eigenvalues computed both ways; errors if the routes disagree.
pub fn simple_eigenvalues(dm: &DirectedMeander) -> Result<SimpleEigenvalues, SpectrumError> {
    let meas = Measures::new(dm)?;
    let direct = simple_eigenvalues_from_measures(dm.seaweed_type(), &meas);
    let propagated = simple_eigenvalues_by_propagation(dm)?;
    if direct != propagated {
        return Err(SpectrumError::RouteMismatch {
            ty: dm.seaweed_type().clone(),
        });
    }
    Ok(direct)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::meander::build_meander;
    use crate::rational::ratio;
    use crate::typesym::{parse_type, Composition};
    use proptest::prelude::*;

    fn dm(s: &str) -> DirectedMeander {
        DirectedMeander::from_type(&parse_type(s).unwrap())
    }

    /// Measure by literally walking the path from `i` to `j`, counting
    /// forward edges minus backward edges.
    fn walked_measure(dm: &DirectedMeander, i: usize, j: usize) -> i64 {
        let m = dm.undirected();
        let path = &components(m).components[0].vertices;
        let pi = path.iter().position(|&v| v == i).unwrap();
        let pj = path.iter().position(|&v| v == j).unwrap();
        let seg: Vec<usize> = if pi <= pj {
            path[pi..=pj].to_vec()
        } else {
            path[pj..=pi].iter().rev().copied().collect()
        };
        let edges: BTreeSet<(usize, usize)> = dm.edges().collect();
        seg.windows(2)
            .map(|w| if edges.contains(&(w[0], w[1])) { 1 } else { -1 })
            .sum()
    }

    #[test]
    fn figure_shape() {
        let shape = seaweed_shape(&parse_type("2|4/1|2|3").unwrap());
        let expected: BTreeSet<_> = [(2, 1), (2, 3), (4, 3), (4, 5), (4, 6), (5, 3), (5, 4), (5, 6), (6, 3), (6, 4), (6, 5)]
            .into_iter()
            .collect();
        assert_eq!(shape.admissible, expected);
        assert_eq!(shape.dimension(), 16);

        let shape = seaweed_shape(&parse_type("2/1|1").unwrap());
        assert_eq!(shape.admissible, BTreeSet::from([(2, 1)]));
        assert_eq!(shape.dimension(), 2);

        let shape = seaweed_shape(&parse_type("1|1/1|1").unwrap());
        assert!(shape.admissible.is_empty());
        assert_eq!(shape.dimension(), 1);
    }

    #[test]
    fn figure_measures() {
        let d = dm("2|4/1|2|3");
        assert_eq!(measure(&d, 5, 3).unwrap(), 3);
        assert_eq!(measure(&d, 4, 5).unwrap(), -1);
        assert_eq!(measure(&d, 2, 2).unwrap(), 0);
        assert!(matches!(measure(&d, 0, 2), Err(SpectrumError::VertexOutOfRange { .. })));
        assert!(matches!(measure(&dm("2/2"), 1, 2), Err(SpectrumError::NotFrobenius(_))));
    }

    #[test]
    fn principal_with_v5() {
        let pe = principal_element_with_reference(&dm("2|4/1|2|3"), 5).unwrap();
        assert_eq!(pe.raw_measures, vec![-3, -2, -3, -1, 0, -2]);
        let expected = vec![ratio(-7, 6), ratio(-1, 6), ratio(-7, 6), ratio(5, 6), ratio(11, 6), ratio(-1, 6)];
        assert_eq!(pe.diag, expected);
        assert_eq!(principal_element(&dm("2|4/1|2|3")).unwrap().diag, expected);
    }

    #[test]
    fn principal_small() {
        let pe = principal_element(&dm("1/1")).unwrap();
        assert_eq!(pe.raw_measures, vec![0]);
        assert_eq!(pe.diag, vec![ratio(0, 1)]);

        let pe = principal_element(&dm("2|2/1|3")).unwrap();
        assert_eq!(pe.diag, vec![ratio(0, 1), ratio(1, 1), ratio(-1, 1), ratio(0, 1)]);

        let pe = principal_element(&dm("2/1|1")).unwrap();
        assert_eq!(pe.raw_measures, vec![-1, 0]);
        assert_eq!(pe.diag, vec![ratio(-1, 2), ratio(1, 2)]);
        assert!(principal_element(&dm("2/2")).is_err());
    }

    #[test]
    fn spectra() {
        let s = spectrum(&parse_type("2|4/1|2|3").unwrap()).unwrap();
        assert_eq!(s, SpectrumMultiset::from_counts([(-2, 1), (-1, 2), (0, 5), (1, 5), (2, 2), (3, 1)]));
        let s = spectrum(&parse_type("2|2/1|3").unwrap()).unwrap();
        assert_eq!(s, SpectrumMultiset::from_counts([(-1, 1), (0, 3), (1, 3), (2, 1)]));
        let s = spectrum(&parse_type("2/1|1").unwrap()).unwrap();
        assert_eq!(s, SpectrumMultiset::from_counts([(0, 1), (1, 1)]));
        assert!(matches!(spectrum(&parse_type("2/2").unwrap()), Err(SpectrumError::NotFrobenius(_))));
    }

    #[test]
    fn block_contributions() {
        let d = dm("2|4/1|2|3");
        let first = block_contribution(&d, BlockId { side: Side::Top, index: 1 }).unwrap();
        assert_eq!(first, SpectrumMultiset::from_counts([(0, 1), (1, 1)]));
        let single = block_contribution(&d, BlockId { side: Side::Bottom, index: 1 }).unwrap();
        assert!(single.is_empty());
        assert!(matches!(
            block_contribution(&d, BlockId { side: Side::Bottom, index: 4 }),
            Err(SpectrumError::BlockOutOfRange { count: 3, .. })
        ));
        let mut union = SpectrumMultiset::new();
        for (id, _) in blocks(d.seaweed_type()) {
            union.merge(&block_contribution(&d, id).unwrap());
        }
        assert_eq!(union, spectrum(d.seaweed_type()).unwrap());
    }

    #[test]
    fn sigma_tau_examples() {
        let sets = sigma_tau(&dm("2/1|1"), 1, 2).unwrap();
        assert_eq!(sets.sigma_left, BTreeSet::from([0, 1]));
        assert_eq!(sets.tau_left, BTreeSet::from([0, 1]));

        let sets = sigma_tau(&dm("2|4/1|2|3"), 4, 4).unwrap();
        for s in [&sets.sigma_left, &sets.sigma_right, &sets.tau_left, &sets.tau_right] {
            assert_eq!(s, &BTreeSet::from([0]));
        }

        // D = (-3, -2, -3, -1, 0, -2); pairs i >= k inside [3..6].
        let sets = sigma_tau(&dm("2|4/1|2|3"), 3, 6).unwrap();
        assert_eq!(sets.sigma_left, BTreeSet::from([-2, -1, 0, 1, 2, 3]));
        assert_eq!(sets.tau_left, BTreeSet::from([0, 1, 2, 3]));

        assert!(matches!(sigma_tau(&dm("2/1|1"), 2, 1), Err(SpectrumError::RangeInvalid { .. })));
        assert!(matches!(sigma_tau(&dm("2/1|1"), 1, 3), Err(SpectrumError::RangeInvalid { .. })));
    }

    #[test]
    fn simple_examples() {
        let s = simple_eigenvalues(&dm("2|4/1|2|3")).unwrap();
        assert_eq!(s.top[&1], 1);

        let s = simple_eigenvalues(&dm("6|5|3/14")).unwrap();
        assert!(s.values().all(|v| (1..=3).contains(&v.abs())));
        assert!(s.values().any(|v| v == 3));
        assert!(s.values().any(|v| v == -3));
        assert!(simple_eigenvalues(&dm("2/2")).is_err());
    }

    fn arb_frobenius() -> impl Strategy<Value = SeaweedType> {
        (2usize..=12)
            .prop_flat_map(|n| {
                let masks = 1u64 << (n - 1);
                (0..masks, 0..masks).prop_map(move |(a, b)| {
                    let top = Composition::all(n).nth(a as usize).unwrap();
                    let bottom = Composition::all(n).nth(b as usize).unwrap();
                    SeaweedType::new(top, bottom).unwrap()
                })
            })
            .prop_filter("Frobenius", |t| crate::meander::is_frobenius(&build_meander(t)))
    }

    proptest! {
        #[test]
        fn measure_laws(t in arb_frobenius()) {
            let d = DirectedMeander::from_type(&t);
            let meas = Measures::new(&d).unwrap();
            let n = t.n();
            for i in 1..=n {
                prop_assert_eq!(meas.get(i, i), 0);
                for j in 1..=n {
                    prop_assert_eq!(meas.get(i, j), -meas.get(j, i));
                    prop_assert_eq!(meas.get(i, j), walked_measure(&d, i, j));
                    for k in 1..=n {
                        prop_assert_eq!(meas.get(i, k), meas.get(i, j) + meas.get(j, k));
                    }
                }
            }
        }

        #[test]
        fn principal_reference_independent(t in arb_frobenius()) {
            let d = DirectedMeander::from_type(&t);
            let base = principal_element_with_reference(&d, 1).unwrap();
            let sum: Rational = base.diag.iter().sum();
            prop_assert_eq!(sum, ratio(0, 1));
            let n = t.n() as i64;
            for v in 2..=t.n() {
                let other = principal_element_with_reference(&d, v).unwrap();
                prop_assert_eq!(&other.diag, &base.diag);
                let c = &other.diag[0] - rational::from_int(other.raw_measures[0]);
                for (x, &raw) in other.diag.iter().zip(&other.raw_measures) {
                    prop_assert_eq!(x - rational::from_int(raw), c.clone());
                    prop_assert!((BigInt::from(n) % x.denom()) == BigInt::from(0));
                }
            }
        }

        #[test]
        fn spectrum_structure(t in arb_frobenius()) {
            let d = DirectedMeander::from_type(&t);
            let meas = Measures::new(&d).unwrap();
            let s = spectrum_from_measures(&t, &meas);
            prop_assert_eq!(s.total() as usize, seaweed_shape(&t).dimension());
            let mut union = SpectrumMultiset::new();
            for (id, r) in blocks(&t) {
                union.merge(&block_contribution_from_measures(&meas, id.side, &r));
            }
            prop_assert_eq!(union, s);
        }

        #[test]
        fn simple_routes_agree(t in arb_frobenius()) {
            let d = DirectedMeander::from_type(&t);
            let s = simple_eigenvalues(&d).unwrap();
            let meas = Measures::new(&d).unwrap();
            // Every measure across a run of adjacent top (bottom) pairs is the
            // sum of the simple eigenvalues along it.
            for (id, r) in blocks(&t) {
                for j in r.clone() {
                    for k in j..=*r.end() {
                        let (table, v) = match id.side {
                            Side::Top => (&s.top, meas.get(k, j)),
                            Side::Bottom => (&s.bottom, meas.get(j, k)),
                        };
                        let sum: i64 = (j..k).map(|i| table[&i]).sum();
                        prop_assert_eq!(sum, v);
                    }
                }
            }
        }
    }
}
