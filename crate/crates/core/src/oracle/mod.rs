//! Independent verification by exact linear algebra.
//!
//! Nothing here walks the meander path. The seaweed is built as a subspace of
//! `gl(n)`, the Kirillov form `B_F(x, y) = F([x, y])` is assembled from matrix
//! commutators, the index is its corank, and the principal element is the
//! solution of `F([F̂, y]) = F(y)` for all basis vectors `y`.

pub mod bareiss;

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::meander::{build_meander, orient, DirectedMeander};
use crate::rational::{self, Rational};
use crate::spectrum::{seaweed_shape, PrincipalElement, SpectrumMultiset};
use crate::typesym::SeaweedType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not Frobenius: the Kirillov form is singular")]
    NotFrobenius(SeaweedType),
    #[error("principal element of {0} has off-diagonal components")]
    NonDiagonalSolution(SeaweedType),
    #[error("solved principal element of {0} fails F([F̂, b]) = F(b)")]
    DefiningPropertyFailed(SeaweedType),
    #[error("ad F̂ is not diagonal on the basis of {0}")]
    NonDiagonalAdjoint(SeaweedType),
    #[error("ad F̂ has a non-integral eigenvalue on {0}")]
    NonIntegralEigenvalue(SeaweedType),
}

/// Basis vector of a seaweed subalgebra of `sl(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum BasisElement {
    /// `e_ij`, `i != j`
    OffDiagonal(usize, usize),
    /// `e_ii - e_(i+1)(i+1)`, `1 <= i <= n - 1`
    Cartan(usize),
}

/// Canonical basis: off-diagonal positions in lexicographic order, then the
/// Cartan elements in ascending order.
pub fn basis(t: &SeaweedType) -> Vec<BasisElement> {
    let shape = seaweed_shape(t);
    shape
        .admissible
        .iter()
        .map(|&(i, j)| BasisElement::OffDiagonal(i, j))
        .chain((1..t.n()).map(BasisElement::Cartan))
        .collect()
}

/// Sparse `gl(n)` matrix: `(row, col) -> coefficient`.
type GlElement<T> = BTreeMap<(usize, usize), T>;

fn as_matrix(b: BasisElement) -> GlElement<i64> {
    match b {
        BasisElement::OffDiagonal(i, j) => GlElement::from([((i, j), 1)]),
        BasisElement::Cartan(i) => GlElement::from([((i, i), 1), ((i + 1, i + 1), -1)]),
    }
}

/// `xy - yx`
fn commutator<T>(x: &GlElement<T>, y: &GlElement<T>) -> GlElement<T>
where
    T: Clone + Zero + std::ops::Mul<Output = T> + std::ops::Sub<Output = T>,
{
    let mut out: GlElement<T> = BTreeMap::new();
    let mut accumulate = |a: &GlElement<T>, b: &GlElement<T>, positive: bool| {
        for (&(i, k), u) in a {
            for (&(k2, j), v) in b {
                if k == k2 {
                    let prod = u.clone() * v.clone();
                    let slot = out.entry((i, j)).or_insert_with(T::zero);
                    *slot = if positive { slot.clone() + prod } else { slot.clone() - prod };
                }
            }
        }
    };
    accumulate(x, y, true);
    accumulate(y, x, false);
    out.retain(|_, v| !v.is_zero());
    out
}

/// Linear functional `F = Σ w_s e*_s` on `gl(n)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Functional {
    weights: BTreeMap<(usize, usize), i64>,
}

impl Functional {
    pub fn from_support<I: IntoIterator<Item = (usize, usize)>>(support: I) -> Self {
        Functional {
            weights: support.into_iter().map(|s| (s, 1)).collect(),
        }
    }

    pub fn from_weights(weights: BTreeMap<(usize, usize), i64>) -> Self {
        let mut weights = weights;
        weights.retain(|_, w| *w != 0);
        Functional { weights }
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.weights.keys().copied()
    }

    pub fn weights(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.weights
    }

    fn eval(&self, x: &GlElement<i64>) -> i64 {
        x.iter().map(|(pos, c)| self.weights.get(pos).map_or(0, |w| w * c)).sum()
    }

    fn eval_rational(&self, x: &GlElement<Rational>) -> Rational {
        x.iter()
            .filter_map(|(pos, c)| self.weights.get(pos).map(|&w| rational::from_int(w) * c))
            .sum()
    }
}

/// The Dergachev–Kirillov functional: unit weight on every directed edge.
pub fn dk_functional(dm: &DirectedMeander) -> Functional {
    Functional::from_support(dm.edges())
}

/// Matrix of `B_F` on the canonical basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KirillovMatrix {
    pub basis: Vec<BasisElement>,
    pub entries: Vec<Vec<i64>>,
}

impl KirillovMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        bareiss::rank(&self.entries)
    }

    pub fn kernel_dim(&self) -> usize {
        self.dim() - self.rank()
    }
}

/// `entries[x][y] = F([b_x, b_y])`, commutators taken in `gl(n)`.
pub fn kirillov_matrix(t: &SeaweedType, f: &Functional) -> KirillovMatrix {
    let basis = basis(t);
    let mats: Vec<GlElement<i64>> = basis.iter().map(|&b| as_matrix(b)).collect();
    let dim = basis.len();
    let mut entries = vec![vec![0i64; dim]; dim];
    for x in 0..dim {
        for y in x + 1..dim {
            let v = f.eval(&commutator(&mats[x], &mats[y]));
            entries[x][y] = v;
            entries[y][x] = -v;
        }
    }
    KirillovMatrix { basis, entries }
}

fn dk_matrix(t: &SeaweedType) -> (Functional, KirillovMatrix) {
    let f = dk_functional(&orient(&build_meander(t)));
    let k = kirillov_matrix(t, &f);
    (f, k)
}

/// Corank of the Kirillov form of the Dergachev–Kirillov functional. This is
/// the index when the meander is a single path, and can exceed it when the
/// meander has cycles (4/4 gives 7 against an index of 3).
pub fn dk_corank(t: &SeaweedType) -> usize {
    dk_matrix(t).1.kernel_dim()
}

const GENERIC_SAMPLES: usize = 2;
const GENERIC_SEED: u64 = 0x5eaeed;

/// Kernel dimension of `B_F` for a generic `F`, estimated from seeded random
/// functionals with weights below `2^31`, ranked modulo `2^61 - 1`.
///
/// Every sample is an upper bound on the index. A sample overshoots only when
/// its weights are a root of some nonzero minor of degree at most `dim`, which
/// happens with probability below `dim / 2^31`.
pub fn generic_kernel_dim(t: &SeaweedType) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(GENERIC_SEED);
    let shape = seaweed_shape(t);
    (0..GENERIC_SAMPLES)
        .map(|_| {
            let positions = shape.admissible.iter().copied().chain((1..=t.n()).map(|i| (i, i)));
            let f = Functional::from_weights(positions.map(|p| (p, rng.gen_range(1..1i64 << 31))).collect());
            let k = kirillov_matrix(t, &f);
            k.dim() - bareiss::rank_mod_prime(&k.entries, bareiss::MERSENNE_61)
        })
        .min()
        .unwrap_or(0)
}

/// Index of the seaweed: the smaller of [`dk_corank`] and
/// [`generic_kernel_dim`]. Frobenius types are certified exactly by the
/// Dergachev–Kirillov functional.
pub fn oracle_index(t: &SeaweedType) -> usize {
    match dk_corank(t) {
        0 => 0,
        dk => dk.min(generic_kernel_dim(t)),
    }
}

fn as_gl_rational(basis: &[BasisElement], coeffs: &[Rational]) -> GlElement<Rational> {
    let mut out: GlElement<Rational> = BTreeMap::new();
    for (&b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (pos, v) in as_matrix(b) {
            let slot = out.entry(pos).or_insert_with(Rational::zero);
            *slot += c * rational::from_int(v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn to_rational(x: &GlElement<i64>) -> GlElement<Rational> {
    x.iter().map(|(&pos, &v)| (pos, rational::from_int(v))).collect()
}

/// Coordinates of a seaweed element in the canonical basis. Diagonal
/// entries become Cartan coordinates through partial sums.
fn coordinates(t: &SeaweedType, basis: &[BasisElement], x: &GlElement<Rational>) -> Vec<Rational> {
    let n = t.n();
    let mut diag = vec![Rational::zero(); n + 1];
    let mut off = BTreeMap::new();
    for (&(i, j), v) in x {
        if i == j {
            diag[i] = v.clone();
        } else {
            off.insert((i, j), v.clone());
        }
    }
    let mut partial = Rational::zero();
    let mut cartan = vec![Rational::zero(); n];
    for k in 1..n {
        partial += &diag[k];
        cartan[k] = partial.clone();
    }
    basis
        .iter()
        .map(|b| match *b {
            BasisElement::OffDiagonal(i, j) => off.remove(&(i, j)).unwrap_or_else(Rational::zero),
            BasisElement::Cartan(k) => cartan[k].clone(),
        })
        .collect()
}

/// Principal element by solving `Σ_x c_x F([b_x, b_y]) = F(b_y)`.
pub fn oracle_principal(t: &SeaweedType) -> Result<PrincipalElement, OracleError> {
    let (f, k) = dk_matrix(t);
    let dim = k.dim();
    let n = t.n();
    let mats: Vec<GlElement<i64>> = k.basis.iter().map(|&b| as_matrix(b)).collect();
    // Row y of the system holds F([b_x, b_y]) = entries[x][y].
    let system: Vec<Vec<i64>> = (0..dim).map(|y| (0..dim).map(|x| k.entries[x][y]).collect()).collect();
    let rhs: Vec<i64> = mats.iter().map(|m| f.eval(m)).collect();
    let coeffs = bareiss::solve(&system, &rhs).ok_or_else(|| OracleError::NotFrobenius(t.clone()))?;

    let mut cartan = vec![Rational::zero(); n + 1];
    for (b, c) in k.basis.iter().zip(&coeffs) {
        match *b {
            BasisElement::OffDiagonal(..) if !c.is_zero() => return Err(OracleError::NonDiagonalSolution(t.clone())),
            BasisElement::OffDiagonal(..) => {}
            BasisElement::Cartan(i) => cartan[i] = c.clone(),
        }
    }

    // Re-verify the defining property on every basis vector.
    let principal = as_gl_rational(&k.basis, &coeffs);
    for (m, &target) in mats.iter().zip(&rhs) {
        if f.eval_rational(&commutator(&principal, &to_rational(m))) != rational::from_int(target) {
            return Err(OracleError::DefiningPropertyFailed(t.clone()));
        }
    }

    // Σ c_i (e_ii - e_(i+1)(i+1)) has diagonal entries c_k - c_(k-1).
    let diag: Vec<Rational> = (1..=n)
        .map(|k| {
            let here = if k < n { cartan[k].clone() } else { Rational::zero() };
            here - &cartan[k - 1]
        })
        .collect();
    let trace: Rational = diag.iter().sum();
    assert!(trace.is_zero(), "Cartan coordinates always give a traceless diagonal");

    let raw_measures = diag
        .iter()
        .map(|d| {
            let diff = d - &diag[n - 1];
            if diff.is_integer() {
                Ok(i64::try_from(diff.to_integer()).expect("measure fits in i64"))
            } else {
                Err(OracleError::NonIntegralEigenvalue(t.clone()))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PrincipalElement {
        diag,
        reference_vertex: n,
        raw_measures,
    })
}

/// Spectrum of `ad F̂` from its matrix on the canonical basis.
pub fn oracle_spectrum(t: &SeaweedType) -> Result<SpectrumMultiset, OracleError> {
    let principal = oracle_principal(t)?;
    let basis = basis(t);
    let f_hat: GlElement<Rational> = principal
        .diag
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| ((k + 1, k + 1), v.clone()))
        .collect();

    let mut spectrum = SpectrumMultiset::new();
    for (y, &b) in basis.iter().enumerate() {
        let image = commutator(&f_hat, &to_rational(&as_matrix(b)));
        let column = coordinates(t, &basis, &image);
        if column.iter().enumerate().any(|(x, v)| x != y && !v.is_zero()) {
            return Err(OracleError::NonDiagonalAdjoint(t.clone()));
        }
        let eigen = &column[y];
        if !eigen.is_integer() {
            return Err(OracleError::NonIntegralEigenvalue(t.clone()));
        }
        spectrum.add(i64::try_from(eigen.to_integer()).expect("eigenvalue fits in i64"), 1);
    }
    Ok(spectrum)
}

/// Results of comparing `F_MS` with random functionals on the same shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub index: usize,
    pub dk_corank: usize,
    pub min_random_kernel: usize,
    pub samples: usize,
    pub regular: bool,
}

/// Random functional with weights in `{1, ..., 5}` on every position of the
/// seaweed, diagonal included.
pub fn random_functional<R: Rng>(t: &SeaweedType, rng: &mut R) -> Functional {
    let shape = seaweed_shape(t);
    let positions = shape.admissible.iter().copied().chain((1..=t.n()).map(|i| (i, i)));
    Functional::from_weights(positions.map(|p| (p, rng.gen_range(1..=5))).collect())
}

/// Check that no sampled functional has a smaller Kirillov kernel than
/// [`oracle_index`].
pub fn regularity_spot_check(t: &SeaweedType, samples: usize, seed: u64) -> RegularityReport {
    let dk_corank = dk_corank(t);
    let index = if dk_corank == 0 { 0 } else { dk_corank.min(generic_kernel_dim(t)) };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let min_random_kernel = (0..samples)
        .map(|_| kirillov_matrix(t, &random_functional(t, &mut rng)).kernel_dim())
        .min()
        .unwrap_or(usize::MAX);
    RegularityReport {
        index,
        dk_corank,
        min_random_kernel,
        samples,
        regular: index <= min_random_kernel,
    }
}

/// Whether the oracle agrees with the meander construction on `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub index: usize,
    #[serde(serialize_with = "serialize_opt_pq", skip_serializing_if = "Option::is_none")]
    pub principal_element: Option<Vec<Rational>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumMultiset>,
    pub agrees_with_meander: bool,
}

fn serialize_opt_pq<S: serde::Serializer>(v: &Option<Vec<Rational>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(values) => rational::serialize_pq_seq(values, s),
        None => s.serialize_none(),
    }
}

/// Run every oracle computation on `t` and compare with the meander route.
pub fn cross_check(t: &SeaweedType) -> Result<OracleReport, OracleError> {
    let m = build_meander(t);
    let index = oracle_index(t);
    let graph = crate::meander::graph_index(&m);
    if index != 0 {
        return Ok(OracleReport {
            index,
            principal_element: None,
            spectrum: None,
            agrees_with_meander: index == graph,
        });
    }
    let principal = oracle_principal(t)?;
    let spectrum = oracle_spectrum(t)?;
    let dm = orient(&m);
    let agrees = graph == 0
        && crate::spectrum::principal_element(&dm).ok().as_ref() == Some(&principal)
        && crate::spectrum::spectrum(t).ok().as_ref() == Some(&spectrum);
    Ok(OracleReport {
        index,
        principal_element: Some(principal.diag),
        spectrum: Some(spectrum),
        agrees_with_meander: agrees,
    })
}
