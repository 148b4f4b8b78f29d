//! Random group elements, normalized wedge volumes, thickness evidence and
//! non-thickness witnesses.
//!
//! Every pair (or trial) `k` draws from its own ChaCha stream `k` under the
//! base seed, so results do not depend on how the work is scheduled.

use nalgebra::DMatrix;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{max_abs, MatrixRep, RepKind};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    /// Standard deviation of the exponent coefficients.
    pub sigma: f64,
    /// Passes over `(E_i, F_i, H_i)` for every simple root.
    pub passes: usize,
    /// Samples whose largest entry exceeds this are redrawn.
    pub norm_cap: f64,
    /// Random subspace bases with a larger condition number are redrawn.
    pub condition_cap: f64,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        SamplerConfig {
            sigma: 1.0,
            passes: 2,
            norm_cap: 1e6,
            condition_cap: 1e8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Thresholds {
    /// A pair is transversal when the normalized volume exceeds this.
    pub complement: f64,
    /// A witness vanishes when every observed volume stays below this.
    pub vanishing: f64,
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            complement: 1e-6,
            vanishing: 1e-9,
        }
    }
}

/// A pair `(V₁, V₂)` with `dim V₁ = m`, `dim V₂ = n − m`, as column bases.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceSample {
    pub v1: DMatrix<f64>,
    pub v2: DMatrix<f64>,
    pub m: usize,
}

impl SubspaceSample {
    pub fn new(v1: DMatrix<f64>, v2: DMatrix<f64>) -> Result<Self> {
        let n = v1.nrows();
        if v2.nrows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v2.nrows(),
            });
        }
        if v1.ncols() + v2.ncols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: v1.ncols() + v2.ncols(),
            });
        }
        Ok(SubspaceSample {
            m: v1.ncols(),
            v1,
            v2,
        })
    }

    pub fn dim(&self) -> usize {
        self.v1.nrows()
    }
}

fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn condition_number(m: &DMatrix<f64>) -> f64 {
    let sv = m.clone().svd(false, false).singular_values;
    let max = sv.iter().cloned().fold(0.0, f64::max);
    let min = sv.iter().cloned().fold(f64::INFINITY, f64::min);
    if min == 0.0 {
        f64::INFINITY
    } else {
        max / min
    }
}

fn gaussian_matrix<R: Rng>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| StandardNormal.sample(rng))
}

/// Product of `exp(t E_i) exp(t' F_i) exp(s H_i)` over all simple roots,
/// repeated `passes` times, with normally distributed coefficients.
pub fn random_group_element<R: Rng>(
    rep: &MatrixRep,
    config: &SamplerConfig,
    rng: &mut R,
) -> DMatrix<f64> {
    let normal = Normal::new(0.0, config.sigma).expect("valid sigma");
    loop {
        let mut g = DMatrix::<f64>::identity(rep.dim(), rep.dim());
        for _ in 0..config.passes {
            for i in 0..rep.rank() {
                for x in [&rep.e[i], &rep.f[i], &rep.h[i]] {
                    let t: f64 = normal.sample(rng);
                    g *= (x * t).exp();
                }
            }
        }
        if g.iter().all(|v| v.is_finite()) && max_abs(&g) <= config.norm_cap {
            return g;
        }
    }
}

/// Group element built from explicit coefficients, one per factor in the
/// order used by [`random_group_element`].
pub fn group_element_from_coefficients(rep: &MatrixRep, coefficients: &[f64]) -> DMatrix<f64> {
    let mut g = DMatrix::<f64>::identity(rep.dim(), rep.dim());
    let mut it = coefficients.iter();
    'outer: loop {
        for i in 0..rep.rank() {
            for x in [&rep.e[i], &rep.f[i], &rep.h[i]] {
                let Some(&t) = it.next() else { break 'outer };
                g *= (x * t).exp();
            }
        }
    }
    g
}

fn orthonormal_columns(m: &DMatrix<f64>) -> DMatrix<f64> {
    if m.ncols() == 0 {
        return m.clone();
    }
    m.clone().qr().q()
}

/// `|det [g·V₁ | V₂]|` after orthonormalizing each block, i.e. the product
/// of the sines of the principal angles between `g·V₁` and `V₂`. Independent
/// of the bases chosen for `V₁` and `V₂`; `1` means orthogonal complements
/// and `0` means the sum is not direct.
pub fn wedge_volume(g: &DMatrix<f64>, s: &SubspaceSample) -> f64 {
    let a = orthonormal_columns(&(g * &s.v1));
    let b = orthonormal_columns(&s.v2);
    let n = s.dim();
    let mut full = DMatrix::<f64>::zeros(n, n);
    full.columns_mut(0, a.ncols()).copy_from(&a);
    full.columns_mut(a.ncols(), b.ncols()).copy_from(&b);
    full.determinant().abs()
}

/// Random pair with Gaussian bases, redrawn until both are well conditioned.
pub fn random_subspace_pair<R: Rng>(
    n: usize,
    m: usize,
    config: &SamplerConfig,
    rng: &mut R,
) -> SubspaceSample {
    loop {
        let v1 = gaussian_matrix(n, m, rng);
        let v2 = gaussian_matrix(n, n - m, rng);
        if (m == 0 || condition_number(&v1) < config.condition_cap)
            && (m == n || condition_number(&v2) < config.condition_cap)
        {
            return SubspaceSample { v1, v2, m };
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub pair_seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub rep: String,
    pub m: usize,
    pub pairs: usize,
    pub retries: usize,
    pub threshold: f64,
    pub success_fraction: f64,
    /// Smallest over pairs of the best volume found for that pair.
    pub min_volume: f64,
    pub median_volume: f64,
    pub failures: Vec<PairFailure>,
    pub note: String,
}

impl EvidenceReport {
    pub fn all_succeeded(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For `pairs` random `(V₁, V₂)`, look for a group element making
/// `g·V₁ ⊕ V₂` direct within `retries` fresh draws.
pub fn sample_thickness_evidence(
    rep: &MatrixRep,
    m: usize,
    pairs: usize,
    retries: usize,
    seed: u64,
    config: &SamplerConfig,
    thresholds: &Thresholds,
) -> Result<EvidenceReport> {
    let n = rep.dim();
    if m == 0 || m >= n {
        return Err(Error::MOutOfRange { m, dim: n as u128 });
    }
    let best: Vec<(u64, f64)> = (0..pairs as u64)
        .into_par_iter()
        .map(|pair| {
            let mut rng = stream(seed, pair);
            let sample = random_subspace_pair(n, m, config, &mut rng);
            let mut best = 0.0f64;
            for _ in 0..retries.max(1) {
                let g = random_group_element(rep, config, &mut rng);
                best = best.max(wedge_volume(&g, &sample));
                if best > thresholds.complement {
                    break;
                }
            }
            (pair, best)
        })
        .collect();
    let failures: Vec<PairFailure> = best
        .iter()
        .filter(|(_, v)| *v <= thresholds.complement)
        .map(|&(pair_seed, _)| PairFailure { pair_seed })
        .collect();
    let mut volumes: Vec<f64> = best.iter().map(|(_, v)| *v).collect();
    volumes.sort_by(|a, b| a.total_cmp(b));
    let median = if volumes.is_empty() {
        0.0
    } else {
        volumes[volumes.len() / 2]
    };
    Ok(EvidenceReport {
        rep: rep.kind.to_string(),
        m,
        pairs,
        retries,
        threshold: thresholds.complement,
        success_fraction: if pairs == 0 {
            1.0
        } else {
            (pairs - failures.len()) as f64 / pairs as f64
        },
        min_volume: volumes.first().copied().unwrap_or(0.0),
        median_volume: median,
        failures,
        note: "sampled evidence for m-thickness, not a proof".into(),
    })
}

/// Maximal isotropic pair in `SO_{2n}` that no group element separates.
///
/// With coordinates `x₁..xₙ, y₁..yₙ` and form `Σ xᵢyᵢ`, `V₁ = span(x)`.
/// Two maximal isotropic subspaces lie in the same ruling iff their
/// intersection has dimension `≡ n (mod 2)`, and `SO_{2n}` preserves the
/// ruling, so `dim(g·V₁ ∩ V₂)` is odd for every `g` when
/// `V₂ = span(x₁..x_{n−1}, yₙ)` (n even) or `V₂ = V₁` (n odd).
pub fn so_even_witness(n: usize) -> Result<SubspaceSample> {
    if n < 2 {
        return Err(Error::Unsupported(format!("so-even witness needs n >= 2, got {n}")));
    }
    let big = 2 * n;
    let x = |k: usize| k; // x_{k+1}
    let y = |k: usize| big - 1 - k; // y_{k+1}
    let cols = |idx: &[usize]| {
        let mut m = DMatrix::<f64>::zeros(big, idx.len());
        for (c, &r) in idx.iter().enumerate() {
            m[(r, c)] = 1.0;
        }
        m
    };
    let xs: Vec<usize> = (0..n).map(x).collect();
    let v1 = cols(&xs);
    let v2 = if n % 2 == 1 {
        v1.clone()
    } else {
        let mut idx: Vec<usize> = (0..n - 1).map(x).collect();
        idx.push(y(n - 1));
        cols(&idx)
    };
    SubspaceSample::new(v1, v2)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub rep: String,
    pub witness_kind: String,
    pub trials: usize,
    /// Trials actually run; fewer than `trials` when a transversal `g` was found.
    pub trials_run: usize,
    pub max_volume: f64,
    pub threshold: f64,
    pub verdict: bool,
}

/// Checks that `g·V₁ ⊕ V₂` fails for every sampled `g`, stopping at the
/// first counter-observation. Sampling never includes the identity on purpose.
pub fn verify_nonthick_witness(
    rep: &MatrixRep,
    s: &SubspaceSample,
    witness_kind: &str,
    trials: usize,
    seed: u64,
    config: &SamplerConfig,
    thresholds: &Thresholds,
) -> Result<WitnessReport> {
    if s.dim() != rep.dim() {
        return Err(Error::DimensionMismatch {
            expected: rep.dim(),
            got: s.dim(),
        });
    }
    let mut max_volume = 0.0f64;
    let mut run = 0;
    for trial in 0..trials as u64 {
        let mut rng = stream(seed, trial);
        let g = random_group_element(rep, config, &mut rng);
        max_volume = max_volume.max(wedge_volume(&g, s));
        run += 1;
        if max_volume >= thresholds.vanishing {
            break;
        }
    }
    Ok(WitnessReport {
        rep: rep.kind.to_string(),
        witness_kind: witness_kind.into(),
        trials,
        trials_run: run,
        max_volume,
        threshold: thresholds.vanishing,
        verdict: max_volume < thresholds.vanishing,
    })
}

impl RepKind {
    /// The canonical non-thickness witness for this realization, if any.
    pub fn witness(&self) -> Option<Result<SubspaceSample>> {
        match self {
            RepKind::SoEvenStd(n) => Some(so_even_witness(*n)),
            _ => None,
        }
    }
}
