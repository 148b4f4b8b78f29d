//! Floating-point matrix realizations of the thick representations and
//! numerical transversality experiments on them.
//!
//! Matrices act on a weight basis ordered from the highest weight down, so
//! every `H_i` is diagonal and the coordinate subspaces are weight spaces.
//! The orthogonal and symplectic groups use split (antidiagonal) forms.

mod exterior;
mod sampling;

use std::fmt;
use std::sync::Arc;

use nalgebra::DMatrix;

use crate::character::{weight_system, IrrepLabel};
use crate::error::{Error, Result};
use crate::poset::{build_poset, is_chain, is_wmf};
use crate::rootsystem::{CartanType, Family, RootSystem, Weight};

pub use exterior::{exterior_derivation, exterior_orth_complement, k_subsets};
pub use sampling::{
    group_element_from_coefficients, random_group_element, random_subspace_pair, sample_thickness_evidence, so_even_witness,
    verify_nonthick_witness, wedge_volume, EvidenceReport, PairFailure, SamplerConfig,
    SubspaceSample, Thresholds, WitnessReport,
};

/// Tolerance on Chevalley-relation residuals.
pub const RELATION_TOLERANCE: f64 = 1e-10;

/// Supported matrix realizations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepKind {
    /// `SL_n` on `Cⁿ`.
    SlStd(usize),
    /// `SO_{2n+1}` on `C^{2n+1}`.
    SoOddStd(usize),
    /// `SO_{2n}` on `C^{2n}`; `n = 2` is realized over `A₁ × A₁`.
    SoEvenStd(usize),
    /// `Sp_{2n}` on `C^{2n}`.
    SpStd(usize),
    /// `Sᵐ C²` of `SL₂`.
    SymSl2(usize),
    /// The 7-dimensional representation of `G₂`, built by the chain solver.
    G2Seven,
    /// Any weight multiplicity-free irreducible with a chain weight poset.
    Chain(IrrepLabel),
}

impl RepKind {
    /// Parses the CLI form `(name, n)`, e.g. `("so-even", 2)` for `SO₄`.
    pub fn from_cli(name: &str, n: usize) -> Result<RepKind> {
        let kind = match name {
            "sl-std" => RepKind::SlStd(n),
            "so-odd" => RepKind::SoOddStd(n),
            "so-even" => RepKind::SoEvenStd(n),
            "sp-std" => RepKind::SpStd(n),
            "sym-sl2" => RepKind::SymSl2(n),
            "g2" => RepKind::G2Seven,
            other => return Err(Error::Unsupported(format!("unknown rep {other:?}"))),
        };
        kind.label()?;
        Ok(kind)
    }

    pub fn label(&self) -> Result<IrrepLabel> {
        let simple = |f: Family, rank: usize, hw: Vec<i64>| -> Result<IrrepLabel> {
            IrrepLabel::new(Arc::new(RootSystem::build(f, rank)?), Weight(hw))
        };
        let first = |rank: usize| {
            let mut hw = vec![0; rank];
            if rank > 0 {
                hw[0] = 1;
            }
            hw
        };
        match self {
            RepKind::SlStd(n) if *n >= 2 => simple(Family::A, n - 1, first(n - 1)),
            RepKind::SoOddStd(n) if *n >= 2 => simple(Family::B, *n, first(*n)),
            RepKind::SoEvenStd(2) => {
                let a1 = CartanType::new(Family::A, 1)?;
                IrrepLabel::new(Arc::new(RootSystem::product(&[a1, a1])), Weight(vec![1, 1]))
            }
            RepKind::SoEvenStd(n) if *n >= 3 => simple(Family::D, *n, first(*n)),
            RepKind::SpStd(n) if *n >= 2 => simple(Family::C, *n, first(*n)),
            RepKind::SymSl2(m) if *m >= 1 => simple(Family::A, 1, vec![*m as i64]),
            RepKind::G2Seven => simple(Family::G, 2, vec![1, 0]),
            RepKind::Chain(l) => Ok(l.clone()),
            other => Err(Error::Unsupported(format!("{other} has no valid rank"))),
        }
    }
}

impl fmt::Display for RepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepKind::SlStd(n) => write!(f, "sl-std:{n}"),
            RepKind::SoOddStd(n) => write!(f, "so-odd:{n}"),
            RepKind::SoEvenStd(n) => write!(f, "so-even:{n}"),
            RepKind::SpStd(n) => write!(f, "sp-std:{n}"),
            RepKind::SymSl2(m) => write!(f, "sym-sl2:{m}"),
            RepKind::G2Seven => write!(f, "g2"),
            RepKind::Chain(l) => write!(f, "chain:{l}"),
        }
    }
}

/// Chevalley generators `E_i, F_i, H_i` of a representation on a weight basis.
#[derive(Debug, Clone)]
pub struct MatrixRep {
    pub kind: RepKind,
    pub label: IrrepLabel,
    pub basis: Vec<Weight>,
    pub e: Vec<DMatrix<f64>>,
    pub f: Vec<DMatrix<f64>>,
    pub h: Vec<DMatrix<f64>>,
}

/// Largest absolute entry.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0, |acc, x| acc.max(x.abs()))
}

fn commutator(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a * b - b * a
}

fn unit(n: usize, r: usize, c: usize) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(n, n);
    m[(r, c)] = 1.0;
    m
}

/// Residuals of the defining relations, worst case over all index pairs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelationResiduals {
    pub h_e: f64,
    pub h_f: f64,
    pub e_f_same: f64,
    pub e_f_cross: f64,
    pub serre: f64,
}

impl RelationResiduals {
    pub fn max(&self) -> f64 {
        [self.h_e, self.h_f, self.e_f_same, self.e_f_cross, self.serre]
            .into_iter()
            .fold(0.0, f64::max)
    }
}

impl MatrixRep {
    pub fn build(kind: RepKind) -> Result<MatrixRep> {
        let label = kind.label()?;
        let rep = match &kind {
            RepKind::SlStd(n) => sl_std(*n, kind.clone(), label),
            RepKind::SoOddStd(n) => orthosymplectic(Classical::SoOdd, *n, kind.clone(), label),
            RepKind::SoEvenStd(n) => orthosymplectic(Classical::SoEven, *n, kind.clone(), label),
            RepKind::SpStd(n) => orthosymplectic(Classical::Sp, *n, kind.clone(), label),
            RepKind::SymSl2(m) => sym_sl2(*m, kind.clone(), label),
            RepKind::G2Seven | RepKind::Chain(_) => chain_solve(kind.clone(), label)?,
        };
        rep.validate()?;
        Ok(rep)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rank(&self) -> usize {
        self.e.len()
    }

    pub fn relation_residuals(&self) -> RelationResiduals {
        let cartan = self.label.root_system().cartan_matrix();
        let r = self.rank();
        let mut res = RelationResiduals {
            h_e: 0.0,
            h_f: 0.0,
            e_f_same: 0.0,
            e_f_cross: 0.0,
            serre: 0.0,
        };
        for i in 0..r {
            for j in 0..r {
                let a_ji = cartan[j][i] as f64;
                res.h_e = res
                    .h_e
                    .max(max_abs(&(commutator(&self.h[i], &self.e[j]) - &self.e[j] * a_ji)));
                res.h_f = res
                    .h_f
                    .max(max_abs(&(commutator(&self.h[i], &self.f[j]) + &self.f[j] * a_ji)));
                let ef = commutator(&self.e[i], &self.f[j]);
                if i == j {
                    res.e_f_same = res.e_f_same.max(max_abs(&(ef - &self.h[i])));
                } else {
                    res.e_f_cross = res.e_f_cross.max(max_abs(&ef));
                    // (ad x_i)^{1 − A_ji} x_j = 0
                    let power = (1 - cartan[j][i]) as usize;
                    for xs in [&self.e, &self.f] {
                        let mut acc = xs[j].clone();
                        for _ in 0..power {
                            acc = commutator(&xs[i], &acc);
                        }
                        res.serre = res.serre.max(max_abs(&acc));
                    }
                }
            }
        }
        res
    }

    /// Numeric weights read off the diagonals of the `H_i`.
    pub fn h_spectrum(&self) -> Vec<Vec<f64>> {
        (0..self.dim())
            .map(|b| self.h.iter().map(|h| h[(b, b)]).collect())
            .collect()
    }

    /// The `H_i` are diagonal, their spectra equal the basis weights, and
    /// the basis weights are exactly the symbolic weight system.
    pub fn spectrum_matches_weight_system(&self) -> Result<bool> {
        for h in &self.h {
            for r in 0..h.nrows() {
                for c in 0..h.ncols() {
                    if r != c && h[(r, c)] != 0.0 {
                        return Ok(false);
                    }
                }
            }
        }
        for (b, row) in self.h_spectrum().iter().enumerate() {
            for (i, &x) in row.iter().enumerate() {
                if x != self.basis[b].0[i] as f64 {
                    return Ok(false);
                }
            }
        }
        let symbolic = weight_system(&self.label)?;
        let mut counts = symbolic.entries().clone();
        for w in &self.basis {
            match counts.get_mut(w) {
                Some(m) if *m > 0 => *m -= 1,
                _ => return Ok(false),
            }
        }
        Ok(counts.values().all(|&m| m == 0))
    }

    pub fn validate(&self) -> Result<()> {
        let res = self.relation_residuals();
        if res.max() >= RELATION_TOLERANCE {
            return Err(Error::Construction(format!(
                "{}: relation residuals {res:?}",
                self.kind
            )));
        }
        if !self.spectrum_matches_weight_system()? {
            return Err(Error::Construction(format!(
                "{}: H-spectrum differs from the weight system",
                self.kind
            )));
        }
        Ok(())
    }

    /// `F_i` as a scalar multiple of `E_iᵀ` fixed by `[E_i, F_i] = H_i`.
    fn lowering_from_raising(e: &DMatrix<f64>, h: &DMatrix<f64>) -> DMatrix<f64> {
        let et = e.transpose();
        let c = commutator(e, &et);
        let p = (0..c.nrows())
            .find(|&p| c[(p, p)].abs() > 0.5)
            .expect("nonzero raising operator");
        et * (h[(p, p)] / c[(p, p)])
    }
}

fn basis_from_h(h: &[DMatrix<f64>]) -> Vec<Weight> {
    let n = h.first().map(|m| m.nrows()).unwrap_or(0);
    (0..n)
        .map(|b| Weight(h.iter().map(|m| m[(b, b)].round() as i64).collect()))
        .collect()
}

fn diag(values: &[f64]) -> DMatrix<f64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(values))
}

fn sl_std(n: usize, kind: RepKind, label: IrrepLabel) -> MatrixRep {
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut h = Vec::new();
    for i in 0..n - 1 {
        let mut d = vec![0.0; n];
        d[i] = 1.0;
        d[i + 1] = -1.0;
        e.push(unit(n, i, i + 1));
        f.push(unit(n, i + 1, i));
        h.push(diag(&d));
    }
    MatrixRep {
        kind,
        label,
        basis: basis_from_h(&h),
        e,
        f,
        h,
    }
}

fn sym_sl2(m: usize, kind: RepKind, label: IrrepLabel) -> MatrixRep {
    // Basis x^{m−k} y^k, E = x ∂/∂y, F = y ∂/∂x.
    let n = m + 1;
    let mut e = DMatrix::zeros(n, n);
    let mut f = DMatrix::zeros(n, n);
    for k in 0..n {
        if k > 0 {
            e[(k - 1, k)] = k as f64;
        }
        if k < m {
            f[(k + 1, k)] = (m - k) as f64;
        }
    }
    let h = diag(&(0..n).map(|k| m as f64 - 2.0 * k as f64).collect::<Vec<_>>());
    MatrixRep {
        kind,
        label,
        basis: basis_from_h(std::slice::from_ref(&h)),
        e: vec![e],
        f: vec![f],
        h: vec![h],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Classical {
    SoOdd,
    SoEven,
    Sp,
}

/// Split-form realizations. Basis order `ε₁ … εₙ, (0), −εₙ … −ε₁`; the
/// invariant form pairs index `p` with `N − 1 − p`.
fn orthosymplectic(which: Classical, n: usize, kind: RepKind, label: IrrepLabel) -> MatrixRep {
    let big = match which {
        Classical::SoOdd => 2 * n + 1,
        _ => 2 * n,
    };
    let pos = |k: usize| k; // ε_{k+1}
    let neg = |k: usize| big - 1 - k; // −ε_{k+1}
    let mirror = |p: usize| big - 1 - p;
    let eps: Vec<Vec<f64>> = (0..big)
        .map(|p| {
            let mut v = vec![0.0; n];
            if p < n {
                v[p] = 1.0;
            } else if p >= big - n {
                v[big - 1 - p] = -1.0;
            }
            v
        })
        .collect();

    // Pairs (p, q) so that E = E_{pq} − sign·E_{q̄ p̄} preserves the form.
    let sign = if which == Classical::Sp { -1.0 } else { 1.0 };
    let mut e = Vec::new();
    let mut coroots = Vec::new();
    let unit_vec = |v: &mut Vec<f64>, i: usize, x: f64| v[i] += x;
    for i in 0..n {
        let mut m = DMatrix::zeros(big, big);
        let mut cor = vec![0.0; n];
        if i + 1 < n {
            // ε_i − ε_{i+1}
            m[(pos(i), pos(i + 1))] += 1.0;
            m[(mirror(pos(i + 1)), mirror(pos(i)))] -= 1.0;
            unit_vec(&mut cor, i, 1.0);
            unit_vec(&mut cor, i + 1, -1.0);
        } else {
            match which {
                Classical::SoOdd => {
                    // ε_n, through the zero-weight vector
                    let zero = n;
                    m[(pos(i), zero)] += 1.0;
                    m[(zero, neg(i))] -= 1.0;
                    unit_vec(&mut cor, i, 2.0);
                }
                Classical::Sp => {
                    // 2ε_n
                    m[(pos(i), neg(i))] += 1.0;
                    unit_vec(&mut cor, i, 1.0);
                }
                Classical::SoEven => {
                    // ε_{n−1} + ε_n
                    m[(pos(i - 1), neg(i))] += 1.0;
                    m[(pos(i), neg(i - 1))] -= sign;
                    unit_vec(&mut cor, i - 1, 1.0);
                    unit_vec(&mut cor, i, 1.0);
                }
            }
        }
        e.push(m);
        coroots.push(cor);
    }
    let h: Vec<DMatrix<f64>> = coroots
        .iter()
        .map(|cor| {
            let d: Vec<f64> = eps
                .iter()
                .map(|v| v.iter().zip(cor).map(|(a, b)| a * b).sum())
                .collect();
            diag(&d)
        })
        .collect();
    let f = e
        .iter()
        .zip(&h)
        .map(|(ei, hi)| MatrixRep::lowering_from_raising(ei, hi))
        .collect();
    MatrixRep {
        kind,
        label,
        basis: basis_from_h(&h),
        e,
        f,
        h,
    }
}

/// Realization of a multiplicity-free chain: `E_i` raises `v_{k+1} ↦ v_k`
/// along each cover labelled `α_i`, `F_i` lowers with unknown coefficient
/// `x_k`, and the `x_k` are fitted by least squares to `[E_i, F_i] = H_i`.
fn chain_solve(kind: RepKind, label: IrrepLabel) -> Result<MatrixRep> {
    let rs = label.root_system().clone();
    let character = weight_system(&label)?;
    let poset = build_poset(&character);
    if !is_wmf(&character) || !is_chain(&poset) {
        return Err(Error::Unsupported(format!(
            "{label} is not a multiplicity-free chain"
        )));
    }
    let basis: Vec<Weight> = poset.elements().cloned().collect();
    let n = basis.len();
    let rank = rs.rank();
    let steps: Vec<usize> = basis
        .windows(2)
        .map(|w| {
            (0..rank)
                .find(|&i| w[0].sub(&w[1]) == rs.simple_root(i))
                .expect("chain step is a simple root")
        })
        .collect();

    // Unknowns x_0..x_{n−2}; one equation per (i, basis vector k):
    // x_k [step_k = i] − x_{k−1} [step_{k−1} = i] = <μ_k, α_i^∨>.
    let rows = rank * n;
    let mut a = DMatrix::<f64>::zeros(rows, n.saturating_sub(1).max(1));
    let mut b = nalgebra::DVector::<f64>::zeros(rows);
    for i in 0..rank {
        for k in 0..n {
            let r = i * n + k;
            if k + 1 < n && steps[k] == i {
                a[(r, k)] += 1.0;
            }
            if k > 0 && steps[k - 1] == i {
                a[(r, k - 1)] -= 1.0;
            }
            b[r] = basis[k].0[i] as f64;
        }
    }
    let x = if n > 1 {
        a.clone()
            .svd(true, true)
            .solve(&b, 1e-12)
            .map_err(|e| Error::Construction(e.to_string()))?
    } else {
        nalgebra::DVector::zeros(1)
    };
    let residual = max_abs(&DMatrix::from_column_slice(rows, 1, (&a * &x - &b).as_slice()));
    if residual >= RELATION_TOLERANCE {
        return Err(Error::Construction(format!(
            "chain solver residual {residual:e} for {label}"
        )));
    }

    let mut e = vec![DMatrix::zeros(n, n); rank];
    let mut f = vec![DMatrix::zeros(n, n); rank];
    for (k, &i) in steps.iter().enumerate() {
        e[i][(k, k + 1)] = 1.0;
        f[i][(k + 1, k)] = x[k];
    }
    let h = (0..rank)
        .map(|i| diag(&basis.iter().map(|w| w.0[i] as f64).collect::<Vec<_>>()))
        .collect();
    Ok(MatrixRep {
        kind,
        label,
        basis,
        e,
        f,
        h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_kinds() -> Vec<RepKind> {
        let mut v = Vec::new();
        for n in 2..=5 {
            v.push(RepKind::SlStd(n));
            v.push(RepKind::SoOddStd(n));
            v.push(RepKind::SoEvenStd(n));
            v.push(RepKind::SpStd(n));
        }
        for m in 1..=6 {
            v.push(RepKind::SymSl2(m));
        }
        v.push(RepKind::G2Seven);
        v
    }

    #[test]
    fn every_kind_satisfies_relations() {
        for k in all_kinds() {
            let rep = MatrixRep::build(k.clone()).unwrap();
            assert!(rep.relation_residuals().max() < RELATION_TOLERANCE, "{k}");
            assert!(rep.spectrum_matches_weight_system().unwrap(), "{k}");
        }
    }

    #[test]
    fn sym_sl2_tight_residuals() {
        for m in 1..=8 {
            let rep = MatrixRep::build(RepKind::SymSl2(m)).unwrap();
            assert!(rep.relation_residuals().max() < 1e-12);
        }
    }

    #[test]
    fn so5_spectrum_matches_freudenthal() {
        // ε₁, ε₂, 0, −ε₂, −ε₁ paired with α₁^∨ = ε₁ − ε₂ and α₂^∨ = 2ε₂.
        let rep = MatrixRep::build(RepKind::SoOddStd(2)).unwrap();
        let expect: Vec<Vec<f64>> = vec![
            vec![1.0, 0.0],
            vec![-1.0, 2.0],
            vec![0.0, 0.0],
            vec![1.0, -2.0],
            vec![-1.0, 0.0],
        ];
        assert_eq!(rep.h_spectrum(), expect);
        assert!(rep.spectrum_matches_weight_system().unwrap());
    }

    #[test]
    fn g2_chain_solver() {
        let rep = MatrixRep::build(RepKind::G2Seven).unwrap();
        assert_eq!(rep.dim(), 7);
        assert!(rep.relation_residuals().max() < 1e-10);
        assert!(rep.relation_residuals().serre < 1e-10);
    }

    #[test]
    fn chain_solver_on_other_chains() {
        for (f, n, hw) in [
            (Family::B, 2, vec![0, 1]),
            (Family::A, 3, vec![0, 0, 1]),
            (Family::C, 3, vec![1, 0, 0]),
            (Family::A, 1, vec![4]),
        ] {
            let l = IrrepLabel::new(Arc::new(RootSystem::build(f, n).unwrap()), Weight(hw)).unwrap();
            let rep = MatrixRep::build(RepKind::Chain(l.clone())).unwrap();
            assert!(rep.relation_residuals().max() < RELATION_TOLERANCE, "{l}");
        }
    }

    #[test]
    fn chain_solver_rejects_non_chain() {
        let l = IrrepLabel::new(
            Arc::new(RootSystem::build(Family::A, 3).unwrap()),
            Weight(vec![0, 1, 0]),
        )
        .unwrap();
        assert!(matches!(
            MatrixRep::build(RepKind::Chain(l)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn invalid_kinds() {
        assert!(RepKind::from_cli("sl-std", 1).is_err());
        assert!(RepKind::from_cli("so-even", 1).is_err());
        assert!(RepKind::from_cli("spin", 3).is_err());
        assert_eq!(RepKind::from_cli("g2", 0).unwrap(), RepKind::G2Seven);
    }

    #[test]
    fn split_forms_are_preserved() {
        for (kind, symplectic) in [
            (RepKind::SoOddStd(3), false),
            (RepKind::SoEvenStd(3), false),
            (RepKind::SoEvenStd(2), false),
            (RepKind::SpStd(3), true),
        ] {
            let rep = MatrixRep::build(kind.clone()).unwrap();
            let n = rep.dim();
            let mut j = DMatrix::<f64>::zeros(n, n);
            for p in 0..n {
                j[(p, n - 1 - p)] = if symplectic && p >= n / 2 { -1.0 } else { 1.0 };
            }
            for x in rep.e.iter().chain(&rep.f).chain(&rep.h) {
                let r = x.transpose() * &j + &j * x;
                assert!(max_abs(&r) < 1e-12, "{kind}");
            }
        }
    }
}
