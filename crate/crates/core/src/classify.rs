//! Thickness and density verdicts, bounded classification runs, duals and
//! semi-simple products.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::character::{weight_system, weyl_dim, Character, IrrepLabel};
use crate::error::{Error, Result};
use crate::poset::{build_poset, is_chain, is_wmf};
use crate::rootsystem::{CartanType, Family, RootSystem, Weight};

/// Default largest dimension for which density is evaluated.
pub const DEFAULT_DENSITY_BOUND: u128 = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Reason {
    #[serde(rename = "NotWMF")]
    NotWmf,
    NotChain,
    Thick,
    ThickAndDense,
    Trivial,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Reason::NotWmf => "NotWMF",
            Reason::NotChain => "NotChain",
            Reason::Thick => "Thick",
            Reason::ThickAndDense => "ThickAndDense",
            Reason::Trivial => "Trivial",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThicknessVerdict {
    pub label: IrrepLabel,
    pub dim: u128,
    pub wmf: bool,
    pub chain: bool,
    pub thick: bool,
    pub dense: Option<bool>,
    /// All `m` in `1..dim` where m-density fails, when density was evaluated.
    pub failing_m: Option<Vec<usize>>,
    pub reason: Reason,
}

impl ThicknessVerdict {
    pub fn from_character(label: IrrepLabel, character: &Character) -> Self {
        let wmf = is_wmf(character);
        let chain = is_chain(&build_poset(character));
        let thick = wmf && chain;
        let reason = if label.is_trivial() {
            Reason::Trivial
        } else if !wmf {
            Reason::NotWmf
        } else if !chain {
            Reason::NotChain
        } else {
            Reason::Thick
        };
        ThicknessVerdict {
            dim: character.dim() as u128,
            label,
            wmf,
            chain,
            thick,
            dense: None,
            failing_m: None,
            reason,
        }
    }

    fn with_density(mut self, dense: bool, failing: Vec<usize>) -> Self {
        self.dense = Some(dense);
        self.failing_m = Some(failing);
        if dense && self.thick && self.reason == Reason::Thick {
            self.reason = Reason::ThickAndDense;
        }
        self
    }

    /// Table row: family, rank, lambda, dim, wmf, chain, thick, dense, failing_m, reason.
    pub fn row(&self) -> VerdictRow {
        let rs = self.label.root_system();
        let (family, rank) = match rs.simple_type() {
            Some(t) => (t.family().to_string(), t.rank()),
            None => (rs.name(), rs.rank()),
        };
        VerdictRow {
            family,
            rank,
            lambda: self.label.highest_weight().0.clone(),
            dim: self.dim,
            wmf: self.wmf,
            chain: self.chain,
            thick: self.thick,
            dense: self.dense,
            failing_m: self.failing_m.clone(),
            reason: self.reason,
        }
    }
}

/// Flat record for JSON/TSV output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictRow {
    pub family: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub dim: u128,
    pub wmf: bool,
    pub chain: bool,
    pub thick: bool,
    pub dense: Option<bool>,
    pub failing_m: Option<Vec<usize>>,
    pub reason: Reason,
}

impl VerdictRow {
    pub const TSV_HEADER: &'static str =
        "family\trank\tlambda\tdim\twmf\tchain\tthick\tdense\tfailing_m\treason";

    pub fn to_tsv(&self) -> String {
        let lambda: Vec<String> = self.lambda.iter().map(|c| c.to_string()).collect();
        let dense = match self.dense {
            Some(d) => d.to_string(),
            None => "-".into(),
        };
        let failing = match &self.failing_m {
            Some(f) => f.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(","),
            None => "-".into(),
        };
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.family,
            self.rank,
            lambda.join(","),
            self.dim,
            self.wmf,
            self.chain,
            self.thick,
            dense,
            failing,
            self.reason
        )
    }
}

/// Thick iff weight multiplicity-free with a totally ordered weight poset.
pub fn is_thick(label: &IrrepLabel) -> Result<ThicknessVerdict> {
    let c = weight_system(label)?;
    Ok(ThicknessVerdict::from_character(label.clone(), &c))
}

fn check_m(label: &IrrepLabel, m: usize) -> Result<u128> {
    let n = weyl_dim(label);
    if m == 0 || m as u128 >= n {
        return Err(Error::MOutOfRange { m, dim: n });
    }
    Ok(n)
}

/// `∧ᵐ V(λ)` is irreducible.
pub fn is_m_dense(label: &IrrepLabel, m: usize) -> Result<bool> {
    check_m(label, m)?;
    weight_system(label)?.exterior_power(m)?.is_irreducible()
}

/// Same as [`is_m_dense`] but through full highest-weight peeling.
pub fn is_m_dense_by_decomposition(label: &IrrepLabel, m: usize) -> Result<bool> {
    check_m(label, m)?;
    let d = weight_system(label)?.exterior_power(m)?.decompose()?;
    Ok(matches!(d.as_slice(), [(_, 1)]))
}

/// m-density for every `0 < m < dim`, checking only `m ≤ dim/2` since
/// `∧ᵐ V ≅ (∧^{n−m} V)* ⊗ det`. Returns the verdict and all failing `m`.
pub fn is_dense(label: &IrrepLabel, bound: u128) -> Result<(bool, Vec<usize>)> {
    let n = weyl_dim(label);
    if n > bound {
        return Err(Error::Intractable { dim: n, bound });
    }
    let n = n as usize;
    let half = n / 2;
    let powers = weight_system(label)?.exterior_powers(half)?;
    let mut failing = BTreeSet::new();
    for (m, p) in powers.iter().enumerate().skip(1) {
        if !p.is_irreducible()? {
            failing.insert(m);
            failing.insert(n - m);
        }
    }
    Ok((failing.is_empty(), failing.into_iter().collect()))
}

/// Thickness verdict with density filled in.
pub fn classify_with_density(label: &IrrepLabel, bound: u128) -> Result<ThicknessVerdict> {
    let v = is_thick(label)?;
    let (dense, failing) = is_dense(label, bound)?;
    Ok(v.with_density(dense, failing))
}

/// Highest weight of the dual, `−w₀(λ)`.
pub fn dual_highest_weight(label: &IrrepLabel) -> Weight {
    label
        .root_system()
        .dominant_representative(&label.highest_weight().neg())
        .0
}

pub fn dual_label(label: &IrrepLabel) -> IrrepLabel {
    IrrepLabel::new(label.root_system().clone(), dual_highest_weight(label))
        .expect("dominant representative is dominant")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Thick,
    Dense,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "thick" => Ok(Mode::Thick),
            "dense" => Ok(Mode::Dense),
            other => Err(Error::Parse(format!("unknown mode {other:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Thick => "thick",
            Mode::Dense => "dense",
        })
    }
}

#[derive(Debug, Clone)]
pub struct EnumerationConfig {
    pub max_dim: u128,
    pub families: Vec<Family>,
    pub max_rank: usize,
    pub mode: Mode,
    pub density_bound: u128,
}

impl EnumerationConfig {
    pub fn new(mode: Mode, max_dim: u128, max_rank: usize) -> Self {
        EnumerationConfig {
            max_dim,
            families: Family::ALL.to_vec(),
            max_rank,
            mode,
            density_bound: DEFAULT_DENSITY_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeSummary {
    #[serde(rename = "type")]
    pub type_name: String,
    pub candidates: usize,
    pub positives: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub mode: Mode,
    pub max_dim: u128,
    pub max_rank: usize,
    pub families: Vec<String>,
    pub candidates: usize,
    pub positives: usize,
    pub per_type: Vec<TypeSummary>,
    /// Candidates whose density was not evaluated (dimension above the bound).
    pub not_evaluated: Vec<String>,
    /// Candidates found dense but not thick; always empty for a sound run.
    pub dense_not_thick: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub positives: Vec<ThicknessVerdict>,
    /// Every classified candidate, canonically ordered.
    pub all: Vec<ThicknessVerdict>,
    pub summary: Summary,
}

/// All dominant `λ` with `dim V(λ) ≤ max_dim`, by breadth-first growth from
/// `0`; the dimension is strictly increasing in each coordinate so the
/// search stops at the first overshoot along every direction.
pub fn enumerate_labels(rs: &Arc<RootSystem>, max_dim: u128) -> Vec<IrrepLabel> {
    let rank = rs.rank();
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([Weight::zero(rank)]);
    seen.insert(Weight::zero(rank));
    while let Some(w) = queue.pop_front() {
        let label = IrrepLabel::new(rs.clone(), w.clone()).expect("dominant");
        if weyl_dim(&label) > max_dim {
            continue;
        }
        for i in 0..rank {
            let next = w.add(&Weight::unit(rank, i));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
        out.push(label);
    }
    out.sort_by(|a, b| a.highest_weight().cmp(b.highest_weight()));
    out
}

/// Simple types covered by an enumeration, one per isomorphism class.
pub fn enumeration_types(families: &[Family], max_rank: usize) -> Vec<CartanType> {
    let mut fams = families.to_vec();
    fams.sort();
    fams.dedup();
    fams.into_iter()
        .flat_map(|f| {
            f.distinct_ranks(max_rank)
                .into_iter()
                .map(move |r| CartanType::new(f, r).expect("valid rank"))
        })
        .collect()
}

fn classify_candidate(label: &IrrepLabel, config: &EnumerationConfig) -> Result<ThicknessVerdict> {
    let v = is_thick(label)?;
    if config.mode == Mode::Dense && v.dim <= config.density_bound {
        let (dense, failing) = is_dense(label, config.density_bound)?;
        return Ok(v.with_density(dense, failing));
    }
    Ok(v)
}

/// Classify every irreducible with `dim ≤ max_dim` over the configured
/// types and return the positives for the mode.
pub fn enumerate_classification(config: &EnumerationConfig) -> Result<Classification> {
    let types = enumeration_types(&config.families, config.max_rank);
    let mut per_type = Vec::new();
    let mut all = Vec::new();
    for t in types {
        let rs = Arc::new(RootSystem::new(t));
        let labels = enumerate_labels(&rs, config.max_dim);
        let verdicts: Vec<ThicknessVerdict> = labels
            .par_iter()
            .map(|l| classify_candidate(l, config))
            .collect::<Result<_>>()?;
        let positives = verdicts.iter().filter(|v| is_positive(v, config.mode)).count();
        per_type.push(TypeSummary {
            type_name: t.to_string(),
            candidates: verdicts.len(),
            positives,
        });
        all.extend(verdicts);
    }
    let positives: Vec<ThicknessVerdict> = all
        .iter()
        .filter(|v| is_positive(v, config.mode))
        .cloned()
        .collect();
    let not_evaluated = if config.mode == Mode::Dense {
        all.iter()
            .filter(|v| v.dense.is_none())
            .map(|v| v.label.to_string())
            .collect()
    } else {
        Vec::new()
    };
    let dense_not_thick = all
        .iter()
        .filter(|v| v.dense == Some(true) && !v.thick)
        .map(|v| v.label.to_string())
        .collect();
    let mut families: Vec<String> = config.families.iter().map(|f| f.to_string()).collect();
    families.sort();
    families.dedup();
    let summary = Summary {
        mode: config.mode,
        max_dim: config.max_dim,
        max_rank: config.max_rank,
        families,
        candidates: all.len(),
        positives: positives.len(),
        per_type,
        not_evaluated,
        dense_not_thick,
    };
    Ok(Classification {
        positives,
        all,
        summary,
    })
}

fn is_positive(v: &ThicknessVerdict, mode: Mode) -> bool {
    match mode {
        Mode::Thick => v.thick,
        Mode::Dense => v.dense == Some(true),
    }
}

/// An irreducible representation of a product of simple groups, one
/// factor per simple component.
#[derive(Debug, Clone)]
pub struct ProductLabel {
    pub factors: Vec<IrrepLabel>,
}

impl ProductLabel {
    pub fn new(factors: Vec<IrrepLabel>) -> Result<Self> {
        for f in &factors {
            if f.root_system().simple_type().is_none() {
                return Err(Error::Unsupported(format!(
                    "product factor {f} is not simple"
                )));
            }
        }
        Ok(ProductLabel { factors })
    }

    /// The same representation as an irreducible of the product root system.
    pub fn combined(&self) -> IrrepLabel {
        let types: Vec<CartanType> = self
            .factors
            .iter()
            .map(|f| f.root_system().simple_type().expect("simple factor"))
            .collect();
        let rs = Arc::new(RootSystem::product(&types));
        let hw: Vec<Weight> = self.factors.iter().map(|f| f.highest_weight().clone()).collect();
        IrrepLabel::new(rs, Weight::concat(&hw)).expect("dominant factors")
    }
}

/// Thickness of `V₁ ⊗ … ⊗ V_r` from the factor verdicts alone: thick iff at
/// most one factor is nontrivial and that factor is thick.
pub fn product_thickness_structural(p: &ProductLabel) -> Result<ThicknessVerdict> {
    let verdicts: Vec<ThicknessVerdict> = p.factors.iter().map(is_thick).collect::<Result<_>>()?;
    let nontrivial = verdicts.iter().filter(|v| !v.label.is_trivial()).count();
    let wmf = verdicts.iter().all(|v| v.wmf);
    let chain = match nontrivial {
        0 => true,
        1 => verdicts.iter().all(|v| v.chain),
        _ => false,
    };
    let label = p.combined();
    let reason = if label.is_trivial() {
        Reason::Trivial
    } else if !wmf {
        Reason::NotWmf
    } else if !chain {
        Reason::NotChain
    } else {
        Reason::Thick
    };
    Ok(ThicknessVerdict {
        dim: verdicts.iter().map(|v| v.dim).product(),
        label,
        wmf,
        chain,
        thick: wmf && chain,
        dense: None,
        failing_m: None,
        reason,
    })
}

/// Thickness of the product computed on its own weight system over the
/// product root system.
pub fn product_thickness_direct(p: &ProductLabel) -> Result<ThicknessVerdict> {
    is_thick(&p.combined())
}

/// Product verdict; both routes are computed and must agree.
pub fn product_thickness(p: &ProductLabel) -> Result<ThicknessVerdict> {
    let structural = product_thickness_structural(p)?;
    let direct = product_thickness_direct(p)?;
    if structural != direct {
        return Err(Error::Consistency(format!(
            "product verdicts disagree for {}: structural {:?}, direct {:?}",
            direct.label, structural.reason, direct.reason
        )));
    }
    Ok(direct)
}
