//! Weight systems and the character ring.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsystem::{Rational, RootSystem, Weight};

/// Irreducible representation `V(λ)` named by its dominant highest weight.
#[derive(Debug, Clone)]
pub struct IrrepLabel {
    root_system: Arc<RootSystem>,
    highest_weight: Weight,
}

impl IrrepLabel {
    pub fn new(root_system: Arc<RootSystem>, highest_weight: Weight) -> Result<Self> {
        root_system.check_weight(&highest_weight)?;
        if !highest_weight.is_dominant() {
            return Err(Error::NotDominant(highest_weight.to_string()));
        }
        Ok(IrrepLabel {
            root_system,
            highest_weight,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.root_system
    }

    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_weight.is_zero()
    }
}

impl PartialEq for IrrepLabel {
    fn eq(&self, other: &Self) -> bool {
        self.root_system.components() == other.root_system.components()
            && self.highest_weight == other.highest_weight
    }
}

impl Eq for IrrepLabel {}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.root_system.name(), self.highest_weight)
    }
}

/// A (possibly virtual) character: weight → multiplicity, zero entries omitted.
#[derive(Debug, Clone)]
pub struct Character {
    root_system: Arc<RootSystem>,
    entries: HashMap<Weight, i64>,
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.root_system.components() == other.root_system.components()
            && self.entries == other.entries
    }
}

impl Eq for Character {}

impl Character {
    pub fn empty(root_system: Arc<RootSystem>) -> Self {
        Character {
            root_system,
            entries: HashMap::new(),
        }
    }

    /// Character of the trivial representation.
    pub fn trivial(root_system: Arc<RootSystem>) -> Self {
        let rank = root_system.rank();
        Self::from_entries(root_system, [(Weight::zero(rank), 1)])
    }

    pub fn from_entries(
        root_system: Arc<RootSystem>,
        entries: impl IntoIterator<Item = (Weight, i64)>,
    ) -> Self {
        let mut c = Character::empty(root_system);
        for (w, m) in entries {
            c.add_to(w, m);
        }
        c
    }

    fn add_to(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(m);
            }
        }
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.root_system
    }

    pub fn multiplicity(&self, w: &Weight) -> i64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &HashMap<Weight, i64> {
        &self.entries
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of multiplicities.
    pub fn dim(&self) -> i64 {
        self.entries.values().sum()
    }

    pub fn is_genuine(&self) -> bool {
        self.entries.values().all(|&m| m > 0)
    }

    /// Height of `μ`: sum of its simple-root coordinates.
    pub fn height(&self, w: &Weight) -> Rational {
        self.root_system.simple_root_coords(w).into_iter().sum()
    }

    /// Entries sorted by height (highest first), ties broken by descending coordinates.
    pub fn sorted_entries(&self) -> Vec<(Weight, i64)> {
        let mut v: Vec<(Rational, Weight, i64)> = self
            .entries
            .iter()
            .map(|(w, &m)| (self.height(w), w.clone(), m))
            .collect();
        v.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        v.into_iter().map(|(_, w, m)| (w, m)).collect()
    }

    fn check_same(&self, other: &Character) -> Result<()> {
        if self.root_system.components() != other.root_system.components() {
            return Err(Error::RootSystemMismatch(
                self.root_system.name(),
                other.root_system.name(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.entries {
            out.add_to(w.clone(), m);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, k: i64) -> Character {
        if k == 0 {
            return Character::empty(self.root_system.clone());
        }
        Character {
            root_system: self.root_system.clone(),
            entries: self.entries.iter().map(|(w, &m)| (w.clone(), m * k)).collect(),
        }
    }

    /// Convolution of weight maps.
    pub fn tensor(&self, other: &Character) -> Result<Character> {
        self.check_same(other)?;
        let mut acc: HashMap<Weight, i64> = HashMap::new();
        for (a, &ma) in &self.entries {
            for (b, &mb) in &other.entries {
                *acc.entry(a.add(b)).or_insert(0) += ma * mb;
            }
        }
        acc.retain(|_, m| *m != 0);
        Ok(Character {
            root_system: self.root_system.clone(),
            entries: acc,
        })
    }

    /// Adams operation ψᵏ: every weight scaled by `k`.
    pub fn adams(&self, k: u32) -> Character {
        Character {
            root_system: self.root_system.clone(),
            entries: self
                .entries
                .iter()
                .map(|(w, &m)| (w.scale(k as i64), m))
                .collect(),
        }
    }

    /// Characters of `∧⁰ … ∧^max_m` by Newton's identity
    /// `m·eₘ = Σ_{k=1..m} (−1)^{k−1} ψᵏ · e_{m−k}`.
    pub fn exterior_powers(&self, max_m: usize) -> Result<Vec<Character>> {
        if !self.is_genuine() {
            return Err(Error::NotGenuine(
                "exterior powers need a nonnegative character".into(),
            ));
        }
        let dim = self.dim() as usize;
        if max_m > dim {
            return Err(Error::MOutOfRange {
                m: max_m,
                dim: dim as u128,
            });
        }
        let adams: Vec<Character> = (1..=max_m as u32).map(|k| self.adams(k)).collect();
        let mut powers = vec![Character::trivial(self.root_system.clone())];
        for m in 1..=max_m {
            let mut acc: HashMap<Weight, i128> = HashMap::new();
            for k in 1..=m {
                let sign: i128 = if k % 2 == 1 { 1 } else { -1 };
                let lower = &powers[m - k];
                for (a, &ma) in &adams[k - 1].entries {
                    for (b, &mb) in &lower.entries {
                        *acc.entry(a.add(b)).or_insert(0) += sign * ma as i128 * mb as i128;
                    }
                }
            }
            let mut entries = HashMap::with_capacity(acc.len());
            for (w, v) in acc {
                if v == 0 {
                    continue;
                }
                if v % m as i128 != 0 {
                    return Err(Error::Consistency(format!(
                        "non-integral multiplicity {v}/{m} at {w} in exterior power"
                    )));
                }
                let q = v / m as i128;
                if q < 0 {
                    return Err(Error::Consistency(format!(
                        "negative multiplicity {q} at {w} in exterior power"
                    )));
                }
                entries.insert(w, q as i64);
            }
            powers.push(Character {
                root_system: self.root_system.clone(),
                entries,
            });
        }
        Ok(powers)
    }

    /// Character of `∧ᵐ V`.
    pub fn exterior_power(&self, m: usize) -> Result<Character> {
        Ok(self.exterior_powers(m)?.pop().expect("nonempty"))
    }

    /// Dominant weight with nonzero multiplicity of greatest height
    /// (lexicographically largest among ties).
    pub fn top_dominant(&self) -> Option<(Weight, i64)> {
        self.entries
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, &m)| (self.height(w), w.clone(), m))
            .max_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)))
            .map(|(_, w, m)| (w, m))
    }

    /// Irreducibility test for a genuine character: the top dominant weight
    /// occurs once and its Weyl dimension accounts for everything.
    pub fn is_irreducible(&self) -> Result<bool> {
        let Some((top, mult)) = self.top_dominant() else {
            return Ok(false);
        };
        if mult != 1 {
            return Ok(false);
        }
        let label = IrrepLabel::new(self.root_system.clone(), top)?;
        Ok(weyl_dim(&label) == self.dim() as u128)
    }

    /// Decomposition into irreducibles by highest-weight peeling.
    pub fn decompose(&self) -> Result<Vec<(Weight, i64)>> {
        let mut residual = self.clone();
        let mut out = Vec::new();
        while !residual.is_empty() {
            let Some((top, mult)) = residual.top_dominant() else {
                return Err(Error::NotGenuine(
                    "residual has no dominant weight".into(),
                ));
            };
            if mult < 0 {
                return Err(Error::NotGenuine(format!(
                    "negative multiplicity {mult} at highest weight {top}"
                )));
            }
            let label = IrrepLabel::new(self.root_system.clone(), top.clone())?;
            residual = residual.sub(&weight_system(&label)?.scale(mult))?;
            if let Some((w, m)) = residual.entries.iter().find(|(_, &m)| m < 0) {
                return Err(Error::NotGenuine(format!(
                    "negative residual multiplicity {m} at {w}"
                )));
            }
            out.push((top, mult));
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CharacterJson {
        CharacterJson {
            type_name: self.root_system.name(),
            rank: self.root_system.rank(),
            entries: self
                .sorted_entries()
                .into_iter()
                .map(|(w, m)| (w.0, m))
                .collect(),
        }
    }

    pub fn from_json(root_system: Arc<RootSystem>, json: &CharacterJson) -> Result<Character> {
        if json.type_name != root_system.name() || json.rank != root_system.rank() {
            return Err(Error::RootSystemMismatch(
                json.type_name.clone(),
                root_system.name(),
            ));
        }
        let mut c = Character::empty(root_system.clone());
        for (coords, m) in &json.entries {
            let w = Weight(coords.clone());
            root_system.check_weight(&w)?;
            c.add_to(w, *m);
        }
        Ok(c)
    }
}

/// Serialized form: `{"type", "rank", "entries": [[coords, mult], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub entries: Vec<(Vec<i64>, i64)>,
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
///
/// Saturates at `u128::MAX`.
pub fn weyl_dim(label: &IrrepLabel) -> u128 {
    let rs = label.root_system();
    let shifted = label.highest_weight().add(rs.rho());
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for coords in rs.positive_root_coords() {
        let a = rs.pair_with_root_coords(&shifted, coords);
        let b = rs.pair_with_root_coords(rs.rho(), coords);
        num *= a as u64;
        den *= b as u64;
    }
    let q = num / den;
    q.to_u128().unwrap_or(u128::MAX)
}

/// Weights of `V(λ)` with multiplicities, by Freudenthal's recursion run
/// level by level downwards from `λ`.
pub fn weight_system(label: &IrrepLabel) -> Result<Character> {
    let rs = label.root_system();
    let rank = rs.rank();
    let lambda = label.highest_weight();
    let two_rho = rs.rho().scale(2);
    let lambda_plus = lambda.add(&two_rho);
    let roots = rs.positive_root_coords();

    // weight -> (multiplicity, simple-root coordinates of λ − μ)
    let mut known: HashMap<Weight, (i64, Vec<i64>)> = HashMap::new();
    known.insert(lambda.clone(), (1, vec![0; rank]));
    let mut layer = vec![lambda.clone()];

    while !layer.is_empty() {
        let mut candidates: Vec<(Weight, Vec<i64>)> = Vec::new();
        let mut seen = std::collections::HashSet::new();
        for nu in &layer {
            let depth = known[nu].1.clone();
            for i in 0..rank {
                let mu = nu.sub(&rs.simple_root(i));
                if known.contains_key(&mu) || !seen.insert(mu.clone()) {
                    continue;
                }
                let mut d = depth.clone();
                d[i] += 1;
                candidates.push((mu, d));
            }
        }

        let mut next = Vec::new();
        for (mu, depth) in candidates {
            // ‖λ+ρ‖² − ‖μ+ρ‖² = (λ + μ + 2ρ, λ − μ)
            let denom = rs.pair_with_root_coords(&lambda_plus.add(&mu), &depth);
            let mut rhs: i64 = 0;
            for alpha in roots {
                let alpha_w = rs.from_root_coords(alpha);
                let mut k = 1;
                loop {
                    if depth.iter().zip(alpha).any(|(d, a)| d - k * a < 0) {
                        break;
                    }
                    let up = mu.add(&alpha_w.scale(k));
                    if let Some((m, _)) = known.get(&up) {
                        rhs += m * rs.pair_with_root_coords(&up, alpha);
                    }
                    k += 1;
                }
            }
            rhs *= 2;
            if denom <= 0 {
                if rhs != 0 {
                    return Err(Error::Consistency(format!(
                        "Freudenthal denominator {denom} with nonzero numerator at {mu}"
                    )));
                }
                continue;
            }
            if rhs % denom != 0 {
                return Err(Error::Consistency(format!(
                    "non-integral Freudenthal multiplicity {rhs}/{denom} at {mu}"
                )));
            }
            let m = rhs / denom;
            if m < 0 {
                return Err(Error::Consistency(format!(
                    "negative Freudenthal multiplicity at {mu}"
                )));
            }
            if m > 0 {
                known.insert(mu.clone(), (m, depth));
                next.push(mu);
            }
        }
        layer = next;
    }

    Ok(Character {
        root_system: rs.clone(),
        entries: known.into_iter().map(|(w, (m, _))| (w, m)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsystem::{CartanType, Family};

    fn label(f: Family, n: usize, hw: &[i64]) -> IrrepLabel {
        IrrepLabel::new(Arc::new(RootSystem::build(f, n).unwrap()), Weight(hw.to_vec())).unwrap()
    }

    fn ch(l: &IrrepLabel) -> Character {
        weight_system(l).unwrap()
    }

    #[test]
    fn non_dominant_label_rejected() {
        let rs = Arc::new(RootSystem::build(Family::A, 2).unwrap());
        assert!(matches!(
            IrrepLabel::new(rs.clone(), Weight(vec![1, -1])),
            Err(Error::NotDominant(_))
        ));
        assert!(IrrepLabel::new(rs, Weight(vec![1])).is_err());
    }

    #[test]
    fn sl2_strings() {
        for m in 0..12 {
            let l = label(Family::A, 1, &[m]);
            let c = ch(&l);
            assert_eq!(weyl_dim(&l), m as u128 + 1);
            assert_eq!(c.support_len(), m as usize + 1);
            for k in 0..=m {
                assert_eq!(c.multiplicity(&Weight(vec![m - 2 * k])), 1);
            }
        }
    }

    #[test]
    fn g2_seven() {
        let l = label(Family::G, 2, &[1, 0]);
        let c = ch(&l);
        assert_eq!(weyl_dim(&l), 7);
        assert_eq!(c.support_len(), 7);
        assert!(c.entries().values().all(|&m| m == 1));
    }

    #[test]
    fn a2_adjoint() {
        let l = label(Family::A, 2, &[1, 1]);
        let c = ch(&l);
        assert_eq!(weyl_dim(&l), 8);
        assert_eq!(c.dim(), 8);
        assert_eq!(c.multiplicity(&Weight(vec![0, 0])), 2);
        // Weyl symmetry
        let rs = l.root_system();
        for (w, &m) in c.entries() {
            for i in 0..2 {
                assert_eq!(c.multiplicity(&rs.reflect(w, i)), m);
            }
        }
    }

    #[test]
    fn b2_spin_dim() {
        assert_eq!(weyl_dim(&label(Family::B, 2, &[0, 1])), 4);
        assert_eq!(weyl_dim(&label(Family::B, 2, &[1, 0])), 5);
        assert_eq!(weyl_dim(&label(Family::C, 2, &[1, 0])), 4);
    }

    #[test]
    fn known_dimensions() {
        assert_eq!(weyl_dim(&label(Family::E, 6, &[1, 0, 0, 0, 0, 0])), 27);
        assert_eq!(weyl_dim(&label(Family::E, 7, &[0, 0, 0, 0, 0, 0, 1])), 56);
        assert_eq!(weyl_dim(&label(Family::E, 8, &[0, 0, 0, 0, 0, 0, 0, 1])), 248);
        assert_eq!(weyl_dim(&label(Family::F, 4, &[0, 0, 0, 1])), 26);
        assert_eq!(weyl_dim(&label(Family::D, 4, &[0, 0, 0, 1])), 8);
        assert_eq!(weyl_dim(&label(Family::G, 2, &[0, 1])), 14);
    }

    #[test]
    fn e6_minuscule_weight_system() {
        let l = label(Family::E, 6, &[1, 0, 0, 0, 0, 0]);
        let c = ch(&l);
        assert_eq!(c.dim(), 27);
        assert_eq!(c.support_len(), 27);
    }

    #[test]
    fn tensor_identity_and_clebsch_gordan() {
        let v = ch(&label(Family::A, 1, &[1]));
        let triv = Character::trivial(v.root_system().clone());
        assert_eq!(v.tensor(&triv).unwrap(), v);
        let sq = v.tensor(&v).unwrap();
        let expect = ch(&label(Family::A, 1, &[2]))
            .add(&ch(&label(Family::A, 1, &[0])))
            .unwrap();
        assert_eq!(sq, expect);
        assert!(v.scale(0).is_empty());
    }

    #[test]
    fn root_system_mismatch() {
        let a = ch(&label(Family::A, 1, &[1]));
        let b = ch(&label(Family::A, 2, &[1, 0]));
        assert!(matches!(a.add(&b), Err(Error::RootSystemMismatch(..))));
        assert!(a.tensor(&b).is_err());
    }

    #[test]
    fn adams_examples() {
        let v = ch(&label(Family::A, 1, &[1]));
        assert_eq!(v.adams(1), v);
        let p2 = v.adams(2);
        assert_eq!(p2.multiplicity(&Weight(vec![2])), 1);
        assert_eq!(p2.multiplicity(&Weight(vec![-2])), 1);
        assert_eq!(p2.support_len(), 2);
        let a = ch(&label(Family::A, 2, &[1, 1]));
        for k in 1..5 {
            assert_eq!(a.adams(k).dim(), 8);
        }
    }

    #[test]
    fn wedge_two_of_s3() {
        let s3 = ch(&label(Family::A, 1, &[3]));
        assert_eq!(s3.exterior_power(0).unwrap(), Character::trivial(s3.root_system().clone()));
        assert_eq!(s3.exterior_power(1).unwrap(), s3);
        let w2 = s3.exterior_power(2).unwrap();
        let expect = Character::from_entries(
            s3.root_system().clone(),
            [(4, 1), (2, 1), (0, 2), (-2, 1), (-4, 1)].map(|(w, m)| (Weight(vec![w]), m)),
        );
        assert_eq!(w2, expect);
        assert_eq!(w2.decompose().unwrap(), vec![(Weight(vec![4]), 1), (Weight(vec![0]), 1)]);
        let top = s3.exterior_power(4).unwrap();
        assert_eq!(top, Character::trivial(s3.root_system().clone()));
        assert!(s3.exterior_power(5).is_err());
    }

    #[test]
    fn wedge_two_of_sp4() {
        let v = ch(&label(Family::C, 2, &[1, 0]));
        let d = v.exterior_power(2).unwrap().decompose().unwrap();
        assert_eq!(d, vec![(Weight(vec![0, 1]), 1), (Weight(vec![0, 0]), 1)]);
        assert_eq!(weyl_dim(&label(Family::C, 2, &[0, 1])), 5);
    }

    #[test]
    fn decompose_roundtrip_and_errors() {
        let l = label(Family::B, 3, &[1, 0, 1]);
        assert_eq!(ch(&l).decompose().unwrap(), vec![(Weight(vec![1, 0, 1]), 1)]);
        let v = ch(&label(Family::A, 1, &[1]));
        let bad = ch(&label(Family::A, 1, &[2])).sub(&v.tensor(&v).unwrap()).unwrap();
        assert!(matches!(bad.decompose(), Err(Error::NotGenuine(_))));
        let lone = Character::from_entries(v.root_system().clone(), [(Weight(vec![2]), 1)]);
        assert!(lone.decompose().is_err());
    }

    #[test]
    fn exterior_power_of_virtual_rejected() {
        let v = ch(&label(Family::A, 1, &[1])).scale(-1);
        assert!(matches!(v.exterior_power(1), Err(Error::NotGenuine(_))));
    }

    #[test]
    fn json_roundtrip_and_order() {
        let c = ch(&label(Family::A, 1, &[3]));
        let j = c.to_json();
        assert_eq!(j.type_name, "A1");
        assert_eq!(j.entries.iter().map(|e| e.0[0]).collect::<Vec<_>>(), vec![3, 1, -1, -3]);
        let s = serde_json::to_string(&j).unwrap();
        assert_eq!(s, r#"{"type":"A1","rank":1,"entries":[[[3],1],[[1],1],[[-1],1],[[-3],1]]}"#);
        let back: CharacterJson = serde_json::from_str(&s).unwrap();
        assert_eq!(Character::from_json(c.root_system().clone(), &back).unwrap(), c);
    }

    #[test]
    fn product_root_system_weight_system() {
        let a1 = CartanType::new(Family::A, 1).unwrap();
        let rs = Arc::new(RootSystem::product(&[a1, a1]));
        let l = IrrepLabel::new(rs, Weight(vec![1, 2])).unwrap();
        assert_eq!(weyl_dim(&l), 6);
        assert_eq!(ch(&l).dim(), 6);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_label() -> impl Strategy<Value = IrrepLabel> {
            let types: Vec<(Family, usize)> = vec![
                (Family::A, 1),
                (Family::A, 2),
                (Family::A, 3),
                (Family::B, 2),
                (Family::B, 3),
                (Family::C, 3),
                (Family::D, 4),
                (Family::G, 2),
            ];
            (prop::sample::select(types), prop::collection::vec(0i64..3, 4)).prop_filter_map(
                "dimension bound",
                |((f, n), hw)| {
                    let l = label(f, n, &hw[..n]);
                    (weyl_dim(&l) <= 60).then_some(l)
                },
            )
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(48))]

            #[test]
            fn weights_lie_below_highest(l in small_label()) {
                let c = ch(&l);
                let rs = l.root_system();
                prop_assert_eq!(c.multiplicity(l.highest_weight()), 1);
                for w in c.entries().keys() {
                    let diff = rs.root_lattice_coords(&l.highest_weight().sub(w));
                    prop_assert!(diff.is_some_and(|d| d.iter().all(|&x| x >= 0)));
                    for i in 0..rs.rank() {
                        prop_assert_eq!(c.multiplicity(&rs.reflect(w, i)), c.multiplicity(w));
                    }
                }
            }

            #[test]
            fn tensor_decomposition_dimension(a in small_label(), b in small_label()) {
                prop_assume!(a.root_system().components() == b.root_system().components());
                prop_assume!(weyl_dim(&a) * weyl_dim(&b) <= 400);
                let t = ch(&a).tensor(&ch(&b)).unwrap();
                let total: u128 = t
                    .decompose()
                    .unwrap()
                    .into_iter()
                    .map(|(w, m)| m as u128 * weyl_dim(&IrrepLabel::new(a.root_system().clone(), w).unwrap()))
                    .sum();
                prop_assert_eq!(total, weyl_dim(&a) * weyl_dim(&b));
            }

            #[test]
            fn exterior_power_dimensions(l in small_label()) {
                let c = ch(&l);
                let n = c.dim() as usize;
                prop_assume!(n <= 14);
                let powers = c.exterior_powers(n).unwrap();
                let dims: Vec<i64> = powers.iter().map(|p| p.dim()).collect();
                prop_assert_eq!(dims.iter().sum::<i64>(), 1i64 << n);
                for m in 0..=n {
                    prop_assert_eq!(dims[m], dims[n - m]);
                }
                prop_assert_eq!(&powers[n], &Character::trivial(c.root_system().clone()));
            }
        }
    }
}
