//! Root-system data for the finite Cartan types, in Bourbaki numbering.
//!
//! Conventions used throughout the crate:
//!
//! * `A[i][j] = <α_i, α_j^∨> = 2(α_i, α_j) / (α_j, α_j)`, so row `i` of the
//!   Cartan matrix is the simple root `α_i` written in fundamental weights.
//! * Weights are integer vectors in the fundamental-weight basis.
//! * The invariant form is normalized so that short roots have squared
//!   length 2.
//!
//! | type | long simple roots         | short simple roots |
//! |------|---------------------------|--------------------|
//! | Bₙ   | α₁ … αₙ₋₁                 | αₙ                 |
//! | Cₙ   | αₙ                        | α₁ … αₙ₋₁          |
//! | F₄   | α₁, α₂                    | α₃, α₄             |
//! | G₂   | α₂                        | α₁                 |
//!
//! Dₙ branches at αₙ₋₂ (attached to αₙ₋₁ and αₙ); Eₙ has α₂ attached to α₄
//! and the chain α₁ - α₃ - α₄ - … - αₙ.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Ranks accepted by [`CartanType::new`] up to `max_rank`.
    pub fn valid_ranks(self, max_rank: usize) -> Vec<usize> {
        (1..=max_rank)
            .filter(|&r| CartanType::new(self, r).is_ok())
            .collect()
    }

    /// Ranks that give pairwise non-isomorphic simple types
    /// (A₁, B₂, C₃, D₄ onwards), so B₂ ≅ C₂ and A₃ ≅ D₃ are listed once.
    pub fn distinct_ranks(self, max_rank: usize) -> Vec<usize> {
        let min = match self {
            Family::A => 1,
            Family::B => 2,
            Family::C => 3,
            Family::D => 4,
            Family::E => 6,
            Family::F => 4,
            Family::G => 2,
        };
        self.valid_ranks(max_rank)
            .into_iter()
            .filter(|&r| r >= min)
            .collect()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(Error::Parse(format!("unknown Cartan family {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of positive roots from the closed-form table.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match (self.family, n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }

    /// Dynkin bonds as `(i, j, multiplicity)` with `α_i` at least as long as `α_j`.
    fn bonds(&self) -> Vec<(usize, usize, i64)> {
        let n = self.rank;
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1, 1));
        match self.family {
            Family::A => chain(n).collect(),
            Family::B => chain(n - 1).chain([(n - 2, n - 1, 2)]).collect(),
            Family::C => chain(n - 1).chain([(n - 1, n - 2, 2)]).collect(),
            Family::D => chain(n - 1).chain([(n - 3, n - 1, 1)]).collect(),
            Family::E => {
                let mut b = vec![(0, 2, 1), (1, 3, 1)];
                b.extend((2..n - 1).map(|i| (i, i + 1, 1)));
                b
            }
            Family::F => vec![(0, 1, 1), (1, 2, 2), (2, 3, 1)],
            Family::G => vec![(1, 0, 3)],
        }
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (long, short, k) in self.bonds() {
            // A[i][j] = 2(α_i,α_j)/(α_j,α_j) is larger in magnitude when α_j is short.
            a[long][short] = -k;
            a[short][long] = -1;
        }
        a
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    /// Concatenates coordinates (weight of a product of groups).
    pub fn concat(parts: &[Weight]) -> Weight {
        Weight(parts.iter().flat_map(|w| w.0.iter().copied()).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Parse(format!("bad weight coordinate {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Root system of a semi-simple Lie algebra: one or more simple components
/// with block-diagonal Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    components: Vec<CartanType>,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i) / 2`, an integer under the short-root-length-2 normalization.
    half_norms: Vec<i64>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    form: Vec<Vec<Rational>>,
    inv_cartan: Vec<Vec<Rational>>,
    /// `det(A) · A⁻ᵀ`, integral.
    adj_transpose: Vec<Vec<i64>>,
    det: i64,
    rho: Weight,
}

impl RootSystem {
    pub fn new(t: CartanType) -> RootSystem {
        Self::product(&[t])
    }

    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        Ok(Self::new(CartanType::new(family, rank)?))
    }

    /// Root system of the direct sum of the given simple types.
    pub fn product(types: &[CartanType]) -> RootSystem {
        let rank: usize = types.iter().map(|t| t.rank()).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for t in types {
            let block = t.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    cartan[offset + i][offset + j] = v;
                }
            }
            offset += t.rank();
        }

        let half_norms = symmetrizer(&cartan);
        let inv_cartan = invert(&cartan);
        let det = determinant(&cartan);
        let adj_transpose = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = inv_cartan[j][i] * Rational::from_integer(det);
                        debug_assert!(v.is_integer());
                        v.to_integer()
                    })
                    .collect()
            })
            .collect();
        let form = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| inv_cartan[i][j] * Rational::from_integer(half_norms[j]))
                    .collect()
            })
            .collect();

        let positive_root_coords = positive_roots_closure(&cartan);
        let positive_roots = positive_root_coords
            .iter()
            .map(|c| root_to_weight(&cartan, c))
            .collect();

        RootSystem {
            components: types.to_vec(),
            cartan,
            half_norms,
            positive_roots,
            positive_root_coords,
            form,
            inv_cartan,
            adj_transpose,
            det,
            rho: Weight(vec![1; rank]),
        }
    }

    pub fn components(&self) -> &[CartanType] {
        &self.components
    }

    /// The Cartan type when the system is simple.
    pub fn simple_type(&self) -> Option<CartanType> {
        match self.components.as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn inv_cartan(&self) -> &[Vec<Rational>] {
        &self.inv_cartan
    }

    pub fn form(&self) -> &[Vec<Rational>] {
        &self.form
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Simple root `α_i` in fundamental coordinates.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    pub fn simple_roots(&self) -> Vec<Weight> {
        (0..self.rank()).map(|i| self.simple_root(i)).collect()
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, same order as [`Self::positive_roots`].
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    pub fn name(&self) -> String {
        let names: Vec<String> = self.components.iter().map(|t| t.to_string()).collect();
        names.join("x")
    }

    pub fn check_weight(&self, mu: &Weight) -> Result<()> {
        if mu.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: mu.rank(),
            });
        }
        Ok(())
    }

    /// `(μ, ν)` under the invariant form.
    pub fn inner_product(&self, mu: &Weight, nu: &Weight) -> Result<Rational> {
        self.check_weight(mu)?;
        self.check_weight(nu)?;
        let mut acc = Rational::zero();
        for (i, &a) in mu.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in nu.0.iter().enumerate() {
                if b != 0 {
                    acc += self.form[i][j] * Rational::from_integer(a * b);
                }
            }
        }
        Ok(acc)
    }

    /// `(μ, β)` for `β` given in simple-root coordinates; always an integer.
    pub fn pair_with_root_coords(&self, mu: &Weight, root_coords: &[i64]) -> i64 {
        root_coords
            .iter()
            .zip(&self.half_norms)
            .zip(&mu.0)
            .map(|((c, d), m)| c * d * m)
            .sum()
    }

    /// `<μ, α_i^∨>`, the i-th fundamental coordinate.
    pub fn coroot_pairing(&self, mu: &Weight, i: usize) -> i64 {
        mu.0[i]
    }

    /// Simple reflection `s_i(μ) = μ − <μ, α_i^∨> α_i`.
    pub fn reflect(&self, mu: &Weight, i: usize) -> Weight {
        let k = mu.0[i];
        Weight(
            mu.0.iter()
                .zip(&self.cartan[i])
                .map(|(m, a)| m - k * a)
                .collect(),
        )
    }

    /// The dominant weight in the Weyl orbit of `μ` and the number of simple
    /// reflections used to reach it.
    pub fn dominant_representative(&self, mu: &Weight) -> (Weight, usize) {
        let mut w = mu.clone();
        let mut steps = 0;
        while let Some(i) = w.0.iter().position(|&c| c < 0) {
            w = self.reflect(&w, i);
            steps += 1;
        }
        (w, steps)
    }

    /// `μ` expressed in the basis of simple roots.
    pub fn simple_root_coords(&self, mu: &Weight) -> Vec<Rational> {
        self.adj_transpose
            .iter()
            .map(|row| {
                let num: i64 = row.iter().zip(&mu.0).map(|(a, m)| a * m).sum();
                Rational::new(num, self.det)
            })
            .collect()
    }

    /// Simple-root coordinates when `μ` lies in the root lattice.
    pub fn root_lattice_coords(&self, mu: &Weight) -> Option<Vec<i64>> {
        self.adj_transpose
            .iter()
            .map(|row| {
                let num: i64 = row.iter().zip(&mu.0).map(|(a, m)| a * m).sum();
                let (q, r) = num.div_rem(&self.det);
                (r == 0).then_some(q)
            })
            .collect()
    }

    /// Expands a simple-root-coordinate vector into fundamental coordinates.
    pub fn from_root_coords(&self, coords: &[i64]) -> Weight {
        root_to_weight(&self.cartan, coords)
    }
}

fn root_to_weight(cartan: &[Vec<i64>], coords: &[i64]) -> Weight {
    let n = cartan.len();
    let mut w = vec![0i64; n];
    for (k, &c) in coords.iter().enumerate() {
        if c != 0 {
            for (j, wj) in w.iter_mut().enumerate() {
                *wj += c * cartan[k][j];
            }
        }
    }
    Weight(w)
}

/// Half squared lengths `d_i` with `A[i][j] d_j = A[j][i] d_i`, shortest
/// root in each component normalized to `d = 1`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let n = cartan.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        let mut component = vec![start];
        d[start] = Some(Rational::one());
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].unwrap();
                    d[j] = Some(di * Rational::new(cartan[j][i], cartan[i][j]));
                    component.push(j);
                    stack.push(j);
                }
            }
        }
        let min = component.iter().map(|&i| d[i].unwrap()).min().unwrap();
        for &i in &component {
            d[i] = Some(d[i].unwrap() / min);
        }
    }
    d.into_iter()
        .map(|v| {
            let v = v.unwrap();
            debug_assert!(v.is_integer());
            v.to_integer()
        })
        .collect()
}

fn to_rational(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
        .collect()
}

fn invert(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a = to_rational(m);
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rational::one() } else { Rational::zero() })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is nonsingular");
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (ac, ic) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * ac;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

#[allow(clippy::needless_range_loop)]
fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a = to_rational(m);
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return 0;
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            for j in col..n {
                let v = a[col][j];
                a[r][j] -= f * v;
            }
        }
    }
    det.to_integer()
}

/// Positive roots (simple-root coordinates), ordered by height, generated
/// from the simple roots by α-string closure.
fn positive_roots_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut seen: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut layer = roots.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // p: how far the α_i-string extends below β
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|k| beta[k] * cartan[k][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        layer = next;
    }
    roots
}

#[cfg(test)]
#[allow(clippy::needless_range_loop)]
mod tests {
    use super::*;

    fn rs(f: Family, n: usize) -> RootSystem {
        RootSystem::build(f, n).unwrap()
    }

    fn all_types(max_rank: usize) -> Vec<CartanType> {
        Family::ALL
            .iter()
            .flat_map(|&f| {
                f.valid_ranks(max_rank)
                    .into_iter()
                    .map(move |r| CartanType::new(f, r).unwrap())
            })
            .collect()
    }

    #[test]
    fn rank_constraints() {
        assert!(CartanType::new(Family::A, 0).is_err());
        assert!(CartanType::new(Family::B, 1).is_err());
        assert!(CartanType::new(Family::C, 1).is_err());
        assert!(CartanType::new(Family::D, 2).is_err());
        assert!(CartanType::new(Family::E, 5).is_err());
        assert!(CartanType::new(Family::E, 9).is_err());
        assert!(CartanType::new(Family::F, 3).is_err());
        assert!(CartanType::new(Family::G, 3).is_err());
        assert!(CartanType::new(Family::D, 3).is_ok());
    }

    #[test]
    fn a1_basics() {
        let r = rs(Family::A, 1);
        assert_eq!(r.cartan_matrix(), &[vec![2]]);
        assert_eq!(r.positive_roots(), &[Weight(vec![2])]);
        assert_eq!(r.rho(), &Weight(vec![1]));
        let w1 = Weight(vec![1]);
        assert_eq!(r.inner_product(&w1, &w1).unwrap(), Rational::new(1, 2));
    }

    #[test]
    fn g2_and_b2() {
        let g = rs(Family::G, 2);
        assert_eq!(g.cartan_matrix(), &[vec![2, -1], vec![-3, 2]]);
        assert_eq!(g.positive_roots().len(), 6);
        assert_eq!(g.half_norms(), &[1, 3]);
        let b = rs(Family::B, 2);
        assert_eq!(b.positive_roots().len(), 4);
        let long = b.simple_root(0);
        let short = b.simple_root(1);
        let ratio = b.inner_product(&long, &long).unwrap() / b.inner_product(&short, &short).unwrap();
        assert_eq!(ratio, Rational::from_integer(2));
        assert_eq!(b.inner_product(&short, &short).unwrap(), Rational::from_integer(2));
    }

    #[test]
    fn positive_root_counts_and_rho() {
        for t in all_types(8) {
            let r = RootSystem::new(t);
            assert_eq!(r.positive_roots().len(), t.positive_root_count(), "{t}");
            let mut sum = Weight::zero(t.rank());
            for a in r.positive_roots() {
                sum = sum.add(a);
            }
            assert_eq!(sum, r.rho().scale(2), "{t}");
            for c in r.positive_root_coords() {
                assert!(c.iter().all(|&x| x >= 0));
            }
            for i in 0..t.rank() {
                assert!(r.inner_product(&r.simple_root(i), &r.simple_root(i)).unwrap() > Rational::zero());
            }
        }
    }

    #[test]
    fn cartan_matrix_shape() {
        for t in all_types(8) {
            let r = RootSystem::new(t);
            let a = r.cartan_matrix();
            for i in 0..t.rank() {
                assert_eq!(a[i][i], 2);
                for j in 0..t.rank() {
                    if i != j {
                        assert!(a[i][j] <= 0);
                    }
                }
            }
            assert_ne!(r.det, 0);
        }
    }

    #[test]
    fn form_is_symmetric_and_positive_definite() {
        for t in all_types(8) {
            let r = RootSystem::new(t);
            let f = r.form();
            let n = t.rank();
            for i in 0..n {
                for j in 0..n {
                    assert_eq!(f[i][j], f[j][i], "{t}");
                }
            }
            // Sylvester: leading principal minors positive.
            for k in 1..=n {
                let mut m: Vec<Vec<Rational>> = (0..k).map(|i| f[i][..k].to_vec()).collect();
                let mut det = Rational::one();
                for c in 0..k {
                    let p = m[c][c];
                    assert!(p > Rational::zero(), "{t} minor {k}");
                    det *= p;
                    for r2 in c + 1..k {
                        let fct = m[r2][c] / p;
                        for j in c..k {
                            let v = m[c][j];
                            m[r2][j] -= fct * v;
                        }
                    }
                }
                assert!(det > Rational::zero());
            }
        }
    }

    #[test]
    fn dominant_representative_examples() {
        let a1 = rs(Family::A, 1);
        assert_eq!(a1.dominant_representative(&Weight(vec![-3])), (Weight(vec![3]), 1));
        assert_eq!(a1.dominant_representative(&Weight(vec![2])), (Weight(vec![2]), 0));
        let a2 = rs(Family::A, 2);
        assert_eq!(a2.dominant_representative(&Weight(vec![-1, 2])).0, Weight(vec![1, 1]));
    }

    #[test]
    fn a2_orbit_brute_force() {
        // Orbit of (-1,2) by exhaustive application of reflections.
        let a2 = rs(Family::A, 2);
        let mut orbit: HashSet<Weight> = HashSet::new();
        let mut stack = vec![Weight(vec![-1, 2])];
        while let Some(w) = stack.pop() {
            if orbit.insert(w.clone()) {
                for i in 0..2 {
                    stack.push(a2.reflect(&w, i));
                }
            }
        }
        let dominant: Vec<_> = orbit.iter().filter(|w| w.is_dominant()).collect();
        assert_eq!(dominant, vec![&Weight(vec![1, 1])]);
    }

    #[test]
    fn simple_root_coords_examples() {
        let a2 = rs(Family::A, 2);
        assert_eq!(
            a2.simple_root_coords(&Weight(vec![1, 0])),
            vec![Rational::new(2, 3), Rational::new(1, 3)]
        );
        assert_eq!(a2.root_lattice_coords(&Weight(vec![1, 0])), None);
        for t in all_types(8) {
            let r = RootSystem::new(t);
            for i in 0..t.rank() {
                let mut e = vec![0; t.rank()];
                e[i] = 1;
                assert_eq!(r.root_lattice_coords(&r.simple_root(i)), Some(e));
            }
            assert!(r
                .simple_root_coords(&Weight::zero(t.rank()))
                .iter()
                .all(|c| c.is_zero()));
        }
    }

    #[test]
    fn reflections_preserve_form() {
        let r = rs(Family::F, 4);
        let mu = Weight(vec![1, -2, 3, 0]);
        let nu = Weight(vec![0, 1, -1, 2]);
        for i in 0..4 {
            assert_eq!(
                r.inner_product(&r.reflect(&mu, i), &r.reflect(&nu, i)).unwrap(),
                r.inner_product(&mu, &nu).unwrap()
            );
        }
    }

    #[test]
    fn product_is_block_diagonal() {
        let a1 = CartanType::new(Family::A, 1).unwrap();
        let g2 = CartanType::new(Family::G, 2).unwrap();
        let p = RootSystem::product(&[a1, g2]);
        assert_eq!(p.rank(), 3);
        assert_eq!(p.positive_roots().len(), 7);
        assert_eq!(p.name(), "A1xG2");
        assert_eq!(p.simple_type(), None);
        assert_eq!(p.cartan_matrix()[0], vec![2, 0, 0]);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let r = rs(Family::A, 2);
        assert!(matches!(
            r.inner_product(&Weight(vec![1]), &Weight(vec![1, 0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn weight_parse_roundtrip() {
        let w: Weight = "1,-2, 3".parse().unwrap();
        assert_eq!(w, Weight(vec![1, -2, 3]));
        assert_eq!(w.to_string(), "1,-2,3");
        assert!("1,x".parse::<Weight>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn type_strategy() -> impl Strategy<Value = CartanType> {
            prop::sample::select(all_types(8))
        }

        proptest! {
            #[test]
            fn reflection_invariance(t in type_strategy(), seed in prop::collection::vec(-4i64..5, 16)) {
                let r = RootSystem::new(t);
                let n = t.rank();
                let mu = Weight(seed[..n].to_vec());
                let nu = Weight(seed[8..8 + n].to_vec());
                for i in 0..n {
                    prop_assert_eq!(
                        r.inner_product(&r.reflect(&mu, i), &r.reflect(&nu, i)).unwrap(),
                        r.inner_product(&mu, &nu).unwrap()
                    );
                }
                prop_assert_eq!(r.inner_product(&mu, &nu).unwrap(), r.inner_product(&nu, &mu).unwrap());
            }

            #[test]
            fn root_coords_invert_expansion(t in type_strategy(), c in prop::collection::vec(-5i64..6, 8)) {
                let r = RootSystem::new(t);
                let coords = c[..t.rank()].to_vec();
                let w = r.from_root_coords(&coords);
                prop_assert_eq!(r.root_lattice_coords(&w), Some(coords.clone()));
                let q: Vec<Rational> = coords.iter().map(|&x| Rational::from_integer(x)).collect();
                prop_assert_eq!(r.simple_root_coords(&w), q);
            }

            #[test]
            fn dominant_representative_is_dominant_and_in_orbit(t in type_strategy(), c in prop::collection::vec(-3i64..4, 8)) {
                let r = RootSystem::new(t);
                let mu = Weight(c[..t.rank()].to_vec());
                let (d, _) = r.dominant_representative(&mu);
                prop_assert!(d.is_dominant());
                prop_assert_eq!(r.inner_product(&d, &d).unwrap(), r.inner_product(&mu, &mu).unwrap());
            }
        }
    }
}
