//! Weight posets under the root order.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::character::Character;
use crate::rootsystem::{Rational, RootSystem, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Less,
    Greater,
    Equal,
    Incomparable,
}

/// Root order: `μ > γ` iff `μ − γ` is a nonzero nonnegative integer
/// combination of simple roots.
pub fn dominance_compare(rs: &RootSystem, mu: &Weight, gamma: &Weight) -> Comparison {
    if mu == gamma {
        return Comparison::Equal;
    }
    let Some(c) = rs.root_lattice_coords(&mu.sub(gamma)) else {
        return Comparison::Incomparable;
    };
    if c.iter().all(|&x| x >= 0) {
        Comparison::Greater
    } else if c.iter().all(|&x| x <= 0) {
        Comparison::Less
    } else {
        Comparison::Incomparable
    }
}

/// A cover `upper → lower` where `upper − lower = α_root`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub upper: Weight,
    pub lower: Weight,
    pub root: usize,
}

#[derive(Debug, Clone)]
pub struct WeightPoset {
    character: Character,
    /// Support, highest first.
    elements: Vec<(Rational, Weight)>,
    covers: Vec<Cover>,
}

pub fn build_poset(c: &Character) -> WeightPoset {
    let rs = c.root_system();
    let elements: Vec<(Rational, Weight)> = c
        .sorted_entries()
        .into_iter()
        .map(|(w, _)| (c.height(&w), w))
        .collect();
    let mut covers = Vec::new();
    for (_, w) in &elements {
        for i in 0..rs.rank() {
            let lower = w.sub(&rs.simple_root(i));
            if c.multiplicity(&lower) != 0 {
                covers.push(Cover {
                    upper: w.clone(),
                    lower,
                    root: i,
                });
            }
        }
    }
    WeightPoset {
        character: c.clone(),
        elements,
        covers,
    }
}

/// Every weight space is one-dimensional.
pub fn is_wmf(c: &Character) -> bool {
    c.entries().values().all(|&m| m == 1)
}

/// Total order test by levels: one weight per height, consecutive weights
/// differing by a simple root.
pub fn is_chain(p: &WeightPoset) -> bool {
    let by_level = p.is_chain_by_levels();
    debug_assert_eq!(by_level, p.is_chain_pairwise(), "chain tests disagree");
    by_level
}

impl WeightPoset {
    pub fn character(&self) -> &Character {
        &self.character
    }

    pub fn elements(&self) -> impl Iterator<Item = &Weight> {
        self.elements.iter().map(|(_, w)| w)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn compare(&self, mu: &Weight, gamma: &Weight) -> Comparison {
        dominance_compare(self.character.root_system(), mu, gamma)
    }

    pub fn is_chain_by_levels(&self) -> bool {
        let rs = self.character.root_system();
        self.elements.windows(2).all(|pair| {
            let (ha, a) = &pair[0];
            let (hb, b) = &pair[1];
            ha != hb && (0..rs.rank()).any(|i| a.sub(b) == rs.simple_root(i))
        })
    }

    /// O(k²) total-order test by comparing every pair.
    pub fn is_chain_pairwise(&self) -> bool {
        let ws: Vec<&Weight> = self.elements().collect();
        for (i, a) in ws.iter().enumerate() {
            for b in &ws[i + 1..] {
                if self.compare(a, b) == Comparison::Incomparable {
                    return false;
                }
            }
        }
        true
    }

    /// Elements with nothing above them.
    pub fn maximal_elements(&self) -> Vec<&Weight> {
        self.elements()
            .filter(|w| !self.elements().any(|v| self.compare(v, w) == Comparison::Greater))
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<&Weight> {
        self.elements()
            .filter(|w| !self.elements().any(|v| self.compare(v, w) == Comparison::Less))
            .collect()
    }

    /// First pair of incomparable support weights, if any.
    pub fn incomparable_pair(&self) -> Option<(Weight, Weight)> {
        let ws: Vec<&Weight> = self.elements().collect();
        for (i, a) in ws.iter().enumerate() {
            for b in &ws[i + 1..] {
                if self.compare(a, b) == Comparison::Incomparable {
                    return Some(((*a).clone(), (*b).clone()));
                }
            }
        }
        None
    }

    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            type_name: self.character.root_system().name(),
            rank: self.character.root_system().rank(),
            nodes: self
                .elements()
                .map(|w| (w.0.clone(), self.character.multiplicity(w)))
                .collect(),
            covers: self
                .covers
                .iter()
                .map(|c| (c.upper.0.clone(), c.lower.0.clone(), c.root + 1))
                .collect(),
            chain: is_chain(self),
        }
    }

    /// Text rendering; chains are drawn top to bottom with the simple root
    /// on each edge.
    pub fn render(&self) -> String {
        let mut out = String::new();
        if is_chain(self) {
            let ws: Vec<&Weight> = self.elements().collect();
            for (k, w) in ws.iter().enumerate() {
                let _ = writeln!(out, "({w})");
                if let Some(next) = ws.get(k + 1) {
                    let root = self
                        .covers
                        .iter()
                        .find(|c| &&c.upper == w && &&c.lower == next)
                        .map(|c| c.root + 1)
                        .unwrap_or(0);
                    let _ = writeln!(out, "  | a{root}");
                }
            }
        } else {
            for c in &self.covers {
                let _ = writeln!(out, "({}) -a{}-> ({})", c.upper, c.root + 1, c.lower);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub rank: usize,
    pub nodes: Vec<(Vec<i64>, i64)>,
    /// `(upper, lower, simple root index starting at 1)`
    pub covers: Vec<(Vec<i64>, Vec<i64>, usize)>,
    pub chain: bool,
}
