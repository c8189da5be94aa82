//! Linear forests: vertex-disjoint unions of paths `P_{t_1} ∪ … ∪ P_{t_k}`.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::ForestError;

/// Path orders sorted nonincreasing, each at least 2.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForest {
    parts: Vec<usize>,
}

/// Which parity-dependent constant a formula uses. All of them are functions of
/// how many parts are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityCensus {
    pub parts: usize,
    pub even: usize,
}

impl ParityCensus {
    pub fn all_odd(&self) -> bool {
        self.even == 0
    }

    /// `1` if exactly one part is even, `0` if at least two are. `None` when
    /// every part is odd.
    pub fn main_epsilon(&self) -> Option<u8> {
        match self.even {
            0 => None,
            1 => Some(1),
            _ => Some(0),
        }
    }

    /// Subtracted from `Σ⌊t_i/2⌋` in the linear coefficient: 1 if all parts are
    /// odd, otherwise 2.
    pub fn asymptotic_epsilon(&self) -> u8 {
        if self.all_odd() {
            1
        } else {
            2
        }
    }

    /// Additive constant of the Turán number: 1 if all parts are odd.
    pub fn turan_constant(&self) -> u8 {
        u8::from(self.all_odd())
    }
}

impl LinearForest {
    /// Builds a forest from path orders in any order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ForestError> {
        if parts.is_empty() {
            return Err(ForestError::NoParts);
        }
        if let Some(&t) = parts.iter().find(|&&t| t < 2) {
            return Err(ForestError::PartTooSmall(t));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LinearForest { parts })
    }

    pub fn path(t: usize) -> Result<Self, ForestError> {
        Self::new(vec![t])
    }

    /// `t` disjoint edges.
    pub fn matching(t: usize) -> Result<Self, ForestError> {
        Self::new(vec![2; t])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of components `k`.
    pub fn components(&self) -> usize {
        self.parts.len()
    }

    /// Total number of vertices `f`.
    pub fn order(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Total number of edges `Σ(t_i − 1)`.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|t| t - 1).sum()
    }

    /// `s = Σ⌊t_i/2⌋`.
    pub fn half_sum(&self) -> usize {
        self.parts.iter().map(|t| t / 2).sum()
    }

    pub fn even_count(&self) -> usize {
        self.parts.iter().filter(|t| *t % 2 == 0).count()
    }

    pub fn census(&self) -> ParityCensus {
        ParityCensus { parts: self.parts.len(), even: self.even_count() }
    }

    /// Comma separated orders, e.g. `5,4`.
    pub fn spec(&self) -> String {
        self.parts.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl FromStr for LinearForest {
    type Err = ForestError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |reason: String| ForestError::BadSpec { spec: s.to_string(), reason };
        let parts = s
            .split(',')
            .map(|p| {
                let p = p.trim();
                p.strip_prefix(['P', 'p'])
                    .unwrap_or(p)
                    .parse::<usize>()
                    .map_err(|e| bad(format!("{p:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        LinearForest::new(parts)
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ∪ ")?;
            }
            write!(f, "P{t}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for LinearForest {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.spec())
    }
}
