//! Index sets `I(d,2d)` and `I(d)`, the Bruhat order, the `#` involution and
//! admissible pairs.
//!
//! A [`FixedPointIndex`] is a `d`-element subset of `{1, ..., 2d}` stored as a
//! strictly increasing vector. The isotropic ones (no entry `j` together with
//! `j* = 2d + 1 - j`) index the torus-fixed points of the Lagrangian
//! Grassmannian.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `j* = 2d + 1 - j`.
pub fn star(j: usize, d: usize) -> Result<usize> {
    if j == 0 || j > 2 * d {
        return Err(Error::IndexOutOfRange {
            index: j,
            max: 2 * d,
        });
    }
    Ok(2 * d + 1 - j)
}

#[inline]
pub(crate) fn star_unchecked(j: usize, d: usize) -> usize {
    2 * d + 1 - j
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FixedPointIndex {
    d: usize,
    entries: Vec<usize>,
}

impl FixedPointIndex {
    /// Builds an index from its entries; order of `entries` does not matter,
    /// repeats and out-of-range values are rejected.
    pub fn new(d: usize, mut entries: Vec<usize>) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidIndex {
                d,
                entries,
                reason: "d must be positive",
            });
        }
        entries.sort_unstable();
        if entries.len() != d {
            return Err(Error::InvalidIndex {
                d,
                entries,
                reason: "wrong number of entries",
            });
        }
        if entries.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndex {
                d,
                entries,
                reason: "repeated entry",
            });
        }
        if entries[0] == 0 || entries[d - 1] > 2 * d {
            return Err(Error::InvalidIndex {
                d,
                entries,
                reason: "entry outside 1..=2d",
            });
        }
        Ok(Self { d, entries })
    }

    pub(crate) fn from_sorted(d: usize, entries: Vec<usize>) -> Self {
        debug_assert!(entries.len() == d && entries.windows(2).all(|w| w[0] < w[1]));
        Self { d, entries }
    }

    /// `epsilon = {1, ..., d}`, the minimum of `I(d)`.
    pub fn epsilon(d: usize) -> Self {
        Self::from_sorted(d, (1..=d).collect())
    }

    /// `{d+1, ..., 2d}`, the maximum of `I(d)`.
    pub fn top(d: usize) -> Self {
        Self::from_sorted(d, (d + 1..=2 * d).collect())
    }

    /// Parses the textual form `"1,3"`.
    /// Parses `"1,3"`; the rank is the number of entries.
    pub fn parse_any(s: &str) -> Result<Self> {
        let d = s.split(',').filter(|t| !t.trim().is_empty()).count();
        Self::parse(d, s)
    }

    pub fn parse(d: usize, s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| t.trim())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(d, entries)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Ambient dimension `2d`.
    pub fn n(&self) -> usize {
        2 * self.d
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn contains(&self, j: usize) -> bool {
        self.entries.binary_search(&j).is_ok()
    }

    /// `v* = {j* : j in v}`.
    pub fn star(&self) -> Self {
        let mut e: Vec<usize> = self
            .entries
            .iter()
            .map(|&j| star_unchecked(j, self.d))
            .collect();
        e.reverse();
        Self::from_sorted(self.d, e)
    }

    pub fn complement(&self) -> Self {
        let e = (1..=self.n()).filter(|j| !self.contains(*j)).collect();
        Self::from_sorted(self.d, e)
    }

    /// `theta# = (complement of theta)*`. An involution on `I(d,2d)` whose
    /// fixed points are exactly the isotropic indices.
    pub fn sharp(&self) -> Self {
        self.complement().star()
    }

    pub fn is_isotropic(&self) -> bool {
        self.entries
            .iter()
            .all(|&j| !self.contains(star_unchecked(j, self.d)))
    }

    /// Componentwise comparison of sorted entries. Panics if the two indices
    /// live in different ambient dimensions; see [`Self::try_bruhat_le`].
    pub fn bruhat_le(&self, other: &Self) -> bool {
        assert_eq!(self.d, other.d, "Bruhat comparison across dimensions");
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn try_bruhat_le(&self, other: &Self) -> Result<bool> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(self.bruhat_le(other))
    }

    /// `|self \ other|`.
    pub fn difference_len(&self, other: &Self) -> usize {
        self.entries.iter().filter(|j| !other.contains(**j)).count()
    }

    /// `|v \ epsilon|`, the number of entries exceeding `d`.
    pub fn epsilon_degree(&self) -> usize {
        self.entries.iter().filter(|&&j| j > self.d).count()
    }
}

impl fmt::Display for FixedPointIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.entries.iter().join(","))
    }
}

impl<'de> Deserialize<'de> for FixedPointIndex {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        Self::parse_any(&s).map_err(serde::de::Error::custom)
    }
}

impl Serialize for FixedPointIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All elements of `I(d,2d)` (when `ambient_only`) or of `I(d)`, in
/// lexicographic order.
pub fn enumerate_i(d: usize, ambient_only: bool) -> Vec<FixedPointIndex> {
    (1..=2 * d)
        .combinations(d)
        .map(|e| FixedPointIndex::from_sorted(d, e))
        .filter(|v| ambient_only || v.is_isotropic())
        .collect()
}

pub fn enumerate_ambient(d: usize) -> Vec<FixedPointIndex> {
    enumerate_i(d, true)
}

pub fn enumerate_isotropic(d: usize) -> Vec<FixedPointIndex> {
    enumerate_i(d, false)
}

/// Lattice join and meet (componentwise max / min).
pub fn join_meet(
    v: &FixedPointIndex,
    w: &FixedPointIndex,
) -> Result<(FixedPointIndex, FixedPointIndex)> {
    if v.d != w.d {
        return Err(Error::DimensionMismatch {
            left: v.d,
            right: w.d,
        });
    }
    let (hi, lo) = v
        .entries
        .iter()
        .zip(&w.entries)
        .map(|(&a, &b)| (a.max(b), a.min(b)))
        .unzip();
    Ok((
        FixedPointIndex::from_sorted(v.d, hi),
        FixedPointIndex::from_sorted(v.d, lo),
    ))
}

/// An admissible pair `(top, bot)`, realized through a `#`-orbit
/// `{theta, theta#}` with `top = theta v theta#` and `bot = theta ^ theta#`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AdmissiblePair {
    top: FixedPointIndex,
    bot: FixedPointIndex,
    theta: FixedPointIndex,
}

impl AdmissiblePair {
    /// The pair attached to the orbit of `theta`.
    pub fn from_orbit(theta: &FixedPointIndex) -> Self {
        let partner = theta.sharp();
        let rep = theta.clone().min(partner.clone());
        let (top, bot) = join_meet(theta, &partner).expect("same dimension");
        Self {
            top,
            bot,
            theta: rep,
        }
    }

    /// The diagonal pair `(v, v)` of an isotropic index.
    pub fn diagonal(v: &FixedPointIndex) -> Result<Self> {
        if !v.is_isotropic() {
            return Err(Error::NotIsotropic(v.to_string()));
        }
        Ok(Self::from_orbit(v))
    }

    pub fn top(&self) -> &FixedPointIndex {
        &self.top
    }

    pub fn bot(&self) -> &FixedPointIndex {
        &self.bot
    }

    /// Lexicographically smaller element of the orbit; `f_{w,beta}` is the
    /// minor of this index.
    pub fn representative(&self) -> &FixedPointIndex {
        &self.theta
    }

    pub fn partner(&self) -> FixedPointIndex {
        self.theta.sharp()
    }

    pub fn is_diagonal(&self) -> bool {
        self.top == self.bot
    }

    /// `|theta \ beta|`, which equals `(|top \ beta| + |bot \ beta|) / 2`.
    pub fn beta_degree(&self, beta: &FixedPointIndex) -> usize {
        self.theta.difference_len(beta)
    }

    /// `self <= other` in the order used by standard monomials:
    /// `top(self) <= bot(other)`.
    pub fn precedes(&self, other: &Self) -> bool {
        self.top.bruhat_le(&other.bot)
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{{}}},{{{}}})", self.top, self.bot)
    }
}

/// One admissible pair per distinct `(top, bot)` arising from a `#`-orbit of
/// `I(d,2d)`, ordered by orbit representative.
///
/// For `d <= 3` every orbit gives a distinct pair. From `d = 4` on, two
/// orbits can share the same join and meet; only the first is kept.
pub fn admissible_pairs(d: usize) -> Vec<AdmissiblePair> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for theta in enumerate_ambient(d) {
        if theta.sharp() < theta {
            continue;
        }
        let pair = AdmissiblePair::from_orbit(&theta);
        if seen.insert((pair.top.clone(), pair.bot.clone())) {
            out.push(pair);
        }
    }
    out
}

/// Looks up the admissible pair with the given top and bottom.
pub fn find_pair<'a>(
    pairs: &'a [AdmissiblePair],
    top: &FixedPointIndex,
    bot: &FixedPointIndex,
) -> Option<&'a AdmissiblePair> {
    pairs.iter().find(|p| p.top == *top && p.bot == *bot)
}
