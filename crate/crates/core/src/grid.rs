//! The coordinate grid `N(beta)` of the tangent space at `e_beta`, its
//! regions, extended chains, multisets and the boundedness predicates.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::{star_unchecked, FixedPointIndex};

/// A position `(r, c)` with `r` not in `beta` and `c` in `beta`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GridPoint {
    pub r: usize,
    pub c: usize,
}

impl GridPoint {
    pub const fn new(r: usize, c: usize) -> Self {
        Self { r, c }
    }

    /// `(R, C) > (r, c)` iff `R > r` and `C < c`.
    pub fn chain_gt(&self, other: &Self) -> bool {
        self.r > other.r && self.c < other.c
    }

    pub fn is_positive(&self) -> bool {
        self.r > self.c
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.r, self.c)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    UpperPositive,
    UpperNegative,
    StrictlyLower,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct ClassifiedPoint {
    pub point: GridPoint,
    pub region: Region,
    pub diagonal: bool,
}

/// The grid attached to an isotropic `beta`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BetaGrid {
    beta: FixedPointIndex,
}

impl BetaGrid {
    pub fn new(beta: FixedPointIndex) -> Result<Self> {
        if !beta.is_isotropic() {
            return Err(Error::NotIsotropic(beta.to_string()));
        }
        Ok(Self { beta })
    }

    pub fn beta(&self) -> &FixedPointIndex {
        &self.beta
    }

    pub fn d(&self) -> usize {
        self.beta.d()
    }

    pub fn n(&self) -> usize {
        self.beta.n()
    }

    fn star(&self, j: usize) -> usize {
        star_unchecked(j, self.d())
    }

    pub fn contains(&self, p: GridPoint) -> bool {
        (1..=self.n()).contains(&p.r) && !self.beta.contains(p.r) && self.beta.contains(p.c)
    }

    pub fn check(&self, p: GridPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PointOutsideGrid {
                point: p.to_string(),
                beta: self.beta.to_string(),
            })
        }
    }

    /// Row indices of the grid (complement of `beta`), ascending.
    pub fn rows(&self) -> Vec<usize> {
        (1..=self.n()).filter(|r| !self.beta.contains(*r)).collect()
    }

    /// Column indices of the grid (entries of `beta`), ascending.
    pub fn cols(&self) -> Vec<usize> {
        self.beta.entries().to_vec()
    }

    /// All `d * d` points, lexicographic in `(r, c)`.
    pub fn points(&self) -> Vec<GridPoint> {
        let cols = self.cols();
        self.rows()
            .into_iter()
            .flat_map(|r| cols.iter().map(move |&c| GridPoint::new(r, c)))
            .collect()
    }

    /// `R(beta) = {(r, c) : r <= c*}`.
    pub fn upper_points(&self) -> Vec<GridPoint> {
        self.points()
            .into_iter()
            .filter(|p| self.is_upper(*p))
            .collect()
    }

    pub fn is_upper(&self, p: GridPoint) -> bool {
        p.r <= self.star(p.c)
    }

    pub fn is_diagonal(&self, p: GridPoint) -> bool {
        p.r == self.star(p.c)
    }

    pub fn region(&self, p: GridPoint) -> Region {
        if !self.is_upper(p) {
            Region::StrictlyLower
        } else if p.is_positive() {
            Region::UpperPositive
        } else {
            Region::UpperNegative
        }
    }

    pub fn classified_points(&self) -> Vec<ClassifiedPoint> {
        self.points()
            .into_iter()
            .map(|point| ClassifiedPoint {
                point,
                region: self.region(point),
                diagonal: self.is_diagonal(point),
            })
            .collect()
    }

    /// `(r, c) -> (c*, r*)`.
    pub fn sharp_point(&self, p: GridPoint) -> GridPoint {
        GridPoint::new(self.star(p.c), self.star(p.r))
    }

    /// The upper representative of the `#`-orbit of `p`.
    pub fn fold(&self, p: GridPoint) -> GridPoint {
        if self.is_upper(p) {
            p
        } else {
            self.sharp_point(p)
        }
    }
}

/// True iff consecutive points strictly decrease: `R > r` and `C < c`.
pub fn is_extended_chain(points: &[GridPoint]) -> bool {
    points.windows(2).all(|w| w[0].chain_gt(&w[1]))
}

/// True iff every point lies in `R(beta)`.
pub fn is_upper(points: &[GridPoint], grid: &BetaGrid) -> bool {
    points
        .iter()
        .all(|p| grid.contains(*p) && grid.is_upper(*p))
}

/// A strictly decreasing sequence of grid points. May be empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Chain(Vec<GridPoint>);

impl Chain {
    pub fn new(points: Vec<GridPoint>) -> Result<Self> {
        if !is_extended_chain(&points) {
            return Err(Error::NotAChain(
                points
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ));
        }
        Ok(Self(points))
    }

    /// Sorts a set of pairwise comparable points into a chain.
    pub fn from_unordered(mut points: Vec<GridPoint>) -> Result<Self> {
        points.sort_by(|a, b| b.r.cmp(&a.r));
        Self::new(points)
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_non_vanishing(&self) -> bool {
        !self.0.is_empty()
    }

    pub fn positive_part(&self) -> Chain {
        Chain(
            self.0
                .iter()
                .copied()
                .filter(GridPoint::is_positive)
                .collect(),
        )
    }

    pub fn negative_part(&self) -> Chain {
        Chain(
            self.0
                .iter()
                .copied()
                .filter(|p| !p.is_positive())
                .collect(),
        )
    }

    pub fn rows(&self) -> Vec<usize> {
        let mut v: Vec<_> = self.0.iter().map(|p| p.r).collect();
        v.sort_unstable();
        v
    }

    pub fn cols(&self) -> Vec<usize> {
        self.0.iter().map(|p| p.c).collect()
    }

    /// `(beta \ C_(2)) u C_(1)`.
    pub fn value(&self, beta: &FixedPointIndex) -> Result<FixedPointIndex> {
        bound_value(&self.rows(), &self.cols(), beta)
    }
}

/// `(beta \ cols) u rows`.
pub fn bound_value(
    rows: &[usize],
    cols: &[usize],
    beta: &FixedPointIndex,
) -> Result<FixedPointIndex> {
    if rows.len() != cols.len() {
        return Err(Error::InvalidBound(format!(
            "|R| = {} but |S| = {}",
            rows.len(),
            cols.len()
        )));
    }
    if let Some(r) = rows.iter().find(|r| beta.contains(**r)) {
        return Err(Error::InvalidBound(format!(
            "row {r} lies in beta = {beta}"
        )));
    }
    if let Some(c) = cols.iter().find(|c| !beta.contains(**c)) {
        return Err(Error::InvalidBound(format!(
            "column {c} not in beta = {beta}"
        )));
    }
    let mut entries: Vec<usize> = beta
        .entries()
        .iter()
        .copied()
        .filter(|j| !cols.contains(j))
        .chain(rows.iter().copied())
        .collect();
    entries.sort_unstable();
    entries.dedup();
    FixedPointIndex::new(beta.d(), entries)
        .map_err(|e| Error::InvalidBound(format!("rows or columns repeat: {e}")))
}

/// A pair `(R, S)` of row and column sets, standing for `T_alpha` or `W_gamma`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bound {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl Bound {
    /// Canonical preimage `(v \ beta, beta \ v)` of `v`.
    pub fn of(v: &FixedPointIndex, beta: &FixedPointIndex) -> Self {
        Self {
            rows: v
                .entries()
                .iter()
                .copied()
                .filter(|j| !beta.contains(*j))
                .collect(),
            cols: beta
                .entries()
                .iter()
                .copied()
                .filter(|j| !v.contains(*j))
                .collect(),
        }
    }

    pub fn value(&self, beta: &FixedPointIndex) -> Result<FixedPointIndex> {
        bound_value(&self.rows, &self.cols, beta)
    }
}

/// `alpha <= value(C-)` and `value(C+) <= gamma`; an empty part imposes
/// nothing.
pub fn chain_bounded(
    chain: &Chain,
    alpha: &FixedPointIndex,
    gamma: &FixedPointIndex,
    grid: &BetaGrid,
) -> Result<bool> {
    for p in chain.points() {
        grid.check(*p)?;
    }
    let beta = grid.beta();
    let neg = chain.negative_part();
    if !neg.is_empty() && !alpha.bruhat_le(&neg.value(beta)?) {
        return Ok(false);
    }
    let pos = chain.positive_part();
    if !pos.is_empty() && !pos.value(beta)?.bruhat_le(gamma) {
        return Ok(false);
    }
    Ok(true)
}

/// Multiset on the grid: point -> positive multiplicity.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(into = "Vec<MultisetEntry>", from = "Vec<MultisetEntry>")]
pub struct GridMultiset {
    counts: BTreeMap<GridPoint, u32>,
}

/// JSON form of one multiset entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MultisetEntry {
    pub r: usize,
    pub c: usize,
    pub mult: u32,
}

impl From<GridMultiset> for Vec<MultisetEntry> {
    fn from(m: GridMultiset) -> Self {
        m.counts
            .into_iter()
            .map(|(p, mult)| MultisetEntry {
                r: p.r,
                c: p.c,
                mult,
            })
            .collect()
    }
}

impl From<Vec<MultisetEntry>> for GridMultiset {
    fn from(v: Vec<MultisetEntry>) -> Self {
        let mut m = GridMultiset::new();
        for e in v {
            m.insert(GridPoint::new(e.r, e.c), e.mult);
        }
        m
    }
}

impl FromIterator<GridPoint> for GridMultiset {
    fn from_iter<I: IntoIterator<Item = GridPoint>>(iter: I) -> Self {
        let mut m = Self::new();
        for p in iter {
            m.insert(p, 1);
        }
        m
    }
}

impl GridMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts<I: IntoIterator<Item = (GridPoint, u32)>>(iter: I) -> Self {
        let mut m = Self::new();
        for (p, k) in iter {
            m.insert(p, k);
        }
        m
    }

    pub fn insert(&mut self, p: GridPoint, mult: u32) {
        if mult > 0 {
            *self.counts.entry(p).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, p: GridPoint) -> u32 {
        self.counts.get(&p).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (GridPoint, u32)> + '_ {
        self.counts.iter().map(|(p, k)| (*p, *k))
    }

    pub fn support(&self) -> Vec<GridPoint> {
        self.counts.keys().copied().collect()
    }

    pub fn check_in(&self, grid: &BetaGrid) -> Result<()> {
        self.counts.keys().try_for_each(|p| grid.check(*p))
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut m = self.clone();
        for (p, k) in other.iter() {
            m.insert(p, k);
        }
        m
    }

    pub fn filter(&self, keep: impl Fn(GridPoint) -> bool) -> Self {
        Self {
            counts: self
                .counts
                .iter()
                .filter(|(p, _)| keep(**p))
                .map(|(p, k)| (*p, *k))
                .collect(),
        }
    }

    pub fn positive_part(&self) -> Self {
        self.filter(|p| p.is_positive())
    }

    pub fn negative_part(&self) -> Self {
        self.filter(|p| !p.is_positive())
    }

    /// `M# = {(c*, r*) : (r, c) in M}`.
    pub fn sharp(&self, grid: &BetaGrid) -> Self {
        Self::from_counts(self.iter().map(|(p, k)| (grid.sharp_point(p), k)))
    }

    /// `M u M#`; degree doubles.
    pub fn doubled(&self, grid: &BetaGrid) -> Self {
        self.union(&self.sharp(grid))
    }

    /// `M = M#` and every diagonal multiplicity is even.
    pub fn is_special(&self, grid: &BetaGrid) -> bool {
        self.counts.iter().all(|(p, k)| {
            self.multiplicity(grid.sharp_point(*p)) == *k && (!grid.is_diagonal(*p) || k % 2 == 0)
        })
    }

    /// Folds strictly lower points onto `R(beta)` and halves.
    pub fn sqrt_special(&self, grid: &BetaGrid) -> Result<Self> {
        self.check_in(grid)?;
        if !self.is_special(grid) {
            return Err(Error::NotSpecial(format!("{self}")));
        }
        let mut folded: BTreeMap<GridPoint, u32> = BTreeMap::new();
        for (p, k) in self.iter() {
            *folded.entry(grid.fold(p)).or_insert(0) += k;
        }
        Ok(Self::from_counts(
            folded.into_iter().map(|(p, k)| (p, k / 2)),
        ))
    }
}

impl fmt::Display for GridMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (p, k)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}^{k}")?;
        }
        write!(f, "}}")
    }
}

/// Maximal chains of a set of points (empty input gives one empty chain).
pub fn maximal_chains(points: &[GridPoint]) -> Vec<Chain> {
    let mut pts = points.to_vec();
    pts.sort_by(|a, b| b.r.cmp(&a.r).then(a.c.cmp(&b.c)));
    pts.dedup();
    // a chain is maximal iff it starts at a point with no predecessor, ends at
    // one with no successor, and each step is a cover within `pts`
    let covers = |a: &GridPoint, b: &GridPoint| {
        a.chain_gt(b) && !pts.iter().any(|m| a.chain_gt(m) && m.chain_gt(b))
    };
    let mut out = Vec::new();
    let mut stack: Vec<Vec<GridPoint>> = pts
        .iter()
        .filter(|p| !pts.iter().any(|q| q.chain_gt(p)))
        .map(|p| vec![*p])
        .collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("nonempty path");
        let next: Vec<_> = pts.iter().filter(|q| covers(&last, q)).collect();
        if next.is_empty() {
            out.push(Chain(path));
        } else {
            for q in next {
                let mut p = path.clone();
                p.push(*q);
                stack.push(p);
            }
        }
    }
    if out.is_empty() {
        out.push(Chain::default());
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Every extended chain drawn from the support is bounded. Only maximal
/// chains are inspected; boundedness passes to subchains.
pub fn multiset_bounded(
    m: &GridMultiset,
    alpha: &FixedPointIndex,
    gamma: &FixedPointIndex,
    grid: &BetaGrid,
) -> Result<bool> {
    m.check_in(grid)?;
    // positive and negative parts are bounded independently, so maximal
    // chains of each part suffice
    for part in [m.positive_part(), m.negative_part()] {
        for chain in maximal_chains(&part.support()) {
            if !chain_bounded(&chain, alpha, gamma, grid)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::enumerate_isotropic;
    use proptest::prelude::*;

    fn fpi(d: usize, e: &[usize]) -> FixedPointIndex {
        FixedPointIndex::new(d, e.to_vec()).unwrap()
    }

    fn gp(r: usize, c: usize) -> GridPoint {
        GridPoint::new(r, c)
    }

    fn grid13() -> BetaGrid {
        BetaGrid::new(fpi(2, &[1, 3])).unwrap()
    }

    #[test]
    fn regions_of_beta_13() {
        let g = grid13();
        assert_eq!(g.points(), vec![gp(2, 1), gp(2, 3), gp(4, 1), gp(4, 3)]);
        assert_eq!(g.upper_points(), vec![gp(2, 1), gp(2, 3), gp(4, 1)]);
        let diag: Vec<_> = g
            .points()
            .into_iter()
            .filter(|p| g.is_diagonal(*p))
            .collect();
        assert_eq!(diag, vec![gp(2, 3), gp(4, 1)]);
        assert_eq!(g.region(gp(2, 1)), Region::UpperPositive);
        assert_eq!(g.region(gp(4, 1)), Region::UpperPositive);
        assert_eq!(g.region(gp(2, 3)), Region::UpperNegative);
        assert_eq!(g.region(gp(4, 3)), Region::StrictlyLower);
    }

    #[test]
    fn region_counts_and_partition() {
        for d in 1..=4 {
            for beta in enumerate_isotropic(d) {
                let g = BetaGrid::new(beta).unwrap();
                assert_eq!(g.points().len(), d * d);
                assert_eq!(g.upper_points().len(), d * (d + 1) / 2);
                for p in g.points() {
                    assert_ne!(p.r, p.c);
                    if g.is_diagonal(p) {
                        assert!(g.is_upper(p));
                        assert_eq!(g.sharp_point(p), p);
                    }
                    assert_eq!(g.sharp_point(g.sharp_point(p)), p);
                    assert!(g.contains(g.sharp_point(p)));
                    assert_eq!(g.sharp_point(p).is_positive(), p.is_positive());
                }
            }
        }
        assert!(BetaGrid::new(fpi(2, &[1, 4])).is_err());
    }

    #[test]
    fn sharp_point_examples() {
        let g = grid13();
        assert_eq!(g.sharp_point(gp(2, 1)), gp(4, 3));
        assert_eq!(g.sharp_point(gp(4, 1)), gp(4, 1));
    }

    #[test]
    fn chain_predicates() {
        let g = grid13();
        let c = [gp(4, 1), gp(2, 3)];
        assert!(is_extended_chain(&c));
        assert!(is_upper(&c, &g));
        assert!(!is_extended_chain(&[gp(4, 3), gp(2, 1)]));
        assert!(is_extended_chain(&[]));
        assert!(!Chain::new(vec![]).unwrap().is_non_vanishing());
        let ch = Chain::new(c.to_vec()).unwrap();
        assert_eq!(ch.positive_part().points(), &[gp(4, 1)]);
        assert_eq!(ch.negative_part().points(), &[gp(2, 3)]);
    }

    #[test]
    fn bound_value_examples() {
        let b = fpi(2, &[1, 3]);
        assert_eq!(bound_value(&[4], &[1], &b).unwrap(), fpi(2, &[3, 4]));
        assert_eq!(bound_value(&[2], &[3], &b).unwrap(), fpi(2, &[1, 2]));
        assert_eq!(bound_value(&[], &[], &b).unwrap(), b);
        assert!(bound_value(&[2, 4], &[1], &b).is_err());
        assert!(bound_value(&[3], &[1], &b).is_err());
        assert!(bound_value(&[2], &[4], &b).is_err());
        assert_eq!(
            Bound::of(&fpi(2, &[3, 4]), &b).value(&b).unwrap(),
            fpi(2, &[3, 4])
        );
    }

    #[test]
    fn chain_bounded_examples() {
        let g = grid13();
        let c = Chain::new(vec![gp(4, 1), gp(2, 3)]).unwrap();
        assert!(chain_bounded(&c, &fpi(2, &[1, 2]), &fpi(2, &[3, 4]), &g).unwrap());
        let c = Chain::new(vec![gp(2, 1)]).unwrap();
        let b = fpi(2, &[1, 3]);
        assert!(!chain_bounded(&c, &b, &b, &g).unwrap());
        assert!(chain_bounded(&Chain::default(), &b, &b, &g).unwrap());
    }

    #[test]
    fn multiset_bounded_examples() {
        let g = grid13();
        let b = fpi(2, &[1, 3]);
        let m: GridMultiset = [gp(4, 1)].into_iter().collect();
        assert!(multiset_bounded(&m, &fpi(2, &[1, 2]), &fpi(2, &[3, 4]), &g).unwrap());
        let m: GridMultiset = [gp(2, 1)].into_iter().collect();
        assert!(!multiset_bounded(&m, &b, &b, &g).unwrap());
        assert!(multiset_bounded(&GridMultiset::new(), &b, &b, &g).unwrap());
    }

    #[test]
    fn sqrt_examples() {
        let g = grid13();
        let m: GridMultiset = [gp(2, 1), gp(4, 3)].into_iter().collect();
        assert_eq!(
            m.sqrt_special(&g).unwrap(),
            [gp(2, 1)].into_iter().collect()
        );
        let m = GridMultiset::from_counts([(gp(4, 1), 2)]);
        assert_eq!(
            m.sqrt_special(&g).unwrap(),
            [gp(4, 1)].into_iter().collect()
        );
        let odd = GridMultiset::from_counts([(gp(4, 1), 1)]);
        assert!(odd.sqrt_special(&g).is_err());
        let lopsided = GridMultiset::from_counts([(gp(2, 1), 1)]);
        assert!(lopsided.sqrt_special(&g).is_err());
    }

    #[test]
    fn maximal_chains_small() {
        let pts = [gp(4, 1), gp(2, 3), gp(2, 1)];
        let chains = maximal_chains(&pts);
        let as_vecs: Vec<_> = chains.iter().map(|c| c.points().to_vec()).collect();
        assert_eq!(as_vecs, vec![vec![gp(2, 1)], vec![gp(4, 1), gp(2, 3)]]);
        assert_eq!(maximal_chains(&[]), vec![Chain::default()]);
    }

    #[test]
    fn folding_chains_of_doubled_monomials_gives_upper_chains() {
        // any chain D of U u U# folds to an upper chain inside U
        for d in 1..=3 {
            for beta in enumerate_isotropic(d) {
                let g = BetaGrid::new(beta.clone()).unwrap();
                let upper = g.upper_points();
                for mask in 1u32..(1 << upper.len()) {
                    let u: GridMultiset = upper
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| mask & (1 << i) != 0)
                        .map(|(_, p)| *p)
                        .collect();
                    let doubled = u.doubled(&g).support();
                    for sub in 1u32..(1 << doubled.len()) {
                        let pts: Vec<_> = doubled
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| sub & (1 << i) != 0)
                            .map(|(_, p)| *p)
                            .collect();
                        let Ok(dchain) = Chain::from_unordered(pts) else {
                            continue;
                        };
                        let folded: Vec<_> = dchain.points().iter().map(|p| g.fold(*p)).collect();
                        assert!(is_extended_chain(&folded), "{beta}: {folded:?}");
                        assert!(folded.iter().all(|p| u.multiplicity(*p) > 0));
                    }
                }
            }
        }
    }

    fn arb_upper_multiset() -> impl Strategy<Value = (BetaGrid, GridMultiset)> {
        (1usize..=3)
            .prop_flat_map(|d| {
                let betas = enumerate_isotropic(d);
                (0..betas.len(), Just(betas))
            })
            .prop_flat_map(|(i, betas)| {
                let g = BetaGrid::new(betas[i].clone()).unwrap();
                let n = g.upper_points().len();
                (Just(g), proptest::collection::vec(0u32..3, n))
            })
            .prop_map(|(g, mults)| {
                let m = GridMultiset::from_counts(g.upper_points().into_iter().zip(mults));
                (g, m)
            })
    }

    proptest! {
        #[test]
        fn doubling_round_trips((g, u) in arb_upper_multiset()) {
            let s = u.doubled(&g);
            prop_assert!(s.is_special(&g));
            prop_assert_eq!(s.degree(), 2 * u.degree());
            prop_assert_eq!(s.sqrt_special(&g).unwrap(), u.clone());
            prop_assert_eq!(s.sharp(&g), s);
        }

        #[test]
        fn chain_boundedness_is_monotone((g, u) in arb_upper_multiset(), ai in 0usize..8, gi in 0usize..8) {
            let iso = enumerate_isotropic(g.d());
            let alpha = &iso[ai % iso.len()];
            let gamma = &iso[gi % iso.len()];
            for chain in maximal_chains(&u.support()) {
                if chain_bounded(&chain, alpha, gamma, &g).unwrap() {
                    for k in 0..chain.len() {
                        let mut pts = chain.points().to_vec();
                        pts.remove(k);
                        let sub = Chain::new(pts).unwrap();
                        prop_assert!(chain_bounded(&sub, alpha, gamma, &g).unwrap());
                    }
                }
            }
        }
    }
}
