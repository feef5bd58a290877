//! Notched bitableaux and the bounded RSK correspondence.
//!
//! The positive part of a multiset is standardized into a permutation whose
//! increasing sequences are the extended chains. The shapes of that
//! permutation restricted to the corners `{r > k} x {c <= k}` determine one
//! row value per shape row. The negative part is handled by moving it to the
//! grid of `beta*`, where it becomes positive.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{bound_value, BetaGrid, Chain, GridMultiset, GridPoint};
use crate::index::{star_unchecked, FixedPointIndex};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Neg,
    Pos,
}

/// One row `(P_i, Q_i)`: rows outside `beta` and columns inside it.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct BitableauRow {
    #[serde(rename = "P")]
    pub p: Vec<usize>,
    #[serde(rename = "Q")]
    pub q: Vec<usize>,
    #[serde(rename = "sign")]
    pub side: Side,
}

impl BitableauRow {
    pub fn from_value(v: &FixedPointIndex, beta: &FixedPointIndex, side: Side) -> Self {
        Self {
            p: v.entries()
                .iter()
                .copied()
                .filter(|j| !beta.contains(*j))
                .collect(),
            q: beta
                .entries()
                .iter()
                .copied()
                .filter(|j| !v.contains(*j))
                .collect(),
            side,
        }
    }

    pub fn len(&self) -> usize {
        self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.p.is_empty()
    }

    /// `P_i - Q_i = (beta \ Q_i) u P_i`.
    pub fn value(&self, beta: &FixedPointIndex) -> Result<FixedPointIndex> {
        if !self.p.windows(2).all(|w| w[0] < w[1]) || !self.q.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidBound(format!("row {self} is not increasing")));
        }
        bound_value(&self.p, &self.q, beta)
    }
}

impl fmt::Display for BitableauRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        let s = match self.side {
            Side::Neg => "-",
            Side::Pos => "+",
        };
        write!(f, "{s}[{}|{}]", join(&self.p), join(&self.q))
    }
}

/// Rows from top to bottom: the negative block, then the positive block.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct NotchedBitableau {
    pub rows: Vec<BitableauRow>,
}

impl fmt::Display for NotchedBitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.rows.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl NotchedBitableau {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Total number of boxes in `P`.
    pub fn degree(&self) -> usize {
        self.rows.iter().map(BitableauRow::len).sum()
    }

    pub fn negative_rows(&self) -> impl Iterator<Item = &BitableauRow> {
        self.rows.iter().filter(|r| r.side == Side::Neg)
    }

    pub fn positive_rows(&self) -> impl Iterator<Item = &BitableauRow> {
        self.rows.iter().filter(|r| r.side == Side::Pos)
    }

    pub fn values(&self, beta: &FixedPointIndex) -> Result<Vec<FixedPointIndex>> {
        self.rows.iter().map(|r| r.value(beta)).collect()
    }

    /// Row values with `beta` inserted between the two blocks.
    pub fn delta(&self, beta: &FixedPointIndex) -> Result<Vec<FixedPointIndex>> {
        let mut out: Vec<_> = self
            .negative_rows()
            .map(|r| r.value(beta))
            .collect::<Result<_>>()?;
        out.push(beta.clone());
        for r in self.positive_rows() {
            out.push(r.value(beta)?);
        }
        Ok(out)
    }

    fn is_well_formed(&self, beta: &FixedPointIndex) -> bool {
        let n = self.negative_rows().count();
        self.rows[..n].iter().all(|r| r.side == Side::Neg)
            && self
                .rows
                .iter()
                .all(|r| !r.is_empty() && r.value(beta).is_ok())
    }

    /// Row values increase in Bruhat order, negative ones below `beta` and
    /// positive ones above.
    pub fn is_semistandard(&self, beta: &FixedPointIndex) -> bool {
        if !self.is_well_formed(beta) {
            return false;
        }
        let delta = self.delta(beta).expect("well formed");
        let n = self.negative_rows().count();
        delta.windows(2).all(|w| w[0].bruhat_le(&w[1]))
            && delta[..n].iter().all(|v| v != beta)
            && delta[n + 1..].iter().all(|v| v != beta)
    }

    /// The four conditions for a bitableau on `N(beta)*`.
    pub fn is_on_starred(&self, beta: &FixedPointIndex) -> bool {
        if !self.is_well_formed(beta) {
            return false;
        }
        let d = beta.d();
        let starred = self.rows.iter().all(|r| {
            let mut ps: Vec<usize> = r.p.iter().map(|j| star_unchecked(*j, d)).collect();
            ps.sort_unstable();
            ps == r.q
        });
        let values = self.values(beta).expect("well formed");
        let delta = self.delta(beta).expect("well formed");
        let odd = values.len() % 2 == 1;
        let parity = !odd || delta.windows(2).all(|w| w[0].bruhat_le(&w[1]));
        let paired = if odd { &delta } else { &values };
        let eps = paired
            .chunks(2)
            .all(|c| c.len() < 2 || c[0].epsilon_degree() == c[1].epsilon_degree());
        let even_boxes = self.degree().is_multiple_of(2);
        starred && parity && eps && even_boxes
    }

    /// `alpha <= ` the first row value and the last row value `<= gamma`,
    /// reading the rows with `beta` inserted between the blocks.
    pub fn is_bounded(
        &self,
        alpha: &FixedPointIndex,
        gamma: &FixedPointIndex,
        beta: &FixedPointIndex,
    ) -> bool {
        let Ok(delta) = self.delta(beta) else {
            return false;
        };
        alpha.bruhat_le(&delta[0]) && delta[delta.len() - 1].bruhat_le(gamma)
    }
}

/// Shape of a sequence of distinct values under row insertion.
fn rs_shape(seq: &[usize]) -> Vec<usize> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in seq {
        let mut x = x;
        let mut k = 0;
        loop {
            if k == rows.len() {
                rows.push(vec![x]);
                break;
            }
            match rows[k].iter().position(|y| *y > x) {
                Some(pos) => {
                    x = std::mem::replace(&mut rows[k][pos], x);
                    k += 1;
                }
                None => {
                    rows[k].push(x);
                    break;
                }
            }
        }
    }
    rows.iter().map(Vec::len).collect()
}

/// Grid layout shared by the forward and backward passes: row groups are the
/// entries outside `beta` by decreasing value, column groups the entries of
/// `beta` by increasing value.
struct Layout {
    n: usize,
    beta: FixedPointIndex,
}

impl Layout {
    fn new(beta: &FixedPointIndex) -> Self {
        Self {
            n: beta.n(),
            beta: beta.clone(),
        }
    }

    fn row_groups(&self) -> Vec<usize> {
        (1..=self.n)
            .rev()
            .filter(|r| !self.beta.contains(*r))
            .collect()
    }

    fn col_groups(&self) -> Vec<usize> {
        (1..=self.n).filter(|c| self.beta.contains(*c)).collect()
    }
}

/// Standardized positions `(sub_row, sub_col)` of a positive multiset. Copies
/// in one row, or in one column, form a decreasing run.
fn standardize(m: &GridMultiset, layout: &Layout) -> (Vec<(usize, usize)>, Vec<usize>, Vec<usize>) {
    let cells: Vec<(GridPoint, u32)> = m.iter().collect();
    let mut sub_rows: HashMap<GridPoint, Vec<usize>> = HashMap::new();
    let mut row_of = Vec::new();
    for r in layout.row_groups() {
        let mut in_row: Vec<_> = cells.iter().filter(|(p, _)| p.r == r).collect();
        in_row.sort_by(|a, b| b.0.c.cmp(&a.0.c));
        for (p, k) in in_row {
            let start = row_of.len();
            row_of.extend(std::iter::repeat_n(r, *k as usize));
            sub_rows.insert(*p, (start..row_of.len()).collect());
        }
    }
    let mut positions = Vec::new();
    let mut col_of = Vec::new();
    for c in layout.col_groups() {
        let mut in_col: Vec<_> = cells.iter().filter(|(p, _)| p.c == c).collect();
        in_col.sort_by_key(|a| a.0.r);
        for (p, k) in in_col {
            let base = col_of.len();
            col_of.extend(std::iter::repeat_n(c, *k as usize));
            for (t, sr) in sub_rows[p].iter().enumerate() {
                positions.push((*sr, base + (*k as usize - 1 - t)));
            }
        }
    }
    (positions, row_of, col_of)
}

/// Shapes at the corners `k = 0..=2d`.
fn corner_shapes(m: &GridMultiset, layout: &Layout) -> Vec<Vec<usize>> {
    let (mut positions, row_of, col_of) = standardize(m, layout);
    positions.sort_unstable();
    (0..=layout.n)
        .map(|k| {
            let seq: Vec<usize> = positions
                .iter()
                .filter(|(i, j)| row_of[*i] > k && col_of[*j] <= k)
                .map(|(_, j)| *j)
                .collect();
            rs_shape(&seq)
        })
        .collect()
}

fn part(shape: &[usize], j: usize) -> usize {
    shape.get(j).copied().unwrap_or(0)
}

/// Row values of a positive multiset, ascending.
fn positive_values(m: &GridMultiset, beta: &FixedPointIndex) -> Vec<FixedPointIndex> {
    let layout = Layout::new(beta);
    let shapes = corner_shapes(m, &layout);
    let p = shapes.iter().map(Vec::len).max().unwrap_or(0);
    let mut values: Vec<FixedPointIndex> = (0..p)
        .map(|j| {
            let entries: Vec<usize> = (1..=layout.n)
                .filter(|&t| {
                    let step = beta.contains(t) as isize + part(&shapes[t - 1], j) as isize
                        - part(&shapes[t], j) as isize;
                    step == 1
                })
                .collect();
            FixedPointIndex::new(beta.d(), entries).expect("one entry per unchanged column step")
        })
        .collect();
    values.reverse();
    values
}

fn not_in_image(msg: impl Into<String>) -> Error {
    Error::NotInImage(msg.into())
}

/// Backward local rule: `(lambda, mu, nu) -> (rho, has_point)`.
fn backward(lambda: &[usize], mu: &[usize], nu: &[usize]) -> Result<(Vec<usize>, bool)> {
    let size = |s: &[usize]| s.iter().sum::<usize>();
    let contained = |a: &[usize], b: &[usize]| (0..a.len()).all(|k| part(b, k) >= a[k]);
    if !contained(mu, lambda) || !contained(nu, lambda) {
        return Err(not_in_image("inconsistent growth"));
    }
    let (l, a, b) = (size(lambda), size(mu), size(nu));
    if l - a > 1 || l - b > 1 {
        return Err(not_in_image("growth step larger than one box"));
    }
    if mu != nu {
        let len = mu.len().min(nu.len());
        let rho: Vec<usize> = (0..len)
            .map(|k| mu[k].min(nu[k]))
            .filter(|x| *x > 0)
            .collect();
        return Ok((rho, false));
    }
    if mu == lambda {
        return Ok((mu.to_vec(), false));
    }
    let row = (0..lambda.len())
        .find(|k| part(lambda, *k) != part(mu, *k))
        .expect("differs");
    if row == 0 {
        return Ok((mu.to_vec(), true));
    }
    let mut rho = mu.to_vec();
    let k = row - 1;
    if part(&rho, k) == 0 || part(&rho, k) == part(&rho, k + 1) {
        return Err(not_in_image("no removable box above the new one"));
    }
    rho[k] -= 1;
    while rho.last() == Some(&0) {
        rho.pop();
    }
    Ok((rho, false))
}

/// Inverse of [`positive_values`]; the result is checked by running forward.
fn positive_inverse(values: &[FixedPointIndex], beta: &FixedPointIndex) -> Result<GridMultiset> {
    let layout = Layout::new(beta);
    let n = layout.n;
    if values.is_empty() {
        return Ok(GridMultiset::new());
    }
    // u[j][t] is the length of shape row j at corner t; row j = 0 is the last value
    let rows: Vec<&FixedPointIndex> = values.iter().rev().collect();
    let mut u = vec![vec![0usize; n + 1]; rows.len()];
    for (j, w) in rows.iter().enumerate() {
        if w.d() != beta.d() || *w == beta {
            return Err(not_in_image(format!("row value {w} is empty")));
        }
        for t in 1..=n {
            let prev = u[j][t - 1];
            u[j][t] = match (beta.contains(t), w.contains(t)) {
                (true, true) => prev,
                (true, false) => prev + 1,
                (false, false) => prev,
                (false, true) if prev > 0 => prev - 1,
                (false, true) => {
                    return Err(not_in_image(format!(
                        "row value {w} removes from an empty row"
                    )))
                }
            };
        }
    }
    let shapes: Vec<Vec<usize>> = (0..=n)
        .map(|t| {
            let mut s: Vec<usize> = u.iter().map(|row| row[t]).collect();
            while s.last() == Some(&0) {
                s.pop();
            }
            s
        })
        .collect();
    for s in &shapes {
        if !s.windows(2).all(|w| w[0] >= w[1]) {
            return Err(not_in_image("corner shape is not a partition"));
        }
    }

    let total_rows: usize = (1..=n)
        .filter(|t| !beta.contains(*t))
        .map(|t| shapes[t - 1].iter().sum::<usize>() - shapes[t].iter().sum::<usize>())
        .sum();
    let mut boundary: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let (mut big_r, mut big_c) = (total_rows, 0usize);
    let mut shape: Vec<usize> = Vec::new();
    boundary.insert((big_r, big_c), shape.clone());
    // sub-row ranges per row group (counted from the top) and sub-column
    // ranges per column group
    let mut row_group_of = vec![0usize; total_rows];
    let mut col_group_of: Vec<usize> = Vec::new();
    let mut path: Vec<(usize, usize)> = vec![(big_r, big_c)];
    for t in 1..=n {
        let (before, after) = (&shapes[t - 1], &shapes[t]);
        if beta.contains(t) {
            let boxes: Vec<usize> = (0..after.len())
                .filter(|j| part(after, *j) > part(before, *j))
                .collect();
            for j in boxes {
                if shape.len() == j {
                    shape.push(0);
                }
                shape[j] += 1;
                big_c += 1;
                col_group_of.push(t);
                boundary.insert((big_r, big_c), shape.clone());
                path.push((big_r, big_c));
            }
        } else {
            let mut boxes: Vec<usize> = (0..before.len())
                .filter(|j| part(before, *j) > part(after, *j))
                .collect();
            boxes.reverse();
            for j in boxes {
                shape[j] -= 1;
                while shape.last() == Some(&0) {
                    shape.pop();
                }
                big_r -= 1;
                row_group_of[big_r] = t;
                boundary.insert((big_r, big_c), shape.clone());
                path.push((big_r, big_c));
            }
        }
    }
    let total_cols = big_c;

    // rmax[j]: number of rows of the region in column j
    let mut rmax = vec![0usize; total_cols];
    for &(r, c) in &path {
        if c > 0 && rmax[c - 1] == 0 {
            rmax[c - 1] = r;
        }
    }
    let mut grid = boundary;
    let mut points = Vec::new();
    for i in (0..total_rows).rev() {
        for j in (0..total_cols).rev() {
            if i >= rmax[j] {
                continue;
            }
            let get = |g: &HashMap<(usize, usize), Vec<usize>>, key| {
                g.get(&key)
                    .cloned()
                    .ok_or_else(|| not_in_image("growth corner missing"))
            };
            let lambda = get(&grid, (i + 1, j + 1))?;
            let mu = get(&grid, (i + 1, j))?;
            let nu = get(&grid, (i, j + 1))?;
            let (rho, point) = backward(&lambda, &mu, &nu)?;
            if point {
                points.push((i, j));
            }
            grid.insert((i, j), rho);
        }
    }
    if grid
        .iter()
        .any(|((i, j), s)| (*i == 0 || *j == 0) && !s.is_empty())
    {
        return Err(not_in_image("growth does not vanish on the axes"));
    }
    let m = GridMultiset::from_counts(
        points
            .into_iter()
            .map(|(i, j)| (GridPoint::new(row_group_of[i], col_group_of[j]), 1)),
    );
    if positive_values(&m, beta) != values {
        return Err(not_in_image("rows are not produced by any multiset"));
    }
    Ok(m)
}

fn star_point(p: GridPoint, d: usize) -> GridPoint {
    GridPoint::new(star_unchecked(p.r, d), star_unchecked(p.c, d))
}

fn negative_values(m: &GridMultiset, beta: &FixedPointIndex) -> Vec<FixedPointIndex> {
    let d = beta.d();
    let moved = GridMultiset::from_counts(m.iter().map(|(p, k)| (star_point(p, d), k)));
    let mut values: Vec<_> = positive_values(&moved, &beta.star())
        .iter()
        .map(FixedPointIndex::star)
        .collect();
    values.reverse();
    values
}

fn negative_inverse(values: &[FixedPointIndex], beta: &FixedPointIndex) -> Result<GridMultiset> {
    let d = beta.d();
    let moved: Vec<FixedPointIndex> = values.iter().rev().map(FixedPointIndex::star).collect();
    let m = positive_inverse(&moved, &beta.star())?;
    Ok(GridMultiset::from_counts(
        m.iter().map(|(p, k)| (star_point(p, d), k)),
    ))
}

/// The bounded RSK image of `m`: the negative part's rows above the
/// positive part's rows.
pub fn brsk(m: &GridMultiset, grid: &BetaGrid) -> Result<NotchedBitableau> {
    m.check_in(grid)?;
    let beta = grid.beta();
    let mut rows: Vec<BitableauRow> = negative_values(&m.negative_part(), beta)
        .iter()
        .map(|v| BitableauRow::from_value(v, beta, Side::Neg))
        .collect();
    rows.extend(
        positive_values(&m.positive_part(), beta)
            .iter()
            .map(|v| BitableauRow::from_value(v, beta, Side::Pos)),
    );
    Ok(NotchedBitableau { rows })
}

/// The unique multiset with `brsk(m) == t`, or `NotInImage`.
pub fn brsk_inverse(t: &NotchedBitableau, grid: &BetaGrid) -> Result<GridMultiset> {
    let beta = grid.beta();
    for r in &t.rows {
        let v = r.value(beta)?;
        let side_ok = match r.side {
            Side::Neg => v.bruhat_le(beta),
            Side::Pos => beta.bruhat_le(&v),
        };
        if !side_ok || r.is_empty() {
            return Err(not_in_image(format!("row {r} does not fit its block")));
        }
    }
    let n = t.negative_rows().count();
    if t.rows[..n].iter().any(|r| r.side != Side::Neg) {
        return Err(not_in_image("negative rows must come first"));
    }
    let neg: Vec<_> = t
        .negative_rows()
        .map(|r| r.value(beta))
        .collect::<Result<_>>()?;
    let pos: Vec<_> = t
        .positive_rows()
        .map(|r| r.value(beta))
        .collect::<Result<_>>()?;
    let m = negative_inverse(&neg, beta)?.union(&positive_inverse(&pos, beta)?);
    if brsk(&m, grid)? != *t {
        return Err(not_in_image(format!("{t}")));
    }
    Ok(m)
}

/// `(top, bot)`: the last and first row values of `brsk(C u C#)`.
pub fn top_bot(chain: &Chain, grid: &BetaGrid) -> Result<(FixedPointIndex, FixedPointIndex)> {
    if chain.is_empty() {
        return Err(Error::EmptyChain);
    }
    let m: GridMultiset = chain.points().iter().copied().collect();
    let t = brsk(&m.doubled(grid), grid)?;
    let values = t.values(grid.beta())?;
    Ok((values[values.len() - 1].clone(), values[0].clone()))
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

    fn grid(d: usize, e: &[usize]) -> BetaGrid {
        BetaGrid::new(fpi(d, e)).unwrap()
    }

    fn row(p: &[usize], q: &[usize], side: Side) -> BitableauRow {
        BitableauRow {
            p: p.to_vec(),
            q: q.to_vec(),
            side,
        }
    }

    #[test]
    fn rs_shapes() {
        assert_eq!(rs_shape(&[]), Vec::<usize>::new());
        assert_eq!(rs_shape(&[1, 2, 3]), vec![3]);
        assert_eq!(rs_shape(&[3, 2, 1]), vec![1, 1, 1]);
        assert_eq!(rs_shape(&[2, 1, 3]), vec![2, 1]);
        assert_eq!(rs_shape(&[1, 3, 2, 4]), vec![3, 1]);
    }

    #[test]
    fn single_row_example() {
        let g = grid(2, &[1, 3]);
        let m: GridMultiset = [gp(2, 1), gp(4, 3)].into_iter().collect();
        let t = brsk(&m, &g).unwrap();
        assert_eq!(t.rows, vec![row(&[2, 4], &[1, 3], Side::Pos)]);
        assert!(t.is_semistandard(g.beta()) && t.is_on_starred(g.beta()));
        assert_eq!(brsk_inverse(&t, &g).unwrap(), m);
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"rows":[{"P":[2,4],"Q":[1,3],"sign":"pos"}]}"#);
        assert_eq!(serde_json::from_str::<NotchedBitableau>(&json).unwrap(), t);
    }

    #[test]
    fn stacked_copies_are_semistandard() {
        let b = fpi(2, &[1, 3]);
        let r = row(&[2, 4], &[1, 3], Side::Pos);
        let t = NotchedBitableau {
            rows: vec![r.clone(), r],
        };
        assert!(t.is_semistandard(&b));
        let bad = NotchedBitableau {
            rows: vec![row(&[2], &[3], Side::Pos)],
        };
        assert!(!bad.is_on_starred(&b));
    }

    #[test]
    fn empty_multiset() {
        let g = grid(2, &[1, 3]);
        let t = brsk(&GridMultiset::new(), &g).unwrap();
        assert!(t.is_empty());
        assert!(brsk_inverse(&t, &g).unwrap().is_empty());
    }

    #[test]
    fn top_bot_examples() {
        let g = grid(2, &[1, 3]);
        let (top, _) = top_bot(&Chain::new(vec![gp(4, 1)]).unwrap(), &g).unwrap();
        assert_eq!(top, fpi(2, &[3, 4]));
        let (_, bot) = top_bot(&Chain::new(vec![gp(2, 3)]).unwrap(), &g).unwrap();
        assert_eq!(bot, fpi(2, &[1, 2]));
        assert!(top_bot(&Chain::default(), &g).is_err());
        let t = brsk(&GridMultiset::from_counts([(gp(4, 1), 2)]), &g).unwrap();
        assert_eq!(t.rows, vec![row(&[4], &[1], Side::Pos); 2]);
    }

    #[test]
    fn chain_gives_one_row() {
        // a single chain is a single increasing sequence
        let g = grid(3, &[1, 2, 3]);
        let m: GridMultiset = [gp(6, 1), gp(5, 2), gp(4, 3)].into_iter().collect();
        let t = brsk(&m, &g).unwrap();
        assert_eq!(t.rows, vec![row(&[4, 5, 6], &[1, 2, 3], Side::Pos)]);
    }

    #[test]
    fn outside_image_is_reported() {
        let g = grid(2, &[1, 3]);
        let t = NotchedBitableau {
            rows: vec![row(&[4], &[1], Side::Pos), row(&[2], &[1], Side::Pos)],
        };
        assert!(matches!(brsk_inverse(&t, &g), Err(Error::NotInImage(_))));
        let t = NotchedBitableau {
            rows: vec![row(&[2], &[1], Side::Neg)],
        };
        assert!(brsk_inverse(&t, &g).is_err());
    }

    fn arb_multiset() -> impl Strategy<Value = (BetaGrid, GridMultiset)> {
        (1usize..=3)
            .prop_flat_map(|d| {
                let betas = enumerate_isotropic(d);
                (0..betas.len(), Just(betas))
            })
            .prop_flat_map(|(i, betas)| {
                let g = BetaGrid::new(betas[i].clone()).unwrap();
                let n = g.points().len();
                (Just(g), proptest::collection::vec(0u32..3, n))
            })
            .prop_map(|(g, mults)| {
                let m = GridMultiset::from_counts(g.points().into_iter().zip(mults));
                (g, m)
            })
    }

    proptest! {
        #[test]
        fn round_trip_and_degree((g, m) in arb_multiset()) {
            let t = brsk(&m, &g).unwrap();
            prop_assert_eq!(t.degree() as u32, m.degree());
            prop_assert!(t.is_semistandard(g.beta()) || t.is_empty(), "{}", t);
            prop_assert_eq!(brsk_inverse(&t, &g).unwrap(), m.clone());
        }

        #[test]
        fn stacking_law((g, m) in arb_multiset()) {
            let whole = brsk(&m, &g).unwrap();
            let mut rows = brsk(&m.negative_part(), &g).unwrap().rows;
            rows.extend(brsk(&m.positive_part(), &g).unwrap().rows);
            prop_assert_eq!(whole.rows, rows);
        }
    }
}
