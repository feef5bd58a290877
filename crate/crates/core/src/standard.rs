//! Standard monomials on `Y_alpha^gamma(beta)`, the enumerations on both
//! sides of the counting argument, and the doubling and halving injections.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::brsk::{BitableauRow, NotchedBitableau, Side};
use crate::error::{Error, Result};
use crate::grid::{multiset_bounded, BetaGrid, GridMultiset};
use crate::index::{
    admissible_pairs, enumerate_isotropic, find_pair, AdmissiblePair, FixedPointIndex,
};
use crate::patch::{ConeIdeal, PatchMatrix};
use crate::poly::{monomials_outside, rank, reduce, Field, Monomial, Polynomial};

/// A nondecreasing sequence of admissible pairs.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StandardMonomial {
    pairs: Vec<AdmissiblePair>,
    degree: usize,
}

impl StandardMonomial {
    pub fn new(pairs: Vec<AdmissiblePair>, beta: &FixedPointIndex) -> Self {
        let degree = pairs.iter().map(|w| w.beta_degree(beta)).sum();
        Self { pairs, degree }
    }

    pub fn empty() -> Self {
        Self {
            pairs: Vec::new(),
            degree: 0,
        }
    }

    pub fn pairs(&self) -> &[AdmissiblePair] {
        &self.pairs
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `f_(w_1) * ... * f_(w_r)`.
    pub fn evaluate<F: Field>(&self, patch: &PatchMatrix, ctx: F::Ctx) -> Polynomial<F> {
        self.pairs
            .iter()
            .fold(Polynomial::one(patch.variables().len(), ctx), |acc, w| {
                acc.mul(&patch.pair_polynomial::<F>(w, ctx))
            })
    }
}

impl Serialize for StandardMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct PairJson {
            top: String,
            bot: String,
        }
        let pairs: Vec<PairJson> = self
            .pairs
            .iter()
            .map(|w| PairJson {
                top: w.top().to_string(),
                bot: w.bot().to_string(),
            })
            .collect();
        let mut st = s.serialize_struct("StandardMonomial", 2)?;
        st.serialize_field("pairs", &pairs)?;
        st.serialize_field("degree", &self.degree)?;
        st.end()
    }
}

/// A pair may occur in a standard monomial: it is not `(beta, beta)` and
/// does not straddle `beta`.
pub fn is_eligible(w: &AdmissiblePair, beta: &FixedPointIndex) -> bool {
    !(w.top() == beta && w.bot() == beta) && (w.top().bruhat_le(beta) || beta.bruhat_le(w.bot()))
}

pub fn is_standard_on_y(
    m: &StandardMonomial,
    alpha: &FixedPointIndex,
    beta: &FixedPointIndex,
    gamma: &FixedPointIndex,
) -> bool {
    let pairs = m.pairs();
    if pairs.is_empty() {
        return true;
    }
    pairs.windows(2).all(|w| w[0].precedes(&w[1]))
        && pairs.iter().all(|w| is_eligible(w, beta))
        && alpha.bruhat_le(pairs[0].bot())
        && pairs[pairs.len() - 1].top().bruhat_le(gamma)
}

/// Standard monomials on `Y` grouped by degree `0..=max_degree`.
pub fn enumerate_standard(
    alpha: &FixedPointIndex,
    beta: &FixedPointIndex,
    gamma: &FixedPointIndex,
    max_degree: usize,
) -> Vec<Vec<StandardMonomial>> {
    let pairs: Vec<AdmissiblePair> = admissible_pairs(beta.d())
        .into_iter()
        .filter(|w| is_eligible(w, beta) && w.top().bruhat_le(gamma))
        .collect();
    let degs: Vec<usize> = pairs.iter().map(|w| w.beta_degree(beta)).collect();
    let mut out = vec![Vec::new(); max_degree + 1];
    out[0].push(StandardMonomial::empty());

    struct Dfs<'a> {
        pairs: &'a [AdmissiblePair],
        degs: &'a [usize],
        beta: &'a FixedPointIndex,
        max: usize,
    }
    impl Dfs<'_> {
        fn go(&self, seq: &mut Vec<usize>, deg: usize, out: &mut [Vec<StandardMonomial>]) {
            let last = *seq.last().expect("nonempty");
            let mono = StandardMonomial::new(
                seq.iter().map(|i| self.pairs[*i].clone()).collect(),
                self.beta,
            );
            out[deg].push(mono);
            for k in 0..self.pairs.len() {
                if deg + self.degs[k] <= self.max && self.pairs[last].precedes(&self.pairs[k]) {
                    seq.push(k);
                    self.go(seq, deg + self.degs[k], out);
                    seq.pop();
                }
            }
        }
    }
    let dfs = Dfs {
        pairs: &pairs,
        degs: &degs,
        beta,
        max: max_degree,
    };
    for k in 0..pairs.len() {
        if alpha.bruhat_le(pairs[k].bot()) && degs[k] <= max_degree {
            dfs.go(&mut vec![k], degs[k], &mut out);
        }
    }
    out
}

/// Special multisets of degree `2m`, one per assignment of multiplicities
/// to the `#`-orbits of grid points.
pub fn special_multisets(grid: &BetaGrid, m: u32) -> Vec<GridMultiset> {
    let mut orbits: Vec<Vec<crate::grid::GridPoint>> = Vec::new();
    for p in grid.points() {
        let q = grid.sharp_point(p);
        if p < q {
            orbits.push(vec![p, q]);
        } else if p == q {
            orbits.push(vec![p, p]);
        }
    }
    let mut out = Vec::new();
    let mut mult = vec![0u32; orbits.len()];
    fn rec(
        i: usize,
        left: u32,
        orbits: &[Vec<crate::grid::GridPoint>],
        mult: &mut Vec<u32>,
        out: &mut Vec<GridMultiset>,
    ) {
        if i == orbits.len() {
            if left == 0 {
                let mut s = GridMultiset::new();
                for (o, k) in orbits.iter().zip(mult.iter()) {
                    for p in o {
                        s.insert(*p, *k);
                    }
                }
                out.push(s);
            }
            return;
        }
        for k in 0..=left {
            mult[i] = k;
            rec(i + 1, left - k, orbits, mult, out);
        }
        mult[i] = 0;
    }
    rec(0, m, &orbits, &mut mult, &mut out);
    out.sort();
    out
}

/// Semistandard bitableaux on `N(beta)*` with `boxes` boxes, built from row
/// values in `I(d)`.
pub fn starred_bitableaux(beta: &FixedPointIndex, boxes: usize) -> Vec<NotchedBitableau> {
    let iso = enumerate_isotropic(beta.d());
    let below: Vec<FixedPointIndex> = iso
        .iter()
        .filter(|v| v.bruhat_le(beta) && *v != beta)
        .cloned()
        .collect();
    let above: Vec<FixedPointIndex> = iso
        .iter()
        .filter(|v| beta.bruhat_le(v) && *v != beta)
        .cloned()
        .collect();

    // nondecreasing chains from `pool` with sizes summing to `budget`
    fn chains(
        pool: &[FixedPointIndex],
        beta: &FixedPointIndex,
        budget: usize,
        prefix: &mut Vec<FixedPointIndex>,
        out: &mut Vec<(usize, Vec<FixedPointIndex>)>,
    ) {
        let used: usize = prefix.iter().map(|v| v.difference_len(beta)).sum();
        out.push((used, prefix.clone()));
        for v in pool {
            let size = v.difference_len(beta);
            if used + size > budget || prefix.last().is_some_and(|l| !l.bruhat_le(v)) {
                continue;
            }
            prefix.push(v.clone());
            chains(pool, beta, budget, prefix, out);
            prefix.pop();
        }
    }
    let mut neg = Vec::new();
    chains(&below, beta, boxes, &mut Vec::new(), &mut neg);
    let mut pos = Vec::new();
    chains(&above, beta, boxes, &mut Vec::new(), &mut pos);

    let mut out = Vec::new();
    for (a, nrows) in &neg {
        for (b, prows) in &pos {
            if a + b != boxes {
                continue;
            }
            let rows = nrows
                .iter()
                .map(|v| BitableauRow::from_value(v, beta, Side::Neg))
                .chain(
                    prows
                        .iter()
                        .map(|v| BitableauRow::from_value(v, beta, Side::Pos)),
                )
                .collect();
            let t = NotchedBitableau { rows };
            if t.is_semistandard(beta) && t.is_on_starred(beta) {
                out.push(t);
            }
        }
    }
    out
}

/// `U -> U u U#` for a monomial outside the initial ideal of the good set.
pub fn doubling_injection<F: Field>(u: &Monomial, ideal: &ConeIdeal<F>) -> Result<GridMultiset> {
    let good = ideal.good_polys();
    if u.degree() == 0 {
        return Err(Error::Precondition(
            "the empty monomial has no image".into(),
        ));
    }
    if good
        .iter()
        .any(|g| g.initial_monomial().is_ok_and(|m| m.divides(u)))
    {
        return Err(Error::Precondition(format!(
            "{} lies in the initial ideal of the good set",
            ideal.variables().format_monomial(u)
        )));
    }
    let vars = ideal.variables();
    let grid = ideal.patch().grid();
    let m = GridMultiset::from_counts(vars.factors(u));
    Ok(m.doubled(grid))
}

/// Pairs consecutive row values into admissible pairs `(mu_2i, mu_2i-1)`.
/// `beta` is appended to an odd negative block and prepended to an odd
/// positive block.
pub fn halving_injection(t: &NotchedBitableau, beta: &FixedPointIndex) -> Result<StandardMonomial> {
    let neg: Vec<_> = t
        .negative_rows()
        .map(|r| r.value(beta))
        .collect::<Result<_>>()?;
    let pos: Vec<_> = t
        .positive_rows()
        .map(|r| r.value(beta))
        .collect::<Result<_>>()?;
    let mut mu = neg.clone();
    if neg.len() % 2 == 1 {
        mu.push(beta.clone());
    }
    if pos.len() % 2 == 1 {
        mu.push(beta.clone());
    }
    mu.extend(pos);
    let pairs = admissible_pairs(beta.d());
    let chosen = mu
        .chunks(2)
        .map(|c| {
            find_pair(&pairs, &c[1], &c[0])
                .cloned()
                .ok_or_else(|| Error::NotAdmissible {
                    top: c[1].to_string(),
                    bot: c[0].to_string(),
                })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(StandardMonomial::new(chosen, beta))
}

/// Degree-`m` standard monomials reduced modulo a Groebner basis: returns
/// `(rank of their normal forms, number of standard monomials, number of
/// monomials outside the initial ideal)`.
pub fn basis_check<F: Field>(
    ideal: &ConeIdeal<F>,
    gb: &[Polynomial<F>],
    standard: &[StandardMonomial],
    m: u32,
    ctx: F::Ctx,
) -> (usize, usize, usize) {
    let init: Vec<Monomial> = gb
        .iter()
        .filter_map(|g| g.initial_monomial().ok().cloned())
        .collect();
    let outside = monomials_outside(&init, ideal.variables().len(), m);
    let rows: Vec<Vec<F>> = standard
        .iter()
        .map(|s| {
            let nf = reduce(&s.evaluate::<F>(ideal.patch(), ctx), gb);
            outside
                .iter()
                .map(|x| nf.coefficient(x).cloned().unwrap_or_else(|| F::zero(ctx)))
                .collect()
        })
        .collect();
    (rank(&rows), standard.len(), outside.len())
}

/// Bounded special multisets of degree `2m`.
pub fn bounded_specials(
    grid: &BetaGrid,
    alpha: &FixedPointIndex,
    gamma: &FixedPointIndex,
    m: u32,
) -> Vec<GridMultiset> {
    special_multisets(grid, m)
        .into_iter()
        .filter(|s| {
            !s.is_empty() && multiset_bounded(s, alpha, gamma, grid).expect("points in grid")
        })
        .collect()
}

/// Bounded on-starred semistandard bitableaux with `2m` boxes.
pub fn bounded_bitableaux(
    alpha: &FixedPointIndex,
    beta: &FixedPointIndex,
    gamma: &FixedPointIndex,
    m: u32,
) -> Vec<NotchedBitableau> {
    starred_bitableaux(beta, 2 * m as usize)
        .into_iter()
        .filter(|t| !t.is_empty() && t.is_bounded(alpha, gamma, beta))
        .collect()
}
