//! The affine patch at `e_beta`, its minors, and the tangent-cone ideal with
//! its candidate Groebner set of good pairs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{bound_value, BetaGrid, GridPoint};
use crate::index::{admissible_pairs, star_unchecked, AdmissiblePair, FixedPointIndex};
use crate::poly::{Field, Monomial, Polynomial, VariableSet};

/// How a strictly lower entry `(r, c)` is signed against `X_(c*, r*)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SignRule {
    /// Minus iff `r > d, c* < d` or `r < d, c* > d`.
    Strict,
    /// Minus iff `r > d, c* <= d` or `r <= d, c* > d`.
    Inclusive,
}

impl SignRule {
    pub fn is_negative(self, r: usize, c_star: usize, d: usize) -> bool {
        match self {
            Self::Strict => (r > d && c_star < d) || (r < d && c_star > d),
            Self::Inclusive => (r > d && c_star <= d) || (r <= d && c_star > d),
        }
    }
}

/// Skew form with `<e_i, e_(i*)> = eps_i` and `eps_(i*) = -eps_i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SymplecticForm {
    /// `eps_i = +1` for `i <= d`.
    Standard,
    /// `eps_i = (-1)^(i+1)`.
    Alternating,
}

impl SymplecticForm {
    pub fn eps(self, i: usize, d: usize) -> i64 {
        match self {
            Self::Standard if i <= d => 1,
            Self::Standard => -1,
            Self::Alternating if i % 2 == 1 => 1,
            Self::Alternating => -1,
        }
    }
}

/// The sign rule and form used to build a patch.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PatchConvention {
    pub rule: SignRule,
    pub form: SymplecticForm,
}

impl PatchConvention {
    /// Tried in order; the first one giving isotropic columns is used.
    pub const CANDIDATES: [PatchConvention; 3] = [
        PatchConvention {
            rule: SignRule::Strict,
            form: SymplecticForm::Standard,
        },
        PatchConvention {
            rule: SignRule::Strict,
            form: SymplecticForm::Alternating,
        },
        PatchConvention {
            rule: SignRule::Inclusive,
            form: SymplecticForm::Standard,
        },
    ];

    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for PatchConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rule = match self.rule {
            SignRule::Strict => "strict",
            SignRule::Inclusive => "inclusive",
        };
        let form = match self.form {
            SymplecticForm::Standard => "standard",
            SymplecticForm::Alternating => "alternating",
        };
        write!(f, "{rule}-sign/{form}-form")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Entry {
    Zero,
    One,
    Var { index: usize, negative: bool },
}

/// `2d x d` matrix with rows `1..=2d` and columns the entries of `beta`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatchMatrix {
    grid: BetaGrid,
    vars: VariableSet,
    convention: PatchConvention,
    entries: Vec<Vec<Entry>>,
}

impl PatchMatrix {
    /// Builds the patch with the first convention whose columns are isotropic.
    pub fn build(beta: &FixedPointIndex) -> Result<Self> {
        let mut last = None;
        for conv in PatchConvention::CANDIDATES {
            let m = Self::with_convention(beta, conv)?;
            if m.is_isotropic() {
                return Ok(m);
            }
            last = Some(conv);
        }
        Err(Error::NotIsotropic(format!(
            "no sign convention makes the patch at {beta} isotropic (last tried {})",
            last.expect("candidates nonempty")
        )))
    }

    pub fn with_convention(beta: &FixedPointIndex, convention: PatchConvention) -> Result<Self> {
        let grid = BetaGrid::new(beta.clone())?;
        let vars = VariableSet::new(grid.upper_points());
        let d = grid.d();
        let cols = grid.cols();
        let mut entries = vec![vec![Entry::Zero; d]; 2 * d];
        for r in 1..=2 * d {
            for (k, &c) in cols.iter().enumerate() {
                entries[r - 1][k] = if beta.contains(r) {
                    if r == c {
                        Entry::One
                    } else {
                        Entry::Zero
                    }
                } else {
                    let p = GridPoint::new(r, c);
                    if grid.is_upper(p) {
                        Entry::Var {
                            index: vars.index_of(p).unwrap(),
                            negative: false,
                        }
                    } else {
                        let c_star = star_unchecked(c, d);
                        Entry::Var {
                            index: vars.index_of(grid.sharp_point(p)).unwrap(),
                            negative: convention.rule.is_negative(r, c_star, d),
                        }
                    }
                };
            }
        }
        Ok(Self {
            grid,
            vars,
            convention,
            entries,
        })
    }

    pub fn grid(&self) -> &BetaGrid {
        &self.grid
    }

    pub fn beta(&self) -> &FixedPointIndex {
        self.grid.beta()
    }

    pub fn variables(&self) -> &VariableSet {
        &self.vars
    }

    pub fn convention(&self) -> PatchConvention {
        self.convention
    }

    /// Entry at row `r` (1-based) and column `c` (an entry of `beta`).
    pub fn entry(&self, r: usize, c: usize) -> Entry {
        let k = self
            .beta()
            .entries()
            .iter()
            .position(|x| *x == c)
            .expect("column in beta");
        self.entries[r - 1][k]
    }

    pub fn entry_poly<F: Field>(&self, r: usize, c: usize, ctx: F::Ctx) -> Polynomial<F> {
        let n = self.vars.len();
        match self.entry(r, c) {
            Entry::Zero => Polynomial::zero(n, ctx),
            Entry::One => Polynomial::one(n, ctx),
            Entry::Var { index, negative } => {
                let x = Polynomial::variable(n, index, ctx);
                if negative {
                    x.neg()
                } else {
                    x
                }
            }
        }
    }

    /// `<col_a, col_b>` as a polynomial over the integers, embedded in `F`.
    pub fn pairing<F: Field>(
        &self,
        a: usize,
        b: usize,
        form: SymplecticForm,
        ctx: F::Ctx,
    ) -> Polynomial<F> {
        let d = self.grid.d();
        let mut acc = Polynomial::zero(self.vars.len(), ctx);
        for i in 1..=2 * d {
            let term = self.entry_poly::<F>(i, a, ctx).mul(&self.entry_poly::<F>(
                star_unchecked(i, d),
                b,
                ctx,
            ));
            acc = acc.add(&term.scale(&F::from_i64(form.eps(i, d), ctx)));
        }
        acc
    }

    /// Every pair of columns pairs to zero under the convention's form.
    pub fn is_isotropic(&self) -> bool {
        let cols = self.grid.cols();
        cols.iter().all(|&a| {
            cols.iter().all(|&b| {
                self.pairing::<num_rational::BigRational>(a, b, self.convention.form, ())
                    .is_zero()
            })
        })
    }

    /// Determinant of rows `theta \ beta` against columns `beta \ theta`.
    pub fn minor<F: Field>(&self, theta: &FixedPointIndex, ctx: F::Ctx) -> Polynomial<F> {
        let beta = self.beta();
        let rows: Vec<usize> = theta
            .entries()
            .iter()
            .copied()
            .filter(|j| !beta.contains(*j))
            .collect();
        let cols: Vec<usize> = beta
            .entries()
            .iter()
            .copied()
            .filter(|j| !theta.contains(*j))
            .collect();
        let m: Vec<Vec<Polynomial<F>>> = rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| self.entry_poly::<F>(r, c, ctx))
                    .collect()
            })
            .collect();
        determinant(&m, self.vars.len(), ctx)
    }

    /// `f_(w, beta)`: the minor of the orbit representative, made monic.
    pub fn pair_polynomial<F: Field>(&self, pair: &AdmissiblePair, ctx: F::Ctx) -> Polynomial<F> {
        self.minor::<F>(pair.representative(), ctx).monic()
    }

    /// Substitution sending `X_p` to 1 and every other variable to 0.
    pub fn unit_point<F: Field>(&self, p: GridPoint, ctx: F::Ctx) -> Vec<F> {
        (0..self.vars.len())
            .map(|i| F::from_i64((self.vars.point(i) == p) as i64, ctx))
            .collect()
    }
}

fn determinant<F: Field>(m: &[Vec<Polynomial<F>>], nvars: usize, ctx: F::Ctx) -> Polynomial<F> {
    match m.len() {
        0 => Polynomial::one(nvars, ctx),
        1 => m[0][0].clone(),
        n => {
            let mut acc = Polynomial::zero(nvars, ctx);
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Polynomial<F>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&determinant(&sub, nvars, ctx));
                acc = if j % 2 == 0 {
                    acc.add(&term)
                } else {
                    acc.sub(&term)
                };
            }
            acc
        }
    }
}

/// Checks that `alpha <= beta <= gamma` are isotropic and of one rank.
pub fn validate_triple(
    alpha: &FixedPointIndex,
    beta: &FixedPointIndex,
    gamma: &FixedPointIndex,
) -> Result<()> {
    let bad = || Error::InvalidTriple {
        alpha: alpha.to_string(),
        beta: beta.to_string(),
        gamma: gamma.to_string(),
    };
    if alpha.d() != beta.d() || beta.d() != gamma.d() {
        return Err(bad());
    }
    if ![alpha, beta, gamma].iter().all(|v| v.is_isotropic()) {
        return Err(bad());
    }
    if !alpha.bruhat_le(beta) || !beta.bruhat_le(gamma) {
        return Err(bad());
    }
    Ok(())
}

/// An admissible pair together with its polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairPolynomial<F: Field> {
    pub pair: AdmissiblePair,
    pub poly: Polynomial<F>,
}

/// The tangent-cone ideal of `Y_alpha^gamma` at `e_beta`.
#[derive(Clone, Debug)]
pub struct ConeIdeal<F: Field> {
    alpha: FixedPointIndex,
    gamma: FixedPointIndex,
    patch: PatchMatrix,
    generators: Vec<PairPolynomial<F>>,
}

impl<F: Field> ConeIdeal<F> {
    pub fn new(
        alpha: &FixedPointIndex,
        beta: &FixedPointIndex,
        gamma: &FixedPointIndex,
        ctx: F::Ctx,
    ) -> Result<Self> {
        validate_triple(alpha, beta, gamma)?;
        let patch = PatchMatrix::build(beta)?;
        let generators = admissible_pairs(beta.d())
            .into_iter()
            .filter(|w| !alpha.bruhat_le(w.bot()) || !w.top().bruhat_le(gamma))
            .map(|pair| {
                let poly = patch.pair_polynomial::<F>(&pair, ctx);
                PairPolynomial { pair, poly }
            })
            .collect();
        Ok(Self {
            alpha: alpha.clone(),
            gamma: gamma.clone(),
            patch,
            generators,
        })
    }

    pub fn alpha(&self) -> &FixedPointIndex {
        &self.alpha
    }

    pub fn beta(&self) -> &FixedPointIndex {
        self.patch.beta()
    }

    pub fn gamma(&self) -> &FixedPointIndex {
        &self.gamma
    }

    pub fn patch(&self) -> &PatchMatrix {
        &self.patch
    }

    pub fn variables(&self) -> &VariableSet {
        self.patch.variables()
    }

    pub fn generators(&self) -> &[PairPolynomial<F>] {
        &self.generators
    }

    pub fn generator_polys(&self) -> Vec<Polynomial<F>> {
        self.generators.iter().map(|g| g.poly.clone()).collect()
    }

    /// Generators whose initial monomial is a squarefree extended chain,
    /// entirely positive and not below `gamma`, or entirely negative and not
    /// above `alpha`.
    pub fn good(&self) -> Vec<PairPolynomial<F>> {
        self.generators
            .iter()
            .filter(|g| match g.poly.initial_monomial() {
                Ok(m) => self.is_good_monomial(m),
                Err(_) => false,
            })
            .cloned()
            .collect()
    }

    pub fn good_polys(&self) -> Vec<Polynomial<F>> {
        self.good().into_iter().map(|g| g.poly).collect()
    }

    fn is_good_monomial(&self, m: &Monomial) -> bool {
        if !m.is_squarefree() || m.degree() == 0 {
            return false;
        }
        let mut pts: Vec<GridPoint> = m
            .support()
            .into_iter()
            .map(|i| self.variables().point(i))
            .collect();
        pts.sort_by(|a, b| b.r.cmp(&a.r));
        if !crate::grid::is_extended_chain(&pts) {
            return false;
        }
        let positive = pts.iter().all(GridPoint::is_positive);
        let negative = pts.iter().all(|p| !p.is_positive());
        if !positive && !negative {
            return false;
        }
        let rows: Vec<usize> = pts.iter().map(|p| p.r).collect();
        let cols: Vec<usize> = pts.iter().map(|p| p.c).collect();
        let Ok(value) = bound_value(&rows, &cols, self.beta()) else {
            return false;
        };
        if positive {
            !value.bruhat_le(&self.gamma)
        } else {
            !self.alpha.bruhat_le(&value)
        }
    }
}

/// Textual summary of an ideal for the command line.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct IdealSummary {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub generators: Vec<String>,
    pub good: Vec<String>,
    pub form: String,
}

impl<F: Field> ConeIdeal<F> {
    pub fn summary(&self) -> IdealSummary {
        let vars = self.variables();
        IdealSummary {
            alpha: self.alpha.to_string(),
            beta: self.beta().to_string(),
            gamma: self.gamma.to_string(),
            generators: self
                .generators
                .iter()
                .map(|g| g.poly.format(vars))
                .collect(),
            good: self.good().iter().map(|g| g.poly.format(vars)).collect(),
            form: self.patch.convention().label(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::index::{enumerate_ambient, enumerate_isotropic};
    use num_rational::BigRational;

    type Q = BigRational;

    fn fpi(d: usize, e: &[usize]) -> FixedPointIndex {
        FixedPointIndex::new(d, e.to_vec()).unwrap()
    }

    fn fmt(p: &PatchMatrix, f: &Polynomial<Q>) -> String {
        f.format(p.variables())
    }

    #[test]
    fn patch_at_13() {
        let beta = fpi(2, &[1, 3]);
        let strict = PatchMatrix::with_convention(&beta, PatchConvention::CANDIDATES[0]).unwrap();
        let x = |r, c| fmt(&strict, &strict.entry_poly::<Q>(r, c, ()));
        assert_eq!(
            [x(1, 1), x(1, 3), x(3, 1), x(3, 3)],
            ["1", "0", "0", "1"].map(String::from)
        );
        assert_eq!(x(2, 1), "1*X(2,1)");
        assert_eq!(x(2, 3), "1*X(2,3)");
        assert_eq!(x(4, 1), "1*X(4,1)");
        assert_eq!(x(4, 3), "1*X(2,1)");
        let p = PatchMatrix::build(&beta).unwrap();
        assert_eq!(p.convention().form, SymplecticForm::Alternating);
        assert_eq!(p.convention().rule, SignRule::Strict);
    }

    #[test]
    fn minors_at_13() {
        let beta = fpi(2, &[1, 3]);
        let p = PatchMatrix::build(&beta).unwrap();
        assert_eq!(
            fmt(&p, &p.minor(&fpi(2, &[2, 4]), ())),
            "-1*X(4,1)*X(2,3) + 1*X(2,1)^2"
        );
        assert_eq!(fmt(&p, &p.minor(&fpi(2, &[1, 2]), ())), "1*X(2,3)");
        assert_eq!(fmt(&p, &p.minor(&beta, ())), "1");
    }

    #[test]
    fn variable_count_and_isotropy() {
        for d in 1..=4 {
            for beta in enumerate_isotropic(d) {
                let p = PatchMatrix::build(&beta).unwrap();
                assert_eq!(p.variables().len(), d * (d + 1) / 2);
                assert!(p.is_isotropic(), "{beta}");
                let mut seen = std::collections::BTreeSet::new();
                for r in 1..=2 * d {
                    for &c in beta.entries() {
                        if let Entry::Var { index, .. } = p.entry(r, c) {
                            seen.insert(index);
                        }
                    }
                }
                assert_eq!(seen.len(), d * (d + 1) / 2);
            }
        }
    }

    #[test]
    fn patch_at_12_has_three_variables() {
        let p = PatchMatrix::build(&fpi(2, &[1, 2])).unwrap();
        let names: Vec<_> = p
            .variables()
            .points()
            .iter()
            .map(|q| q.to_string())
            .collect();
        assert_eq!(names, ["(4,1)", "(3,1)", "(3,2)"]);
    }

    #[test]
    fn minors_of_sharp_partners_agree_up_to_sign() {
        for d in 1..=3 {
            for beta in enumerate_isotropic(d) {
                let p = PatchMatrix::build(&beta).unwrap();
                for theta in enumerate_ambient(d) {
                    let f = p.minor::<Q>(&theta, ());
                    let g = p.minor::<Q>(&theta.sharp(), ());
                    assert!(f == g || f == g.neg(), "{beta} {theta}");
                    assert_eq!(
                        f.homogeneous_degree().unwrap_or(0) as usize,
                        theta.difference_len(&beta)
                    );
                }
            }
        }
    }

    #[test]
    fn generators_at_13() {
        let b = fpi(2, &[1, 3]);
        let ideal = ConeIdeal::<Q>::new(&b, &b, &b, ()).unwrap();
        let s = ideal.summary();
        let pairs: Vec<_> = ideal
            .generators()
            .iter()
            .map(|g| g.pair.to_string())
            .collect();
        assert_eq!(
            pairs,
            [
                "({1,2},{1,2})",
                "({2,4},{1,3})",
                "({2,4},{2,4})",
                "({3,4},{3,4})"
            ]
        );
        assert_eq!(
            s.generators,
            [
                "1*X(2,3)",
                "1*X(2,1)",
                "1*X(4,1)*X(2,3) - 1*X(2,1)^2",
                "1*X(4,1)"
            ]
        );
        assert_eq!(s.good, ["1*X(2,3)", "1*X(2,1)", "1*X(4,1)"]);
        let free = ConeIdeal::<Q>::new(&fpi(2, &[1, 2]), &b, &fpi(2, &[3, 4]), ()).unwrap();
        assert!(free.generators().is_empty() && free.good().is_empty());
        assert!(ConeIdeal::<Q>::new(&fpi(2, &[3, 4]), &b, &b, ()).is_err());
    }

    #[test]
    fn generators_vanish_on_curves_inside_the_richardson() {
        // the T-stable curve through e_beta in direction X_p ends at the value
        // of the chain {p, p#}; it lies in Y when both ends lie in [alpha, gamma]
        for d in 1..=3 {
            let iso = enumerate_isotropic(d);
            for beta in &iso {
                let p = PatchMatrix::build(beta).unwrap();
                let grid = p.grid();
                for a in iso.iter().filter(|a| a.bruhat_le(beta)) {
                    for g in iso.iter().filter(|g| beta.bruhat_le(g)) {
                        let ideal = ConeIdeal::<Q>::new(a, beta, g, ()).unwrap();
                        for pt in grid.upper_points() {
                            let sp = grid.sharp_point(pt);
                            let (rows, cols) = if sp == pt {
                                (vec![pt.r], vec![pt.c])
                            } else {
                                (vec![pt.r, sp.r], vec![pt.c, sp.c])
                            };
                            let end = bound_value(&rows, &cols, beta).unwrap();
                            if !(a.bruhat_le(&end) && end.bruhat_le(g)) {
                                continue;
                            }
                            let at = p.unit_point::<Q>(pt, ());
                            for gen in ideal.generators() {
                                assert!(
                                    gen.poly.evaluate(&at) == Q::from_i64(0, ()),
                                    "{a} {beta} {g} {pt}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_homogeneous_of_beta_degree() {
        for d in 1..=3 {
            for beta in enumerate_isotropic(d) {
                let p = PatchMatrix::build(&beta).unwrap();
                for w in admissible_pairs(d) {
                    let f = p.pair_polynomial::<Q>(&w, ());
                    assert_eq!(
                        f.homogeneous_degree(),
                        Some(w.beta_degree(&beta) as u32),
                        "{beta} {w}"
                    );
                }
            }
        }
    }
}
