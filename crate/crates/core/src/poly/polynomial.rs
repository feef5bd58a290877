//! Sparse polynomials over an exact field, and the variable ring `X_(r,c)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::grid::GridPoint;
use crate::poly::field::Field;
use crate::poly::monomial::Monomial;

/// The variables `X_(r,c)`, stored so that position 0 is the largest under
/// `X_(r,c) > X_(r',c')` iff `r > r'`, or `r = r'` and `c < c'`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct VariableSet {
    points: Vec<GridPoint>,
}

impl VariableSet {
    pub fn new(mut points: Vec<GridPoint>) -> Self {
        points.sort_by(|a, b| b.r.cmp(&a.r).then(a.c.cmp(&b.c)));
        points.dedup();
        Self { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[GridPoint] {
        &self.points
    }

    pub fn point(&self, index: usize) -> GridPoint {
        self.points[index]
    }

    pub fn index_of(&self, p: GridPoint) -> Option<usize> {
        self.points.iter().position(|q| *q == p)
    }

    pub fn monomial(&self, factors: &[(GridPoint, u32)]) -> Result<Monomial> {
        let mut exps = vec![0; self.len()];
        for (p, e) in factors {
            let i = self
                .index_of(*p)
                .ok_or_else(|| Error::Parse(format!("{p} is not a variable of this ring")))?;
            exps[i] += e;
        }
        Ok(Monomial::from_exponents(exps))
    }

    /// `[(point, exponent)]` in variable order.
    pub fn factors(&self, m: &Monomial) -> Vec<(GridPoint, u32)> {
        m.support()
            .into_iter()
            .map(|i| (self.points[i], m.exponent(i)))
            .collect()
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut s = String::new();
        for (k, (p, e)) in self.factors(m).into_iter().enumerate() {
            if k > 0 {
                s.push('*');
            }
            write!(s, "X({},{})", p.r, p.c).unwrap();
            if e > 1 {
                write!(s, "^{e}").unwrap();
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

/// A polynomial: monomial -> nonzero coefficient. The last map entry is the
/// initial term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<F: Field> {
    nvars: usize,
    ctx: F::Ctx,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize, ctx: F::Ctx) -> Self {
        Self {
            nvars,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars, c.ctx());
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize, ctx: F::Ctx) -> Self {
        Self::constant(nvars, F::one(ctx))
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut p = Self::zero(m.nvars(), c.ctx());
        p.add_term(m, c);
        p
    }

    pub fn variable(nvars: usize, index: usize, ctx: F::Ctx) -> Self {
        Self::monomial(Monomial::variable(nvars, index), F::one(ctx))
    }

    pub fn from_terms(
        nvars: usize,
        ctx: F::Ctx,
        terms: impl IntoIterator<Item = (Monomial, F)>,
    ) -> Self {
        let mut p = Self::zero(nvars, ctx);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn ctx(&self) -> F::Ctx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// The largest term.
    pub fn initial_term(&self) -> Result<(&Monomial, &F)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn initial_monomial(&self) -> Result<&Monomial> {
        self.initial_term().map(|(m, _)| m)
    }

    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.ctx);
        }
        Self {
            nvars: self.nvars,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.neg()))
                .collect(),
        }
    }

    /// `c * x^m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars, self.ctx);
        }
        Self {
            nvars: self.nvars,
            ctx: self.ctx,
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.mul(c)))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars, self.ctx);
        for (m, c) in &other.terms {
            for (t, a) in &self.terms {
                out.add_term(t.mul(m), a.mul(c));
            }
        }
        out
    }

    /// Scales so the initial coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.initial_term() {
            Ok((_, c)) => self.scale(&c.inv().expect("nonzero initial coefficient")),
            Err(_) => self.clone(),
        }
    }

    /// Substitutes a value for every variable.
    pub fn evaluate(&self, point: &[F]) -> F {
        let mut acc = F::zero(self.ctx);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.exponents().iter().enumerate() {
                for _ in 0..*e {
                    t = t.mul(&point[i]);
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    pub fn format(&self, vars: &VariableSet) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let (neg, mag) = if c.is_negative() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            match (k, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            if m.degree() == 0 {
                write!(s, "{mag}").unwrap();
            } else {
                write!(s, "{mag}*{}", vars.format_monomial(m)).unwrap();
            }
        }
        s
    }
}

/// Parses the textual form written by [`Polynomial::format`].
pub fn parse_polynomial<F: Field>(
    s: &str,
    vars: &VariableSet,
    ctx: F::Ctx,
    coef: impl Fn(&str) -> Option<F>,
) -> Result<Polynomial<F>> {
    let bad = |msg: &str| Error::Parse(format!("{msg} in polynomial '{s}'"));
    let mut out = Polynomial::zero(vars.len(), ctx);
    let text = s.trim();
    if text == "0" {
        return Ok(out);
    }
    // split on top-level " + " and " - " (parentheses hide commas only)
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut rest = text;
    let mut negative = false;
    if let Some(r) = rest.strip_prefix('-') {
        negative = true;
        rest = r;
    }
    loop {
        let plus = rest.find(" + ");
        let minus = rest.find(" - ");
        let cut = match (plus, minus) {
            (Some(a), Some(b)) => Some((a.min(b), a > b)),
            (Some(a), None) => Some((a, false)),
            (None, Some(b)) => Some((b, true)),
            (None, None) => None,
        };
        match cut {
            Some((at, next_negative)) => {
                chunks.push((negative, rest[..at].to_string()));
                negative = next_negative;
                rest = &rest[at + 3..];
            }
            None => {
                chunks.push((negative, rest.to_string()));
                break;
            }
        }
    }
    for (neg, chunk) in chunks {
        let mut factors = chunk.split('*');
        let head = factors.next().ok_or_else(|| bad("empty term"))?;
        let mut c = coef(head.trim()).ok_or_else(|| bad("bad coefficient"))?;
        if neg {
            c = c.neg();
        }
        let mut parts = Vec::new();
        for f in factors {
            let f = f.trim();
            let inner = f.strip_prefix("X(").ok_or_else(|| bad("bad variable"))?;
            let (pt, exp) = inner.split_once(')').ok_or_else(|| bad("bad variable"))?;
            let (r, cc) = pt.split_once(',').ok_or_else(|| bad("bad variable"))?;
            let r: usize = r.trim().parse().map_err(|_| bad("bad row"))?;
            let cc: usize = cc.trim().parse().map_err(|_| bad("bad column"))?;
            let e: u32 = match exp.strip_prefix('^') {
                Some(e) => e.parse().map_err(|_| bad("bad exponent"))?,
                None if exp.is_empty() => 1,
                None => return Err(bad("bad exponent")),
            };
            parts.push((GridPoint::new(r, cc), e));
        }
        out.add_term(vars.monomial(&parts)?, c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::field::Fp;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_i64(n, ())
    }

    fn vars13() -> VariableSet {
        VariableSet::new(vec![
            GridPoint::new(2, 1),
            GridPoint::new(2, 3),
            GridPoint::new(4, 1),
        ])
    }

    fn x(vars: &VariableSet, r: usize, c: usize) -> Polynomial<Q> {
        Polynomial::variable(vars.len(), vars.index_of(GridPoint::new(r, c)).unwrap(), ())
    }

    #[test]
    fn variable_order() {
        let v = vars13();
        assert_eq!(
            v.points(),
            &[
                GridPoint::new(4, 1),
                GridPoint::new(2, 1),
                GridPoint::new(2, 3)
            ]
        );
    }

    #[test]
    fn initial_term_example() {
        let v = vars13();
        let f = x(&v, 2, 1)
            .mul(&x(&v, 2, 1))
            .sub(&x(&v, 2, 3).mul(&x(&v, 4, 1)));
        let (m, c) = f.initial_term().unwrap();
        assert_eq!(v.format_monomial(m), "X(4,1)*X(2,3)");
        assert_eq!(*c, q(-1));
        assert_eq!(f.format(&v), "-1*X(4,1)*X(2,3) + 1*X(2,1)^2");
        assert!(Polynomial::<Q>::zero(3, ()).initial_term().is_err());
        let g = x(&v, 2, 3);
        assert_eq!(g.initial_term().unwrap().1, &q(1));
    }

    #[test]
    fn format_round_trip() {
        let v = vars13();
        let f = x(&v, 2, 1)
            .mul(&x(&v, 2, 1))
            .scale(&q(3))
            .sub(&x(&v, 2, 3).mul(&x(&v, 4, 1)))
            .add(&Polynomial::constant(3, Q::new(1.into(), 2.into())));
        let s = f.format(&v);
        let back = parse_polynomial(&s, &v, (), |t| t.parse::<Q>().ok()).unwrap();
        assert_eq!(back, f);
        assert_eq!(Polynomial::<Q>::zero(3, ()).format(&v), "0");
    }

    #[test]
    fn prime_field_arithmetic() {
        let one = Polynomial::<Fp>::one(1, 2);
        let sum = one.add(&one);
        assert!(sum.is_zero());
    }

    fn arb_poly() -> impl Strategy<Value = Polynomial<Q>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -3i64..=3), 1..5)
            .prop_map(|ts| {
                Polynomial::from_terms(
                    3,
                    (),
                    ts.into_iter()
                        .map(|(e, c)| (Monomial::from_exponents(e), q(c))),
                )
            })
    }

    proptest! {
        #[test]
        fn initial_term_is_multiplicative(f in arb_poly(), g in arb_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero());
            let fg = f.mul(&g);
            let (mf, cf) = f.initial_term().unwrap();
            let (mg, cg) = g.initial_term().unwrap();
            let (m, c) = fg.initial_term().unwrap();
            prop_assert_eq!(m.clone(), mf.mul(mg));
            prop_assert_eq!(c.clone(), cf * cg);
        }

        #[test]
        fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
            prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
            prop_assert_eq!(f.mul(&g), g.mul(&f));
            prop_assert!(f.sub(&f).is_zero());
        }
    }
}
