//! Dense exponent vectors under the degree-lexicographic order.

use std::cmp::Ordering;

/// Exponent vector indexed by variable position; position 0 is the largest
/// variable. The derived order compares total degree first, then exponents
/// lexicographically, so larger monomials compare greater.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    exps: Vec<u32>,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            degree: 0,
            exps: vec![0; nvars],
        }
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        Self {
            degree: exps.iter().sum(),
            exps,
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.exps[index]
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|e| *e <= 1)
    }

    /// Variable positions with nonzero exponent, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.exps.len()).filter(|i| self.exps[*i] > 0).collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.nvars(), other.nvars());
        Self {
            degree: self.degree + other.degree,
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Self) -> Option<Self> {
        self.divides(other).then(|| Self {
            degree: other.degree - self.degree,
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self::from_exponents(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// All monomials of total degree `m` in `nvars` variables, ascending.
pub fn monomials_of_degree(nvars: usize, m: u32) -> Vec<Monomial> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(Monomial::from_exponents(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if m == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(0, m, &mut vec![0; nvars], &mut out);
    out
}

/// Minimal generators of the monomial ideal spanned by `gens`, ascending.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut sorted = gens.to_vec();
    sorted.sort();
    sorted.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

/// Degree-`m` monomials divisible by none of `gens`, ascending.
pub fn monomials_outside(gens: &[Monomial], nvars: usize, m: u32) -> Vec<Monomial> {
    monomials_of_degree(nvars, m)
        .into_iter()
        .filter(|x| !gens.iter().any(|g| g.divides(x)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn order_examples() {
        // variables sorted X41 > X21 > X23
        assert!(mono(&[1, 0, 1]) > mono(&[0, 2, 0]));
        assert!(mono(&[0, 1, 0]) > mono(&[0, 0, 1]));
        assert!(mono(&[0, 0, 1]) > Monomial::one(3));
        assert!(mono(&[0, 0, 2]) > mono(&[1, 0, 0]));
    }

    #[test]
    fn outside_counts() {
        let vars: Vec<_> = (0..3).map(|i| Monomial::variable(3, i)).collect();
        assert!(monomials_outside(&vars, 3, 1).is_empty());
        assert_eq!(monomials_outside(&[], 3, 2).len(), 6);
        assert_eq!(monomials_outside(&[mono(&[1, 0, 1])], 3, 2).len(), 5);
        for k in 1..=5u64 {
            for m in 0..=5u64 {
                assert_eq!(
                    monomials_outside(&[], k as usize, m as u32).len() as u64,
                    binom(m + k - 1, k - 1)
                );
            }
        }
        assert_eq!(monomials_of_degree(0, 0).len(), 1);
        assert!(monomials_of_degree(0, 2).is_empty());
    }

    #[test]
    fn minimalize_drops_multiples() {
        let g = minimalize(&[mono(&[2, 0]), mono(&[1, 0]), mono(&[1, 1]), mono(&[0, 3])]);
        assert_eq!(g, vec![mono(&[1, 0]), mono(&[0, 3])]);
    }

    fn arb_mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 4).prop_map(Monomial::from_exponents)
    }

    proptest! {
        #[test]
        fn order_is_multiplicative(a in arb_mono(), b in arb_mono(), c in arb_mono()) {
            prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
        }

        #[test]
        fn order_is_degree_compatible(a in arb_mono(), b in arb_mono()) {
            if a.degree() > b.degree() {
                prop_assert!(a > b);
            }
            prop_assert_eq!(a == b, a.cmp(&b).is_eq());
        }

        #[test]
        fn lcm_and_quotient(a in arb_mono(), b in arb_mono()) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(a.quotient_of(&l).unwrap().mul(&a), l.clone());
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
        }
    }
}
