//! Division with remainder and Buchberger's algorithm.

use std::collections::BTreeSet;

use crate::poly::field::Field;
use crate::poly::monomial::{minimalize, Monomial};
use crate::poly::polynomial::Polynomial;

fn by_initial<F: Field>(g: &[Polynomial<F>]) -> Vec<&Polynomial<F>> {
    let mut v: Vec<_> = g.iter().filter(|p| !p.is_zero()).collect();
    v.sort_by(|a, b| {
        a.initial_monomial()
            .unwrap()
            .cmp(b.initial_monomial().unwrap())
    });
    v
}

/// Remainder of `f` on division by `g`. Divisors are tried in order of
/// ascending initial monomial (list order among ties), and the largest
/// reducible term is always eliminated first.
pub fn reduce<F: Field>(f: &Polynomial<F>, g: &[Polynomial<F>]) -> Polynomial<F> {
    let divisors = by_initial(g);
    let mut p = f.clone();
    let mut rem = Polynomial::zero(f.nvars(), f.ctx());
    while let Ok((m, c)) = p.initial_term() {
        let (m, c) = (m.clone(), c.clone());
        let hit = divisors.iter().find_map(|d| {
            let (dm, dc) = d.initial_term().unwrap();
            dm.quotient_of(&m).map(|q| (d, q, dc))
        });
        match hit {
            Some((d, q, dc)) => {
                let factor = c.mul(&dc.inv().expect("nonzero initial coefficient"));
                p = p.sub(&d.mul_term(&q, &factor));
            }
            None => {
                p.add_term(m.clone(), c.neg());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

pub fn s_polynomial<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Polynomial<F> {
    let (fm, fc) = f.initial_term().expect("nonzero");
    let (gm, gc) = g.initial_term().expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(&fm.quotient_of(&l).unwrap(), &fc.inv().unwrap());
    let b = g.mul_term(&gm.quotient_of(&l).unwrap(), &gc.inv().unwrap());
    a.sub(&b)
}

/// The reduced Groebner basis of the ideal generated by `gens`: monic,
/// inter-reduced, sorted by ascending initial monomial.
pub fn buchberger<F: Field>(gens: &[Polynomial<F>]) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = gens
        .iter()
        .filter(|p| !p.is_zero())
        .map(Polynomial::monic)
        .collect();
    if basis.is_empty() {
        return basis;
    }
    // pair queue keyed by (lcm, i, j): the normal selection strategy
    let mut queue: BTreeSet<(Monomial, usize, usize)> = BTreeSet::new();
    let push = |queue: &mut BTreeSet<_>, basis: &[Polynomial<F>], j: usize| {
        for i in 0..j {
            let a = basis[i].initial_monomial().unwrap();
            let b = basis[j].initial_monomial().unwrap();
            if !a.is_coprime(b) {
                queue.insert((a.lcm(b), i, j));
            }
        }
    };
    for j in 1..basis.len() {
        push(&mut queue, &basis, j);
    }
    while let Some((_, i, j)) = queue.pop_first() {
        let s = s_polynomial(&basis[i], &basis[j]);
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
            push(&mut queue, &basis, basis.len() - 1);
        }
    }
    reduce_basis(basis)
}

/// Turns a Groebner basis into the reduced one.
pub fn reduce_basis<F: Field>(basis: Vec<Polynomial<F>>) -> Vec<Polynomial<F>> {
    let mut basis: Vec<Polynomial<F>> = basis
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monic())
        .collect();
    basis.sort_by(|a, b| {
        a.initial_monomial()
            .unwrap()
            .cmp(b.initial_monomial().unwrap())
    });
    let mut minimal: Vec<Polynomial<F>> = Vec::new();
    for p in basis {
        let m = p.initial_monomial().unwrap();
        if !minimal
            .iter()
            .any(|q| q.initial_monomial().unwrap().divides(m))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<_> = minimal
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p.clone())
            .collect();
        let (m, c) = minimal[k].initial_term().unwrap();
        let lead = Polynomial::monomial(m.clone(), c.clone());
        let tail = reduce(&minimal[k].sub(&lead), &others);
        out.push(lead.add(&tail).monic());
    }
    out
}

/// Minimal monomial generators of the initial ideal of a Groebner basis.
pub fn initial_ideal_gens<F: Field>(basis: &[Polynomial<F>]) -> Vec<Monomial> {
    minimalize(
        &basis
            .iter()
            .filter_map(|p| p.initial_monomial().ok().cloned())
            .collect::<Vec<_>>(),
    )
}

pub fn is_groebner_basis<F: Field>(basis: &[Polynomial<F>]) -> bool {
    let nonzero: Vec<_> = basis.iter().filter(|p| !p.is_zero()).collect();
    nonzero.iter().enumerate().all(|(j, b)| {
        nonzero[..j]
            .iter()
            .all(|a| reduce(&s_polynomial(a, b), basis).is_zero())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridPoint;
    use crate::poly::field::Fp;
    use crate::poly::polynomial::VariableSet;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type Q = BigRational;

    fn vars13() -> VariableSet {
        VariableSet::new(vec![
            GridPoint::new(2, 1),
            GridPoint::new(2, 3),
            GridPoint::new(4, 1),
        ])
    }

    fn x(v: &VariableSet, r: usize, c: usize) -> Polynomial<Q> {
        Polynomial::variable(v.len(), v.index_of(GridPoint::new(r, c)).unwrap(), ())
    }

    fn quad(v: &VariableSet) -> Polynomial<Q> {
        x(v, 2, 1)
            .mul(&x(v, 2, 1))
            .sub(&x(v, 2, 3).mul(&x(v, 4, 1)))
    }

    #[test]
    fn reduce_examples() {
        let v = vars13();
        let f = quad(&v);
        assert!(reduce(&f, std::slice::from_ref(&f)).is_zero());
        let sq = x(&v, 2, 1).mul(&x(&v, 2, 1));
        assert!(reduce(&sq, &[x(&v, 2, 1)]).is_zero());
        assert_eq!(reduce(&f, &[x(&v, 2, 3)]), sq);
    }

    #[test]
    fn buchberger_examples() {
        let v = vars13();
        assert_eq!(buchberger(&[x(&v, 2, 3)]), vec![x(&v, 2, 3)]);
        assert!(buchberger::<Q>(&[]).is_empty());
        let gb = buchberger(&[quad(&v), x(&v, 2, 3), x(&v, 4, 1)]);
        let sq = x(&v, 2, 1).mul(&x(&v, 2, 1));
        assert_eq!(gb, vec![x(&v, 2, 3), x(&v, 4, 1), sq]);
        let init: Vec<_> = initial_ideal_gens(&gb)
            .iter()
            .map(|m| v.format_monomial(m))
            .collect();
        assert_eq!(init, vec!["X(2,3)", "X(4,1)", "X(2,1)^2"]);
    }

    #[test]
    fn unit_ideal() {
        let v = vars13();
        let gb = buchberger(&[x(&v, 2, 1), x(&v, 2, 1).sub(&Polynomial::one(3, ()))]);
        assert_eq!(gb, vec![Polynomial::one(3, ())]);
    }

    #[test]
    fn twisted_cubic_over_q_and_f2() {
        // (y - x^2, z - x^3) under deglex: {x^2 - y, xy - z, xz - y^2, y^3 - z^2}
        let v = VariableSet::new(vec![
            GridPoint::new(3, 1),
            GridPoint::new(2, 1),
            GridPoint::new(1, 1),
        ]);
        let n = v.len();
        let gens = |one: Polynomial<Fp>| {
            let x0 = Polynomial::<Fp>::variable(n, 0, one.ctx());
            let x1 = Polynomial::<Fp>::variable(n, 1, one.ctx());
            let x2 = Polynomial::<Fp>::variable(n, 2, one.ctx());
            vec![x1.sub(&x0.mul(&x0)), x2.sub(&x0.mul(&x0).mul(&x0))]
        };
        for p in [2u64, 3, 65521] {
            let gb = buchberger(&gens(Polynomial::one(n, p)));
            assert!(is_groebner_basis(&gb));
            let init: Vec<_> = initial_ideal_gens(&gb)
                .iter()
                .map(|m| m.exponents().to_vec())
                .collect();
            assert_eq!(
                init,
                vec![vec![1, 0, 1], vec![1, 1, 0], vec![2, 0, 0], vec![0, 3, 0]],
                "p = {p}"
            );
        }
    }

    fn arb_gens() -> impl Strategy<Value = Vec<Polynomial<Q>>> {
        let term = (proptest::collection::vec(0u32..3, 3), -2i64..=2);
        let poly = proptest::collection::vec(term, 1..4).prop_map(|ts| {
            Polynomial::from_terms(
                3,
                (),
                ts.into_iter()
                    .map(|(e, c)| (Monomial::from_exponents(e), Q::from_i64(c, ()))),
            )
        });
        proptest::collection::vec(poly, 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn buchberger_is_a_reduced_basis(gens in arb_gens()) {
            let gb = buchberger(&gens);
            prop_assert!(is_groebner_basis(&gb));
            for g in &gens {
                prop_assert!(reduce(g, &gb).is_zero());
            }
            for (k, g) in gb.iter().enumerate() {
                prop_assert!(g.initial_term().unwrap().1 == &Q::from_i64(1, ()));
                let others: Vec<_> = gb.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, p)| p.clone()).collect();
                prop_assert_eq!(&reduce(g, &others), g);
            }
        }

        #[test]
        fn buchberger_ignores_generator_order(gens in arb_gens()) {
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(buchberger(&gens), buchberger(&rev));
        }
    }
}
