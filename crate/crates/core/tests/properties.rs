//! Randomized property suites: Schouten bracket axioms, the contraction
//! identity, Pfaffian vs determinant, the Buchberger criterion, and the
//! Diophantine enumeration against brute force.

use std::sync::Arc;

use proptest::prelude::*;

use logsymp::context::VariableContext;
use logsymp::diophantine::{enumerate_triples, feasibility_filter};
use logsymp::groebner::{determinant, groebner, Budget, MonomialOrder};
use logsymp::multivector::Multivector;
use logsymp::poly::{rat_int, Polynomial, Rational};

fn ctx3() -> Arc<VariableContext> {
    VariableContext::new(vec!["x", "y", "z"], Vec::<&str>::new()).unwrap()
}

fn ctx4() -> Arc<VariableContext> {
    VariableContext::new(vec!["x1", "x2", "x3", "x4"], Vec::<&str>::new()).unwrap()
}

fn arb_coeff() -> impl Strategy<Value = Rational> {
    ((-9i64..=9).prop_filter("nonzero", |n| *n != 0), 1i64..=4)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn arb_poly(
    ctx: Arc<VariableContext>,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Polynomial> {
    let ngens = ctx.num_gens();
    prop::collection::vec(
        (prop::collection::vec(0..=max_deg, ngens), arb_coeff()),
        0..=max_terms,
    )
    .prop_map(move |terms| Polynomial::from_terms(&ctx, terms))
}

fn index_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..n {
        for rest in index_tuples(n, k - 1) {
            if rest.iter().all(|&r| r > first) {
                let mut t = vec![first];
                t.extend(rest);
                out.push(t);
            }
        }
    }
    out
}

fn arb_multivector(
    ctx: Arc<VariableContext>,
    degree: usize,
    max_deg: u32,
    max_terms: usize,
) -> impl Strategy<Value = Multivector> {
    let tuples = index_tuples(ctx.num_vars(), degree);
    let count = tuples.len();
    prop::collection::vec(arb_poly(ctx.clone(), max_deg, max_terms), count).prop_map(
        move |polys| {
            let mut out = Multivector::zero(&ctx, degree);
            for (t, p) in tuples.iter().zip(polys) {
                if !p.is_zero() {
                    out.add_component(t.clone(), p);
                }
            }
            out
        },
    )
}

fn graded(degree_pair: (usize, usize)) -> impl Strategy<Value = (Multivector, Multivector)> {
    let (da, db) = degree_pair;
    (
        arb_multivector(ctx3(), da, 2, 2),
        arb_multivector(ctx3(), db, 2, 2),
    )
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn schouten_graded_antisymmetry(
        pair in ((1usize..=2), (1usize..=2)).prop_flat_map(graded),
    ) {
        let (a, b) = pair;
        let (da, db) = (a.degree(), b.degree());
        let ab = a.schouten(&b).unwrap();
        let ba = b.schouten(&a).unwrap();
        let sign = if (da - 1) * (db - 1) % 2 == 0 { -1 } else { 1 };
        prop_assert!(ab.sub(&ba.scale(&rat_int(sign))).unwrap().is_zero());
    }

    #[test]
    fn schouten_graded_jacobi(
        a in arb_multivector(ctx3(), 1, 2, 2),
        b in arb_multivector(ctx3(), 2, 2, 2),
        c in arb_multivector(ctx3(), 2, 2, 2),
    ) {
        // Mixed degrees: also exercise vector fields for b and c by
        // truncating components is unnecessary — degrees (1,2,2) already
        // produce every sign combination together with the antisymmetry law.
        let lhs = a.schouten(&b.schouten(&c).unwrap()).unwrap();
        let t1 = a.schouten(&b).unwrap().schouten(&c).unwrap();
        let s = if (a.degree() - 1) * (b.degree() - 1) % 2 == 0 { 1 } else { -1 };
        let t2 = b.schouten(&a.schouten(&c).unwrap()).unwrap().scale(&rat_int(s));
        prop_assert!(lhs.sub(&t1).unwrap().sub(&t2).unwrap().is_zero());
    }

    #[test]
    fn schouten_leibniz(
        a in arb_multivector(ctx3(), 2, 2, 2),
        b in arb_multivector(ctx3(), 1, 2, 2),
        c in arb_multivector(ctx3(), 1, 2, 2),
    ) {
        let lhs = a.schouten(&b.wedge(&c).unwrap()).unwrap();
        let t1 = a.schouten(&b).unwrap().wedge(&c).unwrap();
        let s = if (a.degree() - 1) * b.degree() % 2 == 0 { 1 } else { -1 };
        let t2 = b.wedge(&a.schouten(&c).unwrap()).unwrap().scale(&rat_int(s));
        prop_assert!(lhs.sub(&t1).unwrap().sub(&t2).unwrap().is_zero());
    }

    #[test]
    fn contraction_identity(
        pi in arb_multivector(ctx4(), 2, 1, 2),
        h in arb_poly(ctx4(), 2, 3),
    ) {
        prop_assume!(!h.is_zero());
        // m (iota_dh pi) ^ pi^{m-1} = iota_dh(pi^m) with m = 2.
        let lhs = pi.contract_exact(&h).unwrap().wedge(&pi).unwrap().scale(&rat_int(2));
        let rhs = pi.wedge_power(2).unwrap().contract_exact(&h).unwrap();
        prop_assert!(lhs.sub(&rhs).unwrap().is_zero());
    }

    #[test]
    fn pfaffian_squared_is_determinant(pi in arb_multivector(ctx4(), 2, 1, 2)) {
        let pf = pi.pfaffian().unwrap();
        let det = determinant(&pi.coefficient_matrix().unwrap()).unwrap();
        prop_assert!(pf.mul(&pf).unwrap().sub(&det).unwrap().is_zero());
    }

    #[test]
    fn buchberger_criterion(
        gens in prop::collection::vec(arb_poly(ctx3(), 2, 3), 1..=3),
    ) {
        prop_assume!(gens.iter().any(|g| !g.is_zero()));
        let basis = groebner(&gens, &MonomialOrder::degrevlex(&ctx3()), &Budget::default()).unwrap();
        // Every S-polynomial reduces to zero and every input is in the ideal.
        prop_assert!(basis.certify().is_ok());
    }

    #[test]
    fn enumeration_matches_brute_force(n in 0u64..=200) {
        let fast: Vec<(u64, u64, u64)> = enumerate_triples(n)
            .iter()
            .map(|s| (s.a6, s.a7, s.a8))
            .collect();
        let mut brute = Vec::new();
        for a6 in 0..=n / 8 {
            for a7 in 0..=n / 9 {
                for a8 in 0..=n / 10 {
                    if 8 * a6 + 9 * a7 + 10 * a8 == n {
                        brute.push((a6, a7, a8));
                    }
                }
            }
        }
        prop_assert_eq!(&fast, &brute);
        let mut sorted = fast.clone();
        sorted.sort();
        prop_assert_eq!(&fast, &sorted);
        for s in feasibility_filter(&enumerate_triples(n)) {
            let ok = |v: u64| v == 0 || v >= 3;
            prop_assert_eq!(s.feasible, ok(s.a6) && ok(s.a7) && ok(s.a8));
        }
    }
}
