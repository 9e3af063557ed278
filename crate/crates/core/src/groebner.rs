//! Buchberger Groebner engine over the rationals: normal forms, ideal
//! membership, Krull dimension, zero-dimensional quotient dimension (Milnor
//! numbers) and rank-modulo-ideal tests.
//!
//! Parameters must be specialized to explicit rationals before any
//! computation here; the coefficient field is Q.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;
use num::One;

use crate::context::{same_context, VariableContext};
use crate::error::{Error, Result};
use crate::poly::{rat_int, Monomial, Polynomial, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderKind {
    DegRevLex,
    Lex,
}

/// A monomial order on the variables. Parameters are ordered after all
/// variables, but in practice must be specialized away before use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// precedence[i] = index of the variable with the i-th highest priority.
    pub precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn degrevlex(ctx: &VariableContext) -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            precedence: (0..ctx.num_vars()).collect(),
        }
    }

    pub fn lex(ctx: &VariableContext) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: (0..ctx.num_vars()).collect(),
        }
    }

    fn permuted(&self, m: &Monomial) -> Vec<u32> {
        self.precedence.iter().map(|&i| m[i]).collect()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let pa = self.permuted(a);
        let pb = self.permuted(b);
        match self.kind {
            OrderKind::Lex => pa.cmp(&pb),
            OrderKind::DegRevLex => crate::poly::grevlex_cmp(&pa, &pb),
        }
    }
}

/// Resource limits for Buchberger's algorithm.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    pub max_basis: usize,
    pub max_degree: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_basis: 500,
            max_degree: 60,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ctx: Arc<VariableContext>,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    source: Vec<Polynomial>,
}

fn ensure_parameter_free(p: &Polynomial) -> Result<()> {
    if let Some(name) = p.some_parameter() {
        return Err(Error::ParameterNotSpecialized(name.to_string()));
    }
    Ok(())
}

fn leading_term(p: &Polynomial, order: &MonomialOrder) -> (Monomial, Rational) {
    p.terms()
        .max_by(|(a, _), (b, _)| order.cmp(a, b))
        .map(|(m, c)| (m.clone(), c.clone()))
        .expect("nonzero polynomial")
}

fn monomial_divides(d: &Monomial, m: &Monomial) -> bool {
    d.iter().zip(m).all(|(a, b)| a <= b)
}

fn monomial_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn monomial_quot(m: &Monomial, d: &Monomial) -> Monomial {
    m.iter().zip(d).map(|(a, b)| a - b).collect()
}

fn total_degree(m: &Monomial) -> u32 {
    m.iter().sum()
}

/// Complete multivariate division remainder of `p` against `divisors`.
fn reduce(
    p: &Polynomial,
    divisors: &[(Monomial, Rational, Polynomial)],
    order: &MonomialOrder,
) -> Polynomial {
    let ctx = p.context().clone();
    let mut rem = Polynomial::zero(&ctx);
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (lm, lc) = leading_term(&work, order);
        for (dm, dc, d) in divisors {
            if monomial_divides(dm, &lm) {
                let q = Polynomial::from_terms(&ctx, [(monomial_quot(&lm, dm), &lc / dc)]);
                work = work.sub(&q.mul(d).unwrap()).unwrap();
                continue 'outer;
            }
        }
        // Leading term is irreducible: move it to the remainder.
        let t = Polynomial::from_terms(&ctx, [(lm, lc)]);
        rem = rem.add(&t).unwrap();
        work = work.sub(&t).unwrap();
    }
    rem
}

fn make_monic(p: Polynomial, order: &MonomialOrder) -> Polynomial {
    if p.is_zero() {
        return p;
    }
    let (_, lc) = leading_term(&p, order);
    p.scale(&(Rational::one() / lc))
}

/// Computes the reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner(
    gens: &[Polynomial],
    order: &MonomialOrder,
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let ctx = match gens.first() {
        Some(g) => g.context().clone(),
        None => {
            return Err(Error::Invalid(
                "groebner needs at least one generator (use the zero polynomial for the zero ideal)"
                    .into(),
            ))
        }
    };
    for g in gens {
        same_context(&ctx, g.context())?;
        ensure_parameter_free(g)?;
    }
    let mut basis: Vec<Polynomial> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| make_monic(g.clone(), order))
        .collect();
    basis.dedup();

    let mut lts: Vec<(Monomial, Rational)> =
        basis.iter().map(|g| leading_term(g, order)).collect();

    // Pair queue under the normal strategy: smallest lcm degree first.
    let mut pairs: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let lcm = monomial_lcm(&lts[i].0, &lts[j].0);
            pairs.insert((total_degree(&lcm), i, j));
        }
    }
    let mut done: BTreeSet<(usize, usize)> = BTreeSet::new();

    while let Some(&(_, i, j)) = pairs.iter().next() {
        pairs.remove(&(total_degree(&monomial_lcm(&lts[i].0, &lts[j].0)), i, j));
        done.insert((i, j));
        let lcm = monomial_lcm(&lts[i].0, &lts[j].0);

        // Buchberger's first criterion: coprime leading monomials.
        let sum: Monomial = lts[i].0.iter().zip(&lts[j].0).map(|(a, b)| a + b).collect();
        if lcm == sum {
            continue;
        }
        // Chain criterion: some k whose leading term divides the lcm, with
        // both (i,k) and (j,k) already handled.
        let mut chained = false;
        for k in 0..basis.len() {
            if k == i || k == j {
                continue;
            }
            if monomial_divides(&lts[k].0, &lcm) {
                let a = (i.min(k), i.max(k));
                let b = (j.min(k), j.max(k));
                if done.contains(&a) && done.contains(&b) {
                    chained = true;
                    break;
                }
            }
        }
        if chained {
            continue;
        }

        // S-polynomial.
        let qi = Polynomial::from_terms(
            &ctx,
            [(monomial_quot(&lcm, &lts[i].0), Rational::one() / &lts[i].1)],
        );
        let qj = Polynomial::from_terms(
            &ctx,
            [(monomial_quot(&lcm, &lts[j].0), Rational::one() / &lts[j].1)],
        );
        let s = qi.mul(&basis[i])?.sub(&qj.mul(&basis[j])?)?;
        let divisors: Vec<(Monomial, Rational, Polynomial)> = basis
            .iter()
            .map(|g| {
                let (m, c) = leading_term(g, order);
                (m, c, g.clone())
            })
            .collect();
        let r = reduce(&s, &divisors, order);
        if r.is_zero() {
            continue;
        }
        if r.total_degree() > budget.max_degree {
            return Err(Error::Budget(format!(
                "intermediate degree {} exceeds max degree {}",
                r.total_degree(),
                budget.max_degree
            )));
        }
        let r = make_monic(r, order);
        let new_idx = basis.len();
        lts.push(leading_term(&r, order));
        basis.push(r);
        if basis.len() > budget.max_basis {
            return Err(Error::Budget(format!(
                "basis size exceeds {}",
                budget.max_basis
            )));
        }
        for k in 0..new_idx {
            let lcm = monomial_lcm(&lts[k].0, &lts[new_idx].0);
            pairs.insert((total_degree(&lcm), k, new_idx));
        }
    }

    // Minimize: drop generators whose leading monomial is divisible by the
    // leading monomial of another kept generator.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            if monomial_divides(&lts[j].0, &lts[i].0) {
                // For equal leading monomials, keep the earlier generator.
                if lts[i].0 == lts[j].0 && i < j {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut reduced: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();

    // Tail-reduce each survivor against the others, in place. Minimality
    // guarantees the leading term survives, so nothing vanishes.
    for i in 0..reduced.len() {
        let others: Vec<(Monomial, Rational, Polynomial)> = reduced
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| {
                let (m, c) = leading_term(g, order);
                (m, c, g.clone())
            })
            .collect();
        reduced[i] = make_monic(reduce(&reduced[i], &others, order), order);
    }
    reduced.sort_by(|a, b| {
        let (ma, _) = leading_term(a, order);
        let (mb, _) = leading_term(b, order);
        order.cmp(&mb, &ma)
    });

    Ok(GroebnerBasis {
        ctx,
        generators: reduced,
        order: order.clone(),
        source: gens.to_vec(),
    })
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn source_generators(&self) -> &[Polynomial] {
        &self.source
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.generators.iter().any(|g| g.is_constant() && !g.is_zero())
    }

    fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| leading_term(g, &self.order).0)
            .collect()
    }

    /// Complete division remainder; zero exactly when `p` is in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        same_context(&self.ctx, p.context())?;
        ensure_parameter_free(p)?;
        let divisors: Vec<(Monomial, Rational, Polynomial)> = self
            .generators
            .iter()
            .map(|g| {
                let (m, c) = leading_term(g, &self.order);
                (m, c, g.clone())
            })
            .collect();
        Ok(reduce(p, &divisors, &self.order))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Krull dimension of the quotient ring, i.e. the dimension of the
    /// vanishing locus: the largest number of variables forming a subset that
    /// contains the support of no leading monomial. Returns -1 for the unit
    /// ideal.
    pub fn krull_dimension(&self) -> i64 {
        if self.is_unit_ideal() {
            return -1;
        }
        let nvars = self.ctx.num_vars();
        let supports: Vec<Vec<usize>> = self
            .leading_monomials()
            .iter()
            .map(|m| {
                m.iter()
                    .take(nvars)
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let mut best = 0usize;
        for mask in 0u64..(1u64 << nvars) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = supports
                .iter()
                .all(|supp| !supp.iter().all(|&i| mask & (1 << i) != 0));
            if independent {
                best = size;
            }
        }
        best as i64
    }

    /// Number of standard monomials (monomials divisible by no leading term),
    /// i.e. the vector-space dimension of the quotient; `None` when infinite.
    pub fn quotient_dimension(&self) -> Option<u64> {
        if self.is_unit_ideal() {
            return Some(0);
        }
        if self.krull_dimension() != 0 {
            return None;
        }
        let nvars = self.ctx.num_vars();
        let lms = self.leading_monomials();
        // Zero-dimensionality guarantees a pure power of every variable
        // among the leading monomials; these bound the enumeration box.
        let mut bounds = vec![0u32; nvars];
        for i in 0..nvars {
            let mut best: Option<u32> = None;
            for m in &lms {
                let pure = m
                    .iter()
                    .take(nvars)
                    .enumerate()
                    .all(|(j, &e)| j == i || e == 0);
                if pure && m[i] > 0 {
                    best = Some(best.map_or(m[i], |b| b.min(m[i])));
                }
            }
            bounds[i] = best.expect("zero-dimensional ideal has a pure power per variable");
        }
        let ngens = self.ctx.num_gens();
        let mut count = 0u64;
        let mut current = vec![0u32; ngens];
        fn walk(
            i: usize,
            nvars: usize,
            bounds: &[u32],
            current: &mut Vec<u32>,
            lms: &[Monomial],
            count: &mut u64,
        ) {
            if i == nvars {
                let standard = !lms.iter().any(|m| monomial_divides(m, current));
                if standard {
                    *count += 1;
                }
                return;
            }
            for e in 0..bounds[i] {
                current[i] = e;
                walk(i + 1, nvars, bounds, current, lms, count);
            }
            current[i] = 0;
        }
        walk(0, nvars, &bounds, &mut current, &lms, &mut count);
        Some(count)
    }

    /// Buchberger criterion: every S-polynomial of basis pairs reduces to 0.
    /// Exposed so tests can re-certify emitted bases.
    pub fn certify(&self) -> Result<()> {
        for i in 0..self.generators.len() {
            for j in (i + 1)..self.generators.len() {
                let (mi, ci) = leading_term(&self.generators[i], &self.order);
                let (mj, cj) = leading_term(&self.generators[j], &self.order);
                let lcm = monomial_lcm(&mi, &mj);
                let qi = Polynomial::from_terms(
                    &self.ctx,
                    [(monomial_quot(&lcm, &mi), Rational::one() / ci)],
                );
                let qj = Polynomial::from_terms(
                    &self.ctx,
                    [(monomial_quot(&lcm, &mj), Rational::one() / cj)],
                );
                let s = qi
                    .mul(&self.generators[i])?
                    .sub(&qj.mul(&self.generators[j])?)?;
                if !self.normal_form(&s)?.is_zero() {
                    return Err(Error::Invalid(format!(
                        "S-polynomial of pair ({i},{j}) does not reduce to zero"
                    )));
                }
            }
        }
        for g in &self.source {
            if !g.is_zero() && !self.normal_form(g)?.is_zero() {
                return Err(Error::Invalid(
                    "source generator does not reduce to zero".into(),
                ));
            }
        }
        Ok(())
    }
}

/// Milnor number of an isolated hypersurface singularity: the quotient
/// dimension of the ideal of all partial derivatives. `None` signals a
/// non-isolated singularity. When the context carries weights and `f` is
/// quasi-homogeneous, the result is cross-checked against the product
/// formula prod_v (k - w_v)/w_v.
pub fn milnor_number(f: &Polynomial, budget: &Budget) -> Result<Option<u64>> {
    ensure_parameter_free(f)?;
    let ctx = f.context().clone();
    let grads = f.gradient();
    let order = MonomialOrder::degrevlex(&ctx);
    let basis = groebner(&grads, &order, budget)?;
    let mu = basis.quotient_dimension();
    if let (Some(mu), Some(weights)) = (mu, ctx.weights()) {
        if let Ok(k) = f.quasi_degree() {
            let mut expected = Rational::one();
            for &w in weights {
                expected *= rat_int(k as i64 - w as i64) / rat_int(w as i64);
            }
            if expected != rat_int(mu as i64) {
                return Err(Error::Invalid(format!(
                    "Milnor number {mu} disagrees with the quasi-homogeneous product formula {expected}"
                )));
            }
        }
    }
    Ok(mu)
}

/// True iff every (r+1)x(r+1) minor of `matrix` lies in the ideal generated
/// by `ideal_gens`, i.e. the matrix has rank <= r modulo the ideal.
pub fn rank_leq_mod_ideal(
    matrix: &[Vec<Polynomial>],
    ideal_gens: &[Polynomial],
    r: usize,
    budget: &Budget,
) -> Result<bool> {
    let rows = matrix.len();
    let cols = matrix.first().map_or(0, |row| row.len());
    let k = r + 1;
    if k > rows || k > cols {
        return Ok(true);
    }
    let ctx = matrix[0][0].context().clone();
    let order = MonomialOrder::degrevlex(&ctx);
    let basis = groebner(ideal_gens, &order, budget)?;
    for row_set in (0..rows).combinations(k) {
        for col_set in (0..cols).combinations(k) {
            let minor = determinant(&submatrix(matrix, &row_set, &col_set))?;
            if !basis.normal_form(&minor)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn submatrix(
    matrix: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
) -> Vec<Vec<Polynomial>> {
    rows.iter()
        .map(|&i| cols.iter().map(|&j| matrix[i][j].clone()).collect())
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    let ctx = m[0][0].context().clone();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let mut det = Polynomial::zero(&ctx);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = (1..n)
            .map(|i| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| m[i][c].clone())
                    .collect()
            })
            .collect();
        let cof = m[0][j].mul(&determinant(&minor)?)?;
        det = if j % 2 == 0 {
            det.add(&cof)?
        } else {
            det.sub(&cof)?
        };
    }
    Ok(det)
}

/// Hessian matrix of second partials with respect to all variables.
pub fn hessian(f: &Polynomial) -> Vec<Vec<Polynomial>> {
    let vars = f.context().variables().to_vec();
    vars.iter()
        .map(|u| {
            let du = f.partial_derivative(u).expect("declared variable");
            vars.iter()
                .map(|v| du.partial_derivative(v).expect("declared variable"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ctx_xyz() -> Arc<VariableContext> {
        VariableContext::new(vec!["x", "y", "z"], Vec::<&str>::new()).unwrap()
    }

    fn gb(gens: &[&str], ctx: &Arc<VariableContext>) -> GroebnerBasis {
        let polys: Vec<Polynomial> = gens.iter().map(|s| parse_poly(s, ctx).unwrap()).collect();
        let basis = groebner(&polys, &MonomialOrder::degrevlex(ctx), &Budget::default()).unwrap();
        basis.certify().unwrap();
        basis
    }

    #[test]
    fn already_reduced_basis() {
        let ctx = ctx_xyz();
        let basis = gb(&["x", "y"], &ctx);
        assert_eq!(basis.generators().len(), 2);
        assert_eq!(basis.generators()[0], parse_poly("x", &ctx).unwrap());
        assert_eq!(basis.generators()[1], parse_poly("y", &ctx).unwrap());
    }

    #[test]
    fn quotient_dimension_of_intersection() {
        // x^2 = y, y^2 = x has 4 solutions counted with multiplicity.
        let ctx = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        let basis = gb(&["x^2-y", "y^2-x"], &ctx);
        assert_eq!(basis.quotient_dimension(), Some(4));
    }

    #[test]
    fn jacobian_ideal_of_e6_cubic() {
        let ctx = ctx_xyz();
        let basis = gb(&["3*x^2+y*z", "3*y^2+x*z", "3*z^2+x*y"], &ctx);
        assert_eq!(basis.krull_dimension(), 0);
        assert_eq!(basis.quotient_dimension(), Some(8));
    }

    #[test]
    fn normal_form_membership() {
        let ctx = ctx_xyz();
        let basis = gb(&["x"], &ctx);
        assert!(basis.normal_form(&parse_poly("x^2", &ctx).unwrap()).unwrap().is_zero());
        assert_eq!(
            basis.normal_form(&parse_poly("y", &ctx).unwrap()).unwrap(),
            parse_poly("y", &ctx).unwrap()
        );
    }

    #[test]
    fn krull_dimension_examples() {
        let ctx = VariableContext::new(vec!["w", "x", "y", "z"], Vec::<&str>::new()).unwrap();
        let basis = gb(&["x", "y", "z"], &ctx);
        assert_eq!(basis.krull_dimension(), 1);

        let unit = gb(&["1"], &ctx);
        assert_eq!(unit.krull_dimension(), -1);
        assert_eq!(unit.quotient_dimension(), Some(0));
    }

    #[test]
    fn parameters_must_be_specialized() {
        let ctx = VariableContext::new(vec!["x"], vec!["t"]).unwrap();
        let p = parse_poly("t*x", &ctx).unwrap();
        assert!(matches!(
            groebner(&[p], &MonomialOrder::degrevlex(&ctx), &Budget::default()),
            Err(Error::ParameterNotSpecialized(_))
        ));
    }

    #[test]
    fn milnor_numbers_of_table_rows() {
        let mk = |weights: [u32; 3], src: &str| {
            let ctx =
                VariableContext::with_weights(vec!["x", "y", "z"], Vec::<&str>::new(), weights)
                    .unwrap();
            milnor_number(&parse_poly(src, &ctx).unwrap(), &Budget::default()).unwrap()
        };
        assert_eq!(mk([1, 1, 1], "x^3+y^3+z^3+x*y*z"), Some(8));
        assert_eq!(mk([1, 1, 2], "x^4+y^4+z^2+x*y*z"), Some(9));
        assert_eq!(mk([1, 2, 3], "x^6+y^3+z^2+x*y*z"), Some(10));
    }

    #[test]
    fn node_and_nonisolated() {
        let ctx = ctx_xyz();
        assert_eq!(
            milnor_number(&parse_poly("x^2+y^2+z^2", &ctx).unwrap(), &Budget::default()).unwrap(),
            Some(1)
        );
        let ctx2 = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        assert_eq!(
            milnor_number(&parse_poly("x*y", &ctx2).unwrap(), &Budget::default()).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn product_xy_squared_is_nonisolated() {
        // x^2*y^2 is singular along both axes.
        let ctx2 = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        assert_eq!(
            milnor_number(&parse_poly("x^2*y^2", &ctx2).unwrap(), &Budget::default()).unwrap(),
            None
        );
    }

    #[test]
    fn rank_mod_ideal_examples() {
        let ctx = ctx_xyz();
        // Identity matrix has full rank modulo the zero ideal.
        let id: Vec<Vec<Polynomial>> = (0..2)
            .map(|i| {
                (0..2)
                    .map(|j| {
                        if i == j {
                            Polynomial::one(&ctx)
                        } else {
                            Polynomial::zero(&ctx)
                        }
                    })
                    .collect()
            })
            .collect();
        let zero = vec![Polynomial::zero(&ctx)];
        assert!(!rank_leq_mod_ideal(&id, &zero, 1, &Budget::default()).unwrap());

        // Hessian of x^3+y^3+z^3 vanishes at the origin.
        let f = parse_poly("x^3+y^3+z^3", &ctx).unwrap();
        let hess = hessian(&f);
        let origin = vec![
            parse_poly("x", &ctx).unwrap(),
            parse_poly("y", &ctx).unwrap(),
            parse_poly("z", &ctx).unwrap(),
        ];
        assert!(rank_leq_mod_ideal(&hess, &origin, 0, &Budget::default()).unwrap());

        // Hessian of x^6+y^3+z^2 modulo the cone ideal (x,y) has rank one.
        let f = parse_poly("x^6+y^3+z^2", &ctx).unwrap();
        let hess = hessian(&f);
        let cone = vec![parse_poly("x", &ctx).unwrap(), parse_poly("y", &ctx).unwrap()];
        assert!(rank_leq_mod_ideal(&hess, &cone, 1, &Budget::default()).unwrap());
        assert!(!rank_leq_mod_ideal(&hess, &cone, 0, &Budget::default()).unwrap());
    }

    #[test]
    fn budget_aborts() {
        let ctx = ctx_xyz();
        let gens = vec![
            parse_poly("x^5+y^4+z^3-1", &ctx).unwrap(),
            parse_poly("x^3+y^3+z^2-1", &ctx).unwrap(),
        ];
        let tiny = Budget {
            max_basis: 2,
            max_degree: 60,
        };
        assert!(matches!(
            groebner(&gens, &MonomialOrder::degrevlex(&ctx), &tiny),
            Err(Error::Budget(_))
        ));
    }
}
