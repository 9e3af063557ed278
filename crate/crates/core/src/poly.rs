//! Sparse multivariate polynomials over the exact rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::context::{same_context, VariableContext};
use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Exponent vector over variables followed by parameters.
pub type Monomial = Vec<u32>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Stored zero coefficients are never kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: Arc<VariableContext>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ctx: &Arc<VariableContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ctx: &Arc<VariableContext>, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(vec![0; ctx.num_gens()], c);
        }
        p
    }

    pub fn one(ctx: &Arc<VariableContext>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    /// The generator named `name` (variable or parameter).
    pub fn generator(ctx: &Arc<VariableContext>, name: &str) -> Result<Self> {
        let idx = ctx.index_of(name)?;
        let mut expo = vec![0u32; ctx.num_gens()];
        expo[idx] = 1;
        let mut p = Self::zero(ctx);
        p.terms.insert(expo, Rational::one());
        Ok(p)
    }

    pub fn from_terms(
        ctx: &Arc<VariableContext>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut p = Self::zero(ctx);
        for (m, c) in terms {
            debug_assert_eq!(m.len(), ctx.num_gens());
            p.add_term(m, c);
        }
        p
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.iter().all(|&e| e == 0))
    }

    /// Constant coefficient (the coefficient of the monomial 1).
    pub fn constant_term(&self) -> Rational {
        self.terms
            .get(&vec![0u32; self.ctx.num_gens()])
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// True if no parameter occurs with positive exponent.
    pub fn is_parameter_free(&self) -> bool {
        let nv = self.ctx.num_vars();
        self.terms.keys().all(|m| m[nv..].iter().all(|&e| e == 0))
    }

    /// Name of some parameter occurring in the polynomial, if any.
    pub fn some_parameter(&self) -> Option<&str> {
        let nv = self.ctx.num_vars();
        for m in self.terms.keys() {
            for (j, &e) in m[nv..].iter().enumerate() {
                if e > 0 {
                    return Some(self.ctx.gen_name(nv + j));
                }
            }
        }
        None
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        same_context(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        same_context(&self.ctx, &other.ctx)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut out = Self::zero(&self.ctx);
        for (m, co) in &self.terms {
            out.terms.insert(m.clone(), co * c);
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        same_context(&self.ctx, &other.ctx)?;
        let mut out = Self::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                out.add_term(m, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut out = Self::one(&self.ctx);
        for _ in 0..n {
            out = out.mul(self).expect("same context");
        }
        out
    }

    /// Formal partial derivative with respect to the variable `v`.
    /// Parameters are constants; differentiating by one is an error.
    pub fn partial_derivative(&self, v: &str) -> Result<Polynomial> {
        let idx = self.ctx.variable_index(v)?;
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let e = m[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2[idx] = e - 1;
            out.add_term(m2, c * Rational::from(BigInt::from(e)));
        }
        Ok(out)
    }

    /// Gradient with respect to all declared variables, in declaration order.
    pub fn gradient(&self) -> Vec<Polynomial> {
        self.ctx
            .variables()
            .iter()
            .map(|v| self.partial_derivative(v).expect("declared variable"))
            .collect::<Vec<_>>()
    }

    /// Weighted total degree of a monomial: variables carry their context
    /// weight, parameters weight zero.
    fn weighted_degree(&self, m: &Monomial, weights: &[u32]) -> u64 {
        m.iter()
            .take(self.ctx.num_vars())
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    /// If every term has the same weighted degree, returns it.
    pub fn quasi_degree(&self) -> Result<u64> {
        let weights = self.ctx.weights().ok_or(Error::MissingWeights)?;
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut iter = self.terms.keys();
        let first = iter.next().unwrap();
        let k = self.weighted_degree(first, weights);
        for m in iter {
            let km = self.weighted_degree(m, weights);
            if km != k {
                return Err(Error::NotQuasiHomogeneous(
                    self.render_monomial(first),
                    self.render_monomial(m),
                ));
            }
        }
        Ok(k)
    }

    /// Total degree in the variables (parameters not counted); 0 for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().take(self.ctx.num_vars()).sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Exact division: returns `q` with `self = q * d`, verified by
    /// re-multiplication, or `NotDivisible`.
    pub fn exact_divide(&self, d: &Polynomial) -> Result<Polynomial> {
        same_context(&self.ctx, &d.ctx)?;
        if d.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let not_div = || Error::NotDivisible(d.render(), self.render());
        let (dm, dc) = d.leading_term_canonical();
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.ctx);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_term_canonical();
            let mut qm = vec![0u32; self.ctx.num_gens()];
            for i in 0..qm.len() {
                if rm[i] < dm[i] {
                    return Err(not_div());
                }
                qm[i] = rm[i] - dm[i];
            }
            let qc = &rc / &dc;
            let t = Self::from_terms(&self.ctx, [(qm, qc)]);
            rem = rem.sub(&t.mul(d)?)?;
            quot = quot.add(&t)?;
        }
        debug_assert_eq!(quot.mul(d).unwrap(), *self);
        Ok(quot)
    }

    /// Leading term under the canonical order (graded revlex on variables,
    /// ties broken by graded revlex on parameters).
    pub fn leading_term_canonical(&self) -> (Monomial, Rational) {
        let (m, c) = self
            .terms
            .iter()
            .max_by(|(a, _), (b, _)| self.canonical_cmp(a, b))
            .expect("nonzero polynomial");
        (m.clone(), c.clone())
    }

    /// Canonical monomial comparison used for rendering and plain division.
    pub fn canonical_cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let nv = self.ctx.num_vars();
        grevlex_cmp(&a[..nv], &b[..nv]).then_with(|| grevlex_cmp(&a[nv..], &b[nv..]))
    }

    /// Substitute rational values for a subset of generators (variables or
    /// parameters); remaining generators stay symbolic. The result lives in
    /// the same context.
    pub fn substitute(&self, values: &BTreeMap<String, Rational>) -> Result<Polynomial> {
        let mut idx_vals: Vec<(usize, Rational)> = Vec::new();
        for (name, v) in values {
            idx_vals.push((self.ctx.index_of(name)?, v.clone()));
        }
        let mut out = Self::zero(&self.ctx);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut m2 = m.clone();
            for (idx, v) in &idx_vals {
                let e = m2[*idx];
                if e > 0 {
                    coeff *= pow_rat(v, e);
                    m2[*idx] = 0;
                }
            }
            out.add_term(m2, coeff);
        }
        Ok(out)
    }

    /// Evaluate at a rational point covering every variable; parameters must
    /// already be specialized.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ctx.num_vars() {
            return Err(Error::Invalid(format!(
                "point has {} coordinates, expected {}",
                point.len(),
                self.ctx.num_vars()
            )));
        }
        if let Some(p) = self.some_parameter() {
            return Err(Error::ParameterNotSpecialized(p.to_string()));
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.iter().take(self.ctx.num_vars()).enumerate() {
                if e > 0 {
                    v *= pow_rat(&point[i], e);
                }
            }
            total += v;
        }
        Ok(total)
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, &e) in m.iter().enumerate() {
            if e == 1 {
                parts.push(self.ctx.gen_name(i).to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.ctx.gen_name(i), e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Canonical text form: terms in descending canonical order with explicit
    /// `*` and `^`. Parses back to the same polynomial.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut monos: Vec<&Monomial> = self.terms.keys().collect();
        monos.sort_by(|a, b| self.canonical_cmp(b, a));
        let mut out = String::new();
        for (i, m) in monos.iter().enumerate() {
            let c = &self.terms[*m];
            let mono = self.render_monomial(m);
            let abs = c.abs();
            let coeff_str = if abs.is_one() && mono != "1" {
                String::new()
            } else {
                render_rational(&abs)
            };
            let body = match (coeff_str.is_empty(), mono == "1") {
                (true, _) => mono,
                (false, true) => coeff_str,
                (false, false) => format!("{coeff_str}*{mono}"),
            };
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

pub fn render_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn pow_rat(v: &Rational, e: u32) -> Rational {
    let mut out = Rational::one();
    for _ in 0..e {
        out *= v;
    }
    out
}

/// Graded reverse lexicographic comparison of exponent slices.
pub fn grevlex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial whose last differing exponent is smaller wins.
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}
