//! Polyvector fields on an affine chart: wedge product, Schouten bracket,
//! interior contraction with exact one-forms, and Pfaffian extraction.
//!
//! A degree-k multivector is stored as polynomial coefficients indexed by
//! strictly increasing k-tuples of variable indices. The Schouten bracket is
//! computed in the odd-variable encoding: a polyvector is a polynomial in the
//! chart coordinates and odd generators, and the bracket is the odd Poisson
//! bracket pairing each odd generator with its coordinate.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::context::{same_context, VariableContext};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multivector {
    ctx: Arc<VariableContext>,
    degree: usize,
    components: BTreeMap<Vec<usize>, Polynomial>,
}

/// Sorts `indices` into strictly increasing order, returning the permutation
/// sign, or `None` when an index repeats.
fn sort_with_sign(mut indices: Vec<usize>) -> Option<(Vec<usize>, i8)> {
    let mut sign = 1i8;
    // Insertion sort; the swap count parity is the permutation sign.
    for i in 1..indices.len() {
        let mut j = i;
        while j > 0 && indices[j - 1] > indices[j] {
            indices.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    for w in indices.windows(2) {
        if w[0] == w[1] {
            return None;
        }
    }
    Some((indices, sign))
}

impl Multivector {
    pub fn zero(ctx: &Arc<VariableContext>, degree: usize) -> Self {
        Multivector {
            ctx: ctx.clone(),
            degree,
            components: BTreeMap::new(),
        }
    }

    /// A degree-0 multivector wrapping a function.
    pub fn scalar(p: Polynomial) -> Self {
        let ctx = p.context().clone();
        let mut out = Self::zero(&ctx, 0);
        out.add_component(vec![], p);
        out
    }

    /// The coordinate basis k-vector for the given (not necessarily sorted)
    /// indices, with the permutation sign absorbed into the coefficient.
    pub fn basis(ctx: &Arc<VariableContext>, indices: &[usize]) -> Result<Self> {
        for &i in indices {
            if i >= ctx.num_vars() {
                return Err(Error::Invalid(format!("variable index {i} out of range")));
            }
        }
        let mut out = Self::zero(ctx, indices.len());
        if let Some((sorted, sign)) = sort_with_sign(indices.to_vec()) {
            out.add_component(
                sorted,
                Polynomial::constant(ctx, BigRational::from(BigInt::from(sign))),
            );
        }
        Ok(out)
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        &self.ctx
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn components(&self) -> impl Iterator<Item = (&Vec<usize>, &Polynomial)> {
        self.components.iter()
    }

    pub fn component(&self, indices: &[usize]) -> Polynomial {
        self.components
            .get(indices)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.ctx))
    }

    /// Adds `coeff` at the (already sorted, strictly increasing) index tuple.
    pub fn add_component(&mut self, indices: Vec<usize>, coeff: Polynomial) {
        debug_assert_eq!(indices.len(), self.degree);
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.components.entry(indices) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff).expect("same context");
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Adds `coeff` at a possibly unsorted tuple, folding in the sign.
    pub fn add_signed(&mut self, indices: Vec<usize>, coeff: Polynomial) {
        if let Some((sorted, sign)) = sort_with_sign(indices) {
            let c = if sign < 0 { coeff.neg() } else { coeff };
            self.add_component(sorted, c);
        }
    }

    pub fn add(&self, other: &Multivector) -> Result<Multivector> {
        same_context(&self.ctx, &other.ctx)?;
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Invalid(format!(
                "cannot add multivectors of degree {} and {}",
                self.degree, other.degree
            )));
        }
        let mut out = self.clone();
        for (idx, c) in &other.components {
            out.add_component(idx.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Multivector) -> Result<Multivector> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Multivector {
        let mut out = Self::zero(&self.ctx, self.degree);
        if c.is_zero() {
            return out;
        }
        for (idx, p) in &self.components {
            out.components.insert(idx.clone(), p.scale(c));
        }
        out
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Result<Multivector> {
        same_context(&self.ctx, p.context())?;
        let mut out = Self::zero(&self.ctx, self.degree);
        for (idx, c) in &self.components {
            out.add_component(idx.clone(), c.mul(p)?);
        }
        Ok(out)
    }

    /// Exterior product with Koszul signs.
    pub fn wedge(&self, other: &Multivector) -> Result<Multivector> {
        same_context(&self.ctx, &other.ctx)?;
        let mut out = Self::zero(&self.ctx, self.degree + other.degree);
        for (ia, ca) in &self.components {
            for (ib, cb) in &other.components {
                let mut idx = ia.clone();
                idx.extend_from_slice(ib);
                out.add_signed(idx, ca.mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn wedge_power(&self, n: usize) -> Result<Multivector> {
        if n == 0 {
            return Ok(Multivector::scalar(Polynomial::one(&self.ctx)));
        }
        let mut out = self.clone();
        for _ in 1..n {
            out = out.wedge(self)?;
        }
        Ok(out)
    }

    /// Left odd derivative: d/dxi_j applied from the left.
    /// Returns (sign, remaining tuple) for each component containing j.
    fn odd_derivative(
        &self,
        left: bool,
    ) -> Vec<(usize, i8, Vec<usize>, &Polynomial)> {
        let mut out = Vec::new();
        let k = self.degree;
        for (idx, c) in &self.components {
            for (pos, &j) in idx.iter().enumerate() {
                let sign = if left {
                    if pos % 2 == 0 { 1 } else { -1 }
                } else if (k - 1 - pos) % 2 == 0 {
                    1
                } else {
                    -1
                };
                let mut rest = idx.clone();
                rest.remove(pos);
                out.push((j, sign, rest, c));
            }
        }
        out
    }

    /// Schouten-Nijenhuis bracket in the odd-variable encoding:
    /// [A,B] = sum_i (dR A/dxi_i)(dL B/dx_i) - (dA/dx_i)(dL B/dxi_i).
    /// For vector fields this is the Lie bracket; for a vector field and a
    /// function it is the directional derivative.
    pub fn schouten(&self, other: &Multivector) -> Result<Multivector> {
        same_context(&self.ctx, &other.ctx)?;
        let a = self.degree;
        let b = other.degree;
        let out_degree = (a + b).saturating_sub(1);
        let mut out = Self::zero(&self.ctx, out_degree);
        if a + b == 0 {
            return Ok(out);
        }
        let vars = self.ctx.variables();

        // sum_i (dR A / dxi_i) * (dL B / dx_i)
        for (j, sign, rest, coeff) in self.odd_derivative(false) {
            let db = other.partial_derivative_components(&vars[j])?;
            for (ib, cb) in &db {
                let prod = coeff.mul(cb)?;
                let prod = if sign < 0 { prod.neg() } else { prod };
                let mut idx = rest.clone();
                idx.extend_from_slice(ib);
                out.add_signed(idx, prod);
            }
        }

        // - sum_i (dA / dx_i) * (dL B / dxi_i)
        for (j, sign, rest, coeff) in other.odd_derivative(true) {
            for (ia, ca) in &self.components {
                let da = ca.partial_derivative(&vars[j])?;
                if da.is_zero() {
                    continue;
                }
                let prod = da.mul(coeff)?;
                let prod = if sign < 0 { prod } else { prod.neg() };
                // Koszul sign for moving the xi-monomial of A past nothing:
                // the x-derivative of A keeps A's xi-monomial in front.
                let mut idx = ia.clone();
                idx.extend_from_slice(&rest);
                out.add_signed(idx, prod);
            }
        }
        Ok(out)
    }

    /// Componentwise partial derivative (derivative of every coefficient).
    fn partial_derivative_components(
        &self,
        v: &str,
    ) -> Result<Vec<(Vec<usize>, Polynomial)>> {
        let mut out = Vec::new();
        for (idx, c) in &self.components {
            let d = c.partial_derivative(v)?;
            if !d.is_zero() {
                out.push((idx.clone(), d));
            }
        }
        Ok(out)
    }

    /// Interior product of the exact one-form dh into the multivector:
    /// on a basis k-vector it contracts each slot with (-1)^(pos) signs.
    pub fn contract_exact(&self, h: &Polynomial) -> Result<Multivector> {
        same_context(&self.ctx, h.context())?;
        if self.degree == 0 {
            return Err(Error::DegreeZero);
        }
        let grad: Vec<Polynomial> = h.gradient();
        let mut out = Self::zero(&self.ctx, self.degree - 1);
        for (idx, c) in &self.components {
            for (pos, &j) in idx.iter().enumerate() {
                if grad[j].is_zero() {
                    continue;
                }
                let mut rest = idx.clone();
                rest.remove(pos);
                let term = grad[j].mul(c)?;
                let term = if pos % 2 == 0 { term } else { term.neg() };
                out.add_component(rest, term);
            }
        }
        Ok(out)
    }

    /// For a bivector on 2m variables, the polynomial h with
    /// pi^m = m! * h * (d_1 ^ ... ^ d_2m); equals the Pfaffian of the skew
    /// coefficient matrix.
    pub fn pfaffian(&self) -> Result<Polynomial> {
        if self.degree != 2 {
            return Err(Error::NotBivector(self.degree));
        }
        let n = self.ctx.num_vars();
        if n % 2 != 0 {
            return Err(Error::OddDimension(n));
        }
        let m = n / 2;
        let top = self.wedge_power(m)?;
        let full: Vec<usize> = (0..n).collect();
        let comp = top.component(&full);
        let mut fact = BigInt::one();
        for i in 2..=m {
            fact *= BigInt::from(i);
        }
        Ok(comp.scale(&BigRational::new(BigInt::one(), fact)))
    }

    /// Skew coefficient matrix of a bivector: entry (i,j) is the coefficient
    /// of d_i ^ d_j (negated below the diagonal).
    pub fn coefficient_matrix(&self) -> Result<Vec<Vec<Polynomial>>> {
        if self.degree != 2 {
            return Err(Error::NotBivector(self.degree));
        }
        let n = self.ctx.num_vars();
        let mut mat = vec![vec![Polynomial::zero(&self.ctx); n]; n];
        for (idx, c) in &self.components {
            let (i, j) = (idx[0], idx[1]);
            mat[i][j] = c.clone();
            mat[j][i] = c.neg();
        }
        Ok(mat)
    }

    /// Evaluates every component at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Vec<(Vec<usize>, Rational)>> {
        let mut out = Vec::new();
        for (idx, c) in &self.components {
            out.push((idx.clone(), c.evaluate(point)?));
        }
        Ok(out)
    }

    /// True if some component is nonzero at the point.
    pub fn nonzero_at(&self, point: &[Rational]) -> Result<bool> {
        Ok(self
            .evaluate(point)?
            .iter()
            .any(|(_, v)| !v.is_zero()))
    }

    /// Divergence of a vector field with respect to the coordinate volume.
    pub fn divergence(&self) -> Result<Polynomial> {
        if self.degree != 1 {
            return Err(Error::Invalid(format!(
                "divergence needs a vector field, got degree {}",
                self.degree
            )));
        }
        let mut out = Polynomial::zero(&self.ctx);
        for (idx, c) in &self.components {
            let v = self.ctx.variables()[idx[0]].clone();
            out = out.add(&c.partial_derivative(&v)?)?;
        }
        Ok(out)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.components {
            let basis: Vec<String> = idx
                .iter()
                .map(|&i| format!("d/d{}", self.ctx.variables()[i]))
                .collect();
            let tag = basis.join("^");
            if idx.is_empty() {
                parts.push(c.render());
            } else if c.num_terms() == 1 {
                match c.render().as_str() {
                    "1" => parts.push(tag),
                    "-1" => parts.push(format!("-{tag}")),
                    r => parts.push(format!("{r}*{tag}")),
                }
            } else {
                parts.push(format!("({})*{}", c.render(), tag));
            }
        }
        parts.join(" + ")
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
