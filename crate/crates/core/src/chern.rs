//! Integer Chern-class arithmetic in two truncated cohomology rings:
//! degree-d hypersurfaces X in P^5 (ring Z[H]/(H^5) with H^4 pairing to d)
//! and products P^1 x W for W a degree-d hypersurface in P^4 (ring
//! Z[A,B]/(A^2, B^4) with A B^3 pairing to d).

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingTag {
    /// X^{m-2} in P^{m-1}; the total Chern class is (1+H)^m (1+dH)^{-1}.
    Hypersurface { ambient: usize, degree: i64 },
    /// P^1 x W with W in P^4; total Chern class (1+A)^2 (1+B)^5 (1+dB)^{-1}.
    ProductP1 { degree: i64 },
}

impl RingTag {
    pub fn hypersurface(degree: i64) -> Self {
        RingTag::Hypersurface { ambient: 6, degree }
    }

    pub fn product_p1(degree: i64) -> Self {
        RingTag::ProductP1 { degree }
    }

    pub fn degree(&self) -> i64 {
        match self {
            RingTag::Hypersurface { degree, .. } => *degree,
            RingTag::ProductP1 { degree } => *degree,
        }
    }

    fn dim(&self) -> usize {
        match self {
            RingTag::Hypersurface { ambient, .. } => ambient - 2,
            RingTag::ProductP1 { .. } => 4,
        }
    }
}

/// An element of the truncated ring, with exact integer coefficients.
/// Hypersurface rings are spanned by 1, H, ..., H^dim; product rings by
/// A^i B^j with i <= 1, j <= 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyElement {
    pub tag: RingTag,
    coeffs: Vec<i64>,
}

impl CohomologyElement {
    pub fn zero(tag: RingTag) -> Self {
        let len = match tag {
            RingTag::Hypersurface { .. } => tag.dim() + 1,
            RingTag::ProductP1 { .. } => 8,
        };
        CohomologyElement {
            tag,
            coeffs: vec![0; len],
        }
    }

    pub fn one(tag: RingTag) -> Self {
        let mut e = Self::zero(tag);
        e.coeffs[0] = 1;
        e
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(matches!(self.tag, RingTag::ProductP1 { .. }));
        i * 4 + j
    }

    /// Coefficient of H^k in a hypersurface ring.
    pub fn h_coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Coefficient of A^i B^j in a product ring.
    pub fn ab_coeff(&self, i: usize, j: usize) -> i64 {
        if i > 1 || j > 3 {
            return 0;
        }
        self.coeffs[self.slot(i, j)]
    }

    pub fn set_h(&mut self, k: usize, c: i64) {
        self.coeffs[k] = c;
    }

    pub fn set_ab(&mut self, i: usize, j: usize, c: i64) {
        let s = self.slot(i, j);
        self.coeffs[s] = c;
    }

    pub fn add(&self, other: &CohomologyElement) -> Result<CohomologyElement> {
        if self.tag != other.tag {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CohomologyElement) -> Result<CohomologyElement> {
        if self.tag != other.tag {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a -= b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> CohomologyElement {
        let mut out = self.clone();
        for a in out.coeffs.iter_mut() {
            *a *= c;
        }
        out
    }

    /// Truncated ring product.
    pub fn mul(&self, other: &CohomologyElement) -> Result<CohomologyElement> {
        if self.tag != other.tag {
            return Err(Error::ContextMismatch);
        }
        let mut out = Self::zero(self.tag);
        match self.tag {
            RingTag::Hypersurface { .. } => {
                let dim = self.tag.dim();
                for i in 0..=dim {
                    for j in 0..=dim {
                        if i + j <= dim {
                            out.coeffs[i + j] += self.coeffs[i] * other.coeffs[j];
                        }
                    }
                }
            }
            RingTag::ProductP1 { .. } => {
                for i1 in 0..2 {
                    for j1 in 0..4 {
                        for i2 in 0..2 {
                            for j2 in 0..4 {
                                if i1 + i2 <= 1 && j1 + j2 <= 3 {
                                    let c = self.ab_coeff(i1, j1) * other.ab_coeff(i2, j2);
                                    out.coeffs[(i1 + i2) * 4 + j1 + j2] += c;
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The part of cohomological degree k (in the H-grading, where A, B and H
    /// all have degree 1).
    pub fn graded_part(&self, k: usize) -> CohomologyElement {
        let mut out = Self::zero(self.tag);
        match self.tag {
            RingTag::Hypersurface { .. } => {
                if k < self.coeffs.len() {
                    out.coeffs[k] = self.coeffs[k];
                }
            }
            RingTag::ProductP1 { .. } => {
                for i in 0..2 {
                    for j in 0..4 {
                        if i + j == k {
                            out.coeffs[i * 4 + j] = self.ab_coeff(i, j);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_homogeneous_of_degree(&self, k: usize) -> bool {
        self.graded_part(k) == *self && !self.is_zero()
    }

    pub fn render(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        let push = |parts: &mut Vec<String>, c: i64, basis: &str| {
            if c == 0 {
                return;
            }
            let lead = if parts.is_empty() {
                if c < 0 {
                    "-".to_string()
                } else {
                    String::new()
                }
            } else if c < 0 {
                " - ".to_string()
            } else {
                " + ".to_string()
            };
            let mag = c.abs();
            let body = if basis.is_empty() {
                format!("{mag}")
            } else if mag == 1 {
                basis.to_string()
            } else {
                format!("{mag}*{basis}")
            };
            parts.push(format!("{lead}{body}"));
        };
        match self.tag {
            RingTag::Hypersurface { .. } => {
                for k in 0..self.coeffs.len() {
                    let basis = match k {
                        0 => String::new(),
                        1 => "H".to_string(),
                        _ => format!("H^{k}"),
                    };
                    push(&mut parts, self.coeffs[k], &basis);
                }
            }
            RingTag::ProductP1 { .. } => {
                for k in 0..=4 {
                    for i in (0..2usize).rev() {
                        for j in 0..4usize {
                            if i + j != k {
                                continue;
                            }
                            let mut basis = String::new();
                            if i == 1 {
                                basis.push('A');
                            }
                            if j >= 1 {
                                if !basis.is_empty() {
                                    basis.push('*');
                                }
                                basis.push('B');
                                if j > 1 {
                                    basis.push_str(&format!("^{j}"));
                                }
                            }
                            push(&mut parts, self.ab_coeff(i, j), &basis);
                        }
                    }
                }
            }
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.concat()
        }
    }
}

/// The total Chern class of the tangent bundle for the given family member.
pub fn total_chern(tag: RingTag) -> CohomologyElement {
    let d = tag.degree();
    match tag {
        RingTag::Hypersurface { ambient, .. } => {
            let dim = tag.dim();
            // (1+H)^ambient * (1 + dH)^{-1}, the inverse as a geometric series.
            let mut out = CohomologyElement::zero(tag);
            for k in 0..=dim {
                let mut c = 0i64;
                for i in 0..=k {
                    c += binomial(ambient as i64, i as i64) * neg_pow(d, k - i);
                }
                out.coeffs[k] = c;
            }
            out
        }
        RingTag::ProductP1 { .. } => {
            let mut out = CohomologyElement::zero(tag);
            for i in 0..2usize {
                for j in 0..4usize {
                    // coefficient of A^i B^j in (1+A)^2 (1+B)^5 (1+dB)^{-1}
                    let a = binomial(2, i as i64);
                    let mut b = 0i64;
                    for s in 0..=j {
                        b += binomial(5, s as i64) * neg_pow(d, j - s);
                    }
                    out.coeffs[i * 4 + j] = a * b;
                }
            }
            out
        }
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// (-d)^k
fn neg_pow(d: i64, k: usize) -> i64 {
    let mut acc = 1i64;
    for _ in 0..k {
        acc *= -d;
    }
    acc
}

/// The codimension-3 class c1 c2 - c3 of a total Chern class.
pub fn c1c2_minus_c3(c: &CohomologyElement) -> Result<CohomologyElement> {
    if c.graded_part(0) != CohomologyElement::one(c.tag) {
        return Err(Error::NotTotalChernClass);
    }
    let c1 = c.graded_part(1);
    let c2 = c.graded_part(2);
    let c3 = c.graded_part(3);
    c1.mul(&c2)?.sub(&c3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NefClass {
    H,
    A,
    B,
}

impl NefClass {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "H" | "h" => Ok(NefClass::H),
            "A" | "a" => Ok(NefClass::A),
            "B" | "b" => Ok(NefClass::B),
            other => Err(Error::Invalid(format!(
                "unknown nef class `{other}` (expected H, A or B)"
            ))),
        }
    }
}

/// Multiplies a homogeneous degree-3 class by the nef divisor class and
/// evaluates against the fundamental class.
pub fn pair_with(c: &CohomologyElement, nef: NefClass) -> Result<i64> {
    let top = c.tag.dim() - 1;
    if !c.is_homogeneous_of_degree(top) {
        return Err(Error::WrongDegree);
    }
    let d = c.tag.degree();
    let mut nef_class = CohomologyElement::zero(c.tag);
    match (c.tag, nef) {
        (RingTag::Hypersurface { .. }, NefClass::H) => nef_class.set_h(1, 1),
        (RingTag::ProductP1 { .. }, NefClass::A) => nef_class.set_ab(1, 0, 1),
        (RingTag::ProductP1 { .. }, NefClass::B) => nef_class.set_ab(0, 1, 1),
        _ => {
            return Err(Error::Invalid(
                "nef class does not live in this ring".into(),
            ))
        }
    }
    let product = c.mul(&nef_class)?;
    // The fundamental-class pairing reads off the top monomial times d.
    let top_coeff = match c.tag {
        RingTag::Hypersurface { .. } => product.h_coeff(c.tag.dim()),
        RingTag::ProductP1 { .. } => product.ab_coeff(1, 3),
    };
    Ok(top_coeff * d)
}
