//! Poisson-structure analysis: construction from bracket tables, the Jacobi
//! obstruction, degeneracy divisors, modular vector fields, log-tangency,
//! ellipticity classification and the elliptic normal forms on C^4.

use std::collections::BTreeMap;
use std::sync::Arc;

use num::Zero;

use crate::context::{same_context, VariableContext};
use crate::error::{Error, Result};
use crate::groebner::{groebner, milnor_number, Budget, MonomialOrder};
use crate::multivector::Multivector;
use crate::poly::{rat, rat_int, Polynomial, Rational};

#[derive(Debug, Clone)]
pub enum JacobiStatus {
    Unchecked,
    Holds,
    Fails(Multivector),
}

/// A bivector together with its (cached) Jacobi status.
#[derive(Debug, Clone)]
pub struct PoissonStructure {
    bivector: Multivector,
    jacobi: JacobiStatus,
}

impl PoissonStructure {
    pub fn new(bivector: Multivector) -> Result<Self> {
        if bivector.degree() != 2 {
            return Err(Error::NotBivector(bivector.degree()));
        }
        Ok(PoissonStructure {
            bivector,
            jacobi: JacobiStatus::Unchecked,
        })
    }

    pub fn bivector(&self) -> &Multivector {
        &self.bivector
    }

    pub fn context(&self) -> &Arc<VariableContext> {
        self.bivector.context()
    }

    pub fn jacobi_status(&self) -> &JacobiStatus {
        &self.jacobi
    }

    /// The trivector [pi,pi]; zero iff the brackets satisfy the Jacobi
    /// identity for every value of the parameters.
    pub fn jacobi_obstruction(&mut self) -> Result<Multivector> {
        let tri = self.bivector.schouten(&self.bivector)?;
        self.jacobi = if tri.is_zero() {
            JacobiStatus::Holds
        } else {
            JacobiStatus::Fails(tri.clone())
        };
        Ok(tri)
    }

    /// The Pfaffian h of the bivector plus a squarefree certificate: true iff
    /// the singular locus of h has codimension >= 2 in the ambient space
    /// (checked at fixed rational parameter samples when parameters occur).
    pub fn degeneracy_divisor(&self, budget: &Budget) -> Result<(Polynomial, bool)> {
        let h = self.bivector.pfaffian()?;
        if h.is_zero() {
            return Ok((h, false));
        }
        let ctx = h.context().clone();
        let nvars = ctx.num_vars() as i64;
        let samples = parameter_samples(&ctx);
        let mut proxy = true;
        for sample in &samples {
            let hs = h.substitute(sample)?;
            if hs.is_zero() {
                proxy = false;
                continue;
            }
            let mut gens = vec![hs.clone()];
            gens.extend(hs.gradient());
            let basis = groebner(&gens, &MonomialOrder::degrevlex(&ctx), budget)?;
            if basis.krull_dimension() > nvars - 2 {
                proxy = false;
            }
        }
        Ok((h, proxy))
    }

    /// The modular vector field Z with respect to the standard coordinate
    /// volume: Z = h^{-1} iota_dh(pi) where h is the Pfaffian.
    pub fn modular_field(&self) -> Result<Multivector> {
        let h = self.bivector.pfaffian()?;
        if h.is_zero() {
            return Err(Error::ZeroPfaffian);
        }
        let ctx = self.context().clone();
        let contracted = self.bivector.contract_exact(&h)?;
        let mut z = Multivector::zero(&ctx, 1);
        for (idx, coeff) in contracted.components() {
            let q = coeff.exact_divide(&h).map_err(|_| {
                Error::NotLogarithmic(ctx.gen_name(idx[0]).to_string())
            })?;
            z.add_component(idx.clone(), q);
        }
        Ok(z)
    }

    /// Ellipticity test at a rational point of a 4-dimensional chart.
    pub fn ellipticity_report(&self, point: &[Rational], budget: &Budget) -> Result<EllipticityReport> {
        let ctx = self.context().clone();
        if ctx.num_vars() != 4 {
            return Err(Error::WrongDimension {
                expected: 4,
                got: ctx.num_vars(),
            });
        }
        for (_, coeff) in self.bivector.components() {
            if let Some(name) = coeff.some_parameter() {
                return Err(Error::ParameterNotSpecialized(name.to_string()));
            }
        }
        if point.len() != 4 {
            return Err(Error::WrongDimension {
                expected: 4,
                got: point.len(),
            });
        }
        let h = self.bivector.pfaffian()?;
        if h.is_zero() {
            return Ok(EllipticityReport {
                point: point.to_vec(),
                divisor_singular_at_point: false,
                normal_proxy: false,
                modular_nonzero: false,
                verdict: Verdict::NotApplicable(
                    "the Pfaffian vanishes identically; the structure is nowhere symplectic".into(),
                ),
            });
        }
        let h_at = h.evaluate(point)?;
        let grad_vanishes = h
            .gradient()
            .iter()
            .map(|g| g.evaluate(point))
            .collect::<Result<Vec<_>>>()?
            .iter()
            .all(|v| v.is_zero());
        let in_sing = h_at.is_zero() && grad_vanishes;
        if !in_sing {
            return Ok(EllipticityReport {
                point: point.to_vec(),
                divisor_singular_at_point: false,
                normal_proxy: false,
                modular_nonzero: false,
                verdict: Verdict::NotApplicable(
                    "the point is not a singular point of the degeneracy divisor".into(),
                ),
            });
        }
        let mut gens = vec![h.clone()];
        gens.extend(h.gradient());
        let basis = groebner(&gens, &MonomialOrder::degrevlex(&ctx), budget)?;
        let normal_proxy = basis.krull_dimension() <= 1;
        let z = self.modular_field()?;
        let modular_nonzero = z.nonzero_at(point)?;
        let verdict = if normal_proxy && modular_nonzero {
            Verdict::Elliptic
        } else if !normal_proxy {
            Verdict::NotElliptic(
                "the singular locus of the degeneracy divisor has dimension > 1".into(),
            )
        } else {
            Verdict::NotElliptic("the modular vector field vanishes at the point".into())
        };
        Ok(EllipticityReport {
            point: point.to_vec(),
            divisor_singular_at_point: true,
            normal_proxy,
            modular_nonzero,
            verdict,
        })
    }
}

/// Deterministic joint rational specializations used when a computation
/// needs parameter-free input but the structure carries parameters.
fn parameter_samples(ctx: &VariableContext) -> Vec<BTreeMap<String, Rational>> {
    if ctx.num_params() == 0 {
        return vec![BTreeMap::new()];
    }
    let seeds: [Rational; 3] = [rat_int(2), rat_int(-3), rat(5, 7)];
    seeds
        .iter()
        .map(|seed| {
            ctx.parameters()
                .iter()
                .enumerate()
                .map(|(i, name)| (name.clone(), seed + rat_int(i as i64)))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Elliptic,
    NotElliptic(String),
    NotApplicable(String),
}

#[derive(Debug, Clone)]
pub struct EllipticityReport {
    pub point: Vec<Rational>,
    /// True iff the point lies in the singular locus of the degeneracy divisor.
    pub divisor_singular_at_point: bool,
    /// True iff the singular locus of the divisor has dimension <= 1.
    pub normal_proxy: bool,
    /// True iff the modular vector field is nonzero at the point.
    pub modular_nonzero: bool,
    pub verdict: Verdict,
}

/// Builds a bivector from a table of brackets {x_i, x_j} = p_ij.
/// Unspecified pairs default to zero; keys may come in either order.
pub fn from_brackets<I>(ctx: &Arc<VariableContext>, table: I) -> Result<PoissonStructure>
where
    I: IntoIterator<Item = ((String, String), Polynomial)>,
{
    let mut components: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
    for ((u, v), p) in table {
        same_context(ctx, p.context())?;
        let i = ctx.variable_index(&u)?;
        let j = ctx.variable_index(&v)?;
        if i == j {
            return Err(Error::SelfPair(u));
        }
        let (key, value) = if i < j { ((i, j), p) } else { ((j, i), p.neg()) };
        match components.get(&key) {
            None => {
                components.insert(key, value);
            }
            Some(existing) if *existing == value => {}
            Some(_) => {
                return Err(Error::DuplicateConflictingPair(u, v));
            }
        }
    }
    let mut bivector = Multivector::zero(ctx, 2);
    for ((i, j), p) in components {
        bivector.add_component(vec![i, j], p);
    }
    PoissonStructure::new(bivector)
}

/// True iff every component of iota_dh(A) is divisible by h, i.e. A is
/// tangent to the principal divisor cut out by h.
pub fn is_log_tangent(a: &Multivector, h: &Polynomial) -> Result<bool> {
    if h.is_zero() {
        return Err(Error::DivisionByZeroPolynomial);
    }
    let contracted = a.contract_exact(h)?;
    for (_, coeff) in contracted.components() {
        if coeff.exact_divide(h).is_err() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingularityLabel {
    E6tilde,
    E7tilde,
    E8tilde,
}

impl SingularityLabel {
    pub fn name(&self) -> &'static str {
        match self {
            SingularityLabel::E6tilde => "E6~",
            SingularityLabel::E7tilde => "E7~",
            SingularityLabel::E8tilde => "E8~",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "e6" | "e6~" | "e6tilde" => Ok(SingularityLabel::E6tilde),
            "e7" | "e7~" | "e7tilde" => Ok(SingularityLabel::E7tilde),
            "e8" | "e8~" | "e8tilde" => Ok(SingularityLabel::E8tilde),
            other => Err(Error::Invalid(format!(
                "unknown singularity type `{other}` (expected e6, e7 or e8)"
            ))),
        }
    }
}

/// One row of the simple-elliptic table: type, weights, quasi-homogeneous
/// degree and Milnor number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SingularityType {
    pub label: SingularityLabel,
    pub weights: (u32, u32, u32),
    pub degree: u32,
    pub milnor: u64,
}

impl SingularityType {
    pub fn of(label: SingularityLabel) -> Self {
        match label {
            SingularityLabel::E6tilde => SingularityType {
                label,
                weights: (1, 1, 1),
                degree: 3,
                milnor: 8,
            },
            SingularityLabel::E7tilde => SingularityType {
                label,
                weights: (1, 1, 2),
                degree: 4,
                milnor: 9,
            },
            SingularityLabel::E8tilde => SingularityType {
                label,
                weights: (1, 2, 3),
                degree: 6,
                milnor: 10,
            },
        }
    }

    pub fn all() -> [SingularityType; 3] {
        [
            SingularityType::of(SingularityLabel::E6tilde),
            SingularityType::of(SingularityLabel::E7tilde),
            SingularityType::of(SingularityLabel::E8tilde),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Classified(SingularityType),
    Unclassified(String),
}

/// Matches a 3-variable polynomial against the simple-elliptic table:
/// quasi-homogeneous of degree a+b+c with the table's Milnor number.
pub fn classify_singularity(
    f: &Polynomial,
    weights: (u32, u32, u32),
    budget: &Budget,
) -> Result<Classification> {
    let old = f.context().clone();
    if old.num_vars() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            got: old.num_vars(),
        });
    }
    if let Some(name) = f.some_parameter() {
        return Err(Error::ParameterNotSpecialized(name.to_string()));
    }
    let (a, b, c) = weights;
    let ctx = VariableContext::with_weights(
        old.variables().to_vec(),
        Vec::<String>::new(),
        [a, b, c],
    )?;
    let f = Polynomial::from_terms(
        &ctx,
        f.terms().map(|(m, coeff)| (m[..3].to_vec(), coeff.clone())),
    );
    let k = f.quasi_degree()?;
    let mu = match milnor_number(&f, budget)? {
        Some(mu) => mu,
        None => return Err(Error::NonIsolated),
    };
    if k != (a + b + c) as u64 {
        return Ok(Classification::Unclassified(format!(
            "quasi-homogeneous degree {k} differs from the weight sum {}",
            a + b + c
        )));
    }
    let mut sorted = [a, b, c];
    sorted.sort_unstable();
    for t in SingularityType::all() {
        if sorted == [t.weights.0, t.weights.1, t.weights.2] && mu == t.milnor {
            return Ok(Classification::Classified(t));
        }
    }
    Ok(Classification::Unclassified(format!(
        "weights ({a},{b},{c}) with Milnor number {mu} match no simple elliptic type"
    )))
}

/// The table polynomial f for a singularity type, with tau given as an
/// arbitrary element of the ring (a rational constant or a parameter).
pub fn table_polynomial(
    t: &SingularityType,
    ctx: &Arc<VariableContext>,
    tau: &Polynomial,
) -> Result<Polynomial> {
    let nv = ctx.num_vars();
    // Variables x,y,z are the last three in the chart (after w when present).
    let (x, y, z) = (
        Polynomial::generator(ctx, ctx.variables()[nv - 3].as_str())?,
        Polynomial::generator(ctx, ctx.variables()[nv - 2].as_str())?,
        Polynomial::generator(ctx, ctx.variables()[nv - 1].as_str())?,
    );
    let xyz = x.mul(&y)?.mul(&z)?;
    let body = match t.label {
        SingularityLabel::E6tilde => x.pow(3).add(&y.pow(3))?.add(&z.pow(3))?,
        SingularityLabel::E7tilde => x.pow(4).add(&y.pow(4))?.add(&z.pow(2))?,
        SingularityLabel::E8tilde => x.pow(6).add(&y.pow(3))?.add(&z.pow(2))?,
    };
    body.add(&tau.mul(&xyz)?)
}

fn normal_form_table(
    t: &SingularityType,
    ctx: &Arc<VariableContext>,
    lambda: &Polynomial,
    tau: &Polynomial,
) -> Result<Vec<((String, String), Polynomial)>> {
    let f = table_polynomial(t, ctx, tau)?;
    let (a, b, c) = t.weights;
    let vars = ctx.variables();
    let (w, x, y, z) = (vars[0].clone(), vars[1].clone(), vars[2].clone(), vars[3].clone());
    let gen = |name: &str| Polynomial::generator(ctx, name);
    let scaled = |v: &str, s: u32| -> Result<Polynomial> {
        Ok(gen(v)?.scale(&rat_int(s as i64)))
    };
    Ok(vec![
        ((w.clone(), x.clone()), scaled(&x, a)?),
        ((w.clone(), y.clone()), scaled(&y, b)?),
        ((w.clone(), z.clone()), scaled(&z, c)?),
        ((x.clone(), y.clone()), lambda.mul(&f.partial_derivative(&z)?)?),
        ((y.clone(), z.clone()), lambda.mul(&f.partial_derivative(&x)?)?),
        ((z.clone(), x.clone()), lambda.mul(&f.partial_derivative(&y)?)?),
    ])
}

/// The elliptic normal form on C^4 at specific rational lambda != 0 and tau:
/// {w,x} = ax, {w,y} = by, {w,z} = cz, {x,y} = lambda f_z, {y,z} = lambda f_x,
/// {z,x} = lambda f_y.
pub fn normal_form_structure(
    label: SingularityLabel,
    lambda: &Rational,
    tau: &Rational,
) -> Result<PoissonStructure> {
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    let t = SingularityType::of(label);
    let ctx = VariableContext::new(vec!["w", "x", "y", "z"], Vec::<&str>::new())?;
    let table = normal_form_table(
        &t,
        &ctx,
        &Polynomial::constant(&ctx, lambda.clone()),
        &Polynomial::constant(&ctx, tau.clone()),
    )?;
    from_brackets(&ctx, table)
}

/// The elliptic normal form with lambda and tau left symbolic, as parameters
/// `lam` and `tau`.
pub fn normal_form_structure_symbolic(label: SingularityLabel) -> Result<PoissonStructure> {
    let t = SingularityType::of(label);
    let ctx = VariableContext::new(vec!["w", "x", "y", "z"], vec!["lam", "tau"])?;
    let table = normal_form_table(
        &t,
        &ctx,
        &Polynomial::generator(&ctx, "lam")?,
        &Polynomial::generator(&ctx, "tau")?,
    )?;
    from_brackets(&ctx, table)
}

/// The toric log symplectic example: pi = sum_{i<j} lambda_ij x_i x_j d_i ^ d_j
/// for a skew family of rational coefficients given on pairs i < j.
pub fn toric_structure(
    ctx: &Arc<VariableContext>,
    lambdas: &[((usize, usize), Rational)],
) -> Result<PoissonStructure> {
    let mut bivector = Multivector::zero(ctx, 2);
    for &((i, j), ref l) in lambdas {
        if i >= j || j >= ctx.num_vars() {
            return Err(Error::Invalid(format!("bad index pair ({i},{j})")));
        }
        let xi = Polynomial::generator(ctx, ctx.variables()[i].as_str())?;
        let xj = Polynomial::generator(ctx, ctx.variables()[j].as_str())?;
        bivector.add_component(vec![i, j], xi.mul(&xj)?.scale(l));
    }
    PoissonStructure::new(bivector)
}

/// The bracket table of the product C x (cone over a plane cubic), with
/// symbolic coefficients eta, nu: {w,x} = x, {w,y} = y, {w,z} = z,
/// {y,z} = eta x^2 + nu yz, {z,x} = eta y^2 + nu zx, {x,y} = eta z^2 + nu xy.
pub fn cubic_cone_structure_symbolic() -> Result<PoissonStructure> {
    let ctx = VariableContext::new(vec!["w", "x", "y", "z"], vec!["eta", "nu"])?;
    let p = |s: &str| crate::parse::parse_poly(s, &ctx);
    let table = vec![
        (("w".into(), "x".into()), p("x")?),
        (("w".into(), "y".into()), p("y")?),
        (("w".into(), "z".into()), p("z")?),
        (("y".into(), "z".into()), p("eta*x^2 + nu*y*z")?),
        (("z".into(), "x".into()), p("eta*y^2 + nu*z*x")?),
        (("x".into(), "y".into()), p("eta*z^2 + nu*x*y")?),
    ];
    from_brackets(&ctx, table)
}

/// Same structure at specific rational eta, nu.
pub fn cubic_cone_structure(eta: &Rational, nu: &Rational) -> Result<PoissonStructure> {
    let sym = cubic_cone_structure_symbolic()?;
    let ctx = VariableContext::new(vec!["w", "x", "y", "z"], Vec::<&str>::new())?;
    let subs: BTreeMap<String, Rational> = [
        ("eta".to_string(), eta.clone()),
        ("nu".to_string(), nu.clone()),
    ]
    .into();
    let mut bivector = Multivector::zero(&ctx, 2);
    for (idx, coeff) in sym.bivector().components() {
        let specialized = coeff.substitute(&subs)?;
        let moved = Polynomial::from_terms(
            &ctx,
            specialized
                .terms()
                .map(|(m, c)| (m[..4].to_vec(), c.clone())),
        );
        bivector.add_component(idx.clone(), moved);
    }
    PoissonStructure::new(bivector)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use num::One;

    fn budget() -> Budget {
        Budget::default()
    }

    #[test]
    fn cubic_cone_jacobi_holds_symbolically() {
        let mut p = cubic_cone_structure_symbolic().unwrap();
        assert!(p.jacobi_obstruction().unwrap().is_zero());
        assert!(matches!(p.jacobi_status(), JacobiStatus::Holds));
    }

    #[test]
    fn cubic_cone_pfaffian_is_cubic_cone() {
        let p = cubic_cone_structure(&rat_int(3), &rat_int(1)).unwrap();
        let (h, proxy) = p.degeneracy_divisor(&budget()).unwrap();
        let ctx = p.context().clone();
        let f = parse_poly("x^3+y^3+z^3+x*y*z", &ctx).unwrap();
        let q = h.exact_divide(&f).unwrap();
        assert!(q.is_constant() && !q.is_zero());
        assert!(proxy);
    }

    #[test]
    fn normal_forms_jacobi_holds_symbolically() {
        for label in [
            SingularityLabel::E6tilde,
            SingularityLabel::E7tilde,
            SingularityLabel::E8tilde,
        ] {
            let mut p = normal_form_structure_symbolic(label).unwrap();
            assert!(p.jacobi_obstruction().unwrap().is_zero(), "{label:?}");
        }
    }

    #[test]
    fn toric_is_poisson_and_not_elliptic() {
        let ctx = VariableContext::new(vec!["x1", "x2", "x3", "x4"], Vec::<&str>::new()).unwrap();
        let lambdas = vec![
            (((0usize, 1usize)), rat(1, 2)),
            (((0, 2)), rat_int(3)),
            (((0, 3)), rat(-2, 5)),
            (((1, 2)), rat_int(1)),
            (((1, 3)), rat(7, 3)),
            (((2, 3)), rat_int(-4)),
        ];
        let mut p = toric_structure(&ctx, &lambdas).unwrap();
        assert!(p.jacobi_obstruction().unwrap().is_zero());
        let origin = vec![rat_int(0); 4];
        let report = p.ellipticity_report(&origin, &budget()).unwrap();
        assert!(report.divisor_singular_at_point);
        assert!(!report.normal_proxy);
        assert!(matches!(report.verdict, Verdict::NotElliptic(_)));
    }

    #[test]
    fn non_jacobi_bivector_has_nonzero_obstruction() {
        // {x,y} = z, {y,z} = y fails the Jacobi identity.
        let ctx = VariableContext::new(vec!["x", "y", "z"], Vec::<&str>::new()).unwrap();
        let mut p = from_brackets(
            &ctx,
            vec![
                (("x".to_string(), "y".to_string()), parse_poly("z", &ctx).unwrap()),
                (("y".to_string(), "z".to_string()), parse_poly("y", &ctx).unwrap()),
            ],
        )
        .unwrap();
        assert!(!p.jacobi_obstruction().unwrap().is_zero());
        assert!(matches!(p.jacobi_status(), JacobiStatus::Fails(_)));
    }

    #[test]
    fn conflicting_pair_rejected() {
        let ctx = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        let r = from_brackets(
            &ctx,
            vec![
                (("x".to_string(), "y".to_string()), parse_poly("x", &ctx).unwrap()),
                (("y".to_string(), "x".to_string()), parse_poly("x", &ctx).unwrap()),
            ],
        );
        assert!(matches!(r, Err(Error::DuplicateConflictingPair(..))));
        let ok = from_brackets(
            &ctx,
            vec![
                (("x".to_string(), "y".to_string()), parse_poly("x", &ctx).unwrap()),
                (("y".to_string(), "x".to_string()), parse_poly("-x", &ctx).unwrap()),
            ],
        );
        assert!(ok.is_ok());
        let selfpair = from_brackets(
            &ctx,
            vec![(("x".to_string(), "x".to_string()), parse_poly("y", &ctx).unwrap())],
        );
        assert!(matches!(selfpair, Err(Error::SelfPair(_))));
    }

    #[test]
    fn log_darboux_divisor_and_modular_field() {
        // pi = x1 d_x1 ^ d_y1, the inverse of dx1/x1 ^ dy1.
        let ctx = VariableContext::new(vec!["x1", "y1"], Vec::<&str>::new()).unwrap();
        let mut bivector = Multivector::zero(&ctx, 2);
        bivector.add_component(vec![0, 1], parse_poly("x1", &ctx).unwrap());
        let p = PoissonStructure::new(bivector).unwrap();
        let (h, proxy) = p.degeneracy_divisor(&budget()).unwrap();
        assert_eq!(h, parse_poly("x1", &ctx).unwrap());
        assert!(proxy);
        let z = p.modular_field().unwrap();
        assert!(z.component(&[0]).is_zero());
        let zy = z.component(&[1]);
        assert!(zy.is_constant() && !zy.is_zero());
    }

    #[test]
    fn zero_bivector_divisor() {
        let ctx = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        let p = PoissonStructure::new(Multivector::zero(&ctx, 2)).unwrap();
        let (h, proxy) = p.degeneracy_divisor(&budget()).unwrap();
        assert!(h.is_zero());
        assert!(!proxy);
        assert!(matches!(p.modular_field(), Err(Error::ZeroPfaffian)));
    }

    #[test]
    fn nondegenerate_constant_structure_has_zero_modular_field() {
        let ctx = VariableContext::new(vec!["x1", "x2", "x3", "x4"], Vec::<&str>::new()).unwrap();
        let mut bivector = Multivector::zero(&ctx, 2);
        bivector.add_component(vec![0, 1], Polynomial::one(&ctx));
        bivector.add_component(vec![2, 3], Polynomial::one(&ctx));
        let p = PoissonStructure::new(bivector).unwrap();
        let z = p.modular_field().unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn modular_field_of_e6_normal_form() {
        let p = normal_form_structure(
            SingularityLabel::E6tilde,
            &Rational::one(),
            &Rational::one(),
        )
        .unwrap();
        let z = p.modular_field().unwrap();
        let zw = z.component(&[0]);
        assert!(zw.is_constant() && !zw.is_zero());
        for i in 1..4 {
            assert!(z.component(&[i]).is_zero());
        }
        assert!(z.divergence().unwrap().is_zero());
        assert!(z.schouten(p.bivector()).unwrap().is_zero());
    }

    #[test]
    fn log_tangency_examples() {
        let ctx = VariableContext::new(vec!["x", "y"], Vec::<&str>::new()).unwrap();
        let x = parse_poly("x", &ctx).unwrap();
        let mut euler = Multivector::zero(&ctx, 1);
        euler.add_component(vec![0], x.clone());
        assert!(is_log_tangent(&euler, &x).unwrap());
        let mut dx = Multivector::zero(&ctx, 1);
        dx.add_component(vec![0], Polynomial::one(&ctx));
        assert!(!is_log_tangent(&dx, &x).unwrap());

        let p = cubic_cone_structure(&rat_int(3), &rat_int(1)).unwrap();
        let (h, _) = p.degeneracy_divisor(&budget()).unwrap();
        assert!(is_log_tangent(p.bivector(), &h).unwrap());
    }

    #[test]
    fn ellipticity_of_normal_forms() {
        let origin = vec![rat_int(0); 4];
        for label in [
            SingularityLabel::E6tilde,
            SingularityLabel::E7tilde,
            SingularityLabel::E8tilde,
        ] {
            let p = normal_form_structure(label, &Rational::one(), &Rational::one()).unwrap();
            let report = p.ellipticity_report(&origin, &budget()).unwrap();
            assert_eq!(report.verdict, Verdict::Elliptic, "{label:?}");
        }
    }

    #[test]
    fn smooth_divisor_point_is_not_applicable() {
        let ctx = VariableContext::new(vec!["x1", "y1", "x2", "y2"], Vec::<&str>::new()).unwrap();
        let mut bivector = Multivector::zero(&ctx, 2);
        bivector.add_component(vec![0, 1], parse_poly("x1", &ctx).unwrap());
        bivector.add_component(vec![2, 3], Polynomial::one(&ctx));
        let p = PoissonStructure::new(bivector).unwrap();
        let report = p
            .ellipticity_report(&vec![rat_int(0); 4], &budget())
            .unwrap();
        assert!(matches!(report.verdict, Verdict::NotApplicable(_)));
    }

    #[test]
    fn classification_table() {
        let ctx = VariableContext::new(vec!["x", "y", "z"], Vec::<&str>::new()).unwrap();
        let cases = [
            ("x^3+y^3+z^3+x*y*z", (1, 1, 1), SingularityLabel::E6tilde),
            ("x^4+y^4+z^2+x*y*z", (1, 1, 2), SingularityLabel::E7tilde),
            ("x^6+y^3+z^2+x*y*z", (1, 2, 3), SingularityLabel::E8tilde),
        ];
        for (src, w, label) in cases {
            let f = parse_poly(src, &ctx).unwrap();
            match classify_singularity(&f, w, &budget()).unwrap() {
                Classification::Classified(t) => assert_eq!(t.label, label),
                other => panic!("expected {label:?}, got {other:?}"),
            }
        }
        let quartic = parse_poly("x^4+y^4+z^4", &ctx).unwrap();
        assert!(matches!(
            classify_singularity(&quartic, (1, 1, 1), &budget()).unwrap(),
            Classification::Unclassified(_)
        ));
    }

    #[test]
    fn normal_form_bracket_components() {
        let p = normal_form_structure(SingularityLabel::E6tilde, &Rational::one(), &rat_int(0))
            .unwrap();
        let ctx = p.context().clone();
        // {x,y} = d f / d z = 3z^2 at tau = 0.
        assert_eq!(
            p.bivector().component(&[1, 2]),
            parse_poly("3*z^2", &ctx).unwrap()
        );
        assert_eq!(
            p.bivector().component(&[2, 3]),
            parse_poly("3*x^2", &ctx).unwrap()
        );
        // {z,x} stored at the sorted slot (1,3) with a sign flip.
        assert_eq!(
            p.bivector().component(&[1, 3]),
            parse_poly("-3*y^2", &ctx).unwrap()
        );

        let e8 = normal_form_structure(SingularityLabel::E8tilde, &Rational::one(), &Rational::one())
            .unwrap();
        assert_eq!(
            e8.bivector().component(&[1, 2]),
            parse_poly("2*z+x*y", &ctx).unwrap()
        );
        assert_eq!(
            e8.bivector().component(&[2, 3]),
            parse_poly("6*x^5+y*z", &ctx).unwrap()
        );

        let scaled =
            normal_form_structure(SingularityLabel::E7tilde, &rat_int(2), &rat_int(0)).unwrap();
        let unit =
            normal_form_structure(SingularityLabel::E7tilde, &Rational::one(), &rat_int(0)).unwrap();
        assert_eq!(
            scaled.bivector().component(&[1, 2]),
            unit.bivector().component(&[1, 2]).scale(&rat_int(2))
        );

        assert!(matches!(
            normal_form_structure(SingularityLabel::E6tilde, &rat_int(0), &rat_int(0)),
            Err(Error::ZeroLambda)
        ));
    }

    #[test]
    fn normal_form_pfaffian_is_multiple_of_f() {
        for label in [
            SingularityLabel::E6tilde,
            SingularityLabel::E7tilde,
            SingularityLabel::E8tilde,
        ] {
            let t = SingularityType::of(label);
            let p = normal_form_structure(label, &rat(2, 3), &rat(1, 2)).unwrap();
            let h = p.bivector().pfaffian().unwrap();
            let ctx = p.context().clone();
            let f = table_polynomial(&t, &ctx, &Polynomial::constant(&ctx, rat(1, 2))).unwrap();
            let q = h.exact_divide(&f).unwrap();
            assert!(q.is_constant() && !q.is_zero(), "{label:?}");
        }
    }
}
