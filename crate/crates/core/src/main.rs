use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use logsymp::chern::{c1c2_minus_c3, pair_with, total_chern, NefClass, RingTag};
use logsymp::context::VariableContext;
use logsymp::diophantine::{table_for_space, TableReport};
use logsymp::document::{parse_rational, StructureDocument};
use logsymp::error::Error;
use logsymp::groebner::{groebner, milnor_number, Budget, MonomialOrder, OrderKind};
use logsymp::parse::parse_poly;
use logsymp::poisson::{
    classify_singularity, normal_form_structure, normal_form_structure_symbolic, Classification,
    PoissonStructure, SingularityLabel, SingularityType, Verdict,
};
use logsymp::poly::{render_rational, Polynomial, Rational};

/// Symbolic toolkit for polynomial Poisson structures.
#[derive(Parser)]
#[command(name = "logsymp", version, disable_help_subcommand = true)]
struct Cli {
    /// Emit machine-readable JSON instead of the human-readable report.
    #[arg(long, global = true)]
    json: bool,
    /// Maximum number of Groebner basis elements before aborting.
    #[arg(long, global = true, default_value_t = 500)]
    max_basis: usize,
    /// Maximum intermediate polynomial degree before aborting.
    #[arg(long, global = true, default_value_t = 60)]
    max_degree: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Jacobi identity [pi,pi] = 0 for a structure document.
    Jacobi { file: String },
    /// Pfaffian of the structure's bivector and its squarefree certificate.
    Pfaffian { file: String },
    /// Modular vector field with respect to the standard volume.
    Modular { file: String },
    /// Ellipticity test at a rational point of a 4-variable structure.
    ClassifyPoint {
        file: String,
        /// Comma-separated rational coordinates, e.g. 0,0,0,0
        #[arg(long)]
        point: String,
    },
    /// Match a 3-variable polynomial against the simple-elliptic table.
    ClassifySing {
        /// Comma-separated weights a,b,c
        #[arg(long)]
        weights: String,
        /// Comma-separated variable names (default x,y,z)
        #[arg(long, default_value = "x,y,z")]
        vars: String,
        poly: String,
    },
    /// Milnor number of an isolated singularity at the origin.
    Milnor {
        /// Comma-separated weights (enables the quasi-homogeneous cross-check)
        #[arg(long)]
        weights: Option<String>,
        #[arg(long, default_value = "x,y,z")]
        vars: String,
        poly: String,
    },
    /// Reduced Groebner basis of the ideal generated by the inputs.
    Groebner {
        #[arg(long)]
        vars: String,
        /// Monomial order: degrevlex or lex
        #[arg(long, default_value = "degrevlex")]
        order: String,
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Krull dimension and quotient dimension of an ideal.
    Dim {
        #[arg(long)]
        vars: String,
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Total Chern class, c1*c2 - c3, and nef pairings for one family member.
    Chern {
        /// hypersurface or product
        #[arg(long)]
        family: String,
        #[arg(long)]
        degree: i64,
    },
    /// Solution tables of 8a6 + 9a7 + 10a8 = N across a family.
    Tables {
        #[arg(long)]
        family: String,
        /// Restrict to a single degree
        #[arg(long)]
        degree: Option<i64>,
    },
    /// Emit an elliptic normal-form structure document.
    EmitNormalForm {
        /// e6, e7 or e8
        #[arg(long = "type")]
        kind: String,
        #[arg(long, default_value = "1")]
        lambda: String,
        #[arg(long, default_value = "1")]
        tau: String,
        /// Keep lambda and tau as symbolic parameters lam, tau.
        #[arg(long)]
        symbolic: bool,
    },
}

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_BUDGET: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version are not errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let budget = Budget {
        max_basis: cli.max_basis,
        max_degree: cli.max_degree,
    };
    match run(&cli, &budget) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Budget(_) => ExitCode::from(EXIT_BUDGET),
                _ => ExitCode::from(EXIT_INPUT),
            }
        }
    }
}

fn load_doc(path: &str) -> Result<StructureDocument, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Invalid(format!("cannot read `{path}`: {e}")))?;
    StructureDocument::from_json(&text)
}

/// Specialized structure when a `specialize` block or no parameters are
/// present; otherwise the parameters stay symbolic.
fn working_structure(doc: &StructureDocument) -> Result<PoissonStructure, Error> {
    if doc.parameters.is_empty() || doc.specialize.is_some() {
        doc.specialized_structure()
    } else {
        doc.symbolic_structure()
    }
}

fn split_list(s: &str) -> Vec<String> {
    s.split(',').map(|p| p.trim().to_string()).collect()
}

fn parse_weights(s: &str) -> Result<Vec<u32>, Error> {
    split_list(s)
        .iter()
        .map(|w| {
            w.parse::<u32>()
                .map_err(|_| Error::Invalid(format!("bad weight `{w}`")))
        })
        .collect()
}

fn parse_point(s: &str) -> Result<Vec<Rational>, Error> {
    split_list(s).iter().map(|c| parse_rational(c)).collect()
}

fn render_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(render_rational).collect();
    format!("({})", parts.join(", "))
}

fn family_tag(family: &str, degree: i64) -> Result<RingTag, Error> {
    match family {
        "hypersurface" => Ok(RingTag::hypersurface(degree)),
        "product" => Ok(RingTag::product_p1(degree)),
        other => Err(Error::Invalid(format!(
            "unknown family `{other}` (expected hypersurface or product)"
        ))),
    }
}

fn run(cli: &Cli, budget: &Budget) -> Result<u8, Error> {
    match &cli.command {
        Command::Jacobi { file } => cmd_jacobi(file, cli.json),
        Command::Pfaffian { file } => cmd_pfaffian(file, cli.json, budget),
        Command::Modular { file } => cmd_modular(file, cli.json),
        Command::ClassifyPoint { file, point } => cmd_classify_point(file, point, cli.json, budget),
        Command::ClassifySing { weights, vars, poly } => {
            cmd_classify_sing(weights, vars, poly, cli.json, budget)
        }
        Command::Milnor { weights, vars, poly } => {
            cmd_milnor(weights.as_deref(), vars, poly, cli.json, budget)
        }
        Command::Groebner { vars, order, polys } => {
            cmd_groebner(vars, order, polys, cli.json, budget)
        }
        Command::Dim { vars, polys } => cmd_dim(vars, polys, cli.json, budget),
        Command::Chern { family, degree } => cmd_chern(family, *degree, cli.json),
        Command::Tables { family, degree } => cmd_tables(family, *degree, cli.json),
        Command::EmitNormalForm {
            kind,
            lambda,
            tau,
            symbolic,
        } => cmd_emit_normal_form(kind, lambda, tau, *symbolic, cli.json),
    }
}

fn cmd_jacobi(file: &str, as_json: bool) -> Result<u8, Error> {
    let doc = load_doc(file)?;
    let mut p = doc.symbolic_structure()?;
    let obstruction = p.jacobi_obstruction()?;
    let holds = obstruction.is_zero();
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "jacobi",
            "holds": holds,
            "parameters": doc.parameters,
            "obstruction": if holds { serde_json::Value::Null } else { json!(obstruction.render()) },
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else if holds {
        if doc.parameters.is_empty() {
            println!("Jacobi: HOLDS");
        } else {
            println!("Jacobi: HOLDS (identically in {})", doc.parameters.join(", "));
        }
    } else {
        println!("Jacobi: FAILS");
        println!("obstruction: {}", obstruction.render());
    }
    Ok(if holds { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_pfaffian(file: &str, as_json: bool, budget: &Budget) -> Result<u8, Error> {
    let doc = load_doc(file)?;
    let p = working_structure(&doc)?;
    let (h, squarefree) = p.degeneracy_divisor(budget)?;
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "pfaffian",
            "pfaffian": h.render(),
            "squarefree": squarefree,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("pfaffian: {}", h.render());
        println!("squarefree: {squarefree}");
    }
    Ok(EXIT_OK)
}

fn cmd_modular(file: &str, as_json: bool) -> Result<u8, Error> {
    let doc = load_doc(file)?;
    let p = working_structure(&doc)?;
    match p.modular_field() {
        Ok(z) => {
            if as_json {
                let out = json!({
                    "schema": 1,
                    "command": "modular",
                    "modular_field": z.render(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("Z = {}", z.render());
            }
            Ok(EXIT_OK)
        }
        Err(e @ (Error::ZeroPfaffian | Error::NotLogarithmic(_))) => {
            if as_json {
                let out = json!({
                    "schema": 1,
                    "command": "modular",
                    "modular_field": serde_json::Value::Null,
                    "reason": e.to_string(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("modular field undefined: {e}");
            }
            Ok(EXIT_NEGATIVE)
        }
        Err(e) => Err(e),
    }
}

fn cmd_classify_point(
    file: &str,
    point: &str,
    as_json: bool,
    budget: &Budget,
) -> Result<u8, Error> {
    let doc = load_doc(file)?;
    let p = working_structure(&doc)?;
    let pt = parse_point(point)?;
    let report = p.ellipticity_report(&pt, budget)?;
    let (verdict, reason, code) = match &report.verdict {
        Verdict::Elliptic => ("elliptic".to_string(), None, EXIT_OK),
        Verdict::NotElliptic(r) => ("not elliptic".to_string(), Some(r.clone()), EXIT_NEGATIVE),
        Verdict::NotApplicable(r) => ("not applicable".to_string(), Some(r.clone()), EXIT_NEGATIVE),
    };
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "classify-point",
            "point": pt.iter().map(render_rational).collect::<Vec<_>>(),
            "divisor_singular_at_point": report.divisor_singular_at_point,
            "normal_proxy": report.normal_proxy,
            "modular_nonzero": report.modular_nonzero,
            "verdict": verdict,
            "reason": reason,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("point: {}", render_point(&pt));
        println!("divisor singular at point: {}", report.divisor_singular_at_point);
        println!("normal proxy: {}", report.normal_proxy);
        println!("modular field nonzero: {}", report.modular_nonzero);
        match reason {
            None => println!("verdict: {verdict}"),
            Some(r) => println!("verdict: {verdict} ({r})"),
        }
    }
    Ok(code)
}

fn cmd_classify_sing(
    weights: &str,
    vars: &str,
    poly: &str,
    as_json: bool,
    budget: &Budget,
) -> Result<u8, Error> {
    let w = parse_weights(weights)?;
    if w.len() != 3 {
        return Err(Error::Invalid("expected exactly three weights".into()));
    }
    let names = split_list(vars);
    let ctx = VariableContext::new(names, Vec::<String>::new())?;
    let f = parse_poly(poly, &ctx)?;
    let result = match classify_singularity(&f, (w[0], w[1], w[2]), budget) {
        Ok(c) => c,
        Err(Error::NonIsolated) => {
            Classification::Unclassified("the singularity is not isolated".into())
        }
        Err(e) => return Err(e),
    };
    match result {
        Classification::Classified(t) => {
            if as_json {
                let out = json!({
                    "schema": 1,
                    "command": "classify-sing",
                    "type": t.label.name(),
                    "weights": [t.weights.0, t.weights.1, t.weights.2],
                    "degree": t.degree,
                    "milnor": t.milnor,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!(
                    "type: {} (weights ({},{},{}), degree {}, Milnor number {})",
                    t.label.name(),
                    t.weights.0,
                    t.weights.1,
                    t.weights.2,
                    t.degree,
                    t.milnor
                );
            }
            Ok(EXIT_OK)
        }
        Classification::Unclassified(reason) => {
            if as_json {
                let out = json!({
                    "schema": 1,
                    "command": "classify-sing",
                    "type": serde_json::Value::Null,
                    "reason": reason,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                println!("unclassified: {reason}");
            }
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn cmd_milnor(
    weights: Option<&str>,
    vars: &str,
    poly: &str,
    as_json: bool,
    budget: &Budget,
) -> Result<u8, Error> {
    let names = split_list(vars);
    let ctx = match weights {
        None => VariableContext::new(names, Vec::<String>::new())?,
        Some(w) => {
            let w = parse_weights(w)?;
            if w.len() != names.len() {
                return Err(Error::Invalid(
                    "weight count must match variable count".into(),
                ));
            }
            VariableContext::with_weights(names, Vec::<String>::new(), w)?
        }
    };
    let f = parse_poly(poly, &ctx)?;
    let mu = milnor_number(&f, budget)?;
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "milnor",
            "milnor": mu,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        match mu {
            Some(mu) => println!("{mu}"),
            None => println!("infinite"),
        }
    }
    Ok(if mu.is_some() { EXIT_OK } else { EXIT_NEGATIVE })
}

fn parse_ideal(vars: &str, polys: &[String]) -> Result<(Vec<Polynomial>, MonomialOrder), Error> {
    let ctx = VariableContext::new(split_list(vars), Vec::<String>::new())?;
    let gens = polys
        .iter()
        .map(|s| parse_poly(s, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let order = MonomialOrder::degrevlex(&ctx);
    Ok((gens, order))
}

fn cmd_groebner(
    vars: &str,
    order_name: &str,
    polys: &[String],
    as_json: bool,
    budget: &Budget,
) -> Result<u8, Error> {
    let (gens, mut order) = parse_ideal(vars, polys)?;
    order.kind = match order_name {
        "degrevlex" => OrderKind::DegRevLex,
        "lex" => OrderKind::Lex,
        other => {
            return Err(Error::Invalid(format!(
                "unknown order `{other}` (expected degrevlex or lex)"
            )))
        }
    };
    let basis = groebner(&gens, &order, budget)?;
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "groebner",
            "order": order_name,
            "basis": basis.generators().iter().map(|g| g.render()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        for (i, g) in basis.generators().iter().enumerate() {
            println!("g{i} = {}", g.render());
        }
        if basis.generators().is_empty() {
            println!("(zero ideal)");
        }
    }
    Ok(EXIT_OK)
}

fn cmd_dim(vars: &str, polys: &[String], as_json: bool, budget: &Budget) -> Result<u8, Error> {
    let (gens, order) = parse_ideal(vars, polys)?;
    let basis = groebner(&gens, &order, budget)?;
    let krull = basis.krull_dimension();
    let quotient = basis.quotient_dimension();
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "dim",
            "krull": krull,
            "quotient": quotient,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("krull dimension: {krull}");
        match quotient {
            Some(q) => println!("quotient dimension: {q}"),
            None => println!("quotient dimension: infinite"),
        }
    }
    Ok(EXIT_OK)
}

fn cmd_chern(family: &str, degree: i64, as_json: bool) -> Result<u8, Error> {
    if degree < 1 {
        return Err(Error::DegreeOutOfRange(degree));
    }
    let tag = family_tag(family, degree)?;
    let c = total_chern(tag);
    let class = c1c2_minus_c3(&c)?;
    let pairings: Vec<(&str, i64)> = match tag {
        RingTag::Hypersurface { .. } => vec![("H", pair_with(&class, NefClass::H)?)],
        RingTag::ProductP1 { .. } => vec![
            ("A", pair_with(&class, NefClass::A)?),
            ("B", pair_with(&class, NefClass::B)?),
        ],
    };
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "chern",
            "family": family,
            "degree": degree,
            "total_chern": c.render(),
            "c1c2_minus_c3": class.render(),
            "pairings": pairings.iter().map(|(n, v)| json!({"nef": n, "value": v})).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("total Chern class: {}", c.render());
        println!("c1*c2 - c3: {}", class.render());
        for (nef, value) in &pairings {
            println!("pairing with {nef}: {value}");
        }
    }
    Ok(EXIT_OK)
}

fn render_table(report: &TableReport) -> String {
    let mut lines = Vec::new();
    for c in &report.constraints {
        lines.push(format!("d = {}: N({}) = {}", report.d, c.nef, c.n));
        for s in &c.solutions {
            let tag = if s.feasible { "feasible" } else { "infeasible" };
            lines.push(format!("  ({},{},{}) {tag}", s.a6, s.a7, s.a8));
        }
    }
    for note in &report.notes {
        lines.push(format!("note: {note}"));
    }
    lines.join("\n")
}

fn cmd_tables(family: &str, degree: Option<i64>, as_json: bool) -> Result<u8, Error> {
    let range: Vec<i64> = match (family, degree) {
        (_, Some(d)) => vec![d],
        ("hypersurface", None) => (1..=3).collect(),
        ("product", None) => (1..=4).collect(),
        (other, None) => {
            return Err(Error::Invalid(format!(
                "unknown family `{other}` (expected hypersurface or product)"
            )))
        }
    };
    let reports = range
        .iter()
        .map(|&d| table_for_space(family_tag(family, d)?, d))
        .collect::<Result<Vec<_>, _>>()?;
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "tables",
            "family": family,
            "tables": reports,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("family: {family}");
        for r in &reports {
            println!("{}", render_table(r));
        }
    }
    Ok(EXIT_OK)
}

fn cmd_emit_normal_form(
    kind: &str,
    lambda: &str,
    tau: &str,
    symbolic: bool,
    as_json: bool,
) -> Result<u8, Error> {
    let label = SingularityLabel::parse(kind)?;
    let p = if symbolic {
        normal_form_structure_symbolic(label)?
    } else {
        normal_form_structure(label, &parse_rational(lambda)?, &parse_rational(tau)?)?
    };
    let ctx = p.context().clone();
    let vars = ctx.variables();
    let mut brackets: BTreeMap<String, String> = BTreeMap::new();
    for (idx, coeff) in p.bivector().components() {
        let key = format!("{},{}", vars[idx[0]], vars[idx[1]]);
        brackets.insert(key, coeff.render());
    }
    let t = SingularityType::of(label);
    let doc = json!({
        "variables": vars,
        "parameters": ctx.parameters(),
        "weights": {
            vars[0].clone(): 1,
            vars[1].clone(): t.weights.0,
            vars[2].clone(): t.weights.1,
            vars[3].clone(): t.weights.2,
        },
        "brackets": brackets,
    });
    if as_json {
        let out = json!({
            "schema": 1,
            "command": "emit-normal-form",
            "type": t.label.name(),
            "document": doc,
        });
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    }
    Ok(EXIT_OK)
}
