//! Subcommand implementations. Each returns a JSON document, a text
//! rendering, and whether its verifications passed.

use std::fmt::Write as _;

use a1deg_core::duplicant::sigma_determinant_sign;
use a1deg_core::local_degree::local_degree_at_point;
use a1deg_core::sample;
use a1deg_core::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::expr::{parse_polynomial, parse_rational_function, ParseError};
use crate::output::{class_text, class_value, matrix, matrix_text, scalar};

#[derive(Debug)]
pub enum CliError {
    Parse { input: String, error: ParseError },
    Core(Error),
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse { input, error } => {
                write!(f, "{error}\n  {input}\n  {:>width$}", "^", width = error.position + 1)
            }
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub struct Outcome {
    pub doc: Value,
    pub text: String,
    pub verified: bool,
}

fn parse_function(field: Field, text: &str) -> CliResult<RationalFunction> {
    let (f, g) = parse_rational_function(field, text).map_err(|error| CliError::Parse {
        input: text.to_string(),
        error,
    })?;
    Ok(normalize_pointed(&f, &g)?)
}

fn parse_poly(field: Field, text: &str) -> CliResult<Polynomial> {
    parse_polynomial(field, text).map_err(|error| CliError::Parse {
        input: text.to_string(),
        error,
    })
}

fn parse_scalar(field: Field, text: &str) -> CliResult<FieldElement> {
    Ok(FieldElement::parse(field, text.trim())?)
}

/// `"r:e,r:e,..."`; a bare `r` means multiplicity 1.
pub fn parse_roots(field: Field, text: &str) -> CliResult<Vec<RootDatum>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (r, e) = match item.rsplit_once(':') {
            Some((r, e)) => {
                let e: usize = e
                    .trim()
                    .parse()
                    .map_err(|_| CliError::Input(format!("bad multiplicity in '{item}'")))?;
                (r, e)
            }
            None => (item, 1),
        };
        out.push(RootDatum::new(parse_scalar(field, r)?, e)?);
    }
    if out.is_empty() {
        return Err(CliError::Input("--roots needs at least one root".into()));
    }
    Ok(out)
}

fn function_echo(text: &str, f: &RationalFunction) -> Value {
    json!({
        "expression": text,
        "numerator": f.numerator().to_string(),
        "denominator": f.denominator().to_string(),
        "leading_coefficient": scalar(f.leading_coefficient()),
    })
}

pub fn degree(field: Field, text: &str) -> CliResult<Outcome> {
    let f = parse_function(field, text)?;
    let bez = bezoutian_matrix(&f)?;
    let class = unstable_degree(&f)?;
    let mut out = format!("f/g = {f}\nBezoutian (monomial basis):\n{}", matrix_text(bez.matrix(), 2));
    let _ = writeln!(out, "degree: {}", class_text(&class)?);
    Ok(Outcome {
        doc: json!({
            "input": function_echo(text, &f),
            "bezoutian": matrix(bez.matrix()),
            "class": class_value(&class)?,
        }),
        text: out,
        verified: true,
    })
}

fn local_report(func: &RationalFunction, r: &LocalDegreeReport) -> CliResult<(Value, String)> {
    let mut doc = json!({
        "root": scalar(&r.root),
        "multiplicity": r.multiplicity,
        "newton_matrix": matrix(r.newton_matrix.matrix()),
        "class": class_value(&r.class)?,
    });
    let mut text = format!(
        "root {} (multiplicity {})\n  Newton matrix:\n{}  local degree: {}\n",
        r.root,
        r.multiplicity,
        matrix_text(r.newton_matrix.matrix(), 4),
        class_text(&r.class)?
    );
    if r.multiplicity == 1 {
        let formula = simple_zero_degree(func, &r.root)?;
        let agrees = gw_equal(&formula, &r.class)?;
        doc["simple_zero_formula"] = class_value(&formula)?;
        doc["simple_zero_agrees"] = json!(agrees);
        let _ = writeln!(text, "  derivative formula: {formula} (agrees: {agrees})");
    }
    Ok((doc, text))
}

pub fn local(field: Field, text: &str, at: Option<&str>) -> CliResult<Outcome> {
    let f = parse_function(field, text)?;
    let reports = match at {
        Some(point) => {
            let point = point.trim();
            let report = if point.contains('x') {
                local_degree_at_point(&f, &parse_poly(field, point)?)?
            } else {
                local_degree(&f, &parse_scalar(field, point)?)?
            };
            vec![report]
        }
        None => {
            let (roots, _) = rational_roots(f.numerator())?;
            roots
                .iter()
                .map(|r| local_degree(&f, &r.root))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let (_, cofactor) = rational_roots(f.numerator())?;
    let mut out = format!("f/g = {f}\n");
    let mut docs = Vec::new();
    let mut verified = true;
    for r in &reports {
        let (doc, t) = local_report(&f, r)?;
        verified &= doc.get("simple_zero_agrees").and_then(Value::as_bool).unwrap_or(true);
        docs.push(doc);
        out.push_str(&t);
    }
    if !cofactor.is_one() {
        let _ = writeln!(out, "non-rational factor of the numerator: {cofactor} (not supported)");
    }
    Ok(Outcome {
        doc: json!({
            "input": function_echo(text, &f),
            "locals": docs,
            "nonsplit_cofactor": cofactor.to_string(),
        }),
        text: out,
        verified,
    })
}

pub fn duplicant_cmd(field: Field, roots_text: &str, lc_text: &str) -> CliResult<Outcome> {
    let roots = parse_roots(field, roots_text)?;
    let lc = parse_scalar(field, lc_text)?;
    let sigma = sigma_matrix(&roots)?;
    let det = sigma.determinant()?;
    let d = duplicant(&roots, &lc)?;
    let closed = duplicant_closed_form(&roots, &lc)?;
    let sign = sigma_determinant_sign(&roots)?;
    let agrees = d == closed;
    let mut out = format!("Sigma(f):\n{}", matrix_text(sigma.matrix(), 2));
    let _ = writeln!(out, "det Sigma(f) = {det} (sign {sign:+} against the root-difference product)");
    let _ = writeln!(out, "duplicant = {d}\nclosed form = {closed} (agrees: {agrees})");
    Ok(Outcome {
        doc: json!({
            "input": {
                "roots": roots.iter().map(|r| json!({"root": scalar(&r.root), "multiplicity": r.multiplicity})).collect::<Vec<_>>(),
                "leading_coefficient": scalar(&lc),
            },
            "sigma": matrix(sigma.matrix()),
            "sigma_determinant": scalar(&det),
            "sigma_sign": sign,
            "duplicant": scalar(&d),
            "closed_form": scalar(&closed),
            "closed_form_agrees": agrees,
        }),
        text: out,
        verified: agrees,
    })
}

/// `"point=a,b,~c"`: the class `⟨a⟩^u + ⟨b⟩^u − ⟨c⟩^u` placed at `point`.
pub fn parse_entry(field: Field, text: &str) -> CliResult<DsumEntry> {
    let (point, gens) = text
        .split_once('=')
        .ok_or_else(|| CliError::Input(format!("entry '{text}' must look like point=a,b,~c")))?;
    let point = parse_scalar(field, point)?;
    let mut class = UnstableClass::zero(field);
    for g in gens.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (neg, g) = match g.strip_prefix('~') {
            Some(rest) => (true, rest),
            None => (false, g),
        };
        let gen = gw_generator(&parse_scalar(field, g)?)?;
        class = if neg { gw_sub(&class, &gen)? } else { gw_add(&class, &gen)? };
    }
    Ok(DsumEntry { class, point })
}

pub fn dsum(field: Field, entries: &[String], roots: Option<&str>, den: Option<&str>) -> CliResult<Outcome> {
    match (entries.is_empty(), roots) {
        (false, None) => {
            let parsed = entries
                .iter()
                .map(|e| parse_entry(field, e))
                .collect::<CliResult<Vec<_>>>()?;
            let sum = dsum_algebraic(&parsed)?;
            let mut out = String::new();
            for e in &parsed {
                let _ = writeln!(out, "at {}: {}", e.point, e.class);
            }
            let _ = writeln!(out, "D-sum: {}", class_text(&sum)?);
            let echo: Vec<Value> = parsed
                .iter()
                .map(|e| Ok(json!({"point": scalar(&e.point), "class": class_value(&e.class)?})))
                .collect::<Result<_>>()?;
            Ok(Outcome {
                doc: json!({"input": {"entries": echo}, "class": class_value(&sum)?}),
                text: out,
                verified: true,
            })
        }
        (true, Some(roots_text)) => {
            let roots = parse_roots(field, roots_text)?;
            let f = Polynomial::from_roots(roots.iter().map(|r| (&r.root, r.multiplicity)), field);
            let g = match den {
                Some(d) => parse_poly(field, d)?,
                None => Polynomial::one(field),
            };
            let func = normalize_pointed(&f, &g)?;
            let report = verify_local_to_global(&func)?;
            ltg_outcome(&format!("({f}) / ({g})"), &func, &report)
        }
        _ => Err(CliError::Input("dsum takes either --entry values or --roots (with optional --den)".into())),
    }
}

pub fn nsum(field: Field, a_text: &str, b_text: &str) -> CliResult<Outcome> {
    let a = parse_function(field, a_text)?;
    let b = parse_function(field, b_text)?;
    let s = naive_sum(&a, &b)?;
    let (da, db, ds) = (unstable_degree(&a)?, unstable_degree(&b)?, unstable_degree(&s)?);
    let expected = gw_add(&da, &db)?;
    let additive = gw_equal(&ds, &expected)?;
    let mut out = format!("F1 (+) F2 = {s}\n");
    let _ = writeln!(out, "deg(F1) = {da}\ndeg(F2) = {db}\ndeg(F1 (+) F2) = {}", class_text(&ds)?);
    let _ = writeln!(out, "additive: {additive}");
    Ok(Outcome {
        doc: json!({
            "input": {"first": function_echo(a_text, &a), "second": function_echo(b_text, &b)},
            "sum": {"numerator": s.numerator().to_string(), "denominator": s.denominator().to_string()},
            "degrees": {"first": class_value(&da)?, "second": class_value(&db)?, "sum": class_value(&ds)?},
            "additive": additive,
        }),
        text: out,
        verified: additive,
    })
}

fn ltg_outcome(text: &str, func: &RationalFunction, r: &LtgReport) -> CliResult<Outcome> {
    let mut out = format!("f/g = {func}\nglobal degree: {}\n", class_text(&r.global_class)?);
    let mut locals = Vec::new();
    for l in &r.local_reports {
        let (doc, t) = local_report(func, l)?;
        locals.push(doc);
        out.push_str(&t);
    }
    let _ = writeln!(out, "D-sum of local degrees: {}", class_text(&r.dsum_class)?);
    let _ = writeln!(
        out,
        "classes equal: {}\nmatrix identity: {}",
        r.classes_equal, r.matrix_identity_holds
    );
    Ok(Outcome {
        doc: json!({
            "input": function_echo(text, func),
            "global_class": class_value(&r.global_class)?,
            "locals": locals,
            "dsum_class": class_value(&r.dsum_class)?,
            "classes_equal": r.classes_equal,
            "matrix_identity_holds": r.matrix_identity_holds,
        }),
        text: out,
        verified: r.classes_equal && r.matrix_identity_holds,
    })
}

pub fn verify_ltg(field: Field, text: Option<&str>, random: Option<usize>, seed: u64) -> CliResult<Outcome> {
    match (text, random) {
        (Some(t), None) => {
            let func = parse_function(field, t)?;
            let report = verify_local_to_global(&func)?;
            ltg_outcome(t, &func, &report)
        }
        (None, Some(n)) => {
            let results: Vec<(String, std::result::Result<bool, String>)> = (0..n)
                .into_par_iter()
                .map(|i| {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i as u64);
                    let func = sample::split_instance(&mut rng, field, 8, 4);
                    let verdict = verify_local_to_global(&func)
                        .map(|r| r.classes_equal && r.matrix_identity_holds)
                        .map_err(|e| e.to_string());
                    (func.to_string(), verdict)
                })
                .collect();
            let passed = results.iter().filter(|(_, v)| matches!(v, Ok(true))).count();
            let mut out = String::new();
            let mut instances = Vec::new();
            for (i, (f, v)) in results.iter().enumerate() {
                let status = match v {
                    Ok(true) => "pass".to_string(),
                    Ok(false) => "FAIL".to_string(),
                    Err(e) => format!("ERROR {e}"),
                };
                let _ = writeln!(out, "[{i}] {status}  {f}");
                instances.push(json!({
                    "index": i,
                    "function": f,
                    "pass": matches!(v, Ok(true)),
                    "error": v.as_ref().err(),
                }));
            }
            let _ = writeln!(out, "{passed}/{n} pass");
            Ok(Outcome {
                doc: json!({
                    "input": {"random": n, "seed": seed.to_string()},
                    "instances": instances,
                    "passed": passed,
                    "total": n,
                }),
                text: out,
                verified: passed == n,
            })
        }
        _ => Err(CliError::Input("verify-ltg takes an expression or --random N".into())),
    }
}

/// Multiplicity shapes exercised by `selftest duplicant`.
const SHAPES: [&[usize]; 7] = [&[1], &[1, 1], &[1, 2], &[2, 2], &[1, 1, 1], &[3, 1], &[1, 2, 3]];
/// Roots assigned to the shapes, in order; the first two give the
/// `(x − 2)(x − 0)²` example.
const SHAPE_ROOTS: [i64; 3] = [2, 0, -1];

pub fn selftest_duplicant(field: Field) -> CliResult<Outcome> {
    let mut out = String::new();
    let mut docs = Vec::new();
    let mut all = true;
    for shape in SHAPES {
        let roots: Vec<RootDatum> = shape
            .iter()
            .zip(SHAPE_ROOTS)
            .map(|(&e, r)| RootDatum::new(FieldElement::from_i64(field, r), e))
            .collect::<Result<_>>()?;
        let sigma = sigma_matrix(&roots)?;
        let det = sigma.determinant()?;
        let one = FieldElement::one(field);
        let d = duplicant(&roots, &one)?;
        let closed = duplicant_closed_form(&roots, &one)?;
        let ok = d == closed;
        all &= ok;
        let _ = writeln!(out, "e = {shape:?}, roots = {:?}", &SHAPE_ROOTS[..shape.len()]);
        out.push_str(&matrix_text(sigma.matrix(), 2));
        let _ = writeln!(out, "  det = {det}, duplicant = {d}, closed form = {closed} ({})\n", if ok { "ok" } else { "MISMATCH" });
        docs.push(json!({
            "multiplicities": shape,
            "roots": SHAPE_ROOTS[..shape.len()].iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "sigma": matrix(sigma.matrix()),
            "determinant": scalar(&det),
            "duplicant": scalar(&d),
            "closed_form": scalar(&closed),
            "agrees": ok,
        }));
    }
    Ok(Outcome {
        doc: json!({"suite": "duplicant", "shapes": docs, "all_agree": all}),
        text: out,
        verified: all,
    })
}
