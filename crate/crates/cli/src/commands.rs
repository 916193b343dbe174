use std::io::{Read, Write};
use std::path::Path;
use std::time::Duration;

use rrmf_core::regression::{perturbed_example1, run_battery, run_battery_with};
use rrmf_core::{
    classify as classify_poly, fixtures, is_in_f0, is_trivial, linspace, make_cubic, make_cubic_monic, make_f_element,
    make_family_n, make_quartic, make_trivial, reduce_to_f0, sample_frames, search_gamma as search, verify_han as verify,
    Complex, ComplexPoly, CubicSpec, FrameKind, Membership, QuarticSpec, QuatPoly, Quaternion, RealPoly, Scalar,
    SearchOptions,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::document::{parse_scalar, quat_strings, real_strings, PolyDocument};
use crate::{CliError, ConstructKind};

fn read_input(input: &str) -> Result<PolyDocument, CliError> {
    let text = if input == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(input).map_err(|e| CliError::Io(format!("{input}: {e}")))?
    };
    PolyDocument::from_json(&text)
}

/// Writes one line to stdout; a closed pipe is an i/o error, not a panic.
pub fn emit(text: &str) -> Result<(), CliError> {
    writeln!(std::io::stdout().lock(), "{text}").map_err(|e| CliError::Io(format!("stdout: {e}")))
}

fn print_json(v: &Value) -> Result<(), CliError> {
    emit(&serde_json::to_string_pretty(v).expect("values serialize"))
}

fn cert_json(c: &Option<(RealPoly, RealPoly)>) -> Value {
    match c {
        Some((a, b)) => json!({ "a": real_strings(a), "b": real_strings(b) }),
        None => Value::Null,
    }
}

fn complex_rows(p: &ComplexPoly) -> Vec<[String; 2]> {
    p.coeffs().iter().map(|c| [c.re.to_string(), c.im.to_string()]).collect()
}

fn gamma_of(doc: &PolyDocument) -> Result<Option<ComplexPoly>, CliError> {
    Ok(doc.certificate_polys()?.map(|(a, b)| ComplexPoly::from_parts(&a, &b)))
}

fn search_options(max_degree: usize, budget_ms: u64) -> Result<SearchOptions, CliError> {
    let seed = match std::env::var("RRMF_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| CliError::Parse(format!("RRMF_SEED '{s}' is not an unsigned integer")))?,
        Err(_) => 0,
    };
    Ok(SearchOptions { max_degree, budget: Duration::from_millis(budget_ms), seed })
}

pub fn classify(input: &str, search: Option<(usize, u64)>) -> Result<(), CliError> {
    let doc = read_input(input)?;
    let a = doc.quat_poly()?;
    let gamma = gamma_of(&doc)?;
    let opts = search.map(|(d, ms)| search_options(d, ms)).transpose()?;
    let c = classify_poly(&a, gamma.as_ref(), opts.as_ref())?;
    let witness = c.trivial_witness.as_ref().map(|w| {
        json!({
            "left_factor": quat_strings(&w.left_factor),
            "direction": quat_strings(&w.direction),
            "direction_norm_sq": w.direction_norm_sq.to_string(),
        })
    });
    let basis = match &c.membership {
        Membership::ProvenInF { basis, .. } => Value::from(basis.label()),
        _ => Value::Null,
    };
    print_json(&json!({
        "in_widetilde": c.in_widetilde,
        "in_F0": c.in_f0,
        "trivial": c.trivial_witness.is_some(),
        "trivial_witness": witness,
        "planar": c.planar,
        "primitive": c.primitive,
        "core_degree": c.core_degree,
        "core": c.core.coeffs().iter().map(quat_strings).collect::<Vec<_>>(),
        "chi": complex_rows(&c.chi),
        "in_F": c.membership.label(),
        "f_basis": basis,
        "han_certificate": cert_json(&c.han_certificate),
        "regularity": "not checked",
        "notes": c.notes,
    }))
}

// ---- construct ----

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TrivialSpecDoc {
    #[serde(default)]
    sqrt_base: u32,
    #[serde(default)]
    c: Option<Vec<String>>,
    u: Vec<String>,
    coeffs: Vec<[String; 2]>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CubicSpecDoc {
    #[serde(default)]
    sqrt_base: u32,
    a1: Vec<String>,
    a2: Vec<String>,
    #[serde(default)]
    s3: Option<String>,
    #[serde(default)]
    s0: Option<String>,
    #[serde(default)]
    left_factor: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuarticSpecDoc {
    #[serde(default)]
    sqrt_base: u32,
    a1: Vec<String>,
    a2: Vec<String>,
    a3_j: String,
    a3_k: String,
    #[serde(default)]
    s3: Option<String>,
    #[serde(default)]
    left_factor: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FamilySpecDoc {
    n: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FElementSpecDoc {
    #[serde(default)]
    sqrt_base: u32,
    b0: Vec<[String; 4]>,
    delta: Vec<[String; 2]>,
}

fn parse_spec<T: for<'de> Deserialize<'de>>(spec: Option<&str>) -> Result<T, CliError> {
    let spec = spec.ok_or_else(|| CliError::Parse("this constructor needs --spec or --spec-file".into()))?;
    serde_json::from_str(spec).map_err(|e| CliError::Parse(format!("spec: {e}")))
}

fn quat(v: &[String], base: u32) -> Result<Quaternion, CliError> {
    if v.len() != 4 {
        return Err(CliError::Parse(format!("quaternion needs 4 components, got {}", v.len())));
    }
    Ok(Quaternion::new(
        parse_scalar(&v[0], base)?,
        parse_scalar(&v[1], base)?,
        parse_scalar(&v[2], base)?,
        parse_scalar(&v[3], base)?,
    ))
}

fn opt_scalar(s: &Option<String>, base: u32) -> Result<Scalar, CliError> {
    s.as_deref().map_or(Ok(Scalar::zero()), |s| parse_scalar(s, base))
}

fn opt_quat(v: &Option<Vec<String>>, base: u32) -> Result<Quaternion, CliError> {
    v.as_deref().map_or(Ok(Quaternion::one()), |v| quat(v, base))
}

/// Exact self-checks attached to every constructed document.
fn self_check(a: &QuatPoly) -> Result<Value, CliError> {
    Ok(json!({
        "in_F0": is_in_f0(a)?,
        "trivial": is_trivial(a)?.is_some(),
    }))
}

pub fn construct(kind: ConstructKind, spec: Option<&str>, n: Option<usize>) -> Result<(), CliError> {
    let mut extra = serde_json::Map::new();
    let (a, cert) = match kind {
        ConstructKind::Trivial => {
            let s: TrivialSpecDoc = parse_spec(spec)?;
            let b = s.sqrt_base;
            let c = opt_quat(&s.c, b)?;
            let coeffs = s
                .coeffs
                .iter()
                .map(|[x, y]| Ok((parse_scalar(x, b)?, parse_scalar(y, b)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            (make_trivial(&c, &quat(&s.u, b)?, &coeffs)?, None)
        }
        ConstructKind::Cubic => {
            let s: CubicSpecDoc = parse_spec(spec)?;
            let b = s.sqrt_base;
            let spec = CubicSpec {
                a1: quat(&s.a1, b)?,
                a2: quat(&s.a2, b)?,
                s3: opt_scalar(&s.s3, b)?,
                left_factor: opt_quat(&s.left_factor, b)?,
            };
            (make_cubic(&spec)?, None)
        }
        ConstructKind::CubicMonic => {
            let s: CubicSpecDoc = parse_spec(spec)?;
            let b = s.sqrt_base;
            (make_cubic_monic(&quat(&s.a1, b)?, &quat(&s.a2, b)?, &opt_scalar(&s.s0, b)?)?, None)
        }
        ConstructKind::Quartic => {
            let s: QuarticSpecDoc = parse_spec(spec)?;
            let b = s.sqrt_base;
            let r = make_quartic(&QuarticSpec {
                a1: quat(&s.a1, b)?,
                a2: quat(&s.a2, b)?,
                a3_j: parse_scalar(&s.a3_j, b)?,
                a3_k: parse_scalar(&s.a3_k, b)?,
                s3: opt_scalar(&s.s3, b)?,
                left_factor: opt_quat(&s.left_factor, b)?,
            })?;
            extra.insert("family_dim".into(), r.family_dim.into());
            extra.insert("nontrivial_by_span".into(), r.nontrivial.into());
            (r.poly, None)
        }
        ConstructKind::Family => {
            let n = match (n, spec) {
                (Some(n), _) => n,
                (None, spec) => parse_spec::<FamilySpecDoc>(spec)?.n,
            };
            (make_family_n(n)?, None)
        }
        ConstructKind::FElement => {
            let s: FElementSpecDoc = parse_spec(spec)?;
            let b = s.sqrt_base;
            let b0 = QuatPoly::new(s.b0.iter().map(|q| quat(q, b)).collect::<Result<_, _>>()?);
            let delta = ComplexPoly::new(
                s.delta
                    .iter()
                    .map(|[re, im]| Ok(Complex::new(parse_scalar(re, b)?, parse_scalar(im, b)?)))
                    .collect::<Result<_, CliError>>()?,
            );
            let (a, gamma) = make_f_element(&b0, &delta)?;
            let (ca, cb) = (gamma.re(), gamma.im());
            extra.insert("certificate_verified".into(), verify(&a, &ca, &cb)?.into());
            (a, Some((ca, cb)))
        }
    };
    let mut report = self_check(&a)?;
    report.as_object_mut().expect("object").extend(extra);
    let mut doc = PolyDocument::from_quat(&a);
    if let Some((ca, cb)) = &cert {
        doc = doc.with_certificate(ca, cb);
    }
    doc.metadata = Some(json!({ "constructor": format!("{kind:?}"), "self_check": report }));
    emit(&doc.to_json())
}

// ---- frames ----

fn parse_range(s: &str) -> Result<(f64, f64), CliError> {
    let bad = || CliError::Parse(format!("range '{s}' is not lo:hi"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let (lo, hi): (f64, f64) = (lo.trim().parse().map_err(|_| bad())?, hi.trim().parse().map_err(|_| bad())?);
    if !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    Ok((lo, hi))
}

pub fn frames(input: &str, frame: &str, samples: usize, range: &str, out: Option<&Path>, phase: f64) -> Result<(), CliError> {
    let kind: FrameKind = frame.parse()?;
    let (lo, hi) = parse_range(range)?;
    if samples == 0 {
        return Err(CliError::Precondition("--samples must be positive".into()));
    }
    if !phase.is_finite() {
        return Err(CliError::Parse("--phase must be finite".into()));
    }
    let doc = read_input(input)?;
    let a = doc.quat_poly()?;
    let cert = doc.certificate_polys()?;
    let rows = sample_frames(&a, kind, cert.as_ref().map(|(x, y)| (x, y)), &linspace(lo, hi, samples))?;
    let (s, c) = phase.sin_cos();

    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(std::fs::File::create(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?),
        None => Box::new(std::io::stdout().lock()),
    };
    let mut w = csv::Writer::from_writer(sink);
    let io = |e: csv::Error| CliError::Io(e.to_string());
    w.write_record(["xi", "px", "py", "pz", "f1x", "f1y", "f1z", "f2x", "f2y", "f2z", "f3x", "f3y", "f3z"])
        .map_err(io)?;
    for row in rows {
        match row {
            Ok(f) => {
                let f2: [f64; 3] = std::array::from_fn(|k| c * f.f2[k] + s * f.f3[k]);
                let f3: [f64; 3] = std::array::from_fn(|k| c * f.f3[k] - s * f.f2[k]);
                let rec = std::iter::once(f.xi)
                    .chain(f.position)
                    .chain(f.f1)
                    .chain(f2)
                    .chain(f3)
                    .map(|x| x.to_string());
                w.write_record(rec).map_err(io)?;
            }
            Err(e) => eprintln!("warning: skipped xi = {}: {}", e.xi, e.reason),
        }
    }
    w.flush().map_err(|e| CliError::Io(e.to_string()))
}

// ---- certificates ----

fn require_certificate(doc: &PolyDocument) -> Result<(RealPoly, RealPoly), CliError> {
    doc.certificate_polys()?
        .ok_or_else(|| CliError::Precondition("document has no certificate {a, b}".into()))
}

pub fn verify_han(input: &str) -> Result<(), CliError> {
    let doc = read_input(input)?;
    let (ca, cb) = require_certificate(&doc)?;
    let ok = verify(&doc.quat_poly()?, &ca, &cb)?;
    print_json(&json!({ "verified": ok }))
}

pub fn reduce(input: &str) -> Result<(), CliError> {
    let doc = read_input(input)?;
    let (ca, cb) = require_certificate(&doc)?;
    let (b, in_f0) = reduce_to_f0(&doc.quat_poly()?, &ComplexPoly::from_parts(&ca, &cb))?;
    let mut out = PolyDocument::from_quat(&b);
    out.metadata = Some(json!({ "reduced_from_certificate": cert_json(&Some((ca, cb))), "in_F0": in_f0 }));
    emit(&out.to_json())
}

pub fn search_gamma(input: &str, max_degree: usize, budget_ms: u64) -> Result<(), CliError> {
    let doc = read_input(input)?;
    let opts = search_options(max_degree, budget_ms)?;
    let found = search(&doc.quat_poly()?, &opts)?;
    print_json(&json!({
        "found": found.is_some(),
        "certificate": cert_json(&found),
        "seed": opts.seed,
    }))
}

// ---- regression battery ----

pub fn paper_examples(perturb_example1: bool) -> Result<(), CliError> {
    let report = if perturb_example1 {
        let mut ex = fixtures::certified_examples();
        ex[0] = perturbed_example1();
        run_battery_with(&ex)
    } else {
        run_battery()
    };
    for c in &report {
        emit(&c.to_string())?;
    }
    let failed = report.iter().filter(|c| !c.passed).count();
    emit(&format!("{} passed, {failed} failed", report.len() - failed))?;
    if failed > 0 {
        return Err(CliError::Regression(failed));
    }
    Ok(())
}
