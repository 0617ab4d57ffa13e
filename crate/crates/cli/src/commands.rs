//! Verb dispatch and JSON output.

use crate::parser::parse_scalar;
use crate::session::Session;
use rittlab::divgcd::{decomposition_view, ep_divides_refined, ep_gcd_refined};
use rittlab::dyadic::Rectangle;
use rittlab::efunc::{denominator_profile, guess_operator, mth_root_series, HolonomicSeries};
use rittlab::ritt::ritt_factor;
use rittlab::zeros::{
    evidence_common_zeros_vs_gcd, evidence_division_explains_zero, evidence_simple_zeros,
    isolate_zeros_prec,
};
use rittlab::{bessel, ExpPoly, QPoly, Rat};
use serde_json::{json, Value};

pub fn emit_error(kind: &str, detail: &str) -> i32 {
    let doc = json!({ "error": kind, "detail": detail });
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    2
}

fn emit(doc: &Value) {
    println!("{}", serde_json::to_string_pretty(doc).unwrap());
}

/// Split verb arguments into positionals and `--flag value` pairs;
/// `--rect` consumes four values.
fn split_args(args: &[String]) -> Result<(Vec<String>, std::collections::BTreeMap<String, Vec<String>>), String> {
    let mut pos = Vec::new();
    let mut flags = std::collections::BTreeMap::new();
    let mut it = args.iter().peekable();
    while let Some(a) = it.next() {
        if let Some(name) = a.strip_prefix("--") {
            let want = if name == "rect" { 4 } else { 1 };
            let mut vals = Vec::with_capacity(want);
            for _ in 0..want {
                match it.next() {
                    Some(v) => vals.push(v.clone()),
                    None => return Err(format!("flag --{} needs {} value(s)", name, want)),
                }
            }
            flags.insert(name.to_string(), vals);
        } else {
            pos.push(a.clone());
        }
    }
    Ok((pos, flags))
}

fn rect_from(flags: &std::collections::BTreeMap<String, Vec<String>>) -> Result<Rectangle, String> {
    let vals = flags
        .get("rect")
        .ok_or_else(|| "--rect A B C D is required".to_string())?;
    let mut parts = Vec::with_capacity(4);
    for v in vals {
        parts.push(rittlab::rat_from_str(v).ok_or_else(|| format!("bad rational `{}`", v))?);
    }
    let [a, b, c, d] = <[Rat; 4]>::try_from(parts).unwrap();
    if a >= b || c >= d {
        return Err("rectangle needs re_lo < re_hi and im_lo < im_hi".to_string());
    }
    Ok(Rectangle::new(a, b, c, d))
}

fn rats_from_json(src: &str) -> Result<Vec<Rat>, String> {
    let strings: Vec<String> =
        serde_json::from_str(src).map_err(|e| format!("bad series JSON: {}", e))?;
    strings
        .iter()
        .map(|s| rittlab::rat_from_str(s).ok_or_else(|| format!("bad rational `{}`", s)))
        .collect()
}

fn polys_from_json(src: &str) -> Result<Vec<QPoly>, String> {
    let polys: Vec<Vec<String>> =
        serde_json::from_str(src).map_err(|e| format!("bad operator JSON: {}", e))?;
    polys
        .iter()
        .map(|cs| {
            let coeffs: Result<Vec<Rat>, String> = cs
                .iter()
                .map(|s| rittlab::rat_from_str(s).ok_or_else(|| format!("bad rational `{}`", s)))
                .collect();
            Ok(QPoly::from_coeffs(coeffs?))
        })
        .collect()
}

fn exppoly_doc(f: &ExpPoly) -> Value {
    json!({
        "terms": serde_json::to_value(f).unwrap(),
        "display": f.to_expr_string(),
    })
}

pub fn dispatch(session: &mut Session, verb: &str, args: &[String]) -> i32 {
    let (pos, flags) = match split_args(args) {
        Ok(x) => x,
        Err(e) => return emit_error(verb, &e),
    };
    match verb {
        "factor" => cmd_factor(session, &pos),
        "gcd" => cmd_gcd(session, &pos),
        "divides" => cmd_divides(session, &pos),
        "normalize" => cmd_normalize(session, &pos),
        "valuation" => cmd_valuation(session, &pos, &flags),
        "simple-part" => cmd_simple_part(session, &pos, &flags),
        "zeros" => cmd_zeros(session, &pos, &flags),
        "evidence" => cmd_evidence(session, &pos, &flags),
        "mroot" => cmd_mroot(&flags),
        "guess-op" => cmd_guess_op(&flags),
        "denoms" => cmd_denoms(&flags),
        "bessel" => cmd_bessel(session, &flags),
        "bessel-certify" => cmd_bessel_certify(session, &flags),
        other => emit_error(other, "unknown verb (try --help)"),
    }
}

fn one_expr(session: &Session, pos: &[String], verb: &str) -> Result<ExpPoly, String> {
    if pos.len() != 1 {
        return Err(format!("{} takes exactly one expression", verb));
    }
    session.parse(&pos[0])
}

fn two_exprs(session: &Session, pos: &[String], verb: &str) -> Result<(ExpPoly, ExpPoly), String> {
    if pos.len() != 2 {
        return Err(format!("{} takes exactly two expressions", verb));
    }
    Ok((session.parse(&pos[0])?, session.parse(&pos[1])?))
}

fn cmd_factor(session: &Session, pos: &[String]) -> i32 {
    let f = match one_expr(session, pos, "factor") {
        Ok(f) => f,
        Err(e) => return emit_error("factor", &e),
    };
    match ritt_factor(&f) {
        Ok(r) => {
            let mut doc = serde_json::to_value(&r).unwrap();
            doc["display"] = Value::String(format!(
                "unit * {} simple part(s) * {} irreducible(s)",
                r.simples.len(),
                r.irreducibles.len()
            ));
            emit(&doc);
            0
        }
        Err(e) => emit_error("factor", &e.to_string()),
    }
}

fn cmd_gcd(session: &Session, pos: &[String]) -> i32 {
    let (f1, f2) = match two_exprs(session, pos, "gcd") {
        Ok(x) => x,
        Err(e) => return emit_error("gcd", &e),
    };
    match ep_gcd_refined(&f1, &f2, session.refine) {
        Ok(g) => {
            emit(&json!({ "gcd": exppoly_doc(&g) }));
            0
        }
        Err(e) => emit_error("gcd", &e.to_string()),
    }
}

fn cmd_divides(session: &Session, pos: &[String]) -> i32 {
    let (f1, f2) = match two_exprs(session, pos, "divides") {
        Ok(x) => x,
        Err(e) => return emit_error("divides", &e),
    };
    match ep_divides_refined(&f1, &f2, session.refine) {
        Ok(Some(q)) => {
            emit(&json!({ "divides": true, "quotient": exppoly_doc(&q) }));
            0
        }
        Ok(None) => {
            emit(&json!({ "divides": false, "quotient": Value::Null }));
            1
        }
        Err(e) => emit_error("divides", &e.to_string()),
    }
}

fn cmd_normalize(session: &Session, pos: &[String]) -> i32 {
    let f = match one_expr(session, pos, "normalize") {
        Ok(f) => f,
        Err(e) => return emit_error("normalize", &e),
    };
    match f.normalize() {
        Ok((unit, g)) => {
            emit(&json!({
                "unit": serde_json::to_value(&unit).unwrap(),
                "normalized": exppoly_doc(&g),
            }));
            0
        }
        Err(e) => emit_error("normalize", &e.to_string()),
    }
}

fn cmd_valuation(
    session: &Session,
    pos: &[String],
    flags: &std::collections::BTreeMap<String, Vec<String>>,
) -> i32 {
    let f = match one_expr(session, pos, "valuation") {
        Ok(f) => f,
        Err(e) => return emit_error("valuation", &e),
    };
    let at = match flags.get("at") {
        Some(v) => match parse_scalar(&v[0], &session.field) {
            Ok(x) => x,
            Err(e) => return emit_error("valuation", &e.to_string()),
        },
        None => return emit_error("valuation", "--at SCALAR is required"),
    };
    match decomposition_view(&f) {
        Ok(view) => {
            let v = view.h_valuation(&at);
            emit(&json!({ "valuation": v, "at": at.to_string() }));
            0
        }
        Err(e) => emit_error("valuation", &e.to_string()),
    }
}

fn cmd_simple_part(
    session: &Session,
    pos: &[String],
    flags: &std::collections::BTreeMap<String, Vec<String>>,
) -> i32 {
    let f = match one_expr(session, pos, "simple-part") {
        Ok(f) => f,
        Err(e) => return emit_error("simple-part", &e),
    };
    let beta = match flags.get("support") {
        Some(v) => match parse_scalar(&v[0], &session.field) {
            Ok(x) => x,
            Err(e) => return emit_error("simple-part", &e.to_string()),
        },
        None => return emit_error("simple-part", "--support SCALAR is required"),
    };
    if num_traits::Zero::is_zero(&beta) {
        return emit_error("simple-part", "the support generator must be nonzero");
    }
    match decomposition_view(&f) {
        Ok(view) => match view.simple_part(&beta) {
            Some(s) => {
                emit(&json!({
                    "simple_part": serde_json::to_value(s).unwrap(),
                    "value": exppoly_doc(&s.exp_poly()),
                }));
                0
            }
            None => {
                emit(&json!({ "simple_part": Value::Null }));
                1
            }
        },
        Err(e) => emit_error("simple-part", &e.to_string()),
    }
}

fn cmd_zeros(
    session: &Session,
    pos: &[String],
    flags: &std::collections::BTreeMap<String, Vec<String>>,
) -> i32 {
    let f = match one_expr(session, pos, "zeros") {
        Ok(f) => f,
        Err(e) => return emit_error("zeros", &e),
    };
    let rect = match rect_from(flags) {
        Ok(r) => r,
        Err(e) => return emit_error("zeros", &e),
    };
    let tol = match flags.get("tol") {
        Some(v) => match rittlab::rat_from_str(&v[0]) {
            Some(t) => t,
            None => return emit_error("zeros", "bad tolerance"),
        },
        None => session.tol.clone(),
    };
    match isolate_zeros_prec(&f, &rect, &tol, session.precision) {
        Ok(zs) => {
            emit(&json!({
                "count": zs.len(),
                "zeros": serde_json::to_value(&zs).unwrap(),
            }));
            0
        }
        Err(e) => emit_error("zeros", &e.to_string()),
    }
}

fn cmd_evidence(
    session: &Session,
    pos: &[String],
    flags: &std::collections::BTreeMap<String, Vec<String>>,
) -> i32 {
    if pos.is_empty() {
        return emit_error("evidence", "kind required: th10 | simple | explain");
    }
    let rect = match rect_from(flags) {
        Ok(r) => r,
        Err(e) => return emit_error("evidence", &e),
    };
    let tol = session.tol.clone();
    let kind = pos[0].as_str();
    let exprs = &pos[1..];
    let report = match kind {
        "th10" => {
            let (f1, f2) = match two_exprs(session, exprs, "evidence th10") {
                Ok(x) => x,
                Err(e) => return emit_error("evidence", &e),
            };
            let g = match ep_gcd_refined(&f1, &f2, session.refine) {
                Ok(g) => g,
                Err(e) => return emit_error("evidence", &e.to_string()),
            };
            evidence_common_zeros_vs_gcd(&f1, &f2, &g, &rect, &tol)
        }
        "simple" => {
            let f = match one_expr(session, exprs, "evidence simple") {
                Ok(f) => f,
                Err(e) => return emit_error("evidence", &e),
            };
            evidence_simple_zeros(&f, &rect, &tol)
        }
        "explain" => {
            let (f, g) = match two_exprs(session, exprs, "evidence explain") {
                Ok(x) => x,
                Err(e) => return emit_error("evidence", &e),
            };
            evidence_division_explains_zero(&f, &g, &rect, &tol)
        }
        other => return emit_error("evidence", &format!("unknown evidence kind `{}`", other)),
    };
    match report {
        Ok(r) => {
            emit(&serde_json::to_value(&r).unwrap());
            if r.pass {
                0
            } else {
                1
            }
        }
        Err(e) => emit_error("evidence", &e.to_string()),
    }
}

fn flag_num<T: std::str::FromStr>(
    flags: &std::collections::BTreeMap<String, Vec<String>>,
    name: &str,
) -> Result<T, String> {
    flags
        .get(name)
        .ok_or_else(|| format!("--{} is required", name))?
        .first()
        .unwrap()
        .parse()
        .map_err(|_| format!("bad value for --{}", name))
}

fn cmd_mroot(flags: &std::collections::BTreeMap<String, Vec<String>>) -> i32 {
    let run = || -> Result<Value, String> {
        let op = polys_from_json(
            flags
                .get("op")
                .ok_or("--op JSON is required")?
                .first()
                .unwrap(),
        )?;
        let init = rats_from_json(
            flags
                .get("init")
                .ok_or("--init JSON is required")?
                .first()
                .unwrap(),
        )?;
        let m: u32 = flag_num(flags, "m")?;
        let len: usize = flag_num(flags, "len")?;
        let series = HolonomicSeries::new(op, init).map_err(|e| e.to_string())?;
        let b = mth_root_series(&series, m, len).map_err(|e| e.to_string())?;
        Ok(json!({
            "b": b.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        }))
    };
    match run() {
        Ok(doc) => {
            emit(&doc);
            0
        }
        Err(e) => emit_error("mroot", &e),
    }
}

fn cmd_guess_op(flags: &std::collections::BTreeMap<String, Vec<String>>) -> i32 {
    let run = || -> Result<Option<Value>, String> {
        let series = rats_from_json(
            flags
                .get("series")
                .ok_or("--series JSON is required")?
                .first()
                .unwrap(),
        )?;
        let order: usize = flag_num(flags, "order")?;
        let degree: usize = flag_num(flags, "degree")?;
        let window: usize = flag_num(flags, "window")?;
        let margin: usize = flag_num::<usize>(flags, "margin").unwrap_or(10);
        if series.len() < window + margin + order {
            return Err(format!(
                "need at least {} coefficients",
                window + margin + order
            ));
        }
        Ok(guess_operator(&series, order, degree, window, margin).map(|op| {
            json!({
                "operator": op
                    .iter()
                    .map(|p| p.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        }))
    };
    match run() {
        Ok(Some(doc)) => {
            emit(&doc);
            0
        }
        Ok(None) => {
            emit(&json!({ "operator": Value::Null }));
            1
        }
        Err(e) => emit_error("guess-op", &e),
    }
}

fn cmd_denoms(flags: &std::collections::BTreeMap<String, Vec<String>>) -> i32 {
    let run = || -> Result<(Value, bool), String> {
        let series = rats_from_json(
            flags
                .get("series")
                .ok_or("--series JSON is required")?
                .first()
                .unwrap(),
        )?;
        let m: u32 = flag_num(flags, "m")?;
        let d: u32 = flag_num(flags, "d")?;
        let report = denominator_profile(&series, m, d);
        let pass = report.pass;
        Ok((serde_json::to_value(&report).unwrap(), pass))
    };
    match run() {
        Ok((doc, pass)) => {
            emit(&doc);
            if pass {
                0
            } else {
                1
            }
        }
        Err(e) => emit_error("denoms", &e),
    }
}

fn cmd_bessel(session: &Session, flags: &std::collections::BTreeMap<String, Vec<String>>) -> i32 {
    let n: i64 = match flag_num(flags, "n") {
        Ok(n) => n,
        Err(e) => return emit_error("bessel", &e),
    };
    match bessel::bessel_split(&session.field, n) {
        Ok(split) => {
            emit(&json!({
                "n": n,
                "a": serde_json::to_value(&split.a).unwrap(),
                "b": serde_json::to_value(&split.b).unwrap(),
                "t": exppoly_doc(&split.t),
            }));
            0
        }
        Err(e) => emit_error("bessel", &e.to_string()),
    }
}

fn cmd_bessel_certify(
    session: &Session,
    flags: &std::collections::BTreeMap<String, Vec<String>>,
) -> i32 {
    let n: i64 = match flag_num(flags, "n") {
        Ok(n) => n,
        Err(e) => return emit_error("bessel-certify", &e),
    };
    match bessel::bessel_certify(&session.field, n) {
        Ok(cert) => {
            emit(&json!({
                "n": n,
                "certificate": serde_json::to_value(&cert).unwrap(),
            }));
            0
        }
        Err(e) => emit_error("bessel-certify", &e.to_string()),
    }
}

