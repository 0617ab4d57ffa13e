//! Command line front end: expression parsing, verb dispatch, JSON output.
//!
//! Exit codes: 0 = success or PASS, 1 = mathematical negative (does not
//! divide, FAIL evidence, no operator found), 2 = error.

mod commands;
mod parser;
mod session;

use session::Session;

const USAGE: &str = "\
rittlab - exact arithmetic for exponential polynomials over a number field

USAGE:
    rittlab [--field DECL] [--tol P/Q] [--refine N] [--precision BITS] <verb> [args]
    rittlab run <script-file>

FIELD DECLARATIONS (default: gaussian):
    --field gaussian | rationals | sqrt2 | zeta8 | zeta12
    --field \"field Q(t) where t^2+1 = 0 near 0+1i\"

VERBS:
    factor EXPR                         Ritt factorization report
    gcd EXPR1 EXPR2                     normalized gcd
    divides EXPR1 EXPR2                 quotient, exit 1 when it does not divide
    normalize EXPR                      unit and normalized form
    valuation EXPR --at SCALAR          h-adic valuation at x0
    simple-part EXPR --support SCALAR   simple part for a support line
    zeros EXPR --rect A B C D [--tol T] certified zero isolation
    evidence th10 F1 F2 --rect A B C D  common zeros vs gcd (PASS/FAIL)
    evidence simple F --rect A B C D    all multiplicities one
    evidence explain F G --rect A B C D zeros of f explained by factor g
    mroot --op JSON --init JSON --m M --len L     m-th root coefficients
    guess-op --series JSON --order R --degree D --window L [--margin M]
    denoms --series JSON --m M --d D    denominator profile
    bessel --n N                        Bessel split A_n, B_n, T_n
    bessel-certify --n N                irreducibility certificate

Series JSON is an array of exact rationals as strings, e.g. [\"1\",\"0\",\"-2\"].
The environment variable RITTLAB_PRECISION sets the default precision cap
in bits (default 512).
";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    std::process::exit(run(args));
}

fn run(args: Vec<String>) -> i32 {
    if args.is_empty() || args[0] == "--help" || args[0] == "-h" {
        print!("{}", USAGE);
        return if args.is_empty() { 2 } else { 0 };
    }

    // global flags first, then verb and its arguments
    let mut field_decl: Option<String> = None;
    let mut tol: Option<String> = None;
    let mut refine: Option<String> = None;
    let mut precision: Option<String> = None;
    let mut rest: Vec<String> = Vec::new();
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--field" => field_decl = it.next(),
            "--tol" if rest.is_empty() => tol = it.next(),
            "--refine" => refine = it.next(),
            "--precision" => precision = it.next(),
            _ => {
                rest.push(a);
                rest.extend(it.by_ref());
                break;
            }
        }
    }
    if rest.is_empty() {
        eprint!("{}", USAGE);
        return 2;
    }

    let mut session = match Session::create(field_decl.as_deref(), tol.as_deref(), refine.as_deref(), precision.as_deref()) {
        Ok(s) => s,
        Err(e) => return commands::emit_error("session", &e),
    };

    let verb = rest[0].clone();
    let verb_args: Vec<String> = rest[1..].to_vec();
    if verb == "run" {
        return run_script(&mut session, &verb_args);
    }
    commands::dispatch(&mut session, &verb, &verb_args)
}

fn run_script(session: &mut Session, args: &[String]) -> i32 {
    let Some(path) = args.first() else {
        return commands::emit_error("run", "script path required");
    };
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return commands::emit_error("run", &format!("cannot read {}: {}", path, e)),
    };
    let mut worst = 0;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words = match split_script_line(line) {
            Ok(w) => w,
            Err(e) => {
                worst = worst.max(commands::emit_error(
                    "run",
                    &format!("line {}: {}", lineno + 1, e),
                ));
                continue;
            }
        };
        if words.is_empty() {
            continue;
        }
        let code = match words[0].as_str() {
            "field" => match session.set_field(line) {
                Ok(()) => 0,
                Err(e) => commands::emit_error("field", &e),
            },
            "let" => match session.bind(&words[1..]) {
                Ok(name) => {
                    println!("{{\"bound\": \"{}\"}}", name);
                    0
                }
                Err(e) => commands::emit_error("let", &e),
            },
            "set" => match session.set_option(&words[1..]) {
                Ok(()) => 0,
                Err(e) => commands::emit_error("set", &e),
            },
            verb => commands::dispatch(session, verb, &words[1..]),
        };
        worst = worst.max(code);
    }
    worst
}

/// Split a script line into words, honoring double quotes.
fn split_script_line(line: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut in_quotes = false;
    for c in line.chars() {
        match c {
            '"' => {
                if in_quotes {
                    out.push(std::mem::take(&mut cur));
                }
                in_quotes = !in_quotes;
            }
            c if c.is_whitespace() && !in_quotes => {
                if !cur.is_empty() {
                    out.push(std::mem::take(&mut cur));
                }
            }
            c => cur.push(c),
        }
    }
    if in_quotes {
        return Err("unterminated quote".to_string());
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    Ok(out)
}
