//! Session state: one field, named bindings, numeric options.

use crate::parser::{parse_expression, parse_field};
use rittlab::numberfield::FieldDesc;
use rittlab::{ExpPoly, Rat};
use std::collections::BTreeMap;
use std::sync::Arc;

pub struct Session {
    pub field: Arc<FieldDesc>,
    pub bindings: BTreeMap<String, ExpPoly>,
    pub tol: Rat,
    pub refine: u32,
    pub precision: u32,
}

impl Session {
    pub fn create(
        field_decl: Option<&str>,
        tol: Option<&str>,
        refine: Option<&str>,
        precision: Option<&str>,
    ) -> Result<Session, String> {
        let field = match field_decl {
            Some(decl) => parse_field(decl)?,
            None => FieldDesc::gaussian(),
        };
        let tol = match tol {
            Some(t) => rittlab::rat_from_str(t).ok_or_else(|| format!("bad tolerance `{}`", t))?,
            None => rittlab::rat(1, 1_000_000_000),
        };
        let refine = match refine {
            Some(r) => r.parse().map_err(|_| format!("bad refine `{}`", r))?,
            None => 1,
        };
        let precision = match precision {
            Some(p) => p.parse().map_err(|_| format!("bad precision `{}`", p))?,
            None => std::env::var("RITTLAB_PRECISION")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(512),
        };
        if tol <= Rat::from_integer(0.into()) {
            return Err("tolerance must be positive".to_string());
        }
        Ok(Session {
            field,
            bindings: BTreeMap::new(),
            tol,
            refine,
            precision,
        })
    }

    pub fn parse(&self, src: &str) -> Result<ExpPoly, String> {
        parse_expression(src, &self.field, &self.bindings).map_err(|e| e.to_string())
    }

    /// All bound objects share the session field, so a field change
    /// clears the bindings.
    pub fn set_field(&mut self, decl: &str) -> Result<(), String> {
        self.field = parse_field(decl)?;
        self.bindings.clear();
        Ok(())
    }

    /// `let <name> = <expr>` with the `let` already consumed.
    pub fn bind(&mut self, words: &[String]) -> Result<String, String> {
        if words.len() < 3 || words[1] != "=" {
            return Err("expected `let <name> = <expr>`".to_string());
        }
        let name = words[0].clone();
        if !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
            || matches!(name.as_str(), "t" | "x" | "exp")
        {
            return Err(format!("bad binding name `{}`", name));
        }
        let src = words[2..].join(" ");
        let value = self.parse(&src)?;
        self.bindings.insert(name.clone(), value);
        Ok(name)
    }

    /// `set tol 1/1000`, `set refine 2`, `set precision 256`.
    pub fn set_option(&mut self, words: &[String]) -> Result<(), String> {
        if words.len() != 2 {
            return Err("expected `set <option> <value>`".to_string());
        }
        match words[0].as_str() {
            "tol" => {
                let t = rittlab::rat_from_str(&words[1])
                    .ok_or_else(|| format!("bad tolerance `{}`", words[1]))?;
                if t <= Rat::from_integer(0.into()) {
                    return Err("tolerance must be positive".to_string());
                }
                self.tol = t;
            }
            "refine" => {
                self.refine = words[1]
                    .parse()
                    .map_err(|_| format!("bad refine `{}`", words[1]))?;
            }
            "precision" => {
                self.precision = words[1]
                    .parse()
                    .map_err(|_| format!("bad precision `{}`", words[1]))?;
            }
            other => return Err(format!("unknown option `{}`", other)),
        }
        Ok(())
    }
}
