//! Text and JSON forms of polynomials.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde_json::{json, Value};

use super::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::linalg::Q;

/// `x1^2*x3`, or `None` for the constant monomial.
pub fn monomial_text(exps: &[u16], names: &[String]) -> Option<String> {
    let factors: Vec<String> = exps
        .iter()
        .zip(names)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, n)| {
            if e == 1 {
                n.clone()
            } else {
                format!("{n}^{e}")
            }
        })
        .collect();
    if factors.is_empty() {
        None
    } else {
        Some(factors.join("*"))
    }
}

pub fn rational_text(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub fn default_names(na: usize, ny: usize) -> Vec<String> {
    (1..=na)
        .map(|i| format!("a{i}"))
        .chain((1..=ny).map(|i| format!("y{i}")))
        .collect()
}

impl BiPoly {
    pub fn to_text(&self) -> String {
        self.to_text_with(&default_names(self.na(), self.ny()))
    }

    /// Render with explicit variable names (a-block then y-block).
    pub fn to_text_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            let body = match monomial_text(m.exps(), names) {
                None => rational_text(&abs),
                Some(mt) if abs.is_one() => mt,
                Some(mt) => format!("{}*{mt}", rational_text(&abs)),
            };
            match (i, neg) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        self.to_json_with(&default_names(self.na(), self.ny()))
    }

    /// `{"terms":[{"c":"-5/3","m":{"a1":2,"y2":1}}, ...]}` in canonical order.
    pub fn to_json_with(&self, names: &[String]) -> Value {
        let terms: Vec<Value> = self
            .terms()
            .map(|(m, c)| {
                let mut mm = serde_json::Map::new();
                for (e, n) in m.exps().iter().zip(names) {
                    if *e > 0 {
                        mm.insert(n.clone(), json!(e));
                    }
                }
                json!({"c": rational_text(c), "m": Value::Object(mm)})
            })
            .collect();
        json!({ "terms": terms })
    }

    /// Inverse of `to_json` for the default variable names.
    pub fn from_json(na: usize, ny: usize, v: &Value) -> Result<BiPoly> {
        let names = default_names(na, ny);
        let index: BTreeMap<&str, usize> = names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.as_str(), i))
            .collect();
        let bad = |what: &str| Error::Invariant(format!("malformed polynomial json: {what}"));
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("terms"))?;
        let mut parsed = vec![];
        for t in terms {
            let c: Q = t
                .get("c")
                .and_then(Value::as_str)
                .ok_or_else(|| bad("c"))?
                .parse()
                .map_err(|_| bad("coefficient"))?;
            let mut e = vec![0u16; na + ny];
            for (k, x) in t
                .get("m")
                .and_then(Value::as_object)
                .ok_or_else(|| bad("m"))?
            {
                let i = *index.get(k.as_str()).ok_or_else(|| bad("variable"))?;
                e[i] = x
                    .as_u64()
                    .and_then(|x| u16::try_from(x).ok())
                    .ok_or_else(|| bad("exponent"))?;
            }
            parsed.push((e, c));
        }
        BiPoly::from_terms(na, ny, parsed)
    }
}
