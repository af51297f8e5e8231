use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde_json::Value;

use super::schema::{ParamKind, ParamSpec, Scenario};
use crate::error::{Error, Result};
use crate::linalg::{NormTag, Rational};

const RESERVED: [&str; 3] = ["seed", "out", "scenario"];

#[derive(Clone, Debug, PartialEq)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    /// Raw values as written, validated against the scenario schema.
    pub params: BTreeMap<String, String>,
    pub seed: u64,
    pub out: Option<PathBuf>,
}

impl ScenarioConfig {
    /// A config with every parameter at its default.
    pub fn defaults(scenario: Scenario, seed: u64) -> Self {
        ScenarioConfig {
            scenario,
            params: BTreeMap::new(),
            seed,
            out: None,
        }
    }

    pub fn load(scenario: Scenario, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        ScenarioConfig::parse(scenario, &text)
    }

    /// Parse `key = value` lines (`#` starts a comment) or one JSON object.
    pub fn parse(scenario: Scenario, text: &str) -> Result<Self> {
        let entries = if text.trim_start().starts_with('{') {
            json_entries(text)?
        } else {
            line_entries(text)?
        };
        let mut cfg = ScenarioConfig::defaults(scenario, 0);
        for (key, value) in entries {
            cfg.set(&key, &value)?;
        }
        Ok(cfg)
    }

    /// Set one key, validating it against the schema.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "seed" => {
                self.seed = value
                    .parse()
                    .map_err(|_| Error::Config(format!("seed `{value}` is not a 64-bit unsigned integer")))?;
            }
            "out" => self.out = Some(PathBuf::from(value)),
            "scenario" => {
                if value != self.scenario.as_str() {
                    return Err(Error::Config(format!(
                        "config is for scenario `{value}` but `{}` was requested",
                        self.scenario
                    )));
                }
            }
            _ => {
                let spec = self.scenario.param(key).ok_or_else(|| self.unknown_key(key))?;
                check_value(spec, value)?;
                self.params.insert(key.to_string(), value.to_string());
            }
        }
        Ok(())
    }

    fn unknown_key(&self, key: &str) -> Error {
        let mut valid: Vec<&str> = self.scenario.params().iter().map(|p| p.name).collect();
        valid.extend(RESERVED);
        Error::Config(format!(
            "unknown key `{key}` for scenario {}; valid keys: {}",
            self.scenario,
            valid.join(", ")
        ))
    }

    /// Every parameter with defaults filled in.
    pub fn resolved(&self) -> BTreeMap<String, String> {
        self.scenario
            .params()
            .iter()
            .map(|spec| {
                let v = self.params.get(spec.name).map_or(spec.default, String::as_str);
                (spec.name.to_string(), v.to_string())
            })
            .collect()
    }

    fn raw(&self, name: &str) -> &str {
        let spec = self
            .scenario
            .param(name)
            .unwrap_or_else(|| panic!("scenario {} has no parameter `{name}`", self.scenario));
        self.params.get(name).map_or(spec.default, String::as_str)
    }

    pub fn int(&self, name: &str) -> Result<usize> {
        parse_int(name, self.raw(name))
    }

    pub fn rational(&self, name: &str) -> Result<Rational> {
        parse_rational(name, self.raw(name))
    }

    pub fn rationals(&self, name: &str) -> Result<Vec<Rational>> {
        split_list(self.raw(name)).map(|s| parse_rational(name, s)).collect()
    }

    pub fn ints(&self, name: &str) -> Result<Vec<usize>> {
        split_list(self.raw(name)).map(|s| parse_int(name, s)).collect()
    }

    pub fn float(&self, name: &str) -> Result<f64> {
        parse_float(name, self.raw(name))
    }

    pub fn norm(&self, name: &str) -> Result<NormTag> {
        self.raw(name)
            .parse()
            .map_err(|_| Error::Config(format!("{name}: `{}` is not one of l1, l2, linf", self.raw(name))))
    }

    pub fn choice(&self, name: &str) -> &str {
        self.raw(name)
    }
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty())
}

fn parse_int(name: &str, s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Config(format!("{name}: `{s}` is not a nonnegative integer")))
}

fn parse_rational(name: &str, s: &str) -> Result<Rational> {
    s.trim()
        .parse()
        .map_err(|_| Error::Config(format!("{name}: `{s}` is not a rational")))
}

fn parse_float(name: &str, s: &str) -> Result<f64> {
    match s.trim().parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Config(format!("{name}: `{s}` is not a finite number"))),
    }
}

fn check_value(spec: &ParamSpec, value: &str) -> Result<()> {
    let name = spec.name;
    match spec.kind {
        ParamKind::Int => parse_int(name, value).map(drop),
        ParamKind::Rational => parse_rational(name, value).map(drop),
        ParamKind::RationalList => split_list(value).try_for_each(|s| parse_rational(name, s).map(drop)),
        ParamKind::IntList => split_list(value).try_for_each(|s| parse_int(name, s).map(drop)),
        ParamKind::Float => parse_float(name, value).map(drop),
        ParamKind::Norm => value
            .parse::<NormTag>()
            .map(drop)
            .map_err(|_| Error::Config(format!("{name}: `{value}` is not one of l1, l2, linf"))),
        ParamKind::Choice(options) => {
            if options.contains(&value) {
                Ok(())
            } else {
                Err(Error::Config(format!(
                    "{name}: `{value}` is not one of {}",
                    options.join(", ")
                )))
            }
        }
    }
}

fn line_entries(text: &str) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected `key = value`", no + 1)))?;
        let value = value.trim().trim_matches('"');
        out.push((key.trim().to_string(), value.to_string()));
    }
    Ok(out)
}

fn json_entries(text: &str) -> Result<Vec<(String, String)>> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Config(format!("invalid JSON config: {e}")))?;
    let Value::Object(map) = value else {
        return Err(Error::Config("JSON config must be an object".into()));
    };
    map.into_iter()
        .map(|(k, v)| {
            let text = json_text(&k, &v)?;
            Ok((k, text))
        })
        .collect()
}

fn json_text(key: &str, v: &Value) -> Result<String> {
    Ok(match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Array(items) => items
            .iter()
            .map(|x| json_text(key, x))
            .collect::<Result<Vec<_>>>()?
            .join(", "),
        Value::Null | Value::Object(_) => {
            return Err(Error::Config(format!("{key}: nested objects and nulls are not allowed")))
        }
    })
}
