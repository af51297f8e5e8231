use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Klee,
    FdDense,
    Separated,
    Incomplete,
    GeometricVariant,
    SlidingHump,
    FreeSet,
    Cover,
    Probe,
}

impl Scenario {
    pub const ALL: [Scenario; 9] = [
        Scenario::Klee,
        Scenario::FdDense,
        Scenario::Separated,
        Scenario::Incomplete,
        Scenario::GeometricVariant,
        Scenario::SlidingHump,
        Scenario::FreeSet,
        Scenario::Cover,
        Scenario::Probe,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Scenario::Klee => "klee",
            Scenario::FdDense => "fd-dense",
            Scenario::Separated => "separated",
            Scenario::Incomplete => "incomplete",
            Scenario::GeometricVariant => "geometric-variant",
            Scenario::SlidingHump => "sliding-hump",
            Scenario::FreeSet => "free-set",
            Scenario::Cover => "cover",
            Scenario::Probe => "probe",
        }
    }

    pub fn params(self) -> &'static [ParamSpec] {
        match self {
            Scenario::Klee => KLEE,
            Scenario::FdDense => FD_DENSE,
            Scenario::Separated => SEPARATED,
            Scenario::Incomplete => INCOMPLETE,
            Scenario::GeometricVariant => GEOMETRIC_VARIANT,
            Scenario::SlidingHump => SLIDING_HUMP,
            Scenario::FreeSet => FREE_SET,
            Scenario::Cover => COVER,
            Scenario::Probe => PROBE,
        }
    }

    pub fn param(self, name: &str) -> Option<&'static ParamSpec> {
        self.params().iter().find(|p| p.name == name)
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scenario::ALL.into_iter().find(|sc| sc.as_str() == s).ok_or_else(|| {
            let names: Vec<&str> = Scenario::ALL.iter().map(|s| s.as_str()).collect();
            Error::Config(format!("unknown scenario `{s}`; valid: {}", names.join(", ")))
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParamKind {
    /// Nonnegative integer.
    Int,
    /// `p`, `p/q` or a decimal.
    Rational,
    /// Comma-separated rationals.
    RationalList,
    /// Comma-separated nonnegative integers.
    IntList,
    Float,
    Norm,
    Choice(&'static [&'static str]),
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: &'static str,
    pub doc: &'static str,
}

const fn p(name: &'static str, kind: ParamKind, default: &'static str, doc: &'static str) -> ParamSpec {
    ParamSpec {
        name,
        kind,
        default,
        doc,
    }
}

use ParamKind::*;

const KLEE: &[ParamSpec] = &[
    p("lambdas", RationalList, "1/20, 1/10, 3/20, 1/5, 1/4, 3/10, 7/20, 2/5", "distinct nodes in (0, 1/2)"),
    p("d", Int, "5", "truncation dimension"),
];

const FD_DENSE: &[ParamSpec] = &[
    p("d", Int, "2", "ambient dimension"),
    p("n", Int, "8", "number of vectors"),
    p("norm", Norm, "l2", "norm of the target balls"),
];

const SEPARATED: &[ParamSpec] = &[
    p("d", Int, "3", "ambient dimension"),
    p("eps", Rational, "1/4", "Riesz slack, in (0, 1)"),
    p("norm", Norm, "linf", "norm of the space"),
];

const INCOMPLETE: &[ParamSpec] = &[
    p("scale", Rational, "1/2", "target y(n) = scale·ratioⁿ"),
    p("ratio", Rational, "1/2", "geometric ratio, in (0, 1)"),
    p("k", Int, "12", "last index K"),
    p("norm", Norm, "l1", "norm of the space"),
    p("subsequence", IntList, "8, 10, 12", "indices k_i annihilated by e*"),
    p("j_max", Int, "5", "largest j in the decay check"),
    p("k_max", Int, "80", "range of the decay profile"),
    p("check_k", Int, "40", "k at which B(j, k) is compared with tol"),
    p("tol", Float, "0.001", "decay-forcing threshold τ"),
];

const GEOMETRIC_VARIANT: &[ParamSpec] = &[
    p("scale", Rational, "1/2", "target y(n) = scale·ratioⁿ"),
    p("ratio", Rational, "1/2", "geometric ratio, in (0, 1)"),
    p("k", Int, "8", "last index K"),
    p("norm", Norm, "l1", "norm of the space"),
    p("schedule", Choice(&["harmonic", "dyadic"]), "harmonic", "nodes λ_n"),
    p("j_max", Int, "3", "rate condition checked for j ≤ j_max"),
    p("threshold", Rational, "1", "last rate value must be below this"),
];

const SLIDING_HUMP: &[ParamSpec] = &[
    p("len", Int, "200", "index range [0, L)"),
    p("head_mass", Rational, "3/10", "prescribed N"),
    p("eps", Rational, "1/20", "extraction slack ε"),
    p("head_width", Int, "3", "coordinates carrying the head mass"),
    p("tail_width", Int, "5", "width of each disjoint tail block"),
    p("decoys", Int, "2", "members with a heavy head"),
    p("samples", Int, "10000", "coefficient samples on Σ|a_j| = 1"),
];

const FREE_SET: &[ParamSpec] = &[
    p("n", Int, "6", "index range [0, n)"),
    p("f", Choice(&["chain", "identity", "complete", "random"]), "chain", "set mapping"),
    p("max_size", Int, "2", "largest |f(i)| for random mappings"),
];

const COVER: &[ParamSpec] = &[p(
    "instance",
    Choice(&["both", "coordinate", "klee"]),
    "both",
    "covered coordinate grid, Klee escape, or both",
)];

const PROBE: &[ParamSpec] = &[
    p("sequence", Choice(&["incomplete", "basis"]), "incomplete", "g_k of the incomplete model or e_n"),
    p("k", Int, "25", "last index K"),
    p("window", Int, "10", "coordinate window W"),
    p("tol", Float, "0.000001", "norm-convergence threshold τ"),
];

impl ParamSpec {
    fn json_type(&self) -> Value {
        match self.kind {
            Int => json!({"type": ["integer", "string"]}),
            Float => json!({"type": ["number", "string"]}),
            Rational => json!({"type": ["number", "string"]}),
            RationalList | IntList => json!({"type": ["array", "string"]}),
            Norm => json!({"enum": ["l1", "l2", "linf"]}),
            Choice(options) => json!({ "enum": options }),
        }
    }
}

/// JSON Schema for a scenario's config object.
pub fn json_schema(scenario: Scenario) -> Value {
    let mut props = serde_json::Map::new();
    props.insert("seed".into(), json!({"type": ["integer", "string"], "description": "64-bit seed"}));
    props.insert("out".into(), json!({"type": "string", "description": "report path"}));
    props.insert("scenario".into(), json!({"const": scenario.as_str()}));
    for spec in scenario.params() {
        let mut entry = spec.json_type();
        entry["description"] = json!(spec.doc);
        entry["default"] = json!(spec.default);
        props.insert(spec.name.into(), entry);
    }
    json!({
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "title": format!("oclab {scenario} config"),
        "type": "object",
        "properties": props,
        "additionalProperties": false,
    })
}
