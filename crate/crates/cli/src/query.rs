use std::io::Read;

use gl3cg::alphabet::{multiplicity_basis, MultiplicityLabel};
use gl3cg::threej::ThreeJQuery;
use gl3cg::{GtPattern, HighestWeight};
use serde::{Deserialize, Serialize};

use crate::args::{Format, Method, ThreejArgs};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<gl3cg::Error> for CliError {
    fn from(e: gl3cg::Error) -> Self {
        use gl3cg::Error::*;
        match e {
            Inconsistent(_) | NoSolution(_) | LatticeRank { .. } | DependentBasis | UnboundedSupport => {
                CliError::Internal(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

fn parse_ints<const N: usize>(s: &str, what: &str) -> CliResult<[i64; N]> {
    let parts: Vec<i64> = s
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| CliError::Input(format!("{what} `{s}`: {e}")))?;
    parts
        .try_into()
        .map_err(|_| CliError::Input(format!("{what} `{s}`: expected {N} comma-separated integers")))
}

pub fn parse_weight(s: &str) -> CliResult<HighestWeight> {
    let [a, b, c] = parse_ints::<3>(s, "weight")?;
    Ok(HighestWeight::new(a, b, c)?)
}

pub fn weight_from(m: [i64; 3]) -> CliResult<HighestWeight> {
    Ok(HighestWeight::new(m[0], m[1], m[2])?)
}

pub fn pattern_from(top: &HighestWeight, p: [i64; 3]) -> CliResult<GtPattern> {
    Ok(GtPattern::new(top.m, [p[0], p[1]], p[2])?)
}

pub fn parse_pattern(top: &HighestWeight, s: &str) -> CliResult<GtPattern> {
    pattern_from(top, parse_ints::<3>(s, "pattern")?)
}

pub fn parse_label(s: &str) -> CliResult<MultiplicityLabel> {
    let a = parse_ints::<8>(s, "label")?;
    let mut out = [0u32; 8];
    for (o, x) in out.iter_mut().zip(a) {
        *o = u32::try_from(x).map_err(|_| CliError::Input(format!("label `{s}`: negative exponent")))?;
    }
    Ok(MultiplicityLabel::from_array(out))
}

/// `k1,k2,σ`.
pub fn pattern_text(p: &GtPattern) -> String {
    format!("{},{},{}", p.mid[0], p.mid[1], p.bot)
}

pub fn label_text(l: &MultiplicityLabel) -> String {
    l.to_array().map(|x| x.to_string()).join(",")
}

/// Resolve an explicit label or an index into the multiplicity basis.
pub fn pick_label(
    v: &HighestWeight,
    w: &HighestWeight,
    u: &HighestWeight,
    label: Option<MultiplicityLabel>,
    index: Option<usize>,
) -> CliResult<MultiplicityLabel> {
    let basis = multiplicity_basis(v, w, u);
    match (label, index) {
        (Some(l), _) => Ok(l),
        (None, Some(i)) => basis.get(i).copied().ok_or_else(|| {
            CliError::Input(format!("label index {i} out of range; {u} occurs {} time(s) in {v} x {w}", basis.len()))
        }),
        (None, None) if basis.len() == 1 => Ok(basis[0]),
        (None, None) => Err(CliError::Input(format!(
            "{u} occurs {} time(s) in {v} x {w}; pass --label or --label-index",
            basis.len()
        ))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Triple<T> {
    pub v: T,
    pub w: T,
    pub u: T,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum LabelSpec {
    Exponents([u32; 8]),
    Index(usize),
}

/// The JSON form of a single query; `weights`, `patterns` and `label` use the
/// same shapes as the JSON output.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QueryDocument {
    pub weights: Triple<[i64; 3]>,
    pub patterns: Triple<[i64; 3]>,
    pub label: LabelSpec,
    pub method: Option<Method>,
    pub format: Option<Format>,
}

fn read_document(src: &str) -> CliResult<String> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = src.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{path}: {e}")))
    } else {
        Ok(src.to_string())
    }
}

fn required<'a>(x: &'a Option<String>, flag: &str) -> CliResult<&'a str> {
    x.as_deref().ok_or_else(|| CliError::Input(format!("missing --{flag}")))
}

pub struct Resolved {
    pub query: ThreeJQuery,
    pub method: Method,
    pub format: Format,
}

pub fn resolve_threej(a: &ThreejArgs) -> CliResult<Resolved> {
    let flags_method = a.out.method;
    let flags_format = a.out.format;
    if let Some(src) = &a.query {
        let doc: QueryDocument = serde_json::from_str(&read_document(src)?)
            .map_err(|e| CliError::Input(format!("query document: {e}")))?;
        let (v, w, u) = (weight_from(doc.weights.v)?, weight_from(doc.weights.w)?, weight_from(doc.weights.u)?);
        let label = match doc.label {
            LabelSpec::Exponents(e) => pick_label(&v, &w, &u, Some(MultiplicityLabel::from_array(e)), None)?,
            LabelSpec::Index(i) => pick_label(&v, &w, &u, None, Some(i))?,
        };
        let query = ThreeJQuery {
            v,
            w,
            u,
            p_v: pattern_from(&v, doc.patterns.v)?,
            p_w: pattern_from(&w, doc.patterns.w)?,
            p_u: pattern_from(&u, doc.patterns.u)?,
            label,
        };
        return Ok(Resolved {
            query,
            method: flags_method.or(doc.method).unwrap_or(Method::Formula),
            format: flags_format.or(doc.format).unwrap_or(Format::Plain),
        });
    }
    let v = parse_weight(required(&a.v, "v")?)?;
    let w = parse_weight(required(&a.w, "w")?)?;
    let u = parse_weight(required(&a.u, "u")?)?;
    let label = a.label.as_deref().map(parse_label).transpose()?;
    let query = ThreeJQuery {
        v,
        w,
        u,
        p_v: parse_pattern(&v, required(&a.pv, "pv")?)?,
        p_w: parse_pattern(&w, required(&a.pw, "pw")?)?,
        p_u: parse_pattern(&u, required(&a.pu, "pu")?)?,
        label: pick_label(&v, &w, &u, label, a.label_index)?,
    };
    Ok(Resolved {
        query,
        method: flags_method.unwrap_or(Method::Formula),
        format: flags_format.unwrap_or(Format::Plain),
    })
}
