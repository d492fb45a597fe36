use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use gl3cg::agkz::{normalization_constant, Normalization};
use gl3cg::alphabet::MultiplicityLabel;
use gl3cg::oracle::oracle_threej_all;
use gl3cg::pattern::pattern_shift_vector;
use gl3cg::scalar::format_rational;
use gl3cg::threej::{dual_slot_pattern, Engine, ThreeJQuery};
use gl3cg::{GtPattern, HighestWeight, Rational};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::args::{Method, NormArg};
use crate::query::{CliError, CliResult, Triple};

pub const SCHEMA_VERSION: u32 = 1;

pub type OracleTable = BTreeMap<(GtPattern, GtPattern, GtPattern), Rational>;

/// Oracle coefficients rescaled to the requested normalization.
pub fn oracle_value(table: &OracleTable, q: &ThreeJQuery, norm: Normalization) -> CliResult<Rational> {
    let p_c = dual_slot_pattern(&q.u, &q.p_u)?;
    let mut value = table
        .get(&(q.p_v, q.p_w, p_c))
        .cloned()
        .ok_or_else(|| CliError::Internal(format!("oracle has no entry for {} {} {}", q.p_v, q.p_w, p_c)))?;
    if norm != Normalization::Unit {
        for p in [&q.p_v, &q.p_w, &p_c] {
            value /= normalization_constant(&pattern_shift_vector(p)?, norm)?;
        }
    }
    Ok(value)
}

pub fn oracle_table(q: &ThreeJQuery) -> CliResult<OracleTable> {
    Ok(oracle_threej_all(&q.v, &q.w, &q.u, &q.label)?)
}

fn top3(p: &GtPattern) -> [i64; 3] {
    [p.mid[0], p.mid[1], p.bot]
}

/// One evaluated coefficient in its serialized shape.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Record {
    pub schema_version: u32,
    pub weights: Triple<[i64; 3]>,
    pub patterns: Triple<[i64; 3]>,
    pub label: [u32; 8],
    pub method: String,
    pub normalization: String,
    pub value: String,
    pub lattice_kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub varpi: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<BTreeMap<String, f64>>,
}

#[derive(Serialize)]
struct CacheKey<'a> {
    schema_version: u32,
    weights: &'a Triple<[i64; 3]>,
    patterns: &'a Triple<[i64; 3]>,
    label: [u32; 8],
    method: &'a str,
    normalization: &'a str,
}

fn weights_of(q: &ThreeJQuery) -> Triple<[i64; 3]> {
    Triple { v: q.v.m, w: q.w.m, u: q.u.m }
}

fn patterns_of(q: &ThreeJQuery) -> Triple<[i64; 3]> {
    Triple { v: top3(&q.p_v), w: top3(&q.p_w), u: top3(&q.p_u) }
}

fn cache_path(q: &ThreeJQuery, method: Method, norm: NormArg) -> Option<PathBuf> {
    let dir = std::env::var_os("GL3_CACHE_DIR")?;
    let key = CacheKey {
        schema_version: SCHEMA_VERSION,
        weights: &weights_of(q),
        patterns: &patterns_of(q),
        label: q.label.to_array(),
        method: method.name(),
        normalization: norm.name(),
    };
    let bytes = serde_json::to_vec(&key).expect("cache key serializes");
    Some(PathBuf::from(dir).join(format!("{}.json", hex::encode(Sha256::digest(&bytes)))))
}

pub struct Evaluated {
    pub record: Record,
    pub cache_hit: bool,
}

/// Evaluate a single query, consulting and filling the cache when enabled.
pub fn evaluate(q: &ThreeJQuery, method: Method, norm: NormArg, engine: &Engine) -> CliResult<Evaluated> {
    let path = cache_path(q, method, norm);
    if let Some(p) = &path {
        if let Ok(text) = std::fs::read_to_string(p) {
            if let Ok(record) = serde_json::from_str::<Record>(&text) {
                return Ok(Evaluated { record, cache_hit: true });
            }
        }
    }
    let mut timings = BTreeMap::new();
    let mut value = None;
    let mut varpi = None;
    if method != Method::Oracle {
        let t = Instant::now();
        let r = engine.threej(q)?;
        timings.insert("formula_seconds".to_string(), t.elapsed().as_secs_f64());
        varpi = r.varpi.map(|v| v.to_string());
        value = Some(r.value);
    }
    if method != Method::Formula {
        let t = Instant::now();
        let o = oracle_value(&oracle_table(q)?, q, norm.mode())?;
        timings.insert("oracle_seconds".to_string(), t.elapsed().as_secs_f64());
        if let Some(f) = &value {
            if *f != o {
                return Err(CliError::Internal(format!(
                    "formula {} != oracle {} for {}",
                    format_rational(f),
                    format_rational(&o),
                    describe(q)
                )));
            }
        }
        value = Some(o);
    }
    let record = Record {
        schema_version: SCHEMA_VERSION,
        weights: weights_of(q),
        patterns: patterns_of(q),
        label: q.label.to_array(),
        method: method.name().to_string(),
        normalization: norm.name().to_string(),
        value: format_rational(&value.expect("some method ran")),
        lattice_kind: q.label.lattice_kind().name().to_string(),
        varpi,
        timings: Some(timings),
    };
    if let Some(p) = &path {
        let stored = Record { timings: None, ..record.clone() };
        // caching is best effort; a failed write only costs a recomputation
        let _ = std::fs::create_dir_all(p.parent().expect("cache file has a parent"));
        let _ = std::fs::write(p, serde_json::to_string(&stored).expect("record serializes"));
    }
    Ok(Evaluated { record, cache_hit: false })
}

/// The full query on one line, for failure reports.
pub fn describe(q: &ThreeJQuery) -> String {
    describe_parts(&q.v, &q.w, &q.u, &q.p_v, &q.p_w, &q.p_u, &q.label)
}

pub fn describe_parts(
    v: &HighestWeight,
    w: &HighestWeight,
    u: &HighestWeight,
    p_v: &GtPattern,
    p_w: &GtPattern,
    p_u: &GtPattern,
    label: &MultiplicityLabel,
) -> String {
    format!("V={v} W={w} U={u} pV={p_v} pW={p_w} pU={p_u} label={label}")
}
