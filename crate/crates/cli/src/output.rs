//! Structured output: JSON with sorted keys, or CSV with a frozen column
//! order. Integers that fit in 64 bits are JSON numbers, larger ones are
//! decimal strings; rationals are strings `p/q` in lowest terms with `q > 0`
//! (`p` alone when `q = 1`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{Map, Value};
use vdlab::regularity_lab::RegularityRecord;

pub const SCHEMA_VERSION: u32 = 1;

pub fn int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

pub fn ints(vs: &[BigInt]) -> Value {
    Value::Array(vs.iter().map(int).collect())
}

pub fn rat(v: &BigRational) -> Value {
    Value::String(v.to_string())
}

pub fn rats(vs: &[BigRational]) -> Value {
    Value::Array(vs.iter().map(rat).collect())
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// One row of a command's result, shared by the JSON and CSV renderings.
#[derive(Clone, Debug, Default)]
pub struct ScanRecord {
    pub command: String,
    pub tuple: String,
    pub flavor: Option<String>,
    pub dim: Option<i64>,
    pub codim: Option<i64>,
    pub degree: Option<BigInt>,
    pub hilbert_numerator: Option<Vec<BigInt>>,
    pub regular: Option<bool>,
    pub empty: Option<bool>,
    pub conjectural: Option<bool>,
    pub inconclusive: bool,
    pub degenerate: Option<bool>,
    pub detail: String,
    pub wall_ms: Option<u64>,
}

impl ScanRecord {
    pub const HEADER: [&'static str; 15] = [
        "schema_version",
        "command",
        "tuple",
        "flavor",
        "dim",
        "codim",
        "degree",
        "hilbert_numerator",
        "regular",
        "empty",
        "conjectural",
        "inconclusive",
        "degenerate",
        "detail",
        "wall_ms",
    ];

    pub fn new(command: &str, tuple: impl Into<String>) -> Self {
        ScanRecord { command: command.into(), tuple: tuple.into(), ..Default::default() }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        m.insert("command".into(), Value::from(self.command.clone()));
        m.insert("tuple".into(), Value::from(self.tuple.clone()));
        m.insert("flavor".into(), to_value(&self.flavor));
        m.insert("dim".into(), to_value(&self.dim));
        m.insert("codim".into(), to_value(&self.codim));
        m.insert("degree".into(), self.degree.as_ref().map_or(Value::Null, int));
        m.insert("hilbert_numerator".into(), self.hilbert_numerator.as_deref().map_or(Value::Null, ints));
        m.insert("regular".into(), to_value(&self.regular));
        m.insert("empty".into(), to_value(&self.empty));
        m.insert("conjectural".into(), to_value(&self.conjectural));
        m.insert("inconclusive".into(), Value::from(self.inconclusive));
        m.insert("degenerate".into(), to_value(&self.degenerate));
        m.insert("detail".into(), Value::from(self.detail.clone()));
        m.insert("wall_ms".into(), to_value(&self.wall_ms));
        Value::Object(m)
    }

    pub fn to_row(&self) -> Vec<String> {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(ToString::to_string).unwrap_or_default()
        }
        vec![
            SCHEMA_VERSION.to_string(),
            self.command.clone(),
            self.tuple.clone(),
            opt(&self.flavor),
            opt(&self.dim),
            opt(&self.codim),
            opt(&self.degree),
            self.hilbert_numerator
                .as_ref()
                .map(|n| n.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
                .unwrap_or_default(),
            opt(&self.regular),
            opt(&self.empty),
            opt(&self.conjectural),
            self.inconclusive.to_string(),
            opt(&self.degenerate),
            self.detail.clone(),
            opt(&self.wall_ms),
        ]
    }
}

pub enum Records {
    Scan(Vec<ScanRecord>),
    Regularity(Vec<RegularityRecord>),
}

impl Records {
    pub fn any_inconclusive(&self) -> bool {
        match self {
            Records::Scan(r) => r.iter().any(|x| x.inconclusive),
            Records::Regularity(r) => r.iter().any(RegularityRecord::is_inconclusive),
        }
    }
}

/// A command's full result: top-level fields for JSON plus the row records.
pub struct Output {
    pub command: String,
    pub fields: Map<String, Value>,
    pub records: Records,
}

impl Output {
    pub fn new(command: &str, records: Records) -> Self {
        Output { command: command.into(), fields: Map::new(), records }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    pub fn inconclusive(&self) -> bool {
        self.records.any_inconclusive() || self.fields.get("inconclusive") == Some(&Value::Bool(true))
    }

    pub fn to_json(&self) -> String {
        let mut m = self.fields.clone();
        m.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        m.insert("command".into(), Value::from(self.command.clone()));
        let records = match &self.records {
            Records::Scan(r) => r.iter().map(ScanRecord::to_json).collect(),
            Records::Regularity(r) => r.iter().map(to_value).collect(),
        };
        m.insert("records".into(), Value::Array(records));
        let mut s = serde_json::to_string_pretty(&Value::Object(m)).expect("serializable");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        match &self.records {
            Records::Scan(r) => {
                w.write_record(ScanRecord::HEADER).expect("in-memory write");
                for rec in r {
                    w.write_record(rec.to_row()).expect("in-memory write");
                }
            }
            Records::Regularity(r) => {
                w.write_record(RegularityRecord::CSV_HEADER).expect("in-memory write");
                for rec in r {
                    w.write_record(rec.csv_row()).expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}
