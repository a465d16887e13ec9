//! Parameter sweeps and the machine-readable report document.
//!
//! Every number in CSV and JSON output is rendered with 17 significant
//! digits by [`sig17`], so both formats carry identical decimal strings.
//! Human-readable output uses 6 significant digits ([`human`]).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

use crate::copier::{run_copier, CopyReport, CopyVariant, InputQubit, Pair};
use crate::error::{Error, Result};
use crate::separability::ppt_verdict;

pub const SCHEMA_VERSION: u32 = 1;

pub const CSV_HEADER: [&str; 13] = [
    "theta", "phi", "variant", "d1_a1", "d1_a2", "d1_a3", "d2_a2a3", "d2_a1a2", "d2_a1a3", "d3",
    "s_a2", "fid_a2", "E_a2a3",
];

/// `x` with 17 significant digits in scientific notation, e.g.
/// `5.5555555555555552e-2`. The result is a valid JSON number.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// `x` with 6 significant digits.
pub fn human(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i32;
    if (-4..6).contains(&magnitude) {
        let decimals = (5 - magnitude).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

/// A float that serializes to JSON as its [`sig17`] rendering.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Sig17(pub f64);

impl Serialize for Sig17 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return Err(serde::ser::Error::custom("non-finite value in report"));
        }
        RawValue::from_string(sig17(self.0))
            .map_err(serde::ser::Error::custom)?
            .serialize(serializer)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    D1,
    D2,
    D3,
    S,
    Fidelity,
    E,
}

impl Metric {
    pub const ALL: [Metric; 6] = [
        Metric::D1,
        Metric::D2,
        Metric::D3,
        Metric::S,
        Metric::Fidelity,
        Metric::E,
    ];
}

impl FromStr for Metric {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "d1" => Ok(Metric::D1),
            "d2" => Ok(Metric::D2),
            "d3" => Ok(Metric::D3),
            "s" => Ok(Metric::S),
            "fidelity" | "fid" => Ok(Metric::Fidelity),
            "e" => Ok(Metric::E),
            other => Err(format!("unknown metric `{other}`")),
        }
    }
}

/// `count` evenly spaced values from `start` to `stop` inclusive, in radians
/// within `[0, 2π]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn new(start: f64, stop: f64, count: usize) -> Result<Self> {
        if count == 0 {
            return Err(Error::Precondition("grid count must be at least 1".into()));
        }
        for x in [start, stop] {
            if !x.is_finite() || !(0.0..=2.0 * PI + 1e-12).contains(&x) {
                return Err(Error::Precondition(format!(
                    "grid bound {x} outside [0, 2π] radians"
                )));
            }
        }
        Ok(Self { start, stop, count })
    }

    pub fn single(value: f64) -> Result<Self> {
        Self::new(value, value, 1)
    }

    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let step = (self.stop - self.start) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i == self.count - 1 {
                    self.stop
                } else {
                    self.start + step * i as f64
                }
            })
            .collect()
    }
}

/// `start:stop:count`, or a single value.
impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Precondition(format!("invalid grid `{s}`: {what}"));
        let parts: Vec<&str> = s.split(':').map(str::trim).collect();
        let num = |p: &str| p.parse::<f64>().map_err(|_| bad("expected radians"));
        match parts.as_slice() {
            [v] => Grid::single(num(v)?),
            [a, b, n] => Grid::new(
                num(a)?,
                num(b)?,
                n.parse().map_err(|_| bad("expected integer count"))?,
            ),
            _ => Err(bad("expected start:stop:count")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepSpec {
    pub variant: CopyVariant,
    pub theta: Grid,
    pub phi: Grid,
    pub metrics: Vec<Metric>,
}

impl SweepSpec {
    pub fn new(variant: CopyVariant, theta: Grid, phi: Grid) -> Self {
        Self {
            variant,
            theta,
            phi,
            metrics: Metric::ALL.to_vec(),
        }
    }

    pub fn with_metrics(mut self, metrics: &[Metric]) -> Self {
        let mut m = metrics.to_vec();
        m.sort();
        m.dedup();
        self.metrics = m;
        self
    }
}

/// One grid point of a sweep. Fields that were not requested, or that are
/// undefined (duplicator d₃, a non-scaled copy's `s`), are `None`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub theta: f64,
    pub phi: f64,
    pub variant: CopyVariant,
    pub d1: [Option<f64>; 3],
    pub d2: [Option<f64>; 3],
    pub d3: Option<f64>,
    pub s_a2: Option<f64>,
    pub fid_a2: Option<f64>,
    pub e_a2a3: Option<f64>,
}

impl SweepRow {
    pub fn from_report(report: &CopyReport, metrics: &[Metric]) -> Result<Self> {
        let want = |m| metrics.contains(&m);
        let pick = |m, v: f64| want(m).then_some(v);
        let d = &report.distances;
        let e = if want(Metric::E) {
            Some(ppt_verdict(report.rho_pair(Pair::A2A3))?.min_eigenvalue)
        } else {
            None
        };
        Ok(Self {
            theta: report.input.theta(),
            phi: report.input.phi(),
            variant: report.variant.unwrap_or(CopyVariant::Duplicator),
            d1: d.d1.map(|v| pick(Metric::D1, v)),
            d2: d.d2.map(|v| pick(Metric::D2, v)),
            d3: d.d3.filter(|_| want(Metric::D3)),
            s_a2: report.scaling[1].filter(|_| want(Metric::S)),
            fid_a2: pick(Metric::Fidelity, report.fidelity[1].ideal),
            e_a2a3: e,
        })
    }

    /// Numeric columns after `theta, phi, variant`, in header order.
    pub fn metric_values(&self) -> [Option<f64>; 10] {
        [
            self.d1[0],
            self.d1[1],
            self.d1[2],
            self.d2[0],
            self.d2[1],
            self.d2[2],
            self.d3,
            self.s_a2,
            self.fid_a2,
            self.e_a2a3,
        ]
    }

    /// CSV fields, absent values as empty strings.
    pub fn csv_fields(&self) -> Vec<String> {
        let mut out = vec![
            sig17(self.theta),
            sig17(self.phi),
            self.variant.name().to_string(),
        ];
        out.extend(
            self.metric_values()
                .iter()
                .map(|v| v.map(sig17).unwrap_or_default()),
        );
        out
    }
}

impl Serialize for SweepRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(CSV_HEADER.len()))?;
        map.serialize_entry("theta", &Sig17(self.theta))?;
        map.serialize_entry("phi", &Sig17(self.phi))?;
        map.serialize_entry("variant", self.variant.name())?;
        for (key, value) in CSV_HEADER[3..].iter().zip(self.metric_values()) {
            map.serialize_entry(key, &value.map(Sig17))?;
        }
        map.end()
    }
}

/// Outcome of one verification check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub id: String,
    pub group: String,
    pub description: String,
    pub expected: Option<Sig17>,
    pub observed: Option<Sig17>,
    /// Worst deviation found.
    pub residual: Sig17,
    pub tolerance: Sig17,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Rows {
    Sweep(Vec<SweepRow>),
    Checks(Vec<CheckOutcome>),
}

impl Rows {
    pub fn len(&self) -> usize {
        match self {
            Rows::Sweep(r) => r.len(),
            Rows::Checks(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta_grid: Option<Grid>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_grid: Option<Grid>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub metrics: Vec<Metric>,
    pub tolerances: BTreeMap<String, Sig17>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub rows: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub passed: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub meta: Meta,
    pub rows: Rows,
    pub summary: Summary,
}

impl ReportDocument {
    pub fn sweep(spec: &SweepSpec, rows: Vec<SweepRow>) -> Self {
        let mut tolerances = BTreeMap::new();
        tolerances.insert("scaling_residual".into(), Sig17(crate::copier::LAW_TOL));
        tolerances.insert(
            "negativity".into(),
            Sig17(crate::separability::NEGATIVITY_TOL),
        );
        Self {
            meta: Meta {
                schema_version: SCHEMA_VERSION,
                tool_version: env!("CARGO_PKG_VERSION"),
                kind: "sweep",
                variant: Some(spec.variant.name()),
                theta_grid: Some(spec.theta),
                phi_grid: Some(spec.phi),
                metrics: spec.metrics.clone(),
                tolerances,
            },
            summary: Summary {
                rows: rows.len(),
                passed: None,
                failed: None,
            },
            rows: Rows::Sweep(rows),
        }
    }

    pub fn verification(checks: Vec<CheckOutcome>, tolerances: BTreeMap<String, Sig17>) -> Self {
        let passed = checks.iter().filter(|c| c.passed).count();
        Self {
            meta: Meta {
                schema_version: SCHEMA_VERSION,
                tool_version: env!("CARGO_PKG_VERSION"),
                kind: "verify",
                variant: None,
                theta_grid: None,
                phi_grid: None,
                metrics: Vec::new(),
                tolerances,
            },
            summary: Summary {
                rows: checks.len(),
                passed: Some(passed),
                failed: Some(checks.len() - passed),
            },
            rows: Rows::Checks(checks),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed.unwrap_or(0) == 0
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map_err(|e| Error::Precondition(format!("JSON encoding failed: {e}")))
    }

    /// CSV rendering of a sweep document.
    pub fn to_csv(&self) -> Result<String> {
        let Rows::Sweep(rows) = &self.rows else {
            return Err(Error::Precondition(
                "CSV output is only available for sweeps".into(),
            ));
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Precondition(format!("CSV encoding failed: {e}"));
        w.write_record(CSV_HEADER).map_err(csv_err)?;
        for row in rows {
            w.write_record(row.csv_fields()).map_err(csv_err)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Precondition(format!("CSV encoding failed: {e}")))?;
        Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
    }
}

/// Evaluates one copier run and extracts the requested metrics.
pub fn evaluate_point(
    input: &InputQubit,
    variant: CopyVariant,
    metrics: &[Metric],
) -> Result<SweepRow> {
    SweepRow::from_report(&run_copier(input, variant)?, metrics)
}

/// Runs the sweep ϑ-major. Grid points are evaluated in parallel; row order
/// is fixed by the grid index.
pub fn run_sweep(spec: &SweepSpec) -> Result<ReportDocument> {
    let phis = spec.phi.values();
    let points: Vec<(f64, f64)> = spec
        .theta
        .values()
        .into_iter()
        .flat_map(|t| phis.iter().map(move |&p| (t, p)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(t, p)| evaluate_point(&InputQubit::new(t, p)?, spec.variant, &spec.metrics))
        .collect::<Result<Vec<_>>>()?;
    Ok(ReportDocument::sweep(spec, rows))
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Metric::D1 => "d1",
            Metric::D2 => "d2",
            Metric::D3 => "d3",
            Metric::S => "s",
            Metric::Fidelity => "fidelity",
            Metric::E => "e",
        };
        f.write_str(s)
    }
}
