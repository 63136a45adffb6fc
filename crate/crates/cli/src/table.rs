//! Curve tables: an abscissa with named ordinate columns.

use crate::error::{CliError, CliResult};
use serde::Serialize;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveTable {
    pub abscissa_name: String,
    pub abscissa: Vec<f64>,
    pub ordinates: Vec<(String, Vec<f64>)>,
}

impl CurveTable {
    pub fn new(abscissa_name: &str, abscissa: Vec<f64>) -> CliResult<Self> {
        if abscissa.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(CliError::Data("curve abscissa must be strictly ascending".into()));
        }
        Ok(CurveTable {
            abscissa_name: abscissa_name.into(),
            abscissa,
            ordinates: Vec::new(),
        })
    }

    pub fn push(&mut self, name: &str, values: Vec<f64>) -> CliResult<()> {
        if values.len() != self.abscissa.len() {
            return Err(CliError::Data(format!(
                "column '{name}' has {} values for {} abscissa points",
                values.len(),
                self.abscissa.len()
            )));
        }
        self.ordinates.push((name.into(), values));
        Ok(())
    }

    /// Header row plus one row per abscissa point, 17 significant digits.
    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![self.abscissa_name.as_str()];
        header.extend(self.ordinates.iter().map(|(n, _)| n.as_str()));
        w.write_record(&header)?;
        for (i, x) in self.abscissa.iter().enumerate() {
            let mut row = vec![fmt_full(*x)];
            row.extend(self.ordinates.iter().map(|(_, v)| fmt_full(v[i])));
            w.write_record(&row)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Data(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut columns = serde_json::Map::new();
        columns.insert(self.abscissa_name.clone(), serde_json::json!(self.abscissa));
        for (name, v) in &self.ordinates {
            columns.insert(name.clone(), serde_json::json!(v));
        }
        serde_json::Value::Object(columns)
    }
}

pub fn fmt_full(v: f64) -> String {
    format!("{v:.16e}")
}

/// An evaluation grid `lo:hi:points`, endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub lo: f64,
    pub hi: f64,
    pub points: usize,
}

impl Grid {
    pub fn values(&self) -> Vec<f64> {
        let step = (self.hi - self.lo) / (self.points - 1) as f64;
        (0..self.points)
            .map(|i| if i + 1 == self.points { self.hi } else { self.lo + step * i as f64 })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [lo, hi, points] = parts[..] else {
            return Err(format!("grid '{s}' is not lo:hi:points"));
        };
        let lo: f64 = lo.trim().parse().map_err(|_| format!("bad grid start '{lo}'"))?;
        let hi: f64 = hi.trim().parse().map_err(|_| format!("bad grid end '{hi}'"))?;
        let points: usize = points.trim().parse().map_err(|_| format!("bad point count '{points}'"))?;
        if points < 2 {
            return Err("a grid needs at least 2 points".into());
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(format!("grid needs finite lo < hi, got {lo}:{hi}"));
        }
        Ok(Grid { lo, hi, points })
    }
}
