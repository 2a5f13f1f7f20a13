//! Finite point sets read from CSV.
//!
//! One point per row, comma-separated coordinates, no header. A trailing
//! field that does not parse as a number is taken as the row's label.

use std::io::Read;

use crate::error::{check_dim, Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
    labels: Option<Vec<String>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        Self::with_labels(points, None)
    }

    pub fn with_labels(points: Vec<Vec<f64>>, labels: Option<Vec<String>>) -> Result<Self> {
        let dim = match points.first() {
            Some(p) if !p.is_empty() => p.len(),
            Some(_) => {
                return Err(Error::InvalidInput(
                    "points must have at least one coordinate".into(),
                ))
            }
            None => return Err(Error::InvalidInput("point cloud is empty".into())),
        };
        for p in &points {
            check_dim(dim, p.len())?;
            if p.iter().any(|x| !x.is_finite()) {
                return Err(Error::InvalidInput(
                    "point has non-finite coordinates".into(),
                ));
            }
        }
        if let Some(ls) = &labels {
            if ls.len() != points.len() {
                return Err(Error::InvalidInput(
                    "label count differs from point count".into(),
                ));
            }
        }
        Ok(Self { points, labels })
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn dim(&self) -> usize {
        self.points[0].len()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `{p − a : p ∈ self}`, labels kept.
    pub fn translated(&self, a: &[f64]) -> Result<Self> {
        check_dim(self.dim(), a.len())?;
        let points = self
            .points
            .iter()
            .map(|p| p.iter().zip(a).map(|(x, y)| x - y).collect())
            .collect();
        Ok(Self {
            points,
            labels: self.labels.clone(),
        })
    }

    pub fn from_csv<R: Read>(reader: R) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .trim(csv::Trim::All)
            .from_reader(reader);
        let mut points = Vec::new();
        let mut labels = Vec::new();
        let mut any_label = false;
        for (line, rec) in rdr.records().enumerate() {
            let rec = rec.map_err(|e| Error::InvalidInput(format!("CSV row {}: {e}", line + 1)))?;
            if rec.iter().all(|f| f.is_empty()) {
                continue;
            }
            let fields: Vec<&str> = rec.iter().collect();
            let (coords, label) = match fields.last().map(|f| f.parse::<f64>()) {
                Some(Err(_)) if fields.len() > 1 => {
                    (&fields[..fields.len() - 1], Some(fields[fields.len() - 1]))
                }
                _ => (&fields[..], None),
            };
            let p = coords
                .iter()
                .map(|f| {
                    f.parse::<f64>().map_err(|_| {
                        Error::InvalidInput(format!("CSV row {}: bad number {f:?}", line + 1))
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            any_label |= label.is_some();
            labels.push(label.unwrap_or_default().to_string());
            points.push(p);
        }
        Self::with_labels(points, any_label.then_some(labels))
    }
}
