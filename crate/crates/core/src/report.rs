//! Presentation: reports, tables and Scala `.scl` files.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{octave_fit, OctaveFit};
use crate::builders::carlos2;
use crate::error::{Error, Result};
use crate::optimizer::{optimal_unit, DerivedScale};

/// The nine `(a, b)` pairs of the classic results table, with their names.
pub const CARLOS_TABLE: [(u32, u32, &str); 9] = [
    (4, 5, "alpha scale"),
    (5, 6, "beta scale"),
    (9, 11, "gamma scale"),
    (13, 16, ""),
    (14, 17, ""),
    (17, 21, ""),
    (19, 23, ""),
    (21, 25, ""),
    (21, 26, ""),
];

/// Reports for every row of [`CARLOS_TABLE`].
pub fn carlos_table_reports() -> Vec<ScaleReport> {
    CARLOS_TABLE
        .iter()
        .map(|&(a, b, _)| {
            ScaleReport::new(&optimal_unit(
                &carlos2(a, b).expect("table pairs are ordered"),
            ))
        })
        .collect()
}

fn scale_name(label: &str) -> Option<&'static str> {
    match label {
        "(4,5)-Carlos" => Some("alpha scale"),
        "(5,6)-Carlos" => Some("beta scale"),
        "(9,11)-Carlos" => Some("gamma scale"),
        "(23,28,50)-Carlos" => Some("delta scale"),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub interval: String,
    pub steps: u32,
    pub cents_dev: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OctaveEntry {
    pub exact_units: f64,
    pub nearest_steps: u32,
    pub deviation_cents: f64,
}

impl From<OctaveFit> for OctaveEntry {
    fn from(o: OctaveFit) -> Self {
        OctaveEntry {
            exact_units: o.exact_units,
            nearest_steps: o.nearest_steps,
            deviation_cents: o.deviation_cents,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportFlags {
    pub gcd_trivial: bool,
    pub inversion_pair_warning: bool,
}

/// Everything printed about one derived scale. This is also the JSON schema.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScaleReport {
    pub label: String,
    pub params: Vec<u32>,
    pub unit_cents: f64,
    pub residuals: Vec<ResidualEntry>,
    pub octave: OctaveEntry,
    pub flags: ReportFlags,
}

impl ScaleReport {
    pub fn new(scale: &DerivedScale) -> Self {
        let system = &scale.system;
        let params = system.params().to_vec();
        let gcd_trivial =
            params.len() >= 2 && params.iter().fold(0u32, |g, &p| num_integer::gcd(g, p)) > 1;
        ScaleReport {
            label: system.label().to_string(),
            unit_cents: scale.unit_cents,
            residuals: system
                .targets()
                .iter()
                .zip(&scale.residuals)
                .map(|(t, &r)| ResidualEntry {
                    interval: t.interval.name.clone(),
                    steps: t.steps,
                    cents_dev: r,
                })
                .collect(),
            octave: octave_fit(scale).into(),
            flags: ReportFlags {
                gcd_trivial,
                inversion_pair_warning: system.has_inversion_pair(),
            },
            params,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    fn notes(&self) -> String {
        let mut notes = Vec::new();
        if let Some(name) = scale_name(&self.label) {
            notes.push(name);
        }
        if self.flags.gcd_trivial {
            notes.push("gcd-trivial");
        }
        if self.flags.inversion_pair_warning {
            notes.push("inversion pair");
        }
        notes.join("; ")
    }

    fn params_text(&self) -> String {
        let inner = self
            .params
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(",");
        format!("({inner})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::SpecParse {
                token: other.to_string(),
                reason: "format must be table, csv or json".into(),
            }),
        }
    }
}

/// Fixed-point with an explicit sign; never prints `-0.000`.
fn signed(v: f64, decimals: usize) -> String {
    let s = format!("{:+.*}", decimals, v);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        format!("+{}", &s[1..])
    } else {
        s
    }
}

fn deviation_headers(reports: &[ScaleReport]) -> Vec<String> {
    let names = |r: &ScaleReport| {
        r.residuals
            .iter()
            .map(|e| e.interval.clone())
            .collect::<Vec<_>>()
    };
    let first = names(&reports[0]);
    if reports.iter().all(|r| names(r) == first) {
        first
    } else {
        let width = reports.iter().map(|r| r.residuals.len()).max().unwrap_or(0);
        (1..=width).map(|i| format!("target {i}")).collect()
    }
}

/// Renders reports as an aligned text table, CSV or a JSON array.
///
/// The text table rounds unit size and deviations to three decimals and
/// units-per-octave to two; CSV and JSON keep full precision.
pub fn render_table(reports: &[ScaleReport], format: Format) -> Result<String> {
    if reports.is_empty() {
        return Err(Error::EmptyReports);
    }
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(reports)? + "\n"),
        Format::Csv => render_csv(reports),
        Format::Table => Ok(render_text(reports)),
    }
}

fn render_text(reports: &[ScaleReport]) -> String {
    let devs = deviation_headers(reports);
    let mut header: Vec<String> = vec!["params".into(), "unit size".into()];
    header.extend(devs.iter().map(|d| format!("{d} dev")));
    header.extend([
        "units/octave".into(),
        "steps".into(),
        "octave dev".into(),
        "notes".into(),
    ]);

    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut row = vec![r.params_text(), format!("{:.3}", r.unit_cents)];
            for i in 0..devs.len() {
                row.push(
                    r.residuals
                        .get(i)
                        .map(|e| signed(e.cents_dev, 3))
                        .unwrap_or_default(),
                );
            }
            row.push(format!("{:.2}", r.octave.exact_units));
            row.push(r.octave.nearest_steps.to_string());
            row.push(signed(r.octave.deviation_cents, 3));
            row.push(r.notes());
            row
        })
        .collect();

    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            rows.iter()
                .map(|row| row[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();

    let last = header.len() - 1;
    let mut out = String::new();
    let line = |cells: &[String], out: &mut String| {
        let mut text = String::new();
        for (c, cell) in cells.iter().enumerate() {
            if c > 0 {
                text.push_str("  ");
            }
            if c == 0 || c == last {
                let _ = write!(text, "{:<w$}", cell, w = widths[c]);
            } else {
                let _ = write!(text, "{:>w$}", cell, w = widths[c]);
            }
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&header, &mut out);
    let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
    line(&rule, &mut out);
    for row in &rows {
        line(row, &mut out);
    }
    out
}

fn render_csv(reports: &[ScaleReport]) -> Result<String> {
    let devs = deviation_headers(reports);
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["label".to_string(), "params".into(), "unit_cents".into()];
    header.extend(devs.iter().map(|d| format!("{d}_dev")));
    header.extend(
        [
            "exact_units",
            "nearest_steps",
            "deviation_cents",
            "gcd_trivial",
            "inversion_pair_warning",
        ]
        .map(String::from),
    );
    let csv_err = |e: csv::Error| Error::Output(e.to_string());
    w.write_record(&header).map_err(csv_err)?;
    for r in reports {
        let mut rec = vec![
            r.label.clone(),
            r.params
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(" "),
            r.unit_cents.to_string(),
        ];
        for i in 0..devs.len() {
            rec.push(
                r.residuals
                    .get(i)
                    .map(|e| e.cents_dev.to_string())
                    .unwrap_or_default(),
            );
        }
        rec.push(r.octave.exact_units.to_string());
        rec.push(r.octave.nearest_steps.to_string());
        rec.push(r.octave.deviation_cents.to_string());
        rec.push(r.flags.gcd_trivial.to_string());
        rec.push(r.flags.inversion_pair_warning.to_string());
        w.write_record(&rec).map_err(csv_err)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Output(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

/// Writes a Scala scale file with `steps` degrees of the scale's unit.
///
/// The last degree, `steps · unit`, is the repeat interval. For these scales
/// it is generally not 1200 cents.
pub fn export_scl(scale: &DerivedScale, steps: u32, description: &str) -> String {
    let description = description.lines().next().unwrap_or("");
    let mut out = String::new();
    let _ = writeln!(out, "! {}", scale.system.label());
    out.push_str("!\n");
    let _ = writeln!(out, "{description}");
    let _ = writeln!(out, " {steps}");
    out.push_str("!\n");
    for k in 1..=steps {
        let _ = writeln!(out, " {:.5}", f64::from(k) * scale.unit_cents);
    }
    out
}

/// A parsed `.scl` file; pitches are converted to cents.
#[derive(Clone, Debug, PartialEq)]
pub struct SclFile {
    pub description: String,
    pub pitches_cents: Vec<f64>,
}

/// Parses Scala scale text. Pitch lines containing `.` are cents; other
/// pitch lines are ratios `p/q` or whole numbers.
pub fn parse_scl(text: &str) -> Result<SclFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('!'));

    let (_, description) = lines.next().ok_or(Error::SclParse {
        line: 1,
        reason: "missing description".into(),
    })?;
    let (n_line, count) = lines.next().ok_or(Error::SclParse {
        line: 2,
        reason: "missing note count".into(),
    })?;
    let count: usize = first_token(count).parse().map_err(|_| Error::SclParse {
        line: n_line,
        reason: format!("bad note count `{}`", count.trim()),
    })?;

    let mut pitches_cents = Vec::with_capacity(count);
    for (line, text) in lines {
        let token = first_token(text);
        if token.is_empty() {
            continue;
        }
        let bad = || Error::SclParse {
            line,
            reason: format!("bad pitch `{token}`"),
        };
        let cents = if token.contains('.') {
            token.parse::<f64>().map_err(|_| bad())?
        } else {
            token
                .parse::<crate::interval::Ratio>()
                .map_err(|_| bad())?
                .cents()
        };
        pitches_cents.push(cents);
    }
    if pitches_cents.len() != count {
        return Err(Error::SclParse {
            line: n_line,
            reason: format!("declared {count} notes, found {}", pitches_cents.len()),
        });
    }
    Ok(SclFile {
        description: description.to_string(),
        pitches_cents,
    })
}

fn first_token(line: &str) -> &str {
    line.split_whitespace().next().unwrap_or("")
}
