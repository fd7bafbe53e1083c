//! CSV tables and their optional SVG renderings.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use plotters::prelude::*;

/// Seventeen significant digits, enough to round-trip any `f64`.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Default)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn write(&self, path: &Path) -> anyhow::Result<()> {
        let mut w = csv::Writer::from_path(path)
            .with_context(|| format!("cannot create {}", path.display()))?;
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }

    /// A column parsed as numbers; non-numeric cells become NaN.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.header.iter().position(|h| h == name)?;
        Some(
            self.rows
                .iter()
                .map(|r| r[i].parse().unwrap_or(f64::NAN))
                .collect(),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Lines,
    Points,
}

/// Which columns to draw, and how.
#[derive(Debug, Clone)]
pub struct PlotSpec {
    pub title: String,
    pub x: &'static str,
    pub ys: Vec<&'static str>,
    pub log_y: bool,
    pub style: Style,
}

impl PlotSpec {
    pub fn lines(title: impl Into<String>, x: &'static str, ys: &[&'static str]) -> Self {
        PlotSpec {
            title: title.into(),
            x,
            ys: ys.to_vec(),
            log_y: false,
            style: Style::Lines,
        }
    }

    pub fn log_y(mut self) -> Self {
        self.log_y = true;
        self
    }

    pub fn points(mut self) -> Self {
        self.style = Style::Points;
        self
    }
}

fn finite_range(values: impl Iterator<Item = f64>) -> Option<(f64, f64)> {
    let (lo, hi) = values
        .filter(|v| v.is_finite())
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if lo > hi {
        return None;
    }
    if lo == hi {
        return Some((lo - 0.5, hi + 0.5));
    }
    let pad = 0.02 * (hi - lo);
    Some((lo - pad, hi + pad))
}

pub fn render_svg(table: &Table, spec: &PlotSpec, path: &Path) -> anyhow::Result<()> {
    let xs = table
        .column(spec.x)
        .with_context(|| format!("no column `{}` to plot", spec.x))?;
    let mut series = Vec::new();
    for &name in &spec.ys {
        let mut ys = table
            .column(name)
            .with_context(|| format!("no column `{name}` to plot"))?;
        if spec.log_y {
            ys.iter_mut().for_each(|y| *y = y.log10());
        }
        series.push((name, ys));
    }
    let (x0, x1) = finite_range(xs.iter().copied()).context("nothing to plot")?;
    let (y0, y1) =
        finite_range(series.iter().flat_map(|(_, ys)| ys.iter().copied())).context("nothing to plot")?;

    let root = SVGBackend::new(path, (960, 600)).into_drawing_area();
    root.fill(&WHITE)?;
    let mut chart = ChartBuilder::on(&root)
        .caption(&spec.title, ("sans-serif", 22))
        .margin(12)
        .x_label_area_size(40)
        .y_label_area_size(70)
        .build_cartesian_2d(x0..x1, y0..y1)?;
    let y_desc = if spec.log_y { "log10 value" } else { "value" };
    chart
        .configure_mesh()
        .x_desc(spec.x)
        .y_desc(y_desc)
        .draw()?;
    for (i, (name, ys)) in series.iter().enumerate() {
        let color = Palette99::pick(i).to_rgba();
        let pts: Vec<(f64, f64)> = xs
            .iter()
            .zip(ys)
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|(&x, &y)| (x, y))
            .collect();
        let drawn = match spec.style {
            Style::Lines => chart.draw_series(LineSeries::new(pts, color.stroke_width(2)))?,
            Style::Points => chart.draw_series(
                pts.into_iter()
                    .map(move |p| Circle::new(p, 2, color.filled())),
            )?,
        };
        drawn
            .label(*name)
            .legend(move |(x, y)| PathElement::new(vec![(x, y), (x + 20, y)], color));
    }
    chart
        .configure_series_labels()
        .background_style(WHITE.mix(0.85))
        .border_style(BLACK)
        .draw()?;
    root.present()?;
    Ok(())
}

/// Writes `stem.csv` (and `stem.svg` when a plot is given) under `dir`.
pub fn emit(dir: &Path, stem: &str, table: &Table, plot: Option<&PlotSpec>) -> anyhow::Result<PathBuf> {
    fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    let csv_path = dir.join(format!("{stem}.csv"));
    table.write(&csv_path)?;
    eprintln!("wrote {} ({} rows)", csv_path.display(), table.len());
    if let Some(spec) = plot {
        let svg_path = dir.join(format!("{stem}.svg"));
        render_svg(table, spec, &svg_path)?;
        eprintln!("wrote {}", svg_path.display());
    }
    Ok(csv_path)
}
