use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};

use super::SweepReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartKind {
    Boxplot,
    Heatmap,
}

impl std::str::FromStr for ChartKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "boxplot" => Ok(ChartKind::Boxplot),
            "heatmap" => Ok(ChartKind::Heatmap),
            other => Err(format!(
                "unknown chart kind '{other}' (expected 'boxplot' or 'heatmap')"
            )),
        }
    }
}

pub fn render_svg(report: &SweepReport, kind: ChartKind, path: impl AsRef<Path>) -> Result<()> {
    let body = match kind {
        ChartKind::Boxplot => render_boxplot(report)?,
        ChartKind::Heatmap => render_heatmap(report)?,
    };
    let path = path.as_ref();
    std::fs::write(path, body).map_err(|e| Error::io(format!("writing {}", path.display()), e))
}

const FONT: &str = "font-family=\"sans-serif\" font-size=\"11\"";

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

fn open(out: &mut String, width: f64, height: f64) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
}

/// One box per alternative over its untied ranks; rank 1 at the top.
pub fn render_boxplot(report: &SweepReport) -> Result<String> {
    if report.pipelines.is_empty() {
        return Err(Error::TooFew {
            what: "rankings",
            needed: 1,
            found: 0,
        });
    }
    let m = report.alternatives.len();
    let (left, top, slot, plot_h) = (50.0, 30.0, 60.0, 300.0);
    let width = left + slot * m as f64 + 20.0;
    let height = top + plot_h + 50.0;
    let y = |rank: f64| {
        if m <= 1 {
            top + plot_h / 2.0
        } else {
            top + (rank - 1.0) / (m - 1) as f64 * plot_h
        }
    };

    let mut out = String::new();
    open(&mut out, width, height);
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"18\" text-anchor=\"middle\" {FONT}>Rank distribution across {} pipelines</text>",
        width / 2.0,
        report.pipelines.len()
    );
    // rank axis
    let _ = writeln!(out, "<g class=\"axis\">");
    let _ = writeln!(
        out,
        "<line x1=\"{left}\" y1=\"{top}\" x2=\"{left}\" y2=\"{}\" stroke=\"black\"/>",
        top + plot_h
    );
    for rank in 1..=m.max(1) {
        let ry = y(rank as f64);
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{ry}\" x2=\"{}\" y2=\"{ry}\" stroke=\"#dddddd\"/><text x=\"{}\" y=\"{}\" text-anchor=\"end\" {FONT}>{rank}</text>",
            left,
            width - 20.0,
            left - 6.0,
            ry + 4.0
        );
    }
    let _ = writeln!(out, "</g>");

    for (i, d) in report.distribution.iter().enumerate() {
        let s = d.summary;
        let cx = left + slot * (i as f64 + 0.5);
        let half = slot * 0.3;
        let (y_min, y_q1, y_med, y_q3, y_max) = (y(s.min), y(s.q1), y(s.median), y(s.q3), y(s.max));
        let _ = writeln!(
            out,
            "<g class=\"alternative\" data-name=\"{}\" data-min=\"{}\" data-q1=\"{}\" data-median=\"{}\" data-q3=\"{}\" data-max=\"{}\">",
            escape(&d.alternative),
            s.min,
            s.q1,
            s.median,
            s.q3,
            s.max
        );
        let _ = writeln!(
            out,
            "<line class=\"whisker\" x1=\"{cx}\" y1=\"{y_min}\" x2=\"{cx}\" y2=\"{y_max}\" stroke=\"black\"/>"
        );
        for wy in [y_min, y_max] {
            let _ = writeln!(
                out,
                "<line class=\"cap\" x1=\"{}\" y1=\"{wy}\" x2=\"{}\" y2=\"{wy}\" stroke=\"black\"/>",
                cx - half / 2.0,
                cx + half / 2.0
            );
        }
        let _ = writeln!(
            out,
            "<rect class=\"box\" x=\"{}\" y=\"{y_q1}\" width=\"{}\" height=\"{}\" fill=\"#9ecae1\" stroke=\"black\"/>",
            cx - half,
            2.0 * half,
            y_q3 - y_q1
        );
        let _ = writeln!(
            out,
            "<line class=\"median\" x1=\"{}\" y1=\"{y_med}\" x2=\"{}\" y2=\"{y_med}\" stroke=\"#d62728\" stroke-width=\"2\"/>",
            cx - half,
            cx + half
        );
        let _ = writeln!(
            out,
            "<text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\" {FONT}>{}</text>",
            top + plot_h + 20.0,
            escape(&d.alternative)
        );
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Blue ramp over [-1, 1]; darker means higher.
fn ramp(value: f64) -> (u8, u8, u8) {
    let t = ((value + 1.0) / 2.0).clamp(0.0, 1.0);
    let lerp = |a: f64, b: f64| (a + (b - a) * t).round() as u8;
    (lerp(247.0, 8.0), lerp(251.0, 48.0), lerp(255.0, 107.0))
}

/// k × k correlation grid with values to three decimals.
pub fn render_heatmap(report: &SweepReport) -> Result<String> {
    let corr = report
        .metrics
        .as_ref()
        .map(|m| &m.corr)
        .ok_or(Error::TooFew {
            what: "rankings",
            needed: 2,
            found: report.pipelines.len(),
        })?;
    let k = corr.labels.len();
    let longest = corr
        .labels
        .iter()
        .map(|l| l.chars().count())
        .max()
        .unwrap_or(0) as f64;
    let label_w = 12.0 + 6.5 * longest;
    let cell = 56.0;
    let (left, top) = (label_w, 30.0 + label_w);
    let width = left + cell * k as f64 + 20.0;
    let height = top + cell * k as f64 + 20.0;

    let mut out = String::new();
    open(&mut out, width, height);
    let _ = writeln!(
        out,
        "<text x=\"{}\" y=\"18\" text-anchor=\"middle\" {FONT}>Rank correlation</text>",
        width / 2.0
    );
    for (i, label) in corr.labels.iter().enumerate() {
        let c = left + cell * (i as f64 + 0.5);
        let r = top + cell * (i as f64 + 0.5);
        let _ = writeln!(
            out,
            "<text class=\"row-label\" x=\"{}\" y=\"{}\" text-anchor=\"end\" {FONT}>{}</text>",
            left - 6.0,
            r + 4.0,
            escape(label)
        );
        let _ = writeln!(
            out,
            "<text class=\"col-label\" x=\"{c}\" y=\"{}\" transform=\"rotate(-90 {c} {})\" {FONT}>{}</text>",
            top - 6.0,
            top - 6.0,
            escape(label)
        );
    }
    for (i, row) in corr.cells.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            let (x, y) = (left + cell * j as f64, top + cell * i as f64);
            let (r, g, b) = ramp(value);
            let text_fill = if value > 0.3 { "white" } else { "black" };
            let _ = writeln!(
                out,
                "<g><rect class=\"cell\" data-row=\"{}\" data-col=\"{}\" data-value=\"{value}\" x=\"{x}\" y=\"{y}\" width=\"{cell}\" height=\"{cell}\" fill=\"rgb({r},{g},{b})\" stroke=\"white\"/><text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"{text_fill}\" {FONT}>{value:.3}</text></g>",
                escape(&corr.labels[i]),
                escape(&corr.labels[j]),
                x + cell / 2.0,
                y + cell / 2.0 + 4.0
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}
