//! Success-percentage reports and the tool-support matrix.

use super::ScoreError;

fn round1(v: f64) -> f64 {
    (v * 10.0).round() / 10.0
}

/// Pass counts and success percentage for one category.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CategoryScore {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    /// `100 * passed / total`, one decimal; 0 for an empty category.
    pub pct: f64,
}

impl CategoryScore {
    pub fn new(name: impl Into<String>, passed: usize, total: usize) -> CategoryScore {
        let pct = if total == 0 {
            0.0
        } else {
            round1(100.0 * passed as f64 / total as f64)
        };
        CategoryScore {
            name: name.into(),
            passed,
            total,
            pct,
        }
    }
}

/// Per-category success percentages plus the size-weighted average.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Report {
    pub categories: Vec<CategoryScore>,
    /// `100 * total passes / total cases`, one decimal.
    pub average: f64,
    /// Free-form remarks, e.g. gold targets no prediction token covered.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(categories: Vec<CategoryScore>, notes: Vec<String>) -> Report {
        let passes: usize = categories.iter().map(|c| c.passed).sum();
        let total: usize = categories.iter().map(|c| c.total).sum();
        let average = if total == 0 {
            0.0
        } else {
            round1(100.0 * passes as f64 / total as f64)
        };
        Report {
            categories,
            average,
            notes,
        }
    }

    pub fn category(&self, name: &str) -> Option<&CategoryScore> {
        self.categories.iter().find(|c| c.name == name)
    }

    /// Aligned plain-text table: one column per category plus the average.
    pub fn render_table(&self) -> String {
        let mut header = Vec::new();
        let mut values = Vec::new();
        for c in &self.categories {
            header.push(format!("{} ({}/{})", c.name, c.passed, c.total));
            values.push(format!("{:.1}", c.pct));
        }
        header.push("Average".to_string());
        values.push(format!("{:.1}", self.average));

        let widths: Vec<usize> = header
            .iter()
            .zip(&values)
            .map(|(h, v)| h.len().max(v.len()))
            .collect();
        let mut out = String::new();
        for (h, w) in header.iter().zip(&widths) {
            out.push_str(&format!("{h:>w$}  "));
        }
        out.push('\n');
        for (v, w) in values.iter().zip(&widths) {
            out.push_str(&format!("{v:>w$}  "));
        }
        out.push('\n');
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// One tool row of the support matrix.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct MatrixRow {
    pub tool: String,
    pub supported: Vec<bool>,
}

/// Check/cross overview of per-category support across tools.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct SupportMatrix {
    pub threshold: f64,
    pub categories: Vec<String>,
    pub rows: Vec<MatrixRow>,
}

impl SupportMatrix {
    pub fn render_table(&self) -> String {
        let tool_w = self
            .rows
            .iter()
            .map(|r| r.tool.len())
            .max()
            .unwrap_or(0)
            .max("Tools".len());
        let widths: Vec<usize> = self.categories.iter().map(|c| c.len().max(1)).collect();

        let mut out = format!("{:<tool_w$}", "Tools");
        for (c, w) in self.categories.iter().zip(&widths) {
            out.push_str(&format!("  {c:>w$}"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("{:<tool_w$}", row.tool));
            for (&ok, w) in row.supported.iter().zip(&widths) {
                let mark = if ok { "✓" } else { "✗" };
                // the marks are single display columns; pad by character count
                out.push_str(&format!("  {}{mark}", " ".repeat(w.saturating_sub(1))));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "✓ = category success >= {:.1}%; the cutoff is configurable and marks near the boundary move with it.\n",
            self.threshold
        ));
        out
    }
}

/// Builds the support matrix from named reports: a check wherever the
/// category percentage meets `threshold`. All reports must share the same
/// category structure.
pub fn render_support_matrix(
    reports: &[(String, Report)],
    threshold: f64,
) -> Result<SupportMatrix, ScoreError> {
    let categories: Vec<String> = reports
        .first()
        .map(|(_, r)| r.categories.iter().map(|c| c.name.clone()).collect())
        .unwrap_or_default();
    let mut rows = Vec::new();
    for (tool, report) in reports {
        let names: Vec<String> = report.categories.iter().map(|c| c.name.clone()).collect();
        if names != categories {
            return Err(ScoreError::CategoryMismatch {
                tool: tool.clone(),
            });
        }
        rows.push(MatrixRow {
            tool: tool.clone(),
            supported: report.categories.iter().map(|c| c.pct >= threshold).collect(),
        });
    }
    Ok(SupportMatrix {
        threshold,
        categories,
        rows,
    })
}
