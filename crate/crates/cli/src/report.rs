//! Versioned report envelope emitted by every subcommand, plus its JSON
//! and CSV renderers.
//!
//! JSON carries the full envelope; CSV flattens only the payload section
//! of the command that produced the report. CSV floats are printed with
//! {:.16e}, 17 significant digits, so values round-trip bit-exactly.

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ParamsEcho {
    pub q: f64,
    pub alpha: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct TolerancesEcho {
    pub rel: f64,
    pub abs: f64,
    pub boundary: f64,
}

/// `lambda0` stays `None` when the caller queried a bare (ν₀, B) point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LabelEcho {
    pub nu0: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub lambda0: Option<f64>,
}

/// `matched` is `None` when no λ₀ was supplied to resolve against.
#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub family: String,
    pub index_lo: Option<i64>,
    pub index_hi: Option<i64>,
    pub forced_lambda0: Option<f64>,
    pub lambda0_min: Option<f64>,
    pub lambda0_min_strict: Option<bool>,
    pub matched: Option<bool>,
}

/// `e0` needs a λ₀ to evaluate, so it is `None` on bare (ν₀, B) queries.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ThresholdsEcho {
    pub b_star: f64,
    pub d_plus: f64,
    pub d_minus: f64,
    pub e0: Option<f64>,
}

/// Central values as [re, im] pairs.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct CasimirEcho {
    pub c1: [f64; 2],
    pub c2: [f64; 2],
    pub c3: [f64; 2],
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct LevelValue {
    pub n: i64,
    pub lambda: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectrumSection {
    pub lo: i64,
    pub hi: i64,
    pub all_nonnegative: bool,
    pub values: Vec<LevelValue>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixSection {
    pub family: String,
    pub dim: usize,
    pub index_offset: i64,
    pub a: Vec<Vec<f64>>,
    pub a_dag: Vec<Vec<f64>>,
    pub n_diag: Vec<f64>,
    pub k_diag: Vec<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ResidualSection {
    pub family: String,
    pub dim: usize,
    pub interior_dim: usize,
    pub scale: f64,
    pub rel1: f64,
    pub comm_n_a: f64,
    pub comm_n_adag: f64,
    pub anti_k_a: f64,
    pub anti_k_adag: f64,
    pub comm_n_k: f64,
    pub casimir: f64,
    pub max_residual: f64,
    pub within_tolerance: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceSection {
    pub equivalent: bool,
    pub shift: Option<i64>,
    pub family_a: String,
    pub family_b: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanCell {
    pub q: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub families: Vec<String>,
    pub boundary: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanSection {
    pub q_values: Vec<f64>,
    pub b_values: Vec<f64>,
    pub cells: Vec<ScanCell>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitRow {
    pub q: f64,
    #[serde(rename = "B")]
    pub b: f64,
    pub b_star: f64,
    pub family: String,
    pub exists: bool,
    pub index_lo: Option<i64>,
    pub index_hi: Option<i64>,
    pub forced_lambda0: Option<f64>,
    pub lambda0_min: Option<f64>,
    pub heads: Vec<LevelValue>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LimitsSection {
    /// Which parameter the path walks: "q" or "B".
    pub path: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    pub rows: Vec<LimitRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub tool: ToolInfo,
    pub command: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<ParamsEcho>,
    pub tolerances: TolerancesEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<LabelEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<LabelEcho>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub thresholds: Option<ThresholdsEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casimir: Option<CasimirEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassRow>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrices: Option<MatrixSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<ResidualSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub equivalence: Option<EquivalenceSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan: Option<ScanSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub limits: Option<LimitsSection>,
}

impl Report {
    pub fn new(command: &'static str, params: Option<ParamsEcho>, tol: TolerancesEcho) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            tool: ToolInfo {
                name: "qosc",
                version: env!("CARGO_PKG_VERSION"),
            },
            command,
            params,
            tolerances: tol,
            label: None,
            labels: None,
            thresholds: None,
            casimir: None,
            classes: None,
            matched: None,
            spectrum: None,
            matrices: None,
            residuals: None,
            equivalence: None,
            scan: None,
            limits: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_csv(&self) -> String {
        match self.command {
            "classify" => self.classify_csv(),
            "spectrum" => self.spectrum_csv(),
            "matrix" => self.matrix_csv(),
            "verify" => self.verify_csv(),
            "scan" => self.scan_csv(),
            "equiv" => self.equiv_csv(),
            "limits" => self.limits_csv(),
            other => unreachable!("no CSV renderer for {other}"),
        }
    }

    fn classify_csv(&self) -> String {
        let mut out =
            String::from("family,index_lo,index_hi,forced_lambda0,lambda0_min,strict,matched\n");
        for row in self.classes.as_deref().unwrap_or(&[]) {
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                row.family,
                opt_int(row.index_lo),
                opt_int(row.index_hi),
                opt_num(row.forced_lambda0),
                opt_num(row.lambda0_min),
                row.lambda0_min_strict.map(bool_str).unwrap_or(""),
                row.matched.map(bool_str).unwrap_or(""),
            ));
        }
        out
    }

    fn spectrum_csv(&self) -> String {
        let mut out = String::from("n,lambda\n");
        if let Some(spec) = &self.spectrum {
            for v in &spec.values {
                out.push_str(&format!("{},{}\n", v.n, num(v.lambda)));
            }
        }
        out
    }

    fn matrix_csv(&self) -> String {
        // Rows and columns are chain levels, not array offsets.
        let mut out = String::from("op,row,col,value\n");
        let Some(m) = &self.matrices else {
            return out;
        };
        let level = |i: usize| m.index_offset + i as i64;
        for (name, matrix) in [("a", &m.a), ("a_dag", &m.a_dag)] {
            for (i, row) in matrix.iter().enumerate() {
                for (j, &value) in row.iter().enumerate() {
                    if value != 0.0 {
                        out.push_str(&format!(
                            "{name},{},{},{}\n",
                            level(i),
                            level(j),
                            num(value)
                        ));
                    }
                }
            }
        }
        for (name, diag) in [("n", &m.n_diag), ("k", &m.k_diag)] {
            for (i, &value) in diag.iter().enumerate() {
                out.push_str(&format!("{name},{},{},{}\n", level(i), level(i), num(value)));
            }
        }
        out
    }

    fn verify_csv(&self) -> String {
        let mut out = String::from("quantity,value\n");
        let Some(r) = &self.residuals else {
            return out;
        };
        out.push_str(&format!("family,{}\n", r.family));
        out.push_str(&format!("dim,{}\n", r.dim));
        out.push_str(&format!("interior_dim,{}\n", r.interior_dim));
        for (name, value) in [
            ("scale", r.scale),
            ("rel1", r.rel1),
            ("comm_n_a", r.comm_n_a),
            ("comm_n_adag", r.comm_n_adag),
            ("anti_k_a", r.anti_k_a),
            ("anti_k_adag", r.anti_k_adag),
            ("comm_n_k", r.comm_n_k),
            ("casimir", r.casimir),
            ("max_residual", r.max_residual),
        ] {
            out.push_str(&format!("{name},{}\n", num(value)));
        }
        out.push_str(&format!("within_tolerance,{}\n", bool_str(r.within_tolerance)));
        out
    }

    fn scan_csv(&self) -> String {
        let mut out = String::from("q,B,families,boundary\n");
        if let Some(scan) = &self.scan {
            for cell in &scan.cells {
                let families = if cell.families.is_empty() {
                    "none".to_string()
                } else {
                    cell.families.join("+")
                };
                out.push_str(&format!(
                    "{},{},{families},{}\n",
                    num(cell.q),
                    num(cell.b),
                    bool_str(cell.boundary)
                ));
            }
        }
        out
    }

    fn equiv_csv(&self) -> String {
        let mut out = String::from("equivalent,shift,family_a,family_b\n");
        if let Some(e) = &self.equivalence {
            out.push_str(&format!(
                "{},{},{},{}\n",
                bool_str(e.equivalent),
                opt_int(e.shift),
                e.family_a,
                e.family_b
            ));
        }
        out
    }

    fn limits_csv(&self) -> String {
        let mut out = String::from(
            "q,B,b_star,family,exists,index_lo,index_hi,forced_lambda0,lambda0_min,\
             head0,head1,head2\n",
        );
        let rows = self.limits.as_ref().map(|l| l.rows.as_slice()).unwrap_or(&[]);
        for row in rows {
            let mut heads = [String::new(), String::new(), String::new()];
            for (slot, head) in heads.iter_mut().zip(&row.heads) {
                *slot = num(head.lambda);
            }
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{},{},{}\n",
                num(row.q),
                num(row.b),
                num(row.b_star),
                row.family,
                bool_str(row.exists),
                opt_int(row.index_lo),
                opt_int(row.index_hi),
                opt_num(row.forced_lambda0),
                opt_num(row.lambda0_min),
                heads[0],
                heads[1],
                heads[2],
            ));
        }
        out
    }
}

/// 17 significant digits; enough to reproduce the f64 bit pattern.
fn num(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt_num(v: Option<f64>) -> String {
    v.map(num).unwrap_or_default()
}

fn opt_int(v: Option<i64>) -> String {
    v.map(|n| n.to_string()).unwrap_or_default()
}

fn bool_str(v: bool) -> &'static str {
    if v {
        "true"
    } else {
        "false"
    }
}
