//! Serialization of check reports, spectra, oracle comparisons and grid
//! functions. Exact quantities are printed as `p/q` strings, never floats;
//! floating-point quantities use scientific notation with 17 significant
//! digits. All maps are ordered, so identical inputs produce byte-identical
//! output.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use focksym_core::symcheck::CheckReport;
use focksym_core::Rational;

use crate::numoracle::GridFunction;

/// A float rendered with 17 significant digits in scientific notation.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// A rational rendered as `p/q` (or `p` when integral).
pub fn format_rational(r: &Rational) -> String {
    format!("{r}")
}

/// JSON form of one identity check.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ReportJson {
    pub suite: String,
    pub identity: String,
    pub model: String,
    pub params: BTreeMap<String, String>,
    pub passed: bool,
    pub residual_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl From<&CheckReport> for ReportJson {
    fn from(r: &CheckReport) -> Self {
        ReportJson {
            suite: r.identity.suite().to_string(),
            identity: r.identity.name().to_string(),
            model: r.model.name().to_string(),
            params: r.params.clone(),
            passed: r.passed,
            residual_terms: r.residual_terms,
            witness: r.witness.clone(),
        }
    }
}

/// Pretty-printed JSON array of reports (deterministic ordering).
pub fn reports_to_json(reports: &[CheckReport]) -> String {
    let rows: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
    serde_json::to_string_pretty(&rows).expect("reports serialize")
}

/// CSV form of a report list, fixed column order.
pub fn reports_to_csv(reports: &[CheckReport]) -> String {
    let mut out = String::from("suite,identity,model,params,passed,residual_terms,witness\n");
    for r in reports {
        let json = ReportJson::from(r);
        let params = json
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";");
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            json.suite,
            json.identity,
            json.model,
            csv_quote(&params),
            json.passed,
            json.residual_terms,
            csv_quote(json.witness.as_deref().unwrap_or("")),
        ));
    }
    out
}

fn csv_quote(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// One spectrum table row.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub model: String,
    pub j: String,
    pub n: u32,
    pub big_n: String,
    pub epsilon: String,
    pub e_phys: String,
    pub kappa_degeneracy: String,
}

pub fn spectrum_rows_to_json(rows: &[SpectrumRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn spectrum_rows_to_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("model,j,n,N,epsilon,e_phys,kappa_degeneracy\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.model, r.j, r.n, r.big_n, r.epsilon, r.e_phys, r.kappa_degeneracy
        ));
    }
    out
}

/// One closed-form versus numerical comparison row.
#[derive(Debug, Clone, Serialize)]
pub struct OracleRow {
    pub model: String,
    pub j: String,
    pub n: u32,
    pub epsilon_exact: String,
    pub epsilon_numeric: String,
    pub relative_error: String,
    pub tolerance: String,
    pub passed: bool,
}

pub fn oracle_rows_to_json(rows: &[OracleRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

pub fn oracle_rows_to_csv(rows: &[OracleRow]) -> String {
    let mut out =
        String::from("model,j,n,epsilon_exact,epsilon_numeric,relative_error,tolerance,passed\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.model,
            r.j,
            r.n,
            r.epsilon_exact,
            r.epsilon_numeric,
            r.relative_error,
            r.tolerance,
            r.passed
        ));
    }
    out
}

/// Metadata header of a wavefunction export.
#[derive(Debug, Clone, Serialize)]
pub struct WavefunctionMeta {
    pub model: String,
    pub j: String,
    pub n: u32,
    pub kappa: String,
    pub m: usize,
    pub r_min: String,
    pub r_max: String,
}

/// Write a grid function as CSV with a JSON metadata comment line and the
/// fixed columns `r, re_up, im_up, re_down, im_down`.
pub fn write_wavefunction_csv(
    w: &mut impl Write,
    gf: &GridFunction,
    meta: &WavefunctionMeta,
) -> std::io::Result<()> {
    writeln!(
        w,
        "# {}",
        serde_json::to_string(meta).expect("meta serializes")
    )?;
    writeln!(w, "r,re_up,im_up,re_down,im_down")?;
    for i in 0..gf.grid.len() {
        writeln!(
            w,
            "{},{},{},{},{}",
            format_float(gf.grid.node(i)),
            format_float(gf.up[i].re),
            format_float(gf.up[i].im),
            format_float(gf.down[i].re),
            format_float(gf.down[i].im),
        )?;
    }
    Ok(())
}
