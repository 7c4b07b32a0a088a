//! Deterministic report serialization: JSON (fixed field order, exact
//! rationals as strings), CSV for tables, and plain text. No floats appear
//! anywhere in any format.

use ffield::poly::fmt_rat;
use ffield::report::BoundReport;
use ffield::Rat;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn parse(s: &str) -> Option<Format> {
        match s {
            "json" => Some(Format::Json),
            "csv" => Some(Format::Csv),
            "text" => Some(Format::Text),
            _ => None,
        }
    }

    /// Flag value, or the FFIELD_FORMAT environment variable, or text.
    pub fn resolve(flag: Option<&str>) -> Result<Format, String> {
        if let Some(f) = flag {
            return Format::parse(f).ok_or_else(|| format!("unknown format '{f}'"));
        }
        if let Ok(env) = std::env::var("FFIELD_FORMAT") {
            if !env.is_empty() {
                return Format::parse(&env).ok_or_else(|| format!("unknown FFIELD_FORMAT '{env}'"));
            }
        }
        Ok(Format::Text)
    }
}

pub fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out
}

fn json_str(s: &str) -> String {
    format!("\"{}\"", json_escape(s))
}

/// One JSON object per check: {check, inputs, lhs, rhs,
/// rhs_cubed_comparison, holds, branch, notes}. The cubed-comparison triple
/// (lhs^3, constant, H(a)*H(b)*chi) is present exactly for the cube-root
/// bounds, whose report lhs/rhs are already the cubed values.
pub fn report_to_json(rep: &BoundReport) -> String {
    let mut s = String::from("{");
    s.push_str(&format!("\"check\": {}, ", json_str(&rep.check)));
    s.push_str("\"inputs\": {");
    for (i, (k, v)) in rep.context.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&format!("{}: {}", json_str(k), json_str(v)));
    }
    s.push_str("}, ");
    s.push_str(&format!("\"lhs\": {}, ", json_str(&rep.lhs_display())));
    s.push_str(&format!("\"rhs\": {}, ", json_str(&rep.rhs_display())));
    if let Some(triple) = cubed_comparison(rep) {
        s.push_str(&format!(
            "\"rhs_cubed_comparison\": [{}, {}, {}], ",
            json_str(&triple.0),
            json_str(&triple.1),
            json_str(&triple.2)
        ));
    }
    s.push_str(&format!("\"holds\": {}, ", rep.holds));
    s.push_str(&format!("\"branch\": {}, ", json_str(&rep.branch)));
    s.push_str("\"notes\": [");
    for (i, n) in rep.notes.iter().enumerate() {
        if i > 0 {
            s.push_str(", ");
        }
        s.push_str(&json_str(n));
    }
    s.push_str("]}");
    s
}

/// (lhs^3, 54, H(a)*H(b)*chi) for the cube-root bound reports.
fn cubed_comparison(rep: &BoundReport) -> Option<(String, String, String)> {
    if rep.branch != "independent-cubed" {
        return None;
    }
    let product = &rep.rhs / &Rat::from_integer(54.into());
    Some((rep.lhs_display(), "54".to_string(), fmt_rat(&product)))
}

pub fn report_to_text(rep: &BoundReport) -> String {
    let mut s = format!(
        "{}: lhs {} vs rhs {} [{}] {}",
        rep.check,
        rep.lhs_display(),
        rep.rhs_display(),
        rep.branch,
        if rep.holds { "holds" } else { "VIOLATED" }
    );
    for (k, v) in &rep.context {
        s.push_str(&format!("\n  {k} = {v}"));
    }
    for n in &rep.notes {
        s.push_str(&format!("\n  note: {n}"));
    }
    s
}

pub fn report_to_csv_row(rep: &BoundReport) -> String {
    format!(
        "{},{},{},{},{}",
        csv_field(&rep.check),
        rep.lhs_display(),
        rep.rhs_display(),
        csv_field(&rep.branch),
        rep.holds
    )
}

pub const REPORT_CSV_HEADER: &str = "check,lhs,rhs,branch,holds";

pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Whether a failed report is a genuine violation of a proved statement,
/// as opposed to an instance the statement does not reach (inconclusive
/// branches of the multiple-zero trichotomy).
pub fn is_violation(rep: &BoundReport) -> bool {
    !rep.holds && rep.branch != "inconclusive-threshold-constant" && rep.branch != "value-vanishes"
}

pub fn print_reports(reports: &[BoundReport], format: Format) {
    match format {
        Format::Json => {
            for r in reports {
                println!("{}", report_to_json(r));
            }
        }
        Format::Csv => {
            if !reports.is_empty() {
                println!("{REPORT_CSV_HEADER}");
                for r in reports {
                    println!("{}", report_to_csv_row(r));
                }
            }
        }
        Format::Text => {
            for r in reports {
                println!("{}", report_to_text(r));
            }
        }
    }
}
