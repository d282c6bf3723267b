//! Text, JSON and CSV renderings of an [`OutputRecord`].

use genusdist::genus::format_counts;
use num_bigint::BigUint;

use crate::args::Format;
use crate::record::{OutputRecord, Payload, VerifyCase};

pub fn render(record: &OutputRecord, format: Format) -> String {
    match format {
        Format::Text => text(&record.result),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(record).expect("records always serialize");
            s.push('\n');
            s
        }
        Format::Csv => csv(&record.result),
    }
}

fn poly(coeffs: &[String]) -> String {
    let parsed: Vec<BigUint> = coeffs.iter().map(|c| c.parse().expect("decimal coefficient")).collect();
    format_counts(&parsed)
}

fn verify_line(c: &VerifyCase) -> String {
    let mut line = format!("{}: {}", c.case, if c.pass { "pass" } else { "FAIL" });
    if c.oracle != c.formula {
        line += &format!("\n  oracle:  {}\n  formula: {}", poly(&c.oracle), poly(&c.formula));
    }
    if c.total_law == Some(false) {
        line += "\n  total embedding count law violated";
    }
    line
}

fn text(payload: &Payload) -> String {
    let mut lines: Vec<String> = Vec::new();
    match payload {
        Payload::Genus(g) => lines.push(g.to_string()),
        Payload::Table { rows, .. } => lines.extend(rows.iter().map(|g| g.to_string())),
        Payload::Verify(r) => {
            lines.extend(r.cases.iter().map(verify_line));
            let bad = r.cases.iter().filter(|c| !c.pass).count();
            lines.push(match bad {
                0 if r.cases.len() == 1 => "1 case agrees".to_string(),
                0 => format!("all {} cases agree", r.cases.len()),
                _ => format!("{bad} of {} cases disagree", r.cases.len()),
            });
        }
        Payload::Check(r) => {
            for c in &r.cases {
                let nonpositive = c.nonpositive_roots.map_or("n/a".to_string(), |b| b.to_string());
                lines.push(format!(
                    "{}: real_rooted={} nonpositive_roots={} log_concave={}",
                    c.lambda,
                    c.real_rooted,
                    nonpositive,
                    c.log_concave.holds()
                ));
            }
            lines.push(if r.pass { "pass".into() } else { "fail".into() });
        }
        Payload::Moments(r) => {
            lines.push(format!("E[X] = {}", r.expected_x));
            lines.push(format!("Var[X] = {}", r.variance_x));
            lines.push(format!("E[g] = {}", r.expected_genus));
            lines.push(format!("Var[g] = {}", r.variance_genus));
            lines.push(format!("mu = {}", r.asymptotic.mu.value));
            lines.push(format!("sigma^2 = {}", r.asymptotic.sigma2.value));
        }
        Payload::Character { value, .. } => lines.push(value.clone()),
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

fn csv(payload: &Payload) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut row = |fields: &[&str]| w.write_record(fields).expect("in-memory write");
    match payload {
        Payload::Genus(g) => {
            row(&["genus", "count"]);
            for (genus, c) in g.coeff_strings().iter().enumerate() {
                row(&[&genus.to_string(), c]);
            }
        }
        Payload::Table { rows, .. } => {
            row(&["n", "genus", "count"]);
            for g in rows {
                for (genus, c) in g.coeff_strings().iter().enumerate() {
                    row(&[&g.n().to_string(), &genus.to_string(), c]);
                }
            }
        }
        Payload::Verify(r) => {
            row(&["case", "pass", "oracle", "formula"]);
            for c in &r.cases {
                row(&[&c.case, &c.pass.to_string(), &c.oracle.join(";"), &c.formula.join(";")]);
            }
        }
        Payload::Check(r) => {
            row(&["lambda", "real_rooted", "nonpositive_roots", "log_concave", "pass"]);
            for c in &r.cases {
                let nonpositive = c.nonpositive_roots.map_or(String::new(), |b| b.to_string());
                row(&[
                    &c.lambda.to_string(),
                    &c.real_rooted.to_string(),
                    &nonpositive,
                    &c.log_concave.holds().to_string(),
                    &c.pass.to_string(),
                ]);
            }
        }
        Payload::Moments(r) => {
            row(&["quantity", "value"]);
            row(&["expected_x", &r.expected_x.to_string()]);
            row(&["variance_x", &r.variance_x.to_string()]);
            row(&["expected_genus", &r.expected_genus.to_string()]);
            row(&["variance_genus", &r.variance_genus.to_string()]);
            row(&["mu", &r.asymptotic.mu.value]);
            row(&["sigma2", &r.asymptotic.sigma2.value]);
        }
        Payload::Character { theta, mu, value } => {
            row(&["theta", "mu", "value"]);
            row(&[&theta.to_string(), &mu.to_string(), value]);
        }
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}
