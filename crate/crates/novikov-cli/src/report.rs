//! Report rendering: human-readable text by default, a stable
//! line-oriented `key=value` format under `--machine`.
//!
//! Machine keys are documented in the README. Values never contain
//! newlines; multi-line payloads (witness documents) escape `\n`.

use novikov::laws::BracketAlgebra;
use novikov::{AlgebraType, LawReport, SearchReport, Violation};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Human,
    Machine,
}

impl Style {
    pub fn new(machine: bool) -> Self {
        if machine { Style::Machine } else { Style::Human }
    }

    pub fn is_machine(self) -> bool {
        self == Style::Machine
    }
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn escape(value: &str) -> String {
    value.replace('\\', "\\\\").replace('\n', "\\n")
}

fn push_kv(out: &mut String, key: &str, value: impl AsRef<str>) {
    writeln!(out, "{key}={}", escape(value.as_ref())).unwrap();
}

fn residual_entries(v: &Violation) -> String {
    join(&v.residual.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Render a law report under `prefix` (e.g. `check`, `gd`, `module`).
pub fn law_report(out: &mut String, style: Style, prefix: &str, report: &LawReport) {
    match style {
        Style::Machine => {
            push_kv(out, &format!("{prefix}.law"), &report.law);
            push_kv(out, &format!("{prefix}.pass"), report.pass.to_string());
            push_kv(out, &format!("{prefix}.violations"), report.violations.len().to_string());
            for (n, v) in report.violations.iter().enumerate() {
                push_kv(out, &format!("{prefix}.violation.{n}.law"), &v.law);
                push_kv(out, &format!("{prefix}.violation.{n}.indices"), join(&v.indices));
                push_kv(out, &format!("{prefix}.violation.{n}.residual"), residual_entries(v));
            }
            for (n, note) in report.notes.iter().enumerate() {
                push_kv(out, &format!("{prefix}.note.{n}"), note);
            }
        }
        Style::Human => {
            let verdict = if report.pass { "PASS" } else { "FAIL" };
            writeln!(out, "{prefix} [{}]: {verdict}", report.law).unwrap();
            for v in &report.violations {
                writeln!(out, "  {v}").unwrap();
            }
            for note in &report.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
    }
}

pub fn algebra_type(out: &mut String, style: Style, ty: AlgebraType) {
    let name = match ty {
        AlgebraType::N => "N",
        AlgebraType::S => "S",
    };
    match style {
        Style::Machine => push_kv(out, "type", name),
        Style::Human => writeln!(out, "type {name}").unwrap(),
    }
}

/// Render a bracket table: its nonzero entries in document order, then
/// the Lie verdict under `bracket.law`/`bracket.pass`.
pub fn bracket(out: &mut String, style: Style, which: &str, b: &BracketAlgebra, verdict: &LawReport) {
    let n = b.n();
    let mut lines = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (k, v) in b.basis_product(i, j).iter().enumerate() {
                if !v.is_zero() {
                    lines.push(format!("p {i} {j} {k} {v}"));
                }
            }
        }
    }
    match style {
        Style::Machine => {
            push_kv(out, "bracket.kind", which);
            push_kv(out, "bracket.entries", lines.len().to_string());
            for (n, line) in lines.iter().enumerate() {
                push_kv(out, &format!("bracket.{n}"), line);
            }
        }
        Style::Human => {
            writeln!(out, "{which} bracket table ({} nonzero entries):", lines.len()).unwrap();
            for line in &lines {
                writeln!(out, "  {line}").unwrap();
            }
        }
    }
    law_report(out, style, "bracket", verdict);
}

pub fn search(out: &mut String, style: Style, report: &SearchReport) {
    match style {
        Style::Machine => {
            push_kv(out, "search.d0", report.spec.d0.to_string());
            push_kv(out, "search.d1", report.spec.d1.to_string());
            push_kv(out, "search.candidates", report.candidates.to_string());
            push_kv(out, "search.graded", report.graded.to_string());
            push_kv(out, "search.novikov_super", report.novikov_super.to_string());
            push_kv(out, "search.type_n", report.type_n.to_string());
            push_kv(out, "search.type_s", report.type_s.to_string());
            push_kv(out, "search.elapsed_ms", report.elapsed.as_millis().to_string());
            for (n, w) in report.witnesses.iter().enumerate() {
                push_kv(out, &format!("witness.{n}.doc"), crate::doc::emit_algebra(w));
            }
            for (n, note) in report.notes.iter().enumerate() {
                push_kv(out, &format!("search.note.{n}"), note);
            }
        }
        Style::Human => {
            writeln!(
                out,
                "search over ({}, {}): {} candidates, {} graded, {} novikov-super, {} type N, {} type S ({} ms)",
                report.spec.d0,
                report.spec.d1,
                report.candidates,
                report.graded,
                report.novikov_super,
                report.type_n,
                report.type_s,
                report.elapsed.as_millis()
            )
            .unwrap();
            for w in &report.witnesses {
                writeln!(out, "type-S witness:").unwrap();
                for line in crate::doc::emit_algebra(w).lines() {
                    writeln!(out, "  {line}").unwrap();
                }
            }
            for note in &report.notes {
                writeln!(out, "  note: {note}").unwrap();
            }
        }
    }
}
