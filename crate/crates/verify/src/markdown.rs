//! Markdown rendering. Tables carry the same numbers as the JSON reports.

use std::fmt::Write;

use crate::report::{
    CertificateCheck, CertificateEcho, Clauses, Expectation, MinusculeListing, RootEntry,
    SuiteReport, TauReport, VerificationReport,
};

fn vector(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("({})", parts.join(","))
}

fn opt(v: Option<u32>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn entries(es: &[RootEntry]) -> String {
    let parts: Vec<String> = es
        .iter()
        .map(|e| format!("{}x{}", vector(&e.root_coords), e.multiplicity))
        .collect();
    parts.join(" + ")
}

fn clause_line(c: &Clauses) -> String {
    let mark = |p: bool| if p { "pass" } else { "FAIL" };
    let mut line = format!(
        "well-formed {}, (a) {}, (b) {}, (c) {}, (d) {}; orthogonal: {}",
        mark(c.well_formed.passed),
        mark(c.a_sum.passed),
        mark(c.b_commuting.passed),
        mark(c.c_ladder.passed),
        mark(c.d_minimal.passed),
        yes_no(c.orthogonal)
    );
    for o in [
        &c.well_formed,
        &c.a_sum,
        &c.b_commuting,
        &c.c_ladder,
        &c.d_minimal,
    ] {
        if let Some(d) = &o.detail {
            if !o.passed {
                let _ = write!(line, "; {d}");
                break;
            }
        }
    }
    line
}

fn certificate_line(d: usize, cert: &CertificateEcho) -> String {
    format!(
        "- d = {d} ({}): {}; {}",
        cert.source,
        entries(&cert.entries),
        clause_line(&cert.clauses)
    )
}

pub fn render_report(r: &VerificationReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## {}\n", r.config.label());
    let _ = writeln!(out, "- minuscule: {}", yes_no(r.minuscule));
    let _ = writeln!(out, "- sum m_d: {}", r.sum_m);
    let _ = writeln!(out, "- dim G/P: {}", r.dim_gp);
    let _ = writeln!(
        out,
        "- identity: {}",
        if r.lmp_identity { "holds" } else { "fails" }
    );
    let _ = writeln!(out, "- routes agree: {}\n", yes_no(r.all_agreed));
    let _ = writeln!(
        out,
        "| d | target | m_d | relaxed | lattice | c_alpha | certificate | agreed |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|---|");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} |",
            row.d,
            vector(&row.target),
            row.m_dijkstra,
            opt(row.m_relaxed),
            opt(row.m_lattice_lb),
            opt(row.c_alpha),
            opt(row.certificate_cost),
            yes_no(row.agreed)
        );
    }
    let certs: Vec<String> = r
        .rows
        .iter()
        .filter_map(|row| row.certificate.as_ref().map(|c| certificate_line(row.d, c)))
        .collect();
    if !certs.is_empty() {
        let _ = writeln!(out, "\n### Certificates\n");
        for line in certs {
            let _ = writeln!(out, "{line}");
        }
    }
    let witnesses: Vec<&crate::report::Row> =
        r.rows.iter().filter(|row| row.witness.is_some()).collect();
    if !witnesses.is_empty() {
        let _ = writeln!(out, "\n### Shortest ladders\n");
        for row in witnesses {
            let steps: Vec<String> = row
                .witness
                .iter()
                .flatten()
                .map(|s| format!("{}^{}", vector(&s.root_coords), s.multiplicity))
                .collect();
            let _ = writeln!(out, "- d = {}: {}", row.d, steps.join(", "));
        }
    }
    out
}

pub fn render_suite(s: &SuiteReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# Minuscule sweep up to rank {}\n", s.max_rank);
    let _ = writeln!(
        out,
        "| configuration | profile | sum m_d | dim G/P | routes agree | established | passed |"
    );
    let _ = writeln!(out, "|---|---|---|---|---|---|---|");
    for e in &s.entries {
        let r = &e.report;
        let established = match &e.expectation {
            Expectation::Identity if e.auxiliary => "directly (auxiliary)".to_string(),
            Expectation::Identity => "directly".to_string(),
            Expectation::Isomorphic { via } => format!("via {}", via.label()),
        };
        let profile: Vec<String> = r.profile().iter().map(u32::to_string).collect();
        let _ = writeln!(
            out,
            "| {} | ({}) | {} | {} | {} | {} | {} |",
            r.config.label(),
            profile.join(","),
            r.sum_m,
            r.dim_gp,
            yes_no(r.all_agreed),
            established,
            yes_no(e.passed)
        );
    }
    let _ = writeln!(out, "\n## Cross-checks\n");
    for c in &s.cross_checks {
        let _ = writeln!(
            out,
            "- {}: {} ({})",
            c.name,
            if c.passed { "pass" } else { "FAIL" },
            c.detail
        );
    }
    let _ = writeln!(out);
    if s.failures.is_empty() {
        let _ = writeln!(out, "All {} configurations passed.", s.entries.len());
    } else {
        let _ = writeln!(out, "## Failures\n");
        for f in &s.failures {
            let _ = writeln!(out, "- {f}");
        }
    }
    out
}

pub fn render_tau(t: &TauReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## tau for {}\n", t.config.label());
    let letters: Vec<String> = t.word.iter().map(|l| format!("s{l}")).collect();
    let _ = writeln!(out, "- length: {}", t.length);
    let _ = writeln!(out, "- word: {}\n", letters.join(" "));
    let _ = writeln!(out, "| simple root | tau(alpha) |");
    let _ = writeln!(out, "|---|---|");
    for a in &t.action {
        let _ = writeln!(out, "| alpha_{} | {} |", a.simple, vector(&a.image));
    }
    out
}

pub fn render_minuscule(list: &[MinusculeListing]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| type | minuscule fundamental weights |");
    let _ = writeln!(out, "|---|---|");
    for m in list {
        let idx: Vec<String> = m.indices.iter().map(|i| format!("omega_{i}")).collect();
        let shown = if idx.is_empty() {
            "none".to_string()
        } else {
            idx.join(", ")
        };
        let _ = writeln!(out, "| {}{} | {} |", m.family, m.rank, shown);
    }
    out
}

pub fn render_check(c: &CertificateCheck) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "## Certificate for {}, d = {}\n",
        c.config.label(),
        c.d
    );
    let _ = writeln!(out, "- target: {}", vector(&c.target));
    let _ = writeln!(out, "- cost: {}", c.cost);
    let _ = writeln!(out, "- shortest ladder: {}", c.m_dijkstra);
    let _ = writeln!(out, "- coefficient bound: {}", opt(c.c_alpha));
    let _ = writeln!(out, "- clauses: {}", clause_line(&c.clauses));
    if let Some(order) = &c.clauses.ladder_order {
        let o: Vec<String> = order.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "- ladder order: {}", o.join(", "));
    }
    let _ = writeln!(
        out,
        "- result: {}",
        if c.clauses.passed { "valid" } else { "INVALID" }
    );
    out
}
