//! Line-oriented rendering of sweep reports, ending in the machine-readable
//! trailer `#RESULT instances=<int> violations=<int> equality=<int>
//! truncated=<0|1>`.

use std::io::{self, Write};

use hypertau_core::extremal::ExtremalClass;
use hypertau_core::multigraph::Multigraph;
use hypertau_core::verify::{SweepSummary, Theorem1Report, Theorem2Report, VizingReport};
use hypertau_core::Hypergraph;

pub fn hypergraph_inline(h: &Hypergraph) -> String {
    let mut out = String::new();
    for (i, edge) in h.edges().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push('{');
        for (j, v) in edge.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            out.push_str(&v.to_string());
        }
        out.push('}');
    }
    out
}

pub fn multigraph_inline(g: &Multigraph) -> String {
    let mut out = String::new();
    for (i, (u, v, m)) in g.pairs().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{u}-{v}x{m}"));
    }
    out
}

pub fn trailer(summary: &SweepSummary) -> String {
    format!(
        "#RESULT instances={} violations={} equality={} truncated={}",
        summary.instances_checked,
        summary.violations,
        summary.equality_cases,
        if summary.truncated { 1 } else { 0 }
    )
}

fn class_name(class: &ExtremalClass) -> &'static str {
    match class {
        ExtremalClass::IsEk { .. } => "E_k",
        ExtremalClass::IsTk { .. } => "T_k",
        ExtremalClass::StrictlyBelowBound { .. } => "below_bound",
        ExtremalClass::OutOfTheoremScope { .. } => "out_of_scope",
        ExtremalClass::TheoremViolation { .. } => "theorem_violation",
    }
}

pub fn render_theorem1(report: &Theorem1Report, out: &mut dyn Write) -> io::Result<()> {
    for (h, class) in &report.equality {
        writeln!(
            out,
            "equality class={} n={} m={} edges={}",
            class_name(class),
            h.num_vertices(),
            h.num_edges(),
            hypergraph_inline(h)
        )?;
    }
    for v in &report.violations {
        writeln!(
            out,
            "violation tau={} bound={} n={} m={} edges={}",
            v.tau,
            v.bound,
            v.hypergraph.num_vertices(),
            v.hypergraph.num_edges(),
            hypergraph_inline(&v.hypergraph)
        )?;
    }
    writeln!(out, "runtime_secs={:.3}", report.runtime_secs)?;
    writeln!(out, "{}", trailer(&report.summary()))
}

pub fn render_theorem2(report: &Theorem2Report, out: &mut dyn Write) -> io::Result<()> {
    for (g, is_shannon) in &report.equality {
        writeln!(
            out,
            "equality shannon={} n={} m={} edges={}",
            is_shannon,
            g.num_vertices(),
            g.size(),
            multigraph_inline(g)
        )?;
    }
    for v in &report.violations {
        writeln!(
            out,
            "violation matching={} m={} shannon_bound={} edges={}",
            v.verdict.matching_number,
            v.verdict.size,
            v.verdict.shannon_bound,
            multigraph_inline(&v.multigraph)
        )?;
    }
    writeln!(out, "runtime_secs={:.3}", report.runtime_secs)?;
    writeln!(out, "{}", trailer(&report.summary()))
}

pub fn render_vizing(report: &VizingReport, out: &mut dyn Write) -> io::Result<()> {
    for (g, has) in &report.extremal_cases {
        writeln!(
            out,
            "extremal has_shannon_submultigraph={} n={} m={} edges={}",
            has,
            g.num_vertices(),
            g.size(),
            multigraph_inline(g)
        )?;
    }
    for v in &report.violations {
        writeln!(
            out,
            "violation chromatic_index={} edges={}",
            v.chromatic_index,
            multigraph_inline(&v.multigraph)
        )?;
    }
    writeln!(out, "runtime_secs={:.3}", report.runtime_secs)?;
    writeln!(out, "{}", trailer(&report.summary()))
}
