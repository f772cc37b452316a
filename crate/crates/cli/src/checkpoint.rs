//! Resumable sweep checkpoints: a versioned blob with magic header `TKCHK1`
//! holding the sweep parameters, the last fully processed enumeration level,
//! and the counters plus instances accumulated so far. Equality and violation
//! instances are stored as hypergraph blocks and their classifications are
//! recomputed on load, which keeps the format small and versionable.

use std::fmt;

use hypertau_core::extremal::classify;
use hypertau_core::multigraph::{chromatic_index_exact, matching_bound_check, Multigraph};
use hypertau_core::transversal::{cm_bound, tau_value};
use hypertau_core::verify::{
    SweepCheckpoint, Theorem1Report, Theorem1Violation, Theorem2Report, Theorem2Violation,
    VizingReport, VizingViolation,
};
use hypertau_core::Hypergraph;

use crate::formats::{parse_hypergraph, write_hypergraph, ParseError};

pub const MAGIC: &str = "TKCHK1";

/// Which sweep a checkpoint belongs to, with its defining parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SweepKind {
    Theorem1 { k: usize, n_max: usize, m_max: usize, cap: usize },
    Theorem2 { d: usize, v_max: usize, m_max: usize },
    Vizing { d: usize, v_max: usize, m_max: usize },
}

#[derive(Debug)]
pub enum CheckpointError {
    Malformed(String),
    Parse(ParseError),
}

impl fmt::Display for CheckpointError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckpointError::Malformed(msg) => write!(f, "malformed checkpoint: {msg}"),
            CheckpointError::Parse(e) => write!(f, "malformed checkpoint block: {e}"),
        }
    }
}

impl std::error::Error for CheckpointError {}

impl From<ParseError> for CheckpointError {
    fn from(e: ParseError) -> CheckpointError {
        CheckpointError::Parse(e)
    }
}

fn malformed<T>(msg: impl Into<String>) -> Result<T, CheckpointError> {
    Err(CheckpointError::Malformed(msg.into()))
}

struct Writer {
    out: String,
}

impl Writer {
    fn new() -> Writer {
        Writer { out: format!("{MAGIC}\nversion 1\n") }
    }

    fn field(&mut self, key: &str, value: impl fmt::Display) {
        self.out.push_str(&format!("{key} {value}\n"));
    }

    fn blocks(&mut self, key: &str, items: &[&Hypergraph]) -> Result<(), hypertau_core::Error> {
        self.field(key, items.len());
        for h in items {
            self.out.push_str(&write_hypergraph(h)?);
        }
        Ok(())
    }
}

struct Reader<'a> {
    lines: std::iter::Peekable<std::str::Lines<'a>>,
}

impl Reader<'_> {
    fn field(&mut self, key: &str) -> Result<String, CheckpointError> {
        let Some(line) = self.lines.next() else {
            return malformed(format!("missing field `{key}`"));
        };
        let Some(value) = line.strip_prefix(key).map(str::trim) else {
            return malformed(format!("expected field `{key}`, found `{line}`"));
        };
        Ok(value.to_string())
    }

    fn usize_field(&mut self, key: &str) -> Result<usize, CheckpointError> {
        let v = self.field(key)?;
        v.parse().map_err(|_| CheckpointError::Malformed(format!("bad value for `{key}`: {v}")))
    }

    fn blocks(&mut self, key: &str) -> Result<Vec<Hypergraph>, CheckpointError> {
        let count = self.usize_field(key)?;
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            let Some(header) = self.lines.next() else {
                return malformed("truncated hypergraph block");
            };
            let mut block = String::from(header);
            block.push('\n');
            let m: usize = header
                .split_ascii_whitespace()
                .nth(2)
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| CheckpointError::Malformed("bad block header".into()))?;
            for _ in 0..m {
                let Some(line) = self.lines.next() else {
                    return malformed("truncated hypergraph block");
                };
                block.push_str(line);
                block.push('\n');
            }
            out.push(parse_hypergraph(&block)?);
        }
        Ok(out)
    }
}

fn common_header(w: &mut Writer, level: usize, instances: u64, runtime_secs: f64) {
    w.field("level", level);
    w.field("instances", instances);
    w.field("runtime_nanos", (runtime_secs * 1e9) as u64);
}

pub fn save_theorem1(
    kind: &SweepKind,
    cp: &SweepCheckpoint<Theorem1Report>,
) -> Result<String, hypertau_core::Error> {
    let SweepKind::Theorem1 { k, n_max, m_max, cap } = kind else {
        unreachable!("kind matches the report type");
    };
    let mut w = Writer::new();
    w.field("sweep", "t1");
    w.field("k", k);
    w.field("nmax", n_max);
    w.field("mmax", m_max);
    w.field("cap", cap);
    common_header(&mut w, cp.level, cp.report.instances_checked, cp.report.runtime_secs);
    w.blocks("reps", &cp.representatives.iter().collect::<Vec<_>>())?;
    w.blocks("equality", &cp.report.equality.iter().map(|(h, _)| h).collect::<Vec<_>>())?;
    w.blocks("violations", &cp.report.violations.iter().map(|v| &v.hypergraph).collect::<Vec<_>>())?;
    Ok(w.out)
}

pub fn save_theorem2(
    kind: &SweepKind,
    cp: &SweepCheckpoint<Theorem2Report>,
) -> Result<String, hypertau_core::Error> {
    let SweepKind::Theorem2 { d, v_max, m_max } = kind else {
        unreachable!("kind matches the report type");
    };
    let mut w = Writer::new();
    w.field("sweep", "t2");
    w.field("d", d);
    w.field("vmax", v_max);
    w.field("mmax", m_max);
    common_header(&mut w, cp.level, cp.report.instances_checked, cp.report.runtime_secs);
    w.blocks("reps", &cp.representatives.iter().collect::<Vec<_>>())?;
    let equality: Vec<Hypergraph> = cp.report.equality.iter().map(|(g, _)| g.as_two_uniform()).collect();
    w.blocks("equality", &equality.iter().collect::<Vec<_>>())?;
    let violations: Vec<Hypergraph> =
        cp.report.violations.iter().map(|v| v.multigraph.as_two_uniform()).collect();
    w.blocks("violations", &violations.iter().collect::<Vec<_>>())?;
    Ok(w.out)
}

pub fn save_vizing(
    kind: &SweepKind,
    cp: &SweepCheckpoint<VizingReport>,
) -> Result<String, hypertau_core::Error> {
    let SweepKind::Vizing { d, v_max, m_max } = kind else {
        unreachable!("kind matches the report type");
    };
    let mut w = Writer::new();
    w.field("sweep", "vizing");
    w.field("d", d);
    w.field("vmax", v_max);
    w.field("mmax", m_max);
    common_header(&mut w, cp.level, cp.report.instances_checked, cp.report.runtime_secs);
    w.blocks("reps", &cp.representatives.iter().collect::<Vec<_>>())?;
    let extremal: Vec<Hypergraph> =
        cp.report.extremal_cases.iter().map(|(g, _)| g.as_two_uniform()).collect();
    w.blocks("extremal", &extremal.iter().collect::<Vec<_>>())?;
    let violations: Vec<Hypergraph> =
        cp.report.violations.iter().map(|v| v.multigraph.as_two_uniform()).collect();
    w.blocks("violations", &violations.iter().collect::<Vec<_>>())?;
    Ok(w.out)
}

/// Reads the magic, version and sweep parameters, leaving the reader at the
/// sweep-specific payload.
fn open(text: &str) -> Result<(Reader<'_>, String), CheckpointError> {
    let mut lines = text.lines().peekable();
    match lines.next() {
        Some(l) if l == MAGIC => {}
        _ => return malformed("missing TKCHK1 magic header"),
    }
    let mut r = Reader { lines };
    let version = r.field("version")?;
    if version != "1" {
        return malformed(format!("unsupported checkpoint version {version}"));
    }
    let sweep = r.field("sweep")?;
    Ok((r, sweep))
}

/// Loads a checkpoint, verifying it matches the expected sweep parameters.
pub fn load_theorem1(
    text: &str,
    expected: &SweepKind,
) -> Result<SweepCheckpoint<Theorem1Report>, CheckpointError> {
    let (mut r, sweep) = open(text)?;
    if sweep != "t1" {
        return malformed(format!("checkpoint is for sweep `{sweep}`, expected `t1`"));
    }
    let k = r.usize_field("k")?;
    let kind = SweepKind::Theorem1 {
        k,
        n_max: r.usize_field("nmax")?,
        m_max: r.usize_field("mmax")?,
        cap: r.usize_field("cap")?,
    };
    if kind != *expected {
        return malformed("checkpoint parameters do not match the requested sweep");
    }
    let level = r.usize_field("level")?;
    let instances = r.usize_field("instances")? as u64;
    let runtime_secs = r.usize_field("runtime_nanos")? as f64 / 1e9;
    let representatives = r.blocks("reps")?;
    let equality = r
        .blocks("equality")?
        .into_iter()
        .map(|h| {
            let class = classify(&h, k)
                .map_err(|e| CheckpointError::Malformed(format!("stored equality case: {e}")))?;
            Ok((h, class))
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let violations = r
        .blocks("violations")?
        .into_iter()
        .map(|h| {
            let tau = tau_value(&h);
            let bound = cm_bound(&h, k)
                .map_err(|e| CheckpointError::Malformed(format!("stored violation: {e}")))?;
            Ok(Theorem1Violation { hypergraph: h, tau, bound })
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let report = Theorem1Report {
        instances_checked: instances,
        equality,
        violations,
        truncated: true,
        runtime_secs,
    };
    Ok(SweepCheckpoint { level, representatives, report })
}

pub fn load_theorem2(
    text: &str,
    expected: &SweepKind,
) -> Result<SweepCheckpoint<Theorem2Report>, CheckpointError> {
    let (mut r, sweep) = open(text)?;
    if sweep != "t2" {
        return malformed(format!("checkpoint is for sweep `{sweep}`, expected `t2`"));
    }
    let d = r.usize_field("d")?;
    let kind = SweepKind::Theorem2 {
        d,
        v_max: r.usize_field("vmax")?,
        m_max: r.usize_field("mmax")?,
    };
    if kind != *expected {
        return malformed("checkpoint parameters do not match the requested sweep");
    }
    let level = r.usize_field("level")?;
    let instances = r.usize_field("instances")? as u64;
    let runtime_secs = r.usize_field("runtime_nanos")? as f64 / 1e9;
    let representatives = r.blocks("reps")?;
    let to_multi = |h: Hypergraph| {
        Multigraph::from_two_uniform(&h)
            .map_err(|e| CheckpointError::Malformed(format!("stored multigraph: {e}")))
    };
    let equality = r
        .blocks("equality")?
        .into_iter()
        .map(|h| {
            let g = to_multi(h)?;
            let verdict = matching_bound_check(&g, d)
                .map_err(|e| CheckpointError::Malformed(format!("stored equality case: {e}")))?;
            Ok((g, verdict.is_shannon_or_empty))
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let violations = r
        .blocks("violations")?
        .into_iter()
        .map(|h| {
            let g = to_multi(h)?;
            let verdict = matching_bound_check(&g, d)
                .map_err(|e| CheckpointError::Malformed(format!("stored violation: {e}")))?;
            Ok(Theorem2Violation { multigraph: g, verdict })
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let report = Theorem2Report {
        instances_checked: instances,
        equality,
        violations,
        truncated: true,
        runtime_secs,
    };
    Ok(SweepCheckpoint { level, representatives, report })
}

pub fn load_vizing(
    text: &str,
    expected: &SweepKind,
) -> Result<SweepCheckpoint<VizingReport>, CheckpointError> {
    let (mut r, sweep) = open(text)?;
    if sweep != "vizing" {
        return malformed(format!("checkpoint is for sweep `{sweep}`, expected `vizing`"));
    }
    let d = r.usize_field("d")?;
    let kind = SweepKind::Vizing {
        d,
        v_max: r.usize_field("vmax")?,
        m_max: r.usize_field("mmax")?,
    };
    if kind != *expected {
        return malformed("checkpoint parameters do not match the requested sweep");
    }
    let level = r.usize_field("level")?;
    let instances = r.usize_field("instances")? as u64;
    let runtime_secs = r.usize_field("runtime_nanos")? as f64 / 1e9;
    let representatives = r.blocks("reps")?;
    let to_multi = |h: Hypergraph| {
        Multigraph::from_two_uniform(&h)
            .map_err(|e| CheckpointError::Malformed(format!("stored multigraph: {e}")))
    };
    let extremal_cases = r
        .blocks("extremal")?
        .into_iter()
        .map(|h| {
            let g = to_multi(h)?;
            let has = hypertau_core::multigraph::contains_shannon_submultigraph(&g, d).is_some();
            Ok((g, has))
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let violations = r
        .blocks("violations")?
        .into_iter()
        .map(|h| {
            let g = to_multi(h)?;
            let chi = chromatic_index_exact(&g)
                .map_err(|e| CheckpointError::Malformed(format!("stored violation: {e}")))?
                .0;
            Ok(VizingViolation { multigraph: g, chromatic_index: chi })
        })
        .collect::<Result<Vec<_>, CheckpointError>>()?;
    let report = VizingReport {
        instances_checked: instances,
        extremal_cases,
        violations,
        truncated: true,
        runtime_secs,
    };
    Ok(SweepCheckpoint { level, representatives, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use hypertau_core::verify::{
        theorem1_sweep, theorem1_sweep_resume, SweepConfig, SweepMonitor, SweepProgress,
    };

    struct StopAfter(u64);
    impl SweepMonitor for StopAfter {
        fn should_stop(&mut self, p: &SweepProgress) -> bool {
            p.instances_checked >= self.0
        }
    }

    #[test]
    fn theorem1_checkpoint_round_trip_resumes_correctly() {
        let cfg = SweepConfig::simple(2, 5, 10);
        let kind = SweepKind::Theorem1 { k: 2, n_max: 5, m_max: 10, cap: 1 };
        let full = theorem1_sweep(&cfg, &mut hypertau_core::verify::NullMonitor)
            .unwrap()
            .report;

        let outcome = theorem1_sweep(&cfg, &mut StopAfter(2)).unwrap();
        let cp = outcome.checkpoint.unwrap();
        let text = save_theorem1(&kind, &cp).unwrap();
        assert!(text.starts_with("TKCHK1\n"));
        let restored = load_theorem1(&text, &kind).unwrap();
        assert_eq!(restored.level, cp.level);
        assert_eq!(restored.representatives, cp.representatives);
        assert_eq!(restored.report.instances_checked, cp.report.instances_checked);
        assert_eq!(restored.report.equality.len(), cp.report.equality.len());

        let mut state = restored;
        let final_report = loop {
            let outcome =
                theorem1_sweep_resume(&cfg, state, &mut hypertau_core::verify::NullMonitor)
                    .unwrap();
            if let Some(cp) = outcome.checkpoint {
                state = cp;
            } else {
                break outcome.report;
            }
        };
        assert_eq!(final_report.instances_checked, full.instances_checked);
        assert_eq!(final_report.equality.len(), full.equality.len());
    }

    #[test]
    fn mismatched_parameters_are_rejected() {
        let cfg = SweepConfig::simple(2, 5, 10);
        let kind = SweepKind::Theorem1 { k: 2, n_max: 5, m_max: 10, cap: 1 };
        let outcome = theorem1_sweep(&cfg, &mut StopAfter(2)).unwrap();
        let text = save_theorem1(&kind, &outcome.checkpoint.unwrap()).unwrap();
        let other = SweepKind::Theorem1 { k: 2, n_max: 6, m_max: 10, cap: 1 };
        assert!(load_theorem1(&text, &other).is_err());
        assert!(load_theorem2(&text, &SweepKind::Theorem2 { d: 4, v_max: 3, m_max: 6 }).is_err());
        assert!(load_theorem1("garbage", &kind).is_err());
    }
}
