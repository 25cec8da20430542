//! Corpus runner: decode a graph6 stream, run class filters and named
//! checks per graph in a worker pool, and emit input-ordered JSONL.

use reed_core::budget::Budget;
use reed_core::codec;
use reed_core::exec;
use reed_core::graph::Graph;
use reed_core::invariants;
use reed_core::patterns;

use crate::checks::{run_named_check, CheckContext, Verdict};
use crate::config::RunConfig;
use crate::report::{
    CheckJson, CheckReport, ClassVerdict, InvariantsJson, LineError, Summary, SummaryLine,
};

/// Exit codes: 0 all pass, 1 any fail, 2 budget exceeded somewhere,
/// 3 usage or decode trouble.
pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug)]
pub struct RunOutcome {
    /// Serialized report lines in input order, summary line last.
    pub lines: Vec<String>,
    pub summary: Summary,
    pub exit_code: i32,
}

enum Decoded {
    Graph { line_no: usize, source: String, graph: Graph },
    Bad(LineError),
}

fn decode_stream(input: &str, cap: usize) -> Vec<Decoded> {
    let mut out = Vec::new();
    let mut input_index = 0usize;
    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = codec::strip_stream_header(raw).trim();
        if line.is_empty() {
            continue;
        }
        let record = match codec::from_graph6(line, cap) {
            Ok(graph) if graph.n() == 0 => Decoded::Bad(LineError {
                input_index,
                line_no,
                error: "empty graph (n = 0) is not checkable".into(),
            }),
            Ok(graph) => Decoded::Graph {
                line_no,
                source: line.to_string(),
                graph,
            },
            Err(e) => Decoded::Bad(LineError {
                input_index,
                line_no,
                error: e.to_string(),
            }),
        };
        out.push(record);
        input_index += 1;
    }
    out
}

fn process_graph(
    input_index: usize,
    source: &str,
    graph: &Graph,
    cfg: &RunConfig,
) -> CheckReport {
    let ctx = CheckContext {
        max_hole_len: cfg.max_hole_len,
        time_budget_ms: cfg.time_budget_ms,
        seed: cfg.seed,
        input_index,
    };
    let budget = Budget::from_config(cfg.time_budget_ms);
    let invariants = match invariants::invariant_record(graph, budget) {
        Ok(r) => Some(InvariantsJson {
            omega: r.omega,
            chi: r.chi,
            delta: r.delta,
            reed_bound: r.reed_bound,
        }),
        Err(invariants::InvariantError::Budget(_)) => None,
        Err(e) => panic!("invariant computation failed: {e}"),
    };
    let class_verdicts = cfg
        .classes
        .iter()
        .map(|cls| match patterns::is_class_member(graph, cls) {
            patterns::Membership::Member => ClassVerdict {
                class: cls.to_string(),
                member: true,
                excluded_by: None,
                embedding: None,
            },
            patterns::Membership::Excluded { pattern, embedding } => ClassVerdict {
                class: cls.to_string(),
                member: false,
                excluded_by: Some(pattern.to_string()),
                embedding: Some(embedding),
            },
        })
        .collect();
    let checks = cfg
        .checks
        .iter()
        .map(|&id| CheckJson::from(run_named_check(id, graph, &ctx)))
        .collect();
    CheckReport {
        input_index,
        graph6: source.to_string(),
        n: graph.n(),
        m: graph.edge_count(),
        invariants,
        class_verdicts,
        checks,
    }
}

/// Run every configured check over every graph of the stream. Decode
/// errors are reported per line and processing continues.
pub fn run_corpus(input: &str, cfg: &RunConfig) -> RunOutcome {
    let decoded = decode_stream(input, cfg.vertex_cap);
    let lines: Vec<String> = exec::map_ordered(&decoded, cfg.jobs, |input_index, record| {
        match record {
            Decoded::Graph { source, graph, .. } => {
                let report = process_graph(input_index, source, graph, cfg);
                serde_json::to_string(&report).expect("report serializes")
            }
            Decoded::Bad(err) => serde_json::to_string(err).expect("error serializes"),
        }
    });

    let mut summary = Summary::new(&cfg.checks);
    for record in &decoded {
        match record {
            Decoded::Graph { .. } => summary.graphs += 1,
            Decoded::Bad(_) => summary.decode_errors += 1,
        }
    }
    // Re-read verdicts from the serialized lines so the summary reflects
    // exactly what was emitted.
    for line in &lines {
        if let Ok(crate::report::ReportLine::Report(report)) =
            crate::report::parse_report_line(line)
        {
            for check in &report.checks {
                if let (Ok(id), Some(verdict)) = (
                    check.id.parse::<crate::checks::CheckId>(),
                    Verdict::parse(&check.verdict),
                ) {
                    summary.record_check(id, verdict);
                }
            }
            if report.invariants.is_none() {
                // Budget ran out before the record was complete.
                summary.exit_code = summary.exit_code.max(EXIT_BUDGET);
            }
        }
    }

    let mut exit_code = summary.exit_code;
    if summary.total_fails() > 0 {
        exit_code = exit_code.max(EXIT_FAIL);
    }
    if summary.total_budget_exceeded() > 0 {
        exit_code = exit_code.max(EXIT_BUDGET);
    }
    if summary.decode_errors > 0 {
        exit_code = exit_code.max(EXIT_USAGE);
    }
    summary.exit_code = exit_code;

    let mut lines = lines;
    lines.push(
        serde_json::to_string(&SummaryLine {
            summary: summary.clone(),
        })
        .expect("summary serializes"),
    );
    RunOutcome {
        lines,
        summary,
        exit_code,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::CheckId;

    fn reed_only() -> RunConfig {
        RunConfig {
            checks: vec![CheckId::Reed],
            ..RunConfig::default()
        }
    }

    #[test]
    fn two_graph_corpus() {
        // C5 and K4.
        let input = "Dhc\nC~\n";
        let out = run_corpus(input, &reed_only());
        assert_eq!(out.summary.graphs, 2);
        assert_eq!(out.summary.checks[0].counts.pass, 2);
        assert_eq!(out.exit_code, EXIT_OK);
        assert_eq!(out.lines.len(), 3); // two reports + summary
    }

    #[test]
    fn malformed_line_keeps_going() {
        let input = "Dhc\n*bad*\nC~\n";
        let out = run_corpus(input, &reed_only());
        assert_eq!(out.summary.graphs, 2);
        assert_eq!(out.summary.decode_errors, 1);
        assert_eq!(out.exit_code, EXIT_USAGE);
        // Error record preserves the line number.
        let err = out
            .lines
            .iter()
            .find(|l| l.contains("\"error\""))
            .expect("error line present");
        assert!(err.contains("\"line_no\":2"));
    }

    #[test]
    fn header_skipped_and_order_kept() {
        let input = ">>graph6<<Dhc\nC~\n";
        let out = run_corpus(input, &reed_only());
        assert_eq!(out.summary.graphs, 2);
        for (i, line) in out.lines[..2].iter().enumerate() {
            assert!(line.contains(&format!("\"input_index\":{i}")));
        }
    }

    #[test]
    fn budget_exit_code() {
        let cfg = RunConfig {
            time_budget_ms: Some(0),
            checks: vec![CheckId::Reed],
            ..RunConfig::default()
        };
        let out = run_corpus("Dhc\n", &cfg);
        assert_eq!(out.exit_code, EXIT_BUDGET);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let input = "Dhc\nC~\nDhc\nBW\n";
        let mut cfg = RunConfig::default();
        cfg.checks = CheckId::all().to_vec();
        cfg.jobs = 1;
        let serial = run_corpus(input, &cfg);
        cfg.jobs = 4;
        let parallel = run_corpus(input, &cfg);
        assert_eq!(serial.lines, parallel.lines);
    }
}
