//! Render scores and comparison reports as aligned tables, CSV or JSON.
//!
//! Tables show 5 decimals like the reference layouts; CSV and JSON carry
//! full double precision and are the machine-readable surfaces.

use qwrank_core::ranking::ComparisonReport;
use qwrank_core::CentralityResult;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

pub struct GraphInfo {
    pub n: usize,
    pub edges: usize,
    pub weakly_connected: bool,
    /// Present when the graph came from a file.
    pub self_loops_dropped: Option<usize>,
}

pub fn metadata_block(info: &GraphInfo) -> String {
    let mut out = String::new();
    out.push_str(&format!("n: {}\n", info.n));
    out.push_str(&format!("edges: {}\n", info.edges));
    out.push_str(&format!("weakly_connected: {}\n", info.weakly_connected));
    if let Some(dropped) = info.self_loops_dropped {
        out.push_str(&format!("self_loops_dropped: {dropped}\n"));
    }
    out
}

fn node_name(labels: Option<&[String]>, index: usize) -> String {
    match labels {
        Some(labels) => labels[index].clone(),
        None => (index + 1).to_string(),
    }
}

fn score_table(
    title: &str,
    results: &[CentralityResult],
    labels: Option<&[String]>,
    side: impl Fn(&CentralityResult) -> &[f64],
) -> String {
    let n = results[0].n();
    let name_width = (0..n)
        .map(|i| node_name(labels, i).len())
        .max()
        .unwrap_or(4)
        .max(4);
    let col_widths: Vec<usize> = results
        .iter()
        .map(|r| r.method.to_string().len().max(8))
        .collect();

    let mut out = format!("{title}\n");
    out.push_str(&format!("{:>name_width$}", "node"));
    for (result, width) in results.iter().zip(&col_widths) {
        out.push_str(&format!(
            "  {:>width$}",
            result.method.to_string(),
            width = width
        ));
    }
    out.push('\n');
    for i in 0..n {
        out.push_str(&format!("{:>name_width$}", node_name(labels, i)));
        for (result, width) in results.iter().zip(&col_widths) {
            out.push_str(&format!("  {:>width$.5}", side(result)[i], width = width));
        }
        out.push('\n');
    }
    out
}

pub fn render_rank_table(
    info: &GraphInfo,
    results: &[CentralityResult],
    labels: Option<&[String]>,
) -> String {
    let mut out = metadata_block(info);
    out.push('\n');
    out.push_str(&score_table("hub scores", results, labels, |r| &r.hub));
    out.push('\n');
    out.push_str(&score_table("authority scores", results, labels, |r| {
        &r.authority
    }));
    out
}

pub fn render_rank_csv(results: &[CentralityResult]) -> String {
    let mut out = String::from("node,method,hub,authority\n");
    let n = results[0].n();
    for i in 0..n {
        for result in results {
            out.push_str(&format!(
                "{},{},{},{}\n",
                i + 1,
                result.method.id(),
                result.hub[i],
                result.authority[i]
            ));
        }
    }
    out
}

fn results_json(results: &[CentralityResult]) -> serde_json::Value {
    serde_json::Value::Array(
        results
            .iter()
            .map(|r| {
                serde_json::json!({
                    "method": r.method.id(),
                    "hub": r.hub,
                    "authority": r.authority,
                    "normalization": r.normalization.to_string(),
                })
            })
            .collect(),
    )
}

fn report_json(report: &ComparisonReport) -> serde_json::Value {
    serde_json::json!({
        "methods": report.methods.iter().map(|m| m.id()).collect::<Vec<_>>(),
        "tau": report.tau,
        "topk_overlap": report.topk_overlap,
        "k": report.k,
    })
}

pub fn render_json(
    info: &GraphInfo,
    results: &[CentralityResult],
    comparisons: Option<(&ComparisonReport, &ComparisonReport)>,
) -> String {
    let mut root = serde_json::json!({
        "graph": { "n": info.n, "edges": info.edges },
        "results": results_json(results),
    });
    if let Some((hub, authority)) = comparisons {
        root["comparisons"] = serde_json::json!({
            "hub": report_json(hub),
            "authority": report_json(authority),
        });
    }
    let mut text = serde_json::to_string_pretty(&root).expect("serializable");
    text.push('\n');
    text
}

fn matrix_table<T: std::fmt::Display>(
    title: &str,
    methods: &[String],
    cell: impl Fn(usize, usize) -> T,
) -> String {
    let width = methods.iter().map(|m| m.len()).max().unwrap_or(6).max(6);
    let mut out = format!("{title}\n");
    out.push_str(&format!("{:>width$}", ""));
    for name in methods {
        out.push_str(&format!("  {name:>width$}"));
    }
    out.push('\n');
    for (i, name) in methods.iter().enumerate() {
        out.push_str(&format!("{name:>width$}"));
        for j in 0..methods.len() {
            out.push_str(&format!("  {:>width$}", cell(i, j)));
        }
        out.push('\n');
    }
    out
}

pub fn render_compare_table(
    info: &GraphInfo,
    hub: &ComparisonReport,
    authority: &ComparisonReport,
) -> String {
    let methods: Vec<String> = hub.methods.iter().map(|m| m.to_string()).collect();
    let mut out = metadata_block(info);
    for (report, side) in [(hub, "hub"), (authority, "authority")] {
        out.push('\n');
        out.push_str(&matrix_table(
            &format!("Kendall tau ({side})"),
            &methods,
            |i, j| format!("{:.3}", report.tau[i][j]),
        ));
        out.push('\n');
        out.push_str(&matrix_table(
            &format!("top-{} overlap ({side})", report.k),
            &methods,
            |i, j| report.topk_overlap[i][j].to_string(),
        ));
    }
    out
}

pub fn render_compare_csv(hub: &ComparisonReport, authority: &ComparisonReport) -> String {
    let mut out = String::from("side,metric,method_a,method_b,value\n");
    for (report, side) in [(hub, "hub"), (authority, "authority")] {
        let ids: Vec<&str> = report.methods.iter().map(|m| m.id()).collect();
        for i in 0..ids.len() {
            for j in 0..ids.len() {
                out.push_str(&format!(
                    "{side},tau,{},{},{}\n",
                    ids[i], ids[j], report.tau[i][j]
                ));
            }
        }
        for i in 0..ids.len() {
            for j in 0..ids.len() {
                out.push_str(&format!(
                    "{side},topk_overlap,{},{},{}\n",
                    ids[i], ids[j], report.topk_overlap[i][j]
                ));
            }
        }
    }
    out
}
