//! Output in the supported formats. Every renderer returns the full text,
//! newline-terminated.

use std::fmt::Write;

use serde::Serialize;

use circsq_core::rauzy::{
    decompose_split, elementary_circuits, independent_rank, small_circuits, split_point,
    vector_cycle,
};
use circsq_core::squares::{distinct_squares, distinct_squares_circular};
use circsq_core::verify::CheckReport;
use circsq_core::{CircularWord, RauzyGraph, Result, SquareReport, Word};

use crate::Format;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Serialize)]
struct CountOutput {
    word: String,
    circular: bool,
    count: usize,
    squares: Vec<String>,
}

pub fn count(w: &Word, circular: bool, format: Format) -> String {
    let set = if circular {
        distinct_squares_circular(&CircularWord::new(w))
    } else {
        distinct_squares(w)
    };
    let squares: Vec<String> = set.iter().map(Word::to_string).collect();
    let name = if circular {
        format!("[{w}]")
    } else {
        w.to_string()
    };
    match format {
        Format::Json => json(&CountOutput {
            word: w.to_string(),
            circular,
            count: set.count(),
            squares,
        }),
        Format::Csv => format!(
            "word,circular,count\n{},{circular},{}\n",
            csv_field(&w.to_string()),
            set.count()
        ),
        _ => format!("Sq({name}) = {}: {}\n", set.count(), squares.join(", ")),
    }
}

pub fn classes(w: &Word, format: Format) -> String {
    let report = SquareReport::new(w);
    match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut out = String::from("root,l,t,even,odd\n");
            for c in &report.classes {
                writeln!(
                    out,
                    "{},{},{},{},{}",
                    csv_field(&c.root),
                    c.l,
                    c.t,
                    c.even,
                    c.odd
                )
                .unwrap();
            }
            out
        }
        _ => {
            let mut out = format!(
                "{w}: n = {}, Sq = {}, Sq([w]) = {}\n",
                report.n, report.sq, report.sq_circular
            );
            for c in &report.classes {
                writeln!(
                    out,
                    "  class {:<8} l = {:<3} t = {:<3} |E| = {:<3} |O| = {}",
                    c.root, c.l, c.t, c.even, c.odd
                )
                .unwrap();
            }
            out
        }
    }
}

#[derive(Serialize)]
struct EdgeOutput {
    label: String,
    source: String,
    target: String,
}

#[derive(Serialize)]
struct GraphOutput {
    order: usize,
    vertices: Vec<String>,
    edges: Vec<EdgeOutput>,
    weakly_connected: bool,
    cyclomatic_number: Option<usize>,
}

pub fn rauzy(g: &RauzyGraph, format: Format) -> String {
    let edges: Vec<EdgeOutput> = (0..g.edge_count())
        .map(|e| EdgeOutput {
            label: g.edges()[e].to_string(),
            source: g.vertices()[g.source(e)].to_string(),
            target: g.vertices()[g.target(e)].to_string(),
        })
        .collect();
    match format {
        Format::Dot => g.to_dot(),
        Format::Json => json(&GraphOutput {
            order: g.order(),
            vertices: g.vertices().iter().map(Word::to_string).collect(),
            edges,
            weakly_connected: g.is_weakly_connected(),
            cyclomatic_number: g.cyclomatic_number().ok(),
        }),
        Format::Csv => {
            let mut out = String::from("edge,source,target\n");
            for e in &edges {
                writeln!(
                    out,
                    "{},{},{}",
                    csv_field(&e.label),
                    csv_field(&e.source),
                    csv_field(&e.target)
                )
                .unwrap();
            }
            out
        }
        Format::Text => {
            let chi = g
                .cyclomatic_number()
                .map_or("undefined".to_string(), |c| c.to_string());
            let mut out = format!(
                "Γ_{}: {} vertices, {} edges, χ = {chi}\n",
                g.order(),
                g.vertex_count(),
                g.edge_count()
            );
            for e in &edges {
                writeln!(out, "  {}: {} -> {}", e.label, e.source, e.target).unwrap();
            }
            out
        }
    }
}

#[derive(Serialize)]
struct CircuitOutput {
    length: usize,
    label: String,
    small: bool,
    vertices: Vec<String>,
}

#[derive(Serialize)]
struct CircuitsOutput {
    order: usize,
    circuits: Vec<CircuitOutput>,
    rank: usize,
    cyclomatic_number: Option<usize>,
}

pub fn circuits(g: &RauzyGraph, small_only: bool, cap: usize, format: Format) -> Result<String> {
    let found = if small_only {
        small_circuits(g, cap)?
    } else {
        elementary_circuits(g, cap)?
    };
    let vectors = found
        .iter()
        .map(|c| vector_cycle(c, g))
        .collect::<Result<Vec<_>>>()?;
    let out = CircuitsOutput {
        order: g.order(),
        rank: independent_rank(&vectors)?,
        cyclomatic_number: g.cyclomatic_number().ok(),
        circuits: found
            .iter()
            .map(|c| CircuitOutput {
                length: c.len(),
                label: c.label().to_string(),
                small: c.is_small(),
                vertices: c.vertices().iter().map(Word::to_string).collect(),
            })
            .collect(),
    };
    Ok(match format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut s = String::from("length,label,small,circuit\n");
            for c in &out.circuits {
                writeln!(
                    s,
                    "{},{},{},{}",
                    c.length,
                    csv_field(&c.label),
                    c.small,
                    csv_field(&c.vertices.join(" "))
                )
                .unwrap();
            }
            s
        }
        _ => {
            let chi = out
                .cyclomatic_number
                .map_or("undefined".to_string(), |c| c.to_string());
            let mut s = format!(
                "Γ_{}: {} circuits, rank {} of χ = {chi}\n",
                out.order,
                out.circuits.len(),
                out.rank
            );
            for (c, circuit) in out.circuits.iter().zip(&found) {
                let tag = if c.small { "small" } else { "" };
                writeln!(s, "  {:>3}  {:<5}  {circuit}", c.length, tag).unwrap();
            }
            s
        }
    })
}

#[derive(Serialize)]
struct ComponentOutput {
    length: usize,
    label: String,
}

#[derive(Serialize)]
struct SplitOutput {
    word: String,
    split: Option<usize>,
    components: Vec<ComponentOutput>,
}

pub fn split(p: &Word, format: Format) -> Result<String> {
    let m = split_point(p)?;
    let parts = match m {
        Some(m) => decompose_split(p, m)?,
        None => Vec::new(),
    };
    let out = SplitOutput {
        word: p.to_string(),
        split: m,
        components: parts
            .iter()
            .map(|c| ComponentOutput {
                length: c.len(),
                label: c.label().to_string(),
            })
            .collect(),
    };
    Ok(match (format, m) {
        (Format::Json, _) => json(&out),
        (_, None) => "does not split\n".to_string(),
        (_, Some(m)) => {
            let lengths: Vec<String> = out
                .components
                .iter()
                .map(|c| c.length.to_string())
                .collect();
            format!(
                "splits at {m}; components of lengths {}={}\n",
                lengths.join("+"),
                p.len()
            )
        }
    })
}

pub fn reports(reports: &[CheckReport], format: Format) -> String {
    match format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut out = String::from("check,words_tested,skipped,violations,max_ratio,witness\n");
            for r in reports {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.check_id,
                    r.words_tested,
                    r.skipped,
                    r.violations.len(),
                    r.max_ratio.map(|x| x.to_string()).unwrap_or_default(),
                    csv_field(r.witness.as_deref().unwrap_or(""))
                )
                .unwrap();
            }
            out
        }
        _ => {
            let mut out = String::new();
            for r in reports {
                writeln!(out, "{}", r.summary_line()).unwrap();
                if !r.tallies.is_empty() {
                    let tallies: Vec<String> =
                        r.tallies.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    writeln!(out, "      {}", tallies.join(" ")).unwrap();
                }
                for v in r.violations.iter().take(10) {
                    writeln!(out, "      violation at {}: {}", v.word, v.detail).unwrap();
                }
            }
            out
        }
    }
}
