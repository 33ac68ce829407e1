use std::collections::BTreeSet;
use std::fmt::Write;

use seaweed::meander::{build_meander, components, graph_index, orient, Side};
use seaweed::oracle::cross_check;
use seaweed::rational::to_pq;
use seaweed::render;
use seaweed::spectrum::{
    block_contribution_from_measures, block_sets_from_measures, blocks, principal_element_with_reference,
    simple_eigenvalues, spectrum, Measures, SpectrumMultiset,
};
use seaweed::typesym::{parse_type_with_limit, SeaweedType, DEFAULT_MAX_N};
use seaweed::verify::{check_theorem, check_windup_equations, sweep, SweepSummary};
use seaweed::winding::{wind_down_sequence, wind_up, MoveKind, WindingOutcome};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{Cli, Command, Format};

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

const MAX_N_VAR: &str = "SEAWEED_MAX_N";

fn max_n() -> Result<usize, CliError> {
    match std::env::var(MAX_N_VAR) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| CliError::Usage(format!("{MAX_N_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn parse(text: &str) -> Result<SeaweedType, CliError> {
    Ok(parse_type_with_limit(text, max_n()?)?)
}

fn line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report types serialize");
    s.push('\n');
    s
}

fn unsupported(format: Format, command: &str) -> CliError {
    let name = match format {
        Format::Json => "json",
        Format::Csv => "csv",
        Format::Dot => "dot",
        Format::Svg => "svg",
        Format::Text => "text",
    };
    CliError::Usage(format!("--format {name} is not available for {command}"))
}

/// Pick the rendering for `format`; `None` entries are unsupported.
fn render(
    format: Format,
    command: &str,
    json: impl FnOnce() -> String,
    text: impl FnOnce() -> String,
    csv: Option<&dyn Fn() -> String>,
) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(json()),
        Format::Text => Ok(text()),
        Format::Csv => csv.map(|f| f()).ok_or_else(|| unsupported(format, command)),
        Format::Dot | Format::Svg => Err(unsupported(format, command)),
    }
}

fn spectrum_text(s: &SpectrumMultiset) -> String {
    s.counts().iter().map(|(v, d)| format!("{v}:{d}")).collect::<Vec<_>>().join(" ")
}

fn spectrum_csv(s: &SpectrumMultiset) -> String {
    let mut out = String::from("eigenvalue,multiplicity\n");
    for (v, d) in s.counts() {
        let _ = writeln!(out, "{v},{d}");
    }
    out
}

fn set_text(s: &BTreeSet<i64>) -> String {
    let items: Vec<String> = s.iter().map(i64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let f = cli.format;
    match &cli.command {
        Command::Parse(a) => {
            let t = parse(&a.ty)?;
            let payload = json!({"type": t, "n": t.n(), "top": t.top().parts(), "bottom": t.bottom().parts()});
            render(f, "parse", || line(&payload), || format!("{t}\n"), None).map(Output::ok)
        }
        Command::Meander { ty, directed } => meander(f, &parse(&ty.ty)?, *directed).map(Output::ok),
        Command::Index(a) => {
            let t = parse(&a.ty)?;
            let m = build_meander(&t);
            let r = components(&m);
            let index = graph_index(&m);
            let payload = json!({"type": t, "index": index, "paths": r.paths, "cycles": r.cycles, "frobenius": index == 0});
            render(f, "index", || line(&payload), || format!("{index}\n"), None).map(Output::ok)
        }
        Command::Frobenius(a) => {
            let t = parse(&a.ty)?;
            let frob = graph_index(&build_meander(&t)) == 0;
            render(f, "frobenius", || line(&json!({"frobenius": frob})), || format!("{frob}\n"), None).map(Output::ok)
        }
        Command::Spectrum(a) => {
            let t = parse(&a.ty)?;
            let s = spectrum(&t)?;
            let csv = || spectrum_csv(&s);
            render(f, "spectrum", || line(&json!({"type": t, "spectrum": s})), || format!("{}\n", spectrum_text(&s)), Some(&csv))
                .map(Output::ok)
        }
        Command::Principal { ty, ref_vertex } => {
            let t = parse(&ty.ty)?;
            let dm = orient(&build_meander(&t));
            let pe = principal_element_with_reference(&dm, ref_vertex.unwrap_or(t.n()))?;
            let payload = json!({
                "type": t,
                "diag": pe.diag.iter().map(to_pq).collect::<Vec<_>>(),
                "reference_vertex": pe.reference_vertex,
                "raw_measures": pe.raw_measures,
            });
            let text = || {
                let diag: Vec<String> = pe.diag.iter().map(to_pq).collect();
                format!("F̂ = ({})\nD = {:?} (reference v{})\n", diag.join(", "), pe.raw_measures, pe.reference_vertex)
            };
            render(f, "principal", || line(&payload), text, None).map(Output::ok)
        }
        Command::Blocks(a) => blocks_cmd(f, &parse(&a.ty)?).map(Output::ok),
        Command::Simple(a) => {
            let t = parse(&a.ty)?;
            let s = simple_eigenvalues(&orient(&build_meander(&t)))?;
            let magnitudes: BTreeSet<i64> = s.values().map(i64::abs).collect();
            let payload = json!({"type": t, "top": s.top, "bottom": s.bottom, "magnitudes": magnitudes});
            let rows = || {
                let mut out = String::from("side,pair,value\n");
                for (side, map) in [("top", &s.top), ("bottom", &s.bottom)] {
                    for (i, v) in map {
                        let _ = writeln!(out, "{side},{i},{v}");
                    }
                }
                out
            };
            let text = || {
                let fmt = |m: &std::collections::BTreeMap<usize, i64>| {
                    m.iter().map(|(i, v)| format!("({i},{}):{v}", i + 1)).collect::<Vec<_>>().join(" ")
                };
                format!("top: {}\nbottom: {}\n", fmt(&s.top), fmt(&s.bottom))
            };
            render(f, "simple", || line(&payload), text, Some(&rows)).map(Output::ok)
        }
        Command::WindDown(a) => wind_down(f, &parse(&a.ty)?).map(Output::ok),
        Command::WindUp { ty, mv } => {
            let t = parse(&ty.ty)?;
            let mv: MoveKind = mv.parse()?;
            let image = wind_up(&t, mv)?;
            let payload = json!({"type": t, "move": mv, "image": image});
            render(f, "wind-up", || line(&payload), || format!("{t} --{mv}--> {image}\n"), None).map(Output::ok)
        }
        Command::Oracle(a) => {
            let t = parse(&a.ty)?;
            let report = cross_check(&t).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = || format!("index {}, agrees with meander: {}\n", report.index, report.agrees_with_meander);
            render(f, "oracle", || line(&report), text, None).map(Output::ok)
        }
        Command::Verify { ty, mv } => {
            let t = parse(&ty.ty)?;
            match mv {
                Some(mv) => {
                    let report = check_windup_equations(&t, mv.parse()?)?;
                    let text = || {
                        let mut out = format!("{} --{}--> {}\n", report.ty, report.mv, report.image);
                        for e in &report.equations {
                            let _ = writeln!(out, "{:<16} {}  {} vs {}", e.name, if e.holds { "ok" } else { "FAIL" }, set_text(&e.lhs), set_text(&e.rhs));
                        }
                        out
                    };
                    render(f, "verify", || line(&report), text, None).map(Output::ok)
                }
                None => {
                    let report = check_theorem(&t);
                    let text = || {
                        let v = report.violations();
                        if !report.frobenius {
                            format!("{t}: not Frobenius (index {})\n", report.index)
                        } else if v.is_empty() {
                            format!("{t}: all checks pass\n")
                        } else {
                            format!("{t}: failed {}\n", v.join(", "))
                        }
                    };
                    render(f, "verify", || line(&report), text, None).map(Output::ok)
                }
            }
        }
        Command::Sweep {
            n_min,
            n_max,
            oracle_up_to,
            csv,
        } => sweep_cmd(cli, *n_min, *n_max, *oracle_up_to, *csv),
    }
}

fn meander(f: Format, t: &SeaweedType, directed: bool) -> Result<String, CliError> {
    let m = build_meander(t);
    let dm = orient(&m);
    match f {
        Format::Dot if directed => Ok(render::to_dot_directed(&dm)),
        Format::Dot => Ok(render::to_dot(&m)),
        Format::Svg if directed => Ok(render::to_svg_directed(&dm)),
        Format::Svg => Ok(render::to_svg(&m)),
        Format::Csv => Err(unsupported(f, "meander")),
        Format::Json => {
            let r = components(&m);
            Ok(line(&json!({
                "type": t,
                "n": t.n(),
                "top_arcs": m.top_arcs(),
                "bottom_arcs": m.bottom_arcs(),
                "directed": {"top": dm.top_edges(), "bottom": dm.bottom_edges()},
                "paths": r.paths,
                "cycles": r.cycles,
                "components": r.components,
            })))
        }
        Format::Text => {
            let r = components(&m);
            let mut out = format!("{t}: {} path(s), {} cycle(s)\n", r.paths, r.cycles);
            let _ = writeln!(out, "top: {:?}", dm.top_edges());
            let _ = writeln!(out, "bottom: {:?}", dm.bottom_edges());
            Ok(out)
        }
    }
}

fn blocks_cmd(f: Format, t: &SeaweedType) -> Result<String, CliError> {
    let meas = Measures::new(&orient(&build_meander(t)))?;
    let rows: Vec<Value> = blocks(t)
        .into_iter()
        .map(|(id, r)| {
            let sets = block_sets_from_measures(&meas, &r);
            json!({
                "side": id.side,
                "index": id.index,
                "range": [r.start(), r.end()],
                "contribution": block_contribution_from_measures(&meas, id.side, &r),
                "sigma_left": sets.sigma_left,
                "sigma_right": sets.sigma_right,
                "tau_left": sets.tau_left,
                "tau_right": sets.tau_right,
            })
        })
        .collect();
    let csv = || {
        let mut out = String::from("side,index,lo,hi,eigenvalue,multiplicity\n");
        for (id, r) in blocks(t) {
            let side = if id.side == Side::Top { "top" } else { "bottom" };
            for (v, d) in block_contribution_from_measures(&meas, id.side, &r).counts() {
                let _ = writeln!(out, "{side},{},{},{},{v},{d}", id.index, r.start(), r.end());
            }
        }
        out
    };
    let text = || {
        let mut out = String::new();
        for (id, r) in blocks(t) {
            let side = if id.side == Side::Top { "top" } else { "bottom" };
            let c = block_contribution_from_measures(&meas, id.side, &r);
            let _ = writeln!(out, "{side} {} [{}..{}]: {}", id.index, r.start(), r.end(), spectrum_text(&c));
        }
        out
    };
    render(f, "blocks", || line(&json!({"type": t, "blocks": rows})), text, Some(&csv))
}

fn wind_down(f: Format, t: &SeaweedType) -> Result<String, CliError> {
    let trace = wind_down_sequence(t);
    let outcome = json!({"outcome": trace.outcome, "end": trace.end(), "steps": trace.steps.len()});
    let json = || {
        let mut out: String = trace.steps.iter().map(line).collect();
        out.push_str(&line(&outcome));
        out
    };
    let csv = || {
        let mut out = String::from("step,move,type\n");
        for (k, s) in trace.steps.iter().enumerate() {
            let _ = writeln!(out, "{},{},{}", k + 1, s.mv, s.ty);
        }
        out
    };
    let text = || {
        let mut out = t.to_string();
        for s in &trace.steps {
            let _ = write!(out, " --{}--> {}", s.mv, s.ty);
        }
        let word = match trace.outcome {
            WindingOutcome::Completed => "completed",
            WindingOutcome::Stalled => "stalled",
        };
        let _ = writeln!(out, " ({word})");
        out
    };
    render(f, "wind-down", json, text, Some(&csv))
}

fn csv_table(summaries_n: std::ops::RangeInclusive<usize>) -> String {
    let mut out = String::from("n,type,frobenius,index,min,max,unbroken,symmetric,unimodal\n");
    for n in summaries_n {
        let mut rows: Vec<(SeaweedType, String)> = SeaweedType::all(n)
            .map(|t| {
                let r = check_theorem(&t);
                let row = match &r.details {
                    Some(d) => format!(
                        "{n},{t},true,0,{},{},{},{},{}",
                        d.interval.min, d.interval.max, d.unbroken, d.symmetric, d.unimodal
                    ),
                    None => format!("{n},{t},{},{},,,,,", r.frobenius, r.index),
                };
                (t, row)
            })
            .collect();
        rows.sort();
        for (_, row) in rows {
            out.push_str(&row);
            out.push('\n');
        }
    }
    out
}

fn sweep_cmd(cli: &Cli, n_min: usize, n_max: usize, oracle_up_to: usize, csv: bool) -> Result<Output, CliError> {
    let cap = max_n()?;
    if n_max > cap {
        return Err(CliError::Usage(format!("--n-max {n_max} exceeds the cap of {cap} (set {MAX_N_VAR})")));
    }
    if n_min > n_max {
        return Err(CliError::Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    if oracle_up_to > n_max {
        return Err(CliError::Usage(format!("--oracle-up-to {oracle_up_to} exceeds --n-max {n_max}")));
    }
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let csv = csv || cli.format == Format::Csv;
    if !csv && !matches!(cli.format, Format::Json | Format::Text) {
        return Err(unsupported(cli.format, "sweep"));
    }
    let summaries = sweep(n_min, n_max, oracle_up_to);
    for s in &summaries {
        eprintln!("n={} pairs={} frobenius={} elapsed={:.3?}", s.n, s.pairs_total, s.frobenius_count, s.elapsed);
    }
    let text = if csv {
        csv_table(n_min.max(1)..=n_max)
    } else if cli.format == Format::Text {
        summaries.iter().map(summary_text).collect()
    } else {
        summaries.iter().map(line).collect()
    };
    let counterexamples: Vec<_> = summaries.iter().flat_map(|s| &s.conjecture_counterexamples).collect();
    for c in &counterexamples {
        eprintln!("{}", json!({"conjecture_counterexample": {"type": c.ty, "check": c.check}}));
    }
    let status = if summaries.iter().any(|s| !s.passed()) {
        4
    } else if !counterexamples.is_empty() {
        3
    } else {
        0
    };
    Ok(Output { text, status })
}

fn summary_text(s: &SweepSummary) -> String {
    format!(
        "n={} pairs={} frobenius={} violations={} counterexamples={}\n",
        s.n,
        s.pairs_total,
        s.frobenius_count,
        s.violations.len(),
        s.conjecture_counterexamples.len()
    )
}
