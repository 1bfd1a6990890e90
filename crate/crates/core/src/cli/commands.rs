use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use serde_json::json;

use super::suite::{verify_code, verify_construction_design, verify_dump};
use super::{
    parse_field, read_file, write_file, Cli, Command, Construction, Format, OptionalConstruction, Toggles,
    VerificationSuite, EXIT_FAILED_CHECK, EXIT_INCONSISTENT, EXIT_OK,
};
use crate::arraycode::bundle::{read_bundle, write_bundle};
use crate::arraycode::{ArrayCode, Codeword, CodeReport};
use crate::designs::dump::{parse_design, write_spread, write_std};
use crate::designs::{build_spread, build_std};
use crate::linalg::text::parse_matrix;
use crate::locality::{repair, AvailabilityOptions, LocalityProfile, Target};
use crate::{Error, Limits, Result};

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes())?;
    if !text.ends_with('\n') {
        out.write_all(b"\n")?;
    }
    Ok(())
}

pub(super) fn dispatch(cli: &Cli, limits: &Limits, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Construct {
            spec,
            output,
            design_out,
        } => {
            let field = parse_field(&spec.field, limits)?;
            let kind = Construction::from_args(spec.construction, &spec.params)?;
            let code = kind.build(field.clone(), limits)?;
            let bundle = write_bundle(&code);
            match output {
                Some(path) => {
                    write_file(path, &bundle)?;
                    emit(out, &summary_line(&code))?;
                }
                None => {
                    emit(out, &bundle)?;
                    writeln!(err, "{}", summary_line(&code))?;
                }
            }
            if let Some(path) = design_out {
                let text = match kind {
                    Construction::Spread { m, b, method } => write_spread(&build_spread(&field, m, b, method, limits)?, field.order()),
                    Construction::StdPar { t, b, m, .. } | Construction::StdFull { t, b, m } => {
                        write_std(&build_std(&field, t, b, m - b, limits)?)
                    }
                    _ => {
                        return Err(Error::BadParams(
                            "--design-out applies to spread, std-par and std-full".into(),
                        ))
                    }
                };
                write_file(path, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Analyze {
            bundle,
            toggles,
            report,
            locality_report,
        } => {
            let code = read_bundle(&read_file(bundle)?)?;
            analyze(&code, toggles.resolved(), cli.format, report, locality_report, limits, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify { spec, design, bundle } => {
            let suite = verify(spec, design, bundle, limits)?;
            emit(
                out,
                &match cli.format {
                    Format::Json => suite.to_json(),
                    Format::Csv => suite.to_csv(),
                    Format::Text => suite.to_text(),
                },
            )?;
            Ok(if suite.passed() { EXIT_OK } else { EXIT_FAILED_CHECK })
        }
        Command::Repair {
            bundle,
            codeword,
            column,
            check,
        } => {
            let code = read_bundle(&read_file(bundle)?)?;
            let (q, m) = parse_matrix(&read_file(codeword)?)?;
            if q != code.q() {
                return Err(Error::Inconsistent(format!(
                    "codeword is over GF({q}) but the code is over GF({})",
                    code.q()
                )));
            }
            let w = Codeword(m);
            let r = repair(&code, &w, *column, limits)?;
            let original = (*column < w.0.cols()).then(|| w.column(*column));
            let matches = original.as_ref().map(|o| o == &r.column);
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&json!({
                    "column": column,
                    "restored": r.column,
                    "recovery_set": r.recovery.columns,
                    "contacted": r.contacted,
                    "matches_input": if *check { matches } else { None },
                }))
                .expect("serializes"),
                Format::Csv => {
                    let mut s = String::from("key,value\n");
                    writeln!(s, "column,{column}").unwrap();
                    writeln!(s, "restored,{}", join(&r.column, " ")).unwrap();
                    writeln!(s, "recovery_set,{}", join(&r.recovery.columns, " ")).unwrap();
                    writeln!(s, "contacted,{}", r.contacted).unwrap();
                    if *check {
                        writeln!(s, "matches_input,{}", matches.unwrap_or(false)).unwrap();
                    }
                    s
                }
                Format::Text => {
                    let mut s = format!(
                        "restored column {column}: [{}]\nrecovery set: {{{}}}\ncontacted nodes: {}\n",
                        join(&r.column, ", "),
                        join(&r.recovery.columns, ", "),
                        r.contacted
                    );
                    if *check {
                        writeln!(s, "matches input: {}", matches.unwrap_or(false)).unwrap();
                    }
                    s
                }
            };
            emit(out, &text)?;
            if *check && matches != Some(true) {
                writeln!(err, "restored column differs from the input column {column}")?;
                return Ok(EXIT_INCONSISTENT);
            }
            Ok(EXIT_OK)
        }
    }
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn summary_line(code: &ArrayCode) -> String {
    format!(
        "{} array code over {} ({})",
        code.summary(),
        code.field().descriptor(),
        code.provenance()
    )
}

fn analyze(
    code: &ArrayCode,
    t: Toggles,
    format: Format,
    report_path: &Option<PathBuf>,
    locality_path: &Option<PathBuf>,
    limits: &Limits,
    out: &mut dyn Write,
) -> Result<()> {
    let mut report = CodeReport::build(code, limits)?;
    if !t.weights {
        report.weight_distribution = None;
    }
    if !t.distance {
        report.distance = None;
        report.distance_method = None;
        report.mds = None;
    }
    let dual = if t.dual && code.b() * code.n() > code.dim() {
        Some(CodeReport::build(&code.dual()?, limits)?)
    } else {
        None
    };
    let profile = if t.locality {
        let opts = if t.availability {
            AvailabilityOptions::both()
        } else {
            AvailabilityOptions::default()
        };
        Some(LocalityProfile::compute(code, opts, limits)?)
    } else {
        None
    };

    let code_text = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report).expect("serializes");
            if !t.perfectness {
                for k in ["perfect", "ball_size", "space_size", "ratio_num", "ratio_den"] {
                    v.as_object_mut().expect("object").remove(k);
                }
            }
            if let Some(d) = &dual {
                v["dual"] = serde_json::to_value(d).expect("serializes");
            }
            serde_json::to_string_pretty(&v).expect("serializes")
        }
        Format::Csv => {
            let mut s = report.to_csv();
            if let Some(d) = &dual {
                s.push_str("dual\n");
                s.push_str(&d.to_csv());
            }
            s
        }
        Format::Text => {
            let mut s = report.to_text();
            if let Some(d) = &dual {
                s.push_str("dual code\n");
                s.push_str(&d.to_text());
            }
            s
        }
    };
    match report_path {
        Some(p) => write_file(p, &code_text)?,
        None => emit(out, &code_text)?,
    }
    if let Some(p) = &profile {
        let text = match format {
            Format::Json => p.to_json(),
            Format::Csv => locality_csv(p),
            Format::Text => locality_text(p),
        };
        match locality_path {
            Some(path) => write_file(path, &text)?,
            None => emit(out, &text)?,
        }
    }
    Ok(())
}

fn target_key(t: &Target) -> String {
    match t {
        Target::Node(j) => format!("column {j}"),
        Target::Symbol { row, column } => format!("symbol {row}:{column}"),
    }
}

fn opt(x: Option<usize>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

fn locality_csv(p: &LocalityProfile) -> String {
    let mut s = String::from("kind,target,r,set\n");
    writeln!(s, "summary,r_s,{},", opt(p.r_s)).unwrap();
    writeln!(s, "summary,r_n,{},", opt(p.r_n)).unwrap();
    writeln!(s, "summary,t_s,{},{}", opt(p.t_s), p.t_s_flag.unwrap_or("")).unwrap();
    writeln!(s, "summary,t_n,{},{}", opt(p.t_n), p.t_n_flag.unwrap_or("")).unwrap();
    for x in p.columns.iter().chain(&p.symbols) {
        writeln!(s, "recovery,{},{},{}", target_key(&x.target), x.r, join(&x.set, " ")).unwrap();
    }
    for a in p.symbol_availability.iter().chain(&p.node_availability) {
        let fam: Vec<String> = a.family.iter().map(|f| join(f, " ")).collect();
        let flag = if a.exact { "exact" } else { "bound" };
        writeln!(s, "availability,{},{},{} [{flag}]", target_key(&a.target), a.t, fam.join(" | ")).unwrap();
    }
    s
}

fn locality_text(p: &LocalityProfile) -> String {
    let mut s = format!(
        "r_s {}\nr_n {}\nt_s {} {}\nt_n {} {}\n",
        opt(p.r_s),
        opt(p.r_n),
        opt(p.t_s),
        p.t_s_flag.unwrap_or(""),
        opt(p.t_n),
        p.t_n_flag.unwrap_or("")
    );
    for x in p.columns.iter().chain(&p.symbols) {
        writeln!(s, "{:<16} r={} S={{{}}}", target_key(&x.target), x.r, join(&x.set, ", ")).unwrap();
    }
    for note in &p.skipped {
        writeln!(s, "skipped {note}").unwrap();
    }
    s
}

fn verify(
    spec: &OptionalConstruction,
    design: &Option<PathBuf>,
    bundle: &Option<PathBuf>,
    limits: &Limits,
) -> Result<VerificationSuite> {
    if let Some(path) = design {
        return verify_dump(&parse_design(&read_file(path)?)?, limits);
    }
    if let Some(path) = bundle {
        let code = read_bundle(&read_file(path)?)?;
        let kind = Construction::from_provenance(code.provenance());
        let mut suite = verify_code(&code, kind.as_ref(), limits)?;
        if let Some(k) = &kind {
            if let Some(report) = verify_construction_design(k, code.field(), limits)? {
                suite.add_design_report(&report);
            }
        }
        return Ok(suite);
    }
    let name = spec
        .construction
        .ok_or_else(|| Error::BadParams("verify needs --construction, --bundle or --design".into()))?;
    let field = parse_field(&spec.field, limits)?;
    let kind = Construction::from_args(name, &spec.params)?;
    let code = kind.build(field.clone(), limits)?;
    let mut suite = verify_code(&code, Some(&kind), limits)?;
    if let Some(report) = verify_construction_design(&kind, &field, limits)? {
        suite.add_design_report(&report);
    }
    Ok(suite)
}
