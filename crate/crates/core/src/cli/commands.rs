use std::fmt::Write as _;
use std::path::PathBuf;
use std::thread;

use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};

use super::args::{Command, ExportArgs, Format, ResidualArgs, SpectrumArgs, VerifyArgs};
use super::{EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use crate::error::Error;
use crate::numlab::{self, check_no_poles, eigen_solve, GridSpec};
use crate::painleve4::{hierarchy_solution, p4_cleared_residual, Family};
use crate::susy::{
    kstep_potential, spectrum, wavefunction, zero_mode_counts, ExtensionSpec, LadderKind,
};
use crate::verify::{scenario, EquivalenceReport, Scenario};

pub const SCHEMA: &str = "p4susy/1";
const GRID_ENV: &str = "P4SUSY_GRID_N";
const BATCH_NS: [i64; 3] = [2, 4, 6];

/// Result of a command before it is written out.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub body: String,
    pub destination: Option<PathBuf>,
    pub diagnostic: Option<String>,
}

/// Exit status for an engine error: bad input is a usage error, anything else a
/// failed check.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::VerificationFailure(_)
        | Error::ConstructionMismatch(_)
        | Error::ConvergenceFailure
        | Error::StructureError(_) => EXIT_FAILED,
        _ => EXIT_USAGE,
    }
}

type CmdResult = std::result::Result<Outcome, String>;

fn engine_error(e: Error, destination: Option<PathBuf>) -> Outcome {
    Outcome {
        code: exit_code(&e),
        body: String::new(),
        destination,
        diagnostic: Some(format!("error: {e}")),
    }
}

fn json_body(command: &str, config: Value, mut payload: Value) -> String {
    let mut doc = json!({ "schema": SCHEMA, "command": command, "config": config });
    if let (Some(d), Some(p)) = (doc.as_object_mut(), payload.as_object_mut()) {
        d.append(p);
    }
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

/// The parsed arguments with the output format resolved.
fn config_of<T: Serialize>(args: &T, format: Format) -> Value {
    let mut v = serde_json::to_value(args).expect("serializable");
    v["out"]["format"] = json!(format);
    v
}

pub fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::Verify(a) => cmd_verify(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Residual(a) => cmd_residual(a),
        Command::Export(a) => cmd_export(a),
    }
}

fn report_text(r: &EquivalenceReport) -> String {
    let opt = |v: &Option<num_rational::BigRational>| {
        v.as_ref()
            .map_or_else(|| "none".to_string(), |r| r.to_string())
    };
    let mut s = format!(
        "{} n={} ladder={} extension={:?}: {} (shift={}, scale={}, sigma^2={})\n",
        r.scenario,
        r.n,
        r.ladder,
        r.extension,
        if r.passed { "passed" } else { "FAILED" },
        opt(&r.shift),
        r.scale,
        opt(&r.ladder_scalar_sq),
    );
    for m in &r.mode_matches {
        let _ = writeln!(
            s,
            "  {} <-> {}: E={} vs {} {}",
            m.painleve,
            m.extension,
            m.painleve_energy,
            m.extension_energy,
            if m.held() { "ok" } else { "FAILED" }
        );
    }
    for c in r.checks.iter().filter(|c| !c.passed) {
        let _ = writeln!(s, "  failed: {}", c.name);
    }
    s
}

fn cmd_verify(a: &VerifyArgs) -> CmdResult {
    let format = a.out.format.unwrap_or(Format::Json);
    if format == Format::Csv {
        return Err("verify supports --format json or text".into());
    }
    let dest = a.out.output.clone();
    let jobs: Vec<(Scenario, i64)> = if a.all {
        let mut v = Vec::new();
        for case in Scenario::ALL {
            if case.takes_n() {
                v.extend(BATCH_NS.iter().map(|&n| (case, n)));
            } else {
                v.push((case, 2));
            }
        }
        v
    } else {
        let name = a.scenario.as_deref().expect("group requires one");
        let case: Scenario = name.parse().map_err(|e: Error| e.to_string())?;
        if case.takes_n() && (a.n < 2 || a.n % 2 != 0) {
            return Err(format!(
                "scenario {} needs an even n >= 2, got {}",
                case.short(),
                a.n
            ));
        }
        vec![(case, a.n)]
    };
    let results: Vec<_> = thread::scope(|s| {
        let handles: Vec<_> = jobs
            .iter()
            .map(|&(case, n)| s.spawn(move || scenario(case, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread"))
            .collect()
    });
    let mut reports = Vec::new();
    for r in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => return Ok(engine_error(e, dest)),
        }
    }
    let passed = reports.iter().all(|r| r.passed);
    let body = match format {
        Format::Text => reports.iter().map(report_text).collect(),
        _ => {
            let payload = if a.all {
                json!({ "passed": passed, "reports": reports })
            } else {
                json!({ "passed": passed, "report": reports[0] })
            };
            json_body("verify", config_of(a, format), payload)
        }
    };
    Ok(Outcome {
        code: if passed { EXIT_OK } else { EXIT_FAILED },
        body,
        destination: dest,
        diagnostic: None,
    })
}

fn resolve_grid_n(flag: Option<usize>) -> std::result::Result<usize, String> {
    if let Some(n) = flag {
        return Ok(n);
    }
    match std::env::var(GRID_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| format!("{GRID_ENV}={s} is not a positive integer")),
        Err(_) => Ok(numlab::DEFAULT_POINTS),
    }
}

#[derive(Serialize)]
struct Row {
    nu: i64,
    energy: String,
    role: &'static str,
    annihilated_by_lower: bool,
    annihilated_by_raise: bool,
    normalizable: bool,
    numeric: Option<f64>,
    delta: Option<f64>,
    within_tolerance: Option<bool>,
}

fn cmd_spectrum(a: &SpectrumArgs) -> CmdResult {
    let format = a.out.format.unwrap_or(Format::Json);
    let dest = a.out.output.clone();
    let spec = ExtensionSpec::new(a.ms.clone()).map_err(|e| e.to_string())?;
    let kind: LadderKind = match &a.ladder {
        Some(s) => s.parse().map_err(|e: Error| e.to_string())?,
        None if spec.k() == 2 => LadderKind::D,
        None => LadderKind::B,
    };
    let grid_n = resolve_grid_n(a.grid.n)?;
    let entries = match spectrum(&spec, kind, a.depth) {
        Ok(e) => e,
        Err(e) => return Ok(engine_error(e, dest)),
    };
    let normalizable: Vec<bool> = entries
        .iter()
        .map(|e| e.wavefunction.is_normalizable().unwrap_or(false))
        .collect();
    // position of each level in the full ordered spectrum
    let extra = spec.extra_levels();
    let position = |nu: i64| -> usize {
        if nu >= 0 {
            extra.len() + nu as usize
        } else {
            extra.iter().position(|&m| m == nu).expect("listed level")
        }
    };
    let mut numeric: Vec<Option<f64>> = vec![None; entries.len()];
    if a.numeric {
        let count = entries
            .iter()
            .zip(&normalizable)
            .filter(|(_, n)| **n)
            .map(|(e, _)| position(e.nu) + 1)
            .max()
            .unwrap_or(0);
        let grid = GridSpec::new(a.grid.l, grid_n, count).map_err(|e| e.to_string())?;
        let v = match kstep_potential(&spec) {
            Ok(v) => v,
            Err(e) => return Ok(engine_error(e, dest)),
        };
        let ev = match eigen_solve(&v, &grid) {
            Ok(ev) => ev,
            Err(e) => return Ok(engine_error(e, dest)),
        };
        for (i, e) in entries.iter().enumerate() {
            if normalizable[i] {
                numeric[i] = ev.get(position(e.nu)).copied();
            }
        }
    }
    let rows: Vec<Row> = entries
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let exact = e.energy.to_f64().unwrap_or(f64::NAN);
            Row {
                nu: e.nu,
                energy: e.energy.to_string(),
                role: e.role.label(),
                annihilated_by_lower: e.annihilated_by_lower,
                annihilated_by_raise: e.annihilated_by_raise,
                normalizable: normalizable[i],
                numeric: numeric[i],
                delta: numeric[i].map(|x| (x - exact).abs()),
                within_tolerance: numeric[i].map(|x| (x - exact).abs() < a.tol),
            }
        })
        .collect();
    let within = rows.iter().all(|r| r.within_tolerance != Some(false));
    let (lower, raise) = zero_mode_counts(&entries);
    let body = match format {
        Format::Json => {
            let mut config = config_of(a, format);
            config["grid"]["n"] = json!(grid_n);
            config["ladder"] = json!(kind.letter().to_string());
            json_body(
                "spectrum",
                config,
                json!({
                    "extension": spec.ms(),
                    "ladder": kind.letter().to_string(),
                    "zero_modes": { "lower": lower, "raise": raise },
                    "within_tolerance": within,
                    "levels": rows,
                }),
            )
        }
        Format::Csv => {
            let mut s = String::from("nu,energy,role,numeric,delta\n");
            for r in &rows {
                let f = |v: Option<f64>| v.map_or(String::new(), |x| format!("{x:.16e}"));
                let _ = writeln!(
                    s,
                    "{},{},{},{},{}",
                    r.nu,
                    r.energy,
                    r.role,
                    f(r.numeric),
                    f(r.delta)
                );
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "extension {spec} ladder {kind}: zero modes lower={lower} raise={raise}\n{:>5} {:>8} {:>14} {:>10}  role\n",
                "nu", "E", "numeric", "|delta|"
            );
            for r in &rows {
                let num = r.numeric.map_or("-".to_string(), |x| format!("{x:.6}"));
                let d = r.delta.map_or("-".to_string(), |x| format!("{x:.1e}"));
                let _ = writeln!(
                    s,
                    "{:>5} {:>8} {:>14} {:>10}  {}",
                    r.nu, r.energy, num, d, r.role
                );
            }
            s
        }
    };
    Ok(Outcome {
        code: if within || !a.strict {
            EXIT_OK
        } else {
            EXIT_FAILED
        },
        body,
        destination: dest,
        diagnostic: None,
    })
}

fn cmd_residual(a: &ResidualArgs) -> CmdResult {
    let format = a.out.format.unwrap_or(Format::Json);
    if format == Format::Csv {
        return Err("residual supports --format json or text".into());
    }
    let dest = a.out.output.clone();
    let family: Family = a.family.parse().map_err(|e: Error| e.to_string())?;
    let sol = match hierarchy_solution(family, a.m, a.n) {
        Ok(s) => s,
        Err(e) => return Ok(engine_error(e, dest)),
    };
    let zero = p4_cleared_residual(&sol.w, &sol.params.alpha, &sol.params.beta).is_zero();
    let body = match format {
        Format::Text => format!(
            "{family} m={} n={}: alpha={} beta={} residual {}\nw = {}\n",
            a.m,
            a.n,
            sol.params.alpha,
            sol.params.beta,
            if zero { "vanishes" } else { "is NONZERO" },
            sol.w
        ),
        _ => json_body(
            "residual",
            config_of(a, format),
            json!({
                "family": family.name(),
                "alpha": sol.params.alpha.to_string(),
                "beta": sol.params.beta.to_string(),
                "w": sol.w.to_string(),
                "residual_zero": zero,
                "passed": zero,
            }),
        ),
    };
    Ok(Outcome {
        code: if zero { EXIT_OK } else { EXIT_FAILED },
        body,
        destination: dest,
        diagnostic: None,
    })
}

fn cmd_export(a: &ExportArgs) -> CmdResult {
    let format = a.out.format.unwrap_or(Format::Csv);
    let dest = a.out.output.clone();
    if !(a.xmax.is_finite() && a.xmax > 0.0) || a.points == 0 {
        return Err("need --xmax > 0 and --points >= 1".into());
    }
    let spec = ExtensionSpec::new(a.ms.clone()).map_err(|e| e.to_string())?;
    let xs = numlab::linspace(a.xmax, a.points);
    let sampled = if a.potential {
        kstep_potential(&spec).and_then(|v| {
            if check_no_poles(&v, a.xmax)? {
                numlab::sample(&v, &xs)
            } else {
                Err(Error::PoleInDomain)
            }
        })
    } else {
        let nu = a.nu.expect("clap requires --nu");
        kstep_potential(&spec)
            .and_then(|_| wavefunction(&spec, nu))
            .and_then(|psi| {
                if check_no_poles(psi.prefactor(), a.xmax)? {
                    numlab::sample(&psi, &xs)
                } else {
                    Err(Error::PoleInDomain)
                }
            })
    };
    let rows = match sampled {
        Ok(r) => r,
        Err(e) => return Ok(engine_error(e, dest)),
    };
    let body = match format {
        Format::Json => json_body("export", config_of(a, format), json!({ "rows": rows })),
        _ => numlab::to_csv(&rows),
    };
    Ok(Outcome {
        code: EXIT_OK,
        body,
        destination: dest,
        diagnostic: None,
    })
}
