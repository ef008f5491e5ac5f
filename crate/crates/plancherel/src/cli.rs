//! Command-line front end: `slice`, `density`, and `verify` subcommands.
//!
//! Exit codes: 0 on success (all verifications passing), 1 on a
//! verification failure, 2 on a usage error. Identical invocations produce
//! byte-identical output: reports are emitted in a fixed order and floats
//! are printed in their shortest round-trip form.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use crate::config::{Config, OutputFormat};
use crate::density::{QuadratureSpec, TrigTables};
use crate::lie::slice::{read_slice_cache, slice_v_x, write_slice_cache};
use crate::verify::{
    default_suite, reports_to_csv, reports_to_json, run_suite, CaseSpec, SpectralDensity,
    SuiteOptions, VerificationReport,
};

pub const USAGE: &str = "\
usage: plancherel <command> [options]

commands:
  slice    --k K --a A [--json] [--no-cache] [--cache-dir DIR]
           print the graded slice for the hook pair (k, a)
  density  --k K --a A --q Q --resolution N --out FILE [--jobs J]
           write the spectral density over the theta-grid to CSV
  verify   [--k K --a A --q Q] [--ids 1,2,3,4,5] [--scan --kmax K]
           [--q Q1,Q2] [--tol T] [--resolution N] [--jobs J]
           [--json FILE] [--csv FILE] [--allow-two-power]
           run verification identities (default: the full default suite)

common options:
  --config FILE   key-value configuration file
  --help          show this message

exit codes: 0 all pass, 1 verification failure, 2 usage error";

struct Args {
    positional: Vec<String>,
    flags: BTreeMap<String, Vec<String>>,
}

fn parse_args(argv: &[String]) -> Result<Args, String> {
    let mut positional = Vec::new();
    let mut flags: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut i = 0;
    while i < argv.len() {
        let arg = &argv[i];
        if let Some(name) = arg.strip_prefix("--") {
            let takes_value = !matches!(name, "no-cache" | "scan" | "help" | "allow-two-power");
            // `--json` is boolean for `slice` but takes a path for `verify`;
            // disambiguated by the caller via flag_value/flag_present
            if name == "json" {
                // value if next token exists and is not a flag
                if i + 1 < argv.len() && !argv[i + 1].starts_with("--") {
                    flags.entry(name.to_string()).or_default().push(argv[i + 1].clone());
                    i += 2;
                } else {
                    flags.entry(name.to_string()).or_default().push(String::new());
                    i += 1;
                }
                continue;
            }
            if takes_value {
                let value = argv
                    .get(i + 1)
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                flags.entry(name.to_string()).or_default().push(value.clone());
                i += 2;
            } else {
                flags.entry(name.to_string()).or_default().push(String::new());
                i += 1;
            }
        } else {
            positional.push(arg.clone());
            i += 1;
        }
    }
    Ok(Args { positional, flags })
}

impl Args {
    fn flag_value(&self, name: &str) -> Option<&str> {
        self.flags.get(name).and_then(|v| v.first()).map(|s| s.as_str())
    }

    fn flag_present(&self, name: &str) -> bool {
        self.flags.contains_key(name)
    }

    fn parse_flag<T: std::str::FromStr>(&self, name: &str) -> Result<Option<T>, String> {
        match self.flag_value(name) {
            None => Ok(None),
            Some(s) => s
                .parse::<T>()
                .map(Some)
                .map_err(|_| format!("invalid value `{s}` for --{name}")),
        }
    }

    fn require<T: std::str::FromStr>(&self, name: &str) -> Result<T, String> {
        self.parse_flag::<T>(name)?
            .ok_or_else(|| format!("missing required flag --{name}"))
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    match dispatch(&argv) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            2
        }
    }
}

fn dispatch(argv: &[String]) -> Result<i32, String> {
    let args = parse_args(argv)?;
    if args.flag_present("help") || args.positional.is_empty() {
        println!("{USAGE}");
        return Ok(if args.flag_present("help") { 0 } else { 2 });
    }
    let config_path = args.flag_value("config").map(PathBuf::from);
    let config = Config::load(config_path.as_deref()).map_err(|e| e.to_string())?;
    match args.positional[0].as_str() {
        "slice" => cmd_slice(&args, &config),
        "density" => cmd_density(&args, &config),
        "verify" => cmd_verify(&args, &config),
        other => Err(format!("unknown command `{other}`")),
    }
}

fn cmd_slice(args: &Args, config: &Config) -> Result<i32, String> {
    let k: usize = args.require("k")?;
    let a: usize = args.require("a")?;
    let no_cache = args.flag_present("no-cache");
    let cache_dir: PathBuf = args
        .flag_value("cache-dir")
        .map(PathBuf::from)
        .unwrap_or_else(|| config.cache_dir.clone());
    let cached = if no_cache { None } else { read_slice_cache(&cache_dir, k, a) };
    let ch = match cached {
        Some(c) => c,
        None => {
            let c = slice_v_x(k, a).map_err(|e| e.to_string())?;
            if !no_cache {
                write_slice_cache(&cache_dir, k, a, &c)
                    .map_err(|e| format!("cannot write cache: {e}"))?;
            }
            c
        }
    };
    if args.flag_present("json") {
        #[derive(serde::Serialize)]
        struct Entry<'a> {
            weight: &'a [i64],
            grade: i64,
            mult: usize,
        }
        #[derive(serde::Serialize)]
        struct Body<'a> {
            k: usize,
            a: usize,
            entries: Vec<Entry<'a>>,
        }
        let body = Body {
            k,
            a,
            entries: ch
                .entries()
                .iter()
                .map(|e| Entry { weight: &e.weight, grade: e.grade, mult: e.mult })
                .collect(),
        };
        println!("{}", serde_json::to_string_pretty(&body).expect("serialize"));
    } else {
        println!("{}", ch.describe());
    }
    Ok(0)
}

fn cmd_density(args: &Args, config: &Config) -> Result<i32, String> {
    let k: usize = args.require("k")?;
    let a: usize = args.require("a")?;
    let q: u64 = args.require("q")?;
    let resolution: usize = args
        .parse_flag("resolution")?
        .unwrap_or_else(|| config.resolution_for(a));
    let out: String = args.require("out")?;
    let jobs: usize = args.parse_flag("jobs")?.unwrap_or(config.jobs);
    let _ = jobs; // grid writing is sequential; order defines the file
    QuadratureSpec::new(resolution, 1).map_err(|e| e.to_string())?;
    if a > 3 {
        return Err("density grids support a <= 3".into());
    }
    let density = SpectralDensity::new(k, a, q).map_err(|e| e.to_string())?;
    let tables = TrigTables::new(resolution);
    let mut body = String::new();
    let header: Vec<String> = (1..=a).map(|i| format!("theta_{i}")).collect();
    body.push_str(&header.join(","));
    body.push_str(",density\n");
    let total = resolution.pow(a as u32);
    let mut idx = vec![0usize; a];
    for flat in 0..total {
        let mut rem = flat;
        for d in (0..a).rev() {
            idx[d] = rem % resolution;
            rem /= resolution;
        }
        for (d, &i) in idx.iter().enumerate() {
            if d > 0 {
                body.push(',');
            }
            body.push_str(&format!("{}", i as f64 / resolution as f64));
        }
        let v = density.eval_idx(&idx, &tables);
        body.push_str(&format!(",{v}\n"));
    }
    std::fs::write(Path::new(&out), body).map_err(|e| format!("cannot write {out}: {e}"))?;
    Ok(0)
}

fn parse_ids(s: &str) -> Result<Vec<u8>, String> {
    let mut ids = Vec::new();
    for part in s.split(',') {
        let id: u8 = part
            .trim()
            .parse()
            .map_err(|_| format!("invalid id `{part}`"))?;
        if !(1..=5).contains(&id) {
            return Err(format!("id {id} out of range 1..5"));
        }
        ids.push(id);
    }
    ids.sort_unstable();
    ids.dedup();
    Ok(ids)
}

fn parse_q_list(s: &str, fallback: &[u64]) -> Result<Vec<u64>, String> {
    if s.is_empty() {
        return Ok(fallback.to_vec());
    }
    let mut qs = Vec::new();
    for part in s.split(',') {
        qs.push(part.trim().parse::<u64>().map_err(|_| format!("invalid q `{part}`"))?);
    }
    Ok(qs)
}

fn cmd_verify(args: &Args, config: &Config) -> Result<i32, String> {
    let ids = match args.flag_value("ids") {
        Some(s) => parse_ids(s)?,
        None => vec![1, 2, 3, 4, 5],
    };
    let qs = match args.flag_value("q") {
        Some(s) => parse_q_list(s, &config.q_list)?,
        None => config.q_list.clone(),
    };

    let mut cases: Vec<CaseSpec> = Vec::new();
    if args.flag_present("scan") {
        let kmax: usize = args.parse_flag("kmax")?.unwrap_or(6);
        for &id in &ids {
            match id {
                1 => {
                    for a in 1..=3.min(kmax.saturating_sub(1)) {
                        for &q in &qs {
                            cases.push(CaseSpec::Id1 { a, q });
                        }
                    }
                }
                2 => {
                    for k in 2..=kmax {
                        for a in 1..k {
                            cases.push(CaseSpec::Id2 { k, a });
                        }
                    }
                }
                3 => {
                    for k in 2..=kmax {
                        for a in 1..k.min(4) {
                            for &q in &qs {
                                cases.push(CaseSpec::Id3 { k, a, q });
                            }
                        }
                    }
                }
                4 => {
                    for k in 2..=kmax {
                        for a in 1..k {
                            cases.push(CaseSpec::Id4 { k, a });
                        }
                    }
                }
                5 => {
                    for k in 2..=kmax {
                        for a in 1..k {
                            for &q in &qs {
                                cases.push(CaseSpec::Id5 { k, a, q });
                            }
                        }
                    }
                }
                _ => unreachable!(),
            }
        }
    } else if args.flag_value("k").is_some() || args.flag_value("a").is_some() {
        let k: usize = args.require("k")?;
        let a: usize = args.require("a")?;
        for &id in &ids {
            match id {
                1 => {
                    for &q in &qs {
                        cases.push(CaseSpec::Id1 { a, q });
                    }
                }
                2 => cases.push(CaseSpec::Id2 { k, a }),
                3 => {
                    for &q in &qs {
                        cases.push(CaseSpec::Id3 { k, a, q });
                    }
                }
                4 => cases.push(CaseSpec::Id4 { k, a }),
                5 => {
                    for &q in &qs {
                        cases.push(CaseSpec::Id5 { k, a, q });
                    }
                }
                _ => unreachable!(),
            }
        }
    } else {
        cases = default_suite();
    }

    let opts = SuiteOptions {
        jobs: args.parse_flag("jobs")?.unwrap_or(config.jobs),
        tolerance_override: args.parse_flag("tol")?,
        resolution_override: args.parse_flag("resolution")?,
        allow_two_power: args.flag_present("allow-two-power"),
    };
    let reports = run_suite(&cases, &opts);

    for r in &reports {
        println!("{}", report_line(r));
    }
    let all_pass = reports.iter().all(|r| r.passed());
    println!(
        "{}: {} of {} checks passed",
        if all_pass { "ok" } else { "FAILED" },
        reports.iter().filter(|r| r.passed()).count(),
        reports.len()
    );

    if let Some(path) = args.flag_value("json") {
        if !path.is_empty() {
            std::fs::write(path, reports_to_json(&reports) + "\n")
                .map_err(|e| format!("cannot write {path}: {e}"))?;
        }
    }
    if let Some(path) = args.flag_value("csv") {
        std::fs::write(path, reports_to_csv(&reports))
            .map_err(|e| format!("cannot write {path}: {e}"))?;
    }
    match config.format {
        OutputFormat::Json if args.flag_value("json").is_none() => {
            println!("{}", reports_to_json(&reports));
        }
        OutputFormat::Csv if args.flag_value("csv").is_none() => {
            println!("{}", reports_to_csv(&reports));
        }
        _ => {}
    }
    Ok(if all_pass { 0 } else { 1 })
}

fn report_line(r: &VerificationReport) -> String {
    let case = match (r.case.k, &r.case.q) {
        (Some(k), crate::verify::QField::Numeric(q)) => {
            format!("k={}, a={}, q={}", k, r.case.a, q)
        }
        (Some(k), crate::verify::QField::Symbolic) => format!("k={}, a={}", k, r.case.a),
        (None, crate::verify::QField::Numeric(q)) => format!("a={}, q={}", r.case.a, q),
        (None, crate::verify::QField::Symbolic) => format!("a={}", r.case.a),
    };
    let status = match r.status {
        crate::verify::Status::Pass => "pass",
        crate::verify::Status::Fail => "FAIL",
        crate::verify::Status::Error => "ERROR",
    };
    let detail = match (&r.rel_err, r.resolution) {
        (crate::verify::ErrField::Num(e), Some(n)) => format!(" [rel_err {e:.3e}, N={n}]"),
        (crate::verify::ErrField::Num(e), None) => format!(" [rel_err {e:.3e}]"),
        (crate::verify::ErrField::Exact, _) => " [exact]".to_string(),
    };
    let note = r.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default();
    format!("{} ({}): {}{}{}", r.id, case, status, detail, note)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        s.split_whitespace().map(|x| x.to_string()).collect()
    }

    #[test]
    fn usage_error_on_unknown_command() {
        assert_eq!(run(argv("frobnicate")), 2);
        assert_eq!(run(argv("slice --k 2 --a 2")), 2); // out of range -> error message
    }

    #[test]
    fn ids_parsing() {
        assert_eq!(parse_ids("1,2,3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_ids("5,5,1").unwrap(), vec![1, 5]);
        assert!(parse_ids("0").is_err());
        assert!(parse_ids("six").is_err());
    }

    #[test]
    fn verify_exact_ids_for_one_case() {
        assert_eq!(run(argv("verify --k 3 --a 1 --q 3 --ids 2,4,5")), 0);
    }
}
