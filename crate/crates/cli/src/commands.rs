use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::time::Instant;

use latmin::construct::{build_prop2_capped, build_table_capped};
use latmin::gen::random_dag;
use latmin::io;
use latmin::partition::partition_sum_dyadic;
use latmin::verify::{check_min_condition, is_mnat_concave_capped, is_submodular_capped, minimizers};
use latmin::{
    bis_to_poset, count_bis_bruteforce, estimate_ideal_count, Caps, ConstructionVariant, Poset,
    SetFunctionTable, ViolationWitness,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::{CountMethod, FunctionKind, GenKind};

pub struct Outcome {
    pub stdout: String,
    /// A verification check reported a violation.
    pub failed: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            failed: false,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn load_poset(path: &Path) -> Result<Poset> {
    Ok(io::parse_poset(&read(path)?)?)
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

fn caps_json(caps: &Caps) -> Value {
    json!({"enumerate": caps.enumerate, "table": caps.table, "verify": caps.verify})
}

pub fn ideals(caps: &Caps, path: &Path, list: bool, as_json: bool) -> Result<Outcome> {
    let poset = load_poset(path)?;
    let family = poset.ideals_capped(caps.enumerate)?;
    if as_json {
        let mut report = json!({"n": poset.len(), "count": family.len()});
        if list {
            report["ideals"] = io::family_to_json(&family);
        }
        return Ok(Outcome::ok(json_line(&report)));
    }
    let mut out = format!("ideals: {}\n", family.len());
    if list {
        for members in family.to_lists() {
            let items: Vec<String> = members.iter().map(|i| i.to_string()).collect();
            writeln!(out, "{{{}}}", items.join(",")).unwrap();
        }
    }
    Ok(Outcome::ok(out))
}

fn build_function(caps: &Caps, poset: &Poset, kind: FunctionKind) -> Result<SetFunctionTable> {
    let variant = match kind {
        FunctionKind::Prop2 => return Ok(build_prop2_capped(poset, caps.table)?),
        FunctionKind::F0 => ConstructionVariant::F0,
        FunctionKind::F1 => ConstructionVariant::F1,
        FunctionKind::F2 => ConstructionVariant::F2,
    };
    Ok(build_table_capped(poset, variant, caps.table)?)
}

pub fn build(caps: &Caps, path: &Path, kind: FunctionKind, out: Option<&Path>) -> Result<Outcome> {
    let poset = load_poset(path)?;
    let table = build_function(caps, &poset, kind)?;
    match out {
        Some(target) => {
            let csv = target.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv"));
            let text = if csv {
                io::table_to_csv(&table)
            } else {
                io::table_to_json(&table)
            };
            write(target, &text)?;
            Ok(Outcome::ok(format!(
                "wrote {} rows to {}\n",
                table.values().len(),
                target.display()
            )))
        }
        None => Ok(Outcome::ok(io::table_to_json(&table))),
    }
}

struct Check {
    name: &'static str,
    passed: bool,
    witness: Option<ViolationWitness>,
    millis: f64,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let value = f();
    (value, start.elapsed().as_secs_f64() * 1e3)
}

pub fn verify(caps: &Caps, table_path: &Path, poset_path: Option<&Path>, as_json: bool, timing: bool) -> Result<Outcome> {
    let table = io::parse_table(&read(table_path)?)?;
    let poset = poset_path.map(load_poset).transpose()?;

    let mut checks = Vec::new();
    let (sub, millis) = timed(|| is_submodular_capped(&table, caps.verify));
    let sub = sub?;
    checks.push(Check {
        name: "submodular",
        passed: sub.is_none(),
        witness: sub,
        millis,
    });
    let (mnat, millis) = timed(|| is_mnat_concave_capped(&table, caps.verify));
    let mnat = mnat?;
    checks.push(Check {
        name: "mnat-concave",
        passed: mnat.is_none(),
        witness: mnat,
        millis,
    });
    let (mins, min_millis) = timed(|| minimizers(&table));
    if let Some(p) = &poset {
        let (ok, millis) = timed(|| check_min_condition(&table, p));
        checks.push(Check {
            name: "cond-min",
            passed: ok?,
            witness: None,
            millis,
        });
    }
    let failed = checks.iter().any(|c| !c.passed);

    if as_json {
        let mut report = json!({
            "n": table.ground_size(),
            "caps": caps_json(caps),
            "checks": checks.iter().map(|c| {
                let mut entry = json!({
                    "name": c.name,
                    "status": if c.passed { "pass" } else { "fail" },
                    "witness": c.witness.as_ref().map(io::witness_to_json),
                });
                if timing {
                    entry["millis"] = json!(c.millis);
                }
                entry
            }).collect::<Vec<_>>(),
            "minimizers": io::family_to_json(&mins),
        });
        if timing {
            report["minimizers_millis"] = json!(min_millis);
        }
        return Ok(Outcome {
            stdout: json_line(&report),
            failed,
        });
    }

    let mut out = format!("n: {}\n", table.ground_size());
    for c in &checks {
        match &c.witness {
            Some(w) => writeln!(out, "{}: FAIL {w}", c.name).unwrap(),
            None => writeln!(out, "{}: {}", c.name, if c.passed { "pass" } else { "FAIL" }).unwrap(),
        }
        if timing {
            writeln!(out, "  time: {:.3} ms", c.millis).unwrap();
        }
    }
    writeln!(out, "minimizers: {}", io::family_to_json(&mins)).unwrap();
    Ok(Outcome { stdout: out, failed })
}

pub fn count(caps: &Caps, path: &Path, via: CountMethod, kind: FunctionKind, as_json: bool) -> Result<Outcome> {
    let text = read(path)?;
    let (fields, failed): (Vec<(&str, Value)>, bool) = match via {
        CountMethod::Ideals => {
            let poset = io::parse_poset(&text)?;
            let count = poset.ideals_capped(caps.enumerate)?.len();
            (vec![("via", json!("ideals")), ("ideals", json!(count))], false)
        }
        CountMethod::Partition => {
            let poset = io::parse_poset(&text)?;
            let table = build_function(caps, &poset, kind)?;
            let sum = partition_sum_dyadic(&table)?;
            let estimate = estimate_ideal_count(&table)?;
            let label = match kind {
                FunctionKind::F0 => "f0",
                FunctionKind::F1 => "f1",
                FunctionKind::F2 => "f2",
                FunctionKind::Prop2 => "prop2",
            };
            let fields = vec![
                ("via", json!("partition")),
                ("variant", json!(label)),
                ("sum", json!(sum.to_string())),
                ("ideals", json!(estimate)),
            ];
            (fields, false)
        }
        CountMethod::Bis => {
            let graph = io::parse_bipartite_graph(&text)?;
            let independent = count_bis_bruteforce(&graph)?;
            let poset = bis_to_poset(&graph);
            let ideals = poset.ideals_capped(caps.enumerate)?.len() as u64;
            let fields = vec![
                ("via", json!("bis")),
                ("independent_sets", json!(independent)),
                ("ideals", json!(ideals)),
            ];
            (fields, independent != ideals)
        }
    };
    let stdout = if as_json {
        let map: serde_json::Map<String, Value> =
            fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        json_line(&Value::Object(map))
    } else {
        let mut out = String::new();
        for (key, value) in fields {
            match value {
                Value::String(s) => writeln!(out, "{key}: {s}").unwrap(),
                other => writeln!(out, "{key}: {other}").unwrap(),
            }
        }
        out
    };
    Ok(Outcome { stdout, failed })
}

pub fn gen(caps: &Caps, kind: GenKind, n: usize, seed: u64, edge_prob: f64, out: Option<&Path>) -> Result<Outcome> {
    if n > caps.enumerate {
        return Err(latmin::Error::Size {
            what: "generated poset",
            n,
            cap: caps.enumerate,
        }
        .into());
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(latmin::Error::InvalidParameter(format!("--edge-prob {edge_prob} not in [0, 1]")).into());
    }
    let poset = match kind {
        GenKind::Chain => Poset::chain(n),
        GenKind::Antichain => Poset::antichain(n),
        GenKind::RandomDag => random_dag(n, edge_prob, &mut ChaCha8Rng::seed_from_u64(seed))?,
    };
    let mut text = io::poset_to_json(&poset);
    text.push('\n');
    match out {
        Some(path) => {
            write(path, &text)?;
            Ok(Outcome::ok(String::new()))
        }
        None => Ok(Outcome::ok(text)),
    }
}
