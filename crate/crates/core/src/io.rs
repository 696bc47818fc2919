//! File formats. All element indices are 1-based on disk.
//!
//! * poset: `{"n": 3, "relations": [[1, 3], [2, 3]]}`, each pair `j ≺ i`
//! * weighted bipartite graph: `{"u": 2, "v": 2, "edges": [[u, v, w], ...]}`
//! * plain bipartite graph: `{"a": 2, "b": 2, "edges": [[a, b], ...]}`
//! * set-function table: JSON `{"n": .., "rows": [[[1, 3], 1], ...]}` or CSV
//!   with header `subset,value` and space-separated elements; `-inf` is the
//!   string `"-inf"`
//! * subset family: sorted list of sorted element lists

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::construct::SetFunctionTable;
use crate::error::{Error, Result};
use crate::matching::WeightedBipartiteGraph;
use crate::partition::BipartiteGraphPlain;
use crate::poset::{Poset, SubsetFamily};
use crate::set::ElementSet;
use crate::value::ExtInt;
use crate::verify::ViolationWitness;

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn zero_based(index: usize, n: usize) -> Result<usize> {
    if index == 0 || index > n {
        Err(Error::IndexOutOfRange { index, n })
    } else {
        Ok(index - 1)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    n: usize,
    relations: Vec<(usize, usize)>,
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let file: PosetFile = serde_json::from_str(text).map_err(parse_err)?;
    let pairs = file
        .relations
        .iter()
        .map(|&(j, i)| Ok((zero_based(j, file.n)?, zero_based(i, file.n)?)))
        .collect::<Result<Vec<_>>>()?;
    Poset::from_relations(file.n, &pairs)
}

/// Serializes the cover relations of `poset`.
pub fn poset_to_json(poset: &Poset) -> String {
    let file = PosetFile {
        n: poset.len(),
        relations: poset.covers().into_iter().map(|(j, i)| (j + 1, i + 1)).collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WeightedGraphFile {
    u: usize,
    v: usize,
    edges: Vec<(usize, usize, i64)>,
}

pub fn parse_weighted_graph(text: &str) -> Result<WeightedBipartiteGraph> {
    let file: WeightedGraphFile = serde_json::from_str(text).map_err(parse_err)?;
    let edges = file
        .edges
        .iter()
        .map(|&(u, v, w)| Ok((zero_based(u, file.u)?, zero_based(v, file.v)?, w)))
        .collect::<Result<Vec<_>>>()?;
    WeightedBipartiteGraph::new(file.u, file.v, edges)
}

pub fn weighted_graph_to_json(graph: &WeightedBipartiteGraph) -> String {
    let file = WeightedGraphFile {
        u: graph.u_size(),
        v: graph.v_size(),
        edges: graph
            .edges()
            .iter()
            .map(|e| (e.u + 1, e.v + 1, e.weight))
            .collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PlainGraphFile {
    a: usize,
    b: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_bipartite_graph(text: &str) -> Result<BipartiteGraphPlain> {
    let file: PlainGraphFile = serde_json::from_str(text).map_err(parse_err)?;
    let edges = file
        .edges
        .iter()
        .map(|&(a, b)| Ok((zero_based(a, file.a)?, zero_based(b, file.b)?)))
        .collect::<Result<Vec<_>>>()?;
    BipartiteGraphPlain::new(file.a, file.b, edges)
}

pub fn bipartite_graph_to_json(graph: &BipartiteGraphPlain) -> String {
    let file = PlainGraphFile {
        a: graph.a_size(),
        b: graph.b_size(),
        edges: graph.edges().iter().map(|&(a, b)| (a + 1, b + 1)).collect(),
    };
    serde_json::to_string(&file).expect("plain data serializes")
}

fn ext_to_json(v: ExtInt) -> Value {
    match v {
        ExtInt::Finite(v) => json!(v),
        ExtInt::NegInf => json!("-inf"),
    }
}

fn ext_from_json(v: &Value) -> Result<ExtInt> {
    match v {
        Value::String(s) => ext_from_str(s),
        Value::Number(num) => {
            if let Some(i) = num.as_i64() {
                Ok(ExtInt::Finite(i))
            } else {
                match num.as_f64() {
                    Some(x) if x.fract() == 0.0 && x.abs() < 9.0e15 => Ok(ExtInt::Finite(x as i64)),
                    _ => Err(Error::NonInteger(num.to_string())),
                }
            }
        }
        other => Err(Error::Parse(format!("bad table value {other}"))),
    }
}

fn ext_from_str(s: &str) -> Result<ExtInt> {
    let s = s.trim();
    if s == "-inf" {
        return Ok(ExtInt::NegInf);
    }
    if let Ok(v) = s.parse::<i64>() {
        return Ok(ExtInt::Finite(v));
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x.fract() == 0.0 && x.abs() < 9.0e15 => Ok(ExtInt::Finite(x as i64)),
        Ok(_) => Err(Error::NonInteger(s.to_string())),
        Err(_) => Err(Error::Parse(format!("bad table value {s:?}"))),
    }
}

fn set_from_one_indexed(elements: &[usize], n: usize) -> Result<ElementSet> {
    elements
        .iter()
        .map(|&i| zero_based(i, n))
        .collect::<Result<Vec<_>>>()
        .map(ElementSet::from_elements)
}

/// Table rows in canonical subset order, one per line.
pub fn table_to_json(table: &SetFunctionTable) -> String {
    let mut out = format!("{{\n  \"n\": {},\n  \"rows\": [", table.ground_size());
    for (k, (x, v)) in table.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let row = json!([x.to_one_indexed(), ext_to_json(v)]);
        out.push_str("\n    ");
        out.push_str(&row.to_string());
    }
    out.push_str("\n  ]\n}\n");
    out
}

pub fn table_to_csv(table: &SetFunctionTable) -> String {
    let mut out = String::from("subset,value\n");
    for (x, v) in table.iter() {
        let elems: Vec<String> = x.to_one_indexed().iter().map(|i| i.to_string()).collect();
        out.push_str(&format!("{},{}\n", elems.join(" "), v));
    }
    out
}

fn assemble_table(n: usize, rows: Vec<(ElementSet, ExtInt)>) -> Result<SetFunctionTable> {
    crate::caps::check("set function table", n, crate::caps::HARD_MAX_N)?;
    let size = 1usize << n;
    if rows.len() != size {
        return Err(Error::Parse(format!("expected {size} rows for n = {n}, found {}", rows.len())));
    }
    let mut values = vec![None; size];
    for (x, v) in rows {
        let slot = &mut values[x.bits() as usize];
        if slot.is_some() {
            return Err(Error::Parse(format!("subset {x} listed twice")));
        }
        *slot = Some(v);
    }
    SetFunctionTable::new(n, values.into_iter().map(|v| v.expect("all rows present")).collect())
}

pub fn parse_table_json(text: &str) -> Result<SetFunctionTable> {
    #[derive(Deserialize)]
    #[serde(deny_unknown_fields)]
    struct TableFile {
        n: usize,
        rows: Vec<(Vec<usize>, Value)>,
    }
    let file: TableFile = serde_json::from_str(text).map_err(parse_err)?;
    let rows = file
        .rows
        .iter()
        .map(|(set, v)| Ok((set_from_one_indexed(set, file.n)?, ext_from_json(v)?)))
        .collect::<Result<Vec<_>>>()?;
    assemble_table(file.n, rows)
}

/// CSV tables carry no explicit `n`; it is inferred from the row count.
pub fn parse_table_csv(text: &str) -> Result<SetFunctionTable> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    match lines.next() {
        Some(h) if h.trim() == "subset,value" => {}
        _ => return Err(Error::Parse("missing `subset,value` header".into())),
    }
    let raw: Vec<(&str, &str)> = lines
        .map(|l| l.rsplit_once(',').ok_or_else(|| Error::Parse(format!("bad row {l:?}"))))
        .collect::<Result<_>>()?;
    if !raw.len().is_power_of_two() {
        return Err(Error::Parse(format!("{} rows is not a power of two", raw.len())));
    }
    let n = raw.len().trailing_zeros() as usize;
    let rows = raw
        .into_iter()
        .map(|(set, v)| {
            let elems = set
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(parse_err))
                .collect::<Result<Vec<_>>>()?;
            Ok((set_from_one_indexed(&elems, n)?, ext_from_str(v)?))
        })
        .collect::<Result<Vec<_>>>()?;
    assemble_table(n, rows)
}

/// Accepts either table format.
pub fn parse_table(text: &str) -> Result<SetFunctionTable> {
    if text.trim_start().starts_with('{') {
        parse_table_json(text)
    } else {
        parse_table_csv(text)
    }
}

pub fn family_to_json(family: &SubsetFamily) -> Value {
    json!(family.to_lists())
}

pub fn witness_to_json(w: &ViolationWitness) -> Value {
    let ineq = |q: Option<crate::verify::Inequality>| match q {
        Some(q) => json!({"lhs": q.lhs, "rhs": q.rhs}),
        None => Value::Null,
    };
    json!({
        "kind": w.kind.to_string(),
        "X": w.x.to_one_indexed(),
        "Y": w.y.to_one_indexed(),
        "i": w.i.map(|i| i + 1),
        "failed": ineq(w.failed),
        "tried_j": w.tried_j.iter().map(|t| json!({
            "j": t.j + 1,
            "failed": ineq(t.failed),
        })).collect::<Vec<_>>(),
    })
}
