use std::fs;
use std::path::Path;

use antiramsey_core::constructions::{
    build_forest_coloring, build_path_coloring, build_turan_extremal, verify_forest_free, verify_rainbow_free,
    ConstructionError,
};
use antiramsey_core::formulas::{self, FormulaResult};
use antiramsey_core::oracles::{
    brute_force_ar, brute_force_ex_with, verify_witness, ExOptions, SearchBudget, SearchReport, Witness,
};
use antiramsey_core::rainbow::{representing_graphs, sample_representing};
use antiramsey_core::{contains_subgraph, find_rainbow, graph6, EdgeColoring, LinearForest};
use serde_json::{json, Value};

use crate::{
    BudgetArgs, ConstructArgs, Family, FormulaArgs, FormulaName, RepresentingArgs, SearchArgs, SearchExArgs, VerifyArgs,
};

pub struct CliError {
    pub kind: &'static str,
    pub message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        CliError { kind, message: message.to_string() }
    }
}

type Outcome = Result<u8, CliError>;

pub fn print_error(kind: &str, message: &str) {
    emit(&json!({ "error": { "kind": kind, "message": message.trim_end() } }));
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json"));
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn read_coloring(path: &Path) -> Result<EdgeColoring, CliError> {
    EdgeColoring::parse(&read(path)?).map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
}

fn need<T>(v: Option<T>, flag: &str, name: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::new("usage", format!("formula {name} needs --{flag}")))
}

pub fn formula(a: FormulaArgs) -> Outcome {
    let name = clap::ValueEnum::to_possible_value(&a.name).expect("named").get_name().to_string();
    let bad = |e: antiramsey_core::FormulaError| CliError::new("formula", e);
    let forest_spec = a.forest.as_ref().map(LinearForest::spec);
    let plain = |r: FormulaResult, inputs: Value| {
        json!({ "name": name, "inputs": inputs, "value": r.value, "epsilon": r.epsilon, "validity": r.validity })
    };
    let out = match a.name {
        FormulaName::ArPath => {
            let (n, k) = (need(a.n, "n", &name)?, need(a.k, "k", &name)?);
            plain(formulas::ar_path(n, k).map_err(bad)?, json!({ "n": n, "k": k }))
        }
        FormulaName::ArMatching => {
            let (n, t) = (need(a.n, "n", &name)?, need(a.t, "t", &name)?);
            plain(formulas::ar_matching(n, t).map_err(bad)?, json!({ "n": n, "t": t }))
        }
        FormulaName::ArMain => {
            let (n, f) = (need(a.n, "n", &name)?, need(a.forest.as_ref(), "forest", &name)?);
            plain(formulas::ar_linear_forest(n, f).map_err(bad)?, json!({ "n": n, "forest": forest_spec }))
        }
        FormulaName::ExForest => {
            let (n, f) = (need(a.n, "n", &name)?, need(a.forest.as_ref(), "forest", &name)?);
            plain(formulas::ex_linear_forest(n, f).map_err(bad)?, json!({ "n": n, "forest": forest_spec }))
        }
        FormulaName::ExKp3 => {
            let (n, k) = (need(a.n, "n", &name)?, need(a.k, "k", &name)?);
            plain(formulas::ex_kp3(n, k).map_err(bad)?, json!({ "n": n, "k": k }))
        }
        FormulaName::ArAsymptotic => {
            let f = need(a.forest.as_ref(), "forest", &name)?;
            let c = formulas::ar_asymptotic_coefficient(f).map_err(bad)?;
            json!({
                "name": name,
                "inputs": { "forest": forest_spec },
                "value": c,
                "epsilon": f.census().asymptotic_epsilon(),
                "validity": "coefficient of n; AR(n,F) = value * n + O(1)",
            })
        }
        FormulaName::EgBound => {
            let (n, k) = (need(a.n, "n", &name)?, need(a.k, "k", &name)?);
            let r = formulas::erdos_gallai_bound(n, k).map_err(bad)?;
            let value = if r.is_integer() { json!(r.to_integer()) } else { json!(r.to_string()) };
            json!({
                "name": name,
                "inputs": { "n": n, "k": k },
                "value": value,
                "floor": r.floor().to_integer(),
                "epsilon": null,
                "validity": "all n >= 1",
            })
        }
    };
    emit(&out);
    Ok(0)
}

fn construction_error(e: ConstructionError) -> CliError {
    CliError::new("construction", e)
}

pub fn construct(a: ConstructArgs) -> Outcome {
    let check = a.n <= a.verify_limit;
    let (family, forest_spec, body, sidecar_extra, verified) = match a.family {
        Family::ArForest | Family::ArPath => {
            let (forest, c) = if a.family == Family::ArPath {
                let k = a.k.expect("required by clap");
                let f = LinearForest::path(k).map_err(|e| CliError::new("usage", e))?;
                (f, build_path_coloring(a.n, k).map_err(construction_error)?)
            } else {
                let f = a.forest.clone().expect("required by clap");
                let c = build_forest_coloring(a.n, &f, a.arrangement).map_err(construction_error)?;
                (f, c)
            };
            if check {
                verify_rainbow_free(&c, &forest).map_err(construction_error)?;
            }
            let extra = json!({ "colors": c.color_count() });
            (family_name(a.family), forest.spec(), c.to_text(), extra, check)
        }
        Family::Turan => {
            let f = a.forest.clone().expect("required by clap");
            let g = build_turan_extremal(a.n, &f).map_err(construction_error)?;
            if check {
                verify_forest_free(&g, &f).map_err(construction_error)?;
            }
            let extra = json!({ "colors": null, "edges": g.edge_count() });
            (family_name(a.family), f.spec(), format!("{}\n", graph6::encode(&g)), extra, check)
        }
    };
    write(&a.out, &body)?;
    let mut sidecar = json!({ "family": family, "n": a.n, "forest": forest_spec, "verified": verified });
    for (k, v) in sidecar_extra.as_object().expect("object") {
        sidecar[k] = v.clone();
    }
    if a.family == Family::ArForest {
        sidecar["arrangement"] = serde_json::to_value(a.arrangement).expect("json");
    }
    let mut side_path = a.out.clone().into_os_string();
    side_path.push(".json");
    write(Path::new(&side_path), &format!("{}\n", serde_json::to_string_pretty(&sidecar).expect("json")))?;
    emit(&sidecar);
    Ok(0)
}

fn family_name(f: Family) -> String {
    clap::ValueEnum::to_possible_value(&f).expect("named").get_name().to_string()
}

pub fn verify(a: VerifyArgs) -> Outcome {
    let found = if let Some(path) = &a.input.coloring {
        let c = read_coloring(path)?;
        find_rainbow(&c, &a.forest)
    } else {
        let path = a.input.graph.as_ref().expect("one input is required");
        let text = read(path)?;
        let line = text.lines().next().unwrap_or("");
        let g = graph6::decode(line).map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))?;
        contains_subgraph(&g, &a.forest)
    };
    let rainbow = a.input.coloring.is_some();
    match found {
        None => {
            emit(&json!({ "forest": a.forest.spec(), "rainbow": rainbow, "found": false }));
            Ok(0)
        }
        Some(e) => {
            emit(&json!({ "forest": a.forest.spec(), "rainbow": rainbow, "found": true, "witness": e }));
            Ok(1)
        }
    }
}

fn budget(b: &BudgetArgs) -> SearchBudget {
    SearchBudget {
        max_nodes: b.max_nodes,
        max_millis: b.max_millis,
        parallelism: b.workers.unwrap_or_else(|| SearchBudget::default().parallelism),
    }
}

fn report_json(kind: &str, r: &SearchReport, forest: &LinearForest) -> Value {
    let witness = match &r.witness {
        Witness::Coloring(c) => json!({ "colors": c.colors() }),
        Witness::Graph(g) => json!({ "graph6": graph6::encode(g) }),
    };
    json!({
        "search": kind,
        "n": r.n,
        "forest": r.forest.spec(),
        "value": r.value,
        "exhausted": r.exhausted,
        "witness": witness,
        "witness_valid": verify_witness(r, forest),
        "stats": r.stats,
    })
}

fn finish(kind: &str, r: SearchReport, a: &SearchArgs) -> Outcome {
    if let Some(path) = &a.witness_out {
        let text = match &r.witness {
            Witness::Coloring(c) => c.to_text(),
            Witness::Graph(g) => format!("{}\n", graph6::encode(g)),
        };
        write(path, &text)?;
    }
    emit(&report_json(kind, &r, &a.forest));
    Ok(if r.exhausted { 0 } else { 3 })
}

pub fn search_ar(a: SearchArgs) -> Outcome {
    let r = brute_force_ar(a.n, &a.forest, budget(&a.budget)).map_err(|e| CliError::new("search", e))?;
    finish("ar", r, &a)
}

pub fn search_ex(a: SearchExArgs) -> Outcome {
    let opts = ExOptions { erdos_gallai: !a.no_eg_bound, ..ExOptions::default() };
    let s = &a.search;
    let r = brute_force_ex_with(s.n, &s.forest, budget(&s.budget), opts).map_err(|e| CliError::new("search", e))?;
    finish("ex", r, s)
}

pub fn representing(a: RepresentingArgs) -> Outcome {
    let c = read_coloring(&a.coloring)?;
    if let Some(seed) = a.seed {
        let r = sample_representing(&c, seed);
        let contains = a.forest.as_ref().map(|f| contains_subgraph(&r.graph(), f).is_some());
        emit(&json!({ "n": c.order(), "seed": seed, "edges": r.choices(), "contains_forest": contains }));
        return Ok(0);
    }
    let mut it = representing_graphs(&c, a.cap);
    let total = it.total_count().to_string();
    let mut graphs = Vec::new();
    let mut contains = a.forest.as_ref().map(|_| false);
    for r in it.by_ref() {
        if let (Some(f), Some(flag)) = (&a.forest, contains.as_mut()) {
            *flag |= contains_subgraph(&r.graph(), f).is_some();
        }
        graphs.push(r.choices().to_vec());
    }
    let mut out = json!({
        "n": c.order(),
        "colors": c.color_count(),
        "total_count": total,
        "yielded": it.yielded(),
        "capped": it.capped(),
        "graphs": graphs,
    });
    if let Some(f) = &a.forest {
        out["forest"] = json!(f.spec());
        out["contains_forest"] = json!(contains);
        out["rainbow"] = json!(find_rainbow(&c, f).is_some());
    }
    emit(&out);
    Ok(0)
}
