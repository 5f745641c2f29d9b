use std::fmt::Write;

use serde_json::Value;

fn list(v: &Value) -> String {
    let items: Vec<&str> = v
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_str).collect())
        .unwrap_or_default();
    format!("<{}>", items.join(","))
}

fn field(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

pub fn render(command: &str, r: &Value) -> String {
    let mut out = String::new();
    let w = &mut out;
    match command {
        "dim" => {
            writeln!(w, "dim(PGP)   {}", field(&r["dim_PGP"])).unwrap();
            writeln!(w, "code dim   {}", field(&r["code_dim"])).unwrap();
            if !r["oracle_dim_PGP"].is_null() {
                writeln!(w, "dense      {}", field(&r["oracle_dim_PGP"])).unwrap();
            }
        }
        "classify" => {
            writeln!(w, "verdict    {}", field(&r["verdict"])).unwrap();
            writeln!(w, "witness    {}", list(&r["witness_generators"])).unwrap();
            writeln!(w, "k          {}", field(&r["k"])).unwrap();
            writeln!(w, "dim(PGP)   {}", field(&r["dim_PGP"])).unwrap();
            writeln!(w, "route      {}", field(&r["route"])).unwrap();
            writeln!(w, "examined   {}", field(&r["examined"])).unwrap();
            if let Some(o) = r.get("oracle") {
                writeln!(
                    w,
                    "dense      {}",
                    if o["agrees"] == true {
                        "agrees"
                    } else {
                        "DISAGREES"
                    }
                )
                .unwrap();
            }
            if let Some(d) = r.get("diagnostic") {
                writeln!(w, "diagnostic {}", field(d)).unwrap();
            }
        }
        "search" => {
            writeln!(
                w,
                "n = {}, mode = {}, dim G = {}",
                field(&r["n"]),
                field(&r["mode"]),
                field(&r["graph_dimension"])
            )
            .unwrap();
            writeln!(
                w,
                "{:>3} {:>9} {:>12} {:>8}",
                "k", "examined", "anticliques", "cliques"
            )
            .unwrap();
            for row in r["per_k"].as_array().into_iter().flatten() {
                let count = |key: &str| row[key].as_array().map_or(0, Vec::len);
                writeln!(
                    w,
                    "{:>3} {:>9} {:>12} {:>8}",
                    field(&row["k"]),
                    field(&row["examined"]),
                    count("anticliques"),
                    count("cliques")
                )
                .unwrap();
            }
            writeln!(
                w,
                "first witness: {} {}",
                field(&r["verdict"]),
                list(&r["witness_generators"])
            )
            .unwrap();
        }
        "construct-maximal" => {
            writeln!(w, "stabilizer {}", list(&r["stabilizer"])).unwrap();
            writeln!(
                w,
                "wrote {} noise operators to {}",
                field(&r["noise_operators"]),
                field(&r["output"])
            )
            .unwrap();
        }
        "verify" => {
            for key in [
                "dim_PGP",
                "oracle_dim_PGP",
                "code_dim",
                "anticlique",
                "gottesman",
                "knill_laflamme",
                "clique",
                "projector_ok",
                "consistent",
            ] {
                writeln!(w, "{key:<15} {}", field(&r[key])).unwrap();
            }
            if let Some(p) = r["private_check"].as_object() {
                writeln!(
                    w,
                    "{:<15} {} ({} samples)",
                    "private",
                    field(&p["passed"]),
                    field(&p["samples"])
                )
                .unwrap();
            }
            for p in r["problems"].as_array().into_iter().flatten() {
                writeln!(w, "problem: {}", field(p)).unwrap();
            }
        }
        "selftest" => {
            for c in r["criteria"].as_array().into_iter().flatten() {
                let tag = if c["passed"] == true { "PASS" } else { "FAIL" };
                writeln!(
                    w,
                    "[{tag}] {} {}: {}",
                    field(&c["criterion"]),
                    field(&c["name"]),
                    field(&c["detail"])
                )
                .unwrap();
            }
        }
        _ => {}
    }
    if let Some(rep) = r.get("reproduction") {
        writeln!(w, "reproduction: {rep}").unwrap();
    }
    out
}
