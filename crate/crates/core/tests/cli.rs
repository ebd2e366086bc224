//! End-to-end tests of the command-line interface: the library entry point
//! for output and exit codes, the built binary for environment handling.

use std::fs;
use std::path::Path;
use std::process::Command;

use jsonschema::JSONSchema;
use serde_json::{json, Value};

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["schensted"];
    full.extend_from_slice(args);
    let code = schensted::cli::run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn schema_for(def: &str) -> JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/formats.schema.json");
    let mut root: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    root["$ref"] = json!(format!("#/$defs/{def}"));
    JSONSchema::compile(&root).unwrap()
}

fn assert_valid(def: &str, text: &str) -> Value {
    let value: Value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{text}: {e}"));
    let schema = schema_for(def);
    if let Err(errors) = schema.validate(&value) {
        let shown: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("{def}: {text} fails the schema: {shown:?}");
    }
    value
}

#[test]
fn json_outputs_match_the_schema() {
    let rsk = assert_valid("rsk", &ok(&["--format", "json", "rsk", "31524"]));
    assert_eq!(rsk["P"]["rows"], json!([[1, 2, 4], [3, 5]]));
    // P and Q feed straight back into rsk-inverse
    let back = ok(&[
        "--format",
        "json",
        "rsk-inverse",
        &rsk["P"].to_string(),
        &rsk["Q"].to_string(),
    ]);
    assert_eq!(assert_valid("rsk_inverse", &back)["w"], json!("31524"));

    let kl = assert_valid("klpoly", &ok(&["--format", "json", "klpoly", "1324", "3412"]));
    assert_eq!(kl["coefficients"], json!([1, 1]));
    let mu = assert_valid("mu", &ok(&["--format", "json", "mu", "213", "312"]));
    assert_eq!((mu["mu"].clone(), mu["mu_sym"].clone()), (json!(1), json!(1)));

    let cells = assert_valid("cells", &ok(&["--format", "json", "cells", "3", "left"]));
    assert_eq!(cells["cells"].as_array().unwrap().len(), 4);
    assert_valid("cells", &ok(&["--format", "json", "cells", "4", "right"]));
    assert_valid("cell_graph", &ok(&["--format", "json", "graph", "4", "cells"]));
    assert_valid(
        "crystal_graph",
        &ok(&["--format", "json", "graph", "3", "crystal", "--rank", "2"]),
    );
    let comps = assert_valid("decompose", &ok(&["--format", "json", "decompose", "3"]));
    assert_eq!(comps.as_array().unwrap().len(), 4);
    for suite in [
        "theorem-a",
        "knuth",
        "evacuation",
        "bar-invariance",
        "descents",
        "knuth-mu",
        "crystal-djm",
        "crystal-theorem-a",
    ] {
        let report = assert_valid("report", &ok(&["--format", "json", "verify", suite, "4"]));
        assert_eq!(report["violations"], json!([]), "{suite}");
    }
}

#[test]
fn text_outputs() {
    assert_eq!(ok(&["rsk", "31524"]), "P=[[1,2,4],[3,5]] Q=[[1,3,5],[2,4]]\n");
    assert_eq!(ok(&["klpoly", "1324", "3412"]), "1 + q\n");
    assert_eq!(ok(&["mu", "213", "312"]), "mu=1 mu_sym=1\n");
    assert_eq!(ok(&["cells", "3", "left"]), "123\n132 231\n213 312\n321\n");
    assert_eq!(ok(&["cells", "3", "right"]), "123\n132 312\n213 231\n321\n");
    assert_eq!(ok(&["graph", "2", "cells"]), "21 -> 12 mu=1\n");
    assert_eq!(
        ok(&["--format", "dot", "graph", "2", "cells"]),
        "digraph left_cells {\n  \"12\";\n  \"21\";\n  \"21\" -> \"12\" [label=\"1\"];\n}\n"
    );
    assert!(ok(&["--format", "dot", "graph", "2", "crystal"]).starts_with("digraph"));
    let verify = ok(&["verify", "theorem-a", "4"]);
    assert!(verify.starts_with("theorem-a n=4: PASS"), "{verify}");
}

#[test]
fn exit_codes() {
    // input errors
    assert_eq!(call(&["rsk", "3152"]).0, 2);
    assert_eq!(call(&["klpoly", "12", "321"]).0, 2);
    assert_eq!(call(&["verify", "nope", "3"]).0, 2);
    assert_eq!(call(&["--format", "dot", "rsk", "21"]).0, 2);
    assert_eq!(call(&["bogus"]).0, 2);
    // bounds
    assert_eq!(call(&["cells", "9", "left"]).0, 3);
    assert_eq!(call(&["--max-n", "3", "cells", "4", "left"]).0, 3);
    assert_eq!(call(&["decompose", "8", "8"]).0, 3);
    // long runs need the flag
    let (code, _, err) = call(&["verify", "theorem-a", "6"]);
    assert_eq!(code, 3);
    assert!(err.contains("--long"), "{err}");
    assert_eq!(call(&["--long", "verify", "descents", "5"]).0, 0);
    // help is not an error
    assert_eq!(call(&["--help"]).0, 0);
}

#[test]
fn cache_lifecycle() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(ok(&["--cache-dir", d, "cache", "info"]), "0 entries\n");

    let warm = assert_valid(
        "cache_warm",
        &ok(&["--cache-dir", d, "--format", "json", "cache", "warm", "4"]),
    );
    let entries = warm["entries"].as_u64().unwrap();
    assert!(entries > 0);
    let file = dir.path().join("kl-S4.tsv");
    let first = fs::read(&file).unwrap();

    // warming again, or through a query, leaves the file byte-identical
    ok(&["--cache-dir", d, "cache", "warm", "4"]);
    assert_eq!(fs::read(&file).unwrap(), first);
    ok(&["--cache-dir", d, "klpoly", "1324", "3412"]);
    assert_eq!(fs::read(&file).unwrap(), first);

    let info = assert_valid(
        "cache_info",
        &ok(&["--cache-dir", d, "--format", "json", "cache", "info"]),
    );
    assert_eq!(info["entries"].as_u64().unwrap(), entries);
    assert_eq!(info["files"][0]["file"], json!("kl-S4.tsv"));

    // queries answered from the warm table agree with a cold engine
    let warm_cells = ok(&["--cache-dir", d, "cells", "4", "left"]);
    assert_eq!(warm_cells, ok(&["cells", "4", "left"]));

    // a query on a new degree adds a table
    ok(&["--cache-dir", d, "cells", "5", "left"]);
    assert!(dir.path().join("kl-S5.tsv").exists());

    let cleared = assert_valid(
        "cache_clear",
        &ok(&["--cache-dir", d, "--format", "json", "cache", "clear"]),
    );
    assert_eq!(cleared["removed"], json!(2));
    assert_eq!(ok(&["--cache-dir", d, "cache", "info"]), "0 entries\n");
}

#[test]
fn corrupt_cache_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("kl-S4.tsv"), "not a table\n").unwrap();
    let d = dir.path().to_str().unwrap();
    let (code, _, err) = call(&["--cache-dir", d, "klpoly", "1234", "4321"]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn binary_prefers_the_environment_cache_dir() {
    let flag_dir = tempfile::tempdir().unwrap();
    let env_dir = tempfile::tempdir().unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_schensted"))
        .args([
            "--cache-dir",
            flag_dir.path().to_str().unwrap(),
            "cache",
            "warm",
            "3",
        ])
        .env("SCHENSTED_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert!(
        status.status.success(),
        "{}",
        String::from_utf8_lossy(&status.stderr)
    );
    assert!(env_dir.path().join("kl-S3.tsv").exists());
    assert!(!flag_dir.path().join("kl-S3.tsv").exists());

    let output = Command::new(env!("CARGO_BIN_EXE_schensted"))
        .args(["rsk", "31524"])
        .env_remove("SCHENSTED_CACHE_DIR")
        .output()
        .unwrap();
    assert_eq!(
        String::from_utf8(output.stdout).unwrap(),
        "P=[[1,2,4],[3,5]] Q=[[1,3,5],[2,4]]\n"
    );
    let failed = Command::new(env!("CARGO_BIN_EXE_schensted"))
        .args(["rsk", "11"])
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(2));
}
