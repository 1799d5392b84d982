use std::fs;
use std::process::Command;

use homdim_catalog::cache::{Cache, InvariantRecord};
use homdim_catalog::{run, Output};

fn homdim(args: &[&str]) -> Output {
    let mut full = vec!["homdim", "--no-cache"];
    full.extend_from_slice(args);
    run(full)
}

fn value<'a>(out: &'a Output, key: &str) -> Option<&'a str> {
    let prefix = format!("{key} = ");
    out.stdout
        .lines()
        .find_map(|l| l.strip_prefix(prefix.as_str()))
}

#[test]
fn domdim_of_dual_numbers() {
    let out = homdim(&["domdim", "k2.alg", "--cutoff", "6"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("RESULTS\n"));
    assert_eq!(value(&out, "value"), Some("infinity-certified"));
    assert_eq!(value(&out, "modulus"), Some("32003"));
    assert_eq!(value(&out, "seed"), Some("0"));
}

#[test]
fn verify_muller_on_dual_numbers() {
    let out = homdim(&[
        "verify",
        "muller",
        "--algebra",
        "k2.alg",
        "--module",
        "M=regular+S",
        "--cutoff",
        "6",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(value(&out, "verdict"), Some("pass"));
    assert_eq!(value(&out, "end_domdim"), Some("2"));
    assert_eq!(value(&out, "first_ext_degree"), Some("1"));
}

#[test]
fn ext_between_simples() {
    let out = homdim(&["ext", "ka2.alg", "S1", "S2", "--cutoff", "4"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(value(&out, "dims"), Some("0,1,0,0,0"));
}

#[test]
fn machine_flag_drops_the_summary() {
    let human = homdim(&["domdim", "aus"]);
    let machine = homdim(&["domdim", "aus", "--machine"]);
    assert!(human.stdout.starts_with(&machine.stdout));
    assert!(human.stdout.len() > machine.stdout.len());
    assert!(machine
        .stdout
        .lines()
        .all(|l| l == "RESULTS" || l.contains(" = ")));
    assert_eq!(value(&machine, "value"), Some("2"));
}

#[test]
fn every_command_runs() {
    let cases: &[&[&str]] = &[
        &["inspect", "ka2"],
        &["selforth", "k2", "regular"],
        &["gencogen", "aus", "GC"],
        &["nakayama", "aus", "S1"],
        &["endo", "k2", "M"],
        &["approx", "k2", "regular", "S"],
        &["tensor", "ka2", "k2"],
        &["verify", "diamond", "--algebra", "k2"],
        &["verify", "nc-scan", "--algebra", "aus"],
        &["verify", "remark32", "--algebra", "ka2"],
        &["verify", "kunneth", "--algebra", "ka2", "--algebra", "k2"],
        &["verify", "thick-shadow", "--algebra", "k2"],
        &["verify", "bar-oracle", "--algebra", "aus"],
        &[
            "verify",
            "bar-oracle",
            "--algebra",
            "ka2",
            "--module",
            "S1",
            "--module",
            "S2",
        ],
        &["corpus", "list"],
    ];
    for args in cases {
        let out = homdim(args);
        assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
        assert!(out.stdout.starts_with("RESULTS\n"), "{args:?}");
    }
}

#[test]
fn inspect_reports_extension_predicates() {
    let out = homdim(&["inspect", "k3"]);
    assert_eq!(value(&out, "scalars.frobenius"), Some("true"));
    assert_eq!(value(&out, "scalars.split"), Some("true"));
    let out = homdim(&["inspect", "ka2"]);
    assert_eq!(value(&out, "scalars.frobenius"), Some("false"));
}

#[test]
fn exit_codes() {
    assert_eq!(homdim(&["domdim", "nowhere.alg"]).code, 2);
    assert_eq!(homdim(&["ext", "k2", "S", "Q"]).code, 2);
    assert_eq!(homdim(&["verify", "nonsense", "--algebra", "k2"]).code, 2);
    assert_eq!(homdim(&["frobnicate"]).code, 2);
    assert_eq!(
        homdim(&["verify", "muller", "--algebra", "k2", "--module", "S"]).code,
        2
    );
    assert_eq!(homdim(&["domdim", "k2", "--field", "100"]).code, 2);
    assert_eq!(
        homdim(&[
            "verify",
            "remark32",
            "--algebra",
            "a3",
            "--budget-dim",
            "10"
        ])
        .code,
        3
    );
    assert_eq!(
        homdim(&["tensor", "a3", "a3", "--budget-dim", "20"]).code,
        3
    );
    let out = homdim(&[
        "verify",
        "bar-oracle",
        "--algebra",
        "aus",
        "--bar-budget",
        "10",
    ]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("budget"), "{}", out.stderr);
    let out = homdim(&["verify", "wg-lemma", "--algebra", "k2", "--module", "M"]);
    assert_eq!(out.code, 1);
    assert_eq!(value(&out, "verdict"), Some("fail"));
}

#[test]
fn algebra_files_from_disk() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mine.alg");
    fs::write(&path, homdim_catalog::corpus::entry("aus").unwrap().text).unwrap();
    let out = homdim(&["domdim", path.to_str().unwrap(), "--machine"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(value(&out, "input"), Some("mine"));
    assert_eq!(value(&out, "value"), Some("2"));
    fs::write(
        &path,
        "homdim-alg = 1\nfield = 32003\nmode = quiver\n[quiver]\nvertices = 1\narrow x = 1 -> 2\n",
    )
    .unwrap();
    let out = homdim(&["domdim", path.to_str().unwrap()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 6"), "{}", out.stderr);
}

#[test]
fn field_flag_changes_the_header_only() {
    let a = homdim(&["ext", "ka2", "S1", "S2", "--field", "101", "--machine"]);
    let b = homdim(&["ext", "ka2", "S1", "S2", "--machine"]);
    assert_eq!(value(&a, "modulus"), Some("101"));
    assert_eq!(value(&a, "dims"), value(&b, "dims"));
}

#[test]
fn cache_hits_reproduce_output() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().to_str().unwrap();
    let args = [
        "homdim",
        "verify",
        "muller",
        "--algebra",
        "k2",
        "--module",
        "M",
        "--catalog",
        cat,
    ];
    let cold = run(args);
    let warm = run(args);
    assert_eq!(cold, warm);
    assert_eq!(
        cold.stdout,
        homdim(&["verify", "muller", "--algebra", "k2", "--module", "M"]).stdout
    );
    let stats = run(["homdim", "cache", "stats", "--catalog", cat, "--machine"]);
    assert!(stats.stdout.contains("records = 1\n"), "{}", stats.stdout);
    let cleared = run(["homdim", "cache", "clear", "--catalog", cat]);
    assert!(cleared.stdout.contains("removed = 1\n"));
}

#[test]
fn corrupt_records_are_ignored_with_a_warning() {
    let dir = tempfile::tempdir().unwrap();
    let cat = dir.path().to_str().unwrap();
    let args = ["homdim", "domdim", "aus", "--catalog", cat];
    let clean = run(args);
    let entry = fs::read_dir(dir.path())
        .unwrap()
        .next()
        .unwrap()
        .unwrap()
        .path();
    fs::write(&entry, "not a record").unwrap();
    let recovered = run(args);
    assert_eq!(recovered.stdout, clean.stdout);
    assert!(recovered.stderr.contains("corrupt"), "{}", recovered.stderr);
    assert_eq!(run(args).stderr, "");
}

#[test]
fn concurrent_puts_leave_one_valid_record() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::open(dir.path()).unwrap();
    let mut rec = InvariantRecord::new("abc", "ext", 6, 32003, 0);
    rec.payload.push(("dims".into(), "0,1,0".into()));
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| cache.put(&rec).unwrap());
        }
    });
    assert_eq!(cache.stats().unwrap(), (1, 1));
    assert_eq!(cache.get(&rec), Some(rec));
}

#[test]
fn unwritable_catalog_is_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plain");
    fs::write(&file, "").unwrap();
    let out = run([
        "homdim",
        "domdim",
        "k2",
        "--catalog",
        file.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.starts_with("error: cache"), "{}", out.stderr);
}

#[test]
fn binary_exit_status_and_streams() {
    let bin = env!("CARGO_BIN_EXE_homdim");
    let ok = Command::new(bin)
        .args(["ext", "ka2.alg", "S1", "S2", "--cutoff", "4", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("dims = 0,1,0,0,0"));
    let bad = Command::new(bin)
        .args(["domdim", "nowhere", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}
