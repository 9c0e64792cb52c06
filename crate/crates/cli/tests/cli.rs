use std::path::PathBuf;
use std::process::Command;

use gkdim_cli::run;
use serde_json::Value;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn gkdim(args: &[&str]) -> Output {
    gkdim_env(args, None)
}

fn gkdim_env(args: &[&str], threads: Option<&str>) -> Output {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("gkdim").chain(args.iter().copied());
    let code = run(argv, threads, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn ring_file(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("../../rings");
    p.push(name);
    p.to_string_lossy().into_owned()
}

#[test]
fn sl2_csv_rows() {
    let o = gkdim(&["series", "--ring", "sl2", "--gens", "0,1", "--steps", "4", "--format", "csv"]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(
        o.stdout,
        "n,support_size,dim_vn,log2_dim_vn\n1,2,5,2.321928\n2,3,14,3.807355\n3,4,30,4.906891\n4,5,55,5.781360\n"
    );
    assert!(o.stderr.is_empty());
}

#[test]
fn torus_rows() {
    let o = gkdim(&["series", "--ring", "torus:1", "--gens", "0,1,-1", "--steps", "2"]);
    assert_eq!(o.code, 0);
    let dims: Vec<&str> = o.stdout.lines().skip(1).map(|l| l.split(',').nth(2).unwrap()).collect();
    assert_eq!(dims, ["3", "5"]);
}

#[test]
fn unit_is_adjoined_with_warning() {
    let adjoined = gkdim(&["series", "--ring", "sl2", "--gens", "1", "--steps", "2"]);
    let explicit = gkdim(&["series", "--ring", "sl2", "--gens", "0,1", "--steps", "2"]);
    assert_eq!(adjoined.code, 0);
    assert!(adjoined.stderr.contains("unit adjoined"));
    assert_eq!(adjoined.stdout, explicit.stdout);
    let strict = gkdim(&["series", "--ring", "sl2", "--gens", "1", "--steps", "2", "--strict-unit"]);
    assert_eq!(strict.code, 2);
}

#[test]
fn csv_and_json_agree() {
    let base = ["series", "--ring", "sln:3", "--gens", "(0,0);(1,0);(1,1)", "--steps", "20"];
    let csv = gkdim(&[&base[..], &["--format", "csv"]].concat()).stdout;
    let json: Value = serde_json::from_str(&gkdim(&[&base[..], &["--format", "json"]].concat()).stdout).unwrap();
    assert_eq!(json["ring"], "sln:3");
    let records = json["records"].as_array().unwrap();
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), records.len());
    for (row, rec) in rows.iter().zip(records) {
        let from_json = format!(
            "{},{},{},{:.6}",
            rec["n"],
            rec["support_size"].as_str().unwrap(),
            rec["dim_vn"].as_str().unwrap(),
            rec["log2_dim_vn"].as_f64().unwrap()
        );
        assert_eq!(*row, from_json);
    }
}

#[test]
fn output_independent_of_threads() {
    let args = ["series", "--ring", "gl2", "--gens", "(0,0);(1,0);(0,1);(0,-1)", "--steps", "40", "--format", "json"];
    let one = gkdim(&[&args[..], &["--threads", "1"]].concat()).stdout;
    let four = gkdim(&[&args[..], &["--threads", "4"]].concat()).stdout;
    let env = gkdim_env(&args, Some("3")).stdout;
    assert_eq!(one, four);
    assert_eq!(one, env);
    assert_eq!(gkdim_env(&args, Some("zero")).code, 1);
    assert_eq!(gkdim(&[&args[..], &["--threads", "0"]].concat()).code, 1);
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let o = gkdim(&["series", "--ring", "sl2", "--gens", "0,1", "--steps", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().ends_with("3,4,30,4.906891\n"));
    let bad = gkdim(&["series", "--ring", "sl2", "--gens", "0,1", "--steps", "3", "--output", "/nonexistent/dir/x"]);
    assert_eq!(bad.code, 1);
}

#[test]
fn gkdim_estimates() {
    let o = gkdim(&["gkdim", "--ring", "sl2", "--gens", "0,1", "--steps", "1024"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["classification"], "polynomial");
    assert!((v["degree"].as_f64().unwrap() - 3.0).abs() < 0.05);
    assert_eq!(v["n_max"], 1024);
    assert_eq!(v["doubling_exponents"].as_array().unwrap().len(), 9);
    assert!(v.get("rate").is_none());

    let o = gkdim(&["gkdim", "--ring", "be:3", "--gens", "0,1", "--steps", "128"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["classification"], "exponential");
    assert!(v["rate"].as_f64().unwrap() > 2.7);

    let o = gkdim(&["gkdim", "--ring", "gl2", "--gens", "(0,0);(1,0);(0,1);(0,-1)", "--steps", "1024"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert!((v["degree"].as_f64().unwrap() - 4.0).abs() < 0.1);
}

#[test]
fn gkdim_inconclusive_and_bad_steps() {
    // 16 steps of SL(3) are too few for the extrapolated exponents to settle
    let o = gkdim(&["gkdim", "--ring", "sln:3", "--gens", "(0,0);(1,0);(1,1)", "--steps", "16"]);
    assert_eq!(o.code, 3, "{}", o.stdout);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["classification"], "inconclusive");
    assert_eq!(gkdim(&["gkdim", "--ring", "sl2", "--gens", "0,1", "--steps", "24"]).code, 1);
    assert_eq!(gkdim(&["gkdim", "--ring", "sl2", "--gens", "0,1", "--steps", "8"]).code, 1);
}

#[test]
fn validate_files() {
    let ok = gkdim(&["validate", &ring_file("z2.ring")]);
    assert_eq!(ok.code, 0);
    assert!(ok.stdout.contains("ok: ring Z2"));
    assert_eq!(gkdim(&["validate", &ring_file("s3.ring")]).code, 0);
    let bad = gkdim(&["validate", &ring_file("s3_corrupt.ring")]);
    assert_eq!(bad.code, 2);
    assert!(bad.stdout.contains("multiplicativity fails at (r,r)"), "{}", bad.stdout);
    let no_unit = gkdim(&["validate", &ring_file("no_unit.ring")]);
    assert_eq!(no_unit.code, 2);
    assert_eq!(gkdim(&["validate", "/nonexistent.ring"]).code, 1);
}

#[test]
fn witness_certificates() {
    let o = gkdim(&["witness", "--a", "be:4", "--b", "sl2", "--map", "1=1", "--depth", "4"]);
    assert_eq!(o.code, 0);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["ratio"], "2");
    assert_eq!(v["bound"], "dim S_n >= 2^n");
    assert_eq!((v["dim_x"].as_str(), v["dim_fx"].as_str()), (Some("4"), Some("2")));

    let o = gkdim(&["witness", "--a", "be:2", "--b", "sl2", "--map", "1=1"]);
    assert_eq!((o.code, o.stdout.as_str()), (0, "none\n"));

    let o = gkdim(&["witness", "--a", "be:3", "--b", "sl2", "--map", "1=1"]);
    let v: Value = serde_json::from_str(&o.stdout).unwrap();
    assert_eq!(v["ratio"], "3/2");
    assert_eq!(v["ratio_value"], 1.5);
}

#[test]
fn witness_map_errors() {
    let amb = gkdim(&["witness", "--a", "product:sl2,sl2", "--b", "product:sl2,sl2", "--map", "[1|1]=[1|1]"]);
    assert_eq!(amb.code, 2);
    assert!(amb.stderr.contains("ambiguous"));
    let incompatible = gkdim(&["witness", "--a", "sl2", "--b", "gl2", "--map", "1=(0,1)"]);
    assert_eq!(incompatible.code, 2);
}

#[test]
fn usage_and_ring_errors() {
    assert_eq!(gkdim(&[]).code, 1);
    assert_eq!(gkdim(&["series", "--ring", "sl2"]).code, 1);
    assert_eq!(gkdim(&["series", "--ring", "sl2", "--gens", "0", "--steps", "0"]).code, 1);
    assert_eq!(gkdim(&["series", "--ring", "e8", "--gens", "0", "--steps", "2"]).code, 2);
    assert_eq!(gkdim(&["series", "--ring", "sl2", "--gens", "-1", "--steps", "2"]).code, 2);
    let help = gkdim(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("Label syntax"));
}

#[test]
fn rings_listing() {
    let o = gkdim(&["rings"]);
    assert_eq!(o.code, 0);
    for id in ["torus:<r>", "sl2", "gl2", "sln:<n>", "be:<d>", "gef:<d>", "product:<id>,<id>", "dsl:<path>"] {
        assert!(o.stdout.contains(id), "{id}");
    }
}

#[test]
fn binary_reads_fusion_threads() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_gkdim"))
            .args(["series", "--ring", "sln:3", "--gens", "(0,0);(1,0);(1,1)", "--steps", "12"])
            .env("FUSION_THREADS", threads)
            .output()
            .unwrap()
    };
    let (a, b) = (run("1"), run("2"));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run("x").status.code(), Some(1));
}
