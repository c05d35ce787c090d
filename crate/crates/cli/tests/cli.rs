//! Command-line contract tests: exit codes, report determinism, file output,
//! and the fixture directory override.

use std::sync::Mutex;

use seqforge_cli::{run, CommandOutcome};

fn invoke(list: &[&str]) -> CommandOutcome {
    run(&list.iter().map(|s| s.to_string()).collect::<Vec<_>>())
}

fn report(outcome: &CommandOutcome) -> serde_json::Value {
    serde_json::from_str(&outcome.stdout).expect("stdout is a JSON report")
}

/// Guards tests that set SEQFORGE_FIXTURES, since the variable is process-wide.
static FIXTURE_ENV_LOCK: Mutex<()> = Mutex::new(());

#[test]
fn exit_code_contract() {
    // 2: invalid input.
    assert_eq!(invoke(&["generate", "legendre", "4"]).code, 2);
    assert_eq!(invoke(&["generate", "nonsense", "5"]).code, 2);
    assert_eq!(invoke(&["verify", "T7", "17"]).code, 2); // f even violates "f odd"
    assert_eq!(invoke(&["verify", "T11", "5"]).code, 2);
    assert_eq!(invoke(&["cyclotomy", "21"]).code, 2);
    assert_eq!(invoke(&["reproduce", "4"]).code, 2);
    assert_eq!(invoke(&["spectrum", "0,1,x"]).code, 2);
    assert_eq!(invoke(&["verify", "T5", "7"]).code, 2); // 9 is not prime
    // 3: unresolved convention (149 = 7^2 + 4*5^2 admits no y = -1 system).
    assert_eq!(invoke(&["verify", "T9", "149"]).code, 3);
    assert_eq!(invoke(&["cyclotomy", "149", "--convention", "y-minus-one"]).code, 3);
    // 0: success.
    assert_eq!(invoke(&["verify", "T4", "5"]).code, 0);
    assert_eq!(invoke(&["cyclotomy", "17"]).code, 0);
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let strip_timing = |text: &str| -> String {
        text.lines()
            .filter(|line| !line.trim_start().starts_with("\"timing_ms\""))
            .collect::<Vec<_>>()
            .join("\n")
    };
    for args in [
        vec!["verify", "T10", "17"],
        vec!["cyclotomy", "13"],
        vec!["spectrum", "0,1,2,3"],
        vec!["generate", "legendre", "7"],
    ] {
        let a = invoke(&args);
        let b = invoke(&args);
        assert_eq!(a.code, b.code);
        assert_eq!(strip_timing(&a.stdout), strip_timing(&b.stdout), "{args:?}");
    }
}

#[test]
fn generate_mseq_matches_second_example() {
    let outcome = invoke(&["generate", "mseq", "6", "--poly", "1000011"]);
    assert_eq!(outcome.code, 0);
    let fixture = report(&outcome)["outputs"]["fixture"].as_str().unwrap().to_string();
    let expected_a0 = seqforge_core::fixtures::example2_pair().first.to_string();
    assert_eq!(fixture, format!("n=63 family=mseq params=m=6;poly=1000011\n{expected_a0}\n"));
}

#[test]
fn generate_cyclotomic_sequence_matches_third_example() {
    let outcome = invoke(&["generate", "cyclotomic_s3", "17"]);
    assert_eq!(outcome.code, 0);
    let out = report(&outcome);
    assert_eq!(
        out["outputs"]["fixture"].as_str().unwrap(),
        "n=17 family=cyclotomic_s3 params=n=17;alpha=3\n0,1,0,0,1,0,1,1,0,0,1,1,0,1,0,0,1\n"
    );
}

#[test]
fn generate_writes_loadable_pair_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("twin.txt");
    let outcome = invoke(&["generate", "twin_prime", "3", "--output", path.to_str().unwrap()]);
    assert_eq!(outcome.code, 0);
    let pair = seqforge_core::families::load_pair(&path).unwrap();
    assert_eq!(pair.len(), 15);
    assert_eq!(pair.family_tag, seqforge_core::families::FamilyTag::TwinPrime);
    // Save again: byte-identical round trip.
    let second = dir.path().join("twin2.txt");
    seqforge_core::families::save_pair(&pair, &second).unwrap();
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        std::fs::read_to_string(&second).unwrap()
    );
}

#[test]
fn spectrum_of_binary_sequence_matches_printed_row() {
    let a0 = seqforge_core::fixtures::example1_pair().first.to_string();
    let outcome = invoke(&["spectrum", &a0]);
    assert_eq!(outcome.code, 0);
    let out = report(&outcome);
    assert_eq!(out["outputs"]["alphabet"], 2);
    let values: Vec<i64> = out["outputs"]["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["re"].as_i64().unwrap())
        .collect();
    assert_eq!(
        &values[..6],
        &[25, -3, 5, -3, -7, 5],
        "head of the printed autocorrelation row"
    );
}

#[test]
fn spectrum_optimality_verdicts() {
    // Quaternary all-zero of length 4: R(1) = 4, squared magnitude 16.
    let outcome = invoke(&["spectrum", "0,0,0,0", "--alphabet", "4"]);
    assert_eq!(outcome.code, 0);
    let out = report(&outcome);
    assert_eq!(out["outputs"]["r_max_squared"], 16);
    assert_eq!(out["outputs"]["optimal"], false);

    let u = seqforge_core::fixtures::example3_u().to_string();
    let outcome = invoke(&["spectrum", &u]);
    let out = report(&outcome);
    assert_eq!(out["outputs"]["alphabet"], 4);
    assert_eq!(out["outputs"]["r_max_squared"], 4);
    assert_eq!(out["outputs"]["optimal"], true);
}

#[test]
fn spectrum_csv_output_and_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("u.txt");
    std::fs::write(&input, seqforge_core::fixtures::EXAMPLE3_U).unwrap();
    let outcome = invoke(&["spectrum", input.to_str().unwrap(), "--csv"]);
    assert_eq!(outcome.code, 0);
    assert_eq!(outcome.stdout, seqforge_core::fixtures::EXAMPLE3_SPECTRUM);

    // Fixture-format files are accepted: the header line is skipped.
    let pair_file = dir.path().join("pair.txt");
    std::fs::write(&pair_file, seqforge_core::fixtures::EXAMPLE1_PAIR).unwrap();
    let outcome = invoke(&["spectrum", pair_file.to_str().unwrap()]);
    assert_eq!(outcome.code, 0);
    assert_eq!(report(&outcome)["outputs"]["length"], 25);

    let out_path = dir.path().join("spec.csv");
    let outcome = invoke(&["spectrum", "0,1,2,3", "--output", out_path.to_str().unwrap()]);
    assert_eq!(outcome.code, 0);
    let written = std::fs::read_to_string(&out_path).unwrap();
    assert!(written.starts_with("tau,re,im\n0,4,0\n"));
}

#[test]
fn fixture_directory_override() {
    let _guard = FIXTURE_ENV_LOCK.lock().unwrap();
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in seqforge_core::fixtures::FILE_NAMES {
        std::fs::write(dir.path().join(name), text).unwrap();
    }
    std::env::set_var(seqforge_cli::FIXTURES_ENV, dir.path());
    let outcome = invoke(&["reproduce", "1"]);
    assert_eq!(outcome.code, 0, "{}", outcome.stdout);

    // A tampered stored sequence must surface as a verification mismatch.
    let tampered = seqforge_core::fixtures::EXAMPLE1_U.replacen("0,1", "1,1", 1);
    std::fs::write(dir.path().join("example1_u.txt"), tampered).unwrap();
    let outcome = invoke(&["reproduce", "1"]);
    assert_eq!(outcome.code, 1, "{}", outcome.stdout);

    std::env::remove_var(seqforge_cli::FIXTURES_ENV);
    let outcome = invoke(&["reproduce", "1"]);
    assert_eq!(outcome.code, 0);
}

#[test]
fn verify_report_shape() {
    let outcome = invoke(&["verify", "T4", "5"]);
    assert_eq!(outcome.code, 0);
    let out = report(&outcome);
    let entries = out["outputs"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries[0]["tuple"], "(s,t,s,t)");
    assert_eq!(entries[0]["pattern"], "ideal");
    assert_eq!(entries[0]["r_max_squared"], 4);
    assert_eq!(out["outputs"]["all_pass"], true);

    let sweep = invoke(&["verify", "T10", "17", "--sweep-e"]);
    assert_eq!(sweep.code, 0);
    let out = report(&sweep);
    assert_eq!(out["outputs"]["entries"].as_array().unwrap().len(), 64);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(invoke(&["--help"]).code, 0);
    assert_eq!(invoke(&["--version"]).code, 0);
    assert_eq!(invoke(&[]).code, 2);
}
