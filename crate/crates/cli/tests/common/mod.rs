use std::path::PathBuf;
use std::process::{Command, Output};

pub fn naples(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_naples"))
        .args(args)
        .output()
        .expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

/// One group of the convert corpus: a `k` and the text of one object in
/// several representations.
#[derive(Debug)]
pub struct CorpusGroup {
    pub k: usize,
    pub forms: Vec<(String, String)>,
}

pub fn corpus() -> Vec<CorpusGroup> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/convert_corpus.txt");
    let text = std::fs::read_to_string(&path).expect("corpus present");
    text.split("\n\n")
        .filter(|g| !g.trim().is_empty())
        .map(|g| {
            let mut lines = g.lines();
            let k = lines
                .next()
                .unwrap()
                .strip_prefix("k=")
                .expect("group starts with k=")
                .parse()
                .unwrap();
            let forms = lines
                .map(|l| {
                    let (name, text) = l.split_once(' ').expect("name and text");
                    (name.to_string(), text.to_string())
                })
                .collect();
            CorpusGroup { k, forms }
        })
        .collect()
}

/// Runs `convert` for every ordered pair in every group and returns the
/// number of conversions and every mismatch.
pub fn check_corpus() -> (usize, Vec<String>) {
    let mut runs = 0;
    let mut bad = Vec::new();
    for g in corpus() {
        let k = g.k.to_string();
        for (from, text) in &g.forms {
            for (to, want) in &g.forms {
                runs += 1;
                let out = naples(&["convert", "--from", from, "--to", to, "--k", &k, text]);
                let got = stdout(&out);
                if !out.status.success() || got != format!("{want}\n") {
                    bad.push(format!("k={k} {from} -> {to}: got {got:?}, expected {want:?}"));
                }
            }
        }
    }
    (runs, bad)
}
