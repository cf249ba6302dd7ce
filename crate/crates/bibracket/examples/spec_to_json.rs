//! Drive the whole pipeline from a spec file, the same way the CLI
//! does, and print the machine-readable report.

use std::path::Path;

use bibracket::runner::{run_file, Command, RunOptions};

fn main() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("specs/s1-x-sn1-n3.spec");
    let opts = RunOptions {
        maxlen: 3,
        seed: 0,
        n: 2,
    };
    let report = run_file(&path, Command::All, &opts).expect("spec should load");
    println!("{}", report.to_json());
    assert!(report.pass);
}
