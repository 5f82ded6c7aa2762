//! The checked-in corpus under `corpus/` must match what `hgx_core::corpus`
//! generates. Run with `HGX_BLESS=1` to rewrite the files.

use hgx_core::corpus;
use std::path::PathBuf;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

#[test]
fn checked_in_corpus_is_current() {
    let bless = std::env::var_os("HGX_BLESS").is_some();
    let mut expected: Vec<(String, String)> = corpus::files().into_iter().map(|f| (f.path.to_string(), f.text)).collect();
    expected.extend(corpus::broken().into_iter().map(|b| (b.path.to_string(), b.text)));
    let mut stale = Vec::new();
    for (path, text) in &expected {
        let file = root().join(path);
        if bless {
            std::fs::create_dir_all(file.parent().unwrap()).unwrap();
            std::fs::write(&file, text).unwrap();
        } else if std::fs::read_to_string(&file).ok().as_ref() != Some(text) {
            stale.push(path.clone());
        }
    }
    assert!(stale.is_empty(), "stale corpus files (rerun with HGX_BLESS=1): {stale:?}");

    for dir in [root(), root().join("broken")] {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let path = entry.unwrap().path();
            if path.extension().is_some_and(|e| e == "json") {
                let rel = path.strip_prefix(root()).unwrap().to_string_lossy().replace('\\', "/");
                assert!(expected.iter().any(|(p, _)| *p == rel), "{rel} is not generated by the corpus module");
            }
        }
    }
}
