use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

/// Record of one command run, written next to its output file.
#[derive(Clone, Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    /// Hash over the arguments and every input file.
    pub input_hash: String,
    pub output_hash: String,
    pub threads: Option<usize>,
    pub wall_time_ms: u128,
    pub output: PathBuf,
}

/// SHA-256 of `bytes` framed as a git blob.
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(format!("blob {}\0", bytes.len()).as_bytes());
    h.update(bytes);
    hex(&h.finalize())
}

/// Hash of the inputs that determine a run's output. The worker count is
/// left out on purpose.
pub fn input_hash(command: &str, arguments: &[String], files: &[Vec<u8>]) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    for a in arguments {
        h.update([0]);
        h.update(a.as_bytes());
    }
    for f in files {
        h.update(content_hash(f).as_bytes());
    }
    hex(&h.finalize())
}

fn hex(bytes: &[u8]) -> String {
    bytes
        .iter()
        .fold(String::with_capacity(2 * bytes.len()), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

/// `result.json` becomes `result.json.manifest.json`.
pub fn manifest_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}
