use std::path::Path;
use std::time::Duration;

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, Serialize)]
pub struct FileDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: usize,
}

impl FileDigest {
    fn of(path: &Path, data: &[u8]) -> FileDigest {
        FileDigest {
            path: path.display().to_string(),
            sha256: format!("{:x}", Sha256::digest(data)),
            bytes: data.len(),
        }
    }
}

/// Files read and written during a run, with digests of the exact bytes.
#[derive(Debug, Default)]
pub struct Files {
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
}

impl Files {
    pub fn read(&mut self, path: &Path) -> Result<String, String> {
        let data =
            std::fs::read(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        self.inputs.push(FileDigest::of(path, &data));
        String::from_utf8(data).map_err(|_| format!("{} is not UTF-8", path.display()))
    }

    pub fn write(&mut self, path: &Path, data: &str) -> Result<(), String> {
        std::fs::write(path, data).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        self.outputs.push(FileDigest::of(path, data.as_bytes()));
        Ok(())
    }
}

#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub subcommand: &'static str,
    pub argv: Vec<String>,
    pub inputs: Vec<FileDigest>,
    pub outputs: Vec<FileDigest>,
    pub wall_time_secs: f64,
    pub exit_code: u8,
    pub result: serde_json::Value,
}

impl RunManifest {
    pub fn new(
        subcommand: &'static str,
        argv: Vec<String>,
        files: Files,
        elapsed: Duration,
        exit_code: u8,
        result: serde_json::Value,
    ) -> RunManifest {
        RunManifest {
            tool: env!("CARGO_BIN_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            subcommand,
            argv,
            inputs: files.inputs,
            outputs: files.outputs,
            wall_time_secs: elapsed.as_secs_f64(),
            exit_code,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serializes")
    }
}
