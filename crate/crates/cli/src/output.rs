use anyhow::Result;
use serde_json::json;
use sha2::{Digest, Sha256};
use std::path::{Path, PathBuf};

pub fn out_dir(cli: Option<&PathBuf>) -> PathBuf {
    if let Some(path) = cli {
        return path.clone();
    }
    std::env::var_os("ORDCALC_OUT_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("out"))
}

/// Collects written artifacts so the manifest can record their
/// digests. Re-running with the same configuration reproduces the
/// same bytes, hence the same digests.
pub struct RunWriter {
    dir: PathBuf,
    job: String,
    files: Vec<(String, String)>,
}

impl RunWriter {
    pub fn new(dir: &Path, job: &str) -> Result<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(RunWriter {
            dir: dir.to_path_buf(),
            job: job.to_string(),
            files: Vec::new(),
        })
    }

    pub fn write(&mut self, name: &str, bytes: &[u8]) -> Result<PathBuf> {
        let path = self.dir.join(name);
        std::fs::write(&path, bytes)?;
        let digest = hex_digest(bytes);
        self.files.push((name.to_string(), digest));
        Ok(path)
    }

    /// Write the JSON run manifest: job, configuration, seed, tool
    /// version, timestamp and artifact digests.
    pub fn finish(self, config: serde_json::Value) -> Result<PathBuf> {
        let timestamp = std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        let manifest = json!({
            "job": self.job,
            "config": config,
            "version": env!("CARGO_PKG_VERSION"),
            "timestamp_unix": timestamp,
            "outputs": self.files
                .iter()
                .map(|(name, digest)| json!({"file": name, "sha256": digest}))
                .collect::<Vec<_>>(),
        });
        let path = self.dir.join(format!("{}_manifest.json", self.job));
        std::fs::write(&path, serde_json::to_string_pretty(&manifest)?)?;
        Ok(path)
    }
}

pub fn hex_digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    let out = hasher.finalize();
    out.iter().map(|b| format!("{b:02x}")).collect()
}
