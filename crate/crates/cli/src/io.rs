use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::de::DeserializeOwned;

use impropriety::{EdgeColoring, Graph};

fn read_json<T: DeserializeOwned>(path: &Path, what: &str) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text)
        .with_context(|| format!("{} is not a valid {what} JSON file", path.display()))
}

pub fn read_graph(path: &Path) -> Result<Graph> {
    read_json(path, "graph")
}

/// Reads `{"colors": [...]}`; other keys are ignored, so the output of
/// `color` can be fed back in directly.
pub fn read_coloring(path: &Path) -> Result<EdgeColoring> {
    read_json(path, "coloring")
}

/// Writes `text` to `out`, or to stdout when no file is given.
pub fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Compact JSON on one line.
pub fn json(value: &impl serde::Serialize) -> Result<String> {
    let mut text = serde_json::to_string(value)?;
    text.push('\n');
    Ok(text)
}
