//! Resumable sweep state.
//!
//! The file starts with a version line, then holds one record per line:
//!
//! ```text
//! <key>\t<k>\t<n>\t<last completed word>\t<running max ratio or ->\t<partial report as JSON>
//! ```
//!
//! A level `(k, n)` of a sweep `key` resumes right after its recorded
//! word. Files are rewritten atomically through a sibling temporary file.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use super::report::CheckReport;
use crate::error::{Error, Result};

const HEADER: &str = "circsq-checkpoint v1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct LevelRecord {
    pub last_word: String,
    pub report: CheckReport,
}

type LevelKey = (String, usize, usize);

#[derive(Debug, Default)]
pub(crate) struct Checkpoint {
    path: Option<PathBuf>,
    records: BTreeMap<LevelKey, LevelRecord>,
}

impl Checkpoint {
    /// Opens `path` if given. A missing file starts empty.
    pub fn open(path: Option<&Path>) -> Result<Self> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let mut cp = Self {
            path: Some(path.to_path_buf()),
            records: BTreeMap::new(),
        };
        let text = match fs::read_to_string(path) {
            Ok(text) => text,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(cp),
            Err(e) => return Err(cp.error(e.to_string())),
        };
        let mut lines = text.lines();
        if lines.next() != Some(HEADER) {
            return Err(cp.error(format!("missing header {HEADER:?}")));
        }
        for (no, line) in lines.enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let fields: Vec<&str> = line.splitn(6, '\t').collect();
            let [key, k, n, word, _ratio, json] = fields[..] else {
                return Err(cp.error(format!("line {}: expected 6 fields", no + 2)));
            };
            let parse = |s: &str| {
                s.parse::<usize>()
                    .map_err(|e| format!("line {}: {e}", no + 2))
            };
            let (k, n) = (
                parse(k).map_err(|m| cp.error(m))?,
                parse(n).map_err(|m| cp.error(m))?,
            );
            let report: CheckReport = serde_json::from_str(json)
                .map_err(|e| cp.error(format!("line {}: {e}", no + 2)))?;
            cp.records.insert(
                (key.to_string(), k, n),
                LevelRecord {
                    last_word: word.to_string(),
                    report,
                },
            );
        }
        Ok(cp)
    }

    /// An empty checkpoint that will overwrite `path` on the next save.
    pub fn fresh(path: Option<&Path>) -> Self {
        Self {
            path: path.map(Path::to_path_buf),
            records: BTreeMap::new(),
        }
    }

    fn error(&self, message: String) -> Error {
        Error::Checkpoint {
            path: self.path.clone().unwrap_or_default(),
            message,
        }
    }

    pub fn is_enabled(&self) -> bool {
        self.path.is_some()
    }

    pub fn get(&self, key: &str, k: usize, n: usize) -> Option<&LevelRecord> {
        self.records.get(&(key.to_string(), k, n))
    }

    pub fn set(&mut self, key: &str, k: usize, n: usize, record: LevelRecord) {
        self.records.insert((key.to_string(), k, n), record);
    }

    pub fn save(&self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let mut out = String::from(HEADER);
        out.push('\n');
        for ((key, k, n), rec) in &self.records {
            let ratio = rec
                .report
                .max_ratio
                .map_or("-".to_string(), |r| r.to_string());
            let json = serde_json::to_string(&rec.report).map_err(|e| self.error(e.to_string()))?;
            out.push_str(&format!(
                "{key}\t{k}\t{n}\t{}\t{ratio}\t{json}\n",
                rec.last_word
            ));
        }
        let tmp = path.with_extension("tmp");
        fs::write(&tmp, out)
            .and_then(|_| fs::rename(&tmp, path))
            .map_err(|e| self.error(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::report::BoundRatio;

    #[test]
    fn records_survive_a_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sweep.ckpt");
        let mut cp = Checkpoint::open(Some(&path)).unwrap();
        assert!(cp.get("main-bound", 2, 4).is_none());
        let mut report = CheckReport::new("main-bound");
        report.words_tested = 3;
        report.observe_ratio(BoundRatio::new(1, 2), "aabb");
        let rec = LevelRecord {
            last_word: "abbb".into(),
            report,
        };
        cp.set("main-bound", 2, 4, rec.clone());
        cp.save().unwrap();

        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("circsq-checkpoint v1\nmain-bound\t2\t4\tabbb\t1/2\t{"));
        let again = Checkpoint::open(Some(&path)).unwrap();
        assert_eq!(again.get("main-bound", 2, 4), Some(&rec));
    }

    #[test]
    fn corrupt_files_are_reported() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.ckpt");
        fs::write(&path, "something else\n").unwrap();
        assert!(matches!(
            Checkpoint::open(Some(&path)),
            Err(Error::Checkpoint { .. })
        ));
        fs::write(&path, format!("{HEADER}\nmain-bound\t2\n")).unwrap();
        assert!(matches!(
            Checkpoint::open(Some(&path)),
            Err(Error::Checkpoint { .. })
        ));
    }
}
