use std::path::{Path, PathBuf};

use crate::entry::{load_file, CatalogEntry, Tag};
use crate::report::{LoadFailure, Summary};
use crate::verify::verify_entry;
use crate::CatalogError;

/// A `key=value` restriction on which entries are verified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filter {
    Dim(usize),
    Name(String),
    Tag(String),
}

impl std::str::FromStr for Filter {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CatalogError::BadFilter(s.to_string());
        let (k, v) = s.split_once('=').ok_or_else(bad)?;
        match k.trim() {
            "dim" => v.trim().parse().map(Filter::Dim).map_err(|_| bad()),
            "name" => Ok(Filter::Name(v.trim().to_string())),
            "tag" => Ok(Filter::Tag(v.trim().to_string())),
            _ => Err(bad()),
        }
    }
}

impl Filter {
    pub fn matches(&self, e: &CatalogEntry) -> bool {
        match self {
            Filter::Dim(d) => e.dim() == *d,
            Filter::Name(n) => e.name == *n,
            Filter::Tag(t) => e.tags.iter().any(|tag: &Tag| tag.as_str() == t),
        }
    }
}

/// Catalog files in `dir`, sorted by file name.
pub fn catalog_files(dir: &Path) -> Result<Vec<PathBuf>, CatalogError> {
    let io = |e: std::io::Error| CatalogError::Io { path: dir.display().to_string(), message: e.to_string() };
    let mut files = Vec::new();
    for item in std::fs::read_dir(dir).map_err(io)? {
        let path = item.map_err(io)?.path();
        if path.extension().is_some_and(|x| x == "cat") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Verifies every entry of `dir` passing all `filters`; reports are sorted
/// by entry name.
pub fn run_catalog(dir: &Path, seed: u64, filters: &[Filter]) -> Result<Summary, CatalogError> {
    let mut entries = Vec::new();
    let mut load_failures = Vec::new();
    for path in catalog_files(dir)? {
        let file = path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default();
        match load_file(&path) {
            Ok(e) => entries.push(e),
            Err(e) => load_failures.push(LoadFailure { file, error: e.to_string() }),
        }
    }
    let mut names: Vec<&str> = entries.iter().map(|e| e.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(CatalogError::DuplicateName(w[0].to_string()));
    }
    entries.retain(|e| filters.iter().all(|f| f.matches(e)));
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(summarize(seed, entries.iter().map(|e| verify_entry(e, seed)).collect(), load_failures))
}

/// Tallies reports into a summary.
pub fn summarize(seed: u64, reports: Vec<crate::report::Report>, load_failures: Vec<LoadFailure>) -> Summary {
    let passed = reports.iter().filter(|r| r.passed).count();
    Summary { seed, entries: reports.len(), passed, failed: reports.len() - passed, load_failures, reports }
}
