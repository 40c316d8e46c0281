//! Named verification suites and the data they run on.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use thiserror::Error;

use crate::data::{GIAMBELLI_FILE_NAME, GIAMBELLI_JSON, TABLE_FILE_NAME, TABLE_JSON};
use crate::intersection::verify_scenarios;
use crate::pipeline::verify_pipeline;
use crate::presentation::{cg_relations, cross_check_presentation, GiambelliDictionary};
use crate::report::VerificationReport;
use crate::schubert::{verify_table, MultiplicationTable};
use crate::spectral::verify_spectral;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Table,
    Presentation,
    Scenarios,
    Pipeline,
    Spectral,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [Suite::Table, Suite::Presentation, Suite::Scenarios, Suite::Pipeline, Suite::Spectral];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Table => "table",
            Suite::Presentation => "presentation",
            Suite::Scenarios => "scenarios",
            Suite::Pipeline => "pipeline",
            Suite::Spectral => "spectral",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// Failure to read or parse a data file. Distinct from a failed check.
#[derive(Debug, Error)]
pub enum DataError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
}

/// The table and Giambelli dictionary under test.
#[derive(Clone, Debug)]
pub struct DataSet {
    pub table: MultiplicationTable,
    pub dictionary: GiambelliDictionary,
}

impl DataSet {
    /// The copies compiled into the library.
    pub fn builtin() -> Self {
        DataSet {
            table: MultiplicationTable::shipped(),
            dictionary: GiambelliDictionary::from_json(GIAMBELLI_JSON).expect("shipped dictionary is well formed"),
        }
    }

    /// Reads both files. A relative path is looked up in `dir`; a missing
    /// path means the default file name in `dir`, or the built-in copy if
    /// `dir` is None and the default file does not exist there.
    pub fn load(dir: Option<&Path>, table: Option<&Path>, giambelli: Option<&Path>) -> Result<Self, DataError> {
        let table_text = read_or_builtin(dir, table, TABLE_FILE_NAME, TABLE_JSON)?;
        let dict_text = read_or_builtin(dir, giambelli, GIAMBELLI_FILE_NAME, GIAMBELLI_JSON)?;
        let table = MultiplicationTable::from_json(&table_text.1)
            .map_err(|e| DataError::Parse { path: table_text.0.clone(), message: e.to_string() })?;
        let dictionary = GiambelliDictionary::from_json(&dict_text.1)
            .map_err(|e| DataError::Parse { path: dict_text.0.clone(), message: e.to_string() })?;
        Ok(DataSet { table, dictionary })
    }
}

fn read_or_builtin(
    dir: Option<&Path>,
    explicit: Option<&Path>,
    default_name: &str,
    builtin: &str,
) -> Result<(PathBuf, String), DataError> {
    let resolve = |p: &Path| match dir {
        Some(d) if p.is_relative() => d.join(p),
        _ => p.to_path_buf(),
    };
    let path = match (explicit, dir) {
        (Some(p), _) => resolve(p),
        (None, Some(d)) => d.join(default_name),
        (None, None) => {
            let p = PathBuf::from(default_name);
            if !p.exists() {
                return Ok((PathBuf::from(format!("<built-in {default_name}>")), builtin.to_string()));
            }
            p
        }
    };
    std::fs::read_to_string(&path).map(|t| (path.clone(), t)).map_err(|source| DataError::Io { path, source })
}

/// Runs one suite, or all of them in a fixed order.
pub fn run_suite(suite: Suite, data: &DataSet) -> VerificationReport {
    match suite {
        Suite::Table => verify_table(&data.table),
        Suite::Presentation => cross_check_presentation(&data.table, &cg_relations(), &data.dictionary),
        Suite::Scenarios => verify_scenarios(),
        Suite::Pipeline => verify_pipeline(&data.table),
        Suite::Spectral => verify_spectral(&data.table, &data.dictionary),
        Suite::All => VerificationReport::combine("all", Suite::EACH.iter().map(|s| run_suite(*s, data)).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("tables".parse::<Suite>().is_err());
    }

    #[test]
    fn missing_file_is_a_data_error() {
        let e = DataSet::load(None, Some(Path::new("/nonexistent/missing.json")), None).unwrap_err();
        assert!(matches!(e, DataError::Io { .. }));
    }

    #[test]
    fn garbage_is_a_parse_error() {
        let dir = std::env::temp_dir().join(format!("cgqh-suite-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("cg_table.json"), "{not json").unwrap();
        std::fs::write(dir.join("cg_giambelli.json"), GIAMBELLI_JSON).unwrap();
        let e = DataSet::load(Some(&dir), None, None).unwrap_err();
        assert!(matches!(e, DataError::Parse { .. }), "{e}");
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
