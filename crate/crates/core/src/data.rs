//! Data files compiled into the library so tests and the CLI work without
//! a data directory.

pub const TABLE_JSON: &str = include_str!("../../../data/cg_table.json");
pub const GIAMBELLI_JSON: &str = include_str!("../../../data/cg_giambelli.json");

pub const TABLE_FILE_NAME: &str = "cg_table.json";
pub const GIAMBELLI_FILE_NAME: &str = "cg_giambelli.json";
